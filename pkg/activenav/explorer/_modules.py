# built-in
from dataclasses import replace
from typing import AbstractSet, Sequence, Tuple

# external
import numpy as np

# app
from .._exceptions import ShapeError
from ..navigator import ActionDistribution, as_values, distribution, score
from ..numcore import LSTMState, Tape, Value, add, attend, concat, linear, lstm_step, value_head
from ..world import PanoramicObservation
from ._types import ExplorationState


def _views(observation: PanoramicObservation, tape: Tape):
    return [tape.constant(view.embedding) for view in observation.candidates]


def gather(Y: PanoramicObservation, h_ep: Value, tape: Tape) -> Value:
    """Assemble what is visible at the explored viewpoint, attended by the exploration state."""
    context, _ = attend(_views(Y, tape), h_ep, tape.param('W_att'))
    return context


def store(y_hat: Value, kw_state: LSTMState, tape: Tape) -> LSTMState:
    return lstm_step(tape.lstm('kw'), y_hat, kw_state)


def explore_state_step(
    prev: ExplorationState, Y_prev: PanoramicObservation, a_ep_emb: np.ndarray,
    h_nv: Value, tape: Tape,
) -> ExplorationState:
    """LSTM^ep over [h_nv, attended previous panorama, previous exploration action]."""
    context = gather(Y_prev, prev.h_ep, tape)
    x = concat(h_nv, context, tape.constant(a_ep_emb))
    h_ep, c_ep = lstm_step(tape.lstm('ep'), x, (prev.h_ep, prev.c_ep))
    return replace(prev, h_ep=h_ep, c_ep=c_ep, s=prev.s + 1)


def explore_policy(state: ExplorationState, Y: PanoramicObservation, tape: Tape) -> ActionDistribution:
    query = linear(tape.param('W_ep_step'), concat(state.h_kw, state.h_ep))
    return distribution(score(_views(Y, tape), query, tape), Y.neighbor_ids)


def explore_decision(
    h_nv: Value, candidates: Sequence[Value], mask: AbstractSet[int], tape: Tape,
    neighbor_ids: Sequence[int] = (),
) -> ActionDistribution:
    """Where to explore next: unexplored directions plus STOP.

    Explored directions get probability exactly 0. When every direction is
    explored only STOP remains.
    """
    candidates = as_values(candidates, tape)
    size = len(candidates)
    if any(not 0 <= k < size for k in mask):
        raise ShapeError('exploration mask refers to a missing direction')
    v_hat, _ = attend(candidates, h_nv, tape.param('W_att'))
    query = linear(tape.param('W_ep_dir'), concat(v_hat, h_nv))
    support = [k for k in range(size) if k not in mask] + [size]
    return distribution(score(candidates, query, tape), neighbor_ids or range(size), support)


def update_knowledge(v_k: Value, kw_final: Value, tape: Tape) -> Value:
    return add(v_k, linear(tape.param('W_o'), kw_final))


def direct_knowledge(v_k: Value, Y: PanoramicObservation, h_nv: Value, tape: Tape) -> Tuple[Value, Value]:
    """One-step update from the attended panorama, without the memory LSTMs."""
    gathered, _ = attend(_views(Y, tape), h_nv, tape.param('W_att'))
    return add(v_k, linear(tape.param('W_o_direct'), gathered)), gathered


def explore_value(h: Value, tape: Tape) -> Value:
    return value_head((tape.param('critic_ep.w'), tape.param('critic_ep.b')), h)
