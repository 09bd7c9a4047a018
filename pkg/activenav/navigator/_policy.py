# built-in
from typing import Optional, Sequence, Union

# external
import numpy as np

# app
from .._exceptions import ShapeError
from ..numcore import (
    Tape, Value, attend, concat, linear, log_softmax, lstm_step, scatter, softmax, stack, take,
    value_head,
)
from ..world import InstructionTokens, PanoramicObservation
from ._types import GREEDY, SAMPLE, ActionDistribution, InstructionEncoding, NavigatorState


Candidate = Union[Value, np.ndarray]


def encode_instruction(tokens: Union[InstructionTokens, Sequence[np.ndarray]], tape: Tape) -> InstructionEncoding:
    tokens = list(tokens)
    if not tokens:
        raise ShapeError('cannot encode an empty instruction')
    hidden = tape.params.hidden_size
    state = (tape.zeros(hidden), tape.zeros(hidden))
    states = []
    for token in tokens:
        state = lstm_step(tape.lstm('instr'), tape.constant(token), state)
        states.append(state[0])
    return InstructionEncoding(states=tuple(states))


def initial_state(encoding: InstructionEncoding, tape: Tape) -> NavigatorState:
    """Navigation starts from the last instruction state with an empty memory cell."""
    return NavigatorState(
        h=encoding.states[-1],
        c=tape.zeros(tape.params.hidden_size),
        t=0,
        prev_action_embedding=np.zeros(tape.params.view_size),
    )


def nav_step(
    state: NavigatorState, observation: Optional[PanoramicObservation], prev_action_emb: np.ndarray,
    X: InstructionEncoding, tape: Tape,
) -> NavigatorState:
    """Advance the navigation LSTM on [instruction context, previous panorama, previous action].

    `observation` is the previous panorama; there is none before the first step.
    """
    context, _ = attend(X.states, state.h, tape.param('W_att_instr'))
    if observation is None:
        panorama = tape.zeros(prev_action_emb.shape[0])
    else:
        views = [tape.constant(view.embedding) for view in observation.candidates]
        panorama, _ = attend(views, state.h, tape.param('W_att_pano'))
    x = concat(context, panorama, tape.constant(prev_action_emb))
    h, c = lstm_step(tape.lstm('nav'), x, (state.h, state.c))
    return NavigatorState(h=h, c=c, t=state.t + 1, prev_action_embedding=prev_action_emb)


def as_values(candidates: Sequence[Candidate], tape: Tape):
    return [item if isinstance(item, Value) else tape.constant(item) for item in candidates]


def distribution(logits: Value, candidates: Sequence[int], support: Sequence[int] = None) -> ActionDistribution:
    """Softmax over `support` slots; every other slot gets probability exactly 0."""
    size = logits.shape[0]
    if support is None:
        support = range(size)
    support = tuple(sorted(support))
    scores = logits if len(support) == size else take(logits, support)
    probs = scatter(softmax(scores), support, size)
    return ActionDistribution(
        probs=probs.data,
        logits=logits.data,
        candidates=tuple(candidates),
        support=support,
        log_probs=log_softmax(scores),
    )


def score(candidates: Sequence[Candidate], query: Value, tape: Tape) -> Value:
    """Candidate logits f_k . query followed by the zero STOP embedding's logit."""
    if not candidates:
        raise ShapeError('at least one candidate is required')
    logits = linear(stack(as_values(candidates, tape)), query)
    return concat(logits, tape.zeros(1))


def nav_policy(
    state: NavigatorState, candidates: Sequence[Candidate], tape: Tape,
    neighbor_ids: Sequence[int] = (),
) -> ActionDistribution:
    query = linear(tape.param('W_nv'), state.h)
    return distribution(score(candidates, query, tape), neighbor_ids or range(len(candidates)))


def nav_value(state: NavigatorState, tape: Tape) -> Value:
    return value_head((tape.param('critic_nv.w'), tape.param('critic_nv.b')), state.h)


def select_action(dist: ActionDistribution, mode: str, rng: np.random.Generator = None) -> int:
    """Greedy picks the lowest-index maximum; sample draws from the distribution."""
    if mode == GREEDY:
        return dist.action(int(np.argmax(dist.probs)))
    if mode == SAMPLE:
        if rng is None:
            raise ValueError('sampling needs a random generator')
        return dist.action(int(rng.choice(dist.size, p=dist.probs)))
    raise ValueError('unknown selection mode: {}'.format(mode))
