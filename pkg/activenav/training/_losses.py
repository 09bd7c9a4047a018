# built-in
from typing import Iterable, List, Tuple

# app
from .._exceptions import TapeError
from ..explorer import ExplorationAction
from ..navigator import ActionDistribution
from ..numcore import Tape, Value, add_n, mul, neg, square
from ._trace import EpisodeTrace


def _tape(trace: EpisodeTrace) -> Tape:
    if trace.tape is None or trace.tape.consumed:
        raise TapeError('trace has no live computation graph')
    return trace.tape


def _graph(item) -> Tuple[ActionDistribution, Value]:
    if item.graph is None:
        raise TapeError('decision at t={} has no computation graph'.format(item.t))
    return item.graph


def _total(tape: Tape, terms: List[Value]) -> Value:
    if not terms:
        return tape.constant(0.0)
    return add_n(terms)


def _exploration_actions(trace: EpisodeTrace) -> Iterable[ExplorationAction]:
    for step in trace.steps:
        yield from step.exploration.actions()


def il_nav_loss(trace: EpisodeTrace) -> Value:
    """Negative log-likelihood of the teacher's navigation actions."""
    tape = _tape(trace)
    terms = []
    for step in trace.steps:
        if step.teacher is None:
            raise ValueError('step {} has no teacher action'.format(step.t))
        dist, _ = _graph(step)
        terms.append(neg(dist.log_prob(step.teacher)))
    return _total(tape, terms)


def il_explore_loss(trace: EpisodeTrace) -> Value:
    """Negative log-likelihood of the teacher's actions at every supervised exploration decision,
    lookaheads at the step limit included.
    """
    tape = _tape(trace)
    terms = []
    for action in _exploration_actions(trace):
        if action.teacher is None:
            continue
        dist, _ = _graph(action)
        terms.append(neg(dist.log_prob(action.teacher)))
    return _total(tape, terms)


def _actor_critic(tape: Tape, items) -> Value:
    terms = []
    for item, ret in items:
        dist, value = _graph(item)
        advantage = tape.constant(ret) - tape.detach(value)
        terms.append(neg(mul(advantage, dist.log_prob(item.action))))
        terms.append(square(tape.constant(ret) - value))
    return _total(tape, terms)


def rl_nav_loss(trace: EpisodeTrace) -> Value:
    """Advantage actor-critic loss; the advantage is a constant in the policy term."""
    tape = _tape(trace)
    return _actor_critic(tape, ((step, step.ret) for step in trace.steps))


def rl_explore_loss(trace: EpisodeTrace) -> Value:
    tape = _tape(trace)
    return _actor_critic(tape, (
        (action, action.ret) for action in _exploration_actions(trace) if action.executed
    ))
