# built-in
from typing import Iterable, Optional

# external
import numpy as np

# app
from .._constants import STOP
from .._exceptions import ReplayError
from ._policy import select_action
from ._types import GREEDY, SAMPLE, ActionDistribution


class Driver:
    """Picks the executed action of every decision the agent makes.
    """
    name = 'base'

    def decide(self, dist: ActionDistribution, teacher: Optional[int]) -> int:
        raise NotImplementedError


class GreedyDriver(Driver):
    name = GREEDY

    def decide(self, dist: ActionDistribution, teacher: Optional[int]) -> int:
        return select_action(dist, GREEDY)


class SampleDriver(Driver):
    name = SAMPLE

    def __init__(self, rng: np.random.Generator):
        self.rng = rng

    def decide(self, dist: ActionDistribution, teacher: Optional[int]) -> int:
        return select_action(dist, SAMPLE, self.rng)


class TeacherDriver(Driver):
    """Teacher forcing: always executes the supervision target."""
    name = 'teacher'

    def decide(self, dist: ActionDistribution, teacher: Optional[int]) -> int:
        if teacher is None:
            raise ValueError('teacher forcing needs a goal')
        return teacher


class ReplayDriver(Driver):
    name = 'replay'

    def __init__(self, actions: Iterable[int]):
        self._actions = iter(actions)
        self.position = 0

    def decide(self, dist: ActionDistribution, teacher: Optional[int]) -> int:
        try:
            action = next(self._actions)
        except StopIteration:
            raise ReplayError('replay asked for decision {} past the recorded ones'.format(
                self.position,
            )) from None
        known = action == STOP or 0 <= action < dist.size - 1
        if not known or dist.probs[dist.slot(action)] <= 0.0:
            raise ReplayError('decision {}: recorded action {} has no probability'.format(
                self.position, action,
            ))
        self.position += 1
        return action

    def exhausted(self) -> bool:
        return next(self._actions, None) is None
