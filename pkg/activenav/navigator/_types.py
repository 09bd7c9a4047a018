# built-in
from dataclasses import dataclass
from typing import Tuple

# external
import numpy as np

# app
from .._constants import STOP
from ..numcore import Value, index


GREEDY = 'greedy'
SAMPLE = 'sample'


@dataclass(frozen=True, eq=False)
class InstructionEncoding:
    states: Tuple[Value, ...]

    def __len__(self) -> int:
        return len(self.states)


@dataclass(frozen=True, eq=False)
class NavigatorState:
    h: Value
    c: Value
    t: int
    prev_action_embedding: np.ndarray


@dataclass(frozen=True, eq=False)
class ActionDistribution:
    """Distribution over K candidates plus STOP in the last slot.

    `support` lists the slots that may be chosen; `log_probs` covers only those.
    """
    probs: np.ndarray
    logits: np.ndarray
    candidates: Tuple[int, ...]
    support: Tuple[int, ...]
    log_probs: Value

    @property
    def size(self) -> int:
        return self.probs.shape[0]

    def slot(self, action: int) -> int:
        return self.size - 1 if action == STOP else action

    def action(self, slot: int) -> int:
        return STOP if slot == self.size - 1 else slot

    def log_prob(self, action: int) -> Value:
        return index(self.log_probs, self.support.index(self.slot(action)))

    def argmax(self) -> int:
        return self.action(int(np.argmax(self.probs)))
