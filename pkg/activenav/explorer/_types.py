# built-in
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet

# external
import numpy as np

# app
from ..numcore import Value


class Mode(str, Enum):
    BASIC = 'basic'
    NAIVE = 'naive'
    DECISION = 'decision'
    FULL = 'full'

    @property
    def explores(self) -> bool:
        return self is not Mode.BASIC

    @property
    def single_step(self) -> bool:
        """Modes without a multi-step exploration policy."""
        return self in (Mode.NAIVE, Mode.DECISION)


@dataclass(frozen=True, eq=False)
class ExplorationState:
    h_ep: Value
    c_ep: Value
    h_kw: Value
    c_kw: Value
    s: int
    direction: int
    mask: FrozenSet[int]
    position: int


@dataclass(frozen=True, eq=False)
class DirectionKnowledge:
    original: np.ndarray
    updated: Value
    gathered: Value
