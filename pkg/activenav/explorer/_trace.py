# built-in
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Mapping, Optional, Tuple

# app
from .._exceptions import ReplayError
from ..navigator import ActionDistribution
from ..numcore import Value
from ._types import DirectionKnowledge


GATE = 'gate'
STEP = 'step'

Graph = Tuple[ActionDistribution, Value]


@dataclass(eq=False)
class ExplorationAction:
    """One exploration decision.

    `s` is 0 for the where-to-explore gate. A step decision at `s` chooses
    move `s + 1` of its round. Non-executed decisions are teacher lookaheads
    taken at the step limit; they only carry imitation supervision.
    """
    kind: str
    t: int
    k: int
    s: int
    position: int
    action: int
    target: Optional[int]
    teacher: Optional[int]
    log_prob: float
    value: float
    reward: float = 0.0
    ret: float = 0.0
    executed: bool = True
    graph: Optional[Graph] = field(default=None, repr=False)

    def to_dict(self) -> Dict[str, Any]:
        return dict(
            kind=self.kind, t=self.t, k=self.k, s=self.s, position=self.position,
            action=self.action, target=self.target, teacher=self.teacher,
            log_prob=self.log_prob, value=self.value, reward=self.reward, ret=self.ret,
            executed=self.executed,
        )

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'ExplorationAction':
        return cls(**{key: data[key] for key in (
            'kind', 't', 'k', 's', 'position', 'action', 'target', 'teacher',
            'log_prob', 'value', 'reward', 'ret', 'executed',
        )})


@dataclass(eq=False)
class ExplorationRound:
    direction: int
    steps: int
    visited: Tuple[int, ...]
    before: int
    after: int
    base_reward: float = 0.0
    actions: List[ExplorationAction] = field(default_factory=list)

    @property
    def moves(self) -> List[ExplorationAction]:
        return [action for action in self.actions if action.executed]

    def to_dict(self) -> Dict[str, Any]:
        return dict(
            direction=self.direction, steps=self.steps, visited=list(self.visited),
            before=self.before, after=self.after, base_reward=self.base_reward,
            actions=[action.to_dict() for action in self.actions],
        )

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'ExplorationRound':
        return cls(
            direction=data['direction'], steps=data['steps'], visited=tuple(data['visited']),
            before=data['before'], after=data['after'], base_reward=data['base_reward'],
            actions=[ExplorationAction.from_dict(item) for item in data['actions']],
        )


@dataclass(eq=False)
class ExplorationTrace:
    pre_argmax: int
    post_argmax: int
    rounds: List[ExplorationRound] = field(default_factory=list)
    stop: Optional[ExplorationAction] = None
    knowledge: Dict[int, DirectionKnowledge] = field(default_factory=dict, repr=False)

    @property
    def explored(self) -> bool:
        return bool(self.rounds)

    @property
    def directions(self) -> Tuple[int, ...]:
        return tuple(round_.direction for round_ in self.rounds)

    @property
    def steps(self) -> int:
        return sum(round_.steps for round_ in self.rounds)

    @property
    def visited(self) -> Tuple[int, ...]:
        return tuple(node for round_ in self.rounds for node in round_.visited)

    def actions(self) -> Iterator[ExplorationAction]:
        """All decisions in the order they were made."""
        for round_ in self.rounds:
            yield from round_.actions
        if self.stop is not None:
            yield self.stop

    def decisions(self) -> List[int]:
        return [action.action for action in self.actions() if action.executed]

    def to_dict(self) -> Dict[str, Any]:
        return dict(
            pre_argmax=self.pre_argmax,
            post_argmax=self.post_argmax,
            rounds=[round_.to_dict() for round_ in self.rounds],
            stop=self.stop.to_dict() if self.stop is not None else None,
        )

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'ExplorationTrace':
        try:
            return cls(
                pre_argmax=data['pre_argmax'],
                post_argmax=data['post_argmax'],
                rounds=[ExplorationRound.from_dict(item) for item in data['rounds']],
                stop=ExplorationAction.from_dict(data['stop']) if data.get('stop') else None,
            )
        except (KeyError, TypeError) as exc:
            raise ReplayError('invalid exploration record: {}'.format(exc)) from exc
