# built-in
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple

# external
import numpy as np

# app
from .._exceptions import ReplayError, WorldError
from ..explorer import ExplorationTrace
from ..memory import TravelLog
from ..navigator import ActionDistribution
from ..numcore import Tape, Value
from ..world import Task


@dataclass(eq=False)
class NavStep:
    t: int
    position: int
    candidates: Tuple[int, ...]
    digest: str
    action: int
    target: Optional[int]
    log_prob: float
    value: float
    teacher: Optional[int]
    probs: np.ndarray
    pre_argmax: int
    exploration: ExplorationTrace
    reward: float = 0.0
    ret: float = 0.0
    graph: Optional[Tuple[ActionDistribution, Value]] = field(default=None, repr=False)

    def to_dict(self) -> Dict[str, Any]:
        return dict(
            t=self.t, position=self.position, candidates=list(self.candidates), digest=self.digest,
            action=self.action, target=self.target, log_prob=self.log_prob, value=self.value,
            teacher=self.teacher, probs=self.probs.tolist(), pre_argmax=self.pre_argmax,
            reward=self.reward, ret=self.ret, exploration=self.exploration.to_dict(),
        )

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'NavStep':
        return cls(
            t=data['t'], position=data['position'], candidates=tuple(data['candidates']),
            digest=data['digest'], action=data['action'], target=data['target'],
            log_prob=data['log_prob'], value=data['value'], teacher=data['teacher'],
            probs=np.array(data['probs'], dtype=np.float64), pre_argmax=data['pre_argmax'],
            reward=data['reward'], ret=data['ret'],
            exploration=ExplorationTrace.from_dict(data['exploration']),
        )


@dataclass(eq=False)
class EpisodeTrace:
    """Everything one episode decided, saw and walked.
    """
    task: Task
    mode: str
    smax: int
    lazy: bool
    direct: bool
    policy: str
    max_steps: int
    explore_all: bool = False
    steps: List[NavStep] = field(default_factory=list)
    route: List[int] = field(default_factory=list)
    forced_stop: bool = False
    travel: TravelLog = field(default_factory=TravelLog)
    tape: Optional[Tape] = field(default=None, repr=False)

    @property
    def env_name(self) -> str:
        return self.task.env_name

    @property
    def start(self) -> int:
        return self.task.start

    @property
    def goal(self) -> int:
        return self.task.goal

    @property
    def final_position(self) -> int:
        return self.route[-1]

    @property
    def nav_actions(self) -> List[int]:
        return [step.action for step in self.steps]

    @property
    def exploration_visits(self) -> Tuple[int, ...]:
        return tuple(node for step in self.steps for node in step.exploration.visited)

    def release(self) -> None:
        """Drop the computation graph; the recorded numbers stay."""
        self.tape = None
        for step in self.steps:
            step.graph = None
            for action in step.exploration.actions():
                action.graph = None
            step.exploration.knowledge = {}

    def decisions(self) -> List[int]:
        """Executed actions in decision order, as a replay driver consumes them."""
        result = []
        for step in self.steps:
            result.extend(step.exploration.decisions())
            result.append(step.action)
        return result

    def to_dict(self) -> Dict[str, Any]:
        return dict(
            task=self.task.to_dict(), mode=self.mode, smax=self.smax, lazy=self.lazy,
            direct=self.direct, policy=self.policy, max_steps=self.max_steps, explore_all=self.explore_all,
            route=list(self.route), forced_stop=self.forced_stop, travel=self.travel.to_dict(),
            steps=[step.to_dict() for step in self.steps],
        )

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'EpisodeTrace':
        try:
            return cls(
                task=Task.from_dict(data['task']),
                mode=data['mode'], smax=data['smax'], lazy=data['lazy'], direct=data['direct'],
                policy=data['policy'], max_steps=data['max_steps'], explore_all=data.get('explore_all', False),
                steps=[NavStep.from_dict(item) for item in data['steps']],
                route=list(data['route']), forced_stop=data['forced_stop'],
                travel=TravelLog.from_dict(data['travel']),
            )
        except (KeyError, TypeError, WorldError) as exc:
            raise ReplayError('invalid episode record: {}'.format(exc)) from exc


def dump_traces(traces: Iterable[EpisodeTrace], path: Path) -> None:
    with path.open('w') as stream:
        for trace in traces:
            stream.write(json.dumps(trace.to_dict()) + '\n')


def load_traces(path: Path) -> List[EpisodeTrace]:
    traces = []
    with path.open('r') as stream:
        for lineno, line in enumerate(stream, start=1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
            except ValueError as exc:
                raise ReplayError('{}:{}: {}'.format(path, lineno, exc)) from exc
            traces.append(EpisodeTrace.from_dict(data))
    return traces
