# built-in
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence

# external
import numpy as np

# app
from .._constants import SUCCESS_RADIUS
from ..training import EpisodeTrace
from ..world import Environment


OR_SCOPES = ('all', 'nav')

# fixed column order of every metrics table
METRIC_COLUMNS = ('sr', 'ne', 'tl', 'or', 'spl', 'nav_tl', 'explore_tl', 'success_tl', 'failure_tl')
EPISODE_COLUMNS = (
    'env', 'start', 'goal', 'final', 'success', 'oracle', 'ne', 'tl', 'nav_tl', 'explore_tl',
    'shortest', 'spl', 'steps',
)


@dataclass
class MetricsReport:
    sr: float
    ne: float
    tl: float
    oracle_sr: float
    spl: float
    nav_tl: float
    explore_tl: float
    success_tl: Optional[float]
    failure_tl: Optional[float]
    episodes: List[Dict[str, Any]] = field(default_factory=list)
    exploration: Dict[str, Any] = field(default_factory=dict)

    def summary(self) -> Dict[str, Optional[float]]:
        return dict(
            sr=self.sr, ne=self.ne, tl=self.tl, spl=self.spl,
            nav_tl=self.nav_tl, explore_tl=self.explore_tl,
            success_tl=self.success_tl, failure_tl=self.failure_tl,
            **{'or': self.oracle_sr},
        )

    def to_dict(self) -> Dict[str, Any]:
        summary = self.summary()
        return dict(
            metrics={column: summary[column] for column in METRIC_COLUMNS},
            exploration=self.exploration,
            episodes=self.episodes,
        )


def _mean(values: Sequence[float]) -> Optional[float]:
    if not values:
        return None
    return float(np.mean(values))


def episode_metrics(trace: EpisodeTrace, env: Environment, radius: float = SUCCESS_RADIUS,
                    or_scope: str = 'all') -> Dict[str, Any]:
    goal = trace.goal
    final = trace.final_position
    ne = env.distance(final, goal)
    success = ne < radius
    visited = list(trace.route)
    if or_scope == 'all':
        visited.extend(trace.exploration_visits)
    oracle = any(env.distance(node, goal) < radius for node in visited)
    shortest = env.distance(trace.start, goal)
    tl = trace.travel.total_tl
    spl = float(success) * shortest / max(tl, shortest) if shortest > 0 else float(success)
    return dict(
        env=trace.env_name, start=trace.start, goal=goal, final=final,
        success=success, oracle=oracle, ne=ne, tl=tl,
        nav_tl=trace.travel.nav_tl, explore_tl=trace.travel.explore_tl,
        shortest=shortest, spl=spl, steps=len(trace.steps),
    )


def compute_metrics(
    traces: Sequence[EpisodeTrace], envs: Mapping[str, Environment], radius: float = SUCCESS_RADIUS,
    or_scope: str = 'all',
) -> MetricsReport:
    """SR, NE, TL, OR and SPL over a batch of episodes, plus exploration statistics.

    Travel lengths come from the episodes' travel logs, so they include
    exploration and honour the lazy strategy the episodes ran with.
    """
    if or_scope not in OR_SCOPES:
        raise ValueError('or_scope must be one of {}'.format(', '.join(OR_SCOPES)))
    if not traces:
        raise ValueError('cannot compute metrics of zero episodes')
    rows = [episode_metrics(trace, envs[trace.env_name], radius, or_scope) for trace in traces]
    return MetricsReport(
        sr=float(np.mean([row['success'] for row in rows])),
        ne=float(np.mean([row['ne'] for row in rows])),
        tl=float(np.mean([row['tl'] for row in rows])),
        oracle_sr=float(np.mean([row['oracle'] for row in rows])),
        spl=float(np.mean([row['spl'] for row in rows])),
        nav_tl=float(np.mean([row['nav_tl'] for row in rows])),
        explore_tl=float(np.mean([row['explore_tl'] for row in rows])),
        success_tl=_mean([row['tl'] for row in rows if row['success']]),
        failure_tl=_mean([row['tl'] for row in rows if not row['success']]),
        episodes=rows,
        exploration=exploration_stats(traces),
    )


def exploration_stats(traces: Sequence[EpisodeTrace]) -> Dict[str, Any]:
    """How often the agent explored and what exploring did to its decisions.

    Only navigation steps with at least one exploration round count toward
    the decision rates. Everything but the rate is null without exploration.
    """
    steps = [step for trace in traces for step in trace.steps]
    explored = [step for step in steps if step.exploration.explored]
    stats: Dict[str, Any] = dict(
        rate=len(explored) / len(steps) if steps else 0.0,
        avg_directions=None,
        avg_steps=None,
        nav_tl=None,
        explore_tl=None,
        change_rate=None,
        corrected_rate=None,
        miscorrected_rate=None,
        step_histogram=None,
    )
    if not explored:
        return stats

    rounds = [round_ for step in explored for round_ in step.exploration.rounds]
    changed = [step for step in explored if step.action != step.pre_argmax]
    wrong = [step for step in explored if step.pre_argmax != step.teacher]
    right = [step for step in explored if step.pre_argmax == step.teacher]
    histogram = Counter(round_.steps for round_ in rounds)
    stats.update(
        avg_directions=len(rounds) / len(explored),
        avg_steps=float(np.mean([round_.steps for round_ in rounds])),
        nav_tl=float(np.mean([trace.travel.nav_tl for trace in traces])),
        explore_tl=float(np.mean([trace.travel.explore_tl for trace in traces])),
        change_rate=len(changed) / len(explored),
        corrected_rate=_mean([float(step.action == step.teacher) for step in wrong]),
        miscorrected_rate=_mean([float(step.action != step.pre_argmax) for step in right]),
        step_histogram={str(key): histogram[key] for key in sorted(histogram)},
    )
    return stats
