# built-in
import json
from pathlib import Path
from typing import Any, Dict, Iterator, Sequence

# app
from ..formatters import dumps, write_rows
from ..training import EpisodeTrace, dump_traces
from ._metrics import EPISODE_COLUMNS, METRIC_COLUMNS, MetricsReport


def exploration_records(traces: Sequence[EpisodeTrace]) -> Iterator[Dict[str, Any]]:
    """One record per exploration decision, gate decisions included."""
    for idx, trace in enumerate(traces):
        for step in trace.steps:
            for action in step.exploration.actions():
                yield dict(
                    episode=idx, env=trace.env_name, t=action.t, k=action.k, s=action.s,
                    kind=action.kind, position=action.position, action=action.action,
                    log_prob=action.log_prob, value=action.value, executed=action.executed,
                )


def write_report(report: MetricsReport, traces: Sequence[EpisodeTrace], out_dir: Path) -> Dict[str, Path]:
    """metrics.csv, episodes.csv, stats.json, traces.jsonl and exploration.jsonl under `out_dir`.
    """
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = dict(
        metrics=out_dir / 'metrics.csv',
        episodes=out_dir / 'episodes.csv',
        stats=out_dir / 'stats.json',
        traces=out_dir / 'traces.jsonl',
        exploration=out_dir / 'exploration.jsonl',
    )
    write_rows([report.summary()], METRIC_COLUMNS, paths['metrics'])
    write_rows(report.episodes, EPISODE_COLUMNS, paths['episodes'])
    paths['stats'].write_text(dumps(report.exploration) + '\n')
    dump_traces(traces, paths['traces'])
    with paths['exploration'].open('w') as stream:
        for record in exploration_records(traces):
            stream.write(json.dumps(record) + '\n')
    return paths
