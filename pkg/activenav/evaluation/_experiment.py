# built-in
from dataclasses import dataclass, replace
from pathlib import Path
from types import MappingProxyType
from typing import Any, Dict, List, Mapping, Optional, Tuple

# external
import numpy as np

# app
from .._constants import DEFAULTS, LOG as ROOT_LOG, SUCCESS_RADIUS
from .._exceptions import ConfigError
from .._logic import section_from_dict
from ..formatters import dumps
from ..numcore import ParameterSet
from ..training import EpisodeTrace, TrainConfig, greedy_rollouts, train
from ..world import SPLITS, DataConfig, Split, WorldConfig, build_dataset
from ._io import write_rows
from ._metrics import METRIC_COLUMNS, OR_SCOPES, MetricsReport, compute_metrics


LOG = ROOT_LOG.getChild(__name__)


@dataclass(frozen=True)
class EvalConfig:
    radius: float = SUCCESS_RADIUS
    or_scope: str = 'all'
    split: str = 'test'

    def __post_init__(self) -> None:
        if self.radius <= 0:
            raise ConfigError('eval.radius must be positive')
        if self.or_scope not in OR_SCOPES:
            raise ConfigError('eval.or_scope must be one of {}'.format(', '.join(OR_SCOPES)))
        if self.split not in SPLITS:
            raise ConfigError('eval.split must be one of {}'.format(', '.join(SPLITS)))

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'EvalConfig':
        return section_from_dict(cls, data, section='eval')


@dataclass(frozen=True)
class ExperimentConfig:
    seeds: Tuple[int, ...] = (0, 1, 2, 3, 4)
    variants: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.seeds:
            raise ConfigError('experiment.seeds must not be empty')
        unknown = sorted(set(self.variants) - set(VARIANTS))
        if unknown:
            raise ConfigError('unknown experiment variants: {}'.format(', '.join(unknown)))

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'ExperimentConfig':
        return section_from_dict(cls, data, section='experiment')

    @property
    def variant_names(self) -> Tuple[str, ...]:
        return self.variants or tuple(VARIANTS)


@dataclass(frozen=True)
class Variant:
    """A row of the ablation table: training overrides, or a re-evaluation of another row."""
    train: Mapping[str, Any]
    eager_of: Optional[str] = None


VARIANTS = MappingProxyType(dict([
    ('basic', Variant(train=dict(mode='basic'))),
    ('naive', Variant(train=dict(mode='naive'))),
    ('decision', Variant(train=dict(mode='decision'))),
    ('full', Variant(train=dict(mode='full'))),
    ('full-no-il-ep', Variant(train=dict(mode='full', use_il_ep=False))),
    ('full-no-rl-ep', Variant(train=dict(mode='full', use_rl_ep=False))),
    ('full-eager', Variant(train=dict(mode='full'), eager_of='full')),
    ('full-all-directions', Variant(train=dict(mode='full', explore_all=True, smax_schedule=(1, 2, 3, 4)))),
    ('full-smax1', Variant(train=dict(mode='full', smax_schedule=(1,)))),
    ('full-smax3', Variant(train=dict(mode='full', smax_schedule=(1, 2, 3)))),
    ('full-smax4', Variant(train=dict(mode='full', smax_schedule=(1, 2, 3, 4)))),
    ('full-smax6', Variant(train=dict(mode='full', smax_schedule=(1, 2, 3, 4, 5, 6)))),
]))

RESULT_COLUMNS = ('variant', 'seed') + METRIC_COLUMNS


def evaluate(
    params: ParameterSet, split: Split, config: TrainConfig, eval_config: Optional[EvalConfig] = None,
    *, smax: Optional[int] = None, lazy: Optional[bool] = None,
) -> Tuple[List[EpisodeTrace], MetricsReport]:
    """Greedy single-run evaluation of every task of a split."""
    if eval_config is None:
        eval_config = EvalConfig()
    if smax is None:
        smax = config.stages()[-1]
    traces = greedy_rollouts(params, split, config, smax, lazy=lazy)
    report = compute_metrics(traces, split.envs, radius=eval_config.radius, or_scope=eval_config.or_scope)
    return traces, report


def _section(raw: Mapping[str, Any], name: str) -> Dict[str, Any]:
    return dict(DEFAULTS[name], **raw.get(name, {}))


def run_experiment(raw: Mapping[str, Any], out_dir: Optional[Path] = None) -> List[Dict[str, Any]]:
    """Train and evaluate every variant on every seed; write results.csv and results.json.

    All variants share the worlds and the seeds. The eager row re-evaluates
    the trained model of its source row with every move walked.
    """
    world = WorldConfig.from_dict(_section(raw, 'world'))
    data = DataConfig.from_dict(_section(raw, 'data'))
    base = TrainConfig.from_dict(_section(raw, 'train'))
    eval_config = EvalConfig.from_dict(_section(raw, 'eval'))
    experiment = ExperimentConfig.from_dict(_section(raw, 'experiment'))

    dataset = build_dataset(world, data)
    split = dataset[eval_config.split]
    rows = []
    for seed in experiment.seeds:
        trained: Dict[str, Tuple[ParameterSet, TrainConfig]] = {}
        for name in experiment.variant_names:
            variant = VARIANTS[name]
            if variant.eager_of is not None:
                source = variant.eager_of
                if source not in trained:
                    trained[source] = _train_variant(VARIANTS[source], base, seed, dataset, out_dir, source)
                params, config = trained[source]
                _, report = evaluate(params, split, config, eval_config, lazy=False)
            else:
                if name not in trained:
                    trained[name] = _train_variant(variant, base, seed, dataset, out_dir, name)
                params, config = trained[name]
                _, report = evaluate(params, split, config, eval_config)
            row = dict(variant=name, seed=seed)
            row.update(report.summary())
            rows.append(row)
            LOG.info('%s seed %d: SR %.3f SPL %.3f TL %.3f', name, seed, report.sr, report.spl, report.tl)

    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
        write_rows(rows, RESULT_COLUMNS, out_dir / 'results.csv')
        (out_dir / 'results.json').write_text(dumps(dict(rows=rows, means=summarize(rows))) + '\n')
    return rows


def _train_variant(
    variant: Variant, base: TrainConfig, seed: int, dataset: Mapping[str, Split],
    out_dir: Optional[Path], name: str,
) -> Tuple[ParameterSet, TrainConfig]:
    config = replace(base, seed=seed, **variant.train)
    stage_dir = None
    if out_dir is not None:
        stage_dir = out_dir / 'checkpoints' / '{}-{}'.format(name, seed)
    result = train(config, dataset['train'], dataset['val'], out_dir=stage_dir)
    return result.params, config


def summarize(rows: List[Dict[str, Any]]) -> List[Dict[str, Any]]:
    """Mean of every metric per variant, in first-seen variant order."""
    names = list(dict.fromkeys(row['variant'] for row in rows))
    means = []
    for name in names:
        group = [row for row in rows if row['variant'] == name]
        mean: Dict[str, Any] = dict(variant=name, seeds=len(group))
        for column in METRIC_COLUMNS:
            values = [row[column] for row in group if row[column] is not None]
            mean[column] = float(np.mean(values)) if values else None
        means.append(mean)
    return means
