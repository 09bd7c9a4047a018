# built-in
import math
from dataclasses import dataclass, field
from hashlib import md5
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence

# external
import numpy as np

# app
from .._constants import LOG as ROOT_LOG
from .._exceptions import DivergenceError, NumericError
from .._logic import Snapshot, prepare_cache
from ..formatters import write_rows
from ..navigator import GreedyDriver, SampleDriver, TeacherDriver
from ..numcore import ParameterSet, Tape, add_n, backward, save_checkpoint, scale, sgd_update
from ..world import Environment, Split, Task
from ._config import TrainConfig
from ._losses import il_explore_loss, il_nav_loss, rl_explore_loss, rl_nav_loss
from ._rewards import assign_rewards
from ._rollout import rollout_episode
from ._trace import EpisodeTrace


LOG = ROOT_LOG.getChild(__name__)

LOSSES = ('il_nv', 'il_ep', 'rl_nv', 'rl_ep')
LOG_COLUMNS = ('stage', 'smax', 'epoch', 'loss') + LOSSES + ('grad_norm', 'val_sr', 'val_tl')


@dataclass
class TrainResult:
    params: ParameterSet
    rows: List[Dict[str, Any]] = field(default_factory=list)
    checkpoints: List[Path] = field(default_factory=list)


def init_params(config: TrainConfig, env: Environment) -> ParameterSet:
    return ParameterSet.initialize(
        hidden_size=config.hidden_size,
        view_size=env.view_size,
        token_size=env.d_land,
        seed=config.seed,
    )


def episode_loss(
    env: Environment, task: Task, tape: Tape, config: TrainConfig, smax: int, rng: np.random.Generator,
):
    """Mixed objective of one episode: RL on a sampled rollout plus weighted IL on a teacher-forced one.

    Returns the loss value (or None when every loss is switched off) and its parts.
    """
    parts = {}
    terms = []
    if config.use_il_nv or config.use_il_ep:
        forced = rollout_episode(env, task, tape, config, TeacherDriver(), smax=smax)
        if config.use_il_nv:
            parts['il_nv'] = il_nav_loss(forced)
            terms.append(scale(parts['il_nv'], config.il_weight))
        if config.use_il_ep:
            parts['il_ep'] = il_explore_loss(forced)
            terms.append(scale(parts['il_ep'], config.il_weight))
    if config.use_rl_nv or config.use_rl_ep:
        sampled = rollout_episode(env, task, tape, config, SampleDriver(rng), smax=smax)
        assign_rewards(sampled, env, config)
        if config.use_rl_nv:
            parts['rl_nv'] = rl_nav_loss(sampled)
            terms.append(parts['rl_nv'])
        if config.use_rl_ep:
            parts['rl_ep'] = rl_explore_loss(sampled)
            terms.append(parts['rl_ep'])
    if not terms:
        return None, {}
    return add_n(terms), {name: value.item() for name, value in parts.items()}


def greedy_rollouts(
    params: ParameterSet, split: Split, config: TrainConfig, smax: int, lazy: Optional[bool] = None,
) -> List[EpisodeTrace]:
    traces = []
    for task in split.tasks:
        trace = rollout_episode(
            split.envs[task.env_name], task, Tape(params), config, GreedyDriver(), smax=smax, lazy=lazy,
        )
        trace.release()
        traces.append(trace)
    return traces


def _validate(params: ParameterSet, split: Optional[Split], config: TrainConfig, smax: int):
    if split is None or not split.tasks:
        return None, None
    traces = greedy_rollouts(params, split, config, smax)
    successes = [
        split.envs[trace.env_name].distance(trace.final_position, trace.goal) < config.success_radius
        for trace in traces
    ]
    return float(np.mean(successes)), float(np.mean([trace.travel.total_tl for trace in traces]))


def _dataset_key(split: Split) -> str:
    hasher = md5()
    for task in split.tasks:
        hasher.update('{}:{}:{}:{}'.format(task.env_name, task.start, task.goal, task.heading).encode())
        for token in task.instruction:
            hasher.update(token.tobytes())
    return hasher.hexdigest()


def _train_stage(
    params: ParameterSet, config: TrainConfig, stage: int, smax: int,
    train: Split, val: Optional[Split],
) -> List[Dict[str, Any]]:
    rows = []
    tasks = train.tasks
    for epoch in range(config.epochs_per_stage):
        order = np.random.default_rng([config.seed, stage, epoch]).permutation(len(tasks))
        sums = dict.fromkeys(LOSSES, 0.0)
        total = 0.0
        norms = []
        for start in range(0, len(order), config.batch_size):
            batch = order[start:start + config.batch_size]
            for idx in batch:
                task = tasks[int(idx)]
                rng = np.random.default_rng([config.seed, stage, epoch, int(idx)])
                tape = Tape(params)
                try:
                    loss, parts = episode_loss(train.envs[task.env_name], task, tape, config, smax, rng)
                except NumericError as exc:
                    raise DivergenceError('stage {} epoch {}: {}'.format(stage, epoch, exc)) from exc
                if loss is None:
                    continue
                if not math.isfinite(loss.item()):
                    raise DivergenceError('stage {} epoch {}: loss is not finite'.format(stage, epoch))
                total += loss.item()
                for name, value in parts.items():
                    sums[name] += value
                backward(scale(loss, 1.0 / len(batch)))
            norms.append(sgd_update(params, lr=config.lr, clip_norm=config.clip_norm))

        count = max(len(tasks), 1)
        val_sr, val_tl = _validate(params, val, config, smax)
        row = dict(stage=stage, smax=smax, epoch=epoch, loss=total / count)
        row.update({name: value / count for name, value in sums.items()})
        row.update(grad_norm=float(np.mean(norms)) if norms else 0.0, val_sr=val_sr, val_tl=val_tl)
        rows.append(row)
        LOG.info(
            'stage %d (smax %d) epoch %d: loss %.4f, val SR %s',
            stage, smax, epoch, row['loss'], 'n/a' if val_sr is None else '{:.3f}'.format(val_sr),
        )
    return rows


def train(
    config: TrainConfig, train_split: Split, val_split: Optional[Split] = None, *,
    params: Optional[ParameterSet] = None, out_dir: Optional[Path] = None, cache_dir: Optional[Path] = None,
) -> TrainResult:
    """Curriculum training: one stage per S_max, each starting from the previous stage's parameters.
    """
    if not train_split.tasks:
        raise ValueError('the training split has no tasks')
    if params is None:
        params = init_params(config, next(iter(train_split.envs.values())))
    result = TrainResult(params=params)
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
    if config.cache:
        prepare_cache(**({} if cache_dir is None else dict(path=cache_dir)))

    data_key = _dataset_key(train_split)
    for stage, smax in enumerate(config.stages()):
        snapshot = None
        if config.cache:
            snapshot = Snapshot.create(
                config=dict(config.to_dict(), data=data_key),
                stage=stage,
                params_digest=params.digest(),
                cache_dir=cache_dir,
            )
        if snapshot is not None and snapshot.exists():
            LOG.info('stage %d (smax %d): loaded from cache', stage, smax)
            params.load_dict(snapshot.results['parameters'])
            rows = snapshot.results['rows']
        else:
            rows = _train_stage(params, config, stage, smax, train_split, val_split)
            if snapshot is not None:
                snapshot.dump(dict(parameters=params.to_dict(), rows=rows))
        result.rows.extend(rows)

        if out_dir is not None:
            path = out_dir / 'stage-{}.json'.format(stage)
            save_checkpoint(params, path)
            result.checkpoints.append(path)
            write_log(result.rows, out_dir / 'train_log.csv')
    return result


def write_log(rows: Sequence[Mapping[str, Any]], path: Path) -> None:
    write_rows(rows, LOG_COLUMNS, path)
