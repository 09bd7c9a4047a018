# built-in
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping

# app
from .._constants import LOG as ROOT_LOG
from .._exceptions import ConfigError, WorldError
from .._logic import section_from_dict
from ._generate import generate_world
from ._io import load_environment, load_tasks, save_environment, save_tasks
from ._tasks import sample_task
from ._types import Environment, Task, WorldConfig


LOG = ROOT_LOG.getChild(__name__)

SPLITS = ('train', 'val', 'test')


@dataclass(frozen=True)
class DataConfig:
    seed: int = 0
    train_envs: int = 4
    val_envs: int = 2
    test_envs: int = 2
    tasks_per_env: int = 25

    def __post_init__(self) -> None:
        for name in ('train_envs', 'val_envs', 'test_envs', 'tasks_per_env'):
            if getattr(self, name) < 0:
                raise ConfigError('data.{} must be non-negative'.format(name))

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'DataConfig':
        return section_from_dict(cls, data, section='data')


@dataclass
class Split:
    envs: Dict[str, Environment] = field(default_factory=dict)
    tasks: List[Task] = field(default_factory=list)


def build_split(world: WorldConfig, data: DataConfig, split: str) -> Split:
    """Worlds of one split. Splits never share worlds, so val and test are unseen.
    """
    if split not in SPLITS:
        raise ConfigError('unknown split: {}'.format(split))
    offset = SPLITS.index(split) * 1000
    count = getattr(data, '{}_envs'.format(split))
    result = Split()
    for idx in range(count):
        env = generate_world(world, seed=data.seed * 10000 + offset + idx)
        result.envs[env.name] = env
        for task_idx in range(data.tasks_per_env):
            result.tasks.append(sample_task(
                env,
                rng_seed=(data.seed * 10000 + offset + idx) * 1000 + task_idx,
                min_hops=world.min_hops,
                max_hops=world.max_hops,
                sigma_instr=world.sigma_instr,
                corruption=world.instruction_corruption,
            ))
    LOG.info('%s split: %d worlds, %d tasks', split, len(result.envs), len(result.tasks))
    return result


def build_dataset(world: WorldConfig, data: DataConfig) -> Dict[str, Split]:
    return {split: build_split(world, data, split) for split in SPLITS}


def save_split(split: Split, path: Path) -> None:
    """<path>/worlds/<name>.json for every world and <path>/tasks.json."""
    worlds = path / 'worlds'
    worlds.mkdir(parents=True, exist_ok=True)
    for name, env in split.envs.items():
        save_environment(env, worlds / '{}.json'.format(name))
    save_tasks(split.tasks, path / 'tasks.json')


def load_split(path: Path) -> Split:
    if not (path / 'tasks.json').exists():
        raise WorldError('{}: no tasks.json'.format(path))
    result = Split()
    for world in sorted((path / 'worlds').glob('*.json')):
        env = load_environment(world)
        result.envs[env.name] = env
    result.tasks = load_tasks(path / 'tasks.json')
    missing = sorted({task.env_name for task in result.tasks} - set(result.envs))
    if missing:
        raise WorldError('{}: tasks refer to missing worlds: {}'.format(path, ', '.join(missing)))
    return result
