# built-in
import os
from contextlib import contextmanager
from typing import Sequence, Tuple

# external
import numpy as np

# project
from activenav.numcore import ParameterSet
from activenav.world import Environment, InstructionTokens, Task, Viewpoint, shortest_path


@contextmanager
def chdir(path):
    """Context manager for changing dir and restoring previous workdir after exit.
    """
    curdir = os.getcwd()
    os.chdir(str(path))
    try:
        yield
    finally:
        os.chdir(curdir)


def make_env(
    positions: Sequence[Tuple[float, float]], edges, *, name='hand', d_land=4, seed=0, check=False,
) -> Environment:
    rng = np.random.default_rng(seed)
    viewpoints = [
        Viewpoint(id=idx, position=np.array([x, y, 0.0]), landmark=rng.standard_normal(d_land))
        for idx, (x, y) in enumerate(positions)
    ]
    return Environment.build(name, viewpoints, edges, k_max=6, check=check)


def line_world(n: int = 3, step: float = 2.0, **kwargs) -> Environment:
    """0 - 1 - ... - n-1 along +y."""
    positions = [(0.0, idx * step) for idx in range(n)]
    edges = [(idx, idx + 1) for idx in range(n - 1)]
    return make_env(positions, edges, **kwargs)


def six_world(**kwargs) -> Environment:
    """Two rows of three viewpoints, 2 m apart.

        3 - 4 - 5
        |   |   |
        0 - 1 - 2
    """
    positions = [(0.0, 0.0), (2.0, 0.0), (4.0, 0.0), (0.0, 2.0), (2.0, 2.0), (4.0, 2.0)]
    edges = [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]
    return make_env(positions, edges, name='six', check=True, **kwargs)


def make_task(env: Environment, start: int, goal: int, heading: float = 0.0) -> Task:
    path, distance = shortest_path(env, start, goal)
    tokens = [env.landmark(node) for node in path[1:]] or [env.landmark(goal)]
    while len(tokens) < 3:
        tokens.append(env.landmark(goal))
    return Task(
        env_name=env.name,
        start=start,
        goal=goal,
        heading=heading,
        teacher_path=tuple(path),
        shortest_distance=distance,
        instruction=InstructionTokens(tuple(tokens)),
    )


def make_params(env: Environment, hidden: int = 4, seed: int = 0) -> ParameterSet:
    return ParameterSet.initialize(hidden_size=hidden, view_size=env.view_size, token_size=env.d_land, seed=seed)


SMALL_CONFIG = """
[tool.activenav.world]
n_viewpoints = 10
k_max = 2
d_land = 4
min_hops = 3
max_hops = 5

[tool.activenav.data]
train_envs = 1
val_envs = 1
test_envs = 1
tasks_per_env = 2

[tool.activenav.train]
hidden_size = 4
epochs_per_stage = 1
batch_size = 2
smax_schedule = [1, 2]
max_steps = 6

[tool.activenav.experiment]
seeds = [0]
variants = ["basic", "full", "full-eager"]
"""


def small_project(path) -> None:
    """A pyproject.toml with desk-sized worlds and a tiny agent."""
    (path / 'pyproject.toml').write_text(SMALL_CONFIG)
