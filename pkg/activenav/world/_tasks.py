# built-in
import math
from typing import Sequence

# external
import numpy as np

# app
from .._exceptions import WorldError
from ._paths import shortest_path
from ._types import Environment, InstructionTokens, Task


def synth_instruction(
    env: Environment, path: Sequence[int], sigma_instr: float, rng_seed: int,
    corruption: float = 0.0,
) -> InstructionTokens:
    """One token per waypoint after the start: its landmark plus Gaussian noise.

    With probability `corruption` the first token describes a wrong neighbor
    of the start instead.
    """
    if not path:
        raise WorldError('cannot describe an empty path')
    for node in path:
        if node not in env:
            raise WorldError('unknown viewpoint: {}'.format(node))
    rng = np.random.default_rng(rng_seed)
    tokens = []
    for node in path[1:]:
        token = env.landmark(node).copy()
        if sigma_instr > 0:
            token = token + rng.normal(0.0, sigma_instr, token.shape[0])
        tokens.append(token)

    if corruption > 0 and len(path) > 1 and rng.random() < corruption:
        wrong = [node for node in env.neighbors(path[0]) if node != path[1]]
        if wrong:
            decoy = env.landmark(wrong[int(rng.integers(len(wrong)))]).copy()
            if sigma_instr > 0:
                decoy = decoy + rng.normal(0.0, sigma_instr, decoy.shape[0])
            tokens[0] = decoy
    return InstructionTokens(tuple(tokens))


def sample_task(
    env: Environment, rng_seed: int, *,
    min_hops: int = 3, max_hops: int = 7,
    sigma_instr: float = 0.0, corruption: float = 0.0,
) -> Task:
    rng = np.random.default_rng(rng_seed)
    for start in rng.permutation(np.array(env.ids)).tolist():
        goals = []
        for goal in env.ids:
            if goal == start:
                continue
            path, _ = shortest_path(env, start, goal)
            if min_hops <= len(path) - 1 <= max_hops:
                goals.append(goal)
        if goals:
            goal = goals[int(rng.integers(len(goals)))]
            break
    else:
        raise WorldError('{} has no start/goal pair with {}..{} hops'.format(env.name, min_hops, max_hops))

    path, distance = shortest_path(env, start, goal)
    heading = float(rng.uniform(-math.pi, math.pi))
    instruction = synth_instruction(
        env, path, sigma_instr,
        rng_seed=int(rng.integers(2 ** 31)),
        corruption=corruption,
    )
    return Task(
        env_name=env.name,
        start=start,
        goal=goal,
        heading=heading,
        teacher_path=tuple(path),
        shortest_distance=distance,
        instruction=instruction,
    )
