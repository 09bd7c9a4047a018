# built-in
from typing import List, Optional, Sequence

# app
from .._constants import STOP, SUCCESS_RADIUS
from ..explorer import GATE, ExplorationRound
from ..world import Environment
from ._config import TrainConfig
from ._trace import EpisodeTrace


TERMINAL_REWARD = 3.0


def nav_reward(
    env: Environment, from_id: int, to_id_or_stop: int, goal: int, is_final: bool = False,
    radius: float = SUCCESS_RADIUS,
) -> float:
    """Distance gained toward the goal, or the terminal +-3 when the episode ends.

    A STOP ends the episode where it is issued. A move that is the last one
    (forced stop) earns its distance delta plus the terminal reward at the
    viewpoint it reaches.
    """
    if to_id_or_stop == STOP:
        return _terminal(env, from_id, goal, radius)
    reward = env.distance(from_id, goal) - env.distance(to_id_or_stop, goal)
    if is_final:
        reward += _terminal(env, to_id_or_stop, goal, radius)
    return reward


def _terminal(env: Environment, position: int, goal: int, radius: float) -> float:
    # strict: a stop exactly at the radius fails
    return TERMINAL_REWARD if env.distance(position, goal) < radius else -TERMINAL_REWARD


def discounted_returns(rewards: Sequence[float], gamma: float) -> List[float]:
    returns = [0.0] * len(rewards)
    running = 0.0
    for idx in range(len(rewards) - 1, -1, -1):
        running = rewards[idx] + gamma * running
        returns[idx] = running
    return returns


def exploration_reward(r_nv_after: float, r_nv_before: float, S: int) -> float:
    """Navigation benefit of one exploration round, shared by its S steps."""
    if S < 1:
        raise ValueError('an exploration round has at least one step')
    return (r_nv_after - r_nv_before) / S


def _action_reward(env: Environment, position: int, candidates: Sequence[int], action: int, goal: int, radius: float):
    target = STOP if action == STOP else candidates[action]
    return nav_reward(env, position, target, goal, radius=radius)


def _assign_round(round_: ExplorationRound, base: float, config: TrainConfig) -> None:
    round_.base_reward = base
    rewards = [base + config.beta] * round_.steps
    returns = discounted_returns(rewards, config.gamma)
    for action in round_.actions:
        if not action.executed:
            continue
        if action.action == STOP:
            action.reward = 0.0
            action.ret = 0.0
            continue
        move = 0 if action.kind == GATE else action.s
        action.reward = rewards[move]
        action.ret = returns[move]


def assign_rewards(trace: EpisodeTrace, env: Environment, config: TrainConfig,
                   radius: Optional[float] = None) -> EpisodeTrace:
    """Fill in rewards and discounted returns of every navigation and exploration action.
    """
    radius = config.success_radius if radius is None else radius
    goal = trace.goal
    last = len(trace.steps) - 1
    for t, step in enumerate(trace.steps):
        target = STOP if step.action == STOP else step.target
        step.reward = nav_reward(
            env, step.position, target, goal,
            is_final=trace.forced_stop and t == last, radius=radius,
        )

        previous = step.exploration.pre_argmax
        for round_ in step.exploration.rounds:
            before = round_.before if config.reward_baseline == 'round' else previous
            base = exploration_reward(
                _action_reward(env, step.position, step.candidates, round_.after, goal, radius),
                _action_reward(env, step.position, step.candidates, before, goal, radius),
                round_.steps,
            )
            _assign_round(round_, base, config)
        stop = step.exploration.stop
        if stop is not None:
            stop.reward = 0.0
            stop.ret = 0.0

    for step, ret in zip(trace.steps, discounted_returns([step.reward for step in trace.steps], config.gamma)):
        step.ret = ret
    return trace
