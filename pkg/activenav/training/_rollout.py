# built-in
from typing import Optional

# external
import numpy as np

# app
from .._constants import EXTRA_VERBOSE, LOG as ROOT_LOG, STOP
from .._exceptions import ReplayError
from ..explorer import Mode, run_exploration
from ..memory import NAV, MemoryGraph
from ..navigator import (
    Driver, ReplayDriver, encode_instruction, initial_state, nav_policy, nav_step, nav_value,
)
from ..numcore import ParameterSet, Tape
from ..world import Environment, Task, teacher_action
from ._config import TrainConfig
from ._trace import EpisodeTrace, NavStep


LOG = ROOT_LOG.getChild(__name__)


def rollout_episode(
    env: Environment, task: Task, tape: Tape, config: TrainConfig, driver: Driver, *,
    smax: int = 1, lazy: Optional[bool] = None,
) -> EpisodeTrace:
    """Run one episode: explore, decide on the updated views, move; until STOP or max_steps.
    """
    if task.env_name != env.name:
        raise ValueError('task belongs to {}, not {}'.format(task.env_name, env.name))
    mode = config.mode_enum
    lazy = config.lazy if lazy is None else lazy
    if mode is not Mode.FULL:
        smax = 1
    trace = EpisodeTrace(
        task=task, mode=mode.value, smax=smax, lazy=lazy, direct=config.direct_knowledge,
        explore_all=config.explore_all,
        policy=driver.name, max_steps=config.max_steps, route=[task.start], tape=tape,
    )

    memory = MemoryGraph(env, task.start, task.heading, lazy=lazy)
    X = encode_instruction(task.instruction, tape)
    state = initial_state(X, tape)
    previous = None
    prev_emb = state.prev_action_embedding
    for t in range(config.max_steps):
        state = nav_step(state, previous, prev_emb, X, tape)
        V = memory.observation()
        position = memory.logical_position
        candidates, exploration = run_exploration(
            state.h, V, memory, mode, smax, tape,
            t=t, driver=driver, goal=task.goal, direct=config.direct_knowledge, explore_all=config.explore_all,
        )
        dist = nav_policy(state, candidates, tape, V.neighbor_ids)
        value = nav_value(state, tape)
        teacher = teacher_action(env, position, task.goal)
        action = driver.decide(dist, teacher)
        target = None if action == STOP else V.candidates[action].neighbor_id
        trace.steps.append(NavStep(
            t=t, position=position, candidates=V.neighbor_ids, digest=V.digest(),
            action=action, target=target, log_prob=dist.log_prob(action).item(), value=value.item(),
            teacher=teacher, probs=dist.probs.copy(), pre_argmax=exploration.pre_argmax,
            exploration=exploration, graph=(dist, value),
        ))
        if action == STOP:
            break
        memory.resolve_move(target, NAV)
        trace.route.append(target)
        previous = V
        prev_emb = V.candidates[action].embedding
    else:
        trace.forced_stop = True

    trace.travel = memory.finalize_episode()
    LOG.log(
        EXTRA_VERBOSE, '%s %d -> %d: %d steps, %s at %d, TL %.3f',
        env.name, task.start, task.goal, len(trace.steps), driver.name, trace.final_position,
        trace.travel.total_tl,
    )
    return trace


def replay_episode(env: Environment, trace: EpisodeTrace, params: ParameterSet, config: TrainConfig) -> EpisodeTrace:
    """Re-run a recorded episode with its own decisions and check every navigation distribution.
    """
    replay_config = TrainConfig(**dict(
        config.to_dict(), mode=trace.mode, max_steps=trace.max_steps, direct_knowledge=trace.direct,
        explore_all=trace.explore_all, smax_schedule=[trace.smax],
    ))
    driver = ReplayDriver(trace.decisions())
    replayed = rollout_episode(
        env, trace.task, Tape(params), replay_config, driver, smax=trace.smax, lazy=trace.lazy,
    )
    if len(replayed.steps) != len(trace.steps) or not driver.exhausted():
        raise ReplayError('replay made {} navigation steps, recorded {}'.format(
            len(replayed.steps), len(trace.steps),
        ))
    for recorded, step in zip(trace.steps, replayed.steps):
        if step.position != recorded.position or step.digest != recorded.digest:
            raise ReplayError('step {}: observation differs from the recorded one'.format(step.t))
        if not np.array_equal(step.probs, recorded.probs):
            raise ReplayError('step {}: navigation distribution differs'.format(step.t))
    if replayed.travel.total_tl != trace.travel.total_tl:
        raise ReplayError('replayed trajectory length differs')
    return replayed
