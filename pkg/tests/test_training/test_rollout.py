# built-in
from dataclasses import replace

# external
import numpy as np
import pytest

# project
from activenav._constants import STOP
from activenav._exceptions import ReplayError
from activenav.navigator import GreedyDriver, SampleDriver, TeacherDriver
from activenav.numcore import Tape
from activenav.training import TrainConfig, dump_traces, load_traces, replay_episode, rollout_episode

# app
from ..utils import make_params, make_task, six_world


def config(mode='full', **kwargs):
    return TrainConfig(mode=mode, hidden_size=4, max_steps=6, **kwargs)


def test_basic_mode_never_explores():
    env = six_world()
    trace = rollout_episode(env, make_task(env, 0, 5), Tape(make_params(env)), config('basic'), GreedyDriver())
    assert trace.steps
    assert not any(step.exploration.explored for step in trace.steps)
    assert trace.travel.explore_tl == 0.0
    assert trace.exploration_visits == ()


@pytest.mark.parametrize('mode', ['basic', 'naive', 'decision', 'full'])
def test_teacher_forcing_reaches_goal(mode):
    env = six_world()
    task = make_task(env, 0, 5)
    trace = rollout_episode(env, task, Tape(make_params(env)), config(mode), TeacherDriver(), smax=3)
    assert trace.final_position == 5
    assert trace.nav_actions[-1] == STOP
    assert trace.route == [0, 1, 2, 5]
    if mode == 'basic':
        assert trace.travel.nav_tl == pytest.approx(task.shortest_distance)
    assert trace.travel.total_tl == pytest.approx(trace.travel.nav_tl + trace.travel.explore_tl)


def test_records():
    env = six_world()
    trace = rollout_episode(env, make_task(env, 0, 5), Tape(make_params(env, seed=4)), config(), GreedyDriver(), smax=2)
    assert len(trace.steps) <= 6
    assert trace.route[0] == 0
    assert len(trace.route) == len([step for step in trace.steps if step.action != STOP]) + 1
    for step in trace.steps:
        assert step.probs.sum() == pytest.approx(1.0)
        assert step.candidates == env.neighbors(step.position)
        assert np.log(step.probs[-1 if step.action == STOP else step.action]) == pytest.approx(step.log_prob)
    assert trace.policy == 'greedy'
    assert trace.smax == 2


def test_single_step_modes_ignore_smax():
    env = six_world()
    trace = rollout_episode(env, make_task(env, 0, 5), Tape(make_params(env)), config('naive'), GreedyDriver(), smax=4)
    assert trace.smax == 1
    for step in trace.steps:
        assert all(round_.steps == 1 for round_ in step.exploration.rounds)


def test_wrong_world():
    env = six_world()
    task = replace(make_task(env, 0, 5), env_name='elsewhere')
    with pytest.raises(ValueError, match='task belongs to'):
        rollout_episode(env, task, Tape(make_params(env)), config(), GreedyDriver())


@pytest.mark.parametrize('seed', range(4))
def test_replay(seed):
    env = six_world()
    params = make_params(env, seed=seed)
    cfg = config(smax_schedule=(3,))
    trace = rollout_episode(
        env, make_task(env, seed, 5 - seed), Tape(params), cfg, SampleDriver(np.random.default_rng(seed)), smax=3,
    )
    replayed = replay_episode(env, trace, params, cfg)
    assert replayed.nav_actions == trace.nav_actions
    assert replayed.route == trace.route
    assert replayed.travel == trace.travel


def test_replay_from_file(tmp_path):
    env = six_world()
    params = make_params(env, seed=1)
    trace = rollout_episode(env, make_task(env, 0, 5), Tape(params), config(), GreedyDriver(), smax=2)
    path = tmp_path / 'traces.jsonl'
    dump_traces([trace], path)
    (loaded,) = load_traces(path)
    assert loaded.to_dict() == trace.to_dict()
    replay_episode(env, loaded, params, config())


def test_replay_with_other_parameters():
    env = six_world()
    trace = rollout_episode(env, make_task(env, 0, 5), Tape(make_params(env, seed=1)), config(), GreedyDriver(), smax=2)
    with pytest.raises(ReplayError):
        replay_episode(env, trace, make_params(env, seed=2), config())


def test_lazy_keeps_decisions():
    env = six_world()
    params = make_params(env, seed=7)
    task = make_task(env, 3, 2)
    traces = [
        rollout_episode(env, task, Tape(params), config(), GreedyDriver(), smax=3, lazy=lazy)
        for lazy in (True, False)
    ]
    lazy, eager = traces
    assert lazy.nav_actions == eager.nav_actions
    assert lazy.decisions() == eager.decisions()
    assert lazy.final_position == eager.final_position
    assert lazy.travel.total_tl <= eager.travel.total_tl


def test_explore_all_directions(tmp_path):
    env = six_world()
    params = make_params(env, seed=3)
    cfg = config(explore_all=True, smax_schedule=(1, 2, 3))
    trace = rollout_episode(env, make_task(env, 0, 5), Tape(params), cfg, GreedyDriver(), smax=3)
    assert trace.explore_all
    for step in trace.steps:
        assert step.exploration.directions == tuple(range(len(step.candidates)))
        assert step.exploration.stop is None
        assert all(1 <= round_.steps <= 3 for round_ in step.exploration.rounds)

    path = tmp_path / 'traces.jsonl'
    dump_traces([trace], path)
    (loaded,) = load_traces(path)
    assert loaded.explore_all
    replayed = replay_episode(env, loaded, params, config())
    assert replayed.nav_actions == trace.nav_actions
