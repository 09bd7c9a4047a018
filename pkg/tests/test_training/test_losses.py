# external
import numpy as np
import pytest

# project
from activenav._constants import STOP
from activenav._exceptions import TapeError
from activenav.navigator import ReplayDriver, SampleDriver, TeacherDriver
from activenav.numcore import Tape, add_n, backward, grad_check
from activenav.training import (
    TrainConfig, assign_rewards, il_explore_loss, il_nav_loss, rl_explore_loss, rl_nav_loss, rollout_episode,
)

# app
from ..utils import make_params, make_task, six_world


def zero_params(env):
    params = make_params(env)
    params.fill(0.0)
    return params


def teacher_trace(env, task, params, mode='basic', smax=1, tape=None, **kwargs):
    config = TrainConfig(mode=mode, hidden_size=params.hidden_size, smax_schedule=(smax,), **kwargs)
    trace = rollout_episode(env, task, tape or Tape(params), config, TeacherDriver(), smax=smax)
    return assign_rewards(trace, env, config)


def test_il_nav_loss_uniform():
    env = six_world()
    trace = teacher_trace(env, make_task(env, 0, 2), zero_params(env))
    # 0 (2 views), 1 (3 views), 2 (2 views); every slot equally likely
    assert trace.nav_actions == [0, 1, STOP]
    assert il_nav_loss(trace).item() == pytest.approx(np.log(3) + np.log(4) + np.log(3))


def test_il_nav_loss_matches_recorded_probabilities():
    env = six_world()
    trace = teacher_trace(env, make_task(env, 1, 5), make_params(env, seed=2))
    assert il_nav_loss(trace).item() == pytest.approx(-sum(step.log_prob for step in trace.steps))
    assert il_nav_loss(trace).item() >= 0.0


def test_il_explore_loss_single_step():
    env = six_world()
    trace = teacher_trace(env, make_task(env, 4, 1), zero_params(env), mode='decision')
    first = trace.steps[0].exploration
    # gate over 3 views and STOP, then STOP among 2 views and STOP
    assert [action.teacher for action in first.actions()] == [0, STOP]
    expected = 0.0
    for step in trace.steps:
        for action in step.exploration.actions():
            dist, _ = action.graph
            expected += np.log(len(dist.support))
    assert il_explore_loss(trace).item() == pytest.approx(expected)
    assert il_explore_loss(trace).item() > np.log(4)


def test_no_exploration_costs_nothing():
    env = six_world()
    trace = teacher_trace(env, make_task(env, 0, 2), zero_params(env))
    assert il_explore_loss(trace).item() == 0.0
    assert rl_explore_loss(trace).item() == 0.0


def test_rl_loss_vanishes_when_critic_is_exact():
    env = six_world()
    params = zero_params(env)
    params['critic_nv.b'].value[...] = 3.0
    trace = teacher_trace(env, make_task(env, 0, 0), params)
    assert [step.ret for step in trace.steps] == [3.0]
    assert rl_nav_loss(trace).item() == 0.0


def test_rl_loss_single_step():
    env = six_world()
    params = zero_params(env)
    params['critic_nv.b'].value[...] = 1.0
    trace = teacher_trace(env, make_task(env, 0, 0), params)
    loss = rl_nav_loss(trace)
    # advantage 3 - 1 on log(1/3), critic error (3 - 1)^2
    assert loss.item() == pytest.approx(2 * np.log(3) + 4.0)

    params.zero_grad()
    backward(loss)
    # the critic only learns from its own error term
    assert params['critic_nv.b'].grad == pytest.approx(-4.0)


def test_losses_need_a_live_graph():
    env = six_world()
    trace = teacher_trace(env, make_task(env, 0, 2), zero_params(env))
    backward(il_nav_loss(trace))
    with pytest.raises(TapeError):
        il_nav_loss(trace)

    trace = teacher_trace(env, make_task(env, 0, 2), zero_params(env))
    trace.release()
    with pytest.raises(TapeError):
        rl_nav_loss(trace)


def test_lazy_does_not_change_losses():
    env = six_world()
    params = make_params(env, seed=3)
    values = []
    for lazy in (True, False):
        trace = teacher_trace(env, make_task(env, 0, 5), params, mode='full', smax=2, lazy=lazy)
        values.append([loss(trace).item() for loss in (il_nav_loss, il_explore_loss, rl_nav_loss, rl_explore_loss)])
    assert values[0] == values[1]


def all_losses(trace):
    return add_n([il_nav_loss(trace), il_explore_loss(trace), rl_nav_loss(trace), rl_explore_loss(trace)])


def random_task(env, seed):
    rng = np.random.default_rng(seed)
    start, goal = rng.choice(len(env.ids), size=2, replace=False).tolist()
    return make_task(env, start, goal, heading=float(rng.uniform(-np.pi, np.pi)))


@pytest.mark.parametrize('mode, smax', [('basic', 1), ('naive', 1), ('decision', 1), ('full', 2), ('full', 3)])
@pytest.mark.parametrize('seed', range(10))
def test_loss_gradients(mode, smax, seed):
    env = six_world()
    params = make_params(env, seed=seed)
    task = random_task(env, seed)

    def loss(tape):
        return all_losses(teacher_trace(env, task, params, mode=mode, smax=smax, tape=tape))

    assert grad_check(loss, params, sample=3, seed=seed) <= 1e-4


@pytest.mark.parametrize('seed', range(10))
def test_sampled_trace_gradients(seed):
    env = six_world()
    params = make_params(env, seed=seed)
    task = random_task(env, 100 + seed)
    config = TrainConfig(mode='full', hidden_size=4, smax_schedule=(2,), max_steps=4)
    # replay the sampled decisions so every pass sees the same trajectory
    driver = SampleDriver(np.random.default_rng(seed))
    reference = rollout_episode(env, task, Tape(params), config, driver, smax=2)
    decisions = reference.decisions()

    def loss(tape):
        trace = rollout_episode(env, task, tape, config, ReplayDriver(decisions), smax=2)
        assign_rewards(trace, env, config)
        return add_n([rl_nav_loss(trace), rl_explore_loss(trace)])

    assert grad_check(loss, params, sample=3, seed=seed) <= 1e-4


@pytest.mark.parametrize('name', ['il_nv', 'il_ep', 'rl_nv', 'rl_ep'])
@pytest.mark.parametrize('seed', range(3))
def test_each_loss_gradient(name, seed):
    env = six_world()
    params = make_params(env, seed=seed)
    task = random_task(env, 200 + seed)
    losses = dict(il_nv=il_nav_loss, il_ep=il_explore_loss, rl_nv=rl_nav_loss, rl_ep=rl_explore_loss)

    def loss(tape):
        return losses[name](teacher_trace(env, task, params, mode='full', smax=2, tape=tape))

    assert grad_check(loss, params, sample=3, seed=seed) <= 1e-4
