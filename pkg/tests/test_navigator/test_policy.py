# external
import numpy as np
import pytest

# project
from activenav._constants import STOP
from activenav._exceptions import ShapeError
from activenav.navigator import (
    GREEDY, SAMPLE, distribution, encode_instruction, initial_state, nav_policy, nav_step, nav_value,
    select_action,
)
from activenav.numcore import Tape, add, grad_check, neg
from activenav.world import observe

# app
from ..utils import make_params, make_task, six_world


def first_step(env, params, task, tape):
    encoding = encode_instruction(task.instruction, tape)
    state = nav_step(initial_state(encoding, tape), None, np.zeros(env.view_size), encoding, tape)
    obs = observe(env, task.start, task.heading)
    views = [view.embedding for view in obs.candidates]
    return state, obs, nav_policy(state, views, tape, neighbor_ids=obs.neighbor_ids)


def test_encoder_states():
    env = six_world()
    tape = Tape(make_params(env))
    token = env.landmark(2)
    single = encode_instruction([token], tape)
    assert len(single) == 1

    repeated = encode_instruction([token, token, token], tape)
    assert len(repeated) == 3
    assert np.array_equal(repeated.states[0].data, single.states[0].data)
    assert not np.allclose(repeated.states[0].data, repeated.states[1].data)

    with pytest.raises(ShapeError):
        encode_instruction([], tape)


def test_initial_state():
    env = six_world()
    tape = Tape(make_params(env))
    encoding = encode_instruction(make_task(env, 0, 5).instruction, tape)
    state = initial_state(encoding, tape)
    assert state.h is encoding.states[-1]
    assert list(state.c.data) == [0.0] * 4
    assert state.t == 0

    nxt = nav_step(state, observe(env, 0, 0.0), np.ones(env.view_size), encoding, tape)
    assert nxt.t == 1
    assert nxt.h.shape == (4,)


def test_zero_parameters_give_uniform_policy():
    env = six_world()
    params = make_params(env)
    params.fill(0.0)
    tape = Tape(params)
    _, obs, dist = first_step(env, params, make_task(env, 4, 0), tape)
    assert obs.neighbor_ids == (1, 3, 5)
    assert dist.size == 4
    assert dist.probs == pytest.approx([0.25] * 4)
    assert dist.log_prob(STOP).item() == pytest.approx(np.log(0.25))
    # ties resolve to the lowest index
    assert dist.argmax() == 0
    assert select_action(dist, GREEDY) == 0
    state = initial_state(encode_instruction(make_task(env, 4, 0).instruction, tape), tape)
    assert nav_value(state, tape).item() == 0.0


def test_stop_is_the_last_slot():
    env = six_world()
    tape = Tape(make_params(env))
    logits = tape.constant([0.0, 0.0, 5.0])
    dist = distribution(logits, candidates=(1, 3))
    assert dist.slot(STOP) == 2
    assert dist.action(2) == STOP
    assert dist.argmax() == STOP


def test_masked_slots_have_zero_probability():
    env = six_world()
    tape = Tape(make_params(env))
    dist = distribution(tape.constant([3.0, 1.0, 2.0, 0.0]), candidates=(1, 3, 5), support=(1, 3))
    assert dist.probs[0] == 0.0
    assert dist.probs[2] == 0.0
    assert dist.probs.sum() == pytest.approx(1.0)
    assert dist.log_prob(STOP).item() == pytest.approx(-np.log(1 + np.e))


def test_same_parameters_same_distribution():
    env = six_world()
    params = make_params(env, seed=5)
    task = make_task(env, 0, 5)
    first = first_step(env, params, task, Tape(params))[2]
    second = first_step(env, params, task, Tape(params))[2]
    assert np.array_equal(first.probs, second.probs)


def test_sampling():
    env = six_world()
    tape = Tape(make_params(env))
    dist = distribution(tape.constant([np.log(3.0), 0.0, -50.0]), candidates=(1, 3))
    rng = np.random.default_rng(0)
    draws = [select_action(dist, SAMPLE, rng) for _ in range(2000)]
    assert draws.count(0) / 2000 == pytest.approx(0.75, abs=0.05)

    with pytest.raises(ValueError, match='random generator'):
        select_action(dist, SAMPLE)
    with pytest.raises(ValueError, match='unknown selection mode'):
        select_action(dist, 'beam')


def test_empty_candidates():
    env = six_world()
    tape = Tape(make_params(env))
    encoding = encode_instruction(make_task(env, 0, 5).instruction, tape)
    with pytest.raises(ShapeError):
        nav_policy(initial_state(encoding, tape), [], tape)


@pytest.mark.parametrize('seed', range(3))
def test_step_gradients(seed):
    env = six_world()
    params = make_params(env, seed=seed)
    task = make_task(env, 0, 5, heading=0.3)

    def loss(tape):
        state, _, dist = first_step(env, params, task, tape)
        critic = nav_value(state, tape)
        return add(neg(dist.log_prob(0)), critic * critic)

    assert grad_check(loss, params, sample=4, seed=seed) <= 1e-4
