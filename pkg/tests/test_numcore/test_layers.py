# external
import numpy as np
import pytest

# project
from activenav.numcore import (
    ParameterSet, Tape, add, attend, backward, grad_check, linear, lstm_step, reduce_sum, transpose,
    value_head,
)


HIDDEN = 3
INPUT = 2


def lstm_params(seed=0, spread=1.0, **extra):
    rng = np.random.default_rng(seed)
    values = {
        'cell.W': rng.uniform(-spread, spread, size=(4 * HIDDEN, INPUT + HIDDEN)),
        'cell.b': rng.uniform(-spread, spread, size=(4 * HIDDEN,)),
    }
    values.update(extra)
    return ParameterSet(values, hidden_size=HIDDEN)


def test_zero_weights_give_zero_state():
    params = lstm_params()
    params.fill(0.0)
    tape = Tape(params)
    h, c = lstm_step(tape.lstm('cell'), tape.constant([1.0, -1.0]), (tape.zeros(HIDDEN), tape.zeros(HIDDEN)))
    assert list(h.data) == [0.0] * HIDDEN
    assert list(c.data) == [0.0] * HIDDEN


def test_gate_order():
    params = lstm_params()
    params.fill(0.0)
    bias = params['cell.b'].value
    bias[0:HIDDEN] = 50.0               # input gate open
    bias[HIDDEN:2 * HIDDEN] = -50.0     # forget gate closed
    bias[2 * HIDDEN:3 * HIDDEN] = 50.0  # output gate open
    bias[3 * HIDDEN:] = np.arctanh(0.5)
    tape = Tape(params)
    h, c = lstm_step(tape.lstm('cell'), tape.zeros(INPUT), (tape.zeros(HIDDEN), tape.constant([9.0] * HIDDEN)))
    assert c.data == pytest.approx([0.5] * HIDDEN)
    assert h.data == pytest.approx([np.tanh(0.5)] * HIDDEN)


def test_recurrence_changes_state():
    params = lstm_params(seed=1)
    tape = Tape(params)
    weights = tape.lstm('cell')
    token = tape.constant([0.3, 0.7])
    first = lstm_step(weights, token, (tape.zeros(HIDDEN), tape.zeros(HIDDEN)))
    second = lstm_step(weights, token, first)
    assert not np.allclose(first[0].data, second[0].data)


def test_zero_input_fixed_point():
    params = lstm_params(seed=2, spread=0.2)
    tape = Tape(params)
    weights = tape.lstm('cell')
    state = (tape.zeros(HIDDEN), tape.zeros(HIDDEN))
    for _ in range(300):
        previous = state
        state = lstm_step(weights, tape.zeros(INPUT), state)
    assert np.allclose(state[0].data, previous[0].data, atol=1e-10)
    assert np.allclose(state[1].data, previous[1].data, atol=1e-10)


@pytest.mark.parametrize('seed', range(5))
def test_lstm_gradients(seed):
    params = lstm_params(seed=seed, h0=np.full(HIDDEN, 0.1), x=np.array([0.5, -0.4]))

    def loss(tape):
        state = (tape.param('h0'), tape.zeros(HIDDEN))
        for _ in range(3):
            state = lstm_step(tape.lstm('cell'), tape.param('x'), state)
        return reduce_sum(add(state[0], state[1]))

    assert grad_check(loss, params) <= 1e-4


def test_uniform_attention_is_mean():
    params = ParameterSet({'W': np.zeros((2, 3))}, hidden_size=3)
    tape = Tape(params)
    features = [tape.constant([1.0, 0.0]), tape.constant([0.0, 4.0]), tape.constant([2.0, 2.0])]
    context, weights = attend(features, tape.constant([1.0, 2.0, 3.0]), tape.param('W'))
    assert weights.data == pytest.approx([1 / 3] * 3)
    assert context.data == pytest.approx([1.0, 2.0])


@pytest.mark.parametrize('seed', range(5))
def test_attention_gradients(seed):
    rng = np.random.default_rng(seed)
    params = ParameterSet(
        {'W': rng.normal(size=(2, 3)), 'h': rng.normal(size=3), 'f': rng.normal(size=(3, 2))},
        hidden_size=3,
    )

    def loss(tape):
        f = tape.param('f')
        rows = [tape.constant(np.eye(3)[row]) for row in range(3)]
        features = [linear(transpose(f), row) for row in rows]
        context, weights = attend(features, tape.param('h'), tape.param('W'))
        return add(reduce_sum(context), reduce_sum(weights * weights))

    assert grad_check(loss, params) <= 1e-4


def test_value_head_stops_gradient():
    params = ParameterSet(
        {'w': np.array([1.0, -1.0]), 'b': np.array(0.5), 'h': np.array([2.0, 3.0])},
        hidden_size=2,
    )
    tape = Tape(params)
    value = value_head((tape.param('w'), tape.param('b')), tape.param('h'))
    assert value.item() == pytest.approx(-0.5)
    backward(value)
    assert list(params['h'].grad) == [0.0, 0.0]
    assert params['w'].grad == pytest.approx([2.0, 3.0])
    assert params['b'].grad == pytest.approx(1.0)
