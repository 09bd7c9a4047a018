# built-in
from typing import Sequence, Tuple

# app
from .._exceptions import ShapeError
from ._ops import add, concat, dot, linear, mul, sigmoid, softmax, stack, take, tanh, transpose
from ._tape import Value


LSTMState = Tuple[Value, Value]


def attend(features: Sequence[Value], h: Value, W: Value) -> Tuple[Value, Value]:
    """Bilinear attention: weights = softmax(f_k^T W h), context = sum_k weights_k f_k.
    """
    if not features:
        raise ShapeError('attend over an empty feature set')
    matrix = stack(features)
    weights = softmax(linear(matrix, linear(W, h)))
    context = linear(transpose(matrix), weights)
    return context, weights


def lstm_step(weights: Tuple[Value, Value], x: Value, state: LSTMState) -> LSTMState:
    """One LSTM cell step, gates stacked as input, forget, output, candidate.
    """
    W, b = weights
    h, c = state
    hidden = h.shape[0]
    if W.shape != (4 * hidden, x.shape[0] + hidden):
        raise ShapeError('lstm_step: weights {} do not fit input {} and hidden {}'.format(
            W.shape, x.shape, hidden,
        ))
    gates = add(linear(W, concat(x, h)), b)
    input_gate = sigmoid(take(gates, range(0, hidden)))
    forget_gate = sigmoid(take(gates, range(hidden, 2 * hidden)))
    output_gate = sigmoid(take(gates, range(2 * hidden, 3 * hidden)))
    candidate = tanh(take(gates, range(3 * hidden, 4 * hidden)))
    c_next = add(mul(forget_gate, c), mul(input_gate, candidate))
    h_next = mul(output_gate, tanh(c_next))
    return h_next, c_next


def value_head(weights: Tuple[Value, Value], h: Value) -> Value:
    """w . stop_gradient(h) + b"""
    w, b = weights
    return add(dot(w, h.tape.detach(h)), b)
