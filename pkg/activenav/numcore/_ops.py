"""Differentiable primitives. No broadcasting: operand shapes must agree exactly.
"""
# built-in
from typing import Sequence

# external
import numpy as np

# app
from .._exceptions import NumericError, ShapeError
from ._tape import Tape, Value


def _same_shape(a: Value, b: Value, op: str) -> None:
    if a.shape != b.shape:
        raise ShapeError('{}: shapes {} and {} differ'.format(op, a.shape, b.shape))


def _vector(a: Value, op: str) -> None:
    if a.data.ndim != 1:
        raise ShapeError('{}: expected a vector, got shape {}'.format(op, a.shape))


def _tape_of(values: Sequence[Value]) -> Tape:
    if not values:
        raise ShapeError('no operands')
    return values[0].tape


def add(a: Value, b: Value) -> Value:
    _same_shape(a, b, 'add')
    return a.tape.record(a.data + b.data, (a, b), lambda g: (g, g))


def sub(a: Value, b: Value) -> Value:
    _same_shape(a, b, 'sub')
    return a.tape.record(a.data - b.data, (a, b), lambda g: (g, -g))


def mul(a: Value, b: Value) -> Value:
    _same_shape(a, b, 'mul')
    return a.tape.record(a.data * b.data, (a, b), lambda g: (g * b.data, g * a.data))


def neg(a: Value) -> Value:
    return a.tape.record(-a.data, (a,), lambda g: (-g,))


def scale(a: Value, factor: float) -> Value:
    return a.tape.record(a.data * factor, (a,), lambda g: (g * factor,))


def add_n(values: Sequence[Value]) -> Value:
    tape = _tape_of(values)
    for other in values[1:]:
        _same_shape(values[0], other, 'add_n')
    data = values[0].data.copy()
    for other in values[1:]:
        data = data + other.data
    return tape.record(data, values, lambda g: tuple(g for _ in values))


def linear(W: Value, x: Value) -> Value:
    """W @ x for a matrix and a vector."""
    if W.data.ndim != 2 or x.data.ndim != 1 or W.shape[1] != x.shape[0]:
        raise ShapeError('linear: cannot multiply {} by {}'.format(W.shape, x.shape))
    return W.tape.record(
        W.data @ x.data, (W, x),
        lambda g: (np.outer(g, x.data), W.data.T @ g),
    )


def transpose(a: Value) -> Value:
    if a.data.ndim != 2:
        raise ShapeError('transpose: expected a matrix, got shape {}'.format(a.shape))
    return a.tape.record(a.data.T.copy(), (a,), lambda g: (g.T,))


def dot(a: Value, b: Value) -> Value:
    _vector(a, 'dot')
    _same_shape(a, b, 'dot')
    return a.tape.record(np.array(a.data @ b.data), (a, b), lambda g: (g * b.data, g * a.data))


def concat(*values: Value) -> Value:
    tape = _tape_of(values)
    for value in values:
        _vector(value, 'concat')
    sizes = [value.shape[0] for value in values]
    bounds = np.cumsum([0] + sizes)

    def _backward(g):
        return tuple(g[start:stop] for start, stop in zip(bounds[:-1], bounds[1:]))

    return tape.record(np.concatenate([value.data for value in values]), values, _backward)


def stack(values: Sequence[Value]) -> Value:
    """Rows -> matrix."""
    tape = _tape_of(values)
    for value in values:
        _vector(value, 'stack')
        _same_shape(values[0], value, 'stack')
    return tape.record(
        np.stack([value.data for value in values]), values,
        lambda g: tuple(g[row] for row in range(len(values))),
    )


def index(a: Value, position: int) -> Value:
    _vector(a, 'index')
    if not -a.shape[0] <= position < a.shape[0]:
        raise ShapeError('index: {} out of range for size {}'.format(position, a.shape[0]))

    def _backward(g):
        grad = np.zeros_like(a.data)
        grad[position] = g
        return (grad,)

    return a.tape.record(np.array(a.data[position]), (a,), _backward)


def take(a: Value, positions: Sequence[int]) -> Value:
    _vector(a, 'take')
    positions = np.asarray(positions, dtype=np.intp)

    def _backward(g):
        grad = np.zeros_like(a.data)
        np.add.at(grad, positions, g)
        return (grad,)

    return a.tape.record(a.data[positions], (a,), _backward)


def scatter(a: Value, positions: Sequence[int], size: int, fill: float = 0.0) -> Value:
    """Vector of `size` holding `a` at `positions` and `fill` elsewhere."""
    _vector(a, 'scatter')
    positions = np.asarray(positions, dtype=np.intp)
    if positions.shape[0] != a.shape[0] or len(set(positions.tolist())) != positions.shape[0]:
        raise ShapeError('scatter: positions must be distinct and match the operand size')
    data = np.full(size, fill, dtype=np.float64)
    data[positions] = a.data
    return a.tape.record(data, (a,), lambda g: (g[positions],))


def sigmoid(a: Value) -> Value:
    data = 0.5 * (1.0 + np.tanh(0.5 * a.data))
    return a.tape.record(data, (a,), lambda g: (g * data * (1.0 - data),))


def tanh(a: Value) -> Value:
    data = np.tanh(a.data)
    return a.tape.record(data, (a,), lambda g: (g * (1.0 - data * data),))


def exp(a: Value) -> Value:
    data = np.exp(a.data)
    return a.tape.record(data, (a,), lambda g: (g * data,))


def log(a: Value) -> Value:
    if np.any(a.data <= 0):
        raise NumericError('log: operand must be positive')
    return a.tape.record(np.log(a.data), (a,), lambda g: (g / a.data,))


def square(a: Value) -> Value:
    return a.tape.record(a.data * a.data, (a,), lambda g: (2.0 * g * a.data,))


def reduce_sum(a: Value) -> Value:
    return a.tape.record(np.array(a.data.sum()), (a,), lambda g: (np.full_like(a.data, g),))


def _softmax(z: np.ndarray) -> np.ndarray:
    shifted = np.exp(z - z.max())
    return shifted / shifted.sum()


def softmax(z: Value) -> Value:
    _vector(z, 'softmax')
    if z.shape[0] == 0:
        raise ShapeError('softmax of an empty vector')
    data = _softmax(z.data)
    return z.tape.record(data, (z,), lambda g: (data * (g - g @ data),))


def log_softmax(z: Value) -> Value:
    _vector(z, 'log_softmax')
    if z.shape[0] == 0:
        raise ShapeError('log_softmax of an empty vector')
    top = z.data.max()
    data = z.data - top - np.log(np.exp(z.data - top).sum())
    probs = _softmax(z.data)
    return z.tape.record(data, (z,), lambda g: (g - probs * g.sum(),))
