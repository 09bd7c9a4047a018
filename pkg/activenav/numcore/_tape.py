# built-in
from typing import Callable, List, Optional, Sequence, Tuple

# external
import numpy as np

# app
from .._exceptions import NumericError, ShapeError, TapeError
from ._params import ParameterSet


Grads = Tuple[Optional[np.ndarray], ...]
BackwardFn = Callable[[np.ndarray], Grads]


class _Node:
    __slots__ = ('parents', 'backward', 'param')

    def __init__(self, parents: Tuple[int, ...], backward: Optional[BackwardFn], param: Optional[str]):
        self.parents = parents
        self.backward = backward
        self.param = param


class Value:
    """A float64 scalar, vector or matrix recorded on a tape.
    """
    __slots__ = ('data', 'tape', 'index')

    def __init__(self, data: np.ndarray, tape: 'Tape', index: int):
        self.data = data
        self.tape = tape
        self.index = index

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.data.shape

    def item(self) -> float:
        return float(self.data)

    def __repr__(self) -> str:
        return 'Value(shape={}, index={})'.format(self.shape, self.index)

    # operators delegate to the primitive ops so they are recorded

    def __add__(self, other: 'Value') -> 'Value':
        from ._ops import add
        return add(self, other)

    def __sub__(self, other: 'Value') -> 'Value':
        from ._ops import sub
        return sub(self, other)

    def __mul__(self, other: 'Value') -> 'Value':
        from ._ops import mul
        return mul(self, other)

    def __neg__(self) -> 'Value':
        from ._ops import neg
        return neg(self)


class Tape:
    """Records operations for one forward pass.

    Stop-gradient values are kept in `detached`, in call order. Passing them
    back as `pinned` makes a new pass reuse them verbatim, which is how finite
    differences evaluate the same function the analytic gradient sees.
    """

    def __init__(self, params: ParameterSet, pinned: Sequence[np.ndarray] = None):
        self.params = params
        self.detached: List[np.ndarray] = []
        self.consumed = False
        self._nodes: List[_Node] = []
        self._param_values = {}  # type: dict
        self._pinned = list(pinned) if pinned is not None else None

    def __len__(self) -> int:
        return len(self._nodes)

    def _check(self) -> None:
        if self.consumed:
            raise TapeError('tape was already consumed by backward')

    def _append(self, data: np.ndarray, parents: Tuple[int, ...], backward, param=None) -> Value:
        self._check()
        if not np.all(np.isfinite(data)):
            raise NumericError('non-finite value recorded on tape')
        self._nodes.append(_Node(parents, backward, param))
        return Value(data, self, len(self._nodes) - 1)

    def param(self, name: str) -> Value:
        """The tape-bound value of a parameter, created once per tape."""
        value = self._param_values.get(name)
        if value is None:
            data = self.params[name].value
            value = self._append(data, (), None, param=name)
            self._param_values[name] = value
        return value

    def lstm(self, prefix: str) -> Tuple[Value, Value]:
        return self.param(prefix + '.W'), self.param(prefix + '.b')

    def constant(self, data) -> Value:
        return self._append(np.array(data, dtype=np.float64), (), None)

    def zeros(self, size: int) -> Value:
        return self.constant(np.zeros(size))

    def record(self, data: np.ndarray, parents: Sequence[Value], backward: BackwardFn) -> Value:
        indices = []
        for parent in parents:
            if parent.tape is not self:
                raise TapeError('values from different tapes cannot be combined')
            indices.append(parent.index)
        return self._append(data, tuple(indices), backward)

    def detach(self, value: Value) -> Value:
        if value.tape is not self:
            raise TapeError('values from different tapes cannot be combined')
        if self._pinned is not None:
            position = len(self.detached)
            if position >= len(self._pinned):
                raise TapeError('pinned detach values exhausted')
            data = self._pinned[position]
            if data.shape != value.data.shape:
                raise ShapeError('pinned detach value has shape {}, expected {}'.format(
                    data.shape, value.data.shape,
                ))
        else:
            data = value.data.copy()
        self.detached.append(data)
        return self.constant(data)

    def clear(self) -> None:
        self._nodes = []
        self._param_values = {}
        self.consumed = True


def backward(loss: Value) -> None:
    """Accumulate d(loss)/d(param) into the parameter gradients and clear the tape.
    """
    tape = loss.tape
    if tape.consumed:
        raise TapeError('backward called twice without a new forward pass')
    if loss.shape != ():
        raise ShapeError('loss must be a scalar, got shape {}'.format(loss.shape))

    nodes = tape._nodes
    grads: List[Optional[np.ndarray]] = [None] * len(nodes)
    grads[loss.index] = np.ones(())
    for idx in range(loss.index, -1, -1):
        grad = grads[idx]
        if grad is None:
            continue
        node = nodes[idx]
        if node.param is not None:
            tape.params[node.param].grad += grad
            continue
        if node.backward is None:
            continue
        for parent, parent_grad in zip(node.parents, node.backward(grad)):
            if parent_grad is None:
                continue
            if grads[parent] is None:
                grads[parent] = parent_grad
            else:
                grads[parent] = grads[parent] + parent_grad
        grads[idx] = None
    tape.clear()
