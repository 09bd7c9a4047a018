# built-in
from typing import Callable, Dict, Sequence

# external
import numpy as np

# app
from .._exceptions import ShapeError
from ._params import ParameterSet
from ._tape import Tape, Value, backward


LossFn = Callable[[Tape], Value]


def _evaluate(f: LossFn, params: ParameterSet, pinned: Sequence[np.ndarray]) -> float:
    loss = f(Tape(params, pinned=pinned))
    return loss.item()


def grad_check(
    f: LossFn, params: ParameterSet, eps: float = 1e-5, *,
    names: Sequence[str] = None, sample: int = None, seed: int = 0, floor: float = 1e-8,
) -> float:
    """Max relative error between backward() and central differences.

    `f` builds a scalar loss on the tape it is given. Stop-gradient values of
    the reference pass are pinned for every perturbed pass. With `sample`, only
    that many randomly chosen entries of each parameter are perturbed.
    The error of each entry is relative to the central difference, or to
    `floor` when the central difference is smaller.
    """
    params.zero_grad()
    tape = Tape(params)
    loss = f(tape)
    if loss.shape != ():
        raise ShapeError('grad_check needs a scalar loss')
    pinned = list(tape.detached)
    backward(loss)
    analytic: Dict[str, np.ndarray] = {name: params[name].grad.copy() for name in params}
    params.zero_grad()

    rng = np.random.default_rng(seed)
    worst = 0.0
    for name in names or params.names:
        value = params[name].value
        positions = np.arange(value.size)
        if sample is not None and sample < value.size:
            positions = np.sort(rng.choice(value.size, size=sample, replace=False))
        flat = value.reshape(-1)
        for position in positions:
            original = flat[position]
            flat[position] = original + eps
            plus = _evaluate(f, params, pinned)
            flat[position] = original - eps
            minus = _evaluate(f, params, pinned)
            flat[position] = original
            numeric = (plus - minus) / (2 * eps)
            exact = analytic[name].reshape(-1)[position]
            error = abs(exact - numeric) / max(floor, abs(numeric))
            worst = max(worst, error)
    return worst
