# app
from ._params import ParameterSet


def sgd_update(params: ParameterSet, lr: float, clip_norm: float = None) -> float:
    """theta <- theta - lr * g after clipping the global gradient norm; zeroes gradients.

    Returns the gradient norm before clipping.
    """
    norm = params.grad_norm()
    factor = 1.0
    if clip_norm and norm > clip_norm:
        factor = clip_norm / norm
    for param in params.values():
        param.value -= lr * factor * param.grad
    params.zero_grad()
    return norm
