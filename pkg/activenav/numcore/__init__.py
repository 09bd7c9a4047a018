"""Small reverse-mode differentiation core on float64 numpy arrays.
"""

# app
from ._gradcheck import grad_check
from ._layers import LSTMState, attend, lstm_step, value_head
from ._ops import (
    add, add_n, concat, dot, exp, index, linear, log, log_softmax, mul, neg, reduce_sum, scale,
    scatter, sigmoid, softmax, square, stack, sub, take, tanh, transpose,
)
from ._optim import sgd_update
from ._params import Parameter, ParameterSet, agent_shapes, load_checkpoint, save_checkpoint
from ._tape import Tape, Value, backward


__all__ = [
    'Value', 'Tape', 'backward',
    'Parameter', 'ParameterSet', 'agent_shapes', 'save_checkpoint', 'load_checkpoint',
    'add', 'add_n', 'sub', 'mul', 'neg', 'scale', 'linear', 'transpose', 'dot',
    'concat', 'stack', 'index', 'take', 'scatter',
    'sigmoid', 'tanh', 'exp', 'log', 'square', 'reduce_sum', 'softmax', 'log_softmax',
    'attend', 'lstm_step', 'value_head', 'LSTMState',
    'grad_check', 'sgd_update',
]
