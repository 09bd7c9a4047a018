# built-in
import json
import math
from hashlib import md5
from pathlib import Path
from typing import Any, Dict, Iterator, Mapping, Tuple

# external
import numpy as np

# app
from .._exceptions import CheckpointError


Shape = Tuple[int, ...]


class Parameter:
    __slots__ = ('name', 'value', 'grad')

    def __init__(self, name: str, value: np.ndarray):
        self.name = name
        self.value = np.array(value, dtype=np.float64)
        self.grad = np.zeros_like(self.value)

    def __repr__(self) -> str:
        return 'Parameter({!r}, shape={})'.format(self.name, self.value.shape)


def lstm_shapes(prefix: str, input_size: int, hidden: int) -> Dict[str, Tuple[Shape, int]]:
    fan_in = input_size + hidden
    return {
        prefix + '.W': ((4 * hidden, fan_in), fan_in),
        prefix + '.b': ((4 * hidden,), fan_in),
    }


def agent_shapes(hidden: int, view_size: int, token_size: int) -> Dict[str, Tuple[Shape, int]]:
    """Name -> (shape, fan_in) for every learnable symbol of the agent.
    """
    H, D = hidden, view_size
    shapes: Dict[str, Tuple[Shape, int]] = {}
    # recurrent cores
    shapes.update(lstm_shapes('instr', token_size, H))
    shapes.update(lstm_shapes('nav', H + D + D, H))
    shapes.update(lstm_shapes('ep', H + D + D, H))
    shapes.update(lstm_shapes('kw', D, H))
    # attention, scoring and residual updates
    shapes.update({
        'W_att_instr': ((H, H), H),
        'W_att_pano': ((D, H), H),
        'W_att': ((D, H), H),
        'W_nv': ((D, H), H),
        'W_ep_dir': ((D, D + H), D + H),
        'W_ep_step': ((D, 2 * H), 2 * H),
        'W_o': ((D, H), H),
        'W_o_direct': ((D, D), D),
    })
    # critics
    for critic in ('critic_nv', 'critic_ep'):
        shapes[critic + '.w'] = ((H,), H)
        shapes[critic + '.b'] = ((), H)
    return shapes


class ParameterSet(Mapping[str, Parameter]):
    """Named parameters with matching gradient buffers.
    """

    def __init__(self, parameters: Mapping[str, np.ndarray], hidden_size: int):
        self.hidden_size = hidden_size
        self._params = {name: Parameter(name, parameters[name]) for name in sorted(parameters)}

    @classmethod
    def initialize(cls, hidden_size: int, view_size: int, token_size: int, seed: int) -> 'ParameterSet':
        """uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)), drawn in sorted name order."""
        rng = np.random.default_rng(seed)
        values = {}
        shapes = agent_shapes(hidden_size, view_size, token_size)
        for name in sorted(shapes):
            shape, fan_in = shapes[name]
            bound = 1.0 / math.sqrt(fan_in)
            values[name] = rng.uniform(-bound, bound, size=shape)
        return cls(values, hidden_size=hidden_size)

    def __getitem__(self, name: str) -> Parameter:
        return self._params[name]

    def __iter__(self) -> Iterator[str]:
        return iter(self._params)

    def __len__(self) -> int:
        return len(self._params)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(self._params)

    @property
    def view_size(self) -> int:
        return self._params['W_nv'].value.shape[0]

    def zero_grad(self) -> None:
        for param in self._params.values():
            param.grad[...] = 0.0

    def grad_norm(self) -> float:
        return math.sqrt(sum(float(np.sum(param.grad ** 2)) for param in self._params.values()))

    def copy(self) -> 'ParameterSet':
        return ParameterSet(
            {name: param.value.copy() for name, param in self._params.items()},
            hidden_size=self.hidden_size,
        )

    def fill(self, value: float, names=None) -> None:
        for name in names or self.names:
            self._params[name].value[...] = value

    def digest(self) -> str:
        hasher = md5()
        for name, param in self._params.items():
            hasher.update(name.encode())
            hasher.update(param.value.tobytes())
        return hasher.hexdigest()

    # checkpoints

    def to_dict(self) -> Dict[str, Any]:
        return dict(
            hidden_size=self.hidden_size,
            parameters={
                name: dict(shape=list(param.value.shape), values=param.value.ravel().tolist())
                for name, param in self._params.items()
            },
        )

    def load_dict(self, data: Mapping[str, Any]) -> None:
        """Overwrite values from a checkpoint dict, rejecting any shape mismatch.
        """
        try:
            stored = data['parameters']
        except (KeyError, TypeError):
            raise CheckpointError('checkpoint has no `parameters` table') from None
        missing = sorted(set(self._params) - set(stored))
        extra = sorted(set(stored) - set(self._params))
        if missing or extra:
            raise CheckpointError('checkpoint parameters differ: missing {}, unexpected {}'.format(
                missing, extra,
            ))
        values = {}
        for name, param in self._params.items():
            record = stored[name]
            shape = tuple(record.get('shape', ()))
            if shape != param.value.shape:
                raise CheckpointError('{}: checkpoint shape {} does not match {}'.format(
                    name, shape, param.value.shape,
                ))
            array = np.array(record.get('values', []), dtype=np.float64)
            if array.size != param.value.size or not np.all(np.isfinite(array)):
                raise CheckpointError('{}: checkpoint values are malformed'.format(name))
            values[name] = array.reshape(shape)
        for name, array in values.items():
            self._params[name].value[...] = array


def save_checkpoint(params: ParameterSet, path: Path) -> None:
    path.write_text(json.dumps(params.to_dict()))


def load_checkpoint(params: ParameterSet, path: Path) -> ParameterSet:
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError) as exc:
        raise CheckpointError('cannot read checkpoint {}: {}'.format(path, exc)) from exc
    params.load_dict(data)
    return params
