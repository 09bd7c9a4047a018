# built-in
import json
from pathlib import Path
from typing import Any, Dict, List, Mapping, Sequence

# external
import numpy as np

# app
from .._exceptions import WorldError
from ._types import Environment, Task, Viewpoint


def env_to_dict(env: Environment) -> Dict[str, Any]:
    return dict(
        name=env.name,
        k_max=env.k_max,
        viewpoints=[
            dict(id=vp.id, pos=vp.position.tolist(), landmark=vp.landmark.tolist())
            for vp in env.viewpoints
        ],
        edges=[[a, b] for a, b in sorted(tuple(sorted(edge)) for edge in env.graph.edges)],
    )


def _numbers(value: Any, where: str, size: int = None) -> np.ndarray:
    if not isinstance(value, list) or not all(
        isinstance(item, (int, float)) and not isinstance(item, bool) for item in value
    ):
        raise WorldError('{}: expected a list of numbers'.format(where))
    if size is not None and len(value) != size:
        raise WorldError('{}: expected {} numbers, got {}'.format(where, size, len(value)))
    return np.array(value, dtype=np.float64)


def env_from_dict(data: Mapping[str, Any]) -> Environment:
    """Validate a decoded environment file, failing on the first bad field.
    """
    if not isinstance(data, Mapping):
        raise WorldError('environment: expected an object')
    for key in ('viewpoints', 'edges'):
        if key not in data:
            raise WorldError('environment: missing field `{}`'.format(key))
    if not isinstance(data['viewpoints'], list):
        raise WorldError('viewpoints: expected a list')
    viewpoints = []
    for idx, raw in enumerate(data['viewpoints']):
        where = 'viewpoints[{}]'.format(idx)
        if not isinstance(raw, Mapping):
            raise WorldError('{}: expected an object'.format(where))
        for key in ('id', 'pos', 'landmark'):
            if key not in raw:
                raise WorldError('{}: missing field `{}`'.format(where, key))
        if not isinstance(raw['id'], int) or isinstance(raw['id'], bool):
            raise WorldError('{}.id: expected an integer'.format(where))
        viewpoints.append(Viewpoint(
            id=raw['id'],
            position=_numbers(raw['pos'], where + '.pos', size=3),
            landmark=_numbers(raw['landmark'], where + '.landmark'),
        ))
    if not isinstance(data['edges'], list):
        raise WorldError('edges: expected a list')
    edges = []
    for idx, raw in enumerate(data['edges']):
        if not isinstance(raw, list) or len(raw) != 2 or not all(
            isinstance(item, int) and not isinstance(item, bool) for item in raw
        ):
            raise WorldError('edges[{}]: expected a pair of viewpoint ids'.format(idx))
        edges.append((raw[0], raw[1]))
    k_max = data.get('k_max', 6)
    if not isinstance(k_max, int) or isinstance(k_max, bool):
        raise WorldError('k_max: expected an integer')
    return Environment.build(
        name=str(data.get('name', 'world')),
        viewpoints=viewpoints,
        edges=edges,
        k_max=k_max,
    )


def _decode(path: Path) -> Any:
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise WorldError('{}: line {}: {}'.format(path, exc.lineno, exc.msg)) from exc


def save_environment(env: Environment, path: Path) -> None:
    # json writes the shortest repr that round-trips, so floats reload bit-exact
    path.write_text(json.dumps(env_to_dict(env), indent=1))


def load_environment(path: Path) -> Environment:
    data = _decode(path)
    try:
        return env_from_dict(data)
    except WorldError as exc:
        raise WorldError('{}: {}'.format(path, exc)) from exc


def save_tasks(tasks: Sequence[Task], path: Path) -> None:
    path.write_text(json.dumps([task.to_dict() for task in tasks], indent=1))


def load_tasks(path: Path) -> List[Task]:
    data = _decode(path)
    if not isinstance(data, list):
        raise WorldError('{}: expected a list of tasks'.format(path))
    tasks = []
    for idx, raw in enumerate(data):
        try:
            tasks.append(Task.from_dict(raw))
        except WorldError as exc:
            raise WorldError('{}: tasks[{}]: {}'.format(path, idx, exc)) from exc
    return tasks
