# built-in
import math
from typing import List, Mapping, Optional, Tuple

# external
import networkx as nx

# app
from .._constants import STOP
from .._exceptions import WorldError
from ._types import Environment


def route(
    graph: nx.Graph, source: int, target: int,
    to_target: Optional[Mapping[int, float]] = None,
) -> Tuple[List[int], float]:
    """Shortest path over edge `length`, ties broken by the smallest id sequence.

    `to_target` may carry precomputed distances from every node to `target`.
    """
    if source not in graph:
        raise WorldError('unknown viewpoint: {}'.format(source))
    if target not in graph:
        raise WorldError('unknown viewpoint: {}'.format(target))
    if source == target:
        return [source], 0.0
    if to_target is None:
        to_target = nx.single_source_dijkstra_path_length(graph, target, weight='length')
    if source not in to_target:
        raise WorldError('no route from {} to {}'.format(source, target))

    path = [source]
    total = 0.0
    node = source
    while node != target:
        for candidate in sorted(graph[node]):
            length = graph[node][candidate]['length']
            if candidate not in to_target:
                continue
            if math.isclose(length + to_target[candidate], to_target[node], rel_tol=1e-12, abs_tol=1e-9):
                break
        else:
            raise WorldError('broken distance table at {}'.format(node))
        path.append(candidate)
        total += length
        node = candidate
    return path, total


def shortest_path(env: Environment, source: int, target: int) -> Tuple[List[int], float]:
    if source not in env:
        raise WorldError('unknown viewpoint: {}'.format(source))
    if target not in env:
        raise WorldError('unknown viewpoint: {}'.format(target))
    return route(env.graph, source, target, to_target=env.distances[target])


def teacher_action(env: Environment, current: int, goal: int) -> int:
    """Candidate index of the next viewpoint on the shortest route, or STOP.
    """
    path, _ = shortest_path(env, current, goal)
    if len(path) == 1:
        return STOP
    return env.neighbors(current).index(path[1])
