# built-in
import math

# external
import networkx as nx
import numpy as np
import pytest

# project
from activenav._constants import STOP
from activenav._exceptions import WorldError
from activenav.world import WorldConfig, generate_world, route, shortest_path, teacher_action

# app
from ..utils import line_world, make_env, six_world


def test_shortest_path_on_line():
    env = line_world(4)
    path, distance = shortest_path(env, 0, 3)
    assert path == [0, 1, 2, 3]
    assert distance == pytest.approx(6.0)
    assert env.distance(0, 3) == pytest.approx(6.0)


def test_ties_prefer_smallest_ids():
    # two equal routes 0-1-3 and 0-2-3
    env = make_env([(0, 0), (2, 0), (0, 2), (2, 2)], [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert shortest_path(env, 0, 3)[0] == [0, 1, 3]
    assert shortest_path(env, 3, 0)[0] == [3, 1, 0]


def test_route_on_subgraph():
    env = six_world()
    graph = env.graph.subgraph([0, 3, 4, 5])
    path, distance = route(graph, 0, 5)
    assert path == [0, 3, 4, 5]
    assert distance == pytest.approx(6.0)


def test_route_to_self():
    env = six_world()
    assert route(env.graph, 4, 4) == ([4], 0.0)


def test_unreachable():
    env = six_world()
    graph = env.graph.subgraph([0, 1, 5])
    with pytest.raises(WorldError, match='no route'):
        route(graph, 0, 5)


def test_unknown_viewpoint():
    with pytest.raises(WorldError, match='unknown viewpoint'):
        shortest_path(six_world(), 0, 17)


@pytest.mark.parametrize('current, goal, expected', [
    (0, 0, STOP),
    (0, 2, 0),   # neighbors of 0 are (1, 3)
    (0, 3, 1),
    (4, 0, 0),   # neighbors of 4 are (1, 3, 5), ties go to 1
    (5, 3, 1),   # neighbors of 5 are (2, 4)
])
def test_teacher_action(current, goal, expected):
    assert teacher_action(six_world(), current, goal) == expected


def path_length(env, path):
    return sum(env.edge_length(a, b) for a, b in zip(path, path[1:]))


@pytest.mark.parametrize('seed', [0, 3])
def test_shortest_path_against_all_simple_paths(seed):
    env = generate_world(WorldConfig(n_viewpoints=20, k_max=4), seed=seed)
    rng = np.random.default_rng(seed)
    for _ in range(4):
        source, target = rng.choice(20, size=2, replace=False).tolist()
        path, distance = shortest_path(env, source, target)
        assert path[0] == source and path[-1] == target
        assert distance == pytest.approx(path_length(env, path))

        # every edge is at least 1 m long, so longer paths cannot be shorter
        candidates = list(nx.all_simple_paths(env.graph, source, target, cutoff=int(math.floor(distance))))
        best = min(path_length(env, candidate) for candidate in candidates)
        assert distance == pytest.approx(best, abs=1e-9)
        ties = [candidate for candidate in candidates if math.isclose(path_length(env, candidate), best, abs_tol=1e-9)]
        assert path == min(ties)


@pytest.mark.parametrize('seed', [0, 1, 2])
def test_shortest_path_is_symmetric(seed):
    env = generate_world(WorldConfig(n_viewpoints=20), seed=seed)
    for a in env.ids:
        for b in env.ids:
            assert shortest_path(env, a, b)[1] == pytest.approx(shortest_path(env, b, a)[1])


@pytest.mark.parametrize('seed', [0, 1, 2, 5])
@pytest.mark.parametrize('k_max', [2, 3, 6])
def test_following_the_teacher(seed, k_max):
    env = generate_world(WorldConfig(n_viewpoints=15, k_max=k_max), seed=seed)
    goal = env.ids[seed % len(env.ids)]
    for start in env.ids:
        path, _ = shortest_path(env, start, goal)
        node = start
        steps = 0
        while True:
            action = teacher_action(env, node, goal)
            if action == STOP:
                break
            nxt = env.neighbors(node)[action]
            assert env.distance(nxt, goal) < env.distance(node, goal)
            node = nxt
            steps += 1
        assert node == goal
        assert steps == len(path) - 1
