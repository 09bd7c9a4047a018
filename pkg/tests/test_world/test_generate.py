# external
import networkx as nx
import numpy as np
import pytest

# project
from activenav._exceptions import ConfigError, WorldError
from activenav.world import WorldConfig, env_to_dict, generate_world


def test_same_seed_same_world():
    config = WorldConfig()
    assert env_to_dict(generate_world(config, seed=3)) == env_to_dict(generate_world(config, seed=3))
    assert env_to_dict(generate_world(config, seed=3)) != env_to_dict(generate_world(config, seed=4))


@pytest.mark.parametrize('seed', [0, 1, 2, 7])
@pytest.mark.parametrize('k_max', [3, 6])
def test_world_invariants(seed, k_max):
    config = WorldConfig(n_viewpoints=20, k_max=k_max)
    env = generate_world(config, seed=seed)
    assert env.name == 'world-{}'.format(seed)
    assert len(env.ids) == 20
    assert nx.is_connected(env.graph)
    for node in env.ids:
        assert 2 <= len(env.neighbors(node)) <= k_max
        for other in env.neighbors(node):
            assert 1.0 <= env.edge_length(node, other) <= 3.0
    assert env.view_size == config.d_land + 4


def test_ring_when_two_neighbors():
    env = generate_world(WorldConfig(n_viewpoints=8, k_max=2), seed=0)
    assert all(len(env.neighbors(node)) == 2 for node in env.ids)
    assert env.neighbors(0) == (1, 7)
    assert env.edge_length(0, 1) == pytest.approx(2.0, abs=0.01)


def test_ambiguity_copies_landmarks():
    env = generate_world(WorldConfig(n_viewpoints=20, ambiguity=0.5), seed=0)
    landmarks = np.stack([env.landmark(node) for node in env.ids])
    gaps = [
        np.linalg.norm(landmarks[a] - landmarks[b])
        for a in range(len(landmarks)) for b in range(a + 1, len(landmarks))
    ]
    assert min(gaps) < 0.5


@pytest.mark.parametrize('seed', [1, 2])
def test_ambiguity_gives_near_duplicate_landmarks(seed):
    env = generate_world(WorldConfig(n_viewpoints=40, ambiguity=0.3), seed=seed)
    landmarks = np.stack([env.landmark(node) for node in env.ids])
    unit = landmarks / np.linalg.norm(landmarks, axis=1, keepdims=True)
    cosine = unit @ unit.T
    np.fill_diagonal(cosine, -1.0)
    assert cosine.max() > 0.95


@pytest.mark.parametrize('params', [
    dict(n_viewpoints=3),
    dict(k_max=1),
    dict(d_land=1),
])
def test_invalid_world(params):
    with pytest.raises(WorldError):
        generate_world(WorldConfig(**params), seed=0)


@pytest.mark.parametrize('params', [
    dict(ambiguity=1.5),
    dict(sigma_instr=-0.1),
    dict(min_hops=2),
    dict(min_hops=5, max_hops=4),
    dict(max_hops=9),
])
def test_invalid_config(params):
    with pytest.raises(ConfigError):
        WorldConfig(**params)


def test_config_from_dict():
    config = WorldConfig.from_dict({'n_viewpoints': 12, 'ambiguity': 0})
    assert config.n_viewpoints == 12
    assert config.ambiguity == 0.0
    assert isinstance(config.ambiguity, float)

    with pytest.raises(ConfigError, match='unknown world options: rooms'):
        WorldConfig.from_dict({'rooms': 3})
    with pytest.raises(ConfigError, match='must be an integer'):
        WorldConfig.from_dict({'k_max': 2.5})


@pytest.mark.parametrize('n', [4, 9, 10])
def test_ladder(n):
    env = generate_world(WorldConfig(n_viewpoints=n, k_max=3), seed=0)
    degrees = sorted(len(env.neighbors(node)) for node in env.ids)
    assert degrees[0] == 2
    assert degrees[-1] <= 3
