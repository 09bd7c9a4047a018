# built-in
import json

# external
import numpy as np
import pytest

# project
from activenav._exceptions import ConfigError, WorldError
from activenav.world import (
    DataConfig, WorldConfig, build_dataset, build_split, env_from_dict, env_to_dict,
    load_environment, load_split, save_environment, save_split,
)

# app
from ..utils import six_world


WORLD = WorldConfig(n_viewpoints=12, min_hops=3, max_hops=4)
DATA = DataConfig(seed=1, train_envs=2, val_envs=1, test_envs=1, tasks_per_env=3)


def test_splits_do_not_share_worlds():
    dataset = build_dataset(WORLD, DATA)
    assert set(dataset) == {'train', 'val', 'test'}
    assert len(dataset['train'].envs) == 2
    assert len(dataset['train'].tasks) == 6
    names = [set(split.envs) for split in dataset.values()]
    assert not names[0] & names[1]
    assert not names[0] & names[2]
    assert not names[1] & names[2]
    for split in dataset.values():
        for task in split.tasks:
            assert task.env_name in split.envs


def test_unknown_split():
    with pytest.raises(ConfigError, match='unknown split'):
        build_split(WORLD, DATA, 'dev')


def test_negative_counts():
    with pytest.raises(ConfigError, match='data.val_envs'):
        DataConfig(val_envs=-1)


def test_split_files(tmp_path):
    split = build_split(WORLD, DATA, 'val')
    save_split(split, tmp_path)
    assert (tmp_path / 'tasks.json').exists()
    assert len(list((tmp_path / 'worlds').glob('*.json'))) == 1

    loaded = load_split(tmp_path)
    assert set(loaded.envs) == set(split.envs)
    for name, env in split.envs.items():
        assert env_to_dict(loaded.envs[name]) == env_to_dict(env)
    assert [task.to_dict() for task in loaded.tasks] == [task.to_dict() for task in split.tasks]


def test_split_without_tasks(tmp_path):
    with pytest.raises(WorldError, match='no tasks.json'):
        load_split(tmp_path)


def test_split_with_missing_world(tmp_path):
    split = build_split(WORLD, DATA, 'val')
    save_split(split, tmp_path)
    for path in (tmp_path / 'worlds').glob('*.json'):
        path.unlink()
    with pytest.raises(WorldError, match='missing worlds'):
        load_split(tmp_path)


def test_environment_file_keeps_floats(tmp_path):
    env = six_world()
    path = tmp_path / 'six.json'
    save_environment(env, path)
    loaded = load_environment(path)
    for node in env.ids:
        assert np.array_equal(loaded.landmark(node), env.landmark(node))
        assert np.array_equal(loaded.position(node), env.position(node))
    assert loaded.distance(0, 5) == env.distance(0, 5)


def test_broken_json_reports_line(tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{\n"name": "x",\n"edges": [\n')
    with pytest.raises(WorldError, match='line 4'):
        load_environment(path)


@pytest.mark.parametrize('patch, message', [
    (lambda data: data.pop('edges'), 'missing field `edges`'),
    (lambda data: data['viewpoints'][1].pop('landmark'), r'viewpoints\[1\]: missing field `landmark`'),
    (lambda data: data['viewpoints'][0].update(pos=[0, 0]), r'viewpoints\[0\].pos: expected 3 numbers'),
    (lambda data: data['viewpoints'][2].update(id='2'), r'viewpoints\[2\].id: expected an integer'),
    (lambda data: data['edges'].append([0]), r'edges\[7\]: expected a pair'),
    (lambda data: data['edges'].append([0, 9]), 'unknown viewpoint'),
    (lambda data: data['edges'].append([0, 1]), 'duplicated'),
])
def test_invalid_environment(patch, message):
    data = json.loads(json.dumps(env_to_dict(six_world())))
    patch(data)
    with pytest.raises(WorldError, match=message):
        env_from_dict(data)


def test_disconnected_environment():
    data = env_to_dict(six_world())
    data['edges'] = [[0, 1], [1, 2], [3, 4], [4, 5]]
    with pytest.raises(WorldError):
        env_from_dict(data)
