# built-in
import csv
from io import StringIO
from pathlib import Path

# project
from activenav._cli import main
from activenav._constants import ExitCode
from activenav.training import LOG_COLUMNS

# app
from ..utils import chdir, small_project


def test_train(capsys, tmp_path: Path):
    small_project(tmp_path)
    with chdir(tmp_path):
        result = main(['train', '--out', 'run', '--format', 'csv'])
    assert result == (0, '')
    assert (tmp_path / 'run' / 'stage-0.json').exists()
    assert (tmp_path / 'run' / 'stage-1.json').exists()
    assert (tmp_path / 'run' / 'train_log.csv').exists()

    captured = capsys.readouterr()
    lines = captured.out.splitlines()
    rows = list(csv.reader(StringIO('\n'.join(lines[:3]))))
    assert tuple(rows[0]) == LOG_COLUMNS
    assert [row[LOG_COLUMNS.index('smax')] for row in rows[1:]] == ['1', '2']
    assert lines[3].startswith('checkpoint:')
    assert 'stage-1.json' in lines[3]


def test_train_smax_flag(capsys, tmp_path: Path):
    small_project(tmp_path)
    with chdir(tmp_path):
        result = main(['train', '--out', 'run', '--format', 'json', '--smax', '3'])
    assert result == (0, '')
    assert (tmp_path / 'run' / 'stage-2.json').exists()
    assert not (tmp_path / 'run' / 'stage-3.json').exists()


def test_train_basic_mode(tmp_path: Path):
    small_project(tmp_path)
    with chdir(tmp_path):
        result = main(['train', '--out', 'run', '--mode', 'basic', '--format', 'csv'])
    assert result == (0, '')
    with (tmp_path / 'run' / 'train_log.csv').open() as stream:
        rows = list(csv.DictReader(stream))
    assert [row['smax'] for row in rows] == ['1', '1']


def test_train_from_saved_worlds(tmp_path: Path):
    small_project(tmp_path)
    with chdir(tmp_path):
        assert main(['gen-world', '--out', 'data']) == (0, '')
        result = main(['train', '--out', 'run', '--data', 'data', '--format', 'csv'])
    assert result == (0, '')


def test_train_invalid_config(tmp_path: Path):
    small_project(tmp_path)
    with chdir(tmp_path):
        result = main(['train', '--out', 'run', '--config', 'pyproject.toml', '--smax', '0'])
    assert result[0] == ExitCode.INVALID_CONFIG
    assert not (tmp_path / 'run').exists()
