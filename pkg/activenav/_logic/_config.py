# built-in
import collections.abc
import json
from collections import defaultdict
from dataclasses import fields
from pathlib import Path
from typing import Any, Dict, Mapping, Union

# external
import toml

# app
from .._constants import EXTRA_VERBOSE, LOG as ROOT_LOG
from .._exceptions import ConfigError


LOG = ROOT_LOG.getChild(__name__)


def read_config(*paths: Union[str, Path]) -> Dict[str, Any]:
    """Read and merge configs. Later sources override earlier ones.
    """
    config = dict()  # type: Dict[str, Any]
    for path in paths:
        if isinstance(path, Path):
            new_config = _read_local(path)
        elif path.startswith(('https://', 'http://')):
            new_config = _read_remote(path)
        elif Path(path).exists():
            new_config = _read_local(Path(path))
        else:
            raise ConfigError('config file not found: {}'.format(path))
        LOG.log(EXTRA_VERBOSE, 'CONFIG: incoming from `%s`:```%s```', path, new_config)
        config = _merge_configs(config, new_config)
        LOG.log(EXTRA_VERBOSE, 'CONFIG: after merging from `%s`:```%s```', path, config)
    return config


def _read_local(path: Path) -> Dict[str, Any]:
    if not path.exists():
        raise ConfigError('config file not found: {}'.format(path))
    with path.open('r') as stream:
        return _parse_config(stream.read(), json_format=path.suffix == '.json')


def _read_remote(url: str) -> Dict[str, Any]:
    import urllib3  # isort: skip
    http = urllib3.PoolManager()
    response = http.request('GET', url)
    if response.status != 200:
        raise ConfigError('cannot fetch config {}: HTTP {}'.format(url, response.status))
    return _parse_config(response.data.decode(), json_format=url.endswith('.json'))


def _deep_update(old_dict, new_dict) -> Dict[str, Any]:
    for key, value in new_dict.items():
        if isinstance(value, collections.abc.Mapping):
            old_dict[key] = _deep_update(old_dict.get(key, {}), value)
        else:
            old_dict[key] = value
    return old_dict


def _merge_configs(*configs) -> Dict[str, Any]:
    config: Dict[str, Any] = defaultdict(dict)
    for subconfig in configs:
        _deep_update(config, subconfig)

    return dict(config)


def _parse_config(content: str, json_format: bool = False) -> Dict[str, Any]:
    try:
        if json_format:
            raw = json.loads(content)
        else:
            raw = toml.loads(content)
    except (ValueError, toml.TomlDecodeError) as exc:
        raise ConfigError('cannot parse config: {}'.format(exc)) from exc
    if not isinstance(raw, dict):
        raise ConfigError('config root must be a table')

    # pyproject.toml keeps everything under [tool.activenav]
    if 'tool' in raw:
        raw = raw['tool'].get('activenav', {})
    config = {
        key: dict(value) if isinstance(value, collections.abc.Mapping) else value
        for key, value in raw.items()
    }

    if 'base' in config:
        paths = config.pop('base')
        if not isinstance(paths, list):
            paths = [paths]
        config = _merge_configs(read_config(*paths), config)

    return config


def section_from_dict(cls, data: Mapping[str, Any], section: str):
    """Build a config dataclass from one config section, checking names and types.
    """
    known = {f.name: f for f in fields(cls)}
    unknown = sorted(set(data) - set(known))
    if unknown:
        raise ConfigError('unknown {} options: {}'.format(section, ', '.join(unknown)))
    values = {}
    for name, value in data.items():
        default = known[name].default
        if isinstance(default, bool) and not isinstance(value, bool):
            raise ConfigError('{}.{} must be a boolean'.format(section, name))
        if isinstance(default, int) and not isinstance(default, bool):
            if not isinstance(value, int) or isinstance(value, bool):
                raise ConfigError('{}.{} must be an integer'.format(section, name))
        if isinstance(default, float):
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ConfigError('{}.{} must be a number'.format(section, name))
            value = float(value)
        if isinstance(default, str) and not isinstance(value, str):
            raise ConfigError('{}.{} must be a string'.format(section, name))
        if isinstance(default, tuple):
            if not isinstance(value, (list, tuple)):
                raise ConfigError('{}.{} must be a list'.format(section, name))
            value = tuple(value)
        values[name] = value
    return cls(**values)
