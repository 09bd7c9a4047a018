# app
from ._colors import color_rate, colored
from ._config import read_config, section_from_dict
from ._snapshot import Snapshot, prepare_cache


__all__ = [
    'read_config', 'section_from_dict',
    'colored', 'color_rate',
    'Snapshot', 'prepare_cache',
]
