# built-in
from types import MappingProxyType

# app
from ._ablate import ablate_command
from ._eval import eval_command
from ._gen_world import gen_world_command
from ._replay import replay_command
from ._stats import stats_command
from ._train import train_command
from ._version import version_command


__all__ = [
    'COMMANDS',

    'ablate_command',
    'eval_command',
    'gen_world_command',
    'replay_command',
    'stats_command',
    'train_command',
    'version_command',
]


COMMANDS = MappingProxyType({
    'ablate': ablate_command,
    'eval': eval_command,
    'gen-world': gen_world_command,
    'replay': replay_command,
    'stats': stats_command,
    'train': train_command,
    '--version': version_command,
})
