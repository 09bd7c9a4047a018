# built-in
import logging
from enum import IntEnum
from types import MappingProxyType
from typing import Tuple, Union

# app
from ._version import __version__


NAME = 'activenav'
VERSION = __version__

LOG = logging.getLogger(NAME)
EXTRA_VERBOSE = 5
logging.addLevelName(EXTRA_VERBOSE, 'EXTRA_VERBOSE')

# action value of the STOP choice; distributions keep STOP in the last slot
STOP = -1

SUCCESS_RADIUS = 3.0


# desk-scale defaults, every section can be overridden from a config file
DEFAULTS = MappingProxyType(dict(
    world=dict(
        n_viewpoints=24,
        k_max=6,
        d_land=8,
        ambiguity=0.3,
        sigma_instr=0.1,
        instruction_corruption=0.0,
        min_hops=3,
        max_hops=7,
    ),
    data=dict(
        seed=0,
        train_envs=4,
        val_envs=2,
        test_envs=2,
        tasks_per_env=25,
    ),
    train=dict(
        mode='full',
        gamma=0.9,
        beta=-0.1,
        success_radius=SUCCESS_RADIUS,
        il_weight=0.2,
        lr=0.05,
        clip_norm=5.0,
        smax_schedule=[1, 2, 3, 4],
        epochs_per_stage=3,
        batch_size=8,
        use_il_nv=True,
        use_rl_nv=True,
        use_il_ep=True,
        use_rl_ep=True,
        seed=0,
        max_steps=15,
        hidden_size=64,
        reward_baseline='round',
        lazy=True,
        direct_knowledge=False,
        explore_all=False,
        cache=False,
    ),
    eval=dict(
        radius=SUCCESS_RADIUS,
        or_scope='all',
        split='test',
    ),
    experiment=dict(
        seeds=[0, 1, 2, 3, 4],
        variants=[],
    ),
))


class ExitCode(IntEnum):
    OK = 0

    # CLI entrypoint
    NO_COMMAND = 1
    INVALID_COMMAND = 2

    # inputs
    INVALID_CONFIG = 11
    INVALID_WORLD = 12
    BAD_CHECKPOINT = 13

    # training and replay
    DIVERGED = 21
    REPLAY_MISMATCH = 22

    TOO_MANY_ARGS = 31
    NOT_ENOUGH_ARGS = 32


CommandResult = Tuple[Union[int, ExitCode], str]
