# built-in
from dataclasses import asdict, dataclass
from typing import Any, Dict, Mapping, Tuple

# app
from .._constants import SUCCESS_RADIUS
from .._exceptions import ConfigError
from .._logic import section_from_dict
from ..explorer import Mode


REWARD_BASELINES = ('round', 'step')


@dataclass(frozen=True)
class TrainConfig:
    mode: str = Mode.FULL.value
    gamma: float = 0.9
    beta: float = -0.1
    success_radius: float = SUCCESS_RADIUS
    il_weight: float = 0.2
    lr: float = 0.05
    clip_norm: float = 5.0
    smax_schedule: Tuple[int, ...] = (1, 2, 3, 4)
    epochs_per_stage: int = 3
    batch_size: int = 8
    use_il_nv: bool = True
    use_rl_nv: bool = True
    use_il_ep: bool = True
    use_rl_ep: bool = True
    seed: int = 0
    max_steps: int = 15
    hidden_size: int = 64
    reward_baseline: str = 'round'
    lazy: bool = True
    direct_knowledge: bool = False
    explore_all: bool = False
    cache: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, 'smax_schedule', tuple(self.smax_schedule))
        try:
            Mode(self.mode)
        except ValueError:
            raise ConfigError('train.mode must be one of {}'.format(
                ', '.join(mode.value for mode in Mode),
            )) from None
        if not 0.0 < self.gamma <= 1.0:
            raise ConfigError('train.gamma must be in (0, 1]')
        if self.beta > 0:
            raise ConfigError('train.beta must not be positive')
        if self.success_radius <= 0:
            raise ConfigError('train.success_radius must be positive')
        if self.il_weight < 0:
            raise ConfigError('train.il_weight must be non-negative')
        if self.lr <= 0:
            raise ConfigError('train.lr must be positive')
        if not self.smax_schedule or any(not isinstance(smax, int) or smax < 1 for smax in self.smax_schedule):
            raise ConfigError('train.smax_schedule must be a non-empty list of positive integers')
        if list(self.smax_schedule) != sorted(self.smax_schedule):
            raise ConfigError('train.smax_schedule must be nondecreasing')
        for name in ('epochs_per_stage', 'batch_size', 'max_steps', 'hidden_size'):
            if getattr(self, name) < 1:
                raise ConfigError('train.{} must be positive'.format(name))
        if self.reward_baseline not in REWARD_BASELINES:
            raise ConfigError('train.reward_baseline must be one of {}'.format(', '.join(REWARD_BASELINES)))
        if self.direct_knowledge and self.mode_enum is Mode.FULL and max(self.smax_schedule) > 1:
            raise ConfigError('train.direct_knowledge needs smax = 1')
        if self.explore_all and self.mode_enum is not Mode.FULL:
            raise ConfigError('train.explore_all needs mode = full')

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'TrainConfig':
        return section_from_dict(cls, data, section='train')

    def to_dict(self) -> Dict[str, Any]:
        result = asdict(self)
        result['smax_schedule'] = list(self.smax_schedule)
        return result

    @property
    def mode_enum(self) -> Mode:
        return Mode(self.mode)

    def stages(self) -> Tuple[int, ...]:
        """S_max of every curriculum stage; single-step modes train every stage with 1."""
        if self.mode_enum is Mode.FULL:
            return self.smax_schedule
        return tuple(1 for _ in self.smax_schedule)
