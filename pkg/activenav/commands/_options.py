# built-in
import logging
import sys
from argparse import ArgumentParser, Namespace
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

# app
from .._constants import DEFAULTS, EXTRA_VERBOSE, LOG
from .._logic import read_config
from ..evaluation import EvalConfig, ExperimentConfig
from ..explorer import Mode
from ..formatters import FORMATTERS
from ..training import REWARD_BASELINES, TrainConfig
from ..world import DataConfig, Split, WorldConfig, build_split, load_split


@dataclass(frozen=True)
class Settings:
    """Everything a command needs: defaults, then config files, then flags.
    """
    raw: Dict[str, Any]
    world: WorldConfig
    data: DataConfig
    train: TrainConfig
    eval: EvalConfig
    experiment: ExperimentConfig
    out: Path
    data_dir: Optional[Path]
    formatter: str
    smax: Optional[int]


def make_parser(command: Callable) -> ArgumentParser:
    parser = ArgumentParser(description=command.__doc__)
    parser.add_argument('--config', action='append', default=[], help='config file or URL, repeatable')
    parser.add_argument('--seed', type=int, help='seed of worlds, initialization and sampling')
    parser.add_argument('--mode', choices=[mode.value for mode in Mode], help='agent variant')
    parser.add_argument('--smax', type=int, help='maximum exploration length')
    parser.add_argument('--lazy', dest='lazy', action='store_true', default=None, help='late action-taking')
    parser.add_argument('--eager', dest='lazy', action='store_false', help='walk every move physically')
    parser.add_argument('--reward-baseline', choices=REWARD_BASELINES)
    parser.add_argument('--explore-all', action='store_true', default=None, help='explore every direction, no gate')
    parser.add_argument('--or-scope', choices=('all', 'nav'))
    parser.add_argument('--data', type=Path, help='dataset directory written by gen-world')
    parser.add_argument('--out', type=Path, default=Path('out'), help='output directory')
    parser.add_argument('--format', choices=sorted(FORMATTERS), default='colored')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    return parser


def setup_logging(verbose: int) -> None:
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = EXTRA_VERBOSE
    if not LOG.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
        LOG.addHandler(handler)
    LOG.setLevel(level)


def _section(raw: Dict[str, Any], name: str) -> Dict[str, Any]:
    return dict(DEFAULTS[name], **raw.get(name, {}))


def load_settings(args: Namespace) -> Settings:
    """Resolve the settings; raises ConfigError on any invalid value.
    """
    paths: List[Any] = list(args.config)
    if not paths and Path('pyproject.toml').exists():
        paths = [Path('pyproject.toml')]
    raw = read_config(*paths)

    world = _section(raw, 'world')
    data = _section(raw, 'data')
    train = _section(raw, 'train')
    evaluation = _section(raw, 'eval')
    if args.seed is not None:
        data['seed'] = args.seed
        train['seed'] = args.seed
    if args.mode is not None:
        train['mode'] = args.mode
    if args.smax is not None:
        train['smax_schedule'] = list(range(1, args.smax + 1))
    if args.lazy is not None:
        train['lazy'] = args.lazy
    if args.reward_baseline is not None:
        train['reward_baseline'] = args.reward_baseline
    if args.explore_all is not None:
        train['explore_all'] = args.explore_all
    if args.or_scope is not None:
        evaluation['or_scope'] = args.or_scope

    return Settings(
        raw=dict(raw, world=world, data=data, train=train, eval=evaluation),
        world=WorldConfig.from_dict(world),
        data=DataConfig.from_dict(data),
        train=TrainConfig.from_dict(train),
        eval=EvalConfig.from_dict(evaluation),
        experiment=ExperimentConfig.from_dict(_section(raw, 'experiment')),
        out=args.out,
        data_dir=args.data,
        formatter=args.format,
        smax=args.smax,
    )


def parse(command: Callable, argv: List[str], parser: ArgumentParser = None) -> Tuple[Settings, Namespace]:
    if parser is None:
        parser = make_parser(command)
    args = parser.parse_args(argv)
    setup_logging(args.verbose)
    return load_settings(args), args


def get_split(settings: Settings, split: str) -> Split:
    if settings.data_dir is not None:
        return load_split(settings.data_dir / split)
    return build_split(settings.world, settings.data, split)


def print_rows(settings: Settings, rows, columns) -> None:
    FORMATTERS[settings.formatter](columns=columns).write_all(rows)
