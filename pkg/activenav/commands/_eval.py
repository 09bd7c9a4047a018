# built-in
from pathlib import Path

# app
from .._constants import CommandResult, ExitCode
from .._logic import colored
from ..evaluation import METRIC_COLUMNS, evaluate, write_report
from ..numcore import load_checkpoint
from ..training import init_params
from ._errors import handle_errors
from ._options import get_split, make_parser, parse, print_rows


@handle_errors
def eval_command(argv) -> CommandResult:
    """Evaluate a checkpoint greedily and write metrics, stats and traces.
    """
    parser = make_parser(eval_command)
    parser.add_argument('--checkpoint', type=Path, required=True)
    parser.add_argument('--split', help='split to evaluate on')
    settings, args = parse(eval_command, argv, parser)
    split = get_split(settings, args.split or settings.eval.split)
    if not split.tasks:
        return ExitCode.INVALID_WORLD, 'the split has no tasks'

    params = init_params(settings.train, next(iter(split.envs.values())))
    load_checkpoint(params, args.checkpoint)
    traces, report = evaluate(params, split, settings.train, settings.eval, smax=settings.smax)
    paths = write_report(report, traces, settings.out)
    print_rows(settings, [report.summary()], METRIC_COLUMNS)
    print('report:', colored(paths['metrics'].parent, 'green'))
    return ExitCode.OK, ''
