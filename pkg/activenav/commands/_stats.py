# built-in
import sys
from argparse import ArgumentParser
from pathlib import Path

# app
from .._constants import CommandResult, ExitCode
from ..evaluation import exploration_stats
from ..formatters import dumps
from ..training import load_traces
from ._errors import handle_errors
from ._options import setup_logging


@handle_errors
def stats_command(argv) -> CommandResult:
    """Show exploration statistics of recorded episodes.
    """
    parser = ArgumentParser(description=stats_command.__doc__)
    parser.add_argument('traces', type=Path, help='traces.jsonl written by eval')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    args = parser.parse_args(argv)
    setup_logging(args.verbose)
    if not args.traces.exists():
        return ExitCode.NOT_ENOUGH_ARGS, 'no such file: {}'.format(args.traces)
    stats = exploration_stats(load_traces(args.traces))
    print(dumps(stats, color=sys.stdout.isatty()))
    return ExitCode.OK, ''
