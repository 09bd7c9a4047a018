# app
from .._constants import CommandResult, ExitCode
from .._logic import colored
from ..training import LOG_COLUMNS, train
from ._errors import handle_errors
from ._options import get_split, parse, print_rows


@handle_errors
def train_command(argv) -> CommandResult:
    """Train an agent with the curriculum over exploration length.
    """
    settings, _ = parse(train_command, argv)
    result = train(
        settings.train,
        get_split(settings, 'train'),
        get_split(settings, 'val'),
        out_dir=settings.out,
    )
    print_rows(settings, result.rows, LOG_COLUMNS)
    print('checkpoint:', colored(result.checkpoints[-1], 'green'))
    return ExitCode.OK, ''
