# app
from .._constants import CommandResult, ExitCode
from ..evaluation import RESULT_COLUMNS, run_experiment
from ._errors import handle_errors
from ._options import parse, print_rows


@handle_errors
def ablate_command(argv) -> CommandResult:
    """Train and evaluate the ablation variants over the configured seeds.
    """
    settings, _ = parse(ablate_command, argv)
    rows = run_experiment(settings.raw, out_dir=settings.out)
    print_rows(settings, rows, RESULT_COLUMNS)
    return ExitCode.OK, ''
