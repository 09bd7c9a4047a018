# app
from .._constants import CommandResult, ExitCode
from .._logic import colored
from ..world import SPLITS, build_split, save_split
from ._errors import handle_errors
from ._options import make_parser, parse


@handle_errors
def gen_world_command(argv) -> CommandResult:
    """Generate worlds and tasks of every split into the output directory.
    """
    parser = make_parser(gen_world_command)
    parser.add_argument('--split', choices=SPLITS, action='append', help='only these splits')
    settings, args = parse(gen_world_command, argv, parser)
    for split in args.split or SPLITS:
        result = build_split(settings.world, settings.data, split)
        save_split(result, settings.out / split)
        print('{split} | {worlds} worlds | {tasks} tasks'.format(
            split=colored(split.ljust(5), 'green'),
            worlds=len(result.envs),
            tasks=len(result.tasks),
        ))
    return ExitCode.OK, ''
