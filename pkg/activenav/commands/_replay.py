# built-in
from pathlib import Path

# app
from .._constants import CommandResult, ExitCode
from .._logic import colored
from ..numcore import load_checkpoint
from ..training import init_params, load_traces, replay_episode
from ._errors import handle_errors
from ._options import get_split, make_parser, parse


@handle_errors
def replay_command(argv) -> CommandResult:
    """Replay recorded episodes and check every navigation decision bitwise.
    """
    parser = make_parser(replay_command)
    parser.add_argument('traces', type=Path, help='traces.jsonl written by eval')
    parser.add_argument('--checkpoint', type=Path, required=True)
    parser.add_argument('--split', help='split the traces were recorded on')
    settings, args = parse(replay_command, argv, parser)
    traces = load_traces(args.traces)
    if not traces:
        return ExitCode.NOT_ENOUGH_ARGS, 'no episodes in {}'.format(args.traces)
    split = get_split(settings, args.split or settings.eval.split)
    missing = sorted({trace.env_name for trace in traces} - set(split.envs))
    if missing:
        return ExitCode.INVALID_WORLD, 'unknown worlds: {}'.format(', '.join(missing))

    params = init_params(settings.train, split.envs[traces[0].env_name])
    load_checkpoint(params, args.checkpoint)
    for trace in traces:
        replay_episode(split.envs[trace.env_name], trace, params, settings.train)
    print('replayed', colored(len(traces), 'green'), 'episodes')
    return ExitCode.OK, ''
