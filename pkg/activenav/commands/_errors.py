# built-in
from functools import wraps
from typing import Callable

# app
from .._constants import CommandResult, ExitCode
from .._exceptions import (
    CheckpointError, ConfigError, DivergenceError, MoveError, ReplayError, ShapeError, TapeError, WorldError,
)


ERROR_CODES = (
    (ConfigError, ExitCode.INVALID_CONFIG),
    (WorldError, ExitCode.INVALID_WORLD),
    (CheckpointError, ExitCode.BAD_CHECKPOINT),
    (ShapeError, ExitCode.BAD_CHECKPOINT),
    (DivergenceError, ExitCode.DIVERGED),
    (ReplayError, ExitCode.REPLAY_MISMATCH),
    (MoveError, ExitCode.REPLAY_MISMATCH),
    (TapeError, ExitCode.REPLAY_MISMATCH),
)


def handle_errors(command: Callable[..., CommandResult]) -> Callable[..., CommandResult]:
    """Turn library errors into (exit code, message) results."""
    @wraps(command)
    def wrapper(argv) -> CommandResult:
        try:
            return command(argv)
        except tuple(error for error, _ in ERROR_CODES) as exc:
            for error, code in ERROR_CODES:
                if isinstance(exc, error):
                    return code, str(exc)
            raise
    return wrapper
