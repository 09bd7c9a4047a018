class ActiveNavError(Exception):
    """Base class for every error raised by activenav.
    """


class ConfigError(ActiveNavError, ValueError):
    pass


class WorldError(ActiveNavError, ValueError):
    """Environment, task, or instruction violates its invariants.
    """


class ShapeError(ActiveNavError, ValueError):
    pass


class TapeError(ActiveNavError, RuntimeError):
    """Gradient tape misuse: mixed tapes, double backward, missing graph.
    """


class NumericError(ActiveNavError, ArithmeticError):
    """A recorded value is not finite.
    """


class MoveError(ActiveNavError, ValueError):
    pass


class CheckpointError(ActiveNavError, ValueError):
    pass


class DivergenceError(ActiveNavError, RuntimeError):
    """Training loss became non-finite.
    """


class ReplayError(ActiveNavError, RuntimeError):
    """A replayed episode left the recorded trajectory.
    """
