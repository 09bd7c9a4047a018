# external
import networkx
import numpy

# app
from .._constants import NAME, CommandResult, ExitCode
from .._logic import colored
from .._version import __version__


def version_command(argv) -> CommandResult:
    """Show activenav version.
    """
    print(NAME.ljust(9), colored(__version__, 'green'))
    print('numpy    ', colored(numpy.__version__, 'green'))
    print('networkx ', colored(networkx.__version__, 'green'))
    return ExitCode.OK, ''
