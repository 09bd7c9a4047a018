"""Vision-language navigation agent that explores before it commits
"""

# app
from ._cli import entrypoint
from ._version import __version__


__all__ = ['entrypoint', '__version__']
