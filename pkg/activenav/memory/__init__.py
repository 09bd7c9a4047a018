"""Memory graph of observed viewpoints and the lazy travel strategy.
"""

# app
from ._graph import MemoryGraph
from ._types import EXPLORE, NAV, PHASES, MoveEvent, TravelLog


__all__ = ['MemoryGraph', 'MoveEvent', 'TravelLog', 'NAV', 'EXPLORE', 'PHASES']
