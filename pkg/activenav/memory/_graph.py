# built-in
from typing import Dict, List, Optional

# external
import networkx as nx

# app
from .._constants import EXTRA_VERBOSE, LOG as ROOT_LOG
from .._exceptions import MoveError
from ..world import Environment, PanoramicObservation, observe, route
from ._types import EXPLORE, NAV, MoveEvent, TravelLog


LOG = ROOT_LOG.getChild(__name__)


class MemoryGraph:
    """What the agent has seen so far, and where it physically is.

    Moves are issued one logical hop at a time. With `lazy` on, a move to a
    known viewpoint only changes the logical position; the body travels when a
    new viewpoint must be observed, along the shortest route the memory graph
    allows. With `lazy` off every hop is walked.
    """

    def __init__(self, env: Environment, start: int, heading: float, lazy: bool = True):
        self.env = env
        self.lazy = lazy
        self.graph = nx.Graph()
        self.observations: Dict[int, PanoramicObservation] = {}
        self.events: List[MoveEvent] = []
        self.physical_position = start
        self.logical_position = start
        self.heading = heading
        self.record_visit(start, observe(env, start, heading))

    def __contains__(self, viewpoint: object) -> bool:
        return viewpoint in self.observations

    @property
    def known(self):
        return frozenset(self.observations)

    def record_visit(self, viewpoint: int, observation: PanoramicObservation) -> None:
        if viewpoint in self.observations:
            return
        self.observations[viewpoint] = observation
        self.graph.add_node(viewpoint)
        for neighbor in self.env.neighbors(viewpoint):
            if neighbor in self.observations:
                self.graph.add_edge(viewpoint, neighbor, length=self.env.edge_length(viewpoint, neighbor))

    def observation(self, viewpoint: Optional[int] = None) -> PanoramicObservation:
        """Stored panorama, by default at the logical position."""
        if viewpoint is None:
            viewpoint = self.logical_position
        try:
            return self.observations[viewpoint]
        except KeyError:
            raise MoveError('viewpoint {} was never observed'.format(viewpoint)) from None

    def _walk(self, path: List[int], phase: str) -> float:
        meters = 0.0
        for source, target in zip(path, path[1:]):
            length = self.env.edge_length(source, target)
            self.events.append(MoveEvent(source=source, target=target, meters=length, phase=phase))
            meters += length
        if path:
            self.physical_position = path[-1]
        return meters

    def resolve_move(self, target: int, phase: str) -> float:
        """Move the logical position one hop to `target`, returning the meters walked.
        """
        current = self.logical_position
        if phase not in (NAV, EXPLORE):
            raise ValueError('unknown phase: {}'.format(phase))
        if target not in self.env or target not in self.env.graph[current]:
            raise MoveError('{} is not adjacent to {}'.format(target, current))

        self.heading = self.env.bearing(current, target)
        if self.lazy and target in self.observations:
            self.logical_position = target
            return 0.0

        if self.lazy:
            extended = nx.Graph(self.graph)
            extended.add_edge(current, target, length=self.env.edge_length(current, target))
            path, _ = route(extended, self.physical_position, target)
        else:
            path = [current, target]
        meters = self._walk(path, phase)
        self.logical_position = target
        if target not in self.observations:
            self.record_visit(target, observe(self.env, target, self.heading))
        LOG.log(EXTRA_VERBOSE, '%s move %d -> %d: %.3f m', phase, current, target, meters)
        return meters

    def return_to(self, viewpoint: int, phase: str) -> float:
        """Walk the logical position back to a known viewpoint, hop by hop."""
        path, _ = route(self.graph, self.logical_position, viewpoint)
        return sum(self.resolve_move(target, phase) for target in path[1:])

    def finalize_episode(self) -> TravelLog:
        """Bring the body to the final logical position and close the log."""
        if self.physical_position != self.logical_position:
            path, _ = route(self.graph, self.physical_position, self.logical_position)
            self._walk(path, NAV)
        return TravelLog.from_events(self.events)
