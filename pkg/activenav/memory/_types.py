# built-in
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Mapping, Tuple

# app
from .._exceptions import WorldError


NAV = 'nav'
EXPLORE = 'explore'
PHASES = (NAV, EXPLORE)


@dataclass(frozen=True)
class MoveEvent:
    source: int
    target: int
    meters: float
    phase: str

    def __post_init__(self) -> None:
        if self.phase not in PHASES:
            raise ValueError('unknown phase: {}'.format(self.phase))
        if self.meters < 0:
            raise ValueError('move length must be non-negative')


@dataclass(frozen=True)
class TravelLog:
    """Physical travel of one episode, split by phase.
    """
    nav_tl: float = 0.0
    explore_tl: float = 0.0
    events: Tuple[MoveEvent, ...] = ()

    @classmethod
    def from_events(cls, events: Iterable[MoveEvent]) -> 'TravelLog':
        events = tuple(events)
        return cls(
            nav_tl=sum(event.meters for event in events if event.phase == NAV),
            explore_tl=sum(event.meters for event in events if event.phase == EXPLORE),
            events=events,
        )

    @property
    def total_tl(self) -> float:
        return self.nav_tl + self.explore_tl

    @property
    def physical_path(self) -> Tuple[int, ...]:
        if not self.events:
            return ()
        return (self.events[0].source,) + tuple(event.target for event in self.events)

    def to_dict(self) -> Dict[str, Any]:
        return dict(
            total_tl=self.total_tl,
            nav_tl=self.nav_tl,
            explore_tl=self.explore_tl,
            events=[[e.source, e.target, e.meters, e.phase] for e in self.events],
        )

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'TravelLog':
        try:
            events = [
                MoveEvent(source=int(s), target=int(t), meters=float(m), phase=str(p))
                for s, t, m, p in data.get('events', [])
            ]
        except (TypeError, ValueError) as exc:
            raise WorldError('invalid travel log: {}'.format(exc)) from exc
        return cls.from_events(events)
