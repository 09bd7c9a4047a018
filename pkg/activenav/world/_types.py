# built-in
import math
from dataclasses import dataclass, field
from hashlib import md5
from typing import Any, Dict, Iterable, Mapping, Sequence, Tuple

# external
import networkx as nx
import numpy as np

# app
from .._exceptions import ConfigError, WorldError
from .._logic import section_from_dict


# edge lengths are kept in this range so the 3 m success radius stays meaningful
MIN_EDGE = 1.0
MAX_EDGE = 3.0
ORIENTATION_SIZE = 4
MIN_TOKENS = 3
MAX_TOKENS = 8


@dataclass(frozen=True)
class WorldConfig:
    n_viewpoints: int = 24
    k_max: int = 6
    d_land: int = 8
    ambiguity: float = 0.3
    sigma_instr: float = 0.1
    instruction_corruption: float = 0.0
    min_hops: int = 3
    max_hops: int = 7

    def __post_init__(self) -> None:
        if not 0.0 <= self.ambiguity <= 1.0:
            raise ConfigError('world.ambiguity must be in [0, 1]')
        if not 0.0 <= self.instruction_corruption <= 1.0:
            raise ConfigError('world.instruction_corruption must be in [0, 1]')
        if self.sigma_instr < 0:
            raise ConfigError('world.sigma_instr must be non-negative')
        if not MIN_TOKENS <= self.min_hops <= self.max_hops <= MAX_TOKENS:
            raise ConfigError('world hop bounds must satisfy {} <= min_hops <= max_hops <= {}'.format(
                MIN_TOKENS, MAX_TOKENS,
            ))

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'WorldConfig':
        return section_from_dict(cls, data, section='world')


@dataclass(frozen=True, eq=False)
class Viewpoint:
    id: int
    position: np.ndarray
    landmark: np.ndarray


@dataclass(frozen=True, eq=False)
class ViewFeature:
    neighbor_id: int
    embedding: np.ndarray


@dataclass(frozen=True, eq=False)
class PanoramicObservation:
    source_id: int
    candidates: Tuple[ViewFeature, ...]
    stop_embedding: np.ndarray

    @property
    def neighbor_ids(self) -> Tuple[int, ...]:
        return tuple(view.neighbor_id for view in self.candidates)

    @property
    def embeddings(self) -> np.ndarray:
        return np.stack([view.embedding for view in self.candidates])

    @property
    def dim(self) -> int:
        return self.stop_embedding.shape[0]

    def index_of(self, neighbor_id: int) -> int:
        return self.neighbor_ids.index(neighbor_id)

    def digest(self) -> str:
        hasher = md5()
        hasher.update(str(self.source_id).encode())
        for view in self.candidates:
            hasher.update(str(view.neighbor_id).encode())
            hasher.update(view.embedding.tobytes())
        return hasher.hexdigest()


@dataclass(frozen=True, eq=False)
class InstructionTokens:
    tokens: Tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        if not MIN_TOKENS <= len(self.tokens) <= MAX_TOKENS:
            raise WorldError('instruction must have {}..{} tokens, got {}'.format(
                MIN_TOKENS, MAX_TOKENS, len(self.tokens),
            ))
        for token in self.tokens:
            if not np.all(np.isfinite(token)):
                raise WorldError('instruction token has non-finite entries')

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)


@dataclass(frozen=True, eq=False)
class Task:
    env_name: str
    start: int
    goal: int
    heading: float
    teacher_path: Tuple[int, ...]
    shortest_distance: float
    instruction: InstructionTokens

    @property
    def hops(self) -> int:
        return len(self.teacher_path) - 1

    def to_dict(self) -> Dict[str, Any]:
        return dict(
            env=self.env_name,
            start=self.start,
            goal=self.goal,
            heading=self.heading,
            teacher_path=list(self.teacher_path),
            shortest_distance=self.shortest_distance,
            instruction=[token.tolist() for token in self.instruction],
        )

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'Task':
        try:
            return cls(
                env_name=str(data['env']),
                start=int(data['start']),
                goal=int(data['goal']),
                heading=float(data['heading']),
                teacher_path=tuple(int(node) for node in data['teacher_path']),
                shortest_distance=float(data['shortest_distance']),
                instruction=InstructionTokens(tuple(
                    np.asarray(token, dtype=np.float64) for token in data['instruction']
                )),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, WorldError):
                raise
            raise WorldError('invalid task record: {}'.format(exc)) from exc


@dataclass(frozen=True, eq=False)
class Environment:
    """Connected viewpoint graph. Immutable after construction.
    """
    name: str
    viewpoints: Tuple[Viewpoint, ...]
    graph: nx.Graph = field(repr=False)
    k_max: int = 6
    distances: Mapping[int, Mapping[int, float]] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        distances = dict(nx.all_pairs_dijkstra_path_length(self.graph, weight='length'))
        object.__setattr__(self, 'distances', distances)
        object.__setattr__(self, '_index', {vp.id: vp for vp in self.viewpoints})

    @classmethod
    def build(
        cls, name: str, viewpoints: Sequence[Viewpoint], edges: Iterable[Tuple[int, int]],
        k_max: int = 6, check: bool = True,
    ) -> 'Environment':
        """Build and validate an environment.

        With `check=False` only structural sanity is enforced (known ids,
        positive lengths, connectivity), which is enough for hand-made test worlds.
        """
        ids = [vp.id for vp in viewpoints]
        if len(ids) < 2:
            raise WorldError('environment needs at least 2 viewpoints')
        if len(set(ids)) != len(ids):
            raise WorldError('viewpoint ids must be unique')
        dims = {vp.landmark.shape for vp in viewpoints}
        if len(dims) != 1 or len(next(iter(dims))) != 1 or next(iter(dims))[0] < 2:
            raise WorldError('landmarks must be vectors of one common size >= 2')
        for vp in viewpoints:
            if vp.position.shape != (3,) or not np.all(np.isfinite(vp.position)):
                raise WorldError('viewpoint {}: position must be a finite 3-vector'.format(vp.id))
            if not np.all(np.isfinite(vp.landmark)):
                raise WorldError('viewpoint {}: landmark must be finite'.format(vp.id))

        graph = nx.Graph()
        graph.add_nodes_from(sorted(ids))
        positions = {vp.id: vp.position for vp in viewpoints}
        for a, b in edges:
            if a not in positions or b not in positions:
                raise WorldError('edge ({}, {}) references an unknown viewpoint'.format(a, b))
            if a == b:
                raise WorldError('edge ({}, {}) is a self loop'.format(a, b))
            if graph.has_edge(a, b):
                raise WorldError('edge ({}, {}) is duplicated'.format(a, b))
            length = float(np.linalg.norm(positions[a] - positions[b]))
            if length <= 0:
                raise WorldError('edge ({}, {}) has zero length'.format(a, b))
            if check and not MIN_EDGE <= length <= MAX_EDGE:
                raise WorldError('edge ({}, {}) has length {:.3f} outside [{}, {}]'.format(
                    a, b, length, MIN_EDGE, MAX_EDGE,
                ))
            graph.add_edge(a, b, length=length)

        if check:
            for node, degree in graph.degree():
                if not 2 <= degree <= k_max:
                    raise WorldError('viewpoint {} has {} neighbors, expected 2..{}'.format(
                        node, degree, k_max,
                    ))
        if not nx.is_connected(graph):
            raise WorldError('environment graph is not connected')
        return cls(
            name=name,
            viewpoints=tuple(sorted(viewpoints, key=lambda vp: vp.id)),
            graph=nx.freeze(graph),
            k_max=k_max,
        )

    def __contains__(self, viewpoint: object) -> bool:
        return viewpoint in self._index  # type: ignore

    def _get(self, viewpoint: int) -> Viewpoint:
        try:
            return self._index[viewpoint]  # type: ignore
        except KeyError:
            raise WorldError('unknown viewpoint: {}'.format(viewpoint)) from None

    @property
    def ids(self) -> Tuple[int, ...]:
        return tuple(vp.id for vp in self.viewpoints)

    @property
    def d_land(self) -> int:
        return self.viewpoints[0].landmark.shape[0]

    @property
    def view_size(self) -> int:
        return self.d_land + ORIENTATION_SIZE

    def position(self, viewpoint: int) -> np.ndarray:
        return self._get(viewpoint).position

    def landmark(self, viewpoint: int) -> np.ndarray:
        return self._get(viewpoint).landmark

    def neighbors(self, viewpoint: int) -> Tuple[int, ...]:
        self._get(viewpoint)
        return tuple(sorted(self.graph[viewpoint]))

    def edge_length(self, a: int, b: int) -> float:
        try:
            return self.graph[a][b]['length']
        except KeyError:
            raise WorldError('no edge between {} and {}'.format(a, b)) from None

    def distance(self, a: int, b: int) -> float:
        """Geodesic distance in meters."""
        self._get(a)
        self._get(b)
        return self.distances[a][b]

    def bearing(self, a: int, b: int) -> float:
        """Heading from `a` to `b`; 0 points along +y, clockwise positive."""
        delta = self.position(b) - self.position(a)
        return math.atan2(delta[0], delta[1])

    def elevation(self, a: int, b: int) -> float:
        delta = self.position(b) - self.position(a)
        return math.atan2(delta[2], math.hypot(delta[0], delta[1]))
