# built-in
import math
from typing import Dict, List, Optional, Set, Tuple

# external
import numpy as np

# app
from .._constants import LOG as ROOT_LOG
from .._exceptions import WorldError
from ._types import Environment, Viewpoint, WorldConfig


LOG = ROOT_LOG.getChild(__name__)

SPACING = 1.8
JITTER = 0.15
ELEVATION = 0.1
RING_SIDE = 2.0
DUPLICATE_NOISE = 0.05
MAX_LINKS = 3
ATTEMPTS = 100

AXIS = ((1, 0), (-1, 0), (0, 1), (0, -1))
DIAGONAL = ((1, 1), (1, -1), (-1, 1), (-1, -1))

Cell = Tuple[int, int]
Edge = Tuple[int, int]


def generate_world(config: WorldConfig, seed: int) -> Environment:
    """Procedural world: a jittered lattice grown cell by cell, a ladder when k_max is 3, or a ring when k_max is 2.
    """
    if config.n_viewpoints < 4:
        raise WorldError('n_viewpoints must be at least 4, got {}'.format(config.n_viewpoints))
    if config.k_max < 2:
        raise WorldError('k_max must be at least 2, got {}'.format(config.k_max))
    if config.d_land < 2:
        raise WorldError('d_land must be at least 2, got {}'.format(config.d_land))

    if config.k_max == 2:
        rng = np.random.default_rng([seed, 0])
        positions, edges = _ring(config.n_viewpoints, rng)
    elif config.k_max == 3:
        # lattice growth cannot keep every degree at 3 or below
        rng = np.random.default_rng([seed, 0])
        cells, edges = _ladder(config.n_viewpoints)
        positions = _place(cells, rng)
    else:
        for attempt in range(ATTEMPTS):
            rng = np.random.default_rng([seed, attempt])
            grown = _grow_lattice(config.n_viewpoints, config.k_max, rng)
            if grown is not None:
                break
            LOG.debug('world %d: lattice attempt %d got stuck', seed, attempt)
        else:
            raise WorldError('cannot grow a connected world with n={} k_max={}'.format(
                config.n_viewpoints, config.k_max,
            ))
        cells, edges = grown
        positions = _place(cells, rng)

    landmarks = rng.standard_normal((config.n_viewpoints, config.d_land))
    _inject_ambiguity(landmarks, edges, config.ambiguity, rng)

    viewpoints = [
        Viewpoint(id=idx, position=positions[idx], landmark=landmarks[idx])
        for idx in range(config.n_viewpoints)
    ]
    env = Environment.build(
        name='world-{}'.format(seed),
        viewpoints=viewpoints,
        edges=edges,
        k_max=config.k_max,
    )
    LOG.info('generated %s: %d viewpoints, %d edges', env.name, len(viewpoints), len(edges))
    return env


def _ring(n: int, rng: np.random.Generator) -> Tuple[np.ndarray, List[Edge]]:
    radius = RING_SIDE / 2 / math.sin(math.pi / n)
    positions = np.zeros((n, 3))
    for idx in range(n):
        angle = 2 * math.pi * idx / n
        positions[idx] = (radius * math.sin(angle), radius * math.cos(angle), rng.uniform(0, ELEVATION))
    edges = [(idx, (idx + 1) % n) for idx in range(n)]
    return positions, edges


def _ladder(n: int) -> Tuple[List[Cell], List[Edge]]:
    """Two rows of rungs; an odd last viewpoint closes the end diagonally."""
    cells: List[Cell] = []
    edges: List[Edge] = []
    for column in range(n // 2):
        cells.extend([(column, 0), (column, 1)])
        low, high = 2 * column, 2 * column + 1
        edges.append((low, high))
        if column:
            edges.extend([(low - 2, low), (high - 2, high)])
    if n % 2:
        cells.append((n // 2, 0))
        edges.extend([(n - 3, n - 1), (n - 2, n - 1)])
    return cells, edges


def _grow_lattice(n: int, k_max: int, rng: np.random.Generator) -> Optional[Tuple[List[Cell], List[Edge]]]:
    # seed triangle, every node starts with two neighbors
    cells: List[Cell] = [(0, 0), (1, 0), (0, 1)]
    index: Dict[Cell, int] = {cell: idx for idx, cell in enumerate(cells)}
    edges: List[Edge] = [(0, 1), (0, 2), (1, 2)]
    degree = [2, 2, 2]

    while len(cells) < n:
        frontier: Set[Cell] = set()
        for x, y in cells:
            for dx, dy in AXIS + DIAGONAL:
                frontier.add((x + dx, y + dy))
        options = []
        for cell in sorted(frontier - set(index)):
            near = []
            for dx, dy in AXIS + DIAGONAL:
                other = index.get((cell[0] + dx, cell[1] + dy))
                if other is not None and degree[other] < k_max:
                    near.append(other)
            if len(near) >= 2:
                options.append((cell, near))
        if not options:
            return None

        cell, near = options[int(rng.integers(len(options)))]
        count = int(rng.integers(2, min(len(near), k_max, MAX_LINKS) + 1))
        new = len(cells)
        cells.append(cell)
        index[cell] = new
        degree.append(0)
        for other in near[:count]:
            edges.append((other, new))
            degree[other] += 1
            degree[new] += 1
    return cells, edges


def _place(cells: List[Cell], rng: np.random.Generator) -> np.ndarray:
    positions = np.zeros((len(cells), 3))
    for idx, (x, y) in enumerate(cells):
        positions[idx] = (
            x * SPACING + rng.uniform(-JITTER, JITTER),
            y * SPACING + rng.uniform(-JITTER, JITTER),
            rng.uniform(0, ELEVATION),
        )
    return positions


def _inject_ambiguity(landmarks: np.ndarray, edges: List[Edge], fraction: float, rng: np.random.Generator) -> None:
    """Copy landmarks between nearby viewpoints ("the room has two doors").
    """
    n = landmarks.shape[0]
    count = int(round(fraction * n))
    if count == 0:
        return
    adjacency: Dict[int, Set[int]] = {idx: set() for idx in range(n)}
    for a, b in edges:
        adjacency[a].add(b)
        adjacency[b].add(a)

    for target in sorted(rng.choice(n, size=count, replace=False).tolist()):
        siblings = sorted({
            other
            for middle in adjacency[target]
            for other in adjacency[middle]
            if other != target and other not in adjacency[target]
        })
        if not siblings:
            siblings = [idx for idx in range(n) if idx != target]
        source = siblings[int(rng.integers(len(siblings)))]
        landmarks[target] = landmarks[source] + rng.normal(0.0, DUPLICATE_NOISE, landmarks.shape[1])
