# built-in
import math

# external
import numpy as np

# app
from ._types import ORIENTATION_SIZE, Environment, PanoramicObservation, ViewFeature


def observe(env: Environment, at: int, heading: float) -> PanoramicObservation:
    """Panorama at `at`: one view per neighbor, ordered by neighbor id.
    """
    views = []
    for neighbor in env.neighbors(at):
        relative = math.remainder(env.bearing(at, neighbor) - heading, 2 * math.pi)
        elevation = env.elevation(at, neighbor)
        orientation = np.array([
            math.sin(relative), math.cos(relative),
            math.sin(elevation), math.cos(elevation),
        ])
        views.append(ViewFeature(
            neighbor_id=neighbor,
            embedding=np.concatenate([env.landmark(neighbor), orientation]),
        ))
    return PanoramicObservation(
        source_id=at,
        candidates=tuple(views),
        stop_embedding=np.zeros(env.d_land + ORIENTATION_SIZE),
    )
