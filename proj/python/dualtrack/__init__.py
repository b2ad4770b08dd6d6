"""Dual contour/swarm object tracker.

Contour dominant points seed a KLT point tracker while a multiswarm
particle optimizer follows the polygonal boundary; per-frame bounding
boxes come from the converged particle cloud.
"""

from dualtrack._core import (
    __version__,
    dominant_points,
    evaluate,
    fitness,
    is_trackable_point,
    overlap_score,
    synthesize,
    track,
)

__all__ = [
    "__version__",
    "dominant_points",
    "evaluate",
    "fitness",
    "is_trackable_point",
    "overlap_score",
    "synthesize",
    "track",
]
