"""Sorting as a continuous selection of unordered tuples.

``canonicalize`` sends a multiset of reals to its unique non-descending
representative.  Applied pointwise to a field of unordered tuples (a
sampled map from R^m into the quotient space), it produces an ordered
field whose class at every point equals the input class.  The selection
is an isometry between the quotient metric and the plain 1-norm, which
``continuity_report`` checks edge by edge on a sampled field.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError, InvariantViolation
from .metric import UnorderedTuple, dist_sorted

# Lifted values of two samples in the same class must coincide to this level.
EQUAL_CLASS_TOL = 1e-12


def canonicalize(values) -> np.ndarray:
    """The unique non-descendingly sorted representative of a multiset.

    Accepts an UnorderedTuple or any ordering of the components; idempotent
    and multiset-preserving.
    """
    if isinstance(values, UnorderedTuple):
        return values.canonical.copy()
    return UnorderedTuple(values).canonical.copy()


def _as_points(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts[:, np.newaxis]
    if pts.ndim != 2 or pts.shape[0] == 0 or pts.shape[1] == 0:
        raise InputError(f"points must form an (N, m) array, got shape {pts.shape}")
    if not np.all(np.isfinite(pts)):
        raise InputError("points have non-finite coordinates")
    return pts


def _check_adjacency(adjacency, count: int) -> tuple[tuple[int, int], ...]:
    edges = []
    for edge in adjacency:
        a, b = (int(i) for i in edge)
        if not (0 <= a < count and 0 <= b < count):
            raise InputError(f"adjacency edge {(a, b)} out of range for {count} samples")
        edges.append((a, b))
    return tuple(edges)


def path_adjacency(count: int) -> tuple[tuple[int, int], ...]:
    """Consecutive samples are neighbors."""
    return tuple((i, i + 1) for i in range(count - 1))


@dataclass(frozen=True)
class SampledField:
    """A quotient-space-valued map sampled on finitely many points of R^m.

    ``points`` is an (N, m) array, ``values`` holds one unordered tuple per
    point (all of the same size n), and ``adjacency`` declares which samples
    count as neighbors (grid edges, consecutive path points, ...).
    """

    points: np.ndarray
    values: tuple[UnorderedTuple, ...]
    adjacency: tuple[tuple[int, int], ...]

    def __post_init__(self):
        points = _as_points(self.points)
        values = tuple(
            v if isinstance(v, UnorderedTuple) else UnorderedTuple(v) for v in self.values
        )
        if points.shape[0] != len(values):
            raise InputError(
                f"{points.shape[0]} points against {len(values)} tuples"
            )
        sizes = {v.n for v in values}
        if len(sizes) > 1:
            raise InputError(f"tuples must share one size, got sizes {sorted(sizes)}")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "adjacency", _check_adjacency(self.adjacency, len(values)))

    @classmethod
    def path(cls, points, values) -> "SampledField":
        """Build a field whose samples form a path in sample order."""
        values = tuple(values)
        return cls(points=points, values=values, adjacency=path_adjacency(len(values)))

    @property
    def dim_m(self) -> int:
        return self.points.shape[1]

    @property
    def tuple_n(self) -> int:
        return self.values[0].n


@dataclass(frozen=True)
class LiftedField:
    """An ordered-representative field: one sorted vector per sample point."""

    points: np.ndarray
    values: np.ndarray
    adjacency: tuple[tuple[int, int], ...]

    def __post_init__(self):
        points = _as_points(self.points)
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 2 or values.shape[0] != points.shape[0]:
            raise InputError(
                f"values must be (N, n) with N = {points.shape[0]}, got shape {values.shape}"
            )
        if np.any(np.diff(values, axis=1) < 0):
            raise InputError("lifted values must be non-descending rows")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "adjacency", _check_adjacency(self.adjacency, values.shape[0]))


def lift_field(field: SampledField) -> LiftedField:
    """Apply ``canonicalize`` pointwise; classes are preserved at every point."""
    values = np.stack([v.canonical for v in field.values])
    return LiftedField(points=field.points.copy(), values=values, adjacency=field.adjacency)


@dataclass(frozen=True)
class ContinuityReport:
    """Worst ratio of lifted movement to quotient distance over field edges.

    Edges whose endpoint classes coincide exactly are checked against
    EQUAL_CLASS_TOL and excluded from the ratio.  ``max_ratio`` is 1.0 by
    convention when every edge falls in that branch.
    """

    max_ratio: float
    worst_edge: tuple[int, int] | None
    ratio_edges: int
    zero_edges: int


def continuity_report(lifted: LiftedField, field: SampledField) -> ContinuityReport:
    """Compare lifted 1-norm steps with quotient distances along adjacency.

    For the sorted selection both sides agree exactly, so ``max_ratio`` must
    come out as 1 (the acceptance suite pins the tolerance).  A zero-distance
    edge with differing lifted values is impossible by construction and
    raises InvariantViolation.
    """
    if lifted.adjacency != field.adjacency:
        raise InputError("mismatched fields: adjacency differs")
    if lifted.values.shape[0] != len(field.values):
        raise InputError("mismatched fields: sample counts differ")
    if not np.array_equal(lifted.points, field.points):
        raise InputError("mismatched fields: sample points differ")

    max_ratio = None
    worst = None
    zero_edges = 0
    for a, b in field.adjacency:
        moved = float(np.abs(lifted.values[a] - lifted.values[b]).sum())
        d = dist_sorted(field.values[a], field.values[b]).value
        if d == 0.0:
            if moved > EQUAL_CLASS_TOL:
                raise InvariantViolation(
                    f"edge {(a, b)}: equal classes lifted {moved:.3e} apart"
                )
            zero_edges += 1
            continue
        ratio = moved / d
        if max_ratio is None or ratio > max_ratio:
            max_ratio, worst = ratio, (a, b)

    if max_ratio is None:
        return ContinuityReport(1.0, None, 0, zero_edges)
    return ContinuityReport(max_ratio, worst, len(field.adjacency) - zero_edges, zero_edges)


__all__ = [
    "EQUAL_CLASS_TOL",
    "ContinuityReport",
    "LiftedField",
    "SampledField",
    "canonicalize",
    "continuity_report",
    "lift_field",
    "path_adjacency",
]
