"""Component tracking around loops of unordered complex tuples.

Over the reals, sorting selects one representative per class continuously.
Over the complex numbers no such selection exists, and this module shows
why constructively: follow each component of an unordered tuple around a
closed loop by minimal-cost matching between consecutive samples, and the
components may come back permuted.  A nontrivial composite permutation
(holonomy) rules out any continuous labeling along that loop.

The stock example is the set of k-th roots of a point circling the origin:
one turn of the base point multiplies the composite by a k-cycle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import BRUTE_FORCE_CAP, Perm, as_complex_vector, compose, identity_perm
from .errors import InputError, UndersampledLoopError
from .metric import Distance, dist_assignment, dist_bruteforce


@dataclass(frozen=True)
class ComplexLoop:
    """A closed path of unordered complex tuples, sampled discretely.

    ``samples[j]`` holds the tuple at loop parameter j/step_count of a full
    turn; the edge from the last sample back to sample 0 closes the loop.
    Component order within each sample is arbitrary but fixed by storage.
    """

    samples: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.samples, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] < 2 or arr.shape[1] < 1:
            raise InputError(
                f"loop samples must form a (steps, n) array with steps >= 2, got shape {arr.shape}"
            )
        if not (np.all(np.isfinite(arr.real)) and np.all(np.isfinite(arr.imag))):
            raise InputError("loop samples have non-finite components")
        object.__setattr__(self, "samples", arr)

    @property
    def step_count(self) -> int:
        return self.samples.shape[0]

    @property
    def tuple_n(self) -> int:
        return self.samples.shape[1]


@dataclass(frozen=True)
class Holonomy:
    """Composite relabeling after one full loop, plus the summed matching cost.

    A component stored at index j in sample 0 returns to index
    ``permutation[j]`` after the loop.  Identity holonomy on every loop is
    what a continuous selection would require.
    """

    permutation: Perm
    total_path_cost: float

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.permutation))


def min_intra_gap(samples) -> float:
    """Smallest pairwise distance between components within any one sample."""
    arr = np.asarray(samples, dtype=complex)
    if arr.ndim == 1:
        arr = arr[np.newaxis, :]
    n = arr.shape[1]
    if n < 2:
        return math.inf
    j, k = np.triu_indices(n, k=1)
    return float(np.abs(arr[:, j] - arr[:, k]).min())


def _match(prev: np.ndarray, next_: np.ndarray) -> Distance:
    if prev.size <= BRUTE_FORCE_CAP:
        return dist_bruteforce(prev, next_)  # lexicographically smallest minimizer
    return dist_assignment(prev, next_)


def match_step(prev, next_) -> Perm:
    """Minimal-cost matching of one tuple's components onto the next.

    The component at index j of ``prev`` continues at index ``perm[j]`` of
    ``next_``.  Ties break to the lexicographically smallest permutation for
    n <= 8 and are solver-deterministic above.
    """
    prev = as_complex_vector(prev, name="prev")
    next_ = as_complex_vector(next_, name="next")
    if prev.size != next_.size:
        raise InputError(f"dimension mismatch: {prev.size} vs {next_.size}")
    return _match(prev, next_).attaining_perm


def track_loop(loop: ComplexLoop) -> Holonomy:
    """Compose matchings around the loop, wrap-around edge included.

    Tracking is only trustworthy when consecutive samples move less than
    half the smallest intra-tuple gap (then the minimal matching is the one
    a continuous motion would realize); anything else raises
    UndersampledLoopError with a suggested step count.
    """
    samples = loop.samples
    m = loop.step_count
    gap = min_intra_gap(samples)
    if gap == 0.0:
        raise UndersampledLoopError(
            "loop has a sample with two equal components; tracking through a "
            "collision is ambiguous at any sampling rate"
        )

    composite = identity_perm(loop.tuple_n)
    total = 0.0
    worst = 0.0
    for i in range(m):
        step = _match(samples[i], samples[(i + 1) % m])
        worst = max(worst, step.value)
        if step.value >= 0.5 * gap:
            suggested = _suggest_steps(m, worst, gap)
            raise UndersampledLoopError(
                f"undersampled loop: consecutive matching distance {step.value:.6g} "
                f"is not below half the minimal intra-tuple gap ({0.5 * gap:.6g}); "
                f"try about {suggested} steps",
                suggested_steps=suggested,
            )
        total += step.value
        composite = compose(step.attaining_perm, composite)
    return Holonomy(permutation=composite, total_path_cost=total)


def _suggest_steps(steps: int, worst: float, gap: float) -> int:
    # Consecutive movement shrinks like 1/steps; aim 25% under the threshold.
    factor = worst / (0.5 * gap)
    return int(math.ceil(steps * factor * 1.25)) + 1


def roots_loop_generator(k: int, steps: int, radius: float = 1.0) -> ComplexLoop:
    """Loop of the k-th roots of a point circling the origin once.

    Sample j holds the k complex roots of radius * exp(2*pi*i*j/steps).
    One full turn of the base point advances each root a k-th of a turn,
    so the tracked holonomy is a k-cycle.
    """
    if k < 2:
        raise InputError(f"need k >= 2, got {k}")
    if radius <= 0:
        raise InputError(f"need radius > 0, got {radius}")
    if steps < 8 * k:
        raise UndersampledLoopError(
            f"undersampled loop: {steps} steps for k = {k} roots; need at least {8 * k}",
            suggested_steps=8 * k,
        )
    r = radius ** (1.0 / k)
    j = np.arange(steps)[:, np.newaxis]
    l = np.arange(k)[np.newaxis, :]
    angles = (2.0 * np.pi * j / steps + 2.0 * np.pi * l) / k
    return ComplexLoop(samples=r * np.exp(1j * angles))


def disjoint_cycles(perm: Perm) -> list[tuple[int, ...]]:
    """Cycle decomposition; each cycle starts at its smallest element."""
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        pos = perm[start]
        while pos != start:
            cycle.append(pos)
            seen[pos] = True
            pos = perm[pos]
        cycles.append(tuple(cycle))
    return cycles


def cycle_type(perm: Perm) -> tuple[int, ...]:
    """Cycle lengths in descending order (the conjugacy-class invariant)."""
    return tuple(sorted((len(c) for c in disjoint_cycles(perm)), reverse=True))


def describe_cycles(perm: Perm) -> str:
    """Human-readable cycle structure: "identity", "3-cycle", "(0 1)(2 4 5)", ..."""
    nontrivial = [c for c in disjoint_cycles(perm) if len(c) > 1]
    if not nontrivial:
        return "identity"
    notation = "".join("(" + " ".join(str(i) for i in c) + ")" for c in nontrivial)
    if len(nontrivial) == 1:
        return f"{len(nontrivial[0])}-cycle {notation}"
    return f"cycle type {cycle_type(perm)} {notation}"


__all__ = [
    "ComplexLoop",
    "Holonomy",
    "cycle_type",
    "describe_cycles",
    "disjoint_cycles",
    "match_step",
    "min_intra_gap",
    "roots_loop_generator",
    "track_loop",
]
