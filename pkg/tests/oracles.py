"""Independent reference implementations used to pin expected test values.

Everything here is deliberately written from scratch against the plain
definitions (minimum over all permutations, grid search, quadratic
formula) so the library under test is never its own oracle.
"""

import itertools
from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.permutations(range(n)))


@lru_cache(maxsize=None)
def perm_rows(n: int) -> np.ndarray:
    """All permutations of range(n) as an (n!, n) index array, lex order."""
    return np.array(all_perms(n), dtype=np.intp)


def min_matching(y, z) -> tuple[float, tuple[int, ...]]:
    """Min over permutations p of sum_k |y[k] - z[p[k]]|, first lex minimizer.

    Works for real and complex inputs (complex modulus costs).
    """
    y = np.asarray(y)
    z = np.asarray(z)
    rows = perm_rows(len(y))
    costs = np.abs(y[np.newaxis, :] - z[rows]).sum(axis=1)
    best = int(np.argmin(costs))  # argmin takes the first, i.e. lex-smallest
    return float(costs[best]), all_perms(len(y))[best]


def min_matching_cost(y, z) -> float:
    return min_matching(y, z)[0]


def grid_min_block_cost(values, lo=-12.0, hi=12.0, step=1e-3) -> float:
    """min over c in the grid of sum_j |values[j] - c|, by exhaustive search."""
    values = np.asarray(values, dtype=float)
    grid = np.arange(lo, hi + step / 2, step)
    return float(np.abs(values[np.newaxis, :] - grid[:, np.newaxis]).sum(axis=1).min())


def symmetric_2x2_eigenvalues(a: float, b: float, c: float) -> tuple[float, float]:
    """Eigenvalues of [[a, b], [b, c]] by the quadratic formula, ascending."""
    mean = (a + c) / 2.0
    radius = np.hypot((a - c) / 2.0, b)
    return (mean - radius, mean + radius)


def compose_by_application(p, q, n: int) -> tuple[int, ...]:
    """The permutation r with apply(r, x) == apply(q, apply(p, x)) for all x.

    Derived by pushing the basis tuple (0, 1, ..., n-1) through both maps:
    apply(p, x)[k] = x[p[k]], so the composite picks x[p[q[k]]].
    """
    return tuple(p[q[k]] for k in range(n))


def invert_by_search(p) -> tuple[int, ...]:
    """Inverse permutation found by brute index search."""
    n = len(p)
    return tuple(list(p).index(k) for k in range(n))
