"""The matching distance on unordered n-tuples, with three engines.

A point of the quotient space is a size-n multiset of reals.  The distance
between two multisets is the minimum over all pairings of the summed
absolute differences, i.e. a minimal-cost linear assignment under the
1-norm.  Three interchangeable engines compute it:

- ``dist_bruteforce``: enumerate all n! pairings (the oracle, n <= 8);
- ``dist_sorted``: pair sorted order statistics (real tuples, any n);
- ``dist_assignment``: an O(n^3) assignment solver (real or complex).

All engines return identical values on common ground; the test suite
cross-validates them.  Everything here is pure and allocates per call,
so concurrent use is safe.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from .core import (
    BRUTE_FORCE_CAP,
    Perm,
    as_complex_vector,
    as_real_vector,
    perm_matrix,
)
from .errors import CapExceededError, InputError


def l1_norm(x) -> float:
    """Sum of absolute values of the components."""
    x = np.asarray(x)
    return float(np.abs(x).sum())


class UnorderedTuple:
    """An unordered n-tuple of reals, stored as its sorted representative.

    Construction from any reordering of the same multiset yields the same
    canonical value, so equality and hashing are well-defined on classes.
    """

    __slots__ = ("_canonical",)

    def __init__(self, values):
        arr = np.sort(as_real_vector(values))
        arr.setflags(write=False)
        self._canonical = arr

    @property
    def canonical(self) -> np.ndarray:
        """The non-descendingly sorted representative (read-only array)."""
        return self._canonical

    @property
    def n(self) -> int:
        return self._canonical.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnorderedTuple):
            return NotImplemented
        return self._canonical.shape == other._canonical.shape and bool(
            np.all(self._canonical == other._canonical)
        )

    def __hash__(self) -> int:
        return hash(self._canonical.tobytes())

    def __repr__(self) -> str:
        inner = ", ".join(repr(float(v)) for v in self._canonical)
        return f"UnorderedTuple([{inner}])"


@dataclass(frozen=True)
class Distance:
    """A distance value together with one pairing that attains it.

    ``attaining_perm`` is the permutation p with
    ``value == l1_norm(y - apply_perm(p, z))``.
    """

    value: float
    attaining_perm: Perm


def _coerce_pair(y, z, *, allow_complex: bool):
    if isinstance(y, UnorderedTuple):
        y = y.canonical
    if isinstance(z, UnorderedTuple):
        z = z.canonical
    ya = np.asarray(y)
    za = np.asarray(z)
    if allow_complex and (np.iscomplexobj(ya) or np.iscomplexobj(za)):
        ya, za = as_complex_vector(ya, name="first tuple"), as_complex_vector(za, name="second tuple")
    else:
        ya, za = as_real_vector(ya, name="first tuple"), as_real_vector(za, name="second tuple")
    if ya.size != za.size:
        raise InputError(f"dimension mismatch: {ya.size} vs {za.size}")
    return ya, za


def dist_bruteforce(y, z) -> Distance:
    """Minimize over all n! pairings explicitly (n <= 8).

    Ties are broken by the lexicographically smallest permutation.  Accepts
    real or complex tuples; costs use the absolute value / modulus.
    """
    y, z = _coerce_pair(y, z, allow_complex=True)
    n = y.size
    if n > BRUTE_FORCE_CAP:
        raise CapExceededError(
            f"brute force too large: n = {n} exceeds cap {BRUTE_FORCE_CAP}"
        )
    perms = perm_matrix(n)
    costs = np.abs(y[np.newaxis, :] - z[perms]).sum(axis=1)
    best = int(np.argmin(costs))  # first minimum = lexicographically smallest
    return Distance(float(costs[best]), tuple(int(i) for i in perms[best]))


def dist_sorted(y, z) -> Distance:
    """Pair the order statistics of two real tuples.

    Sorting both inputs non-descendingly and summing componentwise absolute
    differences attains the minimum over all pairings (components live on
    the real line, so any crossing pairing can be uncrossed without
    increasing cost).  Works at any n; ties follow stable sort order.
    """
    y, z = _coerce_pair(y, z, allow_complex=False)
    order_y = np.argsort(y, kind="stable")
    order_z = np.argsort(z, kind="stable")
    value = float(np.abs(y[order_y] - z[order_z]).sum())
    # Pair y[order_y[i]] with z[order_z[i]]: the minimizing p has
    # p[order_y[i]] = order_z[i].
    p = np.empty(y.size, dtype=np.intp)
    p[order_y] = order_z
    return Distance(value, tuple(int(i) for i in p))


def dist_assignment(y, z) -> Distance:
    """Solve the pairing as a minimal-cost assignment (real or complex).

    The cost of pairing component j of ``y`` with component k of ``z`` is
    ``abs(y[j] - z[k])``.  Deterministic for a fixed input (single-threaded
    solver), but tie-breaking among equal-cost pairings is solver-defined.
    """
    y, z = _coerce_pair(y, z, allow_complex=True)
    cost = np.abs(y[:, np.newaxis] - z[np.newaxis, :])
    rows, cols = linear_sum_assignment(cost)
    value = float(cost[rows, cols].sum())
    return Distance(value, tuple(int(k) for k in cols))


_ENGINES = {
    "sorted": dist_sorted,
    "assignment": dist_assignment,
    "brute": dist_bruteforce,
}


def dist(y, z, engine: str = "auto") -> Distance:
    """Distance between two unordered tuples.

    ``engine`` is one of "sorted", "assignment", "brute", or "auto"
    (sorted for real input, assignment for complex).
    """
    if engine == "auto":
        complex_input = any(
            np.iscomplexobj(v.canonical if isinstance(v, UnorderedTuple) else np.asarray(v))
            for v in (y, z)
        )
        engine = "assignment" if complex_input else "sorted"
    try:
        fn = _ENGINES[engine]
    except KeyError:
        raise InputError(f"unknown engine {engine!r}; choose from {sorted(_ENGINES)}") from None
    return fn(y, z)


def lexmin_assignment_perm(y, z) -> Perm:
    """The lexicographically smallest minimal-cost pairing (n <= 8).

    Same value as ``dist_assignment`` but with the brute-force tie-break,
    used where downstream composition must be reproducible bit-for-bit.
    """
    return dist_bruteforce(y, z).attaining_perm


def engine_names() -> list[str]:
    return sorted(_ENGINES)


__all__ = [
    "Distance",
    "UnorderedTuple",
    "dist",
    "dist_assignment",
    "dist_bruteforce",
    "dist_sorted",
    "engine_names",
    "l1_norm",
    "lexmin_assignment_perm",
]
