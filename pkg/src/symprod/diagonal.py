"""Coincidence patterns of tuple components and their permutation stabilizers.

A *block partition* lists disjoint index blocks, each of size >= 2.  It
describes the set of vectors whose components agree within every block
(a "diagonal" set).  This module computes, for such patterns:

- the partition of near-equal components of a concrete vector,
- the subgroup of permutations fixing every vector with that pattern,
- the 1-norm distance from a vector to the diagonal set (closed form),
- how far a permutation moves a vector,
- order classification of a vector relative to the sorted cone.

Pure functions on immutable values throughout.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .core import (
    STABILIZER_ORDER_CAP,
    Perm,
    apply_perm,
    as_real_vector,
    identity_perm,
)
from .errors import CapExceededError, InputError


@dataclass(frozen=True)
class BlockPartition:
    """Disjoint index blocks over range(n), every block of size >= 2.

    An empty block list is allowed and describes the whole space (no
    coincidence constraints).  Indices are 0-based.
    """

    blocks: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"need n >= 1, got n = {self.n}")
        seen: set[int] = set()
        normalized = []
        for block in self.blocks:
            ids = tuple(sorted(int(i) for i in block))
            if len(ids) < 2:
                raise InputError(f"block {ids} has size < 2")
            if len(set(ids)) != len(ids):
                raise InputError(f"block {ids} repeats an index")
            if ids[0] < 0 or ids[-1] >= self.n:
                raise InputError(f"block {ids} out of range for n = {self.n}")
            if seen & set(ids):
                raise InputError("blocks are not pairwise disjoint")
            seen.update(ids)
            normalized.append(ids)
        normalized.sort()
        object.__setattr__(self, "blocks", tuple(normalized))

    @property
    def constrained(self) -> frozenset[int]:
        """Indices that belong to some block."""
        return frozenset(i for block in self.blocks for i in block)


@dataclass(frozen=True)
class Stabilizer:
    """The permutations fixing every vector of a diagonal set pointwise.

    Exactly the permutations shuffling indices within blocks and fixing
    everything else; materialized as an explicit, lexicographically sorted
    element list (the order is the product of the block factorials).
    """

    elements: tuple[Perm, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, perm) -> bool:
        return tuple(perm) in set(self.elements)


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int):
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return
        if self.rank[ri] < self.rank[rj]:
            ri, rj = rj, ri
        self.parent[rj] = ri
        if self.rank[ri] == self.rank[rj]:
            self.rank[ri] += 1


def equality_partition(x, tol: float = 0.0) -> BlockPartition:
    """Group indices whose components coincide within ``tol``.

    Indices j, k land in the same block iff |x[j] - x[k]| <= tol, closed
    transitively (union-find over near-equal pairs).  Blocks of size 1 are
    omitted; an all-distinct vector yields an empty block list.
    """
    x = as_real_vector(x)
    if tol < 0:
        raise InputError(f"tolerance must be nonnegative, got {tol}")
    n = x.size
    uf = _UnionFind(n)
    for j in range(n):
        for k in range(j + 1, n):
            if abs(x[j] - x[k]) <= tol:
                uf.union(j, k)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(uf.find(i), []).append(i)
    blocks = tuple(tuple(g) for g in groups.values() if len(g) >= 2)
    return BlockPartition(blocks=blocks, n=n)


def stabilizer_of(partition: BlockPartition) -> Stabilizer:
    """Materialize the subgroup fixing the partition's diagonal set.

    Built directly as the product of within-block symmetric groups (never
    by filtering all of S_n, so n itself is unbounded); raises when the
    group order exceeds the enumeration cap.
    """
    order = math.prod(math.factorial(len(b)) for b in partition.blocks)
    if order > STABILIZER_ORDER_CAP:
        raise CapExceededError(
            f"stabilizer order {order} exceeds enumeration cap {STABILIZER_ORDER_CAP}"
        )
    base = list(identity_perm(partition.n))
    elements = []
    block_perm_choices = [
        itertools.permutations(block) for block in partition.blocks
    ]
    for choice in itertools.product(*block_perm_choices):
        word = base.copy()
        for block, images in zip(partition.blocks, choice):
            for pos, img in zip(block, images):
                word[pos] = img
        elements.append(tuple(word))
    elements.sort()
    return Stabilizer(elements=tuple(elements))


def nearest_diagonal_point(x, partition: BlockPartition) -> np.ndarray:
    """A closest point (1-norm) of the diagonal set to ``x``.

    Within each block the optimal common value is a median of the block's
    components; the lower median is returned for determinism (the distance
    itself is unaffected by the choice).  Unconstrained components stay.
    """
    x = as_real_vector(x)
    if partition.n != x.size:
        raise InputError(f"partition over n = {partition.n} against tuple of size {x.size}")
    y = x.copy()
    for block in partition.blocks:
        values = np.sort(x[list(block)])
        y[list(block)] = values[(len(values) - 1) // 2]
    return y


def dist_to_diagonal(x, partition: BlockPartition) -> float:
    """1-norm distance from ``x`` to the partition's diagonal set, in closed form."""
    y = nearest_diagonal_point(x, partition)
    return float(np.abs(np.asarray(x, dtype=float) - y).sum())


def perm_displacement(x, perm: Sequence[int]) -> float:
    """How far ``perm`` moves ``x``: the 1-norm of ``apply_perm(perm, x) - x``."""
    x = as_real_vector(x)
    return float(np.abs(apply_perm(perm, x) - x).sum())


def is_nondescending(x) -> bool:
    """True iff x[0] <= x[1] <= ... <= x[n-1] (exact comparison)."""
    x = as_real_vector(x)
    return bool(np.all(np.diff(x) >= 0))


BoundaryClass = Literal["interior", "boundary", "exterior"]


def boundary_class(x) -> BoundaryClass:
    """Position of ``x`` relative to the cone of non-descending vectors.

    "interior": strictly ascending; "boundary": non-descending with at
    least one tie; "exterior": not non-descending.  Comparisons are exact:
    the classification describes the vector as given, not measurement noise.
    """
    x = as_real_vector(x)
    diffs = np.diff(x)
    if np.any(diffs < 0):
        return "exterior"
    if np.any(diffs == 0):
        return "boundary"
    return "interior"


__all__ = [
    "BlockPartition",
    "BoundaryClass",
    "Stabilizer",
    "boundary_class",
    "dist_to_diagonal",
    "equality_partition",
    "is_nondescending",
    "nearest_diagonal_point",
    "perm_displacement",
    "stabilizer_of",
]
