import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import grid_min_block_cost
from symprod.core import apply_perm, compose, enumerate_perms, invert
from symprod.diagonal import (
    BlockPartition,
    boundary_class,
    dist_to_diagonal,
    equality_partition,
    is_nondescending,
    nearest_diagonal_point,
    perm_displacement,
    stabilizer_of,
)
from symprod.errors import CapExceededError, InputError


def test_equality_partition_frozen_examples():
    assert equality_partition([1.0, 1.0, 2.0]).blocks == ((0, 1),)
    assert equality_partition([5.0, 5.0, 5.0, 5.0]).blocks == ((0, 1, 2, 3),)
    assert equality_partition([0.0, 1e-12, 7.0], tol=1e-9).blocks == ((0, 1),)
    assert equality_partition([1.0, 2.0, 3.0]).blocks == ()


def test_equality_partition_is_transitively_closed():
    # 0~1 and 1~2 within tol, but |x0 - x2| > tol: still one block
    assert equality_partition([0.0, 0.5, 1.0], tol=0.6).blocks == ((0, 1, 2),)


def test_equality_partition_rejects_negative_tol():
    with pytest.raises(InputError):
        equality_partition([1.0, 2.0], tol=-1e-9)


def test_partition_validation():
    with pytest.raises(InputError):
        BlockPartition(blocks=((0,),), n=2)
    with pytest.raises(InputError):
        BlockPartition(blocks=((0, 1), (1, 2)), n=3)
    with pytest.raises(InputError):
        BlockPartition(blocks=((0, 3),), n=3)
    with pytest.raises(InputError):
        BlockPartition(blocks=((0, 0),), n=3)
    part = BlockPartition(blocks=((2, 0),), n=3)
    assert part.blocks == ((0, 2),)  # normalized to sorted form
    assert part.constrained == frozenset({0, 2})


def test_stabilizer_trivial():
    stab = stabilizer_of(BlockPartition(blocks=(), n=3))
    assert stab.elements == ((0, 1, 2),)
    assert stab.order == 1


def test_stabilizer_single_pair_block():
    stab = stabilizer_of(BlockPartition(blocks=((0, 1),), n=3))
    assert stab.order == 2
    assert set(stab.elements) == {(0, 1, 2), (1, 0, 2)}


def test_stabilizer_order_12_against_filter_oracle():
    part = BlockPartition(blocks=((0, 1), (2, 3, 4)), n=5)
    stab = stabilizer_of(part)
    assert stab.order == 12

    # Oracle: of all 120 permutations, keep those fixing z = (a,a,b,b,b)
    # for generic distinct a, b; that is the defining property.
    z = np.array([2.0, 2.0, 7.0, 7.0, 7.0])
    fixing = {p for p in enumerate_perms(5) if np.array_equal(apply_perm(p, z), z)}
    assert set(stab.elements) == fixing
    for p in stab.elements:
        assert np.array_equal(apply_perm(p, z), z)


def test_stabilizer_is_a_group():
    part = BlockPartition(blocks=((0, 1), (2, 3, 4)), n=5)
    elements = set(stabilizer_of(part).elements)
    for p in elements:
        assert invert(p) in elements
        for q in elements:
            assert compose(p, q) in elements


def test_stabilizer_order_formula_random():
    rng = np.random.default_rng(5)
    for _ in range(30):
        n = int(rng.integers(4, 9))
        k = int(rng.integers(2, n + 1))
        indices = rng.permutation(n)[:k]
        split = int(rng.integers(2, k)) if k >= 4 else k
        blocks = [tuple(indices[:split])]
        if k - split >= 2:
            blocks.append(tuple(indices[split:]))
        part = BlockPartition(blocks=tuple(blocks), n=n)
        expected = math.prod(math.factorial(len(b)) for b in part.blocks)
        assert stabilizer_of(part).order == expected


def test_stabilizer_cap():
    part = BlockPartition(blocks=(tuple(range(7)), tuple(range(7, 14))), n=14)
    with pytest.raises(CapExceededError):
        stabilizer_of(part)  # 5040 * 5040 elements is past the cap


def test_dist_to_diagonal_frozen_examples():
    assert dist_to_diagonal([3.0, 3.0, 9.0], BlockPartition(((0, 1),), 3)) == 0.0
    assert dist_to_diagonal([0.0, 2.0], BlockPartition(((0, 1),), 2)) == 2.0
    assert dist_to_diagonal([0.0, 1.0, 5.0], BlockPartition(((0, 1, 2),), 3)) == 5.0


def test_dist_to_diagonal_matches_grid_oracle_on_frozen_examples():
    assert grid_min_block_cost([0.0, 2.0]) == pytest.approx(2.0, abs=2e-3)
    assert grid_min_block_cost([0.0, 1.0, 5.0]) == pytest.approx(5.0, abs=2e-3)


def test_dist_to_diagonal_matches_grid_oracle_random():
    rng = np.random.default_rng(9)
    for _ in range(50):
        n = int(rng.integers(2, 7))
        x = rng.uniform(-10, 10, size=n)
        part = equality_partition(rng.choice([-1.0, 0.0, 1.0], size=n))
        if not part.blocks:
            part = BlockPartition(blocks=(tuple(range(n)),), n=n) if n >= 2 else part
        closed_form = dist_to_diagonal(x, part)
        oracle = sum(grid_min_block_cost(x[list(b)]) for b in part.blocks)
        assert closed_form == pytest.approx(oracle, abs=2e-3)


def test_nearest_diagonal_point_lies_in_set_and_attains():
    rng = np.random.default_rng(15)
    for _ in range(50):
        n = int(rng.integers(2, 7))
        x = rng.uniform(-10, 10, size=n)
        part = BlockPartition(blocks=(tuple(range(n)),), n=n)
        y = nearest_diagonal_point(x, part)
        assert len(set(y.tolist())) == 1  # all components equal: in the set
        assert float(np.abs(x - y).sum()) == pytest.approx(dist_to_diagonal(x, part))


def test_nearest_diagonal_point_takes_lower_median():
    part = BlockPartition(blocks=((0, 1),), n=2)
    assert np.array_equal(nearest_diagonal_point([0.0, 2.0], part), [0.0, 0.0])
    part4 = BlockPartition(blocks=((0, 1, 2, 3),), n=4)
    assert np.array_equal(
        nearest_diagonal_point([4.0, 1.0, 3.0, 2.0], part4), [2.0, 2.0, 2.0, 2.0]
    )


def test_nearest_diagonal_point_dimension_mismatch():
    with pytest.raises(InputError):
        nearest_diagonal_point([1.0, 2.0], BlockPartition(((0, 1),), 3))


def test_perm_displacement_examples():
    rng = np.random.default_rng(21)
    x = rng.uniform(-5, 5, size=4)
    assert perm_displacement(x, (0, 1, 2, 3)) == 0.0
    assert perm_displacement([0.0, 1.0], (1, 0)) == 2.0
    assert perm_displacement([1.0, 1.0, 4.0], (1, 0, 2)) == 0.0


def test_is_nondescending_examples():
    assert is_nondescending([1.0, 2.0, 2.0, 5.0])
    assert not is_nondescending([2.0, 1.0])
    assert is_nondescending([7.0])


def test_boundary_class_examples():
    assert boundary_class([1.0, 2.0, 3.0]) == "interior"
    assert boundary_class([1.0, 1.0, 3.0]) == "boundary"
    assert boundary_class([3.0, 1.0]) == "exterior"
    assert boundary_class([5.0]) == "interior"


def test_boundary_implies_nonempty_partition():
    rng = np.random.default_rng(27)
    for _ in range(200):
        n = int(rng.integers(2, 7))
        x = np.sort(rng.integers(0, n - 1, size=n)).astype(float)  # pigeonhole tie
        assert boundary_class(x) == "boundary"
        assert equality_partition(x, tol=0.0).blocks != ()


def test_exterior_has_open_neighborhood():
    # Largest descent r = (x_i - x_j) over an inversion; perturbations
    # smaller than r/4 in the 1-norm cannot repair the inversion.
    rng = np.random.default_rng(33)
    for _ in range(100):
        n = int(rng.integers(2, 7))
        x = rng.uniform(-10, 10, size=n)
        if is_nondescending(x):
            x = x[::-1].copy()
        if is_nondescending(x):  # all components equal, no inversion to keep
            continue
        drops = np.maximum.accumulate(x)[:-1] - x[1:]
        r = float(drops.max())
        assert r > 0
        for _ in range(20):
            delta = rng.uniform(-1, 1, size=n)
            delta *= (r / 4) * rng.uniform(0, 0.999) / np.abs(delta).sum()
            assert boundary_class(x + delta) == "exterior"


@given(
    st.integers(2, 6).flatmap(
        lambda n: st.lists(
            st.floats(-100, 100, width=64), min_size=n, max_size=n
        )
    )
)
def test_interior_only_under_identity(xs):
    x = np.sort(np.array(xs))
    if boundary_class(x) != "interior":
        return
    n = x.size
    for p in enumerate_perms(n):
        moved = apply_perm(p, x)
        if p == tuple(range(n)):
            assert is_nondescending(moved)
        else:
            assert not is_nondescending(moved)


def test_stabilizer_exactly_preserves_sorted_boundary_vector():
    x = np.array([1.0, 1.0, 3.0, 7.0, 7.0])
    part = equality_partition(x)
    stab = stabilizer_of(part)
    keepers = {
        p for p in enumerate_perms(5) if is_nondescending(apply_perm(p, x))
    }
    assert keepers == set(stab.elements)
