"""Coincidence patterns, their stabilizers, and the property suite.

Vectors with repeated components form "diagonal" sets, one per pattern of
which indices coincide.  Each pattern has a stabilizer: the permutations
that fix every such vector.  Near a diagonal set, stabilizer permutations
can only move a vector a little; that bound and its relatives are checked
here by randomized search.
"""

import numpy as np

from symprod import (
    BlockPartition,
    all_passed,
    boundary_class,
    dist_to_diagonal,
    equality_partition,
    nearest_diagonal_point,
    run_lemma_suite,
    stabilizer_of,
)


def main():
    print("== which components coincide ==")
    x = [2.0, 1.0, 2.0, 5.0, 1.0]
    part = equality_partition(x)
    print(f"x = {x}")
    print(f"blocks = {part.blocks} (index groups with equal values)")

    stab = stabilizer_of(part)
    print(f"stabilizer order = {stab.order} (= 2! * 2!)")
    print(f"elements = {stab.elements}")

    print()
    print("== distance to a pattern ==")
    y = [0.0, 1.0, 5.0]
    full = BlockPartition(blocks=((0, 1, 2),), n=3)
    print(f"y = {y}, forcing all three equal:")
    print(f"  nearest point = {nearest_diagonal_point(y, full)}")
    print(f"  cost = {dist_to_diagonal(y, full)} (the median minimizes 1-norm)")

    print()
    print("== the sorted cone ==")
    for v in ([1.0, 2.0, 3.0], [1.0, 1.0, 3.0], [3.0, 1.0, 2.0]):
        print(f"{v}: {boundary_class(v)}")

    print()
    print("== randomized property suite ==")
    results = run_lemma_suite(n_values=(2, 3, 4, 5), trials=200, seed=0)
    width = max(len(r.name) for r in results)
    for r in results:
        if r.n == 4:  # one size is enough for a demo table
            status = "PASS" if r.passed else "FAIL"
            print(f"  {r.name:<{width}} trials={r.trials:<5} {status}")
    print(f"all {len(results)} checks passed: {all_passed(results)}")

    print()
    print("== the displacement bound, seen directly ==")
    rng = np.random.default_rng(1)
    pattern = BlockPartition(blocks=((0, 1, 2),), n=4)
    eps = 0.5
    worst = 0.0
    for _ in range(1000):
        v = rng.uniform(-5, 5, size=4)
        v[:3] = v[0] + rng.uniform(-eps / 3, eps / 3, size=3)  # near the pattern
        if dist_to_diagonal(v, pattern) >= eps:
            continue
        for p in stabilizer_of(pattern).elements:
            moved = float(np.abs(v[np.asarray(p)] - v).sum())
            worst = max(worst, moved)
    print(f"largest stabilizer displacement with dist < {eps}: {worst:.4f} < {2 * eps}")


if __name__ == "__main__":
    main()
