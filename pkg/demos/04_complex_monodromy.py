"""Why no continuous choice exists over the complex numbers.

Track the k-th roots of a point circling the origin: after one full turn
the set of roots returns to itself, but each individual root has moved to
the next one over.  Matching components between consecutive samples and
composing the matchings exposes this as a k-cycle permutation, the loop's
holonomy.  A nonzero holonomy means no continuous labeling of the tuple
exists along the loop, so nothing like "sort the values" can work in the
complex plane.

Real data never does this: real loops always track back to the identity.
"""

import numpy as np

from symprod import (
    ComplexLoop,
    UndersampledLoopError,
    describe_cycles,
    roots_loop_generator,
    track_loop,
)


def main():
    print("== square roots around the origin ==")
    loop = roots_loop_generator(k=2, steps=256)
    h = track_loop(loop)
    print(f"samples: {loop.step_count}, tuple size: {loop.tuple_n}")
    print(f"holonomy: {describe_cycles(h.permutation)} (perm {h.permutation})")
    print(f"total matched movement: {h.total_path_cost:.6f} (~ 2*pi: each root "
          f"walks half the circle)")

    print()
    print("== cube roots, quartic roots ==")
    for k, steps in ((3, 512), (4, 512)):
        h = track_loop(roots_loop_generator(k=k, steps=steps))
        print(f"k = {k}: {describe_cycles(h.permutation)}")

    print()
    print("== refinement does not change the story ==")
    for steps in (256, 512, 1024):
        h = track_loop(roots_loop_generator(k=2, steps=steps))
        print(f"steps = {steps:>5}: {describe_cycles(h.permutation)}")

    print()
    print("== too few samples is detected, not mislabeled ==")
    try:
        track_loop(roots_loop_generator(k=2, steps=16))
        theta = 2 * np.pi * np.arange(6) / 6
        samples = np.stack([np.exp(1j * theta / 2), -np.exp(1j * theta / 2)], axis=1)
        track_loop(ComplexLoop(samples=samples))
    except UndersampledLoopError as exc:
        print(f"UndersampledLoopError: {exc}")

    print()
    print("== real loops are tame ==")
    theta = 2 * np.pi * np.arange(64) / 64
    samples = np.stack([np.sin(theta) + 3.0, np.cos(theta) - 3.0], axis=1)
    h = track_loop(ComplexLoop(samples=samples.astype(complex)))
    print(f"two real components oscillating without collision: "
          f"{describe_cycles(h.permutation)}")


if __name__ == "__main__":
    main()
