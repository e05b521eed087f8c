"""Intersection theory on rational normal scrolls, cross-checked.

Evaluates the Euler characteristic of line bundles two ways, counts
sections of the hyperplane class, runs the arithmetic-genus computation
along its independent paths, and reproduces the classical trigonal and
tetragonal genus values.
"""

from __future__ import annotations

from scrollcurves import (
    Ambient,
    DivisorClass,
    RankTwoBundleClass,
    euler_characteristic,
    genus_on_cone,
    genus_on_surface,
    h0_class,
    pa_from_bundle,
)


def main() -> None:
    for dims in ((2, 3), (1, 1, 1), (1, 2, 3)):
        ambient = Ambient(dims)
        n = ambient.ambient_dimension
        h = DivisorClass(1, 0)
        print(f"scroll {dims}: d={ambient.d} e={ambient.e} N={n}")
        print(f"  chi(O) = {euler_characteristic(ambient, DivisorClass(0, 0))}")
        print(f"  h0(H) = {h0_class(ambient, h)[0]} (N+1 = {n + 1})")
        print(f"  chi(2H+F) = {euler_characteristic(ambient, DivisorClass(2, 1))}")
    print()

    print("curves cut by rank-2 bundles on threefold scrolls:")
    for g in (6, 10, 20, 40):
        n = g - 1
        ambient = Ambient.balanced(3, n - 2)
        bundle = RankTwoBundleClass.from_curve_data(4, -(g - 5), 4, 2 * g - 2, n)
        print(f"  tetragonal genus {g}: pa = {pa_from_bundle(ambient, bundle)}")
    print()

    print("divisors on surface scrolls:")
    print(f"  rational normal cubic: pa = {genus_on_surface(3, 3, 1)}")
    print(f"  degree-4 curve on the cone in P3: pa = {genus_on_cone(4, 3)}")
    for g in (6, 12, 24):
        print(f"  trigonal genus {g}: pa = {genus_on_surface(2 * g - 2, g - 1, 3)}")


if __name__ == "__main__":
    main()
