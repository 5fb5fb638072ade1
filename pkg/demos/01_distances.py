"""A tour of the distance layer.

Two rankings disagree menu by menu: every subset of two or more candidates
is charged the measure of the symmetric difference of the two menu
favourites, weighted by menu size.  This script evaluates the same pair
through the literal menu enumeration and through the closed form, then
shows the footrule relaxation and window truncations.

Run:  python demos/01_distances.py
"""

from fractions import Fraction as F

from menurank import (
    MenuWeights,
    Measure,
    Permutation,
    distance,
    distance_naive,
    footrule,
    make_params,
    preset,
    truncated_distance,
)

a = Permutation((1, 2, 3, 4))
b = Permutation((3, 1, 4, 2))

print("rankings:")
print(f"  a = {a}")
print(f"  b = {b}")

print("\npairwise weights (inversion counting, doubled):")
params = make_params(*preset("kendall", 4))
print(f"  menu enumeration : {distance_naive(params, a, b)}")
print(f"  closed form      : {distance(params, a, b)}")

print("\nflat weights (every menu counts once):")
flat = make_params(*preset("ok-nishimura", 4))
print(f"  menu enumeration : {distance_naive(flat, a, b)}")
print(f"  closed form      : {distance(flat, a, b)}")

print("\ncustom weights and a measure favouring candidate 4:")
custom = make_params(MenuWeights([2, F(1, 2), F(1, 4)]), Measure([1, 1, 1, 3]))
print(f"  distance(a, b)   : {distance(custom, a, b)}")
print(f"  distance(b, a)   : {distance(custom, b, a)}  (symmetric)")

print("\nfootrule relaxation under flat weights:")
fr = footrule(flat.weights, a, b)
print(f"  footrule         : {fr}")
print(f"  distance         : {distance(flat, a, b)}  (always sandwiched above the footrule)")

print("\nwindow truncations of the flat distance (positions first..last of a):")
for first, last in [(1, 1), (1, 2), (2, 3), (1, 4)]:
    value = truncated_distance(flat, a, b, first, last)
    print(f"  window [{first}, {last}]    : {value}")
print("  the full window [1, 4] recovers the distance exactly")
