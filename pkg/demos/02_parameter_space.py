"""The parameter space: classification, the weight bijection, presets.

Menu weights pair with a candidate measure; only some sign patterns produce
usable distances.  ``classify`` places a pair exactly, and the linear
bijection between menu weights and per-position swap prices exposes when
top swaps cost more than bottom ones.

Run:  python demos/02_parameter_space.py
"""

from fractions import Fraction as F

from menurank import (
    Measure,
    MenuWeights,
    approximation_factor,
    classify,
    counting_measure,
    is_totally_monotone,
    menu_to_position_weights,
    position_to_menu_weights,
    preset,
)

print("classification of sample parameter pairs (n = 4):")
samples = [
    ("pairwise / counting", MenuWeights([1, 0, 0]), counting_measure(4)),
    ("flat / counting", MenuWeights([1, 1, 1]), counting_measure(4)),
    ("flat / one negative", MenuWeights([1, 1, 1]), Measure([-1, 1, 1, 1])),
    ("pairwise / one negative", MenuWeights([1, 0, 0]), Measure([-1, 2, 3, 4])),
    ("zero weights", MenuWeights([0, 0, 0]), counting_measure(4)),
    ("mixed signs", MenuWeights([6, -1, 1]), counting_measure(4)),
]
for label, weights, mu in samples:
    print(f"  {label:<24} -> {classify(weights, mu).value}")

print("\nmenu weights <-> position swap prices (n = 5):")
for name in ("kendall", "ok-nishimura", "linear"):
    weights, _ = preset(name, 5)
    prices = menu_to_position_weights(weights)
    back = position_to_menu_weights(prices)
    assert back == weights
    print(f"  {name:<14} weights {tuple(map(str, weights.values))}")
    print(f"  {'':<14} prices  {tuple(map(str, prices.values))} (roundtrip exact)")

print("\nnonnegative weights always price top swaps at least as high:")
weights = MenuWeights([2, 1, F(1, 2), F(1, 4)])
prices = menu_to_position_weights(weights)
print(f"  prices {tuple(map(str, prices.values))}")
print(f"  totally monotone: {is_totally_monotone(prices)}")

print("\nfootrule sandwich factors by preset and dimension:")
print(f"  {'preset':<22}" + "".join(f" n={n:<6}" for n in range(3, 8)))
for name, param in [("kendall", None), ("ok-nishimura", None), ("linear", None), ("binomial", F(1, 2))]:
    row = [approximation_factor(preset(name, n, param)[0]) for n in range(3, 8)]
    print(f"  {name:<22}" + "".join(f" {str(v):<7}" for v in row))
print("  (pairwise climbs towards 2, the others towards 3/2)")
