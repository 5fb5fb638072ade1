"""The parameter space of menu-weighted rank distances.

Two exact-rational parameter vectors drive everything:

* menu weights ``w = (w_2, ..., w_n)`` scoring disagreements on menus by
  their size, and
* a measure ``mu = (mu_1, ..., mu_n)`` scoring the candidates involved.

From the menu weights we derive the polynomial

    downset_mass(w, t) = sum_k w_k * C(t, k - 1),

the total menu weight a candidate collects against ``t`` less-preferred
rivals; its increments are the per-position swap prices

    position_weights[a] = downset_mass(n - a) - downset_mass(n - a - 1),

and the linear map between menu weights and position weights is a bijection
with an explicit alternating-sum inverse.  ``classify`` places a parameter
pair into one of four regions (metric / semimetric only / trivially zero /
not a semimetric): measure conditions are sign patterns and pairwise sums,
while the weight-side region is closed-form for nonnegative, nonpositive or
pairwise-only weights and decided by exact enumeration otherwise.

All arithmetic is over ``fractions.Fraction``: equality tests downstream are
bit-exact, and the dimensions involved are small enough that speed never
argues for floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

Rational = Union[int, str, Fraction]


def as_fraction(value: Rational) -> Fraction:
    """Coerce ints, 'p/q' strings, or Fractions to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {value!r}")


def _fraction_tuple(values: Iterable[Rational]) -> tuple[Fraction, ...]:
    return tuple(as_fraction(v) for v in values)


@lru_cache(maxsize=None)
def binomial_row(t: int) -> tuple[int, ...]:
    """Row ``t`` of Pascal's triangle as exact integers."""
    if t < 0:
        raise ValueError("binomial rows start at t = 0")
    if t == 0:
        return (1,)
    prev = binomial_row(t - 1)
    return tuple(
        (prev[k - 1] if k else 0) + (prev[k] if k < t else 0) for k in range(t + 1)
    )


def binomial(t: int, k: int) -> int:
    if k < 0 or k > t:
        return 0
    return binomial_row(t)[k]


@dataclass(frozen=True)
class MenuWeights:
    """Exact weights ``(w_2, ..., w_n)`` indexed by menu size."""

    values: tuple[Fraction, ...]

    def __init__(self, values: Iterable[Rational]):
        object.__setattr__(self, "values", _fraction_tuple(values))
        if not self.values:
            raise ValueError("menu weights need at least the size-2 entry")

    @property
    def n(self) -> int:
        return len(self.values) + 1

    def weight(self, size: int) -> Fraction:
        """The weight attached to menus of ``size`` candidates."""
        if not 2 <= size <= self.n:
            raise ValueError(f"menu size {size} outside 2..{self.n}")
        return self.values[size - 2]

    def negate(self) -> "MenuWeights":
        return MenuWeights(tuple(-v for v in self.values))

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.values)

    def is_pairwise_only(self) -> bool:
        """True when only the size-2 weight may be nonzero."""
        return all(v == 0 for v in self.values[1:])


@dataclass(frozen=True)
class Measure:
    """Exact per-candidate importances ``(mu_1, ..., mu_n)``.

    No sign restriction is imposed at construction; ``classify`` decides
    which sign patterns yield usable distances.
    """

    values: tuple[Fraction, ...]

    def __init__(self, values: Iterable[Rational]):
        object.__setattr__(self, "values", _fraction_tuple(values))
        if not self.values:
            raise ValueError("a measure needs at least one candidate")

    @property
    def n(self) -> int:
        return len(self.values)

    def of(self, candidate: int) -> Fraction:
        if not 1 <= candidate <= self.n:
            raise ValueError(f"candidate {candidate} outside 1..{self.n}")
        return self.values[candidate - 1]

    def negate(self) -> "Measure":
        return Measure(tuple(-v for v in self.values))

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.values)

    def is_positive(self) -> bool:
        return all(v > 0 for v in self.values)

    def pairwise_sums_nonnegative(self) -> bool:
        return self._pairwise(lambda s: s >= 0)

    def pairwise_sums_positive(self) -> bool:
        return self._pairwise(lambda s: s > 0)

    def _pairwise(self, ok) -> bool:
        vals = self.values
        return all(
            ok(vals[i] + vals[j])
            for i in range(len(vals))
            for j in range(i + 1, len(vals))
        )


def counting_measure(n: int) -> Measure:
    return Measure([1] * n)


@dataclass(frozen=True)
class PositionWeights:
    """Exact swap prices ``(p_1, ..., p_{n-1})`` indexed by position."""

    values: tuple[Fraction, ...]

    def __init__(self, values: Iterable[Rational]):
        object.__setattr__(self, "values", _fraction_tuple(values))
        if not self.values:
            raise ValueError("position weights need at least one entry")

    @property
    def n(self) -> int:
        return len(self.values) + 1

    def at(self, position: int) -> Fraction:
        if not 1 <= position <= self.n - 1:
            raise ValueError(f"position {position} outside 1..{self.n - 1}")
        return self.values[position - 1]


def downset_mass(weights: MenuWeights, t: int) -> Fraction:
    """Total weight of menus a candidate tops against ``t`` dominated rivals."""
    if t < 0:
        raise ValueError("down-set sizes are nonnegative")
    return sum(
        (w * binomial(t, k - 1) for k, w in enumerate(weights.values, start=2)),
        Fraction(0),
    )


def downset_mass_table(weights: MenuWeights) -> tuple[Fraction, ...]:
    """``downset_mass`` tabulated at t = 0..n-1, by Pascal's recurrence.

    Entry 0 is always 0 and entry 1 equals the size-2 menu weight.
    """
    n = weights.n
    # row[k] = C(t, k-1) for k = 2..n, updated in place per Pascal
    row = [0] * (n - 1)
    table = [Fraction(0)]
    for t in range(1, n):
        for k in range(n - 2, 0, -1):
            row[k] += row[k - 1]
        row[0] = t  # C(t, 1)
        table.append(
            sum((w * c for w, c in zip(weights.values, row) if c), Fraction(0))
        )
    return tuple(table)


def menu_to_position_weights(weights: MenuWeights) -> PositionWeights:
    """Swap price at position a: the increment of ``downset_mass`` at n - a - 1."""
    n = weights.n
    return PositionWeights(
        tuple(
            sum(
                (
                    w * binomial(n - a - 1, k - 2)
                    for k, w in enumerate(weights.values, start=2)
                ),
                Fraction(0),
            )
            for a in range(1, n)
        )
    )


def position_to_menu_weights(prices: PositionWeights) -> MenuWeights:
    """Exact inverse of ``menu_to_position_weights`` (alternating sums)."""
    n = prices.n
    phi = prices.values

    def menu_weight(a: int) -> Fraction:
        return sum(
            (
                (-1 if (a + k) % 2 else 1) * binomial(a - 2, k) * phi[n - 2 - k]
                for k in range(a - 1)
            ),
            Fraction(0),
        )

    return MenuWeights(tuple(menu_weight(a) for a in range(2, n + 1)))


def is_totally_monotone(prices: PositionWeights) -> bool:
    """Positive entries whose alternating finite differences all stay >= 0."""
    current = list(prices.values)
    if any(v <= 0 for v in current):
        return False
    sign = 1
    while len(current) > 1:
        current = [b - a for a, b in zip(current, current[1:])]
        sign = -sign
        if any(sign * v < 0 for v in current):
            return False
    return True


class ParamLabel(Enum):
    """Where a (menu weights, measure) pair sits in the parameter space."""

    METRIC = "Metric"
    SEMIMETRIC_ONLY = "SemimetricOnly"
    TRIVIAL_ZERO = "TrivialZero"
    NOT_SEMIMETRIC = "NotSemimetric"


MIXED_SIGN_REGION_LIMIT = 6


@lru_cache(maxsize=None)
def neutral_region(weights: MenuWeights) -> tuple[bool, bool]:
    """Whether the counting-measure distance is a semimetric / a metric.

    Nonnegative weights always give a semimetric, a metric exactly when the
    size-2 weight is positive (a disagreeing pair always contributes it).
    Weights of mixed sign have no closed-form region: after two cheap
    necessary screens (position prices nonnegative, and no price below the
    last one, from the triangle through an adjacent swap towards the
    antipode) the membership is decided by exact enumeration, using
    relabelling invariance to pin one endpoint.  That enumeration is guarded
    to n <= 6.
    """
    if weights.is_nonnegative():
        return True, weights.values[0] > 0
    if all(v <= 0 for v in weights.values):
        return False, False  # nonzero and nonpositive: swap distances go negative
    phi = menu_to_position_weights(weights).values
    if any(v < 0 for v in phi) or any(v < phi[-1] for v in phi):
        return False, False
    n = weights.n
    if n > MIXED_SIGN_REGION_LIMIT:
        raise ValueError(
            "mixed-sign menu weights have no closed-form region; exact "
            f"classification is supported for n <= {MIXED_SIGN_REGION_LIMIT}"
        )
    from itertools import permutations as it_perms

    f, _ = _scaled_ints(downset_mass_table(weights))
    perms = list(it_perms(range(1, n + 1)))
    index = {p: i for i, p in enumerate(perms)}

    def below_masks(p):
        out = [0] * n
        mask = 0
        for c in reversed(p):
            out[c - 1] = mask
            mask |= 1 << (c - 1)
        return out

    identity_below = below_masks(tuple(range(1, n + 1)))
    from_identity = []
    for p in perms:
        masks = below_masks(p)
        total = 0
        for c in range(n):
            ib = identity_below[c]
            pb = masks[c]
            total += f[ib.bit_count()] + f[pb.bit_count()] - 2 * f[(ib & pb).bit_count()]
        from_identity.append(total)
    if any(v < 0 for v in from_identity):
        return False, False
    inverses = {}
    for p in perms:
        inv = [0] * n
        for i, c in enumerate(p):
            inv[c - 1] = i + 1
        inverses[p] = tuple(inv)
    for w in perms:
        base = from_identity[index[w]]
        inv_w = inverses[w]
        for q in perms:
            relative = tuple(inv_w[c - 1] for c in q)
            if from_identity[index[q]] > base + from_identity[index[relative]]:
                return False, False
    identity_tuple = tuple(range(1, n + 1))
    positive = all(
        v > 0 for p, v in zip(perms, from_identity) if p != identity_tuple
    )
    return True, positive


def _positive_branch(weights: MenuWeights, mu: Measure) -> str | None:
    """Classify assuming the 'positive' orientation; None when outside it."""
    if weights.is_pairwise_only():
        w2 = weights.values[0]
        if w2 > 0 and mu.pairwise_sums_positive():
            return "metric"
        if w2 >= 0 and mu.pairwise_sums_nonnegative():
            return "semimetric"
        return None
    if not mu.is_nonnegative():
        return None
    in_semimetric, in_metric = neutral_region(weights)
    if in_metric and mu.pairwise_sums_positive():
        return "metric"
    if in_semimetric:
        return "semimetric"
    return None


def classify(weights: MenuWeights, mu: Measure) -> ParamLabel:
    """Exact region test for a parameter pair.

    The distance is identically zero when either vector vanishes.  Otherwise,
    up to negating both vectors at once (which leaves the distance
    unchanged), for n >= 3:

    * weights supported on menu size 2 pair with any measure whose pairwise
      sums are nonnegative (positive and with a positive size-2 weight for a
      metric);
    * all other weight vectors need a nonnegative measure and a weight
      vector whose neutral distance is itself a semimetric
      (``neutral_region``); the metric additionally needs positive pairwise
      measure sums, which allows at most one candidate of measure zero.

    n = 2 only has the pairwise branch.
    """
    if weights.n != mu.n:
        raise ValueError(f"dimension mismatch: {weights.n} vs {mu.n}")
    if all(v == 0 for v in weights.values) or all(v == 0 for v in mu.values):
        return ParamLabel.TRIVIAL_ZERO
    if mu.n == 2:
        w2 = weights.values[0]
        s = mu.values[0] + mu.values[1]
        if w2 > 0 and s > 0 or w2 < 0 and s < 0:
            return ParamLabel.METRIC
        if s == 0:
            return ParamLabel.SEMIMETRIC_ONLY
        return ParamLabel.NOT_SEMIMETRIC
    verdicts = {
        _positive_branch(weights, mu),
        _positive_branch(weights.negate(), mu.negate()),
    }
    if "metric" in verdicts:
        return ParamLabel.METRIC
    if "semimetric" in verdicts:
        return ParamLabel.SEMIMETRIC_ONLY
    return ParamLabel.NOT_SEMIMETRIC


def _scaled_ints(values: Sequence[Fraction]) -> tuple[tuple[int, ...], int]:
    """Clear denominators: values[i] == ints[i] / scale exactly."""
    scale = 1
    for v in values:
        scale = scale * v.denominator // gcd(scale, v.denominator)
    return tuple(int(v * scale) for v in values), scale


@dataclass(frozen=True)
class DistanceParams:
    """A parameter pair with its tabulated down-set masses.

    The integer-scaled copies of the table, measure and weights let distance
    evaluators run their inner loops over plain integers and divide once at
    the end; results are identical Fractions either way.  The classification
    label is computed on first access: distances are well defined for any
    signs, while classifying mixed-sign weights needs the exact-region
    machinery (guarded to n <= 6).
    """

    weights: MenuWeights
    mu: Measure
    table: tuple[Fraction, ...] = field(compare=False)
    int_table: tuple[int, ...] = field(compare=False, repr=False)
    table_scale: int = field(compare=False, repr=False)
    int_mu: tuple[int, ...] = field(compare=False, repr=False)
    mu_scale: int = field(compare=False, repr=False)
    int_weights: tuple[int, ...] = field(compare=False, repr=False)
    weights_scale: int = field(compare=False, repr=False)

    @property
    def n(self) -> int:
        return self.mu.n

    @property
    def label(self) -> ParamLabel:
        cached = self.__dict__.get("_label")
        if cached is None:
            cached = classify(self.weights, self.mu)
            object.__setattr__(self, "_label", cached)
        return cached

    def is_semimetric(self) -> bool:
        return self.label in (
            ParamLabel.METRIC,
            ParamLabel.SEMIMETRIC_ONLY,
            ParamLabel.TRIVIAL_ZERO,
        )


def make_params(
    weights: MenuWeights | Sequence[Rational],
    mu: Measure | Sequence[Rational] | None = None,
) -> DistanceParams:
    """Bundle menu weights and a measure (counting by default) for evaluation."""
    if not isinstance(weights, MenuWeights):
        weights = MenuWeights(weights)
    if mu is None:
        mu = counting_measure(weights.n)
    elif not isinstance(mu, Measure):
        mu = Measure(mu)
    if weights.n != mu.n:
        raise ValueError(f"dimension mismatch: weights over {weights.n}, measure over {mu.n}")
    table = downset_mass_table(weights)
    int_table, table_scale = _scaled_ints(table)
    int_mu, mu_scale = _scaled_ints(mu.values)
    int_weights, weights_scale = _scaled_ints(weights.values)
    return DistanceParams(
        weights=weights,
        mu=mu,
        table=table,
        int_table=int_table,
        table_scale=table_scale,
        int_mu=int_mu,
        mu_scale=mu_scale,
        int_weights=int_weights,
        weights_scale=weights_scale,
    )


PRESET_NAMES = (
    "kendall",
    "ok-nishimura",
    "gilbert",
    "unavailable-candidate",
    "linear",
    "binomial",
)


def preset(
    name: str, n: int, param: Rational | None = None
) -> tuple[MenuWeights, Measure]:
    """Named weight families from the literature, with the counting measure.

    kendall                w = (1, 0, ..., 0): pairwise comparisons only
    ok-nishimura           w = (1, 1, ..., 1): every menu counts equally
    gilbert                ones up to the cutoff size ``param``, zero above
    unavailable-candidate  w_k = (alpha - 1)^(k-2) for ``param`` = alpha > 1
    linear                 w_k = k
    binomial               w_k = p^(n-k) (1-p)^k for ``param`` = p in (0, 1)
    """
    if n < 2:
        raise ValueError("presets need n >= 2")
    sizes = range(2, n + 1)
    if name == "kendall":
        values: list[Fraction] = [Fraction(int(k == 2)) for k in sizes]
    elif name == "ok-nishimura":
        values = [Fraction(1) for _ in sizes]
    elif name == "gilbert":
        if param is None:
            raise ValueError("gilbert needs a cutoff menu size")
        cutoff = int(as_fraction(param))
        if not 2 <= cutoff <= n:
            raise ValueError(f"gilbert cutoff {cutoff} outside 2..{n}")
        values = [Fraction(int(k <= cutoff)) for k in sizes]
    elif name == "unavailable-candidate":
        if param is None:
            raise ValueError("unavailable-candidate needs alpha > 1")
        alpha = as_fraction(param)
        if alpha <= 1:
            raise ValueError(f"unavailable-candidate needs alpha > 1, got {alpha}")
        values = [(alpha - 1) ** (k - 2) for k in sizes]
    elif name == "linear":
        values = [Fraction(k) for k in sizes]
    elif name == "binomial":
        if param is None:
            raise ValueError("binomial needs p in (0, 1)")
        p = as_fraction(param)
        if not 0 < p < 1:
            raise ValueError(f"binomial needs p strictly between 0 and 1, got {p}")
        values = [p ** (n - k) * (1 - p) ** k for k in sizes]
    else:
        raise ValueError(f"unknown preset {name!r}; choose from {PRESET_NAMES}")
    return MenuWeights(values), counting_measure(n)


class ParamsFormatError(ValueError):
    """Raised when a parameter file does not follow the documented format."""


def parse_params_text(text: str, n: int | None = None) -> tuple[MenuWeights, Measure]:
    """Parse a parameter file.

    Recognised lines (``#`` starts a comment)::

        beta: b2 b3 ... bn
        mu: m1 m2 ... mn
        preset: <name> [param]

    Tokens are integers or ``p/q`` rationals.  A ``preset`` line needs the
    dimension ``n`` from context; explicit ``beta`` fixes it by length, and
    ``mu`` defaults to the counting measure.
    """
    weights: MenuWeights | None = None
    mu: Measure | None = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParamsFormatError(f"malformed line {line!r}: expected 'key: values'")
        key, _, rest = line.partition(":")
        key = key.strip().lower()
        tokens = rest.split()
        try:
            if key == "beta":
                weights = MenuWeights([as_fraction(t) for t in tokens])
            elif key == "mu":
                mu = Measure([as_fraction(t) for t in tokens])
            elif key == "preset":
                if not tokens:
                    raise ParamsFormatError("preset line names no preset")
                if n is None:
                    raise ParamsFormatError(
                        "a preset line needs the candidate count from context"
                    )
                param = as_fraction(tokens[1]) if len(tokens) > 1 else None
                weights, preset_mu = preset(tokens[0], n, param)
                if mu is None:
                    mu = preset_mu
            else:
                raise ParamsFormatError(f"unknown key {key!r} in parameter file")
        except (ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, ParamsFormatError):
                raise
            raise ParamsFormatError(f"bad value on line {line!r}: {exc}") from None
    if weights is None:
        raise ParamsFormatError("parameter file defines no menu weights")
    if mu is None:
        mu = counting_measure(weights.n)
    if mu.n != weights.n:
        raise ParamsFormatError(
            f"beta is for {weights.n} candidates but mu lists {mu.n}"
        )
    return weights, mu


def approximation_factor(weights: MenuWeights) -> Fraction:
    """The multiplicative gap between the distance and its footrule relaxation.

    ``max (1 + f(n-h) / f(n-h+1))`` with f = ``downset_mass`` and h ranging
    over the swap positions 2..n (one term per position at which an
    up-ranking can happen; the h = n term is 1 because f(0) = 0).  Requires
    nonnegative weights with a positive size-2 entry, so every denominator
    is positive; the value is always below 2 because f is increasing, and
    the classic per-family constants (2 for pairwise weights, 3/2 for flat
    or linearly growing ones, 1 + p for binomial decay) are its envelopes
    as n grows.
    """
    if not weights.is_nonnegative() or weights.values[0] <= 0:
        raise ValueError(
            "the footrule sandwich needs nonnegative weights with w_2 > 0"
        )
    n = weights.n
    masses = downset_mass_table(weights)
    return max(1 + masses[n - h] / masses[n - h + 1] for h in range(2, n + 1))
