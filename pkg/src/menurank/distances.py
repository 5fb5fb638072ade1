"""Distance evaluations between rankings.

``distance`` is the closed form: a sum over candidates of tabulated down-set
masses, O(n^2) per pair.  ``distance_naive`` literally enumerates every menu
of two or more candidates and charges the measure of the symmetric
difference of the two menu maxima; it exists as the independent oracle the
closed form is tested against, and is guarded to small n.

Negative weights and measures are accepted by every evaluator here: the
formulas stay well-defined and the parameter classification, not the
arithmetic, decides what the numbers mean.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .permutations import Permutation
from .profiles import Profile
from .weights import DistanceParams, Measure, MenuWeights, downset_mass_table

NAIVE_CANDIDATE_LIMIT = 20


def _check_dims(params: DistanceParams, *rankings: Permutation) -> int:
    n = params.n
    for r in rankings:
        if r.n != n:
            raise ValueError(f"dimension mismatch: params over {n}, ranking over {r.n}")
    return n


@lru_cache(maxsize=None)
def _menus(n: int) -> tuple[tuple[int, int], ...]:
    """(bitmask, size) for all candidate subsets with at least two members."""
    return tuple(
        (mask, mask.bit_count())
        for mask in range(1 << n)
        if mask.bit_count() >= 2
    )


def distance_naive(params: DistanceParams, a: Permutation, b: Permutation) -> Fraction:
    """Menu-by-menu evaluation of the distance; exponential, oracle use only.

    Every menu of two or more candidates contributes its weight times the
    measure of the symmetric difference of the two menu maxima.
    """
    n = _check_dims(params, a, b)
    if n > NAIVE_CANDIDATE_LIMIT:
        raise ValueError(
            f"naive enumeration visits 2^{n} menus; n is capped at "
            f"{NAIVE_CANDIDATE_LIMIT}"
        )
    if n <= 12:
        tops_a = a.menu_tops()
        tops_b = b.menu_tops()
    else:  # beyond the table cap: scan each menu in preference order
        order_a, order_b = a.order, b.order
        tops_a = tops_b = None
    # hits[k][c]: menus of size k whose two maxima differ, counted once per
    # candidate c in the symmetric difference
    hits = [[0] * (n + 1) for _ in range(n + 1)]
    for mask, size in _menus(n):
        if tops_a is not None:
            top_a = tops_a[mask]
            top_b = tops_b[mask]
        else:
            top_a = next(c for c in order_a if mask >> (c - 1) & 1)
            top_b = next(c for c in order_b if mask >> (c - 1) & 1)
        if top_a != top_b:
            row = hits[size]
            row[top_a] += 1
            row[top_b] += 1
    mu = params.int_mu
    total = 0
    for size, weight in enumerate(params.int_weights, start=2):
        if weight == 0:
            continue
        row = hits[size]
        total += weight * sum(mu[c - 1] * row[c] for c in range(1, n + 1) if row[c])
    return Fraction(total, params.weights_scale * params.mu_scale)


def distance(params: DistanceParams, a: Permutation, b: Permutation) -> Fraction:
    """Closed-form distance: down-set masses of both rankings minus twice the
    mass of their common down-sets, weighted by the measure."""
    n = _check_dims(params, a, b)
    f = params.int_table
    mu = params.int_mu
    pos_a = a._pos
    below_a = a._below
    below_b = b._below
    total = 0
    for c in range(n):
        m = mu[c]
        if m == 0:
            continue
        bb = below_b[c]
        total += (
            f[n - pos_a[c]] + f[bb.bit_count()] - 2 * f[(below_a[c] & bb).bit_count()]
        ) * m
    return Fraction(total, params.table_scale * params.mu_scale)


@lru_cache(maxsize=512)
def _scaled_table(weights: MenuWeights) -> tuple[tuple[int, ...], int]:
    from .weights import _scaled_ints

    return _scaled_ints(downset_mass_table(weights))


def footrule_weighted(
    weights: MenuWeights, mu: Measure, a: Permutation, b: Permutation
) -> Fraction:
    """Measure-weighted footrule: per-candidate gaps between down-set masses."""
    if not weights.is_nonnegative():
        raise ValueError("the footrule relaxation needs nonnegative menu weights")
    n = weights.n
    if n != mu.n or a.n != n or b.n != n:
        raise ValueError("dimension mismatch between weights, measure and rankings")
    f, f_scale = _scaled_table(weights)
    pos_a = a._pos
    pos_b = b._pos
    total = Fraction(0)
    for c in range(n):
        total += abs(f[n - pos_a[c]] - f[n - pos_b[c]]) * mu.values[c]
    return total / f_scale


def footrule(weights: MenuWeights, a: Permutation, b: Permutation) -> Fraction:
    """Neutral footrule: the weighted version under the counting measure."""
    from .weights import counting_measure

    return footrule_weighted(weights, counting_measure(weights.n), a, b)


def truncated_distance(
    params: DistanceParams, a: Permutation, b: Permutation, first: int, last: int
) -> Fraction:
    """Contribution of positions ``first..last`` of ``a`` to the distance.

    The window [1, n] recovers ``distance`` exactly; a window only depends on
    the two rankings through their prefixes down to position ``last``.
    """
    n = _check_dims(params, a, b)
    if not 1 <= first <= last <= n:
        raise ValueError(f"invalid window [{first}, {last}] for n = {n}")
    f = params.int_table
    mu = params.int_mu
    total = 0
    for i in range(first, last + 1):
        c = a.order[i - 1]
        common = (a._below[c - 1] & b._below[c - 1]).bit_count()
        total += (
            f[n - i] * (mu[c - 1] + mu[b.order[i - 1] - 1])
            - 2 * f[common] * mu[c - 1]
        )
    return Fraction(total, params.table_scale * params.mu_scale)


def profile_cost(params: DistanceParams, a: Permutation, profile: Profile) -> Fraction:
    """Multiplicity-weighted sum of distances from ``a`` to every ballot."""
    if profile.n != params.n:
        raise ValueError(f"dimension mismatch: params over {params.n}, profile over {profile.n}")
    return sum(
        (mult * distance(params, a, ballot) for mult, ballot in profile.entries),
        Fraction(0),
    )
