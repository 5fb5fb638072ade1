"""Median rank aggregation: exact consensus sets and approximation schemes.

Everything here exploits one decomposition: the aggregate distance from a
ranking to a profile is a sum of per-position terms, where the term for
position i depends only on the candidate placed there and on the *set*
placed before it.  That turns the search over n! orders into dynamic
programming over 2^n subsets, which is how the exact solver enumerates the
full argmin set, and how the myopic scheme minimises its truncated window.

Approximation routes:

* ``aggregate_footrule`` minimises the footrule relaxation as a min-cost
  perfect matching between candidates and positions; its true cost is within
  the ``approximation_factor`` of the optimum.
* ``aggregate_myopic`` greedily pins strict-majority favourites, brute-forces
  the next ``depth`` window positions through the subset DP, and fills the
  tail in ascending label order (the window objective does not see the tail).
  ``ptas_depth`` picks the window size that makes this a (1 + eps)-scheme.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Literal

from .assignment import min_cost_assignment
from .distances import profile_cost
from .permutations import Permutation
from .profiles import Profile
from .weights import (
    DistanceParams,
    Measure,
    MenuWeights,
    Rational,
    as_fraction,
    binomial,
    counting_measure,
    downset_mass_table,
    make_params,
)

EXACT_CANDIDATE_LIMIT = 10


@dataclass(frozen=True)
class AggregationResult:
    """Outcome of one aggregation run.

    ``optimum`` is the minimised value of the method's own objective (the
    true aggregate distance for the exact method, the footrule objective for
    the matching method, the truncated window objective for the myopic one);
    ``certificate`` is always the true aggregate distance achieved by the
    returned ranking(s).
    """

    method: Literal["exact", "footrule", "myopic"]
    minimizers: tuple[Permutation, ...]
    optimum: Fraction
    winners: frozenset[int]
    certificate: Fraction


def _position_terms(
    params: DistanceParams, profile: Profile
) -> tuple[Callable[[int, int, int], int], int]:
    """Per-position cost: place candidate c at position i after ``placed``.

    Summing the returned term over a whole ranking gives its aggregate
    distance to the profile, times the returned integer scale.  Terms are
    plain integers so the subset DP never touches Fractions.
    """
    n = params.n
    f = params.int_table
    mu = params.int_mu
    total_voters = profile.voters
    universe = (1 << n) - 1
    ballots = [(mult, v._below) for mult, v in profile.entries]
    # measure mass seen at position i across ballots: independent of the choice
    position_const = [0] * (n + 1)
    for i in range(1, n + 1):
        position_const[i] = f[n - i] * sum(
            mult * mu[v.order[i - 1] - 1] for mult, v in profile.entries
        )

    def term(i: int, candidate: int, placed: int) -> int:
        free = universe & ~placed
        below = candidate - 1
        overlap = 0
        for mult, ballot_below in ballots:
            overlap += mult * f[(ballot_below[below] & free).bit_count()]
        return position_const[i] + mu[below] * (f[n - i] * total_voters - 2 * overlap)

    return term, params.table_scale * params.mu_scale


def _masks_by_size(pool: tuple[int, ...], depth: int) -> list[list[int]]:
    """Subset bitmasks of ``pool`` (candidate labels) grouped by popcount."""
    layers: list[list[int]] = []
    for size in range(depth + 1):
        layers.append(
            [
                sum(1 << (c - 1) for c in combo)
                for combo in combinations(pool, size)
            ]
        )
    return layers


def aggregate_exact(
    params: DistanceParams, profile: Profile, threads: int = 1
) -> AggregationResult:
    """The full set of rankings minimising the aggregate distance.

    Dynamic programming over candidate subsets; every tied minimiser is
    reconstructed, in lexicographic order.  Guarded to n <= 10.
    """
    n = params.n
    if profile.n != n:
        raise ValueError(f"dimension mismatch: params over {n}, profile over {profile.n}")
    if n > EXACT_CANDIDATE_LIMIT:
        raise ValueError(
            f"exact search over {n} candidates exceeds the n <= "
            f"{EXACT_CANDIDATE_LIMIT} guard"
        )
    term, scale = _position_terms(params, profile)
    layers = _masks_by_size(tuple(range(1, n + 1)), n)
    best: dict[int, int] = {0: 0}

    def relax(mask: int) -> tuple[int, Fraction]:
        i = mask.bit_count()
        value = None
        rest = mask
        while rest:
            bit = rest & -rest
            rest ^= bit
            candidate = bit.bit_length()
            cur = best[mask ^ bit] + term(i, candidate, mask ^ bit)
            if value is None or cur < value:
                value = cur
        return mask, value

    for layer in layers[1:]:
        if threads > 1 and len(layer) > 8:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                for mask, value in pool.map(relax, layer):
                    best[mask] = value
        else:
            for mask in layer:
                best[mask] = relax(mask)[1]

    full = (1 << n) - 1
    optimum = Fraction(best[full], scale)
    tails: dict[int, list[tuple[int, ...]]] = {0: [()]}

    def orderings(mask: int) -> list[tuple[int, ...]]:
        cached = tails.get(mask)
        if cached is not None:
            return cached
        i = mask.bit_count()
        out = []
        for candidate in range(1, n + 1):
            bit = 1 << (candidate - 1)
            if not mask & bit:
                continue
            prev = mask ^ bit
            if best[prev] + term(i, candidate, prev) == best[mask]:
                out.extend(prefix + (candidate,) for prefix in orderings(prev))
        tails[mask] = out
        return out

    minimizers = tuple(sorted(Permutation(seq) for seq in orderings(full)))
    winners = frozenset(p.order[0] for p in minimizers)
    return AggregationResult(
        method="exact",
        minimizers=minimizers,
        optimum=optimum,
        winners=winners,
        certificate=optimum,
    )


def footrule_position_costs(
    weights: MenuWeights, profile: Profile, mu: Measure | None = None
) -> list[list[Fraction]]:
    """Cost of pinning candidate c (row) at position p (column)."""
    n = weights.n
    f = downset_mass_table(weights)
    if mu is None:
        mu = counting_measure(n)
    costs = []
    for c in range(1, n + 1):
        scale = mu.of(c)
        row = []
        for p in range(1, n + 1):
            gap = sum(
                (
                    mult * abs(f[n - p] - f[v._below[c - 1].bit_count()])
                    for mult, v in profile.entries
                ),
                Fraction(0),
            )
            row.append(gap * scale)
        costs.append(row)
    return costs


def aggregate_footrule(
    weights: MenuWeights, profile: Profile, mu: Measure | None = None
) -> AggregationResult:
    """Minimise the aggregate footrule by a candidate-to-position matching.

    Nonnegative menu weights required; for a non-counting measure it must be
    strictly positive.  The certificate is the true aggregate distance of the
    matched ranking, which stays within ``approximation_factor(weights)``
    (times the measure's spread, when weighted) of the exact optimum.
    """
    if not weights.is_nonnegative():
        raise ValueError("footrule aggregation needs nonnegative menu weights")
    if mu is not None and not mu.is_positive():
        raise ValueError("weighted footrule aggregation needs a strictly positive measure")
    if profile.n != weights.n:
        raise ValueError(
            f"dimension mismatch: weights over {weights.n}, profile over {profile.n}"
        )
    costs = footrule_position_costs(weights, profile, mu)
    cols, total = min_cost_assignment(costs)
    order = [0] * weights.n
    for c, p in enumerate(cols, start=1):
        order[p] = c
    ranking = Permutation(order)
    params = make_params(weights, mu)
    return AggregationResult(
        method="footrule",
        minimizers=(ranking,),
        optimum=total,
        winners=frozenset({ranking.order[0]}),
        certificate=profile_cost(params, ranking, profile),
    )


def _majority_prefix(profile: Profile) -> tuple[list[int], set[int]]:
    """Greedily pull out candidates a strict voter majority ranks top."""
    n = profile.n
    total = profile.voters
    remaining = set(range(1, n + 1))
    prefix: list[int] = []
    while remaining:
        pool_mask = sum(1 << (c - 1) for c in remaining)
        placed = None
        for c in sorted(remaining):
            rivals = pool_mask & ~(1 << (c - 1))
            count = sum(
                mult
                for mult, v in profile.entries
                if rivals & ~v._below[c - 1] == 0
            )
            if 2 * count > total:
                placed = c
                break
        if placed is None:
            break
        prefix.append(placed)
        remaining.remove(placed)
    return prefix, remaining


def aggregate_myopic(
    params: DistanceParams, profile: Profile, depth: int
) -> AggregationResult:
    """Majority prefix, then exhaustive search of one truncated window.

    After the greedy prefix of strict-majority favourites, the next
    ``min(depth, remaining)`` positions are optimised against the truncated
    objective (a subset DP); candidates never reached by the window follow in
    ascending label order, which the window objective cannot distinguish.
    """
    if depth < 1:
        raise ValueError("window depth must be at least 1")
    if not params.weights.is_nonnegative():
        raise ValueError("the myopic scheme needs nonnegative menu weights")
    if profile.n != params.n:
        raise ValueError(f"dimension mismatch: params over {params.n}, profile over {profile.n}")
    n = params.n
    prefix, remaining = _majority_prefix(profile)
    span = min(depth, len(remaining))
    start = len(prefix) + 1
    prefix_mask = sum(1 << (c - 1) for c in prefix)

    window: list[int] = []
    window_value = Fraction(0)
    if span > 0:
        term, scale = _position_terms(params, profile)
        pool = tuple(sorted(remaining))
        layers = _masks_by_size(pool, span)
        # completion[mask]: cheapest way to extend the placed window ``mask``
        # to a full span; build bottom-up from the deepest layer
        completion: dict[int, int] = {mask: 0 for mask in layers[span]}
        for size in range(span - 1, -1, -1):
            for mask in layers[size]:
                value = None
                for c in pool:
                    bit = 1 << (c - 1)
                    if mask & bit:
                        continue
                    cur = (
                        term(start + size, c, prefix_mask | mask)
                        + completion[mask | bit]
                    )
                    if value is None or cur < value:
                        value = cur
                completion[mask] = value
        window_value = Fraction(completion[0], scale)
        mask = 0
        while len(window) < span:
            size = len(window)
            for c in pool:
                bit = 1 << (c - 1)
                if mask & bit:
                    continue
                step = term(start + size, c, prefix_mask | mask)
                if step + completion[mask | bit] == completion[mask]:
                    window.append(c)
                    mask |= bit
                    break

    tail = sorted(remaining - set(window))
    ranking = Permutation(prefix + window + tail)
    return AggregationResult(
        method="myopic",
        minimizers=(ranking,),
        optimum=window_value,
        winners=frozenset({ranking.order[0]}),
        certificate=profile_cost(params, ranking, profile),
    )


PTAS_RULES = ("affine", "exponential", "alternating", "custom")


def truncation_ratio(weights: MenuWeights, t: int, depth: int) -> Fraction:
    """Mass the window of size ``depth`` ignores, relative to the top swap price,
    for a pool of ``t`` candidates."""
    numerator = sum(
        (
            weights.values[j - 2] * binomial(t - depth, j)
            for j in range(2, min(t - depth, weights.n) + 1)
        ),
        Fraction(0),
    )
    denominator = sum(
        (
            weights.values[j] * binomial(t - 2, j)
            for j in range(0, min(t - 2, weights.n - 2) + 1)
        ),
        Fraction(0),
    )
    if denominator <= 0:
        raise ValueError("truncation ratio needs a positive size-2 weight")
    return numerator / denominator


def _ceil_log(base: Fraction, x: Fraction) -> int:
    """Smallest integer k >= 0 with base^k >= x (base > 1)."""
    k = 0
    power = Fraction(1)
    while power < x:
        power *= base
        k += 1
    return k


def ptas_depth(
    rule: str,
    inv_epsilon: Rational,
    n: int | None = None,
    alpha: Rational | None = None,
    weights: MenuWeights | None = None,
) -> int:
    """Window depth guaranteeing the myopic scheme a (1 + eps) factor.

    Closed forms exist for three weight growth rules (as functions of the
    menu-size index j >= 2):

    affine        w_j = j + 1          -> ceil(log2(4 / eps))
    exponential   w_j = (alpha - 1)^j  -> ceil(log_alpha(alpha^2 / ((alpha-1)^2 eps)))
    alternating   w_j = 1 + (-1)^j     -> ceil(log2(4 / eps))

    ``custom`` takes an explicit weight vector plus its horizon ``n`` and
    returns the smallest depth whose truncation ratio stays below eps for
    every pool size up to ``n``.
    """
    eps = 1 / as_fraction(inv_epsilon)
    if eps <= 0:
        raise ValueError("1/epsilon must be positive")
    if rule == "affine" or rule == "alternating":
        return max(1, _ceil_log(Fraction(2), 4 / eps))
    if rule == "exponential":
        if alpha is None:
            raise ValueError("the exponential rule needs alpha > 1")
        alpha = as_fraction(alpha)
        if alpha <= 1:
            raise ValueError(f"the exponential rule needs alpha > 1, got {alpha}")
        return max(1, _ceil_log(alpha, alpha**2 / ((alpha - 1) ** 2 * eps)))
    if rule == "custom":
        if weights is None or n is None:
            raise ValueError("the custom rule needs explicit weights and a horizon n")
        if not weights.is_nonnegative() or weights.values[0] <= 0:
            raise ValueError("custom depths need nonnegative weights with w_2 > 0")
        for depth in range(1, n + 1):
            worst = max(
                (
                    truncation_ratio(weights, t, depth)
                    for t in range(max(depth, 2), n + 1)
                ),
                default=Fraction(0),
            )
            if worst <= eps:
                return depth
        return n
    raise ValueError(f"unknown depth rule {rule!r}; choose from {PTAS_RULES}")


def ptas_weights(rule: str, n: int, alpha: Rational | None = None) -> MenuWeights:
    """The weight vector of a named growth rule, truncated to dimension n."""
    sizes = range(2, n + 1)
    if rule == "affine":
        return MenuWeights([Fraction(j + 1) for j in sizes])
    if rule == "alternating":
        return MenuWeights([Fraction(1 + (-1) ** j) for j in sizes])
    if rule == "exponential":
        if alpha is None:
            raise ValueError("the exponential rule needs alpha > 1")
        alpha = as_fraction(alpha)
        if alpha <= 1:
            raise ValueError(f"the exponential rule needs alpha > 1, got {alpha}")
        return MenuWeights([(alpha - 1) ** j for j in sizes])
    raise ValueError(f"no weight vector for rule {rule!r}")
