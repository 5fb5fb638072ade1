"""Shared helpers: deterministic random parameter and profile generators."""

from __future__ import annotations

import random
from fractions import Fraction

from menurank import Measure, MenuWeights, Permutation, Profile


def rand_fraction(
    rng: random.Random, hi: int = 6, den: int = 4, nonneg: bool = True
) -> Fraction:
    num = rng.randint(0 if nonneg else -hi, hi)
    return Fraction(num, rng.randint(1, den))


def rand_weights(rng: random.Random, n: int, nonneg: bool = True) -> MenuWeights:
    return MenuWeights([rand_fraction(rng, nonneg=nonneg) for _ in range(n - 1)])


def rand_measure(rng: random.Random, n: int, nonneg: bool = True) -> Measure:
    return Measure([rand_fraction(rng, nonneg=nonneg) for _ in range(n)])


def rand_ranking(rng: random.Random, n: int) -> Permutation:
    return Permutation(rng.sample(range(1, n + 1), n))


def rand_profile(
    rng: random.Random, n: int, max_ballots: int = 4, max_mult: int = 3
) -> Profile:
    entries = tuple(
        (rng.randint(1, max_mult), rand_ranking(rng, n))
        for _ in range(rng.randint(1, max_ballots))
    )
    return Profile(entries, n)


def prof(*rows: tuple[int, tuple[int, ...]]) -> Profile:
    entries = tuple((mult, Permutation(order)) for mult, order in rows)
    return Profile(entries, entries[0][1].n)
