"""Rankings over candidates 1..n, stored as permutations in one-line form.

A ranking is a tuple ``order`` whose entry at (1-based) position ``i`` is the
candidate placed ``i``-th, most preferred first.  ``Permutation`` wraps that
tuple together with the structures every distance evaluation needs over and
over: the position of each candidate, and per-candidate bitmasks of the
strictly less-preferred candidates ("down-sets").

Candidate labels are the integers ``1..n``; callers with named candidates are
expected to map names through a symbol table before building rankings.
Instances are immutable and safe to share between threads.

The group product follows the convention ``(p * q)(i) = p[q[i]]``: composing
on the left relabels candidates, composing on the right reorders positions.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator


class Permutation:
    """An immutable ranking of candidates 1..n in one-line notation.

    >>> p = Permutation((2, 3, 1))
    >>> p.position(3)
    2
    >>> p.inverse().order
    (3, 1, 2)
    """

    __slots__ = ("order", "_pos", "_below", "_pair_mask", "_menu_tops")

    def __init__(self, order: Iterable[int]):
        order = tuple(order)
        n = len(order)
        if n == 0:
            raise ValueError("a ranking needs at least one candidate")
        seen = 0
        for c in order:
            if not isinstance(c, int) or not 1 <= c <= n:
                raise ValueError(f"candidate {c!r} outside 1..{n}")
            seen |= 1 << (c - 1)
        if seen != (1 << n) - 1:
            raise ValueError(f"not a bijection on 1..{n}: {order}")
        object.__setattr__(self, "order", order)
        pos = [0] * n
        for i, c in enumerate(order):
            pos[c - 1] = i + 1
        object.__setattr__(self, "_pos", tuple(pos))
        # below-mask of the candidate at position i = candidates at positions > i
        below = [0] * n
        mask = 0
        for c in reversed(order):
            below[c - 1] = mask
            mask |= 1 << (c - 1)
        object.__setattr__(self, "_below", tuple(below))
        object.__setattr__(self, "_pair_mask", None)
        object.__setattr__(self, "_menu_tops", None)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("Permutation is immutable")

    @property
    def n(self) -> int:
        return len(self.order)

    def position(self, candidate: int) -> int:
        """1-based position of ``candidate`` (1 = most preferred)."""
        self._check_candidate(candidate)
        return self._pos[candidate - 1]

    def below_mask(self, candidate: int) -> int:
        """Bitmask of candidates strictly less preferred than ``candidate``."""
        self._check_candidate(candidate)
        return self._below[candidate - 1]

    def below_set(self, candidate: int) -> frozenset[int]:
        mask = self.below_mask(candidate)
        return frozenset(c + 1 for c in range(self.n) if mask >> c & 1)

    def prefers(self, a: int, b: int) -> bool:
        """True when ``a`` is ranked above ``b``."""
        return self.position(a) < self.position(b)

    def inverse(self) -> "Permutation":
        return Permutation(self._pos)

    def compose(self, other: "Permutation") -> "Permutation":
        """Group product: ``self.compose(other)(i) = self[other[i]]``.

        Left-composing a relabelling ``tau`` onto a ranking ``p`` via
        ``tau.compose(p)`` renames candidate ``c`` of ``p`` to ``tau[c]``.
        """
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        return Permutation(tuple(self.order[q - 1] for q in other.order))

    def swap_adjacent(self, a: int) -> "Permutation":
        """Exchange the candidates at positions ``a`` and ``a + 1``."""
        if not 1 <= a <= self.n - 1:
            raise ValueError(f"swap position {a} outside 1..{self.n - 1}")
        order = list(self.order)
        order[a - 1], order[a] = order[a], order[a - 1]
        return Permutation(order)

    @property
    def pair_mask(self) -> int:
        """Bitmask over unordered pairs; bit set when i is ranked above j (i < j)."""
        cached = self._pair_mask
        if cached is None:
            n = self.n
            cached = 0
            for i in range(1, n):
                for j in range(i + 1, n + 1):
                    if self._pos[i - 1] < self._pos[j - 1]:
                        cached |= 1 << _pair_index(n, i, j)
            object.__setattr__(self, "_pair_mask", cached)
        return cached

    def menu_tops(self) -> tuple[int, ...]:
        """Per menu bitmask, the candidate this ranking prefers most.

        Filled by comparing positions along the lowest-bit recursion; cached
        for dimensions small enough to tabulate (n <= 12).
        """
        cached = self._menu_tops
        if cached is None:
            n = self.n
            if n > 12:
                raise ValueError("menu-top tables are limited to n <= 12")
            pos = self._pos
            tops = [0] * (1 << n)
            for mask in range(1, 1 << n):
                low = mask & -mask
                rest = mask ^ low
                c = low.bit_length()
                keep = tops[rest]
                tops[mask] = c if rest == 0 or pos[c - 1] < pos[keep - 1] else keep
            cached = tuple(tops)
            object.__setattr__(self, "_menu_tops", cached)
        return cached

    def _check_candidate(self, candidate: int) -> None:
        if not 1 <= candidate <= self.n:
            raise ValueError(f"candidate {candidate} outside 1..{self.n}")

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.order == other.order

    def __hash__(self) -> int:
        return hash(self.order)

    def __lt__(self, other: "Permutation") -> bool:
        return self.order < other.order

    def __repr__(self) -> str:
        return f"Permutation({self.order})"

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.order)


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def transposition(n: int, i: int, j: int) -> Permutation:
    """The permutation agreeing with the identity except that i and j trade places."""
    if i == j:
        raise ValueError("transposition needs two distinct candidates")
    order = list(range(1, n + 1))
    order[i - 1], order[j - 1] = j, i
    return Permutation(order)


@lru_cache(maxsize=None)
def all_rankings(n: int) -> tuple[Permutation, ...]:
    """Every ranking of 1..n in lexicographic order (cached; keep n small)."""
    if n > 10:
        raise ValueError(f"refusing to materialise {n}! rankings (n | 10 limit)")
    return tuple(Permutation(p) for p in _itertools_permutations(range(1, n + 1)))


def _check_same_n(p: Permutation, q: Permutation) -> int:
    if p.n != q.n:
        raise ValueError(f"dimension mismatch: {p.n} vs {q.n}")
    return p.n


def inversion_set(p: Permutation, q: Permutation) -> frozenset[tuple[int, int]]:
    """Ordered pairs (i, j) ranked i above j by ``p`` but j above i by ``q``."""
    n = _check_same_n(p, q)
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j and p.prefers(i, j) and q.prefers(j, i):
                out.append((i, j))
    return frozenset(out)


def kendall_count(p: Permutation, q: Permutation) -> int:
    """Number of candidate pairs the two rankings order oppositely."""
    _check_same_n(p, q)
    return (p.pair_mask ^ q.pair_mask).bit_count()


def down_set_size(p: Permutation, candidate: int) -> int:
    """How many candidates rank strictly below ``candidate``."""
    return p.n - p.position(candidate)


def common_down_count(p: Permutation, q: Permutation, candidate: int) -> int:
    """Size of the intersection of the two down-sets of ``candidate``."""
    _check_same_n(p, q)
    return (p.below_mask(candidate) & q.below_mask(candidate)).bit_count()


def menu_max(menu: Iterable[int], p: Permutation) -> int:
    """The element of ``menu`` that ``p`` ranks highest."""
    menu = frozenset(menu)
    if not menu:
        raise ValueError("empty menu has no maximum")
    for c in menu:
        p._check_candidate(c)
    return min(menu, key=p.position)


def adjacent_pairs(p: Permutation) -> frozenset[tuple[int, int]]:
    """Consecutive candidate pairs of the ranking, higher-ranked first."""
    return frozenset(zip(p.order, p.order[1:]))


def is_between(p: Permutation, w: Permutation, q: Permutation) -> bool:
    """True when ``w`` agrees with ``p`` and ``q`` on every pair they agree on."""
    _check_same_n(p, w)
    _check_same_n(p, q)
    return (p.pair_mask ^ w.pair_mask) & ~(p.pair_mask ^ q.pair_mask) == 0


def adjacent_promotions(p: Permutation, candidate: int) -> Iterator[Permutation]:
    """The single-step uprankings of ``candidate`` (at most one for a ranking)."""
    pos = p.position(candidate)
    if pos > 1:
        yield p.swap_adjacent(pos - 1)


@lru_cache(maxsize=None)
def _pair_index_table(n: int) -> dict[tuple[int, int], int]:
    table = {}
    k = 0
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            table[(i, j)] = k
            k += 1
    return table


def _pair_index(n: int, i: int, j: int) -> int:
    return _pair_index_table(n)[(i, j)]
