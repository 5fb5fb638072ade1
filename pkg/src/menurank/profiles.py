"""Electorates: multisets of rankings with integer multiplicities.

The on-disk format is line oriented, one election per file::

    # optional comments
    n m
    k: c1 c2 ... cn     # k voters submitted this ballot

The header carries the number of candidates ``n`` and the total voter count
``m``; ballot multiplicities must add up to ``m`` exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .permutations import Permutation


class ProfileFormatError(ValueError):
    """Raised when a profile file does not follow the documented format."""


@dataclass(frozen=True)
class Profile:
    """A weighted list of ballots over a common candidate set."""

    entries: tuple[tuple[int, Permutation], ...]
    n: int

    def __post_init__(self):
        if not self.entries:
            raise ValueError("a profile needs at least one ballot")
        for mult, ranking in self.entries:
            if mult < 1:
                raise ValueError(f"multiplicity {mult} must be positive")
            if ranking.n != self.n:
                raise ValueError(
                    f"ballot over {ranking.n} candidates in a profile over {self.n}"
                )

    @property
    def voters(self) -> int:
        return sum(mult for mult, _ in self.entries)

    def ballots(self) -> Iterator[Permutation]:
        """The distinct ballots, multiplicities ignored."""
        for _, ranking in self.entries:
            yield ranking

    def concat(self, other: "Profile") -> "Profile":
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        return Profile(self.entries + other.entries, self.n)

    def relabel(self, tau: Permutation) -> "Profile":
        """Rename every candidate c to tau[c] in every ballot."""
        return Profile(
            tuple((mult, tau.compose(v)) for mult, v in self.entries), self.n
        )

    def replace_ballot(self, index: int, ranking: Permutation) -> "Profile":
        entries = list(self.entries)
        mult, _ = entries[index]
        entries[index] = (mult, ranking)
        return Profile(tuple(entries), self.n)


def profile_from_rankings(rankings: Iterable[Permutation]) -> Profile:
    rankings = list(rankings)
    return Profile(tuple((1, r) for r in rankings), rankings[0].n)


def parse_profile(text: str) -> Profile:
    lines = [
        stripped
        for raw in text.splitlines()
        if (stripped := raw.split("#", 1)[0].strip())
    ]
    if not lines:
        raise ProfileFormatError("empty profile: expected a 'n m' header line")
    header = lines[0].split()
    if len(header) != 2:
        raise ProfileFormatError(f"malformed header {lines[0]!r}: expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ProfileFormatError(f"non-integer header {lines[0]!r}") from None
    entries = []
    for line in lines[1:]:
        if ":" not in line:
            raise ProfileFormatError(f"malformed ballot line {line!r}: missing ':'")
        mult_part, ballot_part = line.split(":", 1)
        try:
            mult = int(mult_part)
        except ValueError:
            raise ProfileFormatError(
                f"non-integer multiplicity {mult_part!r}"
            ) from None
        if mult < 1:
            raise ProfileFormatError(f"multiplicity {mult} must be positive")
        try:
            candidates = [int(tok) for tok in ballot_part.split()]
        except ValueError:
            raise ProfileFormatError(f"non-integer candidate in {line!r}") from None
        if len(candidates) != n:
            raise ProfileFormatError(
                f"ballot {line!r} lists {len(candidates)} candidates, expected {n}"
            )
        try:
            ranking = Permutation(candidates)
        except ValueError as exc:
            raise ProfileFormatError(f"invalid ballot {line!r}: {exc}") from None
        entries.append((mult, ranking))
    if not entries:
        raise ProfileFormatError("profile has no ballots")
    total = sum(mult for mult, _ in entries)
    if total != m:
        raise ProfileFormatError(
            f"multiplicities sum to {total} but the header promises {m} voters"
        )
    return Profile(tuple(entries), n)


def load_profile(path: str) -> Profile:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_profile(handle.read())


def format_profile(profile: Profile) -> str:
    lines = [f"{profile.n} {profile.voters}"]
    for mult, ranking in profile.entries:
        lines.append(f"{mult}: {ranking}")
    return "\n".join(lines) + "\n"
