"""Creation sequences: validation, family recognition and enumeration.

A creation sequence ``(a_1, ..., a_k)`` of positive integers encodes the cograph
obtained by starting from the edgeless graph on ``a_1`` vertices and, for each
further part, taking the complement of the disjoint union with ``K_{a_i}``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from cgraphs.errors import EmptySequence, NonPositivePart, OrderTooSmall, SequenceParseError


@dataclass(frozen=True)
class CreationSequence:
    parts: tuple[int, ...]
    k: int = field(init=False)
    n: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(a) for a in self.parts))
        object.__setattr__(self, "k", len(self.parts))
        object.__setattr__(self, "n", sum(self.parts))

    @property
    def eligible(self) -> bool:
        """True when the closed-form spectral path applies (even number of parts)."""
        return self.k % 2 == 0

    def __getitem__(self, i: int) -> int:
        """1-based access, matching the usual a_1..a_k indexing."""
        if not 1 <= i <= self.k:
            raise IndexError(i)
        return self.parts[i - 1]

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return self.k

    def __str__(self):
        return ",".join(map(str, self.parts))

    def label(self) -> str:
        return f"C({str(self)})"


def validate(parts: Iterable[int] | CreationSequence) -> CreationSequence:
    if isinstance(parts, CreationSequence):
        return parts
    parts = tuple(parts)
    if not parts:
        raise EmptySequence()
    for i, a in enumerate(parts, start=1):
        if isinstance(a, bool) or int(a) != a:
            raise SequenceParseError(f"part {i} is not an integer: {a!r}")
        if a < 1:
            raise NonPositivePart(i, int(a))
    return CreationSequence(parts)


def parse_sequence(text: str) -> CreationSequence:
    """Parse ``"8,3,4,2"`` (whitespace tolerated) into a validated sequence."""
    tokens = [t.strip() for t in text.strip().strip("()").split(",")]
    if tokens == [""]:
        raise EmptySequence()
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise SequenceParseError(f"cannot parse creation sequence {text!r}") from None
    return validate(values)


class Family(enum.Enum):
    COMPLETE_SPLIT = "CompleteSplit"
    ANTIREGULAR = "Antiregular"
    QUASI_THRESHOLD = "QuasiThreshold"
    COMPLETE = "Complete"
    COMPLETE_BIPARTITE = "CompleteBipartite"
    CONSTANT = "ConstantSequence"
    GENERAL = "General"


@dataclass(frozen=True)
class FamilyTag:
    family: Family
    param: int | None = None

    def __str__(self):
        if self.param is None:
            return self.family.value
        return f"{self.family.value}({self.param})"

    def __lt__(self, other):
        return (self.family.value, self.param or 0) < (other.family.value, other.param or 0)


def recognize_families(s: CreationSequence) -> frozenset[FamilyTag]:
    """Return every named family the sequence belongs to (tags overlap)."""
    s = validate(s)
    p = s.parts
    tags = set()
    if s.k == 2:
        tags.add(FamilyTag(Family.COMPLETE_SPLIT))
        if p[1] == 1:
            tags.add(FamilyTag(Family.COMPLETE))
    if all(a == 1 for a in p) or (s.k >= 2 and p[:2] == (1, 2) and all(a == 1 for a in p[2:])):
        tags.add(FamilyTag(Family.ANTIREGULAR))
    # the even-index rule only describes the even-length class
    if s.eligible and sum(1 for a in p[1::2] if a > 1) <= 1:
        tags.add(FamilyTag(Family.QUASI_THRESHOLD))
    if s.k == 3 and p[1] == 1:
        tags.add(FamilyTag(Family.COMPLETE_BIPARTITE))
    if len(set(p)) == 1:
        tags.add(FamilyTag(Family.CONSTANT, p[0]))
    if not tags:
        tags.add(FamilyTag(Family.GENERAL))
    return frozenset(tags)


def _compositions(n: int, parity: int | None) -> Iterator[tuple[int, ...]]:
    # parity: required (number of remaining parts) % 2, or None for any
    def feasible(r, par):
        if par is None:
            return r >= 1
        if r == 0:
            return par == 0
        return r >= 1 if par == 1 else r >= 2

    def rec(prefix, r, par):
        if r == 0:
            yield tuple(prefix)
            return
        nxt = None if par is None else 1 - par
        for a in range(1, r + 1):
            rest = r - a
            if rest == 0:
                if nxt is None or nxt == 0:
                    prefix.append(a)
                    yield tuple(prefix)
                    prefix.pop()
            elif feasible(rest, nxt):
                prefix.append(a)
                yield from rec(prefix, rest, nxt)
                prefix.pop()

    if feasible(n, parity):
        yield from rec([], n, parity)


def enumerate_sequences(n: int, even_only: bool = True) -> Iterator[CreationSequence]:
    """Yield every composition of ``n`` in lexicographic order.

    With ``even_only`` only compositions with an even number of parts are
    produced; these are exactly the even-length C-graphs of order ``n``.
    """
    if even_only and n < 2:
        raise OrderTooSmall(n, 2)
    if n < 1:
        raise OrderTooSmall(n, 1)
    for parts in _compositions(n, 0 if even_only else None):
        yield CreationSequence(parts)


def count_sequences(n: int, even_only: bool = True) -> int:
    """Count compositions of ``n`` by a parity recurrence, without materializing them."""
    if even_only and n < 2:
        raise OrderTooSmall(n, 2)
    if n < 1:
        raise OrderTooSmall(n, 1)
    even = [1] + [0] * n
    odd = [0] * (n + 1)
    for r in range(1, n + 1):
        even[r] = sum(odd[r - a] for a in range(1, r + 1))
        odd[r] = sum(even[r - a] for a in range(1, r + 1))
    return even[n] if even_only else even[n] + odd[n]
