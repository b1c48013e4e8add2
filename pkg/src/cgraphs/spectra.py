"""Closed-form Laplacian spectrum of even-length C-graphs.

Everything here is exact: Python integers for eigenvalues and matrices,
``Fraction`` for the quotient eigenvectors. Floating point only appears in
:mod:`cgraphs.oracle`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterator, NamedTuple

import numpy as np

from cgraphs.errors import ConsistencyFailure, OddLengthUnsupported
from cgraphs.graphbuild import CGraph, degrees, laplacian
from cgraphs.seqcore import CreationSequence, validate


def _even(s) -> CreationSequence:
    s = validate(s)
    if not s.eligible:
        raise OddLengthUnsupported(s.k)
    return s


def _adjacent_parts(i: int, j: int) -> bool:
    # 1-based part indices, i != j
    return max(i, j) % 2 == 0


def quotient_matrix(s) -> tuple[tuple[int, ...], ...]:
    """k x k quotient of the Laplacian over the part partition."""
    s = _even(s)
    d = degrees(s)
    rows = []
    for i in range(1, s.k + 1):
        row = []
        for j in range(1, s.k + 1):
            if i == j:
                row.append(d[i - 1] - (s[i] - 1) if i % 2 == 1 else d[i - 1])
            elif _adjacent_parts(i, j):
                row.append(-s[j])
            else:
                row.append(0)
        rows.append(tuple(row))
    return tuple(rows)


def quotient_eigs(s) -> tuple[int, ...]:
    """Eigenvalues of the quotient matrix, ascending, via the two-sided recurrence.

    The lower half climbs from 0 adding a_k, a_{k-2}, ..., a_4; the upper half
    descends from n subtracting a_{k-1}, a_{k-3}, ..., a_3.
    """
    s = _even(s)
    k, half = s.k, s.k // 2
    lam = [0] * (k + 1)  # 1-based
    lam[1] = 0
    for i in range(2, half + 1):
        lam[i] = lam[i - 1] + s[k - 2 * (i - 2)]
    lam[k] = s.n
    for i in range(k - 1, half, -1):
        lam[i] = lam[i + 1] - s[2 * i - (k - 1)]
    out = tuple(lam[1:])
    if any(b <= a for a, b in zip(out, out[1:])):
        raise ConsistencyFailure(f"quotient eigenvalues not strictly increasing for {s}: {out}")
    return out


def quotient_eigvecs(s) -> list[tuple[Fraction, ...]]:
    """Eigenvectors of the quotient matrix, aligned with :func:`quotient_eigs`.

    Each nontrivial vector is a run of ones followed by one balancing entry
    ``-(a_1 + ... + a_r) / a_{r+1}`` and zeros after it.
    """
    s = _even(s)
    k, half = s.k, s.k // 2
    prefix = [0]
    for a in s.parts:
        prefix.append(prefix[-1] + a)

    def vec(r: int) -> tuple[Fraction, ...]:
        # r ones, then the balancing entry at coordinate r+1
        v = [Fraction(1)] * r + [Fraction(-prefix[r], s[r + 1])] + [Fraction(0)] * (k - r - 1)
        return tuple(v)

    out = [tuple(Fraction(1) for _ in range(k))]
    for i in range(2, half + 1):
        out.append(vec(k - 2 * (i - 1)))
    for i in range(1, half + 1):
        out.append(vec(2 * i - 1))
    return out


def bulk_eigs(s) -> list[tuple[int, int]]:
    """Raw (value, multiplicity) pairs carried by vectors supported inside one part.

    Listed in part order; parts of size one contribute nothing.
    """
    s = _even(s)
    d = degrees(s)
    out = []
    for i in range(1, s.k + 1):
        mult = s[i] - 1
        if mult == 0:
            continue
        value = d[i - 1] + 1 if i % 2 == 1 else d[i - 1]
        out.append((value, mult))
    return out


def merged_bulk_eigs(s) -> list[tuple[int, int]]:
    c = Counter()
    for value, mult in bulk_eigs(s):
        c[value] += mult
    return sorted(c.items())


def helmert_vector(length: int, j: int) -> tuple[int, ...]:
    """``e_1 + ... + e_j - j e_{j+1}`` in R^length, for 1 <= j <= length-1."""
    if not 1 <= j <= length - 1:
        raise ValueError(f"j must lie in 1..{length - 1}, got {j}")
    return tuple([1] * j + [-j] + [0] * (length - j - 1))


class BulkVector(NamedTuple):
    part: int  # 1-based
    j: int
    eigenvalue: int
    vector: tuple[int, ...]  # length n


def bulk_eigvecs(s) -> Iterator[BulkVector]:
    """Eigenvectors for the bulk eigenvalues: Helmert vectors embedded in one part."""
    s = _even(s)
    d = degrees(s)
    offset = 0
    for i in range(1, s.k + 1):
        a = s[i]
        value = d[i - 1] + 1 if i % 2 == 1 else d[i - 1]
        for j in range(1, a):
            v = [0] * s.n
            v[offset : offset + a] = helmert_vector(a, j)
            yield BulkVector(i, j, value, tuple(v))
        offset += a


@dataclass(frozen=True, eq=False)
class LaplacianSpectrum:
    sequence: CreationSequence
    quotient_eigs: tuple[int, ...]
    bulk_eigs: tuple[tuple[int, int], ...]

    @cached_property
    def eigenvalues(self) -> tuple[int, ...]:
        """Full multiset, ascending, of length n."""
        vals = list(self.quotient_eigs)
        for value, mult in self.bulk_eigs:
            vals.extend([value] * mult)
        return tuple(sorted(vals))

    @cached_property
    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(self.eigenvalues).items()))

    @property
    def distinct(self) -> tuple[int, ...]:
        return tuple(self.multiplicities)

    @property
    def m(self) -> int:
        return len(self.multiplicities)

    @property
    def algebraic_connectivity(self) -> int:
        return self.eigenvalues[1] if len(self.eigenvalues) > 1 else 0

    @property
    def spectral_radius(self) -> int:
        return self.eigenvalues[-1]

    def quotient_vectors(self) -> list[tuple[Fraction, ...]]:
        return quotient_eigvecs(self.sequence)

    def bulk_vectors(self) -> Iterator[BulkVector]:
        return bulk_eigvecs(self.sequence)

    def to_dict(self) -> dict:
        s = self.sequence
        return {
            "sequence": list(s.parts),
            "n": s.n,
            "k": s.k,
            "path": "closed-form",
            "quotient_eigs": list(self.quotient_eigs),
            "bulk_eigs": [list(p) for p in self.bulk_eigs],
            "distinct": list(self.distinct),
            "multiplicities": [[v, c] for v, c in self.multiplicities.items()],
            "m": self.m,
            "algebraic_connectivity": self.algebraic_connectivity,
            "spectral_radius": self.spectral_radius,
        }


def full_spectrum(s) -> LaplacianSpectrum:
    s = _even(s)
    spec = LaplacianSpectrum(s, quotient_eigs(s), tuple(bulk_eigs(s)))
    if len(spec.eigenvalues) != s.n:
        raise ConsistencyFailure(f"spectrum of {s} has {len(spec.eigenvalues)} values, expected {s.n}")
    return spec


def distinct_count(s) -> int:
    return full_spectrum(s).m


def main_eigenvalue_check(s) -> bool:
    """True iff every constructed eigenvector of a nonzero eigenvalue sums to zero.

    Quotient vectors are lifted through the part partition, so the lifted sum
    is ``sum_j a_j X_j``.
    """
    s = _even(s)
    for lam, x in zip(quotient_eigs(s), quotient_eigvecs(s)):
        if lam != 0 and sum(a * xj for a, xj in zip(s.parts, x)) != 0:
            return False
    for bv in bulk_eigvecs(s):
        if bv.eigenvalue != 0 and sum(bv.vector) != 0:
            return False
    return True


_FOUR_FORMS = (
    lambda a: (a, 1, 1, 1),
    lambda a: (a, 1, 1 + a, 1),
    lambda a: (a, 1, 1, 2 + a),
    lambda a: (a, 1, 1 + a, 1 + a),
    lambda a: (a, 1, 1 + a, 2 + 2 * a),
)


def four_eig_characterization(s) -> bool:
    """True iff ``s`` has one of the five k=4 shapes with exactly four distinct eigenvalues."""
    s = validate(s)
    if s.k != 4:
        return False
    return any(form(s.parts[0]) == s.parts for form in _FOUR_FORMS)


def _integer_scaled(x: tuple[Fraction, ...]) -> np.ndarray:
    den = lcm(*(f.denominator for f in x))
    return np.array([int(f * den) for f in x], dtype=np.int64)


def eigenvector_identity_failures(s, graph: CGraph | None = None) -> list[str]:
    """Check every constructed eigenpair in exact arithmetic.

    Verifies ``Q X = lam X`` over the rationals, ``L (P X) = lam (P X)`` and
    ``L E = mu E`` on the integer Laplacian of ``graph`` (built directly if
    omitted). Returns a description of each failure; empty means all hold.
    """
    from cgraphs.graphbuild import build_direct

    s = _even(s)
    g = graph if graph is not None else build_direct(s)
    lap = laplacian(g)
    q = quotient_matrix(s)
    failures = []
    part = np.repeat(np.arange(s.k), s.parts)
    for lam, x in zip(quotient_eigs(s), quotient_eigvecs(s)):
        qx = tuple(sum(qij * xj for qij, xj in zip(row, x)) for row in q)
        if qx != tuple(lam * xj for xj in x):
            failures.append(f"Q X != {lam} X")
        px = _integer_scaled(x)[part]
        if not np.array_equal(lap @ px, lam * px):
            failures.append(f"L(PX) != {lam} PX")
    for bv in bulk_eigvecs(s):
        e = np.array(bv.vector, dtype=np.int64)
        if not np.array_equal(lap @ e, bv.eigenvalue * e):
            failures.append(f"L E != {bv.eigenvalue} E (part {bv.part}, j={bv.j})")
    return failures
