"""Materialize C-graphs from creation sequences.

Vertices are numbered in part order: all of part 1 first, then part 2, and so
on. Internally indices are 0-based; exports are 1-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from cgraphs.errors import OddLengthUnsupported
from cgraphs.seqcore import CreationSequence, validate


@dataclass(frozen=True, eq=False)
class CGraph:
    sequence: CreationSequence
    adjacency: np.ndarray  # n x n bool, symmetric, zero diagonal

    def __post_init__(self):
        self.adjacency.setflags(write=False)

    @property
    def n(self) -> int:
        return self.sequence.n

    @property
    def k(self) -> int:
        return self.sequence.k

    @cached_property
    def part_of(self) -> tuple[int, ...]:
        """1-based part index of each vertex."""
        return tuple(i for i, a in enumerate(self.sequence.parts, start=1) for _ in range(a))

    @cached_property
    def part_slices(self) -> tuple[slice, ...]:
        bounds = np.concatenate(([0], np.cumsum(self.sequence.parts)))
        return tuple(slice(int(lo), int(hi)) for lo, hi in zip(bounds[:-1], bounds[1:]))

    @cached_property
    def vertex_degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1).astype(np.int64)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Common degree of each part; raises if a part is not degree-homogeneous."""
        out = []
        for i, sl in enumerate(self.part_slices, start=1):
            d = self.vertex_degrees[sl]
            if d.min() != d.max():
                raise ValueError(f"part {i} is not degree-homogeneous: {sorted(set(d.tolist()))}")
            out.append(int(d[0]))
        return tuple(out)

    @property
    def edge_count(self) -> int:
        return int(self.vertex_degrees.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with 1-based endpoints, u < v."""
        us, vs = np.nonzero(np.triu(self.adjacency, 1))
        return [(int(u) + 1, int(v) + 1) for u, v in zip(us, vs)]

    def same_edges(self, other: "CGraph") -> bool:
        return self.adjacency.shape == other.adjacency.shape and bool(
            np.array_equal(self.adjacency, other.adjacency)
        )

    def is_connected(self) -> bool:
        n = self.n
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        frontier = seen.copy()
        while frontier.any():
            reach = self.adjacency[frontier].any(axis=0) & ~seen
            seen |= reach
            frontier = reach
        return bool(seen.all())

    def to_edgelist(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges())

    def to_json(self) -> str:
        try:
            degs = list(self.degrees)
        except ValueError:
            degs = None
        return json.dumps(
            {
                "n": self.n,
                "k": self.k,
                "parts": list(self.sequence.parts),
                "degrees": degs,
                "edges": [list(e) for e in self.edges()],
            }
        )


def build_recursive(s) -> CGraph:
    """Reference construction: iterate complement(previous + K_a)."""
    s = validate(s)
    a = np.zeros((s.parts[0], s.parts[0]), dtype=bool)
    for alpha in s.parts[1:]:
        m = a.shape[0]
        union = np.zeros((m + alpha, m + alpha), dtype=bool)
        union[:m, :m] = a
        union[m:, m:] = ~np.eye(alpha, dtype=bool)
        a = ~union
        np.fill_diagonal(a, False)
    return CGraph(s, a)


def build_direct(s) -> CGraph:
    """Closed adjacency rule for even k.

    Two vertices in parts i < j are adjacent iff j is even; two distinct
    vertices in the same part i are adjacent iff i is odd.
    """
    s = validate(s)
    if not s.eligible:
        raise OddLengthUnsupported(s.k)
    part = np.repeat(np.arange(1, s.k + 1), s.parts)
    pi, pj = part[:, None], part[None, :]
    later = np.maximum(pi, pj)
    a = np.where(pi == pj, pi % 2 == 1, later % 2 == 0)
    np.fill_diagonal(a, False)
    return CGraph(s, a)


def degrees(s) -> tuple[int, ...]:
    """Per-part degrees computed from the sequence alone."""
    s = validate(s)
    if not s.eligible:
        raise OddLengthUnsupported(s.k)
    p = s.parts
    k = s.k
    # even_tail[i] = sum of parts with even 1-based index j >= i+1 (0-based i)
    even_tail = [0] * (k + 1)
    for j in range(k - 1, -1, -1):
        even_tail[j] = even_tail[j + 1] + (p[j] if (j + 1) % 2 == 0 else 0)
    out = []
    prefix = 0
    for idx in range(k):
        i = idx + 1
        if i % 2 == 1:
            out.append(even_tail[idx + 1] + p[idx] - 1)
        elif i < k:
            out.append(prefix + even_tail[idx + 1])
        else:
            out.append(prefix)
        prefix += p[idx]
    return tuple(out)


def edge_count(s) -> int:
    s = validate(s)
    return sum(a * d for a, d in zip(s.parts, degrees(s))) // 2


def laplacian(g: CGraph) -> np.ndarray:
    """Integer Laplacian L = D - A in part-ordered vertex numbering."""
    a = g.adjacency.astype(np.int64)
    lap = -a
    lap[np.diag_indices_from(lap)] = a.sum(axis=1)
    lap.setflags(write=False)
    return lap


def characteristic_matrix(s) -> np.ndarray:
    """n x k 0/1 part-membership matrix."""
    s = validate(s)
    part = np.repeat(np.arange(s.k), s.parts)
    p = np.zeros((s.n, s.k), dtype=np.int64)
    p[np.arange(s.n), part] = 1
    return p
