"""Brute-force ground truth, independent of every closed-form result.

Dense Jacobi eigensolver, branch-and-bound maximum clique, max-flow vertex and
edge connectivity, and an exhaustive induced-P4 scan. Graph routines accept a
:class:`~cgraphs.graphbuild.CGraph` or any square boolean adjacency matrix.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from cgraphs.errors import Disconnected, NoConvergence, TooLarge

SYMMETRY_TOL = 1e-12
INTEGER_TOL = 1e-6


def _adjacency(g) -> np.ndarray:
    a = getattr(g, "adjacency", g)
    a = np.asarray(a, dtype=bool)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("adjacency must be square")
    return a


@lru_cache(maxsize=None)
def _round_robin(m: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Pairings of 0..m-1 (m even) such that every pair meets exactly once."""
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for i in range(m // 2):
            a, b = players[i], players[m - 1 - i]
            ps.append(min(a, b))
            qs.append(max(a, b))
        rounds.append((np.array(ps), np.array(qs)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def eig_symmetric(m, tol: float = 1e-10, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.

    Each sweep visits every off-diagonal pair once using a round-robin order,
    so the n/2 rotations of one round act on disjoint index pairs and are
    applied together. Sweeps stop once the largest off-diagonal magnitude
    drops below ``tol`` times the Frobenius norm.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if np.max(np.abs(a - a.T), initial=0.0) >= SYMMETRY_TOL:
        raise ValueError("matrix is not symmetric")
    n = a.shape[0]
    if n <= 1:
        return np.diag(a).copy()
    if n % 2:
        # a decoupled dummy index keeps the pairing perfect; dropped at the end
        a = np.pad(a, ((0, 1), (0, 1)))
    size = a.shape[0]
    threshold = tol * np.linalg.norm(a)
    off = ~np.eye(size, dtype=bool)
    for _ in range(max_sweeps):
        if np.max(np.abs(a[off]), initial=0.0) <= threshold:
            break
        for p, q in _round_robin(size):
            apq = a[p, q]
            active = np.abs(apq) > 0.0
            if not active.any():
                continue
            theta = np.where(active, (a[q, q] - a[p, p]) / (2.0 * np.where(active, apq, 1.0)), 0.0)
            t = np.where(active, np.sign(theta) / (np.abs(theta) + np.sqrt(theta * theta + 1.0)), 0.0)
            t = np.where(active & (theta == 0.0), 1.0, t)
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            rot = np.eye(size)
            rot[p, p] = c
            rot[q, q] = c
            rot[p, q] = s
            rot[q, p] = -s
            a = rot.T @ a @ rot
    else:
        if np.max(np.abs(a[off]), initial=0.0) > threshold:
            raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")
    vals = np.diag(a)
    if n % 2:
        vals = vals[:n]
    return np.sort(vals)


def laplacian_eigs(g, tol: float = 1e-10) -> np.ndarray:
    a = _adjacency(g).astype(float)
    lap = np.diag(a.sum(axis=1)) - a
    return eig_symmetric(lap, tol=tol)


def rounded_integers(vals: np.ndarray, tol: float = INTEGER_TOL) -> list[int] | None:
    """Round to integers if every value is within ``tol`` of one; otherwise None."""
    r = np.rint(vals)
    if np.max(np.abs(vals - r), initial=0.0) >= tol:
        return None
    return [int(x) for x in r]


def max_clique(g) -> int:
    """Exact clique number by branch and bound with a greedy-colouring bound.

    Candidate sets are Python int bitsets. Vertices are coloured greedily in
    index order; a branch is cut when the current clique plus the number of
    colours left cannot beat the incumbent.
    """
    a = _adjacency(g)
    n = a.shape[0]
    if n == 0:
        return 0
    nbr = [0] * n
    for v in range(n):
        for u in np.nonzero(a[v])[0]:
            nbr[v] |= 1 << int(u)
    best = 0

    def colour(cand: int) -> list[tuple[int, int]]:
        out = []
        uncoloured = cand
        c = 0
        while uncoloured:
            c += 1
            q = uncoloured
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~low & ~nbr[v]
                uncoloured &= ~low
                out.append((v, c))
        return out

    def expand(size: int, cand: int):
        nonlocal best
        for v, c in reversed(colour(cand)):
            if size + c <= best:
                return
            new = cand & nbr[v]
            if new:
                expand(size + 1, new)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(0, (1 << n) - 1)
    return best


def is_connected(g) -> bool:
    a = _adjacency(g)
    n = a.shape[0]
    if n == 0:
        return True
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    frontier = seen.copy()
    while frontier.any():
        reach = a[frontier].any(axis=0) & ~seen
        seen |= reach
        frontier = reach
    return bool(seen.all())


class _UnitFlowNetwork:
    """Residual network for repeated small max-flow queries."""

    def __init__(self, n_nodes: int):
        self.n = n_nodes
        self.head: list[int] = []
        self.cap: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(n_nodes)]

    def add_arc(self, u: int, v: int, c: int, rev_c: int = 0):
        self.out[u].append(len(self.head))
        self.head.append(v)
        self.cap.append(c)
        self.out[v].append(len(self.head))
        self.head.append(u)
        self.cap.append(rev_c)

    def max_flow(self, cap: list[int], s: int, t: int, cutoff: int) -> int:
        """Augment along BFS paths in ``cap`` (mutated) until none remain or ``cutoff`` is reached."""
        flow = 0
        head, out = self.head, self.out
        while flow < cutoff:
            parent = [-1] * self.n
            parent[s] = -2
            dq = deque([s])
            found = False
            while dq and not found:
                u = dq.popleft()
                for e in out[u]:
                    if cap[e] > 0:
                        v = head[e]
                        if parent[v] == -1:
                            parent[v] = e
                            if v == t:
                                found = True
                                break
                            dq.append(v)
            if not found:
                break
            v = t
            while v != s:
                e = parent[v]
                cap[e] -= 1
                cap[e ^ 1] += 1
                v = head[e ^ 1]
            flow += 1
        return flow


def vertex_connectivity(g) -> int:
    """Minimum vertex cut via unit-capacity flow on the vertex-split digraph.

    Complete graphs give n-1; otherwise the minimum over all non-adjacent
    pairs of the number of internally disjoint paths.
    """
    a = _adjacency(g)
    n = a.shape[0]
    if not is_connected(a):
        raise Disconnected()
    pairs = [(u, v) for u, v in combinations(range(n), 2) if not a[u, v]]
    if not pairs:
        return n - 1
    big = n
    net = _UnitFlowNetwork(2 * n)
    split_arc = [0] * n
    for v in range(n):
        split_arc[v] = len(net.head)
        net.add_arc(2 * v, 2 * v + 1, 1)
    for u, v in zip(*np.nonzero(np.triu(a, 1))):
        net.add_arc(2 * int(u) + 1, 2 * int(v), big)
        net.add_arc(2 * int(v) + 1, 2 * int(u), big)
    best = n - 1
    for s, t in pairs:
        cap = list(net.cap)
        cap[split_arc[s]] = big
        cap[split_arc[t]] = big
        best = min(best, net.max_flow(cap, 2 * s + 1, 2 * t, best))
    return best


def edge_connectivity(g) -> int:
    """Minimum edge cut: min over t of the unit-capacity max-flow from vertex 0."""
    a = _adjacency(g)
    n = a.shape[0]
    if not is_connected(a):
        raise Disconnected()
    if n <= 1:
        return 0
    net = _UnitFlowNetwork(n)
    for u, v in zip(*np.nonzero(np.triu(a, 1))):
        net.add_arc(int(u), int(v), 1, 1)
    best = int(a.sum(axis=1).min())
    for t in range(1, n):
        best = min(best, net.max_flow(list(net.cap), 0, t, best))
    return best


def induced_p4_scan(g, cap: int = 12) -> bool:
    """True iff some four vertices induce a path on four vertices."""
    a = _adjacency(g)
    n = a.shape[0]
    if n > cap:
        raise TooLarge(n, cap)
    for quad in combinations(range(n), 4):
        sub = a[np.ix_(quad, quad)]
        deg = sorted(sub.sum(axis=1).tolist())
        if deg == [1, 1, 2, 2]:
            return True
    return False


@dataclass(frozen=True)
class OracleParams:
    kappa: int
    kappa_prime: int
    omega: int
    eigs: tuple[float, ...]


def oracle_params(g, eigs: bool = True) -> OracleParams:
    values = tuple(float(x) for x in laplacian_eigs(g)) if eigs else ()
    return OracleParams(
        kappa=vertex_connectivity(g),
        kappa_prime=edge_connectivity(g),
        omega=max_clique(g),
        eigs=values,
    )
