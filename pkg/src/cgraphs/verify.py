"""Theory-versus-oracle verification over exhaustive and sampled corpora."""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass, field
from functools import partial
from multiprocessing import Pool
from typing import Callable, Iterable, Sequence

import numpy as np

from cgraphs import oracle
from cgraphs.graphbuild import CGraph, build_direct, build_recursive, characteristic_matrix, degrees, laplacian
from cgraphs.graphparams import algebraic_connectivity, clique_number, inequality_suite
from cgraphs.seqcore import CreationSequence, enumerate_sequences, validate
from cgraphs.spectra import (
    eigenvector_identity_failures,
    full_spectrum,
    main_eigenvalue_check,
    quotient_matrix,
)

SPECTRUM_TOL = 1e-6
P4_SCAN_MAX_N = 10
CONNECTIVITY_MAX_N = 24


def sample_sequences(
    count: int, seed: int, max_n: int = 64, k_choices: Sequence[int] = (2, 4, 6, 8, 10)
) -> list[CreationSequence]:
    """Seeded random sequences: even k uniform, n uniform in [k, max_n], uniform composition."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        k = rng.choice(list(k_choices))
        n = rng.randint(k, max_n)
        cuts = sorted(rng.sample(range(1, n), k - 1))
        bounds = [0, *cuts, n]
        out.append(CreationSequence(tuple(b - a for a, b in zip(bounds, bounds[1:]))))
    return out


def exhaustive_corpus(max_n: int, min_n: int = 2) -> list[CreationSequence]:
    return [s for n in range(min_n, max_n + 1) for s in enumerate_sequences(n)]


@dataclass(frozen=True)
class Outcome:
    invariant: str
    sequence: tuple[int, ...]
    passed: bool
    detail: str = ""


def _spectrum_vs_oracle(s: CreationSequence, g: CGraph) -> Outcome:
    closed = np.array(full_spectrum(s).eigenvalues, dtype=float)
    eigs = oracle.laplacian_eigs(g)
    dev = float(np.max(np.abs(eigs - closed)))
    rounded = oracle.rounded_integers(eigs)
    ok = dev < SPECTRUM_TOL and rounded == [int(x) for x in closed]
    return Outcome("spectrum_oracle", s.parts, ok, f"max deviation {dev:.3g}")


def _spectrum_identities(s: CreationSequence) -> Outcome:
    spec = full_spectrum(s)
    d = degrees(s)
    q = spec.quotient_eigs
    problems = []
    if sum(spec.eigenvalues) != sum(a * di for a, di in zip(s.parts, d)):
        problems.append("trace")
    if q[s.k // 2] != d[0] + 1:
        problems.append("middle quotient eigenvalue != d_1 + 1")
    if any(b <= a for a, b in zip(q, q[1:])) or q[0] != 0 or q[-1] != s.n:
        problems.append("quotient eigenvalues not simple 0..n")
    # complete split graphs carry n with multiplicity a_1
    radius_mult = s[1] if s.k == 2 else 1
    if spec.multiplicities.get(s.n) != radius_mult or spec.spectral_radius != s.n:
        problems.append("spectral radius")
    if spec.algebraic_connectivity != algebraic_connectivity(s):
        problems.append("algebraic connectivity")
    return Outcome("spectrum_identities", s.parts, not problems, "; ".join(problems))


def _lp_equals_pq(s: CreationSequence, g: CGraph) -> Outcome:
    p = characteristic_matrix(s)
    ok = bool(np.array_equal(laplacian(g) @ p, p @ np.array(quotient_matrix(s), dtype=np.int64)))
    return Outcome("lp_equals_pq", s.parts, ok)


def check_sequence(
    s: CreationSequence,
    builder: Callable[[CreationSequence], CGraph] = build_direct,
    connectivity: bool = True,
    clique: bool = True,
) -> list[Outcome]:
    """Run every per-sequence invariant against the graph produced by ``builder``."""
    s = validate(s)
    g = builder(s)
    out = []
    out.append(Outcome("construction_agrees", s.parts, g.same_edges(build_recursive(s))))
    expected = np.repeat(np.array(degrees(s)), s.parts)
    out.append(Outcome("degree_formula", s.parts, bool(np.array_equal(g.vertex_degrees, expected))))
    connected = oracle.is_connected(g)
    out.append(Outcome("connected", s.parts, connected))
    out.append(_spectrum_vs_oracle(s, g))
    out.append(_spectrum_identities(s))
    out.append(_lp_equals_pq(s, g))
    fails = eigenvector_identity_failures(s, g)
    out.append(Outcome("eigenvector_identities", s.parts, not fails, "; ".join(fails[:3])))
    out.append(Outcome("main_eigenvalue", s.parts, main_eigenvalue_check(s)))
    m = full_spectrum(s).m
    out.append(Outcome("distinct_count_bounds", s.parts, s.k <= m <= 2 * s.k - 1, f"m={m} k={s.k}"))
    if clique:
        w_formula, w_oracle = clique_number(s), oracle.max_clique(g)
        out.append(
            Outcome("clique_formula", s.parts, w_formula == w_oracle, f"formula={w_formula} oracle={w_oracle}")
        )
    if connectivity and connected:
        for c in inequality_suite(s, graph=g):
            out.append(Outcome(f"connectivity:{c.name}", s.parts, c.passed, c.detail))
    if s.n <= P4_SCAN_MAX_N:
        out.append(Outcome("p4_free", s.parts, not oracle.induced_p4_scan(g)))
    return out


@dataclass
class VerifyReport:
    sequences: int = 0
    checks: Counter = field(default_factory=Counter)
    failures: list[Outcome] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, outcomes: Iterable[Outcome]):
        self.sequences += 1
        for o in outcomes:
            self.checks[o.invariant] += 1
            if not o.passed:
                self.failures.append(o)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "sequences": self.sequences,
            "checks": dict(sorted(self.checks.items())),
            "failures": [
                {"invariant": f.invariant, "sequence": list(f.sequence), "detail": f.detail}
                for f in self.failures
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _worker(s, builder, connectivity_max_n):
    return check_sequence(s, builder, connectivity=s.n <= connectivity_max_n)


def run_verification(
    max_n: int = 12,
    samples: int = 0,
    seed: int = 0,
    sample_max_n: int = 64,
    jobs: int = 1,
    builder: Callable[[CreationSequence], CGraph] = build_direct,
    connectivity_max_n: int = CONNECTIVITY_MAX_N,
) -> VerifyReport:
    """Exhaustive corpus for n <= ``max_n`` followed by ``samples`` seeded random sequences.

    Results are collected in corpus order regardless of ``jobs``.
    """
    corpus = exhaustive_corpus(max_n) + sample_sequences(samples, seed, sample_max_n)
    work = partial(_worker, builder=builder, connectivity_max_n=connectivity_max_n)
    report = VerifyReport()
    if jobs > 1:
        with Pool(jobs) as pool:
            results = pool.map(work, corpus, chunksize=16)
    else:
        results = map(work, corpus)
    for outcomes in results:
        report.add(outcomes)
    return report
