from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cgraphs import oracle
from cgraphs.errors import OddLengthUnsupported
from cgraphs.graphbuild import build_direct, characteristic_matrix, degrees, laplacian
from cgraphs.seqcore import enumerate_sequences, validate
from cgraphs.spectra import (
    bulk_eigs,
    bulk_eigvecs,
    distinct_count,
    eigenvector_identity_failures,
    four_eig_characterization,
    full_spectrum,
    helmert_vector,
    main_eigenvalue_check,
    merged_bulk_eigs,
    quotient_eigs,
    quotient_eigvecs,
    quotient_matrix,
)

EXAMPLE = (8, 3, 4, 2, 1, 5, 6, 3, 7, 9)
F = Fraction

even_parts = st.lists(st.tuples(st.integers(1, 8), st.integers(1, 8)), min_size=1, max_size=5).map(
    lambda pairs: [v for pair in pairs for v in pair]
)


def oracle_spectrum(parts):
    return oracle.rounded_integers(oracle.laplacian_eigs(build_direct(parts)))


def test_quotient_matrix_worked_example():
    printed = [
        [22, -3, 0, -2, 0, -5, 0, -3, 0, -9],
        [-8, 27, 0, -2, 0, -5, 0, -3, 0, -9],
        [0, 0, 19, -2, 0, -5, 0, -3, 0, -9],
        [-8, -3, -4, 32, 0, -5, 0, -3, 0, -9],
        [0, 0, 0, 0, 17, -5, 0, -3, 0, -9],
        [-8, -3, -4, -2, -1, 30, 0, -3, 0, -9],
        [0, 0, 0, 0, 0, 0, 12, -3, 0, -9],
        [-8, -3, -4, -2, -1, -5, -6, 38, 0, -9],
        [0, 0, 0, 0, 0, 0, 0, 0, 9, -9],
        [-8, -3, -4, -2, -1, -5, -6, -3, -7, 39],
    ]
    assert [list(r) for r in quotient_matrix(EXAMPLE)] == printed


def test_quotient_matrix_small():
    assert quotient_matrix((1, 1)) == ((1, -1), (-1, 1))
    assert quotient_matrix((21, 3)) == ((3, -3), (-21, 21))
    g = build_direct((21, 3))
    p = characteristic_matrix((21, 3))
    assert np.array_equal(laplacian(g) @ p, p @ np.array(quotient_matrix((21, 3))))


def test_odd_length_refused():
    for fn in (quotient_matrix, quotient_eigs, quotient_eigvecs, bulk_eigs, full_spectrum, distinct_count):
        with pytest.raises(OddLengthUnsupported):
            fn((4, 2, 3))


def test_quotient_eigs_examples():
    assert quotient_eigs(EXAMPLE) == (0, 9, 12, 17, 19, 30, 34, 35, 41, 48)
    assert quotient_eigs((1, 1)) == (0, 2)
    assert quotient_eigs((6, 13, 8, 8)) == (0, 8, 27, 35)
    assert set(quotient_eigs((6, 13, 8, 8))) <= set(oracle_spectrum((6, 13, 8, 8)))


def test_quotient_eigvecs_worked_example():
    lam = quotient_eigs(EXAMPLE)
    vecs = dict(zip(lam, quotient_eigvecs(EXAMPLE)))
    ones = [F(1)] * 10
    assert list(vecs[0]) == ones
    assert list(vecs[48]) == [F(1)] * 9 + [F(-13, 3)]
    assert list(vecs[41]) == [F(1)] * 7 + [F(-29, 3), 0, 0]
    assert list(vecs[9]) == [F(1)] * 8 + [F(-32, 7), 0]
    assert list(vecs[35]) == [F(1)] * 5 + [F(-18, 5)] + [0] * 4
    assert list(vecs[12]) == [F(1)] * 6 + [F(-23, 6)] + [0] * 3
    assert list(vecs[34]) == [F(1)] * 3 + [F(-15, 2)] + [0] * 6
    assert list(vecs[17]) == [F(1)] * 4 + [F(-17)] + [0] * 5
    assert list(vecs[30]) == [F(1), F(-8, 3)] + [0] * 8
    assert list(vecs[19]) == [F(1), F(1), F(-11, 4)] + [0] * 7


def test_quotient_eigvec_k2():
    assert quotient_eigvecs((1, 1))[1] == (F(1), F(-1))


def test_bulk_eigs_examples():
    assert bulk_eigs(EXAMPLE) == [(30, 7), (27, 2), (23, 3), (32, 1), (30, 4), (18, 5), (38, 2), (16, 6), (39, 8)]
    assert sorted(bulk_eigs((21, 3))) == [(21, 2), (24, 20)]
    assert bulk_eigs((1, 1)) == []
    assert merged_bulk_eigs(EXAMPLE)[-1] == (39, 8)
    assert dict(merged_bulk_eigs(EXAMPLE))[30] == 11


def test_worked_example_bulk_not_the_printed_typos():
    # printed list has 7^2 and 36^2; the oracle only knows 27^2 and 38^2
    spectrum = Counter(oracle_spectrum(EXAMPLE))
    assert spectrum[27] == 2 and spectrum[38] == 2
    assert spectrum[7] == 0 and spectrum[36] == 0


@pytest.mark.parametrize(
    "parts, distinct",
    [
        ((21, 3), (0, 21, 24)),
        ((6, 6, 6, 6), (0, 6, 12, 18, 24)),
        ((5, 2, 3, 4, 2, 8), (0, 8, 10, 12, 15, 16, 17, 18, 19, 22, 24)),
    ],
)
def test_full_spectrum_distinct(parts, distinct):
    assert full_spectrum(parts).distinct == distinct


def test_full_spectrum_complete_split_multiplicities():
    assert full_spectrum((21, 3)).multiplicities == {0: 1, 21: 2, 24: 21}


def test_helmert_vectors():
    assert helmert_vector(3, 1) == (1, -1, 0)
    assert helmert_vector(3, 2) == (1, 1, -2)
    for length in range(2, 8):
        vs = [np.array(helmert_vector(length, j)) for j in range(1, length)]
        assert all(v.sum() == 0 for v in vs)
        gram = np.array([[u @ v for v in vs] for u in vs])
        assert np.count_nonzero(gram - np.diag(np.diag(gram))) == 0
    with pytest.raises(ValueError):
        helmert_vector(3, 3)


def test_bulk_eigvecs_small():
    vs = list(bulk_eigvecs((21, 3)))
    part2 = [v for v in vs if v.part == 2]
    assert len(part2) == 2 and {v.eigenvalue for v in part2} == {21}
    lap = laplacian(build_direct((21, 3)))
    for v in part2:
        x = np.array(v.vector)
        assert np.array_equal(lap @ x, 21 * x)
    assert list(bulk_eigvecs((1, 1))) == []


@pytest.mark.parametrize(
    "parts, m",
    [((10, 1, 10, 3), 6), ((17, 1, 1, 1, 1, 1, 1, 1), 8), ((3,) * 8, 9)],
)
def test_distinct_count_table_rows(parts, m):
    assert distinct_count(parts) == m
    assert len(set(oracle_spectrum(parts))) == m


def test_distinct_values_table_row_four():
    assert full_spectrum((10, 1, 10, 3)).distinct == (0, 3, 13, 14, 21, 24)


@pytest.mark.parametrize("parts", [EXAMPLE, (1, 1), (21, 3)])
def test_main_eigenvalue_examples(parts):
    assert main_eigenvalue_check(parts)


@pytest.mark.parametrize(
    "parts, expected",
    [((5, 1, 6, 12), True), ((6, 6, 6, 6), False), ((2, 1, 3, 6), True), ((2, 1, 3, 4), False), ((21, 3), False)],
)
def test_four_eig_characterization_examples(parts, expected):
    assert four_eig_characterization(parts) is expected
    if len(parts) == 4:
        assert (distinct_count(parts) == 4) is expected


@settings(max_examples=150, deadline=None)
@given(even_parts)
def test_spectrum_properties(parts):
    s = validate(parts)
    spec = full_spectrum(s)
    q = spec.quotient_eigs
    d = degrees(s)
    assert len(spec.eigenvalues) == s.n
    assert q[0] == 0 and q[-1] == s.n
    assert all(a < b for a, b in zip(q, q[1:]))
    assert sum(m for _, m in spec.bulk_eigs) == s.n - s.k
    assert sum(spec.eigenvalues) == sum(a * di for a, di in zip(s.parts, d))
    assert q[s.k // 2] == d[0] + 1
    assert s.k <= spec.m <= 2 * s.k - 1
    assert eigenvector_identity_failures(s) == []
    assert main_eigenvalue_check(s)


@settings(max_examples=60, deadline=None)
@given(even_parts)
def test_spectrum_matches_numpy(parts):
    # second independent numerical route, beside the Jacobi oracle
    g = build_direct(parts)
    vals = np.linalg.eigvalsh(laplacian(g).astype(float))
    assert np.max(np.abs(vals - np.array(full_spectrum(parts).eigenvalues))) < 1e-8


def test_quotient_eigenvectors_exact_rational():
    for s in enumerate_sequences(9):
        q = quotient_matrix(s)
        for lam, x in zip(quotient_eigs(s), quotient_eigvecs(s)):
            assert tuple(sum(a * b for a, b in zip(row, x)) for row in q) == tuple(lam * v for v in x)


# -- equality cases of k <= m <= 2k-1 ---------------------------------------


@pytest.mark.parametrize("a1", range(1, 7))
@pytest.mark.parametrize("k", [2, 4, 6, 8])
def test_lower_bound_first_part_then_ones(a1, k):
    assert distinct_count((a1,) + (1,) * (k - 1)) == k


@pytest.mark.parametrize("k, p", [(8, 2), (10, 2), (10, 3), (12, 3), (12, 4), (14, 5)])
def test_lower_bound_single_large_penultimate(k, p):
    parts = [1] * k
    parts[k - 2] = p
    assert distinct_count(parts) == k


@pytest.mark.parametrize("form", range(5))
@pytest.mark.parametrize("a", range(1, 7))
def test_lower_bound_five_k4_forms(form, a):
    parts = [(a, 1, 1, 1), (a, 1, 1 + a, 1), (a, 1, 1, 2 + a), (a, 1, 1 + a, 1 + a), (a, 1, 1 + a, 2 + 2 * a)][form]
    assert four_eig_characterization(parts)
    assert distinct_count(parts) == 4


def test_four_distinct_iff_five_forms():
    for n in range(4, 15):
        for s in enumerate_sequences(n):
            if s.k == 4:
                assert (distinct_count(s) == 4) == four_eig_characterization(s), s


@pytest.mark.parametrize("a1, a2", [(2, 2), (5, 3), (21, 3), (3, 9), (10, 10)])
def test_upper_bound_complete_split(a1, a2):
    spec = full_spectrum((a1, a2))
    assert spec.m == 3
    assert spec.multiplicities == {0: 1, a1: a2 - 1, a1 + a2: a1}


@pytest.mark.parametrize("p, q", [(2, 3), (3, 2), (4, 7), (5, 2), (6, 4), (2, 9)])
def test_upper_bound_pq_family(p, q):
    spec = full_spectrum((p, q, p + 1, q + 1))
    listed = Counter({2 * p + 2 * q + 2: 1, q + 1: 1, 0: 1})
    for value, mult in [(p + 2 * q + 1, p), (p + q + 1, q - 1), (2 * p + q + 1, q), (p + q + 2, p)]:
        listed[value] += mult
    assert spec.multiplicities == dict(sorted(listed.items()))
    assert spec.m == 7


def test_pq_family_counterexample_p1():
    # stated conditions p != q, q > 1 allow p = 1, where 2p+q+1 = p+q+2
    assert distinct_count((1, 2, 2, 3)) == 6


def _ijr_listed(i, j, r):
    c = Counter({2 * i + 2 * j + 2 * r + 3: 1, 2 * i + j + 2 * r + 2: 1, r + i + 2: 1, r + 1: 1, 0: 1})
    for value, mult in [
        (2 * i + r + 2, j - 1),
        (i + j + 2 * r + 1, i),
        (2 * i + 2 * j + r + 2, r),
        (2 * i + j + r + 2, i),
        (2 * r + i + 2, r - 1),
        (j + r + 2, j),
    ]:
        c[value] += mult
    return +c


def test_ijr_family_listed_spectrum_exhaustive():
    for i in range(1, 9):
        for j in range(1, 9):
            for r in range(1, 9):
                spec = full_spectrum((i, j, r, i + 1, j + 1, r + 1))
                assert spec.multiplicities == dict(sorted(_ijr_listed(i, j, r).items())), (i, j, r)


@pytest.mark.parametrize("i, j, r", [(1, 5, 3), (2, 3, 4), (3, 4, 2), (4, 7, 2), (5, 6, 3), (5, 2, 3)])
def test_upper_bound_ijr_family(i, j, r):
    assert j > 1 and i != r and r + i != j
    assert len(_ijr_listed(i, j, r)) == 11
    assert distinct_count((i, j, r, i + 1, j + 1, r + 1)) == 11


def test_ijr_family_needs_distinct_values():
    # satisfies j > 1, i != r, r + i != j, yet several listed values coincide
    assert distinct_count((1, 2, 2, 2, 3, 3)) == 8
    for i in range(1, 7):
        for j in range(2, 8):
            for r in range(1, 7):
                if i != r and r + i != j:
                    m = distinct_count((i, j, r, i + 1, j + 1, r + 1))
                    assert (m == 11) == (len(_ijr_listed(i, j, r)) == 11)


@pytest.mark.parametrize("p", range(2, 7))
@pytest.mark.parametrize("k", range(2, 11, 2))
def test_constant_sequence_has_k_plus_one(p, k):
    assert distinct_count((p,) * k) == k + 1


def test_spectral_radius_multiplicity():
    for n in range(2, 11):
        for s in enumerate_sequences(n):
            spec = full_spectrum(s)
            assert spec.spectral_radius == s.n
            assert spec.multiplicities[s.n] == (s[1] if s.k == 2 else 1)


def test_cospectral_sequences_are_isomorphic():
    nx = pytest.importorskip("networkx")
    collisions = 0
    for n in range(2, 11):
        seen = {}
        for s in enumerate_sequences(n):
            seen.setdefault(full_spectrum(s).eigenvalues, []).append(s)
        for group in seen.values():
            first = nx.from_numpy_array(build_direct(group[0]).adjacency.astype(int))
            for other in group[1:]:
                collisions += 1
                assert nx.is_isomorphic(first, nx.from_numpy_array(build_direct(other).adjacency.astype(int)))
    assert collisions > 0
    # first collision: both are a dominating vertex over K2 + K3
    assert full_spectrum((1, 1, 3, 1)).eigenvalues == full_spectrum((2, 1, 2, 1)).eigenvalues


def test_collision_rule():
    for n in range(4, 12):
        for s in enumerate_sequences(n):
            p = s.parts
            if s.k >= 4 and p[1] == 1 and p[2] >= 2:
                twin = (p[2] - 1, 1, p[0] + 1) + p[3:]
                assert full_spectrum(twin).eigenvalues == full_spectrum(s).eigenvalues
