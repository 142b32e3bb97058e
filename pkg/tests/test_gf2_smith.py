from itertools import combinations, product
from math import gcd

from hypothesis import given
from hypothesis import strategies as st

from strategies import bit_rows, int_matrices
from topokit import gf2
from topokit.smith import invariant_factors, smith_diagonal


def span(rows):
    out = {0}
    for r in rows:
        out |= {x ^ r for x in out}
    return out


@given(bit_rows)
def test_rank_matches_span_size(rows):
    assert 2 ** gf2.rank(rows) == len(span(rows))


@given(bit_rows, st.integers(0, 2**10 - 1))
def test_solve_and_certificate(rows, target):
    ok, data = gf2.certify_membership(rows, target, 10)
    assert ok == (target in span(rows))
    if ok:
        acc = 0
        for i in data:
            acc ^= rows[i]
        assert acc == target
    else:
        assert gf2.dot(data, target) == 1
        assert all(gf2.dot(data, r) == 0 for r in rows)


@given(bit_rows)
def test_nullspace_is_orthogonal_complement(rows):
    ns = gf2.nullspace(rows, 10)
    assert all(gf2.dot(y, r) == 0 for y in ns for r in rows)
    assert gf2.rank(ns) == len(ns) == 10 - gf2.rank(rows)


def test_pack_unpack_roundtrip():
    bits = [1, 0, 1, 1, 0]
    assert gf2.unpack(gf2.pack(bits), 5) == bits
    assert gf2.support(gf2.pack(bits)) == [0, 2, 3]


def _det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _det([row[:j] + row[j + 1:] for row in m[1:]]) for j in range(len(m)))


def _minor_gcd(m, k):
    g = 0
    rows, cols = len(m), len(m[0])
    for rs in combinations(range(rows), k):
        for cs in combinations(range(cols), k):
            g = gcd(g, _det([[m[r][c] for c in cs] for r in rs]))
    return g


@given(int_matrices)
def test_smith_matches_determinantal_divisors(m):
    diag = [d for d in smith_diagonal(m) if d]
    for k in range(1, len(diag) + 1):
        prod_k = 1
        for d in diag[:k]:
            prod_k *= abs(d)
        assert prod_k == _minor_gcd(m, k)
    for a, b in zip(diag, diag[1:]):
        assert b % a == 0
    rank, tors = invariant_factors(m)
    assert rank == len(diag)
    assert tors == [abs(d) for d in diag if abs(d) > 1]


def test_smith_known_example():
    # Z / 2 from the projective plane's boundary map
    assert invariant_factors([[2]]) == (1, [2])
    assert invariant_factors([[2, 4], [6, 8]])[1] == [2, 4]


def test_big_entries_do_not_overflow():
    m = [[10**30, 3], [7, 10**25]]
    rank, _ = invariant_factors(m)
    assert rank == 2
