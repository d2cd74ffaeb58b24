from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from quiverhall.fields import (GF, count_subspaces, extension, factor_prime_power, inverse, is_prime_power,
                               matmul, identity, nullspace, rank, subspaces)

ORDERS = [2, 3, 4, 5, 7, 8, 9]


def test_prime_power_factoring():
    assert factor_prime_power(8) == (2, 3)
    assert factor_prime_power(9) == (3, 2)
    assert not is_prime_power(6)
    with pytest.raises(ValueError):
        factor_prime_power(12)


@pytest.mark.parametrize("q", ORDERS)
def test_field_axioms(q):
    F = GF(q)
    els = range(q)
    for a, b in product(els, els):
        assert F.add[a][b] == F.add[b][a]
        assert F.mul[a][b] == F.mul[b][a]
    for a in range(1, q):
        assert F.mul[a][F.inv[a]] == 1
    for a, b, c in product(els, els, els):
        assert F.mul[a][F.add[b][c]] == F.add[F.mul[a][b]][F.mul[a][c]]


@pytest.mark.parametrize("q,s", [(2, 2), (2, 3), (3, 2), (4, 2), (3, 3)])
def test_extension_is_a_field_with_companion_action(q, s):
    E = extension(GF(q), s)
    assert E.order == q ** s
    assert all(E.mul[a][E.inv[a]] == 1 for a in range(1, E.order))
    # the companion matrix acts on digit columns as multiplication by the generator
    C = E.companion()
    F = GF(q)
    for e in range(E.order):
        col = [[d] for d in E.digits(e)]
        got = [r[0] for r in matmul(F, C, col)]
        assert got == E.digits(E.mul[E.generator][e])


@pytest.mark.parametrize("q,n,k", [(2, 3, 1), (2, 4, 2), (3, 3, 2), (4, 3, 1), (5, 2, 1)])
def test_subspace_enumeration_matches_gaussian_binomial(q, n, k):
    F = GF(q)
    subs = list(subspaces(F, n, k))
    assert len(subs) == count_subspaces(q, n, k)
    assert all(rank(F, rows, n) == k for rows, _ in subs)
    assert len({tuple(map(tuple, rows)) for rows, _ in subs}) == len(subs)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4, 5]), st.data())
def test_inverse_and_nullspace(q, data):
    F = GF(q)
    n = data.draw(st.integers(1, 4))
    A = [[data.draw(st.integers(0, q - 1)) for _ in range(n)] for _ in range(n)]
    r = rank(F, A, n)
    ns = nullspace(F, A, n)
    assert len(ns) == n - r
    for x in ns:
        assert all(v == 0 for v in (row[0] for row in matmul(F, A, [[y] for y in x])))
    if r == n:
        assert matmul(F, A, inverse(F, A)) == identity(n)
