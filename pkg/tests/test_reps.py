from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from quiverhall.fields import GF, nullspace, rank
from quiverhall.reps import (ParseError, aut_order, canonical_string, directed_order, enumerate_modules,
                             field_powers, hom_columns, hom_dim, hom_dim_reps, indecomposables, parse_module,
                             positive_roots, realize, realize_module, type_data)
from quiverhall.quiver import fold, catalog
from quiverhall.hall import classify


@pytest.fixture(scope="module")
def a2():
    return type_data("A2")


@pytest.mark.parametrize("label,count", [("A2", 3), ("B2", 4), ("G2", 6), ("A3", 6), ("D4", 12), ("C3", 9)])
def test_root_counts(label, count):
    assert len(positive_roots(fold(catalog(label)))) == count


def test_a2_directed_order(a2):
    assert a2.indec == [(0, 1), (1, 1), (1, 0)]


@pytest.mark.parametrize("label", ["A2", "A3", "B2", "G2", "C3", "D4"])
def test_directed_order_is_upper_triangular(label):
    d = type_data(label)
    m = len(d.indec)
    assert all(d.H[s][t] == 0 for s in range(m) for t in range(s))


def test_a3_order_places_socle_first():
    d = type_data("A3")
    assert d.indec[0] == (0, 0, 1)
    assert d.indec[-1] == (1, 0, 0)


def test_realize_examples(a2):
    X = realize(a2, (1, 1), 2)
    assert X.maps == [[[1]]]
    Y = realize(a2, (1, 0), 3)
    assert Y.maps == [[[]]] or Y.maps == [[]]


@pytest.mark.parametrize("label,q", [("B2", 2), ("B2", 3), ("G2", 2), ("C3", 2), ("A3", 3)])
def test_indecomposables_have_distinct_fingerprints(label, q):
    d = type_data(label)
    reps = indecomposables(d, q)
    fps = {tuple(hom_dim_reps(I, X) for I in reps) for X in reps}
    assert len(fps) == len(reps)


@pytest.mark.parametrize("label", ["A2", "A3", "B2", "G2"])
def test_hom_table_is_field_independent(label):
    d = type_data(label)
    for q in (3, 4):
        reps = indecomposables(d, q)
        for s, X in enumerate(reps):
            for t, Y in enumerate(reps):
                assert hom_dim_reps(X, Y) == d.H[s][t]


def test_hom_examples(a2):
    P, S1, S2 = (parse_module(a2, x) for x in ("P12", "S1", "S2"))
    assert hom_dim(P, S1) == 1
    assert hom_dim(S1, P) == 0
    assert hom_dim(S2, P) == 1


def test_enumerate_examples(a2):
    assert [canonical_string(m) for m in enumerate_modules(a2, (1, 1))] == ["(1,1)^1", "(0,1)^1 + (1,0)^1"]
    assert len(enumerate_modules(a2, (2, 1))) == 2
    assert [m.is_zero() for m in enumerate_modules(a2, (0, 0))] == [True]


def test_orbit_dim_examples(a2):
    assert parse_module(a2, "S1+S2").orbit_dim == 0
    assert parse_module(a2, "P12").orbit_dim == 1
    assert a2.zero().orbit_dim == 0


def test_aut_examples(a2):
    assert aut_order(parse_module(a2, "S1"), 3) == 2
    assert aut_order(parse_module(a2, "S1+S1"), 2) == 6
    for q in (2, 3, 4, 5):
        assert aut_order(parse_module(a2, "P12"), q) == q - 1


def _brute_aut(m, q):
    X = realize_module(m, q)
    F = GF(q)
    unknowns, cols = hom_columns(X, X)
    if not unknowns:
        return 1
    rows = [[c[r] for c in cols] for r in range(len(cols[0]))] if cols[0] else []
    basis = nullspace(F, rows, len(unknowns)) if rows else [[int(i == j) for j in range(len(unknowns))]
                                                               for i in range(len(unknowns))]
    d = m.data
    count = 0
    for coeffs in product(range(q), repeat=len(basis)):
        x = [0] * len(unknowns)
        for c, b in zip(coeffs, basis):
            if c:
                x = [F.add[u][F.mul[c][w]] for u, w in zip(x, b)]
        ok = True
        for i in range(d.n):
            s = d.s[i]
            n = s * m.dim[i]
            f = [[0] * n for _ in range(n)]
            for val, (vi, a, b, k) in zip(x, unknowns):
                if val and vi == i:
                    Ck = field_powers(q, s)[k]
                    for r in range(s):
                        for c in range(s):
                            f[a * s + r][b * s + c] = F.add[f[a * s + r][b * s + c]][F.mul[val][Ck[r][c]]]
            if n and rank(F, f, n) < n:
                ok = False
                break
        count += ok
    return count


@pytest.mark.parametrize("label,dim", [("A2", (1, 1)), ("A2", (2, 1)), ("A2", (1, 2)), ("A3", (1, 1, 1)),
                                       ("B2", (1, 1)), ("B2", (1, 2)), ("G2", (1, 1))])
def test_aut_order_matches_brute_force(label, dim):
    d = type_data(label)
    for m in enumerate_modules(d, dim):
        if m.end_dim <= 6:
            assert aut_order(m, 2) == _brute_aut(m, 2), m


def test_parse_and_canonical_round_trip():
    for label in ("A2", "A3", "B2", "G2"):
        d = type_data(label)
        for dim in [(1,) * d.n, (2,) + (1,) * (d.n - 1)]:
            for m in enumerate_modules(d, dim):
                assert parse_module(d, canonical_string(m)) == m


def test_parse_shorthands(a2):
    assert parse_module(a2, "P12") == a2.indecomposable((1, 1))
    assert parse_module(a2, "S1 ⊕ S2") == parse_module(a2, "(1,0)+(0,1)")
    assert parse_module(a2, "S1^2") == parse_module(a2, "S1+S1")
    with pytest.raises(ParseError):
        parse_module(a2, "(1,2)")


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["A2", "A3", "B2"]), st.data())
def test_classify_recovers_direct_sums(label, data):
    d = type_data(label)
    mult = data.draw(st.lists(st.integers(0, 2), min_size=len(d.indec), max_size=len(d.indec)))
    m = d.module(mult)
    if sum(s * x for s, x in zip(d.s, m.dim)) > 6:
        return
    q = data.draw(st.sampled_from([2, 3]))
    assert classify(realize_module(m, q)) == m


def test_directed_order_tie_break_is_lexicographic():
    roots = [(1, 0, 0), (0, 0, 1), (0, 1, 0)]
    H = {(a, b): int(a == b) for a in roots for b in roots}
    assert [roots[t] for t in directed_order(roots, H)] == sorted(roots)
