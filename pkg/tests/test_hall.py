import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quiverhall.cache import CorruptCache, PolyCache
from quiverhall.hall import (CertificationFailed, LayerOrderViolation, _fit, count_filtrations, degree_bound,
                             ext_dim, filtration_polynomial, grassmannian_size, hall_number, hall_polynomial,
                             isotypic_layers, slice_census, slice_count, unipotent_filtration_count)
from quiverhall.laurent import QPoly
from quiverhall.reps import aut_order, enumerate_modules, hom_dim, parse_module, type_data


@pytest.fixture(scope="module")
def a2():
    d = type_data("A2")
    return d, {k: parse_module(d, k) for k in ("P12", "S1", "S2", "S1+S2", "S1+S1")}


def test_seed_counts(a2):
    _, m = a2
    for q in (2, 3, 4):
        assert hall_number(m["P12"], m["S1"], m["S2"], q) == 1
        assert hall_number(m["P12"], m["S2"], m["S1"], q) == 0
        assert hall_number(m["S1+S1"], m["S1"], m["S1"], q) == q + 1


def test_seed_polynomials(a2):
    _, m = a2
    assert hall_polynomial(m["P12"], m["S1"], m["S2"]).poly == QPoly((1,))
    hp = hall_polynomial(m["S1+S1"], m["S1"], m["S1"])
    assert hp.poly == QPoly((1, 1))
    assert len(hp.heldout) >= 2 and not set(hp.heldout) & set(hp.samples)


def test_dimension_mismatch_gives_zero(a2):
    _, m = a2
    assert hall_number(m["P12"], m["S1"], m["S1"], 2) == 0
    assert not hall_polynomial(m["P12"], m["S1"], m["S1"]).poly


def test_certification_failure_is_raised():
    with pytest.raises(CertificationFailed):
        _fit(lambda q: 2 ** q, 3)


def test_degree_bound_covers_semisimple_case(a2):
    _, m = a2
    # the orbit of S1+S1 is a point, yet there are q+1 lines
    assert m["S1+S1"].orbit_dim == 0
    assert degree_bound(m["S1+S1"], (1, 0)) == 1


@pytest.mark.parametrize("label,total,qs", [("A2", 4, (2, 3)), ("A3", 3, (2, 3)), ("B2", 4, (2, 3)),
                                            ("G2", 4, (2,))])
def test_counting_methods_agree(label, total, qs):
    from quiverhall.verify import hall_triples
    for L, M, N in hall_triples(label, total):
        for q in qs:
            assert hall_number(L, M, N, q, "grassmannian") == hall_number(L, M, N, q, "extensions"), (L, M, N, q)


@pytest.mark.parametrize("label,dims", [("A2", [(1, 0), (0, 1), (1, 1), (2, 1)]),
                                        ("A3", [(1, 0, 0), (0, 1, 1), (1, 1, 0)]),
                                        ("B2", [(1, 0), (0, 1), (1, 1)])])
def test_hom_minus_ext_is_euler_form(label, dims):
    """sum_L g^L_MN a_M a_N / a_L = |Ext^1(M,N)| / |Hom(M,N)|, counted by subspace enumeration."""
    d = type_data(label)
    for q in (2, 3):
        for d1 in dims:
            for d2 in dims:
                total = tuple(x + y for x, y in zip(d1, d2))
                for M in enumerate_modules(d, d1):
                    for N in enumerate_modules(d, d2):
                        s = sum(Fraction(hall_number(L, M, N, q, "grassmannian") * aut_order(M, q) * aut_order(N, q),
                                         aut_order(L, q)) for L in enumerate_modules(d, total))
                        assert s == Fraction(q) ** (-d.euler(M.dim, N.dim))
                        assert ext_dim(M, N) == hom_dim(M, N) - d.euler(M.dim, N.dim) >= 0


def test_filtration_examples(a2):
    d, m = a2
    P, SS = m["P12"], m["S1+S2"]
    layers_P = isotypic_layers(P)
    assert [x.is_zero() for x in layers_P] == [True, False, True]
    for direction in ("top", "bottom"):
        assert filtration_polynomial(P, layers_P, direction) == QPoly((1,))
        assert filtration_polynomial(SS, isotypic_layers(SS), direction) == QPoly((1,))
    assert not filtration_polynomial(P, isotypic_layers(SS), "top")
    assert filtration_polynomial(P, isotypic_layers(SS), "bottom") == QPoly((1,))


def test_filtration_layer_order(a2):
    d, m = a2
    with pytest.raises(LayerOrderViolation):
        filtration_polynomial(m["S1+S2"], [m["S1"], m["S2"]])
    with pytest.raises(LayerOrderViolation):
        filtration_polynomial(m["S1+S2"], [m["S1+S2"]])


@pytest.mark.parametrize("label,dim", [("A2", (2, 1)), ("A2", (1, 2)), ("A3", (1, 1, 1)), ("B2", (1, 1))])
def test_filtration_polynomial_matches_enumeration(label, dim):
    d = type_data(label)
    for N in enumerate_modules(d, dim):
        for M in enumerate_modules(d, dim):
            for direction in ("top", "bottom"):
                F = filtration_polynomial(M, isotypic_layers(N), direction)
                assert F(2) == count_filtrations(M, isotypic_layers(N), 2, direction)


def test_slice_examples(a2):
    d, m = a2
    P, SS = m["P12"], m["S1+S2"]
    assert slice_count(P, P, 2) == 1
    for q in (2, 3):
        # a_M |E_N cap O_M| = F^M prod a_{N_i}
        lhs = aut_order(P, q) * slice_count(SS, P, q)
        rhs = filtration_polynomial(P, isotypic_layers(SS), "bottom")(q) * aut_order(m["S1"], q) * aut_order(m["S2"], q)
        assert lhs == rhs
    # a semisimple module at a single vertex has a zero slice
    assert slice_census(m["S1+S1"], 3) == {m["S1+S1"]: 1}


def test_unipotent_examples(a2):
    d, m = a2
    P, SS, S1, S2 = m["P12"], m["S1+S2"], m["S1"], m["S2"]
    Y, U = unipotent_filtration_count(P, P, 2)
    assert (Y, U) == (1, 1)
    for M, q in ((P, 2), (SS, 3)):
        Y, U = unipotent_filtration_count(M, SS, q)
        F = filtration_polynomial(M, isotypic_layers(SS), "bottom")(q)
        assert F * aut_order(S1, q) * aut_order(S2, q) * U == aut_order(M, q) * Y


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["A2", "A3"]), st.data())
def test_hall_associativity(label, data):
    d = type_data(label)
    pick = lambda: data.draw(st.sampled_from([m for dim in [(1,) + (0,) * (d.n - 1), (0,) * (d.n - 1) + (1,),
                                                             (1,) * d.n] for m in enumerate_modules(d, dim)]))
    M, N, K = pick(), pick(), pick()
    total = tuple(a + b + c for a, b, c in zip(M.dim, N.dim, K.dim))
    q = 2
    for L in enumerate_modules(d, total):
        mn = tuple(a + b for a, b in zip(M.dim, N.dim))
        nk = tuple(a + b for a, b in zip(N.dim, K.dim))
        left = sum(hall_number(L, M, X, q) * hall_number(X, N, K, q) for X in enumerate_modules(d, nk))
        right = sum(hall_number(L, Y, K, q) * hall_number(Y, M, N, q) for Y in enumerate_modules(d, mn))
        assert left == right


def test_grassmannian_size(a2):
    _, m = a2
    assert grassmannian_size(m["S1+S1"], (1, 0), 3) == 4


# cache -----------------------------------------------------------------------------

def test_cache_round_trip_and_admin(tmp_path, a2):
    _, m = a2
    path = tmp_path / "c.jsonl"
    c = PolyCache(str(path))
    hp = hall_polynomial(m["S1+S1"], m["S1"], m["S1"], c)
    hall_polynomial(m["P12"], m["S1"], m["S2"], c)
    c2 = PolyCache(str(path))
    assert c2.get("A2|(1,0)^2|(1,0)^1|(1,0)^1") == hp
    assert c2.keys() == sorted(c2.keys()) and len(c2.keys()) == 2
    assert c2.verify(fraction=1.0)
    c2.compact()
    first = path.read_bytes()
    PolyCache(str(path)).compact()
    assert path.read_bytes() == first


def test_cache_detects_tampering(tmp_path, a2):
    _, m = a2
    path = tmp_path / "c.jsonl"
    hall_polynomial(m["S1+S1"], m["S1"], m["S1"], PolyCache(str(path)))
    rec = json.loads(path.read_text())
    rec["coeffs"][0] += 1
    path.write_text(json.dumps(rec) + "\n")
    with pytest.raises(CorruptCache, match=r"A2\|\(1,0\)\^2"):
        PolyCache(str(path)).verify()


def test_unreadable_cache(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text("{not json\n")
    with pytest.raises(CorruptCache):
        PolyCache(str(path))
