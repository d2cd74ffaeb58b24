import pytest
from hypothesis import given, strategies as st

from quiverhall.quiver import (QuiverWithAutomorphism, UnknownType, catalog, catalog_labels, fold,
                               twist_exponent, unfold, validate_admissible)


def test_a3_with_swap_is_admissible():
    q = QuiverWithAutomorphism.build([1, 2, 3], [(1, 2), (3, 2)], {1: 3, 3: 1}, period=2)
    assert validate_admissible(q).ok


def test_a2_with_swap_violates_condition_b():
    q = QuiverWithAutomorphism.build([1, 2], [(1, 2)], {1: 2, 2: 1}, period=2)
    rep = validate_admissible(q)
    assert not rep.ok
    assert any("same orbit" in v or "(b)" in v for v in rep.violations)


def test_d4_with_rotation_is_admissible():
    q = QuiverWithAutomorphism.build([0, 1, 2, 3], [(1, 0), (2, 0), (3, 0)], {1: 2, 2: 3, 3: 1}, period=3)
    assert validate_admissible(q).ok


def test_fold_b2_and_g2():
    b2 = fold(catalog("B2"))
    assert b2.orbit_index == ((1, 3), (2,))
    assert b2.orbit_sizes == (2, 1)
    assert b2.cartan == ((2, -1), (-2, 2))
    g2 = fold(catalog("G2"))
    assert g2.orbit_sizes == (1, 3)
    assert g2.cartan == ((2, -3), (-1, 2))


def test_fold_identity_gives_symmetric_cartan():
    c = fold(catalog("A3"))
    assert c.cartan == ((2, -1, 0), (-1, 2, -1), (0, -1, 2))
    assert c.orbit_sizes == (1, 1, 1)
    d4 = fold(catalog("D4"))
    assert all(d4.cartan[i][j] == d4.cartan[j][i] for i in range(4) for j in range(4))


@pytest.mark.parametrize("label", catalog_labels())
def test_catalog_entries_validate_and_symmetrize(label):
    q = catalog(label)
    assert validate_admissible(q).ok
    c = fold(q)
    n = c.rank
    assert all(c.cartan[i][j] * c.orbit_sizes[i] == c.cartan[j][i] * c.orbit_sizes[j]
               for i in range(n) for j in range(n))


def test_unknown_type():
    with pytest.raises(UnknownType):
        catalog("E9")


def test_twist_exponent_examples():
    a2 = catalog("A2")
    assert twist_exponent(a2, (1, 0), (0, 1)) == 1
    assert twist_exponent(a2, (0, 1), (1, 0)) == 0


@given(st.sampled_from(["A2", "A3", "B2", "G2"]), st.data())
def test_twist_is_bilinear_and_vanishes_on_zero(label, data):
    q = catalog(label)
    n = fold(q).rank
    vec = st.lists(st.integers(0, 3), min_size=n, max_size=n).map(tuple)
    a, b, c = data.draw(vec), data.draw(vec), data.draw(vec)
    zero = (0,) * n
    assert twist_exponent(q, zero, a) == 0 == twist_exponent(q, a, zero)
    ab = tuple(x + y for x, y in zip(a, b))
    assert twist_exponent(q, ab, c) == twist_exponent(q, a, c) + twist_exponent(q, b, c)
    assert twist_exponent(q, c, ab) == twist_exponent(q, c, a) + twist_exponent(q, c, b)


def test_unfold_repeats_over_orbits():
    assert unfold(catalog("B2"), (2, 5)) == {1: 2, 3: 2, 2: 5}


@pytest.mark.parametrize("label", catalog_labels())
def test_json_round_trip(label):
    q = catalog(label)
    assert QuiverWithAutomorphism.from_json(q.to_json()) == q
