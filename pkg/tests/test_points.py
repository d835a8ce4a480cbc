import random

import pytest
from hypothesis import given, settings, strategies as st

from quadric_sheaves.cox import BiForm, h_line
from quadric_sheaves.linalg import PrimeField
from quadric_sheaves.points import (FAMILIES, LineDivisor, PointSet, base_points_fp,
                                    cayley_bacharach, complete_intersection_8,
                                    general_points, ideal_cohomology, is_gg_ideal,
                                    length7_family, length7_search, random_points, residual,
                                    residual_sequence_check, sections, two_line_configuration)


@pytest.fixture(scope="module")
def ci8():
    return complete_intersection_8(seed=1)


# Ideal cohomology

def test_ideal_cohomology_examples():
    assert ideal_cohomology(general_points(2, seed=1), (1, 1))[0] == 2
    assert ideal_cohomology(general_points(6, seed=2), (1, 2))[:2] == (0, 0)
    empty = PointSet([])
    for d in [(2, 1), (-3, 0), (-2, -4)]:
        assert ideal_cohomology(empty, d) == tuple(h_line(i, d) for i in range(3))


@given(st.integers(0, 9), st.integers(-1, 3), st.integers(-1, 3), st.integers(0, 10 ** 6))
@settings(max_examples=80, deadline=None)
def test_ideal_cohomology_bookkeeping(n, a, b, seed):
    Z = random_points(random.Random(seed), n)
    h0, h1, h2 = ideal_cohomology(Z, (a, b))
    assert h0 >= h_line(0, (a, b)) - n
    assert h0 - h1 + h2 == (a + 1) * (b + 1) - n
    assert h2 == h_line(2, (a, b))
    assert (h0 == h_line(0, (a, b)) - n) == (h1 == h_line(1, (a, b)))


def test_points_json_and_validation():
    Z = general_points(4, seed=3)
    assert PointSet.from_json(Z.to_json()).points == Z.points
    with pytest.raises(ValueError):
        PointSet([((1, 0), (1, 2)), ((2, 0), (3, 6))])
    with pytest.raises(ValueError):
        PointSet.from_json({"field": "Q"})
    F = PrimeField(101)
    W = PointSet([((1, 5), (0, 1)), ((1, 7), (1, 100))], F)
    assert PointSet.from_json(W.to_json()).points == W.points


# Global generation

def test_gg_examples(ci8):
    assert is_gg_ideal(general_points(2, seed=4), (1, 1)) == "gg_certified"
    Z = PointSet([((1, 0), (1, k)) for k in range(3)] + [((1, 5), (1, 7))])
    assert is_gg_ideal(Z, (2, 2)) == "not_gg"
    Z8, (f, g) = ci8
    assert all(f.evaluate(*p) == 0 and g.evaluate(*p) == 0 for p in Z8)
    assert is_gg_ideal(Z8, (2, 2)) == "gg_certified"
    with pytest.raises(ValueError):
        is_gg_ideal(Z8, (-1, 2))


def test_gg_certified_needs_two_sections():
    rng = random.Random(8)
    for _ in range(40):
        Z = random_points(rng, rng.randint(1, 8))
        d = (rng.randint(0, 2), rng.randint(0, 2))
        if is_gg_ideal(Z, d) == "gg_certified" and len(Z) < 2 * d[0] * d[1]:
            assert ideal_cohomology(Z, d)[0] >= 2


def test_base_point_scan_matches_brute_force():
    rng = random.Random(9)
    for p in (11, 13):
        F = PrimeField(p)
        pts = [((1, x), (1, y)) for x in range(p) for y in range(p)] + \
              [((0, 1), (1, y)) for y in range(p)] + [((1, x), (0, 1)) for x in range(p)] + [((0, 1), (0, 1))]
        for _ in range(25):
            d = (rng.randint(1, 3), rng.randint(1, 3))
            Z = random_points(rng, rng.randint(3, 7), F)
            V = sections(Z, d)
            if not V:
                continue
            brute = [q for q in pts if q not in Z and all(f.evaluate(*q, field=F) == 0 for f in V)]
            found = base_points_fp(V, d, p, exclude=Z.points, limit=10 ** 6)
            assert bool(found) == bool(brute)
            assert all(all(f.evaluate(*q, field=F) == 0 for f in V) for q in found)


# Cayley-Bacharach

def test_cayley_bacharach_examples(ci8):
    assert cayley_bacharach(general_points(6, seed=5), (0, 0))
    assert not cayley_bacharach(general_points(1, seed=5), (0, 0))
    assert cayley_bacharach(ci8[0], (0, 0))


@given(st.integers(2, 7), st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_cayley_bacharach_monotone(n, seed):
    rng = random.Random(seed)
    Z = random_points(rng, n + 1, general=True)
    if cayley_bacharach(Z.subset(range(n)), (0, 0)):
        assert cayley_bacharach(Z, (0, 0))


# Residuals

def test_residual_examples():
    Z = PointSet([((1, 0), (1, 1)), ((1, 0), (1, 2)), ((1, 3), (1, 1)), ((1, 4), (1, 5)), ((1, 6), (1, 6))])
    L = LineDivisor(components=[("first", (1, 0))])
    assert len(residual(Z, L)) == 3
    D = LineDivisor(form=BiForm.one())
    assert len(residual(Z, D)) == 5
    all_lines = LineDivisor(components=[("first", s) for s in {p[0] for p in Z}])
    assert len(residual(Z, all_lines)) == 0


def test_residual_sequence_check_domain():
    Z = general_points(3, seed=6)
    L = LineDivisor(components=[("first", (1, 2))])
    assert residual_sequence_check(PointSet([]), L, 2, 1)
    with pytest.raises(ValueError):
        residual_sequence_check(Z, L, 2, -2)
    with pytest.raises(ValueError):
        LineDivisor(components=[("diagonal", (1, 1))])


@given(st.integers(0, 2), st.integers(0, 2), st.booleans(), st.integers(0, 10 ** 6))
@settings(max_examples=60, deadline=None)
def test_two_line_configurations(k1, k2, corner, seed):
    corner = corner and k1 < 2 and k2 < 2
    Z, L1, L2 = two_line_configuration(random.Random(seed), k1, k2, corner)
    assert len(residual(Z, L1)) + len([p for p in Z if L1.contains(p)]) == len(Z)
    assert ideal_cohomology(Z, (2, 2))[1] == 0
    if len(Z) <= 3:
        assert ideal_cohomology(Z, (1, 1))[1] == 0
    for D in (L1, L2):
        assert residual_sequence_check(Z, D, 2, 2)
        assert residual_sequence_check(Z, D, 1, 1)


# Length seven

def test_seven_of_eight_not_gg(ci8):
    Z8 = ci8[0]
    for k in range(3):
        assert is_gg_ideal(Z8.without(k), (2, 2)) == "not_gg"


def test_three_on_a_ruling_not_gg():
    rng = random.Random(10)
    for _ in range(5):
        Z = length7_family("three_on_ruling", rng, PrimeField(10007))
        assert is_gg_ideal(Z, (2, 2)) == "not_gg"


def test_families_have_seven_points():
    rng = random.Random(11)
    for name in FAMILIES:
        assert len(length7_family(name, rng, PrimeField(31337))) == 7


def test_small_search_is_deterministic():
    a = length7_search(30, seed=3, structured=2)
    b = length7_search(30, seed=3, structured=2, jobs=2)
    assert a == b
    assert a["counterexamples"] == []
    assert all(r["verdict"] != "gg_certified" for r in a["records"])
