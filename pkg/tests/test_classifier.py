import json
import os

import pytest

from quadric_sheaves import classifier as C
from quadric_sheaves.sheaf import (Presentation, chern, cohomology, dual, handle,
                                   is_indecomposable, split_target_summand)


@pytest.fixture(scope="module")
def report():
    return C.verify_classification(seed=7, jobs=2)


# Rules

def test_rank2_rules_examples():
    assert set(C.rank2_rules((1, 1))) == {2}
    assert set(C.rank2_rules((2, 2))) == {3, 4, 5, 6, 8}
    assert C.rank2_rules((0, 0)) == {}
    assert C.rank2_rules((0, 2)) == {}
    assert set(C.rank2_rules((1, 2))) == {2, 3, 4}
    with pytest.raises(ValueError):
        C.rank2_rules((3, 1))


def test_rank2_pathway_kinds():
    kinds = C.rank2_rules((2, 2))
    assert "extension" in kinds[4] and "point-scheme" in kinds[4]
    assert kinds[5] == ["point-scheme"]
    assert sorted(kinds[6]) == ["point-scheme", "presentation"]


def test_rank_bound_examples():
    assert C.rank_bound((2, 2), 8) == 8
    assert C.rank_bound((1, 1), 2) == 3
    assert C.rank_bound((1, 2), 4) == 5
    with pytest.raises(ValueError):
        C.rank_bound((2, 2), 7)


def test_higher_rank_examples():
    assert C.higher_rank_rules((2, 2), 6) == {3, 4, 5}
    assert C.higher_rank_rules((1, 2), 2) == set()
    assert C.higher_rank_rules((2, 2), 8) == set(range(3, 9))
    assert C.higher_rank_rules((2, 2), 5) == {3}
    with pytest.raises(ValueError):
        C.higher_rank_rules((2, 2), 7)


def test_stated_values_agree_with_riemann_roch():
    for base in C.BASES:
        if base.h1_source == "stated":
            assert C.base_h1(base) == base.c2 - 2


def test_split_bases_all_covered():
    for c1 in [(1, 1), (1, 2), (2, 2)]:
        assert C.uncovered_split_bases(c1) == []
    assert C.split_bases((2, 2)) == [((0, 2), (2, 0), 4, 2)]


# Full verification

def test_derived_table_equals_reference(report):
    assert report["ok"]
    derived = {tuple(x) for x in report["derived"]}
    assert derived == C.reference_table()
    assert not any(a == 2 and b == 2 and c2 == 7 for a, b, c2, _ in derived)
    assert max(r for *_, r in derived) == 8


def test_swap_symmetry():
    for a in range(3):
        for b in range(3):
            assert set(C.rank2_rules((a, b))) == set(C.rank2_rules((b, a)))
            for c2 in C.rank2_rules((a, b)):
                assert C.higher_rank_rules((a, b), c2) == C.higher_rank_rules((b, a), c2)


def test_c2_never_exceeds_c1_squared(report):
    for a, b, c2, _ in report["derived"]:
        assert c2 <= 2 * a * b
    for c1 in [(1, 1), (1, 2), (2, 2)]:
        assert 2 * c1[0] * c1[1] in C.rank2_rules(c1)


def test_rank_sets_downward_closed_except_exclusions():
    gaps = {}
    for c1 in [(1, 1), (1, 2), (2, 2)]:
        for c2 in C.rank2_rules(c1):
            hr = C.higher_rank_rules(c1, c2)
            full = set(range(3, C.rank_bound(c1, c2) + 1))
            if hr != full:
                gaps[(c1, c2)] = hr
    # every gap comes from a named exclusion rule
    assert gaps == {((2, 2), 4): {3}, ((2, 2), 5): {3}, ((1, 2), 3): {3},
                    ((2, 2), 3): set(), ((1, 2), 2): set(), ((2, 2), 6): {3, 4, 5}}
    for c1, c2 in gaps:
        for base, _, per_rank in C.higher_rank_paths(c1, c2):
            for r, (ok, trail) in per_rank.items():
                if not ok and r <= C.base_h1(base) + 2:
                    assert any(x in trail for _, x in base.excluded)


def test_every_admissible_row_has_passing_witness(report):
    for key, rec in report["records"].items():
        if rec["verdict"] == "admissible":
            assert rec["witness_path"], key
            assert rec["checks"] and all(rec["checks"].values()), key
        else:
            assert rec["rule_trail"], key


def test_report_is_deterministic():
    a = C.verify_classification(seed=3)
    b = C.verify_classification(seed=3, jobs=2)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


# Witnesses

@pytest.mark.parametrize("spec", C.WITNESSES, ids=lambda w: w.name)
def test_witness_certificates(spec):
    checks, info = C.certify(spec.name, seed=0)
    assert all(checks.values()), (checks, info)


def test_presentation_witnesses_satisfy_riemann_roch():
    for spec in C.WITNESSES:
        if spec.kind == "point-scheme":
            continue
        P = C.build_witness(spec.name)
        h = cohomology(P)
        if h[1] == 0 and h[2] == 0:
            assert h[0] == C.euler_char(chern(P))


def test_witness_lookup():
    spec, P = C.witness((1, 1), 2, 3)
    assert P.source == [(-1, -1)] and P.target == [(0, 0)] * 4
    spec, P = C.witness((2, 2), 6, 3, "(1,0)")
    assert P.target == [(0, 0)] * 3 + [(1, 0)]
    spec, P = C.witness((2, 2), 4, 3, "(1,0)")
    assert P.source == [(0, 0)] and sorted(P.target) == [(0, 1), (0, 1), (1, 0), (1, 0)]
    spec, Z = C.witness((2, 2), 5, 2)
    assert spec.kind == "point-scheme" and len(Z) == 5
    with pytest.raises(ValueError):
        C.witness((2, 2), 7, 2)


def test_corpus_regenerates_identically(tmp_path):
    C.write_corpus(tmp_path, seed=0)
    shipped = os.path.join(os.path.dirname(__file__), "..", "witnesses")
    names = sorted(os.listdir(tmp_path))
    assert names == sorted(os.listdir(shipped))
    for n in names:
        with open(tmp_path / n) as a, open(os.path.join(shipped, n)) as b:
            assert a.read() == b.read(), n


def test_corpus_files_reload():
    shipped = os.path.join(os.path.dirname(__file__), "..", "witnesses")
    with open(os.path.join(shipped, "manifest.json")) as fh:
        manifest = json.load(fh)
    P = Presentation.from_json(json.load(open(os.path.join(shipped, "max22_r2.json"))))
    assert chern(P).to_json() == {"r": 2, "c1": [2, 2], "c2": 8}
    assert manifest["(2,2,8,2,(0,0))"]["file"] == "max22_r2.json"


# Constructions that look natural but decompose

def test_generic_sections_give_decomposable_bundles():
    import random
    rng = random.Random(4)
    # coker(O -> O(0,1) + T) for T = coker(O(-1,-1) -> O^4)
    P = C._section_quotient(C.build_witness("max11_r3"), [(0, 1)], rng)
    assert chern(P) == C.ChernData(3, (1, 2), 3)
    assert not is_indecomposable(P)
    # rank five, index (1,0), c2 = 6 from generic (1,2)-forms
    G = Presentation.generic([(-1, -2)], [(0, 0)] * 5 + [(1, 0)], seed=5, locally_free=True)
    assert split_target_summand(G, 5) is not None
    assert not is_indecomposable(G)
    # with a common zero of the (1,2)-forms the O(1,0) row cannot be cleared
    W = C.build_witness("c22_6_i10_r5")
    assert split_target_summand(W, 5) is None
    assert handle(dual(W, True)).h(1) == 1


def test_rank_six_with_common_zero_has_trivial_factor():
    import random
    rng = random.Random(6)
    rows = [[C._vanishing_at_origin(1, 2, rng)] for _ in range(6)]
    P = Presentation([(-1, -2)], [(0, 0)] * 6 + [(1, 0)],
                     rows + [[C._not_vanishing_at_origin(2, 2, rng)]], True)
    assert C.trivial_factor_test(P, True)
