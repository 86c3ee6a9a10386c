"""Constraint checkers: one test block per rule, spec'd values frozen."""

from __future__ import annotations

import pytest

from hamfix import (
    Configuration,
    MomentProfile,
    Violation,
    WeightEdge,
    builtin,
    canonicalize,
    check_all,
    compute_c1,
    flip,
)
from hamfix.constraints import (
    check_component_regularity,
    check_divisibility,
    check_extremal_edges,
    check_gamma_relation,
    check_mod,
    check_smallest_weight_balance,
    is_valid,
)


@pytest.fixture(scope="module")
def o():
    return builtin("o")


def mutate_edge(c, lo, hi, w_old, w_new):
    """Replace the weight of one edge; slot structure is unchanged."""
    edges = []
    done = False
    for e in c.edges:
        if not done and (e.lo, e.hi, e.w) == (lo, hi, w_old):
            edges.append(WeightEdge(lo, hi, w_new, e.mult))
            done = True
        else:
            edges.append(e)
    assert done, "edge to mutate not found"
    return Configuration(c.profile, tuple(edges), label=c.label)


def test_violation_requires_location():
    with pytest.raises(ValueError):
        Violation("ModK")


# -- divisibility ------------------------------------------------------------


def test_divisibility_clean(o):
    assert check_divisibility(o) == []
    assert check_divisibility(builtin("cp5", 1, 1, 1, 1, 1)) == []


def test_divisibility_violation(o):
    bad = mutate_edge(o, 0, 2, 4, 3)  # gap 4, weight 3
    vs = check_divisibility(bad)
    assert any(v.rule == "Divisibility" and (0, 2, 3) in v.edges for v in vs)


# -- mod-k congruence --------------------------------------------------------


def test_mod_clean_fixtures(o):
    assert check_mod(o) == []
    assert check_mod(builtin("remark_w7")) == []


def test_mod_violation_between_extremes():
    # weights {1,2,2,3,3} at the bottom against their negatives at the top,
    # linked through a 3-divisible chain: the residues cannot match
    prof = MomentProfile.from_gaps((1, 1, 1, 1, 2))
    edges = (
        WeightEdge(0, 1, 1),
        WeightEdge(0, 2, 2),
        WeightEdge(0, 3, 3),
        WeightEdge(0, 4, 2),
        WeightEdge(0, 5, 3),
        WeightEdge(1, 2, 1),
        WeightEdge(1, 3, 1),
        WeightEdge(1, 4, 1),
        WeightEdge(1, 5, 3),
        WeightEdge(2, 3, 1),
        WeightEdge(2, 4, 1),
        WeightEdge(2, 5, 2),
        WeightEdge(3, 4, 1),
        WeightEdge(3, 5, 2),
        WeightEdge(4, 5, 1),
    )
    c = Configuration(prof, edges)
    vs = check_mod(c)
    assert any(v.rule == "ModK" for v in vs)


# -- smallest-weight balance -------------------------------------------------


def test_balance_clean(o):
    assert check_smallest_weight_balance(o) == []


def test_balance_double_one_at_bottom(o):
    # two +1 slots at the minimum but only one index-2 point to receive -1
    bad = mutate_edge(o, 0, 3, 2, 1)
    vs = check_smallest_weight_balance(bad)
    assert any(v.rule == "SmallestWeightBalance" for v in vs)


def _double_extremal_component():
    # a k=3 component that is just a doubled edge between the extremes:
    # its top has index level 2, so the level-1 slot count cannot balance
    prof = MomentProfile.from_gaps((1, 1, 1, 1, 2))
    edges = (
        WeightEdge(0, 5, 3, 2),
        WeightEdge(0, 1, 1),
        WeightEdge(0, 2, 2),
        WeightEdge(0, 3, 1),
        WeightEdge(1, 2, 1),
        WeightEdge(1, 3, 1),
        WeightEdge(1, 4, 1),
        WeightEdge(1, 5, 2),
        WeightEdge(2, 3, 1),
        WeightEdge(2, 4, 1),
        WeightEdge(2, 4, 2),
        WeightEdge(3, 4, 1),
        WeightEdge(3, 5, 1),
        WeightEdge(4, 5, 1),
    )
    return Configuration(prof, edges)


def test_balance_component_with_index_jump():
    c = _double_extremal_component()
    comp_violations = [
        v
        for v in check_smallest_weight_balance(c)
        if v.vertices == (0, 5) and "k=3" in v.detail
    ]
    assert comp_violations


# -- component regularity ----------------------------------------------------


def test_regularity_clean(o):
    assert check_component_regularity(o) == []


def test_regularity_level_gap():
    c = _double_extremal_component()
    vs = [v for v in check_component_regularity(c) if "k=3" in v.detail]
    assert any(v.rule == "ComponentRegularity" for v in vs)


def test_regularity_dimension_mismatch(o):
    # a 6-divisible weight at the bottom makes the k=3 component of vertex 0
    # meet vertices carrying only one 3-divisible weight
    bad = mutate_edge(o, 0, 3, 2, 6)
    vs = check_component_regularity(bad)
    assert any(
        v.rule == "ComponentRegularity" and "not constant" in v.detail for v in vs
    )


# -- extremal edges ----------------------------------------------------------


def test_extremal_clean(o):
    assert check_extremal_edges(o) == []
    assert check_extremal_edges(builtin("grass", 1, 1, 2)) == []


def test_extremal_missing(o):
    bad = mutate_edge(o, 0, 1, 1, 2)
    vs = check_extremal_edges(bad)
    assert any(v.rule == "ExtremalEdge" and v.vertices == (0, 1) for v in vs)


# -- first Chern multiple ----------------------------------------------------


def test_c1_values():
    assert compute_c1(builtin("o")) == 3
    assert compute_c1(builtin("cp5", 1, 1, 1, 1, 1)) == 6
    assert compute_c1(builtin("grass", 1, 1, 2)) == 5
    assert compute_c1(builtin("remark_w7")) == 3


def test_c1_flip_invariant():
    for c in (builtin("o"), builtin("cp5", 1, 2, 3, 4, 5), builtin("grass", 2, 1, 2)):
        assert compute_c1(flip(c)) == compute_c1(c)
        assert compute_c1(canonicalize(c)) == compute_c1(c)


def test_c1_disagreement(o):
    bad = mutate_edge(o, 0, 2, 4, 2)
    result = compute_c1(bad)
    assert isinstance(result, Violation)
    assert result.rule == "C1Consistency"


# -- index/multiplicity relation for dominating edges -------------------------


def test_gamma_relation_clean(o):
    assert check_gamma_relation(o, 3) == []
    assert check_gamma_relation(builtin("remark_w7"), 3) == []


def test_gamma_relation_violation(o):
    # force a second -5 slot at the top: the (0,5) edge then has s = 2,
    # giving 5 - 0 + 2 = 7 against 3 * 10 / 5 = 6
    mutated = mutate_edge(o, 1, 5, 3, 5)
    vs = check_gamma_relation(mutated, 3)
    assert any(v.rule == "GammaRelation" and (0, 5, 5) in v.edges for v in vs)


# -- aggregation --------------------------------------------------------------


def test_check_all_fixtures_pass():
    for name, params, c1 in (
        ("o", (), 3),
        ("cp5", (1, 1, 1, 1, 1), 6),
        ("grass", (1, 1, 2), 5),
        ("remark_w7", (), 3),
    ):
        report = check_all(builtin(name, *params))
        assert report.passed, report.violations
        assert report.c1 == c1
        assert report.violations == ()


def test_check_all_mutant_fails(o):
    report = check_all(mutate_edge(o, 0, 2, 4, 2))
    assert not report.passed
    assert report.violations


def test_check_all_structure_rule(o):
    broken = Configuration(o.profile, o.edges[:-1])
    report = check_all(broken)
    assert not report.passed
    assert all(v.rule == "Structure" for v in report.violations)
    assert report.c1 is None


def test_effectiveness_flag(o):
    doubled = Configuration(
        MomentProfile(tuple(2 * v for v in o.moment)),
        tuple(WeightEdge(e.lo, e.hi, 2 * e.w, e.mult) for e in o.edges),
    )
    assert check_all(doubled, effective=False).passed
    report = check_all(doubled, effective=True)
    assert not report.passed
    assert {v.rule for v in report.violations} == {"Effectiveness"}


def test_is_valid_matches_check_all(o):
    cases = [
        builtin("o"),
        builtin("cp5", 1, 1, 1, 1, 1),
        builtin("grass", 1, 1, 2),
        builtin("remark_w7"),
        mutate_edge(o, 0, 2, 4, 2),
        mutate_edge(o, 0, 1, 1, 2),
        mutate_edge(o, 0, 3, 2, 6),
        _double_extremal_component(),
    ]
    for c in cases:
        assert is_valid(c) == check_all(c).passed


def test_report_json_shape(o):
    doc = check_all(o).to_dict()
    assert doc == {"pass": True, "c1": 3, "violations": []}
    bad = check_all(mutate_edge(o, 0, 2, 4, 3)).to_dict()
    assert bad["pass"] is False
    assert all({"rule", "location", "detail"} <= set(v) for v in bad["violations"])


def test_mutation_sensitivity_all_fixtures():
    # any single-edge weight change is caught by some rule or moves c1
    for name, params in (
        ("o", ()),
        ("cp5", (1, 1, 1, 1, 1)),
        ("grass", (1, 1, 2)),
        ("remark_w7", ()),
    ):
        c = builtin(name, *params)
        baseline = check_all(c).c1
        for e in c.edges:
            for w_new in range(1, 9):
                if w_new == e.w:
                    continue
                report = check_all(mutate_edge(c, e.lo, e.hi, e.w, w_new))
                assert (not report.passed) or report.c1 != baseline
