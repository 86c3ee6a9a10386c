"""Enumeration: pruning soundness, determinism, filters, theorem verifiers."""

from __future__ import annotations

import json

import pytest

from hamfix import (
    BudgetExceeded,
    SearchSpec,
    builtin,
    derive_weight_system,
    enumerate_configurations,
    flip,
    theorem4_weight_system,
    verify_theorem1,
    verify_theorem3,
    verify_theorem4,
)
from hamfix.model import sort_key
from hamfix.search import o_weight_system

O_WS = (
    (1, 2, 3, 4, 5),
    (-1, 1, 3, 4, 5),
    (-4, -1, 1, 2, 5),
    (-5, -2, -1, 1, 4),
    (-5, -4, -3, -1, 1),
    (-5, -4, -3, -2, -1),
)


def test_spec_validation():
    with pytest.raises(ValueError):
        SearchSpec(0, 10)
    with pytest.raises(ValueError):
        SearchSpec(5, 4)
    spec = SearchSpec(5, 10, largest_from=((5, 0),))
    assert spec.largest_from == ((0, 5),)


def test_spec_json_round_trip():
    spec = SearchSpec(5, 12, c1=3, largest_from=((0, 5),), symmetry_gaps=True)
    assert SearchSpec.from_dict(spec.to_dict()) == spec


def test_o_weight_system_frozen():
    assert o_weight_system() == O_WS
    assert derive_weight_system(builtin("o")).weights == O_WS


def test_enumerate_weight_one_is_empty():
    # with every weight 1 the smallest-weight balance cannot hold
    res = enumerate_configurations(SearchSpec(1, 6), workers=1)
    assert res.configurations == ()


def test_enumerate_minimal_width_gives_projective_space():
    res = enumerate_configurations(SearchSpec(5, 5), workers=1)
    assert len(res.configurations) == 1
    assert sort_key(res.configurations[0]) == sort_key(builtin("cp5", 1, 1, 1, 1, 1))


def test_enumerate_max_weight_4_narrow_is_empty():
    # sub-bound sanity slice of the weights<=4 emptiness claim
    res = enumerate_configurations(SearchSpec(4, 12), workers=1)
    assert res.configurations == ()


def test_enumerate_largest_from_c1_filter():
    res = enumerate_configurations(
        SearchSpec(5, 10, largest_from=((0, 5),), c1=3), workers=1
    )
    assert res.weight_systems() == [O_WS]
    for c in res.configurations:
        assert c.profile.gaps == (1, 3, 2, 3, 1)


@pytest.mark.parametrize("toggle", ["divisibility", "extremal", "gamma"])
def test_single_toggle_soundness_small(toggle):
    base = enumerate_configurations(SearchSpec(2, 6), workers=1)
    alt = enumerate_configurations(
        SearchSpec(2, 6, **{f"prune_{toggle}": False}), workers=1
    )
    assert alt.configurations == base.configurations


def test_toggle_soundness_nonempty_pool():
    base = enumerate_configurations(SearchSpec(5, 5), workers=1)
    assert base.configurations  # the projective-space point is in the pool
    no_gamma = enumerate_configurations(SearchSpec(5, 5, prune_gamma=False), workers=1)
    assert no_gamma.configurations == base.configurations
    no_l10 = enumerate_configurations(SearchSpec(5, 6, prune_extremal=False), workers=1)
    with_l10 = enumerate_configurations(SearchSpec(5, 6), workers=1)
    assert no_l10.configurations == with_l10.configurations


def test_full_brute_force_equivalence_tiny():
    pruned = enumerate_configurations(SearchSpec(1, 6), workers=1)
    brute = enumerate_configurations(
        SearchSpec(1, 6, prune_divisibility=False, prune_extremal=False, prune_gamma=False),
        workers=1,
    )
    assert pruned.configurations == brute.configurations
    assert brute.stats.nodes >= pruned.stats.nodes


def test_determinism_across_workers():
    spec = SearchSpec(5, 10, largest_from=((0, 5),))
    docs = []
    for workers in (1, 2, 4):
        res = enumerate_configurations(spec, workers=workers)
        docs.append(json.dumps(res.to_dict(), sort_keys=True))
    assert docs[0] == docs[1] == docs[2]


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        enumerate_configurations(SearchSpec(4, 12, node_limit=50), workers=1)


def test_emitted_configurations_are_canonical_and_valid():
    from hamfix import total_chern
    from hamfix.constraints import check_all

    res = enumerate_configurations(SearchSpec(5, 8), workers=1)
    assert res.configurations
    for c in res.configurations:
        assert check_all(c).passed
        assert sort_key(c) <= sort_key(flip(c))
        assert all(isinstance(x, int) for row in total_chern(c).equivariant for x in row)


def test_verify_theorem1_narrow_slice():
    report = verify_theorem1(max_width=12, workers=1)
    assert report.passed
    assert report.data["configurations"] == 0


def test_theorem4_parametric_weight_systems():
    assert theorem4_weight_system(1, 3) == O_WS
    assert theorem4_weight_system(2, 3) == (
        (2, 3, 4, 5, 7),
        (-2, 1, 4, 5, 7),
        (-5, -1, 2, 3, 7),
        (-7, -3, -2, 1, 5),
        (-7, -5, -4, -1, 2),
        (-7, -5, -4, -3, -2),
    )
    assert theorem4_weight_system(1, 6)[0] == (1, 3, 5, 7, 8)


def test_verify_theorem4_param_errors():
    with pytest.raises(ValueError):
        verify_theorem4(1, 4)  # second gap not divisible by 3
    with pytest.raises(ValueError):
        verify_theorem4(2, 6)  # gcd(2, 2) = 2: never effective
    with pytest.raises(ValueError):
        verify_theorem4(0, 3)


def test_verify_theorem3_report_shape():
    report = verify_theorem3(workers=1)
    assert report.passed
    assert report.data["gaps"] == [1, 3, 2, 3, 1]
    assert report.data["one_edge_per_pair"] is True
    assert report.data["ring_q"] == ["1", "1", "1/3", "1/6", "1/18", "1/18"]
    doc = report.to_dict()
    assert doc["name"] == "thm3" and doc["passed"] is True
