import json

import pytest

from fanramsey.detection import find_rainbow_fan
from fanramsey.formulas import BoundedPair, f_bounded
from fanramsey.graph import FanSpec, matching_number, max_degree
from fanramsey.oracles import (
    BudgetExhausted,
    SearchBudget,
    brute_force_ar,
    brute_force_ex,
    brute_force_f,
    exhaustive_ex,
    max_rainbow_free_coloring,
    restricted_growth_strings,
    solve_ar,
    solve_ex,
    solve_f,
    unpruned_ar,
)

# machine-derived by the exhaustive searches below; regression constants, not closed forms
EX_5_BOWTIE = 7
AR_5_K5 = 10

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]


@pytest.mark.parametrize("m", range(0, 11))
def test_rgs_counts_bell_numbers(m):
    assert sum(1 for _ in restricted_growth_strings(m)) == BELL[m]


def test_rgs_shape():
    for s in restricted_growth_strings(6):
        assert s[0] == 0
        assert all(s[i] <= max(s[:i]) + 1 for i in range(1, len(s)))


@pytest.mark.parametrize("n, value", [(5, 6), (7, 12)])
def test_ex_triangle(n, value):
    assert brute_force_ex(n, 3) == value


def test_ex_bowtie_regression():
    assert brute_force_ex(5, FanSpec(2, 3)) == EX_5_BOWTIE
    assert exhaustive_ex(5, FanSpec(2, 3)) == EX_5_BOWTIE


def test_branch_and_bound_matches_plain_enumeration():
    for n in range(2, 6):
        for forbidden in (3, 4, FanSpec(2, 3), FanSpec(1, 4), FanSpec(2, 2)):
            assert brute_force_ex(n, forbidden) == exhaustive_ex(n, forbidden), (n, forbidden)


def test_ex_witness_is_free():
    from fanramsey.detection import find_fan
    res = solve_ex(6, FanSpec(2, 3))
    assert res.witness.num_edges == res.value
    assert find_fan(res.witness, FanSpec(2, 3)) is None


def test_ex_limits():
    with pytest.raises(ValueError):
        brute_force_ex(10, 3)
    with pytest.raises(BudgetExhausted):
        brute_force_ex(7, 3, SearchBudget(max_nodes=100))


@pytest.mark.parametrize("nu, delta, value", [(1, 2, 3), (2, 2, 6), (3, 3, 10)])
def test_f_examples(nu, delta, value):
    assert brute_force_f(BoundedPair(nu, delta)) == value


def test_f_witness_respects_bounds():
    for nu in range(1, 4):
        for d in range(1, 4):
            res = solve_f(BoundedPair(nu, d))
            g = res.witness
            assert g.num_edges == res.value
            assert matching_number(g) <= nu and max_degree(g) <= d


def test_f_limits():
    with pytest.raises(ValueError):
        brute_force_f(BoundedPair(4, 2))


@pytest.mark.parametrize("n", [4, 5])
def test_ar_two_edge_star(n):
    # K_{1,2} = F(2, 2): only monochromatic colourings avoid a rainbow copy
    assert brute_force_ar(n, FanSpec(2, 2)) == 2


def test_ar_single_edge():
    # F(1, 2) = K_2 is rainbow in every colouring
    assert brute_force_ar(4, FanSpec(1, 2)) == 1
    with pytest.raises(ValueError):
        max_rainbow_free_coloring(4, FanSpec(1, 2))


def test_ar_k5_regression():
    assert brute_force_ar(5, FanSpec(1, 5)) == AR_5_K5


@pytest.mark.parametrize("n, spec", [(4, FanSpec(2, 2)), (5, FanSpec(2, 2)), (5, FanSpec(1, 5)), (5, FanSpec(1, 3)), (5, FanSpec(2, 3))])
def test_witness_colourings(n, spec):
    coloring = max_rainbow_free_coloring(n, spec)
    assert coloring.is_exact
    assert coloring.num_colors == brute_force_ar(n, spec) - 1
    assert find_rainbow_fan(coloring, spec) is None


@pytest.mark.parametrize("spec", [FanSpec(2, 2), FanSpec(1, 3), FanSpec(3, 2), FanSpec(1, 4)])
def test_partition_enumeration_loses_nothing(spec):
    for n in (3, 4):
        assert solve_ar(n, spec).value == unpruned_ar(n, spec)


def test_exhaustive_and_branch_and_bound_agree():
    for n in (3, 4, 5):
        for spec in (FanSpec(2, 2), FanSpec(1, 3), FanSpec(2, 3), FanSpec(1, 4)):
            a = solve_ar(n, spec, method="exhaustive")
            b = solve_ar(n, spec, method="bnb")
            assert a.value == b.value
            assert a.witness == b.witness


def test_ar_triangle_small():
    # at most n - 1 colours avoid a rainbow triangle, so ar(n, K_3) = n
    for n in (3, 4, 5):
        assert brute_force_ar(n, FanSpec(1, 3)) == n


def test_ar_six_vertices_branch_and_bound():
    assert brute_force_ar(6, FanSpec(1, 3)) == 6
    with pytest.raises(BudgetExhausted):
        brute_force_ar(6, FanSpec(1, 4), SearchBudget(max_nodes=50))


def test_ar_limits():
    with pytest.raises(ValueError):
        brute_force_ar(7, FanSpec(1, 3))
    with pytest.raises(ValueError):
        solve_ar(6, FanSpec(1, 3), method="exhaustive")


def test_oracle_json_record():
    res = solve_f(BoundedPair(2, 3))
    record = json.loads(res.to_json("w.txt"))
    assert record["value"] == 7
    assert record["parameters"] == {"nu": 2, "delta": 3}
    assert record["witness-file"] == "w.txt"
    assert {"node count", "elapsed"} <= set(record)


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=0)
