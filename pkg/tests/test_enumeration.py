"""Tests for the brute-force enumerators, classification-table
regeneration, uniqueness-by-invariants, and the verification suites."""

from fractions import Fraction as Q

import pytest

from thetalift.enumeration import (
    BETA_GRID,
    EXCEPTIONAL_THETA3_INPUT,
    EXCEPTIONAL_THETA3_OTHER,
    beta_scalar,
    enumerate_o_reps,
    enumerate_sp_reps,
    regenerate_appendix_c,
    verify_tables,
    verify_unique_by_invariants,
)
from thetalift.exact import GENERIC_B, InfChar, Scalar
from thetalift.ktypes import UKType
from thetalift.langlands import (
    canonicalize_o,
    canonicalize_sp,
    det_o,
    infchar_o,
    infchar_sp,
    parse_o,
    parse_sp,
    render_o,
    render_sp,
    tensor_det_o,
    trivial_o,
)
from thetalift.lkt import lowest_ktypes_sp
from thetalift.theta import DET11_THETA3, first_occurrence, load_tables, theta_n


# -- enumerators --------------------------------------------------------------


def test_rank_zero_census_is_the_empty_parameter():
    (only,) = enumerate_sp_reps(0, InfChar.of([]))
    assert only == parse_sp("pi(0,{},0,0,0,0)")


def test_rank_one_census_is_frozen():
    got = sorted(render_sp(pi) for pi in enumerate_sp_reps(1, InfChar.of([Q(5)])))
    assert got == [
        "pi((-5),{-2e1},0,0,0,0)",
        "pi((5),{2e1},0,0,0,0)",
        "pi(0,{},0,0,(-1),(5))",
        "pi(0,{},0,0,(1),(5))",
    ]


# Census sizes frozen after a manual audit of the rank-3 classification.
RANK3_COUNTS = {0: 23, 1: 31, 2: 62, 5: 62, Q(1, 2): 26, "generic": 26}


def test_rank_three_census_counts_are_frozen():
    for beta, want in RANK3_COUNTS.items():
        chi = InfChar.of([beta_scalar(beta), Q(0), Q(1)])
        got = enumerate_sp_reps(3, chi)
        assert len(got) == len(set(got)) == want, beta


def test_rank_four_census_count_is_frozen():
    got = enumerate_sp_reps(4, InfChar.of([Q(0), Q(1), Q(1), Q(2)]))
    assert len(got) == len(set(got)) == 159


def test_enumerated_sp_parameters_are_canonical_with_matching_infchar():
    chi = InfChar.of([Q(1), Q(3)])
    reps = enumerate_sp_reps(2, chi)
    assert len(set(reps)) == len(reps)
    for pi in reps:
        assert canonicalize_sp(pi) == pi
        assert infchar_sp(pi) == chi


@pytest.mark.parametrize("sig", [(4, 0), (3, 1), (2, 2), (0, 4), (1, 3)])
def test_enumerated_o_parameters_are_canonical_with_matching_infchar(sig):
    p, q = sig
    chi = InfChar.of([Q(1), Q(3)])
    reps = enumerate_o_reps(p, q, chi)
    assert reps and len(set(reps)) == len(reps)
    for pi in reps:
        assert canonicalize_o(pi) == pi
        assert infchar_o(pi) == chi
        assert (pi.p, pi.q) == (p, q)


def test_one_dimensional_parameters_appear_in_their_census():
    chi = InfChar.of([Q(0), Q(1)])
    for p, q in ((4, 0), (3, 1), (2, 2), (0, 4), (1, 3)):
        reps = enumerate_o_reps(p, q, chi)
        assert trivial_o(p, q) in reps
        assert det_o(p, q) in reps


# -- uniqueness by invariants ---------------------------------------------------


def test_determinant_lifts_are_unique_for_their_invariants():
    chi = InfChar.of([Q(0), Q(1), Q(1), Q(2)])
    for lkt, want in (
        ((1, 1, -1, -1), "pi(0,{},(1,1),(1,3),0,0)"),
        ((2, 2, 2, 0), "pi((1,0),{e1+e2,e1-e2,2e1,2e2},(1),(3),0,0)"),
        (
            (3, 3, 3, 3),
            "pi((2,1,0),{e1+e2,e1-e2,e1+e3,e1-e3,e2+e3,e2-e3,2e1,2e2,2e3},0,0,(-1),(1))",
        ),
    ):
        got = verify_unique_by_invariants(4, chi, {UKType.of(lkt)})
        assert got == (canonicalize_sp(parse_sp(want)),)


def test_exceptional_rank_three_invariants_select_exactly_two_parameters():
    chi = InfChar.of([Q(2), Q(0), Q(1)])
    got = verify_unique_by_invariants(3, chi, {UKType.of((1, 0, -1))})
    assert set(got) == {
        canonicalize_sp(DET11_THETA3),
        canonicalize_sp(EXCEPTIONAL_THETA3_OTHER),
    }
    # The dispatcher resolves the ambiguity to the lift of the input below.
    assert theta_n(EXCEPTIONAL_THETA3_INPUT, 3).params == canonicalize_sp(DET11_THETA3)


# -- occurrence conservation ----------------------------------------------------


def test_occurrence_ranks_of_twisted_pairs_sum_to_four():
    chi = InfChar.of([Q(0), Q(1)])
    for p, q in ((4, 0), (3, 1), (2, 2)):
        for pi in enumerate_o_reps(p, q, chi):
            assert first_occurrence(pi) + first_occurrence(tensor_det_o(pi)) == 4


# -- table regeneration ----------------------------------------------------------


def test_beta_grid_leads_with_the_contract_values():
    assert BETA_GRID[:6] == (0, 1, 2, 5, Q(1, 2), "generic")


def test_beta_scalar_handles_generic_and_rationals():
    assert beta_scalar("generic") == GENERIC_B
    assert beta_scalar(Q(1, 2)) == Scalar.of(Q(1, 2))
    assert beta_scalar(3) == Scalar.of(3)


@pytest.mark.parametrize("beta", [0, 1, Q(1, 2), "generic"])
def test_regeneration_matches_the_stored_table(beta):
    rep = regenerate_appendix_c(beta, load_tables())
    assert rep.ok, rep.render()
    assert len(rep.cases) == 1 and "table rows match" in rep.cases[0].label


def test_regeneration_report_renders_and_serializes():
    rep = regenerate_appendix_c(2)
    text = rep.render()
    assert text.startswith("PASS") and "1/1 checks passed" in text
    js = rep.to_json()
    assert js["ok"] is True and js["name"] == rep.name
    assert all(set(c) == {"label", "ok", "details"} for c in js["cases"])


# -- suite driver ----------------------------------------------------------------


def test_verify_tables_runs_a_named_suite():
    rep = verify_tables("theta4")
    assert rep.ok, rep.render()
    labels = [c.label for c in rep.cases]
    assert any("determinant lifts match" in label for label in labels)
    assert any("conservation" in label for label in labels)


def test_verify_tables_rejects_unknown_suites():
    with pytest.raises(ValueError):
        verify_tables("nonsense")


def test_verify_tables_all_is_green():
    rep = verify_tables("all")
    assert rep.ok, rep.render()
