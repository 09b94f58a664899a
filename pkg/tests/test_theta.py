"""Lift engine: expression/pattern matching, row conditions, the
induction principles, the modification rule, first occurrence, and the
dispatcher, against hand-frozen values."""

from fractions import Fraction as Q

import pytest

from thetalift.exact import GENERIC_B, InfChar, Scalar, infchars_dual, parse_scalar
from thetalift.langlands import (
    ParamError,
    SpParams,
    canonicalize_o,
    canonicalize_sp,
    contragredient_sp,
    det_o,
    infchar_o,
    infchar_sp,
    parse_o,
    parse_sp,
    render_sp,
    swap_pq,
    trivial_o,
)
from thetalift.roots import PositiveSystem, SpKind
from thetalift.theta import (
    DET11_THETA3,
    Expr,
    TableError,
    ThetaError,
    apply_modification,
    cond_eval,
    cond_lambda,
    dual_infchar,
    expr_bind,
    expr_eval,
    first_occurrence,
    induct_n,
    induct_pq,
    instantiate_pattern,
    load_tables,
    lookup_lift,
    match_o_pattern,
    o_infchar_from_sp,
    parse_expr,
    parse_param_pattern,
    theta_n,
)


# -- expressions -------------------------------------------------------------


def test_parse_expr_literal_and_variables():
    assert parse_expr("3").var is None
    assert parse_expr("3").form == Scalar.of(3)
    e = parse_expr("m")
    assert e.var == "m" and e.form == GENERIC_B
    e = parse_expr("b-1")
    assert e.var == "b"
    assert expr_eval(e, {"b": Scalar.of(4)}) == Scalar.of(3)
    e = parse_expr("b/2+3/2")
    assert expr_eval(e, {"b": Scalar.of(5)}) == Scalar.of(4)
    e = parse_expr("-c1")
    assert e.var == "c1"
    assert expr_eval(e, {"c1": Scalar.of(Q(1, 2))}) == Scalar.of(Q(-1, 2))


def test_expr_bind_solves_and_type_checks():
    env = expr_bind(parse_expr("m"), Scalar.of(3), {})
    assert env == {"m": 3}
    assert expr_bind(parse_expr("m"), Scalar.of(Q(1, 2)), {}) is None
    assert expr_bind(parse_expr("s1"), Scalar.of(2), {}) is None
    assert expr_bind(parse_expr("s1"), Scalar.of(-1), {}) == {"s1": -1}
    env = expr_bind(parse_expr("c1"), GENERIC_B, {})
    assert env == {"c1": GENERIC_B}
    # already-bound variables must agree
    assert expr_bind(parse_expr("m"), Scalar.of(3), {"m": 4}) is None
    assert expr_bind(parse_expr("m"), Scalar.of(4), {"m": 4}) == {"m": 4}
    # affine solve
    env = expr_bind(parse_expr("b+1"), Scalar.of(3), {})
    assert env["b"] == Scalar.of(2)
    assert expr_bind(parse_expr("2"), Scalar.of(2), {}) == {}
    assert expr_bind(parse_expr("2"), Scalar.of(3), {}) is None


# -- conditions --------------------------------------------------------------


def test_cond_atoms():
    env = {"m": 3, "s1": -1, "c1": Scalar.of(0), "b": Scalar.of(Q(1, 2)), "l": 1}
    assert cond_eval("true", env)
    assert cond_eval("m>=1 & m>l", env)
    assert not cond_eval("m>=4", env)
    assert cond_eval("pair(s1,c1)!=(1,0)", env)
    assert not cond_eval("pair(s1,c1)!=(-1,0)", env)
    assert cond_eval("b notin {0,1,-1}", env)
    assert not cond_eval("m notin {3}", env)
    assert not cond_eval("b int", env)
    assert cond_eval("m int & m odd", env)
    assert not cond_eval("m even", env)
    assert cond_eval("m=3", env)
    assert cond_eval("b!=1", env)


def test_cond_symbolic_scalars_are_generic():
    env = {"c1": GENERIC_B}
    assert not cond_eval("c1 int", env)
    assert not cond_eval("c1>=1", env)
    assert not cond_eval("c1=2", env)
    assert cond_eval("c1!=2", env)
    assert cond_eval("c1 notin {0,1,-1}", env)


def test_cond_unknown_atom_and_unbound_variable():
    with pytest.raises(TableError):
        cond_eval("m ~ 3", {"m": 1})
    with pytest.raises(TableError):
        cond_eval("m>=1", {})


# -- patterns ----------------------------------------------------------------


def test_pattern_parse_and_instantiate_roundtrip():
    pat = parse_param_pattern("pi_{1}((m,0;),1,{e1+e2,e1-e2},0,0,0,0)")
    assert pat.side == "o" and pat.var_names() == {"m"}
    pi = instantiate_pattern(pat, {"m": 2})
    assert pi == parse_o("pi_{1}((2,0;),1,{e1+e2,e1-e2},0,0,0,0)")
    envs = match_o_pattern(pat, pi)
    assert envs == ({"m": 2},)
    # mismatched shape/invariants
    assert match_o_pattern(pat, trivial_o(2, 2)) == ()


def test_pattern_matching_tries_pair_permutations():
    pat = parse_param_pattern("pi_{1}(0,1,{},0,0,(1,s1),(0,c1))")
    pi = parse_o("pi_{1}(0,1,{},0,0,(1,1),(0,5))")
    envs = match_o_pattern(pat, pi)
    assert envs == ({"s1": 1, "c1": Scalar.of(5)},)
    # the (kappa=0) slot may be taken by either pair when both are zero
    pi2 = parse_o("pi_{1}(0,1,{},0,0,(-1,-1),(0,0))")
    pat2 = parse_param_pattern("pi_{1}(0,1,{},0,0,(-1,s2),(0,c2))")
    envs2 = match_o_pattern(pat2, pi2)
    assert envs2 == ({"s2": -1, "c2": Scalar.of(0)},)


def test_instantiate_rejects_invalid_parameters():
    pat = parse_param_pattern("pi((b),{2e1},0,0,0,0)")
    with pytest.raises(ParamError):
        instantiate_pattern(pat, {"b": GENERIC_B})  # symbolic discrete datum
    pat2 = parse_param_pattern("pi(0,{},(m),(0),0,0)")
    with pytest.raises(ParamError):
        instantiate_pattern(pat2, {"m": 2})  # nu=0 needs odd mu


# -- infinitesimal character duality ----------------------------------------


def test_dual_infchar_directions():
    chi = InfChar.of([Scalar.of(Q(1, 2)), Scalar.of(3)])
    assert dual_infchar(chi, 2, 2) == chi
    assert dual_infchar(chi, 2, 4).entries == InfChar.of([Q(1, 2), 1, 2, 3]).entries
    chi2 = InfChar.of([0, 3])
    assert dual_infchar(chi2, 2, 1).entries == InfChar.of([3]).entries
    with pytest.raises(ThetaError):
        dual_infchar(InfChar.of([Q(1, 2), 3]), 2, 1)  # no zero entry to remove
    back = o_infchar_from_sp(InfChar.of([3]), 2, 1)
    assert back.entries == InfChar.of([0, 3]).entries
    assert o_infchar_from_sp(dual_infchar(chi, 2, 5), 2, 5) == chi


# -- modification rule -------------------------------------------------------


def _sp0(eps, kappa):
    return SpParams((), PositiveSystem.of(SpKind(0), ()), (), (), eps, kappa)


def test_modification_example():
    probe = _sp0((1, -1, -1), (Scalar.of(3), Scalar.of(-3), Scalar.of(5)))
    out = apply_modification(probe)
    assert out.eps == (-1,)
    assert out.kappa == (Scalar.of(5),)
    assert out.mu == (0,)
    assert out.nu == (Scalar.of(6),)


def test_modification_fixpoint_and_noop():
    probe = _sp0((1, 1), (Scalar.of(2), Scalar.of(2)))
    assert apply_modification(probe) == probe  # equal signs: no clash
    probe = _sp0((1, -1, 1, -1), (Scalar.of(1), Scalar.of(1), Scalar.of(4), Scalar.of(4)))
    out = apply_modification(probe)
    assert out.eps == () and out.kappa == ()
    assert sorted(x.render() for x in out.nu) == ["2", "8"]
    assert out.mu == (0, 0)


# -- condition on the discrete datum -----------------------------------------


def test_cond_lambda_cases():
    tables = load_tables()
    full = parse_sp("pi((1,0),{e1+e2,e1-e2,2e1,2e2},0,0,0,0)")
    # case 1: the half-difference equals the signed count directly
    assert cond_lambda(full.lam, full.psi, 1)
    assert not cond_lambda(full.lam, full.psi, 3)
    # case 2/3: one zero entry; membership of the doubled coordinate root
    plus = parse_sp("pi((0),{2e1},0,0,0,0)")
    assert cond_lambda(plus.lam, plus.psi, 0)  # case 1
    assert cond_lambda(plus.lam, plus.psi, 1)  # case 2: 2e1 in Psi
    assert not cond_lambda(plus.lam, plus.psi, -1)  # case 3 fails: 2e1 in Psi
    minus = parse_sp("pi((0),{-2e1},0,0,0,0)")
    assert cond_lambda(minus.lam, minus.psi, -1)
    assert not cond_lambda(minus.lam, minus.psi, 1)
    # two zeros: the connecting root e_{k+1}+e_{k+z}
    two = parse_sp("pi((0,0),{e1+e2,e1-e2,2e1,-2e2},0,0,0,0)")
    assert cond_lambda(two.lam, two.psi, 1) == two.psi.contains((1, 1))
    assert cond_lambda(two.lam, two.psi, -1) == (not two.psi.contains((1, 1)))


# -- induction principles ----------------------------------------------------


def test_induct_n_spec_example():
    base = theta_n(det_o(2, 2), 4).params
    out = induct_n(base, 2, 2, 1)
    assert out == parse_sp("pi(0,{},(1,1),(1,3),(1),(3))")


def test_induct_n_fires_modification():
    base = parse_sp("pi((0),{2e1},0,0,(1),(1))")  # a rank-2 lift over O(3,1)
    out = induct_n(base, 3, 1, 1)
    assert out == parse_sp("pi((0),{2e1},(0),(2),0,0)")


def test_induct_n_guards():
    base = parse_sp("pi(0,{},0,0,(1),(1))")
    with pytest.raises(ThetaError):
        induct_n(base, 2, 2, 0)  # k >= 1
    with pytest.raises(ThetaError):
        induct_n(base, 3, 2, 1)  # odd p+q
    with pytest.raises(ThetaError):
        induct_n(base, 2, 2, 1)  # p+q = 2n+2
    with pytest.raises(ThetaError):
        induct_n(parse_sp("pi(0,{},0,0,0,0)"), 2, 2, 2)  # window hit: m in {n0+1..n0+k}
    with pytest.raises(ThetaError):
        induct_n(parse_sp("pi((1),{2e1},0,0,0,0)"), 0, 4, 1)  # discrete datum fails


def test_induct_pq_spec_example():
    out = induct_pq(trivial_o(2, 2), 1, 1)
    assert out == parse_o("pi_{1}(0,1,{},0,0,(1,1,1),(0,1,1))")
    assert (out.p, out.q) == (3, 3)


def test_induct_pq_guards():
    with pytest.raises(ThetaError):
        induct_pq(trivial_o(2, 2), 1, 0)
    with pytest.raises(ThetaError):
        induct_pq(det_o(2, 2), 5, 1)  # zeta/xi guard (det has zeta=-1)
    with pytest.raises(ThetaError):
        induct_pq(trivial_o(2, 2), 2, 1)  # window hit: n = m
    with pytest.raises(ThetaError):
        # this parameter first occurs at rank 1, so rank 0 is below occurrence
        induct_pq(parse_o("pi_{1}((1;0),1,{e1+f1,e1-f1},0,0,0,0)"), 0, 1)
    with pytest.raises(ThetaError):
        # no zero in the discrete datum and no (+1, 0) slot
        induct_pq(parse_o("pi_{1}((2,1;),1,{e1+e2,e1-e2},0,0,0,0)"), 5, 1)


# -- first occurrence ---------------------------------------------------------


def test_first_occurrence_classes():
    assert first_occurrence(trivial_o(4, 0)) == 0
    assert first_occurrence(trivial_o(1, 3)) == 0
    assert first_occurrence(det_o(2, 2)) == 4
    assert first_occurrence(det_o(0, 4)) == 4
    # xi = -1 families occur at 3
    assert first_occurrence(parse_o("pi_{1}((2,0;),-1,{e1+e2,e1-e2},0,0,0,0)")) == 3
    # zeta = -1 with a (+1, 0) slot occurs at 3
    assert first_occurrence(parse_o("pi_{-1}(0,1,{},0,0,(1,1),(0,5))")) == 3
    # rank-1 table rows occur at 1
    assert first_occurrence(parse_o("pi_{1}((3,0;),1,{e1+e2,e1-e2},0,0,0,0)")) == 1
    assert first_occurrence(parse_o("pi_{1}(0,1,{},0,0,(1,-1),(0,5))")) == 1
    # everything else at 2
    assert first_occurrence(parse_o("pi_{1}((2,1;),1,{e1+e2,e1-e2},0,0,0,0)")) == 2
    assert first_occurrence(parse_o("pi_{1}(0,1,{},(3),(1/2),0,0)")) == 2
    with pytest.raises(ThetaError):  # O(2,4) is outside the tabulated range
        first_occurrence(parse_o("pi_{1}((1;1,0),1,{e1+f1,e1-f1,e1+f2,e1-f2,f1+f2,f1-f2},0,0,0,0)"))


# -- dispatcher ---------------------------------------------------------------


FROZEN_LIFTS = {
    ("trivial", 4, 0, 1): "pi((1),{2e1},0,0,0,0)",
    ("trivial", 4, 0, 2): "pi((1,0),{e1+e2,e1-e2,2e1,2e2},0,0,0,0)",
    ("trivial", 3, 1, 1): "pi(0,{},0,0,(-1),(1))",
    ("trivial", 3, 1, 2): "pi((0),{2e1},0,0,(-1),(1))",
    ("trivial", 2, 2, 1): "pi(0,{},0,0,(1),(1))",
    ("trivial", 2, 2, 2): "pi(0,{},0,0,(1,1),(0,1))",
    ("trivial", 2, 2, 3): "pi(0,{},0,0,(1,1,1),(0,1,1))",
    ("det", 2, 2, 4): "pi(0,{},(1,1),(1,3),0,0)",
    ("det", 3, 1, 4): "pi((1,0),{e1+e2,e1-e2,2e1,2e2},(1),(3),0,0)",
    ("det", 4, 0, 4): "pi((2,1,0),{e1+e2,e1-e2,e1+e3,e1-e3,e2+e3,e2-e3,2e1,2e2,2e3},0,0,(-1),(1))",
}


def test_dispatcher_frozen_values():
    for (which, p, q, n), want in FROZEN_LIFTS.items():
        pi = trivial_o(p, q) if which == "trivial" else det_o(p, q)
        res = theta_n(pi, n)
        assert not res.is_zero
        assert res.params == parse_sp(want), (which, p, q, n)


def test_dispatcher_zero_below_first_occurrence():
    for rank in (1, 2, 3):
        assert theta_n(det_o(2, 2), rank).is_zero
    res = theta_n(det_o(2, 2), 3)
    assert res.render() == "0" and "occurrence" in res.provenance


def test_dispatcher_rank_zero():
    res = theta_n(trivial_o(3, 1), 0)
    assert res.params == parse_sp("pi(0,{},0,0,0,0)")
    assert theta_n(det_o(3, 1), 0).is_zero


def test_dispatcher_exceptional_case():
    pi = parse_o("pi_{-1}(0,1,{},0,0,(1,1),(0,2))")
    res = theta_n(pi, 3)
    assert res.params == canonicalize_sp(DET11_THETA3)
    assert res.params == parse_sp("pi(0,{},(1),(1),(1),(2))")


def test_dispatcher_swapped_signatures_are_contragredient():
    for (p, q) in ((0, 4), (1, 3)):
        pi = trivial_o(p, q)
        for n in (1, 2, 4):
            res = theta_n(pi, n)
            other = theta_n(swap_pq(pi), n)
            assert res.params == canonicalize_sp(contragredient_sp(other.params))
    with pytest.raises(ThetaError):  # O(2,4) is outside the tabulated range
        theta_n(parse_o("pi_{1}((1;1,0),1,{e1+f1,e1-f1,e1+f2,e1-f2,f1+f2,f1-f2},0,0,0,0)"), 2)
    with pytest.raises(ThetaError):
        theta_n(trivial_o(2, 2), -1)


def test_dispatcher_high_ranks_factor_through_rank_four():
    tr = trivial_o(2, 2)
    five = theta_n(tr, 5)
    assert five.params == parse_sp("pi(0,{},0,0,(1,1,1,1,1),(0,1,1,2,3))")
    assert five.params == induct_n(theta_n(tr, 4).params, 2, 2, 1)
    z = parse_o("pi_{-1}(0,1,{},0,0,(1,1),(0,5))")
    assert theta_n(z, 5).params == parse_sp("pi(0,{},(1),(1),(1,1,1),(2,3,5))")


def test_lookup_is_exhaustive_over_rank2_bases():
    """Every valid parameter with occurrence <= 2 must hit exactly one
    rank-2 row (completeness of the rank-2 table)."""
    tables = load_tables()
    count = 0
    from thetalift.enumeration import enumerate_o_reps

    for (p, q) in ((4, 0), (3, 1), (2, 2)):
        for entries in ([0, 1], [1, 2], [Q(1, 2), Q(5, 2)], [2, 2]):
            for pi in enumerate_o_reps(p, q, InfChar.of(entries)):
                if first_occurrence(pi, tables) <= 2:
                    count += 1
                    assert lookup_lift(tables.theta2, pi) is not None
    assert count > 20


def test_duality_across_dispatcher():
    for pi in (trivial_o(3, 1), det_o(4, 0), parse_o("pi_{-1}((2;),1,{},0,0,(-1),(0))")):
        chi = infchar_o(pi)
        for n in range(7):
            res = theta_n(pi, n)
            if res.is_zero:
                continue
            assert infchars_dual(chi, infchar_sp(res.params), 2, n)
