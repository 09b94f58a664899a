from fractions import Fraction

import pytest

from thetalift.exact import GENERIC_B, Scalar
from thetalift.ktypes import OKType, UKType
from thetalift.langlands import (
    OParams,
    SpParams,
    det_o,
    parse_o,
    parse_sp,
    swap_pq,
    tensor_det_o,
    trivial_o,
)
from thetalift.lkt import lowest_ktypes_o, lowest_ktypes_sp, multiplicity_o31
from thetalift.roots import PositiveSystem, SpKind


def test_one_dimensionals_have_one_dimensional_lkt():
    for p, q in [(4, 0), (3, 1), (2, 2), (1, 3), (0, 4)]:
        assert lowest_ktypes_o(trivial_o(p, q)) == (
            OKType.of(p, q, (0,) * (p // 2), (0,) * (q // 2), 1, 1),
        )
        dets = lowest_ktypes_o(det_o(p, q))
        assert dets == (OKType.of(p, q, (0,) * (p // 2), (0,) * (q // 2), -1, -1),)


def test_lkt_o22_discrete_series():
    x = parse_o("pi_{1}((3;1),1,{e1+f1,e1-f1},0,0,0,0) @ O(2,2)")
    assert lowest_ktypes_o(x) == (OKType.of(2, 2, (4,), (1,), 1, 1),)
    y = parse_o("pi_{1}((1;3),1,{e1+f1,-e1+f1},0,0,0,0) @ O(2,2)")
    assert lowest_ktypes_o(y) == (OKType.of(2, 2, (1,), (4,), 1, 1),)


def test_lkt_o31_zeta_minus():
    for m in (1, 2, 5):
        x = parse_o(f"pi_{{-1}}(({m};),1,{{}},0,0,(1),(0)) @ O(3,1)")
        assert lowest_ktypes_o(x) == (OKType.of(3, 1, (m,), (), -1, -1),)


def test_lkt_o31_xi_minus():
    x = parse_o("pi_{1}((0;),-1,{},0,0,(-1),(b)) @ O(3,1)")
    assert lowest_ktypes_o(x) == (OKType.of(3, 1, (0,), (), -1, 1),)
    # same parameter seen through O(1,3)
    y = swap_pq(x)
    assert lowest_ktypes_o(y) == (OKType.of(1, 3, (), (0,), 1, -1),)


def test_lkt_sp_spherical_split():
    base = SpParams((), PositiveSystem.of(SpKind(0), ()), (1,), (GENERIC_B,), (), ())
    plus = SpParams(
        (), PositiveSystem.of(SpKind(0), ()), (1,), (GENERIC_B,), (1,), (GENERIC_B,)
    )
    minus = SpParams(
        (), PositiveSystem.of(SpKind(0), ()), (1,), (GENERIC_B,), (-1,), (GENERIC_B,)
    )
    assert lowest_ktypes_sp(base) == (UKType.of((1, -1)),)
    assert lowest_ktypes_sp(plus) == (UKType.of((1, 0, -1)),)
    assert lowest_ktypes_sp(minus) == (UKType.of((1, -1, -1)), UKType.of((1, 1, -1)))


def test_lkt_sp_discrete_series():
    x = parse_sp("pi((2,1),{e1+e2,e1-e2,2e1,2e2},0,0,0,0)")
    assert lowest_ktypes_sp(x) == (UKType.of((3, 3)),)
    y = parse_sp("pi((0),{2e1},0,0,(-1),(1))")
    assert lowest_ktypes_sp(y) == (UKType.of((1, 1)),)
    z = parse_sp("pi((0),{-2e1},0,0,(-1),(1))")
    assert lowest_ktypes_sp(z) == (UKType.of((-1, -1)),)


def test_lkt_tensor_det_flips_signs():
    """pi (x) det has the sign-flipped lowest K-types, which pins down the
    parameter-level det twist."""
    for x in [
        trivial_o(2, 2),
        parse_o("pi_{1}((3;1),1,{e1+f1,e1-f1},0,0,0,0) @ O(2,2)"),
        parse_o("pi_{-1}((1;),1,{},0,0,(1),(0)) @ O(3,1)"),
    ]:
        flipped = {
            OKType.of(t.p, t.q, t.left.entries, t.right.entries, -t.left.sign, -t.right.sign)
            for t in lowest_ktypes_o(x)
        }
        assert set(lowest_ktypes_o(tensor_det_o(x))) == flipped


def test_multiplicity_o31():
    assert multiplicity_o31(OKType.of(3, 1, (1,), (), -1, 1), sign_variant=False) == 1
    assert multiplicity_o31(OKType.of(3, 1, (1,), (), -1, -1), sign_variant=False) == 0
    assert multiplicity_o31(OKType.of(3, 1, (0,), (), -1, -1), sign_variant=False) == 1
    assert multiplicity_o31(OKType.of(3, 1, (1,), (), -1, -1), sign_variant=True) == 1
    assert multiplicity_o31(OKType.of(3, 1, (0,), (), 1, -1), sign_variant=True) == 0
    with pytest.raises(ValueError):
        multiplicity_o31(OKType.of(2, 2, (0,), (0,), 1, 1), sign_variant=False)
