"""Lowest K-types of Sp(2n,R) and O(p,q) representations.

Both computations follow the same pattern: build the A-parameter
lambda_a by merging the discrete datum with mu/2 contributions, shift it
by rho(u cap p) - rho(u cap k) for the theta-stable parabolic determined
by lambda_a, and then enumerate the small corrections delta_L allowed on
each block.  The shift is computed by direct enumeration of the roots
pairing positively with lambda_a; this agrees with the closed block
formulas on the symplectic side and is taken as the definition on the
orthogonal side.

For O(p,q) a lowest K-type also carries a sign on each factor; the sign
assignment depends on zeta, xi and the shape of the continuous data.
"""

from __future__ import annotations

from fractions import Fraction

from .ktypes import OKType, UKType
from .langlands import OParams, SpParams
from .roots import OKind, Root, SpKind, rho_shift


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise AssertionError(f"{what} produced a non-integral entry {x}")
    return int(x)


def _block_values(vec: list[Fraction]) -> list[Fraction]:
    return sorted({abs(x) for x in vec if x != 0}, reverse=True)


def _pos_value_data(entries: tuple[int, ...]) -> tuple[list[int], list[int], list[int]]:
    """Distinct positive magnitudes of the discrete datum with cumulative
    counts of the positive (k-tilde) and negative (l-tilde) entries."""
    vals = sorted({abs(x) for x in entries if x != 0}, reverse=True)
    ktil, ltil, kc, lc = [], [], 0, 0
    for a in vals:
        kc += entries.count(a)
        lc += entries.count(-a)
        ktil.append(kc)
        ltil.append(lc)
    return vals, ktil, ltil


def _pair_root(dim: int, i: int, j: int, ci: int, cj: int) -> Root:
    root = [0] * dim
    root[i] += ci
    root[j] += cj
    return tuple(root)


def lowest_ktypes_sp(params: SpParams) -> tuple[UKType, ...]:
    """Lowest K-types (U(n) highest weights) of a symplectic parameter."""
    lam, mu = params.lam, params.mu
    v, t, n = params.v, params.t, params.n
    kind = SpKind(n)
    half_mus = [Fraction(m, 2) for m in mu]
    lam_a = sorted(
        [Fraction(x) for x in lam] + half_mus + [Fraction(0)] * t + [-h for h in half_mus],
        reverse=True,
    )
    shift = rho_shift(lam_a, kind)
    base = [x + s for x, s in zip(lam_a, shift)]

    alphas = _block_values(lam_a)
    w = lam_a.count(0)
    u = sum(lam_a.count(a) for a in alphas)
    r = sum(lam_a.count(-a) for a in alphas)
    avals, ktil, ltil = _pos_value_data(lam)
    k, z = (ktil[-1] if ktil else 0), lam.count(0)

    delta_options: list[list[Fraction]] = []
    for al in alphas:
        idx = lam_a.index(al) if al in lam_a else lam_a.index(-al)
        if base[idx].denominator == 1:
            delta_options.append([Fraction(0)])
        elif al in avals:
            j = avals.index(al)
            lo = ktil[j - 1] if j > 0 else 0
            root = _pair_root(v, lo, v - ltil[j], 1, 1)
            sign = 1 if params.psi.contains(root) else -1
            delta_options.append([Fraction(sign, 2)])
        else:
            delta_options.append([Fraction(1, 2), Fraction(-1, 2)])

    h = (
        sum(1 for e in params.eps if e == (-1) ** (u - r + 1))
        + sum(1 for m in mu if m == 0)
        + (z + 1) // 2
    )
    assert h <= w, "eta block overflow"
    first = [Fraction(1)] * h + [Fraction(0)] * (w - h)
    second = [Fraction(0)] * (w - h) + [Fraction(-1)] * h
    if z == 0:
        etas = [first] if first == second else [first, second]
    else:
        root = _pair_root(v, k, k + z - 1, 1, 1) if z > 1 else _pair_root(v, k, k, 1, 1)
        etas = [first] if params.psi.contains(root) else [second]

    out = set()
    for combo in _product(delta_options):
        by_value = dict(zip(alphas, combo))
        for eta in etas:
            entries, zi = [], 0
            for val, b in zip(lam_a, base):
                if val != 0:
                    entries.append(b + by_value[abs(val)])
                else:
                    entries.append(b + eta[zi])
                    zi += 1
            out.add(UKType.of(tuple(_as_int(x, "LKT-Sp") for x in entries)))
    return tuple(sorted(out, key=lambda kt: kt.weights))


def _product(options: list[list[Fraction]]):
    if not options:
        yield []
        return
    for head in options[0]:
        for tail in _product(options[1:]):
            yield [head] + tail


def lowest_ktypes_o(params: OParams) -> tuple[OKType, ...]:
    """Lowest K-types (O(p) x O(q) parameters) of an orthogonal parameter."""
    p, q = params.p, params.q
    p0, q0 = p // 2, q // 2
    kind = OKind(p0, q0, odd=p % 2 == 1)
    left_d, right_d = params.lam_left, params.lam_right
    a, d = len(left_d), len(right_d)
    z, z2 = left_d.count(0), right_d.count(0)
    mu = params.mu
    half_mus = [Fraction(m, 2) for m in mu]
    pad = [Fraction(0)] * (params.t // 2)
    lam_a_left = sorted([Fraction(x) for x in left_d] + half_mus + pad, reverse=True)
    lam_a_right = sorted([Fraction(x) for x in right_d] + half_mus + pad, reverse=True)
    vec = lam_a_left + lam_a_right
    shift = rho_shift(vec, kind)
    base = [x + s for x, s in zip(vec, shift)]
    base_left, base_right = base[:p0], base[p0:]

    alphas = _block_values(vec)
    x_zeros, y_zeros = lam_a_left.count(0), lam_a_right.count(0)
    avals, ktil, ltil = _pos_value_data_o(left_d, right_d)

    delta_options: list[list[Fraction]] = []
    for al in alphas:
        if al in lam_a_left:
            bval = base_left[lam_a_left.index(al)]
        else:
            bval = base_right[lam_a_right.index(al)]
        if bval.denominator == 1:
            delta_options.append([Fraction(0)])
        elif al in avals:
            j = avals.index(al)
            root = _pair_root(a + d, ktil[j] - 1, a + ltil[j] - 1, 1, -1)
            sign = 1 if params.psi.contains(root) else -1
            delta_options.append([Fraction(sign, 2)])
        else:
            delta_options.append([Fraction(1, 2), Fraction(-1, 2)])

    beta_count = sum(1 for e in params.eps if e == 1)
    gamma_count = sum(1 for e in params.eps if e == -1)
    h = min(z, z2) + sum(1 for m in mu if m == 0) + min(beta_count, gamma_count)
    form1 = ([Fraction(1)] * h + [Fraction(0)] * (x_zeros - h), [Fraction(0)] * y_zeros)
    form2 = ([Fraction(0)] * x_zeros, [Fraction(1)] * h + [Fraction(0)] * (y_zeros - h))
    if z + z2 == 0:
        assert h <= x_zeros and h <= y_zeros, "eta block overflow"
        eta_forms = [form1] if form1 == form2 else [form1, form2]
    elif a == 0 or d == 0:
        assert h <= y_zeros, "eta block overflow"
        eta_forms = [form2]
    else:
        root = _pair_root(a + d, a - 1, a + d - 1, 1, -1)
        eta_forms = [form1] if params.psi.contains(root) else [form2]
        assert h <= (x_zeros if eta_forms == [form1] else y_zeros), "eta block overflow"

    zero_pairs = any(k.is_zero for k in params.kappa)
    out = set()
    for combo in _product(delta_options):
        by_value = dict(zip(alphas, combo))
        for eta_left, eta_right in eta_forms:
            lft = _assemble_half(lam_a_left, base_left, by_value, eta_left, +1)
            rgt = _assemble_half(lam_a_right, base_right, by_value, eta_right, -1)
            for s1, s2 in _sign_pairs(
                params, z + z2, beta_count, gamma_count, zero_pairs, lft, rgt
            ):
                out.add(OKType.of(p, q, tuple(lft), tuple(rgt), s1, s2))
    return tuple(
        sorted(out, key=lambda kt: (kt.left.entries, kt.left.sign, kt.right.entries, kt.right.sign))
    )


def _pos_value_data_o(
    left: tuple[int, ...], right: tuple[int, ...]
) -> tuple[list[int], list[int], list[int]]:
    vals = sorted({x for x in left + right if x > 0}, reverse=True)
    ktil, ltil, kc, lc = [], [], 0, 0
    for a in vals:
        kc += left.count(a)
        lc += right.count(a)
        ktil.append(kc)
        ltil.append(lc)
    return vals, ktil, ltil


def _assemble_half(
    lam_a_half: list[Fraction],
    base_half: list[Fraction],
    by_value: dict[Fraction, Fraction],
    eta: list[Fraction],
    orient: int,
) -> list[int]:
    entries, zi = [], 0
    for val, b in zip(lam_a_half, base_half):
        if val != 0:
            entries.append(b + orient * by_value[abs(val)])
        else:
            entries.append(b + eta[zi])
            zi += 1
    return [_as_int(x, "LKT-O") for x in entries]


def _sign_pairs(
    params: OParams,
    total_zeros: int,
    beta_count: int,
    gamma_count: int,
    zero_pairs: bool,
    lft: list[int],
    rgt: list[int],
) -> list[tuple[int, int]]:
    zeta, xi = params.zeta, params.xi
    more_left = lft.count(0) > rgt.count(0)
    if total_zeros == 0:
        if not zero_pairs:
            if beta_count >= gamma_count:
                return [(1, 1), (-1, -1)]
            return [(1, -1), (-1, 1)]
        plus_slot = any(
            e == 1 and kp.is_zero for e, kp in zip(params.eps, params.kappa)
        )
        if plus_slot:
            if beta_count >= gamma_count:
                return [(zeta, zeta)]
            return [(zeta, -zeta)] if more_left else [(-zeta, zeta)]
        if beta_count >= gamma_count:
            return [(zeta, zeta)] if more_left else [(-zeta, -zeta)]
        return [(zeta, -zeta)]
    if beta_count >= gamma_count:
        return [(xi, xi)]
    return [(xi, -xi)] if more_left else [(-xi, xi)]


def multiplicity_o31(ktype: OKType, sign_variant: bool) -> int:
    """K-type multiplicity in the two degenerate principal series of O(3,1)
    induced from the parabolic with GL(1) Levi factor.

    The representation space is C-inf of the null cone (plain) or its
    twist by the sign of the defining function (sign variant); the O(3) x
    O(1)-types occurring are exactly (l;-1) (x) (;eta) with eta matching
    (-1)^(l+1), resp. (-1)^l.
    """
    if ktype.left.p != 3 or ktype.right.p != 1:
        raise ValueError("expected an O(3) x O(1) K-type")
    l = ktype.left.entries[0]
    eps, eta = ktype.left.sign, ktype.right.sign
    want = (-1) ** l if sign_variant else (-1) ** (l + 1)
    return 1 if (eps == -1 and eta == want) else 0
