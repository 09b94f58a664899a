"""Langlands-style parameters for Sp(2n,R) and O(p,q) with p+q even.

An Sp parameter pi(lam, Psi, mu, nu, eps, kappa) carries a discrete part
(lam, Psi) on Sp(2v), relative discrete series data (mu_i, nu_i) on GL(2)
factors, and spherical principal-series data (eps_i, kappa_i) on GL(1)
factors, with n = v + 2s + t.  An O parameter pi_zeta(lam, xi, Psi, mu,
nu, eps, kappa) additionally carries the two sign characters zeta, xi,
with p = 2a + 2s + t and q = 2d + 2s + t.

Equivalence permutes the (mu,nu) and (eps,kappa) pairs and changes signs
of individual nu_i, kappa_i; on the O side it also flips signs of Psi on
zero coordinates of lam (the disconnected part of the maximal compact
acting on the discrete datum).  canonicalize_* picks the unique
representative used for equality tests throughout.
"""

from __future__ import annotations

import itertools
import re as _regex

from dataclasses import dataclass, replace
from typing import Iterable, Union

from .exact import InfChar, Scalar, parse_scalar
from .roots import (
    OKind,
    PositiveSystem,
    SpKind,
    check_dominance_f1,
    contains_delta_c_plus,
    is_positive_system,
    parse_psi,
)


class ParamError(ValueError):
    pass


def _check_signs(seq: Iterable[int], what: str) -> None:
    for x in seq:
        if x not in (1, -1):
            raise ParamError(f"{what} entries must be +-1, got {x}")


def _block_multiplicities_ok(values: list[int], mirror: list[int]) -> bool:
    for v in set(values) | set(mirror):
        if v > 0 and abs(values.count(v) - mirror.count(v)) > 1:
            return False
    return True


@dataclass(frozen=True)
class SpParams:
    lam: tuple[int, ...]
    psi: PositiveSystem
    mu: tuple[int, ...]
    nu: tuple[Scalar, ...]
    eps: tuple[int, ...]
    kappa: tuple[Scalar, ...]

    @property
    def v(self) -> int:
        return len(self.lam)

    @property
    def s(self) -> int:
        return len(self.mu)

    @property
    def t(self) -> int:
        return len(self.eps)

    @property
    def n(self) -> int:
        return self.v + 2 * self.s + self.t


@dataclass(frozen=True)
class OParams:
    zeta: int
    xi: int
    lam_left: tuple[int, ...]
    lam_right: tuple[int, ...]
    psi: PositiveSystem
    mu: tuple[int, ...]
    nu: tuple[Scalar, ...]
    eps: tuple[int, ...]
    kappa: tuple[Scalar, ...]

    @property
    def a(self) -> int:
        return len(self.lam_left)

    @property
    def d(self) -> int:
        return len(self.lam_right)

    @property
    def s(self) -> int:
        return len(self.mu)

    @property
    def t(self) -> int:
        return len(self.eps)

    @property
    def p(self) -> int:
        return 2 * self.a + 2 * self.s + self.t

    @property
    def q(self) -> int:
        return 2 * self.d + 2 * self.s + self.t

    @property
    def zeros(self) -> int:
        """z + z': total zero entries of the discrete datum."""
        return self.lam_left.count(0) + self.lam_right.count(0)


Params = Union[SpParams, OParams]


# -- validation --------------------------------------------------------------


def _validate_continuous(params: Params, sp_side: bool) -> None:
    if len(params.mu) != len(params.nu):
        raise ParamError("mu and nu must have equal length")
    if len(params.eps) != len(params.kappa):
        raise ParamError("eps and kappa must have equal length")
    _check_signs(params.eps, "eps")
    for m in params.mu:
        if not isinstance(m, int) or m < 0:
            raise ParamError(f"mu entries must be nonnegative integers, got {m}")
    for m, nu in zip(params.mu, params.nu):
        if nu.is_zero and m % 2 == 0:
            raise ParamError(f"(mu,nu)=({m},0) needs mu odd")
    for (i, ki), (j, kj) in itertools.combinations(enumerate(params.kappa), 2):
        if (ki == kj or ki == -kj) and params.eps[i] != params.eps[j]:
            raise ParamError(f"kappa_{i+1} = +-kappa_{j+1} forces equal eps")
    if sp_side:
        forced = (-1) ** len(params.lam)
        for i, ki in enumerate(params.kappa):
            if ki.is_zero and params.eps[i] != forced:
                raise ParamError(f"kappa_{i+1}=0 forces eps=(-1)^v={forced}")


def validate_sp(params: SpParams) -> None:
    lam = params.lam
    if any(not isinstance(x, int) for x in lam):
        raise ParamError("lam entries must be integers")
    if list(lam) != sorted(lam, reverse=True):
        raise ParamError(f"lam must be weakly decreasing: {lam}")
    pos = [x for x in lam if x > 0]
    neg = [-x for x in lam if x < 0]
    if not _block_multiplicities_ok(pos, neg):
        raise ParamError(f"lam block multiplicities differ by more than 1: {lam}")
    if params.psi.kind != SpKind(len(lam)):
        raise ParamError("Psi must live in Sp(2v)")
    if not is_positive_system(params.psi.kind, params.psi.roots):
        raise ParamError("Psi is not a positive system")
    if not contains_delta_c_plus(params.psi):
        raise ParamError("Psi must contain the compact positives")
    if not check_dominance_f1(lam, params.psi):
        raise ParamError(f"lam={lam} is not (F-1)-dominant for Psi={params.psi.render()}")
    _validate_continuous(params, sp_side=True)


def validate_o(params: OParams) -> None:
    left, right = params.lam_left, params.lam_right
    for half in (left, right):
        if any(not isinstance(x, int) or x < 0 for x in half):
            raise ParamError("lam halves must be nonnegative integers")
        if list(half) != sorted(half, reverse=True):
            raise ParamError(f"lam halves must be weakly decreasing: {half}")
    if not _block_multiplicities_ok([x for x in left if x > 0], [x for x in right if x > 0]):
        raise ParamError("lam halves have block multiplicities differing by more than 1")
    if abs(left.count(0) - right.count(0)) > 1:
        raise ParamError("zero blocks of the lam halves differ by more than 1")
    if params.psi.kind != OKind(len(left), len(right)):
        raise ParamError("Psi must live in O(2a,2d)")
    if not is_positive_system(params.psi.kind, params.psi.roots):
        raise ParamError("Psi is not a positive system")
    if not contains_delta_c_plus(params.psi):
        raise ParamError("Psi must contain the compact positives")
    if not check_dominance_f1(left + right, params.psi):
        raise ParamError("lam is not (F-1)-dominant for Psi")
    if params.xi not in (1, -1) or params.zeta not in (1, -1):
        raise ParamError("zeta and xi must be +-1")
    if params.xi == -1 and params.zeros == 0:
        raise ParamError("xi=-1 requires a zero entry in lam")
    if params.zeta == -1:
        if params.zeros > 0:
            raise ParamError("zeta=-1 requires lam without zero entries")
        if not any(k.is_zero for k in params.kappa):
            raise ParamError("zeta=-1 requires some kappa=0")
    _validate_continuous(params, sp_side=False)


# -- canonical form ----------------------------------------------------------


def _canonical_pairs(params: Params) -> dict:
    mn = sorted(
        ((m, nu.normalized_sign()) for m, nu in zip(params.mu, params.nu)),
        key=lambda p: (p[0], p[1].sort_key()),
    )
    ek = sorted(
        ((e, k.normalized_sign()) for e, k in zip(params.eps, params.kappa)),
        key=lambda p: (p[1].sort_key(), p[0]),
    )
    return dict(
        mu=tuple(m for m, _ in mn),
        nu=tuple(nu for _, nu in mn),
        eps=tuple(e for e, _ in ek),
        kappa=tuple(k for _, k in ek),
    )


def canonicalize_sp(params: SpParams) -> SpParams:
    return replace(params, **_canonical_pairs(params))


def _zero_flip_orbit(params: OParams) -> PositiveSystem:
    """Minimal representative of Psi under sign flips of zero coordinates."""
    flip_slots = [i for i, x in enumerate(params.lam_left) if x == 0]
    flip_slots += [params.a + j for j, x in enumerate(params.lam_right) if x == 0]
    best = None
    for rsub in range(1 << len(flip_slots)):
        chosen = {flip_slots[i] for i in range(len(flip_slots)) if rsub >> i & 1}
        roots = tuple(
            tuple(-c if i in chosen else c for i, c in enumerate(r))
            for r in params.psi.roots
        )
        cand = PositiveSystem.of(params.psi.kind, roots)
        if best is None or cand.roots < best.roots:
            best = cand
    return best if best is not None else params.psi


def canonicalize_o(params: OParams) -> OParams:
    return replace(params, psi=_zero_flip_orbit(params), **_canonical_pairs(params))


def canonicalize(params: Params) -> Params:
    if isinstance(params, SpParams):
        return canonicalize_sp(params)
    return canonicalize_o(params)


def params_equal(x: Params, y: Params) -> bool:
    return canonicalize(x) == canonicalize(y)


# -- infinitesimal characters ------------------------------------------------


def _pair_entries(params: Params) -> list[Scalar]:
    out = []
    for m, nu in zip(params.mu, params.nu):
        out.append((nu + m).half())
        out.append((nu - m).half())
    return out


def infchar_sp(params: SpParams) -> InfChar:
    entries = [Scalar.of(x) for x in params.lam]
    entries += _pair_entries(params)
    entries += list(params.kappa)
    return InfChar.of(entries)


def infchar_o(params: OParams) -> InfChar:
    entries = [Scalar.of(x) for x in params.lam_left + params.lam_right]
    entries += _pair_entries(params)
    entries += list(params.kappa)
    return InfChar.of(entries)


# -- structural maps ---------------------------------------------------------


def contragredient_sp(params: SpParams) -> SpParams:
    """The contragredient: negate-and-reverse the discrete datum and push
    Psi through e_i -> -e_{v+1-i}; the continuous data is unchanged up to
    the usual sign equivalences."""
    v = len(params.lam)
    lam = tuple(-x for x in reversed(params.lam))
    roots = tuple(tuple(-r[v - 1 - i] for i in range(v)) for r in params.psi.roots)
    return canonicalize_sp(
        replace(params, lam=lam, psi=PositiveSystem.of(params.psi.kind, roots))
    )


def swap_pq(params: OParams) -> OParams:
    """The parameter of the same representation seen through O(p,q) ~ O(q,p)."""
    a, d = params.a, params.d
    roots = tuple(r[a:] + r[:a] for r in params.psi.roots)
    return canonicalize_o(
        replace(
            params,
            lam_left=params.lam_right,
            lam_right=params.lam_left,
            psi=PositiveSystem.of(OKind(d, a), roots),
        )
    )


def tensor_det_o(params: OParams) -> OParams:
    """Parameters of pi (x) det.

    Derived from the lowest K-type behaviour: a zero entry in the discrete
    datum flips xi; otherwise a kappa=0 slot flips zeta; otherwise the
    parameters are fixed.
    """
    if params.zeros > 0:
        return canonicalize_o(replace(params, xi=-params.xi))
    if any(k.is_zero for k in params.kappa):
        return canonicalize_o(replace(params, zeta=-params.zeta))
    return canonicalize_o(params)


# -- distinguished parameters ------------------------------------------------


def trivial_o(p: int, q: int) -> OParams:
    return _one_dim_o(p, q, det=False)


def det_o(p: int, q: int) -> OParams:
    return _one_dim_o(p, q, det=True)


def _one_dim_o(p: int, q: int, det: bool) -> OParams:
    if (p, q) == (4, 0) or (p, q) == (0, 4):
        base = OParams(
            zeta=1,
            xi=-1 if det else 1,
            lam_left=(1, 0),
            lam_right=(),
            psi=parse_psi("{e1+e2,e1-e2}", OKind(2, 0)),
            mu=(),
            nu=(),
            eps=(),
            kappa=(),
        )
        return swap_pq(base) if (p, q) == (0, 4) else canonicalize_o(base)
    if (p, q) == (3, 1) or (p, q) == (1, 3):
        base = OParams(
            zeta=1,
            xi=-1 if det else 1,
            lam_left=(0,),
            lam_right=(),
            psi=PositiveSystem.of(OKind(1, 0), ()),
            mu=(),
            nu=(),
            eps=(1,),
            kappa=(Scalar.of(1),),
        )
        return swap_pq(base) if (p, q) == (1, 3) else canonicalize_o(base)
    if (p, q) == (2, 2):
        return canonicalize_o(
            OParams(
                zeta=-1 if det else 1,
                xi=1,
                lam_left=(),
                lam_right=(),
                psi=PositiveSystem.of(OKind(0, 0), ()),
                mu=(),
                nu=(),
                eps=(1, 1),
                kappa=(Scalar.of(0), Scalar.of(1)),
            )
        )
    raise ParamError(f"one-dimensional parameters implemented for p+q=4 only, got ({p},{q})")


# -- text format -------------------------------------------------------------


def _split_top(s: str) -> list[str]:
    parts, depth, buf = [], 0, []
    for ch in s:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(buf))
            buf = []
        else:
            buf.append(ch)
    parts.append("".join(buf))
    return [p.strip() for p in parts]


def _render_ints(xs: tuple[int, ...]) -> str:
    return "0" if not xs else "(" + ",".join(str(x) for x in xs) + ")"


def _render_scalars(xs: tuple[Scalar, ...]) -> str:
    return "0" if not xs else "(" + ",".join(x.render() for x in xs) + ")"


def _parse_ints(text: str) -> tuple[int, ...]:
    s = text.strip()
    if s == "0":
        return ()
    if not (s.startswith("(") and s.endswith(")")):
        raise ParamError(f"bad integer tuple {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    return tuple(int(t) for t in _split_top(body))


def _parse_scalars(text: str) -> tuple[Scalar, ...]:
    s = text.strip()
    if s == "0":
        return ()
    if not (s.startswith("(") and s.endswith(")")):
        raise ParamError(f"bad scalar tuple {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    return tuple(parse_scalar(t) for t in _split_top(body))


def render_sp(params: SpParams) -> str:
    fields = [
        _render_ints(params.lam),
        params.psi.render(),
        _render_ints(params.mu),
        _render_scalars(params.nu),
        _render_ints(params.eps),
        _render_scalars(params.kappa),
    ]
    return "pi(" + ",".join(fields) + ")"


def render_o(params: OParams) -> str:
    if not params.lam_left and not params.lam_right:
        lam = "0"
    else:
        lam = (
            "("
            + ",".join(str(x) for x in params.lam_left)
            + ";"
            + ",".join(str(x) for x in params.lam_right)
            + ")"
        )
    fields = [
        lam,
        str(params.xi),
        params.psi.render(),
        _render_ints(params.mu),
        _render_scalars(params.nu),
        _render_ints(params.eps),
        _render_scalars(params.kappa),
    ]
    return f"pi_{{{params.zeta}}}(" + ",".join(fields) + f") @ O({params.p},{params.q})"


def render_params(params: Params) -> str:
    return render_sp(params) if isinstance(params, SpParams) else render_o(params)


_SP_RE = _regex.compile(r"pi\((.*)\)\s*$")
_O_RE = _regex.compile(r"pi_\{(-?1)\}\((.*?)\)\s*(?:@\s*O\((\d+),(\d+)\))?\s*$")


def parse_sp(text: str) -> SpParams:
    m = _SP_RE.fullmatch(text.strip())
    if not m:
        raise ParamError(f"bad Sp parameter text {text!r}")
    fields = _split_top(m.group(1))
    if len(fields) != 6:
        raise ParamError(f"Sp parameters need 6 fields, got {len(fields)}")
    lam = _parse_ints(fields[0])
    kind = SpKind(len(lam))
    params = SpParams(
        lam=lam,
        psi=parse_psi(fields[1], kind),
        mu=_parse_ints(fields[2]),
        nu=_parse_scalars(fields[3]),
        eps=_parse_ints(fields[4]),
        kappa=_parse_scalars(fields[5]),
    )
    validate_sp(params)
    return canonicalize_sp(params)


def parse_o(text: str) -> OParams:
    m = _O_RE.fullmatch(text.strip())
    if not m:
        raise ParamError(f"bad O parameter text {text!r}")
    zeta = int(m.group(1))
    fields = _split_top(m.group(2))
    if len(fields) != 7:
        raise ParamError(f"O parameters need 7 fields, got {len(fields)}")
    lam_text = fields[0].strip()
    if lam_text == "0":
        left: tuple[int, ...] = ()
        right: tuple[int, ...] = ()
    else:
        if not (lam_text.startswith("(") and lam_text.endswith(")") and ";" in lam_text):
            raise ParamError(f"bad O discrete datum {lam_text!r}")
        lbody, rbody = lam_text[1:-1].split(";")
        left = tuple(int(t) for t in _split_top(lbody)) if lbody.strip() else ()
        right = tuple(int(t) for t in _split_top(rbody)) if rbody.strip() else ()
    xi = int(fields[1])
    params = OParams(
        zeta=zeta,
        xi=xi,
        lam_left=left,
        lam_right=right,
        psi=parse_psi(fields[2], OKind(len(left), len(right))),
        mu=_parse_ints(fields[3]),
        nu=_parse_scalars(fields[4]),
        eps=_parse_ints(fields[5]),
        kappa=_parse_scalars(fields[6]),
    )
    validate_o(params)
    if m.group(3) is not None and (int(m.group(3)), int(m.group(4))) != (params.p, params.q):
        raise ParamError(
            f"declared signature O({m.group(3)},{m.group(4)}) does not match "
            f"O({params.p},{params.q})"
        )
    return canonicalize_o(params)


def parse_params(text: str) -> Params:
    s = text.strip()
    if s.startswith("pi_"):
        return parse_o(s)
    return parse_sp(s)
