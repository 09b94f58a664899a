"""Theta lifts for the dual pairs (O(p,q), Sp(2n,R)) with p+q = 4.

The rank-1 and rank-2 lifts, the rank-3 lifts of parameters with first
occurrence 3, and the rank-4 lifts of the determinant characters live in
pattern/template tables under ``tables/``.  Every other rank is reached
through the explicit induction principles: ``induct_n`` raises the
symplectic rank and ``induct_pq`` raises the orthogonal signature, both
feeding the freshly appended (eps, kappa) slots through the modification
rule before canonicalization.

Table grammar.  Each data row reads ``PATTERN => TEMPLATE ; CONDITION``.
Patterns and templates are parameter strings in the ``parse_sp`` /
``parse_o`` grammar whose integer slots may hold affine expressions in the
row variables (``m``, ``l`` integers; ``s1``, ``s2`` signs; ``b``, ``c1``,
``c2`` scalars).  A parameter matches a row when some assignment of the
variables reproduces it up to canonical form and the condition holds.
Conditions are ``&``-separated atoms: ``true``, comparisons ``x=N``,
``x!=N``, ``x>=y``, ``x>y``, class predicates ``x int|even|odd``, set
exclusions ``x notin {a,b}``, and slot exclusions ``pair(s,c)!=(e,k)``.
On a symbolic scalar, equality/class/order atoms are false and the
negative atoms are true, so "generic" means "no special value".
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, replace
from fractions import Fraction as Q
from itertools import permutations
from pathlib import Path
from typing import Iterable, Mapping, Optional

from .exact import InfChar, Scalar, parse_scalar
from .ktypes import UKType
from .langlands import (
    OParams,
    ParamError,
    SpParams,
    _split_top,
    canonicalize_o,
    canonicalize_sp,
    contragredient_sp,
    det_o,
    parse_sp,
    render_o,
    render_sp,
    swap_pq,
    trivial_o,
    validate_o,
    validate_sp,
)
from .roots import OKind, PositiveSystem, SpKind, parse_psi


class TableError(ValueError):
    """A lift table is missing, malformed, or matches ambiguously."""


class ThetaError(ValueError):
    """A lift or induction request falls outside its preconditions."""


# ---------------------------------------------------------------------------
# Affine expressions in one table variable
# ---------------------------------------------------------------------------

_VAR_ORDER = ("c1", "c2", "s1", "s2", "b", "m", "l")
_INT_VARS = frozenset({"m", "l"})
_SIGN_VARS = frozenset({"s1", "s2"})


@dataclass(frozen=True)
class Expr:
    """An affine expression in at most one table variable.

    The expression is stored as a Scalar whose formal part stands in for
    the variable, so evaluating is substituting and solving is linear.
    """

    form: Scalar
    var: Optional[str] = None


def parse_expr(text: str) -> Expr:
    t = text.replace(" ", "")
    var = next((name for name in _VAR_ORDER if name in t), None)
    if var is not None:
        t = t.replace(var, "b")
    return Expr(parse_scalar(t), var)


def expr_eval(expr: Expr, env: Mapping[str, "Scalar | int"]) -> Scalar:
    if expr.var is None:
        return expr.form
    if expr.var not in env:
        raise TableError(f"unbound table variable {expr.var!r}")
    return expr.form.substitute(Scalar.of(env[expr.var]))


def expr_bind(expr: Expr, value: Scalar, env: dict) -> Optional[dict]:
    """Extend env so that expr evaluates to value; None if impossible."""
    if expr.var is None:
        return env if expr.form == value else None
    if expr.var in env:
        return env if expr_eval(expr, env) == value else None
    if expr.form.bim != 0 or expr.form.bre == 0:
        raise TableError(f"cannot solve for {expr.var!r} in {expr.form.render()}")
    sol = (value - Scalar(re=expr.form.re, im=expr.form.im)).scale(Q(1) / expr.form.bre)
    stored: Scalar | int
    if expr.var in _INT_VARS or expr.var in _SIGN_VARS:
        if not sol.is_integer():
            return None
        stored = sol.as_int()
        if expr.var in _SIGN_VARS and stored not in (1, -1):
            return None
    else:
        stored = sol
    out = dict(env)
    out[expr.var] = stored
    return out


# ---------------------------------------------------------------------------
# Parameter patterns
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParamPattern:
    side: str  # "sp" or "o"
    zeta: Optional[int]
    xi: Optional[int]
    lam_left: tuple[Expr, ...]
    lam_right: tuple[Expr, ...]  # empty and unused on the sp side
    psi_text: str
    mu: tuple[Expr, ...]
    nu: tuple[Expr, ...]
    eps: tuple[Expr, ...]
    kappa: tuple[Expr, ...]

    def var_names(self) -> frozenset[str]:
        groups = (self.lam_left, self.lam_right, self.mu, self.nu, self.eps, self.kappa)
        return frozenset(e.var for g in groups for e in g if e.var is not None)


def _parse_expr_list(text: str) -> tuple[Expr, ...]:
    body = text.strip()
    if not body:
        return ()
    return tuple(parse_expr(tok) for tok in _split_top(body))


def _parse_expr_group(text: str) -> tuple[Expr, ...]:
    t = text.strip()
    if t == "0":
        return ()
    if not (t.startswith("(") and t.endswith(")")):
        raise TableError(f"bad tuple slot {text!r}")
    return _parse_expr_list(t[1:-1])


_O_HEAD = re.compile(r"pi_\{(-?1)\}\((.*)\)", re.DOTALL)
_SP_HEAD = re.compile(r"pi\((.*)\)", re.DOTALL)


def parse_param_pattern(text: str) -> ParamPattern:
    s = text.strip()
    m = _O_HEAD.fullmatch(s)
    if m:
        zeta = int(m.group(1))
        fields = _split_top(m.group(2))
        if len(fields) != 7:
            raise TableError(f"orthogonal pattern needs 7 slots: {text!r}")
        lam_text = fields[0].strip()
        if lam_text == "0":
            left: tuple[Expr, ...] = ()
            right: tuple[Expr, ...] = ()
        else:
            if not (lam_text.startswith("(") and lam_text.endswith(")")) or ";" not in lam_text:
                raise TableError(f"bad orthogonal lambda slot {lam_text!r}")
            left_text, right_text = lam_text[1:-1].split(";", 1)
            left, right = _parse_expr_list(left_text), _parse_expr_list(right_text)
        xi = int(fields[1])
        if xi not in (1, -1):
            raise TableError(f"bad xi {fields[1]!r}")
        mu, nu, eps, kappa = (_parse_expr_group(f) for f in fields[3:7])
        return ParamPattern("o", zeta, xi, left, right, fields[2].strip(), mu, nu, eps, kappa)
    m = _SP_HEAD.fullmatch(s)
    if m:
        fields = _split_top(m.group(1))
        if len(fields) != 6:
            raise TableError(f"symplectic pattern needs 6 slots: {text!r}")
        lam = _parse_expr_group(fields[0])
        mu, nu, eps, kappa = (_parse_expr_group(f) for f in fields[2:6])
        return ParamPattern("sp", None, None, lam, (), fields[1].strip(), mu, nu, eps, kappa)
    raise TableError(f"bad parameter pattern {text!r}")


def instantiate_pattern(pat: ParamPattern, env: Mapping[str, "Scalar | int"]):
    """Evaluate a pattern at a variable assignment.

    Returns canonical, validated parameters; raises ParamError when the
    assignment lands outside the valid parameter space.
    """

    def ints(exprs: tuple[Expr, ...]) -> tuple[int, ...]:
        out = []
        for e in exprs:
            val = expr_eval(e, env)
            if not val.is_integer():
                raise ParamError(f"integer slot got {val.render()}")
            out.append(val.as_int())
        return tuple(out)

    def scalars(exprs: tuple[Expr, ...]) -> tuple[Scalar, ...]:
        return tuple(expr_eval(e, env) for e in exprs)

    if pat.side == "sp":
        lam = ints(pat.lam_left)
        psi = parse_psi(pat.psi_text, SpKind(len(lam)))
        params = SpParams(lam, psi, ints(pat.mu), scalars(pat.nu), ints(pat.eps), scalars(pat.kappa))
        validate_sp(params)
        return canonicalize_sp(params)
    left, right = ints(pat.lam_left), ints(pat.lam_right)
    psi = parse_psi(pat.psi_text, OKind(len(left), len(right)))
    params = OParams(
        pat.zeta, pat.xi, left, right, psi, ints(pat.mu), scalars(pat.nu), ints(pat.eps), scalars(pat.kappa)
    )
    validate_o(params)
    return canonicalize_o(params)


def _bind_tuple(exprs: tuple[Expr, ...], values: tuple[Scalar, ...], env: dict) -> Optional[dict]:
    for e, val in zip(exprs, values):
        bound = expr_bind(e, val, env)
        if bound is None:
            return None
        env = bound
    return env


def _bind_pairs(
    envs: list[dict],
    first: tuple[Expr, ...],
    second: tuple[Expr, ...],
    pairs: list[tuple[Scalar, Scalar]],
) -> list[dict]:
    if not first:
        return envs
    out: list[dict] = []
    for env in envs:
        for perm in permutations(range(len(pairs))):
            e2: Optional[dict] = env
            for slot, j in enumerate(perm):
                e2 = expr_bind(first[slot], pairs[j][0], e2)
                if e2 is None:
                    break
                e2 = expr_bind(second[slot], pairs[j][1], e2)
                if e2 is None:
                    break
            if e2 is not None:
                out.append(e2)
    return out


def match_o_pattern(pat: ParamPattern, target: OParams) -> tuple[dict, ...]:
    """All variable assignments under which the pattern reproduces the
    (canonical form of the) target parameter."""
    if pat.side != "o":
        raise TableError("only orthogonal patterns are matched")
    target = canonicalize_o(target)
    if pat.zeta != target.zeta or pat.xi != target.xi:
        return ()
    if (len(pat.lam_left), len(pat.lam_right)) != (target.a, target.d):
        return ()
    if len(pat.mu) != target.s or len(pat.eps) != target.t:
        return ()
    lam_vals = tuple(Scalar.of(x) for x in target.lam_left + target.lam_right)
    base = _bind_tuple(pat.lam_left + pat.lam_right, lam_vals, {})
    if base is None:
        return ()
    envs = [base]
    envs = _bind_pairs(envs, pat.mu, pat.nu, [(Scalar.of(m), v) for m, v in zip(target.mu, target.nu)])
    envs = _bind_pairs(envs, pat.eps, pat.kappa, [(Scalar.of(e), k) for e, k in zip(target.eps, target.kappa)])
    seen: set = set()
    out: list[dict] = []
    for env in envs:
        key = frozenset(env.items())
        if key in seen:
            continue
        seen.add(key)
        try:
            if instantiate_pattern(pat, env) == target:
                out.append(env)
        except ParamError:
            continue
    return tuple(out)


# ---------------------------------------------------------------------------
# Row conditions
# ---------------------------------------------------------------------------

_PAIR_COND = re.compile(r"pair\((\w+),(\w+)\)!=\((-?\d+),(-?\d+)\)")
_NOTIN_COND = re.compile(r"(\w+)\s+notin\s+\{([^{}]*)\}")
_CLASS_COND = re.compile(r"(\w+)\s+(int|even|odd)")
_CMP_COND = re.compile(r"(\w+)\s*(>=|>|!=|=)\s*(-?\w+(?:/\d+)?)")


def _cond_value(name: str, env: Mapping[str, "Scalar | int"]) -> Scalar:
    if name not in env:
        raise TableError(f"condition uses unbound variable {name!r}")
    return Scalar.of(env[name])


def _atom_eval(atom: str, env: Mapping[str, "Scalar | int"]) -> bool:
    if atom == "true":
        return True
    m = _PAIR_COND.fullmatch(atom)
    if m:
        s, c = _cond_value(m.group(1), env), _cond_value(m.group(2), env)
        return not (s == Scalar.of(int(m.group(3))) and c == Scalar.of(int(m.group(4))))
    m = _NOTIN_COND.fullmatch(atom)
    if m:
        val = _cond_value(m.group(1), env)
        return all(val != parse_scalar(tok.strip()) for tok in m.group(2).split(","))
    m = _CLASS_COND.fullmatch(atom)
    if m:
        val = _cond_value(m.group(1), env)
        return {"int": val.is_integer, "even": val.is_even, "odd": val.is_odd}[m.group(2)]()
    m = _CMP_COND.fullmatch(atom)
    if m:
        lhs = _cond_value(m.group(1), env)
        rhs_text = m.group(3)
        rhs = _cond_value(rhs_text, env) if rhs_text in _VAR_ORDER else parse_scalar(rhs_text)
        op = m.group(2)
        if op == "=":
            return lhs == rhs
        if op == "!=":
            return lhs != rhs
        if not (lhs.is_concrete and lhs.im == 0 and rhs.is_concrete and rhs.im == 0):
            return False
        if op == ">=":
            return lhs.as_fraction() >= rhs.as_fraction()
        return lhs.as_fraction() > rhs.as_fraction()
    raise TableError(f"unrecognized condition atom {atom!r}")


def cond_eval(cond: str, env: Mapping[str, "Scalar | int"]) -> bool:
    return all(_atom_eval(atom.strip(), env) for atom in cond.split("&"))


# ---------------------------------------------------------------------------
# Table files
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LiftRow:
    pattern: ParamPattern
    template: ParamPattern
    cond: str
    line: int


@dataclass(frozen=True)
class LktRow:
    pattern: ParamPattern
    lkts: tuple[tuple[Expr, ...], ...]
    cond: str
    line: int


@dataclass(frozen=True)
class TableSet:
    theta1: tuple[LiftRow, ...]
    theta2: tuple[LiftRow, ...]
    theta3: tuple[LiftRow, ...]
    theta4: tuple[LiftRow, ...]
    appendix_c: tuple[LktRow, ...]
    source: str

    def theta(self, n: int) -> tuple[LiftRow, ...]:
        table = {1: self.theta1, 2: self.theta2, 3: self.theta3, 4: self.theta4}.get(n)
        if table is None:
            raise TableError(f"no lift table for rank {n}")
        return table


THETA_FILES = {1: "theta1.tbl", 2: "theta2.tbl", 3: "theta3.tbl", 4: "theta4.tbl"}
APPENDIX_FILE = "appendix_c.tbl"
ENV_TABLE_DIR = "THETALIFT_TABLE_DIR"


def default_table_dir() -> Path:
    env = os.environ.get(ENV_TABLE_DIR)
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "tables"


def _iter_rows(path: Path):
    if not path.is_file():
        raise TableError(f"missing table file {path}")
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _split_row(line: str, where: str) -> tuple[str, str, str]:
    if "=>" not in line:
        raise TableError(f"{where}: row has no '=>'")
    left, right = line.split("=>", 1)
    if ";" not in right:
        raise TableError(f"{where}: row has no condition")
    body, cond = right.rsplit(";", 1)
    return left.strip(), body.strip(), cond.strip()


def _load_lift_file(path: Path) -> tuple[LiftRow, ...]:
    rows = []
    for lineno, line in _iter_rows(path):
        where = f"{path.name}:{lineno}"
        left, body, cond = _split_row(line, where)
        pattern = parse_param_pattern(left)
        template = parse_param_pattern(body)
        if pattern.side != "o" or template.side != "sp":
            raise TableError(f"{where}: lift rows map O patterns to Sp templates")
        rows.append(LiftRow(pattern, template, cond, lineno))
    return tuple(rows)


def _load_lkt_file(path: Path) -> tuple[LktRow, ...]:
    rows = []
    for lineno, line in _iter_rows(path):
        where = f"{path.name}:{lineno}"
        left, body, cond = _split_row(line, where)
        pattern = parse_param_pattern(left)
        if pattern.side != "sp":
            raise TableError(f"{where}: classification rows are Sp patterns")
        if not (body.startswith("{") and body.endswith("}")):
            raise TableError(f"{where}: expected a K-type set in braces")
        lkts = tuple(_parse_expr_group(tok) for tok in _split_top(body[1:-1]))
        if not lkts:
            raise TableError(f"{where}: empty K-type set")
        rows.append(LktRow(pattern, lkts, cond, lineno))
    return tuple(rows)


_CACHE: dict[str, TableSet] = {}


def load_tables(table_dir: "str | Path | None" = None) -> TableSet:
    root = Path(table_dir) if table_dir is not None else default_table_dir()
    key = str(root.resolve())
    if key not in _CACHE:
        lifts = {n: _load_lift_file(root / name) for n, name in THETA_FILES.items()}
        appendix = _load_lkt_file(root / APPENDIX_FILE)
        _CACHE[key] = TableSet(lifts[1], lifts[2], lifts[3], lifts[4], appendix, key)
    return _CACHE[key]


# ---------------------------------------------------------------------------
# Table lookups
# ---------------------------------------------------------------------------


def row_lift(row: LiftRow, pi: OParams) -> Optional[SpParams]:
    """The lift this row assigns to pi, or None when the row does not
    apply.  Distinct bindings of one row must agree."""
    results: set[SpParams] = set()
    for env in match_o_pattern(row.pattern, pi):
        if cond_eval(row.cond, env):
            results.add(instantiate_pattern(row.template, env))
    if not results:
        return None
    if len(results) > 1:
        raise TableError(f"row at line {row.line} produced conflicting lifts for {render_o(pi)}")
    return results.pop()


def matching_rows(rows: Iterable[LiftRow], pi: OParams) -> list[tuple[LiftRow, SpParams]]:
    pi = canonicalize_o(pi)
    out = []
    for row in rows:
        lifted = row_lift(row, pi)
        if lifted is not None:
            out.append((row, lifted))
    return out


def lookup_lift(rows: Iterable[LiftRow], pi: OParams) -> Optional[SpParams]:
    hits = matching_rows(rows, pi)
    if not hits:
        return None
    if len(hits) > 1:
        lines = ", ".join(str(r.line) for r, _ in hits)
        raise TableError(f"{render_o(pi)} matches rows at lines {lines}; rows must be exclusive")
    return hits[0][1]


def instantiate_lkt_row(row: LktRow, beta: Scalar) -> Optional[tuple[SpParams, frozenset]]:
    """The (parameter, lowest-K-type set) a classification row contributes
    at b = beta, or None when its condition excludes beta."""
    env = {"b": beta}
    if not cond_eval(row.cond, env):
        return None
    params = instantiate_pattern(row.pattern, env)
    lkts = frozenset(UKType.of(tuple(expr_eval(e, env).as_int() for e in tup)) for tup in row.lkts)
    return params, lkts


def appendix_rows_at(tables: TableSet, beta: Scalar) -> dict:
    """All classification rows active at b = beta, keyed by canonical
    parameter.  Each valid parameter must appear exactly once."""
    out: dict = {}
    for row in tables.appendix_c:
        hit = instantiate_lkt_row(row, beta)
        if hit is None:
            continue
        params, lkts = hit
        if params in out:
            raise TableError(f"duplicate classification rows for {render_sp(params)} at b={beta.render()}")
        out[params] = lkts
    return out


# ---------------------------------------------------------------------------
# Infinitesimal character duality
# ---------------------------------------------------------------------------


def _remove_entries(chi: InfChar, values: Iterable[int]) -> InfChar:
    entries = list(chi.entries)
    for v in values:
        target = Scalar.of(v).normalized_sign()
        try:
            entries.remove(target)
        except ValueError:
            raise ThetaError("incompatible infinitesimal character") from None
    return InfChar.of(entries)


def dual_infchar(chi: InfChar, m: int, n: int) -> InfChar:
    """The Sp(2n,R) infinitesimal character paired with the O(p,q)-side
    character chi, where m = (p+q)/2."""
    if len(chi.entries) != m:
        raise ThetaError(f"expected {m} entries, got {chi.render()}")
    if m == n:
        return chi
    if m < n:
        return chi.extended(range(1, n - m + 1))
    return _remove_entries(chi, range(0, m - n))


def o_infchar_from_sp(chi: InfChar, m: int, n: int) -> InfChar:
    """Invert dual_infchar: the O-side character paired with a rank-n
    symplectic character chi."""
    if len(chi.entries) != n:
        raise ThetaError(f"expected {n} entries, got {chi.render()}")
    if m == n:
        return chi
    if m > n:
        return chi.extended(range(0, m - n))
    return _remove_entries(chi, range(1, n - m + 1))


# ---------------------------------------------------------------------------
# Modification rule and induction principles
# ---------------------------------------------------------------------------


def apply_modification(params):
    """Resolve (eps, kappa) clashes: while two slots carry opposite signs
    and equal kappa up to sign, remove both and append the continuous pair
    (mu, nu) = (0, 2|kappa|).  Leftmost clash first, to a fixed point."""
    eps, kappa = list(params.eps), list(params.kappa)
    mu, nu = list(params.mu), list(params.nu)
    while True:
        clash = next(
            (
                (i, j)
                for i in range(len(eps))
                for j in range(i + 1, len(eps))
                if eps[i] != eps[j] and (kappa[i] == kappa[j] or kappa[i] == -kappa[j])
            ),
            None,
        )
        if clash is None:
            break
        i, j = clash
        fresh_nu = kappa[i].normalized_sign().scale(2)
        for idx in (j, i):
            del eps[idx]
            del kappa[idx]
        mu.append(0)
        nu.append(fresh_nu)
    return replace(params, mu=tuple(mu), nu=tuple(nu), eps=tuple(eps), kappa=tuple(kappa))


def cond_lambda(lam: tuple[int, ...], psi: PositiveSystem, half_diff: int) -> bool:
    """Whether the discrete datum (lam, psi) admits the rank-raising
    induction toward a signature with (p-q)/2 = half_diff."""
    k = sum(1 for x in lam if x > 0)
    neg = sum(1 for x in lam if x < 0)
    z = lam.count(0)
    if half_diff == k - neg:
        return True
    if z == 0:
        return False
    v = len(lam)
    if z == 1:
        root = tuple(2 if i == k else 0 for i in range(v))
    else:
        root = tuple(1 if i in (k, k + z - 1) else 0 for i in range(v))
    if half_diff == k - neg + 1:
        return psi.contains(root)
    if half_diff == k - neg - 1:
        return not psi.contains(root)
    return False


def induct_n(pi_prime: SpParams, p: int, q: int, k: int) -> SpParams:
    """Raise a rank-n lift to rank n+k within the tower over O(p,q)."""
    if k < 1:
        raise ThetaError("induction step k must be >= 1")
    if (p + q) % 2 != 0:
        raise ThetaError("p + q must be even")
    pi_prime = canonicalize_sp(pi_prime)
    n0 = pi_prime.n
    m = (p + q) // 2
    if p + q == 2 * n0 + 2:
        raise ThetaError(f"p+q = 2n+2 = {p + q} is outside the rank-raising range")
    if n0 + 1 <= m <= n0 + k:
        raise ThetaError(f"(p+q)/2 = {m} lies inside the induction window ({n0 + 1}..{n0 + k})")
    if not cond_lambda(pi_prime.lam, pi_prime.psi, (p - q) // 2):
        raise ThetaError("discrete datum does not admit the rank-raising induction")
    sign = 1 if ((p - q) // 2) % 2 == 0 else -1
    eps = pi_prime.eps + (sign,) * k
    kappa = pi_prime.kappa + tuple(Scalar.of(i + n0 - m) for i in range(1, k + 1))
    out = apply_modification(replace(pi_prime, eps=eps, kappa=kappa))
    validate_sp(out)
    return canonicalize_sp(out)


def induct_pq(pi: OParams, n: int, k: int, tables: Optional[TableSet] = None) -> OParams:
    """Raise an O(p,q) parameter to O(p+k, q+k) within the rank-n tower."""
    if k < 1:
        raise ThetaError("induction step k must be >= 1")
    pi = canonicalize_o(pi)
    if pi.zeta != 1 or pi.xi != 1:
        raise ThetaError("signature-raising induction needs zeta = xi = 1")
    m = (pi.p + pi.q) // 2
    if m <= n <= m + k - 1:
        raise ThetaError(f"rank n = {n} lies inside the induction window ({m}..{m + k - 1})")
    if pi.p + pi.q == 4 and n < first_occurrence(pi, tables):
        raise ThetaError(f"rank n = {n} is below the first occurrence")
    has_zero = 0 in pi.lam_left or 0 in pi.lam_right
    has_plus_zero = any(e == 1 and kap.is_zero for e, kap in zip(pi.eps, pi.kappa))
    if not (has_zero or has_plus_zero):
        raise ThetaError("discrete datum does not admit the signature-raising induction")
    eps = pi.eps + (1,) * k
    kappa = pi.kappa + tuple(Scalar.of(n - m - i) for i in range(k))
    out = apply_modification(replace(pi, eps=eps, kappa=kappa))
    validate_o(out)
    return canonicalize_o(out)


# ---------------------------------------------------------------------------
# First occurrence and the lift dispatcher
# ---------------------------------------------------------------------------

_SUPPORTED = ((4, 0), (3, 1), (2, 2))
_SWAPPED = ((0, 4), (1, 3))


def first_occurrence(pi: OParams, tables: Optional[TableSet] = None) -> int:
    """The smallest n with a nonzero rank-n lift (p + q = 4 only)."""
    tables = load_tables() if tables is None else tables
    pi = canonicalize_o(pi)
    if (pi.p, pi.q) in _SWAPPED:
        return first_occurrence(swap_pq(pi), tables)
    if (pi.p, pi.q) not in _SUPPORTED:
        raise ThetaError(f"unsupported signature O({pi.p},{pi.q})")
    if pi == canonicalize_o(trivial_o(pi.p, pi.q)):
        return 0
    if pi == canonicalize_o(det_o(pi.p, pi.q)):
        return 4
    if pi.xi == -1 or (pi.zeta == -1 and any(e == 1 and kap.is_zero for e, kap in zip(pi.eps, pi.kappa))):
        return 3
    if matching_rows(tables.theta1, pi):
        return 1
    return 2


@dataclass(frozen=True)
class ThetaResult:
    """A rank-n lift: parameters when nonzero, plus how they were found."""

    params: Optional[SpParams]
    provenance: str

    @property
    def is_zero(self) -> bool:
        return self.params is None

    def render(self) -> str:
        return "0" if self.params is None else render_sp(self.params)


def theta_n(pi: OParams, n: int, tables: Optional[TableSet] = None) -> ThetaResult:
    """The rank-n lift of an O(p,q) parameter, p + q = 4, any n >= 0."""
    if n < 0:
        raise ThetaError("rank n must be >= 0")
    tables = load_tables() if tables is None else tables
    pi = canonicalize_o(pi)
    if (pi.p, pi.q) in _SWAPPED:
        inner = theta_n(swap_pq(pi), n, tables)
        if inner.is_zero:
            return inner
        return ThetaResult(
            contragredient_sp(inner.params), inner.provenance + " (contragredient via signature swap)"
        )
    if (pi.p, pi.q) not in _SUPPORTED:
        raise ThetaError(f"unsupported signature O({pi.p},{pi.q})")
    n0 = first_occurrence(pi, tables)
    if n < n0:
        return ThetaResult(None, f"zero: rank {n} is below the first occurrence {n0}")
    if n == 0:
        empty = SpParams((), PositiveSystem.of(SpKind(0), ()), (), (), (), ())
        return ThetaResult(canonicalize_sp(empty), "rank-zero lift of the trivial parameter")

    def from_table(rank: int) -> SpParams:
        lifted = lookup_lift(tables.theta(rank), pi)
        if lifted is None:
            raise TableError(f"no rank-{rank} table row matches {render_o(pi)}")
        return lifted

    if n in (1, 2):
        return ThetaResult(from_table(n), f"theta{n} table")
    start = max(n0, 2)
    base = from_table(start)
    provenance = f"theta{start} table"
    if n == start:
        return ThetaResult(base, provenance)
    if n > 4 and start < 4:
        base = induct_n(base, pi.p, pi.q, 4 - start)
        provenance += f" + induct_n(k={4 - start})"
        start = 4
    base = induct_n(base, pi.p, pi.q, n - start)
    return ThetaResult(base, provenance + f" + induct_n(k={n - start})")


# The rank-3 lift of the determinant character in the signature-(1,1)
# tower.  This value pins down the two-candidate ambiguity that appears at
# kappa = 2 in the zeta = -1, eps = (1,1) rank-3 family: the generic table
# row stays correct there, which is why that family carries no special
# case at kappa = 2.
DET11_THETA3: SpParams = parse_sp("pi(0,{},(1),(1),(1),(2))")
