"""Command-line surface: parse the parameter notation, dispatch the lift
and enumeration computations, and emit text or JSON.

Exit codes: 0 on success, 1 when a verification reports a mismatch, when
``lift --expect-nonzero`` meets a zero lift, or when an inverse lookup
finds no preimage; 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction as Q
from typing import Optional, Sequence

from .exact import InfChar, Scalar, parse_scalar
from .enumeration import (
    beta_scalar,
    enumerate_o_reps,
    enumerate_sp_reps,
    verify_tables,
)
from .ktypes import parse_oktype, parse_uktype, phi_n, phi_pq
from .langlands import (
    OParams,
    ParamError,
    SpParams,
    infchar_o,
    infchar_sp,
    parse_o,
    parse_params,
    parse_sp,
    render_o,
    render_params,
    render_sp,
)
from .lkt import lowest_ktypes_o, lowest_ktypes_sp
from .theta import (
    TableError,
    ThetaError,
    first_occurrence,
    load_tables,
    o_infchar_from_sp,
    theta_n,
)


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _cmd_lift(args) -> int:
    tables = load_tables(args.table_dir)
    pi = parse_o(args.params)
    res = theta_n(pi, args.n, tables)
    payload = {
        "input": render_o(pi),
        "n": args.n,
        "zero": res.is_zero,
        "params": None if res.is_zero else render_sp(res.params),
        "provenance": res.provenance,
    }
    _emit(args, payload, res.render())
    if args.expect_nonzero and res.is_zero:
        return 1
    return 0


def _cmd_infchar(args) -> int:
    pi = parse_params(args.params)
    chi = infchar_sp(pi) if isinstance(pi, SpParams) else infchar_o(pi)
    payload = {
        "input": render_params(pi),
        "entries": [x.render() for x in chi.entries],
        "infchar": chi.render(),
    }
    _emit(args, payload, chi.render())
    return 0


def _cmd_lkt(args) -> int:
    pi = parse_params(args.params)
    if isinstance(pi, SpParams):
        lkts = sorted(s.render() for s in lowest_ktypes_sp(pi))
    else:
        lkts = sorted(s.render() for s in lowest_ktypes_o(pi))
    _emit(args, {"input": render_params(pi), "lkts": lkts}, "\n".join(lkts))
    return 0


def _parse_sig(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"signature must be 'p,q', got {text!r}")
    return int(parts[0]), int(parts[1])


def _cmd_phi(args) -> int:
    p, q = _parse_sig(args.sig)
    if (p - q) % 2 != 0:
        raise ValueError("p - q must be even")
    if args.dir == "o2u":
        sigma = parse_oktype(args.ktype, p, q)
        result = phi_n(sigma, p, q, args.n)
        rendered = None if result is None else result.render()
    else:
        prime = parse_uktype(args.ktype)
        if prime.n != args.n:
            raise ValueError(f"U-type has rank {prime.n}, but --n is {args.n}")
        result = phi_pq(prime, p, q)
        rendered = None if result is None else result.render()
    _emit(
        args,
        {"dir": args.dir, "ktype": args.ktype, "sig": [p, q], "n": args.n, "result": rendered},
        "none" if rendered is None else rendered,
    )
    return 0


def _parse_beta(text: str) -> Scalar:
    if text == "generic":
        return beta_scalar("generic")
    return beta_scalar(Q(text))


def _cmd_enumerate(args) -> int:
    entries = [parse_scalar(tok) for tok in args.infchar.split(",")]
    if args.beta is not None:
        b = _parse_beta(args.beta)
        entries = [x.substitute(b) for x in entries]
    chi = InfChar.of(entries)
    reps = enumerate_sp_reps(args.n, chi)
    payload = {
        "n": args.n,
        "infchar": chi.render(),
        "count": len(reps),
        "params": [render_sp(p) for p in reps],
    }
    _emit(args, payload, "\n".join([f"{len(reps)} parameters"] + [render_sp(p) for p in reps]))
    return 0


def _cmd_verify(args) -> int:
    tables = load_tables(args.table_dir)
    report = verify_tables(args.suite, tables)
    if args.json:
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        print(report.render())
    return 0 if report.ok else 1


def _cmd_first_occurrence(args) -> int:
    tables = load_tables(args.table_dir)
    pi = parse_o(args.params)
    n0 = first_occurrence(pi, tables)
    _emit(args, {"input": render_o(pi), "first_occurrence": n0}, str(n0))
    return 0


def _cmd_inverse_lookup(args) -> int:
    tables = load_tables(args.table_dir)
    target = parse_sp(args.sp_params)
    p, q = _parse_sig(args.sig)
    if p + q != 4:
        raise ValueError("inverse lookup supports p + q = 4 signatures")
    n = target.n
    try:
        chi_o = o_infchar_from_sp(infchar_sp(target), (p + q) // 2, n)
    except ThetaError:
        chi_o = None
    preimages = []
    if chi_o is not None:
        for pi in enumerate_o_reps(p, q, chi_o):
            res = theta_n(pi, n, tables)
            if not res.is_zero and res.params == target:
                preimages.append(render_o(pi))
    payload = {
        "target": render_sp(target),
        "sig": [p, q],
        "n": n,
        "preimages": preimages,
    }
    _emit(args, payload, "\n".join(preimages) if preimages else "none")
    return 0 if preimages else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thetalift",
        description="Exact theta lifts for the dual pairs (O(p,q), Sp(2n,R)) with p+q=4.",
    )
    parser.add_argument(
        "--table-dir",
        default=None,
        help="directory with the lift/classification tables "
        "(default: packaged tables, or $THETALIFT_TABLE_DIR)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("lift", help="compute the rank-n lift of an O(p,q) parameter")
    p.add_argument("--params", required=True, help="O-side parameter text")
    p.add_argument("--n", type=int, required=True, help="symplectic rank n")
    p.add_argument(
        "--expect-nonzero", action="store_true", help="exit 1 when the lift is zero"
    )
    add_json(p)
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("infchar", help="print the infinitesimal character of a parameter")
    p.add_argument("--params", required=True, help="Sp- or O-side parameter text")
    add_json(p)
    p.set_defaults(func=_cmd_infchar)

    p = sub.add_parser("lkt", help="print the lowest K-types of a parameter")
    p.add_argument("--params", required=True, help="Sp- or O-side parameter text")
    add_json(p)
    p.set_defaults(func=_cmd_lkt)

    p = sub.add_parser("phi", help="joint-harmonics K-type correspondence")
    p.add_argument("--dir", choices=("o2u", "u2o"), required=True)
    p.add_argument("--ktype", required=True, help="K-type text")
    p.add_argument("--sig", required=True, help="orthogonal signature p,q")
    p.add_argument("--n", type=int, required=True, help="symplectic rank n")
    add_json(p)
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("enumerate", help="enumerate rank-n parameters with an infinitesimal character")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--infchar", required=True, help="comma-separated entries, e.g. 'b,0,1'")
    p.add_argument("--beta", default=None, help="value substituted for b ('generic' keeps it formal)")
    add_json(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "--suite",
        default="all",
        choices=("appendixC", "theta12", "theta3", "theta4", "props", "all"),
    )
    add_json(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("first-occurrence", help="smallest rank with a nonzero lift")
    p.add_argument("--params", required=True, help="O-side parameter text")
    add_json(p)
    p.set_defaults(func=_cmd_first_occurrence)

    p = sub.add_parser("inverse-lookup", help="find O(p,q) parameters lifting to a given Sp parameter")
    p.add_argument("--sp-params", required=True, help="Sp-side parameter text")
    p.add_argument("--sig", required=True, help="orthogonal signature p,q")
    add_json(p)
    p.set_defaults(func=_cmd_inverse_lookup)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (ParamError, ThetaError, TableError, ValueError, ZeroDivisionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
