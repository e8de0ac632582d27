"""Command-line interface.

Exit codes: 0 success, 1 internal verification defect, 2 invalid
parameters, 3 well-formed query with a negative answer.

``--format records`` prints one JSON object per line with a fixed key
order; polynomials inside records use the same comma-separated encoding
as plain output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .errors import ConsistencyError, ParameterError
from .polyint import serialize
from .series import gf_coefficient_A
from .trinomial import (
    FamilyPoint,
    build_certificate,
    coeff_A_closed,
    coeff_A_recurrence,
    row_polynomial,
    scan_table,
    solve_k,
    verify_divides,
)

EXIT_OK = 0
EXIT_DEFECT = 1
EXIT_PARAM = 2
EXIT_NEGATIVE = 3

METHODS = ("closed", "recurrence", "gf", "all")


def _p_list(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid p list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reducible-trinomials",
        description="Reducible trinomials x^(2p) - A x^p + 1 = (x^2 - kx + 1) Q(k, p).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("plain", "records"), default="plain")

    p = sub.add_parser("coeff", parents=[fmt], help="print A(k, p)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="recurrence")

    p = sub.add_parser("factor", parents=[fmt], help="print a verified factorization")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("verify", parents=[fmt], help="check x^2 - kx + 1 | x^2p - A x^p + 1")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--A", type=int, required=True)

    p = sub.add_parser("solve", parents=[fmt], help="find k with A(k, p) = A")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--A", type=int, required=True)

    p = sub.add_parser("row", parents=[fmt], help="A(k, p) as a polynomial in k")
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("table", parents=[fmt], help="rows p,k,A for 1 <= k <= kmax")
    p.add_argument("--p", type=_p_list, nargs="+", required=True,
                   help="odd exponents, space- or comma-separated")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--verify-all", action="store_true",
                   help="verify every row by exact division (default: every 16th)")
    p.add_argument("--prime-flag", action="store_true",
                   help="append 1/0 primality of p to plain rows")
    return parser


def _emit(out, fmt: str, plain: str, record: dict) -> None:
    if fmt == "records":
        out.write(json.dumps(record) + "\n")
    else:
        out.write(plain + "\n")


def _cmd_coeff(args, out) -> int:
    pt = FamilyPoint(args.p, args.k)
    routes = {
        "closed": lambda: coeff_A_closed(pt),
        "recurrence": lambda: coeff_A_recurrence(pt),
        "gf": lambda: gf_coefficient_A(pt.k, pt.p),
    }
    if args.method == "all":
        values = {name: f() for name, f in routes.items()}
        if len(set(values.values())) != 1:
            raise ConsistencyError(f"routes disagree: {values}")
        A = values["recurrence"]
    else:
        A = routes[args.method]()
    _emit(out, args.format, str(A), {
        "command": "coeff", "p": pt.p, "k": pt.k, "method": args.method, "A": A,
    })
    return EXIT_OK


def _cmd_factor(args, out) -> int:
    cert = build_certificate(FamilyPoint(args.p, args.k))
    tri, quad, cof = (serialize(f) for f in (cert.trinomial, cert.quadratic, cert.cofactor))
    if args.format == "records":
        _emit(out, "records", "", {
            "command": "factor", "p": cert.point.p, "k": cert.point.k, "A": cert.A,
            "trinomial": tri, "quadratic": quad, "cofactor": cof,
            "verified": cert.verified,
        })
    else:
        out.write(f"{tri}\n{quad}\n{cof}\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    ok = verify_divides(args.A, args.p, args.k)
    _emit(out, args.format, "OK" if ok else "FAIL", {
        "command": "verify", "p": args.p, "k": args.k, "A": args.A, "divides": ok,
    })
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_solve(args, out) -> int:
    k = solve_k(args.A, args.p)
    _emit(out, args.format, "NONE" if k is None else f"k={k}", {
        "command": "solve", "p": args.p, "A": args.A, "k": k,
    })
    return EXIT_NEGATIVE if k is None else EXIT_OK


def _cmd_row(args, out) -> int:
    row = ",".join(str(c) for c in row_polynomial(args.p))
    _emit(out, args.format, row, {"command": "row", "p": args.p, "coeffs": row})
    return EXIT_OK


def _cmd_table(args, out) -> int:
    ps = [p for group in args.p for p in group]
    for row in scan_table(ps, args.kmax, verify_all=args.verify_all):
        plain = f"{row.p},{row.k},{row.A}"
        if args.prime_flag:
            plain += "," + ("" if row.prime is None else str(int(row.prime)))
        _emit(out, args.format, plain, {
            "command": "table", "p": row.p, "k": row.k, "A": row.A,
            "prime": row.prime, "verified": row.verified,
        })
    return EXIT_OK


COMMANDS = {
    "coeff": _cmd_coeff,
    "factor": _cmd_factor,
    "verify": _cmd_verify,
    "solve": _cmd_solve,
    "row": _cmd_row,
    "table": _cmd_table,
}


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except ParameterError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARAM
    except ConsistencyError as e:
        print(f"internal verification failure: {e}", file=sys.stderr)
        return EXIT_DEFECT
