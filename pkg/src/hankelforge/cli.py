"""Command-line interface.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import serialize as ser
from .algebra import LaurentPoly
from .forms import adjointness_report, transvect
from .hankel import apply_B, b_as_tensor, factored_solve, matrix_window
from .identities import grid_A, grid_B
from .parser import ParseError, parse_poly
from .sections import HALF, Section
from .symtensor import build_v, section_sigma
from .tensor_rep import DomainError, lowest_weight
from .verify import SUITES, run_suites


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _symbol(text: str) -> LaurentPoly:
    try:
        return parse_poly(text)
    except ParseError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}") from None


def _envelope(s, kind, entries, **extra):
    out = {"s": s, "kind": kind}
    out.update(extra)
    out["entries"] = entries
    return out


def cmd_matrix(args) -> tuple[int, str]:
    window = matrix_window(args.s, _symbol(args.symbol), args.rows, args.cols)
    if args.format == "csv":
        return 0, ser.window_to_csv(window, args.paper_orientation)
    return 0, ser.dumps(ser.window_json(window, args.paper_orientation)) + "\n"


def cmd_apply(args):
    x = _symbol(args.symbol)
    f = _symbol(args.input)
    image = apply_B(args.s, x, Section(HALF, f))
    return 0, ser.dumps(_envelope(args.s, "apply", ser.poly_json(image.coeff), text=str(image.coeff))) + "\n"


def cmd_section(args):
    if args.p is None:
        t, kind = build_v(args.s), "v"
    else:
        t, kind = section_sigma(args.s, args.p), "sigma"
    extra = {} if args.p is None else {"p": args.p}
    return 0, ser.dumps(_envelope(args.s, kind, ser.tensor_entries(t.items()), **extra)) + "\n"


def cmd_lowest(args):
    if args.symbol is None:
        t, kind = lowest_weight(args.s), "lowest_weight"
    else:
        t, kind = b_as_tensor(args.s, _symbol(args.symbol)), "operator_tensor"
    return 0, ser.dumps(_envelope(args.s, kind, ser.tensor_entries(t.items()))) + "\n"


def cmd_transvect(args):
    u = transvect(args.s, _symbol(args.f), _symbol(args.g), start=args.start)
    return 0, ser.dumps(_envelope(args.s, "transvectant", ser.poly_json(u.coeff), text=str(u.coeff))) + "\n"


def cmd_adjoint(args):
    rep = adjointness_report(args.s, args.k_max, start=args.start)
    return (0 if rep.defined else 1), ser.dumps(rep.to_dict()) + "\n"


def cmd_identity(args):
    if args.family == "A":
        results = grid_A(args.max_s, args.k_span)
    else:
        results = grid_B(args.max_s, args.ij_max, "verbatim" if args.verbatim else "corrected")
    lines = []
    failed = False
    for r in results:
        failed |= not r.equal
        lines.append(json.dumps({
            "family": r.family,
            "params": list(r.params),
            "lhs": ser.rational_json(r.lhs),
            "rhs": ser.rational_json(r.rhs),
            "equal": r.equal,
        }))
    return (1 if failed else 0), "\n".join(lines) + "\n"


def cmd_solve_a(args):
    sol = factored_solve(args.s)
    body = _envelope(
        args.s,
        "solve_a",
        [ser.rational_json(v) for v in sol.a],
        after_lower=[ser.rational_json(v) for v in sol.after_lower],
        after_upper=[ser.rational_json(v) for v in sol.after_upper],
    )
    return 0, ser.dumps(body) + "\n"


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [n.strip() for n in args.suite.split(",")]
    try:
        checks = run_suites(names, args.max_s, args.jobs)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    entries = [{"suite": c.suite, "check": c.name, "passed": c.passed, "detail": c.detail} for c in checks]
    ok = all(c.passed for c in checks)
    return (0 if ok else 1), ser.dumps(_envelope(args.max_s, "verify", entries, passed=ok)) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hankelforge", description="Exact higher-order Hankel operators.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    m = sub.add_parser("matrix", help="matrix window of B_{s+1}(x)")
    m.add_argument("--s", type=int, required=True)
    m.add_argument("--symbol", required=True)
    m.add_argument("--rows", type=int, default=6)
    m.add_argument("--cols", type=int, default=5)
    m.add_argument("--format", choices=("json", "csv"), default="json")
    m.add_argument("--paper-orientation", action="store_true", help="print row 0 last (bottom-up)")
    m.set_defaults(func=cmd_matrix)

    a = sub.add_parser("apply", help="apply B_{s+1}(x) to a negative-power half-density")
    a.add_argument("--s", type=int, required=True)
    a.add_argument("--symbol", required=True)
    a.add_argument("--input", required=True, help="e.g. 'z^-2 + 3 z^-1'")
    a.set_defaults(func=cmd_apply)

    c = sub.add_parser("section", help="v_{2s+1}, or the cross-section image of z^p (d/dz)^s")
    c.add_argument("--s", type=int, required=True)
    c.add_argument("--p", type=int)
    c.set_defaults(func=cmd_section)

    lw = sub.add_parser("lowest", help="lowest-weight vector l_s, or B_{s+1}(x) as a tensor")
    lw.add_argument("--s", type=int, required=True)
    lw.add_argument("--symbol")
    lw.set_defaults(func=cmd_lowest)

    t = sub.add_parser("transvect", help="transvectant of two symbols")
    t.add_argument("--s", type=int, required=True)
    t.add_argument("--f", required=True)
    t.add_argument("--g", required=True)
    t.add_argument("--start", type=int, choices=(0, 1), default=0)
    t.set_defaults(func=cmd_transvect)

    ad = sub.add_parser("adjoint", help="proportionality of the two Hankel forms")
    ad.add_argument("--s", type=int, required=True)
    ad.add_argument("--k-max", type=int)
    ad.add_argument("--start", type=int, choices=(0, 1), default=0)
    ad.set_defaults(func=cmd_adjoint)

    i = sub.add_parser("identity", help="check a binomial identity family on a grid (JSON lines)")
    i.add_argument("--family", choices=("A", "B"), required=True)
    i.add_argument("--max-s", type=int, default=8)
    i.add_argument("--k-span", type=int, default=12)
    i.add_argument("--ij-max", type=int, default=12)
    i.add_argument("--verbatim", action="store_true", help="family B with C(s,j) on the right")
    i.set_defaults(func=cmd_identity)

    sa = sub.add_parser("solve-a", help="solve for the coefficients a_j through the Pascal factorisation")
    sa.add_argument("--s", type=int, required=True)
    sa.set_defaults(func=cmd_solve_a)

    v = sub.add_parser("verify", help="run the built-in invariant suites")
    v.add_argument("--suite", default="all", help=f"'all' or comma list of: {', '.join(SUITES)}")
    v.add_argument("--max-s", type=int, default=6)
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)
    return p


def run(argv: Optional[List[str]] = None) -> tuple[int, str, str]:
    """Run one command; returns (exit code, stdout text, stderr text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "k_max", 0) is None:
            args.k_max = 2 * args.s + 9
        for name in ("s", "rows", "cols", "max_s", "p"):
            val = getattr(args, name, None)
            if val is not None and val < 0:
                raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")
        code, out = args.func(args)
        return code, out, ""
    except UsageError as exc:
        return 2, "", str(exc) + "\n"
    except (DomainError, ValueError) as exc:
        return 2, "", f"error: {exc}\n"


def main(argv: Optional[List[str]] = None) -> int:
    code, out, err = run(argv)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
