"""Command-line front end.

Exit codes: 0 success, 1 a check came out false (not a design, conjecture
mismatch, empty design), 2 usage error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import config
from .closed_forms import (
    lifted_hamming_wd_formula,
    lifted_rm1_wd_formula,
    lifted_rm_m2_wd_formula,
    lifted_simplex_wd_formula,
)
from .code import min_distance, weight_distribution
from .designs import (
    assmus_mattson,
    conjecture_rm1,
    max_strength,
    open_lambda_sweep,
    supports,
    verify_design,
)
from .errors import BudgetExceeded, EmptyDesignError, LiftlabError
from .families import FAMILIES, family_code
from .field import field_of_order, make_tower
from .lifting import lift, rank_spectrum_wd

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

BUDGET_ENV = "LIFTLAB_BUDGET"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _common(p):
    p.add_argument("--budget", type=_positive, default=None,
                   help=f"max codewords or selectors enumerated (env {BUDGET_ENV})")
    p.add_argument("--subset-budget", type=_positive, default=None,
                   help="max t-subsets examined by a design check")
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")


def _code_flags(p, families=FAMILIES, default="simplex"):
    p.add_argument("--family", choices=families, default=default)
    p.add_argument("--q", type=_positive, default=2)
    p.add_argument("--m", type=_positive, default=3)
    p.add_argument("--lift", type=_positive, default=1, help="extension degree ell")
    p.add_argument("--order", type=int, default=1, help="Reed-Muller order r")
    p.add_argument("--h", type=_positive, default=1, help="projective Reed-Muller degree")


def build_parser():
    parser = _Parser(prog="liftlab", description="Lifted linear codes, weight distributions and support designs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("field", help="canonical field and optional tower")
    p.add_argument("--q", type=_positive, required=True)
    p.add_argument("--lift", type=_positive, default=1)
    _common(p)

    p = sub.add_parser("code", help="construct a code and report its parameters")
    _code_flags(p)
    _common(p)

    p = sub.add_parser("weights", help="weight distribution")
    _code_flags(p)
    p.add_argument("--method", choices=("direct", "selector", "formula"), default="direct")
    _common(p)

    p = sub.add_parser("design", help="verify the support design at one weight")
    _code_flags(p)
    p.add_argument("--weight", type=_positive, required=True)
    p.add_argument("--t", type=_positive, default=None, help="strength; omitted means the largest that holds")
    _common(p)

    p = sub.add_parser("am", help="Assmus-Mattson applicability")
    _code_flags(p)
    p.add_argument("--t", type=_positive, default=2)
    _common(p)

    p = sub.add_parser("conjecture", help="check the 3-design conjecture for lifted RM(1, m)")
    p.add_argument("which", choices=("rm1",))
    p.add_argument("--m", type=_positive, default=4)
    _common(p)

    p = sub.add_parser("table", help="lambda for every weight of a lifted code")
    _code_flags(p, families=("simplex", "hamming", "rm"))
    p.add_argument("--t", type=_positive, default=2)
    _common(p)
    return parser


# -- report assembly -------------------------------------------------------------

def _budget_block(args):
    return {
        "enumeration": config.resolve_budget(args.budget),
        "subset": config.resolve_subset_budget(args.subset_budget),
    }


def _build(args):
    """The (possibly lifted) code named by the flags, plus its description block."""
    base = family_code(args.family, args.q, args.m, args.order, args.h)
    info = {"family": args.family, "q": args.q, "m": args.m, "lift": args.lift}
    if args.family == "rm":
        info["order"] = args.order
    if args.family == "prm":
        info["h"] = args.h
    if args.lift > 1:
        L = lift(base, args.lift)
        info["modulus"] = list(L.tower.top.modulus)
        info["base_modulus"] = list(base.field.modulus)
        return base, L, L.code, info
    info["modulus"] = list(base.field.modulus)
    return base, None, base, info


def _weights_pairs(W):
    return [[w, a] for w, a in W.terms()]


def cmd_field(args):
    F = field_of_order(args.q)
    report = {"field": {"q": F.order, "p": F.p, "e": F.e, "modulus": list(F.modulus), "primitive": F.primitive}}
    if args.lift > 1:
        T = make_tower(F, args.lift)
        report["tower"] = {
            "lift": args.lift,
            "order": T.top.order,
            "modulus": list(T.top.modulus),
            "primitive": T.top.primitive,
            "embedding": [int(x) for x in T.embed_table],
            "basis": [int(x) for x in T.basis],
        }
    return EXIT_OK, report


def cmd_code(args):
    _, _, C, info = _build(args)
    info.update(n=C.n, k=C.k, d=min_distance(C, args.budget, args.workers))
    return EXIT_OK, {"code": info, "budget": _budget_block(args)}


def _formula(args):
    q, m, ell = args.q, args.m, args.lift
    if args.family in ("simplex", "simplex_trace"):
        return lifted_simplex_wd_formula(q, m, ell)
    if args.family == "hamming":
        return lifted_hamming_wd_formula(q, m, ell)
    if args.family == "rm" and args.order == 1:
        return lifted_rm1_wd_formula(m, ell)
    if args.family == "rm" and args.order == m - 2:
        return lifted_rm_m2_wd_formula(m, ell)
    raise UsageError(f"no closed form for family {args.family!r} with these parameters")


def cmd_weights(args):
    base, L, C, info = _build(args)
    if args.method == "formula":
        W = _formula(args)
    elif args.method == "selector":
        W = rank_spectrum_wd(L if L is not None else lift(base, 1), args.budget, args.workers)
    else:
        W = weight_distribution(C, "direct", args.budget, args.workers)
    info.update(n=C.n, k=C.k, d=W.min_weight)
    return EXIT_OK, {"code": info, "weights": _weights_pairs(W), "method": args.method,
                     "budget": _budget_block(args)}


def cmd_design(args):
    _, _, C, info = _build(args)
    info.update(n=C.n, k=C.k)
    report = {"code": info, "budget": _budget_block(args)}
    try:
        D = supports(C, args.weight, args.budget, args.workers)
    except EmptyDesignError:
        report["design"] = {"t": args.t, "v": C.n, "k": args.weight, "lambda": None, "b": 0, "status": "empty"}
        return EXIT_FALSE, report
    if args.t is None:
        t, _ = max_strength(D, args.subset_budget)
        if t == 0:
            cert = verify_design(D, 1, args.subset_budget)
        else:
            cert = verify_design(D, t, args.subset_budget)
    else:
        cert = verify_design(D, args.t, args.subset_budget)
    report["design"] = cert.as_dict()
    if cert.witness is not None:
        report["design"]["witness"] = [[list(s), c] for s, c in cert.witness]
    return (EXIT_OK if cert.is_design else EXIT_FALSE), report


def cmd_am(args):
    _, _, C, info = _build(args)
    info.update(n=C.n, k=C.k)
    rep = assmus_mattson(C, args.t, args.budget, args.workers)
    info["d"] = rep.d
    return EXIT_OK, {"code": info, "am": rep.as_dict(), "budget": _budget_block(args)}


def cmd_conjecture(args):
    rep = conjecture_rm1(args.m, args.budget, args.subset_budget, args.workers)
    C = lift(family_code("rm", 2, args.m, 1), 2)
    info = {
        "family": "rm", "q": 2, "m": args.m, "lift": 2, "order": 1,
        "n": C.n, "k": C.k,
        "modulus": list(C.tower.top.modulus), "base_modulus": list(C.base.field.modulus),
    }
    body = rep.as_dict()
    report = {"code": info, "conjecture": body, "design": body.pop("design"), "budget": _budget_block(args)}
    return (EXIT_OK if rep.agree else EXIT_FALSE), report


_TABLE_FAMILIES = {"simplex": "lifted_simplex", "hamming": "lifted_hamming", "rm": "lifted_rm1"}


def cmd_table(args):
    if args.family == "rm" and args.order != 1:
        raise UsageError("table supports RM(1, m) only")
    _, L, C, info = _build(args)
    W = weight_distribution(C, "auto", args.budget, args.workers)
    info.update(n=C.n, k=C.k, d=W.min_weight)
    params = (args.m, args.lift) if args.family == "rm" else (args.q, args.m, args.lift)
    certs = open_lambda_sweep(_TABLE_FAMILIES[args.family], params, args.t, args.budget,
                              args.subset_budget, args.workers)
    rows = [dict(weight=w, count=W[w], **certs[w].as_dict()) for w in sorted(certs)]
    return EXIT_OK, {"code": info, "table": rows, "budget": _budget_block(args)}


COMMANDS = {
    "field": cmd_field,
    "code": cmd_code,
    "weights": cmd_weights,
    "design": cmd_design,
    "am": cmd_am,
    "conjecture": cmd_conjecture,
    "table": cmd_table,
}


# -- rendering -------------------------------------------------------------------

def render_json(report):
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def render_csv(report):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if "weights" in report:
        writer.writerow(["weight", "count"])
        writer.writerows(report["weights"])
    elif "table" in report:
        cols = ["weight", "count", "t", "v", "k", "lambda", "b", "status"]
        writer.writerow(cols)
        for row in report["table"]:
            writer.writerow(["" if row[c] is None else row[c] for c in cols])
    elif "design" in report:
        cols = ["t", "v", "k", "lambda", "b", "status"]
        writer.writerow(cols)
        writer.writerow(["" if report["design"][c] is None else report["design"][c] for c in cols])
    else:
        raise UsageError("csv output is available for weights, design, conjecture and table")
    return buf.getvalue()


def _text_value(v):
    if isinstance(v, list):
        return " ".join(_text_value(x) for x in v) if v else "-"
    return "-" if v is None else str(v)


def render_text(report):
    lines = []
    for section in sorted(report):
        body = report[section]
        if section == "weights":
            lines.append("weights: " + " + ".join(f"{c}z^{w}" if w else str(c) for w, c in body))
        elif section == "table":
            lines.append("table:")
            for row in body:
                lam = "-" if row["lambda"] is None else row["lambda"]
                lines.append(f"  A_{row['weight']} = {row['count']}: {row['t']}-({row['v']}, {row['k']}, {lam}) "
                             f"b={row['b']} {row['status']}")
        elif isinstance(body, dict):
            lines.append(f"{section}: " + ", ".join(f"{k}={_text_value(body[k])}" for k in sorted(body)))
        else:
            lines.append(f"{section}: {_text_value(body)}")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": render_json, "csv": render_csv, "text": render_text}


def run(argv=None, stdout=None, stderr=None):
    """Parse ``argv``, execute the command and write the report; returns the exit code."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        code, report = COMMANDS[args.command](args)
        text = RENDERERS[args.format](report)
    except BudgetExceeded as exc:
        print(f"liftlab: budget exceeded: {exc}", file=stderr)
        return EXIT_BUDGET
    except (UsageError, LiftlabError, ValueError) as exc:
        print(f"liftlab: error: {exc}", file=stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
