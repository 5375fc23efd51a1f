"""Command-line interface: ``knotorder {analyze,certify,table,family,ring-demo}``.

Exit codes let scripts branch on the verdict class (see ``EXIT_*``).
"""

import argparse
import json
import sys
from collections import Counter
from dataclasses import dataclass

from . import formats
from .errors import BudgetExceeded, KnotOrderError
from .group_ring import (
    GroupRingElement,
    dlog_table,
    relation_from_vector,
    ring_multiply,
    scalar_action,
)
from .metabolizer import DEFAULT_BUDGET, NO_METABOLIZER, certify
from .obstruction import (
    INFINITE_ORDER,
    ORDER4_CANDIDATE,
    analyze,
    family_independence_certificate,
    independent_family,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_NO_METABOLIZER = 3
EXIT_BUDGET = 4
EXIT_INCONCLUSIVE = 5
EXIT_ORDER4_CANDIDATE = 6
EXIT_CHECK_FAILED = 7


@dataclass
class CommandResult:
    output: str
    exit_code: int
    payload: object = None


def _analysis_dict(a):
    return {
        "name": a.name,
        "alexander": str(a.alexander),
        "alexander_coeffs": list(a.alexander.coeffs),
        "determinant": a.determinant,
        "homology": None if a.homology is None else list(a.homology.invariant_factors),
        "linking": None if a.linking is None else [
            {"prime": f.p, "self_linking": f.c, "square_class": f.square_class}
            for f in a.linking
        ],
        "quadratic_order4": a.quadratic_order4,
        "verdict": a.verdict.kind,
        "witness_prime": a.verdict.prime,
        "factorization": [list(pe) for pe in a.verdict.factorization],
    }


def _analysis_text(a):
    fact = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in a.verdict.factorization) or "1"
    lines = []
    if a.name:
        lines.append(f"knot: {a.name}")
    lines.append(f"Alexander polynomial: {a.alexander}")
    lines.append(f"determinant: {a.determinant} = {fact}")
    if a.homology is not None:
        lines.append(f"H_1(branched cover): {a.homology}")
    for f in a.linking or ():
        qr = "square" if f.square_class == 1 else "non-square"
        lines.append(f"  linking form on Z_{f.p}: beta(x, x) = {f.c}/{f.p} ({qr})")
    lines.append(f"quadratic order-4 criterion: {'yes' if a.quadratic_order4 else 'no'}")
    lines.append(f"verdict: {a.verdict}")
    return "\n".join(lines) + "\n"


def _verdict_exit(kind):
    if kind == INFINITE_ORDER:
        return EXIT_OK
    if kind == ORDER4_CANDIDATE:
        return EXIT_ORDER4_CANDIDATE
    return EXIT_INCONCLUSIVE


def run_analyze(knot, fmt="text", name=None):
    a = analyze(knot, name=name)
    out = json.dumps(_analysis_dict(a), indent=2) + "\n" if fmt == "json" else _analysis_text(a)
    return CommandResult(out, _verdict_exit(a.verdict.kind), a)


def run_certify(prime, copies, budget=DEFAULT_BUDGET, fmt="json", workers=1):
    try:
        report = certify(prime, copies, budget=budget, workers=workers)
    except BudgetExceeded as exc:
        return CommandResult(f"budget exceeded: {exc}\n", EXIT_BUDGET)
    if report.status == NO_METABOLIZER:
        if fmt == "json":
            out = json.dumps({"prime": prime, "copies": copies, "status": NO_METABOLIZER}) + "\n"
        else:
            out = f"no metabolizer exists for {copies} copies over Z_{prime}\n"
        return CommandResult(out, EXIT_NO_METABOLIZER, report)
    if fmt == "json":
        out = formats.dump_certificates(report.certificates)
    else:
        lines = [f"{len(report.certificates)} metabolizers for {copies} copies over Z_{prime}"]
        for i, c in enumerate(report.certificates, 1):
            lines.append(
                f"[{i}] basis={[list(r) for r in c.basis]} perm={list(c.permutation)} "
                f"sum={list(c.summed_vector)} f={c.relation} n={c.n}"
            )
        ns = sorted(set(c.n for c in report.certificates))
        lines.append(f"distinct n: {ns}")
        out = "\n".join(lines) + "\n"
    return CommandResult(out, EXIT_OK, report)


def run_table(records, fmt="text"):
    analyses = [analyze(r) for r in records]
    counts = Counter(a.verdict.prime for a in analyses if a.verdict.kind == INFINITE_ORDER)
    other = sum(1 for a in analyses if a.verdict.kind != INFINITE_ORDER)
    summary = {str(p): counts[p] for p in sorted(counts)}
    if fmt == "json":
        doc = {
            "knots": [
                {"name": a.name, "determinant": a.determinant, "verdict": a.verdict.kind,
                 "witness_prime": a.verdict.prime}
                for a in analyses
            ],
            "witness_counts": summary,
            "not_obstructed": other,
        }
        out = json.dumps(doc, indent=2) + "\n"
    else:
        lines = [f"{a.name:<10} det={a.determinant:<6} {a.verdict}" for a in analyses]
        lines.append("witness counts: " + (", ".join(f"p={p}: {n}" for p, n in summary.items()) or "none"))
        lines.append(f"not obstructed: {other}")
        out = "\n".join(lines) + "\n"
    code = EXIT_OK if other == 0 else EXIT_INCONCLUSIVE
    return CommandResult(out, code, {"analyses": analyses, "counts": dict(counts)})


def run_family(count, fmt="text"):
    members = independent_family(count)
    report = family_independence_certificate(members)
    if fmt == "json":
        doc = {
            "members": [
                {"index": m.index, "primes": list(m.primes), "twist": m.twist,
                 "determinant": m.determinant, "seifert": [list(r) for r in m.seifert.entries],
                 "witness_prime": c.witness, "order4": c.order4}
                for m, c in zip(members, report.members)
            ],
            "pairwise_coprime": report.pairwise_coprime,
            "independent": report.ok,
        }
        out = json.dumps(doc, indent=2) + "\n"
    else:
        lines = [
            f"K_{m.twist:<6} primes={m.primes} det={m.determinant} witness={c.witness} "
            f"order4={'yes' if c.order4 else 'no'}"
            for m, c in zip(members, report.members)
        ]
        lines.append(f"pairwise coprime determinants: {'yes' if report.pairwise_coprime else 'no'}")
        lines.append(f"independence certificate: {'pass' if report.ok else 'FAIL'}")
        out = "\n".join(lines) + "\n"
    return CommandResult(out, EXIT_OK if report.ok else EXIT_CHECK_FAILED, report)


def run_ring_demo():
    """The p = 19 example: relation of x = (2,3,15,16), of 5x, and the t^7 shift."""
    tab = dlog_table(19)
    x = (2, 3, 15, 16)
    f = relation_from_vector(x, tab)
    g = scalar_action(x, 5, tab)
    shift = tab[5] % tab.q
    lines = [
        f"p = 19, q = {tab.q}, primitive root g = {tab.g}",
        "dlogs: " + ", ".join(f"{a} = {tab.g}^{tab[a]}" for a in x),
        f"relation(x)   = {f}",
        f"5x            = {tuple(5 * a % 19 for a in x)}",
        f"relation(5x)  = {g}",
        f"5 = {tab.g}^{tab[5]}, so t^{tab[5]} = t^{shift} in Z[Z_{tab.q}]",
        f"t^{shift} * relation(x) = {ring_multiply(GroupRingElement.monomial(tab.q, shift), f)}",
    ]
    ok = ring_multiply(GroupRingElement.monomial(tab.q, shift), f) == g
    lines.append(f"equivariance holds: {'yes' if ok else 'no'}")
    return CommandResult("\n".join(lines) + "\n", EXIT_OK if ok else EXIT_CHECK_FAILED)


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser():
    parser = argparse.ArgumentParser(
        prog="knotorder",
        description="Concordance-order obstructions from Seifert matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default=None,
                     help="output format (certify defaults to json, others to text)")

    p = sub.add_parser("analyze", parents=[fmt], help="invariants and verdict for one knot")
    p.add_argument("--seifert", default="-", help="Seifert matrix file, '-' for stdin")

    p = sub.add_parser("certify", parents=[fmt], help="metabolizer certificates for d copies")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--copies", type=_positive_int, required=True)
    p.add_argument("--budget", type=_positive_int, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=_positive_int, default=1)

    p = sub.add_parser("table", parents=[fmt], help="verdicts for every knot in a table")
    p.add_argument("--table", default=None, help="knot table CSV; bundled table if omitted")

    p = sub.add_parser("family", parents=[fmt], help="independent twisted-double family")
    p.add_argument("--count", type=_positive_int, required=True)

    sub.add_parser("ring-demo", help="worked group-ring example for p = 19")
    return parser


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "certify" and getattr(args, "format", None) is None:
        args.format = "text"
    try:
        if args.command == "analyze":
            res = run_analyze(formats.parse_seifert_file(_read(args.seifert)), args.format)
        elif args.command == "certify":
            res = run_certify(args.prime, args.copies, args.budget, args.format or "json", args.workers)
        elif args.command == "table":
            text = formats.bundled_table_text() if args.table is None else _read(args.table)
            res = run_table(formats.parse_knot_table(text), args.format)
        elif args.command == "family":
            res = run_family(args.count, args.format)
        else:
            res = run_ring_demo()
    except (KnotOrderError, OSError) as exc:
        print(f"knotorder: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(res.output)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
