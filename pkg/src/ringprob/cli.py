"""Command-line driver.

Subcommands: validate, prob, verify, graph, isoclinic, product.
Exit codes: 0 success, 1 claim or verdict failure, 2 input error,
3 internal inconsistency, 4 search budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .commutators import (
    center,
    commutator_subgroup,
    pr_bruteforce,
    pr_formula,
    pr_spectrum,
    pr_spectrum_bruteforce,
)
from .errors import (
    InconsistencyError,
    RingError,
    SearchBudgetExceeded,
    WitnessInvalid,
)
from .graphs import build_graph, export_dot, verify_edge_identity
from .isoclinism import DEFAULT_NODE_BUDGET, find_isoclinism, verify_invariance
from .rings import (
    FiniteRing,
    direct_product,
    format_element,
    parse_element,
    parse_ring_file,
    serialize_ring,
)
from .verification import format_fraction, run_verification

EXIT_OK = 0
EXIT_CLAIM_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL = 3
EXIT_BUDGET = 4


def _load_ring(path: str) -> FiniteRing:
    text = Path(path).read_text(encoding="utf-8")
    return parse_ring_file(text, name=Path(path).name)


def cmd_validate(args) -> int:
    ring = _load_ring(args.ring)
    kind = "commutative" if ring.is_commutative() else "non-commutative"
    z = len(center(ring))
    d = len(commutator_subgroup(ring))
    print(f"order {ring.order}, {kind}, |Z|={z}, |[R,R]|={d}")
    return EXIT_OK


def cmd_prob(args) -> int:
    ring = _load_ring(args.ring)
    if args.all:
        spectrum = pr_spectrum(ring)
        oracle = pr_spectrum_bruteforce(ring)
        if spectrum != oracle:
            print("error: formula spectrum disagrees with enumeration", file=sys.stderr)
            return EXIT_INTERNAL
        for x in ring.elements:
            print(f"{format_element(x)} {format_fraction(spectrum[x])}")
        print(f"sum {format_fraction(sum(spectrum.values()))}")
        if args.report_dir:
            from . import report

            for p in report.write_spectrum_report(
                ring, ring.name or args.ring, spectrum, Path(args.report_dir)
            ):
                print(f"wrote {p}", file=sys.stderr)
        return EXIT_OK
    r = parse_element(args.r, ring.shape)
    value = pr_formula(ring, r)
    oracle = pr_bruteforce(ring, r)
    if value != oracle:
        print(
            f"error: formula {format_fraction(value)} disagrees with "
            f"enumeration {format_fraction(oracle)} at r={format_element(r)}",
            file=sys.stderr,
        )
        return EXIT_INTERNAL
    print(f"{format_element(r)} {format_fraction(value)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    ring = _load_ring(args.ring)
    label = Path(args.ring).name
    report_obj = run_verification(ring, label)
    print(f"ring {label} order {ring.order}")
    for res in report_obj.results:
        print(
            f"{res.claim:<11} {res.status:<8} "
            f"{format_fraction(res.lhs):>10} {format_fraction(res.rhs):>10}  {res.detail}"
        )
    n_pass = sum(1 for r in report_obj.results if r.status == "pass")
    n_fail = len(report_obj.failures)
    n_skip = sum(1 for r in report_obj.results if r.status == "skipped")
    verdict = "pass" if report_obj.passed else "fail"
    print(f"result {verdict} ({n_pass} pass, {n_fail} fail, {n_skip} skipped)")
    if args.report_dir:
        from . import report

        for p in report.write_verification_report(report_obj, Path(args.report_dir)):
            print(f"wrote {p}", file=sys.stderr)
    return EXIT_OK if report_obj.passed else EXIT_CLAIM_FAILURE


def cmd_graph(args) -> int:
    ring = _load_ring(args.ring)
    r = parse_element(args.r, ring.shape)
    graph = build_graph(ring, r)
    Path(args.dot).write_text(export_dot(graph), encoding="utf-8")
    identity = verify_edge_identity(ring, r)
    print(f"edges {graph.edge_count}")
    status = "pass" if identity.holds else "fail"
    print(
        f"identity {identity.case} {format_fraction(identity.probability)} == "
        f"{format_fraction(identity.from_edges)} {status}"
    )
    # The identity always holds for a valid ring; disagreement means the code is wrong.
    return EXIT_OK if identity.holds else EXIT_INTERNAL


def cmd_isoclinic(args) -> int:
    r1 = _load_ring(args.ring1)
    r2 = _load_ring(args.ring2)
    try:
        witness = find_isoclinism(r1, r2, node_budget=args.budget)
    except SearchBudgetExceeded as exc:
        print(f"SearchBudgetExceeded: {exc}")
        return EXIT_BUDGET
    if witness is None:
        print("NotIsoclinic")
        return EXIT_CLAIM_FAILURE
    print("isoclinic")
    print(witness.serialize(), end="")
    report_obj = verify_invariance(r1, r2, witness)
    print("invariance:")
    for e in report_obj.entries:
        print(
            f"{format_element(e.source)} -> {format_element(e.image)} : "
            f"{format_fraction(e.lhs)} == {format_fraction(e.rhs)}"
        )
    print(f"index {report_obj.index_left} == {report_obj.index_right}")
    print(f"result {'pass' if report_obj.holds else 'fail'}")
    return EXIT_OK if report_obj.holds else EXIT_INTERNAL


def cmd_product(args) -> int:
    r1 = _load_ring(args.ring1)
    r2 = _load_ring(args.ring2)
    product = direct_product(r1, r2)
    Path(args.output).write_text(serialize_ring(product), encoding="utf-8")
    print(f"order {product.order}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringprob",
        description=(
            "Exact commutator-value distributions, bounds, graphs and "
            "isoclinism checks for finite rings given by structure constants."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a ring file and print a summary")
    p.add_argument("ring", help="ring file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("prob", help="exact probability that [x,y] equals a target")
    p.add_argument("ring", help="ring file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--r", help="target element, e.g. 1,0")
    group.add_argument("--all", action="store_true", help="print the full spectrum")
    p.add_argument("--report-dir", help="write spectrum.csv and spectrum.png here (with --all)")
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("verify", help="run the whole identity suite against a ring")
    p.add_argument("ring", help="ring file")
    p.add_argument("--report-dir", help="write claims.csv and claims.png here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph", help="build the target-avoiding non-commuting graph")
    p.add_argument("ring", help="ring file")
    p.add_argument("--r", required=True, help="target element, e.g. 0,0")
    p.add_argument("--dot", required=True, help="output DOT file")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("isoclinic", help="search for a commutator-compatible pairing")
    p.add_argument("ring1", help="first ring file")
    p.add_argument("ring2", help="second ring file")
    p.add_argument(
        "--budget", type=int, default=DEFAULT_NODE_BUDGET,
        help="search node cap (default %(default)s)",
    )
    p.set_defaults(func=cmd_isoclinic)

    p = sub.add_parser("product", help="write the direct product of two ring files")
    p.add_argument("ring1", help="first ring file")
    p.add_argument("ring2", help="second ring file")
    p.add_argument("-o", "--output", required=True, help="output ring file")
    p.set_defaults(func=cmd_product)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (WitnessInvalid, InconsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except RingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
