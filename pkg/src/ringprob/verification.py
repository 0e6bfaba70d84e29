"""The identity suite: every centralizer, coset, product, graph, bound and
isoclinism identity the package implements, run against one ring and
reported claim by claim.

Each claim carries a stable id, a pass/fail/skipped status and the two
sides of its identity as exact fractions, so a report doubles as a
machine-diffable traceability matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import graphs
from .commutators import (
    centralizer,
    center,
    commutator_image,
    pr_formula,
    pr_spectrum,
    pr_spectrum_bruteforce,
    smallest_prime_divisor,
    solution_set,
)
from .errors import InconsistencyError, OrderOverflow, SearchBudgetExceeded
from .isoclinism import find_isoclinism, verify_invariance
from .rings import Element, FiniteRing, MAX_ORDER, catalog, direct_product, format_element

CLAIM_IDS = (
    "L2.1",
    "L2.2",
    "T2.3",
    "C2.4",
    "P2.5",
    "P2.6",
    "P2.7a",
    "P2.7b-even",
    "P2.7b-odd",
    "P2.8",
    "P2.9",
    "P2.10",
    "T3.1",
)

# Claims stated only for non-commutative rings; on commutative input they
# are reported as skipped rather than silently passed.
_NONCOMMUTATIVE_ONLY = frozenset(CLAIM_IDS) - {"L2.1", "L2.2"}


def format_fraction(f: Optional[Fraction]) -> str:
    if f is None:
        return "-"
    return f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    status: str  # "pass" | "fail" | "skipped"
    lhs: Optional[Fraction]
    rhs: Optional[Fraction]
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    ring_label: str
    results: tuple[ClaimResult, ...]

    def __post_init__(self):
        ids = tuple(r.claim for r in self.results)
        if ids != CLAIM_IDS:
            raise InconsistencyError(f"claim ids {ids} do not match the registry")

    @property
    def failures(self) -> tuple[ClaimResult, ...]:
        return tuple(r for r in self.results if r.status == "fail")

    @property
    def passed(self) -> bool:
        return not self.failures


def _result(claim, ok, lhs, rhs, detail=""):
    return ClaimResult(claim, "pass" if ok else "fail", lhs, rhs, detail)


def _skip(claim, reason):
    return ClaimResult(claim, "skipped", None, None, reason)


def _claim_image_size(ring: FiniteRing) -> ClaimResult:
    """L2.1: |[x, R]| * |C_R(x)| = |R| for every x."""
    n = ring.order
    first = None
    for x in ring.elements:
        prod = len(commutator_image(ring, x)) * len(centralizer(ring, x))
        if first is None:
            first = Fraction(prod)
        if prod != n:
            return _result(
                "L2.1", False, Fraction(prod), Fraction(n),
                f"fails at x={format_element(x)}",
            )
    return _result("L2.1", True, first, Fraction(n), f"all {n} elements")


def _claim_solution_cosets(ring: FiniteRing) -> ClaimResult:
    """L2.2: solutions of [x, y] = r form a centralizer coset, or are empty
    exactly when r avoids [x, R]."""
    n = ring.order
    checked = 0
    first = None
    for x in ring.elements:
        cent = centralizer(ring, x)
        image = commutator_image(ring, x)
        for r in ring.elements:
            sol = solution_set(ring, x, r)
            if (sol is None) != (r not in image):
                return _result(
                    "L2.2", False, None, None,
                    f"emptiness mismatch at x={format_element(x)} r={format_element(r)}",
                )
            if sol is None:
                continue
            checked += 1
            actual = sorted(
                y for y in ring.elements if ring.commutator(x, y) == r
            )
            if first is None:
                first = (Fraction(len(sol)), Fraction(len(cent)))
            if len(sol) != len(cent) or list(sol.members) != actual:
                return _result(
                    "L2.2", False, Fraction(len(sol)), Fraction(len(cent)),
                    f"coset mismatch at x={format_element(x)} r={format_element(r)}",
                )
    lhs, rhs = first if first else (None, None)
    return _result("L2.2", True, lhs, rhs, f"{checked} nonempty solution sets")


def _claim_formula(ring: FiniteRing, sp: dict) -> ClaimResult:
    """T2.3: the centralizer-sum value equals the enumerated value for all r."""
    first = None
    for r in ring.elements:
        got = pr_formula(ring, r)
        want = sp[r]
        if first is None:
            first = (got, want)
        if got != want:
            return _result("T2.3", False, got, want, f"fails at r={format_element(r)}")
    return _result("T2.3", True, first[0], first[1], f"all {ring.order} targets")


def _claim_unrestricted_sum(ring: FiniteRing, sp: dict) -> ClaimResult:
    """C2.4: the unrestricted centralizer sum gives the commuting probability."""
    n = ring.order
    total = sum(len(centralizer(ring, x)) for x in ring.elements)
    lhs = Fraction(total, n * n)
    rhs = sp[ring.zero]
    return _result("C2.4", lhs == rhs, lhs, rhs, "unrestricted centralizer sum")


_COMPANION_NAME = ("triangular", 2, 2)


def _claim_product(ring: FiniteRing, sp: dict) -> ClaimResult:
    """P2.5: product-ring probabilities factor through the components."""
    companion = catalog(*_COMPANION_NAME)
    if ring.order * companion.order > MAX_ORDER:
        return _skip("P2.5", "product exceeds the enumeration cap")
    product = direct_product(ring, companion)
    sp2 = pr_spectrum_bruteforce(companion)
    spp = pr_spectrum_bruteforce(product)
    first = None
    for r1 in ring.elements:
        for r2 in companion.elements:
            lhs = spp[r1 + r2]
            rhs = sp[r1] * sp2[r2]
            if first is None:
                first = (lhs, rhs)
            if lhs != rhs:
                return _result(
                    "P2.5", False, lhs, rhs,
                    f"fails at ({format_element(r1)}, {format_element(r2)})",
                )
    return _result(
        "P2.5", True, first[0], first[1],
        f"all {ring.order * companion.order} target pairs vs {companion.name}",
    )


def _claim_negation(ring: FiniteRing, sp: dict) -> ClaimResult:
    """P2.6: negating the target leaves the probability unchanged."""
    first = None
    for r in ring.elements:
        lhs, rhs = sp[r], sp[ring.neg(r)]
        if first is None:
            first = (lhs, rhs)
        if lhs != rhs:
            return _result("P2.6", False, lhs, rhs, f"fails at r={format_element(r)}")
    return _result("P2.6", True, first[0], first[1], f"all {ring.order} targets")


def _claim_edges(ring: FiniteRing, claim: str, targets: list[Element], absent: str) -> ClaimResult:
    if ring.order > graphs.MAX_GRAPH_ORDER:
        return _skip(claim, "ring exceeds the graph cap")
    if not targets:
        return _skip(claim, absent)
    first = None
    for r in targets:
        rep = graphs.verify_edge_identity(ring, r)
        if first is None:
            first = (rep.probability, rep.from_edges)
        if not rep.holds:
            return _result(
                claim, False, rep.probability, rep.from_edges,
                f"fails at r={format_element(r)} with {rep.edge_count} edges",
            )
    return _result(claim, True, first[0], first[1], f"checked {len(targets)}")


def _claim_lower_bound(ring: FiniteRing, sp: dict) -> ClaimResult:
    """P2.8: realized nonzero targets sit above 3 / |R : Z(R)|^2."""
    index = ring.order // len(center(ring))
    rhs = Fraction(3, index * index)
    checked = 0
    gated = 0
    first = None
    for r in ring.elements:
        if r == ring.zero:
            continue
        if sp[r] == 0:
            gated += 1
            continue
        checked += 1
        if first is None:
            first = sp[r]
        if sp[r] < rhs:
            return _result(
                "P2.8", False, sp[r], rhs, f"fails at r={format_element(r)}"
            )
    if checked == 0:
        return _skip("P2.8", "no realized nonzero target")
    return _result(
        "P2.8", True, first, rhs, f"{checked} realized, {gated} unrealized gated"
    )


def _claim_dominance(ring: FiniteRing, sp: dict) -> ClaimResult:
    """P2.9: the zero target dominates, and strictly so away from zero."""
    pr0 = sp[ring.zero]
    worst = None
    for r in ring.elements:
        if r == ring.zero:
            continue
        if sp[r] >= pr0:
            return _result(
                "P2.9", False, sp[r], pr0,
                f"not strictly dominated at r={format_element(r)}",
            )
        if worst is None or sp[r] > worst:
            worst = sp[r]
    return _result(
        "P2.9", True, worst if worst is not None else pr0, pr0,
        "equality only at the zero target",
    )


def _claim_prime_bound(ring: FiniteRing, sp: dict) -> ClaimResult:
    """P2.10: nonzero targets sit below (|R| - |Z(R)|) / (p |R|) < 1/p."""
    n = ring.order
    p = smallest_prime_divisor(n)
    rhs = Fraction(n - len(center(ring)), p * n)
    if rhs >= Fraction(1, p):
        return _result("P2.10", False, rhs, Fraction(1, p), "bound not below 1/p")
    worst = None
    for r in ring.elements:
        if r == ring.zero:
            continue
        if sp[r] > rhs:
            return _result(
                "P2.10", False, sp[r], rhs, f"fails at r={format_element(r)}"
            )
        if worst is None or sp[r] > worst:
            worst = sp[r]
    return _result(
        "P2.10", True, worst if worst is not None else Fraction(0), rhs,
        f"bound below 1/{p}",
    )


def _claim_isoclinism(ring: FiniteRing) -> ClaimResult:
    """T3.1: the distribution survives adjoining a null factor, matched
    through a searched isomorphism pair."""
    if ring.order * 2 > MAX_ORDER:
        return _skip("T3.1", "companion product exceeds the enumeration cap")
    companion = direct_product(ring, catalog("zero_ring", 2))
    try:
        witness = find_isoclinism(ring, companion)
    except OrderOverflow:
        return _skip("T3.1", "quotient or commutator subgroup exceeds the search gate")
    except SearchBudgetExceeded:
        return _skip("T3.1", "search budget exceeded")
    if witness is None:
        return _result("T3.1", False, None, None, "no witness found")
    report = verify_invariance(ring, companion, witness)
    entry = report.entries[0]
    if not report.holds:
        bad = next(e for e in report.entries if e.lhs != e.rhs)
        return _result(
            "T3.1", False, bad.lhs, bad.rhs,
            f"invariance fails at r={format_element(bad.source)}",
        )
    return _result(
        "T3.1", True, entry.lhs, entry.rhs,
        f"{len(report.entries)} targets matched against the null extension",
    )


def run_verification(ring: FiniteRing, label: str) -> VerificationReport:
    """Run every claim against one ring; skipped claims carry their reason."""
    sp = pr_spectrum_bruteforce(ring)
    spectrum_check = pr_spectrum(ring)
    if spectrum_check != sp:
        raise InconsistencyError("formula spectrum disagrees with enumeration")

    noncommutative = not ring.is_commutative()
    zero = ring.zero
    two_r_zero = [r for r in ring.elements if r != zero and ring.scale(2, r) == zero]
    two_r_nonzero = [r for r in ring.elements if ring.scale(2, r) != zero]

    results = []
    for claim in CLAIM_IDS:
        if claim in _NONCOMMUTATIVE_ONLY and not noncommutative:
            results.append(_skip(claim, "ring is commutative"))
            continue
        if claim == "L2.1":
            results.append(_claim_image_size(ring))
        elif claim == "L2.2":
            results.append(_claim_solution_cosets(ring))
        elif claim == "T2.3":
            results.append(_claim_formula(ring, sp))
        elif claim == "C2.4":
            results.append(_claim_unrestricted_sum(ring, sp))
        elif claim == "P2.5":
            results.append(_claim_product(ring, sp))
        elif claim == "P2.6":
            results.append(_claim_negation(ring, sp))
        elif claim == "P2.7a":
            results.append(_claim_edges(ring, "P2.7a", [zero], "unreachable"))
        elif claim == "P2.7b-even":
            results.append(
                _claim_edges(ring, "P2.7b-even", two_r_zero,
                             "no nonzero target with 2r = 0")
            )
        elif claim == "P2.7b-odd":
            results.append(
                _claim_edges(ring, "P2.7b-odd", two_r_nonzero,
                             "no target with 2r != 0")
            )
        elif claim == "P2.8":
            results.append(_claim_lower_bound(ring, sp))
        elif claim == "P2.9":
            results.append(_claim_dominance(ring, sp))
        elif claim == "P2.10":
            results.append(_claim_prime_bound(ring, sp))
        elif claim == "T3.1":
            results.append(_claim_isoclinism(ring))
    return VerificationReport(label, tuple(results))
