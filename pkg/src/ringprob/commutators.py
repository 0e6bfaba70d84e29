"""Centralizers, commutator subgroups, solution cosets and the exact
distribution of commutator values over random pairs.

Every probability is a ``fractions.Fraction``; all identities checked here
are exact equalities of rationals, never float comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .errors import CommutativeRingError, InconsistencyError, ZeroTargetError
from .rings import Element, FiniteRing


class AdditiveSubgroup:
    """A subset of Z_{d1} x ... x Z_{dk}, stored sorted and deduplicated.

    Construction does not verify closure (producers either enumerate closed
    sets or run an explicit closure); ``is_subgroup`` checks it and the test
    suite applies that check to everything these functions return.
    """

    __slots__ = ("moduli", "members", "_member_set")

    def __init__(self, moduli, members):
        self.moduli = tuple(moduli)
        self.members = tuple(sorted(set(members)))
        self._member_set = frozenset(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.members)

    def __contains__(self, x) -> bool:
        return x in self._member_set

    def __eq__(self, other) -> bool:
        if not isinstance(other, AdditiveSubgroup):
            return NotImplemented
        return self.moduli == other.moduli and self.members == other.members

    def __hash__(self):
        return hash((self.moduli, self.members))

    def __repr__(self):
        return f"<AdditiveSubgroup of order {len(self.members)}>"

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.moduli))

    def neg(self, x: Element) -> Element:
        return tuple((-a) % d for a, d in zip(x, self.moduli))

    def is_subgroup(self) -> bool:
        zero = (0,) * len(self.moduli)
        if zero not in self._member_set:
            return False
        for x in self.members:
            if self.neg(x) not in self._member_set:
                return False
            for y in self.members:
                if self.add(x, y) not in self._member_set:
                    return False
        return True


class Coset:
    """An additive coset rep + H, materialized with a canonical representative.

    The stored representative is the lexicographically smallest member, so
    two descriptions of the same coset compare equal.
    """

    __slots__ = ("subgroup", "representative", "members", "_member_set")

    def __init__(self, representative: Element, subgroup: AdditiveSubgroup):
        self.subgroup = subgroup
        members = sorted(subgroup.add(representative, h) for h in subgroup)
        self.members = tuple(members)
        self._member_set = frozenset(members)
        self.representative = members[0]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.members)

    def __contains__(self, x) -> bool:
        return x in self._member_set

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coset):
            return NotImplemented
        return self.subgroup == other.subgroup and self.members == other.members

    def __hash__(self):
        return hash((self.subgroup, self.members))

    def __repr__(self):
        return f"<Coset {self.representative} + H, order {len(self.members)}>"


def additive_closure(moduli, generators) -> AdditiveSubgroup:
    """Smallest additive subgroup containing the generators.

    BFS under single-generator addition reaches every integer combination;
    inverses come for free because -g is a positive multiple of g.
    """
    moduli = tuple(moduli)
    zero = (0,) * len(moduli)
    gens = sorted(set(generators) - {zero})
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple((a + b) % d for a, b, d in zip(x, g, moduli))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return AdditiveSubgroup(moduli, seen)


# -- per-element statistics ---------------------------------------------------

def _element_stats(ring: FiniteRing) -> tuple[tuple[int, frozenset[int]], ...]:
    """For each x (by index): (|C_R(x)|, frozenset of commutator-value indices)."""
    if "xstats" not in ring._cache:
        zero_idx = ring.index_of(ring.zero)
        stats = []
        for i in range(ring.order):
            crow = ring.commutator_idx_row(i)
            stats.append((crow.count(zero_idx), frozenset(crow)))
        ring._cache["xstats"] = tuple(stats)
    return ring._cache["xstats"]


def centralizer(ring: FiniteRing, x: Element) -> AdditiveSubgroup:
    """All y with xy = yx; a subring, returned as its additive element set."""
    i = ring.index_of(x)
    zero_idx = ring.index_of(ring.zero)
    crow = ring.commutator_idx_row(i)
    members = [ring.elements[j] for j, c in enumerate(crow) if c == zero_idx]
    return AdditiveSubgroup(ring.moduli, members)


def center(ring: FiniteRing) -> AdditiveSubgroup:
    """Elements commuting with everything (intersection of all centralizers)."""
    if "center" not in ring._cache:
        zero_idx = ring.index_of(ring.zero)
        stats = _element_stats(ring)
        members = [
            ring.elements[i]
            for i, (_, img) in enumerate(stats)
            if img == {zero_idx}
        ]
        ring._cache["center"] = AdditiveSubgroup(ring.moduli, members)
    return ring._cache["center"]


def commutator_image(ring: FiniteRing, x: Element) -> AdditiveSubgroup:
    """The raw value set {[x, y] : y in R}.

    No closure pass: the set is already a subgroup because y -> [x, y] is an
    additive homomorphism, and the test suite asserts that.
    """
    i = ring.index_of(x)
    crow = ring.commutator_idx_row(i)
    return AdditiveSubgroup(ring.moduli, (ring.elements[c] for c in set(crow)))


def commutator_subgroup(ring: FiniteRing) -> AdditiveSubgroup:
    """Additive closure of all commutator values.

    Unlike a single element's value set, the union over all x need not be
    closed, so a closure fixpoint is genuinely required.
    """
    if "commutator_subgroup" not in ring._cache:
        raw: set[int] = set()
        for _, img in _element_stats(ring):
            raw |= img
        gens = (ring.elements[c] for c in raw)
        ring._cache["commutator_subgroup"] = additive_closure(ring.moduli, gens)
    return ring._cache["commutator_subgroup"]


def solution_set(ring: FiniteRing, x: Element, r: Element) -> Optional[Coset]:
    """The y-solutions of [x, y] = r: None when empty, else a centralizer coset."""
    i = ring.index_of(x)
    r_idx = ring.index_of(r)
    crow = ring.commutator_idx_row(i)
    try:
        first = crow.index(r_idx)
    except ValueError:
        return None
    return Coset(ring.elements[first], centralizer(ring, x))


# -- probabilities ------------------------------------------------------------

def pr_bruteforce(ring: FiniteRing, r: Element) -> Fraction:
    """Fraction of ordered pairs (x, y) with xy - yx = r, by full enumeration.

    This is the ground truth the formula-based routes are checked against.
    """
    r_idx = ring.index_of(r)
    count = 0
    for i in range(ring.order):
        count += ring.commutator_idx_row(i).count(r_idx)
    return Fraction(count, ring.order ** 2)


def pr_formula(ring: FiniteRing, r: Element) -> Fraction:
    """The same probability from the centralizer sum over {x : r in [x, R]}.

    Evaluates both equivalent forms, (1/|R|^2) sum |C_R(x)| and
    (1/|R|) sum 1/|[x, R]|, and insists they agree.
    """
    r_idx = ring.index_of(r)
    n = ring.order
    stats = _element_stats(ring)
    hits = [(cent, img) for cent, img in stats if r_idx in img]
    first = Fraction(sum(cent for cent, _ in hits), n * n)
    second = sum((Fraction(1, len(img)) for _, img in hits), Fraction(0)) / n
    if first != second:
        raise InconsistencyError(
            f"centralizer-sum forms disagree at r={r}: {first} vs {second}"
        )
    return first


def pr_spectrum(ring: FiniteRing) -> dict[Element, Fraction]:
    """Probability of every target value, batched through the centralizer sum."""
    n = ring.order
    counts = [0] * n
    for cent, img in _element_stats(ring):
        for idx in img:
            counts[idx] += cent
    spectrum = {ring.elements[i]: Fraction(counts[i], n * n) for i in range(n)}
    total = sum(spectrum.values())
    if total != 1:
        raise InconsistencyError(f"spectrum sums to {total}, not 1")
    return spectrum


def pr_spectrum_bruteforce(ring: FiniteRing) -> dict[Element, Fraction]:
    """Probability of every target value by direct pair counting."""
    n = ring.order
    counts = [0] * n
    for i in range(n):
        for c in ring.commutator_idx_row(i):
            counts[c] += 1
    return {ring.elements[i]: Fraction(counts[i], n * n) for i in range(n)}


# -- bounds -------------------------------------------------------------------

def smallest_prime_divisor(n: int) -> int:
    if n < 2:
        raise ValueError("need n >= 2")
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n


@dataclass(frozen=True)
class BoundCheck:
    claim: str
    status: str  # "pass" | "fail" | "skipped"
    lhs: Optional[Fraction]
    rhs: Optional[Fraction]
    note: str = ""


@dataclass(frozen=True)
class BoundsReport:
    target: Element
    checks: tuple[BoundCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)


def check_lower_bound(ring: FiniteRing, r: Element) -> BoundCheck:
    """Pr_r >= 3 / |R : Z(R)|^2 for nonzero realized targets.

    For unrealized r the probability is 0 and the inequality cannot hold;
    that case is reported as an explicit skip rather than a failure.
    """
    if ring.is_commutative():
        raise CommutativeRingError("lower bound needs a non-commutative ring")
    ring.check_element(r)
    if r == ring.zero:
        raise ZeroTargetError("lower bound needs a nonzero target")
    pr = pr_bruteforce(ring, r)
    index = ring.order // len(center(ring))
    rhs = Fraction(3, index * index)
    if pr == 0:
        return BoundCheck(
            "center-index lower bound", "skipped", pr, rhs,
            "target is not a realized commutator",
        )
    status = "pass" if pr >= rhs else "fail"
    return BoundCheck("center-index lower bound", status, pr, rhs)


def check_dominance(ring: FiniteRing, r: Element) -> BoundCheck:
    """Pr_r <= Pr_0, with equality exactly at r = 0."""
    ring.check_element(r)
    lhs = pr_bruteforce(ring, r)
    rhs = pr_bruteforce(ring, ring.zero)
    if lhs > rhs:
        return BoundCheck("dominated by zero target", "fail", lhs, rhs)
    if (lhs == rhs) != (r == ring.zero):
        return BoundCheck(
            "dominated by zero target", "fail", lhs, rhs,
            "equality must hold exactly at the zero target",
        )
    note = "equality at zero target" if r == ring.zero else "strict"
    return BoundCheck("dominated by zero target", "pass", lhs, rhs, note)


def check_prime_upper_bound(ring: FiniteRing, r: Element) -> BoundCheck:
    """Pr_r <= (|R| - |Z(R)|) / (p |R|) < 1/p, p the smallest prime in |R|."""
    if ring.is_commutative():
        raise CommutativeRingError("upper bound needs a non-commutative ring")
    ring.check_element(r)
    if r == ring.zero:
        raise ZeroTargetError("upper bound needs a nonzero target")
    p = smallest_prime_divisor(ring.order)
    lhs = pr_bruteforce(ring, r)
    rhs = Fraction(ring.order - len(center(ring)), p * ring.order)
    if lhs > rhs:
        return BoundCheck("smallest-prime upper bound", "fail", lhs, rhs)
    if rhs >= Fraction(1, p):
        return BoundCheck(
            "smallest-prime upper bound", "fail", lhs, rhs,
            f"bound is not below 1/{p}",
        )
    note = "attained" if lhs == rhs else f"bound < 1/{p}"
    return BoundCheck("smallest-prime upper bound", "pass", lhs, rhs, note)


def check_bounds(ring: FiniteRing, r: Element) -> BoundsReport:
    """All three bound checks, with unmet preconditions reported as skips."""
    ring.check_element(r)
    checks = []
    for fn, claim in (
        (check_lower_bound, "center-index lower bound"),
        (check_dominance, "dominated by zero target"),
        (check_prime_upper_bound, "smallest-prime upper bound"),
    ):
        try:
            checks.append(fn(ring, r))
        except CommutativeRingError:
            checks.append(BoundCheck(claim, "skipped", None, None, "ring is commutative"))
        except ZeroTargetError:
            checks.append(BoundCheck(claim, "skipped", None, None, "target is zero"))
    return BoundsReport(r, tuple(checks))
