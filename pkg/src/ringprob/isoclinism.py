"""Central quotients, abelian-group isomorphism machinery, and the
commutator-compatible pairing of two rings.

Two rings are paired here when there are additive isomorphisms between
their central quotients and between their commutator subgroups that carry
the commutator of a coset pair to the commutator of the image pair.  Such
a pairing forces the two rings to have identical commutator-value
distributions up to relabelling, which verify_invariance checks exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .commutators import (
    AdditiveSubgroup,
    center,
    commutator_image,
    commutator_subgroup,
    pr_bruteforce,
)
from .errors import (
    InconsistencyError,
    OrderOverflow,
    SearchBudgetExceeded,
    ShapeMismatch,
    WitnessInvalid,
)
from .rings import Element, FiniteRing, format_element

# The backtracking search is super-polynomial in the quotient size;
# this gate keeps it a desk-scale computation.
MAX_SEARCH_ORDER = 64

DEFAULT_NODE_BUDGET = 10_000_000


class FiniteAbelianGroup:
    """An explicit finite abelian group: element list plus add/neg callables.

    Isomorphism type is read off the invariant factors, which are in turn
    determined by how many elements each power kills.
    """

    def __init__(self, elements, add: Callable, neg: Callable, zero):
        self.elements = tuple(elements)
        self.add = add
        self.neg = neg
        self.zero = zero
        self._orders: Optional[dict] = None
        self._factors: Optional[tuple[int, ...]] = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_order(self, x) -> int:
        if self._orders is None:
            self._orders = {}
        cached = self._orders.get(x)
        if cached is not None:
            return cached
        n = 1
        y = x
        while y != self.zero:
            y = self.add(y, x)
            n += 1
        self._orders[x] = n
        return n

    def invariant_factors(self) -> tuple[int, ...]:
        """Ascending divisibility chain (f1 | f2 | ... | fm), product = order."""
        if self._factors is None:
            counts: dict[int, int] = {}
            for x in self.elements:
                o = self.element_order(x)
                counts[o] = counts.get(o, 0) + 1
            self._factors = _factors_from_order_counts(counts, self.order)
        return self._factors

    def multiple(self, n: int, x):
        y = self.zero
        for _ in range(n):
            y = self.add(y, x)
        return y

    def extend_span(self, span: frozenset, g, order: int) -> Optional[frozenset]:
        """span + <g> if the sum is direct (size grows by a factor of order)."""
        new = set(span)
        cur = self.zero
        for _ in range(order - 1):
            cur = self.add(cur, g)
            for s in span:
                new.add(self.add(s, cur))
        if len(new) != len(span) * order:
            return None
        return frozenset(new)

    def basis(self) -> list[tuple[object, int]]:
        """Independent generators realizing the invariant factors, largest first.

        Deterministic: generators are tried in element-list order.
        """
        facs = sorted(self.invariant_factors(), reverse=True)
        gens: list = []

        def search(level: int, span: frozenset) -> bool:
            if level == len(facs):
                return True
            f = facs[level]
            for g in self.elements:
                if self.element_order(g) != f:
                    continue
                new_span = self.extend_span(span, g, f)
                if new_span is None:
                    continue
                gens.append(g)
                if search(level + 1, new_span):
                    return True
                gens.pop()
            return False

        if not search(0, frozenset({self.zero})):
            raise InconsistencyError("no abelian basis found, factors are wrong")
        return list(zip(gens, facs))


def _prime_factors(n: int) -> list[int]:
    primes = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        primes.append(n)
    return primes


def _exact_log(m: int, p: int) -> int:
    e = 0
    while m > 1:
        if m % p:
            raise InconsistencyError(f"{m} is not a power of {p}")
        m //= p
        e += 1
    return e


def _factors_from_order_counts(counts: dict[int, int], n: int) -> tuple[int, ...]:
    """Invariant factors of an abelian group from its element-order histogram.

    For each prime p the count of elements killed by p^j determines the
    conjugate of the partition of p-exponents, which is then recombined
    into the divisibility chain.
    """
    if n == 1:
        return ()
    per_prime: dict[int, list[int]] = {}
    for p in _prime_factors(n):
        t_prev = 0
        conj: list[int] = []  # conj[j-1] = number of p-power factors >= p^j
        j = 1
        while True:
            pj = p ** j
            killed = sum(c for o, c in counts.items() if pj % o == 0)
            t = _exact_log(killed, p)
            if t == t_prev:
                break
            conj.append(t - t_prev)
            t_prev = t
            j += 1
        exponents = [
            sum(1 for m in conj if m >= i) for i in range(1, (conj[0] if conj else 0) + 1)
        ]
        per_prime[p] = exponents  # descending
    width = max(len(v) for v in per_prime.values())
    descending = []
    for i in range(width):
        f = 1
        for p, exps in per_prime.items():
            if i < len(exps):
                f *= p ** exps[i]
        descending.append(f)
    return tuple(reversed(descending))


def invariant_factors(group: FiniteAbelianGroup) -> tuple[int, ...]:
    """Divisibility-chain invariants; equal lists mean isomorphic groups."""
    return group.invariant_factors()


def subgroup_group(sub: AdditiveSubgroup) -> FiniteAbelianGroup:
    """View an additive subgroup of a ring as a standalone abelian group."""
    zero = (0,) * len(sub.moduli)
    return FiniteAbelianGroup(sub.members, sub.add, sub.neg, zero)


class QuotientGroup:
    """The additive quotient of a ring by its center.

    Cosets are handled through canonical (lexicographically minimal)
    representatives; the commutator of two cosets is well defined because
    central shifts never change a commutator.
    """

    def __init__(self, ring: FiniteRing, central: AdditiveSubgroup):
        self.ring = ring
        self.center = central
        rep_map: dict[Element, Element] = {}
        reps: list[Element] = []
        for x in ring.elements:
            if x in rep_map:
                continue
            members = sorted(ring.add(x, z) for z in central)
            rep = members[0]
            reps.append(rep)
            for m in members:
                rep_map[m] = rep
        self.reps = tuple(reps)
        self._rep_map = rep_map

    def __len__(self) -> int:
        return len(self.reps)

    def rep_of(self, x: Element) -> Element:
        self.ring.check_element(x)
        return self._rep_map[x]

    def add(self, a: Element, b: Element) -> Element:
        return self._rep_map[self.ring.add(a, b)]

    def neg(self, a: Element) -> Element:
        return self._rep_map[self.ring.neg(a)]

    @property
    def zero(self) -> Element:
        return self._rep_map[self.ring.zero]

    def coset_commutator(self, a: Element, b: Element) -> Element:
        return self.ring.commutator(a, b)

    def as_group(self) -> FiniteAbelianGroup:
        return FiniteAbelianGroup(self.reps, self.add, self.neg, self.zero)


def quotient_by_center(ring: FiniteRing) -> QuotientGroup:
    if "quotient" not in ring._cache:
        ring._cache["quotient"] = QuotientGroup(ring, center(ring))
    return ring._cache["quotient"]


@dataclass
class IsoclinismWitness:
    """A compatible pair of additive isomorphisms.

    ``alpha`` maps canonical coset representatives of the first ring's
    central quotient to those of the second; ``beta`` maps the first
    commutator subgroup onto the second.
    """

    alpha: dict[Element, Element]
    beta: dict[Element, Element]

    def serialize(self) -> str:
        lines = ["alpha:"]
        for a in sorted(self.alpha):
            lines.append(f"{format_element(a)} -> {format_element(self.alpha[a])}")
        lines.append("beta:")
        for u in sorted(self.beta):
            lines.append(f"{format_element(u)} -> {format_element(self.beta[u])}")
        return "\n".join(lines) + "\n"


def _derive_beta(
    r1: FiniteRing,
    r2: FiniteRing,
    q1: QuotientGroup,
    alpha: dict[Element, Element],
    d1: AdditiveSubgroup,
    d2: AdditiveSubgroup,
) -> Optional[dict[Element, Element]]:
    """The commutator-subgroup map forced by alpha, or None if inconsistent.

    Commutators generate the commutator subgroup, so compatibility pins the
    map on a generating set; additive closure then either extends it to a
    bijection or runs into a contradiction.
    """
    beta: dict[Element, Element] = {}
    for a in q1.reps:
        fa = alpha[a]
        for b in q1.reps:
            c1 = r1.commutator(a, b)
            c2 = r2.commutator(fa, alpha[b])
            prev = beta.get(c1)
            if prev is None:
                beta[c1] = c2
            elif prev != c2:
                return None
    while True:
        added = False
        items = list(beta.items())
        for u, v in items:
            for u2, v2 in items:
                w = r1.add(u, u2)
                val = r2.add(v, v2)
                prev = beta.get(w)
                if prev is None:
                    beta[w] = val
                    added = True
                elif prev != val:
                    return None
        if not added:
            break
    if set(beta) != set(d1.members):
        return None
    if set(beta.values()) != set(d2.members):
        return None
    return beta


def find_isoclinism(
    r1: FiniteRing,
    r2: FiniteRing,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Optional[IsoclinismWitness]:
    """Search for a compatible isomorphism pair; None means none exists.

    Backtracks over basis images for the quotient map in deterministic
    (lexicographic) order, deriving the commutator-subgroup map from each
    candidate.  Raises SearchBudgetExceeded when the node cap is hit, which
    is a different outcome than an exhausted search.
    """
    q1, q2 = quotient_by_center(r1), quotient_by_center(r2)
    d1, d2 = commutator_subgroup(r1), commutator_subgroup(r2)
    for q, d in ((q1, d1), (q2, d2)):
        if len(q) > MAX_SEARCH_ORDER or len(d) > MAX_SEARCH_ORDER:
            raise OrderOverflow(
                f"isoclinism search gate: quotient {len(q)} / commutators {len(d)} "
                f"exceed {MAX_SEARCH_ORDER}"
            )
    g1, g2 = q1.as_group(), q2.as_group()
    if g1.invariant_factors() != g2.invariant_factors():
        return None
    if subgroup_group(d1).invariant_factors() != subgroup_group(d2).invariant_factors():
        return None

    basis1 = g1.basis()
    facs = [f for _, f in basis1]
    coeff_of: dict[Element, tuple[int, ...]] = {}
    for vec in itertools.product(*(range(f) for f in facs)):
        x = g1.zero
        for c, (g, _) in zip(vec, basis1):
            x = g1.add(x, g1.multiple(c, g))
        coeff_of[x] = vec
    if len(coeff_of) != g1.order:
        raise InconsistencyError("quotient basis does not span the quotient")

    candidates = [
        [h for h in g2.elements if g2.element_order(h) == f] for f in facs
    ]
    chosen: list[Element] = []
    nodes = 0

    def attempt() -> Optional[IsoclinismWitness]:
        alpha = {}
        for x, vec in coeff_of.items():
            y = g2.zero
            for c, h in zip(vec, chosen):
                y = g2.add(y, g2.multiple(c, h))
            alpha[x] = y
        beta = _derive_beta(r1, r2, q1, alpha, d1, d2)
        if beta is None:
            return None
        return IsoclinismWitness(alpha, beta)

    def search(level: int, span: frozenset) -> Optional[IsoclinismWitness]:
        nonlocal nodes
        if level == len(facs):
            return attempt()
        for h in candidates[level]:
            nodes += 1
            if nodes > node_budget:
                raise SearchBudgetExceeded(
                    f"isoclinism search exceeded {node_budget} nodes"
                )
            new_span = g2.extend_span(span, h, facs[level])
            if new_span is None:
                continue
            chosen.append(h)
            found = search(level + 1, new_span)
            if found is not None:
                return found
            chosen.pop()
        return None

    witness = search(0, frozenset({g2.zero}))
    if witness is not None and not verify_witness(r1, r2, witness):
        raise InconsistencyError("search produced a witness that fails verification")
    return witness


def verify_witness(r1: FiniteRing, r2: FiniteRing, w: IsoclinismWitness) -> bool:
    """Check that (alpha, beta) really is a compatible isomorphism pair."""
    for x in w.alpha:
        r1.check_element(x)
    for y in w.alpha.values():
        r2.check_element(y)
    for u in w.beta:
        r1.check_element(u)
    for v in w.beta.values():
        r2.check_element(v)

    q1, q2 = quotient_by_center(r1), quotient_by_center(r2)
    d1, d2 = commutator_subgroup(r1), commutator_subgroup(r2)

    if set(w.alpha) != set(q1.reps) or set(w.alpha.values()) != set(q2.reps):
        return False
    if len(set(w.alpha.values())) != len(w.alpha):
        return False
    for a in q1.reps:
        for b in q1.reps:
            if w.alpha[q1.add(a, b)] != q2.add(w.alpha[a], w.alpha[b]):
                return False

    if set(w.beta) != set(d1.members) or set(w.beta.values()) != set(d2.members):
        return False
    if len(set(w.beta.values())) != len(w.beta):
        return False
    for u in d1.members:
        for v in d1.members:
            if w.beta[r1.add(u, v)] != r2.add(w.beta[u], w.beta[v]):
                return False

    for a in q1.reps:
        for b in q1.reps:
            if w.beta[r1.commutator(a, b)] != r2.commutator(w.alpha[a], w.alpha[b]):
                return False
    return True


@dataclass(frozen=True)
class InvarianceEntry:
    source: Element
    image: Element
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class InvarianceReport:
    """Exact distribution match over the commutator subgroup, plus the
    structural facts the match rests on."""

    index_left: int
    index_right: int
    image_sizes_match: bool
    entries: tuple[InvarianceEntry, ...]

    @property
    def holds(self) -> bool:
        return (
            self.index_left == self.index_right
            and self.image_sizes_match
            and all(e.lhs == e.rhs for e in self.entries)
        )


def verify_invariance(
    r1: FiniteRing, r2: FiniteRing, w: IsoclinismWitness
) -> InvarianceReport:
    """Assert Pr_r(R1) = Pr_{beta(r)}(R2) for every r in the commutator subgroup.

    Also checks the central indices agree and that matched cosets have
    equally many commutator values, the two facts the equality rests on.
    """
    if not verify_witness(r1, r2, w):
        raise WitnessInvalid("witness fails verification")
    q1 = quotient_by_center(r1)
    index_left = r1.order // len(center(r1))
    index_right = r2.order // len(center(r2))
    sizes_match = all(
        len(commutator_image(r1, s)) == len(commutator_image(r2, w.alpha[s]))
        for s in q1.reps
    )
    d1 = commutator_subgroup(r1)
    entries = tuple(
        InvarianceEntry(
            r,
            w.beta[r],
            pr_bruteforce(r1, r),
            pr_bruteforce(r2, w.beta[r]),
        )
        for r in d1.members
    )
    return InvarianceReport(index_left, index_right, sizes_match, entries)
