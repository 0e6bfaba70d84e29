"""Finite rings presented by structure constants over a product of cyclic groups.

A ring here is an additive group Z_{d1} x ... x Z_{dk} together with a k x k
table of structure constants: constants[i][j] is the product of the i-th and
j-th canonical generators.  Multiplication of arbitrary elements is the
bilinear extension of that table.  Rings are not assumed to have a
multiplicative identity and are immutable once validated.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    AssociativityViolation,
    ElementSyntaxError,
    InvalidModuli,
    OrderOverflow,
    RingSyntaxError,
    ShapeMismatch,
    UnknownCatalogName,
    WellDefinednessViolation,
)

# Enumeration cap: every heavy operation is O(|R|^2) or worse, and this keeps
# all of them interactive on a desk machine.
MAX_ORDER = 4096

# Full multiplication tables are only cached up to this order; above it the
# quadratic table would dominate memory and rows are recomputed on demand.
_TABLE_CACHE_LIMIT = 1024

Element = tuple[int, ...]


@dataclass(frozen=True)
class GroupShape:
    """The additive group Z_{d1} x ... x Z_{dk}, given by its moduli."""

    moduli: tuple[int, ...]

    def __post_init__(self):
        if len(self.moduli) < 1:
            raise InvalidModuli("need at least one modulus")
        for d in self.moduli:
            if not isinstance(d, int) or d < 2:
                raise InvalidModuli(f"modulus {d!r} is not an integer >= 2")
        if self.order > MAX_ORDER:
            raise OrderOverflow(f"group order {self.order} exceeds cap {MAX_ORDER}")

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)


def format_element(x: Element) -> str:
    """Render an element as comma-joined coordinates, e.g. ``1,0``."""
    return ",".join(str(c) for c in x)


def parse_element(text: str, shape: GroupShape) -> Element:
    """Parse a comma-separated coordinate list, reducing modulo the moduli."""
    parts = [p.strip() for p in text.split(",")]
    try:
        coords = [int(p) for p in parts]
    except ValueError:
        raise ElementSyntaxError(f"cannot parse element {text!r}") from None
    if len(coords) != shape.rank:
        raise ElementSyntaxError(
            f"element {text!r} has {len(coords)} coordinates, expected {shape.rank}"
        )
    return tuple(c % d for c, d in zip(coords, shape.moduli))


class FiniteRing:
    """A validated finite ring.

    All arithmetic returns elements in canonical form (coordinates reduced
    modulo the moduli).  Instances are immutable and safe to share between
    threads; the lazily built multiplication table is a pure function of the
    presentation.
    """

    def __init__(self, moduli: Sequence[int], constants: Sequence[Sequence[Sequence[int]]],
                 name: Optional[str] = None):
        self.shape = GroupShape(tuple(moduli))
        self.moduli = self.shape.moduli
        self.name = name
        k = self.shape.rank
        if len(constants) != k or any(len(row) != k for row in constants):
            raise ShapeMismatch(f"structure-constant table must be {k}x{k}")
        table = []
        for row in constants:
            new_row = []
            for entry in row:
                if len(entry) != k:
                    raise ShapeMismatch(
                        f"structure constant {tuple(entry)} must have {k} coordinates"
                    )
                new_row.append(tuple(c % d for c, d in zip(entry, self.moduli)))
            table.append(tuple(new_row))
        self.constants: tuple[tuple[Element, ...], ...] = tuple(table)

        self.elements: tuple[Element, ...] = tuple(
            itertools.product(*(range(d) for d in self.moduli))
        )
        self._index = {x: i for i, x in enumerate(self.elements)}
        self._nonzero_constants = [
            (i, j, c)
            for i, row in enumerate(self.constants)
            for j, c in enumerate(row)
            if any(c)
        ]
        self._mul_idx: Optional[list[list[int]]] = None
        self._cache: dict = {}

        self._check_well_defined()
        self._check_associative()

    # -- validation ---------------------------------------------------------

    def _check_well_defined(self):
        # Bilinearity forces d_i * c_ij = d_j * c_ij = 0, else the extension
        # would not be well defined on Z_{d_i} x Z_{d_j}.
        for i, row in enumerate(self.constants):
            for j, c in enumerate(row):
                for mult in (self.moduli[i], self.moduli[j]):
                    if any((mult * ct) % d for ct, d in zip(c, self.moduli)):
                        raise WellDefinednessViolation(
                            i, j, f"{mult} * {c} != 0 in the additive group"
                        )

    def _check_associative(self):
        # Both (xy)z and x(yz) are trilinear, so agreement on generator
        # triples extends to the whole ring.
        k = self.shape.rank
        for i in range(k):
            for j in range(k):
                c_ij = self.constants[i][j]
                for l in range(k):
                    left = self.multiply(c_ij, self.generator(l))
                    right = self.multiply(self.generator(i), self.constants[j][l])
                    if left != right:
                        raise AssociativityViolation(i, j, l, left, right)

    # -- basic queries ------------------------------------------------------

    @property
    def order(self) -> int:
        return self.shape.order

    @property
    def zero(self) -> Element:
        return (0,) * self.shape.rank

    def generator(self, i: int) -> Element:
        return tuple(1 if t == i else 0 for t in range(self.shape.rank))

    def is_commutative(self) -> bool:
        """True iff the multiplication is commutative (checked on generators)."""
        if "commutative" not in self._cache:
            self._cache["commutative"] = all(
                self.constants[i][j] == self.constants[j][i]
                for i in range(self.shape.rank)
                for j in range(i)
            )
        return self._cache["commutative"]

    def check_element(self, x: Element) -> Element:
        if len(x) != self.shape.rank or any(
            not (0 <= c < d) for c, d in zip(x, self.moduli)
        ):
            raise ShapeMismatch(f"{x} is not an element of this ring")
        return x

    def index_of(self, x: Element) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise ShapeMismatch(f"{x} is not an element of this ring") from None

    # -- arithmetic ---------------------------------------------------------

    def add(self, x: Element, y: Element) -> Element:
        self.check_element(x)
        self.check_element(y)
        return tuple((a + b) % d for a, b, d in zip(x, y, self.moduli))

    def neg(self, x: Element) -> Element:
        self.check_element(x)
        return tuple((-a) % d for a, d in zip(x, self.moduli))

    def sub(self, x: Element, y: Element) -> Element:
        self.check_element(x)
        self.check_element(y)
        return tuple((a - b) % d for a, b, d in zip(x, y, self.moduli))

    def scale(self, n: int, x: Element) -> Element:
        self.check_element(x)
        return tuple((n * a) % d for a, d in zip(x, self.moduli))

    def multiply(self, x: Element, y: Element) -> Element:
        """Bilinear extension: (sum a_i e_i)(sum b_j e_j) = sum a_i b_j c_ij."""
        self.check_element(x)
        self.check_element(y)
        acc = [0] * self.shape.rank
        for i, j, c in self._nonzero_constants:
            f = x[i] * y[j]
            if f:
                for t, ct in enumerate(c):
                    if ct:
                        acc[t] += f * ct
        return tuple(a % d for a, d in zip(acc, self.moduli))

    def commutator(self, x: Element, y: Element) -> Element:
        """The additive commutator xy - yx."""
        return self.sub(self.multiply(x, y), self.multiply(y, x))

    # -- index-based fast paths --------------------------------------------

    def mul_table(self) -> list[list[int]]:
        """Full multiplication table on element indices (built lazily)."""
        if self._mul_idx is None:
            elems = self.elements
            index = self._index
            mul = self.multiply
            self._mul_idx = [[index[mul(x, y)] for y in elems] for x in elems]
        return self._mul_idx

    def sub_idx(self, i: int, j: int) -> int:
        x, y = self.elements[i], self.elements[j]
        return self._index[tuple((a - b) % d for a, b, d in zip(x, y, self.moduli))]

    def commutator_idx_row(self, i: int) -> list[int]:
        """Indices of [x_i, y] for every y, in element order."""
        n = self.order
        if n <= _TABLE_CACHE_LIMIT:
            mt = self.mul_table()
            row = mt[i]
            return [self.sub_idx(row[j], mt[j][i]) for j in range(n)]
        x = self.elements[i]
        index = self._index
        moduli = self.moduli
        out = []
        for y in self.elements:
            xy = self.multiply(x, y)
            yx = self.multiply(y, x)
            out.append(index[tuple((a - b) % d for a, b, d in zip(xy, yx, moduli))])
        return out

    # -- equality / display ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteRing):
            return NotImplemented
        return self.moduli == other.moduli and self.constants == other.constants

    def __hash__(self):
        return hash((self.moduli, self.constants))

    def __repr__(self):
        label = self.name or "ring"
        return f"<FiniteRing {label} Z{'xZ'.join(str(d) for d in self.moduli)}>"


def validate_ring(moduli: Sequence[int], constants, name: Optional[str] = None) -> FiniteRing:
    """Validate a structure-constant presentation and return the ring.

    Raises WellDefinednessViolation, AssociativityViolation or OrderOverflow
    when the presentation is not a ring within the enumeration cap.
    """
    return FiniteRing(moduli, constants, name=name)


def direct_product(r1: FiniteRing, r2: FiniteRing) -> FiniteRing:
    """Componentwise product ring on the concatenated coordinate groups."""
    if r1.order * r2.order > MAX_ORDER:
        raise OrderOverflow(
            f"product order {r1.order * r2.order} exceeds cap {MAX_ORDER}"
        )
    k1, k2 = r1.shape.rank, r2.shape.rank
    moduli = r1.moduli + r2.moduli
    zero1, zero2 = (0,) * k1, (0,) * k2
    constants = []
    for i in range(k1 + k2):
        row = []
        for j in range(k1 + k2):
            if i < k1 and j < k1:
                row.append(r1.constants[i][j] + zero2)
            elif i >= k1 and j >= k1:
                row.append(zero1 + r2.constants[i - k1][j - k1])
            else:
                row.append(zero1 + zero2)
        constants.append(row)
    name = None
    if r1.name and r2.name:
        name = f"{r1.name}x{r2.name}"
    return FiniteRing(moduli, constants, name=name)


# -- catalog ----------------------------------------------------------------

def _matrix_units(positions: list[tuple[int, int]], n: int, name: str) -> FiniteRing:
    """Ring spanned by matrix units E_pq over Z_n, for the given positions."""
    k = len(positions)
    where = {pq: t for t, pq in enumerate(positions)}
    constants = []
    for (p, q) in positions:
        row = []
        for (u, v) in positions:
            coords = [0] * k
            if q == u and (p, v) in where:
                coords[where[(p, v)]] = 1
            row.append(coords)
        constants.append(row)
    return FiniteRing([n] * k, constants, name=name)


def catalog(name: str, *params: int) -> FiniteRing:
    """Construct a named test ring.

    Known names: ``E4``; ``zero_ring(n)``; ``cyclic_ring(n)``;
    ``triangular(n, s)`` for upper-triangular s x s matrices over Z_n;
    ``full_matrix(n, s)`` for all s x s matrices over Z_n.
    """
    if name == "E4":
        if params:
            raise UnknownCatalogName("E4 takes no parameters")
        return FiniteRing(
            (2, 2),
            [[(1, 0), (1, 0)], [(0, 1), (0, 1)]],
            name="E4",
        )
    if name == "zero_ring":
        (n,) = params
        return FiniteRing((n,), [[(0,)]], name=f"zero_ring({n})")
    if name == "cyclic_ring":
        (n,) = params
        return FiniteRing((n,), [[(1,)]], name=f"cyclic_ring({n})")
    if name == "triangular":
        n, s = params
        positions = [(p, q) for p in range(s) for q in range(p, s)]
        return _matrix_units(positions, n, f"triangular({n},{s})")
    if name == "full_matrix":
        n, s = params
        positions = [(p, q) for p in range(s) for q in range(s)]
        return _matrix_units(positions, n, f"full_matrix({n},{s})")
    raise UnknownCatalogName(f"no catalog ring named {name!r}")


# -- ring files ---------------------------------------------------------------

def parse_ring_file(text: str, name: Optional[str] = None) -> FiniteRing:
    """Parse the line-oriented ring-file format.

    Format: a ``moduli: d1 ... dk`` line, then exactly k^2 lines
    ``c i j : a1 ... ak`` (1-based generator indices, any order).  ``#``
    starts a comment, blank lines are ignored, coordinates are reduced
    modulo the moduli.
    """
    moduli: Optional[tuple[int, ...]] = None
    entries: dict[tuple[int, int], tuple[int, ...]] = {}
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        last_line = lineno
        if moduli is None:
            if not line.startswith("moduli:"):
                raise RingSyntaxError(lineno, "expected 'moduli: d1 d2 ... dk'")
            try:
                moduli = tuple(int(p) for p in line[len("moduli:"):].split())
            except ValueError:
                raise RingSyntaxError(lineno, "moduli must be integers") from None
            if not moduli:
                raise RingSyntaxError(lineno, "need at least one modulus")
            continue
        k = len(moduli)
        if len(entries) == k * k:
            raise RingSyntaxError(lineno, "unexpected line after full constant table")
        head, sep, tail = line.partition(":")
        if not sep:
            raise RingSyntaxError(lineno, "expected 'c i j : a1 ... ak'")
        parts = head.split()
        if len(parts) != 3 or parts[0] != "c":
            raise RingSyntaxError(lineno, "expected 'c i j : a1 ... ak'")
        try:
            i, j = int(parts[1]), int(parts[2])
            coords = tuple(int(p) for p in tail.split())
        except ValueError:
            raise RingSyntaxError(lineno, "indices and coordinates must be integers") from None
        if not (1 <= i <= k and 1 <= j <= k):
            raise RingSyntaxError(lineno, f"generator pair ({i}, {j}) out of range 1..{k}")
        if len(coords) != k:
            raise RingSyntaxError(lineno, f"expected {k} coordinates, got {len(coords)}")
        if (i, j) in entries:
            raise RingSyntaxError(lineno, f"duplicate entry for pair ({i}, {j})")
        entries[(i, j)] = coords
    if moduli is None:
        raise RingSyntaxError(last_line or 1, "missing 'moduli:' line")
    k = len(moduli)
    if len(entries) != k * k:
        missing = [
            f"({i}, {j})"
            for i in range(1, k + 1)
            for j in range(1, k + 1)
            if (i, j) not in entries
        ]
        raise RingSyntaxError(
            last_line or 1, f"missing structure constants for {', '.join(missing)}"
        )
    constants = [[entries[(i + 1, j + 1)] for j in range(k)] for i in range(k)]
    return FiniteRing(moduli, constants, name=name)


def serialize_ring(ring: FiniteRing) -> str:
    """Canonical ring-file text; parse(serialize(r)) reproduces r exactly."""
    lines = ["moduli: " + " ".join(str(d) for d in ring.moduli)]
    k = ring.shape.rank
    for i in range(k):
        for j in range(k):
            coords = " ".join(str(c) for c in ring.constants[i][j])
            lines.append(f"c {i + 1} {j + 1} : {coords}")
    return "\n".join(lines) + "\n"


# -- randomized presentations -------------------------------------------------

def random_ring(rng: random.Random, max_order: int = 64) -> FiniteRing:
    """Rejection-sample a valid structure-constant ring of order <= max_order.

    Moduli are drawn equal (well-definedness is then automatic) and the
    table is biased toward zero entries so that associativity survives
    often enough for the sampler to be quick.
    """
    while True:
        d = rng.choice((2, 2, 3, 4))
        max_k = 1
        while d ** (max_k + 1) <= max_order:
            max_k += 1
        # weight toward rank 2 and 3, where non-commutative samples live
        k = rng.choice([c for c in (1, 2, 2, 3, 3) if c <= min(3, max_k)])
        moduli = (d,) * k
        constants = []
        for _ in range(k * k):
            if rng.random() < 0.55:
                constants.append((0,) * k)
            else:
                constants.append(tuple(rng.randrange(d) for _ in range(k)))
        table = [constants[i * k:(i + 1) * k] for i in range(k)]
        try:
            return FiniteRing(moduli, table)
        except (WellDefinednessViolation, AssociativityViolation):
            continue


def random_rings(seed: int, count: int, max_order: int = 64) -> list[FiniteRing]:
    """Deterministic batch of random_ring draws for property suites."""
    rng = random.Random(seed)
    return [random_ring(rng, max_order=max_order) for _ in range(count)]
