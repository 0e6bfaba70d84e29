"""The target-avoiding non-commuting graph of a finite ring.

Vertices are all ring elements; distinct x and y are joined when neither
[x, y] nor [y, x] equals the chosen target r.  The edge count determines
the exact probability that a random pair's commutator equals r, with the
conversion depending only on whether r is zero and whether 2r is zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .commutators import pr_bruteforce
from .errors import OrderOverflow
from .rings import Element, FiniteRing, format_element

# The graph is dense, so the pair enumeration and edge list are O(|R|^2).
MAX_GRAPH_ORDER = 1024


@dataclass(frozen=True)
class NoncommGraph:
    """Immutable graph on all ring elements; edges as sorted index pairs."""

    ring: FiniteRing
    target: Element
    edges: tuple[tuple[int, int], ...]

    @property
    def vertices(self) -> tuple[Element, ...]:
        return self.ring.elements

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, x: Element, y: Element) -> bool:
        i, j = self.ring.index_of(x), self.ring.index_of(y)
        return (min(i, j), max(i, j)) in set(self.edges)

    def degree(self, x: Element) -> int:
        i = self.ring.index_of(x)
        return sum(1 for e in self.edges if i in e)


def build_graph(ring: FiniteRing, r: Element) -> NoncommGraph:
    """Exact edge set by pairwise enumeration."""
    if ring.order > MAX_GRAPH_ORDER:
        raise OrderOverflow(
            f"graph order {ring.order} exceeds cap {MAX_GRAPH_ORDER}"
        )
    r_idx = ring.index_of(r)
    n = ring.order
    edges = []
    rows = [ring.commutator_idx_row(i) for i in range(n)]
    for i in range(n):
        row = rows[i]
        for j in range(i + 1, n):
            if row[j] != r_idx and rows[j][i] != r_idx:
                edges.append((i, j))
    return NoncommGraph(ring, r, tuple(edges))


@dataclass(frozen=True)
class EdgeIdentityReport:
    """Both sides of the edge-count identity, and which case applied."""

    target: Element
    case: str  # "r=0" | "2r=0" | "2r!=0"
    edge_count: int
    probability: Fraction
    from_edges: Fraction

    @property
    def holds(self) -> bool:
        return self.probability == self.from_edges


def verify_edge_identity(ring: FiniteRing, r: Element) -> EdgeIdentityReport:
    """Check Pr_r against the edge count of the graph for r.

    r = 0:        Pr_r = 1 - 2|E| / |R|^2
    2r = 0, r!=0: Pr_r = 1 - 1/|R| - 2|E| / |R|^2
    2r != 0:      Pr_r = (1 - 1/|R| - 2|E| / |R|^2) / 2
    """
    graph = build_graph(ring, r)
    n = ring.order
    e = graph.edge_count
    pr = pr_bruteforce(ring, r)
    if r == ring.zero:
        case = "r=0"
        rhs = 1 - Fraction(2 * e, n * n)
    elif ring.scale(2, r) == ring.zero:
        case = "2r=0"
        rhs = 1 - Fraction(1, n) - Fraction(2 * e, n * n)
    else:
        case = "2r!=0"
        rhs = (1 - Fraction(1, n) - Fraction(2 * e, n * n)) / 2
    return EdgeIdentityReport(r, case, e, pr, rhs)


def export_dot(graph: NoncommGraph) -> str:
    """Deterministic DOT text: vertices then edges, in element order."""
    lines = ["graph G {"]
    for x in graph.vertices:
        lines.append(f'  "{format_element(x)}";')
    elems = graph.ring.elements
    for i, j in graph.edges:
        lines.append(f'  "{format_element(elems[i])}" -- "{format_element(elems[j])}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
