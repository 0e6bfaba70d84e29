"""Exact commutator-distribution calculator for finite rings.

The package represents a finite ring by structure constants over a product
of cyclic groups, computes the exact probability that the commutator
xy - yx of a random pair equals a chosen target element, verifies the
centralizer-sum identities, bounds, graph edge counts and isoclinism
invariance that govern that distribution, and exposes the whole thing
through the ``ringprob`` command-line tool.
"""

from .errors import (
    AssociativityViolation,
    CommutativeRingError,
    ElementSyntaxError,
    InconsistencyError,
    InvalidModuli,
    OrderOverflow,
    RingError,
    RingSyntaxError,
    SearchBudgetExceeded,
    ShapeMismatch,
    UnknownCatalogName,
    WellDefinednessViolation,
    WitnessInvalid,
    ZeroTargetError,
)
from .rings import (
    Element,
    FiniteRing,
    GroupShape,
    MAX_ORDER,
    catalog,
    direct_product,
    format_element,
    parse_element,
    parse_ring_file,
    random_ring,
    random_rings,
    serialize_ring,
    validate_ring,
)

__version__ = "0.1.0"
