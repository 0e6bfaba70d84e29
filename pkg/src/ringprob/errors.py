"""Exception types shared across the package."""


class RingError(Exception):
    """Base class for all errors raised by this package."""


class InvalidModuli(RingError):
    """The additive-group moduli are malformed (need k >= 1, every d >= 2)."""


class OrderOverflow(RingError):
    """The requested structure exceeds the enumeration cap."""


class ShapeMismatch(RingError):
    """An element does not belong to the expected additive group."""


class WellDefinednessViolation(RingError):
    """A structure constant is not annihilated by its generators' moduli."""

    def __init__(self, i: int, j: int, detail: str = ""):
        self.i = i
        self.j = j
        msg = f"structure constant c[{i + 1}][{j + 1}] is not well defined"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class AssociativityViolation(RingError):
    """Generator products fail (e_i e_j) e_l = e_i (e_j e_l)."""

    def __init__(self, i: int, j: int, l: int, left, right):
        self.i = i
        self.j = j
        self.l = l
        self.left = left
        self.right = right
        super().__init__(
            f"associativity fails on generator triple ({i + 1}, {j + 1}, {l + 1}): "
            f"(e{i + 1}*e{j + 1})*e{l + 1} = {left} but e{i + 1}*(e{j + 1}*e{l + 1}) = {right}"
        )


class UnknownCatalogName(RingError):
    """No catalog constructor under that name."""


class RingSyntaxError(RingError):
    """A ring file does not follow the line format."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class ElementSyntaxError(RingError):
    """An element string is not a comma-separated coordinate list."""


class CommutativeRingError(RingError):
    """A check that needs a non-commutative ring got a commutative one."""


class ZeroTargetError(RingError):
    """A check that needs a nonzero target element got zero."""


class SearchBudgetExceeded(RingError):
    """The isoclinism search hit its node cap before exhausting the space."""


class WitnessInvalid(RingError):
    """A claimed isoclinism witness fails verification."""


class InconsistencyError(RingError):
    """Two internal computations of the same quantity disagree (a bug)."""
