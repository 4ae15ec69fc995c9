"""Exception types shared across the package.

Errors fall into three families: malformed input (tables, files, data
bundles), violated operation preconditions (non-normal bands, incomparable
objects), and InternalInconsistency, which marks a failed self-check and
always indicates a bug rather than bad input.
"""


class NormcatError(Exception):
    """Base class for all errors raised by this package."""


class MalformedTable(NormcatError):
    """A Cayley table has the wrong shape or out-of-range entries."""


class NotIdempotent(NormcatError):
    def __init__(self, element):
        super().__init__(f"element {element} is not idempotent")
        self.element = element


class NotAssociative(NormcatError):
    def __init__(self, witness):
        x, y, z = witness
        super().__init__(f"(x*y)*z != x*(y*z) for (x, y, z) = ({x}, {y}, {z})")
        self.witness = witness


class NotNormal(NormcatError):
    """The band fails the normality identity abca = acba."""


class InternalInconsistency(NormcatError):
    """A runtime self-check failed; this is a bug, never expected on valid input."""


class SizeZero(NormcatError):
    """A generator was asked for an empty carrier."""


class OrderTooLarge(NormcatError):
    """Enumeration requested beyond the supported order cap."""


class MalformedStructureData(NormcatError):
    """A strong-semilattice bundle is structurally broken (ids, shapes, keys)."""


class NotCommutative(NormcatError):
    """The indexing band of a strong semilattice must be commutative."""


class InvalidComponent(NormcatError):
    """A component of a strong semilattice is not a rectangular band."""


class HomNotFunctorial(NormcatError):
    """Structure maps violate identity or composition requirements."""


class HomNotMorphism(NormcatError):
    """A structure map is not a homomorphism of rectangular bands."""


class ProductEscapesComponent(NormcatError):
    """A glued product landed outside its target component; data is invalid."""


class RoundtripMismatch(NormcatError):
    def __init__(self, cell, got, expected):
        i, j = cell
        super().__init__(
            f"recomposed table differs at ({i},{j}): got {got}, expected {expected}"
        )
        self.cell = cell
        self.got = got
        self.expected = expected


class NotComposable(NormcatError):
    """Codomain of the first morphism is not the domain of the second."""


class NotIncluded(NormcatError):
    """The requested inclusion does not exist (carrier is not a subset)."""


class DifferentHomSets(NormcatError):
    """The two morphisms do not live in the same hom-set."""


class FactorizationInvariantViolated(NormcatError):
    """The closed-form factorization failed its checks (diagnostic)."""


class MalformedCone(NormcatError):
    """A cone candidate is missing a component or has a mistyped one."""


class BudgetExceeded(NormcatError):
    """An exhaustive search would exceed the configured combination budget."""


class PresentationInvalid(NormcatError):
    """A finite-category presentation violates its basic laws."""


class ParseError(NormcatError):
    def __init__(self, line, reason):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class NonUniqueRetractionWarning(UserWarning):
    """An inclusion has several right inverses (possible only off normal bands)."""
