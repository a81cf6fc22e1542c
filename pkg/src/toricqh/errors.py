"""Exception hierarchy.  Every error a caller can trigger derives from ``ToricError``."""


class ToricError(ValueError):
    pass


# fan validation
class NonPrimitiveRay(ToricError):
    pass


class NonRegularCone(ToricError):
    pass


class NotAFan(ToricError):
    pass


class NotComplete(ToricError):
    pass


class NonIntegralDecomposition(AssertionError):
    """A lattice point has non-integral cone coordinates: impossible for regular cones."""


# lattice relations
class NotARelation(ToricError):
    pass


class NegativeComponent(ToricError):
    pass


# polytopes / convexity
class Unbounded(ToricError):
    pass


class NotInKahlerCone(ToricError):
    pass


class NotConvexAnticanonical(ToricError):
    pass


class NegativeHomogenizationExponent(ToricError):
    pass


class RaySetMismatch(ToricError):
    pass


class FanFileError(ToricError):
    """Parse error in a fan file; carries a 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        loc = f"line {line}, column {column}: " if line else ""
        super().__init__(loc + message)
