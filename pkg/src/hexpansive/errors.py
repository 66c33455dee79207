"""Exception hierarchy shared by every layer of the package."""


class HExpansiveError(Exception):
    """Base class. ``code`` is a stable short identifier used by the CLI."""

    code = "error"


class InvalidScalarError(HExpansiveError, ValueError):
    code = "invalid-scalar"


class DimensionError(HExpansiveError, ValueError):
    code = "dimension"


class SingularMatrixError(HExpansiveError, ArithmeticError):
    code = "singular"


class NoSolutionError(HExpansiveError, ArithmeticError):
    code = "no-solution"


class NotHermitianError(HExpansiveError, ValueError):
    code = "not-hermitian"


class InvalidInnerProductError(HExpansiveError, ValueError):
    code = "invalid-inner-product"


class ContainmentError(HExpansiveError, ValueError):
    code = "containment"


class PreconditionError(HExpansiveError, ValueError):
    code = "precondition"


class DegenerateConfigurationError(HExpansiveError, ArithmeticError):
    code = "degenerate-configuration"


class NotExpansiveError(HExpansiveError):
    """Raised when the defect ``A*HA - H`` is not positive semidefinite."""

    code = "not-expansive"

    def __init__(self, inertia, message=None):
        self.inertia = inertia
        super().__init__(
            message
            or f"pair is not H-expansive: defect inertia (pos, neg, zero) = "
            f"({inertia.pos}, {inertia.neg}, {inertia.zero})"
        )


class TheoremViolationError(HExpansiveError, AssertionError):
    """An identity of the structure theorem failed on a computed decomposition."""

    code = "theorem-violation"

    def __init__(self, report, message=None):
        self.report = report
        failed = ", ".join(c.name for c in report.checks if not c.passed)
        super().__init__(message or f"structure identities failed: {failed}")


class InvalidTransformError(HExpansiveError, ValueError):
    code = "invalid-transform"


class CayleySingularError(HExpansiveError, ArithmeticError):
    """I + H^-1 W is singular; the caller should resample W."""

    code = "cayley-singular"


class GenerationFailureError(HExpansiveError, RuntimeError):
    code = "generation-failure"


class ParseError(HExpansiveError, ValueError):
    """Input document problem. ``location`` points into the document."""

    def __init__(self, code, message, location=""):
        self.code = code
        self.location = location
        where = f" at {location}" if location else ""
        super().__init__(f"{code}{where}: {message}")
