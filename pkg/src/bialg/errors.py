"""Exception types shared across the package."""


class MissingVariableError(KeyError):
    """Evaluation point does not assign every variable of an expression."""


class AntisymmetryError(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


class NotALieAlgebraError(ValueError):
    pass


class ParametricInputError(ValueError):
    """A numeric-only operation received symbolic entries."""


class ParametricPivotError(ValueError):
    pass


class JacobiViolation(ValueError):
    """Raised when a Jacobi-type identity fails.

    ``identity`` is one of ``"jacobi"``, ``"dual_jacobi"`` or ``"mixed"``;
    ``index`` is the 1-based index tuple of the first nonzero residual.
    """

    def __init__(self, identity, index, value):
        self.identity = identity
        self.index = index
        self.value = value
        super().__init__(f"{identity} identity violated at {index}: residual {value}")


class ConstraintViolation(ValueError):
    pass


class SchemaError(ValueError):
    """Malformed JSON input; ``pointer`` is an RFC 6901 JSON pointer."""

    def __init__(self, pointer, message):
        self.pointer = pointer
        super().__init__(f"{pointer or '/'}: {message}")
