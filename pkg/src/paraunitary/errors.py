"""Exception hierarchy shared by every module in the package."""


class ExactAlgebraError(Exception):
    """Base class for all errors raised by this package."""


class IncompatibleRings(ExactAlgebraError):
    """Operands live in different coefficient rings; use embed() first."""


class NoSquareRoot(ExactAlgebraError):
    """The requested square root does not exist in the ring."""


class NoSuchRoot(ExactAlgebraError):
    """The requested root of unity does not exist in the ring."""


class ZeroAssigned(ExactAlgebraError):
    """Zero was assigned to a variable during substitution."""


class NonInvertibleValue(ZeroAssigned):
    """A non-invertible value was assigned to a variable with negative exponent."""


class DimensionMismatch(ExactAlgebraError):
    """Matrix dimensions do not conform."""


class NotSquare(ExactAlgebraError):
    """A square matrix was required."""


class NotScalar(ExactAlgebraError):
    """A scalar (variable-free) matrix was required."""


class ZeroCoefficient(ExactAlgebraError):
    """A zero coefficient makes the combination a zero-divisor, not a unit."""


class NotOrthonormal(ExactAlgebraError):
    """Vectors fail the orthonormality requirement v_i v_j* = delta_ij."""


class NotOrthogonal(ExactAlgebraError):
    """Vectors fail pairwise orthogonality."""


class IsotropicVector(ExactAlgebraError):
    """A basis vector has self inner product zero over the finite field."""


class NotParaunitary(ExactAlgebraError):
    """The input matrix is not paraunitary."""


class NotPseudoParaunitary(ExactAlgebraError):
    """The input matrix is not pseudo-paraunitary."""


class NotCompleteSet(ExactAlgebraError):
    """The idempotent family fails a completeness/orthogonality/symmetry clause."""


class BadCharacteristic(ExactAlgebraError):
    """The field characteristic divides the group order."""


class NotUnitModulus(ExactAlgebraError):
    """A coefficient fails a a* = 1."""


class NotUnitVector(ExactAlgebraError):
    """A vector fails v* v = 1."""


class NegativeExponent(ExactAlgebraError):
    """Monomial exponents must be non-negative here."""


class NotLatinSquare(ExactAlgebraError):
    """The block arrangement grid is not a Latin square over the member indices."""


class SizeMismatch(ExactAlgebraError):
    """Inputs must have the same size."""


class VariableCollision(ExactAlgebraError):
    """Fresh variables collide with variables already in use."""


class NotFullyAssigned(ExactAlgebraError):
    """Every variable must receive a value for specialization."""


class ParseError(ExactAlgebraError):
    """Malformed textual or JSON input."""


class InternalCheckError(ExactAlgebraError):
    """A constructor produced output violating its own postcondition (a bug)."""
