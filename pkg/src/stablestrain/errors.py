"""Exception types raised by the kernels."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of a kernel (e.g. log1p at x <= -1)."""


class InadmissibleStateError(ValueError):
    """Deformation state with J <= 0, a singular Cauchy-Green tensor or similar."""


class PrecisionMismatchError(TypeError):
    """Scalars of different precisions were combined at an API boundary."""


class UndefinedRelativeError(ArithmeticError):
    """The reference value has zero norm, so a relative error is meaningless."""


class SingularJacobianError(RuntimeError):
    """Newton's linear solve hit a singular Jacobian."""
