"""
Exception types shared by the arithmetic, cusp and Hecke packages
"""


class ArgumentError(ValueError):
    """Input violates an operation's precondition"""


class SingularMatrixError(ArgumentError):
    """A matrix that must be invertible over Q is singular"""


class BudgetExceededError(RuntimeError):
    """An exhaustive enumeration would exceed its configured budget"""


class BranchTrackingError(ArithmeticError):
    """Square-root branch could not be followed along the tracking path"""


class DegenerateSpectrumError(ArithmeticError):
    """Triangular eigenvector solve hit a repeated diagonal entry with a nonzero right-hand side"""
