"""Exception hierarchy.

Two families matter to callers (and fix the CLI exit codes): precondition
violations on inputs (exit 2) and failed internal verifications that should
be unreachable on correct data (exit 3).
"""


class SuperorbitError(Exception):
    pass


class PreconditionError(SuperorbitError):
    """The input violates a documented precondition."""


class VerificationError(SuperorbitError):
    """An exact self-check failed; indicates a bug or inconsistent data."""


class GradingViolation(PreconditionError):
    pass


class InconsistentAntisymmetry(PreconditionError):
    pass


class JacobiViolation(PreconditionError):
    def __init__(self, triple, residual, message=None):
        self.triple = triple
        self.residual = residual
        super().__init__(
            message
            or "super-Jacobi identity fails on basis triple %s with residual %s"
            % (triple, residual)
        )


class DimensionMismatch(PreconditionError):
    pass


class NotAnIdeal(PreconditionError):
    pass


class NotGraded(PreconditionError):
    pass


class NotNilpotent(PreconditionError):
    pass


class PreconditionFailed(PreconditionError):
    pass


class TargetNotIdeal(PreconditionError):
    pass


class LambdaNotNonnegative(PreconditionError):
    pass


class NotPositiveDefinite(PreconditionError):
    pass


class NotCliffordType(PreconditionError):
    pass


class NegativeCentralValue(PreconditionError):
    pass


class NotAdmissible(PreconditionError):
    pass


class VerificationFailed(VerificationError):
    pass
