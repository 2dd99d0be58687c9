"""Exception types shared across the package."""


class QubitSepError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(QubitSepError):
    """An input value is non-finite or structurally malformed."""


class ContractViolationError(QubitSepError):
    """An input violates a documented precondition, e.g. a non-Hermitian matrix."""


class UnsupportedFormError(QubitSepError):
    """The operation requires a diagonal correlation block."""


class InvalidStateError(QubitSepError):
    """The input is not a valid quantum state for the requested operation."""


class NoPhysicalBoostError(QubitSepError):
    """No boost with beta^2 < 1 solves the elimination conditions."""

    def __init__(self, message: str, beta: float | None = None):
        super().__init__(message)
        self.beta = beta


class BoostLimitError(NoPhysicalBoostError):
    """A required boost parameter reaches the light-speed limit |beta| -> 1."""


class UnsupportedDegeneracyError(QubitSepError):
    """Exactly coincident correlation coefficients make the solver ill-posed."""


class RelabelAxesError(QubitSepError):
    """The leading linear coefficient vanishes; permute axes before solving."""


class SolverInconsistencyError(QubitSepError):
    """A solved boost failed its own elimination certificate."""


class DegenerateTransformationError(QubitSepError):
    """A two-sided transformation produced a non-positive leading entry."""


class SamplingExhaustedError(QubitSepError):
    """Rejection sampling failed to produce a valid state within the attempt bound."""
