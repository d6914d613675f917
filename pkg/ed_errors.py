"""
Error kinds raised by the elemdiv library.

Every error derives from ElemDivError so the CLI can map the whole family
onto exit codes in one place.
"""
from typing import Optional


class ElemDivError(Exception):
    """Base class for all library errors."""


# --- Ring layer ---

class RingError(ElemDivError):
    pass


class MixedRings(RingError):
    pass


class DivisionByZero(RingError):
    pass


class UnsupportedCapability(RingError):
    pass


class ZeroInput(RingError):
    pass


class InvalidParameters(RingError):
    pass


class NotAUnit(RingError):
    pass


# --- Element grammar ---

class ElementParseError(ElemDivError):
    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ExponentTooLarge(ElementParseError):
    pass


# --- Matrices and certificates ---

class DimensionMismatch(ElemDivError):
    pass


class IndexOutOfRange(ElemDivError):
    pass


# --- Reductions ---

class NotUnimodular(ElemDivError):
    pass


class InvalidWitness(ElemDivError):
    pass


class ZeroC(ElemDivError):
    pass


class ReductionFailed(ElemDivError):
    """
    The reduction could not reach a canonical diagonal form.

    Carries the partially reduced matrix and the certificate issued so far;
    this is a reportable outcome for rings outside the reduction's hypotheses.
    """

    def __init__(self, message: str, partial_matrix=None, certificate=None):
        super().__init__(message)
        self.partial_matrix = partial_matrix
        self.certificate = certificate


# --- Range probes ---

class NotTwoSidedUnimodular(ElemDivError):
    pass


class SearchExhausted(ElemDivError):
    pass


class HypothesisFailed(ElemDivError):
    pass


class IdentityViolation(ElemDivError):
    def __init__(self, identity: str, detail: Optional[str] = None):
        message = f"identity violated: {identity}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)
        self.identity = identity
