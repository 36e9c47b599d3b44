"""Exception types raised by the core library.

Every error carries a short machine-readable ``code`` so the CLI can echo it
in reports without parsing messages.
"""

from __future__ import annotations


class MoriconeError(ValueError):
    """Base class for domain errors (CLI exit code 3)."""

    code = "domain-error"

    def __init__(self, message: str, code: str | None = None) -> None:
        super().__init__(message)
        if code is not None:
            self.code = code


class GenusError(MoriconeError):
    code = "genus-too-small"


class CoefficientCountError(MoriconeError):
    code = "wrong-coefficient-count"


class GenusMismatchError(MoriconeError):
    code = "genus-mismatch"


class AlphaRangeError(MoriconeError):
    code = "alpha-out-of-range"


class WitnessUnavailableError(MoriconeError):
    """Raised when a witness family does not exist for the requested genus."""

    code = "no-witness"


class IndexRangeError(MoriconeError):
    code = "index-out-of-range"


class NotMoriwakiError(MoriconeError):
    code = "not-an-M-divisor"


class ConfigError(MoriconeError):
    code = "invalid-config"


class InternalInconsistency(RuntimeError):
    """A certificate that the theory guarantees could not be produced."""

    code = "internal-inconsistency"
