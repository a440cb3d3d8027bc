class EdahaError(Exception):
    """
    Base exception for all custom errors raised by the edaha library and CLI.

    Catching this exception will catch any error originating from within this project,
    distinguishing it from built-in Python errors or third-party library errors.
    """

    pass


# ==============================================================================
# Configuration Errors
# ==============================================================================


class ConfigError(EdahaError):
    """
    Represents an error found in the user's configuration file (config.toml).

    This is typically raised by the ConfigLoader when parsing or validation fails.
    """

    pass


class ExpressionSyntaxError(EdahaError):
    """An expression passed to the `eval` mini-language could not be parsed."""

    def __init__(self, text: str, details: str = ""):
        self.text = text
        message = f"Could not parse expression '{text}'."
        if details:
            message += f" Details: {details}"
        super().__init__(message)


# ==============================================================================
# Exact Algebra Errors
# ==============================================================================


class InvalidFraction(EdahaError):
    """
    A formal fraction violates the numerator or denominator grammar.

    Numerators must have no Q-degree-0 part and denominator vectors must be nonzero.
    """

    pass


class NotAUnit(EdahaError):
    """A ring element with more than one pexp term was asked for its inverse."""

    def __init__(self, term_count: int):
        self.term_count = term_count
        super().__init__(
            f"Only single-term ring elements are invertible, got {term_count} terms."
        )


# ==============================================================================
# Numeric Errors
# ==============================================================================


class NumericError(EdahaError):
    """Base class for failures of the arbitrary precision evaluation layer."""

    pass


class OnUnitCircle(NumericError):
    """A q-Pochhammer parameter sits on (or too close to) the unit circle."""

    def __init__(self, modulus: float):
        self.modulus = modulus
        super().__init__(
            f"Pochhammer parameter with modulus {modulus:.6g} is too close to the unit circle."
        )


class NearUnitCircle(NumericError):
    """No admissible sample point could be drawn for the requested denominators."""

    def __init__(self, attempts: int):
        self.attempts = attempts
        super().__init__(
            f"Could not draw a sample point away from |p^a s^b| = 1 after {attempts} attempts."
        )


class DidNotConverge(NumericError):
    """A truncated series or product failed to reach the requested tolerance."""

    def __init__(self, what: str, last_term: float, tol: float):
        self.what = what
        self.last_term = last_term
        self.tol = tol
        super().__init__(
            f"{what} did not converge: last term {last_term:.3e} exceeds tolerance {tol:.1e}."
        )


class TruncationUnstable(NumericError):
    """A partition sum or Nekrasov product changed when its truncation was enlarged."""

    def __init__(self, what: str, change: float, tol: float):
        self.what = what
        self.change = change
        super().__init__(
            f"{what} is not stable under truncation: change {change:.3e} > {tol:.1e}."
        )


# ==============================================================================
# Word and Relator Errors
# ==============================================================================


class FormalSymbolPresent(EdahaError):
    """An operation that needs concrete group elements received a formal letter."""

    def __init__(self, word: str):
        self.word = word
        super().__init__(f"Word '{word}' contains formal letters.")


class WordSyntaxError(EdahaError):
    """A free group word could not be parsed."""

    def __init__(self, text: str, token: str):
        super().__init__(f"Invalid token '{token}' in word '{text}'.")


class ArityMismatch(EdahaError):
    """A relator family was instantiated with the wrong number of words."""

    def __init__(self, relator: str, expected: int, got: int):
        super().__init__(
            f"Relator {relator} takes {expected} word(s), {got} were given."
        )


class CertificateFormatError(EdahaError):
    """A certificate fixture file is malformed."""

    def __init__(self, source: str, details: str):
        self.source = source
        super().__init__(f"Malformed certificate in '{source}': {details}")


# ==============================================================================
# Verification Errors
# ==============================================================================


class VerificationError(EdahaError):
    """
    Base class for identity checks that fail.

    Check functions normally record failures in their reports; these errors are
    raised only when a check cannot even produce a result.
    """

    pass


class ShiftMismatch(VerificationError):
    """Two twisted operators that should agree carry different parameter shifts."""

    def __init__(self, left: str, right: str):
        super().__init__(f"Shift mismatch: {left} != {right}")


class NotProportional(VerificationError):
    """No single-term scalar relates the two sides of a projective identity."""

    pass


class ScalarDependsOnPS(VerificationError):
    """The proportionality scalar of a projective identity depends on p or s."""

    pass
