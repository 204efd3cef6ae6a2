"""Errors raised by the simulation library.

Commands map these onto exit codes: ``ConfigurationError`` is an invalid
configuration (1) and ``TruncationError`` a numerical failure (2).
"""


class WignerError(Exception):
    """Base class for simulation errors."""


class ConfigurationError(WignerError, ValueError):
    """A parameter is outside the range the model accepts."""


class TruncationError(WignerError, ArithmeticError):
    """Probability mass leaked out of a truncated Fock space.

    ``loss`` is the measured deficit and ``tail_tol`` the tolerance it
    exceeded.
    """

    def __init__(self, message, *, loss, tail_tol):
        super().__init__(f"{message} (loss={loss:.3e}, tail_tol={tail_tol:.1e})")
        self.loss = loss
        self.tail_tol = tail_tol


class ScanPointError(WignerError):
    """A grid point failed; the original error is chained as ``__cause__``."""

    def __init__(self, r_idx, phi_idx, beta):
        super().__init__(
            f"Scan failed at r_idx={r_idx}, phi_idx={phi_idx} "
            f"(beta={beta.real:+.6f}{beta.imag:+.6f}j)"
        )
        self.r_idx = r_idx
        self.phi_idx = phi_idx
        self.beta = beta


class OracleMismatchError(WignerError, ArithmeticError):
    """Simulated and analytic parity values disagree beyond tolerance."""
