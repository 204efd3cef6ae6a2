"""Closed-form s-ordered quasidistributions and the lossy parity relation.

A parity measurement made through an overall efficiency ηT samples the
signal's quasidistribution at ordering ``s = 1 - 1/(ηT)``:

    P(β) = (1/ηT)·W(β/√(ηT); s)

These functions are the oracle the simulated photon statistics are
checked against. Surfaces are evaluated vectorized over complex arrays;
the scalar wrappers return floats.
"""

import math

import numpy as np
from scipy.special import comb, factorial

from wigner.lib.exceptions import ConfigurationError
from wigner.lib.quadrature import circle_average_nodes, gauss_legendre
from wigner.quasiprob.params import OrderingParam, SignalKind


def s_from_losses(channel):
    """Ordering parameter ``1 - 1/(ηT)`` seen through *channel*."""
    efficiency = channel.efficiency
    if efficiency <= 0:
        raise ConfigurationError("Ordering undefined for zero efficiency")
    return OrderingParam(1.0 - 1.0 / efficiency)


def _ordering(s):
    s = float(s)
    if s >= 1.0:
        raise ConfigurationError(
            f"s={s} has no regular quasidistribution for these states"
        )
    return s


def _coherent_form(alphas, alpha0, s):
    return (
        2.0
        / (math.pi * (1.0 - s))
        * np.exp(-2.0 * np.abs(alphas - alpha0) ** 2 / (1.0 - s))
    )


def _fock_form(alphas, n, s):
    """``((s+1)/(s-1))^n L_n(4|α|²/(1-s²))`` expanded as a polynomial.

    The expansion stays finite at s = -1, where it reduces to the Q
    function ``|α|^(2n) e^(-|α|²)/(π n!)``.
    """
    x = np.abs(alphas) ** 2
    total = np.zeros_like(x)
    for k in range(n + 1):
        total += (
            comb(n, k)
            / factorial(k)
            * (-1.0) ** (n + k)
            * np.power(s + 1.0, n - k)
            * (4.0 * x) ** k
            / (1.0 - s) ** (n + k)
        )
    return 2.0 / (math.pi * (1.0 - s)) * total * np.exp(-2.0 * x / (1.0 - s))


def quasidist_surface(spec, alphas, s, *, tol=None):
    """W(α; s) of *spec* at every point of the complex array *alphas*."""
    s = _ordering(s)
    alphas = np.asarray(alphas, dtype=complex)
    match spec.kind:
        case SignalKind.VACUUM:
            return _coherent_form(alphas, 0j, s)
        case SignalKind.COHERENT:
            return _coherent_form(alphas, spec.amplitude, s)
        case SignalKind.FOCK:
            return _fock_form(alphas, spec.n, s)
        case SignalKind.PHASE_DIFFUSED:
            rotated = alphas[None, ...]

            def evaluate(phases):
                centres = spec.amplitude * np.exp(1j * phases)
                centres = centres.reshape((-1,) + (1,) * alphas.ndim)
                return _coherent_form(rotated, centres, s)

            return spec.phase_noise.average(evaluate, tol=tol)
    raise ConfigurationError(f"Unknown signal kind {spec.kind}")


def analytic_quasidist(spec, alpha, s):
    """W(α; s) for *spec* at a single phase-space point."""
    return float(quasidist_surface(spec, complex(alpha), s))


def mode_mismatch_envelope(beta, gamma):
    """Gaussian envelope ``exp(-γ|β|²)`` centred on the origin."""
    if gamma < 0:
        raise ConfigurationError(f"Envelope rate gamma={gamma} < 0")
    envelope = np.exp(-gamma * np.abs(np.asarray(beta, dtype=complex)) ** 2)
    return float(envelope) if envelope.ndim == 0 else envelope


def predicted_surface(spec, betas, channel, gamma=0.0):
    """P(β) = (1/ηT)·W(β/√(ηT); 1 - 1/(ηT)) times the mismatch envelope."""
    efficiency = channel.efficiency
    s = s_from_losses(channel)
    betas = np.asarray(betas, dtype=complex)
    values = (
        quasidist_surface(spec, betas / math.sqrt(efficiency), s)
        / efficiency
    )
    if gamma:
        values = values * mode_mismatch_envelope(betas, gamma)
    return values


def predicted_p(spec, beta, channel, gamma=0.0):
    """Expected parity signal P(β) at one grid point."""
    return float(predicted_surface(spec, complex(beta), channel, gamma))


def normalization_check(
    spec, channel, radial_extent, quadrature_order=64, gamma=0.0
):
    """∫P(β) d²β over the disk ``|β| ≤ radial_extent``.

    Gauss-Legendre in the radius, trapezoid in the angle. Equals one up to
    the tail outside the disk when there is no envelope.
    """
    if radial_extent <= 0 or quadrature_order < 1:
        raise ConfigurationError(
            "Normalization needs a positive extent and quadrature order"
        )
    radii, radial_weights = gauss_legendre(quadrature_order, 0.0, radial_extent)
    phases, phase_weights = circle_average_nodes(2 * quadrature_order)
    betas = radii[:, None] * np.exp(1j * phases[None, :])
    values = predicted_surface(spec, betas, channel, gamma)
    return float(
        2.0
        * math.pi
        * np.einsum("r,p,rp->", radial_weights * radii, phase_weights, values)
    )
