"""Quadrature rules shared by the analytic and simulated paths.

Averages over a phase distribution use the trapezoid rule when the
integrand is periodic over the full circle (spectrally accurate) and
Gauss-Legendre otherwise. ``adaptive`` doubles the order until successive
results agree.
"""

import logging
from collections.abc import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss

from wigner.lib.config import resolve

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ORDER = 4096
START_ORDER = 8


def gauss_legendre(order, lower, upper):
    """Nodes and weights of an *order*-point rule on ``[lower, upper]``."""
    x, w = leggauss(order)
    half = 0.5 * (upper - lower)
    return half * x + 0.5 * (upper + lower), half * w


def circle_average_nodes(order):
    """Trapezoid nodes on ``[0, 2π)`` with weights summing to one."""
    nodes = 2.0 * np.pi * np.arange(order) / order
    return nodes, np.full(order, 1.0 / order)


def adaptive(
    evaluate: Callable[[int], float | np.ndarray],
    *,
    tol: float | None = None,
    max_order: int | None = None,
    start_order: int = START_ORDER,
) -> tuple[float | np.ndarray, int]:
    """Evaluate a quadrature at doubling orders until it converges.

    *evaluate* takes an order and returns a number or an array; convergence
    is measured in the max norm. Returns the last value and its order. If
    the order cap is reached first, the last value is returned with a
    warning.
    """
    tol = resolve(tol, "WIGNER_QUADRATURE_TOL", DEFAULT_TOL)
    max_order = resolve(
        max_order, "WIGNER_QUADRATURE_MAX_ORDER", DEFAULT_MAX_ORDER
    )

    order = start_order
    previous = evaluate(order)
    while order < max_order:
        order *= 2
        current = evaluate(order)
        if np.max(np.abs(np.asarray(current) - previous)) < tol:
            logger.debug("Quadrature converged at order %d", order)
            return current, order
        previous = current

    logger.warning(
        "Quadrature did not reach tol=%.1e by order %d", tol, max_order
    )
    return previous, order
