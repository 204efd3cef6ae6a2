"""Tests for the shared quadrature rules."""

import logging
import math

import numpy as np
import pytest

from wigner.lib.quadrature import (
    adaptive,
    circle_average_nodes,
    gauss_legendre,
)


def test_gauss_legendre_is_exact_for_low_degree_polynomials():
    x, w = gauss_legendre(3, 0.0, 2.0)
    assert np.dot(w, x**3) == pytest.approx(4.0, abs=1e-13)
    assert w.sum() == pytest.approx(2.0)


def test_circle_average_nodes():
    phases, weights = circle_average_nodes(16)
    assert weights.sum() == pytest.approx(1.0)
    assert phases[0] == 0.0
    assert phases[-1] < 2 * math.pi
    assert np.dot(weights, np.cos(phases) ** 2) == pytest.approx(0.5)


class TestAdaptive:
    def test_stops_once_successive_orders_agree(self):
        value, order = adaptive(lambda order: 1.0, tol=1e-12)
        assert value == 1.0
        assert order == 16

    def test_converges_on_array_values(self):
        def evaluate(order):
            phases, weights = circle_average_nodes(order)
            return np.array([np.dot(weights, np.exp(np.cos(phases)))] * 2)

        value, _ = adaptive(evaluate, tol=1e-12)
        # Average of e^cos over the circle is I0(1).
        np.testing.assert_allclose(value, 1.2660658777520082, atol=1e-12)

    def test_warns_at_order_cap(self, caplog):
        with caplog.at_level(logging.WARNING, logger="wigner"):
            value, order = adaptive(float, tol=1e-12, max_order=32)
        assert order == 32
        assert value == 32.0
        assert "did not reach" in caplog.text

    def test_falls_back_to_settings(self, settings):
        settings.WIGNER_QUADRATURE_MAX_ORDER = 16
        _, order = adaptive(float)
        assert order == 16
