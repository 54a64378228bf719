"""Gauss-Legendre quadrature helpers shared by the special-function and action integrals.

Two strategies are provided.  ``gauss_legendre`` integrates a smooth
integrand on a finite interval by doubling the rule order until two
successive estimates agree.  ``adaptive`` splits the interval instead,
which is the better tool when the integrand has a localized feature
whose position is not known in advance.
"""

from __future__ import annotations

import heapq
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss


class ConvergenceError(Exception):
    """Quadrature failed to reach the requested tolerance.

    Attributes
    ----------
    estimate : float
        Best value obtained before giving up.
    error : float
        Error estimate attached to that value.
    """

    def __init__(self, message, estimate, error):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


@lru_cache(maxsize=64)
def _rule(order):
    nodes, weights = leggauss(order)
    return nodes, weights


def _panel(f, a, b, order):
    nodes, weights = _rule(order)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return half * float(np.dot(weights, f(mid + half * nodes)))


def gauss_legendre(f, a, b, rtol=1e-12, max_order=2048):
    """Integrate ``f`` over [a, b], doubling the Gauss-Legendre order.

    Parameters
    ----------
    f : callable
        Vectorized integrand, called with a numpy array of abscissae.
    a, b : float
        Integration limits, a < b.
    rtol : float
        Relative agreement required between successive orders.
    max_order : int
        Order cap; exceeded means ConvergenceError.

    Returns
    -------
    (value, error) : tuple of float
        Integral estimate and the last inter-order difference.
    """
    order = 16
    prev = _panel(f, a, b, order)
    while order <= max_order:
        order *= 2
        cur = _panel(f, a, b, order)
        err = abs(cur - prev)
        if err <= rtol * max(abs(cur), 1e-300):
            return cur, err
        prev = cur
    raise ConvergenceError(
        f"Gauss-Legendre order doubling stalled at order {max_order}",
        prev, err)


def adaptive(f, a, b, rtol=1e-12, atol=0.0, max_panels=2000):
    """Adaptive panel-splitting Gauss-Legendre integration on [a, b].

    Each panel carries a 15/31-point error estimate; the worst panel is
    bisected until the summed estimate meets ``rtol``/``atol``.
    """
    def make(lo, hi):
        coarse = _panel(f, lo, hi, 15)
        fine = _panel(f, lo, hi, 31)
        err = abs(fine - coarse)
        return (-err, lo, hi, fine, err)

    first = make(a, b)
    heap = [first]
    total, toterr = first[3], first[4]
    panels = 1
    while toterr > max(rtol * abs(total), atol) and panels < max_panels:
        _, lo, hi, val, err = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        left, right = make(lo, mid), make(mid, hi)
        total += left[3] + right[3] - val
        toterr += left[4] + right[4] - err
        heapq.heappush(heap, left)
        heapq.heappush(heap, right)
        panels += 2
    if toterr > max(rtol * abs(total), atol):
        raise ConvergenceError(
            f"adaptive quadrature exceeded {max_panels} panels",
            total, toterr)
    return total, toterr
