"""Tricomi confluent hypergeometric function U(a,b,z) and Whittaker W_{kappa,mu}(z).

Only the real-argument slice needed for the bound states is covered:
b = 2 (the logarithmic case), a <= 2, z in [0, 200].  For a > 0 the
function is obtained from the real integral representation

    U(a,b,z) = 1/Gamma(a) * int_0^inf exp(-z t) t^(a-1) (1+t)^(b-a-1) dt,

with a power substitution absorbing the t^(a-1) endpoint singularity.
Non-positive integer a reduces to a generalized Laguerre polynomial.
Everything else is reached by the three-term recurrence in a, run
downward, which is the stable direction for our parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .quadrature import ConvergenceError, adaptive

__all__ = [
    "WhittakerParams",
    "laguerre",
    "reciprocal_gamma",
    "tricomi_u",
    "whittaker_w",
]

_INTEGER_TOL = 1e-12


@dataclass(frozen=True)
class WhittakerParams:
    """Index pair and argument for W_{kappa,mu}(z).

    Attributes
    ----------
    kappa : float
        First index; the bound states use kappa = (n+1)/2.
    mu : float
        Second index; this artifact supports mu = 1/2 only.
    z : float
        Argument, z >= 0 (z = 0 is handled as a limit).
    """

    kappa: float
    mu: float
    z: float


def laguerre(k, alpha, z):
    """Generalized Laguerre polynomial L_k^(alpha)(z) by three-term recurrence.

    Parameters
    ----------
    k : int
        Degree, k >= 0.
    alpha : float
        Superscript parameter.
    z : float
        Argument.

    Returns
    -------
    float
    """
    if k < 0 or k != int(k):
        raise ValueError(f"degree must be a non-negative integer, got {k}")
    if not (math.isfinite(alpha) and math.isfinite(z)):
        raise ValueError("non-finite parameter")
    k = int(k)
    if k == 0:
        return 1.0
    prev, cur = 1.0, 1.0 + alpha - z
    for j in range(2, k + 1):
        prev, cur = cur, ((2 * j - 1 + alpha - z) * cur - (j - 1 + alpha) * prev) / j
    return cur


def reciprocal_gamma(x):
    """1/Gamma(x), finite for all real x (zero at the poles of Gamma)."""
    if x > 0:
        if x > 170:
            return math.exp(-math.lgamma(x))
        return 1.0 / math.gamma(x)
    if abs(x - round(x)) < _INTEGER_TOL:
        return 0.0  # Gamma pole at 0, -1, -2, ...
    # reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
    sign = 1.0 if math.sin(math.pi * x) > 0 else -1.0
    return sign * math.exp(math.lgamma(1.0 - x)
                           + math.log(abs(math.sin(math.pi * x))) - math.log(math.pi))


def _substitution_power(a):
    """Integer p such that t = v**p makes the t^(a-1) factor polynomial-ish.

    If p*a is an integer the transformed integrand carries v**(p*a - 1),
    which is smooth at v = 0; otherwise fall back to p = ceil(1/a), which
    at least bounds the integrand there.
    """
    for p in range(1, 9):
        if abs(p * a - round(p * a)) < _INTEGER_TOL and round(p * a) >= 1:
            return p
    return max(1, math.ceil(1.0 / a))


def _u_integral(a, b, z, rtol):
    """U(a,b,z) for a > 0 by quadrature of the integral representation."""
    p = _substitution_power(a)
    m = p * a - 1.0
    c = b - a - 1.0

    def integrand(v):
        vp = v ** p
        core = np.exp(-z * vp) * (1.0 + vp) ** c
        if m == 0.0:
            return p * core
        return p * v ** m * core

    # truncate where exp(-z t) has decayed below 1e-22 of everything else
    t_max = 50.0 / z
    if c > 0:
        t_max = (50.0 + c * math.log(max(t_max, 2.0))) / z
    v_max = t_max ** (1.0 / p)
    val, err = adaptive(integrand, 0.0, v_max, rtol=rtol * 0.1)
    g = math.gamma(a)
    return val / g, err / g


def _u_laguerre(k, b, z):
    """Polynomial reduction U(-k,b,z) = (-1)^k k! L_k^(b-1)(z)."""
    sign = -1.0 if k % 2 else 1.0
    return sign * math.factorial(k) * laguerre(k, b - 1.0, z)


def _u_recur_down(a, b, z, rtol):
    """Chain U(a,b,z) for a <= 2 from quadrature seeds in (0, 2].

    Seeds U(a0, b, z) and U(a0+1, b, z) with a0 = a + ceil(-a) in (0, 1]
    (or the pair (1, 2] / (2, 3] shifted accordingly), then

        U(s-1,b,z) = (z + 2s - b) U(s,b,z) - s (1 + s - b) U(s+1,b,z)

    applied downward to a.  Running downward is the stable direction, so
    the seeds' relative accuracy carries through the chain; the returned
    error is that relative accuracy times the largest magnitude seen
    along the chain.  The scale is returned as well so callers can judge
    convergence near a zero of U, where a purely value-relative
    criterion is unsatisfiable.
    """
    steps = 0
    a0 = a
    while a0 <= 0.0:
        a0 += 1.0
        steps += 1
    hi, err_hi = _u_integral(a0 + 1.0, b, z, rtol)
    cur, err_cur = _u_integral(a0, b, z, rtol)
    scale = max(abs(hi), abs(cur))
    rel = (err_hi + err_cur) / max(scale, 1e-300)
    s = a0
    for _ in range(steps):
        cur, hi = (z + 2.0 * s - b) * cur - s * (1.0 + s - b) * hi, cur
        scale = max(scale, abs(cur))
        s -= 1.0
    return cur, rel * scale, scale


def tricomi_u(a, b, z, rtol=1e-10, method="auto", full_output=False):
    """Tricomi confluent hypergeometric function U(a, b, z), z > 0.

    Parameters
    ----------
    a, b : float
        Parameters.  The supported domain is a <= 2 with b = 2 at full
        accuracy; other real values go through the same machinery on a
        best-effort basis.
    z : float
        Argument, strictly positive.
    rtol : float
        Requested relative accuracy, measured against the recurrence
        scale near zeros of U where relative error loses meaning.
    method : {'auto', 'integral', 'laguerre'}
        'auto' picks the polynomial reduction for non-positive integer a
        and quadrature (plus downward recurrence) otherwise.  The
        explicit choices exist so the two routes can be compared.
    full_output : bool
        If true, return ``(value, error_estimate)``.

    Returns
    -------
    float or (float, float)
    """
    if not (math.isfinite(a) and math.isfinite(b) and math.isfinite(z)):
        raise ValueError("non-finite input")
    if z <= 0.0:
        raise ValueError(f"argument must be positive, got z={z}")
    if method not in ("auto", "integral", "laguerre"):
        raise ValueError(f"unknown method {method!r}")

    is_nonpos_int = a <= 0.5 and abs(a - round(a)) < _INTEGER_TOL
    if method == "laguerre" and not is_nonpos_int:
        raise ValueError("polynomial reduction requires a non-positive integer a")

    if is_nonpos_int and method != "integral":
        val = _u_laguerre(int(round(-a)), b, z)
        return (val, 0.0) if full_output else val

    if a > 0.0 and (method == "auto" or a > 2.0):
        val, err = _u_integral(a, b, z, rtol)
        scale = abs(val)
    else:
        val, err, scale = _u_recur_down(a, b, z, rtol)
    # near a zero of U the chain scale, not the cancelled value, sets
    # the achievable accuracy
    if err > 10.0 * rtol * max(abs(val), scale, 1e-300):
        raise ConvergenceError(
            f"U({a},{b},{z}) reached {err:.2e} absolute, above the requested rtol",
            val, err)
    return (val, err) if full_output else val


def _u_integral_array(a, b, z, rtol=1e-10, max_order=2048):
    """Vectorized U(a,b,z) over an array of positive z, a > 0.

    Same integral as ``_u_integral`` but with the substituted integrand
    rescaled to [0, 1] per argument and the whole batch pushed through
    one Gauss-Legendre rule, doubling the order until the worst point
    converges.  Seeds for the even-state chain share their shape across
    z, so this is much cheaper than a scalar loop.
    """
    from .quadrature import _rule

    z = np.asarray(z, dtype=float)
    p = _substitution_power(a)
    m = p * a - 1.0
    c = b - a - 1.0
    t_max = 50.0 / z
    if c > 0:
        t_max = (50.0 + c * np.log(np.maximum(t_max, 2.0))) / z
    v_max = t_max ** (1.0 / p)

    prev = None
    order = 64
    while order <= max_order:
        nodes, weights = _rule(order)
        s = 0.5 * (nodes + 1.0)  # [0, 1]
        v = np.outer(v_max, s)
        vp = v ** p
        mat = np.exp(-z[:, None] * vp) * (1.0 + vp) ** c
        if m != 0.0:
            mat *= v ** m
        vals = 0.5 * p * v_max * (mat @ weights)
        if prev is not None:
            diff = np.max(np.abs(vals - prev) / np.maximum(np.abs(vals), 1e-300))
            if diff <= rtol:
                return vals / math.gamma(a)
        prev = vals
        order *= 2
    raise ConvergenceError(
        f"batched U({a},{b},z) did not converge by order {max_order}",
        prev / math.gamma(a), float(diff))


def _u_array(a, b, z, rtol=1e-10):
    """U(a,b,z) over an array of positive z for any a <= 2 (recurrence chain)."""
    z = np.asarray(z, dtype=float)
    if a > 0.0:
        return _u_integral_array(a, b, z, rtol=rtol)
    steps = 0
    a0 = a
    while a0 <= 0.0:
        a0 += 1.0
        steps += 1
    hi = _u_integral_array(a0 + 1.0, b, z, rtol=rtol)
    cur = _u_integral_array(a0, b, z, rtol=rtol)
    s = a0
    for _ in range(steps):
        cur, hi = (z + 2.0 * s - b) * cur - s * (1.0 + s - b) * hi, cur
        s -= 1.0
    return cur


def whittaker_w(p, rtol=1e-10):
    """Whittaker function W_{kappa,1/2}(z) of the second kind.

    Uses W_{kappa,1/2}(z) = exp(-z/2) z U(1-kappa, 2, z) for z > 0 and
    the limit 1/Gamma(1-kappa) at z = 0 (zero when kappa is a positive
    integer, where W vanishes linearly).

    Parameters
    ----------
    p : WhittakerParams
        Indices and argument; p.mu must equal 1/2 and p.kappa must be a
        positive half-integer.
    rtol : float
        Accuracy passed through to the U evaluation.

    Returns
    -------
    float
    """
    if p.mu != 0.5:
        raise ValueError(f"only mu = 1/2 is supported, got mu={p.mu}")
    two_kappa = 2.0 * p.kappa
    if p.kappa <= 0 or abs(two_kappa - round(two_kappa)) > _INTEGER_TOL:
        raise ValueError(f"kappa must be a positive half-integer, got {p.kappa}")
    if p.z < 0:
        raise ValueError(f"argument must be non-negative, got z={p.z}")
    if p.z == 0.0:
        return reciprocal_gamma(1.0 - p.kappa)
    return math.exp(-0.5 * p.z) * p.z * tricomi_u(1.0 - p.kappa, 2.0, p.z, rtol=rtol)
