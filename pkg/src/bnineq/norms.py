"""L^p means of polynomials on the unit circle, 0 <= p <= inf.

p = 0 is the geometric mean, computed from the factorization over roots
(exact up to root-finding error) with a log-quadrature cross-check;
0 < p < inf uses the periodic trapezoid rule with node doubling, which is
spectrally accurate away from circle zeros; p = inf is the sup norm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad
from scipy.special import gammaln

from .poly import Polynomial, ZeroPolynomialError, max_modulus, roots, unit_nodes, _grid_size

QUAD_REL_TOL = 1e-9
QUAD_NODE_CAP = 2 ** 20
LOG_QUAD_NODE_CAP = 2 ** 16


@dataclass(frozen=True)
class NormValue:
    value: float
    p: float
    err_estimate: float

    def __post_init__(self):
        if self.value < 0 or self.err_estimate < 0:
            raise ValueError("norm value and error estimate must be nonnegative")

    @property
    def rel_err(self) -> float:
        return self.err_estimate / max(self.value, 1e-300)

    def to_jsonable(self) -> dict:
        return {"value": self.value, "p": "inf" if math.isinf(self.p) else self.p,
                "err_estimate": self.err_estimate}


def _mean_abs_pow(desc: np.ndarray, p: float, n_nodes: int) -> float:
    return float(np.mean(np.abs(np.polyval(desc, unit_nodes(n_nodes))) ** p))


def _quad_pnorm(desc: np.ndarray, p: float, n_start: int, cap: int = QUAD_NODE_CAP) -> tuple[float, float]:
    """Trapezoid p-mean with node doubling; returns (value, level diff)."""
    n = n_start
    prev = _mean_abs_pow(desc, p, n) ** (1.0 / p)
    while True:
        n *= 2
        cur = _mean_abs_pow(desc, p, n) ** (1.0 / p)
        err = abs(cur - prev)
        if err <= QUAD_REL_TOL * max(cur, 1e-300) or n >= cap:
            return cur, err
        prev = cur


def _mean_log(desc: np.ndarray, n_nodes: int) -> float:
    v = np.abs(np.polyval(desc, unit_nodes(n_nodes)))
    return float(np.mean(np.log(np.maximum(v, 1e-300))))


def mahler_measure_jensen(P: Polynomial) -> float:
    """|leading| * prod max(1, |root|) over the actual-degree roots."""
    d = P.actual_degree()
    if d < 0:
        raise ZeroPolynomialError("geometric mean of the zero polynomial")
    if d == 0:
        return abs(P.coeffs[0])
    return abs(P.leading()) * float(np.prod(np.maximum(1.0, np.abs(roots(P)))))


def lp_norm(P: Polynomial, p: float) -> NormValue:
    if P.is_zero():
        raise ZeroPolynomialError("norm of the zero polynomial")
    if p < 0:
        raise ValueError("p must be nonnegative")
    if math.isinf(p):
        return NormValue(max_modulus(P, 1.0), math.inf, 0.0)
    desc = P._desc()
    n_start = _grid_size(P.actual_degree())
    if p == 0:
        jensen = mahler_measure_jensen(P)
        n = n_start
        prev = math.exp(_mean_log(desc, n))
        while True:
            n *= 2
            cur = math.exp(_mean_log(desc, n))
            if abs(cur - prev) <= QUAD_REL_TOL * max(cur, 1e-300) or n >= LOG_QUAD_NODE_CAP:
                break
            prev = cur
        return NormValue(jensen, 0.0, abs(jensen - cur))
    value, err = _quad_pnorm(desc, p, n_start)
    return NormValue(value, p, err)


def binomial_norm(A: complex, Bc: complex, p: float, n_power: int = 1) -> NormValue:
    """||A z^n_power + Bc||_p.

    Rotation invariance of the circle mean gives ||Az+Bc||_p =
    || |A| z + |Bc| ||_p, and the substitution theta -> n*theta collapses
    the degree: ||A z^n + Bc||_p = ||A z + Bc||_p, so n_power does not
    change the value.
    """
    if n_power < 1:
        raise ValueError("n_power must be positive")
    a, b = abs(complex(A)), abs(complex(Bc))
    if a == 0 and b == 0:
        raise ValueError("norm of the zero binomial")
    if p < 0:
        raise ValueError("p must be nonnegative")
    if p == 0:
        return NormValue(max(a, b), 0.0, 0.0)
    if math.isinf(p):
        return NormValue(a + b, math.inf, 0.0)
    if a == 0 or b == 0:
        return NormValue(max(a, b), p, 0.0)
    # adaptive quadrature handles the |t - pi|^p endpoint singularity at a = b,
    # where the periodic trapezoid rule converges only like h^(1+p)
    def f(t: float) -> float:
        return (a * a + b * b + 2 * a * b * math.cos(t)) ** (p / 2)

    integral, quad_err = quad(f, 0.0, math.pi, epsabs=1e-14, epsrel=1e-12, limit=200)
    mean = integral / math.pi
    value = mean ** (1.0 / p)
    err = value * quad_err / (p * max(integral, 1e-300))
    return NormValue(value, p, err)


@lru_cache(maxsize=256)
def wallis_one_plus_z(p: float) -> float:
    """Closed form ||1+z||_p = (2^p Gamma((p+1)/2) / (sqrt(pi) Gamma(p/2+1)))^(1/p).

    Derivation: |1+e^{i t}| = 2|cos(t/2)|, so the p-mean reduces to the
    Wallis cosine integral (2/pi) int_0^{pi/2} (2 cos u)^p du.
    """
    if p <= 0:
        raise ValueError("closed form needs p > 0")
    logv = p * math.log(2.0) + gammaln((p + 1) / 2) - 0.5 * math.log(math.pi) - gammaln(p / 2 + 1)
    return math.exp(logv / p)


def one_plus_z_norm(p: float) -> NormValue:
    """||1+z||_p for 0 < p < inf, served by the closed form."""
    if p <= 0:
        raise ValueError("one_plus_z_norm needs p > 0; p = 0 gives 1 via lp_norm")
    if math.isinf(p):
        raise ValueError("p = inf is served by lp_norm")
    return NormValue(wallis_one_plus_z(p), p, 0.0)
