"""Complex polynomials with an explicit ambient degree.

A polynomial lives in the space of polynomials of degree at most
``ambient_n``; trailing zero coefficients are kept so that the reversal
(conjugate-reciprocal) map and degree-n comparisons are well defined even
when the actual degree is smaller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

BOUNDARY_TOL = 1e-9

ALL_IN_CLOSED_DISK = "all_in_closed_disk"
NONE_IN_OPEN_DISK = "none_in_open_disk"
MIXED = "mixed"


class ZeroPolynomialError(ValueError):
    """Raised when an operation is undefined for the zero polynomial."""


@dataclass(frozen=True)
class CirclePoint:
    """A point k*exp(i*angle) given in polar form."""

    radius: float
    angle: float

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        object.__setattr__(self, "angle", float(self.angle) % (2 * math.pi))

    @property
    def value(self) -> complex:
        return self.radius * complex(math.cos(self.angle), math.sin(self.angle))


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple  # complex coefficients, ascending powers, length ambient_n + 1
    ambient_n: int

    def __post_init__(self):
        coeffs = tuple(complex(c) for c in self.coeffs)
        if self.ambient_n < 0:
            raise ValueError("ambient_n must be nonnegative")
        if len(coeffs) != self.ambient_n + 1:
            raise ValueError(
                f"need {self.ambient_n + 1} coefficients for ambient degree "
                f"{self.ambient_n}, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def actual_degree(self) -> int:
        """Largest j with a nonzero coefficient; -1 for the zero polynomial."""
        for j in range(self.ambient_n, -1, -1):
            if self.coeffs[j] != 0:
                return j
        return -1

    def leading(self) -> complex:
        d = self.actual_degree()
        if d < 0:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[d]

    def _desc(self) -> np.ndarray:
        """Coefficients descending by power, trimmed, for numpy evaluation."""
        d = max(self.actual_degree(), 0)
        return np.array(self.coeffs[d::-1], dtype=complex)

    # -- evaluation and calculus ------------------------------------------

    def eval(self, z) -> complex:
        """Horner evaluation; accepts a scalar or an ndarray."""
        return np.polyval(self._desc(), z)

    def derivative(self) -> "Polynomial":
        c = [(j + 1) * self.coeffs[j + 1] for j in range(self.ambient_n)]
        c.append(0j)
        return Polynomial(tuple(c), self.ambient_n)

    def scale_arg(self, c: complex) -> "Polynomial":
        """The polynomial z -> P(c*z)."""
        c = complex(c)
        out, f = [], 1.0 + 0j
        for a in self.coeffs:
            out.append(a * f)
            f *= c
        return Polynomial(tuple(out), self.ambient_n)

    def conj_reciprocal(self) -> "Polynomial":
        """P*(z) = z^n conj(P(1/conj(z))) at the ambient degree n."""
        return Polynomial(tuple(self.coeffs[j].conjugate() for j in range(self.ambient_n, -1, -1)),
                          self.ambient_n)

    # -- arithmetic within a fixed ambient degree -------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if self.ambient_n != other.ambient_n:
            raise ValueError("ambient degree mismatch")
        return Polynomial(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
                          self.ambient_n)

    def scaled(self, c: complex) -> "Polynomial":
        return Polynomial(tuple(complex(c) * a for a in self.coeffs), self.ambient_n)

    def plus_constant(self, c: complex) -> "Polynomial":
        coeffs = list(self.coeffs)
        coeffs[0] += complex(c)
        return Polynomial(tuple(coeffs), self.ambient_n)

    # -- serialization -----------------------------------------------------

    def to_jsonable(self) -> dict:
        return {"coeffs": [[c.real, c.imag] for c in self.coeffs],
                "ambient_n": self.ambient_n}

    @staticmethod
    def from_jsonable(d: dict) -> "Polynomial":
        return Polynomial(tuple(complex(re, im) for re, im in d["coeffs"]), d["ambient_n"])


def from_roots(zeros, leading: complex, ambient_n: int) -> Polynomial:
    """leading * prod(z - z_k), embedded in ambient degree ambient_n."""
    leading = complex(leading)
    if leading == 0:
        raise ValueError("leading coefficient must be nonzero")
    zeros = list(zeros)
    if len(zeros) > ambient_n:
        raise ValueError("more zeros than the ambient degree allows")
    c = np.atleast_1d(np.poly(np.array(zeros, dtype=complex)) if zeros else np.array([1.0 + 0j]))
    asc = (leading * c[::-1]).tolist()
    asc += [0j] * (ambient_n + 1 - len(asc))
    return Polynomial(tuple(asc), ambient_n)


def roots(P: Polynomial) -> np.ndarray:
    """All actual-degree roots, companion-matrix eigenvalues plus Newton polish."""
    d = P.actual_degree()
    if d < 0:
        raise ZeroPolynomialError("undefined roots for the zero polynomial")
    if d == 0:
        raise ValueError("a nonzero constant has no roots")
    desc = P._desc()
    r = np.roots(desc).astype(complex)
    dp = np.polyder(desc)
    for _ in range(3):
        fv = np.polyval(desc, r)
        fpv = np.polyval(dp, r)
        ok = np.abs(fpv) > 1e-12 * np.maximum(np.abs(fv), 1.0)
        step = np.zeros_like(r)
        step[ok] = fv[ok] / fpv[ok]
        # guard against wild steps near multiple roots
        step = np.where(np.abs(step) < 1e-2 * (1.0 + np.abs(r)), step, 0.0)
        r = r - step
    return r


@lru_cache(maxsize=32)
def _unit_angles(n_nodes: int) -> np.ndarray:
    return np.linspace(0.0, 2 * math.pi, n_nodes, endpoint=False)


@lru_cache(maxsize=32)
def unit_nodes(n_nodes: int) -> np.ndarray:
    """Cached equispaced nodes exp(i*theta) on the unit circle."""
    return np.exp(1j * _unit_angles(n_nodes))


def _grid_size(degree: int) -> int:
    return 4096 * max(1, -(-max(degree, 1) // 8))


def _circle_extremum(P: Polynomial, k: float, sign: float) -> tuple[float, float]:
    """(refined extremum, coarse grid extremum) of sign*|P| on |z| = k."""
    desc = P._desc()
    n_nodes = _grid_size(P.actual_degree())
    theta = _unit_angles(n_nodes)
    vals = sign * np.abs(np.polyval(desc, k * unit_nodes(n_nodes)))
    # local minima of sign*|P| on the circular grid
    left = np.roll(vals, 1)
    right = np.roll(vals, -1)
    idx = np.nonzero((vals <= left) & (vals <= right))[0]
    if idx.size == 0:
        idx = np.array([int(np.argmin(vals))])
    h = 2 * math.pi / n_nodes

    # parabolic value estimate for every basin, then Brent polish on the winner
    vm, vl, vr = vals[idx], left[idx], right[idx]
    denom = vl - 2 * vm + vr
    est = np.where(denom > 1e-300, vm - (vl - vr) ** 2 / (8 * np.where(denom == 0, 1, denom)), vm)

    d1 = np.polyder(desc)
    d2 = np.polyder(d1)

    def polish(t: float) -> float:
        # Newton on d/dt |P(k e^{it})|^2, which is a smooth trig polynomial
        # even when |P| has a conical minimum at a root on the circle
        t0 = t
        for _ in range(8):
            z = k * complex(math.cos(t), math.sin(t))
            u = np.polyval(desc, z)
            u1 = 1j * z * np.polyval(d1, z)
            u2 = -z * np.polyval(d1, z) - z * z * np.polyval(d2, z)
            g = 2.0 * (u.conjugate() * u1).real
            gp = 2.0 * ((u.conjugate() * u2).real + abs(u1) ** 2)
            if gp == 0 or abs(t - t0) > 2 * h:
                break
            step = g / gp
            t -= step
            if abs(step) < 1e-14:
                break
        t = min(max(t, t0 - h), t0 + h)
        return sign * abs(np.polyval(desc, k * complex(math.cos(t), math.sin(t))))

    grid_val = float(vals.min())
    refined = grid_val
    for j in np.argsort(est)[:3]:
        refined = min(refined, polish(float(theta[idx[j]])))
    return sign * refined, sign * grid_val


def min_modulus(P: Polynomial, k: float) -> float:
    """m(P, k): minimum of |P| over the circle |z| = k."""
    if k <= 0:
        raise ValueError("k must be positive")
    if P.is_zero():
        return 0.0
    if P.actual_degree() == 0:
        return abs(P.coeffs[0])
    return _circle_extremum(P, k, 1.0)[0]


def max_modulus(P: Polynomial, k: float) -> float:
    """Maximum of |P| over the circle |z| = k."""
    if k <= 0:
        raise ValueError("k must be positive")
    if P.is_zero():
        return 0.0
    if P.actual_degree() == 0:
        return abs(P.coeffs[0])
    return _circle_extremum(P, k, -1.0)[0]


def has_all_zeros_in_closed_disk(P: Polynomial) -> bool:
    return bool(np.all(np.abs(roots(P)) <= 1.0 + BOUNDARY_TOL))


def has_no_zeros_in_open_disk(P: Polynomial) -> bool:
    return bool(np.all(np.abs(roots(P)) >= 1.0 - BOUNDARY_TOL))


def zero_location(P: Polynomial) -> str:
    """Classify the root moduli relative to the unit circle.

    Roots within BOUNDARY_TOL of the circle count as on-boundary and are
    compatible with both half-classifications; a polynomial with all roots
    on the boundary reports ALL_IN_CLOSED_DISK.  Use the two predicate
    helpers when membership in a specific closed region is what matters.
    """
    inside = has_all_zeros_in_closed_disk(P)
    outside = has_no_zeros_in_open_disk(P)
    if inside:
        return ALL_IN_CLOSED_DISK
    if outside:
        return NONE_IN_OPEN_DISK
    return MIXED
