"""The three-term operator family on polynomials of ambient degree n.

An operator is a triple (lambda0, lambda1, lambda2) acting as

    B[P](z) = lambda0 P(z) + lambda1 (nz/2) P'(z) + lambda2 (nz/2)^2 P''(z)/2

which is diagonal in the monomial basis.  Admissibility requires every
root of u(z) = lambda0 + C(n,1) lambda1 z + C(n,2) lambda2 z^2 to satisfy
|z| <= |z - n/2|, i.e. Re(z) <= n/4.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .poly import Polynomial, roots

ADMISSIBILITY_TOL = 1e-10


@dataclass(frozen=True)
class BnOperator:
    lam0: complex
    lam1: complex
    lam2: complex
    ambient_n: int

    def __post_init__(self):
        object.__setattr__(self, "lam0", complex(self.lam0))
        object.__setattr__(self, "lam1", complex(self.lam1))
        object.__setattr__(self, "lam2", complex(self.lam2))
        if self.ambient_n < 1:
            raise ValueError("ambient_n must be positive")
        if self.lam0 == 0 and self.lam1 == 0 and self.lam2 == 0:
            raise ValueError("all-zero operator triple")
        if is_admissible(self) and capital_lambda(self) == 0:
            # cannot happen for admissible triples: u(n/2) is a product of
            # distances from n/2 to roots with real part <= n/4
            raise AssertionError("admissible operator with vanishing leading multiplier")

    def to_jsonable(self) -> dict:
        return {"lambda": [[l.real, l.imag] for l in (self.lam0, self.lam1, self.lam2)],
                "n": self.ambient_n}

    @staticmethod
    def from_jsonable(d: dict) -> "BnOperator":
        l0, l1, l2 = (complex(re, im) for re, im in d["lambda"])
        return BnOperator(l0, l1, l2, d["n"])


def u_polynomial(op: BnOperator) -> Polynomial:
    n = op.ambient_n
    return Polynomial((op.lam0, n * op.lam1, (n * (n - 1) // 2) * op.lam2), 2)


def is_admissible(op: BnOperator) -> bool:
    """True iff every root of u lies in the half plane Re(z) <= n/4."""
    u = u_polynomial(op)
    if u.is_zero():
        raise ValueError("all-zero operator triple")
    if u.actual_degree() == 0:
        return True
    r = roots(u)
    return bool(np.all(r.real <= op.ambient_n / 4 + ADMISSIBILITY_TOL))


def capital_lambda(op: BnOperator) -> complex:
    """Action of the operator on z^n; equals u(n/2)."""
    n = op.ambient_n
    return op.lam0 + op.lam1 * n * n / 2 + op.lam2 * n ** 3 * (n - 1) / 8


def monomial_multipliers(op: BnOperator) -> np.ndarray:
    """b_j with B[sum a_j z^j] = sum b_j a_j z^j."""
    n = op.ambient_n
    j = np.arange(n + 1)
    return op.lam0 + op.lam1 * n * j / 2 + op.lam2 * n * n * j * (j - 1) / 8


def apply(op: BnOperator, P: Polynomial) -> Polynomial:
    if P.ambient_n != op.ambient_n:
        raise ValueError("ambient degree mismatch between operator and polynomial")
    b = monomial_multipliers(op)
    return Polynomial(tuple(b[j] * P.coeffs[j] for j in range(op.ambient_n + 1)), op.ambient_n)


@dataclass(frozen=True)
class PhiParams:
    R: float
    r: float
    alpha: complex
    beta: complex

    def __post_init__(self):
        object.__setattr__(self, "R", float(self.R))
        object.__setattr__(self, "r", float(self.r))
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        if not self.R > self.r:
            raise ValueError("need R > r")
        if self.r < 1:
            raise ValueError("need r >= 1")
        if abs(self.alpha) > 1 + 1e-12:
            raise ValueError("need |alpha| <= 1")
        if abs(self.beta) > 1 + 1e-12:
            raise ValueError("need |beta| <= 1")

    def to_jsonable(self) -> dict:
        return {"R": self.R, "r": self.r,
                "alpha": [self.alpha.real, self.alpha.imag],
                "beta": [self.beta.real, self.beta.imag]}

    @staticmethod
    def from_jsonable(d: dict) -> "PhiParams":
        return PhiParams(d["R"], d["r"], complex(*d["alpha"]), complex(*d["beta"]))


def phi_n(params: PhiParams, n: int) -> complex:
    """beta * (((R+1)/(r+1))^n - |alpha|) - alpha."""
    k = ((params.R + 1.0) / (params.r + 1.0)) ** n
    return params.beta * (k - abs(params.alpha)) - params.alpha


def lhs_combination(op: BnOperator, P: Polynomial, params: PhiParams) -> Polynomial:
    """B[P(R.)](z) + phi * B[P(r.)](z) as one polynomial."""
    phi = phi_n(params, op.ambient_n)
    return apply(op, P.scale_arg(params.R)) + apply(op, P.scale_arg(params.r)).scaled(phi)


def starred_combination(op: BnOperator, P: Polynomial, params: PhiParams) -> Polynomial:
    """Conjugate-reciprocal of the combination built on P*.

    Equals B[P*(R.)]*(z) + phi(conj(alpha), conj(beta)) B[P*(r.)]*(z): the
    star map conjugates scalar factors and phi's conjugation symmetry in
    (alpha, beta) turns phi back into phi(alpha, beta) inside.
    """
    return lhs_combination(op, P.conj_reciprocal(), params).conj_reciprocal()


@dataclass(frozen=True)
class GammaOperator:
    """Coefficient multiplier operator P -> sum gamma_j a_j z^j.

    ``family`` records how the multiplier sequence was built; only built-in
    families carry a zero-location-preservation certificate.
    """

    gamma: tuple
    family: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(complex(g) for g in self.gamma))
        if len(self.gamma) < 1:
            raise ValueError("empty multiplier sequence")

    @staticmethod
    def dilation(delta: complex, n: int) -> "GammaOperator":
        """gamma_j = delta^j, i.e. P(z) -> P(delta z)."""
        delta = complex(delta)
        return GammaOperator(tuple(delta ** j for j in range(n + 1)), family="dilation")

    @staticmethod
    def reversed_dilation(delta: complex, n: int) -> "GammaOperator":
        """gamma_j = delta^(n-j), i.e. P(z) -> delta^n P(z/delta)."""
        delta = complex(delta)
        return GammaOperator(tuple(delta ** (n - j) for j in range(n + 1)),
                             family="reversed_dilation")


def c_gamma_apply(g: GammaOperator, P: Polynomial) -> Polynomial:
    if len(g.gamma) != P.ambient_n + 1:
        raise ValueError("multiplier length does not match the ambient degree")
    return Polynomial(tuple(gj * aj for gj, aj in zip(g.gamma, P.coeffs)), P.ambient_n)


def c_gamma_bound(g: GammaOperator) -> float:
    """The comparison constant max(|gamma_0|, |gamma_n|)."""
    return max(abs(g.gamma[0]), abs(g.gamma[-1]))


def identity_operator(n: int) -> BnOperator:
    return BnOperator(1.0, 0.0, 0.0, n)
