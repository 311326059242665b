"""Seeded generation of valid test instances.

Every sampler is a deterministic function of its seed; verification suites
derive one seed per trial from (master_seed, trial_index) so streams are
reproducible across runs and worker counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import operator as bn
from .poly import Polynomial, from_roots, has_all_zeros_in_closed_disk, unit_nodes

MAX_DEGREE = 16
BOUNDARY_ZERO_PROB = 0.2
P_GRID = (0.0, 0.3, 0.5, 1.0, 1.7, 2.0, 4.0, math.inf)
DOMINATION_GRID = 1024
DOMINATION_TOL = 1e-10


@dataclass(frozen=True)
class InequalityInstance:
    P: Polynomial
    op: bn.BnOperator
    params: bn.PhiParams
    delta: complex
    p: float
    seed: int

    def to_jsonable(self) -> dict:
        return {"poly": self.P.to_jsonable(), "op": self.op.to_jsonable(),
                "params": self.params.to_jsonable(),
                "delta": [self.delta.real, self.delta.imag],
                "p": "inf" if math.isinf(self.p) else self.p, "seed": self.seed}

    @staticmethod
    def from_jsonable(d: dict) -> "InequalityInstance":
        p = math.inf if d["p"] == "inf" else float(d["p"])
        return InequalityInstance(Polynomial.from_jsonable(d["poly"]),
                                  bn.BnOperator.from_jsonable(d["op"]),
                                  bn.PhiParams.from_jsonable(d["params"]),
                                  complex(*d["delta"]), p, d["seed"])


@dataclass(frozen=True)
class DominatedPair:
    P: Polynomial
    F: Polynomial

    def __post_init__(self):
        if self.P.ambient_n != self.F.ambient_n:
            raise ValueError("ambient degree mismatch in dominated pair")

    def check(self) -> bool:
        if not has_all_zeros_in_closed_disk(self.F):
            return False
        z = unit_nodes(DOMINATION_GRID)
        pv = np.abs(self.P.eval(z))
        fv = np.abs(self.F.eval(z))
        return bool(np.all(pv <= fv + DOMINATION_TOL * max(1.0, float(fv.max()))))


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def _unit_disk(rng: np.random.Generator) -> complex:
    return math.sqrt(rng.uniform()) * np.exp(1j * rng.uniform(0, 2 * math.pi))


def _leading(rng: np.random.Generator) -> complex:
    return rng.uniform(0.5, 2.0) * np.exp(1j * rng.uniform(0, 2 * math.pi))


def _zeros(rng: np.random.Generator, n: int, lo: float, hi: float) -> np.ndarray:
    """n zeros with modulus in [lo, hi] (area-uniform), boundary modulus 1 with prob 0.2."""
    mods = np.sqrt(rng.uniform(lo * lo, hi * hi, n))
    mods[rng.uniform(size=n) < BOUNDARY_ZERO_PROB] = 1.0
    angles = rng.uniform(0, 2 * math.pi, n)
    return mods * np.exp(1j * angles)


def sample_poly_zeros_in_disk(n: int, rng_seed) -> Polynomial:
    """Degree-n polynomial with all zeros in the closed unit disk."""
    if n < 1:
        raise ValueError("need n >= 1")
    rng = _rng(rng_seed)
    return from_roots(_zeros(rng, n, 0.0, 1.0), _leading(rng), n)


def sample_poly_nonvanishing(n: int, rng_seed, extremal: bool = False) -> Polynomial:
    """Degree-n polynomial with no zero in the open unit disk.

    With ``extremal=True`` returns a*z^n + b with |a| = |b| = 1 and random
    phases, the family attaining equality in the main bounds.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    rng = _rng(rng_seed)
    if extremal:
        a = np.exp(1j * rng.uniform(0, 2 * math.pi))
        b = np.exp(1j * rng.uniform(0, 2 * math.pi))
        coeffs = [b] + [0j] * (n - 1) + [a]
        return Polynomial(tuple(coeffs), n)
    return from_roots(_zeros(rng, n, 1.0, 3.0), _leading(rng), n)


def sample_admissible_operator(n: int, rng_seed) -> bn.BnOperator:
    """Operator triple whose u-roots stay in the half plane Re(z) <= n/4."""
    if n < 1:
        raise ValueError("need n >= 1")
    rng = _rng(rng_seed)
    kind = rng.integers(0, 3)
    if n == 1 and kind == 0:
        kind = 1  # quadratic u needs C(n,2) > 0

    def half_plane_root() -> complex:
        return complex(rng.uniform(n / 4 - 4.0, n / 4), rng.uniform(-4.0, 4.0))

    c = _leading(rng)
    if kind == 0:
        w1, w2 = half_plane_root(), half_plane_root()
        lam2 = c / (n * (n - 1) / 2)
        lam1 = -c * (w1 + w2) / n
        lam0 = c * w1 * w2
        return bn.BnOperator(lam0, lam1, lam2, n)
    if kind == 1:
        w = half_plane_root()
        return bn.BnOperator(-c * w, c / n, 0.0, n)
    return bn.BnOperator(c / abs(c), 0.0, 0.0, n)


def sample_params(rng_seed) -> tuple[bn.PhiParams, complex, float]:
    """(PhiParams, delta, p) with R > r >= 1 and all disk parameters valid."""
    rng = _rng(rng_seed)
    r = rng.uniform(1.0, 2.0)
    R = r + rng.uniform(0.05, 3.0)
    alpha, beta, delta = _unit_disk(rng), _unit_disk(rng), _unit_disk(rng)
    p = P_GRID[rng.integers(0, len(P_GRID))]
    return bn.PhiParams(R, r, alpha, beta), delta, p


def sample_finite_p(rng: np.random.Generator, positive: bool = False) -> float:
    grid = [p for p in P_GRID if not math.isinf(p) and (p > 0 or not positive)]
    return grid[rng.integers(0, len(grid))]


def sample_dominated_pair(n: int, rng_seed) -> DominatedPair:
    """(P, F) with |P| <= |F| on the circle and F's zeros in the closed disk."""
    if n < 1:
        raise ValueError("need n >= 1")
    rng = _rng(rng_seed)
    for _ in range(10):
        f_zeros = _zeros(rng, n, 0.0, 1.0)
        lead = _leading(rng)
        F = from_roots(f_zeros, lead, n)
        c = _unit_disk(rng)
        if rng.uniform() < 0.5 or c == 0:
            P = F.scaled(c if c != 0 else 0.5)
        else:
            # move a strictly-interior zero subset through the star map:
            # |F2*| = |F2| on the circle keeps the domination
            interior = np.abs(f_zeros) < 1.0 - 1e-9
            pick = interior & (rng.uniform(size=n) < 0.5)
            f2 = from_roots(f_zeros[pick], 1.0, int(pick.sum()))
            f1 = from_roots(f_zeros[~pick], lead, n - int(pick.sum()))
            coeffs = c * np.convolve(np.array(f1.coeffs), np.array(f2.conj_reciprocal().coeffs))
            P = Polynomial(tuple(coeffs), n)
        pair = DominatedPair(P, F)
        if not P.is_zero() and pair.check():
            return pair
    raise RuntimeError(f"dominated-pair sampling failed after 10 retries (seed={rng_seed!r})")


def trial_seed(master_seed: int, trial_index: int) -> int:
    """Stable per-trial seed; recorded in reports so any line can be rerun."""
    ss = np.random.SeedSequence(entropy=[int(master_seed), int(trial_index)])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def sample_instance(n: int, seed: int, extremal: bool = False) -> InequalityInstance:
    """Full instance for the theorem-style checkers (nonvanishing P, finite p)."""
    s_poly, s_op, s_par, s_p = np.random.SeedSequence(seed).spawn(4)
    P = sample_poly_nonvanishing(n, s_poly, extremal=extremal)
    op = sample_admissible_operator(n, s_op)
    params, delta, p = sample_params(s_par)
    if math.isinf(p):
        p = sample_finite_p(_rng(s_p))
    return InequalityInstance(P, op, params, delta, p, seed)
