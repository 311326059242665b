"""Derivative-free maximization of the LHS/RHS ratio of the main bounds.

Instances are decoded from an unconstrained coordinate vector, so every
probe is feasible by construction: zero moduli go through t -> 1 + |t|,
u-roots through Re -> n/4 - |s|, disk parameters through w -> w/max(1,|w|),
and the radii through r = 1 + |r_base|, R = r + gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import operator as bn
from . import verify as vf
from .poly import from_roots
from .sampling import InequalityInstance

STEP_MIN = 1e-6
REJECTS_PER_HALVING = 20
COUNTEREXAMPLE_TOL = 1e-6


@dataclass(frozen=True)
class SearchResult:
    best_ratio: float
    best_instance: InequalityInstance
    evals: int
    trace: tuple  # (eval_index, ratio) milestones, non-decreasing in ratio

    def to_jsonable(self) -> dict:
        return {"best_ratio": self.best_ratio,
                "best_instance": self.best_instance.to_jsonable(),
                "evals": self.evals,
                "trace": [[i, r] for i, r in self.trace]}


def point_dim(n: int) -> int:
    # zeros (2n) + leading phase + u-roots (4) + alpha/beta/delta (6) + radii (2)
    return 2 * n + 13


def _disk(w_re: float, w_im: float) -> complex:
    w = complex(w_re, w_im)
    return w / max(1.0, abs(w))


def _operator_from_point(n: int, s1: float, y1: float, s2: float, y2: float) -> bn.BnOperator:
    w1 = complex(n / 4 - abs(s1), y1)
    if n == 1:
        # quadratic u is unavailable at n = 1; use the linear family
        return bn.BnOperator(-w1, 1.0 / n, 0.0, n)
    w2 = complex(n / 4 - abs(s2), y2)
    lam2 = 1.0 / (n * (n - 1) / 2)
    return bn.BnOperator(w1 * w2, -(w1 + w2) / n, lam2, n)


def decode(statement_id: str, vec: np.ndarray, n: int, p: float,
           seed: int = 0) -> InequalityInstance:
    vec = np.asarray(vec, dtype=float)
    if vec.size != point_dim(n):
        raise ValueError(f"expected {point_dim(n)} coordinates, got {vec.size}")
    zp = vec[: 2 * n]
    zeros = (1.0 + np.abs(zp[0::2])) * np.exp(1j * zp[1::2])
    lead = np.exp(1j * vec[2 * n])
    P = from_roots(zeros, lead, n)
    s1, y1, s2, y2 = vec[2 * n + 1: 2 * n + 5]
    if statement_id == "c2":
        op = bn.identity_operator(n)
    else:
        op = _operator_from_point(n, s1, y1, s2, y2)
    alpha = _disk(vec[2 * n + 5], vec[2 * n + 6])
    beta = 0j if statement_id in ("c1",) else _disk(vec[2 * n + 7], vec[2 * n + 8])
    delta = _disk(vec[2 * n + 9], vec[2 * n + 10])
    r = 1.0 + abs(vec[2 * n + 11])
    R = r + 1e-3 + abs(vec[2 * n + 12])
    params = bn.PhiParams(R, r, alpha, beta)
    return InequalityInstance(P, op, params, delta, p, seed)


_CHECKERS = {"t1": vf.check_theorem1, "t2": vf.check_theorem2,
             "c1": vf.check_corollary1, "c2": vf.check_corollary2}


def instance_ratio(statement_id: str, inst: InequalityInstance) -> float:
    rep = _CHECKERS[statement_id](inst, validate=False)
    return rep.lhs / max(rep.rhs, 1e-300)


def ratio_objective(statement_id: str, vec: np.ndarray, n: int, p: float) -> float:
    if statement_id not in _CHECKERS:
        raise ValueError(f"searchable statements are {sorted(_CHECKERS)}, got {statement_id!r}")
    return instance_ratio(statement_id, decode(statement_id, vec, n, p))


def equality_family_start(n: int) -> np.ndarray:
    """Encoding of P = z^n + 1 with a fixed admissible operator."""
    vec = np.zeros(point_dim(n))
    vec[1: 2 * n: 2] = [(2 * k + 1) * math.pi / n for k in range(n)]  # zeros of z^n + 1
    vec[2 * n + 1] = 1.0  # u-root at n/4 - 1
    vec[2 * n + 3] = 1.0
    vec[2 * n + 12] = 1.0  # R ~ 2, r = 1
    return vec


def local_search(statement_id: str, start: np.ndarray, n: int, p: float,
                 budget: int, step0: float = 0.5, rng_seed=0) -> SearchResult:
    """Coordinate-wise Gaussian hill climb; step halves after 20 rejections."""
    if budget < 1:
        raise ValueError("need budget >= 1")
    rng = np.random.default_rng(rng_seed)
    x = np.asarray(start, dtype=float).copy()
    best = ratio_objective(statement_id, x, n, p)
    evals = 1
    trace = [(1, best)]
    step, rejects = step0, 0
    while evals < budget and step >= STEP_MIN:
        prop = x.copy()
        j = int(rng.integers(prop.size))
        prop[j] += step * rng.normal()
        val = ratio_objective(statement_id, prop, n, p)
        evals += 1
        if val > best:
            x, best, rejects = prop, val, 0
            trace.append((evals, best))
        else:
            rejects += 1
            if rejects >= REJECTS_PER_HALVING:
                step *= 0.5
                rejects = 0
    inst = decode(statement_id, x, n, p)
    return SearchResult(best, inst, evals, tuple(trace))


def sharpness_certify(statement_id: str, n: int, p_grid, restarts: int,
                      budget: int, rng_seed=0) -> SearchResult:
    """Best ratio over random restarts plus one start at the equality family."""
    if restarts < 1:
        raise ValueError("need restarts >= 1")
    best: SearchResult | None = None
    master = np.random.SeedSequence(rng_seed)
    for p in p_grid:
        seeds = master.spawn(restarts + 1)
        starts = [equality_family_start(n)]
        starts += [np.random.default_rng(s).normal(0.0, 1.0, point_dim(n))
                   for s in seeds[:restarts]]
        for start, s in zip(starts, seeds):
            res = local_search(statement_id, start, n, p, budget, rng_seed=s)
            if best is None or res.best_ratio > best.best_ratio:
                best = res
    # re-evaluate the winner from its decoded instance
    final = instance_ratio(statement_id, best.best_instance)
    assert abs(final - best.best_ratio) <= 1e-9 * max(1.0, abs(final))
    return best
