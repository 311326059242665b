"""Deterministic batch orchestration: one seeded trial per (statement, index).

Every trial is a pure function of (statement_id, master_seed, trial_index,
degree range), so suites reproduce byte-identically for a given master
seed regardless of the worker count.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import operator as bn
from . import sampling as smp
from . import verify as vf
from .sampling import InequalityInstance, trial_seed


@dataclass(frozen=True)
class RunConfig:
    statements: tuple
    trials: int = 100
    degree_lo: int = 1
    degree_hi: int = 8
    master_seed: int = 0
    workers: int = 1
    tol: float | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("need trials >= 1")
        if not (1 <= self.degree_lo <= self.degree_hi <= smp.MAX_DEGREE):
            raise ValueError(f"degrees must lie in [1, {smp.MAX_DEGREE}]")
        for s in self.statements:
            if s not in vf.STATEMENT_IDS:
                raise ValueError(f"unknown statement id: {s!r}")


def _degree(rng: np.random.Generator, lo: int, hi: int) -> int:
    return int(rng.integers(lo, hi + 1))


def run_trial(statement_id: str, master_seed: int, trial_index: int,
              degree_lo: int = 1, degree_hi: int = 8,
              tol: float | None = None) -> vf.SlackReport:
    seed = trial_seed(master_seed, trial_index)
    ss = np.random.SeedSequence(seed)
    s_pick, s_a, s_b, s_c, s_d = ss.spawn(5)
    rng = np.random.default_rng(s_pick)
    n = _degree(rng, degree_lo, degree_hi)
    tol_kw = {} if tol is None else {"tol": tol}

    if statement_id in ("t1", "t2", "c1", "c2", "ta", "tb"):
        inst = smp.sample_instance(n, seed)
        if statement_id == "c2":
            inst = InequalityInstance(inst.P, bn.identity_operator(n), inst.params,
                                      inst.delta, inst.p, seed)
        checker = {"t1": vf.check_theorem1, "t2": vf.check_theorem2,
                   "c1": vf.check_corollary1, "c2": vf.check_corollary2,
                   "ta": vf.check_theorem_a, "tb": vf.check_theorem_b}[statement_id]
        if statement_id in ("t1", "t2", "c2"):
            return checker(inst, **tol_kw)
        return checker(inst)

    if statement_id == "l1":
        P = smp.sample_poly_zeros_in_disk(n, s_a)
        params, _, _ = smp.sample_params(s_b)
        return vf.check_lemma1(P, params.R, params.r, seed=seed)
    if statement_id == "l2":
        P = smp.sample_poly_zeros_in_disk(n, s_a)
        op = smp.sample_admissible_operator(n, s_b)
        return vf.check_lemma2(P, op, seed=seed)
    if statement_id == "l3":
        pair = smp.sample_dominated_pair(n, s_a)
        op = smp.sample_admissible_operator(n, s_b)
        params, _, _ = smp.sample_params(s_c)
        return vf.check_lemma3(pair, op, params, seed=seed)
    if statement_id == "l2p":
        P = smp.sample_poly_zeros_in_disk(n, s_a)
        op = smp.sample_admissible_operator(n, s_b)
        params, _, _ = smp.sample_params(s_c)
        return vf.check_lemma2prime(P, op, params, seed=seed)
    if statement_id == "l4":
        P = smp.sample_poly_nonvanishing(n, s_a)
        op = smp.sample_admissible_operator(n, s_b)
        params, _, _ = smp.sample_params(s_c)
        return vf.check_lemma4(P, op, params, seed=seed)
    if statement_id == "l3p":
        P = smp.sample_poly_nonvanishing(n, s_a)
        op = smp.sample_admissible_operator(n, s_b)
        params, _, _ = smp.sample_params(s_c)
        return vf.check_lemma3prime(P, op, params, seed=seed)
    if statement_id == "l6":
        P = smp.sample_poly_nonvanishing(n, s_a)
        op = smp.sample_admissible_operator(n, s_b)
        params, _, _ = smp.sample_params(s_c)
        rng_d = np.random.default_rng(s_d)
        eta = float(rng_d.uniform(0, 2 * math.pi))
        p = smp.sample_finite_p(rng_d, positive=True)
        return vf.check_lemma6(P, op, params, eta, p, seed=seed, **tol_kw)
    if statement_id == "arestov":
        rng_d = np.random.default_rng(s_d)
        delta = smp._unit_disk(rng_d)
        p = smp.sample_finite_p(rng_d, positive=True)
        if rng_d.uniform() < 0.5:
            P = smp.sample_poly_nonvanishing(n, s_a)
            g = bn.GammaOperator.dilation(delta, n)
        else:
            P = smp.sample_poly_zeros_in_disk(n, s_a)
            g = bn.GammaOperator.reversed_dilation(delta, n)
        return vf.check_arestov(P, g, p, seed=seed, **tol_kw)
    if statement_id == "abc":
        rng_d = np.random.default_rng(s_d)
        A = float(rng_d.uniform(0, 5))
        u, w = rng_d.uniform(), rng_d.uniform()
        B, C = A * u * w, A * u * (1 - w)
        gamma = float(rng_d.uniform(0, 2 * math.pi))
        return vf.check_lemma_abc(A, B, C, gamma, seed=seed)

    if statement_id.startswith("classical:"):
        which = statement_id.split(":", 1)[1]
        rng_d = np.random.default_rng(s_d)
        p = smp.sample_finite_p(rng_d, positive=True)
        R = float(rng_d.uniform(1.05, 4.0))
        if which in ("zygmund_1", "hardy_2"):
            P = smp.sample_poly_zeros_in_disk(n, s_a) if rng_d.uniform() < 0.5 \
                else smp.sample_poly_nonvanishing(n, s_a)
            return vf.check_classical(which, P, p=p, R=R, seed=seed, **tol_kw)
        P = smp.sample_poly_nonvanishing(n, s_a)
        if which in ("debruijn_3", "boasrahman_4"):
            return vf.check_classical(which, P, p=p, R=R, seed=seed, **tol_kw)
        if which == "azizrather_5":
            params, _, _ = smp.sample_params(s_b)
            return vf.check_classical(which, P, p=p, params=params, seed=seed, **tol_kw)
        if which == "rahman_11":
            op = smp.sample_admissible_operator(n, s_b)
            return vf.check_classical(which, P, R=R, op=op, seed=seed, **tol_kw)

    raise ValueError(f"unknown statement id: {statement_id!r}")


def _trial_job(args):
    return run_trial(*args).to_jsonable()


def run_suite(config: RunConfig) -> list[dict]:
    """All trials for all statements, in (statement order, trial index) order."""
    jobs = [(sid, config.master_seed, i, config.degree_lo, config.degree_hi, config.tol)
            for sid in config.statements for i in range(config.trials)]
    workers = config.workers or int(os.environ.get("BN_INEQ_WORKERS", "1"))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(_trial_job, jobs, chunksize=8))
    return [_trial_job(j) for j in jobs]


def to_jsonl(records: list[dict]) -> str:
    return "".join(json.dumps(rec, sort_keys=True) + "\n" for rec in records)


def summarize(records: list[dict]) -> dict:
    """Per-statement min/median slack and failure count."""
    by_stmt: dict[str, list[dict]] = {}
    for rec in records:
        by_stmt.setdefault(rec["statement_id"], []).append(rec)
    out = {}
    for sid, recs in by_stmt.items():
        slacks = sorted(r["rel_slack"] for r in recs)
        out[sid] = {"trials": len(recs),
                    "failures": sum(not r["pass"] for r in recs),
                    "min_slack": slacks[0],
                    "median_slack": slacks[len(slacks) // 2]}
    return out
