"""One checker per inequality: compute both sides as displayed, report slack.

Norm-based checkers return relative slack (rhs - lhs)/rhs and pass when it
is above -(tol + 10 * propagated quadrature error).  Pointwise checkers
scan circle grids at the stated radii and normalize the worst margin by
the grid scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import operator as bn
from .norms import NormValue, binomial_norm, lp_norm, one_plus_z_norm
from .poly import (Polynomial, has_all_zeros_in_closed_disk, has_no_zeros_in_open_disk,
                   min_modulus, max_modulus, roots, unit_nodes)
from .sampling import DominatedPair, InequalityInstance

NORM_TOL = 1e-7
POINTWISE_TOL = 1e-9
EQUALITY_TOL = 1e-12

POINTWISE_GRID = 1024

STATEMENT_IDS = ("t1", "t2", "c1", "c2", "ta", "tb",
                 "l1", "l2", "l3", "l2p", "l4", "l3p", "l6", "arestov", "abc",
                 "classical:zygmund_1", "classical:hardy_2", "classical:debruijn_3",
                 "classical:boasrahman_4", "classical:azizrather_5", "classical:rahman_11")


@dataclass(frozen=True)
class SlackReport:
    statement_id: str
    lhs: float
    rhs: float
    rel_slack: float
    norm_err: float
    passed: bool
    seed: int | None = None
    instance: dict | None = None
    extra: dict = field(default_factory=dict)

    def to_jsonable(self) -> dict:
        d = {"statement_id": self.statement_id, "lhs": self.lhs, "rhs": self.rhs,
             "rel_slack": self.rel_slack, "norm_err": self.norm_err,
             "pass": self.passed, "seed": self.seed}
        if self.instance is not None:
            d["instance"] = self.instance
        if self.extra:
            d["extra"] = self.extra
        return d


def _require(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def _norm_or_zero(P: Polynomial, p: float) -> NormValue:
    if P.is_zero():
        return NormValue(0.0, p, 0.0)
    return lp_norm(P, p)


def _ratio_report(statement_id, lhs_nv, num_nv, den_nv, pnorm_nv, inst, tol, extra=None):
    rhs = num_nv.value / den_nv.value * pnorm_nv.value
    norm_err = lhs_nv.rel_err + num_nv.rel_err + den_nv.rel_err + pnorm_nv.rel_err
    rel_slack = (rhs - lhs_nv.value) / max(rhs, 1e-300)
    passed = rel_slack >= -(tol + 10 * norm_err)
    return SlackReport(statement_id, lhs_nv.value, rhs, rel_slack, norm_err, passed,
                       seed=inst.seed if inst is not None else None,
                       instance=inst.to_jsonable() if inst is not None else None,
                       extra=extra or {})


def _den_norm(p: float) -> NormValue:
    # ||1+z||_0 = 1 (root on the circle)
    return NormValue(1.0, 0.0, 0.0) if p == 0 else one_plus_z_norm(p)


def _main_scalars(inst: InequalityInstance):
    n = inst.op.ambient_n
    phi = bn.phi_n(inst.params, n)
    A = (inst.params.R ** n + phi * inst.params.r ** n)
    B = 1.0 + phi
    lam = bn.capital_lambda(inst.op)
    return phi, A, B, lam


def _validate_theorem_instance(inst: InequalityInstance):
    _require(not inst.P.is_zero(), "zero polynomial")
    _require(inst.P.ambient_n == inst.op.ambient_n, "ambient degree mismatch")
    _require(not math.isinf(inst.p), "theorem verifiers need finite p")
    _require(has_no_zeros_in_open_disk(inst.P),
             "precondition failed: P has a zero in |z| < 1")
    _require(bn.is_admissible(inst.op), "operator is not admissible")
    _require(abs(inst.delta) <= 1 + 1e-12, "need |delta| <= 1")


def check_theorem1(inst: InequalityInstance, validate: bool = True,
                   statement_id: str = "t1", tol: float = NORM_TOL) -> SlackReport:
    """||comb||_p <= ||A Lam z + B lam0||_p / ||1+z||_p * ||P||_p."""
    if validate:
        _validate_theorem_instance(inst)
    phi, A, B, lam = _main_scalars(inst)
    comb = bn.lhs_combination(inst.op, inst.P, inst.params)
    lhs_nv = _norm_or_zero(comb, inst.p)
    num_nv = binomial_norm(A * lam, B * inst.op.lam0, inst.p, n_power=inst.op.ambient_n)
    return _ratio_report(statement_id, lhs_nv, num_nv, _den_norm(inst.p),
                         lp_norm(inst.P, inst.p), inst, tol)


def check_theorem2(inst: InequalityInstance, validate: bool = True,
                   statement_id: str = "t2", tol: float = NORM_TOL) -> SlackReport:
    """Theorem 1 with delta * (|A||Lam| - |B||lam0|) * m / 2 added inside the norm."""
    if validate:
        _validate_theorem_instance(inst)
    phi, A, B, lam = _main_scalars(inst)
    m = min_modulus(inst.P, 1.0)
    m_coeff = abs(A) * abs(lam) - abs(B) * abs(inst.op.lam0)
    comb = bn.lhs_combination(inst.op, inst.P, inst.params)
    shifted = comb.plus_constant(inst.delta * m_coeff * m / 2.0)
    lhs_nv = _norm_or_zero(shifted, inst.p)
    num_nv = binomial_norm(A * lam, B * inst.op.lam0, inst.p, n_power=inst.op.ambient_n)
    return _ratio_report(statement_id, lhs_nv, num_nv, _den_norm(inst.p),
                         lp_norm(inst.P, inst.p), inst, tol,
                         extra={"m": m, "m_coefficient": m_coeff})


def check_corollary1(inst: InequalityInstance, validate: bool = True) -> SlackReport:
    """Theorem 1 with beta forced to 0, so the mixing factor is -alpha."""
    params = bn.PhiParams(inst.params.R, inst.params.r, inst.params.alpha, 0.0)
    forced = InequalityInstance(inst.P, inst.op, params, inst.delta, inst.p, inst.seed)
    return check_theorem1(forced, validate=validate, statement_id="c1")


def check_theorem_a(inst: InequalityInstance, validate: bool = True) -> SlackReport:
    """Corollary 1 at alpha = 0: the pure-dilation bound."""
    params = bn.PhiParams(inst.params.R, inst.params.r, 0.0, 0.0)
    forced = InequalityInstance(inst.P, inst.op, params, inst.delta, inst.p, inst.seed)
    return check_theorem1(forced, validate=validate, statement_id="ta")


def check_theorem_b(inst: InequalityInstance, validate: bool = True) -> SlackReport:
    """Corollary 1 at r = 1: mixing the dilation with the operator itself."""
    params = bn.PhiParams(inst.params.R, 1.0, inst.params.alpha, 0.0)
    forced = InequalityInstance(inst.P, inst.op, params, inst.delta, inst.p, inst.seed)
    return check_theorem1(forced, validate=validate, statement_id="tb")


def check_corollary2(inst: InequalityInstance, validate: bool = True,
                     statement_id: str = "c2", tol: float = NORM_TOL) -> SlackReport:
    """Identity-operator case, exactly as printed: the m-coefficient is
    |R^n + phi r^n| - |1 + phi| (leading multiplier and lam0 normalized to 1)."""
    n = inst.P.ambient_n
    if validate:
        _require(not inst.P.is_zero(), "zero polynomial")
        _require(not math.isinf(inst.p), "theorem verifiers need finite p")
        _require(has_no_zeros_in_open_disk(inst.P),
                 "precondition failed: P has a zero in |z| < 1")
        _require(abs(inst.delta) <= 1 + 1e-12, "need |delta| <= 1")
    phi = bn.phi_n(inst.params, n)
    A = inst.params.R ** n + phi * inst.params.r ** n
    B = 1.0 + phi
    m = min_modulus(inst.P, 1.0)
    m_coeff = abs(A) - abs(B)
    comb = inst.P.scale_arg(inst.params.R) + inst.P.scale_arg(inst.params.r).scaled(phi)
    shifted = comb.plus_constant(inst.delta * m_coeff * m / 2.0)
    lhs_nv = _norm_or_zero(shifted, inst.p)
    num_nv = binomial_norm(A, B, inst.p, n_power=n)
    return _ratio_report(statement_id, lhs_nv, num_nv, _den_norm(inst.p),
                         lp_norm(inst.P, inst.p), inst, tol,
                         extra={"m": m, "m_coefficient": m_coeff})


# -- pointwise lemma checkers ---------------------------------------------


def _grid_eval(P: Polynomial, radius: float, n_nodes: int) -> np.ndarray:
    return np.abs(P.eval(radius * unit_nodes(n_nodes)))


def _pointwise_report(statement_id, margin_fn, seed=None, instance=None,
                      tol: float = POINTWISE_TOL, extra=None) -> SlackReport:
    """margin_fn(n_nodes) -> (lhs_values, rhs_values) stacked over all radii."""
    n_nodes = POINTWISE_GRID
    lhs_v, rhs_v = margin_fn(n_nodes)
    scale = max(float(np.max(rhs_v)), float(np.max(lhs_v)), 1e-300)
    if float(np.min(rhs_v - lhs_v)) < 10 * tol * scale:
        # one refinement doubling when the margin is nearly tight
        lhs_v, rhs_v = margin_fn(2 * n_nodes)
        scale = max(float(np.max(rhs_v)), float(np.max(lhs_v)), 1e-300)
    i = int(np.argmin(rhs_v - lhs_v))
    lhs, rhs = float(lhs_v[i]), float(rhs_v[i])
    rel_slack = (rhs - lhs) / scale
    return SlackReport(statement_id, lhs, rhs, rel_slack, 0.0, rel_slack >= -tol,
                       seed=seed, instance=instance, extra=extra or {})


def check_lemma1(P: Polynomial, R: float, r: float, seed=None) -> SlackReport:
    """|P(Rz)| >= ((R+1)/(r+1))^n |P(rz)| on |z| = 1 for zeros-in-disk P."""
    _require(has_all_zeros_in_closed_disk(P), "precondition failed: zeros not in closed disk")
    _require(R >= r >= 1, "need R >= r >= 1")
    n = P.ambient_n
    K = ((R + 1.0) / (r + 1.0)) ** n

    def margins(n_nodes):
        return K * _grid_eval(P, r, n_nodes), _grid_eval(P, R, n_nodes)

    return _pointwise_report("l1", margins, seed=seed,
                             instance={"poly": P.to_jsonable(), "R": R, "r": r})


def check_lemma2(P: Polynomial, op: bn.BnOperator, seed=None) -> SlackReport:
    """Zeros-in-disk P: the operator image keeps all zeros in |z| <= 1."""
    _require(has_all_zeros_in_closed_disk(P), "precondition failed: zeros not in closed disk")
    _require(bn.is_admissible(op), "operator is not admissible")
    BP = bn.apply(op, P)
    if BP.is_zero():
        raise ValueError("operator image is identically zero")
    if BP.actual_degree() == 0:
        lhs = 0.0
    else:
        lhs = float(np.max(np.abs(roots(BP))))
    rel_slack = 1.0 - lhs
    return SlackReport("l2", lhs, 1.0, rel_slack, 0.0, lhs <= 1.0 + 1e-8, seed=seed,
                       instance={"poly": P.to_jsonable(), "op": op.to_jsonable()})


def check_lemma3(pair: DominatedPair, op: bn.BnOperator, params: bn.PhiParams,
                 seed=None) -> SlackReport:
    """Domination |P| <= |F| on the circle is preserved by the combination."""
    _require(pair.check(), "dominated-pair invariant violated")
    comb_p = bn.lhs_combination(op, pair.P, params)
    comb_f = bn.lhs_combination(op, pair.F, params)

    def margins(n_nodes):
        lhs = np.concatenate([_grid_eval(comb_p, rad, n_nodes) for rad in (1.0, 1.25, 2.0)])
        rhs = np.concatenate([_grid_eval(comb_f, rad, n_nodes) for rad in (1.0, 1.25, 2.0)])
        return lhs, rhs

    return _pointwise_report("l3", margins, seed=seed,
                             instance={"poly": pair.P.to_jsonable(), "F": pair.F.to_jsonable(),
                                       "op": op.to_jsonable(), "params": params.to_jsonable()})


def check_lemma2prime(P: Polynomial, op: bn.BnOperator, params: bn.PhiParams,
                      seed=None) -> SlackReport:
    """|comb(z)| >= |R^n + phi r^n| |Lam| |z|^n m for zeros-in-disk P."""
    _require(has_all_zeros_in_closed_disk(P), "precondition failed: zeros not in closed disk")
    n = op.ambient_n
    phi = bn.phi_n(params, n)
    m = min_modulus(P, 1.0)
    bound_unit = abs(params.R ** n + phi * params.r ** n) * abs(bn.capital_lambda(op)) * m
    comb = bn.lhs_combination(op, P, params)

    def margins(n_nodes):
        lhs = np.concatenate([np.full(n_nodes, bound_unit * rad ** n) for rad in (1.0, 1.5)])
        rhs = np.concatenate([_grid_eval(comb, rad, n_nodes) for rad in (1.0, 1.5)])
        return lhs, rhs

    return _pointwise_report("l2p", margins, seed=seed, extra={"m": m},
                             instance={"poly": P.to_jsonable(), "op": op.to_jsonable(),
                                       "params": params.to_jsonable()})


def check_lemma4(P: Polynomial, op: bn.BnOperator, params: bn.PhiParams,
                 seed=None) -> SlackReport:
    """|comb(P)| <= |comb(P*)| on |z| >= 1 for nonvanishing P."""
    _require(has_no_zeros_in_open_disk(P), "precondition failed: P has a zero in |z| < 1")
    comb_p = bn.lhs_combination(op, P, params)
    comb_star = bn.lhs_combination(op, P.conj_reciprocal(), params)

    def margins(n_nodes):
        lhs = np.concatenate([_grid_eval(comb_p, rad, n_nodes) for rad in (1.0, 1.5)])
        rhs = np.concatenate([_grid_eval(comb_star, rad, n_nodes) for rad in (1.0, 1.5)])
        return lhs, rhs

    return _pointwise_report("l4", margins, seed=seed,
                             instance={"poly": P.to_jsonable(), "op": op.to_jsonable(),
                                       "params": params.to_jsonable()})


def check_lemma3prime(P: Polynomial, op: bn.BnOperator, params: bn.PhiParams,
                      seed=None) -> SlackReport:
    """|comb(P)| <= |comb(P*)| - (|A||Lam| - |B||lam0|) m on |z| = 1."""
    _require(has_no_zeros_in_open_disk(P), "precondition failed: P has a zero in |z| < 1")
    n = op.ambient_n
    phi = bn.phi_n(params, n)
    m = min_modulus(P, 1.0)
    m_coeff = (abs(params.R ** n + phi * params.r ** n) * abs(bn.capital_lambda(op))
               - abs(1.0 + phi) * abs(op.lam0))
    comb_p = bn.lhs_combination(op, P, params)
    comb_star = bn.lhs_combination(op, P.conj_reciprocal(), params)

    def margins(n_nodes):
        return _grid_eval(comb_p, 1.0, n_nodes), _grid_eval(comb_star, 1.0, n_nodes) - m_coeff * m

    # sign of the m-coefficient is recorded, not assumed (see ledger)
    return _pointwise_report("l3p", margins, seed=seed,
                             extra={"m": m, "m_coefficient": m_coeff},
                             instance={"poly": P.to_jsonable(), "op": op.to_jsonable(),
                                       "params": params.to_jsonable()})


def check_lemma6(P: Polynomial, op: bn.BnOperator, params: bn.PhiParams,
                 eta: float, p: float, seed=None, tol: float = NORM_TOL) -> SlackReport:
    """p-th power circle integrals of the rotated sum against the scalar bound."""
    _require(p > 0 and not math.isinf(p), "need 0 < p < inf")
    _require(has_no_zeros_in_open_disk(P), "precondition failed: P has a zero in |z| < 1")
    n = op.ambient_n
    phi = bn.phi_n(params, n)
    phi_bar = bn.phi_n(bn.PhiParams(params.R, params.r, params.alpha.conjugate(),
                                    params.beta.conjugate()), n)
    rot = complex(math.cos(eta), math.sin(eta))
    comb = bn.lhs_combination(op, P, params)
    starred = bn.starred_combination(op, P, params)
    Q = comb.scaled(rot) + starred
    scalar = ((params.R ** n + phi * params.r ** n) * bn.capital_lambda(op) * rot
              + (1.0 + phi_bar) * op.lam0.conjugate())
    lhs_nv = _norm_or_zero(Q, p)
    pnorm = lp_norm(P, p)
    lhs = lhs_nv.value ** p
    rhs = abs(scalar) ** p * pnorm.value ** p
    norm_err = p * (lhs_nv.rel_err + pnorm.rel_err)
    rel_slack = (rhs - lhs) / max(rhs, 1e-300)
    passed = rel_slack >= -(tol + 10 * norm_err)
    return SlackReport("l6", lhs, rhs, rel_slack, norm_err, passed, seed=seed,
                       instance={"poly": P.to_jsonable(), "op": op.to_jsonable(),
                                 "params": params.to_jsonable(), "eta": eta, "p": p})


def check_arestov(P: Polynomial, g: bn.GammaOperator, p: float, seed=None,
                  tol: float = NORM_TOL) -> SlackReport:
    """||C_gamma P||_p <= max(|gamma_0|, |gamma_n|) ||P||_p for certified families."""
    if g.family not in ("dilation", "reversed_dilation"):
        raise ValueError("admissibility not certified for this multiplier family")
    _require(p > 0, "need p > 0")
    if g.family == "dilation":
        _require(abs(g.gamma[1]) <= 1 + 1e-12, "dilation family needs |delta| <= 1")
        _require(has_no_zeros_in_open_disk(P), "dilation family needs nonvanishing P")
    lhs_nv = _norm_or_zero(bn.c_gamma_apply(g, P), p)
    pnorm = lp_norm(P, p)
    rhs = bn.c_gamma_bound(g) * pnorm.value
    norm_err = lhs_nv.rel_err + pnorm.rel_err
    rel_slack = (rhs - lhs_nv.value) / max(rhs, 1e-300)
    passed = rel_slack >= -(tol + 10 * norm_err)
    return SlackReport("arestov", lhs_nv.value, rhs, rel_slack, norm_err, passed, seed=seed,
                       instance={"poly": P.to_jsonable(),
                                 "gamma": [[x.real, x.imag] for x in g.gamma],
                                 "family": g.family, "p": p})


def check_lemma_abc(A: float, B: float, C: float, gamma: float, seed=None) -> SlackReport:
    """|(A-C)e^(i gamma) + (B+C)| <= |A e^(i gamma) + B| when B + C <= A."""
    _require(min(A, B, C) >= 0, "need nonnegative A, B, C")
    _require(B + C <= A + 1e-15, "precondition failed: need B + C <= A")
    e = complex(math.cos(gamma), math.sin(gamma))
    lhs = abs((A - C) * e + (B + C))
    rhs = abs(A * e + B)
    rel_slack = (rhs - lhs) / max(rhs, 1e-300)
    return SlackReport("abc", lhs, rhs, rel_slack, 0.0, lhs <= rhs + 1e-12, seed=seed,
                       instance={"A": A, "B": B, "C": C, "gamma": gamma})


# -- classical regression targets ------------------------------------------


def check_classical(which: str, P: Polynomial, p: float | None = None,
                    params: bn.PhiParams | None = None, R: float | None = None,
                    op: bn.BnOperator | None = None, seed=None,
                    tol: float = NORM_TOL) -> SlackReport:
    sid = f"classical:{which}"
    n = P.ambient_n
    if which == "zygmund_1":
        _require(p is not None and p > 0, "need p > 0")
        lhs_nv = _norm_or_zero(P.derivative(), p)
        pnorm = lp_norm(P, p)
        rhs = n * pnorm.value
        norm_err = lhs_nv.rel_err + pnorm.rel_err
    elif which == "hardy_2":
        _require(R is not None and R > 1 and p > 0, "need R > 1 and p > 0")
        lhs_nv = lp_norm(P.scale_arg(R), p)
        pnorm = lp_norm(P, p)
        rhs = R ** n * pnorm.value
        norm_err = lhs_nv.rel_err + pnorm.rel_err
    elif which == "debruijn_3":
        _require(has_no_zeros_in_open_disk(P), "precondition failed: P vanishes in |z| < 1")
        lhs_nv = _norm_or_zero(P.derivative(), p)
        pnorm, den = lp_norm(P, p), _den_norm(p)
        rhs = n * pnorm.value / den.value
        norm_err = lhs_nv.rel_err + pnorm.rel_err + den.rel_err
    elif which == "boasrahman_4":
        _require(has_no_zeros_in_open_disk(P), "precondition failed: P vanishes in |z| < 1")
        _require(R is not None and R > 1 and p > 0, "need R > 1 and p > 0")
        lhs_nv = lp_norm(P.scale_arg(R), p)
        num, den, pnorm = binomial_norm(R ** n, 1.0, p), _den_norm(p), lp_norm(P, p)
        rhs = num.value / den.value * pnorm.value
        norm_err = lhs_nv.rel_err + num.rel_err + den.rel_err + pnorm.rel_err
    elif which == "azizrather_5":
        _require(params is not None and p is not None, "need params and p")
        inst = InequalityInstance(P, bn.identity_operator(n), params, 0.0, p, seed or 0)
        rep = check_corollary2(inst, statement_id=sid, tol=tol)
        return SlackReport(sid, rep.lhs, rep.rhs, rep.rel_slack, rep.norm_err, rep.passed,
                           seed=seed, instance=rep.instance, extra=rep.extra)
    elif which == "rahman_11":
        _require(has_no_zeros_in_open_disk(P), "precondition failed: P vanishes in |z| < 1")
        _require(R is not None and R >= 1 and op is not None, "need R >= 1 and an operator")
        _require(op.ambient_n == n, "ambient degree mismatch")
        image = bn.apply(op, P.scale_arg(R))
        bound = 0.5 * (R ** n * abs(bn.capital_lambda(op)) + abs(op.lam0)) * max_modulus(P, 1.0)

        def margins(n_nodes):
            return _grid_eval(image, 1.0, n_nodes), np.full(n_nodes, bound)

        return _pointwise_report(sid, margins, seed=seed, tol=tol,
                                 instance={"poly": P.to_jsonable(), "op": op.to_jsonable(),
                                           "R": R})
    else:
        raise ValueError(f"unknown classical inequality id: {which!r}")
    rel_slack = (rhs - lhs_nv.value) / max(rhs, 1e-300)
    passed = rel_slack >= -(tol + 10 * norm_err)
    return SlackReport(sid, lhs_nv.value, rhs, rel_slack, norm_err, passed, seed=seed,
                       instance={"poly": P.to_jsonable(),
                                 "p": ("inf" if p is not None and math.isinf(p) else p),
                                 "R": R})
