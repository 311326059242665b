"""End-to-end acceptance checks, one test per criterion.

Each test prints a single summary line so a full run reads as a checklist.
All randomized suites are seeded and reproduce byte-identically.
"""

import math
import time

import numpy as np

import bnineq.operator as bn
import bnineq.sampling as smp
import bnineq.search as xs
import bnineq.verify as vf
from bnineq import cli, harness
from bnineq.norms import binomial_norm, lp_norm, mahler_measure_jensen, wallis_one_plus_z
from bnineq.poly import Polynomial, from_roots

MASTER_SEED = 20260823
P_GRID = (0.0, 0.5, 1.0, 2.0, 4.0)


def _reconstruct_theorem_instance(master_seed: int, index: int,
                                  lo: int = 1, hi: int = 8) -> smp.InequalityInstance:
    """Same instance the harness builds for a theorem-style trial."""
    seed = smp.trial_seed(master_seed, index)
    s_pick = np.random.SeedSequence(seed).spawn(5)[0]
    n = int(np.random.default_rng(s_pick).integers(lo, hi + 1))
    return smp.sample_instance(n, seed)


def test_criterion_1_theorem1_suite():
    t0 = time.time()
    worst = math.inf
    for i in range(500):
        rep = harness.run_trial("t1", MASTER_SEED, i, 1, 8)
        worst = min(worst, rep.rel_slack)
        assert rep.passed, (i, rep.rel_slack, rep.norm_err)
    elapsed = time.time() - t0
    assert elapsed <= 120.0
    print(f"criterion 1: PASS (500 trials, min rel_slack {worst:.3e}, {elapsed:.1f}s)")


def test_criterion_2_theorem2_suite_and_m_zero_reduction():
    t0 = time.time()
    worst, reduced = math.inf, 0
    for i in range(500):
        inst = _reconstruct_theorem_instance(MASTER_SEED, i)
        r2 = vf.check_theorem2(inst)
        worst = min(worst, r2.rel_slack)
        assert r2.passed, (i, r2.rel_slack, r2.norm_err)
        if r2.extra["m"] <= 1e-9:
            # a circle zero kills the delta term, so the report collapses
            r1 = vf.check_theorem1(inst)
            assert abs(r2.lhs - r1.lhs) <= 1e-9 * max(1.0, r1.lhs)
            assert abs(r2.rhs - r1.rhs) <= 1e-9 * max(1.0, r1.rhs)
            assert abs(r2.rel_slack - r1.rel_slack) <= 1e-9
            reduced += 1
    elapsed = time.time() - t0
    assert reduced > 0
    assert elapsed <= 120.0
    print(f"criterion 2: PASS (500 trials, {reduced} m=0 reductions, "
          f"min rel_slack {worst:.3e}, {elapsed:.1f}s)")


def test_criterion_3_equality_certification():
    rng = np.random.default_rng(MASTER_SEED)
    worst = 0.0
    for i in range(50):
        n = int(rng.integers(1, 9))
        inst = smp.sample_instance(n, int(rng.integers(1 << 60)), extremal=True)
        for p in P_GRID:
            probe = smp.InequalityInstance(inst.P, inst.op, inst.params, inst.delta, p, inst.seed)
            for check in (vf.check_theorem1, vf.check_corollary1, vf.check_corollary2):
                rep = check(probe)
                worst = max(worst, abs(rep.rel_slack))
                assert abs(rep.rel_slack) <= 1e-6, (i, p, rep.statement_id, rep.rel_slack)
    print(f"criterion 3: PASS (50 extremal instances, max |rel_slack| {worst:.3e})")


def test_criterion_4_lemma_suites():
    suites = ("l1", "l2", "l3", "l2p", "l4", "l3p", "l6", "abc", "arestov")
    for sid in suites:
        hi = 16 if sid == "l2" else 8
        for i in range(200):
            rep = harness.run_trial(sid, MASTER_SEED, i, 1, hi)
            assert rep.passed, (sid, i, rep.rel_slack)
            if sid == "l2":
                assert rep.lhs <= 1.0 + 1e-8
    print(f"criterion 4: PASS ({len(suites)} lemma suites x 200 trials)")


def test_criterion_5_classical_regressions():
    # derivative bound is an equality at the pure monomial: both sides equal n
    for n in (3, 7):
        P = Polynomial(tuple([0j] * n + [1.0 + 0j]), n)
        for p in (0.5, 2.0):
            rep = vf.check_classical("zygmund_1", P, p=p)
            assert abs(rep.lhs - n) <= 1e-9 * n and abs(rep.rhs - n) <= 1e-9 * n
    # the nonvanishing refinement is tight at the binomial z^n + 1
    for n in (2, 5):
        P = Polynomial(tuple([1.0 + 0j] + [0j] * (n - 1) + [1.0 + 0j]), n)
        rep = vf.check_classical("debruijn_3", P, p=2.0)
        assert abs(rep.rel_slack) <= 1e-6
    for sid in ("classical:boasrahman_4", "classical:azizrather_5", "classical:rahman_11"):
        for i in range(200):
            rep = harness.run_trial(sid, MASTER_SEED, i, 1, 8, tol=1e-7)
            assert rep.passed, (sid, i, rep.rel_slack)
    print("criterion 5: PASS (equality anchors + 3 suites x 200 trials at 1e-7)")


def test_criterion_6_oracle_battery():
    rng = np.random.default_rng(MASTER_SEED)
    for p in (0.5, 1.0, 2.0, 3.0, 4.0):
        q = binomial_norm(1.0, 1.0, p).value
        w = wallis_one_plus_z(p)
        assert abs(q - w) <= 1e-9 * w
    # geometric means: root product vs log quadrature, roots off the circle
    for _ in range(10):
        n = int(rng.integers(1, 7))
        mods = np.where(rng.uniform(size=n) < 0.5,
                        rng.uniform(0.05, 0.999, n), rng.uniform(1.001, 3.0, n))
        zs = mods * np.exp(1j * rng.uniform(0, 2 * math.pi, n))
        P = from_roots(zs, 1.0 + 0.3j, n)
        nv = lp_norm(P, 0.0)
        assert abs(nv.value - mahler_measure_jensen(P)) == 0.0
        assert nv.err_estimate <= 1e-4 * max(nv.value, 1.0)
    for _ in range(50):
        A = rng.normal() + 1j * rng.normal()
        B = rng.normal() + 1j * rng.normal()
        npow = int(rng.integers(2, 11))
        p = float(rng.choice([0.5, 1.0, 2.0, 4.0]))
        coeffs = [B] + [0j] * (npow - 1) + [A]
        full = lp_norm(Polynomial(tuple(coeffs), npow), p).value
        collapsed = binomial_norm(A, B, p, n_power=npow).value
        assert abs(full - collapsed) <= 1e-8 * max(1.0, full)
    assert cli.main(["oracle", "--seed", "1"]) == 0
    print("criterion 6: PASS (Wallis, Jensen, degree-collapse, CLI battery)")


def _assert_reports_equal(a: vf.SlackReport, b: vf.SlackReport, tag: str):
    assert abs(a.lhs - b.lhs) <= 1e-12 * max(1.0, abs(b.lhs)), tag
    assert abs(a.rhs - b.rhs) <= 1e-12 * max(1.0, abs(b.rhs)), tag
    assert abs(a.rel_slack - b.rel_slack) <= 1e-12, tag


def test_criterion_7_specialization_chains():
    rng = np.random.default_rng(MASTER_SEED)
    for i in range(50):
        n = int(rng.integers(1, 9))
        inst = smp.sample_instance(n, int(rng.integers(1 << 60)))
        pm = inst.params
        # delta = 0 collapses the refined bound onto the base one
        d0 = smp.InequalityInstance(inst.P, inst.op, pm, 0.0, inst.p, inst.seed)
        _assert_reports_equal(vf.check_theorem2(d0), vf.check_theorem1(d0), "t2->t1")
        # beta = 0 is the first corollary
        b0 = smp.InequalityInstance(inst.P, inst.op,
                                    bn.PhiParams(pm.R, pm.r, pm.alpha, 0.0),
                                    inst.delta, inst.p, inst.seed)
        _assert_reports_equal(vf.check_theorem1(b0), vf.check_corollary1(b0), "t1->c1")
        # alpha = beta = 0 is the pure-dilation bound
        a0 = smp.InequalityInstance(inst.P, inst.op,
                                    bn.PhiParams(pm.R, pm.r, 0.0, 0.0),
                                    inst.delta, inst.p, inst.seed)
        _assert_reports_equal(vf.check_corollary1(a0), vf.check_theorem_a(a0), "c1->ta")
        # r = 1 mixes the dilation with the operator itself
        r1 = smp.InequalityInstance(inst.P, inst.op,
                                    bn.PhiParams(pm.R, 1.0, pm.alpha, 0.0),
                                    inst.delta, inst.p, inst.seed)
        _assert_reports_equal(vf.check_corollary1(r1), vf.check_theorem_b(r1), "c1->tb")
        # identity operator specializes the refined bound to the second corollary
        ident = smp.InequalityInstance(inst.P, bn.identity_operator(n), pm,
                                       inst.delta, inst.p, inst.seed)
        _assert_reports_equal(vf.check_theorem2(ident), vf.check_corollary2(ident), "t2->c2")
        # delta = 0 on the second corollary is the classical two-radii bound
        c2d0 = smp.InequalityInstance(inst.P, bn.identity_operator(n), pm,
                                      0.0, inst.p, inst.seed)
        classical = vf.check_classical("azizrather_5", inst.P, p=inst.p, params=pm,
                                       seed=inst.seed)
        _assert_reports_equal(vf.check_corollary2(c2d0), classical, "c2->two_radii")
    print("criterion 7: PASS (6 specialization identities x 50 instances at 1e-12)")


def test_criterion_8_sharpness_search():
    t0 = time.time()
    ratios = {}
    for sid in ("t1", "t2"):
        res = xs.sharpness_certify(sid, 4, [1.0, 2.0], restarts=50, budget=2000,
                                   rng_seed=MASTER_SEED)
        ratios[sid] = res.best_ratio
        assert 1.0 - 1e-3 <= res.best_ratio <= 1.0 + 1e-6, (sid, res.best_ratio)
    elapsed = time.time() - t0
    assert elapsed <= 600.0
    print(f"criterion 8: PASS (t1 {ratios['t1']:.9f}, t2 {ratios['t2']:.9f}, {elapsed:.0f}s)")


def test_criterion_9_determinism_across_workers():
    config1 = harness.RunConfig(statements=("t1", "l1", "abc"), trials=20,
                                master_seed=MASTER_SEED, workers=1)
    config2 = harness.RunConfig(statements=("t1", "l1", "abc"), trials=20,
                                master_seed=MASTER_SEED, workers=2)
    out1 = harness.to_jsonl(harness.run_suite(config1))
    out2 = harness.to_jsonl(harness.run_suite(config2))
    assert out1.encode() == out2.encode()
    out3 = harness.to_jsonl(harness.run_suite(config1))
    assert out1 == out3
    print("criterion 9: PASS (byte-identical JSONL, workers 1 vs 2)")
