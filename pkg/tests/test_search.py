import numpy as np
import pytest

import bnineq.operator as bn
import bnineq.search as xs
import bnineq.verify as vf
from bnineq.poly import has_no_zeros_in_open_disk


def test_decode_always_yields_feasible_instances():
    rng = np.random.default_rng(1)
    for sid in ("t1", "t2", "c1", "c2"):
        for n in (1, 3, 6):
            vec = rng.normal(0.0, 2.0, xs.point_dim(n))
            inst = xs.decode(sid, vec, n, 2.0)
            assert has_no_zeros_in_open_disk(inst.P)
            assert bn.is_admissible(inst.op)
            assert inst.params.R > inst.params.r >= 1.0
            assert abs(inst.delta) <= 1.0 + 1e-12


def test_decode_respects_statement_structure():
    vec = np.random.default_rng(2).normal(size=xs.point_dim(4))
    c1 = xs.decode("c1", vec, 4, 1.0)
    assert c1.params.beta == 0
    c2 = xs.decode("c2", vec, 4, 1.0)
    assert c2.op == bn.identity_operator(4)


def test_decode_size_check():
    with pytest.raises(ValueError):
        xs.decode("t1", np.zeros(5), 3, 2.0)
    with pytest.raises(ValueError):
        xs.ratio_objective("l1", np.zeros(xs.point_dim(2)), 2, 2.0)


def test_ratio_matches_checker_slack():
    vec = np.random.default_rng(3).normal(size=xs.point_dim(3))
    inst = xs.decode("t1", vec, 3, 2.0)
    rep = vf.check_theorem1(inst)
    ratio = xs.instance_ratio("t1", inst)
    assert abs(ratio - rep.lhs / rep.rhs) <= 1e-12
    assert ratio <= 1.0 + 1e-7


def test_equality_family_start_is_nearly_extremal():
    for n in (1, 4):
        for p in (1.0, 2.0):
            r = xs.ratio_objective("t1", xs.equality_family_start(n), n, p)
            assert abs(r - 1.0) <= 1e-6


def test_local_search_trace_is_monotone():
    rng = np.random.default_rng(4)
    start = rng.normal(size=xs.point_dim(3))
    res = xs.local_search("t1", start, 3, 2.0, budget=150, rng_seed=5)
    ratios = [r for _, r in res.trace]
    assert all(a <= b for a, b in zip(ratios, ratios[1:]))
    assert res.evals <= 150
    assert res.best_ratio == ratios[-1]
    assert res.best_ratio <= 1.0 + 1e-7


def test_local_search_validates_budget():
    with pytest.raises(ValueError):
        xs.local_search("t1", np.zeros(xs.point_dim(2)), 2, 2.0, budget=0)
    with pytest.raises(ValueError):
        xs.sharpness_certify("t1", 2, [2.0], restarts=0, budget=10)


def test_small_certify_run_reaches_equality_region():
    res = xs.sharpness_certify("t1", 2, [2.0], restarts=2, budget=200, rng_seed=6)
    assert 1.0 - 1e-2 <= res.best_ratio <= 1.0 + 1e-6
    doc = res.to_jsonable()
    assert set(doc) == {"best_ratio", "best_instance", "evals", "trace"}
