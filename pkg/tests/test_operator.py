import math

import numpy as np
import pytest

import bnineq.operator as bn
from bnineq.poly import Polynomial, from_roots, unit_nodes
from bnineq.sampling import sample_admissible_operator, sample_params, sample_poly_nonvanishing


def test_u_polynomial_known_coefficients():
    op = bn.BnOperator(1.0, 1.0, 0.0, 4)
    assert bn.u_polynomial(op).coeffs == (1.0 + 0j, 4.0 + 0j, 0j)


def test_capital_lambda_is_action_on_monomial():
    assert bn.capital_lambda(bn.BnOperator(0.0, 1.0, 0.0, 2)) == 2.0
    rng = np.random.default_rng(2)
    for n in (1, 2, 5):
        lams = rng.normal(size=3) + 1j * rng.normal(size=3)
        if n == 1:
            lams[2] = 0.0
        op = bn.BnOperator(lams[0], lams[1], lams[2], n)
        zn = Polynomial(tuple([0j] * n + [1.0 + 0j]), n)
        image = bn.apply(op, zn)
        assert abs(image.coeffs[n] - bn.capital_lambda(op)) <= 1e-12
        # capital lambda equals u evaluated at n/2
        assert abs(bn.u_polynomial(op).eval(n / 2) - bn.capital_lambda(op)) <= 1e-12


def test_multipliers_are_diagonal_action():
    rng = np.random.default_rng(9)
    n = 5
    op = sample_admissible_operator(n, 42)
    P = Polynomial(tuple(rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1)), n)
    b = bn.monomial_multipliers(op)
    image = bn.apply(op, P)
    assert np.allclose(image.coeffs, b * np.array(P.coeffs), rtol=1e-13, atol=1e-13)


def test_admissibility_boundary_and_violation():
    # u = -1 + 2z has its root at 0.5 = n/4 for n = 2: admissible
    assert bn.is_admissible(bn.BnOperator(-1.0, 1.0, 0.0, 2))
    # same triple at n = 1 puts the root at 1 > 1/4: not admissible
    assert not bn.is_admissible(bn.BnOperator(-1.0, 1.0, 0.0, 1))
    assert bn.is_admissible(bn.identity_operator(3))


def test_all_zero_triple_rejected():
    with pytest.raises(ValueError):
        bn.BnOperator(0.0, 0.0, 0.0, 2)


def test_admissible_implies_lambda_dominates_lam0():
    for seed in range(30):
        n = int(np.random.default_rng(seed).integers(1, 9))
        op = sample_admissible_operator(n, seed)
        assert bn.capital_lambda(op) != 0
        assert abs(bn.capital_lambda(op)) >= abs(op.lam0) - 1e-12


def test_phi_n_known_value_and_conjugation_symmetry():
    params = bn.PhiParams(3.0, 1.0, 0.0, 0.0)
    assert bn.phi_n(params, 2) == 0.0
    rng = np.random.default_rng(17)
    for _ in range(10):
        params, _, _ = sample_params(rng.integers(1 << 30))
        n = int(rng.integers(1, 9))
        conj_params = bn.PhiParams(params.R, params.r,
                                   params.alpha.conjugate(), params.beta.conjugate())
        lhs = bn.phi_n(conj_params, n)
        rhs = bn.phi_n(params, n).conjugate()
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))


def test_phi_params_validation():
    with pytest.raises(ValueError):
        bn.PhiParams(1.5, 1.5, 0.0, 0.0)
    with pytest.raises(ValueError):
        bn.PhiParams(2.0, 0.5, 0.0, 0.0)
    with pytest.raises(ValueError):
        bn.PhiParams(2.0, 1.0, 1.5, 0.0)
    with pytest.raises(ValueError):
        bn.PhiParams(2.0, 1.0, 0.0, -1.5)


def test_lhs_combination_matches_definition():
    n = 4
    op = sample_admissible_operator(n, 5)
    P = sample_poly_nonvanishing(n, 6)
    params, _, _ = sample_params(7)
    phi = bn.phi_n(params, n)
    comb = bn.lhs_combination(op, P, params)
    direct = bn.apply(op, P.scale_arg(params.R)) + bn.apply(op, P.scale_arg(params.r)).scaled(phi)
    assert comb.coeffs == direct.coeffs


def test_starred_combination_identity():
    # star of the combination built on P* equals the combination of the
    # starred dilations with phi taken at conjugated (alpha, beta)
    n = 3
    op = sample_admissible_operator(n, 21)
    P = sample_poly_nonvanishing(n, 22)
    params, _, _ = sample_params(23)
    phi_bar = bn.phi_n(bn.PhiParams(params.R, params.r, params.alpha.conjugate(),
                                    params.beta.conjugate()), n)
    S = P.conj_reciprocal()
    direct = (bn.apply(op, S.scale_arg(params.R)).conj_reciprocal()
              + bn.apply(op, S.scale_arg(params.r)).conj_reciprocal().scaled(phi_bar))
    got = bn.starred_combination(op, P, params)
    assert np.allclose(got.coeffs, direct.coeffs, rtol=1e-12, atol=1e-12)


def test_starred_combination_modulus_on_circle():
    n = 5
    op = sample_admissible_operator(n, 31)
    P = sample_poly_nonvanishing(n, 32)
    params, _, _ = sample_params(33)
    comb_star = bn.lhs_combination(op, P.conj_reciprocal(), params)
    got = bn.starred_combination(op, P, params)
    z = unit_nodes(256)
    assert np.allclose(np.abs(got.eval(z)), np.abs(comb_star.eval(z)), rtol=1e-11, atol=1e-11)


def test_gamma_operator_families():
    d = 0.5 + 0.25j
    g = bn.GammaOperator.dilation(d, 3)
    assert g.gamma == (1.0 + 0j, d, d ** 2, d ** 3)
    h = bn.GammaOperator.reversed_dilation(d, 3)
    assert h.gamma == (d ** 3, d ** 2, d, 1.0 + 0j)
    assert bn.c_gamma_bound(g) == 1.0
    assert bn.c_gamma_bound(h) == 1.0
    P = Polynomial((1.0, 2.0, 0.0, 1.0), 3)
    image = bn.c_gamma_apply(g, P)
    for t in (0.3, 1.1):
        z = complex(math.cos(t), math.sin(t))
        assert abs(image.eval(z) - P.eval(d * z)) <= 1e-12


def test_gamma_apply_length_mismatch():
    g = bn.GammaOperator.dilation(0.5, 2)
    with pytest.raises(ValueError):
        bn.c_gamma_apply(g, Polynomial((1.0, 1.0), 1))


def test_operator_jsonable_roundtrip():
    op = bn.BnOperator(1.0 + 1j, -0.25, 0.125j, 4)
    assert bn.BnOperator.from_jsonable(op.to_jsonable()) == op
    params = bn.PhiParams(2.5, 1.25, 0.3 - 0.1j, -0.2j)
    assert bn.PhiParams.from_jsonable(params.to_jsonable()) == params


def test_lemma2_zero_preservation_spot_check():
    # operator images of disk-zero polynomials keep their zeros in the disk
    from bnineq.poly import roots as proots
    rng = np.random.default_rng(41)
    for seed in range(15):
        n = int(rng.integers(2, 9))
        zs = np.sqrt(rng.uniform(0, 1, n)) * np.exp(1j * rng.uniform(0, 2 * math.pi, n))
        P = from_roots(zs, 1.0, n)
        op = sample_admissible_operator(n, seed + 100)
        BP = bn.apply(op, P)
        if BP.actual_degree() >= 1:
            assert float(np.max(np.abs(proots(BP)))) <= 1.0 + 1e-8
