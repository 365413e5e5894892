"""Norm identities around x<x,x> and the operator witness."""

import numpy as np
import pytest

from rhoperp import (InvalidScalars, ZeroOperator, inner_product,
                     is_norm_parallel, module_action, module_daugavet_check,
                     module_norm, operator_daugavet_witness, rho_cube_identity)
from rhoperp.verify import random_degenerate_element, random_element


def test_cube_identity_identity_element():
    rep = rho_cube_identity(np.eye(2))
    assert rep.rho_plus == pytest.approx(1.0)
    assert rep.rho_minus == pytest.approx(1.0)
    assert rep.norm_fourth == pytest.approx(1.0)
    assert rep.within_tol


def test_cube_identity_rank_one():
    # <x,x> = diag(1,0); the face is e1 and the compression of <x, x<x,x>> is 1
    rep = rho_cube_identity(np.diag([-1.0, 0.0]))
    assert rep.rho_plus == pytest.approx(1.0)
    assert rep.rho_minus == pytest.approx(1.0)
    assert rep.within_tol


def test_cube_identity_zero_element():
    rep = rho_cube_identity(np.zeros((2, 2)))
    assert rep.rho_plus == 0.0 and rep.rho_minus == 0.0 and rep.within_tol


def test_cube_identity_sweep():
    rng = np.random.default_rng(40)
    for i in range(100):
        m, n = rng.integers(1, 7, size=2)
        if i % 3 == 0 and min(m, n) >= 2:
            x = random_degenerate_element(rng, m, n)
        else:
            x = random_element(rng, m, n)
        rep = rho_cube_identity(x)
        assert rep.max_deviation <= 1e-8 * (1.0 + rep.norm_fourth)
        assert rep.witness_square_residual <= 1e-8 * (1.0 + rep.norm_fourth)


def test_daugavet_identity_element():
    rep = module_daugavet_check(np.eye(2), 1.0, 1.0)
    assert rep.lhs == pytest.approx(2.0)
    assert rep.rhs == pytest.approx(2.0)
    assert rep.within_tol


def test_daugavet_zero_element():
    rep = module_daugavet_check(np.zeros((3, 2)), 2.0, 0.5)
    assert rep.lhs == 0.0 and rep.rhs == 0.0 and rep.within_tol


def test_daugavet_sweep():
    rng = np.random.default_rng(41)
    for _ in range(100):
        x = random_element(rng, int(rng.integers(1, 7)), int(rng.integers(1, 7)))
        for alpha, beta in ((1.0, 1.0), (0.5, 2.0), (3.0, 0.1)):
            rep = module_daugavet_check(x, alpha, beta)
            assert rep.residual <= 1e-9 * (1.0 + rep.rhs)
            assert rep.cube_norm_residual <= 1e-9 * (1.0 + module_norm(x) ** 3)


def test_daugavet_rejects_nonpositive_scalars():
    with pytest.raises(InvalidScalars):
        module_daugavet_check(np.eye(2), 0.0, 1.0)
    with pytest.raises(InvalidScalars):
        module_daugavet_check(np.eye(2), 1.0, -2.0)


def test_daugavet_implies_norm_parallel():
    rng = np.random.default_rng(42)
    for _ in range(25):
        x = random_element(rng, int(rng.integers(1, 7)), int(rng.integers(1, 7)))
        cube = module_action(x, inner_product(x, x))
        rep = is_norm_parallel(x, cube)
        assert rep.holds
        assert abs(rep.witness - 1.0) <= 1e-6


def test_daugavet_scaling_consistency():
    rng = np.random.default_rng(43)
    for _ in range(50):
        x = random_element(rng, 3, 4)
        c = complex(rng.standard_normal(), rng.standard_normal()) + 0.3
        base = module_daugavet_check(x, 1.0, 0.7)
        scaled = module_daugavet_check(c * x, 1.0, 0.7 / abs(c) ** 2)
        assert abs(scaled.residual - abs(c) * base.residual) <= 1e-9 * (1.0 + scaled.rhs)


def test_operator_witness_identity():
    rep = operator_daugavet_witness(np.eye(2))
    assert rep.sum_norm == pytest.approx(2.0)
    assert rep.within_tol


def test_operator_witness_diagonal():
    rep = operator_daugavet_witness(np.diag([2.0, 1.0]))
    assert abs(abs(rep.vector[0]) - 1.0) <= 1e-12  # top right-singular vector is e1
    assert rep.norm_t == pytest.approx(2.0)
    assert rep.norm_cube == pytest.approx(8.0)
    assert rep.sum_norm == pytest.approx(10.0)
    assert rep.within_tol


def test_operator_witness_sweep():
    rng = np.random.default_rng(44)
    for _ in range(50):
        t = random_element(rng, 4, 4)
        rep = operator_daugavet_witness(t)
        bound = 1e-8 * (1.0 + rep.norm_t ** 3)
        assert rep.attainment_residual <= bound
        assert rep.cube_attainment_residual <= bound
        assert rep.alignment_residual <= bound
        assert rep.equation_residual <= bound


def test_operator_witness_rectangular():
    rep = operator_daugavet_witness(random_element(np.random.default_rng(45), 3, 5))
    assert rep.within_tol


def test_operator_witness_rejects_zero():
    with pytest.raises(ZeroOperator):
        operator_daugavet_witness(np.zeros((2, 2)))
