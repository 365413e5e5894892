"""The six relation predicates, their witnesses, and implication chains."""

import numpy as np
import pytest

from rhoperp import (PreconditionFailed, bhatia_semrl_witness, inner_product,
                     is_bj, is_bj_real, is_bj_strong, is_ip_orthogonal,
                     is_norm_parallel, is_rho_orthogonal, m_lower_bound,
                     module_action, module_norm, state_value)
from rhoperp.verify import (bj_orthogonal_pair, incomparability_triple,
                            inner_orthogonal_pair, random_element)

T, S, R = incomparability_triple()


def test_ip_reference_cases():
    assert not is_ip_orthogonal(T, S).holds
    assert is_ip_orthogonal(random_element(np.random.default_rng(0), 2, 2), np.zeros((2, 2))).holds
    x = np.array([[1.0], [0.0]])
    y = np.array([[0.0], [1.0]])
    assert is_ip_orthogonal(x, y).holds


def test_bj_reference_cases():
    assert is_bj(T, R).holds  # W(R) = [-1, 0] contains 0
    x, y = inner_orthogonal_pair(np.random.default_rng(1), 4, 2)
    assert is_bj(x, y).holds
    # complex scalars kill x at lambda = i, so complex-BJ fails
    x2 = np.array([[1.0], [0.0]])
    y2 = np.array([[1.0j], [0.0]])
    assert not is_bj(x2, y2).holds


def test_bj_real_reference_cases():
    assert is_bj_real(T, R).holds
    x2 = np.array([[1.0], [0.0]])
    y2 = np.array([[1.0j], [0.0]])
    assert is_bj_real(x2, y2).holds
    x = random_element(np.random.default_rng(2), 3, 3)
    assert not is_bj_real(x, x).holds


def test_bj_strong_reference_cases():
    assert is_bj_strong(T, R).holds
    assert not is_bj_strong(T, S).holds
    x, y = inner_orthogonal_pair(np.random.default_rng(3), 4, 2)
    assert is_bj_strong(x, y).holds


def test_rho_reference_cases():
    assert is_rho_orthogonal(T, S).holds
    assert not is_rho_orthogonal(T, R).holds
    x, y = inner_orthogonal_pair(np.random.default_rng(4), 4, 2)
    assert is_rho_orthogonal(x, y).holds


def test_parallel_reference_cases():
    x = random_element(np.random.default_rng(5), 3, 3)
    rep = is_norm_parallel(x, x)
    assert rep.holds and abs(rep.witness - 1.0) <= 1e-6
    cube = module_action(x, inner_product(x, x))
    rep2 = is_norm_parallel(x, cube)
    assert rep2.holds and abs(rep2.witness - 1.0) <= 1e-6
    assert not is_norm_parallel(np.diag([1.0, 0.0]), np.diag([0.0, 1.0])).holds


def test_parallel_with_phase():
    x = random_element(np.random.default_rng(6), 2, 3)
    rep = is_norm_parallel(x, -1j * x)
    assert rep.holds
    assert abs(rep.witness - 1j) <= 1e-6


def test_zero_element_is_orthogonal_to_everything():
    z = np.zeros((2, 2))
    y = random_element(np.random.default_rng(7), 2, 2)
    for pred in (is_ip_orthogonal, is_bj, is_bj_real, is_bj_strong,
                 is_rho_orthogonal, is_norm_parallel):
        assert pred(z, y).holds
    # witnesses are genuine states that annihilate everything in sight
    for pred in (is_bj, is_bj_real, is_bj_strong):
        w = pred(z, y).witness
        assert abs(state_value(w, inner_product(z, y))) <= 1e-12


def test_reports_expose_consistent_margins():
    rng = np.random.default_rng(8)
    for i in range(60):
        m, n = rng.integers(2, 7, size=2)
        if i % 3 == 0:
            x, y = bj_orthogonal_pair(rng, m, n)
        else:
            x, y = random_element(rng, m, n), random_element(rng, m, n)
        for pred in (is_ip_orthogonal, is_bj, is_bj_real, is_bj_strong,
                     is_rho_orthogonal, is_norm_parallel):
            rep = pred(x, y)
            assert rep.holds == (rep.margin >= -rep.tol)
            if rep.relation.value in ("bj", "bj-real", "bj-strong", "parallel") and rep.holds:
                assert rep.witness is not None


def test_bj_witness_annihilates_inner_product():
    rng = np.random.default_rng(9)
    for _ in range(40):
        x, y = bj_orthogonal_pair(rng, 4, 3)
        rep = is_bj(x, y)
        assert rep.holds
        scale = 1.0 + module_norm(x) * module_norm(y)
        assert abs(state_value(rep.witness, inner_product(x, y))) <= 1e-8 * scale
        gram = inner_product(x, x)
        n2 = module_norm(x) ** 2
        assert abs(state_value(rep.witness, gram).real - n2) <= 1e-8 * (1.0 + n2)


def test_bj_real_witness_mixes_to_zero_real_part():
    rep = is_bj_real(T, R)
    assert rep.holds
    assert abs(state_value(rep.witness, inner_product(T, R)).real) <= 1e-9


def test_bj_strong_witness_annihilates_positive_element():
    rep = is_bj_strong(T, R)
    assert rep.holds
    pos = inner_product(T, R) @ inner_product(R, T)
    assert abs(state_value(rep.witness, pos).real) <= 1e-9


def test_m_lower_bound_values():
    assert m_lower_bound(S) == pytest.approx(1.0)
    assert m_lower_bound(R) == pytest.approx(0.0, abs=1e-12)
    assert m_lower_bound(np.zeros((2, 2))) == pytest.approx(0.0, abs=1e-15)


def test_m_lower_bound_inequality_under_bj():
    rng = np.random.default_rng(10)
    for _ in range(30):
        x, y = bj_orthogonal_pair(rng, 4, 3)
        assert is_bj(x, y).holds
        my = m_lower_bound(y)
        nx2 = module_norm(x) ** 2
        for _ in range(100):
            lam = 2.0 * np.sqrt(rng.uniform()) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            assert module_norm(x + lam * y) ** 2 >= nx2 + abs(lam) ** 2 * my - 1e-8


def test_bhatia_semrl_witness_rank_one_direction():
    v = bhatia_semrl_witness(T, R)
    assert np.linalg.norm(T @ v) == pytest.approx(1.0)
    assert abs((T @ v).conj() @ (R @ v)) <= 1e-9


def test_bhatia_semrl_witness_balanced_direction_real():
    v = bhatia_semrl_witness(T, S, real=True)
    assert np.linalg.norm(T @ v) == pytest.approx(1.0)
    assert abs(((T @ v).conj() @ (S @ v)).real) <= 1e-9


def test_bhatia_semrl_witness_zero_direction():
    x = random_element(np.random.default_rng(11), 3, 3)
    v = bhatia_semrl_witness(x, np.zeros((3, 3)))
    assert np.linalg.norm(x @ v) == pytest.approx(module_norm(x))


def test_bhatia_semrl_witness_requires_relation():
    x = random_element(np.random.default_rng(12), 3, 3)
    with pytest.raises(PreconditionFailed):
        bhatia_semrl_witness(x, x)
    with pytest.raises(PreconditionFailed):
        bhatia_semrl_witness(x, x, real=True)


def test_implication_chains():
    rng = np.random.default_rng(13)
    t = 1e-9
    pairs = [(T, S), (T, R)]
    for i in range(150):
        m, n = rng.integers(2, 7, size=2)
        if i % 4 == 2:
            pairs.append(inner_orthogonal_pair(rng, m, n))
        elif i % 4 == 3:
            pairs.append(bj_orthogonal_pair(rng, m, n))
        else:
            pairs.append((random_element(rng, m, n), random_element(rng, m, n)))
    for x, y in pairs:
        if is_ip_orthogonal(x, y, t).holds:
            assert is_bj_strong(x, y, 10 * t).holds
            assert is_rho_orthogonal(x, y, 10 * t).holds
        if is_bj_strong(x, y, t).holds:
            assert is_bj_real(x, y, 10 * t).holds
        if is_rho_orthogonal(x, y, t).holds:
            assert is_bj_real(x, y, 10 * t).holds


def test_incomparability_of_rho_and_strong():
    assert is_rho_orthogonal(T, S).holds and not is_bj_strong(T, S).holds
    assert is_bj_strong(T, R).holds and not is_rho_orthogonal(T, R).holds


def test_relations_invariant_under_scaling():
    rng = np.random.default_rng(14)
    for i in range(40):
        m, n = rng.integers(2, 7, size=2)
        if i % 2:
            x, y = bj_orthogonal_pair(rng, m, n)
        else:
            x, y = random_element(rng, m, n), random_element(rng, m, n)
        c = (0.3 + rng.uniform(0, 2.7)) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        d = (0.3 + rng.uniform(0, 2.7)) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        for pred in (is_ip_orthogonal, is_bj, is_bj_real, is_bj_strong, is_rho_orthogonal):
            assert pred(x, y).holds == pred(c * x, d * y).holds
