"""Norm identities for x <x, x> and the operator Daugavet-type equation.

For every module element, rho_plus(x, x<x,x>) = ||x||^4 = rho_minus, the
combination alpha x + beta x<x,x> attains the full triangle bound
alpha ||x|| + beta ||x||^3 for positive coefficients, and for a matrix T
the equation ||T + T T* T|| = ||T|| + ||T||^3 comes with an aligned unit
vector (a top right-singular vector).  In finite dimension the distance
hypothesis of the operator statement (distance to the compacts below the
norm) is automatic, so the witness always exists.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidScalars, ZeroOperator
from .hmodule import inner_product, module_action, module_norm
from .matcore import as_complex_matrix, operator_norm
from .normderiv import rho_pair
from .stateface import StateWitness, state_value


@dataclass(frozen=True)
class CubeIdentityReport:
    """Both derivatives of (x, x<x,x>) against ||x||^4."""

    rho_plus: float
    rho_minus: float
    norm_fourth: float
    max_deviation: float
    witness_square_residual: float
    max_witness: StateWitness | None
    min_witness: StateWitness | None
    within_tol: bool
    tol: float


def rho_cube_identity(x, tol: float = 1e-8) -> CubeIdentityReport:
    """Check rho_plus(x, x<x,x>) = ||x||^4 = rho_minus(x, x<x,x>).

    Also evaluates phi(<x,x>^2) = ||x||^4 for the returned witnesses,
    the intermediate equality that forces the identity.
    """
    x = as_complex_matrix(x)
    gram = inner_product(x, x)
    pair = rho_pair(x, module_action(x, gram))
    n4 = module_norm(x) ** 4
    dev = max(abs(pair.rho_plus - n4), abs(pair.rho_minus - n4))
    square = gram @ gram
    wsr = 0.0
    for w in (pair.max_witness, pair.min_witness):
        if w is not None:
            wsr = max(wsr, abs(state_value(w, square).real - n4))
    return CubeIdentityReport(
        rho_plus=pair.rho_plus, rho_minus=pair.rho_minus, norm_fourth=n4,
        max_deviation=dev, witness_square_residual=wsr,
        max_witness=pair.max_witness, min_witness=pair.min_witness,
        within_tol=bool(dev <= tol * (1.0 + n4) and wsr <= tol * (1.0 + n4)),
        tol=tol,
    )


@dataclass(frozen=True)
class DaugavetReport:
    """||alpha x + beta x<x,x>|| against alpha ||x|| + beta ||x||^3."""

    alpha: float
    beta: float
    lhs: float
    rhs: float
    residual: float
    cube_norm_residual: float
    within_tol: bool
    tol: float


def module_daugavet_check(x, alpha: float, beta: float, tol: float = 1e-9) -> DaugavetReport:
    """Check ||alpha x + beta x<x,x>|| = alpha ||x|| + beta ||x||^3.

    Requires alpha, beta > 0; also verifies ||x<x,x>|| = ||x||^3.
    """
    if not (alpha > 0.0 and beta > 0.0):
        raise InvalidScalars(f"coefficients must be positive, got ({alpha!r}, {beta!r})")
    x = as_complex_matrix(x)
    cube = module_action(x, inner_product(x, x))
    nx = module_norm(x)
    lhs = module_norm(alpha * x + beta * cube)
    rhs = alpha * nx + beta * nx ** 3
    residual = abs(lhs - rhs)
    cube_res = abs(module_norm(cube) - nx ** 3)
    within = residual <= tol * (1.0 + rhs) and cube_res <= tol * (1.0 + nx ** 3)
    return DaugavetReport(alpha=alpha, beta=beta, lhs=lhs, rhs=rhs,
                          residual=residual, cube_norm_residual=cube_res,
                          within_tol=bool(within), tol=tol)


@dataclass(frozen=True)
class OperatorWitnessReport:
    """Unit vector aligning T and T T* T, with the three attainment checks.

    ``finite_dimension_note`` records why the witness always exists here:
    every matrix is compact, so the distance hypothesis of the general
    operator statement holds automatically.
    """

    vector: np.ndarray
    norm_t: float
    norm_cube: float
    sum_norm: float
    attainment_residual: float
    cube_attainment_residual: float
    alignment_residual: float
    equation_residual: float
    within_tol: bool
    tol: float
    finite_dimension_note: str = (
        "finite-dimensional operators are compact, so the distance condition "
        "dist(T, compacts) < ||T|| is automatic and a witness always exists"
    )


def operator_daugavet_witness(t, tol: float = 1e-8) -> OperatorWitnessReport:
    """Witness vector for ||T + T T* T|| = ||T|| + ||T||^3, T nonzero.

    Returns a top right-singular vector x_o and checks ||T x_o|| = ||T||,
    ||T T* T x_o|| = ||T T* T|| = ||T||^3, and that T/||T|| and
    TT*T/||TT*T|| agree on x_o.
    """
    t = as_complex_matrix(t)
    nt = operator_norm(t)
    if nt <= 1e-12:
        raise ZeroOperator("witness undefined for the zero operator")
    _, svals, vh = np.linalg.svd(t)
    x_o = vh[0].conj()
    cube = t @ t.conj().T @ t
    n_cube = operator_norm(cube)
    t_att = abs(float(np.linalg.norm(t @ x_o)) - nt)
    c_att = abs(float(np.linalg.norm(cube @ x_o)) - n_cube)
    align = float(np.linalg.norm(t @ x_o / nt - cube @ x_o / n_cube))
    eq_res = abs(operator_norm(t + cube) - (nt + nt ** 3))
    checks = max(t_att, c_att, align, eq_res, abs(n_cube - nt ** 3))
    return OperatorWitnessReport(
        vector=x_o, norm_t=nt, norm_cube=n_cube,
        sum_norm=operator_norm(t + cube),
        attainment_residual=t_att, cube_attainment_residual=c_att,
        alignment_residual=align, equation_residual=eq_res,
        within_tol=bool(checks <= tol * (1.0 + nt ** 3)), tol=tol,
    )
