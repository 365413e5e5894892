"""Definition-level oracles and the seeded property suite.

The oracles evaluate the defining inequalities by search instead of the
spectral reductions used elsewhere, so they are an independent ground
truth.  They are one-sided: a FALSE return exhibits a concrete violator
and is exact, a TRUE return is evidence at the search resolution.

``property_suite`` replays every documented invariant on seeded random
instances (dimensions 1..6) and returns a deterministic structured
report: per property, the number of trials, failures, and the worst
margin (slack left before the stated tolerance; negative means a
violation).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize, minimize_scalar

from .daugavet import (module_daugavet_check, operator_daugavet_witness,
                       rho_cube_identity)
from .hmodule import inner_product, module_action, module_norm
from .matcore import adjoint, hermitian_spectrum, operator_norm
from .normderiv import rho_fd, rho_pair
from .ortho import (bhatia_semrl_witness, is_bj, is_bj_real, is_bj_strong,
                    is_ip_orthogonal, is_norm_parallel, is_rho_orthogonal,
                    m_lower_bound)
from .stateface import (StateWitness, cauchy_schwarz_gap, state_value,
                        top_face, zero_in_numrange)

# ---------------------------------------------------------------------------
# Instance generation
# ---------------------------------------------------------------------------


def random_element(rng, m: int, n: int, scale: float = 1.0) -> np.ndarray:
    """m-by-n matrix with i.i.d. standard complex Gaussian entries."""
    z = rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))
    return scale * z / np.sqrt(2.0)


def random_degenerate_element(rng, m: int, n: int, multiplicity: int = 2) -> np.ndarray:
    """Random element whose top singular value has exact multiplicity.

    Stress case for faces of dimension >= 2.  Needs min(m, n) >= 2 for a
    nontrivial multiplicity.
    """
    x = random_element(rng, m, n)
    u, s, vh = np.linalg.svd(x, full_matrices=False)
    mult = min(multiplicity, len(s))
    s[:mult] = s[0]
    return (u * s) @ vh


def random_state(rng, n: int) -> StateWitness:
    """Random full-rank density matrix."""
    g = random_element(rng, n, n)
    d = g @ g.conj().T
    return StateWitness(d / np.trace(d).real)


def inner_orthogonal_pair(rng, m: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Pair with <x, y> = 0: y is projected off the column space of x.

    For m <= n the smallest singular value of x is zeroed first so the
    complement is nontrivial.
    """
    x = random_element(rng, m, n)
    if m <= n:
        u, s, vh = np.linalg.svd(x, full_matrices=False)
        s[-1] = 0.0
        x = (u * s) @ vh
    u, s, _ = np.linalg.svd(x, full_matrices=False)
    rank = int(np.sum(s > 1e-12 * (s[0] + 1.0)))
    basis = u[:, :rank]
    z = random_element(rng, m, n)
    y = z - basis @ (basis.conj().T @ z)
    return x, y


def bj_orthogonal_pair(rng, m: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Pair that is Birkhoff-James orthogonal by construction.

    For a generic x the top face is one-dimensional, spanned by the top
    right-singular vector v; y is adjusted so that (X v)*(Y v) = 0, which
    puts 0 in the (then scalar) compressed numerical range exactly.
    """
    x = random_element(rng, m, n)
    u, _, vh = np.linalg.svd(x, full_matrices=False)
    v1 = vh[0].conj()
    u1 = u[:, 0]
    z = random_element(rng, m, n)
    w = z @ v1
    y = z - np.outer(u1 * (u1.conj() @ w), v1.conj())
    return x, y


def incomparability_triple() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The canonical 2x2 trio (identity and two diagonal sign patterns)
    separating the rho- and strong Birkhoff-James relations."""
    t = np.eye(2, dtype=np.complex128)
    s = np.diag([-1.0 + 0j, 1.0])
    r = np.diag([-1.0 + 0j, 0.0])
    return t, s, r


# ---------------------------------------------------------------------------
# Brute-force oracles
# ---------------------------------------------------------------------------


def _batched_norms(x, lams, y):
    stack = x[None, :, :] + lams[:, None, None] * y[None, :, :]
    return np.linalg.svd(stack, compute_uv=False)[:, 0]


def _bj_grid_min(x, y, radius: float, grid: int) -> float:
    radii = np.logspace(-4, np.log10(radius), grid)
    angles = np.linspace(0.0, 2.0 * np.pi, grid, endpoint=False)
    lams = (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()
    norms = _batched_norms(x, lams, y)
    i = int(np.argmin(norms))
    res = minimize(
        lambda p: operator_norm(x + (p[0] + 1j * p[1]) * y),
        x0=[lams[i].real, lams[i].imag], method="Nelder-Mead",
        options={"xatol": 1e-12, "fatol": 1e-14, "maxiter": 400},
    )
    return min(float(norms[i]), float(res.fun))


def bj_grid_oracle(x, y, radius: float = 4.0, grid: int = 64, tol: float = 1e-6) -> bool:
    """Search min ||x + lam y|| over a polar grid of complex lam with local
    refinement; FALSE certifies non-orthogonality, TRUE is evidence."""
    if grid < 64:
        raise ValueError(f"grid must be at least 64, got {grid}")
    return _bj_grid_min(x, y, radius, grid) >= module_norm(x) - tol


def _bj_real_grid_min(x, y, radius: float, grid: int) -> float:
    mags = np.logspace(-4, np.log10(radius), grid)
    alphas = np.concatenate([-mags[::-1], [0.0], mags])
    norms = _batched_norms(x, alphas.astype(complex), y)
    i = int(np.argmin(norms))
    lo = alphas[max(i - 1, 0)]
    hi = alphas[min(i + 1, len(alphas) - 1)]
    res = minimize_scalar(lambda a: operator_norm(x + a * y), bounds=(lo, hi),
                          method="bounded", options={"xatol": 1e-12})
    return min(float(norms[i]), float(res.fun))


def bj_real_grid_oracle(x, y, radius: float = 4.0, grid: int = 64, tol: float = 1e-6) -> bool:
    """Real-scalar variant of :func:`bj_grid_oracle`."""
    if grid < 64:
        raise ValueError(f"grid must be at least 64, got {grid}")
    return _bj_real_grid_min(x, y, radius, grid) >= module_norm(x) - tol


def strong_bj_sample_oracle(x, y, trials: int = 200, seed: int = 0, tol: float = 1e-6) -> bool:
    """Search min ||x + y a|| over sampled algebra elements.

    Samples Gaussian a at several scales plus the aimed one-parameter
    family a = -c <y, x>, the canonical violator direction.  FALSE
    certifies a violation, TRUE is sampling evidence.
    """
    if trials < 100:
        raise ValueError(f"trials must be at least 100, got {trials}")
    rng = np.random.default_rng(seed)
    n = x.shape[1]
    best = np.inf
    for scale in (1e-2, 1e-1, 1.0, 10.0):
        count = max(trials // 4, 25)
        a = scale * (rng.standard_normal((count, n, n))
                     + 1j * rng.standard_normal((count, n, n))) / np.sqrt(2.0)
        norms = np.linalg.svd(x[None] + np.matmul(y, a), compute_uv=False)[:, 0]
        best = min(best, float(norms.min()))
    aimed = adjoint(y) @ x
    for c in np.logspace(-3.0, 1.0, 49):
        best = min(best, module_norm(x - c * (y @ aimed)))
    return best >= module_norm(x) - tol


# ---------------------------------------------------------------------------
# Property suite
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PropertyResult:
    name: str
    trials: int
    failures: int
    worst_margin: float | None


@dataclass(frozen=True)
class SuiteReport:
    seed: int
    trials: int
    results: tuple[PropertyResult, ...]

    @property
    def all_pass(self) -> bool:
        return all(r.failures == 0 for r in self.results)

    def to_payload(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "all_pass": self.all_pass,
            "properties": [
                {"name": r.name, "trials": r.trials, "failures": r.failures,
                 "worst_margin": r.worst_margin}
                for r in self.results
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_payload(), indent=2, sort_keys=True)


def _dims(rng, lo=1, hi=6):
    return int(rng.integers(lo, hi + 1)), int(rng.integers(lo, hi + 1))


def _margins(name, rng, trials, fn):
    worst = np.inf
    failures = 0
    for _ in range(trials):
        for v in np.atleast_1d(fn(rng)):
            v = float(v)
            worst = min(worst, v)
            failures += v < 0.0
    return PropertyResult(name, trials, int(failures), worst)


def _mixed_pair(rng, i):
    m, n = _dims(rng, 2, 6)
    kind = i % 4
    if kind == 2:
        return inner_orthogonal_pair(rng, m, n)
    if kind == 3:
        return bj_orthogonal_pair(rng, m, n)
    return random_element(rng, m, n), random_element(rng, m, n)


def _check_norm_submultiplicative(rng, trials):
    def one(rng):
        p, q = _dims(rng)
        r = int(rng.integers(1, 7))
        a, b = random_element(rng, p, q), random_element(rng, q, r)
        return operator_norm(a) * operator_norm(b) + 1e-9 - operator_norm(a @ b)
    return _margins("norm-submultiplicative", rng, trials, one)


def _check_cstar_identity(rng, trials):
    def one(rng):
        a = random_element(rng, *_dims(rng))
        na = operator_norm(a)
        return 1e-9 * (1.0 + na ** 2) - abs(operator_norm(adjoint(a) @ a) - na ** 2)
    return _margins("cstar-identity", rng, trials, one)


def _check_spectral_reconstruction(rng, trials):
    def one(rng):
        n = int(rng.integers(1, 7))
        g = random_element(rng, n, n)
        h = (g + g.conj().T) / 2.0
        spec = hermitian_spectrum(h)
        back = (spec.eigenvectors * spec.eigenvalues) @ spec.eigenvectors.conj().T
        return 1e-9 * (1.0 + operator_norm(h)) - operator_norm(back - h)
    return _margins("spectral-reconstruction", rng, trials, one)


def _check_inner_product_axioms(rng, trials):
    def one(rng):
        m, n = _dims(rng)
        x, y = random_element(rng, m, n), random_element(rng, m, n)
        a = random_element(rng, n, n)
        scale = 1.0 + module_norm(x) * module_norm(y)
        sym = operator_norm(adjoint(inner_product(x, y)) - inner_product(y, x))
        psd = float(hermitian_spectrum(inner_product(x, x)).eigenvalues[-1])
        act = operator_norm(inner_product(x, module_action(y, a))
                            - inner_product(x, y) @ a)
        return [1e-12 * scale - sym, psd + 1e-10,
                1e-10 * scale * (1.0 + operator_norm(a)) - act]
    return _margins("inner-product-axioms", rng, trials, one)


def _check_module_norm_consistency(rng, trials):
    def one(rng):
        x = random_element(rng, *_dims(rng))
        via_gram = np.sqrt(operator_norm(inner_product(x, x)))
        return 1e-10 * (1.0 + module_norm(x)) - abs(module_norm(x) - via_gram)
    return _margins("module-norm-consistency", rng, trials, one)


def _check_cauchy_schwarz_norm(rng, trials):
    def one(rng):
        m, n = _dims(rng)
        x, y = random_element(rng, m, n), random_element(rng, m, n)
        return module_norm(x) * module_norm(y) + 1e-9 - operator_norm(inner_product(x, y))
    return _margins("cauchy-schwarz-norm", rng, trials, one)


def _check_cauchy_schwarz_state_gap(rng, trials):
    def one(rng):
        m, n = _dims(rng)
        x, y = random_element(rng, m, n), random_element(rng, m, n)
        p = random_state(rng, n)
        scale = 1.0 + (module_norm(x) * module_norm(y)) ** 2
        return cauchy_schwarz_gap(p, x, y) + 1e-9 * scale
    return _margins("cauchy-schwarz-state-gap", rng, trials, one)


def _check_face_attains_norm(rng, trials):
    def one(rng):
        m, n = _dims(rng, 2, 6)
        x = random_element(rng, m, n) if rng.integers(2) else random_degenerate_element(rng, m, n)
        face = top_face(x)
        q = random_state(rng, face.dim)
        p = StateWitness(face.isometry @ q.density @ face.isometry.conj().T)
        val = state_value(p, inner_product(x, x)).real
        n2 = module_norm(x) ** 2
        return 1e-8 * (1.0 + n2) - abs(val - n2)
    return _margins("face-attains-norm", rng, trials, one)


def _check_off_face_deficit(rng, trials):
    def one(rng):
        m, n = _dims(rng, 2, 6)
        x = random_element(rng, m, n)
        face = top_face(x)
        if face.dim >= n:
            return 1.0
        spec = hermitian_spectrum(inner_product(x, x))
        off = spec.eigenvectors[:, face.dim]
        mass = rng.uniform(0.1, 0.9)
        q = random_state(rng, face.dim)
        on_face = face.isometry @ q.density @ face.isometry.conj().T
        p = StateWitness((1.0 - mass) * on_face + mass * np.outer(off, off.conj()))
        val = state_value(p, inner_product(x, x)).real
        return (module_norm(x) ** 2 - face.gap * mass / 2.0) - val
    return _margins("off-face-deficit", rng, trials, one)


def _check_rho_p1(rng, trials):
    def one(rng):
        m, n = _dims(rng)
        x, y = random_element(rng, m, n), random_element(rng, m, n)
        nx, ny = module_norm(x), module_norm(y)
        pair = rho_pair(x, y)
        self_pair = rho_pair(x, x)
        scale = 1.0 + nx * ny
        return [pair.rho_plus - pair.rho_minus + 1e-10,
                nx * ny + 1e-8 * scale - abs(pair.rho_plus),
                nx * ny + 1e-8 * scale - abs(pair.rho_minus),
                1e-8 * (1.0 + nx ** 2) - abs(self_pair.rho_plus - nx ** 2),
                1e-8 * (1.0 + nx ** 2) - abs(self_pair.rho_minus - nx ** 2)]
    return _margins("rho-p1", rng, trials, one)


def _check_rho_p2(rng, trials):
    def one(rng):
        m, n = _dims(rng)
        x, y = random_element(rng, m, n), random_element(rng, m, n)
        tol = 1e-8 * (1.0 + module_norm(x) * module_norm(y))
        p = rho_pair(x, y)
        p_negx = rho_pair(-x, y)
        p_negy = rho_pair(x, -y)
        return [tol - abs(p_negx.rho_plus + p.rho_minus),
                tol - abs(p_negy.rho_plus + p.rho_minus),
                tol - abs(p_negx.rho_minus + p.rho_plus),
                tol - abs(p_negy.rho_minus + p.rho_plus)]
    return _margins("rho-p2", rng, trials, one)


def _check_rho_p3(rng, trials):
    def one(rng):
        m, n = _dims(rng)
        x, y = random_element(rng, m, n), random_element(rng, m, n)
        alpha = complex(rng.standard_normal(), rng.standard_normal())
        nx = module_norm(x)
        base = rho_pair(x, y)
        shifted = rho_pair(x, alpha * x + y)
        tol = 1e-8 * (1.0 + nx * module_norm(y) + abs(alpha) * nx ** 2)
        return [tol - abs(shifted.rho_plus - (alpha.real * nx ** 2 + base.rho_plus)),
                tol - abs(shifted.rho_minus - (alpha.real * nx ** 2 + base.rho_minus))]
    return _margins("rho-p3", rng, trials, one)


def _check_rho_p4(rng, trials):
    def one(rng):
        m, n = _dims(rng)
        x, y = random_element(rng, m, n), random_element(rng, m, n)
        alpha = complex(rng.standard_normal(), rng.standard_normal()) + 0.2
        beta = complex(rng.standard_normal(), rng.standard_normal()) + 0.2
        phase = np.exp(1j * (np.angle(beta) - np.angle(alpha)))
        lhs = rho_pair(alpha * x, beta * y)
        rhs = rho_pair(x, phase * y)
        mod = abs(alpha * beta)
        tol = 1e-8 * (1.0 + mod * (1.0 + module_norm(x) * module_norm(y)))
        return [tol - abs(lhs.rho_plus - mod * rhs.rho_plus),
                tol - abs(lhs.rho_minus - mod * rhs.rho_minus)]
    return _margins("rho-p4", rng, trials, one)


def _check_rho_p5(rng, trials):
    def one(rng):
        m, n = _dims(rng)
        x, y = random_element(rng, m, n), random_element(rng, m, n)
        base = rho_pair(x, y).rho_plus
        d = [rho_pair(x + t * y, y).rho_plus - base for t in (1e-2, 1e-4, 1e-6)]
        fuzz = 1e-9 * (1.0 + module_norm(x) * module_norm(y))
        return [d[0] - d[1] + fuzz, d[1] - d[2] + fuzz, d[2] + fuzz,
                1e-4 * (1.0 + module_norm(y) ** 2) - abs(d[2])]
    return _margins("rho-p5", rng, trials, one)


def _check_rho_closed_vs_fd(rng, trials):
    def one(rng):
        m, n = _dims(rng)
        x, y = random_element(rng, m, n), random_element(rng, m, n)
        pair = rho_pair(x, y)
        tol = 1e-5 * (1.0 + module_norm(x) * module_norm(y))
        return [tol - abs(rho_fd(x, y, "+") - pair.rho_plus),
                tol - abs(rho_fd(x, y, "-") - pair.rho_minus)]
    return _margins("rho-closed-vs-fd", rng, trials, one)


def _check_rho_witness_attainment(rng, trials):
    def one(rng):
        m, n = _dims(rng, 2, 6)
        x = random_element(rng, m, n) if rng.integers(2) else random_degenerate_element(rng, m, n)
        y = random_element(rng, m, n)
        pair = rho_pair(x, y)
        ip = inner_product(x, y)
        gram = inner_product(x, x)
        n2 = module_norm(x) ** 2
        tol = 1e-9 * (1.0 + module_norm(x) * module_norm(y))
        out = []
        for w, target in ((pair.max_witness, pair.rho_plus), (pair.min_witness, pair.rho_minus)):
            out.append(tol - abs(state_value(w, ip).real - target))
            out.append(1e-8 * (1.0 + n2) - abs(state_value(w, gram).real - n2))
        return out
    return _margins("rho-witness-attainment", rng, trials, one)


def _check_cube_identity(rng, trials):
    def one(rng):
        m, n = _dims(rng, 2, 6)
        x = random_element(rng, m, n) if rng.integers(2) else random_degenerate_element(rng, m, n)
        rep = rho_cube_identity(x)
        n4 = rep.norm_fourth
        return [1e-8 * (1.0 + n4) - rep.max_deviation,
                1e-8 * (1.0 + n4) - rep.witness_square_residual]
    return _margins("cube-identity", rng, trials, one)


def _check_daugavet_equation(rng, trials):
    def one(rng):
        x = random_element(rng, *_dims(rng))
        out = []
        for alpha, beta in ((1.0, 1.0), (0.5, 2.0), (3.0, 0.1)):
            rep = module_daugavet_check(x, alpha, beta)
            out.append(1e-9 * (1.0 + rep.rhs) - rep.residual)
            out.append(1e-9 * (1.0 + module_norm(x) ** 3) - rep.cube_norm_residual)
        return out
    return _margins("daugavet-equation", rng, trials, one)


def _check_daugavet_scaling(rng, trials):
    def one(rng):
        x = random_element(rng, *_dims(rng))
        c = complex(rng.standard_normal(), rng.standard_normal()) + 0.3
        alpha, beta = 1.0, 0.7
        base = module_daugavet_check(x, alpha, beta)
        scaled = module_daugavet_check(c * x, alpha, beta / abs(c) ** 2)
        return 1e-9 * (1.0 + scaled.rhs) - abs(scaled.residual - abs(c) * base.residual)
    return _margins("daugavet-scaling", rng, trials, one)


def _check_daugavet_parallel(rng, trials):
    trials = min(trials, 120)

    def one(rng):
        x = random_element(rng, *_dims(rng))
        rep = is_norm_parallel(x, module_action(x, inner_product(x, x)))
        if not rep.holds:
            return -1.0
        return 1e-6 - abs(rep.witness - 1.0)
    return _margins("daugavet-parallel", rng, trials, one)


def _check_operator_witness(rng, trials):
    def one(rng):
        t = random_element(rng, *_dims(rng))
        rep = operator_daugavet_witness(t)
        worst = max(rep.attainment_residual, rep.cube_attainment_residual,
                    rep.alignment_residual, rep.equation_residual)
        return 1e-8 * (1.0 + rep.norm_t ** 3) - worst
    return _margins("operator-witness", rng, trials, one)


def _check_bj_vs_grid_oracle(rng, trials):
    trials = min(trials, 100)
    failures = 0
    count = 0
    for i in range(trials):
        x, y = _mixed_pair(rng, i)
        ours = is_bj(x, y, tol=1e-9)
        oracle = bj_grid_oracle(x, y)
        if ours.holds and not oracle:
            failures += 1
        count += 1
    return PropertyResult("bj-vs-grid-oracle", count, failures, None)


def _check_bj_real_vs_grid_oracle(rng, trials):
    trials = min(trials, 100)
    failures = 0
    for i in range(trials):
        x, y = _mixed_pair(rng, i)
        ours = is_bj_real(x, y, tol=1e-9)
        oracle = bj_real_grid_oracle(x, y)
        if ours.holds and not oracle:
            failures += 1
    return PropertyResult("bj-real-vs-grid-oracle", trials, failures, None)


def _check_strong_vs_sampling_oracle(rng, trials):
    trials = min(trials, 100)
    failures = 0
    t, s, r = incomparability_triple()
    cases = [(t, s, False), (t, r, True)]
    for i in range(trials):
        x, y = _mixed_pair(rng, i)
        cases.append((x, y, None))
    for x, y, expected in cases:
        ours = is_bj_strong(x, y, tol=1e-9)
        oracle = strong_bj_sample_oracle(x, y, trials=200, seed=7)
        if ours.holds and not oracle:
            failures += 1
        if expected is not None and ours.holds != expected:
            failures += 1
    return PropertyResult("strong-vs-sampling-oracle", len(cases), failures, None)


def _check_implication_chains(rng, trials):
    t = 1e-9
    worst = np.inf
    failures = 0
    triple = incomparability_triple()
    pairs = [(triple[0], triple[1]), (triple[0], triple[2])]
    pairs += [_mixed_pair(rng, i) for i in range(trials)]
    for x, y in pairs:
        steps = [
            (is_ip_orthogonal(x, y, t), is_bj_strong(x, y, 10 * t)),
            (is_bj_strong(x, y, t), is_bj_real(x, y, 10 * t)),
            (is_ip_orthogonal(x, y, t), is_rho_orthogonal(x, y, 10 * t)),
            (is_rho_orthogonal(x, y, t), is_bj_real(x, y, 10 * t)),
        ]
        for strong, weak in steps:
            if not strong.holds:
                continue
            worst = min(worst, weak.margin + 10 * t)
            failures += not weak.holds
    margin = None if worst is np.inf else float(worst)
    return PropertyResult("implication-chains", len(pairs), failures, margin)


def _check_bj_norm_lower_bound(rng, trials):
    trials = min(trials, 120)

    def one(rng):
        m, n = _dims(rng, 2, 6)
        x, y = bj_orthogonal_pair(rng, m, n)
        if not is_bj(x, y).holds:
            return -1.0
        my = m_lower_bound(y)
        r = 2.0 * np.sqrt(rng.uniform(0.0, 1.0, size=100))
        lams = r * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, size=100))
        norms = _batched_norms(x, lams, y)
        slack = norms ** 2 - module_norm(x) ** 2 - np.abs(lams) ** 2 * my
        return float(slack.min()) + 1e-8
    return _margins("bj-norm-lower-bound", rng, trials, one)


def _check_relation_homogeneity(rng, trials):
    trials = min(trials, 100)
    failures = 0
    predicates = (is_ip_orthogonal, is_bj, is_bj_real, is_bj_strong, is_rho_orthogonal)
    for i in range(trials):
        x, y = _mixed_pair(rng, i)
        c = (0.3 + rng.uniform(0.0, 2.7)) * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
        d = (0.3 + rng.uniform(0.0, 2.7)) * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
        for pred in predicates:
            if pred(x, y).holds != pred(c * x, d * y).holds:
                failures += 1
    return PropertyResult("relation-homogeneity", trials, failures, None)


def _check_numrange_grid_agreement(rng, trials):
    trials = min(trials, 200)
    thetas = np.linspace(0.0, 2.0 * np.pi, 4096, endpoint=False)

    def one(rng):
        k = int(rng.choice([2, 3, 5]))
        m = random_element(rng, k, k)
        res = zero_in_numrange(m)
        ph = np.exp(1j * thetas).reshape(-1, 1, 1)
        g_scan = float(np.linalg.eigvalsh((ph * m + ph.conj() * m.conj().T) / 2.0)[:, -1].min())
        nrm = operator_norm(m)
        # Both minima sit within the coarse grid's Lipschitz error of the
        # true minimum, so they agree up to ||M|| pi / 720 plus slack.
        band = nrm * np.pi / 720 + 1e-9 * (1.0 + nrm)
        margin = band - abs(res.margin - g_scan)
        if g_scan > band and not res.contains_zero:
            return -1.0
        if g_scan < -band and res.contains_zero:
            return -1.0
        return margin
    return _margins("numrange-grid-agreement", rng, trials, one)


def _check_numrange_rotation_consistency(rng, trials):
    trials = min(trials, 100)

    def one(rng):
        k = int(rng.choice([2, 3, 4]))
        m = random_element(rng, k, k)
        res1 = zero_in_numrange(m)
        if not res1.contains_zero:
            return 1.0
        res2 = zero_in_numrange(np.exp(1j * rng.uniform(0.0, 2.0 * np.pi)) * m)
        if not res2.contains_zero:
            return -1.0
        tol_abs = 1e-9 * (1.0 + operator_norm(m))
        return min(tol_abs - res1.residual, tol_abs - res2.residual)
    return _margins("numrange-rotation-consistency", rng, trials, one)


def _witness_margins(x, y):
    """Slacks of every TRUE report's defining equations at 1e-8."""
    out = []
    nx, ny = module_norm(x), module_norm(y)
    n2 = nx ** 2
    ip = inner_product(x, y)
    gram = inner_product(x, x)
    checks = (
        (is_bj(x, y), lambda w: abs(state_value(w, ip))),
        (is_bj_real(x, y), lambda w: abs(state_value(w, ip).real)),
        (is_bj_strong(x, y), lambda w: abs(state_value(w, ip @ adjoint(ip)).real)),
    )
    for rep, annihilation in checks:
        if not rep.holds or rep.witness is None:
            continue
        out.append(1e-8 * (1.0 + n2) - abs(state_value(rep.witness, gram).real - n2))
        out.append(1e-8 * (1.0 + nx * ny + (nx * ny) ** 2) - annihilation(rep.witness))
    if is_bj(x, y).holds:
        v = bhatia_semrl_witness(x, y)
        out.append(1e-8 * (1.0 + nx) - abs(float(np.linalg.norm(x @ v)) - nx))
        out.append(1e-8 * (1.0 + nx * ny) - abs((x @ v).conj() @ (y @ v)))
    if is_bj_real(x, y).holds:
        v = bhatia_semrl_witness(x, y, real=True)
        out.append(1e-8 * (1.0 + nx) - abs(float(np.linalg.norm(x @ v)) - nx))
        out.append(1e-8 * (1.0 + nx * ny) - abs(((x @ v).conj() @ (y @ v)).real))
    return out


def _check_witness_validity(rng, trials):
    trials = min(trials, 120)

    def one(rng):
        x, y = _mixed_pair(rng, int(rng.integers(0, 4)))
        out = _witness_margins(x, y)
        return out if out else [1.0]
    return _margins("witness-validity", rng, trials, one)


def _check_two_by_two_reference(rng, trials):
    t, s, r = incomparability_triple()
    pair_s = rho_pair(t, s)
    pair_r = rho_pair(t, r)
    margins = [1e-9 - abs(pair_s.rho_plus - 1.0),
               1e-9 - abs(pair_s.rho_minus + 1.0),
               1e-9 - abs(pair_r.rho_plus - 0.0),
               1e-9 - abs(pair_r.rho_minus + 1.0)]
    table = [
        (is_rho_orthogonal(t, s).holds, True),
        (is_ip_orthogonal(t, s).holds, False),
        (is_rho_orthogonal(t, r).holds, False),
        (is_bj_real(t, r).holds, True),
        (is_bj_strong(t, s).holds, False),
        (is_bj_strong(t, r).holds, True),
        (is_bj(t, r).holds, True),
        (is_bj(t, s).holds, True),
    ]
    failures = sum(got != want for got, want in table) + sum(m < 0 for m in margins)
    return PropertyResult("two-by-two-reference", 1, int(failures), float(min(margins)))


def _check_incomparability(rng, trials):
    t, s, r = incomparability_triple()
    rho_not_strong = is_rho_orthogonal(t, s).holds and not is_bj_strong(t, s).holds
    strong_not_rho = is_bj_strong(t, r).holds and not is_rho_orthogonal(t, r).holds
    failures = (not rho_not_strong) + (not strong_not_rho)
    return PropertyResult("incomparability", 1, int(failures), None)


_REGISTRY = (
    _check_norm_submultiplicative,
    _check_cstar_identity,
    _check_spectral_reconstruction,
    _check_inner_product_axioms,
    _check_module_norm_consistency,
    _check_cauchy_schwarz_norm,
    _check_cauchy_schwarz_state_gap,
    _check_face_attains_norm,
    _check_off_face_deficit,
    _check_rho_p1,
    _check_rho_p2,
    _check_rho_p3,
    _check_rho_p4,
    _check_rho_p5,
    _check_rho_closed_vs_fd,
    _check_rho_witness_attainment,
    _check_cube_identity,
    _check_daugavet_equation,
    _check_daugavet_scaling,
    _check_daugavet_parallel,
    _check_operator_witness,
    _check_bj_vs_grid_oracle,
    _check_bj_real_vs_grid_oracle,
    _check_strong_vs_sampling_oracle,
    _check_implication_chains,
    _check_bj_norm_lower_bound,
    _check_relation_homogeneity,
    _check_numrange_grid_agreement,
    _check_numrange_rotation_consistency,
    _check_witness_validity,
    _check_two_by_two_reference,
    _check_incomparability,
)


def property_names() -> tuple[str, ...]:
    """Names of all suite properties, in registry order."""
    return tuple(fn.__name__.removeprefix("_check_").replace("_", "-") for fn in _REGISTRY)


def property_suite(seed: int = 0, trials: int = 200, names=None) -> SuiteReport:
    """Run the invariant suite on seeded random instances.

    Deterministic for a fixed seed: every property draws from its own
    child stream of the master seed, so running a subset (``names``)
    reproduces the same numbers as the full run.  Expensive searches cap
    their own trial counts; the cheap algebraic sweeps use ``trials``.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    children = np.random.SeedSequence(seed).spawn(len(_REGISTRY))
    wanted = None if names is None else set(names)
    results = []
    for fn, child in zip(_REGISTRY, children):
        name = fn.__name__.removeprefix("_check_").replace("_", "-")
        if wanted is not None and name not in wanted:
            continue
        results.append(fn(np.random.default_rng(child), trials))
    if wanted is not None:
        missing = wanted - {r.name for r in results}
        if missing:
            raise ValueError(f"unknown properties: {sorted(missing)}")
    return SuiteReport(seed=seed, trials=trials, results=tuple(results))
