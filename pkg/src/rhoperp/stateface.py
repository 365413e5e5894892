"""States supported on the top eigenspace of <x, x>.

A state on M_n(C) is ``a -> tr(p a)`` for a density matrix p (positive,
trace one).  The states attaining ``phi(<x, x>) = ||x||^2`` are exactly
those whose density is supported on the top eigenspace of ``<x, x>``;
this module models that eigenspace as an isometry (:class:`TopFace`),
evaluates and builds such states, compresses algebra elements to the
face, and decides whether 0 lies in the numerical range of a compression
with an explicit certificate either way:

* membership: a unit vector ``z`` with ``|z* M z| <= tol (1 + ||M||)``;
* separation: an angle ``t`` with ``lambda_max(Re(e^{it} M)) < -tol (1 + ||M||)/2``.

The decision itself minimizes the support function
``g(t) = lambda_max((e^{it} M + e^{-it} M*)/2)`` over the circle; for a
convex set this minimum is the signed distance from 0 to the boundary of
the range.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize
from scipy.spatial import ConvexHull, QhullError

from .errors import NotUnitVector, ShapeMismatch, ZeroElement
from .hmodule import inner_product, module_norm
from .matcore import as_complex_matrix, hermitian_spectrum, operator_norm

# Module elements below this norm are treated as zero (callers special-case them).
ZERO_NORM_TOL = 1e-12

# Angles in the coarse scan of the support function.
_SUPPORT_GRID = 720

_GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class TopFace:
    """Isometry onto the top eigenspace of <x, x> plus eigenvalue data.

    ``isometry`` is n-by-k with orthonormal columns spanning the
    eigenvectors whose eigenvalue is >= (1 - gap_tol) * lambda_max;
    ``gap`` is the distance from lambda_max to the first eigenvalue below
    the cut (+inf when the face is everything).  ``near_degenerate``
    flags spectra whose gap sits within 10 * gap_tol of the cut, where
    the face dimension is numerically unstable.
    """

    isometry: np.ndarray
    lambda_max: float
    gap: float
    gap_tol: float
    near_degenerate: bool

    @property
    def dim(self) -> int:
        return self.isometry.shape[1]


@dataclass(frozen=True)
class StateWitness:
    """Density matrix p representing the state a -> tr(p a)."""

    density: np.ndarray

    def __post_init__(self):
        d = as_complex_matrix(self.density)
        if d.shape[0] != d.shape[1]:
            raise ShapeMismatch(f"density of shape {d.shape} is not square")
        if operator_norm(d - d.conj().T) > 1e-10 * (1.0 + operator_norm(d)):
            raise ValueError("density must be Hermitian")
        eigs = np.linalg.eigvalsh((d + d.conj().T) / 2.0)
        if eigs[0] < -1e-10:
            raise ValueError(f"density has negative eigenvalue {eigs[0]:.3e}")
        tr = np.trace(d).real
        if abs(tr - 1.0) > 1e-10:
            raise ValueError(f"density trace {tr!r} is not 1")
        object.__setattr__(self, "density", d)


def maximally_mixed(n: int) -> StateWitness:
    """The tracial state I/n."""
    return StateWitness(np.eye(n, dtype=np.complex128) / n)


def top_face(x, gap_tol: float = 1e-10) -> TopFace:
    """Top eigenspace of <x, x> as an isometry, for a nonzero element.

    Eigenvalues within ``gap_tol`` (relative) of the largest join the
    face.  Raises :class:`ZeroElement` when ``||x|| <= 1e-12``.
    """
    x = as_complex_matrix(x)
    if module_norm(x) <= ZERO_NORM_TOL:
        raise ZeroElement("top face undefined for the zero element")
    spec = hermitian_spectrum(inner_product(x, x))
    vals = spec.eigenvalues
    lam_max = float(vals[0])
    cut = (1.0 - gap_tol) * lam_max
    k = int(np.sum(vals >= cut))
    n = vals.shape[0]
    if k < n:
        gap = lam_max - float(vals[k])
        near = bool(vals[k] >= (1.0 - 10.0 * gap_tol) * lam_max)
    else:
        gap = np.inf
        near = False
    return TopFace(
        isometry=spec.eigenvectors[:, :k].copy(),
        lambda_max=lam_max,
        gap=gap,
        gap_tol=gap_tol,
        near_degenerate=near,
    )


def state_value(p: StateWitness, a) -> complex:
    """Evaluate the state ``tr(p a)``."""
    a = as_complex_matrix(a)
    if a.shape != p.density.shape:
        raise ShapeMismatch(f"algebra element {a.shape} vs density {p.density.shape}")
    return complex(np.trace(p.density @ a))


def face_compression(face: TopFace, a) -> np.ndarray:
    """Compression V* a V of an algebra element to the face (k-by-k)."""
    a = as_complex_matrix(a)
    v = face.isometry
    if a.shape[0] != a.shape[1] or a.shape[0] != v.shape[0]:
        raise ShapeMismatch(f"algebra element {a.shape} vs face on dimension {v.shape[0]}")
    return v.conj().T @ a @ v


def state_from_face_vector(face: TopFace, zeta) -> StateWitness:
    """Rank-one state (Vz)(Vz)* from a unit vector z in face coordinates."""
    z = np.asarray(zeta, dtype=np.complex128).reshape(-1)
    if z.shape[0] != face.dim:
        raise ShapeMismatch(f"vector of length {z.shape[0]} vs face dimension {face.dim}")
    nrm = float(np.linalg.norm(z))
    if abs(nrm - 1.0) > 1e-10:
        raise NotUnitVector(f"vector has norm {nrm!r}")
    w = face.isometry @ z
    return StateWitness(np.outer(w, w.conj()))


def cauchy_schwarz_gap(p: StateWitness, x, y) -> float:
    """phi(<x,x>) phi(<y,y>) - |phi(<x,y>)|^2 for the state phi = tr(p .)."""
    xx = state_value(p, inner_product(x, x)).real
    yy = state_value(p, inner_product(y, y)).real
    xy = state_value(p, inner_product(x, y))
    return float(xx * yy - abs(xy) ** 2)


# ---------------------------------------------------------------------------
# Numerical range membership
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NumRangeCertificate:
    """Outcome of the zero-membership test for a numerical range.

    ``margin`` is ``min_t lambda_max(Re(e^{it} M))``: the distance from 0
    to the boundary of W(M), negative when 0 lies outside.  On membership
    ``vector`` holds the certifying unit vector and ``residual`` the
    achieved ``|z* M z|``; otherwise ``angle`` holds a separating angle.
    """

    contains_zero: bool
    margin: float
    vector: np.ndarray | None
    angle: float | None
    residual: float | None


def _herm(m: np.ndarray) -> np.ndarray:
    return (m + m.conj().T) / 2.0


def _skew_herm(m: np.ndarray) -> np.ndarray:
    # Hermitian G with M = H + iG after rotation.
    return (m - m.conj().T) / 2.0j


def _support_values(m: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """lambda_max(Re(e^{it} M)) for a batch of angles."""
    ph = np.exp(1j * thetas).reshape(-1, 1, 1)
    stack = (ph * m + ph.conj() * m.conj().T) / 2.0
    return np.linalg.eigvalsh(stack)[:, -1]


def _support_value(m: np.ndarray, theta: float) -> float:
    h = _herm(np.exp(1j * theta) * m)
    return float(np.linalg.eigvalsh(h)[-1])


def _golden_min(f, lo: float, hi: float, width: float = 1e-12) -> tuple[float, float]:
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while b - a > width:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
    t = (a + b) / 2.0
    return t, f(t)


def _minimize_support(m: np.ndarray) -> tuple[float, float]:
    """Global minimum of the support function over the circle.

    Coarse scan plus golden-section refinement around every local grid
    minimum; the curve is Lipschitz with constant ||M||, which bounds the
    scan error by ||M|| * pi / grid.
    """
    thetas = np.linspace(0.0, 2.0 * np.pi, _SUPPORT_GRID, endpoint=False)
    vals = _support_values(m, thetas)
    step = 2.0 * np.pi / _SUPPORT_GRID
    local = np.flatnonzero((vals <= np.roll(vals, 1)) & (vals <= np.roll(vals, -1)))
    # flat curves make every grid point a local minimum; refining the few
    # lowest candidates is enough within the Lipschitz grid error
    local = local[np.argsort(vals[local], kind="stable")][:16]
    best_t, best_v = float(thetas[np.argmin(vals)]), float(np.min(vals))
    for i in local:
        t0 = thetas[i]
        t, v = _golden_min(lambda t: _support_value(m, t), t0 - step, t0 + step)
        if v < best_v:
            best_t, best_v = t, v
    return best_t % (2.0 * np.pi), best_v


def _quad_form(m: np.ndarray, z: np.ndarray) -> complex:
    return complex(z.conj() @ m @ z)


def _zero_quadratic_vector(c: np.ndarray) -> tuple[np.ndarray, float]:
    """Unit z minimizing |z* C z| for Hermitian C; exact zero when the
    spectrum straddles 0 (mix the extreme eigenvectors)."""
    vals, vecs = np.linalg.eigh(c)
    lo, hi = float(vals[0]), float(vals[-1])
    if lo > 0.0:
        return vecs[:, 0], lo
    if hi < 0.0:
        return vecs[:, -1], hi
    if hi - lo == 0.0:
        return vecs[:, -1], hi
    # cos^2 s * hi + sin^2 s * lo = 0
    s = np.arctan2(np.sqrt(hi), np.sqrt(-lo))
    z = np.cos(s) * vecs[:, -1] + np.sin(s) * vecs[:, 0]
    return z / np.linalg.norm(z), 0.0


def _pair_path_vector(lu: float, u: np.ndarray, lw: float, w: np.ndarray,
                      g: np.ndarray) -> np.ndarray:
    """Zero of the H-form along cos(s) u + e^{i gamma} sin(s) w, with the
    phase chosen to cancel (or minimize) the G-form as well.

    u, w are orthonormal eigenvectors of the Hermitian part with
    eigenvalues lu >= 0 >= lw, so the H-form along the path is exactly
    cos^2 lu + sin^2 lw, independent of the phase.
    """
    lu = max(lu, 0.0)
    lw = min(lw, 0.0)
    if lu - lw == 0.0:
        s = 0.0
    else:
        s = np.arctan2(np.sqrt(lu), np.sqrt(-lw))
    cs, sn = np.cos(s), np.sin(s)
    a = (u.conj() @ g @ u).real
    b = (w.conj() @ g @ w).real
    cross = complex(u.conj() @ g @ w)
    base = cs * cs * a + sn * sn * b
    denom = 2.0 * cs * sn
    if denom > 0.0 and abs(cross) > 0.0:
        want = np.clip(-base / (denom * abs(cross)), -1.0, 1.0)
        gamma = -np.angle(cross) + np.arccos(want)
    else:
        gamma = 0.0
    z = cs * u + np.exp(1j * gamma) * sn * w
    return z / np.linalg.norm(z)


def _solve_2x2(b: np.ndarray, mu: complex, tol_abs: float) -> np.ndarray | None:
    """Unit eta in C^2 with eta* B eta = mu, for mu inside W(B).

    Parametrizes eta = (cos t, e^{i g} sin t) and solves the two real
    equations by a dense scan followed by damped Newton iterations.
    """
    bs = b - mu * np.eye(2)

    def value(t, g):
        c, s = np.cos(t), np.sin(t)
        return (c * c * bs[0, 0] + s * s * bs[1, 1]
                + c * s * (np.exp(1j * g) * bs[0, 1] + np.exp(-1j * g) * bs[1, 0]))

    ts = np.linspace(0.0, np.pi / 2.0, 97)
    gs = np.linspace(0.0, 2.0 * np.pi, 192, endpoint=False)
    tt, gg = np.meshgrid(ts, gs, indexing="ij")
    c, s = np.cos(tt), np.sin(tt)
    vals = (c * c * bs[0, 0] + s * s * bs[1, 1]
            + c * s * (np.exp(1j * gg) * bs[0, 1] + np.exp(-1j * gg) * bs[1, 0]))
    i, j = np.unravel_index(np.argmin(np.abs(vals)), vals.shape)
    t, g = float(tt[i, j]), float(gg[i, j])

    f = value(t, g)
    for _ in range(60):
        if abs(f) <= 1e-16 * (1.0 + np.abs(bs).max()):
            break
        c, s = np.cos(t), np.sin(t)
        cross = np.exp(1j * g) * bs[0, 1] + np.exp(-1j * g) * bs[1, 0]
        dt = np.sin(2 * t) * (bs[1, 1] - bs[0, 0]) + np.cos(2 * t) * cross
        dg = c * s * 1j * (np.exp(1j * g) * bs[0, 1] - np.exp(-1j * g) * bs[1, 0])
        jac = np.array([[dt.real, dg.real], [dt.imag, dg.imag]])
        rhs = -np.array([f.real, f.imag])
        step, *_ = np.linalg.lstsq(jac, rhs, rcond=None)
        scale = 1.0
        for _ in range(30):
            fn = value(t + scale * step[0], g + scale * step[1])
            if abs(fn) < abs(f):
                t, g, f = t + scale * step[0], g + scale * step[1], fn
                break
            scale /= 2.0
        else:
            break

    if abs(f) > tol_abs:
        # Derivative-free fallback for degenerate Jacobians.
        res = minimize(lambda p: abs(value(p[0], p[1])) ** 2, x0=[t, g],
                       method="Nelder-Mead",
                       options={"xatol": 1e-14, "fatol": 1e-30, "maxiter": 400})
        t, g = res.x
        if abs(value(t, g)) > tol_abs:
            return None
    eta = np.array([np.cos(t), np.exp(1j * g) * np.sin(t)], dtype=np.complex128)
    return eta / np.linalg.norm(eta)


def _attain_on_segment(m: np.ndarray, z1: np.ndarray, z2: np.ndarray,
                       mu: complex, tol_abs: float) -> np.ndarray | None:
    """Unit z in span{z1, z2} with z* M z = mu, for mu between the values
    attained by z1 and z2 (the 2x2 compression range contains both)."""
    b1 = z1 / np.linalg.norm(z1)
    w = z2 - (b1.conj() @ z2) * b1
    nw = np.linalg.norm(w)
    if nw < 1e-14:
        return b1 if abs(_quad_form(m, b1) - mu) <= tol_abs else None
    b2 = w / nw
    basis = np.column_stack([b1, b2])
    comp = basis.conj().T @ m @ basis
    eta = _solve_2x2(comp, mu, tol_abs)
    if eta is None:
        return None
    z = basis @ eta
    return z / np.linalg.norm(z)


def _boundary_points(m: np.ndarray, count: int) -> tuple[np.ndarray, np.ndarray]:
    """Attained boundary points v* M v for the top eigenvectors of the
    rotated Hermitian parts at ``count`` angles."""
    thetas = np.linspace(0.0, 2.0 * np.pi, count, endpoint=False)
    ph = np.exp(1j * thetas).reshape(-1, 1, 1)
    stack = (ph * m + ph.conj() * m.conj().T) / 2.0
    _, vecs = np.linalg.eigh(stack)
    v = vecs[..., -1]
    pts = np.einsum("ti,ij,tj->t", v.conj(), m, v)
    return pts, v


def _triangle_certificate(m: np.ndarray, count: int, tol_abs: float) -> np.ndarray | None:
    """Certificate from an inner polygonal approximation of W(M).

    Finds three attained boundary points whose triangle contains 0 and
    reduces to two 2x2 inverse problems along the cevian through 0.
    Falls back to a segment solve when the range is (numerically) a line
    segment.  Returns None when 0 is not safely inside the polygon.
    """
    pts, v = _boundary_points(m, count)
    xy = np.column_stack([pts.real, pts.imag])
    center = xy.mean(axis=0)
    spread = np.linalg.svd(xy - center, compute_uv=False)
    nrm = np.abs(pts).max() + 1e-30

    if spread[1] <= 1e-12 * (1.0 + nrm):
        # Collinear range: pick the extreme points along the line.
        direction = pts[np.argmax(np.abs(pts - pts.mean()))] - pts.mean()
        if abs(direction) < 1e-14 * (1.0 + nrm):
            direction = 1.0 + 0.0j
        direction /= abs(direction)
        proj = (pts * direction.conjugate()).real
        i_lo, i_hi = int(np.argmin(proj)), int(np.argmax(proj))
        if proj[i_lo] > tol_abs or proj[i_hi] < -tol_abs:
            return None
        return _attain_on_segment(m, v[i_lo], v[i_hi], 0.0, tol_abs)

    try:
        hull = ConvexHull(xy)
    except QhullError:
        return None
    # hull.equations rows are (a, b, c) with a x + b y + c <= 0 inside;
    # the value at the origin is just c.
    if np.max(hull.equations[:, 2]) > -max(tol_abs / 10.0, 1e-13 * (1.0 + nrm)):
        return None
    verts = hull.vertices
    pa, va = pts[verts[0]], v[verts[0]]
    for i in range(1, len(verts) - 1):
        pb, pc = pts[verts[i]], pts[verts[i + 1]]
        vb, vc = v[verts[i]], v[verts[i + 1]]
        mat = np.array([[pa.real - pc.real, pb.real - pc.real],
                        [pa.imag - pc.imag, pb.imag - pc.imag]])
        try:
            al, be = np.linalg.solve(mat, [-pc.real, -pc.imag])
        except np.linalg.LinAlgError:
            continue
        ga = 1.0 - al - be
        if min(al, be, ga) < -1e-12:
            continue
        if be + ga <= 1e-14:
            return va / np.linalg.norm(va)
        q = (be * pb + ga * pc) / (be + ga)
        zq = _attain_on_segment(m, vb, vc, q, tol_abs)
        if zq is None:
            continue
        z = _attain_on_segment(m, va, zq, 0.0, tol_abs)
        if z is not None:
            return z
    return None


def _polish(m: np.ndarray, z0: np.ndarray, iters: int = 300) -> np.ndarray:
    """Projected gradient descent on |z* M z|^2 over the unit sphere."""
    z = z0 / np.linalg.norm(z0)
    nrm = operator_norm(m)
    step = 0.5 / (1.0 + nrm * nrm)
    for _ in range(iters):
        q = _quad_form(m, z)
        if abs(q) <= 1e-17 * (1.0 + nrm):
            break
        grad = np.conj(q) * (m @ z) + q * (m.conj().T @ z)
        grad = grad - z * (z.conj() @ grad).real
        improved = False
        eta = step
        for _ in range(40):
            zn = z - eta * grad
            zn = zn / np.linalg.norm(zn)
            if abs(_quad_form(m, zn)) < abs(q):
                z, improved = zn, True
                break
            eta /= 2.0
        if not improved:
            break
    return z


def _zero_certificate(m: np.ndarray, theta_star: float, tol_abs: float,
                      nrm: float) -> tuple[np.ndarray, float]:
    """Layered construction of a unit z with |z* M z| <= tol_abs, assuming
    the support-function minimum is >= -tol_abs/2.  Every candidate is
    verified; the best one is returned regardless."""
    best_z, best_r = None, np.inf

    def consider(z):
        nonlocal best_z, best_r
        if z is None:
            return False
        z = z / np.linalg.norm(z)
        r = abs(_quad_form(m, z))
        if r < best_r:
            best_z, best_r = z, r
        return r <= tol_abs

    # Eigenvector with the smallest eigenvalue modulus attains that value.
    w, vr = np.linalg.eig(m)
    if consider(vr[:, np.argmin(np.abs(w))]):
        return best_z, best_r

    k_rot = np.exp(1j * theta_star) * m
    h, g = _herm(k_rot), _skew_herm(k_rot)

    # Boundary route: top eigenspace of H, zero-interpolation of G on it.
    vals, vecs = np.linalg.eigh(h)
    lam_max = vals[-1]
    window = max(0.25 * tol_abs, 1e-12 * (1.0 + nrm))
    sel = vecs[:, vals >= lam_max - window]
    zf, _ = _zero_quadratic_vector(sel.conj().T @ g @ sel)
    if consider(sel @ zf):
        return best_z, best_r

    # Opposite-sign eigenvector pairs with closed-form path zeros.
    for a_mat, b_mat in ((h, g), (g, h)):
        av, au = np.linalg.eigh(a_mat)
        pos = [i for i in range(len(av)) if av[i] >= -tol_abs][::-1]
        neg = [i for i in range(len(av)) if av[i] <= tol_abs]
        for i in pos[:4]:
            for j in neg[:4]:
                if i == j:
                    continue
                z = _pair_path_vector(av[i], au[:, i], av[j], au[:, j], b_mat)
                if consider(z):
                    return best_z, best_r

    for count in (720, 2880):
        if consider(_triangle_certificate(m, count, tol_abs)):
            return best_z, best_r

    consider(_polish(m, best_z))
    return best_z, best_r


def zero_in_numrange(m, tol: float = 1e-9) -> NumRangeCertificate:
    """Decide 0 in W(M) with a certificate either way.

    Membership holds iff ``min_t lambda_max(Re(e^{it} M)) >= 0``; the
    implemented decision allows slack ``tol (1 + ||M||) / 2`` around the
    boundary, inside which a membership certificate is still achievable.
    """
    m = as_complex_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise ShapeMismatch(f"matrix of shape {m.shape} is not square")
    nrm = operator_norm(m)
    tol_abs = tol * (1.0 + nrm)
    theta_star, g_star = _minimize_support(m)
    if g_star < -0.5 * tol_abs:
        return NumRangeCertificate(False, margin=g_star, vector=None,
                                   angle=theta_star, residual=None)
    z, r = _zero_certificate(m, theta_star, tol_abs, nrm)
    return NumRangeCertificate(True, margin=g_star, vector=z, angle=None, residual=r)
