"""Dense complex-matrix kernel: adjoint, Hermitian spectra, operator norm.

Everything else in the package reduces to these three facts about a
matrix: its conjugate transpose, the spectral decomposition of its
Hermitian part, and its largest singular value.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonHermitianInput

# Relative drift allowed before a matrix stops counting as Hermitian.
HERMITIAN_DRIFT_TOL = 1e-10


def as_complex_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a 2-d complex128 array with finite entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"expected a nonempty 2-d matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite")
    return m


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_complex_matrix(a).conj().T


def operator_norm(a) -> float:
    """Largest singular value of ``a``; equals sqrt(lambda_max(A*A))."""
    m = as_complex_matrix(a)
    return float(np.linalg.svd(m, compute_uv=False)[0])


@dataclass(frozen=True)
class HermitianSpectrum:
    """Full spectral decomposition of a Hermitian matrix.

    ``eigenvalues`` are real and sorted descending; column ``i`` of
    ``eigenvectors`` is a unit eigenvector for ``eigenvalues[i]`` and the
    columns form an orthonormal basis.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_spectrum(h, drift_tol: float = HERMITIAN_DRIFT_TOL) -> HermitianSpectrum:
    """Spectral decomposition of a (numerically) Hermitian matrix.

    Drift up to ``drift_tol`` relative is silently symmetrized away;
    anything beyond raises :class:`NonHermitianInput`.
    """
    m = as_complex_matrix(h)
    if m.shape[0] != m.shape[1]:
        raise NonHermitianInput(f"matrix of shape {m.shape} is not square")
    drift = operator_norm(m - m.conj().T)
    if drift > drift_tol * (1.0 + operator_norm(m)):
        raise NonHermitianInput(
            f"matrix deviates from Hermitian by {drift:.3e} (relative tol {drift_tol:.1e})"
        )
    sym = (m + m.conj().T) / 2.0
    vals, vecs = np.linalg.eigh(sym)
    # stable so that degenerate blocks keep the factorization's basis order
    order = np.argsort(-vals, kind="stable")
    return HermitianSpectrum(vals[order].copy(), vecs[:, order].copy())
