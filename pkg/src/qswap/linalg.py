"""Dense complex linear algebra for small Hermitian problems.

This module is the numeric oracle of the package: a hand-rolled cyclic
Jacobi eigensolver with a deterministic phase convention, spectral matrix
functions built on it, and the Pauli tensor-product decomposition.  Every
closed-form spectrum elsewhere in the package is tested against ``eigh``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    DimensionMismatchError,
    DomainError,
    NoConvergenceError,
    NonHermitianError,
)

HERMITICITY_TOL = 1e-12
OFFDIAG_TARGET = 1e-14     # relative to the Frobenius norm of the input
MAX_SWEEPS = 50
LOG_EIGENVALUE_FLOOR = 1e-15

SIGMA = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted ascending; column k of ``eigenvectors`` belongs to
    ``eigenvalues[k]`` and is unit norm with the deterministic phase fix."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


@dataclass(frozen=True)
class PauliCoefficients:
    """Real coefficients of a Hermitian matrix over the Pauli product basis.

    ``coeffs`` has shape (4,)*order; ``coeffs[k1, .., kN]`` multiplies
    sigma_{k1} x .. x sigma_{kN}.
    """

    order: int
    coeffs: np.ndarray


def as_complex_matrix(h) -> np.ndarray:
    """Validate and return a finite square complex matrix."""
    a = np.asarray(h, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.view(float))):
        raise ValueError("matrix entries must be finite")
    return a


def hermiticity_defect(h: np.ndarray) -> float:
    return float(np.max(np.abs(h - h.conj().T))) if h.size else 0.0


def require_hermitian(h, tol: float = HERMITICITY_TOL) -> np.ndarray:
    a = as_complex_matrix(h)
    defect = hermiticity_defect(a)
    if defect >= tol:
        raise NonHermitianError(f"max |H - H^dag| = {defect:.3e} >= {tol:.0e}")
    return a


def _fix_phases(v: np.ndarray) -> np.ndarray:
    # Largest-magnitude component (first index on ties) made real positive.
    for j in range(v.shape[1]):
        k = int(np.argmax(np.abs(v[:, j])))
        pivot = v[k, j]
        v[:, j] *= np.conj(pivot) / abs(pivot)
    return v


def eigh(h, max_sweeps: int = MAX_SWEEPS) -> Spectrum:
    """Diagonalize a Hermitian matrix by cyclic complex Jacobi rotations.

    Deterministic: fixed sweep order (row-major pairs), convergence when the
    off-diagonal Frobenius norm drops below OFFDIAG_TARGET * ||H||_F, then
    ascending stable sort and per-column phase fix.
    """
    a = require_hermitian(h).copy()
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = float(np.linalg.norm(a))
    if scale == 0.0:
        return Spectrum(np.zeros(n), v)

    def offdiag(m):
        # Summed directly over off-diagonal entries; subtracting the diagonal
        # from the total norm would cancel catastrophically near convergence.
        off = m - np.diag(np.diag(m))
        return float(np.linalg.norm(off))

    target = OFFDIAG_TARGET * scale
    for _ in range(max_sweeps):
        if offdiag(a) < target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                m = abs(a[p, q])
                if m == 0.0:
                    continue
                ph = a[p, q] / m
                tau = (a[q, q].real - a[p, p].real) / (2.0 * m)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * np.conj(ph) * colq
                a[:, q] = s * ph * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * ph * rowq
                a[q, :] = s * np.conj(ph) * rowp + c * rowq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * np.conj(ph) * vq
                v[:, q] = s * ph * vp + c * vq
    if offdiag(a) >= target:
        raise NoConvergenceError(
            f"off-diagonal norm {offdiag(a):.3e} after {max_sweeps} sweeps (target {target:.3e})"
        )

    w = np.diag(a).real.copy()
    order = np.argsort(w, kind="stable")
    return Spectrum(w[order], _fix_phases(v[:, order]))


def matrix_function(h, f: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """sum_k f(lambda_k) |v_k><v_k| for Hermitian h."""
    spec = eigh(h)
    fw = np.asarray(f(spec.eigenvalues), dtype=complex)
    return (spec.eigenvectors * fw) @ spec.eigenvectors.conj().T


def matrix_log(h, floor: float = LOG_EIGENVALUE_FLOOR) -> np.ndarray:
    """Principal matrix log; rejects eigenvalues at or below ``floor``."""
    spec = eigh(h)
    if np.any(spec.eigenvalues <= floor):
        raise DomainError(
            f"matrix log needs eigenvalues > {floor:.0e}, got min {spec.eigenvalues.min():.3e}"
        )
    return (spec.eigenvectors * np.log(spec.eigenvalues).astype(complex)) @ spec.eigenvectors.conj().T


def propagator(h, dt: float, hbar: float = 1.0) -> np.ndarray:
    """exp(-i H dt / hbar) via the spectral decomposition."""
    return matrix_function(h, lambda w: np.exp(-1j * w * dt / hbar))


def pauli_string(indices) -> np.ndarray:
    out = SIGMA[indices[0]]
    for k in indices[1:]:
        out = np.kron(out, SIGMA[k])
    return out


def pauli_decompose(h, order: int) -> PauliCoefficients:
    """Coefficients b_{k1..kN} = Tr[(sigma_k1 x .. x sigma_kN) H] / 2^N.

    Real for Hermitian input; the imaginary part (rounding noise) is dropped.
    """
    a = as_complex_matrix(h)
    dim = 2**order
    if a.shape[0] != dim:
        raise DimensionMismatchError(f"order {order} needs a {dim}x{dim} matrix, got {a.shape[0]}")
    coeffs = np.empty((4,) * order)
    for idx in np.ndindex(*(4,) * order):
        coeffs[idx] = np.trace(pauli_string(idx) @ a).real / dim
    return PauliCoefficients(order, coeffs)


def pauli_reconstruct(pc: PauliCoefficients) -> np.ndarray:
    dim = 2**pc.order
    out = np.zeros((dim, dim), dtype=complex)
    for idx in np.ndindex(*(4,) * pc.order):
        c = pc.coeffs[idx]
        if c != 0.0:
            out += c * pauli_string(idx)
    return out
