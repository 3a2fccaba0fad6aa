"""Reduced density matrices, entanglement entropy, and correlation metrics.

Entropy convention: S = -Tr[rho ln rho] >= 0 (natural log), computed from
the two closed-form eigenvalues of the 2x2 reduction, never through a
matrix logarithm, so pure states are exact rather than singular.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .dynamics import (
    EigenbasisAmplitudes,
    LEVEL_LABELS,
    _beat_expansion,
    require_density,
    require_state,
)
from .gate import CaseParams, case_spectrum

ENTROPY_EIGENVALUE_FLOOR = 1e-15
POSITIVITY_TOL = 1e-12

# Diagonal correlation operator: +1 on correlated occupancies (1,1'), (2,2'),
# -1 on anticorrelated (1,2'), (2,1').
CORRELATION_DIAGONAL = np.array([1.0, -1.0, -1.0, 1.0])


class GateKind(enum.Enum):
    SWAP = "SWAP"
    ANTISWAP = "ANTISWAP"
    INDETERMINATE = "INDETERMINATE"


@dataclass(frozen=True)
class ReducedDensity2:
    """2x2 reduced density matrix stored as (rho22, Re rho12, Im rho12);
    rho11 = 1 - rho22."""

    rho22: float
    rho12_r: float
    rho12_i: float

    def __post_init__(self):
        off2 = self.rho12_r**2 + self.rho12_i**2
        if not (-POSITIVITY_TOL <= self.rho22 <= 1.0 + POSITIVITY_TOL):
            raise ValueError(f"rho22 = {self.rho22!r} outside [0, 1]")
        if off2 > self.rho11 * self.rho22 + POSITIVITY_TOL:
            raise ValueError("|rho12|^2 exceeds rho11 * rho22")

    @property
    def rho11(self) -> float:
        return 1.0 - self.rho22

    @property
    def matrix(self) -> np.ndarray:
        off = complex(self.rho12_r, self.rho12_i)
        return np.array([[self.rho11, off], [np.conj(off), self.rho22]])

    def eigenvalues(self) -> tuple[float, float]:
        r = math.hypot(1.0 - 2.0 * self.rho22, 2.0 * abs(complex(self.rho12_r, self.rho12_i)))
        lo, hi = 0.5 * (1.0 - r), 0.5 * (1.0 + r)
        return max(lo, 0.0), min(hi, 1.0)

    def purity(self) -> float:
        lo, hi = self.eigenvalues()
        return lo * lo + hi * hi


def partial_trace(rho, keep: str) -> ReducedDensity2:
    """Trace out one particle of a two-particle density matrix.

    keep='A' keeps the unprimed qubit (rows 1,2 vs 3,4); keep='B' keeps the
    primed qubit (rows 1,3 vs 2,4).
    """
    r = require_density(rho)
    if keep == "B":
        r22 = (r[1, 1] + r[3, 3]).real
        off = r[0, 1] + r[2, 3]
    elif keep == "A":
        r22 = (r[2, 2] + r[3, 3]).real
        off = r[0, 2] + r[1, 3]
    else:
        raise ValueError("keep must be 'A' or 'B'")
    return ReducedDensity2(rho22=float(r22), rho12_r=float(off.real), rho12_i=float(off.imag))


def von_neumann_entropy(rd: ReducedDensity2) -> float:
    """S = -sum lambda ln lambda with the 0 ln 0 := 0 convention."""
    s = 0.0
    for lam in rd.eigenvalues():
        if lam > ENTROPY_EIGENVALUE_FLOOR:
            s -= lam * math.log(lam)
    return s


def correlation_expectation(state) -> float:
    """f(C) = |g1|^2 + |g4|^2 - |g2|^2 - |g3|^2 in [-1, 1]."""
    psi = require_state(state)
    return float(CORRELATION_DIAGONAL @ (np.abs(psi) ** 2))


def correlation_closed_form(
    cp: CaseParams, ea: EigenbasisAmplitudes, t, hbar: float = 1.0
) -> np.ndarray:
    """f(C)(t) for a case eigen-state mixture: beat-frequency expansion
    over <E_j|C|E_k> computed from the closed-form eigenvectors."""
    spec = case_spectrum(cp)
    v = np.column_stack([spec.vector(lbl).real for lbl in LEVEL_LABELS])
    weights = v.T @ (CORRELATION_DIAGONAL[:, None] * v)
    return _beat_expansion(spec, ea, weights, t, hbar)


def classify_gate(f_trace, threshold: float = 0.05) -> GateKind:
    """SWAP if the time-averaged correlation is below -threshold, ANTISWAP
    above +threshold, else INDETERMINATE."""
    trace = np.asarray(f_trace, dtype=float)
    if trace.size == 0:
        raise ValueError("empty correlation trace")
    mean = float(trace.mean())
    if mean < -threshold:
        return GateKind.SWAP
    if mean > threshold:
        return GateKind.ANTISWAP
    return GateKind.INDETERMINATE
