"""Single position-based (charge) qubit in the tight-binding model.

Two sites with on-site energies ep1, ep2 and a complex hopping amplitude
ts = tsr + i*tsi; the 2x2 Hamiltonian, its closed-form eigen-system, and
the constant-parameter propagator exp(-i H dt / hbar).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import Spectrum, _fix_phases

NORM_TOL = 1e-12


@dataclass(frozen=True)
class QubitParams:
    ep1: float
    ep2: float
    tsr: float
    tsi: float

    def __post_init__(self):
        for name in ("ep1", "ep2", "tsr", "tsi"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    @property
    def ts(self) -> complex:
        return complex(self.tsr, self.tsi)


@dataclass(frozen=True)
class QubitState:
    alpha: complex
    beta: complex

    def __post_init__(self):
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"|alpha|^2 + |beta|^2 = {norm!r}, expected 1")

    def as_array(self) -> np.ndarray:
        return np.array([self.alpha, self.beta], dtype=complex)


def build_qubit_hamiltonian(p: QubitParams) -> np.ndarray:
    return np.array([[p.ep1, p.ts], [np.conj(p.ts), p.ep2]], dtype=complex)


def qubit_energies(p: QubitParams) -> tuple[float, float]:
    """E_{1,2} = (ep1+ep2)/2 -/+ sqrt((ep1-ep2)^2/4 + |ts|^2), E1 <= E2."""
    mean = 0.5 * (p.ep1 + p.ep2)
    r = math.hypot(0.5 * (p.ep1 - p.ep2), abs(p.ts))
    return mean - r, mean + r


def qubit_spectrum_closed_form(p: QubitParams) -> Spectrum:
    """Closed-form eigen-system, normalized, with the shared phase convention.

    A scalar matrix (ts = 0, ep1 = ep2) has no preferred eigenbasis; the
    canonical basis is returned.
    """
    e1, e2 = qubit_energies(p)
    if abs(p.ts) == 0.0:
        vecs = np.eye(2, dtype=complex)
        if p.ep1 > p.ep2:
            vecs = vecs[:, ::-1].copy()
        return Spectrum(np.array([e1, e2]), vecs)
    # (ts, E - ep1) solves the eigenvector equation row-wise for each E.
    vecs = np.empty((2, 2), dtype=complex)
    for j, e in enumerate((e1, e2)):
        v = np.array([p.ts, e - p.ep1], dtype=complex)
        vecs[:, j] = v / np.linalg.norm(v)
    return Spectrum(np.array([e1, e2]), _fix_phases(vecs))


def qubit_propagator(p: QubitParams, dt: float, hbar: float = 1.0) -> np.ndarray:
    """exp(-i H dt / hbar) from the 2-level spectral form.

    H = m*I + w.sigma with w = (tsr, -tsi, (ep1-ep2)/2) gives
    U = e^{-i m dt/hbar} (cos(|w| dt/hbar) I - i sin(|w| dt/hbar) w^.sigma).
    """
    if not math.isfinite(dt):
        raise ValueError("dt must be finite")
    mean = 0.5 * (p.ep1 + p.ep2)
    wx, wy, wz = p.tsr, -p.tsi, 0.5 * (p.ep1 - p.ep2)
    r = math.sqrt(wx * wx + wy * wy + wz * wz)
    phase = np.exp(-1j * mean * dt / hbar)
    if r == 0.0:
        return phase * np.eye(2, dtype=complex)
    th = r * dt / hbar
    c, s = math.cos(th), math.sin(th)
    u = np.array(
        [
            [c - 1j * s * wz / r, -1j * s * (wx - 1j * wy) / r],
            [-1j * s * (wx + 1j * wy) / r, c + 1j * s * wz / r],
        ]
    )
    return phase * u


def measure_position(s: QubitState) -> tuple[float, float]:
    """Probabilities of finding the particle at node 1 and node 2."""
    return abs(s.alpha) ** 2, abs(s.beta) ** 2
