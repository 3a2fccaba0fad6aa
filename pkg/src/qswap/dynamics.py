"""Time evolution of the two-qubit system.

Numeric propagation is piecewise constant: each interval of the time grid
uses the spectral exponential of that interval's Hamiltonian (evaluated at
the interval midpoint for time-dependent schedules).  The analytic unitary
and density-matrix closed forms are derived from the 2-level block
structure and are exact for constant parameters; ``evolve`` is their oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .errors import GridError, PerturbationTooLargeError
from .gate import (
    CaseParams,
    LabeledSpectrum,
    SymmetricSwapParams,
    TwoQubitSystem,
    build_two_qubit_hamiltonian,
    case_spectrum,
    symmetric_swap_spectrum,
    symmetric_swap_system,
)

NORM_TOL = 1e-12
DEFAULT_STEP_FACTOR = 0.01   # dt <= factor * hbar / max|H entry|

LEVEL_LABELS = ("E1", "E2", "E3", "E4")

# Columns v1..v4: symmetric/antisymmetric combos block-diagonalizing the
# symmetric swap Hamiltonian.
_P_BLOCK = np.array(
    [
        [1, 0, 0, 1],
        [0, 1, 1, 0],
        [0, 1, -1, 0],
        [1, 0, 0, -1],
    ],
    dtype=complex,
).T / math.sqrt(2.0)


@dataclass(frozen=True)
class IntegratedParams:
    """Time integrals of Hamiltonian parameters from t0 to t (all zero at t0).

    q11/q22/tr1/tr2 parametrize the symmetric configuration; q1..q4 with
    tr1/ti1 parametrize the localized-particle configuration (no B hopping).
    """

    q11: float = 0.0
    q22: float = 0.0
    tr1: float = 0.0
    ti1: float = 0.0
    tr2: float = 0.0
    q1: float = 0.0
    q2: float = 0.0
    q3: float = 0.0
    q4: float = 0.0

    @classmethod
    def constant_symmetric(cls, q11: float, q22: float, tsr1: float, tsr2: float, dt: float):
        return cls(q11=q11 * dt, q22=q22 * dt, tr1=tsr1 * dt, tr2=tsr2 * dt)

    @classmethod
    def constant_localized(cls, diag: Sequence[float], ts_re: float, ts_im: float, dt: float):
        q1, q2, q3, q4 = (x * dt for x in diag)
        return cls(tr1=ts_re * dt, ti1=ts_im * dt, q1=q1, q2=q2, q3=q3, q4=q4)


@dataclass(frozen=True)
class EigenbasisAmplitudes:
    """Level occupation amplitudes c_k >= 0 and initial phases phi_k over
    the labeled levels E1..E4."""

    c: tuple[float, float, float, float]
    phi: tuple[float, float, float, float] = (0.0, 0.0, 0.0, 0.0)

    def __post_init__(self):
        total = sum(x * x for x in self.c)
        if abs(total - 1.0) > NORM_TOL:
            raise ValueError(f"sum of c_k^2 = {total!r}, expected 1")


@dataclass(frozen=True)
class CoolingSchedule:
    """Weak resonant drive of amplitude f_amplitude applied for ``duration``;
    mode 'cool' targets E1 -> E2 transfer, 'heat' flips the drive sign."""

    f_amplitude: float
    duration: float
    mode: str = "cool"

    def __post_init__(self):
        if self.mode not in ("cool", "heat"):
            raise ValueError("mode must be 'cool' or 'heat'")
        if not (self.duration > 0.0):
            raise ValueError("duration must be positive")


@dataclass(frozen=True)
class CoolingTrace:
    times: np.ndarray
    populations: np.ndarray  # column k: |<E_{k+1}|psi(t)>|^2 in E1..E4 label order


def require_state(state) -> np.ndarray:
    psi = np.asarray(state, dtype=complex).reshape(4)
    norm = float(np.sum(np.abs(psi) ** 2))
    if abs(norm - 1.0) > NORM_TOL:
        raise ValueError(f"state norm^2 = {norm!r}, expected 1")
    return psi


def require_density(rho) -> np.ndarray:
    """Validate a 4x4 density matrix (Hermitian, unit trace, PSD)."""
    r = linalg.require_hermitian(rho)
    if r.shape != (4, 4):
        raise ValueError(f"expected 4x4, got {r.shape}")
    tr = float(np.trace(r).real)
    if abs(tr - 1.0) > NORM_TOL:
        raise ValueError(f"trace = {tr!r}, expected 1")
    w = linalg.eigh(r).eigenvalues
    if w.min() < -1e-12:
        raise ValueError(f"negative eigenvalue {w.min():.3e}")
    return r


def evolve(system, state0, t_grid, hbar: float = 1.0) -> np.ndarray:
    """States at each grid point; row 0 is state0 at t_grid[0].

    ``system`` is a constant TwoQubitSystem or a callable t -> TwoQubitSystem
    sampled at interval midpoints (piecewise-constant stepping).
    """
    psi = require_state(state0)
    t = np.asarray(t_grid, dtype=float)
    if t.ndim != 1 or t.size < 1:
        raise GridError("t_grid must be a 1-d array with at least one point")
    if np.any(np.diff(t) <= 0.0):
        raise GridError("t_grid must be strictly increasing")

    out = np.empty((t.size, 4), dtype=complex)
    out[0] = psi
    if t.size == 1:
        return out

    if not callable(system):
        spec = linalg.eigh(build_two_qubit_hamiltonian(system))
        amps = spec.eigenvectors.conj().T @ psi
        dt = t - t[0]
        phases = np.exp(-1j * np.outer(dt, spec.eigenvalues) / hbar)
        out[:] = (phases * amps) @ spec.eigenvectors.T
        out[0] = psi
        return out

    mids = 0.5 * (t[:-1] + t[1:])
    hs = np.stack([build_two_qubit_hamiltonian(system(tm)) for tm in mids])
    w, v = np.linalg.eigh(hs)  # batched; per-step propagators only
    dts = np.diff(t)
    for k in range(mids.size):
        ph = np.exp(-1j * w[k] * dts[k] / hbar)
        psi = v[k] @ (ph * (v[k].conj().T @ psi))
        out[k + 1] = psi
    return out


def _two_level_unitary(delta: float, wx: float, wy: float, mean: float, hbar: float) -> np.ndarray:
    """exp(-i (mean*I + w.sigma)/hbar) for integrated w = (wx, wy, delta)."""
    r = math.sqrt(delta * delta + wx * wx + wy * wy)
    phase = np.exp(-1j * mean / hbar)
    if r == 0.0:
        return phase * np.eye(2, dtype=complex)
    th = r / hbar
    c, s = math.cos(th), math.sin(th)
    return phase * np.array(
        [
            [c - 1j * s * delta / r, -1j * s * (wx - 1j * wy) / r],
            [-1j * s * (wx + 1j * wy) / r, c + 1j * s * delta / r],
        ]
    )


def analytic_U_localized(ip: IntegratedParams, hbar: float = 1.0) -> np.ndarray:
    """Propagator when qubit B cannot hop: block diagonal over rows (1,3)
    and (2,4), each a 2-level propagator with splitting (q1-q3) resp.
    (q2-q4) and the integrated A hopping (tr1, ti1)."""
    u = np.zeros((4, 4), dtype=complex)
    for (i, j), (qa, qb) in (((0, 2), (ip.q1, ip.q3)), ((1, 3), (ip.q2, ip.q4))):
        blk = _two_level_unitary(
            0.5 * (qa - qb), ip.tr1, -ip.ti1, 0.5 * (qa + qb), hbar
        )
        u[np.ix_((i, j), (i, j))] = blk
    return u


def analytic_U_symmetric(ip: IntegratedParams, hbar: float = 1.0) -> np.ndarray:
    """Propagator of the symmetric configuration (real hoppings tr1/tr2,
    diagonal q11 +/- q22): 2-level blocks over the (v1, v2) and (v3, v4)
    combination basis with couplings tr1 + tr2 and tr2 - tr1."""
    blk = np.zeros((4, 4), dtype=complex)
    blk[np.ix_((0, 1), (0, 1))] = _two_level_unitary(ip.q22, ip.tr1 + ip.tr2, 0.0, 0.0, hbar)
    blk[np.ix_((2, 3), (2, 3))] = _two_level_unitary(-ip.q22, ip.tr2 - ip.tr1, 0.0, 0.0, hbar)
    phase = np.exp(-1j * ip.q11 / hbar)
    return phase * (_P_BLOCK @ blk @ _P_BLOCK.conj().T)


def analytic_rho_from_E1(ip: IntegratedParams, hbar: float = 1.0) -> np.ndarray:
    """Density matrix at time t for the symmetric configuration started in
    |E1> = (-1, 0, 0, 1)/sqrt(2); pure by construction (rho^2 = rho)."""
    tdiff = ip.tr1 - ip.tr2
    r = math.hypot(ip.q22, tdiff)
    v3 = np.array([0, 1, -1, 0], dtype=complex) / math.sqrt(2.0)
    v4 = np.array([1, 0, 0, -1], dtype=complex) / math.sqrt(2.0)
    if r == 0.0:
        psi = -v4
    else:
        th = r / hbar
        amp_v4 = math.cos(th) - 1j * (ip.q22 / r) * math.sin(th)
        amp_v3 = -1j * math.sin(th) * (-tdiff / r)
        psi = -(amp_v3 * v3 + amp_v4 * v4)
    return np.outer(psi, psi.conj())


@dataclass(frozen=True)
class OccupancyProbabilities:
    p11: float
    p12: float
    p21: float
    p22: float
    pa1: float  # qubit A at node 1
    pb1: float  # qubit B at node 1'


def occupancy_probabilities(state) -> OccupancyProbabilities:
    psi = require_state(state)
    p = np.abs(psi) ** 2
    return OccupancyProbabilities(
        p11=float(p[0]),
        p12=float(p[1]),
        p21=float(p[2]),
        p22=float(p[3]),
        pa1=float(p[0] + p[1]),
        pb1=float(p[0] + p[2]),
    )


def eigenbasis_state(
    spec: LabeledSpectrum, ea: EigenbasisAmplitudes, t: float = 0.0, hbar: float = 1.0
) -> np.ndarray:
    """psi(t) = sum_k c_k e^{i phi_k} e^{-i E_k t / hbar} |E_k>."""
    psi = np.zeros(4, dtype=complex)
    for k, label in enumerate(LEVEL_LABELS):
        amp = ea.c[k] * np.exp(1j * ea.phi[k]) * np.exp(-1j * spec.energy(label) * t / hbar)
        psi += amp * spec.vector(label)
    return psi


def _beat_expansion(spec: LabeledSpectrum, ea: EigenbasisAmplitudes, weights, t, hbar: float):
    """sum_jk c_j c_k e^{i(phi_j - phi_k)} e^{-i(E_j - E_k) t / hbar} W_kj
    for a real symmetric level-basis matrix W; vectorized over t."""
    t = np.asarray(t, dtype=float)
    e = np.array([spec.energy(lbl) for lbl in LEVEL_LABELS])
    out = np.zeros(t.shape)
    for j in range(4):
        out = out + ea.c[j] ** 2 * weights[j, j]
    for j in range(4):
        for k in range(j + 1, 4):
            if weights[j, k] == 0.0:
                continue
            arg = (ea.phi[j] - ea.phi[k]) - (e[j] - e[k]) * t / hbar
            out = out + 2.0 * ea.c[j] * ea.c[k] * weights[j, k] * np.cos(arg)
    return out


def occupancy_closed_form(
    cp: CaseParams, ea: EigenbasisAmplitudes, t, hbar: float = 1.0
) -> np.ndarray:
    """Occupancy probabilities p(1,1'), p(1,2'), p(2,1'), p(2,2') at time(s)
    t for a case eigen-state mixture, from the beat-frequency expansion over
    the closed-form eigenvectors."""
    spec = case_spectrum(cp)
    v = np.column_stack([spec.vector(lbl).real for lbl in LEVEL_LABELS])
    t = np.asarray(t, dtype=float)
    probs = [ _beat_expansion(spec, ea, np.outer(v[i], v[i]), t, hbar) for i in range(4) ]
    return np.stack(probs, axis=-1)


def cooling_drive(p: SymmetricSwapParams, sched: CoolingSchedule, hbar: float = 1.0):
    """Hopping-modulated Hamiltonian schedule t -> TwoQubitSystem.

    ts12 -> ts - f(t)/2 and ts1'2' -> ts + f(t)/2 with the resonant drive
    f(t) = a cos((E1 - E2) t / hbar) equals H0 + f(t)(|E1><E2| + |E2><E1|),
    so levels E3 and E4 stay exactly decoupled for any f.
    """
    spec = symmetric_swap_spectrum(p)
    gap = spec.labeled.energy("E1") - spec.labeled.energy("E2")
    if abs(sched.f_amplitude) >= 0.1 * abs(gap):
        raise PerturbationTooLargeError(
            f"|f| = {abs(sched.f_amplitude):.3e} >= 0.1 |E1 - E2| = {0.1 * abs(gap):.3e}"
        )
    amp = sched.f_amplitude if sched.mode == "cool" else -sched.f_amplitude
    base = symmetric_swap_system(p)

    def system(t: float) -> TwoQubitSystem:
        f = amp * math.cos(gap * t / hbar)
        return TwoQubitSystem(
            ep1=base.ep1,
            ep2=base.ep2,
            ep1p=base.ep1p,
            ep2p=base.ep2p,
            ts12=complex(p.ts - 0.5 * f),
            ts1p2p=complex(p.ts + 0.5 * f),
            coulomb=base.coulomb,
        )

    return system


def cooling_protocol(
    p: SymmetricSwapParams,
    sched: CoolingSchedule,
    state0=None,
    hbar: float = 1.0,
    steps: int | None = None,
) -> CoolingTrace:
    """Evolve under the weak hopping drive and report level populations in
    the unperturbed eigenbasis; E3/E4 populations stay constant while
    population moves between E1 and E2."""
    spec = symmetric_swap_spectrum(p)
    if state0 is None:
        state0 = spec.labeled.vector("E1")
    system = cooling_drive(p, sched, hbar)
    if steps is None:
        hmax = float(np.max(np.abs(build_two_qubit_hamiltonian(system(0.0)))))
        dt = DEFAULT_STEP_FACTOR * hbar / hmax if hmax > 0.0 else sched.duration
        steps = max(1, int(math.ceil(sched.duration / dt)))
    times = np.linspace(0.0, sched.duration, steps + 1)
    trace = evolve(system, state0, times, hbar)
    basis = np.column_stack([spec.labeled.vector(lbl) for lbl in LEVEL_LABELS])
    pops = np.abs(trace @ basis.conj()) ** 2
    return CoolingTrace(times=times, populations=pops)
