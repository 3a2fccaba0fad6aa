"""Sweep orchestration and deterministic CSV emission.

Sweep points are pure functions of the configuration, so they may be
evaluated on a thread pool; rows are always assembled in sweep-index order
and formatted to 12 significant digits, which makes the byte output
independent of the thread count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import linalg
from .config import RunConfig
from .dynamics import CoolingSchedule, cooling_protocol, evolve, occupancy_probabilities
from .entanglement import correlation_expectation, partial_trace, von_neumann_entropy
from .design import design_angled_swap, design_antiswap, design_symmetric_swap
from .gate import (
    Geometry,
    SymmetricSwapParams,
    TwoQubitSystem,
    build_two_qubit_hamiltonian,
    coulomb_angled,
    coulomb_parallel,
)


@dataclass(frozen=True)
class CsvTable:
    header: tuple
    rows: tuple

    def to_csv(self) -> str:
        lines = [",".join(self.header)]
        for row in self.rows:
            lines.append(",".join(_format_cell(x) for x in row))
        return "\n".join(lines) + "\n"


def _format_cell(x) -> str:
    if isinstance(x, str):
        return x
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    v = float(x)
    if not np.isfinite(v):
        raise FloatingPointError(f"non-finite value {v!r} in output")
    if v == 0.0:
        v = 0.0  # normalize -0.0
    return format(v, ".12g")


def _geometry(cfg: RunConfig, d=None, alpha=None) -> Geometry:
    f = cfg.floats
    return Geometry(
        d=f["d"] if d is None else d,
        a=f["ab"],
        b=0.0,
        alpha=f.get("alpha", 0.0) if alpha is None else alpha,
        q=f["q"],
    )


def _system(cfg: RunConfig, d=None, alpha=None) -> TwoQubitSystem:
    f = cfg.floats
    if cfg.enums.get("geometry", "parallel") == "angled" or alpha is not None:
        coulomb = coulomb_angled(_geometry(cfg, d=d, alpha=alpha))
    else:
        coulomb = coulomb_parallel(f["d"] if d is None else d, f["ab"], f["q"])
    return TwoQubitSystem(
        ep1=f["ep1"],
        ep2=f["ep2"],
        ep1p=f["ep1p"],
        ep2p=f["ep2p"],
        ts12=complex(f["ts1_re"], f["ts1_im"]),
        ts1p2p=complex(f["ts2_re"], f["ts2_im"]),
        coulomb=coulomb,
    )


def _spectrum_row(cfg: RunConfig, axis_value: float, angled: bool):
    sys = _system(cfg, alpha=axis_value) if angled else _system(cfg, d=axis_value)
    w = linalg.eigh(build_two_qubit_hamiltonian(sys)).eigenvalues
    gap_min = float(np.min(np.diff(w)))
    return (axis_value, *map(float, w), gap_min)


def _run_sweep(cfg: RunConfig, threads: int, angled: bool) -> CsvTable:
    f = cfg.floats
    axis = np.linspace(f["sweep_start"], f["sweep_stop"], cfg.ints["count"])
    name = "alpha" if angled else "d"
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(lambda x: _spectrum_row(cfg, float(x), angled), axis))
    else:
        rows = [_spectrum_row(cfg, float(x), angled) for x in axis]
    return CsvTable((name, "E1", "E2", "E3", "E4", "gap_min"), tuple(rows))


def _time_grid(cfg: RunConfig) -> np.ndarray:
    f = cfg.floats
    return np.linspace(f["t0"], f["t1"], cfg.ints["steps"] + 1)


def _run_evolve(cfg: RunConfig) -> CsvTable:
    grid = _time_grid(cfg)
    trace = evolve(_system(cfg), cfg.state(), grid, cfg.floats["hbar"])
    header = (
        "t",
        "g1_re", "g1_im", "g2_re", "g2_im", "g3_re", "g3_im", "g4_re", "g4_im",
        "p11", "p12", "p21", "p22", "pA1", "pB1",
    )
    rows = []
    for t, psi in zip(grid, trace):
        occ = occupancy_probabilities(psi)
        parts = [x for g in psi for x in (g.real, g.imag)]
        rows.append(
            (float(t), *parts, occ.p11, occ.p12, occ.p21, occ.p22, occ.pa1, occ.pb1)
        )
    return CsvTable(header, tuple(rows))


def _run_entropy(cfg: RunConfig) -> CsvTable:
    grid = _time_grid(cfg)
    trace = evolve(_system(cfg), cfg.state(), grid, cfg.floats["hbar"])
    rows = []
    for t, psi in zip(grid, trace):
        rho = np.outer(psi, psi.conj())
        ra = partial_trace(rho, "A")
        rb = partial_trace(rho, "B")
        rows.append((float(t), von_neumann_entropy(rb), ra.purity(), rb.purity()))
    return CsvTable(("t", "S_B", "purity_A", "purity_B"), tuple(rows))


def _run_correlation(cfg: RunConfig) -> CsvTable:
    grid = _time_grid(cfg)
    sys = _system(cfg)
    spec = linalg.eigh(build_two_qubit_hamiltonian(sys))
    c, phi = cfg.amplitudes()
    # c_k weights the k-th ascending level of the configured system.
    psi0 = np.zeros(4, dtype=complex)
    for k in range(4):
        psi0 += c[k] * np.exp(1j * phi[k]) * spec.eigenvectors[:, k]
    trace = evolve(sys, psi0, grid, cfg.floats["hbar"])
    f_vals = [correlation_expectation(psi) for psi in trace]
    rows = []
    running = 0.0
    for k, (t, fv) in enumerate(zip(grid, f_vals), start=1):
        running += fv
        rows.append((float(t), fv, running / k))
    return CsvTable(("t", "f_C", "f_C_running_avg"), tuple(rows))


def _run_design(cfg: RunConfig) -> CsvTable:
    f = cfg.floats
    kind = cfg.enums["design"]
    if kind == "symmetric":
        res = design_symmetric_swap(f["d"], f["ab"], f["q"], f["ep2"], f["ep2p"])
    elif kind == "angled":
        res = design_angled_swap(_geometry(cfg), f["ep2"], f["ep2p"])
    else:
        res = design_antiswap(f["d"], f["ab"], f["q"], f["ep1"], f["ep2p"])
    header = ("ep1", "ep2", "ep1p", "ep2p", "v1", "v2", "kind", "feasible")
    row = (res.ep1, res.ep2, res.ep1p, res.ep2p, res.v1, res.v2, res.kind.value, res.feasible)
    return CsvTable(header, (row,))


def _run_cool(cfg: RunConfig) -> CsvTable:
    f = cfg.floats
    params = SymmetricSwapParams.from_geometry(f["d"], f["ab"], f["q"], f["vs"], f["ts"])
    sched = CoolingSchedule(f["f_amplitude"], f["duration"], cfg.enums["mode"])
    steps = cfg.ints["steps"] or None  # 0 = automatic step-size rule
    trace = cooling_protocol(params, sched, hbar=f["hbar"], steps=steps)
    rows = [
        (float(t), *map(float, pops))
        for t, pops in zip(trace.times, trace.populations)
    ]
    return CsvTable(("t", "pop_E1", "pop_E2", "pop_E3", "pop_E4"), tuple(rows))


def run(cfg: RunConfig, threads: int = 1) -> CsvTable:
    if cfg.command == "spectrum-sweep":
        return _run_sweep(cfg, threads, angled=False)
    if cfg.command == "angle-sweep":
        return _run_sweep(cfg, threads, angled=True)
    if cfg.command == "evolve":
        return _run_evolve(cfg)
    if cfg.command == "entropy":
        return _run_entropy(cfg)
    if cfg.command == "correlation":
        return _run_correlation(cfg)
    if cfg.command == "design":
        return _run_design(cfg)
    if cfg.command == "cool":
        return _run_cool(cfg)
    raise ValueError(f"unknown command {cfg.command!r}")
