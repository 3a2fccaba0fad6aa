"""Verbatim transcriptions of published closed-form expressions, kept out
of the production code paths.

Each function reproduces a printed formula as faithfully as its source
allows (including suspected typos), so the test harness can check it
against the package's oracle routines and report it as CONFIRMED or
FALSIFIED with a counterexample.  Production code never calls these.

All expressions are evaluated in natural units (hbar = 1), which is where
the printed forms are unambiguous: several of them multiply by hbar where
a division is dimensionally required, and at hbar = 1 the two readings
coincide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


def single_qubit_hopping_u_printed(tsr: float, tsi: float, dt: float) -> np.ndarray:
    """Hopping-dominated single-qubit propagator (ep1 = ep2 = 0) written
    with cosh/sinh of sqrt(-integral |ts|^2): transcribed with integrals of
    a constant hopping over dt.  The printed radicals mix single and squared
    integrals; read here as sqrt(-(|ts| dt)^2) so ch/sh become cos/sin."""
    ts = complex(tsr, tsi)
    rad = np.sqrt(complex(-(abs(ts) * dt) ** 2))
    ch = np.cosh(rad)
    denom = np.sqrt(complex(-((tsi**2 + tsr) ** 2) * dt**2))
    if denom == 0:
        off12 = off21 = 0.0
    else:
        off12 = (np.conj(ts) * dt) * np.sinh(rad) / denom
        off21 = (-ts * dt) * np.sinh(rad) / denom
    return np.array([[ch, off12], [off21, ch]])


def qubit_eigvec_printed(ep1: float, ep2: float, tsr: float, tsi: float, which: int) -> np.ndarray:
    """Printed single-qubit eigenvectors (unnormalized): the radicand halves
    rather than quarters the squared splitting, and the two levels carry
    different hopping conjugations."""
    diff = ep2 - ep1
    rad = math.sqrt(0.5 * diff * diff + tsr * tsr + tsi * tsi)
    if which == 1:
        top = (diff + rad) / complex(tsi, -tsr)  # -i tsr + tsi
        return np.array([top, -1.0], dtype=complex)
    top = (-diff + rad) / complex(tsr, -tsi)
    return np.array([top, 1.0], dtype=complex)


def reduced_entropy_printed(rho22: float, rho12_r: float, rho12_i: float) -> float:
    """Entanglement entropy of a 2x2 reduction from the printed closed form
    (published with the opposite sign; mapped through S = -printed)."""
    off2 = rho12_r**2 + rho12_i**2
    r = math.sqrt(4.0 * off2 + (1.0 - 2.0 * rho22) ** 2)
    lo = 0.5 * (1.0 - r)
    hi = 0.5 * (1.0 + r)
    first = (-1.0 - 4.0 * off2 + r - 4.0 * (-1.0 + rho22) * rho22) * math.log(lo)
    second = (4.0 * off2 + r + (1.0 - 2.0 * rho22) ** 2) * math.log(hi)
    return -((first + second) / (2.0 * r))


def sb_entropy_printed(q22: float, tr1: float, tr2: float) -> float:
    """Entanglement entropy S_B(t) of the symmetric-configuration evolution
    started in (-1,0,0,1)/sqrt2, from the printed log/arctanh closed form
    (sign-mapped as in reduced_entropy_printed); arguments are the
    integrated q22 and hopping parameters."""
    tdiff = tr1 - tr2
    r2 = q22 * q22 + tdiff * tdiff
    ang = math.sqrt(r2)
    cos2 = math.cos(2.0 * ang)
    sin_sq = math.sin(ang) ** 2
    term1 = q22 * tdiff * cos2 + q22 * q22 + q22 * (tr2 - tr1) + tdiff * tdiff
    term2 = q22 * (tr2 - tr1) * cos2 + q22 * q22 + q22 * (tr1 - tr2) + tdiff * tdiff
    atanh_arg = q22 * tdiff * (cos2 - 1.0) / r2
    atanh_arg = max(-1.0 + 1e-15, min(1.0 - 1e-15, atanh_arg))
    printed = -0.5 * math.log(4.0) + 0.5 * (
        math.log(term1)
        + math.log(term2)
        - 2.0 * math.log(r2)
        + (4.0 * q22 * (tr2 - tr1) * sin_sq / r2) * math.atanh(atanh_arg)
    )
    return -printed


def _sq(x: float) -> float:
    return math.sqrt(x)


def case1_correlation_printed(u, u1, c, phi, e, t):
    """Case pattern (U,U,U1,U1): printed correlation function; the leading
    phase factor cancels against the trailing (cos + i sin) factor."""
    c1, c2, c3, c4 = c
    p1, p2, p3, p4 = phi
    e1, e2, e3, e4 = e
    d2 = 4.0 + (u - u1) ** 2
    sq = _sq(d2)
    cross = _sq(4.0 + (u - u1) * (u + sq - u1)) * _sq(4.0 - (u - u1) * (-u + sq + u1))
    total_phase = p1 + p2 + p3 + p4 + (e1 + e2 + e3 + e4) * t
    inner = (
        c1 * c2 * d2 * (u - u1) * np.cos(p1 - p2 - e1 * t + e2 * t)
        + c2 * c3 * sq * cross * np.cos(p2 - p3 - e2 * t + e3 * t)
        + c1 * c4 * sq * cross * np.cos(p1 - p4 - e1 * t + e4 * t)
        - c3 * c4 * d2 * (u - u1) * np.cos(p3 - p4 - e3 * t + e4 * t)
    )
    val = (
        2.0
        * np.exp(-1j * total_phase)
        * inner
        * (np.cos(total_phase) + 1j * np.sin(total_phase))
        / d2**1.5
    )
    return val


def case1_p11_printed(u, u1, c, phi, e, t):
    c1, c2, c3, c4 = c
    p1, p2, p3, p4 = phi
    e1, e2, e3, e4 = e
    d2 = 4.0 + (u - u1) ** 2
    sq = _sq(d2)
    plus = 4.0 + (u - u1) * (u + sq - u1)
    minus = 4.0 - (u - u1) * (-u + sq + u1)
    val = ((c3**2 + c4**2) * plus + c1**2 * minus + c2**2 * minus) / (4.0 * d2)
    val -= c1 * c2 * (-u + sq + u1) * np.cos(p1 - p2 + (-e1 + e2) * t) / (2.0 * sq)
    val -= (
        2.0
        * c1
        * (c3 * np.cos(p1 - p3 - e1 * t + e3 * t) - c4 * np.cos(p1 - p4 - e1 * t + e4 * t))
        / (_sq(plus) * _sq(minus))
    )
    val += (
        2.0
        * c2
        * (c3 * np.cos(p2 - p3 - e2 * t + e3 * t) - c4 * np.cos(p2 - p4 - e2 * t + e4 * t))
        / (_sq(plus) * _sq(2.0 + 0.5 * (-u + sq + u1) ** 2))
    )
    val -= c3 * c4 * (u + sq - u1) * np.cos(p3 - p4 + (-e3 + e4) * t) / (2.0 * sq)
    return val


def case2_correlation_printed(u, u1, c, phi, e, t):
    c1, c2, c3, c4 = c
    p3, p4 = phi[2], phi[3]
    e3, e4 = e[2], e[3]
    d2 = (u - u1) ** 2 + 16.0
    sq = _sq(d2)
    val = d2 * ((c2**2 - c1**2) * (-sq) - (c3**2 - c4**2) * (u - u1))
    val += (
        2.0
        * c3
        * c4
        * _sq((u - u1) * (sq + u - u1) + 16.0)
        * _sq(16.0 - (u - u1) * (sq - u + u1))
        * sq
        * np.cos((-e3 + e4) * t + p3 - p4)
    )
    return val / d2**1.5


def case2_p11_printed(u, u1, c, phi, e, t):
    c1, c2, c3, c4 = c
    p1, p3, p4 = phi[0], phi[2], phi[3]
    e1, e3, e4 = e[0], e[2], e[3]
    d2 = 16.0 + (u - u1) ** 2
    sq = _sq(d2)
    plus = 16.0 + (u - u1) * (u + sq - u1)
    minus = 16.0 - (u - u1) * (-u + sq + u1)
    val = (
        2.0 * c1**2 * sq
        + c4**2 * (u + sq - u1)
        + c3**2 * (-u + sq + u1)
        - 2.0
        * math.sqrt(2.0)
        * c1
        * (
            c3 * _sq(minus) * np.cos(p1 - p3 - e1 * t + e3 * t)
            + c4 * _sq(plus) * np.cos(p1 - p4 - e1 * t + e4 * t)
        )
    ) / (4.0 * sq)
    val += 8.0 * c3 * c4 * np.cos(p3 - p4 + (-e3 + e4) * t) / (_sq(plus) * _sq(minus))
    return val


def case2_p22_printed(u, u1, c, phi, e, t):
    """Printed p(2,2') for the (U,U1,U1,U) pattern, including the stray
    1/(15 - 2U + 2U1) and 136/(15 - 2U + 2U1) factors as published."""
    c1, c2, c3, c4 = c
    p1, p3, p4 = phi[0], phi[2], phi[3]
    e1, e3, e4 = e[0], e[2], e[3]
    d2 = 16.0 + (u - u1) ** 2
    sq = _sq(d2)
    plus = 16.0 + (u - u1) * (u + sq - u1)
    root16 = _sq(16.0 - u + sq + u1)
    val = c1 * c3 * (-u + sq + u1) * np.cos(p1 - p3 - e1 * t + e3 * t) / root16
    val += 0.25 * (
        2.0 * c1**2
        + c4**2
        + c4**2 * (u - u1) / sq
        + 2.0
        * c3**2
        * (
            -8.0
            - u
            + sq
            + 16.0 * sq / (-15.0 + 2.0 * u - 2.0 * u1)
            + u1
            + 136.0 / (15.0 - 2.0 * u + 2.0 * u1)
        )
        + 2.0
        * math.sqrt(2.0)
        * c4
        * (
            c1 * (u + sq - u1) * np.cos(p1 - p4 - e1 * t + e4 * t)
            + 16.0 * c3 * np.cos(p3 - p4 - e3 * t + e4 * t) / root16
        )
        / _sq(plus)
    )
    return val


def case3_correlation_printed(u, u1, c, phi, e, t):
    c1, c2, c3, c4 = c
    p1, p2, p3, p4 = phi
    e1, e2, e3, e4 = e
    d2 = (u - u1) ** 2 + 4.0
    sq = _sq(d2)
    cross = _sq((u - u1) * (sq + u - u1) + 4.0) * _sq(4.0 - (u - u1) * (sq - u + u1))
    val = 2.0 * (
        c1 * c2 * sq * (u - u1) * np.cos((-e1 + e2) * t + p1 - p2)
        + c4
        * (
            c1 * cross * np.cos((-e1 + e4) * t + p1 - p4)
            + c3 * sq * (u1 - u) * np.cos((-e3 + e4) * t + p3 - p4)
        )
        + c2 * c3 * cross * np.cos((-e2 + e3) * t + p2 - p3)
    )
    return val / d2


def case3_p11_printed(u, u1, ts2, c, phi, e, t):
    c1, c2, c3, c4 = c
    p1, p2, p3, p4 = phi
    e1, e2, e3, e4 = e
    t2 = ts2
    d2 = 4.0 * t2 * t2 + (u - u1) ** 2
    sq = _sq(d2)
    f_plus = 8.0 * t2 * t2 + 2.0 * (u + sq - u1) ** 2
    f_minus = 8.0 * t2 * t2 + 2.0 * (-u + sq + u1) ** 2
    g_plus = t2 * t2 * (4.0 + (u + sq - u1) ** 2)
    val = 0.25 * (c2**2 + c3**2 + c4**2 * t2 * t2 * (2.0 + 2.0 * t2 * t2 + (u - u1) ** 2) / d2)
    val += (
        -(c2**2 - c3**2 - c4**2 * t2 * t2) * (u - u1) + c1**2 * (-u + sq + u1)
    ) / (4.0 * sq)
    val -= c1 * c2 * (-u + sq + u1) * np.cos(p1 - p2 + (-e1 + e2) * t) / (2.0 * sq)
    val -= c1 * c3 * _sq(f_plus) * _sq(f_minus) * np.cos(p1 - p3 + (-e1 + e3) * t) / (8.0 * d2)
    val += c2 * c3 * _sq(f_plus) * _sq(f_minus) * np.cos(p2 - p3 + (-e2 + e3) * t) / (8.0 * d2)
    val += (
        c1 * c4 * _sq(g_plus) * _sq(f_minus) * np.cos(p1 - p4 + (-e1 + e4) * t)
        / (4.0 * math.sqrt(2.0) * d2)
    )
    val -= (
        c2 * c4 * _sq(g_plus) * _sq(f_minus) * np.cos(p2 - p4 + (-e2 + e4) * t)
        / (4.0 * math.sqrt(2.0) * d2)
    )
    val -= (
        c3 * c4 * _sq(g_plus) * _sq(f_plus) * np.cos(p3 - p4 + (-e3 + e4) * t)
        / (4.0 * math.sqrt(2.0) * d2)
    )
    return val


def case3_p12_printed(u, u1, ts2, c, phi, e, t):
    c1, c2, c3, c4 = c
    p1, p2, p3, p4 = phi
    e1, e2, e3, e4 = e
    t2 = ts2
    d2 = 4.0 * t2 * t2 + (u - u1) ** 2
    sq = _sq(d2)
    plus = 4.0 * t2 * t2 + (u - u1) * (u + sq - u1)
    minus = 4.0 * t2 * t2 - (u - u1) * (-u + sq + u1)
    mixed = t2 * t2 * (2.0 + 2.0 * t2 * t2 + (u - u1) * (u + sq - u1))
    val = 2.0 * c4**2 / (4.0 + (u + sq - u1) ** 2)
    val += 4.0 * c3**2 * t2 * t2 / (8.0 * t2 * t2 + 2.0 * (u + sq - u1) ** 2)
    val += (c1**2 + c2**2) * t2 * t2 / minus
    val -= 2.0 * c1 * c2 * t2 * t2 * np.cos(p1 - p2 + (-e1 + e2) * t) / minus
    val += 2.0 * c1 * c3 * t2 * t2 * np.cos(p1 - p3 + (-e1 + e3) * t) / (_sq(plus) * _sq(minus))
    val -= 2.0 * c2 * c3 * t2 * t2 * np.cos(p2 - p3 + (-e2 + e3) * t) / (_sq(plus) * _sq(minus))
    val -= 2.0 * c1 * c4 * t2 * t2 * np.cos(p1 - p4 + (-e1 + e4) * t) / (_sq(mixed) * _sq(minus))
    val += 2.0 * c2 * c4 * t2 * t2 * np.cos(p2 - p4 + (-e2 + e4) * t) / (_sq(mixed) * _sq(minus))
    val -= 2.0 * c3 * c4 * t2 * t2 * np.cos(p3 - p4 + (-e3 + e4) * t) / (_sq(mixed) * _sq(plus))
    return val


@dataclass(frozen=True)
class ConjectureResult:
    name: str
    samples: int
    max_deviation: float
    tolerance: float
    counterexample: str | None

    @property
    def confirmed(self) -> bool:
        return self.max_deviation < self.tolerance

    def report_line(self) -> str:
        verdict = "CONFIRMED" if self.confirmed else "FALSIFIED"
        line = (
            f"{verdict:9s} {self.name}: max deviation {self.max_deviation:.3e} "
            f"over {self.samples} samples (tol {self.tolerance:.0e})"
        )
        if not self.confirmed and self.counterexample:
            line += f"; counterexample {self.counterexample}"
        return line
