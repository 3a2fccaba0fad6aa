"""Two-qubit electrostatic gate models.

Shared basis order throughout the package: (|1,1'>, |1,2'>, |2,1'>, |2,2'>),
where unprimed nodes belong to qubit A and primed nodes to qubit B.  The
A hopping ts12 couples rows (1,3) and (2,4); the B hopping ts1'2' couples
rows (1,2) and (3,4).

Covers Coulomb-term maps for the parallel and angled layouts, the 4x4
Hamiltonian builder, the closed-form eigen-system of the symmetric swap
configuration, the three equal-diagonal cases with their constraint
solvers, and the numeric angle-equation root finder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InfeasibleAngleError, InvalidGeometryError, NoRootError
from .linalg import Spectrum, _fix_phases

DISTANCE_FLOOR = 1e-12
ANGLE_FEASIBILITY_TOL = 1e-9
ANGLE_GRID_POINTS = 4096
ANGLE_BISECTION_TOL = 1e-13

CASE_DIAGONAL_PATTERN = {"I": (0, 0, 1, 1), "II": (0, 1, 1, 0), "III": (0, 1, 0, 1)}


@dataclass(frozen=True)
class Geometry:
    """Layout of two double-dot qubits: inter-qubit distance d, dot spacing
    a + b, orientation angle alpha of qubit B, and particle charge q."""

    d: float
    a: float
    b: float
    alpha: float
    q: float

    def __post_init__(self):
        if not (self.d > 0.0):
            raise InvalidGeometryError(f"d = {self.d} must be > 0")
        if self.a < 0.0 or self.b < 0.0 or not (self.a + self.b > 0.0):
            raise InvalidGeometryError("need a, b >= 0 with a + b > 0")
        if not (-math.pi < self.alpha <= math.pi):
            raise InvalidGeometryError(f"alpha = {self.alpha} outside (-pi, pi]")
        dd = angled_distances(self.d, self.a + self.b, self.alpha)
        if min(dd) < DISTANCE_FLOOR:
            raise InvalidGeometryError(f"inter-node distance underflow: {min(dd):.3e}")

    @property
    def ab(self) -> float:
        return self.a + self.b


@dataclass(frozen=True)
class CoulombTerms:
    """Diagonal Coulomb energies E_c(k,l') = q^2 / d_{kl'}."""

    ec11: float
    ec12: float
    ec21: float
    ec22: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.ec11, self.ec12, self.ec21, self.ec22)


@dataclass(frozen=True)
class TwoQubitSystem:
    ep1: float
    ep2: float
    ep1p: float
    ep2p: float
    ts12: complex
    ts1p2p: complex
    coulomb: CoulombTerms


@dataclass(frozen=True)
class SymmetricSwapParams:
    """Parallel double dots, common potential bottom vs, equal hoppings ts,
    near-pair Coulomb ec1 = q^2/d1 and diagonal-pair ec2 = q^2/sqrt(d1^2+(a+b)^2)."""

    vs: float
    ts: float
    ec1: float
    ec2: float

    @classmethod
    def from_geometry(cls, d1: float, ab: float, q: float, vs: float, ts: float):
        c = coulomb_parallel(d1, ab, q)
        return cls(vs=vs, ts=ts, ec1=c.ec11, ec2=c.ec12)


def coulomb_parallel(d1: float, ab: float, q: float) -> CoulombTerms:
    """Parallel layout: d11' = d22' = d1, d12' = d21' = sqrt(d1^2 + (a+b)^2)."""
    if not (d1 > 0.0) or not (ab > 0.0):
        raise InvalidGeometryError("need d1 > 0 and a + b > 0")
    near = q * q / d1
    far = q * q / math.hypot(d1, ab)
    return CoulombTerms(ec11=near, ec12=far, ec21=far, ec22=near)


def angled_distances(d: float, ab: float, alpha: float) -> tuple[float, float, float, float]:
    """(d11', d12', d21', d22') for qubit B rotated by alpha.

    Node layout realizing these: A nodes at (0, -ab) and (0, 0); B node 1'
    at (d, 0) and node 2' at (d + ab*cos(alpha), ab*sin(alpha)).
    """
    base = d + math.cos(alpha) * ab
    s = math.sin(alpha)
    d11 = math.hypot(d, ab)
    d12 = math.hypot(base, (1.0 + s) * ab)
    d21 = d
    d22 = math.hypot(base, s * ab)
    return d11, d12, d21, d22


def coulomb_angled(g: Geometry) -> CoulombTerms:
    dd = angled_distances(g.d, g.ab, g.alpha)
    if min(dd) < DISTANCE_FLOOR:
        raise InvalidGeometryError(f"inter-node distance underflow: {min(dd):.3e}")
    q2 = g.q * g.q
    return CoulombTerms(*(q2 / x for x in dd))


def build_two_qubit_hamiltonian(sys: TwoQubitSystem) -> np.ndarray:
    c = sys.coulomb
    h = np.diag(
        [
            sys.ep1 + sys.ep1p + c.ec11,
            sys.ep1 + sys.ep2p + c.ec12,
            sys.ep2 + sys.ep1p + c.ec21,
            sys.ep2 + sys.ep2p + c.ec22,
        ]
    ).astype(complex)
    tb = complex(sys.ts1p2p)
    ta = complex(sys.ts12)
    for i, j in ((0, 1), (2, 3)):
        h[i, j] = tb
        h[j, i] = np.conj(tb)
    for i, j in ((0, 2), (1, 3)):
        h[i, j] = ta
        h[j, i] = np.conj(ta)
    return h


@dataclass(frozen=True)
class LabeledSpectrum:
    """Ascending spectrum plus the level labels (E1..E4) each slot carries."""

    spectrum: Spectrum
    labels: tuple[str, ...]
    energies: dict[str, float]
    vectors: dict[str, np.ndarray]

    def energy(self, label: str) -> float:
        return self.energies[label]

    def vector(self, label: str) -> np.ndarray:
        return self.vectors[label]


def _labeled(energies: dict[str, float], vectors: dict[str, np.ndarray]) -> LabeledSpectrum:
    labels = tuple(sorted(energies, key=lambda k: (energies[k], k)))
    w = np.array([energies[k] for k in labels])
    v = np.column_stack([vectors[k] for k in labels]).astype(complex)
    return LabeledSpectrum(Spectrum(w, _fix_phases(v)), labels, dict(energies), dict(vectors))


@dataclass(frozen=True)
class SymmetricSwapSpectrum:
    labeled: LabeledSpectrum
    c: float

    @property
    def spectrum(self) -> Spectrum:
        return self.labeled.spectrum


def swap_entanglement_coefficient(ts: float, ec1: float, ec2: float) -> float:
    """Relative weight c of the anticorrelated components in |E4>.

    c = 4 ts / ((ec1 - ec2) + sqrt((ec1 - ec2)^2 + 16 ts^2)); c -> 1 when the
    qubits decouple (ec1 = ec2, product states) and c -> 0 as ts -> 0
    (maximal entanglement).
    """
    delta = ec1 - ec2
    s = math.hypot(delta, 4.0 * ts)
    denom = delta + s
    if denom == 0.0:
        return 1.0  # fully degenerate ts = 0, ec1 = ec2 limit
    return 4.0 * ts / denom


def symmetric_swap_spectrum(p: SymmetricSwapParams) -> SymmetricSwapSpectrum:
    """Closed-form eigen-system of the symmetric swap Hamiltonian.

    E1 = ec1 + 2 vs with |E1> = (-1,0,0,1)/sqrt2,
    E2 = ec2 + 2 vs with |E2> = (0,-1,1,0)/sqrt2,
    E3/E4 = (ec1+ec2 -/+ sqrt((ec1-ec2)^2+16 ts^2))/2 + 2 vs with the
    (c,-1,-1,c) / (1,c,c,1) pair.
    """
    s = math.hypot(p.ec1 - p.ec2, 4.0 * p.ts)
    c = swap_entanglement_coefficient(p.ts, p.ec1, p.ec2)
    energies = {
        "E1": p.ec1 + 2.0 * p.vs,
        "E2": p.ec2 + 2.0 * p.vs,
        "E3": 0.5 * (p.ec1 + p.ec2 - s) + 2.0 * p.vs,
        "E4": 0.5 * (p.ec1 + p.ec2 + s) + 2.0 * p.vs,
    }
    n34 = math.sqrt(2.0 + 2.0 * c * c)
    vectors = {
        "E1": np.array([-1, 0, 0, 1], dtype=complex) / math.sqrt(2.0),
        "E2": np.array([0, -1, 1, 0], dtype=complex) / math.sqrt(2.0),
        "E3": np.array([c, -1, -1, c], dtype=complex) / n34,
        "E4": np.array([1, c, c, 1], dtype=complex) / n34,
    }
    return SymmetricSwapSpectrum(_labeled(energies, vectors), c)


def symmetric_swap_system(p: SymmetricSwapParams) -> TwoQubitSystem:
    return TwoQubitSystem(
        ep1=p.vs,
        ep2=p.vs,
        ep1p=p.vs,
        ep2p=p.vs,
        ts12=complex(p.ts),
        ts1p2p=complex(p.ts),
        coulomb=CoulombTerms(ec11=p.ec1, ec12=p.ec2, ec21=p.ec2, ec22=p.ec1),
    )


@dataclass(frozen=True)
class CaseParams:
    """Equal-diagonal case: effective energies (u, u1), hoppings, and the
    on-site potentials split into caller-chosen and constraint-derived ones."""

    case_id: str
    u: float
    u1: float
    ts1: float = 1.0
    ts2: float = 1.0
    free_params: dict = field(default_factory=dict)
    derived_params: dict = field(default_factory=dict)

    def potentials(self) -> dict:
        return {**self.free_params, **self.derived_params}


def case_constraint_residual(case_id: str, d: float, ab: float, alpha: float) -> float:
    """Residual (per unit q^2) of the case's Coulomb-difference equation.

    Case I requires 1/d - 1/d22' = 1/d11' - 1/d12'; case III requires
    1/d12' - 1/d22' = 1/d11' - 1/d.  Rearranged, both demand
    1/d11' + 1/d22' = 1/d12' + 1/d21', so the two residuals coincide up to
    sign grouping.  Case II has no angle constraint.
    """
    if case_id == "II":
        return 0.0
    d11, d12, d21, d22 = angled_distances(d, ab, alpha)
    if case_id == "I":
        return (1.0 / d21 - 1.0 / d22) - (1.0 / d11 - 1.0 / d12)
    if case_id == "III":
        return (1.0 / d12 - 1.0 / d22) - (1.0 / d11 - 1.0 / d21)
    raise ValueError(f"unknown case {case_id!r}")


def case_solver(case_id: str, g: Geometry, free_params: dict) -> CaseParams:
    """Solve the case's on-site potential constraints at geometry ``g``.

    ``free_params`` must supply exactly the case's unconstrained potentials:
    case I: ep1, ep2, ep1p; case II: ep1, ep1p; case III: ep1, ep1p, ep2p.
    Hoppings are pinned to 1.
    """
    q2 = g.q * g.q
    resid = case_constraint_residual(case_id, g.d, g.ab, g.alpha)
    if abs(resid) * q2 > ANGLE_FEASIBILITY_TOL:
        raise InfeasibleAngleError(
            f"case {case_id} constraint residual {resid * q2:.3e} at alpha = {g.alpha!r}"
        )
    ec = coulomb_angled(g)
    if case_id == "I":
        ep1, ep2, ep1p = (free_params[k] for k in ("ep1", "ep2", "ep1p"))
        ep2p = ep1p + ec.ec21 - ec.ec22
        u = ep1 + ep1p + ec.ec11
        u1 = ep2 + ep1p + ec.ec21
        free = {"ep1": ep1, "ep2": ep2, "ep1p": ep1p}
        derived = {"ep2p": ep2p}
    elif case_id == "II":
        ep1, ep1p = (free_params[k] for k in ("ep1", "ep1p"))
        # From ep1+ep1p+ec11 = ep2+ep2p+ec22 and ep1+ep2p+ec12 = ep2+ep1p+ec21.
        ep2 = ep1 + 0.5 * (ec.ec11 - ec.ec22 + ec.ec12 - ec.ec21)
        ep2p = ep1p + 0.5 * (ec.ec11 - ec.ec22 - ec.ec12 + ec.ec21)
        u = ep1 + ep1p + ec.ec11
        u1 = ep2 + ep1p + ec.ec21
        free = {"ep1": ep1, "ep1p": ep1p}
        derived = {"ep2": ep2, "ep2p": ep2p}
    elif case_id == "III":
        ep1, ep1p, ep2p = (free_params[k] for k in ("ep1", "ep1p", "ep2p"))
        ep2 = ep1 + ec.ec11 - ec.ec21
        u = ep1 + ep1p + ec.ec11
        u1 = ep1 + ep2p + ec.ec12
        free = {"ep1": ep1, "ep1p": ep1p, "ep2p": ep2p}
        derived = {"ep2": ep2}
    else:
        raise ValueError(f"unknown case {case_id!r}")
    return CaseParams(case_id, u, u1, 1.0, 1.0, free, derived)


def case_system(case_id: str, g: Geometry, cp: CaseParams) -> TwoQubitSystem:
    """Assemble the physical system realizing a solved case at geometry g."""
    pot = cp.potentials()
    return TwoQubitSystem(
        ep1=pot["ep1"],
        ep2=pot["ep2"],
        ep1p=pot["ep1p"],
        ep2p=pot["ep2p"],
        ts12=complex(cp.ts1),
        ts1p2p=complex(cp.ts2),
        coulomb=coulomb_angled(g),
    )


def case_hamiltonian(cp: CaseParams) -> np.ndarray:
    """Idealized case matrix: diagonal from (u, u1) per pattern, hoppings
    ts1 at (1,3)/(2,4) and ts2 at (1,2)/(3,4)."""
    pattern = CASE_DIAGONAL_PATTERN[cp.case_id]
    diag = [cp.u if k == 0 else cp.u1 for k in pattern]
    h = np.diag(diag).astype(complex)
    h[0, 1] = h[1, 0] = h[2, 3] = h[3, 2] = cp.ts2
    h[0, 2] = h[2, 0] = h[1, 3] = h[3, 1] = cp.ts1
    return h


def _two_level_vector(offdiag: float, lam_minus_a: float) -> np.ndarray:
    """Eigenvector (t, lambda - a) of [[a, t], [t, b]], canonical when t = 0."""
    if offdiag == 0.0:
        return np.array([1.0, 0.0]) if lam_minus_a == 0.0 else np.array([0.0, 1.0])
    v = np.array([offdiag, lam_minus_a])
    return v / np.linalg.norm(v)


def case_spectrum(cp: CaseParams) -> LabeledSpectrum:
    """Closed-form eigen-system of the case Hamiltonian.

    Cases I and II are served at unit hoppings; case III accepts arbitrary
    (ts1, ts2), where the eigenvectors depend on ts2 only.
    """
    u, u1 = cp.u, cp.u1
    if cp.case_id in ("I", "II") and not (cp.ts1 == 1.0 and cp.ts2 == 1.0):
        raise ValueError(f"case {cp.case_id} closed forms require unit hoppings")
    if cp.case_id == "I":
        dd = math.hypot(u - u1, 2.0)
        energies = {
            "E1": 0.5 * (u + u1 - 2.0 - dd),
            "E2": 0.5 * (u + u1 + 2.0 - dd),
            "E3": 0.5 * (u + u1 - 2.0 + dd),
            "E4": 0.5 * (u + u1 + 2.0 + dd),
        }
        xm = 0.5 * (dd + u1 - u)
        xp = 0.5 * (dd + u - u1)
        vectors = {
            "E1": np.array([xm, -xm, -1.0, 1.0]),
            "E2": np.array([-xm, -xm, 1.0, 1.0]),
            "E3": np.array([-xp, xp, -1.0, 1.0]),
            "E4": np.array([xp, xp, 1.0, 1.0]),
        }
    elif cp.case_id == "II":
        s16 = math.sqrt(16.0 + (u - u1) ** 2)
        energies = {
            "E1": u,
            "E2": u1,
            "E3": 0.5 * (u + u1 - s16),
            "E4": 0.5 * (u + u1 + s16),
        }
        y3 = -0.25 * (s16 + u - u1)
        y4 = 0.25 * (s16 + u1 - u)
        vectors = {
            "E1": np.array([-1.0, 0.0, 0.0, 1.0]),
            "E2": np.array([0.0, -1.0, 1.0, 0.0]),
            "E3": np.array([1.0, y3, y3, 1.0]),
            "E4": np.array([1.0, y4, y4, 1.0]),
        }
    elif cp.case_id == "III":
        t1, t2 = cp.ts1, cp.ts2
        s = math.hypot(u - u1, 2.0 * t2)
        energies = {
            "E1": 0.5 * (u + u1 - 2.0 * t1 - s),
            "E2": 0.5 * (u + u1 + 2.0 * t1 - s),
            "E3": 0.5 * (u + u1 - 2.0 * t1 + s),
            "E4": 0.5 * (u + u1 + 2.0 * t1 + s),
        }
        # Blocks over (1,3) +/- and (2,4) +/- combos; ts1 shifts energies only.
        # Orientations follow the published component forms (E2/E3 flipped
        # relative to the raw block solution).
        bm = _two_level_vector(t2, 0.5 * (u1 - u - s))
        bp = _two_level_vector(t2, 0.5 * (u1 - u + s))
        def expand(b, sector_sign, orient):
            return orient * np.array([b[0], b[1], sector_sign * b[0], sector_sign * b[1]])
        vectors = {
            "E1": expand(bm, -1.0, +1.0),
            "E2": expand(bm, +1.0, -1.0),
            "E3": expand(bp, -1.0, -1.0),
            "E4": expand(bp, +1.0, +1.0),
        }
    else:
        raise ValueError(f"unknown case {cp.case_id!r}")
    vectors = {k: (v / np.linalg.norm(v)).astype(complex) for k, v in vectors.items()}
    return _labeled(energies, vectors)


def angle_roots(case_id: str, d: float, ab: float) -> list[float]:
    """All alpha in (-pi, pi] solving the case's constraint equation.

    Sign-change bracketing on a uniform grid, then bisection; independent of
    q (the charge cancels).
    """
    if case_id not in ("I", "III"):
        raise ValueError("angle constraint exists for cases I and III only")
    if not (d > 0.0) or not (ab > 0.0):
        raise InvalidGeometryError("need d > 0 and a + b > 0")

    def f(a: float) -> float:
        return case_constraint_residual(case_id, d, ab, a)

    grid = np.linspace(-math.pi, math.pi, ANGLE_GRID_POINTS + 1)
    vals = np.array([f(a) for a in grid])
    roots: list[float] = []
    for i in range(ANGLE_GRID_POINTS):
        lo, hi = float(grid[i]), float(grid[i + 1])
        flo, fhi = float(vals[i]), float(vals[i + 1])
        if flo == 0.0:
            if lo > -math.pi:
                roots.append(lo)
            continue
        if flo * fhi >= 0.0:
            continue
        while hi - lo > ANGLE_BISECTION_TOL:
            mid = 0.5 * (lo + hi)
            fm = f(mid)
            if fm == 0.0:
                lo = hi = mid
                break
            if flo * fm < 0.0:
                hi = mid
            else:
                lo, flo = mid, fm
        roots.append(0.5 * (lo + hi))
    if vals[-1] == 0.0:
        roots.append(float(grid[-1]))
    if not roots:
        raise NoRootError(f"case {case_id}: no sign change for d = {d}, a+b = {ab}")
    return roots


def case1_taylor_sin_alpha(d: float, ab: float) -> float:
    """Small-(a+b)/d approximation sin(alpha) for the case I/III constraint:
    (d^2/(a+b)^2) * (1 - (a+b)^2/(2 d^2) - d/sqrt(d^2+(a+b)^2)).

    The bracket is a near-cancellation, so the dropped second-order square
    root terms matter; accuracy degrades quickly with (a+b)/d.
    """
    return (d * d / (ab * ab)) * (1.0 - 0.5 * (ab / d) ** 2 - d / math.hypot(d, ab))
