"""Quasi-classical gate design over logical occupation probabilities.

The phenomenological energy drops kinetic terms and treats the occupation
probabilities pA1 (qubit A at node 1) and pB1' (qubit B at node 1') as
classical weights.  The energy is bilinear in (pA1, pB1'), so its extrema
over the unit square sit at the four logical corners; a designer solves the
two corner-equality constraints for the free potentials and checks which
corner pair is strictly minimal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .entanglement import GateKind
from .gate import CoulombTerms, Geometry, coulomb_angled

STRICT_MINIMUM_TOL = 1e-10

CORNERS = ((0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0))


@dataclass(frozen=True)
class OnSitePotentials:
    ep1: float
    ep2: float
    ep1p: float
    ep2p: float


@dataclass(frozen=True)
class DesignResult:
    ep1: float
    ep2: float
    ep1p: float
    ep2p: float
    v1: float  # correlated corners (0,0) and (1,1)
    v2: float  # anticorrelated corners (1,0) and (0,1)
    kind: GateKind
    feasible: bool

    @property
    def potentials(self) -> OnSitePotentials:
        return OnSitePotentials(self.ep1, self.ep2, self.ep1p, self.ep2p)


def phenomenological_energy(
    pa1: float, pb1: float, pot: OnSitePotentials, coulomb: CoulombTerms
) -> float:
    """Bilinear energy of logical point (pa1, pb1); Coulomb terms weight the
    product occupancies (1,1') -> ec11, (1,2') -> ec12, (2,1') -> ec21,
    (2,2') -> ec22."""
    if not (0.0 <= pa1 <= 1.0 and 0.0 <= pb1 <= 1.0):
        raise ValueError("occupation probabilities must lie in [0, 1]")
    qa1, qb1 = 1.0 - pa1, 1.0 - pb1
    return (
        pa1 * pot.ep1
        + qa1 * pot.ep2
        + pb1 * pot.ep1p
        + qb1 * pot.ep2p
        + pa1 * pb1 * coulomb.ec11
        + pa1 * qb1 * coulomb.ec12
        + qa1 * pb1 * coulomb.ec21
        + qa1 * qb1 * coulomb.ec22
    )


@dataclass(frozen=True)
class CornerAudit:
    energies: dict
    argmin: tuple


def corner_audit(pot: OnSitePotentials, coulomb: CoulombTerms) -> CornerAudit:
    """Energies of the four logical corners and the set of minima (all
    corners within STRICT_MINIMUM_TOL of the lowest)."""
    energies = {c: phenomenological_energy(c[0], c[1], pot, coulomb) for c in CORNERS}
    lowest = min(energies.values())
    argmin = tuple(c for c in CORNERS if energies[c] <= lowest + STRICT_MINIMUM_TOL)
    return CornerAudit(energies=energies, argmin=argmin)


def _result(pot: OnSitePotentials, coulomb: CoulombTerms, kind: GateKind, feasible) -> DesignResult:
    e = {c: phenomenological_energy(c[0], c[1], pot, coulomb) for c in CORNERS}
    v1 = 0.5 * (e[(0.0, 0.0)] + e[(1.0, 1.0)])
    v2 = 0.5 * (e[(1.0, 0.0)] + e[(0.0, 1.0)])
    return DesignResult(
        ep1=pot.ep1,
        ep2=pot.ep2,
        ep1p=pot.ep1p,
        ep2p=pot.ep2p,
        v1=v1,
        v2=v2,
        kind=kind,
        feasible=bool(feasible(v1, v2)),
    )


def parallel_design_coulomb(d1: float, ab: float, q: float) -> CoulombTerms:
    near = q * q / d1
    far = q * q / math.hypot(d1, ab)
    return CoulombTerms(ec11=near, ec12=far, ec21=far, ec22=near)


def design_symmetric_swap(
    d1: float, ab: float, q: float, ep2: float = 1.0, ep2p: float = 1.0
) -> DesignResult:
    """Parallel-layout swap design with (ep2, ep2') pinned.

    Imposing H(1,0) = H(0,1) and H(0,0) = H(1,1) forces ep1 = ep2 and
    ep1' = ep2'; the anticorrelated corners are lower by exactly
    q^2/d1 - q^2/sqrt(d1^2 + (a+b)^2), so any q != 0 is feasible.
    """
    coulomb = parallel_design_coulomb(d1, ab, q)
    pot = OnSitePotentials(ep1=ep2, ep2=ep2, ep1p=ep2p, ep2p=ep2p)
    return _result(pot, coulomb, GateKind.SWAP, lambda v1, v2: v1 - v2 > STRICT_MINIMUM_TOL)


def angled_design_coulomb(g: Geometry) -> CoulombTerms:
    """Coulomb map of the angled quasi-classical design: the corner (0,1)
    carries the same q^2/sqrt(d^2+(a+b)^2) term as (1,1)."""
    ec = coulomb_angled(g)
    return CoulombTerms(ec11=ec.ec11, ec12=ec.ec12, ec21=ec.ec11, ec22=ec.ec22)


def design_angled_swap(g: Geometry, ep2: float = 1.0, ep2p: float = 1.0) -> DesignResult:
    """Angle-driven swap design with (ep2, ep2') pinned.

    Solves H(1,0) = H(0,1) and H(0,0) = H(1,1) for (ep1, ep1').  Accepted
    (feasible) only inside the angular window sin(alpha) > 0 and when the
    anticorrelated corners are strictly lower by direct corner evaluation;
    direct evaluation gives v1 - v2 = (ec22 - ec12)/2, positive on the wider
    window sin(alpha) > -1/2, so the sin(alpha) > 0 rule is the binding one
    near the lower edge.
    """
    c = angled_design_coulomb(g)
    ep1 = 0.5 * ((ep2 + ep2p) + (ep2 - ep2p) + c.ec22 - c.ec11 + c.ec11 - c.ec12)
    ep1p = 0.5 * ((ep2 + ep2p) - (ep2 - ep2p) + c.ec22 - c.ec11 - c.ec11 + c.ec12)
    pot = OnSitePotentials(ep1=ep1, ep2=ep2, ep1p=ep1p, ep2p=ep2p)
    window = math.sin(g.alpha) > 0.0
    return _result(
        pot, c, GateKind.SWAP, lambda v1, v2: window and v1 - v2 > STRICT_MINIMUM_TOL
    )


def collinear_design_coulomb(d: float, ab: float, q: float) -> CoulombTerms:
    """Collinear chain 1-2 .. 1'-2': distances d (2 to 1'), d + a+b (each
    correlated pair), d + 2(a+b) (1 to 2')."""
    q2 = q * q
    return CoulombTerms(
        ec11=q2 / (d + ab), ec12=q2 / (d + 2.0 * ab), ec21=q2 / d, ec22=q2 / (d + ab)
    )


def design_antiswap(
    d: float, ab: float, q: float, ep1: float = 1.0, ep2p: float = 1.0
) -> DesignResult:
    """Collinear antiswap (repeater) design with (ep1, ep2') pinned.

    The equality constraints give ep2 = ep1 + (q^2/(d+2(a+b)) - q^2/d)/2 and
    ep1' = ep2' + the same shift; the correlated corners are strictly lower
    for any d, a+b > 0 and q != 0 (convexity of 1/x), which is the minima
    pattern a repeater needs.
    """
    coulomb = collinear_design_coulomb(d, ab, q)
    shift = 0.5 * (coulomb.ec12 - coulomb.ec21)
    pot = OnSitePotentials(ep1=ep1, ep2=ep1 + shift, ep1p=ep2p + shift, ep2p=ep2p)
    return _result(
        pot, coulomb, GateKind.ANTISWAP, lambda v1, v2: v2 - v1 > STRICT_MINIMUM_TOL
    )
