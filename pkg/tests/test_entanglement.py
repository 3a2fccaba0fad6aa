import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qswap.dynamics import EigenbasisAmplitudes, IntegratedParams, analytic_rho_from_E1, eigenbasis_state
from qswap.entanglement import (
    GateKind,
    ReducedDensity2,
    classify_gate,
    correlation_closed_form,
    correlation_expectation,
    partial_trace,
    von_neumann_entropy,
)
from qswap.gate import CaseParams, SymmetricSwapParams, case_spectrum, symmetric_swap_spectrum

SQ2 = math.sqrt(2.0)
LN2 = math.log(2.0)


def random_pure_state(rng):
    psi = rng.normal(size=4) + 1j * rng.normal(size=4)
    return psi / np.linalg.norm(psi)


class TestPartialTrace:
    def test_product_state(self):
        rho = np.zeros((4, 4), dtype=complex)
        rho[0, 0] = 1.0
        for keep in ("A", "B"):
            rd = partial_trace(rho, keep)
            assert rd.rho22 == pytest.approx(0.0, abs=1e-14)
            assert rd.rho12_r == rd.rho12_i == 0.0

    def test_bell_state(self):
        psi = np.array([-1, 0, 0, 1]) / SQ2
        rho = np.outer(psi, psi.conj())
        for keep in ("A", "B"):
            rd = partial_trace(rho, keep)
            assert np.max(np.abs(rd.matrix - np.eye(2) / 2)) < 1e-12

    def test_schmidt_symmetry(self):
        rng = np.random.default_rng(31)
        for _ in range(50):
            psi = random_pure_state(rng)
            rho = np.outer(psi, psi.conj())
            la = sorted(partial_trace(rho, "A").eigenvalues())
            lb = sorted(partial_trace(rho, "B").eigenvalues())
            assert np.max(np.abs(np.array(la) - lb)) < 1e-10

    def test_rejects_invalid_density(self):
        with pytest.raises(ValueError):
            partial_trace(np.eye(4), "A")  # trace 4


class TestEntropy:
    def test_pure(self):
        assert von_neumann_entropy(ReducedDensity2(0.0, 0.0, 0.0)) == 0.0

    def test_maximally_mixed(self):
        assert von_neumann_entropy(ReducedDensity2(0.5, 0.0, 0.0)) == pytest.approx(LN2, abs=1e-14)

    def test_range_and_purity_relation(self):
        rng = np.random.default_rng(32)
        for _ in range(200):
            psi = random_pure_state(rng)
            rd = partial_trace(np.outer(psi, psi.conj()), "B")
            s = von_neumann_entropy(rd)
            assert -1e-15 <= s <= LN2 + 1e-12
            if abs(rd.purity() - 1.0) < 1e-10:
                assert s < 1e-8

    def test_schmidt_entropy_equality(self):
        rng = np.random.default_rng(33)
        for _ in range(100):
            psi = random_pure_state(rng)
            rho = np.outer(psi, psi.conj())
            sa = von_neumann_entropy(partial_trace(rho, "A"))
            sb = von_neumann_entropy(partial_trace(rho, "B"))
            assert abs(sa - sb) < 1e-10

    def test_bell_pair_is_maximal(self):
        p = SymmetricSwapParams(vs=0.0, ts=0.9, ec1=1.0, ec2=0.7)
        labeled = symmetric_swap_spectrum(p).labeled
        for lbl in ("E1", "E2"):
            v = labeled.vector(lbl)
            s = von_neumann_entropy(partial_trace(np.outer(v, v.conj()), "B"))
            assert s == pytest.approx(LN2, abs=1e-10)


class TestCorrelation:
    def test_anticorrelated_basis_state(self):
        assert correlation_expectation([0, 1, 0, 0]) == -1.0

    def test_bell_state(self):
        psi = np.array([-1, 0, 0, 1]) / SQ2
        assert correlation_expectation(psi) == pytest.approx(1.0, abs=1e-15)

    def test_ground_state_anticorrelates_at_small_hopping(self):
        for ts, bound in ((0.1, -0.5), (0.01, -0.99), (0.001, -0.9999)):
            res = symmetric_swap_spectrum(SymmetricSwapParams(vs=0.0, ts=ts, ec1=1.0, ec2=0.5))
            ground = res.labeled.vector("E3")
            assert correlation_expectation(ground) < bound

    @settings(max_examples=50, deadline=None)
    @given(st.tuples(*[st.floats(0, 2 * math.pi) for _ in range(4)]),
           st.integers(0, 2**31 - 1))
    def test_local_phase_invariance(self, phases, seed):
        rng = np.random.default_rng(seed)
        psi = random_pure_state(rng)
        rotated = psi * np.exp(1j * np.array(phases))
        assert correlation_expectation(rotated) == pytest.approx(
            correlation_expectation(psi), abs=1e-12
        )


class TestCorrelationClosedForm:
    def test_single_level_matches_eigenvector(self):
        cp = CaseParams("I", u=0.8, u1=-0.3)
        ea = EigenbasisAmplitudes(c=(1.0, 0.0, 0.0, 0.0))
        spec = case_spectrum(cp)
        expected = correlation_expectation(spec.vector("E1"))
        vals = correlation_closed_form(cp, ea, np.linspace(0, 5, 9))
        assert np.max(np.abs(vals - expected)) < 1e-12

    def test_case2_single_beat_frequency(self):
        cp = CaseParams("II", u=1.1, u1=0.2)
        ea = EigenbasisAmplitudes(c=(0.0, 0.0, 0.6, 0.8))
        spec = case_spectrum(cp)
        gap = spec.energy("E4") - spec.energy("E3")
        n = 4096
        tgrid = np.linspace(0.0, 2 * math.pi * 40 / gap, n, endpoint=False)
        vals = correlation_closed_form(cp, ea, tgrid)
        amps = np.abs(np.fft.rfft(vals - vals.mean()))
        peak = int(np.argmax(amps))
        others = np.delete(amps, peak)
        assert others.max() < 1e-8 * amps[peak]  # single spectral line
        freq = peak / (tgrid[-1] + tgrid[1])
        assert freq == pytest.approx(gap / (2 * math.pi), rel=1e-3)

    def test_matches_expectation_at_t0(self):
        rng = np.random.default_rng(34)
        for case_id in ("I", "II", "III"):
            c = rng.uniform(0.1, 1.0, 4)
            c /= np.linalg.norm(c)
            ea = EigenbasisAmplitudes(c=tuple(c))
            cp = CaseParams(case_id, u=rng.uniform(-2, 2), u1=rng.uniform(-2, 2))
            psi0 = eigenbasis_state(case_spectrum(cp), ea)
            direct = correlation_expectation(psi0 / np.linalg.norm(psi0))
            assert correlation_closed_form(cp, ea, 0.0) == pytest.approx(direct, abs=1e-8)


class TestClassification:
    def test_constant_traces(self):
        assert classify_gate([-1.0] * 5) is GateKind.SWAP
        assert classify_gate([1.0] * 5) is GateKind.ANTISWAP
        assert classify_gate([0.01, -0.01]) is GateKind.INDETERMINATE

    def test_designed_swap_ground_state(self):
        res = symmetric_swap_spectrum(SymmetricSwapParams(vs=0.0, ts=0.05, ec1=1.0, ec2=0.7))
        f = correlation_expectation(res.labeled.vector("E3"))
        assert classify_gate([f] * 10) is GateKind.SWAP

    def test_empty_trace_rejected(self):
        with pytest.raises(ValueError):
            classify_gate([])


class TestClosedFormEntropyAgainstEigenvalues:
    def test_reduced_entropy_formula(self):
        from qswap.conjectures import reduced_entropy_printed

        rng = np.random.default_rng(35)
        for _ in range(100):
            psi = random_pure_state(rng)
            rd = partial_trace(np.outer(psi, psi.conj()), "B")
            lo, hi = rd.eigenvalues()
            if lo < 1e-12:
                continue  # printed form has a log singularity at pure states
            assert reduced_entropy_printed(rd.rho22, rd.rho12_r, rd.rho12_i) == pytest.approx(
                von_neumann_entropy(rd), abs=1e-9
            )

    def test_sb_closed_form_from_integrals(self):
        from qswap.conjectures import sb_entropy_printed

        rng = np.random.default_rng(36)
        for _ in range(100):
            q22, tdiff, t = rng.uniform(0.05, 2.0, 3)
            ip = IntegratedParams(q22=q22 * t, tr1=tdiff * t, tr2=0.0)
            rho = analytic_rho_from_E1(ip)
            rd = partial_trace(rho, "B")
            s_eig = von_neumann_entropy(rd)
            s_closed = sb_entropy_printed(ip.q22, ip.tr1, ip.tr2)
            assert s_closed == pytest.approx(s_eig, abs=1e-8)
