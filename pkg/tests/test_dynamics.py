import math

import numpy as np
import pytest

from qswap.dynamics import (
    CoolingSchedule,
    EigenbasisAmplitudes,
    IntegratedParams,
    analytic_U_localized,
    analytic_U_symmetric,
    analytic_rho_from_E1,
    cooling_protocol,
    eigenbasis_state,
    evolve,
    occupancy_closed_form,
    occupancy_probabilities,
    require_density,
)
from qswap.errors import GridError, PerturbationTooLargeError
from qswap.gate import (
    CaseParams,
    CoulombTerms,
    Geometry,
    SymmetricSwapParams,
    TwoQubitSystem,
    build_two_qubit_hamiltonian,
    case_solver,
    case_spectrum,
    case_system,
    symmetric_swap_spectrum,
    symmetric_swap_system,
)
from qswap.linalg import propagator

SQ2 = math.sqrt(2.0)


def symmetric_system(q11, q22, t1, t2):
    return TwoQubitSystem(
        0.0, 0.0, 0.0, 0.0, complex(t1), complex(t2),
        CoulombTerms(q11 + q22, q11 - q22, q11 - q22, q11 + q22),
    )


class TestEvolve:
    def test_zero_hamiltonian(self):
        sys = TwoQubitSystem(0, 0, 0, 0, 0j, 0j, CoulombTerms(0, 0, 0, 0))
        psi0 = np.array([0.5, 0.5, 0.5, 0.5], dtype=complex)
        trace = evolve(sys, psi0, np.linspace(0, 5, 11))
        assert np.max(np.abs(trace - psi0)) < 1e-14

    def test_stationary_state(self):
        p = SymmetricSwapParams(vs=0.0, ts=1.0, ec1=1.0, ec2=0.8)
        res = symmetric_swap_spectrum(p)
        e3, v3 = res.labeled.energy("E3"), res.labeled.vector("E3")
        grid = np.linspace(0, 4, 9)
        trace = evolve(symmetric_swap_system(p), v3, grid)
        for t, psi in zip(grid, trace):
            assert np.max(np.abs(psi - np.exp(-1j * e3 * t) * v3)) < 1e-12

    def test_grid_errors(self):
        sys = symmetric_system(0.5, 0.2, 1.0, 1.0)
        psi0 = np.array([1, 0, 0, 0], dtype=complex)
        with pytest.raises(GridError):
            evolve(sys, psi0, [0.0, 1.0, 1.0])
        with pytest.raises(GridError):
            evolve(sys, psi0, [0.0, -1.0])

    def test_rejects_unnormalized_state(self):
        sys = symmetric_system(0.5, 0.2, 1.0, 1.0)
        with pytest.raises(ValueError):
            evolve(sys, np.array([1, 1, 0, 0], dtype=complex), [0.0, 1.0])

    def test_occupancies_match_analytic_density(self):
        p = SymmetricSwapParams(vs=0.0, ts=1.0, ec1=1.0, ec2=0.8)
        sys = symmetric_swap_system(p)
        q11 = 2 * p.vs + 0.5 * (p.ec1 + p.ec2)
        q22 = 0.5 * (p.ec1 - p.ec2)
        e1 = symmetric_swap_spectrum(p).labeled.vector("E1")
        grid = np.linspace(0, 3, 16)
        trace = evolve(sys, e1, grid)
        for t, psi in zip(grid, trace):
            rho = analytic_rho_from_E1(IntegratedParams.constant_symmetric(q11, q22, p.ts, p.ts, t))
            assert np.max(np.abs(np.outer(psi, psi.conj()) - rho)) < 1e-9

    def test_localized_start_matches_analytic_propagator(self):
        # both electrons on the node-1 pair of the reference swap layout
        p = SymmetricSwapParams(vs=0.0, ts=1.0, ec1=1.0, ec2=0.8)
        sys = symmetric_swap_system(p)
        q11 = 0.5 * (p.ec1 + p.ec2)
        q22 = 0.5 * (p.ec1 - p.ec2)
        psi0 = np.array([1, 0, 0, 0], dtype=complex)
        grid = np.linspace(0.0, 6.0, 25)
        trace = evolve(sys, psi0, grid)
        for t, psi in zip(grid, trace):
            u = analytic_U_symmetric(IntegratedParams.constant_symmetric(q11, q22, p.ts, p.ts, t))
            assert np.max(np.abs(np.abs(psi) ** 2 - np.abs(u @ psi0) ** 2)) < 1e-8

    def test_step_halving_on_time_dependent_schedule(self):
        # midpoint-sampled piecewise-constant stepping is second order
        def system(t):
            return symmetric_system(0.5, 0.3, 1.0 + 0.4 * math.sin(0.9 * t), 1.0)

        psi0 = np.array([1, 0, 0, 0], dtype=complex)

        def final(n):
            return evolve(system, psi0, np.linspace(0, 4.0, n + 1))[-1]

        coarse, half, ref = final(4000), final(8000), final(32000)
        err_coarse = np.max(np.abs(coarse - ref))
        err_half = np.max(np.abs(half - ref))
        assert err_half < 1e-8
        assert err_coarse / err_half > 3.0  # ~4x for a 2nd-order scheme

    def test_norm_drift_over_many_steps(self):
        def system(t):
            return symmetric_system(0.5, 0.3, 1.0 + 0.2 * math.cos(t), 0.7)

        psi0 = np.array([0.5, 0.5, 0.5, 0.5], dtype=complex)
        trace = evolve(system, psi0, np.linspace(0, 10, 10001))
        norms = np.sum(np.abs(trace) ** 2, axis=1)
        assert np.max(np.abs(norms - 1.0)) < 1e-10

    def test_hbar_rescales_time(self):
        sys = symmetric_system(0.4, 0.25, 1.1, 0.6)
        psi0 = np.array([1, 0, 0, 0], dtype=complex)
        a = evolve(sys, psi0, [0.0, 2.0, 4.0], hbar=2.0)
        b = evolve(sys, psi0, [0.0, 1.0, 2.0], hbar=1.0)
        assert np.max(np.abs(a - b)) < 1e-12

    def test_purity_preserved(self):
        sys = symmetric_system(0.4, 0.25, 1.1, 0.6)
        psi0 = np.array([0.5, 0.5j, -0.5, 0.5], dtype=complex)
        trace = evolve(sys, psi0, np.linspace(0, 6, 61))
        for psi in trace:
            rho = np.outer(psi, psi.conj())
            assert abs(np.trace(rho @ rho).real - 1.0) < 1e-10


class TestAnalyticUnitaries:
    def test_zero_integrals_identity(self):
        assert np.allclose(analytic_U_localized(IntegratedParams()), np.eye(4))
        assert np.allclose(analytic_U_symmetric(IntegratedParams()), np.eye(4))

    def test_localized_full_transfer(self):
        ip = IntegratedParams(tr1=math.pi / 2, ti1=0.0)
        u = analytic_U_localized(ip)
        assert abs(u[0, 2]) == pytest.approx(1.0, abs=1e-12)
        assert abs(u[0, 0]) == pytest.approx(0.0, abs=1e-12)

    def test_localized_matches_evolve(self):
        rng = np.random.default_rng(21)
        for _ in range(60):
            diag = rng.uniform(-2, 2, 4)
            tr, ti = rng.uniform(-2, 2, 2)
            dt = rng.uniform(0.1, 2.5)
            hb = rng.choice([0.5, 1.0, 2.0])
            sys = TwoQubitSystem(0, 0, 0, 0, complex(tr, ti), 0j, CoulombTerms(*diag))
            u_ref = propagator(build_two_qubit_hamiltonian(sys), dt, hb)
            u = analytic_U_localized(IntegratedParams.constant_localized(diag, tr, ti, dt), hb)
            assert np.max(np.abs(u - u_ref)) < 1e-10

    def test_localized_block_structure(self):
        ip = IntegratedParams(tr1=0.7, ti1=-0.3, q1=1.0, q2=-0.5, q3=0.2, q4=0.9)
        u = analytic_U_localized(ip)
        for i, j in ((0, 1), (0, 3), (1, 2), (2, 3)):
            assert u[i, j] == 0.0 and u[j, i] == 0.0

    def test_symmetric_matches_evolve(self):
        rng = np.random.default_rng(22)
        for _ in range(60):
            q11, q22, t1, t2 = rng.uniform(-2, 2, 4)
            dt = rng.uniform(0.1, 2.5)
            hb = rng.choice([0.5, 1.0, 2.0])
            sys = symmetric_system(q11, q22, t1, t2)
            u_ref = propagator(build_two_qubit_hamiltonian(sys), dt, hb)
            ip = IntegratedParams.constant_symmetric(q11, q22, t1, t2, dt)
            assert np.max(np.abs(analytic_U_symmetric(ip, hb) - u_ref)) < 1e-10

    def test_symmetric_worked_example(self):
        ip = IntegratedParams.constant_symmetric(1.0, 0.3, 0.7, 0.2, 1.0)
        sys = symmetric_system(1.0, 0.3, 0.7, 0.2)
        u_ref = propagator(build_two_qubit_hamiltonian(sys), 1.0)
        assert np.max(np.abs(analytic_U_symmetric(ip) - u_ref)) < 1e-10

    def test_equal_hoppings_decouple_antisymmetric_sector(self):
        # With tr1 = tr2 the difference channel closes: the (v3, v4) sector
        # of the propagator is diagonal, and U factorizes into a product of
        # identical single-qubit unitaries.
        ip = IntegratedParams.constant_symmetric(0.9, 0.4, 0.8, 0.8, 1.3)
        u = analytic_U_symmetric(ip)
        v3 = np.array([0, 1, -1, 0]) / SQ2
        v4 = np.array([1, 0, 0, -1]) / SQ2
        assert abs(v3 @ u @ v4) < 1e-12
        th = 0.8 * 1.3
        single = np.array(
            [[math.cos(th), -1j * math.sin(th)], [-1j * math.sin(th), math.cos(th)]]
        )
        # q22 block only shifts phases within the correlated sector when 0
        ip0 = IntegratedParams.constant_symmetric(0.0, 0.0, 0.8, 0.8, 1.3)
        assert np.max(np.abs(analytic_U_symmetric(ip0) - np.kron(single, single))) < 1e-12


class TestAnalyticDensity:
    def test_initial_projector(self):
        rho = analytic_rho_from_E1(IntegratedParams())
        expected = 0.5 * np.array(
            [[1, 0, 0, -1], [0, 0, 0, 0], [0, 0, 0, 0], [-1, 0, 0, 1]], dtype=complex
        )
        assert np.max(np.abs(rho - expected)) < 1e-14

    def test_constant_when_hoppings_match(self):
        for t in (0.0, 0.7, 2.3):
            ip = IntegratedParams.constant_symmetric(1.0, 0.4, 0.9, 0.9, t)
            rho = analytic_rho_from_E1(ip)
            assert np.max(np.abs(rho - analytic_rho_from_E1(IntegratedParams()))) < 1e-12

    def test_purity(self):
        rng = np.random.default_rng(23)
        for _ in range(100):
            q22, tdiff, t = rng.uniform(-2, 2, 3)
            ip = IntegratedParams(q11=rng.uniform(-1, 1), q22=q22 * t, tr1=tdiff * t, tr2=0.0)
            rho = analytic_rho_from_E1(ip)
            assert np.max(np.abs(rho @ rho - rho)) < 1e-9
            require_density(rho)

    def test_matches_evolve(self):
        p = SymmetricSwapParams(vs=0.2, ts=0.9, ec1=1.0, ec2=0.55)
        sys = symmetric_swap_system(p)
        q11 = 2 * p.vs + 0.5 * (p.ec1 + p.ec2)
        q22 = 0.5 * (p.ec1 - p.ec2)
        e1 = symmetric_swap_spectrum(p).labeled.vector("E1")
        psi = evolve(sys, e1, [0.0, 0.7])[-1]
        rho = analytic_rho_from_E1(IntegratedParams.constant_symmetric(q11, q22, p.ts, p.ts, 0.7))
        assert np.max(np.abs(np.outer(psi, psi.conj()) - rho)) < 1e-9


class TestOccupancies:
    def test_basis_states(self):
        occ = occupancy_probabilities([1, 0, 0, 0])
        assert (occ.p11, occ.pa1, occ.pb1) == (1.0, 1.0, 1.0)
        occ = occupancy_probabilities([0, 0, 1, 0])
        assert (occ.p21, occ.pa1, occ.pb1) == (1.0, 0.0, 1.0)

    def test_bell_state(self):
        occ = occupancy_probabilities(np.array([-1, 0, 0, 1]) / SQ2)
        assert occ.p11 == pytest.approx(0.5)
        assert occ.p22 == pytest.approx(0.5)
        assert occ.pa1 == pytest.approx(0.5)
        assert occ.pb1 == pytest.approx(0.5)

    def test_sums_consistent_along_trace(self):
        sys = symmetric_system(0.5, 0.2, 1.0, 0.4)
        psi0 = np.array([0.6, 0.0, 0.8, 0.0], dtype=complex)
        for psi in evolve(sys, psi0, np.linspace(0, 5, 51)):
            occ = occupancy_probabilities(psi)
            total = occ.p11 + occ.p12 + occ.p21 + occ.p22
            assert total == pytest.approx(1.0, abs=1e-10)
            assert min(occ.p11, occ.p12, occ.p21, occ.p22) > -1e-12


class TestOccupancyClosedForm:
    G = Geometry(d=1.0, a=0.2, b=0.0, alpha=0.4, q=1.0)

    def test_single_level_stationary(self):
        cp = CaseParams("II", u=0.9, u1=0.1)
        ea = EigenbasisAmplitudes(c=(1.0, 0.0, 0.0, 0.0))
        probs = occupancy_closed_form(cp, ea, np.linspace(0, 5, 7))
        assert np.max(np.abs(probs - probs[0])) < 1e-12

    def test_equal_superposition_matches_evolve(self):
        cp = case_solver("II", self.G, {"ep1": 0.1, "ep1p": -0.2})
        sys = case_system("II", self.G, cp)
        ea = EigenbasisAmplitudes(c=(0.5, 0.5, 0.5, 0.5), phi=(0.0, 0.0, 0.0, 0.0))
        psi0 = eigenbasis_state(case_spectrum(cp), ea)
        grid = np.linspace(0.0, 5.0, 20)
        trace = evolve(sys, psi0, grid)
        probs = occupancy_closed_form(cp, ea, grid)
        assert np.max(np.abs(np.abs(trace) ** 2 - probs)) < 1e-8

    def test_top_level_components(self):
        cp = CaseParams("III", u=1.2, u1=-0.3, ts1=1.0, ts2=0.7)
        ea = EigenbasisAmplitudes(c=(0.0, 0.0, 0.0, 1.0))
        probs = occupancy_closed_form(cp, ea, 0.0)
        v4 = case_spectrum(cp).vector("E4")
        assert np.max(np.abs(probs - np.abs(v4) ** 2)) < 1e-12

    def test_probabilities_sum_to_one(self):
        cp = CaseParams("I", u=0.4, u1=-0.9)
        ea = EigenbasisAmplitudes(c=(0.6, 0.0, 0.48, 0.64), phi=(0.1, 0.0, -0.4, 1.2))
        grid = np.linspace(0, 8, 40)
        probs = occupancy_closed_form(cp, ea, grid)
        assert np.max(np.abs(probs.sum(axis=-1) - 1.0)) < 1e-8
        assert probs.min() > -1e-8


class TestCooling:
    P = SymmetricSwapParams(vs=0.0, ts=1.0, ec1=1.0, ec2=0.5)

    def test_zero_drive_constant_populations(self):
        sched = CoolingSchedule(f_amplitude=0.0, duration=5.0)
        psi0 = eigenbasis_state(
            case_spectrum(CaseParams("II", u=1.0, u1=0.5)),
            EigenbasisAmplitudes(c=(0.6, 0.8, 0.0, 0.0)),
        )
        trace = cooling_protocol(self.P, sched, state0=psi0 / np.linalg.norm(psi0), steps=500)
        assert np.max(np.abs(trace.populations - trace.populations[0])) < 1e-10

    def test_transfer_from_e1(self):
        sched = CoolingSchedule(f_amplitude=0.005, duration=120.0)
        trace = cooling_protocol(self.P, sched, steps=12000)
        assert trace.populations[:, 2:].max() < 1e-12  # E3/E4 stay empty
        assert trace.populations[-1, 1] > 0.05  # population reached E2
        norms = trace.populations.sum(axis=1)
        assert np.max(np.abs(norms - 1.0)) < 1e-10

    def test_e3_initial_state_frozen(self):
        spec = symmetric_swap_spectrum(self.P)
        sched = CoolingSchedule(f_amplitude=0.004, duration=50.0)
        trace = cooling_protocol(self.P, sched, state0=spec.labeled.vector("E3"), steps=5000)
        assert np.max(np.abs(trace.populations - trace.populations[0])) < 1e-8

    def test_perturbative_guard(self):
        with pytest.raises(PerturbationTooLargeError):
            cooling_protocol(self.P, CoolingSchedule(f_amplitude=0.2, duration=1.0))

    def test_heat_mode_runs(self):
        sched = CoolingSchedule(f_amplitude=0.004, duration=20.0, mode="heat")
        trace = cooling_protocol(self.P, sched, steps=2000)
        assert trace.populations[:, 2:].max() < 1e-12
