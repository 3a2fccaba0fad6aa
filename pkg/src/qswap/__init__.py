"""Two electrostatically coupled charge qubits in the tight-binding model:
Hamiltonians from device geometry, spectra, unitary dynamics, entanglement
and correlation metrics, and quasi-classical SWAP/ANTISWAP gate design."""

from .linalg import (
    PauliCoefficients,
    Spectrum,
    eigh,
    matrix_function,
    matrix_log,
    pauli_decompose,
    pauli_reconstruct,
    propagator,
)
from .qubit import (
    QubitParams,
    QubitState,
    build_qubit_hamiltonian,
    measure_position,
    qubit_propagator,
    qubit_spectrum_closed_form,
)
from .gate import (
    CaseParams,
    CoulombTerms,
    Geometry,
    SymmetricSwapParams,
    TwoQubitSystem,
    angle_roots,
    build_two_qubit_hamiltonian,
    case_solver,
    case_spectrum,
    case_system,
    coulomb_angled,
    coulomb_parallel,
    symmetric_swap_spectrum,
    symmetric_swap_system,
)
from .dynamics import (
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
)
from .entanglement import (
    GateKind,
    ReducedDensity2,
    classify_gate,
    correlation_closed_form,
    correlation_expectation,
    partial_trace,
    von_neumann_entropy,
)
from .design import (
    DesignResult,
    OnSitePotentials,
    corner_audit,
    design_angled_swap,
    design_antiswap,
    design_symmetric_swap,
    phenomenological_energy,
)

__all__ = [name for name in dir() if not name.startswith("_")]
