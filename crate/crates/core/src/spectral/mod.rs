//! Hamiltonians of the transverse-field triangular antiferromagnet, exact
//! ground states, degenerate perturbation theory, partial traces and
//! von Neumann entropies (in ebits).

mod eigen;
mod entropy;
mod hamiltonian;
mod perturbation;
mod state;

pub use eigen::{
    energy_of, ground_state_small_lambda, ground_state_with, lanczos_lowest, lowest_pair,
    sorted_eigen, GroundState, LanczosConfig, DEGENERACY_TOL, DENSE_MAX_QUBITS,
};
pub use entropy::{
    entanglement_entropy, entropy, entropy_of_spectrum, partial_trace, ReducedDensity,
    EIGENVALUE_FLOOR, REGION_CAP,
};
pub use hamiltonian::{
    build_hamiltonian, build_hw, build_two_condition_form, HamiltonianSpec, SpinOperator,
    DEFAULT_QUBIT_CAP,
};
pub use perturbation::{
    classical_ground, degenerate_pt_ground, degenerate_pt_on_manifold, PtGround,
};
pub use state::{PureState, MAX_DENSE_QUBITS};
