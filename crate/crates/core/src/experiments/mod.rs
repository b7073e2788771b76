//! Experiment runners: outward entangling power of triangle simplices, the
//! six-spin small-field ground state, the symmetric 4-qubit scan and the
//! anisotropic-coupling check. Each runner is a pure function of its inputs.

pub mod amplitude_classes;
pub mod anisotropy;
pub mod region_entropy;
pub mod scan4;
