use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Structural problem with a lattice, region or clause set.
    InvalidLattice(String),
    InvalidRegion(String),
    /// A simplex or tensor was given the wrong number of legs.
    ArityMismatch {
        expected: usize,
        found: usize,
    },
    /// Amplitudes (or weights) that are all zero cannot be normalized.
    ZeroState,
    /// Problem size above a configured cap.
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    /// Intermediate tensor larger than the memory cap (in elements).
    MemoryCap {
        required: usize,
        cap: usize,
    },
    InvalidOrder(String),
    /// Lowest eigenvalue not resolved from the next one.
    DegenerateGround {
        gap: f64,
    },
    EmptyManifold,
    NoConvergence {
        iterations: usize,
    },
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidLattice(msg) => write!(f, "invalid lattice: {msg}"),
            Error::InvalidRegion(msg) => write!(f, "invalid region: {msg}"),
            Error::ArityMismatch { expected, found } => {
                write!(f, "arity mismatch: expected {expected}, found {found}")
            }
            Error::ZeroState => f.write_str("state has zero norm"),
            Error::SizeCap { what, size, cap } => {
                write!(f, "{what} of size {size} exceeds the cap of {cap}")
            }
            Error::MemoryCap { required, cap } => write!(
                f,
                "intermediate tensor of {required} elements exceeds the cap of {cap}"
            ),
            Error::InvalidOrder(msg) => write!(f, "invalid contraction order: {msg}"),
            Error::DegenerateGround { gap } => {
                write!(f, "lowest eigenvalue is degenerate (gap {gap:e})")
            }
            Error::EmptyManifold => f.write_str("ground manifold is empty"),
            Error::NoConvergence { iterations } => {
                write!(f, "no convergence after {iterations} iterations")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
