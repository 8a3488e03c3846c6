use core::fmt;

/// Errors surfaced by module construction and the heavier searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Ring modulus 1 would make the zero ring; we only model Z (0) and Z/N (N >= 2).
    ModulusOne,
    /// Invariant factor below 2 cannot appear in a normal form.
    FactorTooSmall { factor: u64 },
    /// Invariant factors must form a divisibility chain d1 | d2 | ... | dk.
    ChainBroken { left: u64, right: u64 },
    /// Over Z/N every invariant factor must divide N.
    FactorNotDividingModulus { factor: u64, modulus: u64 },
    /// The module order exceeds the configured enumeration bound.
    BoundExceeded { order: u64, max: u64 },
    /// Zariski graphs are defined over a non-empty subset of the spectrum.
    EmptySubset,
    /// Graph embedding/isomorphism search is only attempted on small graphs.
    SearchBoundExceeded { vertices: usize, max: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ModulusOne => write!(f, "ring modulus 1 is not supported (zero ring)"),
            Error::FactorTooSmall { factor } => {
                write!(f, "invariant factor {factor} is below 2")
            }
            Error::ChainBroken { left, right } => {
                write!(f, "invariant factors must divide in order: {left} does not divide {right}")
            }
            Error::FactorNotDividingModulus { factor, modulus } => {
                write!(f, "invariant factor {factor} does not divide the ring modulus {modulus}")
            }
            Error::BoundExceeded { order, max } => {
                write!(f, "module order {order} exceeds the enumeration bound {max}")
            }
            Error::EmptySubset => {
                write!(f, "the subset of the spectrum must be non-empty")
            }
            Error::SearchBoundExceeded { vertices, max } => {
                write!(f, "graph search limited to {max} vertices, got {vertices}")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
