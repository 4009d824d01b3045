use thiserror::Error;

/// Errors surfaced by the engine. All arithmetic is exact, so these are
/// contract violations and resource limits, never numerical failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable-set mismatch: operand uses the quantum parameter but the ideal lives in a, b, g only")]
    VariableMismatch,
    #[error("degree cap {cap} exceeded during basis construction")]
    DegreeCapExceeded { cap: u32 },
    #[error("inhomogeneous generator: {0}")]
    InhomogeneousGenerator(String),
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(u32, u32),
    #[error("genus {genus} outside supported range {min}..={max}")]
    GenusOutOfRange { genus: u32, min: u32, max: u32 },
    #[error("sector degree {0} is odd")]
    OddSectorDegree(u32),
    #[error("sector degree {s} outside 0..={max}")]
    SectorDegreeRange { s: u32, max: u32 },
    #[error("sector index {index} outside 1..={rank}")]
    SectorIndexRange { index: u32, rank: u64 },
    #[error("torsion class is zero; twisted sectors are indexed by nonzero classes")]
    ZeroTorsionClass,
    #[error("bit string has length {0}, expected 2*genus = {1}")]
    BitLength(usize, u32),
    #[error("pairing matrix singular in degree {0}")]
    SingularPairing(u32),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
