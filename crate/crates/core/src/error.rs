use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("entry ({row}, {col}) is outside a {rows}x{cols} matrix")]
    OutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("integer overflow during {0}")]
    Overflow(&'static str),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unknown ring `{0}` (expected Z, Q or Z/p)")]
    UnknownRing(String),
    #[error("d∘d ≠ 0 in degree {degree}")]
    NotAComplex { degree: i32 },
    #[error("not a chain map in degree {degree}")]
    NotAChainMap { degree: i32 },
    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),
    #[error("{0} is not a simplex of this complex")]
    UnknownSimplex(String),
    #[error("vertex map is not simplicial: the image of {simplex} is not a simplex of the target")]
    NotSimplicial { simplex: String },
    #[error("control maps do not commute: {0}")]
    ControlMismatch(String),
    #[error("support condition violated: {0}")]
    Support(String),
    #[error("subset is not full: {0}")]
    NotFull(String),
    #[error("posets differ: {0}")]
    PosetMismatch(String),
    #[error("wrong order flag: {0}")]
    OrderMismatch(String),
    #[error("{0} is not a maximal simplex")]
    NotMaximal(String),
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),
    #[error("{0} and {1} are not incident")]
    NotIncident(String, String),
}
