use thiserror::Error;

pub type Result<T, E = LatticeError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("lattice must have at least one element")]
    Empty,
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("cover pair references unknown element `{0}`")]
    UnknownLabel(String),
    #[error("cover relation contains a cycle through `{0}`")]
    CycleError(String),
    #[error("relation is not a partial order: {0}")]
    NotAnOrder(String),
    #[error("not bounded: {0}")]
    NotBounded(String),
    #[error("not a lattice: `{0}` and `{1}` have no unique {2}")]
    NotALattice(String, String, &'static str),
    #[error("element index {index} out of range for lattice of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("element set belongs to a different lattice")]
    ForeignSet,
    #[error("subset is not a cover")]
    NotACover,
    #[error("invalid subset: {0}")]
    InvalidSubset(&'static str),
    #[error("size limit exceeded: {what} needs n <= {limit}, got {n}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidK(String),
    #[error("construction mismatch: {0}")]
    FormulaMismatch(String),
    #[error("malformed lattice JSON: {0}")]
    Json(String),
}

impl LatticeError {
    /// The variant name, stable across message wording changes.
    pub fn kind(&self) -> &'static str {
        match self {
            LatticeError::Empty => "Empty",
            LatticeError::DuplicateLabel(_) => "DuplicateLabel",
            LatticeError::UnknownLabel(_) => "UnknownLabel",
            LatticeError::CycleError(_) => "CycleError",
            LatticeError::NotAnOrder(_) => "NotAnOrder",
            LatticeError::NotBounded(_) => "NotBounded",
            LatticeError::NotALattice(..) => "NotALattice",
            LatticeError::IndexOutOfRange { .. } => "IndexOutOfRange",
            LatticeError::ForeignSet => "ForeignSet",
            LatticeError::NotACover => "NotACover",
            LatticeError::InvalidSubset(_) => "InvalidSubset",
            LatticeError::SizeLimit { .. } => "SizeLimit",
            LatticeError::InvalidK(_) => "InvalidK",
            LatticeError::FormulaMismatch(_) => "FormulaMismatch",
            LatticeError::Json(_) => "Json",
        }
    }

    pub(crate) fn check_size(what: &'static str, n: usize, limit: usize) -> Result<()> {
        if n > limit {
            Err(LatticeError::SizeLimit { what, n, limit })
        } else {
            Ok(())
        }
    }
}
