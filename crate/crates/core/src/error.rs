use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid rational: {0}")]
    InvalidRational(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("unbounded polytope")]
    Unbounded,
    #[error("unbounded polytope at k = {0}")]
    UnboundedAt(u64),
    #[error("infeasible polytope")]
    Infeasible,
    #[error("no vertex")]
    NoVertex,
    #[error("not quasi-polynomial within bounds")]
    NotQuasiPolynomial,
    #[error("degree cap exceeded: {degree} > {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("dimension budget exceeded: {dim} > {cap}")]
    DimensionBudget { dim: u64, cap: u64 },
    #[error("character table budget exceeded at k = {k}: size {size} > {cap}")]
    CharacterBudget { k: u64, size: usize, cap: usize },
    #[error("weight cap exceeded: {0}")]
    WeightCap(String),
    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),
    #[error("singular matrix")]
    Singular,
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("not an obstruction: failed check `{0}`")]
    NotAnObstruction(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Stable snake_case name of the variant, for machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidPartition(_) => "invalid_partition",
            Error::InvalidRational(_) => "invalid_rational",
            Error::SizeMismatch(_) => "size_mismatch",
            Error::Dimension(_) => "dimension",
            Error::Unbounded | Error::UnboundedAt(_) => "unbounded",
            Error::Infeasible => "infeasible",
            Error::NoVertex => "no_vertex",
            Error::NotQuasiPolynomial => "not_quasi_polynomial",
            Error::DegreeCap { .. } => "degree_cap",
            Error::DimensionBudget { .. } => "dimension_budget",
            Error::CharacterBudget { .. } => "character_budget",
            Error::WeightCap(_) => "weight_cap",
            Error::OracleMismatch(_) => "oracle_mismatch",
            Error::Singular => "singular",
            Error::Verification(_) => "verification",
            Error::NotAnObstruction(_) => "not_an_obstruction",
            Error::Unsupported(_) => "unsupported",
            Error::Overflow(_) => "overflow",
            Error::Parse(_) => "parse",
        }
    }
}
