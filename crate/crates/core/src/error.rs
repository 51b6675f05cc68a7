use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not antisymmetric: {0} <= {1} <= {0}")]
    NotAntisymmetric(usize, usize),
    #[error("relation is not transitive: {0} <= {1} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("element name {0:?} is used twice")]
    DuplicateName(String),
    #[error("elements {0} and {1} have no bound")]
    NoBound(usize, usize),
    #[error("subset has no join")]
    NoJoin,
    #[error("axiom {axiom} fails at {witness:?}")]
    AxiomViolation { axiom: String, witness: Vec<usize> },
    #[error("no residual {a} -> {b}")]
    NoResidual { a: usize, b: usize },
    #[error("algebra is not residuated")]
    NotResiduated,
    #[error("element {0} has no complement")]
    NoComplement(usize),
    #[error("algebra is not complemented (element {0} has no complement)")]
    NotComplemented(usize),
    #[error("operation is not commutative")]
    NotCommutative,
    #[error("missing operation: {0}")]
    MissingOperation(&'static str),
    #[error("not a Brouwerian algebra: {0}")]
    NotBrouwerian(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("part {0} is not bi-integral")]
    NotBiIntegral(usize),
    #[error("missing bound: {0}")]
    MissingBound(&'static str),
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("frame axiom violated: {0}")]
    FrameAxiomViolation(String),
    #[error("more than {0} closed sets")]
    SizeCap(usize),
    #[error("incompatible F, I, alpha: {0}")]
    IncompatibleFIAlpha(String),
    #[error("transformation table is invalid at ({a}, {b})")]
    InvalidTransformation { a: usize, b: usize },
    #[error("transformation table is not normal: {0}")]
    NotNormal(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unsupported operator {0}")]
    UnsupportedOperator(String),
    #[error("not an sl-monoidal inequality: {0}")]
    NotSlMonoidal(String),
    #[error("not linear: {0}")]
    NotLinear(String),
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
