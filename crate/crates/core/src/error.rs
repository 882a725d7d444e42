use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("combined half-power {0} is odd; the product is not a polynomial times an integer power of (1 - x^2)")]
    OddHalfPower(u32),
    #[error("operator needs a half-power of at least 1")]
    ZeroHalfPower,
    #[error("argument {0} lies outside [-1, 1]")]
    Domain(f64),
    #[error("the zero polynomial has no finite root count")]
    ZeroPolynomial,
    #[error("empty interval: lower bound must be strictly below upper bound")]
    EmptyInterval,
    #[error("n_x exceeds ell (n_x = {nodes}, ell = {ell})")]
    NodesExceedEll { ell: u32, nodes: i64 },
    #[error("negative n_x = {0} is outside the supported range (0 <= n_x <= ell)")]
    NegativeNodes(i64),
    #[error("raising step {step} is outside 1..={ell}")]
    StepOutOfRange { ell: u32, step: u32 },
    #[error("order m = {m} is outside 0..={ell}")]
    OrderOutOfRange { ell: u32, m: u32 },
    #[error("ladder function (ell = {ell}, n_x = {nodes}) is not proportional to the classical reference")]
    NotProportional { ell: u32, nodes: u32 },
    #[error("field point r = {r} is not exterior to the source extent {extent}")]
    InteriorPoint { r: f64, extent: f64 },
    #[error("field point r = {r} is inside the conductor of radius {radius}")]
    InsideConductor { r: f64, radius: f64 },
    #[error("field point coincides with a source element")]
    Singular,
    #[error("lmax = {0} exceeds the supported maximum of {max}", max = crate::electrostatics::LMAX_CAP)]
    LmaxTooLarge(u32),
    #[error("at least {min} quadrature points are required, got {0}", min = crate::electrostatics::MIN_QUAD_POINTS)]
    TooFewQuadPoints(usize),
    #[error("invalid geometry: {0}")]
    Geometry(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
