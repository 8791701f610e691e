use thiserror::Error;

use crate::invariants::GenericityViolation;

/// Errors raised by the library. Every variant carries a stable machine code
/// (see [`Error::code`]) so front ends can emit structured error documents.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is mapped to infinity (c*v + d = 0)")]
    ElementAtInfinity,
    #[error("non-generic element tuple: {}", join_violations(.0))]
    NonGeneric(Vec<GenericityViolation>),
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("element has w = 0 (inflection); it has no centre of curvature")]
    Inflection,
    #[error("centre is mapped to infinity (zero denominator)")]
    CentreAtInfinity,
    #[error("singular linear system: {0}")]
    SingularSystem(String),
    #[error("the plane meets the tangent plane in a line: {0} = 0")]
    TangentPlaneIntersection(&'static str),
    #[error("all three forms are proportional; the image is a point")]
    DegenerateImage,
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("point is the cone vertex")]
    Vertex,
    #[error("point is not on the cone")]
    NotOnCone,
    #[error("coordinates violate the quadratic relations: {0}")]
    InvalidGeometry(String),
    #[error("model and geometry do not match: {0}")]
    Mismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

fn join_violations(v: &[GenericityViolation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Shape(_) => "shape",
            Error::Domain(_) => "domain",
            Error::Parse(_) => "parse",
            Error::DivisionByZero => "division-by-zero",
            Error::ElementAtInfinity => "element-at-infinity",
            Error::NonGeneric(_) => "non-generic",
            Error::DegenerateConfiguration(_) => "degenerate-configuration",
            Error::Inflection => "inflection",
            Error::CentreAtInfinity => "centre-at-infinity",
            Error::SingularSystem(_) => "singular-system",
            Error::TangentPlaneIntersection(_) => "tangent-plane-intersection",
            Error::DegenerateImage => "degenerate-image",
            Error::OutOfRange(_) => "out-of-range",
            Error::Vertex => "vertex",
            Error::NotOnCone => "not-on-cone",
            Error::InvalidGeometry(_) => "invalid-geometry",
            Error::Mismatch(_) => "mismatch",
            Error::Unsupported(_) => "unsupported",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
