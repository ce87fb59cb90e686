use crate::rat::Rat;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("cannot parse rational number")]
    Parse,
    #[error("degenerate triangle: {0}")]
    DegenerateTriangle(&'static str),
    #[error("degenerate configuration: {0}")]
    Degenerate(&'static str),
    #[error("singular curve (equilateral parameters)")]
    SingularCurve,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("points lie on different curves")]
    CurveMismatch,
    #[error("pole: {0}")]
    Pole(&'static str),
    #[error("point does not correspond to a triangle")]
    NotATriangle,
    #[error("sigma is irrational: radicand {radicand} is not a rational square")]
    IrrationalSigma { radicand: Rat },
    #[error("plane section of the quadric is a degenerate conic")]
    DegenerateSection,
    #[error("point at infinity cannot be projected")]
    InfinitePoint,
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
    #[error("internal inconsistency: {0}")]
    Inconsistency(&'static str),
}

impl Error {
    /// Stable machine-readable code used in serialized error payloads.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain(_) => "Domain",
            Error::Parse => "Parse",
            Error::DegenerateTriangle(_) => "DegenerateTriangle",
            Error::Degenerate(_) => "Degenerate",
            Error::SingularCurve => "SingularCurve",
            Error::NotOnCurve => "NotOnCurve",
            Error::CurveMismatch => "CurveMismatch",
            Error::Pole(_) => "Pole",
            Error::NotATriangle => "NotATriangle",
            Error::IrrationalSigma { .. } => "IrrationalSigma",
            Error::DegenerateSection => "DegenerateSection",
            Error::InfinitePoint => "InfinitePoint",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Inconsistency(_) => "Inconsistency",
        }
    }
}
