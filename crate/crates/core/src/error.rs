use thiserror::Error;

/// Every failure the geometry routines can report.
///
/// Verdicts that are part of the mathematics (an incompatible circle pair,
/// a sterile seed) are reported here too so callers can route them to
/// distinct exit paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("non-finite coordinate or length")]
    NonFinite,
    #[error("circle radius must be strictly positive")]
    NonPositiveRadius,
    #[error("line normal has zero length")]
    DegenerateNormal,
    #[error("point coincides with the inversion center")]
    CenterInversion,
    #[error("line passes through the circle center; its pole is at infinity")]
    LineThroughCenter,
    #[error("point does not lie on the circle")]
    NotOnCircle,
    #[error("circles are identical")]
    IdenticalCircles,
    #[error("triangle vertices are collinear")]
    CollinearVertices,
    #[error("triangle is right-angled")]
    RightTriangle,
    #[error("triangle is not acute")]
    NotAcute,
    #[error("circle pair is not an acute or obtuse circumcircle/Euler circle pair")]
    InvalidPair,
    #[error("seed is on a sterile arc: its tangent misses the inverted Euler circle")]
    NoTriangle,
    #[error("seed does not lie on the circumcircle")]
    SeedNotOnCircle,
    #[error("circles are externally tangent; no triangle exists")]
    ExternalTangency,
    #[error("circle pair is not internally tangent through the center")]
    NotRightPair,
    #[error("seed diameter passes through the tangency point")]
    DegenerateSeed,
    #[error("pedal point lies on the circle")]
    PedalPointOnCircle,
    #[error("conic focus is not at the circle center")]
    FocusNotAtCenter,
}

pub type Result<T> = std::result::Result<T, GeomError>;
