use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {index} has a non-finite coordinate")]
    NonFinite { index: usize },
    #[error("vertex {0} repeats the following vertex")]
    DuplicateVertex(usize),
    #[error("polygon has zero area")]
    ZeroArea,
    #[error("polygon is not simple: edges {0} and {1} intersect")]
    SelfIntersection(usize, usize),
    #[error("polygon vertices are in clockwise order")]
    Clockwise,
    #[error("segment endpoints coincide")]
    DegenerateSegment,
    #[error("invalid tolerance: need 0 < eps ({eps}) < geom_eps ({geom_eps}) < 1")]
    InvalidTolerance { eps: f64, geom_eps: f64 },
    #[error("alpha must be at least 1, got {0}")]
    InvalidAlpha(f64),
    #[error("polygon has {n} vertices, above the enumeration cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("vertex index {index} out of range for a polygon with {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
}
