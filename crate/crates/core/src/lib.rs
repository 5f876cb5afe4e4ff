//! Minimum aspect-ratio partitions of simple polygons without Steiner points.
//!
//! A polygon is cut along diagonals between its own vertices into pieces.
//! [`dp`] finds a partition minimizing the worst piece aspect ratio, or the
//! fewest pieces whose aspect ratio stays below a threshold. [`oracle`]
//! solves the same problems by brute force on small inputs, and [`gadgets`]
//! builds the polygons used to probe the hardness of the square-metric
//! variant.

pub mod dp;
pub mod error;
pub mod fatness;
pub mod gadgets;
pub mod geom;
pub mod oracle;
pub mod tangent;
pub mod visibility;

pub use dp::{min_cardinality_alpha_fat, minfat_partition, Partition, Solver, TieBreak};
pub use error::{Error, Result};
pub use fatness::{FatnessReport, Metric};
pub use geom::{Circle, Location, Point, Polygon, Segment, Tolerance};
pub use visibility::{VisEdge, VisibilityGraph};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/geometry.md")]
    mod geometry {}
    #[doc = include_str!("../../../book/src/fatness.md")]
    mod fatness {}
    #[doc = include_str!("../../../book/src/visibility.md")]
    mod visibility {}
    #[doc = include_str!("../../../book/src/minfat.md")]
    mod minfat {}
    #[doc = include_str!("../../../book/src/min-cardinality.md")]
    mod min_cardinality {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/gadgets.md")]
    mod gadgets {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
