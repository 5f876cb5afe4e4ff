//! Reduced graphs: the visibility edges a piece certified by a circle pair
//! may use.

use crate::dp::candidates::CirclePair;
use crate::geom::{crossing_parity, Point, Polygon, Segment, Tolerance};
use crate::visibility::{VisEdge, VisibilityGraph};

/// `p` lies in the sub-polygon `P_{k,l}` cut off by the chord `(k, l)`.
///
/// The caller guarantees `p` is inside the polygon and off the chord. A
/// boundary edge cuts off nothing; the closing edge `(0, n-1)` cuts off the
/// whole polygon.
pub fn pocket_contains(poly: &Polygon, k: usize, l: usize, p: Point) -> bool {
    if l == k + 1 {
        return false;
    }
    crossing_parity(&poly.vertices()[k..=l], p)
}

/// Edges `(k, l)` with `i <= k < l <= j`, other than `(i, j)` itself, that
/// lie in the closed disk of the outer circle and outside the open disk of
/// the inner circle.
///
/// Edges inside `P_{i,j}` are exactly the visibility edges between its
/// vertices, so the range test covers that condition.
pub fn reduced_graph(
    poly: &Polygon,
    graph: &VisibilityGraph,
    i: usize,
    j: usize,
    pair: &CirclePair,
    tol: Tolerance,
) -> Vec<VisEdge> {
    graph
        .edges()
        .iter()
        .copied()
        .filter(|e| i <= e.i && e.j <= j && (e.i, e.j) != (i, j))
        .filter(|e| {
            let s = Segment {
                a: poly.vertex(e.i),
                b: poly.vertex(e.j),
            };
            pair.outer.contains_segment(&s, tol) && pair.inner.segment_outside(&s, tol)
        })
        .collect()
}
