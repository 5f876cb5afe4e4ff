//! Candidate circles for a DP edge `(i, j)`.
//!
//! Outer candidates `C` pass through three vertices of `P_{i,j}` or have two
//! of them as a diameter. Inner candidates `I` are tangent to three elements
//! of the visibility graph, where an element is a vertex or an edge.

use rayon::prelude::*;

use crate::geom::{circumcircle, diametral_circle, point_in_polygon, Circle, Location, Polygon, Segment, Tolerance};
use crate::tangent::{dedup_circles, tangent_circles, Element, Side};
use crate::visibility::VisibilityGraph;

/// An outer and an inner candidate for the same edge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CirclePair {
    pub outer: Circle,
    pub inner: Circle,
    pub ratio: f64,
}

impl CirclePair {
    pub fn new(outer: Circle, inner: Circle) -> Self {
        CirclePair {
            outer,
            inner,
            ratio: outer.radius / inner.radius,
        }
    }
}

/// Circumcircles of vertex triples and diametral circles of vertex pairs,
/// drawn from vertices `i..=j`, that contain the segment `(i, j)`.
pub fn enumerate_outer_circles(poly: &Polygon, i: usize, j: usize, tol: Tolerance) -> Vec<Circle> {
    let verts = &poly.vertices()[i..=j];
    let chord = Segment {
        a: poly.vertex(i),
        b: poly.vertex(j),
    };
    let m = verts.len();
    let mut out = Vec::new();
    for a in 0..m {
        for b in (a + 1)..m {
            if let Ok(c) = diametral_circle(verts[a], verts[b], tol) {
                out.push(c);
            }
            for c in (b + 1)..m {
                if let Some(circ) = circumcircle(verts[a], verts[b], verts[c], tol) {
                    out.push(circ);
                }
            }
        }
    }
    out.retain(|c| c.contains_segment(&chord, tol));
    dedup_circles(out, tol)
}

/// Tangency elements: every vertex, then every visibility edge.
pub fn elements(poly: &Polygon, graph: &VisibilityGraph) -> Vec<Element> {
    poly.vertices()
        .iter()
        .map(|&p| Element::Point(p))
        .chain(graph.edges().iter().map(|e| {
            Element::Segment(
                Segment {
                    a: poly.vertex(e.i),
                    b: poly.vertex(e.j),
                },
                Side::Either,
            )
        }))
        .collect()
}

/// Every circle tangent to three elements, deduplicated. `keep` filters
/// candidates before deduplication.
pub fn tangent_pool<F>(elems: &[Element], tol: Tolerance, keep: F) -> Vec<Circle>
where
    F: Fn(&Circle) -> bool + Sync,
{
    let m = elems.len();
    let raw: Vec<Circle> = (0..m)
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut local = Vec::new();
            for b in (a + 1)..m {
                for c in (b + 1)..m {
                    local.extend(
                        tangent_circles([&elems[a], &elems[b], &elems[c]], tol)
                            .into_iter()
                            .filter(|circ| keep(circ)),
                    );
                }
            }
            local
        })
        .collect();
    dedup_circles(raw, tol)
}

/// Inner candidates for `(i, j)`: circles tangent to three elements of the
/// visibility graph with the segment `(i, j)` outside their open disk.
pub fn enumerate_inner_circles(
    poly: &Polygon,
    graph: &VisibilityGraph,
    i: usize,
    j: usize,
    tol: Tolerance,
) -> Vec<Circle> {
    let chord = Segment {
        a: poly.vertex(i),
        b: poly.vertex(j),
    };
    tangent_pool(&elements(poly, graph), tol, |c| c.segment_outside(&chord, tol))
}

/// The subset of inner candidates the solver works with: disks that fit in
/// the polygon. Any inner circle of a piece lies in the polygon, so nothing
/// else can certify a piece.
pub fn inner_pool(poly: &Polygon, graph: &VisibilityGraph, tol: Tolerance) -> Vec<Circle> {
    let fits = |c: &Circle| {
        point_in_polygon(poly, c.center, tol) == Location::Inside
            && poly.boundary_distance(c.center) >= c.radius - tol.geom_eps
    };
    tangent_pool(&elements(poly, graph), tol, fits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;

    const T: Tolerance = Tolerance {
        eps: 1e-9,
        geom_eps: 1e-7,
    };

    fn poly(pts: &[(f64, f64)]) -> Polygon {
        Polygon::new(pts.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    #[test]
    fn triangle_outer_candidates_include_circumcircle() {
        let p = poly(&[(0., 0.), (4., 0.), (1., 2.)]);
        let cands = enumerate_outer_circles(&p, 0, 2, T);
        let circ = circumcircle(p.vertex(0), p.vertex(1), p.vertex(2), T).unwrap();
        assert!(cands.iter().any(|c| c.approx_eq(&circ, T)));
        let chord = Segment { a: p.vertex(0), b: p.vertex(2) };
        assert!(cands.iter().all(|c| c.contains_segment(&chord, T)));
        // brute force: the diametral circle on (0,1) misses vertex 2? it must
        // still be listed iff it contains the chord
        let d01 = diametral_circle(p.vertex(0), p.vertex(1), T).unwrap();
        assert_eq!(cands.iter().any(|c| c.approx_eq(&d01, T)), d01.contains_segment(&chord, T));
    }

    #[test]
    fn square_diagonal_gets_its_mcc() {
        let p = poly(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]);
        let cands = enumerate_outer_circles(&p, 0, 2, T);
        let mcc = Circle::new(Point::new(0.5, 0.5), 0.5 * 2f64.sqrt());
        assert!(cands.iter().any(|c| c.approx_eq(&mcc, T)));
    }

    #[test]
    fn cocircular_pentagon_dedups() {
        let pts: Vec<(f64, f64)> = (0..5)
            .map(|k| {
                let t = 2.0 * std::f64::consts::PI * k as f64 / 5.0;
                (t.cos(), t.sin())
            })
            .collect();
        let p = poly(&pts);
        let cands = enumerate_outer_circles(&p, 0, 4, T);
        let unit = Circle::new(Point::new(0.0, 0.0), 1.0);
        assert_eq!(cands.iter().filter(|c| c.approx_eq(&unit, T)).count(), 1);
        // no two survivors coincide
        for a in 0..cands.len() {
            for b in (a + 1)..cands.len() {
                assert!(!cands[a].approx_eq(&cands[b], T));
            }
        }
    }

    #[test]
    fn equilateral_triangle_inner_candidate_is_incircle() {
        let h = 3f64.sqrt();
        let p = poly(&[(0., 0.), (2., 0.), (1., h)]);
        let g = VisibilityGraph::build(&p, T);
        let pool = inner_pool(&p, &g, T);
        assert_eq!(pool.len(), 1);
        assert!((pool[0].radius - 1.0 / h).abs() < 1e-12);
        let listed = enumerate_inner_circles(&p, &g, 0, 2, T);
        assert!(listed.iter().any(|c| c.approx_eq(&pool[0], T)));
    }

    #[test]
    fn unit_square_inner_candidates() {
        let p = poly(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]);
        let g = VisibilityGraph::build(&p, T);
        let pool = inner_pool(&p, &g, T);
        let half = Circle::new(Point::new(0.5, 0.5), 0.5);
        assert!(pool.iter().any(|c| c.approx_eq(&half, T)));
        assert!(pool.iter().all(|c| c.radius <= 0.5 + T.geom_eps));
    }
}
