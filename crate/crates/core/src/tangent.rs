//! Circles tangent to three elements, where an element is a point or a
//! segment. Used both for maximum inscribed circles and for the inner
//! candidate circles of the partition DP.
//!
//! A circle is tangent to a point when the point lies on it, and tangent to a
//! segment when it touches the supporting line at a foot point that lies on
//! the segment. Each contact pattern (three points, two points and a line,
//! one point and two lines, three lines) reduces to linear constraints in
//! `(cx, cy, r)` plus at most one quadratic.

use crate::geom::{circumcircle, Circle, Point, Segment, Tolerance};

/// Which side of a segment the circle center may lie on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Left of the directed segment `a -> b` (the interior side of a
    /// counterclockwise polygon edge).
    Left,
    Either,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Element {
    Point(Point),
    Segment(Segment, Side),
}

impl Element {
    /// Distance from `p` to the element.
    pub fn distance_to(&self, p: Point) -> f64 {
        match self {
            Element::Point(q) => q.dist(p),
            Element::Segment(s, _) => s.distance_to(p),
        }
    }

    pub fn is_tangent(&self, circle: &Circle, tol: Tolerance) -> bool {
        let slack = tol.geom_eps * (1.0 + circle.radius);
        match self {
            Element::Point(q) => (q.dist(circle.center) - circle.radius).abs() <= slack,
            Element::Segment(s, side) => {
                let (n, d) = unit_line(s);
                let signed = n.dot(circle.center) - d;
                let dist_ok = match side {
                    Side::Left => (signed - circle.radius).abs() <= slack,
                    Side::Either => (signed.abs() - circle.radius).abs() <= slack,
                };
                let t = s.project(circle.center);
                let margin = slack / s.length();
                dist_ok && t >= -margin && t <= 1.0 + margin
            }
        }
    }
}

/// Left unit normal and offset of the supporting line: `n . x = d`.
fn unit_line(s: &Segment) -> (Point, f64) {
    let dir = s.b - s.a;
    let n = dir.perp() * (1.0 / dir.norm());
    (n, n.dot(s.a))
}

type Row = [f64; 3];

fn dot3(a: Row, b: Row) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross3(a: Row, b: Row) -> Row {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm3(a: Row) -> f64 {
    dot3(a, a).sqrt()
}

/// Rows `s * (n.x, n.y, -1) . (cx, cy, r) = s * d` for every admissible sign.
fn line_rows(s: &Segment, side: Side) -> Vec<(Row, f64)> {
    let (n, d) = unit_line(s);
    let signs: &[f64] = match side {
        Side::Left => &[1.0],
        Side::Either => &[1.0, -1.0],
    };
    signs
        .iter()
        .map(|&sg| ([sg * n.x, sg * n.y, -1.0], sg * d))
        .collect()
}

fn solve3(rows: [(Row, f64); 3]) -> Option<Row> {
    let [(a, ba), (b, bb), (c, bc)] = rows;
    let det = dot3(a, cross3(b, c));
    let scale = norm3(a) * norm3(b) * norm3(c);
    if det.abs() <= 1e-12 * scale {
        return None;
    }
    // Cramer's rule via the adjugate: x = (ba (b x c) + bb (c x a) + bc (a x b)) / det
    let bc_ = cross3(b, c);
    let ca = cross3(c, a);
    let ab = cross3(a, b);
    Some([
        (ba * bc_[0] + bb * ca[0] + bc * ab[0]) / det,
        (ba * bc_[1] + bb * ca[1] + bc * ab[1]) / det,
        (ba * bc_[2] + bb * ca[2] + bc * ab[2]) / det,
    ])
}

/// Solutions of two linear rows plus `|c - p|^2 = r^2`.
fn solve2_with_point(r1: (Row, f64), r2: (Row, f64), p: Point) -> Vec<Row> {
    let (a, ba) = r1;
    let (b, bb) = r2;
    let w = cross3(a, b);
    if norm3(w) <= 1e-12 * norm3(a) * norm3(b) {
        return Vec::new();
    }
    // Minimum-norm particular solution u0 = A^T (A A^T)^-1 rhs.
    let g11 = dot3(a, a);
    let g12 = dot3(a, b);
    let g22 = dot3(b, b);
    let gdet = g11 * g22 - g12 * g12;
    let l1 = (ba * g22 - bb * g12) / gdet;
    let l2 = (bb * g11 - ba * g12) / gdet;
    let u0 = [
        l1 * a[0] + l2 * b[0],
        l1 * a[1] + l2 * b[1],
        l1 * a[2] + l2 * b[2],
    ];
    let dx = u0[0] - p.x;
    let dy = u0[1] - p.y;
    let qa = w[0] * w[0] + w[1] * w[1] - w[2] * w[2];
    let qb = 2.0 * (dx * w[0] + dy * w[1] - u0[2] * w[2]);
    let qc = dx * dx + dy * dy - u0[2] * u0[2];
    let at = |t: f64| [u0[0] + t * w[0], u0[1] + t * w[1], u0[2] + t * w[2]];
    let wn = w[0] * w[0] + w[1] * w[1] + w[2] * w[2];
    if qa.abs() <= 1e-12 * wn {
        if qb.abs() <= 1e-300 {
            return Vec::new();
        }
        return vec![at(-qc / qb)];
    }
    let disc = qb * qb - 4.0 * qa * qc;
    if disc < -1e-12 * qb * qb.max(1.0) {
        return Vec::new();
    }
    let sq = disc.max(0.0).sqrt();
    // Numerically stable pair of roots.
    let q = -0.5 * (qb + qb.signum() * sq);
    let mut ts = Vec::with_capacity(2);
    if q != 0.0 {
        ts.push(q / qa);
        ts.push(qc / q);
    } else {
        ts.push(0.0);
    }
    ts.into_iter().map(at).collect()
}

/// All circles of positive radius tangent to the three elements.
///
/// Tangency to a segment requires the foot of the perpendicular from the
/// center to fall on the segment; contacts at a segment's endpoint are
/// covered by passing the endpoint as a point element.
pub fn tangent_circles(elements: [&Element; 3], tol: Tolerance) -> Vec<Circle> {
    let mut points = Vec::with_capacity(3);
    let mut segments = Vec::with_capacity(3);
    for e in elements {
        match e {
            Element::Point(p) => points.push(*p),
            Element::Segment(s, side) => segments.push((*s, *side)),
        }
    }

    let raw: Vec<Row> = match (points.len(), segments.len()) {
        (3, 0) => circumcircle(points[0], points[1], points[2], tol)
            .map(|c| vec![[c.center.x, c.center.y, c.radius]])
            .unwrap_or_default(),
        (2, 1) => {
            let (p, q) = (points[0], points[1]);
            let d = q - p;
            let bisector = ([2.0 * d.x, 2.0 * d.y, 0.0], q.norm2() - p.norm2());
            line_rows(&segments[0].0, segments[0].1)
                .into_iter()
                .flat_map(|row| solve2_with_point(bisector, row, p))
                .collect()
        }
        (1, 2) => {
            let p = points[0];
            let mut out = Vec::new();
            for r1 in line_rows(&segments[0].0, segments[0].1) {
                for r2 in line_rows(&segments[1].0, segments[1].1) {
                    out.extend(solve2_with_point(r1, r2, p));
                }
            }
            out
        }
        (0, 3) => {
            let mut out = Vec::new();
            for r1 in line_rows(&segments[0].0, segments[0].1) {
                for r2 in line_rows(&segments[1].0, segments[1].1) {
                    for r3 in line_rows(&segments[2].0, segments[2].1) {
                        out.extend(solve3([r1, r2, r3]));
                    }
                }
            }
            out
        }
        _ => unreachable!("three elements"),
    };

    raw.into_iter()
        .filter(|u| u.iter().all(|v| v.is_finite()) && u[2] > tol.geom_eps)
        .map(|u| Circle::new(Point::new(u[0], u[1]), u[2]))
        .filter(|c| elements.iter().all(|e| e.is_tangent(c, tol)))
        .collect()
}

/// Removes circles that coincide within `geom_eps`, keeping first occurrences
/// in their original relative order.
pub fn dedup_circles(circles: Vec<Circle>, tol: Tolerance) -> Vec<Circle> {
    let mut order: Vec<usize> = (0..circles.len()).collect();
    order.sort_by(|&a, &b| circles[a].radius.total_cmp(&circles[b].radius).then(a.cmp(&b)));
    let mut keep = vec![false; circles.len()];
    let mut kept_sorted: Vec<usize> = Vec::new();
    for &idx in &order {
        let c = circles[idx];
        let dup = kept_sorted
            .iter()
            .rev()
            .take_while(|&&k| c.radius - circles[k].radius <= tol.geom_eps)
            .any(|&k| circles[k].approx_eq(&c, tol));
        if !dup {
            keep[idx] = true;
            kept_sorted.push(idx);
        }
    }
    circles
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const T: Tolerance = Tolerance {
        eps: 1e-9,
        geom_eps: 1e-7,
    };

    fn seg(ax: f64, ay: f64, bx: f64, by: f64, side: Side) -> Element {
        Element::Segment(Segment::new(Point::new(ax, ay), Point::new(bx, by), T).unwrap(), side)
    }

    #[test]
    fn equilateral_incircle_from_three_sides() {
        let h = 3f64.sqrt();
        let e = [
            seg(0., 0., 2., 0., Side::Either),
            seg(2., 0., 1., h, Side::Either),
            seg(1., h, 0., 0., Side::Either),
        ];
        let circles = tangent_circles([&e[0], &e[1], &e[2]], T);
        // excircles touch the extensions of two sides, so only the incircle survives
        assert_eq!(circles.len(), 1);
        let r = 2.0 / (2.0 * 3f64.sqrt());
        assert!((circles[0].radius - r).abs() < 1e-12);
        assert!(circles[0].center.dist(Point::new(1.0, h / 3.0)) < 1e-12);
    }

    #[test]
    fn square_sides_give_half_unit_circle() {
        let sides = [
            seg(0., 0., 1., 0., Side::Either),
            seg(1., 0., 1., 1., Side::Either),
            seg(1., 1., 0., 1., Side::Either),
            seg(0., 1., 0., 0., Side::Either),
        ];
        for (a, b, c) in [(0, 1, 2), (1, 2, 3), (2, 3, 0), (3, 0, 1)] {
            let circles = tangent_circles([&sides[a], &sides[b], &sides[c]], T);
            assert!(!circles.is_empty());
            for circ in circles {
                assert!((circ.radius - 0.5).abs() < 1e-12, "{circ:?}");
            }
        }
    }

    #[test]
    fn three_points_is_circumcircle() {
        let pts = [
            Element::Point(Point::new(0., 0.)),
            Element::Point(Point::new(2., 0.)),
            Element::Point(Point::new(1., 1.)),
        ];
        let circles = tangent_circles([&pts[0], &pts[1], &pts[2]], T);
        assert_eq!(circles.len(), 1);
        assert!(circles[0].center.dist(Point::new(1., 0.)) < 1e-12);
        assert!((circles[0].radius - 1.0).abs() < 1e-12);
    }

    #[test]
    fn corner_and_reflex_vertex() {
        // Tangent to x = 0 and y = 0 near the origin and through (5, 4): r = 9 - sqrt(40).
        let a = seg(0., 6., 0., 0., Side::Left);
        let b = seg(0., 0., 6., 0., Side::Left);
        let p = Element::Point(Point::new(5., 4.));
        let circles = tangent_circles([&a, &b, &p], T);
        let want = 9.0 - 40f64.sqrt();
        assert!(circles.iter().any(|c| (c.radius - want).abs() < 1e-12), "{circles:?}");
    }

    #[test]
    fn two_points_and_line() {
        // Points (0,1) and (2,1), tangent to y = 0 from above: center (1, 1), r = 1.
        let a = Element::Point(Point::new(0., 1.));
        let b = Element::Point(Point::new(2., 1.));
        let l = seg(-5., 0., 5., 0., Side::Left);
        let circles = tangent_circles([&a, &b, &l], T);
        assert!(circles
            .iter()
            .any(|c| (c.radius - 1.0).abs() < 1e-12 && c.center.dist(Point::new(1., 1.)) < 1e-12));
    }

    #[test]
    fn dedup_merges_close_circles() {
        let c = Circle::new(Point::new(1., 1.), 2.0);
        let d = Circle::new(Point::new(1. + 1e-9, 1.), 2.0 + 1e-9);
        let e = Circle::new(Point::new(5., 1.), 2.0);
        let out = dedup_circles(vec![c, d, e], T);
        assert_eq!(out, vec![c, e]);
    }
}
