//! Shape-quality metrics.
//!
//! Disk aspect ratio: diameter of the minimum circumscribed circle (MCC)
//! over the diameter of the maximum inscribed circle (MIC). Square aspect
//! ratio: side of the smallest enclosing axis-parallel square over the side
//! of the largest contained axis-parallel square. A polygon is α-fat when its
//! aspect ratio is at most α, and α-small when the enclosing square side
//! (square metric) or MCC diameter (disk metric) is at most α.

use std::fmt;
use std::str::FromStr;

use crate::geom::{circumcircle, point_in_polygon, Circle, Location, Point, Polygon, Segment, Tolerance};
use crate::tangent::{tangent_circles, Element, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    Disk,
    Square,
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Disk => "disk",
            Metric::Square => "square",
        })
    }
}

impl FromStr for Metric {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "disk" => Ok(Metric::Disk),
            "square" => Ok(Metric::Square),
            other => Err(format!("unknown metric `{other}` (expected disk or square)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FatnessReport {
    pub mcc: Circle,
    pub mic: Circle,
    pub ar_disk: f64,
    pub sq_out_side: f64,
    pub sq_in_side: f64,
    pub ar_square: f64,
}

impl FatnessReport {
    pub fn compute(poly: &Polygon, tol: Tolerance) -> Self {
        let mcc = min_enclosing_circle(poly, tol);
        let mic = max_inscribed_circle(poly, tol);
        let sq_out_side = enclosing_square_side(poly);
        let sq_in_side = largest_inscribed_square(poly, tol).side;
        FatnessReport {
            mcc,
            mic,
            ar_disk: mcc.diameter() / mic.diameter(),
            sq_out_side,
            sq_in_side,
            ar_square: sq_out_side / sq_in_side,
        }
    }

    pub fn aspect_ratio(&self, metric: Metric) -> f64 {
        match metric {
            Metric::Disk => self.ar_disk,
            Metric::Square => self.ar_square,
        }
    }

    /// Enclosing size used by the smallness predicates.
    pub fn size(&self, metric: Metric) -> f64 {
        match metric {
            Metric::Disk => self.mcc.diameter(),
            Metric::Square => self.sq_out_side,
        }
    }
}

/// Smallest circle containing every vertex (and therefore the polygon).
pub fn min_enclosing_circle(poly: &Polygon, tol: Tolerance) -> Circle {
    enclosing_circle_of(poly.vertices(), tol)
}

/// Incremental minimum enclosing circle over a point set.
///
/// Points are visited in input order, so the result is deterministic. The
/// worst case is cubic, which is irrelevant at the sizes used here.
pub fn enclosing_circle_of(points: &[Point], tol: Tolerance) -> Circle {
    assert!(!points.is_empty(), "enclosing circle of an empty set");
    // Much tighter than geom_eps so the support set stays exact.
    let slack = 1e-12 * points.iter().fold(1.0_f64, |m, p| m.max(p.x.abs()).max(p.y.abs()));
    let inside = |c: &Circle, p: Point| c.center.dist(p) <= c.radius + slack;

    let mut c = Circle::new(points[0], 0.0);
    for i in 1..points.len() {
        if inside(&c, points[i]) {
            continue;
        }
        c = Circle::new(points[i], 0.0);
        for j in 0..i {
            if inside(&c, points[j]) {
                continue;
            }
            c = Circle::new(points[i].midpoint(points[j]), 0.5 * points[i].dist(points[j]));
            for k in 0..j {
                if inside(&c, points[k]) {
                    continue;
                }
                c = circle_from_three(points[i], points[j], points[k], tol);
            }
        }
    }
    c
}

fn circle_from_three(a: Point, b: Point, c: Point, tol: Tolerance) -> Circle {
    match circumcircle(a, b, c, tol) {
        Some(circ) => circ,
        None => {
            // Collinear: the two farthest points span the circle.
            let (p, q) = [(a, b), (a, c), (b, c)]
                .into_iter()
                .max_by(|x, y| x.0.dist(x.1).total_cmp(&y.0.dist(y.1)))
                .unwrap();
            Circle::new(p.midpoint(q), 0.5 * p.dist(q))
        }
    }
}

/// Largest circle contained in the polygon.
///
/// Candidate centers are those of circles tangent to three boundary
/// elements (reflex vertices and edges, edges touched from the inside),
/// plus a few two-contact circles. The candidate with the largest clearance
/// wins, and its radius is reset to the exact boundary distance of its
/// center.
pub fn max_inscribed_circle(poly: &Polygon, tol: Tolerance) -> Circle {
    let n = poly.len();
    let mut elements: Vec<Element> = (0..n)
        .filter(|&i| poly.is_reflex(i, tol))
        .map(|i| Element::Point(poly.vertex(i)))
        .collect();
    elements.extend(poly.edges().map(|e| Element::Segment(e, Side::Left)));

    let mut best: Option<(f64, Point)> = None;
    let mut consider = |center: Point, radius: f64| {
        if !(center.is_finite() && radius > 0.0) {
            return;
        }
        if point_in_polygon(poly, center, tol) != Location::Inside {
            return;
        }
        let clearance = poly.boundary_distance(center);
        if clearance < radius - tol.geom_eps {
            return;
        }
        if best.is_none_or(|(r, _)| clearance > r) {
            best = Some((clearance, center));
        }
    };

    let m = elements.len();
    for a in 0..m {
        for b in (a + 1)..m {
            for c in (b + 1)..m {
                for circ in tangent_circles([&elements[a], &elements[b], &elements[c]], tol) {
                    consider(circ.center, circ.radius);
                }
            }
        }
    }

    // Two-contact candidates.
    for a in 0..m {
        for b in (a + 1)..m {
            for (center, radius) in two_contact_circles(&elements[a], &elements[b]) {
                consider(center, radius);
            }
        }
    }

    let (radius, center) = best.unwrap_or_else(|| grid_fallback(poly, tol));
    Circle::new(center, radius)
}

fn two_contact_circles(a: &Element, b: &Element) -> Vec<(Point, f64)> {
    match (a, b) {
        (Element::Point(p), Element::Point(q)) => vec![(p.midpoint(*q), 0.5 * p.dist(*q))],
        (Element::Point(p), Element::Segment(s, _)) | (Element::Segment(s, _), Element::Point(p)) => {
            let t = s.project(*p);
            if !(0.0..=1.0).contains(&t) {
                return Vec::new();
            }
            let foot = s.a + (s.b - s.a) * t;
            vec![(p.midpoint(foot), 0.5 * p.dist(foot))]
        }
        (Element::Segment(s, _), Element::Segment(t, _)) => {
            let ds = (s.b - s.a) * (1.0 / s.length());
            let dt = (t.b - t.a) * (1.0 / t.length());
            if ds.dot(dt) > -1.0 + 1e-12 {
                return Vec::new();
            }
            // Antiparallel edges facing each other: circles on the midline.
            let sep = (t.a - s.a).cross(ds).abs();
            let t0 = (t.a - s.a).dot(ds);
            let t1 = (t.b - s.a).dot(ds);
            let lo = t0.min(t1).max(0.0);
            let hi = t0.max(t1).min(s.length());
            if lo > hi {
                return Vec::new();
            }
            let normal = ds.perp();
            [lo, 0.5 * (lo + hi), hi]
                .into_iter()
                .map(|u| (s.a + ds * u + normal * (0.5 * sep), 0.5 * sep))
                .collect()
        }
    }
}

fn grid_fallback(poly: &Polygon, tol: Tolerance) -> (f64, Point) {
    let (lo, hi) = poly.bounding_box();
    let steps = 128;
    let mut best = (0.0, poly.vertex(0));
    for ix in 0..=steps {
        for iy in 0..=steps {
            let p = Point::new(
                lo.x + (hi.x - lo.x) * ix as f64 / steps as f64,
                lo.y + (hi.y - lo.y) * iy as f64 / steps as f64,
            );
            if point_in_polygon(poly, p, tol) == Location::Inside {
                let d = poly.boundary_distance(p);
                if d > best.0 {
                    best = (d, p);
                }
            }
        }
    }
    best
}

/// Side of the smallest axis-parallel square enclosing the polygon.
pub fn enclosing_square_side(poly: &Polygon) -> f64 {
    let (lo, hi) = poly.bounding_box();
    (hi.x - lo.x).max(hi.y - lo.y)
}

/// An axis-parallel square given by its lower-left corner and side length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Square {
    pub corner: Point,
    pub side: f64,
}

/// Largest axis-parallel square contained in the polygon.
///
/// Orthogonal polygons are solved exactly by scanning lower-left corners on
/// the grid of vertex coordinates; anything else goes through
/// [`inscribed_square_by_search`].
pub fn largest_inscribed_square(poly: &Polygon, tol: Tolerance) -> Square {
    if poly.is_orthogonal(tol) {
        inscribed_square_orthogonal(poly, tol)
    } else {
        inscribed_square_by_search(poly, tol)
    }
}

/// Closed square lies in the closed polygon. Contact with the boundary is
/// allowed up to `geom_eps`.
pub fn square_fits(poly: &Polygon, sq: Square, tol: Tolerance) -> bool {
    let shrink = tol.geom_eps;
    let center = Point::new(sq.corner.x + 0.5 * sq.side, sq.corner.y + 0.5 * sq.side);
    if point_in_polygon(poly, center, tol) != Location::Inside {
        return false;
    }
    if sq.side <= 2.0 * shrink {
        return true;
    }
    let lo = Point::new(sq.corner.x + shrink, sq.corner.y + shrink);
    let hi = Point::new(sq.corner.x + sq.side - shrink, sq.corner.y + sq.side - shrink);
    !poly.edges().any(|e| segment_hits_box(&e, lo, hi))
}

/// Liang-Barsky clip of a segment against a closed box.
fn segment_hits_box(s: &Segment, lo: Point, hi: Point) -> bool {
    let d = s.b - s.a;
    let mut t0 = 0.0_f64;
    let mut t1 = 1.0_f64;
    for (p, q) in [
        (-d.x, s.a.x - lo.x),
        (d.x, hi.x - s.a.x),
        (-d.y, s.a.y - lo.y),
        (d.y, hi.y - s.a.y),
    ] {
        if p == 0.0 {
            if q < 0.0 {
                return false;
            }
        } else {
            let r = q / p;
            if p < 0.0 {
                t0 = t0.max(r);
            } else {
                t1 = t1.min(r);
            }
            if t0 > t1 {
                return false;
            }
        }
    }
    true
}

fn sorted_unique(mut v: Vec<f64>, tol: Tolerance) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v.dedup_by(|a, b| (*a - *b).abs() <= tol.geom_eps);
    v
}

/// Exact largest inscribed square for orthogonal polygons.
///
/// Any optimal square can be slid left and down until its left side and
/// bottom side rest on vertex coordinates, and growing it from that corner
/// stops when the right or top side reaches a vertex coordinate.
pub fn inscribed_square_orthogonal(poly: &Polygon, tol: Tolerance) -> Square {
    let xs = sorted_unique(poly.vertices().iter().map(|p| p.x).collect(), tol);
    let ys = sorted_unique(poly.vertices().iter().map(|p| p.y).collect(), tol);
    let mut best = Square {
        corner: poly.vertex(0),
        side: 0.0,
    };
    for &x0 in &xs {
        for &y0 in &ys {
            let corner = Point::new(x0, y0);
            let mut sides: Vec<f64> = xs
                .iter()
                .map(|&x| x - x0)
                .chain(ys.iter().map(|&y| y - y0))
                .filter(|&s| s > best.side + tol.geom_eps)
                .collect();
            if sides.is_empty() {
                continue;
            }
            sides = sorted_unique(sides, tol);
            if !square_fits(poly, Square { corner, side: sides[0] }, tol) {
                continue;
            }
            // Largest feasible side by bisection over the monotone predicate.
            let (mut lo, mut hi) = (0usize, sides.len());
            while hi - lo > 1 {
                let mid = (lo + hi) / 2;
                if square_fits(poly, Square { corner, side: sides[mid] }, tol) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            best = Square {
                corner,
                side: sides[lo],
            };
        }
    }
    best
}

/// Largest inscribed square for arbitrary simple polygons: bisection on the
/// side length with an exact feasibility test.
///
/// For a fixed side, the set of feasible squares is a polygonal region whose
/// vertices are squares with two boundary contacts (a square side touching a
/// vertex, or a square corner touching an edge). Feasibility is decided by
/// testing every such two-contact placement.
pub fn inscribed_square_by_search(poly: &Polygon, tol: Tolerance) -> Square {
    let (lo_pt, hi_pt) = poly.bounding_box();
    let mut lo = 0.0;
    let mut hi = (hi_pt.x - lo_pt.x).min(hi_pt.y - lo_pt.y);
    let mut best = Square {
        corner: poly.vertex(0),
        side: 0.0,
    };
    if let Some(sq) = feasible_placement(poly, hi, tol) {
        return sq;
    }
    while hi - lo > tol.geom_eps {
        let mid = 0.5 * (lo + hi);
        match feasible_placement(poly, mid, tol) {
            Some(sq) => {
                lo = mid;
                best = sq;
            }
            None => hi = mid,
        }
    }
    best
}

fn feasible_placement(poly: &Polygon, side: f64, tol: Tolerance) -> Option<Square> {
    let h = 0.5 * side;
    // Constraint lines a*cx + b*cy = c on the square's center.
    let mut lines: Vec<(f64, f64, f64)> = Vec::with_capacity(8 * poly.len());
    for v in poly.vertices() {
        lines.push((1.0, 0.0, v.x + h));
        lines.push((1.0, 0.0, v.x - h));
        lines.push((0.0, 1.0, v.y + h));
        lines.push((0.0, 1.0, v.y - h));
    }
    for e in poly.edges() {
        let dir = e.b - e.a;
        let n = dir.perp() * (1.0 / dir.norm());
        let d = n.dot(e.a);
        for (sx, sy) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
            lines.push((n.x, n.y, d - h * (n.x * sx + n.y * sy)));
        }
    }
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            let (a1, b1, c1) = lines[i];
            let (a2, b2, c2) = lines[j];
            let det = a1 * b2 - a2 * b1;
            if det.abs() < 1e-12 {
                continue;
            }
            let cx = (c1 * b2 - c2 * b1) / det;
            let cy = (a1 * c2 - a2 * c1) / det;
            let sq = Square {
                corner: Point::new(cx - h, cy - h),
                side,
            };
            if square_fits(poly, sq, tol) {
                return Some(sq);
            }
        }
    }
    None
}

pub fn ar_disk(poly: &Polygon, tol: Tolerance) -> f64 {
    min_enclosing_circle(poly, tol).diameter() / max_inscribed_circle(poly, tol).diameter()
}

pub fn ar_square(poly: &Polygon, tol: Tolerance) -> f64 {
    enclosing_square_side(poly) / largest_inscribed_square(poly, tol).side
}

pub fn aspect_ratio(poly: &Polygon, metric: Metric, tol: Tolerance) -> f64 {
    match metric {
        Metric::Disk => ar_disk(poly, tol),
        Metric::Square => ar_square(poly, tol),
    }
}

pub fn is_alpha_fat(poly: &Polygon, alpha: f64, metric: Metric, tol: Tolerance) -> bool {
    aspect_ratio(poly, metric, tol) <= alpha + tol.geom_eps
}

pub fn is_alpha_small(poly: &Polygon, alpha: f64, metric: Metric, tol: Tolerance) -> bool {
    let size = match metric {
        Metric::Disk => min_enclosing_circle(poly, tol).diameter(),
        Metric::Square => enclosing_square_side(poly),
    };
    size <= alpha + tol.geom_eps
}

#[cfg(test)]
mod tests {
    use super::*;

    const T: Tolerance = Tolerance {
        eps: 1e-9,
        geom_eps: 1e-7,
    };

    fn poly(pts: &[(f64, f64)]) -> Polygon {
        Polygon::new(pts.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    fn rect(a: f64, b: f64) -> Polygon {
        poly(&[(0., 0.), (a, 0.), (a, b), (0., b)])
    }

    fn right_triangle() -> Polygon {
        poly(&[(0., 0.), (1., 0.), (0., 1.)])
    }

    /// Dense-grid estimate of the largest clearance, independent of the
    /// tangent-circle enumeration.
    fn grid_clearance(p: &Polygon, steps: usize) -> f64 {
        let (lo, hi) = p.bounding_box();
        let mut best: f64 = 0.0;
        for ix in 0..=steps {
            for iy in 0..=steps {
                let q = Point::new(
                    lo.x + (hi.x - lo.x) * ix as f64 / steps as f64,
                    lo.y + (hi.y - lo.y) * iy as f64 / steps as f64,
                );
                if point_in_polygon(p, q, T) == Location::Inside {
                    best = best.max(p.boundary_distance(q));
                }
            }
        }
        best
    }

    #[test]
    fn mcc_examples() {
        let c = min_enclosing_circle(&rect(1., 1.), T);
        assert!(c.center.dist(Point::new(0.5, 0.5)) < 1e-12);
        assert!((c.diameter() - 2f64.sqrt()).abs() < 1e-12);
        assert!((min_enclosing_circle(&rect(1., 4.), T).diameter() - 17f64.sqrt()).abs() < 1e-9);
        assert!((min_enclosing_circle(&rect(3., 3.), T).diameter() - 18f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn mic_examples() {
        let c = max_inscribed_circle(&rect(1., 1.), T);
        assert!((c.radius - 0.5).abs() < 1e-12);
        assert!(c.center.dist(Point::new(0.5, 0.5)) < 1e-12);

        let tri = right_triangle();
        let want = (2.0 - 2f64.sqrt()) / 2.0;
        let c = max_inscribed_circle(&tri, T);
        assert!((c.radius - want).abs() < 1e-9);
        // the grid oracle can only undershoot
        let g = grid_clearance(&tri, 400);
        assert!(g <= c.radius + 1e-9 && c.radius - g < 5e-3);

        assert!((max_inscribed_circle(&rect(1., 3.), T).radius - 0.5).abs() < 1e-12);
    }

    #[test]
    fn ar_disk_examples() {
        assert!((ar_disk(&rect(1., 1.), T) - 2f64.sqrt()).abs() < 1e-9);
        assert!((ar_disk(&rect(1., 4.), T) - 17f64.sqrt()).abs() < 1e-9);
        assert!((ar_disk(&right_triangle(), T) - (2f64.sqrt() + 1.0)).abs() < 1e-9);
    }

    #[test]
    fn ar_square_examples() {
        assert!((ar_square(&rect(1., 1.), T) - 1.0).abs() < 1e-12);
        assert!((ar_square(&rect(5., 6.), T) - 1.2).abs() < 1e-12);
        // largest square in the right triangle has side 1/2
        assert!((ar_square(&right_triangle(), T) - 2.0).abs() < 1e-6);
    }

    #[test]
    fn orthogonal_and_search_routes_agree() {
        let shapes = [
            rect(5., 6.),
            poly(&[(0., 0.), (6., 0.), (6., 4.), (5., 4.), (5., 6.), (0., 6.)]),
            poly(&[(0., 0.), (3., 0.), (3., 1.), (1., 1.), (1., 3.), (0., 3.)]),
            poly(&[(0., 0.), (4., 0.), (4., 4.), (3., 4.), (3., 1.), (1., 1.), (1., 4.), (0., 4.)]),
        ];
        for s in &shapes {
            let exact = inscribed_square_orthogonal(s, T);
            let searched = inscribed_square_by_search(s, T);
            assert!(
                (exact.side - searched.side).abs() < 1e-6,
                "{} vs {}",
                exact.side,
                searched.side
            );
            assert!(square_fits(s, exact, T));
        }
    }

    #[test]
    fn predicates() {
        assert!(is_alpha_fat(&rect(1., 1.), 2f64.sqrt(), Metric::Disk, T));
        assert!(!is_alpha_small(&rect(1., 4.), 13f64.sqrt(), Metric::Disk, T));
        assert!(is_alpha_small(&rect(1., 3.), 13f64.sqrt(), Metric::Disk, T));
        assert!(is_alpha_small(&rect(1., 3.), 3.0, Metric::Square, T));
        assert!(is_alpha_fat(&rect(1., 2.), 2.0, Metric::Square, T));
        assert!(!is_alpha_fat(&rect(1., 2.), 1.9, Metric::Square, T));
    }

    #[test]
    fn mcc_support_points() {
        for p in [rect(1., 4.), right_triangle(), poly(&[(0., 0.), (4., 1.), (5., 3.), (1., 4.), (-1., 2.)])] {
            let c = min_enclosing_circle(&p, T);
            let on = p
                .vertices()
                .iter()
                .filter(|v| (v.dist(c.center) - c.radius).abs() <= T.geom_eps)
                .count();
            assert!(on >= 2);
            assert!(p.vertices().iter().all(|v| v.dist(c.center) <= c.radius + T.geom_eps));
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn rectangle_closed_forms(a in 0.1..20.0f64, b in 0.1..20.0f64) {
                let r = rect(a, b);
                let short = a.min(b);
                prop_assert!((ar_disk(&r, T) - a.hypot(b) / short).abs() < 1e-9);
                prop_assert!((ar_square(&r, T) - a.max(b) / short).abs() < 1e-9);
            }

            #[test]
            fn scaling_invariance(k in 0.2..5.0f64) {
                let base = poly(&[(0., 0.), (6., 0.), (6., 4.), (5., 4.), (5., 6.), (0., 6.)]);
                let scaled = base.scaled(k).unwrap();
                let (d0, d1) = (ar_disk(&base, T), ar_disk(&scaled, T));
                let (s0, s1) = (ar_square(&base, T), ar_square(&scaled, T));
                prop_assert!((d0 - d1).abs() <= 1e-6 * d0);
                prop_assert!((s0 - s1).abs() <= 1e-6 * s0);
            }
        }
    }
}
