//! Planar primitives shared by every other module: points, segments, simple
//! polygons, circles and the tolerance-aware predicates built on them.
//!
//! All predicates use a single [`Tolerance`]. `eps` is a relative threshold
//! for sign tests (orientation, collinearity); `geom_eps` is an absolute
//! threshold for distance comparisons involving circles.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

/// Environment variable that overrides [`Tolerance::geom_eps`].
pub const GEOM_EPS_ENV: &str = "FATCUT_EPS";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// Relative threshold for orientation and collinearity tests.
    pub eps: f64,
    /// Absolute threshold for tangency and containment involving circles.
    pub geom_eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps: 1e-9,
            geom_eps: 1e-7,
        }
    }
}

impl Tolerance {
    pub fn new(eps: f64, geom_eps: f64) -> Result<Self> {
        if !(eps > 0.0 && eps < geom_eps && geom_eps < 1.0) {
            return Err(Error::InvalidTolerance { eps, geom_eps });
        }
        Ok(Tolerance { eps, geom_eps })
    }

    /// The default tolerance, with `geom_eps` taken from `FATCUT_EPS` when set.
    pub fn from_env() -> Result<Self> {
        let mut tol = Tolerance::default();
        if let Ok(raw) = std::env::var(GEOM_EPS_ENV) {
            let geom_eps: f64 = raw.trim().parse().map_err(|_| Error::InvalidTolerance {
                eps: tol.eps,
                geom_eps: f64::NAN,
            })?;
            tol = Tolerance::new(tol.eps, geom_eps)?;
        }
        Ok(tol)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm2(self) -> f64 {
        self.dot(self)
    }

    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    /// Counterclockwise perpendicular.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point, tol: Tolerance) -> Result<Self> {
        if a.dist(b) <= tol.eps * scale_of(&[a, b]) {
            return Err(Error::DegenerateSegment);
        }
        Ok(Segment { a, b })
    }

    pub fn length(&self) -> f64 {
        self.a.dist(self.b)
    }

    pub fn midpoint(&self) -> Point {
        self.a.midpoint(self.b)
    }

    /// Parameter of the orthogonal projection of `p` onto the supporting line,
    /// 0 at `a` and 1 at `b`.
    pub fn project(&self, p: Point) -> f64 {
        let d = self.b - self.a;
        (p - self.a).dot(d) / d.norm2()
    }

    pub fn closest_point(&self, p: Point) -> Point {
        let t = self.project(p).clamp(0.0, 1.0);
        self.a + (self.b - self.a) * t
    }

    pub fn distance_to(&self, p: Point) -> f64 {
        p.dist(self.closest_point(p))
    }
}

/// Magnitude used to turn relative tolerances into absolute ones.
fn scale_of(points: &[Point]) -> f64 {
    points
        .iter()
        .fold(1.0_f64, |m, p| m.max(p.x.abs()).max(p.y.abs()))
}

/// Sign of the turn `p -> q -> r`: `1` counterclockwise, `-1` clockwise, `0`
/// collinear.
///
/// The determinant is compared against `eps * |q - p| * |r - p|`, i.e. the
/// test thresholds the sine of the angle at `p`, which makes it invariant
/// under uniform scaling.
pub fn orientation(p: Point, q: Point, r: Point, tol: Tolerance) -> i8 {
    let u = q - p;
    let v = r - p;
    let det = u.cross(v);
    let bound = tol.eps * u.norm() * v.norm();
    if det > bound {
        1
    } else if det < -bound {
        -1
    } else {
        0
    }
}

/// `p` lies on the closed segment `s` (within tolerance).
pub fn on_segment(s: &Segment, p: Point, tol: Tolerance) -> bool {
    let len = s.length();
    let slack = tol.eps * scale_of(&[s.a, s.b, p]);
    if s.distance_to(p) > slack.max(tol.eps * len) {
        return false;
    }
    let t = s.project(p);
    t >= -slack / len && t <= 1.0 + slack / len
}

/// The two closed segments share at least one point.
pub fn segments_intersect(s: &Segment, t: &Segment, tol: Tolerance) -> bool {
    let o1 = orientation(s.a, s.b, t.a, tol);
    let o2 = orientation(s.a, s.b, t.b, tol);
    let o3 = orientation(t.a, t.b, s.a, tol);
    let o4 = orientation(t.a, t.b, s.b, tol);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    on_segment(s, t.a, tol) || on_segment(s, t.b, tol) || on_segment(t, s.a, tol) || on_segment(t, s.b, tol)
}

/// Interiors cross at a single point that is not an endpoint of either.
pub fn segments_cross_properly(s: &Segment, t: &Segment, tol: Tolerance) -> bool {
    let o1 = orientation(s.a, s.b, t.a, tol);
    let o2 = orientation(s.a, s.b, t.b, tol);
    let o3 = orientation(t.a, t.b, s.a, tol);
    let o4 = orientation(t.a, t.b, s.b, tol);
    o1 * o2 < 0 && o3 * o4 < 0
}

pub fn segment_distance(s: &Segment, t: &Segment, tol: Tolerance) -> f64 {
    if segments_intersect(s, t, tol) {
        return 0.0;
    }
    s.distance_to(t.a)
        .min(s.distance_to(t.b))
        .min(t.distance_to(s.a))
        .min(t.distance_to(s.b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Self {
        debug_assert!(radius >= 0.0);
        Circle { center, radius }
    }

    pub fn diameter(&self) -> f64 {
        2.0 * self.radius
    }

    /// `p` lies in the closed disk, with slack `geom_eps`.
    pub fn contains(&self, p: Point, tol: Tolerance) -> bool {
        self.center.dist(p) <= self.radius + tol.geom_eps
    }

    /// A segment lies in a disk iff both endpoints do.
    pub fn contains_segment(&self, s: &Segment, tol: Tolerance) -> bool {
        self.contains(s.a, tol) && self.contains(s.b, tol)
    }

    /// The segment does not enter the open disk (tangency allowed).
    pub fn segment_outside(&self, s: &Segment, tol: Tolerance) -> bool {
        s.distance_to(self.center) >= self.radius - tol.geom_eps
    }

    pub fn contains_circle(&self, other: &Circle, tol: Tolerance) -> bool {
        self.center.dist(other.center) + other.radius <= self.radius + tol.geom_eps
    }

    pub fn approx_eq(&self, other: &Circle, tol: Tolerance) -> bool {
        (self.radius - other.radius).abs() <= tol.geom_eps
            && self.center.dist(other.center) <= tol.geom_eps
    }
}

/// Circle through three points; `None` when they are collinear.
pub fn circumcircle(p: Point, q: Point, r: Point, tol: Tolerance) -> Option<Circle> {
    if orientation(p, q, r, tol) == 0 {
        return None;
    }
    let b = q - p;
    let c = r - p;
    let d = 2.0 * b.cross(c);
    let ux = (c.y * b.norm2() - b.y * c.norm2()) / d;
    let uy = (b.x * c.norm2() - c.x * b.norm2()) / d;
    let center = p + Point::new(ux, uy);
    // Average the three distances to damp rounding in the radius.
    let radius = (center.dist(p) + center.dist(q) + center.dist(r)) / 3.0;
    Some(Circle::new(center, radius))
}

/// Circle whose diameter is the segment `pq`.
pub fn diametral_circle(p: Point, q: Point, tol: Tolerance) -> Result<Circle> {
    let seg = Segment::new(p, q, tol)?;
    Ok(Circle::new(seg.midpoint(), 0.5 * seg.length()))
}

/// A simple polygon with counterclockwise vertex order.
///
/// Collinear consecutive vertices are allowed; repeated consecutive vertices
/// are not.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    /// Validates and wraps a counterclockwise vertex cycle.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        Self::with_tolerance(vertices, Tolerance::default())
    }

    pub fn with_tolerance(vertices: Vec<Point>, tol: Tolerance) -> Result<Self> {
        let poly = Self::validated(vertices, tol)?;
        if poly.signed_area() <= 0.0 {
            return Err(Error::Clockwise);
        }
        Ok(poly)
    }

    /// Like [`Polygon::new`] but accepts clockwise input by reversing it.
    pub fn new_any_orientation(vertices: Vec<Point>) -> Result<Self> {
        let mut poly = Self::validated(vertices, Tolerance::default())?;
        if poly.signed_area() < 0.0 {
            poly.vertices.reverse();
        }
        Ok(poly)
    }

    fn validated(vertices: Vec<Point>, tol: Tolerance) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        if let Some(index) = vertices.iter().position(|p| !p.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        let scale = scale_of(&vertices);
        for i in 0..n {
            let j = (i + 1) % n;
            if vertices[i].dist(vertices[j]) <= tol.eps * scale {
                return Err(Error::DuplicateVertex(i));
            }
        }
        let poly = Polygon { vertices };
        poly.check_simple(tol)?;
        if poly.signed_area().abs() <= tol.eps * scale * scale {
            return Err(Error::ZeroArea);
        }
        Ok(poly)
    }

    fn check_simple(&self, tol: Tolerance) -> Result<()> {
        let n = self.len();
        for i in 0..n {
            let ei = self.edge(i);
            // Adjacent edges share a vertex; they must not fold back onto each other.
            let next = self.edge((i + 1) % n);
            if orientation(ei.a, ei.b, next.b, tol) == 0
                && (ei.b - ei.a).dot(next.b - next.a) < 0.0
            {
                return Err(Error::SelfIntersection(i, (i + 1) % n));
            }
            for j in (i + 2)..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                if segments_intersect(&ei, &self.edge(j), tol) {
                    return Err(Error::SelfIntersection(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i % self.len()]
    }

    /// Edge from vertex `i` to vertex `i + 1` (cyclically).
    pub fn edge(&self, i: usize) -> Segment {
        let n = self.len();
        Segment {
            a: self.vertices[i % n],
            b: self.vertices[(i + 1) % n],
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        (0..self.len()).map(move |i| self.edge(i))
    }

    pub fn signed_area(&self) -> f64 {
        let n = self.len();
        0.5 * (0..n)
            .map(|i| self.vertices[i].cross(self.vertices[(i + 1) % n]))
            .sum::<f64>()
    }

    pub fn area(&self) -> f64 {
        self.signed_area().abs()
    }

    /// `(min, max)` corners of the bounding box.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in &self.vertices {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        (lo, hi)
    }

    pub fn scale(&self) -> f64 {
        scale_of(&self.vertices)
    }

    /// Every edge is horizontal or vertical.
    pub fn is_orthogonal(&self, tol: Tolerance) -> bool {
        self.edges().all(|e| {
            let d = e.b - e.a;
            d.x.abs() <= tol.eps * d.norm() || d.y.abs() <= tol.eps * d.norm()
        })
    }

    /// The vertex at index `i` has an interior angle above 180 degrees.
    pub fn is_reflex(&self, i: usize, tol: Tolerance) -> bool {
        let n = self.len();
        let prev = self.vertices[(i + n - 1) % n];
        let cur = self.vertices[i % n];
        let next = self.vertices[(i + 1) % n];
        orientation(prev, cur, next, tol) < 0
    }

    /// Distance from `p` to the polygon boundary.
    pub fn boundary_distance(&self, p: Point) -> f64 {
        self.edges()
            .map(|e| e.distance_to(p))
            .fold(f64::INFINITY, f64::min)
    }

    /// Sub-polygon formed by the listed vertex indices, in the given order.
    pub fn sub_polygon(&self, indices: &[usize]) -> Result<Polygon> {
        Polygon::new(indices.iter().map(|&i| self.vertex(i)).collect())
    }

    /// Uniformly scaled copy.
    pub fn scaled(&self, factor: f64) -> Result<Polygon> {
        Polygon::new(self.vertices.iter().map(|&p| p * factor).collect())
    }

    /// Copy with the vertex labels rotated so that old vertex `k` becomes 0.
    pub fn rotated(&self, k: usize) -> Polygon {
        let n = self.len();
        Polygon {
            vertices: (0..n).map(|i| self.vertices[(i + k) % n]).collect(),
        }
    }
}

/// Even-odd classification with boundary snapping.
pub fn point_in_polygon(poly: &Polygon, p: Point, tol: Tolerance) -> Location {
    let snap = tol.eps * poly.scale().max(scale_of(&[p]));
    if poly.edges().any(|e| e.distance_to(p) <= snap) {
        return Location::Boundary;
    }
    if crossing_parity(poly.vertices(), p) {
        Location::Inside
    } else {
        Location::Outside
    }
}

/// Ray-casting parity for an arbitrary closed vertex chain; the caller has
/// already ruled out `p` lying on the chain.
pub(crate) fn crossing_parity<'a, I>(chain: I, p: Point) -> bool
where
    I: IntoIterator<Item = &'a Point>,
    I::IntoIter: Clone,
{
    let iter = chain.into_iter();
    let first = match iter.clone().next() {
        Some(f) => *f,
        None => return false,
    };
    let mut inside = false;
    let mut prev = first;
    for cur in iter.skip(1).copied().chain(std::iter::once(first)) {
        if (prev.y > p.y) != (cur.y > p.y) {
            let x = prev.x + (p.y - prev.y) * (cur.x - prev.x) / (cur.y - prev.y);
            if x > p.x {
                inside = !inside;
            }
        }
        prev = cur;
    }
    inside
}

/// True iff the open segment (endpoints excluded) lies strictly inside `poly`.
///
/// The endpoints are expected to be vertices of `poly`. The open segment must
/// cross no boundary edge, pass through no other vertex, and its midpoint must
/// be interior. A chord running along the boundary fails the midpoint test.
pub fn open_segment_in_interior(poly: &Polygon, s: &Segment, tol: Tolerance) -> bool {
    let snap = tol.eps * poly.scale();
    let is_endpoint = |p: Point| p.dist(s.a) <= snap || p.dist(s.b) <= snap;
    for &v in poly.vertices() {
        if !is_endpoint(v) && on_segment(s, v, tol) {
            return false;
        }
    }
    if poly.edges().any(|e| segments_cross_properly(s, &e, tol)) {
        return false;
    }
    point_in_polygon(poly, s.midpoint(), tol) == Location::Inside
}
