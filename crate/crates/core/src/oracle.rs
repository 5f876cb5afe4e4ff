//! Brute-force ground truth for small polygons.
//!
//! A partition along diagonals is a set of pairwise non-crossing diagonals,
//! and two diagonals of a simple polygon cross exactly when their endpoint
//! indices interleave. Enumerating every such set lists every partition,
//! which is exponential but fine up to about ten vertices.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::fatness::ar_disk;
use crate::geom::{segments_cross_properly, Point, Polygon, Segment, Tolerance};
use crate::visibility::VisibilityGraph;

pub const DEFAULT_CAP: usize = 10;

/// A partition as a list of pieces; each piece lists vertex indices in
/// increasing (counterclockwise) order.
pub type Pieces = Vec<Vec<usize>>;

fn interleave(a: (usize, usize), b: (usize, usize)) -> bool {
    (a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1)
}

fn split(diagonals: &[(usize, usize)], n: usize) -> Pieces {
    let mut pieces: Pieces = vec![(0..n).collect()];
    for &(a, b) in diagonals {
        let k = pieces
            .iter()
            .position(|p| p.contains(&a) && p.contains(&b))
            .expect("non-crossing diagonals split one piece each");
        let piece = pieces.swap_remove(k);
        let inner: Vec<usize> = piece.iter().copied().filter(|&v| a <= v && v <= b).collect();
        let outer: Vec<usize> = piece.iter().copied().filter(|&v| v <= a || v >= b).collect();
        pieces.push(inner);
        pieces.push(outer);
    }
    for p in &mut pieces {
        p.sort_unstable();
    }
    pieces.sort();
    pieces
}

/// Every partition of `poly` along its diagonals, including the trivial
/// one-piece partition.
pub fn enumerate_partitions(poly: &Polygon, tol: Tolerance, cap: usize) -> Result<Vec<Pieces>> {
    let n = poly.len();
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    let graph = VisibilityGraph::build(poly, tol);
    let diagonals: Vec<(usize, usize)> = graph.diagonals().map(|e| (e.i, e.j)).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn go(
        at: usize,
        diagonals: &[(usize, usize)],
        chosen: &mut Vec<(usize, usize)>,
        n: usize,
        out: &mut Vec<Pieces>,
    ) {
        if at == diagonals.len() {
            out.push(split(chosen, n));
            return;
        }
        go(at + 1, diagonals, chosen, n, out);
        let d = diagonals[at];
        if chosen.iter().all(|&c| !interleave(c, d)) {
            chosen.push(d);
            go(at + 1, diagonals, chosen, n, out);
            chosen.pop();
        }
    }
    go(0, &diagonals, &mut chosen, n, &mut out);
    Ok(out)
}

/// All partitions of one polygon with memoized piece aspect ratios.
pub struct Oracle<'p> {
    poly: &'p Polygon,
    partitions: Vec<Pieces>,
    ratios: HashMap<u64, f64>,
    tol: Tolerance,
}

impl<'p> Oracle<'p> {
    pub fn new(poly: &'p Polygon, tol: Tolerance, cap: usize) -> Result<Self> {
        let partitions = enumerate_partitions(poly, tol, cap)?;
        let mut ratios = HashMap::new();
        for piece in partitions.iter().flatten() {
            ratios.entry(mask(piece)).or_insert_with(|| {
                ar_disk(&poly.sub_polygon(piece).expect("pieces are simple"), tol)
            });
        }
        Ok(Oracle {
            poly,
            partitions,
            ratios,
            tol,
        })
    }

    pub fn polygon(&self) -> &Polygon {
        self.poly
    }

    pub fn partitions(&self) -> &[Pieces] {
        &self.partitions
    }

    pub fn piece_ratio(&self, piece: &[usize]) -> f64 {
        self.ratios[&mask(piece)]
    }

    fn worst(&self, p: &Pieces) -> f64 {
        p.iter().map(|q| self.piece_ratio(q)).fold(0.0, f64::max)
    }

    /// Smallest achievable largest aspect ratio, with one optimal partition.
    pub fn minfat(&self) -> (f64, &Pieces) {
        self.partitions
            .iter()
            .map(|p| (self.worst(p), p))
            .min_by(|a, b| a.0.total_cmp(&b.0))
            .expect("the trivial partition always exists")
    }

    /// Fewest pieces with every aspect ratio at most `alpha`.
    pub fn min_cardinality(&self, alpha: f64) -> Result<Option<(usize, &Pieces)>> {
        if alpha.is_nan() || alpha < 1.0 {
            return Err(Error::InvalidAlpha(alpha));
        }
        Ok(self
            .partitions
            .iter()
            .filter(|p| self.worst(p) <= alpha + self.tol.geom_eps)
            .map(|p| (p.len(), p))
            .min_by_key(|x| x.0))
    }
}

fn mask(piece: &[usize]) -> u64 {
    piece.iter().fold(0u64, |m, &v| m | (1 << v))
}

pub fn oracle_minfat(poly: &Polygon, tol: Tolerance) -> Result<f64> {
    Ok(Oracle::new(poly, tol, DEFAULT_CAP)?.minfat().0)
}

pub fn oracle_min_card(poly: &Polygon, alpha: f64, tol: Tolerance) -> Result<Option<usize>> {
    Ok(Oracle::new(poly, tol, DEFAULT_CAP)?.min_cardinality(alpha)?.map(|x| x.0))
}

/// Random simple polygon with `n` vertices in `[0, 10]^2`.
///
/// Points are drawn uniformly and joined in random order, then crossings are
/// removed by 2-opt reversals (each one shortens the tour, so this ends).
/// Polygons with edges shorter than 0.5 or a vertex within 0.3 of a
/// non-incident edge are rejected and redrawn, which keeps the tolerance
/// rules far from deciding anything.
pub fn random_simple_polygon<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Polygon {
    assert!(n >= 3);
    loop {
        let mut pts: Vec<Point> = (0..n)
            .map(|_| Point::new(rng.gen_range(0.0..10.0), rng.gen_range(0.0..10.0)))
            .collect();
        pts.shuffle(rng);
        untangle(&mut pts);
        if !well_separated(&pts) {
            continue;
        }
        if let Ok(p) = Polygon::new_any_orientation(pts) {
            return p;
        }
    }
}

fn untangle(pts: &mut [Point]) {
    let n = pts.len();
    let tol = Tolerance::default();
    let mut changed = true;
    let mut rounds = 0;
    while changed && rounds < 10_000 {
        changed = false;
        rounds += 1;
        'outer: for a in 0..n {
            for b in (a + 2)..n {
                if a == 0 && b == n - 1 {
                    continue;
                }
                let s = Segment {
                    a: pts[a],
                    b: pts[a + 1],
                };
                let t = Segment {
                    a: pts[b],
                    b: pts[(b + 1) % n],
                };
                if segments_cross_properly(&s, &t, tol) {
                    pts[a + 1..=b].reverse();
                    changed = true;
                    break 'outer;
                }
            }
        }
    }
}

fn well_separated(pts: &[Point]) -> bool {
    let n = pts.len();
    for i in 0..n {
        let e = Segment {
            a: pts[i],
            b: pts[(i + 1) % n],
        };
        if e.length() < 0.5 {
            return false;
        }
        for (v, &p) in pts.iter().enumerate() {
            if v != i && v != (i + 1) % n && e.distance_to(p) < 0.3 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const T: Tolerance = Tolerance {
        eps: 1e-9,
        geom_eps: 1e-7,
    };

    fn convex(n: usize) -> Polygon {
        Polygon::new(
            (0..n)
                .map(|k| {
                    let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                    Point::new(t.cos(), t.sin())
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn convex_counts_are_little_schroeder_numbers() {
        let want = [1usize, 3, 11, 45, 197, 903, 4279, 20793];
        for (k, &w) in want.iter().enumerate() {
            let n = k + 3;
            assert_eq!(enumerate_partitions(&convex(n), T, DEFAULT_CAP).unwrap().len(), w, "n = {n}");
        }
    }

    #[test]
    fn pieces_tile_the_polygon() {
        let p = convex(6);
        for part in enumerate_partitions(&p, T, DEFAULT_CAP).unwrap() {
            let total: f64 = part.iter().map(|q| p.sub_polygon(q).unwrap().area()).sum();
            assert!((total - p.area()).abs() < 1e-9 * p.area());
        }
    }

    #[test]
    fn refuses_large_inputs() {
        assert_eq!(
            enumerate_partitions(&convex(11), T, DEFAULT_CAP).unwrap_err(),
            Error::TooLarge { n: 11, cap: 10 }
        );
    }

    #[test]
    fn strip_and_square_examples() {
        let strip = Polygon::new(
            [(0., 0.), (1., 0.), (2., 0.), (3., 0.), (3., 1.), (2., 1.), (1., 1.), (0., 1.)]
                .iter()
                .map(|&(x, y)| Point::new(x, y))
                .collect(),
        )
        .unwrap();
        assert!((oracle_minfat(&strip, T).unwrap() - 2f64.sqrt()).abs() < 1e-9);
        let square = convex(4);
        assert_eq!(oracle_min_card(&square, 1.3, T).unwrap(), None);
        assert_eq!(oracle_min_card(&square, 2f64.sqrt(), T).unwrap(), Some(1));
        let tri = convex(3);
        assert!((oracle_minfat(&tri, T).unwrap() - ar_disk(&tri, T)).abs() < 1e-12);
    }

    #[test]
    fn sampler_is_deterministic_and_valid() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for n in 4..=8 {
            let p = random_simple_polygon(&mut a, n);
            let q = random_simple_polygon(&mut b, n);
            assert_eq!(p, q);
            assert_eq!(p.len(), n);
            assert!(p.signed_area() > 0.0);
        }
    }
}
