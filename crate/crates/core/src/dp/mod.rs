//! Exact partitions along diagonals.
//!
//! [`minfat_partition`] minimizes the largest disk aspect ratio over all
//! pieces. [`min_cardinality_alpha_fat`] minimizes the number of pieces
//! subject to every piece having disk aspect ratio at most `alpha`.

pub mod candidates;
pub mod path;
pub mod reduce;
mod solve;

pub use candidates::{enumerate_inner_circles, enumerate_outer_circles, CirclePair};
pub use path::{min_sum_path, minmax_path, PathResult, TieBreak, WeightedArc};
pub use reduce::{pocket_contains, reduced_graph};
pub use solve::{EdgeResult, EdgeTable, Solver};

use crate::error::Result;
use crate::geom::{Polygon, Tolerance};

/// Pieces are vertex-index lists in counterclockwise order.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    pub pieces: Vec<Vec<usize>>,
    pub achieved_alpha: f64,
    pub cardinality: usize,
}

impl Partition {
    /// The whole polygon as one piece.
    pub fn whole(poly: &Polygon, alpha: f64) -> Self {
        Partition {
            pieces: vec![(0..poly.len()).collect()],
            achieved_alpha: alpha,
            cardinality: 1,
        }
    }

    /// Chords used by the partition, as `(i, j)` with `i < j`, sorted.
    pub fn diagonals(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for piece in &self.pieces {
            let k = piece.len();
            for t in 0..k {
                let (a, b) = (piece[t], piece[(t + 1) % k]);
                let (i, j) = (a.min(b), a.max(b));
                if j != i + 1 && !(i == 0 && j == piece_max(&self.pieces)) {
                    out.push((i, j));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn piece_max(pieces: &[Vec<usize>]) -> usize {
    pieces.iter().flatten().copied().max().unwrap_or(0)
}

pub fn minfat_partition(poly: &Polygon, tol: Tolerance) -> Partition {
    Solver::new(poly, tol).minfat()
}

/// `Ok(None)` when no partition meets the bound; an error when `alpha < 1`.
pub fn min_cardinality_alpha_fat(poly: &Polygon, alpha: f64, tol: Tolerance) -> Result<Option<Partition>> {
    Solver::new(poly, tol).min_cardinality(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fatness::ar_disk;
    use crate::geom::Point;

    const T: Tolerance = Tolerance {
        eps: 1e-9,
        geom_eps: 1e-7,
    };

    fn poly(pts: &[(f64, f64)]) -> Polygon {
        Polygon::new(pts.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    fn rect_3x1() -> Polygon {
        poly(&[(0., 0.), (1., 0.), (2., 0.), (3., 0.), (3., 1.), (2., 1.), (1., 1.), (0., 1.)])
    }

    fn area_of(p: &Polygon, piece: &[usize]) -> f64 {
        p.sub_polygon(piece).unwrap().area()
    }

    #[test]
    fn triangle_is_one_piece() {
        let p = poly(&[(0., 0.), (4., 0.), (1., 2.)]);
        let part = minfat_partition(&p, T);
        assert_eq!(part.cardinality, 1);
        assert!((part.achieved_alpha - ar_disk(&p, T)).abs() < 1e-9);
    }

    #[test]
    fn strip_splits_into_unit_squares() {
        let p = rect_3x1();
        let part = minfat_partition(&p, T);
        assert!((part.achieved_alpha - 2f64.sqrt()).abs() < 1e-9);
        assert_eq!(part.cardinality, 3);
        let total: f64 = part.pieces.iter().map(|q| area_of(&p, q)).sum();
        assert!((total - 3.0).abs() < 1e-9);
        assert_eq!(part.diagonals(), vec![(1, 6), (2, 5)]);
    }

    #[test]
    fn strip_min_cardinality() {
        let p = rect_3x1();
        let part = min_cardinality_alpha_fat(&p, 2f64.sqrt(), T).unwrap().unwrap();
        assert_eq!(part.cardinality, 3);
        assert!(min_cardinality_alpha_fat(&p, 1.2, T).unwrap().is_none());
        assert!(min_cardinality_alpha_fat(&p, 0.9, T).is_err());
        let whole = min_cardinality_alpha_fat(&p, 10f64.sqrt(), T).unwrap().unwrap();
        assert_eq!(whole.cardinality, 1);
    }

    #[test]
    fn unit_square_one_piece() {
        let p = poly(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]);
        let part = min_cardinality_alpha_fat(&p, 2f64.sqrt(), T).unwrap().unwrap();
        assert_eq!(part.cardinality, 1);
    }

    #[test]
    fn ear_weight_is_triangle_ratio() {
        let p = poly(&[(0., 0.), (3., 0.), (4., 2.), (1., 3.), (-1., 1.)]);
        let table = Solver::new(&p, T).minfat_table();
        let ear = table.get(0, 2).unwrap();
        let tri = p.sub_polygon(&[0, 1, 2]).unwrap();
        assert!((ear.weight - ar_disk(&tri, T)).abs() < 1e-9);
        assert_eq!(ear.path, vec![0, 1, 2]);
    }

    #[test]
    fn convex_quadrilateral_matches_its_three_partitions() {
        let p = poly(&[(0., 0.), (3., 0.), (3.5, 1.5), (0.5, 2.)]);
        let whole = ar_disk(&p, T);
        let tri = |a: usize, b: usize, c: usize| ar_disk(&p.sub_polygon(&[a, b, c]).unwrap(), T);
        let want = whole
            .min(tri(0, 1, 2).max(tri(0, 2, 3)))
            .min(tri(0, 1, 3).max(tri(1, 2, 3)));
        let got = minfat_partition(&p, T).achieved_alpha;
        assert!((got - want).abs() < 1e-9, "{got} vs {want}");
    }

    #[test]
    fn square_stays_whole_under_both_orders() {
        let p = poly(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]);
        for tie in [TieBreak::LexSmallest, TieBreak::LexLargest] {
            let part = Solver::new(&p, T).with_tie_break(tie).minfat();
            assert_eq!(part.cardinality, 1);
        }
    }
}
