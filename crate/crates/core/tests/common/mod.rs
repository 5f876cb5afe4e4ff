#![allow(dead_code)]

use fatcut::fatness::ar_disk;
use fatcut::geom::{point_in_polygon, Location, Point, Polygon, Tolerance};
use fatcut::oracle::random_simple_polygon;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const TOL: Tolerance = Tolerance {
    eps: 1e-9,
    geom_eps: 1e-7,
};

pub fn poly(pts: &[(f64, f64)]) -> Polygon {
    Polygon::new(pts.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
}

/// Seeded corpus of random simple polygons with 4 to 8 vertices.
pub fn corpus(seed: u64, count: usize) -> Vec<Polygon> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|k| random_simple_polygon(&mut rng, 4 + k % 5)).collect()
}

pub fn alphas(p: &Polygon) -> [f64; 5] {
    [1.2, 1.5, 2.0, 3.0, ar_disk(p, TOL)]
}

pub fn piece_area(p: &Polygon, piece: &[usize]) -> f64 {
    p.sub_polygon(piece).unwrap().area()
}

/// Largest boundary clearance found by hill climbing from random interior
/// starts. Independent of the tangent-circle enumeration.
pub fn local_search_clearance(p: &Polygon, seed: u64, starts: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = p.bounding_box();
    let mut best: f64 = 0.0;
    let mut done = 0;
    while done < starts {
        let mut x = Point::new(rng.gen_range(lo.x..hi.x), rng.gen_range(lo.y..hi.y));
        if point_in_polygon(p, x, TOL) != Location::Inside {
            continue;
        }
        done += 1;
        let mut step = (hi.x - lo.x).max(hi.y - lo.y) / 4.0;
        let mut d = p.boundary_distance(x);
        while step > 1e-10 {
            let mut moved = false;
            for k in 0..16 {
                let t = std::f64::consts::TAU * k as f64 / 16.0;
                let y = Point::new(x.x + step * t.cos(), x.y + step * t.sin());
                if point_in_polygon(p, y, TOL) == Location::Inside {
                    let dy = p.boundary_distance(y);
                    if dy > d {
                        x = y;
                        d = dy;
                        moved = true;
                    }
                }
            }
            if !moved {
                step *= 0.5;
            }
        }
        best = best.max(d);
    }
    best
}
