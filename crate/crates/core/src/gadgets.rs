//! Orthogonal gadget polygons from the hardness reductions, with checks of
//! their aspect ratios and the piece-count arithmetic.
//!
//! Three regimes are covered: square-fatness with α = 1.2, disk-fatness with
//! α = √61/5, and disk-smallness with α = √13. Coordinates are on the unit
//! (or half-unit) grid and chosen so the quoted ratios come out exactly.

use std::fmt;

use crate::dp::{Solver, TieBreak};
use crate::error::Result;
use crate::fatness::{ar_disk, ar_square, min_enclosing_circle};
use crate::geom::{Point, Polygon, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetKind {
    Variable,
    Wire,
    Clause,
    CornerBend,
    CornerOffset,
    Shift,
}

impl GadgetKind {
    /// Wire polygons a junction of this kind is worth in the piece count.
    pub fn wire_cost(self) -> usize {
        match self {
            GadgetKind::Wire => 1,
            GadgetKind::CornerBend => 3,
            GadgetKind::Shift => 2,
            GadgetKind::CornerOffset => 5,
            GadgetKind::Variable | GadgetKind::Clause => 0,
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GadgetKind::Variable => "variable",
            GadgetKind::Wire => "wire",
            GadgetKind::Clause => "clause",
            GadgetKind::CornerBend => "corner-bend",
            GadgetKind::CornerOffset => "corner-offset",
            GadgetKind::Shift => "shift",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// Square aspect ratio at most 1.2.
    SquareFat,
    /// Disk aspect ratio at most √61/5.
    DiskFat,
    /// Minimum enclosing circle diameter at most √13.
    DiskSmall,
}

impl Regime {
    pub fn alpha(self) -> f64 {
        match self {
            Regime::SquareFat => 1.2,
            Regime::DiskFat => 61f64.sqrt() / 5.0,
            Regime::DiskSmall => 13f64.sqrt(),
        }
    }

    /// The quantity bounded by [`Regime::alpha`].
    pub fn measure(self, poly: &Polygon, tol: Tolerance) -> f64 {
        match self {
            Regime::SquareFat => ar_square(poly, tol),
            Regime::DiskFat => ar_disk(poly, tol),
            Regime::DiskSmall => min_enclosing_circle(poly, tol).diameter(),
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::SquareFat => "square-fat-1.2",
            Regime::DiskFat => "disk-fat-sqrt61/5",
            Regime::DiskSmall => "disk-small-sqrt13",
        })
    }
}

/// What a gadget is expected to satisfy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Expectation {
    /// The regime's measure equals `value`; `feasible` says whether that is
    /// within the regime's bound.
    Ratio { value: f64, feasible: bool },
    /// The fewest α-fat pieces (disk metric) is `count`, reached by at least
    /// two different partitions.
    Pieces { count: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Gadget {
    pub name: &'static str,
    pub kind: GadgetKind,
    pub regime: Regime,
    pub polygon: Polygon,
    pub expect: Expectation,
}

fn poly(pts: &[(f64, f64)]) -> Polygon {
    Polygon::new(pts.iter().map(|&(x, y)| Point::new(x, y)).collect()).expect("gadget polygons are valid")
}

/// Axis-parallel `a × b` rectangle with its lower-left corner at the origin.
/// With `subdivide`, boundary vertices are placed at every integer
/// coordinate along the sides (sides must then have integer length).
pub fn build_rectangle(a: f64, b: f64, subdivide: bool) -> Polygon {
    assert!(a > 0.0 && b > 0.0, "rectangle sides must be positive");
    if !subdivide {
        return poly(&[(0.0, 0.0), (a, 0.0), (a, b), (0.0, b)]);
    }
    let (na, nb) = (a.round() as usize, b.round() as usize);
    assert!(
        (a - na as f64).abs() < 1e-12 && (b - nb as f64).abs() < 1e-12,
        "subdivided rectangles need integer sides"
    );
    let mut pts = Vec::new();
    pts.extend((0..na).map(|x| (x as f64, 0.0)));
    pts.extend((0..nb).map(|y| (a, y as f64)));
    pts.extend((0..na).map(|x| (a - x as f64, b)));
    pts.extend((0..nb).map(|y| (0.0, b - y as f64)));
    poly(&pts)
}

/// Cut positions along the variable bar. Pieces of width 5 or 6 fit the
/// bound, so the bar splits into 8 pieces starting with either the 5 or
/// the 6 cut.
pub const VARIABLE_CUTS: [f64; 10] = [0.0, 5.0, 6.0, 11.0, 16.0, 21.0, 26.0, 31.0, 36.0, 41.0];

/// The variable polygon: a 41 × 5 bar with vertices on both long sides at
/// [`VARIABLE_CUTS`].
pub fn variable_bar() -> Polygon {
    let mut pts: Vec<(f64, f64)> = VARIABLE_CUTS.iter().map(|&x| (x, 0.0)).collect();
    pts.extend(VARIABLE_CUTS.iter().rev().map(|&x| (x, 5.0)));
    poly(&pts)
}

/// Every gadget with its expected behavior.
pub fn catalog() -> Vec<Gadget> {
    let disk_alpha = Regime::DiskFat.alpha();
    let offset_ratio = 6.0 * 2f64.sqrt() / (2.0 * (9.0 - 40f64.sqrt()));
    let clause_notch = poly(&[
        (0.0, 0.0),
        (6.0, 0.0),
        (6.0, 1.0),
        (6.5, 1.0),
        (6.5, 4.0),
        (6.0, 4.0),
        (6.0, 5.0),
        (0.0, 5.0),
    ]);
    let offset_corner = poly(&[(0.0, 0.0), (6.0, 0.0), (6.0, 4.0), (5.0, 4.0), (5.0, 6.0), (0.0, 6.0)]);
    let ratio = |value: f64, feasible: bool| Expectation::Ratio { value, feasible };
    vec![
        Gadget {
            name: "wire-5x6",
            kind: GadgetKind::Wire,
            regime: Regime::SquareFat,
            polygon: build_rectangle(5.0, 6.0, false),
            expect: ratio(1.2, true),
        },
        Gadget {
            name: "wire-5x5",
            kind: GadgetKind::Wire,
            regime: Regime::SquareFat,
            polygon: build_rectangle(5.0, 5.0, false),
            expect: ratio(1.0, true),
        },
        Gadget {
            name: "clause-center-1x1",
            kind: GadgetKind::Clause,
            regime: Regime::SquareFat,
            polygon: build_rectangle(1.0, 1.0, false),
            expect: ratio(1.0, true),
        },
        Gadget {
            name: "clause-notched",
            kind: GadgetKind::Clause,
            regime: Regime::SquareFat,
            polygon: clause_notch.clone(),
            expect: ratio(1.3, false),
        },
        Gadget {
            name: "corner-offset-square",
            kind: GadgetKind::CornerOffset,
            regime: Regime::SquareFat,
            polygon: offset_corner.clone(),
            expect: ratio(1.2, true),
        },
        Gadget {
            name: "wire-5x6-disk",
            kind: GadgetKind::Wire,
            regime: Regime::DiskFat,
            polygon: build_rectangle(5.0, 6.0, false),
            expect: ratio(disk_alpha, true),
        },
        Gadget {
            name: "corner-feasible-low",
            kind: GadgetKind::CornerBend,
            regime: Regime::DiskFat,
            polygon: poly(&[(0.0, 0.0), (5.0, 0.0), (5.0, 1.0), (6.0, 1.0), (6.0, 5.0), (0.0, 5.0)]),
            expect: ratio(disk_alpha, true),
        },
        Gadget {
            name: "corner-feasible-high",
            kind: GadgetKind::CornerBend,
            regime: Regime::DiskFat,
            polygon: poly(&[(0.0, 0.0), (6.0, 0.0), (6.0, 4.0), (5.0, 4.0), (5.0, 5.0), (0.0, 5.0)]),
            expect: ratio(disk_alpha, true),
        },
        Gadget {
            name: "corner-offset-disk",
            kind: GadgetKind::CornerOffset,
            regime: Regime::DiskFat,
            polygon: offset_corner,
            expect: ratio(offset_ratio, false),
        },
        Gadget {
            name: "clause-notched-disk",
            kind: GadgetKind::Clause,
            regime: Regime::DiskFat,
            polygon: clause_notch,
            expect: ratio(disk_alpha, true),
        },
        Gadget {
            name: "variable-bar",
            kind: GadgetKind::Variable,
            regime: Regime::DiskFat,
            polygon: variable_bar(),
            expect: Expectation::Pieces { count: 8 },
        },
        Gadget {
            name: "wire-1x3",
            kind: GadgetKind::Wire,
            regime: Regime::DiskSmall,
            polygon: build_rectangle(1.0, 3.0, false),
            expect: ratio(10f64.sqrt(), true),
        },
        Gadget {
            name: "block-2x3",
            kind: GadgetKind::Wire,
            regime: Regime::DiskSmall,
            polygon: build_rectangle(2.0, 3.0, false),
            expect: ratio(13f64.sqrt(), true),
        },
        Gadget {
            name: "wire-1x4",
            kind: GadgetKind::Wire,
            regime: Regime::DiskSmall,
            polygon: build_rectangle(1.0, 4.0, false),
            expect: ratio(17f64.sqrt(), false),
        },
        Gadget {
            name: "block-3x3",
            kind: GadgetKind::Clause,
            regime: Regime::DiskSmall,
            polygon: build_rectangle(3.0, 3.0, false),
            expect: ratio(18f64.sqrt(), false),
        },
    ]
}

/// Outcome of checking one gadget.
#[derive(Debug, Clone, PartialEq)]
pub struct GadgetReport {
    pub name: &'static str,
    pub kind: GadgetKind,
    pub regime: Regime,
    pub measured: f64,
    pub expected: f64,
    pub within_tolerance: bool,
    pub feasible: bool,
    pub expected_feasible: bool,
    pub pass: bool,
}

/// Measures the regime's quantity and compares it with `expected`.
/// Feasibility means the measure is within the regime's bound (plus
/// `geom_eps`).
pub fn verify_gadget_ratio(g: &Gadget, expected: f64, tolerance: f64, tol: Tolerance) -> GadgetReport {
    let measured = g.regime.measure(&g.polygon, tol);
    let feasible = measured <= g.regime.alpha() + tol.geom_eps;
    let expected_feasible = match g.expect {
        Expectation::Ratio { feasible, .. } => feasible,
        Expectation::Pieces { .. } => feasible,
    };
    let within_tolerance = (measured - expected).abs() <= tolerance;
    GadgetReport {
        name: g.name,
        kind: g.kind,
        regime: g.regime,
        measured,
        expected,
        within_tolerance,
        feasible,
        expected_feasible,
        pass: within_tolerance && feasible == expected_feasible,
    }
}

/// Fewest-piece partitions of a gadget under both tie-break orders.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecesReport {
    pub name: &'static str,
    pub alpha: f64,
    pub expected: usize,
    pub witnesses: Vec<Vec<Vec<usize>>>,
    pub counts: Vec<Option<usize>>,
    pub distinct_witnesses: bool,
    pub pass: bool,
}

pub fn verify_gadget_pieces(g: &Gadget, expected: usize, tol: Tolerance) -> Result<PiecesReport> {
    let alpha = g.regime.alpha();
    let mut witnesses = Vec::new();
    let mut counts = Vec::new();
    for tie in [TieBreak::LexSmallest, TieBreak::LexLargest] {
        let found = Solver::new(&g.polygon, tol).with_tie_break(tie).min_cardinality(alpha)?;
        counts.push(found.as_ref().map(|p| p.cardinality));
        if let Some(p) = found {
            let mut pieces = p.pieces;
            pieces.sort();
            witnesses.push(pieces);
        }
    }
    let distinct_witnesses = witnesses.len() == 2 && witnesses[0] != witnesses[1];
    let pass = counts.iter().all(|&c| c == Some(expected)) && distinct_witnesses;
    Ok(PiecesReport {
        name: g.name,
        alpha,
        expected,
        witnesses,
        counts,
        distinct_witnesses,
        pass,
    })
}

/// Piece-count bookkeeping for an assembled reduction: `k = 8v + 4c + w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountLedger {
    pub v: usize,
    pub c: usize,
    pub w: usize,
    pub k: usize,
}

/// `w` counts straight wire polygons plus 3 per bend, 2 per shift and 5 per
/// offset.
pub fn ledger(v: usize, c: usize, bends: usize, shifts: usize, offsets: usize, straight: usize) -> CountLedger {
    let w = straight
        + bends * GadgetKind::CornerBend.wire_cost()
        + shifts * GadgetKind::Shift.wire_cost()
        + offsets * GadgetKind::CornerOffset.wire_cost();
    CountLedger {
        v,
        c,
        w,
        k: 8 * v + 4 * c + w,
    }
}
