//! The edge-weight DP.
//!
//! Visibility edges `(i, j)` are processed by increasing span `j - i`. The
//! value of an edge is the best partition of `P_{i,j}`: the piece `Q` that
//! owns the chord `(i, j)` is bounded by a forward path from `i` to `j`, and
//! every path arc `(k, l)` hangs an already solved `P_{k,l}` off `Q`.
//!
//! `Q` is certified by a pair of circles: an outer circle holding every
//! vertex of `Q` and an inner circle inside `Q`, so `AR(Q)` is at most the
//! ratio of their radii. The path may only use arcs inside the outer circle
//! and outside the inner one, and no arc may cut off the inner circle's
//! center. With those restrictions the center stays in `Q`, the inner disk
//! touches no side of `Q`, and the certificate is sound. Conversely, the
//! minimum enclosing and maximum inscribed circles of the optimal `Q` are
//! among the candidates, so nothing is missed.
//!
//! The closing edge `(0, n-1)` is solved last and roots the recursion.

use std::cmp::Ordering;
use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::dp::candidates::{enumerate_outer_circles, inner_pool, CirclePair};
use crate::dp::path::{min_sum_path, minmax_path, PathResult, TieBreak, WeightedArc, TIE_EPS};
use crate::dp::reduce::pocket_contains;
use crate::dp::Partition;
use crate::error::{Error, Result};
use crate::fatness::{max_inscribed_circle, min_enclosing_circle};
use crate::geom::{Circle, Polygon, Segment, Tolerance};
use crate::visibility::VisibilityGraph;

/// Solved value of one visibility edge.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeResult {
    /// Largest certified aspect ratio in the sub-partition.
    pub weight: f64,
    /// Pieces in the sub-partition; 0 for boundary edges.
    pub pieces: usize,
    /// Boundary of the piece owning the edge, from `i` to `j`. Empty for
    /// boundary edges.
    pub path: Vec<usize>,
    /// Circles certifying that piece.
    pub pair: Option<CirclePair>,
}

impl EdgeResult {
    fn boundary() -> Self {
        EdgeResult {
            weight: 0.0,
            pieces: 0,
            path: Vec::new(),
            pair: None,
        }
    }
}

/// DP results indexed like [`VisibilityGraph::edges`].
#[derive(Debug, Clone)]
pub struct EdgeTable {
    n: usize,
    index: Vec<usize>,
    entries: Vec<Option<EdgeResult>>,
}

impl EdgeTable {
    pub fn get(&self, i: usize, j: usize) -> Option<&EdgeResult> {
        let idx = *self.index.get(i * self.n + j)?;
        self.entries.get(idx)?.as_ref()
    }

    /// Solved entries as `((i, j), result)`, in visibility-edge order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &EdgeResult)> + '_ {
        let n = self.n;
        self.index
            .iter()
            .enumerate()
            .filter(|(_, &idx)| idx != usize::MAX)
            .filter_map(move |(cell, &idx)| Some(((cell / n, cell % n), self.entries[idx].as_ref()?)))
    }

    pub fn root(&self) -> Option<&EdgeResult> {
        self.get(0, self.n - 1)
    }

    /// Follows witness paths down from the root. `None` if the root is
    /// infeasible.
    pub fn partition(&self) -> Option<Partition> {
        let root = self.root()?;
        let mut pieces = Vec::new();
        let mut stack = vec![(0, self.n - 1)];
        while let Some((i, j)) = stack.pop() {
            let entry = self.get(i, j).expect("witness arcs are solved");
            pieces.push(entry.path.clone());
            for w in entry.path.windows(2).rev() {
                if w[1] != w[0] + 1 {
                    stack.push((w[0], w[1]));
                }
            }
        }
        Some(Partition {
            cardinality: pieces.len(),
            pieces,
            achieved_alpha: root.weight,
        })
    }
}

struct OuterGroup {
    circle: Circle,
    arcs: FixedBitSet,
}

struct InnerGroup {
    circle: Circle,
    arcs: FixedBitSet,
}

/// Precomputed state shared by every DP run on one polygon.
pub struct Solver<'p> {
    poly: &'p Polygon,
    tol: Tolerance,
    graph: VisibilityGraph,
    index: Vec<usize>,
    pool: Vec<Circle>,
    /// Arcs a pool circle may border: outside its open disk, and not cutting
    /// its center off.
    usable: Vec<FixedBitSet>,
    /// Edges whose sub-polygon holds the circle while the chord stays
    /// outside it.
    admissible: Vec<FixedBitSet>,
    /// Minimum enclosing and maximum inscribed circles of each `P_{i,j}`.
    sub_circles: Vec<Option<(Circle, Circle)>>,
    tie: TieBreak,
}

enum Objective {
    MinFat,
    MinCount(f64),
}

impl<'p> Solver<'p> {
    pub fn new(poly: &'p Polygon, tol: Tolerance) -> Self {
        let n = poly.len();
        let graph = VisibilityGraph::build(poly, tol);
        let m = graph.edges().len();
        let mut index = vec![usize::MAX; n * n];
        for (idx, e) in graph.edges().iter().enumerate() {
            index[e.i * n + e.j] = idx;
        }
        let pool = inner_pool(poly, &graph, tol);
        let segments: Vec<Segment> = graph
            .edges()
            .iter()
            .map(|e| Segment {
                a: poly.vertex(e.i),
                b: poly.vertex(e.j),
            })
            .collect();
        let (usable, admissible): (Vec<_>, Vec<_>) = pool
            .par_iter()
            .map(|c| {
                let mut usable = FixedBitSet::with_capacity(m);
                let mut admissible = FixedBitSet::with_capacity(m);
                for (idx, e) in graph.edges().iter().enumerate() {
                    if !c.segment_outside(&segments[idx], tol) {
                        continue;
                    }
                    if pocket_contains(poly, e.i, e.j, c.center) {
                        admissible.insert(idx);
                    } else {
                        usable.insert(idx);
                    }
                }
                (usable, admissible)
            })
            .unzip();
        let sub_circles = graph
            .edges()
            .par_iter()
            .map(|e| {
                let root = e.i == 0 && e.j == n - 1;
                if e.boundary && !root {
                    return None;
                }
                let sub = if root {
                    poly.clone()
                } else {
                    poly.sub_polygon(&(e.i..=e.j).collect::<Vec<_>>()).ok()?
                };
                Some((min_enclosing_circle(&sub, tol), max_inscribed_circle(&sub, tol)))
            })
            .collect();
        Solver {
            poly,
            tol,
            graph,
            index,
            pool,
            usable,
            admissible,
            sub_circles,
            tie: TieBreak::default(),
        }
    }

    pub fn with_tie_break(mut self, tie: TieBreak) -> Self {
        self.tie = tie;
        self
    }

    pub fn graph(&self) -> &VisibilityGraph {
        &self.graph
    }

    /// Inner candidates: circles tangent to three visibility-graph elements
    /// whose disk fits in the polygon.
    pub fn inner_pool(&self) -> &[Circle] {
        &self.pool
    }

    /// Min-fat DP table.
    pub fn minfat_table(&self) -> EdgeTable {
        self.run(Objective::MinFat)
    }

    /// Fewest-pieces DP table under the aspect-ratio bound `alpha`.
    pub fn min_count_table(&self, alpha: f64) -> Result<EdgeTable> {
        if alpha.is_nan() || alpha < 1.0 {
            return Err(Error::InvalidAlpha(alpha));
        }
        Ok(self.run(Objective::MinCount(alpha)))
    }

    pub fn minfat(&self) -> Partition {
        self.minfat_table()
            .partition()
            .expect("the whole polygon is always a feasible piece")
    }

    /// `Ok(None)` when no partition meets the bound.
    pub fn min_cardinality(&self, alpha: f64) -> Result<Option<Partition>> {
        let table = self.min_count_table(alpha)?;
        Ok(table.partition().map(|mut p| {
            p.achieved_alpha = p
                .pieces
                .iter()
                .map(|piece| crate::fatness::ar_disk(&self.poly.sub_polygon(piece).expect("pieces are simple"), self.tol))
                .fold(0.0, f64::max);
            p
        }))
    }

    fn run(&self, objective: Objective) -> EdgeTable {
        let n = self.poly.len();
        let edges = self.graph.edges();
        let mut entries: Vec<Option<EdgeResult>> = vec![None; edges.len()];
        let mut by_span: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (idx, e) in edges.iter().enumerate() {
            if e.boundary && e.span() == 1 {
                entries[idx] = Some(EdgeResult::boundary());
            } else {
                by_span[e.span()].push(idx);
            }
        }
        for level in by_span.iter().filter(|l| !l.is_empty()) {
            let solved: Vec<(usize, Option<EdgeResult>)> = level
                .par_iter()
                .map(|&idx| (idx, self.solve_edge(idx, &entries, &objective)))
                .collect();
            for (idx, r) in solved {
                entries[idx] = r;
            }
        }
        EdgeTable {
            n,
            index: self.index.clone(),
            entries,
        }
    }

    fn chain(i: usize, j: usize) -> Vec<usize> {
        (i..=j).collect()
    }

    fn better(&self, a: &EdgeResult, b: &EdgeResult, objective: &Objective) -> bool {
        match objective {
            Objective::MinFat => {
                if a.weight < b.weight - TIE_EPS {
                    return true;
                }
                if a.weight > b.weight + TIE_EPS {
                    return false;
                }
            }
            Objective::MinCount(_) => {}
        }
        match a.pieces.cmp(&b.pieces) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => self.tie.compare(&a.path, &b.path).is_lt(),
        }
    }

    fn solve_edge(&self, idx: usize, entries: &[Option<EdgeResult>], objective: &Objective) -> Option<EdgeResult> {
        let e = self.graph.edges()[idx];
        let (i, j) = (e.i, e.j);
        let (mcc, mic) = self.sub_circles[idx].expect("diagonals and the root have sub-polygons");
        let trivial = EdgeResult {
            weight: mcc.radius / mic.radius,
            pieces: 1,
            path: Self::chain(i, j),
            pair: Some(CirclePair::new(mcc, mic)),
        };
        let bound = match objective {
            Objective::MinFat => f64::INFINITY,
            Objective::MinCount(alpha) => {
                if trivial.weight <= alpha + self.tol.geom_eps {
                    return Some(trivial);
                }
                alpha + self.tol.geom_eps
            }
        };

        // Arcs strictly inside the range that have a value.
        let m = self.graph.edges().len();
        let mut in_range = FixedBitSet::with_capacity(m);
        for (k, a) in self.graph.edges().iter().enumerate() {
            if i <= a.i && a.j <= j && k != idx && entries[k].is_some() {
                in_range.insert(k);
            }
        }

        let outer = self.outer_groups(i, j, &in_range);
        let inner = self.inner_groups(idx, &in_range);
        let mut pairs: Vec<(f64, usize, usize)> = Vec::new();
        for (ci, c) in outer.iter().enumerate() {
            for (ii, inn) in inner.iter().enumerate() {
                let ratio = c.circle.radius / inn.circle.radius;
                if ratio <= bound && c.circle.contains_circle(&inn.circle, self.tol) {
                    pairs.push((ratio, ci, ii));
                }
            }
        }
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));

        let mut best = match objective {
            Objective::MinFat => Some(trivial),
            Objective::MinCount(_) => None,
        };
        let mut seen: Vec<FixedBitSet> = Vec::new();
        let edges = self.graph.edges();
        for (ratio, ci, ii) in pairs {
            if let (Objective::MinFat, Some(b)) = (objective, &best) {
                if ratio > b.weight + TIE_EPS {
                    break;
                }
            }
            let mut mask = outer[ci].arcs.clone();
            mask.intersect_with(&inner[ii].arcs);
            // A pair whose arcs are a subset of an earlier (cheaper) pair's
            // cannot do better.
            if seen.iter().any(|s| mask.is_subset(s)) {
                continue;
            }
            let arcs: Vec<WeightedArc> = mask
                .ones()
                .map(|k| {
                    let r = entries[k].as_ref().expect("masked arcs are solved");
                    WeightedArc {
                        from: edges[k].i,
                        to: edges[k].j,
                        weight: r.weight,
                        pieces: r.pieces,
                    }
                })
                .collect();
            seen.push(mask);
            let found: Option<PathResult> = match objective {
                Objective::MinFat => minmax_path(self.poly.len(), &arcs, i, j, ratio, self.tie),
                Objective::MinCount(_) => min_sum_path(self.poly.len(), &arcs, i, j, self.tie).map(|mut r| {
                    r.value = r
                        .path
                        .windows(2)
                        .map(|w| entries[self.index[w[0] * self.poly.len() + w[1]]].as_ref().unwrap().weight)
                        .fold(ratio, f64::max);
                    r
                }),
            };
            let Some(found) = found else { continue };
            let cand = EdgeResult {
                weight: found.value,
                pieces: found.pieces + 1,
                path: found.path,
                pair: Some(CirclePair::new(outer[ci].circle, inner[ii].circle)),
            };
            if best.as_ref().is_none_or(|b| self.better(&cand, b, objective)) {
                best = Some(cand);
            }
        }
        best
    }

    /// Outer candidates grouped by the vertices they hold; the smallest
    /// circle of each group represents it.
    fn outer_groups(&self, i: usize, j: usize, in_range: &FixedBitSet) -> Vec<OuterGroup> {
        let mut groups: HashMap<Vec<bool>, Circle> = HashMap::new();
        let mut order: Vec<Vec<bool>> = Vec::new();
        for c in enumerate_outer_circles(self.poly, i, j, self.tol) {
            let held: Vec<bool> = (i..=j).map(|v| c.contains(self.poly.vertex(v), self.tol)).collect();
            match groups.get_mut(&held) {
                Some(best) => {
                    if c.radius < best.radius {
                        *best = c;
                    }
                }
                None => {
                    order.push(held.clone());
                    groups.insert(held, c);
                }
            }
        }
        let edges = self.graph.edges();
        order
            .into_iter()
            .map(|held| {
                let mut arcs = FixedBitSet::with_capacity(edges.len());
                for k in in_range.ones() {
                    if held[edges[k].i - i] && held[edges[k].j - i] {
                        arcs.insert(k);
                    }
                }
                OuterGroup {
                    circle: groups[&held],
                    arcs,
                }
            })
            .collect()
    }

    /// Inner candidates admissible for edge `idx`, grouped by the arcs they
    /// allow; the largest circle of each group represents it.
    fn inner_groups(&self, idx: usize, in_range: &FixedBitSet) -> Vec<InnerGroup> {
        let mut groups: HashMap<FixedBitSet, usize> = HashMap::new();
        let mut out: Vec<InnerGroup> = Vec::new();
        for (p, c) in self.pool.iter().enumerate() {
            if !self.admissible[p].contains(idx) {
                continue;
            }
            let mut arcs = self.usable[p].clone();
            arcs.intersect_with(in_range);
            match groups.get(&arcs) {
                Some(&g) => {
                    if c.radius > out[g].circle.radius {
                        out[g].circle = *c;
                    }
                }
                None => {
                    groups.insert(arcs.clone(), out.len());
                    out.push(InnerGroup { circle: *c, arcs });
                }
            }
        }
        out
    }
}
