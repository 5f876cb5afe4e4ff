//! Path searches over forward arcs `k -> l` with `k < l`.
//!
//! Every arc goes from a lower to a higher vertex index, so the arc set is a
//! DAG and both searches are single sweeps in index order. The direct arc
//! `source -> target` is never used: a one-arc path bounds no polygon.

use std::cmp::Ordering;

/// Which witness to report when several paths tie.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Lexicographically smallest vertex sequence.
    #[default]
    LexSmallest,
    /// Lexicographically largest vertex sequence.
    LexLargest,
}

impl TieBreak {
    /// Orders two equally good vertex sequences; `Less` means preferred.
    pub fn compare(self, a: &[usize], b: &[usize]) -> Ordering {
        match self {
            TieBreak::LexSmallest => a.cmp(b),
            TieBreak::LexLargest => b.cmp(a),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedArc {
    pub from: usize,
    pub to: usize,
    pub weight: f64,
    /// Pieces already committed below this arc (0 for a boundary edge).
    pub pieces: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathResult {
    /// `max(bottleneck, floor)` for min-max searches, the summed piece count
    /// for min-sum searches.
    pub value: f64,
    pub pieces: usize,
    pub path: Vec<usize>,
}

/// Weights within this distance of the bottleneck count as equal.
pub const TIE_EPS: f64 = 1e-9;

fn incoming(vertex_count: usize, arcs: &[WeightedArc], source: usize, target: usize) -> Vec<Vec<usize>> {
    let mut inc = vec![Vec::new(); vertex_count];
    for (idx, a) in arcs.iter().enumerate() {
        assert!(a.from < a.to, "arcs must go forward");
        if (a.from, a.to) != (source, target) && a.from >= source && a.to <= target {
            inc[a.to].push(idx);
        }
    }
    inc
}

/// Bottleneck path from `source` to `target`: minimizes the largest arc
/// weight, and reports `max(bottleneck, floor)`.
///
/// Among paths whose arcs all stay within the optimal value, the one with the
/// fewest pieces wins, then the one preferred by `tie`. Returns `None` when
/// no path with at least two arcs exists.
pub fn minmax_path(
    vertex_count: usize,
    arcs: &[WeightedArc],
    source: usize,
    target: usize,
    floor: f64,
    tie: TieBreak,
) -> Option<PathResult> {
    let inc = incoming(vertex_count, arcs, source, target);
    let mut best = vec![f64::INFINITY; vertex_count];
    best[source] = f64::NEG_INFINITY;
    for v in (source + 1)..=target {
        for &idx in &inc[v] {
            let a = &arcs[idx];
            let through = best[a.from].max(a.weight);
            if through < best[v] {
                best[v] = through;
            }
        }
    }
    if !best[target].is_finite() {
        return None;
    }
    let value = best[target].max(floor);
    let allowed: Vec<WeightedArc> = arcs
        .iter()
        .copied()
        .filter(|a| a.weight <= value + TIE_EPS)
        .collect();
    let mut found = fewest_pieces(vertex_count, &allowed, source, target, tie)?;
    found.value = value;
    Some(found)
}

/// Path minimizing the summed `pieces` of its arcs, ties broken by `tie`.
/// Arc weights are ignored.
pub fn min_sum_path(
    vertex_count: usize,
    arcs: &[WeightedArc],
    source: usize,
    target: usize,
    tie: TieBreak,
) -> Option<PathResult> {
    let mut found = fewest_pieces(vertex_count, arcs, source, target, tie)?;
    found.value = found.pieces as f64;
    Some(found)
}

fn fewest_pieces(
    vertex_count: usize,
    arcs: &[WeightedArc],
    source: usize,
    target: usize,
    tie: TieBreak,
) -> Option<PathResult> {
    // Outgoing arcs, so the backward sweep can compute cost-to-target.
    let mut out = vec![Vec::new(); vertex_count];
    for a in arcs {
        if (a.from, a.to) != (source, target) && a.from >= source && a.to <= target {
            out[a.from].push(*a);
        }
    }
    let mut cost = vec![usize::MAX; vertex_count];
    cost[target] = 0;
    for v in (source..target).rev() {
        for a in &out[v] {
            if cost[a.to] != usize::MAX {
                cost[v] = cost[v].min(cost[a.to] + a.pieces);
            }
        }
    }
    if cost[source] == usize::MAX {
        return None;
    }
    // Greedy walk: every step that keeps the optimal cost is available, and
    // picking the extreme next vertex yields the extreme sequence.
    let mut path = vec![source];
    let mut v = source;
    while v != target {
        let step = out[v]
            .iter()
            .filter(|a| cost[a.to] != usize::MAX && a.pieces + cost[a.to] == cost[v])
            .map(|a| a.to);
        v = match tie {
            TieBreak::LexSmallest => step.min(),
            TieBreak::LexLargest => step.max(),
        }
        .expect("an optimal successor exists");
        path.push(v);
    }
    Some(PathResult {
        value: cost[source] as f64,
        pieces: cost[source],
        path,
    })
}
