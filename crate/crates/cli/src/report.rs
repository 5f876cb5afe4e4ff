//! JSON partition reports.

use fatcut::fatness::ar_disk;
use fatcut::{Partition, Polygon, Tolerance};
use serde::{Deserialize, Serialize};

/// Fields serialize in declaration order. Everything except `runtime_ms` is
/// a function of the input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub command: String,
    pub vertices: usize,
    pub alpha: Option<f64>,
    pub feasible: bool,
    pub achieved_alpha: Option<f64>,
    pub cardinality: Option<usize>,
    pub pieces: Vec<Vec<usize>>,
    pub piece_ar: Vec<f64>,
    pub runtime_ms: u64,
}

/// Rounds to 9 decimals so reports do not churn on the last few bits.
pub fn round9(x: f64) -> f64 {
    (x * 1e9).round() / 1e9
}

impl PartitionReport {
    pub fn new(
        command: &str,
        poly: &Polygon,
        alpha: Option<f64>,
        found: Option<&Partition>,
        runtime_ms: u64,
        tol: Tolerance,
    ) -> Self {
        let mut pieces: Vec<Vec<usize>> = found.map(|p| p.pieces.clone()).unwrap_or_default();
        pieces.sort();
        let piece_ar = pieces
            .iter()
            .map(|q| round9(ar_disk(&poly.sub_polygon(q).expect("pieces are simple"), tol)))
            .collect();
        PartitionReport {
            command: command.to_string(),
            vertices: poly.len(),
            alpha: alpha.map(round9),
            feasible: found.is_some(),
            achieved_alpha: found.map(|p| round9(p.achieved_alpha)),
            cardinality: found.map(|p| p.cardinality),
            pieces,
            piece_ar,
            runtime_ms,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
