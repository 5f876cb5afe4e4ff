//! Vertex visibility graph: polygon edges plus every chord whose open
//! interior lies strictly inside the polygon.

use crate::geom::{open_segment_in_interior, Polygon, Segment, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VisEdge {
    pub i: usize,
    pub j: usize,
    pub boundary: bool,
}

impl VisEdge {
    pub fn is_diagonal(&self) -> bool {
        !self.boundary
    }

    /// Number of polygon edges strictly between `i` and `j` going forward,
    /// plus one.
    pub fn span(&self) -> usize {
        self.j - self.i
    }
}

#[derive(Debug, Clone)]
pub struct VisibilityGraph {
    n: usize,
    edges: Vec<VisEdge>,
    adj: Vec<bool>,
}

impl VisibilityGraph {
    /// Straightforward cubic construction: each of the quadratically many
    /// chords is tested against every polygon edge.
    pub fn build(poly: &Polygon, tol: Tolerance) -> Self {
        let n = poly.len();
        let mut edges = Vec::new();
        let mut adj = vec![false; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let boundary = j == i + 1 || (i == 0 && j == n - 1);
                let visible = boundary || {
                    let s = Segment {
                        a: poly.vertex(i),
                        b: poly.vertex(j),
                    };
                    open_segment_in_interior(poly, &s, tol)
                };
                if visible {
                    edges.push(VisEdge { i, j, boundary });
                    adj[i * n + j] = true;
                    adj[j * n + i] = true;
                }
            }
        }
        VisibilityGraph { n, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Edges with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> &[VisEdge] {
        &self.edges
    }

    pub fn diagonals(&self) -> impl Iterator<Item = &VisEdge> + '_ {
        self.edges.iter().filter(|e| !e.boundary)
    }

    pub fn sees(&self, i: usize, j: usize) -> bool {
        i != j && self.adj[i * self.n + j]
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.sees(i, j))
    }
}
