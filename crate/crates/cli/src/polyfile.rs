//! Plain-text polygon files: one `x y` vertex per line, counterclockwise.
//! `#` starts a comment; blank lines are ignored.

use std::fmt::Write;
use std::path::Path;

use fatcut::{Point, Polygon, Tolerance};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: expected two numbers `x y`, got `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: `{text}` is not a finite number")]
    BadNumber { line: usize, text: String },
    #[error("invalid polygon: {0}")]
    Invalid(#[from] fatcut::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub fn parse_polygon(text: &str, tol: Tolerance) -> Result<Polygon, ParseError> {
    let mut pts = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(ParseError::Malformed {
                line,
                text: body.to_string(),
            });
        }
        let mut xy = [0.0; 2];
        for (slot, f) in xy.iter_mut().zip(&fields) {
            *slot = f
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| ParseError::BadNumber {
                    line,
                    text: f.to_string(),
                })?;
        }
        pts.push(Point::new(xy[0], xy[1]));
    }
    Ok(Polygon::with_tolerance(pts, tol)?)
}

pub fn read_polygon(path: &Path, tol: Tolerance) -> Result<Polygon, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_polygon(&text, tol)
}

/// Shortest decimal form that parses back to the same `f64`.
pub fn write_polygon(poly: &Polygon, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    for p in poly.vertices() {
        let _ = writeln!(out, "{} {}", p.x, p.y);
    }
    out
}
