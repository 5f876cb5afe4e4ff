//! Command-line front end for `fatcut`.

pub mod polyfile;
pub mod report;
pub mod svg;

use std::fmt::Write;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use fatcut::dp::{Solver, TieBreak};
use fatcut::fatness::{FatnessReport, Metric};
use fatcut::gadgets::{catalog, ledger, verify_gadget_pieces, verify_gadget_ratio, Expectation};
use fatcut::oracle::{Oracle, DEFAULT_CAP};
use fatcut::Tolerance;

use crate::polyfile::{read_polygon, write_polygon};
use crate::report::PartitionReport;

#[derive(Debug, Parser)]
#[command(name = "fatcut", version, about = "Fat partitions of simple polygons along diagonals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MetricArg {
    Disk,
    Square,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::Disk => Metric::Disk,
            MetricArg::Square => Metric::Square,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TieArg {
    Smallest,
    Largest,
}

impl From<TieArg> for TieBreak {
    fn from(t: TieArg) -> Self {
        match t {
            TieArg::Smallest => TieBreak::LexSmallest,
            TieArg::Largest => TieBreak::LexLargest,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enclosing and inscribed circles/squares and aspect ratios.
    Fatness {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "disk")]
        metric: MetricArg,
        /// Also report whether the polygon is alpha-fat and alpha-small.
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Partition minimizing the largest disk aspect ratio.
    Minfat {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "smallest")]
        tie: TieArg,
    },
    /// Fewest pieces with disk aspect ratio at most alpha.
    Partition {
        file: PathBuf,
        #[arg(long)]
        alpha: f64,
        #[arg(long, value_enum, default_value = "smallest")]
        tie: TieArg,
    },
    /// Cross-check the DP against exhaustive enumeration.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Render the polygon, optionally with a partition report and circles.
    Svg {
        file: PathBuf,
        #[arg(long)]
        partition: Option<PathBuf>,
        #[arg(long)]
        circles: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every gadget polygon against its expected constant.
    GadgetVerify {
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
        /// Write each gadget polygon to this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Piece count of an assembled reduction: k = 8v + 4c + w.
    Ledger {
        #[arg(long)]
        variables: usize,
        #[arg(long)]
        clauses: usize,
        #[arg(long, default_value_t = 0)]
        bends: usize,
        #[arg(long, default_value_t = 0)]
        shifts: usize,
        #[arg(long, default_value_t = 0)]
        offsets: usize,
        #[arg(long, default_value_t = 0)]
        straight: usize,
    },
}

/// What a command printed and the exit code it asks for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_nan() || alpha < 1.0 {
        bail!("--alpha must be at least 1, got {alpha}");
    }
    Ok(())
}

fn f9(x: f64) -> String {
    format!("{x:.9}")
}

pub fn run(cli: Cli, tol: Tolerance) -> Result<Outcome> {
    match cli.command {
        Command::Fatness { file, metric, alpha } => {
            let poly = read_polygon(&file, tol)?;
            let metric = Metric::from(metric);
            let r = FatnessReport::compute(&poly, tol);
            let mut out = String::new();
            let _ = writeln!(out, "vertices: {}", poly.len());
            let _ = writeln!(out, "metric: {metric}");
            let _ = writeln!(out, "mcc_center: {} {}", f9(r.mcc.center.x), f9(r.mcc.center.y));
            let _ = writeln!(out, "mcc_diameter: {}", f9(r.mcc.diameter()));
            let _ = writeln!(out, "mic_center: {} {}", f9(r.mic.center.x), f9(r.mic.center.y));
            let _ = writeln!(out, "mic_diameter: {}", f9(r.mic.diameter()));
            let _ = writeln!(out, "square_out_side: {}", f9(r.sq_out_side));
            let _ = writeln!(out, "square_in_side: {}", f9(r.sq_in_side));
            let _ = writeln!(out, "ar_disk: {}", f9(r.ar_disk));
            let _ = writeln!(out, "ar_square: {}", f9(r.ar_square));
            let _ = writeln!(out, "aspect_ratio: {}", f9(r.aspect_ratio(metric)));
            let _ = writeln!(out, "size: {}", f9(r.size(metric)));
            if let Some(a) = alpha {
                check_alpha(a)?;
                let _ = writeln!(out, "alpha: {}", f9(a));
                let _ = writeln!(out, "fat: {}", r.aspect_ratio(metric) <= a + tol.geom_eps);
                let _ = writeln!(out, "small: {}", r.size(metric) <= a + tol.geom_eps);
            }
            Ok(Outcome::ok(out))
        }
        Command::Minfat { file, tie } => {
            let poly = read_polygon(&file, tol)?;
            let start = Instant::now();
            let part = Solver::new(&poly, tol).with_tie_break(tie.into()).minfat();
            let ms = start.elapsed().as_millis() as u64;
            let report = PartitionReport::new("minfat", &poly, None, Some(&part), ms, tol);
            Ok(Outcome::ok(report.to_json() + "\n"))
        }
        Command::Partition { file, alpha, tie } => {
            check_alpha(alpha)?;
            let poly = read_polygon(&file, tol)?;
            let start = Instant::now();
            let part = Solver::new(&poly, tol).with_tie_break(tie.into()).min_cardinality(alpha)?;
            let ms = start.elapsed().as_millis() as u64;
            let report = PartitionReport::new("partition", &poly, Some(alpha), part.as_ref(), ms, tol);
            Ok(Outcome::ok(report.to_json() + "\n"))
        }
        Command::Oracle { file, alpha, cap } => {
            if let Some(a) = alpha {
                check_alpha(a)?;
            }
            let poly = read_polygon(&file, tol)?;
            let oracle = Oracle::new(&poly, tol, cap)?;
            let solver = Solver::new(&poly, tol);
            let mut out = String::new();
            let mut agree = true;
            let (want, _) = oracle.minfat();
            let got = solver.minfat().achieved_alpha;
            let same = (want - got).abs() <= 1e-6;
            agree &= same;
            let _ = writeln!(out, "partitions: {}", oracle.partitions().len());
            let _ = writeln!(out, "oracle_minfat: {}", f9(want));
            let _ = writeln!(out, "dp_minfat: {}", f9(got));
            let _ = writeln!(out, "minfat: {}", if same { "agree" } else { "disagree" });
            if let Some(a) = alpha {
                let want = oracle.min_cardinality(a)?.map(|x| x.0);
                let got = solver.min_cardinality(a)?.map(|p| p.cardinality);
                let show = |c: Option<usize>| c.map_or("infeasible".to_string(), |c| c.to_string());
                let _ = writeln!(out, "oracle_cardinality: {}", show(want));
                let _ = writeln!(out, "dp_cardinality: {}", show(got));
                let _ = writeln!(out, "cardinality: {}", if want == got { "agree" } else { "disagree" });
                agree &= want == got;
            }
            Ok(Outcome {
                stdout: out,
                code: if agree { 0 } else { 1 },
            })
        }
        Command::Svg {
            file,
            partition,
            circles,
            out,
        } => {
            let poly = read_polygon(&file, tol)?;
            let pieces = match partition {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).with_context(|| format!("cannot read {}", path.display()))?;
                    let report: PartitionReport =
                        serde_json::from_str(&text).with_context(|| format!("{} is not a partition report", path.display()))?;
                    if report.vertices != poly.len() {
                        bail!(
                            "partition report is for a {}-vertex polygon, but {} has {}",
                            report.vertices,
                            file.display(),
                            poly.len()
                        );
                    }
                    if !report.feasible {
                        bail!("partition report records an infeasible run; nothing to draw");
                    }
                    if let Some(bad) = report.pieces.iter().flatten().find(|&&v| v >= poly.len()) {
                        bail!("partition report names vertex {bad}, out of range");
                    }
                    Some(report.pieces)
                }
                None => None,
            };
            let doc = svg::render(
                &poly,
                &svg::SvgOptions {
                    pieces: pieces.as_deref(),
                    circles,
                },
                tol,
            );
            match out {
                Some(path) => {
                    std::fs::write(&path, &doc).with_context(|| format!("cannot write {}", path.display()))?;
                    Ok(Outcome::ok(format!("wrote {}\n", path.display())))
                }
                None => Ok(Outcome::ok(doc)),
            }
        }
        Command::GadgetVerify { tolerance, out } => {
            if let Some(dir) = &out {
                std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
            }
            let mut text = String::new();
            let mut all = true;
            for g in catalog() {
                if let Some(dir) = &out {
                    let path = dir.join(format!("{}.poly", g.name));
                    let header = format!("{} ({}, {})", g.name, g.kind, g.regime);
                    std::fs::write(&path, write_polygon(&g.polygon, Some(&header)))
                        .with_context(|| format!("cannot write {}", path.display()))?;
                }
                match g.expect {
                    Expectation::Ratio { value, .. } => {
                        let r = verify_gadget_ratio(&g, value, tolerance, tol);
                        all &= r.pass;
                        let _ = writeln!(
                            text,
                            "{} {} {} measured={} expected={} feasible={} {}",
                            r.name,
                            r.kind,
                            r.regime,
                            f9(r.measured),
                            f9(r.expected),
                            r.feasible,
                            if r.pass { "PASS" } else { "FAIL" }
                        );
                    }
                    Expectation::Pieces { count } => {
                        let r = verify_gadget_pieces(&g, count, tol)?;
                        all &= r.pass;
                        let counts: Vec<String> =
                            r.counts.iter().map(|c| c.map_or("none".into(), |c| c.to_string())).collect();
                        let _ = writeln!(
                            text,
                            "{} {} {} pieces={} expected={} distinct_witnesses={} {}",
                            g.name,
                            g.kind,
                            g.regime,
                            counts.join("/"),
                            count,
                            r.distinct_witnesses,
                            if r.pass { "PASS" } else { "FAIL" }
                        );
                    }
                }
            }
            Ok(Outcome {
                stdout: text,
                code: if all { 0 } else { 1 },
            })
        }
        Command::Ledger {
            variables,
            clauses,
            bends,
            shifts,
            offsets,
            straight,
        } => {
            let l = ledger(variables, clauses, bends, shifts, offsets, straight);
            Ok(Outcome::ok(format!("v: {}\nc: {}\nw: {}\nk: {}\n", l.v, l.c, l.w, l.k)))
        }
    }
}
