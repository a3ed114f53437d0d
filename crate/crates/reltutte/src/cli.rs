//! Command line front end.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use reltutte_core::expansion::ProperLabeling;
use reltutte_core::knot::{bracket_from_relative, component_count, jones_from_bracket, BracketPoly, FaceGraph, JonesPoly};
use reltutte_core::psi::{psi_by_name, zero_order, PsiError, PSI_NAMES};
use reltutte_core::special::{random_cluster_z, set_pointed_direct, set_pointed_via_relative, ClusterInstance};
use reltutte_core::{ColoredMultigraph, EdgeColor, EdgeId};
use serde_json::json;

use crate::format::{read_face_graph, read_graph, read_pd, FormatError};
use crate::parallel::{self, SharedCache};
use crate::selftest;

#[derive(Parser, Debug)]
#[command(name = "reltutte", version, about = "Relative Tutte polynomials, Kauffman brackets and Jones polynomials")]
pub struct Cli {
    /// Print a JSON object instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: u16,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Relative Tutte polynomial of a colored graph.
    Tutte {
        #[arg(long)]
        graph: PathBuf,
        /// `from-color`, or a comma separated list of edge ids to treat as zero edges.
        #[arg(long, default_value = "from-color")]
        zero_edges: String,
        /// One of: knot, one, alpha, chromatic, rank-z, nested-tutte.
        #[arg(long)]
        psi: String,
        /// Apply the localization before printing.
        #[arg(long)]
        localized: bool,
        /// `dc` (deletion–contraction) or `expansion` (sum over contracting sets, file labels).
        #[arg(long, default_value = "dc")]
        method: String,
    },
    /// Kauffman bracket of a face graph.
    Bracket {
        #[arg(long)]
        face_graph: PathBuf,
    },
    /// Jones polynomial of a face graph.
    Jones {
        #[arg(long)]
        face_graph: PathBuf,
        /// Overrides the writhe stored in the file.
        #[arg(long, allow_hyphen_values = true)]
        writhe: Option<i64>,
    },
    /// Kauffman bracket of a PD code by state summation.
    Oracle {
        #[arg(long)]
        pd: PathBuf,
    },
    /// Zero order of a graph of zero edges.
    ZeroOrder {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Set-pointed Tutte polynomial.
    Pointed {
        #[arg(long)]
        graph: PathBuf,
        /// Comma separated edge ids; may be empty.
        #[arg(long, default_value = "")]
        pointed_set: String,
        /// Use the direct subset sum instead of the relative Tutte polynomial.
        #[arg(long)]
        direct: bool,
    },
    /// Random-cluster generating function.
    Cluster {
        #[arg(long)]
        graph: PathBuf,
        /// One rational for every edge (`1/2`), or `id=rational` pairs (`1=1/2,2=1/3`).
        #[arg(long)]
        p: String,
    },
    /// Check the built-in worked examples.
    Selftest,
}

/// Exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Debug)]
enum Failure {
    Input(String),
    Internal(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn psi_failure(e: PsiError) -> Failure {
    match e {
        PsiError::NotPowerOfTwo(_) => Failure::Internal(e.to_string()),
        _ => Failure::Input(e.to_string()),
    }
}

/// Output of one command: plain text plus the fields of the JSON form.
struct Report {
    text: String,
    fields: serde_json::Map<String, serde_json::Value>,
    notes: Vec<String>,
}

impl Report {
    fn new(command: &str, result: impl ToString) -> Self {
        let text = result.to_string();
        let mut fields = serde_json::Map::new();
        fields.insert("command".into(), json!(command));
        fields.insert("result".into(), json!(text));
        Report { text, fields, notes: Vec::new() }
    }

    fn with(mut self, key: &str, value: serde_json::Value) -> Self {
        self.fields.insert(key.into(), value);
        self
    }
}

fn parse_ids(s: &str) -> Result<BTreeSet<EdgeId>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|w| !w.is_empty())
        .map(|w| w.parse().map(EdgeId).map_err(|_| Failure::Input(format!("bad edge id `{w}`"))))
        .collect()
}

fn parse_rational(s: &str) -> Result<BigRational, Failure> {
    s.trim().parse().map_err(|_| Failure::Input(format!("bad probability `{s}`")))
}

/// Reassigns zero edges: every listed edge becomes a zero edge keeping its
/// color as secondary color, and no other edge may be a zero edge.
fn apply_zero_list(g: &ColoredMultigraph, arg: &str) -> Result<ColoredMultigraph, Failure> {
    if arg == "from-color" {
        return Ok(g.clone());
    }
    let list = parse_ids(arg)?;
    for id in &list {
        g.edge(*id).map_err(|e| Failure::Input(e.to_string()))?;
    }
    if let Some(e) = g.zero_edges().find(|e| !list.contains(&e.id)) {
        return Err(Failure::Input(format!("edge {} is colored 0 but not listed in --zero-edges", e.id.0)));
    }
    let recolored = g.recolored(|e| match &e.color {
        EdgeColor::Regular(c) if list.contains(&e.id) => EdgeColor::Zero(Some(c.clone())),
        c => c.clone(),
    });
    let regular: Vec<EdgeId> = recolored.regular_edges().map(|e| e.id).collect();
    let mut labels: Vec<(u32, EdgeId)> = recolored.regular_edges().map(|e| (e.label, e.id)).collect();
    labels.sort();
    let rank: BTreeMap<EdgeId, u32> = labels.iter().enumerate().map(|(i, (_, id))| (*id, i as u32 + 1)).collect();
    debug_assert_eq!(rank.len(), regular.len());
    Ok(recolored.relabeled(|e| rank.get(&e.id).copied().unwrap_or(0)))
}

fn jones_report(j: &JonesPoly) -> Report {
    match j.to_t_string() {
        Some(t) => Report::new("jones", t).with("variable", json!("t")),
        None => {
            let mut r = Report::new("jones", j.to_q_string()).with("variable", json!("q"));
            r.notes.push("note: fractional powers of t; printed in q = t^(1/4)".into());
            r
        }
    }
}

fn bracket_of(fg: &FaceGraph, cache: &SharedCache, threads: usize) -> Result<BracketPoly, Failure> {
    let knot = psi_by_name("knot").expect("knot ψ is built in");
    let t = parallel::relative_tutte(fg.graph(), knot.as_ref(), cache, threads).map_err(psi_failure)?;
    Ok(bracket_from_relative(&t))
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    let threads = cli.threads as usize;
    let cache = || SharedCache::from_env().map_err(Failure::Input);
    match &cli.command {
        Command::Tutte { graph, zero_edges, psi, localized, method } => {
            let g = apply_zero_list(&read_graph(graph)?, zero_edges)?;
            let map = psi_by_name(psi).ok_or_else(|| {
                Failure::Input(format!("unknown psi `{psi}`; expected one of {}", PSI_NAMES.join(", ")))
            })?;
            let t = match method.as_str() {
                "dc" => parallel::relative_tutte(&g, map.as_ref(), &cache()?, threads).map_err(psi_failure)?,
                "expansion" => {
                    let phi = ProperLabeling::from_graph(&g);
                    parallel::relative_tutte_expansion(&g, &phi, map.as_ref(), threads).map_err(|e| match e {
                        reltutte_core::expansion::ExpansionError::Psi(p) => psi_failure(p),
                        other => Failure::Input(other.to_string()),
                    })?
                }
                m => return Err(Failure::Input(format!("unknown method `{m}`; expected dc or expansion"))),
            };
            let t = if *localized { t.localize() } else { t };
            Ok(Report::new("tutte", t).with("psi", json!(psi)).with("localized", json!(localized)))
        }
        Command::Bracket { face_graph } => {
            let fg = read_face_graph(face_graph, Some(0))?;
            Ok(Report::new("bracket", bracket_of(&fg, &cache()?, threads)?))
        }
        Command::Jones { face_graph, writhe } => {
            let fg = read_face_graph(face_graph, *writhe)?;
            let b = bracket_of(&fg, &cache()?, threads)?;
            Ok(jones_report(&jones_from_bracket(&b, fg.writhe())).with("writhe", json!(fg.writhe())))
        }
        Command::Oracle { pd } => {
            let diag = read_pd(pd)?;
            let b = parallel::state_sum_bracket(&diag, threads);
            Ok(Report::new("oracle", b)
                .with("components", json!(component_count(&diag)))
                .with("writhe", json!(diag.writhe())))
        }
        Command::ZeroOrder { graph } => {
            let n = zero_order(&read_graph(graph)?).map_err(psi_failure)?;
            Ok(Report::new("zero-order", n))
        }
        Command::Pointed { graph, pointed_set, direct } => {
            let g = read_graph(graph)?;
            let a = parse_ids(pointed_set)?;
            let t = if *direct { set_pointed_direct(&g, &a) } else { set_pointed_via_relative(&g, &a) }
                .map_err(|e| Failure::Input(e.to_string()))?;
            Ok(Report::new("pointed", t))
        }
        Command::Cluster { graph, p } => {
            let g = read_graph(graph)?;
            let probs: BTreeMap<EdgeId, BigRational> = if p.contains('=') {
                p.split(',')
                    .filter(|w| !w.trim().is_empty())
                    .map(|pair| {
                        let (id, value) = pair.split_once('=').ok_or_else(|| Failure::Input(format!("bad pair `{pair}`")))?;
                        let id = id.trim().parse().map_err(|_| Failure::Input(format!("bad edge id `{id}`")))?;
                        Ok((EdgeId(id), parse_rational(value)?))
                    })
                    .collect::<Result<_, Failure>>()?
            } else {
                let value = parse_rational(p)?;
                g.edges().iter().map(|e| (e.id, value.clone())).collect()
            };
            let inst = ClusterInstance::new(g, probs).map_err(|e| Failure::Input(e.to_string()))?;
            let z = random_cluster_z(&inst).map_err(|e| Failure::Input(e.to_string()))?;
            Ok(Report::new("cluster", z))
        }
        Command::Selftest => {
            let checks = selftest::run();
            let mut lines = Vec::new();
            for c in &checks {
                lines.push(format!("{} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail));
            }
            let failures = checks.iter().filter(|c| !c.passed).count();
            lines.push(format!("{} checks, {} failed", checks.len(), failures));
            if failures > 0 {
                return Err(Failure::Internal(lines.join("\n")));
            }
            let summary = json!(checks.iter().map(|c| json!({"name": c.name, "passed": c.passed})).collect::<Vec<_>>());
            let mut r = Report::new("selftest", lines.join("\n"));
            r.fields.insert("result".into(), json!("ok"));
            Ok(r.with("checks", summary))
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_INPUT,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            for n in &report.notes {
                let _ = writeln!(err, "{n}");
            }
            let written = if cli.json {
                writeln!(out, "{}", serde_json::Value::Object(report.fields))
            } else {
                writeln!(out, "{}", report.text)
            };
            match written {
                Ok(()) => EXIT_OK,
                Err(_) => EXIT_INTERNAL,
            }
        }
        Err(Failure::Input(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_INPUT
        }
        Err(Failure::Internal(m)) => {
            let _ = writeln!(err, "internal error: {m}");
            EXIT_INTERNAL
        }
    }
}
