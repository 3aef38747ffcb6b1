//! The `mpdr` command line.
//!
//! Exit codes: 0 success (or a positive verdict), 1 verified negative,
//! 2 bad parameters or a parameter combination with no representation,
//! 3 unreadable or malformed input.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::autgroup::{automorphisms, brute_force_automorphisms, verify_mcayley, AutOptions};
use crate::constructions::{
    cyclic_2pdr, cyclic_mpdr, drr_to_2pdr, find_valency2_orr, identity_generator_warning,
    two_generated_mpdr,
};
use crate::digraph::Digraph;
use crate::error::Error;
use crate::group::{Elem, FiniteGroup};
use crate::mcayley::{ConnectionSpec, MCayleyDigraph};
use crate::search::{
    exhaust_2partite_valency3, find_valency2_drr, trivial_aut_3regular_search, RigidMode,
    RigidSearch,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "mpdr",
    version,
    about = "m-partite Cayley digraphs and their automorphism groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit the connection spec of a valency-3 recipe.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        /// Order of the cyclic group.
        #[arg(long)]
        n: Option<usize>,
        /// Number of parts.
        #[arg(long)]
        m: Option<usize>,
        /// Group spec file (two-gen-mpdr, drr-extend).
        #[arg(long)]
        group: Option<PathBuf>,
        /// Element index of x (defaults to the first designated generator).
        #[arg(long)]
        x: Option<Elem>,
        /// Element index of y (defaults to the second designated generator).
        #[arg(long)]
        y: Option<Elem>,
        /// Comma-separated DRR connection set for drr-extend; searched for
        /// (as a valency-2 ORR) when omitted.
        #[arg(long, value_delimiter = ',')]
        r: Option<Vec<Elem>>,
        /// Write the connection spec here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a spec gives an m-PDR.
    Verify {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        spec: PathBuf,
        /// Ignore the part colouring during the search (the default).
        #[arg(long, default_value_t = true)]
        color_blind: bool,
        /// Only consider automorphisms that fix every part.
        #[arg(long, conflicts_with = "color_blind")]
        use_part_colors: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Automorphism group of a digraph file.
    Aut {
        #[arg(long)]
        digraph: PathBuf,
        /// Enumerate all permutations instead (at most 9 vertices).
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a digraph, or the digraph of a spec, in another format.
    Export {
        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,
        #[arg(long, conflicts_with_all = ["group", "spec"])]
        digraph: Option<PathBuf>,
        #[arg(long, requires = "spec")]
        group: Option<PathBuf>,
        #[arg(long, requires = "group")]
        spec: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one of the searches and print a verdict record.
    Search {
        #[arg(long, value_enum)]
        problem: Problem,
        /// Number of vertices (rigid3).
        #[arg(long)]
        m: Option<usize>,
        /// Cyclic group order (exhaust-negative).
        #[arg(long)]
        n: Option<usize>,
        /// Group spec file (drr2, orr2).
        #[arg(long)]
        group: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Restrict to oriented digraphs (rigid3).
        #[arg(long)]
        oriented: bool,
        /// Visit every regular digraph rather than stopping branches early.
        #[arg(long)]
        complete: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    #[value(name = "cyclic-2pdr")]
    Cyclic2pdr,
    CyclicMpdr,
    TwoGenMpdr,
    DrrExtend,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Problem {
    Rigid3,
    Drr2,
    Orr2,
    ExhaustNegative,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Exhaustive,
    Randomized,
}

struct CliError {
    code: i32,
    message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Io(_) | Error::Json(_) => EXIT_INPUT,
            _ => EXIT_PRECONDITION,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_PRECONDITION,
        message: msg.into(),
    }
}

/// Reads inputs and records their SHA-256 digests for the report.
#[derive(Default)]
struct Inputs {
    hashes: BTreeMap<String, String>,
}

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<String, CliError> {
        let text = fs::read_to_string(path).map_err(|e| input_error(path, e))?;
        self.hashes.insert(
            path.display().to_string(),
            hex::encode(Sha256::digest(text.as_bytes())),
        );
        Ok(text)
    }

    fn group(&mut self, path: &Path) -> Result<FiniteGroup, CliError> {
        let text = self.read(path)?;
        FiniteGroup::parse(&text).map_err(|e| input_error(path, e))
    }

    fn spec(&mut self, path: &Path) -> Result<ConnectionSpec, CliError> {
        let text = self.read(path)?;
        ConnectionSpec::from_json(&text).map_err(|e| input_error(path, e))
    }

    fn digraph(&mut self, path: &Path) -> Result<Digraph, CliError> {
        let text = self.read(path)?;
        Digraph::parse(&text).map_err(|e| input_error(path, e))
    }

    /// Adds the tool version and input digests to a JSON report object.
    fn stamp(&self, mut report: Value) -> Value {
        if let Value::Object(map) = &mut report {
            map.insert(
                "tool_version".into(),
                json!(format!("mpdr {}", crate::VERSION)),
            );
            map.insert("input_sha256".into(), json!(self.hashes));
        }
        report
    }
}

struct Output<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Output<'_> {
    fn emit(&mut self, text: &str, path: Option<&Path>) -> Result<(), CliError> {
        match path {
            Some(p) => fs::write(p, text).map_err(|e| input_error(p, e)),
            None => self
                .out
                .write_all(text.as_bytes())
                .map_err(|e| usage(format!("writing output: {e}"))),
        }
    }

    fn json(&mut self, value: &Value, path: Option<&Path>) -> Result<(), CliError> {
        let mut text = serde_json::to_string_pretty(value).expect("report serializes");
        text.push('\n');
        self.emit(&text, path)
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_PRECONDITION
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let mut io = Output { out, err };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {}", e.message);
            e.code
        }
    }
}

fn dispatch(command: Command, io: &mut Output<'_>) -> Result<i32, CliError> {
    let mut inputs = Inputs::default();
    match command {
        Command::Construct {
            family,
            n,
            m,
            group,
            x,
            y,
            r,
            out,
        } => {
            let need = |v: Option<usize>, flag: &str| {
                v.ok_or_else(|| usage(format!("--{flag} is required")))
            };
            let (spec, summary) = match family {
                Family::Cyclic2pdr => {
                    let n = need(n, "n")?;
                    (
                        cyclic_2pdr(n)?,
                        json!({ "family": "cyclic-2pdr", "n": n, "m": 2 }),
                    )
                }
                Family::CyclicMpdr => {
                    let (n, m) = (need(n, "n")?, need(m, "m")?);
                    (
                        cyclic_mpdr(n, m)?,
                        json!({ "family": "cyclic-mpdr", "n": n, "m": m }),
                    )
                }
                Family::TwoGenMpdr => {
                    let path = group.ok_or_else(|| usage("--group is required"))?;
                    let g = inputs.group(&path)?;
                    let m = need(m, "m")?;
                    let designated = g.generators();
                    let x = x
                        .or(designated.first().copied())
                        .ok_or_else(|| usage("--x is required"))?;
                    let y = y
                        .or(designated.get(1).copied())
                        .ok_or_else(|| usage("--y is required"))?;
                    if let Some(w) = identity_generator_warning(x, y) {
                        let _ = writeln!(io.err, "warning: {w}");
                    }
                    (
                        two_generated_mpdr(&g, x, y, m)?,
                        json!({ "family": "two-gen-mpdr", "m": m, "x": g.label(x), "y": g.label(y) }),
                    )
                }
                Family::DrrExtend => {
                    let path = group.ok_or_else(|| usage("--group is required"))?;
                    let g = inputs.group(&path)?;
                    let r = match r {
                        Some(r) => r,
                        None => find_valency2_orr(&g)?
                            .ok_or_else(|| usage("no valency-2 ORR found; pass --r"))?
                            .to_vec(),
                    };
                    let spec = drr_to_2pdr(&g, &r)?;
                    (spec, json!({ "family": "drr-extend", "m": 2, "r": r }))
                }
            };
            let mut summary = summary;
            summary["valency"] = json!(spec.valency());
            summary["group_order"] = json!(spec.group_order());
            let summary = inputs.stamp(summary);
            match out {
                Some(path) => {
                    io.emit(&spec.to_json(), Some(&path))?;
                    io.json(&summary, None)?;
                }
                None => {
                    io.emit(&spec.to_json(), None)?;
                    let _ = writeln!(
                        io.err,
                        "{}",
                        serde_json::to_string(&summary).unwrap_or_default()
                    );
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            group,
            spec,
            color_blind: _,
            use_part_colors,
            out,
        } => {
            let g = inputs.group(&group)?;
            let s = inputs.spec(&spec)?;
            let x = MCayleyDigraph::build(&g, &s)?;
            let report = verify_mcayley(&x, !use_part_colors)?;
            let value = inputs.stamp(serde_json::to_value(&report).expect("report serializes"));
            io.json(&value, out.as_deref())?;
            Ok(if report.is_pdr {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Aut {
            digraph,
            oracle,
            out,
        } => {
            let d = inputs.digraph(&digraph)?;
            let (group, method) = if oracle {
                (brute_force_automorphisms(&d)?, "brute-force")
            } else {
                (
                    automorphisms(&d, AutOptions::default())?.group,
                    "refinement",
                )
            };
            let mut value = serde_json::to_value(group.report()).expect("report serializes");
            value["method"] = json!(method);
            io.json(&inputs.stamp(value), out.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Export {
            format,
            digraph,
            group,
            spec,
            out,
        } => {
            let (d, labels) = match (digraph, group, spec) {
                (Some(path), _, _) => (inputs.digraph(&path)?, None),
                (None, Some(gp), Some(sp)) => {
                    let g = inputs.group(&gp)?;
                    let s = inputs.spec(&sp)?;
                    let x = MCayleyDigraph::build(&g, &s)?;
                    let labels = x.vertex_labels();
                    (x.digraph().clone(), Some(labels))
                }
                _ => return Err(usage("pass --digraph, or --group with --spec")),
            };
            let text = match format {
                ExportFormat::Dot => d.to_dot(labels.as_deref()),
                ExportFormat::Text => d.to_text(),
            };
            io.emit(&text, out.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Search {
            problem,
            m,
            n,
            group,
            mode,
            budget,
            seed,
            jobs,
            oriented,
            complete,
            out,
        } => {
            let value = match problem {
                Problem::Rigid3 => {
                    let m = m.ok_or_else(|| usage("--m is required"))?;
                    let opts = RigidSearch {
                        m,
                        mode: match mode {
                            Mode::Exhaustive => RigidMode::Exhaustive,
                            Mode::Randomized => RigidMode::Randomized { budget, seed },
                        },
                        jobs,
                        oriented_only: oriented,
                        complete,
                    };
                    let mut v = serde_json::to_value(trivial_aut_3regular_search(&opts)?)
                        .expect("record serializes");
                    v["parameters"]["jobs"] = json!(jobs);
                    v
                }
                Problem::Drr2 | Problem::Orr2 => {
                    let path = group.ok_or_else(|| usage("--group is required"))?;
                    let g = inputs.group(&path)?;
                    let start = std::time::Instant::now();
                    let (name, found) = match problem {
                        Problem::Drr2 => ("drr2", find_valency2_drr(&g)?),
                        _ => ("orr2", find_valency2_orr(&g)?),
                    };
                    json!({
                        "problem": name,
                        "parameters": { "group_order": g.order() },
                        "verdict": if found.is_some() { "found" } else { "none-exists" },
                        "witness": found.map(|p| json!({
                            "elements": p,
                            "labels": [g.label(p[0]), g.label(p[1])],
                        })),
                        "nodes_explored": g.order() * (g.order() - 1) / 2,
                        "wall_time": start.elapsed().as_secs_f64(),
                    })
                }
                Problem::ExhaustNegative => {
                    let n = n.ok_or_else(|| usage("--n is required"))?;
                    let g = FiniteGroup::cyclic(n)?;
                    let start = std::time::Instant::now();
                    let records = exhaust_2partite_valency3(&g)?;
                    let exceeding = records
                        .iter()
                        .filter(|r| r.aut_order > num_bigint::BigUint::from(n))
                        .count();
                    json!({
                        "problem": "exhaust-negative",
                        "parameters": { "n": n, "m": 2, "valency": 3 },
                        "verdict": if exceeding == records.len() { "none-exists" } else { "found" },
                        "nodes_explored": records.len(),
                        "wall_time": start.elapsed().as_secs_f64(),
                        "records": records,
                    })
                }
            };
            io.json(&inputs.stamp(value), out.as_deref())?;
            Ok(EXIT_OK)
        }
    }
}
