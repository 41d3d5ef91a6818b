//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input (unreadable file, malformed or
//! non-planar embedding, bad generator size), 2 an identity violation was
//! found, 64 usage error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::audit::audit;
use crate::census::{classify_vertices, degree_census, gonality_histogram};
use crate::classes::{classify, Gamma2ScanInput};
use crate::embedding::PlaneGraph;
use crate::enumerate::{enumerate_small, GonalityFilter};
use crate::generators::{fuzz, gen_grid, gen_polygon, gen_prism, gen_wheel, FuzzConfig, FuzzFamily};
use crate::io::{build_report, parse_embedding, serialize_embedding, serialize_report, summarize};
use crate::par::{self, Execution};
use crate::relations::{evaluate_catalog, RelationId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "planar-euler", version, about = "Euler-type identity checks for plane graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate an embedding file.
    Validate { file: PathBuf },
    /// Degree census, vertex partition, gonality histogram and counting identities.
    Census { file: PathBuf },
    /// Evaluate relations; exits 2 if an applicable one has a nonzero residual.
    Check {
        file: PathBuf,
        /// MASTER, D4_GENERAL, GAMMA2, GAMMA2_CORRECTED, GAMMA2_PRINTED, FACE_SYSTEM, F3_PREDICTION
        #[arg(long)]
        relation: Option<String>,
        #[arg(long, value_enum, default_value_t = Variant::Corrected)]
        variant: Variant,
    },
    /// Class membership and the one-pass class-2 scan.
    Classify { file: PathBuf },
    /// Full structured report.
    Report { file: PathBuf },
    /// Write a family member as an embedding document.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated sizes: `n` for polygon/prism/wheel, `m,n` for grid.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        params: Vec<usize>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Random class-preserving refinements, audited; exits 2 on a violation.
    Fuzz {
        #[arg(long)]
        family: FuzzFamily,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        ops: usize,
        /// Number of consecutive seeds starting at `--seed`.
        #[arg(long, default_value_t = 1)]
        count: u64,
        /// Print each graph's embedding document after its summary line.
        #[arg(long)]
        emit: bool,
    },
    /// Exhaustive small-graph oracle, audited; exits 2 on a violation.
    Enumerate {
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, value_delimiter = ',')]
        gonality: Option<Vec<usize>>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Variant {
    Corrected,
    Printed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Polygon,
    Grid,
    Prism,
    Wheel,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(stderr, "error: {message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn invalid(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_INVALID,
        message: message.to_string(),
    }
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
    }
}

fn load(path: &Path) -> Result<PlaneGraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    parse_embedding(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) {
    let _ = writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(value).expect("plain data serializes")
    );
}

fn emit_line<T: Serialize>(out: &mut dyn Write, value: &T) {
    let _ = writeln!(out, "{}", serde_json::to_string(value).expect("plain data serializes"));
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Validate { file } => {
            let pg = load(&file)?;
            emit_json(out, &json!({ "valid": true, "graph": summarize(&pg) }));
            Ok(EXIT_OK)
        }
        Command::Census { file } => {
            let pg = load(&file)?;
            let report = build_report(&pg);
            let partition = classify_vertices(&pg);
            emit_json(
                out,
                &json!({
                    "interior_vertices": partition.interior,
                    "exterior_vertices": partition.exterior,
                    "census": report.census,
                    "gonality": report.gonality,
                    "counting": report.counting,
                }),
            );
            Ok(EXIT_OK)
        }
        Command::Check {
            file,
            relation,
            variant,
        } => check(&file, relation.as_deref(), variant, out),
        Command::Classify { file } => {
            let pg = load(&file)?;
            let classes = classify(&pg);
            let scan = Gamma2ScanInput::from_plane_graph(&pg).scan();
            emit_json(
                out,
                &json!({
                    "classes": classes,
                    "gamma2_scan": { "is_gamma2": scan.is_gamma2, "row_visits": scan.row_visits },
                }),
            );
            Ok(EXIT_OK)
        }
        Command::Report { file } => {
            let pg = load(&file)?;
            let _ = write!(out, "{}", serialize_report(&build_report(&pg)));
            Ok(EXIT_OK)
        }
        Command::Generate {
            family,
            params,
            output,
        } => {
            let pg = generate(family, &params)?;
            let doc = serialize_embedding(&pg);
            match output {
                Some(path) => fs::write(&path, doc)
                    .map_err(|e| invalid(format!("{}: {e}", path.display())))?,
                None => {
                    let _ = write!(out, "{doc}");
                }
            }
            Ok(EXIT_OK)
        }
        Command::Fuzz {
            family,
            seed,
            ops,
            count,
            emit,
        } => {
            let configs: Vec<FuzzConfig> = (seed..seed.saturating_add(count))
                .map(|s| FuzzConfig::new(family, s, ops))
                .collect();
            let results = par::map_collect(Execution::Parallel, &configs, |c| {
                fuzz(*c).map(|pg| {
                    let a = audit(&pg);
                    (pg, a)
                })
            });
            let mut violations = 0;
            for (config, result) in configs.iter().zip(results) {
                let (pg, a) = result.map_err(invalid)?;
                violations += a.violations.len();
                emit_line(
                    out,
                    &json!({
                        "family": config.family,
                        "seed": config.seed,
                        "ops": config.operations,
                        "vertices": pg.vertex_count(),
                        "edges": pg.edge_count(),
                        "faces": pg.face_count(),
                        "violations": a.violations,
                    }),
                );
                if emit {
                    let _ = write!(out, "{}", serialize_embedding(&pg));
                }
            }
            Ok(if violations == 0 { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Enumerate { max_n, gonality } => {
            let filter = gonality.map(GonalityFilter::new);
            let e = enumerate_small(max_n, filter).map_err(invalid)?;
            let mut emitted = 0usize;
            let mut violations = 0usize;
            for pg in &e {
                let a = audit(&pg);
                violations += a.violations.len();
                emit_line(
                    out,
                    &json!({
                        "index": emitted,
                        "vertices": pg.vertex_count(),
                        "edges": pg.edge_count(),
                        "outer_face": pg.outer_face().0,
                        "census": degree_census(&pg),
                        "gonality": gonality_histogram(&pg),
                        "violations": a.violations,
                    }),
                );
                emitted += 1;
            }
            emit_line(
                out,
                &json!({ "summary": { "embeddings": e.maps().len(), "plane_graphs": emitted, "violations": violations } }),
            );
            Ok(if violations == 0 { EXIT_OK } else { EXIT_VIOLATION })
        }
    }
}

fn generate(family: Family, params: &[usize]) -> Result<PlaneGraph, Failure> {
    let result = match (family, params) {
        (Family::Polygon, &[n]) => gen_polygon(n),
        (Family::Prism, &[n]) => gen_prism(n),
        (Family::Wheel, &[n]) => gen_wheel(n),
        (Family::Grid, &[m, n]) => gen_grid(m, n),
        (Family::Grid, _) => return Err(usage("grid takes --params M,N")),
        (_, _) => return Err(usage("this family takes a single --params N")),
    };
    result.map_err(invalid)
}

/// Relations selected by `--relation` / `--variant`.
fn selection(relation: Option<&str>, variant: Variant) -> Result<Vec<RelationId>, Failure> {
    let gamma2 = match variant {
        Variant::Corrected => RelationId::Gamma2Corrected,
        Variant::Printed => RelationId::Gamma2Printed,
    };
    match relation {
        None => Ok(RelationId::ALL
            .into_iter()
            .filter(|r| !matches!(r, RelationId::Gamma2Corrected | RelationId::Gamma2Printed) || *r == gamma2)
            .collect()),
        Some(name) if name.eq_ignore_ascii_case("GAMMA2") => Ok(vec![gamma2]),
        Some(name) => name.parse::<RelationId>().map(|r| vec![r]).map_err(usage),
    }
}

fn check(file: &Path, relation: Option<&str>, variant: Variant, out: &mut dyn Write) -> Result<i32, Failure> {
    let selected = selection(relation, variant)?;
    let pg = load(file)?;
    let reports: Vec<_> = evaluate_catalog(&pg)
        .into_iter()
        .filter(|r| selected.contains(&r.relation))
        .collect();
    let failing = reports
        .iter()
        .filter(|r| r.residual.is_some_and(|x| x != 0))
        .count();
    emit_json(out, &json!({ "relations": reports, "violations": failing }));
    Ok(if failing == 0 { EXIT_OK } else { EXIT_VIOLATION })
}
