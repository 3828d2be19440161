//! Command-line front end: parse semigroup and derivation specs, run the
//! analyses and emit JSON or plain-text reports.
//!
//! Exit codes are stable: 0 success, 2 parse or input error, 3 operation
//! requires a pointed semigroup, 4 verification mismatch, 5 derivation out
//! of classification scope, 1 any other error.

use std::io::Read;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use semialg::catalog;
use semialg::json::{
    self, analyze_to_json, element_to_json, oracle_report_to_json, quotient_to_json,
    roots_to_json, tower_report_to_json, tower_to_json, verdict_to_json, DerivationSpec,
    SemigroupSpec,
};
use semialg::{
    check_tower, classify_integrable, oracle_verdict, Agreement, Carrier, Derivation, Error,
    FiniteQuotient, OracleBounds, Semigroup, Verdict,
};

const EXIT_PARSE: u8 = 2;
const EXIT_NOT_POINTED: u8 = 3;
const EXIT_MISMATCH: u8 = 4;
const EXIT_OUT_OF_SCOPE: u8 = 5;

#[derive(Parser)]
#[command(
    name = "semialg",
    about = "Exact computations with affine semigroups, compactifications and derivations",
    version
)]
struct Cli {
    /// Emit machine-readable JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SpecArg {
    /// Semigroup spec: a file path, '-' for stdin, or inline JSON
    /// ({"ambient_rank":1,"generators":[[2],[3]]}).
    spec: String,
}

#[derive(Args)]
struct DerivationArg {
    /// Derivation spec: a file path, '-' for stdin, or inline JSON with
    /// either {"components":[{"degree":[..],"phi":[..]}]} or
    /// {"images":{"[h]":"element"}}.
    #[arg(long)]
    derivation: String,
}

#[derive(Subcommand)]
enum Command {
    /// Pointedness, lattice rank, Hilbert basis, dual rays and an s-value
    /// table.
    Analyze {
        #[command(flatten)]
        spec: SpecArg,
        /// List all elements with s value up to this bound.
        #[arg(long, default_value_t = 4)]
        s_bound: u64,
    },
    /// Demazure roots within a box, with reducibility flags.
    Roots {
        #[command(flatten)]
        spec: SpecArg,
        /// Max-norm truncation of the root search, in lattice coordinates.
        #[arg(long = "box", default_value_t = 4)]
        box_bound: u64,
    },
    /// Classify a quasi-homogeneous derivation for topological
    /// integrability.
    Classify {
        #[command(flatten)]
        spec: SpecArg,
        #[command(flatten)]
        derivation: DerivationArg,
        /// Also run the bounded oracle and fail on disagreement.
        #[arg(long)]
        verify: bool,
        /// Oracle bounds as "i_max,j_max,n_max,gen_span".
        #[arg(long, value_parser = parse_bounds)]
        bounds: Option<OracleBounds>,
    },
    /// Materialise the finite quotient at a filtration level.
    Quotient {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        level: u64,
    },
    /// Apply (an iterate of) a derivation to an element.
    Apply {
        #[command(flatten)]
        spec: SpecArg,
        #[command(flatten)]
        derivation: DerivationArg,
        /// The element, in the term syntax (e.g. "2*x^[1] - x^inf").
        #[arg(long)]
        element: String,
        /// Number of applications.
        #[arg(long, default_value_t = 1)]
        iterate: usize,
        /// Carrier to work on: the compactified algebra (default, the
        /// derivation is lifted) or the base algebra.
        #[arg(long, default_value = "compactified")]
        carrier: String,
    },
    /// Check the quotient tower: semigroup laws, bonding maps and thread
    /// structure.
    VerifyTower {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long, default_value_t = 4)]
        levels: u64,
    },
    /// Emit the halving completion tower over the naturals: compatible at
    /// every truncation yet not the image of any single element.
    TowerExample {
        #[arg(long, default_value_t = 5)]
        levels: u64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotPointed => EXIT_NOT_POINTED,
            Error::Parse { .. } | Error::DimensionMismatch { .. } => EXIT_PARSE,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

fn parse_bounds(text: &str) -> Result<OracleBounds, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err("expected four comma-separated values: i,j,n,span".into());
    }
    let nums: Vec<u64> = parts
        .iter()
        .map(|p| p.trim().parse::<u64>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    Ok(OracleBounds {
        i_max: nums[0],
        j_max: nums[1],
        n_max: nums[2] as usize,
        gen_span: nums[3],
    })
}

fn read_source(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("reading stdin: {e}")))?;
        Ok(buffer)
    } else if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("reading {arg}: {e}")))
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(source: &str) -> Result<T, Failure> {
    serde_json::from_str(source).map_err(|e| {
        Failure::new(
            EXIT_PARSE,
            format!("invalid JSON at line {} column {}: {e}", e.line(), e.column()),
        )
    })
}

fn load_semigroup(arg: &str) -> Result<Arc<Semigroup>, Failure> {
    let source = read_source(arg)?;
    let spec: SemigroupSpec = parse_json(&source)?;
    spec.build().map_err(|e| match e {
        Error::EmptyGenerators
        | Error::DimensionMismatch { .. }
        | Error::RankTooLarge { .. } => Failure::new(EXIT_PARSE, e.to_string()),
        other => other.into(),
    })
}

fn load_derivation(
    semigroup: &Arc<Semigroup>,
    arg: &str,
) -> Result<Derivation<semialg::Int>, Failure> {
    let source = read_source(arg)?;
    let spec: DerivationSpec = parse_json(&source)?;
    Ok(spec.build(semigroup)?)
}

fn emit<T: serde::Serialize>(json_mode: bool, value: &T, plain: impl FnOnce() -> String) {
    if json_mode {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("reports serialize")
        );
    } else {
        println!("{}", plain());
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze { spec, s_bound } => {
            let semigroup = load_semigroup(&spec.spec)?;
            let report = analyze_to_json(&semigroup, Some(s_bound))?;
            emit(cli.json, &report, || {
                let mut lines = vec![
                    format!("pointed: {}", report.pointed),
                    format!("ambient rank: {}", report.ambient_rank),
                    format!("lattice rank: {}", report.lattice_rank),
                    format!("dual rays: {:?}", report.dual_rays),
                ];
                if let Some(h) = &report.hilbert_basis {
                    lines.push(format!("hilbert basis: {h:?}"));
                }
                if let Some(table) = &report.s_table {
                    lines.push(format!("elements with s <= {s_bound}:"));
                    for row in table {
                        lines.push(format!("  s({:?}) = {}", row.element, row.s));
                    }
                }
                if let Some(note) = &report.note {
                    lines.push(format!("note: {note}"));
                }
                lines.join("\n")
            });
            Ok(())
        }
        Command::Roots { spec, box_bound } => {
            let semigroup = load_semigroup(&spec.spec)?;
            let report = roots_to_json(&semigroup, box_bound)?;
            emit(cli.json, &report, || {
                if report.roots.is_empty() {
                    return format!("no roots within box {box_bound}");
                }
                report
                    .roots
                    .iter()
                    .map(|r| {
                        format!(
                            "degree {:?}, ray {:?} (index {}), {}",
                            r.degree,
                            r.ray,
                            r.ray_index,
                            if r.reducible { "reducible" } else { "irreducible" }
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(())
        }
        Command::Classify {
            spec,
            derivation,
            verify,
            bounds,
        } => {
            let semigroup = load_semigroup(&spec.spec)?;
            if !semigroup.is_pointed() {
                return Err(Error::NotPointed.into());
            }
            let lifted = load_derivation(&semigroup, &derivation.derivation)?.lift();
            let bounds = bounds.unwrap_or_default();
            let verdict = classify_integrable(&lifted)?;
            let report = verdict_to_json(&verdict, Some(bounds))?;
            emit(cli.json, &report, || {
                let mut text = format!("verdict: {}", report.verdict);
                if let Some(branch) = &report.branch {
                    text.push_str(&format!(" ({branch} branch)"));
                }
                for note in &report.notes {
                    text.push_str(&format!("\nnote: {note}"));
                }
                text
            });
            if verdict.verdict == Verdict::OutOfScope {
                return Err(Failure::new(
                    EXIT_OUT_OF_SCOPE,
                    verdict.notes.join("; "),
                ));
            }
            if verify {
                let oracle = oracle_verdict(&lifted, &bounds)?;
                let oracle_json = oracle_report_to_json(&oracle)?;
                emit(cli.json, &oracle_json, || {
                    format!(
                        "oracle: continuity {}, P.1 {}, P.2 {} -> {}",
                        oracle.continuity.pass,
                        oracle.p1.pass,
                        oracle.p2.pass,
                        oracle_json.agreement
                    )
                });
                if oracle.agreement == Agreement::Disagree {
                    return Err(Failure::new(
                        EXIT_MISMATCH,
                        "oracle disagrees with the closed-form classifier",
                    ));
                }
            }
            Ok(())
        }
        Command::Quotient { spec, level } => {
            let semigroup = load_semigroup(&spec.spec)?;
            let quotient = FiniteQuotient::build(&semigroup, level)?;
            let report = quotient_to_json(&quotient)?;
            emit(cli.json, &report, || {
                let names: Vec<String> = report
                    .elements
                    .iter()
                    .map(|e| match e {
                        json::ExpJson::Finite(c) => format!("{c:?}"),
                        json::ExpJson::Infinity(_) => "inf".to_string(),
                    })
                    .collect();
                let mut lines = vec![format!(
                    "level {level}: {} elements plus inf",
                    names.len() - 1
                )];
                for (i, row) in report.table.iter().enumerate() {
                    let cells: Vec<String> = row
                        .iter()
                        .map(|e| match e {
                            json::ExpJson::Finite(c) => format!("{c:?}"),
                            json::ExpJson::Infinity(_) => "inf".to_string(),
                        })
                        .collect();
                    lines.push(format!("{} | {}", names[i], cells.join(" ")));
                }
                lines.join("\n")
            });
            Ok(())
        }
        Command::Apply {
            spec,
            derivation,
            element,
            iterate,
            carrier,
        } => {
            let semigroup = load_semigroup(&spec.spec)?;
            let base = load_derivation(&semigroup, &derivation.derivation)?;
            let (d, carrier) = match carrier.as_str() {
                "compactified" | "sinf" => (base.lift(), Carrier::Compactified),
                "base" | "s" => (base, Carrier::Base),
                other => {
                    return Err(Failure::new(
                        EXIT_PARSE,
                        format!("unknown carrier '{other}' (expected 'compactified' or 'base')"),
                    ))
                }
            };
            let f = semialg::parse_element(&semigroup, carrier, &element)?;
            let image = d.iterate(&f, iterate)?;
            let report = element_to_json(&image)?;
            emit(cli.json, &report, || report.rendered.clone());
            Ok(())
        }
        Command::VerifyTower { spec, levels } => {
            let semigroup = load_semigroup(&spec.spec)?;
            let report = check_tower(&semigroup, levels)?;
            let report_json = tower_report_to_json(&report);
            emit(cli.json, &report_json, || {
                if report.passed() {
                    format!("tower checks pass through level {levels}")
                } else {
                    let mut lines = vec!["tower checks failed:".to_string()];
                    lines.extend(report_json.issues.iter().cloned());
                    lines.join("\n")
                }
            });
            if !report.passed() {
                return Err(Failure::new(EXIT_MISMATCH, "tower verification failed"));
            }
            Ok(())
        }
        Command::TowerExample { levels } => {
            let tower = catalog::geometric_half_tower(levels);
            let report = tower_to_json(&tower)?;
            emit(cli.json, &report, || {
                let mut lines: Vec<String> = report
                    .levels
                    .iter()
                    .enumerate()
                    .map(|(l, e)| format!("level {l}: {}", e.rendered))
                    .collect();
                lines.push(format!(
                    "compatible: {}, algebraic at level {levels}: {}",
                    report.compatible, report.algebraic
                ));
                lines.join("\n")
            });
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
