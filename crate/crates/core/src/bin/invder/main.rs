//! `invder`: command-line access to the checks, constructions and searches.
//!
//! Exit codes: 0 when every requested check passed or the object was
//! produced, 1 when a mathematical check failed, 2 on input or precondition
//! errors.

mod render;
mod theorems;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use invder_core::axioms::{self, kind_axioms, invder_axioms, AxiomId};
use invder_core::catalog::{self, catalog};
use invder_core::constructions::{is_rota_baxter, twist, ConstructionResult, Functor, RotaBaxterOp};
use invder_core::derivations::{is_derivation, is_invder_on, square_condition};
use invder_core::search::{counterexample_search, max_dim_from_env, Family, SearchConfig};
use invder_core::suite::{run_property_suite, SuiteConfig};
use invder_core::{
    derivation_space, invder_search, AlgebraFile, Error, Kind, Rational, SearchBounds, SearchOutcome,
};

use theorems::{Inputs, Theorem};

#[derive(Parser)]
#[command(name = "invder", version, about = "Exact checks for invertible derivations and twisted algebras")]
struct Cli {
    /// Emit JSON on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Restrict to one product of the algebra.
    #[arg(long, global = true, value_name = "NAME")]
    op: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Sampling {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    samples: Option<usize>,
    /// Sampled coefficients lie in [-range, range].
    #[arg(long, default_value_t = 3)]
    range: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Check axioms or identities. AXIOM is a group (lie, prelie, associative,
    /// zinbiel, dendriform, invder-lie, ...) or a single identity id.
    Check {
        file: PathBuf,
        #[arg(long = "axiom", value_name = "AXIOM")]
        axioms: Vec<String>,
        #[arg(long)]
        map: Option<String>,
        #[arg(long, value_name = "P/Q")]
        weight: Option<String>,
    },
    /// Basis of the derivation space.
    Derivations { file: PathBuf },
    /// Inv-derivation verdict for a named map.
    Invder {
        file: PathBuf,
        #[arg(long)]
        map: String,
    },
    /// Sample the derivation space for an Inv-derivation.
    InvderSearch {
        file: PathBuf,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Twist the products by an Inv-derivation.
    Twist {
        file: PathBuf,
        #[arg(long)]
        map: String,
        #[arg(long)]
        force: bool,
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Apply a passage between structures.
    Transform {
        functor: String,
        file: PathBuf,
        /// Map used as the operator R.
        #[arg(long)]
        operator: Option<String>,
        #[arg(long, value_name = "P/Q")]
        weight: Option<String>,
        /// Inv-derivation carried to the result.
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        force: bool,
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Check the Rota-Baxter identity for a named map.
    RotaBaxter {
        file: PathBuf,
        #[arg(long)]
        map: String,
        #[arg(long, value_name = "P/Q")]
        weight: Option<String>,
    },
    /// Verify one instance of a named result.
    VerifyTheorem {
        #[arg(value_enum)]
        theorem: Theorem,
        file: PathBuf,
        #[arg(long)]
        map: Option<String>,
        #[arg(long)]
        operator: Option<String>,
        #[arg(long, value_name = "P/Q")]
        weight: Option<String>,
        #[arg(long)]
        force: bool,
    },
    /// Randomized theorem suite over the catalog.
    Suite {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 3)]
        range: i64,
    },
    /// Bounded search for twists that break Jacobi.
    SearchCounterexample {
        #[arg(long)]
        family: String,
        /// Defaults to INVDER_MAX_DIM, or 6.
        #[arg(long)]
        max_dim: Option<usize>,
        #[command(flatten)]
        sampling: Sampling,
        /// Accepted random tables per dimension.
        #[arg(long, default_value_t = 8)]
        tables: usize,
    },
    /// List the built-in algebras, or export one.
    Catalog {
        id: Option<String>,
        /// Recompute the recorded facts and compare.
        #[arg(long)]
        recheck: bool,
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

type Outcome = invder_core::Result<bool>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            if !matches!(e, Error::Input(_) | Error::Singular) {
                eprintln!("hint: pass --force to run the construction anyway");
            }
            ExitCode::from(2)
        }
    }
}

fn emit<T: Serialize>(cli: &Cli, value: &T, text: impl FnOnce() -> String) {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
    } else {
        print!("{}", text());
    }
}

fn parse_weight(w: &Option<String>) -> invder_core::Result<Rational> {
    match w {
        Some(s) => s.parse(),
        None => Ok(Rational::zero()),
    }
}

fn axiom_group(name: &str) -> invder_core::Result<Vec<AxiomId>> {
    let (invder, base) = match name.strip_prefix("invder-").or_else(|| name.strip_prefix("invder_")) {
        Some(rest) => (true, rest),
        None => (false, name),
    };
    if let Ok(kind) = base.parse::<Kind>() {
        return Ok(if invder { invder_axioms(kind) } else { kind_axioms(kind) }.to_vec());
    }
    Ok(vec![name.parse()?])
}

fn load(path: &Path) -> invder_core::Result<AlgebraFile> {
    AlgebraFile::load(path)
}

fn write_output(path: &Option<PathBuf>, result: &ConstructionResult) -> invder_core::Result<()> {
    if let Some(p) = path {
        result.to_file().save(p)?;
        eprintln!("wrote {}", p.display());
    }
    Ok(())
}

fn run(cli: &Cli) -> Outcome {
    let op = cli.op.as_deref();
    match &cli.command {
        Command::Check {
            file,
            axioms: requested,
            map,
            weight,
        } => {
            let f = load(file)?;
            let alg = &f.algebra;
            let map = map.as_deref().map(|m| f.map(m)).transpose()?;
            let ids = if requested.is_empty() {
                match alg.kind() {
                    Some(k) => kind_axioms(k).to_vec(),
                    None => return Err(Error::Input("no --axiom given and the file has no kind".into())),
                }
            } else {
                let mut ids = Vec::new();
                for a in requested {
                    ids.extend(axiom_group(a)?);
                }
                ids
            };
            let weight = parse_weight(weight)?;
            let mut reports = Vec::new();
            for id in ids {
                let target_op = if id.is_dendriform() { None } else { op };
                let report = if id == AxiomId::RotaBaxter {
                    let r = map.ok_or_else(|| Error::Input("rota_baxter needs --map".into()))?;
                    is_rota_baxter(r, alg, target_op, &weight)?
                } else {
                    axioms::check(alg, id, target_op, map)?
                };
                reports.push(report);
            }
            let passed = reports.iter().all(|r| r.holds);
            emit(cli, &json!({ "passed": passed, "reports": reports }), || render::reports(&reports));
            Ok(passed)
        }
        Command::Derivations { file } => {
            let f = load(file)?;
            let space = derivation_space(&f.algebra, op)?;
            emit(cli, &space, || {
                let mut s = format!("dim Der = {}\n", space.dim());
                for (i, b) in space.basis().iter().enumerate() {
                    s.push_str(&format!("D{}:\n{b}\n", i + 1));
                }
                s
            });
            Ok(true)
        }
        Command::Invder { file, map } => {
            let f = load(file)?;
            let delta = f.map(map)?;
            let verdict = is_invder_on(delta, &f.algebra, op)?;
            let leibniz = is_derivation(delta, &f.algebra, op)?;
            let square = square_condition(delta, &f.algebra, op)?;
            let det = delta.det();
            emit(
                cli,
                &json!({ "map": map, "verdict": verdict, "det": det, "leibniz": leibniz, "square_condition": square }),
                || {
                    format!(
                        "{map}: {}\n  derivation: {}\n  invertible: {} (det = {det})\n  inverse is a derivation: {}\n  square condition: {}\n{}{}",
                        if verdict.accepted { "accepted" } else { "rejected" },
                        verdict.is_derivation,
                        verdict.is_invertible,
                        verdict.inverse_is_derivation,
                        verdict.square_condition,
                        render::reports(std::slice::from_ref(&leibniz)),
                        render::reports(std::slice::from_ref(&square)),
                    )
                },
            );
            Ok(verdict.accepted)
        }
        Command::InvderSearch { file, sampling } => {
            let f = load(file)?;
            let bounds = SearchBounds {
                range: sampling.range,
                max_samples: sampling.samples.unwrap_or(SearchBounds::default().max_samples),
                seed: sampling.seed,
            };
            let outcome = invder_search(&f.algebra, op, bounds)?;
            emit(cli, &outcome, || match &outcome {
                SearchOutcome::Found { map, sample_index } => {
                    let at = sample_index.map_or("identity".to_string(), |i| format!("sample {i}"));
                    format!("found ({at}):\n{map}\n")
                }
                SearchOutcome::NotFound { certificate: Some(c), .. } => format!("not found: {c}\n"),
                SearchOutcome::NotFound { samples_tried, .. } => format!("not found in {samples_tried} samples\n"),
            });
            Ok(outcome.found().is_some())
        }
        Command::Twist { file, map, force, output } => {
            let f = load(file)?;
            let result = twist(&f.algebra, op, f.map(map)?, *force)?;
            write_output(output, &result)?;
            emit(cli, &result, || render::construction(&result));
            Ok(result.passed())
        }
        Command::Transform {
            functor,
            file,
            operator,
            weight,
            delta,
            force,
            output,
        } => {
            let functor: Functor = functor.parse()?;
            let f = load(file)?;
            let operator = operator
                .as_deref()
                .map(|m| Ok::<_, Error>(RotaBaxterOp::with_weight(f.map(m)?.clone(), parse_weight(weight)?)))
                .transpose()?;
            let delta = delta.as_deref().map(|m| f.map(m)).transpose()?;
            let result = functor.apply(&f.algebra, op, operator.as_ref(), delta, *force)?;
            write_output(output, &result)?;
            emit(cli, &result, || render::construction(&result));
            Ok(result.passed())
        }
        Command::RotaBaxter { file, map, weight } => {
            let f = load(file)?;
            let r = f.map(map)?;
            let weight = parse_weight(weight)?;
            let report = is_rota_baxter(r, &f.algebra, op, &weight)?;
            let inverse_is_derivation = match r.inverse() {
                Ok(inv) if weight.is_zero() => Some(is_derivation(&inv, &f.algebra, op)?.holds),
                _ => None,
            };
            emit(
                cli,
                &json!({ "map": map, "weight": weight, "report": report, "inverse_is_derivation": inverse_is_derivation }),
                || {
                    let mut s = format!("{report}\n");
                    if let Some(b) = inverse_is_derivation {
                        s.push_str(&format!("inverse is a derivation: {b}\n"));
                    }
                    s
                },
            );
            Ok(report.holds)
        }
        Command::VerifyTheorem {
            theorem,
            file,
            map,
            operator,
            weight,
            force,
        } => {
            let f = load(file)?;
            let operator = match operator {
                Some(m) => Some(RotaBaxterOp::with_weight(f.map(m)?.clone(), parse_weight(weight)?)),
                None => None,
            };
            let inputs = Inputs {
                alg: &f.algebra,
                op,
                delta: map.as_deref().map(|m| f.map(m)).transpose()?,
                operator,
                force: *force,
            };
            let report = theorems::verify(*theorem, &inputs)?;
            emit(cli, &report, || {
                let mut s = format!(
                    "{}: {}\n",
                    report.theorem,
                    if report.verified { "verified" } else { "FAILED" }
                );
                if let Some(v) = &report.verdict {
                    s.push_str(&format!(
                        "  inverse is a derivation: {}\n  square condition: {}\n",
                        v.inverse_is_derivation, v.square_condition
                    ));
                }
                for y in &report.yau {
                    s.push_str(&format!("  {}: forward = {}, backward = {}\n", y.kind, y.forward, y.backward));
                }
                s.push_str(&render::reports(&report.reports));
                if let Some(c) = &report.construction {
                    s.push_str(&render::construction(c));
                }
                for n in &report.notes {
                    s.push_str(&format!("note: {n}\n"));
                }
                s
            });
            Ok(report.verified)
        }
        Command::Suite { seed, samples, range } => {
            let report = run_property_suite(SuiteConfig {
                seed: *seed,
                samples: *samples,
                range: *range,
            })?;
            emit(cli, &report, || {
                let mut s = format!(
                    "entries: {}\ninvertible derivations: {}\ninverse/square agreement: {}/{}\naccepted pairs: {}\n",
                    report.entries,
                    report.invertible_derivations,
                    report.inverse_square_agreement.passed,
                    report.inverse_square_agreement.checked,
                    report.accepted_pairs
                );
                for (k, t) in &report.checks {
                    s.push_str(&format!("{k}: {}/{}\n", t.passed, t.checked));
                }
                s.push_str(&format!("violations: {}\n", report.violations.len()));
                s
            });
            Ok(report.passed())
        }
        Command::SearchCounterexample {
            family,
            max_dim,
            sampling,
            tables,
        } => {
            let family: Family = family.parse()?;
            let mut config = SearchConfig::new(family);
            config.max_dim = match max_dim {
                Some(d) => *d,
                None => max_dim_from_env()?,
            };
            config.seed = sampling.seed;
            config.coefficient_range = sampling.range;
            if let Some(s) = sampling.samples {
                config.max_samples = s;
            }
            config.tables_per_dim = *tables;
            let report = counterexample_search(&config)?;
            if cli.json {
                println!("{}", report.to_json());
            } else {
                let b = &report.bounds;
                println!(
                    "{}: {} findings\n  dims {:?}, {} instances, {} rejected tables\n  {} derivations sampled (range {}, seed {}), {} with non-derivation inverse",
                    b.family,
                    report.findings.len(),
                    b.dims,
                    b.instances,
                    b.rejected_tables,
                    b.derivations_sampled,
                    b.coefficient_range,
                    b.seed,
                    b.candidates
                );
                for f in &report.findings {
                    println!("  {} sample {}: {}", f.instance, f.sample_index, f.jacobi);
                }
            }
            Ok(true)
        }
        Command::Catalog { id, recheck, output } => match id {
            None => {
                let entries = catalog();
                let listing: Vec<_> = entries
                    .iter()
                    .map(|e| {
                        json!({
                            "id": e.id,
                            "dim": e.algebra.dim(),
                            "kind": e.algebra.kind(),
                            "maps": e.known_maps.keys().collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                emit(cli, &listing, || {
                    entries
                        .iter()
                        .map(|e| {
                            let kind = e.algebra.kind().map(|k| k.as_str()).unwrap_or("untyped");
                            let maps: Vec<_> = e.known_maps.keys().map(String::as_str).collect();
                            format!("{:<20} {kind:<12} dim {}  maps: {}\n", e.id, e.algebra.dim(), maps.join(", "))
                        })
                        .collect()
                });
                Ok(true)
            }
            Some(id) => {
                let entry = catalog::entry(id)?;
                if let Some(p) = output {
                    entry.to_file().save(p)?;
                    eprintln!("wrote {}", p.display());
                }
                if *recheck {
                    let actual = catalog::recheck(&entry)?;
                    let mismatches: Vec<_> = entry
                        .expected
                        .iter()
                        .filter(|(k, v)| actual.get(*k) != Some(*v))
                        .map(|(k, v)| json!({ "key": k, "expected": v, "actual": actual.get(k) }))
                        .collect();
                    emit(cli, &json!({ "id": id, "facts": actual, "mismatches": mismatches }), || {
                        let mut s: String = actual.iter().map(|(k, v)| format!("{k}: {v}\n")).collect();
                        s.push_str(&format!("mismatches: {}\n", mismatches.len()));
                        s
                    });
                    return Ok(mismatches.is_empty());
                }
                if output.is_none() {
                    println!("{}", entry.to_file().to_json());
                }
                Ok(true)
            }
        },
    }
}
