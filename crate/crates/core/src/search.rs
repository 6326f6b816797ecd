//! Bounded search for Lie algebras with an invertible derivation whose
//! inverse is not a derivation and whose twist breaks the Jacobi identity.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, BilinearOp, Kind, LinearMap};
use crate::axioms::{check_jacobi, AxiomId, CheckReport, Identity, Operands};
use crate::derivations::{derivation_space, is_invder};
use crate::error::{input, Error, Result};
use crate::io::AlgebraFile;

/// Hard cap on searched dimensions.
pub const MAX_DIM: usize = 6;
/// Hard cap on absolute values of sampled coefficients.
pub const MAX_COEFFICIENT: i64 = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    HeisenbergLike,
    Filiform,
    Solvable,
    RandomNilpotentTables,
    Abelian,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::HeisenbergLike,
        Family::Filiform,
        Family::Solvable,
        Family::RandomNilpotentTables,
        Family::Abelian,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::HeisenbergLike => "heisenberg_like",
            Family::Filiform => "filiform",
            Family::Solvable => "solvable",
            Family::RandomNilpotentTables => "random_nilpotent_tables",
            Family::Abelian => "abelian",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == norm)
            .ok_or_else(|| Error::Input(format!("unknown family {s:?}")))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SearchConfig {
    pub family: Family,
    pub max_dim: usize,
    /// Derivation coefficients are drawn from `[-coefficient_range, coefficient_range]`.
    pub coefficient_range: i64,
    /// Derivation samples per algebra instance.
    pub max_samples: usize,
    pub seed: u64,
    /// Accepted random tables per dimension.
    pub tables_per_dim: usize,
}

impl SearchConfig {
    pub fn new(family: Family) -> Self {
        SearchConfig {
            family,
            max_dim: MAX_DIM,
            coefficient_range: 3,
            max_samples: 200,
            seed: 0,
            tables_per_dim: 8,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_dim == 0 || self.max_dim > MAX_DIM {
            return input(format!("max_dim must be between 1 and {MAX_DIM}"));
        }
        if !(0..=MAX_COEFFICIENT).contains(&self.coefficient_range) {
            return input(format!("coefficient range must be between 0 and {MAX_COEFFICIENT}"));
        }
        if self.max_samples == 0 {
            return input("max_samples must be at least 1");
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Finding {
    pub instance: String,
    pub sample_index: usize,
    pub algebra: serde_json::Value,
    pub delta: LinearMap,
    pub jacobi: CheckReport,
}

impl Finding {
    pub fn algebra_file(&self) -> Result<AlgebraFile> {
        AlgebraFile::from_json(&self.algebra.to_string())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct Bounds {
    pub family: String,
    pub dims: Vec<usize>,
    pub coefficient_range: i64,
    pub samples_per_instance: usize,
    pub seed: u64,
    pub instances: usize,
    /// Random tables discarded because they failed Jacobi.
    pub rejected_tables: usize,
    pub derivations_sampled: usize,
    /// Invertible derivations whose inverse is not a derivation.
    pub candidates: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SearchReport {
    pub findings: Vec<Finding>,
    pub bounds: Bounds,
}

impl SearchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn lie(name: String, n: usize, terms: &[(usize, usize, usize, i64)]) -> Algebra {
    Algebra::single(&name, "bracket", BilinearOp::skew_from_int_terms(n, terms).expect("in range"), Some(Kind::Lie))
        .expect("valid algebra")
}

/// `h_{2k+1} ⊕ abelian`: `[x_i, y_i] = z` then abelian padding.
fn heisenberg_like(max_dim: usize) -> Vec<Algebra> {
    let mut out = Vec::new();
    for n in 3..=max_dim {
        for k in 1..=(n - 1) / 2 {
            let z = 2 * k;
            let terms: Vec<_> = (0..k).map(|i| (i, k + i, z, 1)).collect();
            out.push(lie(format!("heisenberg_{}_plus_{}", 2 * k + 1, n - 2 * k - 1), n, &terms));
        }
    }
    out
}

/// `[e1, e_i] = e_{i+1}` for `2 <= i < n`.
fn filiform(max_dim: usize) -> Vec<Algebra> {
    (3..=max_dim)
        .map(|n| {
            let terms: Vec<_> = (1..n - 1).map(|i| (0, i, i + 1, 1)).collect();
            lie(format!("filiform_{n}"), n, &terms)
        })
        .collect()
}

/// `[e1, e_i] = e_i` and `[e1, e_i] = (i-1) e_i`.
fn solvable(max_dim: usize) -> Vec<Algebra> {
    let mut out = Vec::new();
    for n in 2..=max_dim {
        let uniform: Vec<_> = (1..n).map(|i| (0, i, i, 1)).collect();
        out.push(lie(format!("solvable_uniform_{n}"), n, &uniform));
        if n > 2 {
            let graded: Vec<_> = (1..n).map(|i| (0, i, i, i as i64)).collect();
            out.push(lie(format!("solvable_graded_{n}"), n, &graded));
        }
    }
    out
}

fn abelian(max_dim: usize) -> Vec<Algebra> {
    (1..=max_dim).map(|n| lie(format!("abelian_{n}"), n, &[])).collect()
}

const ATTEMPTS_PER_TABLE: usize = 64;

/// Brackets `[e_i, e_j]` (i < j) supported on `e_k`, k > j, with random
/// sparse coefficients; tables failing Jacobi are rejected and counted.
fn random_nilpotent(config: &SearchConfig, rejected: &mut usize) -> Vec<Algebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let range = config.coefficient_range.max(1);
    let mut out = Vec::new();
    for n in 3..=config.max_dim {
        let mut accepted = 0;
        let mut attempts = 0;
        while accepted < config.tables_per_dim && attempts < config.tables_per_dim * ATTEMPTS_PER_TABLE {
            attempts += 1;
            let mut terms = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        if rng.gen_bool(0.5) {
                            let c = rng.gen_range(-range..=range);
                            if c != 0 {
                                terms.push((i, j, k, c));
                            }
                        }
                    }
                }
            }
            let alg = lie(format!("nilpotent_{n}_{accepted}"), n, &terms);
            if check_jacobi(&alg, "bracket").expect("bracket exists").holds {
                out.push(alg);
                accepted += 1;
            } else {
                *rejected += 1;
            }
        }
    }
    out
}

pub fn family_instances(config: &SearchConfig) -> Result<(Vec<Algebra>, usize)> {
    config.validate()?;
    let mut rejected = 0;
    let algs = match config.family {
        Family::HeisenbergLike => heisenberg_like(config.max_dim),
        Family::Filiform => filiform(config.max_dim),
        Family::Solvable => solvable(config.max_dim),
        Family::RandomNilpotentTables => random_nilpotent(config, &mut rejected),
        Family::Abelian => abelian(config.max_dim),
    };
    Ok((algs, rejected))
}

struct InstanceOutcome {
    findings: Vec<Finding>,
    sampled: usize,
    candidates: usize,
}

fn search_instance(alg: &Algebra, index: usize, config: &SearchConfig) -> Result<InstanceOutcome> {
    let space = derivation_space(alg, None)?;
    let mut outcome = InstanceOutcome {
        findings: Vec::new(),
        sampled: 0,
        candidates: 0,
    };
    if space.dim() == 0 {
        return Ok(outcome);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(0x1000 + index as u64));
    let r = config.coefficient_range;
    let op = alg.op("bracket")?;
    for sample in 0..config.max_samples {
        let c: Vec<i64> = (0..space.dim()).map(|_| rng.gen_range(-r..=r)).collect();
        let delta = space.combination_ints(&c)?;
        outcome.sampled += 1;
        if !delta.is_invertible() {
            continue;
        }
        let square = Identity::new(AxiomId::SquareCondition, Operands::Single(op), Some(&delta))?.check();
        if square.holds {
            continue;
        }
        outcome.candidates += 1;
        let twisted = op.twist(&delta)?;
        let jacobi = Identity::new(AxiomId::Jacobi, Operands::Single(&twisted), None)?.check();
        if !jacobi.holds {
            outcome.findings.push(Finding {
                instance: alg.name().to_string(),
                sample_index: sample,
                algebra: serde_json::to_value(AlgebraFile::new(alg.clone()).to_raw()).expect("serializes"),
                delta,
                jacobi,
            });
        }
    }
    Ok(outcome)
}

/// Enumerates family instances and their sampled derivations; reports every
/// twist that fails Jacobi, and the bounds that were covered.
pub fn counterexample_search(config: &SearchConfig) -> Result<SearchReport> {
    let (instances, rejected) = family_instances(config)?;
    let outcomes: Vec<InstanceOutcome> = instances
        .par_iter()
        .enumerate()
        .map(|(i, alg)| search_instance(alg, i, config))
        .collect::<Result<_>>()?;
    let mut dims: Vec<usize> = instances.iter().map(Algebra::dim).collect();
    dims.sort_unstable();
    dims.dedup();
    let mut bounds = Bounds {
        family: config.family.to_string(),
        dims,
        coefficient_range: config.coefficient_range,
        samples_per_instance: config.max_samples,
        seed: config.seed,
        instances: instances.len(),
        rejected_tables: rejected,
        ..Bounds::default()
    };
    let mut findings = Vec::new();
    for o in outcomes {
        bounds.derivations_sampled += o.sampled;
        bounds.candidates += o.candidates;
        findings.extend(o.findings);
    }
    Ok(SearchReport { findings, bounds })
}

/// Re-checks a finding from scratch: an invertible derivation whose inverse
/// is not a derivation, and whose twist fails Jacobi with the same witness.
pub fn reverify(finding: &Finding) -> Result<bool> {
    let file = finding.algebra_file()?;
    let alg = &file.algebra;
    let v = is_invder(&finding.delta, alg)?;
    let twisted = alg.twist(&finding.delta)?;
    let jacobi = check_jacobi(&twisted, "bracket")?;
    Ok(v.is_derivation && v.is_invertible && !v.inverse_is_derivation && jacobi == finding.jacobi)
}

/// `INVDER_MAX_DIM`, clamped to the hard cap.
pub fn max_dim_from_env() -> Result<usize> {
    match std::env::var("INVDER_MAX_DIM") {
        Err(_) => Ok(MAX_DIM),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(d) if (1..=MAX_DIM).contains(&d) => Ok(d),
            _ => input(format!("INVDER_MAX_DIM must be an integer between 1 and {MAX_DIM}, got {v:?}")),
        },
    }
}
