//! Randomized theorem suite over the catalog.
//!
//! For every entry, derivations are sampled from its derivation space and
//! every theorem verifier whose hypotheses hold is run on them. A verifier
//! failing on an input that satisfies its hypotheses is a violation.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, Kind, LinearMap};
use crate::axioms::{self, check_invder_identities, check_kind, CheckReport};
use crate::catalog::{catalog, CatalogEntry};
use crate::constructions::{is_rota_baxter, twist, yau_iff_check, ConstructionResult, Functor, RotaBaxterOp};
use crate::derivations::{derivation_space, is_derivation, is_invder};
use crate::error::{input, Error, Result};
use crate::exact::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Derivation samples per catalog entry.
    pub samples: usize,
    /// Sample coefficients are drawn from `[-range, range]`.
    pub range: i64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            samples: 100,
            range: 3,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub struct Tally {
    pub checked: usize,
    pub passed: usize,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        self.checked += 1;
        self.passed += usize::from(ok);
    }

    fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.passed += other.passed;
    }
}

/// Where a tested map came from.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Provenance {
    pub entry: String,
    /// `map:<name>` for a catalog map, `sample:<index>` for a sampled one.
    pub map: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<Kind>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Violation {
    pub provenance: Provenance,
    pub check: String,
    pub reports: Vec<CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Observation {
    pub provenance: Provenance,
    pub note: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct ForcedTwists {
    /// Twists by invertible derivations whose inverse is not a derivation
    /// that still satisfy the target axioms.
    pub kept_axioms: usize,
    pub broke_axioms: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub config: Option<SuiteConfig>,
    pub entries: usize,
    pub invertible_derivations: usize,
    /// Invertible derivations where "inverse is a derivation" and the
    /// square condition agree.
    pub inverse_square_agreement: Tally,
    /// Distinct (entry, map) pairs with an accepted Inv-derivation.
    pub accepted_maps: usize,
    /// (entry, kind, map) triples on which the twist was verified.
    pub accepted_pairs: usize,
    pub checks: BTreeMap<String, Tally>,
    pub forced_twists: BTreeMap<String, ForcedTwists>,
    pub violations: Vec<Violation>,
    pub observations: Vec<Observation>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.inverse_square_agreement.checked == self.inverse_square_agreement.passed
    }

    fn tally(&mut self, key: impl Into<String>, ok: bool) {
        self.checks.entry(key.into()).or_default().record(ok);
    }

    fn merge(&mut self, other: SuiteReport) {
        self.invertible_derivations += other.invertible_derivations;
        self.inverse_square_agreement.merge(other.inverse_square_agreement);
        self.accepted_maps += other.accepted_maps;
        self.accepted_pairs += other.accepted_pairs;
        for (k, t) in other.checks {
            self.checks.entry(k).or_default().merge(t);
        }
        for (k, f) in other.forced_twists {
            let slot = self.forced_twists.entry(k).or_default();
            slot.kept_axioms += f.kept_axioms;
            slot.broke_axioms += f.broke_axioms;
        }
        self.violations.extend(other.violations);
        self.observations.extend(other.observations);
    }
}

/// Kinds whose axioms the entry's product(s) satisfy.
pub fn applicable_kinds(alg: &Algebra) -> Result<Vec<Kind>> {
    if alg.kind() == Some(Kind::Dendriform) {
        return Ok(vec![Kind::Dendriform]);
    }
    let mut kinds = Vec::new();
    for kind in [Kind::Lie, Kind::Prelie, Kind::Associative, Kind::Zinbiel] {
        if check_kind(alg, kind, None)?.iter().all(|r| r.holds) {
            kinds.push(kind);
        }
    }
    Ok(kinds)
}

/// Catalog maps that are derivations, then `samples` random elements of the
/// derivation space; all labelled for provenance.
pub fn candidate_maps(entry: &CatalogEntry, index: usize, config: &SuiteConfig) -> Result<Vec<(String, LinearMap)>> {
    let alg = &entry.algebra;
    let mut out = Vec::new();
    for (name, m) in &entry.known_maps {
        if is_derivation(m, alg, None)?.holds {
            out.push((format!("map:{name}"), m.clone()));
        }
    }
    let space = derivation_space(alg, None)?;
    if space.dim() == 0 {
        return Ok(out);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    for i in 0..config.samples {
        let c: Vec<i64> = (0..space.dim()).map(|_| rng.gen_range(-config.range..=config.range)).collect();
        out.push((format!("sample:{i}"), space.combination_ints(&c)?));
    }
    Ok(out)
}

struct Task<'a> {
    entry: &'a CatalogEntry,
    kinds: &'a [Kind],
    label: String,
    delta: LinearMap,
    seed: u64,
}

impl Task<'_> {
    fn provenance(&self, kind: Option<Kind>) -> Provenance {
        Provenance {
            entry: self.entry.id.clone(),
            map: self.label.clone(),
            seed: self.seed,
            kind,
        }
    }

    fn violation(&self, out: &mut SuiteReport, kind: Option<Kind>, check: &str, reports: Vec<CheckReport>, detail: Option<String>) {
        out.violations.push(Violation {
            provenance: self.provenance(kind),
            check: check.to_string(),
            reports,
            detail,
        });
    }

    fn reports(&self, out: &mut SuiteReport, kind: Option<Kind>, key: &str, reports: Vec<CheckReport>) {
        let ok = reports.iter().all(|r| r.holds);
        out.tally(key, ok);
        if !ok {
            let failing = reports.into_iter().filter(|r| !r.holds).collect();
            self.violation(out, kind, key, failing, None);
        }
    }

    /// A construction whose hypotheses may legitimately fail: unmet
    /// hypotheses skip it, anything else is checked.
    fn construction(&self, out: &mut SuiteReport, kind: Kind, key: &str, result: Result<ConstructionResult>) {
        match result {
            Ok(r) => self.reports(out, Some(kind), key, r.verification),
            Err(Error::Input(e)) => self.violation(out, Some(kind), key, Vec::new(), Some(e)),
            Err(_) => {}
        }
    }

    fn run(&self) -> Result<SuiteReport> {
        let mut out = SuiteReport::default();
        let alg = &self.entry.algebra;
        if !self.delta.is_invertible() {
            return Ok(out);
        }
        out.invertible_derivations += 1;
        let verdict = is_invder(&self.delta, alg)?;
        out.inverse_square_agreement.record(verdict.is_consistent());
        if !verdict.is_consistent() {
            self.violation(&mut out, None, "inverse_square_agreement", Vec::new(), Some(format!("{verdict:?}")));
        }

        // A weight-0 Rota-Baxter operator with an inverse is exactly the
        // inverse of a derivation.
        let inv = self.delta.inverse()?;
        let zero = Rational::zero();
        let rb: Vec<CheckReport> = alg
            .ops()
            .keys()
            .map(|op| is_rota_baxter(&inv, alg, Some(op), &zero))
            .collect::<Result<_>>()?;
        self.reports(&mut out, None, "inverse_is_rota_baxter", rb);

        if !verdict.accepted {
            self.forced(&mut out)?;
            return Ok(out);
        }
        out.accepted_maps += 1;
        for &kind in self.kinds {
            self.accepted(&mut out, kind)?;
        }
        Ok(out)
    }

    fn forced(&self, out: &mut SuiteReport) -> Result<()> {
        for &kind in self.kinds {
            let source = self.entry.algebra.clone().with_kind(Some(kind))?;
            let result = twist(&source, None, &self.delta, true)?;
            let target = check_kind(&result.algebra, kind, None)?;
            let kept = target.iter().all(|r| r.holds);
            let slot = out.forced_twists.entry(kind.to_string()).or_default();
            if kept {
                slot.kept_axioms += 1;
            } else {
                slot.broke_axioms += 1;
            }
            if self.label.starts_with("map:") || !kept {
                let note = if kept {
                    format!("twist by a derivation whose inverse is not a derivation kept the {kind} axioms")
                } else {
                    let failing: Vec<String> = target.iter().filter(|r| !r.holds).map(|r| r.to_string()).collect();
                    format!("twist by a derivation whose inverse is not a derivation broke the {kind} axioms: {}", failing.join("; "))
                };
                out.observations.push(Observation {
                    provenance: self.provenance(Some(kind)),
                    note,
                });
            }
        }
        Ok(())
    }

    fn accepted(&self, out: &mut SuiteReport, kind: Kind) -> Result<()> {
        let source = self.entry.algebra.clone().with_kind(Some(kind))?;
        let delta = &self.delta;
        out.accepted_pairs += 1;

        let twisted = twist(&source, None, delta, false)?;
        self.reports(out, Some(kind), &format!("twist:{kind}"), twisted.verification);

        let mut derived = check_invder_identities(&source, kind, None, delta)?;
        if kind == Kind::Lie {
            let op = source.default_op_name()?.to_string();
            derived.push(axioms::check_identity_25(&source, &op, delta)?);
        }
        for r in derived {
            let key = format!("derived:{}", r.axiom);
            self.reports(out, Some(kind), &key, vec![r]);
        }

        let yau = yau_iff_check(&source, None, delta, kind)?;
        out.tally(format!("yau:{kind}"), yau.agrees());
        if !yau.agrees() {
            let mut reports = yau.forward_reports.clone();
            reports.extend(yau.backward_reports.clone());
            let failing = reports.into_iter().filter(|r| !r.holds).collect();
            self.violation(
                out,
                Some(kind),
                &format!("yau:{kind}"),
                failing,
                Some(format!("forward = {}, backward = {}", yau.forward, yau.backward)),
            );
        }

        let n = source.dim();
        let mut operators: Vec<LinearMap> = vec![LinearMap::zero(n), LinearMap::identity(n)];
        operators.extend(self.entry.known_maps.values().cloned());
        let functors: &[Functor] = match kind {
            Kind::Lie => &[Functor::RbPrelieFromLie],
            Kind::Prelie => &[Functor::CommutatorLie],
            Kind::Associative => &[Functor::CommutatorLie, Functor::EndoLieFromAssoc, Functor::RbPrelieFromAssoc],
            Kind::Zinbiel => &[Functor::ZinbielToAssoc, Functor::ZinbielToLie],
            Kind::Dendriform => &[
                Functor::DendriformToAssoc,
                Functor::DendriformToPrelie,
                Functor::DendriformToZinbiel,
            ],
        };
        for &f in functors {
            let key = format!("functor:{f}");
            if f.needs_operator() {
                for r in &operators {
                    let op = RotaBaxterOp::new(r.clone());
                    self.construction(out, kind, &key, f.apply(&source, None, Some(&op), Some(delta), false));
                }
            } else {
                self.construction(out, kind, &key, f.apply(&source, None, None, Some(delta), false));
            }
        }
        Ok(())
    }
}

/// Runs every applicable theorem verifier over the catalog.
pub fn run_property_suite(config: SuiteConfig) -> Result<SuiteReport> {
    run_property_suite_on(&catalog(), config)
}

pub fn run_property_suite_on(entries: &[CatalogEntry], config: SuiteConfig) -> Result<SuiteReport> {
    if config.samples == 0 {
        return input("samples must be at least 1");
    }
    if config.range < 0 {
        return input("range must be nonnegative");
    }
    let kinds: Vec<Vec<Kind>> = entries
        .iter()
        .map(|e| applicable_kinds(&e.algebra))
        .collect::<Result<_>>()?;
    let mut tasks = Vec::new();
    for (i, entry) in entries.iter().enumerate() {
        for (label, delta) in candidate_maps(entry, i, &config)? {
            tasks.push(Task {
                entry,
                kinds: &kinds[i],
                label,
                delta,
                seed: config.seed,
            });
        }
    }
    let partials: Vec<SuiteReport> = tasks.par_iter().map(Task::run).collect::<Result<_>>()?;
    let mut report = SuiteReport {
        config: Some(config),
        entries: entries.len(),
        ..SuiteReport::default()
    };
    for p in partials {
        report.merge(p);
    }
    Ok(report)
}
