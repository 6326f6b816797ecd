use clap::ValueEnum;
use serde::Serialize;

use invder_core::axioms::{self, check_kind, AxiomId};
use invder_core::constructions::{self, yau_iff_check, ConstructionResult, Functor, RotaBaxterOp, YauVerdict};
use invder_core::derivations::{describe_rejection, is_derivation, is_invder_on};
use invder_core::{Algebra, CheckReport, Error, InvDerVerdict, Kind, LinearMap, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Theorem {
    /// Twist of a Lie algebra is Lie.
    #[value(name = "thm-2.1")]
    Thm2_1,
    /// Twist of a pre-Lie algebra is pre-Lie.
    #[value(name = "thm-2.2")]
    Thm2_2,
    /// For an invertible derivation: inverse is a derivation iff the square condition holds.
    #[value(name = "prop-2.1")]
    Prop2_1,
    /// Cyclic identity relating the twisted bracket and the map.
    #[value(name = "prop-2.2")]
    Prop2_2,
    /// Pre-Lie Inv-derivation identity.
    #[value(name = "prop-2.3")]
    Prop2_3,
    /// Commutator of a pre-Lie algebra with an Inv-derivation.
    #[value(name = "prop-3.1")]
    Prop3_1,
    /// Rota-Baxter pre-Lie product from a Lie algebra.
    #[value(name = "prop-3.2")]
    Prop3_2,
    /// Twist of an associative algebra is associative.
    #[value(name = "thm-3.4")]
    Thm3_4,
    /// Associative Inv-derivation identity.
    #[value(name = "prop-3.4")]
    Prop3_4,
    /// Commutator of an associative algebra with an Inv-derivation.
    #[value(name = "prop-3.5")]
    Prop3_5,
    /// Lie bracket induced by an idempotent endomorphism.
    #[value(name = "prop-3.6")]
    Prop3_6,
    /// Pre-Lie product from an associative algebra and an operator.
    #[value(name = "thm-3-rbo")]
    Thm3Rbo,
    /// Twist of a zinbiel algebra is zinbiel.
    #[value(name = "thm-4.2")]
    Thm4_2,
    /// Zinbiel Inv-derivation identity.
    #[value(name = "prop-4.3")]
    Prop4_3,
    /// The two auxiliary zinbiel identities.
    #[value(name = "prop-4.4-4.5")]
    Prop4_4_4_5,
    /// Symmetrized zinbiel product is associative.
    #[value(name = "prop-4-zinbiel-assoc")]
    Prop4ZinbielAssoc,
    /// Commutator of a zinbiel product is Lie.
    #[value(name = "thm-4-zinbiel-lie")]
    Thm4ZinbielLie,
    /// Twist of a dendriform algebra is dendriform.
    #[value(name = "thm-4-dendriform")]
    Thm4Dendriform,
    /// The three dendriform Inv-derivation identities.
    #[value(name = "prop-4.7-4.9")]
    Prop4_7_4_9,
    /// Symmetric dendriform algebra is zinbiel.
    #[value(name = "prop-4-dendriform-zinbiel")]
    Prop4DendriformZinbiel,
    /// Sum of the dendriform products is associative.
    #[value(name = "prop-4-dendriform-assoc")]
    Prop4DendriformAssoc,
    /// Dendriform pre-Lie product.
    #[value(name = "prop-4-dendriform-prelie")]
    Prop4DendriformPrelie,
    /// Twisted associative algebra is InvDer iff the source is.
    #[value(name = "thm-yau")]
    ThmYau,
    /// Same iff for Lie, pre-Lie and zinbiel sources.
    #[value(name = "cor-yau")]
    CorYau,
}

pub struct Inputs<'a> {
    pub alg: &'a Algebra,
    pub op: Option<&'a str>,
    pub delta: Option<&'a LinearMap>,
    pub operator: Option<RotaBaxterOp>,
    pub force: bool,
}

#[derive(Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub verified: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<InvDerVerdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub yau: Vec<YauVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<ConstructionResult>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl TheoremReport {
    fn new(theorem: Theorem) -> Self {
        TheoremReport {
            theorem: theorem.to_possible_value().expect("named").get_name().to_string(),
            verified: false,
            reports: Vec::new(),
            verdict: None,
            yau: Vec::new(),
            construction: None,
            notes: Vec::new(),
        }
    }

    fn from_reports(theorem: Theorem, reports: Vec<CheckReport>, notes: Vec<String>) -> Self {
        TheoremReport {
            verified: reports.iter().all(|r| r.holds),
            reports,
            notes,
            ..TheoremReport::new(theorem)
        }
    }

    fn from_construction(theorem: Theorem, result: ConstructionResult) -> Self {
        TheoremReport {
            verified: result.passed(),
            construction: Some(result),
            ..TheoremReport::new(theorem)
        }
    }
}

fn need_delta<'a>(inputs: &Inputs<'a>) -> Result<&'a LinearMap> {
    inputs.delta.ok_or_else(|| Error::Input("this theorem needs --map".into()))
}

fn need_operator<'a>(inputs: &'a Inputs<'_>) -> Result<&'a RotaBaxterOp> {
    inputs.operator.as_ref().ok_or_else(|| Error::Input("this theorem needs --operator".into()))
}

/// Source axioms and Inv-derivation, as hard errors unless forced.
fn hypotheses(inputs: &Inputs<'_>, kind: Kind, notes: &mut Vec<String>) -> Result<()> {
    let delta = need_delta(inputs)?;
    let op = if kind == Kind::Dendriform { None } else { inputs.op };
    let mut gate = |e: Error| {
        if inputs.force {
            notes.push(format!("forced past failed precondition: {e}"));
            Ok(())
        } else {
            Err(e)
        }
    };
    if let Some(bad) = check_kind(inputs.alg, kind, op)?.into_iter().find(|r| !r.holds) {
        gate(Error::SourceAxiomFailure(bad.to_string()))?;
    }
    let verdict = is_invder_on(delta, inputs.alg, op)?;
    if !verdict.accepted {
        gate(Error::NotInvDer(describe_rejection(&verdict)))?;
    }
    Ok(())
}

fn identities(theorem: Theorem, inputs: &Inputs<'_>, kind: Kind, ids: &[AxiomId]) -> Result<TheoremReport> {
    let mut notes = Vec::new();
    hypotheses(inputs, kind, &mut notes)?;
    let delta = need_delta(inputs)?;
    let reports = ids
        .iter()
        .map(|&a| {
            let op = if a.is_dendriform() { None } else { inputs.op };
            axioms::check(inputs.alg, a, op, Some(delta))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TheoremReport::from_reports(theorem, reports, notes))
}

fn twist_as(theorem: Theorem, inputs: &Inputs<'_>, kind: Kind) -> Result<TheoremReport> {
    let source = inputs.alg.clone().with_kind(Some(kind))?;
    let op = if kind == Kind::Dendriform { None } else { inputs.op };
    let result = constructions::twist(&source, op, need_delta(inputs)?, inputs.force)?;
    Ok(TheoremReport::from_construction(theorem, result))
}

fn passage(theorem: Theorem, inputs: &Inputs<'_>, functor: Functor) -> Result<TheoremReport> {
    let operator = if functor.needs_operator() {
        Some(need_operator(inputs)?)
    } else {
        None
    };
    let result = functor.apply(inputs.alg, inputs.op, operator, Some(need_delta(inputs)?), inputs.force)?;
    Ok(TheoremReport::from_construction(theorem, result))
}

fn yau(theorem: Theorem, inputs: &Inputs<'_>, kinds: &[Kind]) -> Result<TheoremReport> {
    let delta = need_delta(inputs)?;
    let mut report = TheoremReport::new(theorem);
    for &kind in kinds {
        if !check_kind(inputs.alg, kind, inputs.op)?.iter().all(|r| r.holds) {
            report.notes.push(format!("not a {kind} algebra; skipped"));
            continue;
        }
        report.yau.push(yau_iff_check(inputs.alg, inputs.op, delta, kind)?);
    }
    if report.yau.is_empty() {
        return Err(Error::SourceAxiomFailure(format!(
            "algebra is none of {}",
            kinds.iter().map(|k| k.as_str()).collect::<Vec<_>>().join(", ")
        )));
    }
    report.verified = report.yau.iter().all(YauVerdict::agrees);
    Ok(report)
}

fn square_iff(theorem: Theorem, inputs: &Inputs<'_>) -> Result<TheoremReport> {
    let delta = need_delta(inputs)?;
    if !is_derivation(delta, inputs.alg, inputs.op)?.holds {
        return Err(Error::NotInvDer("map is not a derivation".into()));
    }
    if !delta.is_invertible() {
        return Err(Error::Singular);
    }
    let verdict = is_invder_on(delta, inputs.alg, inputs.op)?;
    Ok(TheoremReport {
        verified: verdict.is_consistent(),
        verdict: Some(verdict),
        ..TheoremReport::new(theorem)
    })
}

pub fn verify(theorem: Theorem, inputs: &Inputs<'_>) -> Result<TheoremReport> {
    use Theorem::*;
    match theorem {
        Thm2_1 => twist_as(theorem, inputs, Kind::Lie),
        Thm2_2 => twist_as(theorem, inputs, Kind::Prelie),
        Thm3_4 => twist_as(theorem, inputs, Kind::Associative),
        Thm4_2 => twist_as(theorem, inputs, Kind::Zinbiel),
        Thm4Dendriform => twist_as(theorem, inputs, Kind::Dendriform),
        Prop2_1 => square_iff(theorem, inputs),
        Prop2_2 => identities(theorem, inputs, Kind::Lie, &[AxiomId::Identity25]),
        Prop2_3 => identities(theorem, inputs, Kind::Prelie, &[AxiomId::InvderPrelie]),
        Prop3_4 => identities(theorem, inputs, Kind::Associative, &[AxiomId::InvderAssoc]),
        Prop4_3 => identities(theorem, inputs, Kind::Zinbiel, &[AxiomId::InvderZinbiel]),
        Prop4_4_4_5 => identities(
            theorem,
            inputs,
            Kind::Zinbiel,
            &[AxiomId::ZinbielAux44, AxiomId::ZinbielAux45],
        ),
        Prop4_7_4_9 => identities(
            theorem,
            inputs,
            Kind::Dendriform,
            &[AxiomId::InvderDend47, AxiomId::InvderDend48, AxiomId::InvderDend49],
        ),
        Prop3_1 | Prop3_5 => {
            let kind = if theorem == Prop3_1 { Kind::Prelie } else { Kind::Associative };
            let mut notes = Vec::new();
            hypotheses(inputs, kind, &mut notes)?;
            let mut report = passage(theorem, inputs, Functor::CommutatorLie)?;
            report.notes = notes;
            Ok(report)
        }
        Prop3_2 => passage(theorem, inputs, Functor::RbPrelieFromLie),
        Prop3_6 => passage(theorem, inputs, Functor::EndoLieFromAssoc),
        Thm3Rbo => passage(theorem, inputs, Functor::RbPrelieFromAssoc),
        Prop4ZinbielAssoc => passage(theorem, inputs, Functor::ZinbielToAssoc),
        Thm4ZinbielLie => passage(theorem, inputs, Functor::ZinbielToLie),
        Prop4DendriformZinbiel => passage(theorem, inputs, Functor::DendriformToZinbiel),
        Prop4DendriformAssoc => passage(theorem, inputs, Functor::DendriformToAssoc),
        Prop4DendriformPrelie => passage(theorem, inputs, Functor::DendriformToPrelie),
        ThmYau => yau(theorem, inputs, &[Kind::Associative]),
        CorYau => yau(theorem, inputs, &[Kind::Lie, Kind::Prelie, Kind::Zinbiel]),
    }
}
