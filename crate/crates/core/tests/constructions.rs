mod common;

use invder_core::axioms::{check_jacobi, check_zinbiel, AxiomId};
use invder_core::catalog::entry;
use invder_core::constructions::{
    commutator_lie, dendriform_to_assoc, dendriform_to_prelie, dendriform_to_zinbiel, endo_lie_from_assoc,
    is_rota_baxter, rb_prelie_from_assoc, rb_prelie_from_lie, twist, yau_iff_check, zinbiel_to_assoc, zinbiel_to_lie,
    ConstructionResult, Functor, RotaBaxterOp,
};
use invder_core::{Algebra, BilinearOp, Error, Kind, LinearMap, Rational, Vector};

fn v(x: &[i64]) -> Vector {
    Vector::from_integers(x)
}

fn report(result: &ConstructionResult, axiom: AxiomId) -> bool {
    result
        .verification
        .iter()
        .find(|r| r.axiom == axiom)
        .unwrap_or_else(|| panic!("no {axiom} report"))
        .holds
}

#[test]
fn twist_heisenberg_by_delta_w() {
    let heis = entry("heisenberg3").unwrap();
    let t = twist(&heis.algebra, None, heis.map("delta_w").unwrap(), false).unwrap();
    assert!(t.passed());
    assert_eq!(t.algebra.op("bracket").unwrap().product(0, 1), v(&[0, 0, 2]));
    assert!(report(&t, AxiomId::Jacobi));
    assert!(report(&t, AxiomId::LeibnizInverse));
    assert_eq!(t.carried_delta.as_ref(), Some(heis.map("delta_w").unwrap()));
}

#[test]
fn twist_requires_an_invder_unless_forced() {
    let heis = entry("heisenberg3").unwrap();
    let diag = heis.map("diag112").unwrap();
    assert!(matches!(twist(&heis.algebra, None, diag, false), Err(Error::NotInvDer(_))));
    let forced = twist(&heis.algebra, None, diag, true).unwrap();
    assert!(report(&forced, AxiomId::Jacobi));
    assert!(!report(&forced, AxiomId::LeibnizInverse));
    assert!(forced.notes.iter().any(|n| n.contains("forced")));
}

#[test]
fn twist_rejects_mislabelled_sources() {
    let so3 = entry("so3").unwrap().algebra;
    let lying = so3.with_kind(Some(Kind::Associative)).unwrap();
    let id = LinearMap::identity(3);
    assert!(matches!(twist(&lying, None, &id, false), Err(Error::SourceAxiomFailure(_))));
}

#[test]
fn yau_checks_agree() {
    let a3 = entry("A3").unwrap();
    let y = yau_iff_check(&a3.algebra, None, a3.map("delta_A").unwrap(), Kind::Associative).unwrap();
    assert!(y.forward && y.backward);
    let heis = entry("heisenberg3").unwrap();
    let y = yau_iff_check(&heis.algebra, None, heis.map("delta_w").unwrap(), Kind::Lie).unwrap();
    assert!(y.agrees());
    assert!(matches!(
        yau_iff_check(&heis.algebra, None, heis.map("diag112").unwrap(), Kind::Lie),
        Err(Error::NotInvDer(_))
    ));
}

#[test]
fn commutator_of_a3() {
    let a3 = entry("A3").unwrap();
    let c = commutator_lie(&a3.algebra, None, Some(a3.map("delta_A").unwrap()), false).unwrap();
    assert!(c.passed());
    let bracket = c.algebra.op("bracket").unwrap();
    assert_eq!(bracket.product(0, 1), v(&[0, 0, 2]));
    assert_eq!(c.algebra.kind(), Some(Kind::Lie));
    assert!(report(&c, AxiomId::InvderJacobi));
}

#[test]
fn heisenberg_bracket_is_pre_lie() {
    // every double bracket lands in the center, so both associators vanish
    let heis = entry("heisenberg3").unwrap();
    let c = commutator_lie(&heis.algebra, None, None, false).unwrap();
    assert!(c.passed());
    assert_eq!(c.algebra.op("bracket").unwrap().product(0, 1), v(&[0, 0, 2]));
}

#[test]
fn commutator_rejects_non_pre_lie() {
    let so3 = entry("so3").unwrap();
    assert!(matches!(commutator_lie(&so3.algebra, None, None, false), Err(Error::SourceAxiomFailure(_))));
}

#[test]
fn rota_baxter_checks() {
    let heis = entry("heisenberg3").unwrap();
    let zero = Rational::zero();
    assert!(is_rota_baxter(heis.map("center_projection").unwrap(), &heis.algebra, None, &zero).unwrap().holds);
    let r = is_rota_baxter(&LinearMap::identity(3), &heis.algebra, None, &zero).unwrap();
    assert_eq!(r.witness.unwrap().indices, vec![0, 1]);
}

#[test]
fn rota_baxter_pre_lie_from_heisenberg() {
    let heis = entry("heisenberg3").unwrap();
    let r = RotaBaxterOp::new(heis.map("center_projection").unwrap().clone());
    let out = rb_prelie_from_lie(&heis.algebra, None, &r, Some(heis.map("delta_w").unwrap()), false).unwrap();
    assert!(out.passed());
    assert!(out.algebra.op("star").unwrap().is_zero());

    let id = RotaBaxterOp::new(LinearMap::identity(3));
    assert!(matches!(
        rb_prelie_from_lie(&heis.algebra, None, &id, None, false),
        Err(Error::NotRotaBaxter(_))
    ));
}

#[test]
fn endomorphism_bracket_on_a3() {
    let a3 = entry("A3").unwrap();
    let rx = a3.map("R_x").unwrap();
    let delta = a3.map("delta_A").unwrap();
    assert!(matches!(
        endo_lie_from_assoc(&a3.algebra, None, rx, Some(delta), false),
        Err(Error::CommutationFailure(_))
    ));
    let forced = endo_lie_from_assoc(&a3.algebra, None, rx, Some(delta), true).unwrap();
    let bracket = forced.algebra.op("bracket").unwrap();
    // [x, y] = μ(Rx, y) − μ(Ry, x) = μ(x, y) = z
    assert_eq!(bracket.product(0, 1), v(&[0, 0, 1]));
    assert!(report(&forced, AxiomId::Jacobi));
    let alone = endo_lie_from_assoc(&a3.algebra, None, rx, None, false).unwrap();
    assert!(alone.passed());

    let not_idem = LinearMap::diagonal_ints(&[2, 0, 0]);
    assert!(matches!(
        endo_lie_from_assoc(&a3.algebra, None, &not_idem, None, false),
        Err(Error::NotIdempotent)
    ));
}

#[test]
fn rota_baxter_pre_lie_from_a3() {
    let a3 = entry("A3").unwrap();
    let r = RotaBaxterOp::new(a3.map("R_z").unwrap().clone());
    let out = rb_prelie_from_assoc(&a3.algebra, None, &r, None, false).unwrap();
    assert!(out.passed());
    assert!(out.algebra.op("star").unwrap().is_zero());
}

#[test]
fn zinbiel_passages_on_z3() {
    let z3 = entry("Z3").unwrap();
    let d = z3.map("diag123").unwrap();
    assert!(matches!(zinbiel_to_assoc(&z3.algebra, None, Some(d), false), Err(Error::NotInvDer(_))));

    let assoc = zinbiel_to_assoc(&z3.algebra, None, Some(d), true).unwrap();
    let mu = assoc.algebra.op("mu").unwrap();
    assert_eq!(mu.product(0, 0), v(&[0, 2, 0]));
    assert_eq!(mu.product(0, 1).entries()[2], Rational::new(3, 2).unwrap());
    assert!(report(&assoc, AxiomId::Associativity));
    assert!(report(&assoc, AxiomId::Commutativity));

    let lie = zinbiel_to_lie(&z3.algebra, None, None, false).unwrap();
    assert!(lie.passed());
    assert_eq!(lie.algebra.op("bracket").unwrap().product(0, 1).entries()[2], Rational::new(1, 2).unwrap());
}

#[test]
fn zero_product_fixtures_pass_every_passage() {
    let z = entry("zero_zinbiel_2").unwrap();
    for d in z.known_maps.values() {
        assert!(zinbiel_to_assoc(&z.algebra, None, Some(d), false).unwrap().passed());
        assert!(zinbiel_to_lie(&z.algebra, None, Some(d), false).unwrap().passed());
    }
    let dz = entry("zero_dendriform_2").unwrap();
    for d in dz.known_maps.values() {
        for f in [Functor::DendriformToZinbiel, Functor::DendriformToAssoc, Functor::DendriformToPrelie] {
            assert!(f.apply(&dz.algebra, None, None, Some(d), false).unwrap().passed(), "{f}");
        }
    }
}

#[test]
fn dendriform_passages_on_d2() {
    let d2 = entry("D2").unwrap().algebra;
    let assoc = dendriform_to_assoc(&d2, None, false).unwrap();
    assert!(assoc.passed());
    assert_eq!(assoc.algebra.op("mu").unwrap().product(0, 0), v(&[0, 1]));
    let prelie = dendriform_to_prelie(&d2, None, false).unwrap();
    assert!(prelie.passed());
    assert_eq!(prelie.algebra.op("star").unwrap().product(0, 0), v(&[0, 1]));
    assert!(matches!(
        dendriform_to_zinbiel(&d2, None, false),
        Err(Error::SymmetryPreconditionFailure(_))
    ));
}

#[test]
fn symmetric_dendriform_gives_zinbiel() {
    let half = BilinearOp::from_int_terms(2, &[(0, 0, 1, 1)]).unwrap();
    let sym = Algebra::dendriform("D2s", vec!["u".into(), "v".into()], half.clone(), half).unwrap();
    let z = dendriform_to_zinbiel(&sym, None, false).unwrap();
    let diamond = z.algebra.op("diamond").unwrap();
    assert_eq!(diamond.product(0, 0), v(&[0, 1]));
    let oracle = common::holds_on_basis(
        AxiomId::Zinbiel,
        &common::Ops::Single(&common::Dense::from_op(diamond)),
        None,
        &common::qi(0),
        2,
    );
    assert_eq!(check_zinbiel(&z.algebra, "diamond").unwrap().holds, oracle);
    assert_eq!(z.passed(), oracle);
}

#[test]
fn functor_names_and_operator_requirement() {
    for f in Functor::ALL {
        assert_eq!(f.as_str().parse::<Functor>().unwrap(), f);
        assert_eq!(f.as_str().replace('-', "_").parse::<Functor>().unwrap(), f);
    }
    let heis = entry("heisenberg3").unwrap();
    assert!(matches!(
        Functor::RbPrelieFromLie.apply(&heis.algebra, None, None, None, false),
        Err(Error::Input(_))
    ));
}

#[test]
fn results_export_as_algebra_files() {
    let heis = entry("heisenberg3").unwrap();
    let t = twist(&heis.algebra, None, heis.map("delta_w").unwrap(), false).unwrap();
    let file = invder_core::AlgebraFile::from_json(&t.to_file().to_json()).unwrap();
    assert!(check_jacobi(&file.algebra, "bracket").unwrap().holds);
    assert_eq!(file.map("delta").unwrap(), heis.map("delta_w").unwrap());
    let json: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
    assert!(json["verification"].as_array().unwrap().iter().all(|r| r["holds"] == true));
}
