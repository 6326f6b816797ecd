//! Built-in example algebras with named maps and frozen verdicts.

use std::collections::BTreeMap;

use crate::algebra::{default_basis, Algebra, BilinearOp, Kind, LinearMap};
use crate::axioms::{self, kind_axioms};
use crate::derivations::{derivation_space, invder_search, is_derivation, is_invder, SearchBounds, SearchOutcome};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::io::AlgebraFile;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub algebra: Algebra,
    pub known_maps: BTreeMap<String, LinearMap>,
    /// check id -> verdict, reproduced exactly by [`recheck`].
    pub expected: BTreeMap<String, String>,
}

impl CatalogEntry {
    pub fn map(&self, name: &str) -> Result<&LinearMap> {
        self.known_maps
            .get(name)
            .ok_or_else(|| Error::Input(format!("entry {:?} has no map {name:?}", self.id)))
    }

    pub fn to_file(&self) -> AlgebraFile {
        AlgebraFile {
            algebra: self.algebra.clone(),
            maps: self.known_maps.clone(),
        }
    }
}

/// Bounds used for the frozen search verdicts.
pub const FIXTURE_SEARCH: SearchBounds = SearchBounds {
    range: 3,
    max_samples: 2000,
    seed: 0,
};

/// Re-derives every verdict an entry's fixture records.
pub fn recheck(entry: &CatalogEntry) -> Result<BTreeMap<String, String>> {
    let alg = &entry.algebra;
    let mut out = BTreeMap::new();
    let verdict = |b: bool| if b { "holds" } else { "fails" }.to_string();
    if let Some(kind) = alg.kind() {
        for &a in kind_axioms(kind) {
            let r = axioms::check(alg, a, None, None)?;
            out.insert(format!("axiom:{a}"), verdict(r.holds));
        }
    }
    out.insert("der_dim".into(), derivation_space(alg, None)?.dim().to_string());
    for (name, map) in &entry.known_maps {
        out.insert(format!("derivation:{name}"), verdict(is_derivation(map, alg, None)?.holds));
        let v = is_invder(map, alg)?;
        out.insert(
            format!("invder:{name}"),
            if v.accepted { "accepted" } else { "rejected" }.to_string(),
        );
    }
    let search = match invder_search(alg, None, FIXTURE_SEARCH)? {
        SearchOutcome::Found { .. } => "found".to_string(),
        SearchOutcome::NotFound { certificate: Some(c), .. } => format!("not_found: {c}"),
        SearchOutcome::NotFound { certificate: None, .. } => "not_found".to_string(),
    };
    out.insert("search".into(), search);
    Ok(out)
}

fn ints(n: usize, terms: &[(usize, usize, usize, i64)]) -> BilinearOp {
    BilinearOp::from_int_terms(n, terms).expect("catalog table in range")
}

fn skew(n: usize, terms: &[(usize, usize, usize, i64)]) -> BilinearOp {
    BilinearOp::skew_from_int_terms(n, terms).expect("catalog table in range")
}

fn cols(columns: &[&[i64]]) -> LinearMap {
    LinearMap::from_int_columns(columns).expect("catalog map is square")
}

struct Builder {
    entries: Vec<CatalogEntry>,
}

impl Builder {
    fn add(&mut self, algebra: Algebra, maps: Vec<(&str, LinearMap)>, expected: &[(&str, &str)]) {
        self.entries.push(CatalogEntry {
            id: algebra.name().to_string(),
            algebra,
            known_maps: maps.into_iter().map(|(k, m)| (k.to_string(), m)).collect(),
            expected: expected.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
        });
    }
}

fn single(name: &str, op: &str, table: BilinearOp, kind: Kind) -> Algebra {
    Algebra::single(name, op, table, Some(kind)).expect("catalog algebra is valid")
}

const ABELIAN_EXPECTED: [&[(&str, &str)]; 4] = [
    &[
        ("axiom:jacobi", "holds"),
        ("axiom:skew_symmetry", "holds"),
        ("der_dim", "1"),
        ("derivation:id", "holds"),
        ("invder:id", "accepted"),
        ("search", "found"),
    ],
    &[
        ("axiom:jacobi", "holds"),
        ("axiom:skew_symmetry", "holds"),
        ("der_dim", "4"),
        ("derivation:id", "holds"),
        ("derivation:shear", "holds"),
        ("invder:id", "accepted"),
        ("invder:shear", "accepted"),
        ("search", "found"),
    ],
    &[
        ("axiom:jacobi", "holds"),
        ("axiom:skew_symmetry", "holds"),
        ("der_dim", "9"),
        ("derivation:id", "holds"),
        ("derivation:shear", "holds"),
        ("invder:id", "accepted"),
        ("invder:shear", "accepted"),
        ("search", "found"),
    ],
    &[
        ("axiom:jacobi", "holds"),
        ("axiom:skew_symmetry", "holds"),
        ("der_dim", "16"),
        ("derivation:id", "holds"),
        ("derivation:shear", "holds"),
        ("invder:id", "accepted"),
        ("invder:shear", "accepted"),
        ("search", "found"),
    ],
];

/// Upper unitriangular map with ones on the superdiagonal.
fn shear(n: usize) -> LinearMap {
    let columns: Vec<Vec<i64>> = (0..n)
        .map(|j| (0..n).map(|i| i64::from(i == j || i + 1 == j)).collect())
        .collect();
    let refs: Vec<&[i64]> = columns.iter().map(Vec::as_slice).collect();
    cols(&refs)
}

pub fn catalog() -> Vec<CatalogEntry> {
    let mut b = Builder { entries: Vec::new() };

    for n in 1..=4 {
        let mut maps = vec![("id", LinearMap::identity(n))];
        if n > 1 {
            maps.push(("shear", shear(n)));
        }
        b.add(single(&format!("abelian_{n}"), "bracket", BilinearOp::zero(n), Kind::Lie), maps, ABELIAN_EXPECTED[n - 1]);
    }

    let so3 = single("so3", "bracket", skew(3, &[(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1)]), Kind::Lie);
    let ad = |i: usize| {
        let x = crate::exact::Vector::basis(3, i);
        LinearMap::left_multiplication(so3.op("bracket").expect("so3 bracket"), &x).expect("dims match")
    };
    let so3_maps = vec![("ad_e1", ad(0)), ("ad_e2", ad(1)), ("ad_e3", ad(2))];
    b.add(
        so3.clone(),
        so3_maps,
        &[
            ("axiom:jacobi", "holds"),
            ("axiom:skew_symmetry", "holds"),
            ("der_dim", "3"),
            ("derivation:ad_e1", "holds"),
            ("derivation:ad_e2", "holds"),
            ("derivation:ad_e3", "holds"),
            ("invder:ad_e1", "rejected"),
            ("invder:ad_e2", "rejected"),
            ("invder:ad_e3", "rejected"),
            ("search", "not_found: generic determinant vanishes"),
        ],
    );

    b.add(
        single("heisenberg3", "bracket", skew(3, &[(0, 1, 2, 1)]), Kind::Lie),
        vec![
            ("delta_w", cols(&[&[1, 3, 0], &[-1, 1, 0], &[0, 0, 2]])),
            ("diag112", LinearMap::diagonal_ints(&[1, 1, 2])),
            ("center_projection", LinearMap::diagonal_ints(&[0, 0, 1])),
            ("e3_to_e1", cols(&[&[0, 0, 0], &[0, 0, 0], &[1, 0, 0]])),
        ],
        &[
            ("axiom:jacobi", "holds"),
            ("axiom:skew_symmetry", "holds"),
            ("der_dim", "6"),
            ("derivation:center_projection", "fails"),
            ("derivation:delta_w", "holds"),
            ("derivation:diag112", "holds"),
            ("derivation:e3_to_e1", "fails"),
            ("invder:center_projection", "rejected"),
            ("invder:delta_w", "accepted"),
            ("invder:diag112", "rejected"),
            ("invder:e3_to_e1", "rejected"),
            ("search", "found"),
        ],
    );

    b.add(
        single("filiform_n4", "bracket", skew(4, &[(0, 1, 2, 1), (0, 2, 3, 1)]), Kind::Lie),
        vec![("grading", LinearMap::diagonal_ints(&[1, 1, 2, 3]))],
        &[
            ("axiom:jacobi", "holds"),
            ("axiom:skew_symmetry", "holds"),
            ("der_dim", "7"),
            ("derivation:grading", "holds"),
            ("invder:grading", "rejected"),
            ("search", "not_found"),
        ],
    );

    b.add(
        single("solvable2", "bracket", skew(2, &[(0, 1, 1, 1)]), Kind::Lie),
        vec![("ad_e1", cols(&[&[0, 0], &[0, 1]]))],
        &[
            ("axiom:jacobi", "holds"),
            ("axiom:skew_symmetry", "holds"),
            ("der_dim", "2"),
            ("derivation:ad_e1", "holds"),
            ("invder:ad_e1", "rejected"),
            ("search", "not_found: generic determinant vanishes"),
        ],
    );

    b.add(
        single("A3", "mu", ints(3, &[(0, 1, 2, 1), (1, 0, 2, -1)]), Kind::Associative),
        vec![
            ("delta_A", cols(&[&[1, 3, 0], &[-1, 1, 0], &[0, 0, 2]])),
            ("diag112", LinearMap::diagonal_ints(&[1, 1, 2])),
            ("R_z", LinearMap::diagonal_ints(&[0, 0, 1])),
            ("R_x", LinearMap::diagonal_ints(&[1, 0, 0])),
        ],
        &[
            ("axiom:associativity", "holds"),
            ("der_dim", "6"),
            ("derivation:R_x", "fails"),
            ("derivation:R_z", "fails"),
            ("derivation:delta_A", "holds"),
            ("derivation:diag112", "holds"),
            ("invder:R_x", "rejected"),
            ("invder:R_z", "rejected"),
            ("invder:delta_A", "accepted"),
            ("invder:diag112", "rejected"),
            ("search", "found"),
        ],
    );

    // matrix units E11, E12, E21, E22 with E_ab E_cd = [b = c] E_ad
    let units = [(0, 0), (0, 1), (1, 0), (1, 1)];
    let mut m2 = Vec::new();
    for (p, &(a, bb)) in units.iter().enumerate() {
        for (q, &(c, d)) in units.iter().enumerate() {
            if bb == c {
                m2.push((p, q, 2 * a + d, 1));
            }
        }
    }
    let m2 = Algebra::new(
        "M2",
        vec!["E11".into(), "E12".into(), "E21".into(), "E22".into()],
        [("mu".to_string(), ints(4, &m2))].into(),
        Some(Kind::Associative),
    )
    .expect("M2 is valid");
    let ad_e12 = {
        let mu = m2.op("mu").expect("mu");
        let x = crate::exact::Vector::basis(4, 1);
        LinearMap::new(
            LinearMap::left_multiplication(mu, &x)
                .expect("dims")
                .matrix()
                .try_sub(LinearMap::left_multiplication(&mu.opposite(), &x).expect("dims").matrix())
                .expect("dims"),
        )
        .expect("square")
    };
    b.add(
        m2,
        vec![
            ("ad_E12", ad_e12),
            ("upper_proj", cols(&[&[0, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]])),
            ("id", LinearMap::identity(4)),
        ],
        &[
            ("axiom:associativity", "holds"),
            ("der_dim", "3"),
            ("derivation:ad_E12", "holds"),
            ("derivation:id", "fails"),
            ("derivation:upper_proj", "fails"),
            ("invder:ad_E12", "rejected"),
            ("invder:id", "rejected"),
            ("invder:upper_proj", "rejected"),
            ("search", "not_found: generic determinant vanishes"),
        ],
    );

    let half = Rational::new(1, 2).expect("nonzero denominator");
    let z3 = BilinearOp::from_terms(
        3,
        [(0, 0, 1, Rational::one()), (0, 1, 2, Rational::one()), (1, 0, 2, half)],
    )
    .expect("Z3 table");
    b.add(
        Algebra::new("Z3", vec!["u".into(), "v".into(), "w".into()], [("diamond".to_string(), z3)].into(), Some(Kind::Zinbiel))
            .expect("Z3 is valid"),
        vec![("diag123", LinearMap::diagonal_ints(&[1, 2, 3]))],
        &[
            ("axiom:zinbiel", "holds"),
            ("der_dim", "3"),
            ("derivation:diag123", "holds"),
            ("invder:diag123", "rejected"),
            ("search", "not_found"),
        ],
    );

    b.add(
        Algebra::dendriform("D2", vec!["u".into(), "v".into()], BilinearOp::zero(2), ints(2, &[(0, 0, 1, 1)]))
            .expect("D2 is valid"),
        vec![("diag12", LinearMap::diagonal_ints(&[1, 2]))],
        &[
            ("axiom:dendriform_1", "holds"),
            ("axiom:dendriform_2", "holds"),
            ("axiom:dendriform_3", "holds"),
            ("der_dim", "2"),
            ("derivation:diag12", "holds"),
            ("invder:diag12", "rejected"),
            ("search", "not_found"),
        ],
    );

    for (kind, op) in [
        (Kind::Prelie, "star"),
        (Kind::Associative, "mu"),
        (Kind::Zinbiel, "diamond"),
    ] {
        b.add(
            single(&format!("zero_{kind}_2"), op, BilinearOp::zero(2), kind),
            vec![("id", LinearMap::identity(2)), ("shear", shear(2))],
            &zero_expected(kind),
        );
    }
    b.add(
        Algebra::dendriform("zero_dendriform_2", default_basis(2), BilinearOp::zero(2), BilinearOp::zero(2))
            .expect("valid"),
        vec![("id", LinearMap::identity(2)), ("shear", shear(2))],
        &zero_expected(Kind::Dendriform),
    );

    b.entries
}

fn zero_expected(kind: Kind) -> Vec<(&'static str, &'static str)> {
    let mut v: Vec<(&str, &str)> = match kind {
        Kind::Prelie => vec![("axiom:pre_lie", "holds")],
        Kind::Associative => vec![("axiom:associativity", "holds")],
        Kind::Zinbiel => vec![("axiom:zinbiel", "holds")],
        Kind::Dendriform => vec![
            ("axiom:dendriform_1", "holds"),
            ("axiom:dendriform_2", "holds"),
            ("axiom:dendriform_3", "holds"),
        ],
        Kind::Lie => unreachable!("abelian entries cover zero brackets"),
    };
    v.extend([
        ("der_dim", "4"),
        ("derivation:id", "holds"),
        ("derivation:shear", "holds"),
        ("invder:id", "accepted"),
        ("invder:shear", "accepted"),
        ("search", "found"),
    ]);
    v
}

pub fn entry(id: &str) -> Result<CatalogEntry> {
    catalog().into_iter().find(|e| e.id == id).ok_or_else(|| {
        Error::Input(format!(
            "no catalog entry {id:?} (available: {})",
            catalog().iter().map(|e| e.id.as_str()).collect::<Vec<_>>().join(", ")
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{LEFT, RIGHT};

    #[test]
    fn ids_are_unique_and_named_as_specified() {
        let ids: Vec<String> = catalog().into_iter().map(|e| e.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        for id in ["abelian_1", "abelian_4", "so3", "heisenberg3", "filiform_n4", "solvable2", "A3", "M2", "Z3", "D2"] {
            assert!(ids.iter().any(|i| i == id), "{id}");
        }
    }

    #[test]
    fn dendriform_entries_use_left_and_right() {
        for e in catalog().into_iter().filter(|e| e.algebra.kind() == Some(Kind::Dendriform)) {
            assert!(e.algebra.op(LEFT).is_ok() && e.algebra.op(RIGHT).is_ok());
        }
    }

    #[test]
    fn unknown_entry_is_input_error() {
        assert!(matches!(entry("nope"), Err(Error::Input(_))));
    }
}
