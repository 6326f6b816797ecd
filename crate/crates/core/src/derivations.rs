//! Derivation spaces, Inv-derivation verdicts and a bounded search for
//! Inv-derivations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, BilinearOp, LinearMap};
use crate::axioms::{AxiomId, CheckReport, Identity, Operands};
use crate::error::{input, Error, Result};
use crate::exact::{Matrix, Rational, Vector};

/// Certificate attached to `NotFound` when no derivation can be invertible.
pub const VANISHING_DETERMINANT: &str = "generic determinant vanishes";

fn selected_ops<'a>(alg: &'a Algebra, op: Option<&str>) -> Result<Vec<&'a BilinearOp>> {
    match op {
        Some(name) => Ok(vec![alg.op(name)?]),
        None => Ok(alg.ops().values().collect()),
    }
}

fn first_failure(ops: &[&BilinearOp], axiom: AxiomId, map: &LinearMap) -> Result<CheckReport> {
    for op in ops {
        let report = Identity::new(axiom, Operands::Single(op), Some(map))?.check();
        if !report.holds {
            return Ok(report);
        }
    }
    Ok(CheckReport::pass(axiom))
}

/// Leibniz rule on every basis pair of the selected op, or of every op
/// when `op` is `None` (so both halves of a dendriform pair).
pub fn is_derivation(delta: &LinearMap, alg: &Algebra, op: Option<&str>) -> Result<CheckReport> {
    alg.ensure_map(delta)?;
    first_failure(&selected_ops(alg, op)?, AxiomId::Leibniz, delta)
}

/// `μ(δx, δy) = δ²μ(x, y)` on every basis pair of the selected ops.
pub fn square_condition(delta: &LinearMap, alg: &Algebra, op: Option<&str>) -> Result<CheckReport> {
    alg.ensure_map(delta)?;
    first_failure(&selected_ops(alg, op)?, AxiomId::SquareCondition, delta)
}

/// Coefficient matrix of the Leibniz system. Unknown `k*n + l` is the
/// coefficient of `e_k` in `δ(e_l)`.
pub fn leibniz_system(ops: &[&BilinearOp]) -> Matrix {
    let n = ops.first().map_or(0, |op| op.dim());
    let var = |k: usize, l: usize| k * n + l;
    let mut rows = Vec::new();
    for op in ops {
        for i in 0..n {
            for j in 0..n {
                let mut block = vec![vec![Rational::zero(); n * n]; n];
                for (l, c) in op.product(i, j).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (k, row) in block.iter_mut().enumerate() {
                        row[var(k, l)] += c;
                    }
                }
                for m in 0..n {
                    let left = op.product(m, j);
                    let right = op.product(i, m);
                    for (k, row) in block.iter_mut().enumerate() {
                        row[var(m, i)] -= &left[k];
                        row[var(m, j)] -= &right[k];
                    }
                }
                rows.extend(block.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())));
            }
        }
    }
    if rows.is_empty() {
        return Matrix::zeros(0, n * n);
    }
    Matrix::from_rows(rows).expect("rows share a length")
}

/// `Der` of an algebra, as the canonical kernel basis of the Leibniz system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DerivationSpace {
    n: usize,
    basis: Vec<LinearMap>,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Dimension of the underlying algebra.
    pub fn algebra_dim(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[LinearMap] {
        &self.basis
    }

    pub fn combination(&self, coeffs: &[Rational]) -> Result<LinearMap> {
        if coeffs.len() != self.dim() {
            return input(format!("expected {} coefficients, got {}", self.dim(), coeffs.len()));
        }
        let mut acc = Matrix::zeros(self.n, self.n);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.try_add(&b.matrix().scaled(c))?;
            }
        }
        LinearMap::new(acc)
    }

    pub fn combination_ints(&self, coeffs: &[i64]) -> Result<LinearMap> {
        let c: Vec<Rational> = coeffs.iter().map(|&x| Rational::from_integer(x)).collect();
        self.combination(&c)
    }

    /// Coordinates of `map` in the basis, if it lies in the span.
    pub fn coordinates(&self, map: &LinearMap) -> Result<Option<Vector>> {
        if map.dim() != self.n {
            return input(format!("map has dimension {}, algebra has {}", map.dim(), self.n));
        }
        if self.basis.is_empty() {
            return Ok(map.matrix().is_zero().then(|| Vector::zeros(0)));
        }
        let columns: Vec<Vector> = self
            .basis
            .iter()
            .map(|b| Vector::new(b.matrix().entries().to_vec()))
            .collect();
        let system = Matrix::from_columns(&columns)?;
        let target = Vector::new(map.matrix().entries().to_vec());
        Ok(match system.solve(&target)? {
            crate::exact::Solve::Solution(s) => Some(s.particular),
            crate::exact::Solve::NoSolution => None,
        })
    }

    pub fn contains(&self, map: &LinearMap) -> Result<bool> {
        Ok(self.coordinates(map)?.is_some())
    }

    /// Decides whether `det(Σ c_i D_i)` vanishes identically in the `c_i`.
    ///
    /// Evaluates at `probes` seeded random points first; a nonzero value
    /// settles the question. Otherwise the polynomial (degree at most n in
    /// each variable) is evaluated on the grid `{0..n}^d`, which proves it is
    /// zero. Returns `None` when that grid exceeds `grid_cap` points.
    pub fn generic_determinant_vanishes(&self, seed: u64, probes: usize, grid_cap: u64) -> Option<bool> {
        let d = self.dim();
        if d == 0 {
            return Some(true);
        }
        let det_at = |c: &[i64]| self.combination_ints(c).expect("length matches").det();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_de7e);
        for _ in 0..probes {
            let c: Vec<i64> = (0..d).map(|_| rng.gen_range(-100..=100)).collect();
            if !det_at(&c).is_zero() {
                return Some(false);
            }
        }
        let side = self.n as u64 + 1;
        let total = side.checked_pow(d as u32).filter(|&t| t <= grid_cap)?;
        let nonzero = (0..total).into_par_iter().any(|mut idx| {
            let c: Vec<i64> = (0..d)
                .map(|_| {
                    let v = (idx % side) as i64;
                    idx /= side;
                    v
                })
                .collect();
            !det_at(&c).is_zero()
        });
        Some(!nonzero)
    }
}

impl Serialize for DerivationSpace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw {
            dim: usize,
            basis: Vec<Vec<Vec<Rational>>>,
        }
        Raw {
            dim: self.dim(),
            basis: self.basis.iter().map(crate::io::map_to_columns).collect(),
        }
        .serialize(s)
    }
}

/// Derivation space of the selected op, or of all ops jointly.
pub fn derivation_space(alg: &Algebra, op: Option<&str>) -> Result<DerivationSpace> {
    let ops = selected_ops(alg, op)?;
    let n = alg.dim();
    let system = leibniz_system(&ops);
    let basis = system
        .kernel_basis()
        .into_iter()
        .map(|v| LinearMap::new(Matrix::new(n, n, v.into_entries())?))
        .collect::<Result<Vec<_>>>()?;
    Ok(DerivationSpace { n, basis })
}

/// The four independently computed membership flags of an Inv-derivation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct InvDerVerdict {
    pub is_derivation: bool,
    pub is_invertible: bool,
    pub inverse_is_derivation: bool,
    pub square_condition: bool,
    pub accepted: bool,
}

impl InvDerVerdict {
    /// For an invertible derivation, the inverse is a derivation exactly
    /// when the square condition holds.
    pub fn is_consistent(&self) -> bool {
        !(self.is_derivation && self.is_invertible) || self.inverse_is_derivation == self.square_condition
    }
}

pub fn is_invder(delta: &LinearMap, alg: &Algebra) -> Result<InvDerVerdict> {
    is_invder_on(delta, alg, None)
}

/// Like [`is_invder`] but restricted to one op.
pub fn is_invder_on(delta: &LinearMap, alg: &Algebra, op: Option<&str>) -> Result<InvDerVerdict> {
    let is_derivation = is_derivation(delta, alg, op)?.holds;
    let inverse = delta.inverse().ok();
    let inverse_is_derivation = match &inverse {
        Some(inv) => is_derivation_of(inv, alg, op)?,
        None => false,
    };
    let square_condition = square_condition(delta, alg, op)?.holds;
    let is_invertible = inverse.is_some();
    Ok(InvDerVerdict {
        is_derivation,
        is_invertible,
        inverse_is_derivation,
        square_condition,
        accepted: is_derivation && is_invertible && inverse_is_derivation,
    })
}

fn is_derivation_of(map: &LinearMap, alg: &Algebra, op: Option<&str>) -> Result<bool> {
    Ok(first_failure(&selected_ops(alg, op)?, AxiomId::LeibnizInverse, map)?.holds)
}

/// An algebra with an Inv-derivation and its cached inverse.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvDerAlgebra {
    algebra: Algebra,
    delta: LinearMap,
    delta_inv: LinearMap,
}

impl InvDerAlgebra {
    pub fn new(algebra: Algebra, delta: LinearMap) -> Result<Self> {
        let verdict = is_invder(&delta, &algebra)?;
        if !verdict.accepted {
            return Err(Error::NotInvDer(describe_rejection(&verdict)));
        }
        let delta_inv = delta.inverse()?;
        Ok(InvDerAlgebra {
            algebra,
            delta,
            delta_inv,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn delta(&self) -> &LinearMap {
        &self.delta
    }

    pub fn delta_inv(&self) -> &LinearMap {
        &self.delta_inv
    }
}

/// Why a verdict was not accepted, for error messages.
pub fn describe_rejection(v: &InvDerVerdict) -> String {
    if !v.is_derivation {
        "map is not a derivation".into()
    } else if !v.is_invertible {
        "map is singular".into()
    } else {
        "inverse is not a derivation (square condition fails)".into()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SearchBounds {
    /// Coefficients are drawn from `[-range, range]`.
    pub range: i64,
    pub max_samples: usize,
    pub seed: u64,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            range: 3,
            max_samples: 10_000,
            seed: 0,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum SearchOutcome {
    Found {
        map: LinearMap,
        /// `None` when the identity map was accepted before sampling.
        sample_index: Option<usize>,
    },
    NotFound {
        certificate: Option<String>,
        samples_tried: usize,
    },
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&LinearMap> {
        match self {
            SearchOutcome::Found { map, .. } => Some(map),
            SearchOutcome::NotFound { .. } => None,
        }
    }
}

const DET_PROBES: usize = 200;
const DET_GRID_CAP: u64 = 100_000;
const CHUNK: usize = 256;

/// Samples the derivation space for an Inv-derivation.
pub fn invder_search(alg: &Algebra, op: Option<&str>, bounds: SearchBounds) -> Result<SearchOutcome> {
    if bounds.range < 0 {
        return input("search range must be nonnegative");
    }
    if bounds.max_samples == 0 {
        return input("max_samples must be at least 1");
    }
    let identity = LinearMap::identity(alg.dim());
    if is_derivation(&identity, alg, op)?.holds {
        return Ok(SearchOutcome::Found {
            map: identity,
            sample_index: None,
        });
    }
    let space = derivation_space(alg, op)?;
    if space.generic_determinant_vanishes(bounds.seed, DET_PROBES, DET_GRID_CAP) == Some(true) {
        return Ok(SearchOutcome::NotFound {
            certificate: Some(VANISHING_DETERMINANT.into()),
            samples_tried: 0,
        });
    }
    let ops = selected_ops(alg, op)?;
    let d = space.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    let mut start = 0;
    while start < bounds.max_samples {
        let len = CHUNK.min(bounds.max_samples - start);
        let draws: Vec<Vec<i64>> = (0..len)
            .map(|_| (0..d).map(|_| rng.gen_range(-bounds.range..=bounds.range)).collect())
            .collect();
        let hit = draws
            .par_iter()
            .enumerate()
            .filter_map(|(offset, c)| {
                let map = space.combination_ints(c).expect("length matches");
                if !map.is_invertible() {
                    return None;
                }
                let square = first_failure(&ops, AxiomId::SquareCondition, &map).ok()?;
                square.holds.then_some((offset, map))
            })
            .min_by_key(|(offset, _)| *offset);
        if let Some((offset, map)) = hit {
            return Ok(SearchOutcome::Found {
                map,
                sample_index: Some(start + offset),
            });
        }
        start += len;
    }
    Ok(SearchOutcome::NotFound {
        certificate: None,
        samples_tried: bounds.max_samples,
    })
}
