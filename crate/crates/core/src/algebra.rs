//! Structure-constant algebras and linear maps on them.
//!
//! A [`BilinearOp`] stores `mu(e_i, e_j) = sum_k c_ij^k e_k` sparsely. A
//! [`LinearMap`] uses the column convention throughout: column `j` of its
//! matrix is the coordinate vector of the image of `e_j`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::exact::{Matrix, Rational, Vector};

/// One binary product on a based vector space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearOp {
    dim: usize,
    // (i, j) -> sorted list of (k, c_ij^k), no zero coefficients, no empty lists
    table: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
}

impl BilinearOp {
    pub fn zero(dim: usize) -> Self {
        BilinearOp {
            dim,
            table: BTreeMap::new(),
        }
    }

    /// Builds an op from `(i, j, k, c)` terms; repeated `(i, j, k)` terms add up.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Rational)>,
    {
        let mut dense: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
        for (i, j, k, c) in terms {
            if i >= dim || j >= dim || k >= dim {
                return input(format!("index ({i}, {j}, {k}) out of range for dimension {dim}"));
            }
            let v = dense.entry((i, j)).or_insert_with(|| Vector::zeros(dim));
            *v.get_mut(k) += &c;
        }
        let mut op = BilinearOp::zero(dim);
        for ((i, j), v) in dense {
            op.set_product(i, j, &v);
        }
        Ok(op)
    }

    /// Convenience for tests and the catalog: integer-coefficient terms.
    pub fn from_int_terms(dim: usize, terms: &[(usize, usize, usize, i64)]) -> Result<Self> {
        BilinearOp::from_terms(dim, terms.iter().map(|&(i, j, k, c)| (i, j, k, Rational::from(c))))
    }

    /// Skew-symmetric op from its `i < j` products; `(j, i)` is completed with the opposite sign.
    pub fn skew_from_int_terms(dim: usize, terms: &[(usize, usize, usize, i64)]) -> Result<Self> {
        let full = terms
            .iter()
            .flat_map(|&(i, j, k, c)| [(i, j, k, c), (j, i, k, -c)])
            .collect::<Vec<_>>();
        BilinearOp::from_int_terms(dim, &full)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Replaces `mu(e_i, e_j)` with `v`.
    pub(crate) fn set_product(&mut self, i: usize, j: usize, v: &Vector) {
        let sparse: Vec<(usize, Rational)> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect();
        if sparse.is_empty() {
            self.table.remove(&(i, j));
        } else {
            self.table.insert((i, j), sparse);
        }
    }

    /// Nonzero products in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Rational)])> {
        self.table.iter().map(|(&(i, j), v)| (i, j, v.as_slice()))
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> Rational {
        self.table
            .get(&(i, j))
            .and_then(|v| v.iter().find(|(kk, _)| *kk == k))
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    /// `mu(e_i, e_j)` as a dense vector.
    pub fn product(&self, i: usize, j: usize) -> Vector {
        let mut out = Vector::zeros(self.dim);
        if let Some(terms) = self.table.get(&(i, j)) {
            for (k, c) in terms {
                *out.get_mut(*k) = c.clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    /// `c_ij^k = -c_ji^k` for all indices.
    pub fn is_skew(&self) -> bool {
        self.entries().all(|(i, j, terms)| {
            i != j && {
                let other = self.table.get(&(j, i));
                other.is_some_and(|o| {
                    o.len() == terms.len()
                        && o.iter().zip(terms).all(|((k1, c1), (k2, c2))| k1 == k2 && *c1 == -c2)
                })
            }
        }) && self.table.keys().all(|&(i, j)| self.table.contains_key(&(j, i)))
    }

    fn check_dim(&self, n: usize, what: &str) -> Result<()> {
        if n != self.dim {
            return input(format!("{what} has dimension {n}, operation has dimension {}", self.dim));
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn eval(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.check_dim(x.len(), "left argument")?;
        self.check_dim(y.len(), "right argument")?;
        Ok(self.eval_unchecked(x, y))
    }

    pub(crate) fn eval_unchecked(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim);
        for (&(i, j), terms) in &self.table {
            let (xi, yj) = (&x[i], &y[j]);
            if xi.is_zero() || yj.is_zero() {
                continue;
            }
            let s = xi * yj;
            for (k, c) in terms {
                *out.get_mut(*k) += &(&s * c);
            }
        }
        out
    }

    /// `delta o mu`: every product is pushed through `delta`.
    pub fn twist(&self, delta: &LinearMap) -> Result<BilinearOp> {
        self.check_dim(delta.dim(), "map")?;
        let mut out = BilinearOp::zero(self.dim);
        for &(i, j) in self.table.keys() {
            out.set_product(i, j, &delta.apply_unchecked(&self.product(i, j)));
        }
        Ok(out)
    }

    /// `mu_op(x, y) = mu(y, x)`.
    pub fn opposite(&self) -> BilinearOp {
        BilinearOp {
            dim: self.dim,
            table: self.table.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect(),
        }
    }

    fn combine(&self, other: &BilinearOp, sign: &Rational) -> Result<BilinearOp> {
        self.check_dim(other.dim, "other operation")?;
        let mut out = self.clone();
        for &(i, j) in other.table.keys() {
            let mut v = out.product(i, j);
            v.add_scaled(sign, &other.product(i, j));
            out.set_product(i, j, &v);
        }
        Ok(out)
    }

    pub fn sum(&self, other: &BilinearOp) -> Result<BilinearOp> {
        self.combine(other, &Rational::one())
    }

    pub fn difference(&self, other: &BilinearOp) -> Result<BilinearOp> {
        self.combine(other, &-Rational::one())
    }

    pub fn scale(&self, r: &Rational) -> BilinearOp {
        if r.is_zero() {
            return BilinearOp::zero(self.dim);
        }
        BilinearOp {
            dim: self.dim,
            table: self
                .table
                .iter()
                .map(|(&key, v)| (key, v.iter().map(|(k, c)| (*k, c * r)).collect()))
                .collect(),
        }
    }

    /// `x * y = mu(L x, y)` for a linear map `L`, used by the Rota-Baxter
    /// and endomorphism passages.
    pub fn precompose_left(&self, map: &LinearMap) -> Result<BilinearOp> {
        self.check_dim(map.dim(), "map")?;
        let n = self.dim;
        let mut out = BilinearOp::zero(n);
        for i in 0..n {
            let li = map.image(i);
            if li.is_zero() {
                continue;
            }
            for j in 0..n {
                out.set_product(i, j, &self.eval_unchecked(&li, &Vector::basis(n, j)));
            }
        }
        Ok(out)
    }
}

/// Tag describing what structure an algebra is meant to carry. Purely
/// advisory: nothing trusts it without running the checks.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Lie,
    Prelie,
    Associative,
    Zinbiel,
    Dendriform,
}

impl Kind {
    pub const ALL: [Kind; 5] = [
        Kind::Lie,
        Kind::Prelie,
        Kind::Associative,
        Kind::Zinbiel,
        Kind::Dendriform,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Lie => "lie",
            Kind::Prelie => "prelie",
            Kind::Associative => "associative",
            Kind::Zinbiel => "zinbiel",
            Kind::Dendriform => "dendriform",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "lie" => Ok(Kind::Lie),
            "prelie" => Ok(Kind::Prelie),
            "associative" | "assoc" => Ok(Kind::Associative),
            "zinbiel" => Ok(Kind::Zinbiel),
            "dendriform" => Ok(Kind::Dendriform),
            _ => input(format!("unknown algebra kind {s:?}")),
        }
    }
}

pub const LEFT: &str = "left";
pub const RIGHT: &str = "right";

/// A based vector space with one or more named products.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Algebra {
    name: String,
    basis: Vec<String>,
    ops: BTreeMap<String, BilinearOp>,
    kind: Option<Kind>,
}

impl Algebra {
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        ops: BTreeMap<String, BilinearOp>,
        kind: Option<Kind>,
    ) -> Result<Self> {
        let n = basis.len();
        if n == 0 {
            return input("algebra dimension must be at least 1");
        }
        if ops.is_empty() {
            return input("algebra needs at least one operation");
        }
        if let Some((name, op)) = ops.iter().find(|(_, op)| op.dim() != n) {
            return input(format!("operation {name:?} has dimension {}, basis has {n}", op.dim()));
        }
        match kind {
            Some(Kind::Dendriform) => {
                if ops.len() != 2 || !ops.contains_key(LEFT) || !ops.contains_key(RIGHT) {
                    return input("dendriform algebras need exactly the ops \"left\" and \"right\"");
                }
            }
            Some(k) if ops.len() != 1 => {
                return input(format!("{k} algebras carry a single operation, found {}", ops.len()));
            }
            _ => {}
        }
        Ok(Algebra {
            name: name.into(),
            basis,
            ops,
            kind,
        })
    }

    /// Single-op algebra with basis `e1..en`.
    pub fn single(name: &str, op_name: &str, op: BilinearOp, kind: Option<Kind>) -> Result<Self> {
        let basis = default_basis(op.dim());
        Algebra::new(name, basis, BTreeMap::from([(op_name.to_string(), op)]), kind)
    }

    pub fn dendriform(name: &str, basis: Vec<String>, left: BilinearOp, right: BilinearOp) -> Result<Self> {
        Algebra::new(
            name,
            basis,
            BTreeMap::from([(LEFT.to_string(), left), (RIGHT.to_string(), right)]),
            Some(Kind::Dendriform),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn kind(&self) -> Option<Kind> {
        self.kind
    }

    pub fn ops(&self) -> &BTreeMap<String, BilinearOp> {
        &self.ops
    }

    pub fn op(&self, name: &str) -> Result<&BilinearOp> {
        self.ops
            .get(name)
            .ok_or_else(|| Error::Input(format!("algebra {:?} has no operation {name:?}", self.name)))
    }

    /// The op to use when none is named: the only one, if there is exactly one.
    pub fn default_op_name(&self) -> Result<&str> {
        match self.ops.len() {
            1 => Ok(self.ops.keys().next().unwrap()),
            _ => input(format!(
                "algebra {:?} has several operations; name one of {:?}",
                self.name,
                self.ops.keys().collect::<Vec<_>>()
            )),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_kind(mut self, kind: Option<Kind>) -> Result<Self> {
        Algebra::new(self.name, self.basis, std::mem::take(&mut self.ops), kind)
    }

    /// Same basis, new products.
    pub fn with_ops(&self, name: impl Into<String>, ops: BTreeMap<String, BilinearOp>, kind: Option<Kind>) -> Result<Self> {
        Algebra::new(name, self.basis.clone(), ops, kind)
    }

    fn check_map(&self, map: &LinearMap) -> Result<()> {
        if map.dim() != self.dim() {
            return input(format!(
                "map has dimension {}, algebra {:?} has dimension {}",
                map.dim(),
                self.name,
                self.dim()
            ));
        }
        Ok(())
    }

    /// Twists every operation by `delta`.
    pub fn twist(&self, delta: &LinearMap) -> Result<Algebra> {
        self.check_map(delta)?;
        let ops = self
            .ops
            .iter()
            .map(|(k, op)| Ok((k.clone(), op.twist(delta)?)))
            .collect::<Result<_>>()?;
        Algebra::new(format!("{}_twisted", self.name), self.basis.clone(), ops, self.kind)
    }

    pub(crate) fn ensure_map(&self, map: &LinearMap) -> Result<()> {
        self.check_map(map)
    }
}

pub fn default_basis(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

/// Square matrix acting on coordinates, column `j` = image of `e_j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() == 0 {
            return input(format!(
                "linear map needs a nonempty square matrix, got {}x{}",
                matrix.rows(),
                matrix.cols()
            ));
        }
        Ok(LinearMap { matrix })
    }

    pub fn identity(n: usize) -> Self {
        LinearMap {
            matrix: Matrix::identity(n),
        }
    }

    pub fn zero(n: usize) -> Self {
        LinearMap {
            matrix: Matrix::zeros(n, n),
        }
    }

    /// `columns[j]` is the image of `e_j`.
    pub fn from_columns(columns: &[Vector]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != columns.len()) {
            return input("linear map columns must form a square matrix");
        }
        LinearMap::new(Matrix::from_columns(columns)?)
    }

    pub fn from_int_columns(columns: &[&[i64]]) -> Result<Self> {
        let cols: Vec<Vector> = columns.iter().map(|c| Vector::from_integers(c)).collect();
        LinearMap::from_columns(&cols)
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, x) in entries.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        LinearMap { matrix: m }
    }

    pub fn diagonal_ints(entries: &[i64]) -> Self {
        LinearMap::diagonal(&entries.iter().map(|&x| Rational::from(x)).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Image of the `j`-th basis vector.
    pub fn image(&self, j: usize) -> Vector {
        self.matrix.column(j)
    }

    pub fn columns(&self) -> Vec<Vector> {
        self.matrix.columns()
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        self.matrix.mul_vec(x)
    }

    pub(crate) fn apply_unchecked(&self, x: &Vector) -> Vector {
        self.matrix.mul_vec_unchecked(x)
    }

    /// `self o other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(LinearMap {
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    pub fn square(&self) -> LinearMap {
        self.compose(self).expect("square matrix")
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        Ok(LinearMap {
            matrix: self.matrix.invert()?,
        })
    }

    pub fn det(&self) -> Rational {
        self.matrix.det().expect("square matrix")
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    /// `self o other - other o self`.
    pub fn commutator(&self, other: &LinearMap) -> Result<LinearMap> {
        let ab = self.matrix.mul(&other.matrix)?;
        let ba = other.matrix.mul(&self.matrix)?;
        Ok(LinearMap {
            matrix: ab.try_sub(&ba)?,
        })
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(LinearMap {
            matrix: self.matrix.try_add(&other.matrix)?,
        })
    }

    pub fn scaled(&self, s: &Rational) -> LinearMap {
        LinearMap {
            matrix: self.matrix.scaled(s),
        }
    }

    /// `x -> mu(x0, x)`: the left multiplication (inner derivation for a Lie bracket).
    pub fn left_multiplication(op: &BilinearOp, x0: &Vector) -> Result<LinearMap> {
        let n = op.dim();
        let cols = (0..n)
            .map(|j| op.eval(x0, &Vector::basis(n, j)))
            .collect::<Result<Vec<_>>>()?;
        LinearMap::from_columns(&cols)
    }
}

/// Serialized as an array of columns.
impl Serialize for LinearMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::io::map_to_columns(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinearMap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let columns = Vec::<Vec<Rational>>::deserialize(d)?;
        let n = columns.len();
        crate::io::map_from_columns(columns, n, "map").map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matrix.fmt(f)
    }
}
