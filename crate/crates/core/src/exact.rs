//! Exact rational scalars, vectors and matrices.
//!
//! Everything here is exact: there is no tolerance anywhere. Matrices are
//! stored row-major; the column convention for linear maps lives in
//! [`crate::algebra::LinearMap`].

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Index, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{input, Error, Result};

/// Arbitrary-precision fraction in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`, reduced. Fails on a zero denominator.
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return input("zero denominator");
        }
        Ok(Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom))))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Singular);
        }
        Ok(Rational(self.0.recip()))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p` or `p/q` with an optional leading `-` on `p` only.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Input(format!("malformed rational {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((p, q)) => (p, Some(q)),
            None => (s, None),
        };
        let unsigned = num.strip_prefix('-').unwrap_or(num);
        if !is_digits(unsigned) {
            return Err(bad());
        }
        let numer: BigInt = num.parse().map_err(|_| bad())?;
        let denom: BigInt = match den {
            Some(q) if is_digits(q) => q.parse().map_err(|_| bad())?,
            Some(_) => return Err(bad()),
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return input(format!("zero denominator in {s:?}"));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on division by zero, like the underlying type; callers that can
// see a zero divisor go through `recip`.
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// Fixed-length coordinate vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Vector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![Rational::zero(); n])
    }

    /// The `i`-th standard basis vector of length `n`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Vector::zeros(n);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_integers(entries: &[i64]) -> Self {
        Vector(entries.iter().map(|&x| Rational::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn get_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    /// Adds `scale * other` in place.
    pub fn add_scaled(&mut self, scale: &Rational, other: &Vector) {
        debug_assert_eq!(self.len(), other.len());
        if scale.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += &(scale * b);
            }
        }
    }

    pub fn scaled(&self, scale: &Rational) -> Vector {
        Vector(self.0.iter().map(|x| x * scale).collect())
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    fn check_len(&self, other: &Vector) -> Result<()> {
        if self.len() != other.len() {
            return input(format!(
                "vector length mismatch: {} vs {}",
                self.len(),
                other.len()
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Vector) -> Result<Vector> {
        self.check_len(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Vector) -> Result<Vector> {
        self.check_len(other)?;
        Ok(self - other)
    }
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl<'a> IntoIterator for &'a Vector {
    type Item = &'a Rational;
    type IntoIter = std::slice::Iter<'a, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Dense `rows x cols` rational matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Solution of `A x = b`: `particular + span(kernel_basis)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolutionSet {
    pub particular: Vector,
    pub kernel_basis: Vec<Vector>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Solve {
    Solution(SolutionSet),
    NoSolution,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return input(format!(
                "matrix {rows}x{cols} needs {} entries, got {}",
                rows * cols,
                data.len()
            ));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return input("ragged matrix rows");
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_integer_rows(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vector]) -> Result<Self> {
        let c = columns.len();
        let r = columns.first().map_or(0, Vector::len);
        if columns.iter().any(|col| col.len() != r) {
            return input("ragged matrix columns");
        }
        let mut m = Matrix::zeros(r, c);
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector::new((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &Vector) -> Result<Vector> {
        if x.len() != self.cols {
            return input(format!(
                "cannot apply {}x{} matrix to vector of length {}",
                self.rows,
                self.cols,
                x.len()
            ));
        }
        Ok(self.mul_vec_unchecked(x))
    }

    pub(crate) fn mul_vec_unchecked(&self, x: &Vector) -> Vector {
        let mut out = Vector::zeros(self.rows);
        for (c, xc) in x.iter().enumerate() {
            if xc.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *out.get_mut(r) += &(a * xc);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return input(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { data, ..*self })
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix { data, ..*self })
    }

    pub fn scaled(&self, s: &Rational) -> Matrix {
        Matrix {
            data: self.data.iter().map(|a| a * s).collect(),
            ..*self
        }
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return input(format!(
                "shape mismatch: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        Ok(())
    }

    /// Gauss-Jordan elimination to reduced row echelon form. Pivots are
    /// chosen leftmost-first, taking the first nonzero entry in the column.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip().expect("nonzero pivot");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let sub = &factor * m.get(row, c);
                    if !sub.is_zero() {
                        let idx = r * m.cols + c;
                        m.data[idx] -= &sub;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Canonical kernel basis: one vector per free column in ascending
    /// order, with that free variable set to 1 and the others to 0.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let Rref { matrix, pivots } = self.rref();
        kernel_from_rref(&matrix, &pivots, self.cols)
    }

    /// Solves `self * x = b`. The particular solution has every free
    /// variable set to zero.
    pub fn solve(&self, b: &Vector) -> Result<Solve> {
        if b.len() != self.rows {
            return input(format!(
                "right-hand side has length {}, matrix has {} rows",
                b.len(),
                self.rows
            ));
        }
        let n = self.cols;
        let mut aug = Matrix::zeros(self.rows, n + 1);
        for r in 0..self.rows {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n, b[r].clone());
        }
        let Rref { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&n) {
            return Ok(Solve::NoSolution);
        }
        let mut particular = Vector::zeros(n);
        for (r, &p) in pivots.iter().enumerate() {
            *particular.get_mut(p) = matrix.get(r, n).clone();
        }
        Ok(Solve::Solution(SolutionSet {
            particular,
            kernel_basis: kernel_from_rref(&matrix, &pivots, n),
        }))
    }

    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return input(format!("det of non-square {}x{} matrix", self.rows, self.cols));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            let inv = pivot.recip()?;
            for r in col + 1..n {
                let factor = m.get(r, col) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let sub = &factor * m.get(col, c);
                    if !sub.is_zero() {
                        let idx = r * n + c;
                        m.data[idx] -= &sub;
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn invert(&self) -> Result<Matrix> {
        if !self.is_square() {
            return input(format!("cannot invert non-square {}x{} matrix", self.rows, self.cols));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Rational::one());
        }
        let Rref { matrix, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, matrix.get(r, n + c).clone());
            }
        }
        Ok(inv)
    }
}

fn kernel_from_rref(rref: &Matrix, pivots: &[usize], n: usize) -> Vec<Vector> {
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        if p < n {
            is_pivot[p] = true;
        }
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = Vector::zeros(n);
            *v.get_mut(f) = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                if p < n {
                    *v.get_mut(p) = -rref.get(r, f);
                }
            }
            v
        })
        .collect()
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
