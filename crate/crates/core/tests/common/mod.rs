//! Test-side oracle: dense structure-constant arrays over `BigRational`,
//! with every identity written out directly on full vectors.

#![allow(dead_code, clippy::needless_range_loop, clippy::type_complexity)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use invder_core::{AxiomId, BilinearOp, LinearMap, Rational};

pub type Q = BigRational;
pub type V = Vec<Q>;

pub fn q(r: &Rational) -> Q {
    BigRational::new(r.numer().clone(), r.denom().clone())
}

pub fn qi(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn to_q(v: &invder_core::Vector) -> V {
    v.iter().map(q).collect()
}

/// `c[(i*n + j)*n + k]` is the coefficient of `e_k` in `e_i e_j`.
#[derive(Clone)]
pub struct Dense {
    pub n: usize,
    c: Vec<Q>,
}

impl Dense {
    pub fn from_op(op: &BilinearOp) -> Self {
        let n = op.dim();
        let mut c = vec![Q::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c[(i * n + j) * n + k] = q(&op.coefficient(i, j, k));
                }
            }
        }
        Dense { n, c }
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> V {
        let n = self.n;
        let mut out = vec![Q::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let s = &x[i] * &y[j];
                for k in 0..n {
                    let c = &self.c[(i * n + j) * n + k];
                    if !c.is_zero() {
                        out[k] += &s * c;
                    }
                }
            }
        }
        out
    }
}

/// Row-major; column `j` is the image of `e_j`.
#[derive(Clone)]
pub struct Mat {
    pub n: usize,
    m: Vec<Q>,
}

impl Mat {
    pub fn from_map(map: &LinearMap) -> Self {
        let n = map.dim();
        let mut m = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                m.push(q(map.matrix().get(r, c)));
            }
        }
        Mat { n, m }
    }

    pub fn apply(&self, x: &[Q]) -> V {
        (0..self.n)
            .map(|r| (0..self.n).fold(Q::zero(), |acc, c| acc + &self.m[r * self.n + c] * &x[c]))
            .collect()
    }
}

pub fn add(a: &[Q], b: &[Q]) -> V {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> V {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(s: &Q, a: &[Q]) -> V {
    a.iter().map(|x| s * x).collect()
}

pub fn neg(a: &[Q]) -> V {
    a.iter().map(|x| -x).collect()
}

pub fn zero(n: usize) -> V {
    vec![Q::zero(); n]
}

pub fn basis(n: usize, i: usize) -> V {
    let mut v = zero(n);
    v[i] = Q::one();
    v
}

pub fn random_vector(rng: &mut impl Rng, n: usize, range: i64) -> V {
    (0..n).map(|_| qi(rng.gen_range(-range..=range))).collect()
}

pub enum Ops<'a> {
    Single(&'a Dense),
    Pair { left: &'a Dense, right: &'a Dense },
}

/// Both sides of `axiom`, computed from scratch.
pub fn sides(axiom: AxiomId, ops: &Ops, map: Option<&Mat>, weight: &Q, a: &[V]) -> (V, V) {
    let d = |v: &[Q]| map.expect("identity needs a map").apply(v);
    let x = &a[0];
    let y = &a[1];
    let z = a.get(2);
    let zz = || z.expect("ternary");
    match ops {
        Ops::Pair { left, right } => {
            let l = |p: &[Q], r: &[Q]| left.mul(p, r);
            let r = |p: &[Q], s: &[Q]| right.mul(p, s);
            let s = |p: &[Q], t: &[Q]| add(&l(p, t), &r(p, t));
            let z = zz();
            match axiom {
                AxiomId::Dendriform1 => (l(&l(x, y), z), l(x, &s(y, z))),
                AxiomId::Dendriform2 => (l(&r(x, y), z), r(x, &l(y, z))),
                AxiomId::Dendriform3 => (r(x, &r(y, z)), r(&s(x, y), z)),
                AxiomId::InvderDend47 => (l(&l(x, y), &d(z)), l(&d(x), &s(y, z))),
                AxiomId::InvderDend48 => (l(&r(x, y), &d(z)), r(&d(x), &l(y, z))),
                AxiomId::InvderDend49 => (r(&d(x), &r(y, z)), r(&s(x, y), &d(z))),
                other => panic!("{other} is not a dendriform identity"),
            }
        }
        Ops::Single(op) => {
            let m = |p: &[Q], r: &[Q]| op.mul(p, r);
            let n = op.n;
            match axiom {
                AxiomId::SkewSymmetry => (add(&m(x, y), &m(y, x)), zero(n)),
                AxiomId::Commutativity => (m(x, y), m(y, x)),
                AxiomId::Leibniz | AxiomId::LeibnizInverse => (d(&m(x, y)), add(&m(&d(x), y), &m(x, &d(y)))),
                AxiomId::SquareCondition => (m(&d(x), &d(y)), d(&d(&m(x, y)))),
                AxiomId::RotaBaxter => {
                    let (rx, ry) = (d(x), d(y));
                    let inner = add(&add(&m(&rx, y), &m(x, &ry)), &scale(weight, &m(x, y)));
                    (m(&rx, &ry), d(&inner))
                }
                AxiomId::Jacobi => {
                    let z = zz();
                    (add(&add(&m(x, &m(y, z)), &m(y, &m(z, x))), &m(z, &m(x, y))), zero(n))
                }
                AxiomId::Associativity => {
                    let z = zz();
                    (m(&m(x, y), z), m(x, &m(y, z)))
                }
                AxiomId::PreLie => {
                    // associator symmetric in its first two slots
                    let z = zz();
                    let assoc = |p: &[Q], r: &[Q]| sub(&m(&m(p, r), z), &m(p, &m(r, z)));
                    (assoc(x, y), assoc(y, x))
                }
                AxiomId::Zinbiel => {
                    let z = zz();
                    (m(x, &m(y, z)), m(&add(&m(x, y), &m(y, x)), z))
                }
                AxiomId::InvderJacobi => {
                    let z = zz();
                    (
                        add(&add(&m(&d(x), &m(y, z)), &m(&d(y), &m(z, x))), &m(&d(z), &m(x, y))),
                        zero(n),
                    )
                }
                AxiomId::InvderPrelie => {
                    let z = zz();
                    let dz = d(z);
                    let f = |p: &[Q], r: &[Q]| sub(&m(&d(p), &m(r, z)), &m(&m(p, r), &dz));
                    (f(x, y), f(y, x))
                }
                AxiomId::InvderAssoc => {
                    let z = zz();
                    (m(&d(x), &m(y, z)), m(&m(x, y), &d(z)))
                }
                AxiomId::InvderZinbiel => {
                    let z = zz();
                    (m(&d(x), &m(y, z)), m(&add(&m(x, y), &m(y, x)), &d(z)))
                }
                AxiomId::ZinbielAux44 => {
                    let z = zz();
                    (m(&d(x), &m(z, y)), m(&d(z), &m(x, y)))
                }
                AxiomId::ZinbielAux45 => {
                    let z = zz();
                    (m(&m(x, y), &d(z)), m(&m(x, z), &d(y)))
                }
                AxiomId::Identity25 => {
                    let z = zz();
                    let cyc = |f: &dyn Fn(&[Q], &[Q], &[Q]) -> V| add(&add(&f(x, y, z), &f(y, z, x)), &f(z, x, y));
                    (cyc(&|p, r, s| m(p, &d(&m(r, s)))), cyc(&|p, r, s| m(&d(p), &m(r, s))))
                }
                other => panic!("{other} needs the dendriform pair"),
            }
        }
    }
}

/// Verdict on every basis tuple, with no shortcuts.
pub fn holds_on_basis(axiom: AxiomId, ops: &Ops, map: Option<&Mat>, weight: &Q, n: usize) -> bool {
    let arity = axiom.arity();
    let total = n.pow(arity as u32);
    (0..total).all(|mut t| {
        let mut args = Vec::with_capacity(arity);
        for _ in 0..arity {
            args.push(basis(n, t % n));
            t /= n;
        }
        let (l, r) = sides(axiom, ops, map, weight, &args);
        l == r
    })
}

/// Verdict on `trials` random full-vector tuples.
pub fn holds_on_random(
    axiom: AxiomId,
    ops: &Ops,
    map: Option<&Mat>,
    weight: &Q,
    n: usize,
    trials: usize,
    rng: &mut impl Rng,
) -> bool {
    let mut ok = true;
    for _ in 0..trials {
        let args: Vec<V> = (0..axiom.arity()).map(|_| random_vector(rng, n, 5)).collect();
        let (l, r) = sides(axiom, ops, map, weight, &args);
        ok &= l == r;
    }
    ok
}

/// Rank by plain Gaussian elimination.
pub fn rank(mut rows: Vec<V>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                let pr = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// `dim Der` from the Leibniz rule written out on basis pairs, one row per
/// (op, i, j, output coordinate); unknowns are the `n*n` matrix entries.
pub fn derivation_dim(ops: &[&Dense]) -> usize {
    let n = ops[0].n;
    let mut rows = Vec::new();
    for op in ops {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    // D(e_i e_j)_k - (D e_i) e_j |_k - e_i (D e_j) |_k
                    let mut row = zero(n * n);
                    for unknown in 0..n * n {
                        let (r, c) = (unknown / n, unknown % n);
                        let mut d = Mat { n, m: zero(n * n) };
                        d.m[unknown] = Q::one();
                        let (ei, ej) = (basis(n, i), basis(n, j));
                        let lhs = d.apply(&op.mul(&ei, &ej));
                        let rhs = add(&op.mul(&d.apply(&ei), &ej), &op.mul(&ei, &d.apply(&ej)));
                        row[r * n + c] = &lhs[k] - &rhs[k];
                    }
                    rows.push(row);
                }
            }
        }
    }
    n * n - rank(rows)
}
