//! JSON algebra files.
//!
//! ```json
//! {
//!   "name": "heisenberg3",
//!   "dimension": 3,
//!   "basis": ["e1","e2","e3"],
//!   "kind": "lie",
//!   "operations": {
//!     "bracket": { "skew": true, "table": [ {"i":0,"j":1,"v":[["1",2]]} ] }
//!   },
//!   "maps": { "delta": [ ["1","3","0"], ["-1","1","0"], ["0","0","2"] ] }
//! }
//! ```
//!
//! `v` lists `[coefficient, k]` pairs. Each map is an array of columns.
//! With `"skew": true` only one of `(i, j)` / `(j, i)` is listed and the
//! other is completed with the opposite sign.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, BilinearOp, Kind, LinearMap};
use crate::error::{input, Error, Result};
use crate::exact::{Rational, Vector};

/// An algebra together with the named linear maps shipped alongside it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraFile {
    pub algebra: Algebra,
    pub maps: BTreeMap<String, LinearMap>,
}

impl AlgebraFile {
    pub fn new(algebra: Algebra) -> Self {
        AlgebraFile {
            algebra,
            maps: BTreeMap::new(),
        }
    }

    pub fn map(&self, name: &str) -> Result<&LinearMap> {
        self.maps.get(name).ok_or_else(|| {
            Error::Input(format!(
                "file for {:?} has no map {name:?} (available: {:?})",
                self.algebra.name(),
                self.maps.keys().collect::<Vec<_>>()
            ))
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawFile =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed algebra file: {e}")))?;
        raw.into_file()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("algebra file serializes")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        AlgebraFile::from_json(&text)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json() + "\n")
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))
    }

    pub(crate) fn to_raw(&self) -> RawFile {
        let alg = &self.algebra;
        RawFile {
            name: alg.name().to_string(),
            dimension: alg.dim(),
            basis: alg.basis().to_vec(),
            kind: alg.kind(),
            operations: alg.ops().iter().map(|(k, op)| (k.clone(), RawOp::from_op(op))).collect(),
            maps: self.maps.iter().map(|(k, m)| (k.clone(), map_to_columns(m))).collect(),
        }
    }
}

pub(crate) fn map_to_columns(map: &LinearMap) -> Vec<Vec<Rational>> {
    map.columns().into_iter().map(Vector::into_entries).collect()
}

pub(crate) fn map_from_columns(columns: Vec<Vec<Rational>>, n: usize, name: &str) -> Result<LinearMap> {
    if columns.len() != n || columns.iter().any(|c| c.len() != n) {
        return input(format!("map {name:?} must be {n} columns of length {n}"));
    }
    let cols: Vec<Vector> = columns.into_iter().map(Vector::new).collect();
    LinearMap::from_columns(&cols)
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawFile {
    name: String,
    dimension: usize,
    basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kind: Option<Kind>,
    operations: BTreeMap<String, RawOp>,
    #[serde(default)]
    maps: BTreeMap<String, Vec<Vec<Rational>>>,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawOp {
    #[serde(default)]
    skew: bool,
    table: Vec<RawEntry>,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawEntry {
    i: usize,
    j: usize,
    v: Vec<(Rational, usize)>,
}

impl RawOp {
    fn from_op(op: &BilinearOp) -> RawOp {
        let skew = op.is_skew() && !op.is_zero();
        let table = op
            .entries()
            .filter(|(i, j, _)| !skew || i < j)
            .map(|(i, j, terms)| RawEntry {
                i,
                j,
                v: terms.iter().map(|(k, c)| (c.clone(), *k)).collect(),
            })
            .collect();
        RawOp { skew, table }
    }

    fn into_op(self, n: usize, name: &str) -> Result<BilinearOp> {
        let mut seen = BTreeSet::new();
        let mut terms = Vec::new();
        for RawEntry { i, j, v } in self.table {
            if i >= n || j >= n {
                return input(format!("op {name:?}: pair ({i}, {j}) out of range for dimension {n}"));
            }
            let mut ks = BTreeSet::new();
            for (_, k) in &v {
                if *k >= n {
                    return input(format!("op {name:?}: basis index {k} out of range"));
                }
                if !ks.insert(*k) {
                    return input(format!("op {name:?}: index {k} repeated in entry ({i}, {j})"));
                }
            }
            if !seen.insert((i, j)) {
                return input(format!("op {name:?}: duplicate entry ({i}, {j})"));
            }
            if self.skew {
                if i == j && v.iter().any(|(c, _)| !c.is_zero()) {
                    return input(format!("op {name:?}: skew op has nonzero diagonal entry ({i}, {i})"));
                }
                if i != j && !seen.insert((j, i)) {
                    return input(format!("op {name:?}: skew op lists both ({i}, {j}) and ({j}, {i})"));
                }
                for (c, k) in &v {
                    if i != j {
                        terms.push((j, i, *k, -c));
                    }
                }
            }
            terms.extend(v.into_iter().map(|(c, k)| (i, j, k, c)));
        }
        BilinearOp::from_terms(n, terms)
    }
}

impl RawFile {
    fn into_file(self) -> Result<AlgebraFile> {
        let n = self.dimension;
        if n == 0 {
            return input("dimension must be at least 1");
        }
        if self.basis.len() != n {
            return input(format!("basis has {} names, dimension is {n}", self.basis.len()));
        }
        let ops = self
            .operations
            .into_iter()
            .map(|(name, op)| {
                let op = op.into_op(n, &name)?;
                Ok((name, op))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        let algebra = Algebra::new(self.name, self.basis, ops, self.kind)?;
        let maps = self
            .maps
            .into_iter()
            .map(|(name, cols)| {
                let m = map_from_columns(cols, n, &name)?;
                Ok((name, m))
            })
            .collect::<Result<_>>()?;
        Ok(AlgebraFile { algebra, maps })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEIS: &str = r#"{
      "name": "heisenberg3",
      "dimension": 3,
      "basis": ["e1","e2","e3"],
      "operations": {
        "bracket": { "skew": true, "table": [ {"i":0,"j":1,"v":[["1",2]]} ] }
      },
      "maps": { "delta": [ ["1","3","0"], ["-1","1","0"], ["0","0","2"] ] }
    }"#;

    #[test]
    fn parses_documented_example() {
        let f = AlgebraFile::from_json(HEIS).unwrap();
        let op = f.algebra.op("bracket").unwrap();
        assert_eq!(op.product(0, 1), Vector::from_integers(&[0, 0, 1]));
        assert_eq!(op.product(1, 0), Vector::from_integers(&[0, 0, -1]));
        assert_eq!(f.map("delta").unwrap().image(0), Vector::from_integers(&[1, 3, 0]));
    }

    #[test]
    fn round_trip() {
        let f = AlgebraFile::from_json(HEIS).unwrap();
        let again = AlgebraFile::from_json(&f.to_json()).unwrap();
        assert_eq!(f, again);
        assert_eq!(f.to_json(), again.to_json());
    }

    fn with_ops(ops: &str) -> String {
        format!(r#"{{"name":"x","dimension":2,"basis":["a","b"],"operations":{ops}}}"#)
    }

    #[test]
    fn rejects_duplicates() {
        let dup = with_ops(r#"{"m":{"table":[{"i":0,"j":1,"v":[["1",0]]},{"i":0,"j":1,"v":[["2",0]]}]}}"#);
        assert!(matches!(AlgebraFile::from_json(&dup), Err(Error::Input(_))));
        let skew_both = with_ops(
            r#"{"m":{"skew":true,"table":[{"i":0,"j":1,"v":[["1",0]]},{"i":1,"j":0,"v":[["-1",0]]}]}}"#,
        );
        assert!(AlgebraFile::from_json(&skew_both).is_err());
        let repeated_k = with_ops(r#"{"m":{"table":[{"i":0,"j":1,"v":[["1",0],["1",0]]}]}}"#);
        assert!(AlgebraFile::from_json(&repeated_k).is_err());
    }

    #[test]
    fn rejects_bad_shapes() {
        let zero_dim = r#"{"name":"x","dimension":0,"basis":[],"operations":{}}"#;
        assert!(AlgebraFile::from_json(zero_dim).is_err());
        let out_of_range = with_ops(r#"{"m":{"table":[{"i":0,"j":2,"v":[["1",0]]}]}}"#);
        assert!(AlgebraFile::from_json(&out_of_range).is_err());
        let bad_coeff = with_ops(r#"{"m":{"table":[{"i":0,"j":1,"v":[["1.5",0]]}]}}"#);
        assert!(AlgebraFile::from_json(&bad_coeff).is_err());
        let skew_diag = with_ops(r#"{"m":{"skew":true,"table":[{"i":1,"j":1,"v":[["1",0]]}]}}"#);
        assert!(AlgebraFile::from_json(&skew_diag).is_err());
        assert!(AlgebraFile::from_json("{not json").is_err());
        let bad_map = r#"{"name":"x","dimension":1,"basis":["a"],"operations":{"m":{"table":[]}},"maps":{"d":[["1","2"]]}}"#;
        assert!(AlgebraFile::from_json(bad_map).is_err());
    }

    #[test]
    fn non_skew_ops_keep_every_pair() {
        let text = with_ops(r#"{"m":{"table":[{"i":0,"j":1,"v":[["1/2",1]]},{"i":1,"j":0,"v":[["3",0]]}]}}"#);
        let f = AlgebraFile::from_json(&text).unwrap();
        assert_eq!(f.algebra.op("m").unwrap().coefficient(0, 1, 1), "1/2".parse().unwrap());
        assert_eq!(AlgebraFile::from_json(&f.to_json()).unwrap(), f);
    }
}
