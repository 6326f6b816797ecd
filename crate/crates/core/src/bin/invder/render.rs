use std::fmt::Write as _;

use invder_core::constructions::ConstructionResult;
use invder_core::{Algebra, CheckReport, Rational, Vector};

/// `2*e3`, `e1 + 3*e2`, `-1/2*w`, `0`.
pub fn vector(v: &Vector, basis: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in v.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        let negative = *c < Rational::zero();
        let magnitude = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if magnitude.is_one() {
            out.push_str(name);
        } else {
            let _ = write!(out, "{magnitude}*{name}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Nonzero products, one per line. Skew ops list only `i < j`.
pub fn products(alg: &Algebra) -> String {
    let basis = alg.basis();
    let mut out = String::new();
    for (name, op) in alg.ops() {
        let skew = op.is_skew();
        let mut any = false;
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                if skew && j <= i {
                    continue;
                }
                let p = op.product(i, j);
                if p.is_zero() {
                    continue;
                }
                any = true;
                let _ = writeln!(out, "  {name}({}, {}) = {}", basis[i], basis[j], vector(&p, basis));
            }
        }
        if !any {
            let _ = writeln!(out, "  {name}: zero product");
        }
    }
    out
}

pub fn reports(reports: &[CheckReport]) -> String {
    reports.iter().map(|r| format!("{r}\n")).collect()
}

pub fn construction(result: &ConstructionResult) -> String {
    let alg = &result.algebra;
    let kind = alg.kind().map(|k| k.as_str()).unwrap_or("untyped");
    let mut out = format!("{} ({kind}, dim {})\n", alg.name(), alg.dim());
    out.push_str(&products(alg));
    out.push_str(&reports(&result.verification));
    for note in &result.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}
