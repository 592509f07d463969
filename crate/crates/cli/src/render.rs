//! Text rendering of scalars, vectors and subspaces.

use num_traits::{Signed, Zero};
use orthoql::report::Witness;
use orthoql::{Field, Rational, Scalar, Subspace, Vector};
use serde::Serialize;

/// `3`, `-1/2`, `1/2+3i`, `-i`: the shortest readable form.
pub fn scalar(z: &Scalar) -> String {
    let short = |r: &Rational| if r.is_integer() { r.numer().to_string() } else { format!("{}/{}", r.numer(), r.denom()) };
    if z.is_real() {
        return short(z.re());
    }
    let im = z.im();
    let mag = short(&im.abs());
    let mag = if mag == "1" { String::new() } else { mag };
    let sign = if im.is_negative() { "-" } else { "+" };
    if z.re().is_zero() {
        let sign = if sign == "-" { "-" } else { "" };
        format!("{sign}{mag}i")
    } else {
        format!("{}{sign}{mag}i", short(z.re()))
    }
}

pub fn vector(v: &Vector) -> String {
    let parts: Vec<String> = v.entries().iter().map(scalar).collect();
    format!("({})", parts.join(", "))
}

/// Re-renders canonical scalar strings; falls back to the raw text.
fn encoded(entries: &[String]) -> String {
    let parts: Vec<String> = entries.iter().map(|s| s.parse::<Scalar>().map(|z| scalar(&z)).unwrap_or_else(|_| s.clone())).collect();
    format!("({})", parts.join(", "))
}

pub fn basis(s: &Subspace) -> String {
    let parts: Vec<String> = s.basis_vectors().iter().map(vector).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn witness(w: &Witness) -> String {
    let mut out = w.description.clone();
    for v in &w.vectors {
        out.push_str(&format!("; {} = {}", v.name, encoded(&v.entries)));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubspaceOut {
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

impl SubspaceOut {
    pub fn of(s: &Subspace, field: Field) -> Self {
        Self { dim: s.dim(), basis: s.basis_vectors().iter().map(|v| v.encode(field)).collect() }
    }
}
