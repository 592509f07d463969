//! Brute-force reference implementation used as a test oracle.
//!
//! Subspaces are kept as plain generator lists; equality and order are
//! decided by rank counts, meets by `(L^⊥ + M^⊥)^⊥`, projections by
//! Gram–Schmidt. Nothing here calls into the library except to convert
//! data in and out.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use orthoql::{Field, OrthoSubspace, PartialOperator, Scalar, Subspace, Vector};

pub type Q = BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C {
    pub re: Q,
    pub im: Q,
}

impl C {
    pub fn zero() -> Self {
        C { re: Q::zero(), im: Q::zero() }
    }
    pub fn one() -> Self {
        C { re: Q::one(), im: Q::zero() }
    }
    pub fn int(n: i64) -> Self {
        C { re: Q::from_integer(BigInt::from(n)), im: Q::zero() }
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn add(&self, o: &C) -> C {
        C { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    pub fn sub(&self, o: &C) -> C {
        C { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    pub fn mul(&self, o: &C) -> C {
        C { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
    pub fn conj(&self) -> C {
        C { re: self.re.clone(), im: -self.im.clone() }
    }
    pub fn abs2(&self) -> Q {
        &self.re * &self.re + &self.im * &self.im
    }
    pub fn inv(&self) -> C {
        let d = self.abs2();
        C { re: &self.re / &d, im: -(&self.im / &d) }
    }
    pub fn div(&self, o: &C) -> C {
        self.mul(&o.inv())
    }
}

pub type V = Vec<C>;

pub fn vadd(a: &V, b: &V) -> V {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}
pub fn vsub(a: &V, b: &V) -> V {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}
pub fn vscale(k: &C, a: &V) -> V {
    a.iter().map(|x| k.mul(x)).collect()
}
pub fn vzero(n: usize) -> V {
    vec![C::zero(); n]
}
pub fn is_zero(a: &V) -> bool {
    a.iter().all(C::is_zero)
}
/// `⟨a, b⟩ = Σ aᵢ·conj(bᵢ)`.
pub fn inner(a: &V, b: &V) -> C {
    a.iter().zip(b).fold(C::zero(), |acc, (x, y)| acc.add(&x.mul(&y.conj())))
}
pub fn norm2(a: &V) -> Q {
    a.iter().map(C::abs2).fold(Q::zero(), |s, x| s + x)
}

/// Row echelon elimination, returning the nonzero reduced rows.
fn echelon(rows: &[V]) -> Vec<V> {
    let mut m: Vec<V> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    for c in 0..cols {
        let Some(p) = m.iter().position(|r| !r[c].is_zero()) else { continue };
        let pivot = m.remove(p);
        for r in m.iter_mut() {
            if !r[c].is_zero() {
                let f = r[c].div(&pivot[c]);
                *r = vsub(r, &vscale(&f, &pivot));
            }
        }
        out.push(pivot);
    }
    out
}

pub fn rank(rows: &[V]) -> usize {
    echelon(rows).len()
}

/// A basis of `{x : Σⱼ rows[i][j]·xⱼ = 0 ∀i}` by back substitution.
pub fn kernel(rows: &[V], n: usize) -> Vec<V> {
    let mut m: Vec<V> = rows.to_vec();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv();
        m[r] = vscale(&inv, &m[r]);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                m[i] = vsub(&m[i], &vscale(&f, &m[r]));
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivot_cols.contains(c)) {
        let mut x = vzero(n);
        x[free] = C::one();
        for &(row, c) in &pivots {
            x[c] = C::zero().sub(&m[row][free]);
        }
        out.push(x);
    }
    out
}

#[derive(Clone, Debug)]
pub struct OSub {
    pub n: usize,
    pub gens: Vec<V>,
}

impl OSub {
    pub fn new(n: usize, gens: Vec<V>) -> Self {
        let gens = gens.into_iter().filter(|g| !is_zero(g)).collect();
        OSub { n, gens }
    }
    pub fn zero(n: usize) -> Self {
        OSub { n, gens: Vec::new() }
    }
    pub fn whole(n: usize) -> Self {
        OSub::new(n, (0..n).map(|k| unit(n, k)).collect())
    }
    pub fn dim(&self) -> usize {
        rank(&self.gens)
    }
    pub fn contains(&self, x: &V) -> bool {
        let mut g = self.gens.clone();
        g.push(x.clone());
        rank(&g) == self.dim()
    }
    pub fn leq(&self, other: &OSub) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }
    pub fn same(&self, other: &OSub) -> bool {
        self.leq(other) && other.leq(self)
    }
    pub fn join(&self, other: &OSub) -> OSub {
        OSub::new(self.n, self.gens.iter().chain(&other.gens).cloned().collect())
    }
    pub fn perp(&self) -> OSub {
        let conj: Vec<V> = self.gens.iter().map(|g| g.iter().map(C::conj).collect()).collect();
        OSub::new(self.n, kernel(&conj, self.n))
    }
    pub fn meet(&self, other: &OSub) -> OSub {
        self.perp().join(&other.perp()).perp()
    }
    pub fn orthogonal_basis(&self) -> Vec<V> {
        let mut out: Vec<V> = Vec::new();
        for g in &self.gens {
            let mut v = g.clone();
            for u in &out {
                let c = inner(&v, u).div(&C { re: norm2(u), im: Q::zero() });
                v = vsub(&v, &vscale(&c, u));
            }
            if !is_zero(&v) {
                out.push(v);
            }
        }
        out
    }
    pub fn project(&self, x: &V) -> V {
        let mut p = vzero(self.n);
        for u in self.orthogonal_basis() {
            let c = inner(x, &u).div(&C { re: norm2(&u), im: Q::zero() });
            p = vadd(&p, &vscale(&c, &u));
        }
        p
    }
    pub fn dist2(&self, x: &V) -> Q {
        norm2(&vsub(x, &self.project(x)))
    }
    pub fn orthogonal_to(&self, other: &OSub) -> bool {
        self.gens.iter().all(|a| other.gens.iter().all(|b| inner(a, b).is_zero()))
    }
}

pub fn unit(n: usize, k: usize) -> V {
    let mut v = vzero(n);
    v[k] = C::one();
    v
}

/// Orthocomplemented pair evaluated straight from the definitions.
#[derive(Clone, Debug)]
pub struct OPair {
    pub one: OSub,
    pub zero: OSub,
}

impl OPair {
    pub fn meet(&self, o: &OPair) -> OPair {
        OPair { one: self.one.meet(&o.one), zero: self.zero.join(&o.zero) }
    }
    pub fn join(&self, o: &OPair) -> OPair {
        OPair { one: self.one.join(&o.one), zero: self.zero.meet(&o.zero) }
    }
    pub fn neg(&self) -> OPair {
        OPair { one: self.zero.clone(), zero: self.one.clone() }
    }
    pub fn minus(&self, o: &OPair) -> OPair {
        self.meet(&o.neg())
    }
    pub fn implies(&self, o: &OPair) -> OPair {
        self.neg().join(o)
    }
    pub fn leq(&self, o: &OPair) -> bool {
        self.one.leq(&o.one) && o.zero.leq(&self.zero)
    }
    pub fn same(&self, o: &OPair) -> bool {
        self.one.same(&o.one) && self.zero.same(&o.zero)
    }
    pub fn dom(&self) -> OSub {
        self.one.join(&self.zero)
    }
    pub fn total(&self) -> bool {
        self.dom().dim() == self.one.n
    }
    /// `(l1, l0)` for `x ∈ dom`, else `None`.
    pub fn split(&self, x: &V) -> Option<(V, V)> {
        if !self.dom().contains(x) {
            return None;
        }
        let l1 = self.one.project(x);
        Some((l1.clone(), vsub(x, &l1)))
    }
}

/// Partial operator as a domain and a full matrix (rows).
#[derive(Clone, Debug)]
pub struct OOp {
    pub dom: OSub,
    pub m: Vec<V>,
}

impl OOp {
    pub fn apply(&self, x: &V) -> V {
        self.m.iter().map(|row| row.iter().zip(x).fold(C::zero(), |s, (a, b)| s.add(&a.mul(b)))).collect()
    }
    pub fn same(&self, o: &OOp) -> bool {
        self.dom.same(&o.dom) && self.dom.gens.iter().all(|b| self.apply(b) == o.apply(b))
    }
    /// `{x ∈ dom(inner) : inner(x) ∈ dom(outer)}`.
    pub fn compose_dom(outer: &OOp, inner_op: &OOp) -> OSub {
        let n = inner_op.dom.n;
        let basis = echelon(&inner_op.dom.gens);
        let images: Vec<V> = basis.iter().map(|b| inner_op.apply(b)).collect();
        let perp = outer.dom.perp();
        let rows: Vec<V> = perp.gens.iter().map(|w| images.iter().map(|y| inner(y, w)).collect()).collect();
        let coeffs = if rows.is_empty() {
            (0..basis.len()).map(|k| unit(basis.len(), k)).collect()
        } else {
            kernel(&rows, basis.len())
        };
        let gens = coeffs
            .iter()
            .map(|c| c.iter().zip(&basis).fold(vzero(n), |acc, (ci, b)| vadd(&acc, &vscale(ci, b))))
            .collect();
        OSub::new(n, gens)
    }
}

pub fn from_scalar(z: &Scalar) -> C {
    C { re: z.re().clone(), im: z.im().clone() }
}

pub fn to_scalar(c: &C) -> Scalar {
    Scalar::new(c.re.clone(), c.im.clone())
}

pub fn from_vector(v: &Vector) -> V {
    v.entries().iter().map(from_scalar).collect()
}

pub fn to_vector(v: &V) -> Vector {
    Vector::new(v.iter().map(to_scalar).collect())
}

pub fn from_subspace(s: &Subspace) -> OSub {
    OSub::new(s.ambient_dim(), s.basis_vectors().iter().map(from_vector).collect())
}

pub fn to_subspace(field: Field, s: &OSub) -> Subspace {
    Subspace::span(field, s.n, &s.gens.iter().map(to_vector).collect::<Vec<_>>()).unwrap()
}

pub fn from_ortho(l: &OrthoSubspace) -> OPair {
    OPair { one: from_subspace(l.one()), zero: from_subspace(l.zero()) }
}

pub fn from_operator(t: &PartialOperator) -> OOp {
    let m = t.matrix();
    OOp {
        dom: from_subspace(t.dom()),
        m: (0..m.rows()).map(|r| (0..m.cols()).map(|c| from_scalar(m.get(r, c))).collect()).collect(),
    }
}

pub fn ints(xs: &[i64]) -> V {
    xs.iter().map(|&x| C::int(x)).collect()
}

/// Agreement of a library subspace with an oracle subspace.
pub fn agrees(lib: &Subspace, oracle: &OSub) -> bool {
    from_subspace(lib).same(oracle)
}

pub fn agrees_pair(lib: &OrthoSubspace, oracle: &OPair) -> bool {
    agrees(lib.one(), &oracle.one) && agrees(lib.zero(), &oracle.zero)
}

/// All subspaces of ℚ³ spanned by vectors with entries in {−1, 0, 1},
/// deduplicated by canonical form.
pub fn enumerate_q3() -> Vec<Subspace> {
    let mut gens: Vec<Vector> = Vec::new();
    for a in -1..=1 {
        for b in -1..=1 {
            for c in -1..=1 {
                let v = [a, b, c];
                let first = v.iter().find(|&&x| x != 0);
                if first == Some(&1) {
                    gens.push(Vector::from_ints(&v));
                }
            }
        }
    }
    let mut out: Vec<Subspace> = vec![Subspace::zero(Field::Q, 3)];
    let mut frontier = out.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for g in &gens {
                let mut vs = s.basis_vectors();
                vs.push(g.clone());
                let t = Subspace::span(Field::Q, 3, &vs).unwrap();
                if !out.contains(&t) {
                    out.push(t.clone());
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    out
}
