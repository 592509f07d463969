//! Bounded partial operators and partial projections on ℚⁿ / ℚ(i)ⁿ.
//!
//! A [`PartialOperator`] is a domain subspace plus an ambient matrix. The
//! matrix is stored multiplied by the orthogonal projection onto the domain,
//! so it vanishes on `dom^⊥`; nothing outside the domain is ever consulted.

mod commute;
mod order;
mod pls;
mod suites;

pub use commute::{check_cor7, commuting_calculus, CommReport};
pub use order::{check_order, OrderReport};
pub use pls::{check_pls, PLinearMap};
pub use suites::{check_bijection, check_crucial, check_extensionality, check_ij};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::ortho_lattice::OrthoSubspace;
use crate::scalars::{Field, Scalar};
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialOperator {
    dom: Subspace,
    matrix: Matrix,
}

impl PartialOperator {
    /// The operator acting as `matrix` on `dom`.
    pub fn new(dom: Subspace, matrix: Matrix) -> Result<Self> {
        let n = dom.ambient_dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: matrix.rows().max(matrix.cols()) });
        }
        if !matrix.in_field(dom.field()) {
            return Err(Error::Parse(format!("matrix entries outside {}", dom.field())));
        }
        let matrix = if dom.is_whole() { matrix } else { matrix.mul(&dom.projection_matrix())? };
        Ok(Self { dom, matrix })
    }

    pub(crate) fn from_normalized(dom: Subspace, matrix: Matrix) -> Self {
        Self { dom, matrix }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        Self { dom: Subspace::whole(field, n), matrix: Matrix::identity(n) }
    }

    /// The total zero operator `0`.
    pub fn zero(field: Field, n: usize) -> Self {
        Self { dom: Subspace::whole(field, n), matrix: Matrix::zeros(n, n) }
    }

    pub fn dom(&self) -> &Subspace {
        &self.dom
    }

    /// Canonical ambient matrix, zero on `dom^⊥`.
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> Field {
        self.dom.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dom.ambient_dim()
    }

    pub fn is_total(&self) -> bool {
        self.dom.is_whole()
    }

    /// Some `x ∈ dom` with `Tx ≠ 0`.
    pub fn is_strict(&self) -> bool {
        !self.matrix.is_zero()
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        if !self.dom.contains(x)? {
            return Err(Error::NotInDomain(x.to_string()));
        }
        Ok(self.matrix.apply(x))
    }

    fn check(&self, other: &Self) -> Result<()> {
        self.dom.check_compatible(&other.dom)
    }

    /// `0_T`: zero on `dom(T)`.
    pub fn zero_of(&self) -> Self {
        let n = self.ambient_dim();
        Self { dom: self.dom.clone(), matrix: Matrix::zeros(n, n) }
    }

    /// `T + U` on `dom(T) ∧ dom(U)`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let dom = self.dom.meet(&other.dom)?;
        Self::new(dom, self.matrix.add(&other.matrix)?)
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Self { dom: self.dom.clone(), matrix: self.matrix.scale(k) }
    }

    /// The partial additive inverse `−T`.
    pub fn negate(&self) -> Self {
        Self { dom: self.dom.clone(), matrix: self.matrix.neg() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.negate())
    }
}

/// `dom(T) = dom(U)` and `Tx = Ux` for every `x` in it.
pub fn op_eq(t: &PartialOperator, u: &PartialOperator) -> Result<bool> {
    t.check(u)?;
    if t.dom != u.dom {
        return Ok(false);
    }
    Ok(t.dom.basis_vectors().iter().all(|b| t.matrix.apply(b) == u.matrix.apply(b)))
}

/// A nonzero `x` with `x ∈ dom T, x ⊥ dom U`, or `x ∈ dom U, x ⊥ dom T`, or
/// `x` in both domains with `Tx ≠ Ux`.
pub fn op_neq(t: &PartialOperator, u: &PartialOperator) -> Result<Option<Vector>> {
    t.check(u)?;
    let k = t.dom.meet(&u.dom.perp())?;
    if let Some(x) = k.basis_vectors().into_iter().next() {
        return Ok(Some(x));
    }
    let k = u.dom.meet(&t.dom.perp())?;
    if let Some(x) = k.basis_vectors().into_iter().next() {
        return Ok(Some(x));
    }
    let common = t.dom.meet(&u.dom)?;
    Ok(common.basis_vectors().into_iter().find(|b| t.matrix.apply(b) != u.matrix.apply(b)))
}

/// `None` if `op_eq(t, u)`, otherwise a vector at which the equality
/// breaks: an inequality witness if there is one, else a domain vector
/// missing from the other domain.
pub fn eq_failure(t: &PartialOperator, u: &PartialOperator) -> Result<Option<Vector>> {
    if op_eq(t, u)? {
        return Ok(None);
    }
    if let Some(x) = op_neq(t, u)? {
        return Ok(Some(x));
    }
    if let Some(x) = t.dom.leq_witness(&u.dom)? {
        return Ok(Some(x));
    }
    u.dom.leq_witness(&t.dom)
}

/// `outer ∘ inner` on `{x ∈ dom(inner) : inner(x) ∈ dom(outer)}`.
pub fn compose(outer: &PartialOperator, inner: &PartialOperator) -> Result<PartialOperator> {
    outer.check(inner)?;
    let n = inner.ambient_dim();
    let field = inner.field();
    let dom = if inner.dom.is_zero() {
        Subspace::zero(field, n)
    } else if outer.dom.is_whole() {
        inner.dom.clone()
    } else {
        let x = inner.dom.basis().transpose();
        let leave = Matrix::identity(n).sub(&outer.dom.projection_matrix())?;
        let y = leave.mul(&inner.matrix)?.mul(&x)?;
        let coeffs = y.null_space();
        Subspace::from_rows(field, n, x.mul(&coeffs)?.transpose())
    };
    PartialOperator::new(dom, outer.matrix.mul(&inner.matrix)?)
}

/// An idempotent, self-adjoint partial operator whose range lies in its
/// domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialProjection(PartialOperator);

impl PartialProjection {
    pub fn try_new(op: PartialOperator) -> Result<Self> {
        let basis = op.dom.basis_vectors();
        let images: Vec<Vector> = basis.iter().map(|b| op.matrix.apply(b)).collect();
        for (b, pb) in basis.iter().zip(&images) {
            if !op.dom.contains(pb)? {
                return Err(Error::NotAProjection(format!("P{b} = {pb} leaves the domain")));
            }
            if op.matrix.apply(pb) != *pb {
                return Err(Error::NotAProjection(format!("not idempotent at {b}")));
            }
        }
        for (i, bi) in basis.iter().enumerate() {
            for (j, bj) in basis.iter().enumerate() {
                if images[i].dot_conj(bj) != bi.dot_conj(&images[j]) {
                    return Err(Error::NotAProjection(format!("<P{bi}, {bj}> ≠ <{bi}, P{bj}>")));
                }
            }
        }
        Ok(Self(op))
    }

    pub fn as_operator(&self) -> &PartialOperator {
        &self.0
    }

    pub fn into_operator(self) -> PartialOperator {
        self.0
    }

    pub fn dom(&self) -> &Subspace {
        &self.0.dom
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0.matrix
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        self.0.apply(x)
    }

    pub fn is_strict(&self) -> bool {
        self.0.is_strict()
    }

    pub fn identity(field: Field, n: usize) -> Self {
        Self(PartialOperator::identity(field, n))
    }

    pub fn zero(field: Field, n: usize) -> Self {
        Self(PartialOperator::zero(field, n))
    }

    /// `∼P`: on `dom(P)`, `x ↦ x − Px`.
    pub fn complement(&self) -> Self {
        let pi = self.dom().projection_matrix();
        let m = pi.sub(self.matrix()).expect("square matrices");
        Self(PartialOperator::from_normalized(self.dom().clone(), m))
    }

    /// `P ∧ Q = i(j(P) ∧ j(Q))`.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        Ok(projection_of(&subspaces_of(self).meet(&subspaces_of(other))?))
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        Ok(projection_of(&subspaces_of(self).join(&subspaces_of(other))?))
    }

    /// `P ∼ Q = P ∧ (∼Q)`.
    pub fn minus(&self, other: &Self) -> Result<Self> {
        self.meet(&other.complement())
    }

    /// `P ⇒ Q = (∼P) ∨ Q`.
    pub fn implies(&self, other: &Self) -> Result<Self> {
        self.complement().join(other)
    }

    pub fn iff(&self, other: &Self) -> Result<Self> {
        self.implies(other)?.meet(&other.implies(self)?)
    }

    /// `¬P = P ⇒ 0`.
    pub fn not(&self) -> Self {
        let n = self.0.ambient_dim();
        self.implies(&Self::zero(self.0.field(), n)).expect("same ambient")
    }

    /// `P ≤ Q ⇔ j(P) ≤ j(Q)`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        subspaces_of(self).leq(&subspaces_of(other))
    }
}

/// The bijection `i`: `L ↦ P¹_L`, the projection onto `L¹` along `L⁰` on
/// `dom(L)`.
pub fn projection_of(l: &OrthoSubspace) -> PartialProjection {
    PartialProjection(PartialOperator::from_normalized(l.dom(), l.one().projection_matrix()))
}

/// The bijection `j`: `P ↦ (range of P on dom, Ker P ∩ dom)`.
pub fn subspaces_of(p: &PartialProjection) -> OrthoSubspace {
    let dom = p.dom();
    let (field, n) = (dom.field(), dom.ambient_dim());
    let m = p.matrix();
    let one = Subspace::from_rows(field, n, m.mul(&dom.basis().transpose()).expect("square").transpose());
    let zero = if dom.is_zero() {
        Subspace::zero(field, n)
    } else {
        let x = dom.basis().transpose();
        let kernel = m.mul(&x).expect("square").null_space();
        Subspace::from_rows(field, n, x.mul(&kernel).expect("conformable").transpose())
    };
    OrthoSubspace::new(one, zero).expect("range and kernel of a partial projection are orthogonal")
}

/// The unique `x = l¹ + l⁰` with `l¹ ∈ L¹`, `l⁰ ∈ L⁰`.
pub fn decompose(l: &OrthoSubspace, x: &Vector) -> Result<(Vector, Vector)> {
    let n = l.ambient_dim();
    if x.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: x.dim() });
    }
    let (b1, b0) = (l.one().basis(), l.zero().basis());
    let stacked = b1.vstack(b0)?.transpose();
    let Some(c) = stacked.solve(x)? else {
        return Err(Error::NotInDomain(x.to_string()));
    };
    let r = b1.rows();
    let c1 = Vector::new(c.entries()[..r].to_vec());
    let c0 = Vector::new(c.entries()[r..].to_vec());
    Ok((b1.transpose().apply(&c1), b0.transpose().apply(&c0)))
}

/// A coefficient vector `c` with `‖Px‖² > ‖x‖²` for `x = Bᵀc`, `B` the
/// domain basis, or `None` if `P` is a contraction on its domain.
pub fn contraction_violation(p: &PartialOperator) -> Option<Vector> {
    let b = p.dom().basis();
    let n = p.ambient_dim();
    let defect = Matrix::identity(n).sub(&p.matrix().conj_transpose().mul(p.matrix()).ok()?).ok()?;
    let gram = b.conj().mul(&defect).ok()?.mul(&b.transpose()).ok()?;
    gram.psd_violation()
}

/// `‖P‖ = 1`, certified by contraction on `dom(P)` plus a nonzero fixed
/// vector.
pub fn norm_sq_is_one(p: &PartialProjection) -> bool {
    if contraction_violation(p.as_operator()).is_some() {
        return false;
    }
    let fixed = subspaces_of(p);
    fixed.one().basis_vectors().iter().any(|l| {
        let pl = p.matrix().apply(l);
        !l.is_zero() && pl.norm_sq() == l.norm_sq()
    })
}

/// `{x ∈ dom P : ‖Px‖² = ‖x‖²}`, the kernel of the positive form
/// `‖x‖² − ‖Px‖²` on the domain.
pub fn norm_preserving_subspace(p: &PartialProjection) -> Subspace {
    let dom = p.dom();
    let (field, n) = (dom.field(), dom.ambient_dim());
    if dom.is_zero() {
        return Subspace::zero(field, n);
    }
    let b = dom.basis();
    let defect = Matrix::identity(n).sub(&p.matrix().conj_transpose().mul(p.matrix()).expect("square")).expect("square");
    let gram = b.conj().mul(&defect).expect("conformable").mul(&b.transpose()).expect("conformable");
    let kernel = gram.null_space();
    Subspace::from_rows(field, n, b.transpose().mul(&kernel).expect("conformable").transpose())
}
