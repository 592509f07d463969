//! The lattice `S(H)` of orthocomplemented subspaces `L = (L¹, L⁰)` with
//! swap negation.

mod counterexample;
mod laws;

pub use counterexample::{catalog, check_catalog, find_counterexample, CatalogLaw, Counterexample, Source};
pub use laws::{check_complql, COMPLQL_LAWS};

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::scalars::Field;
use crate::subspace::Subspace;

/// A pair of mutually orthogonal subspaces; `L¹` proves, `L⁰` refutes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrthoSubspace {
    one: Subspace,
    zero: Subspace,
}

impl OrthoSubspace {
    pub fn new(one: Subspace, zero: Subspace) -> Result<Self> {
        one.check_compatible(&zero)?;
        if let Some((a, b)) = one.coperp_rel(&zero)? {
            let value = a.dot_conj(&b);
            return Err(Error::NotOrthogonal { one: a.to_string(), zero: b.to_string(), value: value.to_string() });
        }
        Ok(Self { one, zero })
    }

    /// `(L, L^⊥)`.
    pub fn total(l: Subspace) -> Self {
        let zero = l.perp();
        Self { one: l, zero }
    }

    /// `0 = ({0}, H)`.
    pub fn bottom(field: Field, n: usize) -> Self {
        Self { one: Subspace::zero(field, n), zero: Subspace::whole(field, n) }
    }

    /// `1 = (H, {0})`.
    pub fn top(field: Field, n: usize) -> Self {
        Self { one: Subspace::whole(field, n), zero: Subspace::zero(field, n) }
    }

    pub fn one(&self) -> &Subspace {
        &self.one
    }

    pub fn zero(&self) -> &Subspace {
        &self.zero
    }

    pub fn field(&self) -> Field {
        self.one.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.one.ambient_dim()
    }

    /// `dom(L) = L¹ ⊕ L⁰`.
    pub fn dom(&self) -> Subspace {
        self.one.join(&self.zero).expect("components share ambient")
    }

    pub fn is_total(&self) -> bool {
        self.one.dim() + self.zero.dim() == self.ambient_dim()
    }

    pub fn is_strict(&self) -> bool {
        self.one.is_strict()
    }

    /// `0_L = ({0}, dom L)`.
    pub fn zero_of(&self) -> Self {
        Self { one: Subspace::zero(self.field(), self.ambient_dim()), zero: self.dom() }
    }

    /// `1_L = (dom L, {0})`.
    pub fn one_of(&self) -> Self {
        Self { one: self.dom(), zero: Subspace::zero(self.field(), self.ambient_dim()) }
    }

    fn check(&self, other: &Self) -> Result<()> {
        self.one.check_compatible(&other.one)
    }

    /// `L ∧ M = (L¹ ∧ M¹, L⁰ ∨ M⁰)`.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { one: self.one.meet(&other.one)?, zero: self.zero.join(&other.zero)? })
    }

    /// `L ∨ M = (L¹ ∨ M¹, L⁰ ∧ M⁰)`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { one: self.one.join(&other.one)?, zero: self.zero.meet(&other.zero)? })
    }

    /// `−L = (L⁰, L¹)`.
    pub fn neg(&self) -> Self {
        Self { one: self.zero.clone(), zero: self.one.clone() }
    }

    /// `L − M = L ∧ (−M)`.
    pub fn minus(&self, other: &Self) -> Result<Self> {
        self.meet(&other.neg())
    }

    /// `L ⇒ M = (−L) ∨ M`.
    pub fn implies(&self, other: &Self) -> Result<Self> {
        self.neg().join(other)
    }

    /// `L ⇔ M = (L ⇒ M) ∧ (M ⇒ L)`.
    pub fn iff(&self, other: &Self) -> Result<Self> {
        self.implies(other)?.meet(&other.implies(self)?)
    }

    /// `¬L = L ⇒ 0`.
    pub fn not(&self) -> Self {
        self.implies(&Self::bottom(self.field(), self.ambient_dim())).expect("same ambient")
    }

    /// `L ≤ M ⇔ L¹ ≤ M¹ & M⁰ ≤ L⁰`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.one.leq(&other.one)? && other.zero.leq(&self.zero)?)
    }

    /// A vector showing `L ≰ M`, if any.
    pub fn leq_witness(&self, other: &Self) -> Result<Option<Vector>> {
        self.check(other)?;
        if let Some(v) = self.one.leq_witness(&other.one)? {
            return Ok(Some(v));
        }
        other.zero.leq_witness(&self.zero)
    }

    pub fn eq_checked(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self == other)
    }

    /// `L ⊥ M ⇔ L ≤ −M`.
    pub fn perp_to(&self, other: &Self) -> Result<bool> {
        self.leq(&other.neg())
    }

    /// `L ≠ M`, decided through the corresponding partial projections.
    pub fn neq_witness(&self, other: &Self) -> Result<Option<Vector>> {
        crate::partial_op::op_neq(
            crate::partial_op::projection_of(self).as_operator(),
            crate::partial_op::projection_of(other).as_operator(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(vs: &[&[i64]], n: usize) -> Subspace {
        Subspace::span(Field::Q, n, &vs.iter().map(|v| Vector::from_ints(v)).collect::<Vec<_>>()).unwrap()
    }

    fn o(one: &[&[i64]], zero: &[&[i64]], n: usize) -> OrthoSubspace {
        OrthoSubspace::new(sp(one, n), sp(zero, n)).unwrap()
    }

    #[test]
    fn construction_rejects_non_orthogonal() {
        let err = OrthoSubspace::new(sp(&[&[1, 1]], 2), sp(&[&[1, 0]], 2)).unwrap_err();
        assert!(matches!(err, Error::NotOrthogonal { .. }));
        let l = o(&[&[1, 0]], &[&[0, 1]], 2);
        assert!(l.one().meet(l.zero()).unwrap().is_zero());
    }

    #[test]
    fn meet_join_examples() {
        let a = o(&[&[1, 0]], &[&[0, 1]], 2);
        let b = o(&[&[0, 1]], &[&[1, 0]], 2);
        assert_eq!(a.meet(&b).unwrap(), OrthoSubspace::bottom(Field::Q, 2));
        assert_eq!(a.join(&b).unwrap(), OrthoSubspace::top(Field::Q, 2));
        assert_eq!(a.meet(&OrthoSubspace::top(Field::Q, 2)).unwrap(), a);
        assert_eq!(a.meet(&a).unwrap(), a);
        assert_eq!(OrthoSubspace::bottom(Field::Q, 2).join(&a).unwrap(), a);
        let p = o(&[&[1, 0, 0]], &[], 3);
        assert_eq!(p.join(&p.neg()).unwrap(), p.one_of());
    }

    #[test]
    fn negation_and_derived_operations() {
        let a = o(&[&[1, 0]], &[&[0, 1]], 2);
        assert_eq!(a.neg(), o(&[&[0, 1]], &[&[1, 0]], 2));
        assert_eq!(OrthoSubspace::top(Field::Q, 2).neg(), OrthoSubspace::bottom(Field::Q, 2));
        assert_eq!(a.neg().neg(), a);
        assert_eq!(a.not(), a.neg());
        assert_eq!(OrthoSubspace::bottom(Field::Q, 2).implies(&a).unwrap(), OrthoSubspace::top(Field::Q, 2));
        assert_eq!(a.minus(&a).unwrap(), a.zero_of());
        let e = a.implies(&a).unwrap();
        assert_eq!(e.one(), &a.zero().join(a.one()).unwrap());
        assert_eq!(e.zero(), &a.one().meet(a.zero()).unwrap());
        assert_eq!(e, OrthoSubspace::top(Field::Q, 2));
        assert!(matches!(a.meet(&OrthoSubspace::top(Field::Q, 3)), Err(Error::AmbientMismatch { .. })));
    }

    #[test]
    fn order_and_totality() {
        let l = o(&[&[1, 0, 0]], &[&[0, 1, 0], &[0, 0, 1]], 3);
        let m = o(&[&[1, 0, 0], &[0, 1, 0]], &[&[0, 0, 1]], 3);
        assert!(OrthoSubspace::bottom(Field::Q, 3).leq(&l).unwrap());
        assert!(l.leq(&m).unwrap());
        assert!(!m.leq(&l).unwrap());
        assert!(o(&[&[1, 0]], &[&[0, 1]], 2).is_total());
        assert!(!o(&[&[1, 0, 0]], &[&[0, 1, 0]], 3).is_total());
        let t = OrthoSubspace::total(sp(&[&[1, 2, 3]], 3));
        assert!(t.is_total());
        assert_eq!(t.zero(), &t.one().perp());
    }

    #[test]
    fn inequality_through_projections() {
        let b = OrthoSubspace::bottom(Field::Q, 1);
        let t = OrthoSubspace::top(Field::Q, 1);
        assert_eq!(b.neq_witness(&t).unwrap(), Some(Vector::from_ints(&[1])));
        assert_eq!(t.neq_witness(&t).unwrap(), None);
    }
}
