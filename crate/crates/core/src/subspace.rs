//! Subspaces of ℚⁿ and ℚ(i)ⁿ in canonical form, and the lattice `S(H)`.
//!
//! A [`Subspace`] stores the reduced row-echelon form of a spanning set, so
//! two subspaces are equal exactly when their stored bases are identical.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalars::{Field, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    /// The span of `vectors` inside `field^ambient`.
    pub fn span(field: Field, ambient: usize, vectors: &[Vector]) -> Result<Self> {
        for v in vectors {
            if v.dim() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: v.dim() });
            }
            if !v.in_field(field) {
                return Err(Error::Parse(format!("vector {v} has entries outside {field}")));
            }
        }
        Ok(Self::from_rows(field, ambient, Matrix::from_row_vectors(vectors, ambient)?))
    }

    pub(crate) fn from_rows(field: Field, ambient: usize, m: Matrix) -> Self {
        let r = m.rref();
        let basis = Matrix::from_row_vectors(&r.matrix.row_vectors()[..r.rank], ambient)
            .expect("rref rows have ambient length");
        Self { field, ambient, basis }
    }

    pub fn zero(field: Field, ambient: usize) -> Self {
        Self { field, ambient, basis: Matrix::zeros(0, ambient) }
    }

    pub fn whole(field: Field, ambient: usize) -> Self {
        Self { field, ambient, basis: Matrix::identity(ambient) }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_whole(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Contains a nonzero vector.
    pub fn is_strict(&self) -> bool {
        self.dim() >= 1
    }

    pub(crate) fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field, right: other.field });
        }
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    fn check_vector(&self, x: &Vector) -> Result<()> {
        if x.dim() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: x.dim() });
        }
        Ok(())
    }

    /// `L ∧ M = L ∩ M`, from the kernel of `[B_Lᵀ | −B_Mᵀ]`.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field, self.ambient));
        }
        let lt = self.basis.transpose();
        let stacked = lt.hstack(&other.basis.transpose().neg())?;
        let kernel = stacked.null_space();
        let coeffs = Matrix::from_row_vectors(
            &kernel.column_vectors().iter().map(|c| Vector::new(c.entries()[..self.dim()].to_vec())).collect::<Vec<_>>(),
            self.dim(),
        )?;
        Ok(Self::from_rows(self.field, self.ambient, coeffs.mul(&self.basis)?))
    }

    /// The raw sum `L + M = {l + m}`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self::from_rows(self.field, self.ambient, self.basis.vstack(&other.basis)?))
    }

    /// Topological closure; every subspace of a finite-dimensional space is
    /// closed.
    pub fn closure(&self) -> Self {
        self.clone()
    }

    /// `L ∨ M`, the closure of `L + M`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        Ok(self.sum(other)?.closure())
    }

    /// `L ⊕ M` when `L ∧ M = 0`.
    pub fn oplus(&self, other: &Self) -> Result<Option<Self>> {
        if !self.meet(other)?.is_zero() {
            return Ok(None);
        }
        self.join(other).map(Some)
    }

    /// `L^⊥ = {x : ⟨x, l⟩ = 0 for every basis row l}`.
    pub fn perp(&self) -> Self {
        if self.is_zero() {
            return Self::whole(self.field, self.ambient);
        }
        let ns = self.basis.conj().null_space();
        Self::from_rows(self.field, self.ambient, ns.transpose())
    }

    pub fn contains(&self, x: &Vector) -> Result<bool> {
        self.check_vector(x)?;
        if self.is_zero() {
            return Ok(x.is_zero());
        }
        Ok(self.basis.transpose().solve(x)?.is_some())
    }

    pub fn leq(&self, other: &Self) -> Result<bool> {
        Ok(self.leq_witness(other)?.is_none())
    }

    /// A basis row of `self` outside `other`, if any.
    pub fn leq_witness(&self, other: &Self) -> Result<Option<Vector>> {
        self.check_compatible(other)?;
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(Some(v));
            }
        }
        Ok(None)
    }

    pub fn eq_checked(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self == other)
    }

    /// Orthogonal projection matrix onto `self`.
    pub fn projection_matrix(&self) -> Matrix {
        Matrix::gram_projection(&self.basis.transpose()).expect("canonical basis is independent")
    }

    /// `ρ(x, L)² = ‖x − P_L x‖²`.
    pub fn distance_sq(&self, x: &Vector) -> Result<Rational> {
        self.check_vector(x)?;
        let p = self.projection_matrix();
        Ok(x.sub(&p.apply(x)).norm_sq())
    }

    /// `L ⊥ M`: every pair of basis rows is orthogonal.
    pub fn perp_rel(&self, other: &Self) -> Result<bool> {
        Ok(self.coperp_rel(other)?.is_none())
    }

    /// `L ⊤ M`: a pair of basis rows with nonzero inner product.
    pub fn coperp_rel(&self, other: &Self) -> Result<Option<(Vector, Vector)>> {
        self.check_compatible(other)?;
        for a in self.basis_vectors() {
            for b in other.basis_vectors() {
                if !a.dot_conj(&b).is_zero() {
                    return Ok(Some((a, b)));
                }
            }
        }
        Ok(None)
    }

    /// `L ∨ L^⊥ = H`.
    pub fn is_located_total(&self) -> bool {
        self.join(&self.perp()).expect("same ambient").is_whole()
    }
}

/// Law suite for the lattice `S(H)`.
pub mod laws {
    use super::Subspace;
    use crate::error::Result;
    use crate::report::{SuiteReport, Verdict, Witness};

    fn eq_verdict(lhs: &Subspace, rhs: &Subspace, what: &str) -> Verdict {
        Verdict::from_witness(Witness::subspace_neq(what, lhs, rhs))
    }

    fn leq_verdict(lhs: &Subspace, rhs: &Subspace, what: &str) -> Result<Verdict> {
        Ok(match lhs.leq_witness(rhs)? {
            None => Verdict::Holds,
            Some(v) => Verdict::Fails(Witness::new(what).vector("outside", &v, lhs.field())),
        })
    }

    /// ClQL₁–ClQL₇, the semidistributive inequalities, closed-sum modularity
    /// and De Morgan over every triple.
    pub fn check_clql(triples: &[(Subspace, Subspace, Subspace)]) -> Result<SuiteReport> {
        let mut suite = SuiteReport::new("clql");
        for (idx, (l, m, n)) in triples.iter().enumerate() {
            l.check_compatible(m)?;
            l.check_compatible(n)?;
            let (f, amb) = (l.field(), l.ambient_dim());
            let zero = Subspace::zero(f, amb);
            let whole = Subspace::whole(f, amb);
            let lm = l.meet(m)?;
            let ljm = l.join(m)?;

            let mut v = Verdict::Holds;
            v = v.and(leq_verdict(&lm, l, "L∧M ≤ L")?);
            v = v.and(leq_verdict(&lm, m, "L∧M ≤ M")?);
            v = v.and(leq_verdict(l, &ljm, "L ≤ L∨M")?);
            v = v.and(leq_verdict(m, &ljm, "M ≤ L∨M")?);
            for k in [n.clone(), n.meet(&lm)?] {
                let lower = k.leq(l)? && k.leq(m)?;
                if lower != k.leq(&lm)? {
                    v = v.and(Verdict::fail("N ≤ L, N ≤ M ⇔ N ≤ L∧M"));
                }
            }
            for k in [n.clone(), n.join(&ljm)?] {
                let upper = l.leq(&k)? && m.leq(&k)?;
                if upper != ljm.leq(&k)? {
                    v = v.and(Verdict::fail("L ≤ N, M ≤ N ⇔ L∨M ≤ N"));
                }
            }
            suite.record("ClQL1", idx, v);

            let mut v = Verdict::Holds;
            for x in [l, m, n] {
                v = v.and(leq_verdict(&zero, x, "0 ≤ L")?).and(leq_verdict(x, &whole, "L ≤ H")?);
            }
            suite.record("ClQL2", idx, v);

            for (a, b) in [(l, m), (&lm, l), (n, &n.join(m)?)] {
                let v = if a.leq(b)? { leq_verdict(&b.perp(), &a.perp(), "M^⊥ ≤ L^⊥")? } else { Verdict::HypothesisNotMet };
                suite.record("ClQL3", idx, v);
            }
            for x in [l, m, n] {
                suite.record("ClQL4", idx, eq_verdict(x, &x.perp().perp(), "L = L^⊥⊥"));
                suite.record("ClQL5", idx, eq_verdict(&x.meet(&x.perp())?, &zero, "L ∧ L^⊥ = 0"));
                suite.record("ClQL6", idx, eq_verdict(&x.join(&x.perp())?, &whole, "L ∨ L^⊥ = H"));
            }
            for (a, b) in [(l, m), (&lm, l), (n, &n.join(l)?)] {
                let v = if a.leq(b)? {
                    eq_verdict(b, &a.join(&b.meet(&a.perp())?)?, "M = L ∨ (M ∧ L^⊥)")
                } else {
                    Verdict::HypothesisNotMet
                };
                suite.record("ClQL7", idx, v);
            }

            let mn = m.meet(n)?;
            let mjn = m.join(n)?;
            suite.record(
                "semidistributive_join",
                idx,
                leq_verdict(&l.join(&mn)?, &ljm.meet(&l.join(n)?)?, "L∨(M∧N) ≤ (L∨M)∧(L∨N)")?,
            );
            suite.record(
                "semidistributive_meet",
                idx,
                leq_verdict(&lm.join(&l.meet(n)?)?, &l.meet(&mjn)?, "(L∧M)∨(L∧N) ≤ L∧(M∨N)")?,
            );
            for (big, small) in [(l, n), (l, &n.meet(l)?)] {
                let v = if small.leq(big)? {
                    eq_verdict(&big.meet(&m.join(small)?)?, &big.meet(m)?.join(small)?, "L∧(M∨N) = (L∧M)∨N")
                } else {
                    Verdict::HypothesisNotMet
                };
                suite.record("closedMod", idx, v);
            }
            suite.record("deMorgan_join", idx, eq_verdict(&ljm.perp(), &l.perp().meet(&m.perp())?, "(L∨M)^⊥ = L^⊥∧M^⊥"));
            suite.record(
                "deMorgan_meet_ineq",
                idx,
                leq_verdict(&l.perp().join(&m.perp())?, &lm.perp(), "L^⊥∨M^⊥ ≤ (L∧M)^⊥")?,
            );
            suite.record("deMorgan_meet_eq", idx, eq_verdict(&lm.perp(), &l.perp().join(&m.perp())?, "(L∧M)^⊥ = L^⊥∨M^⊥"));
            suite.record("sum_closed", idx, eq_verdict(&l.sum(m)?, &ljm, "L + M = L ∨ M"));
            suite.record("located_total", idx, Verdict::from_bool(l.is_located_total(), "L ∨ L^⊥ = H"));
        }
        Ok(suite)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Scalar;

    fn sp(vs: &[&[i64]], n: usize) -> Subspace {
        Subspace::span(Field::Q, n, &vs.iter().map(|v| Vector::from_ints(v)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn meet_examples() {
        let a = sp(&[&[1, 0, 0], &[0, 1, 0]], 3);
        let b = sp(&[&[0, 1, 0], &[0, 0, 1]], 3);
        assert_eq!(a.meet(&b).unwrap(), sp(&[&[0, 1, 0]], 3));
        assert_eq!(a.meet(&a).unwrap(), a);
        assert!(a.meet(&Subspace::zero(Field::Q, 3)).unwrap().is_zero());
        assert!(matches!(a.meet(&Subspace::zero(Field::Q, 2)), Err(Error::AmbientMismatch { .. })));
        assert!(matches!(a.meet(&Subspace::zero(Field::Qi, 3)), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn join_examples() {
        let e1 = sp(&[&[1, 0]], 2);
        assert!(e1.join(&sp(&[&[0, 1]], 2)).unwrap().is_whole());
        assert!(e1.join(&sp(&[&[1, 1]], 2)).unwrap().is_whole());
        assert_eq!(e1.join(&Subspace::zero(Field::Q, 2)).unwrap(), e1);
    }

    #[test]
    fn perp_examples() {
        assert_eq!(sp(&[&[1, 1]], 2).perp(), sp(&[&[1, -1]], 2));
        assert!(Subspace::zero(Field::Q, 2).perp().is_whole());
        assert!(Subspace::whole(Field::Q, 2).perp().is_zero());
        assert_eq!(sp(&[&[1, 0, 0]], 3).perp(), sp(&[&[0, 1, 0], &[0, 0, 1]], 3));
        let iv = Subspace::span(Field::Qi, 2, &[Vector::new(vec![Scalar::one(), Scalar::i()])]).unwrap();
        let p = iv.perp();
        assert!(iv.perp_rel(&p).unwrap());
        assert_eq!(p.dim(), 1);
    }

    #[test]
    fn contains_and_order() {
        let e1 = sp(&[&[1, 0]], 2);
        assert!(e1.contains(&Vector::from_ints(&[3, 0])).unwrap());
        assert!(!e1.contains(&Vector::from_ints(&[3, 1])).unwrap());
        assert!(sp(&[&[1, 1], &[0, 1]], 2).contains(&Vector::from_ints(&[7, -2])).unwrap());
        assert!(e1.leq(&sp(&[&[1, 0, 0], &[0, 1, 0]], 3)).is_err());
        assert!(sp(&[&[1, 0, 0]], 3).leq(&sp(&[&[1, 0, 0], &[0, 1, 0]], 3)).unwrap());
        assert!(!sp(&[&[1, 1]], 2).leq(&e1).unwrap());
        assert!(Subspace::zero(Field::Q, 2).leq(&e1).unwrap());
        assert!(e1.leq(&Subspace::whole(Field::Q, 2)).unwrap());
    }

    #[test]
    fn distance_examples() {
        let e1 = sp(&[&[1, 0]], 2);
        assert_eq!(e1.distance_sq(&Vector::from_ints(&[0, 1])).unwrap(), Rational::from_integer(1.into()));
        let anti = sp(&[&[1, -1]], 2);
        assert_eq!(anti.distance_sq(&Vector::from_ints(&[1, 1])).unwrap(), Rational::from_integer(2.into()));
        assert_eq!(e1.distance_sq(&Vector::from_ints(&[5, 0])).unwrap(), Rational::from_integer(0.into()));
    }

    #[test]
    fn perp_relations() {
        let e1 = sp(&[&[1, 0]], 2);
        assert!(e1.perp_rel(&sp(&[&[0, 1]], 2)).unwrap());
        let w = sp(&[&[1, 1]], 2).coperp_rel(&e1).unwrap().unwrap();
        assert_eq!(w, (Vector::from_ints(&[1, 1]), Vector::from_ints(&[1, 0])));
        assert!(e1.perp_rel(&Subspace::zero(Field::Q, 2)).unwrap());
    }

    #[test]
    fn located_is_total() {
        assert!(sp(&[&[1, 2, 3]], 3).is_located_total());
        assert!(Subspace::zero(Field::Q, 3).is_located_total());
        assert!(Subspace::whole(Field::Q, 3).is_located_total());
        assert!(Subspace::zero(Field::Q, 0).is_located_total());
        assert_eq!(Subspace::zero(Field::Q, 0), Subspace::whole(Field::Q, 0));
    }

    #[test]
    fn oplus_requires_trivial_meet() {
        let e1 = sp(&[&[1, 0]], 2);
        assert!(e1.oplus(&sp(&[&[1, 1]], 2)).unwrap().unwrap().is_whole());
        assert!(e1.oplus(&e1).unwrap().is_none());
    }
}
