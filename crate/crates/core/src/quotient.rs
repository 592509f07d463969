//! The quotient Hilbert space `dom(L)/L`: carrier `dom(L)`, equality and
//! inner product through `P⁰`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::ortho_lattice::OrthoSubspace;
use crate::random::Sampler;
use crate::report::{Expectation, SuiteReport, Verdict, Witness};
use crate::scalars::{Rational, Scalar};
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    base: OrthoSubspace,
    carrier: Subspace,
    p0: Matrix,
}

impl QuotientSpace {
    pub fn new(base: OrthoSubspace) -> Self {
        let carrier = base.dom();
        let p0 = base.zero().projection_matrix();
        Self { base, carrier, p0 }
    }

    pub fn base(&self) -> &OrthoSubspace {
        &self.base
    }

    pub fn carrier(&self) -> &Subspace {
        &self.carrier
    }

    fn check(&self, x: &Vector) -> Result<()> {
        if !self.carrier.contains(x)? {
            return Err(Error::NotInDomain(x.to_string()));
        }
        Ok(())
    }

    /// `T_L(x) = P⁰x ∈ L⁰`.
    pub fn q_iso(&self, x: &Vector) -> Result<Vector> {
        self.check(x)?;
        Ok(self.p0.apply(x))
    }

    pub fn q_eq(&self, x: &Vector, y: &Vector) -> Result<bool> {
        Ok(self.q_iso(x)? == self.q_iso(y)?)
    }

    pub fn q_inner(&self, x: &Vector, y: &Vector) -> Result<Scalar> {
        self.q_iso(x)?.inner(&self.q_iso(y)?)
    }

    pub fn q_norm_sq(&self, x: &Vector) -> Result<Rational> {
        Ok(self.q_iso(x)?.norm_sq())
    }
}

pub const QUOTIENT_LAWS: &[&str] = &[
    "q_eq_reflexive",
    "q_eq_symmetric",
    "q_eq_transitive",
    "q_inner_well_defined",
    "q_inner_hermitian",
    "q_inner_positive",
    "iso_norm",
    "iso_linear",
    "iso_range",
    "pi_contraction",
    "pi_norm_one",
    "total_agrees_with_distance",
];

/// Quotient laws for each base, at random carrier points `x`, `y` and
/// representatives `x + a`, `x + b` with `a, b ∈ L¹`.
pub fn check_quotient(bases: &[OrthoSubspace], sampler: &mut Sampler) -> Result<SuiteReport> {
    let mut s = SuiteReport::new("quotient");
    for law in QUOTIENT_LAWS {
        s.declare(law, Expectation::Proved);
    }
    for (idx, l) in bases.iter().enumerate() {
        let q = QuotientSpace::new(l.clone());
        let f = l.field();
        let x = sampler.point_in(l);
        let y = sampler.point_in(l);
        let x2 = x.add(&sampler.vector_in(l.one()));
        let x3 = x2.add(&sampler.vector_in(l.one()));
        let y2 = y.add(&sampler.vector_in(l.one()));

        s.record("q_eq_reflexive", idx, Verdict::from_bool(q.q_eq(&x, &x)?, "x ≢ x"));
        s.record("q_eq_symmetric", idx, Verdict::from_bool(q.q_eq(&x, &y)? == q.q_eq(&y, &x)?, "≡ not symmetric"));
        let chain = q.q_eq(&x, &x2)? && q.q_eq(&x2, &x3)?;
        s.record("q_eq_transitive", idx, Verdict::given(chain, || Verdict::from_bool(q.q_eq(&x, &x3).unwrap_or(false), "≡ not transitive")));

        let ok = q.q_inner(&x, &y)? == q.q_inner(&x2, &y2)? && q.q_inner(&x, &y)? == q.q_inner(&x3, &y)?;
        s.record("q_inner_well_defined", idx, Verdict::from_bool(ok, "inner product depends on representatives"));
        s.record("q_inner_hermitian", idx, Verdict::from_bool(q.q_inner(&x, &y)? == q.q_inner(&y, &x)?.conj(), "⟨x,y⟩ ≠ conj ⟨y,x⟩"));
        let xx = q.q_inner(&x, &x)?;
        s.record("q_inner_positive", idx, Verdict::from_bool(xx.is_real() && *xx.re() >= Rational::zero(), "⟨x,x⟩ not ≥ 0"));

        let tx = q.q_iso(&x)?;
        s.record("iso_norm", idx, Verdict::from_bool(tx.norm_sq() == q.q_norm_sq(&x)? && Scalar::real(tx.norm_sq()) == xx, "‖Tx‖² ≠ ‖x‖²_Q"));
        let k = sampler.scalar();
        let lin = q.q_iso(&x.scale(&k).add(&y))? == tx.scale(&k).add(&q.q_iso(&y)?);
        s.record("iso_linear", idx, Verdict::from_bool(lin, "T not linear"));
        s.record("iso_range", idx, Verdict::from_bool(l.zero().contains(&tx)?, "Tx ∉ L⁰"));

        s.record(
            "pi_contraction",
            idx,
            if q.q_norm_sq(&x)? <= x.norm_sq() {
                Verdict::Holds
            } else {
                Verdict::Fails(Witness::new("‖x‖²_Q > ‖x‖²").vector("x", &x, f))
            },
        );
        s.record(
            "pi_norm_one",
            idx,
            match sampler.nonzero_vector_in(l.zero()) {
                Some(z) => Verdict::from_bool(q.q_norm_sq(&z)? == z.norm_sq() && !z.norm_sq().is_zero(), "no norm-attaining vector in L⁰"),
                None => Verdict::HypothesisNotMet,
            },
        );
        s.record(
            "total_agrees_with_distance",
            idx,
            if l.is_total() {
                let a = q.q_eq(&x, &y)? == l.one().distance_sq(&x.sub(&y))?.is_zero();
                let b = q.q_eq(&x, &x2)? == l.one().distance_sq(&x.sub(&x2))?.is_zero();
                Verdict::from_bool(a && b, "≡ disagrees with ρ(x − y, L¹) = 0")
            } else {
                Verdict::HypothesisNotMet
            },
        );
    }
    Ok(s)
}
