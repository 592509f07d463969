//! Seeded generators for random scalars, subspaces, orthocomplemented pairs
//! and partial operators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Matrix, Vector};
use crate::ortho_lattice::OrthoSubspace;
use crate::partial_op::{PartialOperator, PartialProjection};
use crate::scalars::{Field, Rational, Scalar};
use crate::subspace::Subspace;

use num_bigint::BigInt;

#[derive(Debug)]
pub struct Sampler {
    field: Field,
    dim: usize,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(field: Field, dim: usize, seed: u64) -> Self {
        Self { field, dim, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn small_rational(&mut self) -> Rational {
        let p: i64 = self.rng.gen_range(-3..=3);
        let q: i64 = self.rng.gen_range(1..=3);
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    /// Entries drawn from `{−3..3}/{1..3}`, both parts in ℚ(i).
    pub fn scalar(&mut self) -> Scalar {
        let re = self.small_rational();
        match self.field {
            Field::Q => Scalar::real(re),
            Field::Qi => Scalar::new(re, self.small_rational()),
        }
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let z = self.scalar();
            if !z.is_zero() {
                return z;
            }
        }
    }

    pub fn vector(&mut self) -> Vector {
        Vector::new((0..self.dim).map(|_| self.scalar()).collect())
    }

    pub fn matrix(&mut self) -> Matrix {
        let rows = (0..self.dim).map(|_| (0..self.dim).map(|_| self.scalar()).collect()).collect();
        Matrix::from_rows(rows, self.dim).expect("square")
    }

    pub fn gen_range(&mut self, lo: usize, hi_inclusive: usize) -> usize {
        self.rng.gen_range(lo..=hi_inclusive)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    /// A random combination of the basis of `s`.
    pub fn vector_in(&mut self, s: &Subspace) -> Vector {
        let mut v = Vector::zeros(self.dim);
        for b in s.basis_vectors() {
            v = v.add(&b.scale(&self.scalar()));
        }
        v
    }

    pub fn nonzero_vector_in(&mut self, s: &Subspace) -> Option<Vector> {
        if s.is_zero() {
            return None;
        }
        loop {
            let v = self.vector_in(s);
            if !v.is_zero() {
                return Some(v);
            }
        }
    }

    /// Span of `k ≤ dim` random vectors.
    pub fn subspace(&mut self) -> Subspace {
        let k = self.rng.gen_range(0..=self.dim);
        let vs: Vec<Vector> = (0..k).map(|_| self.vector()).collect();
        Subspace::span(self.field, self.dim, &vs).expect("sampled vectors fit")
    }

    /// A random subspace of `s`.
    pub fn subspace_within(&mut self, s: &Subspace) -> Subspace {
        let k = self.rng.gen_range(0..=s.dim());
        let vs: Vec<Vector> = (0..k).map(|_| self.vector_in(s)).collect();
        Subspace::span(self.field, self.dim, &vs).expect("sampled vectors fit")
    }

    /// `L¹` a random span, `L⁰` a random subspace of `(L¹)^⊥` (sometimes all
    /// of it, giving a total pair).
    pub fn ortho(&mut self) -> OrthoSubspace {
        let one = self.subspace();
        let perp = one.perp();
        let zero = if self.coin(0.25) { perp } else { self.subspace_within(&perp) };
        OrthoSubspace::new(one, zero).expect("zero component sampled inside the orthocomplement")
    }

    pub fn ortho_triple(&mut self) -> (OrthoSubspace, OrthoSubspace, OrthoSubspace) {
        (self.ortho(), self.ortho(), self.ortho())
    }

    pub fn subspace_triple(&mut self) -> (Subspace, Subspace, Subspace) {
        (self.subspace(), self.subspace(), self.subspace())
    }

    /// A pair `L ≤ M`: `M⁰ ⊆ L⁰` and `M¹ = L¹ ∨ K` with `K ⊆ (M⁰)^⊥`.
    pub fn ordered_pair(&mut self) -> (OrthoSubspace, OrthoSubspace) {
        let l = self.ortho();
        let m0 = self.subspace_within(l.zero());
        let k = self.subspace_within(&m0.perp());
        let m1 = l.one().join(&k).expect("same ambient");
        let m = OrthoSubspace::new(m1, m0).expect("constructed orthogonal");
        (l, m)
    }

    /// A random vector of `dom(l)`.
    pub fn point_in(&mut self, l: &OrthoSubspace) -> Vector {
        self.vector_in(&l.dom())
    }

    /// An operator with random domain and random action.
    pub fn operator(&mut self) -> PartialOperator {
        let dom = if self.coin(0.2) { Subspace::whole(self.field, self.dim) } else { self.subspace() };
        PartialOperator::new(dom, self.matrix()).expect("sampled in field")
    }

    pub fn total_operator(&mut self) -> PartialOperator {
        PartialOperator::new(Subspace::whole(self.field, self.dim), self.matrix()).expect("sampled in field")
    }

    /// An orthogonal basis of ℚⁿ (or ℚ(i)ⁿ) via unnormalized Gram–Schmidt.
    pub fn orthogonal_basis(&mut self) -> Vec<Vector> {
        loop {
            let mut basis: Vec<Vector> = Vec::new();
            for _ in 0..self.dim {
                let mut v = self.vector();
                for b in &basis {
                    let c = v.dot_conj(b).checked_div(&Scalar::real(b.norm_sq())).expect("basis vectors are nonzero");
                    v = v.sub(&b.scale(&c));
                }
                if v.is_zero() {
                    break;
                }
                basis.push(v);
            }
            if basis.len() == self.dim {
                return basis;
            }
        }
    }

    /// Two partial projections diagonal in a common random orthogonal basis.
    /// With `P` on `span D_P` fixing `span A_P` and `Q` likewise, the pair
    /// commutes exactly when `D_P∖D_Q ⊆ A_P` and `D_Q∖D_P ⊆ A_Q`; the
    /// subsets are drawn so this holds.
    pub fn commuting_pair(&mut self, same_domain: bool) -> (PartialProjection, PartialProjection) {
        let basis = self.orthogonal_basis();
        let n = self.dim;
        let d_p: Vec<bool> = (0..n).map(|_| self.coin(0.7)).collect();
        let d_q: Vec<bool> = if same_domain { d_p.clone() } else { (0..n).map(|_| self.coin(0.7)).collect() };
        let mut choose_a = |d: &[bool], other: &[bool]| -> Vec<bool> {
            (0..n).map(|k| d[k] && (!other[k] || self.coin(0.5))).collect()
        };
        let a_p = choose_a(&d_p, &d_q);
        let a_q = choose_a(&d_q, &d_p);
        let build = |d: &[bool], a: &[bool]| {
            let one: Vec<Vector> = (0..n).filter(|&k| a[k]).map(|k| basis[k].clone()).collect();
            let zero: Vec<Vector> = (0..n).filter(|&k| d[k] && !a[k]).map(|k| basis[k].clone()).collect();
            let l = OrthoSubspace::new(
                Subspace::span(self.field, n, &one).expect("fits"),
                Subspace::span(self.field, n, &zero).expect("fits"),
            )
            .expect("orthogonal basis");
            crate::partial_op::projection_of(&l)
        };
        (build(&d_p, &a_p), build(&d_q, &a_q))
    }
}
