//! Exact dense vectors and matrices: RREF, null spaces, solves and
//! Gram-matrix projections.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{Field, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn new(entries: Vec<Scalar>) -> Self {
        Self(entries)
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Self(xs.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![Scalar::zero(); n])
    }

    pub fn unit(n: usize, k: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[k] = Scalar::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.0
    }

    pub fn get(&self, k: usize) -> &Scalar {
        &self.0[k]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn in_field(&self, field: Field) -> bool {
        self.0.iter().all(|z| field.contains(z))
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() })
        }
    }

    /// `⟨x, y⟩ = Σ xᵢ·conj(yᵢ)`.
    pub fn inner(&self, other: &Self) -> Result<Scalar> {
        self.check_dim(other)?;
        Ok(self.dot_conj(other))
    }

    pub(crate) fn dot_conj(&self, other: &Self) -> Scalar {
        let mut acc = Scalar::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * &b.conj());
            }
        }
        acc
    }

    pub fn norm_sq(&self) -> Rational {
        self.0.iter().map(Scalar::norm_sq).fold(Rational::zero(), |a, b| a + b)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Self(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|a| -a).collect())
    }

    pub fn conj(&self) -> Self {
        Self(self.0.iter().map(Scalar::conj).collect())
    }

    pub fn encode(&self, field: Field) -> Vec<String> {
        self.0.iter().map(|z| z.encode(field)).collect()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, z) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{z}")?;
        }
        f.write_str(")")
    }
}

impl From<Vec<Scalar>> for Vector {
    fn from(v: Vec<Scalar>) -> Self {
        Self(v)
    }
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row-echelon form together with its rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.set(k, k, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Self> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Self { rows: r, cols, data })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect();
        Self::from_rows(rows, cols).expect("ragged integer rows")
    }

    /// Matrix whose rows are `vs`, each of length `cols`.
    pub fn from_row_vectors(vs: &[Vector], cols: usize) -> Result<Self> {
        Self::from_rows(vs.iter().map(|v| v.entries().to_vec()).collect(), cols)
    }

    /// Matrix whose columns are `vs`, each of length `rows`.
    pub fn from_columns(vs: &[Vector], rows: usize) -> Result<Self> {
        Ok(Self::from_row_vectors(vs, rows)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, z: Scalar) {
        self.data[r * self.cols + c] = z;
    }

    pub fn row(&self, r: usize) -> Vector {
        Vector::new(self.data[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector::new((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn column_vectors(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn in_field(&self, field: Field) -> bool {
        self.data.iter().all(|z| field.contains(z))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn conj(&self) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(Scalar::conj).collect() }
    }

    pub fn conj_transpose(&self) -> Self {
        self.transpose().conj()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &Vector) -> Result<Vector> {
        if self.cols != x.dim() {
            return Err(Error::DimensionMismatch { expected: self.cols, found: x.dim() });
        }
        Ok(self.apply(x))
    }

    pub(crate) fn apply(&self, x: &Vector) -> Vector {
        Vector::new(
            (0..self.rows)
                .map(|r| {
                    let mut acc = Scalar::zero();
                    for (a, b) in self.data[r * self.cols..(r + 1) * self.cols].iter().zip(x.entries()) {
                        if !a.is_zero() && !b.is_zero() {
                            acc += &(a * b);
                        }
                    }
                    acc
                })
                .collect(),
        )
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * k).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.cols });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Self { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: other.rows });
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(&self.data[r * self.cols..(r + 1) * self.cols]);
            data.extend_from_slice(&other.data[r * other.cols..(r + 1) * other.cols]);
        }
        Ok(Self { rows: self.rows, cols, data })
    }

    /// Gauss–Jordan elimination; the pivot is the first nonzero entry in
    /// column order.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m.get(lead, c).recip().expect("pivot is nonzero");
            for k in c..m.cols {
                let z = m.get(lead, k) * &inv;
                m.set(lead, k, z);
            }
            for r in 0..m.rows {
                if r == lead {
                    continue;
                }
                let f = m.get(r, c).clone();
                if f.is_zero() {
                    continue;
                }
                for k in c..m.cols {
                    let pk = m.get(lead, k);
                    if !pk.is_zero() {
                        let z = m.get(r, k) - &(&f * pk);
                        m.set(r, k, z);
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        Rref { matrix: m, rank: lead, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{x : self·x = 0}` as the columns of the result, one per
    /// free column of the RREF.
    pub fn null_space(&self) -> Self {
        let Rref { matrix: r, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            out.set(f, j, Scalar::one());
            for (row, &p) in pivots.iter().enumerate() {
                out.set(p, j, -r.get(row, f));
            }
        }
        out
    }

    /// Some `x` with `self·x = b`, free variables set to zero, or `None` if
    /// the system is inconsistent.
    pub fn solve(&self, b: &Vector) -> Result<Option<Vector>> {
        if b.dim() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.dim() });
        }
        let aug = self.hstack(&Self::from_columns(std::slice::from_ref(b), self.rows)?)?;
        let Rref { matrix: r, pivots, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Ok(Some(Vector::new(x)))
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let Rref { matrix: r, rank, .. } = self.hstack(&Self::identity(n)).ok()?.rref();
        if rank < n || (0..n).any(|k| !r.get(k, k).is_one()) {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Orthogonal projection onto the column space of `basis`:
    /// `B (B* B)⁻¹ B*`.
    pub fn gram_projection(basis: &Self) -> Result<Self> {
        let n = basis.rows;
        if basis.cols == 0 {
            return Ok(Self::zeros(n, n));
        }
        let bh = basis.conj_transpose();
        let gram = bh.mul(basis)?;
        let inv = gram.inverse().ok_or(Error::SingularGram)?;
        basis.mul(&inv)?.mul(&bh)
    }

    pub fn is_hermitian(&self) -> bool {
        self.rows == self.cols && *self == self.conj_transpose()
    }

    /// For a Hermitian matrix `G`, `None` if `G` is positive semidefinite,
    /// otherwise some `c` with `c* G c < 0`.
    pub fn psd_violation(&self) -> Option<Vector> {
        debug_assert!(self.is_hermitian());
        let n = self.rows;
        let mut a = self.clone();
        let mut e = Self::identity(n);
        for k in 0..n {
            let p = a.get(k, k).re().clone();
            if p.is_negative() {
                return Some(e.conj_transpose().column(k));
            }
            if p.is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !a.get(k, j).is_zero()) {
                    let g = a.get(k, j).clone();
                    let lambda = -(a.get(j, j).re() + Rational::from_integer(1.into()))
                        / (Rational::from_integer(2.into()) * g.norm_sq());
                    let mut v = Vector::zeros(n);
                    v.0[k] = g.scale_real(&lambda);
                    v.0[j] = Scalar::one();
                    return Some(e.conj_transpose().apply(&v));
                }
                continue;
            }
            let pinv = Scalar::real(p.recip());
            for j in k + 1..n {
                let f = a.get(j, k) * &pinv;
                if f.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let z = a.get(j, c) - &(&f * a.get(k, c));
                    a.set(j, c, z);
                    let z = e.get(j, c) - &(&f * e.get(k, c));
                    e.set(j, c, z);
                }
                let fc = f.conj();
                for r in 0..n {
                    let z = a.get(r, j) - &(&fc * a.get(r, k));
                    a.set(r, j, z);
                }
            }
        }
        None
    }

    pub fn is_positive_semidefinite(&self) -> bool {
        self.is_hermitian() && self.psd_violation().is_none()
    }

    /// `x* self x`.
    pub fn quadratic_form(&self, x: &Vector) -> Scalar {
        self.apply(x).dot_conj(x)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", self.row(r))?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(p: i64, d: i64) -> Scalar {
        Scalar::ratio(p, d)
    }

    #[test]
    fn inner_examples() {
        assert_eq!(Vector::from_ints(&[1, 2]).inner(&Vector::from_ints(&[3, 4])).unwrap(), Scalar::from_int(11));
        let iv = Vector::new(vec![Scalar::i(), Scalar::zero()]);
        assert_eq!(iv.inner(&iv).unwrap(), Scalar::one());
        assert!(Vector::from_ints(&[1, 1]).inner(&Vector::from_ints(&[1, -1])).unwrap().is_zero());
        assert!(matches!(
            Vector::from_ints(&[1]).inner(&Vector::from_ints(&[1, 2])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rref_examples() {
        let r = Matrix::from_int_rows(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r.matrix, Matrix::from_int_rows(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        let i3 = Matrix::identity(3);
        assert_eq!(i3.rref().matrix, i3);
        assert_eq!(i3.rank(), 3);
        assert_eq!(Matrix::zeros(2, 3).rref().rank, 0);
    }

    #[test]
    fn null_space_examples() {
        assert_eq!(Matrix::identity(2).null_space().cols(), 0);
        let ns = Matrix::from_int_rows(&[&[1, 1]]).null_space();
        assert_eq!(ns.column_vectors(), vec![Vector::from_ints(&[-1, 1])]);
        assert_eq!(Matrix::zeros(1, 2).null_space().cols(), 2);
    }

    #[test]
    fn solve_examples() {
        let b = Vector::from_ints(&[5, 7]);
        assert_eq!(Matrix::identity(2).solve(&b).unwrap(), Some(b));
        let x = Matrix::from_int_rows(&[&[1, 1]]).solve(&Vector::from_ints(&[2])).unwrap();
        assert_eq!(x, Some(Vector::from_ints(&[2, 0])));
        assert_eq!(Matrix::from_int_rows(&[&[1], &[1]]).solve(&Vector::from_ints(&[1, 2])).unwrap(), None);
        assert!(Matrix::identity(2).solve(&Vector::from_ints(&[1])).is_err());
    }

    #[test]
    fn gram_projection_examples() {
        let e1 = Matrix::from_int_rows(&[&[1], &[0]]);
        assert_eq!(Matrix::gram_projection(&e1).unwrap(), Matrix::from_int_rows(&[&[1, 0], &[0, 0]]));
        let diag = Matrix::from_int_rows(&[&[1], &[1]]);
        let half = Matrix::from_rows(vec![vec![q(1, 2), q(1, 2)], vec![q(1, 2), q(1, 2)]], 2).unwrap();
        assert_eq!(Matrix::gram_projection(&diag).unwrap(), half);
        assert_eq!(Matrix::gram_projection(&Matrix::identity(3)).unwrap(), Matrix::identity(3));
        let dep = Matrix::from_int_rows(&[&[1, 2], &[1, 2]]);
        assert_eq!(Matrix::gram_projection(&dep), Err(Error::SingularGram));
    }

    #[test]
    fn psd_witness() {
        let g = Matrix::from_int_rows(&[&[1, 0], &[0, -3]]);
        let c = g.psd_violation().unwrap();
        assert!(g.quadratic_form(&c).re().is_negative());
        let g = Matrix::from_int_rows(&[&[0, 2], &[2, 5]]);
        let c = g.psd_violation().unwrap();
        assert!(g.quadratic_form(&c).re().is_negative());
        let h = Matrix::from_rows(
            vec![vec![q(1, 1), Scalar::i()], vec![-Scalar::i(), q(1, 1)]],
            2,
        )
        .unwrap();
        assert!(h.is_positive_semidefinite());
        let h2 = Matrix::from_rows(
            vec![vec![q(1, 1), Scalar::from_int(2) * Scalar::i()], vec![Scalar::from_int(-2) * Scalar::i(), q(1, 1)]],
            2,
        )
        .unwrap();
        let c = h2.psd_violation().unwrap();
        assert!(h2.quadratic_form(&c).re().is_negative());
    }

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec((-3i64..=3, -2i64..=2), rows * cols).prop_map(move |v| {
            let data = v.into_iter().map(|(a, b)| Scalar::gaussian((a, 1), (b, 1))).collect::<Vec<_>>();
            Matrix::from_rows(data.chunks(cols).map(|c| c.to_vec()).collect(), cols).unwrap()
        })
    }

    fn row_space_contains(m: &Matrix, v: &Vector) -> bool {
        m.transpose().solve(v).unwrap().is_some()
    }

    proptest! {
        #[test]
        fn rref_idempotent_and_row_space_preserved(m in small_matrix(3, 4)) {
            let r = m.rref();
            prop_assert_eq!(&r.matrix.rref().matrix, &r.matrix);
            for v in m.row_vectors() {
                prop_assert!(row_space_contains(&r.matrix, &v));
            }
            for v in r.matrix.row_vectors() {
                prop_assert!(row_space_contains(&m, &v));
            }
        }

        #[test]
        fn null_space_is_kernel(m in small_matrix(3, 4)) {
            let ns = m.null_space();
            prop_assert!(m.mul(&ns).unwrap().is_zero());
            prop_assert_eq!(ns.rank(), 4 - m.rank());
        }

        #[test]
        fn gram_projection_is_orthogonal_projection(m in small_matrix(4, 2)) {
            let r = m.transpose().rref();
            let basis = Matrix::from_columns(&r.matrix.row_vectors()[..r.rank], 4).unwrap();
            let p = Matrix::gram_projection(&basis).unwrap();
            prop_assert_eq!(&p.mul(&p).unwrap(), &p);
            prop_assert_eq!(&p.conj_transpose(), &p);
            for b in basis.column_vectors() {
                prop_assert_eq!(p.apply(&b), b);
            }
        }

        #[test]
        fn inner_axioms(a in small_matrix(3, 3), k in (-3i64..3, -3i64..3)) {
            let (x, y, z) = (a.row(0), a.row(1), a.row(2));
            let k = Scalar::gaussian((k.0, 1), (k.1, 1));
            prop_assert_eq!(x.inner(&y).unwrap(), y.inner(&x).unwrap().conj());
            prop_assert_eq!(
                x.scale(&k).add(&z).inner(&y).unwrap(),
                &(&k * &x.inner(&y).unwrap()) + &z.inner(&y).unwrap()
            );
            let n = x.inner(&x).unwrap();
            prop_assert!(n.is_real() && !n.re().is_negative());
            prop_assert_eq!(n.is_zero(), x.is_zero());
        }
    }
}
