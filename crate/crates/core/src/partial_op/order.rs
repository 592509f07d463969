//! The order `L ≤ M` read through the partial projections `P¹`, `P⁰`.

use serde::Serialize;

use super::{compose, eq_failure, projection_of, PartialOperator};
use crate::error::Result;
use crate::linalg::{Matrix, Vector};
use crate::ortho_lattice::OrthoSubspace;
use crate::report::{ClauseReport, Verdict, Witness};
use crate::scalars::Field;
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderReport {
    pub order_holds: bool,
    /// `None` when both composite equalities of clause (i) hold.
    pub clause_i_equalities: Option<Witness>,
    pub clauses: ClauseReport,
}

struct Projections {
    one: PartialOperator,
    zero: PartialOperator,
}

impl Projections {
    fn of(l: &OrthoSubspace) -> Self {
        Self { one: projection_of(l).into_operator(), zero: projection_of(&l.neg()).into_operator() }
    }
}

fn agree_on(s: &Subspace, t: &PartialOperator, u: &PartialOperator) -> Option<Vector> {
    s.basis_vectors().into_iter().find(|b| t.matrix().apply(b) != u.matrix().apply(b))
}

/// `conj(B)·M·Bᵀ`: the form `x ↦ x*Mx` in the coordinates of `s`.
fn restricted_form(s: &Subspace, m: &Matrix) -> Matrix {
    let b = s.basis();
    b.conj().mul(m).expect("conformable").mul(&b.transpose()).expect("conformable")
}

/// A vector of `s` where `x*·small·x ≤ x*·big·x` fails, if any.
fn form_violation(s: &Subspace, small: &Matrix, big: &Matrix) -> Option<Vector> {
    let diff = big.sub(small).expect("square");
    let c = restricted_form(s, &diff).psd_violation()?;
    Some(s.basis().transpose().apply(&c))
}

fn gram(t: &PartialOperator) -> Matrix {
    t.matrix().conj_transpose().mul(t.matrix()).expect("square")
}

fn vec_fail(what: &str, x: Vector, field: Field) -> Verdict {
    Verdict::Fails(Witness::new(what).vector("x", &x, field))
}

fn subspace_eq(what: &str, lhs: &Subspace, rhs: &Subspace) -> Verdict {
    Verdict::from_witness(Witness::subspace_neq(what, lhs, rhs))
}

/// Norm (`squares = true`) or inner-product monotonicity on `s`:
/// `P_L¹ ≤ P_M¹` and `P_M⁰ ≤ P_L⁰`.
fn monotone(s: &Subspace, pl: &Projections, pm: &Projections, squares: bool, field: Field) -> Verdict {
    let form = |t: &PartialOperator| if squares { gram(t) } else { t.matrix().clone() };
    if let Some(x) = form_violation(s, &form(&pl.one), &form(&pm.one)) {
        return vec_fail("‖P_L¹x‖ ≤ ‖P_M¹x‖ fails", x, field);
    }
    if let Some(x) = form_violation(s, &form(&pm.zero), &form(&pl.zero)) {
        return vec_fail("‖P_M⁰x‖ ≤ ‖P_L⁰x‖ fails", x, field);
    }
    Verdict::Holds
}

/// Every clause of the composite characterization of `L ≤ M`.
pub fn check_order(l: &OrthoSubspace, m: &OrthoSubspace) -> Result<OrderReport> {
    let order = l.leq(m)?;
    let field = l.field();
    let (pl, pm) = (Projections::of(l), Projections::of(m));
    let mut r = ClauseReport::new();

    let ml = compose(&pm.one, &pl.one)?;
    let lm0 = compose(&pl.zero, &pm.zero)?;
    let fail1 = eq_failure(&ml, &pl.one)?;
    let fail0 = eq_failure(&lm0, &pm.zero)?;
    let equalities = fail1.is_none() && fail0.is_none();
    let clause_i_equalities = match (&fail1, &fail0) {
        (Some(x), _) => Some(Witness::new("P_M¹ ∘ P_L¹ ≠ P_L¹").vector("x", x, field)),
        (None, Some(x)) => Some(Witness::new("P_L⁰ ∘ P_M⁰ ≠ P_M⁰").vector("x", x, field)),
        (None, None) => None,
    };
    r.push(
        "i_forward",
        Verdict::given(order, || Verdict::from_witness(clause_i_equalities.clone())),
    );
    r.push(
        "i_backward",
        Verdict::given(equalities, || {
            if order {
                return Verdict::Holds;
            }
            let w = Witness::new("composite equalities hold but L ≰ M");
            Verdict::Fails(match l.leq_witness(m).ok().flatten() {
                Some(x) => w.vector("x", &x, field),
                None => w,
            })
        }),
    );

    let d = l.dom().meet(&m.dom())?;
    let lm1 = compose(&pl.one, &pm.one)?;
    let ml0 = compose(&pm.zero, &pl.zero)?;
    r.push(
        "iia_domains",
        Verdict::given(order, || {
            subspace_eq("dom(P_L¹ ∘ P_M¹) ≠ dom L ∧ dom M", lm1.dom(), &d)
                .and(subspace_eq("dom(P_M⁰ ∘ P_L⁰) ≠ dom L ∧ dom M", ml0.dom(), &d))
        }),
    );
    r.push(
        "iia_actions",
        Verdict::given(order, || match (agree_on(&d, &lm1, &pl.one), agree_on(&d, &ml0, &pm.zero)) {
            (Some(x), _) => vec_fail("P_L¹ ∘ P_M¹ ≠ P_L¹ on dom L ∧ dom M", x, field),
            (None, Some(x)) => vec_fail("P_M⁰ ∘ P_L⁰ ≠ P_M⁰ on dom L ∧ dom M", x, field),
            (None, None) => Verdict::Holds,
        }),
    );
    r.push(
        "meet_domain",
        Verdict::given(order, || {
            let middle = l.zero().meet(m.one()).expect("same ambient");
            let parts = [l.one(), &middle, m.zero()];
            let sum = parts.iter().try_fold(Subspace::zero(field, l.ambient_dim()), |acc, p| acc.sum(p));
            let sum = sum.expect("same ambient");
            let direct = parts.iter().map(|p| p.dim()).sum::<usize>() == sum.dim();
            Verdict::from_bool(direct, "L¹, L⁰ ∧ M¹, M⁰ are not independent")
                .and(subspace_eq("dom L ∧ dom M ≠ L¹ ⊕ (L⁰ ∧ M¹) ⊕ M⁰", &d, &sum))
        }),
    );

    let e = l.one().join(m.zero())?;
    let iib_hyp = e.leq(lm1.dom())?
        && e.leq(ml0.dom())?
        && agree_on(&e, &lm1, &pl.one).is_none()
        && agree_on(&e, &ml0, &pm.zero).is_none();
    r.push("iib", Verdict::given(iib_hyp, || Verdict::from_bool(order, "hypotheses of (iib) hold but L ≰ M")));

    r.push("iiia", Verdict::given(order, || monotone(&d, &pl, &pm, true, field)));
    r.push("iva", Verdict::given(order, || monotone(&d, &pl, &pm, false, field)));
    let same_dom = l.dom() == m.dom();
    let iiib_hyp = same_dom && monotone(&d, &pl, &pm, true, field).holds();
    r.push("iiib", Verdict::given(iiib_hyp, || Verdict::from_bool(order, "norm monotonicity holds but L ≰ M")));
    let ivb_hyp = same_dom && monotone(&d, &pl, &pm, false, field).holds();
    r.push("ivb", Verdict::given(ivb_hyp, || Verdict::from_bool(order, "form monotonicity holds but L ≰ M")));

    Ok(OrderReport { order_holds: order, clause_i_equalities, clauses: r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Vector;

    fn sp(vs: &[&[i64]], n: usize) -> Subspace {
        Subspace::span(Field::Q, n, &vs.iter().map(|v| Vector::from_ints(v)).collect::<Vec<_>>()).unwrap()
    }

    fn o(one: &[&[i64]], zero: &[&[i64]], n: usize) -> OrthoSubspace {
        OrthoSubspace::new(sp(one, n), sp(zero, n)).unwrap()
    }

    #[test]
    fn ordered_example_all_clauses_hold() {
        let l = o(&[&[1, 0, 0]], &[&[0, 1, 0], &[0, 0, 1]], 3);
        let m = o(&[&[1, 0, 0], &[0, 1, 0]], &[&[0, 0, 1]], 3);
        let r = check_order(&l, &m).unwrap();
        assert!(r.order_holds);
        assert!(r.clause_i_equalities.is_none());
        for (name, v) in &r.clauses.clauses {
            assert!(v.holds(), "{name}: {v:?}");
        }
    }

    #[test]
    fn equal_pair() {
        let l = o(&[&[1, 1]], &[], 2);
        let r = check_order(&l, &l).unwrap();
        assert!(r.order_holds && r.clauses.all_hold_or_unmet());
    }

    #[test]
    fn swapped_pair_fails_with_witness() {
        let l = o(&[&[1, 0]], &[&[0, 1]], 2);
        let m = l.neg();
        let r = check_order(&l, &m).unwrap();
        assert!(!r.order_holds);
        let w = r.clause_i_equalities.expect("witness");
        assert_eq!(w.vectors.len(), 1);
        assert!(r.clauses.all_hold_or_unmet());
    }
}
