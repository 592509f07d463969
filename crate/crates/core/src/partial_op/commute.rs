//! Calculus of commuting partial projections.

use serde::Serialize;

use super::{compose, eq_failure, projection_of, subspaces_of, PartialOperator, PartialProjection};
use crate::error::{Error, Result};
use crate::ortho_lattice::OrthoSubspace;
use crate::report::{ClauseReport, Verdict, Witness};
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommReport {
    pub clauses: ClauseReport,
}

fn op_verdict(what: &str, t: &PartialOperator, u: &PartialOperator) -> Result<Verdict> {
    Ok(match eq_failure(t, u)? {
        None => Verdict::Holds,
        Some(x) => Verdict::Fails(Witness::new(what).vector("x", &x, t.field())),
    })
}

fn subspace_verdict(what: &str, lhs: &Subspace, rhs: &Subspace) -> Verdict {
    Verdict::from_witness(Witness::subspace_neq(what, lhs, rhs))
}

/// The consequences of `P∘Q = Q∘P`. Fails with [`Error::NotCommuting`]
/// when the composites differ.
pub fn commuting_calculus(p: &PartialProjection, q: &PartialProjection) -> Result<CommReport> {
    let (po, qo) = (p.as_operator(), q.as_operator());
    let qp = compose(qo, po)?;
    let pq = compose(po, qo)?;
    if let Some(x) = eq_failure(&qp, &pq)? {
        return Err(Error::NotCommuting(format!("Q∘P and P∘Q differ at {x}")));
    }
    let (lp, lq) = (subspaces_of(p), subspaces_of(q));
    let mut r = ClauseReport::new();

    let ones = lp.one().meet(lq.one())?;
    let zeros = lp.zero().join(lq.zero())?;
    r.push(
        "i",
        match ones.oplus(&zeros)? {
            Some(d) => subspace_verdict("dom(P∘Q) ≠ (L_P¹ ∧ L_Q¹) ⊕ (L_P⁰ ∨ L_Q⁰)", pq.dom(), &d),
            None => Verdict::fail("L_P¹ ∧ L_Q¹ is not orthogonal to L_P⁰ ∨ L_Q⁰"),
        },
    );
    r.push("ii", subspace_verdict("L_P⁰ ∨ L_Q⁰ ≠ L_P⁰ + L_Q⁰", &zeros, &lp.zero().sum(lq.zero())?));
    r.push("iii", op_verdict("P ∧ Q ≠ Q∘P", p.meet(q)?.as_operator(), &qp)?);

    let (np, nq) = (p.complement(), q.complement());
    let hyp = compose(nq.as_operator(), np.as_operator())?.dom() == compose(np.as_operator(), nq.as_operator())?.dom();
    let iv = if hyp {
        let rhs = po.add(qo)?.sub(&qp)?;
        op_verdict("P ∨ Q ≠ P + Q − Q∘P", p.join(q)?.as_operator(), &rhs)?.and(subspace_verdict(
            "L_P¹ ∨ L_Q¹ ≠ L_P¹ + L_Q¹",
            &lp.one().join(lq.one())?,
            &lp.one().sum(lq.one())?,
        ))
    } else {
        Verdict::HypothesisNotMet
    };
    r.push("iv", iv);
    Ok(CommReport { clauses: r })
}

/// For total `L ≤ −M`: `L¹ + M¹` is closed, `P_L∘P_M = 0` and
/// `P_{L∨M} = P_L + P_M`.
pub fn check_cor7(l: &OrthoSubspace, m: &OrthoSubspace) -> Result<ClauseReport> {
    let mut r = ClauseReport::new();
    let hyp = l.is_total() && m.is_total() && l.leq(&m.neg())?;
    if !hyp {
        for c in ["i", "ii", "iii"] {
            r.push(c, Verdict::HypothesisNotMet);
        }
        return Ok(r);
    }
    let sum = l.one().sum(m.one())?;
    r.push("i", subspace_verdict("closure of L + M differs from L + M", &sum.closure(), &sum));
    let (pl, pm) = (projection_of(l), projection_of(m));
    let zero = PartialOperator::zero(l.field(), l.ambient_dim());
    r.push("ii", op_verdict("P_L ∘ P_M ≠ 0", &compose(pl.as_operator(), pm.as_operator())?, &zero)?);
    let join = projection_of(&l.join(m)?);
    r.push("iii", op_verdict("P_{L∨M} ≠ P_L + P_M", join.as_operator(), &pl.as_operator().add(pm.as_operator())?)?);
    Ok(r)
}
