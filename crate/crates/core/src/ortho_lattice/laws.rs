//! The ComplQL law suite on `S(H)`.
//!
//! Every conditional law is evaluated on the raw triple and on derived
//! candidates built from it, so that hypotheses about totality and order
//! are actually met on random input:
//!
//! * `T  = (L¹, L¹^⊥)` and `T_M = (M¹, M¹^⊥)`, the total versions of L, M;
//! * `T⊥ = (K, K^⊥)` with `K = M¹ ∧ L¹^⊥`, a total element with `T ≤ −T⊥`.

use super::OrthoSubspace;
use crate::error::Result;
use crate::report::{Expectation, SuiteReport, Verdict, Witness};

pub const COMPLQL_LAWS: &[&str] = &[
    "ComplQL0", "ComplQL1", "ComplQL2", "ComplQL3", "ComplQL3_converse", "ComplQL4", "ComplQL5", "ComplQL6",
    "ComplQL7", "ComplQL8", "corComplQL_i", "corComplQL_ii", "corComplQL_iii", "corComplQL_iv",
    "corComplQL_v", "corComplQL_vi", "corComplQL_vii", "corComplQL_viii", "cor7_i", "wedgetotal",
    "swapalg1_i", "swapalg1_ii", "swapalg1_iii", "swapalg1_iv", "swapalg1_v", "swapalg1_vi",
    "swapalg1_vii", "swapalg1_viii", "perp2_i", "perp2_ii", "perp2_iii", "perp2_iv",
];

fn eq(lhs: &OrthoSubspace, rhs: &OrthoSubspace, what: &str) -> Verdict {
    if lhs == rhs {
        return Verdict::Holds;
    }
    let w = Witness::subspace_neq(&format!("{what} (first component)"), lhs.one(), rhs.one())
        .or_else(|| Witness::subspace_neq(&format!("{what} (second component)"), lhs.zero(), rhs.zero()))
        .unwrap_or_else(|| Witness::new(what));
    Verdict::Fails(w)
}

fn leq(lhs: &OrthoSubspace, rhs: &OrthoSubspace, what: &str) -> Result<Verdict> {
    Ok(match lhs.leq_witness(rhs)? {
        None => Verdict::Holds,
        Some(v) => Verdict::Fails(Witness::new(what).vector("witness", &v, lhs.field())),
    })
}

fn total(x: &OrthoSubspace, what: &str) -> Verdict {
    if x.is_total() {
        Verdict::Holds
    } else {
        Verdict::Fails(Witness::new(what).subspace("dom", &x.dom()))
    }
}

struct Derived {
    t: OrthoSubspace,
    t_m: OrthoSubspace,
    t_orth: OrthoSubspace,
}

fn derive(l: &OrthoSubspace, m: &OrthoSubspace) -> Result<Derived> {
    let k = m.one().meet(&l.one().perp())?;
    Ok(Derived {
        t: OrthoSubspace::total(l.one().clone()),
        t_m: OrthoSubspace::total(m.one().clone()),
        t_orth: OrthoSubspace::total(k),
    })
}

/// Evaluates the ComplQL axioms and their corollaries on every triple.
pub fn check_complql(triples: &[(OrthoSubspace, OrthoSubspace, OrthoSubspace)]) -> Result<SuiteReport> {
    let mut suite = SuiteReport::new("complql");
    for law in COMPLQL_LAWS {
        suite.declare(law, Expectation::Proved);
    }
    for (idx, (l, m, n)) in triples.iter().enumerate() {
        l.meet(m)?;
        l.meet(n)?;
        check_triple(&mut suite, idx, l, m, n)?;
    }
    Ok(suite)
}

fn check_triple(
    suite: &mut SuiteReport,
    idx: usize,
    l: &OrthoSubspace,
    m: &OrthoSubspace,
    n: &OrthoSubspace,
) -> Result<()> {
    let (f, amb) = (l.field(), l.ambient_dim());
    let bottom = OrthoSubspace::bottom(f, amb);
    let top = OrthoSubspace::top(f, amb);
    let Derived { t, t_m, t_orth } = derive(l, m)?;
    let mut first_seven = Verdict::Holds;
    let mut rec = |suite: &mut SuiteReport, law: &str, v: Verdict| {
        if ["ComplQL1", "ComplQL2", "ComplQL3", "ComplQL4", "ComplQL5", "ComplQL6", "ComplQL7"].contains(&law) {
            first_seven = first_seven.clone().and(v.clone());
        }
        suite.record(law, idx, v);
    };

    let v0 = if amb == 0 {
        Verdict::HypothesisNotMet
    } else {
        let mut v = total(&bottom, "0 total").and(total(&top, "1 total"));
        if bottom.neq_witness(&top)?.is_none() {
            v = v.and(Verdict::fail("0 ≠ 1 has no witness"));
        }
        v
    };
    rec(suite, "ComplQL0", v0);

    for (a, b, c) in [(l, m, n), (&t, &t_m, &t_orth)] {
        let ab = a.meet(b)?;
        let ajb = a.join(b)?;
        let mut v = leq(&ab, a, "L∧M ≤ L")?
            .and(leq(&ab, b, "L∧M ≤ M")?)
            .and(leq(a, &ajb, "L ≤ L∨M")?)
            .and(leq(b, &ajb, "M ≤ L∨M")?);
        for k in [c.clone(), c.meet(&ab)?] {
            if (k.leq(a)? && k.leq(b)?) != k.leq(&ab)? {
                v = v.and(Verdict::fail("N ≤ L & N ≤ M ⇔ N ≤ L∧M"));
            }
        }
        for k in [c.clone(), c.join(&ajb)?] {
            if (a.leq(&k)? && b.leq(&k)?) != ajb.leq(&k)? {
                v = v.and(Verdict::fail("L ≤ N & M ≤ N ⇔ L∨M ≤ N"));
            }
        }
        rec(suite, "ComplQL1", v);
    }

    let mut v = Verdict::Holds;
    for x in [l, m, n] {
        v = v.and(leq(&bottom, x, "0 ≤ L")?).and(leq(x, &top, "L ≤ 1")?);
    }
    rec(suite, "ComplQL2", v);

    let lm = l.meet(m)?;
    for (a, b) in [(l, m), (&lm, m), (&t, &t.join(m)?)] {
        let v = if a.leq(b)? { leq(&b.neg(), &a.neg(), "−M ≤ −L")? } else { Verdict::HypothesisNotMet };
        rec(suite, "ComplQL3", v);
        let v = if b.neg().leq(&a.neg())? { leq(a, b, "L ≤ M")? } else { Verdict::HypothesisNotMet };
        suite.record("ComplQL3_converse", idx, v);
    }

    for x in [l, m, n] {
        rec(suite, "ComplQL4", eq(x, &x.neg().neg(), "L = −(−L)"));
        let v = eq(&x.meet(&x.neg())?, &x.zero_of(), "L ∧ −L = 0_L").and(eq(
            &x.join(&x.neg())?,
            &x.one_of(),
            "L ∨ −L = 1_L",
        ));
        rec(suite, "ComplQL5", v);
    }

    for x in [l, &t, &t_m] {
        let v = Verdict::given(x.is_total(), || total(&x.neg(), "−L total"));
        rec(suite, "ComplQL6", v);
    }

    for (a, b) in [(l, m), (&t, &t_m), (&t, &t_orth)] {
        let hyp = a.is_total() && b.is_total() && a.leq(&b.neg())?;
        let join = a.join(b)?;
        rec(suite, "ComplQL7", Verdict::given(hyp, || total(&join, "L ∨ M total")));
        let v = Verdict::given(hyp, || {
            Verdict::from_witness(Witness::subspace_neq("L¹ + M¹ closed", &a.one().sum(b.one()).unwrap(), join.one()))
        });
        suite.record("cor7_i", idx, v);
    }

    for (a, b) in [(l, m), (&t, &t.join(m)?), (&t, &t)] {
        let hyp = a.is_total() && a.leq(b)?;
        let v = if hyp { eq(b, &a.join(&b.minus(a)?)?, "M = L ∨ (M − L)") } else { Verdict::HypothesisNotMet };
        suite.record("ComplQL8", idx, v);
    }

    suite.record("corComplQL_ii", idx, first_seven);

    for (a, b) in [(l, m), (&t, &t), (&t, &t.join(m)?)] {
        let hyp = a.is_total() && a.leq(b)? && b.minus(a)? == bottom;
        let v = if hyp { eq(a, b, "L = M") } else { Verdict::HypothesisNotMet };
        suite.record("corComplQL_i", idx, v);
    }

    suite.record(
        "corComplQL_iii",
        idx,
        eq(&bottom, &top.neg(), "0 = −1").and(eq(&top, &bottom.neg(), "1 = −0")),
    );
    for (a, b) in [(l, m), (m, n), (&t, &t_m)] {
        suite.record("corComplQL_iv", idx, eq(&a.join(b)?.neg(), &a.neg().meet(&b.neg())?, "−(L∨M) = −L ∧ −M"));
        suite.record("corComplQL_v", idx, eq(&a.meet(b)?.neg(), &a.neg().join(&b.neg())?, "−(L∧M) = −L ∨ −M"));
    }

    let t_up = t.join(&t_m)?;
    for (a, b) in [(l, m), (&t, &t_up), (&t,&t)] {
        let hyp = a.is_total() && b.is_total() && a.leq(b)?;
        let v = if hyp { total(&b.minus(a)?, "M − L total") } else { Verdict::HypothesisNotMet };
        suite.record("corComplQL_vi", idx, v);
    }

    for (a, b) in [(l, m), (&t, &t_orth)] {
        let hyp = a.is_total() && b.is_total() && a.leq(&b.neg())?;
        let v = if hyp { eq(b, &a.join(b)?.minus(a)?, "M = (L ∨ M) − L") } else { Verdict::HypothesisNotMet };
        suite.record("corComplQL_vii", idx, v);
    }

    for (a, b) in [(l, m), (&t, &t), (&t, &t_m)] {
        let hyp = a.is_total() && b.is_total() && a.neg() == b.neg();
        suite.record("corComplQL_viii", idx, Verdict::given(hyp, || eq(a, b, "L = M")));
    }

    let (nt, nto) = (t.neg(), t_orth.neg());
    for (a, b) in [(l, m), (&nto, &nt)] {
        let hyp = a.is_total() && b.is_total() && b.neg().leq(a)?;
        let meet = a.meet(b)?;
        suite.record("wedgetotal", idx, Verdict::given(hyp, || total(&meet, "L ∧ M total")));
    }

    for x in [l, m, n] {
        suite.record("swapalg1_i", idx, eq(&x.zero_of().neg(), &x.one_of(), "−0_L = 1_L"));
        suite.record("swapalg1_ii", idx, eq(&x.neg().zero_of(), &x.zero_of(), "0_{−L} = 0_L"));
        suite.record(
            "swapalg1_iii",
            idx,
            eq(&bottom.zero_of(), &bottom, "0_0 = 0").and(eq(&top.one_of(), &top, "1_1 = 1")),
        );
        suite.record(
            "swapalg1_iv",
            idx,
            eq(&x.zero_of().zero_of(), &x.zero_of(), "0_{0_L} = 0_L")
                .and(eq(&x.one_of().zero_of(), &x.zero_of(), "0_{1_L} = 0_L")),
        );
        suite.record("swapalg1_v", idx, eq(&bottom.join(x)?, x, "0 ∨ L = L"));
        suite.record("swapalg1_vi", idx, eq(&x.zero_of().meet(x)?, &x.zero_of(), "0_L ∧ L = 0_L"));
        suite.record(
            "swapalg1_vii",
            idx,
            eq(&top.meet(x)?, x, "1 ∧ L = L").and(eq(&x.one_of().meet(x)?, x, "1_L ∧ L = L")),
        );
        suite.record("swapalg1_viii", idx, eq(&x.one_of().join(x)?, &x.one_of(), "1_L ∨ L = 1_L"));
    }

    for (a, b) in [(&t, &t_m), (&t, &t_orth), (l, m)] {
        let hyp = a.is_total() && b.is_total();
        let v = if hyp {
            Verdict::from_bool(a.perp_to(b)? == a.one().perp_rel(b.one())?, "L ⊥ M ⇔ L¹ ⊥ M¹")
        } else {
            Verdict::HypothesisNotMet
        };
        suite.record("perp2_i", idx, v);
    }
    for (a, b) in [(&t, &t_orth), (l, m)] {
        let v = if a.perp_to(b)? { Verdict::from_bool(b.perp_to(a)?, "M ⊥ L") } else { Verdict::HypothesisNotMet };
        suite.record("perp2_ii", idx, v);
    }
    let n_below = n.meet(&t)?;
    for (a, b, c) in [(&t, &t_orth, &n_below), (l, m, n)] {
        let hyp = a.perp_to(b)? && c.leq(a)?;
        let v = if hyp { Verdict::from_bool(c.perp_to(b)?, "N ⊥ M") } else { Verdict::HypothesisNotMet };
        suite.record("perp2_iii", idx, v);
    }
    for (a, b, c) in [(l, m, n), (&t_orth, &t, &t.meet(n)?)] {
        let lhs = a.perp_to(&b.join(c)?)?;
        let rhs = a.perp_to(b)? && a.perp_to(c)?;
        suite.record("perp2_iv", idx, Verdict::from_bool(lhs == rhs, "L ⊥ (M ∨ N) ⇔ L ⊥ M & L ⊥ N"));
    }
    Ok(())
}
