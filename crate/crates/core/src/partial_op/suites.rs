//! Randomized suites for decomposition, the `i`/`j` bijection and
//! extensionality of operator inequality.

use super::{
    contraction_violation, decompose, eq_failure, norm_preserving_subspace, norm_sq_is_one, op_eq, op_neq,
    projection_of, subspaces_of, PartialOperator, PartialProjection,
};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::ortho_lattice::OrthoSubspace;
use crate::random::Sampler;
use crate::report::{Expectation, SuiteReport, Verdict, Witness};
use crate::scalars::Rational;
use crate::subspace::Subspace;

use num_traits::Zero;

fn sub_eq(what: &str, lhs: &Subspace, rhs: &Subspace) -> Verdict {
    Verdict::from_witness(Witness::subspace_neq(what, lhs, rhs))
}

fn o_eq(what: &str, lhs: &OrthoSubspace, rhs: &OrthoSubspace) -> Verdict {
    sub_eq(&format!("{what} (first components)"), lhs.one(), rhs.one())
        .and(sub_eq(&format!("{what} (second components)"), lhs.zero(), rhs.zero()))
}

fn op_verdict(what: &str, t: &PartialOperator, u: &PartialOperator) -> Result<Verdict> {
    Ok(match eq_failure(t, u)? {
        None => Verdict::Holds,
        Some(x) => Verdict::Fails(Witness::new(what).vector("x", &x, t.field())),
    })
}

fn at(what: &str, x: &Vector, s: &Subspace) -> Verdict {
    Verdict::Fails(Witness::new(what).vector("x", x, s.field()))
}

fn orthogonal_to(v: &Vector, s: &Subspace) -> bool {
    s.basis_vectors().iter().all(|m| v.dot_conj(m).is_zero())
}

/// The same operator stored with arbitrary values on `dom^⊥` before
/// normalization.
fn noisy_copy(t: &PartialOperator, noise: &Matrix) -> Result<PartialOperator> {
    let n = t.ambient_dim();
    let off = Matrix::identity(n).sub(&t.dom().projection_matrix())?;
    PartialOperator::new(t.dom().clone(), t.matrix().add(&noise.mul(&off)?)?)
}

pub const CRUCIAL_LAWS: &[&str] = &[
    "crucial_i",
    "crucial_exists",
    "crucial_unique",
    "crucial_ii",
    "crucial_iii",
    "crucial_iv",
    "crucial_iv_unique",
    "crucial_v",
    "crucial_vi",
    "not_in_domain",
    "projection_routes",
    "closest_point",
    "corthm_i",
    "corthm_ii",
    "corthm_iii",
    "corthm_iv",
    "corthm_v",
    "corthm_vi",
];

/// Decomposition, characterization and distance identities for each `L`,
/// at a random point of `dom(L)` and a point pushed off the domain.
pub fn check_crucial(orthos: &[OrthoSubspace], sampler: &mut Sampler) -> Result<SuiteReport> {
    let mut s = SuiteReport::new("crucial");
    for law in CRUCIAL_LAWS {
        s.declare(law, Expectation::Proved);
    }
    for (idx, l) in orthos.iter().enumerate() {
        let f = l.field();
        let (one, zero, dom) = (l.one(), l.zero(), l.dom());
        let x = sampler.point_in(l);

        s.record(
            "crucial_i",
            idx,
            match one.oplus(zero)? {
                Some(d) => sub_eq("L¹ ⊕ L⁰ ≠ L¹ ∨ L⁰", &d, &dom),
                None => Verdict::fail("L¹ ∩ L⁰ ≠ 0"),
            },
        );

        let (l1, l0) = decompose(l, &x)?;
        let exists = one.contains(&l1)? && zero.contains(&l0)? && l1.add(&l0) == x;
        s.record("crucial_exists", idx, if exists { Verdict::Holds } else { at("decomposition invalid", &x, &dom) });

        let stacked = one.basis().vstack(zero.basis())?;
        let mut unique = if stacked.rank() == one.dim() + zero.dim() {
            Verdict::Holds
        } else {
            Verdict::fail("bases of L¹ and L⁰ are dependent")
        };
        if let Some(d) = sampler.nonzero_vector_in(one) {
            if zero.contains(&l0.sub(&d))? {
                unique = unique.and(at("second decomposition via L¹ perturbation", &d, one));
            }
        }
        if let Some(d) = sampler.nonzero_vector_in(zero) {
            if one.contains(&l1.add(&d))? {
                unique = unique.and(at("second decomposition via L⁰ perturbation", &d, zero));
            }
        }
        s.record("crucial_unique", idx, unique);

        let p1 = projection_of(l);
        let p0 = projection_of(&l.neg());
        for (law, p, part, comp) in [("crucial_ii", &p1, &l1, one), ("crucial_iii", &p0, &l0, zero)] {
            let mut v = match PartialProjection::try_new(p.as_operator().clone()) {
                Ok(_) => Verdict::Holds,
                Err(e) => Verdict::fail(e.to_string()),
            };
            if p.apply(&x)? != *part {
                v = v.and(at("projection disagrees with the decomposition", &x, &dom));
            }
            v = v.and(Verdict::from_bool(p.dom() == &dom, "domain differs from dom L"));
            if let Some(c) = contraction_violation(p.as_operator()) {
                v = v.and(Verdict::Fails(Witness::new("not a contraction").vector("coefficients", &c, f)));
            }
            v = v.and(Verdict::from_bool(norm_sq_is_one(p) == comp.is_strict(), "‖P‖ = 1 disagrees with strictness"));
            s.record(law, idx, v);
        }
        s.record("crucial_iii", idx, o_eq("∼P¹ ≠ P⁰", &subspaces_of(&p1.complement()), &subspaces_of(&p0)));

        let r = x.sub(&l1);
        s.record("crucial_iv", idx, if orthogonal_to(&r, one) { Verdict::Holds } else { at("x − l1 not ⊥ L¹", &x, one) });
        let other = match sampler.nonzero_vector_in(one) {
            Some(d) => {
                let cand = l1.add(&d);
                if orthogonal_to(&x.sub(&cand), one) {
                    at("a second element of L¹ satisfies the characterization", &cand, one)
                } else {
                    Verdict::Holds
                }
            }
            None => Verdict::HypothesisNotMet,
        };
        s.record("crucial_iv_unique", idx, other);

        let v = Verdict::from_bool(one.distance_sq(&x)? == l0.norm_sq(), "ρ(x, L¹)² ≠ ‖l0‖²")
            .and(Verdict::from_bool(zero.distance_sq(&x)? == l1.norm_sq(), "ρ(x, L⁰)² ≠ ‖l1‖²"));
        s.record("crucial_v", idx, v);

        let far = one.distance_sq(&x)? > Rational::zero();
        s.record(
            "crucial_vi",
            idx,
            Verdict::given(far, || {
                let ok = !l0.is_zero() && zero.contains(&l0).unwrap_or(false) && orthogonal_to(&l0, one);
                Verdict::from_bool(ok, "no nonzero refuter found")
            }),
        );

        let p1x = p1.apply(&x)?;
        let p0x = p0.apply(&x)?;
        s.record("projection_routes", idx, Verdict::from_bool(p1x.add(&p0x) == x, "P¹x + P⁰x ≠ x"));

        let px = one.projection_matrix().apply(&x);
        let best = x.sub(&px).norm_sq();
        let m = sampler.vector_in(one);
        let dm = x.sub(&m).norm_sq();
        let closest = best == one.distance_sq(&x)? && dm >= best && ((dm == best) == (m == px));
        s.record("closest_point", idx, Verdict::from_bool(closest, "projection is not the unique closest point"));

        let y = sampler.nonzero_vector_in(&dom.perp()).map(|w| x.add(&w));
        let off = match &y {
            Some(y) => {
                let raised = matches!(decompose(l, y), Err(Error::NotInDomain(_)))
                    && matches!(p1.apply(y), Err(Error::NotInDomain(_)));
                Verdict::from_bool(dom.distance_sq(y)? > Rational::zero() && raised, "point off the domain accepted")
            }
            None => Verdict::HypothesisNotMet,
        };
        s.record("not_in_domain", idx, off);

        let total = l.is_total();
        s.record(
            "corthm_i",
            idx,
            Verdict::given(total, || {
                sub_eq("L⁰ ≠ (L¹)^⊥", zero, &one.perp()).and(sub_eq("L¹ ≠ (L¹)^⊥⊥", one, &one.perp().perp()))
            }),
        );
        s.record("corthm_ii", idx, Verdict::given(total, || o_eq("L ≠ (L¹, L¹^⊥)", l, &OrthoSubspace::total(one.clone()))));

        let mm = sampler.subspace();
        let mut v = Verdict::Holds;
        for (a, b) in [(one, zero), (zero, one)] {
            let m = mm.join(a)?;
            let lhs = m.meet(&b.join(a)?)?;
            let rhs = m.meet(b)?.join(a)?;
            v = v.and(sub_eq("M ∧ (L⁰ ∨ L¹) ≠ (M ∧ L⁰) ∨ L¹", &lhs, &rhs));
        }
        s.record("corthm_iii", idx, v);
        s.record(
            "corthm_iv",
            idx,
            Verdict::given(total, || {
                let perp = one.perp();
                let m = mm.join(one).expect("same ambient");
                let lhs = m.meet(&perp.join(one).expect("same ambient")).expect("same ambient");
                let rhs = m.meet(&perp).expect("same ambient").join(one).expect("same ambient");
                sub_eq("M ∧ (L^⊥ ∨ L) ≠ (M ∧ L^⊥) ∨ L", &lhs, &rhs)
            }),
        );

        let mut v = Verdict::from_bool(decompose(l, &x).is_ok() == dom.contains(&x)?, "membership and decomposition disagree");
        if let Some(y) = &y {
            v = v.and(Verdict::from_bool(decompose(l, y).is_ok() == dom.contains(y)?, "membership and decomposition disagree"));
        }
        s.record("corthm_v", idx, v);
        let vi = match &y {
            Some(y) => {
                let mut ok = true;
                for _ in 0..3 {
                    let c = sampler.vector_in(one).add(&sampler.vector_in(zero));
                    ok &= c != *y && !y.sub(&c).is_zero();
                }
                Verdict::from_bool(ok, "a point off the domain equals some l¹ + l⁰")
            }
            None => Verdict::HypothesisNotMet,
        };
        s.record("corthm_vi", idx, vi);
    }
    Ok(s)
}

pub const BIJECTION_LAWS: &[&str] = &[
    "ji_roundtrip",
    "ij_roundtrip",
    "i_injective",
    "strongly_extensional",
    "order_preserving",
    "strictness",
    "totality",
    "LP1",
    "normproj",
    "neg_complement",
];

/// `j∘i = id`, `i∘j = id` and the preservation properties, for each `L`
/// against its neighbour `L'` in the list.
pub fn check_bijection(orthos: &[OrthoSubspace]) -> Result<SuiteReport> {
    let mut s = SuiteReport::new("bijection");
    for law in BIJECTION_LAWS {
        s.declare(law, Expectation::Proved);
    }
    let k = orthos.len();
    for (idx, l) in orthos.iter().enumerate() {
        let m = &orthos[(idx + 1) % k];
        let n = l.ambient_dim();
        let p = projection_of(l);
        s.record("ji_roundtrip", idx, o_eq("j(i(L)) ≠ L", &subspaces_of(&p), l));

        let noise = Matrix::from_rows(
            (0..n).map(|r| (0..n).map(|c| crate::scalars::Scalar::from_int((r * n + c) as i64 % 5 - 2)).collect()).collect(),
            n,
        )?;
        let raw = PartialOperator::new(l.dom(), l.one().projection_matrix().add(&noise.mul(
            &Matrix::identity(n).sub(&l.dom().projection_matrix())?,
        )?)?)?;
        let constructed = match PartialProjection::try_new(raw) {
            Ok(q) => q,
            Err(e) => {
                s.record("ij_roundtrip", idx, Verdict::fail(e.to_string()));
                continue;
            }
        };
        s.record(
            "ij_roundtrip",
            idx,
            op_verdict("i(j(P)) ≠ P", projection_of(&subspaces_of(&constructed)).as_operator(), constructed.as_operator())?,
        );

        let q = projection_of(m);
        let js_equal = subspaces_of(&p) == subspaces_of(&q);
        s.record("i_injective", idx, Verdict::given(js_equal, || Verdict::from_bool(op_eq(p.as_operator(), q.as_operator()).unwrap_or(false), "j(P) = j(Q) but P ≠ Q")));
        let neq_ops = op_neq(p.as_operator(), q.as_operator())?.is_some();
        let neq_subs = subspaces_of(&p).neq_witness(&subspaces_of(&q))?.is_some();
        s.record("strongly_extensional", idx, Verdict::from_bool(neq_ops == neq_subs && neq_subs == l.neq_witness(m)?.is_some(), "inequalities not transported"));

        let lower = l.meet(m)?;
        let v = Verdict::from_bool(projection_of(&lower).leq(&p)?, "i(L ∧ M) ≰ i(L)")
            .and(Verdict::from_bool(l.leq(m)? == p.leq(&q)?, "order not preserved"))
            .and(Verdict::from_bool(subspaces_of(&projection_of(&lower)).leq(&subspaces_of(&q))?, "j not monotone"));
        s.record("order_preserving", idx, v);

        s.record("strictness", idx, Verdict::from_bool(l.is_strict() == p.is_strict() && subspaces_of(&p).is_strict() == p.is_strict(), "strictness not preserved"));
        s.record("totality", idx, Verdict::from_bool(l.is_total() == p.dom().is_whole() && subspaces_of(&p).is_total() == p.dom().is_whole(), "totality not preserved"));
        s.record("LP1", idx, sub_eq("L_P¹ ≠ {x : ‖Px‖ = ‖x‖}", subspaces_of(&constructed).one(), &norm_preserving_subspace(&constructed)));
        let v = Verdict::given(constructed.is_strict(), || Verdict::from_bool(norm_sq_is_one(&constructed), "strict projection without ‖P‖ = 1"))
            .and(Verdict::from_bool(contraction_violation(constructed.as_operator()).is_none(), "not a contraction"));
        s.record("normproj", idx, v);
        s.record("neg_complement", idx, op_verdict("i(−L) ≠ ∼i(L)", projection_of(&l.neg()).as_operator(), p.complement().as_operator())?);
    }
    Ok(s)
}

pub const IJ_LAWS: &[&str] = &[
    "ij_i",
    "ij_ii",
    "ij_iii",
    "ij_iv",
    "ij_v",
    "ij_vi",
    "ij_vii",
    "ij_viii",
    "ij_iff",
    "ij_ix_meet",
    "ij_ix_join",
    "projiscomplql_glb",
    "projiscomplql_lub",
    "projiscomplql_involution",
    "projiscomplql_antitone",
];

/// `i` and `j` commute with every lattice operation, on each triple.
pub fn check_ij(triples: &[(OrthoSubspace, OrthoSubspace, OrthoSubspace)]) -> Result<SuiteReport> {
    let mut s = SuiteReport::new("ij");
    for law in IJ_LAWS {
        s.declare(law, Expectation::Proved);
    }
    for (idx, (l, m, k)) in triples.iter().enumerate() {
        let (f, n) = (l.field(), l.ambient_dim());
        let (pl, pm, pk) = (projection_of(l), projection_of(m), projection_of(k));
        let (one, zero) = (PartialProjection::identity(f, n), PartialProjection::zero(f, n));
        let (top, bottom) = (OrthoSubspace::top(f, n), OrthoSubspace::bottom(f, n));

        let both = |law: &str, s: &mut SuiteReport, lhs_i: &PartialProjection, rhs_i: &PartialProjection, lhs_j: &OrthoSubspace, rhs_j: &OrthoSubspace| -> Result<()> {
            let v = op_verdict(&format!("{law}: i side"), lhs_i.as_operator(), rhs_i.as_operator())?
                .and(o_eq(&format!("{law}: j side"), lhs_j, rhs_j));
            s.record(law, idx, v);
            Ok(())
        };
        both("ij_i", &mut s, &projection_of(&top), &one, &subspaces_of(&one), &top)?;
        both("ij_ii", &mut s, &projection_of(&bottom), &zero, &subspaces_of(&zero), &bottom)?;
        both("ij_iii", &mut s, &projection_of(&l.neg()), &pl.complement(), &subspaces_of(&pl.complement()), &l.neg())?;
        both("ij_iv", &mut s, &projection_of(&l.meet(m)?), &pl.meet(&pm)?, &subspaces_of(&pl.meet(&pm)?), &l.meet(m)?)?;
        both("ij_v", &mut s, &projection_of(&l.join(m)?), &pl.join(&pm)?, &subspaces_of(&pl.join(&pm)?), &l.join(m)?)?;
        both("ij_vi", &mut s, &projection_of(&l.minus(m)?), &pl.minus(&pm)?, &subspaces_of(&pl.minus(&pm)?), &l.minus(m)?)?;
        both("ij_vii", &mut s, &projection_of(&l.implies(m)?), &pl.implies(&pm)?, &subspaces_of(&pl.implies(&pm)?), &l.implies(m)?)?;
        both("ij_viii", &mut s, &projection_of(&l.not()), &pl.not(), &subspaces_of(&pl.not()), &l.not())?;
        both("ij_iff", &mut s, &projection_of(&l.iff(m)?), &pl.iff(&pm)?, &subspaces_of(&pl.iff(&pm)?), &l.iff(m)?)?;
        let meet3 = l.meet(m)?.meet(k)?;
        let pmeet3 = pl.meet(&pm)?.meet(&pk)?;
        both("ij_ix_meet", &mut s, &projection_of(&meet3), &pmeet3, &subspaces_of(&pmeet3), &meet3)?;
        let join3 = l.join(m)?.join(k)?;
        let pjoin3 = pl.join(&pm)?.join(&pk)?;
        both("ij_ix_join", &mut s, &projection_of(&join3), &pjoin3, &subspaces_of(&pjoin3), &join3)?;

        let glb = pl.meet(&pm)?;
        let mut v = Verdict::from_bool(glb.leq(&pl)? && glb.leq(&pm)?, "P ∧ Q is not a lower bound");
        let r = pk.meet(&pl)?.meet(&pm)?;
        v = v.and(Verdict::from_bool(r.leq(&glb)?, "a lower bound is not below P ∧ Q"));
        s.record("projiscomplql_glb", idx, v);
        let lub = pl.join(&pm)?;
        let mut v = Verdict::from_bool(pl.leq(&lub)? && pm.leq(&lub)?, "P ∨ Q is not an upper bound");
        let r = pk.join(&pl)?.join(&pm)?;
        v = v.and(Verdict::from_bool(lub.leq(&r)?, "an upper bound is not above P ∨ Q"));
        s.record("projiscomplql_lub", idx, v);
        s.record("projiscomplql_involution", idx, op_verdict("∼∼P ≠ P", pl.complement().complement().as_operator(), pl.as_operator())?);
        let ordered = pl.meet(&pm)?;
        s.record(
            "projiscomplql_antitone",
            idx,
            Verdict::from_bool(pm.complement().leq(&ordered.complement())?, "P ≤ Q but ∼Q ≰ ∼P"),
        );
    }
    Ok(s)
}

/// True if `x` witnesses `t ≠ u` by one of the three clauses.
fn witnesses(x: &Vector, t: &PartialOperator, u: &PartialOperator) -> bool {
    if x.is_zero() {
        return false;
    }
    let (dt, du) = (t.dom(), u.dom());
    let inside = |d: &Subspace| d.contains(x).unwrap_or(false);
    (inside(dt) && orthogonal_to(x, du))
        || (inside(du) && orthogonal_to(x, dt))
        || (inside(dt) && inside(du) && t.matrix().apply(x) != u.matrix().apply(x))
}

pub const EXTENSIONALITY_LAWS: &[&str] = &["ext1", "ext1_copies_equal", "neq_irreflexive", "neq_symmetric", "neq_excludes_eq"];

/// Inequality survives replacing both sides by `op_eq` copies, with the
/// same witness.
pub fn check_extensionality(ops: &[PartialOperator]) -> Result<SuiteReport> {
    let mut s = SuiteReport::new("extensionality");
    for law in EXTENSIONALITY_LAWS {
        s.declare(law, Expectation::Proved);
    }
    let k = ops.len();
    for (idx, t) in ops.iter().enumerate() {
        let u = &ops[(idx + 1) % k];
        let t2 = noisy_copy(t, u.matrix())?;
        let u2 = noisy_copy(u, t.matrix())?;
        s.record(
            "ext1_copies_equal",
            idx,
            Verdict::from_bool(op_eq(t, &t2)? && op_eq(u, &u2)?, "noisy copy differs"),
        );
        let w = op_neq(t, u)?;
        s.record(
            "ext1",
            idx,
            match &w {
                Some(x) => Verdict::from_bool(witnesses(x, &t2, &u2) && op_neq(&t2, &u2)?.is_some(), "witness lost on equal copies"),
                None => Verdict::HypothesisNotMet,
            },
        );
        s.record("neq_irreflexive", idx, Verdict::from_bool(op_neq(t, &t2)?.is_none(), "T ≠ T"));
        s.record("neq_symmetric", idx, Verdict::from_bool(w.is_some() == op_neq(u, t)?.is_some(), "inequality not symmetric"));
        s.record(
            "neq_excludes_eq",
            idx,
            Verdict::given(w.is_some(), || Verdict::from_bool(!op_eq(t, u).unwrap_or(true), "T ≠ U and T = U")),
        );
    }
    Ok(s)
}
