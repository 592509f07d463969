//! Partial-linear-space laws for bounded partial operators.

use super::{compose, eq_failure, op_neq, PartialOperator};
use crate::error::Result;
use crate::report::{Expectation, SuiteReport, Verdict, Witness};
use crate::scalars::Scalar;

/// A p-linear map `ℬ(H) → ℬ(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PLinearMap {
    /// `T ↦ 0_T`.
    Zeta,
    /// `T ↦ A∘T` for a total `A`.
    PostCompose(PartialOperator),
    /// `T ↦ 0`.
    ConstantZero,
}

impl PLinearMap {
    pub fn name(&self) -> &'static str {
        match self {
            PLinearMap::Zeta => "zeta",
            PLinearMap::PostCompose(_) => "post_compose",
            PLinearMap::ConstantZero => "constant_zero",
        }
    }

    pub fn apply(&self, t: &PartialOperator) -> Result<PartialOperator> {
        Ok(match self {
            PLinearMap::Zeta => t.zero_of(),
            PLinearMap::PostCompose(a) => compose(a, t)?,
            PLinearMap::ConstantZero => PartialOperator::zero(t.field(), t.ambient_dim()),
        })
    }
}

fn eq(what: &str, t: &PartialOperator, u: &PartialOperator) -> Result<Verdict> {
    Ok(match eq_failure(t, u)? {
        None => Verdict::Holds,
        Some(x) => Verdict::Fails(Witness::new(what).vector("x", &x, t.field())),
    })
}

fn neq(t: &PartialOperator, u: &PartialOperator) -> Result<bool> {
    Ok(op_neq(t, u)?.is_some())
}

pub const PLS_LAWS: &[&str] = &[
    "ls_add_assoc",
    "ls_add_comm",
    "ls_add_zero",
    "ls_scale_one",
    "ls_scale_assoc",
    "ls_distrib_vector",
    "ls_distrib_scalar",
    "PL1",
    "PL2",
    "PL3",
    "PL4",
    "PL5",
    "pls1_i",
    "pls1_ii",
    "pls1_iii",
    "pls1_iv",
    "pls1_v",
    "pls1_vi",
    "plmap_zero",
    "plmap_add",
    "plmap_scale",
    "prop_pls1_iv",
];

/// Instance `i` uses `T = ops[i]`, `U = ops[i+1]`, `V = ops[i+2]` (cyclic)
/// and scalars `scalars[i]`, `scalars[i+1]` (cyclic).
pub fn check_pls(ops: &[PartialOperator], scalars: &[Scalar], maps: &[PLinearMap]) -> Result<SuiteReport> {
    let mut s = SuiteReport::new("pls");
    for law in PLS_LAWS {
        s.declare(law, Expectation::Proved);
    }
    if ops.is_empty() {
        return Ok(s);
    }
    let n = ops.len();
    let default_scalars = [Scalar::from_int(2), Scalar::from_int(-1)];
    let scalars = if scalars.is_empty() { &default_scalars[..] } else { scalars };
    let (field, dim) = (ops[0].field(), ops[0].ambient_dim());
    let zero = PartialOperator::zero(field, dim);

    for i in 0..n {
        let (t, u, v) = (&ops[i], &ops[(i + 1) % n], &ops[(i + 2) % n]);
        let k = &scalars[i % scalars.len()];
        let l = &scalars[(i + 1) % scalars.len()];

        s.record("ls_add_assoc", i, eq("(T+U)+V ≠ T+(U+V)", &t.add(u)?.add(v)?, &t.add(&u.add(v)?)?)?);
        s.record("ls_add_comm", i, eq("T+U ≠ U+T", &t.add(u)?, &u.add(t)?)?);
        s.record("ls_add_zero", i, eq("T+0 ≠ T", &t.add(&zero)?, t)?);
        s.record("ls_scale_one", i, eq("1·T ≠ T", &t.scale(&Scalar::one()), t)?);
        s.record("ls_scale_assoc", i, eq("(kl)·T ≠ k·(l·T)", &t.scale(&(k * l)), &t.scale(l).scale(k))?);
        s.record("ls_distrib_vector", i, eq("k(T+U) ≠ kT+kU", &t.add(u)?.scale(k), &t.scale(k).add(&u.scale(k))?)?);
        s.record("ls_distrib_scalar", i, eq("(k+l)T ≠ kT+lT", &t.scale(&(k + l)), &t.scale(k).add(&t.scale(l))?)?);

        s.record("PL1", i, eq("0·T ≠ 0_T", &t.scale(&Scalar::zero()), &t.zero_of())?);
        let inv = t.negate();
        s.record(
            "PL2",
            i,
            eq("T+(−T) ≠ 0_T", &t.add(&inv)?, &t.zero_of())?.and(eq("0_{−T} ≠ 0_T", &inv.zero_of(), &t.zero_of())?),
        );
        s.record("PL3", i, eq("0_0 ≠ 0", &zero.zero_of(), &zero)?);
        s.record("PL4", i, eq("0_{0_T} ≠ 0_T", &t.zero_of().zero_of(), &t.zero_of())?);
        let kt_neq = neq(&t.scale(k), &zero)?;
        s.record(
            "PL5",
            i,
            Verdict::given(kt_neq, || {
                let ok = neq(&t.zero_of(), &zero).unwrap_or(false) || (!k.is_zero() && neq(t, &zero).unwrap_or(false));
                Verdict::from_bool(ok, "k·T ≠ 0 but neither 0_T ≠ 0 nor (k ≠ 0 and T ≠ 0)")
            }),
        );

        s.record("pls1_i", i, eq("T + 0_T ≠ T", &t.add(&t.zero_of())?, t)?);
        for y in [u.clone(), inv.add(&u.zero_of())?, t.scale(&Scalar::from_int(-1))] {
            let hyp = eq_failure(&t.add(&y)?, &t.zero_of())?.is_none() && eq_failure(&y.zero_of(), &t.zero_of())?.is_none();
            let verdict = if hyp { eq("a second additive inverse differs from −T", &y, &inv)? } else { Verdict::HypothesisNotMet };
            s.record("pls1_ii", i, verdict);
        }
        s.record("pls1_iii", i, eq("(−1)·T ≠ −T", &t.scale(&Scalar::from_int(-1)), &inv)?);
        s.record(
            "pls1_iv",
            i,
            eq("0_{kT} ≠ 0_T", &t.scale(k).zero_of(), &t.zero_of())?.and(eq("k·0_T ≠ 0_T", &t.zero_of().scale(k), &t.zero_of())?),
        );
        s.record("pls1_v", i, eq("0_T + 0_U ≠ 0_{T+U}", &t.zero_of().add(&u.zero_of())?, &t.add(u)?.zero_of())?);
        let vi = if t.is_total() && u.is_total() {
            let closed = t.add(u)?.is_total() && t.scale(k).is_total() && inv.is_total();
            Verdict::from_bool(closed, "total elements not closed")
                .and(eq("0·T ≠ 0 for total T", &t.scale(&Scalar::zero()), &zero)?)
                .and(eq("T + (−T) ≠ 0 for total T", &t.add(&inv)?, &zero)?)
        } else {
            Verdict::HypothesisNotMet
        };
        s.record("pls1_vi", i, vi);

        for map in maps {
            let (ft, fu) = (map.apply(t)?, map.apply(u)?);
            s.record("plmap_zero", i, eq("Φ(0) ≠ 0", &map.apply(&zero)?, &zero)?);
            s.record("plmap_add", i, eq("Φ(T+U) ≠ Φ(T)+Φ(U)", &map.apply(&t.add(u)?)?, &ft.add(&fu)?)?);
            s.record("plmap_scale", i, eq("Φ(kT) ≠ kΦ(T)", &map.apply(&t.scale(k))?, &ft.scale(k))?);
        }
    }

    for (m, map) in maps.iter().enumerate() {
        let mut total = true;
        let mut images = Vec::with_capacity(n);
        for t in ops {
            let image = map.apply(t)?;
            total &= eq_failure(&image.zero_of(), &zero)?.is_none();
            images.push(image);
        }
        let verdict = Verdict::given(total, || {
            Verdict::from_bool(images.iter().all(PartialOperator::is_total), "a total p-linear map produced a partial value")
        });
        s.record("prop_pls1_iv", m, verdict);
    }
    Ok(s)
}
