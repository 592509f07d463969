//! Catalogued failures of classical lattice laws in `S(H)`, plus a random
//! search for further instances.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::random::Sampler;
use crate::report::{Expectation, SuiteReport, Verdict, Witness};
use crate::scalars::Field;
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CatalogLaw {
    /// `L ∧ (M ∨ N) = (L ∧ M) ∨ (L ∧ N)`.
    Distributivity,
    /// `N ≤ L ⇒ L ∧ (M ∨ N) = (L ∧ M) ∨ N`.
    Modularity,
    /// `K ∧ L ≤ M ⇔ K ≤ L^⊥ ∨ M`.
    HeytingAdjunction,
}

impl CatalogLaw {
    pub const ALL: [CatalogLaw; 3] = [CatalogLaw::Distributivity, CatalogLaw::Modularity, CatalogLaw::HeytingAdjunction];

    pub fn name(self) -> &'static str {
        match self {
            CatalogLaw::Distributivity => "distributivity",
            CatalogLaw::Modularity => "modularity",
            CatalogLaw::HeytingAdjunction => "heyting_adjunction",
        }
    }

    fn roles(self) -> [&'static str; 3] {
        match self {
            CatalogLaw::HeytingAdjunction => ["K", "L", "M"],
            _ => ["L", "M", "N"],
        }
    }

    /// `Some(reason)` if the triple violates the law.
    pub fn violation(self, a: &Subspace, b: &Subspace, c: &Subspace) -> Result<Option<Violated>> {
        Ok(match self {
            CatalogLaw::Distributivity => {
                let lhs = a.meet(&b.join(c)?)?;
                let rhs = a.meet(b)?.join(&a.meet(c)?)?;
                if lhs != rhs {
                    Some(Violated { description: "L ∧ (M ∨ N) ≠ (L ∧ M) ∨ (L ∧ N)".into(), lhs, rhs })
                } else {
                    let lhs = a.join(&b.meet(c)?)?;
                    let rhs = a.join(b)?.meet(&a.join(c)?)?;
                    (lhs != rhs).then(|| Violated { description: "L ∨ (M ∧ N) ≠ (L ∨ M) ∧ (L ∨ N)".into(), lhs, rhs })
                }
            }
            CatalogLaw::Modularity => {
                if !c.leq(a)? {
                    return Ok(None);
                }
                let lhs = a.meet(&b.join(c)?)?;
                let rhs = a.meet(b)?.join(c)?;
                (lhs != rhs).then(|| Violated { description: "N ≤ L but L ∧ (M ∨ N) ≠ (L ∧ M) ∨ N".into(), lhs, rhs })
            }
            CatalogLaw::HeytingAdjunction => {
                let lhs = a.meet(b)?;
                let rhs = b.perp().join(c)?;
                let left = lhs.leq(c)?;
                let right = a.leq(&rhs)?;
                match (left, right) {
                    (true, false) => Some(Violated { description: "K ∧ L ≤ M but K ≰ L^⊥ ∨ M".into(), lhs, rhs }),
                    (false, true) => Some(Violated { description: "K ≤ L^⊥ ∨ M but K ∧ L ≰ M".into(), lhs, rhs }),
                    _ => None,
                }
            }
        })
    }
}

impl fmt::Display for CatalogLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatalogLaw {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CatalogLaw::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown catalogued law '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violated {
    pub description: String,
    pub lhs: Subspace,
    pub rhs: Subspace,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Catalog,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub law: CatalogLaw,
    pub source: Source,
    pub roles: Vec<(String, Subspace)>,
    pub violated: Violated,
}

impl Counterexample {
    pub fn role(&self, name: &str) -> Option<&Subspace> {
        self.roles.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    pub fn witness(&self) -> Witness {
        let mut w = Witness::new(self.violated.description.clone());
        for (name, s) in &self.roles {
            w = w.subspace(name, s);
        }
        w.subspace("lhs", &self.violated.lhs).subspace("rhs", &self.violated.rhs)
    }
}

fn embedded_span(field: Field, dim: usize, vs: &[&[i64]]) -> Subspace {
    let vs: Vec<Vector> = vs
        .iter()
        .map(|v| {
            let mut ints = v.to_vec();
            ints.resize(dim, 0);
            Vector::from_ints(&ints)
        })
        .collect();
    Subspace::span(field, dim, &vs).expect("catalog vectors fit the ambient space")
}

/// The built-in triples for `law` in `field^dim`, placed in the first two
/// coordinates. Each is reported only if it really violates the law.
pub fn catalog(law: CatalogLaw, field: Field, dim: usize) -> Result<Vec<Counterexample>> {
    if dim < 2 {
        return Ok(Vec::new());
    }
    let s = |vs: &[&[i64]]| embedded_span(field, dim, vs);
    let triples: Vec<[Subspace; 3]> = match law {
        CatalogLaw::Distributivity => vec![[s(&[&[1, 0]]), s(&[&[0, 1]]), s(&[&[1, 1]])]],
        CatalogLaw::Modularity => Vec::new(),
        CatalogLaw::HeytingAdjunction => vec![
            [s(&[&[1, 0]]), s(&[&[1, 1]]), s(&[])],
            [s(&[&[1, 1]]), s(&[&[1, 1]]), s(&[&[1, 0]])],
        ],
    };
    let mut out = Vec::new();
    for [a, b, c] in triples {
        if let Some(violated) = law.violation(&a, &b, &c)? {
            let roles = law.roles().iter().map(|r| r.to_string()).zip([a, b, c]).collect();
            out.push(Counterexample { law, source: Source::Catalog, roles, violated });
        }
    }
    Ok(out)
}

/// A triple violating `law`: the catalog first, then up to `budget` random
/// triples from `sampler`.
pub fn find_counterexample(law: CatalogLaw, sampler: &mut Sampler, budget: usize) -> Result<Option<Counterexample>> {
    let (field, dim) = (sampler.field(), sampler.dim());
    if let Some(c) = catalog(law, field, dim)?.into_iter().next() {
        return Ok(Some(c));
    }
    for _ in 0..budget {
        let a = sampler.subspace();
        let b = sampler.subspace();
        let c = match law {
            CatalogLaw::Modularity => sampler.subspace_within(&a),
            _ => sampler.subspace(),
        };
        if let Some(violated) = law.violation(&a, &b, &c)? {
            let roles = law.roles().iter().map(|r| r.to_string()).zip([a, b, c]).collect();
            return Ok(Some(Counterexample { law, source: Source::Sampled, roles, violated }));
        }
    }
    Ok(None)
}

/// Classical laws on the catalog followed by `triples`. Distributivity and
/// the Heyting adjunction are expected to fail; modularity holds at finite
/// dimension and is checked with `N` replaced by `N ∧ L`.
pub fn check_catalog(field: Field, dim: usize, triples: &[(Subspace, Subspace, Subspace)]) -> Result<SuiteReport> {
    let mut s = SuiteReport::new("catalog");
    for law in CatalogLaw::ALL {
        let expectation = if law == CatalogLaw::Modularity { Expectation::Proved } else { Expectation::ExpectedFail };
        s.declare(law.name(), expectation);
        let listed = catalog(law, field, dim)?;
        let offset = listed.len();
        for (idx, c) in listed.into_iter().enumerate() {
            s.record(law.name(), idx, Verdict::Fails(c.witness()));
        }
        for (k, (a, b, c)) in triples.iter().enumerate() {
            let c = if law == CatalogLaw::Modularity { c.meet(a)? } else { c.clone() };
            let v = match law.violation(a, b, &c)? {
                None => Verdict::Holds,
                Some(violated) => {
                    let roles = law.roles().iter().map(|r| r.to_string()).zip([a.clone(), b.clone(), c]).collect();
                    Verdict::Fails(Counterexample { law, source: Source::Sampled, roles, violated }.witness())
                }
            };
            s.record(law.name(), offset + k, v);
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(vs: &[&[i64]], n: usize) -> Subspace {
        embedded_span(Field::Q, n, vs)
    }

    #[test]
    fn distributivity_catalog_triple() {
        let mut s = Sampler::new(Field::Q, 2, 1);
        let c = find_counterexample(CatalogLaw::Distributivity, &mut s, 10).unwrap().unwrap();
        assert_eq!(c.source, Source::Catalog);
        assert_eq!(c.role("L").unwrap(), &sp(&[&[1, 0]], 2));
        assert_eq!(c.role("M").unwrap(), &sp(&[&[0, 1]], 2));
        assert_eq!(c.role("N").unwrap(), &sp(&[&[1, 1]], 2));
        assert_eq!(c.violated.lhs, sp(&[&[1, 0]], 2));
        assert!(c.violated.rhs.is_zero());
    }

    #[test]
    fn heyting_catalog_triples() {
        let cs = catalog(CatalogLaw::HeytingAdjunction, Field::Q, 2).unwrap();
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0].role("K").unwrap(), &sp(&[&[1, 0]], 2));
        assert_eq!(cs[0].role("L").unwrap(), &sp(&[&[1, 1]], 2));
        assert!(cs[0].role("M").unwrap().is_zero());
        assert!(cs[0].violated.description.starts_with("K ∧ L ≤ M"));
        assert!(cs[1].violated.description.starts_with("K ≤ L^⊥ ∨ M"));
    }

    #[test]
    fn low_dimension_and_modularity_have_none() {
        let mut s = Sampler::new(Field::Q, 1, 7);
        assert!(find_counterexample(CatalogLaw::Distributivity, &mut s, 200).unwrap().is_none());
        let mut s = Sampler::new(Field::Q, 3, 7);
        assert!(find_counterexample(CatalogLaw::Modularity, &mut s, 200).unwrap().is_none());
    }

    #[test]
    fn embedded_in_higher_dimension() {
        let cs = catalog(CatalogLaw::Distributivity, Field::Qi, 4).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].violated.lhs.dim(), 1);
    }

    #[test]
    fn catalog_suite_marks_expected_failures() {
        let mut sm = Sampler::new(Field::Q, 3, 5);
        let triples: Vec<_> = (0..20).map(|_| sm.subspace_triple()).collect();
        let r = check_catalog(Field::Q, 3, &triples).unwrap();
        assert!(r.is_ok());
        let d = r.law("distributivity").unwrap();
        assert_eq!(d.expectation, Expectation::ExpectedFail);
        assert!(!d.violations.is_empty());
        assert!(r.law("heyting_adjunction").unwrap().violations.len() >= 2);
        assert_eq!(r.law("modularity").unwrap().expectation, Expectation::Proved);
    }

    #[test]
    fn parse_names() {
        for l in CatalogLaw::ALL {
            assert_eq!(l.name().parse::<CatalogLaw>().unwrap(), l);
        }
        assert!("bogus".parse::<CatalogLaw>().is_err());
    }
}
