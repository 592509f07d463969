//! Structured law verdicts with counterexample witnesses.

use serde::Serialize;

use crate::linalg::Vector;
use crate::scalars::Field;
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedVector {
    pub name: String,
    pub entries: Vec<String>,
}

/// What went wrong, with the vectors that exhibit it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub description: String,
    pub vectors: Vec<NamedVector>,
}

impl Witness {
    pub fn new(description: impl Into<String>) -> Self {
        Self { description: description.into(), vectors: Vec::new() }
    }

    pub fn vector(mut self, name: impl Into<String>, v: &Vector, field: Field) -> Self {
        self.vectors.push(NamedVector { name: name.into(), entries: v.encode(field) });
        self
    }

    pub fn subspace(mut self, name: &str, s: &Subspace) -> Self {
        for (k, v) in s.basis_vectors().iter().enumerate() {
            self.vectors.push(NamedVector { name: format!("{name}[{k}]"), entries: v.encode(s.field()) });
        }
        self
    }

    /// `None` if `lhs = rhs`, otherwise a basis vector of one side missing
    /// from the other.
    pub fn subspace_neq(what: &str, lhs: &Subspace, rhs: &Subspace) -> Option<Self> {
        if lhs == rhs {
            return None;
        }
        let w = Self::new(what);
        if let Ok(Some(v)) = lhs.leq_witness(rhs) {
            return Some(w.vector("in_lhs_not_rhs", &v, lhs.field()));
        }
        if let Ok(Some(v)) = rhs.leq_witness(lhs) {
            return Some(w.vector("in_rhs_not_lhs", &v, rhs.field()));
        }
        Some(w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "witness", rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails(Witness),
    HypothesisNotMet,
}

impl Verdict {
    pub fn fail(description: impl Into<String>) -> Self {
        Verdict::Fails(Witness::new(description))
    }

    pub fn from_bool(ok: bool, description: &str) -> Self {
        if ok {
            Verdict::Holds
        } else {
            Verdict::fail(description)
        }
    }

    pub fn from_witness(w: Option<Witness>) -> Self {
        match w {
            None => Verdict::Holds,
            Some(w) => Verdict::Fails(w),
        }
    }

    /// Evaluates `conclusion` only when `hypothesis` holds.
    pub fn given(hypothesis: bool, conclusion: impl FnOnce() -> Verdict) -> Self {
        if hypothesis {
            conclusion()
        } else {
            Verdict::HypothesisNotMet
        }
    }

    /// Conjunction: the first failure wins; an unmet hypothesis only
    /// survives if nothing was actually checked.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fails(w), _) | (_, Verdict::Fails(w)) => Verdict::Fails(w),
            (Verdict::HypothesisNotMet, Verdict::HypothesisNotMet) => Verdict::HypothesisNotMet,
            _ => Verdict::Holds,
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn failed(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    Proved,
    ExpectedFail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub instance: usize,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub expectation: Expectation,
    pub instances_checked: usize,
    pub hypothesis_met: usize,
    pub hypothesis_not_met: usize,
    pub violations: Vec<Violation>,
}

impl LawReport {
    pub fn new(law: impl Into<String>, expectation: Expectation) -> Self {
        Self {
            law: law.into(),
            expectation,
            instances_checked: 0,
            hypothesis_met: 0,
            hypothesis_not_met: 0,
            violations: Vec::new(),
        }
    }

    pub fn record(&mut self, instance: usize, verdict: Verdict) {
        self.instances_checked += 1;
        match verdict {
            Verdict::Holds => self.hypothesis_met += 1,
            Verdict::Fails(witness) => {
                self.hypothesis_met += 1;
                self.violations.push(Violation { instance, witness });
            }
            Verdict::HypothesisNotMet => self.hypothesis_not_met += 1,
        }
    }

    /// True unless a proved law has a violation.
    pub fn is_ok(&self) -> bool {
        self.expectation == Expectation::ExpectedFail || self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub laws: Vec<LawReport>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), laws: Vec::new() }
    }

    fn entry(&mut self, law: &str, expectation: Expectation) -> &mut LawReport {
        if let Some(k) = self.laws.iter().position(|l| l.law == law) {
            return &mut self.laws[k];
        }
        self.laws.push(LawReport::new(law, expectation));
        self.laws.last_mut().expect("just pushed")
    }

    /// Lists `law` even if no instance ends up exercising it.
    pub fn declare(&mut self, law: &str, expectation: Expectation) {
        self.entry(law, expectation);
    }

    pub fn record(&mut self, law: &str, instance: usize, verdict: Verdict) {
        self.entry(law, Expectation::Proved).record(instance, verdict);
    }

    pub fn record_expected_fail(&mut self, law: &str, instance: usize, verdict: Verdict) {
        self.entry(law, Expectation::ExpectedFail).record(instance, verdict);
    }

    pub fn law(&self, name: &str) -> Option<&LawReport> {
        self.laws.iter().find(|l| l.law == name)
    }

    /// Appends `other`'s counts to the matching laws, offsetting instance
    /// indices by `offset`.
    pub fn merge(&mut self, other: SuiteReport, offset: usize) {
        for l in other.laws {
            let e = self.entry(&l.law, l.expectation);
            e.instances_checked += l.instances_checked;
            e.hypothesis_met += l.hypothesis_met;
            e.hypothesis_not_met += l.hypothesis_not_met;
            e.violations.extend(
                l.violations.into_iter().map(|v| Violation { instance: v.instance + offset, witness: v.witness }),
            );
        }
    }

    /// Total violations among proved laws.
    pub fn proved_violations(&self) -> usize {
        self.laws.iter().filter(|l| l.expectation == Expectation::Proved).map(|l| l.violations.len()).sum()
    }

    pub fn is_ok(&self) -> bool {
        self.laws.iter().all(LawReport::is_ok)
    }
}

/// Named clause verdicts for a single instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseReport {
    pub clauses: Vec<(String, Verdict)>,
}

impl ClauseReport {
    pub fn new() -> Self {
        Self { clauses: Vec::new() }
    }

    pub fn push(&mut self, name: &str, v: Verdict) {
        self.clauses.push((name.to_string(), v));
    }

    pub fn get(&self, name: &str) -> Option<&Verdict> {
        self.clauses.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn failures(&self) -> impl Iterator<Item = &(String, Verdict)> {
        self.clauses.iter().filter(|(_, v)| v.failed())
    }

    pub fn all_hold_or_unmet(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn record_into(&self, suite: &mut SuiteReport, prefix: &str, instance: usize) {
        for (name, v) in &self.clauses {
            suite.record(&format!("{prefix}{name}"), instance, v.clone());
        }
    }
}

impl Default for ClauseReport {
    fn default() -> Self {
        Self::new()
    }
}
