//! Command implementations. Each returns a serializable report with a text
//! rendering and an exit status.

use std::fmt::Write as _;

use orthoql::ortho_lattice::{check_catalog, check_complql, find_counterexample, CatalogLaw};
use orthoql::partial_op::{
    check_bijection, check_cor7, check_crucial, check_extensionality, check_ij, check_order, check_pls, commuting_calculus,
    decompose, op_eq, projection_of, subspaces_of, PLinearMap,
};
use orthoql::quotient::{check_quotient, QuotientSpace};
use orthoql::report::Expectation;
use orthoql::subspace::laws::check_clql;
use orthoql::{Error, Field, OrthoSubspace, PartialOperator, Sampler, Subspace, SuiteReport, Verdict};
use serde::Serialize;

use crate::error::CliError;
use crate::expr::{self, Value};
use crate::instance::{parse_vector, Instance};
use crate::render::{self, SubspaceOut};

pub trait Report: Serialize {
    fn text(&self) -> String;

    /// 0 when every proved law held, 1 otherwise.
    fn exit_code(&self) -> u8 {
        0
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OpResult {
    Subspace(SubspaceOut),
    Ortho { one: SubspaceOut, zero: SubspaceOut, total: bool, strict: bool },
}

#[derive(Clone, Debug, Serialize)]
pub struct OpReport {
    pub expression: String,
    pub result: OpResult,
    #[serde(skip)]
    text: String,
}

impl Report for OpReport {
    fn text(&self) -> String {
        self.text.clone()
    }
}

pub fn op(inst: &Instance, expression: &str) -> Result<OpReport, CliError> {
    let f = inst.field;
    let (result, text) = match expr::evaluate(inst, expression)? {
        Value::Subspace(s) => (OpResult::Subspace(SubspaceOut::of(&s, f)), format!("basis {}", render::basis(&s))),
        Value::Ortho(l) => {
            let text = format!("one {}\nzero {}", render::basis(l.one()), render::basis(l.zero()));
            let r = OpResult::Ortho {
                one: SubspaceOut::of(l.one(), f),
                zero: SubspaceOut::of(l.zero(), f),
                total: l.is_total(),
                strict: l.is_strict(),
            };
            (r, text)
        }
    };
    Ok(OpReport { expression: expression.to_string(), result, text })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    All,
    Clql,
    Complql,
    Crucial,
    Bijection,
    Ij,
    Extensionality,
    Order,
    Comm,
    Pls,
    Quotient,
    Catalog,
    Distributivity,
    Modularity,
    Heyting,
}

impl Suite {
    const RUNNABLE: [Suite; 11] = [
        Suite::Clql,
        Suite::Complql,
        Suite::Crucial,
        Suite::Bijection,
        Suite::Ij,
        Suite::Extensionality,
        Suite::Order,
        Suite::Comm,
        Suite::Pls,
        Suite::Quotient,
        Suite::Catalog,
    ];

    fn catalog_laws(self) -> &'static [CatalogLaw] {
        match self {
            Suite::Distributivity => &[CatalogLaw::Distributivity],
            Suite::Modularity => &[CatalogLaw::Modularity],
            Suite::Heyting => &[CatalogLaw::HeytingAdjunction],
            Suite::Catalog => &CatalogLaw::ALL,
            _ => &[],
        }
    }
}

/// Where `check` and `roundtrip` take their instances from.
pub enum Source<'a> {
    File { path: String, instance: &'a Instance },
    Random { dim: usize, count: usize, seed: u64 },
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SourceOut {
    File { path: String },
    Random { count: usize, seed: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub field: Field,
    pub ambient_dim: usize,
    pub source: SourceOut,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
    pub proved_violations: usize,
    pub expected_failures: usize,
}

impl Report for CheckReport {
    fn text(&self) -> String {
        let mut out = String::new();
        let src = match &self.source {
            SourceOut::File { path } => format!("file {path}"),
            SourceOut::Random { count, seed } => format!("random count {count} seed {seed}"),
        };
        let _ = writeln!(out, "check {}^{} ({src})", self.field, self.ambient_dim);
        for s in &self.suites {
            let _ = writeln!(out, "suite {}", s.suite);
            for l in &s.laws {
                let (tag, noun) = match l.expectation {
                    Expectation::Proved => ("proved", "violations"),
                    Expectation::ExpectedFail => ("expected-fail", "failures"),
                };
                let _ = writeln!(
                    out,
                    "  {:<28} {:<13} checked {:>5}  met {:>5}  {noun} {}",
                    l.law,
                    tag,
                    l.instances_checked,
                    l.hypothesis_met,
                    l.violations.len()
                );
                if let Some(v) = l.violations.first() {
                    let _ = writeln!(out, "    instance {}: {}", v.instance, render::witness(&v.witness));
                }
            }
        }
        let _ = write!(out, "total: {} proved violations, {} expected failures", self.proved_violations, self.expected_failures);
        out
    }

    fn exit_code(&self) -> u8 {
        u8::from(self.proved_violations > 0)
    }
}

fn cyclic<T: Clone>(xs: &[T]) -> Vec<(T, T, T)> {
    let n = xs.len();
    (0..n).map(|k| (xs[k].clone(), xs[(k + 1) % n].clone(), xs[(k + 2) % n].clone())).collect()
}

fn pairs<T: Clone>(xs: &[T]) -> Vec<(T, T)> {
    xs.iter().flat_map(|a| xs.iter().map(move |b| (a.clone(), b.clone()))).collect()
}

enum Data {
    File { subspaces: Vec<Subspace>, orthos: Vec<OrthoSubspace>, operators: Vec<PartialOperator> },
    Random { count: usize },
}

fn order_suite(pairs: &[(OrthoSubspace, OrthoSubspace)]) -> Result<SuiteReport, CliError> {
    let mut s = SuiteReport::new("order");
    for (idx, (l, m)) in pairs.iter().enumerate() {
        let r = check_order(l, m)?;
        r.clauses.record_into(&mut s, "order.", idx);
        let w = r.clause_i_equalities.is_some();
        s.record("order.i_equalities", idx, Verdict::given(r.order_holds, || Verdict::from_bool(!w, "composite equality failed")));
        s.record("order.i_witness", idx, Verdict::given(!r.order_holds, || Verdict::from_bool(w, "no witness for a non-ordered pair")));
    }
    Ok(s)
}

fn comm_suite(pairs: &[(OrthoSubspace, OrthoSubspace)], cor7: &[(OrthoSubspace, OrthoSubspace)]) -> Result<SuiteReport, CliError> {
    let mut s = SuiteReport::new("comm");
    for (idx, (l, m)) in pairs.iter().enumerate() {
        match commuting_calculus(&projection_of(l), &projection_of(m)) {
            Ok(r) => r.clauses.record_into(&mut s, "comm.", idx),
            Err(Error::NotCommuting(_)) => s.record("comm.not_commuting", idx, Verdict::HypothesisNotMet),
            Err(e) => return Err(e.into()),
        }
    }
    for (idx, (l, m)) in cor7.iter().enumerate() {
        check_cor7(l, m)?.record_into(&mut s, "cor7.", idx);
    }
    Ok(s)
}

fn pls_suite(ops: &[PartialOperator], sampler: &mut Sampler) -> Result<SuiteReport, CliError> {
    let scalars: Vec<_> = ops.iter().map(|_| sampler.scalar()).collect();
    let mut maps = vec![PLinearMap::Zeta, PLinearMap::ConstantZero];
    maps.extend(ops.iter().filter(|t| t.is_total()).take(3).cloned().map(PLinearMap::PostCompose));
    Ok(check_pls(ops, &scalars, &maps)?)
}

fn catalog_suite(field: Field, dim: usize, triples: &[(Subspace, Subspace, Subspace)], laws: &[CatalogLaw]) -> Result<SuiteReport, CliError> {
    let mut r = check_catalog(field, dim, triples)?;
    r.laws.retain(|l| laws.iter().any(|c| c.name() == l.law));
    Ok(r)
}

fn run_suite(suite: Suite, catalog: &[CatalogLaw], data: &Data, sampler: &mut Sampler) -> Result<SuiteReport, CliError> {
    let (f, n) = (sampler.field(), sampler.dim());
    let s = sampler;
    let r = match data {
        Data::File { subspaces, orthos, operators } => match suite {
            Suite::Clql => check_clql(&cyclic(subspaces))?,
            Suite::Complql => check_complql(&cyclic(orthos))?,
            Suite::Crucial => check_crucial(orthos, s)?,
            Suite::Bijection => check_bijection(orthos)?,
            Suite::Ij => check_ij(&cyclic(orthos))?,
            Suite::Extensionality => check_extensionality(operators)?,
            Suite::Order => order_suite(&pairs(orthos))?,
            Suite::Comm => comm_suite(&pairs(orthos), &pairs(orthos))?,
            Suite::Pls => pls_suite(operators, s)?,
            Suite::Quotient => check_quotient(orthos, s)?,
            _ => catalog_suite(f, n, &cyclic(subspaces), catalog)?,
        },
        &Data::Random { count } => match suite {
            Suite::Clql => check_clql(&(0..count).map(|_| s.subspace_triple()).collect::<Vec<_>>())?,
            Suite::Complql => check_complql(&(0..count).map(|_| s.ortho_triple()).collect::<Vec<_>>())?,
            Suite::Crucial => {
                let orthos: Vec<_> = (0..count).map(|_| s.ortho()).collect();
                check_crucial(&orthos, s)?
            }
            Suite::Bijection => check_bijection(&(0..count).map(|_| s.ortho()).collect::<Vec<_>>())?,
            Suite::Ij => check_ij(&(0..count).map(|_| s.ortho_triple()).collect::<Vec<_>>())?,
            Suite::Extensionality => check_extensionality(&(0..count).map(|_| s.operator()).collect::<Vec<_>>())?,
            Suite::Order => {
                let mut ps: Vec<_> = (0..count).map(|_| s.ordered_pair()).collect();
                ps.extend((0..count).map(|_| (s.ortho(), s.ortho())));
                order_suite(&ps)?
            }
            Suite::Comm => {
                let ps: Vec<_> = (0..count)
                    .map(|k| {
                        let (p, q) = s.commuting_pair(k % 2 == 0);
                        (subspaces_of(&p), subspaces_of(&q))
                    })
                    .collect();
                let cor: Vec<_> = (0..count)
                    .map(|_| {
                        let a = s.subspace();
                        let b = s.subspace_within(&a.perp());
                        (OrthoSubspace::total(a), OrthoSubspace::total(b))
                    })
                    .collect();
                comm_suite(&ps, &cor)?
            }
            Suite::Pls => {
                let ops: Vec<_> = (0..count).map(|k| if k % 3 == 0 { s.total_operator() } else { s.operator() }).collect();
                pls_suite(&ops, s)?
            }
            Suite::Quotient => {
                let orthos: Vec<_> = (0..count).map(|_| s.ortho()).collect();
                check_quotient(&orthos, s)?
            }
            _ => catalog_suite(f, n, &(0..count).map(|_| s.subspace_triple()).collect::<Vec<_>>(), catalog)?,
        },
    };
    Ok(r)
}

/// Runs the selected suites. Each suite draws from its own sampler, so a
/// suite's result does not depend on which others were selected.
pub fn check(source: &Source, field: Field, laws: &[Suite], seed: u64) -> Result<CheckReport, CliError> {
    let (field, dim, data, source_out, seed) = match source {
        Source::File { path, instance } => (
            instance.field,
            instance.ambient_dim,
            Data::File { subspaces: instance.subspace_values(), orthos: instance.ortho_values(), operators: instance.operator_values() },
            SourceOut::File { path: path.clone() },
            seed,
        ),
        &Source::Random { dim, count, seed } => (field, dim, Data::Random { count }, SourceOut::Random { count, seed }, seed),
    };
    let mut selected: Vec<Suite> = if laws.is_empty() || laws.contains(&Suite::All) { Suite::RUNNABLE.to_vec() } else { laws.to_vec() };
    let mut catalog: Vec<CatalogLaw> = selected.iter().flat_map(|s| s.catalog_laws().iter().copied()).collect();
    catalog.sort_by_key(|l| CatalogLaw::ALL.iter().position(|c| c == l));
    catalog.dedup();
    selected.retain(|s| s.catalog_laws().is_empty());
    selected.sort();
    selected.dedup();
    if !catalog.is_empty() {
        selected.push(Suite::Catalog);
    }

    let mut suites = Vec::new();
    for suite in selected {
        let k = Suite::RUNNABLE.iter().position(|s| *s == suite).expect("runnable suite") as u64;
        let mut sampler = Sampler::new(field, dim, seed.wrapping_mul(31).wrapping_add(k));
        suites.push(run_suite(suite, &catalog, &data, &mut sampler)?);
    }
    let proved_violations = suites.iter().map(SuiteReport::proved_violations).sum();
    let expected_failures = suites
        .iter()
        .flat_map(|s| &s.laws)
        .filter(|l| l.expectation == Expectation::ExpectedFail)
        .map(|l| l.violations.len())
        .sum();
    Ok(CheckReport { field, ambient_dim: dim, source: source_out, seed, suites, proved_violations, expected_failures })
}

#[derive(Clone, Debug, Serialize)]
pub struct ProjectReport {
    pub ortho: String,
    pub x: Vec<String>,
    pub in_domain: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l1: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l0: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    text: String,
}

impl Report for ProjectReport {
    fn text(&self) -> String {
        self.text.clone()
    }
}

pub fn project(inst: &Instance, name: &str, x: &str) -> Result<ProjectReport, CliError> {
    let l = inst.get_ortho(name)?;
    let f = inst.field;
    let x = parse_vector(x, f, inst.ambient_dim)?;
    let base = ProjectReport { ortho: name.to_string(), x: x.encode(f), in_domain: false, l1: None, l0: None, error: None, text: String::new() };
    Ok(match decompose(l, &x) {
        Ok((l1, l0)) => ProjectReport {
            in_domain: true,
            text: format!("l1 = {}\nl0 = {}", render::vector(&l1), render::vector(&l0)),
            l1: Some(l1.encode(f)),
            l0: Some(l0.encode(f)),
            ..base
        },
        Err(Error::NotInDomain(_)) => ProjectReport {
            error: Some("NotInDomain".into()),
            text: format!("NotInDomain: {} is not in dom({name})", render::vector(&x)),
            ..base
        },
        Err(e) => return Err(e.into()),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientReport {
    pub ortho: String,
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub in_domain: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_eq: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_inner: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_norm_sq_x: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_norm_sq_y: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iso_x: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iso_y: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    text: String,
}

impl Report for QuotientReport {
    fn text(&self) -> String {
        self.text.clone()
    }
}

pub fn quotient(inst: &Instance, name: &str, x: &str, y: &str) -> Result<QuotientReport, CliError> {
    let l = inst.get_ortho(name)?;
    let f = inst.field;
    let x = parse_vector(x, f, inst.ambient_dim)?;
    let y = parse_vector(y, f, inst.ambient_dim)?;
    let q = QuotientSpace::new(l.clone());
    let base = QuotientReport {
        ortho: name.to_string(),
        x: x.encode(f),
        y: y.encode(f),
        in_domain: false,
        q_eq: None,
        q_inner: None,
        q_norm_sq_x: None,
        q_norm_sq_y: None,
        iso_x: None,
        iso_y: None,
        error: None,
        text: String::new(),
    };
    let computed = (|| -> orthoql::Result<_> {
        Ok((q.q_eq(&x, &y)?, q.q_inner(&x, &y)?, q.q_norm_sq(&x)?, q.q_norm_sq(&y)?, q.q_iso(&x)?, q.q_iso(&y)?))
    })();
    Ok(match computed {
        Ok((eq, inner, nx, ny, tx, ty)) => {
            let real = |r: orthoql::Rational| orthoql::Scalar::real(r);
            let text = format!(
                "x ≡ y: {eq}\n⟨x, y⟩ = {}\n‖x‖² = {}\n‖y‖² = {}\nT(x) = {}\nT(y) = {}",
                render::scalar(&inner),
                render::scalar(&real(nx.clone())),
                render::scalar(&real(ny.clone())),
                render::vector(&tx),
                render::vector(&ty)
            );
            QuotientReport {
                in_domain: true,
                q_eq: Some(eq),
                q_inner: Some(inner.encode(f)),
                q_norm_sq_x: Some(real(nx).encode(Field::Q)),
                q_norm_sq_y: Some(real(ny).encode(Field::Q)),
                iso_x: Some(tx.encode(f)),
                iso_y: Some(ty.encode(f)),
                text,
                ..base
            }
        }
        Err(Error::NotInDomain(v)) => {
            QuotientReport { error: Some("NotInDomain".into()), text: format!("NotInDomain: {v} is not in dom({name})"), ..base }
        }
        Err(e) => return Err(e.into()),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RoundtripEntry {
    pub name: String,
    pub ji: bool,
    pub ij: bool,
    pub strictness: bool,
    pub totality: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RoundtripReport {
    pub instances: Vec<RoundtripEntry>,
    pub serialization: bool,
    pub all_equal: bool,
}

impl Report for RoundtripReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for e in &self.instances {
            let mark = |b: bool| if b { "ok" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{:<12} j(i(L)) = L {}  i(j(P)) = P {}  strict {}  total {}",
                e.name,
                mark(e.ji),
                mark(e.ij),
                mark(e.strictness),
                mark(e.totality)
            );
        }
        let _ = write!(out, "serialization {}; {} instances, all equal: {}", if self.serialization { "ok" } else { "FAIL" }, self.instances.len(), self.all_equal);
        out
    }

    fn exit_code(&self) -> u8 {
        u8::from(!self.all_equal)
    }
}

pub fn roundtrip(source: &Source, field: Field) -> Result<RoundtripReport, CliError> {
    let generated;
    let inst = match source {
        Source::File { instance, .. } => *instance,
        &Source::Random { dim, count, seed } => {
            generated = Instance::random(field, dim, count, seed);
            &generated
        }
    };
    let mut instances = Vec::new();
    for (name, o) in &inst.ortho {
        let l = &o.value;
        let p = projection_of(l);
        let back = subspaces_of(&p);
        let again = projection_of(&back);
        instances.push(RoundtripEntry {
            name: name.clone(),
            ji: back == *l,
            ij: op_eq(again.as_operator(), p.as_operator())?,
            strictness: p.is_strict() == l.is_strict() && back.is_strict() == p.is_strict(),
            totality: p.as_operator().is_total() == l.is_total() && back.is_total() == l.is_total(),
        });
    }
    let serialization = Instance::from_json(&inst.to_json()).map(|b| b == *inst).unwrap_or(false);
    let all_equal = serialization && instances.iter().all(|e| e.ji && e.ij && e.strictness && e.totality);
    Ok(RoundtripReport { instances, serialization, all_equal })
}

#[derive(Clone, Debug, Serialize)]
pub struct Role {
    pub name: String,
    pub subspace: SubspaceOut,
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    pub law: CatalogLaw,
    pub expectation: Expectation,
    pub field: Field,
    pub ambient_dim: usize,
    pub seed: u64,
    pub budget: usize,
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<orthoql::ortho_lattice::Source>,
    pub roles: Vec<Role>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<SubspaceOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<SubspaceOut>,
    #[serde(skip)]
    text: String,
}

impl Report for CounterexampleReport {
    fn text(&self) -> String {
        self.text.clone()
    }

    fn exit_code(&self) -> u8 {
        u8::from(self.found && self.expectation == Expectation::Proved)
    }
}

pub fn counterexample(law: CatalogLaw, field: Field, dim: usize, seed: u64, budget: usize) -> Result<CounterexampleReport, CliError> {
    let mut s = Sampler::new(field, dim, seed);
    let expectation = if law == CatalogLaw::Modularity { Expectation::Proved } else { Expectation::ExpectedFail };
    let found = find_counterexample(law, &mut s, budget)?;
    let mut r = CounterexampleReport {
        law,
        expectation,
        field,
        ambient_dim: dim,
        seed,
        budget,
        found: found.is_some(),
        source: None,
        roles: Vec::new(),
        description: None,
        lhs: None,
        rhs: None,
        text: format!("{law}: no counterexample in {field}^{dim} within budget {budget}"),
    };
    if let Some(c) = found {
        let origin = match c.source {
            orthoql::ortho_lattice::Source::Catalog => "catalog",
            orthoql::ortho_lattice::Source::Sampled => "sampled",
        };
        let mut text = format!("{law} ({origin}): {}", c.violated.description);
        for (name, sub) in &c.roles {
            let _ = write!(text, "\n  {name} = span {}", render::basis(sub));
            r.roles.push(Role { name: name.clone(), subspace: SubspaceOut::of(sub, field) });
        }
        let _ = write!(text, "\n  lhs = span {}\n  rhs = span {}", render::basis(&c.violated.lhs), render::basis(&c.violated.rhs));
        r.source = Some(c.source);
        r.description = Some(c.violated.description.clone());
        r.lhs = Some(SubspaceOut::of(&c.violated.lhs, field));
        r.rhs = Some(SubspaceOut::of(&c.violated.rhs, field));
        r.text = text;
    }
    Ok(r)
}
