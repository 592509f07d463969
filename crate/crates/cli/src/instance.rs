//! Instance files: named subspaces, orthocomplemented pairs and partial
//! operators over one field and ambient dimension.

use std::collections::BTreeMap;
use std::path::Path;

use orthoql::{Field, Matrix, OrthoSubspace, PartialOperator, Sampler, Scalar, Subspace, Vector};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceEntry {
    pub basis: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrthoEntry {
    pub one: String,
    pub zero: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorEntry {
    pub dom: String,
    pub matrix: Vec<Vec<String>>,
}

/// The on-disk form, as written and read.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub field: String,
    pub ambient_dim: usize,
    #[serde(default)]
    pub subspaces: BTreeMap<String, SubspaceEntry>,
    #[serde(default)]
    pub ortho: BTreeMap<String, OrthoEntry>,
    #[serde(default)]
    pub operators: BTreeMap<String, OperatorEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ortho {
    pub one_ref: String,
    pub zero_ref: String,
    pub value: OrthoSubspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operator {
    pub dom_ref: String,
    pub value: PartialOperator,
}

/// A validated instance with every reference resolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub field: Field,
    pub ambient_dim: usize,
    pub subspaces: BTreeMap<String, Subspace>,
    pub ortho: BTreeMap<String, Ortho>,
    pub operators: BTreeMap<String, Operator>,
}

/// Names the expression language reserves.
pub const RESERVED: &[&str] =
    &["meet", "join", "neg", "oneg", "perp", "not", "minus", "implies", "iff", "Zero", "One", "0", "H"];

fn decode_vector(entries: &[String], field: Field, n: usize, at: &str) -> Result<Vector, CliError> {
    if entries.len() != n {
        return Err(CliError::input(format!("{at}: expected {n} entries, found {}", entries.len())));
    }
    let xs = entries
        .iter()
        .map(|s| Scalar::decode(s, field).map_err(|e| CliError::input(format!("{at}: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Vector::new(xs))
}

/// Parses a comma-separated vector such as `2,3,0` or `1/2+1i,0`.
pub fn parse_vector(s: &str, field: Field, n: usize) -> Result<Vector, CliError> {
    let entries: Vec<String> = s.split(',').map(|t| t.trim().to_string()).collect();
    decode_vector(&entries, field, n, &format!("vector '{s}'"))
}

fn encode_rows(vs: &[Vector], field: Field) -> Vec<Vec<String>> {
    vs.iter().map(|v| v.encode(field)).collect()
}

impl Instance {
    pub fn empty(field: Field, ambient_dim: usize) -> Self {
        Self { field, ambient_dim, subspaces: BTreeMap::new(), ortho: BTreeMap::new(), operators: BTreeMap::new() }
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let file: InstanceFile = serde_json::from_str(text).map_err(|e| CliError::input(format!("instance file: {e}")))?;
        Self::from_file(&file)
    }

    pub fn from_file(file: &InstanceFile) -> Result<Self, CliError> {
        let field: Field = file.field.parse().map_err(|_| CliError::input(format!("field: expected \"Q\" or \"Qi\", found \"{}\"", file.field)))?;
        let n = file.ambient_dim;
        let mut seen: BTreeMap<&str, &str> = BTreeMap::new();
        let kinds = [
            ("subspace", file.subspaces.keys().collect::<Vec<_>>()),
            ("ortho", file.ortho.keys().collect()),
            ("operator", file.operators.keys().collect()),
        ];
        for (kind, names) in &kinds {
            for name in names {
                if RESERVED.contains(&name.as_str()) {
                    return Err(CliError::input(format!("{kind} '{name}': name is reserved")));
                }
                if let Some(other) = seen.insert(name.as_str(), kind) {
                    return Err(CliError::input(format!("{kind} '{name}': name already used by a {other}")));
                }
            }
        }

        let mut inst = Self::empty(field, n);
        for (name, entry) in &file.subspaces {
            let vs = entry
                .basis
                .iter()
                .enumerate()
                .map(|(k, v)| decode_vector(v, field, n, &format!("subspace '{name}' basis[{k}]")))
                .collect::<Result<Vec<_>, _>>()?;
            let s = Subspace::span(field, n, &vs).map_err(|e| CliError::input(format!("subspace '{name}': {e}")))?;
            inst.subspaces.insert(name.clone(), s);
        }
        let lookup = |inst: &Self, owner: &str, r: &str| -> Result<Subspace, CliError> {
            inst.subspaces.get(r).cloned().ok_or_else(|| CliError::input(format!("{owner}: unknown subspace '{r}'")))
        };
        for (name, entry) in &file.ortho {
            let owner = format!("ortho '{name}'");
            let one = lookup(&inst, &owner, &entry.one)?;
            let zero = lookup(&inst, &owner, &entry.zero)?;
            let value = OrthoSubspace::new(one, zero).map_err(|e| CliError::input(format!("{owner}: {e}")))?;
            inst.ortho.insert(name.clone(), Ortho { one_ref: entry.one.clone(), zero_ref: entry.zero.clone(), value });
        }
        for (name, entry) in &file.operators {
            let owner = format!("operator '{name}'");
            let dom = lookup(&inst, &owner, &entry.dom)?;
            if entry.matrix.len() != n {
                return Err(CliError::input(format!("{owner}: expected {n} matrix rows, found {}", entry.matrix.len())));
            }
            let rows = entry
                .matrix
                .iter()
                .enumerate()
                .map(|(r, row)| decode_vector(row, field, n, &format!("{owner} row {r}")))
                .collect::<Result<Vec<_>, _>>()?;
            let m = Matrix::from_row_vectors(&rows, n).map_err(|e| CliError::input(format!("{owner}: {e}")))?;
            let value = PartialOperator::new(dom, m).map_err(|e| CliError::input(format!("{owner}: {e}")))?;
            inst.operators.insert(name.clone(), Operator { dom_ref: entry.dom.clone(), value });
        }
        Ok(inst)
    }

    /// The canonical file form: RREF bases and domain-normalized matrices.
    pub fn to_file(&self) -> InstanceFile {
        let f = self.field;
        InstanceFile {
            field: f.to_string(),
            ambient_dim: self.ambient_dim,
            subspaces: self
                .subspaces
                .iter()
                .map(|(k, s)| (k.clone(), SubspaceEntry { basis: encode_rows(&s.basis_vectors(), f) }))
                .collect(),
            ortho: self
                .ortho
                .iter()
                .map(|(k, o)| (k.clone(), OrthoEntry { one: o.one_ref.clone(), zero: o.zero_ref.clone() }))
                .collect(),
            operators: self
                .operators
                .iter()
                .map(|(k, t)| {
                    (k.clone(), OperatorEntry { dom: t.dom_ref.clone(), matrix: encode_rows(&t.value.matrix().row_vectors(), f) })
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("instance files always serialize")
    }

    /// `count` random subspaces `S*`, pairs `L*` and operators `T*`.
    pub fn random(field: Field, ambient_dim: usize, count: usize, seed: u64) -> Self {
        let mut s = Sampler::new(field, ambient_dim, seed);
        let mut inst = Self::empty(field, ambient_dim);
        for k in 0..count {
            inst.subspaces.insert(format!("S{k}"), s.subspace());
        }
        for k in 0..count {
            let l = s.ortho();
            let (one_ref, zero_ref) = (format!("L{k}_one"), format!("L{k}_zero"));
            inst.subspaces.insert(one_ref.clone(), l.one().clone());
            inst.subspaces.insert(zero_ref.clone(), l.zero().clone());
            inst.ortho.insert(format!("L{k}"), Ortho { one_ref, zero_ref, value: l });
        }
        for k in 0..count {
            let t = if k % 3 == 0 { s.total_operator() } else { s.operator() };
            let dom_ref = format!("T{k}_dom");
            inst.subspaces.insert(dom_ref.clone(), t.dom().clone());
            inst.operators.insert(format!("T{k}"), Operator { dom_ref, value: t });
        }
        inst
    }

    pub fn ortho_values(&self) -> Vec<OrthoSubspace> {
        self.ortho.values().map(|o| o.value.clone()).collect()
    }

    pub fn operator_values(&self) -> Vec<PartialOperator> {
        self.operators.values().map(|t| t.value.clone()).collect()
    }

    pub fn subspace_values(&self) -> Vec<Subspace> {
        self.subspaces.values().cloned().collect()
    }

    pub fn get_ortho(&self, name: &str) -> Result<&OrthoSubspace, CliError> {
        self.ortho.get(name).map(|o| &o.value).ok_or_else(|| CliError::input(format!("unknown ortho pair '{name}'")))
    }
}
