//! Prefix lattice expressions such as `meet A (join B C)` or `implies Zero L`.
//!
//! Atoms are instance names plus `0` and `H` (subspaces) and `Zero` and
//! `One` (pairs). Parentheses and commas only separate tokens.

use orthoql::{OrthoSubspace, Subspace};

use crate::error::CliError;
use crate::instance::Instance;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Subspace(Subspace),
    Ortho(OrthoSubspace),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Subspace(_) => "subspace",
            Value::Ortho(_) => "ortho pair",
        }
    }
}

pub fn tokenize(src: &str) -> Vec<String> {
    src.split(|c: char| c.is_whitespace() || c == '(' || c == ')' || c == ',')
        .filter(|t| !t.is_empty())
        .map(str::to_string)
        .collect()
}

fn arity(op: &str) -> Option<usize> {
    match op {
        "meet" | "join" | "minus" | "implies" | "iff" => Some(2),
        "neg" | "oneg" | "perp" | "not" => Some(1),
        _ => None,
    }
}

pub fn evaluate(inst: &Instance, src: &str) -> Result<Value, CliError> {
    let tokens = tokenize(src);
    if tokens.is_empty() {
        return Err(CliError::input("empty expression"));
    }
    let mut pos = 0;
    let v = parse(inst, &tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(CliError::input(format!("unexpected token '{}' after a complete expression", tokens[pos])));
    }
    Ok(v)
}

fn parse(inst: &Instance, tokens: &[String], pos: &mut usize) -> Result<Value, CliError> {
    let Some(tok) = tokens.get(*pos) else {
        return Err(CliError::input("expression ends early"));
    };
    *pos += 1;
    let Some(n) = arity(tok) else {
        return atom(inst, tok);
    };
    let mut args = Vec::with_capacity(n);
    for _ in 0..n {
        args.push(parse(inst, tokens, pos)?);
    }
    apply(tok, args)
}

fn atom(inst: &Instance, tok: &str) -> Result<Value, CliError> {
    let (f, n) = (inst.field, inst.ambient_dim);
    Ok(match tok {
        "0" => Value::Subspace(Subspace::zero(f, n)),
        "H" => Value::Subspace(Subspace::whole(f, n)),
        "Zero" => Value::Ortho(OrthoSubspace::bottom(f, n)),
        "One" => Value::Ortho(OrthoSubspace::top(f, n)),
        _ => {
            if let Some(s) = inst.subspaces.get(tok) {
                Value::Subspace(s.clone())
            } else if let Some(o) = inst.ortho.get(tok) {
                Value::Ortho(o.value.clone())
            } else {
                return Err(CliError::input(format!("unknown name '{tok}'")));
            }
        }
    })
}

fn mismatch(op: &str, args: &[Value]) -> CliError {
    let kinds: Vec<_> = args.iter().map(Value::kind).collect();
    CliError::input(format!("'{op}' does not apply to ({})", kinds.join(", ")))
}

fn apply(op: &str, args: Vec<Value>) -> Result<Value, CliError> {
    use Value::{Ortho, Subspace as Sub};
    Ok(match (op, args.as_slice()) {
        ("meet", [Sub(a), Sub(b)]) => Sub(a.meet(b)?),
        ("join", [Sub(a), Sub(b)]) => Sub(a.join(b)?),
        ("minus", [Sub(a), Sub(b)]) => Sub(a.meet(&b.perp())?),
        ("implies", [Sub(a), Sub(b)]) => Sub(a.perp().join(b)?),
        ("neg" | "perp", [Sub(a)]) => Sub(a.perp()),
        ("meet", [Ortho(a), Ortho(b)]) => Ortho(a.meet(b)?),
        ("join", [Ortho(a), Ortho(b)]) => Ortho(a.join(b)?),
        ("minus", [Ortho(a), Ortho(b)]) => Ortho(a.minus(b)?),
        ("implies", [Ortho(a), Ortho(b)]) => Ortho(a.implies(b)?),
        ("iff", [Ortho(a), Ortho(b)]) => Ortho(a.iff(b)?),
        ("neg" | "oneg", [Ortho(a)]) => Ortho(a.neg()),
        ("not", [Ortho(a)]) => Ortho(a.not()),
        _ => return Err(mismatch(op, &args)),
    })
}
