//! Resolving `-p/-f/-g` arguments: an inline expression, or `@file` holding
//! an expression, a JSON coefficient array, or a JSON document produced by
//! this tool (its `input` field is read back).

use std::fs;

use recprs_core::rational::parse_fraction;
use recprs_core::{parse_polynomial, Polynomial};
use serde_json::Value;

use crate::Failure;

/// Which operand a file is asked to supply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    P,
    F,
    G,
}

impl Slot {
    fn flag(self) -> &'static str {
        match self {
            Slot::P => "-p",
            Slot::F => "-f",
            Slot::G => "-g",
        }
    }
}

pub fn resolve(arg: &str, slot: Slot) -> Result<Polynomial, Failure> {
    let Some(path) = arg.strip_prefix('@') else {
        return parse_polynomial(arg).map_err(|e| Failure::usage(format!("{}: {e}", slot.flag())));
    };
    let bytes = fs::read(path).map_err(|e| Failure::usage(format!("{}: cannot read {path}: {e}", slot.flag())))?;
    let text = String::from_utf8(bytes)
        .map_err(|_| Failure::usage(format!("{}: {path} is not UTF-8", slot.flag())))?;
    from_text(&text, slot).map_err(|msg| Failure::usage(format!("{}: {path}: {msg}", slot.flag())))
}

fn from_text(text: &str, slot: Slot) -> Result<Polynomial, String> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        let value: Value = serde_json::from_str(trimmed).map_err(|e| format!("invalid JSON: {e}"))?;
        return from_json(&value, slot);
    }
    parse_polynomial(text).map_err(|e| e.to_string())
}

fn from_json(value: &Value, slot: Slot) -> Result<Polynomial, String> {
    match value {
        Value::Array(items) => coefficients(items),
        Value::Object(map) => {
            let input = map
                .get("input")
                .and_then(Value::as_object)
                .ok_or("JSON document has no `input` object")?;
            let keys: &[&str] = match slot {
                Slot::P => &["p", "f"],
                Slot::F => &["f"],
                Slot::G => &["g"],
            };
            let found = keys
                .iter()
                .find_map(|k| input.get(*k))
                .ok_or_else(|| format!("`input` has no {}", keys.join(" or ")))?;
            match found {
                Value::Array(items) => coefficients(items),
                _ => Err("input polynomial must be a coefficient array".into()),
            }
        }
        _ => Err("expected a coefficient array or a report object".into()),
    }
}

/// Low-degree-first coefficients, each a `"a/b"` string or a JSON integer.
fn coefficients(items: &[Value]) -> Result<Polynomial, String> {
    items
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let parsed = match v {
                Value::String(s) => parse_fraction(s),
                Value::Number(n) if n.is_i64() || n.is_u64() => parse_fraction(&n.to_string()),
                _ => None,
            };
            parsed.ok_or_else(|| format!("coefficient {i} is not an exact rational: {v}"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Polynomial::new)
}
