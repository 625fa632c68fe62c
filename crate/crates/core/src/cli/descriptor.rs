//! JSON knot descriptors `{"name": str?, "genus": g, "seifert": [[int]]}`
//! and curve assignment files `{"classes": [{"v": [x, y], "knot": ...}]}`.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use super::Failure;
use crate::genus1::MetabolizerClass;
use crate::seifert::SeifertMatrix;

#[derive(Clone, Debug)]
pub struct KnotDescriptor {
    pub name: Option<String>,
    pub seifert: SeifertMatrix,
}

impl KnotDescriptor {
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        if let Some(name) = &self.name {
            obj.insert("name".into(), Value::String(name.clone()));
        }
        obj.insert("genus".into(), json!(self.seifert.genus()));
        let rows: Vec<Value> = self
            .seifert
            .entries()
            .iter()
            .map(|row| Value::Array(row.iter().map(big_number).collect()))
            .collect();
        obj.insert("seifert".into(), Value::Array(rows));
        Value::Object(obj)
    }
}

pub fn big_number(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integers are valid JSON numbers"))
}

fn parse_err(msg: impl Into<String>) -> Failure {
    Failure::Parse(msg.into())
}

fn integer(v: &Value, what: &str) -> Result<BigInt, Failure> {
    let Value::Number(n) = v else {
        return Err(parse_err(format!("{what}: expected an integer, got {v}")));
    };
    BigInt::from_str(&n.to_string()).map_err(|_| parse_err(format!("{what}: {n} is not an integer")))
}

pub fn parse_descriptor(v: &Value) -> Result<KnotDescriptor, Failure> {
    let Value::Object(obj) = v else {
        return Err(parse_err("knot descriptor must be a JSON object"));
    };
    let name = match obj.get("name") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(other) => return Err(parse_err(format!("name: expected a string, got {other}"))),
    };
    let genus = obj.get("genus").ok_or_else(|| parse_err("missing field \"genus\""))?;
    let genus = integer(genus, "genus")?;
    let Some(Value::Array(rows)) = obj.get("seifert") else {
        return Err(parse_err("missing or non-array field \"seifert\""));
    };
    let raw = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let Value::Array(cells) = row else {
                return Err(parse_err(format!("seifert row {i} is not an array")));
            };
            cells
                .iter()
                .enumerate()
                .map(|(j, c)| integer(c, &format!("seifert[{i}][{j}]")))
                .collect()
        })
        .collect::<Result<Vec<Vec<BigInt>>, _>>()?;
    if genus != BigInt::from(raw.len() / 2) || raw.len() % 2 == 1 {
        return Err(Failure::InvalidMatrix(format!(
            "genus {genus} does not match a {n}x{n} matrix",
            n = raw.len()
        )));
    }
    let seifert = SeifertMatrix::validate(raw).map_err(|e| Failure::InvalidMatrix(e.to_string()))?;
    Ok(KnotDescriptor { name, seifert })
}

pub fn parse_json(text: &str) -> Result<Value, Failure> {
    serde_json::from_str(text).map_err(|e| parse_err(format!("malformed JSON: {e}")))
}

pub fn parse_assignments(v: &Value) -> Result<BTreeMap<MetabolizerClass, KnotDescriptor>, Failure> {
    let Some(Value::Array(entries)) = v.get("classes") else {
        return Err(parse_err("assignment file needs an array field \"classes\""));
    };
    let mut out = BTreeMap::new();
    for (i, entry) in entries.iter().enumerate() {
        let Some(Value::Array(coords)) = entry.get("v") else {
            return Err(parse_err(format!("classes[{i}]: missing array field \"v\"")));
        };
        if coords.len() != 2 {
            return Err(parse_err(format!("classes[{i}].v must have two entries")));
        }
        let x = integer(&coords[0], "v[0]")?;
        let y = integer(&coords[1], "v[1]")?;
        let class = MetabolizerClass::primitive(x.clone(), y.clone())
            .filter(|c| c.x() == &x || c.x() == &-&x)
            .ok_or_else(|| Failure::Semantic(format!("classes[{i}]: ({x}, {y}) is not a primitive class")))?;
        let knot = entry
            .get("knot")
            .ok_or_else(|| parse_err(format!("classes[{i}]: missing field \"knot\"")))?;
        let knot = parse_descriptor(knot)?;
        if out.insert(class.clone(), knot).is_some() {
            return Err(Failure::Semantic(format!("class {class} assigned twice")));
        }
    }
    Ok(out)
}
