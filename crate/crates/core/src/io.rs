//! JSON forms of the toolkit's inputs and outputs. Every document written by
//! the CLI carries a top-level `"schema"` key naming its format and version.

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::koszul::FiniteComplex;
use crate::linalg::Matrix;
use crate::pairs::Pair;
use crate::rational::{format, serde_q::value_to_q, Q};
use crate::rep::{key_len, BasisKey, ModuleDescriptor, Shape, WeightedVector};

pub const SCHEMA_VERSION: &str = "v1";

/// `"semipair.<kind>.v1"`.
pub fn schema_name(kind: &str) -> String {
    format!("semipair.{kind}.{SCHEMA_VERSION}")
}

/// Serializes `body` and inserts the schema key. Non-object bodies are wrapped
/// under `"result"`.
pub fn envelope<T: Serialize>(kind: &str, body: &T) -> Result<Value> {
    let v = serde_json::to_value(body).map_err(|e| Error::Invalid(e.to_string()))?;
    let mut map = match v {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("result".into(), other);
            m
        }
    };
    map.insert("schema".into(), Value::String(schema_name(kind)));
    Ok(Value::Object(map))
}

pub fn ser_matrix<S: Serializer>(m: &Matrix, s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(m.rows()))?;
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(format).collect();
        seq.serialize_element(&row)?;
    }
    seq.end()
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(|x| Value::String(format(x))).collect()))
            .collect(),
    )
}

/// Rows of rationals given as strings or numbers.
pub fn matrix_from_json(v: &Value, rows: usize, cols: usize) -> Result<Matrix> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?;
    if arr.len() != rows {
        return Err(Error::MalformedComplex(format!(
            "matrix has {} rows, expected {rows}",
            arr.len()
        )));
    }
    let mut m = Matrix::zeros(rows, cols);
    for (r, row) in arr.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Parse(format!("row {r} is not an array")))?;
        if row.len() != cols {
            return Err(Error::MalformedComplex(format!(
                "row {r} has {} entries, expected {cols}",
                row.len()
            )));
        }
        for (c, x) in row.iter().enumerate() {
            m[(r, c)] = value_to_q(x)?;
        }
    }
    Ok(m)
}

#[derive(Debug, Serialize, Deserialize)]
struct TermJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    factors: Option<Vec<Vec<i64>>>,
    coeff: Value,
}

#[derive(Debug, Serialize, Deserialize)]
struct VectorJson {
    n: usize,
    shape: String,
    terms: Vec<TermJson>,
}

/// `{"n":1,"shape":"Sym(2)","terms":[{"weight":[1,1],"coeff":"1"}]}`; tensor
/// terms list their factor keys under `"factors"` instead of `"weight"`.
pub fn vector_to_json(v: &WeightedVector) -> Value {
    let m = v.module();
    let lens: Vec<usize> = match &m.shape {
        Shape::Tensor(parts) => parts.iter().map(|p| key_len(m.rank(), p)).collect(),
        _ => Vec::new(),
    };
    let terms = v
        .terms()
        .iter()
        .map(|(k, c)| {
            let coeff = Value::String(format(c));
            if lens.is_empty() {
                TermJson {
                    weight: Some(k.clone()),
                    factors: None,
                    coeff,
                }
            } else {
                let mut off = 0;
                let factors = lens
                    .iter()
                    .map(|&l| {
                        off += l;
                        k[off - l..off].to_vec()
                    })
                    .collect();
                TermJson {
                    weight: None,
                    factors: Some(factors),
                    coeff,
                }
            }
        })
        .collect();
    serde_json::to_value(VectorJson {
        n: m.n,
        shape: m.shape.to_string(),
        terms,
    })
    .expect("plain data")
}

pub fn vector_from_json(v: &Value) -> Result<WeightedVector> {
    let raw: VectorJson =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let module = ModuleDescriptor::new(raw.n, raw.shape.parse()?)?;
    let mut terms: Vec<(BasisKey, Q)> = Vec::with_capacity(raw.terms.len());
    for t in raw.terms {
        let key = match (t.weight, t.factors) {
            (Some(w), None) => w,
            (None, Some(f)) => f.concat(),
            (None, None) if module.shape == Shape::Trivial => Vec::new(),
            _ => {
                return Err(Error::Parse(
                    "each term needs exactly one of \"weight\" or \"factors\"".into(),
                ))
            }
        };
        terms.push((key, value_to_q(&t.coeff)?));
    }
    WeightedVector::new(module, terms)
}

pub fn pair_to_json(p: &Pair) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), Value::String(schema_name("pair")));
    m.insert("v".into(), vector_to_json(p.v()));
    m.insert("w".into(), vector_to_json(p.w()));
    Value::Object(m)
}

pub fn pair_from_json(v: &Value) -> Result<Pair> {
    let get = |k: &str| {
        v.get(k)
            .ok_or_else(|| Error::Parse(format!("pair is missing \"{k}\"")))
    };
    Pair::new(vector_from_json(get("v")?)?, vector_from_json(get("w")?)?)
}

/// `{"dims":[...],"maps":[[[...]],...]}`.
pub fn complex_from_json(v: &Value) -> Result<FiniteComplex> {
    let dims: Vec<usize> = serde_json::from_value(
        v.get("dims")
            .cloned()
            .ok_or_else(|| Error::Parse("complex is missing \"dims\"".into()))?,
    )
    .map_err(|e| Error::Parse(e.to_string()))?;
    let maps = v
        .get("maps")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("complex is missing \"maps\"".into()))?;
    if dims.is_empty() || maps.len() + 1 != dims.len() {
        return Err(Error::MalformedComplex(format!(
            "{} terms with {} maps",
            dims.len(),
            maps.len()
        )));
    }
    let mats = maps
        .iter()
        .enumerate()
        .map(|(i, m)| matrix_from_json(m, dims[i + 1], dims[i]))
        .collect::<Result<Vec<_>>>()?;
    FiniteComplex::new(dims, mats)
}

pub fn complex_to_json(c: &FiniteComplex) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), Value::String(schema_name("complex")));
    m.insert(
        "dims".into(),
        serde_json::to_value(c.dims()).expect("plain data"),
    );
    m.insert(
        "maps".into(),
        Value::Array(c.maps().iter().map(matrix_to_json).collect()),
    );
    Value::Object(m)
}

/// Integer point sets: a bare array or `{"points":[...]}`.
pub fn points_from_json(v: &Value) -> Result<Vec<Vec<i64>>> {
    let inner = v.get("points").unwrap_or(v);
    serde_json::from_value(inner.clone()).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses JSON text, reporting the line and column of a syntax error.
pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("{e} (line {}, column {})", e.line(), e.column())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn vector_round_trips() {
        let m = ModuleDescriptor::tensor(2, vec![Shape::Sym(1), Shape::Wedge(2), Shape::Sym(1)]);
        let v = WeightedVector::new(m, [(vec![0, 1, 0, 1, 0, 1, 1, 0, 0], ratio(1, 2))]).unwrap();
        let j = vector_to_json(&v);
        assert_eq!(
            j["terms"][0]["factors"],
            serde_json::json!([[0, 1, 0], [1, 0, 1], [1, 0, 0]])
        );
        assert_eq!(vector_from_json(&j).unwrap(), v);
        let s = WeightedVector::new(ModuleDescriptor::sym(1, 2), [(vec![1, 1], int(3))]).unwrap();
        assert_eq!(vector_from_json(&vector_to_json(&s)).unwrap(), s);
        let one = WeightedVector::one(1);
        assert_eq!(vector_from_json(&vector_to_json(&one)).unwrap(), one);
    }

    #[test]
    fn numbers_and_strings_accepted() {
        let j = serde_json::json!({"n":1,"shape":"Sym(2)","terms":[{"weight":[2,0],"coeff":2},{"weight":[0,2],"coeff":"-1/3"}]});
        let v = vector_from_json(&j).unwrap();
        assert_eq!(v.coefficient(&[0, 2]), ratio(-1, 3));
        let bad = serde_json::json!({"n":1,"shape":"Sym(2)","terms":[{"weight":[2,1],"coeff":1}]});
        assert!(vector_from_json(&bad).is_err());
    }

    #[test]
    fn complex_round_trip() {
        let j = serde_json::json!({"dims":[1,2,1],"maps":[[["1"],["2"]],[[2,-1]]]});
        let c = complex_from_json(&j).unwrap();
        assert_eq!(complex_from_json(&complex_to_json(&c)).unwrap(), c);
        let bad = serde_json::json!({"dims":[1,2],"maps":[[["1"]]]});
        assert!(complex_from_json(&bad).is_err());
    }

    #[test]
    fn envelope_and_parse_errors() {
        let e = envelope("thing", &vec![1, 2]).unwrap();
        assert_eq!(e["schema"], "semipair.thing.v1");
        assert_eq!(e["result"], serde_json::json!([1, 2]));
        let err = parse_json("{\"a\": \n ]").unwrap_err();
        assert!(err.to_string().contains("line 2"));
        assert_eq!(
            points_from_json(&serde_json::json!({"points":[[1,2]]})).unwrap(),
            vec![vec![1, 2]]
        );
    }
}
