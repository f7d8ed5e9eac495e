//! JSON file formats.
//!
//! A matrix is `{"rows": r, "cols": c, "entries": [[...], ...]}` where each
//! entry is a scalar literal string (`"3/2"`, `"1-2i"`, `"-i"`) or a plain
//! JSON integer. Instance files combine named matrices:
//!
//! | keys               | kind                                  |
//! |--------------------|---------------------------------------|
//! | `rows`, `entries`  | a single square matrix                |
//! | `P`, `Q`           | additive pair, `Q` defaults to zero   |
//! | `E`, `F`           | anti-triangular `[[E, I], [F, 0]]`    |
//! | `A`, `B`, `C`, `D` | block matrix                          |

use std::path::Path;

use drazin_core::gen::Instance;
use drazin_core::{BlockInstance, Matrix, Scalar};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Literal {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Literal>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &Matrix) -> Self {
        let entries = (0..m.rows())
            .map(|r| m.row(r).iter().map(|v| Literal::Text(v.to_string())).collect())
            .collect();
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries,
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix, CliError> {
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(CliError::Format(format!(
                "entries do not form a {}x{} array",
                self.rows, self.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for lit in self.entries.iter().flatten() {
            data.push(match lit {
                Literal::Int(k) => Scalar::from(*k),
                Literal::Text(s) => s.parse().map_err(|e| CliError::Format(format!("{e}")))?,
            });
        }
        Ok(Matrix::from_vec(self.rows, self.cols, data).expect("shape checked"))
    }
}

/// Parsed content of an input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Single(Matrix),
    Instance(Instance),
}

fn field(obj: &Map<String, Value>, key: &str) -> Result<Option<Matrix>, CliError> {
    obj.get(key)
        .map(|v| {
            let mf: MatrixFile = serde_json::from_value(v.clone())
                .map_err(|e| CliError::Format(format!("matrix {key}: {e}")))?;
            mf.to_matrix()
        })
        .transpose()
}

fn required(obj: &Map<String, Value>, key: &str) -> Result<Matrix, CliError> {
    field(obj, key)?.ok_or_else(|| CliError::Format(format!("missing matrix {key}")))
}

fn square_pair(x: &Matrix, y: &Matrix, names: &str) -> Result<(), CliError> {
    if x.is_square() && x.shape() == y.shape() {
        Ok(())
    } else {
        Err(CliError::Format(format!(
            "{names} must be square of one size, got {:?} and {:?}",
            x.shape(),
            y.shape()
        )))
    }
}

pub fn parse_input(text: &str) -> Result<Input, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::Format(e.to_string()))?;
    let Value::Object(obj) = value else {
        return Err(CliError::Format("expected a JSON object".into()));
    };
    if obj.contains_key("entries") {
        let mf: MatrixFile =
            serde_json::from_value(Value::Object(obj)).map_err(|e| CliError::Format(e.to_string()))?;
        return mf.to_matrix().map(Input::Single);
    }
    if obj.contains_key("P") {
        let p = required(&obj, "P")?;
        let q = field(&obj, "Q")?.unwrap_or_else(|| Matrix::zeros(p.rows(), p.cols()));
        square_pair(&p, &q, "P and Q")?;
        return Ok(Input::Instance(Instance::Pair { p, q }));
    }
    if obj.contains_key("E") {
        let e = required(&obj, "E")?;
        let f = required(&obj, "F")?;
        square_pair(&e, &f, "E and F")?;
        return Ok(Input::Instance(Instance::AntiTri { e, f }));
    }
    if obj.contains_key("A") {
        let block = BlockInstance::new(
            required(&obj, "A")?,
            required(&obj, "B")?,
            required(&obj, "C")?,
            required(&obj, "D")?,
        )?;
        return Ok(Input::Instance(Instance::Block(block)));
    }
    Err(CliError::Format(
        "unrecognised file: expected entries, P/Q, E/F or A/B/C/D".into(),
    ))
}

pub fn read_input(path: &Path) -> Result<Input, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Format(format!("{}: {e}", path.display())))?;
    parse_input(&text)
}

pub fn instance_to_json(inst: &Instance) -> Value {
    let mut obj = Map::new();
    let mut put = |k: &str, m: &Matrix| {
        obj.insert(k.into(), serde_json::to_value(MatrixFile::from_matrix(m)).unwrap());
    };
    match inst {
        Instance::Pair { p, q } => {
            put("P", p);
            put("Q", q);
        }
        Instance::AntiTri { e, f } => {
            put("E", e);
            put("F", f);
        }
        Instance::Block(b) => {
            put("A", &b.a);
            put("B", &b.b);
            put("C", &b.c);
            put("D", &b.d);
        }
    }
    Value::Object(obj)
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    serde_json::to_value(MatrixFile::from_matrix(m)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn scalar() -> impl Strategy<Value = Scalar> {
        (-20i64..=20, 1i64..=7, -20i64..=20, 1i64..=7).prop_map(|(a, b, c, d)| {
            Scalar::ratio(a, b) + Scalar::ratio(c, d) * Scalar::i()
        })
    }

    fn matrix() -> impl Strategy<Value = Matrix> {
        (0usize..=4, 0usize..=4).prop_flat_map(|(r, c)| {
            proptest::collection::vec(scalar(), r * c)
                .prop_map(move |v| Matrix::from_vec(r, c, v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn matrix_round_trip(m in matrix()) {
            let text = serde_json::to_string(&MatrixFile::from_matrix(&m)).unwrap();
            let back: MatrixFile = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back.to_matrix().unwrap(), m);
        }
    }

    #[test]
    fn accepts_ints_and_literals() {
        let text = r#"{"rows": 2, "cols": 2, "entries": [[1, "1/2"], [" 1 + i ", "-i"]]}"#;
        let Input::Single(m) = parse_input(text).unwrap() else { panic!() };
        assert_eq!(m[(0, 1)], Scalar::ratio(1, 2));
        assert_eq!(m[(1, 0)], Scalar::gaussian(1, 1));
        assert_eq!(m[(1, 1)], -Scalar::i());
    }

    #[test]
    fn rejects_bad_shapes_and_literals() {
        for text in [
            r#"{"rows": 2, "cols": 2, "entries": [[1, 2]]}"#,
            r#"{"rows": 1, "cols": 1, "entries": [["1/0"]]}"#,
            r#"{"rows": 1, "cols": 1, "entries": [["x"]]}"#,
            r#"[1, 2]"#,
            r#"{"Z": 1}"#,
            r#"{"P": {"rows": 1, "cols": 1, "entries": [[1]]}, "Q": {"rows": 2, "cols": 2, "entries": [[1, 0], [0, 1]]}}"#,
            r#"{"E": {"rows": 1, "cols": 1, "entries": [[1]]}}"#,
        ] {
            assert!(matches!(parse_input(text), Err(CliError::Format(_))), "{text}");
        }
    }

    #[test]
    fn missing_q_is_zero() {
        let text = r#"{"P": {"rows": 1, "cols": 1, "entries": [[2]]}}"#;
        let Input::Instance(Instance::Pair { q, .. }) = parse_input(text).unwrap() else { panic!() };
        assert!(q.is_zero());
    }

    #[test]
    fn instance_round_trip() {
        let block = BlockInstance::new(
            Matrix::from_i64(&[[0, 1], [0, 0]]),
            Matrix::from_i64(&[[0, 2], [0, 0]]),
            Matrix::from_i64(&[[0, 1], [0, -1]]),
            Matrix::from_i64(&[[-1, 1], [0, 0]]),
        )
        .unwrap();
        let inst = Instance::Block(block);
        let text = instance_to_json(&inst).to_string();
        assert_eq!(parse_input(&text).unwrap(), Input::Instance(inst));
    }
}
