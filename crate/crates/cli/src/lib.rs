//! File formats and command implementations behind the `drazin` binary.
//!
//! Every command is a plain function returning an [`Outcome`] so it can be
//! driven in-process as well as from the command line.

pub mod format;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use drazin_core::gen::{self, GenSpec, Instance};
use drazin_core::{drazin_oracle, Error, FormulaId, HypothesisReport, Matrix};
use serde_json::{json, Value};

use crate::format::{instance_to_json, matrix_to_json, read_input, Input};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;
pub const EXIT_EXHAUSTED: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unreadable, malformed or mis-shaped input.
    #[error("{0}")]
    Format(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Format(_) => EXIT_INPUT,
            CliError::Core(e) => match e {
                Error::HypothesisViolated(_) => EXIT_VIOLATED,
                Error::ShapeMismatch { .. }
                | Error::NotSquare { .. }
                | Error::UnknownFormula(_)
                | Error::WrongInputKind { .. } => EXIT_INPUT,
                Error::GenerationExhausted { .. } => EXIT_EXHAUSTED,
                _ => EXIT_INTERNAL,
            },
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            CliError::Core(Error::HypothesisViolated(r)) => {
                format!("error: hypotheses violated\n{}", report_text(r))
            }
            e => format!("error: {e}"),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "error": self.to_string(), "code": self.exit_code() });
        if let CliError::Core(Error::HypothesisViolated(r)) = self {
            v["report"] = report_json(r);
        }
        v
    }
}

/// Exit code plus the human and machine renderings of one result.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub text: String,
    pub json: Value,
}

pub fn report_text(r: &HypothesisReport) -> String {
    let mut s = String::new();
    for c in &r.conditions {
        let _ = write!(s, "{} {}", if c.holds { "ok  " } else { "FAIL" }, c.label);
        if let Some(w) = &c.witness {
            let _ = write!(s, "  witness {w}");
        }
        s.push('\n');
    }
    if r.all_hold() {
        let _ = write!(s, "{}: all conditions hold", r.formula);
    } else {
        let _ = write!(s, "{}: violated: {}", r.formula, r.violated_labels());
    }
    s
}

pub fn report_json(r: &HypothesisReport) -> Value {
    let conditions: Vec<Value> = r
        .conditions
        .iter()
        .map(|c| {
            json!({
                "label": c.label,
                "holds": c.holds,
                "witness": c.witness.as_ref().map(matrix_to_json),
            })
        })
        .collect();
    json!({ "formula": r.formula.as_str(), "all_hold": r.all_hold(), "conditions": conditions })
}

pub fn parse_formula(s: &str) -> Result<FormulaId, CliError> {
    Ok(s.parse::<FormulaId>()?)
}

fn instance_arg(path: &Path) -> Result<Instance, CliError> {
    match read_input(path)? {
        Input::Instance(i) => Ok(i),
        Input::Single(_) => Err(CliError::Format(
            "expected an instance file (P/Q, E/F or A/B/C/D), got a single matrix".into(),
        )),
    }
}

/// `A^D`, the index and `A^π` of a single matrix (or of an assembled instance).
pub fn cmd_drazin(path: &Path) -> Result<Outcome, CliError> {
    let a = match read_input(path)? {
        Input::Single(m) => m,
        Input::Instance(i) => i.target()?,
    };
    let r = drazin_oracle(&a)?;
    Ok(Outcome {
        code: EXIT_OK,
        text: format!(
            "A^D = {}\nindex = {}\nA^pi = {}",
            r.drazin, r.index, r.eigenprojection
        ),
        json: json!({
            "drazin": matrix_to_json(&r.drazin),
            "index": r.index,
            "eigenprojection": matrix_to_json(&r.eigenprojection),
        }),
    })
}

pub fn cmd_check(path: &Path, formula: FormulaId) -> Result<Outcome, CliError> {
    let inst = instance_arg(path)?;
    let r = gen::report_for(formula, &inst)?;
    Ok(Outcome {
        code: if r.all_hold() { EXIT_OK } else { EXIT_VIOLATED },
        text: report_text(&r),
        json: report_json(&r),
    })
}

pub fn cmd_apply(path: &Path, formula: FormulaId) -> Result<Outcome, CliError> {
    let inst = instance_arg(path)?;
    let x = gen::apply(formula, &inst)?;
    Ok(Outcome {
        code: EXIT_OK,
        text: x.to_string(),
        json: json!({ "formula": formula.as_str(), "drazin": matrix_to_json(&x) }),
    })
}

fn first_difference(x: &Matrix, y: &Matrix) -> Option<(usize, usize)> {
    (0..x.rows())
        .flat_map(|r| (0..x.cols()).map(move |c| (r, c)))
        .find(|&(r, c)| x[(r, c)] != y[(r, c)])
}

pub fn cmd_verify(path: &Path, formula: FormulaId) -> Result<Outcome, CliError> {
    let inst = instance_arg(path)?;
    gen::report_for(formula, &inst)?.require()?;
    let x = gen::apply(formula, &inst)?;
    let oracle = drazin_oracle(&inst.target()?)?.drazin;
    Ok(match first_difference(&x, &oracle) {
        None => Outcome {
            code: EXIT_OK,
            text: "EQUAL".into(),
            json: json!({ "formula": formula.as_str(), "equal": true }),
        },
        Some((r, c)) => Outcome {
            code: EXIT_INTERNAL,
            text: format!(
                "DIFFER at ({r}, {c}): formula {}, oracle {}",
                x[(r, c)],
                oracle[(r, c)]
            ),
            json: json!({
                "formula": formula.as_str(),
                "equal": false,
                "row": r,
                "col": c,
                "formula_entry": x[(r, c)].to_string(),
                "oracle_entry": oracle[(r, c)].to_string(),
            }),
        },
    })
}

/// File name of the `k`-th generated instance.
pub fn gen_file_name(case: FormulaId, seed: u64, k: usize) -> String {
    format!("{case}-s{seed}-{k}.json")
}

/// Writes `count` instances, the `k`-th drawn from `spec.nth(k)`.
pub fn cmd_gen(spec: &GenSpec, count: usize, out: &Path) -> Result<Outcome, CliError> {
    std::fs::create_dir_all(out).map_err(|e| CliError::Format(format!("{}: {e}", out.display())))?;
    let mut files: Vec<PathBuf> = Vec::with_capacity(count);
    for k in 0..count {
        let (inst, _) = gen::generate(&spec.nth(k as u64))?;
        let path = out.join(gen_file_name(spec.case, spec.seed, k));
        let mut text = serde_json::to_string_pretty(&instance_to_json(&inst)).unwrap();
        text.push('\n');
        std::fs::write(&path, text).map_err(|e| CliError::Format(format!("{}: {e}", path.display())))?;
        files.push(path);
    }
    let names: Vec<String> = files.iter().map(|p| p.display().to_string()).collect();
    Ok(Outcome {
        code: EXIT_OK,
        text: names.join("\n"),
        json: json!({ "case": spec.case.as_str(), "files": names }),
    })
}
