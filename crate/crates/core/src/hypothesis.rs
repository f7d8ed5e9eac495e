//! Formula identifiers and zero-product hypothesis reports.
//!
//! Formulas are named by their hypothesis signature.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaId {
    /// `PQ = 0`.
    Pq0,
    /// `[[E, I], [F, 0]]` with `FEF^π = 0`.
    AntiTri,
    /// `PQ² = 0`, `PQP(PQ)^π = 0`.
    Pqq0,
    /// `Q² = 0`, `PQP(PQ)^π = 0`.
    Q20,
    /// `PQ² = 0`, `PQP = 0`.
    Pqp0,
    /// `BCB = 0`, `DCB = 0`, `BCA(BC)^π = 0`, `DCA(BC)^π = 0`.
    Bcb,
    /// `BCB = 0`, `BDC = 0`, `BD² = 0`, `BCA(BC)^π = 0`.
    Bdc,
    /// `ABC = 0`, `CBC = 0`, `ABD(CB)^π = 0`, `CBD(CB)^π = 0`.
    Abc,
    /// `CAB = 0`, `CBC = 0`, `A²B = 0`, `CBD(CB)^π = 0`.
    Cab,
}

impl FormulaId {
    pub const ALL: [FormulaId; 9] = [
        FormulaId::Pq0,
        FormulaId::AntiTri,
        FormulaId::Pqq0,
        FormulaId::Q20,
        FormulaId::Pqp0,
        FormulaId::Bcb,
        FormulaId::Bdc,
        FormulaId::Abc,
        FormulaId::Cab,
    ];

    pub const BLOCK: [FormulaId; 4] = [
        FormulaId::Bcb,
        FormulaId::Bdc,
        FormulaId::Abc,
        FormulaId::Cab,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FormulaId::Pq0 => "pq0",
            FormulaId::AntiTri => "antitri",
            FormulaId::Pqq0 => "pqq0",
            FormulaId::Q20 => "q20",
            FormulaId::Pqp0 => "pqp0",
            FormulaId::Bcb => "bcb",
            FormulaId::Bdc => "bdc",
            FormulaId::Abc => "abc",
            FormulaId::Cab => "cab",
        }
    }

    pub fn is_block(self) -> bool {
        Self::BLOCK.contains(&self)
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let id = match s.trim().to_ascii_lowercase().as_str() {
            "pq0" => FormulaId::Pq0,
            "antitri" => FormulaId::AntiTri,
            "pqq0" | "thm-pqq0" => FormulaId::Pqq0,
            "q20" => FormulaId::Q20,
            "pqp0" => FormulaId::Pqp0,
            "bcb" => FormulaId::Bcb,
            "bdc" => FormulaId::Bdc,
            "abc" => FormulaId::Abc,
            "cab" => FormulaId::Cab,
            _ => return Err(Error::UnknownFormula(s.to_string())),
        };
        Ok(id)
    }
}

/// One zero-product condition and its verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub label: &'static str,
    pub holds: bool,
    /// The nonzero product when the condition fails.
    pub witness: Option<Matrix>,
}

impl Condition {
    /// `label` holds iff `product` is exactly zero.
    pub fn zero(label: &'static str, product: Matrix) -> Self {
        let holds = product.is_zero();
        Self {
            label,
            holds,
            witness: (!holds).then_some(product),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    pub formula: FormulaId,
    pub conditions: Vec<Condition>,
}

impl HypothesisReport {
    pub fn all_hold(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }

    pub fn violated(&self) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(|c| !c.holds)
    }

    pub fn violated_labels(&self) -> String {
        let labels: Vec<&str> = self.violated().map(|c| c.label).collect();
        labels.join(", ")
    }

    /// `Ok(())` when every condition holds, otherwise `HypothesisViolated`.
    pub fn require(self) -> Result<()> {
        if self.all_hold() {
            Ok(())
        } else {
            Err(Error::HypothesisViolated(alloc::boxed::Box::new(self)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in FormulaId::ALL {
            assert_eq!(id.as_str().parse::<FormulaId>().unwrap(), id);
        }
        assert_eq!("thm-pqq0".parse::<FormulaId>().unwrap(), FormulaId::Pqq0);
        assert!(matches!("lemma99".parse::<FormulaId>(), Err(Error::UnknownFormula(_))));
    }

    #[test]
    fn witness_only_on_failure() {
        let ok = Condition::zero("X = 0", Matrix::zeros(2, 2));
        assert!(ok.holds && ok.witness.is_none());
        let bad = Condition::zero("I = 0", Matrix::identity(2));
        assert!(!bad.holds);
        assert_eq!(bad.witness, Some(Matrix::identity(2)));
        let report = HypothesisReport {
            formula: FormulaId::Pq0,
            conditions: alloc::vec![ok, bad],
        };
        assert!(!report.all_hold());
        assert_eq!(report.violated_labels(), "I = 0");
        assert!(matches!(report.require(), Err(Error::HypothesisViolated(_))));
    }
}
