//! Drazin inverses of `M = [[A, B], [C, D]]` by splitting `M = P + Q` and
//! reusing the additive machinery.
//!
//! | id    | conditions                                  | split `P` / `Q`                      | route          |
//! |-------|---------------------------------------------|--------------------------------------|----------------|
//! | `bcb` | `BCB, DCB, BCA(BC)^π, DCA(BC)^π` vanish     | `[[A,B],[0,D]]` / `[[0,0],[C,0]]`    | `Q² = 0` form  |
//! | `bdc` | `BCB, BDC, BD², BCA(BC)^π` vanish           | `[[A,B],[C,0]]` / `diag(0,D)`        | six-term series, `P^D` via `bcb` |
//! | `abc` | `ABC, CBC, ABD(CB)^π, CBD(CB)^π` vanish     | `[[A,0],[C,D]]` / `[[0,B],[0,0]]`    | `Q² = 0` form  |
//! | `cab` | `CAB, CBC, A²B, CBD(CB)^π` vanish           | `diag(A,0)` / `[[0,B],[C,D]]`        | `P²Q = QPQ = 0` series, `Q^D` via `abc` |
//!
//! For `bcb` and `abc` the selector matrices `(I, Q)` and `(P; I)` are the
//! rectangular `[[I,0,0,0],[0,I,C,0]]`-style blocks; all inner `K`, `L`, `H`
//! are `2(m+n)` square.

use alloc::vec::Vec;

use crate::additive::{
    cor_q2_unchecked, pqp_series, powers, prod_sum, validated, DrazinPair,
};
use crate::drazin::drazin_oracle;
use crate::error::{Error, Result};
use crate::hypothesis::{Condition, FormulaId, HypothesisReport};
use crate::matrix::{prod, Matrix};

/// `(A, B, C, D)` with `A: m×m`, `B: m×n`, `C: n×m`, `D: n×n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockInstance {
    pub a: Matrix,
    pub b: Matrix,
    pub c: Matrix,
    pub d: Matrix,
}

impl BlockInstance {
    pub fn new(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Result<Self> {
        let inst = Self { a, b, c, d };
        inst.check_shapes()?;
        Ok(inst)
    }

    fn check_shapes(&self) -> Result<()> {
        let (m, n) = (self.a.rows(), self.d.rows());
        let ok = self.a.shape() == (m, m)
            && self.d.shape() == (n, n)
            && self.b.shape() == (m, n)
            && self.c.shape() == (n, m);
        if ok {
            Ok(())
        } else {
            Err(Error::ShapeMismatch {
                op: "block instance",
                left: self.a.shape(),
                right: self.d.shape(),
            })
        }
    }

    pub fn m(&self) -> usize {
        self.a.rows()
    }

    pub fn n(&self) -> usize {
        self.d.rows()
    }

    /// `M = [[A, B], [C, D]]`.
    pub fn assemble(&self) -> Result<Matrix> {
        self.check_shapes()?;
        Matrix::block2(&self.a, &self.b, &self.c, &self.d)
    }

    fn zm(&self) -> Matrix {
        Matrix::zeros(self.m(), self.m())
    }

    fn zn(&self) -> Matrix {
        Matrix::zeros(self.n(), self.n())
    }

    fn zmn(&self) -> Matrix {
        Matrix::zeros(self.m(), self.n())
    }

    fn znm(&self) -> Matrix {
        Matrix::zeros(self.n(), self.m())
    }

    fn with_d(&self, d: Matrix) -> Self {
        Self { d, ..self.clone() }
    }

    fn with_a(&self, a: Matrix) -> Self {
        Self { a, ..self.clone() }
    }
}

/// Per-formula hypothesis reports plus the flags that tell a genuinely
/// perturbed instance from a trivial one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockApplicability {
    pub reports: Vec<HypothesisReport>,
    pub bc_nonzero: bool,
    pub cb_nonzero: bool,
    pub bc_pi_not_identity: bool,
    pub cb_pi_not_identity: bool,
}

impl BlockApplicability {
    pub fn report(&self, id: FormulaId) -> Option<&HypothesisReport> {
        self.reports.iter().find(|r| r.formula == id)
    }

    pub fn applicable(&self, id: FormulaId) -> bool {
        self.report(id).is_some_and(HypothesisReport::all_hold)
    }
}

pub fn check_block_hypotheses(id: FormulaId, inst: &BlockInstance) -> Result<HypothesisReport> {
    inst.check_shapes()?;
    let BlockInstance { a, b, c, d } = inst;
    let conditions = match id {
        FormulaId::Bcb => {
            let bc = b.mul(c)?;
            let bc_pi = drazin_oracle(&bc)?.eigenprojection;
            alloc::vec![
                Condition::zero("BCB = 0", bc.mul(b)?),
                Condition::zero("DCB = 0", prod(&[d, c, b])?),
                Condition::zero("BCA(BC)^pi = 0", prod(&[&bc, a, &bc_pi])?),
                Condition::zero("DCA(BC)^pi = 0", prod(&[d, c, a, &bc_pi])?),
            ]
        }
        FormulaId::Bdc => {
            let bc = b.mul(c)?;
            let bc_pi = drazin_oracle(&bc)?.eigenprojection;
            alloc::vec![
                Condition::zero("BCB = 0", bc.mul(b)?),
                Condition::zero("BDC = 0", prod(&[b, d, c])?),
                Condition::zero("BD^2 = 0", prod(&[b, d, d])?),
                Condition::zero("BCA(BC)^pi = 0", prod(&[&bc, a, &bc_pi])?),
            ]
        }
        FormulaId::Abc => {
            let cb = c.mul(b)?;
            let cb_pi = drazin_oracle(&cb)?.eigenprojection;
            alloc::vec![
                Condition::zero("ABC = 0", prod(&[a, b, c])?),
                Condition::zero("CBC = 0", cb.mul(c)?),
                Condition::zero("ABD(CB)^pi = 0", prod(&[a, b, d, &cb_pi])?),
                Condition::zero("CBD(CB)^pi = 0", prod(&[&cb, d, &cb_pi])?),
            ]
        }
        FormulaId::Cab => {
            let cb = c.mul(b)?;
            let cb_pi = drazin_oracle(&cb)?.eigenprojection;
            alloc::vec![
                Condition::zero("CAB = 0", prod(&[c, a, b])?),
                Condition::zero("CBC = 0", cb.mul(c)?),
                Condition::zero("A^2B = 0", prod(&[a, a, b])?),
                Condition::zero("CBD(CB)^pi = 0", prod(&[&cb, d, &cb_pi])?),
            ]
        }
        _ => {
            return Err(Error::WrongInputKind {
                formula: id.as_str(),
            })
        }
    };
    Ok(HypothesisReport {
        formula: id,
        conditions,
    })
}

fn bcb_split(inst: &BlockInstance) -> Result<(Matrix, Matrix)> {
    let p = Matrix::block2(&inst.a, &inst.b, &inst.znm(), &inst.d)?;
    let q = Matrix::block2(&inst.zm(), &inst.zmn(), &inst.c, &inst.zn())?;
    Ok((p, q))
}

fn abc_split(inst: &BlockInstance) -> Result<(Matrix, Matrix)> {
    let p = Matrix::block2(&inst.a, &inst.zmn(), &inst.c, &inst.d)?;
    let q = Matrix::block2(&inst.zm(), &inst.b, &inst.znm(), &inst.zn())?;
    Ok((p, q))
}

fn bcb_unchecked(inst: &BlockInstance) -> Result<Matrix> {
    let (p, q) = bcb_split(inst)?;
    cor_q2_unchecked(&p, &q)
}

fn abc_unchecked(inst: &BlockInstance) -> Result<Matrix> {
    let (p, q) = abc_split(inst)?;
    cor_q2_unchecked(&p, &q)
}

pub fn block_bcb(inst: &BlockInstance) -> Result<Matrix> {
    check_block_hypotheses(FormulaId::Bcb, inst)?.require()?;
    validated(&inst.assemble()?, bcb_unchecked(inst)?, FormulaId::Bcb)
}

pub fn block_abc(inst: &BlockInstance) -> Result<Matrix> {
    check_block_hypotheses(FormulaId::Abc, inst)?.require()?;
    validated(&inst.assemble()?, abc_unchecked(inst)?, FormulaId::Abc)
}

pub fn block_bdc(inst: &BlockInstance) -> Result<Matrix> {
    check_block_hypotheses(FormulaId::Bdc, inst)?.require()?;
    let p = Matrix::block2(&inst.a, &inst.b, &inst.c, &inst.zn())?;
    let q = Matrix::block_diag(&inst.zm(), &inst.d);
    // P is itself a `bcb` instance with D = 0
    let inner = inst.with_d(inst.zn());
    let p_drazin = validated(&p, bcb_unchecked(&inner)?, FormulaId::Bcb)?;
    let q_drazin = Matrix::block_diag(&inst.zm(), &drazin_oracle(&inst.d)?.drazin);
    let x = pqp_series(
        &DrazinPair::with_drazin(&p, p_drazin)?,
        &DrazinPair::with_drazin(&q, q_drazin)?,
    )?;
    validated(&inst.assemble()?, x, FormulaId::Bdc)
}

/// Series for `P²Q = 0`, `QPQ = 0`:
///
/// `Q^π Σ Q^i (P^D)^{i+1} + Σ (Q^D)^{i+1} P^i P^π + P Σ (Q^D)^{i+2} P^i P^π
///  + P Σ Q^π Q^{i+1} (P^D)^{i+3} - P Q^D P^D - P Q Q^D (P^D)²`.
pub(crate) fn cab_series(p: &DrazinPair, q: &DrazinPair) -> Result<Matrix> {
    let n = p.m.rows();
    let top = 2 * n;
    let p_pow = powers(&p.m, top)?;
    let q_pow = powers(&q.m, top + 1)?;
    let pd_pow = powers(&p.d, top + 3)?;
    let qd_pow = powers(&q.d, top + 2)?;
    let series = prod_sum(
        n,
        (0..=top).flat_map(|i| {
            [
                alloc::vec![&q.pi, &q_pow[i], &pd_pow[i + 1]],
                alloc::vec![&qd_pow[i + 1], &p_pow[i], &p.pi],
                alloc::vec![&p.m, &qd_pow[i + 2], &p_pow[i], &p.pi],
                alloc::vec![&p.m, &q.pi, &q_pow[i + 1], &pd_pow[i + 3]],
            ]
        }),
    )?;
    series
        .sub(&prod(&[&p.m, &q.d, &p.d])?)?
        .sub(&prod(&[&p.m, &q.m, &q.d, &pd_pow[2]])?)
}

pub fn block_cab(inst: &BlockInstance) -> Result<Matrix> {
    check_block_hypotheses(FormulaId::Cab, inst)?.require()?;
    let p = Matrix::block_diag(&inst.a, &inst.zn());
    let q = Matrix::block2(&inst.zm(), &inst.b, &inst.c, &inst.d)?;
    // Q is itself an `abc` instance with A = 0
    let inner = inst.with_a(inst.zm());
    let q_drazin = validated(&q, abc_unchecked(&inner)?, FormulaId::Abc)?;
    let p_drazin = Matrix::block_diag(&drazin_oracle(&inst.a)?.drazin, &inst.zn());
    let x = cab_series(
        &DrazinPair::with_drazin(&p, p_drazin)?,
        &DrazinPair::with_drazin(&q, q_drazin)?,
    )?;
    validated(&inst.assemble()?, x, FormulaId::Cab)
}

/// Dispatches on a block formula id.
pub fn block_drazin(id: FormulaId, inst: &BlockInstance) -> Result<Matrix> {
    match id {
        FormulaId::Bcb => block_bcb(inst),
        FormulaId::Bdc => block_bdc(inst),
        FormulaId::Abc => block_abc(inst),
        FormulaId::Cab => block_cab(inst),
        _ => Err(Error::WrongInputKind {
            formula: id.as_str(),
        }),
    }
}

pub fn applicability_report(inst: &BlockInstance) -> Result<BlockApplicability> {
    let reports = FormulaId::BLOCK
        .iter()
        .map(|&id| check_block_hypotheses(id, inst))
        .collect::<Result<Vec<_>>>()?;
    let bc = inst.b.mul(&inst.c)?;
    let cb = inst.c.mul(&inst.b)?;
    Ok(BlockApplicability {
        reports,
        bc_nonzero: !bc.is_zero(),
        cb_nonzero: !cb.is_zero(),
        bc_pi_not_identity: !drazin_oracle(&bc)?.eigenprojection.is_identity(),
        cb_pi_not_identity: !drazin_oracle(&cb)?.eigenprojection.is_identity(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m<const C: usize>(rows: &[[i64; C]]) -> Matrix {
        Matrix::from_i64(rows)
    }

    pub(crate) fn example() -> BlockInstance {
        BlockInstance::new(
            m(&[[0, 1], [0, 0]]),
            m(&[[0, 2], [0, 0]]),
            m(&[[0, 1], [0, -1]]),
            m(&[[-1, 1], [0, 0]]),
        )
        .unwrap()
    }

    fn expected() -> Matrix {
        m(&[[0, 0, 0, 0], [0, 0, 0, 0], [0, 2, -1, 1], [0, 0, 0, 0]])
    }

    fn oracle(x: &Matrix) -> Matrix {
        drazin_oracle(x).unwrap().drazin
    }

    #[test]
    fn assemble_examples() {
        let z = BlockInstance::new(
            Matrix::zeros(2, 2),
            Matrix::zeros(2, 1),
            Matrix::zeros(1, 2),
            Matrix::zeros(1, 1),
        )
        .unwrap();
        assert!(z.assemble().unwrap().is_zero());
        assert_eq!(
            example().assemble().unwrap(),
            m(&[[0, 1, 0, 2], [0, 0, 0, 0], [0, 1, -1, 1], [0, -1, 0, 0]])
        );
        let id = BlockInstance::new(
            Matrix::identity(2),
            Matrix::zeros(2, 3),
            Matrix::zeros(3, 2),
            Matrix::identity(3),
        )
        .unwrap();
        assert!(id.assemble().unwrap().is_identity());
        assert!(BlockInstance::new(
            Matrix::identity(2),
            Matrix::zeros(3, 2),
            Matrix::zeros(2, 3),
            Matrix::identity(3)
        )
        .is_err());
    }

    #[test]
    fn worked_example() {
        let inst = example();
        assert_eq!(oracle(&inst.assemble().unwrap()), expected());
        assert_eq!(block_bcb(&inst).unwrap(), expected());
        assert_eq!(block_bdc(&inst).unwrap(), expected());
        assert!(oracle(&inst.a).is_zero());
        assert_eq!(oracle(&inst.d), inst.d);
    }

    #[test]
    fn applicability_of_example() {
        let r = applicability_report(&example()).unwrap();
        assert!(r.applicable(FormulaId::Bcb));
        assert!(r.applicable(FormulaId::Bdc));
        assert!(r.bc_nonzero);
        assert!(!r.cb_nonzero);
        assert!(!r.bc_pi_not_identity);
    }

    #[test]
    fn applicability_of_zero_and_counterexample() {
        let z = BlockInstance::new(
            Matrix::zeros(1, 1),
            Matrix::zeros(1, 1),
            Matrix::zeros(1, 1),
            Matrix::zeros(1, 1),
        )
        .unwrap();
        let r = applicability_report(&z).unwrap();
        assert!(FormulaId::BLOCK.iter().all(|&id| r.applicable(id)));

        let one = BlockInstance::new(
            Matrix::zeros(1, 1),
            Matrix::identity(1),
            Matrix::identity(1),
            Matrix::zeros(1, 1),
        )
        .unwrap();
        let r = applicability_report(&one).unwrap();
        assert!(!r.applicable(FormulaId::Bcb));
        let bcb = r.report(FormulaId::Bcb).unwrap();
        assert_eq!(bcb.conditions[0].witness, Some(Matrix::identity(1)));
        assert!(matches!(block_bcb(&one), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn vacuous_cases() {
        let a = m(&[[1, 1], [0, 0]]);
        let b = m(&[[1], [2]]);
        let c = m(&[[3, -1]]);
        let d = m(&[[2]]);
        let zb = Matrix::zeros(2, 1);
        let zc = Matrix::zeros(1, 2);
        // C = 0: block upper triangular
        let inst = BlockInstance::new(a.clone(), b.clone(), zc.clone(), d.clone()).unwrap();
        assert_eq!(block_bcb(&inst).unwrap(), oracle(&inst.assemble().unwrap()));
        // B = 0: block lower triangular
        let inst = BlockInstance::new(a.clone(), zb.clone(), c.clone(), d.clone()).unwrap();
        assert_eq!(block_abc(&inst).unwrap(), oracle(&inst.assemble().unwrap()));
        // D = 0 for bdc
        let inst = BlockInstance::new(a.clone(), b.clone(), zc.clone(), Matrix::zeros(1, 1)).unwrap();
        assert_eq!(block_bdc(&inst).unwrap(), oracle(&inst.assemble().unwrap()));
        // B = C = 0 for cab: diag(A^D, D^D)
        let inst = BlockInstance::new(a.clone(), zb, zc, d.clone()).unwrap();
        let want = Matrix::block_diag(&oracle(&a), &oracle(&d));
        assert_eq!(block_cab(&inst).unwrap(), want);
        // A = 0 for cab reduces to Q^D
        let inst = BlockInstance::new(Matrix::zeros(2, 2), m(&[[1], [0]]), m(&[[0, 1]]), d).unwrap();
        assert_eq!(block_cab(&inst).unwrap(), oracle(&inst.assemble().unwrap()));
    }

    #[test]
    fn transpose_dual_of_example() {
        // Transposing M swaps B and C; the abc conditions are the transposes of
        // the bcb ones.
        let ex = example();
        let inst = BlockInstance::new(
            ex.a.transpose(),
            ex.c.transpose(),
            ex.b.transpose(),
            ex.d.transpose(),
        )
        .unwrap();
        assert!(check_block_hypotheses(FormulaId::Abc, &inst).unwrap().all_hold());
        assert_eq!(block_abc(&inst).unwrap(), expected().transpose());
    }
}
