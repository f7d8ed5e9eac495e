//! Closed forms for `(P + Q)^D` under zero-product conditions.
//!
//! * [`additive_pq_zero`]: `PQ = 0`.
//! * [`anti_triangular_drazin`]: `[[E, I], [F, 0]]^D` when `FEF^π = 0`, built
//!   from the four blocks of [`AntiTriangularParts`] and the sequence
//!   [`SeqQuad`].
//! * [`cline`]: `(AB)^D = A·((BA)^D)²·B`.
//! * [`additive_thm_pqq`]: `PQ² = 0`, `PQP(PQ)^π = 0`, through the split
//!   `[[P, PQ], [I, Q]] = K + L` described by [`ClineSplit`].
//! * [`additive_cor_q2`]: the same with `Q² = 0`, where `(K + L)^D`
//!   collapses to `K^D + L(K^D)²`.
//! * [`additive_cor_pqp`]: `PQ² = 0`, `PQP = 0`, six-term series.
//!
//! Every infinite series is cut at `i = 2n` for `n×n` summands: each surviving
//! term carries a factor `X^i X^π` or `X^π X^i`, which vanishes once
//! `i ≥ ind(X)`, and `ind(X) ≤ n`. The spectral data (`X^D`, `X^π`) feeding a
//! formula always comes from [`drazin_oracle`], never from another formula.
//! Results are checked against the Drazin axioms before they are returned;
//! a failure surfaces as [`Error::SeriesNotValidated`].

use alloc::vec::Vec;

use crate::drazin::{drazin_oracle, satisfies_drazin_axioms, DrazinResult};
use crate::error::{Error, Result};
use crate::hypothesis::{Condition, FormulaId, HypothesisReport};
use crate::matrix::{prod, Matrix};

/// The blocks of `[[E, I], [F, 0]]^D = [[Γ, Δ], [Λ, Ξ]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiTriangularParts {
    pub gamma: Matrix,
    pub delta: Matrix,
    pub lambda: Matrix,
    pub xi: Matrix,
}

impl AntiTriangularParts {
    pub fn assemble(&self) -> Matrix {
        Matrix::block2(&self.gamma, &self.delta, &self.lambda, &self.xi)
            .expect("anti-triangular blocks share one size")
    }
}

/// `(A_i, B_i, C_i, D_i)`, the blocks of `T^{2i+1}` for
/// `T = [[0, F^D], [FF^D, -FF^D·E·F^D]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqQuad {
    pub a: Matrix,
    pub b: Matrix,
    pub c: Matrix,
    pub d: Matrix,
    pub i: usize,
}

/// The pieces of `[[P, PQ], [I, Q]] = K + L` with `H = [[P, I], [PQ, 0]]`.
///
/// `K = X·Y` and `H = Y·X` for `X = [[P, I], [I, 0]]`, `Y = diag(I, PQ)`, so
/// `K^D = X·(H^D)²·Y` by Cline's formula, and `H^D` is anti-triangular with
/// `E = P`, `F = PQ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClineSplit {
    pub k: Matrix,
    pub l: Matrix,
    pub h: Matrix,
    pub k_drazin: Matrix,
    pub l_drazin: Matrix,
}

pub(crate) fn require_square_pair(p: &Matrix, q: &Matrix, op: &'static str) -> Result<usize> {
    if !p.is_square() {
        return Err(Error::NotSquare {
            op,
            rows: p.rows(),
            cols: p.cols(),
        });
    }
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch {
            op,
            left: p.shape(),
            right: q.shape(),
        });
    }
    Ok(p.rows())
}

/// `X^0 ..= X^upto`.
pub(crate) fn powers(x: &Matrix, upto: usize) -> Result<Vec<Matrix>> {
    let mut out = Vec::with_capacity(upto + 1);
    out.push(Matrix::identity(x.rows()));
    for k in 1..=upto {
        let next = out[k - 1].mul(x)?;
        out.push(next);
    }
    Ok(out)
}

pub(crate) fn sum_all(n: usize, terms: impl IntoIterator<Item = Result<Matrix>>) -> Result<Matrix> {
    terms
        .into_iter()
        .try_fold(Matrix::zeros(n, n), |acc, t| acc.add(&t?))
}

/// `Σ` of products, one product per term.
pub(crate) fn prod_sum<'a>(n: usize, terms: impl IntoIterator<Item = Vec<&'a Matrix>>) -> Result<Matrix> {
    sum_all(n, terms.into_iter().map(|t| prod(&t)))
}

pub(crate) fn validated(target: &Matrix, x: Matrix, formula: FormulaId) -> Result<Matrix> {
    if satisfies_drazin_axioms(target, &x)? {
        Ok(x)
    } else {
        Err(Error::SeriesNotValidated {
            formula: formula.as_str(),
        })
    }
}

/// Evaluates the zero-product conditions of an additive formula.
///
/// For [`FormulaId::AntiTri`] the pair is read as `(E, F)`.
pub fn check_hypotheses(id: FormulaId, p: &Matrix, q: &Matrix) -> Result<HypothesisReport> {
    require_square_pair(p, q, "check_hypotheses")?;
    let pq = p.mul(q)?;
    let pqp_pq_pi = || -> Result<Matrix> {
        let pi = drazin_oracle(&pq)?.eigenprojection;
        prod(&[&pq, p, &pi])
    };
    let conditions = match id {
        FormulaId::Pq0 => alloc::vec![Condition::zero("PQ = 0", pq.clone())],
        FormulaId::AntiTri => {
            let fpi = drazin_oracle(q)?.eigenprojection;
            alloc::vec![Condition::zero("FEF^pi = 0", prod(&[q, p, &fpi])?)]
        }
        FormulaId::Pqq0 => alloc::vec![
            Condition::zero("PQ^2 = 0", pq.mul(q)?),
            Condition::zero("PQP(PQ)^pi = 0", pqp_pq_pi()?),
        ],
        FormulaId::Q20 => alloc::vec![
            Condition::zero("Q^2 = 0", q.mul(q)?),
            Condition::zero("PQP(PQ)^pi = 0", pqp_pq_pi()?),
        ],
        FormulaId::Pqp0 => alloc::vec![
            Condition::zero("PQ^2 = 0", pq.mul(q)?),
            Condition::zero("PQP = 0", pq.mul(p)?),
        ],
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

/// `Σ (Q^D)^{i+1} P^i P^π + Σ Q^i Q^π (P^D)^{i+1}`, valid when `PQ = 0`.
pub(crate) fn pq_zero_series(p: &DrazinPair, q: &DrazinPair) -> Result<Matrix> {
    let n = p.m.rows();
    let top = 2 * n;
    let p_pow = powers(&p.m, top)?;
    let q_pow = powers(&q.m, top)?;
    let pd_pow = powers(&p.d, top + 1)?;
    let qd_pow = powers(&q.d, top + 1)?;
    sum_all(
        n,
        (0..=top).flat_map(|i| {
            [
                prod(&[&qd_pow[i + 1], &p_pow[i], &p.pi]),
                prod(&[&q_pow[i], &q.pi, &pd_pow[i + 1]]),
            ]
        }),
    )
}

/// A matrix with its Drazin inverse and eigenprojection.
#[derive(Clone, Debug)]
pub(crate) struct DrazinPair {
    pub m: Matrix,
    pub d: Matrix,
    pub pi: Matrix,
}

impl DrazinPair {
    pub fn oracle(m: &Matrix) -> Result<Self> {
        let DrazinResult {
            drazin,
            eigenprojection,
            ..
        } = drazin_oracle(m)?;
        Ok(Self {
            m: m.clone(),
            d: drazin,
            pi: eigenprojection,
        })
    }

    /// Pairs `m` with a Drazin inverse computed elsewhere.
    pub fn with_drazin(m: &Matrix, d: Matrix) -> Result<Self> {
        let pi = Matrix::identity(m.rows()).sub(&m.mul(&d)?)?;
        Ok(Self {
            m: m.clone(),
            d,
            pi,
        })
    }
}

pub fn additive_pq_zero(p: &Matrix, q: &Matrix) -> Result<Matrix> {
    check_hypotheses(FormulaId::Pq0, p, q)?.require()?;
    let x = pq_zero_series(&DrazinPair::oracle(p)?, &DrazinPair::oracle(q)?)?;
    validated(&p.add(q)?, x, FormulaId::Pq0)
}

/// `(AB)^D = A·((BA)^D)²·B` with `(BA)^D` supplied by the caller.
pub fn cline_with(a: &Matrix, b: &Matrix, ba_drazin: &Matrix) -> Result<Matrix> {
    if a.cols() != b.rows() || a.rows() != b.cols() {
        return Err(Error::ShapeMismatch {
            op: "cline",
            left: a.shape(),
            right: b.shape(),
        });
    }
    prod(&[a, ba_drazin, ba_drazin, b])
}

/// `(AB)^D` from the oracle's `(BA)^D`, for `A: p×q`, `B: q×p`.
pub fn cline(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.cols() != b.rows() || a.rows() != b.cols() {
        return Err(Error::ShapeMismatch {
            op: "cline",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let ba = drazin_oracle(&b.mul(a)?)?.drazin;
    cline_with(a, b, &ba)
}

/// `SeqQuad` for `1..=count`, given `F^D`.
///
/// With `G = E·F^D` the recurrence is
/// `A_{i+1} = F^D A_i - F^D G C_i`, `B_{i+1} = F^D B_i - F^D G D_i`,
/// `C_{i+1} = -FF^D G A_i + (F^D + FF^D G²) C_i`,
/// `D_{i+1} = -FF^D G B_i + (F^D + FF^D G²) D_i`.
pub(crate) fn seq_quads(e: &Matrix, f: &Matrix, fd: &Matrix, count: usize) -> Result<Vec<SeqQuad>> {
    let g = e.mul(fd)?;
    let g2 = g.mul(&g)?;
    let ffd = f.mul(fd)?;
    let fd_g = fd.mul(&g)?;
    let ffd_g = ffd.mul(&g)?;
    let step = fd.add(&ffd.mul(&g2)?)?;

    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return Ok(out);
    }
    out.push(SeqQuad {
        a: fd_g.neg(),
        b: fd.mul(fd)?.add(&fd.mul(&g2)?)?,
        c: step.clone(),
        d: fd_g
            .add(&prod(&[&ffd_g, fd])?)?
            .add(&ffd.mul(&g2.mul(&g)?)?)?
            .neg(),
        i: 1,
    });
    for i in 1..count {
        let prev = &out[i - 1];
        let next = SeqQuad {
            a: fd.mul(&prev.a)?.sub(&fd_g.mul(&prev.c)?)?,
            b: fd.mul(&prev.b)?.sub(&fd_g.mul(&prev.d)?)?,
            c: step.mul(&prev.c)?.sub(&ffd_g.mul(&prev.a)?)?,
            d: step.mul(&prev.d)?.sub(&ffd_g.mul(&prev.b)?)?,
            i: i + 1,
        };
        out.push(next);
    }
    Ok(out)
}

/// `(A_i, B_i, C_i, D_i)` for the pair `(E, F)`, `i ≥ 1`.
pub fn seq_quad(e: &Matrix, f: &Matrix, i: usize) -> Result<SeqQuad> {
    require_square_pair(e, f, "seq_quad")?;
    if i == 0 {
        return Err(Error::InvariantViolation("seq_quad index starts at 1"));
    }
    let fd = drazin_oracle(f)?.drazin;
    let mut all = seq_quads(e, f, &fd, i)?;
    Ok(all.pop().expect("i >= 1"))
}

/// Blocks of `[[E, I], [F, 0]]^D` from the spectral data of `E` and `F`.
pub(crate) fn anti_triangular_unchecked(e: &DrazinPair, f: &DrazinPair) -> Result<AntiTriangularParts> {
    let n = e.m.rows();
    let top = 2 * n;
    let (em, ed, epi) = (&e.m, &e.d, &e.pi);
    let (fm, fd, fpi) = (&f.m, &f.d, &f.pi);

    let e_pow = powers(em, 2 * top + 1)?;
    let f_pow = powers(fm, 2 * top + 1)?;
    let ed_pow = powers(ed, 2 * top + 2)?;
    let seq = seq_quads(em, fm, fd, top)?;

    let fpi_e = fpi.mul(em)?;
    let fpi_e_ffd = prod(&[&fpi_e, fm, fd])?;
    let fpi_e_fd = fpi_e.mul(fd)?;
    // F^k F^π E
    let f_fpi_e: Vec<Matrix> = f_pow.iter().map(|x| x.mul(&fpi_e)).collect::<Result<_>>()?;
    // E^π E^k
    let epi_e: Vec<Matrix> = e_pow.iter().map(|x| epi.mul(x)).collect::<Result<_>>()?;

    // W = E^π - Σ_{j≥1} (E^D)^{2j} F^j
    let w = epi.sub(&sum_all(
        n,
        (1..=top).map(|j| ed_pow[2 * j].mul(&f_pow[j])),
    )?)?;

    let tail = |i: usize, odd: usize| -> Result<Matrix> {
        // Σ_{k=0}^{i-2} E^π E^{2k+1+odd} F^{i-k-1} F^π E
        sum_all(
            n,
            (0..i.saturating_sub(1)).map(|k| epi_e[2 * k + 1 + odd].mul(&f_fpi_e[i - k - 1])),
        )
    };
    let bracket_c = |i: usize| -> Result<Matrix> {
        w.mul(&f_fpi_e[i])?
            .add(&epi_e[2 * i].mul(&fpi_e_ffd)?)?
            .add(&tail(i, 1)?)
    };
    let bracket_a = |i: usize| -> Result<Matrix> {
        let series = sum_all(
            n,
            (0..=top).map(|j| ed_pow[2 * j + 1].mul(&f_fpi_e[i + j])),
        )?;
        epi_e[2 * i - 1]
            .mul(&fpi_e_ffd)?
            .sub(&series)?
            .add(&tail(i, 0)?)
    };

    let mut gamma = sum_all(
        n,
        (0..=top).map(|i| prod(&[&ed_pow[2 * i + 1], &f_pow[i], fpi])),
    )?
    .add(&w.mul(&fpi_e_fd)?)?;
    let mut delta = fd
        .sub(&ed.mul(&fpi_e_fd)?)?
        .sub(&sum_all(
            n,
            (1..=top).map(|i| prod(&[&ed_pow[2 * i + 1], &f_pow[i], &fpi_e_fd])),
        )?)?
        .add(&sum_all(
            n,
            (0..=top).map(|i| prod(&[&ed_pow[2 * i + 2], &f_pow[i], fpi])),
        )?)?
        .sub(&prod(&[&w, &fpi_e_fd, em, fd])?)?;
    let ffd = fm.mul(fd)?;
    let mut lambda = ffd.clone();
    let mut xi = prod(&[&ffd, em, fd])?.neg();

    for q in &seq {
        let i = q.i;
        let bc = bracket_c(i)?.mul(fd)?;
        let ba = bracket_a(i)?;
        gamma = gamma.add(&bc.mul(&q.c)?)?.add(&ba.mul(&q.a)?)?;
        delta = delta.add(&bc.mul(&q.d)?)?.add(&ba.mul(&q.b)?)?;
        lambda = lambda.add(&f_fpi_e[i].mul(&q.a)?)?;
        xi = xi.add(&f_fpi_e[i].mul(&q.b)?)?;
    }

    Ok(AntiTriangularParts {
        gamma,
        delta,
        lambda,
        xi,
    })
}

/// `[[E, I], [F, 0]]`.
pub fn anti_triangular_matrix(e: &Matrix, f: &Matrix) -> Result<Matrix> {
    let n = e.rows();
    Matrix::block2(e, &Matrix::identity(n), f, &Matrix::zeros(n, n))
}

/// `[[Γ, Δ], [Λ, Ξ]]` for `[[E, I], [F, 0]]`, requiring `FEF^π = 0`.
pub fn anti_triangular_parts(e: &Matrix, f: &Matrix) -> Result<AntiTriangularParts> {
    check_hypotheses(FormulaId::AntiTri, e, f)?.require()?;
    let parts = anti_triangular_unchecked(&DrazinPair::oracle(e)?, &DrazinPair::oracle(f)?)?;
    validated(&anti_triangular_matrix(e, f)?, parts.assemble(), FormulaId::AntiTri)?;
    Ok(parts)
}

pub fn anti_triangular_drazin(e: &Matrix, f: &Matrix) -> Result<Matrix> {
    anti_triangular_parts(e, f).map(|p| p.assemble())
}

impl ClineSplit {
    /// Builds the split for `(P, Q)`. Needs `PQ·P·(PQ)^π = 0` for the
    /// anti-triangular step; fails with `SeriesNotValidated` otherwise.
    pub fn new(p: &Matrix, q: &Matrix) -> Result<Self> {
        let n = require_square_pair(p, q, "ClineSplit")?;
        let pq = p.mul(q)?;
        let id = Matrix::identity(n);
        let z = Matrix::zeros(n, n);

        let h = Matrix::block2(p, &id, &pq, &z)?;
        let h_parts = anti_triangular_unchecked(&DrazinPair::oracle(p)?, &DrazinPair::oracle(&pq)?)?;
        let h_drazin = validated(&h, h_parts.assemble(), FormulaId::AntiTri)?;

        let x = Matrix::block2(p, &id, &id, &z)?;
        let y = Matrix::block_diag(&id, &pq);
        let k = x.mul(&y)?;
        let k_drazin = cline_with(&x, &y, &h_drazin)?;
        let l = Matrix::block_diag(&z, q);
        let l_drazin = Matrix::block_diag(&z, &drazin_oracle(q)?.drazin);
        Ok(Self {
            k,
            l,
            h,
            k_drazin,
            l_drazin,
        })
    }

    /// `(K + L)^D` by the `PQ = 0` series, valid since `KL = 0`.
    pub fn sum_drazin(&self) -> Result<Matrix> {
        let k = DrazinPair::with_drazin(&self.k, self.k_drazin.clone())?;
        let l = DrazinPair::with_drazin(&self.l, self.l_drazin.clone())?;
        pq_zero_series(&k, &l)
    }
}

/// `(I, Q)·X²·(P; I)`, the outer Cline step for `P + Q = (I, Q)(P; I)`.
pub(crate) fn outer_cline(p: &Matrix, q: &Matrix, inner_drazin: &Matrix) -> Result<Matrix> {
    let id = Matrix::identity(p.rows());
    let left = id.hstack(q)?;
    let right = p.vstack(&id)?;
    cline_with(&left, &right, inner_drazin)
}

pub(crate) fn thm_pqq_unchecked(p: &Matrix, q: &Matrix) -> Result<Matrix> {
    let split = ClineSplit::new(p, q)?;
    outer_cline(p, q, &split.sum_drazin()?)
}

pub(crate) fn cor_q2_unchecked(p: &Matrix, q: &Matrix) -> Result<Matrix> {
    let split = ClineSplit::new(p, q)?;
    let kd = &split.k_drazin;
    let inner = kd.add(&prod(&[&split.l, kd, kd])?)?;
    outer_cline(p, q, &inner)
}

pub fn additive_thm_pqq(p: &Matrix, q: &Matrix) -> Result<Matrix> {
    check_hypotheses(FormulaId::Pqq0, p, q)?.require()?;
    validated(&p.add(q)?, thm_pqq_unchecked(p, q)?, FormulaId::Pqq0)
}

pub fn additive_cor_q2(p: &Matrix, q: &Matrix) -> Result<Matrix> {
    check_hypotheses(FormulaId::Q20, p, q)?.require()?;
    validated(&p.add(q)?, cor_q2_unchecked(p, q)?, FormulaId::Q20)
}

/// The six-term series for `PQ² = 0`, `PQP = 0`:
///
/// `Σ (Q^D)^{i+1} P^i P^π + Σ Q^i Q^π (P^D)^{i+1} + Σ Q^i Q^π (P^D)^{i+2} Q
///  + Σ (Q^D)^{i+3} P^{i+1} P^π Q - Q^D P^D Q - (Q^D)² P P^D Q`.
pub(crate) fn pqp_series(p: &DrazinPair, q: &DrazinPair) -> Result<Matrix> {
    let n = p.m.rows();
    let top = 2 * n;
    let p_pow = powers(&p.m, top + 1)?;
    let q_pow = powers(&q.m, top)?;
    let pd_pow = powers(&p.d, top + 2)?;
    let qd_pow = powers(&q.d, top + 3)?;
    let series = sum_all(
        n,
        (0..=top).flat_map(|i| {
            [
                prod(&[&qd_pow[i + 1], &p_pow[i], &p.pi]),
                prod(&[&q_pow[i], &q.pi, &pd_pow[i + 1]]),
                prod(&[&q_pow[i], &q.pi, &pd_pow[i + 2], &q.m]),
                prod(&[&qd_pow[i + 3], &p_pow[i + 1], &p.pi, &q.m]),
            ]
        }),
    )?;
    series
        .sub(&prod(&[&q.d, &p.d, &q.m])?)?
        .sub(&prod(&[&qd_pow[2], &p.m, &p.d, &q.m])?)
}

pub fn additive_cor_pqp(p: &Matrix, q: &Matrix) -> Result<Matrix> {
    check_hypotheses(FormulaId::Pqp0, p, q)?.require()?;
    let x = pqp_series(&DrazinPair::oracle(p)?, &DrazinPair::oracle(q)?)?;
    validated(&p.add(q)?, x, FormulaId::Pqp0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drazin::drazin_oracle;

    fn m<const C: usize>(rows: &[[i64; C]]) -> Matrix {
        Matrix::from_i64(rows)
    }

    fn oracle(x: &Matrix) -> Matrix {
        drazin_oracle(x).unwrap().drazin
    }

    #[test]
    fn pq_zero_examples() {
        let q = m(&[[1, 2], [0, 0]]);
        let z = Matrix::zeros(2, 2);
        assert_eq!(additive_pq_zero(&z, &q).unwrap(), oracle(&q));
        assert_eq!(additive_pq_zero(&q, &z).unwrap(), oracle(&q));
        let p = m(&[[1, 0], [0, 0]]);
        let q = m(&[[0, 0], [1, 0]]);
        assert_eq!(additive_pq_zero(&p, &q).unwrap(), m(&[[1, 0], [1, 0]]));
    }

    #[test]
    fn pq_zero_rejects_with_witness() {
        let err = additive_pq_zero(&Matrix::identity(2), &Matrix::identity(2)).unwrap_err();
        let Error::HypothesisViolated(report) = err else {
            panic!("expected HypothesisViolated");
        };
        assert_eq!(report.conditions[0].witness, Some(Matrix::identity(2)));
    }

    #[test]
    fn cline_examples() {
        let b = m(&[[2, 1], [0, 0]]);
        assert_eq!(cline(&Matrix::identity(2), &b).unwrap(), oracle(&b));
        assert_eq!(cline(&b, &Matrix::identity(2)).unwrap(), oracle(&b));
        let a = m(&[[1, 0], [2, 1], [0, -1]]);
        let bb = m(&[[0, 1, 1], [1, 0, 2]]);
        assert_eq!(cline(&a, &bb).unwrap(), oracle(&a.mul(&bb).unwrap()));
        assert!(cline(&a, &a).is_err());
    }

    #[test]
    fn seq_quad_examples() {
        let e = m(&[[1, 2], [3, 4]]);
        for i in 1..=3 {
            let s = seq_quad(&e, &Matrix::zeros(2, 2), i).unwrap();
            assert!(s.a.is_zero() && s.b.is_zero() && s.c.is_zero() && s.d.is_zero());
        }
        let s = seq_quad(&Matrix::zeros(2, 2), &Matrix::identity(2), 1).unwrap();
        assert!(s.a.is_zero() && s.d.is_zero());
        assert!(s.b.is_identity() && s.c.is_identity());
        assert!(seq_quad(&e, &e, 0).is_err());
    }

    #[test]
    fn anti_triangular_examples() {
        let parts = anti_triangular_parts(&Matrix::zeros(2, 2), &Matrix::identity(2)).unwrap();
        assert!(parts.gamma.is_zero() && parts.xi.is_zero());
        assert!(parts.delta.is_identity() && parts.lambda.is_identity());

        let e = m(&[[2, 1], [0, 0]]);
        let ed = oracle(&e);
        let parts = anti_triangular_parts(&e, &Matrix::zeros(2, 2)).unwrap();
        assert_eq!(parts.gamma, ed);
        assert_eq!(parts.delta, ed.mul(&ed).unwrap());
        assert!(parts.lambda.is_zero() && parts.xi.is_zero());
    }

    #[test]
    fn anti_triangular_rejects_violation() {
        // F invertible means F^π = 0, so pick F with a kernel that E leaks into.
        let e = m(&[[0, 1], [1, 0]]);
        let f = m(&[[1, 0], [0, 0]]);
        let err = anti_triangular_parts(&e, &f).unwrap_err();
        assert!(matches!(err, Error::HypothesisViolated(_)));
    }

    #[test]
    fn degenerate_inputs() {
        let p = m(&[[1, 1], [0, 1]]);
        let z = Matrix::zeros(2, 2);
        let pd = oracle(&p);
        assert_eq!(additive_thm_pqq(&p, &z).unwrap(), pd);
        assert_eq!(additive_thm_pqq(&z, &p).unwrap(), pd);
        assert_eq!(additive_cor_q2(&p, &z).unwrap(), pd);
        assert_eq!(additive_cor_pqp(&p, &z).unwrap(), pd);
        let p = m(&[[1, 0], [0, 0]]);
        let q = m(&[[0, 0], [1, 0]]);
        assert_eq!(additive_cor_pqp(&p, &q).unwrap(), m(&[[1, 0], [1, 0]]));
        assert_eq!(additive_thm_pqq(&p, &q).unwrap(), m(&[[1, 0], [1, 0]]));
    }

    #[test]
    fn check_hypotheses_examples() {
        let p = m(&[[1, 2], [3, 4]]);
        let z = Matrix::zeros(2, 2);
        for id in [FormulaId::Pq0, FormulaId::Pqq0, FormulaId::Q20, FormulaId::Pqp0] {
            assert!(check_hypotheses(id, &p, &z).unwrap().all_hold());
        }
        let id = Matrix::identity(2);
        let r = check_hypotheses(FormulaId::Pqq0, &id, &id).unwrap();
        assert!(!r.conditions[0].holds);
        assert_eq!(r.conditions[0].witness, Some(id.clone()));
        assert!(matches!(
            check_hypotheses(FormulaId::Bcb, &p, &z),
            Err(Error::WrongInputKind { .. })
        ));
        assert!(check_hypotheses(FormulaId::Pq0, &p, &Matrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn split_shapes() {
        let p = m(&[[1, 0], [0, 0]]);
        let q = m(&[[0, 0], [1, 0]]);
        let s = ClineSplit::new(&p, &q).unwrap();
        assert_eq!(s.k.shape(), (4, 4));
        assert!(s.k.mul(&s.l).unwrap().is_zero());
        assert_eq!(s.k_drazin, oracle(&s.k));
        assert_eq!(s.l_drazin, oracle(&s.l));
        assert_eq!(s.h.submatrix(2, 0, 2, 2), p.mul(&q).unwrap());
    }
}
