//! Seeded generators of instances that satisfy each hypothesis set exactly.
//!
//! The conditions cut out measure-zero varieties, so unconstrained sampling
//! would essentially never hit them. Each case instead starts from a
//! zero-pattern template that satisfies its conditions by construction
//! (kernel and left-kernel bases solve the linear parts), then conjugates by
//! a random unimodular similarity to spread the pattern out. Every candidate
//! is re-verified with the exact hypothesis check before it is returned.
//!
//! Templates per case:
//!
//! * `pq0`: in adapted coordinates `P = [R | 0]`, `Q = [0; Y]`.
//! * `antitri`: `F = diag(F₁, N)` with `F₁` invertible and `N` nilpotent,
//!   `E = [[E₁₁, 0], [E₂₁, E₂₂]]` with `N·E₂₂ = 0`.
//! * `pqp0`: `P = [[A, B], [C, 0]]`, `Q = diag(0, D)` with `BD² = 0`, `BDC = 0`.
//! * `q20`: `P = [[A, B], [0, D]]`, `Q = [[0, 0], [C, 0]]` with
//!   `[B; D]·C·[A B] = 0`.
//! * `pqq0`: either of the two above.
//! * `pqp0` also draws from the `pq0` and `q20` templates.
//! * block cases: the blocks are solved for from the linear form of their
//!   conditions, with an optional shared zero row that opens up a left
//!   kernel, which is what lets `BC` (or `CB`) be nonzero.
//!
//! `PQ² = 0` together with `PQP(PQ)^π = 0` forces `(PQ)² = 0`: with
//! `G = PQ`, `G^D Q = (G^D)² P Q² = 0` and `G² = GPGG^D Q = 0`. So `PQ` is
//! always nilpotent for `pqq0` / `q20`, `PQP` is always zero, and likewise
//! `BC` (resp. `CB`) is nilpotent for `bcb` / `bdc` (resp. `abc` / `cab`).
//! [`nonvacuity_stats`] reports those flags anyway; they stay at zero.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::additive::check_hypotheses;
use crate::block::{check_block_hypotheses, BlockInstance};
use crate::drazin::drazin_oracle;
use crate::error::{Error, Result};
use crate::hypothesis::{FormulaId, HypothesisReport};
use crate::matrix::{prod, Matrix};
use crate::scalar::Scalar;

pub const MAX_ATTEMPTS: u32 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub case: FormulaId,
    pub seed: u64,
    /// Size of the `A` block; unused by the additive cases.
    pub m: usize,
    /// Side length for additive cases, size of `D` for block cases.
    pub n: usize,
    /// Random entries are Gaussian integers with `|re|, |im| ≤ entry_bound`.
    pub entry_bound: i64,
}

impl GenSpec {
    pub fn new(case: FormulaId, seed: u64, m: usize, n: usize) -> Self {
        Self {
            case,
            seed,
            m,
            n,
            entry_bound: 2,
        }
    }

    /// The spec of the `index`-th member of a batch.
    pub fn nth(&self, index: u64) -> Self {
        Self {
            seed: derive_seed(self.seed, index),
            ..*self
        }
    }
}

/// SplitMix64 over `(seed, index)`, so batch members do not share streams.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    /// `(P, Q)` for an additive formula.
    Pair { p: Matrix, q: Matrix },
    /// `(E, F)` for `[[E, I], [F, 0]]`.
    AntiTri { e: Matrix, f: Matrix },
    Block(BlockInstance),
}

impl Instance {
    /// The matrix whose Drazin inverse the formula computes.
    pub fn target(&self) -> Result<Matrix> {
        match self {
            Instance::Pair { p, q } => p.add(q),
            Instance::AntiTri { e, f } => crate::additive::anti_triangular_matrix(e, f),
            Instance::Block(b) => b.assemble(),
        }
    }
}

/// Hypothesis report of `id` on `inst`; errors if the kinds do not match.
pub fn report_for(id: FormulaId, inst: &Instance) -> Result<HypothesisReport> {
    match (inst, id.is_block()) {
        (Instance::Block(b), true) => check_block_hypotheses(id, b),
        (Instance::Pair { p, q }, false) if id != FormulaId::AntiTri => check_hypotheses(id, p, q),
        (Instance::AntiTri { e, f }, false) if id == FormulaId::AntiTri => check_hypotheses(id, e, f),
        _ => Err(Error::WrongInputKind {
            formula: id.as_str(),
        }),
    }
}

/// Evaluates formula `id` on `inst`.
pub fn apply(id: FormulaId, inst: &Instance) -> Result<Matrix> {
    use crate::additive::*;
    match (id, inst) {
        (FormulaId::Pq0, Instance::Pair { p, q }) => additive_pq_zero(p, q),
        (FormulaId::Pqq0, Instance::Pair { p, q }) => additive_thm_pqq(p, q),
        (FormulaId::Q20, Instance::Pair { p, q }) => additive_cor_q2(p, q),
        (FormulaId::Pqp0, Instance::Pair { p, q }) => additive_cor_pqp(p, q),
        (FormulaId::AntiTri, Instance::AntiTri { e, f }) => anti_triangular_drazin(e, f),
        (_, Instance::Block(b)) if id.is_block() => crate::block::block_drazin(id, b),
        _ => Err(Error::WrongInputKind {
            formula: id.as_str(),
        }),
    }
}

struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Sampler {
    fn entry(&mut self) -> Scalar {
        if self.rng.random_bool(0.35) {
            return Scalar::zero();
        }
        let b = self.bound;
        let re = self.rng.random_range(-b..=b);
        let im = if self.rng.random_bool(0.2) {
            self.rng.random_range(-b..=b)
        } else {
            0
        };
        Scalar::gaussian(re, im)
    }

    fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| self.entry())
    }

    fn chance(&mut self, p: f64) -> bool {
        self.rng.random_bool(p)
    }

    fn below(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    /// Product of transvections `I + t·e_i e_jᵀ` with `t ∈ {±1, ±i}`.
    fn unimodular(&mut self, n: usize) -> (Matrix, Matrix) {
        let mut s = Matrix::identity(n);
        if n >= 2 {
            for _ in 0..2 * n {
                let i = self.below(n);
                let j = (i + 1 + self.below(n - 1)) % n;
                let t = match self.below(6) {
                    0 => Scalar::i(),
                    1 => -Scalar::i(),
                    2 | 3 => Scalar::one(),
                    _ => -Scalar::one(),
                };
                let mut el = Matrix::identity(n);
                el[(i, j)] = t;
                s = s.mul(&el).expect("square");
            }
        }
        let inv = s.inverse().expect("transvections are invertible");
        (s, inv)
    }

    fn invertible(&mut self, n: usize) -> Matrix {
        for _ in 0..64 {
            let x = self.matrix(n, n);
            if x.rank() == n {
                return x;
            }
        }
        Matrix::identity(n)
    }

    fn nilpotent(&mut self, n: usize) -> Matrix {
        Matrix::from_fn(n, n, |r, c| if c > r { self.entry() } else { Scalar::zero() })
    }

    /// Square matrix that is singular more often than not.
    fn singularish(&mut self, n: usize) -> Matrix {
        match self.below(3) {
            0 => self.nilpotent(n),
            1 => {
                let mut x = self.matrix(n, n);
                let r = self.below(n);
                for c in 0..n {
                    x[(r, c)] = Scalar::zero();
                }
                x
            }
            _ => self.matrix(n, n),
        }
    }

    /// Random combination `basis · Z` (or `Z · basis` for row bases).
    fn combine_cols(&mut self, basis: &Matrix, cols: usize) -> Matrix {
        let z = self.matrix(basis.cols(), cols);
        basis.mul(&z).expect("conformable")
    }

    fn combine_rows(&mut self, basis: &Matrix, rows: usize) -> Matrix {
        let z = self.matrix(rows, basis.rows());
        z.mul(basis).expect("conformable")
    }
}

fn zero_row(x: &mut Matrix, r: usize) {
    for c in 0..x.cols() {
        x[(r, c)] = Scalar::zero();
    }
}

/// Rescales each column to Gaussian-integer entries.
fn integral_columns(x: &Matrix) -> Matrix {
    let mut out = x.clone();
    for c in 0..x.cols() {
        let mut l = num_bigint::BigInt::one();
        for r in 0..x.rows() {
            l = l.lcm(x[(r, c)].re().denom()).lcm(x[(r, c)].im().denom());
        }
        if l.is_one() {
            continue;
        }
        let k = Scalar::from(num_rational::BigRational::from_integer(l));
        for r in 0..x.rows() {
            out[(r, c)] = &x[(r, c)] * &k;
        }
    }
    out
}

fn null_basis(x: &Matrix) -> Matrix {
    integral_columns(&x.null_space_basis())
}

fn left_null_basis(x: &Matrix) -> Matrix {
    integral_columns(&x.transpose().null_space_basis()).transpose()
}

fn vstack_all(parts: &[&Matrix]) -> Matrix {
    let (first, rest) = parts.split_first().expect("non-empty");
    rest.iter()
        .fold((*first).clone(), |acc, m| acc.vstack(m).expect("same width"))
}

fn conj(x: &Matrix, s: &Matrix, s_inv: &Matrix) -> Matrix {
    prod(&[s, x, s_inv]).expect("square, same size")
}

fn conj_pair(g: &mut Sampler, p: Matrix, q: Matrix) -> (Matrix, Matrix) {
    let (s, si) = g.unimodular(p.rows());
    (conj(&p, &s, &si), conj(&q, &s, &si))
}

fn conj_block(g: &mut Sampler, inst: BlockInstance) -> BlockInstance {
    let (s1, s1i) = g.unimodular(inst.m());
    let (s2, s2i) = g.unimodular(inst.n());
    BlockInstance {
        a: conj(&inst.a, &s1, &s1i),
        b: prod(&[&s1, &inst.b, &s2i]).expect("conformable"),
        c: prod(&[&s2, &inst.c, &s1i]).expect("conformable"),
        d: conj(&inst.d, &s2, &s2i),
    }
}

fn split_size(g: &mut Sampler, n: usize) -> (usize, usize) {
    let a = 1 + g.below(n - 1);
    (a, n - a)
}

fn template_pq0(g: &mut Sampler, n: usize) -> (Matrix, Matrix) {
    let r = g.below(n + 1);
    let p = g.matrix(n, n);
    let q = g.matrix(n, n);
    let p = Matrix::from_fn(n, n, |i, j| if j < r { p[(i, j)].clone() } else { Scalar::zero() });
    let q = Matrix::from_fn(n, n, |i, j| if i < r { Scalar::zero() } else { q[(i, j)].clone() });
    conj_pair(g, p, q)
}

fn template_antitri(g: &mut Sampler, n: usize) -> (Matrix, Matrix) {
    let r = g.below(n + 1);
    let k = n - r;
    let f1 = g.invertible(r);
    let nil = g.nilpotent(k);
    let f = Matrix::block_diag(&f1, &nil);
    let e11 = g.matrix(r, r);
    let e21 = g.matrix(k, r);
    let e22 = {
        let ker = null_basis(&nil);
        g.combine_cols(&ker, k)
    };
    let e = Matrix::block2(&e11, &Matrix::zeros(r, k), &e21, &e22).expect("tiles");
    conj_pair(g, e, f)
}

fn template_pqp0(g: &mut Sampler, n: usize) -> (Matrix, Matrix) {
    if n < 2 || g.chance(0.15) {
        return template_pq0(g, n);
    }
    if g.chance(0.4) {
        return template_q20(g, n);
    }
    let (a, b) = split_size(g, n);
    let am = g.matrix(a, a);
    let d = if g.chance(0.5) { g.nilpotent(b) } else { g.singularish(b) };
    let bm = g.combine_rows(&left_null_basis(&d.mul(&d).unwrap()), a);
    let c = g.combine_cols(&null_basis(&bm.mul(&d).unwrap()), a);
    let p = Matrix::block2(&am, &bm, &c, &Matrix::zeros(b, b)).expect("tiles");
    let q = Matrix::block_diag(&Matrix::zeros(a, a), &d);
    conj_pair(g, p, q)
}

/// `[B; D]·C·[A B] = 0`, optionally with a shared zero row in `A` and `B`.
fn blocks_bcb(g: &mut Sampler, m: usize, n: usize) -> BlockInstance {
    let mut a = g.matrix(m, m);
    let mut b = g.matrix(m, n);
    let d = if g.chance(0.3) { g.singularish(n) } else { g.matrix(n, n) };
    if g.chance(0.6) {
        let r = g.below(m);
        zero_row(&mut a, r);
        zero_row(&mut b, r);
    }
    let n_x = null_basis(&b.vstack(&d).unwrap());
    let l_y = left_null_basis(&a.hstack(&b).unwrap());
    let c1 = g.combine_cols(&n_x, m);
    let z2 = g.matrix(n, l_y.rows());
    let c = c1.add(&z2.mul(&l_y).unwrap()).unwrap();
    BlockInstance { a, b, c, d }
}

fn template_q20(g: &mut Sampler, n: usize) -> (Matrix, Matrix) {
    if n < 2 {
        return (g.matrix(n, n), Matrix::zeros(n, n));
    }
    let (a, b) = split_size(g, n);
    let inst = blocks_bcb(g, a, b);
    let p = Matrix::block2(&inst.a, &inst.b, &Matrix::zeros(b, a), &inst.d).unwrap();
    let q = Matrix::block2(&Matrix::zeros(a, a), &Matrix::zeros(a, b), &inst.c, &Matrix::zeros(b, b))
        .unwrap();
    conj_pair(g, p, q)
}

fn blocks_bdc(g: &mut Sampler, m: usize, n: usize) -> BlockInstance {
    let mut a = g.matrix(m, m);
    let d = g.singularish(n);
    let mut b = g.combine_rows(&left_null_basis(&d.mul(&d).unwrap()), m);
    if g.chance(0.6) {
        let r = g.below(m);
        zero_row(&mut a, r);
        zero_row(&mut b, r);
    }
    let bd = b.mul(&d).unwrap();
    let n1 = null_basis(&b.vstack(&bd).unwrap());
    let n2 = null_basis(&bd);
    let l_y = left_null_basis(&a.hstack(&b).unwrap());
    let c1 = g.combine_cols(&n1, m);
    let z2 = g.matrix(n2.cols(), l_y.rows());
    let c = c1.add(&prod(&[&n2, &z2, &l_y]).unwrap()).unwrap();
    BlockInstance { a, b, c, d }
}

/// `[A; C]·B·[C D] = 0`, optionally with a shared zero row in `C` and `D`.
fn blocks_abc(g: &mut Sampler, m: usize, n: usize) -> BlockInstance {
    let a = g.matrix(m, m);
    let mut c = g.matrix(n, m);
    let mut d = g.singularish(n);
    if g.chance(0.6) {
        let r = g.below(n);
        zero_row(&mut c, r);
        zero_row(&mut d, r);
    }
    let n_x = null_basis(&a.vstack(&c).unwrap());
    let l_y = left_null_basis(&c.hstack(&d).unwrap());
    let b1 = g.combine_cols(&n_x, n);
    let z2 = g.matrix(m, l_y.rows());
    let b = b1.add(&z2.mul(&l_y).unwrap()).unwrap();
    BlockInstance { a, b, c, d }
}

fn blocks_cab(g: &mut Sampler, m: usize, n: usize) -> BlockInstance {
    let a = g.singularish(m);
    let mut c = g.matrix(n, m);
    let mut d = g.matrix(n, n);
    if g.chance(0.6) {
        let r = g.below(n);
        zero_row(&mut c, r);
        zero_row(&mut d, r);
    }
    let a2 = a.mul(&a).unwrap();
    let ca = c.mul(&a).unwrap();
    let n1 = null_basis(&vstack_all(&[&a2, &ca, &c]));
    let n2 = null_basis(&vstack_all(&[&a2, &ca]));
    let l_y = left_null_basis(&c.hstack(&d).unwrap());
    let b1 = g.combine_cols(&n1, n);
    let z2 = g.matrix(n2.cols(), l_y.rows());
    let b = b1.add(&prod(&[&n2, &z2, &l_y]).unwrap()).unwrap();
    BlockInstance { a, b, c, d }
}

fn candidate(g: &mut Sampler, spec: &GenSpec) -> Instance {
    let (m, n) = (spec.m, spec.n);
    let pair = |(p, q): (Matrix, Matrix)| Instance::Pair { p, q };
    match spec.case {
        FormulaId::Pq0 => pair(template_pq0(g, n)),
        FormulaId::AntiTri => {
            let (e, f) = template_antitri(g, n);
            Instance::AntiTri { e, f }
        }
        FormulaId::Pqp0 => pair(template_pqp0(g, n)),
        FormulaId::Q20 => pair(template_q20(g, n)),
        FormulaId::Pqq0 => {
            if g.chance(0.5) {
                pair(template_q20(g, n))
            } else {
                pair(template_pqp0(g, n))
            }
        }
        FormulaId::Bcb => {
            let inst = blocks_bcb(g, m, n);
            Instance::Block(conj_block(g, inst))
        }
        FormulaId::Bdc => {
            let inst = blocks_bdc(g, m, n);
            Instance::Block(conj_block(g, inst))
        }
        FormulaId::Abc => {
            let inst = blocks_abc(g, m, n);
            Instance::Block(conj_block(g, inst))
        }
        FormulaId::Cab => {
            let inst = blocks_cab(g, m, n);
            Instance::Block(conj_block(g, inst))
        }
    }
}

/// A verified instance for `spec.case`. Deterministic in `spec`.
pub fn generate(spec: &GenSpec) -> Result<(Instance, HypothesisReport)> {
    let too_small = spec.n == 0 || (spec.case.is_block() && spec.m == 0) || spec.entry_bound < 1;
    if too_small {
        return Err(Error::GenerationExhausted {
            case: spec.case.as_str(),
            attempts: 0,
        });
    }
    let mut g = Sampler {
        rng: ChaCha8Rng::seed_from_u64(spec.seed),
        bound: spec.entry_bound,
    };
    for _ in 0..MAX_ATTEMPTS {
        let inst = candidate(&mut g, spec);
        let report = report_for(spec.case, &inst)?;
        if report.all_hold() {
            return Ok((inst, report));
        }
    }
    Err(Error::GenerationExhausted {
        case: spec.case.as_str(),
        attempts: MAX_ATTEMPTS,
    })
}

fn nonzero(x: Result<Matrix>) -> Result<bool> {
    Ok(!x?.is_zero())
}

fn pi_not_identity(x: &Matrix) -> Result<bool> {
    Ok(!drazin_oracle(x)?.eigenprojection.is_identity())
}

/// Labelled "this instance is not trivial" flags for `inst` under `case`.
pub fn nonvacuity_flags(case: FormulaId, inst: &Instance) -> Result<Vec<(&'static str, bool)>> {
    let flags = match inst {
        Instance::Pair { p, q } => {
            let pq = p.mul(q)?;
            match case {
                FormulaId::Pq0 => alloc::vec![
                    ("P != 0", !p.is_zero()),
                    ("Q != 0", !q.is_zero()),
                    ("QP != 0", nonzero(q.mul(p))?),
                ],
                FormulaId::Pqp0 => alloc::vec![
                    ("PQ != 0", !pq.is_zero()),
                    ("QP != 0", nonzero(q.mul(p))?),
                    ("Q^2 != 0", nonzero(q.mul(q))?),
                ],
                _ => alloc::vec![
                    ("PQ != 0", !pq.is_zero()),
                    ("Q^2 != 0", nonzero(q.mul(q))?),
                    ("PQP != 0", nonzero(pq.mul(p))?),
                    ("(PQ)^pi != I", pi_not_identity(&pq)?),
                ],
            }
        }
        Instance::AntiTri { e, f } => {
            let fr = drazin_oracle(f)?;
            alloc::vec![
                ("F^pi != I", !fr.eigenprojection.is_identity()),
                ("F^pi != 0", !fr.eigenprojection.is_zero()),
                ("FE != 0", nonzero(f.mul(e))?),
                ("EF^pi != 0", nonzero(e.mul(&fr.eigenprojection))?),
            ]
        }
        Instance::Block(bi) => {
            let bc = bi.b.mul(&bi.c)?;
            let cb = bi.c.mul(&bi.b)?;
            match case {
                FormulaId::Bcb | FormulaId::Bdc => alloc::vec![
                    ("BC != 0", !bc.is_zero()),
                    ("CB != 0", !cb.is_zero()),
                    ("BD != 0", nonzero(bi.b.mul(&bi.d))?),
                    ("(BC)^pi != I", pi_not_identity(&bc)?),
                ],
                _ => alloc::vec![
                    ("CB != 0", !cb.is_zero()),
                    ("BC != 0", !bc.is_zero()),
                    ("AB != 0", nonzero(bi.a.mul(&bi.b))?),
                    ("(CB)^pi != I", pi_not_identity(&cb)?),
                ],
            }
        }
    };
    Ok(flags)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagCount {
    pub label: &'static str,
    pub hits: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonvacuityStats {
    pub case: FormulaId,
    pub count: usize,
    pub flags: Vec<FlagCount>,
}

impl NonvacuityStats {
    pub fn fraction(&self, label: &str) -> Option<f64> {
        self.flags
            .iter()
            .find(|f| f.label == label)
            .map(|f| f.hits as f64 / self.count as f64)
    }
}

/// Sizes cycled through by [`nonvacuity_stats`].
pub const STATS_SIZES: [(usize, usize); 4] = [(2, 2), (2, 3), (3, 2), (3, 3)];

/// Flag tally over `count` instances of `case`, cycling through [`STATS_SIZES`].
pub fn nonvacuity_stats(case: FormulaId, count: usize, seed: u64) -> Result<NonvacuityStats> {
    let specs = (0..count).map(|k| {
        let (m, n) = STATS_SIZES[k % STATS_SIZES.len()];
        GenSpec::new(case, seed, m, n).nth(k as u64)
    });
    tally(case, specs)
}

/// Flag tally over `base.nth(0..count)`.
pub fn nonvacuity_stats_for(base: &GenSpec, count: usize) -> Result<NonvacuityStats> {
    tally(base.case, (0..count).map(|k| base.nth(k as u64)))
}

fn tally(case: FormulaId, specs: impl Iterator<Item = GenSpec>) -> Result<NonvacuityStats> {
    let mut flags: Vec<FlagCount> = Vec::new();
    let mut count = 0;
    for spec in specs {
        count += 1;
        let (inst, _) = generate(&spec)?;
        for (label, hit) in nonvacuity_flags(case, &inst)? {
            match flags.iter_mut().find(|f| f.label == label) {
                Some(f) => f.hits += usize::from(hit),
                None => flags.push(FlagCount {
                    label,
                    hits: usize::from(hit),
                }),
            }
        }
    }
    Ok(NonvacuityStats { case, count, flags })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeakerRegimeProbe {
    pub trials: usize,
    /// Candidates with `PQ² = 0` whose `PQ` has a nonzero core part.
    pub non_nilpotent_pq: usize,
    /// Of those, how many also satisfy `PQP(PQ)^π = 0`.
    pub satisfying: usize,
}

/// Searches for `PQ² = 0`, `PQP(PQ)^π = 0` with `PQ` not nilpotent.
///
/// Candidates are `P = [[A, B], [C, E]]`, `Q = diag(0, D)` with `D² = 0`, so
/// `PQ² = 0` holds while `PQ` carries the core part of `ED`.
pub fn weaker_regime_probe(trials: usize, seed: u64, n: usize) -> Result<WeakerRegimeProbe> {
    let mut out = WeakerRegimeProbe {
        trials,
        non_nilpotent_pq: 0,
        satisfying: 0,
    };
    if n < 2 {
        return Ok(out);
    }
    for k in 0..trials {
        let mut g = Sampler {
            rng: ChaCha8Rng::seed_from_u64(derive_seed(seed, k as u64)),
            bound: 2,
        };
        let (a, b) = split_size(&mut g, n);
        let d = loop {
            let x = g.nilpotent(b);
            if x.mul(&x)?.is_zero() {
                break x;
            }
        };
        let p = g.matrix(n, n);
        let q = Matrix::block_diag(&Matrix::zeros(a, a), &d);
        let (p, q) = conj_pair(&mut g, p, q);
        let pq = p.mul(&q)?;
        let pi = drazin_oracle(&pq)?.eigenprojection;
        if pi.is_identity() {
            continue;
        }
        out.non_nilpotent_pq += 1;
        if prod(&[&pq, &p, &pi])?.is_zero() {
            out.satisfying += 1;
        }
    }
    Ok(out)
}
