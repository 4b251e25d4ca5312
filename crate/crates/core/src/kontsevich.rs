//! The alpha-sum formula for `χ_{M^⊥}(q)` and the counting oracles that
//! validate it independently.
//!
//! For `α ∈ (F_q^*)^E` the weighted Laplacian is `L = M Λ Mᵀ`. Its rank is
//! `r*(M;α)` and its lexicographically first maximal nonsingular principal
//! minor is `s(M/W*;α)`. The sum
//! `Σ_α g(q, r*) η(s(M/W*;α))` equals `χ_{M^⊥}(q)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::catalog;
use crate::enumerate::{par_fold, state_count, Budget, Odometer};
use crate::error::{Error, Result};
use crate::field::{prime_power, Field, FieldElement};
use crate::linalg::{det_in_place, next_combination, FqMatrix};
use crate::matroid::{char_poly, Matroid, RepMatroid};
use crate::subset::Subset;

/// A weight vector with every entry nonzero, indexed like the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaVector {
    values: Vec<FieldElement>,
}

impl AlphaVector {
    pub fn new(values: Vec<FieldElement>) -> Result<AlphaVector> {
        if let Some(i) = values.iter().position(FieldElement::is_zero) {
            return Err(Error::ZeroWeight(format!("position {}", i + 1)));
        }
        if values.windows(2).any(|w| !w[0].field().same(w[1].field())) {
            return Err(Error::FieldMismatch);
        }
        Ok(AlphaVector { values })
    }

    pub fn from_ints(field: &Field, values: &[i64]) -> Result<AlphaVector> {
        AlphaVector::new(values.iter().map(|&v| field.from_int(v)).collect())
    }

    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn codes(&self, m: &RepMatroid) -> Result<Vec<u32>> {
        if self.values.len() != m.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} weights for {} elements",
                self.values.len(),
                m.len()
            )));
        }
        if self.values.iter().any(|v| !v.field().same(m.field())) {
            return Err(Error::FieldMismatch);
        }
        Ok(self.values.iter().map(FieldElement::code).collect())
    }
}

/// Sign convention for the Gauss-sum weight `g(q, n)` at even `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum GaussConvention {
    /// `1/q^{n/2}` if `p ≡ 1 (mod 4)`, `1/(−q)^{n/2}` if `p ≡ 3 (mod 4)`.
    #[default]
    Characteristic,
    /// The same rule keyed on `q mod 4` instead of `p mod 4`.
    FieldOrder,
}

/// The exact rational weight attached to a rank-`n` form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GWeight(pub BigRational);

impl GWeight {
    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

fn odd_prime_power(q: u64) -> Result<(u64, u32)> {
    let (p, d) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if p == 2 {
        return Err(Error::EvenCharacteristic(q));
    }
    Ok((p, d))
}

pub fn g_weight(q: u64, n: usize) -> Result<GWeight> {
    g_weight_with(q, n, GaussConvention::Characteristic)
}

pub fn g_weight_with(q: u64, n: usize, convention: GaussConvention) -> Result<GWeight> {
    let (p, _) = odd_prime_power(q)?;
    if n % 2 == 1 {
        return Ok(GWeight(BigRational::zero()));
    }
    let key = match convention {
        GaussConvention::Characteristic => p,
        GaussConvention::FieldOrder => q,
    };
    let base = if key % 4 == 1 {
        BigInt::from(q)
    } else {
        -BigInt::from(q)
    };
    Ok(GWeight(BigRational::new(BigInt::one(), num_traits::pow(base, n / 2))))
}

/// `Σ_K det²(A|_K) Π_{e∈K} α_e` over column subsets `K` of size `rows.len()`.
/// An empty row set gives 1.
fn basis_sum_codes(f: &Field, rows: &[&[u32]], alpha: &[u32]) -> u32 {
    let r = rows.len();
    let n = alpha.len();
    if r == 0 {
        return 1;
    }
    if r > n {
        return 0;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    let mut buf = Vec::with_capacity(r * r);
    let mut total = 0;
    loop {
        buf.clear();
        for row in rows {
            buf.extend(idx.iter().map(|&j| row[j]));
        }
        let d = det_in_place(f, &mut buf, r);
        if d != 0 {
            let w = idx.iter().fold(f.mul_codes(d, d), |acc, &j| f.mul_codes(acc, alpha[j]));
            total = f.add_codes(total, w);
        }
        if !next_combination(&mut idx, n) {
            return total;
        }
    }
}

fn matrix_rows(m: &RepMatroid) -> Vec<Vec<u32>> {
    (0..m.row_count())
        .map(|i| (0..m.len()).map(|j| m.matrix().code(i, j)).collect())
        .collect()
}

/// `s(M;α) = Σ_{B∈ℬ(M)} det²(M|_B) Π_{e∈B} α_e`; 1 for rank zero.
pub fn basis_sum(m: &RepMatroid, alpha: &AlphaVector) -> Result<FieldElement> {
    let a = alpha.codes(m)?;
    let rows = matrix_rows(m);
    let refs: Vec<&[u32]> = rows.iter().map(Vec::as_slice).collect();
    Ok(m.field().element(basis_sum_codes(m.field(), &refs, &a)))
}

fn laplacian_codes(f: &Field, rows: &[Vec<u32>], alpha: &[u32]) -> Vec<u32> {
    let r = rows.len();
    let mut out = vec![0u32; r * r];
    for i in 0..r {
        for j in i..r {
            let v = rows[i]
                .iter()
                .zip(&rows[j])
                .zip(alpha)
                .fold(0, |acc, ((&x, &y), &a)| {
                    if x == 0 || y == 0 {
                        acc
                    } else {
                        f.add_codes(acc, f.mul_codes(f.mul_codes(x, y), a))
                    }
                });
            out[i * r + j] = v;
            out[j * r + i] = v;
        }
    }
    out
}

/// `L(M;α) = M Λ Mᵀ`, of order `r(E)`.
pub fn weighted_laplacian(m: &RepMatroid, alpha: &AlphaVector) -> Result<FqMatrix> {
    let a = alpha.codes(m)?;
    let r = m.row_count();
    Ok(FqMatrix::from_codes(m.field(), r, r, laplacian_codes(m.field(), &matrix_rows(m), &a)))
}

/// How `W*` is located.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum WStarStrategy {
    /// Rank of the Laplacian and its first maximal nonsingular principal minor.
    #[default]
    LaplacianRank,
    /// Row sets `W` by increasing size, lexicographically, until
    /// `s(M/W;α) ≠ 0`, with `s` evaluated from bases.
    SubsetSearch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WStar {
    /// Deleted rows, 0-based.
    pub rows: Vec<usize>,
    pub r_star: usize,
    /// `s(M/W;α)`.
    pub minor: FieldElement,
}

fn w_star_codes(f: &Field, rows: &[Vec<u32>], alpha: &[u32], strategy: WStarStrategy) -> (Vec<usize>, u32) {
    let r = rows.len();
    match strategy {
        WStarStrategy::LaplacianRank => {
            let l = FqMatrix::from_codes(f, r, r, laplacian_codes(f, rows, alpha));
            let order = l.rank();
            let (keep, d) = l.first_nonsingular_principal(order);
            (complement(&keep, r), d)
        }
        WStarStrategy::SubsetSearch => {
            for k in 0..=r {
                let mut w: Vec<usize> = (0..k).collect();
                loop {
                    let kept: Vec<&[u32]> = (0..r).filter(|i| !w.contains(i)).map(|i| rows[i].as_slice()).collect();
                    let s = basis_sum_codes(f, &kept, alpha);
                    if s != 0 {
                        return (w, s);
                    }
                    if !next_combination(&mut w, r) {
                        break;
                    }
                }
            }
            unreachable!("deleting every row leaves s = 1")
        }
    }
}

fn complement(keep: &[usize], n: usize) -> Vec<usize> {
    (0..n).filter(|i| !keep.contains(i)).collect()
}

/// A minimum row set `W` with `s(M/W;α) ≠ 0`, `r* = |V| − |W|`, and the minor.
pub fn w_star(m: &RepMatroid, alpha: &AlphaVector, strategy: WStarStrategy) -> Result<WStar> {
    let a = alpha.codes(m)?;
    let rows = matrix_rows(m);
    let (w, s) = w_star_codes(m.field(), &rows, &a, strategy);
    Ok(WStar {
        r_star: m.row_count() - w.len(),
        rows: w,
        minor: m.field().element(s),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Theorem1Options {
    pub strategy: WStarStrategy,
    pub convention: GaussConvention,
    pub budget: Budget,
}

/// The alpha-sum with its census: how many `α` have each `(r*, η(minor))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Summary {
    pub q: u64,
    pub total: BigRational,
    pub histogram: BTreeMap<(usize, i8), u64>,
    pub states: u64,
}

impl Theorem1Summary {
    /// Counts of `α` by `r*` alone.
    pub fn rank_histogram(&self) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for (&(r, _), &c) in &self.histogram {
            *out.entry(r).or_default() += c;
        }
        out
    }

    /// Re-weights the same census under another convention.
    pub fn total_with(&self, convention: GaussConvention) -> Result<BigRational> {
        weigh(self.q, &self.histogram, convention)
    }
}

fn weigh(q: u64, hist: &BTreeMap<(usize, i8), u64>, convention: GaussConvention) -> Result<BigRational> {
    let mut total = BigRational::zero();
    for (&(r, eta), &c) in hist {
        let g = g_weight_with(q, r, convention)?.0;
        total += g * BigRational::from(BigInt::from(c as i64 * eta as i64));
    }
    Ok(total)
}

fn merge_hist(mut a: BTreeMap<(usize, i8), u64>, b: BTreeMap<(usize, i8), u64>) -> BTreeMap<(usize, i8), u64> {
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}

fn nonzero_codes(f: &Field) -> Vec<u32> {
    f.nonzero_elements().map(|e| e.code()).collect()
}

/// Evaluates `Σ_{α∈(F_q^*)^E} g(q, r*(M;α)) η(s(M/W*;α))` exactly, in
/// row-major `α` order split into fixed chunks.
pub fn theorem1(m: &RepMatroid, opts: Theorem1Options) -> Result<Theorem1Summary> {
    let f = m.field();
    let q = f.order();
    odd_prime_power(q)?;
    let n = m.len();
    let total = opts.budget.check(state_count(q - 1, n))?;
    let nz = nonzero_codes(f);
    let rows = matrix_rows(m);
    let hist = par_fold(
        total,
        |range| {
            let mut hist = BTreeMap::new();
            let mut odo = Odometer::at(range.start, n, (q - 1) as u32);
            let mut alpha = vec![0u32; n];
            for _ in range {
                for (a, &d) in alpha.iter_mut().zip(odo.digits()) {
                    *a = nz[d as usize];
                }
                let (w, s) = w_star_codes(f, &rows, &alpha, opts.strategy);
                *hist.entry((rows.len() - w.len(), f.eta_code(s))).or_default() += 1;
                odo.advance();
            }
            hist
        },
        merge_hist,
    )
    .unwrap_or_default();
    Ok(Theorem1Summary {
        q,
        total: weigh(q, &hist, opts.convention)?,
        histogram: hist,
        states: total,
    })
}

pub fn theorem1_rhs(m: &RepMatroid, budget: Budget) -> Result<BigRational> {
    Ok(theorem1(
        m,
        Theorem1Options {
            budget,
            ..Default::default()
        },
    )?
    .total)
}

/// Both sides of `(q−1)(q−4) = g(q,2) Σ_α η(α₁α₂+α₁α₃+α₁α₄+α₂α₃+α₂α₄+4α₃α₄)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedCheck {
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub eta_sum: i64,
}

impl ReducedCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The reduced `U_{2,4}` identity over `field`. Fails with
/// `RepresentationCollapse` if the fixed matrix does not represent `U_{2,4}`.
pub fn u24_reduced_check(field: &Field, budget: Budget) -> Result<ReducedCheck> {
    catalog::u24(field)?;
    let q = field.order();
    let total = budget.check(state_count(q - 1, 4))?;
    let nz = nonzero_codes(field);
    let four = field.int_code(4);
    let f = field;
    let eta_sum = par_fold(
        total,
        |range| {
            let mut odo = Odometer::at(range.start, 4, (q - 1) as u32);
            let mut acc = 0i64;
            for _ in range {
                let a: Vec<u32> = odo.digits().iter().map(|&d| nz[d as usize]).collect();
                let mul = |x, y| f.mul_codes(x, y);
                let terms = [
                    mul(a[0], a[1]),
                    mul(a[0], a[2]),
                    mul(a[0], a[3]),
                    mul(a[1], a[2]),
                    mul(a[1], a[3]),
                    mul(four, mul(a[2], a[3])),
                ];
                let s = terms.iter().fold(0, |x, &t| f.add_codes(x, t));
                acc += f.eta_code(s) as i64;
                odo.advance();
            }
            acc
        },
        |x, y| x + y,
    )
    .unwrap_or(0);
    let qq = BigInt::from(q);
    let lhs = BigRational::from((&qq - 1) * (&qq - 4));
    let rhs = g_weight(q, 2)?.0 * BigRational::from(BigInt::from(eta_sum));
    Ok(ReducedCheck { lhs, rhs, eta_sum })
}

/// Every `α` with `r*(M;α) = r`, in row-major order.
pub fn alphas_with_rank(m: &RepMatroid, r: usize, budget: Budget) -> Result<Vec<AlphaVector>> {
    let f = m.field();
    let q = f.order();
    let n = m.len();
    let total = budget.check(state_count(q - 1, n))?;
    let nz = nonzero_codes(f);
    let rows = matrix_rows(m);
    let hits = par_fold(
        total,
        |range| {
            let mut out = Vec::new();
            let mut odo = Odometer::at(range.start, n, (q - 1) as u32);
            for _ in range {
                let alpha: Vec<u32> = odo.digits().iter().map(|&d| nz[d as usize]).collect();
                let l = FqMatrix::from_codes(f, rows.len(), rows.len(), laplacian_codes(f, &rows, &alpha));
                if l.rank() == r {
                    out.push(alpha);
                }
                odo.advance();
            }
            out
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )
    .unwrap_or_default();
    Ok(hits
        .into_iter()
        .map(|a| AlphaVector {
            values: a.into_iter().map(|c| f.element(c)).collect(),
        })
        .collect())
}

/// The distinct values of `η` over every maximal nonsingular principal
/// minor of `L(M;α)`. A single value means the choice does not matter.
pub fn principal_minor_characters(m: &RepMatroid, alpha: &AlphaVector) -> Result<Vec<i8>> {
    let l = weighted_laplacian(m, alpha)?;
    let mut etas: Vec<i8> = l
        .nonsingular_principal_sets(l.rank())?
        .iter()
        .map(|(_, d)| d.quadratic_character())
        .collect();
    etas.sort_unstable();
    etas.dedup();
    Ok(etas)
}

/// Checks [`principal_minor_characters`] is a singleton for every `α`.
/// Returns the first offending `α`, if any.
pub fn choice_independence(m: &RepMatroid, budget: Budget) -> Result<Option<AlphaVector>> {
    let f = m.field();
    let q = f.order();
    budget.check(state_count(q - 1, m.len()))?;
    let nz: Vec<FieldElement> = f.nonzero_elements().collect();
    let mut odo = Odometer::at(0, m.len(), (q - 1) as u32);
    loop {
        let alpha = AlphaVector::new(odo.digits().iter().map(|&d| nz[d as usize].clone()).collect())?;
        if principal_minor_characters(m, &alpha)?.len() > 1 {
            return Ok(Some(alpha));
        }
        if odo.advance().is_none() {
            return Ok(None);
        }
    }
}

/// `|{α ∈ (F_q^*)^E : Mα = 0}|` by exhaustive enumeration.
pub fn nowhere_zero_kernel_count(m: &RepMatroid, budget: Budget) -> Result<u64> {
    let f = m.field();
    let q = f.order();
    let n = m.len();
    let total = budget.check(state_count(q - 1, n))?;
    let nz = nonzero_codes(f);
    let rows = matrix_rows(m);
    Ok(par_fold(
        total,
        |range| {
            let mut odo = Odometer::at(range.start, n, (q - 1) as u32);
            let mut count = 0u64;
            for _ in range {
                let ok = rows.iter().all(|row| {
                    row.iter()
                        .zip(odo.digits())
                        .fold(0, |acc, (&x, &d)| f.add_codes(acc, f.mul_codes(x, nz[d as usize])))
                        == 0
                });
                count += u64::from(ok);
                odo.advance();
            }
            count
        },
        |a, b| a + b,
    )
    .unwrap_or(0))
}

fn row_vectors(m: &RepMatroid, x: &[u32]) -> Vec<u32> {
    let f = m.field();
    (0..m.len())
        .map(|e| {
            x.iter()
                .enumerate()
                .fold(0, |acc, (v, &xv)| f.add_codes(acc, f.mul_codes(xv, m.matrix().code(v, e))))
        })
        .collect()
}

/// `N_b(j)`: pairs `(x ∈ F_q^V, α ∈ (F_q^*)^E)` with `Σ_e α_e (xM)_e^j = b`.
/// For each `x` the `α` are counted by a running distribution over partial sums.
pub fn quadratic_form_count(m: &RepMatroid, j: u64, b: &FieldElement, budget: Budget) -> Result<u64> {
    if !b.field().same(m.field()) {
        return Err(Error::FieldMismatch);
    }
    let f = m.field();
    let q = f.order();
    let r = m.row_count();
    let total = budget.check(state_count(q, r))?;
    let nz = nonzero_codes(f);
    let target = b.code() as usize;
    Ok(par_fold(
        total,
        |range| {
            let mut odo = Odometer::at(range.start, r, q as u32);
            let mut count = 0u64;
            let mut dist = vec![0u64; q as usize];
            let mut next = vec![0u64; q as usize];
            for _ in range {
                let y = row_vectors(m, odo.digits());
                dist.iter_mut().for_each(|d| *d = 0);
                dist[0] = 1;
                for &ye in &y {
                    let z = f.pow_code(ye, j);
                    next.iter_mut().for_each(|d| *d = 0);
                    for (s, &c) in dist.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        for &a in &nz {
                            next[f.add_codes(s as u32, f.mul_codes(a, z)) as usize] += c;
                        }
                    }
                    std::mem::swap(&mut dist, &mut next);
                }
                count += dist[target];
                odo.advance();
            }
            count
        },
        |a, b| a + b,
    )
    .unwrap_or(0))
}

/// `(N_0(j) − N_1(j)) / q^{|V|}`.
pub fn lemma_chi(m: &RepMatroid, j: u64, budget: Budget) -> Result<BigRational> {
    let f = m.field();
    let n0 = quadratic_form_count(m, j, &f.zero(), budget)?;
    let n1 = quadratic_form_count(m, j, &f.one(), budget)?;
    let diff = BigInt::from(n0) - BigInt::from(n1);
    Ok(BigRational::new(diff, num_traits::pow(BigInt::from(f.order()), m.row_count())))
}

/// Closed-form number of `x ∈ F_q^n` with `x B xᵀ = 0` for symmetric `B` of
/// rank `m`: `q^n` if `m = 0`, `q^{n−1}` if `m` is odd, and otherwise
/// `q^{n−m}(q^{m−1} + (q−1) q^{(m−2)/2} η((−1)^{m/2} d))` with `d` the
/// first maximal nonsingular principal minor.
pub fn chevalley_zero_count(b: &FqMatrix) -> Result<BigInt> {
    let (keep, d) = b.max_nonsingular_principal()?;
    let f = b.field();
    let q = BigInt::from(f.order());
    let n = b.rows();
    let m = keep.len();
    if m == 0 {
        return Ok(num_traits::pow(q, n));
    }
    if m % 2 == 1 {
        return Ok(num_traits::pow(q, n - 1));
    }
    let sign = if (m / 2) % 2 == 0 { f.one() } else { f.from_int(-1) };
    let eta = (&sign * &d).quadratic_character();
    let inner = num_traits::pow(q.clone(), m - 1) + (&q - 1) * num_traits::pow(q.clone(), (m - 2) / 2) * eta;
    Ok(num_traits::pow(q, n - m) * inner)
}

/// Brute-force count of zeros of `x B xᵀ`.
pub fn brute_force_zero_count(b: &FqMatrix, budget: Budget) -> Result<u64> {
    let n = b.rows();
    if b.cols() != n {
        return Err(Error::NotSquare { rows: n, cols: b.cols() });
    }
    let f = b.field();
    let q = f.order();
    let total = budget.check(state_count(q, n))?;
    let mut odo = Odometer::at(0, n, q as u32);
    let mut count = 0;
    for _ in 0..total {
        let x = odo.digits();
        let mut v = 0;
        for i in 0..n {
            for j in 0..n {
                v = f.add_codes(v, f.mul_codes(f.mul_codes(x[i], b.code(i, j)), x[j]));
            }
        }
        count += u64::from(v == 0);
        odo.advance();
    }
    Ok(count)
}

/// `|{x ∈ F_q^V : (xM)_e = 0 ⇔ e ∈ A}|`, which equals `χ_{M/A}(q)`.
pub fn contraction_pattern_count(m: &RepMatroid, a: Subset, budget: Budget) -> Result<u64> {
    let f = m.field();
    let q = f.order();
    let r = m.row_count();
    let total = budget.check(state_count(q, r))?;
    Ok(par_fold(
        total,
        |range| {
            let mut odo = Odometer::at(range.start, r, q as u32);
            let mut count = 0u64;
            for _ in range {
                let y = row_vectors(m, odo.digits());
                let ok = y.iter().enumerate().all(|(e, &v)| (v == 0) == a.contains(e));
                count += u64::from(ok);
                odo.advance();
            }
            count
        },
        |a, b| a + b,
    )
    .unwrap_or(0))
}

/// Outcome of running the alpha-sum against `χ_{M^⊥}(q)` at one field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem1Probe {
    pub q: u64,
    pub characteristic: u64,
    pub degree: u32,
    pub expected: String,
    pub total: String,
    pub pass: bool,
    /// Set when the totals disagree: the term under suspicion.
    pub suspect: Option<String>,
    pub alternative: Option<AlternativeWeight>,
    /// `(r*, η, count)` triples.
    pub histogram: Vec<(usize, i8, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlternativeWeight {
    pub convention: GaussConvention,
    pub total: String,
    pub matches: bool,
}

impl Theorem1Probe {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("probe is serializable")
    }
}

/// Runs the alpha-sum with the stated weight and compares it with
/// `χ_{M^⊥}(q)`. On disagreement the report names `g(q,n)` and re-weighs
/// the same census with the `q mod 4` sign rule.
pub fn theorem1_probe(m: &RepMatroid, budget: Budget) -> Result<Theorem1Probe> {
    let f = m.field();
    let summary = theorem1(
        m,
        Theorem1Options {
            budget,
            ..Default::default()
        },
    )?;
    let expected = BigRational::from(char_poly(&m.dual(), budget)?.eval_int(&BigInt::from(f.order())));
    let pass = summary.total == expected;
    let alternative = if pass {
        None
    } else {
        let total = summary.total_with(GaussConvention::FieldOrder)?;
        Some(AlternativeWeight {
            convention: GaussConvention::FieldOrder,
            matches: total == expected,
            total: total.to_string(),
        })
    };
    Ok(Theorem1Probe {
        q: f.order(),
        characteristic: f.characteristic(),
        degree: f.degree(),
        expected: expected.to_string(),
        total: summary.total.to_string(),
        pass,
        suspect: (!pass).then(|| "g(q,n)".to_string()),
        alternative,
        histogram: summary.histogram.iter().map(|(&(r, e), &c)| (r, e, c)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::lookup;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    fn int(n: i64) -> BigRational {
        BigInt::from(n).into()
    }

    #[test]
    fn g_weight_examples() {
        assert_eq!(g_weight(7, 1).unwrap().0, int(0));
        assert_eq!(g_weight(5, 2).unwrap().0, BigRational::new(1.into(), 5.into()));
        assert_eq!(g_weight(3, 2).unwrap().0, BigRational::new((-1).into(), 3.into()));
        assert_eq!(g_weight(9, 0).unwrap().0, int(1));
        assert_eq!(g_weight(9, 2).unwrap().0, BigRational::new((-1).into(), 9.into()));
        assert_eq!(
            g_weight_with(9, 2, GaussConvention::FieldOrder).unwrap().0,
            BigRational::new(1.into(), 9.into())
        );
        assert_eq!(g_weight(4, 2), Err(Error::EvenCharacteristic(4)));
        assert_eq!(g_weight(6, 2), Err(Error::NotPrimePower(6)));
    }

    #[test]
    fn basis_sum_examples() {
        let f = gf(7);
        let m = catalog::u24(&f).unwrap();
        for vals in [[1, 2, 3, 4], [6, 6, 1, 5], [2, 2, 3, 3]] {
            let a = AlphaVector::from_ints(&f, &vals).unwrap();
            let [a1, a2, a3, a4] = vals;
            let expect = a1 * a2 + a1 * a3 + a1 * a4 + a2 * a3 + a2 * a4 + 4 * a3 * a4;
            assert_eq!(basis_sum(&m, &a).unwrap(), f.from_int(expect));
        }
        let loops = lookup("loops3").unwrap().represent(&f).unwrap();
        let a = AlphaVector::from_ints(&f, &[3, 4, 5]).unwrap();
        assert_eq!(basis_sum(&loops, &a).unwrap(), f.one());
        let k3 = lookup("K3").unwrap().represent(&gf(5)).unwrap();
        let ones = AlphaVector::from_ints(&gf(5), &[1, 1, 1]).unwrap();
        assert_eq!(basis_sum(&k3, &ones).unwrap(), gf(5).from_int(3));
        assert!(matches!(
            AlphaVector::from_ints(&f, &[1, 0]),
            Err(Error::ZeroWeight(_))
        ));
    }

    #[test]
    fn laplacian_examples() {
        let f = gf(5);
        let k3 = lookup("K3").unwrap().represent(&f).unwrap();
        let ones = AlphaVector::from_ints(&f, &[1, 1, 1]).unwrap();
        let l = weighted_laplacian(&k3, &ones).unwrap();
        assert!(l.is_symmetric());
        assert_eq!(l.det().unwrap(), f.from_int(3));
        let m = catalog::u24(&f).unwrap();
        // over GF(5), (1, 1, 2, 2) satisfies α₁ = −2α₃ and L vanishes
        let a = AlphaVector::from_ints(&f, &[1, 1, 2, 2]).unwrap();
        assert_eq!(weighted_laplacian(&m, &a).unwrap().rank(), 0);
        let a = AlphaVector::from_ints(&f, &[1, 1, 1, 1]).unwrap();
        let l = weighted_laplacian(&m, &a).unwrap();
        assert_eq!(l.det().unwrap(), basis_sum(&m, &a).unwrap());
        assert_eq!(l.det().unwrap(), f.from_int(9));
    }

    #[test]
    fn w_star_examples() {
        let f = gf(5);
        let loops = lookup("loop").unwrap().represent(&f).unwrap();
        let a = AlphaVector::from_ints(&f, &[2]).unwrap();
        let w = w_star(&loops, &a, WStarStrategy::LaplacianRank).unwrap();
        assert_eq!((w.rows.len(), w.r_star, w.minor.clone()), (0, 0, f.one()));
        let m = catalog::u24(&f).unwrap();
        // α₁ = α₂ = −2α₃, α₃ = α₄
        let a = AlphaVector::from_ints(&f, &[-2, -2, 1, 1]).unwrap();
        for s in [WStarStrategy::LaplacianRank, WStarStrategy::SubsetSearch] {
            let w = w_star(&m, &a, s).unwrap();
            assert_eq!(w.r_star, 0);
            assert_eq!(w.minor, f.one());
        }
    }

    #[test]
    fn theorem1_examples() {
        let m = catalog::u24(&gf(5)).unwrap();
        assert_eq!(theorem1_rhs(&m, b()).unwrap(), int(8));
        let loops = lookup("loops3").unwrap().represent(&gf(5)).unwrap();
        assert_eq!(theorem1_rhs(&loops, b()).unwrap(), int(64));
        let k4 = lookup("K4").unwrap().represent(&gf(5)).unwrap();
        assert_eq!(theorem1_rhs(&k4, b()).unwrap(), int(24));
        let search = theorem1(
            &k4,
            Theorem1Options {
                strategy: WStarStrategy::SubsetSearch,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(search.total, int(24));
        assert!(matches!(theorem1_rhs(&k4, Budget::new(100)), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn reduced_check_examples() {
        for p in [3, 5, 7] {
            assert!(u24_reduced_check(&gf(p), b()).unwrap().holds(), "q = {p}");
        }
    }

    #[test]
    fn degenerate_census() {
        for p in [3u64, 5, 7] {
            let f = gf(p);
            let m = catalog::u24(&f).unwrap();
            let hits = alphas_with_rank(&m, 0, b()).unwrap();
            assert_eq!(hits.len() as u64, p - 1);
            for a in hits {
                let v = a.values();
                assert_eq!(v[0], v[1]);
                assert_eq!(v[2], v[3]);
                assert_eq!(v[0], &f.from_int(-2) * &v[2]);
            }
        }
    }

    #[test]
    fn kernel_count_examples() {
        let k3 = lookup("K3").unwrap().represent(&gf(3)).unwrap();
        assert_eq!(nowhere_zero_kernel_count(&k3, b()).unwrap(), 2);
        let cl = lookup("K3-bridge").unwrap().represent(&gf(5)).unwrap();
        assert_eq!(nowhere_zero_kernel_count(&cl, b()).unwrap(), 0);
        let m = catalog::u24(&gf(5)).unwrap();
        assert_eq!(nowhere_zero_kernel_count(&m, b()).unwrap(), 8);
    }

    #[test]
    fn quadratic_form_examples() {
        let f = gf(3);
        let m = catalog::u24(&f).unwrap();
        assert_eq!(lemma_chi(&m, 2, b()).unwrap(), int(0));
        let k3 = lookup("K3").unwrap().represent(&f).unwrap();
        assert_eq!(
            quadratic_form_count(&k3, 1, &f.zero(), b()).unwrap(),
            quadratic_form_count(&k3, 2, &f.zero(), b()).unwrap()
        );
        let f5 = gf(5);
        let m5 = catalog::u24(&f5).unwrap();
        let n1 = quadratic_form_count(&m5, 2, &f5.one(), b()).unwrap();
        for v in 2..5 {
            assert_eq!(quadratic_form_count(&m5, 2, &f5.from_int(v), b()).unwrap(), n1);
        }
        assert_eq!(lemma_chi(&m5, 3, b()).unwrap(), int(8));
    }

    #[test]
    fn chevalley_examples() {
        let f = gf(5);
        let one = FqMatrix::from_ints(&f, &[vec![1]]).unwrap();
        assert_eq!(chevalley_zero_count(&one).unwrap(), BigInt::from(1));
        let hyp = FqMatrix::from_ints(&f, &[vec![1, 0], vec![0, -1]]).unwrap();
        assert_eq!(chevalley_zero_count(&hyp).unwrap(), BigInt::from(9));
        assert_eq!(brute_force_zero_count(&hyp, b()).unwrap(), 9);
        let zero = FqMatrix::zeros(&f, 2, 2);
        assert_eq!(chevalley_zero_count(&zero).unwrap(), BigInt::from(25));
        let bad = FqMatrix::from_ints(&f, &[vec![1, 2], vec![0, 1]]).unwrap();
        assert_eq!(chevalley_zero_count(&bad), Err(Error::NotSymmetric));
    }

    #[test]
    fn contraction_pattern_examples() {
        let f = gf(3);
        let k3 = lookup("K3").unwrap().represent(&f).unwrap();
        assert_eq!(contraction_pattern_count(&k3, k3.ground(), b()).unwrap(), 1);
        assert_eq!(contraction_pattern_count(&k3, Subset::EMPTY, b()).unwrap(), 2);
        for a in k3.ground().subsets() {
            let chi = char_poly(&k3.contract(a), b()).unwrap().eval_int(&BigInt::from(3));
            assert_eq!(BigInt::from(contraction_pattern_count(&k3, a, b()).unwrap()), chi);
        }
    }

    #[test]
    fn probe_reports_gf9() {
        let f = Field::with_order(9).unwrap();
        let m = catalog::u24(&f).unwrap();
        let probe = theorem1_probe(&m, b()).unwrap();
        assert_eq!(probe.expected, "48");
        if !probe.pass {
            assert_eq!(probe.suspect.as_deref(), Some("g(q,n)"));
            assert!(probe.alternative.as_ref().unwrap().matches);
        }
        assert!(probe.to_json().contains("\"q\":9"));
    }
}
