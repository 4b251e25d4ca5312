//! Represented and rank-oracle matroids, minors, duality, and the classical
//! subset-expansion invariants.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::enumerate::{state_count, Budget};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::{det_in_place, next_combination, rank_in_place, FqMatrix};
use crate::poly::{BiPoly, UniPoly};
use crate::subset::{Subset, MAX_GROUND};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorOp {
    Restrict,
    Delete,
    Contract,
}

/// A matroid on a labelled ground set, accessed through its rank function.
pub trait Matroid {
    fn labels(&self) -> &[String];

    fn rank(&self, set: Subset) -> usize;

    /// Restriction `M|_A`; ground set `A` in the original order.
    fn restrict(&self, set: Subset) -> Self
    where
        Self: Sized;

    /// Contraction `M/A`; ground set `E \ A` in the original order.
    fn contract(&self, set: Subset) -> Self
    where
        Self: Sized;

    fn dual(&self) -> Self
    where
        Self: Sized;

    fn delete(&self, set: Subset) -> Self
    where
        Self: Sized,
    {
        self.restrict(self.ground().minus(set))
    }

    fn minor(&self, op: MinorOp, set: Subset) -> Self
    where
        Self: Sized,
    {
        match op {
            MinorOp::Restrict => self.restrict(set),
            MinorOp::Delete => self.delete(set),
            MinorOp::Contract => self.contract(set),
        }
    }

    fn len(&self) -> usize {
        self.labels().len()
    }

    fn is_empty(&self) -> bool {
        self.labels().is_empty()
    }

    fn ground(&self) -> Subset {
        Subset::full(self.len())
    }

    fn full_rank(&self) -> usize {
        self.rank(self.ground())
    }

    fn subset(&self, labels: &[&str]) -> Result<Subset> {
        let mut s = Subset::EMPTY;
        for l in labels {
            let i = self
                .labels()
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
            s = s.with(i);
        }
        Ok(s)
    }

    fn rank_of(&self, labels: &[&str]) -> Result<usize> {
        Ok(self.rank(self.subset(labels)?))
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn check_ground(labels: &[String]) -> Result<()> {
    if labels.len() > MAX_GROUND {
        return Err(Error::GroundSetTooLarge(labels.len()));
    }
    let mut seen = std::collections::HashSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// A matroid given by the columns of a matrix of full row rank.
#[derive(Clone, PartialEq, Eq)]
pub struct RepMatroid {
    matrix: FqMatrix,
    labels: Vec<String>,
}

impl RepMatroid {
    /// Column labels come from `labels`, else from the matrix, else `1..=n`.
    /// Dependent rows are dropped.
    pub fn new(matrix: FqMatrix, labels: Option<Vec<String>>) -> Result<RepMatroid> {
        let labels = labels
            .or_else(|| matrix.col_labels().map(<[String]>::to_vec))
            .unwrap_or_else(|| default_labels(matrix.cols()));
        if labels.len() != matrix.cols() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} columns",
                labels.len(),
                matrix.cols()
            )));
        }
        check_ground(&labels)?;
        let matrix = matrix.row_reduce_full_rank().with_col_labels(labels.clone())?;
        Ok(RepMatroid { matrix, labels })
    }

    pub fn from_ints(field: &Field, rows: &[Vec<i64>], labels: Option<Vec<String>>) -> Result<RepMatroid> {
        RepMatroid::new(FqMatrix::from_ints(field, rows)?, labels)
    }

    /// Full-row-rank representation; rows index `V`, columns index `E`.
    pub fn matrix(&self) -> &FqMatrix {
        &self.matrix
    }

    pub fn field(&self) -> &Field {
        self.matrix.field()
    }

    /// `|V| = r(E)`.
    pub fn row_count(&self) -> usize {
        self.matrix.rows()
    }

    /// Every basis `B` paired with `det(M|_B)`. The rank-zero matroid has
    /// the single basis `∅` with determinant 1.
    pub fn bases(&self) -> Vec<(Subset, FieldElement)> {
        let r = self.row_count();
        let n = self.len();
        let f = self.field();
        let mut out = Vec::new();
        if r > n {
            return out;
        }
        let mut idx: Vec<usize> = (0..r).collect();
        let mut buf = Vec::with_capacity(r * r);
        loop {
            buf.clear();
            for i in 0..r {
                for &j in &idx {
                    buf.push(self.matrix.code(i, j));
                }
            }
            let d = det_in_place(f, &mut buf, r);
            if d != 0 {
                out.push((Subset::from_indices(idx.iter().copied()), f.element(d)));
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
        out
    }

    fn columns(&self, cols: &[usize]) -> Vec<Vec<u32>> {
        (0..self.row_count())
            .map(|i| cols.iter().map(|&j| self.matrix.code(i, j)).collect())
            .collect()
    }

    fn from_rows(field: &Field, rows: Vec<Vec<u32>>, cols: usize, labels: Vec<String>) -> RepMatroid {
        let r = rows.len();
        let data: Vec<u32> = rows.into_iter().flatten().collect();
        let m = FqMatrix::from_codes(field, r, cols, data);
        RepMatroid::new(m, Some(labels)).expect("labels inherited from a valid matroid")
    }
}

impl Matroid for RepMatroid {
    fn labels(&self) -> &[String] {
        &self.labels
    }

    fn rank(&self, set: Subset) -> usize {
        let cols: Vec<usize> = set.iter().collect();
        let r = self.row_count();
        let mut buf = Vec::with_capacity(r * cols.len());
        for i in 0..r {
            for &j in &cols {
                buf.push(self.matrix.code(i, j));
            }
        }
        rank_in_place(self.field(), &mut buf, r, cols.len())
    }

    fn restrict(&self, set: Subset) -> RepMatroid {
        let cols: Vec<usize> = set.iter().collect();
        let labels = cols.iter().map(|&j| self.labels[j].clone()).collect();
        RepMatroid::new(self.matrix.select_columns(&cols), Some(labels))
            .expect("labels inherited from a valid matroid")
    }

    /// Contracts one element at a time: a zero column is dropped; otherwise
    /// the column is cleared below and above a pivot by row operations and
    /// the pivot row and column are removed.
    fn contract(&self, set: Subset) -> RepMatroid {
        let f = self.field().clone();
        let mut remaining: Vec<usize> = (0..self.len()).collect();
        let mut rows = self.columns(&remaining);
        for e in set.iter() {
            let c = remaining.iter().position(|&x| x == e).expect("element present");
            if let Some(v) = rows.iter().position(|row| row[c] != 0) {
                let inv = f.inv_code(rows[v][c]);
                let pivot = rows[v].clone();
                for (i, row) in rows.iter_mut().enumerate() {
                    if i == v || row[c] == 0 {
                        continue;
                    }
                    let factor = f.mul_codes(row[c], inv);
                    for (x, &p) in row.iter_mut().zip(&pivot) {
                        *x = f.sub_codes(*x, f.mul_codes(factor, p));
                    }
                }
                rows.remove(v);
            }
            for row in rows.iter_mut() {
                row.remove(c);
            }
            remaining.remove(c);
        }
        let labels = remaining.iter().map(|&j| self.labels[j].clone()).collect();
        RepMatroid::from_rows(&f, rows, remaining.len(), labels)
    }

    /// Standard form `[I | D]` on a basis of pivot columns maps to
    /// `[-D^T | I]`; columns are placed back under their original labels.
    fn dual(&self) -> RepMatroid {
        let f = self.field().clone();
        let n = self.len();
        let (rref, pivots) = self.matrix.rref();
        let non_pivots: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
        let k = non_pivots.len();
        let mut rows = vec![vec![0u32; n]; k];
        for (j, &col) in non_pivots.iter().enumerate() {
            rows[j][col] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                rows[j][pc] = f.neg_code(rref.code(i, col));
            }
        }
        RepMatroid::from_rows(&f, rows, n, self.labels.clone())
    }
}

impl fmt::Debug for RepMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RepMatroid on {:?} over {:?}", self.labels, self.field())?;
        write!(f, "{}", self.matrix)
    }
}

type RankFn = dyn Fn(Subset) -> usize + Send + Sync;

/// A matroid given only by its rank function. Minors and duals compose the
/// rank function directly.
#[derive(Clone)]
pub struct RankOracleMatroid {
    labels: Vec<String>,
    rank_fn: Arc<RankFn>,
}

impl RankOracleMatroid {
    /// Wraps a rank function without checking the axioms.
    pub fn new<F>(labels: Vec<String>, rank_fn: F) -> Result<RankOracleMatroid>
    where
        F: Fn(Subset) -> usize + Send + Sync + 'static,
    {
        check_ground(&labels)?;
        Ok(RankOracleMatroid {
            labels,
            rank_fn: Arc::new(rank_fn),
        })
    }

    /// Wraps a rank function and verifies the axioms exhaustively when the
    /// ground set has at most ten elements.
    pub fn validated<F>(labels: Vec<String>, rank_fn: F) -> Result<RankOracleMatroid>
    where
        F: Fn(Subset) -> usize + Send + Sync + 'static,
    {
        let m = RankOracleMatroid::new(labels, rank_fn)?;
        if m.len() <= 10 {
            check_rank_axioms(&m)?;
        }
        Ok(m)
    }

    /// `U_{k,n}` on labels `1..=n`.
    pub fn uniform(k: usize, n: usize) -> Result<RankOracleMatroid> {
        if k > n {
            return Err(Error::InvalidRankFunction(format!("U_{{{k},{n}}} needs k <= n")));
        }
        RankOracleMatroid::new(default_labels(n), move |s| s.len().min(k))
    }

    /// `n` loops: the rank-zero matroid.
    pub fn loops(n: usize) -> Result<RankOracleMatroid> {
        RankOracleMatroid::uniform(0, n)
    }

    /// `n` coloops: the free matroid.
    pub fn free(n: usize) -> Result<RankOracleMatroid> {
        RankOracleMatroid::uniform(n, n)
    }

    /// Tabulates the rank function of any matroid.
    pub fn from_matroid<M: Matroid + ?Sized>(m: &M, budget: Budget) -> Result<RankOracleMatroid> {
        budget.check(state_count(2, m.len()))?;
        let table: Vec<u8> = (0..1u64 << m.len())
            .map(|b| m.rank(Subset::from_bits(b)) as u8)
            .collect();
        RankOracleMatroid::new(m.labels().to_vec(), move |s| table[s.bits() as usize] as usize)
    }
}

impl Matroid for RankOracleMatroid {
    fn labels(&self) -> &[String] {
        &self.labels
    }

    fn rank(&self, set: Subset) -> usize {
        (self.rank_fn)(set)
    }

    fn restrict(&self, set: Subset) -> RankOracleMatroid {
        let pos: Vec<usize> = set.iter().collect();
        let labels = pos.iter().map(|&i| self.labels[i].clone()).collect();
        let parent = Arc::clone(&self.rank_fn);
        RankOracleMatroid {
            labels,
            rank_fn: Arc::new(move |x: Subset| parent(x.spread(&pos))),
        }
    }

    fn contract(&self, set: Subset) -> RankOracleMatroid {
        let pos: Vec<usize> = self.ground().minus(set).iter().collect();
        let labels = pos.iter().map(|&i| self.labels[i].clone()).collect();
        let parent = Arc::clone(&self.rank_fn);
        let base = parent(set);
        RankOracleMatroid {
            labels,
            rank_fn: Arc::new(move |x: Subset| parent(x.spread(&pos).union(set)) - base),
        }
    }

    fn dual(&self) -> RankOracleMatroid {
        let parent = Arc::clone(&self.rank_fn);
        let ground = self.ground();
        let total = parent(ground);
        RankOracleMatroid {
            labels: self.labels.clone(),
            rank_fn: Arc::new(move |x: Subset| x.len() + parent(ground.minus(x)) - total),
        }
    }
}

impl fmt::Debug for RankOracleMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RankOracleMatroid on {:?} of rank {}",
            self.labels,
            self.full_rank()
        )
    }
}

/// Normalization, unit increase, and submodularity over all subsets.
pub fn check_rank_axioms<M: Matroid + ?Sized>(m: &M) -> Result<()> {
    let n = m.len();
    let ranks: Vec<usize> = (0..1u64 << n).map(|b| m.rank(Subset::from_bits(b))).collect();
    if ranks[0] != 0 {
        return Err(Error::InvalidRankFunction("r(∅) != 0".into()));
    }
    for a in 0..1u64 << n {
        for e in 0..n {
            if a >> e & 1 == 0 {
                let (ra, rb) = (ranks[a as usize], ranks[(a | 1 << e) as usize]);
                if rb < ra || rb > ra + 1 {
                    return Err(Error::InvalidRankFunction(format!(
                        "adding element {e} to {:?} changes rank from {ra} to {rb}",
                        Subset::from_bits(a)
                    )));
                }
            }
        }
    }
    for a in 0..1u64 << n {
        for b in 0..a {
            if ranks[(a | b) as usize] + ranks[(a & b) as usize] > ranks[a as usize] + ranks[b as usize] {
                return Err(Error::InvalidRankFunction(format!(
                    "submodularity fails on {:?}, {:?}",
                    Subset::from_bits(a),
                    Subset::from_bits(b)
                )));
            }
        }
    }
    Ok(())
}

/// True iff both matroids have the same labels (as a set) and agree on the
/// rank of every subset, matched by label.
pub fn same_rank_function<A: Matroid + ?Sized, B: Matroid + ?Sized>(a: &A, b: &B) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let index: HashMap<&String, usize> = b.labels().iter().enumerate().map(|(i, l)| (l, i)).collect();
    let Some(map): Option<Vec<usize>> = a.labels().iter().map(|l| index.get(l).copied()).collect() else {
        return false;
    };
    a.ground()
        .subsets()
        .all(|s| a.rank(s) == b.rank(s.spread(&map)))
}

fn subset_budget<M: Matroid + ?Sized>(m: &M, budget: Budget) -> Result<()> {
    budget.check(state_count(2, m.len())).map(|_| ())
}

/// `χ_M(x) = Σ_{A ⊆ E} (-1)^{|A|} x^{r(E) - r(A)}`.
pub fn char_poly<M: Matroid + ?Sized>(m: &M, budget: Budget) -> Result<UniPoly> {
    subset_budget(m, budget)?;
    let r = m.full_rank();
    let mut coeffs = vec![0i128; r + 1];
    for a in m.ground().subsets() {
        let sign = if a.len() % 2 == 0 { 1 } else { -1 };
        coeffs[r - m.rank(a)] += sign;
    }
    Ok(UniPoly::new(coeffs.into_iter().map(BigInt::from).collect()))
}

/// `R_M(u, v) = Σ_{A ⊆ E} u^{r(E) - r(A)} v^{|A| - r(A)}`.
pub fn whitney_rank_poly<M: Matroid + ?Sized>(m: &M, budget: Budget) -> Result<BiPoly> {
    subset_budget(m, budget)?;
    let r = m.full_rank();
    let mut counts: HashMap<(i32, i32), i64> = HashMap::new();
    for a in m.ground().subsets() {
        let ra = m.rank(a);
        *counts.entry(((r - ra) as i32, (a.len() - ra) as i32)).or_default() += 1;
    }
    let mut out = BiPoly::zero();
    for ((i, j), c) in counts {
        out.add_term(BigInt::from(c), i, j);
    }
    Ok(out)
}

/// `T_M(x, y) = R_M(x - 1, y - 1)`.
pub fn tutte_poly<M: Matroid + ?Sized>(m: &M, budget: Budget) -> Result<BiPoly> {
    Ok(whitney_rank_poly(m, budget)?.shift(-1, -1))
}

/// Checks `R_M(x, 1/x) = (1 + 1/x)^{|E|} x^{r(E)}` in exact arithmetic.
pub fn rank_poly_diagonal_check<M: Matroid + ?Sized>(m: &M, x: &BigRational, budget: Budget) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let lhs = whitney_rank_poly(m, budget)?.eval(x, &x.recip())?;
    let rhs = num_traits::pow(BigRational::one() + x.recip(), m.len())
        * num_traits::pow(x.clone(), m.full_rank());
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn u24(f: &Field) -> RepMatroid {
        RepMatroid::from_ints(f, &[vec![1, 0, 1, 1], vec![0, 1, 1, -1]], None).unwrap()
    }

    fn bigq(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn rank_examples() {
        let m = u24(&gf(5));
        assert_eq!(m.rank(Subset::EMPTY), 0);
        assert_eq!(m.rank_of(&["1", "2", "3"]).unwrap(), 2);
        assert_eq!(m.rank_of(&["9"]), Err(Error::UnknownLabel("9".into())));
        let lp = RepMatroid::from_ints(&gf(3), &[vec![0]], None).unwrap();
        assert_eq!(lp.row_count(), 0);
        assert_eq!(lp.rank_of(&["1"]).unwrap(), 0);
    }

    #[test]
    fn minor_examples() {
        let m = u24(&gf(5));
        assert!(same_rank_function(&m.contract(Subset::EMPTY), &m));
        let r = m.restrict(m.subset(&["1", "2"]).unwrap());
        assert!(same_rank_function(&r, &RankOracleMatroid::free(2).unwrap()));
        let c = m.contract(m.subset(&["3"]).unwrap());
        assert_eq!(c.labels(), &["1", "2", "4"]);
        let u13 = RankOracleMatroid::new(vec!["1".into(), "2".into(), "4".into()], |s| s.len().min(1)).unwrap();
        assert!(same_rank_function(&c, &u13));
        let d = m.minor(MinorOp::Delete, m.subset(&["4"]).unwrap());
        assert_eq!(d.labels(), &["1", "2", "3"]);
    }

    #[test]
    fn contraction_rank_identity() {
        let m = u24(&gf(7));
        let o = RankOracleMatroid::from_matroid(&m, Budget::default()).unwrap();
        for a in m.ground().subsets() {
            let rc = m.contract(a);
            let oc = o.contract(a);
            let rest: Vec<usize> = m.ground().minus(a).iter().collect();
            for x in rc.ground().subsets() {
                let expect = m.rank(x.spread(&rest).union(a)) - m.rank(a);
                assert_eq!(rc.rank(x), expect);
                assert_eq!(oc.rank(x), expect);
            }
        }
    }

    #[test]
    fn dual_examples() {
        let f = gf(5);
        let m = u24(&f);
        let d = m.dual();
        assert_eq!(d.full_rank(), 2);
        assert!(same_rank_function(&d, &RankOracleMatroid::uniform(2, 4).unwrap()));
        assert!(same_rank_function(&d.dual(), &m));
        let coloop = RepMatroid::from_ints(&f, &[vec![1]], None).unwrap();
        assert!(same_rank_function(&coloop.dual(), &RankOracleMatroid::loops(1).unwrap()));
        let rank0 = RepMatroid::from_ints(&f, &[vec![0, 0]], None).unwrap();
        assert!(same_rank_function(&rank0.dual(), &RankOracleMatroid::free(2).unwrap()));
    }

    #[test]
    fn bases_examples() {
        let f = gf(5);
        let m = u24(&f);
        assert_eq!(m.bases().len(), 6);
        let id = RepMatroid::from_ints(&f, &[vec![1, 0], vec![0, 1]], None).unwrap();
        assert_eq!(id.bases(), vec![(Subset::full(2), f.one())]);
        let loops = RepMatroid::from_ints(&f, &[vec![0, 0, 0]], None).unwrap();
        assert_eq!(loops.bases(), vec![(Subset::EMPTY, f.one())]);
    }

    #[test]
    fn char_poly_examples() {
        let b = Budget::default();
        let m = u24(&gf(5));
        assert_eq!(char_poly(&m, b).unwrap(), UniPoly::from_ints(&[3, -4, 1]));
        let with_loop = RepMatroid::from_ints(&gf(5), &[vec![1, 0]], None).unwrap();
        assert!(char_poly(&with_loop, b).unwrap().is_zero());
        let coloop = RankOracleMatroid::free(1).unwrap();
        assert_eq!(char_poly(&coloop, b).unwrap(), UniPoly::from_ints(&[-1, 1]));
        assert!(matches!(
            char_poly(&m, Budget::new(8)),
            Err(Error::BudgetExceeded { states: 16, budget: 8 })
        ));
    }

    #[test]
    fn tutte_examples() {
        let b = Budget::default();
        let m = u24(&gf(5));
        let t = tutte_poly(&m, b).unwrap();
        assert_eq!(t.to_string(), "x^2 + 2x + 2y + y^2");
        assert_eq!(tutte_poly(&m.dual(), b).unwrap(), t.swap());
        // χ_M(x) = (-1)^{r(E)} R_M(-x, -1)
        let r = whitney_rank_poly(&m, b).unwrap();
        let chi = char_poly(&m, b).unwrap();
        for x in -3..6 {
            let lhs = chi.eval(&bigq(x));
            let rhs = r.eval(&bigq(-x), &bigq(-1)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn diagonal_examples() {
        let b = Budget::default();
        let m = u24(&gf(5));
        assert!(rank_poly_diagonal_check(&m, &bigq(1), b).unwrap());
        assert_eq!(whitney_rank_poly(&m, b).unwrap().eval(&bigq(1), &bigq(1)).unwrap(), bigq(16));
        assert!(rank_poly_diagonal_check(&m, &bigq(2), b).unwrap());
        let lhs = whitney_rank_poly(&m, b)
            .unwrap()
            .eval(&bigq(2), &BigRational::new(1.into(), 2.into()))
            .unwrap();
        assert_eq!(lhs, BigRational::new(81.into(), 16.into()) * bigq(4));
        assert!(rank_poly_diagonal_check(&m, &bigq(-2), b).unwrap());
        assert_eq!(rank_poly_diagonal_check(&m, &bigq(0), b), Err(Error::ZeroArgument));
    }

    #[test]
    fn axioms_detect_bad_rank_functions() {
        let bad = RankOracleMatroid::validated(default_labels(3), |s| s.len() * 2);
        assert!(matches!(bad, Err(Error::InvalidRankFunction(_))));
        let not_submodular = RankOracleMatroid::validated(default_labels(2), |s| usize::from(s.bits() == 3));
        assert!(not_submodular.is_err());
        assert!(RankOracleMatroid::validated(default_labels(4), |s| s.len().min(2)).is_ok());
    }
}
