//! Dense matrices over a [`Field`] with exact Gaussian elimination.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// Row-major dense matrix over a single field, with optional row and column labels.
#[derive(Clone, PartialEq, Eq)]
pub struct FqMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
    row_labels: Option<Vec<String>>,
    col_labels: Option<Vec<String>>,
}

/// Advances `idx` (a strictly increasing k-subset of `0..n`) to its lexicographic
/// successor. Returns `false` after the last subset.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Rank of a row-major code buffer; the buffer is destroyed.
pub(crate) fn rank_in_place(field: &Field, data: &mut [u32], rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| data[r * cols + c] != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..cols {
                data.swap(piv * cols + j, rank * cols + j);
            }
        }
        let inv = field.inv_code(data[rank * cols + c]);
        for r in rank + 1..rows {
            let lead = data[r * cols + c];
            if lead == 0 {
                continue;
            }
            let f = field.mul_codes(lead, inv);
            for j in c..cols {
                let v = field.mul_codes(f, data[rank * cols + j]);
                data[r * cols + j] = field.sub_codes(data[r * cols + j], v);
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant of an `n x n` row-major code buffer; the buffer is destroyed.
pub(crate) fn det_in_place(field: &Field, data: &mut [u32], n: usize) -> u32 {
    let mut det = 1;
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| data[r * n + c] != 0) else {
            return 0;
        };
        if piv != c {
            for j in 0..n {
                data.swap(piv * n + j, c * n + j);
            }
            det = field.neg_code(det);
        }
        let pivot = data[c * n + c];
        det = field.mul_codes(det, pivot);
        let inv = field.inv_code(pivot);
        for r in c + 1..n {
            let lead = data[r * n + c];
            if lead == 0 {
                continue;
            }
            let f = field.mul_codes(lead, inv);
            for j in c..n {
                let v = field.mul_codes(f, data[c * n + j]);
                data[r * n + j] = field.sub_codes(data[r * n + j], v);
            }
        }
    }
    det
}

fn check_labels(labels: &[String], len: usize) -> Result<()> {
    if labels.len() != len {
        return Err(Error::DimensionMismatch(format!(
            "{} labels for {} lines",
            labels.len(),
            len
        )));
    }
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl FqMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> FqMatrix {
        FqMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
            row_labels: None,
            col_labels: None,
        }
    }

    pub fn identity(field: &Field, n: usize) -> FqMatrix {
        let mut m = FqMatrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Integer entries are reduced through the prime subfield.
    pub fn from_ints(field: &Field, rows: &[Vec<i64>]) -> Result<FqMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = FqMatrix::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                m.data[i * cols + j] = field.int_code(v);
            }
        }
        Ok(m)
    }

    pub fn from_elements(
        field: &Field,
        rows: usize,
        cols: usize,
        entries: &[FieldElement],
    ) -> Result<FqMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let mut m = FqMatrix::zeros(field, rows, cols);
        for (slot, e) in m.data.iter_mut().zip(entries) {
            if e.field() != field {
                return Err(Error::FieldMismatch);
            }
            *slot = e.code();
        }
        Ok(m)
    }

    pub(crate) fn from_codes(field: &Field, rows: usize, cols: usize, data: Vec<u32>) -> FqMatrix {
        debug_assert_eq!(data.len(), rows * cols);
        FqMatrix {
            field: field.clone(),
            rows,
            cols,
            data,
            row_labels: None,
            col_labels: None,
        }
    }

    pub fn with_row_labels(mut self, labels: Vec<String>) -> Result<FqMatrix> {
        check_labels(&labels, self.rows)?;
        self.row_labels = Some(labels);
        Ok(self)
    }

    pub fn with_col_labels(mut self, labels: Vec<String>) -> Result<FqMatrix> {
        check_labels(&labels, self.cols)?;
        self.col_labels = Some(labels);
        Ok(self)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_labels(&self) -> Option<&[String]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[String]> {
        self.col_labels.as_deref()
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.field.element(self.code(i, j))
    }

    #[inline]
    pub(crate) fn code(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: &FieldElement) -> Result<()> {
        if v.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if i >= self.rows || j >= self.cols {
            return Err(Error::IndexOutOfRange {
                index: i.max(j),
                len: self.rows.max(self.cols),
            });
        }
        self.data[i * self.cols + j] = v.code();
        Ok(())
    }

    pub fn transpose(&self) -> FqMatrix {
        let mut t = FqMatrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.code(i, j);
            }
        }
        t.row_labels = self.col_labels.clone();
        t.col_labels = self.row_labels.clone();
        t
    }

    pub fn mul(&self, other: &FqMatrix) -> Result<FqMatrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = FqMatrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.code(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.mul_codes(a, other.code(k, j));
                    out.data[i * other.cols + j] = f.add_codes(out.data[i * other.cols + j], v);
                }
            }
        }
        Ok(out)
    }

    /// Columns in the given order; column labels follow.
    pub fn select_columns(&self, cols: &[usize]) -> FqMatrix {
        let mut out = FqMatrix::zeros(&self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.data[i * cols.len() + jj] = self.code(i, j);
            }
        }
        out.row_labels = self.row_labels.clone();
        out.col_labels = self
            .col_labels
            .as_ref()
            .map(|l| cols.iter().map(|&j| l[j].clone()).collect());
        out
    }

    /// Rows in the given order; row labels follow.
    pub fn select_rows(&self, rows: &[usize]) -> FqMatrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &i in rows {
            data.extend_from_slice(&self.data[i * self.cols..(i + 1) * self.cols]);
        }
        let mut out = FqMatrix::from_codes(&self.field, rows.len(), self.cols, data);
        out.col_labels = self.col_labels.clone();
        out.row_labels = self
            .row_labels
            .as_ref()
            .map(|l| rows.iter().map(|&i| l[i].clone()).collect());
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.code(i, j) == self.code(j, i)))
    }

    pub fn rank(&self) -> usize {
        let mut buf = self.data.clone();
        rank_in_place(&self.field, &mut buf, self.rows, self.cols)
    }

    /// The 0x0 determinant is 1.
    pub fn det(&self) -> Result<FieldElement> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut buf = self.data.clone();
        Ok(self
            .field
            .element(det_in_place(&self.field, &mut buf, self.rows)))
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (FqMatrix, Vec<usize>) {
        let f = &self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut m = self.clone();
        m.row_labels = None;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| m.data[i * cols + c] != 0) else {
                continue;
            };
            for j in 0..cols {
                m.data.swap(piv * cols + j, r * cols + j);
            }
            let inv = f.inv_code(m.data[r * cols + c]);
            for j in 0..cols {
                m.data[r * cols + j] = f.mul_codes(m.data[r * cols + j], inv);
            }
            for i in 0..rows {
                let lead = m.data[i * cols + c];
                if i == r || lead == 0 {
                    continue;
                }
                for j in 0..cols {
                    let v = f.mul_codes(lead, m.data[r * cols + j]);
                    m.data[i * cols + j] = f.sub_codes(m.data[i * cols + j], v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Keeps a maximal linearly independent set of rows, scanning top to
    /// bottom and keeping each row that is independent of those already kept.
    pub fn row_reduce_full_rank(&self) -> FqMatrix {
        let f = &self.field;
        let cols = self.cols;
        // Echelon basis of the kept rows: (pivot column, normalized row).
        let mut basis: Vec<(usize, Vec<u32>)> = Vec::new();
        let mut keep = Vec::new();
        for i in 0..self.rows {
            let mut v = self.data[i * cols..(i + 1) * cols].to_vec();
            for (pc, b) in &basis {
                let lead = v[*pc];
                if lead != 0 {
                    for j in 0..cols {
                        v[j] = f.sub_codes(v[j], f.mul_codes(lead, b[j]));
                    }
                }
            }
            if let Some(pc) = v.iter().position(|&x| x != 0) {
                let inv = f.inv_code(v[pc]);
                for x in v.iter_mut() {
                    *x = f.mul_codes(*x, inv);
                }
                // Keep the basis fully reduced at existing pivots.
                for (_, b) in basis.iter_mut() {
                    let lead = b[pc];
                    if lead != 0 {
                        for j in 0..cols {
                            b[j] = f.sub_codes(b[j], f.mul_codes(lead, v[j]));
                        }
                    }
                }
                basis.push((pc, v));
                keep.push(i);
            }
        }
        self.select_rows(&keep)
    }

    /// Submatrix on rows and columns `keep`, order preserved.
    pub fn principal_submatrix(&self, keep: &[usize]) -> Result<FqMatrix> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if let Some(&bad) = keep.iter().find(|&&k| k >= self.rows) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                len: self.rows,
            });
        }
        let n = keep.len();
        let mut data = Vec::with_capacity(n * n);
        for &i in keep {
            for &j in keep {
                data.push(self.code(i, j));
            }
        }
        let mut out = FqMatrix::from_codes(&self.field, n, n, data);
        out.row_labels = self
            .row_labels
            .as_ref()
            .map(|l| keep.iter().map(|&i| l[i].clone()).collect());
        out.col_labels = self
            .col_labels
            .as_ref()
            .map(|l| keep.iter().map(|&i| l[i].clone()).collect());
        Ok(out)
    }

    fn principal_det_code(&self, keep: &[usize], scratch: &mut Vec<u32>) -> u32 {
        scratch.clear();
        for &i in keep {
            for &j in keep {
                scratch.push(self.code(i, j));
            }
        }
        det_in_place(&self.field, scratch, keep.len())
    }

    /// Lexicographically smallest index set of size `rank(self)` with a
    /// nonzero principal minor, together with that minor. Rank zero yields
    /// `(∅, 1)`.
    pub fn max_nonsingular_principal(&self) -> Result<(Vec<usize>, FieldElement)> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let (keep, minor) = self.first_nonsingular_principal(self.rank());
        Ok((keep, self.field.element(minor)))
    }

    pub(crate) fn first_nonsingular_principal(&self, order: usize) -> (Vec<usize>, u32) {
        let n = self.rows;
        let mut idx: Vec<usize> = (0..order).collect();
        let mut scratch = Vec::with_capacity(order * order);
        loop {
            let d = self.principal_det_code(&idx, &mut scratch);
            if d != 0 {
                return (idx, d);
            }
            if !next_combination(&mut idx, n) {
                // Symmetric matrices over fields of odd characteristic always
                // have a nonzero principal minor of order equal to the rank.
                unreachable!("no nonsingular principal submatrix of order {order}");
            }
        }
    }

    /// Every index set of size `order` with a nonzero principal minor, in
    /// lexicographic order.
    pub fn nonsingular_principal_sets(&self, order: usize) -> Result<Vec<(Vec<usize>, FieldElement)>> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if order > self.rows {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..order).collect();
        let mut scratch = Vec::new();
        loop {
            let d = self.principal_det_code(&idx, &mut scratch);
            if d != 0 {
                out.push((idx.clone(), self.field.element(d)));
            }
            if !next_combination(&mut idx, self.rows) {
                break;
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {:?}", self.rows, self.cols, self.field)?;
        write!(f, "{self}")
    }
}

impl fmt::Display for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn u24(f: &Field) -> FqMatrix {
        FqMatrix::from_ints(f, &[vec![1, 0, 1, 1], vec![0, 1, 1, -1]]).unwrap()
    }

    #[test]
    fn rank_examples() {
        let f = gf(5);
        assert_eq!(FqMatrix::identity(&f, 2).rank(), 2);
        assert_eq!(u24(&f).rank(), 2);
        assert_eq!(FqMatrix::zeros(&f, 3, 4).rank(), 0);
        assert_eq!(FqMatrix::zeros(&f, 0, 0).rank(), 0);
    }

    #[test]
    fn det_examples() {
        let f = gf(5);
        let m = u24(&f).select_columns(&[2, 3]);
        assert_eq!(m.det().unwrap(), f.from_int(-2));
        assert_eq!(FqMatrix::zeros(&f, 0, 0).det().unwrap(), f.one());
        assert_eq!(FqMatrix::identity(&f, 3).det().unwrap(), f.one());
        assert!(matches!(u24(&f).det(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn full_rank_reduction() {
        let f = gf(3);
        let m = FqMatrix::from_ints(&f, &[vec![1, 2, 0], vec![1, 2, 0], vec![0, 1, 1]]).unwrap();
        let r = m.row_reduce_full_rank();
        assert_eq!(r, m.select_rows(&[0, 2]));
        let id = FqMatrix::identity(&f, 3);
        assert_eq!(id.row_reduce_full_rank(), id);
        // triangle incidence matrix: rows sum to zero
        let tri = FqMatrix::from_ints(&f, &[vec![-1, 0, 1], vec![1, -1, 0], vec![0, 1, -1]])
            .unwrap()
            .with_row_labels(vec!["a".into(), "b".into(), "c".into()])
            .unwrap();
        let r = tri.row_reduce_full_rank();
        assert_eq!(r.rows(), 2);
        assert_eq!(r.row_labels().unwrap(), &["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn principal_submatrix_examples() {
        let f = gf(5);
        let d = FqMatrix::from_ints(&f, &[vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 3]]).unwrap();
        assert_eq!(d.principal_submatrix(&[0, 1, 2]).unwrap(), d);
        assert_eq!(d.principal_submatrix(&[]).unwrap().rows(), 0);
        let expect = FqMatrix::from_ints(&f, &[vec![1, 0], vec![0, 3]]).unwrap();
        assert_eq!(d.principal_submatrix(&[0, 2]).unwrap(), expect);
        assert!(matches!(
            d.principal_submatrix(&[3]),
            Err(Error::IndexOutOfRange { index: 3, len: 3 })
        ));
    }

    #[test]
    fn max_nonsingular_principal_examples() {
        let f = gf(3);
        let (k, m) = FqMatrix::zeros(&f, 2, 2).max_nonsingular_principal().unwrap();
        assert!(k.is_empty());
        assert_eq!(m, f.one());
        let d = FqMatrix::from_ints(&f, &[vec![0, 0], vec![0, 1]]).unwrap();
        assert_eq!(d.max_nonsingular_principal().unwrap(), (vec![1], f.one()));
        let asym = FqMatrix::from_ints(&f, &[vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(asym.max_nonsingular_principal(), Err(Error::NotSymmetric));
        // [[0,1],[1,0]] has rank 2 and no nonzero 1x1 principal minor
        let h = FqMatrix::from_ints(&f, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(h.max_nonsingular_principal().unwrap(), (vec![0, 1], f.from_int(-1)));
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut idx = vec![0, 1];
        let mut all = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            all.push(idx.clone());
        }
        assert_eq!(
            all,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        let mut empty: Vec<usize> = vec![];
        assert!(!next_combination(&mut empty, 3));
    }
}
