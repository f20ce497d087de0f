//! Dense matrices over `F_q` with exact rank, kernel and determinant
//! computations by Gaussian elimination. Pivoting picks the first
//! nonzero entry; in exact arithmetic there is nothing to balance.

use crate::field::{Fq, FqElem};

/// Row-major dense matrix over a fixed field context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<FqElem>,
}

impl FqMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> FqElem) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        FqMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(field: &Fq, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| field.zero())
    }

    pub fn identity(field: &Fq, n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { field.one() } else { field.zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FqElem {
        &self.entries[r * self.cols + c]
    }

    pub fn transpose(&self) -> FqMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Keeps the leading `n` columns.
    pub fn column_prefix(&self, n: usize) -> FqMatrix {
        assert!(n <= self.cols);
        Self::from_fn(self.rows, n, |r, c| self.get(r, c).clone())
    }

    /// For each `k` in `1..=cols`, the rank of the submatrix formed by the
    /// first `k` columns (entry `k-1` of the result). A single elimination
    /// pass suffices: row operations preserve the rank of every column
    /// prefix, and the rank of a prefix is the number of pivots found in it.
    pub fn prefix_ranks(&self, field: &Fq) -> Vec<usize> {
        let mut a = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut out = Vec::with_capacity(cols);
        let mut pivots = 0usize;
        for c in 0..cols {
            if let Some(r) = (pivots..rows).find(|&r| !field.is_zero(&a[r * cols + c])) {
                if r != pivots {
                    for cc in 0..cols {
                        a.swap(r * cols + cc, pivots * cols + cc);
                    }
                }
                let inv = field.inv(&a[pivots * cols + c]).expect("pivot is nonzero");
                for rr in pivots + 1..rows {
                    let lead = &a[rr * cols + c];
                    if field.is_zero(lead) {
                        continue;
                    }
                    let factor = field.mul(lead, &inv);
                    for cc in c..cols {
                        let t = field.mul(&factor, &a[pivots * cols + cc]);
                        a[rr * cols + cc] = field.sub(&a[rr * cols + cc], &t);
                    }
                }
                pivots += 1;
            }
            out.push(pivots);
        }
        out
    }

    pub fn rank(&self, field: &Fq) -> usize {
        self.prefix_ranks(field).last().copied().unwrap_or(0)
    }

    /// `(rank, kernel_dim)` with `kernel_dim = cols - rank`.
    pub fn rank_and_kernel(&self, field: &Fq) -> (usize, usize) {
        let rank = self.rank(field);
        (rank, self.cols - rank)
    }

    /// Exact determinant of a square matrix.
    pub fn determinant(&self, field: &Fq) -> FqElem {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return field.one();
        }
        let mut a = self.entries.clone();
        let mut det = field.one();
        for c in 0..n {
            let Some(r) = (c..n).find(|&r| !field.is_zero(&a[r * n + c])) else {
                return field.zero();
            };
            if r != c {
                for cc in 0..n {
                    a.swap(r * n + cc, c * n + cc);
                }
                det = field.neg(&det);
            }
            let pivot = a[c * n + c].clone();
            det = field.mul(&det, &pivot);
            let inv = field.inv(&pivot).expect("pivot is nonzero");
            for rr in c + 1..n {
                let lead = &a[rr * n + c];
                if field.is_zero(lead) {
                    continue;
                }
                let factor = field.mul(lead, &inv);
                for cc in c..n {
                    let t = field.mul(&factor, &a[c * n + cc]);
                    a[rr * n + cc] = field.sub(&a[rr * n + cc], &t);
                }
            }
        }
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn f5() -> Fq {
        Fq::new(5, 1, 0).unwrap()
    }

    #[test]
    fn identity_has_full_rank() {
        let f = f5();
        let m = FqMatrix::identity(&f, 3);
        assert_eq!(m.rank_and_kernel(&f), (3, 0));
    }

    #[test]
    fn zero_matrix_has_full_kernel() {
        let f = f5();
        let m = FqMatrix::zero(&f, 2, 4);
        assert_eq!(m.rank_and_kernel(&f), (0, 4));
    }

    #[test]
    fn dependent_rows_over_f5() {
        let f = f5();
        let data = [[1u64, 2], [2, 4]];
        let m = FqMatrix::from_fn(2, 2, |r, c| f.from_int(data[r][c]));
        assert_eq!(m.rank_and_kernel(&f), (1, 1));
    }

    #[test]
    fn empty_matrices() {
        let f = f5();
        let m = FqMatrix::zero(&f, 0, 0);
        assert_eq!(m.rank_and_kernel(&f), (0, 0));
        assert_eq!(m.determinant(&f), f.one());
        let m = FqMatrix::zero(&f, 0, 3);
        assert_eq!(m.rank_and_kernel(&f), (0, 3));
    }

    #[test]
    fn rank_equals_rank_of_transpose() {
        for (p, m) in [(5u64, 1usize), (3, 2), (7, 2)] {
            let f = Fq::new(p, m, 0).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
            for _ in 0..10 {
                let mat = FqMatrix::from_fn(6, 4, |_, _| f.random(&mut rng));
                assert_eq!(mat.rank(&f), mat.transpose().rank(&f));
                let (rank, kernel) = mat.rank_and_kernel(&f);
                assert_eq!(rank + kernel, mat.cols());
            }
        }
    }

    #[test]
    fn prefix_ranks_match_submatrix_ranks() {
        let f = Fq::new(3, 2, 0).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(10);
        let mat = FqMatrix::from_fn(5, 7, |_, _| f.random(&mut rng));
        let prefix = mat.prefix_ranks(&f);
        for k in 1..=7 {
            assert_eq!(prefix[k - 1], mat.column_prefix(k).rank(&f));
        }
    }

    #[test]
    fn determinant_2x2() {
        let f = f5();
        // det [[1,2],[3,4]] = 4 - 6 = -2 = 3 mod 5
        let data = [[1u64, 2], [3, 4]];
        let m = FqMatrix::from_fn(2, 2, |r, c| f.from_int(data[r][c]));
        assert_eq!(m.determinant(&f), f.from_int(3));
        // singular
        let data = [[1u64, 2], [2, 4]];
        let m = FqMatrix::from_fn(2, 2, |r, c| f.from_int(data[r][c]));
        assert_eq!(m.determinant(&f), f.zero());
    }

    /// Laplace expansion, independent of the elimination path.
    fn det_laplace(f: &Fq, m: &FqMatrix, rows: &[usize], cols: &[usize]) -> FqElem {
        if rows.is_empty() {
            return f.one();
        }
        let mut acc = f.zero();
        let rest: Vec<usize> = rows[1..].to_vec();
        for (k, &c) in cols.iter().enumerate() {
            let e = m.get(rows[0], c);
            if f.is_zero(e) {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&cc| cc != c).collect();
            let minor = det_laplace(f, m, &rest, &sub_cols);
            let term = f.mul(e, &minor);
            if k % 2 == 0 {
                acc = f.add(&acc, &term);
            } else {
                acc = f.sub(&acc, &term);
            }
        }
        acc
    }

    #[test]
    fn determinant_matches_laplace_oracle() {
        for (p, m) in [(5u64, 1usize), (3, 2)] {
            let f = Fq::new(p, m, 0).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
            for n in 1..=5usize {
                for _ in 0..5 {
                    let mat = FqMatrix::from_fn(n, n, |_, _| f.random(&mut rng));
                    let idx: Vec<usize> = (0..n).collect();
                    assert_eq!(mat.determinant(&f), det_laplace(&f, &mat, &idx, &idx));
                }
            }
        }
    }
}
