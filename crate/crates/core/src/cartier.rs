//! The Cartier operator on the differential basis: matrix construction,
//! a-numbers, filtration kernels, and the ranks of the level-dropping
//! maps `Φ_J`.
//!
//! Writing `C(ω_v) = Σ_u A[u,v]^{1/p} ω_u`, the crate stores the
//! pre-root coefficient matrix `A`. Additivity of the p-th root gives
//! `C(Σ_v c_v ω_v) = Σ_u (Σ_v A[u,v] c_v)^{1/p} ω_u`, and since the
//! p-th root is a bijection of the field, `dim ker C = dim ker A`.
//! Kernel dimensions are therefore computed on `A` directly and no
//! entry ever takes a p-th root.
//!
//! The entry of `A` at row `(i,ℓ)`, column `(i′,j)` is
//! `binom(j−1, ℓ−1) (−1)^{j−ℓ} b_{j−ℓ, pi−i′}`, where `b_{λ,n}` is the
//! coefficient of `x^n` in `f^λ`; it is zero when `ℓ > j` or
//! `pi − i′ < 0`.

use std::sync::Arc;

use crate::bounds::{self, IndexSets};
use crate::curve::{BasisLayout, CurveParams};
use crate::error::Error;
use crate::field::{Fq, FqElem};
use crate::matrix::FqMatrix;

/// Dense coefficient lists of `f^0, f^1, .., f^Λ`.
///
/// `f^λ` has exact length `λd + 1` (its leading coefficient `a_d^λ` is
/// nonzero), so a lookup `b_{λ,n}` with `n > λd` falls off the end and
/// is zero.
#[derive(Clone, Debug)]
pub struct PolyPowerTable {
    field: Arc<Fq>,
    d: u64,
    powers: Vec<Vec<FqElem>>,
}

impl PolyPowerTable {
    /// Powers `f^0 .. f^{p−1}`, by iterated dense multiplication.
    pub fn new(curve: &CurveParams) -> Self {
        Self::with_max(curve, curve.p() - 1)
    }

    /// Powers `f^0 .. f^{max_lambda}` only.
    pub fn with_max(curve: &CurveParams, max_lambda: u64) -> Self {
        let field = curve.field().clone();
        let mut powers: Vec<Vec<FqElem>> = Vec::with_capacity(max_lambda as usize + 1);
        powers.push(vec![field.one()]);
        for _ in 1..=max_lambda {
            let prev = powers.last().unwrap();
            powers.push(poly_mul_fq(&field, prev, curve.coeffs()));
        }
        PolyPowerTable {
            field,
            d: curve.d(),
            powers,
        }
    }

    pub fn field(&self) -> &Arc<Fq> {
        &self.field
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn max_lambda(&self) -> u64 {
        (self.powers.len() - 1) as u64
    }

    /// `b_{λ,n}`: the coefficient of `x^n` in `f^λ`, zero outside
    /// `0 ≤ n ≤ λd`.
    pub fn coeff(&self, lambda: u64, n: i128) -> FqElem {
        if n < 0 {
            return self.field.zero();
        }
        let row = &self.powers[lambda as usize];
        match row.get(n as usize) {
            Some(c) => c.clone(),
            None => self.field.zero(),
        }
    }
}

fn poly_mul_fq(field: &Fq, a: &[FqElem], b: &[FqElem]) -> Vec<FqElem> {
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = field.mul(x, y);
            out[i + j] = field.add(&out[i + j], &t);
        }
    }
    out
}

/// Pascal's triangle mod `p`, rows `0..p−1`. All entries with
/// `n ≤ p − 2` are nonzero mod `p`.
fn binom_table(p: u64) -> Vec<Vec<u64>> {
    let n_rows = (p - 1) as usize;
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n_rows);
    for n in 0..n_rows {
        let mut row = vec![1u64; n + 1];
        for k in 1..n {
            row[k] = (rows[n - 1][k - 1] + rows[n - 1][k]) % p;
        }
        rows.push(row);
    }
    rows
}

/// The pre-root Cartier matrix on the fixed basis order.
#[derive(Clone, Debug)]
pub struct CartierMatrix {
    field: Arc<Fq>,
    layout: BasisLayout,
    matrix: FqMatrix,
}

impl CartierMatrix {
    pub fn new(curve: &CurveParams) -> Self {
        let field = curve.field().clone();
        let p = curve.p();
        let layout = BasisLayout::new(p, curve.d()).expect("curve parameters are valid");
        let table = PolyPowerTable::with_max(curve, p - 2);
        let binom = binom_table(p);
        let indices = layout.indices();
        let g = layout.len();
        let matrix = FqMatrix::from_fn(g, g, |u, v| {
            let row = indices[u]; // (i, ℓ)
            let col = indices[v]; // (i′, j)
            let (i, l) = (row.i, row.j);
            let (ip, j) = (col.i, col.j);
            if l > j {
                return field.zero();
            }
            let lambda = j - l;
            let n = (p * i) as i128 - ip as i128;
            let b = table.coeff(lambda, n);
            if field.is_zero(&b) {
                return b;
            }
            let mut c = binom[(j - 1) as usize][(l - 1) as usize];
            if (j - l) % 2 == 1 {
                c = (p - c) % p;
            }
            field.scale(&b, c)
        });
        CartierMatrix {
            field,
            layout,
            matrix,
        }
    }

    pub fn field(&self) -> &Arc<Fq> {
        &self.field
    }

    pub fn layout(&self) -> &BasisLayout {
        &self.layout
    }

    pub fn matrix(&self) -> &FqMatrix {
        &self.matrix
    }

    /// `dim ker C = g − rank(A)`.
    pub fn a_number(&self) -> u64 {
        (self.layout.len() - self.matrix.rank(&self.field)) as u64
    }

    /// Kernel dimension of `C` restricted to the span of levels
    /// `j ≤ J`, for every `J` in `1..=p−1`. Columns are ordered by
    /// level, so the restriction is a column prefix of `A` and one
    /// elimination pass covers all `J` at once.
    pub fn filtration_kernels(&self) -> Vec<u64> {
        let p = self.layout.p();
        let prefix_ranks = self.matrix.prefix_ranks(&self.field);
        (1..p)
            .map(|j| {
                let dim = self.layout.dim_up_to_level(j);
                if dim == 0 {
                    0
                } else {
                    (dim - prefix_ranks[dim - 1]) as u64
                }
            })
            .collect()
    }
}

/// Builds the pre-root Cartier matrix for a curve.
pub fn cartier_matrix(curve: &CurveParams) -> CartierMatrix {
    CartierMatrix::new(curve)
}

/// The a-number of the curve: the kernel dimension of the Cartier
/// operator on the space of regular differentials.
pub fn a_number(curve: &CurveParams) -> u64 {
    CartierMatrix::new(curve).a_number()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationRow {
    /// Level cutoff `J`.
    pub j: u64,
    /// `dim H^{≤J}`.
    pub dim: u64,
    /// Kernel dimension of `C` restricted to `H^{≤J}`.
    pub kernel: u64,
    /// `L_J(d)`, defined for `J ≤ (p+1)/2`.
    pub predicted: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationReport {
    pub rows: Vec<FiltrationRow>,
}

impl FiltrationReport {
    /// The row for `J = p−1`, i.e. the full a-number.
    pub fn a_number(&self) -> u64 {
        self.rows.last().map(|r| r.kernel).unwrap_or(0)
    }
}

/// Kernel dimensions of `C` on every filtration piece, with the
/// closed-form prediction where it is defined.
pub fn filtration_report(curve: &CurveParams) -> FiltrationReport {
    let cm = CartierMatrix::new(curve);
    let p = curve.p();
    let d = curve.d();
    let kernels = cm.filtration_kernels();
    let rows = (1..p)
        .map(|j| {
            let predicted = if j <= (p + 1) / 2 {
                Some(bounds::l_j_bound(p, d, j).expect("parameters are valid"))
            } else {
                None
            };
            FiltrationRow {
                j,
                dim: cm.layout().dim_up_to_level(j) as u64,
                kernel: kernels[(j - 1) as usize],
                predicted,
            }
        })
        .collect();
    FiltrationReport { rows }
}

/// The specialized level-dropping matrix `(b_{λ, pi−i′})` with rows
/// `R_J` and columns `C_J`. Binomial factors, signs and p-th roots are
/// stripped; row scalings and the Frobenius do not change the rank.
pub fn phi_matrix(table: &PolyPowerTable, sets: &IndexSets) -> FqMatrix {
    let p = sets.p;
    FqMatrix::from_fn(sets.rows.len(), sets.cols.len(), |r, c| {
        let row = sets.rows[r];
        let n = (p * row.i) as i128 - sets.cols[c] as i128;
        table.coeff(row.lambda, n)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PhiRank {
    pub rows: u64,
    pub cols: u64,
    pub rank: u64,
}

/// Dimensions and exact rank of the specialized `Φ_J` matrix.
pub fn phi_matrix_rank(curve: &CurveParams, j: u64) -> Result<PhiRank, Error> {
    let sets = bounds::index_sets(curve.p(), curve.d(), j)?;
    let max_lambda = j - 1;
    let table = PolyPowerTable::with_max(curve, max_lambda);
    let matrix = phi_matrix(&table, &sets);
    let rank = matrix.rank(curve.field());
    Ok(PhiRank {
        rows: sets.rows.len() as u64,
        cols: sets.cols.len() as u64,
        rank: rank as u64,
    })
}
