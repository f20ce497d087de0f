//! Closed-form kernel bounds and the combinatorial index sets behind
//! them.
//!
//! Everything here is integer arithmetic. Interval membership at
//! rational endpoints is decided by exact cross-multiplication
//! (`p^2 * i` against `numerator * d`); the endpoints are never
//! integers because `p ∤ d`, so strict inequalities are unambiguous.

use crate::curve::{row_count, validate_pd};
use crate::error::Error;

/// Row index `(i, λ)` of the level-dropping matrix `M_J`: the target
/// differential is `ω_{i, J−λ}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RowIndex {
    pub i: u64,
    pub lambda: u64,
}

/// The ordered column set `C_J` and row set `R_J` of `M_J`.
///
/// `C_J = { i' : 0 < i' < (p−J)d/p, p ∤ i' }`, ordered by size of `i'`.
/// `R_J = { (i,λ) : 0 < λ < J, (pλ−J+1)d/p² < i < (p(λ+1)−J)d/p² }`,
/// ordered by size of `i`; the `λ`-intervals do not overlap, so `λ` is
/// determined by `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSets {
    pub p: u64,
    pub d: u64,
    pub j: u64,
    pub cols: Vec<u64>,
    pub rows: Vec<RowIndex>,
}

fn validate_j_full(p: u64, j: u64) -> Result<(), Error> {
    if j <= 1 || j >= p {
        return Err(Error::JOutOfRange {
            j,
            lo: 2,
            hi: p - 1,
        });
    }
    Ok(())
}

/// The generic a-number bound
/// `L(d) = Σ_{ℓ=1}^{(p−1)/2} ⌊(p−ℓ)d/p⌋ − ⌊(p²+1−2ℓp)d/(2p²)⌋`.
pub fn l_bound(p: u64, d: u64) -> Result<u64, Error> {
    validate_pd(p, d)?;
    let (p, d) = (p as u128, d as u128);
    let mut total = 0u128;
    for l in 1..=(p - 1) / 2 {
        let first = (p - l) * d / p;
        let second = (p * p + 1 - 2 * l * p) * d / (2 * p * p);
        total += first - second;
    }
    Ok(total as u64)
}

/// The filtration kernel bound for `1 ≤ J ≤ (p+1)/2`:
/// `L_J(d) = Σ_{ℓ=1}^{J} ⌊(p−ℓ)d/p⌋ − ⌊(p(J+1−ℓ)−J)d/p²⌋`.
pub fn l_j_bound(p: u64, d: u64, j: u64) -> Result<u64, Error> {
    validate_pd(p, d)?;
    if j < 1 || j > (p + 1) / 2 {
        return Err(Error::JOutOfRange {
            j,
            lo: 1,
            hi: (p + 1) / 2,
        });
    }
    let (p, d, j) = (p as u128, d as u128, j as u128);
    let mut total = 0u128;
    for l in 1..=j {
        let first = (p - l) * d / p;
        let second = (p * (j + 1 - l) - j) * d / (p * p);
        total += first - second;
    }
    Ok(total as u64)
}

/// `dim H(ℓ,e) = ⌊(p(e+1−ℓ)−e)d/p²⌋` for `0 < ℓ ≤ e < p`, and `0` for
/// `e < ℓ`.
pub fn subspace_dim(p: u64, d: u64, l: u64, e: u64) -> u64 {
    debug_assert!(l >= 1 && l < p && e < p);
    if e < l {
        return 0;
    }
    let (p, d, l, e) = (p as u128, d as u128, l as u128, e as u128);
    ((p * (e + 1 - l) - e) * d / (p * p)) as u64
}

/// Table of `dim H(ℓ,e)` over `0 < ℓ < p`, `0 < e < p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceDims {
    pub p: u64,
    pub d: u64,
    dims: Vec<Vec<u64>>,
}

impl SubspaceDims {
    pub fn new(p: u64, d: u64) -> Result<Self, Error> {
        validate_pd(p, d)?;
        let dims = (1..p)
            .map(|l| (1..p).map(|e| subspace_dim(p, d, l, e)).collect())
            .collect();
        Ok(SubspaceDims { p, d, dims })
    }

    /// `dim H(ℓ,e)`; `l` and `e` in `1..p`.
    pub fn get(&self, l: u64, e: u64) -> u64 {
        self.dims[(l - 1) as usize][(e - 1) as usize]
    }
}

fn col_in_set(p: u64, d: u64, j: u64, col: u64) -> bool {
    col >= 1 && col % p != 0 && (p as u128) * (col as u128) < ((p - j) * d) as u128
}

fn row_in_set(p: u64, d: u64, j: u64, row: RowIndex) -> bool {
    let RowIndex { i, lambda } = row;
    if lambda < 1 || lambda >= j || i < 1 {
        return false;
    }
    let pp = (p as u128) * (p as u128);
    let lhs = pp * i as u128;
    let lower = ((p * lambda - j + 1) as u128) * d as u128;
    let upper = ((p * (lambda + 1) - j) as u128) * d as u128;
    lhs > lower && lhs < upper
}

/// The ordered sets `C_J` and `R_J` for `1 < J < p`.
pub fn index_sets(p: u64, d: u64, j: u64) -> Result<IndexSets, Error> {
    validate_pd(p, d)?;
    validate_j_full(p, j)?;
    let max_col = row_count(p, d, j); // ⌊(p−J)d/p⌋
    let cols: Vec<u64> = (1..=max_col).filter(|&c| c % p != 0).collect();
    let mut rows = Vec::new();
    for lambda in 1..j {
        let lower = ((p * lambda - j + 1) as u128) * d as u128;
        let upper = ((p * (lambda + 1) - j) as u128) * d as u128;
        let pp = (p as u128) * (p as u128);
        let i_lo = (lower / pp + 1) as u64;
        let i_hi = (upper / pp) as u64; // upper/p² is never an integer
        for i in i_lo..=i_hi {
            rows.push(RowIndex { i, lambda });
        }
    }
    debug_assert!(rows.windows(2).all(|w| w[0].i < w[1].i));
    Ok(IndexSets {
        p,
        d,
        j,
        cols,
        rows,
    })
}

/// The injection `R_J -> C_J` for `1 < J ≤ (p+1)/2`: `i' = ±(pi − λd)`,
/// sign chosen so the result is positive.
pub fn inject_row_into_col(p: u64, d: u64, j: u64, row: RowIndex) -> Result<u64, Error> {
    validate_pd(p, d)?;
    if j <= 1 || j > (p + 1) / 2 {
        return Err(Error::JOutOfRange {
            j,
            lo: 2,
            hi: (p + 1) / 2,
        });
    }
    if !row_in_set(p, d, j, row) {
        return Err(Error::NotInRowSet {
            i: row.i,
            lambda: row.lambda,
        });
    }
    let diff = (p * row.i) as i128 - (row.lambda * d) as i128;
    debug_assert_ne!(diff, 0);
    let col = diff.unsigned_abs() as u64;
    debug_assert!(col_in_set(p, d, j, col));
    Ok(col)
}

/// The injection `C_J -> R_J` for `(p+1)/2 ≤ J < p`: with `ι` the unique
/// integer in `(0,d)` satisfying `pι ≡ i' (mod d)` and `ρ = (pι − i')/d`,
/// the image is `(ι, ρ)` if `ρ < J` and `(d−ι, p−ρ)` otherwise.
pub fn inject_col_into_row(p: u64, d: u64, j: u64, col: u64) -> Result<RowIndex, Error> {
    validate_pd(p, d)?;
    if j < (p + 1) / 2 || j >= p {
        return Err(Error::JOutOfRange {
            j,
            lo: (p + 1) / 2,
            hi: p - 1,
        });
    }
    if !col_in_set(p, d, j, col) {
        return Err(Error::NotInColSet(col));
    }
    // ι = i' * p^{-1} mod d, in (0, d)
    let p_inv = inv_mod(p % d, d);
    let iota = (col as u128 * p_inv as u128 % d as u128) as u64;
    debug_assert!(iota > 0);
    let rho = ((p * iota) as i128 - col as i128) / d as i128;
    debug_assert!(rho > 0 && (rho as u64) < p);
    let rho = rho as u64;
    let row = if rho < j {
        RowIndex {
            i: iota,
            lambda: rho,
        }
    } else {
        RowIndex {
            i: d - iota,
            lambda: p - rho,
        }
    };
    debug_assert!(row_in_set(p, d, j, row));
    Ok(row)
}

fn inv_mod(a: u64, n: u64) -> u64 {
    // gcd(a, n) = 1
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(n as i128) as u64
}
