//! Artin–Schreier curve parameters `y^p − y = f(x)` and the basis
//! `ω_{i,j} = y^{j−1} x^{i−1} dx` of regular differentials.
//!
//! The basis is kept in a fixed order (level `j` ascending, then `i`
//! ascending); every matrix in the crate indexes rows and columns by
//! this order.

use std::sync::Arc;

use rand::Rng;

use crate::error::Error;
use crate::field::{is_prime, Fq, FqElem, MAX_P};

/// Largest supported polynomial degree.
pub const MAX_D: u64 = 1 << 20;

/// Index pair of the differential `ω_{i,j} = y^{j−1} x^{i−1} dx`, valid
/// when `0 < j < p` and `0 < i < (p−j)d/p` (the bound is never an
/// integer since `p ∤ d`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DiffIndex {
    pub i: u64,
    pub j: u64,
}

pub(crate) fn validate_pd(p: u64, d: u64) -> Result<(), Error> {
    if p == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if p > MAX_P {
        return Err(Error::PrimeTooLarge(p));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if d == 0 {
        return Err(Error::BadDegree);
    }
    if d > MAX_D {
        return Err(Error::DegreeTooLarge(d));
    }
    if d % p == 0 {
        return Err(Error::DegreeDivisibleByP { p, d });
    }
    Ok(())
}

/// Genus `(p−1)(d−1)/2` of `y^p − y = f(x)` with `deg f = d` prime to `p`.
pub fn genus(p: u64, d: u64) -> Result<u64, Error> {
    validate_pd(p, d)?;
    Ok((p - 1) * (d - 1) / 2)
}

/// Number of valid `i` at level `j`: `⌊(p−j)d/p⌋`.
pub fn row_count(p: u64, d: u64, j: u64) -> u64 {
    debug_assert!(j >= 1 && j < p);
    (p - j) * d / p
}

fn index_is_valid(p: u64, d: u64, idx: DiffIndex) -> bool {
    idx.j >= 1 && idx.j < p && idx.i >= 1 && p * idx.i < (p - idx.j) * d
}

/// Order of vanishing of `ω_{i,j}` at the point over infinity:
/// `pd − ip − jd − 1`, nonnegative for every valid index.
pub fn ord_at_infinity(idx: DiffIndex, p: u64, d: u64) -> Result<u64, Error> {
    validate_pd(p, d)?;
    if !index_is_valid(p, d, idx) {
        return Err(Error::InvalidDiffIndex {
            p,
            d,
            i: idx.i,
            j: idx.j,
        });
    }
    let ord = (p * d) as i128 - (idx.i * p) as i128 - (idx.j * d) as i128 - 1;
    debug_assert!(ord >= 0);
    Ok(ord as u64)
}

/// The ordered differential basis for `(p, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisLayout {
    p: u64,
    d: u64,
    indices: Vec<DiffIndex>,
    row_counts: Vec<u64>,
    /// `prefix[j]` = number of basis indices with level `<= j`, for
    /// `j = 0..=p-1`.
    prefix: Vec<usize>,
}

impl BasisLayout {
    pub fn new(p: u64, d: u64) -> Result<Self, Error> {
        validate_pd(p, d)?;
        let mut indices = Vec::new();
        let mut row_counts = Vec::with_capacity((p - 1) as usize);
        let mut prefix = Vec::with_capacity(p as usize);
        prefix.push(0);
        for j in 1..p {
            let count = row_count(p, d, j);
            row_counts.push(count);
            for i in 1..=count {
                indices.push(DiffIndex { i, j });
            }
            prefix.push(indices.len());
        }
        debug_assert_eq!(indices.len() as u64, (p - 1) * (d - 1) / 2);
        Ok(BasisLayout {
            p,
            d,
            indices,
            row_counts,
            prefix,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn genus(&self) -> u64 {
        self.indices.len() as u64
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Basis indices sorted by `j` ascending, then `i` ascending.
    pub fn indices(&self) -> &[DiffIndex] {
        &self.indices
    }

    /// `row_counts()[j-1]` is the number of indices at level `j`.
    pub fn row_counts(&self) -> &[u64] {
        &self.row_counts
    }

    /// Number of basis indices with level `<= j` (dimension of the
    /// filtration piece spanned by levels `1..=j`).
    pub fn dim_up_to_level(&self, j: u64) -> usize {
        self.prefix[(j.min(self.p - 1)) as usize]
    }

    /// Position of a valid index in the fixed order.
    pub fn position(&self, idx: DiffIndex) -> Option<usize> {
        if !index_is_valid(self.p, self.d, idx) {
            return None;
        }
        Some(self.prefix[(idx.j - 1) as usize] + (idx.i - 1) as usize)
    }
}

/// Curve parameters: the field, the degree `d` prime to `p`, and the
/// coefficients `a_0..a_d` of `f` with `a_d ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveParams {
    field: Arc<Fq>,
    d: u64,
    coeffs: Vec<FqElem>,
}

impl CurveParams {
    pub fn new(field: Arc<Fq>, coeffs: Vec<FqElem>) -> Result<Self, Error> {
        if coeffs.len() < 2 {
            return Err(Error::CoeffCount {
                expected: 2,
                got: coeffs.len(),
            });
        }
        let d = (coeffs.len() - 1) as u64;
        validate_pd(field.p(), d)?;
        for c in &coeffs {
            if c.coeff_vec().len() != field.m() {
                return Err(Error::CoeffLen {
                    expected: field.m(),
                    got: c.coeff_vec().len(),
                });
            }
        }
        if field.is_zero(&coeffs[coeffs.len() - 1]) {
            return Err(Error::ZeroLeadingCoeff);
        }
        Ok(CurveParams { field, d, coeffs })
    }

    /// A uniformly random coefficient tuple with `a_d ≠ 0` (the leading
    /// coefficient is resampled until nonzero).
    pub fn random<R: Rng + ?Sized>(field: &Arc<Fq>, d: u64, rng: &mut R) -> Result<Self, Error> {
        validate_pd(field.p(), d)?;
        let mut coeffs: Vec<FqElem> = (0..d).map(|_| field.random(rng)).collect();
        coeffs.push(field.random_nonzero(rng));
        CurveParams::new(field.clone(), coeffs)
    }

    pub fn field(&self) -> &Arc<Fq> {
        &self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// Coefficients `a_0..a_d`.
    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn coeff(&self, t: u64) -> &FqElem {
        &self.coeffs[t as usize]
    }

    pub fn genus(&self) -> u64 {
        (self.p() - 1) * (self.d - 1) / 2
    }
}
