//! Shared oracles for the integration suites. Everything here is
//! deliberately independent of the implementation paths it checks:
//! symbolic polynomials are expanded from scratch, determinants go
//! through the permutation sum, and `b_{λ,n}` is recomputed from the
//! multinomial formula.

#![allow(dead_code)]

pub mod symbolic;

use std::sync::Arc;

use cartier_core::cartier::CartierMatrix;
use cartier_core::curve::CurveParams;
use cartier_core::field::{Fq, FqElem};

/// `b_{λ,n}` for `n = 0..λd` via the multinomial sum
/// `Σ λ!/(e_0!..e_d!) a_0^{e_0}..a_d^{e_d}` over exponent vectors with
/// `Σ e_t = λ` and `Σ t e_t = n`.
pub fn multinomial_b_oracle(curve: &CurveParams, lambda: u64) -> Vec<FqElem> {
    let field = curve.field().clone();
    let d = curve.d() as usize;
    let n_max = lambda as usize * d;
    let mut out = vec![field.zero(); n_max + 1];
    let mut exps = vec![0u64; d + 1];
    fn factorial(n: u64) -> u128 {
        (1..=n as u128).product()
    }
    fn rec(
        field: &Fq,
        curve: &CurveParams,
        exps: &mut Vec<u64>,
        var: usize,
        remaining: u64,
        lambda: u64,
        out: &mut Vec<FqElem>,
    ) {
        if var == exps.len() - 1 {
            exps[var] = remaining;
            let weight: u64 = exps.iter().enumerate().map(|(t, &e)| t as u64 * e).sum();
            let mut coeff = factorial(lambda);
            for &e in exps.iter() {
                coeff /= factorial(e);
            }
            let mut term = field.from_int((coeff % field.p() as u128) as u64);
            for (t, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = field.mul(&term, &field.pow(curve.coeff(t as u64), e as u128));
                }
            }
            out[weight as usize] = field.add(&out[weight as usize], &term);
            return;
        }
        for e in 0..=remaining {
            exps[var] = e;
            rec(field, curve, exps, var + 1, remaining - e, lambda, out);
        }
        exps[var] = 0;
    }
    rec(&field, curve, &mut exps, 0, lambda, lambda, &mut out);
    out
}

/// One scanned `(p, d)` pair of the acceptance grid.
pub struct PairScan {
    pub p: u64,
    pub d: u64,
    pub field: Arc<Fq>,
    pub genus: u64,
    pub l: u64,
    /// Observed a-number per trial (as `g − rank(A)`).
    pub a_numbers: Vec<u64>,
    /// Rank of the transposed Cartier matrix per trial; an independent
    /// route to the same rank.
    pub transpose_ranks: Vec<u64>,
    pub witness: Option<CurveParams>,
}

pub const GRID_PRIMES: [u64; 4] = [3, 5, 7, 11];
pub const GRID_D_MAX: u64 = 40;
pub const GRID_TRIALS: u32 = 40;
pub const GRID_SEED: u64 = 1;

/// Smallest `m` with `p^m >= bound`.
pub fn extension_degree_for(p: u64, bound: u128) -> usize {
    let mut m = 1;
    let mut q = p as u128;
    while q < bound {
        q *= p as u128;
        m += 1;
    }
    m
}

fn scan_one_pair(p: u64, d: u64) -> PairScan {
    let m = extension_degree_for(p, 256);
    let field = Arc::new(Fq::new(p, m, 0).unwrap());
    let genus = cartier_core::curve::genus(p, d).unwrap();
    let l = cartier_core::bounds::l_bound(p, d).unwrap();
    let mut a_numbers = Vec::with_capacity(GRID_TRIALS as usize);
    let mut transpose_ranks = Vec::with_capacity(GRID_TRIALS as usize);
    let mut witness = None;
    for trial in 0..GRID_TRIALS {
        let mut rng = cartier_core::scan::trial_rng(GRID_SEED, d, trial);
        let curve = CurveParams::random(&field, d, &mut rng).unwrap();
        let cm = CartierMatrix::new(&curve);
        let a = cm.a_number();
        let rank_t = cm.matrix().transpose().rank(&field) as u64;
        a_numbers.push(a);
        transpose_ranks.push(rank_t);
        if a == l && witness.is_none() {
            witness = Some(curve);
        }
    }
    PairScan {
        p,
        d,
        field,
        genus,
        l,
        a_numbers,
        transpose_ranks,
        witness,
    }
}

/// All `(p, d)` pairs of the grid: `p` in `{3,5,7,11}`, `2 ≤ d ≤ 40`,
/// `p ∤ d`.
pub fn grid_pairs() -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    for &p in &GRID_PRIMES {
        for d in 2..=GRID_D_MAX {
            if d % p != 0 {
                pairs.push((p, d));
            }
        }
    }
    pairs
}

/// The scanned grid, computed once per test binary.
pub fn witness_grid() -> &'static [PairScan] {
    use std::sync::LazyLock;
    static GRID: LazyLock<Vec<PairScan>> = LazyLock::new(|| {
        let pairs = grid_pairs();
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            pairs
                .par_iter()
                .map(|&(p, d)| scan_one_pair(p, d))
                .collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            pairs.iter().map(|&(p, d)| scan_one_pair(p, d)).collect()
        }
    });
    &GRID
}

/// Prints the per-criterion verdict line and panics on failure.
pub fn report_criterion(n: u32, name: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("acceptance {n} PASS: {name}");
    } else {
        println!("acceptance {n} FAIL: {name}");
        for f in failures {
            println!("  - {f}");
        }
        panic!(
            "acceptance criterion {n} failed ({} problems)",
            failures.len()
        );
    }
}
