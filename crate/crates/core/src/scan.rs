//! Seeded random sampling of coefficient tuples and the aggregation of
//! observed a-numbers.
//!
//! Each trial draws its randomness from a stream determined by
//! `(seed, d, trial)` alone, so results are identical whether trials
//! run sequentially or in parallel, and independent of thread count.
//! With the `parallel` feature (default) trials are distributed with
//! rayon; without it [`run_trials`] falls back to the sequential path.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::l_bound;
use crate::cartier::a_number;
use crate::curve::CurveParams;
use crate::error::Error;
use crate::field::Fq;

/// RNG for one trial; depends only on `(seed, d, trial)`, which is what
/// makes scans reproducible across thread counts.
pub fn trial_rng(seed: u64, d: u64, trial: u32) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((d << 32) | trial as u64);
    rng
}

/// One sampled curve and its a-number.
#[derive(Clone, Debug)]
pub struct TrialResult {
    pub trial: u32,
    pub a_number: u64,
    pub curve: CurveParams,
}

fn run_one(field: &Arc<Fq>, d: u64, seed: u64, trial: u32) -> Result<TrialResult, Error> {
    let mut rng = trial_rng(seed, d, trial);
    let curve = CurveParams::random(field, d, &mut rng)?;
    let a = a_number(&curve);
    Ok(TrialResult {
        trial,
        a_number: a,
        curve,
    })
}

/// Sequential sampling of `trials` random curves of degree `d`.
pub fn run_trials_serial(
    field: &Arc<Fq>,
    d: u64,
    trials: u32,
    seed: u64,
) -> Result<Vec<TrialResult>, Error> {
    (0..trials).map(|t| run_one(field, d, seed, t)).collect()
}

/// Parallel sampling; identical output to [`run_trials_serial`].
#[cfg(feature = "parallel")]
pub fn run_trials_parallel(
    field: &Arc<Fq>,
    d: u64,
    trials: u32,
    seed: u64,
) -> Result<Vec<TrialResult>, Error> {
    (0..trials)
        .into_par_iter()
        .map(|t| run_one(field, d, seed, t))
        .collect()
}

/// Samples `trials` random curves, in parallel when the `parallel`
/// feature is enabled.
pub fn run_trials(
    field: &Arc<Fq>,
    d: u64,
    trials: u32,
    seed: u64,
) -> Result<Vec<TrialResult>, Error> {
    #[cfg(feature = "parallel")]
    {
        run_trials_parallel(field, d, trials, seed)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_trials_serial(field, d, trials, seed)
    }
}

/// Aggregated scan result for one `(p, d)` pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub p: u64,
    pub d: u64,
    pub m: usize,
    pub seed: u64,
    pub trials: u32,
    /// The generic a-number `L(d)`.
    pub l: u64,
    /// Observed a-numbers, by trial index.
    pub a_numbers: Vec<u64>,
    /// Number of trials attaining `L(d)`.
    pub witness_count: u64,
    /// Coefficients `a_0..a_d` of the first witness, as coefficient
    /// vectors over `F_p`.
    pub first_witness: Option<Vec<Vec<u64>>>,
}

impl ScanRecord {
    pub fn from_trials(
        field: &Arc<Fq>,
        d: u64,
        seed: u64,
        results: &[TrialResult],
    ) -> Result<Self, Error> {
        let l = l_bound(field.p(), d)?;
        let a_numbers: Vec<u64> = results.iter().map(|r| r.a_number).collect();
        let witness_count = a_numbers.iter().filter(|&&a| a == l).count() as u64;
        let first_witness = results.iter().find(|r| r.a_number == l).map(|r| {
            r.curve
                .coeffs()
                .iter()
                .map(|c| c.coeff_vec().to_vec())
                .collect()
        });
        Ok(ScanRecord {
            p: field.p(),
            d,
            m: field.m(),
            seed,
            trials: results.len() as u32,
            l,
            a_numbers,
            witness_count,
            first_witness,
        })
    }

    pub fn min_observed(&self) -> Option<u64> {
        self.a_numbers.iter().copied().min()
    }
}

/// Runs a scan for a single `(p, d)` pair and aggregates it.
pub fn scan_pair(field: &Arc<Fq>, d: u64, trials: u32, seed: u64) -> Result<ScanRecord, Error> {
    let results = run_trials(field, d, trials, seed)?;
    ScanRecord::from_trials(field, d, seed, &results)
}
