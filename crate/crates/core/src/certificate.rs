//! Symbolic non-vanishing certificates for the maximal minors of the
//! level-dropping matrices.
//!
//! Treating the coefficients `a_0..a_d` as variables, the minor `N` of
//! `M_J` has entries `b_{λ, pi−i′}`, homogeneous of degree `λ` and
//! weight `pi−i′`. A greedy construction produces the unique bijection
//! `σ₀` whose permutation product has the strictly largest leading
//! monomial; that monomial cannot cancel in the permutation expansion,
//! so `det(N) ≠ 0` as a polynomial. The certificate consists of `σ₀`,
//! the step partition that produced it, and `LM(Pr(σ₀))`.
//!
//! The full symbolic determinant is never expanded here; a randomized
//! evaluation ([`randomized_det_check`]) serves as an independent
//! cross-check.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::bounds::{self, IndexSets, RowIndex};
use crate::cartier::PolyPowerTable;
use crate::curve::CurveParams;
use crate::error::Error;
use crate::field::Fq;
use crate::matrix::FqMatrix;
use crate::scan::trial_rng;

/// Monomial in the coefficient variables `a_0..a_d`, as an exponent
/// vector of length `d+1`.
///
/// The order compares exponents at the *largest* index where they
/// differ, so `a_d` beats any monomial in `a_0..a_{d-1}`. The order is
/// total, multiplicative, and has `1` as its minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    /// The constant monomial `1` in variables `a_0..a_d`.
    pub fn one(d: u64) -> Self {
        Monomial {
            exps: vec![0; d as usize + 1],
        }
    }

    /// The single variable `a_t`.
    pub fn var(d: u64, t: u64) -> Self {
        let mut m = Self::one(d);
        m.exps[t as usize] = 1;
        m
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// Monomial from `(variable, exponent)` pairs in `a_0..a_d`.
    pub fn from_pairs(d: u64, pairs: &[(u64, u32)]) -> Self {
        let mut m = Self::one(d);
        for &(t, e) in pairs {
            m.exps[t as usize] += e;
        }
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a + b)
            .collect();
        Monomial { exps }
    }

    /// Total degree `Σ e_t`.
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    /// Weight `Σ t·e_t` (the variable `a_t` has weight `t`).
    pub fn weight(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .map(|(t, &e)| t as u64 * e as u64)
            .sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.exps.len(), other.exps.len());
        for t in (0..self.exps.len()).rev() {
            match self.exps[t].cmp(&other.exps[t]) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (t, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "a_{t}")?;
            } else {
                write!(f, "a_{t}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// `φ(i, i′) = pi − i′ − (λ−1)d`, defined on the support
/// `(λ−1)d < pi − i′ ≤ λd`; its values lie in `1..=d` and are congruent
/// to `pi − i′` mod `d`.
pub fn phi_value(p: u64, d: u64, row: RowIndex, col: u64) -> Result<u64, Error> {
    if row.lambda < 1 {
        return Err(Error::NotInRowSet {
            i: row.i,
            lambda: row.lambda,
        });
    }
    let n = (p * row.i) as i128 - col as i128;
    let lo = ((row.lambda - 1) * d) as i128;
    let hi = (row.lambda * d) as i128;
    if n <= lo || n > hi {
        return Err(Error::OutsideSupport { i: row.i, col });
    }
    Ok((n - lo) as u64)
}

/// Leading monomial and leading coefficient of `b_{λ,n}` for
/// `(λ−1)d < n ≤ λd`: the monomial is `a_{n−(λ−1)d} · a_d^{λ−1}` and
/// the coefficient is `λ`, except at `n = λd` where the monomial is
/// `a_d^λ` with coefficient `1`.
pub fn leading_monomial_b(p: u64, d: u64, lambda: u64, n: i64) -> Result<(Monomial, u64), Error> {
    if lambda < 1 || lambda >= p {
        return Err(Error::JOutOfRange {
            j: lambda,
            lo: 1,
            hi: p - 1,
        });
    }
    let lo = ((lambda - 1) * d) as i64;
    let hi = (lambda * d) as i64;
    if n <= lo || n > hi {
        return Err(Error::OutsideMonomialRange { lambda, n });
    }
    let t = (n - lo) as u64;
    let mut m = Monomial::one(d);
    m.exps[t as usize] += 1;
    m.exps[d as usize] += (lambda - 1) as u32;
    let coeff = if t == d { 1 } else { lambda % p };
    Ok((m, coeff))
}

/// A maximal square minor `N` of `M_J`.
///
/// For `J ≤ (p+1)/2` the minor keeps the rightmost `|R_J|` columns; for
/// `J ≥ (p+1)/2` it keeps the top `|C_J|` rows. At `J = (p+1)/2` both
/// rules select the full (square) matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorSpec {
    p: u64,
    d: u64,
    j: u64,
    rows: Vec<RowIndex>,
    cols: Vec<u64>,
}

impl MinorSpec {
    /// Column rule when `J ≤ (p+1)/2`, row rule otherwise.
    pub fn new(p: u64, d: u64, j: u64) -> Result<Self, Error> {
        let sets = bounds::index_sets(p, d, j)?;
        if j <= (p + 1) / 2 {
            Ok(Self::by_column_rule(&sets))
        } else {
            Ok(Self::by_row_rule(&sets))
        }
    }

    /// All rows, rightmost `|R_J|` columns. Requires `|R_J| ≤ |C_J|`.
    pub fn by_column_rule(sets: &IndexSets) -> Self {
        let k = sets.rows.len();
        assert!(
            k <= sets.cols.len(),
            "column rule needs |R_J| <= |C_J| (J = {})",
            sets.j
        );
        MinorSpec {
            p: sets.p,
            d: sets.d,
            j: sets.j,
            rows: sets.rows.clone(),
            cols: sets.cols[sets.cols.len() - k..].to_vec(),
        }
    }

    /// All columns, top `|C_J|` rows. Requires `|C_J| ≤ |R_J|`.
    pub fn by_row_rule(sets: &IndexSets) -> Self {
        let k = sets.cols.len();
        assert!(
            k <= sets.rows.len(),
            "row rule needs |C_J| <= |R_J| (J = {})",
            sets.j
        );
        MinorSpec {
            p: sets.p,
            d: sets.d,
            j: sets.j,
            rows: sets.rows[..k].to_vec(),
            cols: sets.cols.clone(),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[RowIndex] {
        &self.rows
    }

    pub fn cols(&self) -> &[u64] {
        &self.cols
    }

    /// Structural support: the entry at `(row, col)` is the nonzero
    /// polynomial `b_{λ, pi−i′}` iff `pi − i′ ≤ λd`.
    pub fn in_support(&self, row: RowIndex, col: u64) -> bool {
        (self.p * row.i) as i128 - col as i128 <= (row.lambda * self.d) as i128
    }

    /// Upper bound `Σ λ_i` on the total degree of `det(N)`.
    pub fn degree_bound(&self) -> u64 {
        self.rows.iter().map(|r| r.lambda).sum()
    }

    /// Entries of the specialized minor at a concrete coefficient tuple.
    pub fn specialize(&self, table: &PolyPowerTable) -> FqMatrix {
        FqMatrix::from_fn(self.rows.len(), self.cols.len(), |r, c| {
            let row = self.rows[r];
            let n = (self.p * row.i) as i128 - self.cols[c] as i128;
            table.coeff(row.lambda, n)
        })
    }
}

/// One step of the greedy construction: at level `ℓ`, the rows matched
/// in this step and the columns they were matched to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyStep {
    pub level: u64,
    pub rows: Vec<u64>,
    pub cols: Vec<u64>,
}

/// The certificate produced by [`greedy_sigma0`].
#[derive(Clone, Debug)]
pub struct GreedyCertificate {
    pub minor: MinorSpec,
    /// Nonempty steps, in execution order (level descending).
    pub steps: Vec<GreedyStep>,
    /// Assigned pairs `(row, column)`, in row order. Complete exactly
    /// when `success` holds.
    pub assignment: Vec<(RowIndex, u64)>,
    /// `LM(Pr(σ₀))`, present on success.
    pub leading_monomial: Option<Monomial>,
    pub success: bool,
}

/// Runs the greedy construction of `σ₀` on a minor: steps are indexed
/// `ℓ = d, d−1, .., 1`; at step `ℓ` every still-unmatched row that has a
/// still-unmatched column with `φ = ℓ` is matched to that column (which
/// is unique for the row). Success means every row was matched, which
/// certifies `det(N) ≠ 0` with
/// `LM(Pr(σ₀)) = Π_i a_{φ(i,σ₀(i))} a_d^{λ_i−1}`.
pub fn greedy_sigma0(minor: &MinorSpec) -> GreedyCertificate {
    let k = minor.size();
    let (p, d) = (minor.p, minor.d);
    let mut row_done = vec![false; k];
    let mut col_done = vec![false; minor.cols.len()];
    let mut assignment_slots: Vec<Option<u64>> = vec![None; k];
    let mut steps = Vec::new();
    let mut matched = 0usize;
    for level in (1..=d).rev() {
        if matched == k {
            break;
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (ri, &row) in minor.rows.iter().enumerate() {
            if row_done[ri] {
                continue;
            }
            let mut hit: Option<usize> = None;
            for (ci, &col) in minor.cols.iter().enumerate() {
                if col_done[ci] || !minor.in_support(row, col) {
                    continue;
                }
                let value = phi_value(p, d, row, col).expect("support was checked");
                if value == level {
                    assert!(
                        hit.is_none(),
                        "phi value {level} repeats in row (i={}, lambda={})",
                        row.i,
                        row.lambda
                    );
                    hit = Some(ci);
                }
            }
            if let Some(ci) = hit {
                pairs.push((ri, ci));
            }
        }
        if pairs.is_empty() {
            continue;
        }
        // columns chosen within a step are pairwise distinct
        for a in 0..pairs.len() {
            for b in a + 1..pairs.len() {
                assert_ne!(
                    pairs[a].1, pairs[b].1,
                    "two rows matched the same column at level {level}"
                );
            }
        }
        let mut step = GreedyStep {
            level,
            rows: Vec::new(),
            cols: Vec::new(),
        };
        for &(ri, ci) in &pairs {
            row_done[ri] = true;
            col_done[ci] = true;
            assignment_slots[ri] = Some(minor.cols[ci]);
            step.rows.push(minor.rows[ri].i);
            step.cols.push(minor.cols[ci]);
            matched += 1;
        }
        steps.push(step);
    }
    let success = matched == k;
    let assignment: Vec<(RowIndex, u64)> = minor
        .rows
        .iter()
        .zip(&assignment_slots)
        .filter_map(|(&row, col)| col.map(|c| (row, c)))
        .collect();
    let leading_monomial = success.then(|| {
        let mut lm = Monomial::one(d);
        for &(row, col) in &assignment {
            let phi = phi_value(p, d, row, col).expect("assigned pairs are in support");
            let mut factor = Monomial::one(d);
            factor.exps[phi as usize] += 1;
            factor.exps[d as usize] += (row.lambda - 1) as u32;
            lm = lm.mul(&factor);
        }
        lm
    });
    GreedyCertificate {
        minor: minor.clone(),
        steps,
        assignment,
        leading_monomial,
        success,
    }
}

/// Outcome of the randomized determinant evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DetCheck {
    pub trials: u32,
    pub nonzero: u32,
    /// `Σ λ_i`, an upper bound on the total degree of `det(N)`.
    pub degree_bound: u64,
    pub field_order: u128,
}

impl DetCheck {
    pub fn fraction(&self) -> f64 {
        if self.trials == 0 {
            1.0
        } else {
            self.nonzero as f64 / self.trials as f64
        }
    }

    /// The field order gives less than a 10x margin over the degree
    /// bound, so zero evaluations of a nonzero determinant are not rare
    /// enough to read much into the fraction.
    pub fn underpowered(&self) -> bool {
        self.field_order < 10 * self.degree_bound as u128
    }
}

/// Evaluates `det(N)` at `trials` random coefficient tuples (with
/// `a_d ≠ 0`) over the given field and counts nonzero results. For a
/// certified-nonzero determinant of total degree `D`, each evaluation
/// is nonzero with probability at least `1 − D/q`.
pub fn randomized_det_check(
    minor: &MinorSpec,
    field: &Arc<Fq>,
    trials: u32,
    seed: u64,
) -> Result<DetCheck, Error> {
    if field.p() != minor.p {
        return Err(Error::CharacteristicMismatch {
            field_p: field.p(),
            expected_p: minor.p,
        });
    }
    let max_lambda = minor.rows.iter().map(|r| r.lambda).max().unwrap_or(0);
    let mut nonzero = 0;
    for trial in 0..trials {
        let mut rng = trial_rng(seed, minor.d, trial);
        let curve = CurveParams::random(field, minor.d, &mut rng)?;
        let table = PolyPowerTable::with_max(&curve, max_lambda);
        let det = minor.specialize(&table).determinant(field);
        if !field.is_zero(&det) {
            nonzero += 1;
        }
    }
    Ok(DetCheck {
        trials,
        nonzero,
        degree_bound: minor.degree_bound(),
        field_order: field.order(),
    })
}

/// `LM(Pr(σ))` for an arbitrary support-compatible bijection, given as
/// `(row position -> column position)` into the minor's index vectors.
/// Returns `None` if some entry is structurally zero.
pub fn permutation_leading_monomial(minor: &MinorSpec, sigma: &[usize]) -> Option<Monomial> {
    let d = minor.d;
    let mut lm = Monomial::one(d);
    for (ri, &ci) in sigma.iter().enumerate() {
        let row = minor.rows[ri];
        let col = minor.cols[ci];
        if !minor.in_support(row, col) {
            return None;
        }
        let n = (minor.p * row.i) as i64 - col as i64;
        let (factor, _) = leading_monomial_b(minor.p, d, row.lambda, n)
            .expect("support entries have leading monomials");
        lm = lm.mul(&factor);
    }
    Some(lm)
}

/// Validates that a claimed `phi` table matches [`phi_value`] for every
/// support pair of an index-set pair; used by the worked-example check.
pub fn phi_table(sets: &IndexSets) -> Vec<Vec<Option<u64>>> {
    sets.rows
        .iter()
        .map(|&row| {
            sets.cols
                .iter()
                .map(|&col| phi_value(sets.p, sets.d, row, col).ok())
                .collect()
        })
        .collect()
}
