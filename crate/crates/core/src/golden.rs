//! Embedded worked example (p = 5, d = 18, J = 3) and an end-to-end
//! self-check against it: index sets, the zero pattern of the
//! level-dropping matrix, the φ table, the greedy partition, σ₀, and
//! the leading monomial of the certified determinant.

use crate::bounds::{index_sets, RowIndex};
use crate::certificate::{greedy_sigma0, phi_table, MinorSpec, Monomial};

/// Reference data for one worked example.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenExample {
    pub p: u64,
    pub d: u64,
    pub j: u64,
    /// `R_J` as `(i, λ)`, ordered by `i`.
    pub rows: Vec<(u64, u64)>,
    /// `C_J`, ordered.
    pub cols: Vec<u64>,
    /// `support[r][c]` = entry at `(rows[r], cols[c])` is structurally
    /// nonzero.
    pub support: Vec<Vec<bool>>,
    /// `phi[r][c]`, `None` outside the support.
    pub phi: Vec<Vec<Option<u64>>>,
    /// Nonempty greedy steps `(level, rows, cols)` in execution order;
    /// rows and columns sorted ascending.
    pub steps: Vec<(u64, Vec<u64>, Vec<u64>)>,
    /// `σ₀` as `(i, i′)` pairs, sorted by `i`.
    pub sigma: Vec<(u64, u64)>,
    /// `LM(Pr(σ₀))` as `(variable index, exponent)` pairs.
    pub leading_monomial: Vec<(u64, u32)>,
}

/// The embedded reference values for p = 5, d = 18, J = 3.
pub fn reference() -> GoldenExample {
    let t = true;
    let f = false;
    GoldenExample {
        p: 5,
        d: 18,
        j: 3,
        rows: vec![(3, 1), (4, 1), (5, 1), (6, 2), (7, 2), (8, 2)],
        cols: vec![1, 2, 3, 4, 6, 7],
        support: vec![
            vec![t, t, t, t, t, t],
            vec![f, t, t, t, t, t],
            vec![f, f, f, f, f, t],
            vec![t, t, t, t, t, t],
            vec![t, t, t, t, t, t],
            vec![f, f, f, t, t, t],
        ],
        phi: vec![
            vec![Some(14), Some(13), Some(12), Some(11), Some(9), Some(8)],
            vec![None, Some(18), Some(17), Some(16), Some(14), Some(13)],
            vec![None, None, None, None, None, Some(18)],
            vec![Some(11), Some(10), Some(9), Some(8), Some(6), Some(5)],
            vec![Some(16), Some(15), Some(14), Some(13), Some(11), Some(10)],
            vec![None, None, None, Some(18), Some(16), Some(15)],
        ],
        steps: vec![
            (18, vec![4, 5, 8], vec![2, 4, 7]),
            (16, vec![7], vec![1]),
            (12, vec![3], vec![3]),
            (6, vec![6], vec![6]),
        ],
        sigma: vec![(3, 3), (4, 2), (5, 7), (6, 6), (7, 1), (8, 4)],
        leading_monomial: vec![(6, 1), (12, 1), (16, 1), (18, 6)],
    }
}

/// Result of one named comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// Empty on success; a located diff on failure.
    pub detail: String,
}

fn outcome(name: &'static str, diffs: Vec<String>) -> CheckOutcome {
    CheckOutcome {
        name,
        passed: diffs.is_empty(),
        detail: diffs.join("; "),
    }
}

/// Recomputes the example from scratch and compares each piece against
/// the given reference values.
pub fn run_checks(golden: &GoldenExample) -> Vec<CheckOutcome> {
    let (p, d, j) = (golden.p, golden.d, golden.j);
    let mut out = Vec::new();

    let sets = index_sets(p, d, j).expect("golden parameters are valid");
    let mut diffs = Vec::new();
    let rows: Vec<(u64, u64)> = sets.rows.iter().map(|r| (r.i, r.lambda)).collect();
    if rows != golden.rows {
        diffs.push(format!(
            "R_J: computed {:?}, expected {:?}",
            rows, golden.rows
        ));
    }
    if sets.cols != golden.cols {
        diffs.push(format!(
            "C_J: computed {:?}, expected {:?}",
            sets.cols, golden.cols
        ));
    }
    out.push(outcome("index-sets", diffs));

    let minor = MinorSpec::new(p, d, j).expect("golden parameters are valid");
    let mut diffs = Vec::new();
    for (r, &(i, lambda)) in golden.rows.iter().enumerate() {
        for (c, &col) in golden.cols.iter().enumerate() {
            let computed = minor.in_support(RowIndex { i, lambda }, col);
            let expected = golden.support[r][c];
            if computed != expected {
                diffs.push(format!(
                    "support at row (i={i}, λ={lambda}), column {col}: computed {computed}, expected {expected}"
                ));
            }
        }
    }
    out.push(outcome("zero-pattern", diffs));

    let table = phi_table(&sets);
    let mut diffs = Vec::new();
    for (r, row) in table.iter().enumerate() {
        for (c, &value) in row.iter().enumerate() {
            if value != golden.phi[r][c] {
                diffs.push(format!(
                    "phi at row {:?}, column {}: computed {:?}, expected {:?}",
                    golden.rows[r], golden.cols[c], value, golden.phi[r][c]
                ));
            }
        }
    }
    out.push(outcome("phi-table", diffs));

    let cert = greedy_sigma0(&minor);
    let mut diffs = Vec::new();
    let steps: Vec<(u64, Vec<u64>, Vec<u64>)> = cert
        .steps
        .iter()
        .map(|s| {
            let mut rows = s.rows.clone();
            let mut cols = s.cols.clone();
            rows.sort_unstable();
            cols.sort_unstable();
            (s.level, rows, cols)
        })
        .collect();
    if steps != golden.steps {
        diffs.push(format!(
            "steps: computed {:?}, expected {:?}",
            steps, golden.steps
        ));
    }
    out.push(outcome("greedy-partition", diffs));

    let mut diffs = Vec::new();
    if !cert.success {
        diffs.push("greedy construction did not complete".to_string());
    }
    let mut sigma: Vec<(u64, u64)> = cert.assignment.iter().map(|&(r, c)| (r.i, c)).collect();
    sigma.sort_unstable();
    if sigma != golden.sigma {
        diffs.push(format!(
            "sigma0: computed {:?}, expected {:?}",
            sigma, golden.sigma
        ));
    }
    out.push(outcome("sigma0", diffs));

    let mut diffs = Vec::new();
    let expected = Monomial::from_pairs(d, &golden.leading_monomial);
    match &cert.leading_monomial {
        Some(lm) if *lm == expected => {}
        Some(lm) => diffs.push(format!(
            "leading monomial: computed {lm}, expected {expected}"
        )),
        None => diffs.push("no leading monomial (greedy failed)".to_string()),
    }
    out.push(outcome("leading-monomial", diffs));

    out
}

/// Runs all checks against the embedded reference.
pub fn run_reference_checks() -> Vec<CheckOutcome> {
    run_checks(&reference())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_reference_checks_pass() {
        let outcomes = run_reference_checks();
        assert_eq!(outcomes.len(), 6);
        for o in &outcomes {
            assert!(o.passed, "{}: {}", o.name, o.detail);
            assert!(o.detail.is_empty());
        }
    }

    #[test]
    fn perturbed_golden_values_are_caught() {
        // negative control: flip one value in each table and expect a
        // located diff
        let mut g = reference();
        g.cols[0] = 5;
        let outcomes = run_checks(&g);
        let sets = outcomes.iter().find(|o| o.name == "index-sets").unwrap();
        assert!(!sets.passed);
        assert!(sets.detail.contains("C_J"));

        let mut g = reference();
        g.phi[0][0] = Some(13);
        let outcomes = run_checks(&g);
        let phi = outcomes.iter().find(|o| o.name == "phi-table").unwrap();
        assert!(!phi.passed);
        assert!(phi.detail.contains("column 1"));

        let mut g = reference();
        g.sigma[0] = (3, 4);
        let outcomes = run_checks(&g);
        let sigma = outcomes.iter().find(|o| o.name == "sigma0").unwrap();
        assert!(!sigma.passed);

        let mut g = reference();
        g.leading_monomial = vec![(6, 1), (12, 1), (16, 1), (18, 5)];
        let outcomes = run_checks(&g);
        let lm = outcomes
            .iter()
            .find(|o| o.name == "leading-monomial")
            .unwrap();
        assert!(!lm.passed);
        assert!(lm.detail.contains("a_18^5"));

        let mut g = reference();
        g.support[0][0] = false;
        let outcomes = run_checks(&g);
        let zp = outcomes.iter().find(|o| o.name == "zero-pattern").unwrap();
        assert!(!zp.passed);

        let mut g = reference();
        g.steps[0].1 = vec![4, 5];
        let outcomes = run_checks(&g);
        let st = outcomes
            .iter()
            .find(|o| o.name == "greedy-partition")
            .unwrap();
        assert!(!st.passed);
    }
}
