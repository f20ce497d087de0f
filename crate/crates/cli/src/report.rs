//! Report types emitted by the commands. Every report serializes to a
//! single JSON object (`--json`) and renders to a fixed-width table for
//! the default human output; both forms are byte-deterministic.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldInfo {
    pub p: u64,
    pub m: usize,
    pub seed: u64,
    /// Monic modulus, ascending coefficients (length `m + 1`).
    pub modulus: Vec<u64>,
    pub modulus_string: String,
}

fn fmt_coeff(c: &[u64]) -> String {
    if c.len() == 1 {
        format!("{}", c[0])
    } else {
        let inner: Vec<String> = c.iter().map(|v| v.to_string()).collect();
        format!("[{}]", inner.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationRowDto {
    pub j: u64,
    pub dim: u64,
    pub kernel: u64,
    pub predicted: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnumberReport {
    pub field: FieldInfo,
    pub d: u64,
    /// Coefficients `a_0..a_d` as coefficient vectors.
    pub coeffs: Vec<Vec<u64>>,
    pub genus: u64,
    pub a_number: u64,
    pub l: u64,
    pub filtration: Vec<FiltrationRowDto>,
}

impl AnumberReport {
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "field: p={} m={} seed={} (modulus: {})",
            self.field.p, self.field.m, self.field.seed, self.field.modulus_string
        );
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| fmt_coeff(c)).collect();
        let _ = writeln!(out, "curve: d={} coeffs=[{}]", self.d, coeffs.join(", "));
        let _ = writeln!(out, "genus:    {}", self.genus);
        let _ = writeln!(out, "a-number: {}", self.a_number);
        let _ = writeln!(out, "L(d):     {}", self.l);
        let _ = writeln!(out, "filtration:");
        let _ = writeln!(
            out,
            "  {:>3} {:>6} {:>8} {:>6}",
            "J", "dim", "kernel", "L_J"
        );
        for row in &self.filtration {
            let pred = row
                .predicted
                .map(|v| v.to_string())
                .unwrap_or_else(|| "-".to_string());
            let _ = writeln!(
                out,
                "  {:>3} {:>6} {:>8} {:>6}",
                row.j, row.dim, row.kernel, pred
            );
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsRow {
    pub j: u64,
    pub dim_leq: u64,
    pub l_j: Option<u64>,
    pub col_count: Option<u64>,
    pub row_count: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub p: u64,
    pub d: u64,
    pub genus: u64,
    pub l: u64,
    pub rows: Vec<BoundsRow>,
}

impl BoundsReport {
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "p={} d={}: genus={} L(d)={}",
            self.p, self.d, self.genus, self.l
        );
        let _ = writeln!(
            out,
            "  {:>3} {:>9} {:>6} {:>6} {:>6}",
            "J", "dim H<=J", "L_J", "|C_J|", "|R_J|"
        );
        let dash = "-".to_string();
        for row in &self.rows {
            let _ = writeln!(
                out,
                "  {:>3} {:>9} {:>6} {:>6} {:>6}",
                row.j,
                row.dim_leq,
                row.l_j
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| dash.clone()),
                row.col_count
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| dash.clone()),
                row.row_count
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| dash.clone()),
            );
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDto {
    pub level: u64,
    pub rows: Vec<u64>,
    pub cols: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDto {
    pub m: usize,
    pub trials: u32,
    pub nonzero: u32,
    pub degree_bound: u64,
    /// Saturating at `u64::MAX` for very large fields.
    pub field_order: u64,
    pub underpowered: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyEntry {
    pub j: u64,
    /// `R_J` as `(i, λ)` pairs.
    pub rows: Vec<(u64, u64)>,
    pub cols: Vec<u64>,
    /// Which maximal-minor rule applied: `"columns"` or `"rows"`.
    pub rule: String,
    pub minor_rows: Vec<u64>,
    pub minor_cols: Vec<u64>,
    pub steps: Vec<StepDto>,
    pub sigma: Vec<(u64, u64)>,
    pub leading_monomial: Option<String>,
    pub success: bool,
    pub check: Option<CheckDto>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyReport {
    pub p: u64,
    pub d: u64,
    pub entries: Vec<CertifyEntry>,
}

impl CertifyReport {
    pub fn all_succeeded(&self) -> bool {
        self.entries.iter().all(|e| e.success)
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p={} d={}", self.p, self.d);
        for e in &self.entries {
            let _ = writeln!(
                out,
                "J={}: |R_J|={} |C_J|={}, minor {}x{} ({} rule)",
                e.j,
                e.rows.len(),
                e.cols.len(),
                e.minor_rows.len(),
                e.minor_cols.len(),
                e.rule
            );
            let rows: Vec<String> = e.rows.iter().map(|(i, l)| format!("({i},λ={l})")).collect();
            let _ = writeln!(out, "  R_J = [{}]", rows.join(", "));
            let cols: Vec<String> = e.cols.iter().map(|c| c.to_string()).collect();
            let _ = writeln!(out, "  C_J = [{}]", cols.join(", "));
            for s in &e.steps {
                let rs: Vec<String> = s.rows.iter().map(|v| v.to_string()).collect();
                let cs: Vec<String> = s.cols.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(
                    out,
                    "  step l={}: rows {{{}}} -> cols {{{}}}",
                    s.level,
                    rs.join(","),
                    cs.join(",")
                );
            }
            let sigma: Vec<String> = e.sigma.iter().map(|(i, c)| format!("{i}->{c}")).collect();
            let _ = writeln!(out, "  sigma0: {}", sigma.join(", "));
            match &e.leading_monomial {
                Some(lm) => {
                    let _ = writeln!(out, "  LM(Pr(sigma0)) = {lm}");
                }
                None => {
                    let _ = writeln!(out, "  LM(Pr(sigma0)) = (none)");
                }
            }
            let _ = writeln!(
                out,
                "  certificate: {}",
                if e.success { "OK (det != 0)" } else { "FAILED" }
            );
            if let Some(check) = &e.check {
                let _ = writeln!(
                    out,
                    "  randomized check: {}/{} nonzero over F_{{{}^{}}} (degree bound {}){}",
                    check.nonzero,
                    check.trials,
                    self.p,
                    check.m,
                    check.degree_bound,
                    if check.underpowered {
                        "  [warning: field is small for this degree]"
                    } else {
                        ""
                    }
                );
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenCheckDto {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaperExampleReport {
    pub p: u64,
    pub d: u64,
    pub j: u64,
    pub checks: Vec<GoldenCheckDto>,
    pub all_passed: bool,
}

impl PaperExampleReport {
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "worked example p={} d={} J={}:",
            self.p, self.d, self.j
        );
        for c in &self.checks {
            let _ = writeln!(
                out,
                "  {:<18} {}{}",
                c.name,
                if c.passed { "PASS" } else { "FAIL" },
                if c.detail.is_empty() {
                    String::new()
                } else {
                    format!("  ({})", c.detail)
                }
            );
        }
        let _ = writeln!(
            out,
            "{}",
            if self.all_passed {
                "all checks passed"
            } else {
                "MISMATCH: some checks failed"
            }
        );
        out
    }
}

pub use cartier_core::scan::ScanRecord;

/// Sidecar JSON written next to the scan CSV; holds the field data and
/// the per-degree records including witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSidecar {
    pub p: u64,
    pub m: usize,
    pub seed: u64,
    pub trials: u32,
    pub modulus: Vec<u64>,
    pub modulus_string: String,
    pub records: Vec<ScanRecord>,
}

impl ScanSidecar {
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "scan: p={} m={} seed={} trials={} (modulus: {})",
            self.p, self.m, self.seed, self.trials, self.modulus_string
        );
        for r in &self.records {
            let min = r
                .min_observed()
                .map(|v| v.to_string())
                .unwrap_or_else(|| "-".to_string());
            let pct = if r.trials == 0 {
                "-".to_string()
            } else {
                format!("{:.1}%", 100.0 * r.witness_count as f64 / r.trials as f64)
            };
            let _ = writeln!(
                out,
                "d={}: L={} min={} witnesses={}/{} ({})",
                r.d, r.l, min, r.witness_count, r.trials, pct
            );
        }
        out
    }
}
