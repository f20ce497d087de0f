//! Command implementations. Each returns a report struct; the binary
//! decides between human rendering and JSON.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use cartier_core::bounds::{index_sets, l_bound, l_j_bound};
use cartier_core::cartier::filtration_report;
use cartier_core::certificate::{greedy_sigma0, randomized_det_check, MinorSpec};
use cartier_core::curve::{genus, row_count, CurveParams};
use cartier_core::field::Fq;
use cartier_core::golden;
use cartier_core::scan::{run_trials, ScanRecord};

use crate::parse::{parse_coeffs, parse_d_range};
use crate::report::*;

/// Anything that should terminate with a usage/parameter exit code.
#[derive(Debug)]
pub enum CliError {
    Core(cartier_core::Error),
    Usage(String),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<cartier_core::Error> for CliError {
    fn from(e: cartier_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn field_info(field: &Fq, seed: u64) -> FieldInfo {
    FieldInfo {
        p: field.p(),
        m: field.m(),
        seed,
        modulus: field.modulus_full(),
        modulus_string: field.modulus_string(),
    }
}

pub fn cmd_anumber(
    p: u64,
    d: u64,
    coeffs: &str,
    m: usize,
    seed: u64,
) -> Result<AnumberReport, CliError> {
    let field = Arc::new(Fq::new(p, m, seed)?);
    let coeffs = parse_coeffs(coeffs, &field, d).map_err(CliError::Usage)?;
    let curve = CurveParams::new(field.clone(), coeffs)?;
    let report = filtration_report(&curve);
    Ok(AnumberReport {
        field: field_info(&field, seed),
        d,
        coeffs: curve
            .coeffs()
            .iter()
            .map(|c| c.coeff_vec().to_vec())
            .collect(),
        genus: curve.genus(),
        a_number: report.a_number(),
        l: l_bound(p, d)?,
        filtration: report
            .rows
            .iter()
            .map(|r| FiltrationRowDto {
                j: r.j,
                dim: r.dim,
                kernel: r.kernel,
                predicted: r.predicted,
            })
            .collect(),
    })
}

pub fn cmd_bounds(p: u64, d: u64) -> Result<BoundsReport, CliError> {
    let g = genus(p, d)?;
    let l = l_bound(p, d)?;
    let mut dim_leq = 0u64;
    let rows = (1..p)
        .map(|j| {
            dim_leq += row_count(p, d, j);
            let l_j = (j <= (p + 1) / 2).then(|| l_j_bound(p, d, j).expect("valid j"));
            let (col_count, row_count) = if j >= 2 {
                let sets = index_sets(p, d, j).expect("valid j");
                (Some(sets.cols.len() as u64), Some(sets.rows.len() as u64))
            } else {
                (None, None)
            };
            BoundsRow {
                j,
                dim_leq,
                l_j,
                col_count,
                row_count,
            }
        })
        .collect();
    Ok(BoundsReport {
        p,
        d,
        genus: g,
        l,
        rows,
    })
}

pub fn cmd_certify(
    p: u64,
    d: u64,
    js: &[u64],
    check: Option<(usize, u32)>,
    seed: u64,
) -> Result<CertifyReport, CliError> {
    let mut entries = Vec::new();
    for &j in js {
        let sets = index_sets(p, d, j)?;
        let minor = MinorSpec::new(p, d, j)?;
        let rule = if j <= (p + 1) / 2 { "columns" } else { "rows" };
        let cert = greedy_sigma0(&minor);
        let check_dto = match check {
            Some((m, trials)) => {
                let field = Arc::new(Fq::new(p, m, seed)?);
                let outcome = randomized_det_check(&minor, &field, trials, seed)?;
                Some(CheckDto {
                    m,
                    trials: outcome.trials,
                    nonzero: outcome.nonzero,
                    degree_bound: outcome.degree_bound,
                    field_order: u64::try_from(outcome.field_order).unwrap_or(u64::MAX),
                    underpowered: outcome.underpowered(),
                })
            }
            None => None,
        };
        let mut sigma: Vec<(u64, u64)> = cert.assignment.iter().map(|&(r, c)| (r.i, c)).collect();
        sigma.sort_unstable();
        entries.push(CertifyEntry {
            j,
            rows: sets.rows.iter().map(|r| (r.i, r.lambda)).collect(),
            cols: sets.cols.clone(),
            rule: rule.to_string(),
            minor_rows: minor.rows().iter().map(|r| r.i).collect(),
            minor_cols: minor.cols().to_vec(),
            steps: cert
                .steps
                .iter()
                .map(|s| StepDto {
                    level: s.level,
                    rows: s.rows.clone(),
                    cols: s.cols.clone(),
                })
                .collect(),
            sigma,
            leading_monomial: cert.leading_monomial.as_ref().map(|m| m.to_string()),
            success: cert.success,
            check: check_dto,
        });
    }
    Ok(CertifyReport { p, d, entries })
}

pub fn cmd_paper_example() -> PaperExampleReport {
    let golden = golden::reference();
    let outcomes = golden::run_reference_checks();
    let all_passed = outcomes.iter().all(|o| o.passed);
    PaperExampleReport {
        p: golden.p,
        d: golden.d,
        j: golden.j,
        checks: outcomes
            .into_iter()
            .map(|o| GoldenCheckDto {
                name: o.name.to_string(),
                passed: o.passed,
                detail: o.detail,
            })
            .collect(),
        all_passed,
    }
}

pub struct ScanOutput {
    pub sidecar: ScanSidecar,
    pub csv_path: PathBuf,
    pub json_path: PathBuf,
    pub csv_rows: usize,
}

/// Sidecar path: the CSV path with its extension replaced by `json`
/// (or `witnesses.json` if that would collide with the CSV itself).
fn sidecar_path(out: &Path) -> PathBuf {
    let candidate = out.with_extension("json");
    if candidate == out {
        out.with_extension("witnesses.json")
    } else {
        candidate
    }
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_scan(
    p: u64,
    d_range: &str,
    m: usize,
    trials: u32,
    seed: u64,
    out: &Path,
    threads: Option<usize>,
) -> Result<ScanOutput, CliError> {
    let (lo, hi) = parse_d_range(d_range).map_err(CliError::Usage)?;
    let field = Arc::new(Fq::new(p, m, seed)?);
    let pool = match threads {
        Some(n) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?,
        ),
        None => None,
    };
    let mut records: Vec<ScanRecord> = Vec::new();
    let mut csv = String::from("p,d,m,seed,trial,anumber,L,is_witness\n");
    let mut csv_rows = 0usize;
    for d in lo..=hi {
        if d % p == 0 {
            continue;
        }
        let results = match &pool {
            Some(pool) => pool.install(|| run_trials(&field, d, trials, seed))?,
            None => run_trials(&field, d, trials, seed)?,
        };
        let record = ScanRecord::from_trials(&field, d, seed, &results)?;
        for r in &results {
            use std::fmt::Write as _;
            let _ = writeln!(
                csv,
                "{},{},{},{},{},{},{},{}",
                p,
                d,
                m,
                seed,
                r.trial,
                r.a_number,
                record.l,
                u8::from(r.a_number == record.l)
            );
            csv_rows += 1;
        }
        records.push(record);
    }
    let sidecar = ScanSidecar {
        p,
        m,
        seed,
        trials,
        modulus: field.modulus_full(),
        modulus_string: field.modulus_string(),
        records,
    };
    let json_path = sidecar_path(out);
    fs::write(out, csv)?;
    let json = serde_json::to_string_pretty(&sidecar).expect("serializable");
    fs::write(&json_path, json)?;
    Ok(ScanOutput {
        sidecar,
        csv_path: out.to_path_buf(),
        json_path,
        csv_rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anumber_p3_d2() {
        let report = cmd_anumber(3, 2, "0,0,1", 1, 0).unwrap();
        assert_eq!(report.genus, 1);
        assert_eq!(report.a_number, 1);
        assert_eq!(report.l, 1);
        assert_eq!(report.filtration.len(), 2);
    }

    #[test]
    fn anumber_genus_zero() {
        let report = cmd_anumber(5, 1, "0,1", 1, 0).unwrap();
        assert_eq!(report.genus, 0);
        assert_eq!(report.a_number, 0);
    }

    #[test]
    fn anumber_rejects_p_dividing_d() {
        assert!(matches!(
            cmd_anumber(7, 14, "0,0,0,0,0,0,0,0,0,0,0,0,0,0,1", 1, 0),
            Err(CliError::Core(cartier_core::Error::DegreeDivisibleByP {
                p: 7,
                d: 14
            }))
        ));
    }

    #[test]
    fn certify_worked_example_entry() {
        let report = cmd_certify(5, 18, &[3], None, 0).unwrap();
        let e = &report.entries[0];
        assert!(e.success);
        assert_eq!(e.rule, "columns");
        assert_eq!(e.leading_monomial.as_deref(), Some("a_6*a_12*a_16*a_18^6"));
        assert_eq!(
            e.sigma,
            vec![(3, 3), (4, 2), (5, 7), (6, 6), (7, 1), (8, 4)]
        );
        assert!(report.all_succeeded());
    }

    #[test]
    fn certify_all_j_p7_d10() {
        let js: Vec<u64> = (2..7).collect();
        let report = cmd_certify(7, 10, &js, None, 0).unwrap();
        assert_eq!(report.entries.len(), 5);
        assert!(report.all_succeeded());
    }

    #[test]
    fn bounds_report_p5_d18() {
        let report = cmd_bounds(5, 18).unwrap();
        assert_eq!(report.l, 17);
        assert_eq!(report.genus, 34);
        assert_eq!(report.rows.len(), 4);
        assert_eq!(report.rows[0].dim_leq, 14);
        assert_eq!(report.rows[1].l_j, Some(17));
        assert_eq!(report.rows[2].l_j, Some(17));
        assert_eq!(report.rows[3].l_j, None);
        assert_eq!(report.rows[2].col_count, Some(6));
        assert_eq!(report.rows[2].row_count, Some(6));
    }

    #[test]
    fn paper_example_passes() {
        let report = cmd_paper_example();
        assert!(report.all_passed);
        assert_eq!(report.checks.len(), 6);
    }

    #[test]
    fn json_reports_round_trip() {
        let report = cmd_anumber(3, 2, "0,0,1", 1, 0).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let back: AnumberReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report, back);

        let report = cmd_certify(5, 18, &[3, 4], Some((4, 10)), 1).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let back: CertifyReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report, back);

        let report = cmd_bounds(7, 10).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let back: BoundsReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report, back);

        let report = cmd_paper_example();
        let json = serde_json::to_string(&report).unwrap();
        let back: PaperExampleReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report, back);
    }

    #[test]
    fn sidecar_path_rules() {
        assert_eq!(
            sidecar_path(Path::new("scan.csv")),
            PathBuf::from("scan.json")
        );
        assert_eq!(
            sidecar_path(Path::new("results")),
            PathBuf::from("results.json")
        );
        assert_eq!(
            sidecar_path(Path::new("x.json")),
            PathBuf::from("x.witnesses.json")
        );
    }
}
