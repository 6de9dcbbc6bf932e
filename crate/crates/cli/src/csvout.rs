//! CSV renderings of the catalog, scan summaries, and sharpness sweeps.
//!
//! Floats are written with Rust's shortest round-trip formatting, so a
//! rerun with the same inputs produces byte-identical rows. Absent
//! optional values become empty cells.

use polyneq_core::catalog::{catalog_table, CheckReport};
use polyneq_core::ensemble::{EnsembleConfig, ScanReport};
use std::fmt::Write as _;

pub const CATALOG_HEADER: &str = "id,eq_label,k_range,alpha_constraint,formula";
pub const SCAN_HEADER: &str = "id,n,k,trials,violations,min_slack,min_rel_slack";
pub const SHARPNESS_HEADER: &str = "id,n,k,alpha_mod,lhs,rhs,slack,rel_slack,equality_sharp";

fn cell(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Quote a field if it contains a comma or a quote.
fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// The full 22-row catalog as CSV (header included).
pub fn catalog_csv() -> String {
    let mut out = String::new();
    out.push_str(CATALOG_HEADER);
    out.push('\n');
    for e in catalog_table() {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            e.id.name(),
            csv_field(e.eq_label),
            csv_field(e.k_range),
            csv_field(e.alpha_constraint),
            csv_field(e.formula),
        );
    }
    out
}

/// One scan summary row (no header).
pub fn scan_row(r: &ScanReport) -> String {
    scan_row_for(&r.config, r)
}

fn scan_row_for(cfg: &EnsembleConfig, r: &ScanReport) -> String {
    format!(
        "{},{},{},{},{},{},{}",
        r.id.name(),
        cfg.degree,
        cfg.k.value(),
        cfg.trials,
        r.violations,
        cell(r.min_slack),
        cell(r.min_rel_slack),
    )
}

/// Scan summary CSV: header plus one row per report.
pub fn scan_csv(reports: &[&ScanReport]) -> String {
    let mut out = String::new();
    out.push_str(SCAN_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&scan_row(r));
        out.push('\n');
    }
    out
}

/// Sharpness sweep CSV: one row per probed instance, parameters read back
/// out of each report's witness.
pub fn sharpness_csv(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    out.push_str(SHARPNESS_HEADER);
    out.push('\n');
    for r in reports {
        let n = r.witness.root_form.as_ref().map(|rf| rf.degree()).unwrap_or(0);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.id.name(),
            n,
            cell(r.witness.k),
            cell(r.witness.alpha.map(|a| a.norm())),
            cell(r.lhs),
            cell(r.rhs),
            cell(r.slack),
            cell(r.rel_slack),
            r.equality_sharp,
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyneq_core::catalog::InequalityId;

    #[test]
    fn catalog_csv_has_a_row_per_id() {
        let csv = catalog_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 23);
        assert_eq!(lines[0], CATALOG_HEADER);
        for (line, id) in lines[1..].iter().zip(InequalityId::ALL) {
            assert!(line.starts_with(id.name()), "{line}");
        }
    }

    #[test]
    fn scan_csv_round_trips_the_summary_fields() {
        use polyneq_core::ensemble::{scan, AlphaMode, GammaMode, ZeroMode};
        use polyneq_core::poly::DiskRadius;

        let cfg = EnsembleConfig {
            degree: 3,
            k: DiskRadius::new(0.5).unwrap(),
            trials: 50,
            seed: 1,
            gamma_mode: GammaMode::Ones,
            alpha_mode: AlphaMode::None,
            zero_mode: ZeroMode::DiskUniform,
            sample_k: None,
        };
        let rep = scan(InequalityId::Malik5, &cfg).unwrap();
        let csv = scan_csv(&[&rep]);
        let row = csv.lines().nth(1).unwrap();
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[0], "MALIK_5");
        assert_eq!(fields[1], "3");
        assert_eq!(fields[2], "0.5");
        assert_eq!(fields[3], "50");
        assert_eq!(fields[4].parse::<u64>().unwrap(), rep.violations);
        assert_eq!(fields[5].parse::<f64>().unwrap(), rep.min_slack.unwrap());
    }
}
