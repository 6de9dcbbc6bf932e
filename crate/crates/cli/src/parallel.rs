//! Parallel scan driver.
//!
//! Trials are independent and keyed by trial index, so a scan can be
//! chunked across threads and reduced with the accumulator's associative
//! merge. Results are bitwise identical to the serial scan regardless of
//! thread count or chunk completion order.

use polyneq_core::catalog::InequalityId;
use polyneq_core::ensemble::{run_trial, validate_config, EnsembleConfig, ScanAccumulator, ScanReport};
use polyneq_core::Error;
use rayon::prelude::*;

const CHUNK: u64 = 1024;

/// Worker count from `POLYNEQ_THREADS`; unset, empty, unparseable, or 0
/// means "let rayon decide".
pub fn thread_count() -> Option<usize> {
    let raw = std::env::var("POLYNEQ_THREADS").ok()?;
    match raw.trim().parse::<usize>() {
        Ok(0) | Err(_) => None,
        Ok(n) => Some(n),
    }
}

fn scan_on_current_pool(id: InequalityId, cfg: &EnsembleConfig) -> ScanReport {
    let chunks: Vec<(u64, u64)> = (0..cfg.trials)
        .step_by(CHUNK as usize)
        .map(|lo| (lo, (lo + CHUNK).min(cfg.trials)))
        .collect();
    let acc = chunks
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut local = ScanAccumulator::new();
            for trial in lo..hi {
                local.push(trial, run_trial(id, cfg, trial));
            }
            local
        })
        .reduce(ScanAccumulator::new, ScanAccumulator::merge);
    acc.finalize(id, cfg)
}

/// Run a scan across however many threads [`thread_count`] allows.
pub fn parallel_scan(id: InequalityId, cfg: &EnsembleConfig) -> Result<ScanReport, Error> {
    validate_config(id, cfg)?;
    match thread_count() {
        None => Ok(scan_on_current_pool(id, cfg)),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|_| Error::SchemaViolation("could not build thread pool"))?;
            Ok(pool.install(|| scan_on_current_pool(id, cfg)))
        }
    }
}
