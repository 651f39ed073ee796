//! Theorem sweeps spread over a thread pool.

use rayon::prelude::*;
use speclim_core::oracle::{cases, check_case, TheoremId, VerificationReport};

/// Environment variable that caps the number of worker threads.
pub const THREADS_VAR: &str = "SPECLIM_THREADS";

/// Worker count from [`THREADS_VAR`], if set to a positive integer.
pub fn thread_limit() -> Option<usize> {
    std::env::var(THREADS_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n| n > 0)
}

/// Runs the sweep for `id` on a pool of `threads` workers (all cores when `None`).
///
/// The mismatches come back in case order, so the report does not depend on scheduling.
pub fn verify_parallel(
    id: TheoremId,
    n_min: usize,
    n_max: usize,
    threads: Option<usize>,
) -> speclim_core::Result<VerificationReport> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    let pool = builder.build().expect("thread pool");
    let cs = cases(id, n_min, n_max)?;
    let found = pool.install(|| {
        cs.par_iter()
            .map(|c| check_case(id, c))
            .collect::<speclim_core::Result<Vec<_>>>()
    })?;
    Ok(VerificationReport {
        theorem: id,
        n_min,
        n_max,
        checked: cs.len(),
        mismatches: found.into_iter().flatten().collect(),
    })
}
