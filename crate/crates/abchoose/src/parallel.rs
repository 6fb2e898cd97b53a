//! Multi-threaded choosability search: the canonical assignment space of
//! each piece is split into prefixes searched independently, and the first
//! bad prefix in search order wins, so the witness matches the
//! single-threaded one.

use abchoose_core::solver::{is_ab_choosable, l_colourable, Budget, ChoosabilitySearch};
use abchoose_core::{Graph, SearchConfig, SolverError, Verdict};
use rayon::prelude::*;

/// Like [`is_ab_choosable`], with `cfg.workers` threads.
pub fn is_ab_choosable_parallel(
    g: &Graph,
    a: usize,
    b: usize,
    cfg: &SearchConfig,
) -> Result<Verdict, SolverError> {
    if cfg.workers <= 1 {
        return is_ab_choosable(g, a, b, cfg);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| SolverError::Unsupported(format!("thread pool: {e}")))?;
    let budget = Budget::new(cfg);
    for piece in ChoosabilitySearch::pieces(g, a, b, cfg)? {
        let prefixes = split(&piece, cfg.workers);
        log::debug!(
            "piece of {} vertices split into {} prefixes",
            piece.piece().n(),
            prefixes.len()
        );
        let found = pool.install(|| {
            prefixes.par_iter().find_map_first(|p| match piece.search_from(p, &budget) {
                Ok(Some(bad)) => Some(Ok(bad)),
                Ok(None) => None,
                Err(e) => Some(Err(e)),
            })
        });
        match found {
            None => {}
            Some(Err(_)) => return Err(SolverError::Inconclusive(budget.stats())),
            Some(Ok(bad)) => {
                let witness = piece.witness(&bad)?;
                if l_colourable(g, &witness).is_some() {
                    return Err(SolverError::Inconsistent(
                        "reported bad assignment is colourable".into(),
                    ));
                }
                return Ok(Verdict::not_choosable(witness, budget.stats()));
            }
        }
    }
    Ok(Verdict::choosable(budget.stats()))
}

/// Shallowest prefix depth giving at least eight prefixes per worker.
fn split(piece: &ChoosabilitySearch, workers: usize) -> Vec<Vec<abchoose_core::ColourSet>> {
    let mut depth = 1;
    loop {
        let prefixes = piece.prefixes(depth);
        if prefixes.len() >= 8 * workers || depth >= piece.depth().min(4) {
            return prefixes;
        }
        depth += 1;
    }
}
