//! Thread-pool drivers and a cache that can be shared between workers.
//!
//! Every driver collects partial results in a fixed order before summing,
//! so the output does not depend on the number of threads.

use std::collections::HashMap;
use std::sync::Mutex;

use rayon::prelude::*;
use reltutte_core::canon::CanonicalKey;
use reltutte_core::dc::{relative_tutte_dc, unfold, EdgeSelection, MemoCache};
use reltutte_core::expansion::{expansion_term, splits, ExpansionError, ProperLabeling};
use reltutte_core::knot::{state_tally, BracketPoly, StateTally, VirtualDiagram};
use reltutte_core::psi::{Psi, PsiError};
use reltutte_core::{ColoredMultigraph, MultiPoly};

/// Environment variable bounding the number of memo entries.
pub const CACHE_LIMIT_VAR: &str = "REL_TUTTE_CACHE_LIMIT";

/// A memo table behind a mutex. Concurrent workers may compute the same
/// entry twice; the first insert wins and later ones are equal anyway.
#[derive(Debug, Default)]
pub struct SharedCache {
    map: Mutex<HashMap<CanonicalKey, MultiPoly>>,
    limit: Option<usize>,
}

impl SharedCache {
    pub fn new(limit: Option<usize>) -> Self {
        SharedCache { map: Mutex::default(), limit }
    }

    /// Reads the limit from [`CACHE_LIMIT_VAR`]; unset means unbounded.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var(CACHE_LIMIT_VAR) {
            Ok(v) => v
                .trim()
                .parse()
                .map(|l| Self::new(Some(l)))
                .map_err(|_| format!("{CACHE_LIMIT_VAR} must be a nonnegative integer, got `{v}`")),
            Err(std::env::VarError::NotPresent) => Ok(Self::new(None)),
            Err(e) => Err(format!("{CACHE_LIMIT_VAR}: {e}")),
        }
    }

    pub fn len(&self) -> usize {
        self.map.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl MemoCache for SharedCache {
    fn get(&self, key: &CanonicalKey) -> Option<MultiPoly> {
        self.map.lock().expect("cache lock").get(key).cloned()
    }

    fn insert(&self, key: CanonicalKey, value: MultiPoly) {
        let mut m = self.map.lock().expect("cache lock");
        if self.limit.map_or(true, |l| m.len() < l) {
            m.entry(key).or_insert(value);
        }
    }
}

/// Runs `f` on a pool of `threads` workers; 0 or 1 runs inline.
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads <= 1 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
        .install(f)
}

fn unfold_depth(threads: usize) -> usize {
    (usize::BITS - threads.leading_zeros()) as usize + 3
}

/// The relative Tutte polynomial by deletion–contraction. With more than
/// one thread the top of the recursion is unfolded and the frontier is
/// evaluated in parallel.
pub fn relative_tutte<P: Psi + Sync + ?Sized>(
    g: &ColoredMultigraph,
    psi: &P,
    cache: &SharedCache,
    threads: usize,
) -> Result<MultiPoly, PsiError> {
    if threads <= 1 {
        return relative_tutte_dc(g, psi, &EdgeSelection::Default, cache);
    }
    let frontier = unfold(g, unfold_depth(threads));
    let parts: Vec<Result<MultiPoly, PsiError>> = with_threads(threads, || {
        frontier
            .par_iter()
            .map(|(c, h)| Ok(c * &relative_tutte_dc(h, psi, &EdgeSelection::Default, cache)?))
            .collect()
    });
    parts.into_iter().sum()
}

/// The contracting-set expansion with its terms computed in parallel.
pub fn relative_tutte_expansion<P: Psi + Sync + ?Sized>(
    g: &ColoredMultigraph,
    phi: &ProperLabeling,
    psi: &P,
    threads: usize,
) -> Result<MultiPoly, ExpansionError> {
    phi.validate(g)?;
    let all = splits(g)?;
    let parts: Vec<Result<MultiPoly, ExpansionError>> =
        with_threads(threads, || all.par_iter().map(|s| expansion_term(g, s, phi, psi)).collect());
    parts.into_iter().sum()
}

/// The state-sum bracket, split into index ranges.
pub fn state_sum_bracket(diag: &VirtualDiagram, threads: usize) -> BracketPoly {
    let total = diag.state_count();
    let chunks = (threads.max(1) as u64 * 8).min(total);
    let bounds: Vec<(u64, u64)> = (0..chunks).map(|i| (total * i / chunks, total * (i + 1) / chunks)).collect();
    let tallies: Vec<StateTally> =
        with_threads(threads, || bounds.par_iter().map(|&(a, b)| state_tally(diag, a..b)).collect());
    tallies.into_iter().fold(StateTally::default(), StateTally::merge).bracket()
}
