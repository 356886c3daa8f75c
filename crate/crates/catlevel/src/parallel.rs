//! Region enumeration sharded over search-tree prefixes with rayon.

use std::sync::OnceLock;

use catlevel_core::arrangement::{
    ArrangementError, ArrangementSpec, EnumerationLimits, Region, RegionSearch,
};
use catlevel_core::verify::CensusStore;
use rayon::prelude::*;

/// Environment variable holding the worker count.
pub const THREADS_VAR: &str = "CATLEVEL_THREADS";

/// Worker count from `CATLEVEL_THREADS`, or rayon's default when unset or
/// unparsable.
pub fn worker_count() -> usize {
    std::env::var(THREADS_VAR)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&k| k > 0)
        .unwrap_or_else(rayon::current_num_threads)
}

fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(worker_count())
            .thread_name(|i| format!("catlevel-{i}"))
            .build()
            .expect("thread pool")
    })
}

/// Same output, in the same order, as the sequential enumeration. The
/// node limit applies to each shard.
pub fn enumerate_regions_parallel(
    spec: &ArrangementSpec,
    limits: EnumerationLimits,
) -> Result<Vec<Region>, ArrangementError> {
    let search = RegionSearch::new(spec, limits);
    let workers = pool().current_num_threads();
    if workers == 1 || search.pair_count() < 2 {
        return search.enumerate_subtree(&[]);
    }
    let mut depth = 1;
    let mut prefixes = search.prefixes(depth);
    while prefixes.len() < 8 * workers && depth < search.pair_count() - 1 {
        depth += 1;
        prefixes = search.prefixes(depth);
    }
    let shards: Vec<Vec<Region>> = pool().install(|| {
        prefixes
            .par_iter()
            .map(|p| search.enumerate_subtree(p))
            .collect::<Result<_, _>>()
    })?;
    Ok(shards.into_iter().flatten().collect())
}

/// Census store backed by the parallel enumerator.
pub fn parallel_store(use_oracle: bool) -> CensusStore {
    CensusStore::with_enumerator(
        use_oracle,
        Box::new(|spec| enumerate_regions_parallel(spec, EnumerationLimits::default())),
    )
}

/// Fills `store` with the censuses of `specs`, computing missing ones in
/// parallel.
pub fn precompute(
    store: &mut CensusStore,
    specs: &[ArrangementSpec],
) -> Result<(), ArrangementError> {
    let missing: Vec<&ArrangementSpec> = specs.iter().filter(|s| !store.contains(s)).collect();
    let shared = &*store;
    let entries: Vec<_> = pool().install(|| {
        missing
            .par_iter()
            .map(|s| shared.compute(s))
            .collect::<Result<_, _>>()
    })?;
    for e in entries {
        store.insert(e);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use catlevel_core::arrangement::{enumerate_regions, ArrangementKind};

    #[test]
    fn matches_sequential_order() {
        for (n, m, kind) in [
            (3, 1, ArrangementKind::Catalan),
            (4, 1, ArrangementKind::Semiorder),
            (3, 2, ArrangementKind::Catalan),
        ] {
            let spec = ArrangementSpec::integer_range(n, m, kind).unwrap();
            let par = enumerate_regions_parallel(&spec, EnumerationLimits::default()).unwrap();
            assert_eq!(par, enumerate_regions(&spec).unwrap());
        }
    }
}
