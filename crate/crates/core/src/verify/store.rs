use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::arrangement::{
    census_from_regions, chamber_census, enumerate_regions, ArrangementError, ArrangementKind,
    ArrangementSpec, LevelCensus, Region,
};
use crate::exactnum::Rational;

/// Region enumeration used to fill the store.
pub type Enumerator =
    dyn Fn(&ArrangementSpec) -> Result<Vec<Region>, ArrangementError> + Send + Sync;

/// Full and fundamental-chamber censuses of one arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    pub full: LevelCensus,
    pub chamber: LevelCensus,
}

type Key = (ArrangementKind, usize, Vec<Rational>);

/// Censuses memoized by `(kind, n, offsets)`. Inserts never overwrite, so
/// stores filled independently can be merged in any order.
pub struct CensusStore {
    use_oracle: bool,
    enumerate: Box<Enumerator>,
    entries: BTreeMap<Key, CensusEntry>,
}

impl Default for CensusStore {
    fn default() -> Self {
        Self::new(false)
    }
}

fn key(spec: &ArrangementSpec) -> Key {
    (spec.kind(), spec.n(), spec.offsets().to_vec())
}

/// `n = 0` has a single region of level 0.
fn trivial(spec: &ArrangementSpec) -> CensusEntry {
    let full = LevelCensus {
        spec: spec.clone(),
        counts: [(0, 1)].into_iter().collect(),
        total: 1,
    };
    CensusEntry {
        chamber: full.clone(),
        full,
    }
}

impl CensusStore {
    /// With `use_oracle`, every region's level is cross-checked against
    /// its recession cone.
    pub fn new(use_oracle: bool) -> Self {
        Self::with_enumerator(use_oracle, Box::new(enumerate_regions))
    }

    pub fn with_enumerator(use_oracle: bool, enumerate: Box<Enumerator>) -> Self {
        Self {
            use_oracle,
            enumerate,
            entries: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, spec: &ArrangementSpec) -> bool {
        self.entries.contains_key(&key(spec))
    }

    /// Computes an entry without touching the store.
    pub fn compute(&self, spec: &ArrangementSpec) -> Result<CensusEntry, ArrangementError> {
        if spec.n() == 0 {
            return Ok(trivial(spec));
        }
        let regions = (self.enumerate)(spec)?;
        Ok(CensusEntry {
            full: census_from_regions(spec, &regions, self.use_oracle)?,
            chamber: chamber_census(spec, &regions, self.use_oracle)?,
        })
    }

    /// Keeps an existing entry if there is one.
    pub fn insert(&mut self, entry: CensusEntry) {
        self.entries.entry(key(&entry.full.spec)).or_insert(entry);
    }

    pub fn merge(&mut self, other: CensusStore) {
        for (_, e) in other.entries {
            self.insert(e);
        }
    }

    pub fn get(&mut self, spec: &ArrangementSpec) -> Result<&CensusEntry, ArrangementError> {
        let k = key(spec);
        if !self.entries.contains_key(&k) {
            let e = self.compute(spec)?;
            self.entries.insert(k.clone(), e);
        }
        Ok(&self.entries[&k])
    }

    /// Regions through the store's enumerator; not memoized.
    pub fn regions(&self, spec: &ArrangementSpec) -> Result<Vec<Region>, ArrangementError> {
        (self.enumerate)(spec)
    }

    /// `r_0, ..., r_n`.
    pub fn levels(&mut self, spec: &ArrangementSpec) -> Result<Vec<BigInt>, ArrangementError> {
        let c = &self.get(spec)?.full;
        Ok((0..=spec.n()).map(|l| BigInt::from(c.count(l))).collect())
    }

    /// `r_{0,e}, ..., r_{n,e}` inside `x_1 > ... > x_n`.
    pub fn chamber_levels(
        &mut self,
        spec: &ArrangementSpec,
    ) -> Result<Vec<BigInt>, ArrangementError> {
        let c = &self.get(spec)?.chamber;
        Ok((0..=spec.n()).map(|l| BigInt::from(c.count(l))).collect())
    }
}
