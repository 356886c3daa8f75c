use alloc::collections::BTreeMap;

use super::{enumerate_regions, recession_cone_dim, ArrangementError, ArrangementSpec, Region};
use crate::dyck;

/// Number of regions of each level `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelCensus {
    pub spec: ArrangementSpec,
    pub counts: BTreeMap<usize, u64>,
    pub total: u64,
}

impl LevelCensus {
    fn empty(spec: &ArrangementSpec) -> Self {
        let counts = (0..=spec.n()).map(|l| (l, 0)).collect();
        Self {
            spec: spec.clone(),
            counts,
            total: 0,
        }
    }

    fn add(&mut self, level: usize) {
        *self.counts.entry(level).or_insert(0) += 1;
        self.total += 1;
    }

    /// `r_l`, zero for levels that do not occur.
    pub fn count(&self, level: usize) -> u64 {
        self.counts.get(&level).copied().unwrap_or(0)
    }
}

fn region_level(region: &Region, use_oracle: bool) -> Result<usize, ArrangementError> {
    if region.spec().m() == 0 {
        return Ok(recession_cone_dim(region));
    }
    let model = dyck::level(region)?;
    if use_oracle {
        let oracle = recession_cone_dim(region);
        if oracle != model {
            return Err(ArrangementError::OracleMismatch {
                intervals: region.intervals().to_vec(),
                model,
                oracle,
            });
        }
    }
    Ok(model)
}

/// Census over already enumerated regions. Levels come from the Dyck
/// model; with `use_oracle` every region is also checked against its
/// recession-cone dimension. The braid arrangement only has the geometric
/// level.
pub fn census_from_regions(
    spec: &ArrangementSpec,
    regions: &[Region],
    use_oracle: bool,
) -> Result<LevelCensus, ArrangementError> {
    let mut census = LevelCensus::empty(spec);
    for r in regions {
        census.add(region_level(r, use_oracle)?);
    }
    Ok(census)
}

pub fn level_census(
    spec: &ArrangementSpec,
    use_oracle: bool,
) -> Result<LevelCensus, ArrangementError> {
    census_from_regions(spec, &enumerate_regions(spec)?, use_oracle)
}

/// Census restricted to regions inside `x_1 > ... > x_n`.
pub fn chamber_census(
    spec: &ArrangementSpec,
    regions: &[Region],
    use_oracle: bool,
) -> Result<LevelCensus, ArrangementError> {
    let mut census = LevelCensus::empty(spec);
    for r in regions.iter().filter(|r| r.in_fundamental_chamber()) {
        census.add(region_level(r, use_oracle)?);
    }
    Ok(census)
}
