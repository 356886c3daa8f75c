//! JSON and CSV encodings of regions, censuses, Dyck tuples, tableaux,
//! m-Dyck paths and verification reports.
//!
//! Rationals are `"p/q"` strings (integers without a denominator), and
//! coordinate indices, labels and levels are 1-based as in one-line
//! notation.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use catlevel_core::arrangement::{
    region_of_point, ArrangementKind, ArrangementSpec, LevelCensus, Region,
};
use catlevel_core::dyck::DyckTuple;
use catlevel_core::exactnum::{format_rational, parse_rational, Rational};
use catlevel_core::mcatalan::{MDyckPath, YoungTableau};
use catlevel_core::verify::VerificationReport;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub fn kind_name(kind: ArrangementKind) -> &'static str {
    kind.as_str()
}

pub fn parse_kind(s: &str) -> Result<ArrangementKind, CliError> {
    match s {
        "catalan" => Ok(ArrangementKind::Catalan),
        "semiorder" => Ok(ArrangementKind::Semiorder),
        _ => Err(CliError::Usage(format!("unknown kind {s:?}"))),
    }
}

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn parse_rationals(v: &[String]) -> Result<Vec<Rational>, CliError> {
    v.iter()
        .map(|s| parse_rational(s).map_err(|e| CliError::Format(e.to_string())))
        .collect()
}

/// Comma-separated rationals, e.g. `2,1` or `3/2,1/2`. Offsets may be empty
/// (braid arrangement).
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| parse_rational(t).map_err(|e| CliError::Usage(e.to_string())))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecJson {
    pub n: usize,
    pub kind: String,
    pub offsets: Vec<String>,
}

impl SpecJson {
    pub fn from_spec(spec: &ArrangementSpec) -> Self {
        Self {
            n: spec.n(),
            kind: kind_name(spec.kind()).into(),
            offsets: rationals(spec.offsets()),
        }
    }

    pub fn to_spec(&self) -> Result<ArrangementSpec, CliError> {
        ArrangementSpec::new(
            self.n,
            parse_rationals(&self.offsets)?,
            parse_kind(&self.kind)?,
        )
        .map_err(|e| CliError::Format(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalJson {
    pub pair: [usize; 2],
    /// Open bounds on `x_i - x_j`; `null` is unbounded.
    pub interval: [Option<String>; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionJson {
    pub intervals: Vec<IntervalJson>,
    pub witness: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<usize>,
}

impl RegionJson {
    pub fn from_region(region: &Region, level: Option<usize>) -> Self {
        let intervals = region
            .spec()
            .pairs()
            .into_iter()
            .map(|(i, j)| {
                let (lo, hi) = region.bounds(i, j);
                IntervalJson {
                    pair: [i + 1, j + 1],
                    interval: [
                        lo.as_ref().map(format_rational),
                        hi.as_ref().map(format_rational),
                    ],
                }
            })
            .collect();
        Self {
            intervals,
            witness: rationals(region.witness()),
            level,
        }
    }

    /// Rebuilds the region from its witness and checks the stored
    /// intervals against it.
    pub fn to_region(&self, spec: &ArrangementSpec) -> Result<Region, CliError> {
        let x = parse_rationals(&self.witness)?;
        let region = region_of_point(spec, &x).map_err(|e| CliError::Format(e.to_string()))?;
        if RegionJson::from_region(&region, self.level).intervals != self.intervals {
            return Err(CliError::Format(
                "stored intervals disagree with the witness".into(),
            ));
        }
        Ok(region)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionsJson {
    #[serde(flatten)]
    pub spec: SpecJson,
    pub regions: Vec<RegionJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusJson {
    #[serde(flatten)]
    pub spec: SpecJson,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub per_chamber: bool,
    /// Level to count; level 0 only appears when it is nonzero.
    pub counts: BTreeMap<usize, u64>,
    pub total: u64,
}

impl CensusJson {
    pub fn from_census(census: &LevelCensus, per_chamber: bool) -> Self {
        let counts = census
            .counts
            .iter()
            .filter(|&(&l, &c)| l > 0 || c > 0)
            .map(|(&l, &c)| (l, c))
            .collect();
        Self {
            spec: SpecJson::from_spec(&census.spec),
            per_chamber,
            counts,
            total: census.total,
        }
    }

    pub fn to_census(&self) -> Result<LevelCensus, CliError> {
        let spec = self.spec.to_spec()?;
        let mut counts: BTreeMap<usize, u64> = (0..=spec.n()).map(|l| (l, 0)).collect();
        counts.extend(self.counts.iter().map(|(&l, &c)| (l, c)));
        if counts.values().sum::<u64>() != self.total {
            return Err(CliError::Format("counts do not add up to the total".into()));
        }
        Ok(LevelCensus {
            spec,
            counts,
            total: self.total,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleJson {
    pub label: Vec<usize>,
    pub alphas: Vec<Vec<usize>>,
}

impl TupleJson {
    pub fn from_tuple(t: &DyckTuple) -> Self {
        Self {
            label: t.label.iter().map(|v| v + 1).collect(),
            alphas: t.paths.iter().map(|p| p.alphas().to_vec()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MDyckJson {
    pub n: usize,
    pub m: usize,
    pub heights: Vec<usize>,
}

impl MDyckJson {
    pub fn from_path(p: &MDyckPath) -> Self {
        Self {
            n: p.n(),
            m: p.m(),
            heights: p.heights().to_vec(),
        }
    }

    pub fn to_path(&self) -> Result<MDyckPath, CliError> {
        if self.heights.len() != self.n {
            return Err(CliError::Format("heights length differs from n".into()));
        }
        MDyckPath::new(self.m, self.heights.clone()).map_err(|e| CliError::Format(e.to_string()))
    }
}

/// Row-major grid with `null` for empty cells.
pub fn tableau_json(t: &YoungTableau) -> Vec<Vec<Option<usize>>> {
    t.grid()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleJson {
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub name: String,
    pub params: String,
    pub pass: bool,
    pub checked: usize,
    pub counterexample: Option<CounterexampleJson>,
    pub notes: Vec<String>,
}

impl ReportJson {
    pub fn from_report(r: &VerificationReport) -> Self {
        Self {
            name: r.name.clone(),
            params: r.params.clone(),
            pass: r.pass(),
            checked: r.checked,
            counterexample: r.counterexample.as_ref().map(|c| CounterexampleJson {
                at: c.at.clone(),
                lhs: c.lhs.clone(),
                rhs: c.rhs.clone(),
            }),
            notes: r.notes.clone(),
        }
    }
}

/// One CSV row per level: `kind,n,offsets,level,count`. Offsets are
/// joined with `;`.
pub fn write_census_csv<W: Write>(out: W, censuses: &[LevelCensus]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["kind", "n", "offsets", "level", "count"])?;
    for c in censuses {
        let offsets = rationals(c.spec.offsets()).join(";");
        for (l, count) in &c.counts {
            w.write_record([
                kind_name(c.spec.kind()).to_string(),
                c.spec.n().to_string(),
                offsets.clone(),
                l.to_string(),
                count.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn read_census_csv<R: Read>(input: R) -> Result<Vec<LevelCensus>, CliError> {
    let mut r = csv::Reader::from_reader(input);
    let mut out: Vec<LevelCensus> = Vec::new();
    for row in r.records() {
        let row = row?;
        if row.len() != 5 {
            return Err(CliError::Format(format!(
                "expected 5 columns, got {}",
                row.len()
            )));
        }
        let field = |i: usize| -> Result<usize, CliError> {
            row[i]
                .parse()
                .map_err(|_| CliError::Format(format!("bad number {:?}", &row[i])))
        };
        let offsets: Vec<String> = row[2]
            .split(';')
            .filter(|s| !s.is_empty())
            .map(str::to_string)
            .collect();
        let spec = SpecJson {
            n: field(1)?,
            kind: row[0].to_string(),
            offsets,
        }
        .to_spec()?;
        let (level, count) = (field(3)?, field(4)? as u64);
        match out.last_mut() {
            Some(c) if c.spec == spec => {
                c.counts.insert(level, count);
                c.total += count;
            }
            _ => out.push(LevelCensus {
                spec,
                counts: [(level, count)].into_iter().collect(),
                total: count,
            }),
        }
    }
    Ok(out)
}
