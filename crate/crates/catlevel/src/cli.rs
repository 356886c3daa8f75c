//! Command-line entry point. Exit codes: 0 success, 1 verification
//! failure or runtime error, 2 usage error.

use std::ffi::OsString;
use std::io::Write;

use catlevel_core::arrangement::{
    char_poly_finite_field, recession_cone_dim, region_of_point, ArrangementKind, ArrangementSpec,
    EnumerationLimits, Region,
};
use catlevel_core::bijection::{phi, phi_inverse, CycleForm};
use catlevel_core::dyck::{dyck_tuple, level, parse_word, region_partition};
use catlevel_core::exactnum::format_rational;
use catlevel_core::mcatalan::{tableau_insert, tableau_to_tuple, MDyckPath};
use catlevel_core::verify::{self, CensusStore, VerificationReport};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::formats::{
    parse_rational_list, CensusJson, MDyckJson, RegionJson, RegionsJson, ReportJson, SpecJson,
    TupleJson,
};
use crate::parallel::{enumerate_regions_parallel, parallel_store, precompute};
use crate::render::{render_census, render_tableau, render_tuple};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "catlevel",
    version,
    about = "Regions by level of Catalan- and semiorder-type arrangements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Catalan,
    Semiorder,
}

impl From<Kind> for ArrangementKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Catalan => ArrangementKind::Catalan,
            Kind::Semiorder => ArrangementKind::Semiorder,
        }
    }
}

#[derive(Debug, Args)]
struct Arrangement {
    #[arg(long, value_enum, default_value = "catalan")]
    kind: Kind,
    /// Dimension.
    #[arg(long)]
    n: usize,
    /// Strictly decreasing positive rationals, e.g. `2,1` or `3/2,1/2`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    offsets: String,
}

impl Arrangement {
    fn spec(&self) -> Result<ArrangementSpec, CliError> {
        Ok(ArrangementSpec::new(
            self.n,
            parse_rational_list(&self.offsets)?,
            self.kind.into(),
        )?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Identity {
    Stirling,
    Binomial,
    Egf,
    Charpoly,
    Mcat,
    Raney,
    Phi,
    Tableau,
    Polynomiality,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of regions of each level.
    Census {
        #[command(flatten)]
        arrangement: Arrangement,
        /// Only regions inside x_1 > ... > x_n.
        #[arg(long)]
        per_chamber: bool,
        /// Check every level against the recession cone.
        #[arg(long)]
        use_oracle: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Every region with its witness point and level.
    Regions {
        #[command(flatten)]
        arrangement: Arrangement,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Characteristic polynomial by finite-field point counting.
    Charpoly {
        #[command(flatten)]
        arrangement: Arrangement,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check a counting identity against enumerated censuses.
    Verify {
        #[arg(value_enum)]
        identity: Identity,
        #[arg(long, default_value = "1")]
        offsets: String,
        /// Restrict to one kind; both kinds by default.
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        /// Number of offsets for the m-Catalan checks (`raney`: largest m).
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Largest power for `raney`.
        #[arg(long, default_value_t = 4)]
        l_max: usize,
        /// Series order for `raney`.
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Tableau insertion of an m-Dyck path and the region it labels.
    Tableau {
        #[arg(long)]
        m: usize,
        /// Height sequence h_1,...,h_n.
        #[arg(long)]
        heights: String,
        /// Label in one-line notation; identity by default.
        #[arg(long)]
        pi: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Map a cycle form and a semiorder region to a Catalan region and back.
    PhiDemo {
        #[arg(long, default_value = "1")]
        offsets: String,
        /// Cycle form such as `(43)(652)(71)`.
        #[arg(long)]
        omega: String,
        /// A point of the semiorder region, one coordinate per cycle.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Level and Dyck tuple of the region containing a point.
    Level {
        #[arg(long, value_enum, default_value = "catalan")]
        kind: Kind,
        #[arg(long, default_value = "1")]
        offsets: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Census {
            arrangement,
            per_chamber,
            use_oracle,
            format,
        } => {
            let spec = arrangement.spec()?;
            let entry = parallel_store(use_oracle).compute(&spec)?;
            let census = if per_chamber {
                entry.chamber
            } else {
                entry.full
            };
            match format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&CensusJson::from_census(&census, per_chamber))?
                )?,
                Format::Csv => crate::formats::write_census_csv(&mut *out, &[census])?,
                Format::Text => write!(out, "{}", render_census(&census, per_chamber))?,
            }
            Ok(0)
        }
        Command::Regions {
            arrangement,
            format,
        } => {
            let spec = arrangement.spec()?;
            let regions = enumerate_regions_parallel(&spec, EnumerationLimits::default())?;
            let levels = regions
                .iter()
                .map(region_level)
                .collect::<Result<Vec<_>, _>>()?;
            match format {
                Format::Json => {
                    let doc = RegionsJson {
                        spec: SpecJson::from_spec(&spec),
                        regions: regions
                            .iter()
                            .zip(&levels)
                            .map(|(r, &l)| RegionJson::from_region(r, Some(l)))
                            .collect(),
                    };
                    writeln!(out, "{}", serde_json::to_string(&doc)?)?;
                }
                Format::Text => {
                    for (i, (r, l)) in regions.iter().zip(&levels).enumerate() {
                        writeln!(
                            out,
                            "{:>6}  level {l}  x = ({})",
                            i + 1,
                            point_string(r.witness())
                        )?;
                    }
                    writeln!(out, "{} regions", regions.len())?;
                }
                Format::Csv => {
                    return Err(CliError::Usage("regions supports json and text".into()))
                }
            }
            Ok(0)
        }
        Command::Charpoly {
            arrangement,
            format,
        } => {
            let spec = arrangement.spec()?;
            let chi = char_poly_finite_field(&spec)?;
            match format {
                Format::Json => {
                    let coeffs: Vec<String> = chi.coeffs().iter().map(|c| c.to_string()).collect();
                    let doc = json!({
                        "n": spec.n(),
                        "kind": spec.kind().as_str(),
                        "offsets": SpecJson::from_spec(&spec).offsets,
                        "coefficients": coeffs,
                        "polynomial": chi.to_string(),
                    });
                    writeln!(out, "{doc}")?;
                }
                Format::Text => writeln!(out, "{chi}")?,
                Format::Csv => {
                    return Err(CliError::Usage("charpoly supports json and text".into()))
                }
            }
            Ok(0)
        }
        Command::Verify {
            identity,
            offsets,
            kind,
            n_max,
            m,
            l_max,
            order,
            format,
        } => {
            let offsets = parse_rational_list(&offsets)?;
            let kinds: Vec<ArrangementKind> = match kind {
                Some(k) => vec![k.into()],
                None => vec![ArrangementKind::Catalan, ArrangementKind::Semiorder],
            };
            let reports = run_checks(identity, &offsets, &kinds, n_max, m, l_max, order)?;
            for r in &reports {
                match format {
                    Format::Json => writeln!(
                        out,
                        "{}",
                        serde_json::to_string(&ReportJson::from_report(r))?
                    )?,
                    Format::Text => writeln!(out, "{r}")?,
                    Format::Csv => {
                        return Err(CliError::Usage("verify supports json and text".into()))
                    }
                }
            }
            Ok(if reports.iter().all(VerificationReport::pass) {
                0
            } else {
                1
            })
        }
        Command::Tableau {
            m,
            heights,
            pi,
            format,
        } => {
            let heights = parse_usize_list(&heights)?;
            let path = MDyckPath::new(m, heights)?;
            let n = path.n();
            let label = match pi {
                Some(w) => parse_word(&w)?,
                None => (0..n).collect(),
            };
            if label.len() != n {
                return Err(CliError::Usage(format!(
                    "label has {} letters, path has n = {n}",
                    label.len()
                )));
            }
            let t = tableau_insert(&path)?;
            let mut tuple = tableau_to_tuple(&t)?;
            tuple.label = label.clone();
            let region = catlevel_core::mcatalan::m_dyck_to_region(&path, &label)?;
            let l = level(&region)?;
            match format {
                Format::Json => {
                    let doc = json!({
                        "path": MDyckJson::from_path(&path),
                        "multiset": path.multiset(),
                        "tableau": crate::formats::tableau_json(&t),
                        "height_matrix": t.height_matrix(),
                        "tuple": TupleJson::from_tuple(&tuple),
                        "region": RegionJson::from_region(&region, Some(l)),
                    });
                    writeln!(out, "{doc}")?;
                }
                Format::Text => {
                    writeln!(out, "path {}  heights {:?}", path.steps(), path.heights())?;
                    writeln!(out, "tableau")?;
                    write!(out, "{}", render_tableau(&t))?;
                    writeln!(out, "H(T)")?;
                    for row in t.height_matrix() {
                        writeln!(out, "{row:?}")?;
                    }
                    write!(out, "{}", render_tuple(&tuple))?;
                    writeln!(
                        out,
                        "region witness ({}), level {l}",
                        point_string(region.witness())
                    )?;
                }
                Format::Csv => {
                    return Err(CliError::Usage("tableau supports json and text".into()))
                }
            }
            Ok(0)
        }
        Command::PhiDemo {
            offsets,
            omega,
            point,
            format,
        } => {
            let offsets = parse_rational_list(&offsets)?;
            let omega = parse_cycles(&omega)?;
            let x = parse_rational_list(&point)?;
            let semi = ArrangementSpec::new(x.len(), offsets, ArrangementKind::Semiorder)?;
            let small = region_of_point(&semi, &x)?;
            let delta = phi(&omega, &small)?;
            let back = phi_inverse(&delta)?;
            let round_trip = back.0 == omega && back.1 == small;
            let (l_small, l_delta) = (level(&small)?, level(&delta)?);
            match format {
                Format::Json => {
                    let doc = json!({
                        "omega": omega.to_string(),
                        "semiorder_region": RegionJson::from_region(&small, Some(l_small)),
                        "catalan_region": RegionJson::from_region(&delta, Some(l_delta)),
                        "partition": region_partition(&delta).to_string(),
                        "tuple": TupleJson::from_tuple(&dyck_tuple(&delta)),
                        "round_trip": round_trip,
                    });
                    writeln!(out, "{doc}")?;
                }
                Format::Text => {
                    writeln!(out, "omega {omega}")?;
                    writeln!(
                        out,
                        "semiorder region: x = ({}), level {l_small}",
                        point_string(small.witness())
                    )?;
                    writeln!(
                        out,
                        "catalan region:   y = ({}), level {l_delta}",
                        point_string(delta.witness())
                    )?;
                    writeln!(out, "partition {}", region_partition(&delta))?;
                    write!(out, "{}", render_tuple(&dyck_tuple(&delta)))?;
                    writeln!(
                        out,
                        "round trip {}",
                        if round_trip { "ok" } else { "FAILED" }
                    )?;
                }
                Format::Csv => {
                    return Err(CliError::Usage("phi-demo supports json and text".into()))
                }
            }
            Ok(if round_trip { 0 } else { 1 })
        }
        Command::Level {
            kind,
            offsets,
            point,
            format,
        } => {
            let x = parse_rational_list(&point)?;
            let spec = ArrangementSpec::new(x.len(), parse_rational_list(&offsets)?, kind.into())?;
            let region = region_of_point(&spec, &x)?;
            let geometric = recession_cone_dim(&region);
            let model = if spec.m() == 0 {
                None
            } else {
                Some(level(&region)?)
            };
            let agree = model.is_none_or(|l| l == geometric);
            match format {
                Format::Json => {
                    let tuple = (spec.m() > 0).then(|| TupleJson::from_tuple(&dyck_tuple(&region)));
                    let doc = json!({
                        "spec": SpecJson::from_spec(&spec),
                        "region": RegionJson::from_region(&region, Some(geometric)),
                        "level": model.unwrap_or(geometric),
                        "recession_dim": geometric,
                        "tuple": tuple,
                    });
                    writeln!(out, "{doc}")?;
                }
                Format::Text => {
                    match model {
                        Some(l) => {
                            writeln!(out, "level {l} (recession cone dimension {geometric})")?
                        }
                        None => writeln!(out, "level {geometric} (recession cone dimension)")?,
                    }
                    if spec.m() > 0 {
                        write!(out, "{}", render_tuple(&dyck_tuple(&region)))?;
                    }
                }
                Format::Csv => return Err(CliError::Usage("level supports json and text".into())),
            }
            Ok(if agree { 0 } else { 1 })
        }
    }
}

fn region_level(region: &Region) -> Result<usize, CliError> {
    if region.spec().m() == 0 {
        Ok(recession_cone_dim(region))
    } else {
        Ok(level(region)?)
    }
}

fn point_string(x: &[catlevel_core::Rational]) -> String {
    x.iter().map(format_rational).collect::<Vec<_>>().join(", ")
}

fn parse_usize_list(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Usage(format!("not a nonnegative integer: {t:?}")))
        })
        .collect()
}

/// 1-based letters, single digits run together or separated by spaces or
/// commas, as 0-based values.
fn parse_letters(s: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("malformed cycle {s:?}"));
    let values: Vec<usize> = if s.contains([' ', ',']) {
        s.split([' ', ','])
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect::<Result<_, _>>()?
    };
    values
        .into_iter()
        .map(|v| v.checked_sub(1).ok_or_else(bad))
        .collect()
}

/// Parses `(43)(652)(71)`; entries inside a cycle may also be separated by
/// spaces or commas for values above 9.
fn parse_cycles(s: &str) -> Result<CycleForm, CliError> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| CliError::Usage(format!("malformed cycle form {s:?}")))?;
        cycles.push(parse_letters(body.0.trim())?);
        rest = body.1.trim_start();
    }
    Ok(CycleForm::new(cycles)?)
}

fn spec_or_usage(
    n: usize,
    offsets: &[catlevel_core::Rational],
    kind: ArrangementKind,
) -> Result<ArrangementSpec, CliError> {
    Ok(ArrangementSpec::new(n, offsets.to_vec(), kind)?)
}

fn run_checks(
    identity: Identity,
    offsets: &[catlevel_core::Rational],
    kinds: &[ArrangementKind],
    n_max: usize,
    m: usize,
    l_max: usize,
    order: usize,
) -> Result<Vec<VerificationReport>, CliError> {
    let mut store = parallel_store(false);
    let needs_offsets = !matches!(
        identity,
        Identity::Mcat | Identity::Raney | Identity::Tableau
    );
    if needs_offsets {
        let both = [ArrangementKind::Catalan, ArrangementKind::Semiorder];
        let ks: &[ArrangementKind] = if matches!(identity, Identity::Stirling | Identity::All) {
            &both
        } else {
            kinds
        };
        let mut specs = Vec::new();
        for &k in ks {
            for n in 0..=n_max {
                specs.push(spec_or_usage(n, offsets, k)?);
            }
        }
        precompute(&mut store, &specs)?;
    }
    let mut reports = Vec::new();
    let s = &mut store;
    let per_kind = |s: &mut CensusStore,
                    f: fn(
        &mut CensusStore,
        &[catlevel_core::Rational],
        ArrangementKind,
        usize,
    ) -> Result<VerificationReport, verify::VerifyError>|
     -> Result<Vec<VerificationReport>, CliError> {
        kinds
            .iter()
            .map(|&k| f(s, offsets, k, n_max).map_err(CliError::from))
            .collect()
    };
    let all = identity == Identity::All;
    if all || identity == Identity::Stirling {
        reports.push(verify::check_stirling_convolution(s, offsets, n_max)?);
    }
    if all || identity == Identity::Binomial {
        reports.extend(per_kind(s, verify::check_binomial_identity)?);
    }
    if all || identity == Identity::Egf {
        reports.extend(per_kind(s, verify::check_egf_power)?);
    }
    if all || identity == Identity::Charpoly {
        reports.extend(per_kind(s, verify::check_charpoly_transition)?);
    }
    if all || identity == Identity::Mcat {
        reports.push(verify::check_mcat_census(s, n_max, m)?);
    }
    if all || identity == Identity::Raney {
        reports.push(verify::check_raney_series(m.max(1), l_max, order)?);
        reports.push(verify::check_catalan_convolution(l_max, order)?);
    }
    if all || identity == Identity::Phi {
        reports.push(verify::check_phi_bijection(s, offsets, n_max)?);
    }
    if all || identity == Identity::Tableau {
        for n in 1..=n_max {
            reports.push(verify::check_tableau_bijection(s, n, m.max(1))?);
        }
    }
    if all || identity == Identity::Polynomiality {
        for &k in kinds {
            for n in 1..=n_max {
                let top = (offsets.len() + 1) * n - 1;
                reports.push(verify::probe_polynomiality(s, offsets, k, n, 0..=top)?);
            }
        }
    }
    Ok(reports)
}
