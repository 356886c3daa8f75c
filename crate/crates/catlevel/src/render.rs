//! Plain-text pictures of labeled Dyck paths, tuples, tableaux and
//! censuses.

use std::fmt::Write;

use catlevel_core::arrangement::LevelCensus;
use catlevel_core::dyck::{render, word_string, DyckTuple};
use catlevel_core::exactnum::format_rational;
use catlevel_core::mcatalan::YoungTableau;

/// Beyond this many coordinates grids are replaced by a summary.
pub const MAX_GRID: usize = 40;

/// One sign grid per path, `D_1` first. Wide tuples get one summary line
/// per path instead.
pub fn render_tuple(tuple: &DyckTuple) -> String {
    let n = tuple.label.len();
    let mut out = String::new();
    writeln!(out, "label {}", word_string(&tuple.label)).unwrap();
    for k in 1..=tuple.paths.len() {
        let d = &tuple.paths[k - 1];
        if n > MAX_GRID {
            let plus: usize = d.alphas().iter().sum();
            writeln!(
                out,
                "D_{k}: n={n}, {plus} plus signs, {} prime factors {:?}",
                d.prime_components(),
                d.prime_sizes()
            )
            .unwrap();
        } else {
            writeln!(out, "D_{k} ({} prime factors)", d.prime_components()).unwrap();
            out.push_str(&render(&tuple.labeled(k)));
        }
    }
    out
}

pub fn render_tableau(t: &YoungTableau) -> String {
    t.to_string()
}

pub fn render_census(c: &LevelCensus, per_chamber: bool) -> String {
    let offsets: Vec<String> = c.spec.offsets().iter().map(format_rational).collect();
    let mut out = String::new();
    writeln!(
        out,
        "{} n={} A={{{}}}{}",
        c.spec.kind().as_str(),
        c.spec.n(),
        offsets.join(","),
        if per_chamber {
            " (fundamental chamber)"
        } else {
            ""
        }
    )
    .unwrap();
    writeln!(out, "level  count").unwrap();
    for (l, count) in &c.counts {
        if *l > 0 || *count > 0 {
            writeln!(out, "{l:>5}  {count}").unwrap();
        }
    }
    writeln!(out, "total  {}", c.total).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use catlevel_core::dyck::DyckPath;

    #[test]
    fn all_minus_grid() {
        let t = DyckTuple::new(vec![0, 1, 2], vec![DyckPath::lowest(3)]).unwrap();
        let text = render_tuple(&t);
        assert!(text.contains("EEESSS"));
        assert_eq!(text.matches('-').count(), 9);
    }

    #[test]
    fn wide_tuples_are_summarised() {
        let n = MAX_GRID + 1;
        let t = DyckTuple::new((0..n).collect(), vec![DyckPath::lowest(n)]).unwrap();
        let text = render_tuple(&t);
        assert_eq!(text.lines().count(), 2);
        assert!(text.contains("1 prime factors [41]"));
    }
}
