use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use alloc::collections::btree_map::Entry;
use alloc::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{CensusStore, VerificationReport, VerifyError};
use crate::arrangement::{char_poly_finite_field, ArrangementKind, ArrangementSpec};
use crate::bijection::{all_cycle_forms, phi, phi_inverse};
use crate::dyck::{all_words, level, word_string};
use crate::exactnum::{
    binomial, catalan_convolution, factorial, format_rational, mcat_level_closed_form,
    poly_interpolate, raney, stirling_table, CharPoly, Poly, Rational, Series, TruncatedEgf,
};
use crate::mcatalan::{
    enumerate_m_dyck, m_dyck_to_region, region_to_m_dyck, tableau_insert, tableau_to_tuple,
};

fn offsets_label(offsets: &[Rational]) -> String {
    let parts: Vec<String> = offsets.iter().map(format_rational).collect();
    format!("A={{{}}}", parts.join(","))
}

fn spec(
    n: usize,
    offsets: &[Rational],
    kind: ArrangementKind,
) -> Result<ArrangementSpec, VerifyError> {
    Ok(ArrangementSpec::new(n, offsets.to_vec(), kind)?)
}

fn at(v: &[BigInt], l: usize) -> BigInt {
    v.get(l).cloned().unwrap_or_default()
}

fn int(v: &BigInt) -> Rational {
    Rational::from_integer(v.clone())
}

/// `r_l(C_{n,A}) = Σ_k c(n,k) r_l(C*_{k,A})` and its inverse with signed
/// Stirling numbers of the second kind.
pub fn check_stirling_convolution(
    store: &mut CensusStore,
    offsets: &[Rational],
    n_max: usize,
) -> Result<VerificationReport, VerifyError> {
    let mut report =
        VerificationReport::new("stirling", format!("{} n<={n_max}", offsets_label(offsets)));
    let table = stirling_table(n_max);
    let mut cat = Vec::new();
    let mut semi = Vec::new();
    for n in 0..=n_max {
        cat.push(store.levels(&spec(n, offsets, ArrangementKind::Catalan)?)?);
        semi.push(store.levels(&spec(n, offsets, ArrangementKind::Semiorder)?)?);
    }
    for n in 0..=n_max {
        for l in 0..=n {
            let forward: BigInt = (0..=n).map(|k| table.first(n, k) * at(&semi[k], l)).sum();
            report.compare(
                || format!("n={n} l={l} catalan from semiorder"),
                &at(&cat[n], l),
                &forward,
            );
            let back: BigInt = (0..=n)
                .map(|k| {
                    let s = table.second(n, k) * at(&cat[k], l);
                    if (n - k) % 2 == 0 {
                        s
                    } else {
                        -s
                    }
                })
                .sum();
            report.compare(
                || format!("n={n} l={l} semiorder from catalan"),
                &at(&semi[n], l),
                &back,
            );
        }
    }
    Ok(report)
}

/// `r_{l1+l2}(A_n) = Σ_i C(n,i) r_{l1}(A_i) r_{l2}(A_{n-i})`.
pub fn check_binomial_identity(
    store: &mut CensusStore,
    offsets: &[Rational],
    kind: ArrangementKind,
    n_max: usize,
) -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport::new(
        "binomial",
        format!(
            "{} kind={} n<={n_max}",
            offsets_label(offsets),
            kind.as_str()
        ),
    );
    let mut r = Vec::new();
    for n in 0..=n_max {
        r.push(store.levels(&spec(n, offsets, kind)?)?);
    }
    for n in 0..=n_max {
        for l1 in 0..=n {
            for l2 in 0..=n - l1 {
                let rhs: BigInt = (0..=n)
                    .map(|i| binomial(n as i64, i as i64) * at(&r[i], l1) * at(&r[n - i], l2))
                    .sum();
                report.compare(
                    || format!("n={n} l1={l1} l2={l2}"),
                    &at(&r[n], l1 + l2),
                    &rhs,
                );
            }
        }
    }
    Ok(report)
}

/// `F_l = F_1^l` for the level EGFs, and for the Catalan type also the
/// per-chamber form: ordinary series of chamber counts satisfy
/// `G_l = G_1^l` and `r_l = n! r_{l,e}`.
pub fn check_egf_power(
    store: &mut CensusStore,
    offsets: &[Rational],
    kind: ArrangementKind,
    n_max: usize,
) -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport::new(
        "egf-power",
        format!(
            "{} kind={} n<={n_max}",
            offsets_label(offsets),
            kind.as_str()
        ),
    );
    let mut r = Vec::new();
    let mut e = Vec::new();
    for n in 0..=n_max {
        let s = spec(n, offsets, kind)?;
        r.push(store.levels(&s)?);
        if kind == ArrangementKind::Catalan {
            e.push(store.chamber_levels(&s)?);
        }
    }
    let column =
        |rows: &[Vec<BigInt>], l: usize| -> Vec<BigInt> { rows.iter().map(|v| at(v, l)).collect() };
    let f1 = TruncatedEgf::from_integers(&column(&r, 1), n_max);
    for l in 0..=n_max {
        let fl = f1.pow(l as i64)?;
        for (n, row) in r.iter().enumerate() {
            report.compare(
                || format!("F_{l} at n={n}"),
                &int(&at(row, l)),
                &fl.coeff(n),
            );
        }
    }
    if kind == ArrangementKind::Catalan {
        let to_series = |v: Vec<BigInt>| Series::new(v.iter().map(int).collect(), n_max);
        let g1 = to_series(column(&e, 1));
        for l in 0..=n_max {
            let gl = g1.pow(l as i64)?;
            for n in 0..=n_max {
                report.compare(
                    || format!("chamber G_{l} at n={n}"),
                    &int(&at(&e[n], l)),
                    &gl.coeff(n),
                );
                let scaled = factorial(n as u64) * at(&e[n], l);
                report.compare(
                    || format!("r_{l} = n! r_{{{l},e}} at n={n}"),
                    &at(&r[n], l),
                    &scaled,
                );
            }
        }
    }
    Ok(report)
}

/// `χ(t) = Σ_l (-1)^{n-l} r_l C(t, l)` with `χ` from finite-field counts.
pub fn check_charpoly_transition(
    store: &mut CensusStore,
    offsets: &[Rational],
    kind: ArrangementKind,
    n_max: usize,
) -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport::new(
        "charpoly",
        format!(
            "{} kind={} n<={n_max}",
            offsets_label(offsets),
            kind.as_str()
        ),
    );
    for n in 0..=n_max {
        let s = spec(n, offsets, kind)?;
        let chi = if n == 0 {
            CharPoly::new(alloc::vec![BigInt::one()])
        } else {
            char_poly_finite_field(&s)?
        };
        let r = store.levels(&s)?;
        let mut sum = Poly::new(Vec::new());
        for (l, rl) in r.iter().enumerate() {
            let sign = if (n - l) % 2 == 0 { int(rl) } else { -int(rl) };
            sum = sum.add(&Poly::binomial(l).scale(&sign));
        }
        report.compare(|| format!("n={n}"), &chi.to_poly(), &sum);
    }
    Ok(report)
}

/// Chamber census of `C_{n,[m]}` against the closed form, full census
/// against `n!` times it, totals against `n! A_n(m,1)`, and the ordinary
/// series of level-1 chamber counts against `1 - B_{m+1}(t)^{-1}`.
pub fn check_mcat_census(
    store: &mut CensusStore,
    n_max: usize,
    m: usize,
) -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport::new("mcat-census", format!("m={m} n<={n_max}"));
    let mut first = Vec::new();
    for n in 0..=n_max {
        let s = ArrangementSpec::integer_range(n, m, ArrangementKind::Catalan)?;
        let chamber = store.chamber_levels(&s)?;
        let full = store.levels(&s)?;
        let nf = factorial(n as u64);
        for l in 0..=n {
            let closed = mcat_level_closed_form(n as u64, m as u64, l as i64)?;
            report.compare(|| format!("n={n} l={l} chamber"), &at(&chamber, l), &closed);
            report.compare(
                || format!("n={n} l={l} full"),
                &at(&full, l),
                &(&nf * &closed),
            );
        }
        let total: BigInt = full.iter().sum();
        let expected = int(&nf) * raney(n as u64, m as u64, 1)?;
        report.compare(|| format!("n={n} total"), &int(&total), &expected);
        first.push(int(&at(&chamber, 1)));
    }
    let b = Series::generalized_binomial(m as i64 + 1, n_max);
    let g1 = Series::one(n_max).sub(&b.inverse()?)?;
    for (n, c) in first.iter().enumerate() {
        report.compare(|| format!("1 - B^-1 at n={n}"), c, &g1.coeff(n));
    }
    Ok(report)
}

/// Coefficients of `B_{m+1}(t)^l` against the Raney numbers, for
/// `1 <= m <= m_max` and `-l_max <= l <= l_max`. The single coefficient
/// with `n(m+1) + l = 0` has no closed form and is skipped.
pub fn check_raney_series(
    m_max: usize,
    l_max: usize,
    order: usize,
) -> Result<VerificationReport, VerifyError> {
    let mut report =
        VerificationReport::new("raney", format!("m<={m_max} |l|<={l_max} order={order}"));
    for m in 1..=m_max {
        let b = Series::generalized_binomial(m as i64 + 1, order);
        for l in -(l_max as i64)..=l_max as i64 {
            let p = b.pow(l)?;
            for n in 0..=order {
                if (n * (m + 1)) as i64 + l == 0 && n > 0 {
                    continue;
                }
                let closed = raney(n as u64, m as u64, l)?;
                report.compare(|| format!("m={m} l={l} n={n}"), &p.coeff(n), &closed);
            }
        }
    }
    Ok(report)
}

/// Coefficients of `(t C(t))^l` against the `l`-fold Catalan convolution.
pub fn check_catalan_convolution(
    l_max: usize,
    order: usize,
) -> Result<VerificationReport, VerifyError> {
    let mut report =
        VerificationReport::new("catalan-convolution", format!("l<={l_max} order={order}"));
    let tc = Series::t(order).mul(&Series::generalized_binomial(2, order))?;
    for l in 1..=l_max {
        let p = tc.pow(l as i64)?;
        for n in 0..=order {
            let closed = if n < l {
                BigInt::zero()
            } else {
                catalan_convolution(n as u64, l as i64)?
            };
            report.compare(|| format!("l={l} n={n}"), &p.coeff(n), &int(&closed));
        }
    }
    Ok(report)
}

/// `Φ` over every cycle form of `n` and every semiorder region of matching
/// dimension: levels are kept, `Φ^{-1}` undoes it, and the image is
/// exactly the set of Catalan-type regions.
pub fn check_phi_bijection(
    store: &mut CensusStore,
    offsets: &[Rational],
    n_max: usize,
) -> Result<VerificationReport, VerifyError> {
    let mut report =
        VerificationReport::new("phi", format!("{} n<={n_max}", offsets_label(offsets)));
    for n in 1..=n_max {
        let mut semi = BTreeMap::new();
        let mut images = Vec::new();
        for omega in all_cycle_forms(n) {
            let k = omega.len();
            if let Entry::Vacant(e) = semi.entry(k) {
                e.insert(store.regions(&spec(k, offsets, ArrangementKind::Semiorder)?)?);
            }
            for r in &semi[&k] {
                let d = phi(&omega, r)?;
                report.compare(
                    || format!("n={n} omega={omega} level"),
                    &level(&d)?,
                    &level(r)?,
                );
                let back = phi_inverse(&d)?;
                let ok = back.0 == omega && back.1 == *r;
                report.compare(|| format!("n={n} omega={omega} inverse"), &ok, &true);
                images.push(d);
            }
        }
        let mut all = store.regions(&spec(n, offsets, ArrangementKind::Catalan)?)?;
        all.sort();
        images.sort();
        report.compare(|| format!("n={n} image size"), &images.len(), &all.len());
        report.compare(
            || format!("n={n} image equals all regions"),
            &(images == all),
            &true,
        );
    }
    Ok(report)
}

/// The tableau map over `S_n x D_n^m`: injective, onto the regions of
/// `C_{n,[m]}`, inverted by `region_to_m_dyck`, and level equal to the
/// prime factors of `D_1`.
pub fn check_tableau_bijection(
    store: &mut CensusStore,
    n: usize,
    m: usize,
) -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport::new("tableau", format!("n={n} m={m}"));
    let paths = enumerate_m_dyck(n, m)?;
    let mut image = BTreeSet::new();
    let mut collisions = 0usize;
    for pi in all_words(&(0..n).collect::<Vec<_>>()) {
        for p in &paths {
            let region = m_dyck_to_region(p, &pi)?;
            let first = tableau_to_tuple(&tableau_insert(p)?)?.paths[0].prime_components();
            report.compare(
                || format!("pi={} heights={:?} level", word_string(&pi), p.heights()),
                &level(&region)?,
                &first,
            );
            let back = region_to_m_dyck(&region)?;
            let ok = back.0 == *p && back.1 == pi;
            report.compare(
                || format!("pi={} heights={:?} inverse", word_string(&pi), p.heights()),
                &ok,
                &true,
            );
            if !image.insert(region) {
                collisions += 1;
            }
        }
    }
    report.compare(|| "collisions".into(), &collisions, &0);
    let expected = factorial(n as u64) * mcat_total(n, m)?;
    report.compare(
        || "image size vs n! A_n(m,1)".into(),
        &BigInt::from(image.len()),
        &expected,
    );
    let all: BTreeSet<_> = store
        .regions(&ArrangementSpec::integer_range(
            n,
            m,
            ArrangementKind::Catalan,
        )?)?
        .into_iter()
        .collect();
    report.compare(|| "image equals all regions".into(), &(image == all), &true);
    Ok(report)
}

fn mcat_total(n: usize, m: usize) -> Result<BigInt, VerifyError> {
    Ok(raney(n as u64, m as u64, 1)?.to_integer())
}

/// Fits the interpolating polynomial through `(l, r_l(A_n))` for `l` in
/// `levels` (zero past `n`) and records its degree. Exploratory: the report
/// only fails if the fit cannot be computed.
pub fn probe_polynomiality(
    store: &mut CensusStore,
    offsets: &[Rational],
    kind: ArrangementKind,
    n: usize,
    levels: RangeInclusive<usize>,
) -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport::new(
        "polynomiality",
        format!(
            "{} kind={} n={n} l={}..={}",
            offsets_label(offsets),
            kind.as_str(),
            levels.start(),
            levels.end()
        ),
    );
    let r = store.levels(&spec(n, offsets, kind)?)?;
    let points: Vec<(Rational, Rational)> = levels
        .clone()
        .map(|l| (Rational::from_integer(l.into()), int(&at(&r, l))))
        .collect();
    let poly = poly_interpolate(&points)?;
    report.checked = points.len();
    let degree = poly.degree().map_or(-1, |d| d as i64);
    report.notes.push(format!("degree {degree}"));
    report.notes.push(format!(
        "{} points beyond the degree",
        points.len() as i64 - 1 - degree
    ));
    Ok(report)
}

/// Degree of the fitted polynomial from a probe report.
pub fn fitted_degree(report: &VerificationReport) -> Option<i64> {
    report
        .notes
        .iter()
        .find_map(|n| n.strip_prefix("degree ")?.parse().ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int as rint;
    use alloc::vec;

    fn one() -> Vec<Rational> {
        vec![rint(1)]
    }

    fn two_one() -> Vec<Rational> {
        vec![rint(2), rint(1)]
    }

    #[test]
    fn stirling() {
        let mut store = CensusStore::default();
        let r = check_stirling_convolution(&mut store, &one(), 4).unwrap();
        assert!(r.pass(), "{r}");
        let semi: Vec<BigInt> = (1..=4)
            .map(|n| {
                store
                    .levels(&spec(n, &one(), ArrangementKind::Semiorder).unwrap())
                    .unwrap()
                    .iter()
                    .sum()
            })
            .collect();
        assert_eq!(semi, [1, 3, 19, 183].map(BigInt::from));
        assert!(check_stirling_convolution(&mut store, &two_one(), 3)
            .unwrap()
            .pass());
    }

    #[test]
    fn binomial_and_egf() {
        let mut store = CensusStore::default();
        for kind in [ArrangementKind::Catalan, ArrangementKind::Semiorder] {
            let r = check_binomial_identity(&mut store, &one(), kind, 4).unwrap();
            assert!(r.pass(), "{r}");
            let r = check_egf_power(&mut store, &one(), kind, 4).unwrap();
            assert!(r.pass(), "{r}");
            assert!(check_egf_power(&mut store, &two_one(), kind, 3)
                .unwrap()
                .pass());
        }
    }

    #[test]
    fn charpoly() {
        let mut store = CensusStore::default();
        for kind in [ArrangementKind::Catalan, ArrangementKind::Semiorder] {
            for a in [one(), two_one()] {
                let r = check_charpoly_transition(&mut store, &a, kind, 3).unwrap();
                assert!(r.pass(), "{r}");
            }
        }
    }

    #[test]
    fn mcat_and_series() {
        let mut store = CensusStore::default();
        for (n, m) in [(4, 1), (3, 2), (2, 3)] {
            let r = check_mcat_census(&mut store, n, m).unwrap();
            assert!(r.pass(), "{r}");
        }
        assert!(check_raney_series(3, 4, 10).unwrap().pass());
        assert!(check_catalan_convolution(4, 10).unwrap().pass());
    }

    #[test]
    fn bijections() {
        let mut store = CensusStore::default();
        assert!(check_phi_bijection(&mut store, &one(), 3).unwrap().pass());
        for (n, m) in [(2, 1), (3, 1), (2, 2)] {
            let r = check_tableau_bijection(&mut store, n, m).unwrap();
            assert!(r.pass(), "{r}");
        }
    }

    #[test]
    fn failing_report_has_counterexample() {
        let mut r = VerificationReport::new("x", String::new());
        r.compare(|| "n=1".into(), &1, &1);
        r.compare(|| "n=2".into(), &2, &3);
        r.compare(|| "n=3".into(), &4, &5);
        let c = r.counterexample.clone().unwrap();
        assert_eq!(
            (c.at.as_str(), c.lhs.as_str(), c.rhs.as_str()),
            ("n=2", "2", "3")
        );
        assert_eq!(r.checked, 3);
        assert!(!r.pass());
    }

    #[test]
    fn mcat_polynomial_degree() {
        let mut store = CensusStore::default();
        for (n, m) in [(1, 1), (1, 3), (2, 1), (3, 1), (2, 2)] {
            let top = (m + 1) * n - 1;
            let spec = ArrangementSpec::integer_range(n, m, ArrangementKind::Catalan).unwrap();
            let r = probe_polynomiality(
                &mut store,
                spec.offsets(),
                ArrangementKind::Catalan,
                n,
                0..=top,
            )
            .unwrap();
            assert_eq!(fitted_degree(&r), Some((m * n) as i64), "n={n} m={m}");
        }
        let r = probe_polynomiality(
            &mut store,
            &[rint(3), rint(1)],
            ArrangementKind::Catalan,
            2,
            0..=4,
        )
        .unwrap();
        assert!(fitted_degree(&r).is_some());
    }

    #[test]
    fn store_is_merge_only() {
        let s = ArrangementSpec::integer_range(2, 1, ArrangementKind::Catalan).unwrap();
        let mut a = CensusStore::default();
        let mut b = CensusStore::default();
        let e = b.compute(&s).unwrap();
        let mut fake = e.clone();
        fake.full.total = 0;
        a.insert(e.clone());
        a.insert(fake);
        b.insert(e.clone());
        a.merge(b);
        assert_eq!(a.len(), 1);
        assert_eq!(a.get(&s).unwrap(), &e);
        assert_eq!(a.levels(&s.with_n(0)).unwrap(), vec![BigInt::one()]);
    }
}
