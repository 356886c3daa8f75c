use catlevel_core::arrangement::{char_poly_finite_field, ArrangementKind, ArrangementSpec};
use catlevel_core::exactnum::{int, CharPoly};
use catlevel_core::verify::{
    check_binomial_identity, check_catalan_convolution, check_charpoly_transition, check_egf_power,
    check_mcat_census, check_phi_bijection, check_raney_series, check_stirling_convolution,
    check_tableau_bijection, CensusStore, VerificationReport,
};
use catlevel_core::Rational;
use num_bigint::BigInt;

use ArrangementKind::{Catalan, Semiorder};

fn offset_sets() -> [Vec<Rational>; 2] {
    [vec![int(1)], vec![int(2), int(1)]]
}

#[track_caller]
fn assert_pass(report: VerificationReport) {
    assert!(report.pass(), "{report}");
    assert!(report.checked > 0, "{report}");
}

#[test]
fn stirling_convolution() {
    let mut store = CensusStore::default();
    for offsets in offset_sets() {
        assert_pass(check_stirling_convolution(&mut store, &offsets, 4).unwrap());
    }
    let totals: Vec<u64> = (1..=4)
        .map(|n| {
            let s = ArrangementSpec::new(n, vec![int(1)], Semiorder).unwrap();
            store.get(&s).unwrap().full.total
        })
        .collect();
    assert_eq!(totals, [1, 3, 19, 183]);
}

#[test]
fn binomial_and_egf() {
    let mut store = CensusStore::default();
    for kind in [Catalan, Semiorder] {
        assert_pass(check_binomial_identity(&mut store, &[int(1)], kind, 4).unwrap());
        for offsets in offset_sets() {
            assert_pass(check_egf_power(&mut store, &offsets, kind, 4).unwrap());
        }
    }
}

#[test]
fn characteristic_polynomials() {
    let mut store = CensusStore::default();
    for kind in [Catalan, Semiorder] {
        for offsets in offset_sets() {
            assert_pass(check_charpoly_transition(&mut store, &offsets, kind, 3).unwrap());
        }
    }
    let chi = |kind| {
        char_poly_finite_field(&ArrangementSpec::new(2, vec![int(1)], kind).unwrap()).unwrap()
    };
    let poly = |c: [i64; 3]| CharPoly::new(c.iter().map(|&v| BigInt::from(v)).collect());
    assert_eq!(chi(Catalan), poly([0, -3, 1]));
    assert_eq!(chi(Semiorder), poly([0, -2, 1]));
    assert_eq!(chi(Catalan).to_string(), "t^2 - 3t");
}

#[test]
fn m_catalan_levels() {
    let mut store = CensusStore::default();
    for (n_max, m) in [(4, 1), (3, 2), (2, 3)] {
        assert_pass(check_mcat_census(&mut store, n_max, m).unwrap());
    }
    let s = ArrangementSpec::integer_range(3, 1, Catalan).unwrap();
    assert_eq!(
        store.chamber_levels(&s).unwrap(),
        [0, 2, 2, 1].map(BigInt::from)
    );
}

#[test]
fn tableau_bijection() {
    let mut store = CensusStore::default();
    for (n, m) in [(2, 1), (3, 1), (2, 2), (3, 2)] {
        assert_pass(check_tableau_bijection(&mut store, n, m).unwrap());
    }
}

#[test]
fn phi_bijection() {
    let mut store = CensusStore::default();
    assert_pass(check_phi_bijection(&mut store, &[int(1)], 4).unwrap());
}

#[test]
fn series_identities() {
    assert_pass(check_raney_series(3, 4, 10).unwrap());
    assert_pass(check_catalan_convolution(10, 10).unwrap());
}
