use pfib_core::geometry::{area, inner_points, pick_report, semiperimeter};
use pfib_core::oracle::{
    brute_force_area_distribution, brute_force_generating_series, lattice_stats, Statistic,
};
use pfib_core::series::{area_counts, series_f_dp, series_g_dp};
use pfib_core::words::enumerate_words;

#[test]
fn closed_form_statistics_match_lattice_counts() {
    for p in 1..=4u8 {
        for n in 1..=9 {
            for w in enumerate_words(p, n).unwrap() {
                let lattice = lattice_stats(&w);
                assert_eq!(lattice.area, area(&w), "{w}");
                assert_eq!(lattice.sper, semiperimeter(&w), "{w}");
                assert_eq!(lattice.inn, inner_points(&w), "{w}");
                assert_eq!(lattice, pick_report(&w));
            }
        }
    }
}

#[test]
fn brute_force_series_match_transfer() {
    for p in 1..=4u8 {
        let f = brute_force_generating_series(p, 9, Statistic::AreaPerimeter).unwrap();
        let g = brute_force_generating_series(p, 9, Statistic::InnerPoints).unwrap();
        assert_eq!(f, series_f_dp(p, 9).unwrap(), "F_{p}");
        assert_eq!(g, series_g_dp(p, 9).unwrap(), "G_{p}");
    }
}

#[test]
fn area_distribution_matches_recurrence() {
    for p in 1..=6u8 {
        let brute = brute_force_area_distribution(p, 30).unwrap();
        let rec = area_counts(p, 30).unwrap();
        for (b, r) in brute.iter().zip(&rec) {
            assert_eq!(num_bigint::BigUint::from(*b), *r);
        }
    }
}
