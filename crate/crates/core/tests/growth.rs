use seqforge_core::digitpow::{count_klm, enumerate_klm, KlmParams};
use seqforge_core::powersums::{completeness_window, counterexample_set, reciprocal_weight};
use seqforge_core::practical::{goldbach_exhaustive, practical_sieve};
use seqforge_core::Exec;

#[test]
fn twin_count_clears_desk_floor() {
    let t = practical_sieve(1_000_002).unwrap();
    let x = 1_000_000u64;
    let floor = x as f64 / (2.11 * (x as f64).ln().sqrt()).exp();
    assert!((floor - 392.0).abs() < 1.0, "floor {floor}");
    assert!(t.count_p2(x).unwrap() as f64 > floor);
}

#[test]
fn practical_count_between_log_bounds() {
    let t = practical_sieve(10_000_000).unwrap();
    let mut prev_density = f64::INFINITY;
    for e in 3..=7 {
        let x = 10u64.pow(e);
        let p = t.count_p(x).unwrap() as f64;
        let w = x as f64 / (x as f64).ln();
        assert!(0.5 * w < p && p < 3.0 * w, "x = {x}, P = {p}");
        let density = p / x as f64;
        assert!(density < prev_density);
        prev_density = density;
    }
}

#[test]
fn goldbach_holds_to_one_million() {
    let t = practical_sieve(1_000_000).unwrap();
    let s = goldbach_exhaustive(&t, 1_000_000, Exec::default()).unwrap();
    assert!(s.failures.is_empty());
    assert_eq!(s.checked, 500_000);
}

#[test]
fn klm_density_decreases() {
    let params = KlmParams::new(2, 1, 2).unwrap();
    let cps = [10_000, 100_000, 1_000_000, 10_000_000];
    let series = count_klm(&cps, params).unwrap();
    let ratios: Vec<f64> = cps.iter().map(|&n| series.at(n).unwrap() as f64 / n as f64).collect();
    assert!(ratios.windows(2).all(|w| w[1] < w[0]), "{ratios:?}");
}

#[test]
fn klm_count_matches_enumeration() {
    for params in [(2, 1, 2), (2, 3, 3), (3, 1, 2), (10, 1, 3)] {
        let params = KlmParams::new(params.0, params.1, params.2).unwrap();
        let list = enumerate_klm(200_000, params).unwrap();
        let cps = [1, 17, 1000, 65_536, 65_537, 200_000];
        let series = count_klm(&cps, params).unwrap();
        for n in cps {
            let expected = list.iter().filter(|&&v| v <= n).count() as u64;
            assert_eq!(series.at(n), Some(expected), "{params} at {n}");
        }
    }
}

#[test]
fn seven_family_is_light_and_eventually_complete() {
    let ps = counterexample_set(7, 1, 400).unwrap();
    assert!(reciprocal_weight(ps.bases()).unwrap() < 1.0);
    let r = completeness_window(&ps, 1_000_000).unwrap();
    assert!(r.covered_from.is_some());
}
