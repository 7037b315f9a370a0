use num_complex::Complex64;
use proptest::prelude::*;

use harmap::extremal::{build_extremal, ExtremalSpec};
use harmap::map::{check_class_membership, GridSpec};
use harmap::oracle::{extract_coefficients, parseval_mean, univalence_radius_search, OracleConfig};
use harmap::radii::{coefficient_bound, BoundVariant, ClassParams};
use harmap::{HarmonicMap, PowerSeries};

fn coeffs(len: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), len)
}

fn map_strategy() -> impl Strategy<Value = HarmonicMap> {
    (1usize..=16)
        .prop_flat_map(|n| (coeffs(n), coeffs(n)))
        .prop_map(|(a, b)| {
            let series = |v: &[(f64, f64)], lead: Option<f64>| {
                let mut c = vec![Complex64::default()];
                c.extend(
                    v.iter()
                        .enumerate()
                        .map(|(i, &(re, im))| Complex64::new(re, im) / (i + 1) as f64),
                );
                if let Some(l) = lead {
                    c[1] = Complex64::new(l, 0.0);
                }
                PowerSeries::new(c)
            };
            HarmonicMap::new(series(&a, Some(1.0)), series(&b, None), "prop")
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn extraction_recovers_coefficients(f in map_strategy()) {
        let n = f.degree();
        let (a, b) = extract_coefficients(|z| f.eval(z).unwrap(), 0.5, n, 4 * n.max(4)).unwrap();
        for k in 1..=n {
            prop_assert!((a[k] - f.h.coeff(k)).norm() < 1e-9);
            prop_assert!((b[k] - f.g.coeff(k)).norm() < 1e-9);
        }
    }

    #[test]
    fn parseval_agrees(f in map_strategy(), r in 0.05..0.95f64) {
        let (integral, series) = parseval_mean(&f, r, 4 * (f.degree() + 1)).unwrap();
        prop_assert!((integral - series).abs() < 1e-10);
    }

    #[test]
    fn fn_coefficient_is_cor4_bound(lambda in 1.01..5.0f64, n in 2usize..8) {
        let f = build_extremal(&ExtremalSpec::fn_map(lambda, n)).unwrap();
        let bound = coefficient_bound(BoundVariant::Cor4, 1.0, 0.0, lambda, n).unwrap();
        prop_assert!((f.h.coeff(n).norm() - bound).abs() <= 4.0 * f64::EPSILON * bound);
    }

    #[test]
    fn fn_conjecture_is_k_quasiregular(k in 1.0..4.0f64, lambda in 1.1..3.0f64, n in 2usize..5) {
        let spec = ExtremalSpec::fn_conjecture(k, lambda, n);
        let f = build_extremal(&spec).unwrap();
        let grid = GridSpec::new(8, 16, 0.8).unwrap();
        let rep = check_class_membership(&f, &ClassParams::new(k, 0.0), &grid).unwrap();
        prop_assert!(rep.k_quasiregular.holds);
        let bound = coefficient_bound(BoundVariant::Conjecture, k, 0.0, lambda, n).unwrap();
        let observed = f.h.coeff(n).norm() + f.g.coeff(n).norm();
        prop_assert!((observed - bound).abs() <= 4.0 * f64::EPSILON * bound);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn bracket_is_ordered_and_refines(c in 0.3..2.0f64, theta in 0.0..std::f64::consts::TAU) {
        // h' = 1 + 2 c e^{iθ} z vanishes at |z| = 1/(2c)
        let f = HarmonicMap::analytic(
            PowerSeries::new(vec![Complex64::default(), Complex64::new(1.0, 0.0), Complex64::from_polar(c, theta)]),
            "quadratic",
        );
        let coarse = OracleConfig { grid: GridSpec::new(24, 48, 0.9).unwrap(), ..Default::default() };
        let fine = OracleConfig { grid: GridSpec::new(48, 96, 0.9).unwrap(), ..Default::default() };
        let a = univalence_radius_search(&f, &coarse).unwrap();
        let b = univalence_radius_search(&f, &fine).unwrap();
        prop_assert!(a.lo <= a.hi && b.lo <= b.hi);
        prop_assert!(b.lo <= a.hi + 1e-6);
        let radius = 1.0 / (2.0 * c);
        if radius < 0.9 {
            prop_assert!(a.lo <= radius + 1e-12 && a.hi >= radius - 1e-12, "{a:?} vs {radius}");
        }
    }
}
