use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::OracleConfig;
use crate::error::{Error, Result};
use crate::extremal::{build_extremal, ExtremalSpec};
use crate::map::{circle_points, HarmonicMap, MARGIN_SLACK};
use crate::radii::{coefficient_bound, BoundVariant};
use crate::series::PowerSeries;

/// Margin above the conjectured bound that counts as a counterexample.
pub const COUNTEREXAMPLE_TOL: f64 = 1e-9;

/// Degree of the random dilatation polynomial `w`.
const DILATATION_DEGREE: usize = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub k: f64,
    pub lambda_big: f64,
    pub n: usize,
    /// Random samples drawn (the `F_n` witness is extra).
    pub samples: usize,
    /// Random samples that passed the class check on the grid.
    pub accepted: usize,
    /// `|a_n| + |b_n|` of the `F_n` witness.
    pub witness_value: f64,
    /// Largest `|a_n| + |b_n|` over accepted random samples, if any.
    pub max_random: Option<f64>,
    /// Index of the sample attaining `max_random`.
    pub max_random_index: Option<usize>,
    /// Largest value over the witness and accepted samples.
    pub max_observed: f64,
    pub conjectured_bound: f64,
    pub proven_bound: f64,
    /// `(sample index, value)` above the conjectured bound; the witness is
    /// never included because it attains the bound by construction.
    pub counterexamples: Vec<(usize, f64)>,
}

fn unit_disk_sample(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(
        rng.gen::<f64>().sqrt(),
        rng.gen_range(0.0..std::f64::consts::TAU),
    )
}

/// Draws one candidate `F = h + conj(g)` with `F(0) = 0`, `λ_F(0) = 1` and
/// `g' = w h'` for a polynomial `w` with `|w| <= (K-1)/(K+1)` on the disk.
///
/// The class condition `λ_F <= Λ` is not enforced here.
pub fn random_class_map(k: f64, lambda_big: f64, n: usize, rng: &mut ChaCha8Rng) -> HarmonicMap {
    let degree = n.max(8);
    let spread: f64 = rng.gen();
    // `f_n'` has coefficients of size `(Λ²-1) Λ^{-k}`
    let amplitude = lambda_big * lambda_big - 1.0;
    let mut dh = PowerSeries::zero(degree - 1);
    dh.set_coeff(0, Complex64::new(1.0, 0.0));
    for j in 1..degree {
        let c = unit_disk_sample(rng) * spread * amplitude * lambda_big.powi(-(j as i32));
        dh.set_coeff(j, c);
    }

    let kappa = rng.gen::<f64>() * (k - 1.0) / (k + 1.0);
    let raw: Vec<Complex64> = (0..=DILATATION_DEGREE)
        .map(|_| unit_disk_sample(rng))
        .collect();
    let total: f64 = raw.iter().map(|c| c.norm()).sum();
    let w = PowerSeries::new(
        raw.iter()
            .map(|c| {
                if total > 0.0 {
                    c * (kappa / total)
                } else {
                    Complex64::default()
                }
            })
            .collect(),
    );

    // λ_F(0) = |h'(0)| (1 - |w(0)|) = 1
    let scale = 1.0 / (1.0 - w.coeff(0).norm());
    let dh = dh.scale(Complex64::new(scale, 0.0));
    let dg = dh.mul_truncated(&w, degree - 1 + DILATATION_DEGREE);
    HarmonicMap::new(dh.antiderivative(), dg.antiderivative(), "random")
}

/// `λ_F <= Λ`, `J_F > 0` and `Λ_F <= K λ_F` on the closed-disk grid
/// `{ (j/R) e^{iθ} }`, `j = 0..=R`.
fn in_class(f: &HarmonicMap, k: f64, lambda_big: f64, cfg: &OracleConfig) -> bool {
    let d = f.derivatives();
    let radial = cfg.grid.radial_steps;
    (0..=radial).all(|j| {
        let r = j as f64 / radial as f64;
        let m = if j == 0 { 1 } else { cfg.grid.angular_steps };
        circle_points(r, m).all(|z| {
            let s = d.sample(z);
            s.jacobian > 0.0
                && s.lambda_small <= lambda_big * (1.0 + MARGIN_SLACK)
                && s.lambda_big <= k * s.lambda_small * (1.0 + MARGIN_SLACK)
        })
    })
}

fn coefficient_sum(f: &HarmonicMap, n: usize) -> f64 {
    f.h.coeff(n).norm() + f.g.coeff(n).norm()
}

/// Random search for maps exceeding the conjectured sharp bound on `|a_n| + |b_n|`.
///
/// Sample `i` is drawn from its own stream of a ChaCha generator seeded with
/// `cfg.seed`, so reports do not depend on scheduling.
pub fn conjecture_scan(
    k: f64,
    lambda_big: f64,
    n: usize,
    cfg: &OracleConfig,
) -> Result<ScanReport> {
    const CTX: &str = "conjecture scan";
    cfg.validate()?;
    if !(k.is_finite() && k >= 1.0) {
        return Err(Error::inadmissible(CTX, format!("K >= 1 (got K = {k})")));
    }
    if !(lambda_big.is_finite() && lambda_big > 1.0) {
        return Err(Error::inadmissible(
            CTX,
            format!("Lambda > 1 (got Lambda = {lambda_big})"),
        ));
    }
    if n < 2 {
        return Err(Error::inadmissible(CTX, format!("n >= 2 (got n = {n})")));
    }
    let conjectured_bound = coefficient_bound(BoundVariant::Conjecture, k, 0.0, lambda_big, n)?;
    let proven_bound = coefficient_bound(BoundVariant::Cor4, k, 0.0, lambda_big, n)?;
    let witness = build_extremal(&ExtremalSpec::fn_conjecture(k, lambda_big, n))?;
    let witness_value = coefficient_sum(&witness, n);

    let values: Vec<Option<f64>> = (0..cfg.samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(i as u64);
            let f = random_class_map(k, lambda_big, n, &mut rng);
            in_class(&f, k, lambda_big, cfg).then(|| coefficient_sum(&f, n))
        })
        .collect();

    let mut accepted = 0;
    let mut best: Option<(usize, f64)> = None;
    let mut counterexamples = Vec::new();
    for (i, v) in values.iter().enumerate() {
        let Some(v) = *v else { continue };
        accepted += 1;
        if best.map_or(true, |(_, b)| v > b) {
            best = Some((i, v));
        }
        if v > conjectured_bound + COUNTEREXAMPLE_TOL {
            counterexamples.push((i, v));
        }
    }
    let max_random = best.map(|(_, v)| v);
    Ok(ScanReport {
        k,
        lambda_big,
        n,
        samples: cfg.samples,
        accepted,
        witness_value,
        max_random,
        max_random_index: best.map(|(i, _)| i),
        max_observed: max_random.map_or(witness_value, |v| v.max(witness_value)),
        conjectured_bound,
        proven_bound,
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::GridSpec;

    fn cfg(samples: usize, seed: u64) -> OracleConfig {
        OracleConfig {
            grid: GridSpec::new(16, 32, 0.9).unwrap(),
            samples,
            seed,
            ..Default::default()
        }
    }

    #[test]
    fn witness_attains_conjectured_bound() {
        let rep = conjecture_scan(2.0, 2.0, 2, &cfg(200, 7)).unwrap();
        assert_eq!(rep.conjectured_bound, 1.5);
        assert_eq!(rep.proven_bound, 1.875);
        assert!((rep.witness_value - 1.5).abs() < 1e-15);
        assert!(rep.max_observed <= rep.proven_bound + 1e-9);
        assert!(rep.accepted > 0);
    }

    #[test]
    fn k_one_bounds_coincide() {
        let rep = conjecture_scan(1.0, 2.0, 3, &cfg(200, 3)).unwrap();
        assert_eq!(rep.conjectured_bound, rep.proven_bound);
        assert!(rep.counterexamples.is_empty());
    }

    #[test]
    fn deterministic() {
        let a = conjecture_scan(2.0, 1.5, 2, &cfg(100, 11)).unwrap();
        let b = conjecture_scan(2.0, 1.5, 2, &cfg(100, 11)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn random_maps_are_normalized() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let f = random_class_map(3.0, 2.0, 4, &mut rng);
            assert!(f.is_normalized());
            assert!((f.lambda_small_at_origin() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn rejects_bad_params() {
        assert!(conjecture_scan(0.5, 2.0, 2, &cfg(1, 0)).is_err());
        assert!(conjecture_scan(2.0, 1.0, 2, &cfg(1, 0)).is_err());
        assert!(conjecture_scan(2.0, 2.0, 1, &cfg(1, 0)).is_err());
    }
}
