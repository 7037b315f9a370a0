//! Harmonic mappings `f = h + conj(g)` on the unit disk and their pointwise
//! distortion functionals.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::radii::ClassParams;
use crate::series::{check_disk, PowerSeries};

/// Margins above `-MARGIN_SLACK * scale` count as satisfied. Boundary cases such
/// as `Λ_f = K λ_f` hold with equality and only differ by rounding.
pub const MARGIN_SLACK: f64 = 1e-12;

/// Tolerance used when deciding that a map is normalized (`f(0) = 0`).
pub const NORMALIZATION_TOL: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicMap {
    pub h: PowerSeries,
    pub g: PowerSeries,
    pub label: String,
}

impl HarmonicMap {
    /// Pairs two series, zero-padding the shorter one so both share the truncation degree.
    pub fn new(h: PowerSeries, g: PowerSeries, label: impl Into<String>) -> Self {
        let degree = h.degree().max(g.degree());
        HarmonicMap {
            h: h.with_degree(degree),
            g: g.with_degree(degree),
            label: label.into(),
        }
    }

    /// Analytic map `f = h` with `g ≡ 0`.
    pub fn analytic(h: PowerSeries, label: impl Into<String>) -> Self {
        let degree = h.degree();
        Self::new(h, PowerSeries::zero(degree), label)
    }

    pub fn identity() -> Self {
        Self::analytic(PowerSeries::from_real(&[0.0, 1.0]), "identity")
    }

    pub fn degree(&self) -> usize {
        self.h.degree()
    }

    /// `f(0) = h(0) + conj(g(0))`.
    pub fn value_at_origin(&self) -> Complex64 {
        self.h.coeff(0) + self.g.coeff(0).conj()
    }

    pub fn is_normalized(&self) -> bool {
        self.value_at_origin().norm() <= NORMALIZATION_TOL
    }

    pub fn ensure_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::NotNormalized {
                value: self.value_at_origin(),
            })
        }
    }

    /// `λ_f(0) = ||a_1| - |b_1||`.
    pub fn lambda_small_at_origin(&self) -> f64 {
        (self.h.coeff(1).norm() - self.g.coeff(1).norm()).abs()
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        check_disk(z)?;
        Ok(self.eval_unchecked(z))
    }

    pub(crate) fn eval_unchecked(&self, z: Complex64) -> Complex64 {
        self.h.eval_unchecked(z) + self.g.eval_unchecked(z).conj()
    }

    /// Cached derivative series for repeated pointwise evaluation.
    pub fn derivatives(&self) -> Derivatives {
        Derivatives {
            dh: self.h.derivative(),
            dg: self.g.derivative(),
        }
    }

    pub fn distortion_at(&self, z: Complex64) -> Result<DistortionSample> {
        check_disk(z)?;
        Ok(self.derivatives().sample(z))
    }
}

impl std::ops::Add for &HarmonicMap {
    type Output = HarmonicMap;
    fn add(self, rhs: &HarmonicMap) -> HarmonicMap {
        HarmonicMap::new(
            &self.h + &rhs.h,
            &self.g + &rhs.g,
            format!("{}+{}", self.label, rhs.label),
        )
    }
}

/// `h'` and `g'` of a harmonic map.
#[derive(Debug, Clone)]
pub struct Derivatives {
    pub dh: PowerSeries,
    pub dg: PowerSeries,
}

impl Derivatives {
    pub fn sample(&self, z: Complex64) -> DistortionSample {
        DistortionSample::from_derivatives(z, self.dh.eval_unchecked(z), self.dg.eval_unchecked(z))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistortionSample {
    pub z: Complex64,
    /// `|f_z| = |h'(z)|`
    pub fz_abs: f64,
    /// `|f_z̄| = |g'(z)|`
    pub fzbar_abs: f64,
    /// `Λ_f`
    pub lambda_big: f64,
    /// `λ_f`
    pub lambda_small: f64,
    /// `J_f = |h'|² - |g'|²`
    pub jacobian: f64,
}

impl DistortionSample {
    pub fn from_derivatives(z: Complex64, dh: Complex64, dg: Complex64) -> Self {
        let a = dh.norm();
        let b = dg.norm();
        DistortionSample {
            z,
            fz_abs: a,
            fzbar_abs: b,
            lambda_big: a + b,
            lambda_small: (a - b).abs(),
            // factored form of a² - b²; avoids cancellation when a ≈ b
            jacobian: (a + b) * (a - b),
        }
    }
}

/// Polar sampling grid `{ r_j e^{iθ_k} }` plus the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub radial_steps: usize,
    pub angular_steps: usize,
    pub max_radius: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            radial_steps: 64,
            angular_steps: 128,
            max_radius: 0.9,
        }
    }
}

impl GridSpec {
    pub fn new(radial_steps: usize, angular_steps: usize, max_radius: f64) -> Result<Self> {
        let grid = GridSpec {
            radial_steps,
            angular_steps,
            max_radius,
        };
        grid.validate()?;
        Ok(grid)
    }

    pub fn validate(&self) -> Result<()> {
        if self.radial_steps < 1 {
            return Err(Error::inadmissible("grid", "radial_steps >= 1"));
        }
        if self.angular_steps < 4 {
            return Err(Error::inadmissible("grid", "angular_steps >= 4"));
        }
        if !(self.max_radius > 0.0 && self.max_radius < 1.0) {
            return Err(Error::inadmissible("grid", "max_radius in (0, 1)"));
        }
        Ok(())
    }

    /// `r_j = max_radius * j / radial_steps` for `j = 1..=radial_steps`.
    pub fn radius(&self, j: usize) -> f64 {
        self.max_radius * j as f64 / self.radial_steps as f64
    }

    pub fn angle(&self, k: usize) -> f64 {
        2.0 * PI * k as f64 / self.angular_steps as f64
    }

    pub fn len(&self) -> usize {
        1 + self.radial_steps * self.angular_steps
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Point `index` in the order origin, then ring-major from the innermost ring.
    pub fn point(&self, index: usize) -> Complex64 {
        if index == 0 {
            return Complex64::default();
        }
        let i = index - 1;
        let j = i / self.angular_steps + 1;
        let k = i % self.angular_steps;
        Complex64::from_polar(self.radius(j), self.angle(k))
    }

    pub fn points(&self) -> Vec<Complex64> {
        (0..self.len()).map(|i| self.point(i)).collect()
    }
}

/// Samples `angular_steps` points on the circle of radius `r`, starting at angle 0.
pub fn circle_points(r: f64, m: usize) -> impl Iterator<Item = Complex64> {
    (0..m).map(move |k| Complex64::from_polar(r, 2.0 * PI * k as f64 / m as f64))
}

/// Outcome of one sampled inequality: the smallest margin and where it occurred.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarginCheck {
    pub holds: bool,
    pub worst_margin: f64,
    pub witness: Option<Complex64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassReport {
    pub grid: GridSpec,
    pub sense_preserving: MarginCheck,
    pub k_quasiregular: MarginCheck,
    pub elliptic: MarginCheck,
}

/// Smallest `(margin, index)` pair; ties resolve to the lower index so the
/// result does not depend on how the work was partitioned.
pub(crate) fn min_by_margin(a: (f64, usize), b: (f64, usize)) -> (f64, usize) {
    match a.0.total_cmp(&b.0) {
        std::cmp::Ordering::Less => a,
        std::cmp::Ordering::Greater => b,
        std::cmp::Ordering::Equal => {
            if a.1 <= b.1 {
                a
            } else {
                b
            }
        }
    }
}

/// Samples the class inequalities on `grid`.
///
/// * sense-preserving: `J_f > 0`
/// * K-quasiregular: `Λ_f <= K λ_f` (and sense-preserving)
/// * elliptic: `Λ_f² <= K J_f + K'`
///
/// Margins are reported raw; a `false` verdict carries the worst point.
pub fn check_class_membership(
    f: &HarmonicMap,
    params: &ClassParams,
    grid: &GridSpec,
) -> Result<ClassReport> {
    params.validate_distortion()?;
    grid.validate()?;
    let k = params.k;
    let kp = params.kp;
    let d = f.derivatives();
    let samples: Vec<DistortionSample> = (0..grid.len())
        .into_par_iter()
        .map(|i| d.sample(grid.point(i)))
        .collect();

    let worst = |margin: &(dyn Fn(&DistortionSample) -> (f64, f64) + Sync)| {
        let (m, i) = samples
            .par_iter()
            .enumerate()
            .map(|(i, s)| {
                let (value, scale) = margin(s);
                // normalize by the size of the compared terms
                (value / (1.0 + scale), i)
            })
            .reduce(|| (f64::INFINITY, usize::MAX), min_by_margin);
        let (raw, _) = margin(&samples[i]);
        (raw, m, i)
    };

    let sense = worst(&|s| (s.jacobian, 0.0));
    let sense_preserving = MarginCheck {
        holds: sense.0 > 0.0,
        worst_margin: sense.0,
        witness: (sense.0 <= 0.0).then(|| samples[sense.2].z),
    };

    let qr = worst(&|s| (k * s.lambda_small - s.lambda_big, s.lambda_big));
    let qr_ok = qr.1 >= -MARGIN_SLACK && sense_preserving.holds;
    let k_quasiregular = MarginCheck {
        holds: qr_ok,
        worst_margin: qr.0,
        witness: if qr_ok {
            None
        } else if qr.1 < -MARGIN_SLACK {
            Some(samples[qr.2].z)
        } else {
            sense_preserving.witness
        },
    };

    let ell = worst(&|s| {
        (
            k * s.jacobian + kp - s.lambda_big * s.lambda_big,
            s.lambda_big * s.lambda_big,
        )
    });
    let ell_ok = ell.1 >= -MARGIN_SLACK && sense_preserving.holds;
    let elliptic = MarginCheck {
        holds: ell_ok,
        worst_margin: ell.0,
        witness: if ell_ok {
            None
        } else if ell.1 < -MARGIN_SLACK {
            Some(samples[ell.2].z)
        } else {
            sense_preserving.witness
        },
    };

    Ok(ClassReport {
        grid: *grid,
        sense_preserving,
        k_quasiregular,
        elliptic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn shear() -> HarmonicMap {
        HarmonicMap::new(
            PowerSeries::from_real(&[0.0, 1.0]),
            PowerSeries::from_real(&[0.0, 0.5]),
            "shear",
        )
    }

    fn small_grid() -> GridSpec {
        GridSpec::new(8, 16, 0.9).unwrap()
    }

    #[test]
    fn hmap_eval_examples() {
        let v = shear().eval(c(0.0, 0.4)).unwrap();
        assert!((v - c(0.0, 0.2)).norm() < 1e-16);
        let id = HarmonicMap::identity();
        assert_eq!(id.eval(c(0.3, -0.2)).unwrap(), c(0.3, -0.2));
        assert!(id.eval(c(0.0, 1.0)).is_err());
    }

    #[test]
    fn distortion_examples() {
        let s = shear().distortion_at(c(0.0, 0.0)).unwrap();
        assert_eq!(
            (
                s.fz_abs,
                s.fzbar_abs,
                s.lambda_big,
                s.lambda_small,
                s.jacobian
            ),
            (1.0, 0.5, 1.5, 0.5, 0.75)
        );
        let s = HarmonicMap::identity().distortion_at(c(0.2, 0.7)).unwrap();
        assert_eq!(
            (
                s.fz_abs,
                s.fzbar_abs,
                s.lambda_big,
                s.lambda_small,
                s.jacobian
            ),
            (1.0, 0.0, 1.0, 1.0, 1.0)
        );
    }

    #[test]
    fn grid_layout() {
        let g = GridSpec::new(4, 8, 0.8).unwrap();
        assert_eq!(g.len(), 33);
        assert_eq!(g.point(0), c(0.0, 0.0));
        assert!((g.point(1) - c(0.2, 0.0)).norm() < 1e-16);
        assert!((g.point(32).norm() - 0.8).abs() < 1e-15);
        assert!(GridSpec::new(0, 8, 0.5).is_err());
        assert!(GridSpec::new(2, 3, 0.5).is_err());
        assert!(GridSpec::new(2, 8, 1.0).is_err());
    }

    #[test]
    fn membership_examples() {
        let f = shear();
        let grid = small_grid();
        let report = check_class_membership(&f, &ClassParams::new(3.0, 0.0), &grid).unwrap();
        assert!(report.sense_preserving.holds);
        assert!(report.k_quasiregular.holds);
        assert_eq!(report.k_quasiregular.worst_margin, 0.0);

        let report = check_class_membership(&f, &ClassParams::new(2.0, 0.0), &grid).unwrap();
        assert!(!report.k_quasiregular.holds);
        assert!(report.k_quasiregular.witness.is_some());
        assert!((report.k_quasiregular.worst_margin + 0.5).abs() < 1e-15);

        let report = check_class_membership(&f, &ClassParams::new(1.0, 1.5), &grid).unwrap();
        assert!(report.elliptic.holds);
        assert_eq!(report.elliptic.worst_margin, 0.0);
    }

    #[test]
    fn membership_rejects_bad_params() {
        let grid = small_grid();
        let f = shear();
        assert!(check_class_membership(&f, &ClassParams::new(0.5, 0.0), &grid).is_err());
        assert!(check_class_membership(&f, &ClassParams::new(1.0, -1.0), &grid).is_err());
    }

    #[test]
    fn sense_reversing_map_fails_sense_check() {
        let f = HarmonicMap::new(
            PowerSeries::from_real(&[0.0, 0.5]),
            PowerSeries::from_real(&[0.0, 1.0]),
            "reversing",
        );
        let report =
            check_class_membership(&f, &ClassParams::new(3.0, 0.0), &small_grid()).unwrap();
        assert!(!report.sense_preserving.holds);
        assert!(!report.k_quasiregular.holds);
        assert_eq!(report.sense_preserving.witness, Some(c(0.0, 0.0)));
    }

    fn map_strategy() -> impl Strategy<Value = HarmonicMap> {
        let coeffs = || prop::collection::vec((-2.0..2.0f64, -2.0..2.0f64), 2..10);
        (coeffs(), coeffs()).prop_map(|(h, g)| {
            let to = |v: Vec<(f64, f64)>| {
                let mut s = PowerSeries::new(v.into_iter().map(|(a, b)| c(a, b)).collect());
                s.set_coeff(0, Complex64::default());
                s
            };
            HarmonicMap::new(to(h), to(g), "random")
        })
    }

    proptest! {
        #[test]
        fn jacobian_is_product_of_distortions(f in map_strategy(), r in 0.0..0.95f64, t in 0.0..6.3f64) {
            let s = f.distortion_at(Complex64::from_polar(r, t)).unwrap();
            let prod = s.lambda_big * s.lambda_small;
            prop_assert!((s.jacobian.abs() - prod).abs() <= 1e-12 * prod.max(f64::MIN_POSITIVE));
        }

        #[test]
        fn evaluation_is_additive(f1 in map_strategy(), f2 in map_strategy(),
                                  r in 0.0..0.9f64, t in 0.0..6.3f64) {
            let z = Complex64::from_polar(r, t);
            let sum = (&f1 + &f2).eval(z).unwrap();
            prop_assert!((sum - f1.eval(z).unwrap() - f2.eval(z).unwrap()).norm() < 1e-11);
        }

        #[test]
        fn analytic_sense_preserving_iff_derivative_nonzero(
            h in prop::collection::vec(-2.0..2.0f64, 2..6)
        ) {
            let mut s = PowerSeries::from_real(&h);
            s.set_coeff(0, Complex64::default());
            let f = HarmonicMap::analytic(s, "analytic");
            let grid = GridSpec::new(4, 8, 0.8).unwrap();
            let report = check_class_membership(&f, &ClassParams::new(1.0, 0.0), &grid).unwrap();
            let dh = f.h.derivative();
            let nonzero = grid.points().iter().all(|&z| dh.eval(z).unwrap().norm() > 0.0);
            prop_assert_eq!(report.sense_preserving.holds, nonzero);
        }
    }
}
