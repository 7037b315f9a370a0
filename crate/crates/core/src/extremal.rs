//! Extremal mappings of the sharp results, as truncated series and through
//! independent closed-form or quadrature evaluators.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::map::HarmonicMap;
use crate::quadrature::integrate_segment;
use crate::roots::{bisect, first_sign_change};
use crate::series::{check_disk, PowerSeries};

/// Default truncation degree.
pub const DEFAULT_DEGREE: usize = 64;

/// Absolute tolerance of the quadrature evaluator.
pub const QUADRATURE_TOL: f64 = 1e-12;

/// Bracket width at which [`critical_radius`] stops bisecting.
pub const CRITICAL_RADIUS_TOL: f64 = 1e-13;

const CRITICAL_SCAN_STEPS: usize = 4096;
const CRITICAL_SCAN_MAX: f64 = 1.0 - 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtremalKind {
    /// `f₀(z) = M z (1 - Mz)/(M - z)`
    F0 { m: f64 },
    /// `f₁(z) = ∫_0^z Λ (1 - Λw)/(Λ - w) dw`
    F1 { lambda_big: f64 },
    /// `f_n(z) = Λ² z - ∫_0^z (Λ³ - Λ)/(Λ + w^{n-1}) dw`
    Fn { lambda_big: f64, n: usize },
    /// `F_n = ((K+1)/2) f_n + conj(((K-1)/2) f_n)`
    FnConjecture { lambda_big: f64, n: usize, k: f64 },
}

impl ExtremalKind {
    pub fn name(&self) -> &'static str {
        match self {
            ExtremalKind::F0 { .. } => "f0",
            ExtremalKind::F1 { .. } => "f1",
            ExtremalKind::Fn { .. } => "fn",
            ExtremalKind::FnConjecture { .. } => "Fn_conjecture",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalSpec {
    pub kind: ExtremalKind,
    /// Truncation degree `N` of the series representation.
    pub degree: usize,
}

impl ExtremalSpec {
    pub fn f0(m: f64) -> Self {
        Self::with_default_degree(ExtremalKind::F0 { m })
    }

    pub fn f1(lambda_big: f64) -> Self {
        Self::with_default_degree(ExtremalKind::F1 { lambda_big })
    }

    pub fn fn_map(lambda_big: f64, n: usize) -> Self {
        Self::with_default_degree(ExtremalKind::Fn { lambda_big, n })
    }

    pub fn fn_conjecture(k: f64, lambda_big: f64, n: usize) -> Self {
        Self::with_default_degree(ExtremalKind::FnConjecture { lambda_big, n, k })
    }

    /// `N = 64`, raised for `f_n` so that at least eight nonzero terms past `z` survive.
    pub fn with_default_degree(kind: ExtremalKind) -> Self {
        let degree = match kind {
            ExtremalKind::Fn { n, .. } | ExtremalKind::FnConjecture { n, .. } => {
                DEFAULT_DEGREE.max(8 * n.saturating_sub(1) + 1)
            }
            _ => DEFAULT_DEGREE,
        };
        ExtremalSpec { kind, degree }
    }

    pub fn with_degree(mut self, degree: usize) -> Self {
        self.degree = degree;
        self
    }

    pub fn validate(&self) -> Result<()> {
        const CTX: &str = "extremal map";
        let check_lambda = |l: f64| {
            if l.is_finite() && l > 1.0 {
                Ok(())
            } else {
                Err(Error::inadmissible(CTX, format!("Lambda > 1 (got {l})")))
            }
        };
        let check_n = |n: usize, degree: usize| {
            if n < 2 {
                Err(Error::inadmissible(CTX, format!("n >= 2 (got {n})")))
            } else if degree < n {
                Err(Error::inadmissible(
                    CTX,
                    format!("truncation degree N >= n (got N = {degree}, n = {n})"),
                ))
            } else {
                Ok(())
            }
        };
        if self.degree < 1 {
            return Err(Error::inadmissible(CTX, "truncation degree N >= 1"));
        }
        match self.kind {
            ExtremalKind::F0 { m } => {
                if !(m.is_finite() && m > 1.0) {
                    return Err(Error::inadmissible(CTX, format!("M > 1 (got {m})")));
                }
            }
            ExtremalKind::F1 { lambda_big } => check_lambda(lambda_big)?,
            ExtremalKind::Fn { lambda_big, n } => {
                check_lambda(lambda_big)?;
                check_n(n, self.degree)?;
            }
            ExtremalKind::FnConjecture { lambda_big, n, k } => {
                check_lambda(lambda_big)?;
                check_n(n, self.degree)?;
                if !(k.is_finite() && k >= 1.0) {
                    return Err(Error::inadmissible(CTX, format!("K >= 1 (got {k})")));
                }
            }
        }
        Ok(())
    }

    fn label(&self) -> String {
        match self.kind {
            ExtremalKind::F0 { m } => format!("f0(M={m})"),
            ExtremalKind::F1 { lambda_big } => format!("f1(Lambda={lambda_big})"),
            ExtremalKind::Fn { lambda_big, n } => format!("fn(Lambda={lambda_big},n={n})"),
            ExtremalKind::FnConjecture { lambda_big, n, k } => {
                format!("Fn(K={k},Lambda={lambda_big},n={n})")
            }
        }
    }
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `a_1 = 1`, `a_{k(n-1)+1} = (-1)^{k+1} (Λ² - 1)/((k(n-1)+1) Λ^k)`.
fn fn_series(lambda_big: f64, n: usize, degree: usize) -> PowerSeries {
    let mut s = PowerSeries::zero(degree);
    s.set_coeff(1, real(1.0));
    let step = n - 1;
    let numerator = lambda_big * lambda_big - 1.0;
    let mut k = 1;
    while k * step < degree {
        let exponent = k * step + 1;
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let value = sign * numerator / (exponent as f64 * lambda_big.powi(k as i32));
        s.set_coeff(exponent, real(value));
        k += 1;
    }
    s
}

pub fn build_extremal(spec: &ExtremalSpec) -> Result<HarmonicMap> {
    spec.validate()?;
    let degree = spec.degree;
    let label = spec.label();
    match spec.kind {
        ExtremalKind::F0 { m } => {
            let mut h = PowerSeries::zero(degree);
            h.set_coeff(1, real(1.0));
            let numerator = m * m - 1.0;
            for power in 2..=degree {
                h.set_coeff(power, real(-numerator / m.powi(power as i32 - 1)));
            }
            Ok(HarmonicMap::analytic(h, label))
        }
        ExtremalKind::F1 { lambda_big } => {
            let l = lambda_big;
            let num = PowerSeries::from_real(&[l, -l * l]);
            let den = PowerSeries::from_real(&[l, -1.0]);
            let h = num.div_truncated(&den, degree - 1)?.antiderivative();
            Ok(HarmonicMap::analytic(h, label))
        }
        ExtremalKind::Fn { lambda_big, n } => Ok(HarmonicMap::analytic(
            fn_series(lambda_big, n, degree),
            label,
        )),
        ExtremalKind::FnConjecture { lambda_big, n, k } => {
            let base = fn_series(lambda_big, n, degree);
            Ok(HarmonicMap::new(
                &base * ((k + 1.0) / 2.0),
                &base * ((k - 1.0) / 2.0),
                label,
            ))
        }
    }
}

fn fn_integrand(lambda_big: f64, n: usize) -> impl Fn(Complex64) -> Complex64 {
    let l = lambda_big;
    move |w: Complex64| real(l * l) - real(l * l * l - l) / (w.powu(n as u32 - 1) + l)
}

/// Evaluates the extremal map without its series: `f₀` in closed form, the
/// integral-defined maps by adaptive quadrature along `[0, z]`.
pub fn extremal_closed_eval(spec: &ExtremalSpec, z: Complex64) -> Result<Complex64> {
    spec.validate()?;
    check_disk(z)?;
    match spec.kind {
        ExtremalKind::F0 { m } => Ok(z * m * (real(1.0) - z * m) / (real(m) - z)),
        ExtremalKind::F1 { lambda_big } => {
            let l = lambda_big;
            integrate_segment(
                |w| (real(1.0) - w * l) * l / (real(l) - w),
                z,
                QUADRATURE_TOL,
            )
        }
        ExtremalKind::Fn { lambda_big, n } => {
            integrate_segment(fn_integrand(lambda_big, n), z, QUADRATURE_TOL)
        }
        ExtremalKind::FnConjecture { lambda_big, n, k } => {
            let base = integrate_segment(fn_integrand(lambda_big, n), z, QUADRATURE_TOL)?;
            Ok(base * ((k + 1.0) / 2.0) + (base * ((k - 1.0) / 2.0)).conj())
        }
    }
}

/// Smallest `r` in `(0, 1)` with `h'(r) = 0` along the positive real axis, or
/// `None` if `h'` keeps its sign there.
pub fn critical_radius(spec: &ExtremalSpec) -> Result<Option<f64>> {
    if let ExtremalKind::FnConjecture { .. } = spec.kind {
        return Err(Error::inadmissible(
            "critical radius",
            "an analytic extremal (f0, f1 or fn)",
        ));
    }
    let map = build_extremal(spec)?;
    let dh = map.h.derivative();
    // real coefficients: h' is real on the real axis
    let along_axis = |r: f64| dh.eval_unchecked(real(r)).re;
    Ok(
        first_sign_change(along_axis, 0.0, CRITICAL_SCAN_MAX, CRITICAL_SCAN_STEPS)
            .map(|(lo, hi)| bisect(along_axis, lo, hi, CRITICAL_RADIUS_TOL)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn f0_coefficients() {
        let f = build_extremal(&ExtremalSpec::f0(2.0)).unwrap();
        assert_eq!(f.h.coeff(1), c(1.0, 0.0));
        assert_eq!(f.h.coeff(2), c(-1.5, 0.0));
        assert_eq!(f.h.coeff(3), c(-0.75, 0.0));
        assert_eq!(f.degree(), 64);
        assert!(f.g.coeffs().iter().all(|b| b.norm() == 0.0));
    }

    #[test]
    fn fn_coefficients() {
        let f = build_extremal(&ExtremalSpec::fn_map(2.0, 2)).unwrap();
        assert_eq!(f.h.coeff(2), c(0.75, 0.0));
        assert_eq!(f.h.coeff(3), c(-0.25, 0.0));
        let f = build_extremal(&ExtremalSpec::fn_map(2.0, 3)).unwrap();
        assert_eq!(f.h.coeff(2), c(0.0, 0.0));
        assert_eq!(f.h.coeff(3), c(0.5, 0.0));
        assert_eq!(f.h.coeff(5), c(-0.15, 0.0));
    }

    #[test]
    fn f1_coefficients() {
        let f = build_extremal(&ExtremalSpec::f1(2.0)).unwrap();
        assert_eq!(f.h.coeff(1), c(1.0, 0.0));
        assert!((f.h.coeff(2) - c(-0.75, 0.0)).norm() < 1e-16);
        assert!((f.h.coeff(3) - c(-0.25, 0.0)).norm() < 1e-16);
        assert_eq!(f.degree(), 64);
    }

    #[test]
    fn conjecture_map_splits_fn() {
        let f = build_extremal(&ExtremalSpec::fn_conjecture(2.0, 2.0, 2)).unwrap();
        assert_eq!(f.h.coeff(2).re + f.g.coeff(2).re, 1.5);
        assert_eq!(f.lambda_small_at_origin(), 1.0);
    }

    #[test]
    fn default_degree_keeps_eight_terms() {
        let spec = ExtremalSpec::fn_map(2.0, 12);
        assert_eq!(spec.degree, 89);
        let f = build_extremal(&spec).unwrap();
        assert!(f.h.coeff(89).norm() > 0.0);
    }

    #[test]
    fn invalid_specs() {
        assert!(build_extremal(&ExtremalSpec::f0(1.0)).is_err());
        assert!(build_extremal(&ExtremalSpec::f1(0.5)).is_err());
        assert!(build_extremal(&ExtremalSpec::fn_map(2.0, 1)).is_err());
        assert!(build_extremal(&ExtremalSpec::fn_map(2.0, 5).with_degree(4)).is_err());
        assert!(build_extremal(&ExtremalSpec::fn_conjecture(0.5, 2.0, 2)).is_err());
    }

    #[test]
    fn closed_forms() {
        let rho = 2.0 - 3f64.sqrt();
        let v = extremal_closed_eval(&ExtremalSpec::f0(2.0), c(rho, 0.0)).unwrap();
        assert!((v.re - 0.143593539448981652).abs() < 1e-15);
        let v = extremal_closed_eval(&ExtremalSpec::f1(2.0), c(0.0, 0.0)).unwrap();
        assert_eq!(v, c(0.0, 0.0));
        assert!(extremal_closed_eval(&ExtremalSpec::f0(2.0), c(1.0, 0.0)).is_err());
    }

    #[test]
    fn series_agrees_with_quadrature() {
        for spec in [
            ExtremalSpec::fn_map(2.0, 2),
            ExtremalSpec::fn_map(1.5, 5),
            ExtremalSpec::f1(2.0),
            ExtremalSpec::fn_conjecture(3.0, 2.0, 3),
        ] {
            let f = build_extremal(&spec).unwrap();
            for z in [c(0.3, 0.0), c(-0.2, 0.4), c(0.1, -0.45)] {
                let s = f.eval(z).unwrap();
                let q = extremal_closed_eval(&spec, z).unwrap();
                assert!((s - q).norm() < 1e-10, "{spec:?} at {z}: {s} vs {q}");
            }
        }
    }

    #[test]
    fn series_agrees_with_rational_f0() {
        let f = build_extremal(&ExtremalSpec::f0(2.0)).unwrap();
        let v = f.eval(c(0.2, 0.0)).unwrap();
        assert!((v.re - 2.0 * 0.2 * 0.6 / 1.8).abs() < 1e-12);
        for z in [c(0.5, 0.0), c(-0.3, 0.35), c(0.0, -0.5)] {
            let s = f.eval(z).unwrap();
            let closed = extremal_closed_eval(&ExtremalSpec::f0(2.0), z).unwrap();
            assert!((s - closed).norm() < 1e-12);
        }
    }

    #[test]
    fn f1_derivative_vanishes_at_inverse_lambda() {
        let f = build_extremal(&ExtremalSpec::f1(2.0)).unwrap();
        let d = f.h.derivative().eval(c(0.5, 0.0)).unwrap();
        assert!(d.norm() < 1e-15);
    }

    #[test]
    fn critical_radii() {
        let r = critical_radius(&ExtremalSpec::f0(2.0)).unwrap().unwrap();
        assert!((r - (2.0 - 3f64.sqrt())).abs() < 1e-12);
        let r = critical_radius(&ExtremalSpec::f1(2.0)).unwrap().unwrap();
        assert!((r - 0.5).abs() < 1e-12);
        let r = critical_radius(&ExtremalSpec::f1(1.25)).unwrap().unwrap();
        assert!((r - 0.8).abs() < 1e-12);
        // f_n' > 0 on [0, 1): its zeros lie off the positive axis
        assert_eq!(
            critical_radius(&ExtremalSpec::fn_map(2.0, 2)).unwrap(),
            None
        );
        assert!(critical_radius(&ExtremalSpec::fn_conjecture(2.0, 2.0, 2)).is_err());
    }
}
