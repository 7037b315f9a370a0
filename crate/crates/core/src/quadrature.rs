//! Adaptive Gauss–Kronrod (7/15) quadrature for complex-valued integrands on a
//! real interval.

use num_complex::Complex64;

use crate::error::{Error, Result};

// 15-point Kronrod abscissae on [-1, 1] (non-negative half, descending).
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

// 7-point Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Upper bound on the number of subdivisions of one integral.
const MAX_PANELS: usize = 4096;

/// One Kronrod panel: `(kronrod estimate, |kronrod - gauss|)`.
fn panel<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for i in 0..7 {
        let dx = half * XGK[i];
        let pair = f(center - dx) + f(center + dx);
        kronrod += pair * WGK[i];
        if i % 2 == 1 {
            gauss += pair * WG[i / 2];
        }
    }
    let kronrod = kronrod * half;
    let gauss = gauss * half;
    (kronrod, (kronrod - gauss).norm())
}

/// Locally adaptive bisection: a panel is accepted once its error estimate is
/// within its share of the tolerance, proportional to its width.
fn adapt<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, tol: f64) -> Result<Complex64> {
    let width = b - a;
    let mut stack = vec![(a, b, panel(f, a, b))];
    let mut total = Complex64::default();
    let mut splits = 0usize;
    // error carried by panels too narrow to split further
    let mut unresolved = 0.0;
    while let Some((lo, hi, (value, err))) = stack.pop() {
        if err <= tol * (hi - lo) / width {
            total += value;
            continue;
        }
        if hi - lo <= f64::EPSILON * width {
            total += value;
            unresolved += err;
            continue;
        }
        splits += 1;
        if splits > MAX_PANELS {
            return Err(Error::Quadrature {
                tolerance: tol,
                estimate: err,
            });
        }
        let mid = 0.5 * (lo + hi);
        stack.push((mid, hi, panel(f, mid, hi)));
        stack.push((lo, mid, panel(f, lo, mid)));
    }
    if unresolved > tol {
        return Err(Error::Quadrature {
            tolerance: tol,
            estimate: unresolved,
        });
    }
    Ok(total)
}

/// `∫_a^b f(t) dt` to absolute tolerance `tol`.
pub fn integrate<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, tol: f64) -> Result<Complex64> {
    adapt(&f, a, b, tol)
}

/// `∫_0^z f(w) dw` along the straight segment from the origin.
pub fn integrate_segment<F: Fn(Complex64) -> Complex64>(
    f: F,
    z: Complex64,
    tol: f64,
) -> Result<Complex64> {
    integrate(|t| f(z * t) * z, 0.0, 1.0, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_interval_length() {
        let k: f64 = WGK[7] + 2.0 * WGK[..7].iter().sum::<f64>();
        let g: f64 = WG[3] + 2.0 * WG[..3].iter().sum::<f64>();
        assert!((k - 2.0).abs() < 1e-15);
        assert!((g - 2.0).abs() < 1e-15);
    }

    #[test]
    fn panel_exact_for_polynomials() {
        // Kronrod part is exact through degree 22, Gauss part through 13.
        for p in 0..=22 {
            let (value, _) = panel(&|x: f64| Complex64::new(x.powi(p), 0.0), -1.0, 1.0);
            let exact = if p % 2 == 0 {
                2.0 / (p as f64 + 1.0)
            } else {
                0.0
            };
            assert!((value.re - exact).abs() < 1e-14, "degree {p}");
        }
        let (_, err) = panel(&|x: f64| Complex64::new(x.powi(13), 0.0), 0.0, 1.0);
        assert!(err < 1e-15);
    }

    #[test]
    fn adaptive_integration_of_analytic_functions() {
        let v = integrate(|t| Complex64::new(t.exp(), 0.0), 0.0, 1.0, 1e-13).unwrap();
        assert!((v.re - (std::f64::consts::E - 1.0)).abs() < 1e-13);
        // ∫_0^z dw/(1-w) = -ln(1-z)
        let z = Complex64::new(0.6, 0.5);
        let v = integrate_segment(|w| 1.0 / (Complex64::new(1.0, 0.0) - w), z, 1e-13).unwrap();
        let exact = -(Complex64::new(1.0, 0.0) - z).ln();
        assert!((v - exact).norm() < 1e-12);
    }

    #[test]
    fn non_integrable_singularity_reports_failure() {
        let v = integrate(|t| Complex64::new(1.0 / t, 0.0), 0.0, 1.0, 1e-12);
        assert!(matches!(v, Err(Error::Quadrature { .. })));
    }
}
