use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::map::{circle_points, HarmonicMap};

/// Largest tolerated amplification `r^{-N}` when undoing the radial scaling.
pub const MAX_AMPLIFICATION: f64 = 1e14;

fn check_radius(context: &'static str, r: f64) -> Result<()> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::inadmissible(
            context,
            format!("0 < r < 1 (got r = {r})"),
        ));
    }
    Ok(())
}

/// Recovers `a_0..=a_N` and `b_0..=b_N` of `f = h + conj(g)` from `samples`
/// equally spaced values on `|z| = r`.
///
/// Frequency `n` of the boundary trace carries `a_n r^n`, frequency `-n`
/// carries `conj(b_n) r^n`. The constant term is reported in `a_0`, so `b_0 = 0`.
pub fn extract_coefficients<F>(
    f: F,
    r: f64,
    n_max: usize,
    samples: usize,
) -> Result<(Vec<Complex64>, Vec<Complex64>)>
where
    F: Fn(Complex64) -> Complex64,
{
    const CTX: &str = "coefficient extraction";
    check_radius(CTX, r)?;
    if samples < 4 * n_max.max(1) {
        return Err(Error::inadmissible(
            CTX,
            format!("samples >= 4N (got {samples} for N = {n_max})"),
        ));
    }
    if r.powi(-(n_max as i32)) > MAX_AMPLIFICATION {
        return Err(Error::Amplification { r, degree: n_max });
    }
    let mut buf: Vec<Complex64> = circle_points(r, samples).map(&f).collect();
    FftPlanner::new()
        .plan_fft_forward(samples)
        .process(&mut buf);
    let m = samples as f64;
    let mut a = Vec::with_capacity(n_max + 1);
    let mut b = Vec::with_capacity(n_max + 1);
    a.push(buf[0] / m);
    b.push(Complex64::default());
    for n in 1..=n_max {
        let scale = m * r.powi(n as i32);
        a.push(buf[n] / scale);
        b.push((buf[samples - n] / scale).conj());
    }
    Ok((a, b))
}

/// Integral mean of `|z f_z + conj(z) f_{conj z}|²` on `|z| = r` by the
/// `m`-point trapezoid rule, next to the coefficient sum
/// `Σ n² (|a_n|² + |b_n|²) r^{2n}`.
pub fn parseval_mean(f: &HarmonicMap, r: f64, m: usize) -> Result<(f64, f64)> {
    const CTX: &str = "Parseval mean";
    check_radius(CTX, r)?;
    if m < 1 {
        return Err(Error::inadmissible(CTX, "m >= 1"));
    }
    let d = f.derivatives();
    let integral = circle_points(r, m)
        .map(|z| (z * d.dh.eval_unchecked(z) + (z * d.dg.eval_unchecked(z)).conj()).norm_sqr())
        .sum::<f64>()
        / m as f64;
    let series_sum = (1..=f.degree())
        .map(|n| {
            let nf = n as f64;
            nf * nf * (f.h.coeff(n).norm_sqr() + f.g.coeff(n).norm_sqr()) * r.powi(2 * n as i32)
        })
        .sum();
    Ok((integral, series_sum))
}
