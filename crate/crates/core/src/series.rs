//! Truncated complex power series.
//!
//! A [`PowerSeries`] of degree `N` stores the coefficients of `z^0 ..= z^N`.
//! Trailing zeros are kept so that the degree is always `coeffs.len() - 1`.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Points accepted by the evaluators: finite and strictly inside the unit disk.
pub fn check_disk(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() && z.norm() < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain { z })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    /// Builds a series from its coefficients. An empty vector is the zero series of degree 0.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        PowerSeries { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        PowerSeries {
            coeffs: vec![Complex64::new(0.0, 0.0); degree + 1],
        }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^n`, zero past the truncation degree.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    pub fn set_coeff(&mut self, n: usize, value: Complex64) {
        if n >= self.coeffs.len() {
            self.coeffs.resize(n + 1, Complex64::default());
        }
        self.coeffs[n] = value;
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.re.is_finite() && c.im.is_finite())
    }

    /// Truncates or zero-pads to the given degree.
    pub fn with_degree(&self, degree: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(degree + 1, Complex64::default());
        PowerSeries { coeffs }
    }

    /// Horner evaluation on the open unit disk.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        check_disk(z)?;
        Ok(self.eval_unchecked(z))
    }

    /// Horner evaluation without the disk check. Truncated series are
    /// polynomials, so this is well defined everywhere; callers that need the
    /// closed disk (boundary sampling of polynomials) use it directly.
    pub fn eval_unchecked(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::default(), |acc, &c| acc * z + c)
    }

    /// Term-wise derivative, degree `N - 1`. A degree-0 series maps to the zero series.
    pub fn derivative(&self) -> Self {
        if self.degree() == 0 {
            return Self::zero(0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, &c)| c * n as f64)
            .collect();
        PowerSeries { coeffs }
    }

    /// Antiderivative anchored at zero, degree `N + 1`.
    pub fn antiderivative(&self) -> Self {
        let coeffs = std::iter::once(Complex64::default())
            .chain(
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(n, &c)| c / (n + 1) as f64),
            )
            .collect();
        PowerSeries { coeffs }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|&c| c * factor).collect(),
        }
    }

    /// Cauchy product truncated to `degree`.
    pub fn mul_truncated(&self, other: &Self, degree: usize) -> Self {
        let mut out = vec![Complex64::default(); degree + 1];
        for (i, &a) in self.coeffs.iter().enumerate().take(degree + 1) {
            if a == Complex64::default() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(degree + 1 - i) {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }

    /// Power-series quotient `self / other` to the given degree.
    ///
    /// Requires a nonzero constant term in the divisor.
    pub fn div_truncated(&self, other: &Self, degree: usize) -> Result<Self> {
        let lead = other.coeff(0);
        if lead.norm() == 0.0 {
            return Err(Error::inadmissible(
                "series division",
                "a divisor with nonzero constant term",
            ));
        }
        let mut q = vec![Complex64::default(); degree + 1];
        for n in 0..=degree {
            let mut acc = self.coeff(n);
            for k in 1..=n.min(other.degree()) {
                acc -= other.coeffs[k] * q[n - k];
            }
            q[n] = acc / lead;
        }
        Ok(PowerSeries { coeffs: q })
    }
}

fn zip_coeffs(
    a: &PowerSeries,
    b: &PowerSeries,
    op: impl Fn(Complex64, Complex64) -> Complex64,
) -> PowerSeries {
    let degree = a.degree().max(b.degree());
    PowerSeries {
        coeffs: (0..=degree).map(|n| op(a.coeff(n), b.coeff(n))).collect(),
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        zip_coeffs(self, rhs, |x, y| x + y)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        zip_coeffs(self, rhs, |x, y| x - y)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul<f64> for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: f64) -> PowerSeries {
        self.scale(Complex64::new(rhs, 0.0))
    }
}
