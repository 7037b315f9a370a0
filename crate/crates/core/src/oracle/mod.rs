//! Numerical verification: univalence brackets, schlicht estimates, Fourier
//! coefficient recovery, hypothesis and growth checks, the coefficient
//! conjecture scanner and sharpness reports.

mod conjecture;
mod fourier;
mod hypotheses;
mod sharpness;
mod univalence;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::map::GridSpec;

pub use conjecture::{conjecture_scan, random_class_map, ScanReport, COUNTEREXAMPLE_TOL};
pub use fourier::{extract_coefficients, parseval_mean};
pub use hypotheses::{distortion_growth_check, hypothesis_check, GrowthBound, Hypothesis};
pub use sharpness::{sharpness_report, SharpnessReport};
pub use univalence::{schlicht_radius, univalence_radius_search, UnivalenceBracket};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub grid: GridSpec,
    /// Two samples collide when `|f(z₁) - f(z₂)| <= pair_tolerance |z₁ - z₂|`.
    pub pair_tolerance: f64,
    pub bisection_steps: usize,
    pub seed: u64,
    pub samples: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            grid: GridSpec::default(),
            pair_tolerance: 1e-6,
            bisection_steps: 40,
            seed: 0,
            samples: 1000,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        self.grid.validate()?;
        if !(self.pair_tolerance > 0.0 && self.pair_tolerance.is_finite()) {
            return Err(Error::inadmissible("oracle config", "pair_tolerance > 0"));
        }
        if self.bisection_steps < 20 {
            return Err(Error::inadmissible(
                "oracle config",
                "bisection_steps >= 20",
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Witness {
    /// A sample point where an inequality fails or the Jacobian degenerates.
    Point(Complex64),
    /// Two samples whose images collide.
    Pair(Complex64, Complex64),
    /// A zero of the dominant analytic derivative.
    CriticalPoint(Complex64),
    /// A coefficient index.
    Index(usize),
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let pt = |z: &Complex64| format!("{:.10}{:+.10}i", z.re, z.im);
        match self {
            Witness::Point(z) => write!(f, "point {}", pt(z)),
            Witness::Pair(a, b) => write!(f, "pair {} {}", pt(a), pt(b)),
            Witness::CriticalPoint(z) => write!(f, "critical {}", pt(z)),
            Witness::Index(n) => write!(f, "index {n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Worst (smallest) margin seen; negative when violated.
    pub margin: f64,
    pub config: OracleConfig,
}
