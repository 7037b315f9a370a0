use num_complex::Complex64;
use rayon::prelude::*;

use super::{OracleConfig, OracleReport, Verdict, Witness};
use crate::error::{Error, Result};
use crate::map::{min_by_margin, HarmonicMap, MARGIN_SLACK, NORMALIZATION_TOL};
use crate::radii::{landau_classical, ClassParams};

/// `a_n b_n` larger than this in modulus breaks coefficient disjointness.
pub const DISJOINTNESS_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    /// Coefficient-sum growth `Σ n(|a_n|+|b_n|) r^{n-1} <= (M²-1)(2Mr-r²)/(M-r)²`.
    ThmB,
    /// Derivative-difference growth `|h'(z)-h'(0)| + |g'(z)-g'(0)| <= (M²-1)(2M|z|-|z|²)/(M-|z|)²`.
    Thm0,
    /// `|z f_z + conj(z) f_{conj z}| < Λ` and `a_n b_n = 0` for `n >= 2`.
    Thm10,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthBound {
    /// `Λ_f(z) <= λ (1+|z|)/(1-|z|)`.
    SchwarzSp,
    /// `|h'(z)| <= M/(1-|z|)`.
    CauchyBounded,
}

fn growth_rhs(m: f64, r: f64) -> f64 {
    (m * m - 1.0) * (2.0 * m * r - r * r) / ((m - r) * (m - r))
}

/// Sampled `(margin, scale)` pairs reduced to a report; the margin is accepted
/// when it is not below `-MARGIN_SLACK (1 + scale)`.
fn reduce(points: &[Complex64], margins: &[(f64, f64)], cfg: &OracleConfig) -> OracleReport {
    let (_, i) = margins
        .par_iter()
        .enumerate()
        .map(|(i, &(m, s))| (m / (1.0 + s), i))
        .reduce(|| (f64::INFINITY, usize::MAX), min_by_margin);
    if i == usize::MAX {
        return OracleReport {
            verdict: Verdict::Inconclusive,
            witness: None,
            margin: f64::INFINITY,
            config: *cfg,
        };
    }
    let (margin, scale) = margins[i];
    OracleReport {
        verdict: if margin >= -MARGIN_SLACK * (1.0 + scale) {
            Verdict::Holds
        } else {
            Verdict::Violated
        },
        witness: Some(Witness::Point(points[i])),
        margin,
        config: *cfg,
    }
}

fn grid_margins<F>(
    cfg: &OracleConfig,
    keep: impl Fn(Complex64) -> bool,
    margin: F,
) -> (Vec<Complex64>, Vec<(f64, f64)>)
where
    F: Fn(Complex64) -> (f64, f64) + Sync,
{
    let points: Vec<Complex64> = cfg.grid.points().into_iter().filter(|&z| keep(z)).collect();
    let margins = points.par_iter().map(|&z| margin(z)).collect();
    (points, margins)
}

/// Samples the hypothesis of one result on `f`.
pub fn hypothesis_check(
    variant: Hypothesis,
    f: &HarmonicMap,
    params: &ClassParams,
    cfg: &OracleConfig,
) -> Result<OracleReport> {
    f.ensure_normalized()?;
    cfg.validate()?;
    match variant {
        Hypothesis::ThmB => {
            let m = params.require_m("coefficient-sum hypothesis (thmB)")?;
            let rho = landau_classical(m)?.univalence_radius;
            let steps = cfg.grid.radial_steps;
            let points: Vec<Complex64> = (0..=steps)
                .map(|j| Complex64::new(rho * j as f64 / steps as f64, 0.0))
                .collect();
            let margins: Vec<(f64, f64)> = points
                .iter()
                .map(|z| {
                    let r = z.re;
                    let lhs: f64 = (2..=f.degree())
                        .map(|n| {
                            n as f64
                                * (f.h.coeff(n).norm() + f.g.coeff(n).norm())
                                * r.powi(n as i32 - 1)
                        })
                        .sum();
                    let rhs = growth_rhs(m, r);
                    (rhs - lhs, rhs)
                })
                .collect();
            Ok(reduce(&points, &margins, cfg))
        }
        Hypothesis::Thm0 => {
            let m = params.require_m("derivative-difference hypothesis (thm0)")?;
            let rho = landau_classical(m)?.univalence_radius;
            let d = f.derivatives();
            let (h0, g0) = (d.dh.coeff(0), d.dg.coeff(0));
            let (points, margins) = grid_margins(
                cfg,
                |z| z.norm() < rho,
                |z| {
                    let lhs =
                        (d.dh.eval_unchecked(z) - h0).norm() + (d.dg.eval_unchecked(z) - g0).norm();
                    let rhs = growth_rhs(m, z.norm());
                    (rhs - lhs, rhs)
                },
            );
            Ok(reduce(&points, &margins, cfg))
        }
        Hypothesis::Thm10 => {
            let lambda = params.require_lambda_big("radial-derivative hypothesis (thm10)")?;
            let d = f.derivatives();
            let (points, margins) = grid_margins(
                cfg,
                |_| true,
                |z| {
                    let radial = z * d.dh.eval_unchecked(z) + (z * d.dg.eval_unchecked(z)).conj();
                    (lambda - radial.norm(), lambda)
                },
            );
            let mut report = reduce(&points, &margins, cfg);
            let overlap = (2..=f.degree())
                .map(|n| (n, (f.h.coeff(n) * f.g.coeff(n)).norm()))
                .find(|&(_, p)| p > DISJOINTNESS_TOL);
            if let Some((n, p)) = overlap {
                report.verdict = Verdict::Violated;
                report.witness = Some(Witness::Index(n));
                report.margin = report.margin.min(-p);
            }
            Ok(report)
        }
    }
}

/// Samples a pointwise growth bound on the grid.
pub fn distortion_growth_check(
    variant: GrowthBound,
    f: &HarmonicMap,
    params: &ClassParams,
    cfg: &OracleConfig,
) -> Result<OracleReport> {
    cfg.validate()?;
    let d = f.derivatives();
    let (points, margins) = match variant {
        GrowthBound::SchwarzSp => {
            const CTX: &str = "Schwarz growth bound";
            let lambda = params.require_lambda_small(CTX)?;
            if d.dg.coeff(0).norm() > NORMALIZATION_TOL {
                return Err(Error::inadmissible(CTX, "g'(0) = 0"));
            }
            if d.sample(Complex64::default()).jacobian.is_nan()
                || d.sample(Complex64::default()).jacobian <= 0.0
            {
                return Err(Error::inadmissible(
                    CTX,
                    "sense-preserving map (J_f(0) > 0)",
                ));
            }
            grid_margins(
                cfg,
                |_| true,
                |z| {
                    let r = z.norm();
                    let rhs = lambda * (1.0 + r) / (1.0 - r);
                    (rhs - d.sample(z).lambda_big, rhs)
                },
            )
        }
        GrowthBound::CauchyBounded => {
            let m = params.require_m("Cauchy growth bound")?;
            grid_margins(
                cfg,
                |_| true,
                |z| {
                    let rhs = m / (1.0 - z.norm());
                    (rhs - d.dh.eval_unchecked(z).norm(), rhs)
                },
            )
        }
    };
    Ok(reduce(&points, &margins, cfg))
}
