use std::str::FromStr;

use super::{table_rows, TableId};
use crate::error::Result;
use crate::extremal::{build_extremal, critical_radius, ExtremalSpec};
use crate::map::{GridSpec, HarmonicMap};
use crate::oracle::{
    conjecture_scan, distortion_growth_check, hypothesis_check, sharpness_report, GrowthBound,
    Hypothesis, OracleConfig, OracleReport, Verdict, Witness,
};
use crate::radii::{
    coefficient_bound, lemma_inequality_margin, BoundVariant, ClassParams, Lemma, Theorem,
};
use crate::series::PowerSeries;

pub const TABLE_TOLERANCE: f64 = 1e-4;
pub const CRITICAL_TOLERANCE: f64 = 1e-10;
pub const SCHLICHT_TOLERANCE: f64 = 1e-8;
pub const LEMMA_POINTS: usize = 10_000;
/// `1/3 - 1 + ln 2`, the lemma H margin at `x = 1`.
pub const LEMMA_H_AT_ONE: f64 = 0.026_480_513_893_278_642_8;
pub const LEMMA_H_TOLERANCE: f64 = 1e-7;
pub const PROVEN_BOUND_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Sharpness,
    Tables,
    Lemmas,
    Hypotheses,
    Conjecture,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Sharpness,
        Suite::Tables,
        Suite::Lemmas,
        Suite::Hypotheses,
        Suite::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Sharpness => "sharpness",
            Suite::Tables => "tables",
            Suite::Lemmas => "lemmas",
            Suite::Hypotheses => "hypotheses",
            Suite::Conjecture => "conjecture",
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .iter()
            .copied()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Reported without gating the exit status.
    Info,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub value: f64,
    pub reference: f64,
    /// Positive when the check passes with room to spare.
    pub margin: f64,
    pub tolerance: f64,
    pub status: Status,
}

impl Check {
    fn gate(
        suite: Suite,
        name: impl Into<String>,
        value: f64,
        reference: f64,
        margin: f64,
        tolerance: f64,
    ) -> Self {
        Check {
            suite: suite.name(),
            name: name.into(),
            value,
            reference,
            margin,
            tolerance,
            status: if margin >= 0.0 {
                Status::Pass
            } else {
                Status::Fail
            },
        }
    }

    /// `|value - reference| <= tolerance`.
    fn close(
        suite: Suite,
        name: impl Into<String>,
        value: f64,
        reference: f64,
        tolerance: f64,
    ) -> Self {
        let margin = tolerance - (value - reference).abs();
        let margin = if margin.is_nan() {
            -f64::INFINITY
        } else {
            margin
        };
        Self::gate(suite, name, value, reference, margin, tolerance)
    }

    fn flag(suite: Suite, name: impl Into<String>, ok: bool) -> Self {
        let v = if ok { 1.0 } else { 0.0 };
        Self::gate(suite, name, v, 1.0, v - 1.0, 0.0)
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    /// Overrides the suite's primary comparison tolerance.
    pub tolerance: Option<f64>,
    /// Restricts the sharpness suite to one result.
    pub theorem: Option<(Theorem, ClassParams)>,
    /// `(K, Λ, n)` for the conjecture suite.
    pub conjecture: (f64, f64, usize),
    pub oracle: OracleConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            tolerance: None,
            theorem: None,
            conjecture: (2.0, 2.0, 2),
            oracle: OracleConfig {
                grid: GridSpec {
                    radial_steps: 32,
                    angular_steps: 64,
                    max_radius: 0.9,
                },
                samples: 10_000,
                ..OracleConfig::default()
            },
        }
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<Check>> {
    match suite {
        Suite::Tables => tables(opts),
        Suite::Lemmas => lemmas(opts),
        Suite::Sharpness => sharpness(opts),
        Suite::Hypotheses => hypotheses(opts),
        Suite::Conjecture => conjecture(opts),
    }
}

fn tables(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let tol = opts.tolerance.unwrap_or(TABLE_TOLERANCE);
    let mut checks = Vec::new();
    for id in [TableId::Elliptic, TableId::Quasiregular] {
        for (col, row) in table_rows(id)?.iter().enumerate() {
            for (i, (label, value)) in row.values.iter().enumerate() {
                let name = format!("table{} {label}{}", id.number(), row.heading());
                checks.push(Check::close(
                    Suite::Tables,
                    name,
                    *value,
                    id.reference(i, col),
                    tol,
                ));
            }
        }
    }
    Ok(checks)
}

/// Worst margin of a lemma over `points` samples, reported with its location.
fn lemma_sweep(which: Lemma, points: impl Iterator<Item = f64>) -> Result<(f64, f64)> {
    let mut worst = (f64::INFINITY, f64::NAN);
    for x in points {
        let m = lemma_inequality_margin(which, x)?;
        if m < worst.0 {
            worst = (m, x);
        }
    }
    Ok(worst)
}

fn lemmas(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let n = LEMMA_POINTS;
    let (g, gx) = lemma_sweep(Lemma::G, (0..n).map(|i| (i as f64 + 0.5) / n as f64))?;
    let (h, hx) = lemma_sweep(
        Lemma::H,
        (0..n).map(|i| 1.0 + 99.0 * i as f64 / (n - 1) as f64),
    )?;
    let at_one = lemma_inequality_margin(Lemma::H, 1.0)?;
    Ok(vec![
        Check::gate(
            Suite::Lemmas,
            format!("lemma G min margin on (0,1) at x={gx}"),
            g,
            0.0,
            g,
            0.0,
        ),
        Check::gate(
            Suite::Lemmas,
            format!("lemma H min margin on [1,100] at x={hx}"),
            h,
            0.0,
            h,
            0.0,
        ),
        Check::close(
            Suite::Lemmas,
            "lemma H margin at x=1",
            at_one,
            LEMMA_H_AT_ONE,
            opts.tolerance.unwrap_or(LEMMA_H_TOLERANCE),
        ),
    ])
}

/// Schlicht comparison: sharp results must match, thm10 only bounds from below.
fn sharpness_checks(
    theorem: Theorem,
    params: &ClassParams,
    opts: &VerifyOptions,
) -> Result<Vec<Check>> {
    let rep = sharpness_report(theorem, params)?;
    let tag = theorem.tag();
    let r_tol = opts.tolerance.unwrap_or(CRITICAL_TOLERANCE);
    let mut checks = Vec::new();
    match rep.critical_radius {
        Some(c) => checks.push(Check::close(
            Suite::Sharpness,
            format!("{tag} critical radius"),
            c,
            rep.formula.univalence_radius,
            r_tol,
        )),
        None => checks.push(Check::flag(
            Suite::Sharpness,
            format!("{tag} critical radius exists"),
            false,
        )),
    }
    if let (Some(o), Some(s)) = (rep.oracle_schlicht, rep.formula.schlicht_radius) {
        let name = format!("{tag} schlicht radius");
        checks.push(if theorem == Theorem::Thm10 {
            Check::gate(
                Suite::Sharpness,
                name,
                o,
                s,
                o - s + SCHLICHT_TOLERANCE,
                SCHLICHT_TOLERANCE,
            )
        } else {
            Check::close(Suite::Sharpness, name, o, s, SCHLICHT_TOLERANCE)
        });
    }
    Ok(checks)
}

fn sharpness(opts: &VerifyOptions) -> Result<Vec<Check>> {
    if let Some((theorem, params)) = &opts.theorem {
        return sharpness_checks(*theorem, params, opts);
    }
    let m2 = ClassParams::default().with_m(2.0);
    let l2 = ClassParams::default().with_lambda_big(2.0);
    let mut checks = Vec::new();
    for (t, p) in [
        (Theorem::Thm11, m2),
        (Theorem::Thm0, m2),
        (Theorem::Thm12, l2),
        (Theorem::ThmA, l2),
        (Theorem::Thm1, l2),
        (Theorem::Cor1, l2),
        (Theorem::Cor2, l2),
        (Theorem::Thm10, l2),
    ] {
        checks.extend(sharpness_checks(t, &p, opts)?);
    }
    let f1 = critical_radius(&ExtremalSpec::f1(2.0))?.unwrap_or(f64::NAN);
    checks.push(Check::close(
        Suite::Sharpness,
        "f1 critical radius (Lambda=2)",
        f1,
        0.5,
        1e-12,
    ));
    for lambda in [1.5, 2.0, 3.0] {
        for n in [2, 3, 5] {
            let f = build_extremal(&ExtremalSpec::fn_map(lambda, n))?;
            let observed = f.h.coeff(n).norm() + f.g.coeff(n).norm();
            let bound = coefficient_bound(BoundVariant::Cor4, 1.0, 0.0, lambda, n)?;
            checks.push(Check::close(
                Suite::Sharpness,
                format!("fn coefficient = cor4 bound (Lambda={lambda}, n={n})"),
                observed,
                bound,
                0.0,
            ));
        }
    }
    Ok(checks)
}

fn holds(rep: &OracleReport) -> bool {
    rep.verdict == Verdict::Holds
}

fn hypotheses(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let cfg = OracleConfig {
        grid: GridSpec::default(),
        ..opts.oracle
    };
    let m2 = ClassParams::default().with_m(2.0);
    let l2 = ClassParams::default().with_lambda_big(2.0);
    let f0 = build_extremal(&ExtremalSpec::f0(2.0))?;
    let f1 = build_extremal(&ExtremalSpec::f1(2.0))?;
    let s = Suite::Hypotheses;
    let mut checks = Vec::new();

    let rep = hypothesis_check(Hypothesis::Thm0, &f0, &m2, &cfg)?;
    checks.push(Check::flag(s, "thm0 on f0 (M=2) holds", holds(&rep)));
    checks.push(Check::close(
        s,
        "thm0 on f0 worst margin",
        rep.margin,
        0.0,
        1e-12,
    ));
    let real = matches!(rep.witness, Some(Witness::Point(z)) if z.im == 0.0);
    checks.push(Check::flag(
        s,
        "thm0 on f0 worst margin on the real axis",
        real,
    ));

    let rep = hypothesis_check(Hypothesis::ThmB, &f0, &m2, &cfg)?;
    checks.push(Check::flag(s, "thmB on f0 (M=2) holds", holds(&rep)));

    let rep = hypothesis_check(Hypothesis::Thm10, &f1, &l2, &cfg)?;
    checks.push(Check::flag(s, "thm10 on f1 (Lambda=2) holds", holds(&rep)));

    let corrupted = HarmonicMap::new(
        PowerSeries::from_real(&[0.0, 1.0, 0.1]),
        PowerSeries::from_real(&[0.0, 0.0, 0.1]),
        "corrupted",
    );
    let rep = hypothesis_check(Hypothesis::Thm10, &corrupted, &l2, &cfg)?;
    checks.push(Check::flag(
        s,
        "thm10 flags a2*b2 != 0 with witness n=2",
        rep.verdict == Verdict::Violated && rep.witness == Some(Witness::Index(2)),
    ));

    let rep = distortion_growth_check(
        GrowthBound::SchwarzSp,
        &HarmonicMap::identity(),
        &ClassParams::default().with_lambda_small(1.0),
        &cfg,
    )?;
    checks.push(Check::flag(
        s,
        "schwarz growth on z (lambda=1) holds",
        holds(&rep),
    ));
    let rep = distortion_growth_check(GrowthBound::CauchyBounded, &f0, &m2, &cfg)?;
    checks.push(Check::flag(
        s,
        "cauchy growth on f0 (M=2) holds",
        holds(&rep),
    ));
    Ok(checks)
}

fn conjecture(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let (k, lambda, n) = opts.conjecture;
    let rep = conjecture_scan(k, lambda, n, &opts.oracle)?;
    let s = Suite::Conjecture;
    let mut checks = vec![
        Check::gate(
            s,
            format!(
                "max observed <= proven bound ({} accepted of {})",
                rep.accepted, rep.samples
            ),
            rep.max_observed,
            rep.proven_bound,
            rep.proven_bound + PROVEN_BOUND_SLACK - rep.max_observed,
            PROVEN_BOUND_SLACK,
        ),
        Check::close(
            s,
            "Fn witness attains conjectured bound",
            rep.witness_value,
            rep.conjectured_bound,
            4.0 * f64::EPSILON * rep.conjectured_bound,
        ),
    ];
    checks.push(Check {
        suite: s.name(),
        name: format!(
            "random samples above conjectured bound: {}",
            rep.counterexamples.len()
        ),
        value: rep.max_random.unwrap_or(f64::NAN),
        reference: rep.conjectured_bound,
        margin: rep.conjectured_bound - rep.max_random.unwrap_or(f64::NAN),
        tolerance: crate::oracle::COUNTEREXAMPLE_TOL,
        status: Status::Info,
    });
    Ok(checks)
}
