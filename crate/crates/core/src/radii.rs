//! Closed-form univalence radii, schlicht-disk radii, coefficient bounds and
//! the two auxiliary logarithmic inequalities.
//!
//! Most schlicht radii share one kernel, the sharp Theorem A value
//! `φ(x) = x + (x³ - x) ln(1 - 1/x²)` evaluated at an effective distortion
//! bound `x >= 1`; see [`landau_kernel`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Parameter bundle shared by the mapping classes.
///
/// `k` and `kp` always carry a value (defaults `1` and `0`); the remaining
/// bounds are only meaningful for some results and stay `None` otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassParams {
    /// `K >= 1`
    pub k: f64,
    /// `K' >= 0`
    pub kp: f64,
    /// `Λ`
    pub lambda_big: Option<f64>,
    /// `λ`
    pub lambda_small: Option<f64>,
    /// `M`
    pub m: Option<f64>,
}

impl Default for ClassParams {
    fn default() -> Self {
        ClassParams {
            k: 1.0,
            kp: 0.0,
            lambda_big: None,
            lambda_small: None,
            m: None,
        }
    }
}

impl ClassParams {
    pub fn new(k: f64, kp: f64) -> Self {
        ClassParams {
            k,
            kp,
            ..Default::default()
        }
    }

    pub fn with_lambda_big(mut self, value: f64) -> Self {
        self.lambda_big = Some(value);
        self
    }

    pub fn with_lambda_small(mut self, value: f64) -> Self {
        self.lambda_small = Some(value);
        self
    }

    pub fn with_m(mut self, value: f64) -> Self {
        self.m = Some(value);
        self
    }

    pub(crate) fn validate_distortion(&self) -> Result<()> {
        check_k(self.k, "class parameters")?;
        check_kp(self.kp, "class parameters")
    }

    pub fn require_lambda_big(&self, context: &'static str) -> Result<f64> {
        self.lambda_big.ok_or(Error::MissingParam {
            context,
            name: "Lambda",
        })
    }

    pub fn require_lambda_small(&self, context: &'static str) -> Result<f64> {
        self.lambda_small.ok_or(Error::MissingParam {
            context,
            name: "lambda",
        })
    }

    pub fn require_m(&self, context: &'static str) -> Result<f64> {
        self.m.ok_or(Error::MissingParam { context, name: "M" })
    }
}

/// The result a radius pair or bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// Classical Landau theorem for bounded analytic functions.
    Landau,
    /// Sharp Landau theorem for bounded maximum distortion.
    ThmA,
    /// Prior elliptic result, `ρ₁ = 1/(1 + KΛ + √K')`.
    ThmC,
    /// Prior quasiregular result, `ρ₂ = 1/(1 + K^{3/2}Λ)`.
    ThmD,
    /// Elliptic maps with `λ_f(0) = 1`.
    Thm1,
    /// `K' = 0` specialization of [`Theorem::Thm1`].
    Cor1,
    /// Elliptic maps with `J_f(0) = 1`.
    Thm3,
    /// `K' = 0` specialization of [`Theorem::Thm3`].
    Cor2,
    /// Sense-preserving maps with bounded `λ_f`.
    Thm6,
    /// K-quasiregular maps with bounded `|h|`.
    Thm7,
    /// Sense-preserving maps with bounded `|h|`.
    Thm11,
    /// Sense-preserving maps with bounded `|h'|`.
    Thm12,
    /// Maps with the derivative-difference growth condition.
    Thm0,
    /// Maps with bounded radial derivative and disjoint coefficients.
    Thm10,
}

impl Theorem {
    pub const ALL: [Theorem; 14] = [
        Theorem::Landau,
        Theorem::ThmA,
        Theorem::ThmC,
        Theorem::ThmD,
        Theorem::Thm1,
        Theorem::Cor1,
        Theorem::Thm3,
        Theorem::Cor2,
        Theorem::Thm6,
        Theorem::Thm7,
        Theorem::Thm11,
        Theorem::Thm12,
        Theorem::Thm0,
        Theorem::Thm10,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Theorem::Landau => "landau",
            Theorem::ThmA => "thmA",
            Theorem::ThmC => "thmC",
            Theorem::ThmD => "thmD",
            Theorem::Thm1 => "thm1",
            Theorem::Cor1 => "cor1",
            Theorem::Thm3 => "thm3",
            Theorem::Cor2 => "cor2",
            Theorem::Thm6 => "thm6",
            Theorem::Thm7 => "thm7",
            Theorem::Thm11 => "thm11",
            Theorem::Thm12 => "thm12",
            Theorem::Thm0 => "thm0",
            Theorem::Thm10 => "thm10",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Theorem {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Theorem::ALL
            .iter()
            .copied()
            .find(|t| t.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown theorem tag `{s}`"))
    }
}

/// Univalence radius and (optional) schlicht-disk radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusPair {
    pub univalence_radius: f64,
    /// `None` for results that assert univalence only.
    pub schlicht_radius: Option<f64>,
    pub source: Theorem,
}

impl RadiusPair {
    fn new(source: Theorem, univalence_radius: f64, schlicht_radius: Option<f64>) -> Self {
        RadiusPair {
            univalence_radius,
            schlicht_radius,
            source,
        }
    }

    /// Schlicht radius or NaN, for tabulation.
    pub fn sigma(&self) -> f64 {
        self.schlicht_radius.unwrap_or(f64::NAN)
    }
}

fn check_k(k: f64, context: &'static str) -> Result<()> {
    if k.is_finite() && k >= 1.0 {
        Ok(())
    } else {
        Err(Error::inadmissible(
            context,
            format!("K >= 1 (got K = {k})"),
        ))
    }
}

fn check_kp(kp: f64, context: &'static str) -> Result<()> {
    if kp.is_finite() && kp >= 0.0 {
        Ok(())
    } else {
        Err(Error::inadmissible(
            context,
            format!("K' >= 0 (got K' = {kp})"),
        ))
    }
}

fn check_finite(value: f64, name: &str, context: &'static str) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::inadmissible(context, format!("finite {name}")))
    }
}

/// `φ(x) = x + (x³ - x) ln(1 - 1/x²)` for `x >= 1`, with `φ(1) = 1`.
///
/// With `u = 1/x²` the bracket `1 + (1/u - 1) ln(1 - u)` equals
/// `Σ_{k>=1} u^k / (k(k+1))`, so for small `u` the series is summed instead
/// of the closed form, which loses about `log10(2x²)` digits to cancellation.
pub fn landau_kernel(x: f64) -> f64 {
    debug_assert!(x >= 1.0);
    let u = 1.0 / (x * x);
    if u >= 1.0 {
        return 1.0;
    }
    if u <= 0.5 {
        let mut sum: f64 = 0.0;
        let mut power = u;
        let mut k = 1.0;
        while power > f64::EPSILON * 1e-3 * sum.max(f64::MIN_POSITIVE) {
            sum += power / (k * (k + 1.0));
            power *= u;
            k += 1.0;
        }
        x * sum
    } else {
        x + (x * x * x - x) * (-u).ln_1p()
    }
}

/// Classical Landau radii for `|f| < M`, `f'(0) = 1`:
/// `ρ₀ = M - √(M² - 1)`, `R₀ = M ρ₀²`.
pub fn landau_classical(m: f64) -> Result<RadiusPair> {
    check_finite(m, "M", "classical Landau theorem")?;
    if m < 1.0 {
        return Err(Error::inadmissible(
            "classical Landau theorem",
            format!("M >= 1 (got M = {m})"),
        ));
    }
    // 1/(M + √(M²-1)) avoids the cancellation in M - √(M²-1)
    let rho = 1.0 / (m + (m * m - 1.0).sqrt());
    Ok(RadiusPair::new(Theorem::Landau, rho, Some(m * rho * rho)))
}

/// Theorem A: `Λ_f < Λ` gives `r = 1/Λ` and `R = φ(Λ)`; `Λ = 1` is the limit `(1, 1)`.
pub fn theorem_a_radii(lambda_big: f64) -> Result<RadiusPair> {
    check_finite(lambda_big, "Lambda", "theorem A")?;
    if lambda_big < 1.0 {
        return Err(Error::inadmissible(
            "theorem A",
            format!("Lambda >= 1 (got Lambda = {lambda_big})"),
        ));
    }
    Ok(RadiusPair::new(
        Theorem::ThmA,
        1.0 / lambda_big,
        Some(landau_kernel(lambda_big)),
    ))
}

/// Half of `KΛ + √(K²Λ² + 4K')`: the bound on `Λ_f` forced by ellipticity and `λ_f < Λ`.
fn elliptic_distortion_bound(k: f64, kp: f64, lambda_big: f64) -> f64 {
    let kl = k * lambda_big;
    (kl + (kl * kl + 4.0 * kp).sqrt()) / 2.0
}

/// Elliptic maps with `λ_f(0) = 1`, `λ_f < Λ`:
/// `r₁ = 2/(KΛ + √(K²Λ² + 4K'))`, `σ₁ = φ(1/r₁)`.
pub fn elliptic_radii(k: f64, kp: f64, lambda_big: f64) -> Result<RadiusPair> {
    const CTX: &str = "elliptic radii (thm1)";
    check_k(k, CTX)?;
    check_kp(kp, CTX)?;
    check_finite(lambda_big, "Lambda", CTX)?;
    if lambda_big <= 1.0 {
        return Err(Error::inadmissible(
            CTX,
            format!("Lambda > 1 (got Lambda = {lambda_big})"),
        ));
    }
    let bound = elliptic_distortion_bound(k, kp, lambda_big);
    Ok(RadiusPair::new(
        Theorem::Thm1,
        1.0 / bound,
        Some(landau_kernel(bound)),
    ))
}

/// Quasiregular maps with `λ_f(0) = 1`, `λ_f < Λ`: `r₂ = 1/(KΛ)`, `σ₂ = φ(KΛ)`.
pub fn quasiregular_radii(k: f64, lambda_big: f64) -> Result<RadiusPair> {
    const CTX: &str = "quasiregular radii (cor1)";
    check_k(k, CTX)?;
    check_finite(lambda_big, "Lambda", CTX)?;
    if lambda_big <= 1.0 {
        return Err(Error::inadmissible(
            CTX,
            format!("Lambda > 1 (got Lambda = {lambda_big})"),
        ));
    }
    let kl = k * lambda_big;
    Ok(RadiusPair::new(
        Theorem::Cor1,
        1.0 / kl,
        Some(landau_kernel(kl)),
    ))
}

/// Elliptic maps with `J_f(0) = 1`, `λ_f < Λ`:
/// `r₃ = 2/(√(K+K') (KΛ + √(K²Λ² + 4K')))`, `σ₃ = φ(1/r₃)/√(K+K')`.
pub fn elliptic_jacobian_radii(k: f64, kp: f64, lambda_big: f64) -> Result<RadiusPair> {
    const CTX: &str = "elliptic radii (thm3)";
    check_k(k, CTX)?;
    check_kp(kp, CTX)?;
    check_finite(lambda_big, "Lambda", CTX)?;
    let root = (k + kp).sqrt();
    if lambda_big <= 1.0 / root {
        return Err(Error::inadmissible(
            CTX,
            format!(
                "Lambda > 1/sqrt(K + K') = {} (got Lambda = {lambda_big})",
                1.0 / root
            ),
        ));
    }
    let bound = root * elliptic_distortion_bound(k, kp, lambda_big);
    Ok(RadiusPair::new(
        Theorem::Thm3,
        1.0 / bound,
        Some(landau_kernel(bound) / root),
    ))
}

/// Quasiregular maps with `J_f(0) = 1`, `λ_f < Λ`:
/// `r₃' = 1/(K^{3/2} Λ)`, `σ₃' = KΛ + (K⁴Λ³ - KΛ) ln(1 - 1/(K³Λ²))`.
pub fn quasiregular_jacobian_radii(k: f64, lambda_big: f64) -> Result<RadiusPair> {
    const CTX: &str = "quasiregular radii (cor2)";
    check_k(k, CTX)?;
    check_finite(lambda_big, "Lambda", CTX)?;
    let root = k.sqrt();
    if lambda_big <= 1.0 / root {
        return Err(Error::inadmissible(
            CTX,
            format!(
                "Lambda > 1/sqrt(K) = {} (got Lambda = {lambda_big})",
                1.0 / root
            ),
        ));
    }
    let x = k * root * lambda_big;
    Ok(RadiusPair::new(
        Theorem::Cor2,
        1.0 / x,
        Some(landau_kernel(x) / root),
    ))
}

/// Prior-work comparators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PriorResult {
    ThmC,
    ThmD,
}

pub fn prior_radii(variant: PriorResult, k: f64, kp: f64, lambda_big: f64) -> Result<RadiusPair> {
    let ctx = match variant {
        PriorResult::ThmC => "prior radii (thmC)",
        PriorResult::ThmD => "prior radii (thmD)",
    };
    check_k(k, ctx)?;
    check_finite(lambda_big, "Lambda", ctx)?;
    if lambda_big <= 0.0 {
        return Err(Error::inadmissible(
            ctx,
            format!("Lambda > 0 (got Lambda = {lambda_big})"),
        ));
    }
    match variant {
        PriorResult::ThmC => {
            check_kp(kp, ctx)?;
            let s = k * lambda_big + kp.sqrt();
            let rho = 1.0 / (1.0 + s);
            let big_r = 1.0 + s * (-rho).ln_1p();
            Ok(RadiusPair::new(Theorem::ThmC, rho, Some(big_r)))
        }
        PriorResult::ThmD => {
            let s = k.powf(1.5) * lambda_big;
            let rho = 1.0 / (1.0 + s);
            let big_r = 1.0 / k.sqrt() + k * lambda_big * (-rho).ln_1p();
            Ok(RadiusPair::new(Theorem::ThmD, rho, Some(big_r)))
        }
    }
}

/// Sense-preserving maps with `h'(0) = 1`, `g'(0) = 0`, `λ_f <= λ`:
/// `r₄ = 1/(2(√2+1)λ)`, `σ₄ = φ((√2+1)λ)/2`.
pub fn sp_lambda_radii(lambda_small: f64) -> Result<RadiusPair> {
    const CTX: &str = "sense-preserving radii (thm6)";
    check_finite(lambda_small, "lambda", CTX)?;
    if lambda_small < 1.0 {
        return Err(Error::inadmissible(
            CTX,
            format!("lambda >= 1 (got lambda = {lambda_small})"),
        ));
    }
    let x = (std::f64::consts::SQRT_2 + 1.0) * lambda_small;
    Ok(RadiusPair::new(
        Theorem::Thm6,
        1.0 / (2.0 * x),
        Some(landau_kernel(x) / 2.0),
    ))
}

/// K-quasiregular maps with `λ_f(0) = 1`, `|h| <= M`:
/// `r₇ = (K+1)/(8KM)`, `σ₇ = φ(4KM/(K+1))/2`.
pub fn quasiregular_bounded_radii(k: f64, m: f64) -> Result<RadiusPair> {
    const CTX: &str = "bounded quasiregular radii (thm7)";
    check_k(k, CTX)?;
    check_finite(m, "M", CTX)?;
    let x = 4.0 * k * m / (k + 1.0);
    if !(m > 0.0 && x > 1.0) {
        return Err(Error::inadmissible(
            CTX,
            format!("M > 0 and 4KM/(K+1) > 1 (got {x})"),
        ));
    }
    Ok(RadiusPair::new(
        Theorem::Thm7,
        (k + 1.0) / (8.0 * k * m),
        Some(landau_kernel(x) / 2.0),
    ))
}

/// Sense-preserving and coefficient-condition results.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpVariant {
    /// `|h| <= M`: univalent on `D_{ρ₀}`.
    Thm11BoundedH { m: f64 },
    /// `|h'| < Λ`: univalent on `D_{1/Λ}`.
    Thm12BoundedHPrime { lambda_big: f64 },
    /// Derivative-difference growth: `(ρ₀, Mρ₀²)`.
    Thm0Sharp { m: f64 },
    /// Radial derivative bound: `(1/Λ, Λ - √(Λ²-1))`.
    Thm10Radial { lambda_big: f64 },
}

pub fn sp_univalence_radius(variant: SpVariant) -> Result<RadiusPair> {
    match variant {
        SpVariant::Thm11BoundedH { m } | SpVariant::Thm0Sharp { m } => {
            let ctx = if matches!(variant, SpVariant::Thm11BoundedH { .. }) {
                "bounded-h radius (thm11)"
            } else {
                "growth-condition radii (thm0)"
            };
            check_finite(m, "M", ctx)?;
            if m <= 1.0 {
                return Err(Error::inadmissible(ctx, format!("M > 1 (got M = {m})")));
            }
            let classical = landau_classical(m)?;
            Ok(match variant {
                SpVariant::Thm11BoundedH { .. } => {
                    RadiusPair::new(Theorem::Thm11, classical.univalence_radius, None)
                }
                _ => RadiusPair::new(
                    Theorem::Thm0,
                    classical.univalence_radius,
                    classical.schlicht_radius,
                ),
            })
        }
        SpVariant::Thm12BoundedHPrime { lambda_big } => {
            const CTX: &str = "bounded-derivative radius (thm12)";
            check_finite(lambda_big, "Lambda", CTX)?;
            if lambda_big <= 1.0 {
                return Err(Error::inadmissible(
                    CTX,
                    format!("Lambda > 1 (got Lambda = {lambda_big})"),
                ));
            }
            Ok(RadiusPair::new(Theorem::Thm12, 1.0 / lambda_big, None))
        }
        SpVariant::Thm10Radial { lambda_big } => {
            const CTX: &str = "radial-derivative radii (thm10)";
            check_finite(lambda_big, "Lambda", CTX)?;
            if lambda_big < 1.0 {
                return Err(Error::inadmissible(
                    CTX,
                    format!("Lambda >= 1 (got Lambda = {lambda_big})"),
                ));
            }
            // Λ - √(Λ²-1) = 1/(Λ + √(Λ²-1))
            let sigma = 1.0 / (lambda_big + (lambda_big * lambda_big - 1.0).sqrt());
            Ok(RadiusPair::new(
                Theorem::Thm10,
                1.0 / lambda_big,
                Some(sigma),
            ))
        }
    }
}

/// Which coefficient estimate to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundVariant {
    /// Elliptic, `J_f(0) = 1`.
    Thm2,
    /// Elliptic, `λ_f(0) = 1`.
    Cor5,
    /// Quasiregular, `J_f(0) = 1`.
    Cor3,
    /// Quasiregular, `λ_f(0) = 1`.
    Cor4,
    /// Conjectured sharp quasiregular bound `K(Λ² - 1)/(nΛ)`.
    Conjecture,
}

impl BoundVariant {
    pub const ALL: [BoundVariant; 5] = [
        BoundVariant::Thm2,
        BoundVariant::Cor5,
        BoundVariant::Cor3,
        BoundVariant::Cor4,
        BoundVariant::Conjecture,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            BoundVariant::Thm2 => "thm2",
            BoundVariant::Cor5 => "cor5",
            BoundVariant::Cor3 => "cor3",
            BoundVariant::Cor4 => "cor4",
            BoundVariant::Conjecture => "conjecture",
        }
    }
}

impl FromStr for BoundVariant {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        BoundVariant::ALL
            .iter()
            .copied()
            .find(|v| v.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown bound variant `{s}`"))
    }
}

fn check_bound_params(variant: BoundVariant, k: f64, kp: f64, lambda_big: f64) -> Result<()> {
    const CTX: &str = "coefficient bound";
    check_k(k, CTX)?;
    check_kp(kp, CTX)?;
    check_finite(lambda_big, "Lambda", CTX)?;
    // Λ bounds λ_f everywhere, in particular λ_f(0): 1 under λ_f(0) = 1 and at
    // least 1/√(K+K') under J_f(0) = 1.
    let floor = match variant {
        BoundVariant::Thm2 => 1.0 / (k + kp).sqrt(),
        BoundVariant::Cor3 => 1.0 / k.sqrt(),
        BoundVariant::Cor5 | BoundVariant::Cor4 | BoundVariant::Conjecture => 1.0,
    };
    if lambda_big < floor {
        return Err(Error::inadmissible(
            CTX,
            format!(
                "Lambda >= {floor} for {} (got Lambda = {lambda_big})",
                variant.tag()
            ),
        ));
    }
    Ok(())
}

/// Upper bound on `|a_n| + |b_n|` for `n >= 2`.
pub fn coefficient_bound(
    variant: BoundVariant,
    k: f64,
    kp: f64,
    lambda_big: f64,
    n: usize,
) -> Result<f64> {
    if n < 2 {
        return Err(Error::inadmissible(
            "coefficient bound",
            format!("n >= 2 (got n = {n})"),
        ));
    }
    check_bound_params(variant, k, kp, lambda_big)?;
    let n = n as f64;
    let l = lambda_big;
    Ok(match variant {
        BoundVariant::Thm2 => {
            let s = k * l + (k * k * l * l + 4.0 * kp).sqrt();
            ((k + kp) * s * s - 4.0) / (2.0 * n * (k + kp) * s)
        }
        BoundVariant::Cor5 => {
            let s = k * l + (k * k * l * l + 4.0 * kp).sqrt();
            (s * s - 4.0) / (2.0 * n * s)
        }
        BoundVariant::Cor3 => (k * k * k * l * l - 1.0) / (n * l * k * k),
        BoundVariant::Cor4 => (k * k * l * l - 1.0) / (n * l * k),
        BoundVariant::Conjecture => k * (l * l - 1.0) / (n * l),
    })
}

/// Bounds `(lo, hi)` on `|a_1| + |b_1|`.
pub fn first_coefficient_interval(variant: BoundVariant, k: f64, kp: f64) -> Result<(f64, f64)> {
    const CTX: &str = "first coefficient interval";
    check_k(k, CTX)?;
    check_kp(kp, CTX)?;
    match variant {
        BoundVariant::Thm2 => {
            let root = (k + kp).sqrt();
            Ok((1.0 / root, root))
        }
        BoundVariant::Cor5 => Ok((1.0, (k + (k * k + 4.0 * kp).sqrt()) / 2.0)),
        BoundVariant::Cor3 => Ok((1.0 / k.sqrt(), k.sqrt())),
        BoundVariant::Cor4 => Ok((1.0, k)),
        BoundVariant::Conjecture => Err(Error::inadmissible(CTX, "one of thm2, cor5, cor3, cor4")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma {
    /// `ln x > (x - 1/x)/2` on `(0, 1)`.
    G,
    /// `1 + x ln(x/(1+x)) < 1/(2(x + 1/2))` on `[1, ∞)`.
    H,
}

/// Positive slack of the lemma's inequality at `x`.
pub fn lemma_inequality_margin(which: Lemma, x: f64) -> Result<f64> {
    match which {
        Lemma::G => {
            if !(x > 0.0 && x < 1.0) {
                return Err(Error::inadmissible(
                    "lemma G",
                    format!("0 < x < 1 (got {x})"),
                ));
            }
            Ok((x - 1.0).ln_1p() - 0.5 * (x - 1.0 / x))
        }
        Lemma::H => {
            if !(x.is_finite() && x >= 1.0) {
                return Err(Error::inadmissible("lemma H", format!("x >= 1 (got {x})")));
            }
            // ln(x/(1+x)) = ln(1 - 1/(1+x))
            let lhs = 1.0 + x * (-1.0 / (1.0 + x)).ln_1p();
            Ok(1.0 / (2.0 * (x + 0.5)) - lhs)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    // Reference values evaluated with 30-digit arithmetic.
    #[test]
    fn kernel_matches_high_precision() {
        let cases = [
            (1.0, 1.0),
            (1.01, 0.930279269713718480597576787),
            (1.2, 0.573990704532713798406441805813),
            (2.0, 0.273907565289314435364685964037),
            (
                1.0 + std::f64::consts::SQRT_2,
                0.220085776367853413612871755616,
            ),
            (9.0, 0.0557856010388496158689473855630),
            (30.0, 0.0166728429378160524214004333984),
        ];
        for (x, expected) in cases {
            let got = landau_kernel(x);
            assert!(close(got, expected, 2e-15 * expected), "x = {x}: {got}");
        }
    }

    #[test]
    fn kernel_is_continuous_across_branch() {
        let x = std::f64::consts::SQRT_2;
        let below = landau_kernel(x * (1.0 - 1e-12));
        let above = landau_kernel(x * (1.0 + 1e-12));
        assert!(close(below, above, 1e-11));
    }

    #[test]
    fn landau_examples() {
        let p = landau_classical(1.0).unwrap();
        assert_eq!((p.univalence_radius, p.sigma()), (1.0, 1.0));
        let p = landau_classical(2.0).unwrap();
        assert!(close(p.univalence_radius, 0.267949192431122706, 1e-15));
        assert!(close(p.sigma(), 0.143593539448981652, 1e-15));
        let p = landau_classical(1.5).unwrap();
        assert!(close(p.univalence_radius, 0.381966011250105152, 1e-15));
        assert!(landau_classical(0.9).is_err());
    }

    #[test]
    fn theorem_a_examples() {
        let p = theorem_a_radii(1.0).unwrap();
        assert_eq!((p.univalence_radius, p.sigma()), (1.0, 1.0));
        let p = theorem_a_radii(2.0).unwrap();
        assert_eq!(p.univalence_radius, 0.5);
        assert!(close(p.sigma(), 0.273907565289314435, 1e-15));
        let p = theorem_a_radii(1.2).unwrap();
        assert!(close(p.univalence_radius, 0.833333333333333333, 1e-15));
        assert!(close(p.sigma(), 0.573990704532713798, 1e-15));
        assert!(theorem_a_radii(0.5).is_err());
    }

    #[test]
    fn elliptic_table_spots() {
        let p = elliptic_radii(1.0, 1.1, 1.2).unwrap();
        assert!(close(p.univalence_radius, 0.5530, 5e-5));
        assert!(close(p.sigma(), 0.3100, 5e-5));
        let p = elliptic_radii(2.0, 2.1, 2.2).unwrap();
        assert!(close(p.univalence_radius, 0.2069, 5e-5));
        assert!(close(p.sigma(), 0.1049, 5e-5));
    }

    #[test]
    fn elliptic_reduces_to_quasiregular() {
        for &(k, l) in &[(1.0, 1.5), (2.0, 3.0), (1.3, 1.01)] {
            let a = elliptic_radii(k, 0.0, l).unwrap();
            let b = quasiregular_radii(k, l).unwrap();
            assert_eq!(a.univalence_radius, 1.0 / (k * l));
            assert_eq!(a.univalence_radius, b.univalence_radius);
            assert_eq!(a.schlicht_radius, b.schlicht_radius);
        }
    }

    #[test]
    fn elliptic_rejects_inadmissible() {
        assert!(elliptic_radii(0.5, 0.0, 2.0).is_err());
        assert!(elliptic_radii(1.0, -0.1, 2.0).is_err());
        assert!(elliptic_radii(1.0, 0.0, 1.0).is_err());
        let err = elliptic_radii(0.5, 0.0, 2.0).unwrap_err().to_string();
        assert!(err.contains("K >= 1"), "{err}");
    }

    #[test]
    fn jacobian_radii_examples() {
        let p = elliptic_jacobian_radii(1.2, 0.0, 1.4).unwrap();
        assert!(close(p.univalence_radius, 0.5434, 5e-5));
        assert!(close(p.sigma(), 0.2768, 5e-5));
        let p = elliptic_jacobian_radii(1.0, 0.0, 1.2).unwrap();
        assert!(close(p.univalence_radius, 0.8333, 5e-5));
        assert!(close(p.sigma(), 0.5740, 5e-5));
        let a = elliptic_jacobian_radii(1.0, 0.0, 1.7).unwrap();
        let b = theorem_a_radii(1.7).unwrap();
        assert_eq!(a.univalence_radius, b.univalence_radius);
        assert_eq!(a.schlicht_radius, b.schlicht_radius);
        // Λ must exceed 1/√(K+K')
        assert!(elliptic_jacobian_radii(2.0, 2.0, 0.5).is_err());
        assert!(elliptic_jacobian_radii(2.0, 2.0, 0.51).is_ok());
    }

    #[test]
    fn prior_examples() {
        let p = prior_radii(PriorResult::ThmC, 1.0, 1.1, 1.2).unwrap();
        assert!(close(p.univalence_radius, 0.3078, 5e-5));
        assert!(close(p.sigma(), 0.1727, 5e-5));
        let p = prior_radii(PriorResult::ThmD, 1.0, 0.0, 1.2).unwrap();
        assert!(close(p.univalence_radius, 0.4545, 5e-5));
        assert!(close(p.sigma(), 0.2726, 5e-5));
        let p = prior_radii(PriorResult::ThmD, 2.2, f64::NAN, 2.4).unwrap();
        assert!(close(p.univalence_radius, 0.1132, 5e-5));
        assert!(close(p.sigma(), 0.0397, 5e-5));
        assert!(prior_radii(PriorResult::ThmC, 1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn sp_lambda_examples() {
        let p = sp_lambda_radii(1.0).unwrap();
        assert!(close(p.univalence_radius, 0.207106781186547524, 1e-15));
        assert!(close(p.sigma(), 0.110042888183926707, 1e-15));
        let p = sp_lambda_radii(2.0).unwrap();
        assert!(close(p.univalence_radius, 0.103553390593273762, 1e-15));
        assert!(close(p.sigma(), 0.0525332823635864337, 1e-15));
        for l in [1.0, 1.7, 4.0] {
            let r = sp_lambda_radii(l).unwrap().univalence_radius;
            assert!(close(r * l, (std::f64::consts::SQRT_2 - 1.0) / 2.0, 1e-16));
        }
        assert!(sp_lambda_radii(0.9).is_err());
    }

    #[test]
    fn bounded_quasiregular_examples() {
        let p = quasiregular_bounded_radii(1.0, 1.0).unwrap();
        assert_eq!(p.univalence_radius, 0.25);
        assert!(close(p.sigma(), 0.136953782644657218, 1e-15));
        assert_eq!(
            quasiregular_bounded_radii(1.0, 2.0)
                .unwrap()
                .univalence_radius,
            0.125
        );
        assert!(close(
            quasiregular_bounded_radii(3.0, 1.0)
                .unwrap()
                .univalence_radius,
            1.0 / 6.0,
            1e-16
        ));
        assert!(quasiregular_bounded_radii(1.0, 0.4).is_err());
    }

    #[test]
    fn sp_univalence_examples() {
        let p = sp_univalence_radius(SpVariant::Thm10Radial { lambda_big: 1.0 }).unwrap();
        assert_eq!((p.univalence_radius, p.sigma()), (1.0, 1.0));
        let p = sp_univalence_radius(SpVariant::Thm10Radial { lambda_big: 2.0 }).unwrap();
        assert_eq!(p.univalence_radius, 0.5);
        assert!(close(p.sigma(), 0.267949192431122706, 1e-15));
        let p = sp_univalence_radius(SpVariant::Thm0Sharp { m: 2.0 }).unwrap();
        assert!(close(p.univalence_radius, 0.267949192431122706, 1e-15));
        assert!(close(p.sigma(), 0.143593539448981652, 1e-15));
        let p = sp_univalence_radius(SpVariant::Thm11BoundedH { m: 2.0 }).unwrap();
        assert_eq!(p.schlicht_radius, None);
        let p = sp_univalence_radius(SpVariant::Thm12BoundedHPrime { lambda_big: 2.0 }).unwrap();
        assert_eq!((p.univalence_radius, p.schlicht_radius), (0.5, None));
        assert!(sp_univalence_radius(SpVariant::Thm11BoundedH { m: 1.0 }).is_err());
        assert!(sp_univalence_radius(SpVariant::Thm12BoundedHPrime { lambda_big: 1.0 }).is_err());
        assert!(sp_univalence_radius(SpVariant::Thm10Radial { lambda_big: 0.99 }).is_err());
    }

    #[test]
    fn coefficient_bound_examples() {
        assert_eq!(
            coefficient_bound(BoundVariant::Cor4, 1.0, 0.0, 2.0, 2).unwrap(),
            0.75
        );
        assert_eq!(
            coefficient_bound(BoundVariant::Thm2, 1.0, 0.0, 2.0, 2).unwrap(),
            0.75
        );
        assert_eq!(
            coefficient_bound(BoundVariant::Conjecture, 2.0, 0.0, 2.0, 2).unwrap(),
            1.5
        );
        assert_eq!(
            coefficient_bound(BoundVariant::Cor4, 2.0, 0.0, 2.0, 2).unwrap(),
            1.875
        );
        assert!(coefficient_bound(BoundVariant::Cor4, 1.0, 0.0, 2.0, 1).is_err());
        assert!(coefficient_bound(BoundVariant::Cor4, 1.0, 0.0, 0.5, 2).is_err());
        assert!(coefficient_bound(BoundVariant::Thm2, 0.9, 0.0, 2.0, 2).is_err());
    }

    #[test]
    fn first_coefficient_examples() {
        assert_eq!(
            first_coefficient_interval(BoundVariant::Thm2, 1.0, 0.0).unwrap(),
            (1.0, 1.0)
        );
        assert_eq!(
            first_coefficient_interval(BoundVariant::Cor5, 2.0, 0.0).unwrap(),
            (1.0, 2.0)
        );
        assert_eq!(
            first_coefficient_interval(BoundVariant::Thm2, 2.0, 2.0).unwrap(),
            (0.5, 2.0)
        );
        assert_eq!(
            first_coefficient_interval(BoundVariant::Cor4, 3.0, 0.0).unwrap(),
            (1.0, 3.0)
        );
        assert!(first_coefficient_interval(BoundVariant::Conjecture, 1.0, 0.0).is_err());
    }

    #[test]
    fn lemma_examples() {
        assert!(close(
            lemma_inequality_margin(Lemma::G, 0.5).unwrap(),
            0.0568528194400546906,
            1e-16
        ));
        assert!(close(
            lemma_inequality_margin(Lemma::H, 1.0).unwrap(),
            0.0264805138932786428,
            1e-16
        ));
        let m = lemma_inequality_margin(Lemma::H, 100.0).unwrap();
        assert!(m > 0.0 && m < 1e-2);
        assert!(close(m, 8.2096949177375579e-6, 1e-15));
        assert!(lemma_inequality_margin(Lemma::G, 1.0).is_err());
        assert!(lemma_inequality_margin(Lemma::G, 0.0).is_err());
        assert!(lemma_inequality_margin(Lemma::H, 0.99).is_err());
    }

    #[test]
    fn theorem_tags_roundtrip() {
        for t in Theorem::ALL {
            assert_eq!(t.tag().parse::<Theorem>().unwrap(), t);
        }
        assert!("thm99".parse::<Theorem>().is_err());
    }
}
