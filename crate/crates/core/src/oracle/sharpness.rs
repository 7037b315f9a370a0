use super::schlicht_radius;
use crate::error::{Error, Result};
use crate::extremal::{build_extremal, critical_radius, ExtremalSpec};
use crate::radii::{
    elliptic_jacobian_radii, elliptic_radii, quasiregular_jacobian_radii, quasiregular_radii,
    sp_univalence_radius, theorem_a_radii, ClassParams, RadiusPair, SpVariant, Theorem,
};

/// Boundary samples used for the schlicht estimate.
pub const SHARPNESS_SAMPLES: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
pub struct SharpnessReport {
    pub theorem: Theorem,
    pub extremal: ExtremalSpec,
    pub formula: RadiusPair,
    /// First zero of the extremal's analytic derivative on `(0, 1)`.
    pub critical_radius: Option<f64>,
    /// `critical_radius - formula radius`.
    pub radius_delta: Option<f64>,
    /// `min |f|` on the circle of the formula radius.
    pub oracle_schlicht: Option<f64>,
    /// `oracle_schlicht - formula schlicht radius`.
    pub schlicht_delta: Option<f64>,
}

fn require_unit(theorem: Theorem, params: &ClassParams, kp_too: bool) -> Result<()> {
    let ctx = match theorem {
        Theorem::Thm1 => "sharpness (thm1)",
        Theorem::Cor1 => "sharpness (cor1)",
        _ => "sharpness (cor2)",
    };
    if params.k != 1.0 {
        return Err(Error::inadmissible(
            ctx,
            format!("K = 1 (got K = {})", params.k),
        ));
    }
    if kp_too && params.kp != 0.0 {
        return Err(Error::inadmissible(
            ctx,
            format!("K' = 0 (got K' = {})", params.kp),
        ));
    }
    Ok(())
}

/// Compares a radius formula with its extremal map.
pub fn sharpness_report(theorem: Theorem, params: &ClassParams) -> Result<SharpnessReport> {
    let (formula, spec) = match theorem {
        Theorem::ThmA
        | Theorem::Thm1
        | Theorem::Cor1
        | Theorem::Cor2
        | Theorem::Thm3
        | Theorem::Thm12
        | Theorem::Thm10 => {
            let lambda = params.require_lambda_big("sharpness")?;
            let formula = match theorem {
                Theorem::ThmA => theorem_a_radii(lambda)?,
                Theorem::Thm1 => {
                    require_unit(theorem, params, true)?;
                    elliptic_radii(1.0, 0.0, lambda)?
                }
                Theorem::Cor1 => {
                    require_unit(theorem, params, false)?;
                    quasiregular_radii(1.0, lambda)?
                }
                Theorem::Cor2 => {
                    require_unit(theorem, params, false)?;
                    quasiregular_jacobian_radii(1.0, lambda)?
                }
                Theorem::Thm3 => {
                    require_unit(theorem, params, true)?;
                    elliptic_jacobian_radii(1.0, 0.0, lambda)?
                }
                Theorem::Thm12 => {
                    sp_univalence_radius(SpVariant::Thm12BoundedHPrime { lambda_big: lambda })?
                }
                _ => sp_univalence_radius(SpVariant::Thm10Radial { lambda_big: lambda })?,
            };
            (formula, ExtremalSpec::f1(lambda))
        }
        Theorem::Thm11 | Theorem::Thm0 => {
            let m = params.require_m("sharpness")?;
            let formula = if theorem == Theorem::Thm11 {
                sp_univalence_radius(SpVariant::Thm11BoundedH { m })?
            } else {
                sp_univalence_radius(SpVariant::Thm0Sharp { m })?
            };
            (formula, ExtremalSpec::f0(m))
        }
        other => return Err(Error::NoExtremal(other.tag().to_string())),
    };
    let f = build_extremal(&spec)?;
    let critical = critical_radius(&spec)?;
    let r = formula.univalence_radius;
    let oracle_schlicht = if r < 1.0 {
        Some(schlicht_radius(&f, r, SHARPNESS_SAMPLES)?)
    } else {
        None
    };
    Ok(SharpnessReport {
        theorem,
        extremal: spec,
        formula,
        critical_radius: critical,
        radius_delta: critical.map(|c| c - r),
        oracle_schlicht,
        schlicht_delta: oracle_schlicht
            .zip(formula.schlicht_radius)
            .map(|(o, s)| o - s),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm11_critical_radius() {
        let rep = sharpness_report(Theorem::Thm11, &ClassParams::default().with_m(2.0)).unwrap();
        assert!(rep.radius_delta.unwrap().abs() < 1e-10);
        assert!(rep.schlicht_delta.is_none());
    }

    #[test]
    fn thm12_and_thm_a_on_f1() {
        let params = ClassParams::default().with_lambda_big(2.0);
        let rep = sharpness_report(Theorem::Thm12, &params).unwrap();
        assert!((rep.critical_radius.unwrap() - 0.5).abs() < 1e-12);
        let rep = sharpness_report(Theorem::ThmA, &params).unwrap();
        assert!(rep.radius_delta.unwrap().abs() < 1e-12);
        assert!(rep.schlicht_delta.unwrap().abs() < 1e-8, "{rep:?}");
    }

    #[test]
    fn thm0_schlicht() {
        let rep = sharpness_report(Theorem::Thm0, &ClassParams::default().with_m(2.0)).unwrap();
        assert!(rep.schlicht_delta.unwrap().abs() < 1e-8);
    }

    #[test]
    fn errors() {
        let params = ClassParams::default().with_lambda_big(2.0);
        assert!(matches!(
            sharpness_report(Theorem::Thm6, &params),
            Err(Error::NoExtremal(_))
        ));
        assert!(sharpness_report(
            Theorem::Thm1,
            &ClassParams::new(2.0, 0.0).with_lambda_big(2.0)
        )
        .is_err());
        assert!(sharpness_report(
            Theorem::Thm1,
            &ClassParams::new(1.0, 0.5).with_lambda_big(2.0)
        )
        .is_err());
        assert!(sharpness_report(Theorem::Thm11, &params).is_err());
    }
}
