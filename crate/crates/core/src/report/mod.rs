//! Tables, radius records, oracle summaries and verification suites rendered
//! as CSV.

mod verify;

use std::str::FromStr;

use crate::error::Result;
use crate::map::HarmonicMap;
use crate::oracle::{
    schlicht_radius, univalence_radius_search, OracleConfig, ScanReport, UnivalenceBracket,
};
use crate::radii::{
    elliptic_jacobian_radii, elliptic_radii, landau_classical, prior_radii,
    quasiregular_bounded_radii, quasiregular_jacobian_radii, quasiregular_radii, sp_lambda_radii,
    sp_univalence_radius, theorem_a_radii, ClassParams, PriorResult, RadiusPair, SpVariant,
    Theorem,
};

pub use verify::{run_suite, Check, Status, Suite, VerifyOptions, PROVEN_BOUND_SLACK};

/// `(K, K', Λ)` columns of the elliptic comparison table.
pub const TABLE1_PARAMS: [(f64, f64, f64); 6] = [
    (1.0, 1.1, 1.2),
    (1.2, 1.3, 1.4),
    (1.4, 1.5, 1.6),
    (1.6, 1.7, 1.8),
    (1.8, 1.9, 2.0),
    (2.0, 2.1, 2.2),
];

/// `(K, Λ)` columns of the quasiregular comparison table.
pub const TABLE2_PARAMS: [(f64, f64); 7] = [
    (1.0, 1.2),
    (1.2, 1.4),
    (1.4, 1.6),
    (1.6, 1.8),
    (1.8, 2.0),
    (2.0, 2.2),
    (2.2, 2.4),
];

/// Published 4-decimal values, one row per quantity in label order.
pub const TABLE1_REFERENCE: [[f64; 6]; 4] = [
    [0.5530, 0.4432, 0.3598, 0.2956, 0.2459, 0.2069],
    [0.3078, 0.2618, 0.2240, 0.1929, 0.1673, 0.1460],
    [0.3100, 0.2377, 0.1882, 0.1523, 0.1255, 0.1049],
    [0.1727, 0.1441, 0.1214, 0.1003, 0.0887, 0.0768],
];

pub const TABLE2_REFERENCE: [[f64; 7]; 4] = [
    [0.8333, 0.5434, 0.3773, 0.2745, 0.2070, 0.1607, 0.1277],
    [0.4545, 0.3521, 0.2739, 0.2154, 0.1715, 0.1385, 0.1132],
    [0.5740, 0.2768, 0.1676, 0.1113, 0.0783, 0.0573, 0.0433],
    [0.2726, 0.1838, 0.1281, 0.0920, 0.0679, 0.0514, 0.0397],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableId {
    Elliptic,
    Quasiregular,
}

impl TableId {
    pub fn labels(self) -> [&'static str; 4] {
        match self {
            TableId::Elliptic => ["r1", "rho1", "sigma1", "R1"],
            TableId::Quasiregular => ["r3'", "rho2", "sigma3'", "R2"],
        }
    }

    pub fn number(self) -> u8 {
        match self {
            TableId::Elliptic => 1,
            TableId::Quasiregular => 2,
        }
    }

    /// Reference value for `(row, column)`.
    pub fn reference(self, row: usize, column: usize) -> f64 {
        match self {
            TableId::Elliptic => TABLE1_REFERENCE[row][column],
            TableId::Quasiregular => TABLE2_REFERENCE[row][column],
        }
    }
}

impl FromStr for TableId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "1" => Ok(TableId::Elliptic),
            "2" => Ok(TableId::Quasiregular),
            _ => Err(format!("unknown table `{s}` (expected 1 or 2)")),
        }
    }
}

/// One parameter column of a comparison table.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub params: ClassParams,
    /// Unrounded values in label order; rounding happens on emission.
    pub values: Vec<(&'static str, f64)>,
}

impl TableRow {
    pub fn heading(&self) -> String {
        let l = self.params.lambda_big.unwrap_or(f64::NAN);
        if self.values[0].0 == "r1" {
            format!("({:.1},{:.1},{:.1})", self.params.k, self.params.kp, l)
        } else {
            format!("({:.1},{:.1})", self.params.k, l)
        }
    }
}

pub fn table_rows(id: TableId) -> Result<Vec<TableRow>> {
    let labels = id.labels();
    let row = |params: ClassParams, ours: RadiusPair, prior: RadiusPair| TableRow {
        params,
        values: vec![
            (labels[0], ours.univalence_radius),
            (labels[1], prior.univalence_radius),
            (labels[2], ours.sigma()),
            (labels[3], prior.sigma()),
        ],
    };
    match id {
        TableId::Elliptic => TABLE1_PARAMS
            .iter()
            .map(|&(k, kp, l)| {
                Ok(row(
                    ClassParams::new(k, kp).with_lambda_big(l),
                    elliptic_radii(k, kp, l)?,
                    prior_radii(PriorResult::ThmC, k, kp, l)?,
                ))
            })
            .collect(),
        TableId::Quasiregular => TABLE2_PARAMS
            .iter()
            .map(|&(k, l)| {
                Ok(row(
                    ClassParams::new(k, 0.0).with_lambda_big(l),
                    quasiregular_jacobian_radii(k, l)?,
                    prior_radii(PriorResult::ThmD, k, 0.0, l)?,
                ))
            })
            .collect(),
    }
}

fn csv_string(rows: Vec<Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for r in rows {
        w.write_record(&r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("utf-8 csv")
}

/// `quantity` column followed by one column per parameter tuple, 4 decimals.
pub fn table_csv(id: TableId) -> Result<String> {
    let rows = table_rows(id)?;
    let mut out = Vec::with_capacity(5);
    let mut header = vec!["quantity".to_string()];
    header.extend(rows.iter().map(TableRow::heading));
    out.push(header);
    for (i, label) in id.labels().iter().enumerate() {
        let mut line = vec![label.to_string()];
        line.extend(rows.iter().map(|r| format!("{:.4}", r.values[i].1)));
        out.push(line);
    }
    Ok(csv_string(out))
}

/// Formats with ten significant digits; scientific notation outside `[1e-4, 1e10)`.
pub fn fmt_sig(v: f64) -> String {
    if !v.is_finite() {
        return if v.is_nan() {
            "n/a".into()
        } else {
            format!("{v}")
        };
    }
    if v == 0.0 {
        return "0".into();
    }
    let mag = v.abs().log10().floor() as i32;
    if (-4..10).contains(&mag) {
        format!("{:.*}", (9 - mag) as usize, v)
    } else {
        format!("{v:.9e}")
    }
}

/// Radii of any supported result for the given parameters.
pub fn radii_for(theorem: Theorem, params: &ClassParams) -> Result<RadiusPair> {
    let (k, kp) = (params.k, params.kp);
    let lam = |ctx| params.require_lambda_big(ctx);
    match theorem {
        Theorem::Landau => landau_classical(params.require_m("landau")?),
        Theorem::ThmA => theorem_a_radii(lam("thmA")?),
        Theorem::ThmC => prior_radii(PriorResult::ThmC, k, kp, lam("thmC")?),
        Theorem::ThmD => prior_radii(PriorResult::ThmD, k, kp, lam("thmD")?),
        Theorem::Thm1 => elliptic_radii(k, kp, lam("thm1")?),
        Theorem::Cor1 => quasiregular_radii(k, lam("cor1")?),
        Theorem::Thm3 => elliptic_jacobian_radii(k, kp, lam("thm3")?),
        Theorem::Cor2 => quasiregular_jacobian_radii(k, lam("cor2")?),
        Theorem::Thm6 => sp_lambda_radii(params.require_lambda_small("thm6")?),
        Theorem::Thm7 => quasiregular_bounded_radii(k, params.require_m("thm7")?),
        Theorem::Thm11 => sp_univalence_radius(SpVariant::Thm11BoundedH {
            m: params.require_m("thm11")?,
        }),
        Theorem::Thm12 => sp_univalence_radius(SpVariant::Thm12BoundedHPrime {
            lambda_big: lam("thm12")?,
        }),
        Theorem::Thm0 => sp_univalence_radius(SpVariant::Thm0Sharp {
            m: params.require_m("thm0")?,
        }),
        Theorem::Thm10 => sp_univalence_radius(SpVariant::Thm10Radial {
            lambda_big: lam("thm10")?,
        }),
    }
}

/// Prior result that a theorem improves on, if any.
pub fn comparator(theorem: Theorem) -> Option<Theorem> {
    match theorem {
        Theorem::Thm1 => Some(Theorem::ThmC),
        Theorem::Cor2 => Some(Theorem::ThmD),
        _ => None,
    }
}

/// Radii of `theorem` followed by its comparator as CSV.
pub fn radii_csv(theorem: Theorem, params: &ClassParams) -> Result<String> {
    let mut rows = vec![vec![
        "theorem".to_string(),
        "univalence_radius".to_string(),
        "schlicht_radius".to_string(),
    ]];
    let mut push = |p: RadiusPair| {
        rows.push(vec![
            p.source.tag().to_string(),
            fmt_sig(p.univalence_radius),
            p.schlicht_radius.map_or("n/a".to_string(), fmt_sig),
        ])
    };
    push(radii_for(theorem, params)?);
    if let Some(c) = comparator(theorem) {
        push(radii_for(c, params)?);
    }
    Ok(csv_string(rows))
}

/// Univalence bracket plus the schlicht estimate at its lower end.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleSummary {
    pub label: String,
    pub bracket: UnivalenceBracket,
    pub schlicht_at_lo: Option<f64>,
}

pub fn oracle_summary(f: &HarmonicMap, cfg: &OracleConfig) -> Result<OracleSummary> {
    let bracket = univalence_radius_search(f, cfg)?;
    let schlicht_at_lo = if bracket.lo > 0.0 {
        Some(schlicht_radius(
            f,
            bracket.lo,
            cfg.grid.angular_steps.max(64),
        )?)
    } else {
        None
    };
    Ok(OracleSummary {
        label: f.label.clone(),
        bracket,
        schlicht_at_lo,
    })
}

impl OracleSummary {
    pub fn to_csv(&self) -> String {
        let b = &self.bracket;
        csv_string(vec![
            [
                "label",
                "lo",
                "hi",
                "verdict",
                "witness",
                "schlicht_at_lo",
                "radial_steps",
                "angular_steps",
                "max_radius",
            ]
            .map(String::from)
            .to_vec(),
            vec![
                self.label.clone(),
                fmt_sig(b.lo),
                fmt_sig(b.hi),
                b.verdict.as_str().to_string(),
                b.witness.map_or(String::new(), |w| w.to_string()),
                self.schlicht_at_lo.map_or("n/a".to_string(), fmt_sig),
                b.config.grid.radial_steps.to_string(),
                b.config.grid.angular_steps.to_string(),
                fmt_sig(b.config.grid.max_radius),
            ],
        ])
    }
}

/// Per-check CSV for a verification run.
pub fn checks_csv(checks: &[Check]) -> String {
    let mut rows = vec![[
        "suite",
        "check",
        "value",
        "reference",
        "margin",
        "tolerance",
        "status",
    ]
    .map(String::from)
    .to_vec()];
    rows.extend(checks.iter().map(|c| {
        vec![
            c.suite.to_string(),
            c.name.clone(),
            fmt_sig(c.value),
            fmt_sig(c.reference),
            fmt_sig(c.margin),
            fmt_sig(c.tolerance),
            c.status.as_str().to_string(),
        ]
    }));
    csv_string(rows)
}

/// One summary row for a conjecture scan.
pub fn scan_csv(rep: &ScanReport) -> String {
    let indices: Vec<String> = rep
        .counterexamples
        .iter()
        .map(|(i, _)| i.to_string())
        .collect();
    csv_string(vec![
        [
            "K",
            "Lambda",
            "n",
            "samples",
            "accepted",
            "witness_value",
            "max_random",
            "max_observed",
            "conjectured_bound",
            "proven_bound",
            "counterexamples",
        ]
        .map(String::from)
        .to_vec(),
        vec![
            fmt_sig(rep.k),
            fmt_sig(rep.lambda_big),
            rep.n.to_string(),
            rep.samples.to_string(),
            rep.accepted.to_string(),
            fmt_sig(rep.witness_value),
            rep.max_random.map_or("n/a".to_string(), fmt_sig),
            fmt_sig(rep.max_observed),
            fmt_sig(rep.conjectured_bound),
            fmt_sig(rep.proven_bound),
            indices.join(" "),
        ],
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_examples() {
        let t1 = table_rows(TableId::Elliptic).unwrap();
        let first: Vec<String> = t1[0]
            .values
            .iter()
            .map(|(_, v)| format!("{v:.4}"))
            .collect();
        assert_eq!(first, ["0.5530", "0.3078", "0.3100", "0.1727"]);
        let t2 = table_rows(TableId::Quasiregular).unwrap();
        let first: Vec<String> = t2[0]
            .values
            .iter()
            .map(|(_, v)| format!("{v:.4}"))
            .collect();
        assert_eq!(first, ["0.8333", "0.4545", "0.5740", "0.2726"]);
        let last: Vec<String> = t2[6]
            .values
            .iter()
            .map(|(_, v)| format!("{v:.4}"))
            .collect();
        assert_eq!(last, ["0.1277", "0.1132", "0.0433", "0.0397"]);
    }

    #[test]
    fn table_csv_layout() {
        let text = table_csv(TableId::Quasiregular).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[0].starts_with("quantity,\"(1.0,1.2)\""));
        assert!(lines[3].starts_with("sigma3',0.5740,0.2768"));
        assert!(!text.contains('\r'));
    }

    #[test]
    fn sig_format() {
        assert_eq!(fmt_sig(0.5), "0.5000000000");
        assert_eq!(fmt_sig(0.2739075652893144), "0.2739075653");
        assert_eq!(fmt_sig(12.5), "12.50000000");
        assert_eq!(fmt_sig(1.5e-6), "1.500000000e-6");
        assert_eq!(fmt_sig(f64::NAN), "n/a");
    }

    #[test]
    fn radii_with_comparator() {
        let p = ClassParams::new(1.0, 0.0).with_lambda_big(2.0);
        let text = radii_csv(Theorem::Thm1, &p).unwrap();
        assert!(text.contains("thm1,0.5000000000,0.2739075653"));
        assert!(text.contains("\nthmC,"));
        let p = ClassParams::default().with_lambda_big(1.0);
        let text = radii_csv(Theorem::Thm10, &p).unwrap();
        assert!(text.contains("thm10,1.000000000,1.000000000"));
        let err = radii_csv(
            Theorem::Thm1,
            &ClassParams::new(0.5, 0.0).with_lambda_big(2.0),
        )
        .unwrap_err();
        assert!(err.to_string().contains("K >= 1"), "{err}");
    }
}
