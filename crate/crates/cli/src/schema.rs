//! JSON interchange schemas.
//!
//! Complex numbers are `[re, im]` pairs everywhere. A polynomial on the
//! wire is either `{"coeffs": [[re, im], ...]}` (index 0 = a₀) or
//! `{"leading": [re, im], "roots": [[re, im], ...]}`; report and scan
//! shapes mirror the core types field for field, with absent optionals
//! omitted rather than null.

use polyneq_core::catalog::{CheckReport, InequalityId, Witness};
use polyneq_core::circle::MaxModEstimate;
use polyneq_core::ensemble::{AlphaMode, EnsembleConfig, GammaMode, ScanReport, ZeroMode};
use polyneq_core::poly::{Polynomial, RootForm};
use polyneq_core::Complex64;
use serde::{Deserialize, Serialize};

fn c2(c: Complex64) -> [f64; 2] {
    [c.re, c.im]
}

fn from_c2(v: [f64; 2]) -> Complex64 {
    Complex64::new(v[0], v[1])
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialDto {
    pub coeffs: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootFormDto {
    pub leading: [f64; 2],
    pub roots: Vec<[f64; 2]>,
}

impl From<&RootForm> for RootFormDto {
    fn from(r: &RootForm) -> Self {
        RootFormDto {
            leading: c2(r.leading()),
            roots: r.roots().iter().copied().map(c2).collect(),
        }
    }
}

/// Either polynomial wire form.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum PolyInputDto {
    Coeffs(PolynomialDto),
    Roots(RootFormDto),
}

/// A parsed input polynomial, still in whichever form the file used.
#[derive(Debug, Clone)]
pub enum ParsedPoly {
    Coeffs(Polynomial),
    Roots(RootForm),
}

/// Parse a polynomial file body in either wire form.
///
/// Coefficient input drops exactly-zero leading entries (so `[a0, a1, 0]`
/// means a degree-1 polynomial, not a malformed degree-2 one).
pub fn parse_poly_input(text: &str) -> Result<ParsedPoly, String> {
    let dto: PolyInputDto = serde_json::from_str(text)
        .map_err(|e| format!("input is neither coefficient nor root-form polynomial JSON: {e}"))?;
    match dto {
        PolyInputDto::Coeffs(p) => {
            let mut coeffs: Vec<Complex64> = p.coeffs.into_iter().map(from_c2).collect();
            while coeffs.len() > 1 && coeffs.last() == Some(&Complex64::new(0.0, 0.0)) {
                coeffs.pop();
            }
            Polynomial::new(coeffs)
                .map(ParsedPoly::Coeffs)
                .map_err(|e| format!("bad coefficients: {e}"))
        }
        PolyInputDto::Roots(r) => {
            let roots: Vec<Complex64> = r.roots.into_iter().map(from_c2).collect();
            RootForm::new(from_c2(r.leading), roots)
                .map(ParsedPoly::Roots)
                .map_err(|e| format!("bad root form: {e}"))
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GammaWeightsDto {
    pub gamma: Vec<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolarPointDto {
    pub alpha: [f64; 2],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MaxModEstimateDto {
    pub value: f64,
    pub theta: f64,
    pub grid: usize,
    pub rel_gap: f64,
}

impl From<&MaxModEstimate> for MaxModEstimateDto {
    fn from(e: &MaxModEstimate) -> Self {
        MaxModEstimateDto {
            value: e.value,
            theta: e.arg_theta,
            grid: e.grid,
            rel_gap: e.rel_gap,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessDto {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root_form: Option<RootFormDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_theta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_theta: Option<f64>,
}

impl From<&Witness> for WitnessDto {
    fn from(w: &Witness) -> Self {
        WitnessDto {
            root_form: w.root_form.as_ref().map(RootFormDto::from),
            gamma: w.gamma.as_ref().map(|g| g.weights().to_vec()),
            alpha: w.alpha.map(c2),
            k: w.k,
            x: w.x.clone(),
            lhs_theta: w.lhs_theta,
            rhs_theta: w.rhs_theta,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReportDto {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slack: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel_slack: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
    pub hypothesis_ok: bool,
    pub equality_sharp: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub witness: WitnessDto,
}

impl From<&CheckReport> for CheckReportDto {
    fn from(r: &CheckReport) -> Self {
        CheckReportDto {
            id: r.id.name().to_string(),
            lhs: r.lhs,
            rhs: r.rhs,
            slack: r.slack,
            rel_slack: r.rel_slack,
            pass: r.pass,
            hypothesis_ok: r.hypothesis_ok,
            equality_sharp: r.equality_sharp,
            note: r.note.map(str::to_string),
            witness: WitnessDto::from(&r.witness),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GammaModeDto {
    Ones,
    Uniform01,
    Exp1,
}

impl From<GammaMode> for GammaModeDto {
    fn from(m: GammaMode) -> Self {
        match m {
            GammaMode::Ones => GammaModeDto::Ones,
            GammaMode::Uniform01 => GammaModeDto::Uniform01,
            GammaMode::Exp1 => GammaModeDto::Exp1,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaModeDto {
    None,
    Radial(Vec<f64>),
    Annulus,
}

impl From<&AlphaMode> for AlphaModeDto {
    fn from(m: &AlphaMode) -> Self {
        match m {
            AlphaMode::None => AlphaModeDto::None,
            AlphaMode::Radial(g) => AlphaModeDto::Radial(g.clone()),
            AlphaMode::Annulus => AlphaModeDto::Annulus,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroModeDto {
    DiskUniform,
    Boundary,
    Clustered,
}

impl From<ZeroMode> for ZeroModeDto {
    fn from(m: ZeroMode) -> Self {
        match m {
            ZeroMode::DiskUniform => ZeroModeDto::DiskUniform,
            ZeroMode::Boundary => ZeroModeDto::Boundary,
            ZeroMode::Clustered => ZeroModeDto::Clustered,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EnsembleConfigDto {
    pub degree: usize,
    pub k: f64,
    pub trials: u64,
    pub seed: u64,
    pub gamma_mode: GammaModeDto,
    pub alpha_mode: AlphaModeDto,
    pub zero_mode: ZeroModeDto,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_k: Option<f64>,
}

impl From<&EnsembleConfig> for EnsembleConfigDto {
    fn from(c: &EnsembleConfig) -> Self {
        EnsembleConfigDto {
            degree: c.degree,
            k: c.k.value(),
            trials: c.trials,
            seed: c.seed,
            gamma_mode: c.gamma_mode.into(),
            alpha_mode: (&c.alpha_mode).into(),
            zero_mode: c.zero_mode.into(),
            sample_k: c.sample_k,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanReportDto {
    pub id: String,
    pub config: EnsembleConfigDto,
    pub checked: u64,
    pub violations: u64,
    pub equality_sharp_count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_slack: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_rel_slack: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worst_witness: Option<CheckReportDto>,
}

impl From<&ScanReport> for ScanReportDto {
    fn from(r: &ScanReport) -> Self {
        ScanReportDto {
            id: r.id.name().to_string(),
            config: (&r.config).into(),
            checked: r.checked,
            violations: r.violations,
            equality_sharp_count: r.equality_sharp_count,
            min_slack: r.min_slack,
            min_rel_slack: r.min_rel_slack,
            worst_witness: r.worst_witness.as_ref().map(CheckReportDto::from),
        }
    }
}

/// Parse a catalog id name, case-sensitively, with the catalog as the
/// error message.
pub fn parse_id(name: &str) -> Result<InequalityId, String> {
    InequalityId::from_name(name).ok_or_else(|| {
        let names: Vec<&str> = InequalityId::ALL.iter().map(|i| i.name()).collect();
        format!("unknown inequality id {name:?}; known ids: {}", names.join(", "))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_input_parses_both_wire_forms() {
        let p = parse_poly_input(r#"{"coeffs": [[1,0],[3,0],[3,0],[1,0]]}"#).unwrap();
        assert!(matches!(p, ParsedPoly::Coeffs(ref q) if q.degree() == 3));
        let r = parse_poly_input(r#"{"leading": [2,0], "roots": [[0,1],[0,-1]]}"#).unwrap();
        assert!(matches!(r, ParsedPoly::Roots(ref q) if q.degree() == 2));
        assert!(parse_poly_input("{").is_err());
        assert!(parse_poly_input(r#"{"coeffs": []}"#).is_err());
    }

    #[test]
    fn coefficient_input_trims_exact_zero_leading_entries() {
        let p = parse_poly_input(r#"{"coeffs": [[1,0],[2,0],[0,0],[0,0]]}"#).unwrap();
        match p {
            ParsedPoly::Coeffs(q) => assert_eq!(q.degree(), 1),
            _ => panic!("expected coefficients"),
        }
    }

    #[test]
    fn check_report_round_trips_through_json() {
        use polyneq_core::catalog::{run_check, InequalityId};
        use polyneq_core::poly::DiskRadius;

        let rf = RootForm::new(Complex64::new(1.0, 0.0), vec![Complex64::new(-1.0, 0.0); 3])
            .unwrap();
        let rep = run_check(InequalityId::Turan2, &rf, None, None, DiskRadius::new(1.0).unwrap());
        let dto = CheckReportDto::from(&rep);
        let text = serde_json::to_string_pretty(&dto).unwrap();
        let back: CheckReportDto = serde_json::from_str(&text).unwrap();
        assert_eq!(back.id, "TURAN_2");
        assert_eq!(back.pass, Some(true));
        assert!(back.witness.root_form.is_some());
        // Unused optionals are omitted, not null.
        assert!(!text.contains("null"));
    }

    #[test]
    fn id_parsing_is_exact() {
        assert!(parse_id("THM1_11").is_ok());
        assert!(parse_id("thm1_11").is_err());
        assert!(parse_id("NOPE").is_err());
    }
}
