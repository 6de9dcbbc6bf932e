//! polyneq — check, scan, and stress a catalog of max-modulus inequalities
//! for polynomial derivative operators.
//!
//! Exit codes: 0 = pass / no violations, 1 = usage or schema error,
//! 2 = inequality violation, 3 = hypothesis failure.

use clap::{Parser, Subcommand, ValueEnum};
use polyneq::csvout;
use polyneq::manifest::RunManifest;
use polyneq::parallel::parallel_scan;
use polyneq::schema::{parse_id, parse_poly_input, CheckReportDto, ParsedPoly, ScanReportDto};
use polyneq_core::catalog::{run_check_with_tol, CheckForm, CheckReport, InequalityId};
use polyneq_core::ensemble::{falsify, sharpness_probe, AlphaMode, EnsembleConfig, Family, GammaMode, ZeroMode};
use polyneq_core::operators::{GammaWeights, PolarPoint};
use polyneq_core::poly::{DiskRadius, RootForm, DEFAULT_PREDICATE_TOL, DEFAULT_RESIDUAL_TOL};
use polyneq_core::Complex64;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "polyneq",
    version,
    about = "Numerical checks for a catalog of polynomial derivative inequalities"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum GammaModeArg {
    /// All weights 1.
    #[value(name = "ones")]
    Ones,
    /// Independent uniform weights in (0, 1].
    #[value(name = "uniform01")]
    Uniform01,
    /// Independent standard-exponential weights.
    #[value(name = "exp1")]
    Exp1,
}

impl From<GammaModeArg> for GammaMode {
    fn from(a: GammaModeArg) -> GammaMode {
        match a {
            GammaModeArg::Ones => GammaMode::Ones,
            GammaModeArg::Uniform01 => GammaMode::Uniform01,
            GammaModeArg::Exp1 => GammaMode::Exp1,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ZeroModeArg {
    /// Area-uniform over the disk.
    #[value(name = "disk_uniform", alias = "disk-uniform")]
    DiskUniform,
    /// Uniform on the boundary circle.
    #[value(name = "boundary")]
    Boundary,
    /// Clustered near a random center.
    #[value(name = "clustered")]
    Clustered,
}

impl From<ZeroModeArg> for ZeroMode {
    fn from(a: ZeroModeArg) -> ZeroMode {
        match a {
            ZeroModeArg::DiskUniform => ZeroMode::DiskUniform,
            ZeroModeArg::Boundary => ZeroMode::Boundary,
            ZeroModeArg::Clustered => ZeroMode::Clustered,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// (z + k)^n — a zero on the disk boundary.
    #[value(name = "binom_k", alias = "binom-k")]
    BinomK,
    /// z^n — all zeros at the origin.
    #[value(name = "monomial")]
    Monomial,
    /// z^n + 1 — equimodular zeros on the unit circle.
    #[value(name = "alpha_zn_beta", alias = "alpha-zn-beta")]
    AlphaZnBeta,
}

impl From<FamilyArg> for Family {
    fn from(a: FamilyArg) -> Family {
        match a {
            FamilyArg::BinomK => Family::BinomK,
            FamilyArg::Monomial => Family::Monomial,
            FamilyArg::AlphaZnBeta => Family::AlphaZnBeta,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Check one inequality against a polynomial from a JSON file.
    ///
    /// The file holds either {"coeffs": [[re,im], ...]} with index 0 the
    /// constant term, or {"leading": [re,im], "roots": [[re,im], ...]}.
    /// Coefficient input is factored first; the zero-location hypothesis
    /// is then judged with a tolerance matched to the factoring accuracy.
    Check {
        /// Catalog id, e.g. TURAN_2 (list them with `polyneq catalog`).
        id: String,
        /// Path to the polynomial JSON file.
        #[arg(long)]
        poly: PathBuf,
        /// Disk radius for the zero-location hypothesis.
        #[arg(long)]
        k: f64,
        /// Weights: `ones` or a comma list with one entry per degree.
        #[arg(long)]
        gamma: Option<String>,
        /// Polar point as `re,im`.
        #[arg(long, conflicts_with = "alpha_mod", allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Polar point modulus, placed on the positive real axis.
        #[arg(long)]
        alpha_mod: Option<f64>,
        /// Write BASE.json and print only the manifest line.
        #[arg(long, value_name = "BASE")]
        out: Option<PathBuf>,
    },
    /// Scan random instances of one inequality and report the worst slack.
    Scan {
        /// Catalog id.
        id: String,
        /// Polynomial degree.
        #[arg(long, alias = "n")]
        degree: usize,
        /// Disk radius for zero sampling and the hypothesis.
        #[arg(long)]
        k: f64,
        /// Number of random instances.
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        /// RNG seed.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Weight ensemble.
        #[arg(long, value_enum, default_value_t = GammaModeArg::Ones)]
        gamma_mode: GammaModeArg,
        /// Polar-point ensemble: `none`, `annulus`, or `radial:M1,M2,...`.
        /// Defaults to `annulus` when the inequality consumes a polar
        /// point and `none` otherwise.
        #[arg(long)]
        alpha_mode: Option<String>,
        /// Zero placement.
        #[arg(long, value_enum, default_value_t = ZeroModeArg::DiskUniform)]
        zero_mode: ZeroModeArg,
        /// Sample zeros in this radius instead of k (hypothesis stress).
        #[arg(long)]
        sample_k: Option<f64>,
        /// Write BASE.json and BASE.csv and print only the manifest line.
        #[arg(long, value_name = "BASE")]
        out: Option<PathBuf>,
    },
    /// Probe equality along an extremal family over (n, k, |alpha|) grids.
    Sharpness {
        /// Catalog id.
        id: String,
        /// Extremal family.
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Comma list of degrees.
        #[arg(long, default_value = "2,3,5")]
        n: String,
        /// Comma list of disk radii.
        #[arg(long, default_value = "1")]
        k: String,
        /// Comma list of |alpha| values (required when the id uses alpha).
        #[arg(long)]
        alpha: Option<String>,
        /// Write BASE.json and BASE.csv and print only the manifest line.
        #[arg(long, value_name = "BASE")]
        out: Option<PathBuf>,
    },
    /// Hunt for a counterexample by randomized perturbation descent.
    Falsify {
        /// Catalog id.
        id: String,
        /// Polynomial degree (vector length for the scalar entry).
        #[arg(long, alias = "n")]
        degree: usize,
        /// Disk radius.
        #[arg(long, default_value_t = 1.0)]
        k: f64,
        /// Random seed instances scanned before descent starts.
        #[arg(long, default_value_t = 256)]
        trials: u64,
        /// RNG seed.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Weight ensemble.
        #[arg(long, value_enum, default_value_t = GammaModeArg::Uniform01)]
        gamma_mode: GammaModeArg,
        /// Polar-point ensemble, as for scan.
        #[arg(long)]
        alpha_mode: Option<String>,
        /// Zero placement for the seed instances.
        #[arg(long, value_enum, default_value_t = ZeroModeArg::DiskUniform)]
        zero_mode: ZeroModeArg,
        /// Descent evaluation budget (on top of the seed scan).
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        /// Write BASE.json and BASE.csv and print only the manifest line.
        #[arg(long, value_name = "BASE")]
        out: Option<PathBuf>,
    },
    /// Print the inequality catalog as CSV.
    Catalog {
        /// Write BASE.csv and print only the manifest line.
        #[arg(long, value_name = "BASE")]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = match dispatch(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    };
    std::process::exit(code);
}

fn dispatch(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Cmd::Check { id, poly, k, gamma, alpha, alpha_mod, out } => {
            cmd_check(&id, &poly, k, gamma.as_deref(), alpha.as_deref(), alpha_mod, out.as_deref())
        }
        Cmd::Scan {
            id, degree, k, trials, seed, gamma_mode, alpha_mode, zero_mode, sample_k, out,
        } => {
            let id = parse_id(&id)?;
            let cfg = build_config(
                id, degree, k, trials, seed, gamma_mode, alpha_mode.as_deref(), zero_mode, sample_k,
            )?;
            let mut m = scan_manifest("scan", id, &cfg);
            let rep = parallel_scan(id, &cfg).map_err(|e| e.to_string())?;
            let json = pretty(&ScanReportDto::from(&rep))?;
            let csv = csvout::scan_csv(&[&rep]);
            emit(&mut m, out.as_deref(), Some(&json), Some(&csv), &json)?;
            Ok(if rep.violations == 0 { 0 } else { 2 })
        }
        Cmd::Sharpness { id, family, n, k, alpha, out } => {
            cmd_sharpness(&id, family, &n, &k, alpha.as_deref(), out.as_deref())
        }
        Cmd::Falsify {
            id, degree, k, trials, seed, gamma_mode, alpha_mode, zero_mode, budget, out,
        } => {
            let id = parse_id(&id)?;
            let cfg = build_config(
                id, degree, k, trials, seed, gamma_mode, alpha_mode.as_deref(), zero_mode, None,
            )?;
            let mut m = scan_manifest("falsify", id, &cfg);
            m.arg("budget", budget);
            let rep = falsify(id, &cfg, budget).map_err(|e| e.to_string())?;
            let json = pretty(&ScanReportDto::from(&rep))?;
            let csv = csvout::scan_csv(&[&rep]);
            emit(&mut m, out.as_deref(), Some(&json), Some(&csv), &json)?;
            Ok(if rep.violations == 0 { 0 } else { 2 })
        }
        Cmd::Catalog { out } => {
            let mut m = RunManifest::start("catalog");
            let csv = csvout::catalog_csv();
            emit(&mut m, out.as_deref(), None, Some(&csv), &csv)?;
            Ok(0)
        }
    }
}

fn pretty<T: serde::Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value).map_err(|e| e.to_string())
}

fn parse_f64_list(s: &str, what: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| format!("bad {what} list entry {t:?}")))
        .collect()
}

fn parse_usize_list(s: &str, what: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad {what} list entry {t:?}")))
        .collect()
}

fn parse_alpha_mode(s: &str) -> Result<AlphaMode, String> {
    match s {
        "none" => Ok(AlphaMode::None),
        "annulus" => Ok(AlphaMode::Annulus),
        _ => match s.strip_prefix("radial:") {
            Some(list) => parse_f64_list(list, "alpha").map(AlphaMode::Radial),
            None => Err(format!(
                "alpha mode must be none, annulus, or radial:M1,M2,... (got {s:?})"
            )),
        },
    }
}

#[allow(clippy::too_many_arguments)]
fn build_config(
    id: InequalityId,
    degree: usize,
    k: f64,
    trials: u64,
    seed: u64,
    gamma_mode: GammaModeArg,
    alpha_mode: Option<&str>,
    zero_mode: ZeroModeArg,
    sample_k: Option<f64>,
) -> Result<EnsembleConfig, String> {
    let k = DiskRadius::new(k).map_err(|e| e.to_string())?;
    let alpha_mode = match alpha_mode {
        Some(s) => parse_alpha_mode(s)?,
        None if id.schema().alpha.uses_alpha() => AlphaMode::Annulus,
        None => AlphaMode::None,
    };
    Ok(EnsembleConfig {
        degree,
        k,
        trials,
        seed,
        gamma_mode: gamma_mode.into(),
        alpha_mode,
        zero_mode: zero_mode.into(),
        sample_k,
    })
}

fn gamma_mode_str(m: GammaMode) -> &'static str {
    match m {
        GammaMode::Ones => "ones",
        GammaMode::Uniform01 => "uniform01",
        GammaMode::Exp1 => "exp1",
    }
}

fn zero_mode_str(m: ZeroMode) -> &'static str {
    match m {
        ZeroMode::DiskUniform => "disk_uniform",
        ZeroMode::Boundary => "boundary",
        ZeroMode::Clustered => "clustered",
    }
}

fn alpha_mode_str(m: &AlphaMode) -> String {
    match m {
        AlphaMode::None => "none".to_string(),
        AlphaMode::Annulus => "annulus".to_string(),
        AlphaMode::Radial(grid) => {
            let list: Vec<String> = grid.iter().map(|v| v.to_string()).collect();
            format!("radial:{}", list.join(","))
        }
    }
}

fn family_str(f: Family) -> &'static str {
    match f {
        Family::BinomK => "binom_k",
        Family::Monomial => "monomial",
        Family::AlphaZnBeta => "alpha_zn_beta",
    }
}

fn scan_manifest(command: &str, id: InequalityId, cfg: &EnsembleConfig) -> RunManifest {
    let mut m = RunManifest::start(command);
    m.arg("id", id.name())
        .arg("degree", cfg.degree)
        .arg("k", cfg.k.value())
        .arg("trials", cfg.trials)
        .arg("seed", cfg.seed)
        .arg("gamma_mode", gamma_mode_str(cfg.gamma_mode))
        .arg("alpha_mode", alpha_mode_str(&cfg.alpha_mode))
        .arg("zero_mode", zero_mode_str(cfg.zero_mode));
    if let Some(sk) = cfg.sample_k {
        m.arg("sample_k", sk);
    }
    m
}

fn cmd_check(
    id: &str,
    poly: &Path,
    k: f64,
    gamma: Option<&str>,
    alpha: Option<&str>,
    alpha_mod: Option<f64>,
    out: Option<&Path>,
) -> Result<i32, String> {
    let id = parse_id(id)?;
    let schema = id.schema();
    if schema.form == CheckForm::Scalar {
        return Err(format!(
            "{} is a scalar inequality with no polynomial input; use scan or falsify",
            id.name()
        ));
    }
    let kd = DiskRadius::new(k).map_err(|e| e.to_string())?;

    let text = std::fs::read_to_string(poly)
        .map_err(|e| format!("cannot read {}: {e}", poly.display()))?;
    // Coefficient input is factored; a root cluster of multiplicity m is
    // then only located to about residual^(1/m), so the hypothesis gate
    // gets a matching slice of slop.
    let (rf, predicate_tol): (RootForm, f64) = match parse_poly_input(&text)? {
        ParsedPoly::Roots(rf) => (rf, DEFAULT_PREDICATE_TOL),
        ParsedPoly::Coeffs(p) => {
            let n = p.degree().max(1);
            let rf = p
                .find_roots(DEFAULT_RESIDUAL_TOL)
                .map_err(|e| format!("could not factor the input polynomial: {e}"))?;
            (rf, DEFAULT_PREDICATE_TOL.max(DEFAULT_RESIDUAL_TOL.powf(1.0 / n as f64)))
        }
    };
    let n = rf.degree();

    let gamma_weights: Option<GammaWeights> = if schema.uses_gamma {
        let spec = gamma.unwrap_or("ones");
        let ws = if spec == "ones" {
            vec![1.0; n]
        } else {
            parse_f64_list(spec, "gamma")?
        };
        if ws.len() != n {
            return Err(format!("gamma needs {n} entries (one per degree), got {}", ws.len()));
        }
        Some(GammaWeights::new(ws).map_err(|e| e.to_string())?)
    } else {
        if gamma.is_some() {
            return Err(format!("{} takes no gamma weights", id.name()));
        }
        None
    };

    let alpha_point: Option<PolarPoint> = if schema.alpha.uses_alpha() {
        let a = match (alpha, alpha_mod) {
            (Some(s), None) => {
                let parts = parse_f64_list(s, "alpha")?;
                if parts.len() != 2 {
                    return Err("--alpha expects `re,im`".to_string());
                }
                Complex64::new(parts[0], parts[1])
            }
            (None, Some(m)) => {
                if !(m.is_finite() && m > 0.0) {
                    return Err("--alpha-mod must be positive and finite".to_string());
                }
                Complex64::new(m, 0.0)
            }
            (None, None) => {
                return Err(format!(
                    "{} consumes a polar point; pass --alpha re,im or --alpha-mod M",
                    id.name()
                ))
            }
            (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
        };
        Some(PolarPoint::new(a).map_err(|e| e.to_string())?)
    } else {
        if alpha.is_some() || alpha_mod.is_some() {
            return Err(format!("{} takes no polar point", id.name()));
        }
        None
    };

    let rep: CheckReport =
        run_check_with_tol(id, &rf, gamma_weights.as_ref(), alpha_point, kd, predicate_tol);

    let mut m = RunManifest::start("check");
    m.arg("id", id.name()).arg("poly", poly.display()).arg("k", k);
    if let Some(g) = gamma {
        m.arg("gamma", g);
    }
    if let Some(a) = alpha {
        m.arg("alpha", a);
    }
    if let Some(am) = alpha_mod {
        m.arg("alpha_mod", am);
    }
    let json = pretty(&CheckReportDto::from(&rep))?;
    emit(&mut m, out, Some(&json), None, &json)?;

    Ok(if !rep.hypothesis_ok {
        3
    } else if rep.pass == Some(false) {
        2
    } else {
        0
    })
}

fn cmd_sharpness(
    id: &str,
    family: FamilyArg,
    ns: &str,
    ks: &str,
    alphas: Option<&str>,
    out: Option<&Path>,
) -> Result<i32, String> {
    let id = parse_id(id)?;
    let ns = parse_usize_list(ns, "degree")?;
    let ks = parse_f64_list(ks, "k")?;
    let alphas = alphas.map(|s| parse_f64_list(s, "alpha")).transpose()?;
    let reports = sharpness_probe(id, family.into(), &ns, &ks, alphas.as_deref())
        .map_err(|e| e.to_string())?;

    let mut m = RunManifest::start("sharpness");
    m.arg("id", id.name())
        .arg("family", family_str(family.into()))
        .arg("n", ns.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
        .arg("k", ks.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
    if let Some(a) = &alphas {
        m.arg("alpha", a.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
    }
    let dtos: Vec<CheckReportDto> = reports.iter().map(CheckReportDto::from).collect();
    let json = pretty(&dtos)?;
    let csv = csvout::sharpness_csv(&reports);
    emit(&mut m, out, Some(&json), Some(&csv), &json)?;

    Ok(if reports.iter().any(|r| r.pass == Some(false)) { 2 } else { 0 })
}

/// Print or write the rendered bodies.
///
/// Without `--out`, the body goes to stdout and no manifest is shown. With
/// `--out BASE`, the JSON body lands in BASE.json under a manifest first
/// line, the CSV body in BASE.csv under a `# `-prefixed manifest line, and
/// stdout carries only the manifest line.
fn emit(
    m: &mut RunManifest,
    out: Option<&Path>,
    json: Option<&str>,
    csv: Option<&str>,
    stdout_body: &str,
) -> Result<(), String> {
    let Some(base) = out else {
        if stdout_body.ends_with('\n') {
            print!("{stdout_body}");
        } else {
            println!("{stdout_body}");
        }
        return Ok(());
    };

    let with_ext = |ext: &str| PathBuf::from(format!("{}.{ext}", base.display()));
    let jpath = json.map(|_| with_ext("json"));
    let cpath = csv.map(|_| with_ext("csv"));
    m.outputs = [&jpath, &cpath]
        .into_iter()
        .flatten()
        .map(|p| p.display().to_string())
        .collect();
    m.finish();
    let line = m.to_line();

    if let (Some(p), Some(body)) = (&jpath, json) {
        std::fs::write(p, format!("{line}\n{body}\n"))
            .map_err(|e| format!("cannot write {}: {e}", p.display()))?;
    }
    if let (Some(p), Some(body)) = (&cpath, csv) {
        let trailing = if body.ends_with('\n') { "" } else { "\n" };
        std::fs::write(p, format!("# {line}\n{body}{trailing}"))
            .map_err(|e| format!("cannot write {}: {e}", p.display()))?;
    }
    println!("{line}");
    Ok(())
}
