//! `stringy`: command-line front end for the exact stringy E-function computations.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use stringy_core::algebra::parse_expression;
use stringy_core::brieskorn::{analyze, contribution_of, family_s, normal_form_numerator, p_polynomials, SubsetFamily};
use stringy_core::hodge::{fermat_hodge, quasi_hom_hodge};
use stringy_core::newtonzeta::{local_hodge_zeta_diagonal, residue_contribution};
use stringy_core::resolution::{fixture, from_json, verify_projective_properties, FIXTURE_NAMES};
use stringy_core::sextic::{self, series_coefficient, SexticParts};
use stringy_core::{Error, Mode, StringyRational, WeightSystem};

#[derive(Parser)]
#[command(name = "stringy", version, about = "Stringy E-functions of Brieskorn singularities and log resolutions")]
struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a Brieskorn singularity and print its contribution to E_st.
    Brieskorn {
        #[command(flatten)]
        exponents: Exponents,
        /// Also print the series coefficients b_{i,j} with i + j <= N.
        #[arg(long, value_name = "N")]
        series: Option<u32>,
        /// Also print P with contribution = P / ((uv)^(n-1) + .. + uv + 1), n = sigma - k, and check its sign pattern.
        #[arg(long)]
        normal_form: bool,
    },
    /// Print the subset family S for a weight vector alpha.
    FamilyS {
        #[arg(long, value_delimiter = ',', required = true)]
        alpha: Vec<u64>,
    },
    /// Hodge-Deligne polynomial of the smooth Fermat hypersurface of degree l in P^(d+1).
    Fermat {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        degree: u64,
    },
    /// Hodge-Deligne polynomial of an affine quasi-homogeneous hypersurface.
    Quasihom {
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<u64>,
        #[arg(long)]
        degree: u64,
    },
    /// Local Hodge zeta function at the origin of x_1^a_1 + .. + x_n^a_n.
    Zeta {
        #[command(flatten)]
        exponents: Exponents,
    },
    /// Contribution to E_st as the residue of the local Hodge zeta function at T = uv.
    Residue {
        #[command(flatten)]
        exponents: Exponents,
    },
    /// Evaluate log-resolution stratification data.
    Resolution {
        /// JSON stratification file.
        #[arg(long, conflicts_with = "fixture", required_unless_present = "fixture")]
        input: Option<PathBuf>,
        /// Built-in data set.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(FIXTURE_NAMES))]
        fixture: Option<String>,
        /// Evaluate exceptional-fiber data as the contribution of a singular point.
        #[arg(long)]
        contribution: bool,
    },
    /// Power series coefficients b_{i,j} of a rational function read from a file.
    Series {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        max_degree: u32,
    },
    /// Duality and E(0,0) = 1 checks for a would-be E_st of a projective variety.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        dim: u32,
    },
    /// E_st of the sextic sixfold with five singular points at infinity.
    Example53 {
        /// Print only the coefficient b_{i,j}.
        #[arg(long, value_name = "I,J", value_delimiter = ',')]
        coeff: Option<Vec<u32>>,
    },
}

#[derive(Args)]
struct Exponents {
    #[arg(long, value_delimiter = ',', required = true)]
    exponents: Vec<u64>,
}

enum Failure {
    Usage(String),
    Domain(Error),
    Io(PathBuf, std::io::Error),
    CheckFailed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    fn report(&self) -> (u8, String) {
        match self {
            Failure::Usage(msg) => (2, format!("Usage: {msg}")),
            Failure::Domain(e) => (if e.is_malformed_input() { 2 } else { 3 }, format!("{}: {e}", e.code())),
            Failure::Io(path, e) => (2, format!("Io: {}: {e}", path.display())),
            Failure::CheckFailed(msg) => (1, format!("CheckFailed: {msg}")),
        }
    }
}

/// Text lines and the equivalent JSON document.
struct Report {
    lines: Vec<String>,
    json: Value,
    failed: Option<String>,
}

impl Report {
    fn new(lines: Vec<String>, json: Value) -> Self {
        Self { lines, json, failed: None }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            eprintln!("error: Usage: {first}");
            return ExitCode::from(2);
        }
    };
    let outcome = run(cli.command).and_then(|report| {
        if cli.json {
            println!("{}", serde_json::to_string_pretty(&report.json).expect("JSON values serialize"));
        } else {
            for line in &report.lines {
                println!("{line}");
            }
        }
        report.failed.map_or(Ok(()), |msg| Err(Failure::CheckFailed(msg)))
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let (status, msg) = failure.report();
            eprintln!("error: {msg}");
            ExitCode::from(status)
        }
    }
}

fn run(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Brieskorn { exponents, series, normal_form } => brieskorn(&exponents.exponents, series, normal_form),
        Command::FamilyS { alpha } => {
            let s = family_s(&alpha)?;
            Ok(Report::new(vec![format!("S = {s}")], json!({ "alpha": alpha, "S": family_json(&s) })))
        }
        Command::Fermat { dim, degree } => {
            if degree == 0 {
                return Err(Failure::Usage("--degree must be positive".into()));
            }
            let h = fermat_hodge(dim, degree).poly.to_string();
            Ok(Report::new(vec![h.clone()], json!({ "dim": dim, "degree": degree, "hodge": h })))
        }
        Command::Quasihom { weights, degree } => {
            let h = quasi_hom_hodge(&WeightSystem::new(weights.clone(), degree)?)?.poly.to_string();
            Ok(Report::new(vec![h.clone()], json!({ "weights": weights, "degree": degree, "hodge": h })))
        }
        Command::Zeta { exponents } => {
            let z = local_hodge_zeta_diagonal(&exponents.exponents)?.collected().to_string();
            Ok(Report::new(vec![z.clone()], json!({ "exponents": exponents.exponents, "zeta": z })))
        }
        Command::Residue { exponents } => {
            let c = residue_contribution(&exponents.exponents)?.to_string();
            Ok(Report::new(vec![c.clone()], json!({ "exponents": exponents.exponents, "contribution": c })))
        }
        Command::Resolution { input, fixture: name, contribution } => resolution(input, name, contribution),
        Command::Series { input, max_degree } => {
            let e = read_expression(&input)?;
            let coeffs = e.series_coefficients(max_degree)?;
            let (lines, json) = series_lines(&coeffs);
            Ok(Report::new(lines, json!({ "maxDegree": max_degree, "coefficients": json })))
        }
        Command::Verify { input, dim } => {
            let e = read_expression(&input)?;
            let r = verify_projective_properties(&e, dim);
            let constant = r.constant_term.as_ref().map_or("undefined".to_string(), |c| c.to_string());
            let mut report = Report::new(
                vec![
                    format!("duality = {}", r.duality),
                    format!("E(0,0) = {constant}"),
                    format!("passed = {}", r.passed()),
                ],
                json!({ "dim": dim, "duality": r.duality, "constantTerm": constant, "passed": r.passed() }),
            );
            if !r.passed() {
                report.failed = Some("projective checks failed".into());
            }
            Ok(report)
        }
        Command::Example53 { coeff } => example53(coeff),
    }
}

fn brieskorn(exponents: &[u64], series: Option<u32>, normal_form: bool) -> Result<Report, Failure> {
    let data = analyze(exponents)?;
    let s = family_s(&data.alpha)?;
    let c = contribution_of(&data)?;
    let ps = p_polynomials(&data)?;
    let mut lines = vec![
        format!("exponents = {}", join(exponents)),
        format!("k = {}", data.k),
        format!("alpha = {}", join(&data.alpha)),
        format!("sigma - k = {}", data.sigma_minus_k()),
        format!("classification = {}", data.classification),
        format!("S = {s}"),
    ];
    let mut p_json = serde_json::Map::new();
    for j in &s.members {
        let p = ps.get(j).map(ToString::to_string).unwrap_or_else(|| "0".into());
        lines.push(format!("p_{j} = {p}"));
        p_json.insert(j.to_string(), Value::String(p));
    }
    lines.push(format!("contribution = {c}"));
    let mut doc = json!({
        "exponents": exponents,
        "k": data.k,
        "alpha": data.alpha,
        "sigmaMinusK": data.sigma_minus_k(),
        "classification": data.classification.to_string(),
        "S": family_json(&s),
        "p": p_json,
        "contribution": c.to_string(),
    });
    if normal_form {
        let n = normal_form_numerator(&c, &data)?;
        lines.push(format!("normal form numerator = {n}"));
        doc["normalFormNumerator"] = Value::String(n.to_string());
    }
    if let Some(n) = series {
        let (series_lines, series_json) = series_lines(&c.series_coefficients(n)?);
        lines.extend(series_lines);
        doc["series"] = series_json;
    }
    Ok(Report::new(lines, doc))
}

fn resolution(input: Option<PathBuf>, name: Option<String>, contribution: bool) -> Result<Report, Failure> {
    let data = match (&input, &name) {
        (Some(path), _) => from_json(&read(path)?)?,
        (None, Some(name)) => fixture(name)?,
        (None, None) => return Err(Failure::Usage("one of --input or --fixture is required".into())),
    };
    let (label, expected) = if contribution {
        ("contribution", Mode::ExceptionalFiberOnly)
    } else {
        ("E_st", Mode::FullVariety)
    };
    if data.mode() != expected {
        return Err(Error::WrongMode { expected: expected.name() }.into());
    }
    let (open, closed) = if contribution {
        (data.exceptional_contribution()?, data.exceptional_contribution_from_closed()?)
    } else {
        (data.stringy_from_open()?, data.stringy_from_closed()?)
    };
    let agree = open.cross_equal(&closed);
    let euler = open.limit_at_one()?;
    let mut report = Report::new(
        vec![
            format!("mode = {}", data.mode().name()),
            format!("dimension = {}", data.dimension()),
            format!("components = {}", data.components().len()),
            format!("{label} = {open}"),
            format!("closed strata agree = {agree}"),
            format!("euler = {euler}"),
        ],
        json!({
            "mode": data.mode().name(),
            "dimension": data.dimension(),
            "components": data.components().len(),
            label: open.to_string(),
            "closedStrataAgree": agree,
            "euler": euler.to_string(),
        }),
    );
    if !agree {
        report.failed = Some("open and closed strata give different results".into());
    }
    Ok(report)
}

fn example53(coeff: Option<Vec<u32>>) -> Result<Report, Failure> {
    let parts = SexticParts::compute()?;
    let e = parts.stringy_e_function();
    if let Some(ij) = coeff {
        if ij.len() != 2 {
            return Err(Failure::Usage("--coeff takes two indices i,j".into()));
        }
        let b = series_coefficient(&e, ij[0], ij[1])?;
        return Ok(Report::new(vec![b.to_string()], json!({ "i": ij[0], "j": ij[1], "coeff": b.to_string() })));
    }
    let b33 = series_coefficient(&e, 3, 3)?;
    let c = parts.smooth_at_infinity.to_string();
    let d = parts.smooth_affine.to_string();
    Ok(Report::new(
        vec![
            format!("A = {}", parts.origin),
            format!("B = {}", parts.infinity),
            format!("C = {c}"),
            format!("D = {d}"),
            format!("E_st = {e}"),
            format!("b_{{3,3}} = {b33}"),
        ],
        json!({
            "dimension": sextic::DIMENSION,
            "A": parts.origin.to_string(),
            "B": parts.infinity.to_string(),
            "C": c,
            "D": d,
            "E_st": e.to_string(),
            "b33": b33.to_string(),
        }),
    ))
}

fn series_lines<T: std::fmt::Display>(coeffs: &BTreeMap<(u32, u32), T>) -> (Vec<String>, Value) {
    let mut keys: Vec<_> = coeffs.keys().copied().collect();
    keys.sort_by_key(|&(i, j)| (i + j, i));
    let lines = keys.iter().map(|&(i, j)| format!("b_{{{i},{j}}} = {}", coeffs[&(i, j)])).collect();
    let json = keys
        .iter()
        .map(|&(i, j)| json!({ "i": i, "j": j, "coeff": coeffs[&(i, j)].to_string() }))
        .collect();
    (lines, Value::Array(json))
}

fn family_json(s: &SubsetFamily) -> Value {
    s.members.iter().map(|j| j.indices().map(|i| i + 1).collect::<Vec<_>>()).collect()
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn read_expression(path: &Path) -> Result<StringyRational, Failure> {
    Ok(parse_expression(read(path)?.trim())?)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
