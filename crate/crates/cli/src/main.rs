//! `zonal` — exact Jack/zonal polynomial tables, generalized binomial
//! coefficients, Wishart existence verdicts with negative-moment
//! certificates, Laplace transforms, and Monte-Carlo cross-validation.
//!
//! Output is JSON by default (CSV where noted); rationals are rendered as
//! exact "p/q" strings, never floats, on exact commands. Exit codes: 0 on
//! success, 1 when a verdict-style command fails its expectation, 2 on usage
//! errors.

mod io;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use zonal_core::binom::{positivity_scan, BinomialTable, PositivityViolation};
use zonal_core::cone::parse_cone;
use zonal_core::linalg::{float_rank_symmetric, symmetric_eigenvalues_f64};
use zonal_core::partition::{enumerate_up_to, Partition};
use zonal_core::rational::{rat_from_f64, Rat};
use zonal_core::symfun::{jack, jack_at_ones};
use zonal_core::wishart::{
    existence_check, laplace_transform, putative_moment, zonal_normalization, Omega, Scale,
    WishartParams,
};
use zonal_mc::{verify_laplace_transform, verify_moment_formula, with_threads};

use io::{
    parse_partition_flag, parse_rational_flag, parse_rational_list, partition_json, rat_string,
    read_matrix_file, CliError, CliResult, MatrixInput,
};

#[derive(Parser)]
#[command(name = "zonal", version, about = "Exact Jack/zonal engine and Wishart existence checker")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expectation {
    Pass,
    Fail,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a Jack polynomial or print its monomial coefficient table.
    JackEval(JackEvalArgs),
    /// Emit a table of generalized binomial coefficients.
    Binom(BinomArgs),
    /// Exhaustive nonnegativity/strict-positivity scan of the coefficients.
    PositivityScan(PositivityScanArgs),
    /// Zonal normalization constants and polynomials for one degree.
    Zonal(ZonalArgs),
    /// Decide the necessary existence conditions; emit a certificate on failure.
    CheckExistence(CheckExistenceArgs),
    /// Evaluate the Wishart Laplace transform at a matrix point.
    Laplace(LaplaceArgs),
    /// Monte-Carlo validation of the moment formula.
    McVerify(McVerifyArgs),
}

#[derive(Args)]
struct JackEvalArgs {
    /// Partition, e.g. "2,1" (use "0" for the empty partition)
    #[arg(long)]
    kappa: String,
    /// Number of variables
    #[arg(long)]
    m: usize,
    /// Jack parameter as an exact rational
    #[arg(long)]
    alpha: String,
    /// Optional evaluation point, e.g. "1,1"
    #[arg(long)]
    point: Option<String>,
}

#[derive(Args)]
struct BinomArgs {
    #[arg(long)]
    alpha: String,
    #[arg(long)]
    max_degree: u64,
    /// Maximum partition length (defaults to max-degree)
    #[arg(long)]
    max_length: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct PositivityScanArgs {
    #[arg(long)]
    alpha: String,
    #[arg(long)]
    max_degree: u64,
    /// Maximum partition length
    #[arg(long)]
    m: usize,
}

#[derive(Args)]
struct ZonalArgs {
    /// Degree k
    #[arg(long)]
    k: u64,
    /// Cone rank r
    #[arg(long)]
    r: usize,
    /// Peirce invariant d
    #[arg(long)]
    d: u32,
}

#[derive(Args)]
struct CheckExistenceArgs {
    /// Cone spec: real:3 | complex:3 | quat:2 | lorentz:5 | octonion
    #[arg(long)]
    cone: String,
    /// Shape parameter β ("p/q" or decimal)
    #[arg(long)]
    beta: String,
    /// Noncentrality eigenvalues, e.g. "1,0,0"
    #[arg(long, conflicts_with = "omega_file")]
    omega: Option<String>,
    /// Noncentrality matrix file: {"m": k, "entries": [[..]]}
    #[arg(long)]
    omega_file: Option<String>,
    /// Scale matrix file (defaults to the standardized scale e/2)
    #[arg(long)]
    sigma_file: Option<String>,
    /// Re-verify the certificate through the moment formula
    #[arg(long)]
    certificate: bool,
    /// Exit 1 unless the verdict matches the expectation
    #[arg(long, value_enum)]
    expect: Option<Expectation>,
}

#[derive(Args)]
struct LaplaceArgs {
    #[arg(long)]
    cone: String,
    #[arg(long)]
    beta: String,
    #[arg(long, conflicts_with = "omega_file")]
    omega: Option<String>,
    #[arg(long)]
    omega_file: Option<String>,
    /// Scale matrix file (defaults to the standardized scale e/2)
    #[arg(long)]
    sigma_file: Option<String>,
    /// Evaluation point file: {"m": k, "entries": [[..]]}
    #[arg(long)]
    u_file: String,
}

#[derive(Args)]
struct McVerifyArgs {
    /// Matrix size (real symmetric cone)
    #[arg(long)]
    m: u32,
    /// Shape parameter β with 2β a positive integer
    #[arg(long)]
    beta: String,
    /// Noncentrality eigenvalues, e.g. "1,0"
    #[arg(long)]
    omega: String,
    /// Verify E Z_κ for all κ with 1 ≤ |κ| ≤ kappa-max
    #[arg(long, default_value = "2")]
    kappa_max: u64,
    /// Noncentrality tilt t (samples S(t) ~ Γ(β, e/2; tΩ))
    #[arg(long, default_value = "1")]
    t: String,
    /// Sample count
    #[arg(long, default_value = "1000000")]
    n: usize,
    #[arg(long, default_value = "0")]
    seed: u64,
    #[arg(long, default_value = "4096")]
    chunk_size: usize,
    /// Worker threads (defaults to all cores)
    #[arg(long)]
    threads: Option<usize>,
    /// Also compare the empirical Laplace transform at interior points
    #[arg(long)]
    laplace_points: bool,
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::JackEval(args) => cmd_jack_eval(args),
        Command::Binom(args) => cmd_binom(args),
        Command::PositivityScan(args) => cmd_positivity_scan(args),
        Command::Zonal(args) => cmd_zonal(args),
        Command::CheckExistence(args) => cmd_check_existence(args),
        Command::Laplace(args) => cmd_laplace(args),
        Command::McVerify(args) => cmd_mc_verify(args),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(CliError { message }) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn cmd_jack_eval(args: JackEvalArgs) -> CliResult<i32> {
    let kappa = parse_partition_flag("kappa", &args.kappa)?;
    let alpha = parse_rational_flag("alpha", &args.alpha)?;
    let poly = jack(&kappa, args.m, &alpha).map_err(|e| CliError::new(e.to_string()))?;
    if let Some(point) = args.point {
        let point = parse_rational_list("point", &point)?;
        let value = poly
            .eval(&point)
            .map_err(|e| CliError::new(e.to_string()))?;
        println!("{value}");
        return Ok(0);
    }
    let coefficients: Vec<Value> = poly
        .coeffs()
        .iter()
        .map(|(mu, c)| json!({"partition": partition_json(mu), "value": rat_string(c)}))
        .collect();
    print_json(&json!({
        "kappa": partition_json(&kappa),
        "m": args.m,
        "alpha": rat_string(&alpha),
        "normalization": "coefficient of m_(1^k) equals k!",
        "coefficients": coefficients,
    }));
    Ok(0)
}

fn cmd_binom(args: BinomArgs) -> CliResult<i32> {
    let alpha = parse_rational_flag("alpha", &args.alpha)?;
    let max_length = args.max_length.unwrap_or(args.max_degree as usize);
    let table = BinomialTable::new(alpha.clone()).map_err(|e| CliError::new(e.to_string()))?;
    let all = enumerate_up_to(args.max_degree, max_length);
    let mut entries: Vec<(Partition, Partition, Rat)> = Vec::new();
    for kappa in &all {
        for sigma in &all {
            if sigma.degree() > kappa.degree() || !sigma.contained_in(kappa) {
                continue;
            }
            let value = table
                .general(kappa, sigma)
                .map_err(|e| CliError::new(e.to_string()))?;
            entries.push((kappa.clone(), sigma.clone(), value));
        }
    }
    match args.format {
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(std::io::stdout());
            writer.write_record(["kappa", "sigma", "alpha", "value"])?;
            for (kappa, sigma, value) in &entries {
                writer.write_record([
                    kappa.to_string(),
                    sigma.to_string(),
                    alpha.to_string(),
                    value.to_string(),
                ])?;
            }
            writer.flush()?;
        }
        Format::Json => {
            let rows: Vec<Value> = entries
                .iter()
                .map(|(kappa, sigma, value)| {
                    json!({
                        "kappa": partition_json(kappa),
                        "sigma": partition_json(sigma),
                        "value": rat_string(value),
                    })
                })
                .collect();
            print_json(&json!({
                "alpha": rat_string(&alpha),
                "max_degree": args.max_degree,
                "max_length": max_length,
                "entries": rows,
            }));
        }
    }
    Ok(0)
}

fn cmd_positivity_scan(args: PositivityScanArgs) -> CliResult<i32> {
    let alpha = parse_rational_flag("alpha", &args.alpha)?;
    let report = positivity_scan(args.max_degree, args.m, &alpha)
        .map_err(|e| CliError::new(e.to_string()))?;
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| match v {
            PositivityViolation::NegativeGeneral { kappa, sigma, value } => json!({
                "kind": "negative_general",
                "kappa": partition_json(kappa),
                "sigma": partition_json(sigma),
                "value": rat_string(value),
            }),
            PositivityViolation::NonpositiveContiguous { sigma, index, value } => json!({
                "kind": "nonpositive_contiguous",
                "sigma": partition_json(sigma),
                "index": index,
                "value": rat_string(value),
            }),
        })
        .collect();
    print_json(&json!({
        "alpha": rat_string(&report.alpha),
        "max_degree": report.max_degree,
        "max_length": report.max_length,
        "general_checked": report.general_checked,
        "contiguous_checked": report.contiguous_checked,
        "violations": violations,
    }));
    Ok(0)
}

fn cmd_zonal(args: ZonalArgs) -> CliResult<i32> {
    let norm =
        zonal_normalization(args.k, args.r, args.d).map_err(|e| CliError::new(e.to_string()))?;
    let alpha = Rat::new(2.into(), (args.d as i64).into());
    let mut entries = Vec::new();
    for (kappa, c) in &norm.coeffs {
        let j = jack(kappa, args.r, &alpha).map_err(|e| CliError::new(e.to_string()))?;
        let ones = jack_at_ones(kappa, args.r, &alpha).map_err(|e| CliError::new(e.to_string()))?;
        let scale = c / ones;
        let coefficients: Vec<Value> = j
            .coeffs()
            .iter()
            .map(|(mu, v)| json!({"partition": partition_json(mu), "value": rat_string(&(v * &scale))}))
            .collect();
        entries.push(json!({
            "kappa": partition_json(kappa),
            "c": rat_string(c),
            "monomial_coefficients": coefficients,
        }));
    }
    print_json(&json!({
        "k": args.k,
        "r": args.r,
        "d": args.d,
        "alpha": rat_string(&alpha),
        "entries": entries,
    }));
    Ok(0)
}

/// Shared Ω parsing: eigenvalue list, exact matrix file, or float matrix
/// file (tolerance path with warning).
fn resolve_omega(
    cone_rank: usize,
    matrix_side: Option<usize>,
    omega: &Option<String>,
    omega_file: &Option<String>,
    warnings: &mut Vec<String>,
) -> CliResult<Omega> {
    match (omega, omega_file) {
        (Some(list), None) => {
            let values = parse_rational_list("omega", list)?;
            if values.len() != cone_rank {
                return Err(CliError::new(format!(
                    "--omega: expected {cone_rank} eigenvalues, got {}",
                    values.len()
                )));
            }
            Ok(Omega::Eigenvalues(values))
        }
        (None, Some(path)) => {
            let MatrixInput {
                matrix,
                float_entries,
                float_rows,
            } = read_matrix_file("omega-file", path)?;
            if matrix_side != Some(matrix.nrows()) {
                return Err(CliError::new(
                    "--omega-file: matrix noncentrality requires a real matrix cone of matching size",
                ));
            }
            if float_entries {
                warnings.push(
                    "noncentrality entries were floating point; eigenvalues rounded at 1e-10 \
                     relative tolerance, so the verdict is tolerance-dependent"
                        .to_string(),
                );
                let rank = float_rank_symmetric(&float_rows);
                let mut eigen = symmetric_eigenvalues_f64(&float_rows);
                let scale = eigen.iter().map(|x| x.abs()).fold(0.0f64, f64::max);
                eigen.iter_mut().for_each(|x| {
                    if x.abs() <= 1e-10 * scale {
                        *x = 0.0;
                    }
                });
                if eigen.iter().any(|&x| x < 0.0) {
                    return Err(CliError::new(
                        "--omega-file: matrix is not positive semidefinite (beyond tolerance)",
                    ));
                }
                let values: CliResult<Vec<Rat>> = eigen
                    .iter()
                    .map(|&x| {
                        rat_from_f64(x).map_err(|e| CliError::new(e.to_string()))
                    })
                    .collect();
                let mut values = values?;
                values.resize(cone_rank, Rat::new(0.into(), 1.into()));
                debug_assert_eq!(values.iter().filter(|v| **v != Rat::new(0.into(), 1.into())).count(), rank);
                Ok(Omega::Eigenvalues(values))
            } else {
                Ok(Omega::Matrix(matrix))
            }
        }
        _ => Err(CliError::new("provide exactly one of --omega / --omega-file")),
    }
}

fn resolve_scale(sigma_file: &Option<String>, warnings: &mut Vec<String>) -> CliResult<Scale> {
    match sigma_file {
        None => Ok(Scale::Unit),
        Some(path) => {
            let input = read_matrix_file("sigma-file", path)?;
            if input.float_entries {
                warnings.push(
                    "scale entries were floating point; they are used at their exact binary values"
                        .to_string(),
                );
            }
            Ok(Scale::Matrix(input.matrix))
        }
    }
}

fn cmd_check_existence(args: CheckExistenceArgs) -> CliResult<i32> {
    let cone = parse_cone(&args.cone).map_err(|e| CliError::new(e.to_string()))?;
    let beta = parse_rational_flag("beta", &args.beta)?;
    let mut warnings = Vec::new();
    let matrix_side = match cone.family {
        zonal_core::cone::ConeFamily::RealSymmetric(m) => Some(m as usize),
        _ => None,
    };
    let omega = resolve_omega(
        cone.rank as usize,
        matrix_side,
        &args.omega,
        &args.omega_file,
        &mut warnings,
    )?;
    let scale = resolve_scale(&args.sigma_file, &mut warnings)?;
    let params = WishartParams::new(cone, beta.clone(), scale, omega)
        .map_err(|e| CliError::new(e.to_string()))?;
    let verdict = existence_check(&params).map_err(|e| CliError::new(e.to_string()))?;

    let mut body = json!({
        "cone": args.cone,
        "beta": rat_string(&beta),
        "rank": params.omega_rank(),
        "passes": verdict.passes,
        "failed_condition": verdict.failed_condition.map(|f| f.to_string()),
        "certificate": Value::Null,
        "warnings": warnings,
    });
    if let Some(cert) = &verdict.certificate {
        body["certificate"] = json!({
            "kappa": partition_json(&cert.kappa),
            "t": rat_string(&cert.t),
            "value": rat_string(&cert.value),
        });
        if args.certificate {
            let recheck = putative_moment(&cert.kappa, &zonal_core::wishart::standardize(&params).map_err(|e| CliError::new(e.to_string()))?, &cert.t)
                .map_err(|e| CliError::new(e.to_string()))?;
            body["certificate"]["verified"] =
                Value::Bool(recheck == cert.value && recheck < Rat::new(0.into(), 1.into()));
        }
    }
    print_json(&body);

    let exit = match args.expect {
        Some(Expectation::Pass) if !verdict.passes => 1,
        Some(Expectation::Fail) if verdict.passes => 1,
        _ => 0,
    };
    Ok(exit)
}

fn cmd_laplace(args: LaplaceArgs) -> CliResult<i32> {
    let cone = parse_cone(&args.cone).map_err(|e| CliError::new(e.to_string()))?;
    let beta = parse_rational_flag("beta", &args.beta)?;
    let mut warnings = Vec::new();
    let matrix_side = match cone.family {
        zonal_core::cone::ConeFamily::RealSymmetric(m) => Some(m as usize),
        _ => None,
    };
    let omega = match (&args.omega, &args.omega_file) {
        (Some(list), None) => {
            let values = parse_rational_list("omega", list)?;
            Omega::Eigenvalues(values)
        }
        (None, Some(path)) => {
            let input = read_matrix_file("omega-file", path)?;
            if input.float_entries {
                warnings.push(
                    "noncentrality entries were floating point; used at exact binary values"
                        .to_string(),
                );
            }
            Omega::Matrix(input.matrix)
        }
        _ => return Err(CliError::new("provide exactly one of --omega / --omega-file")),
    };
    let scale = resolve_scale(&args.sigma_file, &mut warnings)?;
    let params = WishartParams::new(cone, beta, scale, omega)
        .map_err(|e| CliError::new(e.to_string()))?;
    let u_input = read_matrix_file("u-file", &args.u_file)?;
    if u_input.float_entries {
        warnings.push("u entries were floating point; used at exact binary values".to_string());
    }
    if matrix_side != Some(u_input.matrix.nrows()) {
        return Err(CliError::new(
            "--u-file: laplace evaluation requires a real matrix cone of matching size",
        ));
    }
    let value = laplace_transform(&params, &u_input.matrix)
        .map_err(|e| CliError::new(e.to_string()))?;
    print_json(&json!({
        "value": format!("{value:.15}"),
        "precision": "IEEE-754 double; determinant and trace terms computed exactly, rounded once",
        "warnings": warnings,
    }));
    Ok(0)
}

fn cmd_mc_verify(args: McVerifyArgs) -> CliResult<i32> {
    let beta = parse_rational_flag("beta", &args.beta)?;
    let t = parse_rational_flag("t", &args.t)?;
    let omega = parse_rational_list("omega", &args.omega)?;
    if omega.len() != args.m as usize {
        return Err(CliError::new(format!(
            "--omega: expected {} eigenvalues, got {}",
            args.m,
            omega.len()
        )));
    }
    let cone = zonal_core::cone::make_cone(zonal_core::cone::ConeFamily::RealSymmetric(args.m))
        .map_err(|e| CliError::new(e.to_string()))?;
    let params = WishartParams::new(cone, beta.clone(), Scale::Unit, Omega::Eigenvalues(omega))
        .map_err(|e| CliError::new(e.to_string()))?;
    let kappas: Vec<Partition> = (1..=args.kappa_max)
        .flat_map(|d| zonal_core::partition::enumerate_partitions(d, args.m as usize))
        .collect();

    let moment_report = with_threads(args.threads, || {
        verify_moment_formula(&params, &kappas, &t, args.n, args.seed, args.chunk_size)
    })
    .map_err(|e| CliError::new(e.to_string()))?;

    let laplace_report = if args.laplace_points {
        let m = args.m as usize;
        let points = interior_laplace_points(m);
        Some(
            with_threads(args.threads, || {
                verify_laplace_transform(&params, &points, args.n, args.seed, args.chunk_size)
            })
            .map_err(|e| CliError::new(e.to_string()))?,
        )
    } else {
        None
    };

    let rows_json = |report: &zonal_mc::ComparisonReport| -> Vec<Value> {
        report
            .rows
            .iter()
            .map(|r| {
                json!({
                    "name": r.name,
                    "exact": r.exact_repr,
                    "empirical": r.empirical,
                    "std_error": r.std_error,
                    "z_score": r.z_score,
                    "rel_error": r.rel_error,
                    "pass": r.pass,
                })
            })
            .collect()
    };

    let omega_json: Vec<Value> = match &params.omega {
        Omega::Eigenvalues(v) => v.iter().map(rat_string).collect(),
        _ => unreachable!("mc-verify builds eigenvalue noncentralities"),
    };
    let mut all_pass = moment_report.all_pass;
    let mut body = json!({
        "m": args.m,
        "beta": rat_string(&beta),
        "omega": omega_json,
        "t": rat_string(&t),
        "count": args.n,
        "seed": args.seed,
        "chunk_size": args.chunk_size,
        "gates": {"z_max": moment_report.z_gate, "rel_tol_deg_le_2": moment_report.rel_gate},
        "moments": rows_json(&moment_report),
    });
    if let Some(lr) = &laplace_report {
        all_pass = all_pass && lr.all_pass;
        body["laplace"] = Value::Array(rows_json(lr));
    }
    body["all_pass"] = Value::Bool(all_pass);
    print_json(&body);
    Ok(if all_pass { 0 } else { 1 })
}

/// Interior evaluation points mixing signs and an off-diagonal entry. All of
/// them keep I + 2u positive definite so the empirical estimator has finite
/// variance and the z-gates are meaningful.
fn interior_laplace_points(m: usize) -> Vec<Vec<f64>> {
    let diag = |values: &[f64]| {
        let mut u = vec![0.0; m * m];
        for (i, &v) in values.iter().enumerate().take(m) {
            u[i * m + i] = v;
        }
        u
    };
    let mut points = vec![
        diag(&vec![0.5; m]),
        diag(&vec![-0.4; m]),
        diag(&[1.0, 0.25, 0.5, 0.75][..m.min(4)]),
        diag(&[-0.3, 0.3, -0.2, 0.1][..m.min(4)]),
    ];
    let mut mixed = diag(&vec![0.4; m]);
    if m >= 2 {
        mixed[1] = 0.2;
        mixed[m] = 0.2;
    }
    points.push(mixed);
    points
}
