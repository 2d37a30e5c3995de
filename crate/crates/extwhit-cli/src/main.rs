//! Command-line front end: point evaluation, identity-suite verification,
//! parameter sweeps and asymptotic scans.
//!
//! Exit codes: 0 success, 1 usage/domain error, 2 numerical
//! non-convergence, 3 identity-suite (or asymptotic-gate) failure.

mod fmt;
mod params;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use extwhit::checks::{self, CheckConfig, ASYMP_DEFAULT_GRID};
use extwhit::extended::{self, ExtParams, Route};
use extwhit::transforms::TransformControls;
use extwhit::whittaker::{self, WhittakerArgs, WhittakerRoute};
use extwhit::{special, Accuracy, ComplexScalar, EvalOutcome};

use fmt::{fmt_f64, CsvWriter, JsonWriter};
use params::ParamMap;

pub const ENV_TOL: &str = "EXTWHIT_TOL";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(
    name = "extwhit",
    about = "Extended Whittaker/Beta/hypergeometric function evaluation and verification",
    disable_help_subcommand = true
)]
struct Cli {
    /// Relative tolerance for quadratures (default 1e-10 for eval, 1e-8
    /// for sweeps; the EXTWHIT_TOL environment variable overrides the
    /// default and this flag overrides both)
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Maximum quadrature refinement level (3..=15)
    #[arg(long, global = true)]
    max_level: Option<u32>,

    /// Output serialization
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Evaluate one function at named parameters (e.g. `eval whittaker_ext
    /// kappa=0 mu=0.5 z=1 p=0 nu=0`); complex literals parse as `a+bi`
    Eval {
        /// One of: beta, ext_beta_p, ext_beta_pnu, chf, ext_chf_p,
        /// ext_chf_pnu, gauss, ext_gauss_pnu, whittaker, whittaker_ext,
        /// asymptotic_leading, bessel_k_scaled
        function: String,
        /// name=value parameter assignments
        params: Vec<String>,
        /// Evaluation route where the function has several (integral|series
        /// for the hypergeometric family; definition|unit|affine:A:B|semi|
        /// symmetric for whittaker_ext)
        #[arg(long)]
        route: Option<String>,
    },
    /// Run a named verification suite (reductions, routes, summation,
    /// kummer, diff, mellin, laplace, bounds, or all)
    Check { suite: String },
    /// Sweep one or two parameters and emit CSV rows
    Table {
        function: String,
        /// Sweep axis `name=lin:start:stop:n` or `name=log:start:stop:n`
        #[arg(long = "sweep")]
        sweeps: Vec<String>,
        /// Fixed name=value parameter assignments
        params: Vec<String>,
        /// Append a `ratio` column `value / asymptotic_leading` (requires
        /// real kappa, mu and p > 0 among the parameters)
        #[arg(long)]
        asymp_ratio: bool,
    },
    /// Scan the ratio to the leading asymptotic form over an x grid and fit
    /// the convergence order of the correction
    Asymp {
        #[arg(long)]
        kappa: f64,
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0.0)]
        nu: f64,
        /// Grid points (defaults to 1e2, 4e2, 1.6e3, 6.4e3)
        #[arg(long = "x", num_args = 1..)]
        xs: Option<Vec<f64>>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are not usage errors
            if e.kind() == clap::error::ErrorKind::DisplayHelp
                || e.kind() == clap::error::ErrorKind::DisplayVersion
            {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprintln!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn env_tol() -> Option<f64> {
    std::env::var(ENV_TOL).ok()?.parse().ok()
}

fn accuracy(cli_tol: Option<f64>, max_level: Option<u32>, default_tol: f64) -> Result<Accuracy, String> {
    let rel_tol = cli_tol.or_else(env_tol).unwrap_or(default_tol);
    Accuracy::new(rel_tol, max_level.unwrap_or(12)).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Eval { function, params, route } => {
            let acc = accuracy(cli.tol, cli.max_level, 1e-10)?;
            let map = ParamMap::parse(&params)?;
            let out = eval_function(&function, &map, route.as_deref(), acc)?;
            print_outcome(&function, &out, cli.format);
            Ok(if out.converged {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Cmd::Check { suite } => {
            let acc = accuracy(cli.tol, cli.max_level, 1e-12)?;
            let cfg = CheckConfig {
                acc,
                transforms: TransformControls::default(),
            };
            let reports = checks::run(&suite, &cfg).map_err(|e| e.to_string())?;
            print_check_reports(&reports, cli.format);
            let pass = reports.iter().all(|r| r.all_pass());
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(3) })
        }
        Cmd::Table { function, sweeps, params, asymp_ratio } => {
            let acc = accuracy(cli.tol, cli.max_level, 1e-8)?;
            run_table(&function, &sweeps, &params, asymp_ratio, acc)
        }
        Cmd::Asymp { kappa, mu, p, nu, xs } => {
            let acc = accuracy(cli.tol, cli.max_level, 1e-8)?;
            run_asymp(kappa, mu, p, nu, xs.as_deref(), acc)
        }
    }
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

pub const FUNCTIONS: &[&str] = &[
    "beta",
    "ext_beta_p",
    "ext_beta_pnu",
    "chf",
    "ext_chf_p",
    "ext_chf_pnu",
    "gauss",
    "ext_gauss_pnu",
    "whittaker",
    "whittaker_ext",
    "asymptotic_leading",
    "bessel_k_scaled",
];

fn series_or_integral(route: Option<&str>) -> Result<Route, String> {
    match route {
        None | Some("integral") => Ok(Route::Integral),
        Some("series") => Ok(Route::Series),
        Some(other) => Err(format!("unknown route '{other}': expected integral or series")),
    }
}

fn whittaker_route(route: Option<&str>) -> Result<WhittakerRoute, String> {
    let Some(route) = route else {
        return Ok(WhittakerRoute::Definition);
    };
    if let Some(rest) = route.strip_prefix("affine:") {
        let parts: Vec<&str> = rest.split(':').collect();
        if parts.len() != 2 {
            return Err("affine route expects affine:ALPHA:BETA".into());
        }
        let alpha: f64 = parts[0].parse().map_err(|_| "bad affine alpha")?;
        let beta: f64 = parts[1].parse().map_err(|_| "bad affine beta")?;
        return Ok(WhittakerRoute::IntegralAffine { alpha, beta });
    }
    match route {
        "definition" => Ok(WhittakerRoute::Definition),
        "unit" => Ok(WhittakerRoute::IntegralUnit),
        "semi" => Ok(WhittakerRoute::IntegralSemiInfinite),
        "symmetric" => Ok(WhittakerRoute::IntegralSymmetric),
        other => Err(format!(
            "unknown route '{other}': expected definition, unit, affine:A:B, semi or symmetric"
        )),
    }
}

fn eval_function(
    function: &str,
    map: &ParamMap,
    route: Option<&str>,
    acc: Accuracy,
) -> Result<EvalOutcome, String> {
    let err = |e: extwhit::Error| e.to_string();
    let out = match function {
        "beta" => EvalOutcome::exact(special::beta(map.complex("x")?, map.complex("y")?).map_err(err)?),
        "ext_beta_p" => extended::ext_beta_p(
            map.complex("x")?,
            map.complex("y")?,
            map.complex("p")?,
            acc,
        )
        .map_err(err)?,
        "ext_beta_pnu" => {
            let params = ExtParams::new(map.complex("p")?, map.real("nu")?).map_err(err)?;
            extended::ext_beta_pnu(map.complex("x")?, map.complex("y")?, &params, acc)
                .map_err(err)?
        }
        "chf" => special::chf_classic(map.complex("b")?, map.complex("c")?, map.complex("z")?)
            .map_err(err)?,
        "ext_chf_p" => extended::ext_chf_p(
            map.complex("b")?,
            map.complex("c")?,
            map.complex("z")?,
            map.complex("p")?,
            acc,
        )
        .map_err(err)?,
        "ext_chf_pnu" => {
            let params = ExtParams::new(map.complex("p")?, map.real("nu")?).map_err(err)?;
            extended::ext_chf_pnu(
                map.complex("b")?,
                map.complex("c")?,
                map.complex("z")?,
                &params,
                series_or_integral(route)?,
                acc,
            )
            .map_err(err)?
        }
        "gauss" => special::gauss_classic(
            map.complex("a")?,
            map.complex("b")?,
            map.complex("c")?,
            map.complex("z")?,
        )
        .map_err(err)?,
        "ext_gauss_pnu" => {
            let params = ExtParams::new(map.complex("p")?, map.real("nu")?).map_err(err)?;
            extended::ext_gauss_pnu(
                map.complex("a")?,
                map.complex("b")?,
                map.complex("c")?,
                map.complex("z")?,
                &params,
                series_or_integral(route)?,
                acc,
            )
            .map_err(err)?
        }
        "whittaker" => special::whittaker_classic(
            map.complex("kappa")?,
            map.complex("mu")?,
            map.complex_any(&["z", "x"])?,
        )
        .map_err(err)?,
        "whittaker_ext" => {
            let args = WhittakerArgs::new(
                map.complex("kappa")?,
                map.complex("mu")?,
                map.complex_any(&["z", "x"])?,
            )
            .map_err(err)?;
            let params = ExtParams::new(map.complex("p")?, map.real("nu")?).map_err(err)?;
            whittaker::whittaker_ext(&args, &params, whittaker_route(route)?, acc).map_err(err)?
        }
        "asymptotic_leading" => {
            let v = whittaker::asymptotic_leading(
                map.real("kappa")?,
                map.real("mu")?,
                map.real("p")?,
                map.real("x")?,
            )
            .map_err(err)?;
            EvalOutcome::exact(ComplexScalar::new(v, 0.0))
        }
        "bessel_k_scaled" => {
            let order = extwhit::bessel::BesselOrder::from_rho(map.real("rho")?).map_err(err)?;
            extwhit::bessel::k_scaled(&order, map.real("x")?).map_err(err)?
        }
        other => {
            return Err(format!(
                "unknown function '{other}'; expected one of {FUNCTIONS:?}"
            ))
        }
    };
    Ok(out)
}

fn print_outcome(function: &str, out: &EvalOutcome, format: Format) {
    match format {
        Format::Plain => {
            println!("value: {}", fmt::fmt_complex(out.value));
            println!("abs_err: {}", fmt_f64(out.abs_err_estimate));
            println!("converged: {}", out.converged);
            if out.underflow_scaled {
                println!("underflow_scaled: true");
            }
        }
        Format::Json => {
            let mut w = JsonWriter::new();
            w.str_field("function", function);
            w.f64_field("value_re", out.value.re);
            w.f64_field("value_im", out.value.im);
            w.f64_field("abs_err_estimate", out.abs_err_estimate);
            w.bool_field("converged", out.converged);
            w.bool_field("underflow_scaled", out.underflow_scaled);
            println!("{}", w.finish());
        }
        Format::Csv => {
            let mut w = CsvWriter::new(vec![
                "function",
                "value_re",
                "value_im",
                "abs_err_estimate",
                "converged",
            ]);
            w.row(vec![
                function.to_string(),
                fmt_f64(out.value.re),
                fmt_f64(out.value.im),
                fmt_f64(out.abs_err_estimate),
                out.converged.to_string(),
            ]);
            print!("{}", w.finish());
        }
    }
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

fn print_check_reports(reports: &[checks::SuiteReport], format: Format) {
    match format {
        Format::Plain => {
            for r in reports {
                println!(
                    "suite {}: {} cases, {} failures, max residual {}",
                    r.name,
                    r.cases.len(),
                    r.failures(),
                    fmt_f64(r.max_residual())
                );
                for case in &r.cases {
                    println!(
                        "  {} {} residual={} tol={}",
                        if case.pass { "PASS" } else { "FAIL" },
                        case.label,
                        fmt_f64(case.residual),
                        fmt_f64(case.tolerance)
                    );
                }
            }
        }
        Format::Json => {
            let mut w = JsonWriter::new();
            w.raw_field("suites", &{
                let mut items = Vec::new();
                for r in reports {
                    let mut s = JsonWriter::new();
                    s.str_field("name", &r.name);
                    s.u64_field("cases", r.cases.len() as u64);
                    s.u64_field("failures", r.failures() as u64);
                    s.f64_field("max_residual", r.max_residual());
                    items.push(s.finish());
                }
                format!("[{}]", items.join(","))
            });
            w.bool_field("pass", reports.iter().all(|r| r.all_pass()));
            println!("{}", w.finish());
        }
        Format::Csv => {
            let mut w = CsvWriter::new(vec!["suite", "label", "residual", "tolerance", "pass"]);
            for r in reports {
                for case in &r.cases {
                    w.row(vec![
                        r.name.clone(),
                        case.label.clone(),
                        fmt_f64(case.residual),
                        fmt_f64(case.tolerance),
                        case.pass.to_string(),
                    ]);
                }
            }
            print!("{}", w.finish());
        }
    }
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

struct SweepAxis {
    name: String,
    values: Vec<f64>,
}

fn parse_sweep(spec: &str) -> Result<SweepAxis, String> {
    let (name, rest) = spec
        .split_once('=')
        .ok_or_else(|| format!("sweep '{spec}' must look like name=lin:start:stop:n"))?;
    let parts: Vec<&str> = rest.split(':').collect();
    if parts.len() != 4 {
        return Err(format!("sweep '{spec}' must look like name=lin:start:stop:n"));
    }
    let start: f64 = parts[1].parse().map_err(|_| format!("bad sweep bound '{}'", parts[1]))?;
    let stop: f64 = parts[2].parse().map_err(|_| format!("bad sweep bound '{}'", parts[2]))?;
    let n: usize = parts[3].parse().map_err(|_| format!("bad sweep count '{}'", parts[3]))?;
    if n < 2 {
        return Err("sweep needs at least 2 points".into());
    }
    let values = match parts[0] {
        "lin" => (0..n)
            .map(|i| start + (stop - start) * i as f64 / (n - 1) as f64)
            .collect(),
        "log" => {
            if !(start > 0.0 && stop > 0.0) {
                return Err("log sweep requires positive bounds".into());
            }
            let (ls, le) = (start.ln(), stop.ln());
            (0..n)
                .map(|i| (ls + (le - ls) * i as f64 / (n - 1) as f64).exp())
                .collect()
        }
        other => return Err(format!("unknown sweep spacing '{other}': expected lin or log")),
    };
    Ok(SweepAxis { name: params::canonical_name(name).to_string(), values })
}

fn run_table(
    function: &str,
    sweeps: &[String],
    fixed: &[String],
    asymp_ratio: bool,
    acc: Accuracy,
) -> Result<ExitCode, String> {
    if sweeps.is_empty() || sweeps.len() > 2 {
        return Err("table requires one or two --sweep axes".into());
    }
    let axes: Vec<SweepAxis> = sweeps.iter().map(|s| parse_sweep(s)).collect::<Result<_, _>>()?;
    let base = ParamMap::parse(fixed)?;

    // header row names the fixed parameters, then the data columns follow
    let fixed_desc: Vec<String> = base
        .entries()
        .map(|(k, v)| format!("{k}={}", fmt::fmt_complex_compact(*v)))
        .collect();
    println!("# function={function} {}", fixed_desc.join(" "));

    let mut columns: Vec<&str> = axes.iter().map(|a| a.name.as_str()).collect();
    columns.extend(["value_re", "value_im", "abs_err_estimate", "converged"]);
    if asymp_ratio {
        columns.push("ratio");
    }
    let mut w = CsvWriter::new(columns);

    let mut all_converged = true;
    let outer = &axes[0];
    let inner: Option<&SweepAxis> = axes.get(1);
    for &u in &outer.values {
        let inner_vals = inner.map(|a| a.values.clone()).unwrap_or_else(|| vec![f64::NAN]);
        for &v in &inner_vals {
            let mut map = base.clone();
            map.set(&outer.name, ComplexScalar::new(u, 0.0));
            let mut axis_cells = vec![fmt_f64(u)];
            if let Some(a) = inner {
                map.set(&a.name, ComplexScalar::new(v, 0.0));
                axis_cells.push(fmt_f64(v));
            }
            let out = eval_function(function, &map, None, acc)?;
            all_converged &= out.converged;
            let mut cells = axis_cells;
            cells.push(fmt_f64(out.value.re));
            cells.push(fmt_f64(out.value.im));
            cells.push(fmt_f64(out.abs_err_estimate));
            cells.push(out.converged.to_string());
            if asymp_ratio {
                let leading = whittaker::asymptotic_leading(
                    map.real("kappa")?,
                    map.real("mu")?,
                    map.real("p")?,
                    map.real("z").or_else(|_| map.real("x"))?,
                )
                .map_err(|e| e.to_string())?;
                cells.push(fmt_f64(out.value.re / leading));
            }
            w.row(cells);
        }
    }
    print!("{}", w.finish());
    Ok(if all_converged { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

// ---------------------------------------------------------------------------
// asymp
// ---------------------------------------------------------------------------

fn run_asymp(
    kappa: f64,
    mu: f64,
    p: f64,
    nu: f64,
    xs: Option<&[f64]>,
    acc: Accuracy,
) -> Result<ExitCode, String> {
    let grid: Vec<f64> = xs.map(|v| v.to_vec()).unwrap_or_else(|| ASYMP_DEFAULT_GRID.to_vec());
    let scan = checks::asymptotic_scan(kappa, mu, p, nu, &grid, acc).map_err(|e| e.to_string())?;
    for pt in &scan.points {
        println!(
            "x={} ratio={} r={}",
            fmt_f64(pt.x),
            fmt_f64(pt.ratio),
            fmt_f64(pt.r)
        );
    }
    println!("slope: {}", fmt_f64(scan.slope));
    if !scan.all_converged {
        eprintln!("error: inner evaluation failed to converge");
        return Ok(ExitCode::from(2));
    }
    Ok(if (-0.65..=-0.35).contains(&scan.slope) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}
