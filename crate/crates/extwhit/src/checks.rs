//! Named verification suites: reduction formulas, route equivalence, the
//! summation and transformation identities, differentiation formulas,
//! transform pairs, bounds and the asymptotic order scan.
//!
//! The CLI `check` command and the acceptance test target both drive these,
//! so the grids and tolerances live here in one place.

use num_complex::Complex64;

use crate::error::Result;
use crate::extended::{self, ExtParams, Route};
use crate::quad::Accuracy;
use crate::special;
use crate::transforms::{self, LaplaceQuery, MellinQuery, TransformControls};
use crate::whittaker::{self, AsymptoticForm, WhittakerArgs, WhittakerRoute};

/// One verified identity instance.
#[derive(Debug, Clone)]
pub struct CheckCase {
    pub label: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckCase {
    fn new(label: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self {
            label: label.into(),
            residual,
            tolerance,
            pass: residual.is_finite() && residual < tolerance,
        }
    }
}

/// All cases of one named suite.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub cases: Vec<CheckCase>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.pass).count()
    }

    pub fn max_residual(&self) -> f64 {
        self.cases.iter().map(|c| c.residual).fold(0.0, f64::max)
    }
}

/// Shared configuration for the suites.
#[derive(Debug, Clone, Copy)]
pub struct CheckConfig {
    pub acc: Accuracy,
    pub transforms: TransformControls,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            acc: Accuracy { rel_tol: 1e-12, max_level: 12 },
            transforms: TransformControls::default(),
        }
    }
}

pub const SUITE_NAMES: &[&str] = &[
    "reductions",
    "routes",
    "summation",
    "kummer",
    "diff",
    "mellin",
    "laplace",
    "bounds",
];

/// Run one suite by name, or every suite for "all".
pub fn run(name: &str, cfg: &CheckConfig) -> Result<Vec<SuiteReport>> {
    match name {
        "reductions" => Ok(vec![suite_reductions(cfg)?]),
        "routes" => Ok(vec![suite_routes(cfg)?]),
        "summation" => Ok(vec![suite_summation(cfg)?]),
        "kummer" => Ok(vec![suite_kummer(cfg)?]),
        "diff" => Ok(vec![suite_diff(cfg)?]),
        "mellin" => Ok(vec![suite_mellin(cfg)?]),
        "laplace" => Ok(vec![suite_laplace(cfg)?]),
        "bounds" => Ok(vec![suite_bounds(cfg)?]),
        "all" => SUITE_NAMES.iter().map(|n| Ok(run(n, cfg)?.remove(0))).collect(),
        other => Err(crate::Error::Domain(format!(
            "unknown suite '{other}'; expected one of {SUITE_NAMES:?} or 'all'"
        ))),
    }
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn rel_diff(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1e-300)
}

// ---------------------------------------------------------------------------
// reductions
// ---------------------------------------------------------------------------

/// Classical and nu = 0 reduction chain.
pub fn suite_reductions(cfg: &CheckConfig) -> Result<SuiteReport> {
    let acc = cfg.acc;
    let mut cases = Vec::new();
    let zs = [c(0.5), c(1.0), c(2.0), c(4.0), Complex64::new(0.0, 2.0)];
    let classical = ExtParams::real(0.0, 0.0)?;

    // p = nu = 0 against the classical series evaluation
    for &(kappa, mu) in &[(0.0, 0.5), (0.25, 0.75), (-0.5, 1.0)] {
        for &z in &zs {
            let args = WhittakerArgs::new(c(kappa), c(mu), z)?;
            let ext = whittaker::whittaker_ext(&args, &classical, WhittakerRoute::Definition, acc)?;
            let classic = special::whittaker_classic(c(kappa), c(mu), z)?;
            cases.push(CheckCase::new(
                format!("classical kappa={kappa} mu={mu} z={z}"),
                rel_diff(ext.value, classic.value),
                1e-10,
            ));
        }
    }

    // M_{0,1/2}(z) = 2 sinh(z/2)
    for &z in &zs {
        let args = WhittakerArgs::new(c(0.0), c(0.5), z)?;
        let ext = whittaker::whittaker_ext(&args, &classical, WhittakerRoute::Definition, acc)?;
        let sinh = (z / 2.0).sinh() * 2.0;
        cases.push(CheckCase::new(
            format!("2sinh(z/2) z={z}"),
            rel_diff(ext.value, sinh),
            1e-10,
        ));
    }

    // nu = 0 against the exponential-kernel extension
    for &p in &[0.5, 1.0] {
        let args = WhittakerArgs::real(0.25, 0.75, 1.5)?;
        let params = ExtParams::real(p, 0.0)?;
        let ext = whittaker::whittaker_ext(&args, &params, WhittakerRoute::Definition, acc)?;
        let phi = extended::ext_chf_p(c(1.0), c(2.5), args.z, c(p), acc)?;
        let direct = special::pow_principal(args.z, c(1.25))? * (-args.z / 2.0).exp() * phi.value;
        cases.push(CheckCase::new(
            format!("nu=0 exponential kernel p={p}"),
            rel_diff(ext.value, direct),
            1e-10,
        ));
        let nu0 = whittaker::whittaker_ext_nu0(&args, p, acc)?;
        cases.push(CheckCase::new(
            format!("nu=0 symmetric-interval form p={p}"),
            rel_diff(ext.value, nu0.value),
            1e-10,
        ));
    }

    // extended-Beta reduction chain
    let (x, y) = (c(1.5), c(2.25));
    for &p in &[0.25, 1.0] {
        let params = ExtParams::real(p, 0.0)?;
        let pnu = extended::ext_beta_pnu(x, y, &params, acc)?;
        let pext = extended::ext_beta_p(x, y, c(p), acc)?;
        cases.push(CheckCase::new(
            format!("B_(p,0) = B(.,.;p) p={p}"),
            rel_diff(pnu.value, pext.value),
            1e-10,
        ));
    }
    let b0 = extended::ext_beta_p(x, y, c(0.0), acc)?;
    cases.push(CheckCase::new(
        "B(.,.;0) = B(.,.)",
        rel_diff(b0.value, special::beta(x, y)?),
        1e-10,
    ));

    Ok(SuiteReport { name: "reductions".into(), cases })
}

// ---------------------------------------------------------------------------
// routes
// ---------------------------------------------------------------------------

/// The definition route against the four integral representations on the
/// standard grid (432 points): max pairwise spread < 1e-8 relative.
pub fn suite_routes(cfg: &CheckConfig) -> Result<SuiteReport> {
    let acc = cfg.acc;
    let mut cases = Vec::new();
    let routes = [
        WhittakerRoute::Definition,
        WhittakerRoute::IntegralUnit,
        WhittakerRoute::IntegralAffine { alpha: -1.0, beta: 3.0 },
        WhittakerRoute::IntegralSemiInfinite,
        WhittakerRoute::IntegralSymmetric,
    ];
    for &kappa in &[0.0, 0.5, -0.5] {
        for &mu in &[0.75, 1.0, 2.0] {
            for &z in &[0.5, 1.0, 2.0, 4.0] {
                for &p in &[0.25, 1.0, 4.0] {
                    for &nu in &[0.0, 0.5, 1.0, 2.0] {
                        let args = WhittakerArgs::real(kappa, mu, z)?;
                        let params = ExtParams::real(p, nu)?;
                        let values: Vec<Complex64> = routes
                            .iter()
                            .map(|r| {
                                whittaker::whittaker_ext(&args, &params, *r, acc)
                                    .map(|o| o.value)
                            })
                            .collect::<Result<_>>()?;
                        let scale = values[0].norm().max(1e-300);
                        let mut spread = 0.0f64;
                        for i in 0..values.len() {
                            for j in i + 1..values.len() {
                                spread = spread.max((values[i] - values[j]).norm());
                            }
                        }
                        cases.push(CheckCase::new(
                            format!("kappa={kappa} mu={mu} z={z} p={p} nu={nu}"),
                            spread / scale,
                            1e-8,
                        ));
                    }
                }
            }
        }
    }

    // series route against the integral route for the confluent (|z| <= 5)
    // and Gauss (|z| <= 0.8) extended functions
    let (b, cc) = (c(1.2), c(2.8));
    let a = c(0.7);
    for &p in &[0.25, 1.0, 4.0] {
        for &nu in &[0.0, 0.5, 1.0, 2.5] {
            let params = ExtParams::real(p, nu)?;
            for &z in &[0.5, 2.0, 5.0, -2.0] {
                let int = extended::ext_chf_pnu(b, cc, c(z), &params, Route::Integral, acc)?;
                let ser = extended::ext_chf_pnu(b, cc, c(z), &params, Route::Series, acc)?;
                cases.push(CheckCase::new(
                    format!("chf series-vs-integral z={z} p={p} nu={nu}"),
                    rel_diff(int.value, ser.value),
                    1e-8,
                ));
            }
            for &z in &[0.4, 0.8, -0.5] {
                let int =
                    extended::ext_gauss_pnu(a, b, cc, c(z), &params, Route::Integral, acc)?;
                let ser = extended::ext_gauss_pnu(a, b, cc, c(z), &params, Route::Series, acc)?;
                cases.push(CheckCase::new(
                    format!("gauss series-vs-integral z={z} p={p} nu={nu}"),
                    rel_diff(int.value, ser.value),
                    1e-8,
                ));
            }
        }
    }
    Ok(SuiteReport { name: "routes".into(), cases })
}

// ---------------------------------------------------------------------------
// summation
// ---------------------------------------------------------------------------

/// Integer-nu summation route against the direct kernel quadrature.
pub fn suite_summation(cfg: &CheckConfig) -> Result<SuiteReport> {
    let acc = cfg.acc;
    let mut cases = Vec::new();
    for n in 0..=3u32 {
        for &(kappa, mu, z, p) in &[
            (0.0, 1.0, 1.0, 1.0),
            (0.5, 1.5, 2.0, 0.5),
            (-0.25, 0.8, 0.5, 2.0),
        ] {
            let args = WhittakerArgs::real(kappa, mu, z)?;
            let sum = whittaker::whittaker_summation(&args, c(p), n, acc)?;
            let params = ExtParams::real(p, n as f64)?;
            let direct =
                whittaker::whittaker_ext(&args, &params, WhittakerRoute::Definition, acc)?;
            cases.push(CheckCase::new(
                format!("n={n} kappa={kappa} mu={mu} z={z} p={p}"),
                rel_diff(sum.value, direct.value),
                1e-8,
            ));
        }
    }
    Ok(SuiteReport { name: "summation".into(), cases })
}

// ---------------------------------------------------------------------------
// kummer
// ---------------------------------------------------------------------------

/// Kummer-type transformation residual; classical sub-case at 1e-12.
pub fn suite_kummer(cfg: &CheckConfig) -> Result<SuiteReport> {
    let acc = cfg.acc;
    let mut cases = Vec::new();
    let classical = ExtParams::real(0.0, 0.0)?;
    for &(kappa, mu, z) in &[(0.3, 0.8, 1.2), (0.0, 0.75, 2.0), (0.5, 1.0, 0.5)] {
        let args = WhittakerArgs::real(kappa, mu, z)?;
        let chk = whittaker::kummer_transform_residual(&args, &classical, acc)?;
        cases.push(CheckCase::new(
            format!("classical kappa={kappa} mu={mu} z={z}"),
            chk.rel_residual,
            1e-12,
        ));
    }
    let zs = [c(1.2), c(2.0), c(0.5), Complex64::new(0.0, 2.0)];
    for &(kappa, mu) in &[(0.3, 0.8), (0.5, 1.0)] {
        for &z in &zs {
            for &(p, nu) in &[(1.0, 1.0), (0.5, 0.5), (2.0, 1.5)] {
                let args = WhittakerArgs::new(c(kappa), c(mu), z)?;
                let params = ExtParams::real(p, nu)?;
                let chk = whittaker::kummer_transform_residual(&args, &params, acc)?;
                cases.push(CheckCase::new(
                    format!("kappa={kappa} mu={mu} z={z} p={p} nu={nu}"),
                    chk.rel_residual,
                    1e-9,
                ));
            }
        }
    }

    // the confluent-level transformation Phi(b;c;z) = e^z Phi(c-b;c;-z)
    // that the Whittaker identity rests on
    let (b, cc) = (c(1.2), c(2.8));
    for &p in &[0.25, 1.0, 4.0] {
        for &nu in &[0.0, 0.5, 1.0, 2.5] {
            for &z in &[1.0, 3.0, -2.0] {
                let params = ExtParams::real(p, nu)?;
                let lhs = extended::ext_chf_pnu(b, cc, c(z), &params, Route::Integral, acc)?;
                let rhs =
                    extended::ext_chf_pnu(cc - b, cc, c(-z), &params, Route::Integral, acc)?;
                cases.push(CheckCase::new(
                    format!("chf transform z={z} p={p} nu={nu}"),
                    rel_diff(lhs.value, c(z).exp() * rhs.value),
                    1e-9,
                ));
            }
        }
    }
    Ok(SuiteReport { name: "kummer".into(), cases })
}

// ---------------------------------------------------------------------------
// diff
// ---------------------------------------------------------------------------

/// Differentiation formulas against central finite differences
/// (n = 1 at h = 1e-5 to 1e-6 relative, n = 2 at h = 1e-3 to 1e-4).
pub fn suite_diff(cfg: &CheckConfig) -> Result<SuiteReport> {
    let acc = Accuracy { rel_tol: 1e-13, max_level: cfg.acc.max_level };
    let mut cases = Vec::new();

    let points: Vec<(f64, f64, Complex64, f64, f64)> = [
        (0.0, 1.0),
        (0.25, 0.8),
        (-0.3, 1.2),
    ]
    .iter()
    .flat_map(|&(kappa, mu)| {
        [c(0.7), c(1.3), c(2.1), Complex64::new(1.0, 0.5)]
            .into_iter()
            .flat_map(move |z| {
                [(1.0, 0.5), (0.5, 0.0)]
                    .into_iter()
                    .map(move |(p, nu)| (kappa, mu, z, p, nu))
            })
    })
    .collect();

    for &(kappa, mu, z, p, nu) in &points {
        let params = ExtParams::real(p, nu)?;
        let args = WhittakerArgs::new(c(kappa), c(mu), z)?;
        // g(z) = z^(-mu-1/2) e^(z/2) M(z); the formula gives d^n g / dz^n
        let g = |zz: Complex64| -> Result<Complex64> {
            let a = WhittakerArgs::new(c(kappa), c(mu), zz)?;
            let m = whittaker::whittaker_ext(&a, &params, WhittakerRoute::Definition, acc)?;
            Ok(special::pow_principal(zz, c(-(mu + 0.5)))? * (zz / 2.0).exp() * m.value)
        };
        let h1 = 1e-5 * z.norm().max(1.0);
        let fd1 = (g(z + h1)? - g(z - h1)?) / (2.0 * h1);
        let d1 = whittaker::whittaker_diff_formula(&args, &params, 1, acc)?;
        cases.push(CheckCase::new(
            format!("whittaker n=1 kappa={kappa} mu={mu} z={z} p={p} nu={nu}"),
            rel_diff(d1.value, fd1),
            1e-6,
        ));

        let h2 = 1e-3 * z.norm().max(1.0);
        let fd2 = (g(z + h2)? - 2.0 * g(z)? + g(z - h2)?) / (h2 * h2);
        let d2 = whittaker::whittaker_diff_formula(&args, &params, 2, acc)?;
        cases.push(CheckCase::new(
            format!("whittaker n=2 kappa={kappa} mu={mu} z={z} p={p} nu={nu}"),
            rel_diff(d2.value, fd2),
            1e-4,
        ));
    }

    // the underlying confluent derivative rule
    for &(b, cc, z, p, nu) in &[
        (1.2, 2.9, 0.8, 1.0, 0.5),
        (0.9, 2.1, 1.5, 0.5, 1.0),
        (1.5, 3.2, -0.7, 2.0, 0.0),
    ] {
        let params = ExtParams::real(p, nu)?;
        let phi = |zz: Complex64| -> Result<Complex64> {
            Ok(extended::ext_chf_pnu(c(b), c(cc), zz, &params, Route::Integral, acc)?.value)
        };
        let z = c(z);
        let h1 = 1e-5 * z.norm().max(1.0);
        let fd1 = (phi(z + h1)? - phi(z - h1)?) / (2.0 * h1);
        let d1 = extended::ext_chf_pnu_deriv(c(b), c(cc), z, &params, 1, acc)?;
        cases.push(CheckCase::new(
            format!("chf n=1 b={b} c={cc} z={z} p={p} nu={nu}"),
            rel_diff(d1.value, fd1),
            1e-6,
        ));
        let h2 = 1e-3 * z.norm().max(1.0);
        let fd2 = (phi(z + h2)? - 2.0 * phi(z)? + phi(z - h2)?) / (h2 * h2);
        let d2 = extended::ext_chf_pnu_deriv(c(b), c(cc), z, &params, 2, acc)?;
        cases.push(CheckCase::new(
            format!("chf n=2 b={b} c={cc} z={z} p={p} nu={nu}"),
            rel_diff(d2.value, fd2),
            1e-4,
        ));
    }

    Ok(SuiteReport { name: "diff".into(), cases })
}

// ---------------------------------------------------------------------------
// mellin
// ---------------------------------------------------------------------------

/// Mellin-transform pair residuals on the strip grid.
pub fn suite_mellin(cfg: &CheckConfig) -> Result<SuiteReport> {
    let ctl = cfg.transforms;
    let mut cases = Vec::new();
    for &nu in &[0.0, 0.5, 1.0] {
        for &ds in &[0.5, 1.0, 2.5] {
            for &kappa in &[0.0, 0.25] {
                for &mu in &[0.75, 1.0] {
                    for &z in &[0.5, 1.0, 2.0] {
                        let args = WhittakerArgs::real(kappa, mu, z)?;
                        let q = MellinQuery::new(c(nu + ds), args, nu)?;
                        let residual = transforms::mellin_residual(&q, &ctl)?;
                        cases.push(CheckCase::new(
                            format!("s=nu+{ds} nu={nu} kappa={kappa} mu={mu} z={z}"),
                            residual,
                            1e-6,
                        ));
                    }
                }
            }
        }
    }
    Ok(SuiteReport { name: "mellin".into(), cases })
}

// ---------------------------------------------------------------------------
// laplace
// ---------------------------------------------------------------------------

/// Laplace-type pair residuals plus the beta = 2 alpha closed form.
pub fn suite_laplace(cfg: &CheckConfig) -> Result<SuiteReport> {
    let ctl = cfg.transforms;
    let acc = cfg.acc;
    let mut cases = Vec::new();
    for &alpha in &[0.75, 1.0, 2.0] {
        for beta_factor in [0.5, 1.0, 2.0] {
            let beta = alpha * beta_factor;
            for &(kappa, mu) in &[(0.0, 1.0), (0.25, 0.75)] {
                for &(p, nu) in &[(1.0, 0.0), (1.0, 0.5), (0.25, 1.0)] {
                    let params = ExtParams::real(p, nu)?;
                    let q = LaplaceQuery::new(alpha, beta, c(kappa), c(mu), params)?;
                    let residual = transforms::laplace_residual(&q, &ctl)?;
                    cases.push(CheckCase::new(
                        format!(
                            "alpha={alpha} beta={beta} kappa={kappa} mu={mu} p={p} nu={nu}"
                        ),
                        residual,
                        1e-6,
                    ));
                }
            }
        }
    }
    // closed-form consistency at chi = 1
    for &alpha in &[0.75, 1.0, 2.0] {
        let params = ExtParams::real(1.0, 0.5)?;
        let q = LaplaceQuery::new(alpha, 2.0 * alpha, c(0.25), c(1.0), params)?;
        let rhs = transforms::laplace_rhs(&q, acc)?;
        let chi1 = transforms::laplace_rhs_chi1(alpha, c(0.25), c(1.0), &params, acc)?;
        cases.push(CheckCase::new(
            format!("chi=1 closed form alpha={alpha}"),
            rel_diff(rhs.value, chi1.value),
            1e-10,
        ));
    }
    // the unit-argument hypergeometric evaluation behind it
    let params = ExtParams::real(1.0, 0.5)?;
    let (a, b, cc) = (c(2.5), c(1.25), c(3.0));
    let direct = extended::ext_gauss_pnu(a, b, cc, c(1.0), &params, Route::Integral, acc)?;
    let viabeta = extended::ext_beta_pnu(b, cc - a - b, &params, acc)?;
    let den = special::beta(b, cc - b)?;
    cases.push(CheckCase::new(
        "F(a,b;c;1) = B_(p,nu)(b, c-a-b)/B(b, c-b)",
        rel_diff(direct.value, viabeta.value / den),
        1e-9,
    ));
    Ok(SuiteReport { name: "laplace".into(), cases })
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

/// Upper and lower bounds: strict at every sampled point, lower bounds
/// increasing in the truncation order.
pub fn suite_bounds(cfg: &CheckConfig) -> Result<SuiteReport> {
    let acc = cfg.acc;
    let mut cases = Vec::new();

    // upper bound, real p
    for &(kappa, mu) in &[(0.0, 1.0), (0.25, 0.75)] {
        for &z in &[c(1.0), c(2.0), Complex64::new(1.0, 0.5)] {
            for &nu in &[0.5, 1.0, 2.0] {
                let args = WhittakerArgs::new(c(kappa), c(mu), z)?;
                let params = ExtParams::real(1.0, nu)?;
                let rep = whittaker::whittaker_upper_bound(&args, &params, acc)?;
                cases.push(CheckCase::new(
                    format!("upper kappa={kappa} mu={mu} z={z} nu={nu}"),
                    rep.function_abs / rep.bound_value,
                    1.0,
                ));
            }
        }
    }
    // upper bound, complex p with integer nu
    for &nu in &[1.0, 2.0] {
        let args = WhittakerArgs::real(0.0, 1.0, 1.0)?;
        let params = ExtParams::new(Complex64::new(1.0, 1.0), nu)?;
        let rep = whittaker::whittaker_upper_bound(&args, &params, acc)?;
        cases.push(CheckCase::new(
            format!("upper complex p=1+1i nu={nu}"),
            rep.function_abs / rep.bound_value,
            1.0,
        ));
    }
    // the constant stays finite and positive as nu -> 0+
    let c_limit = whittaker::upper_bound_constant(c(1.0), 1e-12)?;
    cases.push(CheckCase::new(
        "upper-bound constant nu->0+ limit",
        (c_limit - 1.0).abs(),
        1e-9,
    ));

    // lower bounds, increasing in n
    for &(kappa, mu, x, p, nu) in &[(0.0, 1.0, 2.0, 1.0, 0.5), (0.25, 1.25, 1.0, 0.5, 1.0)] {
        let mut prev = 0.0;
        let mut monotone = true;
        for n in [0u32, 1, 2, 5] {
            let rep = whittaker::whittaker_lower_bound(kappa, mu, x, p, nu, n, acc)?;
            cases.push(CheckCase::new(
                format!("lower n={n} kappa={kappa} mu={mu} x={x} p={p} nu={nu}"),
                rep.bound_value / rep.function_abs,
                1.0,
            ));
            monotone &= rep.bound_value > prev;
            prev = rep.bound_value;
        }
        cases.push(CheckCase::new(
            format!("lower bounds increase kappa={kappa} mu={mu} x={x} p={p} nu={nu}"),
            if monotone { 0.0 } else { 1.0 },
            0.5,
        ));
    }

    Ok(SuiteReport { name: "bounds".into(), cases })
}

// ---------------------------------------------------------------------------
// asymptotic scan
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy)]
pub struct AsymptoticPoint {
    pub x: f64,
    /// `M(x) / (A x^((mu-kappa)/2) exp(x/2 - 2 sqrt(px)))`
    pub ratio: f64,
    /// `ratio - 1`, the relative correction, expected O(x^(-1/2))
    pub r: f64,
}

#[derive(Debug, Clone)]
pub struct AsymptoticScan {
    pub points: Vec<AsymptoticPoint>,
    /// least-squares slope of `ln |r|` against `ln x`
    pub slope: f64,
    pub all_converged: bool,
}

pub const ASYMP_DEFAULT_GRID: [f64; 4] = [1e2, 4e2, 1.6e3, 6.4e3];

/// Ratio of the function to its leading large-x form over a grid, with the
/// fitted convergence order of the correction term.
pub fn asymptotic_scan(
    kappa: f64,
    mu: f64,
    p: f64,
    nu: f64,
    xs: &[f64],
    acc: Accuracy,
) -> Result<AsymptoticScan> {
    let form = AsymptoticForm::new(kappa, mu, p)?;
    let params = ExtParams::real(p, nu)?;
    let mut points = Vec::with_capacity(xs.len());
    let mut all_converged = true;
    for &x in xs {
        let args = WhittakerArgs::real(kappa, mu, x)?;
        let m = whittaker::whittaker_ext_scaled(
            &args,
            &params,
            WhittakerRoute::Definition,
            acc,
        )?;
        all_converged &= m.converged;
        let ratio = (m.ln_abs() - form.ln_eval(x)?).exp();
        points.push(AsymptoticPoint { x, ratio, r: ratio - 1.0 });
    }
    // least squares on (ln x, ln |r|)
    let n = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for pt in &points {
        let lx = pt.x.ln();
        let ly = pt.r.abs().max(1e-300).ln();
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    Ok(AsymptoticScan { points, slope, all_converged })
}
