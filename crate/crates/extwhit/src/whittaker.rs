//! The (p,nu)-extended Whittaker function `M_{kappa,mu}^{(p,nu)}(z)` with
//! its integral representations, the differentiation formula, the
//! integer-nu summation formula, the Kummer-type transformation residual,
//! the large-argument asymptotic law and the two-sided bounds.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::extended::{self, BetaishIntegrand, ExtParams, Kernel};
use crate::outcome::{EvalOutcome, ScaledOutcome};
use crate::quad::{self, Accuracy, Node};
use crate::special::{self, ln_principal, pow_principal};

/// Arguments of the Whittaker family: the pair (kappa, mu) and the point z
/// with its principal argument in (-pi, pi].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WhittakerArgs {
    pub kappa: Complex64,
    pub mu: Complex64,
    pub z: Complex64,
}

impl WhittakerArgs {
    /// Rejects `2 mu` within 1e-12 of a negative integer (the confluent
    /// lower parameter `2 mu + 1` would sit on a pole).
    pub fn new(kappa: Complex64, mu: Complex64, z: Complex64) -> Result<Self> {
        special::check_two_mu(mu)?;
        Ok(Self { kappa, mu, z })
    }

    pub fn real(kappa: f64, mu: f64, z: f64) -> Result<Self> {
        Self::new(
            Complex64::new(kappa, 0.0),
            Complex64::new(mu, 0.0),
            Complex64::new(z, 0.0),
        )
    }

    /// Upper confluent parameter `b = mu - kappa + 1/2`.
    fn b(&self) -> Complex64 {
        self.mu - self.kappa + 0.5
    }

    /// Complementary parameter `d = c - b = mu + kappa + 1/2`.
    fn d(&self) -> Complex64 {
        self.mu + self.kappa + 0.5
    }
}

/// Evaluation route for the extended Whittaker function. All routes agree
/// analytically; they are kept distinct for cross-verification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WhittakerRoute {
    /// `z^(mu+1/2) e^(-z/2) Phi_{p,nu}(b; 2mu+1; z)` (default; one
    /// quadrature through the extended confluent function).
    Definition,
    /// Direct kernel quadrature over (0, 1).
    IntegralUnit,
    /// Affine image (alpha, beta) of the unit-interval representation.
    IntegralAffine { alpha: f64, beta: f64 },
    /// `t = u/(1+u)` image over (0, inf).
    IntegralSemiInfinite,
    /// The symmetric interval (-1, 1) special case.
    IntegralSymmetric,
}

fn require_p0_conditions(args: &WhittakerArgs) -> Result<()> {
    if !(args.b().re > 0.0 && args.d().re > 0.0) {
        return Err(Error::Domain(format!(
            "p = 0 requires Re(mu - kappa + 1/2) > 0 and Re(mu + kappa + 1/2) > 0, got {} and {}",
            args.b(),
            args.d()
        )));
    }
    Ok(())
}

/// Extended Whittaker function; errors if the result magnitude leaves the
/// binary64 range (use [`whittaker_ext_scaled`] for large arguments).
pub fn whittaker_ext(
    args: &WhittakerArgs,
    params: &ExtParams,
    route: WhittakerRoute,
    acc: Accuracy,
) -> Result<EvalOutcome> {
    whittaker_ext_scaled(args, params, route, acc)?.into_outcome()
}

/// Extended Whittaker function as `mantissa * exp(ln_scale)`, exact for
/// arguments where the plain value overflows (the large-x asymptotic scans
/// reach x ~ 6400 where `ln M ~ x/2`).
pub fn whittaker_ext_scaled(
    args: &WhittakerArgs,
    params: &ExtParams,
    route: WhittakerRoute,
    acc: Accuracy,
) -> Result<ScaledOutcome> {
    let z = args.z;
    if z.re == 0.0 && z.im == 0.0 {
        if (args.mu + 0.5).re > 0.0 {
            return Ok(ScaledOutcome {
                mantissa: Complex64::new(0.0, 0.0),
                ln_scale: 0.0,
                abs_err_mantissa: 0.0,
                converged: true,
            });
        }
        return Err(Error::Domain(format!(
            "z = 0 requires Re(mu + 1/2) > 0, got mu = {}",
            args.mu
        )));
    }
    match route {
        WhittakerRoute::Definition => {
            let chf = extended::chf_pnu_integral_scaled(
                args.b(),
                2.0 * args.mu + 1.0,
                z,
                params,
                acc,
            )?;
            let ln_pre = (args.mu + 0.5) * ln_principal(z) - z / 2.0;
            Ok(compose(chf, ln_pre))
        }
        WhittakerRoute::IntegralUnit => affine_route(args, params, 0.0, 1.0, acc),
        WhittakerRoute::IntegralAffine { alpha, beta } => {
            if !(beta - alpha > 0.0) {
                return Err(Error::InvalidSpec(format!(
                    "affine representation requires beta - alpha > 0, got [{alpha}, {beta}]"
                )));
            }
            affine_route(args, params, alpha, beta, acc)
        }
        WhittakerRoute::IntegralSymmetric => affine_route(args, params, -1.0, 1.0, acc),
        WhittakerRoute::IntegralSemiInfinite => semi_infinite_route(args, params, acc),
    }
}

fn compose(inner: ScaledOutcome, ln_pre: Complex64) -> ScaledOutcome {
    let phase = Complex64::new(0.0, ln_pre.im).exp();
    ScaledOutcome {
        mantissa: inner.mantissa * phase,
        ln_scale: inner.ln_scale + ln_pre.re,
        abs_err_mantissa: inner.abs_err_mantissa,
        converged: inner.converged,
    }
}

/// Kernel quadrature over the affine image (alpha, beta) of (0, 1):
/// integrand `(u-alpha)^(mu-kappa-1+s) (beta-u)^(mu+kappa-1+s)
/// exp(z(u-alpha)/(beta-alpha)) K` with the interval-length powers in the
/// prefactor. `s = 0` for the Bessel kernel, `s = 1/2` at p = 0 where the
/// kernel collapses into the endpoint powers.
fn affine_route(
    args: &WhittakerArgs,
    params: &ExtParams,
    alpha: f64,
    beta: f64,
    acc: Accuracy,
) -> Result<ScaledOutcome> {
    let kernel = Kernel::bessel(params)?;
    if matches!(kernel, Kernel::Classical) {
        require_p0_conditions(args)?;
    }
    let len = beta - alpha;
    let sh = kernel.exponent_shift(); // -1/2 for Bessel kernels, 0 classical
    let e_left = args.b() - 1.0 + sh; // mu - kappa - 1 resp. mu - kappa - 1/2
    let e_right = args.d() - 1.0 + sh;
    let z = args.z;
    let lin = z / len;

    let ig = BetaishIntegrand {
        e_left,
        e_right,
        lin,
        kernel: &kernel,
        tt_scale: len * len,
        shift: 0.0,
    };
    let p_re = params.p.re;
    let e_dom = |u: f64| {
        let tt = (u - alpha) * (beta - u) / (len * len);
        lin.re * (u - alpha) - if p_re > 0.0 { p_re / tt } else { 0.0 }
    };
    let shift = extended::scan_shift(|n| ig.re_exponent(n), alpha, beta, e_dom);
    let ig = BetaishIntegrand { shift, ..ig };
    let out = quad::de_finite(&mut |n| ig.eval(n), alpha, beta, acc)?;

    // ln of: len^(-2mu-2s) z^(mu+1/2) e^(-z/2) sqrt(2p/pi) / B(b, d);
    // the length exponent is -2mu+1 for the Bessel kernel, -2mu at p = 0
    let ln_pre = (-2.0 * args.mu - 2.0 * sh) * len.ln()
        + (args.mu + 0.5) * ln_principal(z)
        - z / 2.0
        + kernel.ln_norm()
        - special::ln_beta(args.b(), args.d())?;
    Ok(compose(
        ScaledOutcome {
            mantissa: out.value,
            ln_scale: shift,
            abs_err_mantissa: out.abs_err_estimate,
            converged: out.converged,
        },
        ln_pre,
    ))
}

/// `t = u/(1+u)` representation over (0, inf): integrand
/// `u^(b-1+s) (1+u)^(-2mu-1-2s) exp(zu/(1+u)) K(p(1+u)^2/u)`.
fn semi_infinite_route(
    args: &WhittakerArgs,
    params: &ExtParams,
    acc: Accuracy,
) -> Result<ScaledOutcome> {
    let kernel = Kernel::bessel(params)?;
    if matches!(kernel, Kernel::Classical) {
        require_p0_conditions(args)?;
    }
    let sh = kernel.exponent_shift();
    let e_u = args.b() - 1.0 + sh;
    let e_1pu = -2.0 * args.mu - 1.0 - 2.0 * sh;
    let z = args.z;

    let ln_parts = |u: f64| -> Option<Complex64> {
        let frac = u / (1.0 + u);
        let tt = frac / (1.0 + u); // u/(1+u)^2, kernel arg p/tt
        let lnw = kernel.ln_weight(tt)?;
        Some(e_u * u.ln() + e_1pu * (1.0 + u).ln() + z * frac + lnw)
    };
    // coarse log-spaced scan for the magnitude shift
    let mut shift = f64::NEG_INFINITY;
    for i in 0..=120 {
        let u = 10f64.powf(-6.0 + 12.0 * i as f64 / 120.0);
        if let Some(ln) = ln_parts(u) {
            shift = shift.max(ln.re);
        }
    }
    if !shift.is_finite() {
        shift = 0.0;
    }
    let out = quad::de_semi_infinite(
        &mut |u| match ln_parts(u) {
            Some(ln) => (ln - shift).exp(),
            None => Complex64::new(0.0, 0.0),
        },
        acc,
    )?;
    let ln_pre = (args.mu + 0.5) * ln_principal(z) - z / 2.0 + kernel.ln_norm()
        - special::ln_beta(args.b(), args.d())?;
    Ok(compose(
        ScaledOutcome {
            mantissa: out.value,
            ln_scale: shift,
            abs_err_mantissa: out.abs_err_estimate,
            converged: out.converged,
        },
        ln_pre,
    ))
}

/// nu = 0 exponential-kernel representation on (-1, 1):
/// `2^(-2mu) z^(mu+1/2) / B * int (1+u)^(b-1/2-...) ... exp(zu/2 - 4p/(1-u^2)) du`.
/// At p = 0 this is the classical symmetric-interval representation.
pub fn whittaker_ext_nu0(args: &WhittakerArgs, p: f64, acc: Accuracy) -> Result<EvalOutcome> {
    if !(p >= 0.0) {
        return Err(Error::Domain(format!("requires p >= 0, got {p}")));
    }
    require_p0_conditions(args)?;
    let z = args.z;
    if z.re == 0.0 && z.im == 0.0 {
        return Ok(EvalOutcome::exact(Complex64::new(0.0, 0.0)));
    }
    let e_left = args.b() - 1.0; // exponent on (1+u): mu - kappa - 1/2
    let e_right = args.d() - 1.0;
    let ln_parts = |n: Node| -> Complex64 {
        let decay = if p > 0.0 {
            -4.0 * p / (n.from_left * n.from_right)
        } else {
            0.0
        };
        e_left * n.from_left.ln() + e_right * n.from_right.ln() + z * (n.t / 2.0) + decay
    };
    let e_dom = |u: f64| {
        z.re * u / 2.0 - if p > 0.0 { 4.0 * p / ((1.0 + u) * (1.0 - u)) } else { 0.0 }
    };
    let shift = extended::scan_shift(|n| ln_parts(n).re, -1.0, 1.0, e_dom);
    let out = quad::de_finite(
        &mut |n| (ln_parts(n) - shift).exp(),
        -1.0,
        1.0,
        acc,
    )?;
    // no e^(-z/2) here: the symmetric-interval exponential e^{zu/2} already
    // carries it (u is centred, not shifted)
    let ln_pre = -2.0 * args.mu * std::f64::consts::LN_2
        + (args.mu + 0.5) * ln_principal(z)
        - special::ln_beta(args.b(), args.d())?;
    compose(
        ScaledOutcome {
            mantissa: out.value,
            ln_scale: shift,
            abs_err_mantissa: out.abs_err_estimate,
            converged: out.converged,
        },
        ln_pre,
    )
    .into_outcome()
}

/// Right-hand side of the n-th differentiation formula:
/// `((mu-kappa+1/2)_n / (2mu+1)_n) z^(-mu-1/2-n/2) e^(z/2)
///  M_{kappa-n/2, mu+n/2}^{(p,nu)}(z)`,
/// i.e. the n-th z-derivative of `z^(-mu-1/2) e^(z/2) M_{kappa,mu}^{(p,nu)}(z)`.
pub fn whittaker_diff_formula(
    args: &WhittakerArgs,
    params: &ExtParams,
    n: u32,
    acc: Accuracy,
) -> Result<EvalOutcome> {
    let shifted = WhittakerArgs::new(
        args.kappa - n as f64 / 2.0,
        args.mu + n as f64 / 2.0,
        args.z,
    )?;
    let m = whittaker_ext(&shifted, params, WhittakerRoute::Definition, acc)?;
    let ratio = special::pochhammer(args.b(), n) / special::pochhammer(2.0 * args.mu + 1.0, n);
    let pre = pow_principal(args.z, -(args.mu + 0.5 + n as f64 / 2.0))? * (args.z / 2.0).exp();
    Ok(m.map(|v| v * ratio * pre))
}

/// Integer-nu summation route: for nu = n,
/// `M^{(p,n)} = z^(mu+1/2) e^(-z/2) sum_{k=0}^{n} a_k(n) (2p)^{-k}
///  ((b)_k (d)_k / (2mu+1)_{2k}) Phi_p(b+k; 2mu+2k+1; z)`,
/// with `a_k(n) = (n+k)!/((n-k)! k!)` and the k-dependent lower parameter
/// `2mu + 2k + 1`. Cross-checks the direct kernel quadrature at integer nu.
pub fn whittaker_summation(
    args: &WhittakerArgs,
    p: Complex64,
    n: u32,
    acc: Accuracy,
) -> Result<EvalOutcome> {
    if !(p.re > 0.0) {
        return Err(Error::Domain(format!("requires Re(p) > 0, got p = {p}")));
    }
    let (b, d) = (args.b(), args.d());
    let c = 2.0 * args.mu + 1.0;
    let mut coeff = Complex64::new(1.0, 0.0); // a_k(n) / (2p)^k
    let mut sum = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut converged = true;
    for k in 0..=n {
        let kf = k as f64;
        if k > 0 {
            let nf = n as f64;
            coeff *= (nf + kf) * (nf - kf + 1.0) / (kf * 2.0 * p);
        }
        let poch = special::pochhammer(b, k) * special::pochhammer(d, k)
            / special::pochhammer(c, 2 * k);
        let phi = extended::ext_chf_p(b + kf, c + 2.0 * kf, args.z, p, acc)?;
        sum += coeff * poch * phi.value;
        err += (coeff * poch).norm() * phi.abs_err_estimate;
        converged &= phi.converged;
    }
    let pre = pow_principal(args.z, args.mu + 0.5)? * (-args.z / 2.0).exp();
    Ok(EvalOutcome {
        value: pre * sum,
        abs_err_estimate: pre.norm() * err,
        converged,
        underflow_scaled: false,
    })
}

/// Two sides and residual of the Kummer-type transformation
/// `z^(-mu-1/2) M_{kappa,mu}^{(p,nu)}(z) = (-z)^(-mu-1/2) M_{-kappa,mu}^{(p,nu)}(-z)`.
#[derive(Debug, Clone, Copy)]
pub struct KummerCheck {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub residual: f64,
    pub rel_residual: f64,
}

/// Negation mapped back onto the principal branch: arg(-z) = arg z -/+ pi.
fn negate_principal(z: Complex64) -> Complex64 {
    let mut w = -z;
    if w.im == 0.0 {
        w.im = 0.0; // drop a negative zero so arg(-x) = +pi for x > 0
    }
    w
}

/// Evaluate both sides of the Kummer-type transformation by independent
/// quadratures (principal powers on both sides).
pub fn kummer_transform_residual(
    args: &WhittakerArgs,
    params: &ExtParams,
    acc: Accuracy,
) -> Result<KummerCheck> {
    let exponent = -(args.mu + 0.5);
    let m_pos = whittaker_ext(args, params, WhittakerRoute::Definition, acc)?;
    let lhs = pow_principal(args.z, exponent)? * m_pos.value;

    let neg_z = negate_principal(args.z);
    let reflected = WhittakerArgs::new(-args.kappa, args.mu, neg_z)?;
    let m_neg = whittaker_ext(&reflected, params, WhittakerRoute::Definition, acc)?;
    let rhs = pow_principal(neg_z, exponent)? * m_neg.value;

    let residual = (lhs - rhs).norm();
    Ok(KummerCheck {
        lhs,
        rhs,
        residual,
        rel_residual: residual / lhs.norm().max(rhs.norm()).max(1e-300),
    })
}

// ---------------------------------------------------------------------------
// Large-argument asymptotic law
// ---------------------------------------------------------------------------

/// Leading large-x form `A x^((mu-kappa)/2) exp(x/2 - 2 sqrt(px))` with
/// `A = sqrt(pi) e^(-p) p^((mu+kappa)/2) / B(mu-kappa+1/2, mu+kappa+1/2)`;
/// independent of nu to leading order.
#[derive(Debug, Clone, Copy)]
pub struct AsymptoticForm {
    pub amplitude: f64,
    pub power_exponent: f64,
    /// coefficient of x in the exponent
    pub growth_linear: f64,
    /// coefficient of sqrt(x) in the exponent
    pub growth_sqrt: f64,
}

impl AsymptoticForm {
    pub fn new(kappa: f64, mu: f64, p: f64) -> Result<Self> {
        if !(p > 0.0) {
            return Err(Error::Domain(format!("requires p > 0, got {p}")));
        }
        let (bm, bp) = (mu - kappa + 0.5, mu + kappa + 0.5);
        if !(bm > 0.0 && bp > 0.0) {
            return Err(Error::Domain(format!(
                "requires mu +- kappa + 1/2 > 0, got {bm} and {bp}"
            )));
        }
        let ln_b = special::ln_beta(Complex64::new(bm, 0.0), Complex64::new(bp, 0.0))?.re;
        let ln_amp = 0.5 * std::f64::consts::PI.ln() - p + 0.5 * (mu + kappa) * p.ln() - ln_b;
        Ok(Self {
            amplitude: ln_amp.exp(),
            power_exponent: 0.5 * (mu - kappa),
            growth_linear: 0.5,
            growth_sqrt: -2.0 * p.sqrt(),
        })
    }

    /// log of the leading form; finite long after the form itself overflows.
    pub fn ln_eval(&self, x: f64) -> Result<f64> {
        if !(x > 0.0) {
            return Err(Error::Domain(format!("requires x > 0, got {x}")));
        }
        Ok(self.amplitude.ln()
            + self.power_exponent * x.ln()
            + self.growth_linear * x
            + self.growth_sqrt * x.sqrt())
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        let ln = self.ln_eval(x)?;
        if ln > 709.0 {
            return Err(Error::Overflow(format!(
                "leading form exp({ln:.1}) exceeds binary64 at x = {x}"
            )));
        }
        Ok(ln.exp())
    }
}

/// Leading asymptotic value `A x^((mu-kappa)/2) exp(x/2 - 2 sqrt(px))`.
pub fn asymptotic_leading(kappa: f64, mu: f64, p: f64, x: f64) -> Result<f64> {
    AsymptoticForm::new(kappa, mu, p)?.eval(x)
}

// ---------------------------------------------------------------------------
// Bounds
// ---------------------------------------------------------------------------

/// Outcome of a bound check: the bound, the function magnitude, whether the
/// strict inequality holds, and by what margin.
#[derive(Debug, Clone, Copy)]
pub struct BoundReport {
    pub bound_value: f64,
    pub function_abs: f64,
    pub satisfied: bool,
    pub margin: f64,
}

/// Upper bound from the kernel-magnitude estimate: for real kappa, mu with
/// `mu +- kappa + 1/2 > 0`, `nu > 0` and `Re(p) > 0`,
/// `|M| < C |z|^(mu+1/2) e^(-Re z/2) (B(b+nu, d+nu)/B(b, d))
///        Phi(b+nu; 2mu+2nu+1; Re z)`
/// with `C = 2^nu |p|^(nu+1) Gamma(nu+1/2) / (sqrt(pi) (Re p)^(2nu+1))`
/// (the exponent nu+1 on |p| is what the estimate chain actually yields).
pub fn whittaker_upper_bound(
    args: &WhittakerArgs,
    params: &ExtParams,
    acc: Accuracy,
) -> Result<BoundReport> {
    if args.kappa.im != 0.0 || args.mu.im != 0.0 {
        return Err(Error::Domain(
            "the upper bound is stated for real kappa, mu".into(),
        ));
    }
    let nu = params.nu;
    if !(nu > 0.0) {
        return Err(Error::Domain(format!("requires nu > 0, got {nu}")));
    }
    let (kappa, mu) = (args.kappa.re, args.mu.re);
    let (bm, bp) = (mu - kappa + 0.5, mu + kappa + 0.5);
    if !(bm > 0.0 && bp > 0.0) {
        return Err(Error::Domain(format!(
            "requires mu +- kappa + 1/2 > 0, got {bm} and {bp}"
        )));
    }
    let constant = upper_bound_constant(params.p, nu)?;
    let beta_ratio = (special::ln_beta(
        Complex64::new(bm + nu, 0.0),
        Complex64::new(bp + nu, 0.0),
    )? - special::ln_beta(Complex64::new(bm, 0.0), Complex64::new(bp, 0.0))?)
    .exp();
    let phi = special::chf_classic(
        Complex64::new(bm + nu, 0.0),
        Complex64::new(2.0 * mu + 2.0 * nu + 1.0, 0.0),
        Complex64::new(args.z.re, 0.0),
    )?;
    let bound = constant
        * args.z.norm().powf(mu + 0.5)
        * (-args.z.re / 2.0).exp()
        * beta_ratio.re
        * phi.value.re;

    let m = whittaker_ext(args, params, WhittakerRoute::Definition, acc)?;
    let fabs = m.value.norm();
    Ok(BoundReport {
        bound_value: bound,
        function_abs: fabs,
        satisfied: fabs < bound,
        margin: (bound - fabs).abs(),
    })
}

/// `C = 2^nu |p|^(nu+1) Gamma(nu+1/2) / (sqrt(pi) (Re p)^(2nu+1))`; finite
/// and positive as nu -> 0+ (Gamma(1/2) cancels the sqrt(pi)).
pub fn upper_bound_constant(p: Complex64, nu: f64) -> Result<f64> {
    if !(p.re > 0.0) {
        return Err(Error::Domain(format!("requires Re(p) > 0, got {p}")));
    }
    let gamma = special::gamma(Complex64::new(nu + 0.5, 0.0))?.re;
    Ok(2f64.powf(nu) * p.norm().powf(nu + 1.0) * gamma
        / (std::f64::consts::PI.sqrt() * p.re.powf(2.0 * nu + 1.0)))
}

/// Truncated-series lower bound: for real parameters, p > 0 and x > 0,
/// `M^{(p,nu)}(x) > x^(mu+1/2) e^(-x/2) sum_{j=0}^{n} (x^j/j!)
///  B_{p,nu}(b+j, d) / B(b, d)`;
/// the bounds increase with n (every added term is positive).
pub fn whittaker_lower_bound(
    kappa: f64,
    mu: f64,
    x: f64,
    p: f64,
    nu: f64,
    n: u32,
    acc: Accuracy,
) -> Result<BoundReport> {
    if !(p > 0.0) || !(x > 0.0) {
        return Err(Error::Domain(format!(
            "requires p > 0 and x > 0, got p = {p}, x = {x}"
        )));
    }
    let (bm, bp) = (mu - kappa + 0.5, mu + kappa + 0.5);
    if !(bm > 0.0 && bp > 0.0) {
        return Err(Error::Domain(format!(
            "requires mu +- kappa + 1/2 > 0, got {bm} and {bp}"
        )));
    }
    let params = ExtParams::real(p, nu)?;
    let ln_b = special::ln_beta(Complex64::new(bm, 0.0), Complex64::new(bp, 0.0))?.re;
    let mut sum = 0.0;
    let mut factor = 1.0; // x^j / j!
    for j in 0..=n {
        if j > 0 {
            factor *= x / j as f64;
        }
        let bterm = extended::ext_beta_pnu(
            Complex64::new(bm + j as f64, 0.0),
            Complex64::new(bp, 0.0),
            &params,
            acc,
        )?;
        sum += factor * bterm.value.re * (-ln_b).exp();
    }
    let bound = x.powf(mu + 0.5) * (-x / 2.0).exp() * sum;

    let args = WhittakerArgs::real(kappa, mu, x)?;
    let m = whittaker_ext(&args, &params, WhittakerRoute::Definition, acc)?;
    let fabs = m.value.re;
    Ok(BoundReport {
        bound_value: bound,
        function_abs: fabs,
        satisfied: fabs > bound,
        margin: (fabs - bound).abs(),
    })
}
