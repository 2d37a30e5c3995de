//! Mellin- and Laplace-type transforms of the extended Whittaker function,
//! evaluated as left-hand-side quadratures against closed-form right-hand
//! sides.
//!
//! The outer integrals run over the extension parameter p (Mellin) or the
//! argument scale x (Laplace). Both are split at a crude estimate of the
//! integrand peak into two exp-/tanh-sinh halves, because double-exponential
//! rules converge poorly across an interior maximum. Every outer abscissa
//! triggers a full inner Whittaker quadrature whose tolerance is held a
//! couple of orders tighter than the outer target.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::extended::{self, ExtParams, Route};
use crate::outcome::EvalOutcome;
use crate::quad::{self, Accuracy};
use crate::special::{self, ln_principal};
use crate::whittaker::{self, WhittakerArgs, WhittakerRoute};

/// Controls for the nested transform quadratures: the outer target and how
/// much tighter the inner Whittaker evaluations run.
#[derive(Debug, Clone, Copy)]
pub struct TransformControls {
    pub outer: Accuracy,
    pub inner_tol_factor: f64,
}

impl Default for TransformControls {
    fn default() -> Self {
        Self {
            outer: Accuracy { rel_tol: 1e-8, max_level: 12 },
            inner_tol_factor: 1e-2,
        }
    }
}

impl TransformControls {
    fn inner(&self) -> Accuracy {
        self.outer.tighter(self.inner_tol_factor)
    }
}

/// Query for the Mellin transform in p of `M_{kappa,mu}^{(p,nu)}(z)`,
/// analytic in the strip `Re(s) > nu`.
#[derive(Debug, Clone, Copy)]
pub struct MellinQuery {
    pub s: Complex64,
    pub args: WhittakerArgs,
    pub nu: f64,
}

impl MellinQuery {
    pub fn new(s: Complex64, args: WhittakerArgs, nu: f64) -> Result<Self> {
        if !(nu >= 0.0) {
            return Err(Error::Domain(format!("requires nu >= 0, got {nu}")));
        }
        Ok(Self { s, args, nu })
    }
}

/// `int_0^inf p^(s-1) M_{kappa,mu}^{(p,nu)}(z) dp` by nested quadrature.
///
/// The integrand behaves like `p^(s-1-nu)` at 0 and decays like `e^(-4p)`
/// at infinity, so the strip is `Re(s) > nu`; approaching the boundary the
/// outcome degrades to a non-converged flag rather than a wrong value.
pub fn mellin_lhs(q: &MellinQuery, ctl: &TransformControls) -> Result<EvalOutcome> {
    let gap = q.s.re - q.nu;
    if !(gap > 0.0) {
        return Err(Error::Domain(format!(
            "requires Re(s) > nu, got Re(s) = {} with nu = {}",
            q.s.re, q.nu
        )));
    }
    let inner = ctl.inner();
    let peak = (gap / 4.0).max(0.05);
    // below the floor the integrand contributes less than ~1e-16 of the
    // peak; the clamp keeps the kernel representable in binary64
    let floor = (peak * (1e-16f64).powf(1.0 / gap.min(4.0))).max(1e-100);
    let ceiling = peak + 16.0 + 0.75 * (q.s.re - 1.0).max(0.0);

    let sm1 = q.s - 1.0;
    let integrand = |p: f64| -> Complex64 {
        if p < floor || p > ceiling {
            return Complex64::new(0.0, 0.0);
        }
        let params = match ExtParams::real(p, q.nu) {
            Ok(v) => v,
            Err(_) => return Complex64::new(f64::NAN, 0.0),
        };
        match whittaker::whittaker_ext_scaled(
            &q.args,
            &params,
            WhittakerRoute::Definition,
            inner,
        ) {
            Ok(m) => {
                let ln = sm1 * p.ln() + m.ln_scale;
                if ln.re > 705.0 {
                    return Complex64::new(f64::NAN, 0.0);
                }
                ln.exp() * m.mantissa
            }
            Err(_) => Complex64::new(f64::NAN, 0.0),
        }
    };

    let head = quad::de_finite(
        &mut |n| integrand(n.from_left),
        0.0,
        peak,
        ctl.outer,
    )?;
    let tail = quad::de_semi_infinite(&mut |v| integrand(peak + v), ctl.outer)?;
    Ok(EvalOutcome {
        value: head.value + tail.value,
        abs_err_estimate: head.abs_err_estimate + tail.abs_err_estimate,
        converged: head.converged && tail.converged,
        underflow_scaled: false,
    })
}

/// Closed form of the Mellin transform:
/// `2^(s-1) z^(mu+1/2) e^(-z/2) / (sqrt(pi) B(b, d)) *
///  Gamma((s-nu)/2) Gamma((s+nu+1)/2) B(b+s, d+s) Phi(b+s; 2mu+2s+1; z)`.
pub fn mellin_rhs(q: &MellinQuery, acc: Accuracy) -> Result<EvalOutcome> {
    let _ = acc;
    if !(q.s.re > q.nu) {
        return Err(Error::Domain(format!(
            "requires Re(s) > nu, got Re(s) = {} with nu = {}",
            q.s.re, q.nu
        )));
    }
    let (b, d) = (
        q.args.mu - q.args.kappa + 0.5,
        q.args.mu + q.args.kappa + 0.5,
    );
    if !(b.re > 0.0 && d.re > 0.0) {
        return Err(Error::Domain(format!(
            "requires Re(mu +- kappa + 1/2) > 0, got {b} and {d}"
        )));
    }
    let z = q.args.z;
    if z.re == 0.0 && z.im == 0.0 {
        return Ok(EvalOutcome::exact(Complex64::new(0.0, 0.0)));
    }
    let s = q.s;
    let nu = q.nu;
    let ln = (s - 1.0) * std::f64::consts::LN_2
        + (q.args.mu + 0.5) * ln_principal(z)
        - z / 2.0
        - 0.5 * std::f64::consts::PI.ln()
        - special::ln_beta(b, d)?
        + special::log_gamma((s - nu) / 2.0)?
        + special::log_gamma((s + nu + 1.0) / 2.0)?
        + special::ln_beta(b + s, d + s)?;
    let phi = special::chf_classic(b + s, 2.0 * q.args.mu + 2.0 * s + 1.0, z)?;
    Ok(phi.map(|v| v * ln.exp()))
}

/// Query for the Laplace-type transform
/// `int_0^inf x^(alpha-1) e^(-alpha x) M_{kappa,mu}^{(p,nu)}(beta x) dx`
/// with `2 alpha - beta >= 0`, i.e. `chi = 2 beta / (2 alpha + beta)` in
/// (0, 1].
#[derive(Debug, Clone, Copy)]
pub struct LaplaceQuery {
    pub alpha: f64,
    pub beta: f64,
    pub kappa: Complex64,
    pub mu: Complex64,
    pub params: ExtParams,
}

impl LaplaceQuery {
    pub fn new(
        alpha: f64,
        beta: f64,
        kappa: Complex64,
        mu: Complex64,
        params: ExtParams,
    ) -> Result<Self> {
        if !(alpha > 0.0 && beta > 0.0) {
            return Err(Error::Domain(format!(
                "requires alpha > 0 and beta > 0, got alpha = {alpha}, beta = {beta}"
            )));
        }
        if 2.0 * alpha - beta < 0.0 {
            return Err(Error::Domain(format!(
                "requires 2*alpha - beta >= 0, got alpha = {alpha}, beta = {beta}"
            )));
        }
        special::check_two_mu(mu)?;
        Ok(Self { alpha, beta, kappa, mu, params })
    }

    /// `chi = 2 beta / (2 alpha + beta)`, always recomputed, never stored.
    pub fn chi(&self) -> f64 {
        2.0 * self.beta / (2.0 * self.alpha + self.beta)
    }

    fn require_exponent(&self) -> Result<()> {
        if !((self.mu + self.alpha + 0.5).re > 0.0) {
            return Err(Error::Domain(format!(
                "requires Re(mu + alpha + 1/2) > 0, got mu = {}, alpha = {}",
                self.mu, self.alpha
            )));
        }
        Ok(())
    }
}

/// Left-hand side of the Laplace-type identity by nested quadrature. The
/// integrand decays like `exp((beta/2 - alpha) x - 2 sqrt(p beta x))` at
/// infinity, which the constraint `2 alpha >= beta` keeps integrable.
pub fn laplace_lhs(q: &LaplaceQuery, ctl: &TransformControls) -> Result<EvalOutcome> {
    q.require_exponent()?;
    let inner = ctl.inner();
    let (alpha, beta) = (q.alpha, q.beta);
    let p_re = q.params.p.re;

    // crude log-magnitude estimate of the integrand, used only to place the
    // split point and the tail cutoffs
    // the exponential rate (beta/2 - alpha) is formed as one coefficient:
    // at beta = 2 alpha it must vanish exactly, not by cancellation of two
    // terms of size alpha*x
    let rate = 0.5 * beta - alpha;
    let mu_re = q.mu.re;
    let dk = (q.mu - q.kappa).re;
    let est = |x: f64| -> f64 {
        let lx = (beta * x).ln();
        let small = (mu_re + 0.5) * lx - alpha * x;
        let large = rate * x - 2.0 * (p_re.max(0.0) * beta * x).sqrt() + 0.5 * dk * lx;
        (alpha - 1.0) * x.ln() + small.max(large)
    };
    let mut x_star = 1.0;
    let mut est_max = f64::NEG_INFINITY;
    for i in 0..=200 {
        let x = 10f64.powf(-4.0 + 8.0 * i as f64 / 200.0);
        let e = est(x);
        if e > est_max {
            est_max = e;
            x_star = x;
        }
    }

    let integrand = |x: f64| -> Complex64 {
        if x <= 0.0 || est(x) < est_max - 55.0 {
            return Complex64::new(0.0, 0.0);
        }
        let args = match WhittakerArgs::new(q.kappa, q.mu, Complex64::new(beta * x, 0.0)) {
            Ok(a) => a,
            Err(_) => return Complex64::new(f64::NAN, 0.0),
        };
        match whittaker::whittaker_ext_scaled(
            &args,
            &q.params,
            WhittakerRoute::Definition,
            inner,
        ) {
            Ok(m) => {
                let ln = (alpha - 1.0) * x.ln() - alpha * x + m.ln_scale;
                if ln > 705.0 {
                    return Complex64::new(f64::NAN, 0.0);
                }
                ln.exp() * m.mantissa
            }
            Err(_) => Complex64::new(f64::NAN, 0.0),
        }
    };

    let head = quad::de_finite(
        &mut |n| integrand(n.from_left),
        0.0,
        x_star,
        ctl.outer,
    )?;
    let tail = quad::de_semi_infinite(&mut |v| integrand(x_star + v), ctl.outer)?;
    Ok(EvalOutcome {
        value: head.value + tail.value,
        abs_err_estimate: head.abs_err_estimate + tail.abs_err_estimate,
        converged: head.converged && tail.converged,
        underflow_scaled: false,
    })
}

/// Closed form of the Laplace-type identity:
/// `beta^(-alpha) Gamma(mu+alpha+1/2) chi^(mu+alpha+1/2)
///  F_{p,nu}(mu+alpha+1/2, mu-kappa+1/2; 2mu+1; chi)`.
///
/// At `chi = 1` (`beta = 2 alpha`) the hypergeometric value is taken from
/// the unit-argument evaluation `F_{p,nu}(a,b;c;1) = B_{p,nu}(b, c-a-b) /
/// B(b, c-b)`, which analytic continuation extends the identity to.
pub fn laplace_rhs(q: &LaplaceQuery, acc: Accuracy) -> Result<EvalOutcome> {
    q.require_exponent()?;
    let chi = q.chi();
    let a = q.mu + q.alpha + 0.5;
    let b = q.mu - q.kappa + 0.5;
    let c = 2.0 * q.mu + 1.0;
    let pre = (-Complex64::new(q.alpha, 0.0) * q.beta.ln()
        + special::log_gamma(a)?
        + a * chi.ln())
    .exp();
    let f = if chi == 1.0 {
        if q.params.is_classical() {
            return Err(Error::Domain(
                "chi = 1 requires Re(p) > 0 (the classical hypergeometric diverges at 1)".into(),
            ));
        }
        let num = extended::ext_beta_pnu(b, c - a - b, &q.params, acc)?;
        let den = special::beta(b, c - b)?;
        num.map(|v| v / den)
    } else {
        extended::ext_gauss_pnu(a, b, c, Complex64::new(chi, 0.0), &q.params, Route::Integral, acc)?
    };
    Ok(f.map(|v| v * pre))
}

/// The `beta = 2 alpha` closed form:
/// `Gamma(mu+alpha+1/2) / (2 alpha)^alpha *
///  B_{p,nu}(mu-kappa+1/2, kappa-alpha) / B(mu-kappa+1/2, mu+kappa+1/2)`.
///
/// The second extended-Beta argument `kappa - alpha` may have nonpositive
/// real part; `p > 0` keeps the integral convergent regardless.
pub fn laplace_rhs_chi1(
    alpha: f64,
    kappa: Complex64,
    mu: Complex64,
    params: &ExtParams,
    acc: Accuracy,
) -> Result<EvalOutcome> {
    if !(alpha > 0.0) {
        return Err(Error::Domain(format!("requires alpha > 0, got {alpha}")));
    }
    if params.is_classical() {
        return Err(Error::Domain("requires p > 0".into()));
    }
    if !((mu + alpha + 0.5).re > 0.0) {
        return Err(Error::Domain(format!(
            "requires Re(mu + alpha + 1/2) > 0, got mu = {mu}, alpha = {alpha}"
        )));
    }
    let b = mu - kappa + 0.5;
    let d = mu + kappa + 0.5;
    let pre = (special::log_gamma(mu + alpha + 0.5)?
        - Complex64::new(alpha, 0.0) * (2.0 * alpha).ln()
        - special::ln_beta(b, d)?)
    .exp();
    let bval = extended::ext_beta_pnu(b, kappa - alpha, params, acc)?;
    Ok(bval.map(|v| v * pre))
}

/// Generic Mellin transform `int_0^inf x^(s-1) f(x) dx` for a locally
/// integrable `f` whose declared strip of analyticity contains `Re(s)`.
pub fn mellin_generic(
    f: impl Fn(f64) -> Complex64,
    s: Complex64,
    strip: (f64, f64),
    acc: Accuracy,
) -> Result<EvalOutcome> {
    if !(s.re > strip.0 && s.re < strip.1) {
        return Err(Error::Domain(format!(
            "requires Re(s) inside the declared strip ({}, {}), got {}",
            strip.0, strip.1, s.re
        )));
    }
    let sm1 = s - 1.0;
    let head = quad::de_finite(
        &mut |n| {
            let x = n.from_left;
            let v = f(x);
            if v.re.is_nan() || v.im.is_nan() {
                return v;
            }
            (sm1 * x.ln()).exp() * v
        },
        0.0,
        1.0,
        acc,
    )?;
    let tail = quad::de_semi_infinite(
        &mut |u| {
            let x = 1.0 + u;
            let v = (sm1 * x.ln()).exp() * f(x);
            // deep in the tail a decayed f times an overflowed power is a
            // vanished contribution, same convention as the public API
            if (v.re.is_nan() || v.im.is_nan()) && x > 1e50 {
                return Complex64::new(0.0, 0.0);
            }
            v
        },
        acc,
    )?;
    Ok(EvalOutcome {
        value: head.value + tail.value,
        abs_err_estimate: head.abs_err_estimate + tail.abs_err_estimate,
        converged: head.converged && tail.converged,
        underflow_scaled: false,
    })
}

/// Convenience: the Mellin pair residual `|lhs - rhs| / |rhs|`.
pub fn mellin_residual(q: &MellinQuery, ctl: &TransformControls) -> Result<f64> {
    let lhs = mellin_lhs(q, ctl)?;
    let rhs = mellin_rhs(q, ctl.outer)?;
    Ok((lhs.value - rhs.value).norm() / rhs.value.norm().max(1e-300))
}

/// Convenience: the Laplace pair residual `|lhs - rhs| / |rhs|`.
pub fn laplace_residual(q: &LaplaceQuery, ctl: &TransformControls) -> Result<f64> {
    let lhs = laplace_lhs(q, ctl)?;
    let rhs = laplace_rhs(q, ctl.outer)?;
    Ok((lhs.value - rhs.value).norm() / rhs.value.norm().max(1e-300))
}
