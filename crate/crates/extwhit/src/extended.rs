//! The p-extended and (p,nu)-extended Beta, confluent and Gauss
//! hypergeometric functions.
//!
//! Every function here is a Beta-type integral whose kernel acquires either
//! an exponential factor `exp(-p/(t(1-t)))` (the p-extension) or a modified
//! Bessel factor `sqrt(2p/pi) K_{nu+1/2}(p/(t(1-t)))` (the (p,nu)-extension),
//! both of which vanish with all derivatives at the endpoints for
//! `Re(p) > 0`. Integrands are assembled in log space and exponentiated
//! once, so the kernel decay and the algebraic endpoint factors can never
//! produce a spurious `0 * inf`.
//!
//! The hypergeometric functions carry two routes: the single-quadrature
//! integral representation (the default) and the kernel-weighted power
//! series, kept for cross-verification.

use num_complex::Complex64;

use crate::bessel::{self, BesselOrder};
use crate::error::{Error, Result};
use crate::outcome::{EvalOutcome, ScaledOutcome};
use crate::quad::{self, Accuracy, Node};
use crate::special::{self, ln_beta};

/// The extension pair (p, nu): `Re(p) > 0` with `nu >= 0`, or exactly
/// `p = nu = 0` for the classical reductions.
///
/// `p = 0` with `nu > 0` is rejected: the defining integral has no limit
/// there (the normalisation `sqrt(2p/pi)` vanishes while the kernel blows
/// up at a different rate).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtParams {
    pub p: Complex64,
    pub nu: f64,
}

impl ExtParams {
    pub fn new(p: Complex64, nu: f64) -> Result<Self> {
        if !(nu >= 0.0) {
            return Err(Error::Domain(format!("requires nu >= 0, got {nu}")));
        }
        if p.re == 0.0 && p.im == 0.0 {
            if nu != 0.0 {
                return Err(Error::Domain(format!(
                    "p = 0 requires nu = 0; p = 0 with nu = {nu} has no defined limit"
                )));
            }
        } else if !(p.re > 0.0) {
            return Err(Error::Domain(format!(
                "requires Re(p) > 0 (or p = 0 exactly), got p = {p}"
            )));
        }
        Ok(Self { p, nu })
    }

    pub fn real(p: f64, nu: f64) -> Result<Self> {
        Self::new(Complex64::new(p, 0.0), nu)
    }

    /// True for the exact classical point p = nu = 0.
    pub fn is_classical(&self) -> bool {
        self.p.re == 0.0 && self.p.im == 0.0
    }
}

/// Evaluation route for the extended hypergeometric functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Single quadrature of the integral representation (default).
    Integral,
    /// Kernel-weighted power series; each term is a fresh extended-Beta
    /// quadrature. Kept as an independent cross-check route.
    Series,
}

// ---------------------------------------------------------------------------
// Kernel dispatch
// ---------------------------------------------------------------------------

/// Endpoint kernel of the extended integrals, in log space.
pub(crate) enum Kernel {
    /// p = 0: classical integrand, weight 1.
    Classical,
    /// `exp(-p/(t(1-t)))` with Re(p) > 0 (p may be complex).
    Exponential { p: Complex64 },
    /// `K_{nu+1/2}(p/(t(1-t)))` for real p > 0, any real nu >= 0.
    RealOrder { order: BesselOrder, p: f64 },
    /// Complex p with integer nu: the exact half-integer closed form is the
    /// only complex-argument kernel supported.
    ComplexHalfInteger { n: u32, p: Complex64 },
}

impl Kernel {
    /// Kernel for the (p,nu)-extended (Bessel-weighted) integrals.
    pub(crate) fn bessel(params: &ExtParams) -> Result<Self> {
        if params.is_classical() {
            return Ok(Kernel::Classical);
        }
        if params.p.im == 0.0 {
            Ok(Kernel::RealOrder {
                order: BesselOrder::from_nu(params.nu)?,
                p: params.p.re,
            })
        } else {
            let n = params.nu.round();
            if (params.nu - n).abs() <= 1e-9 && n >= 0.0 {
                Ok(Kernel::ComplexHalfInteger { n: n as u32, p: params.p })
            } else {
                Err(Error::Capability(format!(
                    "complex p is supported only for integer nu (half-integer kernel order); got nu = {}",
                    params.nu
                )))
            }
        }
    }

    /// Kernel for the p-extended (exponential-weight) integrals.
    pub(crate) fn exponential(p: Complex64) -> Result<Self> {
        if p.re == 0.0 && p.im == 0.0 {
            Ok(Kernel::Classical)
        } else if p.re > 0.0 {
            Ok(Kernel::Exponential { p })
        } else {
            Err(Error::Domain(format!(
                "requires Re(p) > 0 or p = 0, got p = {p}"
            )))
        }
    }

    /// Shift added to both endpoint exponents by the Bessel normalisation
    /// (`t^(x-3/2)` instead of `t^(x-1)`).
    pub(crate) fn exponent_shift(&self) -> f64 {
        match self {
            Kernel::RealOrder { .. } | Kernel::ComplexHalfInteger { .. } => -0.5,
            _ => 0.0,
        }
    }

    /// log of the constant normalisation in front of the integral.
    pub(crate) fn ln_norm(&self) -> Complex64 {
        match self {
            Kernel::RealOrder { p, .. } => {
                Complex64::new(0.5 * (2.0 * p / std::f64::consts::PI).ln(), 0.0)
            }
            Kernel::ComplexHalfInteger { p, .. } => {
                0.5 * special::ln_principal(2.0 * p / std::f64::consts::PI)
            }
            _ => Complex64::new(0.0, 0.0),
        }
    }

    /// log of the pointwise kernel weight at `tt = t(1-t)` (scaled form:
    /// the Bessel kernels are `ln Khat(w) - w`). `None` means the weight has
    /// decayed beyond binary64 reach and the abscissa contributes nothing.
    pub(crate) fn ln_weight(&self, tt: f64) -> Option<Complex64> {
        const NAN: Complex64 = Complex64::new(f64::NAN, 0.0);
        match self {
            Kernel::Classical => Some(Complex64::new(0.0, 0.0)),
            Kernel::Exponential { p } => {
                let inv = 1.0 / tt;
                if !inv.is_finite() || p.re * inv > 1e300 {
                    return None;
                }
                Some(-(p * inv))
            }
            Kernel::RealOrder { order, p } => {
                let w = p / tt;
                if !w.is_finite() || w > 1e300 {
                    return None;
                }
                match bessel::k_scaled_raw(order, w) {
                    Ok(k) => Some(Complex64::new(k.ln() - w, 0.0)),
                    Err(_) => Some(NAN),
                }
            }
            Kernel::ComplexHalfInteger { n, p } => {
                let inv = 1.0 / tt;
                if !inv.is_finite() || p.re * inv > 1e300 {
                    return None;
                }
                let w = p * inv;
                match bessel::k_half_integer_scaled_complex(*n, w) {
                    Ok(k) => Some(k.ln() - w),
                    Err(_) => Some(NAN),
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Log-space integrand assembly
// ---------------------------------------------------------------------------

/// max of the real exponent over the double-exponential probe grid plus a
/// golden-section refinement of the dominant (exponential) part; used to
/// factor the integrand's magnitude out before quadrature.
pub(crate) fn scan_shift(
    e_full: impl Fn(Node) -> f64,
    a: f64,
    b: f64,
    e_dom: impl Fn(f64) -> f64,
) -> f64 {
    let len = b - a;
    // golden-section maximum of the dominant exponent
    let inv_phi = 0.618_033_988_749_894_8;
    let (mut lo, mut hi) = (a + 1e-12 * len, b - 1e-12 * len);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (e_dom(x1), e_dom(x2));
    for _ in 0..80 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = e_dom(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = e_dom(x1);
        }
    }
    let t_star = 0.5 * (lo + hi);
    let mut best = e_full(Node {
        t: t_star,
        from_left: t_star - a,
        from_right: b - t_star,
    });
    for node in quad::probe_nodes(a, b) {
        let e = e_full(node);
        if e > best {
            best = e;
        }
    }
    if best.is_finite() {
        best
    } else {
        0.0
    }
}

pub(crate) struct BetaishIntegrand<'k> {
    /// exponent on the distance from the left endpoint
    pub e_left: Complex64,
    /// exponent on the distance from the right endpoint
    pub e_right: Complex64,
    /// linear exponent coefficient: contributes `lin * (t - a)`
    pub lin: Complex64,
    pub kernel: &'k Kernel,
    /// kernel argument is `p * tt_scale / (dl * dr)`
    pub tt_scale: f64,
    pub shift: f64,
}

impl BetaishIntegrand<'_> {
    pub(crate) fn ln_parts(&self, node: Node) -> Option<Complex64> {
        let tt = (node.from_left / self.tt_scale) * node.from_right;
        let lnw = self.kernel.ln_weight(tt)?;
        Some(
            self.e_left * node.from_left.ln()
                + self.e_right * node.from_right.ln()
                + self.lin * node.from_left
                + lnw,
        )
    }

    pub(crate) fn eval(&self, node: Node) -> Complex64 {
        match self.ln_parts(node) {
            Some(ln) => (ln - self.shift).exp(),
            None => Complex64::new(0.0, 0.0),
        }
    }

    pub(crate) fn re_exponent(&self, node: Node) -> f64 {
        match self.ln_parts(node) {
            Some(ln) => ln.re,
            None => f64::NEG_INFINITY,
        }
    }
}

// ---------------------------------------------------------------------------
// Extended Beta functions
// ---------------------------------------------------------------------------

/// p-extended Beta function: the Beta integral with kernel
/// `exp(-p/(t(1-t)))`. At p = 0 this is the classical Beta integral and
/// requires `Re x > 0, Re y > 0`.
pub fn ext_beta_p(
    x: Complex64,
    y: Complex64,
    p: Complex64,
    acc: Accuracy,
) -> Result<EvalOutcome> {
    let kernel = Kernel::exponential(p)?;
    if matches!(kernel, Kernel::Classical) && !(x.re > 0.0 && y.re > 0.0) {
        return Err(Error::Domain(format!(
            "p = 0 requires Re(x) > 0 and Re(y) > 0, got x = {x}, y = {y}"
        )));
    }
    let ig = BetaishIntegrand {
        e_left: x - 1.0,
        e_right: y - 1.0,
        lin: Complex64::new(0.0, 0.0),
        kernel: &kernel,
        tt_scale: 1.0,
        shift: 0.0,
    };
    quad::de_finite(&mut |n| ig.eval(n), 0.0, 1.0, acc)
}

/// (p,nu)-extended Beta function:
/// `sqrt(2p/pi) * int t^(x-3/2) (1-t)^(y-3/2) K_{nu+1/2}(p/(t(1-t))) dt`.
///
/// Complex p is supported for integer nu only (the kernel then has an exact
/// closed form); p = 0 falls back to the classical Beta integral.
pub fn ext_beta_pnu(
    x: Complex64,
    y: Complex64,
    params: &ExtParams,
    acc: Accuracy,
) -> Result<EvalOutcome> {
    ext_beta_pnu_scaled(x, y, params, acc)?.into_outcome()
}

pub(crate) fn ext_beta_pnu_scaled(
    x: Complex64,
    y: Complex64,
    params: &ExtParams,
    acc: Accuracy,
) -> Result<ScaledOutcome> {
    let kernel = Kernel::bessel(params)?;
    if matches!(kernel, Kernel::Classical) && !(x.re > 0.0 && y.re > 0.0) {
        return Err(Error::Domain(format!(
            "p = 0 requires Re(x) > 0 and Re(y) > 0, got x = {x}, y = {y}"
        )));
    }
    let sh = kernel.exponent_shift();
    let ig = BetaishIntegrand {
        e_left: x - 1.0 + sh,
        e_right: y - 1.0 + sh,
        lin: Complex64::new(0.0, 0.0),
        kernel: &kernel,
        tt_scale: 1.0,
        shift: 0.0,
    };
    // the kernel peaks at t = 1/2; the probe-grid scan finds it
    let shift = scan_shift(|n| ig.re_exponent(n), 0.0, 1.0, |_| 0.0);
    let ig = BetaishIntegrand { shift, ..ig };
    let out = quad::de_finite(&mut |n| ig.eval(n), 0.0, 1.0, acc)?;
    let ln_pre = kernel.ln_norm();
    Ok(ScaledOutcome {
        mantissa: out.value * Complex64::new(0.0, ln_pre.im).exp(),
        ln_scale: shift + ln_pre.re,
        abs_err_mantissa: out.abs_err_estimate,
        converged: out.converged,
    })
}

// ---------------------------------------------------------------------------
// Extended confluent hypergeometric function
// ---------------------------------------------------------------------------

fn require_euler(b: Complex64, cmb: Complex64) -> Result<()> {
    if !(cmb.re > 0.0 && b.re > 0.0) {
        return Err(Error::Domain(format!(
            "p = 0 requires Re(c) > Re(b) > 0, got b = {b}, c - b = {cmb}"
        )));
    }
    Ok(())
}

/// p-extended confluent hypergeometric function: the Euler-type integral
/// with kernel `exp(zt - p/(t(1-t)))`, normalised by `B(b, c-b)`.
pub fn ext_chf_p(
    b: Complex64,
    c: Complex64,
    z: Complex64,
    p: Complex64,
    acc: Accuracy,
) -> Result<EvalOutcome> {
    ext_chf_p_scaled(b, c, z, p, acc)?.into_outcome()
}

pub(crate) fn ext_chf_p_scaled(
    b: Complex64,
    c: Complex64,
    z: Complex64,
    p: Complex64,
    acc: Accuracy,
) -> Result<ScaledOutcome> {
    let kernel = Kernel::exponential(p)?;
    euler_integral_scaled(b, c, z, None, kernel, acc)
}

// the Gauss factor is algebraic, so the integrand carries no linear exponent
const NO_LIN: Complex64 = Complex64::new(0.0, 0.0);

/// (p,nu)-extended confluent hypergeometric function.
///
/// `Route::Integral` is the production route (one quadrature).
/// `Route::Series` sums `B_{p,nu}(b+n, c-b)/B(b,c-b) * z^n/n!`, one
/// extended-Beta quadrature per term.
pub fn ext_chf_pnu(
    b: Complex64,
    c: Complex64,
    z: Complex64,
    params: &ExtParams,
    route: Route,
    acc: Accuracy,
) -> Result<EvalOutcome> {
    match route {
        Route::Integral => chf_pnu_integral_scaled(b, c, z, params, acc)?.into_outcome(),
        Route::Series => {
            if params.is_classical() {
                require_euler(b, c - b)?;
                return special::chf_classic(b, c, z);
            }
            pnu_series(|_| Complex64::new(1.0, 0.0), b, c, z, params, acc)
        }
    }
}

pub(crate) fn chf_pnu_integral_scaled(
    b: Complex64,
    c: Complex64,
    z: Complex64,
    params: &ExtParams,
    acc: Accuracy,
) -> Result<ScaledOutcome> {
    let kernel = Kernel::bessel(params)?;
    euler_integral_scaled(b, c, z, None, kernel, acc)
}

/// Shared Euler-type integral
/// `1/B(b, c-b) * N * int t^(b-1+s) (1-t)^(c-b-1+s) e^{lin*t} (1-wz*t)^{-a} W dt`
/// where `W` is the kernel weight, `s` its exponent shift and `N` its
/// normalisation. The confluent family passes `lin = z`; the Gauss family
/// passes `lin = 0` with the `(a, wz)` pair supplying its algebraic factor.
fn euler_integral_scaled(
    b: Complex64,
    c: Complex64,
    lin: Complex64,
    gauss: Option<(Complex64, Complex64)>,
    kernel: Kernel,
    acc: Accuracy,
) -> Result<ScaledOutcome> {
    let cmb = c - b;
    let ln_b = ln_beta(b, cmb)?;
    if matches!(kernel, Kernel::Classical) {
        require_euler(b, cmb)?;
    }
    let sh = kernel.exponent_shift();
    let e_left = b - 1.0 + sh;
    let e_right = cmb - 1.0 + sh;

    let gauss_ln = |node: Node| -> Complex64 {
        match gauss {
            None => Complex64::new(0.0, 0.0),
            Some((a, wz)) => {
                // (1 - wz t)^(-a); at wz = 1 the base is exactly the
                // distance to the right endpoint
                let base = if wz.re == 1.0 && wz.im == 0.0 {
                    Complex64::new(node.from_right, 0.0)
                } else {
                    Complex64::new(1.0, 0.0) - wz * node.t
                };
                -a * special::ln_principal(base)
            }
        }
    };

    let ig = BetaishIntegrand {
        e_left,
        e_right,
        lin,
        kernel: &kernel,
        tt_scale: 1.0,
        shift: 0.0,
    };
    let p_re = match &kernel {
        Kernel::Exponential { p } => p.re,
        Kernel::RealOrder { p, .. } => *p,
        Kernel::ComplexHalfInteger { p, .. } => p.re,
        Kernel::Classical => 0.0,
    };
    let e_dom = |t: f64| {
        let tt = t * (1.0 - t);
        lin.re * t - if p_re > 0.0 { p_re / tt } else { 0.0 }
    };
    // the kernel's essential decay dominates the algebraic Gauss factor, so
    // a dead kernel zeroes the node before the Gauss log is ever added
    let ln_full = |n: Node| ig.ln_parts(n).map(|ln| ln + gauss_ln(n));
    let e_full = |n: Node| ln_full(n).map_or(f64::NEG_INFINITY, |ln| ln.re);
    let shift = scan_shift(e_full, 0.0, 1.0, e_dom);

    let out = quad::de_finite(
        &mut |n| match ln_full(n) {
            Some(ln) => (ln - shift).exp(),
            None => Complex64::new(0.0, 0.0),
        },
        0.0,
        1.0,
        acc,
    )?;
    let ln_pre = kernel.ln_norm() - ln_b;
    Ok(ScaledOutcome {
        mantissa: out.value * Complex64::new(0.0, ln_pre.im).exp(),
        ln_scale: shift + ln_pre.re,
        abs_err_mantissa: out.abs_err_estimate,
        converged: out.converged,
    })
}

/// n-th derivative of the extended confluent hypergeometric function in z:
/// `(b)_n / (c)_n * Phi_{p,nu}(b+n; c+n; z)`.
pub fn ext_chf_pnu_deriv(
    b: Complex64,
    c: Complex64,
    z: Complex64,
    params: &ExtParams,
    n: u32,
    acc: Accuracy,
) -> Result<EvalOutcome> {
    if special::is_nonpositive_integer(c + n as f64, 1e-12) {
        return Err(Error::GammaPole(format!(
            "shifted lower parameter c + n = {} is a nonpositive integer",
            c + n as f64
        )));
    }
    let ratio = special::pochhammer(b, n) / special::pochhammer(c, n);
    let base = ext_chf_pnu(b + n as f64, c + n as f64, z, params, Route::Integral, acc)?;
    Ok(base.map(|v| v * ratio))
}

// ---------------------------------------------------------------------------
// Extended Gauss hypergeometric function
// ---------------------------------------------------------------------------

/// (p,nu)-extended Gauss hypergeometric function.
///
/// The integral route requires `|arg(1-z)| < pi`; `z = 1` is admitted for
/// `Re(p) > 0`, where the kernel decay keeps the integral convergent. The
/// series route additionally requires `|z| < 1`.
pub fn ext_gauss_pnu(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z: Complex64,
    params: &ExtParams,
    route: Route,
    acc: Accuracy,
) -> Result<EvalOutcome> {
    let one_mz = Complex64::new(1.0, 0.0) - z;
    let at_one = one_mz.re == 0.0 && one_mz.im == 0.0;
    if one_mz.im == 0.0 && one_mz.re < 0.0 {
        return Err(Error::Domain(format!(
            "requires |arg(1-z)| < pi (z must avoid the real ray z >= 1), got z = {z}"
        )));
    }
    if at_one && params.is_classical() {
        return Err(Error::Domain(
            "z = 1 requires Re(p) > 0 (classical integral diverges there)".into(),
        ));
    }
    match route {
        Route::Integral => {
            let kernel = Kernel::bessel(params)?;
            euler_integral_scaled(b, c, NO_LIN, Some((a, z)), kernel, acc)?.into_outcome()
        }
        Route::Series => {
            if z.norm() >= 1.0 {
                return Err(Error::Domain(format!(
                    "series route requires |z| < 1, got |z| = {}",
                    z.norm()
                )));
            }
            if params.is_classical() {
                require_euler(b, c - b)?;
                return special::gauss_classic(a, b, c, z);
            }
            pnu_series(|n| a + n as f64, b, c, z, params, acc)
        }
    }
}

// ---------------------------------------------------------------------------
// Series route shared by Phi_{p,nu} and F_{p,nu}
// ---------------------------------------------------------------------------

const PNU_SERIES_TOL: f64 = 1e-14;
const PNU_SERIES_CAP: usize = 200;
const PNU_STAGNATION_RUN: u32 = 3;

/// `sum_n prod_{m<n} extra(m) * B_{p,nu}(b+n, c-b)/B(b,c-b) * z^n/n!`;
/// `extra` is 1 for the confluent series and `(a)_n`'s ratio for Gauss.
fn pnu_series(
    extra: impl Fn(usize) -> Complex64,
    b: Complex64,
    c: Complex64,
    z: Complex64,
    params: &ExtParams,
    acc: Accuracy,
) -> Result<EvalOutcome> {
    let cmb = c - b;
    let ln_b = ln_beta(b, cmb)?;
    let norm = (-ln_b).exp();
    let mut coeff = Complex64::new(1.0, 0.0); // extra-prod * z^n / n!
    let mut sum = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut all_converged = true;
    let mut small_run = 0u32;
    let mut last = f64::MAX;
    let mut converged = false;
    for n in 0..PNU_SERIES_CAP {
        let bterm = ext_beta_pnu(b + n as f64, cmb, params, acc)?;
        all_converged &= bterm.converged;
        let term = coeff * bterm.value * norm;
        sum += term;
        err += bterm.abs_err_estimate * coeff.norm() * norm.norm();
        last = term.norm();
        if last < PNU_SERIES_TOL * sum.norm() {
            small_run += 1;
            if small_run >= PNU_STAGNATION_RUN {
                converged = true;
                break;
            }
        } else {
            small_run = 0;
        }
        coeff *= extra(n) * z / (n as f64 + 1.0);
    }
    Ok(EvalOutcome {
        value: sum,
        abs_err_estimate: err + last,
        converged: converged && all_converged,
        underflow_scaled: false,
    })
}
