//! Evaluation result carrying a value together with convergence metadata.

use num_complex::Complex64;

/// Complex double-precision scalar used for all arguments and results.
pub type ComplexScalar = Complex64;

/// A computed value plus an absolute-error estimate and convergence flags.
///
/// When `converged` is false the value is still the best estimate produced
/// before the iteration cap, and `abs_err_estimate` holds the last
/// inter-level (or last-term) difference rather than zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOutcome {
    pub value: ComplexScalar,
    pub abs_err_estimate: f64,
    pub converged: bool,
    /// Set when a mathematically positive result underflowed to zero
    /// (e.g. the unscaled Bessel kernel at large argument).
    pub underflow_scaled: bool,
}

impl EvalOutcome {
    pub fn exact(value: ComplexScalar) -> Self {
        Self {
            value,
            abs_err_estimate: 0.0,
            converged: true,
            underflow_scaled: false,
        }
    }

    pub fn real(&self) -> f64 {
        self.value.re
    }

    /// Relative error estimate against the value's own magnitude.
    pub fn rel_err_estimate(&self) -> f64 {
        let m = self.value.norm();
        if m > 0.0 {
            self.abs_err_estimate / m
        } else {
            self.abs_err_estimate
        }
    }

    pub(crate) fn map(mut self, f: impl FnOnce(ComplexScalar) -> ComplexScalar) -> Self {
        let old = self.value.norm();
        self.value = f(self.value);
        let new = self.value.norm();
        if old > 0.0 {
            self.abs_err_estimate *= new / old;
        }
        self
    }
}

/// A value represented as `mantissa * exp(ln_scale)`.
///
/// Intermediate form for quantities whose magnitude can leave the binary64
/// range (large-argument Whittaker evaluations, unscaled Bessel kernels).
#[derive(Debug, Clone, Copy)]
pub struct ScaledOutcome {
    pub mantissa: ComplexScalar,
    pub ln_scale: f64,
    pub abs_err_mantissa: f64,
    pub converged: bool,
}

impl ScaledOutcome {
    /// Natural log of the absolute value.
    pub fn ln_abs(&self) -> f64 {
        self.ln_scale + self.mantissa.norm().ln()
    }

    /// Collapse to a plain outcome, reporting overflow as an error and
    /// flagging underflow-to-zero.
    pub fn into_outcome(self) -> crate::Result<EvalOutcome> {
        let mag = self.mantissa.norm();
        if mag == 0.0 {
            return Ok(EvalOutcome {
                value: ComplexScalar::new(0.0, 0.0),
                abs_err_estimate: 0.0,
                converged: self.converged,
                underflow_scaled: false,
            });
        }
        let ln_abs = self.ln_abs();
        if ln_abs > 700.0 {
            return Err(crate::Error::Overflow(format!(
                "result magnitude exp({ln_abs:.1}) exceeds binary64 range"
            )));
        }
        let scale = self.ln_scale.exp();
        let value = self.mantissa * scale;
        let underflow = value.norm() == 0.0;
        Ok(EvalOutcome {
            value,
            abs_err_estimate: self.abs_err_mantissa * scale,
            converged: self.converged,
            underflow_scaled: underflow,
        })
    }
}
