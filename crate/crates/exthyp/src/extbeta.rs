//! Extended gamma and beta functions with a regularization kernel.
//!
//! B_{b,d}(α, β) = ∫₀¹ t^{α−1}(1−t)^{β−1} Θ(−b/t − d/(1−t)) dt and
//! Γ_b(z) = ∫₀^∞ t^{z−1} Θ(−t − b/t) dt. Integrands are formed in log space
//! so that huge powers and vanishing kernel factors never meet as inf·0.

use num_complex::Complex64;

use crate::corefn::{beta_classical, beta_general};
use crate::error::{Error, EvalResult, Method, Result};
use crate::kernel::Kernel;
use crate::quadrature::{integrate_unit_batch, try_integrate_halfline, try_integrate_unit, QuadResult, SampledUnit};

/// The regularization pair (b, d); both nonnegative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegPair {
    pub b: f64,
    pub d: f64,
}

impl RegPair {
    pub const ZERO: RegPair = RegPair { b: 0.0, d: 0.0 };

    pub fn new(b: f64, d: f64) -> Result<Self> {
        if !(b >= 0.0 && d >= 0.0 && b.is_finite() && d.is_finite()) {
            return Err(Error::domain(format!(
                "regularization pair must be >= 0 (got {b}, {d})"
            )));
        }
        Ok(RegPair { b, d })
    }

    pub fn swapped(self) -> Self {
        RegPair { b: self.d, d: self.b }
    }

    pub fn is_zero(&self) -> bool {
        self.b == 0.0 && self.d == 0.0
    }

    /// The same pair with both entries multiplied by `s`.
    pub fn scaled(self, s: f64) -> Self {
        RegPair {
            b: self.b * s,
            d: self.d * s,
        }
    }
}

/// Complex value with error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexEval {
    pub value: Complex64,
    pub abs_err: f64,
    pub terms_or_nodes: usize,
    pub converged: bool,
    pub method: Method,
}

/// Checks that t^{e−1}·Θ(−r/t) is integrable at t → 0 for the given kernel.
fn endpoint_ok(kernel: &Kernel, exponent: f64, reg: f64) -> bool {
    if reg == 0.0 {
        return exponent > 0.0;
    }
    match kernel.algebraic_decay() {
        None => true,
        Some(order) => exponent + order > 0.0,
    }
}

/// Validates first/second arguments of an extended beta against the pair.
pub fn check_beta_args(kernel: &Kernel, alpha: f64, beta: f64, reg: RegPair) -> Result<()> {
    if !alpha.is_finite() || !beta.is_finite() {
        return Err(Error::domain("non-finite beta argument"));
    }
    if !endpoint_ok(kernel, alpha, reg.b) {
        return Err(Error::domain(format!(
            "extended beta diverges at t = 0 for alpha = {alpha} with b = {}",
            reg.b
        )));
    }
    if !endpoint_ok(kernel, beta, reg.d) {
        return Err(Error::domain(format!(
            "extended beta diverges at t = 1 for beta = {beta} with d = {}",
            reg.d
        )));
    }
    Ok(())
}

/// ln of the kernel factor Θ(−b/t − d/(1−t)) with its sign.
pub(crate) fn ln_kernel_factor(kernel: &Kernel, reg: RegPair, t: f64, tc: f64) -> Result<(f64, f64)> {
    if reg.is_zero() {
        return Ok((0.0, 1.0));
    }
    let mut arg = 0.0;
    if reg.b > 0.0 {
        arg -= reg.b / t;
    }
    if reg.d > 0.0 {
        arg -= reg.d / tc;
    }
    kernel.ln_theta(arg)
}

/// t^{a−1}(1−t)^{c−1}Θ(−b/t − d/(1−t)) evaluated through logarithms.
pub(crate) fn beta_weight(kernel: &Kernel, reg: RegPair, a: f64, c: f64, t: f64, tc: f64) -> Result<f64> {
    let (lk, sk) = ln_kernel_factor(kernel, reg, t, tc)?;
    if lk == f64::NEG_INFINITY {
        return Ok(0.0);
    }
    let ln = (a - 1.0) * t.ln() + (c - 1.0) * tc.ln() + lk;
    Ok(sk * ln.exp())
}

fn quad_to_eval(q: QuadResult) -> EvalResult {
    EvalResult {
        value: q.value,
        abs_err: q.abs_err,
        terms_or_nodes: q.nodes_used,
        converged: q.converged,
        method: Method::Quadrature,
    }
}

/// Extended gamma Γ_b(z) = ∫₀^∞ t^{z−1}Θ(−t − b/t) dt.
pub fn ext_gamma(kernel: &Kernel, z: f64, b: f64, tol: f64) -> Result<EvalResult> {
    if !(b >= 0.0) {
        return Err(Error::domain(format!("b must be >= 0 (got {b})")));
    }
    if !endpoint_ok(kernel, z, b) {
        return Err(Error::domain(format!(
            "extended gamma diverges at t = 0 for z = {z}, b = {b}"
        )));
    }
    if let Some(order) = kernel.algebraic_decay() {
        if z >= order {
            return Err(Error::domain(format!(
                "extended gamma diverges at infinity: z = {z} must be below the kernel decay order {order}"
            )));
        }
    }
    let q = try_integrate_halfline(
        |t| {
            let (lk, sk) = kernel.ln_theta(-t - if b > 0.0 { b / t } else { 0.0 })?;
            if lk == f64::NEG_INFINITY {
                return Ok(0.0);
            }
            Ok(sk * ((z - 1.0) * t.ln() + lk).exp())
        },
        tol,
    )?;
    Ok(quad_to_eval(q))
}

/// Extended beta B_{b,d}(α, β).
pub fn ext_beta(kernel: &Kernel, alpha: f64, beta: f64, reg: RegPair, tol: f64) -> Result<EvalResult> {
    check_beta_args(kernel, alpha, beta, reg)?;
    let q = try_integrate_unit(|t, tc| beta_weight(kernel, reg, alpha, beta, t, tc), tol)?;
    Ok(quad_to_eval(q))
}

/// B_{b,d}(α₀ + step·m, β) for m in `first..first + count`, sharing one grid.
pub fn ext_beta_shifted_batch(
    kernel: &Kernel,
    alpha0: f64,
    step: f64,
    first: usize,
    count: usize,
    beta: f64,
    reg: RegPair,
    tol: f64,
) -> Result<Vec<EvalResult>> {
    if !(step >= 0.0) {
        return Err(Error::domain(format!("shift stride must be >= 0 (got {step})")));
    }
    let start = alpha0 + step * first as f64;
    check_beta_args(kernel, start, beta, reg)?;
    let out = integrate_unit_batch(count, step, |t, tc| beta_weight(kernel, reg, start, beta, t, tc), tol)?;
    Ok(out.into_iter().map(quad_to_eval).collect())
}

/// Extended beta with a complex first argument.
pub fn ext_beta_complex(kernel: &Kernel, alpha: Complex64, beta: f64, reg: RegPair, tol: f64) -> Result<ComplexEval> {
    let mut fam = ComplexShiftBeta::new(*kernel, alpha.re, beta, reg)?;
    fam.eval(Complex64::new(0.0, -alpha.im), tol)
}

/// B_{b,d}(α − s, β) as a function of complex s, reusing kernel samples
/// across evaluations.
#[derive(Debug, Clone)]
pub struct ComplexShiftBeta {
    kernel: Kernel,
    alpha: f64,
    beta: f64,
    reg: RegPair,
    samples: SampledUnit,
}

impl ComplexShiftBeta {
    pub fn new(kernel: Kernel, alpha: f64, beta: f64, reg: RegPair) -> Result<Self> {
        if !endpoint_ok(&kernel, beta, reg.d) {
            return Err(Error::domain(format!(
                "extended beta diverges at t = 1 for beta = {beta}"
            )));
        }
        Ok(ComplexShiftBeta {
            kernel,
            alpha,
            beta,
            reg,
            samples: SampledUnit::new(),
        })
    }

    pub fn eval(&mut self, s: Complex64, tol: f64) -> Result<ComplexEval> {
        if !endpoint_ok(&self.kernel, self.alpha - s.re, self.reg.b) {
            return Err(Error::domain(format!(
                "extended beta diverges at t = 0 for first argument {}",
                self.alpha - s.re
            )));
        }
        let (kernel, reg, alpha, beta) = (self.kernel, self.reg, self.alpha, self.beta);
        let (value, abs_err, nodes, converged) = self.samples.integrate(
            |t, tc| beta_weight(&kernel, reg, alpha, beta, t, tc),
            |t, _, g| (-s * t.ln()).exp() * g,
            tol,
        )?;
        Ok(ComplexEval {
            value,
            abs_err,
            terms_or_nodes: nodes,
            converged,
            method: Method::Quadrature,
        })
    }
}

/// Classical normalizer B(α, β); `strict` requires positive arguments.
pub(crate) fn beta_norm(alpha: f64, beta: f64, strict: bool) -> Result<f64> {
    if strict {
        beta_classical(alpha, beta)
    } else {
        let v = beta_general(alpha, beta)?;
        if v == 0.0 || !v.is_finite() {
            return Err(Error::domain(format!("beta normalizer vanishes at ({alpha}, {beta})")));
        }
        Ok(v)
    }
}
