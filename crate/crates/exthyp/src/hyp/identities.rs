//! Derivatives, transformations, recurrences, summation and the extended
//! fractional derivative of extended Gauss functions.

use super::{eval_pfq, gauss_auto, ExtSeries, MethodChoice, PfqSpec};
use crate::corefn::{binomial, classical_pfq, gamma, ln_gamma_real, pochhammer, ClassicalPfq};
use crate::error::{Error, EvalResult, Method, Result};
use crate::extbeta::{ln_kernel_factor, RegPair};
use crate::kernel::Kernel;
use crate::quadrature::try_integrate_unit;
use crate::variant::{Sides, Variant};

/// Parameters of an extended Gauss function without its argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussParams {
    pub kernel: Kernel,
    pub a1: f64,
    pub a2: f64,
    pub b1: f64,
    pub reg: RegPair,
}

impl GaussParams {
    pub fn new(kernel: Kernel, a1: f64, a2: f64, b1: f64, reg: RegPair) -> Self {
        GaussParams {
            kernel,
            a1,
            a2,
            b1,
            reg,
        }
    }

    fn with(&self, a1: f64, a2: f64, b1: f64) -> Self {
        GaussParams { a1, a2, b1, ..*self }
    }

    pub fn spec(&self) -> Result<PfqSpec> {
        PfqSpec::gauss(self.kernel, self.a1, self.a2, self.b1, self.reg)
    }

    /// Value at z with automatic path choice; fails unless converged.
    pub fn eval(&self, z: f64, tol: f64) -> Result<EvalResult> {
        gauss_auto(self.kernel, self.a1, self.a2, self.b1, z, self.reg, true, tol)
    }

    fn eval_relaxed(&self, z: f64, tol: f64) -> Result<EvalResult> {
        gauss_auto(self.kernel, self.a1, self.a2, self.b1, z, self.reg, false, tol)
    }
}

/// n-th derivative in z via the parameter-shift formula (unit strides only).
pub fn derivative(spec: &PfqSpec, z: f64, n: u32, tol: f64) -> Result<EvalResult> {
    if spec.upper.iter().any(|&(_, k)| k != 1) {
        return Err(Error::domain("derivative formula needs unit strides"));
    }
    let shifted = spec.shifted(n)?;
    let mut factor = 1.0;
    for &(a, _) in &spec.upper {
        factor *= pochhammer(a, n);
    }
    for &b in &spec.lower {
        factor /= pochhammer(b, n);
    }
    let r = eval_pfq(&shifted, z, MethodChoice::Auto, tol)?.require_converged()?;
    Ok(r.scaled(factor))
}

/// Right side of the weighted derivative identity
/// dⁿ/dzⁿ [z^{a1+n−1} F(a1, a2; b1; z)] = (a1)_n z^{a1−1} F(a1 + s, a2; b1; z),
/// where s = n for `Proof` and s = 0 for `Printed`.
pub fn derivative_weighted(p: &GaussParams, z: f64, n: u32, variant: Variant, tol: f64) -> Result<EvalResult> {
    if !(p.a1 > 0.0 && z > 0.0) {
        return Err(Error::domain("weighted derivative needs a1 > 0 and z > 0"));
    }
    let shift = match variant {
        Variant::Proof => n as f64,
        Variant::Printed => 0.0,
        v => {
            return Err(Error::domain(format!(
                "variant {v} not defined for the weighted derivative"
            )))
        }
    };
    let f = p.with(p.a1 + shift, p.a2, p.b1).eval(z, tol)?;
    Ok(f.scaled(pochhammer(p.a1, n) * z.powf(p.a1 - 1.0)))
}

/// Left side of the weighted derivative identity, differentiated termwise:
/// Σ_m (a1)_m c_m (a1 + m)_n z^{a1+m−1}/m!.
pub fn derivative_weighted_lhs(p: &GaussParams, z: f64, n: u32, tol: f64) -> Result<EvalResult> {
    if !(p.a1 > 0.0 && z > 0.0 && z < 1.0) {
        return Err(Error::domain("termwise differentiation needs a1 > 0 and 0 < z < 1"));
    }
    let mut series = ExtSeries::new(&p.spec()?, tol)?;
    let a1 = p.a1;
    let r = series.eval_general(z, Some(a1), |m| pochhammer(a1 + m as f64, n))?;
    Ok(r.scaled(z.powf(a1 - 1.0)))
}

/// Right side of the Pfaff transformation.
///
/// `Proof`: (1−z)^{−a1} F(a1, b1−a2; b1; z/(z−1); d, b).
/// `Printed`: (1−z)^{−a1} F(a1, b1−a2; a2; z/(1−z); d, b), evaluated with
/// relaxed parameter checks.
pub fn pfaff_transform(p: &GaussParams, z: f64, variant: Variant, tol: f64) -> Result<EvalResult> {
    if !(z < 1.0) {
        return Err(Error::domain(format!("Pfaff transformation needs z < 1 (got {z})")));
    }
    let pre = (1.0 - z).powf(-p.a1);
    let swapped = GaussParams {
        reg: p.reg.swapped(),
        ..*p
    };
    let r = match variant {
        Variant::Proof => swapped.with(p.a1, p.b1 - p.a2, p.b1).eval(z / (z - 1.0), tol)?,
        Variant::Printed => swapped.with(p.a1, p.b1 - p.a2, p.a2).eval_relaxed(z / (1.0 - z), tol)?,
        v => {
            return Err(Error::domain(format!(
                "variant {v} not defined for the Pfaff transformation"
            )))
        }
    };
    Ok(r.scaled(pre))
}

/// Parameter action of the proof-form Pfaff map on (a1, a2, b1, z, b, d).
pub fn pfaff_parameters(a1: f64, a2: f64, b1: f64, z: f64, reg: RegPair) -> (f64, f64, f64, f64, RegPair) {
    (a1, b1 - a2, b1, z / (z - 1.0), reg.swapped())
}

/// Right side of the Euler transformation (exponential kernel only).
///
/// `Printed`: e^{−(1−z)b−zd}(1−z)^{b1−a1−a2} F(b1−a1, b1−a2; b1; z; b/(1−z), (1−z)d).
/// `Corrected`: e^{−bz+dz/(1−z)}(1−z)^{b1−a1−a2} F(b1−a1, b1−a2; b1; z; d/(1−z), (1−z)b).
pub fn euler_transform(p: &GaussParams, z: f64, variant: Variant, tol: f64) -> Result<EvalResult> {
    if p.kernel != Kernel::Exponential {
        return Err(Error::KernelMismatch(
            "Euler transformation holds for the exponential kernel only".into(),
        ));
    }
    if !(z < 1.0) {
        return Err(Error::domain(format!("Euler transformation needs z < 1 (got {z})")));
    }
    let (b, d, w) = (p.reg.b, p.reg.d, 1.0 - z);
    let (expo, reg) = match variant {
        Variant::Printed => (-w * b - z * d, RegPair::new(b / w, w * d)?),
        Variant::Corrected => (-b * z + d * z / w, RegPair::new(d / w, w * b)?),
        v => {
            return Err(Error::domain(format!(
                "variant {v} not defined for the Euler transformation"
            )))
        }
    };
    let q = GaussParams {
        reg,
        ..p.with(p.b1 - p.a1, p.b1 - p.a2, p.b1)
    };
    let r = q.eval(z, tol)?;
    Ok(r.scaled(expo.exp() * w.powf(p.b1 - p.a1 - p.a2)))
}

/// Contiguous-shift recurrences of the extended Gauss function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Recurrence {
    /// a1 → a1 + n.
    A1Plus,
    /// a1 → a1 − n.
    A1Minus,
    /// b1 → b1 + n.
    B1Plus,
    /// a2 → a2 + n.
    A2Plus,
}

impl Recurrence {
    pub const ALL: [Recurrence; 4] = [
        Recurrence::A1Plus,
        Recurrence::A1Minus,
        Recurrence::B1Plus,
        Recurrence::A2Plus,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Recurrence::A1Plus => "a1-shift-up",
            Recurrence::A1Minus => "a1-shift-down",
            Recurrence::B1Plus => "b1-shift-up",
            Recurrence::A2Plus => "a2-shift-up",
        }
    }
}

/// Both sides of a shift recurrence. Only `A2Plus` distinguishes variants:
/// `Printed` sums i = 1..n, `Proof` sums i = 0..n.
pub fn recurrence_eval(
    which: Recurrence,
    p: &GaussParams,
    n: u32,
    z: f64,
    variant: Variant,
    tol: f64,
) -> Result<Sides> {
    if !(z.abs() < 1.0) {
        return Err(Error::domain(format!("recurrences need |z| < 1 (got {z})")));
    }
    let nf = n as f64;
    let mut rhs_err = 0.0;
    let mut acc = |r: EvalResult, c: f64| {
        rhs_err += r.abs_err * c.abs();
        r.value * c
    };
    let (lhs, rhs) = match which {
        Recurrence::A1Plus | Recurrence::A1Minus => {
            let up = which == Recurrence::A1Plus;
            let lhs = p
                .with(if up { p.a1 + nf } else { p.a1 - nf }, p.a2, p.b1)
                .eval(z, tol)?;
            let c = p.a2 * z / p.b1 * if up { 1.0 } else { -1.0 };
            let mut rhs = acc(p.eval(z, tol)?, 1.0);
            for k in 1..=n {
                let kf = k as f64;
                let a = if up { p.a1 + nf - kf + 1.0 } else { p.a1 - kf + 1.0 };
                rhs += acc(p.with(a, p.a2 + 1.0, p.b1 + 1.0).eval(z, tol)?, c);
            }
            (lhs, rhs)
        }
        Recurrence::B1Plus => {
            let lhs = p.with(p.a1, p.a2, p.b1 + nf).eval(z, tol)?;
            let pre = pochhammer(p.b1, n) / pochhammer(p.b1 - p.a2, n);
            let mut rhs = 0.0;
            for k in 0..=n {
                let c = pre * binomial(nf, k) * (-1f64).powi(k as i32) * pochhammer(p.a2, k) / pochhammer(p.b1, k);
                rhs += acc(p.with(p.a1, p.a2 + k as f64, p.b1 + k as f64).eval(z, tol)?, c);
            }
            (lhs, rhs)
        }
        Recurrence::A2Plus => {
            let first = match variant {
                Variant::Printed => 1,
                Variant::Proof => 0,
                v => return Err(Error::domain(format!("variant {v} not defined for this recurrence"))),
            };
            let lhs = p.with(p.a1, p.a2 + nf, p.b1).eval(z, tol)?;
            let w = p.b1 - p.a2;
            let pre = pochhammer(w, 2 * n) / (pochhammer(w, n) * pochhammer(p.a2, n));
            let mut rhs = 0.0;
            for i in first..=n {
                let s = (i + n) as f64;
                let c = pre * pochhammer(-nf, i) * pochhammer(p.a2, i + n)
                    / (pochhammer(p.b1, i + n) * gamma(i as f64 + 1.0)?);
                rhs += acc(p.with(p.a1, p.a2 + s, p.b1 + s).eval(z, tol)?, c);
            }
            (lhs, rhs)
        }
    };
    Ok(Sides::new(lhs.value, lhs.abs_err, rhs, rhs_err))
}

/// F[(a1,1),(a2,2); b1; 1] against its gamma-weighted value at −1:
/// Γ(b1)Γ(b1−a2−a1)/(Γ(b1−a2)Γ(b1−a1)) · F(a1, a2; b1−a1; −1).
pub fn quadratic_argument_summation(p: &GaussParams, tol: f64) -> Result<Sides> {
    let excess = p.b1 - p.a2 - p.a1;
    if !(p.b1 > p.a2 && p.a2 > 0.0 && excess > 0.0) {
        return Err(Error::domain("summation needs b1 > a2 > 0 and b1 − a2 − a1 > 0"));
    }
    let spec = PfqSpec::new(p.kernel, &[(p.a1, 1), (p.a2, 2)], &[p.b1], p.reg)?;
    let lhs = eval_pfq(&spec, 1.0, MethodChoice::Integral, tol)?.require_converged()?;
    let ln_pre = ln_gamma_real(p.b1)?.0 + ln_gamma_real(excess)?.0
        - ln_gamma_real(p.b1 - p.a2)?.0
        - ln_gamma_real(p.b1 - p.a1)?.0;
    let rhs = p.with(p.a1, p.a2, p.b1 - p.a1).eval(-1.0, tol)?.scaled(ln_pre.exp());
    Ok((lhs, rhs).into())
}

/// Classical counterpart: 3F2(a, b/2, (b+1)/2; c/2, (c+1)/2; 1) against
/// Γ(c)Γ(c−a−b)/(Γ(c−b)Γ(c−a)) · 2F1(a, b; c−a; −1).
pub fn classical_quadratic_summation(a: f64, b: f64, c: f64) -> Result<Sides> {
    if !(c - a - b > 0.0) {
        return Err(Error::domain("classical summation needs c − a − b > 0"));
    }
    let lhs = classical_pfq(
        &ClassicalPfq::new(&[a, b / 2.0, (b + 1.0) / 2.0], &[c / 2.0, (c + 1.0) / 2.0]),
        1.0,
    )?
    .require_converged()?;
    let ln_pre = ln_gamma_real(c)?.0 + ln_gamma_real(c - a - b)?.0 - ln_gamma_real(c - b)?.0 - ln_gamma_real(c - a)?.0;
    let rhs = classical_pfq(&ClassicalPfq::new(&[a, b], &[c - a]), -1.0)?
        .require_converged()?
        .scaled(ln_pre.exp());
    Ok((lhs, rhs).into())
}

/// Extended fractional derivative of order mu < 0:
/// z^{−mu}/Γ(−mu) ∫₀¹ (1−v)^{−mu−1} Θ(−b/v − d/(1−v)) f(z v) dv.
pub fn frac_deriv(
    kernel: &Kernel,
    mu: f64,
    reg: RegPair,
    mut f: impl FnMut(f64) -> Result<f64>,
    z: f64,
    tol: f64,
) -> Result<EvalResult> {
    if !(mu < 0.0) {
        return Err(Error::domain(format!(
            "only the mu < 0 branch is implemented (got {mu})"
        )));
    }
    if !(z > 0.0) {
        return Err(Error::domain(format!("fractional derivative needs z > 0 (got {z})")));
    }
    let ln_scale = -mu * z.ln() - ln_gamma_real(-mu)?.0;
    let q = try_integrate_unit(
        |v, vc| {
            let (lk, sk) = ln_kernel_factor(kernel, reg, v, vc)?;
            if lk == f64::NEG_INFINITY {
                return Ok(0.0);
            }
            let fv = f(z * v)?;
            if fv == 0.0 {
                return Ok(0.0);
            }
            Ok(sk * fv.signum() * ((-mu - 1.0) * vc.ln() + lk + fv.abs().ln() + ln_scale).exp())
        },
        tol,
    )?;
    Ok(EvalResult {
        value: q.value,
        abs_err: q.abs_err,
        terms_or_nodes: q.nodes_used,
        converged: q.converged,
        method: Method::Quadrature,
    })
}

/// F[(a1,1),(a2,k); b1; c z^k] against Γ(b1)/Γ(a2) z^{1−b1} D^{a2−b1}{t^{a2−1}(1−c t^k)^{−a1}}.
pub fn frac_deriv_identity(p: &GaussParams, k: u32, c: f64, z: f64, tol: f64) -> Result<Sides> {
    let arg = c * z.powi(k as i32);
    let spec = PfqSpec::new(p.kernel, &[(p.a1, 1), (p.a2, k)], &[p.b1], p.reg)?;
    let lhs = eval_pfq(&spec, arg, MethodChoice::Auto, tol)?.require_converged()?;
    let (a1, a2) = (p.a1, p.a2);
    let d = frac_deriv(
        &p.kernel,
        a2 - p.b1,
        p.reg,
        |t| {
            let base = 1.0 - c * t.powi(k as i32);
            if base <= 0.0 {
                return Err(Error::domain(
                    "fractional-derivative integrand leaves the principal branch",
                ));
            }
            Ok((((a2 - 1.0) * t.ln()) - a1 * base.ln()).exp())
        },
        z,
        tol,
    )?
    .require_converged()?;
    let ln_pre = ln_gamma_real(p.b1)?.0 - ln_gamma_real(a2)?.0 + (1.0 - p.b1) * z.ln();
    Ok((lhs, d.scaled(ln_pre.exp())).into())
}

/// Σ_{i=0}^{n} (−n)_i t^i / i!, the finite binomial expansion of (1 − t)^n.
pub fn falling_binomial_sum(n: u32, t: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for i in 0..n {
        term *= (i as f64 - n as f64) * t / (i as f64 + 1.0);
        sum += term;
    }
    sum
}
