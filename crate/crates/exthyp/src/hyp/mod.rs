//! Extended Gauss and generalized hypergeometric functions.
//!
//! Each upper parameter α_j carries a stride k_j. Upper and lower parameters
//! pair up into extended-beta ratios B_{b,d}(α + k m, β − α)/B(α, β − α):
//!
//! * p = q + 1: α₁ stays a Pochhammer factor (α₁)_{k₁m}, the rest pair with β_j.
//! * p = q: every α_j pairs with β_j.
//! * p < q: the first r = q − p lower parameters stay as 1/(β_i)_m.

mod identities;

pub use identities::*;

use crate::corefn::{classical_pfq, ClassicalPfq, SeriesSum, SERIES_CAP};
use crate::error::{Error, EvalResult, Method, Result};
use crate::extbeta::{beta_norm, beta_weight, check_beta_args, ext_beta_shifted_batch, RegPair};
use crate::kernel::Kernel;
use crate::quadrature::try_integrate_unit;

/// Evaluation path selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    Auto,
    Series,
    Integral,
    Mellin,
}

/// Series radius beyond which the automatic dispatch prefers the integral.
pub const SERIES_RADIUS: f64 = 0.85;

/// Parameters of an extended generalized hypergeometric function.
#[derive(Debug, Clone, PartialEq)]
pub struct PfqSpec {
    pub upper: Vec<(f64, u32)>,
    pub lower: Vec<f64>,
    pub reg: RegPair,
    pub kernel: Kernel,
    /// Require β > α > 0 for every pair. When false, any pair whose integral
    /// converges under the regularization is accepted.
    pub strict: bool,
}

/// One extended-beta pairing: numerator α with stride k against β.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Pair {
    pub alpha: f64,
    pub k: u32,
    pub beta: f64,
}

impl PfqSpec {
    pub fn new(kernel: Kernel, upper: &[(f64, u32)], lower: &[f64], reg: RegPair) -> Result<Self> {
        let s = PfqSpec {
            upper: upper.to_vec(),
            lower: lower.to_vec(),
            reg,
            kernel,
            strict: true,
        };
        s.validate()?;
        Ok(s)
    }

    /// Same as [`PfqSpec::new`] with the β > α > 0 requirement lifted.
    pub fn relaxed(kernel: Kernel, upper: &[(f64, u32)], lower: &[f64], reg: RegPair) -> Result<Self> {
        let s = PfqSpec {
            upper: upper.to_vec(),
            lower: lower.to_vec(),
            reg,
            kernel,
            strict: false,
        };
        s.validate()?;
        Ok(s)
    }

    /// Unit-stride parameter set from plain lists.
    pub fn unit(kernel: Kernel, upper: &[f64], lower: &[f64], reg: RegPair) -> Result<Self> {
        let up: Vec<(f64, u32)> = upper.iter().map(|&a| (a, 1)).collect();
        PfqSpec::new(kernel, &up, lower, reg)
    }

    /// Extended Gauss function 2F1(a1, a2; b1).
    pub fn gauss(kernel: Kernel, a1: f64, a2: f64, b1: f64, reg: RegPair) -> Result<Self> {
        PfqSpec::new(kernel, &[(a1, 1), (a2, 1)], &[b1], reg)
    }

    pub(crate) fn gauss_with(kernel: Kernel, a1: f64, a2: f64, b1: f64, reg: RegPair, strict: bool) -> Result<Self> {
        if strict {
            PfqSpec::gauss(kernel, a1, a2, b1, reg)
        } else {
            PfqSpec::relaxed(kernel, &[(a1, 1), (a2, 1)], &[b1], reg)
        }
    }

    pub fn p(&self) -> usize {
        self.upper.len()
    }

    pub fn q(&self) -> usize {
        self.lower.len()
    }

    /// Pochhammer numerator (p = q + 1 only).
    pub(crate) fn lead(&self) -> Option<(f64, u32)> {
        if self.p() == self.q() + 1 {
            Some(self.upper[0])
        } else {
            None
        }
    }

    /// Lower parameters that appear as 1/(β)_m (p < q only).
    pub(crate) fn free_lower(&self) -> &[f64] {
        if self.p() < self.q() {
            &self.lower[..self.q() - self.p()]
        } else {
            &[]
        }
    }

    pub(crate) fn pairs(&self) -> Vec<Pair> {
        let (p, q) = (self.p(), self.q());
        if p == q + 1 {
            (0..q)
                .map(|j| Pair {
                    alpha: self.upper[j + 1].0,
                    k: self.upper[j + 1].1,
                    beta: self.lower[j],
                })
                .collect()
        } else {
            let r = q - p;
            (0..p)
                .map(|j| Pair {
                    alpha: self.upper[j].0,
                    k: self.upper[j].1,
                    beta: self.lower[r + j],
                })
                .collect()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.p() > self.q() + 1 {
            return Err(Error::domain(format!(
                "p = {} exceeds q + 1 = {}",
                self.p(),
                self.q() + 1
            )));
        }
        for &b in self.free_lower() {
            if b <= 0.0 && b == b.round() {
                return Err(Error::Pole(b));
            }
        }
        for pr in self.pairs() {
            if self.strict {
                if !(pr.beta > pr.alpha && pr.alpha > 0.0) {
                    return Err(Error::domain(format!(
                        "pairing requires beta > alpha > 0 (got alpha = {}, beta = {})",
                        pr.alpha, pr.beta
                    )));
                }
            } else {
                check_beta_args(&self.kernel, pr.alpha, pr.beta - pr.alpha, self.reg)?;
                beta_norm(pr.alpha, pr.beta - pr.alpha, false)?;
            }
        }
        Ok(())
    }

    /// The parameter set with every α_j and β_j shifted by n.
    pub fn shifted(&self, n: u32) -> Result<Self> {
        let nf = n as f64;
        let s = PfqSpec {
            upper: self.upper.iter().map(|&(a, k)| (a + nf, k)).collect(),
            lower: self.lower.iter().map(|&b| b + nf).collect(),
            ..self.clone()
        };
        s.validate()?;
        Ok(s)
    }

    /// Removes the last pairing, giving the integrand's inner function.
    pub(crate) fn without_last_pair(&self) -> PfqSpec {
        let mut s = self.clone();
        s.upper.pop();
        s.lower.pop();
        s
    }

    fn terminating_degree(&self) -> Option<usize> {
        let (a, k) = self.lead()?;
        if k == 0 || !(a <= 0.0 && a == a.round()) {
            return None;
        }
        Some((-a) as usize / k as usize)
    }
}

/// Lazily extended table of ratios B_{b,d}(α + k m, β − α)/B(α, β − α).
#[derive(Debug, Clone)]
pub(crate) struct BetaRatios {
    kernel: Kernel,
    pair: Pair,
    reg: RegPair,
    norm: f64,
    quad_tol: f64,
    ratio: Vec<f64>,
    err: Vec<f64>,
}

impl BetaRatios {
    pub(crate) fn new(kernel: Kernel, pair: Pair, reg: RegPair, strict: bool, tol: f64) -> Result<Self> {
        let norm = beta_norm(pair.alpha, pair.beta - pair.alpha, strict)?;
        let quad_tol = (1e-3 * tol).max(1e-15) * norm.abs();
        Ok(BetaRatios {
            kernel,
            pair,
            reg,
            norm,
            quad_tol,
            ratio: Vec::new(),
            err: Vec::new(),
        })
    }

    /// Ratio at index m and its absolute error.
    pub(crate) fn get(&mut self, m: usize) -> Result<(f64, f64)> {
        if self.reg.is_zero() {
            return self.get_classical(m);
        }
        while m >= self.ratio.len() {
            let first = self.ratio.len();
            let count = first.max(32);
            let vals = ext_beta_shifted_batch(
                &self.kernel,
                self.pair.alpha,
                self.pair.k as f64,
                first,
                count,
                self.pair.beta - self.pair.alpha,
                self.reg,
                self.quad_tol,
            )?;
            for v in vals {
                if !v.converged {
                    return Err(Error::NoConvergence(format!(
                        "coefficient quadrature for alpha = {}, stride {}",
                        self.pair.alpha, self.pair.k
                    )));
                }
                self.ratio.push(v.value / self.norm);
                self.err.push(v.abs_err / self.norm.abs());
            }
        }
        Ok((self.ratio[m], self.err[m]))
    }

    /// Unregularized ratio Π_{i<k m}(α + i)/(β + i), extended one step at a time.
    fn get_classical(&mut self, m: usize) -> Result<(f64, f64)> {
        if self.ratio.is_empty() {
            self.ratio.push(1.0);
            self.err.push(0.0);
        }
        while m >= self.ratio.len() {
            let prev = self.ratio.len() - 1;
            let k = self.pair.k as usize;
            let mut r = self.ratio[prev];
            for i in prev * k..(prev + 1) * k {
                r *= (self.pair.alpha + i as f64) / (self.pair.beta + i as f64);
            }
            self.ratio.push(r);
            self.err.push(r.abs() * 2.0 * f64::EPSILON * ((prev + 1) * k) as f64);
        }
        Ok((self.ratio[m], self.err[m]))
    }
}

/// Series evaluator with coefficient tables cached across arguments.
#[derive(Debug, Clone)]
pub struct ExtSeries {
    spec: PfqSpec,
    pairs: Vec<BetaRatios>,
}

impl ExtSeries {
    pub fn new(spec: &PfqSpec, tol: f64) -> Result<Self> {
        spec.validate()?;
        let pairs = spec
            .pairs()
            .into_iter()
            .map(|p| BetaRatios::new(spec.kernel, p, spec.reg, spec.strict, tol))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExtSeries {
            spec: spec.clone(),
            pairs,
        })
    }

    pub fn spec(&self) -> &PfqSpec {
        &self.spec
    }

    /// Coefficient ratio product and its error at index m.
    fn coeff(&mut self, m: usize) -> Result<(f64, f64)> {
        let (mut value, mut upper) = (1.0f64, 1.0f64);
        for pc in &mut self.pairs {
            let (r, e) = pc.get(m)?;
            value *= r;
            upper *= r.abs() + e;
        }
        Ok((value, upper - value.abs()))
    }

    pub fn eval(&mut self, z: f64) -> Result<EvalResult> {
        let lead = self.spec.lead().map(|l| l.0);
        self.eval_general(z, lead, |_| 1.0)
    }

    /// Σ_m lead-Pochhammer · coefficient · weight(m) · z^m/m!, where `lead`
    /// overrides α₁ in the p = q + 1 branch.
    pub fn eval_general(&mut self, z: f64, lead: Option<f64>, weight: impl Fn(usize) -> f64) -> Result<EvalResult> {
        let (p, q) = (self.spec.p(), self.spec.q());
        if p == q + 1 && z.abs() >= 1.0 {
            let degree = lead.and_then(|a| {
                let k = self.spec.upper[0].1;
                (k > 0 && a <= 0.0 && a == a.round()).then(|| (-a) as usize / k as usize)
            });
            if degree.is_none() {
                return Err(Error::domain(format!("series requires |z| < 1 (got {z})")));
            }
        }
        let lead = lead.map(|a| (a, self.spec.upper[0].1));
        let free: Vec<f64> = self.spec.free_lower().to_vec();
        let mut s = SeriesSum::new();
        let mut base = 1.0f64;
        let mut coeff_err = 0.0;
        let mut exact = false;
        let mut stopped = false;
        for m in 0..SERIES_CAP {
            let (c, ce) = self.coeff(m)?;
            let w = weight(m);
            let term = base * c * w;
            coeff_err += (base * w).abs() * ce;
            stopped = s.push(term);
            if stopped || !term.is_finite() {
                break;
            }
            // Advance the non-beta part of the coefficient to m + 1.
            let mf = m as f64;
            let mut step = z / (mf + 1.0);
            if let Some((a, k)) = lead {
                for i in 0..k {
                    step *= a + (k as f64) * mf + i as f64;
                }
            }
            for &b in &free {
                step /= b + mf;
            }
            base *= step;
            if base == 0.0 {
                exact = true;
                stopped = true;
                break;
            }
        }
        if !s.sum.is_finite() {
            return Err(Error::NoConvergence("series overflow".into()));
        }
        let tail = if exact { Some(0.0) } else { s.tail_bound(0.9) };
        let converged = stopped && tail.is_some();
        Ok(EvalResult {
            value: s.sum,
            abs_err: tail.unwrap_or(f64::INFINITY) + coeff_err + s.rounding(),
            terms_or_nodes: s.terms,
            converged,
            method: Method::Series,
        })
    }
}

/// Extended generalized hypergeometric series at z.
pub fn ext_pfq(spec: &PfqSpec, z: f64, tol: f64) -> Result<EvalResult> {
    ExtSeries::new(spec, tol)?.eval(z)
}

/// Extended Gauss function by its series; requires |z| < 1.
pub fn ext_2f1(kernel: &Kernel, a1: f64, a2: f64, b1: f64, z: f64, reg: RegPair, tol: f64) -> Result<EvalResult> {
    ext_pfq(&PfqSpec::gauss(*kernel, a1, a2, b1, reg)?, z, tol)
}

/// Extended Gauss function by its Euler integral; valid for z ≤ 1.
pub fn ext_2f1_integral(
    kernel: &Kernel,
    a1: f64,
    a2: f64,
    b1: f64,
    z: f64,
    reg: RegPair,
    tol: f64,
) -> Result<EvalResult> {
    euler_step_integral(&PfqSpec::gauss(*kernel, a1, a2, b1, reg)?, z, false, tol)
}

/// Dispatches between series, Euler integral and Mellin-Barnes paths.
pub fn eval_pfq(spec: &PfqSpec, z: f64, method: MethodChoice, tol: f64) -> Result<EvalResult> {
    match method {
        MethodChoice::Series => ext_pfq(spec, z, tol),
        MethodChoice::Integral => euler_step_integral(spec, z, false, tol),
        MethodChoice::Mellin => crate::mellin::mb_eval(spec, z, crate::mellin::ContourSpec::default_for(spec)?, tol),
        MethodChoice::Auto => {
            let series_ok = if spec.p() == spec.q() + 1 {
                z.abs() <= SERIES_RADIUS || spec.terminating_degree().is_some()
            } else {
                z >= -5.0 || spec.pairs().is_empty()
            };
            if series_ok {
                ext_pfq(spec, z, tol)
            } else {
                euler_step_integral(spec, z, false, tol)
            }
        }
    }
}

/// Extended Gauss function with automatic path choice.
pub fn ext_2f1_auto(kernel: &Kernel, a1: f64, a2: f64, b1: f64, z: f64, reg: RegPair, tol: f64) -> Result<EvalResult> {
    eval_pfq(&PfqSpec::gauss(*kernel, a1, a2, b1, reg)?, z, MethodChoice::Auto, tol)
}

pub(crate) fn gauss_auto(
    kernel: Kernel,
    a1: f64,
    a2: f64,
    b1: f64,
    z: f64,
    reg: RegPair,
    strict: bool,
    tol: f64,
) -> Result<EvalResult> {
    let spec = PfqSpec::gauss_with(kernel, a1, a2, b1, reg, strict)?;
    eval_pfq(&spec, z, MethodChoice::Auto, tol)?.require_converged()
}

/// Repeated evaluation of one extended function at many arguments: the
/// series with cached coefficients inside the series radius, the Euler
/// integral elsewhere. `nested` forces the integral at every argument,
/// recursing down to the base cases.
#[derive(Debug, Clone)]
pub(crate) struct CachedEval {
    series: ExtSeries,
    nested: bool,
    tol: f64,
}

impl CachedEval {
    pub(crate) fn new(spec: &PfqSpec, nested: bool, tol: f64) -> Result<Self> {
        Ok(CachedEval {
            series: ExtSeries::new(spec, tol)?,
            nested,
            tol,
        })
    }

    pub(crate) fn eval(&mut self, w: f64) -> Result<EvalResult> {
        let spec = self.series.spec();
        let use_series = if self.nested {
            false
        } else if spec.p() == spec.q() + 1 {
            w.abs() <= SERIES_RADIUS || spec.terminating_degree().is_some()
        } else {
            w >= -5.0
        };
        let r = if use_series {
            self.series.eval(w)?
        } else {
            let spec = spec.clone();
            euler_step_integral(&spec, w, self.nested, self.tol)?
        };
        r.require_converged()
    }
}

/// ln|·| and sign of a value, for combining with log-domain weights.
#[derive(Debug, Clone, Copy)]
struct LogValue {
    ln: f64,
    sign: f64,
    rel_err: f64,
}

impl LogValue {
    fn from_eval(r: EvalResult) -> Self {
        let rel_err = if r.value != 0.0 { r.abs_err / r.value.abs() } else { 0.0 };
        LogValue {
            ln: r.value.abs().ln(),
            sign: r.value.signum(),
            rel_err,
        }
    }
}

/// How the inner function of one Euler step is evaluated.
enum Inner {
    /// 1F0(a;;w) with unit stride: (1 − w)^{−a}.
    Binomial(f64),
    /// 0F0(;;w) or 1F0 with zero stride.
    Exp,
    /// 0Fr(;β;w).
    Classical(ClassicalPfq),
    Extended(CachedEval),
}

impl Inner {
    fn new(spec: &PfqSpec, nested: bool, tol: f64) -> Result<Self> {
        if !spec.pairs().is_empty() {
            return Ok(Inner::Extended(CachedEval::new(spec, nested, tol)?));
        }
        match spec.lead() {
            Some((a, 1)) => Ok(Inner::Binomial(a)),
            Some((_, 0)) => Ok(Inner::Exp),
            Some((a, k)) => Err(Error::domain(format!(
                "series with leading parameter {a} of stride {k} diverges for every nonzero argument"
            ))),
            None if spec.lower.is_empty() => Ok(Inner::Exp),
            None => Ok(Inner::Classical(ClassicalPfq::new(&[], &spec.lower))),
        }
    }

    fn eval(&mut self, w: f64, one_minus_w: f64) -> Result<LogValue> {
        match self {
            Inner::Binomial(a) => Ok(LogValue {
                ln: -*a * one_minus_w.ln(),
                sign: 1.0,
                rel_err: 0.0,
            }),
            Inner::Exp => Ok(LogValue {
                ln: w,
                sign: 1.0,
                rel_err: 0.0,
            }),
            Inner::Classical(c) => Ok(LogValue::from_eval(classical_pfq(c, w)?.require_converged()?)),
            Inner::Extended(c) => Ok(LogValue::from_eval(c.eval(w)?)),
        }
    }
}

/// One Euler-integral step: integrates the function with its last pairing
/// removed against t^{α−1}(1−t)^{β−α−1}Θ, at argument z·t^k. Inner functions
/// that still carry pairings use their series, or (with `nested`) recurse.
pub fn euler_step_integral(spec: &PfqSpec, z: f64, nested: bool, tol: f64) -> Result<EvalResult> {
    spec.validate()?;
    let pairs = spec.pairs();
    let last = *pairs
        .last()
        .ok_or_else(|| Error::domain("no extended-beta pairing to integrate"))?;
    if spec.p() == spec.q() + 1 && z > 1.0 {
        return Err(Error::domain(format!("Euler integral requires z <= 1 (got {z})")));
    }
    let width = last.beta - last.alpha;
    let norm = beta_norm(last.alpha, width, spec.strict)?;
    let mut inner = Inner::new(&spec.without_last_pair(), nested, tol)?;
    let k = last.k;
    let mut worst_rel = 0.0f64;
    let q = try_integrate_unit(
        |t, tc| {
            let wgt = beta_weight(&spec.kernel, spec.reg, last.alpha, width, t, tc)?;
            if wgt == 0.0 {
                return Ok(0.0);
            }
            // 1 − z t^k written to keep full relative accuracy near t = 1.
            let one_minus_tk = if k == 0 {
                0.0
            } else {
                tc * (0..k).map(|i| t.powi(i as i32)).sum::<f64>()
            };
            let w = z * t.powi(k as i32);
            let one_minus_w = (1.0 - z) + z * one_minus_tk;
            let lv = inner.eval(w, one_minus_w)?;
            worst_rel = worst_rel.max(lv.rel_err);
            Ok(wgt.signum() * lv.sign * (wgt.abs().ln() + lv.ln).exp())
        },
        (tol * norm.abs()).max(1e-300),
    )?;
    let value = q.value / norm;
    Ok(EvalResult {
        value,
        abs_err: q.abs_err / norm.abs() + worst_rel * value.abs(),
        terms_or_nodes: q.nodes_used,
        converged: q.converged,
        method: Method::EulerIntegral,
    })
}

#[cfg(test)]
mod tests;
