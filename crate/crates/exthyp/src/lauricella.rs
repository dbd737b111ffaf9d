//! Extended Lauricella functions F_D and F_A in r variables.

use crate::appell::{f2_integral, AppellParams, DiagonalSum};
use crate::corefn::{beta_classical, gamma, ln_gamma_real, SERIES_CAP};
use crate::error::{Error, EvalResult, Method, Result};
use crate::extbeta::{ext_beta, ln_kernel_factor, RegPair};
use crate::hyp::{ext_2f1_integral, BetaRatios, CachedEval, ExtSeries, Pair, PfqSpec};
use crate::kernel::Kernel;
use crate::quadrature::{try_integrate_halfline, try_integrate_interval, try_integrate_unit};
use crate::variant::{Sides, Variant};

/// Largest number of variables accepted by the series evaluators.
pub const MAX_VARIABLES: usize = 4;

/// Parameters of F_D (one `gamma`) or F_A (one `gamma` per variable).
#[derive(Debug, Clone, PartialEq)]
pub struct LauricellaParams {
    pub kernel: Kernel,
    pub alpha: f64,
    pub betas: Vec<f64>,
    pub gammas: Vec<f64>,
    pub xs: Vec<f64>,
    pub reg: RegPair,
}

impl LauricellaParams {
    pub fn new(kernel: Kernel, alpha: f64, betas: &[f64], gammas: &[f64], xs: &[f64], reg: RegPair) -> Result<Self> {
        let r = betas.len();
        if r == 0 || r > MAX_VARIABLES {
            return Err(Error::domain(format!(
                "number of variables must be 1..={MAX_VARIABLES} (got {r})"
            )));
        }
        if xs.len() != r {
            return Err(Error::domain("betas and xs differ in length"));
        }
        if gammas.len() != 1 && gammas.len() != r {
            return Err(Error::domain("gammas must have length 1 (F_D) or r (F_A)"));
        }
        Ok(LauricellaParams {
            kernel,
            alpha,
            betas: betas.to_vec(),
            gammas: gammas.to_vec(),
            xs: xs.to_vec(),
            reg,
        })
    }

    pub fn r(&self) -> usize {
        self.betas.len()
    }

    fn fd_gamma(&self) -> Result<f64> {
        match self.gammas.as_slice() {
            [g] => {
                if !(*g > self.alpha && self.alpha > 0.0) {
                    return Err(Error::domain(format!(
                        "F_D needs gamma > alpha > 0 (got {g}, {})",
                        self.alpha
                    )));
                }
                Ok(*g)
            }
            _ => Err(Error::domain("F_D takes a single gamma")),
        }
    }

    fn check_fa(&self) -> Result<()> {
        if self.gammas.len() != self.r() {
            return Err(Error::domain("F_A takes one gamma per variable"));
        }
        for (b, g) in self.betas.iter().zip(&self.gammas) {
            if !(g > b && *b > 0.0) {
                return Err(Error::domain(format!("F_A needs gamma_j > beta_j > 0 (got {g}, {b})")));
            }
        }
        Ok(())
    }
}

/// Incremental Cauchy product of r sequences, with three channels: signed
/// values, magnitudes, and magnitudes inflated by coefficient error.
struct Convolution {
    seqs: Vec<[Vec<f64>; 3]>,
    partial: Vec<[Vec<f64>; 3]>,
    binomial: bool,
    row: Vec<f64>,
}

impl Convolution {
    /// Plain Cauchy product.
    fn new(r: usize) -> Self {
        let empty = || [Vec::new(), Vec::new(), Vec::new()];
        Convolution {
            seqs: (0..r).map(|_| empty()).collect(),
            partial: (1..r).map(|_| empty()).collect(),
            binomial: false,
            row: Vec::new(),
        }
    }

    /// Product weighted by C(N, i), i.e. N! times the Cauchy product of the
    /// sequences divided by m!. Exact in double precision up to N = `BINOMIAL_CAP`.
    fn binomial(r: usize) -> Self {
        Convolution {
            binomial: true,
            ..Convolution::new(r)
        }
    }

    /// Appends entry N of every sequence and returns entry N of the product.
    fn push(&mut self, entries: &[[f64; 3]]) -> [f64; 3] {
        for (s, e) in self.seqs.iter_mut().zip(entries) {
            for c in 0..3 {
                s[c].push(e[c]);
            }
        }
        let n = self.seqs[0][0].len() - 1;
        self.row.clear();
        let mut w = 1.0;
        for i in 0..=n {
            self.row.push(if self.binomial { w } else { 1.0 });
            w = w * (n - i) as f64 / (i + 1) as f64;
        }
        let mut prev = [self.seqs[0][0][n], self.seqs[0][1][n], self.seqs[0][2][n]];
        for k in 1..self.seqs.len() {
            let mut out = [0.0; 3];
            for (c, o) in out.iter_mut().enumerate() {
                let lower = if k == 1 {
                    &self.seqs[0][c]
                } else {
                    &self.partial[k - 2][c]
                };
                let a = &self.seqs[k][c];
                *o = (0..=n).map(|i| self.row[i] * lower[i] * a[n - i]).sum();
            }
            for (c, o) in out.iter().enumerate() {
                self.partial[k - 1][c].push(*o);
            }
            prev = out;
        }
        prev
    }
}

/// Largest degree whose binomial row fits in double precision.
const BINOMIAL_CAP: usize = 1000;

/// F_D series summed by total degree N; the beta-ratio coefficient depends
/// on N only, and the multinomial weights form a Cauchy product.
pub fn fd_series(p: &LauricellaParams, tol: f64) -> Result<EvalResult> {
    let gamma = p.fd_gamma()?;
    if !p.xs.iter().all(|x| x.abs() < 1.0) {
        return Err(Error::domain("F_D series needs max |x_j| < 1"));
    }
    let mut coeff = BetaRatios::new(
        p.kernel,
        Pair {
            alpha: p.alpha,
            k: 1,
            beta: gamma,
        },
        p.reg,
        true,
        tol,
    )?;
    let mut conv = Convolution::new(p.r());
    let mut axis: Vec<f64> = vec![1.0; p.r()];
    let mut acc = DiagonalSum::new();
    let mut coeff_err = 0.0;
    let mut stopped = false;
    for n in 0..SERIES_CAP {
        if n > 0 {
            let m = (n - 1) as f64;
            for (a, (b, x)) in axis.iter_mut().zip(p.betas.iter().zip(&p.xs)) {
                *a *= (b + m) * x / (m + 1.0);
            }
        }
        let entries: Vec<[f64; 3]> = axis.iter().map(|&a| [a, a.abs(), a.abs()]).collect();
        let [s, mass, _] = conv.push(&entries);
        let (c, ce) = coeff.get(n)?;
        coeff_err += ce * mass;
        stopped = acc.push(c * s, c.abs() * mass, c.abs() * mass);
        if stopped {
            break;
        }
    }
    acc.finish(stopped, coeff_err, Method::Series)
}

/// F_D by its single Euler integral; needs x_j ≤ 1.
pub fn fd_integral(p: &LauricellaParams, tol: f64) -> Result<EvalResult> {
    let gamma = p.fd_gamma()?;
    if !p.xs.iter().all(|&x| x <= 1.0) {
        return Err(Error::domain("F_D integral needs x_j <= 1"));
    }
    let norm = beta_classical(p.alpha, gamma - p.alpha)?;
    let q = try_integrate_unit(
        |t, tc| {
            let (lk, sk) = ln_kernel_factor(&p.kernel, p.reg, t, tc)?;
            if lk == f64::NEG_INFINITY {
                return Ok(0.0);
            }
            let mut ln = (p.alpha - 1.0) * t.ln() + (gamma - p.alpha - 1.0) * tc.ln() + lk;
            for (b, x) in p.betas.iter().zip(&p.xs) {
                ln -= b * (tc + (1.0 - x) * t).ln();
            }
            Ok(sk * ln.exp())
        },
        tol * norm,
    )?;
    Ok(EvalResult {
        value: q.value / norm,
        abs_err: q.abs_err / norm,
        terms_or_nodes: q.nodes_used,
        converged: q.converged,
        method: Method::EulerIntegral,
    })
}

/// Both sides of the summation formula at x_1 = … = x_r = 1: the Euler
/// integral against B_{b,d}(α, γ − α − Σβ)/B(α, γ − α).
pub fn fd_summation_unit(
    kernel: Kernel,
    alpha: f64,
    betas: &[f64],
    gamma: f64,
    reg: RegPair,
    tol: f64,
) -> Result<Sides> {
    let total: f64 = betas.iter().sum();
    let excess = gamma - alpha - total;
    if excess <= 0.0 && reg.d == 0.0 {
        return Err(Error::domain(format!(
            "unit summation needs gamma - alpha - sum(beta) > 0 or d > 0 (got {excess})"
        )));
    }
    let ones = vec![1.0; betas.len()];
    let p = LauricellaParams::new(kernel, alpha, betas, &[gamma], &ones, reg)?;
    let lhs = fd_integral(&p, tol)?.require_converged()?;
    let norm = beta_classical(alpha, gamma - alpha)?;
    let b = ext_beta(&kernel, alpha, excess, reg, tol * norm)?;
    Ok(Sides::new(lhs.value, lhs.abs_err, b.value / norm, b.abs_err / norm))
}

/// Inputs of the weighted product integral over an interval (lo, hi):
/// ∫ (t − lo)^{α−1}(hi − t)^{β−1} Π (f_j t + g_j)^{λ_j} Θ(−p/(t − lo) − q/(hi − t)) dt.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductIntegral {
    pub kernel: Kernel,
    pub lo: f64,
    pub hi: f64,
    pub alpha: f64,
    pub beta: f64,
    pub slopes: Vec<f64>,
    pub offsets: Vec<f64>,
    pub powers: Vec<f64>,
    pub reg: RegPair,
}

impl ProductIntegral {
    fn check(&self) -> Result<()> {
        if !(self.lo < self.hi) || !(self.alpha > 0.0 && self.beta > 0.0) {
            return Err(Error::domain("product integral needs lo < hi and alpha, beta > 0"));
        }
        let r = self.slopes.len();
        if r == 0 || r > MAX_VARIABLES || self.offsets.len() != r || self.powers.len() != r {
            return Err(Error::domain("slopes, offsets and powers must share a length in 1..=4"));
        }
        for u in self.arguments() {
            if !(u.abs() < 1.0) {
                return Err(Error::domain(format!("linear factor ratio {u} must lie in (-1, 1)")));
            }
        }
        Ok(())
    }

    /// F_D arguments −(hi − lo) f_j / (lo f_j + g_j).
    pub fn arguments(&self) -> Vec<f64> {
        self.slopes
            .iter()
            .zip(&self.offsets)
            .map(|(f, g)| -(self.hi - self.lo) * f / (self.lo * f + g))
            .collect()
    }
}

/// Both sides of the product-integral formula. `Proof` carries the factor
/// (hi − lo)^{α+β−1}; `Printed` omits it.
pub fn product_integral_identity(ip: &ProductIntegral, variant: Variant, tol: f64) -> Result<Sides> {
    ip.check()?;
    let len = ip.hi - ip.lo;
    let q = try_integrate_interval(
        ip.lo,
        ip.hi,
        |t, left, right| {
            let (lk, sk) = ln_kernel_factor(&ip.kernel, ip.reg, left, right)?;
            if lk == f64::NEG_INFINITY {
                return Ok(0.0);
            }
            let mut ln = (ip.alpha - 1.0) * left.ln() + (ip.beta - 1.0) * right.ln() + lk;
            for ((f, g), l) in ip.slopes.iter().zip(&ip.offsets).zip(&ip.powers) {
                ln += l * (f * t + g).ln();
            }
            Ok(sk * ln.exp())
        },
        tol,
    )?;
    let scale = match variant {
        Variant::Proof => len.powf(ip.alpha + ip.beta - 1.0),
        Variant::Printed => 1.0,
        v => {
            return Err(Error::domain(format!(
                "variant {v} not defined for the product integral"
            )))
        }
    };
    let mut pre = scale * beta_classical(ip.alpha, ip.beta)?;
    for ((f, g), l) in ip.slopes.iter().zip(&ip.offsets).zip(&ip.powers) {
        pre *= (ip.lo * f + g).powf(*l);
    }
    let minus: Vec<f64> = ip.powers.iter().map(|l| -l).collect();
    let reg = RegPair::new(ip.reg.b / len, ip.reg.d / len)?;
    let fd = LauricellaParams::new(ip.kernel, ip.alpha, &minus, &[ip.alpha + ip.beta], &ip.arguments(), reg)?;
    let r = fd_series(&fd, tol)?.require_converged()?;
    Ok(Sides::new(q.value, q.abs_err, pre * r.value, pre.abs() * r.abs_err))
}

/// Node beyond which e^{−rate·t} t^{power} is negligible.
fn past_tail(rate: f64, power: f64, t: f64) -> bool {
    rate * t - power * t.max(1.0).ln() > 60.0
}

/// Both sides of the Laplace-type representation of F_D for r ≤ 2:
/// ∫…∫ Π t_j^{β_j−1} e^{−t_j} 1F1(α; γ; Σ x_j t_j) dt = Π Γ(β_j) · F_D.
pub fn fd_laplace_rep(p: &LauricellaParams, tol: f64) -> Result<Sides> {
    let g = p.fd_gamma()?;
    if p.r() > 2 {
        return Err(Error::domain("Laplace representation is checked for r <= 2 only"));
    }
    if !p.betas.iter().all(|&b| b > 0.0) || !p.xs.iter().all(|&x| x < 1.0) {
        return Err(Error::domain("Laplace representation needs beta_j > 0 and x_j < 1"));
    }
    let spec = PfqSpec::unit(p.kernel, &[p.alpha], &[g], p.reg)?;
    let mut inner = CachedEval::new(&spec, false, 0.01 * tol)?;
    let growth = (g - p.alpha).abs() + 1.0;
    let rates: Vec<f64> = p.xs.iter().map(|x| 1.0 - x.max(0.0)).collect();
    let mut scale = 1.0;
    for &b in &p.betas {
        scale *= gamma(b)?;
    }
    let mut rel = 0.0f64;
    let mut inner_ok = true;
    let mut kummer = |z: f64| -> Result<f64> {
        let f = inner.eval(z)?;
        rel = rel.max(f.abs_err / f.value.abs().max(f64::MIN_POSITIVE));
        Ok(f.value)
    };
    let lhs = if p.r() == 1 {
        let (b, x) = (p.betas[0], p.xs[0]);
        try_integrate_halfline(
            |t| {
                if t == 0.0 || past_tail(rates[0], b - 1.0 + growth, t) {
                    return Ok(0.0);
                }
                Ok(((b - 1.0) * t.ln() - t).exp() * kummer(x * t)?)
            },
            tol * scale,
        )?
    } else {
        let (b1, b2) = (p.betas[0], p.betas[1]);
        let (x1, x2) = (p.xs[0], p.xs[1]);
        try_integrate_halfline(
            |t1| {
                if t1 == 0.0 || past_tail(rates[0], b1 - 1.0 + growth, t1) {
                    return Ok(0.0);
                }
                let w1 = ((b1 - 1.0) * t1.ln() - t1).exp();
                let q = try_integrate_halfline(
                    |t2| {
                        if t2 == 0.0 || past_tail(rates[1], b2 - 1.0 + growth, t2) {
                            return Ok(0.0);
                        }
                        Ok(((b2 - 1.0) * t2.ln() - t2).exp() * kummer(x1 * t1 + x2 * t2)?)
                    },
                    0.1 * tol * gamma(b2)? * (x1.max(0.0) * t1).exp(),
                )?;
                inner_ok &= q.converged || q.abs_err <= 0.1 * tol * q.value.abs();
                Ok(w1 * q.value)
            },
            tol * scale,
        )?
    };
    if !(lhs.converged && inner_ok) {
        return Err(Error::NoConvergence("Laplace-type integral did not converge".into()));
    }
    let rhs = fd_series(p, tol)?.require_converged()?;
    Ok(Sides::new(
        lhs.value,
        lhs.abs_err + rel * lhs.value.abs(),
        scale * rhs.value,
        scale * rhs.abs_err,
    ))
}

/// F_A series summed by total degree: (α)_N/N! times the binomially
/// weighted product of per-axis terms c_j(m) x_j^m. Keeping the factorials
/// apart from (α)_N avoids overflow near the convergence boundary.
pub fn fa_series(p: &LauricellaParams, tol: f64) -> Result<EvalResult> {
    p.check_fa()?;
    if !(p.xs.iter().map(|x| x.abs()).sum::<f64>() < 1.0) {
        return Err(Error::domain("F_A series needs sum |x_j| < 1"));
    }
    fa_sum(p, p.r(), tol, |_| Ok(1.0))
}

/// Σ_N (α)_N/N! · [binomial product over the first `axes` variables]_N · tail(N).
fn fa_sum(
    p: &LauricellaParams,
    axes: usize,
    tol: f64,
    mut tail: impl FnMut(usize) -> Result<f64>,
) -> Result<EvalResult> {
    let mut coeffs = (0..axes)
        .map(|j| {
            BetaRatios::new(
                p.kernel,
                Pair {
                    alpha: p.betas[j],
                    k: 1,
                    beta: p.gammas[j],
                },
                p.reg,
                true,
                tol,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let mut conv = Convolution::binomial(axes);
    let mut powers = vec![1.0f64; axes];
    let mut acc = DiagonalSum::new();
    let mut coeff_err = 0.0;
    let mut stopped = false;
    let mut lead = 1.0f64;
    for n in 0..=SERIES_CAP.min(BINOMIAL_CAP) {
        let mut entries = Vec::with_capacity(axes);
        for j in 0..axes {
            if n > 0 {
                powers[j] *= p.xs[j];
            }
            let (c, ce) = coeffs[j].get(n)?;
            let a = c * powers[j];
            entries.push([a, a.abs(), (c.abs() + ce) * powers[j].abs()]);
        }
        let [s, mass, inflated] = conv.push(&entries);
        let w = tail(n)?;
        coeff_err += lead.abs() * w.abs() * (inflated - mass);
        stopped = acc.push(lead * s * w, (lead * mass * w).abs(), (lead * mass * w).abs());
        if stopped {
            break;
        }
        lead *= (p.alpha + n as f64) / (n + 1) as f64;
    }
    acc.finish(stopped, coeff_err, Method::Series)
}

/// F_A by its Euler-type integral (r ≤ 2), normalized by Π B(β_j, γ_j − β_j).
pub fn fa_integral(p: &LauricellaParams, tol: f64) -> Result<EvalResult> {
    p.check_fa()?;
    match p.r() {
        1 => ext_2f1_integral(&p.kernel, p.alpha, p.betas[0], p.gammas[0], p.xs[0], p.reg, tol),
        2 => {
            let a = AppellParams::f2(
                p.kernel,
                p.alpha,
                p.betas[0],
                p.betas[1],
                p.gammas[0],
                p.gammas[1],
                p.reg,
            );
            f2_integral(&a, p.xs[0], p.xs[1], tol)
        }
        _ => Err(Error::domain("F_A integral is evaluated for r <= 2 only")),
    }
}

/// Both sides of the F_A integral representation. `Corrected` divides the
/// raw integral by Π B(β_j, γ_j − β_j); `Printed` multiplies by it.
pub fn fa_integral_identity(p: &LauricellaParams, variant: Variant, tol: f64) -> Result<Sides> {
    let lhs = fa_series(p, tol)?.require_converged()?;
    let normalized = fa_integral(p, tol)?.require_converged()?;
    let mut b2 = 1.0;
    for (b, g) in p.betas.iter().zip(&p.gammas) {
        b2 *= beta_classical(*b, g - b)?.powi(2);
    }
    let rhs = match variant {
        Variant::Corrected => normalized,
        Variant::Printed => normalized.scaled(b2),
        v => return Err(Error::domain(format!("variant {v} not defined for the F_A integral"))),
    };
    Ok((lhs, rhs).into())
}

/// Both sides of the single-integral form of F_A with a product of extended
/// Kummer functions. `Corrected` integrates over (0, ∞), `Printed` over (0, 1).
pub fn fa_single_integral(p: &LauricellaParams, variant: Variant, tol: f64) -> Result<Sides> {
    p.check_fa()?;
    if !(p.alpha > 0.0) {
        return Err(Error::domain("single-integral form needs alpha > 0"));
    }
    let lhs = fa_series(p, tol)?.require_converged()?;
    let mut kummers = p
        .betas
        .iter()
        .zip(&p.gammas)
        .map(|(&b, &g)| CachedEval::new(&PfqSpec::unit(p.kernel, &[b], &[g], p.reg)?, false, 0.01 * tol))
        .collect::<Result<Vec<_>>>()?;
    let (lg, _) = ln_gamma_real(p.alpha)?;
    let rate = 1.0 - p.xs.iter().map(|x| x.max(0.0)).sum::<f64>();
    let growth = p.alpha + p.betas.iter().zip(&p.gammas).map(|(b, g)| (g - b).abs()).sum::<f64>();
    let mut rel = 0.0f64;
    let mut integrand = |t: f64| -> Result<f64> {
        if t == 0.0 {
            return Ok(0.0);
        }
        let mut v = ((p.alpha - 1.0) * t.ln() - t - lg).exp();
        for (k, x) in kummers.iter_mut().zip(&p.xs) {
            let f = k.eval(x * t)?;
            rel = rel.max(f.abs_err / f.value.abs().max(f64::MIN_POSITIVE));
            v *= f.value;
        }
        Ok(v)
    };
    let q = match variant {
        Variant::Corrected => {
            if !(rate > 0.0) {
                return Err(Error::domain("half-line form needs sum of positive x_j below 1"));
            }
            try_integrate_halfline(
                |t| {
                    if past_tail(rate, growth, t) {
                        Ok(0.0)
                    } else {
                        integrand(t)
                    }
                },
                tol,
            )?
        }
        Variant::Printed => try_integrate_unit(|t, _| integrand(t), tol)?,
        v => {
            return Err(Error::domain(format!(
                "variant {v} not defined for the single-integral form"
            )))
        }
    };
    if !q.converged {
        return Err(Error::NoConvergence("single-integral form did not converge".into()));
    }
    Ok(Sides::new(
        lhs.value,
        lhs.abs_err,
        q.value,
        q.abs_err + rel * q.value.abs(),
    ))
}

/// Both sides of the partial-series form of F_A: an (r − 1)-fold sum whose
/// innermost factor is an extended Gauss function in the last variable.
pub fn fa_partial_series(p: &LauricellaParams, tol: f64) -> Result<Sides> {
    p.check_fa()?;
    if p.r() < 2 {
        return Err(Error::domain("partial-series form needs r >= 2"));
    }
    let lhs = fa_series(p, tol)?.require_converged()?;
    let last = p.r() - 1;
    let spec = PfqSpec::gauss(p.kernel, p.alpha, p.betas[last], p.gammas[last], p.reg)?;
    let mut gauss = ExtSeries::new(&spec, tol)?;
    let mut rel = 0.0f64;
    let x = p.xs[last];
    let rhs = fa_sum(p, last, tol, |n| {
        let f = gauss
            .eval_general(x, Some(p.alpha + n as f64), |_| 1.0)?
            .require_converged()?;
        rel = rel.max(f.abs_err / f.value.abs().max(f64::MIN_POSITIVE));
        Ok(f.value)
    })?
    .require_converged()?;
    Ok(Sides::new(
        lhs.value,
        lhs.abs_err,
        rhs.value,
        rhs.abs_err + rel * rhs.value.abs(),
    ))
}

#[cfg(test)]
mod tests;
