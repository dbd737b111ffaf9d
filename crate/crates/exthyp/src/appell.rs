//! Extended Appell functions F1 and F2.

use crate::corefn::{binomial, pochhammer, SERIES_CAP, SERIES_EPS};
use crate::error::{Error, EvalResult, Method, Result};
use crate::extbeta::{beta_norm, beta_weight, RegPair};
use crate::hyp::{BetaRatios, CachedEval, GaussParams, Pair, PfqSpec};
use crate::kernel::Kernel;
use crate::quadrature::{try_integrate_unit, SampledUnit};
use crate::variant::{Sides, Variant};

/// Parameters shared by F1 (which ignores `gamma2`) and F2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AppellParams {
    pub kernel: Kernel,
    pub alpha: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub gamma1: f64,
    pub gamma2: f64,
    pub reg: RegPair,
}

impl AppellParams {
    pub fn f1(kernel: Kernel, alpha: f64, beta1: f64, beta2: f64, gamma: f64, reg: RegPair) -> Self {
        AppellParams {
            kernel,
            alpha,
            beta1,
            beta2,
            gamma1: gamma,
            gamma2: f64::NAN,
            reg,
        }
    }

    pub fn f2(kernel: Kernel, alpha: f64, beta1: f64, beta2: f64, gamma1: f64, gamma2: f64, reg: RegPair) -> Self {
        AppellParams {
            kernel,
            alpha,
            beta1,
            beta2,
            gamma1,
            gamma2,
            reg,
        }
    }

    fn check_f1(&self) -> Result<()> {
        if !(self.gamma1 > self.alpha && self.alpha > 0.0) {
            return Err(Error::domain(format!(
                "F1 needs gamma > alpha > 0 (got {}, {})",
                self.gamma1, self.alpha
            )));
        }
        Ok(())
    }

    fn check_f2(&self) -> Result<()> {
        if !(self.gamma1 > self.beta1 && self.beta1 > 0.0 && self.gamma2 > self.beta2 && self.beta2 > 0.0) {
            return Err(Error::domain("F2 needs gamma1 > beta1 > 0 and gamma2 > beta2 > 0"));
        }
        Ok(())
    }
}

/// Running sum over anti-diagonals m + n = N of a double series. Stops when
/// three consecutive diagonals have absolute mass below the relative
/// threshold, with a geometric tail bound on the diagonal masses.
pub(crate) struct DiagonalSum {
    sum: f64,
    mass: Vec<f64>,
    small_run: u32,
    max_term: f64,
}

impl DiagonalSum {
    pub(crate) fn new() -> Self {
        DiagonalSum {
            sum: 0.0,
            mass: Vec::new(),
            small_run: 0,
            max_term: 0.0,
        }
    }

    pub(crate) fn push(&mut self, diag_sum: f64, diag_mass: f64, max_term: f64) -> bool {
        self.sum += diag_sum;
        self.mass.push(diag_mass);
        self.max_term = self.max_term.max(max_term);
        if diag_mass <= SERIES_EPS * self.sum.abs() {
            self.small_run += 1;
        } else {
            self.small_run = 0;
        }
        self.small_run >= 3
    }

    pub(crate) fn finish(self, stopped: bool, coeff_err: f64, method: Method) -> Result<EvalResult> {
        if !self.sum.is_finite() {
            return Err(Error::NoConvergence("double series overflow".into()));
        }
        let n = self.mass.len();
        let tail = if n >= 2 && self.mass[n - 1] == 0.0 {
            Some(0.0)
        } else if n >= 2 && self.mass[n - 2] > 0.0 {
            let r = self.mass[n - 1] / self.mass[n - 2];
            (r < 0.99).then(|| self.mass[n - 1] * r / (1.0 - r))
        } else {
            None
        };
        Ok(EvalResult {
            value: self.sum,
            abs_err: tail.unwrap_or(f64::INFINITY) + coeff_err + 4.0 * f64::EPSILON * (self.max_term + self.sum.abs()),
            terms_or_nodes: n,
            converged: stopped && tail.is_some(),
            method,
        })
    }
}

/// F1 double series, summed by total degree with one shared coefficient
/// family B_{b,d}(α + N, γ − α)/B(α, γ − α).
pub fn f1_series(p: &AppellParams, x: f64, y: f64, tol: f64) -> Result<EvalResult> {
    p.check_f1()?;
    if !(x.abs() < 1.0 && y.abs() < 1.0) {
        return Err(Error::domain(format!(
            "F1 series needs max(|x|, |y|) < 1 (got {x}, {y})"
        )));
    }
    let mut coeff = BetaRatios::new(
        p.kernel,
        Pair {
            alpha: p.alpha,
            k: 1,
            beta: p.gamma1,
        },
        p.reg,
        true,
        tol,
    )?;
    let mut acc = DiagonalSum::new();
    let mut coeff_err = 0.0;
    let mut stopped = false;
    // row[m] = (β1)_m (β2)_{N−m} x^m y^{N−m} / (m! (N−m)!), updated per N.
    let mut row = vec![1.0f64];
    for nn in 0..SERIES_CAP {
        let (c, ce) = coeff.get(nn)?;
        let s: f64 = row.iter().sum();
        let mass: f64 = row.iter().map(|v| v.abs()).sum();
        let big = row.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        coeff_err += mass * ce;
        stopped = acc.push(c * s, c.abs() * mass, c.abs() * big);
        if stopped {
            break;
        }
        let nf = nn as f64;
        let mut next = Vec::with_capacity(row.len() + 1);
        // m = 0: raise n from N to N + 1
        next.push(row[0] * (p.beta2 + nf) * y / (nf + 1.0));
        for (m, &v) in row.iter().enumerate() {
            let mf = m as f64;
            next.push(v * (p.beta1 + mf) * x / (mf + 1.0));
        }
        row = next;
    }
    acc.finish(stopped, coeff_err, Method::Series)
}

/// F1 by its single Euler integral; valid for x < 1, y < 1.
pub fn f1_integral(p: &AppellParams, x: f64, y: f64, tol: f64) -> Result<EvalResult> {
    p.check_f1()?;
    if !(x < 1.0 && y < 1.0) {
        return Err(Error::domain(format!(
            "F1 integral needs x < 1 and y < 1 (got {x}, {y})"
        )));
    }
    let norm = beta_norm(p.alpha, p.gamma1 - p.alpha, true)?;
    let q = try_integrate_unit(
        |t, tc| {
            let w = beta_weight(&p.kernel, p.reg, p.alpha, p.gamma1 - p.alpha, t, tc)?;
            if w == 0.0 {
                return Ok(0.0);
            }
            let lx = (tc + (1.0 - x) * t).ln();
            let ly = (tc + (1.0 - y) * t).ln();
            Ok(w * (-p.beta1 * lx - p.beta2 * ly).exp())
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

/// F1 with the series inside max(|x|, |y|) ≤ 0.85 and the integral elsewhere.
pub fn f1_auto(p: &AppellParams, x: f64, y: f64, tol: f64) -> Result<EvalResult> {
    let r = if x.abs().max(y.abs()) <= crate::hyp::SERIES_RADIUS {
        f1_series(p, x, y, tol)?
    } else {
        f1_integral(p, x, y, tol)?
    };
    r.require_converged()
}

/// Right side of the F1 reflection t → 1 − t:
///
/// * `Printed`: (1−x)^{−β1}(1−y)^{−β2} F1(α, β1, β2; γ; x/(x−1), y/(y−1); d, b)
/// * `Proof`: (1−x)^{−β1}(1−y)^{+β2} F1(γ−α, β1, β2; γ; x/(x−1), y/(y−1); d, b)
/// * `Corrected`: (1−x)^{−β1}(1−y)^{−β2} F1(γ−α, β1, β2; γ; x/(x−1), y/(y−1); d, b)
pub fn f1_transform(p: &AppellParams, x: f64, y: f64, variant: Variant, tol: f64) -> Result<EvalResult> {
    if !(x < 1.0 && y < 1.0) {
        return Err(Error::domain("F1 transformation needs x < 1 and y < 1"));
    }
    let (first, y_sign) = match variant {
        Variant::Printed => (p.alpha, -1.0),
        Variant::Proof => (p.gamma1 - p.alpha, 1.0),
        Variant::Corrected => (p.gamma1 - p.alpha, -1.0),
        v => {
            return Err(Error::domain(format!(
                "variant {v} not defined for the F1 transformation"
            )))
        }
    };
    let q = AppellParams {
        alpha: first,
        reg: p.reg.swapped(),
        ..*p
    };
    let r = f1_auto(&q, x / (x - 1.0), y / (y - 1.0), tol)?;
    Ok(r.scaled((1.0 - x).powf(-p.beta1) * (1.0 - y).powf(y_sign * p.beta2)))
}

/// F2 double series with per-axis coefficient families, summed by total
/// degree N as (α)_N/N! · Σ_m C(N, m) c1_m x^m c2_{N−m} y^{N−m}.
pub fn f2_series(p: &AppellParams, x: f64, y: f64, tol: f64) -> Result<EvalResult> {
    p.check_f2()?;
    if !(x.abs() + y.abs() < 1.0) {
        return Err(Error::domain(format!("F2 series needs |x| + |y| < 1 (got {x}, {y})")));
    }
    let mut cx = BetaRatios::new(
        p.kernel,
        Pair {
            alpha: p.beta1,
            k: 1,
            beta: p.gamma1,
        },
        p.reg,
        true,
        tol,
    )?;
    let mut cy = BetaRatios::new(
        p.kernel,
        Pair {
            alpha: p.beta2,
            k: 1,
            beta: p.gamma2,
        },
        p.reg,
        true,
        tol,
    )?;
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut acc = DiagonalSum::new();
    let mut coeff_err = 0.0;
    let mut stopped = false;
    let mut lead = 1.0;
    let (mut px, mut py) = (1.0f64, 1.0f64);
    // C(N, m) stays finite up to N = 1000
    for nn in 0..=SERIES_CAP.min(1000) {
        let (a, ae) = cx.get(nn)?;
        let (b, be) = cy.get(nn)?;
        if nn > 0 {
            px *= x;
            py *= y;
        }
        xs.push((a * px, (a.abs() + ae) * px.abs()));
        ys.push((b * py, (b.abs() + be) * py.abs()));
        let (mut s, mut mass, mut big, mut err) = (0.0, 0.0, 0.0f64, 0.0);
        let mut binom = 1.0;
        for m in 0..=nn {
            let (u, ub) = xs[m];
            let (v, vb) = ys[nn - m];
            let term = lead * binom * u * v;
            s += term;
            mass += term.abs();
            big = big.max(term.abs());
            err += lead.abs() * binom * (ub * vb - (u * v).abs());
            binom = binom * (nn - m) as f64 / (m + 1) as f64;
        }
        coeff_err += err;
        stopped = acc.push(s, mass, big);
        if stopped {
            break;
        }
        lead *= (p.alpha + nn as f64) / (nn + 1) as f64;
    }
    acc.finish(stopped, coeff_err, Method::Series)
}

/// F2 by its iterated double Euler integral. The inner weight is sampled
/// once and reused for every outer node; the inner tolerance is a tenth of
/// the outer one.
pub fn f2_integral(p: &AppellParams, x: f64, y: f64, tol: f64) -> Result<EvalResult> {
    p.check_f2()?;
    if !(x.max(0.0) + y.max(0.0) < 1.0) {
        return Err(Error::domain(format!(
            "F2 integral needs 1 − x t − y s > 0 on the unit square (got {x}, {y})"
        )));
    }
    let n1 = beta_norm(p.beta1, p.gamma1 - p.beta1, true)?;
    let n2 = beta_norm(p.beta2, p.gamma2 - p.beta2, true)?;
    let mut inner = SampledUnit::new();
    let mut inner_err = 0.0f64;
    let mut inner_ok = true;
    let q = try_integrate_unit(
        |t, tc| {
            let w = beta_weight(&p.kernel, p.reg, p.beta1, p.gamma1 - p.beta1, t, tc)?;
            if w == 0.0 {
                return Ok(0.0);
            }
            // 1 − x t − y s = base − y s with base = 1 − x t.
            let base = tc + (1.0 - x) * t;
            let (v, e, _, conv) = inner.integrate(
                |s, sc| beta_weight(&p.kernel, p.reg, p.beta2, p.gamma2 - p.beta2, s, sc),
                |s, sc, g| {
                    let arg = if y >= 0.0 { base - y + y * sc } else { base - y * s };
                    g * (-p.alpha * arg.ln()).exp()
                },
                0.1 * tol * n2,
            )?;
            inner_ok &= conv;
            inner_err = inner_err.max(e / v.abs().max(f64::MIN_POSITIVE));
            Ok(w * v)
        },
        tol * n1 * n2,
    )?;
    let value = q.value / (n1 * n2);
    Ok(EvalResult {
        value,
        abs_err: q.abs_err / (n1 * n2) + inner_err * value.abs(),
        terms_or_nodes: q.nodes_used,
        converged: q.converged && inner_ok,
        method: Method::Quadrature,
    })
}

/// F2 by one quadrature over t of an inner extended Gauss function at
/// y/(1 − x t).
pub fn f2_single_integral(p: &AppellParams, x: f64, y: f64, tol: f64) -> Result<EvalResult> {
    p.check_f2()?;
    if !(x < 1.0) {
        return Err(Error::domain("F2 single integral needs x < 1"));
    }
    let n1 = beta_norm(p.beta1, p.gamma1 - p.beta1, true)?;
    let spec = PfqSpec::gauss(p.kernel, p.alpha, p.beta2, p.gamma2, p.reg)?;
    let mut inner = CachedEval::new(&spec, false, 0.1 * tol)?;
    let mut rel = 0.0f64;
    let q = try_integrate_unit(
        |t, tc| {
            let w = beta_weight(&p.kernel, p.reg, p.beta1, p.gamma1 - p.beta1, t, tc)?;
            if w == 0.0 {
                return Ok(0.0);
            }
            let base = tc + (1.0 - x) * t;
            let arg = y / base;
            if !(arg.abs() < 1.0 || arg <= 1.0) {
                return Err(Error::domain(format!("inner argument {arg} leaves the Gauss domain")));
            }
            let f = inner.eval(arg)?;
            rel = rel.max(f.abs_err / f.value.abs().max(f64::MIN_POSITIVE));
            Ok(w * (-p.alpha * base.ln()).exp() * f.value)
        },
        tol * n1,
    )?;
    let value = q.value / n1;
    Ok(EvalResult {
        value,
        abs_err: q.abs_err / n1 + rel * value.abs(),
        terms_or_nodes: q.nodes_used,
        converged: q.converged,
        method: Method::EulerIntegral,
    })
}

/// F2 with the series inside |x| + |y| ≤ 0.85 and the double integral elsewhere.
pub fn f2_auto(p: &AppellParams, x: f64, y: f64, tol: f64) -> Result<EvalResult> {
    let r = if x.abs() + y.abs() <= crate::hyp::SERIES_RADIUS {
        f2_series(p, x, y, tol)?
    } else {
        f2_integral(p, x, y, tol)?
    };
    r.require_converged()
}

/// Reflection formulas for F2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum F2Transform {
    /// t → 1 − t (needs b = d).
    FirstAxis,
    /// s → 1 − s (needs b = d).
    SecondAxis,
    /// both axes (needs b = d).
    BothAxes,
    /// both axes with the regularization pair swapped; any (b, d).
    BothAxesSwapped,
}

impl F2Transform {
    pub const ALL: [F2Transform; 4] = [
        F2Transform::FirstAxis,
        F2Transform::SecondAxis,
        F2Transform::BothAxes,
        F2Transform::BothAxesSwapped,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            F2Transform::FirstAxis => "f2-reflect-x",
            F2Transform::SecondAxis => "f2-reflect-y",
            F2Transform::BothAxes => "f2-reflect-xy",
            F2Transform::BothAxesSwapped => "f2-reflect-xy-swapped",
        }
    }
}

/// Both sides of an F2 reflection formula.
pub fn f2_transform(p: &AppellParams, x: f64, y: f64, which: F2Transform, tol: f64) -> Result<Sides> {
    if which != F2Transform::BothAxesSwapped && p.reg.b != p.reg.d {
        return Err(Error::domain("this F2 reflection needs b = d"));
    }
    let lhs = f2_auto(p, x, y, tol)?;
    let (pre, q, u, v) = match which {
        F2Transform::FirstAxis => (
            (1.0 - x).powf(-p.alpha),
            AppellParams {
                beta1: p.gamma1 - p.beta1,
                ..*p
            },
            x / (x - 1.0),
            -y / (x - 1.0),
        ),
        F2Transform::SecondAxis => (
            (1.0 - y).powf(-p.alpha),
            AppellParams {
                beta2: p.gamma2 - p.beta2,
                ..*p
            },
            -x / (y - 1.0),
            y / (y - 1.0),
        ),
        F2Transform::BothAxes | F2Transform::BothAxesSwapped => {
            let w = 1.0 - x - y;
            (
                w.powf(-p.alpha),
                AppellParams {
                    beta1: p.gamma1 - p.beta1,
                    beta2: p.gamma2 - p.beta2,
                    reg: p.reg.swapped(),
                    ..*p
                },
                -x / w,
                -y / w,
            )
        }
    };
    let rhs = f2_auto(&q, u, v, tol)?.scaled(pre);
    Ok((lhs, rhs).into())
}

/// Parameter-shift recursions of F2 in its second axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum F2Recursion {
    /// β2 → β2 + n.
    Beta2Shift,
    /// γ2 → γ2 + n.
    Gamma2Shift,
}

impl F2Recursion {
    pub fn as_str(self) -> &'static str {
        match self {
            F2Recursion::Beta2Shift => "f2-beta2-shift",
            F2Recursion::Gamma2Shift => "f2-gamma2-shift",
        }
    }
}

/// Both sides of an F2 recursion. `Beta2Shift` sums i = 1..n (`Printed`)
/// or i = 0..n (`Proof`).
pub fn f2_recursion(
    p: &AppellParams,
    n: u32,
    which: F2Recursion,
    x: f64,
    y: f64,
    variant: Variant,
    tol: f64,
) -> Result<Sides> {
    let nf = n as f64;
    let mut rhs = 0.0;
    let mut rhs_err = 0.0;
    let lhs = match which {
        F2Recursion::Beta2Shift => {
            let first = match variant {
                Variant::Printed => 1,
                Variant::Proof => 0,
                v => return Err(Error::domain(format!("variant {v} not defined for this recursion"))),
            };
            let lhs = f2_auto(
                &AppellParams {
                    beta2: p.beta2 + nf,
                    ..*p
                },
                x,
                y,
                tol,
            )?;
            let w = p.gamma2 - p.beta2;
            let pre = pochhammer(w, 2 * n) / (pochhammer(w, n) * pochhammer(p.beta2, n));
            let mut fact = 1.0;
            for i in 0..=n {
                if i > 0 {
                    fact *= i as f64;
                }
                if i < first {
                    continue;
                }
                let s = (i + n) as f64;
                let c = pre * pochhammer(-nf, i) * pochhammer(p.beta2, i + n) / (pochhammer(p.gamma2, i + n) * fact);
                let r = f2_auto(
                    &AppellParams {
                        beta2: p.beta2 + s,
                        gamma2: p.gamma2 + s,
                        ..*p
                    },
                    x,
                    y,
                    tol,
                )?;
                rhs += c * r.value;
                rhs_err += c.abs() * r.abs_err;
            }
            lhs
        }
        F2Recursion::Gamma2Shift => {
            let lhs = f2_auto(
                &AppellParams {
                    gamma2: p.gamma2 + nf,
                    ..*p
                },
                x,
                y,
                tol,
            )?;
            let pre = pochhammer(p.gamma2, n) / pochhammer(p.gamma2 - p.beta2, n);
            for k in 0..=n {
                let kf = k as f64;
                let c =
                    pre * binomial(nf, k) * (-1f64).powi(k as i32) * pochhammer(p.beta2, k) / pochhammer(p.gamma2, k);
                let r = f2_auto(
                    &AppellParams {
                        beta2: p.beta2 + kf,
                        gamma2: p.gamma2 + kf,
                        ..*p
                    },
                    x,
                    y,
                    tol,
                )?;
                rhs += c * r.value;
                rhs_err += c.abs() * r.abs_err;
            }
            lhs
        }
    };
    Ok(Sides::new(lhs.value, lhs.abs_err, rhs, rhs_err))
}

/// X^s Y^t written as partial fractions in X = 1/(1 − u x), Y = 1/(1 − u y):
/// A^s Σ_{j<t} C(j+s−1, s−1) B^j Y^{t−j} + B^t Σ_{k<s} C(k+t−1, t−1) A^k X^{s−k},
/// with A = y/(y − x), B = x/(x − y).
pub fn partial_fraction_power_expansion(s: u32, t: u32, u: f64, x: f64, y: f64) -> Result<f64> {
    if s == 0 || t == 0 {
        return Err(Error::domain("expansion needs s, t >= 1"));
    }
    if x == y {
        return Err(Error::domain("expansion needs x != y"));
    }
    let (a, b) = (y / (y - x), x / (x - y));
    let (big_x, big_y) = (1.0 / (1.0 - u * x), 1.0 / (1.0 - u * y));
    let mut first = 0.0;
    for j in 0..t {
        first += binomial((j + s - 1) as f64, s - 1) * b.powi(j as i32) * big_y.powi((t - j) as i32);
    }
    let mut second = 0.0;
    for k in 0..s {
        second += binomial((k + t - 1) as f64, t - 1) * a.powi(k as i32) * big_x.powi((s - k) as i32);
    }
    Ok(a.powi(s as i32) * first + b.powi(t as i32) * second)
}

/// Finite-sum form of F1(1, s+1, t+1; 2; x, y) built from extended Gauss values
/// F(n, 1; 2; ·).
///
/// * `Proof`: A^{s+1} Σ_{j≤t} C(j+s, s) B^j F(t−j+1; y) + B^{t+1} Σ_{k≤s} C(k+t, t) A^k F(s−k+1; x)
/// * `Printed`: the expanded form with (y − x) powers in both sums and the
///   bracket {y F(1; y) + x F(1; x)}
/// * `MinusBrace`: `Printed` with the bracket {y F(1; y) − x F(1; x)}
pub fn f1_finite_sum(
    kernel: Kernel,
    s: u32,
    t: u32,
    x: f64,
    y: f64,
    reg: RegPair,
    variant: Variant,
    tol: f64,
) -> Result<EvalResult> {
    if x == y {
        return Err(Error::domain("finite sum needs x != y"));
    }
    if !(x.abs() < 1.0 && y.abs() < 1.0) {
        return Err(Error::domain("finite sum needs |x| < 1 and |y| < 1"));
    }
    let gauss = |n: u32, z: f64| GaussParams::new(kernel, n as f64, 1.0, 2.0, reg).eval(z, tol);
    let mut total = 0.0;
    let mut err = 0.0;
    let mut add = |c: f64, r: EvalResult| {
        total += c * r.value;
        err += c.abs() * r.abs_err;
    };
    let d = y - x;
    match variant {
        Variant::Proof => {
            let (a, b) = (y / d, -x / d);
            for j in 0..=t {
                add(
                    a.powi(s as i32 + 1) * binomial((j + s) as f64, s) * b.powi(j as i32),
                    gauss(t - j + 1, y)?,
                );
            }
            for k in 0..=s {
                add(
                    b.powi(t as i32 + 1) * binomial((k + t) as f64, t) * a.powi(k as i32),
                    gauss(s - k + 1, x)?,
                );
            }
        }
        Variant::Printed | Variant::MinusBrace => {
            for j in 0..t {
                let c = y.powi(s as i32 + 1) * binomial((j + s) as f64, s) * (-x).powi(j as i32)
                    / d.powi((j + s + 1) as i32);
                add(c, gauss(t - j + 1, y)?);
            }
            for k in 0..s {
                let c = x.powi(t as i32 + 1) * binomial((k + t) as f64, t) * (-y).powi(k as i32)
                    / d.powi((k + t + 1) as i32);
                add(c, gauss(s - k + 1, x)?);
            }
            let c = binomial((t + s) as f64, s) * (-1f64).powi(t as i32) * x.powi(t as i32) * y.powi(s as i32)
                / d.powi((t + s + 1) as i32);
            let sign = if variant == Variant::Printed { 1.0 } else { -1.0 };
            add(c * y, gauss(1, y)?);
            add(c * sign * x, gauss(1, x)?);
        }
        v => return Err(Error::domain(format!("variant {v} not defined for the finite sum"))),
    }
    Ok(EvalResult {
        value: total,
        abs_err: err,
        terms_or_nodes: (s + t + 2) as usize,
        converged: true,
        method: Method::ClosedForm,
    })
}

/// Unregularized closed form of F1(1, s+1, t+1; 2; x, y) with logarithms.
pub fn f1_finite_sum_log(s: u32, t: u32, x: f64, y: f64) -> Result<f64> {
    if x == y {
        return Err(Error::domain("closed form needs x != y"));
    }
    let (si, ti) = (s as i32, t as i32);
    let mut v = (-x).powi(ti) * y.powi(si) / (y - x).powi(si + ti + 1)
        * binomial((s + t) as f64, s)
        * ((1.0 - x).ln() - (1.0 - y).ln());
    for j in 0..t {
        let ji = j as i32;
        v -= binomial((j + s) as f64, s) * (-x).powi(ji) * y.powi(si) * (1.0 - (1.0 - y).powi(ji - ti))
            / ((y - x).powi(si + ji + 1) * (t - j) as f64);
    }
    for k in 0..s {
        let ki = k as i32;
        v -= binomial((k + t) as f64, t) * x.powi(ti) * (-y).powi(ki) * (1.0 - (1.0 - x).powi(ki - si))
            / ((x - y).powi(ti + ki + 1) * (s - k) as f64);
    }
    Ok(v)
}
