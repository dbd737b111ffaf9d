//! Hardy-Hilbert type inequalities whose constant is built from extended
//! Gauss functions with the exponential kernel.
//!
//! Contents: a pair of half-line integral identities for rational integrands
//! with an exponential damping factor, the weight functions on the two axes
//! with their closed forms, the constant K and a numerical checker for the
//! bilinear inequality and its single-function form.

use std::fmt;
use std::str::FromStr;

use crate::corefn::beta_classical;
use crate::error::{Error, EvalResult, Method, Result};
use crate::extbeta::RegPair;
use crate::hyp::gauss_auto;
use crate::kernel::Kernel;
use crate::quadrature::{try_integrate_halfline, try_integrate_interval, QuadResult};
use crate::variant::{Sides, Variant};

/// Relative slack granted to the computed left side of an inequality.
pub const HOLD_SLACK: f64 = 1e-9;

fn converged(r: QuadResult, what: &str) -> Result<QuadResult> {
    if r.converged {
        Ok(r)
    } else {
        Err(Error::NoConvergence(format!(
            "{what}: quadrature error {:e} after {} nodes",
            r.abs_err, r.nodes_used
        )))
    }
}

/// Which factor sets the scale of the exponential damping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RationalForm {
    /// Damping exp(−γq̃x − p̃/(γx)); the Gauss argument is (γ − α)/γ.
    GammaScaled,
    /// Damping exp(−αq̃x − p̃/(αx)); the Gauss argument is (α − γ)/α.
    AlphaScaled,
}

impl RationalForm {
    pub const ALL: [RationalForm; 2] = [RationalForm::GammaScaled, RationalForm::AlphaScaled];

    pub fn as_str(self) -> &'static str {
        match self {
            RationalForm::GammaScaled => "gamma-scaled",
            RationalForm::AlphaScaled => "alpha-scaled",
        }
    }
}

/// ∫₀^∞ x^{b−1}(1+αx)^{−a}(1+γx)^{−c}·damping dx with damping pair
/// `reg` = (p̃, q̃).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RationalIntegral {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub alpha: f64,
    pub gamma: f64,
    pub reg: RegPair,
}

impl RationalIntegral {
    pub fn new(a: f64, b: f64, c: f64, alpha: f64, gamma: f64, reg: RegPair) -> Result<Self> {
        if !(b > 0.0 && a + c > b) {
            return Err(Error::domain(format!(
                "need a + c > b > 0 (got a = {a}, b = {b}, c = {c})"
            )));
        }
        if !(alpha > 0.0 && alpha < 2.0 * gamma) {
            return Err(Error::domain(format!(
                "need 0 < alpha < 2 gamma (got {alpha}, {gamma})"
            )));
        }
        Ok(RationalIntegral {
            a,
            b,
            c,
            alpha,
            gamma,
            reg,
        })
    }
}

/// Quadrature of the left side against the closed form
/// e^{p̃+q̃}·scale^{−b}·B(b, a+c−b)·F(lead, b; a+c; z; p̃, q̃).
pub fn rational_integral_identity(form: RationalForm, ri: &RationalIntegral, tol: f64) -> Result<Sides> {
    let RationalIntegral {
        a,
        b,
        c,
        alpha,
        gamma,
        reg,
    } = *ri;
    // (scale, other, exponent on the scale factor, exponent on the other)
    let (scale, other, near, far) = match form {
        RationalForm::GammaScaled => (gamma, alpha, c, a),
        RationalForm::AlphaScaled => (alpha, gamma, a, c),
    };
    let (pt, qt) = (reg.b, reg.d);
    let lhs = try_integrate_halfline(
        |x| {
            let ln = (b - 1.0) * x.ln()
                - near * (scale * x).ln_1p()
                - far * (other * x).ln_1p()
                - scale * qt * x
                - pt / (scale * x);
            Ok(ln.exp())
        },
        tol,
    )?;
    let lhs = converged(lhs, "rational integral")?;
    let z = (scale - other) / scale;
    let f = gauss_auto(Kernel::Exponential, far, b, a + c, z, reg, true, 0.1 * tol)?;
    let factor = (pt + qt).exp() * scale.powf(-b) * beta_classical(b, a + c - b)?;
    Ok(Sides::new(lhs.value, lhs.abs_err, factor * f.value, factor * f.abs_err))
}

/// Exponents and scales of the two-factor homogeneous kernel together with
/// the damping pair (p̃, q̃).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HilbertParams {
    pub p: f64,
    pub q: f64,
    pub s1: f64,
    pub s2: f64,
    /// Scale of y in the first factor (x + scale1·y).
    pub scale1: f64,
    pub scale2: f64,
    /// Power-weight exponent on the x side.
    pub power1: f64,
    /// Power-weight exponent on the y side.
    pub power2: f64,
    pub reg: RegPair,
}

impl HilbertParams {
    /// p = q = 2, s = (1, 0), unit scales, powers 1/4 and no damping: the
    /// kernel 1/(x + y) with constant π.
    pub fn classical() -> Self {
        HilbertParams {
            p: 2.0,
            q: 2.0,
            s1: 1.0,
            s2: 0.0,
            scale1: 1.0,
            scale2: 1.0,
            power1: 0.25,
            power2: 0.25,
            reg: RegPair::ZERO,
        }
    }

    pub fn p_conj(&self) -> f64 {
        self.p / (self.p - 1.0)
    }

    pub fn q_conj(&self) -> f64 {
        self.q / (self.q - 1.0)
    }

    /// 1/p' + 1/q'.
    pub fn lambda(&self) -> f64 {
        1.0 / self.p_conj() + 1.0 / self.q_conj()
    }

    /// Open interval admissible for `power1`.
    pub fn power1_range(&self) -> (f64, f64) {
        let pc = self.p_conj();
        ((1.0 - self.s1 - self.s2) / pc, 1.0 / pc)
    }

    pub fn power2_range(&self) -> (f64, f64) {
        let qc = self.q_conj();
        ((1.0 - self.s1 - self.s2) / qc, 1.0 / qc)
    }

    /// Conditions under which the weights have their closed forms.
    pub fn validate_weights(&self) -> Result<()> {
        let finite = [
            self.p,
            self.q,
            self.s1,
            self.s2,
            self.scale1,
            self.scale2,
            self.power1,
            self.power2,
        ];
        if finite.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain("parameters must be finite"));
        }
        if !(self.p > 1.0 && self.q > 1.0) {
            return Err(Error::domain(format!("need p, q > 1 (got {}, {})", self.p, self.q)));
        }
        if !(self.s1 + self.s2 > 0.0) {
            return Err(Error::domain("need s1 + s2 > 0"));
        }
        let ratio = self.scale1 / self.scale2;
        if !(self.scale1 > 0.0 && self.scale2 > 0.0 && ratio > 0.5 && ratio < 2.0) {
            return Err(Error::domain(format!(
                "need scales > 0 with ratio in (1/2, 2) (got {ratio})"
            )));
        }
        for (name, v, (lo, hi)) in [
            ("A1", self.power1, self.power1_range()),
            ("A2", self.power2, self.power2_range()),
        ] {
            if !(v > lo && v < hi) {
                return Err(Error::domain(format!("{name} = {v} outside ({lo}, {hi})")));
            }
        }
        Ok(())
    }

    /// Weight conditions plus 1/p + 1/q ≥ 1, needed by the inequality.
    pub fn validate(&self) -> Result<()> {
        self.validate_weights()?;
        if 1.0 / self.p + 1.0 / self.q < 1.0 - 1e-12 {
            return Err(Error::domain(format!(
                "need 1/p + 1/q >= 1 (got {})",
                1.0 / self.p + 1.0 / self.q
            )));
        }
        Ok(())
    }

    /// ln of the damped kernel exp[−c(y/x + x/(s₁s₂y))]·(x+s₁y)^{−λs1}(x+s₂y)^{−λs2}
    /// where s₁, s₂ are the scales and c = scale1·q̃ + scale2·p̃.
    fn ln_kernel(&self, x: f64, y: f64) -> f64 {
        let lambda = self.lambda();
        let c = self.scale1 * self.reg.d + self.scale2 * self.reg.b;
        let damping = if c == 0.0 {
            0.0
        } else {
            -c * (y / x + x / (self.scale1 * self.scale2 * y))
        };
        damping - lambda * self.s1 * (x + self.scale1 * y).ln() - lambda * self.s2 * (x + self.scale2 * y).ln()
    }
}

/// x-side factor scale1^{A2−1/q'}·[B(1−q'A2, s1+s2+q'A2−1)·F(s2, 1−q'A2; s1+s2; z; reg)]^{1/q'}
/// with z = (scale1 − scale2)/scale1.
pub fn weight_f_factor(hp: &HilbertParams, reg: RegPair, tol: f64) -> Result<EvalResult> {
    hp.validate_weights()?;
    let qc = hp.q_conj();
    let lower = 1.0 - qc * hp.power2;
    let lead = hp.scale1.powf(hp.power2 - 1.0 / qc);
    factor(lead, hp.s2, lower, hp, reg, qc, tol)
}

/// y-side factor scale1^{−s1/p'}·scale2^{(1−s2)/p'−A1}·[B(1−p'A1, s1+s2+p'A1−1)·F(s1, 1−p'A1; s1+s2; z; reg)]^{1/p'}.
pub fn weight_g_factor(hp: &HilbertParams, reg: RegPair, tol: f64) -> Result<EvalResult> {
    hp.validate_weights()?;
    let pc = hp.p_conj();
    let lower = 1.0 - pc * hp.power1;
    let lead = hp.scale1.powf(-hp.s1 / pc) * hp.scale2.powf((1.0 - hp.s2) / pc - hp.power1);
    factor(lead, hp.s1, lower, hp, reg, pc, tol)
}

fn factor(
    lead: f64,
    first: f64,
    lower: f64,
    hp: &HilbertParams,
    reg: RegPair,
    root: f64,
    tol: f64,
) -> Result<EvalResult> {
    let total = hp.s1 + hp.s2;
    let z = (hp.scale1 - hp.scale2) / hp.scale1;
    let f = gauss_auto(Kernel::Exponential, first, lower, total, z, reg, true, 0.1 * tol)?;
    let inner = beta_classical(lower, total - lower)? * f.value;
    let value = lead * inner.powf(1.0 / root);
    Ok(EvalResult {
        value,
        abs_err: value * f.abs_err / (root * f.value.abs()),
        terms_or_nodes: f.terms_or_nodes,
        converged: f.converged,
        method: Method::ClosedForm,
    })
}

/// x-side weight from its closed form: e^{(p̃+q̃)/q'}·factor·x^{(1−s1−s2)/q'−A2}.
pub fn weight_f(hp: &HilbertParams, x: f64, tol: f64) -> Result<EvalResult> {
    check_point(x)?;
    let qc = hp.q_conj();
    let k = weight_f_factor(hp, hp.reg, tol)?;
    let scale = ((hp.reg.b + hp.reg.d) / qc).exp() * x.powf((1.0 - hp.s1 - hp.s2) / qc - hp.power2);
    Ok(k.scaled(scale))
}

/// y-side weight from its closed form: e^{(p̃+q̃)/p'}·factor·y^{(1−s1−s2)/p'−A1}.
pub fn weight_g(hp: &HilbertParams, y: f64, tol: f64) -> Result<EvalResult> {
    check_point(y)?;
    let pc = hp.p_conj();
    let k = weight_g_factor(hp, hp.reg, tol)?;
    let scale = ((hp.reg.b + hp.reg.d) / pc).exp() * y.powf((1.0 - hp.s1 - hp.s2) / pc - hp.power1);
    Ok(k.scaled(scale))
}

fn check_point(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("weight argument must be positive (got {x})")))
    }
}

fn rooted(r: QuadResult, root: f64) -> EvalResult {
    let value = r.value.powf(1.0 / root);
    EvalResult {
        value,
        abs_err: value * r.abs_err / (root * r.value.abs()),
        terms_or_nodes: r.nodes_used,
        converged: r.converged,
        method: Method::Quadrature,
    }
}

/// x-side weight by quadrature of its defining integral over y.
pub fn weight_f_direct(hp: &HilbertParams, x: f64, tol: f64) -> Result<EvalResult> {
    hp.validate_weights()?;
    check_point(x)?;
    let qc = hp.q_conj();
    let (pt, qt) = (hp.reg.b, hp.reg.d);
    let r = try_integrate_halfline(
        |y| {
            let ln = -qc * hp.power2 * y.ln()
                - hp.s1 * (x + hp.scale1 * y).ln()
                - hp.s2 * (x + hp.scale2 * y).ln()
                - hp.scale1 * qt * y / x
                - pt / hp.scale1 * x / y;
            Ok(ln.exp())
        },
        tol,
    )?;
    Ok(rooted(converged(r, "x-side weight")?, qc))
}

/// y-side weight by quadrature over x. `Printed` damps with (p̃/scale2)(y/x),
/// `Corrected` with p̃·scale2·(y/x), the form matching the closed factor.
pub fn weight_g_direct(hp: &HilbertParams, y: f64, variant: Variant, tol: f64) -> Result<EvalResult> {
    hp.validate_weights()?;
    check_point(y)?;
    let pc = hp.p_conj();
    let (pt, qt) = (hp.reg.b, hp.reg.d);
    let inner_rate = match variant {
        Variant::Printed => pt / hp.scale2,
        Variant::Corrected => pt * hp.scale2,
        other => return Err(Error::domain(format!("no {other} form of the y-side weight"))),
    };
    let r = try_integrate_halfline(
        |x| {
            let ln = -pc * hp.power1 * x.ln()
                - hp.s1 * (x + hp.scale1 * y).ln()
                - hp.s2 * (x + hp.scale2 * y).ln()
                - qt / hp.scale2 * x / y
                - inner_rate * y / x;
            Ok(ln.exp())
        },
        tol,
    )?;
    Ok(rooted(converged(r, "y-side weight")?, pc))
}

/// Axis of a weight function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightAxis {
    X,
    Y,
}

/// Direct quadrature (left) against the closed form (right).
pub fn weight_identity(hp: &HilbertParams, axis: WeightAxis, point: f64, variant: Variant, tol: f64) -> Result<Sides> {
    let (direct, closed) = match axis {
        WeightAxis::X => (weight_f_direct(hp, point, tol)?, weight_f(hp, point, tol)?),
        WeightAxis::Y => (weight_g_direct(hp, point, variant, tol)?, weight_g(hp, point, tol)?),
    };
    Ok((direct, closed).into())
}

/// K = factor_x(q'p̃, q'q̃)·factor_y(p'p̃, p'q̃).
pub fn hilbert_constant(hp: &HilbertParams, tol: f64) -> Result<EvalResult> {
    hp.validate()?;
    let f = weight_f_factor(hp, hp.reg.scaled(hp.q_conj()), tol)?;
    let g = weight_g_factor(hp, hp.reg.scaled(hp.p_conj()), tol)?;
    let value = f.value * g.value;
    Ok(EvalResult {
        value,
        abs_err: f.abs_err * g.value + g.abs_err * f.value,
        terms_or_nodes: f.terms_or_nodes + g.terms_or_nodes,
        converged: f.converged && g.converged,
        method: Method::ClosedForm,
    })
}

/// Shape of a nonnegative test function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Shape {
    /// x^k e^{−x}.
    ExpDecay { k: f64 },
    /// Smooth bump supported on [lo, hi], peak 1 at the midpoint.
    Bump { lo: f64, hi: f64 },
    /// x^σ on (0, cut], zero beyond.
    PowerCut { sigma: f64, cut: f64 },
}

/// coef · shape, with coef ≥ 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestFunction {
    pub shape: Shape,
    pub coef: f64,
}

#[derive(Debug, Clone, Copy)]
enum Support {
    HalfLine,
    Interval(f64, f64),
}

impl TestFunction {
    pub fn exp_decay(k: f64) -> Result<Self> {
        if !k.is_finite() {
            return Err(Error::domain("exp_decay exponent must be finite"));
        }
        Ok(TestFunction {
            shape: Shape::ExpDecay { k },
            coef: 1.0,
        })
    }

    pub fn bump(lo: f64, hi: f64) -> Result<Self> {
        if !(lo >= 0.0 && hi > lo && hi.is_finite()) {
            return Err(Error::domain(format!("bump needs 0 <= lo < hi (got {lo}, {hi})")));
        }
        Ok(TestFunction {
            shape: Shape::Bump { lo, hi },
            coef: 1.0,
        })
    }

    pub fn power_cut(sigma: f64, cut: f64) -> Result<Self> {
        if !(sigma.is_finite() && cut > 0.0 && cut.is_finite()) {
            return Err(Error::domain(format!(
                "power_cut needs finite sigma and cut > 0 (got {sigma}, {cut})"
            )));
        }
        Ok(TestFunction {
            shape: Shape::PowerCut { sigma, cut },
            coef: 1.0,
        })
    }

    pub fn zero() -> Self {
        TestFunction {
            shape: Shape::ExpDecay { k: 0.0 },
            coef: 0.0,
        }
    }

    pub fn scaled(self, c: f64) -> Result<Self> {
        if !(c >= 0.0 && c.is_finite()) {
            return Err(Error::domain(format!("test functions stay nonnegative (factor {c})")));
        }
        Ok(TestFunction {
            coef: self.coef * c,
            ..self
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coef == 0.0
    }

    /// ln f(x), or None where f vanishes.
    pub fn ln_value(&self, x: f64) -> Option<f64> {
        if self.coef == 0.0 || x <= 0.0 {
            return None;
        }
        let shape = match self.shape {
            Shape::ExpDecay { k } => k * x.ln() - x,
            Shape::Bump { lo, hi } => {
                if x <= lo || x >= hi {
                    return None;
                }
                let (left, right) = (x - lo, hi - x);
                let w = 4.0 * left * right / ((hi - lo) * (hi - lo));
                1.0 - 1.0 / w
            }
            Shape::PowerCut { sigma, cut } => {
                if x > cut {
                    return None;
                }
                sigma * x.ln()
            }
        };
        Some(self.coef.ln() + shape)
    }

    pub fn value(&self, x: f64) -> f64 {
        self.ln_value(x).map_or(0.0, f64::exp)
    }

    fn support(&self) -> Support {
        match self.shape {
            Shape::ExpDecay { .. } => Support::HalfLine,
            Shape::Bump { lo, hi } => Support::Interval(lo, hi),
            Shape::PowerCut { cut, .. } => Support::Interval(0.0, cut),
        }
    }

    /// Exponent of the leading power at 0, if the function does not vanish
    /// to all orders there.
    fn power_at_zero(&self) -> Option<f64> {
        match self.shape {
            Shape::ExpDecay { k } => Some(k),
            Shape::PowerCut { sigma, .. } => Some(sigma),
            Shape::Bump { .. } => None,
        }
    }

    /// ∫ x^{weight} f(x)^{power} dx.
    fn weighted_norm(&self, weight: f64, power: f64, tol: f64) -> Result<QuadResult> {
        if self.is_zero() {
            return Ok(QuadResult {
                value: 0.0,
                abs_err: 0.0,
                nodes_used: 0,
                converged: true,
            });
        }
        if let Some(k) = self.power_at_zero() {
            if weight + power * k <= -1.0 {
                return Err(Error::domain(format!(
                    "weighted norm of {self} diverges at 0 (weight exponent {weight})"
                )));
            }
        }
        let r = integrate_support(
            self.support(),
            |x| Ok(self.ln_value(x).map_or(0.0, |l| (weight * x.ln() + power * l).exp())),
            tol,
        )?;
        converged(r, "weighted norm")
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("zero");
        }
        match self.shape {
            Shape::ExpDecay { k } => write!(f, "exp_decay:{k}")?,
            Shape::Bump { lo, hi } => write!(f, "bump:{lo},{hi}")?,
            Shape::PowerCut { sigma, cut } => write!(f, "power_cut:{sigma},{cut}")?,
        }
        if self.coef != 1.0 {
            write!(f, "*{}", self.coef)?;
        }
        Ok(())
    }
}

/// Parses `zero`, `exp_decay:k`, `bump:lo,hi` or `power_cut:sigma,cut`,
/// optionally followed by `*c`.
impl FromStr for TestFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (body, coef) = match s.split_once('*') {
            Some((b, c)) => (
                b,
                c.trim()
                    .parse::<f64>()
                    .map_err(|e| Error::domain(format!("bad factor {c:?}: {e}")))?,
            ),
            None => (s, 1.0),
        };
        let body = body.trim();
        if body == "zero" {
            return Ok(TestFunction::zero());
        }
        let (name, args) = body
            .split_once(':')
            .ok_or_else(|| Error::domain(format!("bad test function {s:?}")))?;
        let nums = args
            .split(',')
            .map(|a| {
                a.trim()
                    .parse::<f64>()
                    .map_err(|e| Error::domain(format!("bad number {a:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let f = match (name.trim(), nums.as_slice()) {
            ("exp_decay", [k]) => TestFunction::exp_decay(*k)?,
            ("bump", [lo, hi]) => TestFunction::bump(*lo, *hi)?,
            ("power_cut", [sigma, cut]) => TestFunction::power_cut(*sigma, *cut)?,
            _ => return Err(Error::domain(format!("bad test function {s:?}"))),
        };
        f.scaled(coef)
    }
}

fn integrate_support(support: Support, mut f: impl FnMut(f64) -> Result<f64>, tol: f64) -> Result<QuadResult> {
    match support {
        Support::HalfLine => try_integrate_halfline(f, tol),
        Support::Interval(lo, hi) => try_integrate_interval(lo, hi, |x, _, _| f(x), tol),
    }
}

/// Both inequalities evaluated numerically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HilbertReport {
    pub constant: f64,
    /// Bilinear form and its bound.
    pub lhs: f64,
    pub lhs_err: f64,
    pub rhs: f64,
    pub margin: f64,
    pub holds: bool,
    /// Single-function form and its bound.
    pub dual_lhs: f64,
    pub dual_lhs_err: f64,
    pub dual_rhs: f64,
    pub dual_margin: f64,
    pub dual_holds: bool,
}

impl HilbertReport {
    pub fn sides(&self) -> Sides {
        Sides::new(self.lhs, self.lhs_err, self.rhs, 0.0)
    }

    pub fn dual_sides(&self) -> Sides {
        Sides::new(self.dual_lhs, self.dual_lhs_err, self.dual_rhs, 0.0)
    }
}

fn holds(lhs: f64, rhs: f64) -> bool {
    lhs <= rhs * (1.0 + HOLD_SLACK)
}

/// ∫ k(x, y) u(v) dv over the support of u, with the free variable fixed.
/// Returned as (ln scale, integral / scale) with the kernel on the diagonal
/// as scale, since the section overflows as the free variable approaches 0.
/// Accuracy is `tol` absolute in the unscaled value, or `tol` relative.
fn section(hp: &HilbertParams, u: &TestFunction, free: f64, free_is_x: bool, tol: f64) -> Result<(f64, QuadResult)> {
    let shift = hp.ln_kernel(free, free);
    let mut r = integrate_support(
        u.support(),
        |v| {
            Ok(u.ln_value(v).map_or(0.0, |l| {
                let k = if free_is_x {
                    hp.ln_kernel(free, v)
                } else {
                    hp.ln_kernel(v, free)
                };
                (k + l - shift).exp()
            }))
        },
        (tol * (-shift).exp()).clamp(f64::MIN_POSITIVE, tol),
    )?;
    r.converged |= r.abs_err <= tol * r.value.abs();
    Ok((shift, converged(r, "inner kernel integral")?))
}

/// Evaluates the bilinear inequality and its single-function form for the
/// pair (f, g). Quadrature targets absolute accuracy `tol` on each side.
pub fn hilbert_check(hp: &HilbertParams, f: &TestFunction, g: &TestFunction, tol: f64) -> Result<HilbertReport> {
    hp.validate()?;
    let (p, q, pc, qc) = (hp.p, hp.q, hp.p_conj(), hp.q_conj());
    let k = hilbert_constant(hp, tol)?.require_converged()?.value;
    let spread = 1.0 - hp.s1 - hp.s2;
    let shift = hp.power1 - hp.power2;
    let norm_f = f.weighted_norm(p / qc * spread + p * shift, p, 0.1 * tol)?;
    let norm_g = g.weighted_norm(q / pc * spread - q * shift, q, 0.1 * tol)?;
    let damping = (2.0 * (hp.reg.b + hp.reg.d)).exp();
    let rhs = damping * k * norm_f.value.powf(1.0 / p) * norm_g.value.powf(1.0 / q);
    let dual_rhs = damping * k * norm_f.value.powf(1.0 / p);

    let (lhs, lhs_err) = if f.is_zero() || g.is_zero() {
        (0.0, 0.0)
    } else {
        let mut inner_rel: f64 = 0.0;
        let outer = integrate_support(
            f.support(),
            |x| match f.ln_value(x) {
                None => Ok(0.0),
                Some(l) => {
                    let (ln_scale, s) = section(hp, g, x, true, 0.1 * tol)?;
                    if s.value <= 0.0 {
                        return Ok(0.0);
                    }
                    inner_rel = inner_rel.max(s.abs_err / s.value);
                    Ok((l + ln_scale + s.value.ln()).exp())
                }
            },
            tol,
        )?;
        let outer = converged(outer, "bilinear form")?;
        (outer.value, outer.abs_err + inner_rel * outer.value)
    };

    let (dual_lhs, dual_lhs_err) = if f.is_zero() {
        (0.0, 0.0)
    } else {
        let weight = qc * shift - qc / pc * spread;
        let mut inner_rel: f64 = 0.0;
        let outer = try_integrate_halfline(
            |y| {
                let (ln_scale, s) = section(hp, f, y, false, 0.1 * tol)?;
                if s.value <= 0.0 {
                    return Ok(0.0);
                }
                inner_rel = inner_rel.max(s.abs_err / s.value);
                Ok((weight * y.ln() + qc * (ln_scale + s.value.ln())).exp())
            },
            tol,
        )?;
        let outer = converged(outer, "single-function form")?;
        let value = outer.value.powf(1.0 / qc);
        (value, value * (outer.abs_err / (qc * outer.value) + inner_rel))
    };

    Ok(HilbertReport {
        constant: k,
        lhs,
        lhs_err,
        rhs,
        margin: rhs - lhs,
        holds: holds(lhs, rhs),
        dual_lhs,
        dual_lhs_err,
        dual_rhs,
        dual_margin: dual_rhs - dual_lhs,
        dual_holds: holds(dual_lhs, dual_rhs),
    })
}

#[cfg(test)]
mod tests;
