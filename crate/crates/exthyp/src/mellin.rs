//! Mellin-Barnes contour evaluation of extended pFq on the negative axis.

use num_complex::Complex64;

use crate::corefn::{beta_classical, ln_gamma, ln_gamma_real};
use crate::error::{Error, EvalResult, Method, Result};
use crate::extbeta::{beta_weight, ComplexShiftBeta};
use crate::hyp::PfqSpec;
use crate::quadrature::try_integrate_unit;

/// Distance kept between the abscissa and any pole.
pub const POLE_MARGIN: f64 = 1e-3;
const MAX_TAIL_DOUBLINGS: u32 = 4;

/// Vertical line s = c0 + iτ, |τ| ≤ T, sampled with step h.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourSpec {
    pub c0: f64,
    pub half_height: f64,
    pub step: f64,
}

impl ContourSpec {
    pub fn new(c0: f64, half_height: f64, step: f64) -> Result<Self> {
        if !(half_height > 0.0 && step > 0.0 && c0.is_finite()) {
            return Err(Error::domain("contour needs T > 0, h > 0 and finite c0"));
        }
        let n = half_height / step;
        if (n - n.round()).abs() > 1e-9 * n || n.round() < 100.0 {
            return Err(Error::domain(format!("T/h must be an integer >= 100 (got {n})")));
        }
        Ok(ContourSpec { c0, half_height, step })
    }

    /// T = 40, h = 0.05 and c0 a quarter of the admissible strip (capped at 1).
    pub fn default_for(spec: &PfqSpec) -> Result<Self> {
        let upper = admissible_bound(spec);
        ContourSpec::new(0.25 * upper.min(1.0), 40.0, 0.05)
    }

    fn points(&self) -> usize {
        (self.half_height / self.step).round() as usize
    }
}

/// Supremum of admissible abscissae: Γ(α₁ − s) poles for p = q + 1, and for
/// each pair the abscissa where B_{b,d}(α − s, ·) stops existing.
pub fn admissible_bound(spec: &PfqSpec) -> f64 {
    let mut bound = f64::INFINITY;
    if let Some((a1, _)) = spec.lead() {
        bound = bound.min(a1);
    }
    for pair in spec.pairs() {
        let limit = if spec.reg.b == 0.0 {
            pair.alpha
        } else {
            match spec.kernel.algebraic_decay() {
                Some(order) => pair.alpha + order,
                None => f64::INFINITY,
            }
        };
        bound = bound.min(limit);
    }
    bound
}

/// B_{b,d}(α − s, β − α)/B(α, β − α) along the contour.
enum ShiftedRatio {
    Classical {
        alpha: f64,
        beta: f64,
        ln_norm: f64,
    },
    Extended {
        family: ComplexShiftBeta,
        norm: f64,
        bound: f64,
    },
}

impl ShiftedRatio {
    fn new(spec: &PfqSpec, alpha: f64, beta: f64, c0: f64, tol: f64) -> Result<Self> {
        let norm = beta_classical(alpha, beta - alpha)?;
        if spec.reg.is_zero() {
            let (lb, _) = ln_gamma_real(beta)?;
            let (la, _) = ln_gamma_real(alpha)?;
            return Ok(ShiftedRatio::Classical {
                alpha,
                beta,
                ln_norm: lb - la,
            });
        }
        let (kernel, reg) = (spec.kernel, spec.reg);
        let bound = try_integrate_unit(
            |t, tc| Ok(beta_weight(&kernel, reg, alpha - c0, beta - alpha, t, tc)?.abs()),
            tol * norm,
        )?;
        Ok(ShiftedRatio::Extended {
            family: ComplexShiftBeta::new(kernel, alpha, beta - alpha, reg)?,
            norm,
            bound: (bound.value + bound.abs_err) / norm,
        })
    }

    /// Upper bound for the modulus on the contour, used to skip negligible nodes.
    fn bound(&self, s: Complex64) -> Result<f64> {
        match self {
            ShiftedRatio::Classical { .. } => Ok(self.eval_classical(s)?.norm()),
            ShiftedRatio::Extended { bound, .. } => Ok(*bound),
        }
    }

    fn eval_classical(&self, s: Complex64) -> Result<Complex64> {
        match self {
            ShiftedRatio::Classical { alpha, beta, ln_norm } => {
                let ln =
                    ln_gamma(Complex64::new(*alpha, 0.0) - s)? - ln_gamma(Complex64::new(*beta, 0.0) - s)? + ln_norm;
                Ok(ln.exp())
            }
            ShiftedRatio::Extended { .. } => unreachable!("closed form only for the classical ratio"),
        }
    }

    /// Value and absolute error at s, with absolute tolerance `tol` on the ratio.
    fn eval(&mut self, s: Complex64, tol: f64) -> Result<(Complex64, f64)> {
        match self {
            ShiftedRatio::Classical { .. } => Ok((self.eval_classical(s)?, 0.0)),
            ShiftedRatio::Extended { family, norm, .. } => {
                let r = family.eval(s, tol * *norm)?;
                if !r.converged {
                    return Err(Error::NoConvergence(format!("contour beta at s = {s}")));
                }
                Ok((r.value / *norm, r.abs_err / *norm))
            }
        }
    }
}

struct Integrand<'a> {
    spec: &'a PfqSpec,
    ratios: Vec<ShiftedRatio>,
    ln_minus_z: f64,
    c0: f64,
    skip_below: f64,
    ratio_err: f64,
}

impl Integrand<'_> {
    /// Γ-factor times (−z)^{−s}, in logarithmic form.
    fn ln_gamma_part(&self, s: Complex64) -> Result<Complex64> {
        let mut ln = ln_gamma(s)? - s * self.ln_minus_z;
        let spec = self.spec;
        if let Some((a1, _)) = spec.lead() {
            ln += ln_gamma(Complex64::new(a1, 0.0) - s)? - ln_gamma_real(a1)?.0;
        }
        for &b in spec.free_lower() {
            ln += ln_gamma_real(b)?.0 - ln_gamma(Complex64::new(b, 0.0) - s)?;
        }
        Ok(ln)
    }

    fn at(&mut self, tau: f64) -> Result<Complex64> {
        let s = Complex64::new(self.c0, tau);
        let g = self.ln_gamma_part(s)?.exp();
        let mut bounds = Vec::with_capacity(self.ratios.len());
        for r in &self.ratios {
            bounds.push(r.bound(s)?);
        }
        let total: f64 = g.norm() * bounds.iter().product::<f64>();
        if total < self.skip_below {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let mut v = g;
        for (j, r) in self.ratios.iter_mut().enumerate() {
            let others = total / bounds[j].max(f64::MIN_POSITIVE);
            let (w, e) = r.eval(s, self.skip_below / others.max(f64::MIN_POSITIVE))?;
            self.ratio_err += others * e;
            v *= w;
        }
        Ok(v)
    }
}

/// Sum over τ = k·step, k = 1..=n, of Re f(τ), starting at `offset` steps.
fn half_sum(f: &mut Integrand<'_>, step: f64, offset: f64, n: usize) -> Result<f64> {
    let mut acc = 0.0;
    for k in 0..n {
        acc += f.at((k as f64 + offset) * step)?.re;
    }
    Ok(acc)
}

/// pFq at z < 0 by the Mellin-Barnes integral, trapezoid rule on the vertical
/// line. The error estimate combines the step-halving difference with the
/// integrand modulus at |τ| = T.
pub fn mb_eval(spec: &PfqSpec, z: f64, contour: ContourSpec, tol: f64) -> Result<EvalResult> {
    if !(z < 0.0) {
        return Err(Error::domain(format!("contour evaluation needs z < 0 (got {z})")));
    }
    if spec.p() > spec.q() + 1 {
        return Err(Error::domain("contour evaluation needs p <= q + 1"));
    }
    if spec.upper.iter().any(|&(_, k)| k != 1) {
        return Err(Error::domain("contour evaluation needs unit strides"));
    }
    spec.validate()?;
    let c0 = contour.c0;
    if c0 < POLE_MARGIN {
        return Err(Error::Pole(0.0));
    }
    let bound = admissible_bound(spec);
    if c0 > bound - POLE_MARGIN {
        return Err(Error::Pole(bound));
    }
    let ratios = spec
        .pairs()
        .iter()
        .map(|pair| ShiftedRatio::new(spec, pair.alpha, pair.beta, c0, tol))
        .collect::<Result<Vec<_>>>()?;
    let mut f = Integrand {
        spec,
        ratios,
        ln_minus_z: (-z).ln(),
        c0,
        skip_below: 1e-3 * tol,
        ratio_err: 0.0,
    };

    let mut step = contour.step;
    let mut n = contour.points();
    let f0 = f.at(0.0)?.re;
    let mut coarse = half_sum(&mut f, step, 1.0, n)?;
    let mut tail = f.at(n as f64 * step)?.norm();
    let mut doublings = 0;
    while tail > tol {
        if doublings == MAX_TAIL_DOUBLINGS {
            return Err(Error::NoConvergence(format!(
                "contour integrand not decayed at T = {} (modulus {tail:e})",
                n as f64 * step
            )));
        }
        coarse += half_sum(&mut f, step, (n + 1) as f64, n)?;
        n *= 2;
        tail = f.at(n as f64 * step)?.norm();
        doublings += 1;
    }
    let scale = 1.0 / std::f64::consts::PI;
    let coarse_value = scale * step * (0.5 * f0 + coarse);
    let mid = half_sum(&mut f, step, 0.5, n)?;
    step *= 0.5;
    let fine_value = scale * step * (0.5 * f0 + coarse + mid);
    let abs_err = (fine_value - coarse_value).abs() + scale * tail + scale * f.ratio_err * step * 2.0;
    Ok(EvalResult {
        value: fine_value,
        abs_err,
        terms_or_nodes: 4 * n + 1,
        converged: abs_err <= tol.max(1e-14 * fine_value.abs()) * 10.0,
        method: Method::MellinBarnes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corefn::kummer_1f1;
    use crate::extbeta::RegPair;
    use crate::hyp::ext_2f1;
    use crate::kernel::Kernel;

    const TOL: f64 = 1e-10;

    fn reg(b: f64, d: f64) -> RegPair {
        RegPair::new(b, d).unwrap()
    }

    #[test]
    fn classical_log_case() {
        let spec = PfqSpec::gauss(Kernel::Exponential, 1.0, 1.0, 2.0, RegPair::ZERO).unwrap();
        let c = ContourSpec::default_for(&spec).unwrap();
        assert_eq!(c.c0, 0.25);
        let r = mb_eval(&spec, -0.5, c, TOL).unwrap();
        assert!((r.value - 2.0 * 1.5f64.ln()).abs() < 1e-10, "{r:?}");
        assert!(r.converged);
    }

    #[test]
    fn extended_gauss_matches_series() {
        let r = reg(0.2, 0.3);
        let spec = PfqSpec::gauss(Kernel::Exponential, 0.8, 1.1, 2.4, r).unwrap();
        let mb = mb_eval(&spec, -0.4, ContourSpec::default_for(&spec).unwrap(), 1e-9).unwrap();
        let series = ext_2f1(&Kernel::Exponential, 0.8, 1.1, 2.4, -0.4, r, 1e-13).unwrap();
        assert!(
            (mb.value - series.value).abs() < 1e-8,
            "{} vs {}",
            mb.value,
            series.value
        );
        // beyond the unit disk, against the integral path
        let mb = mb_eval(&spec, -3.0, ContourSpec::default_for(&spec).unwrap(), 1e-9).unwrap();
        let int = crate::hyp::ext_2f1_integral(&Kernel::Exponential, 0.8, 1.1, 2.4, -3.0, r, 1e-12).unwrap();
        assert!((mb.value - int.value).abs() < 1e-8, "{} vs {}", mb.value, int.value);
    }

    #[test]
    fn confluent_branch() {
        let spec = PfqSpec::unit(Kernel::Exponential, &[0.7], &[1.9], RegPair::ZERO).unwrap();
        let c = ContourSpec::default_for(&spec).unwrap();
        let r = mb_eval(&spec, -1.0, c, TOL).unwrap();
        let k = kummer_1f1(0.7, 1.9, -1.0).unwrap().value;
        assert!((r.value - k).abs() < 1e-9, "{} vs {k}", r.value);
        let spec = PfqSpec::unit(Kernel::Exponential, &[0.7], &[1.9], reg(0.1, 0.2)).unwrap();
        let r = mb_eval(&spec, -2.0, ContourSpec::default_for(&spec).unwrap(), TOL).unwrap();
        let s = crate::hyp::ext_pfq(&spec, -2.0, 1e-13).unwrap();
        assert!((r.value - s.value).abs() < 1e-8, "{} vs {}", r.value, s.value);
    }

    #[test]
    fn kummer_kernel_and_strip() {
        let k = Kernel::kummer(1.5, 2.5).unwrap();
        let r = reg(0.2, 0.4);
        let spec = PfqSpec::gauss(k, 0.9, 0.6, 1.7, r).unwrap();
        assert!((admissible_bound(&spec) - 0.9).abs() < 1e-15);
        let mb = mb_eval(&spec, -0.6, ContourSpec::default_for(&spec).unwrap(), 1e-9).unwrap();
        let series = ext_2f1(&k, 0.9, 0.6, 1.7, -0.6, r, 1e-13).unwrap();
        assert!(
            (mb.value - series.value).abs() < 1e-8,
            "{} vs {}",
            mb.value,
            series.value
        );
        let spec = PfqSpec::unit(k, &[0.6], &[1.7], r).unwrap();
        assert!((admissible_bound(&spec) - 2.1).abs() < 1e-15);
    }

    #[test]
    fn contour_shift_and_refinement() {
        let r = reg(0.1, 0.3);
        let spec = PfqSpec::gauss(Kernel::Exponential, 1.3, 0.9, 2.2, r).unwrap();
        let a = mb_eval(&spec, -0.7, ContourSpec::new(0.2, 40.0, 0.05).unwrap(), 1e-10).unwrap();
        let b = mb_eval(&spec, -0.7, ContourSpec::new(0.9, 40.0, 0.05).unwrap(), 1e-10).unwrap();
        assert!(
            (a.value - b.value).abs() <= 2.0 * a.abs_err.max(b.abs_err) + 1e-12,
            "{a:?} {b:?}"
        );
        let c = mb_eval(&spec, -0.7, ContourSpec::new(0.2, 40.0, 0.025).unwrap(), 1e-10).unwrap();
        assert!((a.value - c.value).abs() <= a.abs_err + 1e-13, "{a:?} {c:?}");
    }

    #[test]
    fn contour_rejections() {
        let spec = PfqSpec::gauss(Kernel::Exponential, 1.0, 1.0, 2.0, RegPair::ZERO).unwrap();
        assert!(ContourSpec::new(0.2, 4.0, 0.05).is_err());
        assert!(ContourSpec::new(0.2, 40.0, 0.03).is_err());
        assert!(matches!(
            mb_eval(&spec, -0.5, ContourSpec::new(0.9995, 40.0, 0.05).unwrap(), TOL),
            Err(Error::Pole(_))
        ));
        assert!(matches!(
            mb_eval(&spec, -0.5, ContourSpec::new(0.0005, 40.0, 0.05).unwrap(), TOL),
            Err(Error::Pole(_))
        ));
        assert!(mb_eval(&spec, 0.5, ContourSpec::default_for(&spec).unwrap(), TOL).is_err());
        // p < q: Γ(s)/Γ(β − s) grows along the line, so the tail test trips
        let spec = PfqSpec::unit(Kernel::Exponential, &[], &[1.5], RegPair::ZERO).unwrap();
        assert!(matches!(
            mb_eval(&spec, -1.0, ContourSpec::default_for(&spec).unwrap(), TOL),
            Err(Error::NoConvergence(_))
        ));
    }
}
