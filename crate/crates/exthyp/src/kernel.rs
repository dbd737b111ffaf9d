//! Regularization kernels Θ(z) inserted into the Euler integrals.

use crate::corefn::{gamma, kummer_1f1, kummer_1f1_log, pochhammer};
use crate::error::{Error, EvalResult, Method, Result};

/// The closed set of supported kernels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Kernel {
    /// Θ(z) = e^z.
    Exponential,
    /// Θ(z) = 1F1(a; c; z).
    Kummer { a: f64, c: f64 },
}

impl Kernel {
    pub fn kummer(a: f64, c: f64) -> Result<Self> {
        if !(a > 0.0 && c > 0.0) {
            return Err(Error::domain(format!("Kummer kernel needs a, c > 0 (got {a}, {c})")));
        }
        Ok(Kernel::Kummer { a, c })
    }

    /// Parses `exp` or `kummer:a,c`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "exp" {
            return Ok(Kernel::Exponential);
        }
        let body = t
            .strip_prefix("kummer:")
            .ok_or_else(|| Error::domain(format!("unknown kernel '{t}'")))?;
        let parts: Vec<&str> = body.split(',').collect();
        if parts.len() != 2 {
            return Err(Error::domain(format!("kernel '{t}' needs two parameters")));
        }
        let num = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| Error::domain(format!("bad number '{s}'")))
        };
        Kernel::kummer(num(parts[0])?, num(parts[1])?)
    }

    pub fn name(&self) -> String {
        match self {
            Kernel::Exponential => "exp".to_string(),
            Kernel::Kummer { a, c } => format!("kummer:{a},{c}"),
        }
    }

    /// Taylor coefficient κ_l in Θ(z) = Σ κ_l z^l / l!.
    pub fn theta_coeff(&self, l: u32) -> f64 {
        match *self {
            Kernel::Exponential => 1.0,
            Kernel::Kummer { a, c } => pochhammer(a, l) / pochhammer(c, l),
        }
    }

    /// Amplitude M0 of the large-|z| behaviour Θ(−x) ~ M0 x^ω e^{...}.
    pub fn amplitude(&self) -> f64 {
        match *self {
            Kernel::Exponential => 1.0,
            Kernel::Kummer { a, c } => gamma(c).unwrap_or(f64::NAN) / gamma(a).unwrap_or(f64::NAN),
        }
    }

    /// Exponent ω of the same asymptotic form.
    pub fn exponent(&self) -> f64 {
        match *self {
            Kernel::Exponential => 0.0,
            Kernel::Kummer { a, c } => a - c,
        }
    }

    /// Algebraic decay order of Θ(−x) as x → ∞, or `None` when the decay is
    /// exponential. Integrals against the kernel only converge when the
    /// remaining power is beaten by this order.
    pub fn algebraic_decay(&self) -> Option<f64> {
        match *self {
            Kernel::Exponential => None,
            Kernel::Kummer { a, c } => {
                let ca = c - a;
                if ca <= 0.0 && ca == ca.round() {
                    None
                } else {
                    Some(a)
                }
            }
        }
    }

    pub fn theta_eval(&self, z: f64) -> Result<EvalResult> {
        match *self {
            Kernel::Exponential => Ok(EvalResult::exact(z.exp(), Method::ClosedForm)),
            Kernel::Kummer { a, c } => kummer_1f1(a, c, z),
        }
    }

    /// `(ln|Θ(z)|, sign Θ(z))`.
    pub fn ln_theta(&self, z: f64) -> Result<(f64, f64)> {
        match *self {
            Kernel::Exponential => Ok((z, 1.0)),
            Kernel::Kummer { a, c } => {
                if z == f64::NEG_INFINITY {
                    return Ok((f64::NEG_INFINITY, 1.0));
                }
                kummer_1f1_log(a, c, z)
            }
        }
    }
}
