use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole at {0}")]
    Pole(f64),
    #[error("no convergence: {0}")]
    NoConvergence(String),
    #[error("non-finite integrand sample at t = {0:e}")]
    NonFinite(f64),
    #[error("kernel mismatch: {0}")]
    KernelMismatch(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Series,
    EulerIntegral,
    MellinBarnes,
    Quadrature,
    ClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::EulerIntegral => "euler_integral",
            Method::MellinBarnes => "mellin_barnes",
            Method::Quadrature => "quadrature",
            Method::ClosedForm => "closed_form",
        }
    }
}

/// A value together with an error estimate and diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    pub abs_err: f64,
    pub terms_or_nodes: usize,
    pub converged: bool,
    pub method: Method,
}

impl EvalResult {
    pub fn exact(value: f64, method: Method) -> Self {
        EvalResult {
            value,
            abs_err: 0.0,
            terms_or_nodes: 0,
            converged: true,
            method,
        }
    }

    /// Turns an unconverged result into an error.
    pub fn require_converged(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::NoConvergence(format!(
                "{} stopped with error estimate {:e} after {} terms/nodes",
                self.method.as_str(),
                self.abs_err,
                self.terms_or_nodes
            )))
        }
    }

    pub(crate) fn scaled(self, factor: f64) -> Self {
        EvalResult {
            value: self.value * factor,
            abs_err: self.abs_err * factor.abs(),
            ..self
        }
    }
}
