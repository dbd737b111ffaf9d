//! Extended special functions built on kernel-regularized Euler integrals.
//!
//! A kernel Θ (exponential or Kummer) is inserted into the beta integral with
//! regularization pair (b, d). The resulting extended beta function supplies
//! the coefficients of extended Gauss, generalized, Appell and Lauricella
//! series, all evaluated in double precision with error estimates.

pub mod appell;
pub mod corefn;
pub mod error;
pub mod extbeta;
pub mod hyp;
pub mod ineq;
pub mod kernel;
pub mod lauricella;
pub mod mellin;
pub mod quadrature;
pub mod variant;

pub use error::{Error, EvalResult, Method, Result};
pub use extbeta::RegPair;
pub use kernel::Kernel;
pub use variant::{Sides, Variant};
