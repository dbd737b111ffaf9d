//! Alternative forms of an identity evaluated side by side.

/// Which form of an identity's right-hand side to evaluate.
///
/// `Printed` is the identity as originally published, `Proof` is the form
/// its derivation produces, `Corrected` is a form re-derived here when
/// neither of those holds, and `MinusBrace` is the sign-flipped bracket of
/// the two-variable finite sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Printed,
    Proof,
    Corrected,
    MinusBrace,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Printed => "printed",
            Variant::Proof => "proof",
            Variant::Corrected => "corrected",
            Variant::MinusBrace => "minus_brace",
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Both sides of an identity, evaluated independently.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sides {
    pub lhs: f64,
    pub rhs: f64,
    pub lhs_err: f64,
    pub rhs_err: f64,
}

impl Sides {
    pub fn new(lhs: f64, lhs_err: f64, rhs: f64, rhs_err: f64) -> Self {
        Sides {
            lhs,
            rhs,
            lhs_err,
            rhs_err,
        }
    }

    /// |lhs − rhs| / (1 + max(|lhs|, |rhs|)).
    pub fn residual(&self) -> f64 {
        (self.lhs - self.rhs).abs() / (1.0 + self.lhs.abs().max(self.rhs.abs()))
    }

    /// One-sided residual for `lhs ≤ rhs`: zero when the bound holds.
    pub fn excess(&self) -> f64 {
        (self.lhs - self.rhs).max(0.0) / (1.0 + self.lhs.abs().max(self.rhs.abs()))
    }
}

impl From<(crate::EvalResult, crate::EvalResult)> for Sides {
    fn from((l, r): (crate::EvalResult, crate::EvalResult)) -> Self {
        Sides::new(l.value, l.abs_err, r.value, r.abs_err)
    }
}
