//! Registry of identities checked by the conformance runner.

mod appell;
mod hyp;
mod ineq;
mod lauricella;
mod mellin;
pub mod point;

use exthyp::{EvalResult, Result, Sides, Variant};
pub use point::Point;

/// Module group an identity belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Hyp,
    Mellin,
    Appell,
    Lauricella,
    Ineq,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Hyp, Suite::Mellin, Suite::Appell, Suite::Lauricella, Suite::Ineq];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Hyp => "hyp",
            Suite::Mellin => "mellin",
            Suite::Appell => "appell",
            Suite::Lauricella => "lauricella",
            Suite::Ineq => "ineq",
        }
    }
}

/// Grid density.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grid {
    Small,
    Full,
}

pub const SMALL_POINTS: usize = 5;
pub const FULL_POINTS: usize = 50;

/// Equality identities compare both sides; bounds only penalize lhs > rhs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Equal,
    AtMost,
}

pub type EvalFn = fn(&Point, Variant, f64) -> Result<Sides>;

/// One identity with its parameter grid and evaluator.
pub struct Identity {
    pub id: &'static str,
    pub suite: Suite,
    pub variants: &'static [Variant],
    pub relation: Relation,
    points: fn(Grid) -> Vec<Point>,
    eval: EvalFn,
}

impl Identity {
    pub(crate) const fn new(
        id: &'static str,
        suite: Suite,
        variants: &'static [Variant],
        points: fn(Grid) -> Vec<Point>,
        eval: EvalFn,
    ) -> Self {
        Identity {
            id,
            suite,
            variants,
            relation: Relation::Equal,
            points,
            eval,
        }
    }

    pub(crate) const fn bound(mut self) -> Self {
        self.relation = Relation::AtMost;
        self
    }

    pub fn points(&self, grid: Grid) -> Vec<Point> {
        (self.points)(grid)
    }

    pub fn eval(&self, point: &Point, variant: Variant, tol: f64) -> Result<Sides> {
        (self.eval)(point, variant, tol)
    }

    pub fn residual(&self, s: &Sides) -> f64 {
        match self.relation {
            Relation::Equal => s.residual(),
            Relation::AtMost => s.excess(),
        }
    }
}

/// Every registered identity, grouped by suite.
pub fn catalog() -> Vec<Identity> {
    let mut all = hyp::identities();
    all.extend(mellin::identities());
    all.extend(appell::identities());
    all.extend(lauricella::identities());
    all.extend(ineq::identities());
    all
}

/// First `SMALL_POINTS` of `base` on the small grid; `base` followed by
/// `extra` on the full grid, capped at `FULL_POINTS`.
pub(crate) fn sized(grid: Grid, mut base: Vec<Point>, extra: impl FnOnce() -> Vec<Point>) -> Vec<Point> {
    match grid {
        Grid::Small => base.truncate(SMALL_POINTS),
        Grid::Full => {
            base.extend(extra());
            base.truncate(FULL_POINTS);
        }
    }
    base
}

/// Both results must have converged.
pub(crate) fn sides(lhs: EvalResult, rhs: EvalResult) -> Result<Sides> {
    Ok((lhs.require_converged()?, rhs.require_converged()?).into())
}

/// An exact left side against an evaluated right side.
pub(crate) fn exact_vs(lhs: f64, rhs: EvalResult) -> Result<Sides> {
    let rhs = rhs.require_converged()?;
    Ok(Sides::new(lhs, 0.0, rhs.value, rhs.abs_err))
}

pub(crate) const ONE_FORM: &[Variant] = &[Variant::Printed];
pub(crate) const PRINTED_PROOF: &[Variant] = &[Variant::Printed, Variant::Proof];
pub(crate) const PRINTED_CORRECTED: &[Variant] = &[Variant::Printed, Variant::Corrected];

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    const EXPECTED_IDS: &[&str] = &[
        "thm1.1-integral-rep",
        "thm2.1-euler-step",
        "thm2.2-derivative",
        "thm2.4-mellin-barnes",
        "thm2.5-pfaff",
        "thm2.5-euler",
        "thm2.6-weighted-derivative",
        "thm2.7-a1-shift-up",
        "thm2.7-a1-shift-down",
        "thm2.7-b1-shift-up",
        "thm2.7-a2-shift-up",
        "thm2.7-binomial-expansion",
        "thm2.8-summation",
        "thm2.8-classical-summation",
        "thm2.9-frac-deriv",
        "thm3.1-f1-integral",
        "thm3.1-f2-integral",
        "thm3.2-f1-transform",
        "thm3.3-f2-reflect-x",
        "thm3.3-f2-reflect-y",
        "thm3.3-f2-reflect-xy",
        "thm3.3-f2-reflect-xy-swapped",
        "thm3.6-f2-beta2-shift",
        "thm3.6-f2-gamma2-shift",
        "thm3.6-f2-single-integral",
        "lemma1-partial-fractions",
        "thm3.8-finite-sum",
        "thm3.8-finite-sum-log",
        "thm3.9-fd-integral",
        "thm3.9-fd-summation",
        "thm3.9-fd-collapse",
        "thm3.10-product-integral",
        "thm3.11-fd-laplace",
        "thm3.12-fa-integral",
        "thm3.12-fa-single-integral",
        "thm3.12-fa-partial-series",
        "lemma2-gamma-scaled",
        "lemma2-alpha-scaled",
        "lemma3-weight-x",
        "lemma3-weight-y",
        "thm4.1-classical-constant",
        "thm4.1-constant-reduction",
        "thm4.1-inequality",
        "thm4.1-dual-inequality",
    ];

    #[test]
    fn catalog_matches_registered_ids() {
        let cat = catalog();
        let ids: Vec<&str> = cat.iter().map(|i| i.id).collect();
        let unique: BTreeSet<&str> = ids.iter().copied().collect();
        assert_eq!(unique.len(), ids.len(), "duplicate identity ids");
        let expected: BTreeSet<&str> = EXPECTED_IDS.iter().copied().collect();
        assert_eq!(unique, expected);
    }

    #[test]
    fn grid_sizes_respect_limits() {
        for id in catalog() {
            let small = id.points(Grid::Small);
            let full = id.points(Grid::Full);
            assert!(!small.is_empty() && small.len() <= SMALL_POINTS, "{}", id.id);
            assert!(full.len() <= FULL_POINTS && full.len() >= small.len(), "{}", id.id);
            assert_eq!(&full[..small.len()], &small[..], "{}", id.id);
            assert!(!id.variants.is_empty());
        }
    }
}
