//! Conformance runner: evaluates every catalog case and adjudicates variants.

use crate::catalog::{catalog, Grid, Identity, Suite};
use crate::output::num;
use exthyp::{Error, Variant};
use rayon::prelude::*;
use std::io::Write;

/// Outcome of one case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    SkippedDomain,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedDomain => "skipped-domain",
        }
    }
}

/// One identity evaluated in one variant at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseRow {
    pub identity_id: &'static str,
    pub variant: Variant,
    pub point_index: usize,
    pub params: String,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub status: Status,
    /// Error text for failed or skipped cases.
    pub note: String,
}

/// Per-variant aggregate.
#[derive(Debug, Clone, PartialEq)]
pub struct VariantTally {
    pub variant: Variant,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub max_residual: f64,
}

impl VariantTally {
    /// Passes every in-domain point and has at least one.
    pub fn clean(&self) -> bool {
        self.failed == 0 && self.passed > 0
    }
}

/// Which variants of an identity hold.
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Winner(Variant),
    Tie(Vec<Variant>),
    NoPassingVariant,
}

impl Verdict {
    pub fn label(&self) -> String {
        match self {
            Verdict::Winner(v) => v.as_str().to_string(),
            Verdict::Tie(vs) => format!("tie:{}", vs.iter().map(|v| v.as_str()).collect::<Vec<_>>().join("+")),
            Verdict::NoPassingVariant => "none".to_string(),
        }
    }

    pub fn has_passing_variant(&self) -> bool {
        !matches!(self, Verdict::NoPassingVariant)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentitySummary {
    pub identity_id: &'static str,
    pub suite: Suite,
    pub points: usize,
    pub tallies: Vec<VariantTally>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub suite: String,
    pub grid: Grid,
    pub tol: f64,
    pub rows: Vec<CaseRow>,
    pub summaries: Vec<IdentitySummary>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.summaries.iter().all(|s| s.verdict.has_passing_variant())
    }
}

/// Accuracy requested from the evaluators for a given pass tolerance.
pub fn eval_tol(tol: f64) -> f64 {
    (tol * 1e-2).max(1e-14)
}

/// Runs every identity of `suite` (all suites when `None`).
pub fn run(suite: Option<Suite>, grid: Grid, tol: f64) -> Report {
    let ids: Vec<Identity> = catalog()
        .into_iter()
        .filter(|i| suite.is_none_or(|s| i.suite == s))
        .collect();
    let cases: Vec<(usize, usize, crate::catalog::Point, Variant)> = ids
        .iter()
        .enumerate()
        .flat_map(|(k, id)| {
            id.points(grid)
                .into_iter()
                .enumerate()
                .flat_map(move |(j, p)| id.variants.iter().map(move |&v| (k, j, p.clone(), v)))
        })
        .collect();
    let inner = eval_tol(tol);
    let mut rows: Vec<CaseRow> = cases
        .par_iter()
        .map(|(k, j, p, v)| evaluate(&ids[*k], *j, p, *v, tol, inner))
        .collect();
    rows.sort_by(|a, b| (a.identity_id, a.variant, a.point_index).cmp(&(b.identity_id, b.variant, b.point_index)));
    let summaries = ids.iter().map(|id| summarize(id, grid, &rows)).collect();
    Report {
        suite: suite.map_or("all", |s| s.as_str()).to_string(),
        grid,
        tol,
        rows,
        summaries,
    }
}

fn evaluate(id: &Identity, index: usize, p: &crate::catalog::Point, v: Variant, tol: f64, inner: f64) -> CaseRow {
    let mut row = CaseRow {
        identity_id: id.id,
        variant: v,
        point_index: index,
        params: p.label(),
        lhs: f64::NAN,
        rhs: f64::NAN,
        residual: f64::NAN,
        status: Status::Fail,
        note: String::new(),
    };
    match id.eval(p, v, inner) {
        Ok(s) => {
            row.lhs = s.lhs;
            row.rhs = s.rhs;
            row.residual = id.residual(&s);
            row.status = if row.residual < tol { Status::Pass } else { Status::Fail };
        }
        Err(e @ (Error::Domain(_) | Error::Pole(_) | Error::KernelMismatch(_))) => {
            row.status = Status::SkippedDomain;
            row.note = e.to_string();
        }
        Err(e) => row.note = e.to_string(),
    }
    row
}

fn summarize(id: &Identity, grid: Grid, rows: &[CaseRow]) -> IdentitySummary {
    let mine: Vec<&CaseRow> = rows.iter().filter(|r| r.identity_id == id.id).collect();
    let tallies: Vec<VariantTally> = id
        .variants
        .iter()
        .map(|&v| {
            let mut t = VariantTally {
                variant: v,
                passed: 0,
                failed: 0,
                skipped: 0,
                max_residual: 0.0,
            };
            for r in mine.iter().filter(|r| r.variant == v) {
                match r.status {
                    Status::Pass => t.passed += 1,
                    Status::Fail => t.failed += 1,
                    Status::SkippedDomain => t.skipped += 1,
                }
                if r.status != Status::SkippedDomain {
                    t.max_residual = if r.residual.is_nan() {
                        f64::NAN
                    } else {
                        t.max_residual.max(r.residual)
                    };
                }
            }
            t
        })
        .collect();
    let clean: Vec<Variant> = tallies.iter().filter(|t| t.clean()).map(|t| t.variant).collect();
    let verdict = match clean.len() {
        0 => Verdict::NoPassingVariant,
        1 => Verdict::Winner(clean[0]),
        _ => Verdict::Tie(clean),
    };
    IdentitySummary {
        identity_id: id.id,
        suite: id.suite,
        points: id.points(grid).len(),
        tallies,
        verdict,
    }
}

/// Writes the case table as CSV.
pub fn write_csv(report: &Report, out: impl Write) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "identity_id",
        "variant",
        "point",
        "params",
        "lhs",
        "rhs",
        "residual",
        "status",
    ])?;
    for r in &report.rows {
        w.write_record([
            r.identity_id,
            r.variant.as_str(),
            &r.point_index.to_string(),
            &r.params,
            &num(r.lhs),
            &num(r.rhs),
            &num(r.residual),
            r.status.as_str(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Human-readable per-identity aggregates. Contains no timing, so it is
/// reproducible run to run.
pub fn write_summary(report: &Report, mut out: impl Write) -> std::io::Result<()> {
    writeln!(
        out,
        "exthyp conformance {} suite={} grid={} tol={:e}",
        env!("CARGO_PKG_VERSION"),
        report.suite,
        match report.grid {
            Grid::Small => "small",
            Grid::Full => "full",
        },
        report.tol
    )?;
    for s in &report.summaries {
        let parts: Vec<String> = s
            .tallies
            .iter()
            .map(|t| {
                format!(
                    "{}: max_residual={:.3e} pass={} fail={} skipped={}",
                    t.variant, t.max_residual, t.passed, t.failed, t.skipped
                )
            })
            .collect();
        writeln!(
            out,
            "{:<30} points={:<2} winner={:<10} {}",
            s.identity_id,
            s.points,
            s.verdict.label(),
            parts.join(" | ")
        )?;
        for r in report
            .rows
            .iter()
            .filter(|r| r.identity_id == s.identity_id && !r.note.is_empty())
        {
            writeln!(out, "    {} point {}: {}", r.variant, r.point_index, r.note)?;
        }
    }
    let ok = report
        .summaries
        .iter()
        .filter(|s| s.verdict.has_passing_variant())
        .count();
    writeln!(
        out,
        "identities={} with_passing_variant={} cases={}",
        report.summaries.len(),
        ok,
        report.rows.len()
    )?;
    for s in report.summaries.iter().filter(|s| !s.verdict.has_passing_variant()) {
        writeln!(out, "no passing variant: {}", s.identity_id)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_identity_passes_and_is_sorted() {
        let r = run(Some(Suite::Hyp), Grid::Small, 1e-8);
        let rows: Vec<&CaseRow> = r
            .rows
            .iter()
            .filter(|r| r.identity_id == "thm2.7-binomial-expansion")
            .collect();
        assert_eq!(rows.len(), 5);
        assert!(rows.iter().all(|r| r.status == Status::Pass));
        let keys: Vec<_> = r
            .rows
            .iter()
            .map(|r| (r.identity_id, r.variant, r.point_index))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        let s = r.summaries.iter().find(|s| s.identity_id == "thm2.5-pfaff").unwrap();
        assert_eq!(s.verdict, Verdict::Winner(Variant::Proof));
    }

    #[test]
    fn evaluation_tolerance_is_floored() {
        assert_eq!(eval_tol(1e-8), 1e-10);
        assert_eq!(eval_tol(1e-15), 1e-14);
    }
}
