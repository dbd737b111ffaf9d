//! `hilbert` subcommand.

use crate::cli::HilbertArgs;
use crate::exit::{usage, CliError, OK};
use crate::output::to_json;
use exthyp::ineq::{hilbert_check, HilbertParams, TestFunction};
use exthyp::RegPair;
use serde::Serialize;
use std::io::Write;

#[derive(Serialize)]
struct HilbertOutput {
    #[serde(rename = "K")]
    constant: f64,
    lhs: f64,
    rhs: f64,
    margin: f64,
    holds: bool,
    dual_lhs: f64,
    dual_rhs: f64,
    dual_margin: f64,
    dual_holds: bool,
}

/// Parameters from the flags; unset power exponents take the middle of
/// their admissible ranges.
pub fn params(a: &HilbertArgs) -> Result<HilbertParams, CliError> {
    let mut hp = HilbertParams {
        p: a.p,
        q: a.q,
        s1: a.s1,
        s2: a.s2,
        scale1: a.a1,
        scale2: a.a2,
        power1: 0.0,
        power2: 0.0,
        reg: RegPair::new(a.pt, a.qt)?,
    };
    let mid = |r: (f64, f64)| 0.5 * (r.0 + r.1);
    hp.power1 = a.power1.unwrap_or_else(|| mid(hp.power1_range()));
    hp.power2 = a.power2.unwrap_or_else(|| mid(hp.power2_range()));
    hp.validate()?;
    Ok(hp)
}

pub fn cmd_hilbert(a: &HilbertArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if !(a.tol > 0.0) {
        return Err(usage("--tol must be positive"));
    }
    let hp = params(a)?;
    let parse = |s: &str| {
        s.parse::<TestFunction>()
            .map_err(|e| usage(format!("test function '{s}': {e}")))
    };
    let (f, g) = (parse(&a.f)?, parse(&a.g)?);
    let r = hilbert_check(&hp, &f, &g, a.tol)?;
    let o = HilbertOutput {
        constant: r.constant,
        lhs: r.lhs,
        rhs: r.rhs,
        margin: r.margin,
        holds: r.holds,
        dual_lhs: r.dual_lhs,
        dual_rhs: r.dual_rhs,
        dual_margin: r.dual_margin,
        dual_holds: r.dual_holds,
    };
    writeln!(out, "{}", to_json(&o))?;
    Ok(OK)
}
