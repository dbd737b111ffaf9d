//! Extended Gauss and generalized hypergeometric identities.

use super::point::{pt, Point};
use super::{sides, sized, Grid, Identity, Suite, ONE_FORM, PRINTED_CORRECTED, PRINTED_PROOF};
use exthyp::hyp::{
    classical_quadratic_summation, derivative, derivative_weighted, derivative_weighted_lhs, euler_step_integral,
    euler_transform, ext_2f1, ext_2f1_integral, ext_pfq, falling_binomial_sum, frac_deriv_identity, pfaff_transform,
    quadratic_argument_summation, recurrence_eval, GaussParams, PfqSpec, Recurrence,
};
use exthyp::{Result, Sides, Variant};

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity::new(
            "thm1.1-integral-rep",
            Suite::Hyp,
            ONE_FORM,
            integral_rep_points,
            integral_rep,
        ),
        Identity::new("thm2.1-euler-step", Suite::Hyp, ONE_FORM, euler_step_points, euler_step),
        Identity::new(
            "thm2.2-derivative",
            Suite::Hyp,
            ONE_FORM,
            derivative_points,
            derivative_check,
        ),
        Identity::new("thm2.5-pfaff", Suite::Hyp, PRINTED_PROOF, pfaff_points, pfaff),
        Identity::new("thm2.5-euler", Suite::Hyp, PRINTED_CORRECTED, euler_points, euler),
        Identity::new(
            "thm2.6-weighted-derivative",
            Suite::Hyp,
            PRINTED_PROOF,
            weighted_points,
            weighted,
        ),
        Identity::new("thm2.7-a1-shift-up", Suite::Hyp, ONE_FORM, shift_points, |p, v, t| {
            shift(Recurrence::A1Plus, p, v, t)
        }),
        Identity::new("thm2.7-a1-shift-down", Suite::Hyp, ONE_FORM, shift_points, |p, v, t| {
            shift(Recurrence::A1Minus, p, v, t)
        }),
        Identity::new("thm2.7-b1-shift-up", Suite::Hyp, ONE_FORM, shift_points, |p, v, t| {
            shift(Recurrence::B1Plus, p, v, t)
        }),
        Identity::new(
            "thm2.7-a2-shift-up",
            Suite::Hyp,
            PRINTED_PROOF,
            shift_points,
            |p, v, t| shift(Recurrence::A2Plus, p, v, t),
        ),
        Identity::new(
            "thm2.7-binomial-expansion",
            Suite::Hyp,
            ONE_FORM,
            binomial_points,
            binomial,
        ),
        Identity::new("thm2.8-summation", Suite::Hyp, ONE_FORM, summation_points, summation),
        Identity::new(
            "thm2.8-classical-summation",
            Suite::Hyp,
            ONE_FORM,
            classical_summation_points,
            |p, _, _| classical_quadratic_summation(p.get("a"), p.get("b"), p.get("c")),
        ),
        Identity::new("thm2.9-frac-deriv", Suite::Hyp, ONE_FORM, frac_points, frac),
    ]
}

fn gauss(p: &Point) -> Result<GaussParams> {
    Ok(GaussParams::new(
        p.kernel()?,
        p.get("a1"),
        p.get("a2"),
        p.get("b1"),
        p.reg()?,
    ))
}

/// Parameters of an extended pFq from `up`, optional strides `k` and `lo`.
pub(super) fn pfq(p: &Point) -> Result<PfqSpec> {
    let up = p.list("up");
    let strides: Vec<u32> = if p.has("k") {
        p.list("k").iter().map(|&k| k as u32).collect()
    } else {
        vec![1; up.len()]
    };
    let upper: Vec<(f64, u32)> = up.iter().copied().zip(strides).collect();
    PfqSpec::new(p.kernel()?, &upper, p.list("lo"), p.reg()?)
}

const GAUSS_BASES: [(f64, f64, f64); 5] = [
    (1.0, 1.0, 2.0),
    (0.5, 1.5, 3.0),
    (2.0, 0.7, 2.2),
    (0.8, 1.1, 2.4),
    (0.7, 1.2, 2.5),
];
const REGS: [(f64, f64); 3] = [(0.0, 0.0), (0.1, 0.3), (0.5, 0.2)];

fn gauss_grid(zs: &[f64]) -> Vec<Point> {
    let mut out = Vec::new();
    for &(a1, a2, b1) in &GAUSS_BASES {
        for &z in zs {
            for &(b, d) in &REGS {
                out.push(pt!(a1 = a1, a2 = a2, b1 = b1, z = z, b = b, d = d));
            }
        }
    }
    out
}

fn integral_rep_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(a1 = 1.0, a2 = 1.0, b1 = 2.0, z = 0.5, b = 0.0, d = 0.0),
        pt!(a1 = 0.5, a2 = 1.5, b1 = 3.0, z = 0.3, b = 0.2, d = 0.4),
        pt!(a1 = 2.0, a2 = 0.7, b1 = 2.2, z = -0.5, b = 0.25, d = 1.0),
        pt!(
            a1 = 1.0,
            a2 = 1.0,
            b1 = 2.0,
            z = 0.7,
            b = 0.25,
            d = 0.25,
            kummer = [1.5, 2.5]
        ),
        pt!(a1 = 0.8, a2 = 1.1, b1 = 2.4, z = -0.8, b = 0.1, d = 0.3),
    ];
    sized(g, base, || gauss_grid(&[-0.6, -0.2, 0.2, 0.6]))
}

fn integral_rep(p: &Point, _: Variant, tol: f64) -> Result<Sides> {
    let (k, r, z) = (p.kernel()?, p.reg()?, p.get("z"));
    let (a1, a2, b1) = (p.get("a1"), p.get("a2"), p.get("b1"));
    sides(
        ext_2f1(&k, a1, a2, b1, z, r, tol)?,
        ext_2f1_integral(&k, a1, a2, b1, z, r, tol)?,
    )
}

fn euler_step_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(up = [0.7, 0.5, 0.8], lo = [1.5, 2.1], z = 0.4, b = 0.1, d = 0.2),
        pt!(up = [0.7, 0.5, 0.8], lo = [1.5, 2.1], z = -0.6, b = 0.0, d = 0.0),
        pt!(up = [0.7], lo = [1.9], z = 2.0, b = 0.1, d = 0.2),
        pt!(
            up = [0.8, 1.1],
            k = [1.0, 2.0],
            lo = [2.4],
            z = 0.6,
            b = 0.2,
            d = 0.3,
            kummer = [1.5, 2.5]
        ),
        pt!(up = [1.2, 0.6, 0.9], lo = [2.0, 1.7], z = 0.7, b = 0.3, d = 0.1),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for z in [-0.7, -0.3, 0.2, 0.5, 0.8] {
            for (b, d) in REGS {
                out.push(pt!(up = [0.9, 0.6, 1.1], lo = [1.8, 2.3], z = z, b = b, d = d));
                out.push(pt!(up = [1.3], lo = [2.6], z = 3.0 * z, b = b, d = d));
            }
        }
        out
    })
}

fn euler_step(p: &Point, _: Variant, tol: f64) -> Result<Sides> {
    let spec = pfq(p)?;
    let z = p.get("z");
    sides(ext_pfq(&spec, z, tol)?, euler_step_integral(&spec, z, false, tol)?)
}

fn derivative_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(up = [1.0, 1.0], lo = [2.0], z = 0.5, n = 1),
        pt!(up = [0.5, 1.5], lo = [3.0], z = 0.3, b = 0.2, d = 0.4, n = 1),
        pt!(up = [0.5, 1.5], lo = [3.0], z = 0.3, b = 0.2, d = 0.4, n = 2),
        pt!(up = [1.3], lo = [2.1], z = -1.0, b = 0.4, d = 0.2, n = 1),
        pt!(up = [0.7, 0.5, 0.8], lo = [1.5, 2.1], z = 0.4, b = 0.1, d = 0.2, n = 2),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for n in [1, 2, 3] {
            for z in [-0.5, 0.1, 0.6] {
                for (b, d) in REGS {
                    out.push(pt!(up = [0.9, 1.2], lo = [2.7], z = z, b = b, d = d, n = n));
                }
            }
        }
        out
    })
}

/// Closed-form derivative against Richardson-extrapolated central differences.
fn derivative_check(p: &Point, _: Variant, tol: f64) -> Result<Sides> {
    let spec = pfq(p)?;
    let (z, n) = (p.get("z"), p.uint("n"));
    let exact = derivative(&spec, z, n, tol)?.require_converged()?;
    let f = |x: f64| -> Result<f64> { Ok(ext_pfq(&spec, x, 1e-15)?.require_converged()?.value) };
    let diff = |h: f64| -> Result<f64> {
        Ok(match n {
            1 => (f(z + h)? - f(z - h)?) / (2.0 * h),
            2 => (f(z + h)? - 2.0 * f(z)? + f(z - h)?) / (h * h),
            _ => (f(z + 2.0 * h)? - 2.0 * f(z + h)? + 2.0 * f(z - h)? - f(z - 2.0 * h)?) / (2.0 * h * h * h),
        })
    };
    let h = 0.02;
    let (d1, d2, d3) = (diff(h)?, diff(h / 2.0)?, diff(h / 4.0)?);
    let (r1, r2) = ((4.0 * d2 - d1) / 3.0, (4.0 * d3 - d2) / 3.0);
    let approx = (16.0 * r2 - r1) / 15.0;
    Ok(Sides::new(exact.value, exact.abs_err, approx, (approx - r2).abs()))
}

fn pfaff_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(a1 = 1.0, a2 = 1.0, b1 = 2.0, z = 0.5, b = 0.0, d = 0.0),
        pt!(a1 = 0.7, a2 = 1.2, b1 = 2.5, z = -0.4, b = 0.3, d = 0.1),
        pt!(a1 = 0.8, a2 = 1.1, b1 = 2.4, z = 0.3, b = 0.2, d = 0.3),
        pt!(
            a1 = 1.0,
            a2 = 1.0,
            b1 = 2.0,
            z = 0.6,
            b = 0.25,
            d = 0.25,
            kummer = [1.5, 2.5]
        ),
        pt!(a1 = 1.5, a2 = 0.6, b1 = 1.7, z = -2.0, b = 0.1, d = 0.2),
    ];
    sized(g, base, || gauss_grid(&[-1.5, -0.5, 0.2, 0.45]))
}

fn pfaff(p: &Point, v: Variant, tol: f64) -> Result<Sides> {
    let gp = gauss(p)?;
    let z = p.get("z");
    sides(gp.eval(z, tol)?, pfaff_transform(&gp, z, v, tol)?)
}

fn euler_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(a1 = 1.2, a2 = 0.8, b1 = 2.7, z = 0.45, b = 0.2, d = 0.5),
        pt!(a1 = 1.0, a2 = 1.0, b1 = 3.0, z = 0.3, b = 0.0, d = 0.0),
        pt!(a1 = 0.7, a2 = 1.2, b1 = 2.5, z = -0.4, b = 0.3, d = 0.1),
        pt!(a1 = 0.9, a2 = 0.6, b1 = 2.1, z = 0.2, b = 0.1, d = 0.05),
        pt!(a1 = 0.9, a2 = 0.6, b1 = 2.1, z = 0.0, b = 0.3, d = 0.2),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for &(a1, a2, b1) in &[(1.2, 0.8, 2.7), (0.6, 1.1, 2.9), (1.4, 0.5, 3.3)] {
            for z in [-0.6, -0.2, 0.15, 0.35, 0.55] {
                for (b, d) in REGS {
                    out.push(pt!(a1 = a1, a2 = a2, b1 = b1, z = z, b = b, d = d));
                }
            }
        }
        out
    })
}

fn euler(p: &Point, v: Variant, tol: f64) -> Result<Sides> {
    let gp = gauss(p)?;
    let z = p.get("z");
    sides(gp.eval(z, tol)?, euler_transform(&gp, z, v, tol)?)
}

fn weighted_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(a1 = 1.0, a2 = 1.0, b1 = 2.0, z = 0.4, n = 1),
        pt!(a1 = 1.0, a2 = 1.0, b1 = 2.0, z = 0.4, n = 2),
        pt!(a1 = 0.8, a2 = 1.2, b1 = 2.6, z = 0.3, b = 0.1, d = 0.2, n = 1),
        pt!(a1 = 1.5, a2 = 0.7, b1 = 2.2, z = 0.6, b = 0.2, d = 0.1, n = 3),
        pt!(
            a1 = 0.8,
            a2 = 1.2,
            b1 = 2.6,
            z = 0.7,
            b = 0.3,
            d = 0.3,
            n = 2,
            kummer = [1.5, 2.5]
        ),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for n in [1, 2, 3] {
            for z in [0.15, 0.5, 0.8] {
                for (b, d) in REGS {
                    out.push(pt!(a1 = 0.9, a2 = 1.3, b1 = 2.8, z = z, b = b, d = d, n = n));
                }
            }
        }
        out
    })
}

fn weighted(p: &Point, v: Variant, tol: f64) -> Result<Sides> {
    let gp = gauss(p)?;
    let (z, n) = (p.get("z"), p.uint("n"));
    sides(
        derivative_weighted_lhs(&gp, z, n, tol)?,
        derivative_weighted(&gp, z, n, v, tol)?,
    )
}

fn shift_points(g: Grid) -> Vec<Point> {
    let mid = pt!(a1 = 0.9, a2 = 1.1, b1 = 4.6, z = 0.25, b = 0.1, d = 0.1);
    let base = vec![
        mid.with("n", 1),
        mid.with("n", 2),
        mid.with("n", 3),
        pt!(a1 = 1.0, a2 = 1.0, b1 = 2.5, z = 0.3, b = 0.0, d = 0.0, n = 1),
        pt!(a1 = 0.7, a2 = 0.6, b1 = 2.9, z = -0.5, b = 0.1, d = 0.2, n = 2),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for n in [1, 2, 3] {
            for z in [-0.6, 0.1, 0.5] {
                for (b, d) in REGS {
                    out.push(pt!(a1 = 1.3, a2 = 0.8, b1 = 4.2, z = z, b = b, d = d, n = n));
                }
            }
        }
        out
    })
}

fn shift(which: Recurrence, p: &Point, v: Variant, tol: f64) -> Result<Sides> {
    recurrence_eval(which, &gauss(p)?, p.uint("n"), p.get("z"), v, tol)
}

fn binomial_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(n = 1, t = 0.5),
        pt!(n = 2, t = 0.1),
        pt!(n = 3, t = 0.9),
        pt!(n = 5, t = -0.7),
        pt!(n = 8, t = 1.6),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for n in 0..=6 {
            for t in [-0.5, 0.25, 0.75, 1.25] {
                out.push(pt!(n = n, t = t));
            }
        }
        out
    })
}

fn binomial(p: &Point, _: Variant, _: f64) -> Result<Sides> {
    let (n, t) = (p.uint("n"), p.get("t"));
    Ok(Sides::new(
        falling_binomial_sum(n, t),
        0.0,
        (1.0 - t).powi(n as i32),
        0.0,
    ))
}

fn summation_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(a1 = 1.0, a2 = 1.0, b1 = 4.0),
        pt!(a1 = 0.5, a2 = 1.0, b1 = 3.0),
        pt!(a1 = 0.6, a2 = 0.9, b1 = 3.1, b = 0.2, d = 0.3),
        pt!(a1 = 0.8, a2 = 1.2, b1 = 3.6, b = 0.1, d = 0.1),
        pt!(a1 = 1.1, a2 = 0.7, b1 = 3.4, b = 0.4, d = 0.05),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for (a1, a2, b1) in [(0.7, 0.9, 3.2), (1.2, 0.6, 3.8), (0.4, 1.3, 3.5)] {
            for (b, d) in REGS {
                out.push(pt!(a1 = a1, a2 = a2, b1 = b1, b = b, d = d));
            }
        }
        out
    })
}

fn summation(p: &Point, _: Variant, tol: f64) -> Result<Sides> {
    quadratic_argument_summation(&gauss(p)?, tol)
}

fn classical_summation_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(a = 1.0, b = 1.0, c = 4.0),
        pt!(a = 0.5, b = 1.0, c = 3.0),
        pt!(a = 0.3, b = 0.7, c = 2.5),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for a in [0.2, 0.6, 1.1] {
            for b in [0.4, 0.9] {
                out.push(pt!(a = a, b = b, c = a + b + 1.5));
            }
        }
        out
    })
}

fn frac_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(a1 = 0.8, a2 = 1.1, b1 = 2.4, k = 1, c = 0.5, z = 0.8, b = 0.2, d = 0.1),
        pt!(
            a1 = 0.8,
            a2 = 1.1,
            b1 = 2.4,
            k = 2,
            c = 0.7,
            z = 0.9,
            b = 0.1,
            d = 0.3,
            kummer = [1.5, 2.5]
        ),
        pt!(a1 = 0.8, a2 = 1.1, b1 = 2.4, k = 3, c = -0.5, z = 1.0),
        pt!(a1 = 0.8, a2 = 1.2, b1 = 2.5, k = 1, c = 0.5, z = 0.9),
        pt!(a1 = 0.5, a2 = 0.9, b1 = 2.2, k = 2, c = 0.4, z = 1.1, b = 0.2, d = 0.1),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for k in [1, 2] {
            for (c, z) in [(0.3, 0.6), (-0.4, 0.9), (0.6, 1.2)] {
                for (b, d) in REGS {
                    out.push(pt!(a1 = 0.9, a2 = 1.0, b1 = 2.3, k = k, c = c, z = z, b = b, d = d));
                }
            }
        }
        out
    })
}

fn frac(p: &Point, _: Variant, tol: f64) -> Result<Sides> {
    frac_deriv_identity(&gauss(p)?, p.uint("k"), p.get("c"), p.get("z"), tol)
}
