//! Two-variable extended Appell identities.

use super::point::{pt, Point};
use super::{exact_vs, sides, sized, Grid, Identity, Suite, ONE_FORM, PRINTED_PROOF};
use exthyp::appell::{
    f1_auto, f1_finite_sum, f1_finite_sum_log, f1_integral, f1_series, f1_transform, f2_integral, f2_recursion,
    f2_series, f2_single_integral, f2_transform, partial_fraction_power_expansion, AppellParams, F2Recursion,
    F2Transform,
};
use exthyp::{RegPair, Result, Sides, Variant};

const F1_FORMS: &[Variant] = &[Variant::Printed, Variant::Proof, Variant::Corrected];
const SUM_FORMS: &[Variant] = &[Variant::Printed, Variant::Proof, Variant::MinusBrace];

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity::new("thm3.1-f1-integral", Suite::Appell, ONE_FORM, f1_points, |p, _, t| {
            let a = f1(p)?;
            let (x, y) = (p.get("x"), p.get("y"));
            sides(f1_series(&a, x, y, t)?, f1_integral(&a, x, y, t)?)
        }),
        Identity::new("thm3.1-f2-integral", Suite::Appell, ONE_FORM, f2_points, |p, _, t| {
            let a = f2(p)?;
            let (x, y) = (p.get("x"), p.get("y"));
            sides(f2_series(&a, x, y, t)?, f2_integral(&a, x, y, t)?)
        }),
        Identity::new(
            "thm3.2-f1-transform",
            Suite::Appell,
            F1_FORMS,
            f1_transform_points,
            |p, v, t| {
                let a = f1(p)?;
                let (x, y) = (p.get("x"), p.get("y"));
                sides(f1_auto(&a, x, y, t)?, f1_transform(&a, x, y, v, t)?)
            },
        ),
        Identity::new(
            "thm3.3-f2-reflect-x",
            Suite::Appell,
            ONE_FORM,
            reflect_points,
            |p, _, t| reflect(F2Transform::FirstAxis, p, t),
        ),
        Identity::new(
            "thm3.3-f2-reflect-y",
            Suite::Appell,
            ONE_FORM,
            reflect_points,
            |p, _, t| reflect(F2Transform::SecondAxis, p, t),
        ),
        Identity::new(
            "thm3.3-f2-reflect-xy",
            Suite::Appell,
            ONE_FORM,
            reflect_points,
            |p, _, t| reflect(F2Transform::BothAxes, p, t),
        ),
        Identity::new(
            "thm3.3-f2-reflect-xy-swapped",
            Suite::Appell,
            ONE_FORM,
            swapped_points,
            |p, _, t| reflect(F2Transform::BothAxesSwapped, p, t),
        ),
        Identity::new(
            "thm3.6-f2-beta2-shift",
            Suite::Appell,
            PRINTED_PROOF,
            recursion_points,
            |p, v, t| recursion(F2Recursion::Beta2Shift, p, v, t),
        ),
        Identity::new(
            "thm3.6-f2-gamma2-shift",
            Suite::Appell,
            ONE_FORM,
            recursion_points,
            |p, v, t| recursion(F2Recursion::Gamma2Shift, p, v, t),
        ),
        Identity::new(
            "thm3.6-f2-single-integral",
            Suite::Appell,
            ONE_FORM,
            f2_points,
            |p, _, t| {
                let a = f2(p)?;
                let (x, y) = (p.get("x"), p.get("y"));
                sides(f2_series(&a, x, y, t)?, f2_single_integral(&a, x, y, t)?)
            },
        ),
        Identity::new(
            "lemma1-partial-fractions",
            Suite::Appell,
            ONE_FORM,
            partial_points,
            partial,
        ),
        Identity::new(
            "thm3.8-finite-sum",
            Suite::Appell,
            SUM_FORMS,
            finite_sum_points,
            finite_sum,
        ),
        Identity::new(
            "thm3.8-finite-sum-log",
            Suite::Appell,
            ONE_FORM,
            log_points,
            finite_sum_log,
        ),
    ]
}

fn f1(p: &Point) -> Result<AppellParams> {
    Ok(AppellParams::f1(
        p.kernel()?,
        p.get("al"),
        p.get("be1"),
        p.get("be2"),
        p.get("ga"),
        p.reg()?,
    ))
}

fn f2(p: &Point) -> Result<AppellParams> {
    Ok(AppellParams::f2(
        p.kernel()?,
        p.get("al"),
        p.get("be1"),
        p.get("be2"),
        p.get("ga1"),
        p.get("ga2"),
        p.reg()?,
    ))
}

const REGS: [(f64, f64); 3] = [(0.0, 0.0), (0.1, 0.2), (0.3, 0.1)];

fn f1_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(al = 1.0, be1 = 0.5, be2 = 0.5, ga = 2.0, x = 0.2, y = 0.4),
        pt!(
            al = 1.0,
            be1 = 0.7,
            be2 = 0.9,
            ga = 2.3,
            x = 0.3,
            y = 0.5,
            b = 0.2,
            d = 0.1
        ),
        pt!(
            al = 0.8,
            be1 = 0.6,
            be2 = 1.1,
            ga = 2.2,
            x = -0.5,
            y = 0.3,
            b = 0.2,
            d = 0.2
        ),
        pt!(
            al = 1.2,
            be1 = 0.5,
            be2 = 0.8,
            ga = 2.6,
            x = 0.6,
            y = -0.7,
            b = 0.3,
            d = 0.2,
            kummer = [1.5, 2.5]
        ),
        pt!(
            al = 0.6,
            be1 = 1.3,
            be2 = 0.4,
            ga = 1.9,
            x = -0.3,
            y = -0.6,
            b = 0.05,
            d = 0.4
        ),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for (x, y) in [(0.2, -0.4), (0.5, 0.1), (-0.6, 0.6), (0.7, 0.7)] {
            for (b, d) in REGS {
                out.push(pt!(
                    al = 0.9,
                    be1 = 0.6,
                    be2 = 0.8,
                    ga = 2.4,
                    x = x,
                    y = y,
                    b = b,
                    d = d
                ));
                out.push(pt!(
                    al = 1.4,
                    be1 = 1.1,
                    be2 = 0.3,
                    ga = 2.9,
                    x = x,
                    y = y,
                    b = b,
                    d = d
                ));
            }
        }
        out
    })
}

fn f2_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(al = 1.0, be1 = 0.5, be2 = 0.5, ga1 = 1.5, ga2 = 1.5, x = 0.25, y = 0.25),
        pt!(
            al = 1.0,
            be1 = 0.6,
            be2 = 0.7,
            ga1 = 2.0,
            ga2 = 2.2,
            x = 0.2,
            y = 0.3,
            b = 0.1,
            d = 0.2
        ),
        pt!(
            al = 0.9,
            be1 = 0.6,
            be2 = 0.8,
            ga1 = 1.9,
            ga2 = 2.1,
            x = -0.3,
            y = 0.2,
            b = 0.2,
            d = 0.0
        ),
        pt!(
            al = 1.0,
            be1 = 0.5,
            be2 = 0.6,
            ga1 = 1.8,
            ga2 = 2.1,
            x = 0.1,
            y = -0.4,
            b = 0.2,
            d = 0.2
        ),
        pt!(
            al = 1.1,
            be1 = 0.7,
            be2 = 0.4,
            ga1 = 2.3,
            ga2 = 1.6,
            x = 0.35,
            y = 0.3,
            b = 0.05,
            d = 0.3
        ),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for (x, y) in [(0.1, 0.1), (0.4, -0.2), (-0.35, -0.35), (0.2, 0.5)] {
            for (b, d) in REGS {
                out.push(pt!(
                    al = 0.8,
                    be1 = 0.5,
                    be2 = 0.9,
                    ga1 = 1.7,
                    ga2 = 2.4,
                    x = x,
                    y = y,
                    b = b,
                    d = d
                ));
            }
        }
        out
    })
}

fn f1_transform_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(al = 1.0, be1 = 0.7, be2 = 0.9, ga = 2.3, x = 0.3, y = 0.5),
        pt!(
            al = 1.0,
            be1 = 0.7,
            be2 = 0.9,
            ga = 2.3,
            x = 0.3,
            y = 0.5,
            b = 0.2,
            d = 0.1
        ),
        pt!(
            al = 1.2,
            be1 = 0.5,
            be2 = 0.8,
            ga = 2.6,
            x = 0.2,
            y = -3.0,
            b = 0.3,
            d = 0.2
        ),
        pt!(
            al = 0.8,
            be1 = 0.6,
            be2 = 1.1,
            ga = 2.2,
            x = -0.4,
            y = 0.6,
            b = 0.1,
            d = 0.3
        ),
        pt!(
            al = 1.1,
            be1 = 0.9,
            be2 = 0.4,
            ga = 2.5,
            x = -1.5,
            y = -0.5,
            b = 0.25,
            d = 0.25
        ),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for (x, y) in [(0.1, 0.2), (-0.5, 0.4), (0.6, -0.8), (-2.0, 0.3)] {
            for (b, d) in REGS {
                out.push(pt!(
                    al = 0.9,
                    be1 = 0.6,
                    be2 = 0.8,
                    ga = 2.4,
                    x = x,
                    y = y,
                    b = b,
                    d = d
                ));
                out.push(pt!(
                    al = 1.4,
                    be1 = 1.1,
                    be2 = 0.3,
                    ga = 2.9,
                    x = x,
                    y = y,
                    b = b,
                    d = d
                ));
            }
        }
        out
    })
}

fn reflect_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(
            al = 1.0,
            be1 = 0.5,
            be2 = 0.6,
            ga1 = 1.8,
            ga2 = 2.1,
            x = 0.2,
            y = 0.25,
            b = 0.2,
            d = 0.2
        ),
        pt!(al = 1.0, be1 = 0.5, be2 = 0.6, ga1 = 1.8, ga2 = 2.1, x = 0.2, y = 0.25),
        pt!(
            al = 0.8,
            be1 = 0.7,
            be2 = 0.5,
            ga1 = 2.0,
            ga2 = 1.7,
            x = 0.15,
            y = 0.3,
            b = 0.1,
            d = 0.1
        ),
        pt!(
            al = 1.2,
            be1 = 0.6,
            be2 = 0.9,
            ga1 = 2.2,
            ga2 = 2.4,
            x = 0.3,
            y = 0.1,
            b = 0.3,
            d = 0.3
        ),
        pt!(
            al = 0.9,
            be1 = 0.4,
            be2 = 0.8,
            ga1 = 1.6,
            ga2 = 2.3,
            x = 0.1,
            y = 0.35,
            b = 0.05,
            d = 0.05
        ),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for (x, y) in [(0.1, 0.1), (0.3, 0.2), (0.05, 0.4), (0.25, 0.25)] {
            for r in [0.0, 0.15, 0.4] {
                out.push(pt!(
                    al = 0.7,
                    be1 = 0.5,
                    be2 = 0.6,
                    ga1 = 1.9,
                    ga2 = 2.0,
                    x = x,
                    y = y,
                    b = r,
                    d = r
                ));
            }
        }
        out
    })
}

fn swapped_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(
            al = 1.0,
            be1 = 0.5,
            be2 = 0.6,
            ga1 = 1.8,
            ga2 = 2.1,
            x = 0.2,
            y = 0.25,
            b = 0.1,
            d = 0.4
        ),
        pt!(
            al = 1.0,
            be1 = 0.5,
            be2 = 0.6,
            ga1 = 1.8,
            ga2 = 2.1,
            x = 0.2,
            y = 0.25,
            b = 0.2,
            d = 0.2
        ),
        pt!(al = 0.8, be1 = 0.7, be2 = 0.5, ga1 = 2.0, ga2 = 1.7, x = 0.15, y = 0.3),
        pt!(
            al = 1.2,
            be1 = 0.6,
            be2 = 0.9,
            ga1 = 2.2,
            ga2 = 2.4,
            x = 0.3,
            y = 0.1,
            b = 0.3,
            d = 0.05
        ),
        pt!(
            al = 0.9,
            be1 = 0.4,
            be2 = 0.8,
            ga1 = 1.6,
            ga2 = 2.3,
            x = 0.1,
            y = 0.35,
            b = 0.0,
            d = 0.2
        ),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for (x, y) in [(0.1, 0.1), (0.3, 0.2), (0.05, 0.4), (0.25, 0.25)] {
            for (b, d) in REGS {
                out.push(pt!(
                    al = 0.7,
                    be1 = 0.5,
                    be2 = 0.6,
                    ga1 = 1.9,
                    ga2 = 2.0,
                    x = x,
                    y = y,
                    b = b,
                    d = d
                ));
            }
        }
        out
    })
}

fn reflect(which: F2Transform, p: &Point, tol: f64) -> Result<Sides> {
    f2_transform(&f2(p)?, p.get("x"), p.get("y"), which, tol)
}

fn recursion_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(
            al = 1.0,
            be1 = 0.5,
            be2 = 0.6,
            ga1 = 1.9,
            ga2 = 2.8,
            x = 0.2,
            y = 0.3,
            n = 1
        ),
        pt!(
            al = 1.0,
            be1 = 0.5,
            be2 = 0.6,
            ga1 = 1.9,
            ga2 = 2.8,
            x = 0.2,
            y = 0.3,
            n = 2
        ),
        pt!(
            al = 0.9,
            be1 = 0.6,
            be2 = 0.7,
            ga1 = 2.1,
            ga2 = 3.0,
            x = -0.2,
            y = 0.25,
            b = 0.1,
            d = 0.2,
            n = 1
        ),
        pt!(
            al = 0.9,
            be1 = 0.6,
            be2 = 0.7,
            ga1 = 2.1,
            ga2 = 3.0,
            x = -0.2,
            y = 0.25,
            b = 0.1,
            d = 0.2,
            n = 2
        ),
        pt!(
            al = 1.1,
            be1 = 0.4,
            be2 = 0.5,
            ga1 = 1.8,
            ga2 = 2.2,
            x = 0.3,
            y = -0.3,
            b = 0.2,
            d = 0.1,
            n = 1
        ),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for n in [1, 2] {
            for (x, y) in [(0.1, 0.1), (0.35, -0.2), (-0.3, 0.4)] {
                for (b, d) in REGS {
                    out.push(pt!(
                        al = 0.8,
                        be1 = 0.5,
                        be2 = 0.8,
                        ga1 = 1.7,
                        ga2 = 3.1,
                        x = x,
                        y = y,
                        b = b,
                        d = d,
                        n = n
                    ));
                }
            }
        }
        out
    })
}

fn recursion(which: F2Recursion, p: &Point, v: Variant, tol: f64) -> Result<Sides> {
    f2_recursion(&f2(p)?, p.uint("n"), which, p.get("x"), p.get("y"), v, tol)
}

fn partial_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(s = 1, t = 1, u = 0.5, x = 0.3, y = 0.7),
        pt!(s = 2, t = 1, u = 0.9, x = -0.4, y = 0.6),
        pt!(s = 2, t = 3, u = 0.8, x = 0.2, y = 0.9),
        pt!(s = 3, t = 2, u = -1.2, x = 0.5, y = -0.1),
        pt!(s = 4, t = 4, u = 0.3, x = 1.5, y = -2.0),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for s in 1..=3 {
            for t in 1..=3 {
                for (u, x, y) in [(0.4, 0.3, -0.6), (1.1, 0.2, 0.5)] {
                    out.push(pt!(s = s, t = t, u = u, x = x, y = y));
                }
            }
        }
        out
    })
}

fn partial(p: &Point, _: Variant, _: f64) -> Result<Sides> {
    let (s, t) = (p.uint("s"), p.uint("t"));
    let (u, x, y) = (p.get("u"), p.get("x"), p.get("y"));
    let lhs = partial_fraction_power_expansion(s, t, u, x, y)?;
    let rhs = (1.0 - u * x).powi(-(s as i32)) * (1.0 - u * y).powi(-(t as i32));
    Ok(Sides::new(lhs, 0.0, rhs, 0.0))
}

fn finite_sum_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(s = 0, t = 0, x = 0.3, y = 0.6),
        pt!(s = 1, t = 0, x = 0.3, y = 0.6, b = 0.1, d = 0.2),
        pt!(s = 0, t = 1, x = -0.4, y = 0.5, b = 0.2, d = 0.1),
        pt!(s = 1, t = 1, x = 0.2, y = -0.5, b = 0.15, d = 0.15),
        pt!(s = 1, t = 1, x = 0.45, y = 0.1),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for s in 0..=2 {
            for t in 0..=2 {
                for (x, y, b, d) in [(0.25, -0.35, 0.0, 0.0), (0.5, 0.2, 0.1, 0.3), (-0.6, 0.4, 0.2, 0.05)] {
                    out.push(pt!(s = s, t = t, x = x, y = y, b = b, d = d));
                }
            }
        }
        out
    })
}

/// F1(1, s+1, t+1; 2; x, y) by series against its finite-sum form.
fn finite_sum(p: &Point, v: Variant, tol: f64) -> Result<Sides> {
    let (s, t, x, y) = (p.uint("s"), p.uint("t"), p.get("x"), p.get("y"));
    let (k, r) = (p.kernel()?, p.reg()?);
    let a = AppellParams::f1(k, 1.0, s as f64 + 1.0, t as f64 + 1.0, 2.0, r);
    sides(f1_series(&a, x, y, tol)?, f1_finite_sum(k, s, t, x, y, r, v, tol)?)
}

fn log_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(s = 0, t = 0, x = 0.3, y = 0.6),
        pt!(s = 1, t = 0, x = 0.3, y = 0.6),
        pt!(s = 0, t = 1, x = -0.4, y = 0.5),
        pt!(s = 1, t = 1, x = 0.2, y = -0.5),
        pt!(s = 2, t = 1, x = 0.45, y = 0.1),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for s in 0..=3 {
            for t in 0..=3 {
                for (x, y) in [(0.25, -0.35), (0.5, 0.2)] {
                    out.push(pt!(s = s, t = t, x = x, y = y));
                }
            }
        }
        out
    })
}

fn finite_sum_log(p: &Point, _: Variant, tol: f64) -> Result<Sides> {
    let (s, t, x, y) = (p.uint("s"), p.uint("t"), p.get("x"), p.get("y"));
    let a = AppellParams::f1(
        exthyp::Kernel::Exponential,
        1.0,
        s as f64 + 1.0,
        t as f64 + 1.0,
        2.0,
        RegPair::ZERO,
    );
    exact_vs(f1_finite_sum_log(s, t, x, y)?, f1_series(&a, x, y, tol)?)
}
