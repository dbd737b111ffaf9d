//! Multi-variable Lauricella identities.

use super::point::{pt, Point};
use super::{sides, sized, Grid, Identity, Suite, ONE_FORM, PRINTED_CORRECTED, PRINTED_PROOF};
use exthyp::hyp::ext_2f1;
use exthyp::lauricella::{
    fa_integral_identity, fa_partial_series, fa_single_integral, fd_integral, fd_laplace_rep, fd_series,
    fd_summation_unit, product_integral_identity, LauricellaParams, ProductIntegral,
};
use exthyp::{Result, Sides, Variant};

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity::new(
            "thm3.9-fd-integral",
            Suite::Lauricella,
            ONE_FORM,
            fd_points,
            |p, _, t| {
                let lp = params(p)?;
                sides(fd_series(&lp, t)?, fd_integral(&lp, t)?)
            },
        ),
        Identity::new(
            "thm3.9-fd-summation",
            Suite::Lauricella,
            ONE_FORM,
            summation_points,
            |p, _, t| fd_summation_unit(p.kernel()?, p.get("al"), p.list("bes"), p.get("gas"), p.reg()?, t),
        ),
        Identity::new(
            "thm3.9-fd-collapse",
            Suite::Lauricella,
            ONE_FORM,
            collapse_points,
            collapse,
        ),
        Identity::new(
            "thm3.10-product-integral",
            Suite::Lauricella,
            PRINTED_PROOF,
            product_points,
            |p, v, t| product_integral_identity(&product(p)?, v, t),
        ),
        Identity::new(
            "thm3.11-fd-laplace",
            Suite::Lauricella,
            ONE_FORM,
            laplace_points,
            |p, _, t| fd_laplace_rep(&params(p)?, t),
        ),
        Identity::new(
            "thm3.12-fa-integral",
            Suite::Lauricella,
            PRINTED_CORRECTED,
            fa_points,
            |p, v, t| fa_integral_identity(&params(p)?, v, t),
        ),
        Identity::new(
            "thm3.12-fa-single-integral",
            Suite::Lauricella,
            PRINTED_CORRECTED,
            fa_single_points,
            |p, v, t| fa_single_integral(&params(p)?, v, t),
        ),
        Identity::new(
            "thm3.12-fa-partial-series",
            Suite::Lauricella,
            ONE_FORM,
            fa_partial_points,
            |p, _, t| fa_partial_series(&params(p)?, t),
        ),
    ]
}

/// F_D points carry one `gas` entry, F_A points one per variable.
fn params(p: &Point) -> Result<LauricellaParams> {
    LauricellaParams::new(
        p.kernel()?,
        p.get("al"),
        p.list("bes"),
        p.list("gas"),
        p.list("xs"),
        p.reg()?,
    )
}

fn fd_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(
            al = 1.2,
            bes = [0.5, 0.3, 0.7],
            gas = 2.6,
            xs = [0.2, -0.3, 0.4],
            b = 0.1,
            d = 0.2
        ),
        pt!(al = 1.0, bes = [0.5, 0.5], gas = 2.0, xs = [0.2, 0.4]),
        pt!(
            al = 0.9,
            bes = [0.7, 1.1],
            gas = 2.2,
            xs = [-0.5, 0.2],
            b = 0.1,
            d = 0.2
        ),
        pt!(
            al = 1.1,
            bes = [0.6, 1.4],
            gas = 2.5,
            xs = [0.6, -0.7],
            b = 0.2,
            d = 0.2,
            kummer = [1.5, 2.5]
        ),
        pt!(al = 0.8, bes = [1.3], gas = 2.1, xs = [0.45], b = 0.2, d = 0.3),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for xs in [[0.1, 0.2, 0.3], [-0.6, 0.5, 0.1], [0.7, 0.7, -0.2], [-0.4, -0.4, -0.4]] {
            for (b, d) in [(0.0, 0.0), (0.1, 0.3), (0.4, 0.1)] {
                out.push(pt!(al = 0.9, bes = [0.4, 0.8, 0.6], gas = 2.7, xs = xs, b = b, d = d));
                out.push(pt!(
                    al = 1.3,
                    bes = [0.5, 0.2],
                    gas = 2.4,
                    xs = [xs[0], xs[1]],
                    b = b,
                    d = d
                ));
            }
        }
        out
    })
}

fn summation_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(al = 0.9, bes = [0.4, 0.6], gas = 3.1, b = 0.2, d = 0.1),
        pt!(al = 1.0, bes = [0.5], gas = 2.5),
        pt!(al = 0.7, bes = [0.3, 0.4, 0.2], gas = 2.9, b = 0.1, d = 0.3),
        pt!(al = 1.1, bes = [0.6, 0.5], gas = 3.0, b = 0.05, d = 0.2),
        pt!(
            al = 0.9,
            bes = [0.4, 0.6],
            gas = 3.1,
            b = 0.2,
            d = 0.1,
            kummer = [1.5, 2.5]
        ),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for (b, d) in [(0.0, 0.0), (0.1, 0.3), (0.4, 0.1)] {
            for gas in [2.4, 3.0, 3.8] {
                out.push(pt!(al = 0.8, bes = [0.3, 0.5], gas = gas, b = b, d = d));
                out.push(pt!(al = 1.2, bes = [0.2, 0.3, 0.1], gas = gas, b = b, d = d));
            }
        }
        out
    })
}

fn collapse_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(al = 0.8, bes = [0.4, 0.5, 0.4], gas = 2.1, x = 0.45, b = 0.2, d = 0.3),
        pt!(al = 1.0, bes = [0.5, 0.5], gas = 2.0, x = 0.3),
        pt!(al = 0.9, bes = [0.3, 0.6], gas = 2.4, x = -0.6, b = 0.1, d = 0.1),
        pt!(
            al = 1.2,
            bes = [0.2, 0.3, 0.4, 0.1],
            gas = 2.8,
            x = 0.7,
            b = 0.3,
            d = 0.2
        ),
        pt!(al = 0.7, bes = [1.1, 0.4], gas = 1.9, x = -0.3, b = 0.05, d = 0.25),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for x in [-0.7, -0.2, 0.25, 0.6] {
            for (b, d) in [(0.0, 0.0), (0.1, 0.3), (0.4, 0.1)] {
                out.push(pt!(al = 0.9, bes = [0.4, 0.8, 0.6], gas = 2.7, x = x, b = b, d = d));
                out.push(pt!(al = 1.3, bes = [0.5, 0.2], gas = 2.4, x = x, b = b, d = d));
            }
        }
        out
    })
}

/// Equal arguments reduce F_D to a Gauss function with the summed β.
fn collapse(p: &Point, _: Variant, tol: f64) -> Result<Sides> {
    let bes = p.list("bes");
    let x = p.get("x");
    let lp = LauricellaParams::new(
        p.kernel()?,
        p.get("al"),
        bes,
        &[p.get("gas")],
        &vec![x; bes.len()],
        p.reg()?,
    )?;
    let total: f64 = bes.iter().sum();
    let two = ext_2f1(&p.kernel()?, total, p.get("al"), p.get("gas"), x, p.reg()?, tol)?;
    sides(fd_series(&lp, tol)?, two)
}

fn product(p: &Point) -> Result<ProductIntegral> {
    Ok(ProductIntegral {
        kernel: p.kernel()?,
        lo: p.get("lo"),
        hi: p.get("hi"),
        alpha: p.get("al"),
        beta: p.get("be"),
        slopes: p.list("sl").to_vec(),
        offsets: p.list("of").to_vec(),
        powers: p.list("pw").to_vec(),
        reg: p.reg()?,
    })
}

fn product_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(
            lo = 0.0,
            hi = 1.0,
            al = 1.3,
            be = 0.8,
            sl = [-0.3, -0.5],
            of = [1.0, 1.0],
            pw = [-0.7, -1.2],
            b = 0.1,
            d = 0.2
        ),
        pt!(
            lo = 1.0,
            hi = 3.0,
            al = 0.9,
            be = 1.4,
            sl = [0.2],
            of = [1.0],
            pw = [-0.6],
            b = 0.2,
            d = 0.1
        ),
        pt!(
            lo = 0.5,
            hi = 2.0,
            al = 1.1,
            be = 0.7,
            sl = [0.3, -0.1],
            of = [1.0, 2.0],
            pw = [0.5, -1.5]
        ),
        pt!(
            lo = -1.0,
            hi = 1.0,
            al = 0.8,
            be = 1.2,
            sl = [0.2, 0.1, -0.2],
            of = [2.0, 1.5, 1.0],
            pw = [1.3, -0.4, 0.7],
            b = 0.1,
            d = 0.1
        ),
        pt!(
            lo = 2.0,
            hi = 2.5,
            al = 1.5,
            be = 0.9,
            sl = [1.0],
            of = [0.5],
            pw = [-2.0],
            b = 0.3,
            d = 0.2
        ),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for (lo, hi) in [(0.0, 2.0), (1.0, 1.5), (-0.5, 0.5)] {
            for (b, d) in [(0.0, 0.0), (0.1, 0.3), (0.4, 0.1)] {
                out.push(pt!(
                    lo = lo,
                    hi = hi,
                    al = 1.2,
                    be = 0.9,
                    sl = [0.1, -0.2],
                    of = [1.0, 1.0],
                    pw = [-0.8, 0.6],
                    b = b,
                    d = d
                ));
                out.push(pt!(
                    lo = lo,
                    hi = hi,
                    al = 0.7,
                    be = 1.6,
                    sl = [0.25],
                    of = [1.5],
                    pw = [1.7],
                    b = b,
                    d = d
                ));
            }
        }
        out
    })
}

fn laplace_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(al = 1.0, bes = [0.8], gas = 2.0, xs = [0.3]),
        pt!(
            al = 0.9,
            bes = [0.7, 1.1],
            gas = 2.2,
            xs = [0.15, 0.2],
            b = 0.1,
            d = 0.2
        ),
        pt!(
            al = 0.9,
            bes = [0.7, 1.1],
            gas = 2.2,
            xs = [-0.5, 0.2],
            b = 0.1,
            d = 0.2
        ),
        pt!(al = 1.2, bes = [0.5], gas = 2.4, xs = [-0.6], b = 0.2, d = 0.3),
        pt!(
            al = 0.8,
            bes = [0.6, 0.4],
            gas = 1.9,
            xs = [0.3, -0.3],
            b = 0.05,
            d = 0.1
        ),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for xs in [[0.1, 0.2], [-0.6, 0.5], [0.7, -0.2], [-0.4, -0.4]] {
            for (b, d) in [(0.0, 0.0), (0.1, 0.3), (0.4, 0.1)] {
                out.push(pt!(al = 0.9, bes = [0.4, 0.8], gas = 2.7, xs = xs, b = b, d = d));
                out.push(pt!(al = 1.3, bes = [0.5], gas = 2.4, xs = [xs[0]], b = b, d = d));
            }
        }
        out
    })
}

fn fa_grid() -> Vec<Point> {
    let mut out = Vec::new();
    for xs in [[0.1, 0.2], [-0.3, 0.4], [0.45, -0.2], [-0.25, -0.25]] {
        for (b, d) in [(0.0, 0.0), (0.1, 0.3), (0.4, 0.1)] {
            out.push(pt!(al = 0.9, bes = [0.4, 0.8], gas = [1.6, 2.2], xs = xs, b = b, d = d));
            out.push(pt!(al = 1.3, bes = [0.5], gas = [1.9], xs = [xs[0]], b = b, d = d));
        }
    }
    out
}

fn fa_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(
            al = 1.0,
            bes = [0.6, 0.7],
            gas = [1.8, 2.1],
            xs = [0.2, 0.25],
            b = 0.1,
            d = 0.1
        ),
        pt!(al = 1.1, bes = [0.7], gas = [1.9], xs = [0.6], b = 0.15, d = 0.05),
        pt!(al = 1.2, bes = [0.6, 0.7], gas = [1.8, 2.1], xs = [0.2, -0.25]),
        pt!(al = 0.9, bes = [0.5], gas = [1.6], xs = [-0.5], b = 0.2, d = 0.2),
        pt!(
            al = 0.8,
            bes = [0.5, 0.6],
            gas = [1.5, 1.7],
            xs = [0.3, 0.3],
            b = 0.1,
            d = 0.2
        ),
    ];
    sized(g, base, fa_grid)
}

fn fa_single_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(al = 1.0, bes = [0.8], gas = [2.0], xs = [0.3]),
        pt!(al = 1.2, bes = [0.6, 0.7], gas = [1.8, 2.1], xs = [0.2, -0.25]),
        pt!(
            al = 1.2,
            bes = [0.6, 0.7],
            gas = [1.8, 2.1],
            xs = [0.2, -0.25],
            b = 0.1,
            d = 0.2
        ),
        pt!(al = 0.9, bes = [0.5], gas = [1.6], xs = [-0.5], b = 0.2, d = 0.2),
        pt!(al = 1.1, bes = [0.7], gas = [1.9], xs = [0.6], b = 0.15, d = 0.05),
    ];
    sized(g, base, fa_grid)
}

fn fa_partial_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(
            al = 1.0,
            bes = [0.6, 0.7],
            gas = [1.8, 2.1],
            xs = [0.2, 0.25],
            b = 0.1,
            d = 0.1
        ),
        pt!(
            al = 0.9,
            bes = [0.5, 0.6, 0.7],
            gas = [1.5, 1.7, 2.0],
            xs = [0.1, -0.2, 0.15],
            b = 0.1,
            d = 0.2
        ),
        pt!(al = 1.2, bes = [0.6, 0.7], gas = [1.8, 2.1], xs = [0.2, -0.25]),
        pt!(
            al = 0.8,
            bes = [0.5, 0.6],
            gas = [1.5, 1.7],
            xs = [0.3, 0.3],
            b = 0.1,
            d = 0.2
        ),
        pt!(
            al = 1.1,
            bes = [0.7, 0.5],
            gas = [1.9, 1.6],
            xs = [0.3, -0.4],
            b = 0.15,
            d = 0.05
        ),
    ];
    sized(g, base, || {
        fa_grid().into_iter().filter(|p| p.list("xs").len() > 1).collect()
    })
}
