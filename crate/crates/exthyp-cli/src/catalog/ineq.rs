//! Hardy-Hilbert constants, weights and inequalities.

use super::point::{pt, Point};
use super::{exact_vs, sized, Grid, Identity, Suite, ONE_FORM, PRINTED_CORRECTED};
use exthyp::corefn::{beta_classical, classical_pfq, ClassicalPfq};
use exthyp::ineq::{
    hilbert_check, hilbert_constant, rational_integral_identity, weight_identity, HilbertParams, RationalForm,
    RationalIntegral, TestFunction, WeightAxis,
};
use exthyp::{RegPair, Result, Sides, Variant};

/// Test-function pairs (f, g) in the textual form accepted by the CLI.
pub const TEST_PAIRS: [(&str, &str); 6] = [
    ("exp_decay:0", "exp_decay:0"),
    ("exp_decay:1", "bump:1,2"),
    ("power_cut:0.3,2", "bump:0.5,3"),
    ("bump:0.5,1.5", "exp_decay:2"),
    ("power_cut:0,1*2", "power_cut:0.5,3"),
    ("zero", "bump:1,2"),
];

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity::new(
            "lemma2-gamma-scaled",
            Suite::Ineq,
            ONE_FORM,
            rational_points,
            |p, _, t| rational_integral_identity(RationalForm::GammaScaled, &rational(p)?, t),
        ),
        Identity::new(
            "lemma2-alpha-scaled",
            Suite::Ineq,
            ONE_FORM,
            rational_points,
            |p, _, t| rational_integral_identity(RationalForm::AlphaScaled, &rational(p)?, t),
        ),
        Identity::new("lemma3-weight-x", Suite::Ineq, ONE_FORM, weight_points, |p, v, t| {
            weight_identity(&hilbert(p)?, WeightAxis::X, p.get("at"), v, t)
        }),
        Identity::new(
            "lemma3-weight-y",
            Suite::Ineq,
            PRINTED_CORRECTED,
            weight_points,
            |p, v, t| weight_identity(&hilbert(p)?, WeightAxis::Y, p.get("at"), v, t),
        ),
        Identity::new(
            "thm4.1-classical-constant",
            Suite::Ineq,
            ONE_FORM,
            classical_points,
            |p, _, t| exact_vs(std::f64::consts::PI, hilbert_constant(&hilbert(p)?, t)?),
        ),
        Identity::new(
            "thm4.1-constant-reduction",
            Suite::Ineq,
            ONE_FORM,
            reduction_points,
            reduction,
        ),
        Identity::new(
            "thm4.1-inequality",
            Suite::Ineq,
            ONE_FORM,
            inequality_points,
            |p, _, t| Ok(check(p, t)?.sides()),
        )
        .bound(),
        Identity::new(
            "thm4.1-dual-inequality",
            Suite::Ineq,
            ONE_FORM,
            inequality_points,
            |p, _, t| Ok(check(p, t)?.dual_sides()),
        )
        .bound(),
    ]
}

fn rational(p: &Point) -> Result<RationalIntegral> {
    RationalIntegral::new(
        p.get("a"),
        p.get("b"),
        p.get("c"),
        p.get("al"),
        p.get("ga"),
        RegPair::new(p.get("pt"), p.get("qt"))?,
    )
}

fn rational_points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(a = 1.1, b = 0.6, c = 0.9, al = 0.7, ga = 1.0, pt = 0.2, qt = 0.3),
        pt!(a = 1.0, b = 0.7, c = 1.2, al = 0.8, ga = 1.0, pt = 0.0, qt = 0.0),
        pt!(a = 0.8, b = 1.2, c = 1.5, al = 1.5, ga = 1.0, pt = 0.1, qt = 0.1),
        pt!(a = 1.5, b = 0.9, c = 0.6, al = 0.4, ga = 0.9, pt = 0.3, qt = 0.05),
        pt!(a = 2.0, b = 1.5, c = 1.0, al = 1.0, ga = 1.0, pt = 0.1, qt = 0.2),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for (al, ga) in [(0.5, 1.0), (1.2, 0.8), (2.5, 1.5)] {
            for (pt, qt) in [(0.0, 0.0), (0.2, 0.1), (0.05, 0.4)] {
                out.push(pt!(a = 0.9, b = 0.8, c = 1.3, al = al, ga = ga, pt = pt, qt = qt));
            }
        }
        out
    })
}

/// Hilbert parameters; `A1`/`A2` default to the middle of their ranges.
fn hilbert(p: &Point) -> Result<HilbertParams> {
    let mut hp = HilbertParams {
        p: p.get("p"),
        q: p.get("q"),
        s1: p.get("s1"),
        s2: p.get("s2"),
        scale1: p.get("a1"),
        scale2: p.get("a2"),
        power1: 0.0,
        power2: 0.0,
        reg: RegPair::new(p.get("pt"), p.get("qt"))?,
    };
    let mid = |r: (f64, f64)| 0.5 * (r.0 + r.1);
    hp.power1 = p.opt("A1").unwrap_or_else(|| mid(hp.power1_range()));
    hp.power2 = p.opt("A2").unwrap_or_else(|| mid(hp.power2_range()));
    Ok(hp)
}

/// Parameter points admissible for the inequality.
fn hilbert_bases() -> [Point; 4] {
    [
        pt!(
            p = 2.0,
            q = 2.0,
            s1 = 1.0,
            s2 = 0.0,
            a1 = 1.0,
            a2 = 1.0,
            A1 = 0.25,
            A2 = 0.25,
            pt = 0.0,
            qt = 0.0
        ),
        pt!(
            p = 2.0,
            q = 2.0,
            s1 = 0.6,
            s2 = 0.7,
            a1 = 1.0,
            a2 = 1.4,
            pt = 0.2,
            qt = 0.2
        ),
        pt!(
            p = 1.5,
            q = 2.5,
            s1 = 0.8,
            s2 = 0.5,
            a1 = 1.2,
            a2 = 0.9,
            pt = 0.1,
            qt = 0.3
        ),
        pt!(
            p = 3.0,
            q = 1.4,
            s1 = 1.2,
            s2 = 0.4,
            a1 = 0.8,
            a2 = 1.1,
            pt = 0.3,
            qt = 0.0
        ),
    ]
}

fn weight_points(g: Grid) -> Vec<Point> {
    let [classical, even, mixed, skew] = hilbert_bases();
    let base = vec![
        pt!(
            p = 2.5,
            q = 2.5,
            s1 = 0.6,
            s2 = 0.6,
            a1 = 1.0,
            a2 = 1.5,
            pt = 0.1,
            qt = 0.1,
            at = 1.7
        ),
        classical.with("at", 1.0),
        even.with("at", 2.5),
        mixed.with("at", 0.6),
        skew.with("at", 1.0),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for b in hilbert_bases() {
            for at in [0.3, 4.0] {
                for (pt, qt) in [(0.0, 0.0), (0.15, 0.05), (0.05, 0.25)] {
                    out.push(b.with("pt", pt).with("qt", qt).with("at", at));
                }
            }
        }
        out
    })
}

fn classical_points(g: Grid) -> Vec<Point> {
    let [classical, ..] = hilbert_bases();
    sized(g, vec![classical], Vec::new)
}

fn reduction_points(g: Grid) -> Vec<Point> {
    let [classical, even, mixed, skew] = hilbert_bases();
    let zero = |p: Point| p.with("pt", 0.0).with("qt", 0.0);
    let base = vec![
        zero(mixed.clone()),
        zero(even.clone()),
        zero(skew.clone()),
        classical.clone(),
        pt!(
            p = 1.8,
            q = 2.0,
            s1 = 0.3,
            s2 = 0.9,
            a1 = 1.5,
            a2 = 1.0,
            pt = 0.0,
            qt = 0.0
        ),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for b in [even, mixed, skew] {
            for (s1, s2) in [(0.5, 0.5), (1.1, 0.3), (0.4, 1.3)] {
                out.push(zero(b.with("s1", s1).with("s2", s2)));
            }
        }
        out
    })
}

/// Undamped constant against the same product built from the plain Gauss function.
fn reduction(p: &Point, _: Variant, tol: f64) -> Result<Sides> {
    let hp = hilbert(p)?;
    let k = hilbert_constant(&hp, tol)?;
    let (pc, qc) = (hp.p_conj(), hp.q_conj());
    let total = hp.s1 + hp.s2;
    let z = (hp.scale1 - hp.scale2) / hp.scale1;
    let part = |first: f64, lower: f64, root: f64| -> Result<f64> {
        let f = classical_pfq(&ClassicalPfq::new(&[first, lower], &[total]), z)?.value;
        Ok((beta_classical(lower, total - lower)? * f).powf(1.0 / root))
    };
    let x_side = hp.scale1.powf(hp.power2 - 1.0 / qc) * part(hp.s2, 1.0 - qc * hp.power2, qc)?;
    let y_side = hp.scale1.powf(-hp.s1 / pc)
        * hp.scale2.powf((1.0 - hp.s2) / pc - hp.power1)
        * part(hp.s1, 1.0 - pc * hp.power1, pc)?;
    exact_vs(x_side * y_side, k)
}

fn inequality_points(g: Grid) -> Vec<Point> {
    let bases = hilbert_bases();
    let all: Vec<Point> = bases
        .iter()
        .flat_map(|b| (0..TEST_PAIRS.len()).map(move |i| b.with("pair", i as i32)))
        .collect();
    // a spread of parameter points and pairs first, the rest on the full grid
    let picks = [(0, 0), (1, 1), (2, 2), (3, 3), (0, 5)];
    let base: Vec<Point> = picks.iter().map(|&(b, f)| bases[b].with("pair", f)).collect();
    let rest: Vec<Point> = all.into_iter().filter(|p| !base.contains(p)).collect();
    sized(g, base, || rest)
}

fn check(p: &Point, tol: f64) -> Result<exthyp::ineq::HilbertReport> {
    let (f, g) = TEST_PAIRS[p.uint("pair") as usize];
    let parse = |s: &str| s.parse::<TestFunction>();
    hilbert_check(&hilbert(p)?, &parse(f)?, &parse(g)?, tol)
}
