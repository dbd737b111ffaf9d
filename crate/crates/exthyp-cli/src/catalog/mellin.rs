//! Contour-integral representation against series or Euler-integral values.

use super::hyp::pfq;
use super::point::{pt, Point};
use super::{sides, sized, Grid, Identity, Suite, ONE_FORM};
use exthyp::hyp::{eval_pfq, MethodChoice};
use exthyp::mellin::{mb_eval, ContourSpec};
use exthyp::{Result, Sides, Variant};

pub(super) fn identities() -> Vec<Identity> {
    vec![Identity::new(
        "thm2.4-mellin-barnes",
        Suite::Mellin,
        ONE_FORM,
        points,
        contour,
    )]
}

fn points(g: Grid) -> Vec<Point> {
    let base = vec![
        pt!(up = [1.0, 1.0], lo = [2.0], z = -0.5),
        pt!(up = [0.8, 1.1], lo = [2.4], z = -1.0, b = 0.2, d = 0.3),
        pt!(up = [0.7], lo = [1.9], z = -0.25, b = 0.1, d = 0.2),
        pt!(up = [0.7], lo = [1.9], z = -1.0),
        pt!(
            up = [0.8, 1.1],
            lo = [2.4],
            z = -0.25,
            b = 0.1,
            d = 0.1,
            kummer = [1.5, 2.5]
        ),
    ];
    sized(g, base, || {
        let mut out = Vec::new();
        for z in [-0.25, -0.5, -1.0, -2.0] {
            for (b, d) in [(0.0, 0.0), (0.1, 0.3), (0.4, 0.2)] {
                out.push(pt!(up = [0.9, 1.3], lo = [2.6], z = z, b = b, d = d));
                out.push(pt!(up = [1.2], lo = [2.1], z = z, b = b, d = d));
            }
        }
        out
    })
}

fn contour(p: &Point, _: Variant, tol: f64) -> Result<Sides> {
    let spec = pfq(p)?;
    let z = p.get("z");
    let reference = eval_pfq(&spec, z, MethodChoice::Auto, tol)?;
    sides(mb_eval(&spec, z, ContourSpec::default_for(&spec)?, tol)?, reference)
}
