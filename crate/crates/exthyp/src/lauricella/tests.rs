use super::*;
use crate::appell::{f1_series, f2_series};
use crate::hyp::ext_2f1;
use proptest::prelude::*;

const TOL: f64 = 1e-12;
const EXP: Kernel = Kernel::Exponential;

fn reg(b: f64, d: f64) -> RegPair {
    RegPair::new(b, d).unwrap()
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * (1.0 + b.abs())
}

fn fd(alpha: f64, betas: &[f64], gamma: f64, xs: &[f64], r: RegPair) -> LauricellaParams {
    LauricellaParams::new(EXP, alpha, betas, &[gamma], xs, r).unwrap()
}

fn fa(alpha: f64, betas: &[f64], gammas: &[f64], xs: &[f64], r: RegPair) -> LauricellaParams {
    LauricellaParams::new(EXP, alpha, betas, gammas, xs, r).unwrap()
}

#[test]
fn fd_frozen_values() {
    let p = fd(1.2, &[0.5, 0.3, 0.7], 2.6, &[0.2, -0.3, 0.4], reg(0.1, 0.2));
    let want = 0.487_823_708_899_354_87;
    assert!(close(fd_series(&p, TOL).unwrap().value, want, 1e-11));
    assert!(close(fd_integral(&p, TOL).unwrap().value, want, 1e-11));
    let p = fd(1.0, &[0.5, 0.5], 2.0, &[0.2, 0.4], reg(0.1, 0.2));
    let want = 0.445_660_884_534_765_15;
    assert!(close(fd_series(&p, TOL).unwrap().value, want, 1e-11));
    let p = fd(1.0, &[0.5, 0.5], 2.0, &[0.2, 0.4], RegPair::ZERO);
    let s = fd_series(&p, TOL).unwrap().value;
    assert!(close(s, 1.192_642_469_085_159_5, 1e-12));
    assert!(close(fd_integral(&p, TOL).unwrap().value, s, 1e-10));
}

#[test]
fn fd_reductions() {
    let r = reg(0.2, 0.3);
    let one = fd(0.8, &[1.3], 2.1, &[0.45], r);
    let g = ext_2f1(&EXP, 1.3, 0.8, 2.1, 0.45, r, TOL).unwrap().value;
    assert!(close(fd_series(&one, TOL).unwrap().value, g, 1e-12));
    let same = fd(0.8, &[0.4, 0.5, 0.4], 2.1, &[0.45; 3], r);
    assert!(close(fd_series(&same, TOL).unwrap().value, g, 1e-9));
    let zero = fd(0.8, &[0.4, 0.5], 2.1, &[0.0, 0.0], r);
    let b0 = ext_beta(&EXP, 0.8, 1.3, r, TOL).unwrap().value / beta_classical(0.8, 1.3).unwrap();
    assert!(close(fd_series(&zero, TOL).unwrap().value, b0, 1e-12));
    let flat = fd(0.8, &[0.0, 0.0], 2.1, &[0.6, -0.9], r);
    assert!(close(fd_integral(&flat, TOL).unwrap().value, b0, 1e-12));
    let two = fd(0.8, &[0.4, 0.7], 2.1, &[0.3, -0.5], r);
    let f1 = f1_series(&AppellParams::f1(EXP, 0.8, 0.4, 0.7, 2.1, r), 0.3, -0.5, TOL)
        .unwrap()
        .value;
    assert!(close(fd_series(&two, TOL).unwrap().value, f1, 1e-12));
}

#[test]
fn fd_unit_summation() {
    let s = fd_summation_unit(EXP, 1.0, &[1.0], 4.0, RegPair::ZERO, TOL).unwrap();
    // Γ(4)Γ(2)/(Γ(3)Γ(3)) = 1.5
    assert!(close(s.rhs, 1.5, 1e-14));
    assert!(s.residual() < 1e-10, "{s:?}");
    let s = fd_summation_unit(EXP, 0.9, &[0.4, 0.6], 3.1, reg(0.2, 0.1), TOL).unwrap();
    assert!(s.residual() < 1e-8, "{s:?}");
    let s = fd_summation_unit(EXP, 0.9, &[0.0, 0.0], 3.1, reg(0.2, 0.1), TOL).unwrap();
    assert!(s.residual() < 1e-10);
    assert!(fd_summation_unit(EXP, 0.9, &[1.0, 1.5], 3.1, RegPair::ZERO, TOL).is_err());
}

fn product(
    lo: f64,
    hi: f64,
    alpha: f64,
    beta: f64,
    slopes: &[f64],
    offsets: &[f64],
    powers: &[f64],
    r: RegPair,
) -> ProductIntegral {
    ProductIntegral {
        kernel: EXP,
        lo,
        hi,
        alpha,
        beta,
        slopes: slopes.to_vec(),
        offsets: offsets.to_vec(),
        powers: powers.to_vec(),
        reg: r,
    }
}

#[test]
fn product_integral_forms() {
    let ip = product(
        0.0,
        1.0,
        1.3,
        0.8,
        &[-0.3, -0.5],
        &[1.0, 1.0],
        &[-0.7, -1.2],
        reg(0.1, 0.2),
    );
    let s = product_integral_identity(&ip, Variant::Proof, TOL).unwrap();
    assert!(close(s.lhs, 0.584_712_372_753_327_37, 1e-11), "{s:?}");
    assert!(s.residual() < 1e-10, "{s:?}");
    // on the unit interval the two forms coincide
    let s = product_integral_identity(&ip, Variant::Printed, TOL).unwrap();
    assert!(s.residual() < 1e-10);
    let ip = product(1.0, 3.0, 0.9, 1.4, &[0.2], &[1.0], &[-0.6], reg(0.2, 0.1));
    let s = product_integral_identity(&ip, Variant::Proof, TOL).unwrap();
    assert!(close(s.lhs, 0.920_608_009_630_620_34, 1e-11), "{s:?}");
    assert!(s.residual() < 1e-10, "{s:?}");
    let s = product_integral_identity(&ip, Variant::Printed, TOL).unwrap();
    assert!(s.residual() > 1e-2);
    // constant factor: reduces to an extended beta with rescaled regularization
    let ip = product(1.0, 3.0, 0.9, 1.4, &[0.0], &[2.0], &[0.5], reg(0.2, 0.1));
    let s = product_integral_identity(&ip, Variant::Proof, TOL).unwrap();
    let b = ext_beta(&EXP, 0.9, 1.4, reg(0.1, 0.05), TOL).unwrap().value * 2f64.sqrt() * 2f64.powf(1.3);
    assert!(close(s.lhs, b, 1e-11) && close(s.rhs, b, 1e-11));
}

#[test]
fn laplace_representation() {
    let p = fd(1.0, &[0.8], 2.0, &[0.3], RegPair::ZERO);
    let s = fd_laplace_rep(&p, 1e-10).unwrap();
    assert!(s.residual() < 1e-9, "{s:?}");
    let p = fd(0.9, &[0.7, 1.1], 2.2, &[0.15, 0.2], reg(0.1, 0.2));
    let s = fd_laplace_rep(&p, 1e-9).unwrap();
    assert!(s.residual() < 1e-7, "{s:?}");
    let p = fd(0.9, &[0.7, 1.1], 2.2, &[-0.5, 0.2], reg(0.1, 0.2));
    let s = fd_laplace_rep(&p, 1e-9).unwrap();
    assert!(s.residual() < 1e-7, "{s:?}");
    // inner integral grows like e^{0.7 t1}
    let p = fd(0.9, &[0.4, 0.8], 2.7, &[0.7, -0.2], RegPair::ZERO);
    let s = fd_laplace_rep(&p, 1e-10).unwrap();
    assert!(s.residual() < 1e-8, "{s:?}");
}

#[test]
fn fa_frozen_values() {
    let p = fa(1.0, &[0.6, 0.7], &[1.8, 2.1], &[0.2, 0.25], reg(0.1, 0.1));
    let want = 0.235_460_194_616_355_8;
    assert!(close(fa_series(&p, TOL).unwrap().value, want, 1e-11));
    assert!(close(fa_integral(&p, 1e-10).unwrap().value, want, 1e-9));
    let p = fa(
        0.9,
        &[0.5, 0.6, 0.7],
        &[1.5, 1.7, 2.0],
        &[0.1, -0.2, 0.15],
        reg(0.1, 0.2),
    );
    assert!(close(
        fa_series(&p, TOL).unwrap().value,
        0.040_153_263_765_670_117,
        1e-11
    ));
}

#[test]
fn fa_near_the_convergence_boundary() {
    // mpmath appellf2 at r = 2; r = 3 against the same sum with one axis at 0
    let p = fa(0.6, &[0.3, 0.4], &[1.2, 1.1], &[-0.45, -0.45], RegPair::ZERO);
    let r = fa_series(&p, TOL).unwrap();
    assert!(r.converged && close(r.value, 0.873_675_688_629_391_5, 1e-13), "{r:?}");
    let p = fa(
        0.6,
        &[0.3, 0.4, 0.9],
        &[1.2, 1.1, 2.0],
        &[-0.45, -0.45, 0.0],
        RegPair::ZERO,
    );
    assert!(close(fa_series(&p, TOL).unwrap().value, 0.873_675_688_629_391_5, 1e-13));
}

#[test]
fn fa_reductions() {
    let r = reg(0.15, 0.05);
    let one = fa(1.1, &[0.7], &[1.9], &[0.6], r);
    let g = ext_2f1(&EXP, 1.1, 0.7, 1.9, 0.6, r, TOL).unwrap().value;
    assert!(close(fa_series(&one, TOL).unwrap().value, g, 1e-12));
    assert!(close(fa_integral(&one, TOL).unwrap().value, g, 1e-11));
    let two = fa(1.1, &[0.7, 0.5], &[1.9, 1.6], &[0.3, -0.4], r);
    let f2 = f2_series(&AppellParams::f2(EXP, 1.1, 0.7, 0.5, 1.9, 1.6, r), 0.3, -0.4, TOL)
        .unwrap()
        .value;
    assert!(close(fa_series(&two, TOL).unwrap().value, f2, 1e-12));
    let cut = fa(1.1, &[0.7, 0.5, 0.9], &[1.9, 1.6, 2.5], &[0.3, -0.4, 0.0], r);
    // a vanishing variable still contributes its m = 0 coefficient ratio
    let c0 = ext_beta(&EXP, 0.9, 1.6, r, TOL).unwrap().value / beta_classical(0.9, 1.6).unwrap();
    let c = fa_series(&cut, TOL).unwrap().value;
    assert!(close(c, c0 * f2, 1e-13), "{c} vs {}", c0 * f2);
    let plain = fa(
        1.1,
        &[0.7, 0.5, 0.9],
        &[1.9, 1.6, 2.5],
        &[0.3, -0.4, 0.0],
        RegPair::ZERO,
    );
    let f2 = f2_series(
        &AppellParams::f2(EXP, 1.1, 0.7, 0.5, 1.9, 1.6, RegPair::ZERO),
        0.3,
        -0.4,
        TOL,
    )
    .unwrap()
    .value;
    assert!(close(fa_series(&plain, TOL).unwrap().value, f2, 1e-13));
}

#[test]
fn fa_integral_normalization() {
    let p = fa(1.0, &[0.6, 0.7], &[1.8, 2.1], &[0.2, 0.25], reg(0.1, 0.1));
    let s = fa_integral_identity(&p, Variant::Corrected, 1e-10).unwrap();
    assert!(s.residual() < 1e-8, "{s:?}");
    let s = fa_integral_identity(&p, Variant::Printed, 1e-10).unwrap();
    assert!(s.residual() > 1e-2, "{s:?}");
}

#[test]
fn fa_single_integral_forms() {
    let p = fa(1.0, &[0.8], &[2.0], &[0.3], RegPair::ZERO);
    let s = fa_single_integral(&p, Variant::Corrected, 1e-10).unwrap();
    assert!(s.residual() < 1e-8, "{s:?}");
    assert!(fa_single_integral(&p, Variant::Printed, 1e-10).unwrap().residual() > 1e-2);
    let p = fa(1.2, &[0.6, 0.7], &[1.8, 2.1], &[0.2, -0.25], RegPair::ZERO);
    assert!(fa_single_integral(&p, Variant::Corrected, 1e-10).unwrap().residual() < 1e-8);
    let p = fa(1.2, &[0.6, 0.7], &[1.8, 2.1], &[0.2, -0.25], reg(0.1, 0.2));
    let s = fa_single_integral(&p, Variant::Corrected, 1e-10).unwrap();
    assert!(s.residual() < 1e-7, "{s:?}");
}

#[test]
fn fa_partial_series_form() {
    let p = fa(1.0, &[0.6, 0.7], &[1.8, 2.1], &[0.2, 0.25], reg(0.1, 0.1));
    assert!(fa_partial_series(&p, TOL).unwrap().residual() < 1e-10);
    let p = fa(
        0.9,
        &[0.5, 0.6, 0.7],
        &[1.5, 1.7, 2.0],
        &[0.1, -0.2, 0.15],
        reg(0.1, 0.2),
    );
    assert!(fa_partial_series(&p, TOL).unwrap().residual() < 1e-10);
    assert!(fa_partial_series(&fa(1.0, &[0.6], &[1.8], &[0.2], RegPair::ZERO), TOL).is_err());
}

/// Direct classical multi-series with a fixed truncation.
fn classical_fd(alpha: f64, betas: &[f64], gamma: f64, xs: &[f64], depth: usize) -> f64 {
    let mut total = 0.0;
    let mut idx = vec![0usize; betas.len()];
    loop {
        let n: usize = idx.iter().sum();
        if n <= depth {
            let mut t = crate::corefn::pochhammer(alpha, n as u32) / crate::corefn::pochhammer(gamma, n as u32);
            for ((&m, b), x) in idx.iter().zip(betas).zip(xs) {
                t *= crate::corefn::pochhammer(*b, m as u32) * x.powi(m as i32) / gamma_fact(m);
            }
            total += t;
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return total;
            }
            idx[k] += 1;
            if idx[k] <= depth {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn gamma_fact(m: usize) -> f64 {
    (1..=m).map(|i| i as f64).product()
}

#[test]
fn classical_reduction_matches_direct_sum() {
    let xs = [0.1, -0.15, 0.2];
    let direct = classical_fd(0.7, &[0.4, 0.9, 1.3], 1.9, &xs, 30);
    let s = fd_series(&fd(0.7, &[0.4, 0.9, 1.3], 1.9, &xs, RegPair::ZERO), TOL)
        .unwrap()
        .value;
    assert!(close(s, direct, 1e-8));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn fd_permutation(b in proptest::array::uniform3(0.1f64..2.0), x in proptest::array::uniform3(-0.7f64..0.7)) {
        let r = reg(0.1, 0.3);
        let u = fd_series(&fd(0.9, &b, 2.3, &x, r), TOL).unwrap().value;
        let v = fd_series(&fd(0.9, &[b[2], b[0], b[1]], 2.3, &[x[2], x[0], x[1]], r), TOL).unwrap().value;
        prop_assert!(close(u, v, 1e-10));
    }

    #[test]
    fn fa_permutation(b in proptest::array::uniform3(0.1f64..1.5), x in proptest::array::uniform3(-0.3f64..0.3)) {
        let r = reg(0.2, 0.1);
        let g = [b[0] + 0.5, b[1] + 1.0, b[2] + 0.8];
        let u = fa_series(&fa(1.1, &b, &g, &x, r), TOL).unwrap().value;
        let v = fa_series(&fa(1.1, &[b[1], b[2], b[0]], &[g[1], g[2], g[0]], &[x[1], x[2], x[0]], r), TOL).unwrap().value;
        prop_assert!(close(u, v, 1e-10));
    }

    #[test]
    fn fd_axis_deletion(b in proptest::array::uniform3(0.1f64..2.0), x in proptest::array::uniform2(-0.7f64..0.7)) {
        let r = reg(0.1, 0.3);
        let u = fd_series(&fd(0.9, &b, 2.3, &[x[0], x[1], 0.0], r), TOL).unwrap().value;
        let v = fd_series(&fd(0.9, &b[..2], 2.3, &x, r), TOL).unwrap().value;
        prop_assert!(close(u, v, 1e-14));
    }

    #[test]
    fn fd_series_matches_integral(x in proptest::array::uniform2(-0.8f64..0.8), b in 0.0f64..0.4) {
        let p = fd(1.1, &[0.6, 1.4], 2.5, &x, reg(b, 0.4 - b));
        let s = fd_series(&p, TOL).unwrap().value;
        let i = fd_integral(&p, TOL).unwrap().value;
        prop_assert!(close(s, i, 1e-10));
    }
}
