use super::*;
use crate::corefn::{classical_pfq, ClassicalPfq};
use crate::extbeta::ext_beta;
use crate::variant::Variant;
use proptest::prelude::*;

const TOL: f64 = 1e-12;

fn reg(b: f64, d: f64) -> RegPair {
    RegPair::new(b, d).unwrap()
}

fn kummer() -> Kernel {
    Kernel::kummer(1.5, 2.5).unwrap()
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * (1.0 + b.abs())
}

#[test]
fn log_closed_form() {
    let v = ext_2f1(&Kernel::Exponential, 1.0, 1.0, 2.0, 0.5, RegPair::ZERO, TOL).unwrap();
    assert!(v.converged);
    assert!((v.value - 2.0 * 2f64.ln()).abs() < 1e-13, "{}", v.value);
    let w = ext_2f1_integral(&Kernel::Exponential, 1.0, 1.0, 2.0, 0.5, RegPair::ZERO, TOL).unwrap();
    assert!((w.value - 2.0 * 2f64.ln()).abs() < 1e-12, "{}", w.value);
}

#[test]
fn frozen_regularized_values() {
    let r = reg(0.2, 0.4);
    let s = ext_2f1(&Kernel::Exponential, 0.5, 1.5, 3.0, 0.3, r, TOL).unwrap();
    assert!(close(s.value, 0.224_375_165_218_326_1, 1e-11), "{}", s.value);
    let i = ext_2f1_integral(&Kernel::Exponential, 0.5, 1.5, 3.0, 0.3, r, TOL).unwrap();
    assert!(close(i.value, 0.224_375_165_218_326_1, 1e-11), "{}", i.value);
    let k = ext_2f1(&kummer(), 0.5, 1.5, 3.0, 0.3, r, TOL).unwrap();
    assert!(close(k.value, 0.439_807_130_940_678_3, 1e-11), "{}", k.value);
    let k = ext_2f1_integral(&kummer(), 0.5, 1.5, 3.0, 0.3, r, TOL).unwrap();
    assert!(close(k.value, 0.439_807_130_940_678_3, 1e-11), "{}", k.value);
}

#[test]
fn negative_argument_paths() {
    let v = ext_2f1_integral(&Kernel::Exponential, 0.7, 1.2, 2.5, -5.0, reg(0.3, 0.1), TOL).unwrap();
    assert!(close(v.value, 0.134_164_809_855_256_34, 1e-11), "{}", v.value);
    let v = ext_2f1_auto(&Kernel::Exponential, 0.8, 1.1, 2.4, -0.4, reg(0.2, 0.3), TOL).unwrap();
    assert_eq!(v.method, Method::Series);
    assert!(close(v.value, 0.211_737_705_567_340_13, 1e-11), "{}", v.value);
    assert!(ext_2f1(&Kernel::Exponential, 0.7, 1.2, 2.5, -5.0, reg(0.3, 0.1), TOL).is_err());
}

#[test]
fn value_at_origin_is_coefficient_ratio() {
    let r = reg(0.3, 0.7);
    let v = ext_2f1(&kummer(), 0.9, 1.3, 2.2, 0.0, r, TOL).unwrap();
    let b = ext_beta(&kummer(), 1.3, 0.9, r, 1e-14).unwrap().value / crate::corefn::beta_classical(1.3, 0.9).unwrap();
    assert!(close(v.value, b, 1e-12));
    let w = ext_2f1_integral(&kummer(), 0.9, 1.3, 2.2, 0.0, r, TOL).unwrap();
    assert!(close(w.value, b, 1e-12));
}

#[test]
fn confluent_closed_form() {
    let spec = PfqSpec::unit(Kernel::Exponential, &[1.0], &[2.0], RegPair::ZERO).unwrap();
    let v = ext_pfq(&spec, 1.0, TOL).unwrap();
    assert!((v.value - (1f64.exp() - 1.0)).abs() < 1e-14);
}

#[test]
fn reduces_to_classical_pfq() {
    let spec = PfqSpec::unit(Kernel::Exponential, &[0.8], &[1.7, 2.3], RegPair::ZERO).unwrap();
    let v = ext_pfq(&spec, 0.7, TOL).unwrap();
    let c = classical_pfq(&ClassicalPfq::new(&[0.8], &[1.7, 2.3]), 0.7).unwrap();
    assert!(close(v.value, c.value, 1e-14));
    let spec = PfqSpec::unit(Kernel::Exponential, &[0.5, 0.8, 1.1], &[1.7, 2.3], RegPair::ZERO).unwrap();
    let c = classical_pfq(&ClassicalPfq::new(&[0.5, 0.8, 1.1], &[1.7, 2.3]), 0.6).unwrap();
    let v = ext_pfq(&spec, 0.6, TOL).unwrap();
    assert!(close(v.value, c.value, 1e-13));
    let v = euler_step_integral(&spec, 0.6, true, TOL).unwrap();
    assert!(close(v.value, c.value, 1e-11), "{} vs {}", v.value, c.value);
}

#[test]
fn terminating_series_is_exact() {
    let (a2, b1, z) = (1.5, 3.2, 0.9);
    let spec = PfqSpec::gauss(Kernel::Exponential, -3.0, a2, b1, RegPair::ZERO).unwrap();
    let v = ext_pfq(&spec, z, TOL).unwrap();
    let mut direct = 0.0;
    let mut c = 1.0;
    for m in 0..4 {
        direct += c;
        let mf = m as f64;
        c *= (-3.0 + mf) * (a2 + mf) / (b1 + mf) * z / (mf + 1.0);
    }
    assert!(v.converged);
    assert_eq!(v.terms_or_nodes, 4);
    assert!((v.value - direct).abs() < 1e-15);
    // also valid outside the unit disk
    assert!(ext_pfq(&spec, 2.0, TOL).is_ok());
}

#[test]
fn three_two_series_matches_oracle_and_integral() {
    let spec = PfqSpec::new(
        Kernel::Exponential,
        &[(0.7, 1), (0.5, 1), (0.8, 1)],
        &[1.5, 2.1],
        reg(0.1, 0.2),
    )
    .unwrap();
    let want = 0.126_413_163_256_315_13;
    let s = ext_pfq(&spec, 0.4, TOL).unwrap();
    assert!(close(s.value, want, 1e-11), "{}", s.value);
    let i = euler_step_integral(&spec, 0.4, false, 1e-11).unwrap();
    assert!(close(i.value, want, 1e-10), "{}", i.value);
    let n = euler_step_integral(&spec, 0.4, true, 1e-11).unwrap();
    assert!(close(n.value, want, 1e-10), "{}", n.value);
}

#[test]
fn validation() {
    assert!(PfqSpec::gauss(Kernel::Exponential, 1.0, 2.0, 2.0, RegPair::ZERO).is_err());
    assert!(PfqSpec::unit(Kernel::Exponential, &[1.0, 1.0, 1.0], &[2.0], RegPair::ZERO).is_err());
    assert!(matches!(
        PfqSpec::unit(Kernel::Exponential, &[1.0], &[-2.0, 2.0], RegPair::ZERO),
        Err(Error::Pole(_))
    ));
    assert!(ext_2f1(&Kernel::Exponential, 1.0, 1.0, 2.0, 1.5, RegPair::ZERO, TOL).is_err());
    assert!(ext_2f1_integral(&Kernel::Exponential, 1.0, 1.0, 2.0, 1.5, RegPair::ZERO, TOL).is_err());
    // relaxed specs accept pairings the strict check rejects when b, d > 0
    assert!(PfqSpec::relaxed(Kernel::Exponential, &[(1.0, 1), (2.0, 1)], &[1.5], reg(0.3, 0.3)).is_ok());
}

#[test]
fn derivative_closed_form() {
    let spec = PfqSpec::gauss(Kernel::Exponential, 1.0, 1.0, 2.0, RegPair::ZERO).unwrap();
    let z: f64 = 0.5;
    let want = 1.0 / (z * (1.0 - z)) + (1.0 - z).ln() / (z * z);
    let d = derivative(&spec, z, 1, TOL).unwrap();
    assert!((d.value - want).abs() < 1e-12);
    let d0 = derivative(&spec, z, 0, TOL).unwrap();
    assert!((d0.value - 2.0 * 2f64.ln()).abs() < 1e-12);
}

#[test]
fn derivative_matches_finite_difference() {
    let spec = PfqSpec::gauss(kummer(), 0.6, 1.1, 2.7, reg(0.2, 0.1)).unwrap();
    let (z, h) = (0.35, 1e-5);
    let f = |x: f64| ext_pfq(&spec, x, 1e-14).unwrap().value;
    let fd = (f(z + h) - f(z - h)) / (2.0 * h);
    let d = derivative(&spec, z, 1, TOL).unwrap();
    assert!((d.value - fd).abs() < 1e-6, "{} vs {fd}", d.value);
    let spec = PfqSpec::unit(Kernel::Exponential, &[1.3], &[2.1], reg(0.4, 0.2)).unwrap();
    let f = |x: f64| ext_pfq(&spec, x, 1e-14).unwrap().value;
    let fd = (f(-1.0 + h) - f(-1.0 - h)) / (2.0 * h);
    let d = derivative(&spec, -1.0, 1, TOL).unwrap();
    assert!((d.value - fd).abs() < 1e-6);
}

#[test]
fn weighted_derivative_variants() {
    let p = GaussParams::new(Kernel::Exponential, 1.0, 1.0, 2.0, RegPair::ZERO);
    let z = 0.4;
    let h = 1e-4;
    let g = |x: f64, pow: f64| x.powf(pow) * p.eval(x, 1e-14).unwrap().value;
    let fd1 = (g(z + h, 1.0) - g(z - h, 1.0)) / (2.0 * h);
    let fd2 = (g(z + h, 2.0) - 2.0 * g(z, 2.0) + g(z - h, 2.0)) / (h * h);
    for (n, fd) in [(1, fd1), (2, fd2)] {
        let proof = derivative_weighted(&p, z, n, Variant::Proof, TOL).unwrap();
        let lhs = derivative_weighted_lhs(&p, z, n, TOL).unwrap();
        assert!((proof.value - fd).abs() < 1e-5, "n={n}: {} vs {fd}", proof.value);
        assert!((lhs.value - proof.value).abs() < 1e-12);
        let printed = derivative_weighted(&p, z, n, Variant::Printed, TOL).unwrap();
        assert!((printed.value - fd).abs() > 1e-2);
    }
    let p = GaussParams::new(kummer(), 0.7, 1.2, 2.6, reg(0.3, 0.2));
    let lhs = derivative_weighted_lhs(&p, 0.3, 3, TOL).unwrap();
    let rhs = derivative_weighted(&p, 0.3, 3, Variant::Proof, TOL).unwrap();
    assert!(close(lhs.value, rhs.value, 1e-11));
}

#[test]
fn pfaff_proof_form_holds() {
    for (k, a1, a2, b1, z, r) in [
        (Kernel::Exponential, 1.0, 1.0, 2.0, 0.5, RegPair::ZERO),
        (Kernel::Exponential, 0.7, 1.2, 2.5, -0.4, reg(0.3, 0.1)),
        (kummer(), 0.9, 0.6, 2.1, 0.3, reg(0.2, 0.5)),
        (Kernel::Exponential, 1.4, 0.8, 3.0, -3.0, reg(0.1, 0.4)),
    ] {
        let p = GaussParams::new(k, a1, a2, b1, r);
        let lhs = p.eval(z, TOL).unwrap().value;
        let rhs = pfaff_transform(&p, z, Variant::Proof, TOL).unwrap().value;
        assert!(close(lhs, rhs, 1e-10), "{lhs} vs {rhs} at z={z}");
    }
    let p = GaussParams::new(Kernel::Exponential, 0.7, 1.2, 2.5, reg(0.3, 0.1));
    let printed = pfaff_transform(&p, -0.4, Variant::Printed, TOL).unwrap().value;
    assert!((printed - p.eval(-0.4, TOL).unwrap().value).abs() > 1e-3);
}

#[test]
fn euler_transform_forms() {
    let p = GaussParams::new(Kernel::Exponential, 1.2, 0.8, 2.7, reg(0.2, 0.5));
    let z = 0.45;
    let lhs = p.eval(z, TOL).unwrap().value;
    assert!(close(lhs, 0.186_357_478_591_665_04, 1e-11));
    let fixed = euler_transform(&p, z, Variant::Corrected, TOL).unwrap().value;
    assert!(close(fixed, 0.186_357_478_591_665_04, 1e-11), "{fixed}");
    let printed = euler_transform(&p, z, Variant::Printed, TOL).unwrap().value;
    assert!(close(printed, 0.113_362_453_883_115_77, 1e-10), "{printed}");
    // both forms coincide without regularization
    let p = GaussParams::new(Kernel::Exponential, 1.0, 1.0, 3.0, RegPair::ZERO);
    let c = classical_pfq(&ClassicalPfq::new(&[1.0, 1.0], &[3.0]), 0.3)
        .unwrap()
        .value;
    for v in [Variant::Printed, Variant::Corrected] {
        assert!(close(euler_transform(&p, 0.3, v, TOL).unwrap().value, c, 1e-13));
    }
    let p = GaussParams::new(kummer(), 1.0, 1.0, 3.0, RegPair::ZERO);
    assert!(matches!(
        euler_transform(&p, 0.3, Variant::Corrected, TOL),
        Err(Error::KernelMismatch(_))
    ));
}

#[test]
fn recurrences() {
    let p = GaussParams::new(Kernel::Exponential, 1.0, 1.0, 2.5, RegPair::ZERO);
    let s = recurrence_eval(Recurrence::A1Plus, &p, 2, 0.3, Variant::Proof, TOL).unwrap();
    assert!(s.residual() < 1e-12);
    let p = GaussParams::new(kummer(), 0.9, 1.1, 3.2, reg(0.1, 0.1));
    for n in 0..=3 {
        for which in [Recurrence::A1Plus, Recurrence::A1Minus, Recurrence::B1Plus] {
            let s = recurrence_eval(which, &p, n, 0.25, Variant::Proof, TOL).unwrap();
            assert!(s.residual() < 1e-11, "{which:?} n={n}: {s:?}");
        }
    }
    let s = recurrence_eval(Recurrence::A2Plus, &p, 0, 0.25, Variant::Proof, TOL).unwrap();
    assert!(s.residual() < 1e-12);
    // the shifted-second-parameter recurrence fails in both published forms
    for v in [Variant::Printed, Variant::Proof] {
        let s = recurrence_eval(Recurrence::A2Plus, &p, 1, 0.25, v, TOL).unwrap();
        assert!(s.residual() > 1e-3, "{v}: {s:?}");
    }
}

#[test]
fn quadratic_summation() {
    let s = classical_quadratic_summation(1.0, 1.0, 4.0).unwrap();
    assert!(s.residual() < 1e-10, "{s:?}");
    for (a1, a2, b1, r) in [
        (1.0, 1.0, 4.0, RegPair::ZERO),
        (0.5, 1.0, 3.0, RegPair::ZERO),
        (0.6, 0.9, 3.1, reg(0.2, 0.3)),
    ] {
        let p = GaussParams::new(Kernel::Exponential, a1, a2, b1, r);
        let s = quadratic_argument_summation(&p, TOL).unwrap();
        assert!(s.residual() < 1e-10, "{s:?}");
    }
    let p = GaussParams::new(Kernel::Exponential, 0.6, 0.9, 3.1, reg(0.2, 0.3));
    let s = quadratic_argument_summation(&p, TOL).unwrap();
    assert!(close(s.lhs, 0.252_360_747_734_678_84, 1e-11));
}

#[test]
fn gauss_sum_at_unit_argument() {
    let v = ext_2f1_auto(&Kernel::Exponential, 1.0, 2.0, 4.0, 1.0, RegPair::ZERO, TOL).unwrap();
    assert_eq!(v.method, Method::EulerIntegral);
    assert!((v.value - 3.0).abs() < 1e-11, "{}", v.value);
}

#[test]
fn fractional_derivative_closed_forms() {
    let v = frac_deriv(&Kernel::Exponential, -0.5, RegPair::ZERO, |_| Ok(1.0), 1.0, TOL).unwrap();
    assert!((v.value - 2.0 / std::f64::consts::PI.sqrt()).abs() < 1e-12);
    let v = frac_deriv(&Kernel::Exponential, -1.0, RegPair::ZERO, |_| Ok(1.0), 2.0, TOL).unwrap();
    assert!((v.value - 2.0).abs() < 1e-12);
    // Riemann-Liouville of t^{a}: Γ(a+1)/Γ(a+1−mu) z^{a−mu}
    let (a, mu, z): (f64, f64, f64) = (0.5, -1.3, 0.8);
    let want = crate::corefn::gamma(a + 1.0).unwrap() / crate::corefn::gamma(a + 1.0 - mu).unwrap() * z.powf(a - mu);
    let v = frac_deriv(&Kernel::Exponential, mu, RegPair::ZERO, |t| Ok(t.powf(a)), z, TOL).unwrap();
    assert!(close(v.value, want, 1e-12));
    assert!(frac_deriv(&Kernel::Exponential, 0.5, RegPair::ZERO, |_| Ok(1.0), 1.0, TOL).is_err());
}

#[test]
fn fractional_derivative_identity() {
    for (k, stride, c, z, r) in [
        (Kernel::Exponential, 1, 0.5, 0.8, reg(0.2, 0.1)),
        (kummer(), 2, 0.7, 0.9, reg(0.1, 0.3)),
        (Kernel::Exponential, 3, -0.5, 1.0, RegPair::ZERO),
    ] {
        let p = GaussParams::new(k, 0.8, 1.1, 2.4, r);
        let s = frac_deriv_identity(&p, stride, c, z, TOL).unwrap();
        assert!(s.residual() < 1e-10, "{s:?}");
    }
}

#[test]
fn stride_two_integral_matches_series() {
    let spec = PfqSpec::new(kummer(), &[(0.8, 1), (1.1, 2)], &[2.4], reg(0.2, 0.3)).unwrap();
    let s = ext_pfq(&spec, 0.6, TOL).unwrap();
    let i = euler_step_integral(&spec, 0.6, false, TOL).unwrap();
    assert!(close(s.value, i.value, 1e-11));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn series_and_integral_agree(
        a1 in 0.2f64..2.5, a2 in 0.2f64..2.0, gap in 0.3f64..2.0,
        z in -0.8f64..0.8, b in 0.0f64..1.0, d in 0.0f64..1.0,
    ) {
        let r = reg(b, d);
        let s = ext_2f1(&Kernel::Exponential, a1, a2, a2 + gap, z, r, TOL).unwrap();
        let i = ext_2f1_integral(&Kernel::Exponential, a1, a2, a2 + gap, z, r, 1e-12).unwrap();
        prop_assert!(close(s.value, i.value, 1e-9), "{} vs {}", s.value, i.value);
    }

    #[test]
    fn pfaff_involution(
        a1 in 0.2f64..2.0, a2 in 0.2f64..2.0, gap in 0.3f64..2.0,
        z in -2.0f64..0.45, b in 0.0f64..0.8, d in 0.0f64..0.8,
    ) {
        let r = reg(b, d);
        let b1 = a2 + gap;
        let once = pfaff_parameters(a1, a2, b1, z, r);
        let twice = pfaff_parameters(once.0, once.1, once.2, once.3, once.4);
        prop_assert_eq!(twice.0, a1);
        prop_assert!((twice.1 - a2).abs() <= 4.0 * f64::EPSILON * b1);
        prop_assert_eq!(twice.2, b1);
        prop_assert!((twice.3 - z).abs() <= 4.0 * f64::EPSILON * (1.0 + z.abs()));
        prop_assert_eq!(twice.4, r);
        let p = GaussParams::new(Kernel::Exponential, a1, a2, b1, r);
        let base = p.eval(z, TOL).unwrap().value;
        let q = GaussParams::new(Kernel::Exponential, once.0, once.1, once.2, once.4);
        let back = pfaff_transform(&q, once.3, Variant::Proof, TOL).unwrap().value;
        let mapped = q.eval(once.3, TOL).unwrap().value * (1.0 - z).powf(-a1);
        prop_assert!(close(mapped, base, 2e-8));
        prop_assert!(close(back, q.eval(once.3, TOL).unwrap().value, 2e-8));
    }

    #[test]
    fn finite_binomial_expansion(n in 0u32..=6, t in 0.0f64..1.0) {
        let want = (1.0 - t).powi(n as i32);
        prop_assert!((falling_binomial_sum(n, t) - want).abs() <= 64.0 * f64::EPSILON);
    }

    #[test]
    fn classical_reduction(a1 in -2.0f64..3.0, a2 in 0.1f64..3.0, gap in 0.1f64..3.0, z in -0.9f64..0.9) {
        let v = ext_2f1(&Kernel::Exponential, a1, a2, a2 + gap, z, RegPair::ZERO, TOL).unwrap();
        let c = classical_pfq(&ClassicalPfq::new(&[a1, a2], &[a2 + gap]), z).unwrap();
        prop_assert!(close(v.value, c.value, 1e-12));
    }
}
