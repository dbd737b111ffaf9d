use super::*;
use proptest::prelude::*;
use std::f64::consts::PI;

fn reg(b: f64, d: f64) -> RegPair {
    RegPair::new(b, d).unwrap()
}

fn mid(r: (f64, f64)) -> f64 {
    0.5 * (r.0 + r.1)
}

/// Fills both power exponents with the middle of their ranges.
fn centred(mut hp: HilbertParams) -> HilbertParams {
    hp.power1 = mid(hp.power1_range());
    hp.power2 = mid(hp.power2_range());
    hp
}

fn point(p: f64, q: f64, s: (f64, f64), scales: (f64, f64), r: RegPair) -> HilbertParams {
    centred(HilbertParams {
        p,
        q,
        s1: s.0,
        s2: s.1,
        scale1: scales.0,
        scale2: scales.1,
        power1: 0.0,
        power2: 0.0,
        reg: r,
    })
}

#[test]
fn rational_identity_reference_values() {
    // mpmath quadrature of the left side and of the Euler integral on the right
    let ri = RationalIntegral::new(1.1, 0.6, 0.9, 0.7, 1.0, reg(0.2, 0.3)).unwrap();
    for (form, want) in [
        (RationalForm::GammaScaled, 0.482_776_116_070_696_4),
        (RationalForm::AlphaScaled, 0.449_971_983_513_863_5),
    ] {
        let s = rational_integral_identity(form, &ri, 1e-12).unwrap();
        assert!((s.lhs - want).abs() < 1e-10, "{form:?} {s:?}");
        assert!((s.rhs - want).abs() < 1e-10, "{form:?} {s:?}");
        assert!(s.residual() < 1e-9);
    }
}

#[test]
fn rational_identity_without_damping_and_on_the_diagonal() {
    let ri = RationalIntegral::new(1.0, 0.7, 1.2, 0.8, 1.0, RegPair::ZERO).unwrap();
    for form in RationalForm::ALL {
        let s = rational_integral_identity(form, &ri, 1e-12).unwrap();
        assert!(s.residual() < 1e-9, "{form:?} {s:?}");
    }
    // classical value of the undamped integral via the plain Gauss function
    let s = rational_integral_identity(RationalForm::GammaScaled, &ri, 1e-12).unwrap();
    let f = crate::hyp::ext_2f1(&Kernel::Exponential, 1.0, 0.7, 2.2, 0.2, RegPair::ZERO, 1e-14)
        .unwrap()
        .value;
    assert!((s.rhs - beta_classical(0.7, 1.5).unwrap() * f).abs() < 1e-12);
    // alpha = gamma: argument zero, the right side is the leading coefficient ratio
    let r = reg(0.1, 0.4);
    let ri = RationalIntegral::new(0.9, 0.5, 0.8, 1.3, 1.3, r).unwrap();
    let s = rational_integral_identity(RationalForm::GammaScaled, &ri, 1e-12).unwrap();
    assert!(s.residual() < 1e-9, "{s:?}");
    let eb = crate::extbeta::ext_beta(&Kernel::Exponential, 0.5, 1.2, r, 1e-14)
        .unwrap()
        .value;
    let closed = (0.5f64).exp() * 1.3f64.powf(-0.5) * eb;
    assert!((s.rhs - closed).abs() < 1e-11, "{} vs {closed}", s.rhs);
}

#[test]
fn rational_identity_rejections() {
    assert!(RationalIntegral::new(0.3, 0.6, 0.2, 0.5, 1.0, RegPair::ZERO).is_err());
    assert!(RationalIntegral::new(1.0, 0.0, 1.0, 0.5, 1.0, RegPair::ZERO).is_err());
    assert!(RationalIntegral::new(1.0, 0.5, 1.0, 2.5, 1.0, RegPair::ZERO).is_err());
}

#[test]
fn classical_weights_and_constant() {
    let hp = HilbertParams::classical();
    hp.validate().unwrap();
    let kf = weight_f_factor(&hp, hp.reg, 1e-12).unwrap().value;
    let kg = weight_g_factor(&hp, hp.reg, 1e-12).unwrap().value;
    assert!((kf - PI.sqrt()).abs() < 1e-12);
    assert!((kg - PI.sqrt()).abs() < 1e-12);
    assert!((hilbert_constant(&hp, 1e-12).unwrap().value - PI).abs() < 1e-10);
}

#[test]
fn constant_with_classical_gauss_factor() {
    // mpmath with the plain Gauss function
    let hp = point(1.5, 2.5, (0.8, 0.5), (1.2, 0.9), RegPair::ZERO);
    let k = hilbert_constant(&hp, 1e-12).unwrap().value;
    assert!((k - 1.941_575_617_349_44).abs() < 1e-10, "{k}");
}

/// The generic point has 1/p + 1/q < 1, which only the weights tolerate.
fn generic_weight_point() -> HilbertParams {
    point(2.5, 2.5, (0.6, 0.6), (1.0, 1.5), reg(0.1, 0.1))
}

#[test]
fn weights_closed_form_against_quadrature() {
    let hp = generic_weight_point();
    hp.validate_weights().unwrap();
    assert!(hp.validate().is_err());
    let want = 0.851_238_401_638_035_97;
    let closed = weight_f(&hp, 1.7, 1e-12).unwrap().value;
    let direct = weight_f_direct(&hp, 1.7, 1e-12).unwrap().value;
    assert!(
        (closed - want).abs() < 1e-10 && (direct - want).abs() < 1e-10,
        "{closed} {direct}"
    );
    let s = weight_identity(&hp, WeightAxis::Y, 1.7, Variant::Corrected, 1e-12).unwrap();
    assert!((s.lhs - want).abs() < 1e-10 && (s.rhs - want).abs() < 1e-10, "{s:?}");
    // the printed damping on the y side gives a different integral
    let s = weight_identity(&hp, WeightAxis::Y, 1.7, Variant::Printed, 1e-12).unwrap();
    assert!((s.lhs - 0.933_418_140_411_426_6).abs() < 1e-10, "{s:?}");
    assert!(s.residual() > 1e-2);
    // without damping both forms coincide
    let hp = HilbertParams {
        reg: RegPair::ZERO,
        ..hp
    };
    let s = weight_identity(&hp, WeightAxis::Y, 0.6, Variant::Printed, 1e-12).unwrap();
    assert!(s.residual() < 1e-9);
}

#[test]
fn weight_homogeneity_by_quadrature() {
    let hp = point(2.0, 1.6, (0.7, 0.9), (1.1, 0.8), reg(0.3, 0.2));
    let qc = hp.q_conj();
    let pc = hp.p_conj();
    let f1 = weight_f_direct(&hp, 1.0, 1e-13).unwrap().value;
    let g1 = weight_g_direct(&hp, 1.0, Variant::Corrected, 1e-13).unwrap().value;
    for x in [0.2, 3.5, 11.0] {
        let f = weight_f_direct(&hp, x, 1e-13).unwrap().value;
        let g = weight_g_direct(&hp, x, Variant::Corrected, 1e-13).unwrap().value;
        let ef = (1.0 - hp.s1 - hp.s2) / qc - hp.power2;
        let eg = (1.0 - hp.s1 - hp.s2) / pc - hp.power1;
        assert!((f / f1 / x.powf(ef) - 1.0).abs() < 1e-9);
        assert!((g / g1 / x.powf(eg) - 1.0).abs() < 1e-9);
    }
}

#[test]
fn parameter_rejections() {
    let ok = HilbertParams::classical();
    for bad in [
        HilbertParams { p: 1.0, ..ok },
        HilbertParams {
            s1: -0.5,
            s2: 0.2,
            ..ok
        },
        HilbertParams { scale1: 2.5, ..ok },
        HilbertParams { power1: 0.5, ..ok },
        HilbertParams { power2: -0.1, ..ok },
    ] {
        assert!(matches!(bad.validate(), Err(Error::Domain(_))), "{bad:?}");
    }
}

#[test]
fn classical_inequality_with_exponential_pair() {
    let hp = HilbertParams::classical();
    let f = TestFunction::exp_decay(0.0).unwrap();
    let r = hilbert_check(&hp, &f, &f, 1e-10).unwrap();
    // ∫∫ e^{−x−y}/(x+y) = 1 and the weighted norms are 1/2
    assert!((r.lhs - 1.0).abs() < 1e-9, "{r:?}");
    assert!((r.rhs - PI / 2.0).abs() < 1e-9, "{r:?}");
    assert!(r.holds && r.margin > 0.5);
    assert!(r.dual_holds && r.dual_margin > 0.0, "{r:?}");
    assert!((r.dual_rhs - PI * 0.5f64.sqrt()).abs() < 1e-9);
}

#[test]
fn zero_function_gives_equality() {
    let hp = HilbertParams {
        reg: reg(0.2, 0.1),
        ..HilbertParams::classical()
    };
    let g = TestFunction::bump(1.0, 2.0).unwrap();
    let r = hilbert_check(&hp, &TestFunction::zero(), &g, 1e-9).unwrap();
    assert_eq!((r.lhs, r.rhs, r.margin), (0.0, 0.0, 0.0));
    assert_eq!((r.dual_lhs, r.dual_rhs), (0.0, 0.0));
    assert!(r.holds && r.dual_holds);
}

#[test]
fn damped_inequality_and_scaling() {
    let hp = HilbertParams {
        reg: reg(0.2, 0.2),
        ..HilbertParams::classical()
    };
    let f = TestFunction::exp_decay(1.0).unwrap();
    let g = TestFunction::bump(1.0, 2.0).unwrap();
    let r = hilbert_check(&hp, &f, &g, 1e-10).unwrap();
    assert!(r.holds && r.margin > 0.0 && r.dual_holds, "{r:?}");
    let r3 = hilbert_check(&hp, &f.scaled(3.0).unwrap(), &g, 1e-10).unwrap();
    assert!((r3.lhs / r.lhs / 3.0 - 1.0).abs() < 1e-10);
    assert!((r3.rhs / r.rhs / 3.0 - 1.0).abs() < 1e-10);
}

#[test]
fn non_classical_point_with_power_and_bump() {
    let hp = point(1.5, 2.5, (0.8, 0.5), (1.2, 0.9), reg(0.1, 0.3));
    let f = TestFunction::power_cut(0.3, 2.0).unwrap();
    let g = TestFunction::bump(0.5, 3.0).unwrap();
    let r = hilbert_check(&hp, &f, &g, 1e-9).unwrap();
    assert!(r.holds && r.dual_holds && r.lhs > 0.0, "{r:?}");
}

#[test]
fn section_singular_at_origin() {
    // kernel order exceeds 1, so the inner integral overflows near x = 0 unless rescaled
    let hp = point(2.0, 2.0, (0.6, 0.7), (1.0, 1.4), reg(0.2, 0.2));
    let e = TestFunction::exp_decay(0.0).unwrap();
    let r = hilbert_check(&hp, &e, &e, 1e-11).unwrap();
    // mpmath nested quadrature
    assert!((r.lhs - 0.267_761_445_476_482_89).abs() < 1e-10, "{r:?}");
    assert!(r.holds && r.dual_holds);
}

#[test]
fn divergent_norm_is_a_domain_error() {
    let hp = HilbertParams::classical();
    let f = TestFunction::power_cut(-0.6, 1.0).unwrap();
    let g = TestFunction::exp_decay(0.0).unwrap();
    assert!(matches!(hilbert_check(&hp, &f, &g, 1e-9), Err(Error::Domain(_))));
}

#[test]
fn test_function_text_round_trip() {
    for s in [
        "zero",
        "exp_decay:1",
        "bump:0.5,3",
        "power_cut:0.3,2",
        "exp_decay:0*2.5",
    ] {
        let f: TestFunction = s.parse().unwrap();
        assert_eq!(f.to_string(), s);
    }
    for bad in ["", "bump:2,1", "exp_decay", "power_cut:1", "wave:1", "exp_decay:0*-1"] {
        assert!(bad.parse::<TestFunction>().is_err(), "{bad}");
    }
    let b = TestFunction::bump(1.0, 2.0).unwrap();
    assert_eq!(b.value(1.5), 1.0);
    assert_eq!(b.value(2.5), 0.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn constant_is_positive(
        p in 1.2f64..3.0,
        s1 in 0.2f64..1.2,
        s2 in 0.0f64..0.8,
        ratio in 0.6f64..1.8,
        b in 0.0f64..0.4,
        d in 0.0f64..0.4,
    ) {
        // q at the conjugate of p keeps 1/p + 1/q = 1
        let q = p / (p - 1.0);
        let hp = point(p, q, (s1, s2), (ratio, 1.0), reg(b, d));
        let k = hilbert_constant(&hp, 1e-10).unwrap();
        prop_assert!(k.value > 0.0 && k.value.is_finite());
    }

    #[test]
    fn closed_weights_match_quadrature(
        x in 0.1f64..10.0,
        s1 in 0.3f64..1.2,
        ratio in 0.6f64..1.8,
        b in 0.0f64..0.4,
        d in 0.0f64..0.4,
    ) {
        let hp = point(2.0, 2.0, (s1, 0.4), (ratio, 1.0), reg(b, d));
        let f = weight_identity(&hp, WeightAxis::X, x, Variant::Corrected, 1e-11).unwrap();
        let g = weight_identity(&hp, WeightAxis::Y, x, Variant::Corrected, 1e-11).unwrap();
        prop_assert!(f.residual() < 1e-7 && g.residual() < 1e-7, "{:?} {:?}", f, g);
    }
}
