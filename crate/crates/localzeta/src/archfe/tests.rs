use super::*;
use proptest::prelude::*;
use std::f64::consts::PI;

type R = RealTestFunction<f64>;

fn c(re: f64, im: f64) -> Complex<f64> {
    Complex::new(re, im)
}

// Composite Simpson in the original variable x, no substitution.
fn star_by_simpson(f: &R, y: f64, half_width: f64, n: usize) -> Complex<f64> {
    let h = 2.0 * half_width / n as f64;
    let mut acc = c(0.0, 0.0);
    for i in 0..=n {
        let x = -half_width + h * i as f64;
        let w = if i == 0 || i == n { 1.0 } else if i % 2 == 1 { 4.0 } else { 2.0 };
        let z = y * x;
        acc += f.eval(x) * c(0.0, 2.0 * PI * z.abs() * z).exp() * x.abs() * w;
    }
    acc * (2.0 * h / 3.0)
}

// ∫_0^∞ x^{s−1}/(1 + bx⁴) dx = ¼b^{−s/4}π/sin(πs/4).
fn rational_mellin(b: f64, s: Complex<f64>) -> Complex<f64> {
    c(b, 0.0).powc(-s / 4.0) * PI / (s * PI / 4.0).sin() / 4.0
}

#[test]
fn gaussian_star_on_grid() {
    for y in standard_grid::<f64>() {
        let v = star_numeric(&R::Gaussian, y, 1e-9).unwrap();
        assert!((v - gaussian_star_closed(y)).norm() < 1e-6, "y={y}: {v}");
    }
    for y in [0.0, 0.5, 1.0, 2.0] {
        let v = star_numeric(&R::Gaussian, y, 1e-9).unwrap();
        assert!((v.re - 2.0 * PI / (PI * PI + 4.0 * PI * PI * y.powi(4))).abs() < 1e-6);
    }
    let at0 = star_numeric(&R::Gaussian, 0.0, 1e-10).unwrap();
    assert!((at0.re - 2.0 / PI).abs() < 1e-9);
}

#[test]
fn star_matches_direct_simpson() {
    for y in [0.3, 0.8, 1.3] {
        let a = star_numeric(&R::Gaussian, y, 1e-10).unwrap();
        let b = star_by_simpson(&R::Gaussian, y, 7.0, 40_000);
        assert!((a - b).norm() < 1e-7, "y={y}: {a} vs {b}");
    }
}

#[test]
fn star_of_gaussian_nabla_is_itself() {
    for y in [0.0, 0.4, 0.9, 1.5] {
        let v = star_numeric(&R::GaussianNabla, y, 1e-10).unwrap();
        assert!((v - R::GaussianNabla.eval(y)).norm() < 1e-8, "y={y}");
    }
}

#[test]
fn star_of_zero() {
    assert_eq!(star_numeric(&R::Zero, 1.0, 1e-8).unwrap(), c(0.0, 0.0));
}

#[test]
fn star_rational_decay_converges_slowly_but_converges() {
    let g = R::RationalDecay { a: 1.0, b: 1.0 };
    let v = star_numeric(&g, 0.0, 1e-6).unwrap();
    // ∫_0^∞ 2/(1+u²) du = π.
    assert!((v.re - PI).abs() < 1e-5);
}

#[test]
fn non_integrable_tail_is_rejected() {
    // |f(x)|·|x| ~ |x|^{-1} fails the integrability check.
    let bad = R::RationalDecay { a: 1.0, b: 1.0 };
    assert!(bad.decay().in_square().tail(0.0, 1.0).is_ok());
    let d = Decay::Power { a: 1.0, k: 1.0 };
    assert!(d.tail(0.0, 1.0).is_err());
}

#[test]
fn halving_tolerance_is_self_consistent() {
    for y in [0.2, 0.7, 1.9] {
        let a = star_numeric_estimate(&R::Gaussian, y, 1e-6).unwrap();
        let b = star_numeric_estimate(&R::Gaussian, y, 5e-7).unwrap();
        assert!((a.value - b.value).norm() <= a.error, "y={y}");
    }
    let a = zeta_numeric_estimate(&R::GaussianNabla, RealCharacter::Trivial, c(2.5, 0.0), 1e-6).unwrap();
    let b = zeta_numeric_estimate(&R::GaussianNabla, RealCharacter::Trivial, c(2.5, 0.0), 5e-7).unwrap();
    assert!((a.value - b.value).norm() <= a.error);
}

#[test]
fn scaling_law() {
    for alpha in [2.0, 1.0 / 3.0] {
        let g = R::Gaussian.dilate(alpha);
        for y in [0.0, 0.3, 0.9, 1.4] {
            let lhs = star_numeric(&g, y, 1e-9).unwrap();
            let rhs = star_numeric(&R::Gaussian, y / alpha, 1e-9).unwrap() / (alpha * alpha);
            assert!((lhs - rhs).norm() < 1e-5, "alpha={alpha} y={y}");
            let closed = g.closed_star().unwrap().eval(y);
            assert!((lhs - closed).norm() < 1e-5);
        }
    }
}

#[test]
fn zeta_of_gaussian_nabla() {
    for s in [2.0, 4.0, 6.0] {
        let v = zeta_numeric(&R::GaussianNabla, RealCharacter::Trivial, c(s, 0.0), 1e-11).unwrap();
        let want = 0.5 * PI.powf(-s / 4.0) * gamma_real(s / 4.0);
        assert!((v.re - want).abs() < 1e-8, "s={s}: {v} vs {want}");
        assert!((v - zeta_gaussian_nabla_closed(c(s, 0.0))).norm() < 1e-8);
    }
    let v = zeta_numeric(&R::GaussianNabla, RealCharacter::Trivial, c(2.0, 0.0), 1e-11).unwrap();
    assert!((v.re - 0.5).abs() < 1e-8);
    let v = zeta_numeric(&R::GaussianNabla, RealCharacter::Trivial, c(4.0, 0.0), 1e-11).unwrap();
    assert!((v.re - 1.0 / (2.0 * PI)).abs() < 1e-8);
}

#[test]
fn zeta_against_mellin_oracles() {
    for s in [c(0.5, 0.0), c(1.0, 0.3), c(2.7, -1.1)] {
        let g = zeta_numeric(&R::Gaussian, RealCharacter::Trivial, s, 1e-10).unwrap();
        let want = c(PI, 0.0).powc(-s / 2.0) * gamma(s / 2.0);
        assert!((g - want).norm() < 1e-8, "{s}");
        let r = zeta_numeric(&R::RationalDecay { a: 3.0, b: 4.0 }, RealCharacter::Trivial, s, 1e-10).unwrap();
        assert!((r - rational_mellin(4.0, s) * 6.0).norm() < 1e-7, "{s}");
    }
}

#[test]
fn sign_character_kills_even_functions() {
    for f in [R::Gaussian, R::GaussianNabla, R::RationalDecay { a: 1.0, b: 2.0 }] {
        let v = zeta_numeric(&f, RealCharacter::Sign, c(1.5, 0.2), 1e-9).unwrap();
        assert!(v.norm() < 1e-12);
    }
}

#[test]
fn zeta_rejects_nonconvergent_s() {
    assert!(zeta_numeric(&R::Gaussian, RealCharacter::Trivial, c(0.0, 1.0), 1e-8).is_err());
    assert!(zeta_numeric(&R::Gaussian, RealCharacter::Trivial, c(-1.0, 0.0), 1e-8).is_err());
    assert!(zeta_numeric(&R::RationalDecay { a: 1.0, b: 1.0 }, RealCharacter::Trivial, c(4.5, 0.0), 1e-8).is_err());
}

#[test]
fn product_fe() {
    let f = R::GaussianNabla;
    let g = R::Gaussian;
    for s in [c(1.0, 0.0), c(1.0, 0.3)] {
        let p = fe_product(&f, &g, RealCharacter::Trivial, s, 1e-8).unwrap();
        assert!(p.abs_err() < 1e-6, "{s}: {p:?}");
        assert!(fe_product_check(&f, &g, RealCharacter::Trivial, s, 1e-6).unwrap());
        assert!(fe_product_check(&f, &f, RealCharacter::Trivial, s, 1e-6).unwrap());
    }
    let z = fe_product(&R::Zero, &g, RealCharacter::Trivial, c(1.0, 0.0), 1e-8).unwrap();
    assert_eq!(z.lhs, c(0.0, 0.0));
    assert_eq!(z.rhs, c(0.0, 0.0));
}

#[test]
fn product_fe_detects_a_wrong_transform() {
    // Pairing g with a mis-scaled ★ must unbalance the identity.
    let f = R::GaussianNabla;
    let g = R::Gaussian;
    let s = c(1.2, 0.1);
    let lhs = zeta_numeric(&f, RealCharacter::Trivial, s, 1e-10).unwrap()
        * zeta_numeric(&g.closed_star().unwrap().scale(1.1), RealCharacter::Trivial, c(2.0, 0.0) - s, 1e-10).unwrap();
    let rhs = zeta_numeric(&f, RealCharacter::Trivial, c(2.0, 0.0) - s, 1e-10).unwrap()
        * zeta_numeric(&g, RealCharacter::Trivial, s, 1e-10).unwrap();
    assert!((lhs - rhs).norm() > 1e-3);
}

#[test]
fn product_fe_needs_closed_forms() {
    let r = R::RationalDecay { a: 1.0, b: 1.0 };
    assert!(fe_product_check(&r, &R::Gaussian, RealCharacter::Trivial, c(1.0, 0.0), 1e-6).is_err());
}

#[test]
fn single_precision_engine() {
    let g = RealTestFunction::<f32>::Gaussian;
    let v = star_numeric(&g, 0.5f32, 1e-4).unwrap();
    assert!((v.re - gaussian_star_closed(0.5f32)).abs() < 1e-3);
    let z = zeta_numeric(&RealTestFunction::<f32>::GaussianNabla, RealCharacter::Trivial, Complex::new(2.0f32, 0.0), 1e-4).unwrap();
    assert!((z.re - 0.5).abs() < 1e-3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gaussian_star_random_points(y in -2.0f64..2.0) {
        let v = star_numeric(&R::Gaussian, y, 1e-8).unwrap();
        prop_assert!((v - gaussian_star_closed(y)).norm() < 1e-6);
    }

    #[test]
    fn star_is_even_in_y_for_even_f(y in 0.0f64..1.5) {
        let a = star_numeric(&R::GaussianNabla, y, 1e-9).unwrap();
        let b = star_numeric(&R::GaussianNabla, -y, 1e-9).unwrap();
        prop_assert!((a - b).norm() < 1e-8);
    }
}
