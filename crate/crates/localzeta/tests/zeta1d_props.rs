mod common;

use common::{arb_sb, mu1};
use localzeta::localfield::enumerate_characters;
use localzeta::zeta1d::{
    check_product_fe, coset_basis, epsilon_closed_form, epsilon_from, epsilon_star, epsilon_test_functions, format_monomial,
    l_function, z_normalized, zeta, Tensor,
};
use localzeta::{AdditiveCharacter, CycRat, KElement, QuasiCharacter, SBFunction};
use proptest::prelude::*;

fn characters(q: u32, r_max: i64) -> Vec<QuasiCharacter> {
    let mut out = Vec::new();
    for r in 0..=r_max {
        for w in enumerate_characters(q, r).unwrap() {
            if w.conductor() as i64 == r {
                out.push(w.clone());
                out.push(w.with_pi_value(CycRat::frac(1, 2)));
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn zeta_scaling_covariance((f, k, idx) in (arb_sb(3), -1i64..=1, 0usize..8)) {
        // ζ(g(α·), ω, s) = ω(α)⁻¹|α|^{−s}ζ(g, ω, s), and |α|^{−s} = T^{−w(α)}.
        let chars = characters(3, 1);
        let omega = &chars[idx % chars.len()];
        let alpha = KElement::digit_at(3, 1, k);
        let lhs = zeta(&f.dilate(&alpha).unwrap(), omega);
        let rhs = zeta(&f, omega).scale(&omega.eval(&alpha).unwrap().inv().unwrap()).shift(-k, 0);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn zeta_is_linear((f, g) in (arb_sb(2), arb_sb(2))) {
        for omega in characters(2, 2) {
            let c = CycRat::frac(3, 2);
            prop_assert_eq!(zeta(&f.add(&g.scale(&c)), &omega), zeta(&f, &omega).add(&zeta(&g, &omega).scale(&c)));
        }
    }
}

#[test]
fn normalized_zeta_is_a_laurent_polynomial() {
    for q in [2u32, 3] {
        for omega in characters(q, 2) {
            for c in coset_basis(q, -1, 2) {
                let z = z_normalized(&SBFunction::indicator(c, mu1()), &omega);
                assert_eq!(z.denominator().degree(), Some(0), "q={q} {omega:?}");
            }
        }
    }
    let l = l_function(&QuasiCharacter::trivial(5));
    assert_eq!(l.mul(&zeta(&SBFunction::char_ideal(5, mu1(), 0), &QuasiCharacter::trivial(5)).inv().unwrap()).as_constant(), Some(CycRat::frac(5, 4)));
}

#[test]
fn epsilon_is_independent_of_the_test_function() {
    for q in [2u32, 3] {
        let pi = KElement::u(q);
        for d in 0..=1 {
            let psi = AdditiveCharacter::new(q, d);
            for omega in characters(q, 2) {
                let [g1, g2] = epsilon_test_functions(&omega, &pi, &mu1());
                let e1 = epsilon_from(&g1, &omega, &psi, &pi).unwrap();
                let e2 = epsilon_from(&g2, &omega, &psi, &pi).unwrap();
                assert_eq!(e1, e2, "q={q} d={d} {omega:?}");
                assert!(format_monomial(&e1).is_some());
            }
        }
    }
}

#[test]
fn functional_equation_over_the_coset_basis() {
    // subst_dual(Z(f★, ω⁻¹)) = ε_*(ω)·Z(f, ω), with Z = ζ/L.
    for q in [2u32, 3] {
        let pi = KElement::u(q);
        for d in 0..=1 {
            let psi = AdditiveCharacter::new(q, d);
            let chars = characters(q, 2);
            let eps: Vec<_> = chars.iter().map(|w| epsilon_star(w, &psi, &pi, &mu1()).unwrap()).collect();
            for c in coset_basis(q, -1, 2) {
                let f = SBFunction::indicator(c.clone(), mu1());
                let fs = f.star(&psi, &pi).unwrap();
                for (omega, e) in chars.iter().zip(&eps) {
                    let lhs = z_normalized(&fs, &omega.inverse()).subst_dual();
                    let rhs = e.mul(&z_normalized(&f, omega));
                    assert_eq!(lhs, rhs, "q={q} d={d} f={c:?} {omega:?}");
                }
            }
            for (omega, e) in chars.iter().zip(&eps) {
                assert_eq!(*e, epsilon_closed_form(omega, &psi, &pi, &mu1()).unwrap());
            }
        }
    }
}

#[test]
fn product_functional_equation() {
    let q = 3;
    let pi = KElement::u(q);
    let psi = AdditiveCharacter::new(q, 0);
    let f: Tensor = vec![
        (CycRat::one(), SBFunction::char_ideal(q, mu1(), 0), SBFunction::char_units(q, mu1())),
        (CycRat::frac(-1, 2), SBFunction::char_ideal(q, mu1(), 1), SBFunction::char_ideal(q, mu1(), -1)),
    ];
    for w1 in characters(q, 1) {
        for w2 in characters(q, 1) {
            assert!(check_product_fe(&f, &w1, &w2, &psi, &pi, &mu1()).unwrap(), "{w1:?} {w2:?}");
        }
    }
}
