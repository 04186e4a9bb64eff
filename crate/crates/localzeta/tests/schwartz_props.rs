mod common;

use common::{arb_kelement, arb_sb, mu1};
use localzeta::{AdditiveCharacter, CycRat, KCoset, KElement, SBFunction};
use proptest::prelude::*;

/// `f̂(y) = μ·Σ_cells f(x)ψ(xy)·vol(cell)` on a partition fine enough that
/// both factors are constant on each cell.
fn fourier_by_cells(f: &SBFunction, psi: &AdditiveCharacter, y: &KElement) -> CycRat {
    let q = f.q();
    let (Some(lo), Some(top)) = (f.support_valuation(), f.max_level()) else {
        return CycRat::zero();
    };
    let lo = lo.min(top);
    let wy = if y.is_zero() { 0 } else { y.valuation() };
    let level = top.max(psi.conductor() - wy).max(lo);
    let mut acc = CycRat::zero();
    for cell in KCoset::ideal(q, lo).refine_to(level) {
        let v = f.eval(cell.rep());
        if !v.is_zero() {
            acc = acc.add(&v.mul(&psi.eval(&cell.rep().mul(y))));
        }
    }
    acc.mul(&CycRat::int_pow(q, -level)).mul(&CycRat::from_rational(f.mu().clone()))
}

fn probe_points(q: u32) -> Vec<KElement> {
    let mut v = vec![KElement::zero(q)];
    v.extend(KCoset::ideal(q, -2).refine_to(1).into_iter().map(|c| c.rep().clone()));
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn transforms_are_linear((f, g, d) in (arb_sb(3), arb_sb(3), -1i64..=1)) {
        let psi = AdditiveCharacter::new(3, d);
        let pi = KElement::u(3);
        let c = CycRat::frac(-2, 3);
        let h = f.add(&g.scale(&c));
        prop_assert_eq!(h.fourier(&psi).unwrap(), f.fourier(&psi).unwrap().add(&g.fourier(&psi).unwrap().scale(&c)));
        prop_assert_eq!(h.star(&psi, &pi).unwrap(), f.star(&psi, &pi).unwrap().add(&g.star(&psi, &pi).unwrap().scale(&c)));
        prop_assert_eq!(h.haar_integral(), f.haar_integral().add(&g.haar_integral().mul(&c)));
    }

    #[test]
    fn haar_integral_is_translation_invariant((f, tau) in (arb_sb(2), arb_kelement(2, -2, 4))) {
        prop_assert_eq!(f.translate(&tau).haar_integral(), f.haar_integral());
    }

    #[test]
    fn haar_integral_scales_under_dilation((f, k) in (arb_sb(5), -2i64..=2)) {
        let alpha = KElement::digit_at(5, 2, k);
        // ∫g(αx)dx = |α|⁻¹∫g = q^{w(α)}∫g.
        prop_assert_eq!(f.dilate(&alpha).unwrap().haar_integral(), f.haar_integral().mul(&CycRat::int_pow(5, k)));
    }

    #[test]
    fn fourier_inversion((f, d) in (arb_sb(3), -1i64..=2)) {
        let psi = AdditiveCharacter::new(3, d);
        let ff = f.fourier(&psi).unwrap().fourier(&psi).unwrap();
        let mu = CycRat::from_rational(f.mu().clone());
        prop_assert_eq!(ff, f.reflect().scale(&mu.mul(&mu).mul(&CycRat::int_pow(3, -d))));
    }

    #[test]
    fn fourier_matches_cell_sums((f, d) in (arb_sb(2), -1i64..=1)) {
        let psi = AdditiveCharacter::new(2, d);
        let ft = f.fourier(&psi).unwrap();
        for y in probe_points(2) {
            prop_assert_eq!(ft.eval(&y), fourier_by_cells(&f, &psi, &y), "y = {:?}", y);
        }
    }

    #[test]
    fn star_scaling_law((f, k, d) in (arb_sb(3), -1i64..=1, 0i64..=1)) {
        // g(α·)★ = |α|⁻²g★(α⁻¹·) with |α|⁻² = q^{2w(α)}.
        let psi = AdditiveCharacter::new(3, d);
        let pi = KElement::u(3);
        let alpha = KElement::digit_at(3, 2, k);
        let alpha_inv = KElement::digit_at(3, 2, -k);
        let lhs = f.dilate(&alpha).unwrap().star(&psi, &pi).unwrap();
        let rhs = f.star(&psi, &pi).unwrap().dilate(&alpha_inv).unwrap().scale(&CycRat::int_pow(3, 2 * k));
        prop_assert_eq!(lhs, rhs);
    }
}

/// `W` and `∇` evaluated from their definitions at sample points.
fn w_pointwise(f: &SBFunction, x: &KElement) -> CycRat {
    if x.is_zero() {
        return f.eval(x);
    }
    let v = x.valuation();
    let shift = if v.rem_euclid(2) == 0 { -v / 2 } else { (-v - 1).div_euclid(2) };
    f.eval(&x.shift(shift))
}

fn nabla(x: &KElement) -> KElement {
    if x.is_zero() {
        x.clone()
    } else {
        x.shift(x.valuation())
    }
}

#[test]
fn star_agrees_with_the_pointwise_definition() {
    let q = 3;
    let pi = KElement::u(q);
    let fs = [
        SBFunction::char_ideal(q, mu1(), 1),
        SBFunction::indicator(KCoset::new(&KElement::one(q), 2), mu1()),
        SBFunction::indicator(KCoset::new(&KElement::from_terms(q, &[(-1, 2), (0, 1)]), 1), mu1()),
    ];
    for d in 0..=1 {
        let psi = AdditiveCharacter::new(q, d);
        for f in &fs {
            let w = f.w_operator(&pi).unwrap();
            let star = f.star(&psi, &pi).unwrap();
            let wf = w.fourier(&psi).unwrap();
            for x in probe_points(q) {
                assert_eq!(w.eval(&x), w_pointwise(f, &x), "W at {x:?}");
                assert_eq!(star.eval(&x), wf.eval(&nabla(&x)), "★ at {x:?}");
            }
        }
    }
}

#[test]
fn star_of_ideal_closed_form() {
    for q in [2u32, 3] {
        let pi = KElement::u(q);
        for d in -1..=2 {
            let psi = AdditiveCharacter::new(q, d);
            for r in -1..=2 {
                let star = SBFunction::char_ideal(q, mu1(), r).star(&psi, &pi).unwrap();
                let want = SBFunction::char_ideal(q, mu1(), d.div_euclid(2) + d.rem_euclid(2) - r).scale(&CycRat::int_pow(q, -2 * r));
                assert_eq!(star, want, "q={q} d={d} r={r}");
            }
        }
    }
}

#[test]
fn parse_round_trip() {
    let f = SBFunction::parse(3, mu1(), "2*[1 + u*O] - 1/3*[u^-1*O]").unwrap();
    assert_eq!(SBFunction::parse(3, mu1(), &format!("{f:?}")).unwrap(), f);
    assert!(SBFunction::parse(3, mu1(), "2*[1 + ").is_err());
}
