//! Zeta integrals `ζ(g, ω, s) = ∫ g(x) ω(x) |x|^s d×x` on `K^×`.

use crate::exactnum::{CycRat, Poly, ZetaValue};
use crate::localfield::QuasiCharacter;
use crate::schwartz::{coset_measure, SBFunction};
use std::collections::BTreeMap;

/// `ζ(g, ω)` as a rational function of `T = q^{-s}`, with `d×x = |x|^{-1}dx`.
///
/// A coset `a + π^n𝒪` with `0 ∉` it is split to level `r + w(a)`, where `ω`
/// is constant; each piece contributes `ω(a)·μq^{w(a)−n}·T^{w(a)}`. An ideal
/// `π^m𝒪` contributes `μ(1−q⁻¹)(cT)^m/(1−cT)` with `c = ω(π)` when `ω` is
/// unramified and nothing otherwise.
pub fn zeta(g: &SBFunction, omega: &QuasiCharacter) -> ZetaValue {
    let q = g.q();
    let r = omega.conductor() as i64;
    let c = omega.pi_value();
    let mut poly: BTreeMap<i64, CycRat> = BTreeMap::new();
    let mut tails: BTreeMap<i64, CycRat> = BTreeMap::new();
    for (coset, val) in g.terms() {
        let n = coset.level();
        if coset.contains_zero() {
            if !omega.is_ramified() {
                let e = tails.entry(n).or_insert_with(CycRat::zero);
                *e = e.add(val);
            }
            continue;
        }
        let v = coset.rep().valuation();
        let target = r + v;
        let s = if n >= target {
            omega.eval(coset.rep()).expect("nonzero representative")
        } else {
            coset
                .refine_to(target)
                .iter()
                .fold(CycRat::zero(), |acc, p| acc.add(&omega.eval(p.rep()).expect("nonzero representative")))
        };
        if s.is_zero() {
            continue;
        }
        let level = n.max(target);
        let m = coset_measure(q, g.mu(), level).mul(&CycRat::int_pow(q, v));
        let e = poly.entry(v).or_insert_with(CycRat::zero);
        *e = e.add(&val.mul(&s).mul(&m));
    }
    let laurent: Vec<((i64, i64), CycRat)> = poly.into_iter().map(|(t, c)| ((0, t), c)).collect();
    if tails.is_empty() {
        return ZetaValue::from_parts(q, laurent, Poly::one()).expect("nonzero denominator");
    }
    // P(T) + μ(1−q⁻¹)Σ val·(cT)^m / (1−cT) over the common denominator.
    let unit_vol = CycRat::from_rational(g.mu().clone()).mul(&CycRat::one().sub(&CycRat::int_pow(q, -1)));
    let mut num: Vec<((i64, i64), CycRat)> = Vec::new();
    for ((x, t), a) in laurent {
        num.push(((x, t), a.clone()));
        num.push(((x, t + 1), a.mul(c).neg()));
    }
    for (m, val) in tails {
        num.push(((0, m), unit_vol.mul(&val).mul(&c.pow(m))));
    }
    ZetaValue::from_parts(q, num, Poly::new(vec![CycRat::one(), c.neg()])).expect("nonzero denominator")
}

/// Tate's L-factor: `(1 − ω(π)T)^{-1}` if `ω` is unramified, else 1.
pub fn l_function(omega: &QuasiCharacter) -> ZetaValue {
    let q = omega.q();
    if omega.is_ramified() {
        ZetaValue::one(q)
    } else {
        ZetaValue::geometric(q, omega.pi_value())
    }
}

/// `Z(g, ω) = ζ(g, ω) / L(ω)`, a Laurent polynomial in `T`.
pub fn z_normalized(g: &SBFunction, omega: &QuasiCharacter) -> ZetaValue {
    let l = l_function(omega);
    zeta(g, omega).div(&l).expect("L-factor is invertible")
}

/// `ζ` over `K × K` for a finite sum of pure tensors `Σ c · f₁ ⊗ f₂`.
pub type Tensor = Vec<(CycRat, SBFunction, SBFunction)>;

/// `ζ_{K×K}(f, ω₁⊗ω₂) = Σ c·ζ(f₁, ω₁)·ζ(f₂, ω₂)`.
pub fn zeta_product(f: &Tensor, omega1: &QuasiCharacter, omega2: &QuasiCharacter) -> ZetaValue {
    let q = omega1.q();
    f.iter().fold(ZetaValue::zero(q), |acc, (c, a, b)| {
        if c.is_zero() {
            return acc;
        }
        acc.add(&zeta(a, omega1).mul(&zeta(b, omega2)).scale(c))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localfield::{enumerate_characters, KCoset, KElement};
    use num_rational::BigRational;
    use num_traits::One;

    fn mu1() -> BigRational {
        BigRational::one()
    }

    #[test]
    fn zeta_of_integers_trivial_character() {
        for q in [2u32, 3, 5] {
            let f = SBFunction::char_ideal(q, mu1(), 0);
            let w = QuasiCharacter::trivial(q);
            let unit = CycRat::one().sub(&CycRat::int_pow(q, -1));
            let expected = ZetaValue::geometric(q, &CycRat::one()).scale(&unit);
            assert_eq!(zeta(&f, &w), expected);
            assert_eq!(z_normalized(&f, &w), ZetaValue::constant(q, unit));
        }
    }

    #[test]
    fn zeta_of_principal_units_is_constant() {
        let q = 3;
        for r in 1..=2 {
            for w in enumerate_characters(q, r).unwrap().into_iter().filter(|w| w.conductor() == r as u32) {
                let h = SBFunction::indicator(KCoset::new(&KElement::one(q), r), mu1());
                assert_eq!(zeta(&h, &w), ZetaValue::constant(q, CycRat::int_pow(q, -r)));
            }
        }
    }

    #[test]
    fn conductor_one_character_kills_shells() {
        let q = 3;
        let w = enumerate_characters(q, 1).unwrap().into_iter().find(|w| w.conductor() == 1).unwrap();
        let f = SBFunction::char_ideal(q, mu1(), 1).sub(&SBFunction::char_ideal(q, mu1(), 0).scale(&CycRat::frac(1, 3)));
        assert!(zeta(&f, &w).is_zero());
    }

    #[test]
    fn l_function_convention() {
        let q = 5;
        assert_eq!(l_function(&QuasiCharacter::trivial(q)), ZetaValue::geometric(q, &CycRat::one()));
        for w in enumerate_characters(q, 2).unwrap().into_iter().filter(|w| w.is_ramified()) {
            assert_eq!(l_function(&w), ZetaValue::one(q));
        }
    }

    #[test]
    fn tensor_of_integers() {
        let q = 3;
        let f = SBFunction::char_ideal(q, mu1(), 0);
        let w = QuasiCharacter::trivial(q);
        let t = vec![(CycRat::one(), f.clone(), f.clone())];
        let one = zeta(&f, &w);
        assert_eq!(zeta_product(&t, &w, &w), one.mul(&one));
        let zero = vec![(CycRat::one(), SBFunction::zero(q, mu1()), f)];
        assert!(zeta_product(&zero, &w, &w).is_zero());
    }
}
