//! Root numbers and the epsilon factors of the ★-transform.

use super::zeta::{l_function, z_normalized, zeta, zeta_product, Tensor};
use crate::exactnum::{CycRat, QScaled, ZetaValue};
use crate::localfield::{unit_reps, AdditiveCharacter, KCoset, KElement, QuasiCharacter};
use crate::schwartz::{ceil_half, SBFunction};
use crate::Error;
use num_rational::BigRational;

/// The Gauss sum `Σ_θ χ(θ) ψ(π^{d−r}θ)` over `𝒪^×/(1+π^r𝒪)`.
pub fn gauss_sum(chi: &QuasiCharacter, psi: &AdditiveCharacter, pi: &KElement) -> Result<CycRat, Error> {
    let r = chi.conductor() as i64;
    if r == 0 {
        return Err(Error::ZeroConductor);
    }
    let d = psi.conductor();
    let mut s = CycRat::zero();
    for theta in unit_reps(chi.q(), r as u32) {
        let x = theta.mul_pi_power(pi, d - r, d)?;
        s = s.add(&chi.unit_value(&theta).mul(&psi.eval(&x)));
    }
    Ok(s)
}

/// `ρ₀(χ) = q^{−r/2} Σ_θ χ(θ) ψ(π^{d−r}θ)`.
pub fn rho0(chi: &QuasiCharacter, psi: &AdditiveCharacter, pi: &KElement) -> Result<QScaled, Error> {
    let g = gauss_sum(chi, psi, pi)?;
    Ok(QScaled::new(chi.q(), g, -(chi.conductor() as i64)))
}

/// `δ_n`: 1 for even `n`, `q⁻¹` for odd `n`. At `r = 0` the same parity rule
/// is applied to `n = d`.
pub fn delta(q: u32, n: i64) -> CycRat {
    if n.rem_euclid(2) == 0 {
        CycRat::one()
    } else {
        CycRat::int_pow(q, -1)
    }
}

/// The two test functions used to extract `ε_*`, both with `Z(g, ω)` a
/// nonzero monomial.
pub fn epsilon_test_functions(omega: &QuasiCharacter, pi: &KElement, mu: &BigRational) -> [SBFunction; 2] {
    let q = omega.q();
    if omega.is_ramified() {
        let r = omega.conductor() as i64;
        let h = SBFunction::indicator(KCoset::new(&KElement::one(q), r), mu.clone());
        let h2 = SBFunction::indicator(KCoset::new(pi, r + 1), mu.clone());
        [h, h2]
    } else {
        [SBFunction::char_ideal(q, mu.clone(), 0), SBFunction::char_ideal(q, mu.clone(), 1)]
    }
}

/// `ε` from one test function: `Z(g★, ω⁻¹)(q^{-2}T^{-1}) / Z(g, ω)(T)`.
pub fn epsilon_from(g: &SBFunction, omega: &QuasiCharacter, psi: &AdditiveCharacter, pi: &KElement) -> Result<ZetaValue, Error> {
    let z = z_normalized(g, omega);
    if z.is_zero() {
        return Err(Error::Degenerate("test function has vanishing zeta integral".into()));
    }
    let gs = g.star(psi, pi)?;
    let lhs = z_normalized(&gs, &omega.inverse()).subst_dual();
    lhs.div(&z)
}

/// `ε_*(ω, s)` as an exact monomial `a·T^b`, extracted through the functional
/// equation and confirmed with a second test function.
pub fn epsilon_star(omega: &QuasiCharacter, psi: &AdditiveCharacter, pi: &KElement, mu: &BigRational) -> Result<ZetaValue, Error> {
    let [g1, g2] = epsilon_test_functions(omega, pi, mu);
    let e1 = epsilon_from(&g1, omega, psi, pi)?;
    let e2 = epsilon_from(&g2, omega, psi, pi)?;
    if e1 != e2 {
        return Err(Error::Degenerate("epsilon depends on the test function".into()));
    }
    if e1.is_exponential_type().is_none() {
        return Err(Error::NonExponential);
    }
    Ok(e1)
}

/// `ε_*` from the closed forms: `μ·ω(π)^{−k}q^{−2k}T^{−k}` with `k = ⌈d/2⌉`
/// when unramified, and `μ·q^{2k}T^k·ω(π)^k·q^{−r/2}·δ_{d−r}·ρ₀(ω⁻¹)` with
/// `k = ⌈(r−d)/2⌉` when ramified.
pub fn epsilon_closed_form(omega: &QuasiCharacter, psi: &AdditiveCharacter, pi: &KElement, mu: &BigRational) -> Result<ZetaValue, Error> {
    let q = omega.q();
    let d = psi.conductor();
    let c = omega.eval(pi)?;
    let mu = CycRat::from_rational(mu.clone());
    if !omega.is_ramified() {
        let k = ceil_half(d);
        let a = mu.mul(&c.pow(-k)).mul(&CycRat::int_pow(q, -2 * k));
        return Ok(ZetaValue::monomial(q, a, -k, 0));
    }
    let r = omega.conductor() as i64;
    let k = ceil_half(r - d);
    let root = rho0(&omega.inverse(), psi, pi)?.mul(&QScaled::new(q, CycRat::one(), -r));
    let a = mu
        .mul(&CycRat::int_pow(q, 2 * k))
        .mul(&c.pow(k))
        .mul(&delta(q, d - r))
        .mul(&root.to_cycrat());
    Ok(ZetaValue::monomial(q, a, k, 0))
}

/// `ζ(f★★, ω) = μ²q^{−d}δ_{d−r}ω(−1)ζ(f, ω)`.
pub fn check_identity_a(f: &SBFunction, omega: &QuasiCharacter, psi: &AdditiveCharacter, pi: &KElement) -> Result<bool, Error> {
    let fss = f.star(psi, pi)?.star(psi, pi)?;
    Ok(zeta(&fss, omega) == zeta(f, omega).scale(&identity_a_constant(omega, psi, f.mu())))
}

/// [`check_identity_a`] for several characters, computing `f★★` once.
pub fn check_identity_a_all(
    f: &SBFunction,
    omegas: &[QuasiCharacter],
    psi: &AdditiveCharacter,
    pi: &KElement,
) -> Result<Vec<bool>, Error> {
    let fss = f.star(psi, pi)?.star(psi, pi)?;
    Ok(omegas
        .iter()
        .map(|omega| zeta(&fss, omega) == zeta(f, omega).scale(&identity_a_constant(omega, psi, f.mu())))
        .collect())
}

/// `μ²q^{−d}δ_{d−r}ω(−1)`.
pub fn identity_a_constant(omega: &QuasiCharacter, psi: &AdditiveCharacter, mu: &BigRational) -> CycRat {
    let q = omega.q();
    let d = psi.conductor();
    let mu = CycRat::from_rational(mu.clone());
    mu.mul(&mu)
        .mul(&CycRat::int_pow(q, -d))
        .mul(&delta(q, d - omega.conductor() as i64))
        .mul(&omega.at_minus_one())
}

/// `f★★`.
pub fn double_star(f: &SBFunction, psi: &AdditiveCharacter, pi: &KElement) -> Result<SBFunction, Error> {
    f.star(psi, pi)?.star(psi, pi)
}

/// Relations between double transforms for two primes and two characters.
///
/// Always checks `D_{π₁} f = D_{π₂} f` for each character. If the conductors
/// have the same parity it checks `D_{ψ₂} f = q^{d₁−d₂} D_{ψ₁} f`; otherwise
/// `D_{ψ₂} D_{ψ₁} f = μ⁴q^{−d₁−d₂−1} f`.
pub fn double_star_invariance(
    f: &SBFunction,
    pi1: &KElement,
    pi2: &KElement,
    psi1: &AdditiveCharacter,
    psi2: &AdditiveCharacter,
) -> Result<bool, Error> {
    for pi in [pi1, pi2] {
        if pi.valuation() != 1 {
            return Err(Error::NotUniformizer);
        }
    }
    let q = f.q();
    let d1_f = double_star(f, psi1, pi1)?;
    if d1_f != double_star(f, psi1, pi2)? {
        return Ok(false);
    }
    let d2_f = double_star(f, psi2, pi1)?;
    if d2_f != double_star(f, psi2, pi2)? {
        return Ok(false);
    }
    let (d1, d2) = (psi1.conductor(), psi2.conductor());
    if (d1 - d2).rem_euclid(2) == 0 {
        Ok(d2_f == d1_f.scale(&CycRat::int_pow(q, d1 - d2)))
    } else {
        let mu = CycRat::from_rational(f.mu().clone());
        let c = mu.pow(4).mul(&CycRat::int_pow(q, -d1 - d2 - 1));
        Ok(double_star(&d1_f, psi2, pi1)? == f.scale(&c))
    }
}

/// `(Σ c f₁⊗f₂)★ = Σ c f₁★ ⊗ f₂★`.
pub fn star_product(f: &Tensor, psi: &AdditiveCharacter, pi: &KElement) -> Result<Tensor, Error> {
    f.iter()
        .map(|(c, a, b)| Ok((c.clone(), a.star(psi, pi)?, b.star(psi, pi)?)))
        .collect()
}

/// `Z_{K×K}(f★, ω⁻¹, 2−s) = ε_*(ω₁)ε_*(ω₂)·Z_{K×K}(f, ω, s)`.
pub fn check_product_fe(
    f: &Tensor,
    omega1: &QuasiCharacter,
    omega2: &QuasiCharacter,
    psi: &AdditiveCharacter,
    pi: &KElement,
    mu: &BigRational,
) -> Result<bool, Error> {
    let l = l_function(omega1).mul(&l_function(omega2));
    let li = l_function(&omega1.inverse()).mul(&l_function(&omega2.inverse()));
    let z = zeta_product(f, omega1, omega2).div(&l)?;
    let fs = star_product(f, psi, pi)?;
    let zs = zeta_product(&fs, &omega1.inverse(), &omega2.inverse()).div(&li)?;
    let eps = epsilon_star(omega1, psi, pi, mu)?.mul(&epsilon_star(omega2, psi, pi, mu)?);
    Ok(zs.subst_dual() == eps.mul(&z))
}

/// Render a monomial `a·T^b` as `a*T^b`.
pub fn format_monomial(v: &ZetaValue) -> Option<String> {
    let (a, b) = v.is_exponential_type()?;
    Some(format!("{}*T^{}", a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localfield::enumerate_characters;
    use num_traits::One;

    fn mu1() -> BigRational {
        BigRational::one()
    }

    #[test]
    fn trivial_epsilon_at_conductor_zero() {
        let q = 3;
        let psi = AdditiveCharacter::new(q, 0);
        let e = epsilon_star(&QuasiCharacter::trivial(q), &psi, &KElement::u(q), &mu1()).unwrap();
        assert_eq!(e.is_exponential_type(), Some((CycRat::one(), 0)));
    }

    #[test]
    fn root_numbers_have_absolute_value_one() {
        for q in [2u32, 3, 5] {
            for d in [0, 1] {
                let psi = AdditiveCharacter::new(q, d);
                for w in enumerate_characters(q, 2).unwrap().into_iter().filter(|w| w.is_ramified()) {
                    let r = rho0(&w, &psi, &KElement::u(q)).unwrap();
                    assert_eq!(r.mul(&r.conj()).to_cycrat(), CycRat::one());
                    let ri = rho0(&w.inverse(), &psi, &KElement::u(q)).unwrap();
                    assert_eq!(ri, r.conj().scale(&w.at_minus_one()));
                }
            }
        }
        assert!(enumerate_characters(2, 1).unwrap().iter().all(|w| !w.is_ramified()));
        assert!(rho0(&QuasiCharacter::trivial(3), &AdditiveCharacter::new(3, 0), &KElement::u(3)).is_err());
    }

    #[test]
    fn functional_equation_matches_closed_form() {
        let q = 3;
        for d in [0, 1] {
            let psi = AdditiveCharacter::new(q, d);
            for w in enumerate_characters(q, 2).unwrap() {
                let pi = KElement::u(q);
                let e = epsilon_star(&w, &psi, &pi, &mu1()).unwrap();
                assert_eq!(e, epsilon_closed_form(&w, &psi, &pi, &mu1()).unwrap(), "{:?} d={}", w, d);
            }
        }
    }

    #[test]
    fn identity_a_on_small_examples() {
        let q = 3;
        let psi = AdditiveCharacter::new(q, 0);
        let u = KElement::u(q);
        let f = SBFunction::char_ideal(q, mu1(), 0);
        assert!(check_identity_a(&f, &QuasiCharacter::trivial(q), &psi, &u).unwrap());
        let h = SBFunction::indicator(KCoset::new(&KElement::one(q), 2), mu1());
        for w in enumerate_characters(q, 2).unwrap() {
            assert!(check_identity_a(&h, &w, &psi, &u).unwrap());
        }
        assert!(check_identity_a(&SBFunction::zero(q, mu1()), &QuasiCharacter::trivial(q), &psi, &u).unwrap());
    }

    #[test]
    fn double_star_relations() {
        let q = 3;
        let u = KElement::u(q);
        let pi2 = u.mul(&KElement::one(q).add(&u));
        let h = SBFunction::indicator(KCoset::new(&KElement::one(q), 2), mu1());
        let p0 = AdditiveCharacter::new(q, 0);
        assert!(double_star_invariance(&h, &u, &pi2, &p0, &AdditiveCharacter::new(q, 2)).unwrap());
        assert!(double_star_invariance(&h, &u, &pi2, &p0, &AdditiveCharacter::new(q, 1)).unwrap());
        let o = SBFunction::char_ideal(q, mu1(), 0);
        let d0 = double_star(&o, &p0, &u).unwrap();
        let d2 = double_star(&o, &AdditiveCharacter::new(q, 2), &u).unwrap();
        assert_eq!(d0, d2.scale(&CycRat::from_int(9)));
        assert!(double_star_invariance(&h, &u, &KElement::one(q), &p0, &p0).is_err());
    }
}
