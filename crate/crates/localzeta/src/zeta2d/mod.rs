//! Two-dimensional zeta integrals over `T = 𝒪_F^× × 𝒪_F^×` for characters
//! of `K₂^t(F)` whose pullback along `𝔱` factors through the residue map.

mod rho2;

pub use rho2::{rho2, shell_integral, zeta_rho2, Rho2Identity, Rho2Point};

use crate::exactnum::{CycRat, ZetaValue};
use crate::lift2d::{integrate_f2, FElement, LiftTerm2, LiftedFn2};
use crate::localfield::{AdditiveCharacter, KCoset, KElement, QuasiCharacter};
use crate::schwartz::ceil_half;
use crate::zeta1d::{delta, epsilon_star, l_function, rho0, star_product, zeta_product, Tensor};
use crate::Error;
use num_rational::BigRational;
use std::collections::BTreeMap;

/// `χ` with `χ∘𝔱(x, y) = ω₁(x̄)ω₂(ȳ)` on `T`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChiCharacter {
    pub omega1: QuasiCharacter,
    pub omega2: QuasiCharacter,
}

impl ChiCharacter {
    pub fn new(omega1: QuasiCharacter, omega2: QuasiCharacter) -> Self {
        ChiCharacter { omega1, omega2 }
    }

    /// `χ = ω∘∂`. Since `∂∘𝔱(x, y) = x̄·π^{w(ȳ)}`, this is `(ω, ω(π)^{w(·)})`.
    pub fn boundary(omega: &QuasiCharacter) -> Self {
        let q = omega.q();
        ChiCharacter::new(omega.clone(), QuasiCharacter::unramified(q, omega.pi_value().clone()))
    }

    pub fn inverse(&self) -> Self {
        ChiCharacter::new(self.omega1.inverse(), self.omega2.inverse())
    }

    pub fn q(&self) -> u32 {
        self.omega1.q()
    }

    pub fn conductors(&self) -> (u32, u32) {
        (self.omega1.conductor(), self.omega2.conductor())
    }

    pub fn label(&self) -> String {
        format!("{}⊗{}", self.omega1.label(), self.omega2.label())
    }
}

/// `ζ(f⁰, χ, s)` by reduction to `ζ_{K×K}(f, ω₁⊗ω₂, s)`.
pub fn zeta2(f: &Tensor, chi: &ChiCharacter) -> ZetaValue {
    zeta_product(f, &chi.omega1, &chi.omega2)
}

/// The Laurent coefficients of `ζ(f⁰, χ, s)` up to `T^{n_max}`, summed cell
/// by cell over pairs of valuation shells with each cell integrated on
/// `F × F` as a lifted product indicator.
pub fn zeta2_series_direct(f: &Tensor, chi: &ChiCharacter, n_max: i64) -> BTreeMap<i64, CycRat> {
    let q = chi.q();
    let mut out: BTreeMap<i64, CycRat> = BTreeMap::new();
    for (c, g1, g2) in f {
        let (Some(lo1), Some(lo2)) = (g1.support_valuation(), g2.support_valuation()) else {
            continue;
        };
        let fine1 = g1.max_level().unwrap_or(0);
        let fine2 = g2.max_level().unwrap_or(0);
        let mu = g1.mu().clone();
        for n in lo1..=n_max - lo2 {
            let shell1 = shell_cells(q, n, fine1.max(n + chi.omega1.conductor().max(1) as i64));
            for m in lo2..=n_max - n {
                let shell2 = shell_cells(q, m, fine2.max(m + chi.omega2.conductor().max(1) as i64));
                let mut acc = ZetaValue::zero(q);
                for c1 in &shell1 {
                    let v1 = g1.eval(c1.rep());
                    if v1.is_zero() {
                        continue;
                    }
                    let w1 = v1.mul(&chi.omega1.eval(c1.rep()).expect("unit shell"));
                    for c2 in &shell2 {
                        let v2 = g2.eval(c2.rep());
                        if v2.is_zero() {
                            continue;
                        }
                        let w = w1.mul(&v2).mul(&chi.omega2.eval(c2.rep()).expect("unit shell"));
                        let cell = LiftedFn2 {
                            terms: vec![LiftTerm2 {
                                g1: crate::schwartz::SBFunction::indicator(c1.clone(), mu.clone()),
                                g2: crate::schwartz::SBFunction::indicator(c2.clone(), mu.clone()),
                                a: (FElement::zero(q), FElement::zero(q)),
                                gamma: (0, 0),
                                coeff: ZetaValue::constant(q, w),
                            }],
                        };
                        acc = acc.add(&integrate_f2(&cell));
                    }
                }
                // d^×x = dx/|x| on the shells.
                let v = acc.as_constant().expect("X-free cell integrals").mul(&CycRat::int_pow(q, n + m)).mul(c);
                let e = out.entry(n + m).or_insert_with(CycRat::zero);
                *e = e.add(&v);
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn shell_cells(q: u32, n: i64, level: i64) -> Vec<KCoset> {
    KCoset::ideal(q, n)
        .refine_to(level)
        .into_iter()
        .filter(|c| c.rep().valuation() == n)
        .collect()
}

/// Whether the expansion of `v` at `T = 0` agrees with `series` through
/// `T^{n_max}`.
pub fn series_agrees(v: &ZetaValue, series: &BTreeMap<i64, CycRat>, n_max: i64) -> bool {
    if !v.is_x_free() {
        return false;
    }
    let den = v.denominator();
    let mut diff: BTreeMap<i64, CycRat> = v.numerator().iter().map(|(&(_, t), c)| (t, c.clone())).collect();
    for (&k, s) in series {
        for (j, d) in den.coeffs().iter().enumerate() {
            let e = diff.entry(k + j as i64).or_insert_with(CycRat::zero);
            *e = e.sub(&s.mul(d));
        }
    }
    diff.iter().all(|(&k, c)| k > n_max || c.is_zero())
}

/// `L_F(χ, s) = L(ω₁, s)L(ω₂, s)`.
pub fn l2_function(chi: &ChiCharacter) -> ZetaValue {
    l_function(&chi.omega1).mul(&l_function(&chi.omega2))
}

/// `ε_F(χ, s) = ε_*(ω₁, s)ε_*(ω₂, s)`.
pub fn epsilon2(chi: &ChiCharacter, psi: &AdditiveCharacter, pi: &KElement, mu: &BigRational) -> Result<ZetaValue, Error> {
    let e = epsilon_star(&chi.omega1, psi, pi, mu)?.mul(&epsilon_star(&chi.omega2, psi, pi, mu)?);
    if e.is_exponential_type().is_none() {
        return Err(Error::NonExponential);
    }
    Ok(e)
}

/// The closed form for `ω₁` ramified of conductor `r` and `ω₂` unramified:
/// `μ²q^{(k−⌈d/2⌉)(2−s)}χ(t₁,1)^k q^{−r/2}δ_{d−r}ρ₀(ω₁⁻¹)·ω₂(π)^{−⌈d/2⌉}`
/// with `k = ⌈(r−d)/2⌉`.
pub fn epsilon2_closed_form(chi: &ChiCharacter, psi: &AdditiveCharacter, pi: &KElement, mu: &BigRational) -> Result<ZetaValue, Error> {
    if !chi.omega1.is_ramified() || chi.omega2.is_ramified() {
        return Err(Error::Unsupported("closed form needs ω₁ ramified and ω₂ unramified".into()));
    }
    let q = chi.q();
    let d = psi.conductor();
    let r = chi.omega1.conductor() as i64;
    let k = ceil_half(r - d);
    let h = ceil_half(d);
    let mu = CycRat::from_rational(mu.clone());
    let chi_t1 = chi.omega1.eval(pi)?;
    let root = rho0(&chi.omega1.inverse(), psi, pi)?.mul(&crate::exactnum::QScaled::new(q, CycRat::one(), -r));
    let a = mu
        .mul(&mu)
        .mul(&CycRat::int_pow(q, 2 * (k - h)))
        .mul(&chi_t1.pow(k))
        .mul(&delta(q, d - r))
        .mul(&root.to_cycrat())
        .mul(&chi.omega2.pi_value().pow(-h));
    Ok(ZetaValue::monomial(q, a, k - h, 0))
}

/// `Z(f★⁰, χ⁻¹, 2−s) = ε_F(χ, s)Z(f⁰, χ, s)`.
pub fn verify_fe2(
    f: &Tensor,
    chi: &ChiCharacter,
    psi: &AdditiveCharacter,
    pi: &KElement,
    mu: &BigRational,
) -> Result<bool, Error> {
    let z = zeta2(f, chi).div(&l2_function(chi))?;
    let inv = chi.inverse();
    let fs = star_product(f, psi, pi)?;
    let zs = zeta2(&fs, &inv).div(&l2_function(&inv))?;
    Ok(zs.subst_dual() == epsilon2(chi, psi, pi, mu)?.mul(&z))
}

/// `(μ²q^{−d})²δ_{d−r₁}δ_{d−r₂}ω₁(−1)ω₂(−1)`, the value of
/// `ε_F(χ, s)·ε_F(χ⁻¹, 2−s)`.
pub fn epsilon2_product_constant(chi: &ChiCharacter, psi: &AdditiveCharacter, mu: &BigRational) -> CycRat {
    let q = chi.q();
    let d = psi.conductor();
    let m = CycRat::from_rational(mu.clone());
    let c = m.mul(&m).mul(&CycRat::int_pow(q, -d));
    c.mul(&c)
        .mul(&delta(q, d - chi.omega1.conductor() as i64))
        .mul(&delta(q, d - chi.omega2.conductor() as i64))
        .mul(&chi.omega1.at_minus_one())
        .mul(&chi.omega2.at_minus_one())
}

/// `ε_F(χ, s)·ε_F(χ⁻¹, 2−s)` as computed from the two factors.
pub fn epsilon2_product(chi: &ChiCharacter, psi: &AdditiveCharacter, pi: &KElement, mu: &BigRational) -> Result<ZetaValue, Error> {
    let e = epsilon2(chi, psi, pi, mu)?;
    let ei = epsilon2(&chi.inverse(), psi, pi, mu)?;
    Ok(e.mul(&ei.subst_dual()))
}

/// Every `χ = (ω₁, ω₂)` with both conductors at most `r_max` and `ω(π) = 1`.
pub fn enumerate_chis(q: u32, r_max: i64) -> Result<Vec<ChiCharacter>, Error> {
    let omegas = crate::localfield::enumerate_characters(q, r_max)?;
    let mut out = Vec::new();
    for a in &omegas {
        for b in &omegas {
            out.push(ChiCharacter::new(a.clone(), b.clone()));
        }
    }
    Ok(out)
}
