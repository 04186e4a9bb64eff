//! One-dimensional zeta integrals on `F`, the multiplicative integral and
//! integration on `F × F`.

use super::felement::FElement;
use super::lifted::{GoodCharacter, LiftTerm, LiftedFn, ResidueFn};
use crate::exactnum::{CycRat, ZetaValue};
use crate::localfield::{QuasiCharacter, VAL_INF};
use crate::schwartz::SBFunction;
use crate::zeta1d::zeta;
use crate::Error;
use num_rational::BigRational;

/// Which case of the explicit formulae a term `g^{a,γ}ψ_b` falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZetaCase {
    /// The integrand vanishes on `𝒪_F^×`.
    Vanishing,
    /// `0 = ν(a) < γ`.
    Constant,
    /// `γ = 0 ≤ ν(a)`.
    Residue,
    /// `ν(a) ≥ γ < 0`.
    GaussianSum,
}

/// Classify by `(ν(a), γ)` after reducing `a` below `t^γ`.
pub fn zeta_case(a: &FElement, gamma: i64) -> ZetaCase {
    let na = a.truncate(gamma).valuation();
    if na < gamma {
        if na < 0 {
            ZetaCase::Vanishing
        } else if na == 0 {
            ZetaCase::Constant
        } else {
            ZetaCase::Vanishing
        }
    } else if gamma > 0 {
        ZetaCase::Vanishing
    } else if gamma == 0 {
        ZetaCase::Residue
    } else {
        ZetaCase::GaussianSum
    }
}

fn sb_only(g: &ResidueFn) -> &SBFunction {
    // Point values are null for the Haar measure on K.
    g.sb()
}

/// `ζ¹_F(f, ω, s)` for a good character `ω` induced by `omega`, returned as
/// a function of `T = q^{−s}` with coefficients in `ℂ(Γ)`.
pub fn zeta1d_on_f(f: &LiftedFn, omega: &QuasiCharacter, psi: &GoodCharacter) -> Result<ZetaValue, Error> {
    let q = f.q();
    let mut acc = ZetaValue::zero(q);
    for t in f.terms() {
        acc = acc.add(&term_zeta(t, omega, psi)?);
    }
    Ok(acc)
}

fn term_zeta(t: &LiftTerm, omega: &QuasiCharacter, psi: &GoodCharacter) -> Result<ZetaValue, Error> {
    let q = t.g.q();
    match zeta_case(&t.a, t.gamma) {
        ZetaCase::Vanishing => Ok(ZetaValue::zero(q)),
        ZetaCase::Constant => {
            // ω(a)|a|^{s−1} with |a| = q^{−w}: q^w·T^w.
            let a0 = t.a.coeff(0);
            let w = a0.valuation();
            let factor = ZetaValue::monomial(q, omega.eval(&a0)?.mul(&CycRat::int_pow(q, w)), w, 0);
            let single = LiftedFn::from_terms(q, t.g.mu().clone(), vec![t.clone()]);
            Ok(factor.mul(&single.integrate(psi)?))
        }
        ZetaCase::Residue => {
            let nb = t.b.as_ref().map(|b| b.valuation()).unwrap_or(VAL_INF);
            if nb < 0 {
                return Ok(ZetaValue::zero(q));
            }
            let mut g1 = sb_only(&t.g).translate(&t.a.coeff(0).neg());
            if let Some(b) = &t.b {
                let b0 = b.coeff(0);
                if !b0.is_zero() {
                    g1 = g1.twist(&b0, &psi.base)?;
                }
            }
            Ok(t.coeff.mul(&zeta(&g1, omega)))
        }
        ZetaCase::GaussianSum => Err(Error::GaussianSumCase),
    }
}

/// The principal-value convention for the case `ν(a) ≥ γ < 0`: `f(0)` times
/// `∫_{w(x) ≥ n} ψ̄(x)ω(x)|x|^s d^×x` once this no longer depends on `n`.
/// Other terms are evaluated as in [`zeta1d_on_f`].
pub fn zeta1d_on_f_regularized(f: &LiftedFn, omega: &QuasiCharacter, psi: &GoodCharacter) -> Result<ZetaValue, Error> {
    let q = f.q();
    let mut acc = ZetaValue::zero(q);
    for t in f.terms() {
        let v = match zeta_case(&t.a, t.gamma) {
            ZetaCase::GaussianSum => regularized_term(t, omega, psi)?,
            _ => term_zeta(t, omega, psi)?,
        };
        acc = acc.add(&v);
    }
    Ok(acc)
}

fn regularized_term(t: &LiftTerm, omega: &QuasiCharacter, psi: &GoodCharacter) -> Result<ZetaValue, Error> {
    let q = t.g.q();
    let f0 = t.g.eval(&t.a.coeff(t.gamma).neg());
    if f0.is_zero() {
        return Ok(ZetaValue::zero(q));
    }
    let b0 = match &t.b {
        Some(b) if b.valuation() < 0 => return Ok(ZetaValue::zero(q)),
        Some(b) => b.coeff(0),
        None => crate::localfield::KElement::zero(q),
    };
    let value = shell_window(&b0, omega, psi, t.g.mu())?;
    Ok(t.coeff.scale(&f0).mul(&value))
}

/// `∫_{w(x) ≥ n} ψ_K(b₀x)ω(x)|x|^s d^×x` for a window start `n`.
pub fn truncated_gauss_integral(
    b0: &crate::localfield::KElement,
    n: i64,
    omega: &QuasiCharacter,
    psi: &GoodCharacter,
    mu: &BigRational,
) -> Result<ZetaValue, Error> {
    let q = omega.q();
    let base = SBFunction::char_ideal(q, mu.clone(), n);
    let g = if b0.is_zero() { base } else { base.twist(b0, &psi.base)? };
    Ok(zeta(&g, omega))
}

fn shell_window(
    b0: &crate::localfield::KElement,
    omega: &QuasiCharacter,
    psi: &GoodCharacter,
    mu: &BigRational,
) -> Result<ZetaValue, Error> {
    let n0 = if b0.is_zero() {
        0
    } else {
        let dprime = psi.base.conductor() - b0.valuation();
        dprime - omega.conductor() as i64 - 2
    };
    let v0 = truncated_gauss_integral(b0, n0, omega, psi, mu)?;
    for n in [n0 - 1, n0 - 2] {
        if truncated_gauss_integral(b0, n, omega, psi, mu)? != v0 {
            return Err(Error::NoPrincipalValue);
        }
    }
    Ok(v0)
}

/// `∫^{F^×}φ d^×x` where the caller supplies `f ∈ 𝓛(F, ψ)` with
/// `φ = f·|·|` on `F^×`.
pub fn mult_integral(f: &LiftedFn, psi: &GoodCharacter) -> Result<ZetaValue, Error> {
    f.integrate(psi)
}

/// `∫^{F^×} g^{a,γ} d^×x = |a|^{−1}∫^F g^{a,γ}` when `0 ∉ a + t^γ𝒪_F`.
pub fn mult_integral_of_lift(g: &SBFunction, a: &FElement, gamma: i64, psi: &GoodCharacter) -> Result<ZetaValue, Error> {
    let a = a.truncate(gamma);
    if a.is_zero() {
        return Err(Error::Unsupported("lift support contains 0".into()));
    }
    let inv = a.abs()?.inv()?;
    Ok(inv.mul(&LiftedFn::lift(g, &a, gamma).integrate(psi)?))
}

/// `x ↦ g(x)|x|^{−1}` for `g` supported away from 0.
pub fn divide_by_abs(g: &SBFunction) -> Result<SBFunction, Error> {
    let q = g.q();
    let mut out = Vec::new();
    for (c, v) in g.terms() {
        if c.contains_zero() {
            return Err(Error::Unsupported("function does not vanish near 0".into()));
        }
        out.push((c.clone(), v.mul(&CycRat::int_pow(q, c.rep().valuation()))));
    }
    Ok(SBFunction::from_terms(q, g.mu().clone(), out))
}

/// `coeff · g₁^{a₁,γ₁} ⊗ g₂^{a₂,γ₂}` on `F × F`.
#[derive(Clone, Debug)]
pub struct LiftTerm2 {
    pub g1: SBFunction,
    pub g2: SBFunction,
    pub a: (FElement, FElement),
    pub gamma: (i64, i64),
    pub coeff: ZetaValue,
}

/// A finite sum of lifts of tensor Schwartz–Bruhat functions on `K × K`.
#[derive(Clone, Debug, Default)]
pub struct LiftedFn2 {
    pub terms: Vec<LiftTerm2>,
}

impl LiftedFn2 {
    pub fn eval(&self, x: &FElement, y: &FElement) -> ZetaValue {
        let q = x.q();
        let mut acc = ZetaValue::zero(q);
        for t in &self.terms {
            let dx = x.sub(&t.a.0);
            let dy = y.sub(&t.a.1);
            if dx.valuation() >= t.gamma.0 && dy.valuation() >= t.gamma.1 {
                let v = t.g1.eval(&dx.coeff(t.gamma.0)).mul(&t.g2.eval(&dy.coeff(t.gamma.1)));
                acc = acc.add(&t.coeff.scale(&v));
            }
        }
        acc
    }

    pub fn translate(&self, tau: &(FElement, FElement)) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| LiftTerm2 { a: (t.a.0.sub(&tau.0), t.a.1.sub(&tau.1)), ..t.clone() })
            .collect();
        LiftedFn2 { terms }
    }
}

/// `∫^{F²} g^{(a₁,a₂),(γ₁,γ₂)} = ∫∫g(u,v)du dv · X^{γ₁+γ₂}`.
pub fn integrate_f2(f: &LiftedFn2) -> ZetaValue {
    let q = f.terms.first().map(|t| t.g1.q()).unwrap_or(2);
    let mut acc = ZetaValue::zero(q);
    for t in &f.terms {
        let v = t.g1.haar_integral().mul(&t.g2.haar_integral());
        acc = acc.add(&t.coeff.scale(&v).mul(&ZetaValue::x_pow(q, t.gamma.0 + t.gamma.1)));
    }
    acc
}
