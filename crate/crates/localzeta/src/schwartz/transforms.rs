//! Fourier transform, the operators `W` and `∇`, the ★-transform, and the
//! coset push-forwards used by them.

use super::function::{coset_measure, SBFunction, SBTerm};
use crate::exactnum::CycRat;
use crate::localfield::{AdditiveCharacter, KCoset, KElement};
use crate::Error;

impl SBFunction {
    /// `ĝ(y) = ∫ g(x) ψ(xy) dx`.
    ///
    /// `Char(a + π^n𝒪)` goes to `μq^{-n} ψ(a·) Char(π^{d−n}𝒪)`.
    pub fn fourier(&self, psi: &AdditiveCharacter) -> Result<SBFunction, Error> {
        let d = psi.conductor();
        let terms = self
            .terms()
            .iter()
            .map(|(c, v)| {
                SBTerm::twisted(
                    KCoset::ideal(self.q(), d - c.level()),
                    c.rep().clone(),
                    *psi,
                    v.mul(&coset_measure(self.q(), self.mu(), c.level())),
                )
            })
            .collect();
        SBFunction::normalize(self.q(), self.mu().clone(), terms)
    }

    /// `Wg(x) = g(π^{−w(x)/2}x)` for even `w(x)`, `g(π^{(−w(x)−1)/2}x)` for odd.
    pub fn w_operator(&self, pi: &KElement) -> Result<SBFunction, Error> {
        check_uniformizer(pi)?;
        let mut out = Vec::new();
        for (c, val) in self.terms() {
            let n = c.level();
            if c.contains_zero() {
                out.push((KCoset::ideal(self.q(), 2 * n), val.clone()));
                continue;
            }
            let a = c.rep();
            let v = a.valuation();
            let a0 = a.mul_pi_power(pi, v, n + v)?;
            let a1 = a.mul_pi_power(pi, v + 1, n + v + 1)?;
            out.push((KCoset::new(&a0, n + v), val.clone()));
            out.push((KCoset::new(&a1, n + v + 1), val.clone()));
        }
        Ok(SBFunction::from_terms(self.q(), self.mu().clone(), out))
    }

    /// `g ∘ ∇` with `∇x = π^{w(x)}x`.
    pub fn nabla_compose(&self, pi: &KElement) -> Result<SBFunction, Error> {
        check_uniformizer(pi)?;
        let mut out = Vec::new();
        for (c, val) in self.terms() {
            let n = c.level();
            if c.contains_zero() {
                out.push((KCoset::ideal(self.q(), ceil_half(n)), val.clone()));
                continue;
            }
            let a = c.rep();
            let v = a.valuation();
            if v.rem_euclid(2) == 1 {
                continue;
            }
            let h = v / 2;
            let b = a.mul_pi_power(pi, -h, n - h)?;
            out.push((KCoset::new(&b, n - h), val.clone()));
        }
        Ok(SBFunction::from_terms(self.q(), self.mu().clone(), out))
    }

    /// `g★ = (Wg)^ ∘ ∇`.
    pub fn star(&self, psi: &AdditiveCharacter, pi: &KElement) -> Result<SBFunction, Error> {
        self.w_operator(pi)?.fourier(psi)?.nabla_compose(pi)
    }

    /// `x ↦ g(αx)`.
    pub fn dilate(&self, alpha: &KElement) -> Result<SBFunction, Error> {
        if alpha.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let wa = alpha.valuation();
        let mut out = Vec::new();
        for (c, val) in self.terms() {
            let level = c.level() - wa;
            let rep = if c.contains_zero() {
                KElement::zero(self.q())
            } else {
                let inv = alpha.inverse_to_precision(level - c.rep().valuation())?;
                c.rep().mul(&inv)
            };
            out.push((KCoset::new(&rep, level), val.clone()));
        }
        Ok(SBFunction::from_terms(self.q(), self.mu().clone(), out))
    }

    /// `x ↦ g(x + τ)`.
    pub fn translate(&self, tau: &KElement) -> SBFunction {
        let out = self.terms().iter().map(|(c, v)| (c.translate(tau), v.clone())).collect();
        SBFunction::from_terms(self.q(), self.mu().clone(), out)
    }

    /// `x ↦ g(−x)`.
    pub fn reflect(&self) -> SBFunction {
        let out = self.terms().iter().map(|(c, v)| (c.neg(), v.clone())).collect();
        SBFunction::from_terms(self.q(), self.mu().clone(), out)
    }

    /// `x ↦ ψ(bx)·g(x)`, normalized.
    pub fn twist(&self, b: &KElement, psi: &AdditiveCharacter) -> Result<SBFunction, Error> {
        let terms = self
            .terms()
            .iter()
            .map(|(c, v)| SBTerm::twisted(c.clone(), b.clone(), *psi, v.clone()))
            .collect();
        SBFunction::normalize(self.q(), self.mu().clone(), terms)
    }

    /// The lift `h^{0,r}`: zero off `π^r𝒪`, and `f(π^r x) = h(x̄)` on it.
    /// `h` is indexed by the residue digit.
    pub fn lift_finite(q: u32, mu: num_rational::BigRational, h: &[CycRat], r: i64) -> SBFunction {
        assert_eq!(h.len(), q as usize, "h must list one value per residue");
        let out = h
            .iter()
            .enumerate()
            .map(|(c, v)| (KCoset::new(&KElement::digit_at(q, c as i64, r), r + 1), v.clone()))
            .collect();
        SBFunction::from_terms(q, mu, out)
    }
}

fn check_uniformizer(pi: &KElement) -> Result<(), Error> {
    if pi.valuation() != 1 {
        Err(Error::NotUniformizer)
    } else {
        Ok(())
    }
}

/// `⌈n/2⌉` for any sign of `n`.
pub fn ceil_half(n: i64) -> i64 {
    (n + 1).div_euclid(2)
}
