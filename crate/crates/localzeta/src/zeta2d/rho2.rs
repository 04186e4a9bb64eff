//! The generalised residue map `ρ₂` and the zeta integral of `g∘ρ₂`.

use crate::exactnum::{CycRat, Poly, ZetaValue};
use crate::lift2d::FElement;
use crate::localfield::{KCoset, KElement, QuasiCharacter};
use crate::schwartz::SBFunction;
use crate::zeta1d::zeta;
use crate::Error;

/// `t₁^{i₁}t₂^{i₂}u` with `u` a unit whose residue is a unit of `𝒪_K`;
/// `t₁ = π` and `t₂ = t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rho2Point {
    pub i1: i64,
    pub i2: i64,
    pub unit: FElement,
}

impl Rho2Point {
    pub fn new(i1: i64, i2: i64, unit: FElement) -> Self {
        Rho2Point { i1, i2, unit }
    }

    fn check(&self) -> Result<(), Error> {
        if self.unit.valuation() != 0 || self.unit.coeff(0).valuation() != 0 {
            return Err(Error::Malformed(format!("{} is not a unit of 𝒪_F with unit residue", self.unit)));
        }
        if self.i2 < 0 {
            return Err(Error::Malformed("point lies outside 𝒪_F".into()));
        }
        Ok(())
    }
}

/// `ρ₂(t₁^{i₁}t₂^{i₂}u, t₁^{j₁}t₂^{j₂}v) = π^{min(i₁,j₁)}ū` when
/// `min(i₂, j₂) = 0`, and 0 when it is positive.
pub fn rho2(x: &Rho2Point, y: &Rho2Point) -> Result<KElement, Error> {
    x.check()?;
    y.check()?;
    let q = x.unit.q();
    if x.i2.min(y.i2) > 0 {
        return Ok(KElement::zero(q));
    }
    Ok(x.unit.coeff(0).shift(x.i1.min(y.i1)))
}

/// `∫_{w(x)=k} g(x)ω₀(x) d^×x` with `ω₀ = ω·|·|^{…}` trivial on `π`,
/// summed over residue cells.
pub fn shell_integral(g: &SBFunction, omega: &QuasiCharacter, k: i64) -> CycRat {
    let q = g.q();
    let level = g.max_level().unwrap_or(k).max(k + omega.conductor() as i64).max(k + 1);
    let mut acc = CycRat::zero();
    for c in KCoset::ideal(q, k).refine_to(level) {
        if c.rep().valuation() != k {
            continue;
        }
        let v = g.eval(c.rep());
        if v.is_zero() {
            continue;
        }
        acc = acc.add(&v.mul(&omega.unit_value(&c.rep().shift(-k))));
    }
    acc.mul(&CycRat::from_rational(g.mu().clone())).mul(&CycRat::int_pow(q, k - level))
}

/// Both sides of `ζ(g∘ρ₂, ω∘∂, s) = μ(𝒪^×)(1+cT)/(1−cT)·ζ_K(g, ω, 2s+c)`
/// with `c = ω(π)` standing for `q^{−c}`.
#[derive(Clone, Debug)]
pub struct Rho2Identity {
    pub lhs: ZetaValue,
    pub rhs: ZetaValue,
}

impl Rho2Identity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The left side sums shell pairs `(n, m)`: with `k = min(n, m)` each `k`
/// contributes `μ(𝒪^×)·G(k)(cT)^{2k}(1+cT)/(1−cT)`, and shells beyond the
/// finest level of `g` form a geometric tail in `c²T²`. The right side
/// substitutes `U ↦ cT²` in the one-dimensional zeta integral.
pub fn zeta_rho2(g: &SBFunction, omega: &QuasiCharacter) -> Result<Rho2Identity, Error> {
    let q = g.q();
    let c = omega.pi_value().clone();
    let unit_vol = CycRat::from_rational(g.mu().clone()).mul(&CycRat::one().sub(&CycRat::int_pow(q, -1)));
    let pair = ZetaValue::from_parts(q, [((0, 0), CycRat::one()), ((0, 1), c.clone())], Poly::one())?
        .mul(&ZetaValue::geometric(q, &c))
        .scale(&unit_vol);
    let rhs = pair.mul(&zeta(g, omega).subst_scale(&c, 2)?);
    let (Some(lo), Some(top)) = (g.support_valuation(), g.max_level()) else {
        return Ok(Rho2Identity { lhs: ZetaValue::zero(q), rhs });
    };
    let mut terms = Vec::new();
    for k in lo..top {
        let gk = shell_integral(g, omega, k);
        if !gk.is_zero() {
            terms.push(((0, 2 * k), gk.mul(&c.pow(2 * k))));
        }
    }
    let mut inner = ZetaValue::from_parts(q, terms, Poly::one())?;
    let g0 = g.eval(&KElement::zero(q));
    if !g0.is_zero() && !omega.is_ramified() {
        let tail_den = Poly::new(vec![CycRat::one(), CycRat::zero(), c.mul(&c).neg()]);
        let tail = ZetaValue::from_parts(q, [((0, 2 * top), g0.mul(&unit_vol).mul(&c.pow(2 * top)))], tail_den)?;
        inner = inner.add(&tail);
    }
    Ok(Rho2Identity { lhs: pair.mul(&inner), rhs })
}
