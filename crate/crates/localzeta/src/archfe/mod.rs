//! The ★-transform over `ℝ`, evaluated numerically.
//!
//! With `ψ(x) = e^{2πix}` and `∇x = |x|x`,
//! `g★(y) = 2∫ g(x)ψ(∇(yx))|x| dx`. Substituting `u = x²` turns this into
//! `∫_0^∞ g(√u)e^{2πisu} + g(−√u)e^{−2πisu} du` with `s = y|y|`, so the
//! phase is linear and the pieces between sign changes have equal length.
//! Zeta integrals use `x = e^v` on each half line.
//!
//! Only quadrature-convergent `s` are accepted; there is no continuation.
//! Whether `π^{−s/4}Γ(s/4)` behaves as an L-factor for ★ is not examined.

mod gamma;
mod quad;

pub use gamma::{gamma, gamma_real};
pub use quad::{integrate, integrate_pieces, Estimate};

use crate::Error;
use num_complex::Complex;
use num_traits::{Float, FloatConst};
use std::fmt::Debug;

/// Scalar type for the archimedean engine.
pub trait Real: Float + FloatConst + Debug + Send + Sync + 'static {}

impl<T: Float + FloatConst + Debug + Send + Sync + 'static> Real for T {}

pub(crate) fn lit<F: Real>(x: f64) -> F {
    F::from(x).expect("representable constant")
}

const MAX_PIECES: usize = 2_000_000;
const MAX_DOUBLINGS: usize = 200;

/// A test function on `ℝ` with a closed-form evaluator.
#[derive(Clone, Debug, PartialEq)]
pub enum RealTestFunction<F: Real> {
    Zero,
    /// `e^{−πx²}`.
    Gaussian,
    /// `e^{−πx⁴}`, the Gaussian composed with `∇`.
    GaussianNabla,
    /// `a/(1 + bx⁴)` with `b > 0`.
    RationalDecay { a: F, b: F },
    /// `x ↦ f(αx)`.
    Dilated(Box<RealTestFunction<F>>, F),
    /// `c·f`.
    Scaled(Box<RealTestFunction<F>>, F),
}

/// A monotone majorant of `|f(x)|` in `|x|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Decay<F: Real> {
    /// `|f(x)| ≤ a·e^{−c|x|^p}`.
    ExpPower { a: F, c: F, p: F },
    /// `|f(x)| ≤ a·|x|^{−k}`.
    Power { a: F, k: F },
}

impl<F: Real> Decay<F> {
    pub fn at(&self, x: F) -> F {
        match *self {
            Decay::ExpPower { a, c, p } => a * (-c * x.powf(p)).exp(),
            Decay::Power { a, k } => a * x.powf(-k),
        }
    }

    /// The majorant in the variable `u = x²`.
    pub fn in_square(&self) -> Self {
        let two: F = lit(2.0);
        match *self {
            Decay::ExpPower { a, c, p } => Decay::ExpPower { a, c, p: p / two },
            Decay::Power { a, k } => Decay::Power { a, k: k / two },
        }
    }

    /// An upper bound for `∫_X^∞ bound(x)x^m dx`, or `None` if this `X` is
    /// too small for the estimate.
    pub fn tail(&self, m: F, x: F) -> Result<Option<F>, Error> {
        match *self {
            Decay::ExpPower { a, c, p } => {
                if a.is_zero() {
                    return Ok(Some(F::zero()));
                }
                let e = m - p + F::one();
                let den = c * p - e.max(F::zero()) * x.powf(-p);
                if den <= F::zero() {
                    return Ok(None);
                }
                Ok(Some(a * (-c * x.powf(p)).exp() * x.powf(e) / den))
            }
            Decay::Power { a, k } => {
                if a.is_zero() {
                    return Ok(Some(F::zero()));
                }
                let e = k - m - F::one();
                if e <= F::zero() {
                    return Err(Error::Numerical(format!("tail of x^{m:?}·|x|^-{k:?} does not converge")));
                }
                Ok(Some(a * x.powf(-e) / e))
            }
        }
    }
}

impl<F: Real> RealTestFunction<F> {
    pub fn eval(&self, x: F) -> Complex<F> {
        Complex::new(self.eval_real(x), F::zero())
    }

    fn eval_real(&self, x: F) -> F {
        match self {
            RealTestFunction::Zero => F::zero(),
            RealTestFunction::Gaussian => (-F::PI() * x * x).exp(),
            RealTestFunction::GaussianNabla => (-F::PI() * (x * x) * (x * x)).exp(),
            RealTestFunction::RationalDecay { a, b } => *a / (F::one() + *b * (x * x) * (x * x)),
            RealTestFunction::Dilated(f, alpha) => f.eval_real(*alpha * x),
            RealTestFunction::Scaled(f, c) => *c * f.eval_real(x),
        }
    }

    /// `sup |f|`.
    pub fn sup_bound(&self) -> F {
        match self {
            RealTestFunction::Zero => F::zero(),
            RealTestFunction::Gaussian | RealTestFunction::GaussianNabla => F::one(),
            RealTestFunction::RationalDecay { a, .. } => a.abs(),
            RealTestFunction::Dilated(f, _) => f.sup_bound(),
            RealTestFunction::Scaled(f, c) => c.abs() * f.sup_bound(),
        }
    }

    pub fn decay(&self) -> Decay<F> {
        match self {
            RealTestFunction::Zero => Decay::ExpPower { a: F::zero(), c: F::one(), p: F::one() },
            RealTestFunction::Gaussian => Decay::ExpPower { a: F::one(), c: F::PI(), p: lit(2.0) },
            RealTestFunction::GaussianNabla => Decay::ExpPower { a: F::one(), c: F::PI(), p: lit(4.0) },
            RealTestFunction::RationalDecay { a, b } => Decay::Power { a: a.abs() / *b, k: lit(4.0) },
            RealTestFunction::Dilated(f, alpha) => match f.decay() {
                Decay::ExpPower { a, c, p } => Decay::ExpPower { a, c: c * alpha.abs().powf(p), p },
                Decay::Power { a, k } => Decay::Power { a: a * alpha.abs().powf(-k), k },
            },
            RealTestFunction::Scaled(f, s) => match f.decay() {
                Decay::ExpPower { a, c, p } => Decay::ExpPower { a: a * s.abs(), c, p },
                Decay::Power { a, k } => Decay::Power { a: a * s.abs(), k },
            },
        }
    }

    /// `f★` when it has a closed form here.
    pub fn closed_star(&self) -> Option<Self> {
        match self {
            RealTestFunction::Zero => Some(RealTestFunction::Zero),
            RealTestFunction::Gaussian => Some(RealTestFunction::RationalDecay { a: lit::<F>(2.0) / F::PI(), b: lit(4.0) }),
            RealTestFunction::GaussianNabla => Some(RealTestFunction::GaussianNabla),
            RealTestFunction::RationalDecay { .. } => None,
            RealTestFunction::Scaled(f, c) => Some(RealTestFunction::Scaled(Box::new(f.closed_star()?), *c)),
            RealTestFunction::Dilated(f, alpha) => {
                let inner = RealTestFunction::Dilated(Box::new(f.closed_star()?), alpha.recip());
                Some(RealTestFunction::Scaled(Box::new(inner), alpha.abs().powi(-2)))
            }
        }
    }

    pub fn dilate(self, alpha: F) -> Self {
        RealTestFunction::Dilated(Box::new(self), alpha)
    }

    pub fn scale(self, c: F) -> Self {
        RealTestFunction::Scaled(Box::new(self), c)
    }
}

/// The real characters `1` and `sign`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealCharacter {
    Trivial,
    Sign,
}

impl RealCharacter {
    pub fn at_minus_one<F: Real>(self) -> F {
        match self {
            RealCharacter::Trivial => F::one(),
            RealCharacter::Sign => -F::one(),
        }
    }

    pub fn inverse(self) -> Self {
        self
    }
}

/// Doubles `x` from 1 until `bound(x) < target`.
fn cutoff<F: Real>(target: F, mut bound: impl FnMut(F) -> Result<Option<F>, Error>) -> Result<F, Error> {
    let mut x = F::one();
    for _ in 0..MAX_DOUBLINGS {
        if let Some(b) = bound(x)? {
            if b < target {
                return Ok(x);
            }
        }
        x = x + x;
    }
    Err(Error::Numerical("tail bound never fell below tolerance".into()))
}

/// `∫_0^{u_max}` over `[0, 1], [1, 2], [2, 4], …` for non-oscillating
/// integrands with slow tails.
fn dyadic<F: Real, G: Fn(F) -> Complex<F>>(f: &G, u_max: F, tol: F) -> Result<Estimate<F>, Error> {
    let mut cuts = vec![F::zero(), F::one()];
    while *cuts.last().expect("nonempty") < u_max {
        let last = *cuts.last().expect("nonempty");
        cuts.push(last + last);
    }
    let t = tol / lit(cuts.len() as f64);
    let mut acc = Estimate::zero();
    for w in cuts.windows(2) {
        acc = acc.add(integrate(f, w[0], w[1], t)?);
    }
    Ok(acc)
}

/// `f★(y)` with an error estimate that includes the truncated tail.
pub fn star_numeric_estimate<F: Real>(f: &RealTestFunction<F>, y: F, tol: F) -> Result<Estimate<F>, Error> {
    if *f == RealTestFunction::Zero {
        return Ok(Estimate::zero());
    }
    let s = y * y.abs();
    let decay = f.decay().in_square();
    // |f(x)|·|x| integrable means the u-integrand is.
    decay.tail(F::zero(), F::one())?;
    let osc = lit::<F>(2.0 * std::f64::consts::SQRT_2) / (lit::<F>(2.0) * F::PI() * s.abs());
    let tail_target = tol / lit(20.0);
    let u_max = cutoff(tail_target, |u| {
        let direct = decay.tail(F::zero(), u)?;
        let oscillating = if s.is_zero() { None } else { Some(decay.at(u) * osc) };
        Ok(match (direct, oscillating) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        })
    })?;
    let two_pi_s = lit::<F>(2.0) * F::PI() * s;
    let integrand = |u: F| {
        let r = u.max(F::zero()).sqrt();
        let phase = Complex::new(F::zero(), two_pi_s * u).exp();
        f.eval(r) * phase + f.eval(-r) * phase.conj()
    };
    let body = if s.is_zero() {
        dyadic(&integrand, u_max, tol * lit(0.9))?
    } else {
        let step = (lit::<F>(2.0) * s.abs()).recip().min(F::one());
        integrate_pieces(&integrand, F::zero(), u_max, step, tol * lit(0.9), MAX_PIECES)?
    };
    Ok(Estimate { value: body.value, error: body.error + tail_target * lit(2.0) })
}

/// `f★(y) = 2∫ f(x)ψ(∇(yx))|x| dx` to absolute tolerance `tol`.
pub fn star_numeric<F: Real>(f: &RealTestFunction<F>, y: F, tol: F) -> Result<Complex<F>, Error> {
    Ok(star_numeric_estimate(f, y, tol)?.value)
}

/// `ζ(f, ω, s) = ∫ f(x)ω(x)|x|^s d^×x` with an error estimate.
pub fn zeta_numeric_estimate<F: Real>(
    f: &RealTestFunction<F>,
    omega: RealCharacter,
    s: Complex<F>,
    tol: F,
) -> Result<Estimate<F>, Error> {
    let sigma = s.re;
    if sigma <= F::zero() {
        return Err(Error::Numerical(format!("Re s = {sigma:?} is outside the convergence region")));
    }
    let sup = f.sup_bound();
    if sup.is_zero() {
        return Ok(Estimate::zero());
    }
    let tail_target = tol / lit(20.0);
    let decay = f.decay();
    let x_max = cutoff(tail_target, |x| decay.tail(sigma - F::one(), x))?;
    // ∫_0^{e^V} sup·x^{σ−1} dx = sup·e^{σV}/σ on each half line.
    let v_lo = (tail_target * sigma / sup).ln() / sigma;
    let v_hi = x_max.ln().max(v_lo + F::one());
    let sign = omega.at_minus_one::<F>();
    let integrand = |v: F| {
        let x = v.exp();
        (f.eval(x) + f.eval(-x) * sign) * (s * v).exp()
    };
    let body = integrate_pieces(&integrand, v_lo, v_hi, lit(0.5), tol * lit(0.9), MAX_PIECES)?;
    Ok(Estimate { value: body.value, error: body.error + tail_target * lit(4.0) })
}

pub fn zeta_numeric<F: Real>(f: &RealTestFunction<F>, omega: RealCharacter, s: Complex<F>, tol: F) -> Result<Complex<F>, Error> {
    Ok(zeta_numeric_estimate(f, omega, s, tol)?.value)
}

/// `2π/(π² + 4π²y⁴)`, the ★-transform of `e^{−πx²}`.
pub fn gaussian_star_closed<F: Real>(y: F) -> F {
    let pi = F::PI();
    lit::<F>(2.0) * pi / (pi * pi + lit::<F>(4.0) * pi * pi * (y * y) * (y * y))
}

/// `½π^{−s/4}Γ(s/4)`, the zeta integral of `e^{−πx⁴}` against `ω = 1`.
pub fn zeta_gaussian_nabla_closed<F: Real>(s: Complex<F>) -> Complex<F> {
    let quarter = s / lit::<F>(4.0);
    let pi = Complex::new(F::PI(), F::zero());
    pi.powc(-quarter) * gamma(quarter) * lit::<F>(0.5)
}

/// Both sides of `ζ(f, ω, s)ζ(g★, ω⁻¹, 2−s) = ζ(f★, ω⁻¹, 2−s)ζ(g, ω, s)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FeProduct<F: Real> {
    pub lhs: Complex<F>,
    pub rhs: Complex<F>,
}

impl<F: Real> FeProduct<F> {
    pub fn abs_err(&self) -> F {
        (self.lhs - self.rhs).norm()
    }

    pub fn balanced(&self, tol: F) -> bool {
        self.abs_err() <= tol * (F::one() + self.lhs.norm().max(self.rhs.norm()))
    }
}

pub fn fe_product<F: Real>(
    f: &RealTestFunction<F>,
    g: &RealTestFunction<F>,
    omega: RealCharacter,
    s: Complex<F>,
    tol: F,
) -> Result<FeProduct<F>, Error> {
    let no_closed = || Error::Unsupported("★-transform without a closed form".into());
    let f_star = f.closed_star().ok_or_else(no_closed)?;
    let g_star = g.closed_star().ok_or_else(no_closed)?;
    let dual = Complex::new(lit::<F>(2.0), F::zero()) - s;
    let inner = tol / lit(100.0);
    let lhs = zeta_numeric(f, omega, s, inner)? * zeta_numeric(&g_star, omega.inverse(), dual, inner)?;
    let rhs = zeta_numeric(&f_star, omega.inverse(), dual, inner)? * zeta_numeric(g, omega, s, inner)?;
    Ok(FeProduct { lhs, rhs })
}

/// Whether the product functional equation balances within
/// `tol·(1 + magnitude)`.
pub fn fe_product_check<F: Real>(
    f: &RealTestFunction<F>,
    g: &RealTestFunction<F>,
    omega: RealCharacter,
    s: Complex<F>,
    tol: F,
) -> Result<bool, Error> {
    Ok(fe_product(f, g, omega, s, tol)?.balanced(tol))
}

/// The 20-point grid `y = k/8`, `k = 0..19`.
pub fn standard_grid<F: Real>() -> Vec<F> {
    (0..20).map(|k| lit::<F>(k as f64 / 8.0)).collect()
}

#[cfg(test)]
mod tests;
