//! Adaptive Gauss–Kronrod (7, 15) quadrature for complex-valued integrands.

use super::{lit, Real};
use crate::Error;
use num_complex::Complex;

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

const MAX_DEPTH: u32 = 40;

/// An integral value with an absolute error estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate<F: Real> {
    pub value: Complex<F>,
    pub error: F,
}

impl<F: Real> Estimate<F> {
    pub fn zero() -> Self {
        Estimate { value: Complex::new(F::zero(), F::zero()), error: F::zero() }
    }

    pub fn add(self, other: Self) -> Self {
        Estimate { value: self.value + other.value, error: self.error + other.error }
    }
}

fn gk15<F: Real, G: Fn(F) -> Complex<F>>(f: &G, a: F, b: F) -> (Complex<F>, F) {
    let half = (b - a) / lit(2.0);
    let mid = (a + b) / lit(2.0);
    let mut kron = f(mid) * lit::<F>(WGK[7]);
    let mut gauss = f(mid) * lit::<F>(WG[3]);
    for (i, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = half * lit(x);
        let s = f(mid - dx) + f(mid + dx);
        kron = kron + s * lit::<F>(w);
        if i % 2 == 1 {
            gauss = gauss + s * lit::<F>(WG[i / 2]);
        }
    }
    let k = kron * half;
    let g = gauss * half;
    (k, (k - g).norm())
}

/// `∫_a^b f` to absolute tolerance `tol` by recursive bisection.
pub fn integrate<F: Real, G: Fn(F) -> Complex<F>>(f: &G, a: F, b: F, tol: F) -> Result<Estimate<F>, Error> {
    adapt(f, a, b, tol, MAX_DEPTH)
}

fn adapt<F: Real, G: Fn(F) -> Complex<F>>(f: &G, a: F, b: F, tol: F, depth: u32) -> Result<Estimate<F>, Error> {
    let (v, e) = gk15(f, a, b);
    if !v.re.is_finite() || !v.im.is_finite() {
        return Err(Error::Numerical(format!("non-finite integrand on [{a:?}, {b:?}]")));
    }
    // Below the rounding floor further bisection cannot help.
    let floor = F::epsilon() * lit(50.0) * v.norm().max(F::min_positive_value());
    if e <= tol || e <= floor {
        return Ok(Estimate { value: v, error: e });
    }
    if depth == 0 {
        return Err(Error::Numerical(format!("quadrature did not converge on [{a:?}, {b:?}]")));
    }
    let m = (a + b) / lit(2.0);
    let h = tol / lit(2.0);
    Ok(adapt(f, a, m, h, depth - 1)?.add(adapt(f, m, b, h, depth - 1)?))
}

/// `∫_a^b f` over consecutive pieces of length at most `step`, tolerance
/// shared evenly.
pub fn integrate_pieces<F: Real, G: Fn(F) -> Complex<F>>(
    f: &G,
    a: F,
    b: F,
    step: F,
    tol: F,
    max_pieces: usize,
) -> Result<Estimate<F>, Error> {
    let n = ((b - a) / step).ceil().to_usize().unwrap_or(usize::MAX).max(1);
    if n > max_pieces {
        return Err(Error::Numerical(format!("{n} quadrature pieces exceed the cap of {max_pieces}")));
    }
    let h = (b - a) / lit(n as f64);
    let t = tol / lit(n as f64);
    let mut acc = Estimate::zero();
    for i in 0..n {
        let lo = a + h * lit(i as f64);
        let hi = if i + 1 == n { b } else { lo + h };
        acc = acc.add(integrate(f, lo, hi, t)?);
    }
    Ok(acc)
}
