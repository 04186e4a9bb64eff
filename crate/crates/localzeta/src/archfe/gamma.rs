//! `Γ` by Stirling's series after shifting the argument to `Re z ≥ 15`,
//! with reflection for `Re z < ½`.

use super::{lit, Real};
use num_complex::Complex;

const SHIFT: f64 = 15.0;

// B_{2k}/(2k(2k−1)) for k = 1..7.
const STIRLING: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
];

pub fn gamma<F: Real>(z: Complex<F>) -> Complex<F> {
    let half: F = lit(0.5);
    let one = Complex::new(F::one(), F::zero());
    if z.re < half {
        let pi = Complex::new(F::PI(), F::zero());
        return pi / ((pi * z).sin() * gamma(one - z));
    }
    let mut w = z;
    let mut denom = one;
    while w.re < lit(SHIFT) {
        denom = denom * w;
        w = w + one;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex::new(F::zero(), F::zero());
    let mut pow = inv;
    for &c in &STIRLING {
        series = series + pow * lit::<F>(c);
        pow = pow * inv2;
    }
    let half_ln_2pi = (F::PI() + F::PI()).ln() * half;
    let ln_gamma = (w - half) * w.ln() - w + half_ln_2pi + series;
    ln_gamma.exp() / denom
}

pub fn gamma_real<F: Real>(x: F) -> F {
    gamma(Complex::new(x, F::zero())).re
}
