//! Cyclotomic numbers scaled by a half-integer power of `q`.

use super::cyclotomic::CycRat;
use num_complex::Complex64;
use std::fmt;

/// The number `c · q^{half/2}`.
///
/// Normalized so that `half ∈ {0, 1}`. Two values with different `half`
/// can still be equal when `√q ∈ ℚ(ζ_m)`; equality therefore goes through
/// [`QScaled::to_cycrat`] in that case.
#[derive(Clone)]
pub struct QScaled {
    q: u32,
    c: CycRat,
    half: i64,
}

impl QScaled {
    pub fn new(q: u32, c: CycRat, half: i64) -> Self {
        let whole = half.div_euclid(2);
        let half = half.rem_euclid(2);
        let c = if whole != 0 { c.mul(&CycRat::int_pow(q, whole)) } else { c };
        QScaled { q, c, half }
    }

    pub fn from_cycrat(q: u32, c: CycRat) -> Self {
        QScaled { q, c, half: 0 }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Cyclotomic part `c`.
    pub fn coeff(&self) -> &CycRat {
        &self.c
    }

    /// Exponent of `√q`, either 0 or 1.
    pub fn half_power(&self) -> i64 {
        self.half
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.q, other.q);
        QScaled::new(self.q, self.c.mul(&other.c), self.half + other.half)
    }

    pub fn scale(&self, c: &CycRat) -> Self {
        QScaled { q: self.q, c: self.c.mul(c), half: self.half }
    }

    pub fn conj(&self) -> Self {
        QScaled { q: self.q, c: self.c.conj(), half: self.half }
    }

    pub fn inv(&self) -> Option<Self> {
        Some(QScaled::new(self.q, self.c.inv()?, -self.half))
    }

    /// Embed into a cyclotomic field using a quadratic Gauss sum for `√q`.
    pub fn to_cycrat(&self) -> CycRat {
        if self.half == 0 {
            return self.c.clone();
        }
        self.c.mul(&sqrt_q(self.q))
    }

    pub fn to_complex(&self) -> Complex64 {
        self.c.to_complex() * (self.q as f64).powf(self.half as f64 / 2.0)
    }
}

/// `√q` as an element of a cyclotomic field (`q` prime).
///
/// For odd `q` the quadratic Gauss sum `g = Σ (a/q) ζ_q^a` satisfies
/// `g² = (−1)^{(q−1)/2} q`; for `q = 2`, `√2 = ζ₈ + ζ₈⁻¹`.
pub fn sqrt_q(q: u32) -> CycRat {
    if q == 2 {
        return CycRat::zeta(8, 1).add(&CycRat::zeta(8, -1));
    }
    let mut g = CycRat::zero();
    for a in 1..q as i64 {
        let leg = legendre(a, q as i64);
        g = g.add(&CycRat::zeta(q, a).mul(&CycRat::from_int(leg)));
    }
    if q % 4 == 1 {
        g
    } else {
        g.mul(&CycRat::zeta(4, 3))
    }
}

fn legendre(a: i64, p: i64) -> i64 {
    let mut r = 1i64;
    let mut b = a.rem_euclid(p);
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    if r == 1 {
        1
    } else {
        -1
    }
}

impl PartialEq for QScaled {
    fn eq(&self, other: &Self) -> bool {
        if self.q != other.q {
            return false;
        }
        if self.half == other.half {
            return self.c == other.c;
        }
        self.to_cycrat() == other.to_cycrat()
    }
}

impl fmt::Display for QScaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.half == 0 {
            write!(f, "{}", self.c)
        } else {
            write!(f, "{}*sqrt({})", self.c, self.q)
        }
    }
}

impl fmt::Debug for QScaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_q_squares_to_q() {
        for q in [2u32, 3, 5, 7, 11] {
            let s = sqrt_q(q);
            assert_eq!(s.mul(&s), CycRat::from_int(q as i64), "q = {}", q);
            assert!((s.to_complex().re - (q as f64).sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn half_powers_normalize() {
        let a = QScaled::new(3, CycRat::one(), -1);
        assert_eq!(a.half_power(), 1);
        assert_eq!(a.coeff(), &CycRat::frac(1, 3));
        let b = a.mul(&a);
        assert_eq!(b.half_power(), 0);
        assert_eq!(b.coeff(), &CycRat::frac(1, 3));
    }

    #[test]
    fn equality_across_representations() {
        let a = QScaled::new(5, CycRat::one(), 1);
        let b = QScaled::from_cycrat(5, sqrt_q(5));
        assert_eq!(a, b);
    }
}
