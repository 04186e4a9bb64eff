//! Exact arithmetic in cyclotomic fields ℚ(ζ_m).
//!
//! An element is stored in the power basis `1, ζ, …, ζ^{φ(m)-1}` modulo the
//! m-th cyclotomic polynomial. Mixed-order arithmetic embeds both operands in
//! ℚ(ζ_lcm). Results that happen to be rational are stored with order 1.

use super::poly::Poly;
use super::rational::Q;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer coefficients (ascending) of the m-th cyclotomic polynomial.
pub fn cyclotomic_poly(m: u32) -> Arc<Vec<i64>> {
    assert!(m >= 1, "cyclotomic order must be positive");
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by every Φ_d with d | m, d < m.
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            let div = cyclotomic_poly(d);
            num = int_div_exact(&num, &div);
        }
    }
    let arc = Arc::new(num);
    cyclotomic_cache().lock().unwrap().insert(m, arc.clone());
    arc
}

fn int_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "cyclotomic polynomials are monic");
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for k in (dd..num.len()).rev() {
        let c = rem[k];
        if c == 0 {
            continue;
        }
        for (j, &d) in den.iter().enumerate() {
            rem[k - dd + j] -= c * d;
        }
        quot[k - dd] = c;
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

/// Euler's totient.
pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Element of ℚ(ζ_m).
#[derive(Clone)]
pub struct CycRat {
    m: u32,
    c: Vec<Q>,
}

impl CycRat {
    pub fn zero() -> Self {
        CycRat { m: 1, c: vec![Q::zero()] }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        CycRat { m: 1, c: vec![Q::from_i64(n)] }
    }

    pub fn from_rational(r: BigRational) -> Self {
        CycRat { m: 1, c: vec![Q::from_big(r)] }
    }

    /// `num/den` as a rational element.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    /// `q^e` for an integer exponent of either sign.
    pub fn int_pow(q: u32, e: i64) -> Self {
        let base = BigInt::from(q).pow(e.unsigned_abs() as u32);
        if e >= 0 {
            Self::from_rational(BigRational::from_integer(base))
        } else {
            Self::from_rational(BigRational::new(BigInt::one(), base))
        }
    }

    /// The root of unity ζ_m^k.
    pub fn zeta(m: u32, k: i64) -> Self {
        let e = k.rem_euclid(m as i64) as usize;
        let mut dense = vec![Q::zero(); m as usize];
        dense[e] = Q::one();
        Self::reduce_dense(m, dense)
    }

    /// Cyclotomic order the element is currently stored at.
    pub fn order(&self) -> u32 {
        self.m
    }

    /// Power-basis coordinates.
    pub fn coords(&self) -> Vec<BigRational> {
        self.c.iter().map(Q::to_big).collect()
    }

    /// Reduce a dense vector of coefficients of `1, ζ, ζ², …` (any length).
    fn reduce_dense(m: u32, dense: Vec<Q>) -> Self {
        let mu = m as usize;
        let mut folded = vec![Q::zero(); mu];
        for (i, c) in dense.into_iter().enumerate() {
            if !c.is_zero() {
                folded[i % mu].add_assign(&c);
            }
        }
        let phi = cyclotomic_poly(m);
        let deg = phi.len() - 1;
        for k in (deg..mu).rev() {
            if folded[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut folded[k], Q::zero());
            for (j, &pj) in phi.iter().enumerate().take(deg) {
                if pj != 0 {
                    folded[k - deg + j].sub_assign(&c.mul_i64(pj));
                }
            }
        }
        folded.truncate(deg);
        CycRat { m, c: folded }.simplified()
    }

    /// Store rational values at order 1.
    fn simplified(mut self) -> Self {
        if self.m != 1 && self.c.iter().skip(1).all(|x| x.is_zero()) {
            let c0 = self.c.swap_remove(0);
            return CycRat { m: 1, c: vec![c0] };
        }
        self
    }

    /// Embed in ℚ(ζ_target); requires `order() | target`.
    pub fn embed(&self, target: u32) -> Self {
        assert!(target % self.m == 0, "cannot embed order {} into {}", self.m, target);
        if target == self.m {
            return self.clone();
        }
        let k = (target / self.m) as usize;
        let mut dense = vec![Q::zero(); target as usize];
        for (i, c) in self.c.iter().enumerate() {
            if !c.is_zero() {
                dense[(i * k) % target as usize].add_assign(c);
            }
        }
        let mut r = Self::reduce_dense(target, dense);
        // Keep the requested order even when the value is rational so that
        // coordinate-wise operations line up.
        if r.m != target {
            let mut c = vec![Q::zero(); euler_phi(target) as usize];
            c[0] = r.c.swap_remove(0);
            r = CycRat { m: target, c };
        }
        r
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let l = self.m.lcm(&other.m);
        (self.embed(l), other.embed(l))
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c.iter().skip(1).all(Q::is_zero)
    }

    /// The rational value, if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.c.iter().skip(1).all(|x| x.is_zero()) {
            Some(self.c[0].to_big())
        } else {
            None
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        let r = Q::from_big(r.clone());
        CycRat { m: self.m, c: self.c.iter().map(|x| x.mul(&r)).collect() }
    }

    fn scale_q(&self, r: &Q) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        CycRat { m: self.m, c: self.c.iter().map(|x| x.mul(r)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.m == other.m {
            let c = self.c.iter().zip(&other.c).map(|(a, b)| a.add(b)).collect();
            return CycRat { m: self.m, c }.simplified();
        }
        if other.m == 1 {
            let mut r = self.clone();
            r.c[0].add_assign(&other.c[0]);
            return r.simplified();
        }
        if self.m == 1 {
            return other.add(self);
        }
        let (a, b) = self.aligned(other);
        a.add(&b)
    }

    pub fn neg(&self) -> Self {
        CycRat { m: self.m, c: self.c.iter().map(Q::neg).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.m == 1 {
            return other.scale_q(&self.c[0]);
        }
        if other.m == 1 {
            return self.scale_q(&other.c[0]);
        }
        if self.m != other.m {
            let (a, b) = self.aligned(other);
            return a.mul(&b);
        }
        let n = self.c.len();
        let mut dense = vec![Q::zero(); 2 * n - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if !b.is_zero() {
                    dense[i + j].add_assign(&a.mul(b));
                }
            }
        }
        Self::reduce_dense(self.m, dense)
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Self::from_rational(r.recip()));
        }
        let phi = cyclotomic_poly(self.m);
        let modulus = super::poly::int_poly_to_rational(&phi.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        let a: Poly<BigRational> = Poly::new(self.coords());
        let (g, s) = a.ext_gcd_mod(&modulus);
        debug_assert_eq!(g, Poly::one());
        Some(Self::reduce_dense(self.m, s.coeffs().iter().cloned().map(Q::from_big).collect()))
    }

    /// Integer power; negative exponents invert. Panics on `0^negative`.
    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv().expect("division by zero") } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            n >>= 1;
        }
        acc
    }

    /// Complex conjugation ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        if self.m == 1 {
            return self.clone();
        }
        let mu = self.m as usize;
        let mut dense = vec![Q::zero(); mu];
        for (i, c) in self.c.iter().enumerate() {
            dense[(mu - i) % mu].add_assign(c);
        }
        Self::reduce_dense(self.m, dense)
    }

    /// Floating-point value with ζ_m = e^{2πi/m}.
    pub fn to_complex(&self) -> Complex64 {
        let mut z = Complex64::new(0.0, 0.0);
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = c.to_f64();
            let ang = 2.0 * std::f64::consts::PI * i as f64 / self.m as f64;
            z += Complex64::from_polar(v, ang);
        }
        z
    }

    /// If `self` is a root of unity, return its order.
    pub fn root_of_unity_order(&self) -> Option<u32> {
        let bound = 2 * self.m.max(1);
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_one() {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }

    /// Exact absolute value when it lies in ℚ: `|x|² = x·x̄` must be the
    /// square of a rational.
    pub fn abs_rational(&self) -> Option<BigRational> {
        let n2 = self.mul(&self.conj()).as_rational()?;
        rational_sqrt(&n2)
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl PartialEq for CycRat {
    fn eq(&self, other: &Self) -> bool {
        if self.m == other.m {
            return self.c == other.c;
        }
        let (a, b) = self.aligned(other);
        a.c == b.c
    }
}
impl Eq for CycRat {}

impl super::poly::Field for CycRat {
    fn zero() -> Self {
        CycRat::zero()
    }
    fn one() -> Self {
        CycRat::one()
    }
    fn is_zero(&self) -> bool {
        CycRat::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        CycRat::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        CycRat::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        CycRat::mul(self, o)
    }
    fn neg(&self) -> Self {
        CycRat::neg(self)
    }
    fn inv(&self) -> Self {
        CycRat::inv(self).expect("division by zero")
    }
    fn is_one(&self) -> bool {
        CycRat::is_one(self)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&CycRat> for &CycRat {
            type Output = CycRat;
            fn $m(self, o: &CycRat) -> CycRat {
                CycRat::$m(self, o)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &CycRat {
    type Output = CycRat;
    fn neg(self) -> CycRat {
        CycRat::neg(self)
    }
}

impl From<i64> for CycRat {
    fn from(n: i64) -> Self {
        CycRat::from_int(n)
    }
}

impl From<BigRational> for CycRat {
    fn from(r: BigRational) -> Self {
        CycRat::from_rational(r)
    }
}

impl fmt::Display for CycRat {
    /// Rationals print as `a` or `a/b`; other values as a parenthesised sum
    /// of `c*z<m>^i` terms in the power basis.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{}", r);
        }
        let mut parts = Vec::new();
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let basis = match i {
                0 => String::new(),
                1 => format!("z{}", self.m),
                _ => format!("z{}^{}", self.m, i),
            };
            let s = if basis.is_empty() {
                format!("{}", c)
            } else if c.is_one() {
                basis
            } else if c.is_minus_one() {
                format!("-{}", basis)
            } else {
                format!("{}*{}", c, basis)
            };
            parts.push(s);
        }
        let mut out = String::new();
        for (k, s) in parts.iter().enumerate() {
            if k == 0 {
                out.push_str(s);
            } else if let Some(rest) = s.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(s);
            }
        }
        write!(f, "({})", out)
    }
}

impl fmt::Debug for CycRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(20).len() as u32 - 1, euler_phi(20));
    }

    #[test]
    fn zeta4_doubling() {
        let z = CycRat::zeta(4, 1);
        let two_z = z.add(&z);
        assert_eq!(two_z, z.scale(&BigRational::from_integer(2.into())));
        assert_ne!(two_z, z);
    }

    #[test]
    fn conjugate_of_zeta3() {
        let z = CycRat::zeta(3, 1);
        assert_eq!(z.conj(), CycRat::zeta(3, 2));
        assert_eq!(z.mul(&CycRat::zeta(3, 2)), CycRat::one());
    }

    #[test]
    fn sum_of_all_roots_vanishes() {
        for m in [2u32, 3, 5, 6, 12] {
            let s = (0..m as i64).fold(CycRat::zero(), |acc, k| acc.add(&CycRat::zeta(m, k)));
            assert!(s.is_zero(), "m = {m}");
        }
    }

    #[test]
    fn mixed_order_arithmetic() {
        // ζ_6 = -ζ_3² in ℚ(ζ_6) ⊃ ℚ(ζ_3)
        let a = CycRat::zeta(6, 1);
        let b = CycRat::zeta(3, 2).neg();
        assert_eq!(a, b);
        assert_eq!(CycRat::zeta(4, 1).mul(&CycRat::zeta(4, 1)), CycRat::from_int(-1));
    }

    #[test]
    fn inverse_in_zeta5() {
        let x = CycRat::one().add(&CycRat::zeta(5, 1)).add(&CycRat::zeta(5, 3).scale(&BigRational::new(2.into(), 7.into())));
        let y = x.inv().unwrap();
        assert!(x.mul(&y).is_one());
        assert!(CycRat::zero().inv().is_none());
    }

    #[test]
    fn complex_value_matches() {
        let z = CycRat::zeta(8, 3);
        let w = z.to_complex();
        let expected = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * 3.0 / 8.0);
        assert!((w - expected).norm() < 1e-12);
    }

    #[test]
    fn display_forms() {
        assert_eq!(CycRat::frac(-1, 3).to_string(), "-1/3");
        assert_eq!(CycRat::zeta(3, 1).to_string(), "(z3)");
        assert_eq!(CycRat::zeta(3, 2).to_string(), "(-1 - z3)");
    }
}
