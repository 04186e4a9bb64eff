//! Rational functions in `T = q^{-s}` with Laurent monomials in the group
//! algebra generator `X`.
//!
//! A [`ZetaValue`] is `N(T, X) / D(T)` where `N` is a Laurent polynomial in
//! both variables and `D` is an ordinary polynomial in `T` with constant
//! term 1. Canonical form cancels every common factor of `D` with all the
//! `X`-slices of `N`, so structural equality is value equality.

use super::cyclotomic::CycRat;
use super::poly::Poly;
use crate::Error;
use num_complex::Complex64;
use std::collections::BTreeMap;
use std::fmt;

type Key = (i64, i64); // (x exponent, t exponent)

#[derive(Clone, PartialEq, Eq)]
pub struct ZetaValue {
    q: u32,
    num: BTreeMap<Key, CycRat>,
    den: Poly<CycRat>,
}

impl ZetaValue {
    pub fn zero(q: u32) -> Self {
        ZetaValue { q, num: BTreeMap::new(), den: Poly::one() }
    }

    pub fn one(q: u32) -> Self {
        Self::constant(q, CycRat::one())
    }

    pub fn constant(q: u32, c: CycRat) -> Self {
        Self::monomial(q, c, 0, 0)
    }

    /// `c · T^t · X^x`
    pub fn monomial(q: u32, c: CycRat, t: i64, x: i64) -> Self {
        let mut num = BTreeMap::new();
        if !c.is_zero() {
            num.insert((x, t), c);
        }
        ZetaValue { q, num, den: Poly::one() }
    }

    /// The variable `T` itself.
    pub fn t(q: u32) -> Self {
        Self::monomial(q, CycRat::one(), 1, 0)
    }

    /// The group-algebra generator power `X^x`.
    pub fn x_pow(q: u32, x: i64) -> Self {
        Self::monomial(q, CycRat::one(), 0, x)
    }

    /// `1 / (1 - c·T)`
    pub fn geometric(q: u32, c: &CycRat) -> Self {
        let den = Poly::new(vec![CycRat::one(), c.neg()]);
        Self::from_parts(q, [((0, 0), CycRat::one())], den).expect("nonzero denominator")
    }

    /// Build `Σ c·T^t·X^x / den` and bring it to canonical form.
    pub fn from_parts<I>(q: u32, terms: I, den: Poly<CycRat>) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Key, CycRat)>,
    {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut num: BTreeMap<Key, CycRat> = BTreeMap::new();
        for (k, c) in terms {
            add_term(&mut num, k, c);
        }
        // Move any power of T dividing the denominator into the numerator.
        let shift = den.coeffs().iter().position(|c| !c.is_zero()).unwrap();
        let den = if shift > 0 {
            num = num.into_iter().map(|((x, t), c)| ((x, t - shift as i64), c)).collect();
            Poly::new(den.coeffs()[shift..].to_vec())
        } else {
            den
        };
        Ok(canonicalize(q, num, den))
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Numerator terms keyed by `(x exponent, t exponent)`.
    pub fn numerator(&self) -> &BTreeMap<Key, CycRat> {
        &self.num
    }

    /// Denominator polynomial in `T` (constant term 1).
    pub fn denominator(&self) -> &Poly<CycRat> {
        &self.den
    }

    /// The value as a scalar if it has no `T` or `X` dependence.
    pub fn as_constant(&self) -> Option<CycRat> {
        if self.num.is_empty() {
            return Some(CycRat::zero());
        }
        if self.den.degree() == Some(0) && self.num.len() == 1 {
            if let Some(c) = self.num.get(&(0, 0)) {
                return Some(c.clone());
            }
        }
        None
    }

    /// True when no `X` power other than `X^0` occurs.
    pub fn is_x_free(&self) -> bool {
        self.num.keys().all(|&(x, _)| x == 0)
    }

    /// Distinct `X` exponents occurring in the numerator.
    pub fn x_exponents(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.num.keys().map(|&(x, _)| x).collect();
        v.dedup();
        v
    }

    fn check_q(&self, other: &Self) {
        assert_eq!(self.q, other.q, "ZetaValues bound to different q");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_q(other);
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.den == other.den {
            let mut num = self.num.clone();
            for (k, c) in &other.num {
                add_term(&mut num, *k, c.clone());
            }
            return canonicalize(self.q, num, self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let da = self.den.div_exact(&g);
        let db = other.den.div_exact(&g);
        let mut num = mul_num_poly(&self.num, &db);
        for (k, c) in mul_num_poly(&other.num, &da) {
            add_term(&mut num, k, c);
        }
        canonicalize(self.q, num, da.mul(&db).mul(&g))
    }

    pub fn neg(&self) -> Self {
        ZetaValue {
            q: self.q,
            num: self.num.iter().map(|(k, c)| (*k, c.neg())).collect(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_q(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.q);
        }
        let mut num = BTreeMap::new();
        for ((xa, ta), ca) in &self.num {
            for ((xb, tb), cb) in &other.num {
                add_term(&mut num, (xa + xb, ta + tb), ca.mul(cb));
            }
        }
        if self.den.degree() == Some(0) && other.den.degree() == Some(0) {
            return ZetaValue { q: self.q, num, den: Poly::one() };
        }
        canonicalize(self.q, num, self.den.mul(&other.den))
    }

    pub fn scale(&self, c: &CycRat) -> Self {
        if c.is_zero() {
            return Self::zero(self.q);
        }
        ZetaValue {
            q: self.q,
            num: self.num.iter().map(|(k, v)| (*k, v.mul(c))).collect(),
            den: self.den.clone(),
        }
    }

    /// Multiply by `T^t X^x`.
    pub fn shift(&self, t: i64, x: i64) -> Self {
        ZetaValue {
            q: self.q,
            num: self.num.iter().map(|((a, b), c)| ((a + x, b + t), c.clone())).collect(),
            den: self.den.clone(),
        }
    }

    /// Multiplicative inverse. The numerator must involve a single `X` power,
    /// otherwise the inverse would carry `X` in its denominator.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let xs = self.x_exponents();
        if xs.len() != 1 {
            return Err(Error::NonInvertible("denominator would involve X".into()));
        }
        let x = xs[0];
        let (tmin, p) = slice_poly(&self.num, x);
        // self = T^tmin X^x p(T) / den  ⇒  inverse = T^-tmin X^-x den / p
        let terms = self
            .den
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| ((-x, i as i64 - tmin), c.clone()));
        Self::from_parts(self.q, terms.collect::<Vec<_>>(), p)
    }

    pub fn div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power (negative exponents invert).
    pub fn pow(&self, e: i64) -> Result<Self, Error> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.q);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// The substitution `s ↦ 2 − s`, i.e. `T ↦ q^{-2} T^{-1}`; `X` is untouched.
    pub fn subst_dual(&self) -> Self {
        let q2 = |e: i64| CycRat::int_pow(self.q, -2 * e);
        let n = self.den.degree().unwrap_or(0) as i64;
        let num: Vec<(Key, CycRat)> = self
            .num
            .iter()
            .map(|(&(x, t), c)| ((x, n - t), c.mul(&q2(t))))
            .collect();
        let den = Poly::new(
            (0..=n)
                .map(|j| self.den.coeff((n - j) as usize).mul(&q2(n - j)))
                .collect(),
        );
        Self::from_parts(self.q, num, den).expect("nonzero denominator")
    }

    /// The substitution `T ↦ c·T^k` for `k ≥ 1` and nonzero `c`.
    pub fn subst_scale(&self, c: &CycRat, k: u32) -> Result<Self, Error> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let k = k as i64;
        let num: Vec<(Key, CycRat)> = self
            .num
            .iter()
            .map(|(&(x, t), v)| ((x, k * t), v.mul(&c.pow(t))))
            .collect();
        let deg = self.den.degree().unwrap_or(0);
        let mut dv = vec![CycRat::zero(); deg * k as usize + 1];
        for (i, d) in self.den.coeffs().iter().enumerate() {
            dv[i * k as usize] = d.mul(&c.pow(i as i64));
        }
        Self::from_parts(self.q, num, Poly::new(dv))
    }

    /// `Some((a, b))` iff the value is exactly `a·T^b` with no `X` dependence.
    pub fn is_exponential_type(&self) -> Option<(CycRat, i64)> {
        if self.den.degree() != Some(0) || self.num.len() != 1 {
            return None;
        }
        let (&(x, t), c) = self.num.iter().next().unwrap();
        if x != 0 {
            return None;
        }
        Some((c.clone(), t))
    }

    /// Numerical value at the given `T` and `X`.
    pub fn eval(&self, t: Complex64, x: Complex64) -> Complex64 {
        let mut n = Complex64::new(0.0, 0.0);
        for (&(xe, te), c) in &self.num {
            n += c.to_complex() * t.powi(te as i32) * x.powi(xe as i32);
        }
        let mut d = Complex64::new(0.0, 0.0);
        for (i, c) in self.den.coeffs().iter().enumerate() {
            d += c.to_complex() * t.powi(i as i32);
        }
        n / d
    }

    /// Numerical value at complex `s` (`T = q^{-s}`) and `X = x`.
    pub fn eval_at_s(&self, s: Complex64, x: Complex64) -> Complex64 {
        let t = (-s * (self.q as f64).ln()).exp();
        self.eval(t, x)
    }
}

fn add_term(num: &mut BTreeMap<Key, CycRat>, k: Key, c: CycRat) {
    if c.is_zero() {
        return;
    }
    match num.get_mut(&k) {
        Some(v) => {
            *v = v.add(&c);
            if v.is_zero() {
                num.remove(&k);
            }
        }
        None => {
            num.insert(k, c);
        }
    }
}

fn mul_num_poly(num: &BTreeMap<Key, CycRat>, p: &Poly<CycRat>) -> BTreeMap<Key, CycRat> {
    let mut out = BTreeMap::new();
    for (&(x, t), c) in num {
        for (i, d) in p.coeffs().iter().enumerate() {
            if !d.is_zero() {
                add_term(&mut out, (x, t + i as i64), c.mul(d));
            }
        }
    }
    out
}

/// The `X^x` slice of the numerator as `T^tmin · p(T)` with `p(0) ≠ 0`.
fn slice_poly(num: &BTreeMap<Key, CycRat>, x: i64) -> (i64, Poly<CycRat>) {
    let terms: Vec<(i64, &CycRat)> = num.range((x, i64::MIN)..=(x, i64::MAX)).map(|(&(_, t), c)| (t, c)).collect();
    let tmin = terms.first().map(|t| t.0).unwrap_or(0);
    let tmax = terms.last().map(|t| t.0).unwrap_or(0);
    let mut v = vec![CycRat::zero(); (tmax - tmin + 1) as usize];
    for (t, c) in terms {
        v[(t - tmin) as usize] = c.clone();
    }
    (tmin, Poly::new(v))
}

fn canonicalize(q: u32, mut num: BTreeMap<Key, CycRat>, mut den: Poly<CycRat>) -> ZetaValue {
    if num.is_empty() {
        return ZetaValue::zero(q);
    }
    if den.degree().unwrap_or(0) > 0 {
        let xs: Vec<i64> = {
            let mut v: Vec<i64> = num.keys().map(|&(x, _)| x).collect();
            v.dedup();
            v
        };
        let slices: Vec<(i64, i64, Poly<CycRat>)> =
            xs.iter().map(|&x| { let (t, p) = slice_poly(&num, x); (x, t, p) }).collect();
        let mut g = den.clone();
        for (_, _, p) in &slices {
            g = g.gcd(p);
            if g.degree() == Some(0) {
                break;
            }
        }
        if g.degree().unwrap_or(0) > 0 {
            den = den.div_exact(&g);
            num = BTreeMap::new();
            for (x, tmin, p) in slices {
                let r = p.div_exact(&g);
                for (i, c) in r.coeffs().iter().enumerate() {
                    add_term(&mut num, (x, tmin + i as i64), c.clone());
                }
            }
        }
    }
    let c0 = den.coeff(0);
    if !c0.is_one() {
        let inv = c0.inv().expect("denominator constant term is nonzero");
        den = den.scale(&inv);
        num = num.into_iter().map(|(k, c)| (k, c.mul(&inv))).collect();
    }
    ZetaValue { q, num, den }
}

fn monomial_str(t: i64, x: i64) -> String {
    let mut parts = Vec::new();
    match t {
        0 => {}
        1 => parts.push("T".to_string()),
        _ => parts.push(format!("T^{}", t)),
    }
    match x {
        0 => {}
        1 => parts.push("X".to_string()),
        _ => parts.push(format!("X^{}", x)),
    }
    parts.join("*")
}

/// Signed term strings; the sign is split off so sums read `a - b`.
fn term_str(c: &CycRat, t: i64, x: i64) -> (bool, String) {
    let mono = monomial_str(t, x);
    let (neg, cs) = match c.as_rational() {
        Some(r) if r < num_rational::BigRational::from_integer(0.into()) => (true, (-r).to_string()),
        Some(r) => (false, r.to_string()),
        None => (false, c.to_string()),
    };
    let s = if mono.is_empty() {
        cs
    } else if cs == "1" {
        mono
    } else {
        format!("{}*{}", cs, mono)
    };
    (neg, s)
}

fn join_terms(terms: Vec<(bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, s)) in terms.into_iter().enumerate() {
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&s);
    }
    out
}

impl fmt::Display for ZetaValue {
    /// Canonical text, e.g. `(1 - 1/3*T)^-1 * X^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num_terms: Vec<(bool, String)> = self.num.iter().map(|(&(x, t), c)| term_str(c, t, x)).collect();
        let num = if num_terms.is_empty() { "0".to_string() } else { join_terms(num_terms.clone()) };
        if self.den.degree().unwrap_or(0) == 0 {
            return write!(f, "{}", num);
        }
        let den = join_terms(
            self.den
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| term_str(c, i as i64, 0))
                .collect(),
        );
        write!(f, "({})^-1", den)?;
        if num == "1" {
            return Ok(());
        }
        if num_terms.len() == 1 && !num_terms[0].0 {
            write!(f, " * {}", num)
        } else {
            write!(f, " * ({})", num)
        }
    }
}

impl fmt::Debug for ZetaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
