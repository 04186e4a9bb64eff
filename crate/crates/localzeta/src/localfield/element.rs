//! Finite Laurent polynomials in the uniformizer `u` over `𝔽_q`.

use crate::Error;
use std::fmt;

/// Valuation returned for the zero element.
pub const VAL_INF: i64 = i64::MAX;

/// A finite Laurent polynomial `Σ c_k u^k` with digits `c_k ∈ 0..q`.
///
/// Stored densely from the lowest nonzero exponent; the digit vector never
/// starts or ends with a zero, so the zero element has no digits.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KElement {
    q: u32,
    low: i64,
    digits: Vec<u32>,
}

impl KElement {
    pub fn zero(q: u32) -> Self {
        KElement { q, low: 0, digits: Vec::new() }
    }

    pub fn one(q: u32) -> Self {
        Self::digit_at(q, 1, 0)
    }

    /// The uniformizer `u`.
    pub fn u(q: u32) -> Self {
        Self::digit_at(q, 1, 1)
    }

    /// `c · u^k` with `c` reduced mod `q`.
    pub fn digit_at(q: u32, c: i64, k: i64) -> Self {
        Self::from_terms(q, &[(k, c)])
    }

    /// Integer constant reduced mod `q`.
    pub fn constant(q: u32, c: i64) -> Self {
        Self::digit_at(q, c, 0)
    }

    /// Sum of `c·u^k` over `(k, c)` pairs; repeated exponents add.
    pub fn from_terms(q: u32, terms: &[(i64, i64)]) -> Self {
        if terms.is_empty() {
            return Self::zero(q);
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut d = vec![0u32; (hi - lo + 1) as usize];
        for &(k, c) in terms {
            let i = (k - lo) as usize;
            d[i] = ((d[i] as i64 + c).rem_euclid(q as i64)) as u32;
        }
        Self::from_dense(q, lo, d)
    }

    /// Build from digits of `u^low, u^{low+1}, …` (already reduced).
    pub fn from_dense(q: u32, low: i64, mut digits: Vec<u32>) -> Self {
        while digits.last() == Some(&0) {
            digits.pop();
        }
        let lead = digits.iter().take_while(|&&c| c == 0).count();
        if lead == digits.len() {
            return Self::zero(q);
        }
        digits.drain(..lead);
        KElement { q, low: low + lead as i64, digits }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    /// `w(x)`, with [`VAL_INF`] for zero.
    pub fn valuation(&self) -> i64 {
        if self.is_zero() {
            VAL_INF
        } else {
            self.low
        }
    }

    /// Highest exponent carrying a nonzero digit.
    pub fn top(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.low + self.digits.len() as i64 - 1)
        }
    }

    /// Digit at `u^k`.
    pub fn digit(&self, k: i64) -> u32 {
        if k < self.low {
            return 0;
        }
        self.digits.get((k - self.low) as usize).copied().unwrap_or(0)
    }

    /// Nonzero `(exponent, digit)` pairs in ascending order.
    pub fn terms(&self) -> Vec<(i64, u32)> {
        self.digits
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.low + i as i64, c))
            .collect()
    }

    /// Leading digit (the residue of `x·u^{-w(x)}`); zero for zero.
    pub fn leading_digit(&self) -> u32 {
        self.digits.first().copied().unwrap_or(0)
    }

    /// Drop all digits at exponents `≥ n`.
    pub fn truncate(&self, n: i64) -> Self {
        if self.is_zero() || n <= self.low {
            return Self::zero(self.q);
        }
        let keep = ((n - self.low) as usize).min(self.digits.len());
        Self::from_dense(self.q, self.low, self.digits[..keep].to_vec())
    }

    /// Multiply by `u^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        KElement { q: self.q, low: self.low + k, digits: self.digits.clone() }
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.q, o.q, "elements over different residue fields");
    }

    fn combine(&self, o: &Self, sign: i64) -> Self {
        self.check(o);
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if sign == 1 { o.clone() } else { o.neg() };
        }
        let lo = self.low.min(o.low);
        let hi = self.top().unwrap().max(o.top().unwrap());
        let q = self.q as i64;
        let d = (lo..=hi)
            .map(|k| ((self.digit(k) as i64 + sign * o.digit(k) as i64).rem_euclid(q)) as u32)
            .collect();
        Self::from_dense(self.q, lo, d)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, 1)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, -1)
    }

    pub fn neg(&self) -> Self {
        let q = self.q;
        KElement {
            q,
            low: self.low,
            digits: self.digits.iter().map(|&c| (q - c) % q).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.q);
        }
        let q = self.q as u64;
        let mut d = vec![0u64; self.digits.len() + o.digits.len() - 1];
        for (i, &a) in self.digits.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.digits.iter().enumerate() {
                d[i + j] = (d[i + j] + a as u64 * b as u64) % q;
            }
        }
        Self::from_dense(self.q, self.low + o.low, d.into_iter().map(|x| x as u32).collect())
    }

    /// Multiply every digit by the residue `c`.
    pub fn scale_digit(&self, c: i64) -> Self {
        let c = c.rem_euclid(self.q as i64) as u64;
        let q = self.q as u64;
        Self::from_dense(self.q, self.low, self.digits.iter().map(|&x| ((x as u64 * c) % q) as u32).collect())
    }

    /// `x⁻¹` truncated to exponents `< n`, so `x·x⁻¹ ≡ 1 (mod u^{n + w(x)})`.
    pub fn inverse_to_precision(&self, n: i64) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let v = self.low;
        let len = n + v;
        if len <= 0 {
            return Ok(Self::zero(self.q));
        }
        let len = len as usize;
        let q = self.q as i64;
        let a0_inv = inv_mod(self.digits[0] as i64, q);
        // Power-series division of 1 by the unit part.
        let mut y = vec![0i64; len];
        for k in 0..len {
            let mut s = if k == 0 { 1 } else { 0 };
            for j in 1..=k.min(self.digits.len() - 1) {
                s -= self.digits[j] as i64 * y[k - j];
            }
            y[k] = (s.rem_euclid(q) * a0_inv).rem_euclid(q);
        }
        Ok(Self::from_dense(self.q, -v, y.into_iter().map(|c| c as u32).collect()))
    }

    /// `π^k · self` truncated to exponents `< prec`, for a uniformizer `π`.
    pub fn mul_pi_power(&self, pi: &Self, k: i64, prec: i64) -> Result<Self, Error> {
        if pi.valuation() != 1 {
            return Err(Error::NotUniformizer);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        // Only digits of π^k below prec - w(self) matter.
        let need = prec - self.low;
        let pk = pi_power(pi, k, need)?;
        Ok(self.mul(&pk).truncate(prec))
    }

    /// Residue digit of `x` in `𝔽_q` if `x ∈ 𝒪`.
    pub fn residue(&self) -> Option<u32> {
        if self.low < 0 && !self.is_zero() {
            None
        } else {
            Some(self.digit(0))
        }
    }
}

/// `π^k` truncated to exponents `< prec`.
pub fn pi_power(pi: &KElement, k: i64, prec: i64) -> Result<KElement, Error> {
    if pi.valuation() != 1 {
        return Err(Error::NotUniformizer);
    }
    let q = pi.q();
    if k >= 0 {
        let mut acc = KElement::one(q);
        for _ in 0..k {
            acc = acc.mul(pi).truncate(prec);
        }
        Ok(acc.truncate(prec))
    } else {
        // (π⁻¹)^{|k|}; π⁻¹ has valuation −1 so each factor needs |k| extra digits.
        let m = -k;
        let inv = pi.inverse_to_precision(prec + m)?;
        let mut acc = KElement::one(q);
        for _ in 0..m {
            acc = acc.mul(&inv).truncate(prec + m);
        }
        Ok(acc.truncate(prec))
    }
}

pub(crate) fn inv_mod(a: i64, q: i64) -> i64 {
    let (mut r0, mut r1) = (q, a.rem_euclid(q));
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let t = r0 / r1;
        (r0, r1) = (r1, r0 - t * r1);
        (s0, s1) = (s1, s0 - t * s1);
    }
    s0.rem_euclid(q)
}

impl fmt::Display for KElement {
    /// Syntax `2*u^-1 + 1 + u^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(k, c)| {
                let mono = match k {
                    0 => String::new(),
                    1 => "u".to_string(),
                    _ => format!("u^{}", k),
                };
                match (c, mono.is_empty()) {
                    (_, true) => c.to_string(),
                    (1, false) => mono,
                    _ => format!("{}*{}", c, mono),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parse `2*u^-1 + 1 + u^3` (also accepts ` - ` between terms and a bare `0`).
pub fn parse_kelement(q: u32, s: &str) -> Result<KElement, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty element".into()));
    }
    let mut terms = Vec::new();
    for (sign, tok) in split_signed(s) {
        terms.push(parse_monomial(tok).map(|(k, c)| (k, sign * c))?);
    }
    Ok(KElement::from_terms(q, &terms))
}

/// Split on top-level `+`/`-` separators, keeping the sign of each term.
pub(crate) fn split_signed(s: &str) -> Vec<(i64, &str)> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut depth = 0i32;
    let mut start = 0usize;
    let mut sign = 1i64;
    let mut i = 0usize;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '+' | '-' if depth == 0 => {
                let prev = s[..i].trim_end();
                // A sign right after `^` or `*` belongs to the exponent/factor.
                if !(prev.ends_with('^') || prev.ends_with('*') || prev.ends_with(';')) {
                    let tok = s[start..i].trim();
                    if !tok.is_empty() {
                        out.push((sign, tok));
                    }
                    sign = if ch == '-' { -1 } else { 1 };
                    start = i + 1;
                }
            }
            _ => {}
        }
        i += 1;
    }
    let tok = s[start..].trim();
    if !tok.is_empty() {
        out.push((sign, tok));
    }
    out
}

fn parse_monomial(tok: &str) -> Result<(i64, i64), Error> {
    let bad = || Error::Parse(format!("bad term `{}`", tok));
    let (coef, mono) = match tok.split_once('*') {
        Some((c, m)) => (c.trim().parse::<i64>().map_err(|_| bad())?, m.trim()),
        None if tok.starts_with('u') => (1, tok),
        None => return Ok((0, tok.parse::<i64>().map_err(|_| bad())?)),
    };
    if mono == "u" {
        return Ok((1, coef));
    }
    let e = mono.strip_prefix("u^").ok_or_else(bad)?;
    let e = e.trim_matches(|c| c == '(' || c == ')');
    Ok((e.parse::<i64>().map_err(|_| bad())?, coef))
}
