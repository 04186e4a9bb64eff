//! Finite Laurent polynomials in `t` over `K`.

use crate::exactnum::{CycRat, ZetaValue};
use crate::localfield::{parse_kelement, KElement, VAL_INF};
use crate::Error;
use std::collections::BTreeMap;
use std::fmt;

/// `Σ a_n tⁿ` with finitely many nonzero `a_n ∈ K`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FElement {
    q: u32,
    coeffs: BTreeMap<i64, KElement>,
}

impl FElement {
    pub fn zero(q: u32) -> Self {
        FElement { q, coeffs: BTreeMap::new() }
    }

    pub fn one(q: u32) -> Self {
        Self::from_k(&KElement::one(q))
    }

    pub fn t(q: u32) -> Self {
        Self::monomial(&KElement::one(q), 1)
    }

    /// `c` viewed as a constant series.
    pub fn from_k(c: &KElement) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·t^k`.
    pub fn monomial(c: &KElement, k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c.clone());
        }
        FElement { q: c.q(), coeffs }
    }

    pub fn from_coeffs(q: u32, coeffs: impl IntoIterator<Item = (i64, KElement)>) -> Self {
        let mut out = Self::zero(q);
        for (k, c) in coeffs {
            out = out.add(&Self::monomial(&c, k));
        }
        out
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> KElement {
        self.coeffs.get(&k).cloned().unwrap_or_else(|| KElement::zero(self.q))
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &KElement)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    /// `ν(x)`, the least `t`-exponent; [`VAL_INF`] for zero.
    pub fn valuation(&self) -> i64 {
        self.coeffs.keys().next().copied().unwrap_or(VAL_INF)
    }

    pub fn top(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// `η(x)`, the coefficient of `t^{ν(x)}`.
    pub fn eta(&self) -> KElement {
        self.coeffs.values().next().cloned().unwrap_or_else(|| KElement::zero(self.q))
    }

    /// The residue of an element of `𝒪_F`: its `t⁰` coefficient.
    pub fn residue(&self) -> KElement {
        self.coeff(0)
    }

    /// Keep exponents `< n`.
    pub fn truncate(&self, n: i64) -> Self {
        FElement { q: self.q, coeffs: self.coeffs.range(..n).map(|(k, c)| (*k, c.clone())).collect() }
    }

    /// `x·t^k`.
    pub fn shift(&self, k: i64) -> Self {
        FElement { q: self.q, coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &o.coeffs {
            let v = coeffs.get(k).map(|x| x.add(c)).unwrap_or_else(|| c.clone());
            if v.is_zero() {
                coeffs.remove(k);
            } else {
                coeffs.insert(*k, v);
            }
        }
        FElement { q: self.q, coeffs }
    }

    pub fn neg(&self) -> Self {
        FElement { q: self.q, coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.neg())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.q);
        for (i, a) in &self.coeffs {
            for (j, b) in &o.coeffs {
                out = out.add(&Self::monomial(&a.mul(b), i + j));
            }
        }
        out
    }

    pub fn scale_k(&self, c: &KElement) -> Self {
        self.mul(&Self::from_k(c))
    }

    /// `Some((c, m, k))` when `x = c·u^m·t^k` with `c ∈ 𝔽_q^×`.
    pub fn as_monomial(&self) -> Option<(u32, i64, i64)> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (k, c) = self.coeffs.iter().next().unwrap();
        let terms = c.terms();
        if terms.len() != 1 {
            return None;
        }
        Some((terms[0].1, terms[0].0, *k))
    }

    /// `|x| = |η(x)|·X^{ν(x)} = q^{−w(η(x))}X^{ν(x)}`.
    pub fn abs(&self) -> Result<ZetaValue, Error> {
        if self.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let w = self.eta().valuation();
        Ok(ZetaValue::monomial(self.q, CycRat::int_pow(self.q, -w), 0, self.valuation()))
    }
}

/// Split at top-level `+`/`-` into signed pieces; a `-` right after `^` is
/// part of an exponent.
fn split_sum(s: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut neg = false;
    let mut prev = ' ';
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') && prev != '^' && prev != '*' {
            if !cur.trim().is_empty() {
                out.push((neg, cur.trim().to_string()));
                cur.clear();
                neg = false;
            }
            if ch == '-' {
                neg = !neg;
            }
        } else {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            prev = ch;
        }
    }
    if !cur.trim().is_empty() {
        out.push((neg, cur.trim().to_string()));
    }
    out
}

fn split_product(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && ch == '*' {
            out.push(cur.trim().to_string());
            cur.clear();
        } else {
            cur.push(ch);
        }
    }
    out.push(cur.trim().to_string());
    out
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    if s.starts_with('(') && s.ends_with(')') {
        let inner = &s[1..s.len() - 1];
        let mut depth = 0;
        for ch in inner.chars() {
            match ch {
                '(' => depth += 1,
                ')' if depth == 0 => return s,
                ')' => depth -= 1,
                _ => {}
            }
        }
        return strip_parens(inner);
    }
    s
}

/// Parse `"u^-1 + t*(1+u) - 2*t^-2"`: a sum of products of `t`-powers,
/// `K`-expressions and parenthesised sub-expressions.
pub fn parse_felement(q: u32, s: &str) -> Result<FElement, Error> {
    let s = strip_parens(s);
    if s.is_empty() {
        return Err(Error::Parse("empty element".into()));
    }
    let mut out = FElement::zero(q);
    for (neg, term) in split_sum(s) {
        let mut prod = FElement::one(q);
        for factor in split_product(&term) {
            let v = if factor == "t" {
                FElement::t(q)
            } else if let Some(e) = factor.strip_prefix("t^") {
                let e: i64 = strip_parens(e)
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad t exponent in {:?}", factor)))?;
                FElement::monomial(&KElement::one(q), e)
            } else if factor.starts_with('(') {
                parse_felement(q, &factor)?
            } else {
                FElement::from_k(&parse_kelement(q, &factor)?)
            };
            prod = prod.mul(&v);
        }
        out = out.add(&if neg { prod.neg() } else { prod });
    }
    Ok(out)
}

impl fmt::Display for FElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match *k {
                0 => write!(f, "({})", c)?,
                1 => write!(f, "t*({})", c)?,
                _ => write!(f, "t^{}*({})", k, c)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
