//! Schwartz–Bruhat functions on `K` in canonical form.

use crate::exactnum::CycRat;
use crate::localfield::{parse_kelement, split_signed, AdditiveCharacter, KCoset, KElement};
use crate::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Default bound on the number of terms produced while normalizing.
pub const DEFAULT_TERM_CAP: usize = 100_000;

/// One summand `coeff · ψ(b·x) · Char(coset)(x)` of an unnormalized sum.
#[derive(Clone, Debug)]
pub struct SBTerm {
    pub coset: KCoset,
    pub twist: Option<(KElement, AdditiveCharacter)>,
    pub coeff: CycRat,
}

impl SBTerm {
    pub fn plain(coset: KCoset, coeff: CycRat) -> Self {
        SBTerm { coset, twist: None, coeff }
    }

    pub fn twisted(coset: KCoset, b: KElement, psi: AdditiveCharacter, coeff: CycRat) -> Self {
        SBTerm { coset, twist: Some((b, psi)), coeff }
    }
}

/// A Schwartz–Bruhat function on `K`, always held in canonical form: the
/// cosets are the maximal ones on which the function is a nonzero constant,
/// sorted by `(level, representative)`. Equality is pointwise equality.
#[derive(Clone, PartialEq, Eq)]
pub struct SBFunction {
    q: u32,
    mu: BigRational,
    terms: Vec<(KCoset, CycRat)>,
}

#[derive(Default)]
struct Node {
    val: Option<CycRat>,
    kids: BTreeMap<u32, Node>,
}

enum Region {
    Uniform(CycRat),
    Mixed(Vec<(KCoset, CycRat)>),
}

fn emit(node: &Node, coset: &KCoset, acc: &CycRat, q: u32) -> Region {
    let acc = match &node.val {
        Some(v) => acc.add(v),
        None => acc.clone(),
    };
    if node.kids.is_empty() {
        return Region::Uniform(acc);
    }
    let children = coset.children();
    let results: Vec<Region> = (0..q)
        .map(|c| match node.kids.get(&c) {
            Some(k) => emit(k, &children[c as usize], &acc, q),
            None => Region::Uniform(acc.clone()),
        })
        .collect();
    if let Region::Uniform(v0) = &results[0] {
        if results.iter().all(|r| matches!(r, Region::Uniform(v) if v == v0)) {
            return Region::Uniform(v0.clone());
        }
    }
    let mut out = Vec::new();
    for (child, r) in children.into_iter().zip(results) {
        match r {
            Region::Uniform(v) => {
                if !v.is_zero() {
                    out.push((child, v));
                }
            }
            Region::Mixed(v) => out.extend(v),
        }
    }
    Region::Mixed(out)
}

/// Merge complete sibling families with equal values until none remain.
fn merge_siblings(mut terms: Vec<(KCoset, CycRat)>, q: u32) -> Vec<(KCoset, CycRat)> {
    loop {
        let mut groups: BTreeMap<KCoset, Vec<usize>> = BTreeMap::new();
        for (i, (c, _)) in terms.iter().enumerate() {
            groups.entry(c.ancestor(c.level() - 1)).or_default().push(i);
        }
        let mut merged: Vec<(KCoset, CycRat)> = Vec::new();
        let mut used = vec![false; terms.len()];
        for (parent, idx) in groups {
            if idx.len() == q as usize && idx.iter().all(|&i| terms[i].1 == terms[idx[0]].1) {
                merged.push((parent, terms[idx[0]].1.clone()));
                for i in idx {
                    used[i] = true;
                }
            }
        }
        if merged.is_empty() {
            return terms;
        }
        terms = terms.into_iter().zip(used).filter(|(_, u)| !u).map(|(t, _)| t).chain(merged).collect();
    }
}

/// Canonical form of `Σ coeff·Char(coset)` with possibly overlapping cosets.
fn canonical_plain(q: u32, terms: Vec<(KCoset, CycRat)>, cap: usize) -> Result<Vec<(KCoset, CycRat)>, Error> {
    let terms: Vec<_> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    if terms.is_empty() {
        return Ok(Vec::new());
    }
    let l0 = terms.iter().map(|(c, _)| c.level()).min().unwrap();
    let mut roots: BTreeMap<KCoset, Node> = BTreeMap::new();
    for (coset, c) in &terms {
        let root = coset.ancestor(l0);
        let mut node = roots.entry(root).or_default();
        for k in l0..coset.level() {
            node = node.kids.entry(coset.rep().digit(k)).or_default();
        }
        node.val = Some(match node.val.take() {
            Some(v) => v.add(c),
            None => c.clone(),
        });
    }
    let zero = CycRat::zero();
    let mut out = Vec::new();
    for (root, node) in &roots {
        match emit(node, root, &zero, q) {
            Region::Uniform(v) => {
                if !v.is_zero() {
                    out.push((root.clone(), v));
                }
            }
            Region::Mixed(v) => out.extend(v),
        }
        if out.len() > cap {
            return Err(Error::TermCap(cap));
        }
    }
    let mut out = merge_siblings(out, q);
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// `μ·q^{-n}` as a cyclotomic scalar.
pub(crate) fn coset_measure(q: u32, mu: &BigRational, n: i64) -> CycRat {
    CycRat::from_rational(mu.clone()).mul(&CycRat::int_pow(q, -n))
}

impl SBFunction {
    pub fn zero(q: u32, mu: BigRational) -> Self {
        SBFunction { q, mu, terms: Vec::new() }
    }

    /// `Char(coset)`.
    pub fn indicator(coset: KCoset, mu: BigRational) -> Self {
        SBFunction { q: coset.q(), mu, terms: vec![(coset, CycRat::one())] }
    }

    /// `Char(π^n𝒪)`.
    pub fn char_ideal(q: u32, mu: BigRational, n: i64) -> Self {
        Self::indicator(KCoset::ideal(q, n), mu)
    }

    /// `Char(𝒪^×)`.
    pub fn char_units(q: u32, mu: BigRational) -> Self {
        Self::char_ideal(q, mu.clone(), 0).sub(&Self::char_ideal(q, mu, 1))
    }

    /// Canonical form of a plain sum of coset indicators.
    pub fn from_terms(q: u32, mu: BigRational, terms: Vec<(KCoset, CycRat)>) -> Self {
        let terms = canonical_plain(q, terms, usize::MAX).expect("no cap on plain sums");
        SBFunction { q, mu, terms }
    }

    /// Expand twists and bring a general sum to canonical form.
    pub fn normalize(q: u32, mu: BigRational, terms: Vec<SBTerm>) -> Result<Self, Error> {
        Self::normalize_with_cap(q, mu, terms, DEFAULT_TERM_CAP)
    }

    pub fn normalize_with_cap(q: u32, mu: BigRational, terms: Vec<SBTerm>, cap: usize) -> Result<Self, Error> {
        let mut plain: Vec<(KCoset, CycRat)> = Vec::new();
        for t in terms {
            if t.coeff.is_zero() {
                continue;
            }
            match &t.twist {
                Some((b, psi)) if !b.is_zero() => {
                    // ψ(b·) is constant on cosets of level ≥ d − w(b).
                    let m = psi.conductor() - b.valuation();
                    if t.coset.level() >= m {
                        plain.push((t.coset.clone(), t.coeff.mul(&psi.eval(&b.mul(t.coset.rep())))));
                    } else {
                        let count = (q as f64).powi((m - t.coset.level()) as i32);
                        if count + plain.len() as f64 > cap as f64 {
                            return Err(Error::TermCap(cap));
                        }
                        let mut cache: BTreeMap<u32, CycRat> = BTreeMap::new();
                        for sub in t.coset.refine_to(m) {
                            let e = psi.exponent(&b.mul(sub.rep()));
                            let val = cache.entry(e).or_insert_with(|| t.coeff.mul(&psi.eval(&b.mul(sub.rep())))).clone();
                            plain.push((sub, val));
                        }
                    }
                }
                _ => plain.push((t.coset.clone(), t.coeff.clone())),
            }
        }
        let terms = canonical_plain(q, plain, cap)?;
        Ok(SBFunction { q, mu, terms })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Haar measure `μ` of `𝒪`.
    pub fn mu(&self) -> &BigRational {
        &self.mu
    }

    /// Canonical terms `(coset, value)`.
    pub fn terms(&self) -> &[(KCoset, CycRat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest coset level in the canonical form (the support lies in `π^{min}𝒪`).
    pub fn min_level(&self) -> Option<i64> {
        self.terms.iter().map(|(c, _)| c.level()).min()
    }

    pub fn max_level(&self) -> Option<i64> {
        self.terms.iter().map(|(c, _)| c.level()).max()
    }

    /// Smallest `m` with the support inside `π^m𝒪`.
    pub fn support_valuation(&self) -> Option<i64> {
        self.terms.iter().map(|(c, _)| c.level().min(c.rep().valuation())).min()
    }

    pub fn eval(&self, x: &KElement) -> CycRat {
        for (c, v) in &self.terms {
            if c.contains(x) {
                return v.clone();
            }
        }
        CycRat::zero()
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.q, o.q, "functions over different fields");
        assert_eq!(self.mu, o.mu, "functions with different Haar normalizations");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let terms = self.terms.iter().chain(o.terms.iter()).cloned().collect();
        Self::from_terms(self.q, self.mu.clone(), terms)
    }

    pub fn neg(&self) -> Self {
        self.scale(&CycRat::from_int(-1))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &CycRat) -> Self {
        if c.is_zero() {
            return Self::zero(self.q, self.mu.clone());
        }
        SBFunction {
            q: self.q,
            mu: self.mu.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.mul(c))).collect(),
        }
    }

    /// Same function under a different Haar normalization.
    pub fn with_mu(&self, mu: BigRational) -> Self {
        SBFunction { mu, ..self.clone() }
    }

    /// `∫ g dx` with `vol(a + π^n𝒪) = μq^{-n}`.
    pub fn haar_integral(&self) -> CycRat {
        self.terms
            .iter()
            .fold(CycRat::zero(), |acc, (c, v)| acc.add(&v.mul(&coset_measure(self.q, &self.mu, c.level()))))
    }

    /// Parse `1*[1 + u^2*O] - 2*[u^-1 + u*O]`; coefficients are rationals.
    pub fn parse(q: u32, mu: BigRational, s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero(q, mu));
        }
        let mut terms = Vec::new();
        for (sign, tok) in split_signed(s) {
            let (coef, bracket) = match tok.find('[') {
                Some(i) => (tok[..i].trim().trim_end_matches('*').trim(), &tok[i..]),
                None => return Err(Error::Parse(format!("missing coset in `{}`", tok))),
            };
            let c = if coef.is_empty() { BigRational::one() } else { parse_rational(coef)? };
            let c = CycRat::from_rational(c * BigRational::from_integer(BigInt::from(sign)));
            terms.push((parse_coset(q, bracket)?, c));
        }
        Ok(Self::from_terms(q, mu, terms))
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim().trim_matches(|c| c == '(' || c == ')');
    let bad = || Error::Parse(format!("bad rational `{}`", s));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Parse `[a + u^n*O]`, `[u*O]` or `[O]`.
pub fn parse_coset(q: u32, s: &str) -> Result<KCoset, Error> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("bad coset `{}`", s)))?;
    let mut rep_terms: Vec<String> = Vec::new();
    let mut level = None;
    for (sign, tok) in split_signed(inner) {
        if tok.ends_with('O') {
            let m = tok.trim_end_matches('O').trim().trim_end_matches('*').trim();
            level = Some(match m {
                "" => 0,
                "u" => 1,
                _ => m
                    .strip_prefix("u^")
                    .and_then(|e| e.trim_matches(|c| c == '(' || c == ')').parse::<i64>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad ideal `{}`", tok)))?,
            });
        } else {
            rep_terms.push(format!("{}{}", if sign < 0 { "-" } else { "" }, tok));
        }
    }
    let level = level.ok_or_else(|| Error::Parse(format!("coset `{}` has no ideal", s)))?;
    let rep = if rep_terms.is_empty() {
        KElement::zero(q)
    } else {
        let joined = rep_terms.join(" + ").replace("+ -", "- ");
        let joined = joined.strip_prefix('-').map(|r| format!("0 - {}", r)).unwrap_or(joined);
        parse_kelement(q, &joined)?
    };
    Ok(KCoset::new(&rep, level))
}

impl fmt::Display for SBFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, v)) in self.terms.iter().enumerate() {
            let (neg, body) = match v.as_rational() {
                Some(r) if r < BigRational::zero() => (true, (-r).to_string()),
                Some(r) => (false, r.to_string()),
                None => (false, v.to_string()),
            };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{}*{}", body, c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SBFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
