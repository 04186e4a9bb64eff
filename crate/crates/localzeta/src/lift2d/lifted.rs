//! Lifted functions `g^{a,γ}ψ_b` on `F = K((t))` and their integral.

use super::felement::{parse_felement, FElement};
use crate::exactnum::{CycRat, ZetaValue};
use crate::localfield::{inv_mod, split_signed, AdditiveCharacter, KCoset, KElement};
use crate::schwartz::parse_rational;
use crate::schwartz::SBFunction;
use crate::Error;
use num_rational::BigRational;
use std::collections::BTreeMap;
use std::fmt;

/// A Haar integrable function on `K`: a Schwartz–Bruhat part plus finitely
/// many point values, which are null for the Haar measure.
#[derive(Clone, PartialEq, Eq)]
pub struct ResidueFn {
    sb: SBFunction,
    points: BTreeMap<KElement, CycRat>,
}

impl ResidueFn {
    pub fn zero(q: u32, mu: BigRational) -> Self {
        Self::from_sb(SBFunction::zero(q, mu))
    }

    pub fn from_sb(sb: SBFunction) -> Self {
        ResidueFn { sb, points: BTreeMap::new() }
    }

    /// `c·Char({x})`.
    pub fn point(x: &KElement, c: CycRat, mu: BigRational) -> Self {
        let mut points = BTreeMap::new();
        if !c.is_zero() {
            points.insert(x.clone(), c);
        }
        ResidueFn { sb: SBFunction::zero(x.q(), mu), points }
    }

    pub fn q(&self) -> u32 {
        self.sb.q()
    }

    pub fn mu(&self) -> &BigRational {
        self.sb.mu()
    }

    pub fn sb(&self) -> &SBFunction {
        &self.sb
    }

    pub fn points(&self) -> &BTreeMap<KElement, CycRat> {
        &self.points
    }

    pub fn is_zero(&self) -> bool {
        self.sb.is_zero() && self.points.is_empty()
    }

    pub fn eval(&self, x: &KElement) -> CycRat {
        let p = self.points.get(x).cloned().unwrap_or_else(CycRat::zero);
        self.sb.eval(x).add(&p)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut points = self.points.clone();
        for (x, c) in &o.points {
            let v = points.get(x).map(|v| v.add(c)).unwrap_or_else(|| c.clone());
            if v.is_zero() {
                points.remove(x);
            } else {
                points.insert(x.clone(), v);
            }
        }
        ResidueFn { sb: self.sb.add(&o.sb), points }
    }

    pub fn scale(&self, c: &CycRat) -> Self {
        if c.is_zero() {
            return Self::zero(self.q(), self.mu().clone());
        }
        ResidueFn { sb: self.sb.scale(c), points: self.points.iter().map(|(x, v)| (x.clone(), v.mul(c))).collect() }
    }

    /// `x ↦ g(x + τ)`.
    pub fn translate(&self, tau: &KElement) -> Self {
        ResidueFn {
            sb: self.sb.translate(tau),
            points: self.points.iter().map(|(x, v)| (x.sub(tau), v.clone())).collect(),
        }
    }

    /// `x ↦ g(c·u^m·x)` for `c ∈ 𝔽_q^×`.
    fn dilate_monomial(&self, c: u32, m: i64) -> Result<Self, Error> {
        let q = self.q();
        let alpha = KElement::digit_at(q, c as i64, m);
        let inv = KElement::digit_at(q, inv_mod(c as i64, q as i64), -m);
        Ok(ResidueFn {
            sb: self.sb.dilate(&alpha)?,
            points: self.points.iter().map(|(x, v)| (x.mul(&inv), v.clone())).collect(),
        })
    }

    /// `x ↦ ψ(bx)·g(x)`.
    pub fn twist(&self, b: &KElement, psi: &AdditiveCharacter) -> Result<Self, Error> {
        Ok(ResidueFn {
            sb: self.sb.twist(b, psi)?,
            points: self.points.iter().map(|(x, v)| (x.clone(), v.mul(&psi.eval(&x.mul(b))))).collect(),
        })
    }

    pub fn integral(&self) -> CycRat {
        self.sb.haar_integral()
    }

    /// The Fourier transform; point values are null and drop out.
    pub fn fourier(&self, psi: &AdditiveCharacter) -> Result<Self, Error> {
        Ok(Self::from_sb(self.sb.fourier(psi)?))
    }

    /// `|g + c| − |c|`, requiring rational absolute values.
    fn abs_shifted(&self, c: &CycRat) -> Result<Self, Error> {
        let abs = |v: &CycRat| -> Result<CycRat, Error> {
            v.abs_rational()
                .map(CycRat::from_rational)
                .ok_or_else(|| Error::Unsupported(format!("absolute value of {} is not rational", v)))
        };
        let ac = abs(c)?;
        let mut terms = Vec::new();
        for (coset, v) in self.sb.terms() {
            terms.push((coset.clone(), abs(&v.add(c))?.sub(&ac)));
        }
        let sb = SBFunction::from_terms(self.q(), self.mu().clone(), terms);
        let mut points = BTreeMap::new();
        for (x, v) in &self.points {
            let base = self.sb.eval(x).add(c);
            let d = abs(&base.add(v))?.sub(&abs(&base)?);
            if !d.is_zero() {
                points.insert(x.clone(), d);
            }
        }
        Ok(ResidueFn { sb, points })
    }
}

impl fmt::Display for ResidueFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sb)?;
        for (x, v) in &self.points {
            write!(f, " + {}*{{{}}}", v, x)?;
        }
        Ok(())
    }
}

impl fmt::Debug for ResidueFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// The good character `Σ a_n tⁿ ↦ ψ_K(a₀)` of conductor 1; its residue
/// character is `ψ_K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoodCharacter {
    pub base: AdditiveCharacter,
}

impl GoodCharacter {
    pub fn new(base: AdditiveCharacter) -> Self {
        GoodCharacter { base }
    }

    pub fn eval(&self, x: &FElement) -> CycRat {
        self.base.eval(&x.coeff(0))
    }

    /// Conductor of `ψ_a`: `1 − ν(a)`.
    pub fn twisted_conductor(&self, a: &FElement) -> i64 {
        1 - a.valuation()
    }
}

/// `coeff · g^{a,γ} · ψ_b`.
#[derive(Clone, PartialEq, Eq)]
pub struct LiftTerm {
    pub g: ResidueFn,
    pub a: FElement,
    pub gamma: i64,
    pub b: Option<FElement>,
    pub coeff: ZetaValue,
}

impl LiftTerm {
    pub fn new(g: ResidueFn, a: FElement, gamma: i64) -> Self {
        let q = g.q();
        LiftTerm { g, a, gamma, b: None, coeff: ZetaValue::one(q) }
    }

    pub fn with_twist(mut self, b: FElement) -> Self {
        self.b = if b.is_zero() { None } else { Some(b) };
        self
    }

    pub fn with_coeff(mut self, c: ZetaValue) -> Self {
        self.coeff = c;
        self
    }

    /// Whether `x ∈ a + t^γ𝒪_F`.
    pub fn in_support(&self, x: &FElement) -> bool {
        x.sub(&self.a).valuation() >= self.gamma
    }

    pub fn eval(&self, x: &FElement, psi: &GoodCharacter) -> ZetaValue {
        let q = self.g.q();
        if !self.in_support(x) {
            return ZetaValue::zero(q);
        }
        let mut v = self.g.eval(&x.sub(&self.a).coeff(self.gamma));
        if let Some(b) = &self.b {
            v = v.mul(&psi.eval(&b.mul(x)));
        }
        self.coeff.scale(&v)
    }

    /// `∫^F` of this term: `γ > −ν(b)` gives `ψ(ab)∫g X^γ`, `γ = −ν(b)` gives
    /// `ψ(ab)ĝ(η(b))X^γ`, and `γ < −ν(b)` gives 0.
    pub fn integral(&self, psi: &GoodCharacter) -> Result<ZetaValue, Error> {
        let q = self.g.q();
        let base = match &self.b {
            None => self.g.integral(),
            Some(b) => {
                let nb = b.valuation();
                let phase = psi.eval(&self.a.mul(b));
                if self.gamma > -nb {
                    phase.mul(&self.g.integral())
                } else if self.gamma == -nb {
                    phase.mul(&self.g.twist(&b.eta(), &psi.base)?.integral())
                } else {
                    CycRat::zero()
                }
            }
        };
        Ok(self.coeff.scale(&base).mul(&ZetaValue::x_pow(q, self.gamma)))
    }

    /// Same function with `a` reduced below `t^γ` and `ψ_b` absorbed into
    /// `g` whenever it is a residue character on the support.
    pub fn canonical(&self, psi: &GoodCharacter) -> Result<LiftTerm, Error> {
        let q = self.g.q();
        let a = self.a.truncate(self.gamma);
        let mut g = self.g.translate(&self.a.coeff(self.gamma).neg());
        let mut b = self.b.clone();
        let mut coeff = self.coeff.clone();
        if let Some(bb) = &self.b {
            let nb = bb.valuation();
            if self.gamma >= -nb {
                g = g.scale(&psi.eval(&a.mul(bb)));
                if self.gamma == -nb {
                    g = g.twist(&bb.eta(), &psi.base)?;
                }
                b = None;
            }
        }
        if let Some((c, t_exp, x_exp)) = monomial_coeff(&coeff) {
            g = g.scale(&c);
            coeff = ZetaValue::monomial(q, CycRat::one(), t_exp, x_exp);
        }
        Ok(LiftTerm { g, a, gamma: self.gamma, b, coeff })
    }
}

/// `c·T^j·X^k` as `(c, j, k)`.
fn monomial_coeff(v: &ZetaValue) -> Option<(CycRat, i64, i64)> {
    if v.denominator().degree() != Some(0) || v.numerator().len() != 1 {
        return None;
    }
    let (&(x, t), c) = v.numerator().iter().next().unwrap();
    Some((c.clone(), t, x))
}

impl fmt::Debug for LiftTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) * lift({}; {}; {})", self.coeff, self.g, self.a, self.gamma)?;
        if let Some(b) = &self.b {
            write!(f, " * psi({})", b)?;
        }
        Ok(())
    }
}

/// A finite sum of lifted terms, an element of `𝓛(F, ψ)` with
/// Schwartz–Bruhat residue data.
#[derive(Clone, Debug)]
pub struct LiftedFn {
    q: u32,
    mu: BigRational,
    terms: Vec<LiftTerm>,
}

impl LiftedFn {
    pub fn zero(q: u32, mu: BigRational) -> Self {
        LiftedFn { q, mu, terms: Vec::new() }
    }

    pub fn from_terms(q: u32, mu: BigRational, terms: Vec<LiftTerm>) -> Self {
        LiftedFn { q, mu, terms }
    }

    /// `g^{a,γ}`.
    pub fn lift(g: &SBFunction, a: &FElement, gamma: i64) -> Self {
        Self::from_terms(g.q(), g.mu().clone(), vec![LiftTerm::new(ResidueFn::from_sb(g.clone()), a.clone(), gamma)])
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn mu(&self) -> &BigRational {
        &self.mu
    }

    pub fn terms(&self) -> &[LiftTerm] {
        &self.terms
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(o.terms.iter().cloned());
        LiftedFn { q: self.q, mu: self.mu.clone(), terms }
    }

    pub fn scale(&self, c: &ZetaValue) -> Self {
        let terms = self.terms.iter().map(|t| t.clone().with_coeff(t.coeff.mul(c))).collect();
        LiftedFn { q: self.q, mu: self.mu.clone(), terms }
    }

    pub fn neg(&self) -> Self {
        self.scale(&ZetaValue::constant(self.q, CycRat::from_int(-1)))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Multiply every term by `ψ_b`.
    pub fn twist(&self, b: &FElement) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let nb = match &t.b {
                    Some(x) => x.add(b),
                    None => b.clone(),
                };
                t.clone().with_twist(nb)
            })
            .collect();
        LiftedFn { q: self.q, mu: self.mu.clone(), terms }
    }

    pub fn eval(&self, x: &FElement, psi: &GoodCharacter) -> ZetaValue {
        self.terms.iter().fold(ZetaValue::zero(self.q), |acc, t| acc.add(&t.eval(x, psi)))
    }

    /// `∫^F f(x) dx`, extended to character twists.
    pub fn integrate(&self, psi: &GoodCharacter) -> Result<ZetaValue, Error> {
        let mut acc = ZetaValue::zero(self.q);
        for t in &self.terms {
            acc = acc.add(&t.integral(psi)?);
        }
        Ok(acc)
    }

    /// Group terms on the same translated ideal, twist and coefficient and
    /// drop those summing to zero. For untwisted functions the result is
    /// empty exactly when the function is zero.
    pub fn canonical(&self, psi: &GoodCharacter) -> Result<LiftedFn, Error> {
        let mut groups: Vec<LiftTerm> = Vec::new();
        for t in &self.terms {
            let c = t.canonical(psi)?;
            match groups
                .iter_mut()
                .find(|x| x.a == c.a && x.gamma == c.gamma && x.b == c.b && x.coeff == c.coeff)
            {
                Some(x) => x.g = x.g.add(&c.g),
                None => groups.push(c),
            }
        }
        groups.retain(|t| !t.g.is_zero() && !t.coeff.is_zero());
        groups.sort_by(|x, y| (x.gamma, &x.a, &x.b).cmp(&(y.gamma, &y.a, &y.b)));
        Ok(LiftedFn { q: self.q, mu: self.mu.clone(), terms: groups })
    }

    pub fn is_zero(&self, psi: &GoodCharacter) -> Result<bool, Error> {
        Ok(self.canonical(psi)?.terms.is_empty())
    }

    /// `x ↦ f(x + τ)`: `g^{a,γ}ψ_b ↦ ψ(bτ)·g^{a−τ,γ}ψ_b`.
    pub fn translate(&self, tau: &FElement, psi: &GoodCharacter) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut n = t.clone();
                n.a = t.a.sub(tau);
                if let Some(b) = &t.b {
                    n.coeff = t.coeff.scale(&psi.eval(&b.mul(tau)));
                }
                n
            })
            .collect();
        LiftedFn { q: self.q, mu: self.mu.clone(), terms }
    }

    /// `x ↦ f(αx)` for a monomial `α = c·u^m·t^k`:
    /// `g^{a,γ}(α·) = (g(η(α)·))^{α⁻¹a, γ−ν(α)}` and `ψ_b(α·) = ψ_{αb}`.
    pub fn scale_by(&self, alpha: &FElement) -> Result<Self, Error> {
        let (c, m, k) = alpha
            .as_monomial()
            .ok_or_else(|| if alpha.is_zero() { Error::ZeroArgument } else { Error::Unsupported("scaling by a non-monomial".into()) })?;
        let q = self.q;
        let inv = FElement::monomial(&KElement::digit_at(q, inv_mod(c as i64, q as i64), -m), -k);
        let mut terms = Vec::new();
        for t in &self.terms {
            let mut n = t.clone();
            n.g = t.g.dilate_monomial(c, m)?;
            n.a = inv.mul(&t.a);
            n.gamma = t.gamma - k;
            n.b = t.b.as_ref().map(|b| alpha.mul(b));
            terms.push(n);
        }
        Ok(LiftedFn { q, mu: self.mu.clone(), terms })
    }

    /// `x ↦ f(−x)`.
    pub fn reflect(&self) -> Self {
        let m1 = FElement::from_k(&KElement::constant(self.q, -1));
        self.scale_by(&m1).expect("−1 is a monomial")
    }

    /// `f̂(x) = ∫^F f(y)ψ(xy)dy`, termwise `ψ(ab)·ĝ^{−b,−γ}·ψ_a·X^γ`.
    pub fn fourier(&self, psi: &GoodCharacter) -> Result<Self, Error> {
        let q = self.q;
        let mut terms = Vec::new();
        for t in &self.terms {
            let b = t.b.clone().unwrap_or_else(|| FElement::zero(q));
            let phase = psi.eval(&t.a.mul(&b));
            let gh = t.g.fourier(&psi.base)?;
            let coeff = t.coeff.scale(&phase).mul(&ZetaValue::x_pow(q, t.gamma));
            terms.push(LiftTerm::new(gh, b.neg(), -t.gamma).with_twist(t.a.clone()).with_coeff(coeff));
        }
        Ok(LiftedFn { q, mu: self.mu.clone(), terms })
    }

    /// The pointwise absolute value of an untwisted complex-valued function,
    /// built from `|f| = |Σ_{i<n} f_i| + (|g_n + c| − |c|)^{J_n}` with
    /// `c = Σ_{i<n} f_i(a_n)`, terms ordered by height.
    pub fn abs(&self, psi: &GoodCharacter) -> Result<Self, Error> {
        if self.terms.iter().any(|t| t.b.is_some()) {
            return Err(Error::TwistedAbs);
        }
        let canon = self.canonical(psi)?;
        let mut parts: Vec<LiftTerm> = Vec::new();
        for t in &canon.terms {
            let c = t
                .coeff
                .as_constant()
                .ok_or_else(|| Error::Unsupported("absolute value of a non-constant coefficient".into()))?;
            parts.push(LiftTerm::new(t.g.scale(&c), t.a.clone(), t.gamma));
        }
        let mut out = Vec::new();
        for (i, t) in parts.iter().enumerate() {
            let c = parts[..i].iter().fold(CycRat::zero(), |acc, s| {
                acc.add(&s.eval(&t.a, psi).as_constant().expect("constant"))
            });
            out.push(LiftTerm::new(t.g.abs_shifted(&c)?, t.a.clone(), t.gamma));
        }
        LiftedFn { q: self.q, mu: self.mu.clone(), terms: out }.canonical(psi)
    }
}

/// `λ = μ²q^{−d}` in `f̂̂(x) = λf(−x)`.
pub fn double_transform_constant(q: u32, mu: &BigRational, psi: &GoodCharacter) -> CycRat {
    let mu = CycRat::from_rational(mu.clone());
    mu.mul(&mu).mul(&CycRat::int_pow(q, -psi.base.conductor()))
}

/// `Char(S)` lifted at `a, γ`.
pub fn lift_char(s: &KCoset, a: &FElement, gamma: i64, mu: BigRational) -> LiftedFn {
    LiftedFn::lift(&SBFunction::indicator(s.clone(), mu), a, gamma)
}

fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(s[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

/// Parse `2 * lift([O]; u^-1 + t; 1) * psi(t^-1) - X^2 * lift(...)`.
/// Coefficients are rationals and powers `X^k`.
pub fn parse_lifted(q: u32, mu: BigRational, s: &str) -> Result<LiftedFn, Error> {
    let s = s.trim();
    if s == "0" {
        return Ok(LiftedFn::zero(q, mu));
    }
    let mut terms = Vec::new();
    for (sign, tok) in split_signed(s) {
        let mut coeff = ZetaValue::constant(q, CycRat::from_int(sign));
        let mut lift: Option<(SBFunction, FElement, i64)> = None;
        let mut b: Option<FElement> = None;
        for factor in split_top(tok, '*') {
            if let Some(body) = factor.strip_prefix("lift(").and_then(|x| x.strip_suffix(')')) {
                let parts = split_top(body, ';');
                if parts.len() != 3 {
                    return Err(Error::Parse(format!("lift needs `g; a; gamma`, got `{}`", factor)));
                }
                let g = SBFunction::parse(q, mu.clone(), parts[0])?;
                let a = parse_felement(q, parts[1])?;
                let gamma = parts[2].parse().map_err(|_| Error::Parse(format!("bad height `{}`", parts[2])))?;
                lift = Some((g, a, gamma));
            } else if let Some(body) = factor.strip_prefix("psi(").and_then(|x| x.strip_suffix(')')) {
                b = Some(parse_felement(q, body)?);
            } else if let Some(e) = factor.strip_prefix("X^") {
                let e: i64 = e
                    .trim_matches(|c| c == '(' || c == ')')
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad X power `{}`", factor)))?;
                coeff = coeff.mul(&ZetaValue::x_pow(q, e));
            } else if factor == "X" {
                coeff = coeff.mul(&ZetaValue::x_pow(q, 1));
            } else {
                coeff = coeff.scale(&CycRat::from_rational(parse_rational(factor)?));
            }
        }
        let (g, a, gamma) = lift.ok_or_else(|| Error::Parse(format!("term `{}` has no lift", tok)))?;
        let mut term = LiftTerm::new(ResidueFn::from_sb(g), a, gamma).with_coeff(coeff);
        if let Some(b) = b {
            term = term.with_twist(b);
        }
        terms.push(term);
    }
    Ok(LiftedFn::from_terms(q, mu, terms))
}
