//! Rings of sets generated by a d-class: disjoint refinement, dd and ddd
//! normal forms, ring operations and finitely additive measures.
//!
//! A d-class is a family of sets in which any two members that meet have
//! their intersection and union in the family. A dd set is `A \ ⊔ A_i` with
//! `A_i ⊆ A`; a ddd set is a finite disjoint union of dd sets.

mod instances;

pub use instances::{Interval, IntervalClass, KCosetClass};

use crate::exactnum::{CycRat, ZetaValue};
use num_rational::BigRational;
use std::fmt;

/// Atoms of a d-class, compared only through these predicates.
pub trait DClass {
    type Atom: Clone + fmt::Debug + PartialEq;
    type Point: Clone + fmt::Debug;

    fn meets(&self, a: &Self::Atom, b: &Self::Atom) -> bool;
    fn is_subset(&self, a: &Self::Atom, b: &Self::Atom) -> bool;
    /// `a ∩ b`, only called when `a` and `b` meet.
    fn intersection(&self, a: &Self::Atom, b: &Self::Atom) -> Self::Atom;
    /// `a ∪ b`, only called when `a` and `b` meet.
    fn union(&self, a: &Self::Atom, b: &Self::Atom) -> Self::Atom;
    fn contains(&self, a: &Self::Atom, p: &Self::Point) -> bool;
    /// Points such that membership in every set built from `atoms` is
    /// decided by membership at one of them.
    fn sample_points(&self, atoms: &[Self::Atom]) -> Vec<Self::Point>;
}

/// Replace a finite family of atoms by disjoint atoms with the same union,
/// each a union of members of the family.
pub fn refine_disjoint<C: DClass>(class: &C, atoms: &[C::Atom]) -> Vec<C::Atom> {
    let mut out: Vec<C::Atom> = Vec::new();
    for a in atoms {
        let mut cur = a.clone();
        while let Some(i) = out.iter().position(|b| class.meets(&cur, b)) {
            let b = out.swap_remove(i);
            cur = class.union(&cur, &b);
        }
        out.push(cur);
    }
    out
}

/// `outer \ ⊔ inner`.
#[derive(Clone, Debug, PartialEq)]
pub struct Dd<A> {
    pub outer: A,
    pub inner: Vec<A>,
}

impl<A: Clone + fmt::Debug + PartialEq> Dd<A> {
    /// Clip `inner` to `outer` and refine it; `None` if it swallows `outer`.
    pub fn new<C: DClass<Atom = A>>(class: &C, outer: A, inner: &[A]) -> Option<Self> {
        let clipped: Vec<A> = inner
            .iter()
            .filter(|a| class.meets(a, &outer))
            .map(|a| class.intersection(a, &outer))
            .collect();
        let inner = refine_disjoint(class, &clipped);
        if inner.iter().any(|a| class.is_subset(&outer, a)) {
            return None;
        }
        Some(Dd { outer, inner })
    }

    pub fn contains<C: DClass<Atom = A>>(&self, class: &C, p: &C::Point) -> bool {
        class.contains(&self.outer, p) && !self.inner.iter().any(|a| class.contains(a, p))
    }

    fn atoms(&self) -> impl Iterator<Item = &A> {
        std::iter::once(&self.outer).chain(self.inner.iter())
    }
}

/// `(A \ ⊔A_i) ∩ (B \ ⊔B_j) = (A ∩ B) \ (⊔A_i ∪ ⊔B_j)`.
pub fn dd_intersection<C: DClass>(class: &C, x: &Dd<C::Atom>, y: &Dd<C::Atom>) -> Option<Dd<C::Atom>> {
    if !class.meets(&x.outer, &y.outer) {
        return None;
    }
    let c = class.intersection(&x.outer, &y.outer);
    let inner: Vec<C::Atom> = x.inner.iter().chain(y.inner.iter()).cloned().collect();
    Dd::new(class, c, &inner)
}

/// `(A \ A₀) \ (B \ ⊔B_j) = (A \ (B ∪ A₀)) ⊔ ⊔_j ((B_j ∩ A) \ A₀)`.
pub fn dd_difference<C: DClass>(class: &C, x: &Dd<C::Atom>, y: &Dd<C::Atom>) -> Vec<Dd<C::Atom>> {
    if !class.meets(&x.outer, &y.outer) {
        return vec![x.clone()];
    }
    let mut out = Vec::new();
    let mut first: Vec<C::Atom> = x.inner.clone();
    first.push(y.outer.clone());
    out.extend(Dd::new(class, x.outer.clone(), &first));
    for bj in &y.inner {
        if class.meets(bj, &x.outer) {
            out.extend(Dd::new(class, class.intersection(bj, &x.outer), &x.inner));
        }
    }
    out
}

/// A finite disjoint union of dd sets.
#[derive(Clone, Debug, PartialEq)]
pub struct DddSet<A> {
    parts: Vec<Dd<A>>,
}

impl<A: Clone + fmt::Debug + PartialEq> DddSet<A> {
    pub fn empty() -> Self {
        DddSet { parts: Vec::new() }
    }

    pub fn atom(a: A) -> Self {
        DddSet { parts: vec![Dd { outer: a, inner: Vec::new() }] }
    }

    pub fn from_dd(d: Dd<A>) -> Self {
        DddSet { parts: vec![d] }
    }

    pub fn parts(&self) -> &[Dd<A>] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Every atom appearing in the normal form.
    pub fn atoms(&self) -> Vec<A> {
        self.parts.iter().flat_map(|d| d.atoms().cloned()).collect()
    }

    pub fn contains<C: DClass<Atom = A>>(&self, class: &C, p: &C::Point) -> bool {
        self.parts.iter().any(|d| d.contains(class, p))
    }

    /// Structural check of the normal form: inner atoms inside their outer
    /// atom and pairwise disjoint, dd components pairwise disjoint on
    /// `points`.
    pub fn is_valid<C: DClass<Atom = A>>(&self, class: &C, points: &[C::Point]) -> bool {
        for d in &self.parts {
            if d.inner.iter().any(|a| !class.is_subset(a, &d.outer) || class.is_subset(&d.outer, a)) {
                return false;
            }
            for (i, a) in d.inner.iter().enumerate() {
                if d.inner[i + 1..].iter().any(|b| class.meets(a, b)) {
                    return false;
                }
            }
        }
        points
            .iter()
            .all(|p| self.parts.iter().filter(|d| d.contains(class, p)).count() <= 1)
    }

    pub fn intersection<C: DClass<Atom = A>>(&self, class: &C, other: &Self) -> Self {
        let mut parts = Vec::new();
        for d in &self.parts {
            for e in &other.parts {
                parts.extend(dd_intersection(class, d, e));
            }
        }
        DddSet { parts }
    }

    pub fn difference<C: DClass<Atom = A>>(&self, class: &C, other: &Self) -> Self {
        let mut cur = self.parts.clone();
        for e in &other.parts {
            cur = cur.iter().flat_map(|d| dd_difference(class, d, e)).collect();
        }
        DddSet { parts: cur }
    }

    /// The three disjoint pieces `(x ∩ y, x \ y, y \ x)` of `x ∪ y`.
    pub fn union_split<C: DClass<Atom = A>>(&self, class: &C, other: &Self) -> (Self, Self, Self) {
        (self.intersection(class, other), self.difference(class, other), other.difference(class, self))
    }

    pub fn union<C: DClass<Atom = A>>(&self, class: &C, other: &Self) -> Self {
        let (w1, w2, w3) = self.union_split(class, other);
        let mut parts = w1.parts;
        parts.extend(w2.parts);
        parts.extend(w3.parts);
        DddSet { parts }
    }

    /// `Σ_dd (m(A) − Σ m(A_i))`.
    pub fn measure<M: SignedValue>(&self, zero: M, m: impl Fn(&A) -> M) -> M {
        self.parts.iter().fold(zero, |acc, d| {
            let inner = d.inner.iter().fold(m(&d.outer), |a, x| a.minus(&m(x)));
            acc.plus(&inner)
        })
    }
}

/// Values of a finitely additive measure.
pub trait SignedValue: Clone {
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
}

macro_rules! signed_std {
    ($($t:ty),*) => {$(
        impl SignedValue for $t {
            fn plus(&self, o: &Self) -> Self {
                self.clone() + o.clone()
            }
            fn minus(&self, o: &Self) -> Self {
                self.clone() - o.clone()
            }
        }
    )*};
}
signed_std!(i64, f64, BigRational);

impl SignedValue for CycRat {
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
}

impl SignedValue for ZetaValue {
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
}

/// Set expressions over atoms, for evaluating membership directly.
#[derive(Clone, Debug)]
pub enum SetExpr<A> {
    Atom(A),
    Union(Box<SetExpr<A>>, Box<SetExpr<A>>),
    Diff(Box<SetExpr<A>>, Box<SetExpr<A>>),
    Inter(Box<SetExpr<A>>, Box<SetExpr<A>>),
}

impl<A: Clone + fmt::Debug + PartialEq> SetExpr<A> {
    pub fn contains<C: DClass<Atom = A>>(&self, class: &C, p: &C::Point) -> bool {
        match self {
            SetExpr::Atom(a) => class.contains(a, p),
            SetExpr::Union(x, y) => x.contains(class, p) || y.contains(class, p),
            SetExpr::Diff(x, y) => x.contains(class, p) && !y.contains(class, p),
            SetExpr::Inter(x, y) => x.contains(class, p) && y.contains(class, p),
        }
    }

    pub fn normalize<C: DClass<Atom = A>>(&self, class: &C) -> DddSet<A> {
        match self {
            SetExpr::Atom(a) => DddSet::atom(a.clone()),
            SetExpr::Union(x, y) => x.normalize(class).union(class, &y.normalize(class)),
            SetExpr::Diff(x, y) => x.normalize(class).difference(class, &y.normalize(class)),
            SetExpr::Inter(x, y) => x.normalize(class).intersection(class, &y.normalize(class)),
        }
    }

    pub fn atoms(&self) -> Vec<A> {
        match self {
            SetExpr::Atom(a) => vec![a.clone()],
            SetExpr::Union(x, y) | SetExpr::Diff(x, y) | SetExpr::Inter(x, y) => {
                let mut v = x.atoms();
                v.extend(y.atoms());
                v
            }
        }
    }
}
