//! Distinguished subsets `a + t^γρ⁻¹(S)` of `F` and the measure `μ^F`.

use super::felement::FElement;
use crate::exactnum::{CycRat, ZetaValue};
use crate::localfield::{KCoset, KElement};
use crate::setring::{DClass, DddSet, KCosetClass};
use num_rational::BigRational;

/// The residue set `S ⊆ K` of a distinguished atom.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ResidueSet {
    Coset(KCoset),
    /// A single point: a null atom of measure zero.
    Point(KElement),
}

impl ResidueSet {
    pub fn contains(&self, x: &KElement) -> bool {
        match self {
            ResidueSet::Coset(c) => c.contains(x),
            ResidueSet::Point(p) => p == x,
        }
    }

    fn meets(&self, o: &Self) -> bool {
        match (self, o) {
            (ResidueSet::Coset(a), ResidueSet::Coset(b)) => a.meets(b),
            (ResidueSet::Coset(a), ResidueSet::Point(p)) | (ResidueSet::Point(p), ResidueSet::Coset(a)) => a.contains(p),
            (ResidueSet::Point(p), ResidueSet::Point(r)) => p == r,
        }
    }

    fn is_subset(&self, o: &Self) -> bool {
        match (self, o) {
            (ResidueSet::Coset(a), ResidueSet::Coset(b)) => a.is_subset_of(b),
            (ResidueSet::Point(p), s) => s.contains(p),
            (ResidueSet::Coset(_), ResidueSet::Point(_)) => false,
        }
    }
}

/// `a + t^γ·ρ⁻¹(S)`: the `x` with `ν(x − a) ≥ γ` and `(x − a)_γ ∈ S`.
/// `a` carries only exponents below `γ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FAtom {
    a: FElement,
    gamma: i64,
    s: ResidueSet,
}

impl FAtom {
    pub fn new(a: &FElement, gamma: i64, s: ResidueSet) -> Self {
        let s = match s {
            ResidueSet::Coset(c) => ResidueSet::Coset(c.translate(&a.coeff(gamma).neg())),
            ResidueSet::Point(p) => ResidueSet::Point(p.add(&a.coeff(gamma))),
        };
        FAtom { a: a.truncate(gamma), gamma, s }
    }

    pub fn coset(a: &FElement, gamma: i64, s: KCoset) -> Self {
        Self::new(a, gamma, ResidueSet::Coset(s))
    }

    /// `t^γ𝒪_F = t^{γ−1}ρ⁻¹({0})`, a null atom.
    pub fn ideal(q: u32, gamma: i64) -> Self {
        Self::new(&FElement::zero(q), gamma - 1, ResidueSet::Point(KElement::zero(q)))
    }

    pub fn a(&self) -> &FElement {
        &self.a
    }

    pub fn gamma(&self) -> i64 {
        self.gamma
    }

    pub fn residue_set(&self) -> &ResidueSet {
        &self.s
    }

    pub fn contains(&self, x: &FElement) -> bool {
        let d = x.sub(&self.a);
        d.valuation() >= self.gamma && self.s.contains(&d.coeff(self.gamma))
    }

    /// `x ↦ x + τ`.
    pub fn translate(&self, tau: &FElement) -> Self {
        Self::new(&self.a.add(tau), self.gamma, self.s.clone())
    }

    /// `μ(S)X^γ`; zero on null atoms.
    pub fn measure(&self, mu: &BigRational) -> ZetaValue {
        let q = self.a.q();
        match &self.s {
            ResidueSet::Coset(c) => ZetaValue::monomial(
                q,
                CycRat::from_rational(mu.clone()).mul(&CycRat::int_pow(q, -c.level())),
                0,
                self.gamma,
            ),
            ResidueSet::Point(_) => ZetaValue::zero(q),
        }
    }
}

/// The d-class of distinguished atoms in `F`: two atoms are nested or
/// disjoint.
#[derive(Clone, Copy, Debug)]
pub struct FAtomClass {
    pub q: u32,
}

impl FAtomClass {
    fn ordered<'a>(a: &'a FAtom, b: &'a FAtom) -> (&'a FAtom, &'a FAtom) {
        if a.gamma <= b.gamma {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// Whether the finer atom `b` (`γ_b > γ_a`) lies in `a`.
    fn coarse_contains(a: &FAtom, b: &FAtom) -> bool {
        b.a.truncate(a.gamma) == a.a && a.s.contains(&b.a.coeff(a.gamma))
    }
}

impl DClass for FAtomClass {
    type Atom = FAtom;
    type Point = FElement;

    fn meets(&self, a: &FAtom, b: &FAtom) -> bool {
        let (x, y) = Self::ordered(a, b);
        if x.gamma == y.gamma {
            x.a == y.a && x.s.meets(&y.s)
        } else {
            Self::coarse_contains(x, y)
        }
    }

    fn is_subset(&self, a: &FAtom, b: &FAtom) -> bool {
        match a.gamma.cmp(&b.gamma) {
            std::cmp::Ordering::Equal => a.a == b.a && a.s.is_subset(&b.s),
            std::cmp::Ordering::Greater => Self::coarse_contains(b, a),
            std::cmp::Ordering::Less => false,
        }
    }

    fn intersection(&self, a: &FAtom, b: &FAtom) -> FAtom {
        if self.is_subset(a, b) {
            a.clone()
        } else {
            b.clone()
        }
    }

    fn union(&self, a: &FAtom, b: &FAtom) -> FAtom {
        if self.is_subset(a, b) {
            b.clone()
        } else {
            a.clone()
        }
    }

    fn contains(&self, a: &FAtom, p: &FElement) -> bool {
        a.contains(p)
    }

    /// Depth-first over `t`-exponents: at each exponent try the values that
    /// separate the atoms still compatible with the prefix, plus one value
    /// avoiding all of them.
    fn sample_points(&self, atoms: &[FAtom]) -> Vec<FElement> {
        let q = self.q;
        let lo = atoms
            .iter()
            .map(|x| x.a.valuation().min(x.gamma))
            .min()
            .unwrap_or(0);
        let mut out = Vec::new();
        let mut stack = vec![(FElement::zero(q), lo)];
        while let Some((prefix, e)) = stack.pop() {
            let live: Vec<&FAtom> = atoms.iter().filter(|x| x.gamma >= e && x.a.truncate(e) == prefix).collect();
            if live.is_empty() {
                out.push(prefix);
                continue;
            }
            let mut vals: Vec<KElement> = Vec::new();
            let mut cosets = Vec::new();
            for x in &live {
                if x.gamma > e {
                    vals.push(x.a.coeff(e));
                } else {
                    match &x.s {
                        ResidueSet::Coset(c) => cosets.push(c.clone()),
                        ResidueSet::Point(p) => vals.push(p.clone()),
                    }
                }
            }
            let mut floor = -1;
            for v in &vals {
                if !v.is_zero() {
                    floor = floor.min(v.valuation());
                }
            }
            for c in &cosets {
                floor = floor.min(c.level()).min(c.rep().valuation());
            }
            if !cosets.is_empty() {
                let fine = cosets.iter().map(|c| c.level()).max().unwrap();
                for v in &vals {
                    cosets.push(KCoset::new(v, fine));
                }
                vals.extend(KCosetClass { q }.sample_points(&cosets));
            }
            vals.push(KElement::digit_at(q, 1, floor - 1));
            vals.sort();
            vals.dedup();
            for v in vals {
                stack.push((prefix.add(&FElement::monomial(&v, e)), e + 1));
            }
        }
        out
    }
}

/// `μ^F(W)` for `W` in the ring generated by distinguished atoms.
pub fn measure_f(q: u32, w: &DddSet<FAtom>, mu: &BigRational) -> ZetaValue {
    w.measure(ZetaValue::zero(q), |a| a.measure(mu))
}

/// `a + t^γρ⁻¹(S)` for a ddd set `S` of cosets in `K`.
pub fn distinguished(a: &FElement, gamma: i64, s: &DddSet<KCoset>) -> DddSet<FAtom> {
    let class = FAtomClass { q: a.q() };
    let mut out = DddSet::empty();
    for part in s.parts() {
        let outer = DddSet::atom(FAtom::coset(a, gamma, part.outer.clone()));
        let mut piece = outer;
        for i in &part.inner {
            piece = piece.difference(&class, &DddSet::atom(FAtom::coset(a, gamma, i.clone())));
        }
        out = out.union(&class, &piece);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn ideal_is_null_and_complement_is_negative() {
        let q = 3;
        let mu = BigRational::one();
        let class = FAtomClass { q };
        let o_f = DddSet::atom(FAtom::ideal(q, 0));
        assert!(measure_f(q, &o_f, &mu).is_zero());
        let s = KCoset::ideal(q, 1);
        let inner = DddSet::atom(FAtom::coset(&FElement::zero(q), 0, s));
        let comp = o_f.difference(&class, &inner);
        assert_eq!(measure_f(q, &comp, &mu), ZetaValue::constant(q, CycRat::frac(-1, 3)));
    }

    #[test]
    fn ideal_membership() {
        let q = 3;
        let x = FAtom::ideal(q, 1);
        assert!(x.contains(&FElement::t(q)));
        assert!(!x.contains(&FElement::one(q)));
        assert!(x.contains(&FElement::zero(q)));
    }
}
