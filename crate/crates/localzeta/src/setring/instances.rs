use super::{refine_disjoint, DClass};
use crate::localfield::{KCoset, KElement};

/// `[lo, hi)` with integer endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Interval {
    lo: i64,
    hi: i64,
}

impl Interval {
    pub fn new(lo: i64, hi: i64) -> Option<Self> {
        (lo < hi).then_some(Interval { lo, hi })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn len(&self) -> i64 {
        self.hi - self.lo
    }
}

/// Half-open intervals of `ℝ` with integer endpoints. A point `k` stands for
/// the cell `[k, k+1)`, on which every such set is constant.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntervalClass;

impl DClass for IntervalClass {
    type Atom = Interval;
    type Point = i64;

    fn meets(&self, a: &Interval, b: &Interval) -> bool {
        a.lo.max(b.lo) < a.hi.min(b.hi)
    }

    fn is_subset(&self, a: &Interval, b: &Interval) -> bool {
        b.lo <= a.lo && a.hi <= b.hi
    }

    fn intersection(&self, a: &Interval, b: &Interval) -> Interval {
        Interval { lo: a.lo.max(b.lo), hi: a.hi.min(b.hi) }
    }

    fn union(&self, a: &Interval, b: &Interval) -> Interval {
        Interval { lo: a.lo.min(b.lo), hi: a.hi.max(b.hi) }
    }

    fn contains(&self, a: &Interval, p: &i64) -> bool {
        a.lo <= *p && *p < a.hi
    }

    fn sample_points(&self, atoms: &[Interval]) -> Vec<i64> {
        let lo = atoms.iter().map(|a| a.lo).min().unwrap_or(0);
        let hi = atoms.iter().map(|a| a.hi).max().unwrap_or(0);
        (lo - 1..=hi).collect()
    }
}

/// Cosets `a + π^n𝒪` of `K`. Any two either nest or are disjoint.
#[derive(Clone, Copy, Debug)]
pub struct KCosetClass {
    pub q: u32,
}

impl DClass for KCosetClass {
    type Atom = KCoset;
    type Point = KElement;

    fn meets(&self, a: &KCoset, b: &KCoset) -> bool {
        a.meets(b)
    }

    fn is_subset(&self, a: &KCoset, b: &KCoset) -> bool {
        a.is_subset_of(b)
    }

    fn intersection(&self, a: &KCoset, b: &KCoset) -> KCoset {
        if a.level() >= b.level() {
            a.clone()
        } else {
            b.clone()
        }
    }

    fn union(&self, a: &KCoset, b: &KCoset) -> KCoset {
        if a.level() <= b.level() {
            a.clone()
        } else {
            b.clone()
        }
    }

    fn contains(&self, a: &KCoset, p: &KElement) -> bool {
        a.contains(p)
    }

    /// One representative of each cell at the finest level inside the
    /// atoms, and one point outside all of them.
    fn sample_points(&self, atoms: &[KCoset]) -> Vec<KElement> {
        if atoms.is_empty() {
            return vec![KElement::zero(self.q)];
        }
        let fine = atoms.iter().map(|a| a.level()).max().unwrap();
        let mut out: Vec<KElement> = refine_disjoint(self, atoms)
            .iter()
            .flat_map(|a| a.refine_to(fine))
            .map(|c| c.rep().clone())
            .collect();
        let floor = atoms.iter().map(|a| a.level().min(a.rep().valuation())).min().unwrap();
        out.push(KElement::digit_at(self.q, 1, floor - 1));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setring::DddSet;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    #[test]
    fn nested_cosets_refine_to_the_larger() {
        let c = KCosetClass { q: 3 };
        let o = KCoset::ideal(3, 0);
        let p = KCoset::ideal(3, 1);
        assert_eq!(refine_disjoint(&c, &[o.clone(), p]), vec![o]);
    }

    #[test]
    fn units_have_haar_measure() {
        let q = 3;
        let c = KCosetClass { q };
        let units = DddSet::atom(KCoset::ideal(q, 0)).difference(&c, &DddSet::atom(KCoset::ideal(q, 1)));
        let m = units.measure(BigRational::zero(), |a| {
            BigRational::new(1.into(), num_bigint::BigInt::from(q).pow(a.level() as u32))
        });
        assert_eq!(m, BigRational::one() - BigRational::new(1.into(), 3.into()));
    }

    #[test]
    fn complement_of_residue_cosets() {
        // 𝒪 minus the q−1 unit residue cosets is π𝒪.
        let q = 5;
        let c = KCosetClass { q };
        let mut x = DddSet::atom(KCoset::ideal(q, 0));
        for k in 1..q as i64 {
            x = x.difference(&c, &DddSet::atom(KCoset::new(&KElement::constant(q, k), 1)));
        }
        let p = DddSet::atom(KCoset::ideal(q, 1));
        let atoms = [KCoset::ideal(q, 2)];
        for pt in c.sample_points(&atoms) {
            assert_eq!(x.contains(&c, &pt), p.contains(&c, &pt));
        }
    }
}
