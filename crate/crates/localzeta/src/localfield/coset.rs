//! Cosets `a + π^n𝒪` of the fractional ideals of `K`.

use super::element::KElement;
use std::cmp::Ordering;
use std::fmt;

/// How two cosets sit relative to each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetRelation {
    Equal,
    /// The first coset is strictly inside the second.
    Inside,
    /// The first coset strictly contains the second.
    Contains,
    Disjoint,
}

/// `a + u^n 𝒪`, with `a` reduced to digits at exponents `< n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KCoset {
    rep: KElement,
    level: i64,
}

impl KCoset {
    pub fn new(a: &KElement, level: i64) -> Self {
        KCoset { rep: a.truncate(level), level }
    }

    /// The ideal `π^n𝒪`.
    pub fn ideal(q: u32, level: i64) -> Self {
        KCoset { rep: KElement::zero(q), level }
    }

    pub fn q(&self) -> u32 {
        self.rep.q()
    }

    pub fn rep(&self) -> &KElement {
        &self.rep
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn contains_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn contains(&self, x: &KElement) -> bool {
        x.sub(&self.rep).valuation() >= self.level
    }

    pub fn relation(&self, other: &KCoset) -> CosetRelation {
        match self.level.cmp(&other.level) {
            Ordering::Equal => {
                if self.rep == other.rep {
                    CosetRelation::Equal
                } else {
                    CosetRelation::Disjoint
                }
            }
            Ordering::Greater => {
                if other.contains(&self.rep) {
                    CosetRelation::Inside
                } else {
                    CosetRelation::Disjoint
                }
            }
            Ordering::Less => {
                if self.contains(&other.rep) {
                    CosetRelation::Contains
                } else {
                    CosetRelation::Disjoint
                }
            }
        }
    }

    /// True when `self ⊆ other`.
    pub fn is_subset_of(&self, other: &KCoset) -> bool {
        matches!(self.relation(other), CosetRelation::Equal | CosetRelation::Inside)
    }

    pub fn meets(&self, other: &KCoset) -> bool {
        self.relation(other) != CosetRelation::Disjoint
    }

    /// The `q` cosets of level `n + 1` inside this one.
    pub fn children(&self) -> Vec<KCoset> {
        let q = self.q();
        (0..q as i64)
            .map(|c| KCoset { rep: self.rep.add(&KElement::digit_at(q, c, self.level)), level: self.level + 1 })
            .collect()
    }

    /// All sub-cosets at level `target ≥ n`.
    pub fn refine_to(&self, target: i64) -> Vec<KCoset> {
        let mut cur = vec![self.clone()];
        for _ in self.level..target {
            cur = cur.iter().flat_map(|c| c.children()).collect();
        }
        cur
    }

    /// The coset of level `n ≤ self.level` containing this one.
    pub fn ancestor(&self, n: i64) -> KCoset {
        KCoset::new(&self.rep, n.min(self.level))
    }

    /// `a - τ + π^n𝒪`.
    pub fn translate(&self, tau: &KElement) -> KCoset {
        KCoset::new(&self.rep.sub(tau), self.level)
    }

    pub fn neg(&self) -> KCoset {
        KCoset::new(&self.rep.neg(), self.level)
    }
}

impl PartialOrd for KCoset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for KCoset {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.level, &self.rep).cmp(&(other.level, &other.rep))
    }
}

impl fmt::Display for KCoset {
    /// Syntax `[1 + u^2*O]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ideal = match self.level {
            0 => "O".to_string(),
            1 => "u*O".to_string(),
            n => format!("u^{}*O", n),
        };
        if self.rep.is_zero() {
            write!(f, "[{}]", ideal)
        } else {
            write!(f, "[{} + {}]", self.rep, ideal)
        }
    }
}

impl fmt::Debug for KCoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations() {
        let q = 3;
        let o = KCoset::ideal(q, 0);
        let po = KCoset::ideal(q, 1);
        let one = KCoset::new(&KElement::one(q), 1);
        assert_eq!(po.relation(&o), CosetRelation::Inside);
        assert_eq!(o.relation(&po), CosetRelation::Contains);
        assert_eq!(one.relation(&po), CosetRelation::Disjoint);
        assert_eq!(o.relation(&o), CosetRelation::Equal);
    }

    #[test]
    fn representative_is_truncated() {
        let q = 2;
        let a = KElement::from_terms(q, &[(0, 1), (1, 1), (3, 1)]);
        let c = KCoset::new(&a, 2);
        assert_eq!(c.rep(), &KElement::from_terms(q, &[(0, 1), (1, 1)]));
        assert!(c.contains(&a));
        assert_eq!(c.to_string(), "[1 + u + u^2*O]");
    }

    #[test]
    fn refinement_counts() {
        let c = KCoset::ideal(5, -1);
        assert_eq!(c.refine_to(1).len(), 25);
        assert!(c.refine_to(1).iter().all(|s| s.is_subset_of(&c)));
    }
}
