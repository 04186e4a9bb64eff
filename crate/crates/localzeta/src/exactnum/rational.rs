//! Rationals with a machine-word fast path, falling back to `BigRational`
//! when a numerator or denominator leaves `i64`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use std::fmt;

/// Invariant: `Small(n, d)` has `d > 0` and `gcd(n, d) = 1`; `Big` is used
/// only when the reduced value does not fit, so equal values have equal
/// representations.
#[derive(Clone, PartialEq, Eq)]
pub(crate) enum Q {
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Q {
    pub fn zero() -> Self {
        Q::Small(0, 1)
    }

    pub fn one() -> Self {
        Q::Small(1, 1)
    }

    pub fn from_i64(n: i64) -> Self {
        Q::Small(n, 1)
    }

    fn from_i128(n: i128, d: i128) -> Self {
        debug_assert!(d != 0);
        let g = n.gcd(&d);
        let (mut n, mut d) = (n / g, d / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Q::Small(n, d),
            _ => Q::Big(Box::new(BigRational::new(BigInt::from(n), BigInt::from(d)))),
        }
    }

    pub fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Q::Small(n, d),
            _ => Q::Big(Box::new(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Q::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Q::Big(b) => (**b).clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Q::Small(n, d) => *n as f64 / *d as f64,
            Q::Big(b) => b.to_f64().unwrap_or_else(|| {
                b.numer().to_f64().unwrap_or(f64::NAN) / b.denom().to_f64().unwrap_or(f64::NAN)
            }),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Q::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Q::Small(1, 1))
    }

    pub fn is_minus_one(&self) -> bool {
        matches!(self, Q::Small(-1, 1))
    }

    pub fn add(&self, o: &Q) -> Q {
        match (self, o) {
            (Q::Small(0, _), _) => o.clone(),
            (_, Q::Small(0, _)) => self.clone(),
            (Q::Small(a, b), Q::Small(c, d)) => {
                if b == d {
                    Q::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    Q::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Q::from_big(self.to_big() + o.to_big()),
        }
    }

    pub fn neg(&self) -> Q {
        match self {
            Q::Small(n, d) => Q::from_i128(-(*n as i128), *d as i128),
            Q::Big(b) => Q::from_big(-(**b).clone()),
        }
    }

    pub fn sub(&self, o: &Q) -> Q {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Q) -> Q {
        match (self, o) {
            (Q::Small(0, _), _) | (_, Q::Small(0, _)) => Q::zero(),
            (Q::Small(1, 1), _) => o.clone(),
            (_, Q::Small(1, 1)) => self.clone(),
            (Q::Small(a, b), Q::Small(c, d)) => Q::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128),
            _ => Q::from_big(self.to_big() * o.to_big()),
        }
    }

    pub fn mul_i64(&self, k: i64) -> Q {
        self.mul(&Q::from_i64(k))
    }

    pub fn add_assign(&mut self, o: &Q) {
        *self = self.add(o);
    }

    pub fn sub_assign(&mut self, o: &Q) {
        *self = self.sub(o);
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Q::Small(n, 1) => write!(f, "{n}"),
            Q::Small(n, d) => write!(f, "{n}/{d}"),
            Q::Big(b) => {
                if b.denom().is_one() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_arithmetic_matches_big() {
        let vals = [(1, 2), (-3, 4), (0, 1), (7, 9), (-5, 1), (i64::MAX, 3), (i64::MIN + 1, 7)];
        for &(a, b) in &vals {
            for &(c, d) in &vals {
                let (x, y) = (Q::from_big(big(a, b)), Q::from_big(big(c, d)));
                assert_eq!(x.add(&y).to_big(), big(a, b) + big(c, d));
                assert_eq!(x.sub(&y).to_big(), big(a, b) - big(c, d));
                assert_eq!(x.mul(&y).to_big(), big(a, b) * big(c, d));
                assert_eq!(x.add(&y), Q::from_big(big(a, b) + big(c, d)));
            }
        }
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let x = Q::from_i64(i64::MAX);
        let y = x.add(&Q::one());
        assert!(matches!(y, Q::Big(_)));
        assert_eq!(y.sub(&Q::one()), x);
        assert!(matches!(y.sub(&Q::one()), Q::Small(..)));
        assert_eq!(Q::from_i64(i64::MIN).neg().to_big(), -BigRational::from_integer(i64::MIN.into()));
    }

    #[test]
    fn predicates() {
        assert!(Q::from_big(big(0, 5)).is_zero());
        assert!(Q::from_big(big(3, 3)).is_one());
        assert!(Q::from_big(big(-2, 2)).is_minus_one());
        assert_eq!(Q::from_big(big(6, -4)).to_string(), "-3/2");
    }
}
