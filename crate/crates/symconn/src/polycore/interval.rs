//! Exact interval arithmetic over the rationals.

use num_traits::Zero;

use crate::polycore::rational::Rational;

/// A closed interval with rational endpoints, `lo <= hi`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RatInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        RatInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        if lo <= hi {
            Some(RatInterval { lo, hi })
        } else {
            None
        }
    }

    /// Closures touch or overlap.
    pub fn touches(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn add(&self, other: &Self) -> Self {
        RatInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn neg(&self) -> Self {
        RatInterval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_negative() {
            RatInterval {
                lo: &self.hi * c,
                hi: &self.lo * c,
            }
        } else {
            RatInterval {
                lo: &self.lo * c,
                hi: &self.hi * c,
            }
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return RatInterval::point(Rational::from_integer(1.into()));
        }
        if k % 2 == 1 || !self.contains_zero() {
            let a = pow_rat(&self.lo, k);
            let b = pow_rat(&self.hi, k);
            if a <= b {
                RatInterval { lo: a, hi: b }
            } else {
                RatInterval { lo: b, hi: a }
            }
        } else {
            // even power over an interval straddling zero
            let a = pow_rat(&self.lo, k);
            let b = pow_rat(&self.hi, k);
            RatInterval {
                lo: Rational::zero(),
                hi: a.max(b),
            }
        }
    }

    /// Reciprocal; `None` when the interval contains zero.
    pub fn recip(&self) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        Some(RatInterval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }
}

fn pow_rat(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::from_integer(1.into());
    for _ in 0..k {
        acc *= x;
    }
    acc
}

use num_traits::Signed;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::{rat, rat_int};

    #[test]
    fn mul_and_pow() {
        let a = RatInterval::new(rat_int(-1), rat_int(2));
        let sq = a.pow(2);
        assert_eq!(sq.lo, rat_int(0));
        assert_eq!(sq.hi, rat_int(4));
        let cube = a.pow(3);
        assert_eq!(cube.lo, rat_int(-1));
        assert_eq!(cube.hi, rat_int(8));
        let b = RatInterval::new(rat(1, 2), rat_int(3));
        let p = a.mul(&b);
        assert_eq!(p.lo, rat_int(-3));
        assert_eq!(p.hi, rat_int(6));
    }

    #[test]
    fn recip_guards_zero() {
        assert!(RatInterval::new(rat_int(-1), rat_int(1)).recip().is_none());
        let r = RatInterval::new(rat_int(2), rat_int(4)).recip().unwrap();
        assert_eq!(r.lo, rat(1, 4));
        assert_eq!(r.hi, rat(1, 2));
    }
}
