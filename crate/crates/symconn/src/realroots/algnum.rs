//! Real algebraic numbers given as polynomial images of an encoded root,
//! with exact comparison by interval refinement plus a gcd certificate
//! for equality.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polycore::interval::RatInterval;
use crate::polycore::rational::Rational;
use crate::polycore::unipoly::UniPoly;
use crate::realroots::isolate::{eval_on_interval, SturmChain};
use crate::realroots::linalg::DependenceFinder;
use crate::realroots::refine_root_interval;

/// The number `w(theta)` where `theta` is the root of a squarefree `q`
/// isolated by `theta_iv`. A squarefree polynomial vanishing on the value
/// (its minimal polynomial over the quotient algebra) is kept alongside.
#[derive(Clone, Debug)]
pub struct AlgebraicValue {
    q: UniPoly,
    theta_iv: RatInterval,
    w: UniPoly,
    minpoly: UniPoly,
}

impl AlgebraicValue {
    pub fn from_rational(r: Rational) -> Self {
        let q = UniPoly::new(vec![-r.clone(), Rational::from_integer(1.into())]);
        AlgebraicValue {
            q: q.clone(),
            theta_iv: RatInterval::point(r.clone()),
            w: UniPoly::monomial(Rational::from_integer(1.into()), 1),
            minpoly: q,
        }
    }

    /// Build `w(theta)` for the root of squarefree `q` isolated by `iv`.
    pub fn new(q: UniPoly, theta_iv: RatInterval, w: UniPoly) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let w = if w.degree() >= q.degree() { w.rem(&q) } else { w };
        let minpoly = minimal_polynomial(&w, &q)?;
        Ok(AlgebraicValue {
            q,
            theta_iv,
            w,
            minpoly,
        })
    }

    /// Squarefree polynomial with this value among its roots.
    pub fn defining_polynomial(&self) -> &UniPoly {
        &self.minpoly
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.minpoly.degree() == 1 {
            let c0 = self.minpoly.coeff(0);
            let c1 = self.minpoly.coeff(1);
            Some(-c0 / c1)
        } else {
            None
        }
    }

    /// A rational interval certain to contain the value.
    pub fn bounding_interval(&self) -> RatInterval {
        eval_on_interval(&self.w, &self.theta_iv)
    }

    /// Shrink the bounding interval by refining the root interval.
    fn refined(&self, steps: u32) -> RatInterval {
        let width = self.theta_iv.width();
        if width.is_zero() {
            return RatInterval::point(self.w.eval(&self.theta_iv.lo));
        }
        let target = width / Rational::from_integer((1i64 << steps.min(40)).into());
        let iv = refine_root_interval(&self.q, &self.theta_iv, &target);
        eval_on_interval(&self.w, &iv)
    }

    /// Exact comparison of two real algebraic values.
    pub fn cmp_exact(&self, other: &Self) -> Result<Ordering> {
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return Ok(a.cmp(&b));
        }
        let g = self.minpoly.gcd(&other.minpoly);
        let g_sturm = if g.degree() >= 1 {
            Some(SturmChain::new(&g)?)
        } else {
            None
        };
        let my_sturm = SturmChain::new(&self.minpoly)?;
        let their_sturm = SturmChain::new(&other.minpoly)?;
        let mut steps = 4u32;
        loop {
            let ia = self.refined(steps);
            let ib = other.refined(steps);
            if ia.hi < ib.lo {
                return Ok(Ordering::Less);
            }
            if ib.hi < ia.lo {
                return Ok(Ordering::Greater);
            }
            if let Some(gs) = &g_sturm {
                // Equality certificate: both intervals isolate their own
                // value among the roots of their minimal polynomials, and
                // a common root of the gcd sits in the overlap.
                if my_sturm.count_in_interval(&ia) == 1
                    && their_sturm.count_in_interval(&ib) == 1
                    && gs.count_in_interval(&ia) == 1
                    && gs.count_in_interval(&ib) == 1
                {
                    if let Some(overlap) = ia.intersect(&ib) {
                        if gs.count_in_interval(&overlap) == 1 {
                            return Ok(Ordering::Equal);
                        }
                    }
                }
            }
            if steps > 4096 {
                return Err(Error::Internal(
                    "algebraic comparison failed to converge".into(),
                ));
            }
            steps *= 2;
        }
    }

    pub fn eq_exact(&self, other: &Self) -> Result<bool> {
        Ok(self.cmp_exact(other)? == Ordering::Equal)
    }
}

/// Monic squarefree minimal polynomial of `w` in `Q[T]/(q)` (with `q`
/// squarefree), found as the first linear dependence among the powers of
/// `w` in the quotient.
pub(crate) fn minimal_polynomial(w: &UniPoly, q: &UniPoly) -> Result<UniPoly> {
    let dim = q.degree();
    if dim <= 0 {
        // no roots at all: any monic linear polynomial works vacuously,
        // but callers should not compare values over an empty root set
        return Ok(UniPoly::monomial(Rational::from_integer(1.into()), 1));
    }
    let dim = dim as usize;
    let mut finder = DependenceFinder::new(dim);
    let mut power = UniPoly::one();
    for _ in 0..=dim {
        let mut coords = vec![Rational::zero(); dim];
        for (k, c) in power.coeffs().iter().enumerate() {
            coords[k] = c.clone();
        }
        if let Some(combo) = finder.feed(&coords) {
            return Ok(UniPoly::new(combo));
        }
        power = power.mul(w).rem(q);
    }
    Err(Error::Internal(
        "no dependence among quotient powers within dimension bound".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::{rat, rat_int};
    use crate::realroots::isolate_real_roots;

    fn sqrt2_value() -> AlgebraicValue {
        let q = UniPoly::from_ints(&[-2, 0, 1]);
        let roots = isolate_real_roots(&q).unwrap();
        AlgebraicValue::new(
            q.clone(),
            roots[1].clone(),
            UniPoly::monomial(rat_int(1), 1),
        )
        .unwrap()
    }

    #[test]
    fn minpoly_of_sqrt2() {
        let v = sqrt2_value();
        assert_eq!(
            v.defining_polynomial().monic(),
            UniPoly::from_ints(&[-2, 0, 1]).monic()
        );
        assert!(v.as_rational().is_none());
    }

    #[test]
    fn minpoly_collapses_rational_images() {
        // w = T^2 over T^2 - 2 is exactly 2 at both roots
        let q = UniPoly::from_ints(&[-2, 0, 1]);
        let roots = isolate_real_roots(&q).unwrap();
        let v = AlgebraicValue::new(q, roots[0].clone(), UniPoly::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(v.as_rational(), Some(rat_int(2)));
    }

    #[test]
    fn compare_rationals_and_roots() {
        let s2 = sqrt2_value();
        let one = AlgebraicValue::from_rational(rat_int(1));
        let three_halves = AlgebraicValue::from_rational(rat(3, 2));
        assert_eq!(s2.cmp_exact(&one).unwrap(), Ordering::Greater);
        assert_eq!(s2.cmp_exact(&three_halves).unwrap(), Ordering::Less);
        assert_eq!(one.cmp_exact(&one).unwrap(), Ordering::Equal);
    }

    #[test]
    fn equality_across_representations() {
        // sqrt(2) as root of T^2-2 versus as (T^3)/2 over the same field:
        // T^3 = 2T mod (T^2-2), so w = T^3/2 evaluates to the same number.
        let q = UniPoly::from_ints(&[-2, 0, 1]);
        let roots = isolate_real_roots(&q).unwrap();
        let direct = sqrt2_value();
        let indirect = AlgebraicValue::new(
            q,
            roots[1].clone(),
            UniPoly::new(vec![rat_int(0), rat_int(0), rat_int(0), rat(1, 2)]),
        )
        .unwrap();
        assert!(direct.eq_exact(&indirect).unwrap());
    }

    #[test]
    fn distinct_conjugates_compare_strictly() {
        // the two roots of T^2-2 are distinct even though they share a
        // minimal polynomial
        let q = UniPoly::from_ints(&[-2, 0, 1]);
        let roots = isolate_real_roots(&q).unwrap();
        let neg = AlgebraicValue::new(
            q.clone(),
            roots[0].clone(),
            UniPoly::monomial(rat_int(1), 1),
        )
        .unwrap();
        let pos = sqrt2_value();
        assert_eq!(neg.cmp_exact(&pos).unwrap(), Ordering::Less);
        assert!(!neg.eq_exact(&pos).unwrap());
    }
}
