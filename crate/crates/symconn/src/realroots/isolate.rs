//! Real-root isolation by Sturm-sequence bisection. Serves as the
//! independent cross-check for encoding order and as the refinement
//! engine behind rational snapshots of algebraic points.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polycore::interval::RatInterval;
use crate::polycore::rational::{sign, Rational};
use crate::polycore::unipoly::{signed_subresultants, variations_at, UniPoly};

/// The Sturm chain of the squarefree part, with root counting over
/// half-open intervals `(a, b]`.
pub(crate) struct SturmChain {
    pub poly: UniPoly,
    chain: Vec<UniPoly>,
}

impl SturmChain {
    pub fn new(q: &UniPoly) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sf = q.squarefree();
        let chain = signed_subresultants(&sf, &sf.derivative())?;
        Ok(SturmChain { poly: sf, chain })
    }

    /// Number of distinct real roots in `(a, b]`, requiring `a < b`.
    pub fn count_in(&self, a: &Rational, b: &Rational) -> usize {
        debug_assert!(a <= b);
        if a == b {
            return 0;
        }
        let va = variations_at(&self.chain, a);
        let vb = variations_at(&self.chain, b);
        va.saturating_sub(vb)
    }

    pub fn count_in_interval(&self, iv: &RatInterval) -> usize {
        let mut extra = 0;
        // count_in excludes the left endpoint; add it back when it is a root
        if self.poly.eval(&iv.lo).is_zero() {
            extra = 1;
        }
        if iv.lo == iv.hi {
            return extra;
        }
        self.count_in(&iv.lo, &iv.hi) + extra
    }
}

/// Pick a split point near the middle of `(lo, hi)` where `q` does not
/// vanish.
fn non_root_split(q: &UniPoly, lo: &Rational, hi: &Rational) -> Rational {
    let two = Rational::from_integer(2.into());
    let mut mid = (lo + hi) / &two;
    let mut offset = (hi - lo) / Rational::from_integer(8.into());
    while q.eval(&mid).is_zero() {
        mid += &offset;
        offset /= &two;
        debug_assert!(&mid < hi);
    }
    mid
}

/// Isolating intervals for the distinct real roots of `q`, ascending.
/// Endpoints are never roots, and each open interval contains exactly
/// one root.
pub fn isolate_real_roots(q: &UniPoly) -> Result<Vec<RatInterval>> {
    let sturm = SturmChain::new(q)?;
    if sturm.poly.degree() <= 0 {
        return Ok(vec![]);
    }
    let bound = sturm.poly.root_bound();
    let lo = -bound.clone();
    let hi = bound;
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        let count = sturm.count_in(&a, &b);
        match count {
            0 => {}
            1 => out.push(RatInterval::new(a, b)),
            _ => {
                let mid = non_root_split(&sturm.poly, &a, &b);
                stack.push((a, mid.clone()));
                stack.push((mid, b));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    Ok(out)
}

/// Shrink an isolating interval of a squarefree polynomial below `width`.
pub fn refine_root_interval(q: &UniPoly, iv: &RatInterval, width: &Rational) -> RatInterval {
    let sf = q.squarefree();
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let mut s_lo = sign(&sf.eval(&lo));
    debug_assert_ne!(s_lo, 0, "isolating interval endpoints must not be roots");
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        let s_mid = sign(&sf.eval(&mid));
        if s_mid == 0 {
            // the root is exactly the midpoint; box it tightly
            let delta = width / Rational::from_integer(4.into());
            let mut nl = &mid - &delta;
            let mut nh = &mid + &delta;
            let two = Rational::from_integer(2.into());
            let mut shrink = delta.clone();
            while sf.eval(&nl).is_zero() {
                shrink /= &two;
                nl = &mid - &shrink;
            }
            let mut shrink = delta;
            while sf.eval(&nh).is_zero() {
                shrink /= &two;
                nh = &mid + &shrink;
            }
            return RatInterval::new(nl.max(lo), nh.min(hi));
        }
        if s_mid == s_lo {
            lo = mid;
            s_lo = s_mid;
        } else {
            hi = mid;
        }
    }
    RatInterval::new(lo, hi)
}

/// Interval evaluation of a univariate polynomial over an interval.
pub(crate) fn eval_on_interval(p: &UniPoly, iv: &RatInterval) -> RatInterval {
    let mut acc = RatInterval::point(Rational::zero());
    let x = iv.clone();
    for (k, c) in p.coeffs().iter().enumerate() {
        acc = acc.add(&x.pow(k as u32).scale(c));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::{rat, rat_int};

    #[test]
    fn isolates_sqrt2() {
        let q = UniPoly::from_ints(&[-2, 0, 1]);
        let roots = isolate_real_roots(&q).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].hi <= roots[1].lo);
        let tight = refine_root_interval(&q, &roots[1], &rat(1, 1000));
        // sqrt(2) = 1.41421...
        assert!(tight.lo < rat(1415, 1000));
        assert!(tight.hi > rat(1414, 1000));
    }

    #[test]
    fn counts_match_multiplicity_free_roots() {
        // (T-1)^2 (T+3): distinct roots 1 and -3
        let q = UniPoly::from_ints(&[-1, 1])
            .pow(2)
            .mul(&UniPoly::from_ints(&[3, 1]));
        let roots = isolate_real_roots(&q).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].contains(&rat_int(-3)));
        assert!(roots[1].contains(&rat_int(1)));
    }

    #[test]
    fn interval_eval_contains_true_value() {
        let p = UniPoly::from_ints(&[1, -3, 0, 2]);
        let iv = RatInterval::new(rat(1, 2), rat(3, 4));
        let out = eval_on_interval(&p, &iv);
        let v = p.eval(&rat(5, 8));
        assert!(out.lo <= v && v <= out.hi);
    }

    #[test]
    fn agreement_with_thom_ordering() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..30 {
            let deg = rng.gen_range(2..=6);
            let mut coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-5..=5)).collect();
            if coeffs[deg] == 0 {
                coeffs[deg] = 3;
            }
            let q = UniPoly::from_ints(&coeffs);
            let encs = crate::realroots::thom_encodings(&q).unwrap();
            let ivs = isolate_real_roots(&q).unwrap();
            assert_eq!(encs.len(), ivs.len());
            // ordering agreement: sign of (T - c) at the k-th encoded root
            // matches the k-th isolating interval for random rational c
            let ctx = crate::realroots::RootContext::new(&q).unwrap();
            for _ in 0..10 {
                let c = rat(rng.gen_range(-8..=8), rng.gen_range(1..=4));
                let p = UniPoly::new(vec![-c.clone(), rat_int(1)]);
                let signs = ctx.signs_at_all(&p).unwrap();
                for (k, iv) in ivs.iter().enumerate() {
                    let tight = refine_root_interval(&q, iv, &rat(1, 1 << 20));
                    if c < tight.lo {
                        assert_eq!(signs[k], 1, "root {k} should exceed {c}");
                    } else if c > tight.hi {
                        assert_eq!(signs[k], -1);
                    }
                }
            }
        }
    }
}
