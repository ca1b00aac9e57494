//! Real univariate representations: algebraic points given by rational
//! coordinate functions of one encoded root.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polycore::multipoly::MultiPoly;
use crate::polycore::rational::Rational;
use crate::polycore::unipoly::UniPoly;
use crate::realroots::isolate::eval_on_interval;
use crate::realroots::{isolate_real_roots, refine_root_interval, RootContext, ThomEncoding};

/// The point `(q_1(theta)/q_0(theta), ..., q_m(theta)/q_0(theta))` where
/// `theta` is the real root of `q` selected by a Thom encoding.
#[derive(Clone, Debug)]
pub struct RealUnivariateRep {
    q: UniPoly,
    q0: UniPoly,
    coords: Vec<UniPoly>,
    thom: ThomEncoding,
    root_index: usize,
}

impl RealUnivariateRep {
    /// Validates `gcd(q, q0) = 1` and that the encoding selects a real
    /// root of `q`.
    pub fn new(q: UniPoly, q0: UniPoly, coords: Vec<UniPoly>, thom: ThomEncoding) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if q.gcd(&q0).degree() != 0 {
            return Err(Error::Input(
                "representation requires gcd(q, q0) = 1".into(),
            ));
        }
        let ctx = RootContext::new(&q)?;
        let root_index = ctx.index_of(&thom).ok_or(Error::Unrealizable)?;
        Ok(RealUnivariateRep {
            q,
            q0,
            coords,
            thom,
            root_index,
        })
    }

    /// Build from the root's position in the ascending root order.
    pub fn from_root_index(
        q: UniPoly,
        q0: UniPoly,
        coords: Vec<UniPoly>,
        root_index: usize,
    ) -> Result<Self> {
        if q.gcd(&q0).degree() != 0 {
            return Err(Error::Input(
                "representation requires gcd(q, q0) = 1".into(),
            ));
        }
        let ctx = RootContext::new(&q)?;
        let thom = ctx
            .encodings()
            .get(root_index)
            .cloned()
            .ok_or(Error::Unrealizable)?;
        Ok(RealUnivariateRep {
            q,
            q0,
            coords,
            thom,
            root_index,
        })
    }

    pub fn q(&self) -> &UniPoly {
        &self.q
    }

    pub fn q0(&self) -> &UniPoly {
        &self.q0
    }

    pub fn coords(&self) -> &[UniPoly] {
        &self.coords
    }

    pub fn thom(&self) -> &ThomEncoding {
        &self.thom
    }

    pub fn root_index(&self) -> usize {
        self.root_index
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    /// When the selected root is rational, the exact coordinate vector.
    pub fn rational_point(&self) -> Option<Vec<Rational>> {
        let sf = self.q.squarefree();
        if sf.degree() != 1 {
            return None;
        }
        // single rational root: q has exactly one distinct root
        let theta = -sf.coeff(0) / sf.coeff(1);
        let den = self.q0.eval(&theta);
        if den.is_zero() {
            return None;
        }
        Some(
            self.coords
                .iter()
                .map(|c| c.eval(&theta) / den.clone())
                .collect(),
        )
    }
}

/// Exact sign of a multivariate polynomial at the represented point.
///
/// Each `X_i` is replaced by `q_i/q_0`; clearing denominators leaves a
/// univariate numerator whose sign at the root, corrected by the parity
/// of `deg f` in the sign of `q_0`, is the answer.
pub fn rur_eval_sign(rep: &RealUnivariateRep, f: &MultiPoly) -> Result<i8> {
    if f.vars() != rep.coords.len() {
        return Err(Error::DimensionMismatch {
            expected: rep.coords.len(),
            got: f.vars(),
        });
    }
    let ctx = RootContext::new(&rep.q)?;
    rur_eval_sign_with(&ctx, rep, f)
}

/// Same as [`rur_eval_sign`] with a reusable root context for `rep.q()`.
pub fn rur_eval_sign_with(
    ctx: &RootContext,
    rep: &RealUnivariateRep,
    f: &MultiPoly,
) -> Result<i8> {
    let deg = f.degree();
    if deg < 0 {
        return Ok(0);
    }
    let deg = deg as u32;
    let mut numerator = UniPoly::zero();
    for (expo, coeff) in f.terms() {
        let total: u32 = expo.iter().sum();
        let mut term = UniPoly::constant(coeff.clone());
        for (i, &e) in expo.iter().enumerate() {
            if e > 0 {
                term = term.mul(&rep.coords[i].pow(e)).rem(&rep.q);
            }
        }
        if deg > total {
            term = term.mul(&rep.q0.pow(deg - total)).rem(&rep.q);
        }
        numerator = numerator.add(&term);
    }
    let num_sign = ctx.sign_at_index(rep.root_index, &numerator)?;
    if deg % 2 == 0 {
        Ok(num_sign)
    } else {
        let den_sign = ctx.sign_at_index(rep.root_index, &rep.q0)?;
        Ok(num_sign * den_sign)
    }
}

/// Encodings whose represented tuple is non-decreasing.
///
/// With a positive denominator the coordinates ascend iff each
/// `q_i - q_{i+1}` is non-positive at the root; with a negative
/// denominator the inequalities flip. A single coordinate passes always.
pub fn chamber_filter(
    q: &UniPoly,
    q0: &UniPoly,
    coords: &[UniPoly],
) -> Result<Vec<ThomEncoding>> {
    if q.gcd(q0).degree() != 0 {
        return Err(Error::Input("chamber filter requires gcd(q, q0) = 1".into()));
    }
    let ctx = RootContext::new(q)?;
    let mut keep = Vec::new();
    for (idx, enc) in ctx.encodings().iter().enumerate() {
        if coords.len() <= 1 {
            keep.push(enc.clone());
            continue;
        }
        let s0 = ctx.sign_at_index(idx, q0)?;
        debug_assert_ne!(s0, 0, "q0 cannot vanish at a root of q when coprime");
        let mut ok = true;
        for pair in coords.windows(2) {
            let diff = pair[0].sub(&pair[1]);
            let s = ctx.sign_at_index(idx, &diff)?;
            if (s0 > 0 && s > 0) || (s0 < 0 && s < 0) {
                ok = false;
                break;
            }
        }
        if ok {
            keep.push(enc.clone());
        }
    }
    Ok(keep)
}

/// Rational approximation of the represented point: the root interval is
/// refined until the denominator is sign-definite and every coordinate
/// interval is narrower than `2^-precision`, then midpoints are taken.
pub fn snap_point(rep: &RealUnivariateRep, precision: u32) -> Result<Vec<Rational>> {
    if let Some(exact) = rep.rational_point() {
        return Ok(exact);
    }
    let sf = rep.q.squarefree();
    let roots = isolate_real_roots(&rep.q)?;
    let iv = roots
        .get(rep.root_index)
        .cloned()
        .ok_or(Error::Unrealizable)?;
    let mut width = iv.width();
    let mut iv = iv;
    let tol = Rational::new(1.into(), num_bigint::BigInt::from(2).pow(precision));
    for _ in 0..precision.max(8) * 4 {
        iv = refine_root_interval(&sf, &iv, &width);
        let den = eval_on_interval(&rep.q0, &iv);
        if let Some(den_inv) = den.recip() {
            let mut out = Vec::with_capacity(rep.coords.len());
            let mut widest = Rational::zero();
            for c in &rep.coords {
                let v = eval_on_interval(c, &iv).mul(&den_inv);
                if v.width() > widest {
                    widest = v.width();
                }
                out.push(v.midpoint());
            }
            if widest <= tol {
                return Ok(out);
            }
        }
        width /= Rational::from_integer(4.into());
    }
    Err(Error::ResourceLimit(
        "snap refinement exceeded its iteration budget".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::{rat, rat_int};
    use crate::realroots::thom_encodings;

    /// The representation of (1/2, 3/2 - sqrt(2)/4) over T^2 - 2.
    fn paper_rep() -> RealUnivariateRep {
        let q = UniPoly::from_ints(&[-2, 0, 1]);
        let encs = thom_encodings(&q).unwrap();
        RealUnivariateRep::new(
            q,
            UniPoly::from_ints(&[0, 2]),
            vec![UniPoly::from_ints(&[0, 1]), UniPoly::from_ints(&[-1, 3])],
            encs[1].clone(),
        )
        .unwrap()
    }

    #[test]
    fn example_representation_signs() {
        let rep = paper_rep();
        // X1 = 1/2 > 0
        let x1 = MultiPoly::var(2, 0);
        assert_eq!(rur_eval_sign(&rep, &x1).unwrap(), 1);
        // constant zero
        assert_eq!(rur_eval_sign(&rep, &MultiPoly::zero(2)).unwrap(), 0);
        // 2 X1 - 1 = 0 exactly
        let f = MultiPoly::parse(2, "2*X1 - 1").unwrap();
        assert_eq!(rur_eval_sign(&rep, &f).unwrap(), 0);
        // second coordinate is 3/2 - sqrt(2)/4 which exceeds 1
        let g = MultiPoly::parse(2, "X2 - 1").unwrap();
        assert_eq!(rur_eval_sign(&rep, &g).unwrap(), 1);
    }

    #[test]
    fn rejects_common_factor() {
        let q = UniPoly::from_ints(&[-2, 0, 1]);
        let encs = thom_encodings(&q).unwrap();
        let res = RealUnivariateRep::new(
            q.clone(),
            q.clone(),
            vec![UniPoly::one()],
            encs[0].clone(),
        );
        assert!(res.is_err());
    }

    #[test]
    fn chamber_filter_on_paper_rep() {
        // both roots of T^2-2 represent non-decreasing pairs here:
        // at +sqrt2: q0 > 0 and q1 - q2 = 1 - 2T < 0;
        // at -sqrt2: q0 < 0 and q1 - q2 > 0.
        let q = UniPoly::from_ints(&[-2, 0, 1]);
        let q0 = UniPoly::from_ints(&[0, 2]);
        let coords = vec![UniPoly::from_ints(&[0, 1]), UniPoly::from_ints(&[-1, 3])];
        let keep = chamber_filter(&q, &q0, &coords).unwrap();
        assert_eq!(keep.len(), 2);
    }

    #[test]
    fn chamber_filter_rejects_descending() {
        // coords (T, -T): at the positive root the pair descends, at the
        // negative root it ascends
        let q = UniPoly::from_ints(&[-2, 0, 1]);
        let q0 = UniPoly::one();
        let coords = vec![UniPoly::from_ints(&[0, 1]), UniPoly::from_ints(&[0, -1])];
        let keep = chamber_filter(&q, &q0, &coords).unwrap();
        assert_eq!(keep.len(), 1);
        let encs = thom_encodings(&q).unwrap();
        assert_eq!(keep[0], encs[0]);
    }

    #[test]
    fn chamber_filter_single_coordinate_keeps_all() {
        let q = UniPoly::from_ints(&[-2, 0, 1]);
        let keep = chamber_filter(&q, &UniPoly::one(), &[UniPoly::from_ints(&[0, 1])]).unwrap();
        assert_eq!(keep.len(), 2);
    }

    #[test]
    fn snap_approximates_the_point() {
        let rep = paper_rep();
        let p = snap_point(&rep, 24).unwrap();
        assert_eq!(p.len(), 2);
        // exact first coordinate: 1/2
        let err1 = (p[0].clone() - rat(1, 2)).abs();
        assert!(err1 < rat(1, 1 << 20));
        // second coordinate nears 3/2 - sqrt(2)/4 = 1.14645
        assert!(p[1] > rat(114, 100) && p[1] < rat(115, 100));
    }

    #[test]
    fn rational_point_shortcut() {
        let q = UniPoly::from_ints(&[-3, 1]); // T - 3
        let encs = thom_encodings(&q).unwrap();
        let rep = RealUnivariateRep::new(
            q,
            UniPoly::from_ints(&[2]),
            vec![UniPoly::from_ints(&[0, 1]), UniPoly::from_ints(&[4])],
            encs[0].clone(),
        )
        .unwrap();
        assert_eq!(
            rep.rational_point().unwrap(),
            vec![rat(3, 2), rat_int(2)]
        );
        assert_eq!(snap_point(&rep, 10).unwrap(), vec![rat(3, 2), rat_int(2)]);
    }

    use num_traits::Signed;
}
