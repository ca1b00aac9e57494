//! Exact bookkeeping of real roots: Tarski queries, Thom encodings, sign
//! evaluation at encoded roots, real univariate representations and the
//! sorted-tuple filter on parametrized points.
//!
//! Everything here reduces to sign-variation counts of signed remainder
//! sequences, so all decisions are exact over the rationals.

mod algnum;
mod isolate;
pub(crate) mod linalg;
mod rur;

pub use algnum::AlgebraicValue;
pub use isolate::{isolate_real_roots, refine_root_interval};
pub use rur::{chamber_filter, rur_eval_sign, snap_point, RealUnivariateRep};

use std::fmt;

use crate::error::{Error, Result};
use crate::polycore::unipoly::{signed_subresultants, variation_difference, UniPoly};

/// Signs of the derivative tower `q', q'', ..., q^(deg q)` at one real
/// root of `q` (the sign of `q` itself is zero and is left implicit).
/// Distinct real roots always carry distinct encodings.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ThomEncoding {
    signs: Vec<i8>,
}

impl ThomEncoding {
    pub fn new(signs: Vec<i8>) -> Self {
        ThomEncoding { signs }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }
}

impl fmt::Display for ThomEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<&str> = self
            .signs
            .iter()
            .map(|s| match s.cmp(&0) {
                std::cmp::Ordering::Less => "-",
                std::cmp::Ordering::Equal => "0",
                std::cmp::Ordering::Greater => "+",
            })
            .collect();
        write!(f, "({})", body.join(","))
    }
}

impl fmt::Debug for ThomEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sum of `sign(g)` over the distinct real roots of `q`.
///
/// Computed as the sign-variation difference at -inf/+inf of the signed
/// remainder sequence of `(q, q' g mod q)`.
pub fn tarski_query(q: &UniPoly, g: &UniPoly) -> Result<i64> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if q.degree() == 0 {
        return Ok(0);
    }
    let g_red = if g.degree() >= q.degree() {
        g.rem(q)
    } else {
        g.clone()
    };
    if g_red.is_zero() {
        return Ok(0);
    }
    let h = q.derivative().mul(&g_red).rem(q);
    if h.is_zero() {
        // q divides q' g, so g vanishes at every distinct root of q
        // except where multiplicities absorb it; the query is then the
        // sum of zero signs.
        return Ok(0);
    }
    let seq = signed_subresultants(q, &h)?;
    Ok(variation_difference(&seq))
}

/// Incremental sign determination over the real roots of one polynomial.
///
/// Maintains the realized sign vectors of a growing family of
/// polynomials, together with an adapted set of power products whose
/// query matrix is invertible, so each new polynomial costs at most
/// `3 * #roots` Tarski queries.
struct SignDetermination {
    q: UniPoly,
    root_count: u64,
    /// realized sign vectors over the processed polynomials
    realized: Vec<Vec<i8>>,
    counts: Vec<u64>,
    /// adapted exponent vectors (entries 0..=2) and their products mod q
    adapted: Vec<Vec<u8>>,
    adapted_polys: Vec<UniPoly>,
    processed: Vec<UniPoly>,
}

impl SignDetermination {
    fn new(q: &UniPoly) -> Result<Self> {
        let root_count = tarski_query(q, &UniPoly::one())? as u64;
        let (realized, counts, adapted, adapted_polys) = if root_count > 0 {
            (
                vec![vec![]],
                vec![root_count],
                vec![vec![]],
                vec![UniPoly::one()],
            )
        } else {
            (vec![], vec![], vec![], vec![])
        };
        Ok(SignDetermination {
            q: q.clone(),
            root_count,
            realized,
            counts,
            adapted,
            adapted_polys,
            processed: Vec::new(),
        })
    }

    fn matrix_entry(signs: &[i8], expo: &[u8]) -> i64 {
        let mut acc = 1i64;
        for (&s, &e) in signs.iter().zip(expo) {
            match e {
                0 => {}
                1 => acc *= s as i64,
                _ => acc *= (s as i64) * (s as i64),
            }
        }
        acc
    }

    /// Extend the determination by one more polynomial.
    fn extend(&mut self, g: &UniPoly) -> Result<()> {
        let g_red = if g.degree() >= self.q.degree() {
            g.rem(&self.q)
        } else {
            g.clone()
        };
        if self.root_count == 0 {
            self.processed.push(g_red);
            return Ok(());
        }
        let s = self.realized.len();
        // queries for every adapted product times g^e, e = 0,1,2
        let mut rhs = Vec::with_capacity(3 * s);
        for pa in &self.adapted_polys {
            let mut prod = pa.clone();
            for e in 0..3u8 {
                if e > 0 {
                    prod = prod.mul(&g_red).rem(&self.q);
                }
                rhs.push(crate::polycore::rational::Rational::from_integer(
                    tarski_query(&self.q, &prod)?.into(),
                ));
            }
        }
        // unknown counts per (existing condition, new sign in [0, +, -])
        let eps = [0i8, 1, -1];
        let mut m = Vec::with_capacity(3 * s);
        for a in 0..s {
            for e in 0..3u8 {
                let mut row = Vec::with_capacity(3 * s);
                for cond in &self.realized {
                    let base = Self::matrix_entry(cond, &self.adapted[a]);
                    for &ep in &eps {
                        let factor = match e {
                            0 => 1,
                            1 => ep as i64,
                            _ => (ep as i64) * (ep as i64),
                        };
                        row.push(crate::polycore::rational::Rational::from_integer(
                            (base * factor).into(),
                        ));
                    }
                    let _ = base;
                }
                m.push(row);
            }
        }
        let sol = linalg::solve(m, rhs)
            .ok_or_else(|| Error::Internal("sign determination system was singular".into()))?;
        // collect surviving sign vectors
        let mut new_realized = Vec::new();
        let mut new_counts = Vec::new();
        for (ci, cond) in self.realized.iter().enumerate() {
            for (ei, &ep) in eps.iter().enumerate() {
                let v = &sol[ci * 3 + ei];
                if v.denom() != &num_bigint::BigInt::from(1) {
                    return Err(Error::Internal(
                        "sign determination produced non-integer counts".into(),
                    ));
                }
                let count: i64 = v
                    .numer()
                    .try_into()
                    .map_err(|_| Error::Internal("count overflow".into()))?;
                if count < 0 {
                    return Err(Error::Internal(
                        "sign determination produced a negative count".into(),
                    ));
                }
                if count > 0 {
                    let mut nv = cond.clone();
                    nv.push(ep);
                    new_realized.push(nv);
                    new_counts.push(count as u64);
                }
            }
        }
        // pick an adapted subset of products whose matrix is invertible,
        // preferring low powers of the new polynomial
        let mut tracker = linalg::RankTracker::new(new_realized.len());
        let mut new_adapted = Vec::new();
        let mut new_adapted_polys = Vec::new();
        'outer: for e in 0..3u8 {
            for (a, pa) in self.adapted_polys.iter().enumerate() {
                let mut expo = self.adapted[a].clone();
                expo.push(e);
                let row: Vec<_> = new_realized
                    .iter()
                    .map(|cond| {
                        crate::polycore::rational::Rational::from_integer(
                            Self::matrix_entry(cond, &expo).into(),
                        )
                    })
                    .collect();
                if tracker.offer(&row) {
                    let mut prod = pa.clone();
                    for _ in 0..e {
                        prod = prod.mul(&g_red).rem(&self.q);
                    }
                    new_adapted.push(expo);
                    new_adapted_polys.push(prod);
                    if tracker.rank() == new_realized.len() {
                        break 'outer;
                    }
                }
            }
        }
        if new_adapted.len() != new_realized.len() {
            return Err(Error::Internal(
                "could not find an adapted product family".into(),
            ));
        }
        self.realized = new_realized;
        self.counts = new_counts;
        self.adapted = new_adapted;
        self.adapted_polys = new_adapted_polys;
        self.processed.push(g_red);
        Ok(())
    }
}

/// Precomputed root data for one polynomial: ordered Thom encodings plus
/// the machinery to evaluate signs of further polynomials at each root.
pub struct RootContext {
    q: UniPoly,
    ders: Vec<UniPoly>,
    encodings: Vec<ThomEncoding>,
}

impl RootContext {
    pub fn new(q: &UniPoly) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let deg = q.degree().max(0) as usize;
        let mut ders = Vec::with_capacity(deg);
        let mut cur = q.clone();
        for _ in 0..deg {
            cur = cur.derivative();
            ders.push(cur.clone());
        }
        let mut det = SignDetermination::new(q)?;
        for d in &ders {
            det.extend(d)?;
        }
        for &c in &det.counts {
            if c != 1 {
                return Err(Error::Internal(
                    "distinct roots must have distinct derivative sign vectors".into(),
                ));
            }
        }
        let ordered = order_encodings(&det.realized)?;
        let encodings = ordered.into_iter().map(ThomEncoding::new).collect();
        Ok(RootContext {
            q: q.clone(),
            ders,
            encodings,
        })
    }

    pub fn q(&self) -> &UniPoly {
        &self.q
    }

    /// Encodings of the real roots, ascending by root value.
    pub fn encodings(&self) -> &[ThomEncoding] {
        &self.encodings
    }

    pub fn index_of(&self, enc: &ThomEncoding) -> Option<usize> {
        self.encodings.iter().position(|e| e == enc)
    }

    /// Exact sign of `p` at the root with the given index.
    pub fn sign_at_index(&self, index: usize, p: &UniPoly) -> Result<i8> {
        if index >= self.encodings.len() {
            return Err(Error::Unrealizable);
        }
        let signs = self.signs_at_all(p)?;
        Ok(signs[index])
    }

    /// Exact sign of `p` at every real root, in root order.
    pub fn signs_at_all(&self, p: &UniPoly) -> Result<Vec<i8>> {
        if self.encodings.is_empty() {
            return Ok(vec![]);
        }
        let mut det = SignDetermination::new(&self.q)?;
        for d in &self.ders {
            det.extend(d)?;
        }
        det.extend(p)?;
        let mut out = vec![0i8; self.encodings.len()];
        let mut seen = vec![false; self.encodings.len()];
        for vector in &det.realized {
            let (prefix, last) = vector.split_at(vector.len() - 1);
            let idx = self
                .encodings
                .iter()
                .position(|e| e.signs() == prefix)
                .ok_or_else(|| {
                    Error::Internal("extended sign vector lost its root prefix".into())
                })?;
            out[idx] = last[0];
            seen[idx] = true;
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::Internal(
                "sign determination dropped a root".into(),
            ));
        }
        Ok(out)
    }
}

/// Order full derivative sign vectors by the value of the roots they
/// encode: two distinct encodings first differ (from the top derivative
/// down) at some position, and the common sign of the next higher
/// derivative decides the direction.
fn order_encodings(realized: &[Vec<i8>]) -> Result<Vec<Vec<i8>>> {
    let mut sorted = realized.to_vec();
    let mut err = None;
    sorted.sort_by(|a, b| {
        use std::cmp::Ordering;
        if a == b {
            return Ordering::Equal;
        }
        let k = (0..a.len()).rev().find(|&i| a[i] != b[i]).unwrap();
        if k + 1 >= a.len() {
            err = Some(Error::Internal(
                "encodings differ at the top derivative".into(),
            ));
            return Ordering::Equal;
        }
        let common = a[k + 1];
        if common == 0 {
            err = Some(Error::Internal(
                "guiding derivative sign is zero between distinct roots".into(),
            ));
            return Ordering::Equal;
        }
        let ord = a[k].cmp(&b[k]);
        if common > 0 {
            ord
        } else {
            ord.reverse()
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(sorted),
    }
}

/// Ordered list of Thom encodings of the real roots of `q`, ascending.
pub fn thom_encodings(q: &UniPoly) -> Result<Vec<ThomEncoding>> {
    Ok(RootContext::new(q)?.encodings().to_vec())
}

/// Exact sign of `p` at the root of `q` encoded by `enc`.
pub fn sign_at(q: &UniPoly, enc: &ThomEncoding, p: &UniPoly) -> Result<i8> {
    let ctx = RootContext::new(q)?;
    let idx = ctx.index_of(enc).ok_or(Error::Unrealizable)?;
    ctx.sign_at_index(idx, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::rat_int;

    fn t2_minus_2() -> UniPoly {
        UniPoly::from_ints(&[-2, 0, 1])
    }

    #[test]
    fn tarski_query_examples() {
        let q = t2_minus_2();
        assert_eq!(tarski_query(&q, &UniPoly::one()).unwrap(), 2);
        assert_eq!(tarski_query(&q, &UniPoly::from_ints(&[0, 1])).unwrap(), 0);
        let q2 = UniPoly::from_ints(&[1, 0, 1]);
        assert_eq!(tarski_query(&q2, &UniPoly::one()).unwrap(), 0);
        assert!(tarski_query(&UniPoly::zero(), &UniPoly::one()).is_err());
        // (T-1)(T-2) against g = 1 counts both simple roots
        let q3 = UniPoly::from_ints(&[2, -3, 1]);
        assert_eq!(tarski_query(&q3, &UniPoly::one()).unwrap(), 2);
    }

    #[test]
    fn thom_encodings_of_sqrt2() {
        let q = t2_minus_2();
        let encs = thom_encodings(&q).unwrap();
        assert_eq!(encs.len(), 2);
        // ascending: -sqrt(2) carries (-,+), sqrt(2) carries (+,+)
        assert_eq!(encs[0].signs(), &[-1, 1]);
        assert_eq!(encs[1].signs(), &[1, 1]);
    }

    #[test]
    fn no_roots_no_encodings() {
        let q = UniPoly::from_ints(&[1, 0, 1]);
        assert!(thom_encodings(&q).unwrap().is_empty());
    }

    #[test]
    fn triple_root_encoding() {
        // (T-1)^3: single root with q'=q''=0 and q'''>0 there
        let b = UniPoly::from_ints(&[-1, 1]);
        let q = b.pow(3);
        let encs = thom_encodings(&q).unwrap();
        assert_eq!(encs.len(), 1);
        assert_eq!(encs[0].signs(), &[0, 0, 1]);
    }

    #[test]
    fn sign_at_examples() {
        let q = t2_minus_2();
        let encs = thom_encodings(&q).unwrap();
        let plus = &encs[1];
        // sqrt(2) > 1
        assert_eq!(
            sign_at(&q, plus, &UniPoly::from_ints(&[-1, 1])).unwrap(),
            1
        );
        // q itself vanishes
        assert_eq!(sign_at(&q, plus, &q).unwrap(), 0);
        // 3T - 1 is positive at sqrt(2)
        assert_eq!(
            sign_at(&q, plus, &UniPoly::from_ints(&[-1, 3])).unwrap(),
            1
        );
        // and negative at -sqrt(2)
        assert_eq!(
            sign_at(&q, &encs[0], &UniPoly::from_ints(&[-1, 3])).unwrap(),
            -1
        );
    }

    #[test]
    fn sign_at_rejects_bogus_encoding() {
        let q = t2_minus_2();
        let bogus = ThomEncoding::new(vec![0, -1]);
        assert!(matches!(
            sign_at(&q, &bogus, &UniPoly::one()),
            Err(Error::Unrealizable)
        ));
    }

    #[test]
    fn encoding_count_matches_tarski() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            let deg = rng.gen_range(1..=6);
            let mut coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-6..=6)).collect();
            if coeffs[deg] == 0 {
                coeffs[deg] = 1;
            }
            let q = UniPoly::from_ints(&coeffs);
            let encs = thom_encodings(&q).unwrap();
            assert_eq!(encs.len() as i64, tarski_query(&q, &UniPoly::one()).unwrap());
        }
    }

    #[test]
    fn sign_multiplicativity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..25 {
            let mut coeffs: Vec<i64> = (0..=4).map(|_| rng.gen_range(-5..=5)).collect();
            if coeffs[4] == 0 {
                coeffs[4] = 2;
            }
            let q = UniPoly::from_ints(&coeffs);
            let ctx = match RootContext::new(&q) {
                Ok(c) => c,
                Err(_) => continue,
            };
            let p1 = UniPoly::from_ints(&[rng.gen_range(-4..=4), rng.gen_range(-4..=4), 1]);
            let p2 = UniPoly::from_ints(&[rng.gen_range(-4..=4), 1]);
            let s1 = ctx.signs_at_all(&p1).unwrap();
            let s2 = ctx.signs_at_all(&p2).unwrap();
            let s12 = ctx.signs_at_all(&p1.mul(&p2)).unwrap();
            for i in 0..s1.len() {
                assert_eq!(s12[i], s1[i] * s2[i]);
            }
        }
    }

    #[test]
    fn constant_polys_have_no_roots() {
        let q = UniPoly::constant(rat_int(5));
        assert!(thom_encodings(&q).unwrap().is_empty());
    }
}
