//! Compositions of an integer: enumeration, the refinement order on faces
//! of the sorted cone, the multiplicity pattern of a point, variable
//! identification along a composition, and the minimizer family.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polycore::multipoly::MultiPoly;
use crate::polycore::rational::Rational;

/// An ordered tuple of positive integers with a fixed sum `n`.
///
/// A composition indexes a face of the sorted cone: the face where the
/// first `parts[0]` coordinates coincide, the next `parts[1]` coincide,
/// and the groups are weakly increasing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Input("composition needs at least one part".into()));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Input("composition parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn from_slice(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("valid composition literal")
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The integer being composed.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Internal cut positions: proper prefix sums, excluding `n` itself.
    fn cuts(&self) -> BTreeSet<u32> {
        let mut acc = 0;
        let mut cuts = BTreeSet::new();
        for &p in &self.parts[..self.parts.len() - 1] {
            acc += p;
            cuts.insert(acc);
        }
        cuts
    }

    fn from_cuts(n: u32, cuts: &BTreeSet<u32>) -> Self {
        let mut parts = Vec::with_capacity(cuts.len() + 1);
        let mut prev = 0;
        for &c in cuts {
            parts.push(c - prev);
            prev = c;
        }
        parts.push(n - prev);
        Composition { parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All compositions of `n` with exactly `len` parts, lexicographically.
pub fn enumerate_compositions(n: u32, len: u32) -> Result<Vec<Composition>> {
    if len == 0 || n == 0 {
        return Err(Error::Input("n and length must be positive".into()));
    }
    if len > n {
        return Err(Error::Input(format!(
            "no composition of {n} into {len} parts"
        )));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len as usize);
    fn rec(remaining: u32, slots: u32, current: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if slots == 1 {
            current.push(remaining);
            out.push(Composition {
                parts: current.clone(),
            });
            current.pop();
            return;
        }
        for first in 1..=(remaining - slots + 1) {
            current.push(first);
            rec(remaining - first, slots - 1, current, out);
            current.pop();
        }
    }
    rec(n, len, &mut current, &mut out);
    Ok(out)
}

/// Which end of a length-`d` composition gets its parts pinned to one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyPattern {
    /// Parts at odd positions from the front (1st, 3rd, ...) equal one.
    #[serde(rename = "front")]
    FrontAnchored,
    /// Parts at positions d, d-2, ... from the back equal one.
    #[serde(rename = "back")]
    BackAnchored,
}

impl Default for FamilyPattern {
    fn default() -> Self {
        FamilyPattern::FrontAnchored
    }
}

/// The candidate compositions scanned by the fiber minimizer.
///
/// For `d = 1` the family is the single composition `(n)`. For `d >= 2`
/// the pinned positions hold ceil(d/2) ones and the free positions range
/// over all compositions of the remainder, so the family has
/// `binomial(n - ceil(d/2) - 1, floor(d/2) - 1)` members.
pub fn minimizer_family(n: u32, d: u32, pattern: FamilyPattern) -> Result<Vec<Composition>> {
    if d == 0 || n == 0 {
        return Err(Error::Input("n and d must be positive".into()));
    }
    if d > n {
        return Err(Error::Input(format!("d={d} exceeds n={n}")));
    }
    if d == 1 {
        return Ok(vec![Composition { parts: vec![n] }]);
    }
    let pinned: Vec<usize> = match pattern {
        FamilyPattern::FrontAnchored => (0..d as usize).step_by(2).collect(),
        FamilyPattern::BackAnchored => {
            let mut v: Vec<usize> = (0..d as usize).rev().step_by(2).collect();
            v.reverse();
            v
        }
    };
    let ones = pinned.len() as u32;
    let free_slots = d - ones;
    let remainder = n - ones;
    if free_slots == 0 {
        return if remainder == 0 {
            Ok(vec![Composition {
                parts: vec![1; d as usize],
            }])
        } else {
            Ok(vec![])
        };
    }
    if remainder < free_slots {
        return Ok(vec![]);
    }
    let free_parts = enumerate_compositions(remainder, free_slots)?;
    let mut out = Vec::with_capacity(free_parts.len());
    for fp in free_parts {
        let mut parts = vec![1u32; d as usize];
        let mut it = fp.parts.iter();
        for (i, slot) in parts.iter_mut().enumerate() {
            if !pinned.contains(&i) {
                *slot = *it.next().expect("free slot count matches");
            }
        }
        out.push(Composition { parts });
    }
    out.sort();
    Ok(out)
}

/// Expected size of the minimizer family: `C(n - ceil(d/2) - 1, floor(d/2) - 1)`
/// for `d >= 2`, and 1 for `d = 1`.
pub fn minimizer_family_size(n: u32, d: u32) -> BigInt {
    if d <= 1 {
        return BigInt::one();
    }
    let ones = d.div_ceil(2);
    let free = d / 2;
    if n < ones + free {
        return BigInt::from(0);
    }
    binomial(n - ones - 1, free - 1)
}

/// Exact binomial coefficient.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The refinement order: true iff `coarse` is obtained from `fine` by
/// merging consecutive parts (so the face of `coarse` is contained in the
/// face of `fine`). Reflexive.
pub fn precedes(fine: &Composition, coarse: &Composition) -> Result<bool> {
    if fine.n() != coarse.n() {
        return Err(Error::Input(format!(
            "compositions of different integers: {} vs {}",
            fine.n(),
            coarse.n()
        )));
    }
    Ok(coarse.cuts().is_subset(&fine.cuts()))
}

/// Least composition coarser than both; its face is the intersection of
/// the two faces.
pub fn join(a: &Composition, b: &Composition) -> Result<Composition> {
    if a.n() != b.n() {
        return Err(Error::Input(format!(
            "compositions of different integers: {} vs {}",
            a.n(),
            b.n()
        )));
    }
    let cuts: BTreeSet<u32> = a.cuts().intersection(&b.cuts()).cloned().collect();
    Ok(Composition::from_cuts(a.n(), &cuts))
}

/// Run-length grouping of consecutive equal coordinates.
pub fn comp_of_point(x: &[Rational]) -> Result<Composition> {
    if x.is_empty() {
        return Err(Error::Input("empty point has no composition".into()));
    }
    let mut parts = Vec::new();
    let mut run = 1u32;
    for w in x.windows(2) {
        if w[0] == w[1] {
            run += 1;
        } else {
            parts.push(run);
            run = 1;
        }
    }
    parts.push(run);
    Ok(Composition { parts })
}

/// Identify the variables of `f` blockwise along `lambda`: block `i` of
/// the original variables all become the new variable `X_{i+1}`.
pub fn substitute(f: &MultiPoly, lambda: &Composition) -> Result<MultiPoly> {
    let n = f.vars();
    if lambda.n() as usize != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: lambda.n() as usize,
        });
    }
    let l = lambda.len();
    let mut block_of = Vec::with_capacity(n);
    for (i, &p) in lambda.parts.iter().enumerate() {
        for _ in 0..p {
            block_of.push(i);
        }
    }
    let mut out = MultiPoly::zero(l);
    for (e, c) in f.terms() {
        let mut ne = vec![0u32; l];
        for (v, &ev) in e.iter().enumerate() {
            ne[block_of[v]] += ev;
        }
        out.add_term(ne, c.clone());
    }
    Ok(out)
}

/// Repeat each coordinate of `z` according to the parts of `lambda`.
pub fn expand_point(z: &[Rational], lambda: &Composition) -> Result<Vec<Rational>> {
    if z.len() != lambda.len() {
        return Err(Error::DimensionMismatch {
            expected: lambda.len(),
            got: z.len(),
        });
    }
    let mut out = Vec::with_capacity(lambda.n() as usize);
    for (zi, &p) in z.iter().zip(&lambda.parts) {
        for _ in 0..p {
            out.push(zi.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::rat_int;

    fn c(parts: &[u32]) -> Composition {
        Composition::from_slice(parts)
    }

    #[test]
    fn eight_compositions_of_four() {
        let mut all = Vec::new();
        for len in 1..=4 {
            all.extend(enumerate_compositions(4, len).unwrap());
        }
        assert_eq!(all.len(), 8);
        for parts in [
            vec![4],
            vec![3, 1],
            vec![1, 3],
            vec![2, 2],
            vec![2, 1, 1],
            vec![1, 2, 1],
            vec![1, 1, 2],
            vec![1, 1, 1, 1],
        ] {
            assert!(all.contains(&c(&parts)), "missing {parts:?}");
        }
    }

    #[test]
    fn enumeration_basics() {
        assert_eq!(
            enumerate_compositions(3, 2).unwrap(),
            vec![c(&[1, 2]), c(&[2, 1])]
        );
        assert_eq!(enumerate_compositions(5, 5).unwrap(), vec![c(&[1; 5])]);
        assert!(enumerate_compositions(3, 4).is_err());
        for n in 1..=12u32 {
            for len in 1..=n {
                let count = enumerate_compositions(n, len).unwrap().len();
                assert_eq!(BigInt::from(count), binomial(n - 1, len - 1));
            }
        }
    }

    #[test]
    fn refinement_order_examples() {
        let fine = c(&[1, 2, 1]);
        for coarse in [c(&[3, 1]), c(&[1, 3]), c(&[4])] {
            assert!(precedes(&fine, &coarse).unwrap());
        }
        assert!(!precedes(&c(&[2, 1, 1]), &c(&[1, 1, 1, 1])).unwrap());
        assert!(precedes(&fine, &fine).unwrap());
        assert!(precedes(&c(&[1, 1, 1, 1]), &c(&[2, 1, 1])).unwrap());
    }

    #[test]
    fn join_examples() {
        assert_eq!(
            join(&c(&[2, 1, 1]), &c(&[1, 1, 1, 1])).unwrap(),
            c(&[2, 1, 1])
        );
        let l = c(&[1, 2]);
        assert_eq!(join(&l, &l).unwrap(), l);
        assert_eq!(join(&c(&[1, 2]), &c(&[2, 1])).unwrap(), c(&[3]));
        assert!(join(&c(&[1, 2]), &c(&[2, 2])).is_err());
    }

    #[test]
    fn poset_laws_small() {
        for n in 2..=6u32 {
            let mut all = Vec::new();
            for len in 1..=n {
                all.extend(enumerate_compositions(n, len).unwrap());
            }
            for a in &all {
                assert!(precedes(a, a).unwrap());
                for b in &all {
                    if precedes(a, b).unwrap() && precedes(b, a).unwrap() {
                        assert_eq!(a, b);
                    }
                    let j = join(a, b).unwrap();
                    assert!(precedes(a, &j).unwrap());
                    assert!(precedes(b, &j).unwrap());
                    // minimality against a brute-force scan
                    for m in &all {
                        if precedes(a, m).unwrap() && precedes(b, m).unwrap() {
                            assert!(precedes(&j, m).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn comp_of_point_examples() {
        let x = [rat_int(-1), rat_int(5), rat_int(5), rat_int(-3)];
        assert_eq!(comp_of_point(&x).unwrap(), c(&[1, 2, 1]));
        let y = [rat_int(1), rat_int(1), rat_int(2)];
        assert_eq!(comp_of_point(&y).unwrap(), c(&[2, 1]));
        let z = vec![rat_int(0); 4];
        assert_eq!(comp_of_point(&z).unwrap(), c(&[4]));
        assert!(comp_of_point(&[]).is_err());
    }

    #[test]
    fn substitute_examples() {
        let f = MultiPoly::parse(4, "X3^3 + X1*X2 - X4").unwrap();
        let g = substitute(&f, &c(&[1, 2, 1])).unwrap();
        assert_eq!(g, MultiPoly::parse(3, "X1*X2 + X2^3 - X3").unwrap());

        let p1 = crate::polycore::power_sum(1, 4);
        let s = substitute(&p1, &c(&[2, 1, 1])).unwrap();
        assert_eq!(s, MultiPoly::parse(3, "2*X1 + X2 + X3").unwrap());

        let p2 = crate::polycore::power_sum(2, 3);
        let t = substitute(&p2, &c(&[2, 1])).unwrap();
        assert_eq!(t, MultiPoly::parse(2, "2*X1^2 + X2^2").unwrap());
    }

    #[test]
    fn expand_and_roundtrip() {
        let z = [rat_int(1), rat_int(2)];
        assert_eq!(
            expand_point(&z, &c(&[2, 1])).unwrap(),
            vec![rat_int(1), rat_int(1), rat_int(2)]
        );
        assert_eq!(
            expand_point(&[rat_int(5)], &c(&[3])).unwrap(),
            vec![rat_int(5); 3]
        );
        // round trip: grouping of the expansion refines to at least lambda
        let lam = c(&[2, 2, 1]);
        let z = [rat_int(1), rat_int(1), rat_int(3)];
        let grouped = comp_of_point(&expand_point(&z, &lam).unwrap()).unwrap();
        assert!(precedes(&lam, &grouped).unwrap());
    }

    #[test]
    fn substitution_commutes_with_expansion() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let n = rng.gen_range(2..=6);
            let len = rng.gen_range(1..=n);
            let lams = enumerate_compositions(n as u32, len as u32).unwrap();
            let lam = &lams[rng.gen_range(0..lams.len())];
            let mut f = MultiPoly::zero(n);
            for _ in 0..5 {
                let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..3)).collect();
                f.add_term(e, crate::polycore::rat(rng.gen_range(-4..=4), 1));
            }
            let z: Vec<Rational> = (0..len)
                .map(|_| crate::polycore::rat(rng.gen_range(-5..=5), rng.gen_range(1..=3)))
                .collect();
            let lhs = substitute(&f, lam).unwrap().eval(&z).unwrap();
            let rhs = f.eval(&expand_point(&z, lam).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn family_patterns() {
        assert_eq!(
            minimizer_family(3, 2, FamilyPattern::FrontAnchored).unwrap(),
            vec![c(&[1, 2])]
        );
        assert_eq!(
            minimizer_family(3, 2, FamilyPattern::BackAnchored).unwrap(),
            vec![c(&[2, 1])]
        );
        assert_eq!(
            minimizer_family(5, 3, FamilyPattern::FrontAnchored).unwrap(),
            vec![c(&[1, 3, 1])]
        );
        assert_eq!(
            minimizer_family(5, 3, FamilyPattern::BackAnchored).unwrap(),
            vec![c(&[1, 3, 1])]
        );
        assert_eq!(
            minimizer_family(4, 1, FamilyPattern::FrontAnchored).unwrap(),
            vec![c(&[4])]
        );
        assert!(minimizer_family(3, 4, FamilyPattern::FrontAnchored).is_err());
    }

    #[test]
    fn family_size_formula() {
        for n in 2..=30u32 {
            for d in 2..=n.min(6) {
                let fam = minimizer_family(n, d, FamilyPattern::FrontAnchored).unwrap();
                assert_eq!(
                    BigInt::from(fam.len()),
                    minimizer_family_size(n, d),
                    "n={n} d={d}"
                );
                for lam in &fam {
                    assert_eq!(lam.n(), n);
                    assert_eq!(lam.len(), d as usize);
                    for i in (0..d as usize).step_by(2) {
                        assert_eq!(lam.parts()[i], 1);
                    }
                }
            }
        }
    }
}
