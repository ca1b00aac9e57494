//! Arithmetic in `Q[T]/(q)` for squarefree `q`, including gcd computations
//! of polynomials with quotient-ring coefficients. The quotient is a
//! product of fields, so an element may fail to be invertible; whenever a
//! leading coefficient is a zero divisor the modulus is split and both
//! branches are pursued (dynamic evaluation).

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polycore::rational::Rational;
use crate::polycore::unipoly::UniPoly;

/// Inverse of `p` modulo `q`; `Err` carries a nontrivial factor of `q`
/// when `p` is a zero divisor.
pub(crate) fn inv_mod(p: &UniPoly, q: &UniPoly) -> std::result::Result<UniPoly, UniPoly> {
    let (g, s, _) = p.extended_gcd(q);
    if g.degree() == 0 {
        Ok(s.rem(q))
    } else {
        Err(g)
    }
}

/// A polynomial in one outer variable with coefficients in `Q[T]/(q)`,
/// stored low to high and reduced/trimmed against the current modulus.
pub(crate) type VPoly = Vec<UniPoly>;

pub(crate) fn vp_trim(p: &mut VPoly, q: &UniPoly) {
    for c in p.iter_mut() {
        *c = c.rem(q);
    }
    while matches!(p.last(), Some(c) if c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn vp_is_zero(p: &VPoly) -> bool {
    p.is_empty()
}

pub(crate) fn vp_degree(p: &VPoly) -> i64 {
    p.len() as i64 - 1
}

/// Remainder of `a` by a monic `b` (leading coefficient 1 in the quotient).
fn vp_rem_monic(a: &VPoly, b: &VPoly, q: &UniPoly) -> VPoly {
    debug_assert!(!b.is_empty());
    debug_assert!(b.last().unwrap().degree() == 0);
    let db = b.len() - 1;
    let mut rem = a.clone();
    vp_trim(&mut rem, q);
    while rem.len() > db {
        let lead = rem.last().unwrap().clone();
        let shift = rem.len() - 1 - db;
        for (k, bc) in b.iter().enumerate() {
            let delta = lead.mul(bc).rem(q);
            rem[shift + k] = rem[shift + k].sub(&delta);
        }
        vp_trim(&mut rem, q);
        if rem.len() > db && rem.len() - 1 - db == shift {
            // leading coefficient did not cancel: numerical invariant broken
            unreachable!("monic remainder failed to reduce degree");
        }
    }
    rem
}

/// One branch of a split computation: a factor of the original modulus
/// plus per-branch data.
#[derive(Clone)]
pub(crate) struct Branch<D> {
    pub modulus: UniPoly,
    pub data: D,
}

/// Monic gcd of a list of quotient-coefficient polynomials, splitting the
/// modulus as needed. Returns one entry per branch; the gcd may be the
/// zero polynomial when every input vanishes identically on that branch.
pub(crate) fn gcd_list_mod(
    q: &UniPoly,
    inputs: &[VPoly],
) -> Result<Vec<Branch<VPoly>>> {
    let mut done: Vec<Branch<VPoly>> = Vec::new();
    let mut work: Vec<(UniPoly, VPoly, usize)> = vec![(q.clone(), Vec::new(), 0)];
    while let Some((modulus, acc, idx)) = work.pop() {
        if idx == inputs.len() {
            done.push(Branch {
                modulus,
                data: acc,
            });
            continue;
        }
        let mut next = inputs[idx].clone();
        vp_trim(&mut next, &modulus);
        if vp_is_zero(&acc) {
            work.push((modulus, next, idx + 1));
            continue;
        }
        for br in gcd_pair_mod(&modulus, &acc, &next)? {
            work.push((br.modulus, br.data, idx + 1));
        }
    }
    Ok(done)
}

/// Monic gcd of two quotient-coefficient polynomials with splitting.
fn gcd_pair_mod(q: &UniPoly, a: &VPoly, b: &VPoly) -> Result<Vec<Branch<VPoly>>> {
    let mut out = Vec::new();
    let mut work = vec![(q.clone(), a.clone(), b.clone())];
    let mut guard = 0usize;
    while let Some((modulus, mut a, mut b)) = work.pop() {
        guard += 1;
        if guard > 10_000 {
            return Err(Error::Internal("gcd splitting failed to terminate".into()));
        }
        vp_trim(&mut a, &modulus);
        vp_trim(&mut b, &modulus);
        if vp_degree(&a) < vp_degree(&b) {
            std::mem::swap(&mut a, &mut b);
        }
        if vp_is_zero(&b) {
            match make_monic(&modulus, &a)? {
                MonicOutcome::Done(m) => out.push(Branch {
                    modulus,
                    data: m,
                }),
                MonicOutcome::Split(f) => {
                    let (q1, q2) = split_modulus(&modulus, &f);
                    work.push((q1, a.clone(), b.clone()));
                    work.push((q2, a, b));
                }
            }
            continue;
        }
        let lc = b.last().unwrap().clone();
        match inv_mod(&lc, &modulus) {
            Ok(inv) => {
                let monic_b: VPoly = b.iter().map(|c| c.mul(&inv).rem(&modulus)).collect();
                let r = vp_rem_monic(&a, &monic_b, &modulus);
                work.push((modulus, monic_b, r));
            }
            Err(factor) => {
                let (q1, q2) = split_modulus(&modulus, &factor);
                // on q2 the leading coefficient vanishes: drop it there
                let mut b2 = b.clone();
                b2.pop();
                work.push((q1, a.clone(), b));
                work.push((q2, a, b2));
            }
        }
    }
    Ok(out)
}

enum MonicOutcome {
    Done(VPoly),
    Split(UniPoly),
}

fn make_monic(modulus: &UniPoly, p: &VPoly) -> Result<MonicOutcome> {
    if vp_is_zero(p) {
        return Ok(MonicOutcome::Done(Vec::new()));
    }
    let lc = p.last().unwrap().clone();
    match inv_mod(&lc, modulus) {
        Ok(inv) => Ok(MonicOutcome::Done(
            p.iter().map(|c| c.mul(&inv).rem(modulus)).collect(),
        )),
        Err(factor) => Ok(MonicOutcome::Split(factor)),
    }
}

fn split_modulus(modulus: &UniPoly, factor: &UniPoly) -> (UniPoly, UniPoly) {
    let f = factor.monic();
    let (quo, rem) = modulus.divmod(&f);
    debug_assert!(rem.is_zero(), "splitting factor must divide the modulus");
    (quo.monic(), f)
}

/// Chinese remainders: combine per-branch values into one value modulo the
/// product of the pairwise coprime branch moduli.
pub(crate) fn crt_combine(parts: &[(UniPoly, UniPoly)]) -> Result<(UniPoly, UniPoly)> {
    let mut it = parts.iter();
    let (q0, c0) = it
        .next()
        .ok_or_else(|| Error::Internal("CRT over empty part list".into()))?;
    let mut q = q0.clone();
    let mut c = c0.rem(q0);
    for (qi, ci) in it {
        let (g, s, t) = q.extended_gcd(qi);
        if g.degree() != 0 {
            return Err(Error::Internal("CRT moduli are not coprime".into()));
        }
        // s*q + t*qi = 1: e_old = t*qi (1 mod q), e_new = s*q (1 mod qi)
        let combined_mod = q.mul(qi).monic();
        let e_old = t.mul(qi).rem(&combined_mod);
        let e_new = s.mul(&q).rem(&combined_mod);
        c = c
            .mul(&e_old)
            .add(&ci.rem(qi).mul(&e_new))
            .rem(&combined_mod);
        q = combined_mod;
    }
    Ok((q, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::rat_int;

    #[test]
    fn inverse_and_split() {
        // q = (T-1)(T-2); T-1 is a zero divisor
        let q = UniPoly::from_ints(&[2, -3, 1]);
        let p = UniPoly::from_ints(&[-1, 1]);
        assert!(inv_mod(&p, &q).is_err());
        let u = UniPoly::from_ints(&[5]);
        let inv = inv_mod(&u, &q).unwrap();
        assert_eq!(u.mul(&inv).rem(&q), UniPoly::one());
    }

    #[test]
    fn gcd_splits_by_root() {
        // modulus (T-1)(T-2); inputs: v - T (values v=1 or v=2 per branch)
        // and v - 1 (forces v = 1): gcd is v-1 on the T=1 branch and a unit
        // on the T=2 branch.
        let q = UniPoly::from_ints(&[2, -3, 1]);
        let v_minus_t: VPoly = vec![UniPoly::from_ints(&[0, -1]), UniPoly::one()];
        let v_minus_1: VPoly = vec![UniPoly::from_ints(&[-1]), UniPoly::one()];
        let branches = gcd_list_mod(&q, &[v_minus_t, v_minus_1]).unwrap();
        let mut unit_branches = 0;
        let mut linear_branches = 0;
        for br in &branches {
            match vp_degree(&br.data) {
                0 => {
                    unit_branches += 1;
                    assert_eq!(br.modulus, UniPoly::from_ints(&[-2, 1]).monic());
                }
                1 => {
                    linear_branches += 1;
                    assert_eq!(br.modulus, UniPoly::from_ints(&[-1, 1]).monic());
                    // gcd = v - 1
                    assert_eq!(br.data[0], UniPoly::from_ints(&[-1]));
                }
                d => panic!("unexpected gcd degree {d}"),
            }
        }
        assert_eq!((unit_branches, linear_branches), (1, 1));
    }

    #[test]
    fn crt_roundtrip() {
        let q1 = UniPoly::from_ints(&[-1, 1]);
        let q2 = UniPoly::from_ints(&[-2, 1]);
        let (q, c) = crt_combine(&[
            (q1.clone(), UniPoly::from_ints(&[7])),
            (q2.clone(), UniPoly::from_ints(&[9])),
        ])
        .unwrap();
        assert_eq!(q, q1.mul(&q2).monic());
        assert_eq!(c.rem(&q1), UniPoly::from_ints(&[7]));
        assert_eq!(c.rem(&q2), UniPoly::from_ints(&[9]));
        let _ = rat_int(0);
    }
}
