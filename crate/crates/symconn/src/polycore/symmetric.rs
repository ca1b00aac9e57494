//! Power sums, symmetry checking and power-sum decomposition.
//!
//! A symmetric polynomial of degree at most `d <= n` is a unique polynomial
//! in the first `d` power sums. The decomposition runs through elementary
//! symmetric polynomials (leading-term subtraction) followed by a
//! Newton-identity conversion, and is verified by exact recomposition.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::polycore::multipoly::MultiPoly;
use crate::polycore::rational::Rational;

/// The i-th power sum `X1^i + ... + Xn^i`.
pub fn power_sum(i: u32, n: usize) -> MultiPoly {
    assert!(i >= 1 && n >= 1);
    let mut p = MultiPoly::zero(n);
    for v in 0..n {
        let mut e = vec![0u32; n];
        e[v] = i;
        p.add_term(e, Rational::one());
    }
    p
}

/// Elementary symmetric polynomials `e_0..e_k` in `n` variables.
fn elementary_up_to(k: usize, n: usize) -> Vec<MultiPoly> {
    let mut es = vec![MultiPoly::zero(n); k + 1];
    es[0] = MultiPoly::one(n);
    for v in 0..n {
        // multiply the generating product by (1 + X_v t)
        let x = MultiPoly::var(n, v);
        for j in (1..=k.min(v + 1)).rev() {
            let bump = es[j - 1].mul(&x);
            es[j] = es[j].add(&bump);
        }
    }
    es
}

/// True iff `f` is invariant under every permutation of its variables.
///
/// Invariance under the transposition (1 2) and the full cycle suffices,
/// since the two generate the whole symmetric group.
pub fn is_symmetric(f: &MultiPoly) -> bool {
    let n = f.vars();
    if n <= 1 {
        return true;
    }
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    if f.permute_vars(&swap) != *f {
        return false;
    }
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    f.permute_vars(&cycle) == *f
}

/// Newton identities: `e_k` in `d` variables standing for `p_1..p_d`.
fn elementary_in_power_sums(k: usize, d: usize) -> Vec<MultiPoly> {
    let mut es = vec![MultiPoly::zero(d); k + 1];
    es[0] = MultiPoly::one(d);
    for m in 1..=k {
        // m * e_m = sum_{i=1}^{m} (-1)^{i-1} e_{m-i} p_i
        let mut acc = MultiPoly::zero(d);
        for i in 1..=m {
            let z = MultiPoly::var(d, i - 1);
            let term = es[m - i].mul(&z);
            if i % 2 == 1 {
                acc = acc.add(&term);
            } else {
                acc = acc.sub(&term);
            }
        }
        let inv = Rational::new(BigInt::from(1), BigInt::from(m as i64));
        es[m] = acc.scale(&inv);
    }
    es
}

/// Write a symmetric `f` with `degree(f) <= d <= n` as `g(p_1,...,p_d)`.
///
/// The returned `g` lives in `d` variables (`Z_i` standing for `p_i`). The
/// identity `f = g(p_1,...,p_d)` is re-expanded symbolically and checked
/// exactly before returning.
pub fn powersum_decompose(f: &MultiPoly, d: usize) -> Result<MultiPoly> {
    let n = f.vars();
    if !is_symmetric(f) {
        return Err(Error::NotSymmetric(f.to_text()));
    }
    if d < 1 || d > n {
        return Err(Error::Input(format!("need 1 <= d <= n, got d={d}, n={n}")));
    }
    let deg = f.degree();
    if deg > d as i64 {
        return Err(Error::Input(format!(
            "degree {deg} exceeds d={d}; decomposition needs degree(f) <= d"
        )));
    }
    if f.is_zero() {
        return Ok(MultiPoly::zero(d));
    }

    // Leading-term subtraction into elementary symmetric polynomials.
    let elems = elementary_up_to(d, n);
    let mut work = f.clone();
    let mut in_elems = MultiPoly::zero(d); // exponents over e_1..e_d
    while !work.is_zero() {
        let (expo, coeff) = {
            let (e, c) = work.lex_leading().expect("nonzero");
            (e.clone(), c.clone())
        };
        for w in expo.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Internal(
                    "lex leading exponent of a symmetric polynomial must be non-increasing".into(),
                ));
            }
        }
        let mut bexp = vec![0u32; d];
        let mut prod = MultiPoly::constant(n, coeff.clone());
        for i in 0..n {
            let next = if i + 1 < n { expo[i + 1] } else { 0 };
            let b = expo[i] - next;
            if b == 0 {
                continue;
            }
            if i >= d {
                return Err(Error::Internal(format!(
                    "degree bookkeeping overflow: e_{} needed with d={d}",
                    i + 1
                )));
            }
            bexp[i] = b;
            prod = prod.mul(&elems[i + 1].pow(b));
        }
        in_elems.add_term(bexp, coeff);
        work = work.sub(&prod);
    }

    // Convert elementary symmetrics to power sums and expand.
    let e_in_p = elementary_in_power_sums(d, d);
    let g = in_elems.compose(&e_in_p[1..=d].to_vec())?;

    // Exact recomposition check.
    let psums: Vec<MultiPoly> = (1..=d as u32).map(|i| power_sum(i, n)).collect();
    let recomposed = g.compose(&psums)?;
    if recomposed != *f {
        return Err(Error::Internal(
            "power-sum decomposition failed exact recomposition".into(),
        ));
    }
    Ok(g)
}
