//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` from exponent vector to nonzero
//! coefficient, so equality, hashing of the canonical text form and
//! iteration order are all deterministic. The canonical display order is
//! graded lexicographic, largest first.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polycore::rational::{format_rational, parse_rational, Rational};

/// A polynomial in `vars` variables over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars], c);
        p
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// The variable `X_{idx+1}` (zero-based index).
    pub fn var(vars: usize, idx: usize) -> Self {
        assert!(idx < vars, "variable index out of range");
        let mut e = vec![0; vars];
        e[idx] = 1;
        let mut p = Self::zero(vars);
        p.add_term(e, Rational::one());
        p
    }

    pub fn from_terms<I>(vars: usize, it: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in it {
            if e.len() != vars {
                return Err(Error::DimensionMismatch {
                    expected: vars,
                    got: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Max total degree; the zero polynomial has degree -1.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as i64).sum())
            .max()
            .unwrap_or(-1)
    }

    pub fn add_term(&mut self, expo: Vec<u32>, c: Rational) {
        debug_assert_eq!(expo.len(), self.vars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(expo) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, expo: &[u32]) -> Rational {
        self.terms.get(expo).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), -c.clone()))
            .collect();
        MultiPoly {
            vars: self.vars,
            terms,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, k)| (e.clone(), k * c))
            .collect();
        MultiPoly {
            vars: self.vars,
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut out = Self::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &[Rational]) -> Result<Rational> {
        if x.len() != self.vars {
            return Err(Error::DimensionMismatch {
                expected: self.vars,
                got: x.len(),
            });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (xi, &ei) in x.iter().zip(e) {
                for _ in 0..ei {
                    term *= xi;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Substitute each variable by a polynomial (all images over the same ring).
    pub fn compose(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.vars {
            return Err(Error::DimensionMismatch {
                expected: self.vars,
                got: images.len(),
            });
        }
        let out_vars = images.first().map(|p| p.vars).unwrap_or(0);
        let mut acc = MultiPoly::zero(out_vars);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(out_vars, c.clone());
            for (img, &ei) in images.iter().zip(e) {
                if ei > 0 {
                    term = term.mul(&img.pow(ei));
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Apply a permutation of variables: variable `i` is renamed to `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.vars);
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0u32; self.vars];
            for (i, &ei) in e.iter().enumerate() {
                ne[perm[i]] = ei;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> i64 {
        self.terms
            .keys()
            .map(|e| e[var] as i64)
            .max()
            .unwrap_or(-1)
    }

    /// View as a univariate polynomial in `var` with `MultiPoly` coefficients
    /// (in the same ambient ring, with `var`'s exponent zeroed).
    pub fn coeffs_in(&self, var: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(var);
        if d < 0 {
            return vec![];
        }
        let mut out = vec![MultiPoly::zero(self.vars); d as usize + 1];
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut ne = e.clone();
            ne[var] = 0;
            out[k].add_term(ne, c.clone());
        }
        out
    }

    /// Re-embed into a ring with more variables (exponents padded).
    pub fn with_vars(&self, new_vars: usize) -> MultiPoly {
        assert!(new_vars >= self.vars);
        let mut out = MultiPoly::zero(new_vars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.resize(new_vars, 0);
            out.add_term(ne, c.clone());
        }
        out
    }

    /// True iff the variable occurs in some term.
    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] > 0)
    }

    /// Replace a single variable by a polynomial over the same ring.
    pub fn substitute_var(&self, var: usize, image: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, image.vars);
        let mut out = MultiPoly::zero(self.vars);
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest[var];
            rest[var] = 0;
            let mut term = MultiPoly::zero(self.vars);
            term.add_term(rest, c.clone());
            if k > 0 {
                term = term.mul(&image.pow(k));
            }
            out = out.add(&term);
        }
        out
    }

    /// Leading term in graded lexicographic order.
    fn grlex_leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().max_by(|(ea, _), (eb, _)| {
            let da: u64 = ea.iter().map(|&x| x as u64).sum();
            let db: u64 = eb.iter().map(|&x| x as u64).sum();
            da.cmp(&db).then_with(|| ea.cmp(eb))
        })
    }

    /// Exact division; `None` when the divisor does not divide exactly.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        assert_eq!(self.vars, divisor.vars);
        if self.is_zero() {
            return Some(MultiPoly::zero(self.vars));
        }
        if divisor.is_zero() {
            return None;
        }
        let (dlead_e, dlead_c) = divisor.grlex_leading().expect("nonzero divisor");
        let dlead_e = dlead_e.clone();
        let dlead_c = dlead_c.clone();
        let mut rem = self.clone();
        let mut quo = MultiPoly::zero(self.vars);
        while !rem.is_zero() {
            let (rlead_e, rlead_c) = rem.grlex_leading().expect("nonzero remainder");
            let mut qe = Vec::with_capacity(self.vars);
            for (&re, &de) in rlead_e.iter().zip(&dlead_e) {
                if re < de {
                    return None;
                }
                qe.push(re - de);
            }
            let qc = rlead_c / &dlead_c;
            let mut mono = MultiPoly::zero(self.vars);
            mono.add_term(qe, qc);
            quo = quo.add(&mono);
            rem = rem.sub(&mono.mul(divisor));
        }
        Some(quo)
    }

    /// Terms sorted graded-lexicographically, largest first.
    fn sorted_terms(&self) -> Vec<(&Vec<u32>, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(ea, _), (eb, _)| {
            let da: u64 = ea.iter().map(|&x| x as u64).sum();
            let db: u64 = eb.iter().map(|&x| x as u64).sum();
            match db.cmp(&da) {
                Ordering::Equal => eb.cmp(ea),
                o => o,
            }
        });
        v
    }

    /// Leading term in pure lexicographic order (X1 > X2 > ...).
    pub fn lex_leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Canonical text form: sum of `c * X1^e1*...*Xn^en` terms.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, c) in self.sorted_terms() {
            let mut factors = Vec::new();
            for (i, &ei) in e.iter().enumerate() {
                if ei == 1 {
                    factors.push(format!("X{}", i + 1));
                } else if ei > 1 {
                    factors.push(format!("X{}^{}", i + 1, ei));
                }
            }
            if factors.is_empty() {
                parts.push(format_rational(c));
            } else if c.is_one() {
                parts.push(factors.join("*"));
            } else if (-c.clone()).is_one() {
                parts.push(format!("-{}", factors.join("*")));
            } else {
                parts.push(format!("{} * {}", format_rational(c), factors.join("*")));
            }
        }
        parts.join(" + ")
    }

    /// Parse the textual term-sum form produced by [`MultiPoly::to_text`].
    ///
    /// Accepts forms like `3/2 * X1^2*X2 + -1 * X3 + 5` and `X1 - X2`.
    pub fn parse(vars: usize, s: &str) -> Result<Self> {
        let mut p = Self::zero(vars);
        // split on '+' and treat '-' as '+ -' except inside exponents
        let normalized = s.replace('-', "+-");
        for raw in normalized.split('+') {
            let t = raw.trim();
            if t.is_empty() {
                continue;
            }
            let (expo, coeff) = parse_term(vars, t)?;
            p.add_term(expo, coeff);
        }
        Ok(p)
    }
}

fn parse_term(vars: usize, t: &str) -> Result<(Vec<u32>, Rational)> {
    let mut coeff = Rational::one();
    let mut negate = false;
    let mut expo = vec![0u32; vars];
    let mut rest = t.trim();
    if let Some(r) = rest.strip_prefix('-') {
        negate = true;
        rest = r.trim();
    }
    for factor in rest.split('*') {
        let f = factor.trim();
        if f.is_empty() {
            continue;
        }
        if let Some(body) = f.strip_prefix('X').or_else(|| f.strip_prefix('x')) {
            let (idx_s, pow_s) = match body.split_once('^') {
                Some((i, p)) => (i, p),
                None => (body, "1"),
            };
            let idx: usize = idx_s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable in term {t:?}")))?;
            if idx == 0 || idx > vars {
                return Err(Error::Parse(format!(
                    "variable X{idx} out of range 1..={vars}"
                )));
            }
            let pw: u32 = pow_s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in term {t:?}")))?;
            expo[idx - 1] += pw;
        } else {
            coeff *= parse_rational(f)?;
        }
    }
    if negate {
        coeff = -coeff;
    }
    Ok((expo, coeff))
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.vars, self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::{rat, rat_int};

    fn xsq_plus_y() -> MultiPoly {
        // X1^2 + X2
        let mut p = MultiPoly::zero(2);
        p.add_term(vec![2, 0], rat_int(1));
        p.add_term(vec![0, 1], rat_int(1));
        p
    }

    #[test]
    fn eval_basic() {
        let p = xsq_plus_y();
        assert_eq!(p.eval(&[rat_int(2), rat_int(3)]).unwrap(), rat_int(7));
        let z = MultiPoly::zero(2);
        assert_eq!(z.eval(&[rat_int(5), rat_int(-1)]).unwrap(), rat_int(0));
        assert!(p.eval(&[rat_int(1)]).is_err());
    }

    #[test]
    fn degree_conventions() {
        assert_eq!(MultiPoly::zero(3).degree(), -1);
        assert_eq!(MultiPoly::one(3).degree(), 0);
        assert_eq!(xsq_plus_y().degree(), 2);
        assert_eq!(xsq_plus_y().degree_in(0), 2);
        assert_eq!(xsq_plus_y().degree_in(1), 1);
    }

    #[test]
    fn arith_and_pow() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let s = x.add(&y);
        let sq = s.pow(2);
        // (x+y)^2 = x^2 + 2xy + y^2
        assert_eq!(sq.coeff(&[2, 0]), rat_int(1));
        assert_eq!(sq.coeff(&[1, 1]), rat_int(2));
        assert_eq!(sq.coeff(&[0, 2]), rat_int(1));
        assert!(s.sub(&s).is_zero());
    }

    #[test]
    fn compose_matches_eval() {
        let p = xsq_plus_y();
        // images: X1 <- U+V, X2 <- U*V  (2 fresh vars)
        let u = MultiPoly::var(2, 0);
        let v = MultiPoly::var(2, 1);
        let images = vec![u.add(&v), u.mul(&v)];
        let q = p.compose(&images).unwrap();
        let at = [rat(1, 2), rat(3, 1)];
        let lhs = q.eval(&at).unwrap();
        let x1 = images[0].eval(&at).unwrap();
        let x2 = images[1].eval(&at).unwrap();
        let rhs = p.eval(&[x1, x2]).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_roundtrip() {
        let p = xsq_plus_y().scale(&rat(3, 2)).sub(&MultiPoly::one(2));
        let s = p.to_text();
        let q = MultiPoly::parse(2, &s).unwrap();
        assert_eq!(p, q);
        let r = MultiPoly::parse(2, "X1 - X2").unwrap();
        assert_eq!(r.coeff(&[1, 0]), rat_int(1));
        assert_eq!(r.coeff(&[0, 1]), rat_int(-1));
    }
}
