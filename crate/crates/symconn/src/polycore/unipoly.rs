//! Dense univariate polynomials over the rationals, plus the signed
//! subresultant machinery used for Tarski queries.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polycore::rational::{format_rational, sign, Rational};

/// Coefficients low to high; the last entry is nonzero unless the
/// polynomial is zero (empty vector).
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = UniPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// Build from low-to-high coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(BigInt::from(c))).collect())
    }

    /// The monomial `c * T^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|k| k * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from(BigInt::from(i)))
            .collect();
        Self::new(coeffs)
    }

    /// Euclidean division: returns `(quotient, remainder)`.
    pub fn divmod(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree();
        let mut rem = self.clone();
        let mut quo = vec![Rational::zero(); (self.degree() - dd).max(0) as usize + 1];
        let lead = divisor.leading();
        while !rem.is_zero() && rem.degree() >= dd {
            let shift = (rem.degree() - dd) as usize;
            let c = rem.leading() / lead.clone();
            quo[shift] = c.clone();
            let sub = divisor.mul(&Self::monomial(c, shift));
            rem = rem.sub(&sub);
        }
        (Self::new(quo), rem)
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divmod(divisor).1
    }

    /// Monic form (unit leading coefficient); zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = Rational::one() / self.leading();
        self.scale(&inv)
    }

    /// Normalize to integer coefficients with positive content 1, keeping
    /// the sign of every value (the scaling factor is positive).
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if g.is_zero() {
            return Self::zero();
        }
        Self::new(
            ints.iter()
                .map(|c| Rational::from(c / &g))
                .collect::<Vec<_>>(),
        )
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Self::one();
        let mut s1 = Self::zero();
        let mut t0 = Self::zero();
        let mut t1 = Self::one();
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (Self::zero(), Self::zero(), Self::zero());
        }
        let inv = Rational::one() / r0.leading();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Squarefree part `self / gcd(self, self')`, monic.
    pub fn squarefree(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if self.degree() == 0 {
            return Self::one();
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.divmod(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    /// Sign of the polynomial at +infinity.
    pub fn sign_at_pos_inf(&self) -> i8 {
        sign(&self.leading())
    }

    /// Sign of the polynomial at -infinity.
    pub fn sign_at_neg_inf(&self) -> i8 {
        let s = sign(&self.leading());
        if self.degree() % 2 == 0 {
            s
        } else {
            -s
        }
    }

    /// Cauchy bound: all real roots lie in `(-b, b)`.
    pub fn root_bound(&self) -> Rational {
        if self.degree() <= 0 {
            return Rational::one();
        }
        let lead = self.leading();
        let mut m = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = (c / &lead).abs();
            if a > m {
                m = a;
            }
        }
        m + Rational::one()
    }

    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let body = match k {
                0 => format_rational(c),
                _ => {
                    let var = if k == 1 {
                        "T".to_string()
                    } else {
                        format!("T^{k}")
                    };
                    if c.is_one() {
                        var
                    } else if (-c.clone()).is_one() {
                        format!("-{var}")
                    } else {
                        format!("{} * {var}", format_rational(c))
                    }
                }
            };
            parts.push(body);
        }
        parts.join(" + ")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self.to_text())
    }
}

/// The signed remainder (Sturm–Habicht style) sequence of `(q, r)`.
///
/// Each element is normalized to a primitive integer polynomial by a
/// positive factor, which preserves the sign of every evaluation and
/// therefore all sign-variation counts. Stops before the zero polynomial.
pub fn signed_subresultants(q: &UniPoly, r: &UniPoly) -> Result<Vec<UniPoly>> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut seq = vec![q.primitive()];
    if r.is_zero() {
        return Ok(seq);
    }
    seq.push(r.primitive());
    loop {
        let n = seq.len();
        let rem = seq[n - 2].rem(&seq[n - 1]);
        if rem.is_zero() {
            break;
        }
        seq.push(rem.neg().primitive());
    }
    Ok(seq)
}

/// Sign variations of a sequence of values, zeros skipped.
pub fn sign_variations(signs: impl IntoIterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Variation difference `Var(-inf) - Var(+inf)` of a polynomial sequence.
pub fn variation_difference(seq: &[UniPoly]) -> i64 {
    let at_neg = sign_variations(seq.iter().map(|p| p.sign_at_neg_inf()));
    let at_pos = sign_variations(seq.iter().map(|p| p.sign_at_pos_inf()));
    at_neg as i64 - at_pos as i64
}

/// Sign variations of the sequence evaluated at a rational point.
pub fn variations_at(seq: &[UniPoly], x: &Rational) -> usize {
    sign_variations(seq.iter().map(|p| sign(&p.eval(x))))
}
