//! Resultant-based variable elimination with polynomial matrix entries.

use crate::polycore::multipoly::MultiPoly;

/// Fraction-free determinant (Bareiss). Exact over polynomial entries.
fn det_bareiss(mut m: Vec<Vec<MultiPoly>>, vars: usize) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one(vars);
    }
    let mut sign_flip = false;
    let mut prev = MultiPoly::one(vars);
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return MultiPoly::zero(vars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step divides exactly");
            }
            m[i][k] = MultiPoly::zero(vars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

/// Resultant of `a` and `b` with respect to variable `v`, both of positive
/// degree in `v`. The result does not involve `v` and vanishes at every
/// common zero of `a` and `b`.
pub(crate) fn resultant_wrt(a: &MultiPoly, b: &MultiPoly, v: usize) -> MultiPoly {
    let vars = a.vars();
    let ca = a.coeffs_in(v);
    let cb = b.coeffs_in(v);
    let da = ca.len() - 1;
    let db = cb.len() - 1;
    assert!(da >= 1 && db >= 1, "resultant needs positive degrees");
    let n = da + db;
    let zero = MultiPoly::zero(vars);
    let mut m = vec![vec![zero; n]; n];
    for row in 0..db {
        for (k, c) in ca.iter().enumerate() {
            m[row][row + (da - k)] = c.clone();
        }
    }
    for row in 0..da {
        for (k, c) in cb.iter().enumerate() {
            m[db + row][row + (db - k)] = c.clone();
        }
    }
    det_bareiss(m, vars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::rat_int;
    use num_traits::Signed;

    #[test]
    fn resultant_of_univariate_pair() {
        // Res_x(x^2 - 2, x - 3) = 3^2 - 2 = 7 (up to sign convention)
        let a = MultiPoly::parse(1, "X1^2 - 2").unwrap();
        let b = MultiPoly::parse(1, "X1 - 3").unwrap();
        let r = resultant_wrt(&a, &b, 0);
        assert_eq!(r.eval(&[rat_int(0)]).unwrap().abs(), rat_int(7));
    }

    #[test]
    fn resultant_eliminates_common_zero() {
        // a = x^2 + y^2 - 5, b = x - y: common zeros have 2y^2 = 5
        let a = MultiPoly::parse(2, "X1^2 + X2^2 - 5").unwrap();
        let b = MultiPoly::parse(2, "X1 - X2").unwrap();
        let r = resultant_wrt(&a, &b, 0);
        assert_eq!(r.degree_in(0), 0);
        let prop = MultiPoly::parse(2, "2*X2^2 - 5").unwrap();
        let q = r.div_exact(&prop);
        assert!(q.is_some(), "resultant should be a multiple of 2y^2-5");
    }

    #[test]
    fn shared_factor_gives_zero() {
        let a = MultiPoly::parse(2, "X1*X2").unwrap();
        let b = MultiPoly::parse(2, "X1*X2 + X1").unwrap();
        // both share the factor x (in variable X1)
        let r = resultant_wrt(&a, &b, 0);
        assert!(r.is_zero());
    }
}
