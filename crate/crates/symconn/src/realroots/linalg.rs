//! Exact dense linear algebra over the rationals, sized for the small
//! systems arising in sign determination and minimal-polynomial search.

use num_traits::Zero;

use crate::polycore::rational::Rational;

/// Solve `m * x = rhs` by Gaussian elimination. Returns `None` when the
/// matrix is singular.
pub(crate) fn solve(mut m: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = m[col][col].clone().recip();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        rhs[col] *= &inv;
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..n {
                let delta = &m[col][c] * &factor;
                m[r][c] -= delta;
            }
            let delta = &rhs[col] * &factor;
            rhs[r] -= delta;
        }
    }
    Some(rhs)
}

/// Incremental row-space tracker: rows can be offered one at a time and
/// are accepted only when they enlarge the span.
pub(crate) struct RankTracker {
    ncols: usize,
    // reduced rows with their pivot column
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RankTracker {
    pub fn new(ncols: usize) -> Self {
        RankTracker {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Returns true (and absorbs the row) iff it is independent of the
    /// rows accepted so far.
    pub fn offer(&mut self, row: &[Rational]) -> bool {
        debug_assert_eq!(row.len(), self.ncols);
        let mut v = row.to_vec();
        for (pivot, basis) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (x, b) in v.iter_mut().zip(basis) {
                *x -= b * &factor;
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(pivot) => {
                let inv = v[pivot].clone().recip();
                for x in v.iter_mut() {
                    *x *= &inv;
                }
                self.rows.push((pivot, v));
                true
            }
        }
    }
}

/// Finds the first linear dependence among a stream of vectors, tracking
/// the combination coefficients. Used for minimal polynomials: feed
/// 1, w, w^2, ... and the first dependence gives the monic minimal
/// polynomial coefficients.
pub(crate) struct DependenceFinder {
    ncols: usize,
    // (pivot column, reduced vector, combination over inputs so far)
    basis: Vec<(usize, Vec<Rational>, Vec<Rational>)>,
    fed: usize,
}

impl DependenceFinder {
    pub fn new(ncols: usize) -> Self {
        DependenceFinder {
            ncols,
            basis: Vec::new(),
            fed: 0,
        }
    }

    /// Feed the next vector. On linear dependence, returns coefficients
    /// `c_0..c_k` with `sum c_i v_i = 0` and `c_k = 1` for the newest vector.
    pub fn feed(&mut self, vec: &[Rational]) -> Option<Vec<Rational>> {
        debug_assert_eq!(vec.len(), self.ncols);
        let mut v = vec.to_vec();
        let mut combo = vec![Rational::zero(); self.fed + 1];
        combo[self.fed] = Rational::from_integer(1.into());
        for (pivot, basis, bcombo) in &self.basis {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (x, b) in v.iter_mut().zip(basis) {
                *x -= b * &factor;
            }
            for (c, b) in combo.iter_mut().zip(bcombo) {
                *c -= b * &factor;
            }
        }
        self.fed += 1;
        match v.iter().position(|x| !x.is_zero()) {
            None => Some(combo),
            Some(pivot) => {
                let inv = v[pivot].clone().recip();
                for x in v.iter_mut() {
                    *x *= &inv;
                }
                for c in combo.iter_mut() {
                    *c *= &inv;
                }
                combo.resize(self.fed, Rational::zero());
                self.basis.push((pivot, v, combo));
                None
            }
        }
    }
}
