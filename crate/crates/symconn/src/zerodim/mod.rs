//! Zero-dimensional parametrization of the weighted power-sum systems and
//! validity verification of parametrizations.
//!
//! The solver introduces a linear form `T = sum c_i X_i`, consumes the
//! linear equations of the system as exact pivots, eliminates the
//! remaining variables by iterated resultants, and recovers each
//! coordinate as a polynomial in `T` through gcd computations in the
//! quotient ring (splitting the modulus at zero divisors). Forms are
//! drawn from a fixed deterministic sequence; a form is rejected whenever
//! two distinct solutions share a `T`-value.

mod elim;
mod modring;

use std::collections::BTreeMap;

use log::warn;
use num_traits::Zero;

use crate::compositions::Composition;
use crate::error::{Error, Result};
use crate::polycore::multipoly::MultiPoly;
use crate::polycore::rational::Rational;
use crate::polycore::unipoly::UniPoly;

use elim::resultant_wrt;
use modring::{crt_combine, gcd_list_mod, vp_degree, vp_is_zero, vp_trim, VPoly};

/// Desk-scale cap on the number of variables.
pub const MAX_DIMENSION: usize = 4;

/// How many separating-form candidates are tried before giving up.
pub const FORM_TRIAL_BUDGET: usize = 200;

/// A zero-dimensional parametrization: the roots of `q` map bijectively
/// onto the solution set via `X_i = q_i(theta) / q0(theta)`.
#[derive(Clone, Debug)]
pub struct ZeroDimParam {
    q: UniPoly,
    q0: UniPoly,
    coords: Vec<UniPoly>,
    separating_form: Vec<i64>,
}

impl ZeroDimParam {
    pub fn q(&self) -> &UniPoly {
        &self.q
    }

    pub fn q0(&self) -> &UniPoly {
        &self.q0
    }

    pub fn coords(&self) -> &[UniPoly] {
        &self.coords
    }

    pub fn separating_form(&self) -> &[i64] {
        &self.separating_form
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    /// Number of distinct solutions, i.e. the degree of the squarefree `q`.
    pub fn solution_count(&self) -> usize {
        self.q.degree().max(0) as usize
    }
}

/// The equations `sum_j lambda_j X_j^i - a_i` for `i = 1..=d`.
pub fn build_system(lambda: &Composition, fiber: &[Rational]) -> Result<Vec<MultiPoly>> {
    let d = lambda.len();
    if fiber.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: fiber.len(),
        });
    }
    let mut out = Vec::with_capacity(d);
    for (i, a) in fiber.iter().enumerate() {
        let mut p = MultiPoly::zero(d);
        for (j, &lam) in lambda.parts().iter().enumerate() {
            let mut e = vec![0u32; d];
            e[j] = (i + 1) as u32;
            p.add_term(e, Rational::from_integer((lam as i64).into()));
        }
        p.add_term(vec![0; d], -a.clone());
        out.push(p);
    }
    Ok(out)
}

/// True iff substituting `X_i <- q_i/q0` into every equation yields a
/// numerator divisible by `q`.
pub fn verify_parametrization(param: &ZeroDimParam, system: &[MultiPoly]) -> bool {
    for f in system {
        if f.vars() != param.coords.len() {
            return false;
        }
        let num = substitution_numerator(f, &param.coords, &param.q0, &param.q);
        if !num.rem(&param.q).is_zero() {
            return false;
        }
    }
    true
}

/// Numerator of `f(q_1/q0, ..., q_d/q0)` after clearing `q0^deg(f)`,
/// reduced modulo `q` along the way.
fn substitution_numerator(
    f: &MultiPoly,
    coords: &[UniPoly],
    q0: &UniPoly,
    q: &UniPoly,
) -> UniPoly {
    let deg = f.degree().max(0) as u32;
    let reduce = |p: UniPoly| -> UniPoly {
        if q.degree() > 0 {
            p.rem(q)
        } else {
            p
        }
    };
    let mut acc = UniPoly::zero();
    for (expo, coeff) in f.terms() {
        let total: u32 = expo.iter().sum();
        let mut term = UniPoly::constant(coeff.clone());
        for (i, &e) in expo.iter().enumerate() {
            if e > 0 {
                term = reduce(term.mul(&coords[i].pow(e)));
            }
        }
        if deg > total {
            term = reduce(term.mul(&q0.pow(deg - total)));
        }
        acc = acc.add(&term);
    }
    acc
}

/// Deterministic scalar sequence 0, 1, -1, 2, -2, ...
fn form_scalar(j: usize) -> i64 {
    if j == 0 {
        0
    } else if j % 2 == 1 {
        ((j + 1) / 2) as i64
    } else {
        -((j / 2) as i64)
    }
}

/// Candidate separating forms: index tuples enumerated by total level,
/// lexicographic within a level, mapped through the scalar sequence.
fn separating_forms(d: usize) -> impl Iterator<Item = Vec<i64>> {
    (0usize..).flat_map(move |total| {
        let mut out = Vec::new();
        let mut cur = vec![0usize; d];
        fn rec(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<i64>>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(cur.iter().map(|&j| form_scalar(j)).collect());
                return;
            }
            for take in 0..=left {
                cur[i] = take;
                rec(i + 1, left - take, cur, out);
            }
        }
        rec(0, total, &mut cur, &mut out);
        out
    })
}

enum FormOutcome {
    Accept(ZeroDimParam),
    Reject { suspicion: bool },
}

/// Parametrize the solution set of a square zero-dimensional system.
pub fn solve_zero_dim(system: &[MultiPoly]) -> Result<ZeroDimParam> {
    if system.is_empty() {
        return Err(Error::Input("empty system".into()));
    }
    let d = system[0].vars();
    for f in system {
        if f.vars() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: f.vars(),
            });
        }
    }
    if d > MAX_DIMENSION {
        return Err(Error::ScaleExceeded(format!(
            "solver is capped at {MAX_DIMENSION} variables, got {d}"
        )));
    }
    if system.len() != d {
        return Err(Error::Input(format!(
            "expected a square system ({d} equations), got {}",
            system.len()
        )));
    }
    for v in 0..d {
        if !system.iter().any(|f| f.uses_var(v)) {
            return Err(Error::NonZeroDimensional(format!(
                "variable X{} is unconstrained",
                v + 1
            )));
        }
    }
    let mut all_suspicious = true;
    let mut tried = 0usize;
    for form in separating_forms(d).take(FORM_TRIAL_BUDGET) {
        tried += 1;
        match try_form(system, &form)? {
            FormOutcome::Accept(param) => {
                let bound = (d as u64).pow(d as u32);
                if param.solution_count() as u64 > bound {
                    return Err(Error::Internal(format!(
                        "solution count {} exceeds the Bezout bound {bound}",
                        param.solution_count()
                    )));
                }
                return Ok(param);
            }
            FormOutcome::Reject { suspicion } => {
                all_suspicious &= suspicion;
            }
        }
    }
    if all_suspicious {
        Err(Error::NonZeroDimensional(
            "elimination degenerated for every candidate form".into(),
        ))
    } else {
        Err(Error::SeparatingFormExhausted {
            trials: tried,
            detail: "no candidate linear form separated the solutions".into(),
        })
    }
}

/// Solve if possible with one specific linear form `T = sum c_i X_i`.
fn try_form(system: &[MultiPoly], form: &[i64]) -> Result<FormOutcome> {
    let d = system[0].vars();
    let tvar = d; // variables 0..d are X, index d is T
    let lifted: Vec<MultiPoly> = system.iter().map(|f| f.with_vars(d + 1)).collect();
    let mut lform = MultiPoly::zero(d + 1);
    for (i, &c) in form.iter().enumerate() {
        if c != 0 {
            let mut e = vec![0u32; d + 1];
            e[i] = 1;
            lform.add_term(e, Rational::from_integer(c.into()));
        }
    }
    let mut e = vec![0u32; d + 1];
    e[tvar] = 1;
    lform.add_term(e, Rational::from_integer((-1).into()));

    // Phase 1: consume affine equations as exact pivots.
    let mut subst: Vec<(usize, MultiPoly)> = Vec::new();
    let mut pile: Vec<UniPoly> = Vec::new();
    let mut actives: Vec<MultiPoly> = Vec::new();
    let apply = |p: &MultiPoly, subst: &[(usize, MultiPoly)]| -> MultiPoly {
        let mut out = p.clone();
        for (v, expr) in subst {
            out = out.substitute_var(*v, expr);
        }
        out
    };
    let mut affine: Vec<MultiPoly> = Vec::new();
    let mut nonlinear: Vec<MultiPoly> = Vec::new();
    for f in &lifted {
        if f.degree() <= 1 {
            affine.push(f.clone());
        } else {
            nonlinear.push(f.clone());
        }
    }
    affine.push(lform);
    for p in affine {
        let p = apply(&p, &subst);
        if p.is_zero() {
            continue;
        }
        if p.degree() == 0 {
            // nonzero constant: inconsistent system, no solutions
            return Ok(FormOutcome::Accept(empty_param(d, form)));
        }
        let pivot = (0..d).rev().find(|&v| {
            let mut e = vec![0u32; d + 1];
            e[v] = 1;
            !p.coeff(&e).is_zero()
        });
        match pivot {
            Some(v) => {
                let mut e = vec![0u32; d + 1];
                e[v] = 1;
                let a = p.coeff(&e);
                // p = a*X_v + rest  =>  X_v = -rest/a
                let mut rest = p.clone();
                rest.add_term(e, -a.clone());
                let expr = rest.scale(&(-Rational::from_integer(1.into()) / a));
                for (_, old) in subst.iter_mut() {
                    *old = old.substitute_var(v, &expr);
                }
                subst.push((v, expr));
            }
            None => match to_unipoly_in(&p, tvar) {
                Some(u) => pile.push(u),
                None => {
                    return Err(Error::Internal(
                        "affine residue was neither constant nor univariate".into(),
                    ))
                }
            },
        }
    }
    for f in &nonlinear {
        let p = apply(f, &subst);
        if p.is_zero() {
            continue;
        }
        if p.degree() == 0 {
            return Ok(FormOutcome::Accept(empty_param(d, form)));
        }
        if let Some(u) = to_unipoly_in(&p, tvar) {
            pile.push(u);
            continue;
        }
        actives.push(p);
    }

    // Phase 2: eliminate the remaining variables, highest first.
    let pivoted: Vec<usize> = subst.iter().map(|(v, _)| *v).collect();
    let unknowns: Vec<usize> = (0..d).filter(|v| !pivoted.contains(v)).collect();
    let mut snapshots: Vec<(usize, Vec<MultiPoly>)> = Vec::new();
    for &v in unknowns.iter().rev() {
        if !actives.iter().any(|p| p.uses_var(v)) {
            return Ok(FormOutcome::Reject { suspicion: true });
        }
        snapshots.push((v, actives.clone()));
        let pivot_idx = actives
            .iter()
            .enumerate()
            .filter(|(_, p)| p.uses_var(v))
            .min_by_key(|(_, p)| p.degree_in(v))
            .map(|(i, _)| i)
            .expect("some active uses v");
        let pivot = actives.remove(pivot_idx);
        let mut next = Vec::new();
        for p in actives.drain(..) {
            if !p.uses_var(v) {
                next.push(p);
                continue;
            }
            let r = resultant_wrt(&pivot, &p, v);
            if r.is_zero() {
                return Ok(FormOutcome::Reject { suspicion: true });
            }
            if r.degree() == 0 {
                return Ok(FormOutcome::Accept(empty_param(d, form)));
            }
            if let Some(u) = to_unipoly_in(&r, tvar) {
                pile.push(u);
            } else {
                next.push(r);
            }
        }
        actives = next;
    }
    if !actives.is_empty() {
        return Err(Error::Internal(
            "active equations remained after eliminating all unknowns".into(),
        ));
    }
    if pile.is_empty() {
        return Ok(FormOutcome::Reject { suspicion: true });
    }
    let mut base = pile[0].clone();
    for p in &pile[1..] {
        base = base.gcd(p);
        if base.degree() == 0 {
            return Ok(FormOutcome::Accept(empty_param(d, form)));
        }
    }
    let q_start = base.squarefree();

    // Phase 3: recover the unknowns, last eliminated first, splitting the
    // modulus whenever a gcd branches.
    let mut parts: Vec<(UniPoly, BTreeMap<usize, UniPoly>)> =
        vec![(q_start, BTreeMap::new())];
    for (v, snapshot) in snapshots.iter().rev() {
        let mut new_parts = Vec::new();
        for (q_part, coords) in parts {
            let mut inputs: Vec<VPoly> = Vec::new();
            for p in snapshot {
                inputs.push(eval_to_vpoly(p, &q_part, &coords, Some(*v), tvar)?);
            }
            for br in gcd_list_mod(&q_part, &inputs)? {
                let modulus = br.modulus;
                let mut g = br.data;
                vp_trim(&mut g, &modulus);
                if vp_is_zero(&g) {
                    return Ok(FormOutcome::Reject { suspicion: true });
                }
                match vp_degree(&g) {
                    0 => {
                        // unit gcd: no solution over these roots
                        continue;
                    }
                    1 => {
                        let mut c = coords.clone();
                        c.insert(*v, g[0].neg().rem(&modulus));
                        new_parts.push((modulus, c));
                    }
                    j => {
                        // accept only a perfect j-th power (one point of
                        // multiplicity j); otherwise two solutions share
                        // this T-value and the form does not separate
                        let j_rat = Rational::from_integer((j as i64).into());
                        let w = g[j as usize - 1]
                            .scale(&(Rational::from_integer(1.into()) / j_rat))
                            .rem(&modulus);
                        if is_perfect_power(&g, &w, j as usize, &modulus) {
                            let mut c = coords.clone();
                            c.insert(*v, w.neg().rem(&modulus));
                            new_parts.push((modulus, c));
                        } else {
                            return Ok(FormOutcome::Reject { suspicion: false });
                        }
                    }
                }
            }
        }
        parts = new_parts;
        if parts.is_empty() {
            return Ok(FormOutcome::Accept(empty_param(d, form)));
        }
    }

    // Pivoted coordinates from the substitution chain, then pruning of
    // branch roots that fail any original equation.
    let mut finished: Vec<(UniPoly, Vec<UniPoly>)> = Vec::new();
    'part: for (q_part, coords) in &parts {
        let mut full = vec![UniPoly::zero(); d];
        for (v, c) in coords {
            full[*v] = c.clone();
        }
        for (v, expr) in &subst {
            let vp = eval_to_vpoly(expr, q_part, coords, None, tvar)?;
            if vp_degree(&vp) > 0 {
                return Err(Error::Internal(
                    "pivot expression still contains an unknown".into(),
                ));
            }
            full[*v] = vp.first().cloned().unwrap_or_else(UniPoly::zero);
        }
        let mut q_ok = q_part.clone();
        for f in system {
            let num = substitution_numerator(f, &full, &UniPoly::one(), &q_ok);
            let r = num.rem(&q_ok);
            if !r.is_zero() {
                q_ok = q_ok.gcd(&r);
                if q_ok.degree() <= 0 {
                    continue 'part;
                }
            }
        }
        let full = full.into_iter().map(|c| c.rem(&q_ok)).collect();
        finished.push((q_ok, full));
    }
    if finished.is_empty() {
        return Ok(FormOutcome::Accept(empty_param(d, form)));
    }

    // Merge branches by Chinese remainders.
    let (q, coords) = if finished.len() == 1 {
        finished.into_iter().next().expect("nonempty")
    } else {
        let mut q_all = UniPoly::one();
        for (qp, _) in &finished {
            q_all = q_all.mul(qp);
        }
        let q_all = q_all.monic();
        let mut coords = Vec::with_capacity(d);
        for i in 0..d {
            let pieces: Vec<(UniPoly, UniPoly)> = finished
                .iter()
                .map(|(qp, cs)| (qp.clone(), cs[i].clone()))
                .collect();
            let (qm, c) = crt_combine(&pieces)?;
            debug_assert_eq!(qm, q_all);
            coords.push(c);
        }
        (q_all, coords)
    };

    let param = ZeroDimParam {
        q,
        q0: UniPoly::one(),
        coords,
        separating_form: form.to_vec(),
    };
    // consistency of the linear form itself
    let mut tpoly = UniPoly::zero();
    for (i, &c) in form.iter().enumerate() {
        tpoly = tpoly.add(&param.coords[i].scale(&Rational::from_integer(c.into())));
    }
    tpoly = tpoly.sub(&UniPoly::monomial(Rational::from_integer(1.into()), 1));
    if param.q.degree() > 0 && !tpoly.rem(&param.q).is_zero() {
        warn!("separating form failed self-consistency; rejecting");
        return Ok(FormOutcome::Reject { suspicion: false });
    }
    if !verify_parametrization(&param, system) {
        warn!("candidate parametrization failed verification; rejecting form");
        return Ok(FormOutcome::Reject { suspicion: false });
    }
    Ok(FormOutcome::Accept(param))
}

fn empty_param(d: usize, form: &[i64]) -> ZeroDimParam {
    ZeroDimParam {
        q: UniPoly::one(),
        q0: UniPoly::one(),
        coords: vec![UniPoly::zero(); d],
        separating_form: form.to_vec(),
    }
}

/// Check `g == (v + w)^j` coefficientwise modulo `q`.
fn is_perfect_power(g: &VPoly, w: &UniPoly, j: usize, q: &UniPoly) -> bool {
    let mut expansion: VPoly = vec![UniPoly::one()];
    for _ in 0..j {
        let mut next: VPoly = vec![UniPoly::zero(); expansion.len() + 1];
        for (k, c) in expansion.iter().enumerate() {
            next[k + 1] = next[k + 1].add(c);
            next[k] = next[k].add(&c.mul(w).rem(q));
        }
        for c in next.iter_mut() {
            *c = c.rem(q);
        }
        expansion = next;
    }
    if expansion.len() != g.len() {
        return false;
    }
    for (a, b) in expansion.iter().zip(g) {
        if !a.sub(b).rem(q).is_zero() {
            return false;
        }
    }
    true
}

/// Convert a polynomial supported on a single variable into a `UniPoly`.
fn to_unipoly_in(p: &MultiPoly, var: usize) -> Option<UniPoly> {
    for v in 0..p.vars() {
        if v != var && p.uses_var(v) {
            return None;
        }
    }
    let deg = p.degree_in(var).max(0) as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (e, c) in p.terms() {
        coeffs[e[var] as usize] = c.clone();
    }
    Some(UniPoly::new(coeffs))
}

/// Evaluate a polynomial into `(Q[T]/(q))[v]`: `T` maps to the ring
/// generator, recovered coordinates to their polynomials, `v` stays.
fn eval_to_vpoly(
    p: &MultiPoly,
    q: &UniPoly,
    coords: &BTreeMap<usize, UniPoly>,
    v: Option<usize>,
    tvar: usize,
) -> Result<VPoly> {
    let mut out: VPoly = Vec::new();
    for (expo, coeff) in p.terms() {
        let mut a = UniPoly::constant(coeff.clone());
        let mut vdeg = 0usize;
        for (i, &e) in expo.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if i == tvar {
                a = a.mul(&UniPoly::monomial(
                    Rational::from_integer(1.into()),
                    e as usize,
                ));
            } else if Some(i) == v {
                vdeg = e as usize;
            } else if let Some(c) = coords.get(&i) {
                a = a.mul(&c.pow(e));
            } else {
                return Err(Error::Internal(format!(
                    "variable X{} not yet recovered during evaluation",
                    i + 1
                )));
            }
            if q.degree() > 0 {
                a = a.rem(q);
            }
        }
        if out.len() <= vdeg {
            out.resize(vdeg + 1, UniPoly::zero());
        }
        out[vdeg] = out[vdeg].add(&a);
    }
    vp_trim(&mut out, q);
    Ok(out)
}
