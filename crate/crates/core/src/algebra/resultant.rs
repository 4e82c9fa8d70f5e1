//! Resultants by the subresultant polynomial remainder sequence.
//!
//! The coefficient ring is abstract so the same routine serves integer,
//! rational and multivariate coefficients. Univariate inputs are dense
//! coefficient vectors, lowest degree first.

use super::multipoly::MultiPoly;
use super::ring::Ring;
use crate::error::{Error, Result};

fn trim<T: Ring>(mut v: Vec<T>) -> Vec<T> {
    while v.last().is_some_and(Ring::is_zero_elem) {
        v.pop();
    }
    v
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`, computed without division.
pub fn pseudo_rem<T: Ring>(a: &[T], b: &[T]) -> Vec<T> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return r;
    }
    let mut pending = (r.len() - 1 - db + 1) as u32;
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let lr = r.last().expect("nonempty").clone();
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&lr.mul(bc));
        }
        r = trim(r);
        pending -= 1;
    }
    if pending > 0 {
        let f = lb.pow(pending);
        r = r.into_iter().map(|c| c.mul(&f)).collect();
    }
    r
}

/// Sylvester resultant of two dense univariate polynomials. The sign
/// matches the determinant of the Sylvester matrix with the rows of `a`
/// first. Either input may be zero, in which case the result is zero.
pub fn resultant_dense<T: Ring>(a: &[T], b: &[T], zero: &T) -> T {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    if a.is_empty() || b.is_empty() {
        return zero.zero_like();
    }
    let one = zero.one_like();
    let mut sign_flip = false;
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            sign_flip = true;
        }
    }
    let signed = |x: T, flip: bool| if flip { x.neg() } else { x };
    if b.len() == 1 {
        return signed(b[0].pow((a.len() - 1) as u32), sign_flip);
    }
    let (mut g, mut h) = (one.clone(), one);
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign_flip = !sign_flip;
        }
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return zero.zero_like();
        }
        let divisor = g.mul(&h.pow(delta));
        a = b;
        b = r.iter().map(|c| c.exact_div(&divisor).expect("subresultant division is exact")).collect();
        g = a.last().expect("nonempty").clone();
        if delta != 0 {
            h = g.pow(delta).exact_div(&h.pow(delta - 1)).expect("subresultant division is exact");
        }
        if b.len() == 1 {
            let da = (a.len() - 1) as u32;
            let last = b[0].pow(da).exact_div(&h.pow(da - 1)).expect("subresultant division is exact");
            return signed(last, sign_flip);
        }
    }
}

/// Resultant of `f` and `g` with respect to the variable `var`. The result
/// lives over the same variable list and no longer involves `var`.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, var: &str) -> Result<MultiPoly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::precondition("resultant of a zero polynomial"));
    }
    let v = f.var_index(var).ok_or_else(|| Error::precondition(format!("variable {var} is not declared")))?;
    if f.variables() != g.variables() {
        return Err(Error::precondition("resultant operands use different variable lists"));
    }
    if f.degree_in(v) == Some(0) && g.degree_in(v) == Some(0) {
        return Err(Error::DegenerateInput(var.to_string()));
    }
    Ok(resultant_dense(&f.coeffs_in(v), &g.coeffs_in(v), f))
}
