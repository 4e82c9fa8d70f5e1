//! Dense univariate polynomials over the integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::resultant::pseudo_rem;

/// Coefficients lowest degree first with no trailing zeros; the zero
/// polynomial has no coefficients. Serializes as an array of decimal
/// strings.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Clears denominators; the result is an integer multiple of the input.
    pub fn from_rationals(coeffs: &[BigRational]) -> Self {
        let l = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        Self::new(coeffs.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x - r`.
    pub fn linear_root(r: i64) -> Self {
        Self::from_i64(&[-r, 1])
    }

    /// `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[n] = BigInt::one();
        Self::new(c)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    pub fn is_normalized(&self) -> bool {
        !self.is_zero() && self.leading().is_positive() && self.content().is_one()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.get(i) + o.get(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.get(i) - o.get(i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| acc.mul(inner).add(&Self::new(vec![c.clone()])))
    }

    pub fn get(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    /// Quotient when `d` divides `self` in Z[x].
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < d.degree() {
            return None;
        }
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let ld = d.leading();
        let mut q = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let (qk, rem) = r[k + dd].div_rem(&ld);
            if !rem.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                r[k + i] -= &qk * c;
            }
            q[k] = qk;
        }
        r.iter().all(Zero::is_zero).then(|| Self::new(q))
    }

    /// Greatest common divisor with positive leading coefficient, via
    /// primitive remainder sequences.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.normalize();
        }
        if o.is_zero() {
            return self.normalize();
        }
        let c = self.content().gcd(&o.content());
        let (mut a, mut b) = (self.normalize(), o.normalize());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = Self::new(pseudo_rem(&a.coeffs, &b.coeffs));
            a = b;
            b = r.normalize();
        }
        a.normalize().scale(&c)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Largest absolute coefficient.
    pub fn max_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Parses an ascending list of decimal coefficient strings.
    pub fn from_decimal_strings<S: AsRef<str>>(items: &[S]) -> Result<Self, String> {
        items
            .iter()
            .map(|s| s.as_ref().trim().parse::<BigInt>().map_err(|e| format!("bad coefficient {:?}: {e}", s.as_ref())))
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

/// Ordered by degree, then by coefficients from the top down.
impl Ord for UniPoly {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.coeffs.len().cmp(&o.coeffs.len()).then_with(|| self.coeffs.iter().rev().cmp(o.coeffs.iter().rev()))
    }
}

impl PartialOrd for UniPoly {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl Serialize for UniPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        Self::from_decimal_strings(&items).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64(c)
    }

    #[test]
    fn normalization() {
        let q = p(&[4, -6, -2]);
        assert_eq!(q.normalize(), p(&[-2, 3, 1]));
        assert!(q.normalize().is_normalized());
        assert_eq!(q.content(), BigInt::from(2));
        assert_eq!(p(&[0, 0]).degree(), 0);
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, 3, -1]).to_string(), "-x^3 + 3*x^2 - 1");
        assert_eq!(p(&[5, 1]).to_string(), "x + 5");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    #[test]
    fn gcd_and_division() {
        let a = p(&[-1, 1]).mul(&p(&[2, 0, 1]));
        let b = p(&[-1, 1]).mul(&p(&[3, 1]));
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[2, 0, 1])));
        assert_eq!(a.div_exact(&p(&[3, 1])), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[1, 3])), None);
    }

    #[test]
    fn compose_and_eval() {
        let f = p(&[-2, 0, 1]);
        let g = f.compose(&p(&[1, 1])); // (x+1)^2 - 2
        assert_eq!(g, p(&[-1, 2, 1]));
        assert_eq!(g.eval(&BigRational::new(1.into(), 2.into())), BigRational::new(1.into(), 4.into()));
    }

    #[test]
    fn rational_input_clears_denominators() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(UniPoly::from_rationals(&[r(1, 2), r(-1, 3)]), p(&[3, -2]));
    }

    #[test]
    fn serde_round_trip() {
        let q = p(&[3, 0, -7]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"["3","0","-7"]"#);
        assert_eq!(serde_json::from_str::<UniPoly>(&s).unwrap(), q);
    }

    proptest! {
        #[test]
        fn gcd_divides_both(a in prop::collection::vec(-9i64..=9, 1..6), b in prop::collection::vec(-9i64..=9, 1..6), h in prop::collection::vec(-5i64..=5, 1..4)) {
            let (a, b, h) = (p(&a), p(&b), p(&h));
            prop_assume!(!a.is_zero() && !b.is_zero() && !h.is_zero());
            let (fa, fb) = (a.mul(&h), b.mul(&h));
            let g = fa.gcd(&fb);
            prop_assert!(fa.div_exact(&g).is_some());
            prop_assert!(fb.div_exact(&g).is_some());
            prop_assert!(g.div_exact(&h.normalize()).is_some() || h.degree() == 0);
        }
    }
}
