//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::ring::Ring;

/// Exponent vector indexed like the polynomial's variable list.
pub type Monomial = Vec<u32>;

/// Terms are kept in lexicographic exponent order (first variable most
/// significant), so the leading term is the last entry. No stored
/// coefficient is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl MultiPoly {
    pub fn zero(vars: &[String]) -> Self {
        MultiPoly { vars: vars.to_vec(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[String], c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: &[String], name: &str) -> Self {
        let i = vars.iter().position(|v| v == name).unwrap_or_else(|| panic!("unknown variable {name}"));
        let mut m = vec![0; vars.len()];
        m[i] = 1;
        Self::from_terms(vars, [(m, BigRational::one())])
    }

    pub fn from_terms(vars: &[String], terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.len(), vars.len(), "exponent vector length mismatch");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m[var]).max()
    }

    /// Names of the variables that actually occur.
    pub fn support(&self) -> Vec<&str> {
        (0..self.vars.len()).filter(|&i| self.terms.keys().any(|m| m[i] > 0)).map(|i| self.vars[i].as_str()).collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        Ring::pow(self, e)
    }

    /// Coefficients with respect to `var`, lowest degree first; the
    /// exponent of `var` in each coefficient is zero.
    pub fn coeffs_in(&self, var: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(&self.vars); deg + 1];
        for (m, c) in &self.terms {
            let k = m[var] as usize;
            let mut m2 = m.clone();
            m2[var] = 0;
            out[k].terms.insert(m2, c.clone());
        }
        out
    }

    /// Inverse of [`MultiPoly::coeffs_in`].
    pub fn from_coeffs_in(vars: &[String], var: usize, coeffs: &[MultiPoly]) -> Self {
        let mut p = Self::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                let mut m2 = m.clone();
                m2[var] += k as u32;
                p.add_term(m2, v.clone());
            }
        }
        p
    }

    /// Replaces `var` by `value` (a polynomial over the same variables).
    pub fn substitute(&self, var: usize, value: &MultiPoly) -> Self {
        let coeffs = self.coeffs_in(var);
        let mut acc = Self::zero(&self.vars);
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.vars.len());
        self.terms
            .iter()
            .map(|(m, c)| {
                m.iter().zip(point).fold(c.clone(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize))
            })
            .fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        use num_traits::ToPrimitive;
        self.terms
            .iter()
            .map(|(m, c)| {
                m.iter().zip(point).fold(c.to_f64().unwrap_or(f64::NAN), |acc, (&e, x)| acc * x.powi(e as i32))
            })
            .sum()
    }

    /// Moves the polynomial onto `vars`, which must contain every variable that occurs.
    pub fn with_variables(&self, vars: &[String]) -> Option<Self> {
        let map: Vec<Option<usize>> = self.vars.iter().map(|v| vars.iter().position(|w| w == v)).collect();
        let mut p = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut m2 = vec![0; vars.len()];
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    m2[map[i]?] = e;
                }
            }
            p.add_term(m2, c.clone());
        }
        Some(p)
    }

    /// Same terms under new variable names, position for position.
    pub fn rename_variables(&self, names: &[String]) -> Self {
        assert_eq!(names.len(), self.vars.len(), "variable count mismatch");
        MultiPoly { vars: names.to_vec(), terms: self.terms.clone() }
    }

    /// Coefficients (lowest first) when only `var` occurs.
    pub fn to_univariate(&self, var: usize) -> Option<Vec<BigRational>> {
        if self.terms.keys().any(|m| m.iter().enumerate().any(|(i, &e)| i != var && e > 0)) {
            return None;
        }
        let coeffs = self.coeffs_in(var);
        Some(coeffs.into_iter().map(|c| c.terms.into_values().next().unwrap_or_else(BigRational::zero)).collect())
    }

    /// Exact division by lexicographic leading terms.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while let Some((m, c)) = rem.leading() {
            let qm: Option<Monomial> = m.iter().zip(&dm).map(|(&a, &b)| a.checked_sub(b)).collect();
            let qm = qm?;
            let qc = c / &dc;
            let t = Self::from_terms(&self.vars, [(qm, qc)]);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        Self::zero(&self.vars)
    }
    fn one_like(&self) -> Self {
        Self::constant(&self.vars, BigRational::one())
    }
    fn is_zero_elem(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Option<Self> {
        self.div_exact(o)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, o.vars, "variable lists differ");
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, o.vars, "variable lists differ");
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.clone(), -c.clone());
        }
        p
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, o.vars, "variable lists differ");
        let mut p = MultiPoly::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                p.add_term(m, c1 * c2);
            }
        }
        p
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let factors: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| if e == 1 { self.vars[j].clone() } else { format!("{}^{e}", self.vars[j]) })
                .collect();
            if factors.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
                if !factors.is_empty() {
                    f.write_str("*")?;
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({self})", self.vars.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exponents: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    variables: Vec<String>,
    terms: Vec<TermJson>,
}

/// `{"variables": [...], "terms": [{"coeff": "p/q", "exponents": [...]}]}`
/// with terms in descending lexicographic order.
impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            variables: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermJson { coeff: c.to_string(), exponents: m.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::deserialize(d)?;
        let mut p = MultiPoly::zero(&raw.variables);
        for t in raw.terms {
            if t.exponents.len() != raw.variables.len() {
                return Err(D::Error::custom("exponent vector length mismatch"));
            }
            let c: BigRational =
                t.coeff.parse().map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.coeff)))?;
            p.add_term(t.exponents, c);
        }
        Ok(p)
    }
}

pub fn var_names(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (Vec<String>, MultiPoly, MultiPoly) {
        let v = var_names(&["x", "y"]);
        let x = MultiPoly::var(&v, "x");
        let y = MultiPoly::var(&v, "y");
        (v, x, y)
    }

    #[test]
    fn arithmetic_and_display() {
        let (v, x, y) = xy();
        let one = MultiPoly::constant(&v, rat(1, 1));
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p, &x.pow(2) - &y.pow(2));
        assert_eq!(p.to_string(), "x^2 - y^2");
        let q = &(&x.scale(&rat(-1, 2)) * &y) + &one;
        assert_eq!(q.to_string(), "-1/2*x*y + 1");
        assert_eq!(p.total_degree(), Some(2));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn substitution_and_evaluation() {
        let (v, x, y) = xy();
        let p = &(&x * &x) + &y; // x^2 + y
        let s = p.substitute(1, &(&x + &x)); // x^2 + 2x
        assert_eq!(s.eval(&[rat(3, 1), rat(100, 1)]), rat(15, 1));
        assert_eq!(s.support(), vec!["x"]);
        assert_eq!(s.to_univariate(0), Some(vec![rat(0, 1), rat(2, 1), rat(1, 1)]));
        assert_eq!(p.to_univariate(0), None);
        let back = MultiPoly::from_coeffs_in(&v, 0, &p.coeffs_in(0));
        assert_eq!(back, p);
    }

    #[test]
    fn exact_division() {
        let (_, x, y) = xy();
        let a = &(&x + &y) * &(&x.pow(2) - &y);
        assert_eq!(a.div_exact(&(&x + &y)), Some(&x.pow(2) - &y));
        assert_eq!((&x + &y).div_exact(&x), None);
    }

    #[test]
    fn rebase_variables() {
        let (_, x, y) = xy();
        let p = &x * &y;
        let wider = p.with_variables(&var_names(&["z", "y", "x"])).unwrap();
        assert_eq!(wider.to_string(), "y*x");
        assert!(p.with_variables(&var_names(&["x"])).is_none());
    }

    #[test]
    fn json_round_trip() {
        let (v, x, y) = xy();
        let p = &(&x.pow(2).scale(&rat(-3, 4)) * &y) + &MultiPoly::constant(&v, rat(5, 1));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"variables":["x","y"],"terms":[{"coeff":"-3/4","exponents":[2,1]},{"coeff":"5","exponents":[0,0]}]}"#
        );
        assert_eq!(serde_json::from_str::<MultiPoly>(&s).unwrap(), p);
    }
}
