//! Factorization of integer polynomials over the rationals.
//!
//! Squarefree decomposition, factorization modulo a small good prime,
//! linear Hensel lifting of the modular factors, then recombination of
//! lifted factors by trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::modp::{is_zero_mod, Poly, Zp};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Good primes examined before settling on the one with fewest factors.
const PRIME_CANDIDATES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub polynomial: UniPoly,
    pub multiplicity: usize,
}

/// `content * prod(factor ^ multiplicity)` reproduces the input exactly.
/// Factors are primitive with positive leading coefficient, sorted by
/// degree and then coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    #[serde(serialize_with = "ser_bigint")]
    pub content: BigInt,
    pub factors: Vec<Factor>,
}

fn ser_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl Factorization {
    pub fn expand(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::new(vec![self.content.clone()]), |acc, f| acc.mul(&f.polynomial.pow(f.multiplicity)))
    }

    /// True when the input was a nonzero constant times one irreducible.
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].multiplicity == 1
    }

    /// Factors of degree at least two.
    pub fn nonlinear(&self) -> impl Iterator<Item = &Factor> {
        self.factors.iter().filter(|f| f.polynomial.degree() >= 2)
    }
}

/// Factors `p` into irreducibles over the rationals.
pub fn factor_over_q(p: &UniPoly) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::precondition("cannot factor the zero polynomial"));
    }
    let mut content = p.content();
    if p.leading().is_negative() {
        content = -content;
    }
    let mut factors = Vec::new();
    if p.degree() > 0 {
        for (part, mult) in squarefree_decomposition(&p.normalize()) {
            for g in factor_squarefree(&part) {
                factors.push(Factor { polynomial: g, multiplicity: mult });
            }
        }
    }
    factors.sort_by(|a, b| a.polynomial.cmp(&b.polynomial).then(a.multiplicity.cmp(&b.multiplicity)));
    Ok(Factorization { content, factors })
}

/// Yun's algorithm on a primitive polynomial with positive leading
/// coefficient. Returns coprime squarefree parts with their multiplicities.
pub fn squarefree_decomposition(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    debug_assert!(f.is_normalized());
    let fp = f.derivative();
    let a0 = f.gcd(&fp).normalize();
    let mut b = f.div_exact(&a0).expect("gcd divides f");
    let c = fp.div_exact(&a0).expect("gcd divides f'");
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree() > 0 {
        let a = b.gcd(&d).normalize();
        b = b.div_exact(&a).expect("exact");
        let c = d.div_exact(&a).expect("exact");
        d = c.sub(&b.derivative());
        if a.degree() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Good primes: odd, not dividing the leading coefficient, and keeping
/// the reduction squarefree.
fn choose_prime(f: &UniPoly) -> (Zp, Poly) {
    let lc = f.leading();
    let mut best: Option<(usize, Zp, Poly)> = None;
    let mut seen = 0;
    for q in (3u64..).step_by(2).filter(|&q| is_prime(q)) {
        if is_zero_mod(&lc, q) {
            continue;
        }
        let z = Zp::new(q);
        let fq = z.reduce(f);
        if !z.is_squarefree(&fq) {
            continue;
        }
        let count = z.factor_degrees(&fq).len();
        if best.as_ref().is_none_or(|b| count < b.0) {
            best = Some((count, z, fq));
        }
        seen += 1;
        if seen == PRIME_CANDIDATES || count == 1 {
            break;
        }
    }
    let (_, z, fq) = best.expect("squarefree polynomials have good primes");
    (z, fq)
}

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

fn factor_squarefree(f: &UniPoly) -> Vec<UniPoly> {
    let f = f.normalize();
    if f.degree() <= 1 {
        return vec![f];
    }
    let (z, fq) = choose_prime(&f);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let modular = z.factor_squarefree(&z.monic(&fq), &mut rng);
    if modular.len() == 1 {
        return vec![f];
    }
    let p = BigInt::from(z.modulus());
    let n = f.degree();
    let bound = f.leading().abs() * (BigInt::one() << n) * BigInt::from(n + 1) * f.max_norm();
    let mut k = 1;
    let mut m = p.clone();
    while m <= &bound * 2 {
        m *= &p;
        k += 1;
    }
    let inv_lc = mod_inverse(&f.leading(), &m);
    let monic: Vec<BigInt> = f.coeffs().iter().map(|c| (c * &inv_lc).mod_floor(&m)).collect();
    let lifted = hensel_lift(&z, &monic, &modular, k);
    recombine(f, lifted, &m)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    assert!(e.gcd.is_one(), "leading coefficient not invertible");
    e.x.mod_floor(m)
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out.iter().map(|c| c.mod_floor(m)).collect()
}

fn to_big(a: &[u64]) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `f ≡ g*h (mod p)` with `g`, `h` monic and coprime to a
/// factorization modulo `p^k`. `f` is monic modulo `p^k`.
fn lift_pair(z: &Zp, f: &[BigInt], g: &[u64], h: &[u64], k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (one, _, t) = z.ext_gcd(g, h);
    debug_assert_eq!(one, vec![1]);
    let p = BigInt::from(z.modulus());
    let (mut big_g, mut big_h) = (to_big(g), to_big(h));
    let mut pj = p.clone();
    for _ in 1..k {
        let next = &pj * &p;
        let prod = mul_mod(&big_g, &big_h, &next);
        let err: Poly = Zp::trim(
            (0..f.len())
                .map(|i| {
                    let e = (&f[i] - prod.get(i).cloned().unwrap_or_default()).mod_floor(&next);
                    debug_assert!((&e % &pj).is_zero());
                    (e / &pj).to_u64().expect("residue fits")
                })
                .collect(),
        );
        let a = z.rem(&z.mul(&err, &t), g);
        let (b, r) = z.divrem(&z.sub(&err, &z.mul(&a, h)), g);
        debug_assert!(r.is_empty());
        for (i, c) in a.iter().enumerate() {
            big_g[i] += &pj * c;
        }
        for (i, c) in b.iter().enumerate() {
            big_h[i] += &pj * c;
        }
        pj = next;
    }
    (big_g, big_h)
}

fn hensel_lift(z: &Zp, f: &[BigInt], factors: &[Poly], k: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        return vec![f.to_vec()];
    }
    let rest = factors[1..].iter().fold(vec![1u64], |acc, g| z.mul(&acc, g));
    let (g, h) = lift_pair(z, f, &factors[0], &rest, k);
    let mut out = vec![g];
    out.extend(hensel_lift(z, &h, &factors[1..], k));
    out
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Subset products of lifted factors, smallest subsets first; a product
/// that divides the remaining cofactor is a true factor.
fn recombine(mut f: UniPoly, mut lifted: Vec<Vec<BigInt>>, m: &BigInt) -> Vec<UniPoly> {
    let mut out = Vec::new();
    let mut s = 1;
    'outer: while 2 * s <= lifted.len() {
        for combo in Combinations::new(lifted.len(), s) {
            let start = vec![f.leading()];
            let prod = combo.iter().fold(start, |acc, &i| mul_mod(&acc, &lifted[i], m));
            let cand = UniPoly::new(prod.iter().map(|c| symmetric(c, m)).collect()).normalize();
            if let Some(q) = f.div_exact(&cand) {
                out.push(cand);
                f = q;
                for &i in combo.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
        }
        s += 1;
    }
    if f.degree() > 0 {
        out.push(f.normalize());
    }
    out
}

/// k-subsets of 0..n in lexicographic order.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let cur = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(cur)
    }
}
