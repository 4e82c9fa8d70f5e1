//! Polynomials over a prime field F_p with p below 2^31.
//!
//! Polynomials are `Vec<u64>` with coefficients in `[0, p)`, lowest degree
//! first and no trailing zeros.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use super::unipoly::UniPoly;

pub type Poly = Vec<u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Zp {
    p: u64,
}

impl Zp {
    pub fn new(p: u64) -> Self {
        assert!((2..(1 << 31)).contains(&p), "prime out of range");
        Zp { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn trim(mut a: Poly) -> Poly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn reduce(&self, f: &UniPoly) -> Poly {
        let m = BigInt::from(self.p);
        Self::trim(
            f.coeffs()
                .iter()
                .map(|c| {
                    let r = ((c % &m) + &m) % &m;
                    r.to_u64().expect("residue fits")
                })
                .collect(),
        )
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * a % self.p;
            }
            a = a * a % self.p;
            e >>= 1;
        }
        acc
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Poly {
        let n = a.len().max(b.len());
        Self::trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p).collect())
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Poly {
        let n = a.len().max(b.len());
        Self::trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0)) % self.p)
                .collect(),
        )
    }

    pub fn scale(&self, a: &[u64], c: u64) -> Poly {
        Self::trim(a.iter().map(|x| x * c % self.p).collect())
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        Self::trim(out)
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn divrem(&self, a: &[u64], b: &[u64]) -> (Poly, Poly) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut r = a.to_vec();
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let db = b.len() - 1;
        let li = self.inv(b[db]);
        let mut q = vec![0u64; r.len() - db];
        for k in (0..q.len()).rev() {
            let c = r[k + db] * li % self.p;
            q[k] = c;
            if c != 0 {
                for (i, &y) in b.iter().enumerate() {
                    r[k + i] = (r[k + i] + self.p - c * y % self.p) % self.p;
                }
            }
        }
        r.truncate(db);
        (Self::trim(q), Self::trim(r))
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> Poly {
        self.divrem(a, b).1
    }

    pub fn monic(&self, a: &[u64]) -> Poly {
        match a.last() {
            None => Vec::new(),
            Some(&l) => self.scale(a, self.inv(l)),
        }
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> Poly {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Monic gcd `g` with `s*a + t*b = g`.
    pub fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        let li = self.inv(*r0.last().expect("gcd of two zero polynomials"));
        (self.scale(&r0, li), self.scale(&s0, li), self.scale(&t0, li))
    }

    pub fn derivative(&self, a: &[u64]) -> Poly {
        Self::trim(a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % self.p) * c % self.p).collect())
    }

    pub fn is_squarefree(&self, a: &[u64]) -> bool {
        let d = self.derivative(a);
        !d.is_empty() && self.gcd(a, &d).len() == 1
    }

    /// `base^e mod m`.
    pub fn pow_mod(&self, base: &[u64], e: &BigUint, m: &[u64]) -> Poly {
        let mut acc = self.rem(&[1], m);
        let base = self.rem(base, m);
        for i in (0..e.bits()).rev() {
            acc = self.rem(&self.mul(&acc, &acc), m);
            if e.bit(i) {
                acc = self.rem(&self.mul(&acc, &base), m);
            }
        }
        acc
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(g, d)` where `g` is the product of all irreducible factors
    /// of degree `d`.
    pub fn ddf(&self, f: &[u64]) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        let mut rest = self.monic(f);
        let x = vec![0, 1];
        let mut h = self.rem(&x, &rest);
        let p = BigUint::from(self.p);
        let mut d = 1;
        while rest.len() > 2 * d {
            h = self.pow_mod(&h, &p, &rest);
            let g = self.gcd(&rest, &self.sub(&h, &x));
            if g.len() > 1 {
                rest = self.divrem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((g, d));
            }
            d += 1;
        }
        if rest.len() > 1 {
            let deg = rest.len() - 1;
            out.push((rest, deg));
        }
        out
    }

    /// Degrees of the irreducible factors of a squarefree polynomial, sorted.
    pub fn factor_degrees(&self, f: &[u64]) -> Vec<usize> {
        let mut degs: Vec<usize> =
            self.ddf(f).into_iter().flat_map(|(g, d)| std::iter::repeat_n(d, (g.len() - 1) / d)).collect();
        degs.sort_unstable();
        degs
    }

    /// Equal-degree splitting (Cantor and Zassenhaus) of a monic product
    /// of irreducibles all of degree `d`. Requires an odd prime.
    pub fn edf<R: Rng>(&self, f: &[u64], d: usize, rng: &mut R) -> Vec<Poly> {
        assert!(self.p % 2 == 1, "equal-degree splitting needs an odd prime");
        let n = f.len() - 1;
        if n == d {
            return vec![f.to_vec()];
        }
        let e = (BigUint::from(self.p).pow(d as u32) - BigUint::one()) >> 1;
        loop {
            let a: Poly = Self::trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.sub(&self.pow_mod(&a, &e, f), &[1]);
            let g = self.gcd(f, &b);
            if g.len() > 1 && g.len() < f.len() {
                let other = self.divrem(f, &g).0;
                let mut out = self.edf(&g, d, rng);
                out.extend(self.edf(&self.monic(&other), d, rng));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a squarefree polynomial, sorted.
    pub fn factor_squarefree<R: Rng>(&self, f: &[u64], rng: &mut R) -> Vec<Poly> {
        let mut out: Vec<Poly> = self.ddf(f).into_iter().flat_map(|(g, d)| self.edf(&g, d, rng)).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev())));
        out
    }
}

/// Primes up to `bound` inclusive.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            for j in (i * i..=n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    sieve.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i as u64).collect()
}

pub(crate) fn is_zero_mod(c: &BigInt, p: u64) -> bool {
    (c % BigInt::from(p)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Irreducibility by exhaustive search for divisors of degree up to
    /// half; only for tiny fields.
    fn brute_irreducible(z: &Zp, f: &[u64]) -> bool {
        let n = f.len() - 1;
        for d in 1..=n / 2 {
            let count = z.modulus().pow(d as u32);
            for idx in 0..count {
                let mut g = Vec::with_capacity(d + 1);
                let mut k = idx;
                for _ in 0..d {
                    g.push(k % z.modulus());
                    k /= z.modulus();
                }
                g.push(1);
                if z.rem(f, &g).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn field_arithmetic() {
        let z = Zp::new(7);
        assert_eq!(z.inv(3), 5);
        let a = vec![1, 2, 3];
        let b = vec![4, 1];
        let (q, r) = z.divrem(&a, &b);
        assert_eq!(z.add(&z.mul(&q, &b), &r), a);
        let (g, s, t) = z.ext_gcd(&a, &b);
        assert_eq!(z.add(&z.mul(&s, &a), &z.mul(&t, &b)), g);
    }

    #[test]
    fn x_squared_plus_one() {
        assert_eq!(Zp::new(3).factor_degrees(&[1, 0, 1]), vec![2]);
        assert_eq!(Zp::new(5).factor_degrees(&[1, 0, 1]), vec![1, 1]);
    }

    #[test]
    fn factors_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for &p in &[3u64, 5, 7] {
            let z = Zp::new(p);
            for _ in 0..40 {
                let n = rng.gen_range(2..7);
                let mut f: Poly = (0..n).map(|_| rng.gen_range(0..p)).collect();
                f.push(1);
                if !z.is_squarefree(&f) {
                    continue;
                }
                let factors = z.factor_squarefree(&f, &mut rng);
                let prod = factors.iter().fold(vec![1], |acc, g| z.mul(&acc, g));
                assert_eq!(prod, f);
                for g in &factors {
                    assert!(brute_irreducible(&z, g), "{g:?} is reducible mod {p}");
                }
                let mut degs: Vec<usize> = factors.iter().map(|g| g.len() - 1).collect();
                degs.sort_unstable();
                assert_eq!(degs, z.factor_degrees(&f));
            }
        }
    }

    #[test]
    fn sieve() {
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(primes_up_to(10000).len(), 1229);
        assert!(primes_up_to(1).is_empty());
    }
}
