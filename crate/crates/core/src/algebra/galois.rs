//! Frobenius cycle types and certificates that a Galois group is not
//! soluble.
//!
//! By Dedekind's theorem the factor degrees of `p mod q`, for a prime `q`
//! not dividing the leading coefficient or the discriminant, form the
//! cycle type of some element of the Galois group acting on the roots.
//! A certificate records one such prime whose cycle type no soluble
//! transitive group can contain.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use super::factor::factor_over_q;
use super::modp::{is_zero_mod, primes_up_to, Zp};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

pub const DEFAULT_PRIME_BOUND: u64 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleTypeReport {
    pub prime: u64,
    /// Factor degrees modulo `prime`, ascending.
    pub degree_multiset: Vec<usize>,
    pub squarefree: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SkipReason {
    DividesLeadingCoefficient,
    NotSquarefree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkippedPrime {
    pub prime: u64,
    pub reason: SkipReason,
}

/// Reports for the good primes and the list of bad primes, both in
/// increasing prime order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusSieve {
    pub reports: Vec<CycleTypeReport>,
    pub skipped: Vec<SkippedPrime>,
}

fn sieve_one(p: &UniPoly, q: u64) -> std::result::Result<CycleTypeReport, SkippedPrime> {
    if is_zero_mod(&p.leading(), q) {
        return Err(SkippedPrime { prime: q, reason: SkipReason::DividesLeadingCoefficient });
    }
    let z = Zp::new(q);
    let pq = z.reduce(p);
    if !z.is_squarefree(&pq) {
        return Err(SkippedPrime { prime: q, reason: SkipReason::NotSquarefree });
    }
    Ok(CycleTypeReport { prime: q, degree_multiset: z.factor_degrees(&pq), squarefree: true })
}

/// Factor-degree multisets of `p` modulo every good prime up to `prime_bound`.
pub fn frobenius_cycle_types(p: &UniPoly, prime_bound: u64) -> Result<FrobeniusSieve> {
    if p.degree() < 1 {
        return Err(Error::precondition("cycle types need a nonconstant polynomial"));
    }
    if p.gcd(&p.derivative()).degree() > 0 {
        return Err(Error::precondition("polynomial is not squarefree"));
    }
    let results: Vec<_> = primes_up_to(prime_bound).into_par_iter().map(|q| sieve_one(p, q)).collect();
    let mut sieve = FrobeniusSieve { reports: Vec::new(), skipped: Vec::new() };
    for r in results {
        match r {
            Ok(rep) => sieve.reports.push(rep),
            Err(s) => sieve.skipped.push(s),
        }
    }
    Ok(sieve)
}

// ---------------------------------------------------------------------------
// Soluble transitive groups

type Perm = Vec<u8>;

#[derive(Clone, Debug)]
pub struct SolubleGroup {
    pub name: &'static str,
    pub degree: usize,
    pub order: usize,
    /// Cycle types of all elements, each sorted ascending.
    pub cycle_types: BTreeSet<Vec<usize>>,
}

fn perm_from_cycles(n: usize, cycles: &[&[u8]]) -> Perm {
    let mut p: Perm = (0..n as u8).collect();
    for c in cycles {
        for i in 0..c.len() {
            p[c[i] as usize] = c[(i + 1) % c.len()];
        }
    }
    p
}

fn compose(a: &Perm, b: &Perm) -> Perm {
    a.iter().map(|&i| b[i as usize]).collect()
}

pub fn cycle_type(p: &[u8]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable();
    out
}

/// All elements generated by `gens`, by breadth-first closure.
fn closure(n: usize, gens: &[Perm]) -> BTreeSet<Perm> {
    let id: Perm = (0..n as u8).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(&x, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

fn group(name: &'static str, n: usize, gens: Vec<Perm>) -> SolubleGroup {
    let elems = closure(n, &gens);
    SolubleGroup { name, degree: n, order: elems.len(), cycle_types: elems.iter().map(|p| cycle_type(p)).collect() }
}

/// Multiplication in GF(8) = GF(2)[t]/(t^3 + t + 1) on 3-bit integers.
fn gf8_mul(a: u8, b: u8) -> u8 {
    let mut r = 0u8;
    for i in 0..3 {
        if b >> i & 1 == 1 {
            r ^= a << i;
        }
    }
    for i in (3..5).rev() {
        if r >> i & 1 == 1 {
            r ^= 0b1011 << (i - 3);
        }
    }
    r
}

fn build_tables() -> BTreeMap<usize, Vec<SolubleGroup>> {
    let c = perm_from_cycles;
    let deg6 = vec![
        group("S3 wr S2", 6, vec![c(6, &[&[0, 1]]), c(6, &[&[0, 1, 2]]), c(6, &[&[0, 3], &[1, 4], &[2, 5]])]),
        group("S2 wr S3", 6, vec![c(6, &[&[0, 1]]), c(6, &[&[0, 2], &[1, 3]]), c(6, &[&[0, 2, 4], &[1, 3, 5]])]),
    ];
    let translate: Perm = (0..8u8).map(|t| t ^ 1).collect();
    let scale: Perm = (0..8u8).map(|t| gf8_mul(t, 2)).collect();
    let frobenius: Perm = (0..8u8).map(|t| gf8_mul(t, t)).collect();
    let deg8 = vec![
        group(
            "S4 wr S2",
            8,
            vec![c(8, &[&[0, 1]]), c(8, &[&[0, 1, 2, 3]]), c(8, &[&[0, 4], &[1, 5], &[2, 6], &[3, 7]])],
        ),
        group("S2 wr S4", 8, vec![c(8, &[&[0, 1]]), c(8, &[&[0, 2], &[1, 3]]), c(8, &[&[0, 2, 4, 6], &[1, 3, 5, 7]])]),
        group("AGammaL(1,8)", 8, vec![translate, scale, frobenius]),
    ];
    BTreeMap::from([(6, deg6), (8, deg8)])
}

/// Maximal soluble transitive groups for the degrees with a table.
pub fn soluble_tables() -> &'static BTreeMap<usize, Vec<SolubleGroup>> {
    static TABLES: OnceLock<BTreeMap<usize, Vec<SolubleGroup>>> = OnceLock::new();
    TABLES.get_or_init(build_tables)
}

// ---------------------------------------------------------------------------
// Certificates

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// A prime cycle of length p with n/2 < p <= n - 3 forces A_n or S_n.
    Jordan,
    /// An (n-1)-cycle makes the group doubly transitive, and soluble doubly
    /// transitive groups have prime power degree.
    Burnside,
    /// The cycle type occurs in no maximal soluble transitive group.
    SolubleTable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    NotSoluble,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub prime: u64,
    pub degree_multiset: Vec<usize>,
    pub rule: Rule,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolubilityCertificate {
    pub polynomial: UniPoly,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub rules_checked: Vec<Rule>,
    pub prime_bound: u64,
    pub primes_examined: usize,
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn is_prime_power(n: usize) -> bool {
    (2..=n).find(|d| n.is_multiple_of(*d)).is_some_and(|p| {
        let mut m = n;
        while m.is_multiple_of(p) {
            m /= p;
        }
        m == 1
    })
}

/// Rules that can ever fire at degree `n`.
pub fn applicable_rules(n: usize) -> Vec<Rule> {
    let mut rules = Vec::new();
    if (n / 2 + 1..=n.saturating_sub(3)).any(is_prime) {
        rules.push(Rule::Jordan);
    }
    if n >= 3 && !is_prime_power(n) {
        rules.push(Rule::Burnside);
    }
    if soluble_tables().contains_key(&n) {
        rules.push(Rule::SolubleTable);
    }
    rules
}

/// Whether `rule` excludes soluble groups given an element of cycle type
/// `ct` in a transitive group of degree `n`.
pub fn rule_fires(rule: Rule, n: usize, ct: &[usize]) -> bool {
    match rule {
        Rule::Jordan => ct.iter().any(|&c| is_prime(c) && 2 * c > n && c + 3 <= n),
        Rule::Burnside => n >= 3 && !is_prime_power(n) && ct == [1, n - 1],
        Rule::SolubleTable => {
            soluble_tables().get(&n).is_some_and(|groups| groups.iter().all(|g| !g.cycle_types.contains(ct)))
        }
    }
}

/// Searches the good primes up to `prime_bound` for a cycle type that
/// rules out a soluble Galois group. `p` must be irreducible.
pub fn nonsolubility_certificate(p: &UniPoly, prime_bound: u64) -> Result<SolubilityCertificate> {
    if p.degree() < 1 {
        return Err(Error::precondition("certificate needs a nonconstant polynomial"));
    }
    if !factor_over_q(p)?.is_irreducible() {
        return Err(Error::Reducible);
    }
    let poly = p.normalize();
    let n = poly.degree();
    let rules = applicable_rules(n);
    let sieve = frobenius_cycle_types(&poly, prime_bound)?;
    let witness = sieve.reports.iter().find_map(|r| {
        rules.iter().find(|&&rule| rule_fires(rule, n, &r.degree_multiset)).map(|&rule| Witness {
            prime: r.prime,
            degree_multiset: r.degree_multiset.clone(),
            rule,
        })
    });
    Ok(SolubilityCertificate {
        polynomial: poly,
        verdict: if witness.is_some() { Verdict::NotSoluble } else { Verdict::Inconclusive },
        witness,
        rules_checked: rules,
        prime_bound,
        primes_examined: sieve.reports.len(),
    })
}

impl SolubilityCertificate {
    /// Re-derives the witness from scratch: the prime is good, the cycle
    /// type is recomputed, and the rule applies. Irreducibility is
    /// re-established as well.
    pub fn verify(&self) -> bool {
        let Some(w) = &self.witness else {
            return self.verdict == Verdict::Inconclusive;
        };
        let n = self.polynomial.degree();
        self.verdict == Verdict::NotSoluble
            && w.prime <= self.prime_bound
            && factor_over_q(&self.polynomial).is_ok_and(|f| f.is_irreducible())
            && sieve_one(&self.polynomial, w.prime).is_ok_and(|r| r.degree_multiset == w.degree_multiset)
            && rule_fires(w.rule, n, &w.degree_multiset)
    }
}
