//! The K(3,3) pipeline: constraint system, y-elimination, resultants,
//! factorization, and a certificate for each nonlinear factor.

use num_rational::BigRational;
use serde::Serialize;

use super::constraints::{
    eliminate_to_x3, k33_distance_assignment, k33_system, square_eliminate_y, unit_branch, ConstraintSystem,
    EliminatedSystem, UnitBranch,
};
use super::factor::{factor_over_q, Factorization};
use super::galois::{nonsolubility_certificate, SolubilityCertificate};
use super::multipoly::MultiPoly;
use super::unipoly::UniPoly;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct K33Report {
    pub distances: Vec<String>,
    pub system: ConstraintSystem,
    pub quartics: EliminatedSystem,
    pub h1: MultiPoly,
    pub h2: MultiPoly,
    pub eliminant: UniPoly,
    pub eliminant_degree: usize,
    pub factorization: Factorization,
    pub certificates: Vec<SolubilityCertificate>,
    pub unit_branch: UnitBranch,
}

impl K33Report {
    pub fn all_not_soluble(&self) -> bool {
        !self.certificates.is_empty()
            && self.certificates.iter().all(|c| c.verdict == super::galois::Verdict::NotSoluble)
    }
}

pub fn run_k33(d: &[BigRational; 8], prime_bound: u64) -> Result<K33Report> {
    k33_distance_assignment(d)?;
    let system = k33_system(d)?;
    let quartics = square_eliminate_y(&system)?;
    let el = eliminate_to_x3(&quartics)?;
    let factorization = factor_over_q(&el.polynomial)?;
    let certificates = factorization
        .nonlinear()
        .map(|f| nonsolubility_certificate(&f.polynomial, prime_bound))
        .collect::<Result<Vec<_>>>()?;
    let unit_branch = unit_branch(d, &el.polynomial);
    Ok(K33Report {
        distances: d.iter().map(|q| q.to_string()).collect(),
        system,
        quartics,
        h1: el.h1,
        h2: el.h2,
        eliminant_degree: el.polynomial.degree(),
        eliminant: el.polynomial,
        factorization,
        certificates,
        unit_branch,
    })
}
