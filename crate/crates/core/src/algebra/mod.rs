//! Exact polynomial algebra: resultants, factorization over the
//! rationals, Frobenius cycle types and the K(3,3) elimination.

pub mod constraints;
pub mod construct;
pub mod factor;
pub mod galois;
pub mod k33;
pub mod modp;
pub mod multipoly;
pub mod resultant;
pub mod ring;
pub mod unipoly;

pub use constraints::{
    build_constraint_system, eliminate_to_x3, k33_default_distances, k33_system, square_eliminate_y, ConstraintSystem,
    DistanceAssignment, Eliminant, EliminatedSystem,
};
pub use construct::{qs_solve, qs_solve_with_tol, verify_embedding, Embedding, DEFAULT_TOL};
pub use factor::{factor_over_q, Factor, Factorization};
pub use galois::{
    frobenius_cycle_types, nonsolubility_certificate, CycleTypeReport, FrobeniusSieve, Rule, SolubilityCertificate,
    Verdict, Witness, DEFAULT_PRIME_BOUND,
};
pub use k33::{run_k33, K33Report};
pub use multipoly::MultiPoly;
pub use resultant::resultant;
pub use unipoly::UniPoly;
