//! Exact computations with affine semigroups, their one-point
//! compactifications, and derivations on the associated algebras.
//!
//! The library decides, with certificates, the classical questions about a
//! finitely generated affine semigroup `S` inside a lattice: pointedness,
//! Hilbert bases, cone duality, Demazure roots. On top of that it builds the
//! compactified semigroup `S ∪ {∞}`, its finite quotients and their inverse
//! limit, the algebras `C[S]` and `C[S ∪ {∞}]` with exact rational
//! coefficients, derivations on both (with the lift/project correspondence),
//! and the classification of topologically integrable quasi-homogeneous
//! derivations — cross-checked against a bounded brute-force oracle.
//!
//! All arithmetic is exact. The core types are generic over the integer
//! scalar (see [`scalar::Scalar`]); the aliases below fix the
//! arbitrary-precision default.
//!
//! ```
//! use semialg::{catalog, classify_integrable, Branch, Verdict};
//!
//! // the lift of d/dx: locally nilpotent, but its iterates cannot converge
//! let derivative = catalog::power_derivative(0);
//! let verdict = classify_integrable(&derivative).unwrap();
//! assert_eq!(verdict.verdict, Verdict::NotIntegrable);
//! assert_eq!(verdict.branch, Some(Branch::Lnd));
//! assert!(verdict.witness.unwrap().verify(&derivative).unwrap());
//!
//! // the lift of x^2 d/dx is topologically integrable
//! let square = catalog::power_derivative(2);
//! assert_eq!(classify_integrable(&square).unwrap().verdict, Verdict::Integrable);
//! ```

pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod derivation;
pub mod error;
pub mod json;
pub mod lattice;
mod linalg;
pub mod quotient;
pub mod scalar;
pub mod semigroup;

pub use algebra::{parse_element, AlgebraElement, Carrier, CompletionTower, ExpKey};
pub use classify::{
    agreement_of, classify_integrable, oracle_continuity, oracle_p1, oracle_p1_sweep, oracle_p2,
    oracle_verdict, Agreement, Branch, FailureWitness, IntegrabilityVerdict, OracleBounds,
    OracleOutcome, OracleReport, Verdict,
};
pub use derivation::{Derivation, HomogeneousDerivation, LndPath, LndVerdict, DEFAULT_LND_DEPTH};
pub use error::{Error, Result};
pub use lattice::{pairing, Cone, LatticeBasis, LatticeVector};
pub use quotient::{
    bonding_map, check_quotients, check_tower, FiniteQuotient, Slot, TowerIssue, TowerReport,
};
pub use scalar::Scalar;
pub use semigroup::{AffineSemigroup, Representation, Root};

/// Default exact integer scalar.
pub type Int = num_bigint::BigInt;
/// Default exact rational scalar.
pub type Rat = num_rational::BigRational;
/// Lattice vector over the default scalar.
pub type Vector = LatticeVector<Int>;
/// Lattice basis over the default scalar.
pub type Basis = LatticeBasis<Int>;
/// Affine semigroup over the default scalar.
pub type Semigroup = AffineSemigroup<Int>;
/// Algebra element over the default scalar.
pub type Element = AlgebraElement<Int>;
/// Finite quotient over the default scalar.
pub type Quotient = FiniteQuotient<Int>;
/// Completion tower over the default scalar.
pub type Tower = CompletionTower<Int>;
