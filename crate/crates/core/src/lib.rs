//! Exact abelian concordance invariants from Seifert matrices: Alexander
//! polynomial, Levine-Tristram signature profile, the integrated signature
//! `rho` with validated enclosures, and an exact independence check for the
//! family `J_m`.

pub mod cli;
pub mod enclosure;
pub mod family;
pub mod field;
pub mod genus1;
pub mod independence;
pub mod laurent;
pub mod linalg;
pub mod rat;
pub mod seifert;
pub mod signature;
pub mod upoly;

pub use family::{jm_rho, jm_seifert, params_from_primes, FamilyParams};
pub use laurent::LaurentPolynomial;
pub use seifert::{SeifertError, SeifertMatrix};
pub use signature::{rho, signature_at, signature_profile, RhoValue, SignatureProfile};
