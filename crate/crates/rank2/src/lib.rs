//! Moduli of free rank-2 algebras over finite commutative rings.
//!
//! Every free algebra of rank 2 over a commutative ring `R` can be presented
//! as `R[x]/(x^2 + a*x + b)`, so a pair `(a, b)` of ring elements is a
//! complete description of such an algebra. This crate classifies those
//! algebras up to isomorphism:
//!
//! * [`ring`] builds the base rings — a tower of finite commutative rings
//!   (`Z/n`, Galois fields, finite products, univariate quotients) plus the
//!   quadratic integer rings `Z[sqrt(d)]` — together with a small text
//!   grammar for describing them.
//! * [`quad`] works with the concrete rank-2 algebra attached to a pair
//!   `(a, b)`: discriminants, separability, radical and Artin-Schreier
//!   predicates with witnesses, normal forms, trace and Galois conjugation.
//! * [`iso`] solves the isomorphism equations between two pairs, computes
//!   automorphism groups and their fiber types over finite fields, and
//!   decides isomorphism over `Z[sqrt(d)]` via discriminants.
//! * [`orbits`] realizes isomorphism classes as orbits of the group
//!   `R^x ⋉ R` (and its subgroups) acting on parameter pairs, producing
//!   moduli tables, cross-bijections, and embedding reports.
//! * [`hopf`] verifies the Hopf-algebra and coaction identities behind the
//!   group actions symbolically over the integers, and checks the quotient
//!   Hopf algebras against the computed automorphism groups point by point.
//! * [`verify`] bundles all property suites into one runner over a battery
//!   of test rings.

pub mod hopf;
pub mod iso;
pub mod orbits;
pub mod quad;
pub mod ring;
pub mod verify;

pub use ring::{parse_ring_spec, Ring, RingElem, RingHom, RingSpec};

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The input text does not conform to the ring-spec grammar.
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    /// The input parses but violates a construction invariant
    /// (non-prime characteristic, reducible modulus, ...).
    #[error("{0}")]
    Semantic(String),
    /// The operation is not defined for this ring (e.g. enumerating an
    /// infinite ring).
    #[error("{0}")]
    Unsupported(String),
    /// Inverse of a non-unit was requested.
    #[error("not a unit")]
    NotAUnit,
    /// An internal cross-check failed; this indicates a bug, not bad input.
    #[error("internal verification failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
