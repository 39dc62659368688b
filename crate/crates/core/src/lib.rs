//! Exact machinery for deciding local root existence of integer polynomials:
//! does f have a root modulo every prime, or a root in every p-adic field?
//!
//! The criterion in use: for squarefree f with irreducible factors g_1..g_k
//! and splitting field Galois group G acting on the roots, f has a root mod
//! every unramified prime iff the point stabilizers A_i cover G by
//! conjugates.  Ramified primes are finitely many (they divide disc f) and
//! are checked directly, mod p for the weak property and in Z_p for the
//! strong one.

pub mod config;
pub mod error;
pub mod parse;
pub mod poly;

mod intpoly;
pub mod modpoly;
pub mod padic;
pub mod primes;
pub mod zfactor;

pub mod groups;
pub mod numfield;
pub mod splitting;
pub mod trager;

pub mod decide;

pub use config::Config;
pub use intpoly::{cyclotomic_prime, real_root_count};
pub use error::{Error, Result};
pub use poly::Poly;

/// Polynomial with integer coefficients, the workhorse type.
pub type IntPoly = Poly<num_bigint::BigInt>;
/// Polynomial with rational coefficients, used inside field arithmetic.
pub type RatPoly = Poly<num_rational::BigRational>;
