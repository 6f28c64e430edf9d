//! Self-dual four circulant codes over finite fields.
//!
//! A four circulant code of length `4n` over `F_q` is generated by
//!
//! ```text
//!     [ I_n   0    A    B  ]
//!     [  0   I_n  -B^T  A^T ]
//! ```
//!
//! where `A` and `B` are the `n x n` circulant matrices of two polynomials
//! `a(x)`, `b(x)` in `R(n, F_q) = F_q[x]/(x^n - 1)`. This crate provides the
//! arithmetic needed to build such codes, test them for self-duality and the
//! LCD property, split them into CRT constituents, count them exhaustively and
//! evaluate the counting inequality behind their Gilbert-Varshamov-style
//! distance guarantee.
//!
//! The crate is `no_std` and only needs `alloc`. Sweeps that are expensive are
//! exposed as range scans with an associative merge so that callers with
//! threads available can split them across workers.
//!
//! ## Modules
//!
//! - [`galois`]: finite fields `F_{p^k}` with log/antilog tables.
//! - [`polyring`]: polynomials, the cyclic ring `R(n, F_q)` and the
//!   cyclotomic-coset factorization of `x^n - 1`.
//! - [`code`]: the four circulant code, its criteria, encoder and exact
//!   minimum distance.
//! - [`crt`]: constituent decomposition and Hermitian checks.
//! - [`census`]: brute-force counts and closed forms.
//! - [`asympt`]: q-ary entropy, Hamming-ball volumes, the expurgation bound.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod asympt;
pub mod census;
pub mod code;
pub mod crt;
mod error;
pub mod galois;
pub mod linalg;
pub mod polyring;

pub use error::{Error, Result};

/// Default ceiling on exhaustive sweeps (codeword evaluations or generator pairs).
pub const DEFAULT_CAP: u64 = 1 << 26;

/// Largest field cardinality the crate will build tables for.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;
