//! Polynomials over `F_q`, the cyclic ring `R(n, F_q)`, and the structured
//! factorization of `x^n - 1`.

mod factor;
mod poly;
mod ring;

pub use factor::{
    factor_xn_minus_1, is_two_factor_case, FactorKind, FactorizationReport, IrreducibleFactor,
};
pub use poly::Poly;
pub use ring::{CyclicRing, RingElem};

pub use crate::arith::is_primitive_root;
