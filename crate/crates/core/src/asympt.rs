//! q-ary entropy, Hamming-ball volumes and the finite-length expurgation bound.
//!
//! Counting is done in arbitrary precision; only entropies are floating point.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::census::{membership_bound_big, self_dual_count_formula};
use crate::galois::FieldCtx;
use crate::{Error, Result};

/// Bisection stops once the bracket is narrower than this.
pub const INVERSE_TOLERANCE: f64 = 1e-12;

fn t_max(q: u32) -> f64 {
    (q as f64 - 1.0) / q as f64
}

fn log_q(x: f64, q: u32) -> f64 {
    libm::log(x) / libm::log(q as f64)
}

/// `H_q(t) = t log_q(q-1) - t log_q t - (1-t) log_q(1-t)`, with `H_q(0) = 0`,
/// for `0 <= t <= (q-1)/q`.
pub fn entropy(q: u32, t: f64) -> Result<f64> {
    if q < 2 || !(0.0..=t_max(q) + 1e-15).contains(&t) {
        return Err(Error::OutOfRange(t));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let t = t.min(t_max(q));
    Ok(t * log_q(q as f64 - 1.0, q) - t * log_q(t, q) - (1.0 - t) * log_q(1.0 - t, q))
}

/// The `t` in `[0, (q-1)/q]` with `H_q(t) = y`, by bisection.
pub fn entropy_inverse(q: u32, y: f64) -> Result<f64> {
    if q < 2 || !(0.0..=1.0).contains(&y) {
        return Err(Error::OutOfRange(y));
    }
    let top = t_max(q);
    if y == 0.0 {
        return Ok(0.0);
    }
    if y >= entropy(q, top)? {
        return Ok(top);
    }
    let (mut lo, mut hi) = (0.0f64, top);
    while hi - lo > INVERSE_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if entropy(q, mid)? < y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `sum_{i <= r} C(N, i) (q - 1)^i`; radii above `N` give the whole space.
pub fn ball_volume(q: u32, len: usize, radius: usize) -> BigUint {
    let r = radius.min(len);
    let base = BigUint::from(q - 1);
    let mut term_pow = BigUint::one();
    let mut total = BigUint::zero();
    for i in 0..=r {
        total += binomial(len, i) * &term_pow;
        term_pow *= &base;
    }
    total
}

/// Natural logarithm of a positive big integer.
pub fn ln_big(v: &BigUint) -> f64 {
    let bits = v.bits();
    if bits <= 64 {
        return libm::log(v.to_u64().unwrap_or(0) as f64);
    }
    let shift = bits - 64;
    let top = (v >> shift).to_u64().unwrap_or(u64::MAX) as f64;
    libm::log(top) + shift as f64 * core::f64::consts::LN_2
}

/// `log_q V(q, N, floor(t N)) / N - H_q(t)`.
pub fn entropy_volume_gap(q: u32, t: f64, len: usize) -> Result<f64> {
    let h = entropy(q, t)?;
    if len == 0 {
        return Err(Error::OutOfRange(0.0));
    }
    let radius = libm::floor(t * len as f64) as usize;
    let v = ball_volume(q, len, radius);
    Ok(ln_big(&v) / libm::log(q as f64) / len as f64 - h)
}

/// Finite-length form of the expurgation argument for self-dual four
/// circulant codes of length `4n`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub q: u32,
    pub n: usize,
    /// Exact number of self-dual generator pairs from the closed form.
    pub total_self_dual: BigUint,
    /// `q^n (q - 1)`, the per-vector membership bound.
    pub membership_bound: BigUint,
    /// `bad_bounds[d] = q^n (q - 1) (V(4n, d) - 1)` for `d = 0 ..= guaranteed_distance`
    /// (the last entry is the first one that is not below `total_self_dual`,
    /// unless the whole range up to `4n` stays below).
    pub bad_bounds: Vec<BigUint>,
    /// Some self-dual code has minimum distance at least this.
    pub guaranteed_distance: usize,
    /// `H_q^{-1}(1/8)`.
    pub delta_star: f64,
    pub relative_guarantee: f64,
    /// `H_q(guaranteed_distance / 4n)`, when the ratio is within the domain.
    pub entropy_at_guarantee: Option<f64>,
    pub notes: Vec<&'static str>,
}

impl BoundReport {
    pub fn bad_bound(&self, d: usize) -> Option<&BigUint> {
        self.bad_bounds.get(d)
    }
}

pub const NOTE_LEADING_ORDER: &str = "self-dual count uses the exact closed form, whose leading order is (q - eta(-1)) q^(3(n-1)/2) rather than q^(3n/2)";
pub const NOTE_NONCONSTANT: &str = "membership bound q^n (q - 1) is applied to every nonzero low-weight vector, including those with constant message blocks";

pub fn expurgation_bound(field: &FieldCtx, n: usize) -> Result<BoundReport> {
    let q = field.q();
    let total = self_dual_count_formula(field, n)
        .ok_or(Error::HypothesesViolated { n, q: q as u64 })?;
    let factor = membership_bound_big(q, n);
    let len = 4 * n;
    let mut bad_bounds = Vec::new();
    let mut dmax = 0usize;
    for d in 0..=len {
        let bad = &factor * (ball_volume(q, len, d) - 1u32);
        let below = bad < total;
        bad_bounds.push(bad);
        if below {
            dmax = d;
        } else {
            break;
        }
    }
    let guaranteed_distance = dmax + 1;
    let relative_guarantee = guaranteed_distance as f64 / len as f64;
    Ok(BoundReport {
        q,
        n,
        total_self_dual: total,
        membership_bound: factor,
        bad_bounds,
        guaranteed_distance,
        delta_star: entropy_inverse(q, 0.125)?,
        relative_guarantee,
        entropy_at_guarantee: entropy(q, relative_guarantee).ok(),
        notes: alloc::vec![NOTE_LEADING_ORDER, NOTE_NONCONSTANT],
    })
}

/// Finite-sample rate and relative distance: the largest `k/N` and the
/// smallest `d/N` over the family.
pub fn rate_and_delta(family: &[(usize, usize, usize)]) -> Option<(f64, f64)> {
    if family.is_empty() {
        return None;
    }
    let alpha = family.iter().map(|&(len, k, _)| k as f64 / len as f64).fold(f64::MIN, f64::max);
    let delta = family.iter().map(|&(len, _, d)| d as f64 / len as f64).fold(f64::MAX, f64::min);
    Some((alpha, delta))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entropy_examples() {
        assert_eq!(entropy(2, 0.0).unwrap(), 0.0);
        assert!((entropy(2, 0.5).unwrap() - 1.0).abs() < 1e-15);
        assert!((entropy(3, 2.0 / 3.0).unwrap() - 1.0).abs() < 1e-15);
        assert!(entropy(2, 0.6).is_err());
        assert!(entropy(2, -0.1).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(entropy_inverse(2, 1.0).unwrap(), 0.5);
        assert_eq!(entropy_inverse(2, 0.0).unwrap(), 0.0);
        let d = entropy_inverse(2, 0.125).unwrap();
        assert!((entropy(2, d).unwrap() - 0.125).abs() <= 1e-10);
        assert!(entropy_inverse(2, 1.5).is_err());
    }

    #[test]
    fn volumes() {
        assert_eq!(ball_volume(2, 12, 2), BigUint::from(79u32));
        assert_eq!(ball_volume(3, 9, 0), BigUint::one());
        assert_eq!(ball_volume(2, 52, 52), BigUint::one() << 52);
        assert_eq!(ball_volume(5, 4, 9), BigUint::from(625u32));
    }

    #[test]
    fn gap_examples() {
        let g64 = entropy_volume_gap(2, 0.25, 64).unwrap();
        assert!(-0.25 < g64 && g64 < 0.0);
        let g256 = entropy_volume_gap(2, 0.25, 256).unwrap();
        assert!(g256.abs() < g64.abs());
        for len in [10, 33, 64] {
            assert!(entropy_volume_gap(2, 0.5, len).unwrap() <= 1e-12);
        }
    }

    #[test]
    fn bound_examples() {
        let f2 = FieldCtx::prime_field(2).unwrap();
        let rep = expurgation_bound(&f2, 13).unwrap();
        assert_eq!(rep.total_self_dual, BigUint::from(524_160u32));
        assert_eq!(rep.bad_bound(1), Some(&BigUint::from(425_984u32)));
        assert_eq!(rep.bad_bound(2), Some(&(BigUint::from(8192u32) * 1378u32)));
        assert_eq!(rep.guaranteed_distance, 2);
        let tiny = expurgation_bound(&f2, 3).unwrap();
        assert_eq!(tiny.total_self_dual, BigUint::from(12u32));
        assert_eq!(tiny.bad_bound(1), Some(&BigUint::from(96u32)));
        assert_eq!(tiny.guaranteed_distance, 1);
        assert!(matches!(expurgation_bound(&f2, 7), Err(Error::HypothesesViolated { .. })));
    }

    #[test]
    fn rate_examples() {
        assert_eq!(rate_and_delta(&[(12, 6, 4)]), Some((0.5, 1.0 / 3.0)));
        assert_eq!(rate_and_delta(&[(12, 6, 2), (20, 10, 4)]), Some((0.5, 1.0 / 6.0)));
        assert_eq!(rate_and_delta(&[]), None);
    }
}
