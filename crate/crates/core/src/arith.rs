//! Integer number theory on machine words: primality, multiplicative
//! order, cyclotomic cosets.

use alloc::vec;
use alloc::vec::Vec;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, k)` with `q = p^k`, or `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

pub fn is_perfect_square(q: u64) -> bool {
    let r = libm::sqrt(q as f64) as u64;
    (r.saturating_sub(1)..=r + 1).any(|s| s * s == q)
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Multiplicative order of `q` modulo `n`, or `None` if `gcd(q, n) != 1`.
pub fn mult_order(q: u64, n: u64) -> Option<u64> {
    if n == 0 || gcd(q % n.max(1), n) != 1 {
        return None;
    }
    if n == 1 {
        return Some(1);
    }
    let q = q % n;
    let mut x = q;
    let mut ord = 1;
    while x != 1 {
        x = (x as u128 * q as u128 % n as u128) as u64;
        ord += 1;
    }
    Some(ord)
}

/// `q` is a primitive root modulo the prime `n`.
pub fn is_primitive_root(q: u64, n: u64) -> bool {
    n >= 2 && mult_order(q, n) == Some(n - 1)
}

/// Cyclotomic cosets of `q` modulo `n`, each sorted ascending and the list
/// ordered by least element.
pub fn cyclotomic_cosets(q: u64, n: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let qm = (q % n as u64) as usize;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut coset = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            coset.push(i);
            i = i * qm % n;
        }
        coset.sort_unstable();
        out.push(coset);
    }
    out
}

pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut sieve = vec![true; limit + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= limit {
        if sieve[i] {
            let mut j = i * i;
            while j <= limit {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &p)| p.then_some(i as u64))
        .collect()
}
