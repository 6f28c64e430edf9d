//! Parsing of field designations and coefficient lists.

use fourcirc_core::galois::{FieldCtx, Gf};
use fourcirc_core::polyring::{CyclicRing, RingElem};
use fourcirc_core::{arith, Error};

use crate::Failure;

/// `p`, `p^k`, or a prime power written out, e.g. `4`.
pub fn parse_order(s: &str) -> Result<(u32, u32), Failure> {
    let bad = || Failure::Invalid(format!("cannot read field order {s:?}"));
    let s = s.trim();
    let (p, k) = match s.split_once('^') {
        Some((p, k)) => {
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            let k: u32 = k.trim().parse().map_err(|_| bad())?;
            if !arith::is_prime(p) {
                return Err(Error::NotPrime(p).into());
            }
            (p, k)
        }
        None => {
            let q: u64 = s.parse().map_err(|_| bad())?;
            arith::prime_power(q).ok_or(Error::NotPrimePower(q))?
        }
    };
    let p = u32::try_from(p).map_err(|_| bad())?;
    Ok((p, k))
}

/// Comma separated non-negative integers; the empty string is the empty list.
pub fn parse_list(s: &str) -> Result<Vec<u32>, Failure> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Failure::Invalid(format!("cannot read coefficient {t:?} in {s:?}")))
        })
        .collect()
}

pub fn parse_field(q: &str, modulus: Option<&str>) -> Result<FieldCtx, Failure> {
    let (p, k) = parse_order(q)?;
    let modulus = modulus.map(parse_list).transpose()?;
    Ok(FieldCtx::new(p, k, modulus.as_deref())?)
}

/// Ascending coefficients; elements of `F_{p^k}` are written as the integer
/// `sum d_i p^i` of their digits. Shorter lists are padded with zeros.
pub fn parse_elem(ring: &CyclicRing, s: &str) -> Result<RingElem, Failure> {
    let raw = parse_list(s)?;
    let coeffs = raw
        .into_iter()
        .map(|c| ring.field().elem(c))
        .collect::<Result<Vec<Gf>, _>>()?;
    Ok(ring.elem(&coeffs)?)
}

pub fn coeffs(e: &RingElem) -> Vec<u32> {
    e.coeffs().iter().map(|g| g.0).collect()
}

pub fn poly_coeffs(c: &[Gf]) -> Vec<u32> {
    c.iter().map(|g| g.0).collect()
}

pub fn join(c: &[u32]) -> String {
    c.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(parse_order("2").unwrap(), (2, 1));
        assert_eq!(parse_order("2^2").unwrap(), (2, 2));
        assert_eq!(parse_order("9").unwrap(), (3, 2));
        assert!(parse_order("6").is_err());
        assert!(parse_order("4^2").is_err());
        assert!(parse_order("x").is_err());
    }

    #[test]
    fn lists() {
        assert_eq!(parse_list("0, 1,0").unwrap(), vec![0, 1, 0]);
        assert_eq!(parse_list("").unwrap(), Vec::<u32>::new());
        assert!(parse_list("1,-1").is_err());
    }

    #[test]
    fn elements() {
        let f4 = parse_field("2^2", None).unwrap();
        let r = CyclicRing::new(&f4, 3).unwrap();
        assert_eq!(coeffs(&parse_elem(&r, "3,1").unwrap()), vec![3, 1, 0]);
        assert!(parse_elem(&r, "4").is_err());
        assert!(parse_elem(&r, "0,0,0,1").is_err());
        assert!(parse_field("2^2", Some("1,1,0")).is_err());
    }
}
