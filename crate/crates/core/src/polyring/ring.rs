use alloc::vec;
use alloc::vec::Vec;

use super::Poly;
use crate::galois::{FieldCtx, Gf};
use crate::{Error, Result};

/// Residue class in `R(n, F_q) = F_q[x]/(x^n - 1)`: exactly `n` coefficients.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingElem(Vec<Gf>);

impl RingElem {
    pub fn coeffs(&self) -> &[Gf] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Hamming weight of the coefficient vector.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|c| !c.is_zero()).count()
    }

    /// Scalar multiple of the all-ones vector (zero included).
    pub fn is_constant_vector(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

/// The cyclic ring `R(n, F_q)` over a borrowed field.
#[derive(Clone, Copy, Debug)]
pub struct CyclicRing<'f> {
    field: &'f FieldCtx,
    n: usize,
}

impl<'f> CyclicRing<'f> {
    pub fn new(field: &'f FieldCtx, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        Ok(CyclicRing { field, n })
    }

    pub fn field(&self) -> &'f FieldCtx {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `q^n`, saturating.
    pub fn size(&self) -> u128 {
        (self.field.q() as u128).saturating_pow(self.n as u32)
    }

    pub fn zero(&self) -> RingElem {
        RingElem(vec![Gf::ZERO; self.n])
    }

    pub fn one(&self) -> RingElem {
        self.monomial(Gf::ONE, 0)
    }

    pub fn monomial(&self, c: Gf, i: usize) -> RingElem {
        let mut v = vec![Gf::ZERO; self.n];
        v[i % self.n] = c;
        RingElem(v)
    }

    pub fn all_ones(&self) -> RingElem {
        RingElem(vec![Gf::ONE; self.n])
    }

    /// From at most `n` ascending coefficients, zero-padded.
    pub fn elem(&self, coeffs: &[Gf]) -> Result<RingElem> {
        if coeffs.len() > self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: coeffs.len() });
        }
        let q = self.field.q();
        if let Some(bad) = coeffs.iter().find(|c| c.0 >= q) {
            return Err(Error::BadElement { value: bad.0, q });
        }
        let mut v = coeffs.to_vec();
        v.resize(self.n, Gf::ZERO);
        Ok(RingElem(v))
    }

    /// Reduction of a polynomial modulo `x^n - 1`.
    pub fn reduce(&self, p: &Poly) -> RingElem {
        let mut v = vec![Gf::ZERO; self.n];
        for (i, &c) in p.coeffs().iter().enumerate() {
            v[i % self.n] = self.field.add(v[i % self.n], c);
        }
        RingElem(v)
    }

    /// The canonical representative of degree below `n`.
    pub fn lift(&self, a: &RingElem) -> Poly {
        Poly::new(a.0.clone())
    }

    /// The element whose coefficient list is the big-endian base-`q` expansion
    /// of `index`: the constant term is the most significant digit, so index
    /// order is lexicographic order of coefficient lists.
    pub fn from_index(&self, mut index: u64) -> RingElem {
        let q = self.field.q() as u64;
        let mut v = vec![Gf::ZERO; self.n];
        for slot in v.iter_mut().rev() {
            *slot = Gf((index % q) as u32);
            index /= q;
        }
        RingElem(v)
    }

    pub fn to_index(&self, a: &RingElem) -> u64 {
        let q = self.field.q() as u64;
        a.0.iter().fold(0, |acc, c| acc * q + c.0 as u64)
    }

    fn check(&self, a: &RingElem) -> Result<()> {
        if a.0.len() == self.n {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: self.n, got: a.0.len() })
        }
    }

    pub fn checked(&self, a: &RingElem) -> Result<()> {
        self.check(a)
    }

    pub fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        RingElem(a.0.iter().zip(&b.0).map(|(&x, &y)| self.field.add(x, y)).collect())
    }

    pub fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        RingElem(a.0.iter().zip(&b.0).map(|(&x, &y)| self.field.sub(x, y)).collect())
    }

    pub fn neg(&self, a: &RingElem) -> RingElem {
        RingElem(a.0.iter().map(|&x| self.field.neg(x)).collect())
    }

    pub fn scale(&self, a: &RingElem, c: Gf) -> RingElem {
        RingElem(a.0.iter().map(|&x| self.field.mul(x, c)).collect())
    }

    /// Cyclic convolution.
    pub fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        let n = self.n;
        let f = self.field;
        let mut out = vec![Gf::ZERO; n];
        for (i, &x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                let k = if i + j >= n { i + j - n } else { i + j };
                out[k] = f.add(out[k], f.mul(x, y));
            }
        }
        RingElem(out)
    }

    pub fn try_mul(&self, a: &RingElem, b: &RingElem) -> Result<RingElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    /// `a(x^{n-1}) mod (x^n - 1)`: coefficient `i` moves to `(n - i) mod n`.
    pub fn reciprocal(&self, a: &RingElem) -> RingElem {
        let n = self.n;
        RingElem((0..n).map(|i| a.0[(n - i) % n]).collect())
    }

    pub fn gcd_with_modulus(&self, a: &RingElem) -> Poly {
        Poly::gcd(&self.lift(a), &Poly::x_n_minus_one(self.field, self.n), self.field)
    }

    pub fn is_unit(&self, a: &RingElem) -> bool {
        self.gcd_with_modulus(a).is_one()
    }

    pub fn inverse(&self, a: &RingElem) -> Option<RingElem> {
        let modulus = Poly::x_n_minus_one(self.field, self.n);
        let (g, s, _) = Poly::ext_gcd(&self.lift(a), &modulus, self.field);
        g.is_one().then(|| self.reduce(&s))
    }

    /// Iterates `R(n, F_q)` in index order. Panics if `q^n` overflows `u64`.
    pub fn elements(&self) -> impl Iterator<Item = RingElem> + '_ {
        let size = u64::try_from(self.size()).expect("ring too large to enumerate");
        (0..size).map(move |i| self.from_index(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_elem(r: &CyclicRing, v: &[u32]) -> RingElem {
        r.elem(&v.iter().map(|&c| Gf(c)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn reciprocal_examples() {
        let f2 = FieldCtx::prime_field(2).unwrap();
        let r = CyclicRing::new(&f2, 3).unwrap();
        assert_eq!(r.reciprocal(&ring_elem(&r, &[0, 1, 0])), ring_elem(&r, &[0, 0, 1]));
        assert_eq!(r.reciprocal(&r.one()), r.one());
        assert_eq!(r.reciprocal(&ring_elem(&r, &[1, 1])), ring_elem(&r, &[1, 0, 1]));
    }

    #[test]
    fn mul_and_units() {
        let f2 = FieldCtx::prime_field(2).unwrap();
        let r3 = CyclicRing::new(&f2, 3).unwrap();
        let x = r3.monomial(Gf::ONE, 1);
        let x2 = r3.monomial(Gf::ONE, 2);
        assert_eq!(r3.mul(&x, &x2), r3.one());
        let r5 = CyclicRing::new(&f2, 5).unwrap();
        assert!(r5.is_unit(&r5.monomial(Gf::ONE, 1)));
        assert!(!r5.is_unit(&r5.all_ones()));
        assert!(!r5.is_unit(&r5.zero()));
    }

    #[test]
    fn inverse_matches_is_unit() {
        let f3 = FieldCtx::prime_field(3).unwrap();
        let r = CyclicRing::new(&f3, 4).unwrap();
        for a in r.elements() {
            match r.inverse(&a) {
                Some(inv) => {
                    assert!(r.is_unit(&a));
                    assert_eq!(r.mul(&a, &inv), r.one());
                }
                None => assert!(!r.is_unit(&a)),
            }
        }
    }

    #[test]
    fn index_roundtrip_and_order() {
        let f3 = FieldCtx::prime_field(3).unwrap();
        let r = CyclicRing::new(&f3, 3).unwrap();
        let all: Vec<RingElem> = r.elements().collect();
        assert_eq!(all.len(), 27);
        for (i, a) in all.iter().enumerate() {
            assert_eq!(r.to_index(a), i as u64);
        }
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn length_errors() {
        let f2 = FieldCtx::prime_field(2).unwrap();
        let r = CyclicRing::new(&f2, 3).unwrap();
        assert!(matches!(r.elem(&[Gf(1); 4]), Err(Error::LengthMismatch { .. })));
        assert!(matches!(r.elem(&[Gf(2)]), Err(Error::BadElement { .. })));
        assert_eq!(CyclicRing::new(&f2, 0).err(), Some(Error::ZeroLength));
        let r4 = CyclicRing::new(&f2, 4).unwrap();
        assert!(r.try_mul(&r.one(), &r4.one()).is_err());
    }
}
