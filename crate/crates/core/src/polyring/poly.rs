use alloc::vec;
use alloc::vec::Vec;

use crate::galois::{Embedding, FieldCtx, Gf};

/// A polynomial over a [`FieldCtx`] with ascending coefficients and no
/// trailing zeros. The zero polynomial has an empty coefficient vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly(Vec<Gf>);

impl Poly {
    pub fn new(mut coeffs: Vec<Gf>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![Gf::ONE])
    }

    pub fn monomial(c: Gf, deg: usize) -> Self {
        let mut v = vec![Gf::ZERO; deg + 1];
        v[deg] = c;
        Poly::new(v)
    }

    /// `x^n - 1`.
    pub fn x_n_minus_one(f: &FieldCtx, n: usize) -> Self {
        let mut v = vec![Gf::ZERO; n + 1];
        v[0] = f.neg(Gf::ONE);
        v[n] = Gf::ONE;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[Gf] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<Gf> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Gf {
        self.0.last().copied().unwrap_or(Gf::ZERO)
    }

    pub fn coeff(&self, i: usize) -> Gf {
        self.0.get(i).copied().unwrap_or(Gf::ZERO)
    }

    pub fn is_one(&self) -> bool {
        self.0 == [Gf::ONE]
    }

    pub fn add(&self, other: &Poly, f: &FieldCtx) -> Poly {
        let len = self.0.len().max(other.0.len());
        Poly::new((0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly, f: &FieldCtx) -> Poly {
        let len = self.0.len().max(other.0.len());
        Poly::new((0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn scale(&self, c: Gf, f: &FieldCtx) -> Poly {
        Poly::new(self.0.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn mul(&self, other: &Poly, f: &FieldCtx) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Gf::ZERO; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn divrem(&self, divisor: &Poly, f: &FieldCtx) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv_lead = f.inv(divisor.lead()).expect("leading coefficient is nonzero");
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Gf::ZERO; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul(rem[top], inv_lead);
            if c.is_zero() {
                continue;
            }
            quot[top - dd] = c;
            for (i, &d) in divisor.0.iter().enumerate() {
                let idx = top - dd + i;
                rem[idx] = f.sub(rem[idx], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Poly, f: &FieldCtx) -> Poly {
        self.divrem(divisor, f).1
    }

    pub fn monic(&self, f: &FieldCtx) -> Poly {
        match f.inv(self.lead()) {
            Some(inv) => self.scale(inv, f),
            None => Poly::zero(),
        }
    }

    /// Monic gcd by Euclid; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly, f: &FieldCtx) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(&y, f);
            x = y;
            y = r;
        }
        x.monic(f)
    }

    /// Returns `(g, s, t)` with `g = s a + t b` and `g` monic.
    pub fn ext_gcd(a: &Poly, b: &Poly, f: &FieldCtx) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1, f);
            let s = s0.sub(&q.mul(&s1, f), f);
            let t = t0.sub(&q.mul(&t1, f), f);
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s);
            t0 = core::mem::replace(&mut t1, t);
        }
        match f.inv(r0.lead()) {
            Some(inv) => (r0.scale(inv, f), s0.scale(inv, f), t0.scale(inv, f)),
            None => (r0, s0, t0),
        }
    }

    pub fn eval(&self, x: Gf, f: &FieldCtx) -> Gf {
        self.0.iter().rev().fold(Gf::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Evaluates at a point of an extension field, mapping coefficients through `emb`.
    pub fn eval_in(&self, ext: &FieldCtx, emb: &Embedding, x: Gf) -> Gf {
        self.0
            .iter()
            .rev()
            .fold(Gf::ZERO, |acc, &c| ext.add(ext.mul(acc, x), emb.map(c)))
    }

    /// Monic reciprocal `x^deg f(1/x) / f(0)`; `None` when `f(0) = 0`.
    pub fn monic_reciprocal(&self, f: &FieldCtx) -> Option<Poly> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return None;
        }
        let rev: Vec<Gf> = self.0.iter().rev().copied().collect();
        Some(Poly::new(rev).scale(f.inv(c0)?, f))
    }

    pub fn is_self_reciprocal(&self, f: &FieldCtx) -> bool {
        self.monic_reciprocal(f).as_ref() == Some(&self.monic(f))
    }
}
