//! Finite fields `F_q`, `q = p^k`, with `q` at most [`MAX_FIELD_SIZE`].
//!
//! Elements are stored packed: the element `c_0 + c_1 y + ... + c_{k-1} y^{k-1}`
//! (with `y` a root of the modulus) is the integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`.
//! Multiplication goes through discrete log tables built once per field, so a
//! [`FieldCtx`] is immutable after construction and can be shared freely
//! between threads.
//!
//! Towers are never built. An extension of an extension is flattened to a
//! single extension of `F_p`, and [`Embedding`] maps the smaller field into it.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::{Error, Result, MAX_FIELD_SIZE};

/// A packed field element; only meaningful together with its [`FieldCtx`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf(pub u32);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, ascending, length `k + 1`. Empty for prime fields.
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for `i < q - 1`.
    exp: Vec<u32>,
    /// `log[x]` for nonzero `x`; `log[0]` is unused.
    log: Vec<u32>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// Builds `F_{p^k}`. Without an explicit modulus a prime field uses none and
    /// an extension uses [`least_irreducible`].
    pub fn new(p: u32, k: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !arith::is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let size = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
        if size > MAX_FIELD_SIZE {
            return Err(Error::FieldTooLarge { size, max: MAX_FIELD_SIZE });
        }
        let modulus = match (k, modulus) {
            (1, None) => Vec::new(),
            (1, Some(m)) => {
                // Any monic linear polynomial gives the same prime field.
                check_monic(m, 1, p)?;
                Vec::new()
            }
            (_, Some(m)) => {
                check_monic(m, k, p)?;
                if !is_irreducible(m, p) {
                    return Err(Error::ReducibleModulus);
                }
                m.to_vec()
            }
            (_, None) => least_irreducible(p, k),
        };
        let mut field = FieldCtx {
            p,
            k,
            q: size as u32,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_tables()?;
        Ok(field)
    }

    /// Builds `F_q` from its cardinality.
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, k) = arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p as u32, k, None)
    }

    pub fn prime_field(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    fn build_tables(&mut self) -> Result<()> {
        let q = self.q as usize;
        if q == 2 {
            self.exp = vec![1];
            self.log = vec![0, 0];
            return Ok(());
        }
        for candidate in 2..self.q {
            let g = self.unpack(Gf(candidate));
            let mut exp = Vec::with_capacity(q - 1);
            let mut cur = self.unpack(Gf::ONE);
            loop {
                exp.push(self.pack(&cur));
                cur = self.slow_mul(&cur, &g);
                if self.pack(&cur) == 1 {
                    break;
                }
                if exp.len() >= q - 1 {
                    break;
                }
            }
            if exp.len() == q - 1 {
                let mut log = vec![0u32; q];
                for (i, &x) in exp.iter().enumerate() {
                    log[x as usize] = i as u32;
                }
                self.exp = exp;
                self.log = log;
                return Ok(());
            }
        }
        Err(Error::Internal("no primitive element found"))
    }

    fn slow_mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        if k > 1 {
            for top in (k..prod.len()).rev() {
                let c = prod[top];
                if c == 0 {
                    continue;
                }
                for (i, &m) in self.modulus[..k].iter().enumerate() {
                    let sub = c * m as u64 % p;
                    prod[top - k + i] = (prod[top - k + i] + p - sub) % p;
                }
                prod[top] = 0;
            }
        }
        prod.truncate(k);
        prod.into_iter().map(|c| c as u32).collect()
    }

    fn unpack(&self, x: Gf) -> Vec<u32> {
        let mut v = x.0;
        (0..self.k)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    fn pack(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Ascending monic modulus, empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Gf> + Clone {
        (0..self.q).map(Gf)
    }

    pub fn elem(&self, raw: u32) -> Result<Gf> {
        if raw < self.q {
            Ok(Gf(raw))
        } else {
            Err(Error::BadElement { value: raw, q: self.q })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Gf {
        Gf(v.rem_euclid(self.p as i64) as u32)
    }

    /// Base-`p` coordinates of `x`, ascending in powers of the modulus root.
    pub fn digits(&self, x: Gf) -> Vec<u32> {
        self.unpack(x)
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<Gf> {
        if digits.len() > self.k as usize {
            return Err(Error::LengthMismatch { expected: self.k as usize, got: digits.len() });
        }
        if let Some(&bad) = digits.iter().find(|&&d| d >= self.p) {
            return Err(Error::BadElement { value: bad, q: self.p });
        }
        Ok(Gf(self.pack(digits)))
    }

    pub fn primitive_element(&self) -> Gf {
        Gf(if self.q == 2 { 1 } else { self.exp[1] })
    }

    /// Discrete log to the base [`Self::primitive_element`].
    pub fn log(&self, x: Gf) -> Option<u32> {
        (!x.is_zero()).then(|| self.log[x.0 as usize])
    }

    #[inline]
    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        if self.p == 2 {
            return Gf(a.0 ^ b.0);
        }
        if self.k == 1 {
            let s = a.0 + b.0;
            return Gf(if s >= self.p { s - self.p } else { s });
        }
        let (mut x, mut y, mut place, mut out) = (a.0, b.0, 1u32, 0u32);
        while x != 0 || y != 0 {
            let d = (x % self.p + y % self.p) % self.p;
            out += d * place;
            place *= self.p;
            x /= self.p;
            y /= self.p;
        }
        Gf(out)
    }

    #[inline]
    pub fn neg(&self, a: Gf) -> Gf {
        if self.p == 2 {
            return a;
        }
        if self.k == 1 {
            return Gf(if a.0 == 0 { 0 } else { self.p - a.0 });
        }
        let (mut x, mut place, mut out) = (a.0, 1u32, 0u32);
        while x != 0 {
            let d = x % self.p;
            out += ((self.p - d) % self.p) * place;
            place *= self.p;
            x /= self.p;
        }
        Gf(out)
    }

    #[inline]
    pub fn sub(&self, a: Gf, b: Gf) -> Gf {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        if a.is_zero() || b.is_zero() {
            return Gf::ZERO;
        }
        let order = self.q - 1;
        let s = self.log[a.0 as usize] + self.log[b.0 as usize];
        Gf(self.exp[(if s >= order { s - order } else { s }) as usize])
    }

    pub fn inv(&self, a: Gf) -> Option<Gf> {
        if a.is_zero() {
            return None;
        }
        let order = self.q - 1;
        let l = self.log[a.0 as usize];
        Some(Gf(self.exp[((order - l) % order) as usize]))
    }

    pub fn div(&self, a: Gf, b: Gf) -> Option<Gf> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// `x^e` by square-and-multiply.
    pub fn pow(&self, x: Gf, mut e: u64) -> Gf {
        let mut base = x;
        let mut acc = Gf::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The Frobenius map applied `e` times: `x -> x^(p^e)`.
    pub fn frobenius(&self, x: Gf, e: u32) -> Gf {
        (0..e).fold(x, |acc, _| self.pow(acc, self.p as u64))
    }

    /// Quadratic character: `+1` on nonzero squares, `-1` on non-squares,
    /// `0` at zero. Only defined for odd `q`.
    pub fn quad_char(&self, x: Gf) -> Result<i8> {
        if self.p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        Ok(match self.log(x) {
            None => 0,
            Some(l) if l % 2 == 0 => 1,
            Some(_) => -1,
        })
    }

    /// The field has `self` as a subfield up to the chosen embedding.
    pub fn contains_subfield(&self, sub: &FieldCtx) -> bool {
        self.p == sub.p && self.k.is_multiple_of(sub.k)
    }
}

fn check_monic(m: &[u32], k: u32, p: u32) -> Result<()> {
    let ok = m.len() == k as usize + 1 && m[k as usize] == 1 && m.iter().all(|&c| c < p);
    if ok {
        Ok(())
    } else {
        Err(Error::BadModulus { expected: k, p })
    }
}

/// Remainder of `f` modulo the monic `g`, coefficients in `F_p`.
fn rem_mod_p(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let p = p as u64;
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = r[r.len() - 1];
        let shift = r.len() - 1 - dg;
        if lead != 0 {
            for (i, &c) in g.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - lead * c as u64 % p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut v = low;
            for _ in 0..d {
                g.push((v % p as u64) as u32);
                v /= p as u64;
            }
            g.push(1);
            if rem_mod_p(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The least monic irreducible polynomial of degree `k` over `F_p`, comparing
/// non-leading coefficients from `y^{k-1}` down to `y^0`.
pub fn least_irreducible(p: u32, k: u32) -> Vec<u32> {
    let count = (p as u64).pow(k);
    for low in 0..count {
        let mut f = Vec::with_capacity(k as usize + 1);
        let mut v = low;
        for _ in 0..k {
            f.push((v % p as u64) as u32);
            v /= p as u64;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Embedding of a subfield `F_{p^k}` into a flattened extension `F_{p^{km}}`.
#[derive(Clone, Debug)]
pub struct Embedding {
    images: Vec<Gf>,
    inverse: Vec<u32>,
}

impl Embedding {
    /// Sends the modulus root of `base` to the least root of the same
    /// polynomial in `ext`.
    pub fn new(base: &FieldCtx, ext: &FieldCtx) -> Result<Self> {
        if !ext.contains_subfield(base) {
            return Err(Error::Internal("extension does not contain the base field"));
        }
        let theta = if base.k == 1 {
            Gf::ZERO
        } else {
            ext.elements()
                .find(|&t| {
                    let val = base.modulus.iter().rev().fold(Gf::ZERO, |acc, &c| {
                        ext.add(ext.mul(acc, t), ext.from_int(c as i64))
                    });
                    val.is_zero()
                })
                .ok_or(Error::Internal("base modulus has no root in extension"))?
        };
        let mut images = Vec::with_capacity(base.q as usize);
        let mut inverse = vec![u32::MAX; ext.q as usize];
        for x in base.elements() {
            let digits = base.digits(x);
            let img = digits.iter().rev().fold(Gf::ZERO, |acc, &c| {
                ext.add(ext.mul(acc, theta), ext.from_int(c as i64))
            });
            inverse[img.0 as usize] = x.0;
            images.push(img);
        }
        Ok(Embedding { images, inverse })
    }

    #[inline]
    pub fn map(&self, x: Gf) -> Gf {
        self.images[x.0 as usize]
    }

    /// Preimage of `y`, if `y` lies in the embedded subfield.
    pub fn preimage(&self, y: Gf) -> Option<Gf> {
        match self.inverse.get(y.0 as usize) {
            Some(&v) if v != u32::MAX => Some(Gf(v)),
            _ => None,
        }
    }
}

/// `F_{q^m}` realized as a flattened `F_{p^{km}}` together with the
/// embedding of `F_q`.
#[derive(Clone, Debug)]
pub struct Extension {
    pub field: FieldCtx,
    pub embedding: Embedding,
}

impl Extension {
    pub fn new(base: &FieldCtx, degree: u32) -> Result<Self> {
        let total = base.k.checked_mul(degree).ok_or(Error::ZeroDegree)?;
        let size = (base.p as u64).checked_pow(total).unwrap_or(u64::MAX);
        if size > MAX_FIELD_SIZE {
            return Err(Error::FieldTooLarge { size, max: MAX_FIELD_SIZE });
        }
        let field = FieldCtx::new(base.p, total, None)?;
        let embedding = Embedding::new(base, &field)?;
        Ok(Extension { field, embedding })
    }

    /// `x -> x^{q^e}`, the Frobenius of the extension over the base field.
    pub fn base_frobenius(&self, x: Gf, base: &FieldCtx, e: u32) -> Gf {
        self.field.frobenius(x, base.k * e)
    }
}
