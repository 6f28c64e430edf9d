//! The four circulant code `C_{a,b}` of length `4n` and dimension `2n`.
//!
//! As an `R(n, F_q)`-module the code is generated by `(1, 0, a, b)` and
//! `(0, 1, -b', a')`, where `'` is the reciprocal `a'(x) = a(x^{n-1})`.
//! Vectors are laid out block by block as `(c, d, e, f)`, matching the column
//! order of the generator matrix.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::galois::{FieldCtx, Gf};
use crate::linalg::{self, Matrix};
use crate::polyring::{CyclicRing, Poly, RingElem};
use crate::{Error, Result};

/// An `n x n` circulant matrix given by its first row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circulant {
    first_row: RingElem,
}

impl Circulant {
    pub fn new(first_row: RingElem) -> Self {
        Circulant { first_row }
    }

    pub fn first_row(&self) -> &RingElem {
        &self.first_row
    }

    /// Row `i` is the first row cyclically shifted right `i` times.
    pub fn expand(&self) -> Matrix {
        let row = self.first_row.coeffs();
        let n = row.len();
        (0..n)
            .map(|i| (0..n).map(|j| row[(j + n - i) % n]).collect())
            .collect()
    }
}

/// A vector `(c, d, e, f)` of length `4n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Codeword {
    pub c: RingElem,
    pub d: RingElem,
    pub e: RingElem,
    pub f: RingElem,
}

impl Codeword {
    pub fn blocks(&self) -> [&RingElem; 4] {
        [&self.c, &self.d, &self.e, &self.f]
    }

    pub fn to_vec(&self) -> Vec<Gf> {
        self.blocks().iter().flat_map(|b| b.coeffs().iter().copied()).collect()
    }

    pub fn from_vec(ring: &CyclicRing, v: &[Gf]) -> Result<Self> {
        let n = ring.n();
        if v.len() != 4 * n {
            return Err(Error::LengthMismatch { expected: 4 * n, got: v.len() });
        }
        Ok(Codeword {
            c: ring.elem(&v[..n])?,
            d: ring.elem(&v[n..2 * n])?,
            e: ring.elem(&v[2 * n..3 * n])?,
            f: ring.elem(&v[3 * n..])?,
        })
    }

    pub fn weight(&self) -> usize {
        self.blocks().iter().map(|b| b.weight()).sum()
    }
}

/// Standard inner product of two vectors over `field`.
pub fn inner_product(field: &FieldCtx, u: &[Gf], v: &[Gf]) -> Gf {
    u.iter().zip(v).fold(Gf::ZERO, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

/// Result of an exhaustive minimum-distance scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinDistance {
    pub distance: usize,
    /// Index of the witness message; see [`FourCirculantCode::message`].
    pub message_index: u64,
    pub witness: Codeword,
}

#[derive(Clone, Debug)]
pub struct FourCirculantCode<'f> {
    ring: CyclicRing<'f>,
    a: RingElem,
    b: RingElem,
}

impl<'f> FourCirculantCode<'f> {
    pub fn new(ring: CyclicRing<'f>, a: RingElem, b: RingElem) -> Result<Self> {
        ring.checked(&a)?;
        ring.checked(&b)?;
        Ok(FourCirculantCode { ring, a, b })
    }

    pub fn from_indices(ring: CyclicRing<'f>, a: u64, b: u64) -> Self {
        FourCirculantCode { ring, a: ring.from_index(a), b: ring.from_index(b) }
    }

    pub fn ring(&self) -> &CyclicRing<'f> {
        &self.ring
    }

    pub fn field(&self) -> &'f FieldCtx {
        self.ring.field()
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn a(&self) -> &RingElem {
        &self.a
    }

    pub fn b(&self) -> &RingElem {
        &self.b
    }

    /// `1 + a a' + b b'` in `R(n, F_q)`.
    pub fn criterion_residue(&self) -> RingElem {
        let r = &self.ring;
        let aa = r.mul(&self.a, &r.reciprocal(&self.a));
        let bb = r.mul(&self.b, &r.reciprocal(&self.b));
        r.add(&r.add(&r.one(), &aa), &bb)
    }

    /// Polynomial self-duality test: `x^n - 1` divides `1 + a a' + b b'`.
    pub fn is_self_dual_poly(&self) -> bool {
        self.criterion_residue().is_zero()
    }

    /// LCD test: `1 + a a' + b b'` is coprime to `x^n - 1`.
    pub fn is_lcd(&self) -> bool {
        self.ring.is_unit(&self.criterion_residue())
    }

    pub fn circulant_a(&self) -> Circulant {
        Circulant::new(self.a.clone())
    }

    pub fn circulant_b(&self) -> Circulant {
        Circulant::new(self.b.clone())
    }

    /// `[I 0 A B; 0 I -B^T A^T]`, assembled from the expanded circulants.
    pub fn generator_matrix(&self) -> Matrix {
        let f = self.field();
        let n = self.n();
        let a = self.circulant_a().expand();
        let b = self.circulant_b().expand();
        let at = linalg::transpose(&a);
        let bt = linalg::transpose(&b);
        let mut g = vec![vec![Gf::ZERO; 4 * n]; 2 * n];
        for i in 0..n {
            g[i][i] = Gf::ONE;
            g[n + i][n + i] = Gf::ONE;
            for j in 0..n {
                g[i][2 * n + j] = a[i][j];
                g[i][3 * n + j] = b[i][j];
                g[n + i][2 * n + j] = f.neg(bt[i][j]);
                g[n + i][3 * n + j] = at[i][j];
            }
        }
        g
    }

    /// Matrix self-duality test: `A A^T + B B^T + I = 0` and `G G^T = 0`.
    pub fn is_self_dual_matrix(&self) -> bool {
        let f = self.field();
        let a = self.circulant_a().expand();
        let b = self.circulant_b().expand();
        let aat = linalg::mul(f, &a, &linalg::transpose(&a));
        let bbt = linalg::mul(f, &b, &linalg::transpose(&b));
        let sum = linalg::add(f, &linalg::add(f, &aat, &bbt), &linalg::identity(self.n()));
        if !linalg::is_zero(&sum) {
            return false;
        }
        let g = self.generator_matrix();
        linalg::is_zero(&linalg::mul(f, &g, &linalg::transpose(&g)))
    }

    pub fn rank(&self) -> usize {
        linalg::rank(self.field(), &self.generator_matrix())
    }

    /// `c (1, 0, a, b) + d (0, 1, -b', a')`.
    pub fn encode(&self, c: &RingElem, d: &RingElem) -> Result<Codeword> {
        self.ring.checked(c)?;
        self.ring.checked(d)?;
        Ok(self.encode_unchecked(c, d))
    }

    fn encode_unchecked(&self, c: &RingElem, d: &RingElem) -> Codeword {
        let r = &self.ring;
        let a_rec = r.reciprocal(&self.a);
        let b_rec = r.reciprocal(&self.b);
        Codeword {
            c: c.clone(),
            d: d.clone(),
            e: r.sub(&r.mul(c, &self.a), &r.mul(d, &b_rec)),
            f: r.add(&r.mul(c, &self.b), &r.mul(d, &a_rec)),
        }
    }

    /// Membership through the systematic form: the first two blocks of a
    /// codeword are its message.
    pub fn contains(&self, u: &Codeword) -> bool {
        if u.blocks().iter().any(|b| b.len() != self.n()) {
            return false;
        }
        self.encode_unchecked(&u.c, &u.d) == *u
    }

    /// Number of messages, `q^{2n}`, saturating.
    pub fn message_count(&self) -> u128 {
        self.ring.size().saturating_mul(self.ring.size())
    }

    /// Message `(c, d)` whose concatenated coefficient list is the big-endian
    /// base-`q` expansion of `index`.
    pub fn message(&self, index: u64) -> (RingElem, RingElem) {
        let size = self.ring.size() as u64;
        (self.ring.from_index(index / size), self.ring.from_index(index % size))
    }

    /// Rows of the generator matrix from the polynomial description:
    /// row `i < n` is `x^i (1, 0, a, b)`, row `n + i` is `x^i (0, 1, -b', a')`.
    pub fn generator_rows(&self) -> Vec<Vec<Gf>> {
        let r = &self.ring;
        let n = self.n();
        let mut rows = Vec::with_capacity(2 * n);
        for block in 0..2 {
            for i in 0..n {
                let xi = r.monomial(Gf::ONE, i);
                let (c, d) = if block == 0 { (xi, r.zero()) } else { (r.zero(), xi) };
                rows.push(self.encode_unchecked(&c, &d).to_vec());
            }
        }
        rows
    }

    /// Least-weight nonzero codeword among messages with index in `range`,
    /// as `(weight, message_index)`. Ties go to the smaller index, so partial
    /// results over a partition merge with `min`.
    pub fn min_weight_in(&self, range: Range<u64>) -> Option<(usize, u64)> {
        let f = self.field();
        let q = f.q();
        let len = 2 * self.n();
        let rows = self.generator_rows();
        let start = range.start.max(1);
        if start >= range.end {
            return None;
        }
        let mut digits = vec![0u32; len];
        let mut rest = start;
        for slot in digits.iter_mut().rev() {
            *slot = (rest % q as u64) as u32;
            rest /= q as u64;
        }
        let mut word = vec![Gf::ZERO; 4 * self.n()];
        for (row, &dig) in rows.iter().zip(&digits) {
            if dig != 0 {
                for (w, &x) in word.iter_mut().zip(row) {
                    *w = f.add(*w, f.mul(Gf(dig), x));
                }
            }
        }
        let mut best: Option<(usize, u64)> = None;
        for idx in start..range.end {
            let wt = word.iter().filter(|x| !x.is_zero()).count();
            if best.is_none_or(|(b, _)| wt < b) {
                best = Some((wt, idx));
                if wt == 1 {
                    break;
                }
            }
            // odometer step to idx + 1
            let mut pos = len;
            while pos > 0 {
                pos -= 1;
                let old = digits[pos];
                let new = if old + 1 == q { 0 } else { old + 1 };
                digits[pos] = new;
                let delta = f.sub(Gf(new), Gf(old));
                for (w, &x) in word.iter_mut().zip(&rows[pos]) {
                    *w = f.add(*w, f.mul(delta, x));
                }
                if new != 0 {
                    break;
                }
            }
        }
        best
    }

    pub fn check_cap(&self, cap: u64) -> Result<u64> {
        let work = self.message_count();
        if work > cap as u128 {
            return Err(Error::CapExceeded { work, cap });
        }
        Ok(work as u64)
    }

    /// Exact minimum distance by exhaustive enumeration of all `q^{2n}`
    /// messages; the witness is the least message index among minimizers.
    pub fn min_distance(&self, cap: u64) -> Result<MinDistance> {
        let total = self.check_cap(cap)?;
        let (distance, message_index) = self
            .min_weight_in(0..total)
            .ok_or(Error::Internal("code has no nonzero codeword"))?;
        Ok(self.witness(distance, message_index))
    }

    pub fn witness(&self, distance: usize, message_index: u64) -> MinDistance {
        let (c, d) = self.message(message_index);
        MinDistance { distance, message_index, witness: self.encode_unchecked(&c, &d) }
    }

    /// `1 + a a' + b b'` lifted to a polynomial of degree below `n`.
    pub fn criterion_poly(&self) -> Poly {
        self.ring.lift(&self.criterion_residue())
    }
}
