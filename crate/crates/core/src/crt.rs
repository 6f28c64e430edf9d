//! Constituent decomposition of four circulant codes.
//!
//! For `gcd(n, q) = 1` the ring `R(n, F_q)` splits as the product of the
//! fields `F_q[x]/(f)` over the irreducible factors `f` of `x^n - 1`. Each
//! such field is realized as `F_{q^{deg f}}` with a fixed root `beta` of `f`,
//! and the image of `a(x)` is `a(beta)`. A constituent is described by the
//! images of `a` and `b` (and of their reciprocals); an explicit `2 x 4`
//! generator is available through [`Constituent::generator_matrix`].

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::FourCirculantCode;
use crate::galois::{Extension, FieldCtx, Gf};
use crate::linalg::{self, Matrix};
use crate::polyring::{factor_xn_minus_1, CyclicRing, FactorKind, FactorizationReport, Poly, RingElem};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct Constituent {
    pub factor: Poly,
    pub kind: FactorKind,
    pub ext: Arc<Extension>,
    /// The least root of `factor` in `ext`.
    pub root: Gf,
    pub a_image: Gf,
    pub b_image: Gf,
    /// Images of the reciprocals `a'`, `b'`, i.e. `a(root^{-1})`, `b(root^{-1})`.
    pub a_rec_image: Gf,
    pub b_rec_image: Gf,
}

impl Constituent {
    pub fn degree(&self) -> usize {
        self.factor.degree().unwrap_or(0)
    }

    /// `1 + a a' + b b'` vanishes in this component.
    pub fn criterion_vanishes(&self) -> bool {
        let f = &self.ext.field;
        let s = f.add(
            f.add(Gf::ONE, f.mul(self.a_image, self.a_rec_image)),
            f.mul(self.b_image, self.b_rec_image),
        );
        s.is_zero()
    }

    /// `[[1, 0, a, b], [0, 1, -b', a']]` over the constituent field.
    pub fn generator_matrix(&self) -> Matrix {
        let f = &self.ext.field;
        vec![
            vec![Gf::ONE, Gf::ZERO, self.a_image, self.b_image],
            vec![Gf::ZERO, Gf::ONE, f.neg(self.b_rec_image), self.a_rec_image],
        ]
    }
}

/// Hermitian self-duality of a self-reciprocal constituent.
///
/// For a factor of degree `2m` the condition is
/// `1 + a a^{q^m} + b b^{q^m} = 0`; for a linear factor it is
/// `1 + a^2 + b^2 = 0`.
pub fn constituent_self_dual(con: &Constituent, base: &FieldCtx) -> Result<bool> {
    if con.kind != FactorKind::SelfReciprocal {
        return Err(Error::NotSelfReciprocal);
    }
    let f = &con.ext.field;
    let deg = con.degree();
    let (a_bar, b_bar) = match deg {
        1 => (con.a_image, con.b_image),
        d if d % 2 == 0 => {
            let m = (d / 2) as u32;
            (
                con.ext.base_frobenius(con.a_image, base, m),
                con.ext.base_frobenius(con.b_image, base, m),
            )
        }
        _ => return Err(Error::Internal("self-reciprocal factor of odd degree above one")),
    };
    let s = f.add(f.add(Gf::ONE, f.mul(con.a_image, a_bar)), f.mul(con.b_image, b_bar));
    Ok(s.is_zero())
}

struct Component {
    ext: Arc<Extension>,
    root: Gf,
    root_inv: Gf,
    /// Maps `F_p` coordinates of a residue mod the factor to those of its image.
    coords: Matrix,
    /// Idempotent: 1 mod this factor, 0 mod the others.
    idempotent: Poly,
}

/// Precomputed CRT data for `R(n, F_q)`.
pub struct CrtBasis<'f> {
    ring: CyclicRing<'f>,
    prime: FieldCtx,
    factorization: FactorizationReport,
    components: Vec<Component>,
}

impl<'f> CrtBasis<'f> {
    pub fn new(ring: CyclicRing<'f>) -> Result<Self> {
        let base = ring.field();
        let n = ring.n();
        let factorization = factor_xn_minus_1(base, n)?;
        let prime = FieldCtx::prime_field(base.p())?;
        let modulus = Poly::x_n_minus_one(base, n);
        let mut exts: BTreeMap<usize, Arc<Extension>> = BTreeMap::new();
        let mut components = Vec::with_capacity(factorization.factors.len());
        for fac in &factorization.factors {
            let deg = fac.poly.degree().unwrap_or(0);
            let ext = match exts.get(&deg) {
                Some(e) => e.clone(),
                None => {
                    let e = Arc::new(Extension::new(base, deg as u32)?);
                    exts.insert(deg, e.clone());
                    e
                }
            };
            let big = &ext.field;
            let root = big
                .elements()
                .find(|&x| fac.poly.eval_in(big, &ext.embedding, x).is_zero())
                .ok_or(Error::Internal("factor has no root in its splitting field"))?;
            let root_inv = big.inv(root).ok_or(Error::Internal("zero root"))?;

            let k = base.k() as usize;
            let dim = k * deg;
            let mut coords = vec![vec![Gf::ZERO; dim]; dim];
            let mut beta_i = Gf::ONE;
            for i in 0..deg {
                for t in 0..k {
                    let y_t = Gf((base.p()).pow(t as u32));
                    let v = big.mul(ext.embedding.map(y_t), beta_i);
                    for (row, dig) in big.digits(v).into_iter().enumerate() {
                        coords[row][i * k + t] = Gf(dig);
                    }
                }
                beta_i = big.mul(beta_i, root);
            }

            let (cofactor, rem) = modulus.divrem(&fac.poly, base);
            if !rem.is_zero() {
                return Err(Error::Internal("factor does not divide x^n - 1"));
            }
            let (g, s, _) = Poly::ext_gcd(&cofactor.rem(&fac.poly, base), &fac.poly, base);
            if !g.is_one() {
                return Err(Error::Internal("x^n - 1 has a repeated factor"));
            }
            let idempotent = cofactor.mul(&s, base).rem(&modulus, base);
            components.push(Component { ext, root, root_inv, coords, idempotent });
        }
        Ok(CrtBasis { ring, prime, factorization, components })
    }

    pub fn factorization(&self) -> &FactorizationReport {
        &self.factorization
    }

    pub fn ring(&self) -> &CyclicRing<'f> {
        &self.ring
    }

    /// `a(beta_j)` for every factor `j`.
    pub fn images(&self, a: &RingElem) -> Vec<Gf> {
        let lifted = self.ring.lift(a);
        self.components
            .iter()
            .map(|c| lifted.eval_in(&c.ext.field, &c.ext.embedding, c.root))
            .collect()
    }

    fn rec_images(&self, a: &RingElem) -> Vec<Gf> {
        let lifted = self.ring.lift(a);
        self.components
            .iter()
            .map(|c| lifted.eval_in(&c.ext.field, &c.ext.embedding, c.root_inv))
            .collect()
    }

    pub fn decompose(&self, a: &RingElem, b: &RingElem) -> Vec<Constituent> {
        let (ai, bi) = (self.images(a), self.images(b));
        let (ar, br) = (self.rec_images(a), self.rec_images(b));
        self.components
            .iter()
            .zip(&self.factorization.factors)
            .enumerate()
            .map(|(j, (comp, fac))| Constituent {
                factor: fac.poly.clone(),
                kind: fac.kind,
                ext: comp.ext.clone(),
                root: comp.root,
                a_image: ai[j],
                b_image: bi[j],
                a_rec_image: ar[j],
                b_rec_image: br[j],
            })
            .collect()
    }

    /// Inverse of [`Self::images`] by CRT interpolation.
    pub fn reconstruct(&self, images: &[Gf]) -> Result<RingElem> {
        if images.len() != self.components.len() {
            return Err(Error::LengthMismatch { expected: self.components.len(), got: images.len() });
        }
        let base = self.ring.field();
        let k = base.k() as usize;
        let mut acc = Poly::zero();
        for (comp, &img) in self.components.iter().zip(images) {
            let rhs: Vec<Gf> = comp.ext.field.digits(img).into_iter().map(Gf).collect();
            let z = linalg::solve(&self.prime, &comp.coords, &rhs)
                .ok_or(Error::Internal("evaluation map is singular"))?;
            let residue: Vec<Gf> = z
                .chunks(k)
                .map(|ch| base.from_digits(&ch.iter().map(|g| g.0).collect::<Vec<_>>()))
                .collect::<Result<_>>()?;
            acc = acc.add(&Poly::new(residue).mul(&comp.idempotent, base), base);
        }
        Ok(self.ring.reduce(&acc))
    }
}

/// One constituent per irreducible factor of `x^n - 1`.
pub fn decompose(code: &FourCirculantCode) -> Result<Vec<Constituent>> {
    let basis = CrtBasis::new(*code.ring())?;
    Ok(basis.decompose(code.a(), code.b()))
}
