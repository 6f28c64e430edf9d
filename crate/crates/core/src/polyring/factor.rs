use alloc::vec::Vec;

use super::Poly;
use crate::arith;
use crate::galois::{Extension, FieldCtx, Gf};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactorKind {
    SelfReciprocal,
    /// The lexicographically smaller member `h` of a reciprocal pair.
    PairFirst,
    /// The monic reciprocal `h*` of a `PairFirst` factor.
    PairSecond,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleFactor {
    pub poly: Poly,
    pub coset: Vec<usize>,
    pub kind: FactorKind,
    /// Index of the reciprocal partner within the report, for pair members.
    pub partner: Option<usize>,
}

/// `x^n - 1 = alpha * prod g_i * prod h_j h_j*` with every factor monic and
/// irreducible. Factors appear in the order of their cyclotomic cosets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationReport {
    pub n: usize,
    pub q: u32,
    pub alpha: Gf,
    pub factors: Vec<IrreducibleFactor>,
}

impl FactorizationReport {
    pub fn cosets(&self) -> Vec<Vec<usize>> {
        self.factors.iter().map(|f| f.coset.clone()).collect()
    }

    pub fn self_reciprocal(&self) -> Vec<&Poly> {
        self.factors
            .iter()
            .filter(|f| f.kind == FactorKind::SelfReciprocal)
            .map(|f| &f.poly)
            .collect()
    }

    /// `(h_j, h_j*)` pairs in order of first appearance.
    pub fn pairs(&self) -> Vec<(&Poly, &Poly)> {
        self.factors
            .iter()
            .filter(|f| f.kind == FactorKind::PairFirst)
            .map(|f| (&f.poly, &self.factors[f.partner.expect("pair has a partner")].poly))
            .collect()
    }

    /// `alpha` times the product of all factors.
    pub fn expand(&self, field: &FieldCtx) -> Poly {
        self.factors
            .iter()
            .fold(Poly::new(alloc::vec![self.alpha]), |acc, f| acc.mul(&f.poly, field))
    }
}

fn check_coprime(field: &FieldCtx, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    if arith::gcd(n as u64, field.q() as u64) != 1 {
        return Err(Error::NotCoprime { n, q: field.q() as u64 });
    }
    Ok(())
}

/// Exactly two irreducible factors, i.e. exactly two cyclotomic cosets of `q` mod `n`.
pub fn is_two_factor_case(field: &FieldCtx, n: usize) -> Result<bool> {
    check_coprime(field, n)?;
    Ok(arith::cyclotomic_cosets(field.q() as u64, n).len() == 2)
}

/// Factors `x^n - 1` over `F_q` through minimal polynomials of a primitive
/// `n`-th root of unity in the splitting field `F_{q^m}`, `m = ord_n(q)`.
pub fn factor_xn_minus_1(field: &FieldCtx, n: usize) -> Result<FactorizationReport> {
    check_coprime(field, n)?;
    let q = field.q() as u64;
    let m = arith::mult_order(q, n as u64).ok_or(Error::NotCoprime { n, q })?;
    let ext = Extension::new(field, m as u32)?;
    let big = &ext.field;
    let order = big.q() as u64 - 1;
    let beta = big.pow(big.primitive_element(), order / n as u64);

    let cosets = arith::cyclotomic_cosets(q, n);
    let mut polys = Vec::with_capacity(cosets.len());
    for coset in &cosets {
        // prod_{i in coset} (x - beta^i) over the splitting field
        let mut acc: Vec<Gf> = alloc::vec![Gf::ONE];
        for &i in coset {
            let root = big.pow(beta, i as u64);
            let mut next = alloc::vec![Gf::ZERO; acc.len() + 1];
            for (j, &c) in acc.iter().enumerate() {
                next[j + 1] = big.add(next[j + 1], c);
                next[j] = big.sub(next[j], big.mul(c, root));
            }
            acc = next;
        }
        let coeffs = acc
            .into_iter()
            .map(|c| {
                ext.embedding
                    .preimage(c)
                    .ok_or(Error::Internal("minimal polynomial has a coefficient outside F_q"))
            })
            .collect::<Result<Vec<Gf>>>()?;
        polys.push(Poly::new(coeffs));
    }

    let mut factors: Vec<IrreducibleFactor> = Vec::with_capacity(cosets.len());
    for (idx, coset) in cosets.iter().enumerate() {
        let mut mirror: Vec<usize> = coset.iter().map(|&i| (n - i) % n).collect();
        mirror.sort_unstable();
        let partner = cosets
            .iter()
            .position(|c| *c == mirror)
            .ok_or(Error::Internal("reciprocal coset missing"))?;
        let kind = if partner == idx {
            FactorKind::SelfReciprocal
        } else if polys[idx] < polys[partner] {
            FactorKind::PairFirst
        } else {
            FactorKind::PairSecond
        };
        let recip = polys[idx]
            .monic_reciprocal(field)
            .ok_or(Error::Internal("factor divisible by x"))?;
        if recip != polys[partner] {
            return Err(Error::Internal("reciprocal coset does not give the reciprocal factor"));
        }
        factors.push(IrreducibleFactor {
            poly: polys[idx].clone(),
            coset: coset.clone(),
            kind,
            partner: (partner != idx).then_some(partner),
        });
    }

    let report = FactorizationReport { n, q: field.q(), alpha: Gf::ONE, factors };
    if report.expand(field) != Poly::x_n_minus_one(field, n) {
        return Err(Error::Internal("factors do not multiply back to x^n - 1"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(v: &[u32]) -> Poly {
        Poly::new(v.iter().map(|&c| Gf(c)).collect())
    }

    #[test]
    fn seven_over_three() {
        let f3 = FieldCtx::prime_field(3).unwrap();
        let rep = factor_xn_minus_1(&f3, 7).unwrap();
        assert_eq!(rep.factors.len(), 2);
        assert_eq!(rep.factors[0].poly, p(&[2, 1]));
        assert_eq!(rep.factors[1].poly, p(&[1; 7]));
        assert_eq!(rep.self_reciprocal().len(), 2);
        assert!(rep.pairs().is_empty());
    }

    #[test]
    fn three_and_five_over_two() {
        let f2 = FieldCtx::prime_field(2).unwrap();
        let rep = factor_xn_minus_1(&f2, 3).unwrap();
        assert_eq!(rep.cosets(), vec![vec![0], vec![1, 2]]);
        assert_eq!(rep.factors[0].poly, p(&[1, 1]));
        assert_eq!(rep.factors[1].poly, p(&[1, 1, 1]));
        let rep = factor_xn_minus_1(&f2, 5).unwrap();
        assert_eq!(rep.cosets(), vec![vec![0], vec![1, 2, 3, 4]]);
        assert_eq!(rep.factors[1].poly, p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn seven_over_two_has_a_reciprocal_pair() {
        let f2 = FieldCtx::prime_field(2).unwrap();
        let rep = factor_xn_minus_1(&f2, 7).unwrap();
        let pairs = rep.pairs();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0], (&p(&[1, 0, 1, 1]), &p(&[1, 1, 0, 1])));
    }

    #[test]
    fn rejects_non_coprime_length() {
        let f3 = FieldCtx::prime_field(3).unwrap();
        assert_eq!(factor_xn_minus_1(&f3, 6), Err(Error::NotCoprime { n: 6, q: 3 }));
        assert!(is_two_factor_case(&f3, 9).is_err());
    }

    #[test]
    fn primitive_root_agrees_with_two_factor_case() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let f = FieldCtx::with_order(q).unwrap();
            for n in arith::primes_up_to(40).into_iter().filter(|&n| n > 2 && q % n != 0) {
                assert_eq!(
                    is_two_factor_case(&f, n as usize).unwrap(),
                    arith::is_primitive_root(q, n),
                    "q = {q}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn factor_counts_match_cosets_over_extension_fields() {
        for (q, n) in [(4u64, 3usize), (4, 5), (4, 7), (9, 4), (9, 5), (8, 7), (5, 8), (3, 8)] {
            let f = FieldCtx::with_order(q).unwrap();
            let rep = factor_xn_minus_1(&f, n).unwrap();
            assert_eq!(rep.factors.len(), arith::cyclotomic_cosets(q, n).len());
            assert_eq!(rep.expand(&f), Poly::x_n_minus_one(&f, n));
        }
    }
}
