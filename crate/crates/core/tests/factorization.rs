use fourcirc_core::arith;
use fourcirc_core::galois::{FieldCtx, Gf};
use fourcirc_core::polyring::{factor_xn_minus_1, is_two_factor_case, FactorKind, Poly};

/// Every monic polynomial of the given degree.
fn monic_of_degree(f: &FieldCtx, deg: usize) -> Vec<Poly> {
    let q = f.q() as u64;
    (0..q.pow(deg as u32))
        .map(|mut idx| {
            let mut c = Vec::with_capacity(deg + 1);
            for _ in 0..deg {
                c.push(Gf((idx % q) as u32));
                idx /= q;
            }
            c.push(Gf::ONE);
            Poly::new(c)
        })
        .collect()
}

/// Trial division by every monic polynomial of degree at most half.
fn irreducible_by_trial_division(f: &FieldCtx, p: &Poly) -> bool {
    let deg = p.degree().unwrap();
    (1..=deg / 2).all(|d| monic_of_degree(f, d).iter().all(|g| !p.rem(g, f).is_zero()))
}

const CASES: [(u64, usize); 12] = [
    (2, 3),
    (2, 5),
    (2, 7),
    (2, 9),
    (2, 15),
    (3, 5),
    (3, 7),
    (3, 8),
    (3, 13),
    (4, 5),
    (5, 6),
    (7, 9),
];

#[test]
fn factors_are_irreducible_and_multiply_back() {
    for (q, n) in CASES {
        let f = FieldCtx::with_order(q).unwrap();
        let rep = factor_xn_minus_1(&f, n).unwrap();
        let mut prod = Poly::one();
        for fac in &rep.factors {
            assert_eq!(fac.poly.lead(), Gf::ONE);
            let deg = fac.poly.degree().unwrap();
            assert_eq!(deg, fac.coset.len());
            if deg <= 6 {
                assert!(irreducible_by_trial_division(&f, &fac.poly), "q={q} n={n} {:?}", fac.poly);
            }
            if deg > 1 {
                assert!(f.elements().all(|x| !fac.poly.eval(x, &f).is_zero()));
            }
            prod = prod.mul(&fac.poly, &f);
        }
        assert_eq!(prod.scale(rep.alpha, &f), Poly::x_n_minus_one(&f, n));
        assert_eq!(rep.factors.len(), arith::cyclotomic_cosets(q, n).len());
    }
}

#[test]
fn reciprocal_structure() {
    for (q, n) in CASES {
        let f = FieldCtx::with_order(q).unwrap();
        let rep = factor_xn_minus_1(&f, n).unwrap();
        for (i, fac) in rep.factors.iter().enumerate() {
            let rec = fac.poly.monic_reciprocal(&f).unwrap();
            match fac.kind {
                FactorKind::SelfReciprocal => {
                    assert_eq!(rec, fac.poly);
                    assert!(fac.partner.is_none());
                }
                _ => {
                    let j = fac.partner.unwrap();
                    assert_eq!(rep.factors[j].partner, Some(i));
                    assert_eq!(rec, rep.factors[j].poly);
                    assert_ne!(rec, fac.poly);
                }
            }
        }
        let sr = rep.self_reciprocal().len();
        assert_eq!(sr + 2 * rep.pairs().len(), rep.factors.len());
    }
}

#[test]
fn two_factor_case_is_primitive_root_at_prime_lengths() {
    for q in [2u64, 3, 4, 5, 7] {
        let f = FieldCtx::with_order(q).unwrap();
        for n in arith::primes_up_to(40).into_iter().filter(|&n| n > 2 && n % f.p() as u64 != 0) {
            let two = is_two_factor_case(&f, n as usize).unwrap();
            assert_eq!(two, arith::is_primitive_root(q, n), "q={q} n={n}");
            if two && (q as u128).pow(n as u32 - 1) <= fourcirc_core::MAX_FIELD_SIZE as u128 {
                let rep = factor_xn_minus_1(&f, n as usize).unwrap();
                let degrees: Vec<usize> = rep.factors.iter().map(|x| x.poly.degree().unwrap()).collect();
                assert_eq!(degrees, vec![1, n as usize - 1]);
            }
        }
    }
}

#[test]
fn oversized_splitting_fields_are_refused() {
    let f = FieldCtx::with_order(2).unwrap();
    assert!(matches!(
        factor_xn_minus_1(&f, 19),
        Err(fourcirc_core::Error::FieldTooLarge { .. })
    ));
}
