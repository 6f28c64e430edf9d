use fourcirc_core::census::SelfDualSweep;
use fourcirc_core::code::FourCirculantCode;
use fourcirc_core::crt::{constituent_self_dual, CrtBasis};
use fourcirc_core::galois::FieldCtx;
use fourcirc_core::polyring::{CyclicRing, FactorKind};
use fourcirc_core::DEFAULT_CAP;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SWEEPS: [(u64, usize); 4] = [(2, 3), (2, 5), (5, 3), (3, 5)];

#[test]
fn decomposition_round_trips_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (q, n) in [(2u64, 3usize), (2, 5), (2, 7), (3, 5), (5, 3), (4, 5), (3, 8)] {
        let f = FieldCtx::with_order(q).unwrap();
        let r = CyclicRing::new(&f, n).unwrap();
        let basis = CrtBasis::new(r).unwrap();
        for _ in 0..100 {
            let a = r.from_index(rng.random_range(0..r.size() as u64));
            let b = r.from_index(rng.random_range(0..r.size() as u64));
            assert_eq!(basis.reconstruct(&basis.images(&a)).unwrap(), a);
            assert_eq!(basis.reconstruct(&basis.images(&b)).unwrap(), b);
            // images multiply like ring elements
            let ab = r.mul(&a, &b);
            let prod: Vec<_> = basis
                .decompose(&a, &b)
                .iter()
                .map(|c| c.ext.field.mul(c.a_image, c.b_image))
                .collect();
            assert_eq!(basis.images(&ab), prod);
        }
    }
}

#[test]
fn self_dual_codes_have_hermitian_constituents() {
    for (q, n) in SWEEPS {
        let f = FieldCtx::with_order(q).unwrap();
        let r = CyclicRing::new(&f, n).unwrap();
        let basis = CrtBasis::new(r).unwrap();
        let sweep = SelfDualSweep::new(r, DEFAULT_CAP).unwrap();
        let pairs = sweep.scan(0..sweep.axis_len());
        assert!(!pairs.is_empty());
        for (ai, bi) in pairs {
            let (a, b) = (r.from_index(ai), r.from_index(bi));
            for c in basis.decompose(&a, &b) {
                assert_eq!(c.kind, FactorKind::SelfReciprocal);
                assert!(constituent_self_dual(&c, &f).unwrap());
            }
        }
    }
}

#[test]
fn criterion_vanishes_exactly_on_every_constituent_of_self_dual_codes() {
    for (q, n) in [(2u64, 3usize), (2, 7), (3, 5), (4, 3)] {
        let f = FieldCtx::with_order(q).unwrap();
        let r = CyclicRing::new(&f, n).unwrap();
        let basis = CrtBasis::new(r).unwrap();
        let size = r.size() as u64;
        for ai in (0..size).step_by(3) {
            for bi in (0..size).step_by(2) {
                let code = FourCirculantCode::from_indices(r, ai, bi);
                let cons = basis.decompose(code.a(), code.b());
                let all = cons.iter().all(|c| c.criterion_vanishes());
                assert_eq!(all, code.is_self_dual_poly());
                for c in cons.iter().filter(|c| c.kind == FactorKind::SelfReciprocal) {
                    assert_eq!(constituent_self_dual(c, &f).unwrap(), c.criterion_vanishes());
                }
            }
        }
    }
}
