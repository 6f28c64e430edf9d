//! Exhaustive counts and the closed forms they are compared against.
//!
//! Sweeps are split along the `a` axis: [`SelfDualSweep::scan`] handles one
//! range of `a` indices, and results from consecutive ranges concatenate into
//! the same list the full sweep produces.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigUint;

use crate::arith;
use crate::code::{Codeword, FourCirculantCode};
use crate::galois::{Extension, FieldCtx, Gf};
use crate::linalg;
use crate::polyring::{CyclicRing, RingElem};
use crate::{Error, Result};

/// A brute-force count next to the closed form it should equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountPair {
    pub brute_force: u64,
    pub formula: u64,
}

impl CountPair {
    pub fn agrees(&self) -> bool {
        self.brute_force == self.formula
    }
}

/// Solutions of `x^2 + y^2 = -1` in `F_q`, `q` odd, against `q - eta(-1)`.
pub fn count_sum_of_squares(field: &FieldCtx) -> Result<CountPair> {
    let minus_one = field.neg(Gf::ONE);
    let eta = field.quad_char(minus_one)?;
    let squares: Vec<Gf> = field.elements().map(|x| field.mul(x, x)).collect();
    let brute_force = squares
        .iter()
        .flat_map(|&x2| squares.iter().map(move |&y2| (x2, y2)))
        .filter(|&(x2, y2)| field.add(x2, y2) == minus_one)
        .count() as u64;
    let formula = (field.q() as i64 - eta as i64) as u64;
    Ok(CountPair { brute_force, formula })
}

/// Solutions `(a, b)` in `F_{q^2}` of `a^{1+q} + b^{1+q} = -1` against `(q + 1)(q^2 - q)`.
pub fn count_hermitian(field: &FieldCtx) -> Result<CountPair> {
    let ext = Extension::new(field, 2)?;
    let big = &ext.field;
    let q = field.q() as u64;
    let minus_one = big.neg(Gf::ONE);
    let norms: Vec<Gf> = big.elements().map(|x| big.pow(x, 1 + q)).collect();
    let mut by_norm: BTreeMap<Gf, u64> = BTreeMap::new();
    for &v in &norms {
        *by_norm.entry(v).or_default() += 1;
    }
    let mut brute_force = 0u64;
    for &na in &norms {
        for &nb in &norms {
            if big.add(na, nb) == minus_one {
                brute_force += 1;
            }
        }
    }
    Ok(CountPair { brute_force, formula: (q + 1) * (q * q - q) })
}

/// `n` is an odd prime coprime to `q` and `q` is a primitive root modulo `n`.
pub fn two_factor_hypotheses(q: u64, n: usize) -> bool {
    let n = n as u64;
    n > 2 && arith::is_prime(n) && arith::gcd(n, q) == 1 && arith::is_primitive_root(q, n)
}

/// Closed-form number of self-dual four circulant codes of length `4n`:
/// `(q - eta(-1)) (q^h + 1)(q^{2h} - q^h)` for odd `q`, with `q` in place of
/// `q - eta(-1)` for even `q`, where `h = (n - 1) / 2`. `None` unless
/// [`two_factor_hypotheses`] holds.
pub fn self_dual_count_formula(field: &FieldCtx, n: usize) -> Option<BigUint> {
    let q = field.q() as u64;
    if !two_factor_hypotheses(q, n) {
        return None;
    }
    let h = ((n - 1) / 2) as u32;
    let qb = BigUint::from(q);
    let qh = qb.pow(h);
    let lead = if field.p() == 2 {
        qb.clone()
    } else {
        let eta = field.quad_char(field.neg(Gf::ONE)).ok()?;
        BigUint::from((q as i64 - eta as i64) as u64)
    };
    Some(lead * (&qh + 1u32) * (qb.pow(2 * h) - &qh))
}

fn check_pairs_cap(ring: &CyclicRing, cap: u64) -> Result<u64> {
    let work = ring.size().saturating_mul(ring.size());
    if work > cap as u128 {
        return Err(Error::CapExceeded { work, cap });
    }
    Ok(work as u64)
}

/// Precomputed `a a'` for every `a`, shared by all workers of a sweep.
pub struct SelfDualSweep<'f> {
    ring: CyclicRing<'f>,
    norms: Vec<RingElem>,
    minus_one: RingElem,
}

impl<'f> SelfDualSweep<'f> {
    pub fn new(ring: CyclicRing<'f>, cap: u64) -> Result<Self> {
        let q = ring.field().q() as u64;
        if arith::gcd(ring.n() as u64, q) != 1 {
            return Err(Error::NotCoprime { n: ring.n(), q });
        }
        check_pairs_cap(&ring, cap)?;
        let norms = ring.elements().map(|a| ring.mul(&a, &ring.reciprocal(&a))).collect();
        let minus_one = ring.neg(&ring.one());
        Ok(SelfDualSweep { ring, norms, minus_one })
    }

    pub fn ring(&self) -> &CyclicRing<'f> {
        &self.ring
    }

    /// Number of `a` values, `q^n`.
    pub fn axis_len(&self) -> u64 {
        self.norms.len() as u64
    }

    /// All `(a, b)` with `a` in `a_range` and `1 + a a' + b b' = 0`, a-major.
    pub fn scan(&self, a_range: Range<u64>) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for ai in a_range {
            let target = self.ring.sub(&self.minus_one, &self.norms[ai as usize]);
            for (bi, nb) in self.norms.iter().enumerate() {
                if *nb == target {
                    out.push((ai, bi as u64));
                }
            }
        }
        out
    }
}

/// Canonical form of a code: the reduced row echelon form of its generator matrix.
pub fn code_fingerprint(code: &FourCirculantCode) -> Vec<Gf> {
    let (red, _) = linalg::rref(code.field(), &code.generator_matrix());
    red.into_iter().flatten().collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfDualPair {
    pub a: RingElem,
    pub b: RingElem,
    pub distance: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub q: u32,
    pub n: usize,
    /// Closed form, when its hypotheses hold.
    pub formula_count: Option<BigUint>,
    pub pair_count: u64,
    pub distinct_code_count: u64,
    pub pairs: Vec<SelfDualPair>,
    /// Minimum distance to number of codes, when distances were computed.
    pub distance_histogram: Option<BTreeMap<usize, u64>>,
}

impl CensusReport {
    /// Builds a report from a-major pair indices, the number of distinct
    /// fingerprints, and optionally one distance per pair.
    pub fn assemble(
        ring: &CyclicRing,
        pairs: &[(u64, u64)],
        distinct_code_count: u64,
        distances: Option<&[usize]>,
    ) -> Self {
        let histogram = distances.map(|ds| {
            let mut h = BTreeMap::new();
            for &d in ds {
                *h.entry(d).or_insert(0u64) += 1;
            }
            h
        });
        let pairs = pairs
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| SelfDualPair {
                a: ring.from_index(a),
                b: ring.from_index(b),
                distance: distances.map(|ds| ds[i]),
            })
            .collect::<Vec<_>>();
        CensusReport {
            q: ring.field().q(),
            n: ring.n(),
            formula_count: self_dual_count_formula(ring.field(), ring.n()),
            pair_count: pairs.len() as u64,
            distinct_code_count,
            pairs,
            distance_histogram: histogram,
        }
    }

    /// `None` when the closed form does not apply.
    pub fn formula_matches(&self) -> Option<bool> {
        self.formula_count.as_ref().map(|f| *f == BigUint::from(self.pair_count))
    }
}

/// Sequential exhaustive census of self-dual pairs `(a, b)`.
pub fn enumerate_self_dual(
    field: &FieldCtx,
    n: usize,
    with_distances: bool,
    cap: u64,
) -> Result<CensusReport> {
    let ring = CyclicRing::new(field, n)?;
    let sweep = SelfDualSweep::new(ring, cap)?;
    let pairs = sweep.scan(0..sweep.axis_len());
    let distinct: BTreeSet<Vec<Gf>> = pairs
        .iter()
        .map(|&(a, b)| code_fingerprint(&FourCirculantCode::from_indices(ring, a, b)))
        .collect();
    let distances = if with_distances {
        Some(
            pairs
                .iter()
                .map(|&(a, b)| {
                    FourCirculantCode::from_indices(ring, a, b)
                        .min_distance(cap)
                        .map(|m| m.distance)
                })
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        None
    };
    Ok(CensusReport::assemble(&ring, &pairs, distinct.len() as u64, distances.as_deref()))
}

/// `(e c' + d f') / w` and `(c' f - d e') / w` with `w = c c' + d d'`, when
/// `w` is a unit: the unique generators `(a, b)` with `u` in `C_{a,b}`.
pub fn solve_generators(ring: &CyclicRing, u: &Codeword) -> Option<(RingElem, RingElem)> {
    let r = ring;
    let (c_r, d_r) = (r.reciprocal(&u.c), r.reciprocal(&u.d));
    let w = r.add(&r.mul(&u.c, &c_r), &r.mul(&u.d, &d_r));
    let w_inv = r.inverse(&w)?;
    let a = r.mul(&r.add(&r.mul(&u.e, &c_r), &r.mul(&u.d, &r.reciprocal(&u.f))), &w_inv);
    let b = r.mul(&r.sub(&r.mul(&c_r, &u.f), &r.mul(&u.d, &r.reciprocal(&u.e))), &w_inv);
    Some((a, b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCensus {
    /// Generators with `a`, `b` coprime to `x^n - 1` whose code contains `u`.
    pub count: u64,
    /// All generator pairs whose code contains `u`.
    pub count_all_generators: u64,
    /// Self-dual generator pairs (any `a`, `b`) whose code contains `u`.
    pub count_self_dual: u64,
    /// `q^n (q - 1)`.
    pub bound: u64,
    /// `c c' + d d'` is a unit.
    pub unique: bool,
    /// The closed-form generators in the unit case, checked against the system.
    pub solution: Option<(RingElem, RingElem)>,
    pub solution_verified: bool,
}

/// Counts generator pairs `(a, b)` with `u` in `C_{a,b}` by exhaustion.
pub fn membership_census(ring: &CyclicRing, u: &Codeword, cap: u64) -> Result<MembershipCensus> {
    let total = check_pairs_cap(ring, cap)?;
    for blk in u.blocks() {
        ring.checked(blk)?;
    }
    let size = ring.size() as u64;
    let units: Vec<bool> = ring.elements().map(|a| ring.is_unit(&a)).collect();
    let (mut all, mut unit, mut sd) = (0u64, 0u64, 0u64);
    for idx in 0..total {
        let (ai, bi) = (idx / size, idx % size);
        let code = FourCirculantCode::from_indices(*ring, ai, bi);
        if code.contains(u) {
            all += 1;
            unit += (units[ai as usize] && units[bi as usize]) as u64;
            sd += code.is_self_dual_poly() as u64;
        }
    }
    let solution = solve_generators(ring, u);
    let solution_verified = solution.as_ref().is_some_and(|(a, b)| {
        FourCirculantCode::new(*ring, a.clone(), b.clone()).is_ok_and(|code| code.contains(u))
    });
    Ok(MembershipCensus {
        count: unit,
        count_all_generators: all,
        count_self_dual: sd,
        bound: membership_bound(ring),
        unique: solution.is_some(),
        solution,
        solution_verified,
    })
}

/// `q^n (q - 1)` in arbitrary precision.
pub fn membership_bound_big(q: u32, n: usize) -> BigUint {
    BigUint::from(q).pow(n as u32) * (q - 1)
}

pub fn membership_bound(ring: &CyclicRing) -> u64 {
    let q = ring.field().q() as u64;
    (ring.size() as u64) * (q - 1)
}

/// Maxima of the membership counts over every `u` whose `c` and `d` blocks
/// are both non-constant, plus the unit-case uniqueness check over every
/// `u` with `c c' + d d'` a unit (constant blocks included).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MembershipExtremes {
    pub bound: u64,
    pub max_count: u64,
    pub max_count_all_generators: u64,
    pub max_count_self_dual: u64,
    /// A vector attaining `max_count_all_generators`.
    pub worst_all_generators: Option<Codeword>,
    pub messages_examined: u64,
    pub unit_case_checks: u64,
    pub unit_case_failures: u64,
}

/// For each message `(c, d)` with non-constant blocks, tallies which `(e, f)`
/// every generator pair sends it to. `u = (c, d, e, f)` lies in `C_{a,b}`
/// exactly when `(a, b)` sends `(c, d)` to `(e, f)`, so the tallies are the
/// membership counts of every such `u`.
pub fn membership_extremes(ring: &CyclicRing, cap: u64) -> Result<MembershipExtremes> {
    // every message against every generator pair: q^{4n}
    let pairs = check_pairs_cap(ring, cap)? as u128;
    if pairs * pairs > cap as u128 {
        return Err(Error::CapExceeded { work: pairs * pairs, cap });
    }
    let size = ring.size() as u64;
    let all: Vec<RingElem> = ring.elements().collect();
    let units: Vec<bool> = all.iter().map(|a| ring.is_unit(a)).collect();
    let recs: Vec<RingElem> = all.iter().map(|a| ring.reciprocal(a)).collect();
    // no coprimality needed here, unlike SelfDualSweep
    let self_dual: Vec<bool> = {
        let norms: Vec<RingElem> = all.iter().zip(&recs).map(|(a, ar)| ring.mul(a, ar)).collect();
        let one = ring.one();
        norms
            .iter()
            .flat_map(|na| norms.iter().map(move |nb| (na, nb)))
            .map(|(na, nb)| ring.add(&ring.add(&one, na), nb).is_zero())
            .collect()
    };
    let mut out = MembershipExtremes { bound: membership_bound(ring), ..Default::default() };
    for (ci, c) in all.iter().enumerate() {
        for (di, d) in all.iter().enumerate() {
            let tallied = !c.is_constant_vector() && !d.is_constant_vector();
            let unit_case = {
                let w = ring.add(&ring.mul(c, &recs[ci]), &ring.mul(d, &recs[di]));
                ring.is_unit(&w)
            };
            if !tallied && !unit_case {
                continue;
            }
            out.messages_examined += tallied as u64;
            let mut tally: BTreeMap<(u64, u64), [u64; 3]> = BTreeMap::new();
            for ai in 0..size {
                let ca = ring.mul(c, &all[ai as usize]);
                let da = ring.mul(d, &recs[ai as usize]);
                for bi in 0..size {
                    let e = ring.sub(&ca, &ring.mul(d, &recs[bi as usize]));
                    let f = ring.add(&ring.mul(c, &all[bi as usize]), &da);
                    let key = (ring.to_index(&e), ring.to_index(&f));
                    let t = tally.entry(key).or_default();
                    t[0] += 1;
                    t[1] += (units[ai as usize] && units[bi as usize]) as u64;
                    t[2] += self_dual[(ai * size + bi) as usize] as u64;
                    if unit_case {
                        out.unit_case_checks += 1;
                        let u = Codeword { c: c.clone(), d: d.clone(), e, f };
                        let ok = solve_generators(ring, &u)
                            .is_some_and(|(a, b)| a == all[ai as usize] && b == all[bi as usize]);
                        out.unit_case_failures += (!ok) as u64;
                    }
                }
            }
            if !tallied {
                continue;
            }
            for (&(ei, fi), t) in &tally {
                if t[0] > out.max_count_all_generators {
                    out.max_count_all_generators = t[0];
                    out.worst_all_generators = Some(Codeword {
                        c: c.clone(),
                        d: d.clone(),
                        e: ring.from_index(ei),
                        f: ring.from_index(fi),
                    });
                }
                out.max_count = out.max_count.max(t[1]);
                out.max_count_self_dual = out.max_count_self_dual.max(t[2]);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ArtinScan {
    pub q: u64,
    pub limit: u64,
    /// Odd primes `n <= limit`, coprime to `q`, with `q` a primitive root mod `n`.
    pub primes: Vec<u64>,
    /// Odd primes `n <= limit` coprime to `q`.
    pub candidates: u64,
    pub density: f64,
    /// A perfect square is a primitive root modulo no prime above 3.
    pub perfect_square: bool,
}

pub fn artin_scan(q: u64, limit: u64) -> Result<ArtinScan> {
    if q < 2 {
        return Err(Error::OutOfRange(q as f64));
    }
    let candidates: Vec<u64> = arith::primes_up_to(limit)
        .into_iter()
        .filter(|&n| n > 2 && arith::gcd(n, q) == 1)
        .collect();
    let primes: Vec<u64> = candidates
        .iter()
        .copied()
        .filter(|&n| arith::is_primitive_root(q, n))
        .collect();
    let density = if candidates.is_empty() {
        0.0
    } else {
        primes.len() as f64 / candidates.len() as f64
    };
    Ok(ArtinScan {
        q,
        limit,
        primes,
        candidates: candidates.len() as u64,
        density,
        perfect_square: arith::is_perfect_square(q),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_CAP;
    use alloc::vec;

    #[test]
    fn sum_of_squares_examples() {
        for (q, expect) in [(3u64, 4u64), (5, 4), (7, 8)] {
            let f = FieldCtx::with_order(q).unwrap();
            assert_eq!(count_sum_of_squares(&f).unwrap(), CountPair { brute_force: expect, formula: expect });
        }
        let f2 = FieldCtx::prime_field(2).unwrap();
        assert_eq!(count_sum_of_squares(&f2), Err(Error::EvenCharacteristic));
    }

    #[test]
    fn hermitian_examples() {
        for (q, expect) in [(2u64, 6u64), (3, 24), (4, 60)] {
            let f = FieldCtx::with_order(q).unwrap();
            assert_eq!(count_hermitian(&f).unwrap(), CountPair { brute_force: expect, formula: expect });
        }
    }

    #[test]
    fn formula_values() {
        let f = |q| FieldCtx::with_order(q).unwrap();
        assert_eq!(self_dual_count_formula(&f(2), 3), Some(BigUint::from(12u32)));
        assert_eq!(self_dual_count_formula(&f(2), 5), Some(BigUint::from(120u32)));
        assert_eq!(self_dual_count_formula(&f(3), 5), Some(BigUint::from(2880u32)));
        assert_eq!(self_dual_count_formula(&f(5), 3), Some(BigUint::from(480u32)));
        assert_eq!(self_dual_count_formula(&f(2), 13), Some(BigUint::from(524160u32)));
        assert_eq!(self_dual_count_formula(&f(2), 7), None);
        assert_eq!(self_dual_count_formula(&f(3), 4), None);
    }

    #[test]
    fn small_enumerations() {
        let f2 = FieldCtx::prime_field(2).unwrap();
        let rep = enumerate_self_dual(&f2, 3, true, DEFAULT_CAP).unwrap();
        assert_eq!(rep.pair_count, 12);
        assert_eq!(rep.formula_matches(), Some(true));
        assert!(rep.distinct_code_count <= rep.pair_count);
        assert!(rep.pairs.iter().all(|p| p.distance.unwrap() % 2 == 0));
        let f5 = FieldCtx::prime_field(5).unwrap();
        assert_eq!(enumerate_self_dual(&f5, 3, false, DEFAULT_CAP).unwrap().pair_count, 480);
    }

    #[test]
    fn enumeration_errors() {
        let f3 = FieldCtx::prime_field(3).unwrap();
        assert!(matches!(enumerate_self_dual(&f3, 3, false, DEFAULT_CAP), Err(Error::NotCoprime { .. })));
        assert!(matches!(enumerate_self_dual(&f3, 5, false, 100), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn membership_examples() {
        let f2 = FieldCtx::prime_field(2).unwrap();
        let r = CyclicRing::new(&f2, 3).unwrap();
        let x = r.monomial(Gf::ONE, 1);
        let code = FourCirculantCode::new(r, x.clone(), r.zero()).unwrap();
        let u = code.encode(&r.one(), &r.zero()).unwrap();
        let m = membership_census(&r, &u, DEFAULT_CAP).unwrap();
        assert!(m.unique && m.solution_verified);
        assert_eq!(m.solution, Some((x, r.zero())));
        assert_eq!(m.count_all_generators, 1);
        assert_eq!(m.bound, 8);

        let stray = Codeword { c: r.zero(), d: r.zero(), e: r.one(), f: r.zero() };
        let m = membership_census(&r, &stray, DEFAULT_CAP).unwrap();
        assert_eq!((m.count, m.count_all_generators, m.count_self_dual), (0, 0, 0));
        assert!(!m.unique);
    }

    #[test]
    fn artin_examples() {
        assert_eq!(artin_scan(2, 30).unwrap().primes, vec![3, 5, 11, 13, 19, 29]);
        assert_eq!(artin_scan(3, 10).unwrap().primes, vec![5, 7]);
        let four = artin_scan(4, 30).unwrap();
        assert!(four.primes.is_empty() && four.perfect_square);
    }
}
