//! Rayon versions of the exhaustive sweeps in `fourcirc_core`.
//!
//! Everything here runs on the current rayon pool. Work is cut into
//! contiguous index ranges, and partial results are merged in range order.

use std::collections::BTreeSet;
use std::ops::Range;

use rayon::prelude::*;

use fourcirc_core::census::{code_fingerprint, CensusReport, SelfDualPair, SelfDualSweep};
use fourcirc_core::code::{FourCirculantCode, MinDistance};
use fourcirc_core::galois::FieldCtx;
use fourcirc_core::polyring::CyclicRing;
use fourcirc_core::{Error, Result};

/// Splits `0..total` into at most `pieces` contiguous ranges of nearly equal length.
pub fn ranges(total: u64, pieces: u64) -> Vec<Range<u64>> {
    let pieces = pieces.clamp(1, total.max(1));
    let step = total / pieces;
    let extra = total % pieces;
    let mut out = Vec::with_capacity(pieces as usize);
    let mut start = 0;
    for i in 0..pieces {
        let len = step + u64::from(i < extra);
        out.push(start..start + len);
        start += len;
    }
    out
}

fn pieces_for(total: u64, min_len: u64) -> u64 {
    let want = rayon::current_num_threads() as u64 * 8;
    want.min(total / min_len.max(1)).max(1)
}

/// Self-dual pairs in a-major order.
pub fn self_dual_pairs(sweep: &SelfDualSweep) -> Vec<(u64, u64)> {
    let len = sweep.axis_len();
    ranges(len, pieces_for(len, 1))
        .into_par_iter()
        .map(|r| sweep.scan(r))
        .collect::<Vec<_>>()
        .concat()
}

/// Exact minimum distance with the message space split across workers. The
/// minimizer with the least message index is the witness, as in the
/// sequential scan.
pub fn min_distance(code: &FourCirculantCode, cap: u64) -> Result<MinDistance> {
    let total = code.check_cap(cap)?;
    let (distance, index) = ranges(total, pieces_for(total, 4096))
        .into_par_iter()
        .filter_map(|r| code.min_weight_in(r))
        .min()
        .ok_or(Error::Internal("code has no nonzero codeword"))?;
    Ok(code.witness(distance, index))
}

fn distances(ring: CyclicRing, pairs: &[(u64, u64)], cap: u64) -> Result<Vec<usize>> {
    pairs
        .par_iter()
        .map(|&(a, b)| {
            FourCirculantCode::from_indices(ring, a, b)
                .min_distance(cap)
                .map(|m| m.distance)
        })
        .collect()
}

/// Parallel counterpart of `fourcirc_core::census::enumerate_self_dual`.
pub fn census(field: &FieldCtx, n: usize, with_distances: bool, cap: u64) -> Result<CensusReport> {
    let ring = CyclicRing::new(field, n)?;
    let sweep = SelfDualSweep::new(ring, cap)?;
    let pairs = self_dual_pairs(&sweep);
    let fingerprints: BTreeSet<_> = pairs
        .par_iter()
        .map(|&(a, b)| code_fingerprint(&FourCirculantCode::from_indices(ring, a, b)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    let ds = if with_distances {
        Some(distances(ring, &pairs, cap)?)
    } else {
        None
    };
    Ok(CensusReport::assemble(&ring, &pairs, fingerprints.len() as u64, ds.as_deref()))
}

/// Every self-dual code with its minimum distance, best first: distance
/// descending, then `(a, b)` in lexicographic order. `progress` is called
/// after each batch with the number of codes done and the total.
pub fn ranked_self_dual(
    field: &FieldCtx,
    n: usize,
    cap: u64,
    mut progress: impl FnMut(u64, u64),
) -> Result<Vec<SelfDualPair>> {
    let ring = CyclicRing::new(field, n)?;
    let sweep = SelfDualSweep::new(ring, cap)?;
    let pairs = self_dual_pairs(&sweep);
    let total = pairs.len() as u64;
    let batch = (rayon::current_num_threads() * 64).max(1);
    let mut ds = Vec::with_capacity(pairs.len());
    for chunk in pairs.chunks(batch) {
        ds.extend(distances(ring, chunk, cap)?);
        progress(ds.len() as u64, total);
    }
    let mut order: Vec<usize> = (0..pairs.len()).collect();
    // pairs are already in (a, b) order, so a stable sort by distance suffices
    order.sort_by(|&i, &j| ds[j].cmp(&ds[i]));
    Ok(order
        .into_iter()
        .map(|i| SelfDualPair {
            a: ring.from_index(pairs[i].0),
            b: ring.from_index(pairs[i].1),
            distance: Some(ds[i]),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_cover_exactly() {
        for (total, pieces) in [(0u64, 4u64), (1, 4), (10, 3), (100, 7), (5, 5)] {
            let rs = ranges(total, pieces);
            assert_eq!(rs.first().unwrap().start, 0);
            assert_eq!(rs.last().unwrap().end, total);
            for w in rs.windows(2) {
                assert_eq!(w[0].end, w[1].start);
            }
        }
    }
}
