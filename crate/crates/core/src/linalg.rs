//! Dense matrices over a [`FieldCtx`], row-major.

use alloc::vec;
use alloc::vec::Vec;

use crate::galois::{FieldCtx, Gf};

pub type Matrix = Vec<Vec<Gf>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Gf::ONE } else { Gf::ZERO }).collect())
        .collect()
}

pub fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|row| row[j]).collect()).collect()
}

pub fn mul(f: &FieldCtx, a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            debug_assert_eq!(row.len(), inner);
            (0..cols)
                .map(|j| {
                    (0..inner).fold(Gf::ZERO, |acc, t| f.add(acc, f.mul(row[t], b[t][j])))
                })
                .collect()
        })
        .collect()
}

pub fn add(f: &FieldCtx, a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(&x, &y)| f.add(x, y)).collect())
        .collect()
}

pub fn is_zero(m: &Matrix) -> bool {
    m.iter().all(|row| row.iter().all(|x| x.is_zero()))
}

/// Reduced row echelon form; returns the nonzero rows and pivot columns.
/// The result is a canonical form of the row space.
pub fn rref(f: &FieldCtx, m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut rows = m.clone();
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = f.inv(rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c];
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(factor, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(f: &FieldCtx, m: &Matrix) -> usize {
    rref(f, m).1.len()
}

/// Solves `m x = rhs` for square invertible `m`.
pub fn solve(f: &FieldCtx, m: &Matrix, rhs: &[Gf]) -> Option<Vec<Gf>> {
    let n = m.len();
    let aug: Matrix = m
        .iter()
        .zip(rhs)
        .map(|(row, &b)| {
            let mut r = row.clone();
            r.push(b);
            r
        })
        .collect();
    let (red, pivots) = rref(f, &aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    let mut x = vec![Gf::ZERO; n];
    for (i, row) in red.iter().enumerate() {
        x[i] = row[n];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_of_singular_matrix() {
        let f = FieldCtx::prime_field(3).unwrap();
        let m: Matrix = vec![
            vec![Gf(1), Gf(2), Gf(0)],
            vec![Gf(2), Gf(1), Gf(0)],
            vec![Gf(0), Gf(0), Gf(1)],
        ];
        // row 2 = 2 * row 1 over F_3
        assert_eq!(rank(&f, &m), 2);
        let (red, piv) = rref(&f, &m);
        assert_eq!(piv, vec![0, 2]);
        assert_eq!(red[0], vec![Gf(1), Gf(2), Gf(0)]);
    }

    #[test]
    fn solve_recovers_solution() {
        let f = FieldCtx::prime_field(5).unwrap();
        let m: Matrix = vec![vec![Gf(1), Gf(2)], vec![Gf(3), Gf(4)]];
        let x = vec![Gf(2), Gf(3)];
        let rhs: Vec<Gf> = mul(&f, &m, &x.iter().map(|&v| vec![v]).collect())
            .into_iter()
            .map(|r| r[0])
            .collect();
        assert_eq!(solve(&f, &m, &rhs), Some(x));
    }
}
