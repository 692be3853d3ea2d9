//! Smith normal form of integer matrices with unimodular transforms.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<BigInt>>;

/// `u * a * v = diag(d)` with `u`, `v` unimodular, `d[k] >= 0` and `d[k] | d[k+1]`
/// among the first `rank` entries (the rest are zero).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Smith {
    pub u: Matrix,
    pub v: Matrix,
    pub d: Vec<BigInt>,
    pub rank: usize,
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix, inner: usize, cols: usize) -> Matrix {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(BigInt::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

struct State {
    a: Matrix,
    u: Matrix,
    v: Matrix,
    rows: usize,
    cols: usize,
}

impl State {
    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let src_row = m[src].clone();
            for (x, y) in m[dst].iter_mut().zip(&src_row) {
                *x += k * y;
            }
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for m in [&mut self.a, &mut self.v] {
            for row in m.iter_mut() {
                let y = row[src].clone();
                row[dst] += k * y;
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for m in [&mut self.a, &mut self.v] {
            for row in m.iter_mut() {
                row.swap(i, j);
            }
        }
    }

    fn smallest(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < self.a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }
}

pub fn smith(a: &Matrix, rows: usize, cols: usize) -> Smith {
    let mut s = State { a: a.clone(), u: identity(rows), v: identity(cols), rows, cols };
    let mut rank = 0;
    for t in 0..rows.min(cols) {
        while let Some((pi, pj)) = s.smallest(t) {
            s.a.swap(t, pi);
            s.u.swap(t, pi);
            s.swap_cols(t, pj);
            let pivot = s.a[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = s.a[i][t].div_floor(&pivot);
                if !q.is_zero() {
                    s.add_row(i, t, &-q);
                }
                clean &= s.a[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = s.a[t][j].div_floor(&pivot);
                if !q.is_zero() {
                    s.add_col(j, t, &-q);
                }
                clean &= s.a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad_row = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !s.a[i][j].is_multiple_of(&pivot)));
            match bad_row {
                Some(i) => s.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if s.a[t][t].is_zero() {
            break;
        }
        if s.a[t][t].is_negative() {
            for m in [&mut s.a, &mut s.u] {
                for x in m[t].iter_mut() {
                    *x = -&*x;
                }
            }
        }
        rank = t + 1;
    }
    let d = (0..rows.min(cols)).map(|k| s.a[k][k].clone()).collect();
    Smith { u: s.u, v: s.v, d, rank }
}

/// `x * m` for a row vector `x`.
pub fn row_times(x: &[BigInt], m: &Matrix, cols: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); cols];
    for (xi, row) in x.iter().zip(m) {
        if xi.is_zero() {
            continue;
        }
        for (o, y) in out.iter_mut().zip(row) {
            *o += xi * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn check(a: &Matrix, rows: usize, cols: usize) -> Smith {
        let s = smith(a, rows, cols);
        let prod = mat_mul(&mat_mul(&s.u, a, rows, cols), &s.v, cols, cols);
        for (i, row) in prod.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let expected = if i == j { s.d[i].clone() } else { BigInt::zero() };
                assert_eq!(*x, expected);
            }
        }
        for k in 1..s.rank {
            assert!(s.d[k].is_multiple_of(&s.d[k - 1]));
        }
        s
    }

    #[test]
    fn small_matrices() {
        let s = check(&m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), 3, 3);
        assert_eq!(s.d, m(&[&[2, 6, 12]])[0]);
        let s = check(&m(&[&[0, 0], &[0, 0]]), 2, 2);
        assert_eq!(s.rank, 0);
        let s = check(&m(&[&[1, -1, 1]]), 1, 3);
        assert_eq!(s.d, m(&[&[1]])[0]);
        let s = check(&m(&[&[2, 3], &[4, 6], &[1, 1]]), 3, 2);
        assert_eq!(s.rank, 2);
        assert_eq!(s.d, m(&[&[1, 1]])[0]);
    }
}
