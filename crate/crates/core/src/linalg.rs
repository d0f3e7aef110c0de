//! Dense Gaussian elimination over any [`Field`].
//!
//! Matrices are row-major `Vec<Vec<E>>` with an explicit column count so
//! that matrices without rows still know their width.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::{common_denominator, Field, PrimeField, Rationals, LARGE_PRIME};

pub type Matrix<E> = Vec<Vec<E>>;

/// Reduced row echelon form. Only the nonzero rows are kept.
#[derive(Debug, Clone, PartialEq)]
pub struct Echelon<E> {
    pub rows: Matrix<E>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl<E: Clone> Echelon<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Columns without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut free = Vec::with_capacity(self.ncols - self.pivots.len());
        let mut it = self.pivots.iter().peekable();
        for c in 0..self.ncols {
            if it.peek() == Some(&&c) {
                it.next();
            } else {
                free.push(c);
            }
        }
        free
    }
}

pub fn rref<F: Field>(f: &F, mut m: Matrix<F::Elem>, ncols: usize) -> Echelon<F::Elem> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !f.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, pr);
        let inv = f.inv(&m[r][c]).expect("nonzero pivot");
        for x in m[r][c..].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || f.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !f.is_zero(p) {
                    *x = f.sub(x, &f.mul(&factor, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    Echelon {
        rows: m,
        pivots,
        ncols,
    }
}

pub fn rank<F: Field>(f: &F, m: Matrix<F::Elem>, ncols: usize) -> usize {
    rref(f, m, ncols).rank()
}

/// Basis of the right kernel `{x : m x = 0}`, one vector per free column.
pub fn kernel<F: Field>(f: &F, m: Matrix<F::Elem>, ncols: usize) -> Vec<Vec<F::Elem>> {
    kernel_of_echelon(f, &rref(f, m, ncols))
}

pub fn kernel_of_echelon<F: Field>(f: &F, e: &Echelon<F::Elem>) -> Vec<Vec<F::Elem>> {
    e.free_columns()
        .into_iter()
        .map(|fc| {
            let mut v = vec![f.zero(); e.ncols];
            v[fc] = f.one();
            for (row, &pc) in e.rows.iter().zip(&e.pivots) {
                v[pc] = f.neg(&row[fc]);
            }
            v
        })
        .collect()
}

/// Basis of the left kernel `{y : y m = 0}`.
pub fn left_kernel<F: Field>(f: &F, m: &Matrix<F::Elem>, ncols: usize) -> Vec<Vec<F::Elem>> {
    kernel(f, transpose(m, ncols), m.len())
}

/// Some solution of `m x = b`, or `None` when the system is inconsistent.
pub fn solve<F: Field>(
    f: &F,
    m: &Matrix<F::Elem>,
    ncols: usize,
    b: &[F::Elem],
) -> Option<Vec<F::Elem>> {
    assert_eq!(m.len(), b.len(), "right-hand side length");
    let augmented = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let e = rref(f, augmented, ncols + 1);
    if e.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![f.zero(); ncols];
    for (row, &pc) in e.rows.iter().zip(&e.pivots) {
        x[pc] = row[ncols].clone();
    }
    Some(x)
}

pub fn transpose<E: Clone>(m: &Matrix<E>, ncols: usize) -> Matrix<E> {
    (0..ncols)
        .map(|c| m.iter().map(|row| row[c].clone()).collect())
        .collect()
}

pub fn mat_vec<F: Field>(f: &F, m: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
        })
        .collect()
}

/// Determinant by elimination. Panics on a non-square input.
pub fn det<F: Field>(f: &F, mut m: Matrix<F::Elem>) -> F::Elem {
    let n = m.len();
    let mut acc = f.one();
    for c in 0..n {
        assert_eq!(m[c].len(), n, "square matrix");
        let Some(pr) = (c..n).find(|&i| !f.is_zero(&m[i][c])) else {
            return f.zero();
        };
        if pr != c {
            m.swap(pr, c);
            acc = f.neg(&acc);
        }
        acc = f.mul(&acc, &m[c][c]);
        let inv = f.inv(&m[c][c]).expect("nonzero pivot");
        for i in c + 1..n {
            if f.is_zero(&m[i][c]) {
                continue;
            }
            let factor = f.mul(&m[i][c], &inv);
            let (top, bottom) = m.split_at_mut(i);
            for (x, y) in bottom[0][c..n].iter_mut().zip(&top[c][c..n]) {
                *x = f.sub(x, &f.mul(&factor, y));
            }
        }
    }
    acc
}

/// Exact rank of a rational matrix.
///
/// Each row is scaled to integers and reduced modulo `2^61 - 1`. Reduction
/// can only lower the rank, so a full modular rank is the rational rank;
/// otherwise the rank is recomputed over `Q`.
pub fn rank_rational(m: &Matrix<BigRational>, ncols: usize) -> usize {
    let full = m.len().min(ncols);
    if full == 0 {
        return 0;
    }
    if let Some(mm) = reduce_matrix(m, LARGE_PRIME) {
        let fp = PrimeField::new(LARGE_PRIME).expect("prime");
        if rank(&fp, mm, ncols) == full {
            return full;
        }
    }
    rank(&Rationals, m.clone(), ncols)
}

/// Reduces a rational matrix modulo `p` after clearing each row's
/// denominators. `None` if `p` does not fit the prime field.
pub fn reduce_matrix(m: &Matrix<BigRational>, p: u64) -> Option<Matrix<u64>> {
    let fp = PrimeField::new(p)?;
    Some(
        m.iter()
            .map(|row| {
                let scale = BigRational::from_integer(common_denominator(row.iter()));
                row.iter()
                    .map(|x| fp.reduce_int((x * &scale).numer()))
                    .collect()
            })
            .collect(),
    )
}

pub fn identity<F: Field>(f: &F, n: usize) -> Matrix<F::Elem> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { f.one() } else { f.zero() })
                .collect()
        })
        .collect()
}

pub fn is_zero_vector(v: &[BigRational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn rational_identity(n: usize) -> Matrix<BigRational> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn qm(rows: &[&[i64]]) -> Matrix<BigRational> {
        rows.iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect()
    }

    #[test]
    fn rank_and_kernel() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&Rationals, m.clone(), 3), 2);
        let k = kernel(&Rationals, m.clone(), 3);
        assert_eq!(k.len(), 1);
        assert!(is_zero_vector(&mat_vec(&Rationals, &m, &k[0])));
        assert_eq!(rank_rational(&m, 3), 2);
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = qm(&[&[1, 1], &[1, -1]]);
        let x = solve(&Rationals, &m, 2, &[q(3), q(1)]).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        let s = qm(&[&[1, 1], &[2, 2]]);
        assert!(solve(&Rationals, &s, 2, &[q(1), q(3)]).is_none());
    }

    #[test]
    fn determinant_small() {
        let m = qm(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]);
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(det(&Rationals, m), q(0));
        assert_eq!(det(&Rationals, qm(&[&[0, 1], &[1, 0]])), q(-1));
    }

    #[test]
    fn empty_shapes() {
        assert_eq!(rank_rational(&vec![], 4), 0);
        let k = kernel(&Rationals, vec![], 2);
        assert_eq!(k.len(), 2);
        assert!(left_kernel(&Rationals, &qm(&[&[1, 0]]), 2).is_empty());
    }

    #[test]
    fn modular_shortcut_agrees_on_rank_deficient() {
        let p = LARGE_PRIME as i64;
        // singular over F_p but of full rank over Q
        let m = qm(&[&[p, 0], &[0, 1]]);
        assert_eq!(rank_rational(&m, 2), 2);
    }
}
