//! Cohomology of `F = coker(φ)` by linear algebra on monomial bases.
//!
//! Line bundles on the plane have no middle cohomology, so
//! `H⁰(F(n))` is the cokernel of `⊕ S^{a_i+n} -> ⊕ S^{b_j+n}` and, by Serre
//! duality, `H¹(F(n))` is dual to the cokernel of the transposed map
//! `⊕ S^{-3-b_j-n} -> ⊕ S^{-3-a_i-n}`.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::forms::{int, space_dim, Form, Scalar};
use crate::gradedmat::{determinant, Presentation};
use crate::linalg::{self, Echelon, Matrix};

/// `χ(O(k)) = (k+1)(k+2)/2`, valid for every integer `k`.
pub fn chi_line_bundle(k: i64) -> i64 {
    (k + 1) * (k + 2) / 2
}

pub fn euler_characteristic(p: &Presentation, n: i32) -> i64 {
    let n = n as i64;
    p.target()
        .iter()
        .map(|&b| chi_line_bundle(b as i64 + n))
        .sum::<i64>()
        - p.source()
            .iter()
            .map(|&a| chi_line_bundle(a as i64 + n))
            .sum::<i64>()
}

/// Whether `φ` is injective, i.e. square with nonzero determinant.
pub fn is_injective(p: &Presentation) -> bool {
    if !p.is_square() {
        return false;
    }
    // a nonzero value at any point settles it without expanding
    for pt in [[1, 2, 3], [2, -1, 5], [-3, 4, 1], [5, 7, -2]] {
        let pt = pt.map(int);
        if !linalg::det(&Rationals, p.eval(&pt)).is_zero() {
            return true;
        }
    }
    determinant(p).map(|d| !d.is_zero()).unwrap_or(false)
}

fn require_injective(p: &Presentation) -> Result<()> {
    if !p.is_square() {
        return Err(Error::NotSquare);
    }
    if !is_injective(p) {
        return Err(Error::NotInjective);
    }
    Ok(())
}

fn offsets(twists: &[i32], n: i32) -> (Vec<usize>, usize) {
    let mut off = Vec::with_capacity(twists.len());
    let mut total = 0;
    for t in twists {
        off.push(total);
        total += space_dim(t + n);
    }
    (off, total)
}

/// Scalar matrix of `H⁰(⊕ O(a_i+n)) -> H⁰(⊕ O(b_j+n))`.
pub fn section_map(p: &Presentation, n: i32) -> (Matrix<Scalar>, usize) {
    let (row_off, rows) = offsets(p.target(), n);
    let (col_off, cols) = offsets(p.source(), n);
    let mut m = vec![vec![Scalar::zero(); cols]; rows];
    for (j, &ro) in row_off.iter().enumerate() {
        for (i, &co) in col_off.iter().enumerate() {
            let block = p.entry(j, i).multiplication_matrix(p.source()[i] + n);
            for (r, row) in block.iter().enumerate() {
                for (c, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        m[ro + r][co + c] = x.clone();
                    }
                }
            }
        }
    }
    (m, cols)
}

/// Scalar matrix of the transposed map
/// `⊕ S^{-3-b_j-n} -> ⊕ S^{-3-a_i-n}` whose cokernel is dual to `H¹(F(n))`.
pub fn dual_section_map(p: &Presentation, n: i32) -> (Matrix<Scalar>, usize) {
    let dt: Vec<i32> = p.target().iter().map(|b| -3 - b - n).collect();
    let ds: Vec<i32> = p.source().iter().map(|a| -3 - a - n).collect();
    let (row_off, rows) = offsets(&ds, 0);
    let (col_off, cols) = offsets(&dt, 0);
    let mut m = vec![vec![Scalar::zero(); cols]; rows];
    for (i, &ro) in row_off.iter().enumerate() {
        for (j, &co) in col_off.iter().enumerate() {
            let block = p.entry(j, i).multiplication_matrix(dt[j]);
            for (r, row) in block.iter().enumerate() {
                for (c, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        m[ro + r][co + c] = x.clone();
                    }
                }
            }
        }
    }
    (m, cols)
}

/// `H⁰(F(n))` as the quotient of `H⁰(⊕ O(b_j+n))` by the image of `φ`.
///
/// The image is kept in reduced echelon form; the coordinates of a coset are
/// the entries of its reduced representative at the non-pivot positions.
#[derive(Debug, Clone)]
pub struct SectionModel {
    pub twist: i32,
    target: Vec<i32>,
    image: Echelon<Scalar>,
    free: Vec<usize>,
}

impl SectionModel {
    pub fn new(p: &Presentation, n: i32) -> Result<Self> {
        require_injective(p)?;
        Ok(SectionModel::build(p, n))
    }

    fn build(p: &Presentation, n: i32) -> Self {
        let (m, cols) = section_map(p, n);
        let ambient = m.len();
        let image = linalg::rref(&Rationals, linalg::transpose(&m, cols), ambient);
        let free = image.free_columns();
        SectionModel {
            twist: n,
            target: p.target().to_vec(),
            image,
            free,
        }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.image.ncols
    }

    /// Basis of the image of `φ` inside the ambient space.
    pub fn image_basis(&self) -> &[Vec<Scalar>] {
        &self.image.rows
    }

    /// The standard lift of the `k`-th basis section.
    pub fn lift(&self, k: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.ambient_dim()];
        v[self.free[k]] = int(1);
        v
    }

    /// Coordinates of the coset of an ambient vector.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (row, &pc) in self.image.rows.iter().zip(&self.image.pivots) {
            if v[pc].is_zero() {
                continue;
            }
            let c = v[pc].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        self.free.iter().map(|&k| v[k].clone()).collect()
    }

    /// Multiplies an ambient vector of twist `n` by a form, giving an
    /// ambient vector of twist `n + deg ℓ`.
    pub fn multiply(&self, l: &Form, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = Vec::new();
        let mut start = 0;
        for b in &self.target {
            let d = b + self.twist;
            let len = space_dim(d);
            let m = l.multiplication_matrix(d);
            out.extend(linalg::mat_vec(&Rationals, &m, &v[start..start + len]));
            start += len;
        }
        out
    }
}

pub fn h0(p: &Presentation, n: i32) -> Result<usize> {
    require_injective(p)?;
    Ok(h0_unchecked(p, n))
}

fn h0_unchecked(p: &Presentation, n: i32) -> usize {
    let (m, cols) = section_map(p, n);
    m.len() - linalg::rank_rational(&m, cols)
}

/// `h¹(F(n)) = h⁰(F(n)) - χ(F(n))`.
pub fn h1_from_euler(p: &Presentation, n: i32) -> Result<usize> {
    let v = h0(p, n)? as i64 - euler_characteristic(p, n);
    usize::try_from(v).map_err(|_| Error::Internal(format!("negative h1 {v} at twist {n}")))
}

/// `h¹(F(n))` as the cokernel dimension of the Serre-dual map.
pub fn h1_serre(p: &Presentation, n: i32) -> Result<usize> {
    require_injective(p)?;
    Ok(h1_serre_unchecked(p, n))
}

fn h1_serre_unchecked(p: &Presentation, n: i32) -> usize {
    let (m, cols) = dual_section_map(p, n);
    m.len() - linalg::rank_rational(&m, cols)
}

/// `h¹(F(n))`, computed both ways; a disagreement is an internal fault.
pub fn h1(p: &Presentation, n: i32) -> Result<usize> {
    require_injective(p)?;
    let a = h0_unchecked(p, n) as i64 - euler_characteristic(p, n);
    let b = h1_serre_unchecked(p, n) as i64;
    if a != b {
        return Err(Error::Internal(format!(
            "h1 at twist {n}: {a} from the Euler characteristic, {b} from Serre duality"
        )));
    }
    Ok(b as usize)
}

/// `(r, χ)` with `χ(F(m)) = r m + χ`.
pub fn hilbert_polynomial(p: &Presentation) -> Result<(i64, i64)> {
    let c0 = euler_characteristic(p, 0);
    let c1 = euler_characteristic(p, 1);
    let c2 = euler_characteristic(p, 2);
    if c2 - c1 != c1 - c0 {
        return Err(Error::NonLinearHilbert);
    }
    require_injective(p)?;
    Ok((c1 - c0, c0))
}

/// `h⁰(F ⊗ Ω¹(1))`, the kernel of `(s1, s2, s3) -> X s1 + Y s2 + Z s3`
/// from `H⁰(F)³` to `H⁰(F(1))`.
pub fn h0_tensor_omega(p: &Presentation) -> Result<usize> {
    require_injective(p)?;
    let m0 = SectionModel::build(p, 0);
    let m1 = SectionModel::build(p, 1);
    let vars = [Form::x(), Form::y(), Form::z()];
    let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(3 * m0.dim());
    for v in &vars {
        for k in 0..m0.dim() {
            cols.push(m1.reduce(&m0.multiply(v, &m0.lift(k))));
        }
    }
    let ncols = cols.len();
    if ncols == 0 {
        return Ok(0);
    }
    let rank = linalg::rank_rational(&cols, m1.dim());
    Ok(ncols - rank)
}

/// The three classifying numbers `(h⁰(F(-1)), h¹(F), h⁰(F ⊗ Ω¹(1)))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CohomologyTable {
    pub h0_minus1: usize,
    pub h1_0: usize,
    pub h0_omega: usize,
}

impl CohomologyTable {
    pub const fn new(h0_minus1: usize, h1_0: usize, h0_omega: usize) -> Self {
        CohomologyTable {
            h0_minus1,
            h1_0,
            h0_omega,
        }
    }

    pub fn as_tuple(&self) -> (usize, usize, usize) {
        (self.h0_minus1, self.h1_0, self.h0_omega)
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.h0_minus1, self.h1_0, self.h0_omega)
    }
}

pub fn cohomology_table(p: &Presentation) -> Result<CohomologyTable> {
    let (r, chi) = hilbert_polynomial(p)?;
    if (r, chi) != (6, 3) {
        return Err(Error::WrongHilbertPolynomial(r, chi));
    }
    Ok(CohomologyTable {
        h0_minus1: h0(p, -1)?,
        h1_0: h1(p, 0)?,
        h0_omega: h0_tensor_omega(p)?,
    })
}
