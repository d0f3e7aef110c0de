//! Graded matrices `⊕ O(a_i) -> ⊕ O(b_j)` of homogeneous forms.

use std::ops::Range;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::forms::{int, monomial_basis, space_dim, Form, Scalar};
use crate::linalg::{self, Matrix};

/// A graded matrix together with its twist vectors.
///
/// `entries[j][i]` is the component `O(a_i) -> O(b_j)` and has degree
/// `b_j - a_i`; it is zero when that degree is negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Presentation {
    source: Vec<i32>,
    target: Vec<i32>,
    entries: Vec<Vec<Form>>,
}

impl Presentation {
    /// Builds a presentation, rejecting any grading violation. Zero entries
    /// are normalised to the required degree.
    pub fn new(source: Vec<i32>, target: Vec<i32>, entries: Vec<Vec<Form>>) -> Result<Self> {
        let p = Presentation::new_unchecked(source, target, entries);
        let violations = p.validate();
        if violations.is_empty() {
            Ok(p)
        } else {
            Err(Error::InvalidPresentation(violations))
        }
    }

    /// Builds without checking; call [`Presentation::validate`] afterwards.
    pub fn new_unchecked(source: Vec<i32>, target: Vec<i32>, mut entries: Vec<Vec<Form>>) -> Self {
        for (j, row) in entries.iter_mut().enumerate() {
            for (i, e) in row.iter_mut().enumerate() {
                if let (Some(b), Some(a)) = (target.get(j), source.get(i)) {
                    if e.is_zero() && e.degree() != b - a {
                        *e = Form::zero(b - a);
                    }
                }
            }
        }
        Presentation {
            source,
            target,
            entries,
        }
    }

    /// The matrix whose every entry is zero.
    pub fn zero(source: Vec<i32>, target: Vec<i32>) -> Self {
        let entries = target
            .iter()
            .map(|b| source.iter().map(|a| Form::zero(b - a)).collect())
            .collect();
        Presentation {
            source,
            target,
            entries,
        }
    }

    pub fn identity(twists: Vec<i32>) -> Self {
        let mut p = Presentation::zero(twists.clone(), twists);
        for k in 0..p.source.len() {
            p.entries[k][k] = Form::one();
        }
        p
    }

    /// Random entries of the required degrees with coefficients in
    /// `[-height, height]`.
    pub fn random<R: Rng + ?Sized>(
        source: Vec<i32>,
        target: Vec<i32>,
        rng: &mut R,
        height: i64,
    ) -> Self {
        let entries = target
            .iter()
            .map(|b| {
                source
                    .iter()
                    .map(|a| Form::random(b - a, rng, height))
                    .collect()
            })
            .collect();
        Presentation {
            source,
            target,
            entries,
        }
    }

    /// Grading violations, empty for a well-formed presentation.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.entries.len() != self.target.len() {
            out.push(format!(
                "{} rows for {} target twists",
                self.entries.len(),
                self.target.len()
            ));
        }
        for (j, row) in self.entries.iter().enumerate() {
            if row.len() != self.source.len() {
                out.push(format!(
                    "row {} has {} entries for {} source twists",
                    j + 1,
                    row.len(),
                    self.source.len()
                ));
            }
            for (i, e) in row.iter().enumerate() {
                let (Some(b), Some(a)) = (self.target.get(j), self.source.get(i)) else {
                    continue;
                };
                let need = b - a;
                if e.degree() != need && !e.is_zero() {
                    if need < 0 {
                        out.push(format!(
                            "entry ({},{}) must vanish (required degree {need}) but is {e}",
                            j + 1,
                            i + 1
                        ));
                    } else {
                        out.push(format!(
                            "entry ({},{}) has degree {} but must have degree {need}",
                            j + 1,
                            i + 1,
                            e.degree()
                        ));
                    }
                }
            }
        }
        out
    }

    pub fn source(&self) -> &[i32] {
        &self.source
    }

    pub fn target(&self) -> &[i32] {
        &self.target
    }

    pub fn entries(&self) -> &[Vec<Form>] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &Form {
        &self.entries[row][col]
    }

    pub fn nrows(&self) -> usize {
        self.target.len()
    }

    pub fn ncols(&self) -> usize {
        self.source.len()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    /// `Σb - Σa`, the degree of the determinant of a square presentation.
    pub fn degree_sum(&self) -> i32 {
        self.target.iter().sum::<i32>() - self.source.iter().sum::<i32>()
    }

    /// Returns a copy with one entry replaced.
    pub fn with_entry(&self, row: usize, col: usize, f: Form) -> Result<Self> {
        let mut entries = self.entries.clone();
        entries[row][col] = f;
        Presentation::new(self.source.clone(), self.target.clone(), entries)
    }

    /// Sub-matrix on the given target rows and source columns.
    pub fn block(&self, rows: Range<usize>, cols: Range<usize>) -> Presentation {
        self.select(&rows.collect::<Vec<_>>(), &cols.collect::<Vec<_>>())
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Presentation {
        Presentation {
            source: cols.iter().map(|&i| self.source[i]).collect(),
            target: rows.iter().map(|&j| self.target[j]).collect(),
            entries: rows
                .iter()
                .map(|&j| cols.iter().map(|&i| self.entries[j][i].clone()).collect())
                .collect(),
        }
    }

    /// Entries in row-major order.
    pub fn forms(&self) -> impl Iterator<Item = &Form> {
        self.entries.iter().flatten()
    }

    pub fn is_zero(&self) -> bool {
        self.forms().all(Form::is_zero)
    }

    pub fn add(&self, o: &Presentation) -> Result<Presentation> {
        if self.source != o.source || self.target != o.target {
            return Err(Error::TwistMismatch(
                "sum of differently graded matrices".into(),
            ));
        }
        let entries = self
            .entries
            .iter()
            .zip(&o.entries)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a.add(b)).collect())
            .collect::<Result<_>>()?;
        Ok(Presentation {
            source: self.source.clone(),
            target: self.target.clone(),
            entries,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Presentation {
        Presentation {
            source: self.source.clone(),
            target: self.target.clone(),
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|e| e.scale(c)).collect())
                .collect(),
        }
    }

    /// Values of the entries at a point of the affine cone.
    pub fn eval(&self, point: &[Scalar; 3]) -> Matrix<Scalar> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|e| e.eval(point)).collect())
            .collect()
    }
}

/// `Q ∘ P`.
pub fn compose(q: &Presentation, p: &Presentation) -> Result<Presentation> {
    if q.source != p.target {
        return Err(Error::TwistMismatch(format!(
            "cannot compose: source {:?} of the left factor differs from target {:?}",
            q.source, p.target
        )));
    }
    let entries = q
        .target
        .iter()
        .enumerate()
        .map(|(k, c)| {
            p.source
                .iter()
                .enumerate()
                .map(|(i, a)| {
                    let mut acc = Form::zero(c - a);
                    for j in 0..p.target.len() {
                        let t = q.entries[k][j].mul(&p.entries[j][i]);
                        if !t.is_zero() {
                            acc = acc.add(&t).expect("graded product");
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    Ok(Presentation {
        source: p.source.clone(),
        target: q.target.clone(),
        entries,
    })
}

/// Determinant of a square presentation: Laplace expansion up to size 4,
/// evaluation and interpolation above.
pub fn determinant(p: &Presentation) -> Result<Form> {
    if !p.is_square() {
        return Err(Error::NotSquare);
    }
    if p.nrows() <= 4 {
        Ok(laplace(p))
    } else {
        determinant_interpolated(p)
    }
}

/// Cofactor expansion along the first row.
pub fn determinant_laplace(p: &Presentation) -> Result<Form> {
    if !p.is_square() {
        return Err(Error::NotSquare);
    }
    Ok(laplace(p))
}

fn laplace(p: &Presentation) -> Form {
    let n = p.nrows();
    let degree = p.degree_sum();
    match n {
        0 => return Form::one(),
        1 => return p.entries[0][0].clone(),
        _ => {}
    }
    let mut acc = Form::zero(degree);
    if degree < 0 {
        return acc;
    }
    let rows: Vec<usize> = (1..n).collect();
    for i in 0..n {
        let e = &p.entries[0][i];
        if e.is_zero() {
            continue;
        }
        let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
        let term = e.mul(&laplace(&p.select(&rows, &cols)));
        acc = if i % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        }
        .expect("cofactor degree");
    }
    acc
}

/// Points `(i, j, 1)` with `i + j <= d`; unisolvent for forms of degree `d`.
pub fn interpolation_grid(d: i32) -> Vec<[Scalar; 3]> {
    let mut pts = Vec::with_capacity(space_dim(d));
    for i in 0..=d.max(0) as i64 {
        for j in 0..=(d as i64 - i) {
            pts.push([int(i), int(j), int(1)]);
        }
    }
    pts
}

/// Recovers the determinant from its values on [`interpolation_grid`].
pub fn determinant_interpolated(p: &Presentation) -> Result<Form> {
    if !p.is_square() {
        return Err(Error::NotSquare);
    }
    let d = p.degree_sum();
    if d < 0 {
        return Ok(Form::zero(d));
    }
    let basis = monomial_basis(d);
    let pts = interpolation_grid(d);
    let mut vander = Vec::with_capacity(pts.len());
    let mut values = Vec::with_capacity(pts.len());
    for pt in &pts {
        vander.push(
            basis
                .iter()
                .map(|m| Form::monomial(*m, Scalar::one()).eval(pt))
                .collect(),
        );
        values.push(linalg::det(&Rationals, p.eval(pt)));
    }
    let coeffs = linalg::solve(&Rationals, &vander, basis.len(), &values)
        .ok_or_else(|| Error::Internal("interpolation grid is not unisolvent".into()))?;
    Form::from_coeffs(d, coeffs)
}

/// All maximal minors. For a `k × n` matrix with `k <= n` the minor list
/// runs over the deleted column sets in lex order (and symmetrically for
/// tall matrices); each minor is the determinant of the remaining square
/// sub-matrix with rows and columns kept in their original order.
pub fn maximal_minors(p: &Presentation) -> Vec<Form> {
    let (t, s) = (p.nrows(), p.ncols());
    let k = t.min(s);
    let all_rows: Vec<usize> = (0..t).collect();
    let all_cols: Vec<usize> = (0..s).collect();
    if t <= s {
        subsets(s, s - k)
            .into_iter()
            .map(|del| {
                let cols: Vec<usize> = all_cols
                    .iter()
                    .copied()
                    .filter(|c| !del.contains(c))
                    .collect();
                laplace(&p.select(&all_rows, &cols))
            })
            .collect()
    } else {
        subsets(t, t - k)
            .into_iter()
            .map(|del| {
                let rows: Vec<usize> = all_rows
                    .iter()
                    .copied()
                    .filter(|r| !del.contains(r))
                    .collect();
                laplace(&p.select(&rows, &all_cols))
            })
            .collect()
    }
}

/// `k`-element subsets of `0..n` in lex order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Graded transpose realising `F -> Ext^1(F, ω) ⊗ O(extra_twist)`.
///
/// Twist vectors are negated, shifted and reversed so that they stay in
/// ascending order; applying it twice with `extra_twist = 1` returns the
/// input.
pub fn dualize(p: &Presentation, extra_twist: i32) -> Presentation {
    let (t, s) = (p.nrows(), p.ncols());
    let source = p
        .target
        .iter()
        .rev()
        .map(|b| -b - 3 + extra_twist)
        .collect();
    let target = p
        .source
        .iter()
        .rev()
        .map(|a| -a - 3 + extra_twist)
        .collect();
    let entries = (0..s)
        .map(|r| {
            (0..t)
                .map(|c| p.entries[t - 1 - c][s - 1 - r].clone())
                .collect()
        })
        .collect();
    Presentation {
        source,
        target,
        entries,
    }
}

/// Witness `(u, v)` for `φ21 = v φ11 + φ22 u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaWitness {
    /// From the sources of `φ11` to the sources of `φ22`.
    pub u: Presentation,
    /// From the targets of `φ11` to the targets of `φ22`.
    pub v: Presentation,
}

/// Decides whether `φ21` lies in `{v φ11 + φ22 u}` by solving for the
/// coefficients of `u` and `v`.
pub fn sigma_membership(
    phi21: &Presentation,
    phi11: &Presentation,
    phi22: &Presentation,
) -> Result<Option<SigmaWitness>> {
    if phi21.source != phi11.source || phi21.target != phi22.target {
        return Err(Error::ShapeMismatch(
            "φ21 must share sources with φ11 and targets with φ22".into(),
        ));
    }
    let u_shape = Presentation::zero(phi11.source.clone(), phi22.source.clone());
    let v_shape = Presentation::zero(phi11.target.clone(), phi22.target.clone());

    // unknowns: coefficients of u entries, then of v entries
    let mut unknowns: Vec<(bool, usize, usize, usize)> = Vec::new();
    for (is_v, shape) in [(false, &u_shape), (true, &v_shape)] {
        for r in 0..shape.nrows() {
            for c in 0..shape.ncols() {
                for m in 0..space_dim(shape.entries[r][c].degree()) {
                    unknowns.push((is_v, r, c, m));
                }
            }
        }
    }
    // equations: coefficients of φ21 entries
    let mut offsets = Vec::new();
    let mut neq = 0;
    for row in &phi21.entries {
        let mut o = Vec::new();
        for e in row {
            o.push(neq);
            neq += space_dim(e.degree());
        }
        offsets.push(o);
    }
    let mut m: Matrix<Scalar> = vec![vec![Scalar::zero(); unknowns.len()]; neq];
    for (col, &(is_v, r, c, mi)) in unknowns.iter().enumerate() {
        let shape = if is_v { &v_shape } else { &u_shape };
        let d = shape.entries[r][c].degree();
        let mono = Form::monomial(monomial_basis(d)[mi], Scalar::one());
        if is_v {
            // v[r][c] contributes to row r of φ21 through row c of φ11
            for i in 0..phi21.ncols() {
                let prod = mono.mul(&phi11.entries[c][i]);
                for (k, x) in prod.coeffs().iter().enumerate() {
                    m[offsets[r][i] + k][col] += x;
                }
            }
        } else {
            // u[r][c] contributes to column c of φ21 through column r of φ22
            for j in 0..phi21.nrows() {
                let prod = phi22.entries[j][r].mul(&mono);
                for (k, x) in prod.coeffs().iter().enumerate() {
                    m[offsets[j][c] + k][col] += x;
                }
            }
        }
    }
    let rhs: Vec<Scalar> = phi21.forms().flat_map(|f| f.coeffs().to_vec()).collect();
    let Some(sol) = linalg::solve(&Rationals, &m, unknowns.len(), &rhs) else {
        return Ok(None);
    };
    let mut u = u_shape;
    let mut v = v_shape;
    for (x, &(is_v, r, c, mi)) in sol.iter().zip(&unknowns) {
        if x.is_zero() {
            continue;
        }
        let target = if is_v { &mut v } else { &mut u };
        let d = target.entries[r][c].degree();
        let term = Form::monomial(monomial_basis(d)[mi], x.clone());
        target.entries[r][c] = target.entries[r][c].add(&term)?;
    }
    Ok(Some(SigmaWitness { u, v }))
}

/// An automorphism of `⊕ O(t_k)`.
///
/// After sorting by twist it is block lower triangular: the diagonal blocks
/// are scalar matrices and everything above them has negative degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAutomorphism {
    matrix: Presentation,
}

impl GradedAutomorphism {
    pub fn new(matrix: Presentation) -> Result<Self> {
        if matrix.source != matrix.target {
            return Err(Error::TwistMismatch(
                "an automorphism has equal source and target twists".into(),
            ));
        }
        let violations = matrix.validate();
        if !violations.is_empty() {
            return Err(Error::InvalidPresentation(violations));
        }
        let g = GradedAutomorphism { matrix };
        if g.det().is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(g)
    }

    pub fn identity(twists: Vec<i32>) -> Self {
        GradedAutomorphism {
            matrix: Presentation::identity(twists),
        }
    }

    /// A random invertible automorphism.
    pub fn random<R: Rng + ?Sized>(twists: Vec<i32>, rng: &mut R, height: i64) -> Self {
        loop {
            let m = Presentation::random(twists.clone(), twists.clone(), rng, height);
            if let Ok(g) = GradedAutomorphism::new(m) {
                return g;
            }
        }
    }

    pub fn matrix(&self) -> &Presentation {
        &self.matrix
    }

    pub fn twists(&self) -> &[i32] {
        &self.matrix.source
    }

    /// Groups of indices with equal twist, in ascending twist order.
    fn blocks(&self) -> Vec<Vec<usize>> {
        let mut tw: Vec<i32> = self.twists().to_vec();
        tw.sort_unstable();
        tw.dedup();
        tw.iter()
            .map(|t| {
                self.twists()
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| *x == t)
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect()
    }

    /// The determinant, which is the product of the determinants of the
    /// scalar diagonal blocks.
    pub fn det(&self) -> Scalar {
        self.blocks().iter().fold(Scalar::one(), |acc, b| {
            let m: Matrix<Scalar> = b
                .iter()
                .map(|&r| {
                    b.iter()
                        .map(|&c| self.matrix.entries[r][c].coeffs()[0].clone())
                        .collect()
                })
                .collect();
            acc * linalg::det(&Rationals, m)
        })
    }

    /// Exact inverse by the Neumann series of the nilpotent off-diagonal
    /// part: `h^{-1} = Σ (-D^{-1} N)^k D^{-1}`.
    pub fn inverse(&self) -> GradedAutomorphism {
        let tw = self.twists().to_vec();
        let mut dinv = Presentation::zero(tw.clone(), tw.clone());
        let mut nil = self.matrix.clone();
        for b in self.blocks() {
            let m: Matrix<Scalar> = b
                .iter()
                .map(|&r| {
                    b.iter()
                        .map(|&c| self.matrix.entries[r][c].coeffs()[0].clone())
                        .collect()
                })
                .collect();
            let inv = invert_scalar(&m);
            for (x, &r) in b.iter().enumerate() {
                for (y, &c) in b.iter().enumerate() {
                    dinv.entries[r][c] = Form::constant(inv[x][y].clone());
                    nil.entries[r][c] = Form::zero(0);
                }
            }
        }
        let step = compose(&dinv, &nil)
            .expect("same twists")
            .scale(&-Scalar::one());
        let mut term = dinv.clone();
        let mut sum = dinv;
        loop {
            term = compose(&step, &term).expect("same twists");
            if term.is_zero() {
                break;
            }
            sum = sum.add(&term).expect("same twists");
        }
        GradedAutomorphism { matrix: sum }
    }
}

fn invert_scalar(m: &Matrix<BigRational>) -> Matrix<BigRational> {
    let n = m.len();
    let aug: Matrix<BigRational> = m
        .iter()
        .zip(linalg::rational_identity(n))
        .map(|(r, e)| r.iter().cloned().chain(e).collect())
        .collect();
    let e = linalg::rref(&Rationals, aug, 2 * n);
    e.rows.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// `g ∘ P ∘ h^{-1}`.
pub fn apply_equivalence(
    g: &GradedAutomorphism,
    p: &Presentation,
    h: &GradedAutomorphism,
) -> Result<Presentation> {
    if g.twists() != p.target() || h.twists() != p.source() {
        return Err(Error::TwistMismatch(
            "automorphisms must act on the target and source of the presentation".into(),
        ));
    }
    compose(&compose(g.matrix(), p)?, h.inverse().matrix())
}
