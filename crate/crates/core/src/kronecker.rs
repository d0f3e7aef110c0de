//! Kronecker modules: `q × p` matrices with entries in an `m`-dimensional
//! coefficient space, up to base change on both sides.
//!
//! A module is unstable when some subspace `U` of the source and `W` of the
//! target satisfy `A_k U ⊂ W` for every coefficient slice `A_k` and
//! `q dim U > p dim W`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{common_denominator, Field, PrimeField, Rationals};
use crate::forms::{span_dimension, Form, Scalar};
use crate::gradedmat::{maximal_minors, subsets, Presentation};
use crate::linalg::{self, Matrix};

pub const DEFAULT_PRIME: u64 = 10007;
pub const DEFAULT_TRIALS: usize = 10_000;
/// Smallest prime accepted for the randomized search.
pub const MIN_PRIME: u64 = 10007;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KroneckerModule {
    p: usize,
    q: usize,
    m: usize,
    /// `entries[row][col]` is a coefficient vector of length `m`.
    entries: Vec<Vec<Vec<Scalar>>>,
}

impl KroneckerModule {
    pub fn new(p: usize, q: usize, m: usize, entries: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        if p == 0 || q == 0 || m == 0 {
            return Err(Error::ShapeMismatch("p, q and m must be positive".into()));
        }
        if entries.len() != q
            || entries
                .iter()
                .any(|r| r.len() != p || r.iter().any(|e| e.len() != m))
        {
            return Err(Error::ShapeMismatch(format!(
                "expected a {q}×{p} matrix of vectors of length {m}"
            )));
        }
        Ok(KroneckerModule { p, q, m, entries })
    }

    /// Reads a graded matrix whose entries all have one degree `d >= 0`;
    /// the coefficient space is `S^d`.
    pub fn from_presentation(pres: &Presentation) -> Result<Self> {
        let mut degree = None;
        for f in pres.forms() {
            match degree {
                None => degree = Some(f.degree()),
                Some(d) if d != f.degree() => {
                    return Err(Error::ShapeMismatch(
                        "a Kronecker module needs entries of a single degree".into(),
                    ))
                }
                _ => {}
            }
        }
        let d = degree.ok_or_else(|| Error::ShapeMismatch("empty matrix".into()))?;
        if d < 0 {
            return Err(Error::ShapeMismatch("entries of negative degree".into()));
        }
        let entries = pres
            .entries()
            .iter()
            .map(|r| r.iter().map(|f| f.coeffs().to_vec()).collect())
            .collect();
        KroneckerModule::new(
            pres.ncols(),
            pres.nrows(),
            crate::forms::space_dim(d),
            entries,
        )
    }

    /// The inverse of [`KroneckerModule::from_presentation`] for forms of
    /// degree `d`, sources twisted by `-d` and targets by `0`.
    pub fn to_presentation(&self, d: i32) -> Result<Presentation> {
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(|e| Form::from_coeffs(d, e.clone())).collect())
            .collect::<Result<_>>()?;
        Presentation::new(vec![-d; self.p], vec![0; self.q], entries)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn entries(&self) -> &[Vec<Vec<Scalar>>] {
        &self.entries
    }

    /// The scalar `q × p` slice for the `k`-th coefficient.
    pub fn slice(&self, k: usize) -> Matrix<Scalar> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|e| e[k].clone()).collect())
            .collect()
    }

    pub fn slices(&self) -> Vec<Matrix<Scalar>> {
        (0..self.m).map(|k| self.slice(k)).collect()
    }

    /// `L · M · R` for invertible scalar matrices `L` (`q × q`) and
    /// `R` (`p × p`).
    pub fn base_change(&self, left: &Matrix<Scalar>, right: &Matrix<Scalar>) -> Self {
        let mut entries = vec![vec![vec![Scalar::zero(); self.m]; self.p]; self.q];
        for (r, out_row) in entries.iter_mut().enumerate() {
            for (c, out) in out_row.iter_mut().enumerate() {
                for (a, l) in left[r].iter().enumerate() {
                    if l.is_zero() {
                        continue;
                    }
                    for (b, rb) in right.iter().enumerate().take(self.p) {
                        if rb[c].is_zero() {
                            continue;
                        }
                        let s = l * &rb[c];
                        for (o, e) in out.iter_mut().zip(&self.entries[a][b]) {
                            *o += &s * e;
                        }
                    }
                }
            }
        }
        KroneckerModule {
            entries,
            ..self.clone()
        }
    }

    pub fn transpose(&self) -> Self {
        KroneckerModule {
            p: self.q,
            q: self.p,
            m: self.m,
            entries: (0..self.p)
                .map(|c| (0..self.q).map(|r| self.entries[r][c].clone()).collect())
                .collect(),
        }
    }
}

/// A zero block forced by an unstable pair of subspaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BlockShape {
    pub dim_u: usize,
    pub dim_w: usize,
    /// `q - dim W`.
    pub zero_rows: usize,
    /// `dim U`.
    pub zero_cols: usize,
}

/// Every `(dim U, dim W)` violating `q dim U <= p dim W`.
pub fn all_forbidden_pairs(p: usize, q: usize) -> Vec<BlockShape> {
    let mut out = Vec::new();
    for du in 1..=p {
        for dw in 0..q {
            if q * du > p * dw {
                out.push(BlockShape {
                    dim_u: du,
                    dim_w: dw,
                    zero_rows: q - dw,
                    zero_cols: du,
                });
            }
        }
    }
    out
}

/// The minimal forbidden zero blocks: every forbidden pair contains one of
/// these. For each `dim U` the largest admissible `dim W` is kept, and only
/// where it is larger than for every smaller `dim U`.
pub fn forbidden_block_shapes(p: usize, q: usize) -> Vec<BlockShape> {
    let all = all_forbidden_pairs(p, q);
    let mut out: Vec<BlockShape> = Vec::new();
    for du in 1..=p {
        let Some(best) = all.iter().filter(|s| s.dim_u == du).max_by_key(|s| s.dim_w) else {
            continue;
        };
        if out.last().is_none_or(|l| best.dim_w > l.dim_w) {
            out.push(*best);
        }
    }
    out
}

/// `dim N(m, p, q) = m p q - p² - q² + 1`.
pub fn dim_n(m: i64, p: i64, q: i64) -> i64 {
    m * p * q - p * p - q * q + 1
}

/// Whether the exact minors criterion decides this shape.
pub fn minors_criterion_applies(module: &KroneckerModule) -> bool {
    let (lo, hi) = (module.p.min(module.q), module.p.max(module.q));
    module.m == 3 && ((lo == 1 && hi <= 3) || (lo == 2 && hi == 3))
}

/// Semistability of a module with linear entries and shape `1 × k`,
/// `k × 1` (`k <= 3`), `2 × 3` or `3 × 2`: semistable iff the maximal minors
/// are linearly independent.
pub fn is_semistable_minors(module: &KroneckerModule) -> Result<bool> {
    if !minors_criterion_applies(module) {
        return Err(Error::Precondition(format!(
            "the minors criterion covers linear 1×k, k×1 (k <= 3), 2×3 and 3×2 modules, not {}×{} with m = {}",
            module.q, module.p, module.m
        )));
    }
    let minors = maximal_minors(&module.to_presentation(1)?);
    Ok(span_dimension(&minors)? == minors.len() && minors.iter().all(|f| !f.is_zero()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstabilityWitness {
    /// Basis of `U` in the source.
    #[serde(serialize_with = "ser_vectors")]
    pub u: Vec<Vec<Scalar>>,
    /// Basis of `W` in the target.
    #[serde(serialize_with = "ser_vectors")]
    pub w: Vec<Vec<Scalar>>,
}

fn ser_vectors<S: serde::Serializer>(
    v: &[Vec<Scalar>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for row in v {
        seq.serialize_element(&row.iter().map(|x| x.to_string()).collect::<Vec<_>>())?;
    }
    seq.end()
}

/// Exact check that `A_k U ⊂ W` for all `k` and `q dim U > p dim W`.
pub fn verify_witness(module: &KroneckerModule, w: &InstabilityWitness) -> bool {
    if w.u.iter().any(|v| v.len() != module.p) || w.w.iter().any(|v| v.len() != module.q) {
        return false;
    }
    let du = linalg::rank_rational(&w.u, module.p);
    let dw = linalg::rank_rational(&w.w, module.q);
    if du != w.u.len() || dw != w.w.len() || du == 0 {
        return false;
    }
    if module.q * du <= module.p * dw {
        return false;
    }
    let slices = module.slices();
    let mut rows = w.w.clone();
    for a in &slices {
        for u in &w.u {
            rows.push(linalg::mat_vec(&Rationals, a, u));
        }
    }
    linalg::rank_rational(&rows, module.q) == dw
}

/// How a candidate subspace is produced; replayable in any field.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Recipe {
    /// `U` spanned by the listed coordinate vectors.
    Coordinates(Vec<usize>),
    /// The common kernel of every slice.
    CommonKernel,
    /// Sum of the kernels of `Σ t_k A_k` for each listed `t`.
    Kernels(Vec<Vec<i64>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Candidate {
    transposed: bool,
    recipe: Recipe,
}

/// Span of `A_k u` over all slices and basis vectors.
fn image_of<F: Field>(
    f: &F,
    slices: &[Matrix<F::Elem>],
    q: usize,
    u: &[Vec<F::Elem>],
) -> Vec<Vec<F::Elem>> {
    let rows: Matrix<F::Elem> = slices
        .iter()
        .flat_map(|a| u.iter().map(move |v| linalg::mat_vec(f, a, v)))
        .collect();
    linalg::rref(f, rows, q).rows
}

/// `{u : A_k u ∈ W for all k}`.
fn preimage<F: Field>(
    f: &F,
    slices: &[Matrix<F::Elem>],
    p: usize,
    q: usize,
    w: &[Vec<F::Elem>],
) -> Vec<Vec<F::Elem>> {
    let annihilator = linalg::kernel(f, w.to_vec(), q);
    let mut rows = Vec::new();
    for y in &annihilator {
        for a in slices {
            rows.push(
                (0..p)
                    .map(|c| (0..q).fold(f.zero(), |acc, r| f.add(&acc, &f.mul(&y[r], &a[r][c]))))
                    .collect(),
            );
        }
    }
    linalg::kernel(f, rows, p)
}

/// Runs a recipe and closes `U -> A U -> preimage(A U)`. Returns `(U, W)` in
/// the coordinates of the (possibly transposed) module when the pair is
/// unstable.
fn evaluate<F: Field>(
    f: &F,
    slices: &[Matrix<F::Elem>],
    p: usize,
    q: usize,
    recipe: &Recipe,
) -> Option<Subspaces<F::Elem>> {
    let seed: Vec<Vec<F::Elem>> = match recipe {
        Recipe::Coordinates(cols) => cols
            .iter()
            .map(|&c| {
                (0..p)
                    .map(|i| if i == c { f.one() } else { f.zero() })
                    .collect()
            })
            .collect(),
        Recipe::CommonKernel => {
            let rows = slices.iter().flatten().cloned().collect();
            linalg::kernel(f, rows, p)
        }
        Recipe::Kernels(ts) => {
            let mut gens = Vec::new();
            for t in ts {
                let comb: Matrix<F::Elem> = (0..q)
                    .map(|r| {
                        (0..p)
                            .map(|c| {
                                slices.iter().zip(t).fold(f.zero(), |acc, (a, &tk)| {
                                    f.add(&acc, &f.mul(&f.from_i64(tk), &a[r][c]))
                                })
                            })
                            .collect()
                    })
                    .collect();
                gens.extend(linalg::kernel(f, comb, p));
            }
            gens
        }
    };
    let u0 = linalg::rref(f, seed, p).rows;
    if u0.is_empty() {
        return None;
    }
    let unstable = |du: usize, dw: usize| du > 0 && q * du > p * dw;
    let w0 = image_of(f, slices, q, &u0);
    if unstable(u0.len(), w0.len()) {
        return Some((u0, w0));
    }
    let u1 = linalg::rref(f, preimage(f, slices, p, q, &w0), p).rows;
    let w1 = image_of(f, slices, q, &u1);
    if unstable(u1.len(), w1.len()) {
        return Some((u1, w1));
    }
    None
}

/// Bases of `U` and `W`.
type Subspaces<E> = (Vec<Vec<E>>, Vec<Vec<E>>);

/// Converts a witness of the transposed module into one of the module.
fn untranspose<F: Field>(
    f: &F,
    p: usize,
    q: usize,
    ut: Vec<Vec<F::Elem>>,
    wt: Vec<Vec<F::Elem>>,
) -> Subspaces<F::Elem> {
    // ut lives in the target (dim q), wt in the source (dim p)
    let u = linalg::kernel(f, wt, p);
    let w = linalg::kernel(f, ut, q);
    (u, w)
}

fn run_candidate<F: Field>(
    f: &F,
    slices: &[Matrix<F::Elem>],
    slices_t: &[Matrix<F::Elem>],
    p: usize,
    q: usize,
    c: &Candidate,
) -> Option<Subspaces<F::Elem>> {
    if c.transposed {
        let (ut, wt) = evaluate(f, slices_t, q, p, &c.recipe)?;
        Some(untranspose(f, p, q, ut, wt))
    } else {
        evaluate(f, slices, p, q, &c.recipe)
    }
}

fn transpose_all<E: Clone>(slices: &[Matrix<E>], ncols: usize) -> Vec<Matrix<E>> {
    slices.iter().map(|a| linalg::transpose(a, ncols)).collect()
}

fn deterministic_candidates(p: usize, q: usize) -> Vec<Candidate> {
    let mut out = Vec::new();
    for transposed in [false, true] {
        let n = if transposed { q } else { p };
        out.push(Candidate {
            transposed,
            recipe: Recipe::CommonKernel,
        });
        for k in (1..=n).rev() {
            for cols in subsets(n, k) {
                out.push(Candidate {
                    transposed,
                    recipe: Recipe::Coordinates(cols),
                });
            }
        }
    }
    out
}

/// Randomized search for an instability witness.
///
/// Candidates are coordinate subspaces, the common kernel, and sums of
/// kernels of random integer combinations `Σ t_k A_k`, each closed under
/// `U -> preimage(A U)`, on the module and on its transpose. The search runs
/// over `F_prime`; a hit is replayed over `Q` and returned only if it
/// verifies exactly, so a returned witness is always certified while `None`
/// is only probabilistic evidence of semistability.
pub fn instability_witness_search<R: Rng + ?Sized>(
    module: &KroneckerModule,
    trials: usize,
    rng: &mut R,
    prime: u64,
) -> Result<Option<InstabilityWitness>> {
    let fp = search_field(prime)?;
    let (p, q) = (module.p, module.q);

    // clear denominators once; scaling does not move subspaces
    let all: Vec<&Scalar> = module.entries.iter().flatten().flatten().collect();
    let scale = BigRational::from_integer(common_denominator(all.iter().copied()));
    let scaled_q: Vec<Matrix<Scalar>> = module
        .slices()
        .into_iter()
        .map(|a| {
            a.into_iter()
                .map(|r| r.into_iter().map(|x| x * &scale).collect())
                .collect()
        })
        .collect();
    let slices_p: Vec<Matrix<u64>> = scaled_q
        .iter()
        .map(|a| {
            a.iter()
                .map(|r| r.iter().map(|x| fp.reduce_int(x.numer())).collect())
                .collect()
        })
        .collect();
    let slices_pt = transpose_all(&slices_p, p);
    let slices_qt = transpose_all(&scaled_q, p);

    let certify = |c: &Candidate| -> Option<InstabilityWitness> {
        run_candidate(&fp, &slices_p, &slices_pt, p, q, c)?;
        let (u, w) = run_candidate(&Rationals, &scaled_q, &slices_qt, p, q, c)?;
        let witness = InstabilityWitness { u, w };
        verify_witness(module, &witness).then_some(witness)
    };

    if let Some(w) = deterministic_candidates(p, q).iter().find_map(certify) {
        return Ok(Some(w));
    }

    let bound = 1000i64;
    let mut random = Vec::with_capacity(trials);
    for trial in 0..trials {
        let transposed = trial % 2 == 1;
        let n = if transposed { q } else { p };
        let count = 1 + (trial / 2) % n;
        let ts = (0..count)
            .map(|_| {
                (0..module.m)
                    .map(|_| rng.gen_range(-bound..=bound))
                    .collect()
            })
            .collect();
        random.push(Candidate {
            transposed,
            recipe: Recipe::Kernels(ts),
        });
    }
    Ok(random.par_iter().find_map_first(certify))
}

/// The field of a witness search; rejects composites and primes below
/// [`MIN_PRIME`].
pub fn search_field(prime: u64) -> Result<PrimeField> {
    if prime < MIN_PRIME {
        return Err(Error::BadPrime(prime, MIN_PRIME));
    }
    PrimeField::new(prime).ok_or(Error::BadPrime(prime, MIN_PRIME))
}

/// Outcome of a semistability check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    /// Decided exactly by the minors criterion.
    SemistableCertified,
    /// No witness among the given number of random trials.
    SemistableProbabilistic { trials: usize },
    /// Exactly verified instability; the witness is absent only when the
    /// minors criterion decided without producing one.
    UnstableCertified { witness: Option<InstabilityWitness> },
}

impl Verdict {
    pub fn is_semistable(&self) -> bool {
        !matches!(self, Verdict::UnstableCertified { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::SemistableCertified => "semistable-certified",
            Verdict::SemistableProbabilistic { .. } => "semistable-probabilistic",
            Verdict::UnstableCertified { .. } => "unstable-certified",
        }
    }
}

/// Exact verdict where the minors criterion applies, randomized search
/// otherwise.
pub fn check<R: Rng + ?Sized>(
    module: &KroneckerModule,
    trials: usize,
    rng: &mut R,
    prime: u64,
) -> Result<Verdict> {
    search_field(prime)?;
    if minors_criterion_applies(module) {
        if is_semistable_minors(module)? {
            return Ok(Verdict::SemistableCertified);
        }
        let witness = instability_witness_search(module, trials, rng, prime)?;
        return Ok(Verdict::UnstableCertified { witness });
    }
    Ok(
        match instability_witness_search(module, trials, rng, prime)? {
            Some(w) => Verdict::UnstableCertified { witness: Some(w) },
            None => Verdict::SemistableProbabilistic { trials },
        },
    )
}

/// A module whose entries are independent random vectors in `[-h, h]^m`.
pub fn random_module<R: Rng + ?Sized>(
    p: usize,
    q: usize,
    m: usize,
    rng: &mut R,
    height: i64,
) -> KroneckerModule {
    let entries = (0..q)
        .map(|_| {
            (0..p)
                .map(|_| {
                    (0..m)
                        .map(|_| {
                            BigRational::from_integer(BigInt::from(rng.gen_range(-height..=height)))
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    KroneckerModule { p, q, m, entries }
}

/// A random module with the zero block of `shape` in the lower left corner
/// (rows `dim W..q`, columns `0..dim U`).
pub fn planted_module<R: Rng + ?Sized>(
    p: usize,
    q: usize,
    m: usize,
    shape: BlockShape,
    rng: &mut R,
    height: i64,
) -> KroneckerModule {
    let mut module = random_module(p, q, m, rng, height);
    for row in module.entries.iter_mut().skip(shape.dim_w) {
        for e in row.iter_mut().take(shape.dim_u) {
            e.iter_mut().for_each(|x| *x = Scalar::zero());
        }
    }
    module
}

/// A random invertible scalar matrix.
pub fn random_invertible<R: Rng + ?Sized>(n: usize, rng: &mut R, height: i64) -> Matrix<Scalar> {
    loop {
        let m: Matrix<Scalar> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        BigRational::from_integer(BigInt::from(rng.gen_range(-height..=height)))
                    })
                    .collect()
            })
            .collect();
        if !linalg::det(&Rationals, m.clone()).is_zero() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn shape_dims(v: &[BlockShape]) -> Vec<(usize, usize)> {
        v.iter().map(|s| (s.zero_rows, s.zero_cols)).collect()
    }

    #[test]
    fn square_shapes() {
        assert_eq!(
            shape_dims(&forbidden_block_shapes(3, 3)),
            vec![(3, 1), (2, 2), (1, 3)]
        );
        assert_eq!(shape_dims(&forbidden_block_shapes(1, 1)), vec![(1, 1)]);
    }

    #[test]
    fn moduli_dimensions() {
        assert_eq!(dim_n(6, 3, 3), 37);
        assert_eq!(dim_n(3, 3, 1), 0);
        assert_eq!(dim_n(3, 3, 2), 6);
        assert_eq!(dim_n(3, 2, 3), 6);
        assert_eq!(dim_n(3, 3, 4), 12);
    }

    fn linear_module(rows: &[&[(i64, i64, i64)]]) -> KroneckerModule {
        let entries: Vec<Vec<Vec<Scalar>>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&(a, b, c)| Form::linear(a, b, c).coeffs().to_vec())
                    .collect()
            })
            .collect();
        KroneckerModule::new(rows[0].len(), rows.len(), 3, entries).unwrap()
    }

    #[test]
    fn minors_verdicts() {
        let phi = linear_module(&[
            &[(0, -1, 0), (1, 0, 0), (0, 0, 0)],
            &[(0, 0, -1), (0, 0, 0), (1, 0, 0)],
        ]);
        assert!(is_semistable_minors(&phi).unwrap());
        let prop = linear_module(&[
            &[(1, 0, 0), (0, 1, 0), (0, 0, 1)],
            &[(2, 0, 0), (0, 2, 0), (0, 0, 2)],
        ]);
        assert!(!is_semistable_minors(&prop).unwrap());
        let row = linear_module(&[&[(1, 0, 0), (0, 1, 0), (0, 0, 1)]]);
        assert!(is_semistable_minors(&row).unwrap());
        let dep = linear_module(&[&[(1, 0, 0), (0, 1, 0), (1, 1, 0)]]);
        assert!(!is_semistable_minors(&dep).unwrap());
    }

    #[test]
    fn zero_first_row_is_found() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let shape = BlockShape {
            dim_u: 3,
            dim_w: 2,
            zero_rows: 1,
            zero_cols: 3,
        };
        let m = planted_module(3, 3, 6, shape, &mut rng, 5);
        let w = instability_witness_search(&m, 100, &mut rng, DEFAULT_PRIME)
            .unwrap()
            .unwrap();
        assert!(verify_witness(&m, &w));
    }

    #[test]
    fn bad_witness_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let m = random_module(3, 3, 6, &mut rng, 5);
        let w = InstabilityWitness {
            u: vec![vec![Scalar::one(), Scalar::zero(), Scalar::zero()]],
            w: vec![],
        };
        assert!(!verify_witness(&m, &w));
    }

    #[test]
    fn small_prime_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let m = random_module(3, 3, 6, &mut rng, 5);
        assert!(matches!(
            instability_witness_search(&m, 1, &mut rng, 101),
            Err(Error::BadPrime(101, _))
        ));
    }
}
