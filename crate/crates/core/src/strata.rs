//! The nine strata of `M(6,3)`: classification by cohomology triple,
//! verification of the normal-form conditions, samplers and the
//! codimension audit.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::builders::{self, PointSet, RETRY_BUDGET};
use crate::cohomology::{cohomology_table, hilbert_polynomial, is_injective, CohomologyTable};
use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::forms::{int, space_dim, span_dimension, Form, Scalar};
use crate::gradedmat::{dualize, sigma_membership, Presentation};
use crate::kronecker::{self, dim_n, KroneckerModule, Verdict};
use crate::linalg::{self, Matrix};

pub const DEFAULT_HEIGHT: i64 = 5;
/// `dim N(6,3,3)`, the dimension of the moduli space.
pub const AMBIENT_DIM: i64 = 37;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StratumId {
    X0,
    X1,
    X2,
    X3,
    X3D,
    X4,
    X5,
    X6,
    X7,
}

impl StratumId {
    pub const ALL: [StratumId; 9] = [
        StratumId::X0,
        StratumId::X1,
        StratumId::X2,
        StratumId::X3,
        StratumId::X3D,
        StratumId::X4,
        StratumId::X5,
        StratumId::X6,
        StratumId::X7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StratumId::X0 => "X0",
            StratumId::X1 => "X1",
            StratumId::X2 => "X2",
            StratumId::X3 => "X3",
            StratumId::X3D => "X3D",
            StratumId::X4 => "X4",
            StratumId::X5 => "X5",
            StratumId::X6 => "X6",
            StratumId::X7 => "X7",
        }
    }

    pub fn source_twists(self) -> &'static [i32] {
        match self {
            StratumId::X0 => &[-2, -2, -2],
            StratumId::X1 => &[-2, -2, -2, -1],
            StratumId::X2 => &[-2, -2, -2, -1, -1],
            StratumId::X3 => &[-3, -1, -1, -1],
            StratumId::X3D => &[-2, -2, -2, -2],
            StratumId::X4 => &[-3, -2],
            StratumId::X5 => &[-3, -2, -1],
            StratumId::X6 => &[-3, -3, 0],
            StratumId::X7 => &[-4],
        }
    }

    pub fn target_twists(self) -> &'static [i32] {
        match self {
            StratumId::X0 => &[0, 0, 0],
            StratumId::X1 => &[-1, 0, 0, 0],
            StratumId::X2 => &[-1, -1, 0, 0, 0],
            StratumId::X3 => &[0, 0, 0, 0],
            StratumId::X3D => &[-1, -1, -1, 1],
            StratumId::X4 => &[0, 1],
            StratumId::X5 => &[-1, 0, 1],
            StratumId::X6 => &[-2, 1, 1],
            StratumId::X7 => &[2],
        }
    }

    /// `(h⁰(F(-1)), h¹(F), h⁰(F ⊗ Ω¹(1)))` on the stratum.
    pub fn triple(self) -> CohomologyTable {
        let (a, b, c) = match self {
            StratumId::X0 => (0, 0, 0),
            StratumId::X1 => (0, 0, 1),
            StratumId::X2 => (0, 0, 2),
            StratumId::X3 => (0, 1, 3),
            StratumId::X3D => (1, 0, 3),
            StratumId::X4 => (1, 1, 3),
            StratumId::X5 => (1, 1, 4),
            StratumId::X6 => (2, 2, 6),
            StratumId::X7 => (3, 3, 8),
        };
        CohomologyTable::new(a, b, c)
    }

    pub fn codim(self) -> i64 {
        match self {
            StratumId::X0 => 0,
            StratumId::X1 => 1,
            StratumId::X2 | StratumId::X3 | StratumId::X3D => 4,
            StratumId::X4 => 5,
            StratumId::X5 => 6,
            StratumId::X6 => 8,
            StratumId::X7 => 10,
        }
    }

    /// Image under the duality automorphism.
    pub fn dual(self) -> StratumId {
        match self {
            StratumId::X3 => StratumId::X3D,
            StratumId::X3D => StratumId::X3,
            s => s,
        }
    }

    pub fn from_triple(t: CohomologyTable) -> Option<StratumId> {
        StratumId::ALL.into_iter().find(|s| s.triple() == t)
    }

    /// Whether `p` has this stratum's twist vectors.
    pub fn matches_shape(self, p: &Presentation) -> bool {
        p.source() == self.source_twists() && p.target() == self.target_twists()
    }
}

impl fmt::Display for StratumId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StratumId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        StratumId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(t))
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown stratum '{t}', expected one of X0..X7 or X3D"
                ))
            })
    }
}

/// The stratum whose triple is that of `coker(p)`.
pub fn classify(p: &Presentation) -> Result<StratumId> {
    let t = cohomology_table(p)?;
    StratumId::from_triple(t).ok_or(Error::NoStratumMatch(t.h0_minus1, t.h1_0, t.h0_omega))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckVerdict {
    Pass,
    Fail,
    ProbabilisticPass,
}

impl CheckVerdict {
    pub fn label(self) -> &'static str {
        match self {
            CheckVerdict::Pass => "pass",
            CheckVerdict::Fail => "fail",
            CheckVerdict::ProbabilisticPass => "probabilistic-pass",
        }
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            CheckVerdict::Pass
        } else {
            CheckVerdict::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WCheck {
    pub name: String,
    pub verdict: CheckVerdict,
}

impl WCheck {
    fn new(name: &str, verdict: CheckVerdict) -> Self {
        WCheck {
            name: name.to_string(),
            verdict,
        }
    }
}

/// Overall outcome of the normal-form conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WStatus {
    Pass,
    ProbabilisticPass,
    Fail,
    /// The twists are not those of the stratum, so nothing was checked.
    Unverified,
}

impl WStatus {
    pub fn label(self) -> &'static str {
        match self {
            WStatus::Pass => "pass",
            WStatus::ProbabilisticPass => "probabilistic-pass",
            WStatus::Fail => "fail",
            WStatus::Unverified => "unverified",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumReport {
    pub stratum: StratumId,
    pub triple: CohomologyTable,
    pub w_checks: Vec<WCheck>,
    pub hilbert: (i64, i64),
    /// The matrix has the syntactic pattern of a properly semistable class.
    pub possibly_properly_semistable: bool,
    pub notes: Vec<String>,
}

impl StratumReport {
    pub fn status(&self) -> WStatus {
        if self.w_checks.is_empty() {
            WStatus::Unverified
        } else if self
            .w_checks
            .iter()
            .any(|c| c.verdict == CheckVerdict::Fail)
        {
            WStatus::Fail
        } else if self
            .w_checks
            .iter()
            .any(|c| c.verdict == CheckVerdict::ProbabilisticPass)
        {
            WStatus::ProbabilisticPass
        } else {
            WStatus::Pass
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self.status(), WStatus::Pass | WStatus::ProbabilisticPass)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.w_checks
            .iter()
            .filter(|c| c.verdict == CheckVerdict::Fail)
            .map(|c| c.name.as_str())
            .collect()
    }
}

/// Parameters of the randomized Kronecker checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub trials: usize,
    pub prime: u64,
    pub seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            trials: kronecker::DEFAULT_TRIALS,
            prime: kronecker::DEFAULT_PRIME,
            seed: 0,
        }
    }
}

pub fn verify_w(p: &Presentation, s: StratumId) -> Result<StratumReport> {
    verify_w_with(p, s, &CheckOptions::default())
}

/// Checks the conditions defining the open set of matrices for `s`.
///
/// When every check passes with certainty, the triple must be that of `s`;
/// otherwise [`Error::Internal`] is returned.
pub fn verify_w_with(p: &Presentation, s: StratumId, opts: &CheckOptions) -> Result<StratumReport> {
    kronecker::search_field(opts.prime)?;
    if !s.matches_shape(p) {
        return Err(Error::TwistMismatch(format!(
            "{s} expects {:?} -> {:?}, got {:?} -> {:?}",
            s.source_twists(),
            s.target_twists(),
            p.source(),
            p.target()
        )));
    }
    let hilbert = hilbert_polynomial(p)?;
    let triple = cohomology_table(p)?;
    let (w_checks, flag, notes) = w_conditions(p, s, opts)?;
    let report = StratumReport {
        stratum: s,
        triple,
        w_checks,
        hilbert,
        possibly_properly_semistable: flag,
        notes,
    };
    if report.status() == WStatus::Pass && triple != s.triple() {
        return Err(Error::Internal(format!(
            "all conditions for {s} hold but the triple is {triple}"
        )));
    }
    Ok(report)
}

/// Classifies by triple and, when the twists are those of the stratum,
/// attaches the verified conditions.
pub fn classify_with_report(p: &Presentation, opts: &CheckOptions) -> Result<StratumReport> {
    kronecker::search_field(opts.prime)?;
    let s = classify(p)?;
    if s.matches_shape(p) {
        return verify_w_with(p, s, opts);
    }
    let mut notes = vec![format!(
        "twists {:?} -> {:?} are not those of {s}; conditions not checked",
        p.source(),
        p.target()
    )];
    if let Some(t) = StratumId::ALL.into_iter().find(|t| t.matches_shape(p)) {
        notes.push(format!("the twists are those of {t}"));
    }
    Ok(StratumReport {
        stratum: s,
        triple: s.triple(),
        w_checks: Vec::new(),
        hilbert: hilbert_polynomial(p)?,
        possibly_properly_semistable: false,
        notes,
    })
}

type Conditions = (Vec<WCheck>, bool, Vec<String>);

fn w_conditions(p: &Presentation, s: StratumId, opts: &CheckOptions) -> Result<Conditions> {
    let mut checks = vec![WCheck::new(
        "injective",
        CheckVerdict::from_bool(is_injective(p)),
    )];
    let mut flag = false;
    let mut notes = Vec::new();
    let check = |name: &str, ok: bool| WCheck::new(name, CheckVerdict::from_bool(ok));
    match s {
        StratumId::X0 | StratumId::X7 => {}
        StratumId::X1 => {
            let phi11 = p.block(0..1, 0..3);
            let phi22 = p.block(1..4, 3..4);
            let phi21 = p.block(1..4, 0..3);
            let span11 = span_dimension(&phi11.forms().cloned().collect::<Vec<_>>())?;
            let span22 = span_dimension(&phi22.forms().cloned().collect::<Vec<_>>())?;
            let sigma = sigma_membership(&phi21, &phi11, &phi22)?.is_none();
            checks.push(check("phi12=0", p.entry(0, 3).is_zero()));
            checks.push(check("span(phi11)>=2", span11 >= 2));
            checks.push(check("span(phi22)>=2", span22 >= 2));
            checks.push(check("sigma-exclusion", sigma));
            let shape1 = span11 <= 1;
            let shape3 = span22 <= 1;
            let shape2 = x1_middle_shape(&phi11, &phi21, &phi22, opts.seed);
            checks.push(check("no-zero-block-1x3", !shape1));
            checks.push(WCheck::new(
                "no-zero-block-2x2",
                match shape2 {
                    Some(true) => CheckVerdict::Fail,
                    Some(false) => CheckVerdict::Pass,
                    None => CheckVerdict::ProbabilisticPass,
                },
            ));
            checks.push(check("no-zero-block-3x1", !shape3));
            let by_span = span11 >= 2 && span22 >= 2 && sigma;
            let by_shape = !shape1 && !shape3 && shape2 != Some(true);
            if by_span != by_shape {
                notes.push(format!(
                    "span/sigma conditions {} but block-shape conditions {}",
                    if by_span { "hold" } else { "fail" },
                    if by_shape { "hold" } else { "fail" }
                ));
            }
        }
        StratumId::X2 => {
            checks.push(check("phi12=0", p.block(0..2, 3..5).is_zero()));
            for (name, block) in [
                ("phi11-semistable", p.block(0..2, 0..3)),
                ("phi22-semistable", p.block(2..5, 3..5)),
            ] {
                let ok =
                    kronecker::is_semistable_minors(&KroneckerModule::from_presentation(&block)?)?;
                checks.push(check(name, ok));
            }
        }
        StratumId::X3 | StratumId::X3D => {
            let (name, block) = if s == StratumId::X3 {
                ("phi12-semistable", p.block(0..4, 1..4))
            } else {
                ("phi11-semistable", p.block(0..3, 0..4))
            };
            let module = KroneckerModule::from_presentation(&block)?;
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let verdict = kronecker::check(&module, opts.trials, &mut rng, opts.prime)?;
            checks.push(WCheck::new(
                name,
                match verdict {
                    Verdict::SemistableCertified => CheckVerdict::Pass,
                    Verdict::SemistableProbabilistic { .. } => CheckVerdict::ProbabilisticPass,
                    Verdict::UnstableCertified { .. } => CheckVerdict::Fail,
                },
            ));
            let grid: Vec<Vec<Form>> = block.entries().to_vec();
            flag = if s == StratumId::X3 {
                has_linear_syzygy(&transpose_grid(&grid))
            } else {
                has_linear_syzygy(&grid)
            };
            if flag {
                notes
                    .push("linear syzygy in the linear block: possibly properly semistable".into());
            }
        }
        StratumId::X4 => {
            let phi12 = p.entry(0, 1);
            checks.push(check("phi12!=0", !phi12.is_zero()));
            let nz = !phi12.is_zero();
            checks.push(check(
                "phi12-not-dividing-phi11",
                nz && p.entry(0, 0).divide_exact(phi12).is_none(),
            ));
            checks.push(check(
                "phi12-not-dividing-phi22",
                nz && p.entry(1, 1).divide_exact(phi12).is_none(),
            ));
        }
        StratumId::X5 => {
            let (q1, l1, l2, q2) = (p.entry(0, 0), p.entry(0, 1), p.entry(1, 2), p.entry(2, 2));
            checks.push(check("phi13=0", p.entry(0, 2).is_zero()));
            checks.push(check("l1!=0", !l1.is_zero()));
            checks.push(check("l2!=0", !l2.is_zero()));
            checks.push(check(
                "l1-not-dividing-q1",
                !l1.is_zero() && q1.divide_exact(l1).is_none(),
            ));
            checks.push(check(
                "l2-not-dividing-q2",
                !l2.is_zero() && q2.divide_exact(l2).is_none(),
            ));
        }
        StratumId::X6 => {
            let phi11 = p.block(0..1, 0..2);
            let phi22 = p.block(1..3, 2..3);
            let phi21 = p.block(1..3, 0..2);
            let indep = |b: &Presentation| -> Result<bool> {
                Ok(span_dimension(&b.forms().cloned().collect::<Vec<_>>())? == 2)
            };
            checks.push(check("phi11-independent", indep(&phi11)?));
            checks.push(check("phi22-independent", indep(&phi22)?));
            checks.push(check(
                "sigma-exclusion",
                sigma_membership(&phi21, &phi11, &phi22)?.is_none(),
            ));
        }
    }
    Ok((checks, flag, notes))
}

/// Whether the `X1` matrix can be brought to the form with a zero `2 x 2`
/// block in rows `1, 2` and columns `3, 4`: that happens exactly when there
/// are nonzero scalar vectors with `φ11 s = 0`, `r φ22 = 0` and
/// `r φ21 s = 0`. `None` when both relation spaces have dimension at least
/// two and a bounded random search finds nothing.
fn x1_middle_shape(
    phi11: &Presentation,
    phi21: &Presentation,
    phi22: &Presentation,
    seed: u64,
) -> Option<bool> {
    let rel = |forms: Vec<Form>| -> Vec<Vec<Scalar>> {
        let cols: Matrix<Scalar> = forms.iter().map(|f| f.coeffs().to_vec()).collect();
        linalg::kernel(&Rationals, linalg::transpose(&cols, 3), forms.len())
    };
    let s_space = rel(phi11.forms().cloned().collect());
    let r_space = rel(phi22.forms().cloned().collect());
    if s_space.is_empty() || r_space.is_empty() {
        return Some(false);
    }
    // the quadric-valued pairing r φ21 s as a matrix in r for fixed s
    let pairing = |s: &[Scalar]| -> Matrix<Scalar> {
        let columns: Vec<Vec<Scalar>> = r_space
            .iter()
            .map(|r| {
                let mut acc = Form::zero(2);
                for (j, rj) in r.iter().enumerate() {
                    for (i, si) in s.iter().enumerate() {
                        let t = phi21.entry(j, i).scale(&(rj * si));
                        acc = acc.add(&t).expect("quadrics");
                    }
                }
                acc.coeffs().to_vec()
            })
            .collect();
        linalg::transpose(&columns, space_dim(2))
    };
    let degenerate =
        |s: &[Scalar]| linalg::rank_rational(&pairing(s), r_space.len()) < r_space.len();
    if s_space.len() == 1 {
        return Some(degenerate(&s_space[0]));
    }
    if r_space.len() == 1 {
        // symmetric: fix r and look at s
        let r = &r_space[0];
        let columns: Vec<Vec<Scalar>> = s_space
            .iter()
            .map(|s| {
                let mut acc = Form::zero(2);
                for (j, rj) in r.iter().enumerate() {
                    for (i, si) in s.iter().enumerate() {
                        acc = acc
                            .add(&phi21.entry(j, i).scale(&(rj * si)))
                            .expect("quadrics");
                    }
                }
                acc.coeffs().to_vec()
            })
            .collect();
        let m = linalg::transpose(&columns, space_dim(2));
        return Some(linalg::rank_rational(&m, s_space.len()) < s_space.len());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_BUDGET {
        let s: Vec<Scalar> = (0..3)
            .map(|i| {
                s_space
                    .iter()
                    .map(|b| &b[i] * int(rng.gen_range(-100..=100)))
                    .fold(Scalar::zero(), |a, x| a + x)
            })
            .collect();
        if !linalg::is_zero_vector(&s) && degenerate(&s) {
            return Some(true);
        }
    }
    None
}

fn transpose_grid(g: &[Vec<Form>]) -> Vec<Vec<Form>> {
    let ncols = g.first().map_or(0, Vec::len);
    (0..ncols)
        .map(|c| g.iter().map(|r| r[c].clone()).collect())
        .collect()
}

/// Whether a column of linear forms `v ≠ 0` with `M v = 0` exists, for `M`
/// with entries of one degree.
fn has_linear_syzygy(m: &[Vec<Form>]) -> bool {
    let Some(d) = m.first().and_then(|r| r.first()).map(Form::degree) else {
        return false;
    };
    let ncols = m[0].len();
    let vars = [Form::x(), Form::y(), Form::z()];
    let out = space_dim(d + 1);
    let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(3 * ncols);
    for i in 0..ncols {
        for v in &vars {
            cols.push(
                m.iter()
                    .flat_map(|row| row[i].mul(v).coeffs().to_vec())
                    .collect(),
            );
        }
    }
    let neq = m.len() * out;
    linalg::rank_rational(&linalg::transpose(&cols, neq), 3 * ncols) < 3 * ncols
}

pub fn sample<R: Rng + ?Sized>(s: StratumId, rng: &mut R, height: i64) -> Result<Presentation> {
    sample_with(s, rng, height, &CheckOptions::default())
}

/// A random presentation of stratum `s`, resampled until its conditions
/// pass; at most [`RETRY_BUDGET`] attempts.
pub fn sample_with<R: Rng + ?Sized>(
    s: StratumId,
    rng: &mut R,
    height: i64,
    opts: &CheckOptions,
) -> Result<Presentation> {
    for _ in 0..RETRY_BUDGET {
        let Some(p) = candidate(s, rng, height, opts)? else {
            continue;
        };
        if !is_injective(&p) {
            continue;
        }
        if verify_w_with(&p, s, opts)?.passed() {
            return Ok(p);
        }
    }
    Err(Error::RetriesExhausted(RETRY_BUDGET))
}

fn random_point<R: Rng + ?Sized>(rng: &mut R, height: i64) -> [Scalar; 3] {
    loop {
        let p = [0; 3].map(|_| int(rng.gen_range(-height..=height)));
        if p.iter().any(|x| !x.is_zero()) {
            return p;
        }
    }
}

/// One attempt; `None` when a random precondition failed.
fn candidate<R: Rng + ?Sized>(
    s: StratumId,
    rng: &mut R,
    height: i64,
    opts: &CheckOptions,
) -> Result<Option<Presentation>> {
    let src = s.source_twists().to_vec();
    let tgt = s.target_twists().to_vec();
    let soft = |r: Result<Presentation>| match r {
        Ok(p) => Ok(Some(p)),
        Err(Error::Precondition(_)) | Err(Error::RetriesExhausted(_)) => Ok(None),
        Err(e) => Err(e),
    };
    Ok(match s {
        StratumId::X0 | StratumId::X4 => Some(Presentation::random(src, tgt, rng, height)),
        StratumId::X1 => {
            Some(Presentation::random(src, tgt, rng, height).with_entry(0, 3, Form::zero(0))?)
        }
        StratumId::X2 => {
            let mut p = Presentation::random(src, tgt, rng, height);
            for r in 0..2 {
                for c in 3..5 {
                    p = p.with_entry(r, c, Form::zero(0))?;
                }
            }
            Some(p)
        }
        StratumId::X3 => {
            let z = PointSet::random(6, rng, height);
            if z.on_conic() {
                return Ok(None);
            }
            let g = builders::ideal_generators(&z, 3);
            let mut f = Form::zero(6);
            for gj in &g {
                f = f.add(&gj.mul(&Form::random(3, rng, height)))?;
            }
            soft(builders::twisted_ideal_sheaf(&z, &f))?
        }
        StratumId::X3D => {
            let p = sample_with(StratumId::X3, rng, height, opts)?;
            Some(dualize(&p, 1))
        }
        StratumId::X5 => {
            let (q1, l1) = (Form::random(2, rng, height), Form::random(1, rng, height));
            let (q2, l2) = (Form::random(2, rng, height), Form::random(1, rng, height));
            soft(builders::x5_normal_form(
                &q1, &l1, &q2, &l2, None, rng, height,
            ))?
        }
        StratumId::X6 => {
            let (p1, p2) = (random_point(rng, height), random_point(rng, height));
            soft(builders::x6_normal_form(&p1, &p2, None, rng, height))?
        }
        StratumId::X7 => soft(builders::sextic_sheaf(&Form::random(6, rng, height)))?,
    })
}

/// `count` samples, the `i`-th drawn from ChaCha8 stream `i` of `seed`.
/// Runs in parallel; the result does not depend on scheduling.
pub fn sample_batch(
    s: StratumId,
    count: usize,
    seed: u64,
    height: i64,
) -> Result<Vec<Presentation>> {
    (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            sample(s, &mut rng, height)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub stratum: StratumId,
    pub formula: &'static str,
    pub dimension: i64,
    pub expected_codim: i64,
    pub pass: bool,
}

/// Dimension of each stratum from its bundle description, against
/// the ambient dimension 37.
pub fn codim_audit() -> Vec<AuditRow> {
    StratumId::ALL
        .into_iter()
        .map(|s| {
            let (formula, dimension) = match s {
                StratumId::X0 => ("dim N(6,3,3)", dim_n(6, 3, 3)),
                StratumId::X1 => ("dim P^36", 36),
                StratumId::X2 => (
                    "dim N(3,3,2) + dim N(3,2,3) + 21",
                    dim_n(3, 3, 2) + dim_n(3, 2, 3) + 21,
                ),
                StratumId::X3 | StratumId::X3D => ("dim N(3,3,4) + 21", dim_n(3, 3, 4) + 21),
                StratumId::X4 => ("21 + 6 + 5", 21 + 6 + 5),
                StratumId::X5 => ("dim Hilb2 + dim Hilb2 + 23", 4 + 4 + 23),
                StratumId::X6 => ("2 + 2 + 25", 2 + 2 + 25),
                StratumId::X7 => ("dim P(S^6 V*)", space_dim(6) as i64 - 1),
            };
            AuditRow {
                stratum: s,
                formula,
                dimension,
                expected_codim: s.codim(),
                pass: AMBIENT_DIM - dimension == s.codim(),
            }
        })
        .collect()
}
