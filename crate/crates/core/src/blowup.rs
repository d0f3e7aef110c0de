//! The blow-down maps `δ`, which remove the scalar entry `c` of a
//! resolution by a Schur complement.
//!
//! * variant 10: `c φ21 - φ22 φ11` from the shape of `X1` to that of `X0`;
//! * variant 7: `c [[f1, q], [p, f2]] - [l2; q2] [q1, l1]` from the shape of
//!   `X5` to that of `X4`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::cohomology::{cohomology_table, CohomologyTable};
use crate::error::{Error, Result};
use crate::forms::{Form, Scalar};
use crate::gradedmat::{compose, maximal_minors, Presentation};
use crate::kronecker::KroneckerModule;
use crate::strata::StratumId;

/// `det δ(P) = SIGN · c^EXPONENT · det P` for variant 10.
pub const DELTA10_SIGN: i32 = -1;
pub const DELTA10_EXPONENT: u32 = 2;
/// `det δ(P) = SIGN · c^EXPONENT · det P` for variant 7.
pub const DELTA7_SIGN: i32 = 1;
pub const DELTA7_EXPONENT: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    Seven,
    Ten,
}

impl Variant {
    pub fn number(self) -> u32 {
        match self {
            Variant::Seven => 7,
            Variant::Ten => 10,
        }
    }

    /// Stratum whose twists the input has.
    pub fn input_shape(self) -> StratumId {
        match self {
            Variant::Seven => StratumId::X5,
            Variant::Ten => StratumId::X1,
        }
    }

    /// Stratum whose twists the image has.
    pub fn output_shape(self) -> StratumId {
        match self {
            Variant::Seven => StratumId::X4,
            Variant::Ten => StratumId::X0,
        }
    }

    /// `(sign, exponent)` of the determinant identity.
    pub fn determinant_law(self) -> (i32, u32) {
        match self {
            Variant::Seven => (DELTA7_SIGN, DELTA7_EXPONENT),
            Variant::Ten => (DELTA10_SIGN, DELTA10_EXPONENT),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "7" => Ok(Variant::Seven),
            "10" => Ok(Variant::Ten),
            other => Err(Error::Parse(format!(
                "unknown blow-down variant '{other}', expected 7 or 10"
            ))),
        }
    }
}

/// `φ11` (1×3 linear), `c`, `φ21` (3×3 quadrics), `φ22` (3×1 linear).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowdownInput10 {
    pub phi11: Presentation,
    pub c: Scalar,
    pub phi21: Presentation,
    pub phi22: Presentation,
}

impl BlowdownInput10 {
    pub fn from_presentation(p: &Presentation) -> Result<Self> {
        require_shape(p, StratumId::X1)?;
        Ok(BlowdownInput10 {
            phi11: p.block(0..1, 0..3),
            c: p.entry(0, 3).coeffs()[0].clone(),
            phi21: p.block(1..4, 0..3),
            phi22: p.block(1..4, 3..4),
        })
    }
}

/// The matrix `[[q1, l1, c], [f1, q, l2], [p, f2, q2]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowdownInput7 {
    pub q1: Form,
    pub l1: Form,
    pub c: Scalar,
    pub f1: Form,
    pub q: Form,
    pub l2: Form,
    pub p: Form,
    pub f2: Form,
    pub q2: Form,
}

impl BlowdownInput7 {
    pub fn from_presentation(m: &Presentation) -> Result<Self> {
        require_shape(m, StratumId::X5)?;
        let e = |r, c| m.entry(r, c).clone();
        Ok(BlowdownInput7 {
            q1: e(0, 0),
            l1: e(0, 1),
            c: m.entry(0, 2).coeffs()[0].clone(),
            f1: e(1, 0),
            q: e(1, 1),
            l2: e(1, 2),
            p: e(2, 0),
            f2: e(2, 1),
            q2: e(2, 2),
        })
    }
}

fn require_shape(p: &Presentation, s: StratumId) -> Result<()> {
    if s.matches_shape(p) {
        Ok(())
    } else {
        Err(Error::TwistMismatch(format!(
            "expected {:?} -> {:?}, got {:?} -> {:?}",
            s.source_twists(),
            s.target_twists(),
            p.source(),
            p.target()
        )))
    }
}

/// `c φ21 - φ22 φ11`, a `3 x 3` matrix of quadrics.
pub fn delta10(input: &BlowdownInput10) -> Result<Presentation> {
    let product = compose(&input.phi22, &input.phi11)?;
    input
        .phi21
        .scale(&input.c)
        .add(&product.scale(&-Scalar::one()))
}

/// [`delta10`] as a Kronecker module over `S²V*`.
pub fn delta10_module(input: &BlowdownInput10) -> Result<KroneckerModule> {
    KroneckerModule::from_presentation(&delta10(input)?)
}

/// `c [[f1, q], [p, f2]] - [l2; q2] [q1, l1]` from `O(-3) ⊕ O(-2)` to
/// `O ⊕ O(1)`.
pub fn delta7(input: &BlowdownInput7) -> Result<Presentation> {
    let c = &input.c;
    let entry = |inner: &Form, left: &Form, right: &Form| inner.scale(c).sub(&left.mul(right));
    Presentation::new(
        vec![-3, -2],
        vec![0, 1],
        vec![
            vec![
                entry(&input.f1, &input.l2, &input.q1)?,
                entry(&input.q, &input.l2, &input.l1)?,
            ],
            vec![
                entry(&input.p, &input.q2, &input.q1)?,
                entry(&input.f2, &input.q2, &input.l1)?,
            ],
        ],
    )
}

/// `δ(P)` together with the scalar `c` read off `P`.
pub fn blowdown(p: &Presentation, variant: Variant) -> Result<(Presentation, Scalar)> {
    match variant {
        Variant::Ten => {
            let input = BlowdownInput10::from_presentation(p)?;
            Ok((delta10(&input)?, input.c))
        }
        Variant::Seven => {
            let input = BlowdownInput7::from_presentation(p)?;
            Ok((delta7(&input)?, input.c))
        }
    }
}

/// Whether every `2 x 2` minor of `p` vanishes identically.
pub fn all_2x2_minors_vanish(p: &Presentation) -> bool {
    let (r, c) = (p.nrows(), p.ncols());
    for rows in crate::gradedmat::subsets(r, 2) {
        for cols in crate::gradedmat::subsets(c, 2) {
            if maximal_minors(&p.select(&rows, &cols))
                .iter()
                .any(|m| !m.is_zero())
            {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub variant: Variant,
    pub source_table: CohomologyTable,
    pub image_table: CohomologyTable,
    pub consistent: bool,
}

/// Compares the cohomology tables of `coker P` and `coker δ(P)`; `c` must be
/// nonzero.
pub fn fiber_consistency(p: &Presentation, variant: Variant) -> Result<FiberReport> {
    let (image, c) = blowdown(p, variant)?;
    if c.is_zero() {
        return Err(Error::Precondition("the scalar entry c is zero".into()));
    }
    let source_table = cohomology_table(p)?;
    let image_table = cohomology_table(&image)?;
    Ok(FiberReport {
        variant,
        source_table,
        image_table,
        consistent: source_table == image_table,
    })
}

/// `sign · c^exponent`.
pub fn determinant_factor(variant: Variant, c: &Scalar) -> Scalar {
    let (sign, exp) = variant.determinant_law();
    let pow = (0..exp).fold(Scalar::one(), |acc, _| acc * c);
    if sign < 0 {
        -pow
    } else {
        pow
    }
}
