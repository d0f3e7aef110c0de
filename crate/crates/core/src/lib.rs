//! Exact computations with one-dimensional sheaves on the projective plane.
//!
//! A sheaf is given by an injective graded matrix of homogeneous forms in
//! `X, Y, Z` (its free resolution). From that matrix the crate computes the
//! cohomology groups by linear algebra on monomial bases, classifies sheaves
//! with Hilbert polynomial `6m + 3` into the nine strata of their moduli
//! space, tests Kronecker-module semistability, and evaluates the two
//! blow-down maps that relate the moduli space to Kronecker moduli.
//!
//! Everything is exact: coefficients live in `Q` (arbitrary precision) and a
//! prime field is used only for randomized searches whose results are
//! re-checked over `Q`.

pub mod blowup;
pub mod builders;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod field;
pub mod forms;
pub mod gradedmat;
pub mod io;
pub mod kronecker;
pub mod linalg;
pub mod strata;

pub use error::{Error, Result};
pub use forms::{Form, Monomial, Scalar};
pub use gradedmat::{GradedAutomorphism, Presentation};
pub use strata::StratumId;
