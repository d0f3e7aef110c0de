//! C interface to `sheaf-strata`.
//!
//! Presentations cross the boundary as opaque [`SsPresentation`] handles.
//! Every fallible function returns an [`SsStatus`] and writes its result
//! through an out pointer; on failure the message is available from
//! [`ss_last_error_message`] on the same thread. Strings returned by the
//! library are released with [`ss_string_free`], handles with
//! [`ss_presentation_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sheaf_strata::cohomology::{cohomology_table, h0, h1};
use sheaf_strata::gradedmat::dualize;
use sheaf_strata::io::{presentation_from_json, presentation_to_json};
use sheaf_strata::strata::{classify, classify_with_report, sample, CheckOptions};
use sheaf_strata::{Error, Presentation, StratumId};

/// Opaque handle to a presentation.
pub struct SsPresentation(Presentation);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SsStatus {
    Ok = 0,
    NullArgument,
    InvalidUtf8,
    Panic,
    DegreeMismatch,
    TwistMismatch,
    ShapeMismatch,
    InvalidPresentation,
    NotSquare,
    NotInjective,
    WrongHilbertPolynomial,
    NonLinearHilbert,
    NoStratumMatch,
    NotInvertible,
    Parse,
    Precondition,
    RetriesExhausted,
    BadPrime,
    Internal,
    Io,
    UnknownStratum,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SsStratum {
    X0 = 0,
    X1,
    X2,
    X3,
    X3D,
    X4,
    X5,
    X6,
    X7,
}

/// `(h0(F(-1)), h1(F), h0(F ⊗ Ω¹(1)))`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SsCohomologyTable {
    pub h0_minus1: usize,
    pub h1_0: usize,
    pub h0_omega: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SsStatus {
    match e {
        Error::DegreeMismatch(..) => SsStatus::DegreeMismatch,
        Error::TwistMismatch(_) => SsStatus::TwistMismatch,
        Error::ShapeMismatch(_) => SsStatus::ShapeMismatch,
        Error::InvalidPresentation(_) => SsStatus::InvalidPresentation,
        Error::NotSquare => SsStatus::NotSquare,
        Error::NotInjective => SsStatus::NotInjective,
        Error::WrongHilbertPolynomial(..) => SsStatus::WrongHilbertPolynomial,
        Error::NonLinearHilbert => SsStatus::NonLinearHilbert,
        Error::NoStratumMatch(..) => SsStatus::NoStratumMatch,
        Error::NotInvertible => SsStatus::NotInvertible,
        Error::Parse(_) => SsStatus::Parse,
        Error::Precondition(_) => SsStatus::Precondition,
        Error::RetriesExhausted(_) => SsStatus::RetriesExhausted,
        Error::BadPrime(..) => SsStatus::BadPrime,
        Error::Internal(_) => SsStatus::Internal,
        Error::Io(_) => SsStatus::Io,
    }
}

struct Failure(SsStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(SsStatus::NullArgument, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            SsStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside sheaf-strata");
            SsStatus::Panic
        }
    }
}

unsafe fn handle<'a>(p: *const SsPresentation) -> Result<&'a Presentation, Failure> {
    p.as_ref().map(|h| &h.0).ok_or_else(|| null("presentation"))
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null("output pointer"))
}

fn boxed(p: Presentation) -> *mut SsPresentation {
    Box::into_raw(Box::new(SsPresentation(p)))
}

fn c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(SsStatus::Internal, "string contains a NUL byte".into()))
}

impl From<StratumId> for SsStratum {
    fn from(s: StratumId) -> Self {
        match s {
            StratumId::X0 => SsStratum::X0,
            StratumId::X1 => SsStratum::X1,
            StratumId::X2 => SsStratum::X2,
            StratumId::X3 => SsStratum::X3,
            StratumId::X3D => SsStratum::X3D,
            StratumId::X4 => SsStratum::X4,
            StratumId::X5 => SsStratum::X5,
            StratumId::X6 => SsStratum::X6,
            StratumId::X7 => SsStratum::X7,
        }
    }
}

impl From<SsStratum> for StratumId {
    fn from(s: SsStratum) -> Self {
        StratumId::ALL[s as usize]
    }
}

fn stratum_from_raw(raw: i32) -> Result<StratumId, Failure> {
    usize::try_from(raw)
        .ok()
        .and_then(|i| StratumId::ALL.get(i).copied())
        .ok_or_else(|| {
            Failure(
                SsStatus::UnknownStratum,
                format!("no stratum with index {raw}"),
            )
        })
}

/// Message of the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into the library.
#[no_mangle]
pub extern "C" fn ss_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

const STATUS_NAMES: [&CStr; 21] = [
    c"ok",
    c"null-argument",
    c"invalid-utf8",
    c"panic",
    c"degree-mismatch",
    c"twist-mismatch",
    c"shape-mismatch",
    c"invalid-presentation",
    c"not-square",
    c"not-injective",
    c"wrong-hilbert-polynomial",
    c"non-linear-hilbert",
    c"no-stratum-match",
    c"not-invertible",
    c"parse",
    c"precondition",
    c"retries-exhausted",
    c"bad-prime",
    c"internal",
    c"io",
    c"unknown-stratum",
];

/// Stable kebab-case name of an [`SsStatus`] value, e.g. `"not-injective"`;
/// null for an unknown value. Library errors use the same names as the
/// command line.
#[no_mangle]
pub extern "C" fn ss_status_name(status: i32) -> *const c_char {
    usize::try_from(status)
        .ok()
        .and_then(|i| STATUS_NAMES.get(i))
        .map_or(ptr::null(), |s| s.as_ptr())
}

/// Display name of a stratum, e.g. `"X3D"`; null for an out-of-range value.
#[no_mangle]
pub extern "C" fn ss_stratum_name(stratum: i32) -> *const c_char {
    const NAMES: [&CStr; 9] = [
        c"X0", c"X1", c"X2", c"X3", c"X3D", c"X4", c"X5", c"X6", c"X7",
    ];
    usize::try_from(stratum)
        .ok()
        .and_then(|i| NAMES.get(i))
        .map_or(ptr::null(), |s| s.as_ptr())
}

/// Parses a presentation from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ss_presentation_from_json(
    json: *const c_char,
    out: *mut *mut SsPresentation,
) -> SsStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|e| Failure(SsStatus::InvalidUtf8, e.to_string()))?;
        *out = boxed(presentation_from_json(text)?);
        Ok(())
    })
}

/// Serializes a presentation; free the result with [`ss_string_free`].
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ss_presentation_to_json(
    p: *const SsPresentation,
    out: *mut *mut c_char,
) -> SsStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        *out = c_string(presentation_to_json(handle(p)?))?;
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ss_presentation_free(p: *mut SsPresentation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ss_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Stratum of the cokernel, read off its cohomology triple.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ss_classify(p: *const SsPresentation, out: *mut SsStratum) -> SsStatus {
    guard(|| {
        let s = classify(handle(p)?)?;
        *out_ref(out)? = s.into();
        Ok(())
    })
}

/// Classification with every normal-form check, as a JSON object. `prime`
/// of 0 selects the default.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ss_classify_report_json(
    p: *const SsPresentation,
    trials: usize,
    prime: u64,
    seed: u64,
    out: *mut *mut c_char,
) -> SsStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        let mut opts = CheckOptions {
            trials,
            seed,
            ..CheckOptions::default()
        };
        if prime != 0 {
            opts.prime = prime;
        }
        let report = classify_with_report(handle(p)?, &opts)?;
        let json = serde_json::to_string(&report)
            .map_err(|e| Failure(SsStatus::Internal, e.to_string()))?;
        *out = c_string(json)?;
        Ok(())
    })
}

/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ss_cohomology_table(
    p: *const SsPresentation,
    out: *mut SsCohomologyTable,
) -> SsStatus {
    guard(|| {
        let t = cohomology_table(handle(p)?)?;
        *out_ref(out)? = SsCohomologyTable {
            h0_minus1: t.h0_minus1,
            h1_0: t.h1_0,
            h0_omega: t.h0_omega,
        };
        Ok(())
    })
}

/// `h0` and `h1` of the cokernel twisted by `twist`.
///
/// # Safety
/// `p` must be a live handle; `h0_out` and `h1_out` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ss_cohomology(
    p: *const SsPresentation,
    twist: i32,
    h0_out: *mut usize,
    h1_out: *mut usize,
) -> SsStatus {
    guard(|| {
        let p = handle(p)?;
        let (a, b) = (h0(p, twist)?, h1(p, twist)?);
        *out_ref(h0_out)? = a;
        *out_ref(h1_out)? = b;
        Ok(())
    })
}

/// A seeded random presentation of the given stratum (an [`SsStratum`]
/// value). `height` bounds the random coefficients; 0 selects the default.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ss_sample(
    stratum: i32,
    seed: u64,
    height: i64,
    out: *mut *mut SsPresentation,
) -> SsStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        let s = stratum_from_raw(stratum)?;
        if height < 0 {
            return Err(Failure(
                SsStatus::Precondition,
                "height must be positive".into(),
            ));
        }
        let height = if height == 0 {
            sheaf_strata::strata::DEFAULT_HEIGHT
        } else {
            height
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        *out = boxed(sample(s, &mut rng, height)?);
        Ok(())
    })
}

/// Presentation of the dual sheaf twisted by `twist`.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ss_dualize(
    p: *const SsPresentation,
    twist: i32,
    out: *mut *mut SsPresentation,
) -> SsStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        *out = boxed(dualize(handle(p)?, twist));
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_names_match_error_codes() {
        let errors = [
            Error::DegreeMismatch(1, 2),
            Error::TwistMismatch(String::new()),
            Error::ShapeMismatch(String::new()),
            Error::InvalidPresentation(vec![]),
            Error::NotSquare,
            Error::NotInjective,
            Error::WrongHilbertPolynomial(1, 1),
            Error::NonLinearHilbert,
            Error::NoStratumMatch(0, 0, 0),
            Error::NotInvertible,
            Error::Parse(String::new()),
            Error::Precondition(String::new()),
            Error::RetriesExhausted(1),
            Error::BadPrime(2, 3),
            Error::Internal(String::new()),
            Error::Io(String::new()),
        ];
        for e in errors {
            let name = unsafe { CStr::from_ptr(ss_status_name(status_of(&e) as i32)) };
            assert_eq!(name.to_str().unwrap(), e.code());
        }
        assert!(ss_status_name(SsStatus::UnknownStratum as i32 + 1).is_null());
        assert!(ss_status_name(-1).is_null());
    }

    #[test]
    fn strata_indices_agree() {
        for (i, s) in StratumId::ALL.into_iter().enumerate() {
            assert_eq!(SsStratum::from(s) as usize, i);
            assert_eq!(StratumId::from(SsStratum::from(s)), s);
            let name = unsafe { CStr::from_ptr(ss_stratum_name(i as i32)) };
            assert_eq!(name.to_str().unwrap(), s.name());
        }
    }
}
