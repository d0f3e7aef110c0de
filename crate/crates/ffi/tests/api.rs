use std::ffi::{CStr, CString};
use std::ptr;

use sheaf_strata_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(ss_last_error_message()) }
        .to_str()
        .unwrap()
        .to_owned()
}

unsafe fn sampled(s: SsStratum, seed: u64) -> *mut SsPresentation {
    let mut p = ptr::null_mut();
    assert_eq!(ss_sample(s as i32, seed, 0, &mut p), SsStatus::Ok);
    assert!(!p.is_null());
    p
}

#[test]
fn sample_classify_and_dualize() {
    unsafe {
        let p = sampled(SsStratum::X3, 1);
        let mut s = SsStratum::X0;
        assert_eq!(ss_classify(p, &mut s), SsStatus::Ok);
        assert_eq!(s, SsStratum::X3);
        let mut t = SsCohomologyTable::default();
        assert_eq!(ss_cohomology_table(p, &mut t), SsStatus::Ok);
        assert_eq!((t.h0_minus1, t.h1_0, t.h0_omega), (0, 1, 3));

        let mut d = ptr::null_mut();
        assert_eq!(ss_dualize(p, 1, &mut d), SsStatus::Ok);
        assert_eq!(ss_classify(d, &mut s), SsStatus::Ok);
        assert_eq!(s, SsStratum::X3D);
        let (mut a, mut b) = (0, 0);
        assert_eq!(ss_cohomology(d, 2, &mut a, &mut b), SsStatus::Ok);
        assert_eq!(a as i64 - b as i64, 15);
        ss_presentation_free(d);
        ss_presentation_free(p);
    }
}

#[test]
fn json_round_trip() {
    unsafe {
        let p = sampled(SsStratum::X6, 2);
        let mut json = ptr::null_mut();
        assert_eq!(ss_presentation_to_json(p, &mut json), SsStatus::Ok);
        let text = CStr::from_ptr(json).to_owned();
        let mut q = ptr::null_mut();
        assert_eq!(
            ss_presentation_from_json(text.as_ptr(), &mut q),
            SsStatus::Ok
        );
        let mut again = ptr::null_mut();
        assert_eq!(ss_presentation_to_json(q, &mut again), SsStatus::Ok);
        assert_eq!(CStr::from_ptr(again), text.as_c_str());
        ss_string_free(json);
        ss_string_free(again);
        ss_presentation_free(q);
        ss_presentation_free(p);
    }
}

#[test]
fn report_json() {
    unsafe {
        let p = sampled(SsStratum::X2, 3);
        let mut out = ptr::null_mut();
        assert_eq!(
            ss_classify_report_json(p, 500, 0, 7, &mut out),
            SsStatus::Ok
        );
        let v: serde_json::Value =
            serde_json::from_str(CStr::from_ptr(out).to_str().unwrap()).unwrap();
        assert_eq!(v["stratum"], "X2");
        assert!(v["w_checks"].as_array().unwrap().len() >= 3);
        ss_string_free(out);

        let mut out = ptr::null_mut();
        assert_eq!(
            ss_classify_report_json(p, 10, 13, 0, &mut out),
            SsStatus::BadPrime
        );
        assert!(out.is_null());
        assert!(last_error().contains("13"));
        ss_presentation_free(p);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut p = ptr::null_mut();
        let bad = CString::new("{not json").unwrap();
        assert_eq!(
            ss_presentation_from_json(bad.as_ptr(), &mut p),
            SsStatus::Parse
        );
        assert!(p.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(
            CStr::from_ptr(ss_status_name(SsStatus::Parse as i32))
                .to_str()
                .unwrap(),
            "parse"
        );

        assert_eq!(
            ss_presentation_from_json(ptr::null(), &mut p),
            SsStatus::NullArgument
        );
        let mut s = SsStratum::X0;
        assert_eq!(ss_classify(ptr::null(), &mut s), SsStatus::NullArgument);
        assert_eq!(ss_sample(9, 0, 0, &mut p), SsStatus::UnknownStratum);
        assert_eq!(ss_sample(0, 0, 0, ptr::null_mut()), SsStatus::NullArgument);

        let zero = CString::new(
            r#"{"source_twists":[-2,-2,-2],"target_twists":[0,0,0],"entries":[["0","0","0"],["0","0","0"],["0","0","0"]]}"#,
        )
        .unwrap();
        assert_eq!(
            ss_presentation_from_json(zero.as_ptr(), &mut p),
            SsStatus::Ok
        );
        assert_eq!(ss_classify(p, &mut s), SsStatus::NotInjective);
        assert_eq!(ss_classify(ptr::null(), &mut s), SsStatus::NullArgument);
        assert_eq!(last_error(), "presentation is null");
        ss_presentation_free(p);
        ss_presentation_free(ptr::null_mut());
        ss_string_free(ptr::null_mut());
    }
}

#[test]
fn success_clears_the_message() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(ss_sample(42, 0, 0, &mut p), SsStatus::UnknownStratum);
        assert!(!last_error().is_empty());
        let p = sampled(SsStratum::X7, 0);
        assert_eq!(last_error(), "");
        ss_presentation_free(p);
    }
}
