//! Builds and runs a C program against the generated header and the
//! static library.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "sheaf_strata.h"

int main(void) {
    SsPresentation *p = NULL, *d = NULL;
    SsStratum s;
    SsCohomologyTable t;
    char *json = NULL;
    if (ss_sample(SS_STRATUM_X3, 5, 0, &p) != SS_STATUS_OK) return 10;
    if (ss_classify(p, &s) != SS_STATUS_OK || s != SS_STRATUM_X3) return 11;
    if (ss_dualize(p, 1, &d) != SS_STATUS_OK) return 12;
    if (ss_cohomology_table(d, &t) != SS_STATUS_OK) return 13;
    if (t.h0_minus1 != 1 || t.h1_0 != 0 || t.h0_omega != 3) return 14;
    if (ss_presentation_to_json(d, &json) != SS_STATUS_OK || json[0] != '{') return 15;
    SsStatus e = ss_classify(NULL, &s);
    if (e != SS_STATUS_NULL_ARGUMENT || strcmp(ss_status_name(e), "null-argument") != 0) return 16;
    printf("%s %s\n", ss_stratum_name(SS_STRATUM_X3D), ss_last_error_message());
    ss_string_free(json);
    ss_presentation_free(d);
    ss_presentation_free(p);
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // CARGO_TARGET_TMPDIR is <target>/tmp
    Path::new(env!("CARGO_TARGET_TMPDIR"))
        .parent()
        .unwrap()
        .to_path_buf()
}

fn compiler() -> Option<String> {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    Command::new(&cc)
        .arg("--version")
        .output()
        .ok()?
        .status
        .success()
        .then_some(cc)
}

#[test]
fn header_compiles_and_links() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler; skipping");
        return;
    };
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    assert!(include.join("sheaf_strata.h").exists());
    let profile = if cfg!(debug_assertions) {
        "debug"
    } else {
        "release"
    };
    let lib = target_dir().join(profile).join("libsheaf_strata_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());

    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("ffi-c");
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("main.c");
    let exe = dir.join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new(cc)
        .args(["-std=c11", "-Wall", "-Werror", "-o"])
        .arg(&exe)
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "X3D presentation is null\n"
    );
}
