use std::io::Write;
use std::process::{Command, Output, Stdio};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sheaf_strata::builders::ideal_generators;
use sheaf_strata::builders::PointSet;
use sheaf_strata::forms::{int, Form};
use sheaf_strata::gradedmat::Presentation;
use sheaf_strata::io::presentation_to_json;
use sheaf_strata::strata::StratumId;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_sheaf-strata"));
    c.env_remove("SHEAF_STRATA_PRIME");
    c
}

fn run(args: &[&str], stdin: &str) -> Output {
    run_cmd(bin().args(args), stdin)
}

fn run_cmd(cmd: &mut Command, stdin: &str) -> Output {
    let mut child = cmd
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines()
        .find_map(|l| l.strip_prefix(key)?.strip_prefix('='))
}

#[test]
fn sample_then_classify_every_stratum() {
    for s in StratumId::ALL {
        let sample = run(&["sample", s.name(), "--seed", "4"], "");
        assert!(sample.status.success());
        let out = run(&["classify"], &stdout(&sample));
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        let first = text.lines().next().unwrap();
        assert_eq!(first, format!("stratum={} triple={}", s.name(), s.triple()));
        assert_eq!(value(&text, "hilbert"), Some("6,3"));
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let a = run(&["sample", "x3", "--seed", "12"], "");
    let b = run(&["sample", "x3", "--seed", "12"], "");
    assert_eq!(a.stdout, b.stdout);
    let c1 = run(&["--json", "classify"], &stdout(&a));
    let c2 = run(&["--json", "classify"], &stdout(&a));
    assert_eq!(c1.stdout, c2.stdout);
    assert_ne!(a.stdout, run(&["sample", "x3", "--seed", "13"], "").stdout);
}

#[test]
fn json_output_parses() {
    let sample = stdout(&run(&["sample", "x6", "--seed", "2"], ""));
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["--json", "classify"], &sample))).unwrap();
    assert_eq!(v["stratum"], "X6");
    assert_eq!(v["triple"], "2,2,6");
    assert_eq!(v["w"], "pass");

    let dual = stdout(&run(&["dualize"], &sample));
    let p = sheaf_strata::io::presentation_from_json(&dual).unwrap();
    assert_eq!(sheaf_strata::strata::classify(&p).unwrap(), StratumId::X6);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["bogus"], "").status.code(), Some(2));
    assert_eq!(run(&["sample", "x9"], "").status.code(), Some(2));

    let bad = run(&["classify"], "not json");
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(value(&stdout(&bad), "error"), Some("parse"));

    let x4 = stdout(&run(&["sample", "x4"], ""));
    let wrong = run(&["verify", "--stratum", "x5"], &x4);
    assert_eq!(wrong.status.code(), Some(1));
    assert_eq!(value(&stdout(&wrong), "error"), Some("twist-mismatch"));
    let right = run(&["verify", "--stratum", "x4"], &x4);
    assert_eq!(right.status.code(), Some(0));

    let zero = presentation_to_json(&Presentation::zero(vec![-2; 3], vec![0; 3]));
    let out = run(&["classify"], &zero);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(value(&stdout(&out), "error"), Some("not-injective"));
}

#[test]
fn failed_conditions_are_flagged_and_strict_exits_nonzero() {
    // φ11 spans a single line
    let mut r = ChaCha8Rng::seed_from_u64(8);
    let p = sheaf_strata::strata::sample(StratumId::X1, &mut r, 5).unwrap();
    let p = [1, 2, -3].iter().enumerate().fold(p, |p, (c, &k)| {
        p.with_entry(0, c, Form::x().scale(&int(k))).unwrap()
    });
    let json = presentation_to_json(&p);
    let out = run(&["classify"], &json);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("stratum=X1 "), "{text}");
    assert_eq!(value(&text, "flag"), Some("w-check-failed"));
    assert!(text.contains("check=span(phi11)>=2 verdict=fail"), "{text}");
    assert_eq!(run(&["classify", "--strict"], &json).status.code(), Some(1));
}

#[test]
fn prime_from_environment() {
    let x0 = stdout(&run(&["sample", "x0"], ""));
    let out = run_cmd(
        bin()
            .args(["kron", "check"])
            .env("SHEAF_STRATA_PRIME", "13"),
        &x0,
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(value(&stdout(&out), "error"), Some("bad-prime"));
    // exactly decided checks still reject the prime
    let x2 = stdout(&run(&["sample", "x2"], ""));
    let out = run(&["classify", "--prime", "10008"], &x2);
    assert_eq!(value(&stdout(&out), "error"), Some("bad-prime"));
    // the flag wins over the environment
    let out = run_cmd(
        bin()
            .args(["kron", "check", "--prime", "10009", "--trials", "50"])
            .env("SHEAF_STRATA_PRIME", "13"),
        &x0,
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        value(&stdout(&out), "verdict"),
        Some("semistable-probabilistic")
    );
}

#[test]
fn kron_reports_a_witness() {
    // zero first row: a 1×3 block
    let mut r = ChaCha8Rng::seed_from_u64(3);
    let mut rows: Vec<Vec<Form>> = (0..3)
        .map(|_| (0..3).map(|_| Form::random(2, &mut r, 4)).collect())
        .collect();
    rows[0] = vec![Form::zero(2); 3];
    let p = Presentation::new(vec![-2; 3], vec![0; 3], rows).unwrap();
    let out = run(
        &["kron", "check", "--trials", "100"],
        &presentation_to_json(&p),
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(value(&text, "verdict"), Some("unstable-certified"));
    assert!(
        value(&text, "witness_u").is_some() && value(&text, "witness_w").is_some(),
        "{text}"
    );
}

#[test]
fn ideal_sheaf_from_a_points_file() {
    let pts = [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [1, 1, 1],
        [1, 2, 3],
        [3, 1, 2],
    ];
    let z = PointSet::new(pts.iter().map(|p| p.map(int)).collect()).unwrap();
    let g = ideal_generators(&z, 3);
    let f = g[0]
        .mul(&Form::parse("X^3", None).unwrap())
        .add(&g[3].mul(&Form::parse("Y*Z^2", None).unwrap()))
        .unwrap();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "{}", serde_json::to_string(&pts).unwrap()).unwrap();
    let path = file.path().to_str().unwrap();
    let built = run(
        &["build", "jz3", "--points", path, "--f", &f.to_string()],
        "",
    );
    assert!(
        built.status.success(),
        "{}",
        String::from_utf8_lossy(&built.stderr)
    );
    let text = stdout(&run(&["classify"], &stdout(&built)));
    assert!(text.starts_with("stratum=X3 triple=0,1,3"), "{text}");
    let dual = stdout(&run(&["dualize"], &stdout(&built)));
    assert!(stdout(&run(&["classify"], &dual)).starts_with("stratum=X3D "));
}

#[test]
fn blowdown_seven_is_consistent() {
    let mut r = ChaCha8Rng::seed_from_u64(8);
    let s = StratumId::X5;
    let p = Presentation::random(
        s.source_twists().to_vec(),
        s.target_twists().to_vec(),
        &mut r,
        4,
    )
    .with_entry(0, 2, Form::constant(int(-1)))
    .unwrap();
    let out = run(&["blowdown", "--variant", "7"], &presentation_to_json(&p));
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(value(&text, "consistent"), Some("true"));
    assert_eq!(value(&text, "c"), Some("-1"));
    assert_eq!(value(&text, "source_triple"), Some("1,1,3"));
}

#[test]
fn audit_lists_every_stratum() {
    let text = stdout(&run(&["audit"], ""));
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().all(|l| l.ends_with("result=pass")));
    assert!(text.starts_with("stratum=X0 dimension=37 codim=0 expected=0 result=pass"));
}

#[test]
fn sextic_and_cohomology_commands() {
    let built = stdout(&run(&["build", "sextic", "--f", "X*Y^5"], ""));
    let text = stdout(&run(&["cohomology", "--twist", "-1"], &built));
    assert_eq!(value(&text, "h0"), Some("3"));
    assert_eq!(value(&text, "chi"), Some("-3"));
    assert!(stdout(&run(&["classify"], &built)).starts_with("stratum=X7 triple=3,3,8"));
}
