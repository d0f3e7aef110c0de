//! The `sheaf-strata` command line.
//!
//! Reports are `key=value` lines, or one JSON document with `--json`.
//! Presentations are always exchanged in the JSON format of [`crate::io`].
//! Exit codes: 0 success, 1 domain error, 2 usage error.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::blowup::{self, Variant};
use crate::builders::{self, PointSet, X5Stars};
use crate::cohomology::{self, cohomology_table};
use crate::error::{Error, Result};
use crate::forms::{Form, Scalar};
use crate::gradedmat::{dualize, Presentation};
use crate::io::{points_from_json, presentation_from_json, presentation_to_json};
use crate::kronecker::{self, KroneckerModule, Verdict};
use crate::strata::{self, CheckOptions, StratumId, StratumReport, WStatus};

pub const PRIME_ENV: &str = "SHEAF_STRATA_PRIME";

#[derive(Debug, Parser)]
#[command(
    name = "sheaf-strata",
    version,
    about = "Classify semistable plane sheaves with Hilbert polynomial 6m+3"
)]
pub struct Cli {
    /// Print one JSON document instead of key=value lines.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct SearchArgs {
    /// Random trials of the Kronecker instability search.
    #[arg(long, default_value_t = kronecker::DEFAULT_TRIALS)]
    pub trials: usize,
    /// Prime for the search; overrides SHEAF_STRATA_PRIME.
    #[arg(long)]
    pub prime: Option<u64>,
    /// Seed of the search.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stratum and cohomology triple of a presentation (stdin if no file).
    Classify {
        file: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
        /// Exit 1 when a normal-form condition fails.
        #[arg(long)]
        strict: bool,
    },
    /// Check the normal-form conditions of a given stratum.
    Verify {
        file: Option<PathBuf>,
        #[arg(long)]
        stratum: StratumId,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Random presentation of a stratum.
    Sample {
        stratum: StratumId,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = strata::DEFAULT_HEIGHT)]
        height: i64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Dimension and codimension of every stratum.
    Audit,
    /// Presentations from geometric data.
    Build {
        #[command(subcommand)]
        kind: BuildKind,
    },
    /// h0, h1 and the Euler characteristic at one twist.
    Cohomology {
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        twist: i32,
    },
    /// Presentation of the dual sheaf twisted by the given amount.
    Dualize {
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        twist: i32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Kronecker module tools.
    Kron {
        #[command(subcommand)]
        cmd: KronCommand,
    },
    /// Apply a blow-down map and compare cohomology of source and image.
    Blowdown {
        #[arg(long)]
        variant: Variant,
        file: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum KronCommand {
    /// Semistability verdict for a matrix whose entries share one degree.
    Check {
        file: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum BuildKind {
    /// O(-4) -> O(2) given by a sextic.
    Sextic {
        #[arg(long = "f")]
        f: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// J_Z(3) on a sextic through six points.
    Jz3 {
        /// JSON list of six points, e.g. [[1,0,0],[0,1,0],...].
        #[arg(long)]
        points: PathBuf,
        #[arg(long = "f")]
        f: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The normal form [[q1, l1, 0], [f1, q, l2], [p, f2, q2]].
    X5 {
        #[arg(long)]
        q1: String,
        #[arg(long)]
        l1: String,
        #[arg(long)]
        q2: String,
        #[arg(long)]
        l2: String,
        #[arg(long)]
        f1: Option<String>,
        #[arg(long)]
        q: Option<String>,
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        f2: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = strata::DEFAULT_HEIGHT)]
        height: i64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The normal form with φ11 through p1 and φ22 through p2.
    X6 {
        /// Point as "x,y,z".
        #[arg(long, allow_hyphen_values = true)]
        p1: String,
        #[arg(long, allow_hyphen_values = true)]
        p2: String,
        /// Four quartics "a;b;c;d" for the rows (a b) and (c d).
        #[arg(long)]
        phi21: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = strata::DEFAULT_HEIGHT)]
        height: i64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Runs with the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(
        argv,
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

pub fn run_with<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return e.exit_code();
        }
    };
    let json = cli.json;
    let mut report = Report::new(json);
    match execute(cli.command, stdin, &mut report) {
        Ok(code) => {
            let _ = out.write_all(report.render().as_bytes());
            code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            report.error(&e);
            let _ = out.write_all(report.render().as_bytes());
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

/// Ordered key/value output.
struct Report {
    json: bool,
    lines: Vec<Vec<(String, Value)>>,
    raw: Option<String>,
}

impl Report {
    fn new(json: bool) -> Self {
        Report {
            json,
            lines: Vec::new(),
            raw: None,
        }
    }

    fn line(&mut self, pairs: Vec<(&str, Value)>) {
        self.lines
            .push(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect());
    }

    fn kv(&mut self, k: &str, v: impl Into<Value>) {
        self.line(vec![(k, v.into())]);
    }

    /// Output that is already a document, such as a presentation.
    fn raw(&mut self, s: String) {
        self.raw = Some(s);
    }

    fn error(&mut self, e: &Error) {
        self.raw = None;
        self.lines.clear();
        self.kv("error", e.code());
        self.kv("message", e.to_string());
    }

    fn render(&self) -> String {
        if let Some(r) = &self.raw {
            return format!("{r}\n");
        }
        if self.json {
            let mut m = Map::new();
            for (k, v) in self.lines.iter().flatten() {
                m.insert(k.clone(), v.clone());
            }
            return format!("{}\n", Value::Object(m));
        }
        let mut s = String::new();
        for line in &self.lines {
            let parts: Vec<String> = line
                .iter()
                .map(|(k, v)| match v {
                    Value::String(t) => format!("{k}={t}"),
                    other => format!("{k}={other}"),
                })
                .collect();
            s.push_str(&parts.join(" "));
            s.push('\n');
        }
        s
    }
}

fn read_input(file: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String> {
    match file {
        Some(p) if p != Path::new("-") => Ok(std::fs::read_to_string(p)?),
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_presentation(file: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<Presentation> {
    presentation_from_json(&read_input(file, stdin)?)
}

fn resolve_prime(flag: Option<u64>) -> std::result::Result<u64, Failure> {
    if let Some(p) = flag {
        return Ok(p);
    }
    match std::env::var(PRIME_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{PRIME_ENV}={v} is not an unsigned integer"))),
        Err(_) => Ok(kronecker::DEFAULT_PRIME),
    }
}

fn options(search: &SearchArgs) -> std::result::Result<CheckOptions, Failure> {
    Ok(CheckOptions {
        trials: search.trials,
        prime: resolve_prime(search.prime)?,
        seed: search.seed,
    })
}

fn emit_presentation(
    p: &Presentation,
    output: &Option<PathBuf>,
    report: &mut Report,
) -> Result<()> {
    let text = presentation_to_json(p);
    match output {
        Some(path) => {
            std::fs::write(path, format!("{text}\n"))?;
            report.kv("output", path.display().to_string());
        }
        None => report.raw(text),
    }
    Ok(())
}

fn parse_form(s: &str, degree: i32, name: &str) -> Result<Form> {
    Form::parse(s, Some(degree)).map_err(|e| Error::Parse(format!("{name}: {e}")))
}

fn parse_point(s: &str) -> Result<[Scalar; 3]> {
    let c: Vec<Scalar> = s
        .split(',')
        .map(|t| Form::parse(t, Some(0)).map(|f| f.coeffs()[0].clone()))
        .collect::<Result<_>>()?;
    <[Scalar; 3]>::try_from(c)
        .map_err(|v| Error::Parse(format!("point with {} coordinates", v.len())))
}

fn push_report(report: &mut Report, r: &StratumReport) {
    report.line(vec![
        ("stratum", r.stratum.name().into()),
        ("triple", r.triple.to_string().into()),
    ]);
    report.kv("hilbert", format!("{},{}", r.hilbert.0, r.hilbert.1));
    report.kv("w", r.status().label());
    for c in &r.w_checks {
        report.line(vec![
            ("check", c.name.clone().into()),
            ("verdict", c.verdict.label().into()),
        ]);
    }
    if r.possibly_properly_semistable {
        report.kv("properly_semistable", "possible");
    }
    if r.status() == WStatus::Fail {
        report.kv("flag", "w-check-failed");
    }
    for n in &r.notes {
        report.kv("note", n.clone());
    }
}

fn push_report_json(report: &mut Report, r: &StratumReport) {
    report.kv("stratum", r.stratum.name());
    report.kv("triple", r.triple.to_string());
    report.kv("hilbert", json!([r.hilbert.0, r.hilbert.1]));
    report.kv("w", r.status().label());
    report.kv(
        "checks",
        serde_json::to_value(&r.w_checks).expect("serializable"),
    );
    report.kv(
        "possibly_properly_semistable",
        r.possibly_properly_semistable,
    );
    report.kv("notes", json!(r.notes));
}

fn execute(
    cmd: Command,
    stdin: &mut dyn Read,
    report: &mut Report,
) -> std::result::Result<i32, Failure> {
    match cmd {
        Command::Classify {
            file,
            search,
            strict,
        } => {
            let opts = options(&search)?;
            let p = read_presentation(&file, stdin)?;
            let r = strata::classify_with_report(&p, &opts)?;
            if report.json {
                push_report_json(report, &r);
            } else {
                push_report(report, &r);
            }
            if strict && r.status() == WStatus::Fail {
                return Err(Error::Precondition(format!(
                    "conditions of {} fail: {}",
                    r.stratum,
                    r.failures().join(", ")
                ))
                .into());
            }
            Ok(0)
        }
        Command::Verify {
            file,
            stratum,
            search,
        } => {
            let opts = options(&search)?;
            let p = read_presentation(&file, stdin)?;
            let r = strata::verify_w_with(&p, stratum, &opts)?;
            if report.json {
                push_report_json(report, &r);
            } else {
                push_report(report, &r);
            }
            Ok(if r.passed() { 0 } else { 1 })
        }
        Command::Sample {
            stratum,
            seed,
            height,
            output,
        } => {
            if height < 1 {
                return Err(Failure::Usage("--height must be at least 1".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = strata::sample(stratum, &mut rng, height)?;
            emit_presentation(&p, &output, report)?;
            Ok(0)
        }
        Command::Audit => {
            let rows = strata::codim_audit();
            if report.json {
                report.kv("rows", serde_json::to_value(&rows).expect("serializable"));
            } else {
                for r in &rows {
                    report.line(vec![
                        ("stratum", r.stratum.name().into()),
                        ("dimension", r.dimension.into()),
                        ("codim", (strata::AMBIENT_DIM - r.dimension).into()),
                        ("expected", r.expected_codim.into()),
                        ("result", if r.pass { "pass" } else { "fail" }.into()),
                    ]);
                }
            }
            Ok(if rows.iter().all(|r| r.pass) { 0 } else { 1 })
        }
        Command::Build { kind } => {
            let (p, output) = build(kind)?;
            emit_presentation(&p, &output, report)?;
            Ok(0)
        }
        Command::Cohomology { file, twist } => {
            let p = read_presentation(&file, stdin)?;
            let h0 = cohomology::h0(&p, twist)?;
            let h1 = cohomology::h1(&p, twist)?;
            let chi = cohomology::euler_characteristic(&p, twist);
            let (r, c) = cohomology::hilbert_polynomial(&p)?;
            report.kv("twist", twist);
            report.kv("h0", h0);
            report.kv("h1", h1);
            report.kv("chi", chi);
            report.kv("hilbert", format!("{r},{c}"));
            if (r, c) == (6, 3) {
                report.kv("triple", cohomology_table(&p)?.to_string());
            }
            Ok(0)
        }
        Command::Dualize {
            file,
            twist,
            output,
        } => {
            let p = read_presentation(&file, stdin)?;
            emit_presentation(&dualize(&p, twist), &output, report)?;
            Ok(0)
        }
        Command::Kron {
            cmd: KronCommand::Check { file, search },
        } => {
            let opts = options(&search)?;
            let p = read_presentation(&file, stdin)?;
            let module = KroneckerModule::from_presentation(&p)?;
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let v = kronecker::check(&module, opts.trials, &mut rng, opts.prime)?;
            report.kv("verdict", v.label());
            report.kv("shape", format!("{}x{}", module.q(), module.p()));
            report.kv("m", module.m());
            match &v {
                Verdict::SemistableProbabilistic { trials } => report.kv("trials", *trials),
                Verdict::UnstableCertified { witness: Some(w) } => {
                    let w = serde_json::to_value(w).expect("serializable");
                    if report.json {
                        report.kv("witness", w);
                    } else {
                        report.kv("witness_u", w["u"].to_string());
                        report.kv("witness_w", w["w"].to_string());
                    }
                }
                _ => {}
            }
            Ok(0)
        }
        Command::Blowdown {
            variant,
            file,
            output,
        } => {
            let p = read_presentation(&file, stdin)?;
            let (image, c) = blowup::blowdown(&p, variant)?;
            if let Some(path) = &output {
                std::fs::write(path, format!("{}\n", presentation_to_json(&image)))
                    .map_err(Error::from)?;
                report.kv("output", path.display().to_string());
            } else if report.json {
                report.kv(
                    "image",
                    serde_json::from_str::<Value>(&presentation_to_json(&image)).expect("json"),
                );
            } else {
                report.kv("image", presentation_to_json(&image));
            }
            report.kv("variant", variant.number());
            report.kv("c", c.to_string());
            report.kv(
                "det_factor",
                blowup::determinant_factor(variant, &c).to_string(),
            );
            if c.is_zero() {
                report.kv("rank_one", blowup::all_2x2_minors_vanish(&image));
            } else {
                let r = blowup::fiber_consistency(&p, variant)?;
                report.kv("source_triple", r.source_table.to_string());
                report.kv("image_triple", r.image_table.to_string());
                report.kv("consistent", r.consistent);
                if !r.consistent {
                    return Ok(1);
                }
            }
            Ok(0)
        }
    }
}

fn build(kind: BuildKind) -> Result<(Presentation, Option<PathBuf>)> {
    match kind {
        BuildKind::Sextic { f, output } => {
            Ok((builders::sextic_sheaf(&parse_form(&f, 6, "f")?)?, output))
        }
        BuildKind::Jz3 { points, f, output } => {
            let z = PointSet::new(points_from_json(&std::fs::read_to_string(points)?)?)?;
            Ok((
                builders::twisted_ideal_sheaf(&z, &parse_form(&f, 6, "f")?)?,
                output,
            ))
        }
        BuildKind::X5 {
            q1,
            l1,
            q2,
            l2,
            f1,
            q,
            p,
            f2,
            seed,
            height,
            output,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let given = [f1, q, p, f2];
            let stars = if given.iter().all(Option::is_some) {
                let [f1, q, p, f2] = given.map(Option::unwrap);
                Some(X5Stars {
                    f1: parse_form(&f1, 3, "f1")?,
                    q: parse_form(&q, 2, "q")?,
                    p: parse_form(&p, 4, "p")?,
                    f2: parse_form(&f2, 3, "f2")?,
                })
            } else if given.iter().any(Option::is_some) {
                return Err(Error::Precondition(
                    "give all of --f1 --q --p --f2 or none".into(),
                ));
            } else {
                None
            };
            let p = builders::x5_normal_form(
                &parse_form(&q1, 2, "q1")?,
                &parse_form(&l1, 1, "l1")?,
                &parse_form(&q2, 2, "q2")?,
                &parse_form(&l2, 1, "l2")?,
                stars,
                &mut rng,
                height,
            )?;
            Ok((p, output))
        }
        BuildKind::X6 {
            p1,
            p2,
            phi21,
            seed,
            height,
            output,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let given = match phi21 {
                Some(s) => {
                    let f: Vec<Form> = s
                        .split(';')
                        .map(|t| parse_form(t, 4, "phi21"))
                        .collect::<Result<_>>()?;
                    let [a, b, c, d] = <[Form; 4]>::try_from(f)
                        .map_err(|_| Error::Parse("--phi21 needs four quartics".into()))?;
                    Some([[a, b], [c, d]])
                }
                None => None,
            };
            let p = builders::x6_normal_form(
                &parse_point(&p1)?,
                &parse_point(&p2)?,
                given,
                &mut rng,
                height,
            )?;
            Ok((p, output))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("sheaf-strata").chain(args.iter().copied());
        let code = run_with(argv, &mut input.as_bytes(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn sample_then_classify() {
        let (code, sample, _) = call(&["sample", "X5", "--seed", "7"], "");
        assert_eq!(code, 0);
        let (code, out, _) = call(&["classify"], &sample);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("stratum=X5 triple=1,1,4"));
    }

    #[test]
    fn singular_input() {
        let doc = r#"{"source_twists":[-4],"target_twists":[2],"entries":[["0"]]}"#;
        let (code, out, _) = call(&["classify"], doc);
        assert_eq!(code, 1);
        assert!(out.starts_with("error=not-injective\n"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["frobnicate"], "").0, 2);
        assert_eq!(call(&["sample", "X9"], "").0, 2);
        assert_eq!(call(&["classify", "--bogus"], "").0, 2);
    }

    #[test]
    fn audit_lines() {
        let (code, out, _) = call(&["audit"], "");
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 9);
        assert!(out.lines().all(|l| l.ends_with("pass")));
    }

    #[test]
    fn json_mode() {
        let (_, sample, _) = call(&["sample", "X7", "--seed", "1"], "");
        let (code, out, _) = call(&["--json", "classify"], &sample);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["stratum"], "X7");
        assert_eq!(v["triple"], "3,3,8");
    }
}
