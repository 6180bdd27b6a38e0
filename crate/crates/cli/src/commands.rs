use std::fs::{self, File, OpenOptions};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use ordsemi::enumerate::{run_sweep, SweepBatch, SweepOptions, MAX_ORDER};
use ordsemi::report::analyze as analyze_instance;
use ordsemi::semigroup::InstanceError;
use ordsemi::theorems::verify_theorem;
use ordsemi::{OrderedSemigroup, Theorem, Violation};
use serde_json::json;

use crate::render;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FALSE: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_DISAGREE: u8 = 3;

/// What a command prints and how the process exits.
pub struct Outcome {
    code: u8,
    stdout: String,
    stderr: String,
}

impl Outcome {
    fn ok(code: u8, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: u8, message: impl Into<String>) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: message.into(),
        }
    }

    pub fn emit(self) -> ExitCode {
        if !self.stdout.is_empty() {
            print!("{}", self.stdout);
            if !self.stdout.ends_with('\n') {
                println!();
            }
        }
        if !self.stderr.is_empty() {
            eprintln!("ordsemi: {}", self.stderr.trim_end());
        }
        ExitCode::from(self.code)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremChoice {
    All,
    One(Theorem),
}

impl TheoremChoice {
    fn theorems(self) -> Vec<Theorem> {
        match self {
            TheoremChoice::All => Theorem::ALL.to_vec(),
            TheoremChoice::One(t) => vec![t],
        }
    }
}

impl FromStr for TheoremChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("all") {
            Ok(TheoremChoice::All)
        } else {
            s.parse().map(TheoremChoice::One)
        }
    }
}

enum LoadError {
    Malformed(String),
    Laws(Vec<Violation>),
}

fn load(path: &Path) -> Result<OrderedSemigroup, LoadError> {
    let text = fs::read_to_string(path)
        .map_err(|e| LoadError::Malformed(format!("cannot read {}: {e}", path.display())))?;
    OrderedSemigroup::from_json_str(&text).map_err(|e| match e {
        InstanceError::Invalid(v) => match v.violations() {
            Some(laws) => LoadError::Laws(laws.to_vec()),
            None => LoadError::Malformed(format!("{}: {v}", path.display())),
        },
        InstanceError::Json(_) => LoadError::Malformed(format!("{}: {e}", path.display())),
    })
}

fn load_valid(path: &Path) -> Result<OrderedSemigroup, Outcome> {
    load(path).map_err(|e| match e {
        LoadError::Malformed(m) => Outcome::fail(EXIT_INVALID, m),
        LoadError::Laws(v) => Outcome::fail(
            EXIT_INVALID,
            format!("{} is not an ordered semigroup: {}", path.display(), v[0]),
        ),
    })
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

pub fn validate(path: &Path, json: bool) -> Outcome {
    match load(path) {
        Ok(s) => {
            let out = if json {
                to_json(&json!({"valid": true, "n": s.len(), "violations": []}))
            } else {
                "valid".to_string()
            };
            Outcome::ok(EXIT_OK, out)
        }
        Err(LoadError::Laws(v)) => {
            let out = if json {
                to_json(&json!({"valid": false, "violations": v}))
            } else {
                render::violations(&v)
            };
            Outcome::ok(EXIT_FALSE, out)
        }
        Err(LoadError::Malformed(m)) => Outcome::fail(EXIT_INVALID, m),
    }
}

pub fn analyze(path: &Path, json: bool) -> Outcome {
    let s = match load_valid(path) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let report = analyze_instance(&s);
    let out = if json {
        to_json(&report)
    } else {
        render::analysis(&report)
    };
    Outcome::ok(EXIT_OK, out)
}

pub fn theorem(path: &Path, which: Theorem, json: bool) -> Outcome {
    let s = match load_valid(path) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let report = match verify_theorem(&s, which) {
        Ok(r) => r,
        // a nil-extension route contradiction leaves the verdict undecided
        Err(e) => return Outcome::fail(EXIT_DISAGREE, format!("oracle failed: {e}")),
    };
    let code = match (report.agree, report.predicate_verdict) {
        (true, true) => EXIT_OK,
        (true, false) => EXIT_FALSE,
        (false, _) => EXIT_DISAGREE,
    };
    let out = if json {
        to_json(&report)
    } else {
        render::verification(&report)
    };
    Outcome::ok(code, out)
}

pub struct VerifyArgs {
    pub max_order: usize,
    pub which: TheoremChoice,
    pub jobs: usize,
    pub resume: Option<PathBuf>,
    pub counterexamples: PathBuf,
    pub lemma_checks: bool,
    pub batch_shards: usize,
    pub json: bool,
    pub timestamps: bool,
}

fn write_batch(out: &mut impl Write, batch: &SweepBatch) -> io::Result<()> {
    for report in &batch.counterexamples {
        serde_json::to_writer(&mut *out, report)?;
        out.write_all(b"\n")?;
    }
    for anomaly in &batch.anomalies {
        serde_json::to_writer(&mut *out, anomaly)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

pub fn verify(args: &VerifyArgs) -> Outcome {
    if args.max_order == 0 || args.max_order > MAX_ORDER {
        return Outcome::fail(
            EXIT_INVALID,
            format!(
                "--max-order must be between 1 and {MAX_ORDER}, got {}",
                args.max_order
            ),
        );
    }
    if args.jobs == 0 {
        return Outcome::fail(EXIT_INVALID, "--jobs must be at least 1");
    }
    let options = SweepOptions {
        theorems: args.which.theorems(),
        jobs: args.jobs,
        lemma_checks: args.lemma_checks,
    };
    // a resumed run keeps the lines written before the interruption
    let resuming = args.resume.as_deref().is_some_and(Path::exists);
    let file = if resuming {
        OpenOptions::new()
            .create(true)
            .append(true)
            .open(&args.counterexamples)
    } else {
        File::create(&args.counterexamples)
    };
    let mut sink = match file {
        Ok(f) => BufWriter::new(f),
        Err(e) => {
            return Outcome::fail(
                EXIT_INVALID,
                format!("cannot open {}: {e}", args.counterexamples.display()),
            )
        }
    };
    let started = Instant::now();
    let timestamps = args.timestamps;
    let outcome = run_sweep(
        args.max_order,
        &options,
        args.resume.as_deref(),
        args.batch_shards,
        None,
        |batch| {
            write_batch(&mut sink, batch)?;
            if timestamps {
                eprintln!(
                    "[{:>9.3}s] order {}: {} instances in batch",
                    started.elapsed().as_secs_f64(),
                    batch.census.order,
                    batch.census.instances
                );
            }
            Ok(())
        },
    );
    drop(sink);
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => return Outcome::fail(EXIT_INVALID, e.to_string()),
    };
    let elapsed = timestamps.then(|| started.elapsed().as_secs_f64());
    let written = match fs::metadata(&args.counterexamples) {
        Ok(m) => m.len(),
        Err(e) => return Outcome::fail(EXIT_INVALID, e.to_string()),
    };
    let out = if args.json {
        let mut v = json!({
            "max_order": args.max_order,
            "censuses": outcome.censuses,
            "counterexamples_file": args.counterexamples,
            "counterexamples_written": written > 0,
        });
        if let Some(secs) = elapsed {
            v["elapsed_seconds"] = json!(secs);
        }
        to_json(&v)
    } else {
        render::sweep(
            &outcome.censuses,
            &args.counterexamples,
            written > 0,
            elapsed,
        )
    };
    let code = if written > 0 { EXIT_DISAGREE } else { EXIT_OK };
    Outcome::ok(code, out)
}
