//! Job dispatch for the `yhlink` binary.
//!
//! `run` never touches the process: it returns the exit code and both output
//! streams so the same path is used by `main` and by the tests.

pub mod suites;

use std::fmt::Write as _;
use std::path::PathBuf;

use num::complex::Complex64;
use rand::SeedableRng;
use rayon::prelude::*;
use serde_json::{json, Value};

use yhlink::adelic::{adelic_delta, DivisorChain};
use yhlink::braid::{parse_braid, parse_corpus, BraidWord};
use yhlink::esystem::{enumerate_subsets, lift_subset, solution_from_subset, subset_string, verify_solution, ESolution};
use yhlink::exactnum::rational_string;
use yhlink::invariant::delta_invariant;
use yhlink::sample::SampleRng;
use yhlink::trace::{trace_of_braid, TraceValue};
use yhlink::{Error, ErrorKind};

use suites::SuiteReport;

pub const DEFAULT_SEED: u64 = 20240611;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub enum BraidSource {
    Inline(String),
    /// Corpus text already read from disk, with the path for messages.
    Corpus { path: PathBuf, text: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Markov,
    Skein,
    Esystem,
    AdelicCoherence,
    All,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Invariant { d: u32, subset: Vec<u32>, source: BraidSource, eval: Option<(Complex64, Complex64)> },
    Trace { d: u32, subset: Option<Vec<u32>>, source: BraidSource },
    /// `subset = None` enumerates every non-empty subset.
    Esystem { d: u32, subset: Option<Vec<u32>> },
    Verify { suite: Suite, seed: u64, count: usize },
    Adelic { chain: DivisorChain, subset: Vec<u32>, braid: String },
}

#[derive(Clone, Debug, PartialEq)]
pub struct JobSpec {
    pub command: Command,
    pub format: Format,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e.kind() {
        ErrorKind::Validation => 1,
        ErrorKind::Precondition => 2,
        ErrorKind::Coherence => 3,
    }
}

/// Parses `"0,2"`; whitespace around items is ignored.
pub fn parse_subset(text: &str) -> Result<Vec<u32>, Error> {
    let mut out = Vec::new();
    let mut pos = 0;
    for item in text.split(',') {
        let t = item.trim();
        let v: u32 = t
            .parse()
            .map_err(|_| Error::Parse { position: pos, message: format!("malformed subset element '{t}'") })?;
        out.push(v);
        pos += item.chars().count() + 1;
    }
    Ok(out)
}

fn check_subset(d: u32, s: &[u32]) -> Result<(), Error> {
    if d == 0 || d > 255 {
        return Err(Error::Invalid(format!("d must be in 1..=255, got {d}")));
    }
    if let Some(a) = s.iter().find(|&&a| a >= d) {
        return Err(Error::Invalid(format!("subset element {a} is not in Z/{d}")));
    }
    Ok(())
}

fn solution(d: u32, s: &[u32]) -> Result<ESolution, Error> {
    check_subset(d, s)?;
    solution_from_subset(d, s)
}

pub fn run(spec: &JobSpec) -> Outcome {
    let mut out = Outcome::default();
    let result = match &spec.command {
        Command::Invariant { d, subset, source, eval } => run_invariant(*d, subset, source, *eval, spec.format, &mut out),
        Command::Trace { d, subset, source } => run_trace(*d, subset.as_deref(), source, spec.format, &mut out),
        Command::Esystem { d, subset } => run_esystem(*d, subset.as_deref(), spec.format, &mut out),
        Command::Verify { suite, seed, count } => run_verify(*suite, *seed, *count, spec.format, &mut out),
        Command::Adelic { chain, subset, braid } => run_adelic(chain, subset, braid, &mut out),
    };
    if let Err(e) = result {
        out.code = out.code.max(exit_code(&e));
        let _ = writeln!(out.stderr, "error: {e}");
    }
    out
}

/// Evaluates `f` on every braid of the source. Corpus records run in
/// parallel; results come back in input order.
fn for_each_braid<F>(source: &BraidSource, out: &mut Outcome, f: F) -> Result<Vec<(String, Value, String)>, Error>
where
    F: Fn(&BraidWord) -> Result<(Value, String), Error> + Sync,
{
    match source {
        BraidSource::Inline(w) => {
            let b = parse_braid(w)?;
            let (v, t) = f(&b)?;
            Ok(vec![(b.to_string(), v, t)])
        }
        BraidSource::Corpus { path, text } => {
            let records = parse_corpus(text);
            let results: Vec<_> = records
                .par_iter()
                .map(|r| r.braid.clone().and_then(|b| f(&b).map(|res| (b, res))))
                .collect();
            let mut rows = Vec::new();
            for (r, res) in records.iter().zip(results) {
                match res {
                    Ok((_, (v, t))) => rows.push((r.name.clone(), v, t)),
                    Err(e) => {
                        out.code = out.code.max(exit_code(&e));
                        let _ = writeln!(out.stderr, "{}:{}: {}: {e}", path.display(), r.line, r.name);
                    }
                }
            }
            Ok(rows)
        }
    }
}

fn emit_rows(rows: Vec<(String, Value, String)>, source: &BraidSource, format: Format, out: &mut Outcome) {
    match (format, source) {
        (Format::Text, _) => {
            for (name, _, text) in rows {
                match source {
                    BraidSource::Inline(_) => out.stdout.push_str(&text),
                    BraidSource::Corpus { .. } => {
                        let _ = write!(out.stdout, "{name}\t{text}");
                    }
                }
                out.stdout.push('\n');
            }
        }
        (Format::Json, BraidSource::Inline(_)) => {
            let (_, v, _) = rows.into_iter().next().expect("one row");
            out.stdout.push_str(&pretty(&v));
        }
        (Format::Json, BraidSource::Corpus { .. }) => {
            let arr: Vec<Value> = rows
                .into_iter()
                .map(|(name, mut v, _)| {
                    v["name"] = Value::String(name);
                    v
                })
                .collect();
            out.stdout.push_str(&pretty(&Value::Array(arr)));
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn complex_string(c: Complex64) -> String {
    format!("{c}")
}

fn run_invariant(
    d: u32,
    subset: &[u32],
    source: &BraidSource,
    eval: Option<(Complex64, Complex64)>,
    format: Format,
    out: &mut Outcome,
) -> Result<(), Error> {
    let sol = solution(d, subset)?;
    let rows = for_each_braid(source, out, |b| {
        let v = delta_invariant(&sol, b)?;
        let mut j = json!({
            "braid": b.to_string(),
            "d": d,
            "subset": sol.subset(),
            "invariant": v.to_json(),
        });
        let mut text = v.to_string();
        if let Some((u, z)) = eval {
            let c = v.eval(u, z);
            j["approximate"] = json!({
                "u": complex_string(u),
                "z": complex_string(z),
                "value": complex_string(c),
            });
            let _ = write!(text, "\napproximate at u={}, z={}: {}", complex_string(u), complex_string(z), complex_string(c));
        }
        Ok((j, text))
    })?;
    emit_rows(rows, source, format, out);
    Ok(())
}

fn run_trace(d: u32, subset: Option<&[u32]>, source: &BraidSource, format: Format, out: &mut Outcome) -> Result<(), Error> {
    check_subset(d, subset.unwrap_or(&[]))?;
    let sol = subset.map(|s| solution(d, s)).transpose()?;
    let rows = for_each_braid(source, out, |b| {
        let t = trace_of_braid(d, b, sol.as_ref())?;
        let kind = match t {
            TraceValue::Generic(_) => "generic",
            TraceValue::Specialized(_) => "specialized",
        };
        let mut j = json!({ "braid": b.to_string(), "d": d, "kind": kind, "trace": t.to_string() });
        if let Some(s) = &sol {
            j["subset"] = json!(s.subset());
        }
        Ok((j, t.to_string()))
    })?;
    emit_rows(rows, source, format, out);
    Ok(())
}

fn run_esystem(d: u32, subset: Option<&[u32]>, format: Format, out: &mut Outcome) -> Result<(), Error> {
    if d > 20 && subset.is_none() {
        return Err(Error::Invalid(format!("enumeration is limited to d <= 20, got {d}")));
    }
    let subsets = match subset {
        Some(s) => vec![s.to_vec()],
        None => {
            check_subset(d, &[])?;
            enumerate_subsets(d)
        }
    };
    let mut entries = Vec::new();
    for s in &subsets {
        let sol = solution(d, s)?;
        let ok = verify_solution(d, sol.values());
        let values: Vec<String> = sol.values().iter().map(|v| v.to_string()).collect();
        let coords: Vec<Vec<String>> = sol.values().iter().map(|v| v.coeff_strings()).collect();
        match format {
            Format::Text => {
                let _ = writeln!(
                    out.stdout,
                    "{}  zeta = {}  x = ({})  {}",
                    sol,
                    rational_string(&sol.zeta()),
                    values.join(", "),
                    if ok { "verified" } else { "FAILED" }
                );
            }
            Format::Json => entries.push(json!({
                "subset": sol.subset(),
                "zeta": rational_string(&sol.zeta()),
                "values": coords,
                "verified": ok,
            })),
        }
        if !ok {
            return Err(Error::Coherence(format!("{sol} fails the E-system")));
        }
    }
    if format == Format::Json {
        out.stdout.push_str(&pretty(&json!({ "d": d, "solutions": entries })));
    }
    Ok(())
}

fn run_verify(suite: Suite, seed: u64, count: usize, format: Format, out: &mut Outcome) -> Result<(), Error> {
    let mut rng = SampleRng::seed_from_u64(seed);
    let mut reports: Vec<(&str, SuiteReport)> = Vec::new();
    let want = |s: Suite| suite == s || suite == Suite::All;
    let pairs = suites::standard_pairs();

    if want(Suite::Relations) {
        let mut r = SuiteReport::default();
        for d in 1..=3 {
            for n in 2..=3 {
                r.merge(suites::relations(d, n));
                r.merge(suites::powers(d, n, -4..=4));
            }
        }
        reports.push(("relations", r));
    }
    if want(Suite::Esystem) {
        let r = suites::esystem(6, &[(7, count), (8, count)], &mut rng);
        reports.push(("esystem", r));
    }
    if want(Suite::Markov) {
        let mut r = SuiteReport::default();
        for sol in &pairs {
            r.merge(suites::markov(sol, count, count, &mut rng));
        }
        reports.push(("markov", r));
    }
    if want(Suite::Skein) {
        let mut r = SuiteReport::default();
        for sol in &pairs {
            r.merge(suites::skein(sol, count, &mut rng));
        }
        r.merge(suites::homflypt(count, &mut rng));
        reports.push(("skein", r));
    }
    if want(Suite::AdelicCoherence) {
        let mut r = SuiteReport::default();
        for c in ["1,2", "2,4", "3,6", "2,6,12"] {
            let chain: DivisorChain = c.parse()?;
            r.merge(suites::adelic_diagrams(&chain, count, &mut rng));
        }
        r.merge(suites::lift_transitivity(12));
        r.merge(suites::adelic_markov(&"2,4".parse()?, count, &mut rng));
        reports.push(("adelic-coherence", r));
    }

    let failed = reports.iter().any(|(_, r)| !r.ok());
    match format {
        Format::Text => {
            let _ = writeln!(out.stdout, "seed {seed}, count {count}");
            for (name, r) in &reports {
                let status = if r.ok() { "ok" } else { "FAILED" };
                let _ = writeln!(out.stdout, "{name}: {} checks, {} failures, {status}", r.checks, r.failures.len());
                for f in &r.failures {
                    let _ = writeln!(out.stdout, "  {f}");
                }
            }
        }
        Format::Json => {
            let arr: Vec<Value> = reports
                .iter()
                .map(|(name, r)| json!({ "suite": name, "checks": r.checks, "failures": r.failures }))
                .collect();
            out.stdout.push_str(&pretty(&json!({ "seed": seed, "count": count, "suites": arr })));
        }
    }
    if failed {
        return Err(Error::Coherence("verification suite reported failures".into()));
    }
    Ok(())
}

fn run_adelic(chain: &DivisorChain, subset: &[u32], braid: &str, out: &mut Outcome) -> Result<(), Error> {
    check_subset(chain.first(), subset)?;
    let b = parse_braid(braid)?;
    let values = adelic_delta(chain, subset, &b)?;
    let mut arr = Vec::new();
    for (&d, v) in chain.entries().iter().zip(&values) {
        let s = lift_subset(chain.first(), d, subset)?;
        let mut j = json!({ "d": d, "subset": subset_string(d, &s), "invariant": v.to_json() });
        j["braid"] = Value::String(b.to_string());
        arr.push(j);
    }
    out.stdout.push_str(&pretty(&Value::Array(arr)));
    Ok(())
}
