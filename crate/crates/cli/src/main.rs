//! `fnsplit`: presentation export, action matrices, abelianization and
//! integer obstruction checks for pure braid groups of non-orientable surfaces.
//!
//! Exit codes: 0 success, 1 invalid arguments, 2 a result failed re-verification.

use std::fmt::Write as _;
use std::io::Write as _;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use fnsplit_core::action::generator_action;
use fnsplit_core::intlinalg::CertificateKind;
use fnsplit_core::kernel::KernelBasis;
use fnsplit_core::obstruction::{check_consequences, check_splitting_with, Outcome, Verdict};
use fnsplit_core::presentation::{
    abelianization, build_presentation, to_document, to_text, FamilySet,
};
use fnsplit_core::report::bigint_value;
use fnsplit_core::words::{Alphabet, GeneratorId};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

// stdout write errors (a closed pipe) are ignored
macro_rules! out {
    ($($t:tt)*) => {{
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

const SCHEMA: &str = "fnsplit/v1";
const SCAN_FORMAT_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "fnsplit",
    version,
    about = "Integer splitting obstructions for surface pure braid groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Export the presentation of P_n(N_g).
    Presentation {
        #[command(flatten)]
        group: Group,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the action matrix of one generator on the abelianized kernel.
    Action {
        #[command(flatten)]
        group: Group,
        /// `B[i,j]` or `r[k,l]`.
        #[arg(long)]
        generator: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Invariant factors of the abelianization of P_n(N_g).
    Abelianize {
        #[command(flatten)]
        group: Group,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide whether a section survives modulo the kernel commutator.
    Check {
        #[command(flatten)]
        group: Group,
        /// Relation families to include, a subset of `abcd`.
        #[arg(long, default_value = "abcd")]
        families: String,
        /// Also write the structured verdict document here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the intermediate identities implied by the constraint system.
    Consequences {
        #[command(flatten)]
        group: Group,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check every (n, g) in a rectangle.
    Scan {
        /// Inclusive range `A..B` (or a single value).
        #[arg(long)]
        n: Span,
        /// Inclusive range `C..D` (or a single value).
        #[arg(long)]
        g: Span,
        /// Also write the structured report here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Omit wall times so the report is byte-for-byte reproducible.
        #[arg(long)]
        no_timings: bool,
    },
}

#[derive(Args, Debug)]
struct Group {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    g: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Debug)]
struct Span(RangeInclusive<usize>);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad bound {t:?}: {e}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b)?),
            None => (num(s)?, num(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(Span(lo..=hi))
    }
}

enum Failure {
    /// Exit 1.
    Usage(String),
    /// Exit 2.
    Invariant(String),
}

type CliResult = Result<(), Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    ExitCode::from(run(std::env::args_os()))
}

fn run<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            if !e.use_stderr() {
                return 0;
            }
            if !e.to_string().contains("Usage:") {
                eprintln!("\n{}", Cli::command().render_usage());
            }
            return 1;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("invariant violation: {msg}");
            2
        }
    }
}

fn dispatch(cmd: Command) -> CliResult {
    match cmd {
        Command::Presentation { group, format } => presentation(group, format),
        Command::Action {
            group,
            generator,
            format,
        } => action(group, &generator, format),
        Command::Abelianize { group, format } => abelianize(group, format),
        Command::Check {
            group,
            families,
            out,
            format,
        } => check(group, &families, out.as_deref(), format),
        Command::Consequences { group, format } => consequences(group, format),
        Command::Scan {
            n,
            g,
            out,
            format,
            no_timings,
        } => scan(n.0, g.0, out.as_deref(), format, no_timings),
    }
}

fn emit(doc: &Value) {
    outln!(
        "{}",
        serde_json::to_string_pretty(doc).expect("json values serialize")
    );
}

fn write_out(path: &Path, doc: &Value) -> CliResult {
    let body = serde_json::to_string_pretty(doc).expect("json values serialize") + "\n";
    std::fs::write(path, body).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn presentation(Group { n, g }: Group, format: Format) -> CliResult {
    let p = build_presentation(n, g).map_err(usage)?;
    match format {
        Format::Text => out!("{}", to_text(&p)),
        Format::Structured => {
            let mut doc = serde_json::to_value(to_document(&p)).expect("document serializes");
            doc["schema"] = json!(SCHEMA);
            emit(&doc);
        }
    }
    Ok(())
}

fn action(Group { n, g }: Group, generator: &str, format: Format) -> CliResult {
    let alphabet = Alphabet::new(n, g).map_err(usage)?;
    let gen = GeneratorId::parse(alphabet, generator).map_err(usage)?;
    let basis = KernelBasis::new(n, g).map_err(usage)?;
    let m = generator_action(&gen);
    match format {
        Format::Text => {
            outln!(
                "action of {gen} on K/H of P_{}(N_{g}), det {}",
                n + 1,
                m.determinant()
            );
            out!("{}", m.render(&basis));
        }
        Format::Structured => {
            let mat = m.matrix();
            let rows: Vec<Vec<Value>> = (0..mat.rows())
                .map(|r| mat.row(r).iter().map(bigint_value).collect())
                .collect();
            emit(&json!({
                "schema": SCHEMA,
                "kind": "action",
                "n": n,
                "g": g,
                "generator": gen.to_string(),
                "basis": basis.labels(),
                "matrix": rows,
                "determinant": bigint_value(&m.determinant()),
            }));
        }
    }
    Ok(())
}

fn abelianize(Group { n, g }: Group, format: Format) -> CliResult {
    let p = build_presentation(n, g).map_err(usage)?;
    let ab = abelianization(&p);
    match format {
        Format::Text => outln!("H_1(P_{n}(N_{g})) = {ab}"),
        Format::Structured => emit(&json!({
            "schema": SCHEMA,
            "kind": "abelianization",
            "n": n,
            "g": g,
            "free_rank": ab.free_rank,
            "torsion": ab.torsion.iter().map(bigint_value).collect::<Vec<_>>(),
            "group": ab.to_string(),
        })),
    }
    Ok(())
}

fn verdict_text(v: &Verdict) -> String {
    let s = &v.system;
    let [a, b, c, d] = s.family_rows();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "P_{}(N_{}) -> P_{}(N_{}): {}",
        v.n + 1,
        v.g,
        v.n,
        v.g,
        v.tag()
    );
    let _ = writeln!(
        out,
        "families {}: {} unknowns, {} rows (a {a}, b {b}, c {c}, d {d})",
        s.families,
        s.unknowns.len(),
        s.rows()
    );
    match &v.outcome {
        Outcome::Unobstructed(x) => {
            let nonzero: Vec<String> = s
                .unknowns
                .iter()
                .zip(x)
                .filter(|(_, v)| **v != Default::default())
                .map(|(u, v)| format!("{u} = {v}"))
                .collect();
            let _ = writeln!(out, "witness: {} nonzero of {}", nonzero.len(), x.len());
            for line in nonzero {
                let _ = writeln!(out, "  {line}");
            }
        }
        Outcome::Obstructed(cert) => {
            let what = match &cert.kind {
                CertificateKind::Divisibility {
                    pivot, denominator, ..
                } => {
                    format!("combination has integer coefficients but right-hand side {} (denominator {denominator} at pivot {pivot})", cert.combined_rhs(&s.b))
                }
                CertificateKind::InconsistentRow { row } => {
                    format!(
                        "combination cancels every unknown but not the right-hand side (row {row})"
                    )
                }
            };
            let _ = writeln!(
                out,
                "certificate over {} rows: {what}",
                cert.multipliers.len()
            );
        }
    }
    let dg = &v.diagnostics;
    let _ = writeln!(out, "rationally consistent: {}", dg.rationally_consistent);
    for (name, f) in [("Delta", &dg.delta), ("L", &dg.l)] {
        if let Some(f) = f {
            let forced = f
                .forced
                .as_ref()
                .map_or("free".to_string(), |q| q.to_string());
            let _ = writeln!(out, "{name} = {} forced to {forced}", f.form);
        }
    }
    let _ = writeln!(out, "verified: {}", v.verify());
    out
}

fn check(Group { n, g }: Group, families: &str, out: Option<&Path>, format: Format) -> CliResult {
    let fams = FamilySet::parse(families).ok_or_else(|| {
        usage(format!(
            "families must be a nonempty subset of abcd, got {families:?}"
        ))
    })?;
    let v = check_splitting_with(n, g, fams).map_err(usage)?;
    let doc = v.to_json();
    if let Some(path) = out {
        write_out(path, &doc)?;
    }
    match format {
        Format::Text => out!("{}", verdict_text(&v)),
        Format::Structured => emit(&doc),
    }
    if !v.verify() {
        return Err(Failure::Invariant(format!(
            "the {} outcome for (n, g) = ({n}, {g}) failed re-verification",
            v.tag()
        )));
    }
    Ok(())
}

fn consequences(Group { n, g }: Group, format: Format) -> CliResult {
    let r = check_consequences(n, g).map_err(usage)?;
    match format {
        Format::Text => {
            outln!(
                "P_{n}(N_{g}): rationally consistent {}",
                r.rationally_consistent
            );
            for c in &r.consequences {
                let implied = c.instances.iter().filter(|i| i.implication.implied).count();
                let mark = if c.holds() { "ok" } else { "FAILS" };
                outln!(
                    "{mark:5} {:26} {implied}/{} instances  {}",
                    c.name,
                    c.instances.len(),
                    c.statement
                );
            }
            for (name, eq) in r.failures() {
                outln!("not implied ({name}): {eq}");
            }
        }
        Format::Structured => emit(&r.to_json()),
    }
    Ok(())
}

#[derive(Serialize)]
struct ScanRow {
    n: usize,
    g: usize,
    verdict: &'static str,
    unknowns: usize,
    rows: usize,
    verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<f64>,
}

#[derive(Serialize)]
struct ScanReport {
    schema: &'static str,
    kind: &'static str,
    format_version: u32,
    rows: Vec<ScanRow>,
}

fn scan_threads() -> Result<Option<usize>, Failure> {
    match std::env::var("FNSPLIT_THREADS") {
        Err(std::env::VarError::NotPresent) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(t) if t > 0 => Ok(Some(t)),
            _ => Err(usage(format!(
                "FNSPLIT_THREADS must be a positive integer, got {s:?}"
            ))),
        },
        Err(e) => Err(usage(format!("FNSPLIT_THREADS: {e}"))),
    }
}

fn scan(
    ns: RangeInclusive<usize>,
    gs: RangeInclusive<usize>,
    out: Option<&Path>,
    format: Format,
    no_timings: bool,
) -> CliResult {
    if *ns.start() < 1 || *gs.start() < 2 {
        return Err(usage(format!(
            "scan needs n >= 1 and g >= 2, got n {ns:?}, g {gs:?}"
        )));
    }
    let pairs: Vec<(usize, usize)> = ns.flat_map(|n| gs.clone().map(move |g| (n, g))).collect();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = scan_threads()? {
        pool = pool.num_threads(t);
    }
    let pool = pool
        .build()
        .map_err(|e| Failure::Invariant(format!("thread pool: {e}")))?;

    // par_iter().map().collect() keeps input order
    let rows: Vec<ScanRow> = pool.install(|| {
        pairs
            .par_iter()
            .map(|&(n, g)| {
                let t = Instant::now();
                let v = check_splitting_with(n, g, FamilySet::ALL).expect("range validated above");
                let verified = v.verify();
                let ms = t.elapsed().as_secs_f64() * 1e3;
                ScanRow {
                    n,
                    g,
                    verdict: v.tag(),
                    unknowns: v.system.unknowns.len(),
                    rows: v.system.rows(),
                    verified,
                    wall_time_ms: (!no_timings).then_some(ms),
                }
            })
            .collect()
    });

    let report = ScanReport {
        schema: SCHEMA,
        kind: "scan",
        format_version: SCAN_FORMAT_VERSION,
        rows,
    };
    let doc = serde_json::to_value(&report).expect("report serializes");
    if let Some(path) = out {
        write_out(path, &doc)?;
    }
    match format {
        Format::Text => {
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(
                stdout,
                "{:>3} {:>3}  {:12} {:>8} {:>8}  {:8}",
                "n", "g", "verdict", "unknowns", "rows", "verified"
            );
            for r in &report.rows {
                let time = r
                    .wall_time_ms
                    .map_or(String::new(), |ms| format!("  {ms:.1} ms"));
                let _ = writeln!(
                    stdout,
                    "{:>3} {:>3}  {:12} {:>8} {:>8}  {:8}{time}",
                    r.n, r.g, r.verdict, r.unknowns, r.rows, r.verified
                );
            }
        }
        Format::Structured => emit(&doc),
    }
    let bad: Vec<String> = report
        .rows
        .iter()
        .filter(|r| !r.verified)
        .map(|r| format!("({}, {})", r.n, r.g))
        .collect();
    if !bad.is_empty() {
        return Err(Failure::Invariant(format!(
            "outcomes failed re-verification at {}",
            bad.join(", ")
        )));
    }
    Ok(())
}
