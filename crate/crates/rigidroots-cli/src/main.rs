//! `rigidroots` - rigid reflections of W(m) from lattice vectors, and the
//! reduction to reduced roots of the rank-2 Kac-Moody algebra H(m).
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use rigidroots_core::coxeter::{reflection_root_symbolic, CoxeterPresentation};
use rigidroots_core::lattice_words::crossing_word;
use rigidroots_core::rank2_roots::{LatticeVector, RootKind};
use rigidroots_core::reduction::reduce;
use rigidroots_core::verify::{run_check, run_lemmas};

#[derive(Parser)]
#[command(
    name = "rigidroots",
    about = "Rigid reflections of the rank-3 Coxeter groups W(m) and the reduction \
             of lattice vectors to reduced roots of the rank-2 Kac-Moody algebra H(m)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the crossing word of the segment (0,0) -> (a,b)
    Word {
        /// Coxeter label m of W(m)
        #[arg(short)]
        m: u32,
        a: i64,
        b: i64,
        /// Also print the exact matrix of the reflection
        #[arg(long)]
        matrix: bool,
    },
    /// Reduce [a,b] to a reduced root of H(m) with the same reflection
    Reduce {
        #[arg(short)]
        m: u32,
        a: i64,
        b: i64,
        /// Write the reduction trace as JSON to this path
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Print the rigid root beta([a,b]) in the simple-root basis
    Root {
        /// Coxeter label m; omit with --symbolic for generic m
        #[arg(short)]
        m: Option<u32>,
        a: i64,
        b: i64,
        /// Print integer polynomials in x = 2cos(pi/m) instead
        #[arg(long)]
        symbolic: bool,
        /// Write the coordinates (canonical coefficient lists plus decimal
        /// approximations) as JSON to this path
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Batch-verify surjectivity and probe injectivity up to a bound
    Check {
        #[arg(short)]
        m: u32,
        #[arg(long)]
        bound: i64,
        /// Write the verification report as JSON to this path
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Run the word-calculus lemma suites up to a depth
    Lemmas {
        #[arg(short)]
        m: u32,
        #[arg(long)]
        depth: i64,
    },
    /// Render the crossing picture of (0,0) -> (a,b) as SVG
    Svg {
        a: i64,
        b: i64,
        /// Output path
        #[arg(short)]
        out: PathBuf,
        /// Accepted for symmetry with the other commands; the picture
        /// does not depend on m
        #[arg(short)]
        m: Option<u32>,
    },
}

fn usage_error(message: impl Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn positive_vector(a: i64, b: i64) -> Result<LatticeVector, String> {
    let v = LatticeVector::new(a, b);
    if !v.in_positive_lattice() {
        return Err(format!(
            "[{a},{b}] must have positive coprime coordinates"
        ));
    }
    Ok(v)
}

fn cmd_word(m: u32, a: i64, b: i64, matrix: bool) -> ExitCode {
    let run = || -> Result<String, String> {
        if m < 2 {
            return Err(format!("W(m) requires m >= 2, got {m}"));
        }
        let v = positive_vector(a, b)?;
        let word = crossing_word(v).map_err(|e| e.to_string())?;
        let mut out = word.to_string();
        if matrix {
            let p = CoxeterPresentation::w_m(m).map_err(|e| e.to_string())?;
            let mat = p.eval(&word).map_err(|e| e.to_string())?;
            out.push('\n');
            out.push_str(&mat.to_string());
            out.pop(); // matrix Display ends with a newline of its own
        }
        Ok(out)
    };
    match run() {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(e),
    }
}

fn cmd_reduce(m: u32, a: i64, b: i64, json: Option<PathBuf>) -> ExitCode {
    let run = || -> Result<String, String> {
        let v = positive_vector(a, b)?;
        let trace = reduce(v, m).map_err(|e| e.to_string())?;
        let mut out = format!("reduce {} in H({m})\n", trace.start);
        for s in &trace.steps {
            out.push_str(&format!(
                "  {} -> {}  n={} kappa={} branch={}{}{}  Q: {} -> {}\n",
                s.input,
                s.output,
                s.n,
                s.kappa,
                s.branch,
                if s.swapped { " swapped" } else { "" },
                if s.both_valid { " both-valid" } else { "" },
                s.q_before,
                s.q_after
            ));
        }
        let kind = match trace.result_class.kind {
            RootKind::RealRoot => "real",
            RootKind::ImaginaryRoot => "imaginary",
            RootKind::NotRoot => "not a root",
        };
        out.push_str(&format!(
            "result {} ({kind} reduced root, {} steps{})",
            trace.result,
            trace.steps.len(),
            if trace.net_swap_odd { ", net swap parity odd" } else { "" },
        ));
        if let Some(path) = json {
            let body = serde_json::to_string_pretty(&trace).map_err(|e| e.to_string())?;
            std::fs::write(&path, body).map_err(|e| format!("{}: {e}", path.display()))?;
        }
        Ok(out)
    };
    match run() {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(e),
    }
}

fn cmd_root(m: Option<u32>, a: i64, b: i64, symbolic: bool, json: Option<PathBuf>) -> ExitCode {
    let run = || -> Result<String, String> {
        let v = positive_vector(a, b)?;
        let word = crossing_word(v).map_err(|e| e.to_string())?;
        let (text, payload) = if symbolic {
            let coords = reflection_root_symbolic(&word).map_err(|e| e.to_string())?;
            let rendered = coords
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ");
            let payload = serde_json::json!({
                "vector": v,
                "symbolic": true,
                "coords": coords
                    .iter()
                    .map(|c| c.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            });
            (rendered, payload)
        } else {
            let m = m.ok_or("numeric roots need -m (or pass --symbolic)")?;
            let p = CoxeterPresentation::w_m(m).map_err(|e| e.to_string())?;
            let root = p.reflection_root(&word).map_err(|e| e.to_string())?;
            let payload = serde_json::json!({
                "m": m,
                "vector": v,
                "symbolic": false,
                "coords": root.coords(),
            });
            (root.to_string(), payload)
        };
        if let Some(path) = json {
            let body = serde_json::to_string_pretty(&payload).map_err(|e| e.to_string())?;
            std::fs::write(&path, body).map_err(|e| format!("{}: {e}", path.display()))?;
        }
        Ok(text)
    };
    match run() {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(e),
    }
}

fn cmd_check(m: u32, bound: i64, json: Option<PathBuf>) -> ExitCode {
    let report = match run_check(m, bound) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    println!(
        "check m={m} bound={bound}: {} pairs, {} surjectivity failures",
        report.pairs_checked,
        report.surjectivity_failures.len()
    );
    println!(
        "  reduced roots {} -> distinct images {} ({} collisions)",
        report.reduced_roots,
        report.image_size,
        report.collisions.len()
    );
    println!(
        "  both-candidate steps on {} inputs, {} choice mismatches, {:.2}s",
        report.both_choice_events,
        report.both_choice_mismatches.len(),
        report.elapsed_seconds
    );
    for v in &report.surjectivity_failures {
        println!("  FAIL surjectivity at {v}");
    }
    for (x, y) in &report.collisions {
        println!("  collision: {x} and {y} share an image");
    }
    if let Some(path) = json {
        let body = match serde_json::to_string_pretty(&report) {
            Ok(b) => b,
            Err(e) => return usage_error(e),
        };
        if let Err(e) = std::fs::write(&path, body) {
            return usage_error(format!("{}: {e}", path.display()));
        }
    }
    if report.passed() {
        println!("PASS");
        ExitCode::SUCCESS
    } else {
        println!("FAIL");
        ExitCode::from(1)
    }
}

fn cmd_lemmas(m: u32, depth: i64) -> ExitCode {
    let outcome = match run_lemmas(m, depth) {
        Ok(o) => o,
        Err(e) => return usage_error(e),
    };
    for check in &outcome.checks {
        println!(
            "{:24} {} cases, {} failures",
            check.name,
            check.cases,
            check.failures.len()
        );
        for f in &check.failures {
            println!("  FAIL {f}");
        }
    }
    if outcome.passed() {
        println!("PASS");
        ExitCode::SUCCESS
    } else {
        println!("FAIL");
        ExitCode::from(1)
    }
}

fn cmd_svg(a: i64, b: i64, out: PathBuf) -> ExitCode {
    let run = || -> Result<(), String> {
        let v = positive_vector(a, b)?;
        let svg = rigidroots_core::svg::render(v).map_err(|e| e.to_string())?;
        std::fs::write(&out, svg).map_err(|e| format!("{}: {e}", out.display()))?;
        Ok(())
    };
    match run() {
        Ok(()) => {
            println!("wrote {}", out.display());
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Word { m, a, b, matrix } => cmd_word(m, a, b, matrix),
        Command::Reduce { m, a, b, json } => cmd_reduce(m, a, b, json),
        Command::Root { m, a, b, symbolic, json } => cmd_root(m, a, b, symbolic, json),
        Command::Check { m, bound, json } => cmd_check(m, bound, json),
        Command::Lemmas { m, depth } => cmd_lemmas(m, depth),
        Command::Svg { a, b, out, m: _ } => cmd_svg(a, b, out),
    }
}
