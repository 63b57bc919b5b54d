//! `nomsig`: check nominal signatures and sorting judgments from the shell.
//!
//! Exit status: 0 when the judgment holds, 1 when the input is well formed
//! but the answer is negative (including sorting errors), 2 for usage, parse
//! and I/O errors.

mod corpus;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nomsig_core::check::{check_signature, check_signature_report, CheckedSignature};
use nomsig_core::surface::{
    parse_atom, parse_context, parse_sort, parse_source, parse_term, parse_term_unchecked,
};
use nomsig_core::syntax::{AtomContext, Telescope, Term};
use nomsig_core::{alpha_eq, is_fresh, SortingError};

#[derive(Parser)]
#[command(
    name = "nomsig",
    version,
    about = "Checker for dependently sorted nominal signatures"
)]
struct Cli {
    /// Signature file (.nlf)
    #[arg(long, global = true)]
    sig: Option<PathBuf>,
    /// Atom context, e.g. "a:Term, h:D(bot)"
    #[arg(long, global = true, default_value = "")]
    ctx: String,
    /// Print the derivation tree as JSON instead of the plain answer
    #[arg(long, global = true)]
    derivation: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every declaration of a signature
    CheckSig { file: Option<PathBuf> },
    /// Infer the sort of a ground term
    Infer { term: String },
    /// Check a ground term against a sort
    Check {
        term: String,
        #[arg(long)]
        sort: String,
    },
    /// Decide alpha-equivalence of two ground terms
    Alpha { left: String, right: String },
    /// Decide whether an atom is fresh for a term
    Fresh { atom: String, term: String },
    /// Run every .nlf/.cases pair in a directory
    RunCorpus { dir: PathBuf },
}

/// Exit code plus a message for stderr.
pub struct Failure(pub u8, pub String);

type Outcome = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure(2, msg.into())
}

fn sorting(e: &SortingError) -> Failure {
    Failure(1, render_error(e))
}

pub fn render_error(e: &SortingError) -> String {
    format!("error[{}] {e}", e.class())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_signature(path: Option<&Path>) -> Result<CheckedSignature, Failure> {
    let Some(path) = path else {
        return Ok(CheckedSignature::empty());
    };
    let text = read(path)?;
    let src = parse_source(&text).map_err(|e| usage(format!("{}:{e}", path.display())))?;
    check_signature(&src.signature())
        .map_err(|e| usage(format!("{}: ill-formed signature: {e}", path.display())))
}

fn load_context(sig: &CheckedSignature, ctx: &str) -> Result<AtomContext, Failure> {
    let gamma = parse_context(ctx, sig.signature()).map_err(|e| usage(format!("--ctx: {e}")))?;
    sig.check_context(&Telescope::empty(), &gamma)
        .map_err(|e| sorting(&e))?;
    Ok(gamma)
}

/// Terms for `alpha` and `fresh`, which need no sorts: without `--sig`,
/// constructors need not be declared.
fn parse_untyped(path: Option<&Path>, text: &str, what: &str) -> Result<Term, Failure> {
    let parsed = match path {
        Some(_) => parse_term(text, load_signature(path)?.signature()),
        None => parse_term_unchecked(text),
    };
    parsed.map_err(|e| usage(format!("{what}: {e}")))
}

fn print_json(d: &nomsig_core::Derivation) -> Outcome {
    let s = serde_json::to_string_pretty(d).map_err(|e| usage(e.to_string()))?;
    println!("{s}");
    Ok(())
}

fn check_sig(file: &Path) -> Outcome {
    let text = read(file)?;
    let src = parse_source(&text).map_err(|e| usage(format!("{}:{e}", file.display())))?;
    let report = check_signature_report(&src.signature());
    let mut failures = 0;
    for (decl, (name, result)) in src.decls.iter().zip(&report.results) {
        match result {
            Ok(()) => println!("ok    {name}"),
            Err(e) => {
                failures += 1;
                println!(
                    "error {name} ({}:{}:{})",
                    file.display(),
                    decl.line,
                    decl.col
                );
                for line in render_error(e).lines() {
                    println!("      {line}");
                }
            }
        }
    }
    println!(
        "{} declaration(s), {failures} error(s)",
        report.results.len()
    );
    if failures == 0 {
        Ok(())
    } else {
        Err(Failure(1, String::new()))
    }
}

fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::CheckSig { file } => {
            let file = file
                .as_deref()
                .or(cli.sig.as_deref())
                .ok_or_else(|| usage("check-sig: no signature file given"))?;
            check_sig(file)
        }
        Command::Infer { term } => {
            let sig = load_signature(cli.sig.as_deref())?;
            let gamma = load_context(&sig, &cli.ctx)?;
            let t = parse_term(term, sig.signature()).map_err(|e| usage(format!("term: {e}")))?;
            if cli.derivation {
                let (_, d) = sig.derive_sort(&gamma, &t).map_err(|e| sorting(&e))?;
                print_json(&d)
            } else {
                let s = sig
                    .infer_sort(&Telescope::empty(), &gamma, &t)
                    .map_err(|e| sorting(&e))?;
                println!("{s}");
                Ok(())
            }
        }
        Command::Check { term, sort } => {
            let sig = load_signature(cli.sig.as_deref())?;
            let gamma = load_context(&sig, &cli.ctx)?;
            let t = parse_term(term, sig.signature()).map_err(|e| usage(format!("term: {e}")))?;
            let s = parse_sort(sort, sig.signature()).map_err(|e| usage(format!("--sort: {e}")))?;
            sig.check_sort(&Telescope::empty(), &gamma, &s)
                .map_err(|e| sorting(&e))?;
            if cli.derivation {
                let d = sig.derive_check(&gamma, &t, &s).map_err(|e| sorting(&e))?;
                print_json(&d)
            } else {
                sig.check_term(&Telescope::empty(), &gamma, &t, &s)
                    .map_err(|e| sorting(&e))?;
                println!("ok");
                Ok(())
            }
        }
        Command::Alpha { left, right } => {
            let l = parse_untyped(cli.sig.as_deref(), left, "left")?;
            let r = parse_untyped(cli.sig.as_deref(), right, "right")?;
            match alpha_eq(&l, &r) {
                Err(e) => Err(usage(e.to_string())),
                Ok(true) => {
                    println!("alpha-equivalent");
                    Ok(())
                }
                Ok(false) => Err(Failure(1, format!("{l} and {r} are not alpha-equivalent"))),
            }
        }
        Command::Fresh { atom, term } => {
            let a = parse_atom(atom).map_err(|e| usage(format!("atom: {e}")))?;
            let t = parse_untyped(cli.sig.as_deref(), term, "term")?;
            if is_fresh(&a, &t) {
                println!("{a} # {t}");
                Ok(())
            } else {
                Err(Failure(1, format!("{a} occurs free in {t}")))
            }
        }
        Command::RunCorpus { dir } => corpus::run_corpus(dir),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            if !msg.is_empty() {
                eprintln!("{msg}");
            }
            ExitCode::from(code)
        }
    }
}
