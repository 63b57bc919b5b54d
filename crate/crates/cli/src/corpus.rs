use std::fs;
use std::path::Path;

use nomsig_core::check::{check_signature_report, CheckedSignature};
use nomsig_core::is_fresh;
use nomsig_core::surface::{parse_cases, parse_source, Case, Expectation, Judgment};
use nomsig_core::syntax::Telescope;
use rayon::prelude::*;

use crate::{render_error, Failure};

struct Outcome {
    file: String,
    line: usize,
    label: String,
    passed: bool,
    detail: Option<String>,
}

fn holds(sig: &CheckedSignature, j: &Judgment) -> Result<(), String> {
    let tel = Telescope::empty();
    let r = match j {
        Judgment::HasSort { ctx, term, sort } => sig.check_term(&tel, ctx, term, sort),
        Judgment::IsSort { ctx, sort } => sig.check_sort(&tel, ctx, sort),
        Judgment::Fits { ctx, args, ctor } => sig.fits_constructor(ctx, args, ctor).map(drop),
        Judgment::Fresh { atom, term } => {
            return if is_fresh(atom, term) {
                Ok(())
            } else {
                Err(format!("{atom} occurs free in {term}"))
            }
        }
    };
    r.map_err(|e| render_error(&e))
}

fn run_case(file: &str, sig: &CheckedSignature, case: &Case) -> Outcome {
    let verdict = holds(sig, &case.judgment);
    let passed = matches!(
        (case.expect, &verdict),
        (Expectation::Ok, Ok(())) | (Expectation::Fail, Err(_))
    );
    let detail = match (&verdict, passed) {
        (Err(e), false) => Some(e.clone()),
        (Ok(()), false) => Some("judgment holds".to_string()),
        _ => None,
    };
    Outcome {
        file: file.to_string(),
        line: case.line,
        label: case.to_string(),
        passed,
        detail,
    }
}

/// Every `<name>.nlf` in `dir` is checked as an implicit expected-ok case,
/// then the judgments of `<name>.cases`, if present, are run against it.
pub fn run_corpus(dir: &Path) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure(2, format!("{}: {e}", dir.display()));
    let mut names: Vec<String> = fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|entry| entry.ok())
        .filter_map(|entry| {
            let name = entry.file_name().into_string().ok()?;
            name.strip_suffix(".nlf").map(str::to_string)
        })
        .collect();
    names.sort();

    let mut outcomes = Vec::new();
    for name in &names {
        let nlf = format!("{name}.nlf");
        let text = fs::read_to_string(dir.join(&nlf)).map_err(io)?;
        let src = parse_source(&text).map_err(|e| Failure(2, format!("{nlf}:{e}")))?;
        let report = check_signature_report(&src.signature());
        let errors: Vec<String> = report
            .results
            .iter()
            .filter_map(|(n, r)| {
                r.as_ref()
                    .err()
                    .map(|e| format!("{n}: {}", render_error(e)))
            })
            .collect();
        outcomes.push(Outcome {
            file: nlf.clone(),
            line: 0,
            label: "check-sig".to_string(),
            passed: errors.is_empty(),
            detail: (!errors.is_empty()).then(|| errors.join("\n")),
        });

        let cases_name = format!("{name}.cases");
        let cases_path = dir.join(&cases_name);
        if !cases_path.exists() {
            continue;
        }
        let cases_text = fs::read_to_string(&cases_path).map_err(io)?;
        let cases = parse_cases(&cases_text, report.checked.signature())
            .map_err(|e| Failure(2, format!("{cases_name}:{e}")))?;
        let sig = &report.checked;
        outcomes.extend(
            cases
                .par_iter()
                .map(|c| run_case(&cases_name, sig, c))
                .collect::<Vec<_>>(),
        );
    }

    if outcomes.is_empty() {
        eprintln!("warning: no cases found in {}", dir.display());
        println!("0 case(s), 0 failed");
        return Ok(());
    }
    outcomes.sort_by(|a, b| (&a.file, a.line).cmp(&(&b.file, b.line)));
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("{status} {}:{} {}", o.file, o.line, o.label);
        if let Some(d) = &o.detail {
            for line in d.lines() {
                println!("     {line}");
            }
        }
    }
    println!("{} case(s), {failed} failed", outcomes.len());
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure(1, String::new()))
    }
}
