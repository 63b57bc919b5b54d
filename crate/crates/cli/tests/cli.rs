use std::path::PathBuf;
use std::process::Command;

use nomsig_adequacy::corpus_dir;

fn fol() -> PathBuf {
    corpus_dir().join("fol.nlf")
}

fn nomsig(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_nomsig"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn with_fol<'a>(rest: &[&'a str], fol: &'a str) -> Vec<&'a str> {
    let mut v = vec!["--sig", fol];
    v.extend_from_slice(rest);
    v
}

#[test]
fn infer_examples() {
    let f = fol();
    let f = f.to_str().unwrap();
    let (code, out, _) = nomsig(&with_fol(
        &["--ctx", "", "infer", "imp_i(bot,bot,[h:D(bot)]h)"],
        f,
    ));
    assert_eq!((code, out.as_str()), (0, "D(imp(bot,bot))\n"));
    let (code, out, _) = nomsig(&with_fol(&["--ctx", "a:Term", "infer", "a"], f));
    assert_eq!((code, out.as_str()), (0, "Term\n"));
    let (code, _, err) = nomsig(&with_fol(&["infer", "imp_i(bot)"], f));
    assert_eq!(code, 1);
    assert!(err.contains("error[arity-mismatch] (fits)"), "{err}");
}

#[test]
fn check_command() {
    let f = fol();
    let f = f.to_str().unwrap();
    assert_eq!(
        nomsig(&with_fol(&["check", "bot", "--sort", "Form"], f)).0,
        0
    );
    assert_eq!(
        nomsig(&with_fol(&["check", "bot", "--sort", "Term"], f)).0,
        1
    );
    assert_eq!(
        nomsig(&with_fol(&["check", "bot", "--sort", "Term("], f)).0,
        2
    );
}

#[test]
fn alpha_examples() {
    assert_eq!(nomsig(&["alpha", "[a:Term]a", "[b:Term]b"]).0, 0);
    let (code, _, err) = nomsig(&["alpha", "[a:Term]b", "[b:Term]a"]);
    assert_eq!(code, 1);
    assert!(err.contains("not alpha-equivalent"));
    assert_eq!(nomsig(&["alpha", "X", "X"]).0, 2);
}

#[test]
fn fresh_examples() {
    let f = fol();
    let f = f.to_str().unwrap();
    assert_eq!(nomsig(&["fresh", "a", "[a:Term]a"]).0, 0);
    assert_eq!(nomsig(&with_fol(&["fresh", "a", "succ(a)"], f)).0, 1);
    assert_eq!(nomsig(&["fresh", "a", "[a:Term"]).0, 2);
}

#[test]
fn check_sig_examples() {
    let f = fol();
    let (code, out, _) = nomsig(&["check-sig", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.ends_with("0 error(s)\n"));

    let dir = tempfile::tempdir().unwrap();
    let dup = dir.path().join("dup.nlf");
    let text = std::fs::read_to_string(&f).unwrap() + "\nsort Form;\n";
    std::fs::write(&dup, text).unwrap();
    let (code, out, _) = nomsig(&["check-sig", dup.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("error[duplicate-declaration]"), "{out}");

    assert_eq!(nomsig(&["check-sig", "/no/such/file.nlf"]).0, 2);
}

#[test]
fn derivation_output_replays() {
    let f = fol();
    let f = f.to_str().unwrap();
    let (code, out, _) = nomsig(&with_fol(
        &["--derivation", "infer", "imp_i(bot,bot,[h:D(bot)]h)"],
        f,
    ));
    assert_eq!(code, 0);
    let d: nomsig_core::Derivation = serde_json::from_str(&out).unwrap();
    assert_eq!(d.rule, "constr");
    let sig = nomsig_adequacy::load("fol").unwrap();
    assert_eq!(nomsig_core::check::replay(&sig, &d).unwrap(), d.size());
}

#[test]
fn run_corpus() {
    let (code, out, _) = nomsig(&["run-corpus", corpus_dir().to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with(" 0 failed\n"));

    let dir = tempfile::tempdir().unwrap();
    let (code, _, err) = nomsig(&["run-corpus", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(err.contains("warning"));

    for entry in std::fs::read_dir(corpus_dir()).unwrap() {
        let p = entry.unwrap().path();
        std::fs::copy(&p, dir.path().join(p.file_name().unwrap())).unwrap();
    }
    let cases = dir.path().join("fol.cases");
    let text = std::fs::read_to_string(&cases)
        .unwrap()
        .replacen("OK ", "FAIL ", 1);
    std::fs::write(&cases, text).unwrap();
    let (code, out, _) = nomsig(&["run-corpus", dir.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.ends_with(" 1 failed\n"), "{out}");

    assert_eq!(nomsig(&["run-corpus", "/no/such/dir"]).0, 2);
}

#[test]
fn eigenvariable_counterparts_are_accepted() {
    let f = fol();
    let f = f.to_str().unwrap();
    let (code, out, _) = nomsig(&with_fol(
        &[
            "--ctx",
            "x:Term, h:D(eq(x,zero))",
            "infer",
            "ind([y:Term] eq(x,zero), h, [z:Term][k:D(eq(x,zero))] k, zero)",
        ],
        f,
    ));
    assert_eq!((code, out.as_str()), (0, "D(eq(x,zero))\n"));
    let (code, out, _) = nomsig(&with_fol(
        &[
            "--ctx",
            "x:Term",
            "infer",
            "forall_i([y:Term] eq(x,x), [z:Term] rho(x))",
        ],
        f,
    ));
    assert_eq!((code, out.as_str()), (0, "D(forall([y:Term] eq(x,x)))\n"));
}
