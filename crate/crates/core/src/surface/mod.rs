//! Textual `.nlf` format for signatures, contexts, terms, sorts and
//! judgments.
//!
//! Identifier classification inside terms: names declared with `op` are term
//! constructors, other names starting with an uppercase letter are parameters,
//! and the remaining lowercase names are atoms. Sort positions accept only
//! names declared with `sort`. Atoms produced by the fresh-name supply are
//! written `name'index`.

mod lexer;
mod parser;
mod print;

use std::path::PathBuf;

use thiserror::Error;

use crate::syntax::{Atom, AtomContext, Declaration, Signature, Sort, Term};
use parser::{Names, Parser};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

/// A declaration together with the position of its leading keyword.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceDecl {
    pub decl: Declaration,
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug)]
pub struct SourceFile {
    pub path: Option<PathBuf>,
    pub text: String,
    pub decls: Vec<SourceDecl>,
}

impl SourceFile {
    pub fn signature(&self) -> Signature {
        Signature::new(self.decls.iter().map(|d| d.decl.clone()).collect())
    }
}

/// The judgment forms that have a textual syntax.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Judgment {
    /// `ctx |- t : s`
    HasSort {
        ctx: AtomContext,
        term: Term,
        sort: Sort,
    },
    /// `ctx |- s sort`
    IsSort { ctx: AtomContext, sort: Sort },
    /// `ctx |- (t1, ..., tn) fits f`
    Fits {
        ctx: AtomContext,
        args: Vec<Term>,
        ctor: String,
    },
    /// `a # t`
    Fresh { atom: Atom, term: Term },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Ok,
    Fail,
}

/// One line of a `.cases` file: `OK|FAIL <judgment>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub line: usize,
    pub expect: Expectation,
    pub judgment: Judgment,
}

pub fn parse_source(text: &str) -> Result<SourceFile, ParseError> {
    parser::parse_source(text)
}

pub fn parse_signature(text: &str) -> Result<Signature, ParseError> {
    Ok(parse_source(text)?.signature())
}

fn parse_with<T>(
    text: &str,
    sig: &Signature,
    f: impl FnOnce(&mut Parser) -> Result<T, ParseError>,
) -> Result<T, ParseError> {
    let mut p = Parser::new(text, 1, Names::of(sig))?;
    let out = f(&mut p)?;
    p.expect_eof()?;
    Ok(out)
}

pub fn parse_term(text: &str, sig: &Signature) -> Result<Term, ParseError> {
    parse_with(text, sig, Parser::term)
}

/// Parses a term without a signature: any applied identifier is a term
/// constructor and any annotation head a sort constructor. Bare lowercase
/// identifiers are atoms, so nullary constructors must be written `k()`.
pub fn parse_term_unchecked(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(text, 1, Names::lenient())?;
    let t = p.term()?;
    p.expect_eof()?;
    Ok(t)
}

pub fn parse_sort(text: &str, sig: &Signature) -> Result<Sort, ParseError> {
    parse_with(text, sig, Parser::sort)
}

/// Comma-separated `atom:datasort` bindings; the empty string is the empty
/// context.
pub fn parse_context(text: &str, sig: &Signature) -> Result<AtomContext, ParseError> {
    parse_with(text, sig, Parser::context)
}

pub fn parse_judgment(text: &str, sig: &Signature) -> Result<Judgment, ParseError> {
    parse_with(text, sig, Parser::judgment)
}

pub fn parse_atom(text: &str) -> Result<Atom, ParseError> {
    parse_with(text, &Signature::default(), |p| {
        let t = p.term()?;
        match t {
            Term::Atom(a) => Ok(a),
            _ => Err(ParseError {
                line: 1,
                col: 1,
                message: format!("`{text}` is not an atom"),
            }),
        }
    })
}

/// Parses a `.cases` file, one judgment per non-blank line.
pub fn parse_cases(text: &str, sig: &Signature) -> Result<Vec<Case>, ParseError> {
    let names = Names::of(sig);
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let mut p = Parser::new(line, i + 1, names.clone())?;
        if let Some(case) = p.case()? {
            out.push(case);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{DataSort, Param};

    const FOL_FRAGMENT: &str = "
        sort Term; sort Form; sort D(_:Form);
        op zero : Term;
        op bot : Form;
        op imp(_:Form, _:Form) : Form;
        op imp_i(P:Form, Q:Form, _:[h:D(P)]D(Q)) : D(imp(P,Q)) / h # Q;
        op forall(_:[x:Term]Form) : Form;
        op forall_e(P:[x:Term]Form, T:Term, _:D(forall(P))) : D(P[T]);
    ";

    fn fol() -> Signature {
        parse_signature(FOL_FRAGMENT).unwrap()
    }

    #[test]
    fn small_signature() {
        let sig = parse_signature("sort Form; op bot() : Form;").unwrap();
        assert_eq!(sig.decls.len(), 2);
        assert_eq!(
            sig.decls[0],
            Declaration::sort("Form", Default::default(), Default::default())
        );
        assert_eq!(sig.decls[1].target, Some(DataSort::constant("Form")));
        assert!(sig.decls[1].telescope.is_empty());
    }

    #[test]
    fn imp_intro_declaration() {
        let sig = fol();
        let d = sig.decls.iter().find(|d| d.name == "imp_i").unwrap();
        assert_eq!(d.telescope.len(), 3);
        assert_eq!(d.fresh.constraints.len(), 1);
        assert_eq!(d.fresh.constraints[0].atom, Atom::new("h"));
        assert_eq!(d.fresh.constraints[0].param, Param::new("Q"));
        assert_eq!(d.telescope.bindings[2].param, Param::anonymous(2));
    }

    #[test]
    fn reserved_words() {
        assert!(parse_signature("sort sort;").is_err());
        assert!(parse_signature("sort Form; op op : Form;").is_err());
    }

    #[test]
    fn forward_reference_is_an_error() {
        let err = parse_signature("op bot : Form; sort Form;").unwrap_err();
        assert_eq!((err.line, err.col), (1, 10));
        assert!(parse_signature("sort Form; op f(_:Form) : Form; op g : G;").is_err());
    }

    #[test]
    fn terms() {
        let sig = fol();
        let t = parse_term("imp_i(bot, bot, [h:D(bot)] h)", &sig).unwrap();
        assert_eq!(
            t,
            Term::app(
                "imp_i",
                vec![
                    Term::constant("bot"),
                    Term::constant("bot"),
                    Term::abs(
                        Atom::new("h"),
                        DataSort::new("D", vec![Term::constant("bot")]),
                        Term::Atom(Atom::new("h"))
                    ),
                ]
            )
        );
        assert!(parse_term("f(", &sig).is_err());
        assert!(parse_term("imp(bot", &sig).is_err());
        assert_eq!(
            parse_term("P[zero, a'3]", &sig).unwrap(),
            Term::Param(
                Param::new("P"),
                vec![Term::constant("zero"), Term::Atom(Atom::indexed("a", 3))]
            )
        );
    }

    #[test]
    fn concretion_only_on_parameters() {
        let sig = fol();
        assert!(parse_term("bot[zero]", &sig).is_err());
        assert!(parse_term("a[zero]", &sig).is_err());
        assert!(parse_term("imp(bot,bot)[zero]", &sig).is_err());
    }

    #[test]
    fn judgments() {
        let sig = fol();
        let j = parse_judgment("a:Term |- [h:D(bot)] h : [k:D(bot)] D(bot)", &sig).unwrap();
        assert!(matches!(j, Judgment::HasSort { .. }));
        let j = parse_judgment("|- D(bot) sort", &sig).unwrap();
        assert!(matches!(j, Judgment::IsSort { .. }));
        let j = parse_judgment("|- (bot, bot) fits imp", &sig).unwrap();
        assert!(matches!(j, Judgment::Fits { ref args, .. } if args.len() == 2));
        let j = parse_judgment("h'1 # bot", &sig).unwrap();
        assert_eq!(
            j,
            Judgment::Fresh {
                atom: Atom::indexed("h", 1),
                term: Term::constant("bot")
            }
        );
    }

    #[test]
    fn cases_file() {
        let sig = fol();
        let text = "-- header\nOK |- bot : Form\n\nFAIL a:Term |- a : Form\n";
        let cases = parse_cases(text, &sig).unwrap();
        assert_eq!(cases.len(), 2);
        assert_eq!(cases[0].line, 2);
        assert_eq!(cases[1].expect, Expectation::Fail);
        let err = parse_cases("OK |- bot : Form\nMAYBE |- bot : Form", &sig).unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn contexts() {
        let sig = fol();
        assert!(parse_context("", &sig).unwrap().is_empty());
        let ctx = parse_context("a:Term, h:D(bot)", &sig).unwrap();
        assert_eq!(ctx.len(), 2);
        assert!(parse_context("a:Term,", &sig).is_err());
    }
}
