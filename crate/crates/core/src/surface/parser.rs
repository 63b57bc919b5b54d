use std::collections::HashSet;

use super::lexer::{lex, Pos, Tok, Token};
use super::{Case, Expectation, Judgment, ParseError, SourceDecl, SourceFile};
use crate::syntax::{
    Atom, AtomContext, DataSort, Declaration, Freshness, FreshnessContext, Param, Signature, Sort,
    Telescope, Term,
};

const RESERVED: &[&str] = &["sort", "op"];

/// Names known to the parser for identifier classification.
#[derive(Clone, Debug, Default)]
pub(crate) struct Names {
    sorts: HashSet<String>,
    ops: HashSet<String>,
    /// Accept undeclared constructors: applied identifiers are term
    /// constructors, annotation heads are sort constructors.
    lenient: bool,
}

impl Names {
    pub(crate) fn of(sig: &Signature) -> Self {
        let mut names = Names::default();
        for d in &sig.decls {
            names.declare(d);
        }
        names
    }

    pub(crate) fn lenient() -> Self {
        Names {
            lenient: true,
            ..Names::default()
        }
    }

    fn declare(&mut self, d: &Declaration) {
        match d.target {
            None => self.sorts.insert(d.name.clone()),
            Some(_) => self.ops.insert(d.name.clone()),
        };
    }
}

pub(crate) struct Parser {
    toks: Vec<Token>,
    pos: usize,
    names: Names,
}

fn is_param_name(s: &str) -> bool {
    s.chars().next().is_some_and(|c| c.is_ascii_uppercase())
}

impl Parser {
    pub(crate) fn new(text: &str, first_line: usize, names: Names) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: lex(text, first_line)?,
            pos: 0,
            names,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.pos + k).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn here(&self) -> Pos {
        self.toks[self.pos].pos
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, pos: Pos, message: impl Into<String>) -> ParseError {
        ParseError {
            line: pos.line,
            col: pos.col,
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.here(), message)
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        self.error(format!(
            "expected {wanted}, found {}",
            self.peek().describe()
        ))
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    pub(crate) fn expect_eof(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) if RESERVED.contains(&s.as_str()) => Err(self.error(format!(
                "`{s}` is a reserved word and cannot be used as {what}"
            ))),
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => Err(self.unexpected(what)),
        }
    }

    fn index_suffix(&mut self) -> Result<u32, ParseError> {
        if self.eat(&Tok::Quote) {
            match self.bump() {
                Tok::Nat(n) if n > 0 => Ok(n),
                Tok::Nat(_) => Err(self.error("atom index must be positive")),
                _ => Err(self.error("expected an atom index after `'`")),
            }
        } else {
            Ok(0)
        }
    }

    /// An atom written as `name`, `name'k`, `_` or `_'k`.
    fn atom(&mut self) -> Result<Atom, ParseError> {
        let pos = self.here();
        let name = match self.peek().clone() {
            Tok::Underscore => {
                self.bump();
                "_".to_string()
            }
            Tok::Ident(_) => {
                let name = self.ident("an atom")?;
                if is_param_name(&name) {
                    return Err(self.error_at(
                        pos,
                        format!(
                            "`{name}` is a parameter name; atoms start with a lowercase letter"
                        ),
                    ));
                }
                if self.names.ops.contains(&name) {
                    return Err(
                        self.error_at(pos, format!("`{name}` is a term constructor, not an atom"))
                    );
                }
                name
            }
            _ => return Err(self.unexpected("an atom")),
        };
        let index = self.index_suffix()?;
        Ok(Atom::indexed(name, index))
    }

    fn terms_until(&mut self, close: Tok) -> Result<Vec<Term>, ParseError> {
        let mut out = Vec::new();
        if self.eat(&close) {
            return Ok(out);
        }
        loop {
            out.push(self.term()?);
            if self.eat(&Tok::Comma) {
                continue;
            }
            self.expect(close.clone())?;
            return Ok(out);
        }
    }

    fn reject_concretion(&self, head: &str) -> Result<(), ParseError> {
        if *self.peek() == Tok::LBrack {
            Err(self.error(format!(
                "concretion `[..]` applies only to parameters, not to `{head}`"
            )))
        } else {
            Ok(())
        }
    }

    pub(crate) fn term(&mut self) -> Result<Term, ParseError> {
        let pos = self.here();
        match self.peek().clone() {
            Tok::LBrack => {
                self.bump();
                let a = self.atom()?;
                self.expect(Tok::Colon)?;
                let annot = self.data_sort()?;
                self.expect(Tok::RBrack)?;
                let body = self.term()?;
                Ok(Term::abs(a, annot, body))
            }
            Tok::Underscore => {
                let a = self.atom()?;
                self.reject_concretion(&a.to_string())?;
                Ok(Term::Atom(a))
            }
            Tok::Ident(name) => {
                let applied = *self.peek_at(1) == Tok::LParen;
                if self.names.ops.contains(&name) || (self.names.lenient && applied) {
                    self.bump();
                    let args = if self.eat(&Tok::LParen) {
                        self.terms_until(Tok::RParen)?
                    } else {
                        Vec::new()
                    };
                    self.reject_concretion(&name)?;
                    Ok(Term::App(name, args))
                } else if applied {
                    Err(self.error_at(pos, format!("undeclared term constructor `{name}`")))
                } else if is_param_name(&name) {
                    self.bump();
                    let concretions = if self.eat(&Tok::LBrack) {
                        let ts = self.terms_until(Tok::RBrack)?;
                        if ts.is_empty() {
                            return Err(self.error_at(pos, "empty concretion list"));
                        }
                        ts
                    } else {
                        Vec::new()
                    };
                    Ok(Term::Param(Param::new(name), concretions))
                } else {
                    let a = self.atom()?;
                    self.reject_concretion(&a.to_string())?;
                    Ok(Term::Atom(a))
                }
            }
            _ => Err(self.unexpected("a term")),
        }
    }

    pub(crate) fn data_sort(&mut self) -> Result<DataSort, ParseError> {
        let pos = self.here();
        let name = self.ident("a sort constructor")?;
        if !self.names.sorts.contains(&name) && !self.names.lenient {
            return Err(self.error_at(pos, format!("undeclared sort constructor `{name}`")));
        }
        let args = if self.eat(&Tok::LParen) {
            self.terms_until(Tok::RParen)?
        } else {
            Vec::new()
        };
        Ok(DataSort::new(name, args))
    }

    pub(crate) fn sort(&mut self) -> Result<Sort, ParseError> {
        if self.eat(&Tok::LBrack) {
            let a = self.atom()?;
            self.expect(Tok::Colon)?;
            let annot = self.data_sort()?;
            self.expect(Tok::RBrack)?;
            let body = self.sort()?;
            Ok(Sort::abs(a, annot, body))
        } else {
            Ok(Sort::Data(self.data_sort()?))
        }
    }

    fn telescope(&mut self) -> Result<Telescope, ParseError> {
        let mut tel = Telescope::empty();
        if !self.eat(&Tok::LParen) {
            return Ok(tel);
        }
        if self.eat(&Tok::RParen) {
            return Ok(tel);
        }
        loop {
            let pos = self.here();
            let param = if self.eat(&Tok::Underscore) {
                Param::anonymous(tel.len())
            } else {
                let name = self.ident("a parameter")?;
                if !is_param_name(&name) {
                    return Err(self.error_at(
                        pos,
                        format!("parameter `{name}` must start with an uppercase letter"),
                    ));
                }
                if self.names.ops.contains(&name) {
                    return Err(self.error_at(
                        pos,
                        format!("parameter `{name}` clashes with a term constructor"),
                    ));
                }
                Param::new(name)
            };
            self.expect(Tok::Colon)?;
            let sort = self.sort()?;
            tel.push(param, sort);
            if self.eat(&Tok::Comma) {
                continue;
            }
            self.expect(Tok::RParen)?;
            return Ok(tel);
        }
    }

    fn freshness(&mut self) -> Result<FreshnessContext, ParseError> {
        let mut out = FreshnessContext::empty();
        if !self.eat(&Tok::Slash) {
            return Ok(out);
        }
        loop {
            let atom = self.atom()?;
            self.expect(Tok::Hash)?;
            let pos = self.here();
            let name = self.ident("a parameter")?;
            if !is_param_name(&name) {
                return Err(self.error_at(pos, format!("`{name}` is not a parameter name")));
            }
            out.constraints.push(Freshness {
                atom,
                param: Param::new(name),
            });
            if !self.eat(&Tok::Comma) {
                return Ok(out);
            }
        }
    }

    fn declaration(&mut self) -> Result<SourceDecl, ParseError> {
        let pos = self.here();
        let decl = if self.is_keyword("sort") {
            self.bump();
            let name = self.ident("a sort name")?;
            let tel = self.telescope()?;
            let fresh = self.freshness()?;
            Declaration::sort(name, tel, fresh)
        } else if self.is_keyword("op") {
            self.bump();
            let name = self.ident("an operator name")?;
            let tel = self.telescope()?;
            self.expect(Tok::Colon)?;
            let target = self.data_sort()?;
            let fresh = self.freshness()?;
            Declaration::term(name, tel, target, fresh)
        } else {
            return Err(self.unexpected("`sort` or `op`"));
        };
        self.expect(Tok::Semi)?;
        self.names.declare(&decl);
        Ok(SourceDecl {
            decl,
            line: pos.line,
            col: pos.col,
        })
    }

    pub(crate) fn source(&mut self) -> Result<Vec<SourceDecl>, ParseError> {
        let mut out = Vec::new();
        while *self.peek() != Tok::Eof {
            out.push(self.declaration()?);
        }
        Ok(out)
    }

    pub(crate) fn context(&mut self) -> Result<AtomContext, ParseError> {
        let mut ctx = AtomContext::empty();
        if matches!(self.peek(), Tok::Eof | Tok::Turnstile) {
            return Ok(ctx);
        }
        loop {
            let a = self.atom()?;
            self.expect(Tok::Colon)?;
            let s = self.data_sort()?;
            ctx.push(a, s);
            if !self.eat(&Tok::Comma) {
                return Ok(ctx);
            }
        }
    }

    pub(crate) fn judgment(&mut self) -> Result<Judgment, ParseError> {
        // `a # t` is recognised by its second token.
        let fresh_form = match (self.peek(), self.peek_at(1)) {
            (Tok::Ident(_) | Tok::Underscore, Tok::Hash) => true,
            (Tok::Ident(_) | Tok::Underscore, Tok::Quote) => *self.peek_at(3) == Tok::Hash,
            _ => false,
        };
        if fresh_form {
            let atom = self.atom()?;
            self.expect(Tok::Hash)?;
            let term = self.term()?;
            return Ok(Judgment::Fresh { atom, term });
        }

        let ctx = self.context()?;
        self.expect(Tok::Turnstile)?;
        if self.eat(&Tok::LParen) {
            let args = self.terms_until(Tok::RParen)?;
            if !self.is_keyword("fits") {
                return Err(self.unexpected("`fits`"));
            }
            self.bump();
            let ctor = self.ident("a constructor name")?;
            return Ok(Judgment::Fits { ctx, args, ctor });
        }

        let start = self.pos;
        if let Ok(term) = self.term() {
            if self.eat(&Tok::Colon) {
                let sort = self.sort()?;
                return Ok(Judgment::HasSort { ctx, term, sort });
            }
        }
        self.pos = start;
        let sort = self.sort()?;
        if !self.is_keyword("sort") {
            return Err(self.unexpected("`sort` or `:`"));
        }
        self.bump();
        Ok(Judgment::IsSort { ctx, sort })
    }

    pub(crate) fn case(&mut self) -> Result<Option<Case>, ParseError> {
        if *self.peek() == Tok::Eof {
            return Ok(None);
        }
        let line = self.here().line;
        let expect = match self.peek() {
            Tok::Ident(s) if s == "OK" => Expectation::Ok,
            Tok::Ident(s) if s == "FAIL" => Expectation::Fail,
            _ => return Err(self.unexpected("`OK` or `FAIL`")),
        };
        self.bump();
        let judgment = self.judgment()?;
        self.expect_eof()?;
        Ok(Some(Case {
            line,
            expect,
            judgment,
        }))
    }
}

pub(crate) fn parse_source(text: &str) -> Result<SourceFile, ParseError> {
    let mut p = Parser::new(text, 1, Names::default())?;
    let decls = p.source()?;
    Ok(SourceFile {
        path: None,
        text: text.to_string(),
        decls,
    })
}
