//! First-order arithmetic: object syntax, the encoding into the `fol.nlf`
//! signature and its inverse, and object-level substitution and identity
//! implemented without the kernel.

use std::collections::BTreeSet;
use std::fmt;

use nomsig_core::syntax::{Atom, DataSort, Term};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FolTerm {
    Var(u32),
    Zero,
    Succ(Box<FolTerm>),
    Plus(Box<FolTerm>, Box<FolTerm>),
    Times(Box<FolTerm>, Box<FolTerm>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FolForm {
    Eq(FolTerm, FolTerm),
    Bot,
    Neg(Box<FolForm>),
    Imp(Box<FolForm>, Box<FolForm>),
    Forall(u32, Box<FolForm>),
}

/// A term or a formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FolExpr {
    Term(FolTerm),
    Form(FolForm),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("atom {0} does not encode an object variable")]
    NotAVariable(Atom),
    #[error("`{0}` is not a constructor of this sort")]
    UnexpectedConstructor(String),
    #[error("unexpected {0}")]
    Malformed(String),
}

pub fn succ(t: FolTerm) -> FolTerm {
    FolTerm::Succ(Box::new(t))
}
pub fn plus(t: FolTerm, u: FolTerm) -> FolTerm {
    FolTerm::Plus(Box::new(t), Box::new(u))
}
pub fn times(t: FolTerm, u: FolTerm) -> FolTerm {
    FolTerm::Times(Box::new(t), Box::new(u))
}
pub fn neg(p: FolForm) -> FolForm {
    FolForm::Neg(Box::new(p))
}
pub fn imp(p: FolForm, q: FolForm) -> FolForm {
    FolForm::Imp(Box::new(p), Box::new(q))
}
pub fn forall(x: u32, p: FolForm) -> FolForm {
    FolForm::Forall(x, Box::new(p))
}

impl FolTerm {
    pub fn size(&self) -> usize {
        match self {
            FolTerm::Var(_) | FolTerm::Zero => 1,
            FolTerm::Succ(t) => 1 + t.size(),
            FolTerm::Plus(t, u) | FolTerm::Times(t, u) => 1 + t.size() + u.size(),
        }
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<u32>) {
        match self {
            FolTerm::Var(i) => {
                out.insert(*i);
            }
            FolTerm::Zero => {}
            FolTerm::Succ(t) => t.collect_vars(out),
            FolTerm::Plus(t, u) | FolTerm::Times(t, u) => {
                t.collect_vars(out);
                u.collect_vars(out);
            }
        }
    }

    pub fn fv(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn max_var(&self) -> u32 {
        self.fv().into_iter().max().unwrap_or(0)
    }

    fn map_vars(&self, f: &impl Fn(u32) -> FolTerm) -> FolTerm {
        match self {
            FolTerm::Var(i) => f(*i),
            FolTerm::Zero => FolTerm::Zero,
            FolTerm::Succ(t) => succ(t.map_vars(f)),
            FolTerm::Plus(t, u) => plus(t.map_vars(f), u.map_vars(f)),
            FolTerm::Times(t, u) => times(t.map_vars(f), u.map_vars(f)),
        }
    }

    /// `self[x := u]`
    pub fn subst(&self, x: u32, u: &FolTerm) -> FolTerm {
        self.map_vars(&|i| if i == x { u.clone() } else { FolTerm::Var(i) })
    }

    fn swap(&self, x: u32, y: u32) -> FolTerm {
        self.map_vars(&|i| FolTerm::Var(swap_index(i, x, y)))
    }
}

fn swap_index(i: u32, x: u32, y: u32) -> u32 {
    if i == x {
        y
    } else if i == y {
        x
    } else {
        i
    }
}

impl FolForm {
    pub fn size(&self) -> usize {
        match self {
            FolForm::Eq(t, u) => 1 + t.size() + u.size(),
            FolForm::Bot => 1,
            FolForm::Neg(p) => 1 + p.size(),
            FolForm::Imp(p, q) => 1 + p.size() + q.size(),
            FolForm::Forall(_, p) => 1 + p.size(),
        }
    }

    pub fn fv(&self) -> BTreeSet<u32> {
        match self {
            FolForm::Eq(t, u) => {
                let mut out = t.fv();
                u.collect_vars(&mut out);
                out
            }
            FolForm::Bot => BTreeSet::new(),
            FolForm::Neg(p) => p.fv(),
            FolForm::Imp(p, q) => {
                let mut out = p.fv();
                out.extend(q.fv());
                out
            }
            FolForm::Forall(x, p) => {
                let mut out = p.fv();
                out.remove(x);
                out
            }
        }
    }

    /// Largest variable index occurring anywhere, bound or free.
    pub fn max_var(&self) -> u32 {
        match self {
            FolForm::Eq(t, u) => t.max_var().max(u.max_var()),
            FolForm::Bot => 0,
            FolForm::Neg(p) => p.max_var(),
            FolForm::Imp(p, q) => p.max_var().max(q.max_var()),
            FolForm::Forall(x, p) => (*x).max(p.max_var()),
        }
    }

    /// Swaps the names `x` and `y` everywhere, binders included.
    pub fn swap(&self, x: u32, y: u32) -> FolForm {
        match self {
            FolForm::Eq(t, u) => FolForm::Eq(t.swap(x, y), u.swap(x, y)),
            FolForm::Bot => FolForm::Bot,
            FolForm::Neg(p) => neg(p.swap(x, y)),
            FolForm::Imp(p, q) => imp(p.swap(x, y), q.swap(x, y)),
            FolForm::Forall(z, p) => forall(swap_index(*z, x, y), p.swap(x, y)),
        }
    }

    /// Replaces free occurrences of `y` by `z`, where `z` occurs nowhere.
    fn rename_free(&self, y: u32, z: u32) -> FolForm {
        match self {
            FolForm::Eq(t, u) => {
                FolForm::Eq(t.subst(y, &FolTerm::Var(z)), u.subst(y, &FolTerm::Var(z)))
            }
            FolForm::Bot => FolForm::Bot,
            FolForm::Neg(p) => neg(p.rename_free(y, z)),
            FolForm::Imp(p, q) => imp(p.rename_free(y, z), q.rename_free(y, z)),
            FolForm::Forall(w, p) if *w == y => self.clone(),
            FolForm::Forall(w, p) => forall(*w, p.rename_free(y, z)),
        }
    }

    /// Capture-avoiding `self[x := u]`: a binder that would capture a
    /// variable of `u` is first renamed to a new variable.
    pub fn subst(&self, x: u32, u: &FolTerm) -> FolForm {
        let mut next = self.max_var().max(u.max_var()).max(x) + 1;
        self.subst_go(x, u, &u.fv(), &mut next)
    }

    fn subst_go(&self, x: u32, u: &FolTerm, fv_u: &BTreeSet<u32>, next: &mut u32) -> FolForm {
        match self {
            FolForm::Eq(t, w) => FolForm::Eq(t.subst(x, u), w.subst(x, u)),
            FolForm::Bot => FolForm::Bot,
            FolForm::Neg(p) => neg(p.subst_go(x, u, fv_u, next)),
            FolForm::Imp(p, q) => imp(p.subst_go(x, u, fv_u, next), q.subst_go(x, u, fv_u, next)),
            FolForm::Forall(y, _) if *y == x => self.clone(),
            FolForm::Forall(y, p) if fv_u.contains(y) => {
                let z = *next;
                *next += 1;
                forall(z, p.rename_free(*y, z).subst_go(x, u, fv_u, next))
            }
            FolForm::Forall(y, p) => forall(*y, p.subst_go(x, u, fv_u, next)),
        }
    }

    /// Object-level identity: alpha-conversion closed under the connectives.
    pub fn equiv(&self, other: &FolForm) -> bool {
        match (self, other) {
            (FolForm::Eq(t, u), FolForm::Eq(t2, u2)) => t == t2 && u == u2,
            (FolForm::Bot, FolForm::Bot) => true,
            (FolForm::Neg(p), FolForm::Neg(q)) => p.equiv(q),
            (FolForm::Imp(p, q), FolForm::Imp(p2, q2)) => p.equiv(p2) && q.equiv(q2),
            (FolForm::Forall(x, p), FolForm::Forall(y, q)) => {
                if x == y {
                    return p.equiv(q);
                }
                let z = p.max_var().max(q.max_var()).max(*x).max(*y) + 1;
                p.swap(*x, z).equiv(&q.swap(*y, z))
            }
            _ => false,
        }
    }
}

impl FolExpr {
    pub fn size(&self) -> usize {
        match self {
            FolExpr::Term(t) => t.size(),
            FolExpr::Form(p) => p.size(),
        }
    }

    pub fn fv(&self) -> BTreeSet<u32> {
        match self {
            FolExpr::Term(t) => t.fv(),
            FolExpr::Form(p) => p.fv(),
        }
    }

    pub fn subst(&self, x: u32, u: &FolTerm) -> FolExpr {
        match self {
            FolExpr::Term(t) => FolExpr::Term(t.subst(x, u)),
            FolExpr::Form(p) => FolExpr::Form(p.subst(x, u)),
        }
    }

    pub fn equiv(&self, other: &FolExpr) -> bool {
        match (self, other) {
            (FolExpr::Term(t), FolExpr::Term(u)) => t == u,
            (FolExpr::Form(p), FolExpr::Form(q)) => p.equiv(q),
            _ => false,
        }
    }

    /// The data sort this expression encodes into.
    pub fn sort_name(&self) -> &'static str {
        match self {
            FolExpr::Term(_) => "Term",
            FolExpr::Form(_) => "Form",
        }
    }
}

impl fmt::Display for FolTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FolTerm::Var(i) => write!(f, "x{i}"),
            FolTerm::Zero => f.write_str("0"),
            FolTerm::Succ(t) => write!(f, "S({t})"),
            FolTerm::Plus(t, u) => write!(f, "({t} + {u})"),
            FolTerm::Times(t, u) => write!(f, "({t} * {u})"),
        }
    }
}

impl fmt::Display for FolForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FolForm::Eq(t, u) => write!(f, "{t} = {u}"),
            FolForm::Bot => f.write_str("false"),
            FolForm::Neg(p) => write!(f, "~({p})"),
            FolForm::Imp(p, q) => write!(f, "({p} -> {q})"),
            FolForm::Forall(x, p) => write!(f, "(forall x{x}. {p})"),
        }
    }
}

impl fmt::Display for FolExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FolExpr::Term(t) => t.fmt(f),
            FolExpr::Form(p) => p.fmt(f),
        }
    }
}

/// Object variable `x_i` is the atom `a'i`.
pub fn var_atom(i: u32) -> Atom {
    Atom::indexed("a", i)
}

pub fn atom_var(a: &Atom) -> Option<u32> {
    (a.name == "a").then_some(a.index)
}

pub fn term_sort() -> DataSort {
    DataSort::constant("Term")
}

pub fn enc_term(t: &FolTerm) -> Term {
    match t {
        FolTerm::Var(i) => Term::Atom(var_atom(*i)),
        FolTerm::Zero => Term::constant("zero"),
        FolTerm::Succ(t) => Term::app("succ", vec![enc_term(t)]),
        FolTerm::Plus(t, u) => Term::app("plus", vec![enc_term(t), enc_term(u)]),
        FolTerm::Times(t, u) => Term::app("times", vec![enc_term(t), enc_term(u)]),
    }
}

pub fn enc_form(p: &FolForm) -> Term {
    match p {
        FolForm::Eq(t, u) => Term::app("eq", vec![enc_term(t), enc_term(u)]),
        FolForm::Bot => Term::constant("bot"),
        FolForm::Neg(p) => Term::app("neg", vec![enc_form(p)]),
        FolForm::Imp(p, q) => Term::app("imp", vec![enc_form(p), enc_form(q)]),
        FolForm::Forall(x, p) => Term::app("forall", vec![enc_binder(*x, p)]),
    }
}

/// `[a_x:Term] enc(p)`
pub fn enc_binder(x: u32, p: &FolForm) -> Term {
    Term::abs(var_atom(x), term_sort(), enc_form(p))
}

pub fn enc_fol(e: &FolExpr) -> Term {
    match e {
        FolExpr::Term(t) => enc_term(t),
        FolExpr::Form(p) => enc_form(p),
    }
}

fn args<'t, const N: usize>(ctor: &str, ts: &'t [Term]) -> Result<&'t [Term; N], DecodeError> {
    ts.try_into()
        .map_err(|_| DecodeError::Malformed(format!("arity of `{ctor}`")))
}

pub fn dec_term(t: &Term) -> Result<FolTerm, DecodeError> {
    match t {
        Term::Atom(a) => atom_var(a)
            .map(FolTerm::Var)
            .ok_or_else(|| DecodeError::NotAVariable(a.clone())),
        Term::App(c, ts) => match c.as_str() {
            "zero" => {
                args::<0>(c, ts)?;
                Ok(FolTerm::Zero)
            }
            "succ" => {
                let [t] = args(c, ts)?;
                Ok(succ(dec_term(t)?))
            }
            "plus" => {
                let [t, u] = args(c, ts)?;
                Ok(plus(dec_term(t)?, dec_term(u)?))
            }
            "times" => {
                let [t, u] = args(c, ts)?;
                Ok(times(dec_term(t)?, dec_term(u)?))
            }
            _ => Err(DecodeError::UnexpectedConstructor(c.clone())),
        },
        other => Err(DecodeError::Malformed(format!("term {other}"))),
    }
}

pub fn dec_form(t: &Term) -> Result<FolForm, DecodeError> {
    match t {
        Term::App(c, ts) => match c.as_str() {
            "eq" => {
                let [t, u] = args(c, ts)?;
                Ok(FolForm::Eq(dec_term(t)?, dec_term(u)?))
            }
            "bot" => {
                args::<0>(c, ts)?;
                Ok(FolForm::Bot)
            }
            "neg" => {
                let [p] = args(c, ts)?;
                Ok(neg(dec_form(p)?))
            }
            "imp" => {
                let [p, q] = args(c, ts)?;
                Ok(imp(dec_form(p)?, dec_form(q)?))
            }
            "forall" => {
                let [b] = args(c, ts)?;
                let (x, p) = dec_binder(b)?;
                Ok(forall(x, p))
            }
            _ => Err(DecodeError::UnexpectedConstructor(c.clone())),
        },
        other => Err(DecodeError::Malformed(format!("formula {other}"))),
    }
}

/// Inverse of [`enc_binder`].
pub fn dec_binder(t: &Term) -> Result<(u32, FolForm), DecodeError> {
    match t {
        Term::Abs(a, annot, body) if *annot == term_sort() => {
            let x = atom_var(a).ok_or_else(|| DecodeError::NotAVariable(a.clone()))?;
            Ok((x, dec_form(body)?))
        }
        other => Err(DecodeError::Malformed(format!("binder {other}"))),
    }
}

pub fn dec_fol(t: &Term, sort: &str) -> Result<FolExpr, DecodeError> {
    match sort {
        "Term" => dec_term(t).map(FolExpr::Term),
        "Form" => dec_form(t).map(FolExpr::Form),
        other => Err(DecodeError::UnexpectedConstructor(other.to_string())),
    }
}

/// All terms of each size `1..=max` over the given variables; entry `n`
/// holds the terms of size exactly `n`.
pub fn terms_by_size(max: usize, vars: &[u32]) -> Vec<Vec<FolTerm>> {
    let mut by: Vec<Vec<FolTerm>> = vec![Vec::new(); max + 1];
    for n in 1..=max {
        let mut out = Vec::new();
        if n == 1 {
            out.extend(vars.iter().map(|&i| FolTerm::Var(i)));
            out.push(FolTerm::Zero);
        } else {
            out.extend(by[n - 1].iter().cloned().map(succ));
            for l in 1..n - 1 {
                let r = n - 1 - l;
                for t in &by[l] {
                    for u in &by[r] {
                        out.push(plus(t.clone(), u.clone()));
                        out.push(times(t.clone(), u.clone()));
                    }
                }
            }
        }
        by[n] = out;
    }
    by
}

/// All formulas of each size `1..=max`, binding and using the given
/// variables.
pub fn forms_by_size(max: usize, vars: &[u32]) -> Vec<Vec<FolForm>> {
    let terms = terms_by_size(max, vars);
    let mut by: Vec<Vec<FolForm>> = vec![Vec::new(); max + 1];
    for n in 1..=max {
        let mut out = Vec::new();
        if n == 1 {
            out.push(FolForm::Bot);
        } else {
            for l in 1..n - 1 {
                let r = n - 1 - l;
                for t in &terms[l] {
                    for u in &terms[r] {
                        out.push(FolForm::Eq(t.clone(), u.clone()));
                    }
                }
            }
            out.extend(by[n - 1].iter().cloned().map(neg));
            for l in 1..n - 1 {
                let r = n - 1 - l;
                for p in &by[l] {
                    for q in &by[r] {
                        out.push(imp(p.clone(), q.clone()));
                    }
                }
            }
            for &x in vars {
                out.extend(by[n - 1].iter().map(|p| forall(x, p.clone())));
            }
        }
        by[n] = out;
    }
    by
}

/// Every term and formula of size at most `max` over `vars`.
pub fn enumerate(max: usize, vars: &[u32]) -> Vec<FolExpr> {
    let mut out: Vec<FolExpr> = terms_by_size(max, vars)
        .into_iter()
        .flatten()
        .map(FolExpr::Term)
        .collect();
    out.extend(
        forms_by_size(max, vars)
            .into_iter()
            .flatten()
            .map(FolExpr::Form),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u32) -> FolTerm {
        FolTerm::Var(i)
    }

    #[test]
    fn encoding_examples() {
        assert_eq!(
            enc_term(&plus(FolTerm::Zero, x(1))).to_string(),
            "plus(zero,a'1)"
        );
        assert_eq!(enc_form(&FolForm::Bot).to_string(), "bot");
        let p = forall(2, FolForm::Eq(x(2), FolTerm::Zero));
        assert_eq!(enc_form(&p).to_string(), "forall([a'2:Term] eq(a'2,zero))");
    }

    #[test]
    fn decoding_examples() {
        let t = enc_term(&plus(FolTerm::Zero, x(1)));
        assert_eq!(dec_term(&t).unwrap(), plus(FolTerm::Zero, x(1)));
        let p = forall(1, FolForm::Eq(x(1), x(1)));
        assert_eq!(dec_form(&enc_form(&p)).unwrap(), p);
        assert!(matches!(
            dec_term(&Term::Atom(Atom::new("h"))),
            Err(DecodeError::NotAVariable(_))
        ));
    }

    #[test]
    fn substitution_renames_capturing_binders() {
        let p = forall(2, FolForm::Eq(x(1), x(2)));
        let q = p.subst(1, &x(2));
        assert_eq!(q, forall(3, FolForm::Eq(x(2), x(3))));
        assert_eq!(p.subst(2, &x(1)), p);
    }

    #[test]
    fn identity_is_alpha_conversion() {
        let p = forall(1, FolForm::Eq(x(1), x(3)));
        assert!(p.equiv(&forall(2, FolForm::Eq(x(2), x(3)))));
        assert!(!p.equiv(&forall(3, FolForm::Eq(x(3), x(3)))));
        assert!(!forall(1, FolForm::Eq(x(1), x(2))).equiv(&forall(2, FolForm::Eq(x(2), x(1)))));
    }

    #[test]
    fn enumeration_counts() {
        let ts = terms_by_size(6, &[1, 2, 3]);
        let counts: Vec<usize> = ts.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![0, 4, 4, 36, 100, 708, 2884]);
        for (n, layer) in ts.iter().enumerate() {
            assert!(layer.iter().all(|t| t.size() == n));
        }
        for (n, layer) in forms_by_size(5, &[1, 2]).iter().enumerate() {
            assert!(layer.iter().all(|p| p.size() == n));
        }
    }
}
