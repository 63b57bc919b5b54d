//! Untyped lambda terms, their shallow encoding, and beta-contraction
//! witnesses.

use std::collections::BTreeSet;
use std::fmt;

use nomsig_core::rewrite::subst_atom;
use nomsig_core::syntax::{Atom, DataSort, Sort, Term};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LamTerm {
    Var(u32),
    App(Box<LamTerm>, Box<LamTerm>),
    Lam(u32, Box<LamTerm>),
}

pub fn app(s: LamTerm, t: LamTerm) -> LamTerm {
    LamTerm::App(Box::new(s), Box::new(t))
}

pub fn lam(x: u32, body: LamTerm) -> LamTerm {
    LamTerm::Lam(x, Box::new(body))
}

impl LamTerm {
    pub fn size(&self) -> usize {
        match self {
            LamTerm::Var(_) => 1,
            LamTerm::App(s, t) => 1 + s.size() + t.size(),
            LamTerm::Lam(_, b) => 1 + b.size(),
        }
    }

    pub fn fv(&self) -> BTreeSet<u32> {
        match self {
            LamTerm::Var(i) => BTreeSet::from([*i]),
            LamTerm::App(s, t) => {
                let mut out = s.fv();
                out.extend(t.fv());
                out
            }
            LamTerm::Lam(x, b) => {
                let mut out = b.fv();
                out.remove(x);
                out
            }
        }
    }

    fn max_var(&self) -> u32 {
        match self {
            LamTerm::Var(i) => *i,
            LamTerm::App(s, t) => s.max_var().max(t.max_var()),
            LamTerm::Lam(x, b) => (*x).max(b.max_var()),
        }
    }

    /// Replaces free `y` by `z`, where `z` occurs nowhere in `self`.
    fn rename_free(&self, y: u32, z: u32) -> LamTerm {
        match self {
            LamTerm::Var(i) if *i == y => LamTerm::Var(z),
            LamTerm::Var(_) => self.clone(),
            LamTerm::App(s, t) => app(s.rename_free(y, z), t.rename_free(y, z)),
            LamTerm::Lam(x, _) if *x == y => self.clone(),
            LamTerm::Lam(x, b) => lam(*x, b.rename_free(y, z)),
        }
    }

    /// Capture-avoiding `self[x := s]` with its own supply of new variables.
    pub fn subst(&self, x: u32, s: &LamTerm) -> LamTerm {
        let mut next = self.max_var().max(s.max_var()).max(x) + 1;
        self.subst_go(x, s, &s.fv(), &mut next)
    }

    fn subst_go(&self, x: u32, s: &LamTerm, fv_s: &BTreeSet<u32>, next: &mut u32) -> LamTerm {
        match self {
            LamTerm::Var(i) if *i == x => s.clone(),
            LamTerm::Var(_) => self.clone(),
            LamTerm::App(l, r) => app(l.subst_go(x, s, fv_s, next), r.subst_go(x, s, fv_s, next)),
            LamTerm::Lam(y, _) if *y == x => self.clone(),
            LamTerm::Lam(y, b) if fv_s.contains(y) => {
                let z = *next;
                *next += 1;
                lam(z, b.rename_free(*y, z).subst_go(x, s, fv_s, next))
            }
            LamTerm::Lam(y, b) => lam(*y, b.subst_go(x, s, fv_s, next)),
        }
    }
}

impl fmt::Display for LamTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LamTerm::Var(i) => write!(f, "x{i}"),
            LamTerm::App(s, t) => write!(f, "({s} {t})"),
            LamTerm::Lam(x, b) => write!(f, "(\\x{x}. {b})"),
        }
    }
}

pub fn var_atom(i: u32) -> Atom {
    Atom::indexed("a", i)
}

pub fn lam_sort() -> DataSort {
    DataSort::constant("Lam")
}

/// Variables become atoms of sort `Lam`; binding is abstraction.
pub fn enc_lambda(s: &LamTerm) -> Term {
    match s {
        LamTerm::Var(i) => Term::Atom(var_atom(*i)),
        LamTerm::App(s, t) => Term::app("app", vec![enc_lambda(s), enc_lambda(t)]),
        LamTerm::Lam(x, b) => Term::app(
            "lam",
            vec![Term::abs(var_atom(*x), lam_sort(), enc_lambda(b))],
        ),
    }
}

/// The `beta` instance contracting `(\x. s1) s2`, and the sort it should
/// have: `rel(app(lam([a_x:Lam] s1), s2), s1[a_x := s2])`.
pub fn beta_witness(s1: &LamTerm, x: u32, s2: &LamTerm) -> (Term, Sort) {
    let body = Term::abs(var_atom(x), lam_sort(), enc_lambda(s1));
    let arg = enc_lambda(s2);
    let redex = Term::app(
        "app",
        vec![Term::app("lam", vec![body.clone()]), arg.clone()],
    );
    let reduct = subst_atom(&enc_lambda(s1), &var_atom(x), &arg);
    (
        Term::app("beta", vec![body, arg]),
        Sort::data("rel", vec![redex, reduct]),
    )
}

/// All lambda terms of each size `1..=max` over `vars`.
pub fn lambda_by_size(max: usize, vars: &[u32]) -> Vec<Vec<LamTerm>> {
    let mut by: Vec<Vec<LamTerm>> = vec![Vec::new(); max + 1];
    for n in 1..=max {
        let mut out = Vec::new();
        if n == 1 {
            out.extend(vars.iter().map(|&i| LamTerm::Var(i)));
        } else {
            for &x in vars {
                out.extend(by[n - 1].iter().map(|b| lam(x, b.clone())));
            }
            for l in 1..n - 1 {
                for s in &by[l] {
                    for t in &by[n - 1 - l] {
                        out.push(app(s.clone(), t.clone()));
                    }
                }
            }
        }
        by[n] = out;
    }
    by
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encoding() {
        assert_eq!(
            enc_lambda(&lam(0, LamTerm::Var(0))).to_string(),
            "lam([a:Lam] a)"
        );
    }

    #[test]
    fn oracle_substitution() {
        let s = lam(2, LamTerm::Var(1));
        assert_eq!(s.subst(1, &LamTerm::Var(3)), lam(2, LamTerm::Var(3)));
        assert_eq!(s.subst(1, &LamTerm::Var(2)), lam(3, LamTerm::Var(2)));
    }

    #[test]
    fn counts() {
        let n: Vec<usize> = lambda_by_size(3, &[1, 2, 3]).iter().map(Vec::len).collect();
        assert_eq!(n, vec![0, 3, 9, 36]);
    }
}
