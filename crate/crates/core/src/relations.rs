//! Freshness and ground alpha-equivalence.
//!
//! Both relations are syntax-directed: for each pair of head forms at most one
//! rule applies, so they are decided by plain structural recursion.

use thiserror::Error;

use crate::syntax::{Atom, DataSort, Nominal, Permutation, Sort, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("alpha-equivalence is only defined on ground expressions")]
pub struct NonGroundError;

/// Freshness and alpha-equivalence on one syntactic class.
pub trait Alpha: Nominal {
    /// `⊢ a # self`
    fn fresh_for(&self, a: &Atom) -> bool;

    /// Alpha-equivalence extended to parameters: `X[t̄]` is related to
    /// `X[ū]` when the concretions are pairwise related. On ground input this
    /// coincides with the ground relation.
    fn alpha_open(&self, other: &Self) -> bool;
}

pub fn is_fresh<M: Alpha>(a: &Atom, m: &M) -> bool {
    m.fresh_for(a)
}

/// Ground alpha-equivalence. Parameters are rejected rather than compared.
pub fn alpha_eq<M: Alpha>(m: &M, n: &M) -> Result<bool, NonGroundError> {
    if !m.is_ground() || !n.is_ground() {
        return Err(NonGroundError);
    }
    Ok(m.alpha_open(n))
}

fn all_fresh(a: &Atom, ts: &[Term]) -> bool {
    ts.iter().all(|t| t.fresh_for(a))
}

fn all_alpha(ts: &[Term], us: &[Term]) -> bool {
    ts.len() == us.len() && ts.iter().zip(us).all(|(t, u)| t.alpha_open(u))
}

fn abstraction_alpha<M: Alpha>(
    (a, annot_l, body_l): (&Atom, &DataSort, &M),
    (b, annot_r, body_r): (&Atom, &DataSort, &M),
) -> bool {
    if !annot_l.alpha_open(annot_r) {
        return false;
    }
    if a == b {
        body_l.alpha_open(body_r)
    } else {
        body_r.fresh_for(a)
            && body_l.alpha_open(&body_r.permute(&Permutation::swap(a.clone(), b.clone())))
    }
}

impl Alpha for Term {
    fn fresh_for(&self, a: &Atom) -> bool {
        match self {
            Term::Atom(b) => a != b,
            Term::Param(_, ts) | Term::App(_, ts) => all_fresh(a, ts),
            Term::Abs(b, annot, body) => annot.fresh_for(a) && (a == b || body.fresh_for(a)),
        }
    }

    fn alpha_open(&self, other: &Self) -> bool {
        match (self, other) {
            (Term::Atom(a), Term::Atom(b)) => a == b,
            (Term::Param(x, ts), Term::Param(y, us)) => x == y && all_alpha(ts, us),
            (Term::App(f, ts), Term::App(g, us)) => f == g && all_alpha(ts, us),
            (Term::Abs(a, s, m), Term::Abs(b, u, n)) => {
                abstraction_alpha((a, s, m.as_ref()), (b, u, n.as_ref()))
            }
            _ => false,
        }
    }
}

impl Alpha for DataSort {
    fn fresh_for(&self, a: &Atom) -> bool {
        all_fresh(a, &self.args)
    }

    fn alpha_open(&self, other: &Self) -> bool {
        self.ctor == other.ctor && all_alpha(&self.args, &other.args)
    }
}

impl Alpha for Sort {
    fn fresh_for(&self, a: &Atom) -> bool {
        match self {
            Sort::Data(d) => d.fresh_for(a),
            Sort::Abs(b, annot, body) => annot.fresh_for(a) && (a == b || body.fresh_for(a)),
        }
    }

    fn alpha_open(&self, other: &Self) -> bool {
        match (self, other) {
            (Sort::Data(d), Sort::Data(e)) => d.alpha_open(e),
            (Sort::Abs(a, s, m), Sort::Abs(b, u, n)) => {
                abstraction_alpha((a, s, m.as_ref()), (b, u, n.as_ref()))
            }
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::Param;

    fn at(n: &str) -> Atom {
        Atom::new(n)
    }
    fn t(n: &str) -> Term {
        Term::Atom(at(n))
    }
    fn f() -> DataSort {
        DataSort::constant("F")
    }
    fn lam(a: &str, body: Term) -> Term {
        Term::abs(at(a), f(), body)
    }

    #[test]
    fn freshness_rules() {
        assert!(is_fresh(&at("a"), &t("b")));
        assert!(!is_fresh(&at("a"), &t("a")));
        assert!(is_fresh(&at("a"), &lam("a", t("a"))));
        assert!(!is_fresh(&at("a"), &Term::app("f", vec![t("a")])));
        assert!(!is_fresh(
            &at("a"),
            &Term::Param(Param::new("X"), vec![t("a")])
        ));
        assert!(is_fresh(&at("a"), &Term::param("X")));
    }

    #[test]
    fn matching_binder_still_checks_annotation() {
        let m = Term::abs(at("a"), DataSort::new("F", vec![t("a")]), t("a"));
        assert!(!is_fresh(&at("a"), &m));
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_eq(&t("a"), &t("a")), Ok(true));
        assert_eq!(alpha_eq(&lam("a", t("a")), &lam("b", t("b"))), Ok(true));
        // (a b)·a = b matches, but a # a fails.
        assert_eq!(alpha_eq(&lam("a", t("b")), &lam("b", t("a"))), Ok(false));
        assert_eq!(
            alpha_eq(
                &Term::app("f", vec![lam("a", t("a"))]),
                &Term::app("f", vec![lam("b", t("b"))])
            ),
            Ok(true)
        );
    }

    #[test]
    fn alpha_rejects_parameters() {
        assert_eq!(
            alpha_eq(&Term::param("X"), &Term::param("X")),
            Err(NonGroundError)
        );
        assert!(Term::param("X").alpha_open(&Term::param("X")));
    }

    #[test]
    fn annotations_must_agree() {
        let l = Term::abs(at("a"), DataSort::constant("F"), t("a"));
        let r = Term::abs(at("b"), DataSort::constant("G"), t("b"));
        assert_eq!(alpha_eq(&l, &r), Ok(false));
    }

    #[test]
    fn abstraction_sorts() {
        let l = Sort::abs(at("h"), f(), Sort::data("D", vec![t("h")]));
        let r = Sort::abs(at("k"), f(), Sort::data("D", vec![t("k")]));
        assert_eq!(alpha_eq(&l, &r), Ok(true));
        let r = Sort::abs(at("k"), f(), Sort::data("D", vec![t("h")]));
        assert_eq!(alpha_eq(&l, &r), Ok(false));
    }
}
