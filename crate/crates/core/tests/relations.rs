//! Freshness, alpha-equivalence and substitution against a de Bruijn oracle.

use nomsig_core::syntax::{Atom, DataSort, Nominal, Permutation, Term};
use nomsig_core::{alpha_eq, is_fresh, subst_atom};
use proptest::prelude::*;

#[derive(Clone, Debug, PartialEq)]
enum Db {
    Free(Atom),
    Bound(usize),
    App(String, Vec<Db>),
    Abs(String, Vec<Db>, Box<Db>),
}

fn db(t: &Term, scope: &mut Vec<Atom>) -> Db {
    match t {
        Term::Atom(a) => match scope.iter().rev().position(|b| b == a) {
            Some(i) => Db::Bound(i),
            None => Db::Free(a.clone()),
        },
        Term::App(c, ts) => Db::App(c.clone(), ts.iter().map(|u| db(u, scope)).collect()),
        Term::Abs(a, annot, body) => {
            let annot_ctor = &annot.ctor;
            let annot = annot.args.iter().map(|u| db(u, scope)).collect();
            scope.push(a.clone());
            let body = db(body, scope);
            scope.pop();
            Db::Abs(annot_ctor.clone(), annot, Box::new(body))
        }
        Term::Param(..) => panic!("ground terms only"),
    }
}

fn to_db(t: &Term) -> Db {
    db(t, &mut Vec::new())
}

fn db_free(d: &Db, a: &Atom) -> bool {
    match d {
        Db::Free(b) => a == b,
        Db::Bound(_) => false,
        Db::App(_, ds) => ds.iter().any(|d| db_free(d, a)),
        Db::Abs(_, ann, body) => ann.iter().any(|d| db_free(d, a)) || db_free(body, a),
    }
}

/// `u` is closed with respect to indices, so no shifting is needed.
fn db_subst(d: &Db, a: &Atom, u: &Db) -> Db {
    match d {
        Db::Free(b) if b == a => u.clone(),
        Db::Free(_) | Db::Bound(_) => d.clone(),
        Db::App(c, ds) => Db::App(c.clone(), ds.iter().map(|d| db_subst(d, a, u)).collect()),
        Db::Abs(s, ann, body) => Db::Abs(
            s.clone(),
            ann.iter().map(|d| db_subst(d, a, u)).collect(),
            Box::new(db_subst(body, a, u)),
        ),
    }
}

fn atom() -> impl Strategy<Value = Atom> {
    (prop::sample::select(vec!["a", "b", "c", "d"]), 0u32..3).prop_map(|(n, i)| Atom::indexed(n, i))
}

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![atom().prop_map(Term::Atom), Just(Term::constant("k"))];
    leaf.prop_recursive(5, 64, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|t| Term::app("g", vec![t])),
            (inner.clone(), inner.clone()).prop_map(|(t, u)| Term::app("f", vec![t, u])),
            (atom(), inner.clone()).prop_map(|(a, t)| Term::abs(a, DataSort::constant("S"), t)),
            (atom(), atom(), inner).prop_map(|(a, b, t)| Term::abs(
                a,
                DataSort::new("R", vec![Term::Atom(b)]),
                t
            )),
        ]
    })
}

fn perm() -> impl Strategy<Value = Permutation> {
    prop::collection::vec((atom(), atom()), 0..4).prop_map(|swaps| Permutation { swaps })
}

fn alpha(t: &Term, u: &Term) -> bool {
    alpha_eq(t, u).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn alpha_agrees_with_oracle(t in term(), u in term()) {
        prop_assert_eq!(alpha(&t, &u), to_db(&t) == to_db(&u));
    }

    #[test]
    fn renaming_a_binder_is_alpha(t in term(), c in atom()) {
        if let Term::Abs(a, s, body) = &t {
            prop_assume!(c == *a || !body.free_atoms().contains(&c));
            let renamed = Term::abs(c.clone(), s.clone(), body.permute(&Permutation::swap(a.clone(), c)));
            prop_assert!(alpha(&t, &renamed));
        }
    }

    #[test]
    fn freshness_agrees_with_oracle(t in term(), a in atom()) {
        prop_assert_eq!(is_fresh(&a, &t), !db_free(&to_db(&t), &a));
        prop_assert_eq!(is_fresh(&a, &t), !t.free_atoms().contains(&a));
    }

    #[test]
    fn equivariance(t in term(), u in term(), a in atom(), pi in perm()) {
        prop_assert_eq!(is_fresh(&a, &t), is_fresh(&pi.apply(&a), &t.permute(&pi)));
        prop_assert_eq!(alpha(&t, &u), alpha(&t.permute(&pi), &u.permute(&pi)));
    }

    #[test]
    fn freshness_is_stable_under_alpha(t in term(), u in term(), a in atom()) {
        if alpha(&t, &u) {
            prop_assert_eq!(is_fresh(&a, &t), is_fresh(&a, &u));
        }
        let pi = Permutation::swap(Atom::new("a"), Atom::new("b"));
        if is_fresh(&Atom::new("a"), &t) && is_fresh(&Atom::new("b"), &t) {
            prop_assert!(alpha(&t, &t.permute(&pi)));
        }
    }

    #[test]
    fn equivalence_and_congruence(t in term(), u in term(), v in term(), a in atom()) {
        prop_assert!(alpha(&t, &t));
        prop_assert_eq!(alpha(&t, &u), alpha(&u, &t));
        if alpha(&t, &u) && alpha(&u, &v) {
            prop_assert!(alpha(&t, &v));
        }
        if alpha(&t, &u) {
            prop_assert!(alpha(&Term::app("g", vec![t.clone()]), &Term::app("g", vec![u.clone()])));
            prop_assert!(alpha(
                &Term::abs(a.clone(), DataSort::constant("S"), t.clone()),
                &Term::abs(a, DataSort::constant("S"), u.clone())
            ));
        }
    }

    #[test]
    fn substitution_agrees_with_oracle(t in term(), u in term(), a in atom()) {
        let s = subst_atom(&t, &a, &u);
        prop_assert_eq!(to_db(&s), db_subst(&to_db(&t), &a, &to_db(&u)));
    }

    #[test]
    fn substitution_respects_alpha(t in term(), u in term(), a in atom(), pi in perm()) {
        // a permutation fixing the free atoms of t yields an alpha-variant
        let fixed = t.free_atoms().iter().all(|b| pi.apply(b) == *b)
            && t.free_atoms().iter().all(|b| {
                pi.swaps.iter().all(|(x, y)| x != b && y != b)
            });
        prop_assume!(fixed);
        let t2 = rename_binders(&t, &pi);
        prop_assert!(alpha(&t, &t2));
        prop_assert!(alpha(&subst_atom(&t, &a, &u), &subst_atom(&t2, &a, &u)));
    }
}

/// Renames every binder through `pi` where that is a valid alpha-conversion.
fn rename_binders(t: &Term, pi: &Permutation) -> Term {
    match t {
        Term::Atom(_) | Term::Param(..) => t.clone(),
        Term::App(c, ts) => Term::App(
            c.clone(),
            ts.iter().map(|u| rename_binders(u, pi)).collect(),
        ),
        Term::Abs(a, s, body) => {
            let body = rename_binders(body, pi);
            let c = pi.apply(a);
            if c == *a || body.free_atoms().contains(&c) {
                Term::abs(a.clone(), s.clone(), body)
            } else {
                Term::abs(
                    c.clone(),
                    s.clone(),
                    body.permute(&Permutation::swap(a.clone(), c)),
                )
            }
        }
    }
}

#[test]
fn non_ground_alpha_is_rejected() {
    let x = Term::param("X");
    assert!(alpha_eq(&x, &x).is_err());
}

#[test]
fn capture_is_avoided() {
    // [b:S] f(a,b) with a := b renames the binder to b'1
    let t = Term::abs(
        Atom::new("b"),
        DataSort::constant("S"),
        Term::app(
            "f",
            vec![Term::Atom(Atom::new("a")), Term::Atom(Atom::new("b"))],
        ),
    );
    let s = subst_atom(&t, &Atom::new("a"), &Term::Atom(Atom::new("b")));
    assert_eq!(s.to_string(), "[b'1:S] f(b,b'1)");
}
