//! Seeded random generators for the property suites.

use nomsig_core::syntax::{Atom, AtomContext, DataSort, Nominal, Permutation, Term};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fol::{self, FolForm, FolTerm};
use crate::lambda::{self, LamTerm};

pub type Rand = ChaCha8Rng;

pub fn rng(seed: u64) -> Rand {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Atom names used by the relation generator.
pub const ATOM_NAMES: [&str; 4] = ["a", "b", "c", "d"];

/// Constructors of the relation generator, with arities.
pub const CONSTRUCTORS: [(&str, usize); 3] = [("f", 2), ("g", 1), ("k", 0)];

fn random_atom(rng: &mut Rand) -> Atom {
    let name = ATOM_NAMES.choose(rng).copied().unwrap_or("a");
    if rng.gen_bool(0.8) {
        Atom::new(name)
    } else {
        Atom::indexed(name, rng.gen_range(1..=2))
    }
}

/// A ground term of depth at most `depth` over [`ATOM_NAMES`] and
/// [`CONSTRUCTORS`], with abstractions annotated by the data sort `S`.
pub fn ground_term(rng: &mut Rand, depth: usize) -> Term {
    let choice = if depth == 0 {
        rng.gen_range(0..2)
    } else {
        rng.gen_range(0..8)
    };
    match choice {
        0 => Term::Atom(random_atom(rng)),
        1 => Term::constant("k"),
        2 | 3 => Term::app("g", vec![ground_term(rng, depth - 1)]),
        4 | 5 => Term::app(
            "f",
            vec![ground_term(rng, depth - 1), ground_term(rng, depth - 1)],
        ),
        _ => Term::abs(
            random_atom(rng),
            DataSort::constant("S"),
            ground_term(rng, depth - 1),
        ),
    }
}

pub fn depth(t: &Term) -> usize {
    match t {
        Term::Atom(_) => 0,
        Term::Param(_, ts) | Term::App(_, ts) => ts.iter().map(depth).max().map_or(0, |d| d + 1),
        Term::Abs(_, _, b) => 1 + depth(b),
    }
}

/// A random permutation of up to three swaps over `pool`.
pub fn permutation(rng: &mut Rand, pool: &[Atom]) -> Permutation {
    let mut pi = Permutation::id();
    if pool.len() < 2 {
        return pi;
    }
    for _ in 0..rng.gen_range(1..=3) {
        let a = pool.choose(rng).cloned().unwrap_or_else(|| Atom::new("a"));
        let b = pool.choose(rng).cloned().unwrap_or_else(|| Atom::new("b"));
        if a != b {
            pi.swaps.push((a, b));
        }
    }
    pi
}

/// Renames binders at random, producing an alpha-equivalent term. A binder
/// is only renamed to an atom that is fresh for the abstraction.
pub fn alpha_variant(rng: &mut Rand, t: &Term) -> Term {
    match t {
        Term::Atom(_) => t.clone(),
        Term::Param(x, ts) => Term::Param(
            x.clone(),
            ts.iter().map(|u| alpha_variant(rng, u)).collect(),
        ),
        Term::App(c, ts) => Term::App(
            c.clone(),
            ts.iter().map(|u| alpha_variant(rng, u)).collect(),
        ),
        Term::Abs(a, annot, body) => {
            let annot = DataSort::new(
                annot.ctor.clone(),
                annot.args.iter().map(|u| alpha_variant(rng, u)).collect(),
            );
            let c = Atom::indexed(a.name.clone(), rng.gen_range(0..=6));
            if c == *a || rng.gen_bool(0.3) || body.free_atoms().contains(&c) {
                return Term::abs(a.clone(), annot, alpha_variant(rng, body));
            }
            let renamed = body.permute(&Permutation::swap(a.clone(), c.clone()));
            Term::abs(c, annot, alpha_variant(rng, &renamed))
        }
    }
}

pub fn fol_term(rng: &mut Rand, depth: usize, vars: u32) -> FolTerm {
    let choice = if depth == 0 {
        rng.gen_range(0..2)
    } else {
        rng.gen_range(0..5)
    };
    match choice {
        0 => FolTerm::Var(rng.gen_range(1..=vars)),
        1 => FolTerm::Zero,
        2 => fol::succ(fol_term(rng, depth - 1, vars)),
        3 => fol::plus(
            fol_term(rng, depth - 1, vars),
            fol_term(rng, depth - 1, vars),
        ),
        _ => fol::times(
            fol_term(rng, depth - 1, vars),
            fol_term(rng, depth - 1, vars),
        ),
    }
}

pub fn fol_form(rng: &mut Rand, depth: usize, vars: u32) -> FolForm {
    let choice = if depth == 0 {
        rng.gen_range(0..2)
    } else {
        rng.gen_range(0..6)
    };
    match choice {
        0 => FolForm::Bot,
        1 => FolForm::Eq(
            fol_term(rng, depth.min(2), vars),
            fol_term(rng, depth.min(2), vars),
        ),
        2 => fol::neg(fol_form(rng, depth - 1, vars)),
        3 => fol::imp(
            fol_form(rng, depth - 1, vars),
            fol_form(rng, depth - 1, vars),
        ),
        _ => fol::forall(rng.gen_range(1..=vars), fol_form(rng, depth - 1, vars)),
    }
}

pub fn lambda_term(rng: &mut Rand, depth: usize, vars: u32) -> LamTerm {
    let choice = if depth == 0 { 0 } else { rng.gen_range(0..3) };
    match choice {
        0 => LamTerm::Var(rng.gen_range(1..=vars)),
        1 => lambda::app(
            lambda_term(rng, depth - 1, vars),
            lambda_term(rng, depth - 1, vars),
        ),
        _ => lambda::lam(rng.gen_range(1..=vars), lambda_term(rng, depth - 1, vars)),
    }
}

/// Constructor and atom vocabulary for fuzzing the sort checker.
pub struct FuzzVocab {
    pub ops: Vec<(String, usize)>,
    pub sorts: Vec<(String, usize)>,
    pub atoms: Vec<Atom>,
}

fn fuzz_data_sort(rng: &mut Rand, v: &FuzzVocab, depth: usize) -> DataSort {
    let (name, arity) = v
        .sorts
        .choose(rng)
        .cloned()
        .unwrap_or_else(|| ("S".into(), 0));
    let n = perturb(rng, arity);
    DataSort::new(
        name,
        (0..n)
            .map(|_| fuzz_term(rng, v, depth.saturating_sub(1)))
            .collect(),
    )
}

/// Mostly the declared arity, sometimes one more or one fewer.
fn perturb(rng: &mut Rand, arity: usize) -> usize {
    match rng.gen_range(0..10) {
        0 => arity + 1,
        1 => arity.saturating_sub(1),
        _ => arity,
    }
}

/// A ground term built from the vocabulary with no regard for sorts.
pub fn fuzz_term(rng: &mut Rand, v: &FuzzVocab, depth: usize) -> Term {
    let choice = if depth == 0 {
        rng.gen_range(0..2)
    } else {
        rng.gen_range(0..6)
    };
    match choice {
        0 => Term::Atom(
            v.atoms
                .choose(rng)
                .cloned()
                .unwrap_or_else(|| Atom::new("a")),
        ),
        1 => {
            let nullary: Vec<_> = v.ops.iter().filter(|(_, n)| *n == 0).collect();
            match nullary.choose(rng) {
                Some((name, _)) => Term::constant(name.clone()),
                None => Term::Atom(Atom::new("a")),
            }
        }
        2 => {
            let binder = v
                .atoms
                .choose(rng)
                .cloned()
                .unwrap_or_else(|| Atom::new("a"));
            Term::abs(
                binder,
                fuzz_data_sort(rng, v, depth / 2),
                fuzz_term(rng, v, depth - 1),
            )
        }
        _ => {
            let (name, arity) = v
                .ops
                .choose(rng)
                .cloned()
                .unwrap_or_else(|| ("k".into(), 0));
            let n = perturb(rng, arity);
            Term::app(name, (0..n).map(|_| fuzz_term(rng, v, depth - 1)).collect())
        }
    }
}

/// Small contexts for fuzzing under the FOL signature.
pub fn fol_contexts() -> Vec<AtomContext> {
    let term = || DataSort::constant("Term");
    let a = |i| Atom::indexed("a", i);
    let d = |t: Term| DataSort::new("D", vec![t]);
    vec![
        AtomContext::empty(),
        AtomContext::new(vec![(a(1), term())]),
        AtomContext::new(vec![
            (a(1), term()),
            (Atom::indexed("h", 1), d(Term::constant("bot"))),
        ]),
        AtomContext::new(vec![
            (a(1), term()),
            (a(2), term()),
            (
                Atom::indexed("h", 1),
                d(Term::app("eq", vec![Term::Atom(a(1)), Term::Atom(a(2))])),
            ),
        ]),
    ]
}
