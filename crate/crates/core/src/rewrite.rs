//! Capture-avoiding atom substitution, generalised concretion, parameter
//! instantiation and declaration freshening.
//!
//! Fresh names come from [`fresh_atom`], which takes its avoid set explicitly,
//! so every operation here is a pure function of its arguments.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::syntax::{
    Atom, Binding, DataSort, Freshness, FreshnessContext, Nominal, Param, Permutation, Sort,
    Telescope, Term,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("concretion is undefined on {0}: only abstractions and parameters can be concretised")]
    ConcretionUndefined(Term),
    #[error("parameter {0} is not in the domain of the instantiation")]
    MissingInstantiation(Param),
}

/// The atom with `base`'s name and the smallest index above `base`'s that is
/// not in `avoid`.
pub fn fresh_atom(base: &Atom, avoid: &BTreeSet<Atom>) -> Atom {
    let mut index = base.index + 1;
    loop {
        let candidate = Atom::indexed(base.name.clone(), index);
        if !avoid.contains(&candidate) {
            return candidate;
        }
        index += 1;
    }
}

/// Capture-avoiding replacement of an atom by a term.
pub trait Substitute: Nominal {
    /// `self[a ↦ t]`, where `fa_t` is the free-atom set of `t`.
    fn subst_with(&self, a: &Atom, t: &Term, fa_t: &BTreeSet<Atom>) -> Self;

    /// Grafting of parameters, discharging suspended concretions.
    fn instantiate(&self, theta: &Instantiation) -> Result<Self, RewriteError>;
}

pub fn subst_atom<M: Substitute>(m: &M, a: &Atom, t: &Term) -> M {
    m.subst_with(a, t, &t.free_atoms())
}

/// The binder under which substitution continues, renamed only when it
/// would capture a free atom of the substituted term.
fn rename_binder<M: Nominal>(
    bound: &Atom,
    body: &M,
    a: &Atom,
    fa_t: &BTreeSet<Atom>,
) -> (Atom, Option<M>) {
    if !fa_t.contains(bound) {
        return (bound.clone(), None);
    }
    let mut avoid = body.free_atoms();
    avoid.extend(fa_t.iter().cloned());
    avoid.insert(a.clone());
    let c = fresh_atom(bound, &avoid);
    let renamed = body.permute(&Permutation::swap(bound.clone(), c.clone()));
    (c, Some(renamed))
}

impl Substitute for Term {
    fn subst_with(&self, a: &Atom, t: &Term, fa_t: &BTreeSet<Atom>) -> Self {
        match self {
            Term::Atom(b) if b == a => t.clone(),
            Term::Atom(_) => self.clone(),
            Term::Param(x, ts) => Term::Param(
                x.clone(),
                ts.iter().map(|s| s.subst_with(a, t, fa_t)).collect(),
            ),
            Term::App(f, ts) => Term::App(
                f.clone(),
                ts.iter().map(|s| s.subst_with(a, t, fa_t)).collect(),
            ),
            Term::Abs(b, annot, body) => {
                let annot = annot.subst_with(a, t, fa_t);
                if b == a {
                    return Term::Abs(b.clone(), annot, body.clone());
                }
                let (c, renamed) = rename_binder(b, body.as_ref(), a, fa_t);
                let body = renamed.as_ref().unwrap_or(body.as_ref());
                Term::Abs(c, annot, Box::new(body.subst_with(a, t, fa_t)))
            }
        }
    }

    fn instantiate(&self, theta: &Instantiation) -> Result<Self, RewriteError> {
        Ok(match self {
            Term::Atom(_) => self.clone(),
            Term::Param(x, ts) => {
                let mut w = theta
                    .get(x)
                    .ok_or_else(|| RewriteError::MissingInstantiation(x.clone()))?
                    .clone();
                for s in ts {
                    w = concretize(&w, &s.instantiate(theta)?)?;
                }
                w
            }
            Term::App(f, ts) => Term::App(
                f.clone(),
                ts.iter()
                    .map(|s| s.instantiate(theta))
                    .collect::<Result<_, _>>()?,
            ),
            Term::Abs(b, annot, body) => Term::Abs(
                b.clone(),
                annot.instantiate(theta)?,
                Box::new(body.instantiate(theta)?),
            ),
        })
    }
}

impl Substitute for DataSort {
    fn subst_with(&self, a: &Atom, t: &Term, fa_t: &BTreeSet<Atom>) -> Self {
        DataSort {
            ctor: self.ctor.clone(),
            args: self.args.iter().map(|s| s.subst_with(a, t, fa_t)).collect(),
        }
    }

    fn instantiate(&self, theta: &Instantiation) -> Result<Self, RewriteError> {
        Ok(DataSort {
            ctor: self.ctor.clone(),
            args: self
                .args
                .iter()
                .map(|s| s.instantiate(theta))
                .collect::<Result<_, _>>()?,
        })
    }
}

impl Substitute for Sort {
    fn subst_with(&self, a: &Atom, t: &Term, fa_t: &BTreeSet<Atom>) -> Self {
        match self {
            Sort::Data(d) => Sort::Data(d.subst_with(a, t, fa_t)),
            Sort::Abs(b, annot, body) => {
                let annot = annot.subst_with(a, t, fa_t);
                if b == a {
                    return Sort::Abs(b.clone(), annot, body.clone());
                }
                let (c, renamed) = rename_binder(b, body.as_ref(), a, fa_t);
                let body = renamed.as_ref().unwrap_or(body.as_ref());
                Sort::Abs(c, annot, Box::new(body.subst_with(a, t, fa_t)))
            }
        }
    }

    fn instantiate(&self, theta: &Instantiation) -> Result<Self, RewriteError> {
        Ok(match self {
            Sort::Data(d) => Sort::Data(d.instantiate(theta)?),
            Sort::Abs(b, annot, body) => Sort::Abs(
                b.clone(),
                annot.instantiate(theta)?,
                Box::new(body.instantiate(theta)?),
            ),
        })
    }
}

/// `w[t]`: discharges an abstraction, or suspends on a parameter.
pub fn concretize(w: &Term, t: &Term) -> Result<Term, RewriteError> {
    match w {
        Term::Abs(a, _, body) => Ok(subst_atom(body.as_ref(), a, t)),
        Term::Param(x, ts) => {
            let mut ts = ts.clone();
            ts.push(t.clone());
            Ok(Term::Param(x.clone(), ts))
        }
        _ => Err(RewriteError::ConcretionUndefined(w.clone())),
    }
}

/// A finite mapping from parameters to terms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Instantiation {
    map: BTreeMap<Param, Term>,
}

impl Instantiation {
    pub fn new() -> Self {
        Instantiation::default()
    }

    pub fn insert(&mut self, param: Param, term: Term) {
        self.map.insert(param, term);
    }

    pub fn get(&self, param: &Param) -> Option<&Term> {
        self.map.get(param)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

impl FromIterator<(Param, Term)> for Instantiation {
    fn from_iter<I: IntoIterator<Item = (Param, Term)>>(iter: I) -> Self {
        Instantiation {
            map: iter.into_iter().collect(),
        }
    }
}

pub fn instantiate<M: Substitute>(m: &M, theta: &Instantiation) -> Result<M, RewriteError> {
    m.instantiate(theta)
}

/// A declaration's telescope, target and freshness context after renaming
/// its atoms away from an avoid set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Freshened {
    pub telescope: Telescope,
    pub target: Option<DataSort>,
    pub fresh: FreshnessContext,
    pub renaming: Permutation,
}

/// Renames every atom of the declaration that collides with `avoid` to an atom
/// outside both `avoid` and the declaration. Atoms that do not collide are
/// kept, so a declaration disjoint from `avoid` comes back unchanged.
pub fn freshen_declaration(
    tel: &Telescope,
    target: Option<&DataSort>,
    fresh: &FreshnessContext,
    avoid: &BTreeSet<Atom>,
) -> Freshened {
    let mut own = BTreeSet::new();
    for b in &tel.bindings {
        b.sort.collect_atoms(&mut own);
    }
    if let Some(t) = target {
        t.collect_atoms(&mut own);
    }
    own.extend(fresh.constraints.iter().map(|c| c.atom.clone()));

    let mut taken: BTreeSet<Atom> = avoid.union(&own).cloned().collect();
    let mut renaming = Permutation::id();
    for a in own.iter().filter(|a| avoid.contains(a)) {
        let c = fresh_atom(a, &taken);
        taken.insert(c.clone());
        renaming.swaps.push((a.clone(), c));
    }

    if renaming.swaps.is_empty() {
        return Freshened {
            telescope: tel.clone(),
            target: target.cloned(),
            fresh: fresh.clone(),
            renaming,
        };
    }
    Freshened {
        telescope: Telescope::new(
            tel.bindings
                .iter()
                .map(|b| Binding {
                    param: b.param.clone(),
                    sort: b.sort.permute(&renaming),
                })
                .collect(),
        ),
        target: target.map(|t| t.permute(&renaming)),
        fresh: FreshnessContext::new(
            fresh
                .constraints
                .iter()
                .map(|c| Freshness {
                    atom: renaming.apply(&c.atom),
                    param: c.param.clone(),
                })
                .collect(),
        ),
        renaming,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::alpha_eq;

    fn at(n: &str) -> Atom {
        Atom::new(n)
    }
    fn t(n: &str) -> Term {
        Term::Atom(at(n))
    }
    fn f() -> DataSort {
        DataSort::constant("F")
    }

    #[test]
    fn fresh_atom_examples() {
        let c = at("c");
        assert_eq!(fresh_atom(&c, &BTreeSet::new()), Atom::indexed("c", 1));
        assert_eq!(
            fresh_atom(&c, &BTreeSet::from([Atom::indexed("c", 1)])),
            Atom::indexed("c", 2)
        );
        assert_eq!(
            fresh_atom(&at("b"), &BTreeSet::from([at("a")])),
            Atom::indexed("b", 1)
        );
    }

    #[test]
    fn substitution_examples() {
        let u = Term::constant("u");
        assert_eq!(subst_atom(&t("a"), &at("a"), &u), u);
        assert_eq!(subst_atom(&t("b"), &at("a"), &u), t("b"));

        let m = Term::abs(at("b"), f(), t("a"));
        let got = subst_atom(&m, &at("a"), &t("b"));
        assert_eq!(got, Term::abs(Atom::indexed("b", 1), f(), t("b")));
        let captured = Term::abs(at("b"), f(), t("b"));
        assert_eq!(alpha_eq(&got, &captured), Ok(false));

        let m = Term::abs(at("a"), f(), t("a"));
        assert_eq!(subst_atom(&m, &at("a"), &u), m);
    }

    #[test]
    fn matching_binder_substitutes_annotation_only() {
        let m = Term::abs(at("a"), DataSort::new("F", vec![t("a")]), t("a"));
        let got = subst_atom(&m, &at("a"), &t("c"));
        assert_eq!(
            got,
            Term::abs(at("a"), DataSort::new("F", vec![t("c")]), t("a"))
        );
    }

    #[test]
    fn concretion() {
        let w = Term::abs(at("a"), f(), Term::app("f", vec![t("a")]));
        let u = Term::constant("u");
        assert_eq!(concretize(&w, &u), Ok(Term::app("f", vec![u.clone()])));

        let x = Term::Param(Param::new("X"), vec![t("u")]);
        assert_eq!(
            concretize(&x, &u),
            Ok(Term::Param(Param::new("X"), vec![t("u"), u.clone()]))
        );
        assert!(matches!(
            concretize(&Term::app("f", vec![t("a")]), &u),
            Err(RewriteError::ConcretionUndefined(_))
        ));
    }

    #[test]
    fn instantiation() {
        let fa = Term::app("f", vec![t("a")]);
        let theta: Instantiation = [(Param::new("X"), fa.clone())].into_iter().collect();
        assert_eq!(instantiate(&Term::param("X"), &theta), Ok(fa));

        let theta: Instantiation = [(
            Param::new("X"),
            Term::abs(at("a"), f(), Term::app("f", vec![t("a")])),
        )]
        .into_iter()
        .collect();
        let m = Term::Param(Param::new("X"), vec![t("b")]);
        assert_eq!(instantiate(&m, &theta), Ok(Term::app("f", vec![t("b")])));

        let theta: Instantiation = [(Param::new("Y"), t("b"))].into_iter().collect();
        assert_eq!(
            instantiate(&Term::param("X"), &theta),
            Err(RewriteError::MissingInstantiation(Param::new("X")))
        );
    }

    #[test]
    fn grafting_does_not_rename() {
        // [a:F] X with X := a captures; instantiation is grafting only.
        let m = Term::abs(at("a"), f(), Term::param("X"));
        let theta: Instantiation = [(Param::new("X"), t("a"))].into_iter().collect();
        assert_eq!(instantiate(&m, &theta), Ok(Term::abs(at("a"), f(), t("a"))));
    }

    fn imp_i_telescope() -> (Telescope, DataSort, FreshnessContext) {
        let form = || Sort::constant("Form");
        let d = |x: Term| DataSort::new("D", vec![x]);
        let mut tel = Telescope::empty();
        tel.push(Param::new("P"), form());
        tel.push(Param::new("Q"), form());
        tel.push(
            Param::anonymous(2),
            Sort::abs(
                at("h"),
                d(Term::param("P")),
                Sort::Data(d(Term::param("Q"))),
            ),
        );
        let target = d(Term::app("imp", vec![Term::param("P"), Term::param("Q")]));
        let fresh = FreshnessContext::new(vec![Freshness {
            atom: at("h"),
            param: Param::new("Q"),
        }]);
        (tel, target, fresh)
    }

    #[test]
    fn freshening_renames_colliding_binders_consistently() {
        let (tel, target, fresh) = imp_i_telescope();
        let out = freshen_declaration(&tel, Some(&target), &fresh, &BTreeSet::from([at("h")]));
        let h1 = Atom::indexed("h", 1);
        match &out.telescope.bindings[2].sort {
            Sort::Abs(b, _, _) => assert_eq!(b, &h1),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(out.fresh.constraints[0].atom, h1);
        assert_eq!(out.target.as_ref(), Some(&target));
        // Permutative variant of the input.
        assert_eq!(
            out.telescope.bindings[2].sort.permute(&out.renaming),
            tel.bindings[2].sort
        );
    }

    #[test]
    fn freshening_without_collision_is_identity() {
        let (tel, target, fresh) = imp_i_telescope();
        let out = freshen_declaration(&tel, Some(&target), &fresh, &BTreeSet::from([at("z")]));
        assert_eq!(out.telescope, tel);
        assert_eq!(out.fresh, fresh);
        assert!(out.renaming.is_id());

        let empty = freshen_declaration(
            &Telescope::empty(),
            None,
            &FreshnessContext::empty(),
            &BTreeSet::from([at("h")]),
        );
        assert!(empty.telescope.is_empty());
    }
}
