//! Abstract syntax of atoms, parameters, terms, sorts and signatures, together
//! with the permutation action and the basic syntactic queries.
//!
//! Equality on every type here is literal. Identification up to renaming of
//! bound atoms lives in [`crate::relations`].

use std::collections::BTreeSet;
use std::fmt;

/// An object-level name.
///
/// User-written atoms have index 0; the fresh-name supply produces atoms that
/// share a base name and carry a larger index.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub name: String,
    pub index: u32,
}

impl Atom {
    pub fn new(name: impl Into<String>) -> Self {
        Atom {
            name: name.into(),
            index: 0,
        }
    }

    pub fn indexed(name: impl Into<String>, index: u32) -> Self {
        Atom {
            name: name.into(),
            index,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.index == 0 {
            write!(f, "{}", self.name)
        } else {
            write!(f, "{}'{}", self.name, self.index)
        }
    }
}

/// A parameter of a declaration telescope.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Param(pub String);

impl Param {
    pub fn new(name: impl Into<String>) -> Self {
        Param(name.into())
    }

    /// Reserved name for the `position`-th anonymous (`_`) telescope entry.
    /// These names cannot be produced by the lexer, so they are never
    /// referenced from source text.
    pub fn anonymous(position: usize) -> Self {
        Param(format!("_{position}"))
    }

    pub fn is_anonymous(&self) -> bool {
        self.0.starts_with('_')
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_anonymous() {
            f.write_str("_")
        } else {
            f.write_str(&self.0)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Atom(Atom),
    /// A parameter with its suspended concretions, `X[t1,...,tn]`.
    Param(Param, Vec<Term>),
    App(String, Vec<Term>),
    /// `[a:F(..)] t`
    Abs(Atom, DataSort, Box<Term>),
}

impl Term {
    pub fn atom(a: Atom) -> Self {
        Term::Atom(a)
    }

    pub fn param(name: impl Into<String>) -> Self {
        Term::Param(Param::new(name), Vec::new())
    }

    pub fn app(ctor: impl Into<String>, args: Vec<Term>) -> Self {
        Term::App(ctor.into(), args)
    }

    pub fn constant(ctor: impl Into<String>) -> Self {
        Term::App(ctor.into(), Vec::new())
    }

    pub fn abs(bound: Atom, annot: DataSort, body: Term) -> Self {
        Term::Abs(bound, annot, Box::new(body))
    }

    /// Number of nodes, counting annotations.
    pub fn size(&self) -> usize {
        match self {
            Term::Atom(_) => 1,
            Term::Param(_, ts) | Term::App(_, ts) => 1 + ts.iter().map(Term::size).sum::<usize>(),
            Term::Abs(_, annot, body) => 1 + annot.size() + body.size(),
        }
    }
}

/// A fully applied sort constructor `F(t1,...,tn)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DataSort {
    pub ctor: String,
    pub args: Vec<Term>,
}

impl DataSort {
    pub fn new(ctor: impl Into<String>, args: Vec<Term>) -> Self {
        DataSort {
            ctor: ctor.into(),
            args,
        }
    }

    pub fn constant(ctor: impl Into<String>) -> Self {
        DataSort::new(ctor, Vec::new())
    }

    pub fn size(&self) -> usize {
        1 + self.args.iter().map(Term::size).sum::<usize>()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sort {
    Data(DataSort),
    /// `[a:F(..)] s`; atoms only ever carry data sorts.
    Abs(Atom, DataSort, Box<Sort>),
}

impl Sort {
    pub fn data(ctor: impl Into<String>, args: Vec<Term>) -> Self {
        Sort::Data(DataSort::new(ctor, args))
    }

    pub fn constant(ctor: impl Into<String>) -> Self {
        Sort::Data(DataSort::constant(ctor))
    }

    pub fn abs(bound: Atom, annot: DataSort, body: Sort) -> Self {
        Sort::Abs(bound, annot, Box::new(body))
    }
}

impl From<DataSort> for Sort {
    fn from(d: DataSort) -> Self {
        Sort::Data(d)
    }
}

/// A finite permutation of atoms, stored as a list of swappings.
///
/// The list `[s1, ..., sn]` acts as `s1 ∘ ... ∘ sn`: the last swapping is
/// applied first, so composition is concatenation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Permutation {
    pub swaps: Vec<(Atom, Atom)>,
}

impl Permutation {
    pub fn id() -> Self {
        Permutation::default()
    }

    pub fn swap(a: Atom, b: Atom) -> Self {
        Permutation {
            swaps: vec![(a, b)],
        }
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let mut swaps = self.swaps.clone();
        swaps.extend(other.swaps.iter().cloned());
        Permutation { swaps }
    }

    pub fn apply(&self, a: &Atom) -> Atom {
        let mut cur = a;
        for (x, y) in self.swaps.iter().rev() {
            if cur == x {
                cur = y;
            } else if cur == y {
                cur = x;
            }
        }
        cur.clone()
    }

    pub fn is_id(&self) -> bool {
        self.swaps.iter().all(|(x, y)| x == y)
    }
}

/// Telescope entry `X : s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binding {
    pub param: Param,
    pub sort: Sort,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Telescope {
    pub bindings: Vec<Binding>,
}

impl Telescope {
    pub fn new(bindings: Vec<Binding>) -> Self {
        Telescope { bindings }
    }

    pub fn empty() -> Self {
        Telescope::default()
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn lookup(&self, p: &Param) -> Option<&Sort> {
        self.bindings
            .iter()
            .rev()
            .find(|b| &b.param == p)
            .map(|b| &b.sort)
    }

    pub fn push(&mut self, param: Param, sort: Sort) {
        self.bindings.push(Binding { param, sort });
    }
}

/// Ordered atom bindings `a : F(..)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AtomContext {
    pub bindings: Vec<(Atom, DataSort)>,
}

impl AtomContext {
    pub fn new(bindings: Vec<(Atom, DataSort)>) -> Self {
        AtomContext { bindings }
    }

    pub fn empty() -> Self {
        AtomContext::default()
    }

    pub fn lookup(&self, a: &Atom) -> Option<&DataSort> {
        self.bindings
            .iter()
            .rev()
            .find(|(b, _)| b == a)
            .map(|(_, s)| s)
    }

    pub fn contains(&self, a: &Atom) -> bool {
        self.bindings.iter().any(|(b, _)| b == a)
    }

    pub fn push(&mut self, a: Atom, sort: DataSort) {
        self.bindings.push((a, sort));
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    /// Domain atoms together with every atom free in the bound sorts.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        for (a, s) in &self.bindings {
            out.insert(a.clone());
            s.collect_free_atoms(&mut out);
        }
        out
    }

    pub fn permute(&self, pi: &Permutation) -> AtomContext {
        AtomContext {
            bindings: self
                .bindings
                .iter()
                .map(|(a, s)| (pi.apply(a), s.permute(pi)))
                .collect(),
        }
    }
}

/// Constraint `a # X` of a declaration.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Freshness {
    pub atom: Atom,
    pub param: Param,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreshnessContext {
    pub constraints: Vec<Freshness>,
}

impl FreshnessContext {
    pub fn new(constraints: Vec<Freshness>) -> Self {
        FreshnessContext { constraints }
    }

    pub fn empty() -> Self {
        FreshnessContext::default()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }
}

/// A sort-constructor declaration (`target == None`) or a term-constructor
/// declaration with its data-sort target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Declaration {
    pub name: String,
    pub telescope: Telescope,
    pub target: Option<DataSort>,
    pub fresh: FreshnessContext,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeclKind {
    Sort,
    Term,
}

impl Declaration {
    pub fn sort(name: impl Into<String>, telescope: Telescope, fresh: FreshnessContext) -> Self {
        Declaration {
            name: name.into(),
            telescope,
            target: None,
            fresh,
        }
    }

    pub fn term(
        name: impl Into<String>,
        telescope: Telescope,
        target: DataSort,
        fresh: FreshnessContext,
    ) -> Self {
        Declaration {
            name: name.into(),
            telescope,
            target: Some(target),
            fresh,
        }
    }

    pub fn kind(&self) -> DeclKind {
        if self.target.is_some() {
            DeclKind::Term
        } else {
            DeclKind::Sort
        }
    }

    /// Every atom occurring anywhere in the declaration.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        for b in &self.telescope.bindings {
            b.sort.collect_atoms(&mut out);
        }
        if let Some(t) = &self.target {
            t.collect_atoms(&mut out);
        }
        for c in &self.fresh.constraints {
            out.insert(c.atom.clone());
        }
        out
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    pub decls: Vec<Declaration>,
}

impl Signature {
    pub fn new(decls: Vec<Declaration>) -> Self {
        Signature { decls }
    }
}

/// Structural operations shared by terms, data sorts and sorts.
pub trait Nominal: Clone {
    /// Permutation action: every atom occurrence, binders and annotations
    /// included, is replaced by its image.
    fn permute(&self, pi: &Permutation) -> Self;

    fn collect_free_atoms(&self, out: &mut BTreeSet<Atom>);

    /// Free and bound atoms alike.
    fn collect_atoms(&self, out: &mut BTreeSet<Atom>);

    fn is_ground(&self) -> bool;

    /// Binder atoms of abstractions and abstraction sorts.
    fn collect_binders(&self, out: &mut BTreeSet<Atom>);

    fn free_atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_free_atoms(&mut out);
        out
    }

    fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn binders(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_binders(&mut out);
        out
    }
}

pub fn apply_perm<M: Nominal>(pi: &Permutation, m: &M) -> M {
    m.permute(pi)
}

pub fn free_atoms<M: Nominal>(m: &M) -> BTreeSet<Atom> {
    m.free_atoms()
}

pub fn is_ground<M: Nominal>(m: &M) -> bool {
    m.is_ground()
}

fn free_under_binder(
    bound: &Atom,
    annot: &DataSort,
    body: &impl Nominal,
    out: &mut BTreeSet<Atom>,
) {
    annot.collect_free_atoms(out);
    let mut inner = BTreeSet::new();
    body.collect_free_atoms(&mut inner);
    inner.remove(bound);
    out.extend(inner);
}

impl Nominal for Term {
    fn permute(&self, pi: &Permutation) -> Self {
        match self {
            Term::Atom(a) => Term::Atom(pi.apply(a)),
            Term::Param(x, ts) => {
                Term::Param(x.clone(), ts.iter().map(|t| t.permute(pi)).collect())
            }
            Term::App(f, ts) => Term::App(f.clone(), ts.iter().map(|t| t.permute(pi)).collect()),
            Term::Abs(a, annot, body) => {
                Term::Abs(pi.apply(a), annot.permute(pi), Box::new(body.permute(pi)))
            }
        }
    }

    fn collect_free_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Term::Atom(a) => {
                out.insert(a.clone());
            }
            Term::Param(_, ts) | Term::App(_, ts) => {
                ts.iter().for_each(|t| t.collect_free_atoms(out))
            }
            Term::Abs(a, annot, body) => free_under_binder(a, annot, body.as_ref(), out),
        }
    }

    fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Term::Atom(a) => {
                out.insert(a.clone());
            }
            Term::Param(_, ts) | Term::App(_, ts) => ts.iter().for_each(|t| t.collect_atoms(out)),
            Term::Abs(a, annot, body) => {
                out.insert(a.clone());
                annot.collect_atoms(out);
                body.collect_atoms(out);
            }
        }
    }

    fn is_ground(&self) -> bool {
        match self {
            Term::Atom(_) => true,
            Term::Param(..) => false,
            Term::App(_, ts) => ts.iter().all(Term::is_ground),
            Term::Abs(_, annot, body) => annot.is_ground() && body.is_ground(),
        }
    }

    fn collect_binders(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Term::Atom(_) => {}
            Term::Param(_, ts) | Term::App(_, ts) => ts.iter().for_each(|t| t.collect_binders(out)),
            Term::Abs(a, annot, body) => {
                out.insert(a.clone());
                annot.collect_binders(out);
                body.collect_binders(out);
            }
        }
    }
}

impl Nominal for DataSort {
    fn permute(&self, pi: &Permutation) -> Self {
        DataSort {
            ctor: self.ctor.clone(),
            args: self.args.iter().map(|t| t.permute(pi)).collect(),
        }
    }

    fn collect_free_atoms(&self, out: &mut BTreeSet<Atom>) {
        self.args.iter().for_each(|t| t.collect_free_atoms(out))
    }

    fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        self.args.iter().for_each(|t| t.collect_atoms(out))
    }

    fn is_ground(&self) -> bool {
        self.args.iter().all(Term::is_ground)
    }

    fn collect_binders(&self, out: &mut BTreeSet<Atom>) {
        self.args.iter().for_each(|t| t.collect_binders(out))
    }
}

impl Nominal for Sort {
    fn permute(&self, pi: &Permutation) -> Self {
        match self {
            Sort::Data(d) => Sort::Data(d.permute(pi)),
            Sort::Abs(a, annot, body) => {
                Sort::Abs(pi.apply(a), annot.permute(pi), Box::new(body.permute(pi)))
            }
        }
    }

    fn collect_free_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Sort::Data(d) => d.collect_free_atoms(out),
            Sort::Abs(a, annot, body) => free_under_binder(a, annot, body.as_ref(), out),
        }
    }

    fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Sort::Data(d) => d.collect_atoms(out),
            Sort::Abs(a, annot, body) => {
                out.insert(a.clone());
                annot.collect_atoms(out);
                body.collect_atoms(out);
            }
        }
    }

    fn is_ground(&self) -> bool {
        match self {
            Sort::Data(d) => d.is_ground(),
            Sort::Abs(_, annot, body) => annot.is_ground() && body.is_ground(),
        }
    }

    fn collect_binders(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Sort::Data(d) => d.collect_binders(out),
            Sort::Abs(a, annot, body) => {
                out.insert(a.clone());
                annot.collect_binders(out);
                body.collect_binders(out);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Atom {
        Atom::new("a")
    }
    fn b() -> Atom {
        Atom::new("b")
    }
    fn f_sort() -> DataSort {
        DataSort::constant("F")
    }

    #[test]
    fn identity_permutation_is_identity() {
        let t = Term::app(
            "f",
            vec![Term::Atom(a()), Term::abs(b(), f_sort(), Term::Atom(b()))],
        );
        assert_eq!(apply_perm(&Permutation::id(), &t), t);
    }

    #[test]
    fn swap_acts_on_atoms_and_binders() {
        let pi = Permutation::swap(a(), b());
        assert_eq!(apply_perm(&pi, &Term::Atom(a())), Term::Atom(b()));
        let t = Term::abs(a(), f_sort(), Term::Atom(a()));
        assert_eq!(
            apply_perm(&pi, &t),
            Term::abs(b(), f_sort(), Term::Atom(b()))
        );
    }

    #[test]
    fn composition_applies_right_first() {
        let c = Atom::new("c");
        let p = Permutation::swap(a(), b());
        let q = Permutation::swap(b(), c.clone());
        // (a b) ∘ (b c) sends c to b, then b to a.
        assert_eq!(p.compose(&q).apply(&c), a());
        assert_eq!(p.apply(&q.apply(&c)), a());
    }

    #[test]
    fn free_atoms_examples() {
        let t = Term::abs(a(), f_sort(), Term::Atom(a()));
        assert!(free_atoms(&t).is_empty());

        let t = Term::abs(
            a(),
            DataSort::new("F", vec![Term::Atom(b())]),
            Term::Atom(a()),
        );
        assert_eq!(free_atoms(&t), BTreeSet::from([b()]));

        let t = Term::app(
            "f",
            vec![
                Term::Atom(a()),
                Term::Param(Param::new("X"), vec![Term::Atom(b())]),
            ],
        );
        assert_eq!(free_atoms(&t), BTreeSet::from([a(), b()]));
    }

    #[test]
    fn groundness() {
        assert!(is_ground(&Term::Atom(a())));
        assert!(!is_ground(&Term::param("X")));
        let t = Term::app(
            "f",
            vec![Term::abs(
                a(),
                f_sort(),
                Term::Param(Param::new("X"), vec![Term::Atom(a())]),
            )],
        );
        assert!(!is_ground(&t));
    }

    #[test]
    fn atom_rendering() {
        assert_eq!(Atom::indexed("c", 2).to_string(), "c'2");
        assert_eq!(Atom::new("c").to_string(), "c");
        assert_eq!(Param::anonymous(3).to_string(), "_");
    }
}
