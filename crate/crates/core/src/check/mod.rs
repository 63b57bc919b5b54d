//! The sorting system: well-formed signatures, telescopes, atom contexts and
//! sorts, and sort inference for terms.
//!
//! Every sort comparison is alpha-equivalence (extended to parameters when
//! checking inside a declaration), so conversion never appears as a separate
//! search step and inference is syntax-directed.

mod derivation;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::relations::Alpha;
use crate::rewrite::{fresh_atom, freshen_declaration, Instantiation, RewriteError, Substitute};
use crate::surface::Judgment;
use crate::syntax::{
    Atom, AtomContext, Declaration, Nominal, Param, Permutation, Signature, Sort, Telescope, Term,
};

pub use derivation::{replay, Derivation, ReplayError};

/// Rule labels of the sorting system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    EmptySig,
    SortSig,
    FunSig,
    EmptyTel,
    ConsTel,
    EmptyCtx,
    ConsCtx,
    Data,
    AbsSort,
    Atm,
    Var1,
    Var2,
    Constr,
    Abs,
    Conv,
    Fits,
    Fresh,
    FreshCtx,
}

impl Rule {
    pub fn label(self) -> &'static str {
        match self {
            Rule::EmptySig => "empty-sig",
            Rule::SortSig => "sort-sig",
            Rule::FunSig => "fun-sig",
            Rule::EmptyTel => "empty-tel",
            Rule::ConsTel => "cons-tel",
            Rule::EmptyCtx => "emp-ctx",
            Rule::ConsCtx => "cons-ctx",
            Rule::Data => "data",
            Rule::AbsSort => "abs-*",
            Rule::Atm => "atm",
            Rule::Var1 => "var1",
            Rule::Var2 => "var2",
            Rule::Constr => "constr",
            Rule::Abs => "abs",
            Rule::Conv => "conv",
            Rule::Fits => "fits",
            Rule::Fresh => "fresh",
            Rule::FreshCtx => "fresh-ctx",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ErrorKind {
    #[error("constructor `{0}` is already declared")]
    DuplicateConstructor(String),
    #[error("parameter {0} is already bound in the telescope")]
    DuplicateParameter(Param),
    #[error("atom {0} is already bound in the context")]
    DuplicateAtom(Atom),
    #[error("unknown sort constructor `{0}`")]
    UnknownSortConstructor(String),
    #[error("unknown term constructor `{0}`")]
    UnknownTermConstructor(String),
    #[error("atom {0} is not bound in the context")]
    UnboundAtom(Atom),
    #[error("parameter {0} is not bound in the telescope")]
    UnboundParameter(Param),
    #[error("`{ctor}` expects {expected} argument(s), found {found}")]
    ArityMismatch {
        ctor: String,
        expected: usize,
        found: usize,
    },
    #[error("argument {} of `{ctor}` has sort {found}, expected {expected}", .index + 1)]
    ArgumentSort {
        ctor: String,
        index: usize,
        expected: Sort,
        found: Sort,
    },
    #[error("term has sort {found}, expected {expected}")]
    SortMismatch { expected: Sort, found: Sort },
    #[error("concretion of {param}, whose sort {sort} is not an abstraction sort")]
    NotAnAbstraction { param: Param, sort: Sort },
    #[error("freshness constraint {atom} # {param} violated: {atom} occurs free in {instance}")]
    FreshnessViolation {
        atom: Atom,
        param: Param,
        instance: Term,
    },
    #[error("freshness constraint {atom} # {param} names a parameter not in the telescope")]
    FreshnessUnknownParameter { atom: Atom, param: Param },
    #[error("freshness constraint {atom} # {param} names an atom not bound in the declaration")]
    FreshnessUnboundAtom { atom: Atom, param: Param },
    #[error("ill-sorted instantiation: {0}")]
    Instantiation(RewriteError),
}

impl ErrorKind {
    /// Stable short name used by diagnostics and the negative test suite.
    pub fn class(&self) -> &'static str {
        match self {
            ErrorKind::DuplicateConstructor(_) => "duplicate-declaration",
            ErrorKind::DuplicateParameter(_) => "duplicate-parameter",
            ErrorKind::DuplicateAtom(_) => "duplicate-atom",
            ErrorKind::UnknownSortConstructor(_) | ErrorKind::UnknownTermConstructor(_) => {
                "unknown-constructor"
            }
            ErrorKind::UnboundAtom(_) => "unbound-atom",
            ErrorKind::UnboundParameter(_) => "unbound-parameter",
            ErrorKind::ArityMismatch { .. } => "arity-mismatch",
            ErrorKind::ArgumentSort { .. } | ErrorKind::SortMismatch { .. } => "sort-mismatch",
            ErrorKind::NotAnAbstraction { .. } => "not-an-abstraction",
            ErrorKind::FreshnessViolation { .. } => "freshness-violation",
            ErrorKind::FreshnessUnknownParameter { .. }
            | ErrorKind::FreshnessUnboundAtom { .. } => "ill-formed-freshness-context",
            ErrorKind::Instantiation(_) => "instantiation",
        }
    }
}

/// A failed judgment: the rule that could not be applied, the judgment it
/// was applied to, and why.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("({rule}) {kind}\n  in: {judgment}")]
pub struct SortingError {
    pub rule: Rule,
    pub judgment: String,
    pub kind: Box<ErrorKind>,
}

impl SortingError {
    pub fn class(&self) -> &'static str {
        self.kind.class()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("declaration {} (`{name}`): {error}", .index + 1)]
pub struct SignatureError {
    pub index: usize,
    pub name: String,
    pub error: SortingError,
}

/// A signature whose declarations have all been checked, in order.
#[derive(Clone, Debug, Default)]
pub struct CheckedSignature {
    sig: Signature,
    sorts: HashMap<String, usize>,
    ops: HashMap<String, usize>,
}

/// Outcome of checking each declaration of a signature.
#[derive(Clone, Debug)]
pub struct SignatureReport {
    pub checked: CheckedSignature,
    pub results: Vec<(String, Result<(), SortingError>)>,
}

impl SignatureReport {
    pub fn is_ok(&self) -> bool {
        self.results.iter().all(|(_, r)| r.is_ok())
    }
}

fn err<T>(
    rule: Rule,
    judgment: impl FnOnce() -> String,
    kind: ErrorKind,
) -> Result<T, SortingError> {
    Err(SortingError {
        rule,
        judgment: judgment(),
        kind: Box::new(kind),
    })
}

fn declaration_judgment(d: &Declaration) -> String {
    format!("|- {d} sig-ok")
}

impl CheckedSignature {
    pub fn empty() -> Self {
        CheckedSignature::default()
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn sort_decl(&self, name: &str) -> Option<&Declaration> {
        self.sorts.get(name).map(|&i| &self.sig.decls[i])
    }

    pub fn op_decl(&self, name: &str) -> Option<&Declaration> {
        self.ops.get(name).map(|&i| &self.sig.decls[i])
    }

    /// Checks `decl` against the declarations so far and appends it.
    pub fn extend(&mut self, decl: Declaration) -> Result<(), SortingError> {
        let (rule, table) = match decl.target {
            None => (Rule::SortSig, &self.sorts),
            Some(_) => (Rule::FunSig, &self.ops),
        };
        if table.contains_key(&decl.name) {
            return err(
                rule,
                || declaration_judgment(&decl),
                ErrorKind::DuplicateConstructor(decl.name.clone()),
            );
        }
        self.check_telescope(&decl.telescope)?;
        if let Some(target) = &decl.target {
            let mut ck = Kernel::new(self, &decl.telescope, AtomContext::empty(), false);
            ck.check_sort(&Sort::Data(target.clone()))?;
        }
        check_freshness_context_wf(&decl)?;

        let index = self.sig.decls.len();
        match decl.target {
            None => self.sorts.insert(decl.name.clone(), index),
            Some(_) => self.ops.insert(decl.name.clone(), index),
        };
        self.sig.decls.push(decl);
        Ok(())
    }

    /// `⊢ T tel-ok`: every entry is a sort over the preceding entries, with no
    /// atoms in scope.
    pub fn check_telescope(&self, tel: &Telescope) -> Result<(), SortingError> {
        let mut prefix = Telescope::empty();
        let mut seen = HashSet::new();
        for b in &tel.bindings {
            if !b.param.is_anonymous() && !seen.insert(b.param.clone()) {
                return err(
                    Rule::ConsTel,
                    || format!("|- {tel} tel-ok"),
                    ErrorKind::DuplicateParameter(b.param.clone()),
                );
            }
            Kernel::new(self, &prefix, AtomContext::empty(), false).check_sort(&b.sort)?;
            prefix.push(b.param.clone(), b.sort.clone());
        }
        Ok(())
    }

    /// `T ⊢ Γ ctx-ok`; assumes the telescope has been checked.
    pub fn check_context(&self, tel: &Telescope, gamma: &AtomContext) -> Result<(), SortingError> {
        let mut prefix = AtomContext::empty();
        for (a, s) in &gamma.bindings {
            if prefix.contains(a) {
                return err(
                    Rule::ConsCtx,
                    || format!("{gamma} ctx-ok"),
                    ErrorKind::DuplicateAtom(a.clone()),
                );
            }
            Kernel::new(self, tel, prefix.clone(), false).check_sort(&Sort::Data(s.clone()))?;
            prefix.push(a.clone(), s.clone());
        }
        Ok(())
    }

    fn validated<'a>(
        &'a self,
        tel: &'a Telescope,
        gamma: &AtomContext,
        trace: bool,
    ) -> Result<Kernel<'a>, SortingError> {
        self.check_telescope(tel)?;
        self.check_context(tel, gamma)?;
        Ok(Kernel::new(self, tel, gamma.clone(), trace))
    }

    /// `T; Γ ⊢ s sort`
    pub fn check_sort(
        &self,
        tel: &Telescope,
        gamma: &AtomContext,
        s: &Sort,
    ) -> Result<(), SortingError> {
        self.validated(tel, gamma, false)?.check_sort(s).map(drop)
    }

    /// The sort of `t`, unique up to alpha-equivalence.
    pub fn infer_sort(
        &self,
        tel: &Telescope,
        gamma: &AtomContext,
        t: &Term,
    ) -> Result<Sort, SortingError> {
        self.validated(tel, gamma, false)?.infer(t).map(|(s, _)| s)
    }

    pub fn check_term(
        &self,
        tel: &Telescope,
        gamma: &AtomContext,
        t: &Term,
        expected: &Sort,
    ) -> Result<(), SortingError> {
        self.validated(tel, gamma, false)?
            .check(t, expected)
            .map(drop)
    }

    /// Checks that `args` fit an already freshened telescope and that the
    /// instantiated freshness constraints hold. Returns the instantiation of
    /// the telescope's parameters.
    pub fn fits(
        &self,
        tel: &Telescope,
        gamma: &AtomContext,
        args: &[Term],
        decl_tel: &Telescope,
        decl_fresh: &crate::syntax::FreshnessContext,
    ) -> Result<Instantiation, SortingError> {
        self.validated(tel, gamma, false)?
            .fits("_", args, decl_tel, decl_fresh)
            .map(|(theta, _)| theta)
    }

    /// Like [`CheckedSignature::fits`], looking up and freshening the
    /// declaration of `ctor` first.
    pub fn fits_constructor(
        &self,
        gamma: &AtomContext,
        args: &[Term],
        ctor: &str,
    ) -> Result<Instantiation, SortingError> {
        let tel = Telescope::empty();
        let mut k = self.validated(&tel, gamma, false)?;
        let decl = match self.op_decl(ctor).or_else(|| self.sort_decl(ctor)) {
            Some(d) => d,
            None => {
                return err(
                    Rule::Fits,
                    || format!("{gamma} |- ({}) fits {ctor}", comma(args)),
                    ErrorKind::UnknownTermConstructor(ctor.to_string()),
                )
            }
        };
        let mut avoid = k.ambient_atoms();
        args.iter().for_each(|t| t.collect_free_atoms(&mut avoid));
        let fr = freshen_declaration(&decl.telescope, decl.target.as_ref(), &decl.fresh, &avoid);
        k.fits(ctor, args, &fr.telescope, &fr.fresh)
            .map(|(theta, _)| theta)
    }

    /// Ground sort inference with a derivation tree.
    pub fn derive_sort(
        &self,
        gamma: &AtomContext,
        t: &Term,
    ) -> Result<(Sort, Derivation), SortingError> {
        let tel = Telescope::empty();
        let (s, d) = self.validated(&tel, gamma, true)?.infer(t)?;
        Ok((s, d.expect("tracing enabled")))
    }

    pub fn derive_check(
        &self,
        gamma: &AtomContext,
        t: &Term,
        expected: &Sort,
    ) -> Result<Derivation, SortingError> {
        let tel = Telescope::empty();
        let d = self.validated(&tel, gamma, true)?.check(t, expected)?;
        Ok(d.expect("tracing enabled"))
    }

    pub fn derive_is_sort(
        &self,
        gamma: &AtomContext,
        s: &Sort,
    ) -> Result<Derivation, SortingError> {
        let tel = Telescope::empty();
        let d = self.validated(&tel, gamma, true)?.check_sort(s)?;
        Ok(d.expect("tracing enabled"))
    }
}

/// Checks a whole signature, stopping at the first ill-formed declaration.
pub fn check_signature(sig: &Signature) -> Result<CheckedSignature, SignatureError> {
    let mut out = CheckedSignature::empty();
    for (index, d) in sig.decls.iter().enumerate() {
        out.extend(d.clone()).map_err(|error| SignatureError {
            index,
            name: d.name.clone(),
            error,
        })?;
    }
    Ok(out)
}

/// Checks every declaration, skipping ill-formed ones so later declarations
/// still get a verdict.
pub fn check_signature_report(sig: &Signature) -> SignatureReport {
    let mut checked = CheckedSignature::empty();
    let results = sig
        .decls
        .iter()
        .map(|d| (d.name.clone(), checked.extend(d.clone())))
        .collect();
    SignatureReport { checked, results }
}

/// Every constraint `a # X` names a telescope parameter and an atom bound
/// somewhere in the declaration.
pub fn check_freshness_context_wf(decl: &Declaration) -> Result<(), SortingError> {
    let mut binders = BTreeSet::new();
    for b in &decl.telescope.bindings {
        b.sort.collect_binders(&mut binders);
    }
    if let Some(t) = &decl.target {
        t.collect_binders(&mut binders);
    }
    for c in &decl.fresh.constraints {
        let known = decl
            .telescope
            .bindings
            .iter()
            .any(|b| !b.param.is_anonymous() && b.param == c.param);
        if !known {
            return err(
                Rule::FreshCtx,
                || declaration_judgment(decl),
                ErrorKind::FreshnessUnknownParameter {
                    atom: c.atom.clone(),
                    param: c.param.clone(),
                },
            );
        }
        if !binders.contains(&c.atom) {
            return err(
                Rule::FreshCtx,
                || declaration_judgment(decl),
                ErrorKind::FreshnessUnboundAtom {
                    atom: c.atom.clone(),
                    param: c.param.clone(),
                },
            );
        }
    }
    Ok(())
}

fn comma(ts: &[Term]) -> String {
    ts.iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Rule application state: the ambient telescope and a context that grows
/// and shrinks as abstractions are entered and left.
struct Kernel<'a> {
    sig: &'a CheckedSignature,
    tel: &'a Telescope,
    gamma: AtomContext,
    tel_atoms: BTreeSet<Atom>,
    trace: bool,
}

type Traced<T> = Result<(T, Option<Derivation>), SortingError>;

impl<'a> Kernel<'a> {
    fn new(sig: &'a CheckedSignature, tel: &'a Telescope, gamma: AtomContext, trace: bool) -> Self {
        let mut tel_atoms = BTreeSet::new();
        for b in &tel.bindings {
            b.sort.collect_free_atoms(&mut tel_atoms);
        }
        Kernel {
            sig,
            tel,
            gamma,
            tel_atoms,
            trace,
        }
    }

    fn ambient_atoms(&self) -> BTreeSet<Atom> {
        let mut out = self.gamma.atoms();
        out.extend(self.tel_atoms.iter().cloned());
        out
    }

    fn node(
        &self,
        rule: Rule,
        conclusion: impl FnOnce() -> Judgment,
        premises: Vec<Option<Derivation>>,
    ) -> Option<Derivation> {
        self.trace.then(|| Derivation {
            rule: rule.label().to_string(),
            conclusion: conclusion().to_string(),
            premises: premises.into_iter().flatten().collect(),
        })
    }

    fn has_sort(&self, t: &Term, s: &Sort) -> Judgment {
        Judgment::HasSort {
            ctx: self.gamma.clone(),
            term: t.clone(),
            sort: s.clone(),
        }
    }

    fn pending(&self, t: &Term) -> String {
        if self.gamma.is_empty() {
            format!("|- {t} : ?")
        } else {
            format!("{} |- {t} : ?", self.gamma)
        }
    }

    fn pending_sort(&self, s: &Sort) -> String {
        if self.gamma.is_empty() {
            format!("|- {s} sort")
        } else {
            format!("{} |- {s} sort", self.gamma)
        }
    }

    fn check_sort(&mut self, s: &Sort) -> Result<Option<Derivation>, SortingError> {
        match s {
            Sort::Data(d) => {
                let decl = match self.sig.sort_decl(&d.ctor) {
                    Some(decl) => decl,
                    None => {
                        return err(
                            Rule::Data,
                            || self.pending_sort(s),
                            ErrorKind::UnknownSortConstructor(d.ctor.clone()),
                        )
                    }
                };
                let mut avoid = self.ambient_atoms();
                d.collect_free_atoms(&mut avoid);
                let fr = freshen_declaration(&decl.telescope, None, &decl.fresh, &avoid);
                let (_, fits) = self.fits(&d.ctor, &d.args, &fr.telescope, &fr.fresh)?;
                Ok(self.node(
                    Rule::Data,
                    || Judgment::IsSort {
                        ctx: self.gamma.clone(),
                        sort: s.clone(),
                    },
                    vec![fits],
                ))
            }
            Sort::Abs(a, annot, body) => {
                let annot_d = self.check_sort(&Sort::Data(annot.clone()))?;
                let mut avoid = self.ambient_atoms();
                s.collect_free_atoms(&mut avoid);
                let b = fresh_atom(a, &avoid);
                let swapped = body.permute(&Permutation::swap(a.clone(), b.clone()));
                self.gamma.push(b, annot.clone());
                let body_d = self.check_sort(&swapped);
                self.gamma.bindings.pop();
                let body_d = body_d?;
                Ok(self.node(
                    Rule::AbsSort,
                    || Judgment::IsSort {
                        ctx: self.gamma.clone(),
                        sort: s.clone(),
                    },
                    vec![annot_d, body_d],
                ))
            }
        }
    }

    fn infer(&mut self, t: &Term) -> Traced<Sort> {
        match t {
            Term::Atom(a) => match self.gamma.lookup(a) {
                Some(d) => {
                    let s = Sort::Data(d.clone());
                    let node = self.node(Rule::Atm, || self.has_sort(t, &s), vec![]);
                    Ok((s, node))
                }
                None => err(
                    Rule::Atm,
                    || self.pending(t),
                    ErrorKind::UnboundAtom(a.clone()),
                ),
            },
            Term::Param(x, concretions) => self.infer_param(t, x, concretions),
            Term::App(f, args) => {
                let decl = match self.sig.op_decl(f) {
                    Some(decl) => decl,
                    None => {
                        return err(
                            Rule::Constr,
                            || self.pending(t),
                            ErrorKind::UnknownTermConstructor(f.clone()),
                        )
                    }
                };
                let mut avoid = self.ambient_atoms();
                t.collect_free_atoms(&mut avoid);
                let fr =
                    freshen_declaration(&decl.telescope, decl.target.as_ref(), &decl.fresh, &avoid);
                let (theta, fits) = self.fits(f, args, &fr.telescope, &fr.fresh)?;
                let target = fr.target.expect("term constructors have a target");
                let target = match target.instantiate(&theta) {
                    Ok(target) => target,
                    Err(e) => {
                        return err(
                            Rule::Constr,
                            || self.pending(t),
                            ErrorKind::Instantiation(e),
                        )
                    }
                };
                let s = Sort::Data(target);
                let node = self.node(Rule::Constr, || self.has_sort(t, &s), vec![fits]);
                Ok((s, node))
            }
            Term::Abs(a, annot, body) => {
                let annot_d = self.check_sort(&Sort::Data(annot.clone()))?;
                let mut avoid = self.ambient_atoms();
                t.collect_free_atoms(&mut avoid);
                let b = fresh_atom(a, &avoid);
                let swap = Permutation::swap(a.clone(), b.clone());
                let swapped = body.permute(&swap);
                self.gamma.push(b.clone(), annot.clone());
                let inner = self.infer(&swapped);
                self.gamma.bindings.pop();
                let (body_sort, body_d) = inner?;
                // Keep the user's binder when it is fresh for the body sort;
                // otherwise the generated binder gives an alpha-variant.
                let s = if body_sort.fresh_for(a) {
                    Sort::abs(a.clone(), annot.clone(), body_sort.permute(&swap))
                } else {
                    Sort::abs(b, annot.clone(), body_sort)
                };
                let node = self.node(Rule::Abs, || self.has_sort(t, &s), vec![annot_d, body_d]);
                Ok((s, node))
            }
        }
    }

    fn infer_param(&mut self, t: &Term, x: &Param, concretions: &[Term]) -> Traced<Sort> {
        let mut cur = match self.tel.lookup(x) {
            Some(s) => s.clone(),
            None => {
                return err(
                    Rule::Var1,
                    || self.pending(t),
                    ErrorKind::UnboundParameter(x.clone()),
                )
            }
        };
        let head = Term::Param(x.clone(), vec![]);
        let mut node = self.node(Rule::Var1, || self.has_sort(&head, &cur), vec![]);
        for (k, arg) in concretions.iter().enumerate() {
            let (a, annot, body) = match &cur {
                Sort::Abs(a, annot, body) => (a, annot, body),
                Sort::Data(_) => {
                    return err(
                        Rule::Var2,
                        || self.pending(t),
                        ErrorKind::NotAnAbstraction {
                            param: x.clone(),
                            sort: cur.clone(),
                        },
                    )
                }
            };
            let arg_d = self.check(arg, &Sort::Data(annot.clone()))?;
            let next = crate::rewrite::subst_atom(body.as_ref(), a, arg);
            let partial = Term::Param(x.clone(), concretions[..=k].to_vec());
            node = self.node(
                Rule::Var2,
                || self.has_sort(&partial, &next),
                vec![node, arg_d],
            );
            cur = next;
        }
        Ok((cur, node))
    }

    fn check(&mut self, t: &Term, expected: &Sort) -> Result<Option<Derivation>, SortingError> {
        let (found, d) = self.infer(t)?;
        if !found.alpha_open(expected) {
            return err(
                Rule::Conv,
                || self.pending(t),
                ErrorKind::SortMismatch {
                    expected: expected.clone(),
                    found,
                },
            );
        }
        Ok(self.convert(t, &found, expected, d))
    }

    fn convert(
        &self,
        t: &Term,
        found: &Sort,
        expected: &Sort,
        d: Option<Derivation>,
    ) -> Option<Derivation> {
        if found == expected {
            d
        } else {
            self.node(Rule::Conv, || self.has_sort(t, expected), vec![d])
        }
    }

    fn fits(
        &mut self,
        ctor: &str,
        args: &[Term],
        tel: &Telescope,
        fresh: &crate::syntax::FreshnessContext,
    ) -> Traced<Instantiation> {
        let judgment = |k: &Self| {
            if k.gamma.is_empty() {
                format!("|- ({}) fits {ctor}", comma(args))
            } else {
                format!("{} |- ({}) fits {ctor}", k.gamma, comma(args))
            }
        };
        if args.len() != tel.len() {
            return err(
                Rule::Fits,
                || judgment(self),
                ErrorKind::ArityMismatch {
                    ctor: ctor.to_string(),
                    expected: tel.len(),
                    found: args.len(),
                },
            );
        }
        let mut theta = Instantiation::new();
        let mut premises = Vec::with_capacity(args.len() + fresh.constraints.len());
        for (index, (arg, binding)) in args.iter().zip(&tel.bindings).enumerate() {
            let expected = match binding.sort.instantiate(&theta) {
                Ok(s) => s,
                Err(e) => return err(Rule::Fits, || judgment(self), ErrorKind::Instantiation(e)),
            };
            let (found, d) = self.infer(arg)?;
            if !found.alpha_open(&expected) {
                return err(
                    Rule::Fits,
                    || judgment(self),
                    ErrorKind::ArgumentSort {
                        ctor: ctor.to_string(),
                        index,
                        expected,
                        found,
                    },
                );
            }
            premises.push(self.convert(arg, &found, &expected, d));
            theta.insert(binding.param.clone(), arg.clone());
        }
        for c in &fresh.constraints {
            let instance = match theta.get(&c.param) {
                Some(t) => t.clone(),
                None => {
                    return err(
                        Rule::Fits,
                        || judgment(self),
                        ErrorKind::Instantiation(RewriteError::MissingInstantiation(
                            c.param.clone(),
                        )),
                    )
                }
            };
            if !instance.fresh_for(&c.atom) {
                return err(
                    Rule::Fits,
                    || judgment(self),
                    ErrorKind::FreshnessViolation {
                        atom: c.atom.clone(),
                        param: c.param.clone(),
                        instance,
                    },
                );
            }
            premises.push(self.node(
                Rule::Fresh,
                || Judgment::Fresh {
                    atom: c.atom.clone(),
                    term: instance.clone(),
                },
                vec![],
            ));
        }
        let node = self.node(
            Rule::Fits,
            || Judgment::Fits {
                ctx: self.gamma.clone(),
                args: args.to_vec(),
                ctor: ctor.to_string(),
            },
            premises,
        );
        Ok((theta, node))
    }
}

/// The declared sort of a constructor's `index`-th argument, for diagnostics.
pub fn declared_argument_sort(decl: &Declaration, index: usize) -> Option<&Sort> {
    decl.telescope.bindings.get(index).map(|b| &b.sort)
}
