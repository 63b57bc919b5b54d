//! Natural-deduction derivations of first-order arithmetic and their
//! encoding as terms of sort `D(phi)`.

use std::collections::BTreeSet;
use std::fmt;

use nomsig_core::syntax::{Atom, AtomContext, DataSort, Nominal, Sort, Term};
use thiserror::Error;

use crate::fol::{
    atom_var, dec_binder, dec_form, dec_term, enc_binder, enc_form, enc_term, forall, imp, neg,
    plus, succ, term_sort, times, var_atom, DecodeError, FolForm, FolTerm,
};

/// A derivation tree. Payloads carry what the conclusion cannot be read
/// back from: the abstracted formula and variable of (sigma) and (ind), the
/// discharged formula of the introduction rules, and so on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FolDerivation {
    Ass(FolForm),
    Rho(FolTerm),
    PlusZero(FolTerm),
    PlusSucc(FolTerm, FolTerm),
    TimesZero(FolTerm),
    TimesSucc(FolTerm, FolTerm),
    Sigma {
        phi: FolForm,
        var: u32,
        t1: FolTerm,
        t2: FolTerm,
        eq: Box<FolDerivation>,
        body: Box<FolDerivation>,
    },
    Ind {
        phi: FolForm,
        var: u32,
        base: Box<FolDerivation>,
        step: Box<FolDerivation>,
        t: FolTerm,
    },
    BotE {
        phi: FolForm,
        d: Box<FolDerivation>,
    },
    NegI {
        phi: FolForm,
        d: Box<FolDerivation>,
    },
    NegE {
        pos: Box<FolDerivation>,
        neg: Box<FolDerivation>,
    },
    Raa {
        phi: FolForm,
        d: Box<FolDerivation>,
    },
    ImpI {
        phi: FolForm,
        d: Box<FolDerivation>,
    },
    ImpE {
        imp: Box<FolDerivation>,
        arg: Box<FolDerivation>,
    },
    ForallI {
        var: u32,
        d: Box<FolDerivation>,
    },
    ForallE {
        t: FolTerm,
        d: Box<FolDerivation>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerivationError {
    #[error("({rule}) {phi} is not an open assumption")]
    NotAnAssumption { rule: &'static str, phi: FolForm },
    #[error("({rule}) premise proves {found}, expected {expected}")]
    Mismatch {
        rule: &'static str,
        expected: String,
        found: FolForm,
    },
    #[error("({rule}) x{var} occurs free in the open assumptions")]
    Eigenvariable { rule: &'static str, var: u32 },
}

type Hyps = Vec<(Atom, FolForm)>;

impl FolDerivation {
    pub fn rule(&self) -> &'static str {
        match self {
            FolDerivation::Ass(_) => "ass",
            FolDerivation::Rho(_) => "rho",
            FolDerivation::PlusZero(_) => "plus_zero",
            FolDerivation::PlusSucc(..) => "plus_succ",
            FolDerivation::TimesZero(_) => "times_zero",
            FolDerivation::TimesSucc(..) => "times_succ",
            FolDerivation::Sigma { .. } => "sigma",
            FolDerivation::Ind { .. } => "ind",
            FolDerivation::BotE { .. } => "bot_e",
            FolDerivation::NegI { .. } => "neg_i",
            FolDerivation::NegE { .. } => "neg_e",
            FolDerivation::Raa { .. } => "raa",
            FolDerivation::ImpI { .. } => "imp_i",
            FolDerivation::ImpE { .. } => "imp_e",
            FolDerivation::ForallI { .. } => "forall_i",
            FolDerivation::ForallE { .. } => "forall_e",
        }
    }

    pub const ALL_RULES: [&'static str; 16] = [
        "ass",
        "rho",
        "sigma",
        "plus_zero",
        "plus_succ",
        "times_zero",
        "times_succ",
        "ind",
        "bot_e",
        "neg_i",
        "neg_e",
        "raa",
        "imp_i",
        "imp_e",
        "forall_i",
        "forall_e",
    ];

    pub fn rules(&self, out: &mut BTreeSet<&'static str>) {
        out.insert(self.rule());
        match self {
            FolDerivation::Sigma { eq, body, .. } => {
                eq.rules(out);
                body.rules(out);
            }
            FolDerivation::Ind { base, step, .. } => {
                base.rules(out);
                step.rules(out);
            }
            FolDerivation::NegE { pos, neg } => {
                pos.rules(out);
                neg.rules(out);
            }
            FolDerivation::ImpE { imp, arg } => {
                imp.rules(out);
                arg.rules(out);
            }
            FolDerivation::BotE { d, .. }
            | FolDerivation::NegI { d, .. }
            | FolDerivation::Raa { d, .. }
            | FolDerivation::ImpI { d, .. }
            | FolDerivation::ForallI { d, .. }
            | FolDerivation::ForallE { d, .. } => d.rules(out),
            _ => {}
        }
    }

    /// The conclusion of the derivation from the open assumptions `gamma`,
    /// checking every side condition.
    pub fn conclusion(&self, gamma: &[FolForm]) -> Result<FolForm, DerivationError> {
        let mut hyps: Hyps = gamma.iter().map(|p| (Atom::new("h"), p.clone())).collect();
        let mut next = 0;
        encode(self, &mut hyps, &mut next).map(|(_, c)| c)
    }
}

fn expect(rule: &'static str, found: FolForm, expected: &FolForm) -> Result<(), DerivationError> {
    if found.equiv(expected) {
        Ok(())
    } else {
        Err(DerivationError::Mismatch {
            rule,
            expected: expected.to_string(),
            found,
        })
    }
}

fn fresh_var_of(rule: &'static str, var: u32, hyps: &Hyps) -> Result<(), DerivationError> {
    if hyps.iter().any(|(_, p)| p.fv().contains(&var)) {
        Err(DerivationError::Eigenvariable { rule, var })
    } else {
        Ok(())
    }
}

fn d_sort(p: &FolForm) -> DataSort {
    DataSort::new("D", vec![enc_form(p)])
}

/// Encodes `d` under open assumptions `hyps`, returning the term and the
/// conclusion. Discharged assumptions get the next unused index of the `h`
/// family.
fn encode(
    d: &FolDerivation,
    hyps: &mut Hyps,
    next: &mut u32,
) -> Result<(Term, FolForm), DerivationError> {
    let rule = d.rule();
    let discharge = |hyps: &mut Hyps, next: &mut u32, p: &FolForm, body: &FolDerivation| {
        *next += 1;
        let h = Atom::indexed("h", *next);
        hyps.push((h.clone(), p.clone()));
        let r = encode(body, hyps, next);
        hyps.pop();
        let (t, c) = r?;
        Ok::<_, DerivationError>((Term::abs(h, d_sort(p), t), c))
    };
    Ok(match d {
        FolDerivation::Ass(p) => {
            let h = hyps
                .iter()
                .rev()
                .find(|(_, q)| q.equiv(p))
                .map(|(h, _)| h.clone())
                .ok_or_else(|| DerivationError::NotAnAssumption {
                    rule,
                    phi: p.clone(),
                })?;
            (Term::Atom(h), p.clone())
        }
        FolDerivation::Rho(t) => (
            Term::app("rho", vec![enc_term(t)]),
            FolForm::Eq(t.clone(), t.clone()),
        ),
        FolDerivation::PlusZero(t) => (
            Term::app("plus_zero", vec![enc_term(t)]),
            FolForm::Eq(plus(FolTerm::Zero, t.clone()), t.clone()),
        ),
        FolDerivation::PlusSucc(t1, t2) => (
            Term::app("plus_succ", vec![enc_term(t1), enc_term(t2)]),
            FolForm::Eq(
                plus(succ(t1.clone()), t2.clone()),
                succ(plus(t1.clone(), t2.clone())),
            ),
        ),
        FolDerivation::TimesZero(t) => (
            Term::app("times_zero", vec![enc_term(t)]),
            FolForm::Eq(times(FolTerm::Zero, t.clone()), FolTerm::Zero),
        ),
        FolDerivation::TimesSucc(t1, t2) => (
            Term::app("times_succ", vec![enc_term(t1), enc_term(t2)]),
            FolForm::Eq(
                times(succ(t1.clone()), t2.clone()),
                plus(times(t1.clone(), t2.clone()), t2.clone()),
            ),
        ),
        FolDerivation::Sigma {
            phi,
            var,
            t1,
            t2,
            eq,
            body,
        } => {
            let (eq_t, eq_c) = encode(eq, hyps, next)?;
            expect(rule, eq_c, &FolForm::Eq(t1.clone(), t2.clone()))?;
            let (body_t, body_c) = encode(body, hyps, next)?;
            expect(rule, body_c, &phi.subst(*var, t1))?;
            (
                Term::app(
                    "sigma",
                    vec![
                        enc_binder(*var, phi),
                        enc_term(t1),
                        enc_term(t2),
                        eq_t,
                        body_t,
                    ],
                ),
                phi.subst(*var, t2),
            )
        }
        FolDerivation::Ind {
            phi,
            var,
            base,
            step,
            t,
        } => {
            fresh_var_of(rule, *var, hyps)?;
            let (base_t, base_c) = encode(base, hyps, next)?;
            expect(rule, base_c, &phi.subst(*var, &FolTerm::Zero))?;
            let (step_t, step_c) = discharge(hyps, next, phi, step)?;
            expect(rule, step_c, &phi.subst(*var, &succ(FolTerm::Var(*var))))?;
            (
                Term::app(
                    "ind",
                    vec![
                        enc_binder(*var, phi),
                        base_t,
                        Term::abs(var_atom(*var), term_sort(), step_t),
                        enc_term(t),
                    ],
                ),
                phi.subst(*var, t),
            )
        }
        FolDerivation::BotE { phi, d } => {
            let (t, c) = encode(d, hyps, next)?;
            expect(rule, c, &FolForm::Bot)?;
            (Term::app("bot_e", vec![enc_form(phi), t]), phi.clone())
        }
        FolDerivation::NegI { phi, d } => {
            let (t, c) = discharge(hyps, next, phi, d)?;
            expect(rule, c, &FolForm::Bot)?;
            (Term::app("neg_i", vec![enc_form(phi), t]), neg(phi.clone()))
        }
        FolDerivation::NegE { pos, neg: n } => {
            let (pos_t, phi) = encode(pos, hyps, next)?;
            let (neg_t, neg_c) = encode(n, hyps, next)?;
            expect(rule, neg_c, &neg(phi.clone()))?;
            (
                Term::app("neg_e", vec![enc_form(&phi), pos_t, neg_t]),
                FolForm::Bot,
            )
        }
        FolDerivation::Raa { phi, d } => {
            let (t, c) = discharge(hyps, next, &neg(phi.clone()), d)?;
            expect(rule, c, &FolForm::Bot)?;
            (Term::app("raa", vec![enc_form(phi), t]), phi.clone())
        }
        FolDerivation::ImpI { phi, d } => {
            let (t, psi) = discharge(hyps, next, phi, d)?;
            (
                Term::app("imp_i", vec![enc_form(phi), enc_form(&psi), t]),
                imp(phi.clone(), psi),
            )
        }
        FolDerivation::ImpE { imp: i, arg } => {
            let (imp_t, imp_c) = encode(i, hyps, next)?;
            let FolForm::Imp(phi, psi) = imp_c else {
                return Err(DerivationError::Mismatch {
                    rule,
                    expected: "an implication".into(),
                    found: imp_c,
                });
            };
            let (arg_t, arg_c) = encode(arg, hyps, next)?;
            expect(rule, arg_c, &phi)?;
            (
                Term::app("imp_e", vec![enc_form(&phi), enc_form(&psi), imp_t, arg_t]),
                *psi,
            )
        }
        FolDerivation::ForallI { var, d } => {
            fresh_var_of(rule, *var, hyps)?;
            let (t, phi) = encode(d, hyps, next)?;
            (
                Term::app(
                    "forall_i",
                    vec![
                        enc_binder(*var, &phi),
                        Term::abs(var_atom(*var), term_sort(), t),
                    ],
                ),
                FolForm::Forall(*var, Box::new(phi)),
            )
        }
        FolDerivation::ForallE { t, d } => {
            let (dt, c) = encode(d, hyps, next)?;
            let FolForm::Forall(x, phi) = c else {
                return Err(DerivationError::Mismatch {
                    rule,
                    expected: "a universal formula".into(),
                    found: c,
                });
            };
            (
                Term::app("forall_e", vec![enc_binder(x, &phi), enc_term(t), dt]),
                phi.subst(x, t),
            )
        }
    })
}

/// A derivation of `gamma |- phi` translated into a sorting judgment.
#[derive(Clone, Debug)]
pub struct EncodedDerivation {
    pub context: AtomContext,
    pub hyps: Vec<(Atom, FolForm)>,
    pub term: Term,
    pub conclusion: FolForm,
    pub sort: Sort,
}

/// Encodes a derivation from the open assumptions `gamma`, which are
/// assigned the atoms `h'1 ... h'n` in order. The context declares the
/// object variables of the assumptions, the conclusion and the term, then
/// the assumptions.
pub fn enc_derivation(
    d: &FolDerivation,
    gamma: &[FolForm],
) -> Result<EncodedDerivation, DerivationError> {
    let mut hyps: Hyps = gamma
        .iter()
        .zip(1..)
        .map(|(p, k)| (Atom::indexed("h", k), p.clone()))
        .collect();
    let top = hyps.clone();
    let mut next = gamma.len() as u32;
    let (term, conclusion) = encode(d, &mut hyps, &mut next)?;

    let mut vars: BTreeSet<u32> = conclusion.fv();
    for p in gamma {
        vars.extend(p.fv());
    }
    vars.extend(term.free_atoms().iter().filter_map(atom_var));
    let mut context = AtomContext::empty();
    for x in vars {
        context.push(var_atom(x), term_sort());
    }
    for (h, p) in &top {
        context.push(h.clone(), d_sort(p));
    }
    let sort = Sort::Data(d_sort(&conclusion));
    Ok(EncodedDerivation {
        context,
        hyps: top,
        term,
        conclusion,
        sort,
    })
}

fn dec_args<'t, const N: usize>(ctor: &str, ts: &'t [Term]) -> Result<&'t [Term; N], DecodeError> {
    ts.try_into()
        .map_err(|_| DecodeError::Malformed(format!("arity of `{ctor}`")))
}

fn dec_hyp_abs<'t>(t: &'t Term, hyps: &mut Hyps) -> Result<(Atom, &'t Term), DecodeError> {
    match t {
        Term::Abs(h, annot, body) if annot.ctor == "D" && annot.args.len() == 1 => {
            let p = dec_form(&annot.args[0])?;
            hyps.push((h.clone(), p));
            Ok((h.clone(), body))
        }
        other => Err(DecodeError::Malformed(format!("discharge {other}"))),
    }
}

fn dec_discharged(t: &Term, hyps: &mut Hyps) -> Result<FolDerivation, DecodeError> {
    let (_, body) = dec_hyp_abs(t, hyps)?;
    let r = dec_go(body, hyps);
    hyps.pop();
    r
}

fn dec_go(t: &Term, hyps: &mut Hyps) -> Result<FolDerivation, DecodeError> {
    let b = |d| Box::new(d);
    match t {
        Term::Atom(h) => hyps
            .iter()
            .rev()
            .find(|(k, _)| k == h)
            .map(|(_, p)| FolDerivation::Ass(p.clone()))
            .ok_or_else(|| DecodeError::NotAVariable(h.clone())),
        Term::App(c, ts) => Ok(match c.as_str() {
            "rho" => {
                let [t] = dec_args(c, ts)?;
                FolDerivation::Rho(dec_term(t)?)
            }
            "plus_zero" => {
                let [t] = dec_args(c, ts)?;
                FolDerivation::PlusZero(dec_term(t)?)
            }
            "plus_succ" => {
                let [t1, t2] = dec_args(c, ts)?;
                FolDerivation::PlusSucc(dec_term(t1)?, dec_term(t2)?)
            }
            "times_zero" => {
                let [t] = dec_args(c, ts)?;
                FolDerivation::TimesZero(dec_term(t)?)
            }
            "times_succ" => {
                let [t1, t2] = dec_args(c, ts)?;
                FolDerivation::TimesSucc(dec_term(t1)?, dec_term(t2)?)
            }
            "sigma" => {
                let [p, t1, t2, eq, body] = dec_args(c, ts)?;
                let (var, phi) = dec_binder(p)?;
                FolDerivation::Sigma {
                    phi,
                    var,
                    t1: dec_term(t1)?,
                    t2: dec_term(t2)?,
                    eq: b(dec_go(eq, hyps)?),
                    body: b(dec_go(body, hyps)?),
                }
            }
            "ind" => {
                let [p, base, step, t] = dec_args(c, ts)?;
                let (var, phi) = dec_binder(p)?;
                let step = match step {
                    Term::Abs(a, annot, inner)
                        if *annot == term_sort() && atom_var(a).is_some() =>
                    {
                        dec_discharged(inner, hyps)?
                    }
                    other => return Err(DecodeError::Malformed(format!("induction step {other}"))),
                };
                FolDerivation::Ind {
                    phi,
                    var,
                    base: b(dec_go(base, hyps)?),
                    step: b(step),
                    t: dec_term(t)?,
                }
            }
            "bot_e" => {
                let [p, d] = dec_args(c, ts)?;
                FolDerivation::BotE {
                    phi: dec_form(p)?,
                    d: b(dec_go(d, hyps)?),
                }
            }
            "neg_i" => {
                let [p, d] = dec_args(c, ts)?;
                FolDerivation::NegI {
                    phi: dec_form(p)?,
                    d: b(dec_discharged(d, hyps)?),
                }
            }
            "neg_e" => {
                let [_, pos, n] = dec_args(c, ts)?;
                FolDerivation::NegE {
                    pos: b(dec_go(pos, hyps)?),
                    neg: b(dec_go(n, hyps)?),
                }
            }
            "raa" => {
                let [p, d] = dec_args(c, ts)?;
                FolDerivation::Raa {
                    phi: dec_form(p)?,
                    d: b(dec_discharged(d, hyps)?),
                }
            }
            "imp_i" => {
                let [p, _, d] = dec_args(c, ts)?;
                FolDerivation::ImpI {
                    phi: dec_form(p)?,
                    d: b(dec_discharged(d, hyps)?),
                }
            }
            "imp_e" => {
                let [_, _, i, arg] = dec_args(c, ts)?;
                FolDerivation::ImpE {
                    imp: b(dec_go(i, hyps)?),
                    arg: b(dec_go(arg, hyps)?),
                }
            }
            "forall_i" => {
                let [_, d] = dec_args(c, ts)?;
                match d {
                    Term::Abs(a, annot, body) if *annot == term_sort() => FolDerivation::ForallI {
                        var: atom_var(a).ok_or_else(|| DecodeError::NotAVariable(a.clone()))?,
                        d: b(dec_go(body, hyps)?),
                    },
                    other => return Err(DecodeError::Malformed(format!("generalisation {other}"))),
                }
            }
            "forall_e" => {
                let [_, t, d] = dec_args(c, ts)?;
                FolDerivation::ForallE {
                    t: dec_term(t)?,
                    d: b(dec_go(d, hyps)?),
                }
            }
            other => return Err(DecodeError::UnexpectedConstructor(other.to_string())),
        }),
        other => Err(DecodeError::Malformed(format!("derivation {other}"))),
    }
}

/// Inverse of [`enc_derivation`] given the atoms of the open assumptions.
pub fn dec_derivation(t: &Term, hyps: &[(Atom, FolForm)]) -> Result<FolDerivation, DecodeError> {
    let mut hyps = hyps.to_vec();
    dec_go(t, &mut hyps)
}

impl fmt::Display for FolDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut rules = BTreeSet::new();
        self.rules(&mut rules);
        write!(f, "{} [", self.rule())?;
        for (i, r) in rules.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(r)?;
        }
        f.write_str("]")
    }
}

fn x(i: u32) -> FolTerm {
    FolTerm::Var(i)
}

fn eq(t: FolTerm, u: FolTerm) -> FolForm {
    FolForm::Eq(t, u)
}

/// A handwritten derivation with its open assumptions.
pub struct SuiteEntry {
    pub name: &'static str,
    pub gamma: Vec<FolForm>,
    pub derivation: FolDerivation,
}

/// Handwritten derivations; together they use every rule.
pub fn derivation_suite() -> Vec<SuiteEntry> {
    use FolDerivation as D;
    let zero = FolTerm::Zero;
    let b = Box::new;
    let right_unit = eq(plus(x(1), zero.clone()), x(1));
    vec![
        SuiteEntry {
            name: "bot implies bot",
            gamma: vec![],
            derivation: D::ImpI {
                phi: FolForm::Bot,
                d: b(D::Ass(FolForm::Bot)),
            },
        },
        SuiteEntry {
            name: "reflexivity",
            gamma: vec![],
            derivation: D::Rho(plus(x(1), zero.clone())),
        },
        SuiteEntry {
            name: "arithmetic axioms",
            gamma: vec![],
            derivation: D::ImpI {
                phi: eq(zero.clone(), zero.clone()),
                d: b(D::PlusSucc(x(2), times(x(1), zero.clone()))),
            },
        },
        SuiteEntry {
            name: "times axioms",
            gamma: vec![FolForm::Bot],
            derivation: D::NegE {
                pos: b(D::TimesSucc(zero.clone(), x(3))),
                neg: b(D::NegI {
                    phi: eq(
                        times(succ(zero.clone()), x(3)),
                        plus(times(zero.clone(), x(3)), x(3)),
                    ),
                    d: b(D::Ass(FolForm::Bot)),
                }),
            },
        },
        SuiteEntry {
            name: "rewriting by an equation",
            gamma: vec![],
            derivation: D::Sigma {
                phi: eq(x(1), times(zero.clone(), zero.clone())),
                var: 1,
                t1: times(zero.clone(), zero.clone()),
                t2: zero.clone(),
                eq: b(D::TimesZero(zero.clone())),
                body: b(D::Rho(times(zero.clone(), zero.clone()))),
            },
        },
        SuiteEntry {
            name: "zero is a right unit",
            gamma: vec![],
            derivation: D::Ind {
                phi: right_unit.clone(),
                var: 1,
                base: b(D::PlusZero(zero.clone())),
                step: b(D::Sigma {
                    phi: eq(plus(succ(x(1)), zero.clone()), succ(x(3))),
                    var: 3,
                    t1: plus(x(1), zero.clone()),
                    t2: x(1),
                    eq: b(D::Ass(right_unit.clone())),
                    body: b(D::PlusSucc(x(1), zero.clone())),
                }),
                t: x(2),
            },
        },
        SuiteEntry {
            name: "ex falso",
            gamma: vec![FolForm::Bot],
            derivation: D::BotE {
                phi: eq(x(1), x(1)),
                d: b(D::Ass(FolForm::Bot)),
            },
        },
        SuiteEntry {
            name: "contradiction",
            gamma: vec![eq(x(1), zero.clone()), neg(eq(x(1), zero.clone()))],
            derivation: D::NegE {
                pos: b(D::Ass(eq(x(1), zero.clone()))),
                neg: b(D::Ass(neg(eq(x(1), zero.clone())))),
            },
        },
        SuiteEntry {
            name: "double negation",
            gamma: vec![neg(neg(eq(x(1), x(2))))],
            derivation: D::Raa {
                phi: eq(x(1), x(2)),
                d: b(D::NegE {
                    pos: b(D::Ass(neg(eq(x(1), x(2))))),
                    neg: b(D::Ass(neg(neg(eq(x(1), x(2)))))),
                }),
            },
        },
        SuiteEntry {
            name: "modus ponens",
            gamma: vec![imp(eq(x(1), x(1)), FolForm::Bot), eq(x(1), x(1))],
            derivation: D::ImpE {
                imp: b(D::Ass(imp(eq(x(1), x(1)), FolForm::Bot))),
                arg: b(D::Ass(eq(x(1), x(1)))),
            },
        },
        SuiteEntry {
            name: "generalisation",
            gamma: vec![],
            derivation: D::ForallI {
                var: 1,
                d: b(D::Rho(x(1))),
            },
        },
        SuiteEntry {
            name: "generalisation under an assumption",
            gamma: vec![eq(x(2), zero.clone())],
            derivation: D::ForallI {
                var: 1,
                d: b(D::ImpI {
                    phi: eq(x(1), x(2)),
                    d: b(D::Ass(eq(x(1), x(2)))),
                }),
            },
        },
        SuiteEntry {
            name: "instantiation",
            gamma: vec![forall(1, eq(plus(zero.clone(), x(1)), x(1)))],
            derivation: D::ForallE {
                t: succ(x(2)),
                d: b(D::Ass(forall(1, eq(plus(zero.clone(), x(1)), x(1))))),
            },
        },
        SuiteEntry {
            name: "instantiation with capture",
            gamma: vec![],
            derivation: D::ImpI {
                phi: forall(1, forall(2, eq(x(1), x(2)))),
                d: b(D::ForallE {
                    t: x(2),
                    d: b(D::Ass(forall(1, forall(2, eq(x(1), x(2)))))),
                }),
            },
        },
        SuiteEntry {
            name: "generalise then instantiate",
            gamma: vec![],
            derivation: D::ForallE {
                t: zero.clone(),
                d: b(D::ForallI {
                    var: 1,
                    d: b(D::PlusZero(x(1))),
                }),
            },
        },
    ]
}
