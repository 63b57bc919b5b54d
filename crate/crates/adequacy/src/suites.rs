//! Property and adequacy suites. Each returns a [`Report`] whose rendering
//! depends only on the inputs, never on timing or scheduling.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::{Duration, Instant};

use nomsig_core::check::{replay, CheckedSignature};
use nomsig_core::relations::{alpha_eq, is_fresh, Alpha};
use nomsig_core::rewrite::subst_atom;
use nomsig_core::syntax::{Atom, AtomContext, DataSort, Nominal, Sort, Telescope, Term};
use rayon::prelude::*;

use crate::derivation::{dec_derivation, derivation_suite, enc_derivation, FolDerivation};
use crate::fol::{self, enc_fol, FolExpr, FolForm, FolTerm};
use crate::gen::{self, Rand};
use crate::lambda::{self, beta_witness, enc_lambda, LamTerm};

/// Outcome of a suite: how many inputs were checked, and the first few
/// counterexamples.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
    pub failure_count: usize,
    pub notes: Vec<String>,
}

const MAX_REPORTED: usize = 10;

impl Report {
    fn new(name: &str) -> Self {
        Report {
            name: name.to_string(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_REPORTED {
            self.failures.push(msg);
        }
    }

    fn absorb(&mut self, results: Vec<Result<(), String>>) {
        self.checked += results.len();
        for r in results {
            if let Err(e) = r {
                self.fail(e);
            }
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} checked, {} counterexample(s)",
            self.name, self.checked, self.failure_count
        )?;
        for n in &self.notes {
            writeln!(f, "  {n}")?;
        }
        for e in &self.failures {
            writeln!(f, "  counterexample: {e}")?;
        }
        Ok(())
    }
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn ground_alpha<M: Alpha>(m: &M, n: &M) -> bool {
    alpha_eq(m, n).unwrap_or(false)
}

/// Equivariance, freshness stability, equivalence and congruence, and
/// substitution respecting alpha-equivalence, on `n` random ground terms.
pub fn relation_suite(n: usize, seed: u64) -> Report {
    let mut report = Report::new("relation properties");
    let mut rng = gen::rng(seed);
    let inputs: Vec<(Term, Term, u64)> = (0..n)
        .map(|_| {
            let t = gen::ground_term(&mut rng, 5);
            let u = gen::ground_term(&mut rng, 3);
            (t, u, rand::Rng::gen(&mut rng))
        })
        .collect();
    let results = inputs
        .par_iter()
        .map(|(t, u, s)| relation_case(t, u, &mut gen::rng(*s)))
        .collect();
    report.absorb(results);
    report.notes.push(format!(
        "generator: depth <= 5, atom names {:?}, constructors {:?}",
        gen::ATOM_NAMES,
        gen::CONSTRUCTORS.map(|c| c.0)
    ));
    report
}

fn relation_case(t: &Term, u: &Term, rng: &mut Rand) -> Result<(), String> {
    let ctx = || format!("t = {t}, u = {u}");
    check(gen::depth(t) <= 5, || {
        format!("generator depth exceeded: {}", ctx())
    })?;
    let mut pool: Vec<Atom> = t.atoms().into_iter().chain(u.atoms()).collect();
    pool.extend(gen::ATOM_NAMES.iter().map(|n| Atom::new(*n)));
    pool.sort();
    pool.dedup();
    let pi = gen::permutation(rng, &pool);
    let v1 = gen::alpha_variant(rng, t);
    let v2 = gen::alpha_variant(rng, &v1);
    let s = gen::alpha_variant(rng, u);

    // equivalence
    check(ground_alpha(t, t), || {
        format!("reflexivity fails: {}", ctx())
    })?;
    check(ground_alpha(t, &v1) && ground_alpha(&v1, t), || {
        format!(
            "alpha-variant {v1} not related (either direction): {}",
            ctx()
        )
    })?;
    check(ground_alpha(t, &v2), || {
        format!("transitivity via {v1}, {v2}: {}", ctx())
    })?;
    check(ground_alpha(t, u) == ground_alpha(u, t), || {
        format!("symmetry: {}", ctx())
    })?;

    // congruence
    let f = |a: &Term, b: &Term| Term::app("f", vec![a.clone(), b.clone()]);
    check(ground_alpha(&f(t, u), &f(&v1, &s)), || {
        format!("congruence under f: {}", ctx())
    })?;
    let binder = pool[0].clone();
    check(
        ground_alpha(
            &Term::abs(binder.clone(), DataSort::constant("S"), t.clone()),
            &Term::abs(binder, DataSort::constant("S"), v1.clone()),
        ),
        || format!("congruence under abstraction: {}", ctx()),
    )?;

    // equivariance
    let pt = t.permute(&pi);
    let pu = u.permute(&pi);
    for a in &pool {
        check(is_fresh(a, t) == is_fresh(&pi.apply(a), &pt), || {
            format!(
                "freshness not equivariant for {a} under {:?}: {}",
                pi.swaps,
                ctx()
            )
        })?;
    }
    check(ground_alpha(t, u) == ground_alpha(&pt, &pu), || {
        format!("alpha not equivariant under {:?}: {}", pi.swaps, ctx())
    })?;
    check(ground_alpha(&v1.permute(&pi), &pt), || {
        format!("permuted variant {v1} not related: {}", ctx())
    })?;

    // freshness is stable under alpha
    for a in &pool {
        check(is_fresh(a, t) == is_fresh(a, &v1), || {
            format!("freshness of {a} differs on variant {v1}: {}", ctx())
        })?;
    }

    // substitution respects alpha
    for a in pool.iter().take(4) {
        let l = subst_atom(t, a, u);
        let r = subst_atom(&v1, a, &s);
        check(ground_alpha(&l, &r), || {
            format!(
                "substitution [{a} := {u}] gives {l} vs {r} on variants: {}",
                ctx()
            )
        })?;
    }
    Ok(())
}

/// One well-sorted judgment to probe.
#[derive(Clone, Debug)]
pub struct Sample {
    pub sig: &'static str,
    pub ctx: AtomContext,
    pub term: Term,
}

fn var_context(vars: impl IntoIterator<Item = u32>, sort: &str) -> AtomContext {
    let mut ctx = AtomContext::empty();
    for x in vars.into_iter().collect::<BTreeSet<_>>() {
        ctx.push(fol::var_atom(x), DataSort::constant(sort));
    }
    ctx
}

/// Well-sorted terms drawn from the FOL and lambda corpora.
pub fn sorting_samples(n: usize, seed: u64) -> Vec<Sample> {
    let mut rng = gen::rng(seed);
    let suite = derivation_suite();
    (0..n)
        .map(|i| match i % 4 {
            0 => {
                let e = if rand::Rng::gen_bool(&mut rng, 0.5) {
                    FolExpr::Form(gen::fol_form(&mut rng, 4, 4))
                } else {
                    FolExpr::Term(gen::fol_term(&mut rng, 4, 4))
                };
                Sample {
                    sig: "fol",
                    ctx: var_context(e.fv(), "Term"),
                    term: enc_fol(&e),
                }
            }
            1 | 2 => {
                let s1 = gen::lambda_term(&mut rng, 3, 4);
                let s2 = gen::lambda_term(&mut rng, 2, 4);
                let x = rand::Rng::gen_range(&mut rng, 1..=4);
                let redex = lambda::app(lambda::lam(x, s1.clone()), s2.clone());
                Sample {
                    sig: "lambda-shallow",
                    ctx: var_context(redex.fv(), "Lam"),
                    term: beta_witness(&s1, x, &s2).0,
                }
            }
            _ => {
                let entry = &suite[(i / 4) % suite.len()];
                let e = enc_derivation(&entry.derivation, &entry.gamma)
                    .expect("suite derivations are valid");
                Sample {
                    sig: "fol",
                    ctx: e.context,
                    term: e.term,
                }
            }
        })
        .collect()
}

/// Equivariance of derivable judgments and closure of inference under
/// alpha-equivalence.
pub fn sorting_suite(
    sigs: &BTreeMap<&'static str, CheckedSignature>,
    n: usize,
    seed: u64,
) -> Report {
    let mut report = Report::new("sorting properties");
    let samples = sorting_samples(n, seed);
    let mut rng = gen::rng(seed ^ 0x5eed);
    let seeds: Vec<u64> = (0..samples.len())
        .map(|_| rand::Rng::gen(&mut rng))
        .collect();
    let results = samples
        .par_iter()
        .zip(&seeds)
        .map(|(s, seed)| sorting_case(&sigs[s.sig], s, &mut gen::rng(*seed)))
        .collect();
    report.absorb(results);
    report
}

fn sorting_case(sig: &CheckedSignature, s: &Sample, rng: &mut Rand) -> Result<(), String> {
    let tel = Telescope::empty();
    let show = || format!("{} |- {}", s.ctx, s.term);
    let sort = sig
        .infer_sort(&tel, &s.ctx, &s.term)
        .map_err(|e| format!("sample rejected: {}: {e}", show()))?;

    let mut pool: Vec<Atom> = s.ctx.atoms().into_iter().chain(s.term.atoms()).collect();
    pool.extend(["a", "b", "z"].map(Atom::new));
    pool.sort();
    pool.dedup();
    let pi = gen::permutation(rng, &pool);
    let pctx = s.ctx.permute(&pi);
    let pterm = s.term.permute(&pi);
    let psort = sort.permute(&pi);
    let inferred = sig.infer_sort(&tel, &pctx, &pterm).map_err(|e| {
        format!(
            "permuted judgment rejected under {:?}: {}: {e}",
            pi.swaps,
            show()
        )
    })?;
    check(ground_alpha(&inferred, &psort), || {
        format!("permuted sort {inferred} vs {psort}: {}", show())
    })?;
    sig.check_term(&tel, &pctx, &pterm, &psort)
        .map_err(|e| format!("check_term on permuted judgment: {}: {e}", show()))?;

    let variant = gen::alpha_variant(rng, &s.term);
    let inferred = sig
        .infer_sort(&tel, &s.ctx, &variant)
        .map_err(|e| format!("alpha-variant {variant} rejected: {}: {e}", show()))?;
    check(ground_alpha(&inferred, &sort), || {
        format!("alpha-variant {variant} has sort {inferred}, expected {sort}")
    })?;
    let sort_variant = match &sort {
        Sort::Data(d) => Sort::Data(DataSort::new(
            d.ctor.clone(),
            d.args.iter().map(|a| gen::alpha_variant(rng, a)).collect(),
        )),
        other => other.clone(),
    };
    sig.check_term(&tel, &s.ctx, &variant, &sort_variant)
        .map_err(|e| {
            format!(
                "check_term against alpha-variant sort {sort_variant}: {}: {e}",
                show()
            )
        })?;
    Ok(())
}

/// Inference terminates on arbitrary ground input within `limit` per term.
pub fn termination_suite(sig: &CheckedSignature, n: usize, seed: u64, limit: Duration) -> Report {
    let mut report = Report::new("termination");
    let vocab = fuzz_vocab(sig);
    let contexts = gen::fol_contexts();
    let mut rng = gen::rng(seed);
    let inputs: Vec<(usize, Term)> = (0..n)
        .map(|_| {
            let d = rand::Rng::gen_range(&mut rng, 0..=6);
            (
                rand::Rng::gen_range(&mut rng, 0..contexts.len()),
                gen::fuzz_term(&mut rng, &vocab, d),
            )
        })
        .collect();
    let tel = Telescope::empty();
    let outcomes: Vec<(bool, Result<(), String>)> = inputs
        .par_iter()
        .map(|(c, t)| {
            let start = Instant::now();
            let accepted = sig.infer_sort(&tel, &contexts[*c], t).is_ok();
            let elapsed = start.elapsed();
            (
                accepted,
                check(elapsed <= limit, || {
                    format!("{t} took longer than {limit:?}")
                }),
            )
        })
        .collect();
    let accepted = outcomes.iter().filter(|(a, _)| *a).count();
    report.absorb(outcomes.into_iter().map(|(_, r)| r).collect());
    report.notes.push(format!(
        "{accepted} accepted, {} rejected, each within {limit:?}",
        n - accepted
    ));
    report
}

pub fn fuzz_vocab(sig: &CheckedSignature) -> gen::FuzzVocab {
    let mut ops = Vec::new();
    let mut sorts = Vec::new();
    for d in &sig.signature().decls {
        let entry = (d.name.clone(), d.telescope.len());
        if d.target.is_some() {
            ops.push(entry);
        } else {
            sorts.push(entry);
        }
    }
    let atoms = vec![
        fol::var_atom(1),
        fol::var_atom(2),
        fol::var_atom(3),
        Atom::indexed("h", 1),
        Atom::new("x"),
    ];
    gen::FuzzVocab { ops, sorts, atoms }
}

/// Erases variable names, keeping only the shape of an expression.
fn skeleton(e: &FolExpr) -> String {
    let s = e.to_string();
    s.chars().filter(|c| !c.is_ascii_digit()).collect()
}

/// Round trip, sorting, identity and compositionality of the FOL encoding
/// over every expression of size at most `max` over the variables `vars`.
pub fn expression_suite(sig: &CheckedSignature, max: usize, vars: &[u32], seed: u64) -> Report {
    let mut report = Report::new("FOL expression adequacy");
    let exprs = fol::enumerate(max, vars);
    let tel = Telescope::empty();
    let small: Vec<FolTerm> = fol::terms_by_size(2, vars).into_iter().flatten().collect();

    let per_expr = exprs
        .par_iter()
        .map(|e| {
            let t = enc_fol(e);
            let back = fol::dec_fol(&t, e.sort_name()).map_err(|err| format!("dec({t}): {err}"))?;
            check(back == *e, || format!("dec(enc({e})) = {back}"))?;
            let ctx = var_context(e.fv(), "Term");
            sig.check_term(&tel, &ctx, &t, &Sort::constant(e.sort_name()))
                .map_err(|err| format!("enc({e}) = {t} rejected: {err}"))?;
            for u in &small {
                for &x in vars {
                    let lhs = enc_fol(&e.subst(x, u));
                    let rhs = subst_atom(&t, &fol::var_atom(x), &fol::enc_term(u));
                    check(ground_alpha(&lhs, &rhs), || {
                        format!("enc({e}[x{x} := {u}]) = {lhs} but enc({e})[a'{x} := {u}] = {rhs}")
                    })?;
                }
            }
            Ok(())
        })
        .collect();
    report.absorb(per_expr);
    report.notes.push(format!(
        "{} expressions, substitution by {} terms for each of {} variables",
        exprs.len(),
        small.len(),
        vars.len()
    ));

    // identity: every pair sharing a shape, plus random pairs across shapes
    let mut groups: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, e) in exprs.iter().enumerate() {
        groups.entry(skeleton(e)).or_default().push(i);
    }
    let encoded: Vec<Term> = exprs.par_iter().map(enc_fol).collect();
    let groups: Vec<Vec<usize>> = groups.into_values().collect();
    let pair_results: Vec<(usize, Vec<String>)> = groups
        .par_iter()
        .map(|g| {
            let mut bad = Vec::new();
            let mut n = 0;
            for (k, &i) in g.iter().enumerate() {
                for &j in &g[k..] {
                    n += 1;
                    let obj = exprs[i].equiv(&exprs[j]);
                    let enc = ground_alpha(&encoded[i], &encoded[j]);
                    if obj != enc {
                        bad.push(format!(
                            "{} vs {}: identity {obj}, encoded alpha {enc}",
                            exprs[i], exprs[j]
                        ));
                    }
                }
            }
            (n, bad)
        })
        .collect();
    let mut pairs = 0;
    for (n, bad) in pair_results {
        pairs += n;
        report.checked += n;
        for b in bad {
            report.fail(b);
        }
    }
    let mut rng = gen::rng(seed);
    let cross = 20_000;
    for _ in 0..cross {
        let i = rand::Rng::gen_range(&mut rng, 0..exprs.len());
        let j = rand::Rng::gen_range(&mut rng, 0..exprs.len());
        let obj = exprs[i].equiv(&exprs[j]);
        let enc = ground_alpha(&encoded[i], &encoded[j]);
        report.checked += 1;
        if obj != enc {
            report.fail(format!(
                "{} vs {}: identity {obj}, encoded alpha {enc}",
                exprs[i], exprs[j]
            ));
        }
    }
    report.notes.push(format!(
        "identity checked on {pairs} same-shape pairs in {} shapes and {cross} random pairs",
        groups.len()
    ));
    report
}

/// Every handwritten derivation encodes to a term of sort `D(phi)` that
/// decodes back to it, and its derivation tree replays.
pub fn derivation_adequacy_suite(sig: &CheckedSignature) -> Report {
    let mut report = Report::new("derivation adequacy");
    let suite = derivation_suite();
    let mut used = BTreeSet::new();
    for entry in &suite {
        entry.derivation.rules(&mut used);
        let r = derivation_case(sig, &entry.gamma, &entry.derivation)
            .map_err(|e| format!("{}: {e}", entry.name));
        report.absorb(vec![r]);
    }
    let missing: Vec<_> = FolDerivation::ALL_RULES
        .iter()
        .filter(|r| !used.contains(*r))
        .collect();
    if !missing.is_empty() {
        report.fail(format!("rules not covered: {missing:?}"));
    }
    report.notes.push(format!(
        "{} derivations covering {} of {} rules",
        suite.len(),
        used.len(),
        FolDerivation::ALL_RULES.len()
    ));
    report
}

fn derivation_case(
    sig: &CheckedSignature,
    gamma: &[FolForm],
    d: &FolDerivation,
) -> Result<(), String> {
    let tel = Telescope::empty();
    let e = enc_derivation(d, gamma).map_err(|err| err.to_string())?;
    check(
        e.sort == Sort::Data(DataSort::new("D", vec![fol::enc_form(&e.conclusion)])),
        || format!("encoded sort {} is not D({})", e.sort, e.conclusion),
    )?;
    sig.check_term(&tel, &e.context, &e.term, &e.sort)
        .map_err(|err| format!("{} |- {} : {} rejected: {err}", e.context, e.term, e.sort))?;
    let back =
        dec_derivation(&e.term, &e.hyps).map_err(|err| format!("decode {}: {err}", e.term))?;
    check(back == *d, || {
        format!("decoding {} gives a different derivation", e.term)
    })?;
    let tree = sig
        .derive_check(&e.context, &e.term, &e.sort)
        .map_err(|err| err.to_string())?;
    replay(sig, &tree).map_err(|err| format!("replay: {err}"))?;
    Ok(())
}

/// Every beta-redex with both parts of size at most `max` over `vars` has a
/// well-sorted contraction witness whose reduct matches the object-level
/// substitution.
pub fn beta_suite(sig: &CheckedSignature, max: usize, vars: &[u32]) -> Report {
    let mut report = Report::new("beta adequacy");
    let terms: Vec<LamTerm> = lambda::lambda_by_size(max, vars)
        .into_iter()
        .flatten()
        .collect();
    let mut redexes = Vec::new();
    for s1 in &terms {
        for &x in vars {
            for s2 in &terms {
                redexes.push((s1, x, s2));
            }
        }
    }
    let tel = Telescope::empty();
    let results = redexes
        .par_iter()
        .map(|&(s1, x, s2)| {
            let redex = lambda::app(lambda::lam(x, s1.clone()), s2.clone());
            let ctx = var_context(redex.fv(), "Lam");
            let (term, expected) = beta_witness(s1, x, s2);
            let inferred = sig
                .infer_sort(&tel, &ctx, &term)
                .map_err(|e| format!("{redex}: {term} rejected: {e}"))?;
            check(ground_alpha(&inferred, &expected), || {
                format!("{redex}: inferred {inferred}, expected {expected}")
            })?;
            let reduct = match &inferred {
                Sort::Data(d) if d.ctor == "rel" && d.args.len() == 2 => d.args[1].clone(),
                other => return Err(format!("{redex}: unexpected sort {other}")),
            };
            let oracle = enc_lambda(&s1.subst(x, s2));
            check(ground_alpha(&reduct, &oracle), || {
                format!("{redex}: reduct {reduct}, oracle {oracle}")
            })
        })
        .collect();
    report.absorb(results);
    report.notes.push(format!(
        "{} terms per side, {} redexes",
        terms.len(),
        redexes.len()
    ));
    report
}
