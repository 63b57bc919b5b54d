use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{CheckedSignature, SortingError};
use crate::relations::is_fresh;
use crate::surface::{parse_judgment, Judgment, ParseError};
use crate::syntax::{Telescope, Term};

/// A sorting derivation. Each conclusion is a judgment in the textual syntax,
/// so a tree can be re-checked node by node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    pub rule: String,
    pub conclusion: String,
    pub premises: Vec<Derivation>,
}

impl Derivation {
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Derivation::size).sum::<usize>()
    }

    /// Rule labels in pre-order.
    pub fn rules(&self) -> Vec<&str> {
        let mut out = vec![self.rule.as_str()];
        for p in &self.premises {
            out.extend(p.rules());
        }
        out
    }
}

#[derive(Debug, Error)]
pub enum ReplayError {
    #[error("node `{conclusion}`: cannot parse conclusion: {source}")]
    Parse {
        conclusion: String,
        source: ParseError,
    },
    #[error("node `{conclusion}`: rule ({rule}) does not conclude a judgment of this form")]
    RuleMismatch { rule: String, conclusion: String },
    #[error("node `{conclusion}`: {source}")]
    Rejected {
        conclusion: String,
        source: SortingError,
    },
    #[error("node `{conclusion}`: freshness does not hold")]
    NotFresh { conclusion: String },
}

fn shape_ok(rule: &str, j: &Judgment) -> bool {
    match (rule, j) {
        ("atm", Judgment::HasSort { term, .. }) => matches!(term, Term::Atom(_)),
        ("constr", Judgment::HasSort { term, .. }) => matches!(term, Term::App(..)),
        ("abs", Judgment::HasSort { term, .. }) => matches!(term, Term::Abs(..)),
        ("var1" | "var2", Judgment::HasSort { term, .. }) => matches!(term, Term::Param(..)),
        ("conv", Judgment::HasSort { .. }) => true,
        ("data" | "abs-*", Judgment::IsSort { .. }) => true,
        ("fits", Judgment::Fits { .. }) => true,
        ("fresh", Judgment::Fresh { .. }) => true,
        _ => false,
    }
}

/// Re-parses and re-checks every node of a ground derivation. Returns the
/// number of nodes checked.
pub fn replay(sig: &CheckedSignature, d: &Derivation) -> Result<usize, ReplayError> {
    let j =
        parse_judgment(&d.conclusion, sig.signature()).map_err(|source| ReplayError::Parse {
            conclusion: d.conclusion.clone(),
            source,
        })?;
    if !shape_ok(&d.rule, &j) {
        return Err(ReplayError::RuleMismatch {
            rule: d.rule.clone(),
            conclusion: d.conclusion.clone(),
        });
    }
    let tel = Telescope::empty();
    let rejected = |source| ReplayError::Rejected {
        conclusion: d.conclusion.clone(),
        source,
    };
    match &j {
        Judgment::HasSort { ctx, term, sort } => {
            sig.check_term(&tel, ctx, term, sort).map_err(rejected)?
        }
        Judgment::IsSort { ctx, sort } => sig.check_sort(&tel, ctx, sort).map_err(rejected)?,
        Judgment::Fits { ctx, args, ctor } => {
            sig.fits_constructor(ctx, args, ctor).map_err(rejected)?;
        }
        Judgment::Fresh { atom, term } => {
            if !is_fresh(atom, term) {
                return Err(ReplayError::NotFresh {
                    conclusion: d.conclusion.clone(),
                });
            }
        }
    }
    let mut n = 1;
    for p in &d.premises {
        n += replay(sig, p)?;
    }
    Ok(n)
}
