//! Kernel for dependently sorted nominal signatures: syntax, freshness and
//! alpha-equivalence, substitution and instantiation, and the sort checker.

pub mod check;
pub mod relations;
pub mod rewrite;
pub mod surface;
pub mod syntax;

pub use check::{
    check_signature, check_signature_report, CheckedSignature, Derivation, ErrorKind, Rule,
    SignatureError, SortingError,
};
pub use relations::{alpha_eq, is_fresh, Alpha, NonGroundError};
pub use rewrite::{concretize, fresh_atom, instantiate, subst_atom, Instantiation, RewriteError};
pub use syntax::{
    apply_perm, free_atoms, Atom, AtomContext, DataSort, Declaration, Param, Permutation,
    Signature, Sort, Telescope, Term,
};
