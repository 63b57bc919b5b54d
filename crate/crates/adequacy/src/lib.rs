//! Encodings of first-order arithmetic and the lambda calculus as nominal
//! signatures, with decoders, independent object-level oracles, and the
//! suites that compare them against the kernel.

pub mod corpus;
pub mod derivation;
pub mod fol;
pub mod gen;
pub mod lambda;
pub mod suites;

pub use corpus::{corpus_dir, corpus_files, load, CorpusFile};
pub use derivation::{dec_derivation, derivation_suite, enc_derivation, FolDerivation};
pub use fol::{dec_fol, enc_fol, FolExpr, FolForm, FolTerm};
pub use lambda::{beta_witness, enc_lambda, LamTerm};
