use std::path::PathBuf;

use nomsig_core::check::{check_signature, CheckedSignature, SignatureError};
use nomsig_core::surface::{parse_signature, ParseError};
use thiserror::Error;

/// A corpus signature and its judgment file.
#[derive(Clone, Copy, Debug)]
pub struct CorpusFile {
    pub name: &'static str,
    pub nlf: &'static str,
    pub cases: &'static str,
}

const FILES: [CorpusFile; 4] = [
    CorpusFile {
        name: "fol",
        nlf: include_str!("../corpus/fol.nlf"),
        cases: include_str!("../corpus/fol.cases"),
    },
    CorpusFile {
        name: "lambda-deep",
        nlf: include_str!("../corpus/lambda-deep.nlf"),
        cases: include_str!("../corpus/lambda-deep.cases"),
    },
    CorpusFile {
        name: "lambda-shallow",
        nlf: include_str!("../corpus/lambda-shallow.nlf"),
        cases: include_str!("../corpus/lambda-shallow.cases"),
    },
    CorpusFile {
        name: "lambda-typed",
        nlf: include_str!("../corpus/lambda-typed.nlf"),
        cases: include_str!("../corpus/lambda-typed.cases"),
    },
];

pub fn corpus_files() -> &'static [CorpusFile] {
    &FILES
}

/// The directory holding the shipped `.nlf` and `.cases` files.
pub fn corpus_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/corpus"))
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("no corpus file named `{0}`")]
    Unknown(String),
    #[error("{0}.nlf:{1}")]
    Parse(&'static str, ParseError),
    #[error("{0}.nlf: {1}")]
    Ill(&'static str, SignatureError),
}

pub fn load(name: &str) -> Result<CheckedSignature, LoadError> {
    let file = FILES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| LoadError::Unknown(name.to_string()))?;
    let sig = parse_signature(file.nlf).map_err(|e| LoadError::Parse(file.name, e))?;
    check_signature(&sig).map_err(|e| LoadError::Ill(file.name, e))
}
