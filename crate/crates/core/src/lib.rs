//! Biquandle colorings of oriented link diagrams, fares over finite abelian
//! groups, and the fare multiset / polynomial invariants built from them.

pub mod biquandle;
pub mod catalog;
pub mod diagram;
pub mod fare;
pub mod homset;
pub mod zmodlinalg;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: bad file, bad table shape, unknown name.
    #[error("input error: {0}")]
    Input(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// Well-formed input that fails a mathematical requirement.
    #[error("{0}")]
    Semantic(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 1 semantic failure, 2 input error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Semantic(_) => 1,
            _ => 2,
        }
    }
}

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub use biquandle::FiniteBiquandle;
pub use diagram::LinkDiagram;
pub use fare::{FareKind, FareMultiset, FareTable};
pub use zmodlinalg::{CoeffGroup, GroupElement};
