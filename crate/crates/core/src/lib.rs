//! Distributed representations of source-code identifiers.
//!
//! The pipeline runs from a repository manifest through lexing and
//! cleansing ([`corpus`], [`lexer`], [`cleanse`]) to subword skip-gram
//! training ([`vocab`], [`trainer`]). Trained models answer nearest-neighbor
//! and analogy queries ([`model`]) and compare code documents with Word
//! Mover's Distance ([`similarity`]).

pub mod cleanse;
pub mod corpus;
mod error;
pub mod format;
pub mod keywords;
mod language;
pub mod lexer;
pub mod matrix;
pub mod model;
pub mod similarity;
pub mod trainer;
pub mod transport;
pub mod vocab;

pub use crate::cleanse::{CleansingRules, Verdict};
pub use crate::corpus::{CorpusStats, ManifestEntry, RuleSet};
pub use crate::error::{Error, Result};
pub use crate::language::{Language, UnknownLanguage};
pub use crate::lexer::{tokenize, Token, TokenClass};
pub use crate::model::{EmbeddingModel, WordVector};
pub use crate::similarity::Document;
pub use crate::trainer::{train, TrainReport, Trainer};
pub use crate::vocab::{build_vocab, Mode, TrainingConfig, Vocabulary};
