//! Sublanguage grammars: word classes, operator constraints, discourse
//! chains and pattern drift over dated corpora.

mod chain;
mod drift;
mod formula;
mod lexicon;
mod spec;

pub use chain::{
    chain_membership, verify_right_ideal_property, ChainDecision, DiscourseChain, Link, R1Outcome, R2Outcome,
    RightIdealReport, DEFAULT_CLOSURE_DEPTH,
};
pub use drift::{
    diachronic_profile, dominant_sequence, CorpusRecord, DominantSequence, Profile, TieFlag,
    DEFAULT_PERIOD_YEARS,
};
pub use formula::{
    formulaize, in_core, passive_transform, tokenize, CoreReport, FormulaSymbol, SentenceFormula, Violation,
    Voice, UNKNOWN_SYMBOL,
};
pub use lexicon::{load_lexicon, Lexicon};
pub use spec::{
    load_bundle, load_spec, Conjunction, ConjunctionMode, SlotConstraint, Sublanguage, SublanguageSpec,
    Transform,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SublangError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{0:?} is listed both as a word and as an operator")]
    WordInBothMaps(String),
    #[error("symbol {0:?} names both a class and an operator")]
    SymbolOverlap(char),
    #[error("{0:?} is not a usable symbol")]
    BadSymbol(String),
    #[error("pattern {pattern:?} uses undeclared symbol {symbol:?}")]
    UndeclaredSymbol { pattern: String, symbol: char },
    #[error("feature {0:?} is not declared")]
    UndeclaredFeature(String),
    #[error("constraint refers to {0:?}, which is not a declared operator")]
    UndeclaredOperator(char),
    #[error("lexicon uses symbol {0:?}, which the grammar does not declare")]
    LexiconMismatch(char),
    #[error("conjunction {0:?} is declared twice")]
    DuplicateConjunction(String),
    #[error("{0:?} is not a declared conjunction")]
    UnknownConjunction(String),
    #[error("transform needs exactly one operator with arguments on both sides, got {0:?}")]
    NotBinary(String),
    #[error("{0} pool is empty")]
    EmptyPool(&'static str),
    #[error("{pool} pool: {sentence:?} {problem}")]
    PoolPrecondition {
        pool: &'static str,
        sentence: String,
        problem: &'static str,
    },
    #[error("record {0} has no date")]
    UndatedRecord(usize),
    #[error("record {index} has unreadable date {date:?}")]
    BadDate { index: usize, date: String },
    #[error("record {0} has neither text nor tokens")]
    EmptyRecord(usize),
    #[error("empty corpus")]
    EmptyCorpus,
}

#[cfg(test)]
mod tests;
