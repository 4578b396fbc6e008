use thiserror::Error;

use crate::sublang::{FormulaSymbol, SentenceFormula, SublanguageSpec, Voice};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaTextError {
    #[error("empty formula")]
    Empty,
    #[error("{token:?}: symbol {symbol:?} is not declared")]
    UnknownSymbol { token: String, symbol: char },
    #[error("{token:?}: {reason}")]
    Malformed { token: String, reason: &'static str },
}

fn is_id(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric())
}

/// Parses whitespace-separated symbols of the form `S`, `S_i`, `S^m` or
/// `S_i^m`, where `i` names a class member and `m` a modifier, e.g.
/// `A_1^p V C_2`.
pub fn parse_formula_text(text: &str, spec: &SublanguageSpec) -> Result<SentenceFormula, FormulaTextError> {
    let declared = spec.symbols();
    let mut symbols = Vec::new();
    for token in text.split_whitespace() {
        let malformed = |reason| FormulaTextError::Malformed {
            token: token.to_string(),
            reason,
        };
        let mut chars = token.chars();
        let symbol = chars.next().expect("split_whitespace yields non-empty tokens");
        if !declared.contains(&symbol) {
            return Err(FormulaTextError::UnknownSymbol {
                token: token.to_string(),
                symbol,
            });
        }
        let rest = chars.as_str();
        let (before_sup, superscript) = match rest.split_once('^') {
            Some((a, b)) => (a, Some(b)),
            None => (rest, None),
        };
        let subscript = match before_sup {
            "" => None,
            s => Some(
                s.strip_prefix('_')
                    .ok_or_else(|| malformed("expected `_` or `^` after the symbol"))?,
            ),
        };
        if subscript.is_some_and(|s| !is_id(s)) {
            return Err(malformed("subscript must be letters or digits"));
        }
        if superscript.is_some_and(|s| !is_id(s)) {
            return Err(malformed("superscript must be letters or digits"));
        }
        symbols.push(FormulaSymbol {
            subscript: subscript.map(String::from),
            superscript: superscript.map(String::from),
            ..FormulaSymbol::bare(symbol, spec.is_operator(symbol))
        });
    }
    if symbols.is_empty() {
        return Err(FormulaTextError::Empty);
    }
    Ok(SentenceFormula {
        symbols,
        voice: Voice::Active,
    })
}
