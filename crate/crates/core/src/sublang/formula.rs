use std::fmt;

use serde::{Deserialize, Serialize};

use super::lexicon::Lexicon;
use super::spec::SublanguageSpec;
use super::SublangError;

/// Symbol given to content words missing from the lexicon.
pub const UNKNOWN_SYMBOL: char = '?';

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Voice {
    Active,
    Passive,
}

impl Voice {
    fn flipped(self) -> Voice {
        match self {
            Voice::Active => Voice::Passive,
            Voice::Passive => Voice::Active,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaSymbol {
    pub symbol: char,
    pub operator: bool,
    /// Class member id.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subscript: Option<String>,
    /// Modifier id.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub superscript: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    /// `None` when the symbol did not come from a lexicon lookup, in which
    /// case feature restrictions are not checked.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub features: Option<Vec<String>>,
}

impl FormulaSymbol {
    pub fn bare(symbol: char, operator: bool) -> Self {
        FormulaSymbol {
            symbol,
            operator,
            subscript: None,
            superscript: None,
            word: None,
            features: None,
        }
    }
}

impl fmt::Display for FormulaSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol)?;
        if let Some(sub) = &self.subscript {
            write!(f, "_{sub}")?;
        }
        if let Some(sup) = &self.superscript {
            write!(f, "^{sup}")?;
        }
        Ok(())
    }
}

/// A sentence reduced to class and operator symbols, in surface order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SentenceFormula {
    pub symbols: Vec<FormulaSymbol>,
    pub voice: Voice,
}

impl SentenceFormula {
    pub fn pattern(&self) -> String {
        self.symbols.iter().map(|s| s.symbol).collect()
    }

    fn single_operator(&self) -> Option<usize> {
        let mut ops = self.symbols.iter().enumerate().filter(|(_, s)| s.operator);
        match (ops.next(), ops.next()) {
            (Some((p, _)), None) if p > 0 && p + 1 < self.symbols.len() => Some(p),
            _ => None,
        }
    }

    fn swapped(&self, p: usize) -> Vec<FormulaSymbol> {
        let mut out = self.symbols[p + 1..].to_vec();
        out.push(self.symbols[p].clone());
        out.extend_from_slice(&self.symbols[..p]);
        out
    }

    /// Symbols in active order: a passive formula has its two sides swapped
    /// back.
    pub fn canonical(&self) -> Vec<FormulaSymbol> {
        match (self.voice, self.single_operator()) {
            (Voice::Passive, Some(p)) => self.swapped(p),
            _ => self.symbols.clone(),
        }
    }

    pub fn canonical_pattern(&self) -> String {
        self.canonical().iter().map(|s| s.symbol).collect()
    }
}

impl fmt::Display for SentenceFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        if self.voice == Voice::Passive {
            f.write_str(" (passive)")?;
        }
        Ok(())
    }
}

/// Lowercases and splits on whitespace, trimming punctuation but keeping
/// inner hyphens.
pub fn tokenize(text: &str) -> Vec<String> {
    text.split_whitespace()
        .map(|t| {
            t.trim_matches(|c: char| !c.is_alphanumeric() && c != '-')
                .to_lowercase()
        })
        .filter(|t| !t.is_empty())
        .collect()
}

enum Piece {
    Symbol(FormulaSymbol),
    Function(String),
}

/// Maps a token sequence to its formula.
///
/// Tokens are lemmatized, then the longest lexicon phrase starting at each
/// position wins. Function words are dropped and anything else unknown
/// becomes [`UNKNOWN_SYMBOL`]. A passive auxiliary before the first operator
/// together with the agent marker after it marks the sentence passive; the
/// symbols stay in surface order.
pub fn formulaize(tokens: &[String], lex: &Lexicon) -> SentenceFormula {
    let lemmas: Vec<&str> = tokens.iter().map(|t| lex.lemma(t)).collect();
    let longest = lex.longest_entry();
    let mut pieces = Vec::new();
    let mut i = 0;
    while i < lemmas.len() {
        let found = (1..=longest.min(lemmas.len() - i)).rev().find_map(|len| {
            let phrase = lemmas[i..i + len].join(" ");
            let hit = lex
                .word_classes
                .get(&phrase)
                .map(|&s| (s, false))
                .or_else(|| lex.operator_classes.get(&phrase).map(|&s| (s, true)));
            hit.map(|(s, op)| (len, phrase, s, op))
        });
        match found {
            Some((len, phrase, symbol, operator)) => {
                let features = Some(lex.features.get(&phrase).cloned().unwrap_or_default());
                pieces.push(Piece::Symbol(FormulaSymbol {
                    symbol,
                    operator,
                    features,
                    word: Some(phrase),
                    ..FormulaSymbol::bare(symbol, operator)
                }));
                i += len;
            }
            None => {
                let word = lemmas[i].to_string();
                let function = lex.function_words.contains(&word)
                    || lex.passive_auxiliaries.contains(&word)
                    || word == lex.agent_marker;
                pieces.push(if function {
                    Piece::Function(word)
                } else {
                    Piece::Symbol(FormulaSymbol {
                        word: Some(word),
                        ..FormulaSymbol::bare(UNKNOWN_SYMBOL, false)
                    })
                });
                i += 1;
            }
        }
    }

    let first_op = pieces
        .iter()
        .position(|p| matches!(p, Piece::Symbol(s) if s.operator));
    let passive = first_op.is_some_and(|op| {
        let is_fn = |p: &Piece, set: &dyn Fn(&str) -> bool| matches!(p, Piece::Function(w) if set(w));
        pieces[..op]
            .iter()
            .any(|p| is_fn(p, &|w| lex.passive_auxiliaries.contains(w)))
            && pieces[op + 1..]
                .iter()
                .any(|p| is_fn(p, &|w| w == lex.agent_marker))
    });
    SentenceFormula {
        symbols: pieces
            .into_iter()
            .filter_map(|p| match p {
                Piece::Symbol(s) => Some(s),
                Piece::Function(_) => None,
            })
            .collect(),
        voice: if passive { Voice::Passive } else { Voice::Active },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    UnknownWord {
        position: usize,
        word: Option<String>,
    },
    UndeclaredSymbol {
        position: usize,
        symbol: char,
    },
    ClassNotAllowed {
        operator: char,
        slot: usize,
        position: usize,
        symbol: char,
        allowed: Vec<char>,
    },
    MissingFeature {
        operator: char,
        slot: usize,
        position: usize,
        word: Option<String>,
        required_any: Vec<String>,
    },
    ForbiddenFeature {
        operator: char,
        slot: usize,
        position: usize,
        word: Option<String>,
        feature: String,
    },
    PatternNotAdmissible {
        pattern: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |w: &Option<String>| w.clone().unwrap_or_else(|| "?".into());
        match self {
            Violation::UnknownWord { position, word: w } => {
                write!(f, "unknown word {:?} at {position}", word(w))
            }
            Violation::UndeclaredSymbol { position, symbol } => {
                write!(f, "undeclared symbol {symbol} at {position}")
            }
            Violation::ClassNotAllowed {
                operator,
                slot,
                symbol,
                allowed,
                ..
            } => {
                let allowed: String = allowed.iter().collect();
                write!(f, "{operator} slot {slot} takes one of {allowed}, got {symbol}")
            }
            Violation::MissingFeature {
                operator,
                slot,
                word: w,
                required_any,
                ..
            } => write!(
                f,
                "{operator} slot {slot} needs one of [{}], {:?} has none",
                required_any.join(", "),
                word(w)
            ),
            Violation::ForbiddenFeature {
                operator,
                slot,
                word: w,
                feature,
                ..
            } => {
                write!(
                    f,
                    "{operator} slot {slot} forbids [{feature}], carried by {:?}",
                    word(w)
                )
            }
            Violation::PatternNotAdmissible { pattern } => write!(f, "pattern {pattern} is not admissible"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreReport {
    /// Pattern in active order.
    pub pattern: String,
    pub accepted: bool,
    pub violations: Vec<Violation>,
}

/// Decides membership in the sublanguage core: the active-order pattern
/// must be admissible and every operator's arguments must satisfy its slot
/// constraints. All violations are reported, positions in active order.
pub fn in_core(formula: &SentenceFormula, spec: &SublanguageSpec) -> CoreReport {
    let symbols = formula.canonical();
    let pattern: String = symbols.iter().map(|s| s.symbol).collect();
    let mut violations = Vec::new();
    for (position, s) in symbols.iter().enumerate() {
        if s.symbol == UNKNOWN_SYMBOL {
            violations.push(Violation::UnknownWord {
                position,
                word: s.word.clone(),
            });
        } else if !spec.symbols().contains(&s.symbol) {
            violations.push(Violation::UndeclaredSymbol {
                position,
                symbol: s.symbol,
            });
        }
    }
    let op_positions: Vec<usize> = (0..symbols.len())
        .filter(|&p| spec.is_operator(symbols[p].symbol))
        .collect();
    for (k, &p) in op_positions.iter().enumerate() {
        let operator = symbols[p].symbol;
        let Some(slots) = spec.operator_constraints.get(&operator) else {
            continue;
        };
        let start = if k == 0 { 0 } else { op_positions[k - 1] + 1 };
        let end = op_positions.get(k + 1).copied().unwrap_or(symbols.len());
        for (slot, range) in [(0, start..p), (1, p + 1..end)] {
            let Some(constraint) = slots.get(slot) else {
                continue;
            };
            for position in range {
                let arg = &symbols[position];
                if arg.symbol == UNKNOWN_SYMBOL {
                    continue;
                }
                if !constraint.classes.is_empty() && !constraint.classes.contains(&arg.symbol) {
                    violations.push(Violation::ClassNotAllowed {
                        operator,
                        slot,
                        position,
                        symbol: arg.symbol,
                        allowed: constraint.classes.iter().copied().collect(),
                    });
                }
                let Some(features) = &arg.features else { continue };
                if !constraint.required_any.is_empty()
                    && !features.iter().any(|f| constraint.required_any.contains(f))
                {
                    violations.push(Violation::MissingFeature {
                        operator,
                        slot,
                        position,
                        word: arg.word.clone(),
                        required_any: constraint.required_any.iter().cloned().collect(),
                    });
                }
                for feature in features.iter().filter(|f| constraint.forbidden.contains(*f)) {
                    violations.push(Violation::ForbiddenFeature {
                        operator,
                        slot,
                        position,
                        word: arg.word.clone(),
                        feature: feature.clone(),
                    });
                }
            }
        }
    }
    if !spec.is_admissible(&pattern) {
        violations.push(Violation::PatternNotAdmissible {
            pattern: pattern.clone(),
        });
    }
    CoreReport {
        accepted: violations.is_empty(),
        pattern,
        violations,
    }
}

/// Swaps the arguments around the single operator and flips the voice.
/// Applying it twice gives back the original formula.
pub fn passive_transform(formula: &SentenceFormula) -> Result<SentenceFormula, SublangError> {
    let p = formula
        .single_operator()
        .ok_or_else(|| SublangError::NotBinary(formula.pattern()))?;
    let symbols = formula.swapped(p);
    Ok(SentenceFormula {
        symbols,
        voice: formula.voice.flipped(),
    })
}
