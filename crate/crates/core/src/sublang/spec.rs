use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::lexicon::{check_symbol, Lexicon};
use super::SublangError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConjunctionMode {
    /// The conjoined sentence must itself be in the sublanguage.
    Strict,
    /// Any sentence may follow.
    Permissive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conjunction {
    pub word: String,
    pub mode: ConjunctionMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Transform {
    Passive,
}

/// Restrictions on the arguments in one position of an operator.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SlotConstraint {
    /// Allowed argument classes; empty allows any.
    #[serde(default)]
    pub classes: BTreeSet<char>,
    /// The argument must carry at least one of these; empty skips the check.
    #[serde(default)]
    pub required_any: BTreeSet<String>,
    #[serde(default)]
    pub forbidden: BTreeSet<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SublanguageSpec {
    /// Argument class symbols with a gloss.
    #[serde(default)]
    pub classes: BTreeMap<char, String>,
    /// Operator symbols with a gloss.
    #[serde(default)]
    pub operators: BTreeMap<char, String>,
    #[serde(default)]
    pub features: BTreeSet<String>,
    /// Symbol strings such as `"GJB"`; spaces are ignored.
    #[serde(default)]
    pub admissible_patterns: BTreeSet<String>,
    /// Coarse patterns of the surrounding language, where `*` matches any run
    /// of symbols.
    #[serde(default)]
    pub general_patterns: Vec<String>,
    /// Per operator, slot 0 constrains the arguments before it and slot 1
    /// those after it.
    #[serde(default)]
    pub operator_constraints: BTreeMap<char, Vec<SlotConstraint>>,
    #[serde(default)]
    pub conjunctions: Vec<Conjunction>,
    #[serde(default)]
    pub transforms: Vec<Transform>,
}

fn compact(pattern: &str) -> String {
    pattern.chars().filter(|c| !c.is_whitespace()).collect()
}

fn wildcard_match(pattern: &[char], text: &[char]) -> bool {
    match pattern.split_first() {
        None => text.is_empty(),
        Some(('*', rest)) => (0..=text.len()).any(|i| wildcard_match(rest, &text[i..])),
        Some((p, rest)) => text.first() == Some(p) && wildcard_match(rest, &text[1..]),
    }
}

impl SublanguageSpec {
    pub fn validate(&self) -> Result<(), SublangError> {
        for &s in self.classes.keys().chain(self.operators.keys()) {
            check_symbol(s)?;
        }
        if let Some(&s) = self.classes.keys().find(|s| self.operators.contains_key(s)) {
            return Err(SublangError::SymbolOverlap(s));
        }
        let declared = self.symbols();
        for pattern in &self.admissible_patterns {
            if let Some(symbol) = compact(pattern).chars().find(|c| !declared.contains(c)) {
                return Err(SublangError::UndeclaredSymbol {
                    pattern: pattern.clone(),
                    symbol,
                });
            }
        }
        for pattern in &self.general_patterns {
            if let Some(symbol) = compact(pattern)
                .chars()
                .find(|&c| c != '*' && !declared.contains(&c))
            {
                return Err(SublangError::UndeclaredSymbol {
                    pattern: pattern.clone(),
                    symbol,
                });
            }
        }
        for (&op, slots) in &self.operator_constraints {
            if !self.operators.contains_key(&op) {
                return Err(SublangError::UndeclaredOperator(op));
            }
            for slot in slots {
                if let Some(&symbol) = slot.classes.iter().find(|c| !self.classes.contains_key(c)) {
                    return Err(SublangError::UndeclaredSymbol {
                        pattern: op.to_string(),
                        symbol,
                    });
                }
                if let Some(f) = slot
                    .required_any
                    .iter()
                    .chain(&slot.forbidden)
                    .find(|f| !self.features.contains(*f))
                {
                    return Err(SublangError::UndeclaredFeature(f.clone()));
                }
            }
        }
        let mut words = BTreeSet::new();
        for c in &self.conjunctions {
            if !words.insert(c.word.as_str()) {
                return Err(SublangError::DuplicateConjunction(c.word.clone()));
            }
        }
        Ok(())
    }

    pub fn symbols(&self) -> BTreeSet<char> {
        self.classes
            .keys()
            .chain(self.operators.keys())
            .copied()
            .collect()
    }

    pub fn is_operator(&self, s: char) -> bool {
        self.operators.contains_key(&s)
    }

    pub fn is_admissible(&self, pattern: &str) -> bool {
        let pattern = compact(pattern);
        self.admissible_patterns.iter().any(|p| compact(p) == pattern)
    }

    /// Whether some coarse pattern of the surrounding language covers `pattern`.
    pub fn matches_general(&self, pattern: &str) -> bool {
        let text: Vec<char> = compact(pattern).chars().collect();
        self.general_patterns
            .iter()
            .any(|g| wildcard_match(&compact(g).chars().collect::<Vec<_>>(), &text))
    }

    pub fn conjunction(&self, word: &str) -> Option<&Conjunction> {
        self.conjunctions.iter().find(|c| c.word == word)
    }

    pub fn permissive_conjunctions(&self) -> impl Iterator<Item = &str> {
        self.conjunctions
            .iter()
            .filter(|c| c.mode == ConjunctionMode::Permissive)
            .map(|c| c.word.as_str())
    }
}

pub fn load_spec(text: &str) -> Result<SublanguageSpec, SublangError> {
    let spec: SublanguageSpec = serde_json::from_str(text)?;
    spec.validate()?;
    Ok(spec)
}

/// A lexicon together with the grammar it feeds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sublanguage {
    pub lexicon: Lexicon,
    pub spec: SublanguageSpec,
}

impl Sublanguage {
    pub fn new(lexicon: Lexicon, spec: SublanguageSpec) -> Result<Self, SublangError> {
        lexicon.validate()?;
        spec.validate()?;
        for s in lexicon.class_symbols() {
            if !spec.classes.contains_key(&s) {
                return Err(SublangError::LexiconMismatch(s));
            }
        }
        for s in lexicon.operator_symbols() {
            if !spec.operators.contains_key(&s) {
                return Err(SublangError::LexiconMismatch(s));
            }
        }
        if let Some(f) = lexicon
            .features
            .values()
            .flatten()
            .find(|f| !spec.features.contains(*f))
        {
            return Err(SublangError::UndeclaredFeature(f.clone()));
        }
        Ok(Sublanguage { lexicon, spec })
    }
}

/// Reads `{"lexicon": ..., "spec": ...}`.
pub fn load_bundle(text: &str) -> Result<Sublanguage, SublangError> {
    let raw: Sublanguage = serde_json::from_str(text)?;
    Sublanguage::new(raw.lexicon, raw.spec)
}
