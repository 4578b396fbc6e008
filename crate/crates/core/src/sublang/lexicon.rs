use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::marker::PhantomData;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::{Deserialize, Serialize};

use super::SublangError;

/// Word and phrase tables. Keys are lowercase, space-separated lemmas.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Lexicon {
    #[serde(default, deserialize_with = "unique_map")]
    pub word_classes: BTreeMap<String, char>,
    #[serde(default, deserialize_with = "unique_map")]
    pub operator_classes: BTreeMap<String, char>,
    #[serde(default, deserialize_with = "unique_map")]
    pub features: BTreeMap<String, Vec<String>>,
    #[serde(default, deserialize_with = "unique_map")]
    pub lemmas: BTreeMap<String, String>,
    #[serde(default)]
    pub function_words: BTreeSet<String>,
    #[serde(default)]
    pub passive_auxiliaries: BTreeSet<String>,
    #[serde(default = "default_agent_marker")]
    pub agent_marker: String,
}

fn default_agent_marker() -> String {
    "by".to_string()
}

/// Rejects repeated keys instead of keeping the last one.
fn unique_map<'de, D, V>(d: D) -> Result<BTreeMap<String, V>, D::Error>
where
    D: Deserializer<'de>,
    V: Deserialize<'de>,
{
    struct UniqueVisitor<V>(PhantomData<V>);

    impl<'de, V: Deserialize<'de>> Visitor<'de> for UniqueVisitor<V> {
        type Value = BTreeMap<String, V>;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a map with distinct keys")
        }

        fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
            let mut out = BTreeMap::new();
            while let Some((key, value)) = access.next_entry::<String, V>()? {
                let key = normalize(&key);
                if out.contains_key(&key) {
                    return Err(de::Error::custom(format!("{key:?} is mapped more than once")));
                }
                out.insert(key, value);
            }
            Ok(out)
        }
    }

    d.deserialize_map(UniqueVisitor(PhantomData))
}

pub(crate) fn normalize(phrase: &str) -> String {
    phrase
        .split_whitespace()
        .map(str::to_lowercase)
        .collect::<Vec<_>>()
        .join(" ")
}

pub(crate) fn check_symbol(s: char) -> Result<(), SublangError> {
    if s.is_whitespace() || "?*_^".contains(s) {
        return Err(SublangError::BadSymbol(s.to_string()));
    }
    Ok(())
}

impl Lexicon {
    pub fn validate(&self) -> Result<(), SublangError> {
        if let Some(word) = self
            .word_classes
            .keys()
            .find(|w| self.operator_classes.contains_key(*w))
        {
            return Err(SublangError::WordInBothMaps(word.clone()));
        }
        let classes: BTreeSet<char> = self.word_classes.values().copied().collect();
        let operators: BTreeSet<char> = self.operator_classes.values().copied().collect();
        for &s in classes.iter().chain(&operators) {
            check_symbol(s)?;
        }
        if let Some(&s) = classes.intersection(&operators).next() {
            return Err(SublangError::SymbolOverlap(s));
        }
        Ok(())
    }

    pub fn class_symbols(&self) -> BTreeSet<char> {
        self.word_classes.values().copied().collect()
    }

    pub fn operator_symbols(&self) -> BTreeSet<char> {
        self.operator_classes.values().copied().collect()
    }

    pub(crate) fn lemma<'a>(&'a self, token: &'a str) -> &'a str {
        self.lemmas.get(token).map_or(token, String::as_str)
    }

    pub(crate) fn longest_entry(&self) -> usize {
        self.word_classes
            .keys()
            .chain(self.operator_classes.keys())
            .map(|k| k.split(' ').count())
            .max()
            .unwrap_or(1)
    }
}

pub fn load_lexicon(text: &str) -> Result<Lexicon, SublangError> {
    let lexicon: Lexicon = serde_json::from_str(text)?;
    lexicon.validate()?;
    Ok(lexicon)
}
