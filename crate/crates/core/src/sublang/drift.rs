use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::formula::{formulaize, tokenize};
use super::spec::Sublanguage;
use super::SublangError;

pub const DEFAULT_PERIOD_YEARS: i64 = 10;

/// One dated sentence, given either as text or as ready-made tokens.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusRecord {
    #[serde(default)]
    pub date: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tokens: Option<Vec<String>>,
}

impl CorpusRecord {
    pub fn text(date: &str, text: &str) -> Self {
        CorpusRecord {
            date: Some(date.into()),
            text: Some(text.into()),
            tokens: None,
        }
    }
}

/// Pattern counts per period, keyed by the first year of the period.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Profile {
    pub period_years: i64,
    pub periods: BTreeMap<i64, BTreeMap<String, usize>>,
}

fn year_of(index: usize, date: &str) -> Result<i64, SublangError> {
    let trimmed = date.trim();
    let digits: String = trimmed
        .char_indices()
        .take_while(|&(i, c)| c.is_ascii_digit() || (i == 0 && c == '-'))
        .map(|(_, c)| c)
        .collect();
    digits.parse().map_err(|_| SublangError::BadDate {
        index,
        date: date.to_string(),
    })
}

/// Counts active-order patterns per period of `period_years` years.
pub fn diachronic_profile(
    records: &[CorpusRecord],
    lang: &Sublanguage,
    period_years: i64,
) -> Result<Profile, SublangError> {
    if records.is_empty() {
        return Err(SublangError::EmptyCorpus);
    }
    let width = period_years.max(1);
    let mut periods: BTreeMap<i64, BTreeMap<String, usize>> = BTreeMap::new();
    for (index, record) in records.iter().enumerate() {
        let date = record.date.as_deref().ok_or(SublangError::UndatedRecord(index))?;
        let year = year_of(index, date)?;
        let tokens = match (&record.tokens, &record.text) {
            (Some(tokens), _) => tokens.iter().map(|t| t.to_lowercase()).collect(),
            (None, Some(text)) => tokenize(text),
            (None, None) => return Err(SublangError::EmptyRecord(index)),
        };
        let pattern = formulaize(&tokens, &lang.lexicon).canonical_pattern();
        let period = year - year.rem_euclid(width);
        *periods.entry(period).or_default().entry(pattern).or_default() += 1;
    }
    Ok(Profile {
        period_years: width,
        periods,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TieFlag {
    pub period: i64,
    /// Tied patterns in lexicographic order; the first was chosen.
    pub patterns: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominantSequence {
    /// Each pattern once, at the first period where it is the most frequent.
    pub sequence: Vec<String>,
    /// The most frequent pattern of every period, in time order.
    pub modal: Vec<(i64, String)>,
    pub ties: Vec<TieFlag>,
}

/// Reads off which pattern dominates each period. Ties go to the
/// lexicographically smallest pattern and are reported.
pub fn dominant_sequence(profile: &Profile) -> DominantSequence {
    let mut out = DominantSequence {
        sequence: vec![],
        modal: vec![],
        ties: vec![],
    };
    for (&period, counts) in &profile.periods {
        let Some(&best) = counts.values().max() else {
            continue;
        };
        let tied: Vec<String> = counts
            .iter()
            .filter(|(_, &c)| c == best)
            .map(|(p, _)| p.clone())
            .collect();
        let chosen = tied[0].clone();
        if tied.len() > 1 {
            out.ties.push(TieFlag {
                period,
                patterns: tied,
            });
        }
        if !out.sequence.contains(&chosen) {
            out.sequence.push(chosen.clone());
        }
        out.modal.push((period, chosen));
    }
    out
}
