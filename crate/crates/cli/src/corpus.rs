use std::path::Path;

use ringua::sublang::CorpusRecord;
use serde::Serialize;

use crate::render::read;
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IngestedRecord {
    /// 1-based line number in the source file.
    pub line: usize,
    pub record: CorpusRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedLine {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IngestedCorpus {
    pub records: Vec<IngestedRecord>,
    pub skipped: Vec<SkippedLine>,
}

fn check(record: &CorpusRecord) -> Result<(), String> {
    match &record.date {
        None => return Err("record has no date".into()),
        Some(d) if d.trim().is_empty() => return Err("record has an empty date".into()),
        Some(_) => {}
    }
    if record.text.is_none() && record.tokens.is_none() {
        return Err("record has neither text nor tokens".into());
    }
    Ok(())
}

/// Reads line-delimited JSON records in file order, skipping blank lines.
///
/// A malformed line aborts when `strict` is set and is otherwise recorded in
/// [`IngestedCorpus::skipped`].
pub fn ingest_corpus(path: &Path, strict: bool) -> Result<IngestedCorpus, CliError> {
    let text = read(path)?;
    let mut corpus = IngestedCorpus::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let parsed = serde_json::from_str::<CorpusRecord>(raw)
            .map_err(|e| e.to_string())
            .and_then(|r| check(&r).map(|()| r));
        match parsed {
            Ok(record) => corpus.records.push(IngestedRecord { line, record }),
            Err(message) if strict => {
                return Err(CliError::Corpus {
                    path: path.to_path_buf(),
                    line,
                    message,
                })
            }
            Err(message) => corpus.skipped.push(SkippedLine { line, message }),
        }
    }
    Ok(corpus)
}
