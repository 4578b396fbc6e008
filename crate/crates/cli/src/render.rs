use std::fs;
use std::io::Write;
use std::path::Path;

use ringua::ring::{load_ring, RingFile};
use ringua::sublang::{load_bundle, Sublanguage};
use ringua::{ElementSet, RingSpec};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::{Cli, CliError, SubsetArg};

/// What a command produces: a JSON report with a one-screen summary, or a
/// finished document such as DOT or SVG.
pub(crate) enum Output {
    Report { json: Value, summary: String },
    Document(String),
}

impl Output {
    pub(crate) fn report(json: Value, summary: impl Into<String>) -> Self {
        Output::Report {
            json,
            summary: summary.into(),
        }
    }

    pub(crate) fn emit(self, cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
        let mut text = match self {
            Output::Report { summary, .. } if cli.text => summary,
            Output::Report { json, .. } => {
                serde_json::to_string_pretty(&json).expect("JSON values serialize")
            }
            Output::Document(doc) => doc,
        };
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &cli.out {
            Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            }),
            None => stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
        }
    }
}

pub(crate) fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub(crate) fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read(path)?).map_err(|source| CliError::Json {
        path: path.to_path_buf(),
        source,
    })
}

pub(crate) fn load_ring_file(path: &Path) -> Result<RingSpec, CliError> {
    load_ring(&read(path)?).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))
}

pub(crate) fn load_raw_ring(path: &Path) -> Result<RingSpec, CliError> {
    let file: RingFile = read_json(path)?;
    file.into_ring_unchecked()
        .map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))
}

pub(crate) fn load_language(path: &Path) -> Result<Sublanguage, CliError> {
    load_bundle(&read(path)?).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))
}

pub(crate) fn lines(path: &Path) -> Result<Vec<String>, CliError> {
    Ok(read(path)?
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect())
}

pub(crate) fn labels(ring: &RingSpec, set: &ElementSet) -> Vec<String> {
    set.iter().map(|x| ring.label(x).to_string()).collect()
}

pub(crate) fn set_json(ring: &RingSpec, set: &ElementSet) -> Value {
    json!({ "bitmask": set.to_hex(), "elements": labels(ring, set) })
}

pub(crate) fn set_text(ring: &RingSpec, set: &ElementSet) -> String {
    format!("{{{}}}", labels(ring, set).join(", "))
}

impl SubsetArg {
    pub(crate) fn is_given(&self) -> bool {
        self.subset.is_some() || !self.indices.is_empty() || !self.elements.is_empty()
    }

    /// Resolves the subset against a ring; exactly one of the three forms
    /// must be used.
    pub(crate) fn resolve(&self, ring: &RingSpec) -> Result<ElementSet, CliError> {
        let forms = [
            self.subset.is_some(),
            !self.indices.is_empty(),
            !self.elements.is_empty(),
        ];
        match forms.iter().filter(|&&f| f).count() {
            0 => {
                return Err(CliError::Usage(
                    "give the subset with --subset, --indices or --element".into(),
                ))
            }
            1 => {}
            _ => {
                return Err(CliError::Usage(
                    "use only one of --subset, --indices and --element".into(),
                ))
            }
        }
        let n = ring.size();
        if let Some(hex) = &self.subset {
            let set =
                ElementSet::from_hex(n, hex).map_err(|e| CliError::Usage(format!("--subset {hex}: {e}")))?;
            return Ok(set);
        }
        if let Some(&bad) = self.indices.iter().find(|&&i| i >= n) {
            return Err(CliError::Usage(format!(
                "index {bad} is outside a ring of size {n}"
            )));
        }
        let mut members = self.indices.clone();
        for label in &self.elements {
            let x = ring
                .element_by_label(label)
                .ok_or_else(|| CliError::Usage(format!("no element labelled {label:?}")))?;
            members.push(x);
        }
        Ok(ElementSet::from_indices(n, members))
    }
}
