use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use ringua::opparse::{
    parse_formula_text, postfix_text, postfix_to_infix, shunting_yard, tokenize_infix,
    validate_operator_grammar, OperatorGrammar, PrecedenceTable,
};
use ringua::sublang::{
    chain_membership, diachronic_profile, dominant_sequence, formulaize, in_core, passive_transform,
    tokenize, verify_right_ideal_property, DiscourseChain, R2Outcome, SentenceFormula, Sublanguage,
};
use serde_json::{json, Value};

use crate::corpus::ingest_corpus;
use crate::render::{lines, load_language, read, Output};
use crate::{CliError, SublangCommand};

fn core_json(lang: &Sublanguage, formula: &SentenceFormula) -> Value {
    let report = in_core(formula, &lang.spec);
    json!({
        "formula": formula.to_string(),
        "symbols": formula.symbols,
        "voice": formula.voice,
        "pattern": report.pattern,
        "accepted": report.accepted,
        "violations": report.violations,
    })
}

fn core_text(lang: &Sublanguage, formula: &SentenceFormula) -> String {
    let report = in_core(formula, &lang.spec);
    let mut out = format!(
        "{formula}: {}",
        if report.accepted { "in core" } else { "not in core" }
    );
    for v in &report.violations {
        out.push_str(&format!("\n  {v}"));
    }
    out
}

pub(crate) fn parse(formula: &str, spec: &Path) -> Result<Output, CliError> {
    let lang = load_language(spec)?;
    let f = parse_formula_text(formula, &lang.spec).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(Output::report(core_json(&lang, &f), core_text(&lang, &f)))
}

pub(crate) fn yard(infix: &str) -> Result<Output, CliError> {
    let table = PrecedenceTable::default();
    let usage = |e: &dyn std::fmt::Display| CliError::Usage(format!("{infix:?}: {e}"));
    let tokens = tokenize_infix(infix, &table).map_err(|e| usage(&e))?;
    let postfix = shunting_yard(&tokens, &table).map_err(|e| usage(&e))?;
    let text = postfix_text(&postfix);
    let parenthesized = postfix_to_infix(&postfix).map_err(|e| usage(&e))?;
    Ok(Output::report(
        json!({ "postfix": text, "parenthesized": parenthesized }),
        text,
    ))
}

pub(crate) fn grammar(file: &Path) -> Result<Output, CliError> {
    let text = read(file)?;
    let g: OperatorGrammar = if text.trim_start().starts_with('{') {
        serde_json::from_str(&text).map_err(|source| CliError::Json {
            path: file.to_path_buf(),
            source,
        })?
    } else {
        OperatorGrammar::parse(&text).map_err(|e| CliError::Domain(format!("{}: {e}", file.display())))?
    };
    let report = validate_operator_grammar(&g);
    let summary = if report.valid {
        format!("operator grammar ({} productions)", g.productions.len())
    } else {
        format!("not an operator grammar: {} violations", report.violations.len())
    };
    Ok(Output::report(
        serde_json::to_value(&report).expect("report serializes"),
        summary,
    ))
}

pub(crate) fn sublang(cmd: &SublangCommand, stderr: &mut dyn Write) -> Result<Output, CliError> {
    match cmd {
        SublangCommand::Check {
            spec,
            sentence,
            input,
        } => {
            let lang = load_language(spec)?;
            let mut sentences = sentence.clone();
            if let Some(path) = input {
                sentences.extend(lines(path)?);
            }
            if sentences.is_empty() {
                return Err(CliError::Usage(
                    "give at least one --sentence or an --input file".into(),
                ));
            }
            let mut results = Vec::new();
            let mut summary = Vec::new();
            for s in &sentences {
                let f = formulaize(&tokenize(s), &lang.lexicon);
                let mut entry = core_json(&lang, &f);
                entry["sentence"] = json!(s);
                if let Ok(t) = passive_transform(&f) {
                    let r = in_core(&t, &lang.spec);
                    entry["transformed"] =
                        json!({ "formula": t.to_string(), "voice": t.voice, "accepted": r.accepted });
                }
                results.push(entry);
                summary.push(format!("{s}\n  {}", core_text(&lang, &f).replace('\n', "\n  ")));
            }
            Ok(Output::report(
                json!({ "sentences": results }),
                summary.join("\n"),
            ))
        }
        SublangCommand::Chain { spec, head, link } => {
            let lang = load_language(spec)?;
            let mut chain = DiscourseChain::new(head.clone());
            for l in link {
                let (conj, sentence) = l
                    .split_once(':')
                    .ok_or_else(|| CliError::Usage(format!("--link {l:?} should be conjunction:sentence")))?;
                chain = chain.then(conj.trim(), sentence.trim());
            }
            let d = chain_membership(&lang, &chain).map_err(CliError::domain)?;
            let summary = format!(
                "{}: {}",
                chain.to_text(),
                if d.accepted {
                    "in the extended sublanguage"
                } else {
                    "not in the extended sublanguage"
                }
            );
            Ok(Output::report(json!({ "chain": chain, "decision": d }), summary))
        }
        SublangCommand::Closure {
            spec,
            core,
            general,
            depth,
        } => {
            let lang = load_language(spec)?;
            let core = lines(core)?;
            let general = match general {
                Some(p) => lines(p)?,
                None => Vec::new(),
            };
            let r = verify_right_ideal_property(&lang, &core, &general, *depth).map_err(CliError::domain)?;
            let r2 = match &r.r2 {
                R2Outcome::Witness { chain } => format!("left absorption fails: {}", chain.to_text()),
                R2Outcome::NoWitness => "no left-absorption failure found".to_string(),
                R2Outcome::NotSought => "no witness sought".to_string(),
            };
            let summary = format!(
                "right absorption {} over {} extensions up to {} sentences; {r2}",
                if r.r1.holds { "holds" } else { "fails" },
                r.r1.extensions_checked,
                r.depth
            );
            Ok(Output::report(
                serde_json::to_value(&r).expect("report serializes"),
                summary,
            ))
        }
        SublangCommand::Drift {
            spec,
            corpus,
            period,
            strict,
        } => {
            let lang = load_language(spec)?;
            let ingested = ingest_corpus(corpus, *strict)?;
            for s in &ingested.skipped {
                let _ = writeln!(stderr, "warning: {}:{}: {}", corpus.display(), s.line, s.message);
            }
            let records: Vec<_> = ingested.records.iter().map(|r| r.record.clone()).collect();
            let profile = diachronic_profile(&records, &lang, *period).map_err(CliError::domain)?;
            let d = dominant_sequence(&profile);
            let periods: BTreeMap<String, &BTreeMap<String, usize>> =
                profile.periods.iter().map(|(p, c)| (p.to_string(), c)).collect();
            let json = json!({
                "period_years": profile.period_years,
                "records": records.len(),
                "skipped": ingested.skipped,
                "periods": periods,
                "modal": d.modal,
                "dominant_sequence": d.sequence,
                "ties": d.ties,
            });
            let mut summary = d.sequence.join(" > ");
            for t in &d.ties {
                summary.push_str(&format!("\ntie in {}: {}", t.period, t.patterns.join(", ")));
            }
            Ok(Output::report(json, summary))
        }
    }
}
