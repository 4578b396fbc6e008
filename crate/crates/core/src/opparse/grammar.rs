use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::yard::PrecedenceTable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Production {
    pub lhs: String,
    pub rhs: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorGrammar {
    pub terminals: BTreeSet<String>,
    pub nonterminals: BTreeSet<String>,
    pub productions: Vec<Production>,
    #[serde(default)]
    pub precedence: PrecedenceTable,
}

impl OperatorGrammar {
    /// Reads lines such as `E -> E + E | ( E ) | id`. Left-hand sides are
    /// the nonterminals, every other right-hand symbol is a terminal, and an
    /// empty alternative or `ε` is an empty right-hand side.
    pub fn parse(text: &str) -> Result<OperatorGrammar, String> {
        let mut g = OperatorGrammar {
            precedence: PrecedenceTable::default(),
            ..Default::default()
        };
        let mut rules = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| format!("line {}: expected `lhs -> rhs`", n + 1))?;
            let lhs = lhs.trim();
            if lhs.is_empty() || lhs.contains(char::is_whitespace) {
                return Err(format!("line {}: bad left-hand side {lhs:?}", n + 1));
            }
            g.nonterminals.insert(lhs.to_string());
            for alt in rhs.split('|') {
                let symbols: Vec<String> = alt
                    .split_whitespace()
                    .filter(|s| *s != "ε")
                    .map(String::from)
                    .collect();
                rules.push(Production {
                    lhs: lhs.to_string(),
                    rhs: symbols,
                });
            }
        }
        for p in &rules {
            for s in &p.rhs {
                if !g.nonterminals.contains(s) {
                    g.terminals.insert(s.clone());
                }
            }
        }
        g.productions = rules;
        Ok(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GrammarViolation {
    EmptyRhs {
        production: usize,
    },
    /// `position` and `position + 1` are both nonterminals.
    AdjacentNonterminals {
        production: usize,
        position: usize,
    },
    UndeclaredLhs {
        production: usize,
    },
    SymbolInBothSets {
        symbol: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrammarReport {
    pub valid: bool,
    pub violations: Vec<GrammarViolation>,
}

/// Accepts a grammar when no right-hand side is empty and none has two
/// nonterminals next to each other. Every offending production is listed.
pub fn validate_operator_grammar(g: &OperatorGrammar) -> GrammarReport {
    let mut violations: Vec<GrammarViolation> = g
        .terminals
        .intersection(&g.nonterminals)
        .map(|s| GrammarViolation::SymbolInBothSets { symbol: s.clone() })
        .collect();
    for (i, p) in g.productions.iter().enumerate() {
        if !g.nonterminals.contains(&p.lhs) {
            violations.push(GrammarViolation::UndeclaredLhs { production: i });
        }
        if p.rhs.is_empty() {
            violations.push(GrammarViolation::EmptyRhs { production: i });
        }
        for (position, pair) in p.rhs.windows(2).enumerate() {
            if g.nonterminals.contains(&pair[0]) && g.nonterminals.contains(&pair[1]) {
                violations.push(GrammarViolation::AdjacentNonterminals {
                    production: i,
                    position,
                });
            }
        }
    }
    GrammarReport {
        valid: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expression_grammar_is_operator_grammar() {
        let g = OperatorGrammar::parse("E -> E + E | E * E | ( E ) | id").unwrap();
        assert_eq!(g.productions.len(), 4);
        assert_eq!(
            g.terminals.iter().map(String::as_str).collect::<Vec<_>>(),
            ["(", ")", "*", "+", "id"]
        );
        assert!(validate_operator_grammar(&g).valid);
    }

    #[test]
    fn empty_rhs_rejected() {
        let g = OperatorGrammar::parse("E -> ε\nE -> id |").unwrap();
        let r = validate_operator_grammar(&g);
        assert!(!r.valid);
        assert_eq!(
            r.violations,
            [
                GrammarViolation::EmptyRhs { production: 0 },
                GrammarViolation::EmptyRhs { production: 2 }
            ]
        );
    }

    #[test]
    fn adjacent_nonterminals_rejected() {
        let g = OperatorGrammar::parse("E -> E E | id\nS -> a E T b\nT -> t").unwrap();
        let r = validate_operator_grammar(&g);
        assert_eq!(
            r.violations,
            [
                GrammarViolation::AdjacentNonterminals {
                    production: 0,
                    position: 0
                },
                GrammarViolation::AdjacentNonterminals {
                    production: 2,
                    position: 1
                },
            ]
        );
    }

    #[test]
    fn structural_checks() {
        let g = OperatorGrammar {
            terminals: ["x".to_string()].into(),
            nonterminals: ["x".to_string()].into(),
            productions: vec![Production {
                lhs: "Y".into(),
                rhs: vec!["x".into()],
            }],
            precedence: PrecedenceTable::default(),
        };
        let r = validate_operator_grammar(&g);
        assert!(r
            .violations
            .contains(&GrammarViolation::SymbolInBothSets { symbol: "x".into() }));
        assert!(r
            .violations
            .contains(&GrammarViolation::UndeclaredLhs { production: 0 }));
        assert!(OperatorGrammar::parse("E = id").is_err());
    }
}
