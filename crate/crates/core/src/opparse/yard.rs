use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Assoc {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Precedence {
    pub level: u8,
    pub assoc: Assoc,
}

/// Binary operators with their binding strength; higher levels bind
/// tighter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PrecedenceTable(pub BTreeMap<String, Precedence>);

impl Default for PrecedenceTable {
    /// `+ -` at level 1, `* × /` at level 2, all left-associative; `^` at
    /// level 3, right-associative.
    fn default() -> Self {
        let mut t = BTreeMap::new();
        for (ops, level, assoc) in [
            (&["+", "-"][..], 1, Assoc::Left),
            (&["*", "×", "/"][..], 2, Assoc::Left),
            (&["^"][..], 3, Assoc::Right),
        ] {
            for op in ops {
                t.insert(op.to_string(), Precedence { level, assoc });
            }
        }
        PrecedenceTable(t)
    }
}

impl PrecedenceTable {
    pub fn get(&self, op: &str) -> Option<Precedence> {
        self.0.get(op).copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "text", rename_all = "lowercase")]
pub enum Token {
    Operand(String),
    Operator(String),
    LParen,
    RParen,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Operand(s) | Token::Operator(s) => f.write_str(s),
            Token::LParen => f.write_str("("),
            Token::RParen => f.write_str(")"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unbalanced parenthesis at token {0}")]
    UnbalancedParens(usize),
    #[error("unknown operator {0:?}")]
    UnknownOperator(String),
}

/// Splits infix text into operands (runs of letters, digits and `_`),
/// parentheses and the operators of `table`, longest match first.
pub fn tokenize_infix(text: &str, table: &PrecedenceTable) -> Result<Vec<Token>, ParseError> {
    let mut ops: Vec<&str> = table.0.keys().map(String::as_str).collect();
    ops.sort_by_key(|op| std::cmp::Reverse(op.len()));
    let mut tokens = Vec::new();
    let mut rest = text;
    while let Some(c) = rest.chars().next() {
        if c.is_whitespace() {
            rest = &rest[c.len_utf8()..];
        } else if c == '(' || c == ')' {
            tokens.push(if c == '(' { Token::LParen } else { Token::RParen });
            rest = &rest[1..];
        } else if c.is_alphanumeric() || c == '_' {
            let end = rest
                .find(|c: char| !(c.is_alphanumeric() || c == '_'))
                .unwrap_or(rest.len());
            tokens.push(Token::Operand(rest[..end].to_string()));
            rest = &rest[end..];
        } else if let Some(op) = ops.iter().find(|op| rest.starts_with(**op)) {
            tokens.push(Token::Operator(op.to_string()));
            rest = &rest[op.len()..];
        } else {
            return Err(ParseError::UnknownOperator(c.to_string()));
        }
    }
    Ok(tokens)
}

/// Converts infix tokens to postfix with Dijkstra's shunting-yard method.
pub fn shunting_yard(infix: &[Token], table: &PrecedenceTable) -> Result<Vec<Token>, ParseError> {
    let mut output = Vec::with_capacity(infix.len());
    let mut stack: Vec<(usize, &Token)> = Vec::new();
    for (i, token) in infix.iter().enumerate() {
        match token {
            Token::Operand(_) => output.push(token.clone()),
            Token::Operator(op) => {
                let p = table
                    .get(op)
                    .ok_or_else(|| ParseError::UnknownOperator(op.clone()))?;
                while let Some(&(_, Token::Operator(top))) = stack.last() {
                    let q = table.get(top).expect("stacked operators are known");
                    if q.level > p.level || (q.level == p.level && p.assoc == Assoc::Left) {
                        output.push(stack.pop().expect("non-empty").1.clone());
                    } else {
                        break;
                    }
                }
                stack.push((i, token));
            }
            Token::LParen => stack.push((i, token)),
            Token::RParen => loop {
                match stack.pop() {
                    Some((_, Token::LParen)) => break,
                    Some((_, t)) => output.push(t.clone()),
                    None => return Err(ParseError::UnbalancedParens(i)),
                }
            },
        }
    }
    while let Some((i, t)) = stack.pop() {
        if *t == Token::LParen {
            return Err(ParseError::UnbalancedParens(i));
        }
        output.push(t.clone());
    }
    Ok(output)
}

/// Space-joined token text.
pub fn postfix_text(tokens: &[Token]) -> String {
    tokens.iter().map(Token::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("operator at token {0} lacks two operands")]
    StackUnderflow(usize),
    #[error("{0} operands left over")]
    LeftoverOperands(usize),
    #[error("empty expression")]
    Empty,
    #[error("no value for operand {0:?}")]
    UnknownOperand(String),
    #[error("no definition for operator {0:?}")]
    UnknownOperator(String),
    #[error("parenthesis in postfix input")]
    Parenthesis,
}

fn fold_postfix<T>(
    postfix: &[Token],
    mut leaf: impl FnMut(&str) -> Result<T, EvalError>,
    mut node: impl FnMut(&str, T, T) -> Result<T, EvalError>,
) -> Result<T, EvalError> {
    let mut stack = Vec::new();
    for (i, token) in postfix.iter().enumerate() {
        match token {
            Token::Operand(name) => stack.push(leaf(name)?),
            Token::Operator(op) => {
                let rhs = stack.pop().ok_or(EvalError::StackUnderflow(i))?;
                let lhs = stack.pop().ok_or(EvalError::StackUnderflow(i))?;
                stack.push(node(op, lhs, rhs)?);
            }
            Token::LParen | Token::RParen => return Err(EvalError::Parenthesis),
        }
    }
    match stack.len() {
        0 => Err(EvalError::Empty),
        1 => Ok(stack.pop().expect("one value")),
        n => Err(EvalError::LeftoverOperands(n - 1)),
    }
}

/// Evaluates postfix tokens with operand values from `env` and binary
/// operators from `ops`, which returns `None` for operators it does not
/// define.
pub fn eval_postfix<T: Clone>(
    postfix: &[Token],
    env: &HashMap<String, T>,
    ops: &dyn Fn(&str, &T, &T) -> Option<T>,
) -> Result<T, EvalError> {
    fold_postfix(
        postfix,
        |name| {
            env.get(name)
                .cloned()
                .ok_or_else(|| EvalError::UnknownOperand(name.to_string()))
        },
        |op, l, r| ops(op, &l, &r).ok_or_else(|| EvalError::UnknownOperator(op.to_string())),
    )
}

/// Fully parenthesized infix text; bare operands stay unparenthesized.
pub fn postfix_to_infix(postfix: &[Token]) -> Result<String, EvalError> {
    fold_postfix(
        postfix,
        |name| Ok(name.to_string()),
        |op, l, r| Ok(format!("({l} {op} {r})")),
    )
}
