//! Operator-precedence grammars, shunting-yard conversion and the textual
//! formula notation.

mod formula_text;
mod grammar;
mod yard;

pub use formula_text::{parse_formula_text, FormulaTextError};
pub use grammar::{validate_operator_grammar, GrammarReport, GrammarViolation, OperatorGrammar, Production};
pub use yard::{
    eval_postfix, postfix_text, postfix_to_infix, shunting_yard, tokenize_infix, Assoc, EvalError,
    ParseError, Precedence, PrecedenceTable, Token,
};
