//! Regular languages: alphabets and words, regular expressions, right-linear
//! grammars, NFAs, complete DFAs and transition monoids.

mod alphabet;
mod dfa;
mod grammar;
mod monoid;
mod nfa;
mod regex;

pub use alphabet::{all_words, shortlex, Alphabet, Letter, Word, EMPTY_WORD};
pub use dfa::{BoolOp, Dfa};
pub use grammar::{RightLinearGrammar, Rule};
pub use monoid::{compose, Transformation, TransitionMonoid, DEFAULT_MONOID_CAP};
pub use nfa::Nfa;
pub use regex::RegexAst;

pub(crate) use dfa::parse_table_lines;
pub(crate) use grammar::parse_rule_lines;

use crate::error::Result;

pub fn regex_to_nfa(r: &RegexAst, alphabet: &Alphabet) -> Result<Nfa> {
    r.to_nfa(alphabet)
}

pub fn grammar_to_nfa(g: &RightLinearGrammar) -> Nfa {
    g.to_nfa()
}

pub fn nfa_to_dfa(n: &Nfa) -> Dfa {
    Dfa::from_nfa(n)
}

/// Minimal complete DFA of a regular expression.
pub fn compile(r: &RegexAst, alphabet: &Alphabet) -> Result<Dfa> {
    Ok(Dfa::from_nfa(&r.to_nfa(alphabet)?).minimize())
}

/// Convenience: parse and compile a regular expression.
pub fn compile_str(re: &str, alphabet: &Alphabet) -> Result<Dfa> {
    compile(&RegexAst::parse(re, alphabet)?, alphabet)
}
