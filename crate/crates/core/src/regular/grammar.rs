use std::fmt::Write as _;

use crate::error::{Error, ParseError, Result};
use crate::regular::alphabet::{Alphabet, Word, EMPTY_WORD};
use crate::regular::dfa::Dfa;
use crate::regular::nfa::{EpsilonNfa, Nfa};

/// A production `lhs -> word next`, where `next` is an optional trailing
/// non-terminal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rule {
    pub lhs: usize,
    pub word: Word,
    pub next: Option<usize>,
}

/// Right-linear grammar with arbitrary terminal words on right-hand sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightLinearGrammar {
    nonterminals: Vec<String>,
    terminals: Alphabet,
    rules: Vec<Rule>,
    start: usize,
}

impl RightLinearGrammar {
    pub fn new(
        nonterminals: Vec<String>,
        terminals: Alphabet,
        rules: Vec<Rule>,
        start: usize,
    ) -> Result<Self> {
        if start >= nonterminals.len() {
            return Err(Error::MalformedGrammar(
                "start symbol is not a non-terminal".into(),
            ));
        }
        for (i, n) in nonterminals.iter().enumerate() {
            if n.is_empty() || n.chars().any(char::is_whitespace) || n == EMPTY_WORD {
                return Err(Error::MalformedGrammar(format!(
                    "bad non-terminal name `{n}`"
                )));
            }
            if nonterminals[..i].contains(n) {
                return Err(Error::MalformedGrammar(format!(
                    "duplicate non-terminal `{n}`"
                )));
            }
        }
        for r in &rules {
            if r.lhs >= nonterminals.len() || r.next.is_some_and(|n| n >= nonterminals.len()) {
                return Err(Error::MalformedGrammar(
                    "rule refers to an unknown non-terminal".into(),
                ));
            }
            if let Some(&l) = r.word.iter().find(|&&l| !terminals.contains_letter(l)) {
                return Err(Error::ForeignLetter(format!("#{l}")));
            }
        }
        Ok(RightLinearGrammar {
            nonterminals,
            terminals,
            rules,
            start,
        })
    }

    /// Grammar over a single non-terminal `S`.
    pub fn single(terminals: Alphabet, rules: Vec<(Word, bool)>) -> Self {
        let rules = rules
            .into_iter()
            .map(|(word, recurse)| Rule {
                lhs: 0,
                word,
                next: recurse.then_some(0),
            })
            .collect();
        RightLinearGrammar::new(vec!["S".into()], terminals, rules, 0)
            .expect("single non-terminal grammar is well formed")
    }

    pub fn nonterminals(&self) -> &[String] {
        &self.nonterminals
    }

    pub fn terminals(&self) -> &Alphabet {
        &self.terminals
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn nonterminal_count(&self) -> usize {
        self.nonterminals.len()
    }

    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    /// One state per non-terminal plus intermediate states spelling out the
    /// terminal words; the accepting state is shared by terminating rules.
    pub fn to_nfa(&self) -> Nfa {
        let mut b = EpsilonNfa::new(self.terminals.len());
        let nts: Vec<usize> = (0..self.nonterminals.len())
            .map(|_| b.add_state())
            .collect();
        let accept = b.add_state();
        b.set_accepting(accept);
        b.set_initial(nts[self.start]);
        for r in &self.rules {
            let target = r.next.map_or(accept, |n| nts[n]);
            let mut cur = nts[r.lhs];
            if r.word.is_empty() {
                b.add_empty(cur, target);
                continue;
            }
            for (i, &l) in r.word.iter().enumerate() {
                let to = if i + 1 == r.word.len() {
                    target
                } else {
                    b.add_state()
                };
                b.add_edge(cur, l, to);
                cur = to;
            }
        }
        b.build(self.terminals.clone())
    }

    pub fn to_dfa(&self) -> Dfa {
        Dfa::from_nfa(&self.to_nfa())
    }

    /// Equivalent grammar in regular form: every rule is `A -> x B` or
    /// `A -> x` for a single letter `x`, plus possibly `S -> λ`. Obtained
    /// from the minimal automaton with the dead state dropped.
    pub fn normalize(&self) -> RightLinearGrammar {
        Self::from_dfa(&self.to_dfa().minimize())
    }

    /// Regular-form grammar with one non-terminal per live state.
    pub fn from_dfa(d: &Dfa) -> RightLinearGrammar {
        let live = d.live();
        let reach = d.reachable();
        let useful: Vec<usize> = (0..d.state_count())
            .filter(|&q| live[q] && reach[q])
            .collect();
        let mut names = vec![String::from("S")];
        let mut ids = vec![usize::MAX; d.state_count()];
        ids[d.initial()] = 0;
        for &q in &useful {
            if q != d.initial() {
                ids[q] = names.len();
                names.push(format!("Q{q}"));
            }
        }
        let mut rules = Vec::new();
        if d.is_accepting(d.initial()) {
            rules.push(Rule {
                lhs: 0,
                word: Word::empty(),
                next: None,
            });
        }
        for &q in &useful {
            for l in d.alphabet().letters() {
                let t = d.next(q, l);
                if !live[t] {
                    continue;
                }
                rules.push(Rule {
                    lhs: ids[q],
                    word: Word(vec![l]),
                    next: Some(ids[t]),
                });
                if d.is_accepting(t) {
                    rules.push(Rule {
                        lhs: ids[q],
                        word: Word(vec![l]),
                        next: None,
                    });
                }
            }
        }
        rules.sort();
        rules.dedup();
        RightLinearGrammar::new(names, d.alphabet().clone(), rules, 0)
            .expect("grammar built from automaton is well formed")
    }

    /// True if every rule has the regular shape.
    pub fn is_regular_form(&self) -> bool {
        self.rules.iter().all(|r| {
            r.word.len() == 1 || (r.word.is_empty() && r.next.is_none() && r.lhs == self.start)
        })
    }

    /// One rule per line: `A -> w B`, `A -> w`, `A -> @` (empty word) and
    /// `A -> @ B` for unit rules. Non-terminals and the start symbol are
    /// declared up front so that parsing the text restores the grammar.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "nonterminals {}", self.nonterminals.join(" "));
        let _ = writeln!(out, "start {}", self.nonterminals[self.start]);
        for r in &self.rules {
            let _ = write!(
                out,
                "{} -> {}",
                self.nonterminals[r.lhs],
                self.terminals.format_word(&r.word)
            );
            if let Some(n) = r.next {
                let _ = write!(out, " {}", self.nonterminals[n]);
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str, terminals: &Alphabet) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
        parse_rule_lines(&lines, terminals).map_err(Error::from)
    }
}

pub(crate) fn parse_rule_lines(
    lines: &[(usize, &str)],
    terminals: &Alphabet,
) -> std::result::Result<RightLinearGrammar, ParseError> {
    let mut names: Vec<String> = Vec::new();
    let intern = |n: &str, names: &mut Vec<String>| match names.iter().position(|x| x == n) {
        Some(i) => i,
        None => {
            names.push(n.to_string());
            names.len() - 1
        }
    };
    let mut start: Option<usize> = None;
    let mut raw_rules: Vec<(usize, &str, usize, String, Option<String>)> = Vec::new();
    let mut last = 1;
    for &(no, raw) in lines {
        last = no;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let col = |needle: &str| raw.find(needle).map_or(1, |i| raw[..i].chars().count() + 1);
        let mut words = line.split_whitespace();
        let first = words.next().unwrap();
        if first == "nonterminals" {
            for n in words {
                intern(n, &mut names);
            }
            continue;
        }
        if first == "start" {
            let rest: Vec<&str> = words.collect();
            if rest.len() != 1 {
                return Err(ParseError::new(
                    no,
                    col("start"),
                    "`start` takes one non-terminal",
                ));
            }
            if start.is_some() {
                return Err(ParseError::new(
                    no,
                    col("start"),
                    "start symbol declared twice",
                ));
            }
            start = Some(intern(rest[0], &mut names));
            continue;
        }
        let Some(arrow) = line.find("->") else {
            return Err(ParseError::new(
                no,
                1,
                "expected `A -> w B`, `A -> w` or `A -> @`",
            ));
        };
        let lhs = line[..arrow].trim();
        if lhs.is_empty() || lhs.contains(char::is_whitespace) {
            return Err(ParseError::new(
                no,
                1,
                "left-hand side must be a single non-terminal",
            ));
        }
        let rhs: Vec<&str> = line[arrow + 2..].split_whitespace().collect();
        let (word, next) = match rhs.as_slice() {
            [w] => (w.to_string(), None),
            [w, n] => (w.to_string(), Some(n.to_string())),
            [] => {
                return Err(ParseError::new(
                    no,
                    col("->") + 2,
                    "empty right-hand side (use `@`)",
                ))
            }
            _ => {
                return Err(ParseError::new(
                    no,
                    col(rhs[2]),
                    "right-hand side must be a terminal word and at most one non-terminal",
                ))
            }
        };
        let lhs_id = intern(lhs, &mut names);
        raw_rules.push((no, raw, lhs_id, word, next));
    }
    if raw_rules.is_empty() && start.is_none() {
        return Err(ParseError::new(last, 1, "grammar has no rules"));
    }
    let mut rules = Vec::new();
    for (no, raw, lhs, word, next) in raw_rules {
        let wcol = raw.find("->").map_or(1, |i| {
            let after = &raw[i + 2..];
            let skip = after.len() - after.trim_start().len();
            raw[..i + 2 + skip].chars().count() + 1
        });
        let w = terminals.parse_word_at(&word, no, wcol)?;
        let next = next.map(|n| intern(&n, &mut names));
        rules.push(Rule { lhs, word: w, next });
    }
    let start = start.unwrap_or(0);
    RightLinearGrammar::new(names, terminals.clone(), rules, start)
        .map_err(|e| ParseError::new(last, 1, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regular::regex::RegexAst;

    fn bc() -> Alphabet {
        Alphabet::from_chars("bc").unwrap()
    }

    #[test]
    fn b_star_c_grammar() {
        let g = RightLinearGrammar::parse("S -> b S\nS -> c", &bc()).unwrap();
        assert_eq!(g.nonterminal_count(), 1);
        assert_eq!(g.rule_count(), 2);
        let d = g.to_dfa();
        let r = RegexAst::parse("b*c", &bc())
            .unwrap()
            .to_nfa(&bc())
            .unwrap();
        assert!(d.equivalent(&Dfa::from_nfa(&r)).unwrap());
    }

    #[test]
    fn empty_word_rule() {
        let g = RightLinearGrammar::parse("S -> @", &bc()).unwrap();
        let words: Vec<Word> = g.to_dfa().enumerate(3).into_iter().collect();
        assert_eq!(words, vec![Word::empty()]);
    }

    #[test]
    fn unit_rules_and_long_words() {
        let g = RightLinearGrammar::parse("S -> @ A\nA -> bb A\nA -> c", &bc()).unwrap();
        let d = g.to_dfa();
        assert!(d.accepts(&[0, 0, 1]).unwrap());
        assert!(!d.accepts(&[0, 1]).unwrap());
    }

    #[test]
    fn text_round_trip() {
        let g = RightLinearGrammar::parse("start A\nA -> bc B\nB -> @\nB -> c A", &bc()).unwrap();
        let again = RightLinearGrammar::parse(&g.to_text(), &bc()).unwrap();
        assert_eq!(g, again);
        assert_eq!(g.start(), 0);
    }

    #[test]
    fn parse_diagnostics() {
        let e = RightLinearGrammar::parse("S -> b S\nS => c", &bc()).unwrap_err();
        assert!(matches!(e, Error::Parse(ParseError { line: 2, .. })), "{e}");
        let e = RightLinearGrammar::parse("S -> bx S", &bc()).unwrap_err();
        assert!(
            matches!(
                e,
                Error::Parse(ParseError {
                    line: 1,
                    column: 7,
                    ..
                })
            ),
            "{e}"
        );
    }

    #[test]
    fn normal_form_is_regular_and_equivalent() {
        let g = RightLinearGrammar::parse("S -> bbc S\nS -> @\nS -> c", &bc()).unwrap();
        let n = g.normalize();
        assert!(n.is_regular_form(), "{}", n.to_text());
        assert!(n.to_dfa().equivalent(&g.to_dfa()).unwrap());
    }
}
