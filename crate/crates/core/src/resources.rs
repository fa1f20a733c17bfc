//! Descriptional complexity of regular languages: number of states of the
//! minimal complete automaton, and the number of non-terminals or rules of
//! a right-linear grammar.
//!
//! State complexity is exact. Grammar complexity is found by exhaustive
//! search over small grammars; when the search cannot settle the value the
//! answer is an interval.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::regular::{Alphabet, Dfa, RightLinearGrammar, Rule, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MeasureKind {
    #[serde(rename = "states_Z")]
    States,
    #[serde(rename = "nonterminals_V")]
    Nonterminals,
    #[serde(rename = "rules_P")]
    Rules,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasureValue {
    Exact(usize),
    Interval { lower: usize, upper: usize },
}

impl MeasureValue {
    pub fn lower(&self) -> usize {
        match *self {
            MeasureValue::Exact(v) => v,
            MeasureValue::Interval { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> usize {
        match *self {
            MeasureValue::Exact(v) => v,
            MeasureValue::Interval { upper, .. } => upper,
        }
    }

    pub fn exact(&self) -> Option<usize> {
        match *self {
            MeasureValue::Exact(v) => Some(v),
            MeasureValue::Interval { .. } => None,
        }
    }

    /// `Some(true)` if the value is certainly at most `n`, `Some(false)` if
    /// certainly above, `None` if the interval straddles `n`.
    pub fn at_most(&self, n: usize) -> Option<bool> {
        if self.upper() <= n {
            Some(true)
        } else if self.lower() > n {
            Some(false)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Automaton(Dfa),
    Grammar(RightLinearGrammar),
}

impl Certificate {
    pub fn to_dfa(&self) -> Dfa {
        match self {
            Certificate::Automaton(d) => d.clone(),
            Certificate::Grammar(g) => g.to_dfa(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Certificate::Automaton(d) => d.to_table(),
            Certificate::Grammar(g) => g.to_text(),
        }
    }
}

/// A measured value with the automaton or grammar witnessing its upper
/// bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResourceMeasure {
    pub kind: MeasureKind,
    pub value: MeasureValue,
    pub certificate: Certificate,
}

/// Serialisable form of a [`ResourceMeasure`]; the certificate is kept as
/// text so that it can be parsed and re-checked independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureRecord {
    pub kind: MeasureKind,
    pub value: MeasureValue,
    pub certificate_format: String,
    pub certificate: String,
}

impl ResourceMeasure {
    pub fn to_record(&self) -> MeasureRecord {
        let format = match self.certificate {
            Certificate::Automaton(_) => "dfa",
            Certificate::Grammar(_) => "right-linear",
        };
        MeasureRecord {
            kind: self.kind,
            value: self.value,
            certificate_format: format.into(),
            certificate: self.certificate.to_text(),
        }
    }
}

impl MeasureRecord {
    /// Parses the certificate back and tests it against `language`.
    pub fn recheck(&self, language: &Dfa) -> Result<bool> {
        let dfa = match self.certificate_format.as_str() {
            "dfa" => Dfa::parse_table(&self.certificate)?,
            "right-linear" => {
                RightLinearGrammar::parse(&self.certificate, language.alphabet())?.to_dfa()
            }
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unknown certificate format `{other}`"
                )))
            }
        };
        dfa.equivalent(language)
    }
}

/// States of the minimal complete automaton, the sink included.
pub fn min_states(d: &Dfa) -> usize {
    d.minimize().state_count()
}

pub fn state_measure(d: &Dfa) -> ResourceMeasure {
    let m = d.minimize();
    ResourceMeasure {
        kind: MeasureKind::States,
        value: MeasureValue::Exact(m.state_count()),
        certificate: Certificate::Automaton(m),
    }
}

/// Non-terminals and rules of the grammar itself.
pub fn count_resources(g: &RightLinearGrammar) -> (usize, usize) {
    (g.nonterminal_count(), g.rule_count())
}

/// Limits for [`bounded_min_grammar`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchCaps {
    pub max_nonterminals: usize,
    pub max_rules: usize,
    pub max_rhs_len: usize,
    pub check_len: usize,
    /// Search nodes visited before giving up with a resource error.
    pub node_budget: usize,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps {
            max_nonterminals: 2,
            max_rules: 4,
            max_rhs_len: 3,
            check_len: 8,
            node_budget: 2_000_000,
        }
    }
}

impl SearchCaps {
    /// Parses `nt=2,rules=4,rhs=3,len=8,budget=100000`; omitted keys keep
    /// their defaults.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut caps = SearchCaps::default();
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidArgument(format!("bad cap `{part}`")))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad cap value in `{part}`")))?;
            match k.trim() {
                "nt" | "nonterminals" => caps.max_nonterminals = v,
                "rules" => caps.max_rules = v,
                "rhs" => caps.max_rhs_len = v,
                "len" | "check_len" => caps.check_len = v,
                "budget" => caps.node_budget = v,
                other => return Err(Error::InvalidArgument(format!("unknown cap `{other}`"))),
            }
        }
        if caps.max_nonterminals == 0 {
            return Err(Error::InvalidArgument("nt cap must be at least 1".into()));
        }
        Ok(caps)
    }
}

/// Largest number of candidate rules the search accepts.
const MAX_CANDIDATES: usize = 4096;

/// Smallest number of non-terminals or rules of a right-linear grammar for
/// the language of `d`, by exhaustive search within `caps`.
///
/// Grammars are enumerated by increasing measure. A candidate is accepted
/// when its language is equal to that of `d` (full equivalence, and
/// agreement on all words up to `caps.check_len`). The result is exact
/// when the first accepted value meets a general lower bound; otherwise
/// the interval runs from that lower bound to the best grammar known,
/// which is the state grammar of the minimal automaton if the search found
/// nothing.
pub fn bounded_min_grammar(
    d: &Dfa,
    kind: MeasureKind,
    caps: &SearchCaps,
) -> Result<ResourceMeasure> {
    if kind == MeasureKind::States {
        return Ok(state_measure(d));
    }
    let target = d.minimize();
    let alphabet = target.alphabet().clone();
    let fallback = RightLinearGrammar::from_dfa(&target);
    let lower = lower_bound(&target, kind);
    let measure_of = |g: &RightLinearGrammar| match kind {
        MeasureKind::Nonterminals => g.nonterminal_count(),
        _ => g.rule_count(),
    };

    if target.is_empty_language() {
        let g = RightLinearGrammar::single(alphabet, Vec::new());
        return Ok(ResourceMeasure {
            kind,
            value: MeasureValue::Exact(measure_of(&g)),
            certificate: Certificate::Grammar(g),
        });
    }

    let mut search = Search::new(&target, caps);
    let found = match kind {
        MeasureKind::Nonterminals => {
            let mut hit = None;
            for nts in 1..=caps.max_nonterminals {
                if let Some(g) = search.run(nts, 1, caps.max_rules)? {
                    hit = Some(g);
                    break;
                }
            }
            hit
        }
        _ => {
            let mut hit = None;
            for r in lower..=caps.max_rules {
                if let Some(g) = search.run(caps.max_nonterminals, r, r)? {
                    hit = Some(g);
                    break;
                }
            }
            hit
        }
    };

    let best = match found {
        Some(g) if measure_of(&g) <= measure_of(&fallback) => g,
        _ => fallback,
    };
    let upper = measure_of(&best);
    let value = if upper <= lower {
        MeasureValue::Exact(upper)
    } else {
        MeasureValue::Interval { lower, upper }
    };
    Ok(ResourceMeasure {
        kind,
        value,
        certificate: Certificate::Grammar(best),
    })
}

/// Bounds that hold for every grammar, independent of any search cap.
fn lower_bound(target: &Dfa, kind: MeasureKind) -> usize {
    match kind {
        MeasureKind::Nonterminals | MeasureKind::States => 1,
        MeasureKind::Rules => {
            if target.is_empty_language() {
                0
            } else {
                // one rule derives at most one word
                let mut words = target.enumerate(target.state_count() * 2 + 1).into_iter();
                let first = words.next();
                let second = words.next();
                if first.is_some() && second.is_none() && is_finite(target) {
                    1
                } else {
                    2
                }
            }
        }
    }
}

fn is_finite(d: &Dfa) -> bool {
    crate::subregular::is_finite_language(d)
}

struct Search<'a> {
    target: &'a Dfa,
    caps: &'a SearchCaps,
    words: Vec<Word>,
    sample: Vec<Word>,
    visited: usize,
}

impl<'a> Search<'a> {
    fn new(target: &'a Dfa, caps: &'a SearchCaps) -> Self {
        let mut words = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..caps.max_rhs_len {
            let mut next = Vec::new();
            for w in &layer {
                for l in target.alphabet().letters() {
                    let mut v = w.0.clone();
                    v.push(l);
                    next.push(Word(v));
                }
            }
            words.extend(next.iter().cloned());
            layer = next;
        }
        let mut sample: Vec<Word> = target.enumerate(caps.check_len).into_iter().collect();
        sample.sort_by(|a, b| crate::regular::shortlex(a, b));
        sample.truncate(24);
        Search {
            target,
            caps,
            words,
            sample,
            visited: 0,
        }
    }

    fn candidates(&self, nts: usize) -> Vec<Rule> {
        let t = self.target;
        let live = t.live();
        let n = t.state_count();
        let mut out = Vec::new();
        for lhs in 0..nts {
            for w in &self.words {
                // A word read from a reachable state must stay live.
                let sources: Vec<usize> = if lhs == 0 {
                    vec![t.initial()]
                } else {
                    (0..n).collect()
                };
                let ends: Vec<usize> = sources.iter().map(|&q| t.run_from(q, w)).collect();
                if !ends.iter().any(|&e| live[e]) {
                    continue;
                }
                let terminal_ok = if lhs == 0 {
                    t.is_accepting(ends[0])
                } else {
                    ends.iter().any(|&e| t.is_accepting(e))
                };
                if terminal_ok {
                    out.push(Rule {
                        lhs,
                        word: w.clone(),
                        next: None,
                    });
                }
                for next in 0..nts {
                    if w.is_empty() && next == lhs {
                        continue;
                    }
                    out.push(Rule {
                        lhs,
                        word: w.clone(),
                        next: Some(next),
                    });
                }
            }
        }
        out
    }

    /// Depth-first search for a grammar with at most `nts` non-terminals and
    /// between `min_rules` and `max_rules` rules whose language equals the
    /// target.
    fn run(
        &mut self,
        nts: usize,
        min_rules: usize,
        max_rules: usize,
    ) -> Result<Option<RightLinearGrammar>> {
        let cands = self.candidates(nts);
        if cands.len() > MAX_CANDIDATES {
            return Err(Error::ResourceLimit {
                what: "candidate rules in grammar search",
                limit: MAX_CANDIDATES,
            });
        }
        let mut chosen: Vec<usize> = Vec::new();
        self.dfs(&cands, nts, 0, &mut chosen, min_rules, max_rules)
    }

    fn dfs(
        &mut self,
        cands: &[Rule],
        nts: usize,
        from: usize,
        chosen: &mut Vec<usize>,
        min_rules: usize,
        max_rules: usize,
    ) -> Result<Option<RightLinearGrammar>> {
        self.visited += 1;
        if self.visited > self.caps.node_budget {
            return Err(Error::ResourceLimit {
                what: "grammar search nodes",
                limit: self.caps.node_budget,
            });
        }
        let rules: Vec<&Rule> = chosen.iter().map(|&i| &cands[i]).collect();
        if !self.included(&rules, nts) {
            return Ok(None);
        }
        if chosen.len() >= min_rules {
            if let Some(g) = self.matches(&rules, nts)? {
                return Ok(Some(g));
            }
        }
        if chosen.len() == max_rules {
            return Ok(None);
        }
        for i in from..cands.len() {
            chosen.push(i);
            let hit = self.dfs(cands, nts, i + 1, chosen, min_rules, max_rules)?;
            chosen.pop();
            if hit.is_some() {
                return Ok(hit);
            }
        }
        Ok(None)
    }

    /// Exact test of `L(rules) ⊆ L(target)` on the product of the grammar
    /// with the automaton. Adding rules only enlarges the language, so a
    /// failure prunes every extension.
    fn included(&self, rules: &[&Rule], nts: usize) -> bool {
        let t = self.target;
        let n = t.state_count();
        let mut seen = vec![false; n * nts];
        let start = t.initial() * nts;
        seen[start] = true;
        let mut stack = vec![(t.initial(), 0usize)];
        while let Some((q, a)) = stack.pop() {
            for r in rules.iter().filter(|r| r.lhs == a) {
                let e = t.run_from(q, &r.word);
                match r.next {
                    None => {
                        if !t.is_accepting(e) {
                            return false;
                        }
                    }
                    Some(b) => {
                        if !seen[e * nts + b] {
                            seen[e * nts + b] = true;
                            stack.push((e, b));
                        }
                    }
                }
            }
        }
        true
    }

    fn matches(&self, rules: &[&Rule], nts: usize) -> Result<Option<RightLinearGrammar>> {
        if rules.iter().all(|r| r.next.is_some()) {
            return Ok(None);
        }
        let names: Vec<String> = (0..nts)
            .map(|i| {
                if i == 0 {
                    "S".to_string()
                } else {
                    format!("A{i}")
                }
            })
            .collect();
        let g = RightLinearGrammar::new(
            names,
            self.target.alphabet().clone(),
            rules.iter().map(|r| (*r).clone()).collect(),
            0,
        )?;
        let nfa = g.to_nfa();
        if !self.sample.iter().all(|w| nfa.accepts(w)) {
            return Ok(None);
        }
        let dfa = Dfa::from_nfa(&nfa);
        if !dfa.equivalent(self.target)? {
            return Ok(None);
        }
        if dfa.enumerate(self.caps.check_len) != self.target.enumerate(self.caps.check_len) {
            return Err(Error::Inconsistent(
                "equivalent automata disagree on bounded words".into(),
            ));
        }
        Ok(Some(trim_nonterminals(g)))
    }
}

/// Drops non-terminals that no rule mentions (other than the start).
fn trim_nonterminals(g: RightLinearGrammar) -> RightLinearGrammar {
    let mut used: Vec<usize> = vec![g.start()];
    for r in g.rules() {
        used.push(r.lhs);
        if let Some(n) = r.next {
            used.push(n);
        }
    }
    used.sort_unstable();
    used.dedup();
    if used.len() == g.nonterminal_count() {
        return g;
    }
    let rename = |i: usize| used.iter().position(|&u| u == i).unwrap();
    let names = used.iter().map(|&i| g.nonterminals()[i].clone()).collect();
    let rules = g
        .rules()
        .iter()
        .map(|r| Rule {
            lhs: rename(r.lhs),
            word: r.word.clone(),
            next: r.next.map(rename),
        })
        .collect();
    RightLinearGrammar::new(names, g.terminals().clone(), rules, rename(g.start()))
        .expect("renamed grammar is well formed")
}

/// Single non-terminal grammar `{S -> w : w ∈ words}` for a finite set.
pub fn finite_grammar(alphabet: &Alphabet, words: &[Word]) -> RightLinearGrammar {
    let mut ws: Vec<Word> = words.to_vec();
    ws.sort();
    ws.dedup();
    RightLinearGrammar::single(
        alphabet.clone(),
        ws.into_iter().map(|w| (w, false)).collect(),
    )
}

/// Single non-terminal grammar `{S -> x S : x ∈ U} ∪ {S -> w : w ∈ words}`
/// for `U* · words`.
pub fn suffix_grammar(alphabet: &Alphabet, words: &[Word]) -> RightLinearGrammar {
    let mut rules: Vec<(Word, bool)> = alphabet.letters().map(|l| (Word(vec![l]), true)).collect();
    let mut ws: Vec<Word> = words.to_vec();
    ws.sort();
    ws.dedup();
    rules.extend(ws.into_iter().map(|w| (w, false)));
    RightLinearGrammar::single(alphabet.clone(), rules)
}

/// Distinct words generated, used to bound one-rule grammars.
pub fn word_set(d: &Dfa, max_len: usize) -> HashSet<Word> {
    d.enumerate(max_len).into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regular::compile_str;

    fn lang(re: &str, letters: &str) -> Dfa {
        compile_str(re, &Alphabet::from_chars(letters).unwrap()).unwrap()
    }

    #[test]
    fn min_states_examples() {
        assert_eq!(min_states(&lang("(a|b)*", "ab")), 1);
        assert_eq!(min_states(&lang("∅", "ab")), 1);
        assert_eq!(min_states(&lang("(aa)*", "a")), 2);
        assert_eq!(min_states(&lang("(b*c)(b*c)*", "bc")), 2);
    }

    #[test]
    fn counts_of_explicit_grammars() {
        let bc = Alphabet::from_chars("bc").unwrap();
        let g = RightLinearGrammar::parse("S -> b S\nS -> c", &bc).unwrap();
        assert_eq!(count_resources(&g), (1, 2));
        let g = RightLinearGrammar::parse("S -> @", &bc).unwrap();
        assert_eq!(count_resources(&g), (1, 1));
        let g = suffix_grammar(&bc, &[Word(vec![0])]);
        assert_eq!(count_resources(&g), (1, 3));
    }

    #[test]
    fn finite_two_words() {
        let d = lang("ab|b", "abc");
        let caps = SearchCaps::default();
        let v = bounded_min_grammar(&d, MeasureKind::Nonterminals, &caps).unwrap();
        assert_eq!(v.value, MeasureValue::Exact(1));
        let p = bounded_min_grammar(&d, MeasureKind::Rules, &caps).unwrap();
        assert_eq!(p.value, MeasureValue::Exact(2));
        assert!(p.certificate.to_dfa().equivalent(&d).unwrap());
    }

    #[test]
    fn empty_word_one_rule() {
        let d = lang("()", "a");
        let p = bounded_min_grammar(&d, MeasureKind::Rules, &SearchCaps::default()).unwrap();
        assert_eq!(p.value, MeasureValue::Exact(1));
    }

    #[test]
    fn even_a_single_nonterminal() {
        let d = lang("(aa)*", "a");
        let v = bounded_min_grammar(&d, MeasureKind::Nonterminals, &SearchCaps::default()).unwrap();
        assert_eq!(v.value, MeasureValue::Exact(1));
        let Certificate::Grammar(g) = &v.certificate else {
            panic!()
        };
        assert_eq!(g.nonterminal_count(), 1);
        let p = bounded_min_grammar(&d, MeasureKind::Rules, &SearchCaps::default()).unwrap();
        assert_eq!(p.value, MeasureValue::Exact(2));
    }

    #[test]
    fn empty_language_needs_no_rules() {
        let d = lang("∅", "ab");
        let p = bounded_min_grammar(&d, MeasureKind::Rules, &SearchCaps::default()).unwrap();
        assert_eq!(p.value, MeasureValue::Exact(0));
    }

    #[test]
    fn long_word_beyond_rhs_cap_is_an_interval() {
        let d = lang("aaaa", "a");
        let p = bounded_min_grammar(&d, MeasureKind::Rules, &SearchCaps::default()).unwrap();
        assert_eq!(p.value, MeasureValue::Interval { lower: 1, upper: 2 });
    }

    #[test]
    fn budget_exhaustion_is_a_resource_error() {
        let d = lang("(a|b)*abb", "ab");
        let caps = SearchCaps {
            node_budget: 10,
            ..SearchCaps::default()
        };
        let e = bounded_min_grammar(&d, MeasureKind::Rules, &caps).unwrap_err();
        assert!(e.is_resource_limit());
    }

    #[test]
    fn records_recheck() {
        let d = lang("b*c", "bc");
        for kind in [
            MeasureKind::States,
            MeasureKind::Nonterminals,
            MeasureKind::Rules,
        ] {
            let m = bounded_min_grammar(&d, kind, &SearchCaps::default()).unwrap();
            let rec = m.to_record();
            let json = serde_json::to_string(&rec).unwrap();
            let back: MeasureRecord = serde_json::from_str(&json).unwrap();
            assert_eq!(back, rec);
            assert!(back.recheck(&d).unwrap());
        }
    }

    #[test]
    fn caps_parse() {
        let c = SearchCaps::parse("nt=1, rules=3,len=6").unwrap();
        assert_eq!(
            (c.max_nonterminals, c.max_rules, c.max_rhs_len, c.check_len),
            (1, 3, 3, 6)
        );
        assert!(SearchCaps::parse("foo=1").is_err());
        assert!(SearchCaps::parse("nt=0").is_err());
    }
}
