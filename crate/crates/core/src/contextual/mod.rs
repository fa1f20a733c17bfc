//! Internal contextual grammars with regular selection.
//!
//! A grammar `G = (V, S, A)` has an alphabet, selection pairs and axioms. A
//! pair `(S, C)` allows the step `x1 x2 x3 => x1 u x2 v x3` whenever `x2` is
//! in the selection language `S` and `(u, v)` is one of its contexts. Every
//! context is non-empty, so steps strictly lengthen words.

mod engine;
mod format;
mod transform;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::regular::{Alphabet, Dfa, Letter, RegexAst, RightLinearGrammar, Word};
use crate::subregular::{self, ClassifyOptions, EvidenceRecord, FamilyLabel, Verdict};

pub use engine::{
    derive_step, enumerate_ic, enumerate_ic_capped, member_ic, member_trace, DerivationStep,
    DEFAULT_WORD_CAP,
};
pub use transform::{definite_decompositions, split_definite_selection, split_finite_selection};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Context {
    pub left: Word,
    pub right: Word,
}

impl Context {
    pub fn new(left: impl Into<Word>, right: impl Into<Word>) -> Self {
        Context {
            left: left.into(),
            right: right.into(),
        }
    }

    /// `|uv|`, the growth of one step.
    pub fn len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Where a selection language came from. Expressions and grammars are
/// kept for the union-free check and as resource certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SelectionSource {
    Regex(RegexAst),
    Grammar(RightLinearGrammar),
    Table,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectionPair {
    alphabet: Alphabet,
    selection: Dfa,
    source: SelectionSource,
    contexts: Vec<Context>,
}

impl SelectionPair {
    /// A pair whose selection is given by an automaton over the declared
    /// alphabet `alphabet`.
    pub fn new(alphabet: Alphabet, selection: Dfa, contexts: Vec<Context>) -> Self {
        SelectionPair {
            alphabet,
            selection,
            source: SelectionSource::Table,
            contexts,
        }
    }

    pub fn from_regex(alphabet: Alphabet, regex: RegexAst, contexts: Vec<Context>) -> Result<Self> {
        let selection = crate::regular::compile(&regex, &alphabet)?;
        Ok(SelectionPair {
            alphabet,
            selection,
            source: SelectionSource::Regex(regex),
            contexts,
        })
    }

    pub fn from_grammar(grammar: RightLinearGrammar, contexts: Vec<Context>) -> Self {
        SelectionPair {
            alphabet: grammar.terminals().clone(),
            selection: grammar.to_dfa().minimize(),
            source: SelectionSource::Grammar(grammar),
            contexts,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn selection(&self) -> &Dfa {
        &self.selection
    }

    pub fn source(&self) -> &SelectionSource {
        &self.source
    }

    pub fn contexts(&self) -> &[Context] {
        &self.contexts
    }

    pub fn regex(&self) -> Option<&RegexAst> {
        match &self.source {
            SelectionSource::Regex(r) => Some(r),
            _ => None,
        }
    }

    pub fn grammar(&self) -> Option<&RightLinearGrammar> {
        match &self.source {
            SelectionSource::Grammar(g) => Some(g),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    /// Pair the problem belongs to, if any.
    pub pair: Option<usize>,
    pub message: String,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.pair {
            Some(i) => write!(f, "pair {}: {}", i + 1, self.message),
            None => f.write_str(&self.message),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContextualGrammar {
    alphabet: Alphabet,
    pairs: Vec<SelectionPair>,
    axioms: Vec<Word>,
}

impl ContextualGrammar {
    /// Builds the grammar as given; duplicate axioms are dropped. Use
    /// [`ContextualGrammar::validate`] to check the structural constraints.
    pub fn new(alphabet: Alphabet, pairs: Vec<SelectionPair>, axioms: Vec<Word>) -> Self {
        let mut seen = std::collections::HashSet::new();
        let axioms = axioms
            .into_iter()
            .filter(|w| seen.insert(w.clone()))
            .collect();
        ContextualGrammar {
            alphabet,
            pairs,
            axioms,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn pairs(&self) -> &[SelectionPair] {
        &self.pairs
    }

    pub fn axioms(&self) -> &[Word] {
        &self.axioms
    }

    /// One diagnostic per violated constraint; empty when the grammar is
    /// well formed.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let v = &self.alphabet;
        let mut out = Vec::new();
        let mut say = |pair: Option<usize>, message: String| out.push(Diagnostic { pair, message });
        for (i, w) in self.axioms.iter().enumerate() {
            if w.iter().any(|&l| !v.contains_letter(l)) {
                say(
                    None,
                    format!("axiom {} uses a letter outside the alphabet", i + 1),
                );
            }
        }
        for (i, p) in self.pairs.iter().enumerate() {
            let at = Some(i);
            if !p.alphabet.is_subset_of(v) {
                let extra: Vec<&str> = p
                    .alphabet
                    .symbols()
                    .iter()
                    .filter(|s| v.letter(s).is_none())
                    .map(String::as_str)
                    .collect();
                say(
                    at,
                    format!(
                        "declared alphabet has letters outside V: {}",
                        extra.join(" ")
                    ),
                );
            }
            if p.selection.alphabet() != &p.alphabet {
                let extra: Vec<&str> = p
                    .selection
                    .alphabet()
                    .symbols()
                    .iter()
                    .filter(|s| p.alphabet.letter(s).is_none())
                    .map(String::as_str)
                    .collect();
                if extra.is_empty() {
                    say(
                        at,
                        "selection automaton is not over the declared alphabet".into(),
                    );
                } else {
                    say(
                        at,
                        format!(
                            "selection uses letters outside its declared alphabet: {}",
                            extra.join(" ")
                        ),
                    );
                }
            }
            if p.contexts.is_empty() {
                say(at, "no contexts".into());
            }
            for (j, c) in p.contexts.iter().enumerate() {
                if c.is_empty() {
                    say(at, format!("empty context {}", j + 1));
                }
                if c.left
                    .iter()
                    .chain(c.right.iter())
                    .any(|&l| !v.contains_letter(l))
                {
                    say(
                        at,
                        format!("context {} uses a letter outside the alphabet", j + 1),
                    );
                }
            }
            let dup = (0..p.contexts.len()).any(|j| p.contexts[..j].contains(&p.contexts[j]));
            if dup {
                say(at, "duplicate context".into());
            }
        }
        out
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let diags = self.validate();
        if diags.is_empty() {
            Ok(())
        } else {
            let text: Vec<String> = diags.iter().map(ToString::to_string).collect();
            Err(Error::MalformedGrammar(text.join("; ")))
        }
    }

    /// Letters of `V` mapped into each pair's declared alphabet.
    pub(crate) fn projections(&self) -> Vec<Vec<Option<Letter>>> {
        self.pairs
            .iter()
            .map(|p| p.alphabet.projection_from(&self.alphabet))
            .collect()
    }

    pub fn to_text(&self) -> String {
        format::serialize(self)
    }

    pub fn parse(text: &str) -> Result<Self> {
        format::parse(text)
    }
}

/// Outcome of [`selection_in_family`]: the overall answer (`None` when some
/// pair is undecided) and one entry per pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub family: FamilyLabel,
    pub holds: Option<bool>,
    pub pairs: Vec<PairVerdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub pair: usize,
    pub verdict: Verdict,
    pub evidence: EvidenceRecord,
}

/// Whether every selection language lies in `family` relative to its
/// declared alphabet.
pub fn selection_in_family(g: &ContextualGrammar, family: FamilyLabel) -> Result<FamilyCheck> {
    selection_in_family_with(g, family, &ClassifyOptions::default())
}

pub fn selection_in_family_with(
    g: &ContextualGrammar,
    family: FamilyLabel,
    opts: &ClassifyOptions,
) -> Result<FamilyCheck> {
    g.ensure_valid()?;
    let mut pairs = Vec::new();
    for (i, p) in g.pairs.iter().enumerate() {
        let e = subregular::decide(
            &p.selection,
            &p.alphabet,
            p.regex(),
            p.grammar(),
            family,
            opts,
        )?;
        pairs.push(PairVerdict {
            pair: i,
            verdict: e.verdict,
            evidence: e.evidence,
        });
    }
    let holds = if pairs.iter().any(|p| p.verdict == Verdict::No) {
        Some(false)
    } else if pairs.iter().all(|p| p.verdict == Verdict::Yes) {
        Some(true)
    } else {
        None
    };
    Ok(FamilyCheck {
        family,
        holds,
        pairs,
    })
}
