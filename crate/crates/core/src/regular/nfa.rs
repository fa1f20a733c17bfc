use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::regular::alphabet::{Alphabet, Letter};

/// A nondeterministic automaton without empty transitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    /// `transitions[state][letter]` is the sorted set of successors.
    transitions: Vec<Vec<Vec<usize>>>,
    initial: BTreeSet<usize>,
    accepting: Vec<bool>,
}

impl Nfa {
    pub fn new(
        alphabet: Alphabet,
        transitions: Vec<Vec<Vec<usize>>>,
        initial: BTreeSet<usize>,
        accepting: Vec<bool>,
    ) -> Result<Self> {
        let n = transitions.len();
        if accepting.len() != n {
            return Err(Error::MalformedAutomaton(
                "accepting flags do not match the state count".into(),
            ));
        }
        if initial.iter().any(|&s| s >= n) {
            return Err(Error::MalformedAutomaton(
                "initial state out of range".into(),
            ));
        }
        for row in &transitions {
            if row.len() != alphabet.len() {
                return Err(Error::MalformedAutomaton(
                    "transition row does not cover the alphabet".into(),
                ));
            }
            if row.iter().flatten().any(|&t| t >= n) {
                return Err(Error::MalformedAutomaton(
                    "transition target out of range".into(),
                ));
            }
        }
        let transitions = transitions
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|mut targets| {
                        targets.sort_unstable();
                        targets.dedup();
                        targets
                    })
                    .collect()
            })
            .collect();
        Ok(Nfa {
            alphabet,
            transitions,
            initial,
            accepting,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn initial(&self) -> &BTreeSet<usize> {
        &self.initial
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn successors(&self, state: usize, letter: Letter) -> &[usize] {
        &self.transitions[state][letter as usize]
    }

    pub fn accepts(&self, word: &[Letter]) -> bool {
        let mut current: BTreeSet<usize> = self.initial.clone();
        for &l in word {
            current = current
                .iter()
                .flat_map(|&s| self.successors(s, l).iter().copied())
                .collect();
            if current.is_empty() {
                return false;
            }
        }
        current.iter().any(|&s| self.accepting[s])
    }
}

/// Builder for automata with empty transitions. Empty transitions are
/// removed by [`EpsilonNfa::build`].
#[derive(Debug, Clone)]
pub(crate) struct EpsilonNfa {
    letters: usize,
    edges: Vec<Vec<(Letter, usize)>>,
    empty: Vec<Vec<usize>>,
    initial: BTreeSet<usize>,
    accepting: Vec<bool>,
}

impl EpsilonNfa {
    pub fn new(letters: usize) -> Self {
        EpsilonNfa {
            letters,
            edges: Vec::new(),
            empty: Vec::new(),
            initial: BTreeSet::new(),
            accepting: Vec::new(),
        }
    }

    pub fn add_state(&mut self) -> usize {
        self.edges.push(Vec::new());
        self.empty.push(Vec::new());
        self.accepting.push(false);
        self.edges.len() - 1
    }

    pub fn add_edge(&mut self, from: usize, letter: Letter, to: usize) {
        self.edges[from].push((letter, to));
    }

    pub fn add_empty(&mut self, from: usize, to: usize) {
        self.empty[from].push(to);
    }

    pub fn set_initial(&mut self, state: usize) {
        self.initial.insert(state);
    }

    pub fn set_accepting(&mut self, state: usize) {
        self.accepting[state] = true;
    }

    fn closure(&self, state: usize) -> Vec<usize> {
        let mut seen = vec![false; self.edges.len()];
        let mut stack = vec![state];
        seen[state] = true;
        let mut out = Vec::new();
        while let Some(s) = stack.pop() {
            out.push(s);
            for &t in &self.empty[s] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        out
    }

    pub fn build(self, alphabet: Alphabet) -> Nfa {
        debug_assert_eq!(alphabet.len(), self.letters);
        let n = self.edges.len();
        let mut transitions = vec![vec![Vec::new(); self.letters]; n];
        let mut accepting = vec![false; n];
        for s in 0..n {
            for p in self.closure(s) {
                accepting[s] |= self.accepting[p];
                for &(l, t) in &self.edges[p] {
                    transitions[s][l as usize].push(t);
                }
            }
        }
        Nfa::new(alphabet, transitions, self.initial, accepting)
            .expect("builder keeps states in range")
    }
}
