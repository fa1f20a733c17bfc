use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::regular::alphabet::{Letter, Word};
use crate::regular::dfa::Dfa;

pub const DEFAULT_MONOID_CAP: usize = 10_000;

/// A total map on states: `t[q]` is the state reached from `q`.
pub type Transformation = Vec<usize>;

/// Transition monoid of a complete automaton. Element 0 is the identity
/// (the transformation of the empty word); elements are discovered in
/// shortlex order of their representative words.
#[derive(Debug, Clone)]
pub struct TransitionMonoid {
    elements: Vec<Transformation>,
    representatives: Vec<Word>,
    index: HashMap<Transformation, usize>,
    generators: Vec<usize>,
}

/// `first` then `second`.
pub fn compose(first: &[usize], second: &[usize]) -> Transformation {
    first.iter().map(|&q| second[q]).collect()
}

impl TransitionMonoid {
    pub fn of(d: &Dfa) -> Result<Self> {
        Self::with_cap(d, DEFAULT_MONOID_CAP)
    }

    pub fn with_cap(d: &Dfa, cap: usize) -> Result<Self> {
        let n = d.state_count();
        let letters: Vec<Transformation> = d
            .alphabet()
            .letters()
            .map(|l| (0..n).map(|q| d.next(q, l)).collect())
            .collect();
        let identity: Transformation = (0..n).collect();
        let mut m = TransitionMonoid {
            elements: vec![identity.clone()],
            representatives: vec![Word::empty()],
            index: HashMap::from([(identity, 0)]),
            generators: Vec::new(),
        };
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (l, g) in letters.iter().enumerate() {
                let t = compose(&m.elements[i], g);
                if m.index.contains_key(&t) {
                    continue;
                }
                if m.elements.len() >= cap {
                    return Err(Error::ResourceLimit {
                        what: "transition monoid size",
                        limit: cap,
                    });
                }
                let mut w = m.representatives[i].clone();
                w.0.push(l as Letter);
                m.index.insert(t.clone(), m.elements.len());
                m.elements.push(t);
                m.representatives.push(w);
                queue.push_back(m.elements.len() - 1);
            }
        }
        m.generators = letters.iter().map(|g| m.index[g]).collect();
        Ok(m)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &Transformation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Transformation] {
        &self.elements
    }

    pub fn representative(&self, i: usize) -> &Word {
        &self.representatives[i]
    }

    /// Element index of each letter's transformation.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, t: &[usize]) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Product `i` then `j`, as an element index.
    pub fn multiply(&self, i: usize, j: usize) -> usize {
        let t = compose(&self.elements[i], &self.elements[j]);
        self.index[&t]
    }

    /// Pre-period and period of the powers `t, t², t³, …` of element `i`:
    /// the least `k ≥ 1` and `p ≥ 1` with `t^(k+p) = t^k`.
    pub fn power_cycle(&self, i: usize) -> (usize, usize) {
        let mut seen: HashMap<usize, usize> = HashMap::new();
        let mut cur = i;
        let mut exp = 1;
        loop {
            if let Some(&first) = seen.get(&cur) {
                return (first, exp - first);
            }
            seen.insert(cur, exp);
            cur = self.multiply(cur, i);
            exp += 1;
        }
    }

    /// Every element has period one, i.e. `t^k = t^(k+1)` for some `k`.
    pub fn is_aperiodic(&self) -> bool {
        (0..self.len()).all(|i| self.power_cycle(i).1 == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regular::{Alphabet, RegexAst};

    fn min_dfa(re: &str, letters: &str) -> Dfa {
        let a = Alphabet::from_chars(letters).unwrap();
        Dfa::from_nfa(&RegexAst::parse(re, &a).unwrap().to_nfa(&a).unwrap()).minimize()
    }

    #[test]
    fn one_state_monoid_is_trivial() {
        let m = TransitionMonoid::of(&min_dfa("(a|b)*", "ab")).unwrap();
        assert_eq!(m.len(), 1);
        assert!(m.is_aperiodic());
    }

    #[test]
    fn even_a_has_involution() {
        let m = TransitionMonoid::of(&min_dfa("(aa)*", "a")).unwrap();
        let a = m.generators()[0];
        assert_ne!(a, 0);
        assert_eq!(m.multiply(a, a), 0);
        assert_eq!(m.power_cycle(a), (1, 2));
        assert!(!m.is_aperiodic());
    }

    #[test]
    fn b_star_c_aperiodic_with_small_index() {
        let m = TransitionMonoid::of(&min_dfa("b*c", "bc")).unwrap();
        for i in 0..m.len() {
            let (k, p) = m.power_cycle(i);
            assert_eq!(p, 1);
            assert!(k <= 3);
        }
        // closed under products
        for i in 0..m.len() {
            for j in 0..m.len() {
                let _ = m.multiply(i, j);
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let d = min_dfa("(aaaaa)*", "a");
        assert!(matches!(
            TransitionMonoid::with_cap(&d, 3),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
