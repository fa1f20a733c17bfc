use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use super::ContextualGrammar;
use crate::error::{Error, Result};
use crate::regular::{Letter, Word};

/// Default limit on the number of words kept by [`enumerate_ic`].
pub const DEFAULT_WORD_CAP: usize = 2_000_000;

/// One internal step `x1 x2 x3 => x1 u x2 v x3`. The split is stored as the
/// lengths of `x1` and `x2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DerivationStep {
    #[serde(skip)]
    pub source: Word,
    pub x1_len: usize,
    pub x2_len: usize,
    pub pair: usize,
    pub context: usize,
    #[serde(skip)]
    pub target: Word,
}

impl DerivationStep {
    pub fn x1(&self) -> &[Letter] {
        &self.source[..self.x1_len]
    }

    pub fn x2(&self) -> &[Letter] {
        &self.source[self.x1_len..self.x1_len + self.x2_len]
    }

    pub fn x3(&self) -> &[Letter] {
        &self.source[self.x1_len + self.x2_len..]
    }
}

/// For each pair, the selection state after reading `w[i..j]`, or `None`
/// once a letter outside the declared alphabet is met. Calls `hit(i, j, p)`
/// for every selected factor.
fn selected_factors(
    g: &ContextualGrammar,
    proj: &[Vec<Option<Letter>>],
    w: &[Letter],
    mut hit: impl FnMut(usize, usize, usize),
) {
    let n = w.len();
    for (p, pair) in g.pairs.iter().enumerate() {
        let sel = &pair.selection;
        let live = sel.live();
        for i in 0..=n {
            let mut q = sel.initial();
            if sel.is_accepting(q) {
                hit(i, i, p);
            }
            for j in i..n {
                let Some(l) = proj[p][w[j] as usize] else {
                    break;
                };
                q = sel.next(q, l);
                if !live[q] {
                    break;
                }
                if sel.is_accepting(q) {
                    hit(i, j + 1, p);
                }
            }
        }
    }
}

fn apply(w: &[Letter], i: usize, j: usize, u: &[Letter], v: &[Letter]) -> Word {
    Word::concat(&[&w[..i], u, &w[i..j], v, &w[j..]])
}

/// Every step from `w`, over all splits, pairs and contexts. Steps with the
/// same target are kept separately.
pub fn derive_step(g: &ContextualGrammar, w: &Word) -> Vec<DerivationStep> {
    let proj = g.projections();
    let mut out = Vec::new();
    selected_factors(g, &proj, w, |i, j, p| {
        for (c, ctx) in g.pairs[p].contexts.iter().enumerate() {
            out.push(DerivationStep {
                source: w.clone(),
                x1_len: i,
                x2_len: j - i,
                pair: p,
                context: c,
                target: apply(w, i, j, &ctx.left, &ctx.right),
            });
        }
    });
    out
}

/// All words of `L(G)` of length at most `max_len`.
pub fn enumerate_ic(g: &ContextualGrammar, max_len: usize) -> Result<BTreeSet<Word>> {
    enumerate_ic_capped(g, max_len, DEFAULT_WORD_CAP)
}

/// [`enumerate_ic`] with a limit on the number of words collected.
pub fn enumerate_ic_capped(
    g: &ContextualGrammar,
    max_len: usize,
    cap: usize,
) -> Result<BTreeSet<Word>> {
    g.ensure_valid()?;
    let proj = g.projections();
    let mut seen: HashSet<Word> = HashSet::new();
    let mut frontier: Vec<Word> = Vec::new();
    for a in &g.axioms {
        if a.len() <= max_len && seen.insert(a.clone()) {
            frontier.push(a.clone());
        }
    }
    while let Some(w) = frontier.pop() {
        let mut found = Vec::new();
        selected_factors(g, &proj, &w, |i, j, p| {
            for ctx in &g.pairs[p].contexts {
                if w.len() + ctx.len() <= max_len {
                    found.push(apply(&w, i, j, &ctx.left, &ctx.right));
                }
            }
        });
        for t in found {
            if !seen.contains(&t) {
                if seen.len() >= cap {
                    return Err(Error::ResourceLimit {
                        what: "enumerated words",
                        limit: cap,
                    });
                }
                seen.insert(t.clone());
                frontier.push(t);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

struct Backward<'a> {
    g: &'a ContextualGrammar,
    proj: Vec<Vec<Option<Letter>>>,
    axioms: HashSet<&'a Word>,
    shortest_axiom: usize,
    /// Words known to be underivable.
    dead: HashSet<Word>,
    /// Successful predecessor step for derivable words.
    good: HashMap<Word, Option<DerivationStep>>,
}

impl Backward<'_> {
    fn selected(&self, p: usize, x2: &[Letter]) -> bool {
        let sel = &self.g.pairs[p].selection;
        let mut q = sel.initial();
        for &l in x2 {
            match self.proj[p][l as usize] {
                Some(l) => q = sel.next(q, l),
                None => return false,
            }
        }
        sel.is_accepting(q)
    }

    /// Steps `y => w` for every predecessor `y`.
    fn predecessors(&self, w: &Word) -> Vec<DerivationStep> {
        let n = w.len();
        let mut out = Vec::new();
        for (p, pair) in self.g.pairs.iter().enumerate() {
            for (c, ctx) in pair.contexts.iter().enumerate() {
                let (u, v) = (&ctx.left[..], &ctx.right[..]);
                if u.len() + v.len() > n || n - u.len() - v.len() < self.shortest_axiom {
                    continue;
                }
                for i in 0..=n - u.len() - v.len() {
                    if &w[i..i + u.len()] != u {
                        continue;
                    }
                    let s = i + u.len();
                    for k in s..=n - v.len() {
                        if &w[k..k + v.len()] != v || !self.selected(p, &w[s..k]) {
                            continue;
                        }
                        let source = Word::concat(&[&w[..i], &w[s..k], &w[k + v.len()..]]);
                        out.push(DerivationStep {
                            source,
                            x1_len: i,
                            x2_len: k - s,
                            pair: p,
                            context: c,
                            target: w.clone(),
                        });
                    }
                }
            }
        }
        out
    }

    fn derivable(&mut self, w: &Word) -> bool {
        if self.good.contains_key(w) {
            return true;
        }
        if self.dead.contains(w) {
            return false;
        }
        if self.axioms.contains(w) {
            self.good.insert(w.clone(), None);
            return true;
        }
        for step in self.predecessors(w) {
            if self.derivable(&step.source) {
                self.good.insert(w.clone(), Some(step));
                return true;
            }
        }
        self.dead.insert(w.clone());
        false
    }
}

fn backward(g: &ContextualGrammar) -> Backward<'_> {
    Backward {
        g,
        proj: g.projections(),
        axioms: g.axioms.iter().collect(),
        shortest_axiom: g.axioms.iter().map(|a| a.len()).min().unwrap_or(usize::MAX),
        dead: HashSet::new(),
        good: HashMap::new(),
    }
}

/// Exact membership, searching predecessors (which are strictly shorter)
/// down to the axioms.
pub fn member_ic(g: &ContextualGrammar, w: &Word) -> Result<bool> {
    g.ensure_valid()?;
    Ok(backward(g).derivable(w))
}

/// A derivation of `w` from an axiom, as forward steps, if `w ∈ L(G)`.
pub fn member_trace(
    g: &ContextualGrammar,
    w: &Word,
) -> Result<Option<(Word, Vec<DerivationStep>)>> {
    g.ensure_valid()?;
    let mut b = backward(g);
    if !b.derivable(w) {
        return Ok(None);
    }
    let mut steps = Vec::new();
    let mut cur = w.clone();
    while let Some(Some(step)) = b.good.get(&cur) {
        let prev = step.source.clone();
        steps.push(step.clone());
        cur = prev;
    }
    steps.reverse();
    Ok(Some((cur, steps)))
}
