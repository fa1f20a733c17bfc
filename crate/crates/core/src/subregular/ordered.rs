//! Ordered languages: accepted by some complete automaton whose states form
//! a chain that every letter maps monotonically.
//!
//! Such an automaton maps onto the minimal automaton `M`, so it is described
//! by the sequence of `M`-states labelling its chain. A label sequence `ℓ`
//! works exactly when, for every letter `a`, the sequence `δ_a(ℓ)` with
//! repeated neighbours merged is a subsequence of `ℓ`; repeated neighbours in
//! `ℓ` itself can be merged as well, so only sequences without them are
//! searched.

use super::*;

/// Bounds for the chain search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderSearch {
    /// Longest chain tried is `max_factor` times the minimal state count.
    pub max_factor: usize,
    pub node_budget: usize,
}

impl Default for OrderSearch {
    fn default() -> Self {
        OrderSearch {
            max_factor: 3,
            node_budget: 200_000,
        }
    }
}

/// Greedy embedding of every letter image of `labels` into `labels`;
/// returns the transition rows of the chain automaton.
fn embed(m: &Dfa, labels: &[usize]) -> Option<Vec<Vec<usize>>> {
    let n = labels.len();
    let mut delta = vec![vec![0; m.alphabet().len()]; n];
    for a in m.alphabet().letters() {
        let mut pos: Option<usize> = None;
        for i in 0..n {
            let img = m.next(labels[i], a);
            let here = match pos {
                Some(p) if labels[p] == img => p,
                _ => {
                    let from = pos.map_or(0, |p| p + 1);
                    (from..n).find(|&j| labels[j] == img)?
                }
            };
            pos = Some(here);
            delta[i][a as usize] = here;
        }
    }
    Some(delta)
}

fn chain_automaton(m: &Dfa, labels: &[usize]) -> Option<Dfa> {
    let delta = embed(m, labels)?;
    let initial = labels.iter().position(|&l| l == m.initial())?;
    let accepting = labels.iter().map(|&l| m.is_accepting(l)).collect();
    Dfa::new(m.alphabet().clone(), delta, initial, accepting).ok()
}

fn merge_repeats(labels: Vec<usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(labels.len());
    for l in labels {
        if out.last() != Some(&l) {
            out.push(l);
        }
    }
    out
}

/// Chain for a definite language of degree `k`: states are the last (at
/// most) `k` letters read, ordered by comparing them from the right.
fn definite_chain(m: &Dfa, k: usize) -> Vec<usize> {
    let mut words = crate::regular::all_words(m.alphabet().len(), k);
    words.sort_by_key(|w| w.iter().rev().copied().collect::<Vec<_>>());
    merge_repeats(words.iter().map(|w| m.run(w)).collect())
}

#[derive(Clone)]
struct Track {
    last_image: Option<usize>,
    last_match: Option<usize>,
    pending: VecDeque<usize>,
}

struct ChainSearch<'a> {
    m: &'a Dfa,
    max_len: usize,
    budget: usize,
    visited: usize,
    /// Positions and queues, relative to the oldest usable position, of
    /// partial chains already known to fail.
    failed: std::collections::HashSet<Vec<usize>>,
}

/// Everything the rest of the search depends on: the usable tail of the
/// chain, each letter's matching state, whether the initial state occurs,
/// and the remaining length.
fn memo_key(labels: &[usize], tracks: &[Track], has_initial: bool, room: usize) -> Vec<usize> {
    let start = tracks
        .iter()
        .map(|t| t.last_match.map_or(0, |p| p + 1))
        .min()
        .unwrap_or(0)
        .min(labels.len().saturating_sub(1));
    let mut key = vec![room, usize::from(has_initial), labels.len() - start];
    key.extend_from_slice(&labels[start..]);
    for t in tracks {
        key.push(
            t.last_match
                .map_or(usize::MAX, |p| p + 1 - start.min(p + 1)),
        );
        key.push(t.last_image.unwrap_or(usize::MAX));
        key.push(t.pending.len());
        key.extend(t.pending.iter().copied());
    }
    key
}

impl ChainSearch<'_> {
    fn dfs(&mut self, labels: &mut Vec<usize>, tracks: &[Track]) -> Result<bool> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::ResourceLimit {
                what: "ordered automaton search nodes",
                limit: self.budget,
            });
        }
        if !labels.is_empty()
            && tracks.iter().all(|t| t.pending.is_empty())
            && labels.contains(&self.m.initial())
        {
            return Ok(true);
        }
        if labels.len() == self.max_len {
            return Ok(false);
        }
        let key = memo_key(
            labels,
            tracks,
            labels.contains(&self.m.initial()),
            self.max_len - labels.len(),
        );
        if self.failed.contains(&key) {
            return Ok(false);
        }
        let i = labels.len();
        // labels wanted by some letter first
        let mut order: Vec<usize> = tracks
            .iter()
            .filter_map(|t| t.pending.front().copied())
            .collect();
        order.extend(0..self.m.state_count());
        let mut tried = vec![false; self.m.state_count()];
        for x in order {
            if std::mem::replace(&mut tried[x], true) {
                continue;
            }
            if labels.last() == Some(&x) {
                continue;
            }
            labels.push(x);
            let mut next = tracks.to_vec();
            let mut ok = true;
            for (a, t) in next.iter_mut().enumerate() {
                if t.pending.front() == Some(&x) {
                    t.pending.pop_front();
                    t.last_match = Some(i);
                }
                let img = self.m.next(x, a as Letter);
                if t.last_image != Some(img) {
                    t.last_image = Some(img);
                    let from = t.last_match.map_or(0, |p| p + 1);
                    match (from..=i).find(|&j| t.pending.is_empty() && labels[j] == img) {
                        Some(j) => t.last_match = Some(j),
                        None => t.pending.push_back(img),
                    }
                }
                if t.pending.len() > self.max_len - i - 1 {
                    ok = false;
                }
            }
            if ok && self.dfs(labels, &next)? {
                return Ok(true);
            }
            labels.pop();
        }
        self.failed.insert(key);
        Ok(false)
    }
}

/// An automaton for the language of `d` whose states `0 < 1 < … ` are
/// ordered and every letter acts monotonically, if one is found.
///
/// The minimal automaton is tried first, then the chain for definite
/// languages, then chains of increasing length up to the search bound.
/// Languages with counting are rejected without search.
pub fn ordered_automaton(d: &Dfa, search: &OrderSearch) -> Result<Option<Dfa>> {
    let m = d.minimize();
    let n = m.state_count();
    if let Some(order) = minimal_order(&m) {
        return Ok(chain_automaton(&m, &order));
    }
    if let Definiteness::Degree(k) = definiteness(&m) {
        if let Some(c) = chain_automaton(&m, &definite_chain(&m, k)) {
            return Ok(Some(c));
        }
    }
    let counting = match TransitionMonoid::with_cap(&m, DEFAULT_MONOID_CAP) {
        Ok(mon) => !mon.is_aperiodic(),
        Err(_) => false,
    };
    if counting {
        return Ok(None);
    }
    let mut search_state = ChainSearch {
        m: &m,
        max_len: 0,
        budget: search.node_budget,
        visited: 0,
        failed: Default::default(),
    };
    let blank = Track {
        last_image: None,
        last_match: None,
        pending: VecDeque::new(),
    };
    for len in n + 1..=n * search.max_factor {
        search_state.max_len = len;
        search_state.failed.clear();
        let mut labels = Vec::new();
        if search_state.dfs(&mut labels, &vec![blank.clone(); m.alphabet().len()])? {
            return Ok(chain_automaton(&m, &labels));
        }
    }
    Ok(None)
}

use crate::regular::DEFAULT_MONOID_CAP;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rel {
    Open,
    Less,
    Greater,
}

/// Records `p < q` and what follows from it; false on contradiction.
fn assert_less(rel: &mut [Vec<Rel>], m: &Dfa, p: usize, q: usize) -> bool {
    let n = rel.len();
    let mut work = vec![(p, q)];
    while let Some((p, q)) = work.pop() {
        match rel[p][q] {
            Rel::Less => continue,
            Rel::Greater => return false,
            Rel::Open => {}
        }
        rel[p][q] = Rel::Less;
        rel[q][p] = Rel::Greater;
        for l in m.alphabet().letters() {
            let (a, b) = (m.next(p, l), m.next(q, l));
            if a != b {
                work.push((a, b));
            }
        }
        for r in 0..n {
            if rel[r][p] == Rel::Less {
                work.push((r, q));
            }
            if rel[q][r] == Rel::Less {
                work.push((p, r));
            }
        }
    }
    true
}

fn search_order(rel: Vec<Vec<Rel>>, m: &Dfa) -> Option<Vec<Vec<Rel>>> {
    let n = rel.len();
    let open = (0..n)
        .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
        .find(|&(p, q)| rel[p][q] == Rel::Open);
    let Some((p, q)) = open else { return Some(rel) };
    for (a, b) in [(p, q), (q, p)] {
        let mut r = rel.clone();
        if assert_less(&mut r, m, a, b) {
            if let Some(done) = search_order(r, m) {
                return Some(done);
            }
        }
    }
    None
}

/// Monotone total order on the states of a minimal automaton, least first.
fn minimal_order(m: &Dfa) -> Option<Vec<usize>> {
    let n = m.state_count();
    let rel = search_order(vec![vec![Rel::Open; n]; n], m)?;
    let mut states: Vec<usize> = (0..n).collect();
    states.sort_by_key(|&p| (0..n).filter(|&q| rel[q][p] == Rel::Less).count());
    Some(states)
}

pub fn is_ordered(d: &Dfa, u: &Alphabet) -> Result<Decision> {
    is_ordered_with(d, u, &OrderSearch::default())
}

/// Some complete automaton for `L` carries a total order on its states
/// preserved by every letter.
///
/// A positive answer is certified by an explicit ordered automaton and a
/// negative one by counting (ordered languages never count). Otherwise the
/// search is bounded, and running out of it is a resource error.
pub fn is_ordered_with(d: &Dfa, u: &Alphabet, search: &OrderSearch) -> Result<Decision> {
    let m = prepare(d, u)?;
    let n = m.state_count();
    match ordered_automaton(&m, search)? {
        Some(c) => {
            let note = if c.state_count() == n {
                "the minimal automaton is ordered".to_string()
            } else {
                format!("ordered automaton with {} states", c.state_count())
            };
            Ok(Decision::yes(Evidence::note(note)))
        }
        None => {
            let counting = TransitionMonoid::with_cap(&m, DEFAULT_MONOID_CAP)
                .map(|mon| !mon.is_aperiodic())
                .unwrap_or(false);
            if counting {
                Ok(Decision::no(Evidence::note(
                    "no order: the language counts",
                )))
            } else {
                Err(Error::ResourceLimit {
                    what: "ordered automaton chain length",
                    limit: n * search.max_factor,
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regular::compile_str;

    fn monotone(c: &Dfa) -> bool {
        let n = c.state_count();
        (0..n).all(|p| (p..n).all(|q| c.alphabet().letters().all(|a| c.next(p, a) <= c.next(q, a))))
    }

    #[test]
    fn definite_language_with_unordered_minimal_automaton() {
        let u = Alphabet::from_chars("ab").unwrap();
        let d = compile_str("a|(a|b)(a|b)*b", &u).unwrap();
        assert!(minimal_order(&d.minimize()).is_none());
        let c = ordered_automaton(&d, &OrderSearch::default())
            .unwrap()
            .unwrap();
        assert!(monotone(&c));
        assert!(c.equivalent(&d).unwrap());
        assert!(is_ordered(&d, &u).unwrap().holds);
    }

    #[test]
    fn chain_certificates_are_monotone() {
        let u = Alphabet::from_chars("ab").unwrap();
        for re in ["b*a", "(a|b)*ab", "a*ba*ba*", "ab|ba", "(ab)*"] {
            let d = compile_str(re, &u).unwrap();
            if let Some(c) = ordered_automaton(&d, &OrderSearch::default()).unwrap() {
                assert!(monotone(&c), "{re}");
                assert!(c.equivalent(&d).unwrap(), "{re}");
            }
        }
    }

    #[test]
    fn counting_is_never_ordered() {
        let u = Alphabet::from_chars("a").unwrap();
        let d = compile_str("(aa)*", &u).unwrap();
        let dec = is_ordered(&d, &u).unwrap();
        assert!(!dec.holds);
        assert!(dec.evidence.note.contains("counts"));
    }
}
