//! Decision procedures for the structural subregular families.
//!
//! Every predicate takes the automaton together with the declared alphabet
//! `U` the language is judged against, and works on the minimal complete
//! automaton. A negative answer comes with words that `Dfa::accepts` can
//! check on their own, except for ORD whose refutation is an exhausted
//! search.

mod label;
mod ordered;
mod report;

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::regular::{Alphabet, Dfa, Letter, RegexAst, RightLinearGrammar, TransitionMonoid, Word};

pub use label::{subregular_edges, FamilyLabel};
pub use ordered::{is_ordered, is_ordered_with, ordered_automaton, OrderSearch};
pub use report::{
    classify, classify_with, decide, ClassifyOptions, EvidenceRecord, FamilyReport, ReportEntry,
    Verdict,
};

/// Words supporting a verdict, and a short description of the certificate.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Evidence {
    pub note: String,
    pub members: Vec<Word>,
    pub non_members: Vec<Word>,
}

impl Evidence {
    fn note(note: impl Into<String>) -> Self {
        Evidence {
            note: note.into(),
            ..Evidence::default()
        }
    }

    fn words(note: impl Into<String>, members: Vec<Word>, non_members: Vec<Word>) -> Self {
        Evidence {
            note: note.into(),
            members,
            non_members,
        }
    }

    /// Members are accepted and non-members rejected by `d`.
    pub fn check(&self, d: &Dfa) -> bool {
        self.members.iter().all(|w| d.accepts_letters(w))
            && self.non_members.iter().all(|w| !d.accepts_letters(w))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub holds: bool,
    pub evidence: Evidence,
}

impl Decision {
    fn yes(evidence: Evidence) -> Self {
        Decision {
            holds: true,
            evidence,
        }
    }

    fn no(evidence: Evidence) -> Self {
        Decision {
            holds: false,
            evidence,
        }
    }
}

fn prepare(d: &Dfa, u: &Alphabet) -> Result<Dfa> {
    if d.alphabet() != u {
        return Err(Error::AlphabetMismatch {
            left: d.alphabet().to_string(),
            right: u.to_string(),
        });
    }
    Ok(d.minimize())
}

fn fmt_word(u: &Alphabet, w: &[Letter]) -> String {
    u.format_word(w)
}

/// Access word of every state of a minimal automaton.
fn access(m: &Dfa) -> Vec<Word> {
    m.access_words()
        .into_iter()
        .map(|w| w.expect("minimal automata are reachable"))
        .collect()
}

/// Shortest word telling two states of a minimal automaton apart.
fn separator(m: &Dfa, p: usize, q: usize) -> Word {
    m.started_at(p)
        .distinguishing_word(&m.started_at(q))
        .expect("same alphabet")
        .expect("states of a minimal automaton are distinguishable")
}

/// Finds a cycle through live states reachable from the initial state and
/// returns `x, y, z` with `x y^k z` accepted for all `k`.
fn pumpable(m: &Dfa) -> Option<(Word, Word, Word)> {
    let live = m.live();
    let reach = m.reachable();
    let n = m.state_count();
    let useful: Vec<bool> = (0..n).map(|q| live[q] && reach[q]).collect();
    // Shortest cycle through each useful state, searching only useful states.
    let acc = m.access_words();
    for q in 0..n {
        if !useful[q] {
            continue;
        }
        let mut prev: HashMap<usize, (usize, Letter)> = HashMap::new();
        let mut queue = VecDeque::new();
        for l in m.alphabet().letters() {
            let t = m.next(q, l);
            if useful[t] && !prev.contains_key(&t) {
                prev.insert(t, (q, l));
                queue.push_back(t);
            }
        }
        let mut found = prev.contains_key(&q);
        while !found {
            let Some(s) = queue.pop_front() else { break };
            for l in m.alphabet().letters() {
                let t = m.next(s, l);
                if useful[t] && !prev.contains_key(&t) {
                    prev.insert(t, (s, l));
                    if t == q {
                        found = true;
                        break;
                    }
                    queue.push_back(t);
                }
            }
        }
        if !found {
            continue;
        }
        let mut y = Vec::new();
        let mut cur = q;
        loop {
            let (p, l) = prev[&cur];
            y.push(l);
            cur = p;
            if cur == q {
                break;
            }
        }
        y.reverse();
        let x = acc[q].clone().expect("reachable");
        let z = m.shortest_accepted_from(q).expect("live");
        return Some((x, Word(y), z));
    }
    None
}

fn pumped(x: &Word, y: &Word, z: &Word, ks: &[usize]) -> Vec<Word> {
    ks.iter()
        .map(|&k| Word::concat(&[x, &y.repeat(k), z]))
        .collect()
}

/// `L = U*`.
pub fn is_monoidal(d: &Dfa, u: &Alphabet) -> Result<Decision> {
    let m = prepare(d, u)?;
    let acc = access(&m);
    match (0..m.state_count()).find(|&q| !m.is_accepting(q)) {
        None => Ok(Decision::yes(Evidence::note(
            "every reachable state accepts",
        ))),
        Some(q) => Ok(Decision::no(Evidence::words(
            format!("{} is rejected", fmt_word(u, &acc[q])),
            vec![],
            vec![acc[q].clone()],
        ))),
    }
}

/// Finiteness of the language of `d`, on any complete automaton.
pub fn is_finite_language(d: &Dfa) -> bool {
    pumpable(d).is_none()
}

/// `L` is finite.
pub fn is_finite(d: &Dfa, u: &Alphabet) -> Result<Decision> {
    let m = prepare(d, u)?;
    match pumpable(&m) {
        None => {
            let longest = m
                .enumerate(m.state_count())
                .into_iter()
                .map(|w| w.len())
                .max();
            Ok(Decision::yes(Evidence::note(match longest {
                Some(l) => format!("no useful cycle; longest word has length {l}"),
                None => "empty language".to_string(),
            })))
        }
        Some((x, y, z)) => Ok(Decision::no(Evidence::words(
            format!(
                "{}({})^k{} is accepted for every k",
                fmt_word(u, &x),
                fmt_word(u, &y),
                fmt_word(u, &z)
            ),
            pumped(&x, &y, &z, &[0, 1, 2, 3]),
            vec![],
        ))),
    }
}

/// `L` or its complement relative to `U*` is finite.
pub fn is_nilpotent(d: &Dfa, u: &Alphabet) -> Result<Decision> {
    let m = prepare(d, u)?;
    let c = m.complement();
    match (pumpable(&m), pumpable(&c)) {
        (None, _) => Ok(Decision::yes(Evidence::note("finite"))),
        (_, None) => Ok(Decision::yes(Evidence::note("co-finite"))),
        (Some((x, y, z)), Some((x2, y2, z2))) => Ok(Decision::no(Evidence::words(
            format!(
                "both {}({})^k{} in L and {}({})^k{} outside L for every k",
                fmt_word(u, &x),
                fmt_word(u, &y),
                fmt_word(u, &z),
                fmt_word(u, &x2),
                fmt_word(u, &y2),
                fmt_word(u, &z2)
            ),
            pumped(&x, &y, &z, &[0, 1, 2]),
            pumped(&x2, &y2, &z2, &[0, 1, 2]),
        ))),
    }
}

/// The letters that end some word of `L`.
fn final_letters(m: &Dfa) -> Vec<Letter> {
    let reach = m.reachable();
    m.alphabet()
        .letters()
        .filter(|&l| (0..m.state_count()).any(|q| reach[q] && m.is_accepting(m.next(q, l))))
        .collect()
}

/// Automaton for `U* X`.
fn ends_with(u: &Alphabet, x: &[Letter]) -> Dfa {
    let row =
        |_: usize| -> Vec<usize> { u.letters().map(|l| usize::from(x.contains(&l))).collect() };
    Dfa::new(u.clone(), vec![row(0), row(1)], 0, vec![false, true]).expect("well formed")
}

/// `L = U* X` for a set of letters `X`.
pub fn is_combinational(d: &Dfa, u: &Alphabet) -> Result<Decision> {
    let m = prepare(d, u)?;
    let x = final_letters(&m);
    let names: Vec<&str> = x.iter().map(|&l| u.name(l)).collect();
    let cand = ends_with(u, &x);
    match m.distinguishing_word(&cand)? {
        None => Ok(Decision::yes(Evidence::note(format!(
            "L = U*X with X = {{{}}}",
            names.join(", ")
        )))),
        Some(w) => {
            let note = format!(
                "X = {{{}}}; {} separates L from U*X",
                names.join(", "),
                fmt_word(u, &w)
            );
            if m.accepts_letters(&w) {
                Ok(Decision::no(Evidence::words(note, vec![w], vec![])))
            } else {
                // w ends in some x ∈ X; exhibit a member ending the same way.
                let last = *w.last().expect("λ ∈ U*X is impossible");
                let reach = m.reachable();
                let acc = access(&m);
                let q = (0..m.state_count())
                    .find(|&q| reach[q] && m.is_accepting(m.next(q, last)))
                    .expect("last letter is in X");
                let mut member = acc[q].clone();
                member.0.push(last);
                Ok(Decision::no(Evidence::words(note, vec![member], vec![w])))
            }
        }
    }
}

/// Outcome of the pair-collapse iteration behind [`is_definite`].
enum Definiteness {
    Degree(usize),
    /// States `p, q` and a word `w` of length at least the state count with
    /// `δ(p, w) ≠ δ(q, w)`.
    Unbounded(usize, usize, Word),
}

fn definiteness(m: &Dfa) -> Definiteness {
    let n = m.state_count();
    let mut layer: BTreeSet<(usize, usize)> = BTreeSet::new();
    for p in 0..n {
        for q in p + 1..n {
            layer.insert((p, q));
        }
    }
    let mut parents: Vec<HashMap<(usize, usize), ((usize, usize), Letter)>> = Vec::new();
    for k in 0..=n {
        if layer.is_empty() {
            return Definiteness::Degree(k);
        }
        if k == n {
            break;
        }
        let mut next = BTreeSet::new();
        let mut par = HashMap::new();
        for &(p, q) in &layer {
            for l in m.alphabet().letters() {
                let (a, b) = (m.next(p, l), m.next(q, l));
                if a != b {
                    let key = (a.min(b), a.max(b));
                    par.entry(key).or_insert(((p, q), l));
                    next.insert(key);
                }
            }
        }
        parents.push(par);
        layer = next;
    }
    let mut cur = *layer.iter().next().expect("non-empty");
    let mut w = Vec::new();
    for par in parents.iter().rev() {
        let (prev, l) = par[&cur];
        w.push(l);
        cur = prev;
    }
    w.reverse();
    Definiteness::Unbounded(cur.0, cur.1, Word(w))
}

/// `L = A ∪ U* B` for finite `A, B`: membership of long words depends only on
/// a bounded suffix.
pub fn is_definite(d: &Dfa, u: &Alphabet) -> Result<Decision> {
    let m = prepare(d, u)?;
    match definiteness(&m) {
        Definiteness::Degree(k) => Ok(Decision::yes(Evidence::note(format!(
            "membership is fixed by the last {k} letters"
        )))),
        Definiteness::Unbounded(p, q, w) => {
            let acc = access(&m);
            let e1 = m.run_from(p, &w);
            let e2 = m.run_from(q, &w);
            let z = separator(&m, e1, e2);
            let w1 = Word::concat(&[&acc[p], &w, &z]);
            let w2 = Word::concat(&[&acc[q], &w, &z]);
            let (yes, no) = if m.accepts_letters(&w1) {
                (w1, w2)
            } else {
                (w2, w1)
            };
            Ok(Decision::no(Evidence::words(
                format!(
                    "{} and {} share a suffix of length {} but differ",
                    fmt_word(u, &yes),
                    fmt_word(u, &no),
                    w.len() + z.len()
                ),
                vec![yes],
                vec![no],
            )))
        }
    }
}

/// Finite sets `A, B` with `L = A ∪ U* B`, when `L` is definite. `B` holds
/// the shortest words `v` with `U* v ⊆ L`, and `A` the remaining short
/// members.
pub fn definite_decomposition(d: &Dfa, u: &Alphabet) -> Result<Option<(Vec<Word>, Vec<Word>)>> {
    let m = prepare(d, u)?;
    let Definiteness::Degree(k) = definiteness(&m) else {
        return Ok(None);
    };
    let n = m.state_count();
    let mut b: Vec<Word> = Vec::new();
    for v in crate::regular::all_words(u.len(), k) {
        if b.iter().any(|s| v.ends_with(s)) {
            continue;
        }
        if (0..n).all(|p| m.is_accepting(m.run_from(p, &v))) {
            b.push(v);
        }
    }
    let a = m
        .enumerate(k)
        .into_iter()
        .filter(|w| !b.iter().any(|s| w.ends_with(s)))
        .collect();
    Ok(Some((a, b)))
}

/// `xy ∈ L` implies `y ∈ L`.
pub fn is_suffix_closed(d: &Dfa, u: &Alphabet) -> Result<Decision> {
    let m = prepare(d, u)?;
    let acc = access(&m);
    for q in 0..m.state_count() {
        let from_q = m.started_at(q);
        let extra = from_q.combine(&m, crate::regular::BoolOp::Difference)?;
        if let Some(y) = extra.shortest_accepted() {
            let xy = Word::concat(&[&acc[q], &y]);
            return Ok(Decision::no(Evidence::words(
                format!(
                    "{} is in L but its suffix {} is not",
                    fmt_word(u, &xy),
                    fmt_word(u, &y)
                ),
                vec![xy],
                vec![y],
            )));
        }
    }
    Ok(Decision::yes(Evidence::note(
        "every state accepts a subset of L",
    )))
}

/// `δ(q, ab) = δ(q, ba)` for all states and letters of the minimal automaton.
pub fn is_commutative(d: &Dfa, u: &Alphabet) -> Result<Decision> {
    let m = prepare(d, u)?;
    let acc = access(&m);
    for q in 0..m.state_count() {
        for a in u.letters() {
            for b in u.letters().filter(|&b| b > a) {
                let ab = m.next(m.next(q, a), b);
                let ba = m.next(m.next(q, b), a);
                if ab != ba {
                    let z = separator(&m, ab, ba);
                    let w1 = Word::concat(&[&acc[q], &[a, b], &z]);
                    let w2 = Word::concat(&[&acc[q], &[b, a], &z]);
                    let (yes, no) = if m.accepts_letters(&w1) {
                        (w1, w2)
                    } else {
                        (w2, w1)
                    };
                    return Ok(Decision::no(Evidence::words(
                        format!(
                            "{} is in L but its permutation {} is not",
                            fmt_word(u, &yes),
                            fmt_word(u, &no)
                        ),
                        vec![yes],
                        vec![no],
                    )));
                }
            }
        }
    }
    Ok(Decision::yes(Evidence::note(
        "letters commute in every state",
    )))
}

/// `L` is closed under cyclic shifts. It suffices that `aw ∈ L` implies
/// `wa ∈ L` for every letter `a`; this is checked on pairs of states
/// `(δ(z0, aw), δ(z0, w))`.
pub fn is_circular(d: &Dfa, u: &Alphabet) -> Result<Decision> {
    let m = prepare(d, u)?;
    let n = m.state_count();
    for a in u.letters() {
        let start = (m.next(m.initial(), a), m.initial());
        let mut prev: HashMap<(usize, usize), Option<((usize, usize), Letter)>> = HashMap::new();
        prev.insert(start, None);
        let mut queue = VecDeque::from([start]);
        while let Some((p, r)) = queue.pop_front() {
            if m.is_accepting(p) && !m.is_accepting(m.next(r, a)) {
                let mut w = Vec::new();
                let mut cur = (p, r);
                while let Some((back, l)) = prev[&cur] {
                    w.push(l);
                    cur = back;
                }
                w.reverse();
                let aw = Word::concat(&[&[a], &w]);
                let wa = Word::concat(&[&w, &[a]]);
                return Ok(Decision::no(Evidence::words(
                    format!(
                        "{} is in L but its shift {} is not",
                        fmt_word(u, &aw),
                        fmt_word(u, &wa)
                    ),
                    vec![aw],
                    vec![wa],
                )));
            }
            for l in u.letters() {
                let next = (m.next(p, l), m.next(r, l));
                if let std::collections::hash_map::Entry::Vacant(e) = prev.entry(next) {
                    e.insert(Some(((p, r), l)));
                    queue.push_back(next);
                }
            }
        }
        debug_assert!(prev.len() <= n * n);
    }
    Ok(Decision::yes(Evidence::note(
        "moving a first letter to the end never leaves L",
    )))
}

/// The transition monoid of the minimal automaton is aperiodic.
pub fn is_noncounting(d: &Dfa, u: &Alphabet) -> Result<Decision> {
    is_noncounting_capped(d, u, crate::regular::DEFAULT_MONOID_CAP)
}

pub fn is_noncounting_capped(d: &Dfa, u: &Alphabet, cap: usize) -> Result<Decision> {
    let m = prepare(d, u)?;
    let mon = TransitionMonoid::with_cap(&m, cap)?;
    let acc = access(&m);
    for i in 0..mon.len() {
        let (k, p) = mon.power_cycle(i);
        if p == 1 {
            continue;
        }
        // t^j ≠ t^(j+1) for every j; take j beyond any index bound.
        let y = mon.representative(i).clone();
        let j = mon.len().max(k);
        let tj = power(&mon, i, j);
        let tj1 = mon.multiply(tj, i);
        let (a, b) = (mon.element(tj), mon.element(tj1));
        let q = (0..m.state_count())
            .find(|&q| a[q] != b[q])
            .expect("distinct maps");
        let z = separator(&m, a[q], b[q]);
        let w1 = Word::concat(&[&acc[q], &y.repeat(j), &z]);
        let w2 = Word::concat(&[&acc[q], &y.repeat(j + 1), &z]);
        let (yes, no) = if m.accepts_letters(&w1) {
            (w1, w2)
        } else {
            (w2, w1)
        };
        return Ok(Decision::no(Evidence::words(
            format!(
                "powers of {} cycle with period {p}: x y^{j} z and x y^{} z differ",
                fmt_word(u, &y),
                j + 1
            ),
            vec![yes],
            vec![no],
        )));
    }
    Ok(Decision::yes(Evidence::note(format!(
        "transition monoid of {} elements is aperiodic",
        mon.len()
    ))))
}

fn power(mon: &TransitionMonoid, i: usize, e: usize) -> usize {
    let mut cur = i;
    for _ in 1..e {
        cur = mon.multiply(cur, i);
    }
    cur
}

/// There is `m` such that each set `{ x^n : n ≥ m }` lies inside `L` or is
/// disjoint from it.
pub fn is_power_separating(d: &Dfa, u: &Alphabet) -> Result<Decision> {
    is_power_separating_capped(d, u, crate::regular::DEFAULT_MONOID_CAP)
}

pub fn is_power_separating_capped(d: &Dfa, u: &Alphabet, cap: usize) -> Result<Decision> {
    let m = prepare(d, u)?;
    let mon = TransitionMonoid::with_cap(&m, cap)?;
    let z0 = m.initial();
    let mut bound = 0;
    for i in 0..mon.len() {
        let (k, p) = mon.power_cycle(i);
        bound = bound.max(k);
        let mut cur = power(&mon, i, k);
        let mut seen = Vec::with_capacity(p);
        for _ in 0..p {
            seen.push(m.is_accepting(mon.element(cur)[z0]));
            cur = mon.multiply(cur, i);
        }
        if seen.iter().any(|&s| s != seen[0]) {
            let x = mon.representative(i).clone();
            // exponents on the cycle, shifted past every pre-period
            let base = mon.len().max(k);
            let base = base + (p - (base - k) % p) % p;
            let mut yes = Vec::new();
            let mut no = Vec::new();
            for (j, &s) in seen.iter().enumerate() {
                let w = x.repeat(base + j);
                if s {
                    yes.push(w)
                } else {
                    no.push(w)
                }
            }
            yes.truncate(1);
            no.truncate(1);
            return Ok(Decision::no(Evidence::words(
                format!(
                    "powers of {} alternate between L and its complement with period {p}",
                    fmt_word(u, &x)
                ),
                yes,
                no,
            )));
        }
    }
    Ok(Decision::yes(Evidence::note(format!(
        "separating with m = {bound}"
    ))))
}

/// Syntactic union-freeness: `Some(true)` when the expression uses only
/// product and star, `None` when it contains a union or `∅`.
pub fn is_union_free_syntactic(r: &RegexAst) -> Option<bool> {
    r.is_product_star_only().then_some(true)
}

#[cfg(test)]
mod tests;
