use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, ParseError, Result};
use crate::regular::alphabet::{Alphabet, Letter, Word};
use crate::regular::nfa::Nfa;

/// Boolean operation for [`Dfa::combine`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoolOp {
    Union,
    Intersection,
    Difference,
}

/// A complete deterministic finite automaton: every state has exactly one
/// successor per letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    delta: Vec<Vec<usize>>,
    initial: usize,
    accepting: Vec<bool>,
}

impl Dfa {
    pub fn new(
        alphabet: Alphabet,
        delta: Vec<Vec<usize>>,
        initial: usize,
        accepting: Vec<bool>,
    ) -> Result<Self> {
        let n = delta.len();
        if n == 0 {
            return Err(Error::MalformedAutomaton("no states".into()));
        }
        if initial >= n {
            return Err(Error::MalformedAutomaton(
                "initial state out of range".into(),
            ));
        }
        if accepting.len() != n {
            return Err(Error::MalformedAutomaton(
                "accepting flags do not match the state count".into(),
            ));
        }
        for (q, row) in delta.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(Error::MalformedAutomaton(format!(
                    "state {q} has {} transitions, expected {}",
                    row.len(),
                    alphabet.len()
                )));
            }
            if let Some(&t) = row.iter().find(|&&t| t >= n) {
                return Err(Error::MalformedAutomaton(format!(
                    "transition target {t} out of range"
                )));
            }
        }
        Ok(Dfa {
            alphabet,
            delta,
            initial,
            accepting,
        })
    }

    /// One non-accepting state.
    pub fn empty(alphabet: &Alphabet) -> Self {
        Dfa {
            delta: vec![vec![0; alphabet.len()]],
            alphabet: alphabet.clone(),
            initial: 0,
            accepting: vec![false],
        }
    }

    /// One accepting state: the full monoid over the alphabet.
    pub fn universal(alphabet: &Alphabet) -> Self {
        let mut d = Self::empty(alphabet);
        d.accepting[0] = true;
        d
    }

    /// Trie automaton for a finite set of words.
    pub fn from_words<'a, I>(alphabet: &Alphabet, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a [Letter]>,
    {
        let k = alphabet.len();
        // state 0 is the sink, state 1 the root
        let mut delta = vec![vec![0; k], vec![0; k]];
        let mut accepting = vec![false, false];
        for w in words {
            let mut q = 1;
            for &l in w {
                if l as usize >= k {
                    return Err(Error::ForeignLetter(format!("#{l}")));
                }
                if delta[q][l as usize] == 0 {
                    delta.push(vec![0; k]);
                    accepting.push(false);
                    let fresh = delta.len() - 1;
                    delta[q][l as usize] = fresh;
                }
                q = delta[q][l as usize];
            }
            accepting[q] = true;
        }
        Dfa::new(alphabet.clone(), delta, 1, accepting)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.delta.len()).filter(|&q| self.accepting[q])
    }

    pub fn next(&self, state: usize, letter: Letter) -> usize {
        self.delta[state][letter as usize]
    }

    pub fn row(&self, state: usize) -> &[usize] {
        &self.delta[state]
    }

    /// State reached from `state` after reading `word`. Letters must be in
    /// range.
    pub fn run_from(&self, state: usize, word: &[Letter]) -> usize {
        word.iter().fold(state, |q, &l| self.delta[q][l as usize])
    }

    pub fn run(&self, word: &[Letter]) -> usize {
        self.run_from(self.initial, word)
    }

    /// Membership for a word whose letters are known to be in range.
    pub fn accepts_letters(&self, word: &[Letter]) -> bool {
        self.accepting[self.run(word)]
    }

    pub fn accepts(&self, word: &[Letter]) -> Result<bool> {
        if let Some(&l) = word.iter().find(|&&l| !self.alphabet.contains_letter(l)) {
            return Err(Error::ForeignLetter(format!("#{l}")));
        }
        Ok(self.accepts_letters(word))
    }

    /// Copy of the automaton started in `state`.
    pub fn started_at(&self, state: usize) -> Dfa {
        Dfa {
            initial: state,
            ..self.clone()
        }
    }

    /// Subset construction; only reachable subsets are materialised, the
    /// empty subset becoming the sink when needed.
    pub fn from_nfa(nfa: &Nfa) -> Dfa {
        let k = nfa.alphabet().len();
        let start: Vec<usize> = nfa.initial().iter().copied().collect();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut subsets = vec![start.clone()];
        index.insert(start, 0);
        let mut delta: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        while i < subsets.len() {
            let mut row = Vec::with_capacity(k);
            for l in 0..k {
                let target: BTreeSet<usize> = subsets[i]
                    .iter()
                    .flat_map(|&s| nfa.successors(s, l as Letter).iter().copied())
                    .collect();
                let target: Vec<usize> = target.into_iter().collect();
                let id = match index.get(&target) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        index.insert(target.clone(), id);
                        subsets.push(target);
                        id
                    }
                };
                row.push(id);
            }
            delta.push(row);
            i += 1;
        }
        let accepting = subsets
            .iter()
            .map(|s| s.iter().any(|&q| nfa.is_accepting(q)))
            .collect();
        Dfa {
            alphabet: nfa.alphabet().clone(),
            delta,
            initial: 0,
            accepting,
        }
    }

    /// Reachability flags from the initial state.
    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.delta.len()];
        let mut stack = vec![self.initial];
        seen[self.initial] = true;
        while let Some(q) = stack.pop() {
            for &t in &self.delta[q] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    /// States from which some accepting state can be reached.
    pub fn live(&self) -> Vec<bool> {
        let n = self.delta.len();
        let mut rev = vec![Vec::new(); n];
        for (q, row) in self.delta.iter().enumerate() {
            for &t in row {
                rev[t].push(q);
            }
        }
        let mut seen = self.accepting.clone();
        let mut stack: Vec<usize> = (0..n).filter(|&q| seen[q]).collect();
        while let Some(q) = stack.pop() {
            for &p in &rev[q] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// Shortlex-least word leading from `from` to each state (None when
    /// unreachable).
    pub fn access_words_from(&self, from: usize) -> Vec<Option<Word>> {
        let mut words: Vec<Option<Word>> = vec![None; self.delta.len()];
        words[from] = Some(Word::empty());
        let mut queue = VecDeque::from([from]);
        while let Some(q) = queue.pop_front() {
            for (l, &t) in self.delta[q].iter().enumerate() {
                if words[t].is_none() {
                    let mut w = words[q].clone().unwrap();
                    w.0.push(l as Letter);
                    words[t] = Some(w);
                    queue.push_back(t);
                }
            }
        }
        words
    }

    pub fn access_words(&self) -> Vec<Option<Word>> {
        self.access_words_from(self.initial)
    }

    /// Shortlex-least word accepted when starting in `state`.
    pub fn shortest_accepted_from(&self, state: usize) -> Option<Word> {
        let words = self.access_words_from(state);
        (0..self.delta.len())
            .filter(|&q| self.accepting[q])
            .filter_map(|q| words[q].clone())
            .min_by(|a, b| super::alphabet::shortlex(a, b))
    }

    pub fn shortest_accepted(&self) -> Option<Word> {
        self.shortest_accepted_from(self.initial)
    }

    pub fn is_empty_language(&self) -> bool {
        self.shortest_accepted().is_none()
    }

    /// Minimal complete automaton in canonical form: states are numbered in
    /// breadth-first order from the initial state, exploring letters in
    /// alphabet order, so equal languages give identical automata.
    pub fn minimize(&self) -> Dfa {
        let reach = self.reachable();
        let states: Vec<usize> = (0..self.delta.len()).filter(|&q| reach[q]).collect();
        // Moore refinement over the reachable part.
        let mut class = vec![usize::MAX; self.delta.len()];
        for &q in &states {
            class[q] = usize::from(self.accepting[q]);
        }
        let mut count = {
            let mut seen = BTreeSet::new();
            for &q in &states {
                seen.insert(class[q]);
            }
            seen.len()
        };
        loop {
            let mut sig_index: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
            let mut next = vec![usize::MAX; self.delta.len()];
            for &q in &states {
                let sig = (
                    class[q],
                    self.delta[q].iter().map(|&t| class[t]).collect::<Vec<_>>(),
                );
                let fresh = sig_index.len();
                next[q] = *sig_index.entry(sig).or_insert(fresh);
            }
            let new_count = sig_index.len();
            class = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        // Canonical breadth-first numbering of classes.
        let mut number: HashMap<usize, usize> = HashMap::new();
        let mut reps: Vec<usize> = Vec::new();
        number.insert(class[self.initial], 0);
        reps.push(self.initial);
        let mut i = 0;
        while i < reps.len() {
            let q = reps[i];
            for &t in &self.delta[q] {
                if let std::collections::hash_map::Entry::Vacant(e) = number.entry(class[t]) {
                    e.insert(reps.len());
                    reps.push(t);
                }
            }
            i += 1;
        }
        let delta = reps
            .iter()
            .map(|&q| self.delta[q].iter().map(|&t| number[&class[t]]).collect())
            .collect();
        let accepting = reps.iter().map(|&q| self.accepting[q]).collect();
        Dfa {
            alphabet: self.alphabet.clone(),
            delta,
            initial: 0,
            accepting,
        }
    }

    fn same_alphabet(&self, other: &Dfa) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.to_string(),
                right: other.alphabet.to_string(),
            });
        }
        Ok(())
    }

    /// Shortlex-least word accepted by exactly one of the two automata.
    pub fn distinguishing_word(&self, other: &Dfa) -> Result<Option<Word>> {
        self.same_alphabet(other)?;
        let k = self.alphabet.len();
        let mut seen: HashMap<(usize, usize), Option<(usize, usize, Letter)>> = HashMap::new();
        let start = (self.initial, other.initial);
        seen.insert(start, None);
        let mut queue = VecDeque::from([start]);
        while let Some((p, q)) = queue.pop_front() {
            if self.accepting[p] != other.accepting[q] {
                let mut letters = Vec::new();
                let mut cur = (p, q);
                while let Some(Some((pp, pq, l))) = seen.get(&cur) {
                    letters.push(*l);
                    cur = (*pp, *pq);
                }
                letters.reverse();
                return Ok(Some(Word(letters)));
            }
            for l in 0..k {
                let t = (self.delta[p][l], other.delta[q][l]);
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(t) {
                    e.insert(Some((p, q, l as Letter)));
                    queue.push_back(t);
                }
            }
        }
        Ok(None)
    }

    pub fn equivalent(&self, other: &Dfa) -> Result<bool> {
        Ok(self.distinguishing_word(other)?.is_none())
    }

    /// Product construction over the reachable pairs.
    pub fn combine(&self, other: &Dfa, op: BoolOp) -> Result<Dfa> {
        self.same_alphabet(other)?;
        let k = self.alphabet.len();
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut pairs = vec![(self.initial, other.initial)];
        index.insert(pairs[0], 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            let mut row = Vec::with_capacity(k);
            for l in 0..k {
                let t = (self.delta[p][l], other.delta[q][l]);
                let id = *index.entry(t).or_insert_with(|| {
                    pairs.push(t);
                    pairs.len() - 1
                });
                row.push(id);
            }
            delta.push(row);
            i += 1;
        }
        let accepting = pairs
            .iter()
            .map(|&(p, q)| {
                let (a, b) = (self.accepting[p], other.accepting[q]);
                match op {
                    BoolOp::Union => a || b,
                    BoolOp::Intersection => a && b,
                    BoolOp::Difference => a && !b,
                }
            })
            .collect();
        Ok(Dfa {
            alphabet: self.alphabet.clone(),
            delta,
            initial: 0,
            accepting,
        })
    }

    pub fn complement(&self) -> Dfa {
        Dfa {
            accepting: self.accepting.iter().map(|a| !a).collect(),
            ..self.clone()
        }
    }

    /// The same language over a larger alphabet: letters outside the
    /// current alphabet lead to a fresh sink.
    pub fn extend_alphabet(&self, sup: &Alphabet) -> Result<Dfa> {
        let proj = self.alphabet.projection_from(sup);
        self.alphabet.embedding_into(sup)?;
        let sink = self.delta.len();
        let mut delta: Vec<Vec<usize>> = self
            .delta
            .iter()
            .map(|row| {
                proj.iter()
                    .map(|p| p.map_or(sink, |l| row[l as usize]))
                    .collect()
            })
            .collect();
        delta.push(vec![sink; sup.len()]);
        let mut accepting = self.accepting.clone();
        accepting.push(false);
        Dfa::new(sup.clone(), delta, self.initial, accepting)
    }

    /// All accepted words of length at most `max_len`.
    pub fn enumerate(&self, max_len: usize) -> BTreeSet<Word> {
        let live = self.live();
        let mut out = BTreeSet::new();
        let mut stack: Vec<(usize, Vec<Letter>)> = vec![(self.initial, Vec::new())];
        while let Some((q, w)) = stack.pop() {
            if !live[q] {
                continue;
            }
            if self.accepting[q] {
                out.insert(Word(w.clone()));
            }
            if w.len() == max_len {
                continue;
            }
            for l in 0..self.alphabet.len() {
                let mut next = w.clone();
                next.push(l as Letter);
                stack.push((self.delta[q][l], next));
            }
        }
        out
    }

    /// Renames states by `perm` (`perm[old] = new`).
    pub fn permute_states(&self, perm: &[usize]) -> Result<Dfa> {
        let n = self.delta.len();
        let mut check = perm.to_vec();
        check.sort_unstable();
        if check != (0..n).collect::<Vec<_>>() {
            return Err(Error::InvalidArgument(
                "not a permutation of the states".into(),
            ));
        }
        let mut delta = vec![Vec::new(); n];
        let mut accepting = vec![false; n];
        for q in 0..n {
            delta[perm[q]] = self.delta[q].iter().map(|&t| perm[t]).collect();
            accepting[perm[q]] = self.accepting[q];
        }
        Dfa::new(self.alphabet.clone(), delta, perm[self.initial], accepting)
    }

    /// Text table: `alphabet:`, `states:`, `initial:`, `accepting:` and one
    /// `state: targets...` row per state, targets in alphabet order.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("alphabet: {}\n", self.alphabet.to_line()));
        out.push_str(&self.table_body());
        out
    }

    pub(crate) fn table_body(&self) -> String {
        let name = |q: usize| format!("q{q}");
        let mut out = String::new();
        let states: Vec<String> = (0..self.delta.len()).map(name).collect();
        out.push_str(&format!("states: {}\n", states.join(" ")));
        out.push_str(&format!("initial: {}\n", name(self.initial)));
        let acc: Vec<String> = self.accepting_states().map(name).collect();
        if acc.is_empty() {
            out.push_str("accepting:\n");
        } else {
            out.push_str(&format!("accepting: {}\n", acc.join(" ")));
        }
        for (q, row) in self.delta.iter().enumerate() {
            let targets: Vec<String> = row.iter().map(|&t| name(t)).collect();
            out.push_str(&format!("{}: {}\n", name(q), targets.join(" ")));
        }
        out
    }

    pub fn parse_table(text: &str) -> Result<Dfa> {
        let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
        parse_table_lines(&lines, None).map_err(Error::from)
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn column_of(line: &str, needle: &str) -> usize {
    line.find(needle)
        .map(|i| line[..i].chars().count() + 1)
        .unwrap_or(1)
}

/// Parses table lines; `alphabet` is supplied when the table is embedded in
/// a larger document that already fixes it.
pub(crate) fn parse_table_lines(
    lines: &[(usize, &str)],
    alphabet: Option<&Alphabet>,
) -> std::result::Result<Dfa, ParseError> {
    let mut alpha: Option<Alphabet> = alphabet.cloned();
    let mut states: Option<Vec<String>> = None;
    let mut initial: Option<(usize, String)> = None;
    let mut accepting: Option<(usize, Vec<String>)> = None;
    let mut rows: Vec<(usize, &str, String, Vec<String>)> = Vec::new();
    let mut last_line = 0;
    for &(no, raw) in lines {
        last_line = no;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        let Some(colon) = line.find(':') else {
            return Err(ParseError::new(no, 1, "expected `key: value`"));
        };
        let key = line[..colon].trim();
        let values: Vec<String> = line[colon + 1..]
            .split_whitespace()
            .map(String::from)
            .collect();
        match key {
            "alphabet" => {
                let parsed = Alphabet::new(values.clone())
                    .map_err(|e| ParseError::new(no, column_of(raw, "alphabet"), e.to_string()))?;
                if let Some(given) = alphabet {
                    if *given != parsed {
                        return Err(ParseError::new(
                            no,
                            1,
                            format!("table alphabet {parsed} differs from {given}"),
                        ));
                    }
                }
                alpha = Some(parsed);
            }
            "states" => states = Some(values),
            "initial" => {
                if values.len() != 1 {
                    return Err(ParseError::new(
                        no,
                        colon + 2,
                        "exactly one initial state expected",
                    ));
                }
                initial = Some((no, values[0].clone()));
            }
            "accepting" => accepting = Some((no, values)),
            state => rows.push((no, raw, state.to_string(), values)),
        }
    }
    let alpha =
        alpha.ok_or_else(|| ParseError::new(last_line.max(1), 1, "missing `alphabet:` line"))?;
    let states =
        states.ok_or_else(|| ParseError::new(last_line.max(1), 1, "missing `states:` line"))?;
    if states.is_empty() {
        return Err(ParseError::new(
            last_line.max(1),
            1,
            "automaton has no states",
        ));
    }
    let lookup = |name: &str, no: usize, raw: &str| {
        states.iter().position(|s| s == name).ok_or_else(|| {
            ParseError::new(no, column_of(raw, name), format!("unknown state `{name}`"))
        })
    };
    let mut delta: Vec<Option<Vec<usize>>> = vec![None; states.len()];
    for (no, raw, state, targets) in &rows {
        let q = lookup(state, *no, raw)?;
        if delta[q].is_some() {
            return Err(ParseError::new(
                *no,
                1,
                format!("duplicate row for `{state}`"),
            ));
        }
        if targets.len() != alpha.len() {
            return Err(ParseError::new(
                *no,
                1,
                format!(
                    "row `{state}` has {} targets, expected {}",
                    targets.len(),
                    alpha.len()
                ),
            ));
        }
        let row = targets
            .iter()
            .map(|t| lookup(t, *no, raw))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        delta[q] = Some(row);
    }
    let delta = delta
        .into_iter()
        .enumerate()
        .map(|(q, r)| {
            r.ok_or_else(|| {
                ParseError::new(
                    last_line.max(1),
                    1,
                    format!("missing row for `{}`", states[q]),
                )
            })
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let (ino, iname) =
        initial.ok_or_else(|| ParseError::new(last_line.max(1), 1, "missing `initial:` line"))?;
    let init = states
        .iter()
        .position(|s| *s == iname)
        .ok_or_else(|| ParseError::new(ino, 1, format!("unknown state `{iname}`")))?;
    let mut acc = vec![false; states.len()];
    if let Some((ano, names)) = accepting {
        for n in names {
            let q = states
                .iter()
                .position(|s| *s == n)
                .ok_or_else(|| ParseError::new(ano, 1, format!("unknown state `{n}`")))?;
            acc[q] = true;
        }
    }
    Dfa::new(alpha, delta, init, acc)
        .map_err(|e| ParseError::new(last_line.max(1), 1, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regular::regex::RegexAst;

    fn dfa(re: &str, letters: &str) -> Dfa {
        let a = Alphabet::from_chars(letters).unwrap();
        Dfa::from_nfa(&RegexAst::parse(re, &a).unwrap().to_nfa(&a).unwrap())
    }

    #[test]
    fn empty_language_one_state() {
        let d = dfa("∅", "a").minimize();
        assert_eq!(d.state_count(), 1);
        assert!(d.accepting_states().next().is_none());
    }

    #[test]
    fn even_a_two_states() {
        let d = dfa("(aa)*", "a");
        let m = d.minimize();
        assert_eq!(m.state_count(), 2);
        assert!(m.accepts(&[]).unwrap());
        assert!(!m.accepts(&[0]).unwrap());
    }

    #[test]
    fn b_star_c_three_states() {
        let m = dfa("b*c", "bc").minimize();
        assert_eq!(m.state_count(), 3);
        assert!(m.accepts(&[0, 0, 1]).unwrap());
    }

    #[test]
    fn redundant_even_a_minimises_to_two() {
        // six states cycling on `a`, accepting every even position
        let a = Alphabet::from_chars("a").unwrap();
        let delta = (0..6).map(|q| vec![(q + 1) % 6]).collect();
        let acc = (0..6).map(|q| q % 2 == 0).collect();
        let d = Dfa::new(a, delta, 0, acc).unwrap();
        let m = d.minimize();
        assert_eq!(m.state_count(), 2);
        assert!(m.equivalent(&dfa("(aa)*", "a")).unwrap());
    }

    #[test]
    fn accepts_rejects_foreign_letters() {
        let d = dfa("a*", "a");
        assert!(matches!(d.accepts(&[3]), Err(Error::ForeignLetter(_))));
    }

    #[test]
    fn equivalence_needs_same_alphabet() {
        let d1 = dfa("a*", "a");
        let d2 = dfa("a*", "ab");
        assert!(matches!(
            d1.equivalent(&d2),
            Err(Error::AlphabetMismatch { .. })
        ));
        assert!(!dfa("(aa)*", "a").equivalent(&d1).unwrap());
        assert_eq!(
            dfa("(aa)*", "a").distinguishing_word(&d1).unwrap(),
            Some(Word(vec![0]))
        );
    }

    #[test]
    fn table_round_trip() {
        let d = dfa("b*c", "bc").minimize();
        let text = d.to_table();
        assert_eq!(Dfa::parse_table(&text).unwrap(), d);
    }

    #[test]
    fn table_errors_have_positions() {
        let text = "alphabet: a\nstates: p q\ninitial: p\naccepting: q\np: q\nq: r\n";
        let e = Dfa::parse_table(text).unwrap_err();
        match e {
            Error::Parse(p) => {
                assert_eq!(p.line, 6);
                assert_eq!(p.column, 4);
            }
            other => panic!("{other}"),
        }
        let e = Dfa::parse_table("alphabet: a\nstates: p\ninitial: p\n").unwrap_err();
        assert!(e.to_string().contains("missing row"), "{e}");
    }

    #[test]
    fn from_words_builds_trie() {
        let a = Alphabet::from_chars("ab").unwrap();
        let d = Dfa::from_words(&a, [&[0u8, 1][..], &[1][..]]).unwrap();
        let words: Vec<Word> = d.enumerate(4).into_iter().collect();
        assert_eq!(words, vec![Word(vec![0, 1]), Word(vec![1])]);
    }

    #[test]
    fn extend_alphabet_adds_sink() {
        let d = dfa("a*", "a");
        let big = Alphabet::from_chars("ab").unwrap();
        let e = d.extend_alphabet(&big).unwrap();
        assert!(e.accepts(&[0, 0]).unwrap());
        assert!(!e.accepts(&[0, 1]).unwrap());
    }
}
