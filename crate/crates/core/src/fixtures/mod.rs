//! Separating witness grammars, their closed forms and the hierarchy
//! tables between the families.

mod check;
mod hierarchy;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::contextual::{Context, ContextualGrammar, SelectionPair};
use crate::error::{Error, Result};
use crate::regular::{all_words, Alphabet, RegexAst, RightLinearGrammar, Word};
use crate::subregular::FamilyLabel;

pub use check::{
    check_witness, check_witness_with, CheckItem, CheckKind, CheckOptions, Outcome, WitnessReport,
};
pub use hierarchy::{hierarchy, hierarchy_with, EdgeStatus, HierarchyEdge, HierarchyTable, Scope};

/// Largest parameter accepted by [`build_witness`].
pub const MAX_PARAMETER: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WitnessId {
    L1,
    L2,
    L3,
    L4,
    L6,
    L7,
}

impl WitnessId {
    pub const ALL: [WitnessId; 6] = [
        WitnessId::L1,
        WitnessId::L2,
        WitnessId::L3,
        WitnessId::L4,
        WitnessId::L6,
        WitnessId::L7,
    ];

    /// Admissible range of `n`, or `None` for unparameterised witnesses.
    pub fn parameter_range(self) -> Option<(usize, usize)> {
        match self {
            WitnessId::L1 | WitnessId::L2 => None,
            WitnessId::L3 | WitnessId::L4 => Some((1, MAX_PARAMETER)),
            WitnessId::L6 | WitnessId::L7 => Some((2, MAX_PARAMETER)),
        }
    }

    pub fn has_closed_form(self) -> bool {
        matches!(
            self,
            WitnessId::L2 | WitnessId::L4 | WitnessId::L6 | WitnessId::L7
        )
    }

    pub fn description(self) -> &'static str {
        match self {
            WitnessId::L1 => "selection b*c with (ab,ab) and (aa)* with (d,e) from axiom c",
            WitnessId::L2 => "c^n a c^m b c^(n+m) and c^n b c^n a",
            WitnessId::L3 => "monoidal selections over 4n letters",
            WitnessId::L4 => "a^p0 b ... a^pn b a^p0 b ... a^pn with all p_i >= 1",
            WitnessId::L6 => "(a1...an)^+ together with all words of length n-1",
            WitnessId::L7 => "words of length below n or divisible by n",
        }
    }
}

impl fmt::Display for WitnessId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for WitnessId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WitnessId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown witness `{s}` (expected L1, L2, L3, L4, L6 or L7)"
                ))
            })
    }
}

/// A grammar for the same language, used to certify some of the claims.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variant {
    pub description: String,
    pub grammar: ContextualGrammar,
}

/// `L ∈ IC(family)`, certified by the main grammar (`variant == None`) or
/// by one of the variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub family: FamilyLabel,
    pub variant: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCase {
    pub id: WitnessId,
    pub n: Option<usize>,
    pub grammar: ContextualGrammar,
    pub variants: Vec<Variant>,
    pub positive: Vec<Claim>,
    /// Families `F` with `L ∉ IC(F)`; only checked against the grammars at hand.
    pub negative: Vec<FamilyLabel>,
}

impl WitnessCase {
    pub fn grammar_for(&self, claim: &Claim) -> &ContextualGrammar {
        match claim.variant {
            None => &self.grammar,
            Some(i) => &self.variants[i].grammar,
        }
    }

    pub fn title(&self) -> String {
        match self.n {
            Some(n) => format!("{} (n = {n})", self.id),
            None => self.id.to_string(),
        }
    }
}

fn resolve_n(id: WitnessId, n: Option<usize>) -> Result<Option<usize>> {
    match (id.parameter_range(), n) {
        (None, None) => Ok(None),
        (None, Some(_)) => Err(Error::InvalidArgument(format!("{id} takes no parameter"))),
        (Some((lo, _)), None) => Ok(Some(lo)),
        (Some((lo, hi)), Some(n)) if (lo..=hi).contains(&n) => Ok(Some(n)),
        (Some((lo, hi)), Some(n)) => Err(Error::InvalidArgument(format!(
            "{id} needs {lo} <= n <= {hi}, got {n}"
        ))),
    }
}

fn letters(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn sub(v: &Alphabet, names: &[String]) -> Alphabet {
    debug_assert!(names.iter().all(|s| v.letter(s).is_some()));
    Alphabet::new(names.iter().cloned()).expect("distinct names")
}

fn word(v: &Alphabet, text: &str) -> Word {
    v.parse_word(text).expect("fixture word")
}

fn regex_pair(u: &Alphabet, re: &str, contexts: Vec<Context>) -> SelectionPair {
    let r = RegexAst::parse(re, u).expect("fixture expression");
    SelectionPair::from_regex(u.clone(), r, contexts).expect("fixture expression")
}

fn grammar_pair(u: &Alphabet, rules: &str, contexts: Vec<Context>) -> SelectionPair {
    let g = RightLinearGrammar::parse(rules, u).expect("fixture grammar");
    SelectionPair::from_grammar(g, contexts)
}

/// `(x1|...|xk)`, one alternative per symbol.
fn any_of(names: &[String]) -> String {
    format!("({})", names.join("|"))
}

/// Builds the witness grammar `id` with parameter `n` (defaulting to the
/// smallest admissible value).
pub fn build_witness(id: WitnessId, n: Option<usize>) -> Result<WitnessCase> {
    use FamilyLabel::*;
    let n = resolve_n(id, n)?;
    let claim = |family| Claim {
        family,
        variant: None,
    };
    let case = match id {
        WitnessId::L1 => {
            let v = Alphabet::from_chars("abcde")?;
            let bc = Alphabet::from_chars("bc")?;
            let a = Alphabet::from_chars("a")?;
            let c1 = vec![Context::new(word(&v, "ab"), word(&v, "ab"))];
            let c2 = vec![Context::new(word(&v, "d"), word(&v, "e"))];
            let s2 = grammar_pair(&a, "S -> aa S\nS -> @\n", c2);
            let grammar = ContextualGrammar::new(
                v.clone(),
                vec![
                    grammar_pair(&bc, "S -> b S\nS -> c\n", c1.clone()),
                    s2.clone(),
                ],
                vec![word(&v, "c")],
            );
            let variant = ContextualGrammar::new(
                v.clone(),
                vec![regex_pair(&bc, "b*c(b*c)*", c1), s2],
                vec![word(&v, "c")],
            );
            WitnessCase {
                id,
                n,
                grammar,
                variants: vec![Variant {
                    description: "first selection widened to (b*c)^+".into(),
                    grammar: variant,
                }],
                positive: vec![
                    claim(RlV(1)),
                    claim(RlP(2)),
                    Claim {
                        family: RegZ(2),
                        variant: Some(0),
                    },
                ],
                negative: vec![Ps],
            }
        }
        WitnessId::L2 => {
            let v = Alphabet::from_chars("abc")?;
            let ctx = vec![Context::new(word(&v, "c"), word(&v, "c"))];
            let axioms = vec![word(&v, "ab"), word(&v, "ba")];
            let grammar = ContextualGrammar::new(
                v.clone(),
                vec![regex_pair(
                    &Alphabet::from_chars("ab")?,
                    "ab|b",
                    ctx.clone(),
                )],
                axioms.clone(),
            );
            let variant =
                ContextualGrammar::new(v.clone(), vec![regex_pair(&v, "(a|b|c)*b", ctx)], axioms);
            WitnessCase {
                id,
                n,
                grammar,
                variants: vec![Variant {
                    description: "combinational selection V*b".into(),
                    grammar: variant,
                }],
                positive: vec![
                    claim(RlV(1)),
                    claim(RlP(2)),
                    Claim {
                        family: RegZ(2),
                        variant: Some(0),
                    },
                ],
                negative: vec![Circ, Suf],
            }
        }
        WitnessId::L3 => {
            let k = n.unwrap();
            let (a, b, c, d) = (
                letters("a", k),
                letters("b", k),
                letters("c", k),
                letters("d", k),
            );
            let v = Alphabet::new([&a[..], &b[..], &c[..], &d[..]].concat())?;
            let cross = |x: &[String], y: &[String]| -> Vec<Context> {
                x.iter()
                    .flat_map(|l| y.iter().map(|r| Context::new(word(&v, l), word(&v, r))))
                    .collect()
            };
            let pairs = vec![
                regex_pair(&sub(&v, &b), &format!("{}*", any_of(&b)), cross(&a, &c)),
                regex_pair(&sub(&v, &c), &format!("{}*", any_of(&c)), cross(&b, &d)),
            ];
            let mut axioms = Vec::new();
            for x in &a {
                for y in &b {
                    for z in &c {
                        for t in &d {
                            axioms.push(word(&v, &format!("{x}{y}{z}{t}")));
                        }
                    }
                }
            }
            WitnessCase {
                id,
                n,
                grammar: ContextualGrammar::new(v, pairs, axioms),
                variants: Vec::new(),
                positive: vec![claim(Mon)],
                negative: vec![RlP(k)],
            }
        }
        WitnessId::L4 => {
            let k = n.unwrap();
            let v = Alphabet::from_chars("ab")?;
            let sel = "(a*ba*)".repeat(k + 1);
            let axiom = format!("{}a", "ab".repeat(2 * k + 1));
            let ctx = vec![Context::new(word(&v, "a"), word(&v, "a"))];
            WitnessCase {
                id,
                n,
                grammar: ContextualGrammar::new(
                    v.clone(),
                    vec![regex_pair(&v, &sel, ctx)],
                    vec![word(&v, &axiom)],
                ),
                variants: Vec::new(),
                positive: vec![claim(Comm), claim(Ord)],
                negative: vec![RlV(k)],
            }
        }
        WitnessId::L6 => {
            let k = n.unwrap();
            let names = letters("a", k);
            let v = Alphabet::new(names.clone())?;
            let block = word(&v, &names.concat());
            let ctx = vec![Context::new(Word::empty(), block.clone())];
            let mut axioms = all_words(k, k - 1)
                .into_iter()
                .filter(|w| w.len() == k - 1)
                .collect::<Vec<_>>();
            axioms.push(block);
            WitnessCase {
                id,
                n,
                grammar: ContextualGrammar::new(
                    v.clone(),
                    vec![regex_pair(&v, &names.concat(), ctx)],
                    axioms,
                ),
                variants: Vec::new(),
                positive: vec![claim(Fin)],
                negative: vec![RegZ(k)],
            }
        }
        WitnessId::L7 => {
            let k = n.unwrap();
            let names = letters("a", k);
            let v = Alphabet::new(names.clone())?;
            let blocks: Vec<Word> = all_words(k, k)
                .into_iter()
                .filter(|w| w.len() == k)
                .collect();
            let ctx = blocks
                .iter()
                .map(|w| Context::new(Word::empty(), w.clone()))
                .collect();
            let sel = any_of(&names).repeat(k);
            let axioms = all_words(k, k);
            WitnessCase {
                id,
                n,
                grammar: ContextualGrammar::new(v.clone(), vec![regex_pair(&v, &sel, ctx)], axioms),
                variants: Vec::new(),
                positive: vec![claim(Comm)],
                negative: vec![RegZ(k)],
            }
        }
    };
    debug_assert!(case.grammar.validate().is_empty());
    Ok(case)
}

/// Words of length at most `max_len` of the witness language, computed
/// from its defining formula. The words use the alphabet of
/// [`build_witness`] with the same parameter.
pub fn closed_form(id: WitnessId, n: Option<usize>, max_len: usize) -> Result<BTreeSet<Word>> {
    let n = resolve_n(id, n)?;
    let mut out = BTreeSet::new();
    match id {
        WitnessId::L1 | WitnessId::L3 => {
            return Err(Error::InvalidArgument(format!("{id} has no closed form")));
        }
        WitnessId::L2 => {
            let (a, b, c) = (0, 1, 2);
            let cs = |k: usize| std::iter::repeat_n(c, k);
            for s in 0..=max_len / 2 {
                for i in 0..=s {
                    let w: Word = cs(i)
                        .chain([a])
                        .chain(cs(s - i))
                        .chain([b])
                        .chain(cs(s))
                        .collect();
                    if w.len() <= max_len {
                        out.insert(w);
                    }
                }
                let w: Word = cs(s).chain([b]).chain(cs(s)).chain([a]).collect();
                if w.len() <= max_len {
                    out.insert(w);
                }
            }
        }
        WitnessId::L4 => {
            let k = n.unwrap();
            // a^p0 b ... a^pk b a^p0 b ... a^pk has length 2 Σ p_i + 2k + 1
            let fixed = 2 * k + 1;
            if max_len >= fixed + 2 * (k + 1) {
                let budget = (max_len - fixed) / 2;
                let mut p = vec![1; k + 1];
                compositions(&mut p, 0, budget, &mut |p| {
                    let half: Vec<u8> = p
                        .iter()
                        .enumerate()
                        .flat_map(|(i, &e)| std::iter::repeat_n(0, e).chain((i < k).then_some(1)))
                        .collect();
                    out.insert(Word::concat(&[&half[..], &[1], &half[..]]));
                });
            }
        }
        WitnessId::L6 => {
            let k = n.unwrap();
            let block: Vec<u8> = (0..k as u8).collect();
            for w in all_words(k, max_len.min(k - 1)) {
                if w.len() == k - 1 {
                    out.insert(w);
                }
            }
            for r in 1..=max_len / k {
                out.insert(Word(block.clone()).repeat(r));
            }
        }
        WitnessId::L7 => {
            let k = n.unwrap();
            out.extend(
                all_words(k, max_len)
                    .into_iter()
                    .filter(|w| w.len() < k || w.len() % k == 0),
            );
        }
    }
    Ok(out)
}

/// Calls `f` on every `p ≥ 1` (componentwise, starting from `p`) with
/// `Σ p ≤ budget`.
fn compositions(p: &mut Vec<usize>, i: usize, budget: usize, f: &mut impl FnMut(&[usize])) {
    if i == p.len() {
        if p.iter().sum::<usize>() <= budget {
            f(p);
        }
        return;
    }
    let rest: usize = p[i + 1..].len();
    let used: usize = p[..i].iter().sum();
    let mut e = 1;
    while used + e + rest <= budget {
        p[i] = e;
        compositions(p, i + 1, budget, f);
        e += 1;
    }
    p[i] = 1;
}

#[cfg(test)]
mod tests;
