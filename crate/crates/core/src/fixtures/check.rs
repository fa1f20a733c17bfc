use std::collections::BTreeSet;
use std::fmt::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{closed_form, WitnessCase, WitnessId};
use crate::contextual::{enumerate_ic, member_ic, selection_in_family_with, ContextualGrammar};
use crate::error::Result;
use crate::regular::{all_words, Word};
use crate::subregular::{ClassifyOptions, FamilyLabel};

#[derive(Debug, Clone)]
pub struct CheckOptions {
    /// Alphabets up to this size are checked exhaustively for membership.
    pub exhaustive_alphabet: usize,
    /// Random words checked on larger alphabets.
    pub samples: usize,
    pub seed: u64,
    pub classify: ClassifyOptions,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            exhaustive_alphabet: 3,
            samples: 100_000,
            seed: 1,
            classify: ClassifyOptions::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Claim,
    Variant,
    ClosedForm,
    Axioms,
    Membership,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    /// A negative claim met no counterexample among the grammars at hand.
    ConsistentAtBound,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "FAIL",
            Outcome::ConsistentAtBound => "consistent at bound",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub kind: CheckKind,
    pub subject: String,
    pub outcome: Outcome,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub id: WitnessId,
    pub n: Option<usize>,
    pub max_len: usize,
    pub words: usize,
    pub checks: Vec<CheckItem>,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != Outcome::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.checks.iter().filter(|c| c.outcome == Outcome::Fail)
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let title = match self.n {
            Some(n) => format!("{} n={n}", self.id),
            None => self.id.to_string(),
        };
        let _ = writeln!(
            out,
            "{title}: {} words up to length {}",
            self.words, self.max_len
        );
        for c in &self.checks {
            let _ = write!(
                out,
                "  {:<20} {:<20} {}",
                c.subject,
                c.outcome.as_str(),
                c.detail
            );
            if let Some(w) = &c.witness {
                let _ = write!(out, " [{w}]");
            }
            out.push('\n');
        }
        out
    }
}

pub fn check_witness(case: &WitnessCase, max_len: usize) -> Result<WitnessReport> {
    check_witness_with(case, max_len, &CheckOptions::default())
}

/// Verifies the positive claims, the variants, the closed form, the
/// agreement of membership with enumeration and, at the given bound only,
/// the negative claims.
pub fn check_witness_with(
    case: &WitnessCase,
    max_len: usize,
    opts: &CheckOptions,
) -> Result<WitnessReport> {
    let g = &case.grammar;
    let v = g.alphabet();
    let fmt = |w: &Word| v.format_word(w);
    let mut checks = Vec::new();
    let mut item = |kind, subject: String, ok: bool, detail: String, witness: Option<String>| {
        checks.push(CheckItem {
            kind,
            subject,
            outcome: if ok { Outcome::Pass } else { Outcome::Fail },
            detail,
            witness,
        })
    };

    for claim in &case.positive {
        let r = selection_in_family_with(case.grammar_for(claim), claim.family, &opts.classify)?;
        let by = match claim.variant {
            None => "grammar".to_string(),
            Some(i) => format!("variant: {}", case.variants[i].description),
        };
        let notes: Vec<String> = r
            .pairs
            .iter()
            .map(|p| format!("pair {} {}", p.pair + 1, p.verdict.as_str()))
            .collect();
        item(
            CheckKind::Claim,
            format!("in IC({})", claim.family),
            r.holds == Some(true),
            format!("{by}; {}", notes.join(", ")),
            None,
        );
    }

    let words = enumerate_ic(g, max_len)?;
    for (i, var) in case.variants.iter().enumerate() {
        let other = enumerate_ic(&var.grammar, max_len)?;
        let diff = words.symmetric_difference(&other).next().map(fmt);
        item(
            CheckKind::Variant,
            format!("variant {}", i + 1),
            diff.is_none(),
            format!("{} generates the same words", var.description),
            diff,
        );
    }

    if case.id.has_closed_form() {
        let expected = closed_form(case.id, case.n, max_len)?;
        let diff = words.symmetric_difference(&expected).next().map(fmt);
        item(
            CheckKind::ClosedForm,
            "closed form".into(),
            diff.is_none(),
            format!("{} words from the formula", expected.len()),
            diff,
        );
    }

    let missing = g
        .axioms()
        .iter()
        .find(|a| a.len() <= max_len && !words.contains(*a));
    item(
        CheckKind::Axioms,
        "axioms".into(),
        missing.is_none(),
        format!("{} axioms", g.axioms().len()),
        missing.map(fmt),
    );

    let (checked, mismatch) = membership_agreement(g, &words, max_len, opts)?;
    item(
        CheckKind::Membership,
        "membership".into(),
        mismatch.is_none(),
        checked,
        mismatch.map(|w| fmt(&w)),
    );

    for &family in &case.negative {
        checks.push(negative(case, family, opts)?);
    }

    Ok(WitnessReport {
        id: case.id,
        n: case.n,
        max_len,
        words: words.len(),
        checks,
    })
}

const DISAGREE: &str = "membership and enumeration disagree";

/// Compares `member_ic` with the enumeration on every word up to
/// `max_len`, or on the enumerated words plus a random sample when the
/// alphabet is large.
fn membership_agreement(
    g: &ContextualGrammar,
    words: &BTreeSet<Word>,
    max_len: usize,
    opts: &CheckOptions,
) -> Result<(String, Option<Word>)> {
    let k = g.alphabet().len();
    let agrees = |w: &Word| -> Result<bool> { Ok(member_ic(g, w)? == words.contains(w)) };
    if k <= opts.exhaustive_alphabet {
        let all = all_words(k, max_len);
        for w in &all {
            if !agrees(w)? {
                return Ok((DISAGREE.into(), Some(w.clone())));
            }
        }
        return Ok((format!("all {} words agree", all.len()), None));
    }
    for w in words {
        if !agrees(w)? {
            return Ok((DISAGREE.into(), Some(w.clone())));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.samples {
        let len = rng.gen_range(0..=max_len);
        let w: Word = (0..len).map(|_| rng.gen_range(0..k) as u8).collect();
        if !agrees(&w)? {
            return Ok((DISAGREE.into(), Some(w)));
        }
    }
    Ok((
        format!(
            "{} generated and {} sampled words agree",
            words.len(),
            opts.samples
        ),
        None,
    ))
}

/// A negative claim `L ∉ IC(F)` would be refuted by one of the grammars at
/// hand having all its selections in `F`.
fn negative(case: &WitnessCase, family: FamilyLabel, opts: &CheckOptions) -> Result<CheckItem> {
    let grammars = std::iter::once(&case.grammar).chain(case.variants.iter().map(|v| &v.grammar));
    let mut undecided = 0;
    for (i, g) in grammars.enumerate() {
        match selection_in_family_with(g, family, &opts.classify)?.holds {
            Some(true) => {
                let which = if i == 0 {
                    "grammar".to_string()
                } else {
                    format!("variant {i}")
                };
                return Ok(CheckItem {
                    kind: CheckKind::Negative,
                    subject: format!("not in IC({family})"),
                    outcome: Outcome::Fail,
                    detail: format!("{which} has all selections in {family}"),
                    witness: None,
                });
            }
            Some(false) => {}
            None => undecided += 1,
        }
    }
    let total = 1 + case.variants.len();
    let detail = if undecided == 0 {
        format!("none of {total} grammars has its selections in {family}")
    } else {
        format!("{undecided} of {total} grammars undecided for {family}, none refutes")
    };
    Ok(CheckItem {
        kind: CheckKind::Negative,
        subject: format!("not in IC({family})"),
        outcome: Outcome::ConsistentAtBound,
        detail,
        witness: None,
    })
}
