use serde::{Deserialize, Serialize};

use super::label::{subregular_edges, FamilyLabel};
use super::*;
use crate::resources::{self, MeasureKind, MeasureRecord, SearchCaps};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        }
    }
}

/// [`Evidence`] with its words spelled out over the declared alphabet.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvidenceRecord {
    pub note: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub members: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub non_members: Vec<String>,
}

impl EvidenceRecord {
    fn from_evidence(e: &Evidence, u: &Alphabet) -> Self {
        EvidenceRecord {
            note: e.note.clone(),
            members: e.members.iter().map(|w| u.format_word(w)).collect(),
            non_members: e.non_members.iter().map(|w| u.format_word(w)).collect(),
        }
    }

    fn note(note: impl Into<String>) -> Self {
        EvidenceRecord {
            note: note.into(),
            ..EvidenceRecord::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub family: FamilyLabel,
    pub verdict: Verdict,
    pub evidence: EvidenceRecord,
}

/// Verdicts for one language over its declared alphabet, structural
/// families first, then resource families with small parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub language: String,
    pub alphabet: Vec<String>,
    pub entries: Vec<ReportEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub measures: Vec<MeasureRecord>,
}

impl FamilyReport {
    pub fn verdict(&self, family: FamilyLabel) -> Option<Verdict> {
        self.entries
            .iter()
            .find(|e| e.family == family)
            .map(|e| e.verdict)
    }

    pub fn entry(&self, family: FamilyLabel) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| e.family == family)
    }

    /// Implication edges `X -> Y` with `X` yes and `Y` no.
    pub fn violations(&self) -> Vec<(FamilyLabel, FamilyLabel)> {
        subregular_edges()
            .into_iter()
            .filter(|&(x, y)| {
                self.verdict(x) == Some(Verdict::Yes) && self.verdict(y) == Some(Verdict::No)
            })
            .collect()
    }

    /// Aligned plain-text table.
    pub fn to_table(&self) -> String {
        let width = self
            .entries
            .iter()
            .map(|e| e.family.to_string().len())
            .max()
            .unwrap_or(0);
        let mut out = format!(
            "language: {}\nalphabet: {}\n",
            self.language,
            self.alphabet.join(" ")
        );
        for e in &self.entries {
            out.push_str(&format!(
                "{:width$}  {:7}  {}",
                e.family.to_string(),
                e.verdict.as_str(),
                e.evidence.note
            ));
            if !e.evidence.members.is_empty() {
                out.push_str(&format!("; in L: {}", e.evidence.members.join(" ")));
            }
            if !e.evidence.non_members.is_empty() {
                out.push_str(&format!("; not in L: {}", e.evidence.non_members.join(" ")));
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct ClassifyOptions {
    pub language: Option<String>,
    /// Run the grammar searches for the non-terminal and rule measures.
    pub resources: bool,
    pub caps: SearchCaps,
    pub monoid_cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            language: None,
            resources: true,
            caps: SearchCaps::default(),
            monoid_cap: crate::regular::DEFAULT_MONOID_CAP,
        }
    }
}

/// Runs every predicate on `d` relative to `u`, with default options.
pub fn classify(d: &Dfa, u: &Alphabet, r: Option<&RegexAst>) -> Result<FamilyReport> {
    classify_with(d, u, r, &ClassifyOptions::default())
}

pub fn classify_with(
    d: &Dfa,
    u: &Alphabet,
    r: Option<&RegexAst>,
    opts: &ClassifyOptions,
) -> Result<FamilyReport> {
    let m = prepare(d, u)?;
    let mut entries = Vec::new();
    let push =
        |entries: &mut Vec<ReportEntry>, family: FamilyLabel, decision: Decision| -> Result<()> {
            if !decision.evidence.check(&m) {
                return Err(Error::Inconsistent(format!(
                    "evidence for {family} does not match the language"
                )));
            }
            entries.push(ReportEntry {
                family,
                verdict: Verdict::from_bool(decision.holds),
                evidence: EvidenceRecord::from_evidence(&decision.evidence, u),
            });
            Ok(())
        };
    push(&mut entries, FamilyLabel::Mon, is_monoidal(&m, u)?)?;
    push(&mut entries, FamilyLabel::Fin, is_finite(&m, u)?)?;
    push(&mut entries, FamilyLabel::Nil, is_nilpotent(&m, u)?)?;
    push(&mut entries, FamilyLabel::Comb, is_combinational(&m, u)?)?;
    push(&mut entries, FamilyLabel::Def, is_definite(&m, u)?)?;
    push(&mut entries, FamilyLabel::Suf, is_suffix_closed(&m, u)?)?;
    let ord = is_ordered(&m, u);
    push(&mut entries, FamilyLabel::Comm, is_commutative(&m, u)?)?;
    push(&mut entries, FamilyLabel::Circ, is_circular(&m, u)?)?;
    for (family, result) in [
        (FamilyLabel::Ord, ord),
        (
            FamilyLabel::Nc,
            is_noncounting_capped(&m, u, opts.monoid_cap),
        ),
        (
            FamilyLabel::Ps,
            is_power_separating_capped(&m, u, opts.monoid_cap),
        ),
    ] {
        match result {
            Ok(dec) => push(&mut entries, family, dec)?,
            Err(e) if e.is_resource_limit() => entries.push(ReportEntry {
                family,
                verdict: Verdict::Unknown,
                evidence: EvidenceRecord::note(e.to_string()),
            }),
            Err(e) => return Err(e),
        }
    }
    let uf = match r.map(is_union_free_syntactic) {
        Some(Some(true)) => ReportEntry {
            family: FamilyLabel::Uf,
            verdict: Verdict::Yes,
            evidence: EvidenceRecord::note("expression uses only product and star"),
        },
        Some(_) => ReportEntry {
            family: FamilyLabel::Uf,
            verdict: Verdict::Unknown,
            evidence: EvidenceRecord::note("expression contains a union or the empty set"),
        },
        None => ReportEntry {
            family: FamilyLabel::Uf,
            verdict: Verdict::Unknown,
            evidence: EvidenceRecord::note("no expression given"),
        },
    };
    entries.push(uf);
    entries.push(ReportEntry {
        family: FamilyLabel::Reg,
        verdict: Verdict::Yes,
        evidence: EvidenceRecord::note("given by a finite automaton"),
    });

    let states = resources::state_measure(&m);
    let z = states.value.upper();
    for n in 1..=2 {
        entries.push(ReportEntry {
            family: FamilyLabel::RegZ(n),
            verdict: Verdict::from_bool(z <= n),
            evidence: EvidenceRecord::note(format!("minimal complete automaton has {z} states")),
        });
    }
    let mut measures = vec![states.to_record()];
    if opts.resources {
        for (kind, label, range) in [
            (
                MeasureKind::Nonterminals,
                FamilyLabel::RlV as fn(usize) -> FamilyLabel,
                1..=2,
            ),
            (
                MeasureKind::Rules,
                FamilyLabel::RlP as fn(usize) -> FamilyLabel,
                1..=4,
            ),
        ] {
            match resources::bounded_min_grammar(&m, kind, &opts.caps) {
                Ok(measure) => {
                    let v = measure.value;
                    let shown = match v.exact() {
                        Some(x) => format!("{x}"),
                        None => format!("between {} and {}", v.lower(), v.upper()),
                    };
                    for n in range {
                        let verdict = match v.at_most(n) {
                            Some(b) => Verdict::from_bool(b),
                            None => Verdict::Unknown,
                        };
                        entries.push(ReportEntry {
                            family: label(n),
                            verdict,
                            evidence: EvidenceRecord::note(format!("measure is {shown}")),
                        });
                    }
                    measures.push(measure.to_record());
                }
                Err(e) if e.is_resource_limit() => {
                    for n in range {
                        entries.push(ReportEntry {
                            family: label(n),
                            verdict: Verdict::Unknown,
                            evidence: EvidenceRecord::note(e.to_string()),
                        });
                    }
                }
                Err(e) => return Err(e),
            }
        }
    }

    entries.sort_by_key(|e| e.family);
    let report = FamilyReport {
        language: opts
            .language
            .clone()
            .or_else(|| r.map(|r| r.display(u)))
            .unwrap_or_else(|| "automaton".into()),
        alphabet: u.symbols().to_vec(),
        entries,
        measures,
    };
    if let Some(&(x, y)) = report.violations().first() {
        return Err(Error::Inconsistent(format!(
            "{x} holds but {y} does not, contradicting {x} ⊆ {y}"
        )));
    }
    Ok(report)
}

/// Verdict for a single family. A right-linear grammar for the language,
/// when known, serves as an upper-bound certificate for the grammar
/// measures before any search is run.
pub fn decide(
    d: &Dfa,
    u: &Alphabet,
    r: Option<&RegexAst>,
    g: Option<&RightLinearGrammar>,
    family: FamilyLabel,
    opts: &ClassifyOptions,
) -> Result<ReportEntry> {
    let m = prepare(d, u)?;
    let entry = |verdict: Verdict, evidence: EvidenceRecord| ReportEntry {
        family,
        verdict,
        evidence,
    };
    let from = |dec: Decision| -> Result<ReportEntry> {
        if !dec.evidence.check(&m) {
            return Err(Error::Inconsistent(format!(
                "evidence for {family} does not match the language"
            )));
        }
        Ok(entry(
            Verdict::from_bool(dec.holds),
            EvidenceRecord::from_evidence(&dec.evidence, u),
        ))
    };
    let settle = |res: Result<Decision>| -> Result<ReportEntry> {
        match res {
            Ok(dec) => from(dec),
            Err(e) if e.is_resource_limit() => {
                Ok(entry(Verdict::Unknown, EvidenceRecord::note(e.to_string())))
            }
            Err(e) => Err(e),
        }
    };
    match family {
        FamilyLabel::Mon => from(is_monoidal(&m, u)?),
        FamilyLabel::Fin => from(is_finite(&m, u)?),
        FamilyLabel::Nil => from(is_nilpotent(&m, u)?),
        FamilyLabel::Comb => from(is_combinational(&m, u)?),
        FamilyLabel::Def => from(is_definite(&m, u)?),
        FamilyLabel::Suf => from(is_suffix_closed(&m, u)?),
        FamilyLabel::Ord => settle(is_ordered(&m, u)),
        FamilyLabel::Comm => from(is_commutative(&m, u)?),
        FamilyLabel::Circ => from(is_circular(&m, u)?),
        FamilyLabel::Nc => settle(is_noncounting_capped(&m, u, opts.monoid_cap)),
        FamilyLabel::Ps => settle(is_power_separating_capped(&m, u, opts.monoid_cap)),
        FamilyLabel::Uf => Ok(match r.map(is_union_free_syntactic) {
            Some(Some(true)) => entry(
                Verdict::Yes,
                EvidenceRecord::note("expression uses only product and star"),
            ),
            _ => entry(
                Verdict::Unknown,
                EvidenceRecord::note("no union-free expression at hand"),
            ),
        }),
        FamilyLabel::Reg => Ok(entry(
            Verdict::Yes,
            EvidenceRecord::note("given by a finite automaton"),
        )),
        FamilyLabel::RegZ(n) => {
            let z = resources::min_states(&m);
            Ok(entry(
                Verdict::from_bool(z <= n),
                EvidenceRecord::note(format!("minimal complete automaton has {z} states")),
            ))
        }
        FamilyLabel::RlV(n) | FamilyLabel::RlP(n) => {
            let kind = if matches!(family, FamilyLabel::RlV(_)) {
                MeasureKind::Nonterminals
            } else {
                MeasureKind::Rules
            };
            if let Some(g) = g {
                let (v, p) = resources::count_resources(g);
                let own = if kind == MeasureKind::Nonterminals {
                    v
                } else {
                    p
                };
                if own <= n && g.to_dfa().equivalent(&m)? {
                    return Ok(entry(
                        Verdict::Yes,
                        EvidenceRecord::note(format!(
                            "given grammar has {v} non-terminals and {p} rules"
                        )),
                    ));
                }
            }
            match resources::bounded_min_grammar(&m, kind, &opts.caps) {
                Ok(measure) => {
                    let v = measure.value;
                    let verdict = v.at_most(n).map_or(Verdict::Unknown, Verdict::from_bool);
                    let note = match v.exact() {
                        Some(x) => format!("measure is {x}"),
                        None => format!("measure is between {} and {}", v.lower(), v.upper()),
                    };
                    Ok(entry(verdict, EvidenceRecord::note(note)))
                }
                Err(e) if e.is_resource_limit() => {
                    Ok(entry(Verdict::Unknown, EvidenceRecord::note(e.to_string())))
                }
                Err(e) => Err(e),
            }
        }
    }
}
