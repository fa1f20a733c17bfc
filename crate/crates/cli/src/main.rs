use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ctxgram::contextual::{
    derive_step, enumerate_ic, member_trace, selection_in_family_with, ContextualGrammar,
    DerivationStep,
};
use ctxgram::fixtures::{
    build_witness, check_witness_with, hierarchy_with, CheckOptions, Scope, WitnessId,
    MAX_PARAMETER,
};
use ctxgram::regular::compile;
use ctxgram::resources::{
    bounded_min_grammar, state_measure, MeasureKind, MeasureRecord, SearchCaps,
};
use ctxgram::subregular::{classify_with, decide, ClassifyOptions, FamilyLabel, Verdict};
use ctxgram::{Alphabet, Dfa, Error, RegexAst, RightLinearGrammar};

const AFTER_HELP: &str = "\
Exit status:
  0  success
  1  negative answer (word not generated, family check or witness check failed)
  2  usage, input or parse error
  3  a search or enumeration limit was reached

Output is a plain table by default; --format machine prints JSON.";

#[derive(Parser)]
#[command(name = "ctxgram", version, about = "Internal contextual grammars with subregular selection", after_help = AFTER_HELP)]
struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Human, global = true)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Human,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the subregular families of a regular language, or check the
    /// selections of a contextual grammar against one family.
    Classify {
        #[command(flatten)]
        lang: LanguageInput,
        /// Contextual grammar file; requires --family.
        #[arg(long, conflicts_with_all = ["regex", "dfa", "rules"])]
        grammar: Option<PathBuf>,
        #[arg(long)]
        family: Option<FamilyLabel>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Number of states, non-terminals and rules needed for a language.
    Measure {
        #[command(flatten)]
        lang: LanguageInput,
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// All words of the grammar up to a length.
    Enumerate {
        #[arg(long)]
        grammar: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Decide whether a word is generated, with a derivation.
    Member {
        #[arg(long)]
        grammar: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// All single derivation steps from a word.
    Derive {
        #[arg(long)]
        grammar: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// Separating witness grammars and the hierarchy tables.
    Witness {
        #[command(subcommand)]
        action: WitnessAction,
    },
    /// Rewrite a language or grammar in another representation.
    Convert {
        #[command(flatten)]
        lang: LanguageInput,
        /// Contextual grammar file, printed in canonical form.
        #[arg(long, conflicts_with_all = ["regex", "dfa", "rules"])]
        grammar: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Target::MinDfa)]
        to: Target,
    },
}

#[derive(Subcommand)]
enum WitnessAction {
    /// List the witnesses.
    List,
    /// Print a witness grammar in the grammar file format.
    Show {
        id: WitnessId,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run the checks of one witness, or of all with `all`.
    Run {
        id: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Random words checked when the alphabet has more than three letters.
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Print an inclusion table: subregular, ic-structural, ic-resource or merged.
    Hierarchy {
        scope: Scope,
        #[arg(long, default_value_t = 2)]
        bound: usize,
    },
}

/// A regular language given by an expression, automaton table or
/// right-linear grammar.
#[derive(Args)]
struct LanguageInput {
    #[arg(long, group = "language")]
    regex: Option<String>,
    /// Automaton table file.
    #[arg(long, group = "language")]
    dfa: Option<PathBuf>,
    /// Right-linear grammar file.
    #[arg(long, group = "language")]
    rules: Option<PathBuf>,
    /// Letters of the declared alphabet: `abc`, or `a1,a2` for longer names.
    #[arg(long)]
    alphabet: Option<String>,
}

#[derive(Args)]
struct SearchArgs {
    /// Grammar search limits, e.g. `nt=2,rules=4,rhs=3,len=8,budget=2000000`.
    #[arg(long)]
    caps: Option<String>,
}

impl SearchArgs {
    fn options(&self) -> Result<ClassifyOptions, Error> {
        let mut opts = ClassifyOptions::default();
        if let Some(spec) = &self.caps {
            opts.caps = SearchCaps::parse(spec)?;
        }
        Ok(opts)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    States,
    Nonterminals,
    Rules,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    /// Minimal complete automaton table.
    MinDfa,
    /// Automaton table as constructed.
    Dfa,
    /// Right-linear grammar read off the minimal automaton.
    Rules,
}

/// Failure carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_resource_limit() { 3 } else { 2 };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let out = Printer(cli.format);
    match &cli.command {
        Command::Classify {
            lang,
            grammar,
            family,
            search,
        } => classify(&out, lang, grammar.as_ref(), *family, search),
        Command::Measure { lang, kind, search } => measure(&out, lang, *kind, search),
        Command::Enumerate { grammar, max_len } => {
            let g = read_grammar(grammar)?;
            let words: Vec<String> = enumerate_ic(&g, *max_len)?
                .iter()
                .map(|w| g.alphabet().format_word(w))
                .collect();
            out.emit(
                &EnumerationOut {
                    max_len: *max_len,
                    count: words.len(),
                    words: words.clone(),
                },
                || words.iter().map(|w| format!("{w}\n")).collect(),
            );
            Ok(0)
        }
        Command::Member { grammar, word } => {
            let g = read_grammar(grammar)?;
            let w = g.alphabet().parse_word(word)?;
            let trace = member_trace(&g, &w)?;
            let steps: Vec<StepOut> = trace
                .as_ref()
                .map(|(_, s)| s.iter().map(|s| StepOut::new(&g, s)).collect())
                .unwrap_or_default();
            let record = MemberOut {
                word: g.alphabet().format_word(&w),
                member: trace.is_some(),
                axiom: trace.as_ref().map(|(a, _)| g.alphabet().format_word(a)),
                steps,
            };
            out.emit(&record, || {
                let mut s = format!("{}: {}\n", record.word, record.member);
                if let Some(a) = &record.axiom {
                    s.push_str(&format!("  axiom {a}\n"));
                    for st in &record.steps {
                        s.push_str(&format!("  {}\n", st.human()));
                    }
                }
                s
            });
            Ok(if record.member { 0 } else { 1 })
        }
        Command::Derive { grammar, word } => {
            let g = read_grammar(grammar)?;
            g.ensure_valid()?;
            let w = g.alphabet().parse_word(word)?;
            let steps: Vec<StepOut> = derive_step(&g, &w)
                .iter()
                .map(|s| StepOut::new(&g, s))
                .collect();
            out.emit(&steps, || {
                steps.iter().map(|s| format!("{}\n", s.human())).collect()
            });
            Ok(0)
        }
        Command::Witness { action } => witness(&out, action),
        Command::Convert { lang, grammar, to } => {
            if let Some(path) = grammar {
                let g = read_grammar(path)?;
                let diags = g.validate();
                for d in &diags {
                    eprintln!("{d}");
                }
                print!("{}", g.to_text());
                return Ok(if diags.is_empty() { 0 } else { 1 });
            }
            let (d, _, _) = read_language(lang)?;
            let text = match to {
                Target::Dfa => d.to_table(),
                Target::MinDfa => d.minimize().to_table(),
                Target::Rules => RightLinearGrammar::from_dfa(&d.minimize()).to_text(),
            };
            print!("{text}");
            Ok(0)
        }
    }
}

struct Printer(OutputFormat);

impl Printer {
    fn emit<T: Serialize>(&self, value: &T, human: impl FnOnce() -> String) {
        match self.0 {
            OutputFormat::Machine => {
                println!(
                    "{}",
                    serde_json::to_string_pretty(value).expect("serialisable output")
                )
            }
            OutputFormat::Human => print!("{}", human()),
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_grammar(path: &PathBuf) -> Result<ContextualGrammar, Failure> {
    let text = read_file(path)?;
    ContextualGrammar::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn parse_alphabet(spec: &str) -> Result<Alphabet, Error> {
    if spec.contains(',') || spec.contains(char::is_whitespace) {
        Alphabet::new(
            spec.split([',', ' '])
                .map(str::trim)
                .filter(|s| !s.is_empty()),
        )
    } else {
        Alphabet::from_chars(spec)
    }
}

fn read_language(lang: &LanguageInput) -> Result<(Dfa, Alphabet, Option<RegexAst>), Failure> {
    let alphabet = lang.alphabet.as_deref().map(parse_alphabet).transpose()?;
    let need = || {
        alphabet
            .clone()
            .ok_or_else(|| usage("--alphabet is required with --regex and --rules"))
    };
    if let Some(re) = &lang.regex {
        let u = need()?;
        let r = RegexAst::parse(re, &u)?;
        return Ok((compile(&r, &u)?, u, Some(r)));
    }
    if let Some(path) = &lang.rules {
        let u = need()?;
        let g = RightLinearGrammar::parse(&read_file(path)?, &u)?;
        return Ok((g.to_dfa(), u, None));
    }
    if let Some(path) = &lang.dfa {
        let d = Dfa::parse_table(&read_file(path)?)?;
        if let Some(u) = alphabet {
            if &u != d.alphabet() {
                return Err(Error::AlphabetMismatch {
                    left: u.to_string(),
                    right: d.alphabet().to_string(),
                }
                .into());
            }
        }
        let u = d.alphabet().clone();
        return Ok((d, u, None));
    }
    Err(usage("give the language with --regex, --dfa or --rules"))
}

fn classify(
    out: &Printer,
    lang: &LanguageInput,
    grammar: Option<&PathBuf>,
    family: Option<FamilyLabel>,
    search: &SearchArgs,
) -> Outcome {
    let opts = search.options()?;
    if let Some(path) = grammar {
        let f = family.ok_or_else(|| usage("--grammar needs --family"))?;
        let g = read_grammar(path)?;
        let check = selection_in_family_with(&g, f, &opts)?;
        out.emit(&check, || {
            let holds = match check.holds {
                Some(true) => "yes",
                Some(false) => "no",
                None => "unknown",
            };
            let mut s = format!("selections in {f}: {holds}\n");
            for p in &check.pairs {
                s.push_str(&format!(
                    "  pair {}  {:7}  {}\n",
                    p.pair + 1,
                    p.verdict.as_str(),
                    p.evidence.note
                ));
            }
            s
        });
        return Ok(if check.holds == Some(false) { 1 } else { 0 });
    }
    let (d, u, r) = read_language(lang)?;
    let language = lang.regex.clone().or_else(|| {
        lang.dfa
            .as_ref()
            .or(lang.rules.as_ref())
            .map(|p| p.display().to_string())
    });
    if let Some(f) = family {
        let e = decide(&d, &u, r.as_ref(), None, f, &opts)?;
        out.emit(&e, || {
            format!(
                "{}  {}  {}\n",
                e.family,
                e.verdict.as_str(),
                e.evidence.note
            )
        });
        return Ok(if e.verdict == Verdict::No { 1 } else { 0 });
    }
    let opts = ClassifyOptions { language, ..opts };
    let report = classify_with(&d, &u, r.as_ref(), &opts)?;
    out.emit(&report, || report.to_table());
    Ok(0)
}

fn measure(
    out: &Printer,
    lang: &LanguageInput,
    kind: Option<KindArg>,
    search: &SearchArgs,
) -> Outcome {
    let opts = search.options()?;
    let (d, _, _) = read_language(lang)?;
    let kinds = match kind {
        None => vec![
            MeasureKind::States,
            MeasureKind::Nonterminals,
            MeasureKind::Rules,
        ],
        Some(KindArg::States) => vec![MeasureKind::States],
        Some(KindArg::Nonterminals) => vec![MeasureKind::Nonterminals],
        Some(KindArg::Rules) => vec![MeasureKind::Rules],
    };
    let mut records: Vec<MeasureRecord> = Vec::new();
    for k in kinds {
        let m = match k {
            MeasureKind::States => state_measure(&d),
            _ => bounded_min_grammar(&d, k, &opts.caps)?,
        };
        records.push(m.to_record());
    }
    out.emit(&records, || {
        let mut s = String::new();
        for r in &records {
            let value = match r.value.exact() {
                Some(v) => v.to_string(),
                None => format!("{}..{}", r.value.lower(), r.value.upper()),
            };
            let name = match r.kind {
                MeasureKind::States => "states",
                MeasureKind::Nonterminals => "non-terminals",
                MeasureKind::Rules => "rules",
            };
            s.push_str(&format!("{name}: {value}\n"));
            for line in r.certificate.lines() {
                s.push_str(&format!("  {line}\n"));
            }
        }
        s
    });
    Ok(0)
}

fn witness(out: &Printer, action: &WitnessAction) -> Outcome {
    match action {
        WitnessAction::List => {
            let rows: Vec<WitnessRow> = WitnessId::ALL
                .into_iter()
                .map(|id| WitnessRow {
                    id,
                    parameter: id.parameter_range().map(|(lo, hi)| format!("{lo}..={hi}")),
                    closed_form: id.has_closed_form(),
                    description: id.description(),
                })
                .collect();
            out.emit(&rows, || {
                rows.iter()
                    .map(|r| {
                        let n = r
                            .parameter
                            .as_deref()
                            .map(|p| format!("n in {p}"))
                            .unwrap_or_default();
                        format!("{:3} {:10} {}\n", r.id.to_string(), n, r.description)
                    })
                    .collect()
            });
            Ok(0)
        }
        WitnessAction::Show { id, n } => {
            let case = build_witness(*id, *n)?;
            print!("{}", case.grammar.to_text());
            Ok(0)
        }
        WitnessAction::Run {
            id,
            n,
            max_len,
            samples,
            seed,
        } => {
            let opts = CheckOptions {
                samples: *samples,
                seed: *seed,
                ..CheckOptions::default()
            };
            let cases: Vec<(WitnessId, Option<usize>)> = if id.eq_ignore_ascii_case("all") {
                if n.is_some() {
                    return Err(usage("--n cannot be combined with `all`"));
                }
                WitnessId::ALL.into_iter().map(|id| (id, None)).collect()
            } else {
                vec![(id.parse()?, *n)]
            };
            let mut reports = Vec::new();
            for (id, n) in cases {
                if n.is_some_and(|n| n > MAX_PARAMETER) {
                    return Err(usage(format!("n is limited to {MAX_PARAMETER}")));
                }
                reports.push(check_witness_with(&build_witness(id, n)?, *max_len, &opts)?);
            }
            out.emit(&reports, || {
                reports
                    .iter()
                    .map(|r| r.to_table())
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(if reports.iter().all(|r| r.passed()) {
                0
            } else {
                1
            })
        }
        WitnessAction::Hierarchy { scope, bound } => {
            let t = hierarchy_with(*scope, *bound);
            out.emit(&t, || t.to_text());
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct EnumerationOut {
    max_len: usize,
    count: usize,
    words: Vec<String>,
}

#[derive(Serialize)]
struct MemberOut {
    word: String,
    member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    axiom: Option<String>,
    steps: Vec<StepOut>,
}

#[derive(Serialize)]
struct StepOut {
    pair: usize,
    context: usize,
    x1: String,
    x2: String,
    x3: String,
    u: String,
    v: String,
    source: String,
    target: String,
}

impl StepOut {
    fn new(g: &ContextualGrammar, s: &DerivationStep) -> Self {
        let v = g.alphabet();
        let c = &g.pairs()[s.pair].contexts()[s.context];
        let f = |w: &[u8]| v.format_word(w);
        StepOut {
            pair: s.pair + 1,
            context: s.context + 1,
            x1: f(s.x1()),
            x2: f(s.x2()),
            x3: f(s.x3()),
            u: f(&c.left),
            v: f(&c.right),
            source: f(&s.source),
            target: f(&s.target),
        }
    }

    fn human(&self) -> String {
        format!(
            "{} => {}  (x1={} x2={} x3={}; pair {}, context ({}, {}))",
            self.source, self.target, self.x1, self.x2, self.x3, self.pair, self.u, self.v
        )
    }
}

#[derive(Serialize)]
struct WitnessRow {
    id: WitnessId,
    parameter: Option<String>,
    closed_form: bool,
    description: &'static str,
}
