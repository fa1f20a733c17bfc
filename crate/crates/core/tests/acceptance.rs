//! Acceptance suite. Prints one PASS or FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::{random_dfa, random_grammar};
use ctxgram::contextual::*;
use ctxgram::fixtures::{build_witness, closed_form, WitnessCase, WitnessId};
use ctxgram::regular::all_words;
use ctxgram::resources::min_states;
use ctxgram::subregular::*;
use ctxgram::{Alphabet, Dfa, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;

fn witness(id: WitnessId, n: Option<usize>) -> WitnessCase {
    build_witness(id, n).unwrap()
}

fn fixture_certification() -> Check {
    use FamilyLabel::*;
    use WitnessId::*;
    let required: [(WitnessId, &[FamilyLabel]); 6] = [
        (L1, &[RlV(1), RlP(2), RegZ(2)]),
        (L2, &[]),
        (L3, &[Mon]),
        (L4, &[Comm, Ord]),
        (L6, &[Fin]),
        (L7, &[Comm]),
    ];
    let mut certified = 0;
    for (id, families) in required {
        let ns: Vec<Option<usize>> = match id.parameter_range() {
            None => vec![None],
            Some((lo, hi)) => (lo..=hi).map(Some).collect(),
        };
        for n in ns {
            let case = witness(id, n);
            for &f in families {
                if !case.positive.iter().any(|c| c.family == f) {
                    return Err(format!("{} makes no claim for {f}", case.title()));
                }
            }
            for claim in &case.positive {
                let r = selection_in_family(case.grammar_for(claim), claim.family)
                    .map_err(|e| e.to_string())?;
                if r.holds != Some(true) {
                    return Err(format!(
                        "{} not certified in IC({})",
                        case.title(),
                        claim.family
                    ));
                }
                certified += 1;
            }
        }
    }
    Ok(format!("{certified} claims certified"))
}

fn closed_forms() -> Check {
    let cases = [
        (WitnessId::L2, None),
        (WitnessId::L4, Some(1)),
        (WitnessId::L6, Some(2)),
        (WitnessId::L7, Some(2)),
    ];
    let mut total = 0;
    for (id, n) in cases {
        let case = witness(id, n);
        let words = enumerate_ic(&case.grammar, 8).map_err(|e| e.to_string())?;
        let formula = closed_form(id, n, 8).map_err(|e| e.to_string())?;
        if words != formula {
            let w = words.symmetric_difference(&formula).next().unwrap();
            return Err(format!(
                "{} differs on {}",
                case.title(),
                case.grammar.alphabet().format_word(w)
            ));
        }
        total += words.len();
    }
    Ok(format!("{total} words across 4 languages"))
}

fn membership_agreement() -> Check {
    let cases = [
        (WitnessId::L1, None),
        (WitnessId::L2, None),
        (WitnessId::L3, Some(1)),
        (WitnessId::L4, Some(1)),
        (WitnessId::L6, Some(2)),
        (WitnessId::L7, Some(2)),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0;
    for (id, n) in cases {
        let case = witness(id, n);
        let g = &case.grammar;
        let words = enumerate_ic(g, 8).map_err(|e| e.to_string())?;
        let k = g.alphabet().len();
        let sample: Vec<Word> = if k <= 3 {
            all_words(k, 8)
        } else {
            let mut s: Vec<Word> = words.iter().cloned().collect();
            s.extend((0..100_000).map(|_| {
                let len = rng.gen_range(0..=8);
                (0..len)
                    .map(|_| rng.gen_range(0..k) as u8)
                    .collect::<Word>()
            }));
            s
        };
        for w in &sample {
            if member_ic(g, w).map_err(|e| e.to_string())? != words.contains(w) {
                return Err(format!(
                    "{} disagrees on {}",
                    case.title(),
                    g.alphabet().format_word(w)
                ));
            }
        }
        checked += sample.len();
    }
    Ok(format!("{checked} words checked"))
}

fn random_automata() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut violations = Vec::new();
    let mut unsettled = 0;
    let count = 1000;
    for _ in 0..count {
        let k = rng.gen_range(1..=3);
        let u = Alphabet::from_chars(&"abc"[..k]).unwrap();
        let d = random_dfa(&mut rng, &u, 6);
        let h = |f: fn(&Dfa, &Alphabet) -> ctxgram::Result<Decision>| f(&d, &u).unwrap().holds;
        let ord = match is_ordered(&d, &u) {
            Ok(dec) => Some(dec.holds),
            Err(e) if e.is_resource_limit() => {
                unsettled += 1;
                None
            }
            Err(e) => return Err(e.to_string()),
        };
        let (mon, fin, nil, comb, def, suf) = (
            h(is_monoidal),
            h(is_finite),
            h(is_nilpotent),
            h(is_combinational),
            h(is_definite),
            h(is_suffix_closed),
        );
        let (comm, circ) = (h(is_commutative), h(is_circular));
        let nc = is_noncounting_capped(&d, &u, 50_000).unwrap().holds;
        let ps = is_power_separating_capped(&d, &u, 50_000).unwrap().holds;
        for (name, ok) in [
            ("FIN=>NIL", !fin || nil),
            ("NIL=>DEF", !nil || def),
            ("COMB=>DEF", !comb || def),
            ("DEF=>ORD", !def || ord == Some(true)),
            ("ORD=>NC", ord != Some(true) || nc),
            ("NC=>PS", !nc || ps),
            ("SUF=>PS", !suf || ps),
            ("COMM=>CIRC", !comm || circ),
            ("MON=>NIL,SUF,COMM", !mon || (nil && suf && comm)),
            ("COMB=>2 states", !comb || min_states(&d) <= 2),
        ] {
            if !ok {
                violations.push(format!("{name}\n{}", d.to_table()));
            }
        }
    }
    match violations.first() {
        None => Ok(format!(
            "{count} automata, 0 violations, {unsettled} order searches exhausted"
        )),
        Some(v) => Err(format!("{} violations, first {v}", violations.len())),
    }
}

fn splits() -> Check {
    let mut checked = 0;
    for (id, n) in [
        (WitnessId::L6, Some(2)),
        (WitnessId::L6, Some(3)),
        (WitnessId::L7, Some(2)),
    ] {
        let g = witness(id, n).grammar;
        let split = split_finite_selection(&g).map_err(|e| e.to_string())?;
        for p in split.pairs() {
            let cert = p.grammar().ok_or("finite split pair without grammar")?;
            if cert.nonterminal_count() != 1 || cert.rule_count() > 1 {
                return Err(format!(
                    "finite certificate with {} rules",
                    cert.rule_count()
                ));
            }
        }
        same_language(&g, &split)?;
        checked += 1;
    }
    let l2 = witness(WitnessId::L2, None);
    for g in std::iter::once(&l2.grammar).chain(l2.variants.iter().map(|v| &v.grammar)) {
        let dec = definite_decompositions(g).map_err(|e| e.to_string())?;
        let split = split_definite_selection(g, &dec).map_err(|e| e.to_string())?;
        for p in split.pairs() {
            let cert = p.grammar().ok_or("definite split pair without grammar")?;
            if cert.nonterminal_count() != 1 {
                return Err(format!(
                    "definite certificate with {} non-terminals",
                    cert.nonterminal_count()
                ));
            }
        }
        same_language(g, &split)?;
        checked += 1;
    }
    Ok(format!("{checked} grammars split, languages unchanged"))
}

fn same_language(a: &ContextualGrammar, b: &ContextualGrammar) -> std::result::Result<(), String> {
    let x = enumerate_ic(a, 8).map_err(|e| e.to_string())?;
    let y = enumerate_ic(b, 8).map_err(|e| e.to_string())?;
    if x != y {
        return Err("split changed the language".into());
    }
    Ok(())
}

fn one_state_automata() -> Check {
    let mut count = 0;
    for k in 1..=3 {
        let u = Alphabet::from_chars(&"abc"[..k]).unwrap();
        for acc in [false, true] {
            let d = Dfa::new(u.clone(), vec![vec![0; k]], 0, vec![acc]).unwrap();
            let words: BTreeSet<Word> = all_words(k, 4).into_iter().collect();
            let accepted = d.enumerate(4);
            if !accepted.is_empty() && accepted != words {
                return Err(format!(
                    "one-state automaton over {k} letters accepts a proper subset"
                ));
            }
            count += 1;
        }
    }
    Ok(format!(
        "{count} automata accept the empty set or everything"
    ))
}

fn pumping() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut samples = 0;
    let mut seed = 0;
    while samples < 100 {
        seed += 1;
        let g = random_grammar(seed);
        let words: Vec<Word> = enumerate_ic(&g, 4)
            .map_err(|e| e.to_string())?
            .into_iter()
            .collect();
        if words.is_empty() {
            continue;
        }
        let w = &words[rng.gen_range(0..words.len())];
        let steps = derive_step(&g, w);
        if steps.is_empty() {
            continue;
        }
        let mut step = steps[rng.gen_range(0..steps.len())].clone();
        let ctx = g.pairs()[step.pair].contexts()[step.context].clone();
        for k in 1..=4 {
            let next = step.target.clone();
            if next.len() != w.len() + k * ctx.len() {
                return Err(format!(
                    "grammar {seed}: length {} after {k} steps",
                    next.len()
                ));
            }
            let again = derive_step(&g, &next).into_iter().find(|s| {
                s.pair == step.pair
                    && s.context == step.context
                    && s.x1_len == step.x1_len + ctx.left.len()
                    && s.x2_len == step.x2_len
            });
            step =
                again.ok_or_else(|| format!("grammar {seed}: occurrence lost after {k} steps"))?;
        }
        samples += 1;
    }
    Ok(format!("{samples} samples pumped four times"))
}

fn l1_words() -> Check {
    let g = witness(WitnessId::L1, None).grammar;
    let v = g.alphabet();
    let word = |k: usize| {
        let s = format!("d{}e{}c{}", "a".repeat(k), "b".repeat(k), "ab".repeat(k));
        v.parse_word(&s).unwrap()
    };
    for k in [2, 4] {
        if !member_ic(&g, &word(k)).map_err(|e| e.to_string())? {
            return Err(format!("rejects {}", v.format_word(&word(k))));
        }
    }
    if member_ic(&g, &word(3)).map_err(|e| e.to_string())? {
        return Err(format!("accepts {}", v.format_word(&word(3))));
    }
    Ok("accepts k=1,2 and rejects the odd word".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check, Duration); 8] = [
        (
            "fixture certification",
            fixture_certification,
            Duration::from_secs(10),
        ),
        (
            "closed forms match enumeration",
            closed_forms,
            Duration::MAX,
        ),
        (
            "membership matches enumeration",
            membership_agreement,
            Duration::from_secs(60),
        ),
        (
            "random automata respect inclusions",
            random_automata,
            Duration::from_secs(60),
        ),
        ("selection splits keep the language", splits, Duration::MAX),
        (
            "one-state automata are trivial",
            one_state_automata,
            Duration::from_secs(1),
        ),
        (
            "re-application at the same occurrence",
            pumping,
            Duration::MAX,
        ),
        ("L1 sample words", l1_words, Duration::MAX),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let result = match result {
            Ok(msg) if took > limit => Err(format!("{msg}, but took over {}s", limit.as_secs())),
            other => other,
        };
        match result {
            Ok(msg) => println!("PASS {} {name}: {msg} ({:.2}s)", i + 1, took.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg} ({:.2}s)", i + 1, took.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
