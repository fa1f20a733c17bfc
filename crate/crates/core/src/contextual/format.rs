//! Text format for contextual grammars.
//!
//! ```text
//! alphabet a b c d e
//! axioms c
//! pair
//!   subalphabet a
//!   regex (aa)*
//!   context d e
//! end
//! pair
//!   subalphabet a b c
//!   grammar
//!     S -> ab S
//!     S -> c
//!   end
//!   context ab ab
//! end
//! ```
//!
//! A selection is a `regex` line, a `grammar ... end` block of right-linear
//! rules or a `dfa ... end` block in the automaton table format without the
//! `alphabet:` line. `@` denotes the empty word and `#` starts a comment.

use std::fmt::Write;

use super::{Context, ContextualGrammar, SelectionPair, SelectionSource};
use crate::error::{ParseError, Result};
use crate::regular::{parse_rule_lines, parse_table_lines, Alphabet, RegexAst, Word};

pub(crate) fn serialize(g: &ContextualGrammar) -> String {
    let v = &g.alphabet;
    let mut out = String::new();
    let _ = writeln!(out, "alphabet {}", v.to_line());
    let axioms: Vec<String> = g.axioms.iter().map(|w| v.format_word(w)).collect();
    let _ = writeln!(out, "axioms {}", axioms.join(" "));
    for p in &g.pairs {
        out.push_str("pair\n");
        let _ = writeln!(out, "  subalphabet {}", p.alphabet.to_line());
        match &p.source {
            SelectionSource::Regex(r) => {
                let _ = writeln!(out, "  regex {}", r.display(&p.alphabet));
            }
            SelectionSource::Grammar(gr) => {
                out.push_str("  grammar\n");
                for line in gr.to_text().lines() {
                    let _ = writeln!(out, "    {line}");
                }
                out.push_str("  end\n");
            }
            SelectionSource::Table => {
                out.push_str("  dfa\n");
                for line in p.selection.table_body().lines() {
                    let _ = writeln!(out, "    {line}");
                }
                out.push_str("  end\n");
            }
        }
        for c in &p.contexts {
            let _ = writeln!(
                out,
                "  context {} {}",
                v.format_word(&c.left),
                v.format_word(&c.right)
            );
        }
        out.push_str("end\n");
    }
    out
}

fn strip(line: &str) -> &str {
    match line.find('#') {
        Some(i) => line[..i].trim(),
        None => line.trim(),
    }
}

/// 1-based column of the first non-blank character.
fn indent(raw: &str) -> usize {
    raw.chars().take_while(|c| c.is_whitespace()).count() + 1
}

/// Splits `keyword rest` and returns the column where `rest` starts.
fn split_key(raw: &str) -> (&str, &str, usize) {
    let body = strip(raw);
    let (key, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
    let rest = rest.trim_start();
    if rest.is_empty() {
        return (key, rest, indent(raw) + key.chars().count());
    }
    let offset = rest.as_ptr() as usize - raw.as_ptr() as usize;
    (key, rest, raw[..offset].chars().count() + 1)
}

fn parse_words(
    v: &Alphabet,
    text: &str,
    no: usize,
    col: usize,
) -> std::result::Result<Vec<Word>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for tok in text.split_whitespace() {
        let at = text[offset..].find(tok).unwrap() + offset;
        out.push(v.parse_word_at(tok, no, col + text[..at].chars().count())?);
        offset = at + tok.len();
    }
    Ok(out)
}

struct PairDraft {
    line: usize,
    alphabet: Option<Alphabet>,
    selection: Option<SelectionPair>,
    contexts: Vec<Context>,
}

pub(crate) fn parse(text: &str) -> Result<ContextualGrammar> {
    parse_inner(text).map_err(Into::into)
}

fn parse_inner(text: &str) -> std::result::Result<ContextualGrammar, ParseError> {
    let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
    let mut alphabet: Option<Alphabet> = None;
    let mut axioms: Option<Vec<Word>> = None;
    let mut pairs = Vec::new();
    let mut draft: Option<PairDraft> = None;
    let mut i = 0;
    while i < lines.len() {
        let (no, raw) = lines[i];
        i += 1;
        if strip(raw).is_empty() {
            continue;
        }
        let (key, rest, col) = split_key(raw);
        let need_v = || {
            alphabet
                .as_ref()
                .ok_or_else(|| ParseError::new(no, indent(raw), "`alphabet` must come first"))
        };
        match (key, draft.as_mut()) {
            ("alphabet", None) => {
                if alphabet.is_some() {
                    return Err(ParseError::new(no, indent(raw), "alphabet declared twice"));
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                alphabet = Some(
                    Alphabet::new(names).map_err(|e| ParseError::new(no, col, e.to_string()))?,
                );
            }
            ("axiom" | "axioms", None) => {
                let v = need_v()?;
                let ws = parse_words(v, rest, no, col)?;
                axioms.get_or_insert_with(Vec::new).extend(ws);
            }
            ("pair", None) => {
                need_v()?;
                draft = Some(PairDraft {
                    line: no,
                    alphabet: None,
                    selection: None,
                    contexts: Vec::new(),
                });
            }
            ("subalphabet", Some(d)) => {
                if d.alphabet.is_some() {
                    return Err(ParseError::new(
                        no,
                        indent(raw),
                        "subalphabet declared twice",
                    ));
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                d.alphabet = Some(
                    Alphabet::new(names).map_err(|e| ParseError::new(no, col, e.to_string()))?,
                );
            }
            ("regex" | "grammar" | "dfa", Some(d)) => {
                if d.selection.is_some() {
                    return Err(ParseError::new(no, indent(raw), "selection given twice"));
                }
                let Some(u) = d.alphabet.clone() else {
                    return Err(ParseError::new(
                        no,
                        indent(raw),
                        "`subalphabet` must precede the selection",
                    ));
                };
                let sel = if key == "regex" {
                    let r = RegexAst::parse(rest, &u).map_err(|e| shift(e, no, col))?;
                    SelectionPair::from_regex(u, r, Vec::new()).map_err(|e| shift(e, no, col))?
                } else {
                    let start = i;
                    while i < lines.len() && strip(lines[i].1) != "end" {
                        i += 1;
                    }
                    if i == lines.len() {
                        return Err(ParseError::new(
                            no,
                            indent(raw),
                            format!("unterminated `{key}` block"),
                        ));
                    }
                    let block = &lines[start..i];
                    i += 1;
                    if key == "grammar" {
                        let gr = parse_rule_lines(block, &u)?;
                        SelectionPair::from_grammar(gr, Vec::new())
                    } else {
                        let d = parse_table_lines(block, Some(&u))?;
                        SelectionPair::new(u, d, Vec::new())
                    }
                };
                d.selection = Some(sel);
            }
            ("context", Some(d)) => {
                let v = alphabet.as_ref().unwrap();
                let ws = parse_words(v, rest, no, col)?;
                let [u, w] = <[Word; 2]>::try_from(ws).map_err(|_| {
                    ParseError::new(
                        no,
                        col,
                        "a context is two words `u v`, `@` for the empty word",
                    )
                })?;
                d.contexts.push(Context::new(u, w));
            }
            ("end", Some(_)) => {
                let d = draft.take().unwrap();
                let Some(mut p) = d.selection else {
                    return Err(ParseError::new(d.line, 1, "pair has no selection"));
                };
                p.contexts = d.contexts;
                pairs.push(p);
            }
            (_, None) => {
                return Err(ParseError::new(
                    no,
                    indent(raw),
                    format!("unexpected `{key}` outside a pair"),
                ));
            }
            (_, Some(_)) => {
                return Err(ParseError::new(
                    no,
                    indent(raw),
                    format!("unexpected `{key}` inside a pair"),
                ));
            }
        }
    }
    let last = lines.len().max(1);
    if let Some(d) = draft {
        return Err(ParseError::new(d.line, 1, "pair is missing its `end`"));
    }
    let alphabet = alphabet.ok_or_else(|| ParseError::new(last, 1, "missing `alphabet` line"))?;
    let axioms = axioms.ok_or_else(|| ParseError::new(last, 1, "missing `axioms` line"))?;
    Ok(ContextualGrammar::new(alphabet, pairs, axioms))
}

/// Places an error raised while parsing a fragment at its source position.
fn shift(e: crate::Error, line: usize, col: usize) -> ParseError {
    match e {
        crate::Error::Parse(p) if p.line == 1 => {
            ParseError::new(line, col + p.column - 1, p.message)
        }
        crate::Error::Parse(p) => p,
        other => ParseError::new(line, col, other.to_string()),
    }
}
