use super::{ContextualGrammar, SelectionPair};
use crate::error::{Error, Result};
use crate::regular::{BoolOp, Dfa, Word};
use crate::resources::{finite_grammar, suffix_grammar};
use crate::subregular::{definite_decomposition, is_finite_language};

/// Replaces every pair `(S, C)` by the pairs `({w}, C)` for `w ∈ S`. Each new
/// selection carries the one-rule grammar `S -> w`.
pub fn split_finite_selection(g: &ContextualGrammar) -> Result<ContextualGrammar> {
    g.ensure_valid()?;
    let mut pairs = Vec::new();
    for (i, p) in g.pairs.iter().enumerate() {
        let sel = p.selection.minimize();
        if !is_finite_language(&sel) {
            return Err(Error::NotFinite { pair: i + 1 });
        }
        for w in sel.enumerate(sel.state_count()) {
            let cert = finite_grammar(&p.alphabet, &[w]);
            pairs.push(SelectionPair::from_grammar(cert, p.contexts.clone()));
        }
    }
    Ok(ContextualGrammar::new(
        g.alphabet.clone(),
        pairs,
        g.axioms.clone(),
    ))
}

/// Replaces every pair `(S, C)` with `S = A ∪ U*B` by `(A, C)` and `(U*B, C)`,
/// given one `(A, B)` per pair. Both parts carry single non-terminal
/// grammars; an empty part is dropped.
pub fn split_definite_selection(
    g: &ContextualGrammar,
    decompositions: &[(Vec<Word>, Vec<Word>)],
) -> Result<ContextualGrammar> {
    g.ensure_valid()?;
    if decompositions.len() != g.pairs.len() {
        return Err(Error::InvalidArgument(format!(
            "{} decompositions given for {} pairs",
            decompositions.len(),
            g.pairs.len()
        )));
    }
    let mut pairs = Vec::new();
    for (i, (p, (a, b))) in g.pairs.iter().zip(decompositions).enumerate() {
        let u = &p.alphabet;
        let mismatch = |detail: String| Error::DecompositionMismatch {
            pair: i + 1,
            detail,
        };
        if let Some(w) = a
            .iter()
            .chain(b)
            .find(|w| w.iter().any(|&l| !u.contains_letter(l)))
        {
            return Err(mismatch(format!(
                "word {w:?} is not over the declared alphabet"
            )));
        }
        let ga = finite_grammar(u, a);
        let gb = suffix_grammar(u, b);
        let da = Dfa::from_words(u, a.iter().map(|w| &w[..]))?;
        let db = if b.is_empty() {
            Dfa::empty(u)
        } else {
            gb.to_dfa()
        };
        let union = da.combine(&db, BoolOp::Union)?;
        if let Some(w) = union.distinguishing_word(&p.selection)? {
            return Err(mismatch(format!(
                "the languages differ on `{}`",
                u.format_word(&w)
            )));
        }
        if !a.is_empty() {
            pairs.push(SelectionPair::from_grammar(ga, p.contexts.clone()));
        }
        if !b.is_empty() {
            pairs.push(SelectionPair::from_grammar(gb, p.contexts.clone()));
        }
    }
    Ok(ContextualGrammar::new(
        g.alphabet.clone(),
        pairs,
        g.axioms.clone(),
    ))
}

/// The canonical `(A, B)` of every pair, failing on the first selection
/// that is not definite.
pub fn definite_decompositions(g: &ContextualGrammar) -> Result<Vec<(Vec<Word>, Vec<Word>)>> {
    g.ensure_valid()?;
    g.pairs
        .iter()
        .enumerate()
        .map(|(i, p)| {
            definite_decomposition(&p.selection, &p.alphabet)?.ok_or_else(|| {
                Error::DecompositionMismatch {
                    pair: i + 1,
                    detail: "selection is not definite".into(),
                }
            })
        })
        .collect()
}
