#![allow(dead_code)]

use ctxgram::contextual::{Context, ContextualGrammar, SelectionPair};
use ctxgram::{Alphabet, Dfa, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const LETTERS: [&str; 3] = ["a", "b", "c"];

pub fn random_dfa(rng: &mut impl Rng, u: &Alphabet, max_states: usize) -> Dfa {
    let n = rng.gen_range(1..=max_states);
    let delta = (0..n)
        .map(|_| (0..u.len()).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    let accepting = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    Dfa::new(u.clone(), delta, 0, accepting).unwrap()
}

fn random_word(rng: &mut impl Rng, k: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..k) as u8).collect()
}

/// A grammar over `{a, b, c}` with one or two pairs, small random
/// selections and contexts of total length one to three.
pub fn random_grammar(seed: u64) -> ContextualGrammar {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = Alphabet::new(LETTERS).unwrap();
    let pairs = (0..rng.gen_range(1..=2))
        .map(|_| {
            let mut sub: Vec<&str> = LETTERS
                .iter()
                .copied()
                .filter(|_| rng.gen_bool(0.6))
                .collect();
            if sub.is_empty() {
                sub.push(LETTERS[rng.gen_range(0..3)]);
            }
            let u = Alphabet::new(sub).unwrap();
            let sel = random_dfa(&mut rng, &u, 3);
            let mut contexts: Vec<Context> = Vec::new();
            for _ in 0..rng.gen_range(1..=2) {
                let c = Context::new(random_word(&mut rng, 3, 2), random_word(&mut rng, 3, 2));
                if !c.is_empty() && !contexts.contains(&c) {
                    contexts.push(c);
                }
            }
            if contexts.is_empty() {
                contexts.push(Context::new(
                    Word::empty(),
                    Word::from(vec![rng.gen_range(0..3)]),
                ));
            }
            SelectionPair::new(u, sel, contexts)
        })
        .collect();
    let axioms = (0..rng.gen_range(1..=2))
        .map(|_| random_word(&mut rng, 3, 3))
        .collect();
    ContextualGrammar::new(v, pairs, axioms)
}
