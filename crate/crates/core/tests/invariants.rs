mod common;

use common::{random_dfa, random_grammar};
use ctxgram::contextual::*;
use ctxgram::regular::all_words;
use ctxgram::subregular::{classify_with, ClassifyOptions};
use ctxgram::Alphabet;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn steps_insert_the_context_around_a_selected_factor(seed in any::<u64>()) {
        let g = random_grammar(seed);
        for w in enumerate_ic(&g, 5).unwrap() {
            for s in derive_step(&g, &w) {
                let p = &g.pairs()[s.pair];
                let c = &p.contexts()[s.context];
                let x2 = p.alphabet().parse_word(&g.alphabet().format_word(s.x2())).unwrap();
                prop_assert!(p.selection().accepts_letters(&x2));
                prop_assert_eq!(s.target.len(), w.len() + c.len());
                let expected = [s.x1(), &c.left[..], s.x2(), &c.right[..], s.x3()].concat();
                prop_assert_eq!(&s.target[..], &expected[..]);
            }
        }
    }

    #[test]
    fn membership_matches_enumeration(seed in any::<u64>()) {
        let g = random_grammar(seed);
        let words = enumerate_ic(&g, 6).unwrap();
        for w in all_words(3, 6) {
            prop_assert_eq!(member_ic(&g, &w).unwrap(), words.contains(&w), "{}", g.to_text());
        }
    }

    #[test]
    fn traces_replay(seed in any::<u64>()) {
        let g = random_grammar(seed);
        for w in enumerate_ic(&g, 6).unwrap() {
            let (axiom, steps) = member_trace(&g, &w).unwrap().unwrap();
            prop_assert!(g.axioms().contains(&axiom));
            let mut cur = axiom;
            for s in steps {
                prop_assert!(derive_step(&g, &cur).contains(&s));
                cur = s.target.clone();
            }
            prop_assert_eq!(cur, w);
        }
    }

    #[test]
    fn text_format_round_trips(seed in any::<u64>()) {
        let g = random_grammar(seed);
        let back = ContextualGrammar::parse(&g.to_text()).unwrap();
        prop_assert_eq!(back.to_text(), g.to_text());
        prop_assert_eq!(enumerate_ic(&back, 6).unwrap(), enumerate_ic(&g, 6).unwrap());
    }

    #[test]
    fn structural_reports_respect_inclusions(seed in any::<u64>(), k in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = Alphabet::from_chars(&"abc"[..k]).unwrap();
        let d = random_dfa(&mut rng, &u, 4);
        let opts = ClassifyOptions { resources: false, ..ClassifyOptions::default() };
        let r = classify_with(&d, &u, None, &opts).unwrap();
        prop_assert!(r.violations().is_empty(), "{:?}\n{}", r.violations(), d.to_table());
    }
}
