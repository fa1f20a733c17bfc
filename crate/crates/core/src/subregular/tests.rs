use super::*;
use crate::regular::compile_str;

fn lang(re: &str, letters: &str) -> (Dfa, Alphabet) {
    let u = Alphabet::from_chars(letters).unwrap();
    (compile_str(re, &u).unwrap(), u)
}

fn holds(f: fn(&Dfa, &Alphabet) -> Result<Decision>, re: &str, letters: &str) -> bool {
    let (d, u) = lang(re, letters);
    let dec = f(&d, &u).unwrap();
    assert!(
        dec.evidence.check(&d),
        "bad evidence for {re}: {:?}",
        dec.evidence
    );
    if !dec.holds && !dec.evidence.note.contains("order") {
        assert!(
            !dec.evidence.members.is_empty() || !dec.evidence.non_members.is_empty(),
            "no witness words for {re}"
        );
    }
    dec.holds
}

#[test]
fn monoidal() {
    assert!(holds(is_monoidal, "(a|b)*", "ab"));
    assert!(!holds(is_monoidal, "(aa)*", "a"));
    let b2 = Alphabet::new(["b1", "b2"]).unwrap();
    let d = compile_str("(b1|b2)*", &b2).unwrap();
    assert!(is_monoidal(&d, &b2).unwrap().holds);
}

#[test]
fn finite() {
    assert!(holds(is_finite, "ab|b", "abc"));
    assert!(!holds(is_finite, "a*", "a"));
    assert!(holds(is_finite, "∅", "a"));
}

#[test]
fn nilpotent_depends_on_alphabet() {
    assert!(holds(is_nilpotent, "a*aaaaa", "a"));
    assert!(!holds(is_nilpotent, "a*aaaaa", "ab"));
    assert!(!holds(is_nilpotent, "(aa)*", "a"));
    assert!(holds(is_nilpotent, "∅", "a"));
}

#[test]
fn combinational() {
    assert!(holds(is_combinational, "(a|b|c)*b", "abc"));
    assert!(!holds(is_combinational, "b*c", "bc"));
    assert!(holds(is_combinational, "∅", "bc"));
    assert!(!holds(is_combinational, "()", "a"));
}

#[test]
fn definite() {
    assert!(holds(is_definite, "ab|b|abc", "abc"));
    assert!(holds(is_definite, "(a|b|c)*b", "abc"));
    assert!(!holds(is_definite, "b*c", "bc"));
    assert!(holds(is_definite, "()", "a"));
    let (d, u) = lang("c|(b|c)*b", "bc");
    let (a, b) = definite_decomposition(&d, &u).unwrap().unwrap();
    assert_eq!(a, vec![Word(vec![1])]);
    assert_eq!(b, vec![Word(vec![0])]);
}

#[test]
fn suffix_closed() {
    assert!(holds(is_suffix_closed, "d*(b|())", "bd"));
    assert!(!holds(is_suffix_closed, "(aa)*", "a"));
    assert!(holds(is_suffix_closed, "a*", "a"));
}

#[test]
fn ordered() {
    assert!(holds(is_ordered, "b*c", "bc"));
    assert!(holds(is_ordered, "a*ba*ba*", "ab"));
    assert!(!holds(is_ordered, "(aa)*", "a"));
}

#[test]
fn commutative() {
    assert!(holds(is_commutative, "a*ba*ba*", "ab"));
    assert!(holds(is_commutative, "(a|b)(a|b)", "ab"));
    assert!(!holds(is_commutative, "ab", "ab"));
}

#[test]
fn circular() {
    assert!(holds(is_circular, "ab|ba", "ab"));
    assert!(!holds(is_circular, "ab", "ab"));
    assert!(holds(is_circular, "a*ba*ba*", "ab"));
}

#[test]
fn noncounting_and_power_separating() {
    assert!(holds(is_noncounting, "b*c", "bc"));
    assert!(!holds(is_noncounting, "(aa)*", "a"));
    assert!(holds(is_noncounting, "(a|b)*", "ab"));
    assert!(holds(is_power_separating, "ab|b", "ab"));
    assert!(!holds(is_power_separating, "(aa)*", "a"));
    assert!(holds(is_power_separating, "b*c", "bc"));
}

#[test]
fn union_free_is_syntactic() {
    let u = Alphabet::from_chars("abc").unwrap();
    let r = |s: &str| RegexAst::parse(s, &u).unwrap();
    assert_eq!(is_union_free_syntactic(&r("(aa)*")), Some(true));
    assert_eq!(is_union_free_syntactic(&r("a|b")), None);
    assert_eq!(is_union_free_syntactic(&r("b*c")), Some(true));
}

#[test]
fn alphabet_mismatch() {
    let (d, _) = lang("a", "ab");
    let other = Alphabet::from_chars("abc").unwrap();
    assert!(matches!(
        is_finite(&d, &other),
        Err(Error::AlphabetMismatch { .. })
    ));
}

fn verdicts(re: &str, letters: &str) -> FamilyReport {
    let (d, u) = lang(re, letters);
    let r = RegexAst::parse(re, &u).unwrap();
    classify(&d, &u, Some(&r)).unwrap()
}

#[test]
fn classify_even_a() {
    use FamilyLabel::*;
    let rep = verdicts("(aa)*", "a");
    for (f, v) in [
        (Mon, false),
        (Fin, false),
        (Nil, false),
        (Comb, false),
        (Def, false),
        (Suf, false),
        (Ord, false),
        (Comm, true),
        (Circ, true),
        (Nc, false),
        (Ps, false),
    ] {
        assert_eq!(rep.verdict(f), Some(Verdict::from_bool(v)), "{f}");
    }
    assert_eq!(rep.verdict(RlV(1)), Some(Verdict::Yes));
    assert_eq!(rep.verdict(RegZ(2)), Some(Verdict::Yes));
    assert_eq!(rep.verdict(Uf), Some(Verdict::Yes));
}

#[test]
fn classify_b_star_c() {
    use FamilyLabel::*;
    let rep = verdicts("b*c", "bc");
    for (f, v) in [
        (Fin, false),
        (Nil, false),
        (Comb, false),
        (Def, false),
        (Ord, true),
        (Nc, true),
        (Ps, true),
        (Suf, false),
        (Comm, false),
        (Circ, false),
    ] {
        assert_eq!(rep.verdict(f), Some(Verdict::from_bool(v)), "{f}");
    }
    assert_eq!(rep.verdict(RlP(2)), Some(Verdict::Yes));
    assert_eq!(rep.verdict(RlP(1)), Some(Verdict::No));
}

#[test]
fn classify_monoidal_implies_everything_above() {
    let u = Alphabet::new(["b1", "b2"]).unwrap();
    let d = compile_str("(b1|b2)*", &u).unwrap();
    let rep = classify(&d, &u, None).unwrap();
    let mut above = vec![FamilyLabel::Mon];
    let mut i = 0;
    while i < above.len() {
        for (x, y) in subregular_edges() {
            if x == above[i] && !above.contains(&y) {
                above.push(y);
            }
        }
        i += 1;
    }
    assert!(above.len() > 10);
    for f in above {
        let v = rep.verdict(f).unwrap();
        if f == FamilyLabel::Uf {
            assert_eq!(v, Verdict::Unknown);
        } else {
            assert_eq!(v, Verdict::Yes, "{f}");
        }
    }
}

#[test]
fn report_round_trips_through_json() {
    let rep = verdicts("ab|b", "abc");
    let json = serde_json::to_string_pretty(&rep).unwrap();
    let back: FamilyReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, rep);
    assert!(rep.to_table().contains("FIN"));
}
