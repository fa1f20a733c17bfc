use super::*;
use crate::contextual::enumerate_ic;

fn names(case: &WitnessCase, ws: &BTreeSet<Word>) -> BTreeSet<String> {
    ws.iter()
        .map(|w| case.grammar.alphabet().format_word(w))
        .collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

#[test]
fn l2_structure() {
    let c = build_witness(WitnessId::L2, None).unwrap();
    let g = &c.grammar;
    assert_eq!(g.alphabet().to_line(), "a b c");
    assert_eq!(g.pairs().len(), 1);
    assert_eq!(
        g.pairs()[0].contexts(),
        &[Context::new(Word(vec![2]), Word(vec![2]))]
    );
    assert_eq!(
        names(&c, &g.axioms().iter().cloned().collect()),
        set(&["ab", "ba"])
    );
    let sel = g.pairs()[0].selection().enumerate(4);
    assert_eq!(sel.len(), 2);
}

#[test]
fn l4_structure() {
    let c = build_witness(WitnessId::L4, Some(1)).unwrap();
    let g = &c.grammar;
    assert_eq!(g.alphabet().format_word(&g.axioms()[0]), "abababa");
    assert_eq!(
        g.pairs()[0].regex().unwrap().display(g.alphabet()),
        "a*ba*a*ba*"
    );
}

#[test]
fn l7_structure() {
    let c = build_witness(WitnessId::L7, Some(2)).unwrap();
    let g = &c.grammar;
    assert_eq!(g.pairs()[0].contexts().len(), 4);
    assert!(g.pairs()[0]
        .contexts()
        .iter()
        .all(|x| x.left.is_empty() && x.right.len() == 2));
    assert_eq!(g.axioms().len(), 1 + 2 + 4);
}

#[test]
fn parameters_are_checked() {
    assert!(build_witness(WitnessId::L6, Some(1)).is_err());
    assert!(build_witness(WitnessId::L3, Some(4)).is_err());
    assert!(build_witness(WitnessId::L1, Some(1)).is_err());
    assert!(closed_form(WitnessId::L1, None, 5).is_err());
    assert!("l5".parse::<WitnessId>().is_err());
    assert_eq!("l7".parse::<WitnessId>().unwrap(), WitnessId::L7);
}

#[test]
fn closed_forms() {
    let l6 = build_witness(WitnessId::L6, Some(2)).unwrap();
    let got = names(&l6, &closed_form(WitnessId::L6, Some(2), 4).unwrap());
    assert_eq!(got, set(&["a1", "a2", "a1a2", "a1a2a1a2"]));
    let l2 = build_witness(WitnessId::L2, None).unwrap();
    assert_eq!(
        names(&l2, &closed_form(WitnessId::L2, None, 3).unwrap()),
        set(&["ab", "ba"])
    );
    let l7 = closed_form(WitnessId::L7, Some(2), 2).unwrap();
    assert_eq!(l7.len(), 1 + 2 + 4);
    let l4 = build_witness(WitnessId::L4, Some(1)).unwrap();
    let got = names(&l4, &closed_form(WitnessId::L4, Some(1), 11).unwrap());
    let expect = [
        "abababa",
        "aababaaba",
        "abaababaa",
        "aaababaaaba",
        "aabaabaabaa",
        "abaaababaaa",
    ];
    assert_eq!(got, set(&expect));
}

#[test]
fn enumeration_matches_closed_form() {
    for (id, n) in [
        (WitnessId::L2, None),
        (WitnessId::L4, Some(1)),
        (WitnessId::L6, Some(2)),
        (WitnessId::L7, Some(2)),
    ] {
        let c = build_witness(id, n).unwrap();
        assert_eq!(
            enumerate_ic(&c.grammar, 8).unwrap(),
            closed_form(id, n, 8).unwrap(),
            "{id}"
        );
    }
}

#[test]
fn hierarchy_tables() {
    use FamilyLabel::*;
    let sub = hierarchy(Scope::Subregular);
    for (x, y) in [(Comb, RegZ(2)), (Def, RlV(2)), (Nil, RlV(1))] {
        assert_eq!(sub.edge(x, y).unwrap().status, EdgeStatus::Proper);
    }
    assert!(sub.edge(Def, RlV(1)).is_none());
    let merged = hierarchy(Scope::Merged);
    assert_eq!(merged.edge(Def, RlV(1)).unwrap().status, EdgeStatus::Proper);
    assert_eq!(
        merged.edge(Fin, RlP(1)).unwrap().status,
        EdgeStatus::Equality
    );
    let st = hierarchy(Scope::IcStructural);
    assert_eq!(st.edge(Ord, Nc).unwrap().status, EdgeStatus::OpenProperness);
    assert_eq!(st.edge(Suf, Ord).unwrap().status, EdgeStatus::Unknown);
    for s in Scope::ALL {
        assert!(hierarchy(s).is_acyclic(), "{s}");
        assert!(hierarchy_with(s, 4).is_acyclic(), "{s}");
    }
    assert!(merged.includes(Mon, Reg));
    assert!(!st.includes(Suf, Ord));
}
