use proptest::prelude::*;

use super::*;
use crate::samples;

fn formula(lang: &Sublanguage, text: &str) -> SentenceFormula {
    formulaize(&tokenize(text), &lang.lexicon)
}

fn report(lang: &Sublanguage, text: &str) -> CoreReport {
    in_core(&formula(lang, text), &lang.spec)
}

#[test]
fn immunology_symbols() {
    let lang = samples::immunology();
    assert_eq!(lang.spec.classes.keys().collect::<String>(), "ABCGT");
    assert_eq!(lang.spec.operators.keys().collect::<String>(), "JUVY");
}

#[test]
fn immunology_formulas() {
    let lang = samples::immunology();
    for (text, pattern) in [
        ("antigen was injected into the foot-pads of rabbits", "GJB"),
        ("antibody is found in lymphocytes", "AVC"),
        ("antigen arrives by the lymph stream", "GUT"),
        ("antibody appears in plasma cells", "AVC"),
        ("Antibody is found in plasma cells.", "AVC"),
        (
            "plasmablasts and plasma cells are a later stage of lymphocytes",
            "CCYC",
        ),
    ] {
        let f = formula(&lang, text);
        assert_eq!(f.pattern(), pattern, "{text}");
        assert_eq!(f.voice, Voice::Active, "{text}");
        assert!(in_core(&f, &lang.spec).accepted, "{text}");
    }
    let f = formula(&lang, "antigen was injected into the foot-pads of rabbits");
    assert_eq!(f.symbols[2].word.as_deref(), Some("foot-pad of rabbit"));
}

#[test]
fn unknown_words_are_rejected() {
    let lang = samples::immunology();
    for text in samples::general_pool() {
        let r = report(&lang, &text);
        assert!(!r.accepted);
        assert!(r.pattern.contains(UNKNOWN_SYMBOL), "{text}");
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::UnknownWord { .. })));
    }
    let empty = Sublanguage::new(Lexicon::default(), SublanguageSpec::default()).unwrap();
    assert_eq!(formula(&empty, "antibody is found in cells").pattern(), "?????");
}

#[test]
fn activate_forbids_person_subject() {
    let lang = samples::biochem();
    let r = report(&lang, "John activated protein A");
    assert_eq!(r.pattern, "HKM");
    assert!(!r.accepted);
    assert!(r.violations.contains(&Violation::ForbiddenFeature {
        operator: 'K',
        slot: 0,
        position: 0,
        word: Some("john".into()),
        feature: "person".into(),
    }));
    assert!(report(&lang, "the enzyme activated protein A").accepted);
    assert!(report(&lang, "phosphorylation activates the enzyme").accepted);
}

#[test]
fn wash_in_has_ordered_arguments() {
    let lang = samples::biochem();
    let bad = report(&lang, "Hydrochloric acid was washed in polypeptides");
    assert_eq!(bad.pattern, "LWM");
    assert!(!bad.accepted);
    assert!(bad.violations.iter().any(|v| matches!(
        v,
        Violation::ClassNotAllowed {
            operator: 'W',
            slot: 0,
            symbol: 'L',
            ..
        }
    )));
    assert!(bad.violations.iter().any(|v| matches!(
        v,
        Violation::ClassNotAllowed {
            operator: 'W',
            slot: 1,
            symbol: 'M',
            ..
        }
    )));
    let good = report(&lang, "The polypeptides were washed in hydrochloric acid");
    assert_eq!(good.pattern, "MWL");
    assert!(good.accepted, "{:?}", good.violations);
}

#[test]
fn passive_pair() {
    let lang = samples::biochem();
    let active = formula(&lang, "The enzyme activated the process.");
    let passive = formula(&lang, "The process was activated by the enzyme.");
    assert_eq!(active.pattern(), "MKP");
    assert_eq!(
        (passive.pattern(), passive.voice),
        ("PKM".to_string(), Voice::Passive)
    );
    assert_eq!(passive_transform(&active).unwrap(), passive);
    assert_eq!(passive_transform(&passive).unwrap(), active);
    assert!(in_core(&active, &lang.spec).accepted);
    assert!(in_core(&passive, &lang.spec).accepted);
    assert_eq!(passive.canonical_pattern(), "MKP");

    let no_operator = formula(&lang, "the enzyme");
    assert!(matches!(passive_transform(&no_operator), Err(SublangError::NotBinary(p)) if p == "M"));
}

fn fixture_sentences() -> Vec<(Sublanguage, String)> {
    let imm = samples::immunology();
    let bio = samples::biochem();
    let mut out: Vec<(Sublanguage, String)> = Vec::new();
    for s in samples::core_pool().into_iter().chain(samples::general_pool()) {
        out.push((imm.clone(), s));
    }
    for r in samples::drift_corpus() {
        out.push((imm.clone(), r.text.unwrap()));
    }
    for s in [
        "John activated protein A",
        "Hydrochloric acid was washed in polypeptides",
        "The polypeptides were washed in hydrochloric acid",
        "The enzyme activated the process",
        "The process was activated by the enzyme",
        "water activated john",
        "the molecule was washed in water",
    ] {
        out.push((bio.clone(), s.to_string()));
    }
    out
}

#[test]
fn transforms_preserve_membership() {
    let mut binary = 0;
    for (lang, text) in fixture_sentences() {
        let f = formula(&lang, &text);
        let Ok(t) = passive_transform(&f) else { continue };
        binary += 1;
        let (before, after) = (in_core(&f, &lang.spec), in_core(&t, &lang.spec));
        assert_eq!(before, after, "{text}");
        assert_eq!(passive_transform(&t).unwrap(), f);
    }
    assert!(binary >= 20);
}

#[test]
fn grammars_intersect() {
    let lang = samples::biochem();
    let r = report(&lang, "John activated protein A");
    assert!(lang.spec.matches_general(&r.pattern) && !r.accepted);
    let imm = samples::immunology();
    assert!(imm.spec.is_admissible("CYC"));
    assert!(!imm.spec.matches_general("CYC"));
}

#[test]
fn chains() {
    let lang = samples::immunology();
    let core = "antibody is found in lymphocytes";
    let general = "rabbits eat carrots";
    let d = chain_membership(&lang, &DiscourseChain::new(core).then("and", general)).unwrap();
    assert!(d.accepted);
    assert!(
        !chain_membership(&lang, &DiscourseChain::new(general).then("and", core))
            .unwrap()
            .accepted
    );
    assert!(
        chain_membership(&lang, &DiscourseChain::new(core))
            .unwrap()
            .accepted
    );
    let strict = chain_membership(
        &lang,
        &DiscourseChain::new(core)
            .then("because", core)
            .then("likewise", general),
    )
    .unwrap();
    assert!(!strict.accepted);
    assert_eq!(strict.strict_failures, [1]);
    assert!(matches!(
        chain_membership(&lang, &DiscourseChain::new(core).then("whereas", core)),
        Err(SublangError::UnknownConjunction(w)) if w == "whereas"
    ));
}

#[test]
fn right_ideal_property() {
    let lang = samples::immunology();
    let (core, general) = (samples::core_pool(), samples::general_pool());
    let r = verify_right_ideal_property(&lang, &core, &general, 2).unwrap();
    assert!(r.r1.holds);
    assert_eq!(r.r1.extensions_checked, 3 * 2 * 6);
    let R2Outcome::Witness { chain } = &r.r2 else {
        panic!("{:?}", r.r2)
    };
    assert!(general.contains(&chain.head));
    assert!(!chain_membership(&lang, chain).unwrap().accepted);
    assert!(r.passed());

    // Accepted two-sentence chains: permissive links to any of 6 sentences
    // plus the strict link to one of 3 core sentences, from each core head.
    let accepted_pairs = 3 * (2 * 6 + 3);
    let deep = verify_right_ideal_property(&lang, &core, &general, DEFAULT_CLOSURE_DEPTH).unwrap();
    assert!(deep.r1.holds);
    assert_eq!(deep.r1.extensions_checked, 3 * 2 * 6 + accepted_pairs * 2 * 6);
}

#[test]
fn closure_agrees_with_chain_membership() {
    let lang = samples::immunology();
    let pool: Vec<String> = samples::core_pool()
        .into_iter()
        .chain(samples::general_pool())
        .collect();
    let words = ["and", "because", "likewise"];
    for head in &pool {
        for c1 in words {
            for s1 in &pool {
                let base = DiscourseChain::new(head.clone()).then(c1, s1.clone());
                if !chain_membership(&lang, &base).unwrap().accepted {
                    continue;
                }
                for c2 in lang.spec.permissive_conjunctions() {
                    for s2 in &pool {
                        let ext = base.clone().then(c2, s2.clone());
                        assert!(
                            chain_membership(&lang, &ext).unwrap().accepted,
                            "{}",
                            ext.to_text()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn closure_edge_cases() {
    let lang = samples::immunology();
    let core = samples::core_pool();
    let r = verify_right_ideal_property(&lang, &core, &[], 2).unwrap();
    assert!(r.r1.holds);
    assert_eq!(r.r1.extensions_checked, 3 * 2 * 3);
    assert_eq!(r.r2, R2Outcome::NotSought);
    assert!(matches!(
        verify_right_ideal_property(&lang, &[], &[], 2),
        Err(SublangError::EmptyPool("core"))
    ));
    let bad = vec!["rabbits eat carrots".to_string()];
    assert!(matches!(
        verify_right_ideal_property(&lang, &bad, &[], 2),
        Err(SublangError::PoolPrecondition { pool: "core", .. })
    ));
    assert!(matches!(
        verify_right_ideal_property(&lang, &core, &core, 2),
        Err(SublangError::PoolPrecondition { pool: "general", .. })
    ));
}

#[test]
fn drift_sequence() {
    let lang = samples::immunology();
    let profile = diachronic_profile(&samples::drift_corpus(), &lang, DEFAULT_PERIOD_YEARS).unwrap();
    assert_eq!(
        profile.periods.keys().copied().collect::<Vec<_>>(),
        [1930, 1940, 1950, 1960]
    );
    let d = dominant_sequence(&profile);
    assert_eq!(d.sequence, ["AVT", "AVC", "CYC", "CCYC"]);
    assert!(d.ties.is_empty());
}

#[test]
fn drift_edge_cases() {
    let lang = samples::immunology();
    let one = [CorpusRecord::text("1950", "antibody is found in lymphocytes")];
    let d = dominant_sequence(&diachronic_profile(&one, &lang, 10).unwrap());
    assert_eq!(d.sequence, ["AVC"]);

    let tied = [
        CorpusRecord::text("1950", "antibody is found in lymphocytes"),
        CorpusRecord::text("1951", "antibody is found in lymph nodes"),
    ];
    let d = dominant_sequence(&diachronic_profile(&tied, &lang, 10).unwrap());
    assert_eq!(d.sequence, ["AVC"]);
    assert_eq!(
        d.ties,
        [TieFlag {
            period: 1950,
            patterns: vec!["AVC".into(), "AVT".into()]
        }]
    );

    assert!(matches!(
        diachronic_profile(&[], &lang, 10),
        Err(SublangError::EmptyCorpus)
    ));
    let undated = [CorpusRecord {
        text: Some("antibody".into()),
        ..Default::default()
    }];
    assert!(matches!(
        diachronic_profile(&undated, &lang, 10),
        Err(SublangError::UndatedRecord(0))
    ));
    let tokens = [CorpusRecord {
        date: Some("1960".into()),
        tokens: Some(vec![
            "Antibody".into(),
            "found".into(),
            "in".into(),
            "spleen".into(),
        ]),
        text: None,
    }];
    let p = diachronic_profile(&tokens, &lang, 10).unwrap();
    assert_eq!(p.periods[&1960].keys().collect::<Vec<_>>(), ["AVT"]);
}

proptest! {
    #[test]
    fn formulaize_is_total_and_deterministic(words in prop::collection::vec(
        prop_oneof![
            Just("antibody".to_string()), Just("found".to_string()), Just("in".to_string()),
            Just("was".to_string()), Just("by".to_string()), Just("plasma".to_string()),
            Just("cells".to_string()), Just("later".to_string()), Just("stage".to_string()),
            Just("of".to_string()), "[a-z-]{1,8}",
        ],
        0..12,
    )) {
        let lang = samples::immunology();
        let a = formulaize(&words, &lang.lexicon);
        let b = formulaize(&words, &lang.lexicon);
        prop_assert_eq!(&a, &b);
        let r = in_core(&a, &lang.spec);
        prop_assert_eq!(r.accepted, r.violations.is_empty());
    }
}
