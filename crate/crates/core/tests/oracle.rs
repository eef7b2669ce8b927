mod common;

use common::{fixture, random_kb, FIXTURES};
use defeasible_alc::oracle::{
    minimal_ranked_model, oracle_rc_entails, oracle_s_entails, AspectIdentity, Oracle,
    OracleConfig, SpecificityRanks,
};
use defeasible_alc::{parse_concept, parse_kb, parse_query, Error};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn q(s: &str) -> defeasible_alc::Query {
    parse_query(s).unwrap()
}

#[test]
fn kb4_domain_and_conclusion() {
    let kb = fixture("kb4.dl");
    let oracle = Oracle::new(&kb, OracleConfig::default()).unwrap();
    assert_eq!(oracle.domain().len(), 16);
    let bp = parse_concept("BabyPenguin").unwrap();
    let fly = parse_concept("Fly").unwrap();
    let models = oracle.minimal_s_enriched_models().unwrap();
    assert!(!models.is_empty());
    for m in &models {
        for i in m.typical(&oracle, &bp) {
            assert!(!oracle.eval(&fly, m.domain[i]));
        }
    }
    assert!(oracle.s_entails(&q("T(BabyPenguin) <= not Fly")).unwrap());
    assert!(!oracle.rc_entails(&q("T(BabyPenguin) <= not Fly")).unwrap());
}

#[test]
fn specificity_beats_number_of_violations() {
    let kb = fixture("kb1.dl");
    let oracle = Oracle::new(&kb, OracleConfig::default()).unwrap();
    let x = parse_concept("Bird and Penguin and not Fly and not HasNiceFeather").unwrap();
    let y = parse_concept("Bird and Penguin and Fly and HasNiceFeather").unwrap();
    for m in oracle.minimal_s_enriched_models().unwrap() {
        let rank_of = |c| {
            let i = (0..m.domain.len())
                .find(|&i| oracle.eval(c, m.domain[i]))
                .unwrap();
            m.global_rank[i]
        };
        assert!(rank_of(&x) < rank_of(&y));
    }
}

#[test]
fn fixture_verdicts() {
    let kb1 = fixture("kb1.dl");
    assert!(oracle_s_entails(&kb1, &q("T(Penguin) <= HasNiceFeather")).unwrap());
    assert!(!oracle_rc_entails(&kb1, &q("T(Penguin) <= HasNiceFeather")).unwrap());
    assert!(oracle_rc_entails(&kb1, &q("T(Bird) <= Fly")).unwrap());
}

#[test]
fn kb2_needs_raised_bounds() {
    let kb2 = fixture("kb2.dl");
    assert!(matches!(
        oracle_s_entails(&kb2, &q("T(Penguin) <= C")),
        Err(Error::OracleBounds(_))
    ));
    let oracle = Oracle::new(&kb2, WIDE).unwrap();
    assert_eq!(oracle.domain().len(), 28);
    assert!(oracle.s_entails(&q("T(Penguin) <= C")).unwrap());
    assert!(!oracle.s_entails(&q("T(Penguin) <= A")).unwrap());
    assert!(!oracle.s_entails(&q("T(Penguin) <= H")).unwrap());
}

const WIDE: OracleConfig = OracleConfig {
    max_atoms: 6,
    max_domain: 32,
    aspect_dominance: false,
    specificity_ranks: SpecificityRanks::Model,
    aspect_identity: AspectIdentity::Concept,
};

#[test]
fn ranked_model_ranks_match_kb1() {
    let kb = fixture("kb1.dl");
    let oracle = Oracle::new(&kb, OracleConfig::default()).unwrap();
    let m = minimal_ranked_model(&kb).unwrap();
    let min_rank = |s: &str| {
        let c = parse_concept(s).unwrap();
        (0..m.domain.len())
            .filter(|&i| oracle.eval(&c, m.domain[i]))
            .map(|i| m.global_rank[i])
            .min()
    };
    assert_eq!(min_rank("Bird"), Some(0));
    assert_eq!(min_rank("Penguin"), Some(1));
    assert_eq!(min_rank("Penguin and Fly"), Some(2));
}

#[test]
fn returned_models_reverify_and_are_canonical() {
    for name in ["kb1.dl", "kb2.dl", "kb4.dl"] {
        let kb = fixture(name);
        let oracle = Oracle::new(&kb, WIDE).unwrap();
        for m in oracle.minimal_s_enriched_models().unwrap() {
            assert!(oracle.is_s_enriched(&m.global_rank), "{name}");
            assert_eq!(m.domain, oracle.domain());
        }
        assert_eq!(
            oracle.domain().len(),
            oracle.strict_models().len(),
            "{name}"
        );
    }
}

#[test]
fn both_readings_of_specificity_agree_on_fixtures() {
    let queries = [
        "T(Penguin) <= HasNiceFeather",
        "T(Penguin) <= C",
        "T(Penguin) <= A",
        "T(Penguin) <= H",
        "T(Penguin) <= not Fly",
        "T(BabyPenguin) <= not Fly",
        "T(BabyPenguin) <= not BlackFeather",
        "T(Bird) <= Fly",
    ];
    for name in FIXTURES {
        let kb = fixture(name);
        for text in queries {
            let query = q(text);
            let build = |reading| {
                Oracle::for_query(
                    &kb,
                    &query,
                    OracleConfig {
                        specificity_ranks: reading,
                        ..WIDE
                    },
                )
            };
            let Ok(model_reading) = build(SpecificityRanks::Model) else {
                continue;
            };
            let closure_reading = build(SpecificityRanks::RationalClosure).unwrap();
            assert_eq!(
                model_reading.s_entails(&query).unwrap(),
                closure_reading.s_entails(&query).unwrap(),
                "{name}: {text}"
            );
        }
    }
}

/// Every pointwise-minimal valid ranking found by enumerating all rankings
/// into `0..n`.
fn naive_minimal(oracle: &Oracle) -> Vec<Vec<usize>> {
    let n = oracle.domain().len();
    let mut valid = Vec::new();
    let mut r = vec![0usize; n];
    'outer: loop {
        if oracle.is_s_enriched(&r) {
            valid.push(r.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                break 'outer;
            }
            r[i] += 1;
            if r[i] < n {
                break;
            }
            r[i] = 0;
            i += 1;
        }
    }
    let mut minimal: Vec<Vec<usize>> = valid
        .iter()
        .filter(|x| {
            !valid
                .iter()
                .any(|o| o != *x && o.iter().zip(x.iter()).all(|(a, b)| a <= b))
        })
        .cloned()
        .collect();
    minimal.sort();
    minimal
}

#[test]
fn search_matches_naive_enumeration_on_small_domains() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 150 {
        let kb = random_kb(&mut rng);
        for aspect_dominance in [false, true] {
            let cfg = OracleConfig {
                aspect_dominance,
                ..OracleConfig::default()
            };
            let oracle = Oracle::new(&kb, cfg).unwrap();
            if oracle.domain().len() > 6 {
                continue;
            }
            let expected = naive_minimal(&oracle);
            match oracle.minimal_s_enriched_models() {
                Ok(models) => {
                    let got: Vec<Vec<usize>> = models.into_iter().map(|m| m.global_rank).collect();
                    assert_eq!(got, expected, "{kb}");
                }
                Err(Error::NoModel(_)) => assert!(expected.is_empty(), "{kb}"),
                Err(e) => panic!("{e}"),
            }
            checked += 1;
        }
    }
}

#[test]
fn roles_and_bounds_are_errors() {
    let kb = parse_kb("T(A) <= exists r.B.").unwrap();
    assert!(matches!(
        oracle_s_entails(&kb, &q("T(A) <= B")),
        Err(Error::RoleBearing(_))
    ));
    let kb = parse_kb("T(A) <= B.").unwrap();
    assert!(matches!(
        oracle_rc_entails(&kb, &q("T(A) <= C and D and E and F")),
        Err(Error::OracleBounds(_))
    ));
}

#[test]
fn shared_aspect_separates_mp_from_s_entailment() {
    let kb = fixture("kb_shared_aspect.dl");
    let r = defeasible_alc::compute_ranking(&kb).unwrap();
    let query = q("T(A) <= not B");
    assert!(defeasible_alc::mp_entails(&kb, &r, &query).unwrap());
    assert!(!oracle_s_entails(&kb, &query).unwrap());
    let per_default = Oracle::new(
        &kb,
        OracleConfig {
            aspect_identity: AspectIdentity::Default,
            ..OracleConfig::default()
        },
    )
    .unwrap();
    assert!(per_default.s_entails(&query).unwrap());
}

#[test]
fn mp_is_sound_for_per_default_preferences_on_four_atoms() {
    use defeasible_alc::{
        compute_ranking, mp_entails, Concept, DefeasibleInclusion, KnowledgeBase, Query,
        StrictInclusion,
    };
    use rand::Rng;

    let atoms = ["A", "B", "C", "D"];
    let config = OracleConfig {
        aspect_identity: AspectIdentity::Default,
        ..OracleConfig::default()
    };
    let signature = atoms.iter().map(|a| a.to_string()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut separations = 0;
    for _ in 0..150 {
        let mut kb = KnowledgeBase::new();
        let pick = |rng: &mut ChaCha8Rng| Concept::atom(atoms[rng.gen_range(0..4)]);
        for _ in 0..rng.gen_range(0..=2) {
            let (l, r) = (pick(&mut rng), pick(&mut rng));
            kb.add_strict(StrictInclusion::new(l, r));
        }
        for _ in 0..rng.gen_range(1..=5) {
            let s = pick(&mut rng);
            let a = if rng.gen_bool(0.5) {
                Concept::not(pick(&mut rng))
            } else {
                pick(&mut rng)
            };
            kb.add_defeasible(DefeasibleInclusion::new(s, a));
        }
        let r = compute_ranking(&kb).unwrap();
        let oracle = Oracle::with_atoms(&kb, &signature, config).unwrap();
        for s in atoms {
            for a in atoms {
                for rhs in [Concept::atom(a), Concept::not(Concept::atom(a))] {
                    let query = Query::typical(Concept::atom(s), rhs);
                    let mp = mp_entails(&kb, &r, &query).unwrap();
                    let os = oracle.s_entails(&query).unwrap();
                    assert!(!mp || os, "{kb}\n{query}");
                    separations += usize::from(os && !oracle.rc_entails(&query).unwrap());
                }
            }
        }
    }
    assert!(separations > 0);
}
