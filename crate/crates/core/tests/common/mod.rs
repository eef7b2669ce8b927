//! Helpers shared by the integration tests: fixtures, random role-free KBs
//! and truth-table reference computations that share no code with the
//! library's reasoning paths.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use defeasible_alc::{parse_kb, Concept, KnowledgeBase, Query, RankingResult};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn fixture(name: &str) -> KnowledgeBase {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture readable");
    parse_kb(&text).expect("fixture parses")
}

pub const FIXTURES: [&str; 4] = ["kb1.dl", "kb2.dl", "kb3.dl", "kb4.dl"];

pub const ATOMS: [&str; 3] = ["A", "B", "C"];

pub fn random_concept<R: Rng>(rng: &mut R, atoms: &[&str], depth: usize) -> Concept {
    let leaf = depth == 0 || rng.gen_bool(0.35);
    if leaf {
        return match rng.gen_range(0..12) {
            0 => Concept::Top,
            1 => Concept::Bot,
            _ => {
                let a = Concept::atom(*atoms.choose(rng).expect("atoms"));
                if rng.gen_bool(0.3) {
                    Concept::not(a)
                } else {
                    a
                }
            }
        };
    }
    match rng.gen_range(0..3) {
        0 => Concept::not(random_concept(rng, atoms, depth - 1)),
        1 => Concept::and(
            random_concept(rng, atoms, depth - 1),
            random_concept(rng, atoms, depth - 1),
        ),
        _ => Concept::or(
            random_concept(rng, atoms, depth - 1),
            random_concept(rng, atoms, depth - 1),
        ),
    }
}

fn literal<R: Rng>(rng: &mut R, atoms: &[&str]) -> Concept {
    let a = Concept::atom(*atoms.choose(rng).expect("atoms"));
    if rng.gen_bool(0.5) {
        Concept::not(a)
    } else {
        a
    }
}

/// Subjects shaped like the usual examples: an atom or a conjunction of two.
fn subject<R: Rng>(rng: &mut R, atoms: &[&str]) -> Concept {
    let a = Concept::atom(*atoms.choose(rng).expect("atoms"));
    if rng.gen_bool(0.3) {
        Concept::and(a, Concept::atom(*atoms.choose(rng).expect("atoms")))
    } else {
        a
    }
}

/// A role-free KB over at most three atoms with at most five defaults. Half
/// of the KBs use arbitrary concepts; the rest use atomic subjects, literal
/// aspects and atom-to-literal strict axioms, which produce deeper rankings.
pub fn random_kb<R: Rng>(rng: &mut R) -> KnowledgeBase {
    let width = rng.gen_range(2..=3);
    let atoms = &ATOMS[..width];
    let structured = rng.gen_bool(0.5);
    let mut kb = KnowledgeBase::new();
    for _ in 0..rng.gen_range(0..=2) {
        let (lhs, rhs) = if structured {
            (subject(rng, atoms), literal(rng, atoms))
        } else {
            (random_concept(rng, atoms, 1), random_concept(rng, atoms, 1))
        };
        kb.add_strict(defeasible_alc::StrictInclusion::new(lhs, rhs));
    }
    for _ in 0..rng.gen_range(1..=5) {
        let (s, a) = if structured {
            (subject(rng, atoms), literal(rng, atoms))
        } else {
            (random_concept(rng, atoms, 1), random_concept(rng, atoms, 1))
        };
        kb.add_defeasible(defeasible_alc::DefeasibleInclusion::new(s, a));
    }
    kb
}

/// Typicality queries over the KB's atoms: every atom against every literal,
/// every default's subject against its aspect and a random concept, plus
/// `extra` random pairs.
pub fn random_queries<R: Rng>(rng: &mut R, kb: &KnowledgeBase, extra: usize) -> Vec<Query> {
    let atoms: Vec<String> = kb.atoms().into_iter().collect();
    let atoms: Vec<&str> = if atoms.is_empty() {
        vec!["A"]
    } else {
        atoms.iter().map(String::as_str).collect()
    };
    let mut out = Vec::new();
    for s in &atoms {
        for a in &atoms {
            for rhs in [Concept::atom(*a), Concept::not(Concept::atom(*a))] {
                out.push(Query::typical(Concept::atom(*s), rhs));
            }
        }
    }
    for d in &kb.defeasible {
        out.push(Query::typical(d.subject().clone(), d.aspect().clone()));
        out.push(Query::typical(
            d.subject().clone(),
            random_concept(rng, &atoms, 1),
        ));
    }
    for _ in 0..extra {
        out.push(Query::typical(subject(rng, &atoms), literal(rng, &atoms)));
        out.push(Query::typical(
            random_concept(rng, &atoms, 1),
            random_concept(rng, &atoms, 1),
        ));
    }
    out
}

/// Truth-table evaluation over a fixed atom order.
pub struct TruthTable {
    pub atoms: Vec<String>,
}

impl TruthTable {
    pub fn for_kb(kb: &KnowledgeBase, extra: &[&Concept]) -> Self {
        let mut atoms = kb.atoms();
        for c in extra {
            atoms.extend(c.atoms());
        }
        TruthTable {
            atoms: atoms.into_iter().collect(),
        }
    }

    pub fn eval(&self, c: &Concept, v: u32) -> bool {
        match c {
            Concept::Top => true,
            Concept::Bot => false,
            Concept::Atom(a) => {
                let i = self.atoms.iter().position(|x| x == a).expect("known atom");
                v >> i & 1 == 1
            }
            Concept::Not(x) => !self.eval(x, v),
            Concept::And(l, r) => self.eval(l, v) && self.eval(r, v),
            Concept::Or(l, r) => self.eval(l, v) || self.eval(r, v),
            _ => panic!("role-free only"),
        }
    }

    pub fn valuations(&self) -> impl Iterator<Item = u32> {
        0..1u32 << self.atoms.len()
    }

    /// Is there a valuation satisfying every strict axiom, every concept in
    /// `also`, and the materialization of every listed default?
    pub fn consistent(&self, kb: &KnowledgeBase, defaults: &[usize], also: &[&Concept]) -> bool {
        self.valuations().any(|v| {
            kb.strict
                .iter()
                .all(|s| !self.eval(&s.lhs, v) || self.eval(&s.rhs, v))
                && defaults.iter().all(|&d| {
                    let d = &kb.defeasible[d];
                    !self.eval(d.subject(), v) || self.eval(d.aspect(), v)
                })
                && also.iter().all(|c| self.eval(c, v))
        })
    }
}

/// Default indices (KB order) per stratum and of the forced stage `E_k`.
pub fn strata_indices(kb: &KnowledgeBase, ranking: &RankingResult) -> Vec<Vec<usize>> {
    ranking
        .strata()
        .iter()
        .map(|s| {
            s.iter()
                .map(|d| kb.default_index(d).expect("default in kb"))
                .collect()
        })
        .collect()
}

pub fn stage_indices(kb: &KnowledgeBase, ranking: &RankingResult, k: usize) -> Vec<usize> {
    ranking
        .stage(k)
        .defeasible
        .iter()
        .map(|d| kb.default_index(d).expect("default in kb"))
        .collect()
}

type Stratified = BTreeMap<usize, BTreeSet<usize>>;

fn stratify(strata: &[Vec<usize>], chosen: &BTreeSet<usize>) -> Stratified {
    strata
        .iter()
        .enumerate()
        .map(|(h, s)| {
            (
                h,
                s.iter().copied().filter(|d| chosen.contains(d)).collect(),
            )
        })
        .collect()
}

/// `a` preferred to `b`: at the highest differing stratum `a` is a strict
/// superset of `b`.
fn subset_preferred(a: &Stratified, b: &Stratified) -> bool {
    for (h, sa) in a.iter().rev() {
        let sb = &b[h];
        if sa != sb {
            return sa.is_superset(sb);
        }
    }
    false
}

/// `a` preferred to `b`: at the highest stratum where the counts differ, `a`
/// has more.
fn count_preferred(a: &Stratified, b: &Stratified) -> bool {
    for (h, sa) in a.iter().rev() {
        let sb = &b[h];
        if sa.len() != sb.len() {
            return sa.len() > sb.len();
        }
    }
    false
}

/// Brute-force bases for a subject of finite rank `k`: every subset of the
/// strata below `k`, kept when compatible and not beaten under the
/// preference. Each result includes the forced defaults of `E_k`.
pub fn naive_bases(
    kb: &KnowledgeBase,
    ranking: &RankingResult,
    b: &Concept,
    k: usize,
    cardinality: bool,
) -> BTreeSet<BTreeSet<usize>> {
    let table = TruthTable::for_kb(kb, &[b]);
    let strata: Vec<Vec<usize>> = strata_indices(kb, ranking).into_iter().take(k).collect();
    let forced = stage_indices(kb, ranking, k);
    let pool: Vec<usize> = strata.iter().flatten().copied().collect();
    let mut compatible: Vec<BTreeSet<usize>> = Vec::new();
    for mask in 0..1u64 << pool.len() {
        let chosen: BTreeSet<usize> = (0..pool.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| pool[i])
            .collect();
        let mut all: Vec<usize> = chosen.iter().copied().collect();
        all.extend(&forced);
        if table.consistent(kb, &all, &[b]) {
            compatible.push(chosen);
        }
    }
    let preferred = if cardinality {
        count_preferred
    } else {
        subset_preferred
    };
    compatible
        .iter()
        .filter(|s| {
            let ss = stratify(&strata, s);
            !compatible
                .iter()
                .any(|o| preferred(&stratify(&strata, o), &ss))
        })
        .map(|s| s.iter().copied().chain(forced.iter().copied()).collect())
        .collect()
}
