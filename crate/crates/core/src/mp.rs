//! Multipreference closure: maximal compatible bases under the stratified
//! subset preference, and entailment over all of them.
//!
//! The base search is shared with the lexicographic closure ([`crate::lex`]);
//! only the per-stratum selection policy differs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::concept::Concept;
use crate::error::{Error, Result};
use crate::kb::{materialize, DefeasibleInclusion, KnowledgeBase, Query, QueryLhs};
use crate::ranking::{Rank, RankingResult};
use crate::typicality::{strict_query_entails, TBoxStage};

/// Subsets of a stratum are enumerated exhaustively, so strata wider than
/// this are rejected.
pub const MAX_STRATUM_WIDTH: usize = 20;

/// How a stratum's candidate subsets are narrowed down.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SelectionPolicy {
    /// Keep every ⊆-maximal compatible subset (MP-closure).
    SubsetMaximal,
    /// Keep only the compatible subsets of largest size (lexicographic closure).
    CardinalityMaximal,
}

/// A maximal set of defaults compatible with a subject of rank `k`:
/// a chosen subset of every stratum below `k`, plus all of `δ(E_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Base {
    pub k: usize,
    /// Stratum index to chosen defaults, for every stratum below `k`.
    pub selection: BTreeMap<usize, Vec<DefeasibleInclusion>>,
    pub forced: Vec<DefeasibleInclusion>,
}

impl Base {
    /// Selected and forced defaults together.
    pub fn defaults(&self) -> impl Iterator<Item = &DefeasibleInclusion> {
        self.selection.values().flatten().chain(&self.forced)
    }

    pub fn materialization(&self) -> Concept {
        materialize(self.defaults())
    }

    /// Printed defaults, highest stratum first, forced ones leading.
    pub fn printed(&self) -> Vec<String> {
        self.forced
            .iter()
            .chain(self.selection.values().rev().flatten())
            .map(|d| d.to_string())
            .collect()
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.printed().join(", "))
    }
}

/// The preference `S' ≺ S` between stratified selections: at the highest
/// stratum where they differ, `S'` strictly contains `S`.
pub struct StratifiedPreference;

impl StratifiedPreference {
    /// Is `preferred` ≺ `other`? Missing strata count as empty.
    pub fn prefers<T: Ord>(
        preferred: &BTreeMap<usize, BTreeSet<T>>,
        other: &BTreeMap<usize, BTreeSet<T>>,
    ) -> bool {
        let empty = BTreeSet::new();
        let top = preferred.keys().chain(other.keys()).copied().max();
        let Some(top) = top else { return false };
        for h in (0..=top).rev() {
            let p = preferred.get(&h).unwrap_or(&empty);
            let o = other.get(&h).unwrap_or(&empty);
            if p != o {
                return o.is_subset(p);
            }
        }
        false
    }
}

struct Search<'a> {
    ranking: &'a RankingResult,
    stage: &'a TBoxStage,
    subject: &'a Concept,
    policy: SelectionPolicy,
    k: usize,
    found: Vec<(BTreeSet<usize>, Base)>,
    order: Vec<DefeasibleInclusion>,
}

impl Search<'_> {
    fn compatible(&self, defaults: &[&DefeasibleInclusion]) -> Result<bool> {
        let extra = materialize(defaults.iter().copied());
        Ok(!self.stage.guarded_entails(
            self.ranking.tableau(),
            &extra,
            self.subject,
            &Concept::Bot,
        )?)
    }

    fn index(&self, d: &DefeasibleInclusion) -> usize {
        self.order.iter().position(|x| x == d).unwrap_or(usize::MAX)
    }

    /// Compatible choices from stratum `h` on top of `accepted`.
    fn choices(
        &self,
        h: usize,
        accepted: &[&DefeasibleInclusion],
    ) -> Result<Vec<Vec<DefeasibleInclusion>>> {
        let stratum = &self.ranking.strata()[h];
        let n = stratum.len();
        if n > MAX_STRATUM_WIDTH {
            return Err(Error::Unsupported(format!(
                "stratum {h} has {n} defaults; base search enumerates at most {MAX_STRATUM_WIDTH}"
            )));
        }
        let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
        for mask in 0..(1u64 << n) {
            by_size[mask.count_ones() as usize].push(mask);
        }
        let mut kept: Vec<u64> = Vec::new();
        for size in (0..=n).rev() {
            for &mask in &by_size[size] {
                if self.policy == SelectionPolicy::SubsetMaximal
                    && kept.iter().any(|&k| k & mask == mask)
                {
                    continue;
                }
                let mut candidate: Vec<&DefeasibleInclusion> = accepted.to_vec();
                candidate.extend((0..n).filter(|i| mask >> i & 1 == 1).map(|i| &stratum[i]));
                if self.compatible(&candidate)? {
                    kept.push(mask);
                }
            }
            if self.policy == SelectionPolicy::CardinalityMaximal && !kept.is_empty() {
                break;
            }
        }
        Ok(kept
            .into_iter()
            .map(|mask| {
                (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| stratum[i].clone())
                    .collect()
            })
            .collect())
    }

    fn explore(
        &mut self,
        h: Option<usize>,
        selection: &mut BTreeMap<usize, Vec<DefeasibleInclusion>>,
    ) -> Result<()> {
        let Some(h) = h else {
            let base = Base {
                k: self.k,
                selection: selection.clone(),
                forced: self.stage.defeasible.clone(),
            };
            let key: BTreeSet<usize> = base.defaults().map(|d| self.index(d)).collect();
            if !self.found.iter().any(|(k, _)| *k == key) {
                self.found.push((key, base));
            }
            return Ok(());
        };
        let accepted: Vec<DefeasibleInclusion> = selection
            .values()
            .flatten()
            .chain(&self.stage.defeasible)
            .cloned()
            .collect();
        let accepted_refs: Vec<&DefeasibleInclusion> = accepted.iter().collect();
        for choice in self.choices(h, &accepted_refs)? {
            selection.insert(h, choice);
            self.explore(h.checked_sub(1), selection)?;
            selection.remove(&h);
        }
        Ok(())
    }
}

/// Maximal bases for `b` under `policy`, in canonical order. Empty when `b`
/// has infinite rank.
pub fn bases(
    kb: &KnowledgeBase,
    ranking: &RankingResult,
    b: &Concept,
    policy: SelectionPolicy,
) -> Result<Vec<Base>> {
    let Rank::Finite(k) = ranking.concept_rank(b)? else {
        return Ok(Vec::new());
    };
    let mut search = Search {
        ranking,
        stage: ranking.stage(k),
        subject: b,
        policy,
        k,
        found: Vec::new(),
        order: kb.defeasible.clone(),
    };
    search.explore(k.checked_sub(1), &mut BTreeMap::new())?;
    let mut found = search.found;
    found.sort_by(|a, b| a.0.iter().cmp(b.0.iter()));
    Ok(found.into_iter().map(|(_, base)| base).collect())
}

pub fn mp_bases(kb: &KnowledgeBase, ranking: &RankingResult, b: &Concept) -> Result<Vec<Base>> {
    bases(kb, ranking, b, SelectionPolicy::SubsetMaximal)
}

/// The verdict for a typicality query with the per-base outcomes behind it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureVerdict {
    pub entailed: bool,
    pub subject_rank: Rank,
    pub bases: Vec<(Base, bool)>,
}

/// Decides a typicality query `T(B) ⊑ D` over every base for `B`.
/// A subject of infinite rank entails everything.
pub fn explain(
    kb: &KnowledgeBase,
    ranking: &RankingResult,
    b: &Concept,
    d: &Concept,
    policy: SelectionPolicy,
) -> Result<ClosureVerdict> {
    let subject_rank = ranking.concept_rank(b)?;
    let Rank::Finite(k) = subject_rank else {
        return Ok(ClosureVerdict {
            entailed: true,
            subject_rank,
            bases: Vec::new(),
        });
    };
    let stage = ranking.stage(k);
    let mut outcomes = Vec::new();
    for base in bases(kb, ranking, b, policy)? {
        let holds = stage.guarded_entails(ranking.tableau(), &base.materialization(), b, d)?;
        outcomes.push((base, holds));
    }
    Ok(ClosureVerdict {
        entailed: outcomes.iter().all(|(_, holds)| *holds),
        subject_rank,
        bases: outcomes,
    })
}

pub(crate) fn entails_with(
    kb: &KnowledgeBase,
    ranking: &RankingResult,
    q: &Query,
    policy: SelectionPolicy,
) -> Result<bool> {
    match &q.lhs {
        QueryLhs::Typical(b) => Ok(explain(kb, ranking, b, &q.rhs, policy)?.entailed),
        QueryLhs::Plain(_) => strict_query_entails(kb, ranking, q),
    }
}

/// Does `q` follow from the MP-closure? Plain queries are decided classically.
pub fn mp_entails(kb: &KnowledgeBase, ranking: &RankingResult, q: &Query) -> Result<bool> {
    entails_with(kb, ranking, q, SelectionPolicy::SubsetMaximal)
}
