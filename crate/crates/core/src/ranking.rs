//! The exceptionality sequence, concept ranks and rational-closure entailment.

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use serde::{Serialize, Serializer};

use crate::concept::Concept;
use crate::error::Result;
use crate::kb::{DefeasibleInclusion, KnowledgeBase, Query, QueryLhs};
use crate::tableau::Tableau;
use crate::typicality::{strict_query_entails, TBoxStage};

/// A concept or default rank. `Infinite` sorts above every finite rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rank {
    Finite(usize),
    Infinite,
}

impl Rank {
    pub fn finite(self) -> Option<usize> {
        match self {
            Rank::Finite(k) => Some(k),
            Rank::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Rank::Infinite
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Finite(k) => write!(f, "{k}"),
            Rank::Infinite => f.write_str("inf"),
        }
    }
}

/// Finite ranks serialize as numbers, the infinite rank as `"inf"`.
impl Serialize for Rank {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Rank::Finite(k) => s.serialize_u64(*k as u64),
            Rank::Infinite => s.serialize_str("inf"),
        }
    }
}

/// The exceptionality sequence `E_0 ⊇ E_1 ⊇ … ⊇ E_n` of a TBox together with
/// the strata `D_i = δ(E_i) − δ(E_{i+1})` it induces.
///
/// `E_n` is the fixpoint; its defaults (possibly none) have infinite rank.
/// Concept ranks are memoized by canonical form.
#[derive(Debug)]
pub struct RankingResult {
    tableau: Tableau,
    stages: Vec<TBoxStage>,
    strata: Vec<Vec<DefeasibleInclusion>>,
    infinite: Vec<DefeasibleInclusion>,
    default_ranks: Vec<(DefeasibleInclusion, Rank)>,
    cache: RwLock<HashMap<Concept, Rank>>,
}

impl RankingResult {
    pub fn stages(&self) -> &[TBoxStage] {
        &self.stages
    }

    /// `E_k`, reading `E_m = E_n` past the fixpoint.
    pub fn stage(&self, k: usize) -> &TBoxStage {
        &self.stages[k.min(self.stages.len() - 1)]
    }

    pub fn strata(&self) -> &[Vec<DefeasibleInclusion>] {
        &self.strata
    }

    pub fn infinite_defaults(&self) -> &[DefeasibleInclusion] {
        &self.infinite
    }

    /// Ranks of all defaults, in KB order.
    pub fn default_ranks(&self) -> &[(DefeasibleInclusion, Rank)] {
        &self.default_ranks
    }

    pub fn default_rank(&self, d: &DefeasibleInclusion) -> Option<Rank> {
        self.default_ranks
            .iter()
            .find(|(x, _)| x == d)
            .map(|&(_, r)| r)
    }

    pub fn tableau(&self) -> &Tableau {
        &self.tableau
    }

    /// The least `i` such that `c` is not exceptional for `E_i`.
    pub fn concept_rank(&self, c: &Concept) -> Result<Rank> {
        let key = c.canonical();
        if let Some(&r) = self.cache.read().expect("rank cache poisoned").get(&key) {
            return Ok(r);
        }
        let mut rank = Rank::Infinite;
        for (i, stage) in self.stages.iter().enumerate() {
            if !stage.is_exceptional(&self.tableau, &key)? {
                rank = Rank::Finite(i);
                break;
            }
        }
        self.cache
            .write()
            .expect("rank cache poisoned")
            .insert(key, rank);
        Ok(rank)
    }
}

pub fn compute_ranking(kb: &KnowledgeBase) -> Result<RankingResult> {
    compute_ranking_with(kb, Tableau::default())
}

pub fn compute_ranking_with(kb: &KnowledgeBase, tableau: Tableau) -> Result<RankingResult> {
    let mut stages = vec![TBoxStage::initial(kb)];
    loop {
        let current = stages.last().expect("at least one stage");
        let mut next = Vec::new();
        for d in &current.defeasible {
            if current.is_exceptional(&tableau, d.subject())? {
                next.push(d.clone());
            }
        }
        if next.len() == current.defeasible.len() {
            break;
        }
        stages.push(TBoxStage::new(kb.strict.clone(), next));
    }

    let strata: Vec<Vec<DefeasibleInclusion>> = stages
        .windows(2)
        .map(|w| {
            w[0].defeasible
                .iter()
                .filter(|d| !w[1].defeasible.contains(d))
                .cloned()
                .collect()
        })
        .collect();
    let infinite = stages
        .last()
        .expect("at least one stage")
        .defeasible
        .clone();
    let default_ranks = kb
        .defeasible
        .iter()
        .map(|d| {
            let rank = strata
                .iter()
                .position(|s| s.contains(d))
                .map_or(Rank::Infinite, Rank::Finite);
            (d.clone(), rank)
        })
        .collect();

    Ok(RankingResult {
        tableau,
        stages,
        strata,
        infinite,
        default_ranks,
        cache: RwLock::new(HashMap::new()),
    })
}

pub fn concept_rank(ranking: &RankingResult, c: &Concept) -> Result<Rank> {
    ranking.concept_rank(c)
}

/// Membership of `q` in the rational closure of the TBox.
pub fn rc_entails(kb: &KnowledgeBase, ranking: &RankingResult, q: &Query) -> Result<bool> {
    match &q.lhs {
        QueryLhs::Typical(c) => {
            let rank = ranking.concept_rank(c)?;
            if rank.is_infinite() {
                return Ok(true);
            }
            let exception = Concept::and(c.clone(), Concept::not(q.rhs.clone()));
            Ok(rank < ranking.concept_rank(&exception)?)
        }
        QueryLhs::Plain(_) => strict_query_entails(kb, ranking, q),
    }
}
