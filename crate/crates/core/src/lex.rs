//! Lexicographic closure over the same strata: within a stratum, bases that
//! keep more defaults are preferred.

use crate::concept::Concept;
use crate::error::Result;
use crate::kb::{KnowledgeBase, Query};
use crate::mp::{bases, entails_with, Base, SelectionPolicy};
use crate::ranking::RankingResult;

pub fn lex_bases(kb: &KnowledgeBase, ranking: &RankingResult, b: &Concept) -> Result<Vec<Base>> {
    bases(kb, ranking, b, SelectionPolicy::CardinalityMaximal)
}

pub fn lex_entails(kb: &KnowledgeBase, ranking: &RankingResult, q: &Query) -> Result<bool> {
    entails_with(kb, ranking, q, SelectionPolicy::CardinalityMaximal)
}
