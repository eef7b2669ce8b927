//! Defeasible reasoning in the description logic ALC with a typicality
//! operator.
//!
//! The crate computes the rational closure of a TBox, the multipreference
//! (MP) closure and the lexicographic closure on top of a shared ALC tableau,
//! and ships a brute-force model enumerator ([`oracle`]) for the role-free
//! fragment that is used to cross-check the syntactic constructions.
//!
//! ```
//! use defeasible_alc::{parse_kb, parse_query, compute_ranking, rc_entails, mp_entails};
//!
//! let kb = parse_kb("
//!     Penguin <= Bird.
//!     T(Bird) <= Fly.
//!     T(Bird) <= HasNiceFeather.
//!     T(Penguin) <= not Fly.
//! ").unwrap();
//! let ranking = compute_ranking(&kb).unwrap();
//! let q = parse_query("T(Penguin) <= HasNiceFeather").unwrap();
//! assert!(!rc_entails(&kb, &ranking, &q).unwrap());
//! assert!(mp_entails(&kb, &ranking, &q).unwrap());
//! ```

pub mod concept;
pub mod error;
pub mod kb;
pub mod lex;
pub mod mp;
pub mod oracle;
pub mod parser;
pub mod ranking;
pub mod report;
pub mod tableau;
pub mod typicality;

pub use concept::Concept;
pub use error::{Error, Result};
pub use kb::{
    aspects, materialize, DefeasibleInclusion, KnowledgeBase, Query, QueryLhs, StrictInclusion,
};
pub use lex::{lex_bases, lex_entails};
pub use mp::{mp_bases, mp_entails, Base, SelectionPolicy, StratifiedPreference};
pub use parser::{parse_concept, parse_kb, parse_query};
pub use ranking::{
    compute_ranking, compute_ranking_with, concept_rank, rc_entails, Rank, RankingResult,
};
pub use tableau::Tableau;
pub use typicality::{guarded_entails, is_exceptional, strict_query_entails, TBoxStage};
