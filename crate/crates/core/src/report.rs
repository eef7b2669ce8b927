//! Command dispatch shared by the command-line tool and the C interface:
//! every command produces a [`CliResult`], printable as text or JSON.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::concept::Concept;
use crate::error::{Error, Result};
use crate::kb::{KnowledgeBase, Query, QueryLhs};
use crate::mp::{explain, Base, SelectionPolicy};
use crate::oracle::{Oracle, OracleConfig};
use crate::ranking::{compute_ranking_with, rc_entails, Rank, RankingResult};
use crate::tableau::{Tableau, DEFAULT_MAX_EXPANSIONS};
use crate::typicality::strict_query_entails;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Strict axioms only; typicality queries are rejected.
    Classical,
    Rc,
    Mp,
    Lex,
    OracleRc,
    OracleS,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Classical,
        Method::Rc,
        Method::Mp,
        Method::Lex,
        Method::OracleRc,
        Method::OracleS,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Classical => "classical",
            Method::Rc => "rc",
            Method::Mp => "mp",
            Method::Lex => "lex",
            Method::OracleRc => "oracle-rc",
            Method::OracleS => "oracle-s",
        }
    }

    fn policy(self) -> Option<SelectionPolicy> {
        match self {
            Method::Mp => Some(SelectionPolicy::SubsetMaximal),
            Method::Lex => Some(SelectionPolicy::CardinalityMaximal),
            _ => None,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Method::ALL.iter().map(|m| m.name()).collect();
                format!("unknown method `{s}`, expected one of {}", names.join(", "))
            })
    }
}

/// Resource bounds of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_nodes: usize,
    pub oracle: OracleConfig,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_nodes: DEFAULT_MAX_EXPANSIONS,
            oracle: OracleConfig::default(),
        }
    }
}

/// Outcome of one command. Fields that do not apply are `null` in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliResult {
    pub command: String,
    pub method: Option<String>,
    pub query: Option<String>,
    pub entailed: Option<bool>,
    pub rank_lhs: Option<Rank>,
    pub rank_lhs_and_neg_rhs: Option<Rank>,
    pub bases: Option<Vec<Vec<String>>>,
    /// Per-base verdicts, parallel to `bases`.
    pub base_entails: Option<Vec<bool>>,
    pub strata: Option<Vec<Vec<String>>>,
    pub infinite_rank: Option<Vec<String>>,
    pub abox_consistent: Option<bool>,
    pub elapsed_ms: u64,
    #[serde(skip)]
    pub explain: bool,
}

impl CliResult {
    fn new(command: &str) -> Self {
        CliResult {
            command: command.to_owned(),
            method: None,
            query: None,
            entailed: None,
            rank_lhs: None,
            rank_lhs_and_neg_rhs: None,
            bases: None,
            base_entails: None,
            strata: None,
            infinite_rank: None,
            abox_consistent: None,
            elapsed_ms: 0,
            explain: false,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result serializes")
    }
}

fn write_bases(
    f: &mut fmt::Formatter<'_>,
    bases: &[Vec<String>],
    verdicts: Option<&[bool]>,
) -> fmt::Result {
    for (i, base) in bases.iter().enumerate() {
        write!(f, "  base {}: {{{}}}", i + 1, base.join(", "))?;
        match verdicts {
            Some(v) => writeln!(f, " -> {}", v[i])?,
            None => writeln!(f)?,
        }
    }
    Ok(())
}

impl fmt::Display for CliResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.command.as_str() {
            "check" => {
                let ok = self.abox_consistent == Some(true);
                writeln!(f, "{}", if ok { "consistent" } else { "inconsistent" })?;
            }
            "rank" => {
                let rank = self.rank_lhs.expect("rank is set");
                writeln!(
                    f,
                    "rank({}) = {rank}",
                    self.query.as_deref().unwrap_or_default()
                )?;
            }
            "entails" => {
                writeln!(
                    f,
                    "{}: {} ({})",
                    self.query.as_deref().unwrap_or_default(),
                    self.entailed.expect("verdict is set"),
                    self.method.as_deref().unwrap_or_default()
                )?;
                if let (Some(l), Some(r)) = (self.rank_lhs, self.rank_lhs_and_neg_rhs) {
                    writeln!(f, "  rank(lhs) = {l}, rank(lhs and not rhs) = {r}")?;
                } else if let Some(l) = self.rank_lhs {
                    writeln!(f, "  rank(lhs) = {l}")?;
                }
                if self.explain {
                    if let Some(bases) = &self.bases {
                        write_bases(f, bases, self.base_entails.as_deref())?;
                    }
                }
            }
            "bases" => {
                let bases = self.bases.as_deref().unwrap_or_default();
                let rank = self.rank_lhs.expect("rank is set");
                writeln!(
                    f,
                    "{} {} base(s) for {} (rank {rank})",
                    bases.len(),
                    self.method.as_deref().unwrap_or_default(),
                    self.query.as_deref().unwrap_or_default()
                )?;
                write_bases(f, bases, None)?;
            }
            other => writeln!(f, "{other}")?,
        }
        if let Some(strata) = &self.strata {
            writeln!(f, "strata:")?;
            for (i, s) in strata.iter().enumerate() {
                writeln!(f, "  D{i}: {}", s.join(", "))?;
            }
            if let Some(inf) = self.infinite_rank.as_ref().filter(|v| !v.is_empty()) {
                writeln!(f, "  inf: {}", inf.join(", "))?;
            }
        }
        Ok(())
    }
}

/// Process exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. } | Error::NamespaceClash { .. } => 2,
        Error::InconsistentAbox => 3,
        Error::ResourceLimit { .. } => 4,
        Error::OracleBounds(_) | Error::RoleBearing(_) => 5,
        Error::Unsupported(_) | Error::NoModel(_) | Error::Verification(_) => 1,
    }
}

pub fn check(kb: &KnowledgeBase, limits: &Limits) -> Result<CliResult> {
    let mut out = CliResult::new("check");
    out.abox_consistent = Some(Tableau::with_budget(limits.max_nodes).abox_consistent(kb)?);
    Ok(out)
}

fn printed_bases(bases: &[Base]) -> Vec<Vec<String>> {
    bases.iter().map(Base::printed).collect()
}

/// A loaded KB with its ranking, ready to answer commands.
#[derive(Debug)]
pub struct Engine {
    kb: KnowledgeBase,
    ranking: RankingResult,
    limits: Limits,
}

impl Engine {
    /// Fails with [`Error::InconsistentAbox`] when the ABox contradicts the
    /// strict axioms.
    pub fn new(kb: KnowledgeBase, limits: Limits) -> Result<Self> {
        let tableau = Tableau::with_budget(limits.max_nodes);
        if !tableau.abox_consistent(&kb)? {
            return Err(Error::InconsistentAbox);
        }
        let ranking = compute_ranking_with(&kb, tableau)?;
        Ok(Engine {
            kb,
            ranking,
            limits,
        })
    }

    pub fn kb(&self) -> &KnowledgeBase {
        &self.kb
    }

    pub fn ranking(&self) -> &RankingResult {
        &self.ranking
    }

    fn strata(&self, out: &mut CliResult) {
        let print =
            |s: &[crate::kb::DefeasibleInclusion]| s.iter().map(|d| d.to_string()).collect();
        out.strata = Some(self.ranking.strata().iter().map(|s| print(s)).collect());
        out.infinite_rank = Some(print(self.ranking.infinite_defaults()));
    }

    pub fn rank(&self, c: &Concept) -> Result<CliResult> {
        self.kb
            .check_query(&Query::plain(c.clone(), Concept::Top))?;
        let mut out = CliResult::new("rank");
        out.query = Some(c.to_string());
        out.rank_lhs = Some(self.ranking.concept_rank(c)?);
        self.strata(&mut out);
        Ok(out)
    }

    pub fn entails(&self, method: Method, q: &Query) -> Result<CliResult> {
        self.kb.check_query(q)?;
        let mut out = CliResult::new("entails");
        out.method = Some(method.name().to_owned());
        out.query = Some(q.to_string());
        let verdict = match (method, &q.lhs) {
            (Method::Classical, QueryLhs::Typical(_)) => {
                return Err(Error::Unsupported(
                    "the classical method takes plain queries; use rc, mp or lex for T(C) <= D"
                        .into(),
                ))
            }
            (Method::Classical, QueryLhs::Plain(_)) => {
                self.ranking.tableau().entails(&self.kb.strict, q)?
            }
            (Method::OracleRc | Method::OracleS, _) => {
                let oracle = Oracle::for_query(&self.kb, q, self.limits.oracle)?;
                if method == Method::OracleRc {
                    oracle.rc_entails(q)?
                } else {
                    oracle.s_entails(q)?
                }
            }
            (_, QueryLhs::Plain(_)) => strict_query_entails(&self.kb, &self.ranking, q)?,
            (Method::Rc, QueryLhs::Typical(c)) => {
                out.rank_lhs = Some(self.ranking.concept_rank(c)?);
                let exception = Concept::and(c.clone(), Concept::not(q.rhs.clone()));
                out.rank_lhs_and_neg_rhs = Some(self.ranking.concept_rank(&exception)?);
                rc_entails(&self.kb, &self.ranking, q)?
            }
            (Method::Mp | Method::Lex, QueryLhs::Typical(c)) => {
                let policy = method.policy().expect("closure method");
                let verdict = explain(&self.kb, &self.ranking, c, &q.rhs, policy)?;
                out.rank_lhs = Some(verdict.subject_rank);
                let (bases, holds): (Vec<Base>, Vec<bool>) = verdict.bases.into_iter().unzip();
                out.bases = Some(printed_bases(&bases));
                out.base_entails = Some(holds);
                verdict.entailed
            }
        };
        out.entailed = Some(verdict);
        Ok(out)
    }

    pub fn bases(&self, method: Method, c: &Concept) -> Result<CliResult> {
        let Some(policy) = method.policy() else {
            return Err(Error::Unsupported(format!(
                "bases are listed for mp and lex, not {method}"
            )));
        };
        self.kb
            .check_query(&Query::plain(c.clone(), Concept::Top))?;
        let mut out = CliResult::new("bases");
        out.method = Some(method.name().to_owned());
        out.query = Some(c.to_string());
        out.rank_lhs = Some(self.ranking.concept_rank(c)?);
        let bases = crate::mp::bases(&self.kb, &self.ranking, c, policy)?;
        out.bases = Some(printed_bases(&bases));
        Ok(out)
    }
}
