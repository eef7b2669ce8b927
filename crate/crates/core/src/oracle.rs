//! Brute-force model theory for role-free knowledge bases.
//!
//! Domain elements are the truth assignments over the KB's atoms that are
//! consistent with the KB; one element per assignment makes every model
//! canonical. Two kinds of models are built:
//!
//! * the minimal canonical ranked model, whose ranks come from an
//!   exceptionality sequence recomputed here by truth tables;
//! * the minimal canonical S-enriched models, where every aspect preference
//!   has the two-level minimal shape and the global ranking is the
//!   pointwise-minimal solution of the typicality and specificity conditions.
//!
//! Nothing here calls the tableau or the closure modules: the oracle is the
//! independent reference those are tested against.

use std::collections::BTreeSet;
use std::fmt;

use crate::concept::Concept;
use crate::error::{Error, Result};
use crate::kb::{KnowledgeBase, Query, QueryLhs};

pub const DEFAULT_MAX_ATOMS: usize = 5;
pub const DEFAULT_MAX_DOMAIN: usize = 16;
/// Distinct default subjects; the S-enriched search visits every weak order
/// over them.
pub const MAX_SUBJECTS: usize = 7;

/// A truth assignment; bit `i` is the value of the `i`-th atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Valuation(pub u32);

impl Valuation {
    pub fn holds(self, atom: usize) -> bool {
        self.0 >> atom & 1 == 1
    }
}

/// How the concept ranks in the specificity condition are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecificityRanks {
    /// Ranks read off the candidate model itself (least rank of an element
    /// of the concept).
    Model,
    /// Ranks fixed to those of the minimal canonical ranked model.
    RationalClosure,
}

/// Which defaults share a preference relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AspectIdentity {
    /// One relation per distinct aspect concept.
    Concept,
    /// One relation per default, even when aspects coincide.
    Default,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_atoms: usize,
    pub max_domain: usize,
    /// Also require that an element preferred on some aspect and dispreferred on
    /// none is globally preferred.
    pub aspect_dominance: bool,
    pub specificity_ranks: SpecificityRanks,
    pub aspect_identity: AspectIdentity,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_atoms: DEFAULT_MAX_ATOMS,
            max_domain: DEFAULT_MAX_DOMAIN,
            aspect_dominance: false,
            specificity_ranks: SpecificityRanks::Model,
            aspect_identity: AspectIdentity::Concept,
        }
    }
}

/// A finite model over the oracle's domain.
///
/// `global_rank[i]` is the rank of `domain[i]`. `aspect_rank` pairs each
/// aspect with the ranks (0 or 1) of the domain elements for it; it is empty
/// for plain ranked models.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleModel {
    pub domain: Vec<Valuation>,
    pub global_rank: Vec<usize>,
    pub aspect_rank: Vec<(Concept, Vec<u8>)>,
}

impl OracleModel {
    /// The elements of `c` with least global rank.
    pub fn typical<'a>(
        &'a self,
        oracle: &'a Oracle,
        c: &'a Concept,
    ) -> impl Iterator<Item = usize> + 'a {
        let min = (0..self.domain.len())
            .filter(|&i| oracle.eval(c, self.domain[i]))
            .map(|i| self.global_rank[i])
            .min();
        (0..self.domain.len())
            .filter(move |&i| Some(self.global_rank[i]) == min && oracle.eval(c, self.domain[i]))
    }

    pub fn satisfies(&self, oracle: &Oracle, q: &Query) -> bool {
        match &q.lhs {
            QueryLhs::Typical(c) => self
                .typical(oracle, c)
                .all(|i| oracle.eval(&q.rhs, self.domain[i])),
            QueryLhs::Plain(c) => self
                .domain
                .iter()
                .all(|&v| !oracle.eval(c, v) || oracle.eval(&q.rhs, v)),
        }
    }
}

struct Default_ {
    subject: Concept,
    aspect: Concept,
    aspect_index: usize,
}

/// Truth-table view of a role-free KB.
pub struct Oracle {
    atoms: Vec<String>,
    config: OracleConfig,
    defaults: Vec<Default_>,
    aspects: Vec<Concept>,
    /// Assignments satisfying the strict axioms.
    strict_models: Vec<Valuation>,
    /// Exceptionality sequence, as default indices per stage.
    stages: Vec<Vec<usize>>,
    /// Assignments consistent with the whole KB: strict models that also
    /// satisfy the defaults of the fixpoint stage.
    domain: Vec<Valuation>,
}

impl Oracle {
    pub fn new(kb: &KnowledgeBase, config: OracleConfig) -> Result<Self> {
        Self::with_atoms(kb, &BTreeSet::new(), config)
    }

    /// Builds the oracle over the KB's atoms plus `extra_atoms` (for queries
    /// mentioning names the KB does not).
    pub fn with_atoms(
        kb: &KnowledgeBase,
        extra_atoms: &BTreeSet<String>,
        config: OracleConfig,
    ) -> Result<Self> {
        if let Some(role) = kb.roles().into_iter().next() {
            return Err(Error::RoleBearing(role));
        }
        let mut atoms = kb.atoms();
        atoms.extend(extra_atoms.iter().cloned());
        if atoms.len() > config.max_atoms {
            return Err(Error::OracleBounds(format!(
                "{} atoms, at most {} allowed",
                atoms.len(),
                config.max_atoms
            )));
        }
        let atoms: Vec<String> = atoms.into_iter().collect();

        let mut aspects: Vec<Concept> = Vec::new();
        let mut defaults = Vec::new();
        for d in &kb.defeasible {
            let shared = match config.aspect_identity {
                AspectIdentity::Concept => aspects.iter().position(|a| a == d.aspect()),
                AspectIdentity::Default => None,
            };
            let aspect_index = match shared {
                Some(i) => i,
                None => {
                    aspects.push(d.aspect().clone());
                    aspects.len() - 1
                }
            };
            defaults.push(Default_ {
                subject: d.subject().clone(),
                aspect: d.aspect().clone(),
                aspect_index,
            });
        }

        let mut oracle = Oracle {
            atoms,
            config,
            defaults,
            aspects,
            strict_models: Vec::new(),
            stages: Vec::new(),
            domain: Vec::new(),
        };
        oracle.strict_models = (0..1u32 << oracle.atoms.len())
            .map(Valuation)
            .filter(|&v| {
                kb.strict
                    .iter()
                    .all(|s| !oracle.eval(&s.lhs, v) || oracle.eval(&s.rhs, v))
            })
            .collect();
        oracle.stages = oracle.exceptionality_sequence();
        let fixpoint = oracle.stages.last().cloned().unwrap_or_default();
        oracle.domain = oracle
            .strict_models
            .iter()
            .copied()
            .filter(|&v| oracle.satisfies_all(&fixpoint, v))
            .collect();
        if oracle.domain.len() > config.max_domain {
            return Err(Error::OracleBounds(format!(
                "{} domain elements, at most {} allowed",
                oracle.domain.len(),
                config.max_domain
            )));
        }
        Ok(oracle)
    }

    /// Builds an oracle covering the KB and the names in `q`.
    pub fn for_query(kb: &KnowledgeBase, q: &Query, config: OracleConfig) -> Result<Self> {
        let mut extra = q.lhs.concept().atoms();
        extra.extend(q.rhs.atoms());
        if !q.lhs.concept().is_role_free() || !q.rhs.is_role_free() {
            let mut roles = q.lhs.concept().roles();
            roles.extend(q.rhs.roles());
            return Err(Error::RoleBearing(
                roles.into_iter().next().unwrap_or_default(),
            ));
        }
        Self::with_atoms(kb, &extra, config)
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    /// Assignments satisfying the strict axioms.
    pub fn strict_models(&self) -> &[Valuation] {
        &self.strict_models
    }

    /// The canonical domain: assignments consistent with the KB.
    pub fn domain(&self) -> &[Valuation] {
        &self.domain
    }

    /// The exceptionality sequence as default indices (KB order) per stage.
    pub fn stages(&self) -> &[Vec<usize>] {
        &self.stages
    }

    pub fn eval(&self, c: &Concept, v: Valuation) -> bool {
        match c {
            Concept::Top => true,
            Concept::Bot => false,
            Concept::Atom(a) => {
                let i = self
                    .atoms
                    .iter()
                    .position(|x| x == a)
                    .expect("atom outside the oracle signature");
                v.holds(i)
            }
            Concept::Not(inner) => !self.eval(inner, v),
            Concept::And(l, r) => self.eval(l, v) && self.eval(r, v),
            Concept::Or(l, r) => self.eval(l, v) || self.eval(r, v),
            Concept::Exists(..) | Concept::Forall(..) => {
                unreachable!("role-free oracle evaluated a quantifier")
            }
        }
    }

    pub fn describe(&self, v: Valuation) -> String {
        let parts: Vec<String> = self
            .atoms
            .iter()
            .enumerate()
            .map(|(i, a)| {
                if v.holds(i) {
                    a.clone()
                } else {
                    format!("not {a}")
                }
            })
            .collect();
        format!("{{{}}}", parts.join(", "))
    }

    fn satisfies_default(&self, d: usize, v: Valuation) -> bool {
        let d = &self.defaults[d];
        !self.eval(&d.subject, v) || self.eval(&d.aspect, v)
    }

    fn satisfies_all(&self, defaults: &[usize], v: Valuation) -> bool {
        defaults.iter().all(|&d| self.satisfies_default(d, v))
    }

    fn exceptional(&self, c: &Concept, defaults: &[usize]) -> bool {
        !self
            .strict_models
            .iter()
            .any(|&v| self.eval(c, v) && self.satisfies_all(defaults, v))
    }

    fn exceptionality_sequence(&self) -> Vec<Vec<usize>> {
        let mut stages = vec![(0..self.defaults.len()).collect::<Vec<_>>()];
        loop {
            let current = stages.last().expect("nonempty");
            let next: Vec<usize> = current
                .iter()
                .copied()
                .filter(|&d| self.exceptional(&self.defaults[d].subject, current))
                .collect();
            if next.len() == current.len() {
                return stages;
            }
            stages.push(next);
        }
    }

    /// Rank of every domain element in the minimal canonical ranked model.
    fn closure_ranks(&self) -> Vec<usize> {
        self.domain
            .iter()
            .map(|&v| {
                self.stages
                    .iter()
                    .position(|s| self.satisfies_all(s, v))
                    .expect("domain elements satisfy the fixpoint stage")
            })
            .collect()
    }

    /// Checks that the least-ranked elements of every subject satisfy its
    /// aspect.
    fn typicality_holds(&self, ranks: &[usize]) -> bool {
        self.defaults.iter().all(|d| {
            let members: Vec<usize> = (0..self.domain.len())
                .filter(|&i| self.eval(&d.subject, self.domain[i]))
                .collect();
            let Some(min) = members.iter().map(|&i| ranks[i]).min() else {
                return true;
            };
            members
                .iter()
                .filter(|&&i| ranks[i] == min)
                .all(|&i| self.eval(&d.aspect, self.domain[i]))
        })
    }

    pub fn minimal_ranked_model(&self) -> Result<OracleModel> {
        let global_rank = self.closure_ranks();
        if !self.typicality_holds(&global_rank) {
            return Err(Error::Verification(
                "ranked model violates a typicality inclusion".into(),
            ));
        }
        Ok(OracleModel {
            domain: self.domain.clone(),
            global_rank,
            aspect_rank: Vec::new(),
        })
    }

    pub fn rc_entails(&self, q: &Query) -> Result<bool> {
        Ok(self.minimal_ranked_model()?.satisfies(self, q))
    }

    /// `aspect_ranks()[a][i]` is 0 iff `domain[i]` satisfies every default
    /// with aspect `a`.
    pub fn aspect_ranks(&self) -> Vec<Vec<u8>> {
        self.aspects
            .iter()
            .enumerate()
            .map(|(a, _)| {
                self.domain
                    .iter()
                    .map(|&v| {
                        let ok = (0..self.defaults.len())
                            .filter(|&d| self.defaults[d].aspect_index == a)
                            .all(|d| self.satisfies_default(d, v));
                        u8::from(!ok)
                    })
                    .collect()
            })
            .collect()
    }

    /// Checks conditions (1)–(4), and (a) when configured, for the global
    /// ranking `ranks` against the two-level aspect preferences. Concept
    /// ranks in (4) are read according to the configuration.
    pub fn is_s_enriched(&self, ranks: &[usize]) -> bool {
        let n = self.domain.len();
        let aspect = self.aspect_ranks();
        let in_subject = |d: usize, i: usize| self.eval(&self.defaults[d].subject, self.domain[i]);
        let below = |d: usize, x: usize, y: usize| {
            let a = self.defaults[d].aspect_index;
            aspect[a][x] < aspect[a][y]
        };
        let reference = match self.config.specificity_ranks {
            SpecificityRanks::Model => ranks.to_vec(),
            SpecificityRanks::RationalClosure => self.closure_ranks(),
        };
        let concept_rank = |d: usize| {
            (0..n)
                .filter(|&i| in_subject(d, i))
                .map(|i| reference[i])
                .min()
        };

        // (1) holds by construction of the domain; (2):
        if !self.typicality_holds(ranks) {
            return false;
        }
        // (3)
        for (d, def) in self.defaults.iter().enumerate() {
            let members: Vec<usize> = (0..n).filter(|&i| in_subject(d, i)).collect();
            let Some(min) = members.iter().map(|&i| aspect[def.aspect_index][i]).min() else {
                continue;
            };
            let ok = members
                .iter()
                .filter(|&&i| aspect[def.aspect_index][i] == min)
                .all(|&i| self.eval(&def.aspect, self.domain[i]));
            if !ok {
                return false;
            }
        }
        let defaults = 0..self.defaults.len();
        for x in 0..n {
            for y in 0..n {
                if x == y {
                    continue;
                }
                // (4)
                let antecedent = defaults.clone().any(|i| below(i, x, y) && in_subject(i, y))
                    && defaults
                        .clone()
                        .filter(|&j| below(j, y, x) && in_subject(j, x))
                        .all(|j| {
                            defaults.clone().any(|k| {
                                below(k, x, y)
                                    && in_subject(k, y)
                                    && concept_rank(j) < concept_rank(k)
                            })
                        });
                if antecedent && ranks[x] >= ranks[y] {
                    return false;
                }
                // aspect dominance
                if self.config.aspect_dominance {
                    let some = (0..self.aspects.len()).any(|a| aspect[a][x] < aspect[a][y]);
                    let none_back = (0..self.aspects.len()).all(|a| aspect[a][y] >= aspect[a][x]);
                    if some && none_back && ranks[x] >= ranks[y] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All minimal canonical S-enriched models, ordered by rank vector.
    pub fn minimal_s_enriched_models(&self) -> Result<Vec<OracleModel>> {
        let candidates = SEnrichedSearch::new(self)?.candidates();
        let mut minimal: Vec<Vec<usize>> = Vec::new();
        for r in &candidates {
            let dominated = candidates
                .iter()
                .any(|o| o != r && o.iter().zip(r).all(|(a, b)| a <= b));
            if !dominated && !minimal.contains(r) {
                minimal.push(r.clone());
            }
        }
        if minimal.is_empty() {
            return Err(Error::NoModel(format!(
                "no global ranking of {} elements satisfies the S-enriched conditions",
                self.domain.len()
            )));
        }
        minimal.sort();
        let aspect = self.aspect_ranks();
        let aspect_rank: Vec<(Concept, Vec<u8>)> =
            self.aspects.iter().cloned().zip(aspect).collect();
        minimal
            .into_iter()
            .map(|global_rank| {
                if !self.is_s_enriched(&global_rank) {
                    return Err(Error::Verification(format!(
                        "search returned ranking {global_rank:?} that fails the S-enriched conditions"
                    )));
                }
                Ok(OracleModel {
                    domain: self.domain.clone(),
                    global_rank,
                    aspect_rank: aspect_rank.clone(),
                })
            })
            .collect()
    }

    pub fn s_entails(&self, q: &Query) -> Result<bool> {
        Ok(self
            .minimal_s_enriched_models()?
            .iter()
            .all(|m| m.satisfies(self, q)))
    }
}

impl fmt::Debug for Oracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Oracle")
            .field("atoms", &self.atoms)
            .field("domain", &self.domain.len())
            .field("stages", &self.stages)
            .finish()
    }
}

/// Finds, for every weak order of the default subjects, the least global
/// ranking whose subject ranks are ordered that way.
///
/// Once the order of subject ranks is fixed, the specificity condition turns
/// into fixed precedences `x < y`, the typicality condition into lower
/// bounds, and the least ranking satisfying them is a longest-path
/// computation. The subject ranks themselves are then lifted until they agree
/// with the ranking they produce. Every valid ranking lies above the result
/// for its own subject order, so the minimal models are among the results.
struct SEnrichedSearch<'a> {
    oracle: &'a Oracle,
    n: usize,
    /// Distinct non-empty subject extensions, as element lists.
    subjects: Vec<Vec<usize>>,
    /// For each element, the subjects it violates a default of.
    violated: Vec<Vec<usize>>,
    /// For each element, the subjects it belongs to.
    member_of: Vec<Vec<usize>>,
    /// Per ordered pair: subjects of defaults that favour x over y with y in
    /// the subject, and subjects of defaults that favour y with x in it.
    pairs: Vec<(usize, usize, Vec<usize>, Vec<usize>)>,
    /// Precedences that do not depend on subject ranks.
    fixed: Vec<(usize, usize)>,
    closure_subject_ranks: Option<Vec<usize>>,
}

impl<'a> SEnrichedSearch<'a> {
    fn new(oracle: &'a Oracle) -> Result<Self> {
        let n = oracle.domain.len();
        let ext = |c: &Concept| -> Vec<usize> {
            (0..n)
                .filter(|&i| oracle.eval(c, oracle.domain[i]))
                .collect()
        };
        let mut subjects: Vec<Vec<usize>> = Vec::new();
        let mut subject_of = Vec::new();
        for d in &oracle.defaults {
            let e = ext(&d.subject);
            if e.is_empty() {
                subject_of.push(None);
                continue;
            }
            let idx = match subjects.iter().position(|s| *s == e) {
                Some(i) => i,
                None => {
                    subjects.push(e);
                    subjects.len() - 1
                }
            };
            subject_of.push(Some(idx));
        }
        if subjects.len() > MAX_SUBJECTS {
            return Err(Error::OracleBounds(format!(
                "{} distinct default subjects, at most {MAX_SUBJECTS} allowed",
                subjects.len()
            )));
        }

        let aspect = oracle.aspect_ranks();
        let defaults: Vec<(usize, usize)> = oracle
            .defaults
            .iter()
            .zip(&subject_of)
            .filter_map(|(d, s)| s.map(|s| (s, d.aspect_index)))
            .collect();

        let mut violated = vec![Vec::new(); n];
        let mut member_of = vec![Vec::new(); n];
        for (d, s) in oracle
            .defaults
            .iter()
            .enumerate()
            .filter_map(|(d, _)| subject_of[d].map(|s| (d, s)))
        {
            for (i, v) in oracle.domain.iter().enumerate() {
                if !oracle.satisfies_default(d, *v) && !violated[i].contains(&s) {
                    violated[i].push(s);
                }
            }
        }
        for (s, members) in subjects.iter().enumerate() {
            for &i in members {
                member_of[i].push(s);
            }
        }

        let mut pairs = Vec::new();
        let mut fixed = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x == y {
                    continue;
                }
                let favour_x: Vec<usize> = defaults
                    .iter()
                    .filter(|&&(s, a)| aspect[a][x] < aspect[a][y] && subjects[s].contains(&y))
                    .map(|&(s, _)| s)
                    .collect();
                let favour_y: Vec<usize> = defaults
                    .iter()
                    .filter(|&&(s, a)| aspect[a][y] < aspect[a][x] && subjects[s].contains(&x))
                    .map(|&(s, _)| s)
                    .collect();
                if !favour_x.is_empty() {
                    pairs.push((x, y, favour_x, favour_y));
                }
                if oracle.config.aspect_dominance {
                    let some = (0..aspect.len()).any(|a| aspect[a][x] < aspect[a][y]);
                    let none_back = (0..aspect.len()).all(|a| aspect[a][y] >= aspect[a][x]);
                    if some && none_back {
                        fixed.push((x, y));
                    }
                }
            }
        }

        let closure_subject_ranks = match oracle.config.specificity_ranks {
            SpecificityRanks::Model => None,
            SpecificityRanks::RationalClosure => {
                let ranks = oracle.closure_ranks();
                Some(
                    subjects
                        .iter()
                        .map(|s| s.iter().map(|&i| ranks[i]).min().expect("non-empty"))
                        .collect(),
                )
            }
        };

        Ok(SEnrichedSearch {
            oracle,
            n,
            subjects,
            violated,
            member_of,
            pairs,
            fixed,
            closure_subject_ranks,
        })
    }

    /// Precedences induced by an order on subject ranks.
    fn precedences(&self, level: &[usize]) -> Vec<(usize, usize)> {
        let mut edges = self.fixed.clone();
        for (x, y, favour_x, favour_y) in &self.pairs {
            let best = favour_x.iter().map(|&s| level[s]).max().expect("non-empty");
            if favour_y.iter().all(|&s| level[s] < best) {
                edges.push((*x, *y));
            }
        }
        edges
    }

    /// Least ranking above the per-element bounds that respects `edges`;
    /// `None` on a cycle.
    fn least_ranking(&self, lower: &[usize], edges: &[(usize, usize)]) -> Option<Vec<usize>> {
        let mut indegree = vec![0usize; self.n];
        let mut succ = vec![Vec::new(); self.n];
        for &(x, y) in edges {
            succ[x].push(y);
            indegree[y] += 1;
        }
        let mut ranks = lower.to_vec();
        let mut ready: Vec<usize> = (0..self.n).filter(|&i| indegree[i] == 0).collect();
        let mut done = 0;
        while let Some(x) = ready.pop() {
            done += 1;
            for &y in &succ[x] {
                ranks[y] = ranks[y].max(ranks[x] + 1);
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    ready.push(y);
                }
            }
        }
        (done == self.n).then_some(ranks)
    }

    fn lower_bounds(&self, subject_rank: &[usize]) -> Vec<usize> {
        (0..self.n)
            .map(|i| {
                let member = self.member_of[i].iter().map(|&s| subject_rank[s]);
                let violator = self.violated[i].iter().map(|&s| subject_rank[s] + 1);
                member.chain(violator).max().unwrap_or(0)
            })
            .collect()
    }

    fn subject_minima(&self, ranks: &[usize]) -> Vec<usize> {
        self.subjects
            .iter()
            .map(|s| s.iter().map(|&i| ranks[i]).min().expect("non-empty"))
            .collect()
    }

    /// Least subject-rank vector at or above `floor` that orders subjects as
    /// `level` does.
    fn lift(&self, level: &[usize], floor: &[usize]) -> Vec<usize> {
        let top = level.iter().copied().max().unwrap_or(0);
        let mut value_of_level = vec![0usize; top + 1];
        for l in 0..=top {
            let here = (0..level.len())
                .filter(|&s| level[s] == l)
                .map(|s| floor[s])
                .max()
                .unwrap_or(0);
            value_of_level[l] = if l == 0 {
                here
            } else {
                here.max(value_of_level[l - 1] + 1)
            };
        }
        level.iter().map(|&l| value_of_level[l]).collect()
    }

    /// Least valid ranking whose subject ranks are ordered as `level`.
    fn solve(&self, level: &[usize]) -> Option<Vec<usize>> {
        let edges = self.precedences(level);
        let mut subject_rank = self.lift(level, &vec![0; level.len()]);
        loop {
            if subject_rank.iter().any(|&r| r >= self.n) {
                return None;
            }
            let ranks = self.least_ranking(&self.lower_bounds(&subject_rank), &edges)?;
            let next = self.lift(level, &self.subject_minima(&ranks));
            if next == subject_rank {
                return Some(ranks);
            }
            subject_rank = next;
        }
    }

    /// Least ranking when specificity uses fixed closure ranks: only the
    /// typicality condition depends on the ranking, and it is monotone.
    fn solve_fixed(&self, closure: &[usize]) -> Option<Vec<usize>> {
        let edges = self.precedences(closure);
        let mut subject_rank = vec![0; self.subjects.len()];
        loop {
            if subject_rank.iter().any(|&r| r >= self.n) {
                return None;
            }
            let lower: Vec<usize> = (0..self.n)
                .map(|i| {
                    self.violated[i]
                        .iter()
                        .map(|&s| subject_rank[s] + 1)
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let ranks = self.least_ranking(&lower, &edges)?;
            let next = self.subject_minima(&ranks);
            if next == subject_rank {
                return Some(ranks);
            }
            subject_rank = next;
        }
    }

    fn candidates(&self) -> Vec<Vec<usize>> {
        if let Some(closure) = &self.closure_subject_ranks {
            return self.solve_fixed(closure).into_iter().collect();
        }
        let s = self.subjects.len();
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut level = vec![0usize; s];
        loop {
            let mut used = vec![false; s.max(1)];
            for &l in &level {
                used[l] = true;
            }
            let contiguous =
                used.iter().take_while(|&&u| u).count() == used.iter().filter(|&&u| u).count();
            if contiguous {
                if let Some(r) = self.solve(&level) {
                    if self.oracle.is_s_enriched(&r) && !out.contains(&r) {
                        out.push(r);
                    }
                }
            }
            // next assignment in base s
            let mut i = 0;
            loop {
                if i == s {
                    return out;
                }
                level[i] += 1;
                if level[i] < s {
                    break;
                }
                level[i] = 0;
                i += 1;
            }
        }
    }
}

fn oracle_for(kb: &KnowledgeBase, q: &Query) -> Result<Oracle> {
    Oracle::for_query(kb, q, OracleConfig::default())
}

/// Assignments over the KB's atoms satisfying its strict axioms.
pub fn enumerate_domain(kb: &KnowledgeBase) -> Result<Vec<Valuation>> {
    Ok(Oracle::new(kb, OracleConfig::default())?
        .strict_models()
        .to_vec())
}

pub fn minimal_ranked_model(kb: &KnowledgeBase) -> Result<OracleModel> {
    Oracle::new(kb, OracleConfig::default())?.minimal_ranked_model()
}

pub fn oracle_rc_entails(kb: &KnowledgeBase, q: &Query) -> Result<bool> {
    oracle_for(kb, q)?.rc_entails(q)
}

pub fn minimal_s_enriched_models(kb: &KnowledgeBase) -> Result<Vec<OracleModel>> {
    Oracle::new(kb, OracleConfig::default())?.minimal_s_enriched_models()
}

pub fn oracle_s_entails(kb: &KnowledgeBase, q: &Query) -> Result<bool> {
    oracle_for(kb, q)?.s_entails(q)
}
