//! Knowledge bases, inclusions and queries.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::concept::Concept;
use crate::error::{Error, Result};

/// `lhs ⊑ rhs` with no typicality on either side.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictInclusion {
    pub lhs: Concept,
    pub rhs: Concept,
}

impl StrictInclusion {
    pub fn new(lhs: Concept, rhs: Concept) -> Self {
        StrictInclusion { lhs, rhs }
    }

    /// The inclusion as a concept every element must satisfy: `¬lhs ⊔ rhs`.
    pub fn as_constraint(&self) -> Concept {
        Concept::or(Concept::not(self.lhs.clone()), self.rhs.clone()).nnf()
    }

    fn key(&self) -> (Concept, Concept) {
        (self.lhs.canonical(), self.rhs.canonical())
    }
}

impl fmt::Display for StrictInclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <= {}", self.lhs, self.rhs)
    }
}

/// A typicality inclusion `T(subject) ⊑ aspect`.
///
/// Both sides are kept in canonical form, so structural equality is equality
/// up to NNF and reordering of conjunctions/disjunctions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DefeasibleInclusion {
    subject: Concept,
    aspect: Concept,
}

impl DefeasibleInclusion {
    pub fn new(subject: Concept, aspect: Concept) -> Self {
        DefeasibleInclusion {
            subject: subject.canonical(),
            aspect: aspect.canonical(),
        }
    }

    pub fn subject(&self) -> &Concept {
        &self.subject
    }

    pub fn aspect(&self) -> &Concept {
        &self.aspect
    }

    /// `¬subject ⊔ aspect`, the classical shadow of the default.
    pub fn materialization(&self) -> Concept {
        Concept::or(
            Concept::not(self.subject.clone()).nnf(),
            self.aspect.clone(),
        )
    }

    /// The same default read as a strict axiom `subject ⊑ aspect`.
    pub fn strictified(&self) -> StrictInclusion {
        StrictInclusion::new(self.subject.clone(), self.aspect.clone())
    }
}

impl fmt::Display for DefeasibleInclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({}) <= {}", self.subject, self.aspect)
    }
}

/// Conjunction of the materializations of `defaults`, folded in order of
/// their printed form. The empty set materializes to `Top`.
pub fn materialize<'a, I>(defaults: I) -> Concept
where
    I: IntoIterator<Item = &'a DefeasibleInclusion>,
{
    let conjuncts: BTreeMap<String, Concept> = defaults
        .into_iter()
        .map(|d| {
            let m = d.materialization();
            (m.to_string(), m)
        })
        .collect();
    Concept::conjunction(conjuncts.into_values())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConceptAssertion {
    pub concept: Concept,
    pub individual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RoleAssertion {
    pub role: String,
    pub subject: String,
    pub object: String,
}

/// A TBox of strict and typicality inclusions plus an ABox.
///
/// Defaults keep their insertion order; that order is the canonical order
/// used when reporting strata and bases.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KnowledgeBase {
    pub strict: Vec<StrictInclusion>,
    pub defeasible: Vec<DefeasibleInclusion>,
    pub concept_assertions: Vec<ConceptAssertion>,
    pub role_assertions: Vec<RoleAssertion>,
}

impl KnowledgeBase {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a strict inclusion; returns false if an equivalent one is present.
    pub fn add_strict(&mut self, incl: StrictInclusion) -> bool {
        let key = incl.key();
        if self.strict.iter().any(|s| s.key() == key) {
            return false;
        }
        self.strict.push(incl);
        true
    }

    /// Adds a default; returns false if a structurally equal one is present.
    pub fn add_defeasible(&mut self, incl: DefeasibleInclusion) -> bool {
        if self.defeasible.contains(&incl) {
            return false;
        }
        self.defeasible.push(incl);
        true
    }

    pub fn add_concept_assertion(&mut self, concept: Concept, individual: impl Into<String>) {
        let a = ConceptAssertion {
            concept,
            individual: individual.into(),
        };
        if !self.concept_assertions.contains(&a) {
            self.concept_assertions.push(a);
        }
    }

    pub fn add_role_assertion(
        &mut self,
        role: impl Into<String>,
        subject: impl Into<String>,
        object: impl Into<String>,
    ) {
        let a = RoleAssertion {
            role: role.into(),
            subject: subject.into(),
            object: object.into(),
        };
        if !self.role_assertions.contains(&a) {
            self.role_assertions.push(a);
        }
    }

    /// Index of a default in the canonical ordering.
    pub fn default_index(&self, d: &DefeasibleInclusion) -> Option<usize> {
        self.defeasible.iter().position(|x| x == d)
    }

    /// Concept names, role names and individual names, in that order.
    pub fn signature(&self) -> (BTreeSet<String>, BTreeSet<String>, BTreeSet<String>) {
        let mut atoms = BTreeSet::new();
        let mut roles = BTreeSet::new();
        let mut individuals = BTreeSet::new();
        for s in &self.strict {
            s.lhs.collect_names(&mut atoms, &mut roles);
            s.rhs.collect_names(&mut atoms, &mut roles);
        }
        for d in &self.defeasible {
            d.subject.collect_names(&mut atoms, &mut roles);
            d.aspect.collect_names(&mut atoms, &mut roles);
        }
        for a in &self.concept_assertions {
            a.concept.collect_names(&mut atoms, &mut roles);
            individuals.insert(a.individual.clone());
        }
        for a in &self.role_assertions {
            roles.insert(a.role.clone());
            individuals.insert(a.subject.clone());
            individuals.insert(a.object.clone());
        }
        (atoms, roles, individuals)
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        self.signature().0
    }

    pub fn roles(&self) -> BTreeSet<String> {
        self.signature().1
    }

    /// Concept, role and individual names must be pairwise disjoint.
    pub fn check_namespaces(&self) -> Result<()> {
        let (atoms, roles, individuals) = self.signature();
        check_disjoint(&atoms, "a concept name", &roles, "a role name")?;
        check_disjoint(&atoms, "a concept name", &individuals, "an individual name")?;
        check_disjoint(&roles, "a role name", &individuals, "an individual name")
    }

    /// Rejects queries whose names clash with the KB's namespaces.
    pub fn check_query(&self, q: &Query) -> Result<()> {
        let (atoms, roles, individuals) = self.signature();
        let mut q_atoms = BTreeSet::new();
        let mut q_roles = BTreeSet::new();
        q.lhs.concept().collect_names(&mut q_atoms, &mut q_roles);
        q.rhs.collect_names(&mut q_atoms, &mut q_roles);
        check_disjoint(&q_atoms, "a concept name", &roles, "a role name")?;
        check_disjoint(
            &q_atoms,
            "a concept name",
            &individuals,
            "an individual name",
        )?;
        check_disjoint(&q_atoms, "a concept name", &q_roles, "a role name")?;
        check_disjoint(&atoms, "a concept name", &q_roles, "a role name")?;
        check_disjoint(&individuals, "an individual name", &q_roles, "a role name")
    }

    pub fn is_role_free(&self) -> bool {
        self.roles().is_empty()
    }
}

fn check_disjoint(
    a: &BTreeSet<String>,
    a_kind: &'static str,
    b: &BTreeSet<String>,
    b_kind: &'static str,
) -> Result<()> {
    match a.intersection(b).next() {
        Some(name) => Err(Error::NamespaceClash {
            name: name.clone(),
            first: a_kind,
            second: b_kind,
        }),
        None => Ok(()),
    }
}

/// Prints the KB in the file format read by [`crate::parser::parse_kb`].
impl fmt::Display for KnowledgeBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.strict {
            writeln!(f, "{s}.")?;
        }
        for d in &self.defeasible {
            writeln!(f, "{d}.")?;
        }
        for a in &self.concept_assertions {
            match a.concept {
                Concept::Atom(_) => writeln!(f, "{}({}).", a.concept, a.individual)?,
                _ => writeln!(f, "({})({}).", a.concept, a.individual)?,
            }
        }
        for a in &self.role_assertions {
            writeln!(f, "{}({}, {}).", a.role, a.subject, a.object)?;
        }
        Ok(())
    }
}

/// The set of distinct aspects (right-hand sides of typicality inclusions).
pub fn aspects(kb: &KnowledgeBase) -> BTreeSet<Concept> {
    kb.defeasible.iter().map(|d| d.aspect().clone()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum QueryLhs {
    Plain(Concept),
    Typical(Concept),
}

impl QueryLhs {
    pub fn concept(&self) -> &Concept {
        match self {
            QueryLhs::Plain(c) | QueryLhs::Typical(c) => c,
        }
    }
}

/// A subsumption query `lhs ⊑ rhs`, where `lhs` may be `T(C)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Query {
    pub lhs: QueryLhs,
    pub rhs: Concept,
}

impl Query {
    pub fn typical(lhs: Concept, rhs: Concept) -> Self {
        Query {
            lhs: QueryLhs::Typical(lhs),
            rhs,
        }
    }

    pub fn plain(lhs: Concept, rhs: Concept) -> Self {
        Query {
            lhs: QueryLhs::Plain(lhs),
            rhs,
        }
    }

    pub fn is_typical(&self) -> bool {
        matches!(self.lhs, QueryLhs::Typical(_))
    }
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lhs {
            QueryLhs::Plain(c) => write!(f, "{c} <= {}", self.rhs),
            QueryLhs::Typical(c) => write!(f, "T({c}) <= {}", self.rhs),
        }
    }
}
