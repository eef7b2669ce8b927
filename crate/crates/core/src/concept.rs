//! ALC concept expressions.
//!
//! Concepts never contain the typicality operator; typicality only appears on
//! the left-hand side of inclusions and queries (see [`crate::kb`]).

use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Concept {
    Top,
    Bot,
    Atom(String),
    Not(Box<Concept>),
    And(Box<Concept>, Box<Concept>),
    Or(Box<Concept>, Box<Concept>),
    Exists(String, Box<Concept>),
    Forall(String, Box<Concept>),
}

impl Concept {
    pub fn atom(name: impl Into<String>) -> Self {
        Concept::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(c: Concept) -> Self {
        Concept::Not(Box::new(c))
    }

    pub fn and(l: Concept, r: Concept) -> Self {
        Concept::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Concept, r: Concept) -> Self {
        Concept::Or(Box::new(l), Box::new(r))
    }

    pub fn exists(role: impl Into<String>, c: Concept) -> Self {
        Concept::Exists(role.into(), Box::new(c))
    }

    pub fn forall(role: impl Into<String>, c: Concept) -> Self {
        Concept::Forall(role.into(), Box::new(c))
    }

    /// Left-folded conjunction; `Top` for an empty iterator.
    pub fn conjunction<I: IntoIterator<Item = Concept>>(items: I) -> Self {
        items
            .into_iter()
            .reduce(Concept::and)
            .unwrap_or(Concept::Top)
    }

    /// Left-folded disjunction; `Bot` for an empty iterator.
    pub fn disjunction<I: IntoIterator<Item = Concept>>(items: I) -> Self {
        items
            .into_iter()
            .reduce(Concept::or)
            .unwrap_or(Concept::Bot)
    }

    /// Negation normal form: negation only directly above atoms.
    pub fn nnf(&self) -> Concept {
        match self {
            Concept::Top | Concept::Bot | Concept::Atom(_) => self.clone(),
            Concept::And(l, r) => Concept::and(l.nnf(), r.nnf()),
            Concept::Or(l, r) => Concept::or(l.nnf(), r.nnf()),
            Concept::Exists(role, c) => Concept::exists(role.clone(), c.nnf()),
            Concept::Forall(role, c) => Concept::forall(role.clone(), c.nnf()),
            Concept::Not(inner) => negated_nnf(inner),
        }
    }

    /// The NNF of `self` with nested conjunctions and disjunctions flattened,
    /// sorted and deduplicated. Two concepts are treated as the same concept
    /// throughout the crate iff their canonical forms are equal.
    pub fn canonical(&self) -> Concept {
        canonicalize(&self.nnf())
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_names(&mut out, &mut BTreeSet::new());
        out
    }

    pub fn roles(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_names(&mut BTreeSet::new(), &mut out);
        out
    }

    pub(crate) fn collect_names(&self, atoms: &mut BTreeSet<String>, roles: &mut BTreeSet<String>) {
        match self {
            Concept::Top | Concept::Bot => {}
            Concept::Atom(a) => {
                atoms.insert(a.clone());
            }
            Concept::Not(c) => c.collect_names(atoms, roles),
            Concept::And(l, r) | Concept::Or(l, r) => {
                l.collect_names(atoms, roles);
                r.collect_names(atoms, roles);
            }
            Concept::Exists(role, c) | Concept::Forall(role, c) => {
                roles.insert(role.clone());
                c.collect_names(atoms, roles);
            }
        }
    }

    pub fn is_role_free(&self) -> bool {
        match self {
            Concept::Top | Concept::Bot | Concept::Atom(_) => true,
            Concept::Not(c) => c.is_role_free(),
            Concept::And(l, r) | Concept::Or(l, r) => l.is_role_free() && r.is_role_free(),
            Concept::Exists(..) | Concept::Forall(..) => false,
        }
    }

    fn is_binary(&self) -> bool {
        matches!(self, Concept::And(..) | Concept::Or(..))
    }
}

fn negated_nnf(c: &Concept) -> Concept {
    match c {
        Concept::Top => Concept::Bot,
        Concept::Bot => Concept::Top,
        Concept::Atom(_) => Concept::not(c.clone()),
        Concept::Not(inner) => inner.nnf(),
        Concept::And(l, r) => Concept::or(negated_nnf(l), negated_nnf(r)),
        Concept::Or(l, r) => Concept::and(negated_nnf(l), negated_nnf(r)),
        Concept::Exists(role, inner) => Concept::forall(role.clone(), negated_nnf(inner)),
        Concept::Forall(role, inner) => Concept::exists(role.clone(), negated_nnf(inner)),
    }
}

fn canonicalize(c: &Concept) -> Concept {
    match c {
        Concept::And(..) => {
            let mut parts = Vec::new();
            flatten(c, true, &mut parts);
            let parts: BTreeSet<Concept> = parts.iter().map(|p| canonicalize(p)).collect();
            Concept::conjunction(parts)
        }
        Concept::Or(..) => {
            let mut parts = Vec::new();
            flatten(c, false, &mut parts);
            let parts: BTreeSet<Concept> = parts.iter().map(|p| canonicalize(p)).collect();
            Concept::disjunction(parts)
        }
        Concept::Exists(role, inner) => Concept::exists(role.clone(), canonicalize(inner)),
        Concept::Forall(role, inner) => Concept::forall(role.clone(), canonicalize(inner)),
        _ => c.clone(),
    }
}

fn flatten<'a>(c: &'a Concept, conj: bool, out: &mut Vec<&'a Concept>) {
    match (c, conj) {
        (Concept::And(l, r), true) | (Concept::Or(l, r), false) => {
            flatten(l, conj, out);
            flatten(r, conj, out);
        }
        _ => out.push(c),
    }
}

struct Operand<'a>(&'a Concept, bool);

impl fmt::Display for Operand<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Prints in the surface syntax accepted by [`crate::parser::parse_concept`];
/// parsing the output yields a structurally equal concept.
impl fmt::Display for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Concept::Top => f.write_str("Top"),
            Concept::Bot => f.write_str("Bot"),
            Concept::Atom(a) => f.write_str(a),
            Concept::Not(c) => write!(f, "not {}", Operand(c, c.is_binary())),
            Concept::And(l, r) => write!(
                f,
                "{} and {}",
                Operand(l, matches!(**l, Concept::Or(..))),
                Operand(r, r.is_binary())
            ),
            Concept::Or(l, r) => {
                write!(f, "{} or {}", l, Operand(r, matches!(**r, Concept::Or(..))))
            }
            Concept::Exists(role, c) => write!(f, "exists {role}.{}", Operand(c, c.is_binary())),
            Concept::Forall(role, c) => write!(f, "forall {role}.{}", Operand(c, c.is_binary())),
        }
    }
}
