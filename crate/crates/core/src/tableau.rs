//! Classical ALC reasoning w.r.t. a general TBox.
//!
//! A standard completion-graph tableau: every strict axiom `C ⊑ D` is added
//! to every node as `nnf(¬C ⊔ D)`, tree nodes are blocked by ancestors whose
//! label is a superset of theirs, and disjunctions are explored left branch
//! first. All rule applications are made in node-creation order, so results
//! and budgets are reproducible.
//!
//! Each call builds its own graph; a [`Tableau`] is only a configuration and
//! can be shared freely between threads.

use std::collections::{BTreeSet, HashMap};

use crate::concept::Concept;
use crate::error::{Error, Result};
use crate::kb::{KnowledgeBase, Query, QueryLhs, StrictInclusion};

pub const DEFAULT_MAX_EXPANSIONS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tableau {
    /// Upper bound on branch points plus generated successors per call.
    pub max_expansions: usize,
}

impl Default for Tableau {
    fn default() -> Self {
        Tableau {
            max_expansions: DEFAULT_MAX_EXPANSIONS,
        }
    }
}

impl Tableau {
    pub fn with_budget(max_expansions: usize) -> Self {
        Tableau { max_expansions }
    }

    /// Is there a model of `strict` in which `c` is non-empty?
    pub fn is_satisfiable(&self, c: &Concept, strict: &[StrictInclusion]) -> Result<bool> {
        let mut run = Run::new(strict, self.max_expansions);
        let root = run.interner.intern(&c.nnf());
        let mut graph = Graph::default();
        graph.add_root(run.root_label(&[root]));
        run.satisfiable(graph)
    }

    /// Classical subsumption `c ⊑ d` w.r.t. `strict`.
    pub fn subsumes(&self, strict: &[StrictInclusion], c: &Concept, d: &Concept) -> Result<bool> {
        let probe = Concept::and(c.clone(), Concept::not(d.clone()));
        Ok(!self.is_satisfiable(&probe, strict)?)
    }

    /// Classical entailment of a query with a plain left-hand side.
    pub fn entails(&self, strict: &[StrictInclusion], q: &Query) -> Result<bool> {
        match &q.lhs {
            QueryLhs::Plain(c) => self.subsumes(strict, c, &q.rhs),
            QueryLhs::Typical(_) => Err(Error::Unsupported(format!(
                "classical entailment of typicality query `{q}`"
            ))),
        }
    }

    /// Consistency of the ABox together with the strict part of the TBox.
    pub fn abox_consistent(&self, kb: &KnowledgeBase) -> Result<bool> {
        let mut run = Run::new(&kb.strict, self.max_expansions);
        let mut graph = Graph::default();
        let mut index: HashMap<&str, usize> = HashMap::new();
        let mut individuals: Vec<&str> = Vec::new();
        for a in &kb.concept_assertions {
            individuals.push(&a.individual);
        }
        for a in &kb.role_assertions {
            individuals.push(&a.subject);
            individuals.push(&a.object);
        }
        for name in individuals {
            if !index.contains_key(name) {
                let label = run.root_label(&[]);
                index.insert(name, graph.add_root(label));
            }
        }
        for a in &kb.concept_assertions {
            let id = run.interner.intern(&a.concept.nnf());
            graph.nodes[index[a.individual.as_str()]].label.insert(id);
        }
        for a in &kb.role_assertions {
            let role = run.interner.symbol(&a.role);
            let (s, o) = (index[a.subject.as_str()], index[a.object.as_str()]);
            graph.nodes[s].edges.push((role, o));
        }
        run.satisfiable(graph)
    }
}

pub fn is_satisfiable(c: &Concept, strict: &[StrictInclusion]) -> Result<bool> {
    Tableau::default().is_satisfiable(c, strict)
}

pub fn entails(strict: &[StrictInclusion], q: &Query) -> Result<bool> {
    Tableau::default().entails(strict, q)
}

pub fn abox_consistent(kb: &KnowledgeBase) -> Result<bool> {
    Tableau::default().abox_consistent(kb)
}

type Id = u32;
type Sym = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    Top,
    Bot,
    Atom(Sym),
    NegAtom(Sym),
    And(Id, Id),
    Or(Id, Id),
    Exists(Sym, Id),
    Forall(Sym, Id),
}

#[derive(Default)]
struct Interner {
    nodes: Vec<Node>,
    ids: HashMap<Node, Id>,
    symbols: HashMap<String, Sym>,
}

impl Interner {
    fn symbol(&mut self, name: &str) -> Sym {
        if let Some(&s) = self.symbols.get(name) {
            return s;
        }
        let s = self.symbols.len() as Sym;
        self.symbols.insert(name.to_string(), s);
        s
    }

    fn node(&mut self, n: Node) -> Id {
        if let Some(&id) = self.ids.get(&n) {
            return id;
        }
        let id = self.nodes.len() as Id;
        self.nodes.push(n);
        self.ids.insert(n, id);
        id
    }

    /// Interns a concept in NNF, folding away trivial `Top`/`Bot` operands.
    fn intern(&mut self, c: &Concept) -> Id {
        match c {
            Concept::Top => self.node(Node::Top),
            Concept::Bot => self.node(Node::Bot),
            Concept::Atom(a) => {
                let s = self.symbol(a);
                self.node(Node::Atom(s))
            }
            Concept::Not(inner) => match inner.as_ref() {
                Concept::Atom(a) => {
                    let s = self.symbol(a);
                    self.node(Node::NegAtom(s))
                }
                other => {
                    let negated = Concept::not(other.clone()).nnf();
                    self.intern(&negated)
                }
            },
            Concept::And(l, r) => {
                let (l, r) = (self.intern(l), self.intern(r));
                match (self.nodes[l as usize], self.nodes[r as usize]) {
                    (Node::Bot, _) | (_, Node::Bot) => self.node(Node::Bot),
                    (Node::Top, _) => r,
                    (_, Node::Top) => l,
                    _ if l == r => l,
                    _ => self.node(Node::And(l, r)),
                }
            }
            Concept::Or(l, r) => {
                let (l, r) = (self.intern(l), self.intern(r));
                match (self.nodes[l as usize], self.nodes[r as usize]) {
                    (Node::Top, _) | (_, Node::Top) => self.node(Node::Top),
                    (Node::Bot, _) => r,
                    (_, Node::Bot) => l,
                    _ if l == r => l,
                    _ => self.node(Node::Or(l, r)),
                }
            }
            Concept::Exists(role, inner) => {
                let s = self.symbol(role);
                let i = self.intern(inner);
                self.node(Node::Exists(s, i))
            }
            Concept::Forall(role, inner) => {
                let s = self.symbol(role);
                let i = self.intern(inner);
                self.node(Node::Forall(s, i))
            }
        }
    }
}

#[derive(Debug, Clone)]
struct GraphNode {
    label: BTreeSet<Id>,
    parent: Option<usize>,
    root: bool,
    edges: Vec<(Sym, usize)>,
}

#[derive(Debug, Clone, Default)]
struct Graph {
    nodes: Vec<GraphNode>,
}

impl Graph {
    fn add_root(&mut self, label: BTreeSet<Id>) -> usize {
        self.nodes.push(GraphNode {
            label,
            parent: None,
            root: true,
            edges: Vec::new(),
        });
        self.nodes.len() - 1
    }

    /// Tree nodes whose label is contained in a non-root strict ancestor's
    /// label, or whose ancestor is blocked.
    fn blocked(&self) -> Vec<bool> {
        let mut blocked = vec![false; self.nodes.len()];
        for i in 0..self.nodes.len() {
            let node = &self.nodes[i];
            if node.root {
                continue;
            }
            let mut anc = node.parent;
            let mut is_blocked = false;
            while let Some(a) = anc {
                let ancestor = &self.nodes[a];
                if ancestor.root {
                    break;
                }
                if blocked[a] || node.label.is_subset(&ancestor.label) {
                    is_blocked = true;
                    break;
                }
                anc = ancestor.parent;
            }
            blocked[i] = is_blocked;
        }
        blocked
    }
}

struct Run {
    interner: Interner,
    axioms: Vec<Id>,
    budget: usize,
    expansions: usize,
}

impl Run {
    fn new(strict: &[StrictInclusion], budget: usize) -> Self {
        let mut interner = Interner::default();
        let mut axioms: Vec<Id> = strict
            .iter()
            .map(|s| interner.intern(&s.as_constraint()))
            .collect();
        axioms.sort_unstable();
        axioms.dedup();
        Run {
            interner,
            axioms,
            budget,
            expansions: 0,
        }
    }

    fn root_label(&self, seed: &[Id]) -> BTreeSet<Id> {
        seed.iter().chain(&self.axioms).copied().collect()
    }

    fn spend(&mut self) -> Result<()> {
        self.expansions += 1;
        if self.expansions > self.budget {
            Err(Error::ResourceLimit {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    fn has_clash(&self, label: &BTreeSet<Id>) -> bool {
        label
            .iter()
            .any(|&id| match self.interner.nodes[id as usize] {
                Node::Bot => true,
                Node::NegAtom(s) => self
                    .interner
                    .ids
                    .get(&Node::Atom(s))
                    .is_some_and(|pos| label.contains(pos)),
                _ => false,
            })
    }

    /// Applies the deterministic rules (⊓, ∀) to fixpoint. Returns false on
    /// a clash.
    fn saturate(&self, graph: &mut Graph) -> bool {
        loop {
            let mut changed = false;
            for i in 0..graph.nodes.len() {
                let label: Vec<Id> = graph.nodes[i].label.iter().copied().collect();
                for id in label {
                    match self.interner.nodes[id as usize] {
                        Node::And(l, r) => {
                            changed |= graph.nodes[i].label.insert(l);
                            changed |= graph.nodes[i].label.insert(r);
                        }
                        Node::Forall(role, c) => {
                            let targets: Vec<usize> = graph.nodes[i]
                                .edges
                                .iter()
                                .filter(|(r, _)| *r == role)
                                .map(|&(_, t)| t)
                                .collect();
                            for t in targets {
                                changed |= graph.nodes[t].label.insert(c);
                            }
                        }
                        _ => {}
                    }
                }
                if self.has_clash(&graph.nodes[i].label) {
                    return false;
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn open_disjunction(&self, graph: &Graph) -> Option<(usize, Id, Id)> {
        for (i, node) in graph.nodes.iter().enumerate() {
            for &id in &node.label {
                if let Node::Or(l, r) = self.interner.nodes[id as usize] {
                    if !node.label.contains(&l) && !node.label.contains(&r) {
                        return Some((i, l, r));
                    }
                }
            }
        }
        None
    }

    fn open_existential(&self, graph: &Graph) -> Option<(usize, Sym, Id)> {
        let blocked = graph.blocked();
        for (i, node) in graph.nodes.iter().enumerate() {
            if blocked[i] {
                continue;
            }
            for &id in &node.label {
                if let Node::Exists(role, c) = self.interner.nodes[id as usize] {
                    let witnessed = node
                        .edges
                        .iter()
                        .any(|&(r, t)| r == role && graph.nodes[t].label.contains(&c));
                    if !witnessed {
                        return Some((i, role, c));
                    }
                }
            }
        }
        None
    }

    fn satisfiable(&mut self, mut graph: Graph) -> Result<bool> {
        loop {
            if !self.saturate(&mut graph) {
                return Ok(false);
            }
            if let Some((i, left, right)) = self.open_disjunction(&graph) {
                self.spend()?;
                let mut branch = graph.clone();
                branch.nodes[i].label.insert(left);
                if self.satisfiable(branch)? {
                    return Ok(true);
                }
                graph.nodes[i].label.insert(right);
                continue;
            }
            if let Some((i, role, c)) = self.open_existential(&graph) {
                self.spend()?;
                let mut label = self.root_label(&[c]);
                for &id in &graph.nodes[i].label {
                    if let Node::Forall(r, d) = self.interner.nodes[id as usize] {
                        if r == role {
                            label.insert(d);
                        }
                    }
                }
                graph.nodes.push(GraphNode {
                    label,
                    parent: Some(i),
                    root: false,
                    edges: Vec::new(),
                });
                let child = graph.nodes.len() - 1;
                graph.nodes[i].edges.push((role, child));
                continue;
            }
            return Ok(true);
        }
    }
}
