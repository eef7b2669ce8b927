//! Reduction of typicality-guarded checks to classical ALC.
//!
//! A rank-0 element of a ranked model satisfies the materialization of every
//! default, and a classical model of the strict axioms containing an element
//! of `C ⊓ materialization` can be ranked with that element at rank 0. So
//! `E ⊨ T(⊤) ⊓ X ⊑ Y` holds iff `materialize(δ(E)) ⊓ X ⊓ ¬Y` is
//! unsatisfiable w.r.t. the strict part of `E`.

use crate::concept::Concept;
use crate::error::Result;
use crate::kb::{
    materialize, DefeasibleInclusion, KnowledgeBase, Query, QueryLhs, StrictInclusion,
};
use crate::ranking::RankingResult;
use crate::tableau::Tableau;

/// One member `E_i` of the exceptionality sequence: the strict axioms plus
/// the defaults still in play at that stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TBoxStage {
    pub strict: Vec<StrictInclusion>,
    pub defeasible: Vec<DefeasibleInclusion>,
}

impl TBoxStage {
    pub fn new(strict: Vec<StrictInclusion>, defeasible: Vec<DefeasibleInclusion>) -> Self {
        TBoxStage { strict, defeasible }
    }

    /// `E_0`: the whole TBox of `kb`.
    pub fn initial(kb: &KnowledgeBase) -> Self {
        TBoxStage::new(kb.strict.clone(), kb.defeasible.clone())
    }

    pub fn materialization(&self) -> Concept {
        materialize(&self.defeasible)
    }

    /// `E ⊨ T(⊤) ⊑ ¬c`.
    pub fn is_exceptional(&self, tableau: &Tableau, c: &Concept) -> Result<bool> {
        let probe = Concept::and(self.materialization(), c.clone());
        Ok(!tableau.is_satisfiable(&probe, &self.strict)?)
    }

    /// `E ⊨ T(⊤) ⊓ extra ⊑ (¬b ⊔ d)`.
    pub fn guarded_entails(
        &self,
        tableau: &Tableau,
        extra: &Concept,
        b: &Concept,
        d: &Concept,
    ) -> Result<bool> {
        let lhs = Concept::conjunction([self.materialization(), extra.clone(), b.clone()]);
        tableau.subsumes(&self.strict, &lhs, d)
    }
}

pub fn is_exceptional(c: &Concept, e: &TBoxStage) -> Result<bool> {
    e.is_exceptional(&Tableau::default(), c)
}

pub fn guarded_entails(e: &TBoxStage, extra: &Concept, b: &Concept, d: &Concept) -> Result<bool> {
    e.guarded_entails(&Tableau::default(), extra, b, d)
}

/// `kb ⊨ C ⊑ D` for a plain query. Defaults whose subject has no rank are
/// read as strict axioms: their subjects are empty in every ranked model,
/// which the strictified axiom expresses classically.
pub fn strict_query_entails(
    kb: &KnowledgeBase,
    ranking: &RankingResult,
    q: &Query,
) -> Result<bool> {
    let mut strict = kb.strict.clone();
    strict.extend(ranking.infinite_defaults().iter().map(|d| d.strictified()));
    let plain = Query {
        lhs: QueryLhs::Plain(q.lhs.concept().clone()),
        rhs: q.rhs.clone(),
    };
    ranking.tableau().entails(&strict, &plain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse_concept, parse_kb};

    const KB1: &str = "Penguin <= Bird.
        T(Bird) <= HasNiceFeather.
        T(Bird) <= Fly.
        T(Penguin) <= not Fly.";

    fn c(s: &str) -> Concept {
        parse_concept(s).unwrap()
    }

    fn stage1(kb: &KnowledgeBase) -> TBoxStage {
        let d = kb
            .defeasible
            .iter()
            .filter(|d| d.subject() == &c("Penguin"))
            .cloned()
            .collect();
        TBoxStage::new(kb.strict.clone(), d)
    }

    #[test]
    fn exceptionality_at_stage_zero() {
        let kb = parse_kb(KB1).unwrap();
        let e0 = TBoxStage::initial(&kb);
        assert!(is_exceptional(&c("Penguin"), &e0).unwrap());
        assert!(!is_exceptional(&c("Bird"), &e0).unwrap());
        assert!(is_exceptional(&c("A and not A"), &e0).unwrap());
        assert!(is_exceptional(&c("Bot"), &TBoxStage::new(vec![], vec![])).unwrap());
    }

    #[test]
    fn guarded_checks_on_stage_one() {
        let kb = parse_kb(KB1).unwrap();
        let e1 = stage1(&kb);
        let s = [
            DefeasibleInclusion::new(c("Penguin"), c("not Fly")),
            DefeasibleInclusion::new(c("Bird"), c("HasNiceFeather")),
        ];
        let extra = materialize(&s);
        assert!(guarded_entails(&e1, &extra, &c("Penguin"), &c("HasNiceFeather")).unwrap());
        assert!(!guarded_entails(&e1, &extra, &c("Penguin"), &Concept::Bot).unwrap());
        assert!(guarded_entails(&e1, &Concept::Top, &Concept::Bot, &c("Anything")).unwrap());
    }

    #[test]
    fn exceptionality_is_monotone_along_stages() {
        let kb = parse_kb(KB1).unwrap();
        let e0 = TBoxStage::initial(&kb);
        let e1 = stage1(&kb);
        let e2 = TBoxStage::new(kb.strict.clone(), vec![]);
        for probe in [
            "Bird",
            "Penguin",
            "Penguin and Fly",
            "Fly",
            "not Bird",
            "Bird and not Fly",
        ] {
            let mut was_normal = false;
            for e in [&e0, &e1, &e2] {
                let exc = is_exceptional(&c(probe), e).unwrap();
                assert!(!(was_normal && exc), "{probe} became exceptional again");
                was_normal |= !exc;
            }
        }
    }
}
