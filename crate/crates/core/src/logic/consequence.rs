use std::collections::BTreeSet;

use super::{Formula, KnowledgeBase, Literal, SimpleRule, Support};

/// Least fixpoint of forward chaining: the facts plus everything the rules
/// derive from them.
pub fn closure<'a>(
    facts: impl IntoIterator<Item = &'a Literal>,
    rules: impl IntoIterator<Item = &'a SimpleRule>,
) -> BTreeSet<Literal> {
    let mut known: BTreeSet<Literal> = facts.into_iter().cloned().collect();
    let mut pending: Vec<&SimpleRule> = rules.into_iter().collect();
    loop {
        let before = pending.len();
        pending.retain(|r| {
            if r.antecedents.iter().all(|a| known.contains(a)) {
                known.insert(r.consequent.clone());
                false
            } else {
                true
            }
        });
        if pending.len() == before {
            return known;
        }
    }
}

/// True iff `goal` is a fact of `kb` or follows from its rules.
pub fn entails(kb: &KnowledgeBase, goal: &Literal) -> bool {
    kb.facts.contains(goal) || closure(&kb.facts, &kb.rules).contains(goal)
}

fn split(support: &Support) -> (Vec<&Literal>, Vec<&SimpleRule>) {
    let mut lits = Vec::new();
    let mut rules = Vec::new();
    for f in support {
        match f {
            Formula::Literal(l) => lits.push(l),
            Formula::Rule(r) => rules.push(r),
        }
    }
    (lits, rules)
}

/// The simple consequence relation over a support set: some rule in the
/// support concludes `goal` and each of its antecedents is in the support or
/// is itself derived. A literal alone does not derive itself.
pub fn derives(support: &Support, goal: &Literal) -> bool {
    let (lits, rules) = split(support);
    let known = closure(lits, rules.iter().copied());
    rules
        .iter()
        .any(|r| &r.consequent == goal && r.antecedents.iter().all(|a| known.contains(a)))
}

/// No literal and its complement are both in the closure of the support.
pub fn is_consistent(support: &Support) -> bool {
    let (lits, rules) = split(support);
    let known = closure(lits, rules);
    !known.iter().any(|l| !l.positive && known.contains(&l.complement()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::support_of;

    fn delta_m() -> KnowledgeBase {
        KnowledgeBase::parse([
            "T1", "T2", "T3", "T4", "T5", "T6", "T7",
            "T5 -> T4", "T4 -> T3", "T2 & T3 -> T1", "T6 & T7 -> ~T3",
        ])
        .unwrap()
    }

    #[test]
    fn running_example_entailment() {
        let kb = delta_m();
        assert!(entails(&kb, &Literal::pos("T1")));
        assert!(!entails(&kb, &Literal::neg("T1")));
        assert!(entails(&kb, &Literal::neg("T3")));
        assert!(!entails(&KnowledgeBase::default(), &Literal::pos("T1")));
    }

    #[test]
    fn chained_derivation_without_intermediate_fact() {
        let kb = KnowledgeBase::parse(["p", "p -> q", "q -> r"]).unwrap();
        assert!(entails(&kb, &Literal::pos("r")));
        assert!(!entails(&kb, &Literal::pos("s")));
    }

    #[test]
    fn derives_needs_a_rule() {
        let s = support_of(["T3"]).unwrap();
        assert!(!derives(&s, &Literal::pos("T3")));
        let s = support_of(["T5", "T5 -> T4", "T4 -> T3"]).unwrap();
        assert!(derives(&s, &Literal::pos("T3")));
        assert!(derives(&s, &Literal::pos("T4")));
    }

    #[test]
    fn consistency() {
        assert!(is_consistent(&support_of(["p", "p -> q"]).unwrap()));
        assert!(!is_consistent(&support_of(["p", "~p", "p -> q"]).unwrap()));
        assert!(!is_consistent(&support_of(["p", "p -> q", "p -> ~q"]).unwrap()));
    }
}
