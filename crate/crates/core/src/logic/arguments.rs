use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::consequence::{closure, derives, is_consistent};
use super::{Formula, KnowledgeBase, Literal, LogicError, SimpleRule, Support};
use crate::parallel::{self, Execution};

/// A premise-claim pair `<support, claim>`. Whether it is valid, minimal and
/// so on is computed by [`classify`], never assumed.
///
/// Field order gives the canonical ordering: by claim, then support.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ApproximateArgument {
    pub claim: Literal,
    pub support: Support,
}

impl ApproximateArgument {
    pub fn new(support: Support, claim: Literal) -> Self {
        ApproximateArgument { claim, support }
    }

    pub fn rules(&self) -> impl Iterator<Item = &SimpleRule> {
        self.support.iter().filter_map(Formula::as_rule)
    }

    /// Literal premises of the support.
    pub fn premises(&self) -> impl Iterator<Item = &Literal> {
        self.support.iter().filter_map(Formula::as_literal)
    }

    pub fn is_valid(&self) -> bool {
        derives(&self.support, &self.claim)
    }
}

impl fmt::Display for ApproximateArgument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<{")?;
        for (i, x) in self.support.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}, {}>", self.claim)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ArgumentClass {
    pub valid: bool,
    pub consistent: bool,
    pub minimal: bool,
    pub expansive: bool,
    pub simple: bool,
}

pub fn classify(arg: &ApproximateArgument) -> ArgumentClass {
    let valid = arg.is_valid();
    let consistent = is_consistent(&arg.support);
    // derivability is monotone in the support, so checking every
    // one-element removal covers all strict subsets
    let minimal = valid
        && arg.support.iter().all(|f| {
            let mut smaller = arg.support.clone();
            smaller.remove(f);
            !derives(&smaller, &arg.claim)
        });
    ArgumentClass {
        valid,
        consistent,
        minimal,
        expansive: valid && consistent,
        simple: valid && minimal,
    }
}

/// One argument per rule whose antecedents the base entails: the antecedent
/// literals, the rule, and its consequent as claim. Facts on their own do not
/// form arguments. Output is sorted canonically.
pub fn construct_simple_arguments(kb: &KnowledgeBase, exec: Execution) -> Vec<ApproximateArgument> {
    let derived = closure(&kb.facts, &kb.rules);
    let mut out: Vec<ApproximateArgument> = parallel::map(exec, &kb.rules, |rule| {
        rule.antecedents
            .iter()
            .all(|a| derived.contains(a))
            .then(|| {
                let support = rule
                    .antecedents
                    .iter()
                    .cloned()
                    .map(Formula::Literal)
                    .chain(std::iter::once(Formula::Rule(rule.clone())))
                    .collect();
                ApproximateArgument::new(support, rule.consequent.clone())
            })
    })
    .into_iter()
    .flatten()
    .collect();
    out.sort();
    out.dedup();
    out
}

/// Literals from which `claim` can be reached backwards through applicable
/// rules of `kb`, including `claim`.
fn backward_literals(kb: &KnowledgeBase, claim: &Literal) -> BTreeSet<Literal> {
    let derived = closure(&kb.facts, &kb.rules);
    let mut seen = BTreeSet::new();
    let mut stack = vec![claim.clone()];
    while let Some(lit) = stack.pop() {
        if !seen.insert(lit.clone()) {
            continue;
        }
        for rule in kb.rules_for(&lit) {
            if rule.antecedents.iter().all(|a| derived.contains(a)) {
                stack.extend(rule.antecedents.iter().cloned());
            }
        }
    }
    seen
}

/// Adds to the argument every fact and applicable rule of `kb` lying on a
/// derivation path to its claim. The claim itself is never added as a
/// premise.
pub fn expand_argument(
    kb: &KnowledgeBase,
    arg: &ApproximateArgument,
) -> Result<ApproximateArgument, LogicError> {
    if !arg.is_valid() {
        return Err(LogicError::InvalidArgument(arg.to_string()));
    }
    let derived = closure(&kb.facts, &kb.rules);
    let on_path = backward_literals(kb, &arg.claim);
    let mut support = arg.support.clone();
    for lit in &on_path {
        if lit != &arg.claim && kb.facts.contains(lit) {
            support.insert(Formula::Literal(lit.clone()));
        }
        for rule in kb.rules_for(lit) {
            if rule.antecedents.iter().all(|a| derived.contains(a)) {
                support.insert(Formula::Rule(rule.clone()));
            }
        }
    }
    if !is_consistent(&support) {
        return Err(LogicError::InconsistentExpansion {
            claim: arg.claim.clone(),
        });
    }
    Ok(ApproximateArgument::new(support, arg.claim.clone()))
}

/// Literals that bear on `claim`: those on a derivation path to it, plus
/// those on a path to the complement of any such literal.
pub fn relevant_literals(kb: &KnowledgeBase, claim: &Literal) -> BTreeSet<Literal> {
    let direct = backward_literals(kb, claim);
    let mut all = direct.clone();
    for lit in &direct {
        all.extend(backward_literals(kb, &lit.complement()));
    }
    all
}

/// Structural relevance: every premise of `candidate` bears on the target's
/// claim, and the candidate brings something the target's support lacks.
pub fn relevant(
    kb: &KnowledgeBase,
    candidate: &ApproximateArgument,
    target: &ApproximateArgument,
) -> bool {
    let bearing = relevant_literals(kb, &target.claim);
    let on_path = candidate.support.iter().all(|f| match f {
        Formula::Literal(l) => bearing.contains(l),
        Formula::Rule(r) => bearing.contains(&r.consequent),
    });
    on_path && !candidate.support.is_subset(&target.support)
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

    fn arg(support: &[&str], claim: &str) -> ApproximateArgument {
        ApproximateArgument::new(
            support_of(support.iter().copied()).unwrap(),
            claim.parse().unwrap(),
        )
    }

    #[test]
    fn running_example_arguments() {
        let args = construct_simple_arguments(&delta_m(), Execution::Sequential);
        let expected = vec![
            arg(&["T2", "T3", "T2 & T3 -> T1"], "T1"),
            arg(&["T4", "T4 -> T3"], "T3"),
            arg(&["T6", "T7", "T6 & T7 -> ~T3"], "~T3"),
            arg(&["T5", "T5 -> T4"], "T4"),
        ];
        assert_eq!(args, expected);
        assert!(args.iter().all(|a| classify(a).simple));
    }

    #[test]
    fn no_rules_no_arguments() {
        let kb = KnowledgeBase::parse(["p", "q"]).unwrap();
        assert!(construct_simple_arguments(&kb, Execution::Sequential).is_empty());
    }

    #[test]
    fn chain_yields_one_argument_per_step() {
        let kb = KnowledgeBase::parse(["p", "p -> q", "q -> r"]).unwrap();
        assert_eq!(
            construct_simple_arguments(&kb, Execution::Parallel),
            vec![arg(&["p", "p -> q"], "q"), arg(&["q", "q -> r"], "r")]
        );
    }

    #[test]
    fn inapplicable_rule_yields_nothing() {
        let kb = KnowledgeBase::parse(["p", "s -> r"]).unwrap();
        assert!(construct_simple_arguments(&kb, Execution::Sequential).is_empty());
    }

    #[test]
    fn classification_of_approximate_arguments() {
        let c1 = arg(
            &["T5", "T4", "T3", "T2", "T5 -> T4", "T4 -> T3", "T2 & T3 -> T1"],
            "T1",
        );
        assert_eq!(
            classify(&c1),
            ArgumentClass {
                valid: true,
                consistent: true,
                minimal: false,
                expansive: true,
                simple: false
            }
        );
        let c2 = arg(&[], "T1");
        assert_eq!(
            classify(&c2),
            ArgumentClass {
                valid: false,
                consistent: true,
                minimal: false,
                expansive: false,
                simple: false
            }
        );
        // {p, p->q} already derives q, so the contradiction is surplus
        let contradictory = arg(&["p", "~p", "p -> q"], "q");
        assert_eq!(
            classify(&contradictory),
            ArgumentClass {
                valid: true,
                consistent: false,
                minimal: false,
                expansive: false,
                simple: false
            }
        );
    }

    #[test]
    fn expansion_of_b_and_c() {
        let kb = delta_m();
        let b = arg(&["T4", "T4 -> T3"], "T3");
        assert_eq!(
            expand_argument(&kb, &b).unwrap(),
            arg(&["T4", "T5", "T4 -> T3", "T5 -> T4"], "T3")
        );
        let c = arg(&["T2", "T3", "T2 & T3 -> T1"], "T1");
        let c1 = arg(
            &["T5", "T4", "T3", "T2", "T5 -> T4", "T4 -> T3", "T2 & T3 -> T1"],
            "T1",
        );
        let expanded = expand_argument(&kb, &c).unwrap();
        assert_eq!(expanded, c1);
        assert!(classify(&expanded).expansive);
    }

    #[test]
    fn closed_argument_expands_to_itself() {
        let kb = KnowledgeBase::parse(["p", "p -> q"]).unwrap();
        let a = arg(&["p", "p -> q"], "q");
        assert_eq!(expand_argument(&kb, &a).unwrap(), a);
    }

    #[test]
    fn inconsistent_expansion() {
        let kb = KnowledgeBase::parse(["p", "~p", "p -> q", "~p -> s", "s -> q"]).unwrap();
        let a = arg(&["p", "p -> q"], "q");
        assert_eq!(
            expand_argument(&kb, &a),
            Err(LogicError::InconsistentExpansion {
                claim: Literal::pos("q")
            })
        );
    }

    #[test]
    fn invalid_argument_cannot_expand() {
        assert!(matches!(
            expand_argument(&delta_m(), &arg(&[], "T1")),
            Err(LogicError::InvalidArgument(_))
        ));
    }

    #[test]
    fn relevance() {
        let kb = delta_m();
        let b = arg(&["T4", "T4 -> T3"], "T3");
        let b1 = arg(&["T5", "T5 -> T4", "T4 -> T3"], "T3");
        assert!(relevant(&kb, &b1, &b));
        assert!(!relevant(&kb, &b, &b));

        let mut with_z = kb.clone();
        with_z.facts.insert(Literal::pos("z"));
        assert!(!relevant(&with_z, &arg(&["z"], "z"), &b));
    }

    #[test]
    fn counterargument_premises_bear_on_the_claim() {
        let kb = delta_m();
        let bearing = relevant_literals(&kb, &Literal::pos("T3"));
        assert!(bearing.contains(&Literal::pos("T6")));
        assert!(bearing.contains(&Literal::pos("T5")));
        assert!(!bearing.contains(&Literal::pos("T1")));
    }
}
