use serde::{Deserialize, Serialize};

use super::ApproximateArgument;
use crate::parallel::{self, Execution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AttackKind {
    Undercut,
    Rebut,
}

/// An attack between two arguments, by index into the slice given to
/// [`attacks_between`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Attack {
    pub attacker: usize,
    pub attacked: usize,
    pub kind: AttackKind,
}

/// Undercuts (the attacker's claim negates an antecedent of a rule in the
/// attacked support) and rebuts (the claims are complementary). A pair that
/// does both is reported twice, once per kind.
pub fn attacks_between(args: &[ApproximateArgument], exec: Execution) -> Vec<Attack> {
    let rows = parallel::map_range(exec, args.len(), |i| {
        let claim = &args[i].claim;
        let mut row = Vec::new();
        for (j, target) in args.iter().enumerate() {
            let undercut = target
                .rules()
                .any(|r| r.antecedents.iter().any(|a| claim.is_complement_of(a)));
            if undercut {
                row.push(Attack {
                    attacker: i,
                    attacked: j,
                    kind: AttackKind::Undercut,
                });
            }
            if claim.is_complement_of(&target.claim) {
                row.push(Attack {
                    attacker: i,
                    attacked: j,
                    kind: AttackKind::Rebut,
                });
            }
        }
        row
    });
    let mut out: Vec<Attack> = rows.into_iter().flatten().collect();
    out.sort();
    out
}
