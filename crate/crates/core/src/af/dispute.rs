use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{enumerate, AfError, ArgId, ArgumentationFramework, EnumerationConfig, Semantics};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Side {
    Pro,
    Con,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisputeNode {
    pub argument: ArgId,
    pub side: Side,
    pub children: Vec<DisputeNode>,
    /// Attackers of a PRO node not expanded because they were already
    /// answered as CON higher up the branch.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub repeated: Vec<ArgId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisputeTree {
    pub root: DisputeNode,
    /// The extension PRO moves were drawn from.
    pub witness: BTreeSet<ArgId>,
}

impl DisputeTree {
    pub fn pro_arguments(&self) -> BTreeSet<ArgId> {
        let mut out = BTreeSet::new();
        collect(&self.root, Side::Pro, &mut out);
        out
    }

    pub fn con_arguments(&self) -> BTreeSet<ArgId> {
        let mut out = BTreeSet::new();
        collect(&self.root, Side::Con, &mut out);
        out
    }

    /// Every (PRO, CON child, PRO grandchild) step.
    pub fn exchanges(&self) -> Vec<(&ArgId, &ArgId, Option<&ArgId>)> {
        let mut out = Vec::new();
        exchanges(&self.root, &mut out);
        out
    }
}

fn collect(node: &DisputeNode, side: Side, out: &mut BTreeSet<ArgId>) {
    if node.side == side {
        out.insert(node.argument.clone());
    }
    for c in &node.children {
        collect(c, side, out);
    }
}

fn exchanges<'t>(node: &'t DisputeNode, out: &mut Vec<(&'t ArgId, &'t ArgId, Option<&'t ArgId>)>) {
    for con in &node.children {
        out.push((&node.argument, &con.argument, con.children.first().map(|p| &p.argument)));
        for pro in &con.children {
            exchanges(pro, out);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum DisputeOutcome {
    Accepted(DisputeTree),
    NotAccepted { argument: ArgId, blocking: Vec<ArgId> },
}

fn grow(
    af: &ArgumentationFramework,
    witness: &BTreeSet<ArgId>,
    pro: usize,
    branch_cons: &mut Vec<usize>,
) -> DisputeNode {
    let mut node = DisputeNode {
        argument: af.arguments()[pro].clone(),
        side: Side::Pro,
        children: Vec::new(),
        repeated: Vec::new(),
    };
    for &con in af.attackers_idx(pro) {
        if branch_cons.contains(&con) {
            node.repeated.push(af.arguments()[con].clone());
            continue;
        }
        let reply = af
            .attackers_idx(con)
            .iter()
            .copied()
            .find(|&z| witness.contains(&af.arguments()[z]));
        branch_cons.push(con);
        let children = reply
            .map(|z| vec![grow(af, witness, z, branch_cons)])
            .unwrap_or_default();
        branch_cons.pop();
        node.children.push(DisputeNode {
            argument: af.arguments()[con].clone(),
            side: Side::Con,
            children,
            repeated: Vec::new(),
        });
    }
    node
}

/// A PRO/CON tree showing `arg` belongs to some `semantics` extension.
///
/// PRO replies come from the first extension (canonical order) that
/// contains `arg`, choosing the first attacker in argument order; a CON
/// attacker already met on the branch is recorded in `repeated` rather
/// than expanded again.
///
/// When no extension contains `arg`, the blocking attackers are those that
/// no argument compatible with `arg` can counter; if every attacker can in
/// principle be countered, the credulously accepted attackers are named
/// instead, and failing that all attackers.
pub fn dispute_tree(
    af: &ArgumentationFramework,
    arg: &ArgId,
    semantics: Semantics,
    config: &EnumerationConfig,
) -> Result<DisputeOutcome, AfError> {
    let a = af.idx(arg)?;
    let extensions = enumerate(af, semantics, config)?.extensions;
    if let Some(witness) = extensions.iter().find(|e| e.contains(arg)) {
        let root = grow(af, witness, a, &mut Vec::new());
        return Ok(DisputeOutcome::Accepted(DisputeTree {
            root,
            witness: witness.clone(),
        }));
    }

    let attackers = af.attackers_idx(a);
    let self_attacking = |z: usize| af.attacked_idx(z).contains(&z);
    let compatible = |z: usize| {
        !self_attacking(a)
            && !self_attacking(z)
            && !af.attacked_idx(z).contains(&a)
            && !af.attackers_idx(z).contains(&a)
    };
    let mut blocking: Vec<usize> = attackers
        .iter()
        .copied()
        .filter(|&y| !af.attackers_idx(y).iter().any(|&z| compatible(z)))
        .collect();
    if blocking.is_empty() {
        blocking = attackers
            .iter()
            .copied()
            .filter(|&y| extensions.iter().any(|e| e.contains(&af.arguments()[y])))
            .collect();
    }
    if blocking.is_empty() {
        blocking = attackers.to_vec();
    }
    Ok(DisputeOutcome::NotAccepted {
        argument: arg.clone(),
        blocking: blocking.into_iter().map(|i| af.arguments()[i].clone()).collect(),
    })
}
