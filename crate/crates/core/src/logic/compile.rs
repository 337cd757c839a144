use std::collections::{BTreeMap, BTreeSet};

use super::{KnowledgeBase, Literal, LogicError, SimpleRule};
use crate::aif::{validate, AifGraph, AifNode, NodeKind};

fn err(node: &AifNode, reason: impl Into<String>) -> LogicError {
    LogicError::CompileError {
        node: node.id.to_string(),
        reason: reason.into(),
    }
}

fn information_premises(graph: &AifGraph, node: &AifNode) -> Result<Vec<Literal>, LogicError> {
    let mut premises = Vec::new();
    for p in graph.incoming(&node.id) {
        if p.kind != NodeKind::Information {
            return Err(err(node, format!("premise {} is not an information node", p.id)));
        }
        premises.push(Literal::pos(p.id.as_str()));
    }
    premises.sort();
    premises.dedup();
    Ok(premises)
}

fn single_target<'g>(graph: &'g AifGraph, node: &'g AifNode) -> Result<&'g AifNode, LogicError> {
    let targets: Vec<&AifNode> = graph.outgoing(&node.id).collect();
    match targets.as_slice() {
        [t] if t.kind == NodeKind::Information => Ok(t),
        [t] => Err(err(node, format!("target {} is not an information node", t.id))),
        _ => Err(err(node, format!("expected one outgoing edge, found {}", targets.len()))),
    }
}

/// Translates an AIF graph into a simple knowledge base.
///
/// Every information node becomes a positive fact carrying its text. A rule
/// application with premises `p1..pk` and conclusion `c` becomes
/// `p1 & .. & pk -> c`. A conflict application from `x` to `y` negates `y`:
/// if `x` is the sole premise and is itself concluded by rule applications,
/// those rules are redirected to `~y`; otherwise the conflict contributes
/// `x1 & .. & xk -> ~y`. Preference applications are ignored.
pub fn compile(graph: &AifGraph) -> Result<KnowledgeBase, LogicError> {
    if let Some(d) = validate(graph).first() {
        return Err(LogicError::CompileError {
            node: d.ids().first().unwrap_or(&"graph").to_string(),
            reason: d.to_string(),
        });
    }

    let mut kb = KnowledgeBase::default();
    for node in graph.nodes_of(NodeKind::Information) {
        let atom = node.id.to_string();
        kb.facts.insert(Literal::pos(atom.clone()));
        kb.proposition_texts.insert(atom.clone(), node.text.clone());
        if let Some(speaker) = &node.speaker {
            kb.sources.insert(atom, speaker.clone());
        }
    }

    let mut rules: Vec<SimpleRule> = Vec::new();
    let mut producers: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for node in graph.nodes_of(NodeKind::RuleApplication) {
        let antecedents = information_premises(graph, node)?;
        let conclusion = single_target(graph, node)?;
        let rule = SimpleRule {
            antecedents,
            consequent: Literal::pos(conclusion.id.as_str()),
            scheme: node.scheme.clone(),
            source_node: Some(node.id.clone()),
        };
        rule.check().map_err(|e| err(node, e.to_string()))?;
        producers
            .entry(conclusion.id.to_string())
            .or_default()
            .push(rules.len());
        rules.push(rule);
    }

    let mut redirected = BTreeSet::new();
    let mut extra = Vec::new();
    for node in graph.nodes_of(NodeKind::ConflictApplication) {
        let premises = information_premises(graph, node)?;
        let target = single_target(graph, node)?;
        let negated = Literal::neg(target.id.as_str());

        let produced = match premises.as_slice() {
            [x] => producers.get(&x.atom).filter(|p| !p.is_empty()),
            _ => None,
        };
        match produced {
            Some(indices) => {
                let x = &premises[0];
                let other_uses = graph
                    .outgoing(&crate::aif::NodeId::new(x.atom.clone()))
                    .any(|n| n.id != node.id);
                for &i in indices {
                    let mut rule = rules[i].clone();
                    rule.consequent = negated.clone();
                    rule.check().map_err(|e| err(node, e.to_string()))?;
                    extra.push(rule);
                    if !other_uses {
                        redirected.insert(i);
                    }
                }
            }
            None => {
                let rule = SimpleRule {
                    antecedents: premises,
                    consequent: negated,
                    scheme: node.scheme.clone(),
                    source_node: Some(node.id.clone()),
                };
                rule.check().map_err(|e| err(node, e.to_string()))?;
                extra.push(rule);
            }
        }
    }

    kb.rules = rules
        .into_iter()
        .enumerate()
        .filter(|(i, _)| !redirected.contains(i))
        .map(|(_, r)| r)
        .chain(extra)
        .collect();
    kb.normalize();
    Ok(kb)
}
