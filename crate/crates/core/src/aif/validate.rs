use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use super::{AifGraph, NodeKind};

/// One invariant violation, naming the offending node or edge ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Diagnostic {
    EmptyId,
    DuplicateId { id: String },
    EmptyText { id: String },
    SchemeOnInformationNode { id: String },
    SchemeFamilyMismatch { id: String },
    DanglingEndpoint { from: String, to: String, missing: String },
    InformationToInformation { from: String, to: String },
    MissingPremise { id: String },
    MissingConclusion { id: String },
    CyclicInference { ids: Vec<String> },
}

impl Diagnostic {
    pub fn ids(&self) -> Vec<&str> {
        match self {
            Diagnostic::EmptyId => vec![],
            Diagnostic::DuplicateId { id }
            | Diagnostic::EmptyText { id }
            | Diagnostic::SchemeOnInformationNode { id }
            | Diagnostic::SchemeFamilyMismatch { id }
            | Diagnostic::MissingPremise { id }
            | Diagnostic::MissingConclusion { id } => vec![id.as_str()],
            Diagnostic::DanglingEndpoint { from, to, .. }
            | Diagnostic::InformationToInformation { from, to } => vec![from.as_str(), to.as_str()],
            Diagnostic::CyclicInference { ids } => ids.iter().map(String::as_str).collect(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::EmptyId => write!(f, "node with empty id"),
            Diagnostic::DuplicateId { id } => write!(f, "duplicate node id {id}"),
            Diagnostic::EmptyText { id } => write!(f, "information node {id} has no text"),
            Diagnostic::SchemeOnInformationNode { id } => {
                write!(f, "information node {id} carries a scheme")
            }
            Diagnostic::SchemeFamilyMismatch { id } => {
                write!(f, "scheme family of node {id} does not match its kind")
            }
            Diagnostic::DanglingEndpoint { from, to, missing } => {
                write!(f, "edge {from} -> {to} refers to unknown node {missing}")
            }
            Diagnostic::InformationToInformation { from, to } => {
                write!(f, "edge {from} -> {to} joins two information nodes")
            }
            Diagnostic::MissingPremise { id } => write!(f, "scheme node {id} has no incoming edge"),
            Diagnostic::MissingConclusion { id } => {
                write!(f, "scheme node {id} has no outgoing edge")
            }
            Diagnostic::CyclicInference { ids } => {
                write!(f, "cyclic inference through {}", ids.join(", "))
            }
        }
    }
}

/// Checks every graph invariant. The result is empty iff the graph is valid.
pub fn validate(graph: &AifGraph) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let mut kinds: BTreeMap<&str, NodeKind> = BTreeMap::new();
    let mut seen_dup = BTreeSet::new();

    for node in graph.nodes() {
        let id = node.id.as_str();
        if id.is_empty() {
            out.push(Diagnostic::EmptyId);
            continue;
        }
        if kinds.insert(id, node.kind).is_some() && seen_dup.insert(id) {
            out.push(Diagnostic::DuplicateId { id: id.to_string() });
        }
        if node.kind == NodeKind::Information && node.text.trim().is_empty() {
            out.push(Diagnostic::EmptyText { id: id.to_string() });
        }
        match (&node.scheme, node.kind.family()) {
            (Some(_), None) => out.push(Diagnostic::SchemeOnInformationNode { id: id.to_string() }),
            (Some(s), Some(family)) if s.family != family => {
                out.push(Diagnostic::SchemeFamilyMismatch { id: id.to_string() })
            }
            _ => {}
        }
    }

    let mut has_in = BTreeSet::new();
    let mut has_out = BTreeSet::new();
    for edge in graph.edges() {
        let (from, to) = (edge.from.as_str(), edge.to.as_str());
        let mut dangling = false;
        for end in [from, to] {
            if !kinds.contains_key(end) {
                out.push(Diagnostic::DanglingEndpoint {
                    from: from.to_string(),
                    to: to.to_string(),
                    missing: end.to_string(),
                });
                dangling = true;
            }
        }
        if dangling {
            continue;
        }
        if kinds[from] == NodeKind::Information && kinds[to] == NodeKind::Information {
            out.push(Diagnostic::InformationToInformation {
                from: from.to_string(),
                to: to.to_string(),
            });
        }
        has_out.insert(from);
        has_in.insert(to);
    }

    for (id, kind) in &kinds {
        if kind.is_scheme() {
            if !has_in.contains(id) {
                out.push(Diagnostic::MissingPremise { id: id.to_string() });
            }
            if !has_out.contains(id) {
                out.push(Diagnostic::MissingConclusion { id: id.to_string() });
            }
        }
    }

    out.extend(inference_cycles(graph, &kinds));
    out
}

/// Cycles in the subgraph of information and rule-application nodes.
fn inference_cycles(graph: &AifGraph, kinds: &BTreeMap<&str, NodeKind>) -> Vec<Diagnostic> {
    let relevant = |id: &str| {
        matches!(
            kinds.get(id),
            Some(NodeKind::Information | NodeKind::RuleApplication)
        )
    };
    let mut succ: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for e in graph.edges() {
        let (from, to) = (e.from.as_str(), e.to.as_str());
        if relevant(from) && relevant(to) {
            succ.entry(from).or_default().push(to);
        }
    }

    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Fresh,
        Active,
        Done,
    }
    let mut marks: BTreeMap<&str, Mark> = kinds.keys().map(|k| (*k, Mark::Fresh)).collect();
    let mut cycles = Vec::new();

    for &start in kinds.keys() {
        if marks[start] != Mark::Fresh || !relevant(start) {
            continue;
        }
        // iterative DFS keeping the active path for cycle reporting
        let mut path: Vec<(&str, usize)> = vec![(start, 0)];
        marks.insert(start, Mark::Active);
        while let Some((node, next)) = path.last().copied() {
            let children = succ.get(node).map(Vec::as_slice).unwrap_or(&[]);
            if next < children.len() {
                path.last_mut().unwrap().1 += 1;
                let child = children[next];
                match marks[child] {
                    Mark::Fresh => {
                        marks.insert(child, Mark::Active);
                        path.push((child, 0));
                    }
                    Mark::Active => {
                        let pos = path.iter().position(|(n, _)| *n == child).unwrap();
                        let mut ids: Vec<String> =
                            path[pos..].iter().map(|(n, _)| n.to_string()).collect();
                        ids.sort();
                        cycles.push(Diagnostic::CyclicInference { ids });
                    }
                    Mark::Done => {}
                }
            } else {
                marks.insert(node, Mark::Done);
                path.pop();
            }
        }
    }
    cycles.sort();
    cycles.dedup();
    cycles
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aif::{AifEdge, AifNode};

    fn rule(id: &str) -> AifNode {
        AifNode::scheme_node(id, NodeKind::RuleApplication, None)
    }

    #[test]
    fn rule_application_without_outgoing_edge() {
        let g = AifGraph::unchecked(
            vec![AifNode::information("p", "p"), rule("ra")],
            vec![AifEdge::new("p", "ra")],
        );
        assert_eq!(
            validate(&g),
            vec![Diagnostic::MissingConclusion { id: "ra".into() }]
        );
    }

    #[test]
    fn duplicate_ids_reported_once() {
        let g = AifGraph::unchecked(
            vec![AifNode::information("p", "one"), AifNode::information("p", "two")],
            vec![],
        );
        assert_eq!(validate(&g), vec![Diagnostic::DuplicateId { id: "p".into() }]);
    }

    #[test]
    fn information_edge_names_both_ends() {
        let g = AifGraph::unchecked(
            vec![AifNode::information("p", "p"), AifNode::information("q", "q")],
            vec![AifEdge::new("p", "q")],
        );
        let diags = validate(&g);
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].ids(), vec!["p", "q"]);
    }

    #[test]
    fn dangling_endpoint() {
        let g = AifGraph::unchecked(
            vec![AifNode::information("p", "p"), rule("ra")],
            vec![AifEdge::new("p", "ra"), AifEdge::new("ra", "ghost")],
        );
        let diags = validate(&g);
        assert!(diags.contains(&Diagnostic::DanglingEndpoint {
            from: "ra".into(),
            to: "ghost".into(),
            missing: "ghost".into()
        }));
    }

    #[test]
    fn inference_cycle_detected() {
        let g = AifGraph::unchecked(
            vec![
                AifNode::information("p", "p"),
                AifNode::information("q", "q"),
                rule("r1"),
                rule("r2"),
            ],
            vec![
                AifEdge::new("p", "r1"),
                AifEdge::new("r1", "q"),
                AifEdge::new("q", "r2"),
                AifEdge::new("r2", "p"),
            ],
        );
        assert_eq!(
            validate(&g),
            vec![Diagnostic::CyclicInference {
                ids: vec!["p".into(), "q".into(), "r1".into(), "r2".into()]
            }]
        );
    }

    #[test]
    fn conflict_cycles_are_allowed() {
        // p and q attack each other through conflict nodes
        let ca = |id| AifNode::scheme_node(id, NodeKind::ConflictApplication, None);
        let g = AifGraph::unchecked(
            vec![
                AifNode::information("p", "p"),
                AifNode::information("q", "q"),
                ca("c1"),
                ca("c2"),
            ],
            vec![
                AifEdge::new("p", "c1"),
                AifEdge::new("c1", "q"),
                AifEdge::new("q", "c2"),
                AifEdge::new("c2", "p"),
            ],
        );
        assert!(validate(&g).is_empty());
    }
}
