//! Argument Interchange Format graphs.
//!
//! An [`AifGraph`] holds information nodes (propositions) and scheme nodes
//! (rule, conflict and preference applications) joined by untyped edges.
//! Graphs are built through [`parse_graph`] or [`AifGraph::new`], both of
//! which reject anything [`validate`] would flag.

mod fetch;
mod json;
pub mod schemes;
mod validate;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use fetch::{fetch_graph, fetch_graph_with_timeout, fetch_payload, DEFAULT_TIMEOUT};
pub use json::{parse_graph, to_json};
pub use validate::{validate, Diagnostic};

/// Identifier of a node, unique within a graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(String);

impl NodeId {
    pub fn new(id: impl Into<String>) -> Self {
        NodeId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for NodeId {
    fn from(s: &str) -> Self {
        NodeId(s.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum NodeKind {
    Information,
    RuleApplication,
    ConflictApplication,
    PreferenceApplication,
}

impl NodeKind {
    pub fn is_scheme(self) -> bool {
        !matches!(self, NodeKind::Information)
    }

    /// The scheme family a node of this kind may fulfil.
    pub fn family(self) -> Option<SchemeFamily> {
        match self {
            NodeKind::Information => None,
            NodeKind::RuleApplication => Some(SchemeFamily::Inference),
            NodeKind::ConflictApplication => Some(SchemeFamily::Conflict),
            NodeKind::PreferenceApplication => Some(SchemeFamily::Preference),
        }
    }

    /// The short code used by AIF-JSON (`I`, `RA`, `CA`, `PA`).
    pub fn code(self) -> &'static str {
        match self {
            NodeKind::Information => "I",
            NodeKind::RuleApplication => "RA",
            NodeKind::ConflictApplication => "CA",
            NodeKind::PreferenceApplication => "PA",
        }
    }

    pub fn from_code(code: &str) -> Option<Self> {
        match code {
            "I" => Some(NodeKind::Information),
            "RA" => Some(NodeKind::RuleApplication),
            "CA" => Some(NodeKind::ConflictApplication),
            "PA" => Some(NodeKind::PreferenceApplication),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SchemeFamily {
    Inference,
    Conflict,
    Preference,
}

/// A scheme role and whether the network supplies it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Slot {
    pub role: String,
    pub filled: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CriticalQuestion {
    pub text: String,
    #[serde(default)]
    pub answered: bool,
}

/// The scheme a scheme node fulfils.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SchemeRef {
    pub family: SchemeFamily,
    pub name: String,
    pub slots: Vec<Slot>,
    pub critical_questions: Vec<CriticalQuestion>,
}

impl SchemeRef {
    pub fn new(family: SchemeFamily, name: impl Into<String>) -> Self {
        SchemeRef {
            family,
            name: name.into(),
            slots: Vec::new(),
            critical_questions: Vec::new(),
        }
    }

    pub fn unfilled_slots(&self) -> impl Iterator<Item = &Slot> {
        self.slots.iter().filter(|s| !s.filled)
    }

    pub fn answered_questions(&self) -> impl Iterator<Item = &CriticalQuestion> {
        self.critical_questions.iter().filter(|q| q.answered)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AifNode {
    pub id: NodeId,
    pub kind: NodeKind,
    pub text: String,
    pub scheme: Option<SchemeRef>,
    /// Speaker or source of an information node, when the export carries one.
    pub speaker: Option<String>,
}

impl AifNode {
    pub fn information(id: impl Into<String>, text: impl Into<String>) -> Self {
        AifNode {
            id: NodeId::new(id),
            kind: NodeKind::Information,
            text: text.into(),
            scheme: None,
            speaker: None,
        }
    }

    pub fn scheme_node(id: impl Into<String>, kind: NodeKind, scheme: Option<SchemeRef>) -> Self {
        AifNode {
            id: NodeId::new(id),
            kind,
            text: String::new(),
            scheme,
            speaker: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AifEdge {
    pub from: NodeId,
    pub to: NodeId,
}

impl AifEdge {
    pub fn new(from: impl Into<String>, to: impl Into<String>) -> Self {
        AifEdge {
            from: NodeId::new(from),
            to: NodeId::new(to),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AifError {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("schema violation: {0}")]
    SchemaViolation(String),
    #[error("invariant violation: {}", .0.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("; "))]
    InvariantViolation(Vec<Diagnostic>),
    #[error("network error: {0}")]
    NetworkError(String),
    #[error("remote error: status {status}")]
    RemoteError { status: u16 },
}

/// An AIF graph. Nodes are kept sorted by id, so input order never matters.
///
/// Graphs from [`AifGraph::new`] and [`parse_graph`] satisfy every invariant;
/// [`AifGraph::unchecked`] keeps whatever it is given so [`validate`] can
/// report on it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AifGraph {
    nodes: Vec<AifNode>,
    edges: Vec<AifEdge>,
}

impl AifGraph {
    /// Builds a graph and checks every invariant. Catalogued schemes with no
    /// explicit slots get their slot template filled from the node's
    /// incoming premises.
    pub fn new(nodes: Vec<AifNode>, edges: Vec<AifEdge>) -> Result<Self, AifError> {
        let mut graph = Self::unchecked(nodes, edges);
        let diagnostics = validate(&graph);
        if !diagnostics.is_empty() {
            return Err(AifError::InvariantViolation(diagnostics));
        }
        graph.fill_slot_templates();
        Ok(graph)
    }

    pub fn unchecked(mut nodes: Vec<AifNode>, mut edges: Vec<AifEdge>) -> Self {
        nodes.sort_by(|a, b| a.id.cmp(&b.id));
        edges.sort();
        edges.dedup();
        AifGraph { nodes, edges }
    }

    fn fill_slot_templates(&mut self) {
        let premise_counts: BTreeMap<NodeId, usize> = self
            .nodes
            .iter()
            .filter(|n| n.kind.is_scheme())
            .map(|n| {
                let count = self
                    .incoming(&n.id)
                    .filter(|p| p.kind == NodeKind::Information)
                    .count();
                (n.id.clone(), count)
            })
            .collect();
        for node in self.nodes.iter_mut() {
            if let Some(scheme) = node.scheme.as_mut() {
                if scheme.slots.is_empty() {
                    let premises = premise_counts.get(&node.id).copied().unwrap_or(0);
                    scheme.slots = schemes::slot_template(&scheme.name, premises);
                }
            }
        }
    }

    pub fn node(&self, id: &NodeId) -> Option<&AifNode> {
        self.nodes
            .binary_search_by(|n| n.id.cmp(id))
            .ok()
            .map(|i| &self.nodes[i])
    }

    /// Nodes in id order.
    pub fn nodes(&self) -> impl Iterator<Item = &AifNode> {
        self.nodes.iter()
    }

    pub fn edges(&self) -> &[AifEdge] {
        &self.edges
    }

    pub fn nodes_of(&self, kind: NodeKind) -> impl Iterator<Item = &AifNode> {
        self.nodes.iter().filter(move |n| n.kind == kind)
    }

    pub fn incoming<'a>(&'a self, id: &'a NodeId) -> impl Iterator<Item = &'a AifNode> + 'a {
        self.edges
            .iter()
            .filter(move |e| &e.to == id)
            .filter_map(|e| self.node(&e.from))
    }

    pub fn outgoing<'a>(&'a self, id: &'a NodeId) -> impl Iterator<Item = &'a AifNode> + 'a {
        self.edges
            .iter()
            .filter(move |e| &e.from == id)
            .filter_map(|e| self.node(&e.to))
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn count(&self, kind: NodeKind) -> usize {
        self.nodes_of(kind).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_codes_round_trip() {
        for kind in [
            NodeKind::Information,
            NodeKind::RuleApplication,
            NodeKind::ConflictApplication,
            NodeKind::PreferenceApplication,
        ] {
            assert_eq!(NodeKind::from_code(kind.code()), Some(kind));
        }
        assert_eq!(NodeKind::from_code("MA"), None);
    }

    #[test]
    fn established_rule_with_one_premise_leaves_minor_premise_open() {
        let graph = AifGraph::new(
            vec![
                AifNode::information("p", "premise"),
                AifNode::information("c", "conclusion"),
                AifNode::scheme_node(
                    "ra",
                    NodeKind::RuleApplication,
                    Some(SchemeRef::new(
                        SchemeFamily::Inference,
                        "argument_by_established_rule",
                    )),
                ),
            ],
            vec![AifEdge::new("p", "ra"), AifEdge::new("ra", "c")],
        )
        .unwrap();
        let scheme = graph.node(&"ra".into()).unwrap().scheme.as_ref().unwrap();
        let open: Vec<_> = scheme.unfilled_slots().map(|s| s.role.as_str()).collect();
        assert_eq!(open, vec!["minor premise"]);
    }
}
