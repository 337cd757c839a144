//! AIF-JSON reading and writing.
//!
//! ```json
//! { "nodes": [ { "nodeID": "T1", "text": "...", "type": "I" },
//!              { "nodeID": "RA1", "type": "RA",
//!                "scheme": { "name": "argument_from_example", "family": "inference" } } ],
//!   "edges": [ { "fromID": "T1", "toID": "RA1" } ] }
//! ```
//!
//! Fields beyond these (timestamps, participant ids, ...) are ignored.

use serde::{Deserialize, Serialize};

use super::{
    AifEdge, AifError, AifGraph, AifNode, CriticalQuestion, NodeId, NodeKind, SchemeFamily,
    SchemeRef, Slot,
};

#[derive(Deserialize, Serialize)]
struct RawGraph {
    nodes: Vec<RawNode>,
    edges: Vec<RawEdge>,
}

#[derive(Deserialize, Serialize, Clone)]
#[serde(untagged)]
enum RawId {
    Text(String),
    Number(i64),
}

impl RawId {
    fn into_string(self) -> String {
        match self {
            RawId::Text(s) => s,
            RawId::Number(n) => n.to_string(),
        }
    }
}

#[derive(Deserialize, Serialize)]
struct RawNode {
    #[serde(rename = "nodeID")]
    node_id: RawId,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    text: String,
    #[serde(rename = "type")]
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    scheme: Option<RawScheme>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    speaker: Option<String>,
}

#[derive(Deserialize, Serialize)]
#[serde(untagged)]
enum RawScheme {
    // AIFdb exports name the scheme as a bare string
    Name(String),
    Full {
        name: String,
        #[serde(default)]
        family: Option<SchemeFamily>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        slots: Vec<Slot>,
        #[serde(
            default,
            rename = "criticalQuestions",
            skip_serializing_if = "Vec::is_empty"
        )]
        critical_questions: Vec<CriticalQuestion>,
    },
}

#[derive(Deserialize, Serialize)]
struct RawEdge {
    #[serde(rename = "fromID")]
    from: RawId,
    #[serde(rename = "toID")]
    to: RawId,
}

/// Parses an AIF-JSON document into a validated graph.
pub fn parse_graph(input: &str) -> Result<AifGraph, AifError> {
    let raw: RawGraph = serde_json::from_str(input).map_err(|e| {
        use serde_json::error::Category;
        match e.classify() {
            Category::Data => AifError::SchemaViolation(e.to_string()),
            _ => AifError::MalformedInput(e.to_string()),
        }
    })?;

    let mut nodes = Vec::with_capacity(raw.nodes.len());
    for n in raw.nodes {
        let id = n.node_id.into_string();
        let kind = NodeKind::from_code(&n.kind).ok_or_else(|| {
            AifError::SchemaViolation(format!("node {id}: unknown type {:?}", n.kind))
        })?;
        let scheme = match n.scheme {
            None => None,
            Some(raw) => Some(scheme_from_raw(raw, kind).ok_or_else(|| {
                AifError::SchemaViolation(format!(
                    "node {id}: scheme given without family on an information node"
                ))
            })?),
        };
        nodes.push(AifNode {
            id: NodeId::new(id),
            kind,
            text: n.text,
            scheme,
            speaker: n.speaker,
        });
    }
    let edges = raw
        .edges
        .into_iter()
        .map(|e| AifEdge::new(e.from.into_string(), e.to.into_string()))
        .collect();
    AifGraph::new(nodes, edges)
}

fn scheme_from_raw(raw: RawScheme, kind: NodeKind) -> Option<SchemeRef> {
    match raw {
        RawScheme::Name(name) => Some(SchemeRef::new(kind.family()?, name)),
        RawScheme::Full {
            name,
            family,
            slots,
            critical_questions,
        } => Some(SchemeRef {
            family: family.or(kind.family())?,
            name,
            slots,
            critical_questions,
        }),
    }
}

/// Writes a graph back to AIF-JSON. Slot templates are written out
/// explicitly, so `parse_graph(&to_json(g))` reproduces `g`.
pub fn to_json(graph: &AifGraph) -> String {
    let raw = RawGraph {
        nodes: graph
            .nodes()
            .map(|n| RawNode {
                node_id: RawId::Text(n.id.to_string()),
                text: n.text.clone(),
                kind: n.kind.code().to_string(),
                scheme: n.scheme.as_ref().map(|s| RawScheme::Full {
                    name: s.name.clone(),
                    family: Some(s.family),
                    slots: s.slots.clone(),
                    critical_questions: s.critical_questions.clone(),
                }),
                speaker: n.speaker.clone(),
            })
            .collect(),
        edges: graph
            .edges()
            .iter()
            .map(|e| RawEdge {
                from: RawId::Text(e.from.to_string()),
                to: RawId::Text(e.to.to_string()),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&raw).expect("AIF graph serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aif::Diagnostic;

    const RUNNING_EXAMPLE: &str = include_str!("../../fixtures/running_example.json");

    #[test]
    fn running_example_counts() {
        let g = parse_graph(RUNNING_EXAMPLE).unwrap();
        assert_eq!(g.count(NodeKind::Information), 7);
        assert_eq!(g.count(NodeKind::RuleApplication), 3);
        assert_eq!(g.count(NodeKind::ConflictApplication), 1);
        assert_eq!(g.count(NodeKind::PreferenceApplication), 0);
    }

    #[test]
    fn empty_graph() {
        let g = parse_graph(r#"{"nodes": [], "edges": []}"#).unwrap();
        assert!(g.is_empty());
        assert!(g.edges().is_empty());
    }

    #[test]
    fn syntax_error_is_malformed() {
        assert!(matches!(
            parse_graph(r#"{"nodes": [}"#),
            Err(AifError::MalformedInput(_))
        ));
    }

    #[test]
    fn missing_field_and_unknown_kind_are_schema_violations() {
        assert!(matches!(
            parse_graph(r#"{"nodes": []}"#),
            Err(AifError::SchemaViolation(_))
        ));
        let err = parse_graph(r#"{"nodes": [{"nodeID": "n9", "type": "YA"}], "edges": []}"#)
            .unwrap_err();
        match err {
            AifError::SchemaViolation(msg) => assert!(msg.contains("n9")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn information_edge_rejected() {
        let input = r#"{"nodes": [{"nodeID": "a", "text": "A", "type": "I"},
                                  {"nodeID": "b", "text": "B", "type": "I"}],
                        "edges": [{"fromID": "a", "toID": "b"}]}"#;
        match parse_graph(input).unwrap_err() {
            AifError::InvariantViolation(d) => assert_eq!(
                d,
                vec![Diagnostic::InformationToInformation {
                    from: "a".into(),
                    to: "b".into()
                }]
            ),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn numeric_ids_and_bare_scheme_names() {
        let input = r#"{"nodes": [{"nodeID": 1, "text": "A", "type": "I", "timestamp": "x"},
                                  {"nodeID": 2, "text": "B", "type": "I"},
                                  {"nodeID": 3, "type": "RA", "scheme": "Argument From Example"}],
                        "edges": [{"fromID": 1, "toID": 3}, {"fromID": 3, "toID": 2}]}"#;
        let g = parse_graph(input).unwrap();
        let ra = g.node(&"3".into()).unwrap();
        assert_eq!(ra.scheme.as_ref().unwrap().family, SchemeFamily::Inference);
    }

    #[test]
    fn node_order_is_irrelevant() {
        let a = r#"{"nodes": [{"nodeID": "p", "text": "P", "type": "I"},
                              {"nodeID": "r", "type": "RA"},
                              {"nodeID": "q", "text": "Q", "type": "I"}],
                    "edges": [{"fromID": "p", "toID": "r"}, {"fromID": "r", "toID": "q"}]}"#;
        let b = r#"{"nodes": [{"nodeID": "q", "text": "Q", "type": "I"},
                              {"nodeID": "r", "type": "RA"},
                              {"nodeID": "p", "text": "P", "type": "I"}],
                    "edges": [{"fromID": "r", "toID": "q"}, {"fromID": "p", "toID": "r"}]}"#;
        assert_eq!(parse_graph(a).unwrap(), parse_graph(b).unwrap());
    }

    #[test]
    fn running_example_round_trips() {
        let g = parse_graph(RUNNING_EXAMPLE).unwrap();
        assert_eq!(parse_graph(&to_json(&g)).unwrap(), g);
    }
}
