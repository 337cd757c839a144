use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::NlgError;
use crate::af::ArgId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Premises first, then the claim.
    Forward,
    /// Claim first, then what justifies it.
    Backward,
}

impl FromStr for Direction {
    type Err = NlgError;

    fn from_str(s: &str) -> Result<Self, NlgError> {
        match s.to_ascii_lowercase().as_str() {
            "forward" => Ok(Direction::Forward),
            "backward" => Ok(Direction::Backward),
            other => Err(NlgError::Planning(format!("unknown direction `{other}`"))),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RelationKind {
    Justify,
    Evidence,
    Antithesis,
    Conjunction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MessageRole {
    Claim,
    Premise,
    ImplicitPremiseNote,
    CriticalQuestionNote,
    /// Fixed-template sentences about acceptance status or extensions.
    StatusNote,
}

impl MessageRole {
    pub fn is_proposition(self) -> bool {
        matches!(self, MessageRole::Claim | MessageRole::Premise)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Message {
    pub atom: String,
    pub surface: String,
    pub role: MessageRole,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

impl Message {
    pub fn note(role: MessageRole, atom: impl Into<String>, surface: impl Into<String>) -> Self {
        Message {
            atom: atom.into(),
            surface: surface.into(),
            role,
            source: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub kind: RelationKind,
    pub nucleus: Box<PlanNode>,
    pub satellites: Vec<PlanNode>,
    pub direction: Direction,
    /// The argument this relation presents, when there is one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub argument: Option<ArgId>,
    /// Notes realized after the whole relation span.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<Message>,
    /// Planner bookkeeping, not realized.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub annotations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum PlanNode {
    Leaf(Message),
    Relation(Relation),
    /// Independent spans, one after another with no marker between them.
    Sequence { items: Vec<PlanNode> },
    /// A titled block, e.g. one extension.
    Section { title: String, body: Box<PlanNode> },
}

impl PlanNode {
    pub fn leaf(message: Message) -> Self {
        PlanNode::Leaf(message)
    }

    pub fn relation(
        kind: RelationKind,
        direction: Direction,
        nucleus: PlanNode,
        satellites: Vec<PlanNode>,
    ) -> Self {
        PlanNode::Relation(Relation {
            kind,
            nucleus: Box::new(nucleus),
            satellites,
            direction,
            argument: None,
            notes: Vec::new(),
            annotations: Vec::new(),
        })
    }

    /// Every message in document order for the given direction-free walk
    /// (nucleus, satellites, notes).
    pub fn messages(&self) -> Vec<&Message> {
        let mut out = Vec::new();
        self.walk(&mut |n| match n {
            PlanNode::Leaf(m) => out.push(m),
            PlanNode::Relation(r) => out.extend(r.notes.iter()),
            _ => {}
        });
        out
    }

    /// Argument ids attached to relations anywhere in the tree.
    pub fn arguments(&self) -> BTreeSet<ArgId> {
        let mut out = BTreeSet::new();
        self.walk(&mut |n| {
            if let PlanNode::Relation(Relation { argument: Some(a), .. }) = n {
                out.insert(a.clone());
            }
        });
        out
    }

    pub fn relations(&self) -> Vec<&Relation> {
        let mut out = Vec::new();
        self.walk(&mut |n| {
            if let PlanNode::Relation(r) = n {
                out.push(r);
            }
        });
        out
    }

    fn walk<'a>(&'a self, f: &mut dyn FnMut(&'a PlanNode)) {
        f(self);
        match self {
            PlanNode::Leaf(_) => {}
            PlanNode::Relation(r) => {
                r.nucleus.walk(f);
                for s in &r.satellites {
                    s.walk(f);
                }
            }
            PlanNode::Sequence { items } => {
                for i in items {
                    i.walk(f);
                }
            }
            PlanNode::Section { body, .. } => body.walk(f),
        }
    }

    /// Checks the structural invariants: Justify/Evidence have at least one
    /// satellite and Antithesis exactly one.
    pub fn well_formed(&self) -> bool {
        self.relations().iter().all(|r| match r.kind {
            RelationKind::Justify | RelationKind::Evidence => !r.satellites.is_empty(),
            RelationKind::Antithesis => r.satellites.len() == 1,
            RelationKind::Conjunction => true,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanDiagnostic {
    pub message: String,
}

/// A plan tree plus whatever the planner had to fall back on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Plan {
    pub root: PlanNode,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<PlanDiagnostic>,
}

impl Plan {
    pub fn new(root: PlanNode) -> Self {
        Plan {
            root,
            diagnostics: Vec::new(),
        }
    }

    pub(crate) fn diagnose(&mut self, message: impl Into<String>) {
        self.diagnostics.push(PlanDiagnostic {
            message: message.into(),
        });
    }
}
