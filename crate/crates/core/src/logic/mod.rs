//! Simple logic: literals, simple rules, knowledge bases and the arguments
//! built from them.

mod arguments;
mod attacks;
mod compile;
mod consequence;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::aif::{NodeId, SchemeRef};

pub use arguments::{
    classify, construct_simple_arguments, expand_argument, relevant, relevant_literals,
    ApproximateArgument, ArgumentClass,
};
pub use attacks::{attacks_between, Attack, AttackKind};
pub use compile::compile;
pub use consequence::{closure, derives, entails, is_consistent};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LogicError {
    #[error("compile error at {node}: {reason}")]
    CompileError { node: String, reason: String },
    #[error("expansion of the argument for {claim} derives a contradiction")]
    InconsistentExpansion { claim: Literal },
    #[error("argument {0} is not valid")]
    InvalidArgument(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("rule {0} concludes one of its own antecedents")]
    SelfSupportingRule(String),
}

/// A positive or negative literal over an atom such as `T3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Literal {
    pub atom: String,
    pub positive: bool,
}

impl Literal {
    pub fn pos(atom: impl Into<String>) -> Self {
        Literal {
            atom: atom.into(),
            positive: true,
        }
    }

    pub fn neg(atom: impl Into<String>) -> Self {
        Literal {
            atom: atom.into(),
            positive: false,
        }
    }

    pub fn complement(&self) -> Self {
        Literal {
            atom: self.atom.clone(),
            positive: !self.positive,
        }
    }

    pub fn is_complement_of(&self, other: &Literal) -> bool {
        self.atom == other.atom && self.positive != other.positive
    }
}

// atom first, positive before negative
impl Ord for Literal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.atom
            .cmp(&other.atom)
            .then_with(|| other.positive.cmp(&self.positive))
    }
}

impl PartialOrd for Literal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.positive {
            f.write_str("~")?;
        }
        f.write_str(&self.atom)
    }
}

impl FromStr for Literal {
    type Err = LogicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (positive, atom) = match s.strip_prefix('~').or_else(|| s.strip_prefix('¬')) {
            Some(rest) => (false, rest.trim()),
            None => (true, s),
        };
        if atom.is_empty() || atom.contains(|c: char| c.is_whitespace() || "~¬&>".contains(c)) {
            return Err(LogicError::Parse(s.to_string()));
        }
        Ok(Literal {
            atom: atom.to_string(),
            positive,
        })
    }
}

impl Serialize for Literal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Literal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `a1 & ... & ak -> b`. Identity is the antecedents and consequent; scheme
/// and source metadata ride along.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SimpleRule {
    pub antecedents: Vec<Literal>,
    pub consequent: Literal,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scheme: Option<SchemeRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_node: Option<NodeId>,
}

impl SimpleRule {
    pub fn new(antecedents: Vec<Literal>, consequent: Literal) -> Result<Self, LogicError> {
        let rule = SimpleRule {
            antecedents,
            consequent,
            scheme: None,
            source_node: None,
        };
        rule.check()?;
        Ok(rule)
    }

    pub(crate) fn check(&self) -> Result<(), LogicError> {
        if self.antecedents.is_empty() {
            return Err(LogicError::Parse(self.to_string()));
        }
        if self.antecedents.contains(&self.consequent) {
            return Err(LogicError::SelfSupportingRule(self.to_string()));
        }
        Ok(())
    }

    pub fn with_scheme(mut self, scheme: Option<SchemeRef>) -> Self {
        self.scheme = scheme;
        self
    }

    fn key(&self) -> (&[Literal], &Literal) {
        (&self.antecedents, &self.consequent)
    }
}

impl PartialEq for SimpleRule {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for SimpleRule {}

impl Ord for SimpleRule {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for SimpleRule {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::hash::Hash for SimpleRule {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key().hash(state)
    }
}

impl fmt::Display for SimpleRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.antecedents.iter().enumerate() {
            if i > 0 {
                f.write_str(" & ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, " -> {}", self.consequent)
    }
}

impl FromStr for SimpleRule {
    type Err = LogicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (body, head) = s
            .split_once("->")
            .ok_or_else(|| LogicError::Parse(s.to_string()))?;
        let antecedents = body
            .split('&')
            .map(str::parse)
            .collect::<Result<Vec<Literal>, _>>()?;
        SimpleRule::new(antecedents, head.parse()?)
    }
}

/// A member of a support set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Formula {
    Literal(Literal),
    Rule(SimpleRule),
}

impl Formula {
    /// Parses `"T3"`, `"~T3"` or `"T2 & T3 -> T1"`.
    pub fn parse(s: &str) -> Result<Self, LogicError> {
        if s.contains("->") {
            s.parse().map(Formula::Rule)
        } else {
            s.parse().map(Formula::Literal)
        }
    }

    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            Formula::Literal(l) => Some(l),
            Formula::Rule(_) => None,
        }
    }

    pub fn as_rule(&self) -> Option<&SimpleRule> {
        match self {
            Formula::Rule(r) => Some(r),
            Formula::Literal(_) => None,
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Literal(l) => write!(f, "{l}"),
            Formula::Rule(r) => write!(f, "{r}"),
        }
    }
}

pub type Support = BTreeSet<Formula>;

/// Parses a support written as formula strings, e.g. `["T4", "T4 -> T3"]`.
pub fn support_of<'a>(items: impl IntoIterator<Item = &'a str>) -> Result<Support, LogicError> {
    items.into_iter().map(Formula::parse).collect()
}

/// Facts, simple rules, and the text each atom stands for.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct KnowledgeBase {
    pub facts: BTreeSet<Literal>,
    pub rules: Vec<SimpleRule>,
    #[serde(default)]
    pub proposition_texts: BTreeMap<String, String>,
    #[serde(default)]
    pub sources: BTreeMap<String, String>,
}

impl KnowledgeBase {
    pub fn new(
        facts: impl IntoIterator<Item = Literal>,
        rules: impl IntoIterator<Item = SimpleRule>,
    ) -> Self {
        let mut kb = KnowledgeBase {
            facts: facts.into_iter().collect(),
            rules: rules.into_iter().collect(),
            ..Default::default()
        };
        kb.normalize();
        kb
    }

    /// Builds a knowledge base from formula strings; handy in tests.
    pub fn parse<'a>(formulas: impl IntoIterator<Item = &'a str>) -> Result<Self, LogicError> {
        let mut facts = Vec::new();
        let mut rules = Vec::new();
        for f in formulas {
            match Formula::parse(f)? {
                Formula::Literal(l) => facts.push(l),
                Formula::Rule(r) => rules.push(r),
            }
        }
        Ok(Self::new(facts, rules))
    }

    pub(crate) fn normalize(&mut self) {
        self.rules.sort();
        self.rules.dedup();
    }

    pub fn with_text(mut self, atom: impl Into<String>, text: impl Into<String>) -> Self {
        self.proposition_texts.insert(atom.into(), text.into());
        self
    }

    /// Verbatim text for a literal. Only positive literals have their own
    /// proposition text.
    pub fn surface(&self, literal: &Literal) -> Option<&str> {
        if literal.positive {
            self.proposition_texts.get(&literal.atom).map(String::as_str)
        } else {
            None
        }
    }

    pub fn source(&self, literal: &Literal) -> Option<&str> {
        self.sources.get(&literal.atom).map(String::as_str)
    }

    pub fn rules_for<'a>(&'a self, consequent: &'a Literal) -> impl Iterator<Item = &'a SimpleRule> {
        self.rules.iter().filter(move |r| &r.consequent == consequent)
    }

    /// The whole base as one formula set.
    pub fn formulas(&self) -> Support {
        self.facts
            .iter()
            .cloned()
            .map(Formula::Literal)
            .chain(self.rules.iter().cloned().map(Formula::Rule))
            .collect()
    }

    pub fn atoms(&self) -> BTreeSet<&str> {
        self.facts
            .iter()
            .map(|l| l.atom.as_str())
            .chain(self.rules.iter().flat_map(|r| {
                r.antecedents
                    .iter()
                    .chain(std::iter::once(&r.consequent))
                    .map(|l| l.atom.as_str())
            }))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_is_an_involution() {
        let l = Literal::pos("T3");
        assert_eq!(l.complement(), Literal::neg("T3"));
        assert_eq!(l.complement().complement(), l);
    }

    #[test]
    fn canonical_text_forms() {
        let r: SimpleRule = "T2 & T3 -> T1".parse().unwrap();
        assert_eq!(r.to_string(), "T2 & T3 -> T1");
        let r: SimpleRule = "T6&T7->~T3".parse().unwrap();
        assert_eq!(r.to_string(), "T6 & T7 -> ~T3");
        assert_eq!("¬T3".parse::<Literal>().unwrap(), Literal::neg("T3"));
    }

    #[test]
    fn self_supporting_rule_rejected() {
        assert!(matches!(
            "p & q -> p".parse::<SimpleRule>(),
            Err(LogicError::SelfSupportingRule(_))
        ));
        assert!("-> p".parse::<SimpleRule>().is_err());
    }

    #[test]
    fn literal_order_puts_positive_first() {
        let mut v = vec![Literal::neg("T3"), Literal::pos("T4"), Literal::pos("T3")];
        v.sort();
        assert_eq!(v, vec![Literal::pos("T3"), Literal::neg("T3"), Literal::pos("T4")]);
    }

    #[test]
    fn rule_identity_ignores_metadata() {
        let plain: SimpleRule = "a -> b".parse().unwrap();
        let mut tagged = plain.clone();
        tagged.source_node = Some(NodeId::new("RA9"));
        assert_eq!(plain, tagged);
    }

    #[test]
    fn kb_json_round_trip() {
        let kb = KnowledgeBase::parse(["p", "p -> q", "q & p -> ~r"])
            .unwrap()
            .with_text("p", "P holds");
        let json = serde_json::to_string(&kb).unwrap();
        let back: KnowledgeBase = serde_json::from_str(&json).unwrap();
        assert_eq!(back, kb);
    }
}
