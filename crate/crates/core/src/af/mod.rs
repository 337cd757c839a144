//! Dung-style abstract argumentation.

mod acceptance;
mod dispute;
pub mod iccma;
mod issues;
mod labelling;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::logic::{
    attacks_between, construct_simple_arguments, ApproximateArgument, Attack, AttackKind,
    KnowledgeBase, Literal, SimpleRule,
};
use crate::parallel::Execution;

pub use acceptance::{acceptance, AcceptanceMode};
pub use dispute::{dispute_tree, DisputeNode, DisputeOutcome, DisputeTree, Side};
pub use issues::{issue_foci, issues, FocusKind, IssueClass, IssueFocus, IssuePartition, Polarity};
pub use labelling::{enumerate, is_complete_labelling, Label, Labelling, Semantics, SemanticsResult};

pub const DEFAULT_MAX_ARGS: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AfError {
    #[error("unknown argument {0}")]
    UnknownArgument(String),
    #[error("{size} arguments exceed the enumeration bound of {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },
    #[error("cannot parse framework: {0}")]
    Parse(String),
}

/// Argument identifier. Ordered by length, then text, so `A2 < A10`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArgId(String);

impl ArgId {
    pub fn new(id: impl Into<String>) -> Self {
        ArgId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Ord for ArgId {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ArgId {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ArgId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for ArgId {
    fn from(s: &str) -> Self {
        ArgId(s.to_string())
    }
}

/// Shorthand for building id sets in tests and callers.
pub fn id_set<'a>(ids: impl IntoIterator<Item = &'a str>) -> BTreeSet<ArgId> {
    ids.into_iter().map(ArgId::from).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationConfig {
    pub max_args: usize,
    pub execution: Execution,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            max_args: DEFAULT_MAX_ARGS,
            execution: Execution::default(),
        }
    }
}

/// Arguments and the attacks between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgumentationFramework {
    args: Vec<ArgId>,
    attacks: BTreeSet<(ArgId, ArgId)>,
    index: HashMap<ArgId, usize>,
    attackers: Vec<Vec<usize>>,
    attacked: Vec<Vec<usize>>,
}

impl ArgumentationFramework {
    pub fn new(
        args: impl IntoIterator<Item = ArgId>,
        attacks: impl IntoIterator<Item = (ArgId, ArgId)>,
    ) -> Result<Self, AfError> {
        let mut args: Vec<ArgId> = args.into_iter().collect();
        args.sort();
        args.dedup();
        let index: HashMap<ArgId, usize> =
            args.iter().enumerate().map(|(i, a)| (a.clone(), i)).collect();
        let attacks: BTreeSet<(ArgId, ArgId)> = attacks.into_iter().collect();
        let mut attackers = vec![Vec::new(); args.len()];
        let mut attacked = vec![Vec::new(); args.len()];
        for (from, to) in &attacks {
            let f = *index
                .get(from)
                .ok_or_else(|| AfError::UnknownArgument(from.to_string()))?;
            let t = *index
                .get(to)
                .ok_or_else(|| AfError::UnknownArgument(to.to_string()))?;
            attackers[t].push(f);
            attacked[f].push(t);
        }
        for v in attackers.iter_mut().chain(attacked.iter_mut()) {
            v.sort_unstable();
        }
        Ok(ArgumentationFramework {
            args,
            attacks,
            index,
            attackers,
            attacked,
        })
    }

    /// Builds from string ids; handy for literals in tests.
    pub fn from_strs<'a>(
        args: impl IntoIterator<Item = &'a str>,
        attacks: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self, AfError> {
        Self::new(
            args.into_iter().map(ArgId::from),
            attacks.into_iter().map(|(a, b)| (ArgId::from(a), ArgId::from(b))),
        )
    }

    pub fn arguments(&self) -> &[ArgId] {
        &self.args
    }

    pub fn attacks(&self) -> &BTreeSet<(ArgId, ArgId)> {
        &self.attacks
    }

    pub fn len(&self) -> usize {
        self.args.len()
    }

    pub fn is_empty(&self) -> bool {
        self.args.is_empty()
    }

    pub fn contains(&self, a: &ArgId) -> bool {
        self.index.contains_key(a)
    }

    pub fn attacks_pair(&self, a: &ArgId, b: &ArgId) -> bool {
        self.attacks.contains(&(a.clone(), b.clone()))
    }

    pub(crate) fn idx(&self, a: &ArgId) -> Result<usize, AfError> {
        self.index
            .get(a)
            .copied()
            .ok_or_else(|| AfError::UnknownArgument(a.to_string()))
    }

    pub(crate) fn attackers_idx(&self, i: usize) -> &[usize] {
        &self.attackers[i]
    }

    pub(crate) fn attacked_idx(&self, i: usize) -> &[usize] {
        &self.attacked[i]
    }

    pub fn attackers_of(&self, a: &ArgId) -> Result<Vec<&ArgId>, AfError> {
        let i = self.idx(a)?;
        Ok(self.attackers[i].iter().map(|&j| &self.args[j]).collect())
    }

    pub fn attacked_by(&self, a: &ArgId) -> Result<Vec<&ArgId>, AfError> {
        let i = self.idx(a)?;
        Ok(self.attacked[i].iter().map(|&j| &self.args[j]).collect())
    }

    fn mask(&self, set: &BTreeSet<ArgId>) -> Result<Vec<bool>, AfError> {
        let mut m = vec![false; self.args.len()];
        for a in set {
            m[self.idx(a)?] = true;
        }
        Ok(m)
    }

    /// No member of `set` attacks another member.
    pub fn is_conflict_free(&self, set: &BTreeSet<ArgId>) -> Result<bool, AfError> {
        let m = self.mask(set)?;
        Ok(conflict_free_mask(self, &m))
    }

    /// Every attacker of `a` is attacked by some member of `set`.
    pub fn is_acceptable(&self, a: &ArgId, set: &BTreeSet<ArgId>) -> Result<bool, AfError> {
        let i = self.idx(a)?;
        let m = self.mask(set)?;
        Ok(acceptable_mask(self, i, &m))
    }

    /// Conflict-free and every member is acceptable with respect to `set`.
    pub fn is_admissible(&self, set: &BTreeSet<ArgId>) -> Result<bool, AfError> {
        let m = self.mask(set)?;
        Ok(conflict_free_mask(self, &m)
            && (0..self.len()).all(|i| !m[i] || acceptable_mask(self, i, &m)))
    }

    /// The framework restricted to `keep`.
    pub fn restrict(&self, keep: &BTreeSet<ArgId>) -> ArgumentationFramework {
        Self::new(
            self.args.iter().filter(|a| keep.contains(a)).cloned(),
            self.attacks
                .iter()
                .filter(|(a, b)| keep.contains(a) && keep.contains(b))
                .cloned(),
        )
        .expect("restriction keeps endpoints")
    }
}

pub(crate) fn conflict_free_mask(af: &ArgumentationFramework, m: &[bool]) -> bool {
    (0..af.len()).all(|i| !m[i] || af.attacked_idx(i).iter().all(|&j| !m[j]))
}

pub(crate) fn acceptable_mask(af: &ArgumentationFramework, i: usize, m: &[bool]) -> bool {
    af.attackers_idx(i)
        .iter()
        .all(|&b| af.attackers_idx(b).iter().any(|&c| m[c]))
}

#[derive(Serialize, Deserialize)]
struct FrameworkRepr {
    arguments: Vec<ArgId>,
    attacks: Vec<(ArgId, ArgId)>,
}

impl Serialize for ArgumentationFramework {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FrameworkRepr {
            arguments: self.args.clone(),
            attacks: self.attacks.iter().cloned().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ArgumentationFramework {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = FrameworkRepr::deserialize(d)?;
        Self::new(repr.arguments, repr.attacks).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LabelledAttack {
    pub attacker: ArgId,
    pub attacked: ArgId,
    pub kind: AttackKind,
}

/// An abstract framework that remembers which deductive argument each id
/// stands for and what kind each attack is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeductiveFramework {
    pub framework: ArgumentationFramework,
    pub arguments: BTreeMap<ArgId, ApproximateArgument>,
    pub attacks: Vec<LabelledAttack>,
}

/// Assigns ids `A1..An` in canonical argument order (claim, then support)
/// and lifts the attacks onto them.
pub fn build_framework(
    args: &[ApproximateArgument],
    attacks: &[Attack],
) -> Result<DeductiveFramework, AfError> {
    let mut order: Vec<usize> = (0..args.len()).collect();
    order.sort_by(|&a, &b| args[a].cmp(&args[b]));
    let mut id_of = vec![ArgId::new(""); args.len()];
    for (rank, &i) in order.iter().enumerate() {
        id_of[i] = ArgId::new(format!("A{}", rank + 1));
    }
    let lookup = |i: usize| {
        id_of
            .get(i)
            .cloned()
            .ok_or_else(|| AfError::UnknownArgument(format!("#{i}")))
    };
    let mut labelled = Vec::with_capacity(attacks.len());
    for at in attacks {
        labelled.push(LabelledAttack {
            attacker: lookup(at.attacker)?,
            attacked: lookup(at.attacked)?,
            kind: at.kind,
        });
    }
    labelled.sort();
    labelled.dedup();
    let framework = ArgumentationFramework::new(
        id_of.iter().cloned(),
        labelled.iter().map(|a| (a.attacker.clone(), a.attacked.clone())),
    )?;
    let arguments = id_of.into_iter().zip(args.iter().cloned()).collect();
    Ok(DeductiveFramework {
        framework,
        arguments,
        attacks: labelled,
    })
}

impl DeductiveFramework {
    /// Simple arguments of `kb`, their attacks, and the framework over them.
    pub fn from_kb(kb: &KnowledgeBase, exec: Execution) -> Self {
        let args = construct_simple_arguments(kb, exec);
        let attacks = attacks_between(&args, exec);
        build_framework(&args, &attacks).expect("attack indices come from the same slice")
    }

    pub fn argument(&self, id: &ArgId) -> Result<&ApproximateArgument, AfError> {
        self.arguments
            .get(id)
            .ok_or_else(|| AfError::UnknownArgument(id.to_string()))
    }

    /// Ids of arguments concluding `claim`.
    pub fn with_claim(&self, claim: &Literal) -> Vec<&ArgId> {
        self.arguments
            .iter()
            .filter(|(_, a)| &a.claim == claim)
            .map(|(id, _)| id)
            .collect()
    }

    /// The argument applying `rule`, if any.
    pub fn applying(&self, rule: &SimpleRule) -> Option<&ArgId> {
        self.arguments
            .iter()
            .find(|(_, a)| a.rules().any(|r| r == rule))
            .map(|(id, _)| id)
    }

    pub fn attacks_from(&self, id: &ArgId) -> impl Iterator<Item = &LabelledAttack> {
        let id = id.clone();
        self.attacks.iter().filter(move |a| a.attacker == id)
    }

    /// Keeps only the arguments in `keep` and the attacks among them.
    pub fn restrict(&self, keep: &BTreeSet<ArgId>) -> DeductiveFramework {
        DeductiveFramework {
            framework: self.framework.restrict(keep),
            arguments: self
                .arguments
                .iter()
                .filter(|(id, _)| keep.contains(*id))
                .map(|(id, a)| (id.clone(), a.clone()))
                .collect(),
            attacks: self
                .attacks
                .iter()
                .filter(|a| keep.contains(&a.attacker) && keep.contains(&a.attacked))
                .cloned()
                .collect(),
        }
    }
}
