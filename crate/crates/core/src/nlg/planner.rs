use std::collections::BTreeSet;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Direction, Message, MessageRole, NlgError, Plan, PlanNode, Relation, RelationKind};
use crate::af::{
    dispute_tree, enumerate, issue_foci, AcceptanceMode, ArgId, DeductiveFramework, DisputeNode,
    DisputeOutcome, DisputeTree, EnumerationConfig, Semantics,
};
use crate::aif::schemes;
use crate::logic::{
    expand_argument, relevant, ApproximateArgument, AttackKind, Formula, KnowledgeBase, Literal,
    LogicError, SimpleRule, Support,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ImplicitPremiseMode {
    /// Point out that the premise is missing.
    Improve,
    /// Say that the premise is being assumed.
    Report,
}

impl FromStr for ImplicitPremiseMode {
    type Err = NlgError;

    fn from_str(s: &str) -> Result<Self, NlgError> {
        match s.to_ascii_lowercase().as_str() {
            "improve" => Ok(ImplicitPremiseMode::Improve),
            "report" => Ok(ImplicitPremiseMode::Report),
            other => Err(NlgError::Planning(format!("unknown implicit-premise mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineOrdering {
    /// Longest line first.
    #[default]
    Length,
    /// Least attacked line first.
    Attacks,
}

impl FromStr for LineOrdering {
    type Err = NlgError;

    fn from_str(s: &str) -> Result<Self, NlgError> {
        match s.to_ascii_lowercase().as_str() {
            "length" => Ok(LineOrdering::Length),
            "attacks" => Ok(LineOrdering::Attacks),
            other => Err(NlgError::Planning(format!("unknown line ordering `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NetworkStrategy {
    /// Every argument, then every attack.
    Enumerate,
    /// Merge dependency chains and contrast conflicting lines.
    #[default]
    LinesOfReasoning,
}

impl FromStr for NetworkStrategy {
    type Err = NlgError;

    fn from_str(s: &str) -> Result<Self, NlgError> {
        match s.to_ascii_lowercase().as_str() {
            "enumerate" => Ok(NetworkStrategy::Enumerate),
            "lines" | "lines-of-reasoning" | "lines_of_reasoning" => {
                Ok(NetworkStrategy::LinesOfReasoning)
            }
            other => Err(NlgError::Planning(format!("unknown network strategy `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlannerConfig {
    pub direction: Direction,
    pub expand: bool,
    pub ordering: LineOrdering,
    pub strategy: NetworkStrategy,
    /// `None` leaves implicit premises unmentioned.
    pub implicit_premise: Option<ImplicitPremiseMode>,
    pub enumeration: EnumerationConfig,
}

impl Default for PlannerConfig {
    fn default() -> Self {
        PlannerConfig {
            direction: Direction::Backward,
            expand: false,
            ordering: LineOrdering::default(),
            strategy: NetworkStrategy::default(),
            implicit_premise: None,
            enumeration: EnumerationConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "goal", rename_all = "kebab-case")]
pub enum CommunicativeGoal {
    PresentArgument {
        target: ArgId,
    },
    PresentNetwork,
    ExplainAcceptability {
        target: ArgId,
        mode: AcceptanceMode,
        semantics: Semantics,
    },
    ExplainExtensions {
        semantics: Semantics,
    },
}

/// Non-attack links `x -> y` where the claim of `x` is a premise of `y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DependencyGraph {
    pub arguments: Vec<ArgId>,
    pub edges: BTreeSet<(ArgId, ArgId)>,
    pub attacks: BTreeSet<(ArgId, ArgId)>,
}

impl DependencyGraph {
    fn successors<'a>(&'a self, x: &'a ArgId) -> impl Iterator<Item = &'a ArgId> + 'a {
        self.edges.iter().filter(move |(a, _)| a == x).map(|(_, b)| b)
    }
}

pub fn annotate_dependencies(df: &DeductiveFramework) -> DependencyGraph {
    let mut edges = BTreeSet::new();
    for (x, ax) in &df.arguments {
        for (y, ay) in &df.arguments {
            if x == y || df.framework.attacks_pair(x, y) || df.framework.attacks_pair(y, x) {
                continue;
            }
            if ay.premises().any(|p| p == &ax.claim) {
                edges.insert((x.clone(), y.clone()));
            }
        }
    }
    DependencyGraph {
        arguments: df.framework.arguments().to_vec(),
        edges,
        attacks: df.framework.attacks().clone(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineOfReasoning {
    pub arguments: Vec<ArgId>,
    pub merged: ApproximateArgument,
}

fn longest_from(
    dep: &DependencyGraph,
    remaining: &BTreeSet<ArgId>,
    path: &mut Vec<ArgId>,
    best: &mut Vec<ArgId>,
) {
    if path.len() > best.len() || (path.len() == best.len() && *path < *best) {
        *best = path.clone();
    }
    let last = path.last().expect("non-empty path").clone();
    for next in dep.successors(&last) {
        if remaining.contains(next) && !path.contains(next) {
            path.push(next.clone());
            longest_from(dep, remaining, path, best);
            path.pop();
        }
    }
}

/// Splits the arguments into dependency chains: repeatedly takes the
/// longest remaining path (ties to the lexicographically smallest), then
/// orders the lines by `ordering`, ties broken lexicographically.
pub fn extract_lines(
    df: &DeductiveFramework,
    dep: &DependencyGraph,
    ordering: LineOrdering,
) -> Vec<LineOfReasoning> {
    let mut remaining: BTreeSet<ArgId> = dep.arguments.iter().cloned().collect();
    let mut lines = Vec::new();
    while let Some(first) = remaining.iter().next().cloned() {
        let mut best = vec![first];
        for start in &remaining {
            let mut path = vec![start.clone()];
            longest_from(dep, &remaining, &mut path, &mut best);
        }
        for a in &best {
            remaining.remove(a);
        }
        lines.push(best);
    }

    let received = |line: &Vec<ArgId>| {
        dep.attacks
            .iter()
            .filter(|(x, y)| line.contains(y) && !line.contains(x))
            .count()
    };
    match ordering {
        LineOrdering::Length => {
            lines.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)))
        }
        LineOrdering::Attacks => {
            lines.sort_by(|a, b| received(a).cmp(&received(b)).then_with(|| a.cmp(b)))
        }
    }

    lines
        .into_iter()
        .map(|ids| {
            let support: Support = ids
                .iter()
                .filter_map(|id| df.arguments.get(id))
                .flat_map(|a| a.support.iter().cloned())
                .collect();
            let claim = df.arguments[ids.last().expect("non-empty line")].claim.clone();
            LineOfReasoning {
                arguments: ids,
                merged: ApproximateArgument::new(support, claim),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcceptabilityPlan {
    pub target: ArgId,
    pub claim: Literal,
    pub mode: AcceptanceMode,
    pub semantics: Semantics,
    pub accepted: bool,
    pub plan: Plan,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tree: Option<DisputeTree>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub blocking: Vec<ArgId>,
    /// Arguments the plan talks about.
    pub mentioned: BTreeSet<ArgId>,
}

fn id_list(ids: impl IntoIterator<Item = impl std::fmt::Display>) -> String {
    ids.into_iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", ")
}

fn status(text: impl Into<String>) -> PlanNode {
    PlanNode::leaf(Message::note(MessageRole::StatusNote, "", text))
}

fn antithesis(nucleus: PlanNode, satellite: PlanNode) -> Relation {
    let PlanNode::Relation(r) =
        PlanNode::relation(RelationKind::Antithesis, Direction::Backward, nucleus, vec![satellite])
    else {
        unreachable!()
    };
    r
}

fn conjunction(mut parts: Vec<PlanNode>, direction: Direction) -> PlanNode {
    let first = parts.remove(0);
    PlanNode::relation(RelationKind::Conjunction, direction, first, parts)
}

pub struct Planner<'a> {
    kb: &'a KnowledgeBase,
    df: &'a DeductiveFramework,
    config: PlannerConfig,
}

impl<'a> Planner<'a> {
    pub fn new(kb: &'a KnowledgeBase, df: &'a DeductiveFramework, config: PlannerConfig) -> Self {
        Planner { kb, df, config }
    }

    pub fn config(&self) -> &PlannerConfig {
        &self.config
    }

    fn message(&self, lit: &Literal, role: MessageRole) -> Message {
        Message {
            atom: lit.to_string(),
            surface: self
                .kb
                .surface(lit)
                .map(str::to_string)
                .unwrap_or_else(|| lit.to_string()),
            role,
            source: self.kb.source(lit).map(str::to_string),
        }
    }

    fn implicit_notes(&self, rule: &SimpleRule) -> Vec<Message> {
        let (Some(mode), Some(scheme)) = (self.config.implicit_premise, &rule.scheme) else {
            return Vec::new();
        };
        let atom = rule
            .source_node
            .as_ref()
            .map(|n| n.to_string())
            .unwrap_or_else(|| rule.to_string());
        scheme
            .unfilled_slots()
            .map(|slot| {
                let subject = schemes::implicit_subject(&scheme.name, &slot.role);
                let text = match mode {
                    ImplicitPremiseMode::Improve => {
                        format!("although we have no evidence that {subject}.")
                    }
                    ImplicitPremiseMode::Report => format!("and we assume that {subject}."),
                };
                Message::note(MessageRole::ImplicitPremiseNote, atom.clone(), text)
            })
            .collect()
    }

    /// The rhetorical tree for `claim` as derived inside `support`. A claim
    /// with no text of its own (a negated atom) is left out and its
    /// premises stand in for it.
    fn support_node(
        &self,
        claim: &Literal,
        support: &Support,
        direction: Direction,
        visiting: &mut BTreeSet<Literal>,
    ) -> PlanNode {
        let Some(rule) = support
            .iter()
            .filter_map(Formula::as_rule)
            .find(|r| &r.consequent == claim)
        else {
            return PlanNode::leaf(self.message(claim, MessageRole::Premise));
        };
        visiting.insert(claim.clone());
        let mut parts: Vec<PlanNode> = rule
            .antecedents
            .iter()
            .map(|p| {
                let derived_here = support
                    .iter()
                    .filter_map(Formula::as_rule)
                    .any(|r| &r.consequent == p);
                if derived_here && !visiting.contains(p) {
                    self.support_node(p, support, direction, visiting)
                } else {
                    PlanNode::leaf(self.message(p, MessageRole::Premise))
                }
            })
            .collect();
        visiting.remove(claim);

        let argument = self.df.applying(rule).cloned();
        let notes = self.implicit_notes(rule);
        let mut node = match self.kb.surface(claim) {
            Some(_) => {
                let satellite = if parts.len() == 1 {
                    parts.remove(0)
                } else {
                    conjunction(parts, direction)
                };
                let from_example = rule
                    .scheme
                    .as_ref()
                    .is_some_and(|s| schemes::is_argument_from_example(&s.name));
                let kind = if from_example {
                    RelationKind::Evidence
                } else {
                    RelationKind::Justify
                };
                PlanNode::relation(
                    kind,
                    direction,
                    PlanNode::leaf(self.message(claim, MessageRole::Claim)),
                    vec![satellite],
                )
            }
            None => conjunction(parts, direction),
        };
        if let PlanNode::Relation(r) = &mut node {
            r.argument = argument;
            r.notes = notes;
        }
        node
    }

    fn argument_node(&self, id: &ArgId, direction: Direction) -> Result<PlanNode, NlgError> {
        let arg = self.df.argument(id)?;
        let mut node = self.support_node(&arg.claim, &arg.support, direction, &mut BTreeSet::new());
        if let PlanNode::Relation(r) = &mut node {
            r.argument.get_or_insert_with(|| id.clone());
        }
        Ok(node)
    }

    fn describe(&self, id: &ArgId) -> String {
        match self.df.arguments.get(id) {
            Some(a) => format!("{id} ({})", a.claim),
            None => id.to_string(),
        }
    }

    /// Presents one argument, optionally expanded with whatever else in the
    /// base bears on its claim.
    pub fn plan_argument(
        &self,
        target: &ApproximateArgument,
        direction: Direction,
        expand: bool,
    ) -> Result<Plan, NlgError> {
        if !target.is_valid() {
            return Err(LogicError::InvalidArgument(target.to_string()).into());
        }
        let mut chosen = target.clone();
        let mut diagnostics = Vec::new();
        if expand {
            match expand_argument(self.kb, target) {
                Ok(e) if relevant(self.kb, &e, target) => chosen = e,
                Ok(_) => diagnostics.push("expansion adds nothing relevant".to_string()),
                Err(e) => diagnostics.push(format!("{e}; presenting the argument unexpanded")),
            }
        }
        let root = self.support_node(&chosen.claim, &chosen.support, direction, &mut BTreeSet::new());
        let mut plan = Plan::new(root);
        for d in diagnostics {
            plan.diagnose(d);
        }
        Ok(plan)
    }

    pub fn plan_argument_id(&self, id: &ArgId) -> Result<Plan, NlgError> {
        let arg = self.df.argument(id)?.clone();
        self.plan_argument(&arg, self.config.direction, self.config.expand)
    }

    fn critical_question_notes(&self, attacked: &ArgId) -> Vec<Message> {
        let Some(arg) = self.df.arguments.get(attacked) else {
            return Vec::new();
        };
        arg.rules()
            .filter_map(|r| r.scheme.as_ref())
            .flat_map(|s| s.answered_questions())
            .map(|q| {
                Message::note(
                    MessageRole::CriticalQuestionNote,
                    attacked.to_string(),
                    format!(
                        "This counterargument answers the critical question that states “{}”.",
                        q.text
                    ),
                )
            })
            .collect()
    }

    fn attack_annotation(&self, attacker: &ArgId, attacked: &ArgId) -> Vec<String> {
        self.df
            .attacks
            .iter()
            .filter(|a| &a.attacker == attacker && &a.attacked == attacked)
            .map(|a| {
                let verb = match a.kind {
                    AttackKind::Rebut => "rebuts",
                    AttackKind::Undercut => "undercuts",
                };
                format!("{attacker} {verb} {attacked}")
            })
            .collect()
    }

    fn lines_plan(&self, direction: Direction) -> Result<PlanNode, NlgError> {
        let dep = annotate_dependencies(self.df);
        let lines = extract_lines(self.df, &dep, self.config.ordering);
        let mut groups: Vec<(BTreeSet<ArgId>, PlanNode)> = Vec::new();
        for line in &lines {
            let mut node = self.support_node(
                &line.merged.claim,
                &line.merged.support,
                direction,
                &mut BTreeSet::new(),
            );
            if let PlanNode::Relation(r) = &mut node {
                r.argument.get_or_insert_with(|| line.arguments.last().unwrap().clone());
            }
            let members: BTreeSet<ArgId> = line.arguments.iter().cloned().collect();
            let conflicts = |group: &BTreeSet<ArgId>| -> Vec<(ArgId, ArgId)> {
                dep.attacks
                    .iter()
                    .filter(|(x, y)| {
                        (members.contains(x) && group.contains(y))
                            || (group.contains(x) && members.contains(y))
                    })
                    .cloned()
                    .collect()
            };
            match groups.iter_mut().find(|(g, _)| !conflicts(g).is_empty()) {
                Some((group, plan)) => {
                    let found = conflicts(group);
                    let previous = std::mem::replace(plan, PlanNode::Sequence { items: vec![] });
                    let mut rel = antithesis(previous, node);
                    for (x, y) in &found {
                        rel.annotations.extend(self.attack_annotation(x, y));
                        if members.contains(x) {
                            for n in self.critical_question_notes(y) {
                                if !rel.notes.contains(&n) {
                                    rel.notes.push(n);
                                }
                            }
                        }
                    }
                    // where in the earlier line the attack lands
                    for (x, y) in found.iter().filter(|(x, _)| members.contains(x)) {
                        rel.annotations.push(format!("{x} attacks {y} inside the earlier line"));
                    }
                    *plan = PlanNode::Relation(rel);
                    group.extend(members);
                }
                None => groups.push((members, node)),
            }
        }
        Ok(match groups.len() {
            1 => groups.pop().unwrap().1,
            _ => PlanNode::Sequence {
                items: groups.into_iter().map(|(_, p)| p).collect(),
            },
        })
    }

    fn claim_node(&self, id: &ArgId) -> Result<PlanNode, NlgError> {
        let arg = self.df.argument(id)?;
        if self.kb.surface(&arg.claim).is_some() {
            return Ok(PlanNode::leaf(self.message(&arg.claim, MessageRole::Claim)));
        }
        let premises: Vec<PlanNode> = arg
            .premises()
            .map(|p| PlanNode::leaf(self.message(p, MessageRole::Premise)))
            .collect();
        if premises.is_empty() {
            return Ok(PlanNode::leaf(self.message(&arg.claim, MessageRole::Claim)));
        }
        let mut node = conjunction(premises, self.config.direction);
        if let PlanNode::Relation(r) = &mut node {
            r.argument = Some(id.clone());
        }
        Ok(node)
    }

    fn enumerate_plan(&self, direction: Direction) -> Result<PlanNode, NlgError> {
        let mut items = Vec::new();
        for id in self.df.framework.arguments() {
            items.push(self.argument_node(id, direction)?);
        }
        for attack in &self.df.attacks {
            let mut rel = antithesis(
                self.claim_node(&attack.attacked)?,
                self.claim_node(&attack.attacker)?,
            );
            rel.annotations = self
                .attack_annotation(&attack.attacker, &attack.attacked)
                .into_iter()
                .filter(|s| {
                    s.contains(match attack.kind {
                        AttackKind::Rebut => "rebuts",
                        AttackKind::Undercut => "undercuts",
                    })
                })
                .collect();
            rel.notes = self.critical_question_notes(&attack.attacked);
            items.push(PlanNode::Relation(rel));
        }
        Ok(PlanNode::Sequence { items })
    }

    pub fn plan_network(&self, strategy: NetworkStrategy, direction: Direction) -> Result<Plan, NlgError> {
        if self.df.framework.is_empty() {
            let mut plan = Plan::new(PlanNode::Sequence { items: vec![] });
            plan.diagnose("the network has no arguments");
            return Ok(plan);
        }
        let root = match strategy {
            NetworkStrategy::Enumerate => self.enumerate_plan(direction)?,
            NetworkStrategy::LinesOfReasoning => self.lines_plan(direction)?,
        };
        Ok(Plan::new(root))
    }

    fn tree_node(&self, pro: &DisputeNode, direction: Direction) -> Result<PlanNode, NlgError> {
        let mut acc = self.argument_node(&pro.argument, direction)?;
        for con in &pro.children {
            let mut con_node = self.argument_node(&con.argument, direction)?;
            if let Some(reply) = con.children.first() {
                con_node = PlanNode::Relation(antithesis(con_node, self.tree_node(reply, direction)?));
            }
            acc = PlanNode::Relation(antithesis(acc, con_node));
        }
        Ok(acc)
    }

    pub fn plan_acceptability(
        &self,
        target: &ArgId,
        mode: AcceptanceMode,
        semantics: Semantics,
    ) -> Result<AcceptabilityPlan, NlgError> {
        let arg = self.df.argument(target)?;
        let direction = self.config.direction;
        let af = &self.df.framework;
        let cfg = &self.config.enumeration;
        let mut tree = None;
        let mut blocking = Vec::new();
        let (accepted, root) = match mode {
            AcceptanceMode::Credulous => match dispute_tree(af, target, semantics, cfg)? {
                DisputeOutcome::Accepted(t) => {
                    let root = self.tree_node(&t.root, direction)?;
                    tree = Some(t);
                    (true, root)
                }
                DisputeOutcome::NotAccepted { blocking: b, .. } => {
                    let mut parts = Vec::new();
                    for id in &b {
                        parts.push(self.argument_node(id, direction)?);
                    }
                    blocking = b;
                    let base = self.argument_node(target, direction)?;
                    let root = if parts.is_empty() {
                        PlanNode::Sequence {
                            items: vec![base, status(format!(
                                "No {semantics} extension contains {}.",
                                self.describe(target)
                            ))],
                        }
                    } else {
                        let satellite = if parts.len() == 1 {
                            parts.remove(0)
                        } else {
                            conjunction(parts, direction)
                        };
                        PlanNode::Relation(antithesis(base, satellite))
                    };
                    (false, root)
                }
            },
            AcceptanceMode::Skeptical => {
                let extensions = enumerate(af, semantics, cfg)?.extensions;
                let base = self.argument_node(target, direction)?;
                let missing: Vec<&BTreeSet<ArgId>> =
                    extensions.iter().filter(|e| !e.contains(target)).collect();
                if missing.is_empty() {
                    let note = if extensions.is_empty() {
                        format!(
                            "There are no {semantics} extensions, so {} is accepted vacuously.",
                            self.describe(target)
                        )
                    } else {
                        format!("{} belongs to every {semantics} extension.", self.describe(target))
                    };
                    (true, PlanNode::Sequence { items: vec![base, status(note)] })
                } else {
                    let mut notes: Vec<PlanNode> = missing
                        .iter()
                        .map(|e| {
                            status(format!(
                                "{} is not in the {semantics} extension {{{}}}.",
                                self.describe(target),
                                id_list(e.iter())
                            ))
                        })
                        .collect();
                    let satellite = if notes.len() == 1 {
                        notes.remove(0)
                    } else {
                        PlanNode::Sequence { items: notes }
                    };
                    (false, PlanNode::Relation(antithesis(base, satellite)))
                }
            }
        };
        let plan = Plan::new(root);
        Ok(AcceptabilityPlan {
            target: target.clone(),
            claim: arg.claim.clone(),
            mode,
            semantics,
            accepted,
            mentioned: plan.root.arguments(),
            plan,
            tree,
            blocking,
        })
    }

    /// One section per extension, contrasted in turn, opened by a sentence
    /// naming the issue they turn on when there is one.
    pub fn plan_extensions(&self, semantics: Semantics) -> Result<Plan, NlgError> {
        let cfg = &self.config.enumeration;
        let extensions = enumerate(&self.df.framework, semantics, cfg)?.extensions;
        if extensions.is_empty() {
            return Ok(Plan::new(status(format!("There are no {semantics} extensions."))));
        }
        let focus = issue_foci(&self.df.framework, semantics, cfg)?;

        let mut sections = Vec::new();
        for (i, ext) in extensions.iter().enumerate() {
            let restricted = self.df.restrict(ext);
            let sub = Planner::new(self.kb, &restricted, self.config.clone());
            let body = if ext.is_empty() {
                status("This extension is empty.")
            } else {
                sub.lines_plan(self.config.direction)?
            };
            sections.push(PlanNode::Section {
                title: format!("{} extension {}: {{{}}}", capitalized(semantics), i + 1, id_list(ext.iter())),
                body: Box::new(body),
            });
        }
        let mut iter = sections.into_iter();
        let mut joined = iter.next().expect("at least one extension");
        for s in iter {
            joined = PlanNode::Relation(antithesis(joined, s));
        }

        let mut plan = match &focus {
            Some(f) => {
                let issue = id_list(f.members.iter().map(|id| self.describe(id)));
                let text = if extensions.len() == 1 {
                    format!("The {semantics} extension turns on the issue {{{issue}}}.")
                } else {
                    format!(
                        "The {} {semantics} extensions turn on the issue {{{issue}}}.",
                        extensions.len()
                    )
                };
                Plan::new(PlanNode::Sequence {
                    items: vec![status(text), joined],
                })
            }
            None => Plan::new(joined),
        };
        if focus.is_none() {
            plan.diagnose(format!(
                "no issue matches the {} {semantics} extensions; presenting them without a focus",
                extensions.len()
            ));
        }
        Ok(plan)
    }

    pub fn plan_goal(&self, goal: &CommunicativeGoal) -> Result<Plan, NlgError> {
        match goal {
            CommunicativeGoal::PresentArgument { target } => self.plan_argument_id(target),
            CommunicativeGoal::PresentNetwork => {
                self.plan_network(self.config.strategy, self.config.direction)
            }
            CommunicativeGoal::ExplainAcceptability {
                target,
                mode,
                semantics,
            } => Ok(self.plan_acceptability(target, *mode, *semantics)?.plan),
            CommunicativeGoal::ExplainExtensions { semantics } => self.plan_extensions(*semantics),
        }
    }
}

fn capitalized(s: Semantics) -> String {
    let s = s.to_string();
    let mut c = s.chars();
    match c.next() {
        Some(f) => f.to_uppercase().chain(c).collect(),
        None => s,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::id_set;
    use crate::aif::parse_graph;
    use crate::logic::compile;
    use crate::parallel::Execution;

    fn running() -> (KnowledgeBase, DeductiveFramework) {
        let graph = parse_graph(include_str!("../../fixtures/running_example.json")).unwrap();
        let kb = compile(&graph).unwrap();
        let df = DeductiveFramework::from_kb(&kb, Execution::Sequential);
        (kb, df)
    }

    // c = A1, b = A2, d = A3, a = A4
    fn ids(v: &[&str]) -> Vec<ArgId> {
        v.iter().map(|s| ArgId::from(*s)).collect()
    }

    fn surfaces(node: &PlanNode) -> Vec<String> {
        node.messages()
            .into_iter()
            .filter(|m| m.role.is_proposition())
            .map(|m| m.atom.clone())
            .collect()
    }

    #[test]
    fn dependencies_follow_the_chain() {
        let (_, df) = running();
        let dep = annotate_dependencies(&df);
        assert_eq!(
            dep.edges,
            [("A4", "A2"), ("A2", "A1")]
                .into_iter()
                .map(|(a, b)| (ArgId::from(a), ArgId::from(b)))
                .collect()
        );
        assert!(dep.edges.is_disjoint(&dep.attacks));
    }

    #[test]
    fn lines_and_orderings() {
        let (kb, df) = running();
        let dep = annotate_dependencies(&df);
        let by_length = extract_lines(&df, &dep, LineOrdering::Length);
        let got: Vec<Vec<ArgId>> = by_length.iter().map(|l| l.arguments.clone()).collect();
        assert_eq!(got, vec![ids(&["A4", "A2", "A1"]), ids(&["A3"])]);
        let c1 = crate::logic::expand_argument(&kb, &df.arguments[&ArgId::from("A1")]).unwrap();
        assert_eq!(by_length[0].merged, c1);

        let by_attacks = extract_lines(&df, &dep, LineOrdering::Attacks);
        let got: Vec<Vec<ArgId>> = by_attacks.iter().map(|l| l.arguments.clone()).collect();
        assert_eq!(got, vec![ids(&["A3"]), ids(&["A4", "A2", "A1"])]);
    }

    #[test]
    fn backward_plan_of_b() {
        let (kb, df) = running();
        let planner = Planner::new(&kb, &df, PlannerConfig::default());
        let b = df.arguments[&ArgId::from("A2")].clone();
        let plan = planner.plan_argument(&b, Direction::Backward, false).unwrap();
        let PlanNode::Relation(r) = &plan.root else { panic!() };
        assert_eq!(r.kind, RelationKind::Justify);
        assert_eq!(r.direction, Direction::Backward);
        assert_eq!(surfaces(&plan.root), ["T3", "T4"]);
        assert!(r.notes.is_empty());

        let expanded = planner.plan_argument(&b, Direction::Backward, true).unwrap();
        let PlanNode::Relation(r) = &expanded.root else { panic!() };
        let PlanNode::Relation(inner) = &r.satellites[0] else { panic!() };
        assert_eq!(inner.kind, RelationKind::Evidence);
        assert_eq!(surfaces(&expanded.root), ["T3", "T4", "T5"]);
    }

    #[test]
    fn implicit_premise_note_when_configured() {
        let (kb, df) = running();
        let config = PlannerConfig {
            implicit_premise: Some(ImplicitPremiseMode::Improve),
            ..Default::default()
        };
        let planner = Planner::new(&kb, &df, config);
        let plan = planner.plan_argument_id(&"A2".into()).unwrap();
        let notes: Vec<&str> = plan
            .root
            .messages()
            .into_iter()
            .filter(|m| m.role == MessageRole::ImplicitPremiseNote)
            .map(|m| m.surface.as_str())
            .collect();
        assert_eq!(notes, ["although we have no evidence that this is the established rule."]);
    }

    #[test]
    fn network_enumerate_counts() {
        let (kb, df) = running();
        let planner = Planner::new(&kb, &df, PlannerConfig::default());
        let plan = planner
            .plan_network(NetworkStrategy::Enumerate, Direction::Backward)
            .unwrap();
        let PlanNode::Sequence { items } = &plan.root else { panic!() };
        assert_eq!(items.len(), 7);
        let antitheses = items
            .iter()
            .filter(|i| matches!(i, PlanNode::Relation(r) if r.kind == RelationKind::Antithesis))
            .count();
        assert_eq!(antitheses, 3);
    }

    #[test]
    fn network_lines_contrast_the_attacker() {
        let (kb, df) = running();
        let planner = Planner::new(&kb, &df, PlannerConfig::default());
        let plan = planner
            .plan_network(NetworkStrategy::LinesOfReasoning, Direction::Backward)
            .unwrap();
        assert!(plan.root.well_formed());
        let PlanNode::Relation(r) = &plan.root else { panic!() };
        assert_eq!(r.kind, RelationKind::Antithesis);
        assert_eq!(surfaces(&plan.root), ["T1", "T2", "T3", "T4", "T5", "T6", "T7"]);
    }

    #[test]
    fn acceptability_of_c() {
        let (kb, df) = running();
        let planner = Planner::new(&kb, &df, PlannerConfig::default());
        let p = planner
            .plan_acceptability(&"A1".into(), AcceptanceMode::Credulous, Semantics::Preferred)
            .unwrap();
        assert!(p.accepted);
        assert_eq!(p.mentioned, id_set(["A1", "A2", "A3"]));

        let s = planner
            .plan_acceptability(&"A1".into(), AcceptanceMode::Skeptical, Semantics::Preferred)
            .unwrap();
        assert!(!s.accepted);
        let notes: Vec<String> = s
            .plan
            .root
            .messages()
            .into_iter()
            .filter(|m| m.role == MessageRole::StatusNote)
            .map(|m| m.surface.clone())
            .collect();
        assert_eq!(notes, ["A1 (T1) is not in the preferred extension {A3, A4}."]);
    }

    #[test]
    fn extensions_pivot_on_the_issue() {
        let (kb, df) = running();
        let planner = Planner::new(&kb, &df, PlannerConfig::default());
        let plan = planner.plan_extensions(Semantics::Preferred).unwrap();
        let PlanNode::Sequence { items } = &plan.root else { panic!() };
        let PlanNode::Leaf(focus) = &items[0] else { panic!() };
        assert_eq!(
            focus.surface,
            "The 2 preferred extensions turn on the issue {A2 (T3), A3 (~T3)}."
        );
        let PlanNode::Relation(r) = &items[1] else { panic!() };
        assert_eq!(r.kind, RelationKind::Antithesis);

        let grounded = planner.plan_extensions(Semantics::Grounded).unwrap();
        let sections = grounded
            .root
            .relations()
            .iter()
            .filter(|r| r.kind == RelationKind::Antithesis)
            .count();
        assert_eq!(sections, 0);
    }

    #[test]
    fn forward_and_backward_share_messages() {
        let (kb, df) = running();
        let planner = Planner::new(&kb, &df, PlannerConfig::default());
        for id in df.framework.arguments() {
            let arg = &df.arguments[id];
            let mut f = planner.plan_argument(arg, Direction::Forward, true).unwrap().root.messages().into_iter().cloned().collect::<Vec<_>>();
            let mut b = planner.plan_argument(arg, Direction::Backward, true).unwrap().root.messages().into_iter().cloned().collect::<Vec<_>>();
            f.sort();
            b.sort();
            assert_eq!(f, b);
        }
    }
}
