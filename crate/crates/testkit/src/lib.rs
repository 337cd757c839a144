//! Reference material shared by the cross-module test suites: the running
//! example, its reference passages, naive oracles and random generators.

pub mod invariants;
pub mod oracle;

use argnlg_core::af::{ArgId, DeductiveFramework};
use argnlg_core::nlg::{
    realize, Direction, ImplicitPremiseMode, NetworkStrategy, Planner, PlannerConfig,
    RealizationConfig,
};
use argnlg_core::aif::{parse_graph, AifGraph};
use argnlg_core::logic::{compile, KnowledgeBase};
use argnlg_core::Execution;

pub const FIXTURE: &str = include_str!("../../core/fixtures/running_example.json");

pub fn graph() -> AifGraph {
    parse_graph(FIXTURE).expect("fixture parses")
}

pub fn running() -> (KnowledgeBase, DeductiveFramework) {
    let kb = compile(&graph()).expect("fixture compiles");
    let df = DeductiveFramework::from_kb(&kb, Execution::Sequential);
    (kb, df)
}

// Reference passages, typeset with doubled-quote conventions and other
// quirks; compare after `normalize`.
pub const T1: &str = "if you want the moral hazard, instead of kind of just going on about the bankers, is there not a danger that if we just said we'd write off debt, that it actually isn't very helpful for our side, for ordinary people, to actually have that?";
pub const T2: &str = "There's no discipline there";
pub const T3: &str = "In some ways you need that discipline, don't you, to be a saver, to think, ``I won't get into debt''?.";
pub const T4: &str = "If you want the economy to run smoothly, you have to incentivise certain type of behaviour.";
pub const T5: &str = "in South Korea, in terms of how South Korean grew, it did incentivise saving, at certain times, by certain economic policies";
pub const T6: &str = "people don't realise, or only half realise, is the fact that we have actually written off massive amounts of debt";
pub const T7: &str = "But it certainly isn't the debts of the people who most need it in society";

pub fn forward_plain() -> String {
    format!("{T4} [T4]\n{T3} [T3]")
}

pub fn forward_therefore() -> String {
    format!("{T4} [T4]\n\nTherefore\n{T3} [T3]")
}

pub fn backward_indeed() -> String {
    format!("{T3} [T3]\n\nIndeed\n{T4} [T4]")
}

pub fn backward_example() -> String {
    format!("{T3} [T3]\n\nIndeed\n{T4} [T4]\n , e.g.\n{T5} [T5]")
}

pub fn implicit_improve() -> String {
    format!("{T3} [T3]\n Indeed\n {T4} [T4]\n\n although we have no evidence that this is the established rule.")
}

pub fn network() -> String {
    format!(
        "{T1} [T1]\n Indeed\n {T2} [T2]\n and\n {T3} [T3]\n Indeed\n {T4} [T4]\n , e.g.\n {T5} [T5]\n However,\n {T6} [T6]\n and\n {T7} [T7]."
    )
}


use argnlg_core::aif::{AifEdge, AifNode, NodeKind, SchemeFamily, SchemeRef};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

const WORDS: &[&str] = &[
    "rain", "falls", "markets", "open", "debt", "grows", "savers", "lose", "policy", "works",
    "prices", "rise", "banks", "lend", "people", "spend",
];

pub fn random_text(rng: &mut ChaCha8Rng) -> String {
    let n = rng.gen_range(1..=4);
    (0..n).map(|_| WORDS[rng.gen_range(0..WORDS.len())]).collect::<Vec<_>>().join(" ")
}

/// A valid AIF graph: inferences only run from lower to higher I-node
/// numbers, so the inference part is acyclic; conflicts go anywhere.
pub fn random_graph(rng: &mut ChaCha8Rng) -> AifGraph {
    let n = rng.gen_range(1..=7);
    let mut nodes: Vec<AifNode> = (0..n)
        .map(|i| {
            let mut node = AifNode::information(format!("I{i}"), random_text(rng));
            if rng.gen_bool(0.5) {
                node.speaker = Some(format!("speaker {}", rng.gen_range(0..3)));
            }
            node
        })
        .collect();
    let mut edges = Vec::new();
    if n > 1 {
        for r in 0..rng.gen_range(0..=4) {
            let target = rng.gen_range(1..n);
            let k = rng.gen_range(1..=target.min(3));
            let mut premises: Vec<usize> = (0..target).collect();
            while premises.len() > k {
                premises.remove(rng.gen_range(0..premises.len()));
            }
            let scheme = match rng.gen_range(0..3) {
                0 => None,
                1 => Some(SchemeRef::new(SchemeFamily::Inference, "argument_from_example")),
                _ => Some(SchemeRef::new(SchemeFamily::Inference, "argument_by_established_rule")),
            };
            let id = format!("RA{r}");
            nodes.push(AifNode::scheme_node(&id, NodeKind::RuleApplication, scheme));
            for p in premises {
                edges.push(AifEdge::new(format!("I{p}"), &id));
            }
            edges.push(AifEdge::new(&id, format!("I{target}")));
        }
        for c in 0..rng.gen_range(0..=2) {
            let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if x == y {
                continue;
            }
            let id = format!("CA{c}");
            nodes.push(AifNode::scheme_node(
                &id,
                NodeKind::ConflictApplication,
                Some(SchemeRef::new(SchemeFamily::Conflict, "default_conflict")),
            ));
            edges.push(AifEdge::new(format!("I{x}"), &id));
            edges.push(AifEdge::new(&id, format!("I{y}")));
        }
    }
    AifGraph::new(nodes, edges).expect("generated graph is valid")
}

/// Realizes argument b of the running example (canonical id A2) the way the
/// reference passages were produced.
pub fn running_passage(
    direction: Direction,
    expand: bool,
    implicit: Option<ImplicitPremiseMode>,
    markers: bool,
) -> String {
    let (kb, df) = running();
    let config = PlannerConfig {
        implicit_premise: implicit,
        ..Default::default()
    };
    let planner = Planner::new(&kb, &df, config);
    let plan = planner
        .plan_argument(&df.arguments[&ArgId::from("A2")], direction, expand)
        .expect("b is planned");
    let rc = RealizationConfig {
        markers,
        ..Default::default()
    };
    realize(&plan.root, &rc).expect("b is realized")
}

/// The running example's network passage, lines-of-reasoning strategy.
pub fn running_network_passage() -> String {
    let (kb, df) = running();
    let planner = Planner::new(&kb, &df, PlannerConfig::default());
    let plan = planner
        .plan_network(NetworkStrategy::LinesOfReasoning, Direction::Backward)
        .expect("network is planned");
    realize(&plan.root, &RealizationConfig::default()).expect("network is realized")
}
