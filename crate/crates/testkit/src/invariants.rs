//! Structural invariants as plain checks over one instance each, so the
//! proptests and the acceptance run share a single statement of each.

use std::collections::BTreeSet;

use argnlg_core::af::{
    acceptance, dispute_tree, enumerate, iccma, is_complete_labelling, issues, AcceptanceMode,
    ArgId, ArgumentationFramework, DeductiveFramework, DisputeOutcome, EnumerationConfig, Label,
    Polarity, Semantics,
};
use argnlg_core::aif::{parse_graph, to_json, AifGraph};
use argnlg_core::logic::{
    attacks_between, classify, compile, construct_simple_arguments, expand_argument, AttackKind,
    KnowledgeBase,
};
use argnlg_core::nlg::{
    annotate_dependencies, extract_lines, realize, Direction, LineOrdering, MarkerLexicon,
    NetworkStrategy, PlanNode, Planner, PlannerConfig, RealizationConfig,
};
use argnlg_core::Execution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::oracle::{random_kb, RawAf};
use crate::{random_graph, random_text};

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn seeded_graph(seed: u64) -> AifGraph {
    random_graph(&mut rng(seed))
}

pub fn seeded_af(seed: u64, max_n: usize) -> ArgumentationFramework {
    RawAf::random(&mut rng(seed), max_n).to_framework()
}

pub fn seeded_kb(seed: u64) -> KnowledgeBase {
    random_kb(&mut rng(seed), 6, 6)
}

/// A random knowledge base with a text for every atom.
pub fn texted_kb(seed: u64) -> KnowledgeBase {
    let mut r = rng(seed);
    let mut kb = random_kb(&mut r, 6, 6);
    let atoms: Vec<String> = kb.atoms().into_iter().map(str::to_string).collect();
    for a in atoms {
        let t = random_text(&mut r);
        kb.proposition_texts.insert(a, t);
    }
    kb
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

pub fn aif_round_trip(g: &AifGraph) -> Check {
    let back = parse_graph(&to_json(g)).map_err(err)?;
    ensure!(&back == g, "graph changed after a JSON round trip");
    Ok(())
}

pub fn kb_round_trip(g: &AifGraph) -> Check {
    let kb = compile(g).map_err(err)?;
    let json = serde_json::to_string(&kb).map_err(err)?;
    let back: KnowledgeBase = serde_json::from_str(&json).map_err(err)?;
    ensure!(back == kb, "knowledge base changed after a JSON round trip");
    Ok(())
}

pub fn iccma_round_trip(af: &ArgumentationFramework) -> Check {
    let text = iccma::write(af);
    let again = iccma::write(&iccma::parse(&text).map_err(err)?);
    ensure!(again == text, "ICCMA text changed: {text:?} vs {again:?}");
    Ok(())
}

pub fn rebuts_are_symmetric(kb: &KnowledgeBase) -> Check {
    let args = construct_simple_arguments(kb, Execution::Sequential);
    let rebuts: BTreeSet<(usize, usize)> = attacks_between(&args, Execution::Parallel)
        .iter()
        .filter(|a| a.kind == AttackKind::Rebut)
        .map(|a| (a.attacker, a.attacked))
        .collect();
    for &(x, y) in &rebuts {
        ensure!(rebuts.contains(&(y, x)), "rebut {x}->{y} without {y}->{x}");
    }
    Ok(())
}

pub fn expansion_is_valid_and_expansive(kb: &KnowledgeBase) -> Check {
    for a in construct_simple_arguments(kb, Execution::Sequential) {
        if let Ok(e) = expand_argument(kb, &a) {
            let class = classify(&e);
            ensure!(class.valid && class.expansive, "expansion of {a} is {class:?}");
            ensure!(a.support.is_subset(&e.support), "expansion of {a} drops support");
        }
    }
    Ok(())
}

fn sorted_messages(planner: &Planner, df: &DeductiveFramework, id: &ArgId, dir: Direction, expand: bool) -> Result<Vec<String>, String> {
    let plan = planner.plan_argument(&df.arguments[id], dir, expand).map_err(err)?;
    let mut out: Vec<String> = plan
        .root
        .messages()
        .into_iter()
        .map(|m| format!("{:?}|{}|{}", m.role, m.atom, m.surface))
        .collect();
    out.sort();
    Ok(out)
}

/// Forward and backward plans of an argument carry the same messages.
pub fn directions_share_messages(kb: &KnowledgeBase, expand: bool) -> Check {
    let df = DeductiveFramework::from_kb(kb, Execution::Sequential);
    let planner = Planner::new(kb, &df, PlannerConfig::default());
    for id in df.arguments.keys() {
        let f = sorted_messages(&planner, &df, id, Direction::Forward, expand)?;
        let b = sorted_messages(&planner, &df, id, Direction::Backward, expand)?;
        ensure!(f == b, "{id}: {f:?} vs {b:?}");
    }
    Ok(())
}

/// Pulls proposition surfaces back out of tagged text: each tag closes a
/// proposition, and whatever markers open the span are dropped.
pub fn extract_surfaces(text: &str, markers: &[&str]) -> Vec<String> {
    let mut out = Vec::new();
    let mut rest = text;
    while let Some(open) = rest.find(" [") {
        let close = rest[open..].find(']').expect("tag closes") + open;
        let mut span = rest[..open].trim();
        loop {
            let before = span;
            span = span.trim_start_matches(['.', ',', ' ', '\n']);
            for m in markers {
                let word = m.trim_start_matches([',', ' ']);
                if let Some(s) = span.strip_prefix(word) {
                    if s.starts_with(' ') {
                        span = s;
                    }
                }
            }
            if span == before {
                break;
            }
        }
        out.push(span.to_string());
        rest = &rest[close + 1..];
    }
    out
}

fn plan_surfaces(node: &PlanNode) -> Vec<String> {
    node.messages()
        .into_iter()
        .filter(|m| m.role.is_proposition())
        .map(|m| m.surface.clone())
        .collect()
}

/// Every planned proposition appears verbatim in the text, nothing else
/// does, and realizing twice gives the same string.
pub fn realization_preserves_content(kb: &KnowledgeBase, direction: Direction, strategy: NetworkStrategy) -> Check {
    let df = DeductiveFramework::from_kb(kb, Execution::Sequential);
    let planner = Planner::new(kb, &df, PlannerConfig::default());
    let plan = planner.plan_network(strategy, direction).map_err(err)?;
    ensure!(plan.root.well_formed(), "malformed plan");
    let config = RealizationConfig::default();
    let text = realize(&plan.root, &config).map_err(err)?;
    ensure!(text == realize(&plan.root, &config).map_err(err)?, "realization not deterministic");
    let lexicon = MarkerLexicon::default();
    let markers: Vec<&str> = lexicon.markers().collect();
    let mut got = extract_surfaces(&text, &markers);
    let mut want = plan_surfaces(&plan.root);
    got.sort();
    want.sort();
    ensure!(got == want, "surfaces differ in {text:?}");
    Ok(())
}

pub fn lines_partition_arguments(kb: &KnowledgeBase, ordering: LineOrdering) -> Check {
    let df = DeductiveFramework::from_kb(kb, Execution::Sequential);
    let dep = annotate_dependencies(&df);
    ensure!(dep.edges.is_disjoint(&dep.attacks), "dependency edge between attacking arguments");
    let lines = extract_lines(&df, &dep, ordering);
    let mut seen: Vec<ArgId> = lines.iter().flat_map(|l| l.arguments.clone()).collect();
    seen.sort();
    ensure!(seen == df.framework.arguments(), "lines cover {seen:?}");
    for l in &lines {
        for w in l.arguments.windows(2) {
            ensure!(dep.edges.contains(&(w[0].clone(), w[1].clone())), "line step {}->{} is not a dependency", w[0], w[1]);
        }
    }
    Ok(())
}

pub fn semantics_invariants(af: &ArgumentationFramework) -> Check {
    let cfg = EnumerationConfig::default();
    let complete = enumerate(af, Semantics::Complete, &cfg).map_err(err)?;
    for l in &complete.labellings {
        ensure!(is_complete_labelling(af, l), "not complete: {l:?}");
    }
    let preferred = enumerate(af, Semantics::Preferred, &cfg).map_err(err)?.extensions;
    for p in &preferred {
        for q in &preferred {
            ensure!(p == q || !p.is_subset(q), "preferred {p:?} inside {q:?}");
        }
    }
    let grounded = &enumerate(af, Semantics::Grounded, &cfg).map_err(err)?.extensions[0];
    for e in &complete.extensions {
        ensure!(grounded.is_subset(e), "grounded not inside {e:?}");
    }
    for l in enumerate(af, Semantics::Stable, &cfg).map_err(err)?.labellings {
        ensure!(l.values().all(|&x| x != Label::Undec), "stable labelling with undec");
    }
    Ok(())
}

/// Within an issue class every complete labelling fixes each member
/// relative to the representative.
pub fn issue_classes_are_locked(af: &ArgumentationFramework) -> Check {
    let cfg = EnumerationConfig::default();
    let labellings = enumerate(af, Semantics::Complete, &cfg).map_err(err)?.labellings;
    let partition = issues(af, &cfg).map_err(err)?;
    let covered: usize = partition.classes.iter().map(|c| c.members.len()).sum();
    ensure!(covered == af.len(), "classes cover {covered} of {}", af.len());
    let mirror = |l: Label| match l {
        Label::In => Label::Out,
        Label::Out => Label::In,
        Label::Undec => Label::Undec,
    };
    for class in &partition.classes {
        for l in &labellings {
            let rep = l[&class.representative];
            for (m, p) in &class.polarity {
                let want = if *p == Polarity::Same { rep } else { mirror(rep) };
                ensure!(l[m] == want, "{m} not locked to {}", class.representative);
            }
        }
    }
    Ok(())
}

pub fn dispute_trees_agree_with_acceptance(af: &ArgumentationFramework) -> Check {
    let cfg = EnumerationConfig::default();
    for a in af.arguments() {
        let credulous = acceptance(af, a, Semantics::Preferred, AcceptanceMode::Credulous, &cfg).map_err(err)?;
        match dispute_tree(af, a, Semantics::Preferred, &cfg).map_err(err)? {
            DisputeOutcome::Accepted(t) => {
                ensure!(credulous, "{a}: tree for a rejected argument");
                let pro = t.pro_arguments();
                ensure!(pro.contains(a), "{a}: root missing from PRO");
                ensure!(af.is_admissible(&pro).map_err(err)?, "{a}: PRO set not admissible");
            }
            DisputeOutcome::NotAccepted { blocking, .. } => {
                ensure!(!credulous, "{a}: no tree for an accepted argument");
                ensure!(
                    !blocking.is_empty() || af.attackers_of(a).map_err(err)?.is_empty(),
                    "{a}: rejected without blockers"
                );
            }
        }
    }
    Ok(())
}

pub fn acceptability_plans_mention_the_tree(kb: &KnowledgeBase) -> Check {
    let df = DeductiveFramework::from_kb(kb, Execution::Sequential);
    let planner = Planner::new(kb, &df, PlannerConfig::default());
    for id in df.framework.arguments() {
        let p = planner
            .plan_acceptability(id, AcceptanceMode::Credulous, Semantics::Preferred)
            .map_err(err)?;
        if let Some(t) = &p.tree {
            let nodes: BTreeSet<ArgId> = t.pro_arguments().union(&t.con_arguments()).cloned().collect();
            ensure!(p.mentioned == nodes, "{id}: plan mentions {:?}, tree has {nodes:?}", p.mentioned);
        }
    }
    Ok(())
}
