//! Acceptance criteria for the whole pipeline, each a named check that
//! reports pass or fail with a short explanation.
//!
//! Every check is exact: set and tree comparisons use equality, text
//! comparisons equality after `normalize`, oracle runs allow zero
//! disagreements. The sizes below are the pinned workloads.

use std::collections::BTreeSet;

use argnlg_core::af::{
    dispute_tree, enumerate, issues, ArgId, DeductiveFramework, DisputeNode, DisputeOutcome,
    EnumerationConfig, Semantics, Side,
};
use argnlg_core::logic::{
    attacks_between, construct_simple_arguments, entails, support_of, AttackKind, Literal,
    Support,
};
use argnlg_core::nlg::{normalize, Direction, ImplicitPremiseMode, LineOrdering, NetworkStrategy};
use argnlg_core::Execution;
use argnlg_testkit::invariants;
use argnlg_testkit::oracle::{self, RawAf};
use argnlg_testkit::{graph, running};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const RANDOM_FRAMEWORKS: usize = 200;
pub const MAX_FRAMEWORK_SIZE: usize = 8;
pub const RANDOM_KBS: usize = 200;
pub const KB_MAX_ATOMS: usize = 6;
pub const KB_MAX_RULES: usize = 6;
pub const PROPERTY_INSTANCES: u64 = 100;
/// Disagreements tolerated against a brute-force oracle.
pub const ORACLE_TOLERANCE: usize = 0;

#[derive(Debug, Clone)]
pub struct Outcome {
    pub number: usize,
    pub name: &'static str,
    pub result: Result<String, String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }

    pub fn line(&self) -> String {
        match &self.result {
            Ok(detail) => format!("PASS [{}] {}: {detail}", self.number, self.name),
            Err(detail) => format!("FAIL [{}] {}: {detail}", self.number, self.name),
        }
    }
}

type Criterion = (&'static str, fn() -> Result<String, String>);

pub const CRITERIA: [Criterion; 10] = [
    ("running example compiles to its rules and facts", compilation),
    ("simple arguments of the running example", argument_set),
    ("attacks of the running example", attack_set),
    ("preferred extensions of the running example", preferred),
    ("issue {b, d} with opposite polarity", issue_b_d),
    ("dispute tree for c", dispute_c),
    ("reference passages", passages),
    ("semantics against brute force", semantics_oracle),
    ("entailment and minimality against brute force", logic_oracle),
    ("property suite on fixtures and random instances", properties),
];

pub fn run_all() -> Vec<Outcome> {
    CRITERIA
        .iter()
        .enumerate()
        .map(|(i, (name, f))| Outcome {
            number: i + 1,
            name,
            result: f(),
        })
        .collect()
}

fn lit(s: &str) -> Literal {
    s.parse().expect("literal")
}

fn support(items: &[&str]) -> Support {
    support_of(items.iter().copied()).expect("support")
}

/// The running example's arguments by letter, found through their claims.
fn letters(df: &DeductiveFramework) -> Result<[ArgId; 4], String> {
    let by_claim = |c: &str| -> Result<ArgId, String> {
        match df.with_claim(&lit(c)).as_slice() {
            [one] => Ok((*one).clone()),
            other => Err(format!("{} arguments claim {c}", other.len())),
        }
    };
    Ok([by_claim("T4")?, by_claim("T3")?, by_claim("T1")?, by_claim("~T3")?])
}

fn show(set: &BTreeSet<ArgId>) -> String {
    let names: Vec<&str> = set.iter().map(ArgId::as_str).collect();
    format!("{{{}}}", names.join(", "))
}

fn compilation() -> Result<String, String> {
    let (kb, _) = running();
    let facts: BTreeSet<Literal> = ["T1", "T2", "T3", "T4", "T5", "T6", "T7"].map(lit).into();
    let want: BTreeSet<(BTreeSet<Literal>, Literal)> = [
        (vec!["T5"], "T4"),
        (vec!["T4"], "T3"),
        (vec!["T2", "T3"], "T1"),
        (vec!["T6", "T7"], "~T3"),
    ]
    .into_iter()
    .map(|(a, c)| (a.into_iter().map(lit).collect(), lit(c)))
    .collect();
    let got: BTreeSet<(BTreeSet<Literal>, Literal)> = kb
        .rules
        .iter()
        .map(|r| (r.antecedents.iter().cloned().collect(), r.consequent.clone()))
        .collect();
    if kb.facts != facts {
        return Err(format!("facts {:?}", kb.facts));
    }
    if got != want || kb.rules.len() != want.len() {
        return Err(format!("rules {:?}", kb.rules));
    }
    Ok(format!("{} rules, {} facts", kb.rules.len(), kb.facts.len()))
}

fn argument_set() -> Result<String, String> {
    let (kb, _) = running();
    let got: BTreeSet<(Support, Literal)> = construct_simple_arguments(&kb, Execution::Parallel)
        .into_iter()
        .map(|a| (a.support, a.claim))
        .collect();
    let want: BTreeSet<(Support, Literal)> = [
        (support(&["T5", "T5 -> T4"]), lit("T4")),
        (support(&["T4", "T4 -> T3"]), lit("T3")),
        (support(&["T2", "T3", "T2 & T3 -> T1"]), lit("T1")),
        (support(&["T6", "T7", "T6 & T7 -> ~T3"]), lit("~T3")),
    ]
    .into();
    if got != want {
        return Err(format!("got {got:?}"));
    }
    Ok("a, b, c, d exactly".into())
}

fn attack_set() -> Result<String, String> {
    let (kb, df) = running();
    let args = construct_simple_arguments(&kb, Execution::Parallel);
    let letter = |i: usize| match args[i].claim.to_string().as_str() {
        "T4" => "a",
        "T3" => "b",
        "T1" => "c",
        "~T3" => "d",
        _ => "?",
    };
    let got: BTreeSet<(&str, &str, AttackKind)> = attacks_between(&args, Execution::Parallel)
        .into_iter()
        .map(|a| (letter(a.attacker), letter(a.attacked), a.kind))
        .collect();
    let want: BTreeSet<(&str, &str, AttackKind)> = [
        ("d", "b", AttackKind::Rebut),
        ("b", "d", AttackKind::Rebut),
        ("d", "c", AttackKind::Undercut),
    ]
    .into();
    if got != want {
        return Err(format!("got {got:?}"));
    }
    if df.framework.attacks().len() != 3 {
        return Err(format!("framework has {} attacks", df.framework.attacks().len()));
    }
    Ok("d<->b rebut, d->c undercut".into())
}

fn preferred() -> Result<String, String> {
    let (_, df) = running();
    let [a, b, c, d] = letters(&df)?;
    let got = enumerate(&df.framework, Semantics::Preferred, &EnumerationConfig::default())
        .map_err(|e| e.to_string())?
        .extensions;
    let want: BTreeSet<BTreeSet<ArgId>> = [[a.clone(), b, c].into(), [a, d].into()].into();
    let got_set: BTreeSet<BTreeSet<ArgId>> = got.iter().cloned().collect();
    if got_set != want || got.len() != want.len() {
        return Err(format!("got {got:?}"));
    }
    Ok(got.iter().map(show).collect::<Vec<_>>().join(" "))
}

fn issue_b_d() -> Result<String, String> {
    let (_, df) = running();
    let [_, b, c, d] = letters(&df)?;
    let partition = issues(&df.framework, &EnumerationConfig::default()).map_err(|e| e.to_string())?;
    let want: BTreeSet<ArgId> = [b.clone(), d.clone()].into();
    let classes: Vec<String> = partition.classes.iter().map(|k| show(&k.members)).collect();
    match partition.classes.iter().find(|k| k.members == want) {
        Some(k) if k.polarity[&b] != k.polarity[&d] => Ok(format!("classes {}", classes.join(" "))),
        Some(_) => Err("class {b, d} has equal polarity".into()),
        None => {
            let holder = partition.class_of(&b).map(|k| show(&k.members)).unwrap_or_default();
            Err(format!(
                "no class equals {{b, d}}; classes {}; b sits in {holder} because c ({c}) \
                 carries b's label in every complete labelling",
                classes.join(" ")
            ))
        }
    }
}

fn dispute_c() -> Result<String, String> {
    let (_, df) = running();
    let [_, b, c, d] = letters(&df)?;
    let outcome = dispute_tree(&df.framework, &c, Semantics::Preferred, &EnumerationConfig::default())
        .map_err(|e| e.to_string())?;
    let DisputeOutcome::Accepted(tree) = outcome else {
        return Err(format!("{c} not accepted"));
    };
    // `repeated` lists attackers already answered higher up; they are not
    // nodes of the tree.
    let root = &tree.root;
    let ok = root.argument == c
        && root.side == Side::Pro
        && root.children.len() == 1
        && root.children[0].argument == d
        && root.children[0].side == Side::Con
        && root.children[0].children.len() == 1
        && root.children[0].children[0].argument == b
        && root.children[0].children[0].side == Side::Pro
        && root.children[0].children[0].children.is_empty();
    if !ok {
        return Err(format!("tree {}", outline(root)));
    }
    Ok(format!("PRO {c} / CON {d} / PRO {b}"))
}

fn outline(n: &DisputeNode) -> String {
    let side = if n.side == Side::Pro { "PRO" } else { "CON" };
    let kids: Vec<String> = n.children.iter().map(outline).collect();
    format!("{side} {}[{}]", n.argument, kids.join(" "))
}

fn passages() -> Result<String, String> {
    use argnlg_testkit::*;
    let cases: [(&str, String, String); 6] = [
        ("forward", running_passage(Direction::Forward, false, None, false), forward_plain()),
        ("forward, Therefore", running_passage(Direction::Forward, false, None, true), forward_therefore()),
        ("backward, Indeed", running_passage(Direction::Backward, false, None, true), backward_indeed()),
        ("backward, e.g.", running_passage(Direction::Backward, true, None, true), backward_example()),
        (
            "implicit premise",
            running_passage(Direction::Backward, false, Some(ImplicitPremiseMode::Improve), true),
            implicit_improve(),
        ),
        ("network", running_network_passage(), network()),
    ];
    let mismatched: Vec<&str> = cases
        .iter()
        .filter(|(_, got, want)| normalize(got) != normalize(want))
        .map(|(name, _, _)| *name)
        .collect();
    if !mismatched.is_empty() {
        return Err(format!("mismatch: {}", mismatched.join(", ")));
    }
    Ok(format!("{} of {} match", cases.len(), cases.len()))
}

fn semantics_oracle() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    let cfg = EnumerationConfig::default();
    let mut disagreements = Vec::new();
    for round in 0..RANDOM_FRAMEWORKS {
        let raw = RawAf::random(&mut rng, MAX_FRAMEWORK_SIZE);
        let af = raw.to_framework();
        for (sem, expected) in [
            (Semantics::Complete, raw.complete()),
            (Semantics::Preferred, raw.preferred()),
            (Semantics::Grounded, raw.grounded()),
            (Semantics::Stable, raw.stable()),
        ] {
            match enumerate(&af, sem, &cfg) {
                Ok(got) if raw.masks(&got.extensions) == expected => {}
                _ => disagreements.push(format!("round {round} {sem}")),
            }
        }
    }
    if disagreements.len() > ORACLE_TOLERANCE {
        return Err(format!("{} disagreements, first {}", disagreements.len(), disagreements[0]));
    }
    Ok(format!("{RANDOM_FRAMEWORKS} frameworks x 4 semantics, 0 disagreements"))
}

fn logic_oracle() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x10C);
    let (mut queries, mut arguments, mut disagreements) = (0, 0, Vec::new());
    for round in 0..RANDOM_KBS {
        let kb = oracle::random_kb(&mut rng, KB_MAX_ATOMS, KB_MAX_RULES);
        for l in oracle::literals_of(&kb) {
            queries += 1;
            if entails(&kb, &l) != oracle::entails(&kb, &l) {
                disagreements.push(format!("round {round}: entails {l}"));
            }
        }
        for a in construct_simple_arguments(&kb, Execution::Parallel) {
            arguments += 1;
            if !oracle::derives(&a.support, &a.claim) || !oracle::exhaustively_minimal(&a.support, &a.claim) {
                disagreements.push(format!("round {round}: argument {a}"));
            }
        }
    }
    if disagreements.len() > ORACLE_TOLERANCE {
        return Err(format!("{} disagreements, first {}", disagreements.len(), disagreements[0]));
    }
    Ok(format!("{RANDOM_KBS} knowledge bases, {queries} queries, {arguments} arguments minimal"))
}

fn properties() -> Result<String, String> {
    use invariants::*;
    let (kb, df) = running();
    let fixture_graph = graph();
    let mut checks: Vec<(String, Check)> = vec![
        ("fixture aif round trip".into(), aif_round_trip(&fixture_graph)),
        ("fixture kb round trip".into(), kb_round_trip(&fixture_graph)),
        ("fixture iccma round trip".into(), iccma_round_trip(&df.framework)),
        ("fixture rebut symmetry".into(), rebuts_are_symmetric(&kb)),
        ("fixture expansion".into(), expansion_is_valid_and_expansive(&kb)),
        ("fixture lines".into(), lines_partition_arguments(&kb, LineOrdering::Length)),
        ("fixture semantics".into(), semantics_invariants(&df.framework)),
        ("fixture issues".into(), issue_classes_are_locked(&df.framework)),
        ("fixture disputes".into(), dispute_trees_agree_with_acceptance(&df.framework)),
        ("fixture acceptability".into(), acceptability_plans_mention_the_tree(&kb)),
    ];
    for expand in [false, true] {
        checks.push((format!("fixture messages expand={expand}"), directions_share_messages(&kb, expand)));
    }
    for dir in [Direction::Forward, Direction::Backward] {
        for strategy in [NetworkStrategy::LinesOfReasoning, NetworkStrategy::Enumerate] {
            checks.push((format!("fixture content {dir} {strategy:?}"), realization_preserves_content(&kb, dir, strategy)));
        }
    }
    for seed in 0..PROPERTY_INSTANCES {
        let graph = seeded_graph(seed);
        let af = seeded_af(seed, MAX_FRAMEWORK_SIZE);
        let kb = seeded_kb(seed);
        let texted = texted_kb(seed);
        let dir = if seed % 2 == 0 { Direction::Forward } else { Direction::Backward };
        let strategy = if seed % 3 == 0 { NetworkStrategy::Enumerate } else { NetworkStrategy::LinesOfReasoning };
        let ordering = if seed % 2 == 0 { LineOrdering::Length } else { LineOrdering::Attacks };
        for (name, check) in [
            ("aif round trip", aif_round_trip(&graph)),
            ("kb round trip", kb_round_trip(&graph)),
            ("iccma round trip", iccma_round_trip(&af)),
            ("rebut symmetry", rebuts_are_symmetric(&kb)),
            ("expansion", expansion_is_valid_and_expansive(&kb)),
            ("messages", directions_share_messages(&texted, seed % 2 == 1)),
            ("content", realization_preserves_content(&texted, dir, strategy)),
            ("lines", lines_partition_arguments(&kb, ordering)),
            ("semantics", semantics_invariants(&af)),
            ("issues", issue_classes_are_locked(&af)),
            ("disputes", dispute_trees_agree_with_acceptance(&af)),
            ("acceptability", acceptability_plans_mention_the_tree(&texted)),
        ] {
            checks.push((format!("seed {seed} {name}"), check));
        }
    }
    let failures: Vec<String> = checks
        .iter()
        .filter_map(|(name, c)| c.as_ref().err().map(|e| format!("{name}: {e}")))
        .collect();
    if !failures.is_empty() {
        return Err(format!("{} of {} failed, first {}", failures.len(), checks.len(), failures[0]));
    }
    Ok(format!("{} checks", checks.len()))
}
