use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, Context};
use argnlg_core::af::{
    acceptance, dispute_tree, enumerate, issues, AcceptanceMode, AfError, ArgId,
    DeductiveFramework, DisputeNode, DisputeOutcome, EnumerationConfig, Polarity, Semantics, Side,
};
use argnlg_core::aif::{fetch_payload, parse_graph, AifError, AifGraph, NodeKind, DEFAULT_TIMEOUT};
use argnlg_core::logic::{compile, KnowledgeBase, Literal};
use argnlg_core::nlg::{
    realize, realize_acceptability, CommunicativeGoal, Direction, ImplicitPremiseMode,
    LineOrdering, NetworkStrategy, OutputFormat, Planner, PlannerConfig, RealizationConfig,
};
use argnlg_core::Execution;
use serde_json::json;

use crate::{
    Cli, Command, FormatArg, GoalArg, ImplicitArg, ModeArg, Options, OrderingArg, SemanticsArg,
    StrategyArg, StyleArg,
};

pub struct Report {
    pub text: String,
    pub status: u8,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, status: 0 }
    }
}

/// Exit 2: the input could not be read or is not what it claims to be.
/// Exit 1: the input was fine but the request cannot be carried out.
pub enum Failure {
    Input(anyhow::Error),
    Domain(anyhow::Error),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Domain(_) => 1,
        }
    }

    pub fn error(&self) -> &anyhow::Error {
        match self {
            Failure::Input(e) | Failure::Domain(e) => e,
        }
    }
}

type Outcome<T> = Result<T, Failure>;

fn input<T>(msg: impl Into<String>) -> Outcome<T> {
    Err(Failure::Input(anyhow!(msg.into())))
}

fn domain<T>(msg: impl Into<String>) -> Outcome<T> {
    Err(Failure::Domain(anyhow!(msg.into())))
}

fn aif_failure(e: AifError) -> Failure {
    Failure::Input(anyhow::Error::new(e).context("aif"))
}

fn af_failure(e: AfError) -> Failure {
    match e {
        AfError::Parse(_) => Failure::Input(anyhow::Error::new(e).context("af")),
        _ => Failure::Domain(anyhow::Error::new(e).context("af")),
    }
}

pub fn run(cli: &Cli) -> Outcome<Report> {
    let o = &cli.opts;
    match cli.command {
        Command::Validate => validate(o),
        Command::Compile => compile_cmd(o),
        Command::Semantics => semantics_cmd(o),
        Command::Status => status_cmd(o),
        Command::Explain => explain_cmd(o),
        Command::Fetch => fetch_cmd(o),
    }
}

fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(Failure::Input)
}

enum Source<'a> {
    File(&'a Path),
    Remote { endpoint: &'a str, id: &'a str },
}

/// Exactly one of `--input` and `--endpoint`/`--id`. The endpoint alone may
/// come from the environment, so it only counts when an id is given too.
fn graph_source(o: &Options) -> Outcome<Source<'_>> {
    match (&o.input, &o.endpoint, &o.id) {
        (Some(_), _, Some(_)) => input("give either --input or --endpoint/--id, not both"),
        (Some(p), _, None) => Ok(Source::File(p)),
        (None, Some(e), Some(id)) => Ok(Source::Remote { endpoint: e, id }),
        (None, None, Some(_)) => input("--id needs --endpoint (or ARG_NLG_ENDPOINT)"),
        (None, _, None) => input("no input: give --input, --from-kb, or --endpoint with --id"),
    }
}

fn load_text(o: &Options) -> Outcome<String> {
    match graph_source(o)? {
        Source::File(p) => read(p),
        Source::Remote { endpoint, id } => {
            fetch_payload(endpoint, id, DEFAULT_TIMEOUT).map_err(aif_failure)
        }
    }
}

fn load_graph(o: &Options) -> Outcome<AifGraph> {
    parse_graph(&load_text(o)?).map_err(aif_failure)
}

/// Either a bare knowledge base or the object `compile --format json`
/// writes, which carries one under `knowledge_base`.
fn load_kb(path: &Path) -> Outcome<KnowledgeBase> {
    let text = read(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .with_context(|| format!("{} is not JSON", path.display()))
        .map_err(Failure::Input)?;
    let kb = value.get("knowledge_base").cloned().unwrap_or(value);
    serde_json::from_value(kb)
        .with_context(|| format!("{} is not a knowledge base", path.display()))
        .map_err(Failure::Input)
}

fn knowledge_base(o: &Options) -> Outcome<KnowledgeBase> {
    if let Some(p) = &o.from_kb {
        if o.id.is_some() {
            return input("give either --from-kb or --endpoint/--id, not both");
        }
        return load_kb(p);
    }
    compile(&load_graph(o)?)
        .context("logic")
        .map_err(Failure::Domain)
}

fn semantics(o: &Options) -> Semantics {
    match o.semantics {
        SemanticsArg::Complete => Semantics::Complete,
        SemanticsArg::Preferred => Semantics::Preferred,
        SemanticsArg::Grounded => Semantics::Grounded,
        SemanticsArg::Stable => Semantics::Stable,
    }
}

fn mode(o: &Options) -> AcceptanceMode {
    match o.mode {
        ModeArg::Credulous => AcceptanceMode::Credulous,
        ModeArg::Skeptical => AcceptanceMode::Skeptical,
    }
}

fn enumeration(o: &Options) -> EnumerationConfig {
    EnumerationConfig {
        max_args: o.max_args,
        execution: Execution::default(),
    }
}

fn planner_config(o: &Options) -> PlannerConfig {
    PlannerConfig {
        direction: match o.style {
            StyleArg::Forward => Direction::Forward,
            StyleArg::Backward => Direction::Backward,
        },
        expand: o.expand,
        ordering: match o.ordering {
            OrderingArg::Length => LineOrdering::Length,
            OrderingArg::Attacks => LineOrdering::Attacks,
        },
        strategy: match o.strategy {
            StrategyArg::Lines => NetworkStrategy::LinesOfReasoning,
            StrategyArg::Enumerate => NetworkStrategy::Enumerate,
        },
        implicit_premise: o.implicit_premise.map(|m| match m {
            ImplicitArg::Improve => ImplicitPremiseMode::Improve,
            ImplicitArg::Report => ImplicitPremiseMode::Report,
        }),
        enumeration: enumeration(o),
    }
}

fn realization(o: &Options) -> RealizationConfig {
    RealizationConfig {
        format: match o.format {
            FormatArg::Text => OutputFormat::Plain,
            FormatArg::Markdown => OutputFormat::Markdown,
            FormatArg::Json => OutputFormat::Json,
        },
        show_tags: !o.no_tags,
        markers: !o.no_markers,
        ..Default::default()
    }
}

fn pretty(value: serde_json::Value) -> String {
    serde_json::to_string_pretty(&value).expect("JSON values serialize")
}

/// An argument id, or a claim that exactly one argument concludes.
fn resolve_target(df: &DeductiveFramework, o: &Options) -> Outcome<ArgId> {
    let Some(t) = o.target.as_deref() else {
        return input("this needs --target");
    };
    let id = ArgId::from(t);
    if df.arguments.contains_key(&id) {
        return Ok(id);
    }
    let Ok(claim) = t.parse::<Literal>() else {
        return input(format!("--target {t:?} is neither an argument id nor a literal"));
    };
    match df.with_claim(&claim).as_slice() {
        [one] => Ok((*one).clone()),
        [] => domain(format!("no argument claims {claim}")),
        many => {
            let names: Vec<String> = many.iter().map(|id| describe(df, id)).collect();
            domain(format!("{} arguments claim {claim}: {}", many.len(), names.join(", ")))
        }
    }
}

fn describe(df: &DeductiveFramework, id: &ArgId) -> String {
    match df.arguments.get(id) {
        Some(a) => format!("{id} ({})", a.claim),
        None => id.to_string(),
    }
}

fn show_set(df: &DeductiveFramework, set: &BTreeSet<ArgId>) -> String {
    let items: Vec<String> = set.iter().map(|id| describe(df, id)).collect();
    format!("{{{}}}", items.join(", "))
}

fn validate(o: &Options) -> Outcome<Report> {
    let text = load_text(o)?;
    let json_out = o.format == FormatArg::Json;
    match parse_graph(&text) {
        Ok(g) => {
            let out = if json_out {
                pretty(json!({ "valid": true, "diagnostics": [] }))
            } else {
                format!(
                    "valid: {} nodes ({} I, {} RA, {} CA, {} PA), {} edges",
                    g.len(),
                    g.count(NodeKind::Information),
                    g.count(NodeKind::RuleApplication),
                    g.count(NodeKind::ConflictApplication),
                    g.count(NodeKind::PreferenceApplication),
                    g.edges().len()
                )
            };
            Ok(Report::ok(out))
        }
        Err(AifError::InvariantViolation(diags)) => {
            let out = if json_out {
                pretty(json!({ "valid": false, "diagnostics": diags }))
            } else {
                let mut s = format!("invalid: {} problem(s)", diags.len());
                for d in &diags {
                    let _ = write!(s, "\n  {d}");
                }
                s
            };
            Ok(Report { text: out, status: 1 })
        }
        Err(e) => Err(aif_failure(e)),
    }
}

fn compile_cmd(o: &Options) -> Outcome<Report> {
    let kb = knowledge_base(o)?;
    let df = DeductiveFramework::from_kb(&kb, Execution::default());
    if o.format == FormatArg::Json {
        let arguments: Vec<_> = df
            .arguments
            .iter()
            .map(|(id, a)| {
                json!({
                    "id": id,
                    "support": a.support.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                    "claim": a.claim,
                })
            })
            .collect();
        return Ok(Report::ok(pretty(json!({
            "knowledge_base": kb,
            "arguments": arguments,
            "attacks": df.attacks,
        }))));
    }
    let mut s = String::from("facts:");
    for f in &kb.facts {
        let _ = write!(s, "\n  {f}");
    }
    s.push_str("\nrules:");
    for r in &kb.rules {
        let _ = write!(s, "\n  {r}");
    }
    s.push_str("\narguments:");
    for (id, a) in &df.arguments {
        let _ = write!(s, "\n  {id} = {a}");
    }
    s.push_str("\nattacks:");
    for at in &df.attacks {
        let kind = format!("{:?}", at.kind).to_lowercase();
        let _ = write!(s, "\n  {} -> {} ({kind})", at.attacker, at.attacked);
    }
    Ok(Report::ok(s))
}

fn semantics_cmd(o: &Options) -> Outcome<Report> {
    let kb = knowledge_base(o)?;
    let df = DeductiveFramework::from_kb(&kb, Execution::default());
    let sem = semantics(o);
    let cfg = enumeration(o);
    let result = enumerate(&df.framework, sem, &cfg).map_err(af_failure)?;
    let partition = issues(&df.framework, &cfg).map_err(af_failure)?;
    if o.format == FormatArg::Json {
        return Ok(Report::ok(pretty(json!({
            "semantics": sem,
            "extensions": result.extensions,
            "labellings": result.labellings,
            "issues": partition.classes,
        }))));
    }
    let mut s = format!("{sem} extensions ({}):", result.extensions.len());
    for e in &result.extensions {
        let _ = write!(s, "\n  {}", show_set(&df, e));
    }
    s.push_str("\nlabellings:");
    for l in &result.labellings {
        let cells: Vec<String> = l.iter().map(|(id, lab)| format!("{id}={lab}")).collect();
        let _ = write!(s, "\n  {}", cells.join(" "));
    }
    s.push_str("\nissues:");
    for class in &partition.classes {
        let cells: Vec<String> = class
            .members
            .iter()
            .map(|id| {
                let sign = if class.polarity[id] == Polarity::Same { "+" } else { "-" };
                format!("{sign}{}", describe(&df, id))
            })
            .collect();
        let _ = write!(s, "\n  {{{}}}", cells.join(", "));
    }
    Ok(Report::ok(s))
}

fn tree_lines(df: &DeductiveFramework, node: &DisputeNode, depth: usize, out: &mut String) {
    let side = match node.side {
        Side::Pro => "PRO",
        Side::Con => "CON",
    };
    let _ = write!(out, "\n{}{side} {}", "  ".repeat(depth + 1), describe(df, &node.argument));
    for c in &node.children {
        tree_lines(df, c, depth + 1, out);
    }
}

fn status_cmd(o: &Options) -> Outcome<Report> {
    let kb = knowledge_base(o)?;
    let df = DeductiveFramework::from_kb(&kb, Execution::default());
    let target = resolve_target(&df, o)?;
    let (sem, mode, cfg) = (semantics(o), mode(o), enumeration(o));
    let accepted = acceptance(&df.framework, &target, sem, mode, &cfg).map_err(af_failure)?;
    let outcome = match mode {
        AcceptanceMode::Credulous => Some(dispute_tree(&df.framework, &target, sem, &cfg).map_err(af_failure)?),
        AcceptanceMode::Skeptical => None,
    };
    if o.format == FormatArg::Json {
        return Ok(Report::ok(pretty(json!({
            "target": target,
            "claim": df.arguments[&target].claim,
            "semantics": sem,
            "mode": mode,
            "accepted": accepted,
            "dispute": outcome,
        }))));
    }
    let mut s = format!(
        "{} is {}{mode}ly accepted under {sem} semantics.",
        describe(&df, &target),
        if accepted { "" } else { "not " }
    );
    match &outcome {
        Some(DisputeOutcome::Accepted(tree)) => {
            s.push_str("\ndispute tree:");
            tree_lines(&df, &tree.root, 0, &mut s);
        }
        Some(DisputeOutcome::NotAccepted { blocking, .. }) if !blocking.is_empty() => {
            let names: Vec<String> = blocking.iter().map(|b| describe(&df, b)).collect();
            let _ = write!(s, "\nblocked by: {}", names.join(", "));
        }
        _ => {}
    }
    Ok(Report::ok(s))
}

fn explain_cmd(o: &Options) -> Outcome<Report> {
    let kb = knowledge_base(o)?;
    let df = DeductiveFramework::from_kb(&kb, Execution::default());
    let config = planner_config(o);
    let planner = Planner::new(&kb, &df, config);
    let rc = realization(o);
    let nlg = |e| Failure::Domain(anyhow::Error::new(e).context("nlg"));
    let (text, diagnostics) = match o.goal {
        GoalArg::ExplainAcceptability => {
            let target = resolve_target(&df, o)?;
            let plan = planner
                .plan_acceptability(&target, mode(o), semantics(o))
                .map_err(nlg)?;
            (realize_acceptability(&plan, &rc).map_err(nlg)?, plan.plan.diagnostics)
        }
        goal => {
            let goal = match goal {
                GoalArg::PresentArgument => CommunicativeGoal::PresentArgument {
                    target: resolve_target(&df, o)?,
                },
                GoalArg::ExplainExtensions => CommunicativeGoal::ExplainExtensions {
                    semantics: semantics(o),
                },
                _ => CommunicativeGoal::PresentNetwork,
            };
            let plan = planner.plan_goal(&goal).map_err(nlg)?;
            (realize(&plan.root, &rc).map_err(nlg)?, plan.diagnostics)
        }
    };
    for d in &diagnostics {
        eprintln!("note: {}", d.message);
    }
    Ok(Report::ok(text))
}

fn fetch_cmd(o: &Options) -> Outcome<Report> {
    let (endpoint, id) = match graph_source(o)? {
        Source::Remote { endpoint, id } => (endpoint, id),
        Source::File(_) => return input("fetch reads from --endpoint/--id, not --input"),
    };
    let payload = fetch_payload(endpoint, id, DEFAULT_TIMEOUT).map_err(aif_failure)?;
    let graph = parse_graph(&payload).map_err(aif_failure)?;
    match &o.output {
        Some(path) => {
            fs::write(path, &payload)
                .with_context(|| format!("cannot write {}", path.display()))
                .map_err(Failure::Input)?;
            Ok(Report::ok(format!(
                "stored graph {id} ({} nodes) in {}",
                graph.len(),
                path.display()
            )))
        }
        None => Ok(Report::ok(payload)),
    }
}
