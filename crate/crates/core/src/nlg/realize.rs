use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{
    AcceptabilityPlan, Direction, MarkerContext, MarkerLexicon, NlgError, PlanNode, RelationKind,
};
use crate::af::AcceptanceMode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Plain,
    Markdown,
    Json,
}

impl FromStr for OutputFormat {
    type Err = NlgError;

    fn from_str(s: &str) -> Result<Self, NlgError> {
        match s.to_ascii_lowercase().as_str() {
            "plain" | "text" => Ok(OutputFormat::Plain),
            "markdown" | "md" => Ok(OutputFormat::Markdown),
            "json" => Ok(OutputFormat::Json),
            other => Err(NlgError::Planning(format!("unknown output format `{other}`"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Plain => "plain",
            OutputFormat::Markdown => "markdown",
            OutputFormat::Json => "json",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationConfig {
    pub format: OutputFormat,
    /// Follow each proposition with its `[T1]`-style tag.
    pub show_tags: bool,
    /// Fold an example into the sentence it supports (", e.g.") rather
    /// than giving it a sentence of its own.
    pub aggregation: bool,
    /// Emit discourse markers at all.
    pub markers: bool,
    pub lexicon: MarkerLexicon,
}

impl Default for RealizationConfig {
    fn default() -> Self {
        RealizationConfig {
            format: OutputFormat::Plain,
            show_tags: true,
            aggregation: true,
            markers: true,
            lexicon: MarkerLexicon::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Prop { text: String, tag: Option<String> },
    Marker(String),
    Note(String),
    /// End the current span with a full stop unless it already has one.
    Close,
    Break,
    Heading(String),
}

struct Emitter<'c> {
    config: &'c RealizationConfig,
    out: Vec<Tok>,
}

impl Emitter<'_> {
    fn marker(
        &mut self,
        relation: RelationKind,
        direction: Option<Direction>,
        context: MarkerContext,
    ) -> Result<(), NlgError> {
        if self.config.markers {
            let m = self.config.lexicon.get(relation, direction, context)?;
            self.out.push(Tok::Marker(m.to_string()));
        }
        Ok(())
    }

    fn node(&mut self, node: &PlanNode) -> Result<(), NlgError> {
        match node {
            PlanNode::Leaf(m) if m.role.is_proposition() => self.out.push(Tok::Prop {
                text: m.surface.clone(),
                tag: self.config.show_tags.then(|| m.atom.clone()),
            }),
            PlanNode::Leaf(m) => self.out.push(Tok::Note(m.surface.clone())),
            PlanNode::Relation(r) => {
                match r.kind {
                    RelationKind::Justify | RelationKind::Evidence => {
                        let context = if r.kind == RelationKind::Evidence && self.config.aggregation {
                            MarkerContext::Inline
                        } else {
                            MarkerContext::Sentence
                        };
                        match r.direction {
                            Direction::Backward => {
                                self.node(&r.nucleus)?;
                                self.marker(r.kind, Some(r.direction), context)?;
                                for s in &r.satellites {
                                    self.node(s)?;
                                }
                            }
                            Direction::Forward => {
                                for s in &r.satellites {
                                    self.node(s)?;
                                }
                                self.marker(r.kind, Some(r.direction), context)?;
                                self.node(&r.nucleus)?;
                            }
                        }
                    }
                    RelationKind::Conjunction => {
                        self.node(&r.nucleus)?;
                        for s in &r.satellites {
                            self.marker(RelationKind::Conjunction, None, MarkerContext::Inline)?;
                            self.node(s)?;
                        }
                    }
                    RelationKind::Antithesis => {
                        self.node(&r.nucleus)?;
                        for s in &r.satellites {
                            match s {
                                PlanNode::Section { title, body } => {
                                    self.out.push(Tok::Break);
                                    self.out.push(Tok::Heading(title.clone()));
                                    self.marker(RelationKind::Antithesis, None, MarkerContext::Sentence)?;
                                    self.node(body)?;
                                }
                                _ => {
                                    self.marker(RelationKind::Antithesis, None, MarkerContext::Sentence)?;
                                    self.node(s)?;
                                }
                            }
                            self.out.push(Tok::Close);
                        }
                    }
                }
                for n in &r.notes {
                    self.out.push(Tok::Note(n.surface.clone()));
                }
            }
            PlanNode::Sequence { items } => {
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        self.out.push(Tok::Break);
                    }
                    self.node(item)?;
                }
            }
            PlanNode::Section { title, body } => {
                self.out.push(Tok::Break);
                self.out.push(Tok::Heading(title.clone()));
                self.node(body)?;
            }
        }
        Ok(())
    }
}

fn ends_sentence(s: &str) -> bool {
    s.trim_end().ends_with(['.', '?', '!'])
}

fn assemble(tokens: &[Tok], markdown: bool) -> String {
    let mut buf = String::new();
    let mut closed = true;
    let space = |buf: &mut String| {
        if !buf.is_empty() && !buf.ends_with('\n') {
            buf.push(' ');
        }
    };
    let paragraph = |buf: &mut String| {
        let trimmed = buf.trim_end_matches(' ').len();
        buf.truncate(trimmed);
        if !buf.is_empty() && !buf.ends_with("\n\n") {
            if !buf.ends_with('\n') {
                buf.push('\n');
            }
            buf.push('\n');
        }
    };
    for tok in tokens {
        match tok {
            Tok::Prop { text, tag } => {
                space(&mut buf);
                buf.push_str(text);
                if let Some(t) = tag {
                    buf.push_str(&format!(" [{t}]"));
                }
                closed = ends_sentence(text);
            }
            Tok::Marker(m) => {
                let (lead, word) = match m.strip_prefix(", ") {
                    Some(rest) => (", ", rest),
                    None => ("", m.as_str()),
                };
                if lead.is_empty() {
                    space(&mut buf);
                } else {
                    buf.push_str(lead);
                }
                if markdown {
                    buf.push_str(&format!("**{word}**"));
                } else {
                    buf.push_str(word);
                }
            }
            Tok::Note(n) => {
                space(&mut buf);
                buf.push_str(n);
                closed = ends_sentence(n);
            }
            Tok::Close => {
                if !closed {
                    buf.push('.');
                    closed = true;
                }
            }
            Tok::Break => paragraph(&mut buf),
            Tok::Heading(h) => {
                paragraph(&mut buf);
                if markdown {
                    buf.push_str(&format!("## {h}\n\n"));
                } else {
                    buf.push_str(h);
                    buf.push('\n');
                }
            }
        }
    }
    buf.trim_end().to_string()
}

fn realize_text(plan: &PlanNode, config: &RealizationConfig) -> Result<String, NlgError> {
    let mut e = Emitter {
        config,
        out: Vec::new(),
    };
    e.node(plan)?;
    Ok(assemble(&e.out, config.format == OutputFormat::Markdown))
}

/// Renders a plan. Identical plan and configuration give byte-identical
/// output.
pub fn realize(plan: &PlanNode, config: &RealizationConfig) -> Result<String, NlgError> {
    let text = realize_text(plan, config)?;
    match config.format {
        OutputFormat::Json => Ok(serde_json::to_string_pretty(&serde_json::json!({
            "plan": plan,
            "text": text,
        }))
        .expect("plan serializes")),
        _ => Ok(text),
    }
}

/// Like [`realize`], opened by a sentence giving the verdict.
pub fn realize_acceptability(
    plan: &AcceptabilityPlan,
    config: &RealizationConfig,
) -> Result<String, NlgError> {
    let adverb = match plan.mode {
        AcceptanceMode::Credulous => "credulously",
        AcceptanceMode::Skeptical => "skeptically",
    };
    let verdict = format!(
        "{} ({}) is {}{adverb} accepted under {} semantics.",
        plan.target,
        plan.claim,
        if plan.accepted { "" } else { "not " },
        plan.semantics
    );
    let body = realize_text(&plan.plan.root, config)?;
    match config.format {
        OutputFormat::Plain => Ok(format!("{verdict}\n\n{body}")),
        OutputFormat::Markdown => Ok(format!("**{verdict}**\n\n{body}")),
        OutputFormat::Json => Ok(serde_json::to_string_pretty(&serde_json::json!({
            "verdict": verdict,
            "acceptability": plan,
            "text": body,
        }))
        .expect("plan serializes")),
    }
}

/// Canonical form for comparing generated text with reference passages:
/// typographic and doubled quotes become straight ones, whitespace runs
/// become one space, and no whitespace is left before `, . ; : ! ?`.
pub fn normalize(text: &str) -> String {
    let quoted = text
        .replace("``", "\"")
        .replace("''", "\"")
        .replace(['“', '”'], "\"")
        .replace(['‘', '’'], "'");
    let collapsed = quoted.split_whitespace().collect::<Vec<_>>().join(" ");
    let mut out = String::with_capacity(collapsed.len());
    for c in collapsed.chars() {
        if matches!(c, ',' | '.' | ';' | ':' | '!' | '?') && out.ends_with(' ') {
            out.pop();
        }
        out.push(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nlg::{Message, MessageRole};

    fn prop(atom: &str, text: &str) -> PlanNode {
        PlanNode::leaf(Message {
            atom: atom.into(),
            surface: text.into(),
            role: MessageRole::Premise,
            source: None,
        })
    }

    #[test]
    fn leaf_is_verbatim() {
        let cfg = RealizationConfig {
            show_tags: false,
            ..Default::default()
        };
        assert_eq!(realize(&prop("p", "Rain, maybe."), &cfg).unwrap(), "Rain, maybe.");
    }

    #[test]
    fn inline_evidence_attaches_to_the_tag() {
        let plan = PlanNode::relation(
            RelationKind::Evidence,
            Direction::Backward,
            prop("q", "Q holds."),
            vec![prop("p", "for instance p")],
        );
        let text = realize(&plan, &RealizationConfig::default()).unwrap();
        assert_eq!(text, "Q holds. [q], e.g. for instance p [p]");
        let separate = RealizationConfig {
            aggregation: false,
            ..Default::default()
        };
        assert_eq!(
            realize(&plan, &separate).unwrap(),
            "Q holds. [q] For example, for instance p [p]"
        );
    }

    #[test]
    fn antithesis_closes_its_span() {
        let plan = PlanNode::relation(
            RelationKind::Antithesis,
            Direction::Backward,
            prop("a", "A."),
            vec![prop("b", "but b")],
        );
        assert_eq!(
            realize(&plan, &RealizationConfig::default()).unwrap(),
            "A. [a] However, but b [b]."
        );
    }

    #[test]
    fn missing_marker_is_reported() {
        let mut cfg = RealizationConfig::default();
        cfg.lexicon
            .remove(RelationKind::Conjunction, None, MarkerContext::Inline);
        let plan = PlanNode::relation(
            RelationKind::Conjunction,
            Direction::Backward,
            prop("a", "a"),
            vec![prop("b", "b")],
        );
        assert!(matches!(realize(&plan, &cfg), Err(NlgError::MissingMarker { .. })));
    }

    #[test]
    fn markdown_bolds_markers() {
        let plan = PlanNode::relation(
            RelationKind::Justify,
            Direction::Forward,
            prop("q", "q"),
            vec![prop("p", "p")],
        );
        let cfg = RealizationConfig {
            format: OutputFormat::Markdown,
            ..Default::default()
        };
        assert_eq!(realize(&plan, &cfg).unwrap(), "p [p] **Therefore** q [q]");
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize("a  ``b''\n ,  c “d” ‘e’ ."), "a \"b\", c \"d\" 'e'.");
    }
}
