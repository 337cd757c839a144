//! Document planning and surface realization.
//!
//! The planner picks content and arranges it into a rhetorical tree; the
//! realizer walks that tree and emits verbatim proposition texts joined by
//! discourse markers. Nothing is paraphrased: every proposition surface is
//! an information-node text, and every other string is a fixed template.

mod lexicon;
mod plan;
mod planner;
mod realize;

use thiserror::Error;

use crate::af::AfError;
use crate::logic::LogicError;

pub use lexicon::{MarkerContext, MarkerKey, MarkerLexicon};
pub use plan::{
    Direction, Message, MessageRole, Plan, PlanDiagnostic, PlanNode, Relation, RelationKind,
};
pub use planner::{
    annotate_dependencies, extract_lines, AcceptabilityPlan, CommunicativeGoal, DependencyGraph,
    ImplicitPremiseMode, LineOfReasoning, LineOrdering, NetworkStrategy, Planner, PlannerConfig,
};
pub use realize::{normalize, realize, realize_acceptability, OutputFormat, RealizationConfig};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NlgError {
    #[error("no discourse marker for {relation:?} ({direction:?}, {context:?})")]
    MissingMarker {
        relation: RelationKind,
        direction: Option<Direction>,
        context: MarkerContext,
    },
    #[error("cannot plan: {0}")]
    Planning(String),
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error(transparent)]
    Af(#[from] AfError),
}
