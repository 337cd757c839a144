//! Turn argument networks into structured argumentation and explain them in
//! natural language.
//!
//! The pipeline runs in four stages:
//!
//! - [`aif`]: read and validate Argument Interchange Format graphs.
//! - [`logic`]: compile a graph into a simple-logic knowledge base, build
//!   deductive arguments and their attacks.
//! - [`af`]: abstract argumentation over those arguments: labellings,
//!   extensions, acceptance, issues and dispute trees.
//! - [`nlg`]: plan and realize text for four communicative goals.

pub mod af;
pub mod aif;
pub mod logic;
pub mod nlg;
pub mod parallel;

pub use parallel::Execution;
