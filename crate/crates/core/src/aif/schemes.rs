//! Catalogue of argumentation schemes with known slot templates.
//!
//! Schemes outside the catalogue are accepted with an empty template.

use super::Slot;

pub const ARGUMENT_FROM_EXAMPLE: &str = "argument_from_example";
pub const ARGUMENT_BY_ESTABLISHED_RULE: &str = "argument_by_established_rule";

struct Template {
    name: &'static str,
    premises: &'static [&'static str],
    /// What the text asserts or doubts when a premise is left implicit.
    implicit_subject: &'static str,
}

const CATALOGUE: &[Template] = &[
    Template {
        name: ARGUMENT_FROM_EXAMPLE,
        premises: &["example premise"],
        implicit_subject: "this example is representative",
    },
    Template {
        name: ARGUMENT_BY_ESTABLISHED_RULE,
        premises: &["major premise", "minor premise"],
        implicit_subject: "this is the established rule",
    },
];

fn lookup(name: &str) -> Option<&'static Template> {
    CATALOGUE.iter().find(|t| t.name == name)
}

pub fn is_catalogued(name: &str) -> bool {
    lookup(name).is_some()
}

/// Premise roles are filled in order, one per incoming premise node; the
/// conclusion is always filled.
pub fn slot_template(name: &str, premises_supplied: usize) -> Vec<Slot> {
    let Some(template) = lookup(name) else {
        return Vec::new();
    };
    template
        .premises
        .iter()
        .enumerate()
        .map(|(i, role)| Slot {
            role: role.to_string(),
            filled: i < premises_supplied,
        })
        .chain(std::iter::once(Slot {
            role: "conclusion".to_string(),
            filled: true,
        }))
        .collect()
}

pub fn implicit_subject(name: &str, role: &str) -> String {
    match lookup(name) {
        Some(t) => t.implicit_subject.to_string(),
        None => format!("the {role} holds"),
    }
}

pub fn is_argument_from_example(name: &str) -> bool {
    name == ARGUMENT_FROM_EXAMPLE
}
