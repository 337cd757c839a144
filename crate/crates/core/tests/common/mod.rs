use argnlg_core::aif::{parse_graph, AifGraph};

pub const FIXTURE: &str = include_str!("../../fixtures/running_example.json");

pub fn graph() -> AifGraph {
    parse_graph(FIXTURE).expect("fixture parses")
}
