use argnlg_core::nlg::{normalize, Direction, ImplicitPremiseMode};

use argnlg_testkit::*;

#[test]
fn forward_without_markers() {
    assert_eq!(
        normalize(&running_passage(Direction::Forward, false, None, false)),
        normalize(&forward_plain())
    );
}

#[test]
fn forward_with_therefore() {
    assert_eq!(
        normalize(&running_passage(Direction::Forward, false, None, true)),
        normalize(&forward_therefore())
    );
}

#[test]
fn backward_with_indeed() {
    assert_eq!(
        normalize(&running_passage(Direction::Backward, false, None, true)),
        normalize(&backward_indeed())
    );
}

#[test]
fn backward_expanded_with_example() {
    assert_eq!(
        normalize(&running_passage(Direction::Backward, true, None, true)),
        normalize(&backward_example())
    );
}

#[test]
fn implicit_minor_premise_improve_mode() {
    assert_eq!(
        normalize(&running_passage(Direction::Backward, false, Some(ImplicitPremiseMode::Improve), true)),
        normalize(&implicit_improve())
    );
}

#[test]
fn implicit_minor_premise_report_mode() {
    let text = running_passage(Direction::Backward, false, Some(ImplicitPremiseMode::Report), true);
    assert!(text.ends_with("[T4] and we assume that this is the established rule."), "{text}");
}

#[test]
fn network_passage() {
    assert_eq!(normalize(&running_network_passage()), normalize(&network()));
}

#[test]
fn fixture_texts_match_reference_surfaces() {
    let (kb, _) = running();
    for (atom, text) in [("T1", T1), ("T2", T2), ("T3", T3), ("T4", T4), ("T5", T5), ("T6", T6), ("T7", T7)] {
        assert_eq!(normalize(&kb.proposition_texts[atom]), normalize(text), "{atom}");
    }
}
