use argnlg_core::nlg::{Direction, LineOrdering, NetworkStrategy};
use proptest::prelude::*;

use argnlg_testkit::invariants::*;

fn ok(check: Check) -> Result<(), TestCaseError> {
    check.map_err(TestCaseError::fail)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn aif_json_round_trip(seed in any::<u64>()) {
        ok(aif_round_trip(&seeded_graph(seed)))?;
    }

    #[test]
    fn compiled_kb_json_round_trip(seed in any::<u64>()) {
        ok(kb_round_trip(&seeded_graph(seed)))?;
    }

    #[test]
    fn iccma_text_round_trip(seed in any::<u64>()) {
        ok(iccma_round_trip(&seeded_af(seed, 10)))?;
    }

    #[test]
    fn rebuts_come_in_pairs(seed in any::<u64>()) {
        ok(rebuts_are_symmetric(&seeded_kb(seed)))?;
    }

    #[test]
    fn expansions_are_valid(seed in any::<u64>()) {
        ok(expansion_is_valid_and_expansive(&seeded_kb(seed)))?;
    }

    #[test]
    fn forward_and_backward_plans_share_messages(seed in any::<u64>(), expand in any::<bool>()) {
        ok(directions_share_messages(&texted_kb(seed), expand))?;
    }

    #[test]
    fn realization_keeps_every_proposition(seed in any::<u64>(), forward in any::<bool>(), enumerate_all in any::<bool>()) {
        let direction = if forward { Direction::Forward } else { Direction::Backward };
        let strategy = if enumerate_all { NetworkStrategy::Enumerate } else { NetworkStrategy::LinesOfReasoning };
        ok(realization_preserves_content(&texted_kb(seed), direction, strategy))?;
    }

    #[test]
    fn each_argument_in_exactly_one_line(seed in any::<u64>(), by_attacks in any::<bool>()) {
        let ordering = if by_attacks { LineOrdering::Attacks } else { LineOrdering::Length };
        ok(lines_partition_arguments(&seeded_kb(seed), ordering))?;
    }

    #[test]
    fn extensions_respect_semantics(seed in any::<u64>()) {
        ok(semantics_invariants(&seeded_af(seed, 8)))?;
    }

    #[test]
    fn issue_classes_move_together(seed in any::<u64>()) {
        ok(issue_classes_are_locked(&seeded_af(seed, 8)))?;
    }

    #[test]
    fn dispute_trees_match_acceptance(seed in any::<u64>()) {
        ok(dispute_trees_agree_with_acceptance(&seeded_af(seed, 8)))?;
    }

    #[test]
    fn acceptability_plans_follow_the_tree(seed in any::<u64>()) {
        ok(acceptability_plans_mention_the_tree(&texted_kb(seed)))?;
    }
}
