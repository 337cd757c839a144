use argnlg_core::af::{enumerate, EnumerationConfig, Semantics};
use argnlg_core::logic::{classify, construct_simple_arguments, entails, Formula};
use argnlg_core::Execution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use argnlg_testkit::oracle::*;

#[test]
fn semantics_match_brute_force_up_to_ten_arguments() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA5);
    for round in 0..150 {
        let raw = RawAf::random(&mut rng, 10);
        let af = raw.to_framework();
        let cfg = EnumerationConfig::default();
        for (sem, expected) in [
            (Semantics::Complete, raw.complete()),
            (Semantics::Preferred, raw.preferred()),
            (Semantics::Grounded, raw.grounded()),
            (Semantics::Stable, raw.stable()),
        ] {
            let got = enumerate(&af, sem, &cfg).unwrap();
            assert_eq!(raw.masks(&got.extensions), expected, "round {round}, {sem}, {raw:?}");
        }
    }
}

#[test]
fn sequential_fallback_matches_parallel() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let af = RawAf::random(&mut rng, 12).to_framework();
        let seq = EnumerationConfig { execution: Execution::Sequential, ..Default::default() };
        let par = EnumerationConfig { execution: Execution::Parallel, ..Default::default() };
        assert_eq!(
            enumerate(&af, Semantics::Complete, &seq).unwrap(),
            enumerate(&af, Semantics::Complete, &par).unwrap()
        );
    }
}

#[test]
fn entailment_and_arguments_match_recursive_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xBEEF);
    for _ in 0..300 {
        let kb = random_kb(&mut rng, 6, 6);
        for lit in literals_of(&kb) {
            assert_eq!(entails(&kb, &lit), argnlg_testkit::oracle::entails(&kb, &lit), "{lit} in {kb:?}");
        }
        let args = construct_simple_arguments(&kb, Execution::Parallel);
        for a in &args {
            assert!(derives(&a.support, &a.claim), "{a}");
            assert!(exhaustively_minimal(&a.support, &a.claim), "{a}");
            assert!(classify(a).simple);
            assert!(a.support.iter().all(|f| match f {
                Formula::Rule(r) => kb.rules.contains(r),
                Formula::Literal(_) => true,
            }));
        }
        // one argument per rule whose antecedents all hold
        let applicable = kb
            .rules
            .iter()
            .filter(|r| r.antecedents.iter().all(|x| argnlg_testkit::oracle::entails(&kb, x)))
            .count();
        assert_eq!(args.len(), applicable, "{kb:?}");
    }
}
