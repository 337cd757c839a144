//! Sequential fallback against the rayon path: labelling search on single
//! frameworks, a batch of frameworks, and argument construction.

use argnlg_core::af::{enumerate, ArgId, ArgumentationFramework, EnumerationConfig, Semantics};
use argnlg_core::logic::{construct_simple_arguments, KnowledgeBase, Literal, SimpleRule};
use argnlg_core::parallel;
use argnlg_core::Execution;
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn random_af(rng: &mut ChaCha8Rng, n: usize, p: f64) -> ArgumentationFramework {
    let name = |i: usize| ArgId::new(format!("x{i}"));
    let mut attacks = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen_bool(p) {
                attacks.push((name(i), name(j)));
            }
        }
    }
    ArgumentationFramework::new((0..n).map(name), attacks).unwrap()
}

/// Layered rules over `n` atoms: every atom past the first layer has a
/// rule from two atoms of the layer below; half the atoms are facts.
fn layered_kb(rng: &mut ChaCha8Rng, n: usize) -> KnowledgeBase {
    let atom = |i: usize| Literal::pos(format!("p{i}"));
    let facts: Vec<Literal> = (0..n).filter(|i| i % 2 == 0).map(atom).collect();
    let rules = (8..n).map(|i| {
        let a = rng.gen_range(0..i);
        let mut b = rng.gen_range(0..i);
        if b == a {
            b = (a + 1) % i;
        }
        let consequent = if rng.gen_bool(0.1) { atom(i).complement() } else { atom(i) };
        SimpleRule::new(vec![atom(a), atom(b)], consequent).unwrap()
    });
    KnowledgeBase::new(facts, rules)
}

fn single(c: &mut Criterion) {
    let mut group = c.benchmark_group("complete_labellings");
    for n in [12, 16, 20] {
        let af = random_af(&mut ChaCha8Rng::seed_from_u64(n as u64), n, 0.12);
        for (label, execution) in MODES {
            let cfg = EnumerationConfig { max_args: 32, execution };
            group.bench_with_input(BenchmarkId::new(label, n), &af, |b, af| {
                b.iter(|| enumerate(black_box(af), Semantics::Complete, &cfg).unwrap())
            });
        }
    }
    group.finish();
}

fn batch(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let afs: Vec<_> = (0..64).map(|_| random_af(&mut rng, 12, 0.15)).collect();
    let cfg = EnumerationConfig { execution: Execution::Sequential, ..Default::default() };
    let mut group = c.benchmark_group("preferred_batch_64");
    for (label, execution) in MODES {
        group.bench_function(label, |b| {
            b.iter(|| parallel::map(execution, black_box(&afs), |af| enumerate(af, Semantics::Preferred, &cfg).unwrap()))
        });
    }
    group.finish();
}

fn arguments(c: &mut Criterion) {
    let kb = layered_kb(&mut ChaCha8Rng::seed_from_u64(5), 400);
    let mut group = c.benchmark_group("simple_arguments_400_atoms");
    for (label, execution) in MODES {
        group.bench_function(label, |b| b.iter(|| construct_simple_arguments(black_box(&kb), execution)));
    }
    group.finish();
}

criterion_group!(benches, single, batch, arguments);
criterion_main!(benches);
