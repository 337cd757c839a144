use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{AfError, ArgId, ArgumentationFramework, EnumerationConfig};
use crate::parallel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    In,
    Out,
    Undec,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::In => "in",
            Label::Out => "out",
            Label::Undec => "undec",
        })
    }
}

pub type Labelling = BTreeMap<ArgId, Label>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Semantics {
    Complete,
    Preferred,
    Grounded,
    Stable,
}

impl Semantics {
    pub const ALL: [Semantics; 4] = [
        Semantics::Complete,
        Semantics::Preferred,
        Semantics::Grounded,
        Semantics::Stable,
    ];
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Semantics::Complete => "complete",
            Semantics::Preferred => "preferred",
            Semantics::Grounded => "grounded",
            Semantics::Stable => "stable",
        })
    }
}

impl FromStr for Semantics {
    type Err = AfError;

    fn from_str(s: &str) -> Result<Self, AfError> {
        match s.to_ascii_lowercase().as_str() {
            "complete" | "co" => Ok(Semantics::Complete),
            "preferred" | "pr" => Ok(Semantics::Preferred),
            "grounded" | "gr" => Ok(Semantics::Grounded),
            "stable" | "st" => Ok(Semantics::Stable),
            other => Err(AfError::Parse(format!("unknown semantics `{other}`"))),
        }
    }
}

/// Extensions (sorted) with the labelling of each, index for index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemanticsResult {
    pub semantics: Semantics,
    pub extensions: Vec<BTreeSet<ArgId>>,
    pub labellings: Vec<Labelling>,
}

const IN: u8 = 1;
const OUT: u8 = 2;
const UND: u8 = 4;
const ANY: u8 = IN | OUT | UND;

/// Top-of-search frontier size before handing subtrees to the pool.
const FRONTIER: usize = 64;

fn label_of(bit: u8) -> Label {
    match bit {
        IN => Label::In,
        OUT => Label::Out,
        _ => Label::Undec,
    }
}

/// Narrows every domain until nothing changes. `false` on a wipe-out.
fn propagate(af: &ArgumentationFramework, dom: &mut [u8]) -> bool {
    let mut changed = true;
    while changed {
        changed = false;
        for x in 0..dom.len() {
            let d = dom[x];
            if d == 0 {
                return false;
            }
            let atts = af.attackers_idx(x);
            let some_in_fixed = atts.iter().any(|&y| dom[y] == IN);
            let all_out_fixed = atts.iter().all(|&y| dom[y] == OUT);
            let some_can_in = atts.iter().any(|&y| dom[y] & IN != 0);
            let all_can_out = atts.iter().all(|&y| dom[y] & OUT != 0);
            let some_can_und = atts.iter().any(|&y| dom[y] & UND != 0);

            let mut nd = d;
            if !all_can_out || some_in_fixed {
                nd &= !IN;
            }
            if !some_can_in {
                nd &= !OUT;
            }
            if some_in_fixed || !some_can_und || all_out_fixed {
                nd &= !UND;
            }
            if all_out_fixed {
                nd &= IN;
            }
            if some_in_fixed {
                nd &= OUT;
            }
            if nd == 0 {
                return false;
            }
            if nd != d {
                dom[x] = nd;
                changed = true;
            }
            // push requirements back onto attackers
            match nd {
                IN | UND => {
                    let keep = if nd == IN { OUT } else { !IN };
                    for &y in atts {
                        let before = dom[y];
                        dom[y] &= keep;
                        if dom[y] == 0 {
                            return false;
                        }
                        changed |= dom[y] != before;
                    }
                }
                OUT => {
                    let mut candidates = atts.iter().filter(|&&y| dom[y] & IN != 0);
                    if let (Some(&only), None) = (candidates.next(), candidates.next()) {
                        if dom[only] != IN {
                            dom[only] = IN;
                            changed = true;
                        }
                    }
                }
                _ => {}
            }
        }
    }
    true
}

fn legal(af: &ArgumentationFramework, labels: &[u8]) -> bool {
    (0..labels.len()).all(|x| {
        let atts = af.attackers_idx(x);
        let some_in = atts.iter().any(|&y| labels[y] == IN);
        let all_out = atts.iter().all(|&y| labels[y] == OUT);
        match labels[x] {
            IN => all_out,
            OUT => some_in,
            _ => !all_out && !some_in,
        }
    })
}

enum Step {
    Dead,
    Done(Vec<u8>),
    Branch(Vec<Vec<u8>>),
}

fn step(af: &ArgumentationFramework, mut dom: Vec<u8>) -> Step {
    if !propagate(af, &mut dom) {
        return Step::Dead;
    }
    match dom.iter().position(|d| d.count_ones() > 1) {
        None => {
            if legal(af, &dom) {
                Step::Done(dom)
            } else {
                Step::Dead
            }
        }
        Some(x) => Step::Branch(
            [IN, OUT, UND]
                .into_iter()
                .filter(|&v| dom[x] & v != 0)
                .map(|v| {
                    let mut child = dom.clone();
                    child[x] = v;
                    child
                })
                .collect(),
        ),
    }
}

fn search(af: &ArgumentationFramework, dom: Vec<u8>, out: &mut Vec<Vec<u8>>) {
    let mut stack = vec![dom];
    while let Some(d) = stack.pop() {
        match step(af, d) {
            Step::Dead => {}
            Step::Done(l) => out.push(l),
            Step::Branch(children) => stack.extend(children.into_iter().rev()),
        }
    }
}

fn complete_labellings(af: &ArgumentationFramework, config: &EnumerationConfig) -> Vec<Vec<u8>> {
    let mut done = Vec::new();
    let mut frontier = vec![vec![ANY; af.len()]];
    if config.execution.is_parallel() {
        while !frontier.is_empty() && frontier.len() < FRONTIER {
            let mut next = Vec::new();
            for d in frontier {
                match step(af, d) {
                    Step::Dead => {}
                    Step::Done(l) => done.push(l),
                    Step::Branch(children) => next.extend(children),
                }
            }
            frontier = next;
        }
    }
    let subtrees = parallel::map(config.execution, &frontier, |d| {
        let mut out = Vec::new();
        search(af, d.clone(), &mut out);
        out
    });
    done.extend(subtrees.into_iter().flatten());
    done.sort();
    done.dedup();
    done
}

fn grounded_labels(af: &ArgumentationFramework) -> Vec<u8> {
    let n = af.len();
    let mut in_set = vec![false; n];
    loop {
        let next: Vec<bool> = (0..n)
            .map(|x| super::acceptable_mask(af, x, &in_set))
            .collect();
        if next == in_set {
            break;
        }
        in_set = next;
    }
    (0..n)
        .map(|x| {
            if in_set[x] {
                IN
            } else if af.attackers_idx(x).iter().any(|&y| in_set[y]) {
                OUT
            } else {
                UND
            }
        })
        .collect()
}

fn in_set_of(af: &ArgumentationFramework, labels: &[u8]) -> BTreeSet<ArgId> {
    labels
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == IN)
        .map(|(i, _)| af.arguments()[i].clone())
        .collect()
}

fn to_labelling(af: &ArgumentationFramework, labels: &[u8]) -> Labelling {
    af.arguments()
        .iter()
        .cloned()
        .zip(labels.iter().map(|&l| label_of(l)))
        .collect()
}

/// Whether `labelling` is a complete labelling of `af`: total, and each
/// argument is in iff all attackers are out, out iff some attacker is in.
pub fn is_complete_labelling(af: &ArgumentationFramework, labelling: &Labelling) -> bool {
    if labelling.len() != af.len() {
        return false;
    }
    let mut labels = Vec::with_capacity(af.len());
    for a in af.arguments() {
        match labelling.get(a) {
            Some(Label::In) => labels.push(IN),
            Some(Label::Out) => labels.push(OUT),
            Some(Label::Undec) => labels.push(UND),
            None => return false,
        }
    }
    legal(af, &labels)
}

/// All extensions of `af` under `semantics`. Grounded is computed as a
/// least fixpoint and never hits the size bound; the other semantics
/// enumerate complete labellings and refuse frameworks larger than
/// `config.max_args`.
pub fn enumerate(
    af: &ArgumentationFramework,
    semantics: Semantics,
    config: &EnumerationConfig,
) -> Result<SemanticsResult, AfError> {
    let raw: Vec<Vec<u8>> = match semantics {
        Semantics::Grounded => vec![grounded_labels(af)],
        _ => {
            if af.len() > config.max_args {
                return Err(AfError::SizeLimitExceeded {
                    size: af.len(),
                    limit: config.max_args,
                });
            }
            let complete = complete_labellings(af, config);
            match semantics {
                Semantics::Complete => complete,
                Semantics::Stable => complete
                    .into_iter()
                    .filter(|l| !l.contains(&UND))
                    .collect(),
                _ => {
                    let sets: Vec<BTreeSet<ArgId>> =
                        complete.iter().map(|l| in_set_of(af, l)).collect();
                    complete
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| {
                            !sets
                                .iter()
                                .any(|s| sets[*i].len() < s.len() && sets[*i].is_subset(s))
                        })
                        .map(|(_, l)| l.clone())
                        .collect()
                }
            }
        }
    };
    let mut pairs: Vec<(BTreeSet<ArgId>, Labelling)> = raw
        .iter()
        .map(|l| (in_set_of(af, l), to_labelling(af, l)))
        .collect();
    pairs.sort();
    pairs.dedup();
    let (extensions, labellings) = pairs.into_iter().unzip();
    Ok(SemanticsResult {
        semantics,
        extensions,
        labellings,
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::f_m;
    use super::super::id_set;
    use super::*;
    use crate::parallel::Execution;

    fn ext(af: &ArgumentationFramework, s: Semantics) -> Vec<BTreeSet<ArgId>> {
        enumerate(af, s, &EnumerationConfig::default()).unwrap().extensions
    }

    #[test]
    fn running_example_extensions() {
        let af = f_m();
        assert_eq!(
            ext(&af, Semantics::Complete),
            vec![id_set(["a"]), id_set(["a", "b", "c"]), id_set(["a", "d"])]
        );
        assert_eq!(
            ext(&af, Semantics::Preferred),
            vec![id_set(["a", "b", "c"]), id_set(["a", "d"])]
        );
        assert_eq!(ext(&af, Semantics::Stable), ext(&af, Semantics::Preferred));
        assert_eq!(ext(&af, Semantics::Grounded), vec![id_set(["a"])]);
    }

    #[test]
    fn odd_cycle_has_no_stable_extension() {
        let af = ArgumentationFramework::from_strs(
            ["a", "b", "c"],
            [("a", "b"), ("b", "c"), ("c", "a")],
        )
        .unwrap();
        assert!(ext(&af, Semantics::Stable).is_empty());
        assert_eq!(ext(&af, Semantics::Preferred), vec![BTreeSet::new()]);
        assert_eq!(ext(&af, Semantics::Grounded), vec![BTreeSet::new()]);
    }

    #[test]
    fn self_attacker_is_undecided() {
        let af = ArgumentationFramework::from_strs(["a", "b"], [("a", "a"), ("a", "b")]).unwrap();
        let r = enumerate(&af, Semantics::Complete, &EnumerationConfig::default()).unwrap();
        assert_eq!(r.extensions, vec![BTreeSet::new()]);
        assert_eq!(r.labellings[0][&ArgId::from("b")], Label::Undec);
    }

    #[test]
    fn empty_framework() {
        let af = ArgumentationFramework::from_strs([], []).unwrap();
        for s in Semantics::ALL {
            assert_eq!(ext(&af, s), vec![BTreeSet::new()], "{s}");
        }
    }

    #[test]
    fn size_bound() {
        let names: Vec<String> = (0..25).map(|i| format!("x{i}")).collect();
        let af = ArgumentationFramework::new(names.iter().map(|s| ArgId::new(s.clone())), [])
            .unwrap();
        assert_eq!(
            enumerate(&af, Semantics::Preferred, &EnumerationConfig::default()),
            Err(AfError::SizeLimitExceeded { size: 25, limit: 20 })
        );
        assert_eq!(ext(&af, Semantics::Grounded)[0].len(), 25);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        // a ring of mutual attacks has many complete labellings
        let n = 12;
        let names: Vec<String> = (0..n).map(|i| format!("r{i}")).collect();
        let attacks = (0..n).flat_map(|i| {
            let (a, b) = (names[i].clone(), names[(i + 1) % n].clone());
            [(ArgId::new(a.clone()), ArgId::new(b.clone())), (ArgId::new(b), ArgId::new(a))]
        });
        let af = ArgumentationFramework::new(names.iter().map(|s| ArgId::new(s.clone())), attacks)
            .unwrap();
        let seq = EnumerationConfig { execution: Execution::Sequential, ..Default::default() };
        let par = EnumerationConfig { execution: Execution::Parallel, ..Default::default() };
        assert_eq!(
            enumerate(&af, Semantics::Complete, &seq).unwrap(),
            enumerate(&af, Semantics::Complete, &par).unwrap()
        );
    }

    #[test]
    fn labellings_are_complete() {
        let af = f_m();
        let r = enumerate(&af, Semantics::Complete, &EnumerationConfig::default()).unwrap();
        assert!(r.labellings.iter().all(|l| is_complete_labelling(&af, l)));
        let mut bad = r.labellings[0].clone();
        bad.insert("a".into(), Label::Out);
        assert!(!is_complete_labelling(&af, &bad));
    }
}
