//! Independent reference implementations, deliberately naive.

use std::collections::BTreeSet;

use argnlg_core::af::{ArgId, ArgumentationFramework};
use argnlg_core::logic::{Formula, KnowledgeBase, Literal, SimpleRule, Support};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A framework as a size plus attack pairs over `0..n`.
#[derive(Debug, Clone)]
pub struct RawAf {
    pub n: usize,
    pub attacks: Vec<(usize, usize)>,
}

impl RawAf {
    pub fn random(rng: &mut ChaCha8Rng, max_n: usize) -> Self {
        let n = rng.gen_range(0..=max_n);
        let p: f64 = rng.gen_range(0.05..0.5);
        let mut attacks = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if rng.gen_bool(p) {
                    attacks.push((i, j));
                }
            }
        }
        RawAf { n, attacks }
    }

    pub fn name(i: usize) -> ArgId {
        ArgId::new(format!("x{i}"))
    }

    pub fn to_framework(&self) -> ArgumentationFramework {
        ArgumentationFramework::new(
            (0..self.n).map(Self::name),
            self.attacks.iter().map(|&(a, b)| (Self::name(a), Self::name(b))),
        )
        .unwrap()
    }

    fn attacks(&self, a: usize, b: usize) -> bool {
        self.attacks.contains(&(a, b))
    }

    fn in_set(s: u32, a: usize) -> bool {
        s & (1 << a) != 0
    }

    fn conflict_free(&self, s: u32) -> bool {
        self.attacks
            .iter()
            .all(|&(a, b)| !(Self::in_set(s, a) && Self::in_set(s, b)))
    }

    fn defends(&self, s: u32, a: usize) -> bool {
        (0..self.n)
            .filter(|&b| self.attacks(b, a))
            .all(|b| (0..self.n).any(|c| Self::in_set(s, c) && self.attacks(c, b)))
    }

    fn admissible(&self, s: u32) -> bool {
        self.conflict_free(s) && (0..self.n).all(|a| !Self::in_set(s, a) || self.defends(s, a))
    }

    fn subsets(&self) -> impl Iterator<Item = u32> {
        0..(1u32 << self.n)
    }

    pub fn complete(&self) -> BTreeSet<u32> {
        self.subsets()
            .filter(|&s| {
                self.admissible(s) && (0..self.n).all(|a| !self.defends(s, a) || Self::in_set(s, a))
            })
            .collect()
    }

    pub fn preferred(&self) -> BTreeSet<u32> {
        let adm: Vec<u32> = self.subsets().filter(|&s| self.admissible(s)).collect();
        adm.iter()
            .copied()
            .filter(|&s| !adm.iter().any(|&t| t != s && t & s == s))
            .collect()
    }

    pub fn grounded(&self) -> BTreeSet<u32> {
        let complete = self.complete();
        complete
            .iter()
            .copied()
            .filter(|&s| complete.iter().all(|&t| t & s == s))
            .collect()
    }

    pub fn stable(&self) -> BTreeSet<u32> {
        self.subsets()
            .filter(|&s| {
                self.conflict_free(s)
                    && (0..self.n).all(|a| {
                        Self::in_set(s, a) || (0..self.n).any(|b| Self::in_set(s, b) && self.attacks(b, a))
                    })
            })
            .collect()
    }

    pub fn masks(&self, extensions: &[BTreeSet<ArgId>]) -> BTreeSet<u32> {
        extensions
            .iter()
            .map(|e| {
                (0..self.n)
                    .filter(|&i| e.contains(&Self::name(i)))
                    .fold(0u32, |m, i| m | (1 << i))
            })
            .collect()
    }
}

/// Simple consequence, by direct recursion: some rule in
/// `phi` concludes `goal` and each antecedent is in `phi` or follows from
/// it in the same way. Only sound on acyclic rule sets.
pub fn derives(phi: &Support, goal: &Literal) -> bool {
    phi.iter().filter_map(Formula::as_rule).any(|r| {
        &r.consequent == goal
            && r.antecedents
                .iter()
                .all(|a| phi.contains(&Formula::Literal(a.clone())) || derives(phi, a))
    })
}

pub fn entails(kb: &KnowledgeBase, goal: &Literal) -> bool {
    kb.facts.contains(goal) || derives(&kb.formulas(), goal)
}

/// Every strict subset of `support` fails to derive `claim`.
pub fn exhaustively_minimal(support: &Support, claim: &Literal) -> bool {
    let items: Vec<&Formula> = support.iter().collect();
    let full = (1u32 << items.len()) - 1;
    (0..full).all(|mask| {
        let sub: Support = items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, f)| (*f).clone())
            .collect();
        !derives(&sub, claim)
    })
}

/// Random acyclic base: rules only conclude atoms with a higher index than
/// any of their antecedents.
pub fn random_kb(rng: &mut ChaCha8Rng, max_atoms: usize, max_rules: usize) -> KnowledgeBase {
    let atoms = rng.gen_range(1..=max_atoms);
    let lit = |rng: &mut ChaCha8Rng, i: usize| {
        let atom = format!("p{i}");
        if rng.gen_bool(0.75) {
            Literal::pos(atom)
        } else {
            Literal::neg(atom)
        }
    };
    let mut facts = Vec::new();
    for i in 0..atoms {
        if rng.gen_bool(0.65) {
            facts.push(lit(rng, i));
        }
    }
    let mut rules = Vec::new();
    if atoms > 1 {
        for _ in 0..rng.gen_range(1..=max_rules) {
            let head = rng.gen_range(1..atoms);
            let k = rng.gen_range(1..=head.min(3));
            let mut body: Vec<usize> = (0..head).collect();
            while body.len() > k {
                body.remove(rng.gen_range(0..body.len()));
            }
            let antecedents = body.into_iter().map(|i| lit(rng, i)).collect();
            rules.push(SimpleRule::new(antecedents, lit(rng, head)).unwrap());
        }
    }
    KnowledgeBase::new(facts, rules)
}

/// All literals mentioned anywhere in the base, both polarities.
pub fn literals_of(kb: &KnowledgeBase) -> Vec<Literal> {
    kb.atoms()
        .into_iter()
        .flat_map(|a| [Literal::pos(a), Literal::neg(a)])
        .collect()
}
