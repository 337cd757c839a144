use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{enumerate, AfError, ArgId, ArgumentationFramework, EnumerationConfig, Label, Semantics};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Same,
    Opposite,
}

/// Arguments whose labels move together (or in mirror) across every
/// complete labelling. Polarity is relative to `representative`, the
/// smallest member.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IssueClass {
    pub members: BTreeSet<ArgId>,
    pub representative: ArgId,
    pub polarity: BTreeMap<ArgId, Polarity>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IssuePartition {
    pub classes: Vec<IssueClass>,
    /// Number of complete labellings the partition was computed from.
    pub labellings: usize,
}

impl IssuePartition {
    pub fn class_of(&self, a: &ArgId) -> Option<&IssueClass> {
        self.classes.iter().find(|c| c.members.contains(a))
    }
}

fn mirror(l: Label) -> Label {
    match l {
        Label::In => Label::Out,
        Label::Out => Label::In,
        Label::Undec => Label::Undec,
    }
}

/// Groups arguments whose label vectors over all complete labellings are
/// identical or exact in/out mirrors of each other.
pub fn issues(af: &ArgumentationFramework, config: &EnumerationConfig) -> Result<IssuePartition, AfError> {
    let complete = enumerate(af, Semantics::Complete, config)?;
    let vector = |a: &ArgId| -> Vec<Label> { complete.labellings.iter().map(|l| l[a]).collect() };

    let mut groups: BTreeMap<Vec<Label>, Vec<(ArgId, Vec<Label>)>> = BTreeMap::new();
    for a in af.arguments() {
        let v = vector(a);
        let m: Vec<Label> = v.iter().copied().map(mirror).collect();
        let key = v.clone().min(m);
        groups.entry(key).or_default().push((a.clone(), v));
    }

    let mut classes: Vec<IssueClass> = groups
        .into_values()
        .map(|mut members| {
            members.sort_by(|x, y| x.0.cmp(&y.0));
            let (rep, rep_vec) = members[0].clone();
            let polarity = members
                .iter()
                .map(|(a, v)| {
                    let p = if *v == rep_vec { Polarity::Same } else { Polarity::Opposite };
                    (a.clone(), p)
                })
                .collect();
            IssueClass {
                members: members.into_iter().map(|(a, _)| a).collect(),
                representative: rep,
                polarity,
            }
        })
        .collect();
    classes.sort();
    Ok(IssuePartition {
        classes,
        labellings: complete.labellings.len(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FocusKind {
    /// A whole class whose size matches the extension count.
    Class,
    /// The members of a class that attack into a different extension.
    CrossExtension,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IssueFocus {
    pub members: BTreeSet<ArgId>,
    pub class: IssueClass,
    pub kind: FocusKind,
    pub extensions: Vec<BTreeSet<ArgId>>,
}

/// An issue to centre an explanation of the `semantics` extensions on.
///
/// Prefers the smallest class (canonical order) with as many members as
/// there are extensions. Failing that, looks inside each class for the
/// members that sit in one extension and attack a member of another; the
/// first such core matching the extension count wins, else the first
/// non-empty core. `None` when neither exists.
pub fn issue_foci(
    af: &ArgumentationFramework,
    semantics: Semantics,
    config: &EnumerationConfig,
) -> Result<Option<IssueFocus>, AfError> {
    let partition = issues(af, config)?;
    let extensions = enumerate(af, semantics, config)?.extensions;
    let k = extensions.len();

    if let Some(class) = partition.classes.iter().find(|c| c.members.len() == k) {
        return Ok(Some(IssueFocus {
            members: class.members.clone(),
            class: class.clone(),
            kind: FocusKind::Class,
            extensions,
        }));
    }

    let mut cores: Vec<(BTreeSet<ArgId>, &IssueClass)> = partition
        .classes
        .iter()
        .map(|class| {
            let core = class
                .members
                .iter()
                .filter(|x| {
                    extensions.iter().enumerate().any(|(i, e)| {
                        e.contains(*x)
                            && extensions.iter().enumerate().any(|(j, other)| {
                                i != j
                                    && other
                                        .iter()
                                        .any(|y| !e.contains(y) && af.attacks_pair(x, y))
                            })
                    })
                })
                .cloned()
                .collect();
            (core, class)
        })
        .filter(|(core, _): &(BTreeSet<ArgId>, _)| !core.is_empty())
        .collect();
    cores.sort_by(|a, b| (a.0.len() != k).cmp(&(b.0.len() != k)).then_with(|| a.0.cmp(&b.0)));
    Ok(cores.into_iter().next().map(|(members, class)| IssueFocus {
        members,
        class: class.clone(),
        kind: FocusKind::CrossExtension,
        extensions,
    }))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::f_m;
    use super::super::id_set;
    use super::*;

    #[test]
    fn running_example_partition() {
        let p = issues(&f_m(), &EnumerationConfig::default()).unwrap();
        assert_eq!(p.labellings, 3);
        let members: Vec<BTreeSet<ArgId>> = p.classes.iter().map(|c| c.members.clone()).collect();
        assert_eq!(members, vec![id_set(["a"]), id_set(["b", "c", "d"])]);
        let bd = &p.classes[1];
        assert_eq!(bd.polarity[&ArgId::from("b")], Polarity::Same);
        assert_eq!(bd.polarity[&ArgId::from("c")], Polarity::Same);
        assert_eq!(bd.polarity[&ArgId::from("d")], Polarity::Opposite);
    }

    #[test]
    fn no_attacks_one_class() {
        let af = ArgumentationFramework::from_strs(["x", "y", "z"], []).unwrap();
        let p = issues(&af, &EnumerationConfig::default()).unwrap();
        assert_eq!(p.classes.len(), 1);
        assert!(p.classes[0].polarity.values().all(|&p| p == Polarity::Same));
    }

    #[test]
    fn self_attacker_alone() {
        let af = ArgumentationFramework::from_strs(["s"], [("s", "s")]).unwrap();
        let p = issues(&af, &EnumerationConfig::default()).unwrap();
        assert_eq!(p.classes.len(), 1);
        assert_eq!(p.labellings, 1);
    }

    #[test]
    fn foci() {
        let af = f_m();
        let cfg = EnumerationConfig::default();
        let pr = issue_foci(&af, Semantics::Preferred, &cfg).unwrap().unwrap();
        assert_eq!(pr.members, id_set(["b", "d"]));
        assert_eq!(pr.kind, FocusKind::CrossExtension);
        let gr = issue_foci(&af, Semantics::Grounded, &cfg).unwrap().unwrap();
        assert_eq!(gr.members, id_set(["a"]));
        assert_eq!(gr.kind, FocusKind::Class);

        let single = ArgumentationFramework::from_strs(["x"], []).unwrap();
        let f = issue_foci(&single, Semantics::Preferred, &cfg).unwrap().unwrap();
        assert_eq!(f.members, id_set(["x"]));
    }
}
