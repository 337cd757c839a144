use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Direction, NlgError, RelationKind};

/// Whether a marker joins two spans inside one sentence or opens a new one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MarkerContext {
    Inline,
    Sentence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MarkerKey {
    pub relation: RelationKind,
    pub direction: Option<Direction>,
    pub context: MarkerContext,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkerLexicon {
    entries: BTreeMap<MarkerKey, String>,
}

impl Default for MarkerLexicon {
    fn default() -> Self {
        use Direction::*;
        use MarkerContext::*;
        use RelationKind::*;
        let mut lex = MarkerLexicon::empty();
        lex.insert(Justify, Some(Forward), Sentence, "Therefore");
        lex.insert(Justify, Some(Backward), Sentence, "Indeed");
        lex.insert(Evidence, Some(Backward), Inline, ", e.g.");
        lex.insert(Evidence, Some(Backward), Sentence, "For example,");
        lex.insert(Evidence, Some(Forward), Inline, "Therefore, generally,");
        lex.insert(Evidence, Some(Forward), Sentence, "Therefore, generally,");
        lex.insert(Antithesis, None, Sentence, "However,");
        lex.insert(Conjunction, None, Inline, "and");
        lex
    }
}

impl MarkerLexicon {
    pub fn empty() -> Self {
        MarkerLexicon {
            entries: BTreeMap::new(),
        }
    }

    pub fn insert(
        &mut self,
        relation: RelationKind,
        direction: Option<Direction>,
        context: MarkerContext,
        marker: impl Into<String>,
    ) {
        self.entries.insert(
            MarkerKey {
                relation,
                direction,
                context,
            },
            marker.into(),
        );
    }

    pub fn remove(&mut self, relation: RelationKind, direction: Option<Direction>, context: MarkerContext) {
        self.entries.remove(&MarkerKey {
            relation,
            direction,
            context,
        });
    }

    pub fn get(
        &self,
        relation: RelationKind,
        direction: Option<Direction>,
        context: MarkerContext,
    ) -> Result<&str, NlgError> {
        let key = MarkerKey {
            relation,
            direction,
            context,
        };
        self.entries
            .get(&key)
            .map(String::as_str)
            .ok_or(NlgError::MissingMarker {
                relation,
                direction,
                context,
            })
    }

    pub fn markers(&self) -> impl Iterator<Item = &str> {
        self.entries.values().map(String::as_str)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn required_entries() {
        let lex = MarkerLexicon::default();
        use Direction::*;
        use MarkerContext::*;
        use RelationKind::*;
        assert_eq!(lex.get(Justify, Some(Forward), Sentence).unwrap(), "Therefore");
        assert_eq!(lex.get(Justify, Some(Backward), Sentence).unwrap(), "Indeed");
        assert_eq!(lex.get(Evidence, Some(Backward), Inline).unwrap(), ", e.g.");
        assert_eq!(lex.get(Antithesis, None, Sentence).unwrap(), "However,");
        assert_eq!(lex.get(Conjunction, None, Inline).unwrap(), "and");
    }

    #[test]
    fn missing_entry_is_an_error() {
        let mut lex = MarkerLexicon::default();
        lex.remove(RelationKind::Antithesis, None, MarkerContext::Sentence);
        assert!(matches!(
            lex.get(RelationKind::Antithesis, None, MarkerContext::Sentence),
            Err(NlgError::MissingMarker { .. })
        ));
    }
}
