use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{enumerate, AfError, ArgId, ArgumentationFramework, EnumerationConfig, Semantics};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AcceptanceMode {
    Credulous,
    Skeptical,
}

impl fmt::Display for AcceptanceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AcceptanceMode::Credulous => "credulous",
            AcceptanceMode::Skeptical => "skeptical",
        })
    }
}

impl FromStr for AcceptanceMode {
    type Err = AfError;

    fn from_str(s: &str) -> Result<Self, AfError> {
        match s.to_ascii_lowercase().as_str() {
            "credulous" | "cred" => Ok(AcceptanceMode::Credulous),
            "skeptical" | "sceptical" | "skept" => Ok(AcceptanceMode::Skeptical),
            other => Err(AfError::Parse(format!("unknown acceptance mode `{other}`"))),
        }
    }
}

/// Credulous: in some extension. Skeptical: in every extension, which holds
/// vacuously when there are none (e.g. stable semantics on an odd cycle).
pub fn acceptance(
    af: &ArgumentationFramework,
    arg: &ArgId,
    semantics: Semantics,
    mode: AcceptanceMode,
    config: &EnumerationConfig,
) -> Result<bool, AfError> {
    af.idx(arg)?;
    let result = enumerate(af, semantics, config)?;
    Ok(match mode {
        AcceptanceMode::Credulous => result.extensions.iter().any(|e| e.contains(arg)),
        AcceptanceMode::Skeptical => result.extensions.iter().all(|e| e.contains(arg)),
    })
}
