use std::time::Duration;

use super::{parse_graph, AifError, AifGraph};

pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(10);

/// Downloads `GET {endpoint}/{graph_id}` and parses the body as AIF-JSON.
pub fn fetch_graph(endpoint: &str, graph_id: &str) -> Result<AifGraph, AifError> {
    fetch_graph_with_timeout(endpoint, graph_id, DEFAULT_TIMEOUT)
}

pub fn fetch_graph_with_timeout(
    endpoint: &str,
    graph_id: &str,
    timeout: Duration,
) -> Result<AifGraph, AifError> {
    let body = fetch_payload(endpoint, graph_id, timeout)?;
    parse_graph(&body)
}

/// Raw body of `GET {endpoint}/{graph_id}`, unparsed.
pub fn fetch_payload(endpoint: &str, graph_id: &str, timeout: Duration) -> Result<String, AifError> {
    if graph_id.trim().is_empty() {
        return Err(AifError::SchemaViolation("graph id is empty".into()));
    }
    let url = format!("{}/{}", endpoint.trim_end_matches('/'), graph_id);
    let agent = ureq::AgentBuilder::new().timeout(timeout).build();
    match agent.get(&url).call() {
        Ok(resp) => resp
            .into_string()
            .map_err(|e| AifError::NetworkError(format!("{url}: {e}"))),
        Err(ureq::Error::Status(status, _)) => Err(AifError::RemoteError { status }),
        Err(ureq::Error::Transport(t)) => Err(AifError::NetworkError(format!("{url}: {t}"))),
    }
}
