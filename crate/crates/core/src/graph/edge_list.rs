use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("edge list is empty; expected a vertex count")]
    Empty,
    #[error("token {index} ({token:?}) is not a non-negative integer")]
    BadToken { index: usize, token: String },
    #[error("odd number of endpoint tokens after the vertex count")]
    OddTokenCount,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses `"n a0 b0 a1 b1 .."`: a vertex count followed by endpoint pairs.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut nums = Vec::new();
    for (index, tok) in text.split_whitespace().enumerate() {
        let v = tok.parse::<usize>().map_err(|_| EdgeListError::BadToken {
            index,
            token: tok.to_string(),
        })?;
        nums.push(v);
    }
    let (&n, rest) = nums.split_first().ok_or(EdgeListError::Empty)?;
    if rest.len() % 2 != 0 {
        return Err(EdgeListError::OddTokenCount);
    }
    let edges = rest.chunks_exact(2).map(|p| (p[0], p[1]));
    Ok(Graph::from_edges(n, edges)?)
}
