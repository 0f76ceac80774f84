//! Error type shared across the crate.

use crate::graph::NodeId;

/// Errors produced by loading, generation, sampling, scoring and evaluation.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An edge-list line could not be parsed.
    #[error("edge list line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The edge list contained no usable edges after cleaning.
    #[error("edge list has no edges left after dropping comments, self-loops and duplicates")]
    EmptyGraph,

    /// A node id outside `0..node_count` was passed to an operation.
    #[error("node {0} is out of range for this graph")]
    UnknownNode(NodeId),

    /// A pair with identical endpoints was scored or evaluated.
    #[error("pair ({0}, {0}) has identical endpoints")]
    IdenticalEndpoints(NodeId),

    /// Parameters that can never produce a valid result.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A walk-based sampler exhausted its step budget before collecting the
    /// target number of edges.
    #[error("{method} did not reach {target} training edges within {budget} steps")]
    StepBudgetExhausted {
        method: &'static str,
        target: usize,
        budget: u64,
    },

    /// A traversal ran out of reachable edges before the target was met;
    /// the input graph is disconnected.
    #[error(
        "{method} ran out of reachable edges at {collected}/{target}; \
         run samplers on a connected component"
    )]
    UnreachableTarget {
        method: &'static str,
        collected: usize,
        target: usize,
    },

    /// The probe set is empty, leaving nothing to evaluate.
    #[error("probe set is empty")]
    EmptyProbe,

    /// Every node pair is an edge, so no nonexistent pair can be drawn.
    #[error("graph is complete: there are no nonexistent pairs to compare against")]
    CompleteGraph,

    /// A candidate pair passed for ranking is already a training edge.
    #[error("candidate ({0}, {1}) is already a training edge")]
    CandidateIsTrainingEdge(NodeId, NodeId),

    /// Histograms with different binning schemes cannot be averaged.
    #[error("cannot average histograms with mixed binning ({0} vs {1})")]
    BinningMismatch(&'static str, &'static str),

    /// An empty histogram list cannot be averaged.
    #[error("cannot average zero histograms")]
    NoHistograms,
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
