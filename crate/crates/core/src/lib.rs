//! Primitives for studying how graph sampling changes measured
//! link-prediction performance.
//!
//! A link-prediction experiment splits a graph's edge set into a training
//! side the predictor may see and a held-out probe side it must recover.
//! When the split comes from a crawling procedure instead of a uniform
//! draw, the probe set is biased, and the measured accuracy of similarity
//! indices shifts. This crate provides the pieces needed to quantify that
//! shift:
//!
//! * [`graph`] — an immutable undirected simple graph, edge-list loading,
//!   giant-component extraction and summary statistics;
//! * [`generate`] — seeded synthetic graphs (ring, complete, uniform
//!   random, preferential attachment with optional triangle closure);
//! * [`sample`] — five edge-partition procedures (BFS, MHRW, frontier,
//!   forest fire, pure random), all producing a training set of exactly
//!   `ceil(s_f * |E|)` edges;
//! * [`measure`] — ten local similarity indices scored from the training
//!   graph only;
//! * [`eval`] — sampled and exact AUC, top-`|probe|` precision, and
//!   probe-set composition histograms.
//!
//! Every randomized routine takes an explicit 64-bit seed and uses a fixed,
//! platform-independent generator, so identical inputs give identical
//! outputs everywhere.
//!
//! Score and statistic arithmetic is generic over the float width through
//! the [`Real`] trait; [`Score`] is the default used by the CLI and tests.

pub mod error;
pub mod eval;
pub mod generate;
pub mod graph;
pub mod measure;
pub mod sample;
pub mod scalar;

pub use error::{Error, Result};
pub use eval::{
    auc_exact, auc_sampled, average_histograms, evaluate, precision, precision_many,
    probe_distribution, Binning, DistributionKind, EvalScore, Histogram,
};
pub use generate::Synthetic;
pub use graph::{
    load_edge_list, Edge, Graph, GraphStats, LoadOptions, LoadReport, LoadedGraph, NodeId,
};
pub use measure::{score, score_all, score_candidates, MeasureId, ScoredPair, ALL_MEASURES};
pub use sample::{
    burn_spread, sample_bfs, sample_ff, sample_fs, sample_mhrw, sample_pr, Partition,
    SamplerMethod, SamplerSpec,
};
pub use scalar::Real;

/// Default scalar type for scores, statistics and evaluation results.
pub type Score = f64;
