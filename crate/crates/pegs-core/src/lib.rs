//! Permutation entropy for time series, graph signals, and multivariate
//! signals.
//!
//! The crate provides four related complexity metrics built from ordinal
//! patterns:
//!
//! * classical permutation entropy (PE) of a univariate series,
//! * permutation entropy of a signal on a weighted directed graph (PE_G),
//!   using walk-neighborhood averages in place of time delays,
//! * multivariate permutation entropy from pooled per-channel marginals
//!   (MMSPE), and
//! * multivariate permutation entropy over a Cartesian graph product
//!   (MPE_G), where a directed time path crossed with a channel
//!   interaction graph lets cross-channel relations shape the patterns.
//!
//! Supporting machinery includes the graph type with its Cartesian
//! product, Hénon and Lorenz signal generators for experiments, CSV
//! ingestion, and parameter-sweep drivers.
//!
//! ```
//! use pegs_core::{mpe_graph, EntropyParams, Graph, MultivariateSignal};
//!
//! let u = MultivariateSignal::from_channels(vec![
//!     vec![0.1, 0.9, 0.3, 0.7, 0.2, 0.8],
//!     vec![0.5, 0.4, 0.6, 0.3, 0.7, 0.1],
//! ])
//! .unwrap();
//! let interaction = Graph::complete(2).unwrap();
//! let h = mpe_graph(&u, &interaction, EntropyParams::new(2, 1).unwrap()).unwrap();
//! assert!((0.0..=1.0).contains(&h));
//! ```

pub mod csv;
pub mod dynamics;
pub mod embedding;
pub mod entropy;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod pattern;
pub mod signal;

pub use dynamics::{henon, lorenz, HenonParams, LorenzParams, DIVERGENCE_LIMIT};
pub use embedding::{neighborhood_embedding, NeighborhoodEmbedding};
pub use entropy::{
    mmspe, mmspe_distribution, mpe_graph, mpe_graph_distribution, pe_distribution, pe_graph,
    pe_graph_distribution, permutation_entropy, signal_graph,
};
pub use error::{Error, Result};
pub use experiments::{
    henon_sweep, lorenz_entropy_table, HenonPointMetrics, HenonSweepConfig, HenonSweepPoint,
    LorenzTableConfig, LorenzTableRow, MAX_SWEEP_POINTS,
};
pub use graph::Graph;
pub use pattern::{
    normalized_shannon, ordinal_pattern, EntropyParams, OrdinalPattern, PatternDistribution,
    MAX_DELAY, MAX_EMBEDDING_DIMENSION,
};
pub use signal::MultivariateSignal;
