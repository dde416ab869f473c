//! The four permutation-entropy metrics.
//!
//! * [`permutation_entropy`] — classical PE of one time series.
//! * [`pe_graph`] — PE of a signal on an arbitrary weighted directed graph,
//!   patterns taken from walk-neighborhood embeddings.
//! * [`mmspe`] — multivariate PE from per-channel pattern counts pooled
//!   into one marginal distribution, ignoring cross-channel structure.
//! * [`mpe_graph`] — multivariate PE on the Cartesian product of a time
//!   path with a channel interaction graph, so cross-channel relations
//!   shape the patterns.
//!
//! On a directed path `pe_graph` reproduces `permutation_entropy` exactly,
//! and with an edgeless interaction graph `mpe_graph` reproduces [`mmspe`]
//! exactly; both identities are pinned down in the test suites.
//!
//! Every metric returns a value in `[0, 1]`. Each has a `*_distribution`
//! companion exposing the underlying pattern counts.

use crate::embedding::neighborhood_embedding;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{
    normalized_shannon, pattern_key, EntropyParams, PatternDistribution, MAX_EMBEDDING_DIMENSION,
};
use crate::signal::MultivariateSignal;

/// Pattern counts of the classical delay embedding of `x`.
///
/// Windows `(x[i], x[i+L], .., x[i+(m-1)L])` are taken at every start
/// index, yielding exactly `n - (m-1)L` patterns.
pub fn pe_distribution(x: &[f64], params: EntropyParams) -> Result<PatternDistribution> {
    let span = params.span();
    if x.len() < span {
        return Err(Error::invalid(format!(
            "signal length {} is too short for m = {}, L = {}: need at least {} samples",
            x.len(),
            params.m(),
            params.delay(),
            span
        )));
    }
    if let Some(i) = x.iter().position(|v| !v.is_finite()) {
        return Err(Error::invalid(format!(
            "signal has a non-finite value at sample {}",
            i + 1
        )));
    }
    let m = params.m();
    let delay = params.delay();
    let mut dist = PatternDistribution::new(m)?;
    let mut window = [0.0f64; MAX_EMBEDDING_DIMENSION];
    let mut idx = [0u8; MAX_EMBEDDING_DIMENSION];
    for i in 0..=(x.len() - span) {
        for (k, slot) in window[..m].iter_mut().enumerate() {
            *slot = x[i + k * delay];
        }
        dist.add_key(pattern_key(&window[..m], &mut idx[..m]));
    }
    Ok(dist)
}

/// Classical permutation entropy of a univariate signal, in `[0, 1]`.
///
/// ```
/// use pegs_core::{permutation_entropy, EntropyParams};
///
/// let x = [4.0, 7.0, 9.0, 10.0, 6.0, 11.0, 3.0];
/// let h = permutation_entropy(&x, EntropyParams::new(2, 1)?)?;
/// // Six consecutive pairs, four ascents and two descents.
/// assert!((h - 0.9183).abs() < 1e-4);
/// # Ok::<(), pegs_core::Error>(())
/// ```
pub fn permutation_entropy(x: &[f64], params: EntropyParams) -> Result<f64> {
    normalized_shannon(&pe_distribution(x, params)?)
}

/// Pattern counts of a graph signal: one pattern per vertex whose
/// walk-neighborhood embedding is complete.
pub fn pe_graph_distribution(
    g: &Graph,
    x: &[f64],
    params: EntropyParams,
) -> Result<PatternDistribution> {
    if let Some(i) = x.iter().position(|v| !v.is_finite()) {
        return Err(Error::invalid(format!(
            "signal has a non-finite value at vertex {i}"
        )));
    }
    let m = params.m();
    let emb = neighborhood_embedding(g, x, m, params.delay())?;
    let mut dist = PatternDistribution::new(m)?;
    let mut idx = [0u8; MAX_EMBEDDING_DIMENSION];
    for i in 0..emb.num_vertices() {
        if emb.is_valid(i) {
            dist.add_key(pattern_key(emb.row(i), &mut idx[..m]));
        }
    }
    if dist.total() == 0 {
        return Err(Error::NoValidPatterns(format!(
            "no vertex has walks of every length up to {} * {}",
            m - 1,
            params.delay()
        )));
    }
    Ok(dist)
}

/// Permutation entropy of a signal on a graph, in `[0, 1]`.
pub fn pe_graph(g: &Graph, x: &[f64], params: EntropyParams) -> Result<f64> {
    normalized_shannon(&pe_graph_distribution(g, x, params)?)
}

/// Marginal pattern counts of a multivariate signal: per-channel counts
/// pooled into one distribution with total `p * (n - (m-1)L)`.
pub fn mmspe_distribution(
    u: &MultivariateSignal,
    params: EntropyParams,
) -> Result<PatternDistribution> {
    let mut pooled = PatternDistribution::new(params.m())?;
    for s in 0..u.num_channels() {
        let per_channel = pe_distribution(u.channel(s), params)?;
        pooled.merge(&per_channel)?;
    }
    Ok(pooled)
}

/// Multivariate permutation entropy from marginal pattern frequencies,
/// in `[0, 1]`.
pub fn mmspe(u: &MultivariateSignal, params: EntropyParams) -> Result<f64> {
    normalized_shannon(&mmspe_distribution(u, params)?)
}

/// The graph a multivariate signal lives on: the Cartesian product of the
/// directed time path on `n` vertices with the `p`-vertex channel
/// interaction graph. Vertex `(t, s)` sits at flat index `t * p + s`.
pub fn signal_graph(u: &MultivariateSignal, interaction: &Graph) -> Result<Graph> {
    let p = u.num_channels();
    if interaction.num_vertices() != p {
        return Err(Error::invalid(format!(
            "interaction graph has {} vertices but the signal has {} channels",
            interaction.num_vertices(),
            p
        )));
    }
    let path = Graph::directed_path(u.num_samples())?;
    Ok(path.cartesian_product(interaction))
}

/// Pattern counts of [`mpe_graph`]: the signal is flattened time-major onto
/// the product graph and handed to [`pe_graph_distribution`].
pub fn mpe_graph_distribution(
    u: &MultivariateSignal,
    interaction: &Graph,
    params: EntropyParams,
) -> Result<PatternDistribution> {
    let product = signal_graph(u, interaction)?;
    let flat = u.flatten_time_major();
    pe_graph_distribution(&product, &flat, params)
}

/// Multivariate permutation entropy over a channel interaction graph,
/// in `[0, 1]`.
///
/// Notable interaction-graph choices: the complete graph (the default in
/// the CLI and demo) treats all channels as mutually coupled; the edgeless
/// graph reproduces [`mmspe`] exactly; a directed path turns the product
/// into a directed two-dimensional grid, the lattice setting used for
/// image-like regularly sampled 2D data. With a single sample (`n = 1`)
/// the time path is a lone vertex and the product collapses to the
/// interaction graph itself, so the result equals `pe_graph` of the
/// single time slice on the interaction graph.
pub fn mpe_graph(
    u: &MultivariateSignal,
    interaction: &Graph,
    params: EntropyParams,
) -> Result<f64> {
    normalized_shannon(&mpe_graph_distribution(u, interaction, params)?)
}
