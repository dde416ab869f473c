//! Walk-neighborhood averages of graph signals.
//!
//! For a graph signal `x`, the embedding of vertex `i` collects the values
//!
//! ```text
//! y_i(k) = (A^{kL} x)_i / (A^{kL} 1)_i      for k = 0, 1, .., m-1
//! ```
//!
//! i.e. the weighted average of the signal over the endpoints of all walks
//! of `kL` arcs leaving `i`. The powers are applied as iterated
//! matrix-vector products; no dense power of `A` is ever materialized. A
//! vertex with no outgoing walk at some required length carries no complete
//! embedding and is masked out.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Per-vertex embedding rows together with the validity mask.
#[derive(Debug, Clone)]
pub struct NeighborhoodEmbedding {
    num_vertices: usize,
    m: usize,
    /// Row-major `num_vertices x m`; masked entries hold NaN.
    values: Vec<f64>,
    valid: Vec<bool>,
}

impl NeighborhoodEmbedding {
    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Embedding dimension (row length).
    pub fn dimension(&self) -> usize {
        self.m
    }

    /// The embedding vector of vertex `i`. Meaningful only when
    /// [`is_valid`](Self::is_valid) holds; masked entries are NaN.
    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.m..(i + 1) * self.m]
    }

    /// Entry `k` of vertex `i`'s embedding.
    pub fn value(&self, i: usize, k: usize) -> f64 {
        assert!(k < self.m);
        self.values[i * self.m + k]
    }

    /// Whether vertex `i` has walks of every required length and therefore
    /// contributes a pattern.
    pub fn is_valid(&self, i: usize) -> bool {
        self.valid[i]
    }

    /// Number of vertices with a complete embedding.
    pub fn valid_count(&self) -> usize {
        self.valid.iter().filter(|&&v| v).count()
    }
}

/// Build the walk-neighborhood embedding of `x` on `g`.
///
/// Column 0 is the raw signal (`A^0` is the identity); column `k` averages
/// the signal over walks of `k * delay` arcs. The weight normalization is
/// the row sum `(A^{kL} 1)_i`, which reduces to the plain neighbor average
/// whenever the walk counts are 0/1 and extends to weighted graphs.
pub fn neighborhood_embedding(
    g: &Graph,
    x: &[f64],
    m: usize,
    delay: usize,
) -> Result<NeighborhoodEmbedding> {
    if m < 2 {
        return Err(Error::invalid(format!(
            "embedding dimension must be >= 2, got {m}"
        )));
    }
    if delay < 1 {
        return Err(Error::invalid("delay must be >= 1"));
    }
    if delay > crate::pattern::MAX_DELAY {
        return Err(Error::invalid(format!(
            "delay must be <= {}, got {delay}",
            crate::pattern::MAX_DELAY
        )));
    }
    let n = g.num_vertices();
    if x.len() != n {
        return Err(Error::invalid(format!(
            "signal length {} does not match vertex count {}",
            x.len(),
            n
        )));
    }

    let mut values = vec![f64::NAN; n * m];
    let mut valid = vec![true; n];
    for (i, &xi) in x.iter().enumerate() {
        values[i * m] = xi;
    }

    let mut walk_sum = x.to_vec();
    let mut walk_mass = vec![1.0; n];
    for k in 1..m {
        for _ in 0..delay {
            walk_sum = g.matvec(&walk_sum);
            walk_mass = g.matvec(&walk_mass);
        }
        for i in 0..n {
            if walk_mass[i] > 0.0 {
                values[i * m + k] = walk_sum[i] / walk_mass[i];
            } else {
                valid[i] = false;
            }
        }
    }

    Ok(NeighborhoodEmbedding {
        num_vertices: n,
        m,
        values,
        valid,
    })
}
