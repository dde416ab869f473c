//! Weighted directed graphs and the Cartesian product.
//!
//! A [`Graph`] stores a square nonnegative adjacency matrix: entry `(i, j)`
//! is the weight of the arc `i -> j`, zero meaning no arc. Undirected edges
//! are stored as two arcs. The matrix is kept in CSR form when fewer than a
//! quarter of the entries are nonzero and densely otherwise; every operation
//! goes through the same abstract interface, so callers never see the
//! difference.

use crate::error::{Error, Result};

/// Density at or above which the adjacency matrix is stored densely.
const DENSE_THRESHOLD: f64 = 0.25;

/// Weighted directed graph on vertices `0..num_vertices`.
#[derive(Debug, Clone)]
pub struct Graph {
    num_vertices: usize,
    storage: Storage,
}

#[derive(Debug, Clone)]
enum Storage {
    /// Row-major `n * n` weight matrix.
    Dense(Vec<f64>),
    /// Compressed sparse rows: `row_ptr` has `n + 1` entries delimiting the
    /// `(col, weight)` pairs of each row.
    Sparse {
        row_ptr: Vec<usize>,
        cols: Vec<usize>,
        weights: Vec<f64>,
    },
}

impl Graph {
    /// Directed path on `n` vertices: arcs `(i, i+1)` with weight 1.
    pub fn directed_path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("directed_path: vertex count must be >= 1"));
        }
        let arcs: Vec<(usize, usize, f64)> =
            (0..n.saturating_sub(1)).map(|i| (i, i + 1, 1.0)).collect();
        Ok(Self::from_arcs(n, &arcs))
    }

    /// Complete graph on `p` vertices: weight 1 between every distinct pair,
    /// in both directions.
    pub fn complete(p: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::invalid("complete: vertex count must be >= 1"));
        }
        let mut arcs = Vec::with_capacity(p * p.saturating_sub(1));
        for i in 0..p {
            for j in 0..p {
                if i != j {
                    arcs.push((i, j, 1.0));
                }
            }
        }
        Ok(Self::from_arcs(p, &arcs))
    }

    /// Graph of `p` isolated vertices (zero adjacency matrix).
    pub fn empty(p: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::invalid("empty: vertex count must be >= 1"));
        }
        Ok(Self::from_arcs(p, &[]))
    }

    /// Wrap a user-supplied square matrix verbatim.
    ///
    /// Rejects non-square input, negative weights, and nonzero diagonal
    /// entries, naming the offending index.
    pub fn from_matrix(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::invalid("from_matrix: matrix is empty"));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::invalid(format!(
                    "from_matrix: row {} has {} columns, expected {} (matrix must be square)",
                    i,
                    row.len(),
                    n
                )));
            }
        }
        let mut arcs = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, &w) in row.iter().enumerate() {
                if !w.is_finite() || w < 0.0 {
                    return Err(Error::invalid(format!(
                        "from_matrix: weight at ({i}, {j}) is {w}, expected a finite nonnegative value"
                    )));
                }
                if i == j && w != 0.0 {
                    return Err(Error::invalid(format!(
                        "from_matrix: diagonal entry at ({i}, {i}) is {w}, self-loops are not allowed"
                    )));
                }
                if w != 0.0 {
                    arcs.push((i, j, w));
                }
            }
        }
        Ok(Self::from_arcs(n, &arcs))
    }

    /// Build from an arc list, choosing sparse or dense storage by density.
    /// Arcs must be in-range, self-loop free, and positive; duplicate arcs
    /// are not expected and would overwrite in dense form, so callers keep
    /// them unique.
    fn from_arcs(n: usize, arcs: &[(usize, usize, f64)]) -> Self {
        debug_assert!(arcs
            .iter()
            .all(|&(i, j, w)| i < n && j < n && i != j && w > 0.0));
        let density = arcs.len() as f64 / (n as f64 * n as f64);
        let storage = if density < DENSE_THRESHOLD {
            let mut by_row: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
            for &(i, j, w) in arcs {
                by_row[i].push((j, w));
            }
            let mut row_ptr = Vec::with_capacity(n + 1);
            let mut cols = Vec::with_capacity(arcs.len());
            let mut weights = Vec::with_capacity(arcs.len());
            row_ptr.push(0);
            for row in &mut by_row {
                row.sort_unstable_by_key(|&(j, _)| j);
                for &(j, w) in row.iter() {
                    cols.push(j);
                    weights.push(w);
                }
                row_ptr.push(cols.len());
            }
            Storage::Sparse {
                row_ptr,
                cols,
                weights,
            }
        } else {
            let mut dense = vec![0.0; n * n];
            for &(i, j, w) in arcs {
                dense[i * n + j] = w;
            }
            Storage::Dense(dense)
        };
        Graph {
            num_vertices: n,
            storage,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Weight of the arc `i -> j` (0 when absent).
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        let n = self.num_vertices;
        assert!(i < n && j < n, "vertex index out of range");
        match &self.storage {
            Storage::Dense(m) => m[i * n + j],
            Storage::Sparse {
                row_ptr,
                cols,
                weights,
            } => {
                let lo = row_ptr[i];
                let hi = row_ptr[i + 1];
                match cols[lo..hi].binary_search(&j) {
                    Ok(k) => weights[lo + k],
                    Err(_) => 0.0,
                }
            }
        }
    }

    /// Number of stored arcs (nonzero matrix entries).
    pub fn arc_count(&self) -> usize {
        match &self.storage {
            Storage::Dense(m) => m.iter().filter(|&&w| w != 0.0).count(),
            Storage::Sparse { cols, .. } => cols.len(),
        }
    }

    /// Sum of all arc weights.
    pub fn total_arc_weight(&self) -> f64 {
        self.arcs().map(|(_, _, w)| w).sum()
    }

    /// Iterate over arcs `(i, j, weight)` in row-major order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        let n = self.num_vertices;
        (0..n).flat_map(move |i| self.row(i).map(move |(j, w)| (i, j, w)))
    }

    /// Nonzero entries `(j, weight)` of row `i`.
    fn row(&self, i: usize) -> Box<dyn Iterator<Item = (usize, f64)> + '_> {
        let n = self.num_vertices;
        match &self.storage {
            Storage::Dense(m) => Box::new(
                m[i * n..(i + 1) * n]
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| w != 0.0)
                    .map(|(j, &w)| (j, w)),
            ),
            Storage::Sparse {
                row_ptr,
                cols,
                weights,
            } => {
                let lo = row_ptr[i];
                let hi = row_ptr[i + 1];
                Box::new(
                    cols[lo..hi]
                        .iter()
                        .copied()
                        .zip(weights[lo..hi].iter().copied()),
                )
            }
        }
    }

    /// Matrix-vector product `y = A x`, so `y_i` accumulates weighted walks
    /// of one arc leaving `i`.
    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        let n = self.num_vertices;
        assert_eq!(x.len(), n, "vector length must match vertex count");
        let mut y = vec![0.0; n];
        match &self.storage {
            Storage::Dense(m) => {
                for i in 0..n {
                    let row = &m[i * n..(i + 1) * n];
                    let mut acc = 0.0;
                    for (j, &w) in row.iter().enumerate() {
                        if w != 0.0 {
                            acc += w * x[j];
                        }
                    }
                    y[i] = acc;
                }
            }
            Storage::Sparse {
                row_ptr,
                cols,
                weights,
            } => {
                for i in 0..n {
                    let mut acc = 0.0;
                    for k in row_ptr[i]..row_ptr[i + 1] {
                        acc += weights[k] * x[cols[k]];
                    }
                    y[i] = acc;
                }
            }
        }
        y
    }

    /// Cartesian product `self □ other`.
    ///
    /// The vertex `(v, v')` with `v` in `self` and `v'` in `other` maps to
    /// flat index `v * other.num_vertices() + v'`. The adjacency matrix is
    /// the Kronecker sum `A ⊗ I + I ⊗ A'`, which connects `(v, v')` to
    /// `(u, u')` exactly when one coordinate is shared and the other pair is
    /// adjacent, carrying weights and arc directions from the factors.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let ng = self.num_vertices;
        let nh = other.num_vertices;
        let n = ng * nh;
        let mut arcs = Vec::with_capacity(self.arc_count() * nh + other.arc_count() * ng);
        for (u, v, w) in self.arcs() {
            for s in 0..nh {
                arcs.push((u * nh + s, v * nh + s, w));
            }
        }
        for (s, t, w) in other.arcs() {
            for u in 0..ng {
                arcs.push((u * nh + s, u * nh + t, w));
            }
        }
        Graph::from_arcs(n, &arcs)
    }

    #[cfg(test)]
    fn is_sparse(&self) -> bool {
        matches!(self.storage, Storage::Sparse { .. })
    }
}

impl PartialEq for Graph {
    /// Semantic equality: same vertex count and identical weights,
    /// regardless of storage form.
    fn eq(&self, other: &Self) -> bool {
        if self.num_vertices != other.num_vertices {
            return false;
        }
        let n = self.num_vertices;
        (0..n).all(|i| (0..n).all(|j| self.weight(i, j) == other.weight(i, j)))
    }
}
