//! Shared test helpers: an independent brute-force implementation of the
//! graph permutation entropy, plus small graph and signal generators.
//!
//! Nothing here touches the library's embedding or pattern code paths: the
//! oracle enumerates walks recursively over a dense adjacency matrix, ranks
//! embedding values with a naive selection scheme, and accumulates pattern
//! counts keyed by the literal rank vectors.

#![allow(dead_code)]

use std::collections::BTreeMap;

use pegs_core::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Dense copy of a graph's adjacency matrix.
pub fn dense_adjacency(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.num_vertices();
    (0..n)
        .map(|i| (0..n).map(|j| g.weight(i, j)).collect())
        .collect()
}

/// Enumerate every directed walk of exactly `len` arcs leaving `start`,
/// returning the weight-multiplied sum of `x` at walk endpoints and the
/// total walk weight.
pub fn walk_sum_and_mass(adj: &[Vec<f64>], start: usize, len: usize, x: &[f64]) -> (f64, f64) {
    if len == 0 {
        return (x[start], 1.0);
    }
    let mut sum = 0.0;
    let mut mass = 0.0;
    for (j, &w) in adj[start].iter().enumerate() {
        if w > 0.0 {
            let (s, m) = walk_sum_and_mass(adj, j, len - 1, x);
            sum += w * s;
            mass += w * m;
        }
    }
    (sum, mass)
}

/// Walk-average embedding of one vertex: `None` when some required walk
/// length has no walks at all.
pub fn naive_embedding_row(
    adj: &[Vec<f64>],
    x: &[f64],
    i: usize,
    m: usize,
    delay: usize,
) -> Option<Vec<f64>> {
    let mut row = Vec::with_capacity(m);
    for k in 0..m {
        let (sum, mass) = walk_sum_and_mass(adj, i, k * delay, x);
        if mass > 0.0 {
            row.push(sum / mass);
        } else {
            return None;
        }
    }
    Some(row)
}

/// Rank positions of `values` ascending, ties by ascending position,
/// selecting minima one at a time. Returns 1-based ranks.
pub fn naive_ranks(values: &[f64]) -> Vec<usize> {
    let m = values.len();
    let mut used = vec![false; m];
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let mut best: Option<usize> = None;
        for c in 0..m {
            if used[c] {
                continue;
            }
            best = match best {
                None => Some(c),
                Some(b) if values[c] < values[b] => Some(c),
                Some(b) => Some(b),
            };
        }
        let b = best.expect("some unused position remains");
        used[b] = true;
        order.push(b + 1);
    }
    order
}

/// Brute-force graph permutation entropy: walk enumeration, naive ranking,
/// plain count map. `None` when no vertex has a complete embedding.
pub fn naive_pe_graph(adj: &[Vec<f64>], x: &[f64], m: usize, delay: usize) -> Option<f64> {
    let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut total = 0u64;
    for i in 0..adj.len() {
        if let Some(row) = naive_embedding_row(adj, x, i, m, delay) {
            *counts.entry(naive_ranks(&row)).or_insert(0) += 1;
            total += 1;
        }
    }
    if total == 0 {
        return None;
    }
    let mut h = 0.0;
    for &c in counts.values() {
        let p = c as f64 / total as f64;
        h -= p * p.ln();
    }
    let ln_fact: f64 = (2..=m).map(|i| (i as f64).ln()).sum();
    Some(h / ln_fact)
}

/// The Cartesian-product adjacency rule applied literally to one vertex
/// pair: `(v, v')` connects to `(u, u')` with the interaction weight when
/// the first coordinates agree and with the time weight when the second
/// coordinates agree.
pub fn product_rule_weight(g: &Graph, h: &Graph, v: usize, vp: usize, u: usize, up: usize) -> f64 {
    let mut w = 0.0;
    if v == u {
        w += h.weight(vp, up);
    }
    if vp == up {
        w += g.weight(v, u);
    }
    w
}

/// Build a graph from an explicit arc list through the public matrix
/// constructor.
pub fn graph_from_arcs(n: usize, arcs: &[(usize, usize, f64)]) -> Graph {
    let mut rows = vec![vec![0.0; n]; n];
    for &(i, j, w) in arcs {
        rows[i][j] = w;
    }
    Graph::from_matrix(&rows).expect("valid arc list")
}

/// Directed cycle: arcs `i -> (i+1) mod n`.
pub fn directed_cycle(n: usize) -> Graph {
    let arcs: Vec<(usize, usize, f64)> = (0..n).map(|i| (i, (i + 1) % n, 1.0)).collect();
    graph_from_arcs(n, &arcs)
}

/// Undirected star with center 0.
pub fn star(n: usize) -> Graph {
    let mut arcs = Vec::new();
    for k in 1..n {
        arcs.push((0, k, 1.0));
        arcs.push((k, 0, 1.0));
    }
    graph_from_arcs(n, &arcs)
}

/// Random directed graph: each ordered pair gets an arc with probability
/// 1/2.
pub fn random_digraph(n: usize, rng: &mut StdRng) -> Graph {
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.random::<bool>() {
                arcs.push((i, j, 1.0));
            }
        }
    }
    graph_from_arcs(n, &arcs)
}

/// Random weighted directed graph with weights in (0, 2].
pub fn random_weighted_digraph(n: usize, edge_prob: f64, rng: &mut StdRng) -> Graph {
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.random::<f64>() < edge_prob {
                arcs.push((i, j, rng.random::<f64>() * 2.0 + f64::MIN_POSITIVE));
            }
        }
    }
    graph_from_arcs(n, &arcs)
}

/// Uniform random signal in [0, 1).
pub fn random_signal(n: usize, rng: &mut StdRng) -> Vec<f64> {
    (0..n).map(|_| rng.random::<f64>()).collect()
}

pub fn seeded(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}
