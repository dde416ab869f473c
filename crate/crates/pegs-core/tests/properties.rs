//! Property tests for the contract-level invariants: product structure,
//! embedding equivalences, and entropy behavior under transforms.

mod common;

use common::*;
use proptest::prelude::*;

use pegs_core::{
    mmspe, mmspe_distribution, mpe_graph, neighborhood_embedding, normalized_shannon,
    pe_distribution, pe_graph, permutation_entropy, EntropyParams, Graph, MultivariateSignal,
};

fn params(m: usize, delay: usize) -> EntropyParams {
    EntropyParams::new(m, delay).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kronecker_sum_matches_the_adjacency_rule(
        seed in 0..10_000u64,
        ng in 1..=6usize,
        nh in 1..=6usize,
    ) {
        let mut rng = seeded(seed);
        let g = random_weighted_digraph(ng, 0.4, &mut rng);
        let h = random_weighted_digraph(nh, 0.4, &mut rng);
        let prod = g.cartesian_product(&h);
        prop_assert_eq!(prod.num_vertices(), ng * nh);
        for v in 0..ng {
            for vp in 0..nh {
                for u in 0..ng {
                    for up in 0..nh {
                        let expect = product_rule_weight(&g, &h, v, vp, u, up);
                        let got = prod.weight(v * nh + vp, u * nh + up);
                        prop_assert_eq!(got, expect, "pair ({}, {}) -> ({}, {})", v, vp, u, up);
                    }
                }
            }
        }
    }

    #[test]
    fn product_is_symmetric_up_to_relabeling(
        seed in 0..10_000u64,
        ng in 1..=5usize,
        nh in 1..=5usize,
    ) {
        let mut rng = seeded(seed);
        let g = random_weighted_digraph(ng, 0.5, &mut rng);
        let h = random_weighted_digraph(nh, 0.5, &mut rng);
        let gh = g.cartesian_product(&h);
        let hg = h.cartesian_product(&g);
        // (v, v') at v*nh + v' in g□h corresponds to v' * ng + v in h□g.
        for v in 0..ng {
            for vp in 0..nh {
                for u in 0..ng {
                    for up in 0..nh {
                        prop_assert_eq!(
                            gh.weight(v * nh + vp, u * nh + up),
                            hg.weight(vp * ng + v, up * ng + u)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn product_counts_multiply(
        seed in 0..10_000u64,
        ng in 1..=7usize,
        nh in 1..=7usize,
    ) {
        let mut rng = seeded(seed);
        let g = random_digraph(ng, &mut rng);
        let h = random_digraph(nh, &mut rng);
        let prod = g.cartesian_product(&h);
        prop_assert_eq!(prod.num_vertices(), ng * nh);
        prop_assert_eq!(
            prod.arc_count(),
            nh * g.arc_count() + ng * h.arc_count()
        );
    }

    #[test]
    fn path_embedding_reproduces_delay_vectors(
        seed in 0..10_000u64,
        n in 6..40usize,
        m in 2..=5usize,
        delay in 1..=3usize,
    ) {
        prop_assume!(n > (m - 1) * delay);
        let mut rng = seeded(seed);
        let x = random_signal(n, &mut rng);
        let g = Graph::directed_path(n).unwrap();
        let emb = neighborhood_embedding(&g, &x, m, delay).unwrap();
        let span = (m - 1) * delay;
        for i in 0..n {
            prop_assert_eq!(emb.is_valid(i), i + span < n);
        }
        for i in 0..n - span {
            for k in 0..m {
                prop_assert_eq!(emb.value(i, k), x[i + k * delay]);
            }
        }
    }

    #[test]
    fn embedding_matches_walk_enumeration(
        seed in 0..10_000u64,
        n in 2..=8usize,
        m in 2..=3usize,
        delay in 1..=2usize,
    ) {
        let mut rng = seeded(seed);
        let g = random_weighted_digraph(n, 0.5, &mut rng);
        let x = random_signal(n, &mut rng);
        let emb = neighborhood_embedding(&g, &x, m, delay).unwrap();
        let adj = dense_adjacency(&g);
        for i in 0..n {
            match naive_embedding_row(&adj, &x, i, m, delay) {
                Some(row) => {
                    prop_assert!(emb.is_valid(i));
                    for (k, &expected) in row.iter().enumerate() {
                        prop_assert!(
                            (emb.value(i, k) - expected).abs() <= 1e-12,
                            "vertex {} column {}: {} vs {}", i, k, emb.value(i, k), expected
                        );
                    }
                }
                None => prop_assert!(!emb.is_valid(i)),
            }
        }
    }

    #[test]
    fn embedding_is_affine_equivariant(
        seed in 0..10_000u64,
        n in 2..=10usize,
        a in -3.0..3.0f64,
        b in -5.0..5.0f64,
        m in 2..=4usize,
    ) {
        let mut rng = seeded(seed);
        let g = random_weighted_digraph(n, 0.5, &mut rng);
        let x = random_signal(n, &mut rng);
        let mapped: Vec<f64> = x.iter().map(|&v| a * v + b).collect();
        let emb = neighborhood_embedding(&g, &x, m, 1).unwrap();
        let emb_mapped = neighborhood_embedding(&g, &mapped, m, 1).unwrap();
        for i in 0..n {
            prop_assert_eq!(emb.is_valid(i), emb_mapped.is_valid(i));
            if emb.is_valid(i) {
                for k in 0..m {
                    let expect = a * emb.value(i, k) + b;
                    prop_assert!(
                        (emb_mapped.value(i, k) - expect).abs() <= 1e-12,
                        "vertex {} column {}", i, k
                    );
                }
            }
        }
    }

    #[test]
    fn metrics_stay_in_unit_interval(
        seed in 0..10_000u64,
        n in 8..60usize,
        p in 1..=4usize,
        m in 2..=4usize,
        delay in 1..=2usize,
    ) {
        prop_assume!(n > (m - 1) * delay);
        let mut rng = seeded(seed);
        let channels: Vec<Vec<f64>> = (0..p).map(|_| random_signal(n, &mut rng)).collect();
        let u = MultivariateSignal::from_channels(channels).unwrap();
        let pr = params(m, delay);

        let pe = permutation_entropy(u.channel(0), pr).unwrap();
        prop_assert!((0.0..=1.0).contains(&pe));

        let marginal = mmspe(&u, pr).unwrap();
        prop_assert!((0.0..=1.0).contains(&marginal));

        let complete = Graph::complete(p).unwrap();
        let product = mpe_graph(&u, &complete, pr).unwrap();
        prop_assert!((0.0..=1.0).contains(&product));

        let g = random_digraph(n, &mut rng);
        if let Ok(on_graph) = pe_graph(&g, u.channel(0), pr) {
            prop_assert!((0.0..=1.0).contains(&on_graph));
        }
    }

    #[test]
    fn distribution_frequencies_sum_to_one(
        seed in 0..10_000u64,
        n in 10..80usize,
        m in 2..=5usize,
    ) {
        let mut rng = seeded(seed);
        let x = random_signal(n, &mut rng);
        let d = pe_distribution(&x, params(m, 1)).unwrap();
        prop_assert_eq!(d.total(), (n - (m - 1)) as u64);
        let freq_sum: f64 = d
            .iter()
            .map(|(_, count)| count as f64 / d.total() as f64)
            .sum();
        prop_assert!((freq_sum - 1.0).abs() <= 1e-12);
        let m_factorial: usize = (2..=m).product();
        prop_assert!(d.distinct() <= m_factorial);
    }

    #[test]
    fn pe_is_invariant_under_monotone_transforms(
        seed in 0..10_000u64,
        n in 10..60usize,
        m in 2..=4usize,
    ) {
        let mut rng = seeded(seed);
        let x = random_signal(n, &mut rng);
        let pr = params(m, 1);
        let base = permutation_entropy(&x, pr).unwrap();

        let scaled: Vec<f64> = x.iter().map(|&v| 3.0 * v + 0.25).collect();
        prop_assert_eq!(base, permutation_entropy(&scaled, pr).unwrap());

        let exponential: Vec<f64> = x.iter().map(|&v| v.exp()).collect();
        prop_assert_eq!(base, permutation_entropy(&exponential, pr).unwrap());
    }

    #[test]
    fn graph_metrics_are_positive_affine_invariant(
        seed in 0..10_000u64,
        n in 4..=10usize,
        a in 0.05..4.0f64,
        b in -3.0..3.0f64,
    ) {
        let mut rng = seeded(seed);
        let g = random_weighted_digraph(n, 0.6, &mut rng);
        let x = random_signal(n, &mut rng);
        let pr = params(2, 1);
        let mapped: Vec<f64> = x.iter().map(|&v| a * v + b).collect();
        match (pe_graph(&g, &x, pr), pe_graph(&g, &mapped, pr)) {
            (Ok(h0), Ok(h1)) => prop_assert!((h0 - h1).abs() <= 1e-12, "{} vs {}", h0, h1),
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "mismatched outcomes: {:?} vs {:?}", a, b),
        }

        let channels: Vec<Vec<f64>> = (0..3).map(|_| random_signal(12, &mut rng)).collect();
        let u = MultivariateSignal::from_channels(channels.clone()).unwrap();
        let u_mapped = MultivariateSignal::from_channels(
            channels
                .iter()
                .map(|ch| ch.iter().map(|&v| a * v + b).collect())
                .collect(),
        )
        .unwrap();
        let k3 = Graph::complete(3).unwrap();
        let h0 = mpe_graph(&u, &k3, pr).unwrap();
        let h1 = mpe_graph(&u_mapped, &k3, pr).unwrap();
        prop_assert!((h0 - h1).abs() <= 1e-12);
    }

    #[test]
    fn pe_graph_on_paths_equals_pe(
        seed in 0..10_000u64,
        n in 12..120usize,
        m in 2..=5usize,
        delay in 1..=3usize,
    ) {
        prop_assume!(n > (m - 1) * delay);
        let mut rng = seeded(seed);
        let x = random_signal(n, &mut rng);
        let g = Graph::directed_path(n).unwrap();
        let pr = params(m, delay);
        prop_assert_eq!(
            permutation_entropy(&x, pr).unwrap(),
            pe_graph(&g, &x, pr).unwrap()
        );
    }

    #[test]
    fn mpe_with_isolated_channels_equals_mmspe(
        seed in 0..10_000u64,
        n in 8..40usize,
        p in 1..=4usize,
        m in 2..=3usize,
        delay in 1..=2usize,
    ) {
        prop_assume!(n > (m - 1) * delay);
        let mut rng = seeded(seed);
        let channels: Vec<Vec<f64>> = (0..p).map(|_| random_signal(n, &mut rng)).collect();
        let u = MultivariateSignal::from_channels(channels).unwrap();
        let isolated = Graph::empty(p).unwrap();
        let pr = params(m, delay);
        prop_assert_eq!(
            mpe_graph(&u, &isolated, pr).unwrap(),
            mmspe(&u, pr).unwrap()
        );
    }

    #[test]
    fn mmspe_pools_exactly_p_times_window_count(
        seed in 0..10_000u64,
        n in 10..50usize,
        p in 1..=5usize,
        m in 2..=4usize,
        delay in 1..=2usize,
    ) {
        prop_assume!(n > (m - 1) * delay);
        let mut rng = seeded(seed);
        let channels: Vec<Vec<f64>> = (0..p).map(|_| random_signal(n, &mut rng)).collect();
        let u = MultivariateSignal::from_channels(channels).unwrap();
        let d = mmspe_distribution(&u, params(m, delay)).unwrap();
        prop_assert_eq!(d.total(), (p * (n - (m - 1) * delay)) as u64);
    }

    #[test]
    fn pe_graph_matches_brute_force_on_small_graphs(
        seed in 0..10_000u64,
        n in 2..=8usize,
        m in 2..=3usize,
        delay in 1..=2usize,
    ) {
        let mut rng = seeded(seed);
        let g = random_weighted_digraph(n, 0.5, &mut rng);
        let x = random_signal(n, &mut rng);
        let adj = dense_adjacency(&g);
        let pr = params(m, delay);
        match (pe_graph(&g, &x, pr), naive_pe_graph(&adj, &x, m, delay)) {
            (Ok(fast), Some(slow)) => {
                prop_assert!((fast - slow).abs() <= 1e-12, "{} vs {}", fast, slow);
            }
            (Err(_), None) => {}
            (fast, slow) => prop_assert!(false, "mismatched outcomes: {:?} vs {:?}", fast, slow),
        }
    }
}

#[test]
fn distribution_entropy_agrees_with_direct_formula() {
    let mut rng = seeded(7);
    let x = random_signal(200, &mut rng);
    let d = pe_distribution(&x, params(3, 1)).unwrap();
    let total = d.total() as f64;
    let mut h = 0.0;
    for (_, count) in d.iter() {
        let p = count as f64 / total;
        h -= p * p.ln();
    }
    let expect = h / 6.0f64.ln();
    let got = normalized_shannon(&d).unwrap();
    assert!((got - expect).abs() <= 1e-15);
}

#[test]
fn distribution_iterates_in_lexicographic_rank_order() {
    let mut rng = seeded(11);
    let x = random_signal(400, &mut rng);
    let d = pe_distribution(&x, params(4, 1)).unwrap();
    let ranks: Vec<Vec<u8>> = d.iter().map(|(p, _)| p.ranks().to_vec()).collect();
    assert!(ranks.len() > 2);
    assert!(ranks.windows(2).all(|w| w[0] < w[1]));
}
