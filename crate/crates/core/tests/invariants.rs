use hoffman_core::{
    canonical_form, chromatic_number, hoffman_bound, independence_number, is_hoffman_colorable, optimal_coloring,
    spectrum, weight_quotient, Graph,
};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn shuffled(g: &Graph, seed: u64) -> Graph {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut s = seed | 1;
    for i in (1..n).rev() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        perm.swap(i, (s % (i as u64 + 1)) as usize);
    }
    g.permuted(&perm)
}

proptest! {
    #[test]
    fn bound_is_below_chromatic_number(g in graph(9)) {
        prop_assume!(g.edge_count() > 0);
        let h: f64 = hoffman_bound(&g).unwrap();
        prop_assert!(h <= chromatic_number(&g).unwrap() as f64 + 1e-9);
    }

    #[test]
    fn verdict_is_isomorphism_invariant(g in graph(8), seed in any::<u64>()) {
        prop_assume!(g.edge_count() > 0);
        let p = shuffled(&g, seed);
        prop_assert_eq!(canonical_form(&g, None), canonical_form(&p, None));
        let a = is_hoffman_colorable::<f64>(&g).unwrap();
        let b = is_hoffman_colorable::<f64>(&p).unwrap();
        prop_assert_eq!(a.colorable, b.colorable);
        prop_assert_eq!(a.chi, b.chi);
        prop_assert_eq!(independence_number(&g).unwrap(), independence_number(&p).unwrap());
    }

    #[test]
    fn f32_and_f64_agree_on_colorability(g in graph(8)) {
        prop_assume!(g.edge_count() > 0);
        let a = is_hoffman_colorable::<f64>(&g).unwrap();
        let b = is_hoffman_colorable::<f32>(&g).unwrap();
        prop_assert_eq!(a.chi, b.chi);
        if a.colorable {
            prop_assert!(b.colorable);
        }
    }

    #[test]
    fn weight_quotient_rows_sum_to_lambda_max(g in graph(8)) {
        prop_assume!(g.is_connected() && g.n() > 1);
        let (_, c) = optimal_coloring(&g).unwrap();
        let q = weight_quotient::<f64>(&g, &c, 1e-9).unwrap();
        let lmax = spectrum::<f64>(&g, 1e-9).unwrap().lambda_max();
        for row in &q.entries {
            prop_assert!((row.iter().sum::<f64>() - lmax).abs() < 1e-6);
        }
    }
}
