//! Isomorph-free exhaustive generation of small graphs by vertex
//! augmentation with canonical-form deduplication.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::canonical_labeling;
use crate::graph::{bit, Graph};

/// All graphs on `n` vertices up to isomorphism, optionally limited to at
/// most `max_edges` edges, sorted by canonical form.
pub fn all_graphs(n: usize, max_edges: Option<usize>) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0).expect("zero vertices")];
    for k in 0..n {
        let next: HashSet<Graph> = level
            .par_iter()
            .flat_map_iter(|g| {
                let budget = max_edges.map(|m| m.saturating_sub(g.edge_count()));
                (0u64..1 << k).filter(move |s| budget.is_none_or(|b| s.count_ones() as usize <= b)).map(move |s| {
                    let mut rows = g.rows().to_vec();
                    for (v, r) in rows.iter_mut().enumerate() {
                        if s & bit(v) != 0 {
                            *r |= bit(k);
                        }
                    }
                    rows.push(s);
                    canonical_labeling(&Graph::from_rows_unchecked(rows), None).graph
                })
            })
            .collect();
        level = next.into_iter().collect();
        level.sort();
    }
    level
}

/// All connected graphs on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize, max_edges: Option<usize>) -> Vec<Graph> {
    all_graphs(n, max_edges).into_iter().filter(|g| g.is_connected()).collect()
}
