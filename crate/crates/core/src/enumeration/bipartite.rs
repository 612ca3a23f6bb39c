use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_labeling_cells;
use crate::graph::{bit, bits, full_mask, Graph};
use crate::spectra::{perron_vector, same_lambda_max};

/// Catalogs whose multiset count exceeds this are not generated.
pub const MAX_CATALOG_CANDIDATES: u128 = 1_000_000;

/// Bipartite graph with sides `0..a` and `a..a+b`, no isolated vertices and
/// every component sharing the same largest eigenvalue.
#[derive(Clone, Debug, Serialize)]
pub struct BipartitePart {
    #[serde(serialize_with = "crate::enumeration::ser_graph6")]
    pub graph: Graph,
    pub sides: (usize, usize),
    pub lambda_max: f64,
    /// Sorted Perron weights of each side, each side of unit norm.
    pub side_weights: (Vec<f64>, Vec<f64>),
    pub connected: bool,
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n.saturating_sub(k));
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

/// Number of row multisets examined when generating the `(a, b)` catalog.
pub fn catalog_candidates(a: usize, b: usize) -> u128 {
    let (a, b) = (a.min(b), a.max(b));
    if a >= 64 {
        return u128::MAX;
    }
    let rows = (1u128 << a) - 1;
    binomial(rows + b as u128 - 1, b as u128)
}

pub fn catalog_feasible(a: usize, b: usize) -> bool {
    a + b <= 64 && catalog_candidates(a, b) <= MAX_CATALOG_CANDIDATES
}

fn side_key(g: &Graph, a: usize, b: usize) -> Vec<u64> {
    let sa = full_mask(a);
    let sb = full_mask(a + b) & !sa;
    let mut key = canonical_labeling_cells(g, Some(&[sa, sb])).graph.rows().to_vec();
    if a == b {
        let swapped = canonical_labeling_cells(g, Some(&[sb, sa])).graph.rows().to_vec();
        key = key.min(swapped);
    }
    key
}

fn annotate(g: Graph, a: usize, b: usize, tol: f64) -> Option<BipartitePart> {
    let comps = g.component_masks();
    let mut lambda = None;
    for &m in &comps {
        let verts: Vec<usize> = bits(m).collect();
        let h = g.induced(&verts);
        let l = perron_vector::<f64>(&h, tol).ok()?.eigenvalue;
        match lambda {
            None => lambda = Some((l, h)),
            Some((l0, ref h0)) => {
                if (l - l0).abs() > tol && !same_lambda_max(h0, l0, &h, l, tol) {
                    return None;
                }
            }
        }
    }
    let p = perron_vector::<f64>(&g, 1e3 * tol).ok()?;
    let mut wa = p.vector[..a].to_vec();
    let mut wb = p.vector[a..].to_vec();
    for w in [&mut wa, &mut wb] {
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        w.iter_mut().for_each(|x| *x /= norm);
        w.sort_by(|x, y| x.total_cmp(y));
    }
    Some(BipartitePart {
        lambda_max: lambda?.0,
        sides: (a, b),
        side_weights: (wa, wb),
        connected: comps.len() == 1,
        graph: g,
    })
}

/// Every bipartite graph with sides `(a, b)`, no isolated vertices and all
/// components of equal largest eigenvalue, up to side-preserving isomorphism
/// (sides interchangeable when `a = b`). Sorted by `λ_max`, then by graph.
pub fn bipartite_catalog(a: usize, b: usize, tol: f64) -> Vec<BipartitePart> {
    assert!(a >= 1 && b >= 1 && a + b <= 64, "sides must be positive and fit in 64 vertices");
    // Rows of the larger side range over subsets of the smaller side.
    let (small, large) = (a.min(b), a.max(b));
    let mut seqs = Vec::new();
    let mut cur = Vec::with_capacity(large);
    fn rec(cur: &mut Vec<u64>, large: usize, top: u64, covered: u64, out: &mut Vec<Vec<u64>>) {
        if cur.len() == large {
            // Small-side degrees nonincreasing: every class has such a member.
            let deg = |s: usize| cur.iter().filter(|&&m| m & bit(s) != 0).count();
            let small = top.count_ones() as usize;
            if covered == top && (1..small).all(|s| deg(s - 1) >= deg(s)) {
                out.push(cur.clone());
            }
            return;
        }
        let lo = cur.last().copied().unwrap_or(1);
        for m in lo..=top {
            cur.push(m);
            rec(cur, large, top, covered | m, out);
            cur.pop();
        }
    }
    rec(&mut cur, large, full_mask(small), 0, &mut seqs);
    let n = a + b;
    let build = |rows: &[u64]| {
        let mut adj = vec![0u64; n];
        for (j, &m) in rows.iter().enumerate() {
            let (u, offset_small) = if a <= b { (a + j, 0) } else { (j, a) };
            for s in bits(m) {
                let v = s + offset_small;
                adj[u] |= bit(v);
                adj[v] |= bit(u);
            }
        }
        Graph::from_rows_unchecked(adj)
    };
    let unique: HashMap<Vec<u64>, Graph> = seqs
        .par_iter()
        .map(|rows| {
            let g = build(rows);
            (side_key(&g, a, b), g)
        })
        .collect();
    let mut keyed: Vec<(Vec<u64>, Graph)> = unique.into_iter().collect();
    keyed.sort_by(|x, y| x.0.cmp(&y.0));
    let mut parts: Vec<BipartitePart> =
        keyed.into_par_iter().filter_map(|(_, g)| annotate(g, a, b, tol)).collect();
    parts.sort_by(|x, y| x.lambda_max.total_cmp(&y.lambda_max).then_with(|| x.graph.cmp(&y.graph)));
    parts
}

/// Connected bipartite parts with sides `(a, b)`.
pub fn generate_bipartite_parts(a: usize, b: usize, tol: f64) -> Vec<BipartitePart> {
    bipartite_catalog(a, b, tol).into_iter().filter(|p| p.connected).collect()
}

/// Distinct largest eigenvalues, clustering values within `tol` and deciding
/// clusters closer than `10 · tol` exactly.
pub fn group_lambdas(parts: &[&BipartitePart], tol: f64) -> Vec<f64> {
    let mut sorted: Vec<&BipartitePart> = parts.to_vec();
    sorted.sort_by(|x, y| x.lambda_max.total_cmp(&y.lambda_max));
    let mut reps: Vec<&BipartitePart> = Vec::new();
    for p in sorted {
        match reps.last() {
            Some(r) if p.lambda_max - r.lambda_max <= tol => {}
            Some(r) if same_lambda_max(&r.graph, r.lambda_max, &p.graph, p.lambda_max, tol) => {}
            _ => reps.push(p),
        }
    }
    reps.into_iter().map(|p| p.lambda_max).collect()
}

/// Whether a bipartite graph with no isolated vertices and sides `(a, b)`
/// can have largest eigenvalue `nu`: `max(a,b)/min(a,b) ≤ ν² ≤ a·b`.
pub fn lambda_possible(a: usize, b: usize, nu: f64, tol: f64) -> bool {
    let (s, l) = (a.min(b) as f64, a.max(b) as f64);
    let sq = nu * nu;
    sq <= s * l + tol && sq >= (l / s).ceil() - tol
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_catalogs() {
        let k2 = generate_bipartite_parts(1, 1, 1e-9);
        assert_eq!(k2.len(), 1);
        assert!((k2[0].lambda_max - 1.0).abs() < 1e-12);
        let p3 = generate_bipartite_parts(1, 2, 1e-9);
        assert_eq!(p3.len(), 1);
        assert!((p3[0].lambda_max - 2f64.sqrt()).abs() < 1e-12);
        let two = generate_bipartite_parts(2, 2, 1e-9);
        assert_eq!(two.len(), 2);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((two[0].lambda_max - phi).abs() < 1e-12);
        assert!((two[1].lambda_max - 2.0).abs() < 1e-12);
        let all = bipartite_catalog(2, 2, 1e-9);
        assert_eq!(all.len(), 3);
        assert!(all.iter().any(|p| !p.connected && (p.lambda_max - 1.0).abs() < 1e-12));
    }

    #[test]
    fn side_weights_have_unit_norm() {
        for (a, b) in [(2, 3), (3, 3), (3, 4), (2, 5)] {
            for p in bipartite_catalog(a, b, 1e-9) {
                for w in [&p.side_weights.0, &p.side_weights.1] {
                    assert!((w.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() < 1e-9);
                }
                assert_eq!(p.side_weights.0.len(), a);
            }
        }
    }

    #[test]
    fn orientation_is_irrelevant_to_counts() {
        assert_eq!(bipartite_catalog(2, 4, 1e-9).len(), bipartite_catalog(4, 2, 1e-9).len());
        assert_eq!(generate_bipartite_parts(3, 4, 1e-9).len(), generate_bipartite_parts(4, 3, 1e-9).len());
    }

    #[test]
    fn connected_counts_match_brute_force() {
        // Brute force over all biadjacency matrices with side-preserving dedup.
        for (a, b) in [(2, 3), (3, 3), (2, 4)] {
            let mut keys = std::collections::HashSet::new();
            for m in 0u64..1 << (a * b) {
                let mut edges = Vec::new();
                for i in 0..a {
                    for j in 0..b {
                        if m >> (i * b + j) & 1 == 1 {
                            edges.push((i, a + j));
                        }
                    }
                }
                let g = Graph::from_edges(a + b, &edges).unwrap();
                if g.is_connected() {
                    keys.insert(side_key(&g, a, b));
                }
            }
            assert_eq!(generate_bipartite_parts(a, b, 1e-9).len(), keys.len(), "({a},{b})");
        }
    }
}
