use crate::combinatorics::class_masks;
use crate::error::{Error, Result};
use crate::graph::{bit, Coloring, Graph};

/// Joins two vertices iff they are non-adjacent in `g` and differently colored.
pub fn color_complement(g: &Graph, c: &Coloring) -> Result<Graph> {
    let c = Coloring::new(g, c.classes().to_vec())?;
    let colors = c.colors();
    let masks = class_masks(&c);
    let rows = (0..g.n()).map(|v| !g.row(v) & g.vertex_mask() & !masks[colors[v]]).collect();
    Graph::from_rows(rows)
}

/// The common number `ν` of neighbors every vertex has in each other class.
pub fn nu_equitable(g: &Graph, c: &Coloring) -> Result<Option<usize>> {
    let c = Coloring::new(g, c.classes().to_vec())?;
    if c.num_classes() < 2 {
        return Ok(None);
    }
    let colors = c.colors();
    let masks = class_masks(&c);
    let mut nu = None;
    for v in 0..g.n() {
        for (i, &m) in masks.iter().enumerate() {
            if i == colors[v] {
                continue;
            }
            let d = (g.row(v) & m).count_ones() as usize;
            match nu {
                None => nu = Some(d),
                Some(x) if x != d => return Ok(None),
                _ => {}
            }
        }
    }
    Ok(nu)
}

/// Whether `ν ≥ m(c − 1)/c` for a ν-equitable coloring with `c` classes of
/// size `m`, which guarantees Hoffman colorability.
pub fn nu_equitable_sufficiency(g: &Graph, c: &Coloring) -> Result<bool> {
    let nu = nu_equitable(g, c)?.ok_or_else(|| Error::Precondition("coloring is not ν-equitable".into()))?;
    let m = c.sizes()[0];
    let k = c.num_classes();
    Ok(nu * k >= m * (k - 1))
}

/// Complete multipartite graph with `c` parts of size `m`, minus the
/// perfect matching `(i, a) — (j, σ_ij(a))` between every pair of parts
/// `i < j`. Vertex `(i, a)` is `i·m + a`.
pub fn multipartite_minus_matchings_with<F>(c: usize, m: usize, matching: F) -> Result<(Graph, Coloring)>
where
    F: Fn(usize, usize) -> Vec<usize>,
{
    if c < 2 || m < 2 {
        return Err(Error::InvalidArgument(format!("need at least two parts of size at least two, got c = {c}, m = {m}")));
    }
    let mut g = Graph::complete_multipartite(&vec![m; c])?;
    let mut rows = g.rows().to_vec();
    for i in 0..c {
        for j in i + 1..c {
            let sigma = matching(i, j);
            let hit = sigma.iter().fold(0u64, |s, &b| if b < m { s | bit(b) } else { s });
            if sigma.len() != m || hit.count_ones() as usize != m {
                return Err(Error::InvalidArgument(format!("matching between parts {i} and {j} is not a permutation")));
            }
            for (a, &b) in sigma.iter().enumerate() {
                let (u, v) = (i * m + a, j * m + b);
                rows[u] &= !bit(v);
                rows[v] &= !bit(u);
            }
        }
    }
    g = Graph::from_rows(rows)?;
    let classes = (0..c).map(|i| (i * m..(i + 1) * m).collect()).collect();
    let coloring = Coloring::new(&g, classes)?;
    Ok((g, coloring))
}

/// The family with the identity matching between every pair of parts: it is
/// `(m − 1)`-equitable, and Hoffman colorable whenever `m ≤ c`.
pub fn multipartite_minus_matchings(c: usize, m: usize) -> Result<(Graph, Coloring)> {
    multipartite_minus_matchings_with(c, m, |_, _| (0..m).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::generate::all_graphs;
    use crate::hoffman::is_hoffman_colorable;

    fn fig7() -> (Graph, Coloring) {
        let c6 = Graph::cycle(6).unwrap();
        let c = Coloring::new(&c6, vec![vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap();
        (c6, c)
    }

    #[test]
    fn complement_examples() {
        let (c6, c) = fig7();
        let k3 = Graph::complete(3).unwrap();
        assert!(is_isomorphic(&color_complement(&c6, &c).unwrap(), &k3.disjoint_union(&k3).unwrap()));
        let k = Graph::complete_multipartite(&[2, 3, 1]).unwrap();
        let kc = Coloring::new(&k, vec![vec![0, 1], vec![2, 3, 4], vec![5]]).unwrap();
        assert_eq!(color_complement(&k, &kc).unwrap().edge_count(), 0);
        let e = Graph::empty(6).unwrap();
        let ec = Coloring::new(&e, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert!(is_isomorphic(&color_complement(&e, &ec).unwrap(), &Graph::complete_bipartite(3, 3).unwrap()));
    }

    #[test]
    fn equitable_examples() {
        let (c6, c) = fig7();
        assert_eq!(nu_equitable(&c6, &c).unwrap(), Some(1));
        assert!(!nu_equitable_sufficiency(&c6, &c).unwrap());
        let k333 = Graph::complete_multipartite(&[3, 3, 3]).unwrap();
        let kc = Coloring::new(&k333, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]).unwrap();
        assert_eq!(nu_equitable(&k333, &kc).unwrap(), Some(3));
        let f1 = Graph::from_edges(
            9,
            &[(0, 5), (0, 6), (1, 5), (1, 7), (2, 6), (2, 8), (3, 7), (3, 8), (4, 5), (4, 6), (4, 7), (4, 8), (5, 6), (5, 7), (6, 8), (7, 8)],
        )
        .unwrap();
        let fc = Coloring::new(&f1, vec![vec![0, 1, 2, 3, 4], vec![5, 8], vec![6, 7]]).unwrap();
        assert_eq!(nu_equitable(&f1, &fc).unwrap(), None);
        assert!(nu_equitable_sufficiency(&f1, &fc).is_err());
        for m in 2..=5 {
            let kmm = Graph::complete_bipartite(m, m).unwrap();
            let c = Coloring::new(&kmm, vec![(0..m).collect(), (m..2 * m).collect()]).unwrap();
            assert!(nu_equitable_sufficiency(&kmm, &c).unwrap());
        }
    }

    #[test]
    fn matching_family() {
        let (g, c) = multipartite_minus_matchings(3, 3).unwrap();
        assert_eq!((g.n(), g.is_regular()), (9, Some(4)));
        assert_eq!(nu_equitable(&g, &c).unwrap(), Some(2));
        assert!(nu_equitable_sufficiency(&g, &c).unwrap());
        let v = is_hoffman_colorable::<f64>(&g).unwrap();
        assert!(v.colorable && v.chi == 3 && (v.bound - 3.0).abs() < 1e-9);
        let (g, _) = multipartite_minus_matchings(2, 2).unwrap();
        let k2 = Graph::complete(2).unwrap();
        assert!(is_isomorphic(&g, &k2.disjoint_union(&k2).unwrap()));
        let (g, c) = multipartite_minus_matchings(4, 4).unwrap();
        assert_eq!((g.n(), g.is_regular()), (16, Some(9)));
        assert!(nu_equitable_sufficiency(&g, &c).unwrap());
        let v = is_hoffman_colorable::<f64>(&g).unwrap();
        assert!(v.colorable && v.chi == 4);
        assert!(multipartite_minus_matchings(1, 3).is_err());
        assert!(multipartite_minus_matchings_with(3, 3, |_, _| vec![0, 0, 1]).is_err());
    }

    #[test]
    fn complement_is_involution_and_flips_nu() {
        for g in all_graphs(6, None) {
            let Some(side) = g.two_coloring() else { continue };
            let a: Vec<usize> = (0..6).filter(|&v| side & bit(v) == 0).collect();
            let b: Vec<usize> = (0..6).filter(|&v| side & bit(v) != 0).collect();
            if a.is_empty() || b.is_empty() {
                continue;
            }
            let c = Coloring::new(&g, vec![a.clone(), b.clone()]).unwrap();
            let gc = color_complement(&g, &c).unwrap();
            assert_eq!(color_complement(&gc, &c).unwrap(), g);
            if a.len() == b.len() {
                if let Some(nu) = nu_equitable(&g, &c).unwrap() {
                    assert_eq!(nu_equitable(&gc, &c).unwrap(), Some(a.len() - nu));
                }
            }
        }
    }
}
