//! Exact cliques, independent sets and vertex colorings on bitset graphs.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{bit, Coloring, Graph};

/// Greedy coloring bound used to prune clique search: colors `cand` in
/// order and returns vertices with their color count.
fn color_bound(g: &Graph, cand: u64, order: &mut Vec<(usize, usize)>) {
    order.clear();
    let mut uncolored = cand;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !bit(v) & !g.row(v);
            uncolored &= !bit(v);
            order.push((v, color));
        }
    }
}

fn max_clique_rec(g: &Graph, cur: u64, cand: u64, best: &mut u64) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    color_bound(g, cand, &mut order);
    let mut cand = cand;
    while let Some((v, c)) = order.pop() {
        if cur.count_ones() as usize + c <= best.count_ones() as usize {
            return;
        }
        let next = cur | bit(v);
        let nc = cand & g.row(v);
        if nc == 0 {
            if next.count_ones() > best.count_ones() {
                *best = next;
            }
        } else {
            max_clique_rec(g, next, nc, best);
        }
        cand &= !bit(v);
    }
}

/// A maximum clique as a vertex mask.
pub fn maximum_clique(g: &Graph) -> u64 {
    let mut best = 0u64;
    if g.n() > 0 {
        best = 1;
        max_clique_rec(g, 0, g.vertex_mask(), &mut best);
    }
    best
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).count_ones() as usize
}

/// Exact independence number.
pub fn independence_number(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Err(Error::NoVertices);
    }
    Ok(clique_number(&g.complement()))
}

/// Vertices by descending degree, ties by index.
fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

fn greedy_colors(g: &Graph, order: &[usize]) -> Vec<usize> {
    let mut colors = vec![usize::MAX; g.n()];
    let mut masks: Vec<u64> = Vec::new();
    for &v in order {
        let c = masks.iter().position(|&m| m & g.row(v) == 0).unwrap_or(masks.len());
        if c == masks.len() {
            masks.push(0);
        }
        masks[c] |= bit(v);
        colors[v] = c;
    }
    colors
}

struct KColor<'a> {
    g: &'a Graph,
    order: &'a [usize],
    k: usize,
    masks: Vec<u64>,
    colors: Vec<usize>,
}

impl KColor<'_> {
    /// Backtracking over `order`; a vertex may open at most one new class.
    fn search<F: FnMut(&[usize]) -> ControlFlow<()>>(&mut self, i: usize, used: usize, f: &mut F) -> ControlFlow<()> {
        if i == self.order.len() {
            return f(&self.colors);
        }
        let v = self.order[i];
        let row = self.g.row(v);
        for c in 0..self.k.min(used + 1) {
            if self.masks[c] & row != 0 {
                continue;
            }
            self.masks[c] |= bit(v);
            self.colors[v] = c;
            let feasible = self.forward_ok(i + 1, used.max(c + 1));
            if feasible {
                self.search(i + 1, used.max(c + 1), f)?;
            }
            self.masks[c] &= !bit(v);
        }
        self.colors[v] = usize::MAX;
        ControlFlow::Continue(())
    }

    /// Every uncolored vertex still has an available color.
    fn forward_ok(&self, from: usize, used: usize) -> bool {
        let open = used < self.k;
        self.order[from..].iter().all(|&u| open || self.masks[..used].iter().any(|&m| m & self.g.row(u) == 0))
    }
}

/// Calls `f` with the color vector of every proper coloring using exactly
/// the classes `0..k` (all non-empty is not required), up to permutation of
/// the classes. Stops when `f` breaks.
pub fn for_each_coloring<F: FnMut(&[usize]) -> ControlFlow<()>>(g: &Graph, k: usize, mut f: F) {
    let order = degree_order(g);
    let mut s = KColor { g, order: &order, k, masks: vec![0; k], colors: vec![usize::MAX; g.n()] };
    let _ = s.search(0, 0, &mut f);
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_coloring(g, k, |c| {
        found = Some(c.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// Exact chromatic number and an optimal coloring, searching upward from
/// `lower` (which must be a valid lower bound).
pub fn optimal_coloring_from(g: &Graph, lower: usize) -> Result<(usize, Coloring)> {
    if g.n() == 0 {
        return Err(Error::NoVertices);
    }
    let order = degree_order(g);
    let greedy = greedy_colors(g, &order);
    let upper = greedy.iter().max().map_or(0, |&c| c + 1);
    let lower = lower.max(clique_number(g)).max(1);
    for k in lower..upper {
        if let Some(colors) = k_coloring(g, k) {
            return Ok((k, Coloring::from_colors(g, &colors)?));
        }
    }
    Ok((upper, Coloring::from_colors(g, &greedy)?))
}

/// Exact chromatic number with an optimal coloring.
pub fn optimal_coloring(g: &Graph) -> Result<(usize, Coloring)> {
    optimal_coloring_from(g, 1)
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    optimal_coloring(g).map(|(k, _)| k)
}

/// Vertex masks of a coloring, reused by several checks.
pub(crate) fn class_masks(c: &Coloring) -> Vec<u64> {
    (0..c.num_classes()).map(|i| c.class_mask(i)).collect()
}

/// Whether every vertex has a neighbor in every class other than its own.
pub fn sees_every_other_class(g: &Graph, c: &Coloring) -> bool {
    let masks = class_masks(c);
    let colors = c.colors();
    (0..g.n()).all(|v| masks.iter().enumerate().all(|(i, &m)| i == colors[v] || g.row(v) & m != 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::bits;

    fn brute_alpha(g: &Graph) -> usize {
        let n = g.n();
        (0u64..1 << n)
            .filter(|&s| bits(s).all(|v| g.row(v) & s == 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    fn brute_chi(g: &Graph) -> usize {
        let n = g.n();
        (1..=n)
            .find(|&k| {
                let total = k.pow(n as u32);
                (0..total).any(|mut code| {
                    let mut col = vec![0; n];
                    for c in col.iter_mut() {
                        *c = code % k;
                        code /= k;
                    }
                    g.edges().iter().all(|&(u, v)| col[u] != col[v])
                })
            })
            .unwrap()
    }

    pub(crate) fn figure_one() -> Graph {
        let e = [(1, 6), (1, 7), (2, 6), (2, 8), (3, 7), (3, 9), (4, 8), (4, 9), (5, 6), (5, 7), (5, 8), (5, 9), (6, 7), (6, 8), (7, 9), (8, 9)];
        let edges: Vec<_> = e.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
        Graph::from_edges(9, &edges).unwrap()
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&figure_one()).unwrap(), 5);
        assert_eq!(independence_number(&Graph::complete(5).unwrap()).unwrap(), 1);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(independence_number(&c5).unwrap(), brute_alpha(&c5));
        assert_eq!(independence_number(&c5).unwrap(), 2);
        assert_eq!(independence_number(&Graph::petersen()).unwrap(), 4);
        assert!(independence_number(&Graph::empty(0).unwrap()).is_err());
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&figure_one()).unwrap(), 3);
        for n in 1..=7 {
            assert_eq!(chromatic_number(&Graph::complete(n).unwrap()).unwrap(), n);
        }
        assert_eq!(chromatic_number(&Graph::petersen()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::cycle(7).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::empty(3).unwrap()).unwrap(), 1);
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        let mut s = 0x9e3779b97f4a7c15u64;
        for _ in 0..200 {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let n = 1 + (s >> 60) as usize % 7;
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if s >> 63 == 1 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let (k, col) = optimal_coloring(&g).unwrap();
            assert_eq!(k, brute_chi(&g));
            assert_eq!(col.num_classes(), k);
            assert_eq!(independence_number(&g).unwrap(), brute_alpha(&g));
        }
    }

    #[test]
    fn coloring_enumeration_counts() {
        // C4 has exactly one 2-coloring up to swapping colors.
        let mut count = 0;
        for_each_coloring(&Graph::cycle(4).unwrap(), 2, |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 1);
        // K3 has one 3-coloring up to permutation.
        let mut count = 0;
        for_each_coloring(&Graph::complete(3).unwrap(), 3, |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 1);
    }
}
