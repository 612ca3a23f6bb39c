//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! bitset per vertex, together with vertex colorings.

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// Immutable simple undirected graph.
///
/// Row `v` of `adj` has bit `u` set iff `u` and `v` are adjacent. The relation
/// is kept symmetric and irreflexive by every constructor.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates the set bits of a mask in increasing order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric, loop-free
    /// and confined to the first `rows.len()` bits.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mask = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 || row & bit(v) != 0 {
                return Err(Error::InvalidAdjacency(format!("row {v} out of range or has a loop")));
            }
            for u in bits(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::InvalidAdjacency(format!("asymmetric pair ({v}, {u})")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Self::from_rows(rows.clone()).is_ok());
        Graph { n: rows.len(), adj: rows }
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), n: self.n });
        }
        if u == v {
            return Err(Error::InvalidAdjacency(format!("loop at vertex {u}")));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mask = full_mask(n);
        let mut g = Self::empty(n)?;
        for v in 0..n {
            g.adj[v] = mask & !bit(v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    /// `K_{a,b}` with side `0..a` and side `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        Self::complete_multipartite(&[a, b])
    }

    /// Complete multipartite graph; part `i` occupies a contiguous index block.
    pub fn complete_multipartite(sizes: &[usize]) -> Result<Self> {
        let n: usize = sizes.iter().sum();
        let mut g = Self::empty(n)?;
        let mut start = 0;
        let mut masks = Vec::with_capacity(sizes.len());
        for &s in sizes {
            masks.push(full_mask(start + s) & !full_mask(start));
            start += s;
        }
        let all = full_mask(n);
        for m in &masks {
            for v in bits(*m) {
                g.adj[v] = all & !m;
            }
        }
        Ok(g)
    }

    pub fn star(leaves: usize) -> Result<Self> {
        Self::complete_bipartite(1, leaves)
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, &edges).expect("static edge list")
    }

    /// Vertex count.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Neighbourhood bitset of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// The common degree when the graph is regular.
    pub fn is_regular(&self) -> Option<usize> {
        let d = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Maximal connected vertex sets, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.component_masks().into_iter().map(|m| bits(m).collect()).collect()
    }

    pub(crate) fn component_masks(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let comp = self.reach(bit(s), self.vertex_mask());
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: u64, within: u64) -> u64 {
        let mut comp = start & within;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(1, self.vertex_mask()) == self.vertex_mask()
    }

    /// Subgraph induced on `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut rows = vec![0u64; vertices.len()];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    rows[i] |= bit(j);
                }
            }
        }
        Graph { n: vertices.len(), adj: rows }
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            let mut r = 0u64;
            for u in bits(self.adj[v]) {
                r |= bit(perm[u]);
            }
            rows[perm[v]] = r;
        }
        Graph { n: self.n, adj: rows }
    }

    pub fn complement(&self) -> Graph {
        let mask = self.vertex_mask();
        let rows = (0..self.n).map(|v| !self.adj[v] & mask & !bit(v)).collect();
        Graph { n: self.n, adj: rows }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut rows = self.adj.clone();
        rows.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj: rows })
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// A proper 2-coloring as a side mask (bit set = side 1), when one exists.
    pub fn two_coloring(&self) -> Option<u64> {
        let mut side = 0u64;
        let mut seen = 0u64;
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            seen |= bit(s);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let v_side = side & bit(v) != 0;
                for u in bits(self.adj[v]) {
                    if seen & bit(u) == 0 {
                        seen |= bit(u);
                        if !v_side {
                            side |= bit(u);
                        }
                        stack.push(u);
                    } else if (side & bit(u) != 0) == v_side {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Adjacency matrix as dense rows of `T`.
    pub fn adjacency_matrix<T: num_traits::Float>(&self) -> Vec<Vec<T>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| if self.has_edge(u, v) { T::one() } else { T::zero() }).collect())
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A partition of the vertex set into independent classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    classes: Vec<Vec<usize>>,
}

impl Coloring {
    /// Validates that `classes` partition `0..g.n()` into non-empty
    /// independent sets. Vertex order inside each class is normalised.
    pub fn new(g: &Graph, classes: Vec<Vec<usize>>) -> Result<Self> {
        let c = Self::partition(g.n(), classes)?;
        for (i, class) in c.classes.iter().enumerate() {
            let m = c.class_mask(i);
            if let Some(&v) = class.iter().find(|&&v| g.row(v) & m != 0) {
                return Err(Error::ImproperColoring(format!("class {i} contains an edge at vertex {v}")));
            }
        }
        Ok(c)
    }

    /// Validates only the partition property, not independence.
    pub fn partition(n: usize, mut classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = 0u64;
        for (i, class) in classes.iter_mut().enumerate() {
            if class.is_empty() {
                return Err(Error::ImproperColoring(format!("class {i} is empty")));
            }
            class.sort_unstable();
            for &v in class.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if seen & bit(v) != 0 {
                    return Err(Error::ImproperColoring(format!("vertex {v} appears twice")));
                }
                seen |= bit(v);
            }
        }
        if seen != full_mask(n) {
            return Err(Error::ImproperColoring("classes do not cover every vertex".into()));
        }
        Ok(Coloring { classes })
    }

    /// Builds a coloring from a color index per vertex (colors `0..k`, all used).
    pub fn from_colors(g: &Graph, colors: &[usize]) -> Result<Self> {
        let k = colors.iter().max().map_or(0, |&c| c + 1);
        let mut classes = vec![Vec::new(); k];
        for (v, &c) in colors.iter().enumerate() {
            classes[c].push(v);
        }
        Self::new(g, classes)
    }

    pub(crate) fn from_classes_unchecked(classes: Vec<Vec<usize>>) -> Self {
        Coloring { classes }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_mask(&self, i: usize) -> u64 {
        self.classes[i].iter().fold(0, |m, &v| m | bit(v))
    }

    /// Color index per vertex.
    pub fn colors(&self) -> Vec<usize> {
        let n = self.classes.iter().map(|c| c.len()).sum();
        let mut out = vec![0; n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                out[v] = i;
            }
        }
        out
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }

    /// Applies the vertex relabeling `perm` (old `v` becomes `perm[v]`).
    pub fn permuted(&self, perm: &[usize]) -> Coloring {
        let classes = self
            .classes
            .iter()
            .map(|c| {
                let mut c: Vec<usize> = c.iter().map(|&v| perm[v]).collect();
                c.sort_unstable();
                c
            })
            .collect();
        Coloring { classes }
    }
}
