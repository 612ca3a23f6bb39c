//! Canonical labeling by color refinement and backtracking.
//!
//! The search individualizes vertices of the first non-singleton cell,
//! refines to an equitable partition, and keeps the lexicographically
//! smallest relabeled adjacency matrix among the leaves. Automorphisms found
//! along the way prune children in the same orbit of the pointwise stabilizer
//! of the current path, and allow abandoning subtrees that are images of
//! subtrees already searched.

use std::collections::VecDeque;

use crate::graph::{bit, Coloring, Graph};
use crate::graph6::to_graph6;

const MAX_STORED_AUTOMORPHISMS: usize = 256;

/// Result of canonical labeling.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `perm[v]` is the canonical label of vertex `v`.
    pub perm: Vec<usize>,
    /// The graph relabeled by `perm`.
    pub graph: Graph,
}

/// Ordered partition with cells stored as contiguous ranges of `lab`.
#[derive(Clone)]
struct Part {
    lab: Vec<usize>,
    /// `cell_end[s]` is the exclusive end of the cell starting at position `s`.
    cell_end: Vec<usize>,
    /// Start position of the cell holding each vertex.
    cell_of: Vec<usize>,
}

impl Part {
    fn from_cells(n: usize, cells: &[u64]) -> Self {
        let mut lab = Vec::with_capacity(n);
        let mut cell_end = vec![0; n];
        let mut cell_of = vec![0; n];
        for &c in cells {
            let s = lab.len();
            lab.extend(crate::graph::bits(c));
            for &v in &lab[s..] {
                cell_of[v] = s;
            }
            cell_end[s] = lab.len();
        }
        debug_assert_eq!(lab.len(), n);
        Part { lab, cell_end, cell_of }
    }

    fn starts(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut s = 0;
        while s < self.lab.len() {
            out.push(s);
            s = self.cell_end[s];
        }
        out
    }

    fn is_discrete(&self) -> bool {
        (0..self.lab.len()).all(|s| self.cell_of[self.lab[s]] == s && self.cell_end[s] == s + 1)
    }

    fn cell_mask(&self, s: usize) -> u64 {
        self.lab[s..self.cell_end[s]].iter().fold(0, |m, &v| m | bit(v))
    }
}

fn refine(g: &Graph, p: &mut Part, initial: &[usize]) {
    let n = p.lab.len();
    let mut in_queue = vec![false; n];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &s in initial {
        if !in_queue[s] {
            in_queue[s] = true;
            queue.push_back(s);
        }
    }
    let mut counts = vec![0u32; n];
    while let Some(w) = queue.pop_front() {
        in_queue[w] = false;
        let wmask = p.cell_mask(w);
        let mut s = 0;
        while s < n {
            let e = p.cell_end[s];
            if e - s > 1 {
                let mut lo = u32::MAX;
                let mut hi = 0;
                for &v in &p.lab[s..e] {
                    let c = (g.row(v) & wmask).count_ones();
                    counts[v] = c;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo != hi {
                    p.lab[s..e].sort_unstable_by_key(|&v| (counts[v], v));
                    let mut start = s;
                    for i in s + 1..=e {
                        if i == e || counts[p.lab[i]] != counts[p.lab[start]] {
                            p.cell_end[start] = i;
                            for &v in &p.lab[start..i] {
                                p.cell_of[v] = start;
                            }
                            if !in_queue[start] {
                                in_queue[start] = true;
                                queue.push_back(start);
                            }
                            start = i;
                        }
                    }
                }
            }
            s = e;
        }
    }
}

fn individualize(g: &Graph, p: &mut Part, v: usize) {
    let s = p.cell_of[v];
    let e = p.cell_end[s];
    let pos = p.lab[s..e].iter().position(|&u| u == v).expect("vertex in its cell") + s;
    p.lab.swap(s, pos);
    p.cell_end[s] = s + 1;
    p.cell_end[s + 1] = e;
    for &u in &p.lab[s + 1..e] {
        p.cell_of[u] = s + 1;
    }
    refine(g, p, &[s]);
}

struct Leaf {
    code: Vec<u64>,
    lab: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf_code(&self, lab: &[usize]) -> Vec<u64> {
        let n = lab.len();
        let mut pos = vec![0; n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        lab.iter()
            .map(|&v| self.g.neighbors(v).fold(0u64, |r, u| r | bit(pos[u])))
            .collect()
    }

    /// Records the automorphism mapping `other` onto the current leaf and
    /// returns the level to resume at when the current subtree is an image
    /// of one already searched.
    fn automorphism(&mut self, other_lab: &[usize], other_path: &[usize], lab: &[usize], path: &[usize]) -> Option<usize> {
        let n = lab.len();
        let mut gamma = vec![0; n];
        for i in 0..n {
            gamma[other_lab[i]] = lab[i];
        }
        let common = other_path.iter().zip(path).take_while(|(a, b)| a == b).count();
        let upto = (common + 1).min(other_path.len()).min(path.len());
        let maps_prefix = (0..upto).all(|i| gamma[other_path[i]] == path[i]);
        if self.autos.len() < MAX_STORED_AUTOMORPHISMS {
            self.autos.push(gamma);
        }
        (maps_prefix && common < path.len()).then_some(common)
    }

    fn leaf(&mut self, p: &Part, path: &[usize]) -> Option<usize> {
        let code = self.leaf_code(&p.lab);
        let Some(first) = &self.first else {
            let leaf = Leaf { code: code.clone(), lab: p.lab.clone(), path: path.to_vec() };
            self.best = Some(Leaf { code, lab: p.lab.clone(), path: path.to_vec() });
            self.first = Some(leaf);
            return None;
        };
        if code == first.code {
            let (fl, fp) = (first.lab.clone(), first.path.clone());
            return self.automorphism(&fl, &fp, &p.lab, path);
        }
        let best = self.best.as_ref().expect("best set with first");
        match code.cmp(&best.code) {
            std::cmp::Ordering::Less => {
                self.best = Some(Leaf { code, lab: p.lab.clone(), path: path.to_vec() });
                None
            }
            std::cmp::Ordering::Equal => {
                let (bl, bp) = (best.lab.clone(), best.path.clone());
                self.automorphism(&bl, &bp, &p.lab, path)
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    fn same_orbit(&self, v: usize, explored: &[usize], path: &[usize], n: usize) -> bool {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if path.iter().all(|&u| gamma[u] == u) {
                any = true;
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }

    fn run(&mut self, p: Part, path: &mut Vec<usize>) -> Option<usize> {
        if p.is_discrete() {
            return self.leaf(&p, path);
        }
        let n = p.lab.len();
        let s = p.starts().into_iter().find(|&s| p.cell_end[s] - s > 1).expect("non-discrete");
        let mut candidates = p.lab[s..p.cell_end[s]].to_vec();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() && self.same_orbit(v, &explored, path, n) {
                continue;
            }
            explored.push(v);
            let mut child = p.clone();
            individualize(self.g, &mut child, v);
            path.push(v);
            let jump = self.run(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < path.len() {
                    return Some(level);
                }
            }
        }
        None
    }
}

/// Canonical relabeling of `g`, optionally respecting an ordered vertex
/// partition given as bit masks (cell `i` maps onto cell `i`).
pub fn canonical_labeling_cells(g: &Graph, cells: Option<&[u64]>) -> Labeling {
    let n = g.n();
    if n == 0 {
        return Labeling { perm: Vec::new(), graph: g.clone() };
    }
    let all = [g.vertex_mask()];
    let cells = cells.unwrap_or(&all);
    let mut p = Part::from_cells(n, cells);
    let starts = p.starts();
    refine(g, &mut p, &starts);
    let mut search = Search { g, first: None, best: None, autos: Vec::new() };
    search.run(p, &mut Vec::new());
    let best = search.best.expect("at least one leaf");
    let mut perm = vec![0; n];
    for (i, &v) in best.lab.iter().enumerate() {
        perm[v] = i;
    }
    let graph = g.permuted(&perm);
    Labeling { perm, graph }
}

/// Automorphisms preserving each cell, found while canonically labeling;
/// they generate a subgroup of the cell-preserving automorphism group.
pub(crate) fn automorphisms_cells(g: &Graph, cells: &[u64]) -> Vec<Vec<usize>> {
    if g.n() == 0 {
        return Vec::new();
    }
    let mut p = Part::from_cells(g.n(), cells);
    let starts = p.starts();
    refine(g, &mut p, &starts);
    let mut search = Search { g, first: None, best: None, autos: Vec::new() };
    search.run(p, &mut Vec::new());
    search.autos
}

pub fn canonical_labeling(g: &Graph, partition: Option<&Coloring>) -> Labeling {
    match partition {
        Some(c) => {
            let cells: Vec<u64> = (0..c.num_classes()).map(|i| c.class_mask(i)).collect();
            canonical_labeling_cells(g, Some(&cells))
        }
        None => canonical_labeling_cells(g, None),
    }
}

/// A string equal for two inputs iff they are isomorphic; with a partition,
/// iff there is an isomorphism mapping class `i` onto class `i` for all `i`.
pub fn canonical_form(g: &Graph, partition: Option<&Coloring>) -> String {
    let lab = canonical_labeling(g, partition);
    let body = to_graph6(&lab.graph).expect("n <= 64");
    match partition {
        Some(c) => {
            let sizes: Vec<String> = c.sizes().iter().map(|s| s.to_string()).collect();
            format!("{}|{}", sizes.join(","), body)
        }
        None => body,
    }
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_labeling(g, None).graph == canonical_labeling(h, None).graph
}
