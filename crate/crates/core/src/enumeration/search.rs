//! Class-by-class extension of partial Hoffman colorings.
//!
//! A level holds an induced subgraph on the first `k` classes. Each of its
//! components carries a Perron vector, and the restriction to every pair of
//! classes is an eigenvector of that bipartite part for `ν`. A new class is
//! added one vertex at a time, choosing its neighborhood in each existing
//! class. The unknown relative scales of the components are constrained by
//! linear equations; once they are fixed, neighborhoods come from a
//! subset-sum lookup. Every partial graph is an induced subgraph of the
//! target, so interlacing requires `λ_min ≥ −ν`, tested by extending a
//! Cholesky factor of `A + (ν + ε)I`.
//!
//! New vertices are interchangeable, so their rows are kept in
//! lexicographic order. The chosen representative is the least row
//! sequence in its orbit: columns of twin vertices stay ordered and the
//! first row is least in its orbit under the automorphisms of the level.
//! Column sums and the class norm bound what the remaining vertices can add.

use std::collections::HashSet;

use crate::canon::{automorphisms_cells, canonical_labeling_cells};
use crate::graph::{bit, bits, full_mask, Graph};
use crate::spectra::eigen;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub g: Graph,
    /// Class `i` occupies vertices `starts[i]..starts[i + 1]`.
    pub starts: Vec<usize>,
    comp: Vec<usize>,
    ncomp: usize,
    /// Perron vector of each component, each of unit norm.
    p: Vec<f64>,
    /// Lower Cholesky factor of `A + (ν + ε)I`, row-major.
    chol: Vec<f64>,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Params {
    pub nu: f64,
    /// Tolerance for eigenvalues and weight sums.
    pub tol: f64,
    /// Diagonal shift in the interlacing test.
    pub eps: f64,
    /// Reject bipartite parts that are disconnected.
    pub connected_parts_only: bool,
}

fn class_of(starts: &[usize], n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for i in 0..starts.len() - 1 {
        out[starts[i]..starts[i + 1]].iter_mut().for_each(|c| *c = i);
    }
    out
}

fn class_mask(starts: &[usize], i: usize) -> u64 {
    full_mask(starts[i + 1]) & !full_mask(starts[i])
}

fn cholesky(g: &Graph, shift: f64) -> Option<Vec<f64>> {
    let n = g.n();
    let mut l = vec![0.0; n * n];
    for j in 0..n {
        let mut d = shift;
        for k in 0..j {
            d -= l[j * n + k] * l[j * n + k];
        }
        if d <= 0.0 {
            return None;
        }
        let d = d.sqrt();
        l[j * n + j] = d;
        for i in j + 1..n {
            let mut s = if g.has_edge(i, j) { 1.0 } else { 0.0 };
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = s / d;
        }
    }
    Some(l)
}

/// Whether every bipartite part between two classes is connected.
pub(crate) fn parts_connected(g: &Graph, starts: &[usize]) -> bool {
    let k = starts.len() - 1;
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let within = class_mask(starts, i) | class_mask(starts, j);
            let rows: Vec<u64> = (0..g.n()).map(|v| if within & bit(v) != 0 { g.row(v) & within } else { 0 }).collect();
            let h = Graph::from_rows_unchecked(rows);
            let start = bit(starts[i]);
            h.reach(start, within) == within
        })
    })
}

/// Validates a partial coloring and attaches component Perron vectors.
pub(crate) fn check_state(g: Graph, starts: Vec<usize>, prm: &Params) -> Option<Level> {
    let n = g.n();
    let k = starts.len() - 1;
    let classes = class_of(&starts, n);
    let target = (k - 1) as f64 * prm.nu;
    let mut comp = vec![0; n];
    let mut p = vec![0.0; n];
    let masks = g.component_masks();
    for (c, &m) in masks.iter().enumerate() {
        let verts: Vec<usize> = bits(m).collect();
        if verts.len() < k {
            return None;
        }
        let e = eigen::<f64>(&g.induced(&verts), prm.tol).ok()?;
        if (e.values[0] - target).abs() > prm.tol * n as f64 {
            return None;
        }
        let x = &e.vectors[0];
        let sign = if x.iter().sum::<f64>() < 0.0 { -1.0 } else { 1.0 };
        for (i, &v) in verts.iter().enumerate() {
            comp[v] = c;
            p[v] = sign * x[i];
            if p[v] <= 0.0 {
                return None;
            }
        }
    }
    let scale = 100.0 * prm.tol;
    for v in 0..n {
        for j in 0..k {
            if j == classes[v] {
                continue;
            }
            let s: f64 = bits(g.row(v) & class_mask(&starts, j)).map(|w| p[w]).sum();
            if (s - prm.nu * p[v]).abs() > scale {
                return None;
            }
        }
    }
    if prm.connected_parts_only && !parts_connected(&g, &starts) {
        return None;
    }
    let chol = cholesky(&g, prm.nu + prm.eps)?;
    Some(Level { g, starts, comp, ncomp: masks.len(), p, chol })
}

/// Key equal for two levels iff some isomorphism maps classes onto classes.
pub(crate) fn level_key(lv: &Level) -> Vec<u64> {
    let n = lv.g.n();
    let k = lv.starts.len() - 1;
    let mut rows = lv.g.rows().to_vec();
    rows.resize(n + k, 0);
    for i in 0..k {
        for v in lv.starts[i]..lv.starts[i + 1] {
            rows[v] |= bit(n + i);
            rows[n + i] |= bit(v);
        }
    }
    let aug = Graph::from_rows_unchecked(rows);
    let cells = [full_mask(n), full_mask(n + k) & !full_mask(n)];
    canonical_labeling_cells(&aug, Some(&cells)).graph.rows().to_vec()
}

/// Subset masks of one class with their weight sums, sorted by sum.
type SumTable = Vec<(f64, u64)>;

/// Scale assignment of the components, once determined.
#[derive(Clone)]
struct Pin {
    eqs: Vec<Vec<f64>>,
    /// Vertex weights and per-class subset-sum tables, sorted by sum.
    fixed: Option<(Vec<f64>, Vec<SumTable>)>,
    /// Squared class norm and the range of a new vertex's weight.
    bounds: Bounds,
}

#[derive(Clone, Copy, Default)]
struct Bounds {
    norm2: f64,
    ymin: f64,
    ymax: f64,
}

struct Ext<'a> {
    lv: &'a Level,
    prm: Params,
    s: usize,
    k: usize,
    nt: usize,
    /// `rows[u][i]`: neighborhood of new vertex `u` in class `i`, relative to
    /// the class start.
    rows: Vec<Vec<u64>>,
    /// Cholesky rows of the new vertices.
    lrows: Vec<Vec<f64>>,
    /// Per class, pairs `(hi, lo)` of consecutive twins as relative bits.
    twins: Vec<Vec<(u64, u64)>>,
    /// Class-preserving automorphisms of the level.
    group: Vec<Vec<usize>>,
    out: Vec<Level>,
}

fn null_direction(eqs: &[Vec<f64>], r: usize, tol: f64) -> Result<Option<Vec<f64>>, ()> {
    let mut m: Vec<Vec<f64>> = eqs.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..r {
        let Some(best) = (row..m.len()).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs())) else { break };
        if m[best][col].abs() <= tol {
            continue;
        }
        m.swap(row, best);
        let pv = m[row][col];
        m[row].iter_mut().for_each(|x| *x /= pv);
        for other in 0..m.len() {
            if other != row {
                let f = m[other][col];
                if f != 0.0 {
                    for c in 0..r {
                        m[other][c] -= f * m[row][c];
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    match pivots.len() {
        x if x == r => Err(()),
        x if x + 1 == r => {
            let free = (0..r).find(|c| !pivots.contains(c)).expect("one free column");
            let mut t = vec![0.0; r];
            t[free] = 1.0;
            for (ri, &pc) in pivots.iter().enumerate() {
                t[pc] = -m[ri][free];
            }
            let sign = if t.iter().sum::<f64>() < 0.0 { -1.0 } else { 1.0 };
            t.iter_mut().for_each(|x| *x *= sign);
            if t.iter().any(|&x| x <= tol) {
                return Err(());
            }
            Ok(Some(t))
        }
        _ => Ok(None),
    }
}

impl<'a> Ext<'a> {
    fn class_size(&self, i: usize) -> usize {
        self.lv.starts[i + 1] - self.lv.starts[i]
    }

    fn pin_with(&self, t: &[f64], eqs: Vec<Vec<f64>>) -> Option<Pin> {
        let w: Vec<f64> = (0..self.nt).map(|v| t[self.lv.comp[v]] * self.lv.p[v]).collect();
        let nu = self.prm.nu;
        let class_w = |i: usize| &w[self.lv.starts[i]..self.lv.starts[i + 1]];
        let norms: Vec<f64> = (0..self.k).map(|i| class_w(i).iter().map(|x| x * x).sum()).collect();
        if norms.iter().any(|x| (x - norms[0]).abs() > 100.0 * self.prm.tol * norms[0].max(1.0)) {
            return None;
        }
        let ymin = (0..self.k).map(|i| class_w(i).iter().copied().fold(f64::INFINITY, f64::min)).fold(0.0, f64::max) / nu;
        let ymax = (0..self.k).map(|i| class_w(i).iter().sum::<f64>()).fold(f64::INFINITY, f64::min) / nu;
        let bounds = Bounds { norm2: norms[0], ymin, ymax };
        let tables = (0..self.k)
            .map(|i| {
                let st = self.lv.starts[i];
                let m = self.class_size(i);
                let mut sums = vec![0.0; 1 << m];
                let mut out = Vec::with_capacity((1 << m) - 1);
                for mask in 1u64..1 << m {
                    let low = mask.trailing_zeros() as usize;
                    sums[mask as usize] = sums[(mask & (mask - 1)) as usize] + w[st + low];
                    out.push((sums[mask as usize], mask));
                }
                out.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
                out
            })
            .collect();
        Some(Pin { eqs, fixed: Some((w, tables)), bounds })
    }

    fn class_sum(&self, w: &[f64], i: usize, mask: u64) -> f64 {
        let st = self.lv.starts[i];
        bits(mask).map(|b| w[st + b]).sum()
    }

    fn comp_sums(&self, i: usize, mask: u64) -> Vec<f64> {
        let st = self.lv.starts[i];
        let mut out = vec![0.0; self.lv.ncomp];
        for b in bits(mask) {
            out[self.lv.comp[st + b]] += self.lv.p[st + b];
        }
        out
    }

    fn run(&mut self) {
        let r = self.lv.ncomp;
        let pin = if r == 1 {
            match self.pin_with(&[1.0], Vec::new()) {
                Some(p) => p,
                None => return,
            }
        } else {
            Pin { eqs: Vec::new(), fixed: None, bounds: Bounds::default() }
        };
        self.vertex(0, &pin);
    }

    fn vertex(&mut self, u: usize, pin: &Pin) {
        if u == self.s {
            self.finish(pin);
            return;
        }
        self.block(u, 0, true, pin);
    }

    fn block(&mut self, u: usize, i: usize, tied: bool, pin: &Pin) {
        if i == self.k {
            self.close_vertex(u, pin);
            return;
        }
        let lower = if u > 0 && tied { self.rows[u - 1][i] } else { 1 };
        let top = full_mask(self.class_size(i));
        match (&pin.fixed, i) {
            (Some((w, tables)), i) if i > 0 => {
                let target = self.class_sum(w, 0, self.rows[u][0]);
                let tab = &tables[i];
                let tol = 100.0 * self.prm.tol;
                let start = tab.partition_point(|e| e.0 < target - tol);
                let cands: Vec<u64> = tab[start..]
                    .iter()
                    .take_while(|e| e.0 <= target + tol)
                    .map(|e| e.1)
                    .filter(|&m| m >= lower)
                    .collect();
                for m in cands {
                    self.rows[u][i] = m;
                    if self.twins_ok(u, i) {
                        self.block(u, i + 1, tied && m == lower, pin);
                    }
                }
            }
            _ => {
                for m in lower..=top {
                    self.rows[u][i] = m;
                    if !self.twins_ok(u, i) {
                        continue;
                    }
                    let next_tied = tied && m == lower;
                    if i == 0 || pin.fixed.is_some() {
                        self.block(u, i + 1, next_tied, pin);
                        continue;
                    }
                    let a = self.comp_sums(i, m);
                    let b = self.comp_sums(0, self.rows[u][0]);
                    let eq: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
                    if eq.iter().all(|x| x.abs() <= 100.0 * self.prm.tol) {
                        self.block(u, i + 1, next_tied, pin);
                        continue;
                    }
                    let mut eqs = pin.eqs.clone();
                    eqs.push(eq);
                    match null_direction(&eqs, self.lv.ncomp, 100.0 * self.prm.tol) {
                        Err(()) => {}
                        Ok(None) => self.block(u, i + 1, next_tied, &Pin { eqs, fixed: None, bounds: Bounds::default() }),
                        Ok(Some(t)) => {
                            if let Some(np) = self.pin_with(&t, eqs) {
                                if self.rows_consistent(u, i, &np) {
                                    self.block(u, i + 1, next_tied, &np);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    /// Columns of twins read down the new vertices stay lexicographically
    /// ordered, the less significant twin first.
    fn twins_ok(&self, u: usize, i: usize) -> bool {
        let m = self.rows[u][i];
        self.twins[i].iter().all(|&(hi, lo)| {
            m & hi == 0 || m & lo != 0 || (0..u).any(|x| (self.rows[x][i] & hi == 0) != (self.rows[x][i] & lo == 0))
        })
    }

    /// Row sums of all vertices chosen so far agree under a new pin.
    fn rows_consistent(&self, u: usize, upto: usize, pin: &Pin) -> bool {
        let (w, _) = pin.fixed.as_ref().expect("pinned");
        let tol = 100.0 * self.prm.tol;
        (0..=u).all(|x| {
            let last = if x == u { upto } else { self.k - 1 };
            let t = self.class_sum(w, 0, self.rows[x][0]);
            (1..=last).all(|i| (self.class_sum(w, i, self.rows[x][i]) - t).abs() <= tol)
        })
    }

    /// No automorphic image of row `u` precedes the first row.
    fn orbit_ok(&self, u: usize) -> bool {
        let first = &self.rows[0];
        let starts = &self.lv.starts;
        self.group.iter().all(|sigma| {
            for i in 0..self.k {
                let image = bits(self.rows[u][i]).fold(0, |m, b| m | bit(sigma[starts[i] + b] - starts[i]));
                if image != first[i] {
                    return image > first[i];
                }
            }
            true
        })
    }

    fn close_vertex(&mut self, u: usize, pin: &Pin) {
        if u == 0 && !self.orbit_ok(0) {
            return;
        }
        let m = self.nt + u;
        let mut a = vec![0.0; m];
        for i in 0..self.k {
            let st = self.lv.starts[i];
            for b in bits(self.rows[u][i]) {
                a[st + b] = 1.0;
            }
        }
        let n = self.nt;
        let mut l = vec![0.0; m + 1];
        let mut acc = 0.0;
        for j in 0..m {
            let (row, d) = if j < n {
                (&self.lv.chol[j * n..j * n + j], self.lv.chol[j * n + j])
            } else {
                let r = &self.lrows[j - n];
                (&r[..j], r[j])
            };
            let mut s = a[j];
            for q in 0..j {
                s -= row[q] * l[q];
            }
            l[j] = s / d;
            acc += l[j] * l[j];
        }
        let d2 = self.prm.nu + self.prm.eps - acc;
        if d2 <= 0.0 {
            return;
        }
        l[m] = d2.sqrt();
        if let Some((w, _)) = &pin.fixed {
            if !self.columns_ok(w, &pin.bounds, u + 1) {
                return;
            }
        }
        self.lrows.push(l);
        self.vertex(u + 1, pin);
        self.lrows.pop();
    }

    /// Column sums stay below `ν w` and the remaining vertices can still
    /// close every deficit and the class norm.
    fn columns_ok(&self, w: &[f64], b: &Bounds, placed: usize) -> bool {
        let tol = 100.0 * self.prm.tol;
        let nu = self.prm.nu;
        let left = (self.s - placed) as f64;
        let mut col = vec![0.0; self.nt];
        let mut norm2 = 0.0;
        for x in 0..placed {
            let y = self.class_sum(w, 0, self.rows[x][0]) / nu;
            norm2 += y * y;
            for i in 0..self.k {
                let st = self.lv.starts[i];
                for b in bits(self.rows[x][i]) {
                    col[st + b] += y;
                }
            }
        }
        let rest = b.norm2 - norm2;
        if rest < left * b.ymin * b.ymin - tol || rest > left * b.ymax * b.ymax + tol {
            return false;
        }
        col.iter().zip(w).all(|(c, wv)| {
            let deficit = nu * wv - c;
            deficit >= -tol && deficit <= left * b.ymax + tol && (deficit <= tol || deficit >= b.ymin - tol)
        })
    }

    fn finish(&mut self, _pin: &Pin) {
        let n = self.nt + self.s;
        let mut rows = self.lv.g.rows().to_vec();
        rows.resize(n, 0);
        for u in 0..self.s {
            let nu_v = self.nt + u;
            for i in 0..self.k {
                let st = self.lv.starts[i];
                for b in bits(self.rows[u][i]) {
                    rows[nu_v] |= bit(st + b);
                    rows[st + b] |= bit(nu_v);
                }
            }
        }
        let mut starts = self.lv.starts.clone();
        starts.push(n);
        if let Some(lv) = check_state(Graph::from_rows_unchecked(rows), starts, &self.prm) {
            self.out.push(lv);
        }
    }
}

const MAX_GROUP: usize = 4096;

/// Elements of the group generated by the automorphisms found for the level,
/// up to `MAX_GROUP` of them, without the identity.
fn level_group(lv: &Level) -> Vec<Vec<usize>> {
    let k = lv.starts.len() - 1;
    let cells: Vec<u64> = (0..k).map(|i| class_mask(&lv.starts, i)).collect();
    let gens = automorphisms_cells(&lv.g, &cells);
    let id: Vec<usize> = (0..lv.g.n()).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    let mut i = 0;
    while i < queue.len() && seen.len() < MAX_GROUP {
        let x = queue[i].clone();
        i += 1;
        for g in &gens {
            let y: Vec<usize> = x.iter().map(|&v| g[v]).collect();
            if seen.len() < MAX_GROUP && seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    queue.into_iter().skip(1).collect()
}

fn twin_pairs(lv: &Level) -> Vec<Vec<(u64, u64)>> {
    (0..lv.starts.len() - 1)
        .map(|i| {
            let st = lv.starts[i];
            let mut out = Vec::new();
            for v in st..lv.starts[i + 1] {
                if let Some(w) = (v + 1..lv.starts[i + 1]).find(|&w| lv.g.row(w) == lv.g.row(v)) {
                    out.push((bit(w - st), bit(v - st)));
                }
            }
            out
        })
        .collect()
}

/// All valid levels obtained by appending a class of `size` vertices.
pub(crate) fn extend(lv: &Level, size: usize, prm: &Params) -> Vec<Level> {
    let k = lv.starts.len() - 1;
    let mut ext = Ext {
        lv,
        prm: *prm,
        s: size,
        k,
        nt: lv.g.n(),
        rows: vec![vec![0; k]; size],
        lrows: Vec::new(),
        twins: twin_pairs(lv),
        group: level_group(lv),
        out: Vec::new(),
    };
    ext.run();
    ext.out
}

/// Level for a two-class anchor with sides `0..a` and `a..`.
pub(crate) fn anchor(g: &Graph, a: usize, prm: &Params) -> Option<Level> {
    check_state(g.clone(), vec![0, a, g.n()], prm)
}
