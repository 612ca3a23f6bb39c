//! Exhaustive isomorph-free enumeration of connected Hoffman colorable graphs
//! with given order and chromatic number.

mod assemble;
mod bipartite;
mod search;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::canon::canonical_labeling;
use crate::combinatorics::independence_number;
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::graph6::to_graph6;
use crate::hoffman::{is_hoffman_colorable_with, HoffmanConfig};
use crate::partition::{integer_partitions, IntegerPartition};
use crate::spectra::extreme_eigenvalues;

pub use assemble::{assemble, compatible_collections, filter_partitions, final_check, CompatibleCollection};
pub use bipartite::{
    bipartite_catalog, catalog_feasible, generate_bipartite_parts, group_lambdas, lambda_possible, BipartitePart,
};

use search::{anchor, extend, level_key, Level, Params};

pub const REPORT_SCHEMA: u32 = 1;

pub(crate) fn ser_graph6<S: Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&to_graph6(g).map_err(serde::ser::Error::custom)?)
}

fn ser_coloring<S: Serializer>(c: &Coloring, s: S) -> std::result::Result<S::Ok, S::Error> {
    c.classes().serialize(s)
}

/// Treatment of colorings whose bipartite parts may be disconnected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DiscPolicy {
    /// Search them as well; the reported cases are resolved.
    #[default]
    Resolve,
    /// Skip them, leaving the reported cases open.
    Defer,
}

#[derive(Clone, Copy)]
pub struct EnumerationOptions<'a> {
    pub tol: f64,
    pub policy: DiscPolicy,
    pub progress: Option<&'a (dyn Fn(&str) + Sync)>,
}

impl Default for EnumerationOptions<'_> {
    fn default() -> Self {
        EnumerationOptions { tol: 1e-9, policy: DiscPolicy::Resolve, progress: None }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HoffmanGraph {
    #[serde(rename = "graph6", serialize_with = "ser_graph6")]
    pub graph: Graph,
    #[serde(serialize_with = "ser_coloring")]
    pub coloring: Coloring,
    pub lambda_max: f64,
    pub lambda_min: f64,
    pub alpha: usize,
    pub regular: bool,
    pub outperforming: bool,
}

impl HoffmanGraph {
    /// Graph6 of the canonical labeling, which the graph is stored in.
    pub fn canonical_form(&self) -> String {
        to_graph6(&self.graph).expect("n <= 64")
    }
}

/// A class-size partition and `λ_max` for which a disconnected bipartite part
/// fits some pair of classes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiscCase {
    pub partition: IntegerPartition,
    pub lambda_max: f64,
    pub part_graph6: String,
    pub resolved: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub total: usize,
    pub regular: usize,
    pub irregular: usize,
    pub outperforming: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationReport {
    pub schema: u32,
    pub n: usize,
    pub chi: usize,
    pub tolerance: f64,
    pub graphs: Vec<HoffmanGraph>,
    pub disc: Vec<DiscCase>,
    pub counts: Counts,
}

impl EnumerationReport {
    pub fn has_unresolved_disc(&self) -> bool {
        self.disc.iter().any(|d| !d.resolved)
    }
}

pub fn classify_counts(report: &EnumerationReport) -> Counts {
    counts_of(&report.graphs)
}

fn counts_of(graphs: &[HoffmanGraph]) -> Counts {
    let regular = graphs.iter().filter(|g| g.regular).count();
    Counts {
        total: graphs.len(),
        regular,
        irregular: graphs.len() - regular,
        outperforming: graphs.iter().filter(|g| g.outperforming).count(),
    }
}

/// Whether `χ > ⌈n/α⌉`.
pub fn outperforms(n: usize, chi: usize, alpha: usize) -> bool {
    chi > n.div_ceil(alpha)
}

pub fn enumerate_hoffman(n: usize, chi: usize, tol: f64) -> Result<EnumerationReport> {
    enumerate_hoffman_with(n, chi, &EnumerationOptions { tol, ..Default::default() })
}

fn note(opts: &EnumerationOptions, msg: impl FnOnce() -> String) {
    if let Some(f) = opts.progress {
        f(&msg());
    }
}

/// Catalogs for every side pair that is cheap enough to generate.
struct Catalogs {
    map: HashMap<(usize, usize), Vec<BipartitePart>>,
}

impl Catalogs {
    fn build(pairs: BTreeSet<(usize, usize)>, tol: f64) -> Self {
        let map = pairs.into_iter().filter(|&(a, b)| catalog_feasible(a, b)).map(|(a, b)| ((a, b), bipartite_catalog(a, b, tol))).collect();
        Catalogs { map }
    }

    fn get(&self, a: usize, b: usize) -> Option<&[BipartitePart]> {
        self.map.get(&(a.min(b), a.max(b))).map(|v| v.as_slice())
    }
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= 10.0 * tol
}

struct Task {
    partition: IntegerPartition,
    sizes: Vec<usize>,
    nu: f64,
    anchors: Vec<Graph>,
}

fn plan(n: usize, chi: usize, opts: &EnumerationOptions) -> Result<(Vec<Task>, Vec<DiscCase>)> {
    let partitions = integer_partitions(n, chi)?;
    let mut pairs = BTreeSet::new();
    for p in &partitions {
        let s = p.parts();
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                pairs.insert((s[i].min(s[j]), s[i].max(s[j])));
            }
        }
    }
    note(opts, || format!("generating bipartite parts for {} side pairs", pairs.len()));
    let cats = Catalogs::build(pairs, opts.tol);
    let connected_only = opts.policy == DiscPolicy::Defer;
    let mut tasks = Vec::new();
    let mut disc = Vec::new();
    for p in &partitions {
        let mut sizes = p.parts().to_vec();
        sizes.reverse();
        // Anchor on the smallest and largest classes when that catalog exists,
        // so later steps add small classes.
        if cats.get(sizes[0], sizes[chi - 1]).is_some() {
            let largest = sizes.pop().expect("chi >= 2");
            sizes.insert(1, largest);
        }
        let Some(anchors) = cats.get(sizes[0], sizes[1]) else {
            return Err(Error::InvalidArgument(format!("bipartite parts with sides {:?} are too many to generate", &sizes[..2])));
        };
        let usable: Vec<&BipartitePart> = anchors.iter().filter(|a| a.connected || !connected_only).collect();
        for nu in group_lambdas(&usable, opts.tol) {
            let mut ok = true;
            let mut cases = BTreeSet::new();
            for i in 0..chi {
                for j in i + 1..chi {
                    match cats.get(sizes[i], sizes[j]) {
                        Some(cat) => {
                            let with: Vec<&BipartitePart> = cat.iter().filter(|q| close(q.lambda_max, nu, opts.tol)).collect();
                            ok &= with.iter().any(|q| q.connected || !connected_only);
                            for q in with.iter().filter(|q| !q.connected) {
                                cases.insert(to_graph6(&q.graph)?);
                            }
                        }
                        None => ok &= lambda_possible(sizes[i], sizes[j], nu, opts.tol),
                    }
                }
            }
            if !ok {
                continue;
            }
            for g6 in cases {
                disc.push(DiscCase { partition: p.clone(), lambda_max: nu, part_graph6: g6, resolved: !connected_only });
            }
            let anchors = usable.iter().filter(|a| close(a.lambda_max, nu, opts.tol)).map(|a| a.graph.clone()).collect();
            tasks.push(Task { partition: p.clone(), sizes: sizes.clone(), nu, anchors });
        }
    }
    Ok((tasks, disc))
}

fn run_task(task: &Task, opts: &EnumerationOptions) -> Vec<(Graph, Coloring)> {
    let prm = Params { nu: task.nu, tol: opts.tol, eps: (100.0 * opts.tol).max(1e-10), connected_parts_only: opts.policy == DiscPolicy::Defer };
    let chi = task.sizes.len();
    let mut levels: Vec<Level> = task.anchors.par_iter().filter_map(|g| anchor(g, task.sizes[0], &prm)).collect();
    for (k, &size) in task.sizes.iter().enumerate().skip(2) {
        let last = k + 1 == chi;
        let children: Vec<Level> = levels.par_iter().flat_map_iter(|lv| extend(lv, size, &prm)).collect();
        let keyed: Vec<(Vec<u64>, Level)> = children
            .into_par_iter()
            .filter(|lv| !last || lv.g.is_connected())
            .map(|lv| {
                let key = if last { canonical_labeling(&lv.g, None).graph.rows().to_vec() } else { level_key(&lv) };
                (key, lv)
            })
            .collect();
        let mut unique: BTreeMap<Vec<u64>, Level> = BTreeMap::new();
        for (key, lv) in keyed {
            unique.entry(key).or_insert(lv);
        }
        levels = unique.into_values().collect();
        note(opts, || format!("partition {:?}, nu = {:.6}: {} states with {} classes", task.partition.parts(), task.nu, levels.len(), k + 1));
    }
    levels
        .into_iter()
        .filter(|lv| lv.g.is_connected())
        .map(|lv| {
            let classes = lv.starts.windows(2).map(|w| (w[0]..w[1]).collect()).collect();
            let c = Coloring::from_classes_unchecked(classes);
            (lv.g, c)
        })
        .collect()
}

fn connected_bipartite(n: usize, tol: f64) -> Result<Vec<(Graph, Coloring)>> {
    let mut out = Vec::new();
    for a in 1..=n / 2 {
        let b = n - a;
        if !catalog_feasible(a, b) {
            return Err(Error::InvalidArgument(format!("bipartite graphs with sides ({a}, {b}) are too many to generate")));
        }
        for p in generate_bipartite_parts(a, b, tol) {
            let c = Coloring::from_classes_unchecked(vec![(0..a).collect(), (a..n).collect()]);
            out.push((p.graph, c));
        }
    }
    Ok(out)
}

fn describe(g: Graph, c: Coloring, chi: usize, cfg: &HoffmanConfig<f64>) -> Result<HoffmanGraph> {
    let lab = canonical_labeling(&g, None);
    let coloring = c.permuted(&lab.perm);
    let graph = lab.graph;
    let verdict = is_hoffman_colorable_with(&graph, cfg)?;
    if !verdict.colorable || verdict.chi != chi || !graph.is_connected() {
        return Err(Error::Precondition(format!(
            "enumerated graph {} failed verification (chi = {}, bound = {})",
            to_graph6(&graph)?,
            verdict.chi,
            verdict.bound
        )));
    }
    let (lambda_max, lambda_min) = extreme_eigenvalues::<f64>(&graph, cfg.eigen_tol)?;
    let alpha = independence_number(&graph)?;
    Ok(HoffmanGraph {
        regular: graph.is_regular().is_some(),
        outperforming: outperforms(graph.n(), chi, alpha),
        coloring,
        graph,
        lambda_max,
        lambda_min,
        alpha,
    })
}

/// Every connected Hoffman colorable graph on `n` vertices with chromatic
/// number `chi`, up to isomorphism, sorted by canonical graph6.
pub fn enumerate_hoffman_with(n: usize, chi: usize, opts: &EnumerationOptions) -> Result<EnumerationReport> {
    if chi < 2 || chi > n || n > 24 {
        return Err(Error::InvalidArgument(format!("need 2 <= chi <= n <= 24, got n = {n}, chi = {chi}")));
    }
    let (found, disc) = if chi == 2 {
        (connected_bipartite(n, opts.tol)?, Vec::new())
    } else {
        let (tasks, disc) = plan(n, chi, opts)?;
        note(opts, || format!("n = {n}, chi = {chi}: {} (partition, nu) tasks", tasks.len()));
        let found: Vec<(Graph, Coloring)> = tasks.iter().flat_map(|t| run_task(t, opts)).collect();
        (found, disc)
    };
    let mut unique: BTreeMap<Vec<u64>, (Graph, Coloring)> = BTreeMap::new();
    for (g, c) in found {
        let key = canonical_labeling(&g, None).graph.rows().to_vec();
        unique.entry(key).or_insert((g, c));
    }
    let cfg = HoffmanConfig::<f64> { eigen_tol: opts.tol, ..Default::default() };
    let mut graphs: Vec<HoffmanGraph> =
        unique.into_values().collect::<Vec<_>>().into_par_iter().map(|(g, c)| describe(g, c, chi, &cfg)).collect::<Result<_>>()?;
    graphs.sort_by_cached_key(|h| h.canonical_form());
    let counts = counts_of(&graphs);
    Ok(EnumerationReport { schema: REPORT_SCHEMA, n, chi, tolerance: opts.tol, graphs, disc, counts })
}
