//! Hoffman colorability, weight-quotient structure checks, and the
//! decomposition and composition of Hoffman colorings.

use crate::combinatorics::optimal_coloring_from;
use crate::error::{Error, Result};
use crate::graph::{bit, bits, Coloring, Graph};
use crate::linalg::{residual, Scalar};
use crate::spectra::{adjacency_flat, eigen, perron_vector, spectrum, Spectrum};

/// Tolerances used by the verification routines.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HoffmanConfig<T> {
    /// Eigenvalue equality tolerance.
    pub eigen_tol: T,
    /// Tolerance for `|h(G) − χ(G)|` and for the structural residuals.
    pub bound_tol: T,
}

impl<T: Scalar> Default for HoffmanConfig<T> {
    fn default() -> Self {
        HoffmanConfig { eigen_tol: T::DEFAULT_TOL, bound_tol: T::DEFAULT_BOUND_TOL }
    }
}

/// Spectral and chromatic data of one connected component.
#[derive(Clone, Debug, PartialEq)]
pub struct ComponentData<T> {
    pub lambda_max: T,
    pub lambda_min: T,
    pub chi: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HoffmanVerdict<T> {
    /// `h(G) = 1 − λ_max / λ_min`.
    pub bound: T,
    pub chi: usize,
    pub colorable: bool,
    pub per_component: Vec<ComponentData<T>>,
    /// An optimal coloring of the whole graph.
    pub coloring: Coloring,
}

fn component_data<T: Scalar>(g: &Graph, cfg: &HoffmanConfig<T>) -> Result<(ComponentData<T>, Vec<usize>, bool)> {
    if g.n() == 1 {
        return Ok((ComponentData { lambda_max: T::zero(), lambda_min: T::zero(), chi: 1 }, vec![0], false));
    }
    let s = spectrum::<T>(g, cfg.eigen_tol)?;
    let (lmax, lmin) = (s.lambda_max(), s.lambda_min());
    let h = T::one() - lmax / lmin;
    // Hoffman's bound is a valid lower bound on χ.
    let lower = (h - cfg.bound_tol).ceil().to_usize().unwrap_or(1);
    let (chi, coloring) = optimal_coloring_from(g, lower)?;
    let colorable = (h - T::from_usize_lossy(chi)).abs() <= cfg.bound_tol;
    Ok((ComponentData { lambda_max: lmax, lambda_min: lmin, chi }, coloring.colors(), colorable))
}

/// Decides Hoffman colorability. A disconnected graph is colorable when every
/// component is, with the same `λ_max`, `λ_min` and `χ` throughout.
pub fn is_hoffman_colorable_with<T: Scalar>(g: &Graph, cfg: &HoffmanConfig<T>) -> Result<HoffmanVerdict<T>> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let mut colors = vec![0; g.n()];
    let mut per_component = Vec::new();
    let mut colorable = true;
    for comp in g.connected_components() {
        let (data, comp_colors, ok) = component_data(&g.induced(&comp), cfg)?;
        for (i, &v) in comp.iter().enumerate() {
            colors[v] = comp_colors[i];
        }
        colorable &= ok;
        per_component.push(data);
    }
    let first = &per_component[0];
    colorable &= per_component.iter().all(|d| {
        d.chi == first.chi
            && (d.lambda_max - first.lambda_max).abs() <= cfg.eigen_tol
            && (d.lambda_min - first.lambda_min).abs() <= cfg.eigen_tol
    });
    let lmax = per_component.iter().map(|d| d.lambda_max).fold(T::neg_infinity(), T::max);
    let lmin = per_component.iter().map(|d| d.lambda_min).fold(T::infinity(), T::min);
    let chi = per_component.iter().map(|d| d.chi).max().unwrap_or(1);
    Ok(HoffmanVerdict { bound: T::one() - lmax / lmin, chi, colorable, per_component, coloring: Coloring::from_colors(g, &colors)? })
}

pub fn is_hoffman_colorable<T: Scalar>(g: &Graph) -> Result<HoffmanVerdict<T>> {
    is_hoffman_colorable_with(g, &HoffmanConfig::default())
}

/// Whether `c` is a Hoffman coloring of `g`: `g` is Hoffman colorable and `c`
/// is a proper coloring with `χ(g)` classes.
pub fn is_hoffman_coloring<T: Scalar>(g: &Graph, c: &Coloring, cfg: &HoffmanConfig<T>) -> Result<bool> {
    let verdict = is_hoffman_colorable_with(g, cfg)?;
    Ok(verdict.colorable && c.num_classes() == verdict.chi && Coloring::new(g, c.classes().to_vec()).is_ok())
}

/// Weight-intersection numbers of a coloring with respect to the Perron vector.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightQuotient<T> {
    pub size: usize,
    /// `entries[i][j] = y_iᵀ A_ij y_j / ‖y_i‖²`.
    pub entries: Vec<Vec<T>>,
    /// `‖y_i‖` per class.
    pub class_norms: Vec<T>,
    pub weight_regular: bool,
    /// Largest `|(A_ij y_j)(u) − b*_ij y_i(u)|` over all classes and vertices.
    pub regularity_residual: T,
}

pub fn weight_quotient<T: Scalar>(g: &Graph, c: &Coloring, tol: T) -> Result<WeightQuotient<T>> {
    let c = Coloring::new(g, c.classes().to_vec())?;
    let x = perron_vector::<T>(g, tol)?.vector;
    let k = c.num_classes();
    let masks: Vec<u64> = (0..k).map(|i| c.class_mask(i)).collect();
    let class_norms: Vec<T> = c.classes().iter().map(|cl| cl.iter().fold(T::zero(), |s, &v| s + x[v] * x[v]).sqrt()).collect();
    let mut entries = vec![vec![T::zero(); k]; k];
    let mut worst = T::zero();
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            // (A_ij y_j)(u) for u in V_i.
            let ay: Vec<T> = c.classes()[i].iter().map(|&u| bits(g.row(u) & masks[j]).fold(T::zero(), |s, v| s + x[v])).collect();
            let dot = c.classes()[i].iter().zip(&ay).fold(T::zero(), |s, (&u, &a)| s + x[u] * a);
            let b = dot / (class_norms[i] * class_norms[i]);
            entries[i][j] = b;
            for (&u, &a) in c.classes()[i].iter().zip(&ay) {
                worst = worst.max((a - b * x[u]).abs());
            }
        }
    }
    Ok(WeightQuotient { size: k, entries, class_norms, weight_regular: worst <= tol, regularity_residual: worst })
}

/// The three structural properties every Hoffman coloring satisfies.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureReport<T> {
    pub weight_regular: bool,
    /// Every off-diagonal `b*_ij` equals `−λ_min`.
    pub intersections_equal: bool,
    /// All class norms of the Perron restriction coincide.
    pub norms_equal: bool,
    pub regularity_residual: T,
    pub intersection_residual: T,
    pub norm_spread: T,
    pub quotient: WeightQuotient<T>,
}

impl<T> StructureReport<T> {
    pub fn all_hold(&self) -> bool {
        self.weight_regular && self.intersections_equal && self.norms_equal
    }
}

pub fn check_hoffman_structure<T: Scalar>(g: &Graph, c: &Coloring, cfg: &HoffmanConfig<T>) -> Result<StructureReport<T>> {
    let q = weight_quotient(g, c, cfg.bound_tol)?;
    let lmin = spectrum::<T>(g, cfg.eigen_tol)?.lambda_min();
    let mut ires = T::zero();
    for i in 0..q.size {
        for j in 0..q.size {
            if i != j {
                ires = ires.max((q.entries[i][j] + lmin).abs());
            }
        }
    }
    let hi = q.class_norms.iter().cloned().fold(T::neg_infinity(), T::max);
    let lo = q.class_norms.iter().cloned().fold(T::infinity(), T::min);
    let spread = hi - lo;
    Ok(StructureReport {
        weight_regular: q.weight_regular,
        intersections_equal: ires <= cfg.bound_tol,
        norms_equal: spread <= cfg.bound_tol,
        regularity_residual: q.regularity_residual,
        intersection_residual: ires,
        norm_spread: spread,
        quotient: q,
    })
}

/// Sub-coloring on a subset of the color classes, with its checks.
#[derive(Clone, Debug)]
pub struct Decomposition<T> {
    pub graph: Graph,
    pub coloring: Coloring,
    /// `vertices[i]` is the vertex of the parent graph that became `i`.
    pub vertices: Vec<usize>,
    pub colorable: bool,
    pub lambda_max: T,
    pub expected_lambda_max: T,
    pub lambda_min: T,
    pub parent_lambda_min: T,
    /// `‖A_H x_H − λ_max(H) x_H‖` for the normalised restricted Perron vector.
    pub perron_residual: T,
}

impl<T: Scalar> Decomposition<T> {
    /// Whether all four properties hold within `tol`.
    pub fn holds(&self, tol: T) -> bool {
        self.colorable
            && (self.lambda_max - self.expected_lambda_max).abs() <= tol
            && (self.lambda_min - self.parent_lambda_min).abs() <= tol
            && self.perron_residual <= tol
    }
}

/// Restricts a Hoffman coloring to the classes listed in `colors`.
pub fn decompose<T: Scalar>(g: &Graph, c: &Coloring, colors: &[usize], cfg: &HoffmanConfig<T>) -> Result<Decomposition<T>> {
    let mut colors = colors.to_vec();
    colors.sort_unstable();
    colors.dedup();
    if colors.len() < 2 {
        return Err(Error::InvalidArgument("need at least two colors".into()));
    }
    if let Some(&bad) = colors.iter().find(|&&i| i >= c.num_classes()) {
        return Err(Error::InvalidArgument(format!("color {bad} out of range")));
    }
    if !is_hoffman_coloring(g, c, cfg)? {
        return Err(Error::NotHoffmanColoring("coloring is not optimal or the bound is not tight".into()));
    }
    let chi = c.num_classes();
    let parent = perron_vector::<T>(g, cfg.eigen_tol)?;
    let parent_lmin = spectrum::<T>(g, cfg.eigen_tol)?.lambda_min();
    let mask = colors.iter().fold(0u64, |m, &i| m | c.class_mask(i));
    let vertices: Vec<usize> = bits(mask).collect();
    let h = g.induced(&vertices);
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in vertices.iter().enumerate() {
        index[v] = i;
    }
    let classes: Vec<Vec<usize>> = colors.iter().map(|&i| c.classes()[i].iter().map(|&v| index[v]).collect()).collect();
    let coloring = Coloring::new(&h, classes)?;
    let verdict = is_hoffman_colorable_with(&h, cfg)?;
    let s = spectrum::<T>(&h, cfg.eigen_tol)?;
    let mut xh: Vec<T> = vertices.iter().map(|&v| parent.vector[v]).collect();
    let norm = xh.iter().fold(T::zero(), |s, &v| s + v * v).sqrt();
    xh.iter_mut().for_each(|v| *v /= norm);
    let perron_residual = residual(&adjacency_flat::<T>(&h), h.n(), s.lambda_max(), &xh);
    let ratio = T::from_usize_lossy(colors.len() - 1) / T::from_usize_lossy(chi - 1);
    Ok(Decomposition {
        colorable: verdict.colorable && verdict.chi == colors.len(),
        lambda_max: s.lambda_max(),
        expected_lambda_max: ratio * parent.eigenvalue,
        lambda_min: s.lambda_min(),
        parent_lambda_min: parent_lmin,
        perron_residual,
        graph: h,
        coloring,
        vertices,
    })
}

/// Result of extending a template by one color class.
#[derive(Clone, Debug)]
pub struct Composition<T> {
    /// Template vertices keep their labels; new vertex `i` becomes `n_T + i`.
    pub graph: Graph,
    pub coloring: Coloring,
    pub colorable: bool,
    pub spectrum: Spectrum<T>,
    /// Weights of the new class, scaled to match the template Perron vector.
    pub y: Vec<T>,
    /// Largest disagreement between the weights implied by different classes.
    pub max_deviation: T,
}

/// Adds `new_count` independent vertices to a Hoffman-colored template, with
/// `cross_edges` pairs `(new vertex index, template vertex)`, and decides
/// Hoffman colorability of the result by comparing least eigenvalues.
pub fn compose_and_check<T: Scalar>(
    template: &Graph,
    tcoloring: &Coloring,
    new_count: usize,
    cross_edges: &[(usize, usize)],
    cfg: &HoffmanConfig<T>,
) -> Result<Composition<T>> {
    if new_count == 0 {
        return Err(Error::InvalidArgument("the new class must be non-empty".into()));
    }
    if !is_hoffman_coloring(template, tcoloring, cfg)? {
        return Err(Error::NotHoffmanColoring("template coloring".into()));
    }
    let nt = template.n();
    let n = nt + new_count;
    let mut edges = template.edges();
    for &(i, v) in cross_edges {
        if i >= new_count {
            return Err(Error::VertexOutOfRange { vertex: i, n: new_count });
        }
        if v >= nt {
            return Err(Error::VertexOutOfRange { vertex: v, n: nt });
        }
        edges.push((nt + i, v));
    }
    let g = Graph::from_edges(n, &edges)?;
    let x = perron_vector::<T>(template, cfg.eigen_tol)?.vector;
    let t_lmin = spectrum::<T>(template, cfg.eigen_tol)?.lambda_min();
    let nu = -t_lmin;
    let new_mask = (nt..n).fold(0u64, |m, v| m | bit(v));
    let mut y: Vec<Option<T>> = vec![None; new_count];
    let mut deviation = T::zero();
    for (ci, class) in tcoloring.classes().iter().enumerate() {
        let fail = |reason: String| Error::CompositionPrecondition { class: ci, reason };
        let mut verts = class.clone();
        verts.extend(nt..n);
        let h = g.induced(&verts);
        let h_lmin = spectrum::<T>(&h, cfg.eigen_tol)?.lambda_min();
        if (h_lmin - t_lmin).abs() > cfg.eigen_tol {
            return Err(fail(format!("least eigenvalue {h_lmin:?} differs from the template's {t_lmin:?}")));
        }
        for comp in h.connected_components() {
            let on_class: Vec<usize> = comp.iter().copied().filter(|&i| i < class.len()).collect();
            if on_class.is_empty() || on_class.len() == comp.len() {
                return Err(fail("a vertex has no neighbor across the class pair".into()));
            }
            let k = h.induced(&comp);
            let e = eigen::<T>(&k, cfg.eigen_tol)?;
            if (e.values[0] - nu).abs() > cfg.eigen_tol {
                return Err(fail(format!("component largest eigenvalue {:?} differs from {nu:?}", e.values[0])));
            }
            let mut p = e.vectors[0].clone();
            if p.iter().fold(T::zero(), |s, &v| s + v) < T::zero() {
                p.iter_mut().for_each(|v| *v = -*v);
            }
            // Least-squares scale matching x on the template side.
            let (mut num, mut den) = (T::zero(), T::zero());
            for (pos, &hv) in comp.iter().enumerate() {
                if hv < class.len() {
                    num += x[class[hv]] * p[pos];
                    den += p[pos] * p[pos];
                }
            }
            let alpha = num / den;
            for (pos, &hv) in comp.iter().enumerate() {
                let scaled = alpha * p[pos];
                if hv < class.len() {
                    let d = (scaled - x[class[hv]]).abs();
                    if d > cfg.bound_tol {
                        return Err(fail(format!("template weights are not proportional to a Perron vector (off by {d:?})")));
                    }
                } else {
                    let u = hv - class.len();
                    match y[u] {
                        Some(prev) => {
                            let d = (prev - scaled).abs();
                            deviation = deviation.max(d);
                            if d > cfg.bound_tol {
                                return Err(fail(format!("new vertex {u} gets weight {scaled:?}, expected {prev:?}")));
                            }
                        }
                        None => y[u] = Some(scaled),
                    }
                }
            }
        }
    }
    let y: Vec<T> = y.into_iter().map(|w| w.expect("every new vertex lies in some component")).collect();
    if y.iter().any(|&w| w <= T::zero()) {
        return Err(Error::CompositionPrecondition { class: 0, reason: "new-class weights are not positive".into() });
    }
    let spec = spectrum::<T>(&g, cfg.eigen_tol)?;
    let colorable = (spec.lambda_min() - t_lmin).abs() <= cfg.eigen_tol;
    let mut classes = tcoloring.classes().to_vec();
    classes.push(bits(new_mask).collect());
    Ok(Composition { coloring: Coloring::new(&g, classes)?, graph: g, colorable, spectrum: spec, y, max_deviation: deviation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::connected_graphs;

    type V = HoffmanVerdict<f64>;

    fn cfg() -> HoffmanConfig<f64> {
        HoffmanConfig::default()
    }

    pub(crate) fn figure_one() -> (Graph, Coloring) {
        let e = [(1, 6), (1, 7), (2, 6), (2, 8), (3, 7), (3, 9), (4, 8), (4, 9), (5, 6), (5, 7), (5, 8), (5, 9), (6, 7), (6, 8), (7, 9), (8, 9)];
        let edges: Vec<_> = e.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
        let g = Graph::from_edges(9, &edges).unwrap();
        let c = Coloring::new(&g, vec![vec![0, 1, 2, 3, 4], vec![5, 8], vec![6, 7]]).unwrap();
        (g, c)
    }

    fn bipartition(g: &Graph) -> Coloring {
        let side = g.two_coloring().unwrap();
        let a: Vec<usize> = (0..g.n()).filter(|&v| side & bit(v) == 0).collect();
        let b: Vec<usize> = (0..g.n()).filter(|&v| side & bit(v) != 0).collect();
        Coloring::new(g, vec![a, b]).unwrap()
    }

    #[test]
    fn verdict_examples() {
        let (f1, _) = figure_one();
        let v: V = is_hoffman_colorable(&f1).unwrap();
        assert!(v.colorable && v.chi == 3 && (v.bound - 3.0).abs() < 1e-9);
        let c5: V = is_hoffman_colorable(&Graph::cycle(5).unwrap()).unwrap();
        assert!(!c5.colorable && c5.chi == 3 && (c5.bound - 5f64.sqrt()).abs() < 1e-9);
        let k3 = Graph::complete(3).unwrap();
        let two: V = is_hoffman_colorable(&k3.disjoint_union(&k3).unwrap()).unwrap();
        assert!(two.colorable && two.per_component.len() == 2);
        let with_isolated = k3.disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        assert!(!is_hoffman_colorable::<f64>(&with_isolated).unwrap().colorable);
        let mixed = k3.disjoint_union(&Graph::complete(4).unwrap()).unwrap();
        assert!(!is_hoffman_colorable::<f64>(&mixed).unwrap().colorable);
        assert!(matches!(is_hoffman_colorable::<f64>(&Graph::empty(3).unwrap()), Err(Error::Edgeless)));
        let f: HoffmanVerdict<f32> = is_hoffman_colorable(&f1).unwrap();
        assert!(f.colorable);
    }

    #[test]
    fn weight_quotient_examples() {
        let k3 = Graph::complete(3).unwrap();
        let c = Coloring::new(&k3, vec![vec![0], vec![1], vec![2]]).unwrap();
        let q = weight_quotient::<f64>(&k3, &c, 1e-9).unwrap();
        assert!(q.weight_regular);
        for i in 0..3 {
            for j in 0..3 {
                assert!((q.entries[i][j] - if i == j { 0.0 } else { 1.0 }).abs() < 1e-9);
            }
        }
        let (f1, c1) = figure_one();
        let q = weight_quotient::<f64>(&f1, &c1, 1e-9).unwrap();
        assert!(q.weight_regular);
        for i in 0..3 {
            for j in 0..3 {
                assert!((q.entries[i][j] - if i == j { 0.0 } else { 2.0 }).abs() < 1e-9);
            }
        }
        let c6 = Graph::cycle(6).unwrap();
        let col = Coloring::new(&c6, vec![vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap();
        let q = weight_quotient::<f64>(&c6, &col, 1e-9).unwrap();
        assert!(q.entries.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, &b)| (b - if i == j { 0.0 } else { 1.0 }).abs() < 1e-9)));
        let bad = Graph::complete(3).unwrap().disjoint_union(&Graph::path(3).unwrap()).unwrap();
        let bc = Coloring::new(&bad, vec![vec![0, 3, 5], vec![1, 4], vec![2]]).unwrap();
        assert!(matches!(weight_quotient::<f64>(&bad, &bc, 1e-9), Err(Error::NoPositiveEigenvector(_))));
    }

    #[test]
    fn structure_examples() {
        let (f1, c1) = figure_one();
        assert!(check_hoffman_structure(&f1, &c1, &cfg()).unwrap().all_hold());
        let c6 = Graph::cycle(6).unwrap();
        assert!(check_hoffman_structure(&c6, &bipartition(&c6), &cfg()).unwrap().all_hold());
        let k4e = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let c = Coloring::new(&k4e, vec![vec![0], vec![1], vec![2, 3]]).unwrap();
        let h: f64 = crate::spectra::hoffman_bound(&k4e).unwrap();
        assert!(h < 3.0 - 1e-6);
        assert!(!check_hoffman_structure(&k4e, &c, &cfg()).unwrap().all_hold());
    }

    #[test]
    fn decomposition_examples() {
        let (f1, c1) = figure_one();
        let d = decompose(&f1, &c1, &[0, 1], &cfg()).unwrap();
        assert!(d.holds(1e-6));
        assert!((d.lambda_max - 2.0).abs() < 1e-9);
        let c8 = Graph::cycle(8).unwrap();
        let d = decompose(&c8, &bipartition(&c8), &[0, 1], &cfg()).unwrap();
        assert_eq!(d.graph, c8);
        let k4 = Graph::complete(4).unwrap();
        let ck4 = Coloring::new(&k4, vec![vec![0], vec![1], vec![2], vec![3]]).unwrap();
        let d = decompose(&k4, &ck4, &[1, 3], &cfg()).unwrap();
        assert!(d.holds(1e-6) && d.graph == Graph::complete(2).unwrap() && (d.lambda_max - 1.0).abs() < 1e-9);
        assert!(decompose(&k4, &ck4, &[1], &cfg()).is_err());
        let c5 = Graph::cycle(5).unwrap();
        let cc5 = Coloring::new(&c5, vec![vec![0, 2], vec![1, 3], vec![4]]).unwrap();
        assert!(matches!(decompose(&c5, &cc5, &[0, 1], &cfg()), Err(Error::NotHoffmanColoring(_))));
    }

    #[test]
    fn composition_examples() {
        let k2 = Graph::complete(2).unwrap();
        let c = Coloring::new(&k2, vec![vec![0], vec![1]]).unwrap();
        let r = compose_and_check(&k2, &c, 1, &[(0, 0), (0, 1)], &cfg()).unwrap();
        assert!(r.colorable && r.graph == Graph::complete(3).unwrap());
        let c8 = Graph::cycle(8).unwrap();
        let all: Vec<_> = (0..8).map(|v| (0, v)).collect();
        let r = compose_and_check(&c8, &bipartition(&c8), 1, &all, &cfg()).unwrap();
        assert!(r.colorable);
        assert!(is_hoffman_colorable::<f64>(&r.graph).unwrap().colorable);
        let c6 = Graph::cycle(6).unwrap();
        let all: Vec<_> = (0..6).map(|v| (0, v)).collect();
        let err = compose_and_check::<f64>(&c6, &bipartition(&c6), 1, &all, &cfg()).unwrap_err();
        assert!(matches!(err, Error::CompositionPrecondition { class: 0, .. }));
        let cone = Graph::from_edges(7, &c6.edges().into_iter().chain((0..6).map(|v| (v, 6))).collect::<Vec<_>>()).unwrap();
        let v: V = is_hoffman_colorable(&cone).unwrap();
        assert!(!v.colorable);
    }

    /// Brute-force agreement on every way to attach one or two new vertices
    /// to small Hoffman-colored bipartite templates.
    #[test]
    fn composition_agrees_with_direct_check() {
        let mut checked = 0;
        for n in 2..=5 {
            for t in connected_graphs(n, None).into_iter().filter(|g| g.is_bipartite()) {
                let tc = bipartition(&t);
                for k in 1..=2usize {
                    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..n).map(move |v| (i, v))).collect();
                    for mask in 0u64..1 << pairs.len() {
                        let cross: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p).collect();
                        let Ok(r) = compose_and_check::<f64>(&t, &tc, k, &cross, &cfg()) else { continue };
                        let direct: V = is_hoffman_colorable(&r.graph).unwrap();
                        assert_eq!(r.colorable, direct.colorable && direct.chi == 3, "{:?}", r.graph);
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 0);
    }
}
