use std::ops::ControlFlow;

use crate::combinatorics::for_each_coloring;
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::hoffman::{is_hoffman_colorable_with, HoffmanConfig};
use crate::linalg::Scalar;
use crate::spectra::{spectrum, Spectrum};

/// Adds `k` pairwise non-adjacent vertices `n..n+k`, each joined to every
/// vertex of `g`.
pub fn k_cone(g: &Graph, k: usize) -> Result<Graph> {
    let n = g.n();
    let mut edges = g.edges();
    for c in n..n + k {
        edges.extend((0..n).map(|v| (v, c)));
    }
    Graph::from_edges(n + k, &edges)
}

#[derive(Clone, Debug)]
pub struct ConeVerdict<T> {
    pub colorable: bool,
    /// `λ_min(G)² / k`.
    pub required_class_size: T,
    pub spectrum_of_cone: Spectrum<T>,
    /// A Hoffman coloring of the base with every class of the required size.
    pub base_coloring: Option<Coloring>,
}

/// Optimal coloring of `g` with `chi` classes of `size` vertices each.
fn equal_size_coloring(g: &Graph, chi: usize, size: usize) -> Option<Coloring> {
    if chi * size != g.n() {
        return None;
    }
    let mut found = None;
    for_each_coloring(g, chi, |colors| {
        let mut counts = vec![0; chi];
        for &c in colors {
            counts[c] += 1;
        }
        if counts.iter().all(|&s| s == size) {
            found = Some(colors.to_vec());
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found.map(|c| Coloring::from_colors(g, &c).expect("search yields proper colorings"))
}

/// The k-cone over `g` is Hoffman colorable exactly when `g` is regular and
/// Hoffman colorable with classes of size `λ_min(g)² / k`.
pub fn classify_cone<T: Scalar>(g: &Graph, k: usize, cfg: &HoffmanConfig<T>) -> Result<ConeVerdict<T>> {
    if k == 0 {
        return Err(Error::InvalidArgument("cone size must be positive".into()));
    }
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let spectrum_of_cone = spectrum::<T>(&k_cone(g, k)?, cfg.eigen_tol)?;
    let lmin = spectrum::<T>(g, cfg.eigen_tol)?.lambda_min();
    let required = lmin * lmin / T::from_usize_lossy(k);
    let mut base_coloring = None;
    if g.is_regular().is_some() {
        let verdict = is_hoffman_colorable_with(g, cfg)?;
        let size = required.round();
        if verdict.colorable && (required - size).abs() <= cfg.bound_tol && size >= T::one() {
            base_coloring = size.to_usize().and_then(|s| equal_size_coloring(g, verdict.chi, s));
        }
    }
    Ok(ConeVerdict { colorable: base_coloring.is_some(), required_class_size: required, spectrum_of_cone, base_coloring })
}

/// Predicted cone spectrum `{χν, 0^(k−1), −ν} ∪ Spec(G) ∖ {(χ−1)ν}`.
pub fn cone_spectrum_formula<T: Scalar>(g: &Graph, k: usize, cfg: &HoffmanConfig<T>) -> Result<Spectrum<T>> {
    let verdict = classify_cone(g, k, cfg)?;
    if !verdict.colorable {
        return Err(Error::Precondition("base must be regular and Hoffman colorable with classes of size λ_min²/k".into()));
    }
    let chi = verdict.base_coloring.as_ref().map_or(0, |c| c.num_classes());
    let s = spectrum::<T>(g, cfg.eigen_tol)?;
    let nu = -s.lambda_min();
    let chi_t = T::from_usize_lossy(chi);
    let top = (chi_t - T::one()) * nu;
    let mut values = s.values().to_vec();
    let pos = values
        .iter()
        .position(|&v| (v - top).abs() <= cfg.eigen_tol)
        .ok_or_else(|| Error::Precondition("largest eigenvalue is not (χ−1)ν".into()))?;
    values.remove(pos);
    values.push(chi_t * nu);
    values.extend(std::iter::repeat_n(T::zero(), k - 1));
    values.push(-nu);
    Ok(Spectrum::new(values, cfg.eigen_tol))
}
