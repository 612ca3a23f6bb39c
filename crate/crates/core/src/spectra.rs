//! Adjacency spectra, Perron eigenvectors, and the Hoffman and ratio bounds.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::linalg::{self, residual, symmetric_eigen, Eigen, Scalar};

/// Adjacency eigenvalues sorted descending, with the tolerance used to compare them.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<T> {
    values: Vec<T>,
    tol: T,
}

impl<T: Scalar> Spectrum<T> {
    pub fn new(mut values: Vec<T>, tol: T) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
        Spectrum { values, tol }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn tol(&self) -> T {
        self.tol
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn lambda_max(&self) -> T {
        self.values[0]
    }

    pub fn lambda_min(&self) -> T {
        self.values[self.values.len() - 1]
    }

    /// Number of eigenvalues within `tol` of `x`.
    pub fn multiplicity(&self, x: T) -> usize {
        self.values.iter().filter(|&&v| (v - x).abs() <= self.tol).count()
    }

    /// Distinct eigenvalues (clustered within `tol`) with multiplicities.
    pub fn distinct(&self) -> Vec<(T, usize)> {
        let mut out: Vec<(T, usize)> = Vec::new();
        for &v in &self.values {
            match out.last_mut() {
                Some((x, m)) if (*x - v).abs() <= self.tol => *m += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }

    /// Entrywise comparison of two sorted spectra.
    pub fn approx_eq(&self, other: &Spectrum<T>, tol: T) -> bool {
        self.len() == other.len() && self.values.iter().zip(&other.values).all(|(a, b)| (*a - *b).abs() <= tol)
    }
}

/// Positive unit eigenvector for the largest adjacency eigenvalue.
#[derive(Clone, Debug, PartialEq)]
pub struct PerronData<T> {
    pub eigenvalue: T,
    pub vector: Vec<T>,
}

pub(crate) fn adjacency_flat<T: Scalar>(g: &Graph) -> Vec<T> {
    let n = g.n();
    let mut m = vec![T::zero(); n * n];
    for u in 0..n {
        for v in g.neighbors(u) {
            m[u * n + v] = T::one();
        }
    }
    m
}

/// Full eigendecomposition of the adjacency matrix, with residuals checked
/// against `tol · n`.
pub fn eigen<T: Scalar>(g: &Graph, tol: T) -> Result<Eigen<T>> {
    if g.n() == 0 {
        return Err(Error::NoVertices);
    }
    let n = g.n();
    let a = adjacency_flat::<T>(g);
    let e = symmetric_eigen(&a, n)?;
    let bound = tol * T::from_usize_lossy(n);
    for (lambda, x) in e.values.iter().zip(&e.vectors) {
        if residual(&a, n, *lambda, x) > bound {
            return Err(Error::NoConvergence { sweeps: linalg::MAX_SWEEPS });
        }
    }
    Ok(e)
}

pub fn spectrum<T: Scalar>(g: &Graph, tol: T) -> Result<Spectrum<T>> {
    Ok(Spectrum::new(eigen(g, tol)?.values, tol))
}

/// Extreme adjacency eigenvalues `(λ_max, λ_min)`.
pub fn extreme_eigenvalues<T: Scalar>(g: &Graph, tol: T) -> Result<(T, T)> {
    let s = spectrum(g, tol)?;
    Ok((s.lambda_max(), s.lambda_min()))
}

fn connected_perron<T: Scalar>(g: &Graph, tol: T) -> Result<PerronData<T>> {
    if g.n() == 1 {
        return Ok(PerronData { eigenvalue: T::zero(), vector: vec![T::one()] });
    }
    let e = eigen(g, tol)?;
    let mut x = e.vectors[0].clone();
    let sum = x.iter().fold(T::zero(), |s, &v| s + v);
    if sum < T::zero() {
        x.iter_mut().for_each(|v| *v = -*v);
    }
    if x.iter().any(|&v| v <= T::zero()) {
        return Err(Error::NoPositiveEigenvector("eigensolver returned a non-positive Perron vector".into()));
    }
    Ok(PerronData { eigenvalue: e.values[0], vector: x })
}

/// Perron vector of a graph whose components all share the same largest
/// eigenvalue. Components contribute equally, each normalised to norm
/// `1/√k` for `k` components.
pub fn perron_vector<T: Scalar>(g: &Graph, tol: T) -> Result<PerronData<T>> {
    if g.n() == 0 {
        return Err(Error::NoVertices);
    }
    let comps = g.component_masks();
    if comps.len() == 1 {
        return connected_perron(g, tol);
    }
    let scale = T::one() / T::from_usize_lossy(comps.len()).sqrt();
    let mut vector = vec![T::zero(); g.n()];
    let mut eigenvalue: Option<T> = None;
    for m in comps {
        let verts: Vec<usize> = bits(m).collect();
        let p = connected_perron(&g.induced(&verts), tol)?;
        match eigenvalue {
            Some(l) if (l - p.eigenvalue).abs() > tol => {
                return Err(Error::NoPositiveEigenvector(format!(
                    "components have different largest eigenvalues {l:?} and {:?}",
                    p.eigenvalue
                )))
            }
            Some(_) => {}
            None => eigenvalue = Some(p.eigenvalue),
        }
        for (i, &v) in verts.iter().enumerate() {
            vector[v] = p.vector[i] * scale;
        }
    }
    Ok(PerronData { eigenvalue: eigenvalue.expect("at least one component"), vector })
}

/// Perron vector by power iteration on `A + I`. Slower than [`perron_vector`]
/// but independent of the eigensolver; requires a connected graph.
pub fn perron_power_iteration<T: Scalar>(g: &Graph, tol: T, max_iter: usize) -> Result<PerronData<T>> {
    if !g.is_connected() || g.n() == 0 {
        return Err(Error::Precondition("power iteration needs a connected graph".into()));
    }
    let n = g.n();
    let mut x = vec![T::one() / T::from_usize_lossy(n).sqrt(); n];
    for it in 0..max_iter {
        let mut y: Vec<T> = (0..n).map(|v| x[v] + g.neighbors(v).fold(T::zero(), |s, u| s + x[u])).collect();
        let norm = y.iter().fold(T::zero(), |s, &v| s + v * v).sqrt();
        y.iter_mut().for_each(|v| *v /= norm);
        let diff = x.iter().zip(&y).fold(T::zero(), |s, (a, b)| s.max((*a - *b).abs()));
        x = y;
        if diff <= tol && it > 0 {
            let ax: Vec<T> = (0..n).map(|v| g.neighbors(v).fold(T::zero(), |s, u| s + x[u])).collect();
            let lambda = ax.iter().zip(&x).fold(T::zero(), |s, (a, b)| s + *a * *b);
            return Ok(PerronData { eigenvalue: lambda, vector: x });
        }
    }
    Err(Error::NoConvergence { sweeps: max_iter })
}

/// `h(G) = 1 − λ_max / λ_min`.
pub fn hoffman_bound<T: Scalar>(g: &Graph) -> Result<T> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let (lmax, lmin) = extreme_eigenvalues::<T>(g, T::DEFAULT_TOL)?;
    Ok(T::one() - lmax / lmin)
}

/// `n · (−λ_min) / (λ_max − λ_min)` for a regular graph.
pub fn ratio_bound<T: Scalar>(g: &Graph) -> Result<T> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    if g.is_regular().is_none() {
        return Err(Error::NotRegular);
    }
    let (lmax, lmin) = extreme_eigenvalues::<T>(g, T::DEFAULT_TOL)?;
    Ok(T::from_usize_lossy(g.n()) * (-lmin) / (lmax - lmin))
}

/// Exact characteristic polynomial of the adjacency matrix.
pub fn characteristic_polynomial(g: &Graph) -> linalg::Poly {
    let n = g.n();
    let m: Vec<i64> = (0..n * n).map(|k| g.has_edge(k / n, k % n) as i64).collect();
    linalg::char_poly(&m, n)
}

/// Whether the largest eigenvalues of `a` and `b` coincide. Values further
/// apart than `10 · tol` are different; closer values are decided exactly
/// through a common root of the characteristic polynomials.
pub fn same_lambda_max(a: &Graph, la: f64, b: &Graph, lb: f64, tol: f64) -> bool {
    let d = (la - lb).abs();
    if d > 10.0 * tol {
        return false;
    }
    let pa = characteristic_polynomial(a);
    let pb = characteristic_polynomial(b);
    linalg::common_root_near(&pa, &pb, 0.5 * (la + lb), 100.0 * tol)
}
