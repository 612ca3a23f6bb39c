use std::collections::BTreeSet;

use crate::canon::is_isomorphic;
use crate::combinatorics::{k_coloring, optimal_coloring_from};
use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_VERTICES};

/// Line graph; vertex `i` is the `i`-th edge of `g.edges()`.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::Edgeless);
    }
    if edges.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices { n: edges.len(), max: MAX_VERTICES });
    }
    let mut rows = vec![0u64; edges.len()];
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
        }
    }
    Graph::from_rows(rows)
}

/// Optimal proper edge coloring: `χ′(g)` and a color per edge of `g.edges()`.
pub fn optimal_edge_coloring(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let l = line_graph(g)?;
    let (k, c) = optimal_coloring_from(&l, g.max_degree())?;
    Ok((k, c.colors()))
}

pub fn edge_chromatic_number(g: &Graph) -> Result<usize> {
    optimal_edge_coloring(g).map(|(k, _)| k)
}

fn classes_of(edges: &[(usize, usize)], colors: &[usize], k: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = vec![Vec::new(); k];
    for (e, &c) in edges.iter().zip(colors) {
        out[c].push(*e);
    }
    out
}

/// A partition of the edges into perfect matchings, when one exists.
pub fn is_one_factorable(g: &Graph) -> Result<Option<Vec<Vec<(usize, usize)>>>> {
    let d = match g.is_regular() {
        Some(d) if d > 0 && g.n().is_multiple_of(2) => d,
        _ => return Ok(None),
    };
    let edges = g.edges();
    let l = line_graph(g)?;
    Ok(k_coloring(&l, d).map(|colors| classes_of(&edges, &colors, d)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComponentShape {
    Path,
    EvenCycle,
}

/// A component of the subgraph formed by the edges of two colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingComponent {
    pub colors: (usize, usize),
    pub shape: ComponentShape,
    /// Vertices along the path or cycle.
    pub vertices: Vec<usize>,
    pub edge_count: usize,
}

/// Components of every two-colored subgraph of a proper edge coloring
/// (`colors[i]` colors the `i`-th edge of `g.edges()`).
pub fn maximal_alternating_paths(g: &Graph, colors: &[usize]) -> Result<Vec<AlternatingComponent>> {
    let edges = g.edges();
    if colors.len() != edges.len() {
        return Err(Error::InvalidArgument(format!("expected {} edge colors, got {}", edges.len(), colors.len())));
    }
    let n = g.n();
    // color_at[v][c] = neighbor of v along its edge of color c.
    let k = colors.iter().max().map_or(0, |&c| c + 1);
    let mut color_at = vec![vec![usize::MAX; k]; n];
    for (&(u, v), &c) in edges.iter().zip(colors) {
        if color_at[u][c] != usize::MAX || color_at[v][c] != usize::MAX {
            return Err(Error::ImproperColoring(format!("two edges of color {c} meet at edge ({u}, {v})")));
        }
        color_at[u][c] = v;
        color_at[v][c] = u;
    }
    let used: BTreeSet<usize> = colors.iter().copied().collect();
    let used: Vec<usize> = used.into_iter().collect();
    let mut out = Vec::new();
    for (ai, &a) in used.iter().enumerate() {
        for &b in &used[ai + 1..] {
            let deg = |v: usize| (color_at[v][a] != usize::MAX) as usize + (color_at[v][b] != usize::MAX) as usize;
            let mut seen = vec![false; n];
            // Paths first, walked from an endpoint.
            for s in 0..n {
                if seen[s] || deg(s) != 1 {
                    continue;
                }
                let mut walk = vec![s];
                seen[s] = true;
                let mut c = if color_at[s][a] != usize::MAX { a } else { b };
                let mut v = s;
                while color_at[v][c] != usize::MAX {
                    v = color_at[v][c];
                    seen[v] = true;
                    walk.push(v);
                    c = if c == a { b } else { a };
                }
                let edge_count = walk.len() - 1;
                out.push(AlternatingComponent { colors: (a, b), shape: ComponentShape::Path, vertices: walk, edge_count });
            }
            for s in 0..n {
                if seen[s] || deg(s) != 2 {
                    continue;
                }
                let mut walk = vec![s];
                seen[s] = true;
                let mut v = color_at[s][a];
                let mut c = b;
                while v != s {
                    seen[v] = true;
                    walk.push(v);
                    v = color_at[v][c];
                    c = if c == a { b } else { a };
                }
                let edge_count = walk.len();
                out.push(AlternatingComponent { colors: (a, b), shape: ComponentShape::EvenCycle, vertices: walk, edge_count });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LineGraphCase {
    OneFactorable,
    Star,
    Path,
    Triangle,
    SporadicNet,
    NotColorable,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LineGraphVerdict {
    pub colorable: bool,
    pub case: LineGraphCase,
    /// Edge color classes of an optimal edge coloring (a 1-factorization in
    /// the first case); absent when not colorable.
    pub witness: Option<Vec<Vec<(usize, usize)>>>,
}

/// The triangle with one pendant vertex at each corner.
pub fn net_graph() -> Graph {
    Graph::from_edges(6, &[(0, 5), (1, 4), (2, 3), (3, 4), (3, 5), (4, 5)]).expect("static edge list")
}

fn is_star(g: &Graph) -> bool {
    g.n() >= 3 && g.edge_count() == g.n() - 1 && g.max_degree() == g.n() - 1
}

fn is_path(g: &Graph) -> bool {
    g.edge_count() == g.n() - 1 && g.max_degree() <= 2
}

/// Decides Hoffman colorability of the line graph of a connected graph with
/// at least two edges.
pub fn classify_line_graph(g: &Graph) -> Result<LineGraphVerdict> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    if g.edge_count() < 2 {
        return Err(Error::Precondition("graph needs at least two edges".into()));
    }
    if let Some(f) = is_one_factorable(g)? {
        return Ok(LineGraphVerdict { colorable: true, case: LineGraphCase::OneFactorable, witness: Some(f) });
    }
    let case = if is_star(g) {
        LineGraphCase::Star
    } else if is_path(g) {
        LineGraphCase::Path
    } else if is_isomorphic(g, &Graph::complete(3)?) {
        LineGraphCase::Triangle
    } else if is_isomorphic(g, &net_graph()) {
        LineGraphCase::SporadicNet
    } else {
        return Ok(LineGraphVerdict { colorable: false, case: LineGraphCase::NotColorable, witness: None });
    };
    let (k, colors) = optimal_edge_coloring(g)?;
    Ok(LineGraphVerdict { colorable: true, case, witness: Some(classes_of(&g.edges(), &colors, k)) })
}
