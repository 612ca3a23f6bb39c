//! Gluing of compatible connected bipartite parts on shared color classes.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::canon::{canonical_form, canonical_labeling_cells};
use crate::graph::{bit, full_mask, Coloring, Graph};
use crate::partition::IntegerPartition;
use crate::spectra::{extreme_eigenvalues, perron_vector};

use super::bipartite::{generate_bipartite_parts, group_lambdas, BipartitePart};

/// One bipartite part per pair of classes, all with `λ_max = ν` and agreeing
/// class weights. The part for `(i, j)`, `i < j`, has class `i` as its first side.
#[derive(Clone, Debug)]
pub struct CompatibleCollection {
    pub class_sizes: Vec<usize>,
    pub parts: BTreeMap<(usize, usize), BipartitePart>,
    pub nu: f64,
}

fn weights_match(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

/// Surviving `(partition, λ)` pairs: every pair of class sizes admits a
/// connected part with that largest eigenvalue.
pub fn filter_partitions(
    partitions: &[IntegerPartition],
    parts: &HashMap<(usize, usize), Vec<BipartitePart>>,
    tol: f64,
) -> Vec<(IntegerPartition, f64)> {
    let all: Vec<&BipartitePart> = parts.values().flatten().filter(|p| p.connected).collect();
    let lambdas = group_lambdas(&all, tol);
    let has = |a: usize, b: usize, nu: f64| {
        parts
            .get(&(a.min(b), a.max(b)))
            .is_some_and(|v| v.iter().any(|p| p.connected && (p.lambda_max - nu).abs() <= 10.0 * tol))
    };
    let mut out = Vec::new();
    for p in partitions {
        let s = p.parts();
        for &nu in &lambdas {
            if (0..s.len()).all(|i| (i + 1..s.len()).all(|j| has(s[i], s[j], nu))) {
                out.push((p.clone(), nu));
            }
        }
    }
    out
}

/// Oriented connected parts with sides `(a, b)`: when `a = b` both
/// orientations of every part are listed.
fn oriented_parts(a: usize, b: usize, tol: f64) -> Vec<BipartitePart> {
    let base = generate_bipartite_parts(a, b, tol);
    if a != b {
        return base;
    }
    let n = a + b;
    let sa = full_mask(a);
    let sb = full_mask(n) & !sa;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for p in base {
        let perm: Vec<usize> = (0..n).map(|v| if v < a { v + a } else { v - a }).collect();
        let swapped = BipartitePart {
            graph: p.graph.permuted(&perm),
            side_weights: (p.side_weights.1.clone(), p.side_weights.0.clone()),
            ..p.clone()
        };
        for q in [p, swapped] {
            let key = canonical_labeling_cells(&q.graph, Some(&[sa, sb])).graph.rows().to_vec();
            if seen.insert(key) {
                out.push(q);
            }
        }
    }
    out
}

/// All compatible collections of connected parts for class sizes `sizes`
/// and largest eigenvalue `nu`. Exponential; intended for small cases.
pub fn compatible_collections(sizes: &[usize], nu: f64, tol: f64) -> Vec<CompatibleCollection> {
    let c = sizes.len();
    let pairs: Vec<(usize, usize)> = (0..c).flat_map(|i| (i + 1..c).map(move |j| (i, j))).collect();
    let options: Vec<Vec<BipartitePart>> = pairs
        .iter()
        .map(|&(i, j)| {
            oriented_parts(sizes[i], sizes[j], tol).into_iter().filter(|p| (p.lambda_max - nu).abs() <= 10.0 * tol).collect()
        })
        .collect();
    let wtol = 1e3 * tol;
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        pairs: &[(usize, usize)],
        options: &[Vec<BipartitePart>],
        chosen: &mut Vec<usize>,
        class_w: &mut Vec<Option<Vec<f64>>>,
        wtol: f64,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        let t = chosen.len();
        if t == pairs.len() {
            emit(chosen);
            return;
        }
        let (i, j) = pairs[t];
        for (idx, p) in options[t].iter().enumerate() {
            let ok = |cw: &Option<Vec<f64>>, w: &[f64]| cw.as_ref().is_none_or(|x| weights_match(x, w, wtol));
            if !ok(&class_w[i], &p.side_weights.0) || !ok(&class_w[j], &p.side_weights.1) {
                continue;
            }
            let saved = (class_w[i].clone(), class_w[j].clone());
            class_w[i].get_or_insert_with(|| p.side_weights.0.clone());
            class_w[j].get_or_insert_with(|| p.side_weights.1.clone());
            chosen.push(idx);
            rec(pairs, options, chosen, class_w, wtol, emit);
            chosen.pop();
            class_w[i] = saved.0;
            class_w[j] = saved.1;
        }
    }
    let mut class_w = vec![None; c];
    rec(&pairs, &options, &mut chosen, &mut class_w, wtol, &mut |ch| {
        let parts = pairs.iter().zip(ch).map(|(&pair, &idx)| (pair, options[pairs.iter().position(|&q| q == pair).unwrap()][idx].clone())).collect();
        out.push(CompatibleCollection { class_sizes: sizes.to_vec(), parts, nu });
    });
    out
}

/// All weight-preserving bijections from `w` onto the sorted list `target`,
/// as maps from local index to target position.
fn weight_bijections(w: &[f64], target: &[f64], tol: f64) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; w.len()];
    fn rec(v: usize, w: &[f64], target: &[f64], used: u64, tol: f64, map: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if v == w.len() {
            out.push(map.clone());
            return;
        }
        for (pos, &t) in target.iter().enumerate() {
            if used & bit(pos) == 0 && (t - w[v]).abs() <= tol {
                map[v] = pos;
                rec(v + 1, w, target, used | bit(pos), tol, map, out);
            }
        }
    }
    rec(0, w, target, 0, tol, &mut map, &mut out);
    out
}

/// Every graph obtained by gluing the parts of `collection` along vertices of
/// equal Perron weight, deduplicated up to isomorphism preserving classes.
pub fn assemble(collection: &CompatibleCollection, tol: f64) -> Vec<(Graph, Coloring)> {
    let sizes = &collection.class_sizes;
    let c = sizes.len();
    let offsets: Vec<usize> = sizes.iter().scan(0, |s, &x| { let o = *s; *s += x; Some(o) }).collect();
    let n: usize = sizes.iter().sum();
    let wtol = 1e3 * tol;
    let mut class_w: Vec<Vec<f64>> = vec![Vec::new(); c];
    for (&(i, j), p) in &collection.parts {
        class_w[i] = p.side_weights.0.clone();
        class_w[j] = p.side_weights.1.clone();
    }
    let pairs: Vec<(&(usize, usize), &BipartitePart)> = collection.parts.iter().collect();
    let choices: Vec<Vec<(Vec<usize>, Vec<usize>)>> = pairs
        .iter()
        .enumerate()
        .map(|(t, (&(i, j), p))| {
            let pv = perron_vector::<f64>(&p.graph, tol).expect("connected part").vector;
            let a = sizes[i];
            let norm = |xs: &[f64]| xs.iter().map(|x| x * x).sum::<f64>().sqrt();
            let (na, nb) = (norm(&pv[..a]), norm(&pv[a..]));
            let wa: Vec<f64> = pv[..a].iter().map(|x| x / na).collect();
            let wb: Vec<f64> = pv[a..].iter().map(|x| x / nb).collect();
            let ma = weight_bijections(&wa, &class_w[i], wtol);
            let mb = weight_bijections(&wb, &class_w[j], wtol);
            // The first part fixes the labeling of its two classes.
            let (ma, mb) = if t == 0 { (ma.into_iter().take(1).collect(), mb.into_iter().take(1).collect()) } else { (ma, mb) };
            ma.iter().flat_map(|x| mb.iter().map(move |y| (x.clone(), y.clone()))).collect()
        })
        .collect();
    let classes: Vec<Vec<usize>> = (0..c).map(|i| (offsets[i]..offsets[i] + sizes[i]).collect()).collect();
    let mut seen = BTreeMap::new();
    let mut idx = vec![0usize; pairs.len()];
    if choices.iter().any(|ch| ch.is_empty()) {
        return Vec::new();
    }
    loop {
        let mut rows = vec![0u64; n];
        for (t, (&(i, j), p)) in pairs.iter().enumerate() {
            let (ma, mb) = &choices[t][idx[t]];
            let a = sizes[i];
            for (u, v) in p.graph.edges() {
                let (x, y) = if u < a { (u, v - a) } else { (v, u - a) };
                let gx = offsets[i] + ma[x];
                let gy = offsets[j] + mb[y];
                rows[gx] |= bit(gy);
                rows[gy] |= bit(gx);
            }
        }
        let g = Graph::from_rows(rows).expect("simple graph");
        let col = Coloring::partition(n, classes.clone()).expect("classes partition the vertices");
        seen.entry(canonical_form(&g, Some(&col))).or_insert((g, col));
        let mut t = 0;
        loop {
            if t == idx.len() {
                return seen.into_values().collect();
            }
            idx[t] += 1;
            if idx[t] < choices[t].len() {
                break;
            }
            idx[t] = 0;
            t += 1;
        }
    }
}

/// Whether an assembled graph satisfies `λ_min ≥ −ν − tol`.
pub fn final_check(g: &Graph, nu: f64, tol: f64) -> bool {
    extreme_eigenvalues::<f64>(g, tol).is_ok_and(|(_, lmin)| lmin >= -nu - tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn triangle_from_three_edges() {
        let cols = compatible_collections(&[1, 1, 1], 1.0, 1e-9);
        assert_eq!(cols.len(), 1);
        let out = assemble(&cols[0], 1e-9);
        assert_eq!(out.len(), 1);
        assert!(is_isomorphic(&out[0].0, &Graph::complete(3).unwrap()));
        assert!(final_check(&out[0].0, 1.0, 1e-9));
    }

    #[test]
    fn octahedron_from_three_squares() {
        let cols = compatible_collections(&[2, 2, 2], 2.0, 1e-9);
        assert_eq!(cols.len(), 1);
        let out = assemble(&cols[0], 1e-9);
        assert!(out.iter().any(|(g, _)| is_isomorphic(g, &Graph::complete_multipartite(&[2, 2, 2]).unwrap())));
        assert!(final_check(&Graph::complete_multipartite(&[2, 2, 2]).unwrap(), 2.0, 1e-9));
        assert!(!final_check(&Graph::cycle(6).unwrap(), 1.0, 1e-9));
    }

    #[test]
    fn six_vertex_survivors() {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let mut found = BTreeSet::new();
        for nu in [phi, 2.0] {
            for col in compatible_collections(&[2, 2, 2], nu, 1e-9) {
                for (g, _) in assemble(&col, 1e-9) {
                    if g.is_connected() && final_check(&g, nu, 1e-9) {
                        found.insert(canonical_form(&g, None));
                    }
                }
            }
        }
        assert_eq!(found.len(), 2);
    }

    #[test]
    fn filter_examples() {
        let mut parts = HashMap::new();
        parts.insert((1, 1), super::super::bipartite_catalog(1, 1, 1e-9));
        parts.insert((2, 2), super::super::bipartite_catalog(2, 2, 1e-9));
        let p111 = IntegerPartition::new(vec![1, 1, 1]).unwrap();
        let p222 = IntegerPartition::new(vec![2, 2, 2]).unwrap();
        let out = filter_partitions(&[p111.clone(), p222.clone()], &parts, 1e-9);
        assert!(out.iter().any(|(p, nu)| *p == p111 && (nu - 1.0).abs() < 1e-9));
        assert_eq!(out.iter().filter(|(p, _)| *p == p222).count(), 2);
    }
}
