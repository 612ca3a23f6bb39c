//! Acceptance criteria. Each test prints one `criterion N: PASS|FAIL` line;
//! run with `--nocapture` to see them. The extended Table 1 rows are
//! `#[ignore]`d and run with `-- --ignored`.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use hoffman_core::constructions::{
    classify_cone, classify_line_graph, cone_spectrum_formula, k_cone, line_graph, multipartite_minus_matchings,
    net_graph, nu_equitable, nu_equitable_sufficiency, LineGraphCase,
};
use hoffman_core::enumeration::{
    enumerate_hoffman, enumerate_hoffman_with, outperforms, DiscPolicy, EnumerationOptions, EnumerationReport,
};
use hoffman_core::generate::connected_graphs;
use hoffman_core::{
    canonical_form, check_hoffman_structure, decompose, hoffman_bound, independence_number, is_hoffman_colorable,
    is_isomorphic, spectrum, Graph, HoffmanConfig,
};

const TOL: f64 = 1e-9;
const STRUCT_TOL: f64 = 1e-6;
const SPECTRUM_TOL: f64 = 1e-8;

type Row = (usize, [usize; 4]);

const TABLE_1: &[Row] = &[
    (3, [1, 1, 0, 0]),
    (4, [0, 0, 0, 0]),
    (5, [0, 0, 0, 0]),
    (6, [2, 1, 1, 1]),
    (7, [0, 0, 0, 0]),
    (8, [0, 0, 0, 0]),
    (9, [13, 4, 9, 3]),
    (10, [3, 0, 3, 0]),
    (11, [2, 0, 2, 0]),
    (12, [68, 16, 52, 20]),
];
const TABLE_1_EXTENDED: &[Row] = &[(13, [14, 0, 14, 3]), (14, [46, 0, 46, 10])];
const TABLE_2: &[Row] = &[
    (4, [1, 1, 0, 0]),
    (5, [0, 0, 0, 0]),
    (6, [0, 0, 0, 0]),
    (7, [0, 0, 0, 0]),
    (8, [1, 1, 0, 0]),
    (9, [0, 0, 0, 0]),
    (10, [0, 0, 0, 0]),
    (11, [2, 0, 2, 2]),
    (12, [8, 5, 3, 1]),
    (13, [17, 0, 17, 0]),
    (14, [5, 0, 5, 5]),
    (15, [10, 0, 10, 10]),
    (17, [8, 0, 8, 8]),
];
const TABLE_3: &[Row] = &[
    (5, [1, 1, 0, 0]),
    (6, [0, 0, 0, 0]),
    (7, [0, 0, 0, 0]),
    (8, [0, 0, 0, 0]),
    (9, [0, 0, 0, 0]),
    (10, [1, 1, 0, 0]),
    (11, [0, 0, 0, 0]),
    (12, [0, 0, 0, 0]),
    (13, [2, 0, 2, 2]),
    (14, [0, 0, 0, 0]),
    (15, [10, 7, 3, 0]),
    (16, [16, 0, 16, 16]),
    (17, [34, 0, 34, 0]),
    (19, [7, 0, 7, 7]),
];
const TABLE_4: &[Row] = &[
    (6, [1, 1, 0, 0]),
    (7, [0, 0, 0, 0]),
    (8, [0, 0, 0, 0]),
    (9, [0, 0, 0, 0]),
    (10, [0, 0, 0, 0]),
    (11, [0, 0, 0, 0]),
    (12, [1, 1, 0, 0]),
    (13, [0, 0, 0, 0]),
    (14, [0, 0, 0, 0]),
    (15, [1, 0, 1, 1]),
    (16, [0, 0, 0, 0]),
    (17, [0, 0, 0, 0]),
    (18, [10, 5, 5, 3]),
    (19, [8, 0, 8, 8]),
    (20, [0, 0, 0, 0]),
    (22, [5, 0, 5, 5]),
    (23, [17, 0, 17, 17]),
];

type Cache = Mutex<HashMap<(usize, usize), Arc<EnumerationReport>>>;

fn report(n: usize, chi: usize) -> Arc<EnumerationReport> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(r) = cache.lock().unwrap().get(&(n, chi)) {
        return r.clone();
    }
    let r = Arc::new(enumerate_hoffman(n, chi, TOL).expect("enumeration succeeds"));
    cache.lock().unwrap().insert((n, chi), r.clone());
    r
}

fn verdict(criterion: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("criterion {criterion}: PASS");
    } else {
        println!("criterion {criterion}: FAIL ({})", failures.join("; "));
    }
    assert!(failures.is_empty(), "criterion {criterion} failed: {failures:?}");
}

fn check_rows(chi: usize, rows: &[Row], failures: &mut Vec<String>) {
    for &(n, expected) in rows {
        let c = report(n, chi).counts;
        let got = [c.total, c.regular, c.irregular, c.outperforming];
        println!("  chi = {chi}, n = {n}: {got:?}");
        if got != expected {
            failures.push(format!("n = {n}: expected {expected:?}, got {got:?}"));
        }
    }
}

fn check_disc(chi: usize, n: usize, failures: &mut Vec<String>) {
    let r = report(n, chi);
    let c = r.counts;
    println!("  chi = {chi}, n = {n}: {:?}, {} disc entries", [c.total, c.regular, c.irregular, c.outperforming], r.disc.len());
    let opts = EnumerationOptions { tol: TOL, policy: DiscPolicy::Defer, ..Default::default() };
    let d = enumerate_hoffman_with(n, chi, &opts).expect("enumeration succeeds").counts;
    println!("  chi = {chi}, n = {n}, connected parts only: {:?}", [d.total, d.regular, d.irregular, d.outperforming]);
    if r.disc.is_empty() {
        failures.push(format!("n = {n}: disc is empty"));
    }
}

#[test]
fn criterion_01_table_1() {
    let mut f = Vec::new();
    check_rows(3, TABLE_1, &mut f);
    verdict("1 (Table 1, n = 3..12)", &f);
}

#[test]
#[ignore = "extended rows"]
fn criterion_01_table_1_extended() {
    let mut f = Vec::new();
    check_rows(3, TABLE_1_EXTENDED, &mut f);
    verdict("1 (Table 1, n = 13, 14)", &f);
}

#[test]
fn criterion_02_table_2() {
    let mut f = Vec::new();
    check_rows(4, TABLE_2, &mut f);
    check_disc(4, 16, &mut f);
    check_disc(4, 18, &mut f);
    verdict("2 (Table 2)", &f);
}

#[test]
fn criterion_03_table_3() {
    let mut f = Vec::new();
    check_rows(5, TABLE_3, &mut f);
    check_disc(5, 18, &mut f);
    verdict("3 (Table 3)", &f);
}

#[test]
fn criterion_04_table_4() {
    let mut f = Vec::new();
    check_rows(6, TABLE_4, &mut f);
    let r = report(21, 6);
    let c = r.counts;
    println!("  chi = 6, n = 21 (not asserted): {:?}", [c.total, c.regular, c.irregular, c.outperforming]);
    verdict("4 (Table 4)", &f);
}

#[test]
fn criterion_05_completeness_oracle() {
    let mut f = Vec::new();
    for n in 2..=7 {
        let graphs = connected_graphs(n, None);
        for c in 2..=n {
            let direct: BTreeSet<String> = graphs
                .iter()
                .filter(|g| is_hoffman_colorable::<f64>(g).is_ok_and(|v| v.colorable && v.chi == c))
                .map(|g| canonical_form(g, None))
                .collect();
            let enumerated: BTreeSet<String> = report(n, c).graphs.iter().map(|h| canonical_form(&h.graph, None)).collect();
            if direct != enumerated {
                f.push(format!("n = {n}, chi = {c}: direct {} vs enumerated {}", direct.len(), enumerated.len()));
            }
        }
    }
    verdict("5 (completeness oracle, n <= 7)", &f);
}

/// Every graph of criteria 1-4 with at most 12 vertices.
fn small_emitted() -> Vec<(usize, Arc<EnumerationReport>)> {
    let mut out = Vec::new();
    for (chi, rows) in [(3, TABLE_1), (4, TABLE_2), (5, TABLE_3), (6, TABLE_4)] {
        for &(n, _) in rows.iter().filter(|r| r.0 <= 12) {
            out.push((chi, report(n, chi)));
        }
    }
    out
}

#[test]
fn criterion_06_structure() {
    let cfg = HoffmanConfig::<f64>::default();
    let mut f = Vec::new();
    let mut checked = 0;
    for (_, r) in small_emitted() {
        for h in &r.graphs {
            checked += 1;
            let s = check_hoffman_structure(&h.graph, &h.coloring, &cfg).unwrap();
            let nu = -h.lambda_min;
            let q = &s.quotient.entries;
            let quotient_ok = (0..q.len()).all(|i| {
                (0..q.len()).all(|j| {
                    let want = if i == j { 0.0 } else { nu };
                    (q[i][j] - want).abs() <= STRUCT_TOL
                })
            });
            if !s.all_hold() || !quotient_ok {
                f.push(format!("{} (n = {})", h.canonical_form(), h.graph.n()));
            }
        }
    }
    println!("  {checked} graphs checked");
    verdict("6 (structure theorem)", &f);
}

#[test]
fn criterion_07_decomposition() {
    let cfg = HoffmanConfig::<f64>::default();
    let mut f = Vec::new();
    let mut checked = 0;
    for (chi, r) in small_emitted() {
        for h in &r.graphs {
            for subset in 1u32..1 << chi {
                if subset.count_ones() < 2 {
                    continue;
                }
                let colors: Vec<usize> = (0..chi).filter(|i| subset >> i & 1 == 1).collect();
                checked += 1;
                match decompose(&h.graph, &h.coloring, &colors, &cfg) {
                    Ok(d) if d.holds(STRUCT_TOL) => {}
                    Ok(_) => f.push(format!("{} colors {colors:?}", h.canonical_form())),
                    Err(e) => f.push(format!("{} colors {colors:?}: {e}", h.canonical_form())),
                }
            }
        }
    }
    println!("  {checked} color subsets checked");
    verdict("7 (decomposition theorem)", &f);
}

#[test]
fn criterion_08_cones() {
    let cfg = HoffmanConfig::<f64>::default();
    let mut f = Vec::new();
    let mut colorable = 0;
    for n in 2..=8 {
        for g in connected_graphs(n, None) {
            for k in 1..=3 {
                let v = classify_cone(&g, k, &cfg).unwrap();
                let cone = k_cone(&g, k).unwrap();
                let direct = is_hoffman_colorable::<f64>(&cone).unwrap().colorable;
                if v.colorable != direct {
                    f.push(format!("{} k = {k}: classified {} direct {direct}", canonical_form(&g, None), v.colorable));
                }
                if v.colorable {
                    colorable += 1;
                    let predicted = cone_spectrum_formula(&g, k, &cfg).unwrap();
                    let actual = spectrum::<f64>(&cone, TOL).unwrap();
                    if !predicted.approx_eq(&actual, SPECTRUM_TOL) {
                        f.push(format!("{} k = {k}: spectrum formula mismatch", canonical_form(&g, None)));
                    }
                }
            }
        }
    }
    println!("  {colorable} colorable cones");
    verdict("8 (cone classification)", &f);
}

#[test]
fn criterion_09_line_graphs() {
    let mut f = Vec::new();
    let net = net_graph();
    let mut sporadic = Vec::new();
    for n in 3..=9 {
        for g in connected_graphs(n, Some(8)) {
            let v = classify_line_graph(&g).unwrap();
            let direct = is_hoffman_colorable::<f64>(&line_graph(&g).unwrap()).unwrap().colorable;
            if v.colorable != direct {
                f.push(format!("{}: classified {} direct {direct}", canonical_form(&g, None), v.colorable));
            }
            if v.case == LineGraphCase::SporadicNet {
                sporadic.push(g);
            }
        }
    }
    if sporadic.len() != 1 || !is_isomorphic(&sporadic[0], &net) {
        f.push(format!("sporadic case fired on {} graphs", sporadic.len()));
    }
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let s = spectrum::<f64>(&line_graph(&net).unwrap(), TOL).unwrap();
    if (s.lambda_max() - 2.0 * phi).abs() > TOL || (s.lambda_min() + phi).abs() > TOL {
        f.push(format!("L(net) extremes {} {}", s.lambda_max(), s.lambda_min()));
    }
    verdict("9 (line-graph classification)", &f);
}

#[test]
fn criterion_10_sufficiency() {
    let mut f = Vec::new();
    for c in 3..=5 {
        let (g, col) = multipartite_minus_matchings(c, c).unwrap();
        let nu = nu_equitable(&g, &col).unwrap();
        let suff = nu_equitable_sufficiency(&g, &col).unwrap();
        let v = is_hoffman_colorable::<f64>(&g).unwrap();
        if nu != Some(c - 1) || !suff || !v.colorable || v.chi != c {
            f.push(format!("c = {c}: nu {nu:?}, sufficiency {suff}, colorable {}, chi {}", v.colorable, v.chi));
        }
    }
    verdict("10 (nu-equitable sufficiency)", &f);
}

#[test]
fn criterion_11_figure_one() {
    let e = [(1, 6), (1, 7), (2, 6), (2, 8), (3, 7), (3, 9), (4, 8), (4, 9), (5, 6), (5, 7), (5, 8), (5, 9), (6, 7), (6, 8), (7, 9), (8, 9)];
    let edges: Vec<(usize, usize)> = e.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    let g = Graph::from_edges(9, &edges).unwrap();
    let alpha = independence_number(&g).unwrap();
    let s = spectrum::<f64>(&g, TOL).unwrap();
    let h: f64 = hoffman_bound(&g).unwrap();
    let v = is_hoffman_colorable::<f64>(&g).unwrap();
    let mut f = Vec::new();
    if alpha != 5 {
        f.push(format!("alpha {alpha}"));
    }
    if (s.lambda_max() - 4.0).abs() > TOL || (s.lambda_min() + 2.0).abs() > TOL {
        f.push(format!("extremes {} {}", s.lambda_max(), s.lambda_min()));
    }
    if (h - 3.0).abs() > TOL || v.chi != 3 || !v.colorable {
        f.push(format!("bound {h}, chi {}", v.chi));
    }
    if !outperforms(9, v.chi, alpha) {
        f.push("not outperforming".into());
    }
    verdict("11 (Figure 1)", &f);
}
