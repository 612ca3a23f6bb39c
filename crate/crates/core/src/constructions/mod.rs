//! Cone graphs, line graphs, color complements and the classification
//! results attached to each.

mod cone;
mod line;
mod regular;

pub use cone::{classify_cone, cone_spectrum_formula, k_cone, ConeVerdict};
pub use line::{
    classify_line_graph, edge_chromatic_number, is_one_factorable, line_graph, maximal_alternating_paths, net_graph,
    optimal_edge_coloring, AlternatingComponent, ComponentShape, LineGraphCase, LineGraphVerdict,
};
pub use regular::{
    color_complement, multipartite_minus_matchings, multipartite_minus_matchings_with, nu_equitable, nu_equitable_sufficiency,
};
