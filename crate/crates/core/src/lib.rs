//! Verification, classification and exhaustive enumeration of
//! Hoffman-colorable graphs.

pub mod canon;
pub mod combinatorics;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod hoffman;
pub mod linalg;
pub mod partition;
pub mod spectra;

pub use canon::{canonical_form, canonical_labeling, is_isomorphic};
pub use combinatorics::{chromatic_number, clique_number, independence_number, optimal_coloring};
pub use constructions::{
    classify_cone, classify_line_graph, color_complement, cone_spectrum_formula, edge_chromatic_number, is_one_factorable, k_cone,
    line_graph, maximal_alternating_paths, multipartite_minus_matchings, nu_equitable, nu_equitable_sufficiency, ConeVerdict,
    LineGraphCase, LineGraphVerdict,
};
pub use enumeration::{
    classify_counts, enumerate_hoffman, enumerate_hoffman_with, generate_bipartite_parts, BipartitePart, Counts, DiscCase, DiscPolicy,
    EnumerationOptions, EnumerationReport, HoffmanGraph,
};
pub use error::{Error, Result};
pub use graph::{Coloring, Graph, MAX_VERTICES};
pub use graph6::{from_graph6, to_graph6};
pub use hoffman::{
    check_hoffman_structure, compose_and_check, decompose, is_hoffman_colorable, is_hoffman_colorable_with, weight_quotient,
    Composition, Decomposition, HoffmanConfig, HoffmanVerdict, StructureReport, WeightQuotient,
};
pub use linalg::Scalar;
pub use partition::{integer_partitions, IntegerPartition};
pub use spectra::{hoffman_bound, perron_vector, ratio_bound, spectrum, PerronData, Spectrum};

pub type Spectrum64 = Spectrum<f64>;
pub type Spectrum32 = Spectrum<f32>;
pub type PerronData64 = PerronData<f64>;
pub type PerronData32 = PerronData<f32>;
pub type HoffmanVerdict64 = HoffmanVerdict<f64>;
pub type HoffmanVerdict32 = HoffmanVerdict<f32>;
pub type WeightQuotient64 = WeightQuotient<f64>;
pub type WeightQuotient32 = WeightQuotient<f32>;
pub type ConeVerdict64 = ConeVerdict<f64>;
pub type ConeVerdict32 = ConeVerdict<f32>;
