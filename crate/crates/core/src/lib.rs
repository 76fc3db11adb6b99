//! Minimum k-hop dominating sets in linear time on trees, unicyclic graphs
//! and cacti, plus minimum piercing of circular-arc families.

pub mod cactus;
pub mod error;
pub mod generators;
pub mod graph;
pub mod oracles;
pub mod piercing;
pub mod tree;
pub mod unicyclic;

pub use cactus::{
    dfs_based, solve_cactus, solve_cactus_traced, solve_special_unicycle, DfsState, RewritePlan,
};
pub use error::{Error, Result};
pub use generators::{gen_arcs, gen_arcs_raw, gen_cactus, gen_tree, gen_unicyclic, GenSpec, Order};
pub use graph::{
    classify, extract_cycle, parse_graph, verify_khds, Coverage, CycleDecomposition, DominatingSet,
    Graph, GraphClass,
};
pub use oracles::{
    all_minimum_khds, all_minimum_piercings, brute_force_khds, brute_force_piercing,
    quadratic_piercing, OracleBudget,
};
pub use piercing::{
    hits_every_arc, normalize_arcs, parse_arcs, pierce_arcs, pierce_arcs_anchored,
    pierce_arcs_reduced, pierce_segments, Arc, ArcInstance, CircularDomain, PiercingSet,
};
pub use tree::{solve_tree, solve_tree_state, RootedTreeState, TreeSolveResult};
pub use unicyclic::{
    solve_unicyclic, solve_unicyclic_anchored, solve_unicyclic_quadratic, solve_unicyclic_reduced,
    Anchored, Reduced,
};
