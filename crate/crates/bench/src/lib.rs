//! Seeded inputs shared by the criterion benches.

use khds_core::{
    gen_arcs_raw, gen_cactus, gen_tree, gen_unicyclic, Arc, CircularDomain, GenSpec, Graph, Order,
};

/// Sizes each solver bench sweeps.
pub const SIZES: [usize; 3] = [1 << 12, 1 << 14, 1 << 16];

pub const K: usize = 2;

fn spec(n: usize) -> GenSpec {
    let mut s = GenSpec::new(n, 7);
    s.order = Order::Canonical;
    s
}

pub fn tree(n: usize) -> Graph {
    gen_tree(&spec(n)).expect("tree spec is valid")
}

pub fn unicyclic(n: usize) -> Graph {
    gen_unicyclic(&spec(n)).expect("unicyclic spec is valid")
}

/// Cactus with one cycle per eight vertices.
pub fn cactus(n: usize) -> Graph {
    let mut s = spec(n);
    s.cycle_count = n / 8;
    gen_cactus(&s).expect("cactus spec is valid")
}

pub fn arcs(n: usize) -> (CircularDomain, Vec<Arc>) {
    gen_arcs_raw(&spec(n)).expect("arc spec is valid")
}

/// Arcs whose radius is capped, so few of them nest.
pub fn short_arcs(n: usize, max_radius: usize) -> (CircularDomain, Vec<Arc>) {
    let mut s = spec(n);
    s.max_radius = max_radius;
    gen_arcs_raw(&s).expect("arc spec is valid")
}
