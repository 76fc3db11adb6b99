//! Seeded random instances. All sampling goes through SplitMix64 with
//! 64-bit ranges, so a spec maps to the same instance on every platform.
//! Vertex labels are shuffled after construction unless the spec asks for
//! the canonical order.

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::piercing::{normalize_arcs, Arc, ArcInstance, CircularDomain};

/// How the finished instance is labelled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    /// Uniformly random vertex labels; arcs in generation order.
    #[default]
    Shuffled,
    /// Vertices numbered in DFS preorder from the first vertex of the
    /// construction; arcs sorted clockwise by start. Same shapes as
    /// `Shuffled`, with labels that keep neighbors close in memory.
    Canonical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    pub seed: u64,
    /// Unicyclic: cycle length; 0 picks one at random.
    pub cycle_len: usize,
    /// Cactus: number of cycles.
    pub cycle_count: usize,
    /// Cactus: longest allowed cycle, at least 3.
    pub max_cycle_len: usize,
    /// Arcs: longest arc, in positions stepped over; 0 means `n`.
    pub max_radius: usize,
    pub order: Order,
}

impl GenSpec {
    pub fn new(n: usize, seed: u64) -> Self {
        GenSpec {
            n,
            seed,
            cycle_len: 0,
            cycle_count: 0,
            max_cycle_len: 7,
            max_radius: 0,
            order: Order::Shuffled,
        }
    }

    fn rng(&self) -> SplitMix64 {
        SplitMix64::seed_from_u64(self.seed)
    }
}

fn below(rng: &mut SplitMix64, n: usize) -> usize {
    rng.gen_range(0..n as u64) as usize
}

fn in_range(rng: &mut SplitMix64, lo: usize, hi: usize) -> usize {
    rng.gen_range(lo as u64..=hi as u64) as usize
}

fn shuffle<T>(rng: &mut SplitMix64, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        items.swap(i, below(rng, i + 1));
    }
}

fn relabel(rng: &mut SplitMix64, n: usize, edges: &[(usize, usize)], order: Order) -> Graph {
    let perm = match order {
        Order::Shuffled => {
            let mut perm: Vec<usize> = (0..n).collect();
            shuffle(rng, &mut perm);
            perm
        }
        Order::Canonical => preorder(&Graph::from_edges(n, edges)),
    };
    let mapped: Vec<_> = edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(n, &mapped)
}

/// Preorder number of each vertex under a stack DFS from vertex 0 that
/// pushes neighbors in adjacency order.
fn preorder(g: &Graph) -> Vec<usize> {
    let mut label = vec![usize::MAX; g.n()];
    let mut stack = vec![0];
    let mut next = 0;
    while let Some(u) = stack.pop() {
        if label[u] != usize::MAX {
            continue;
        }
        label[u] = next;
        next += 1;
        stack.extend(g.neighbors(u).iter().filter(|&&v| label[v] == usize::MAX));
    }
    label
}

/// Each new vertex hangs off a uniformly chosen earlier one.
fn attach_rest(rng: &mut SplitMix64, from: usize, n: usize, edges: &mut Vec<(usize, usize)>) {
    for v in from..n {
        edges.push((below(rng, v), v));
    }
}

pub fn gen_tree(spec: &GenSpec) -> Result<Graph> {
    if spec.n == 0 {
        return Err(Error::BadShape("a tree needs at least one vertex".into()));
    }
    let mut rng = spec.rng();
    let mut edges = Vec::with_capacity(spec.n - 1);
    attach_rest(&mut rng, 1, spec.n, &mut edges);
    Ok(relabel(&mut rng, spec.n, &edges, spec.order))
}

pub fn gen_unicyclic(spec: &GenSpec) -> Result<Graph> {
    let n = spec.n;
    if n < 3 {
        return Err(Error::BadShape(format!(
            "a cycle needs 3 vertices, n = {n}"
        )));
    }
    let mut rng = spec.rng();
    let c = match spec.cycle_len {
        0 => in_range(&mut rng, 3, n),
        c if (3..=n).contains(&c) => c,
        c => return Err(Error::BadShape(format!("cycle length {c} outside 3..={n}"))),
    };
    let mut edges: Vec<_> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    attach_rest(&mut rng, c, n, &mut edges);
    Ok(relabel(&mut rng, n, &edges, spec.order))
}

/// Grows a cactus from one vertex by a shuffled sequence of steps, each
/// hanging either a pendant edge or a whole cycle off a random vertex.
pub fn gen_cactus(spec: &GenSpec) -> Result<Graph> {
    let n = spec.n;
    let c = spec.cycle_count;
    if n == 0 || spec.max_cycle_len < 3 || 1 + 2 * c > n {
        return Err(Error::BadShape(format!(
            "cannot fit {c} cycles of length 3..={} in {n} vertices",
            spec.max_cycle_len
        )));
    }
    let mut rng = spec.rng();
    // each cycle adds len - 1 vertices; keep room for the ones still to come
    let mut budget = n - 1;
    let mut steps = Vec::with_capacity(n);
    for i in 0..c {
        let later = 2 * (c - i - 1);
        let hi = spec.max_cycle_len.min(budget - later + 1);
        let len = in_range(&mut rng, 3, hi);
        budget -= len - 1;
        steps.push(len);
    }
    steps.extend(std::iter::repeat_n(1, budget));
    shuffle(&mut rng, &mut steps);

    let mut edges = Vec::with_capacity(n - 1 + c);
    let mut next = 1;
    for len in steps {
        let at = below(&mut rng, next);
        if len == 1 {
            edges.push((at, next));
            next += 1;
            continue;
        }
        // at, next, next + 1, .., next + len - 2, back to at
        let mut prev = at;
        for v in next..next + len - 1 {
            edges.push((prev, v));
            prev = v;
        }
        edges.push((prev, at));
        next += len - 1;
    }
    debug_assert_eq!(next, n);
    Ok(relabel(&mut rng, n, &edges, spec.order))
}

/// `n` random arcs on a `2n`-position circle, none of them a full circle.
pub fn gen_arcs_raw(spec: &GenSpec) -> Result<(CircularDomain, Vec<Arc>)> {
    let n = spec.n;
    if n == 0 {
        return Err(Error::NoArcs);
    }
    let positions = 2 * n;
    let cap = match spec.max_radius {
        0 => n,
        r => r,
    }
    .min(positions - 2);
    let mut rng = spec.rng();
    let mut arcs: Vec<Arc> = (0..n)
        .map(|id| {
            let s = below(&mut rng, positions);
            let len = in_range(&mut rng, 0, cap);
            Arc::new(s, (s + len) % positions, id)
        })
        .collect();
    if spec.order == Order::Canonical {
        arcs.sort_by_key(|a| (a.s, (a.e + positions - a.s) % positions));
        for (id, a) in arcs.iter_mut().enumerate() {
            a.id = id;
        }
    }
    Ok((CircularDomain { positions }, arcs))
}

pub fn gen_arcs(spec: &GenSpec) -> Result<ArcInstance> {
    let (dom, raw) = gen_arcs_raw(spec)?;
    normalize_arcs(dom, &raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{classify, GraphClass};

    #[test]
    fn tiny_trees() {
        assert_eq!(gen_tree(&GenSpec::new(1, 0)).unwrap().n(), 1);
        let g = gen_tree(&GenSpec::new(2, 0)).unwrap();
        assert_eq!(g.m(), 1);
        assert!(gen_tree(&GenSpec::new(0, 0)).is_err());
    }

    #[test]
    fn shapes_hold_over_seeds() {
        for seed in 0..1000 {
            let mut s = GenSpec::new(5 + (seed as usize % 30), seed);
            assert_eq!(classify(&gen_tree(&s).unwrap()), GraphClass::Tree);
            assert_eq!(classify(&gen_unicyclic(&s).unwrap()), GraphClass::Unicyclic);
            s.cycle_count = 1 + seed as usize % 2;
            let want = if s.cycle_count == 1 {
                GraphClass::Unicyclic
            } else {
                GraphClass::Cactus
            };
            assert_eq!(classify(&gen_cactus(&s).unwrap()), want);
        }
    }

    #[test]
    fn fixed_cycle_length() {
        let mut s = GenSpec::new(10, 7);
        s.cycle_len = 5;
        let g = gen_unicyclic(&s).unwrap();
        assert_eq!(g.m(), 10);
        s.n = 3;
        s.cycle_len = 3;
        assert_eq!(gen_unicyclic(&s).unwrap().m(), 3);
        s.cycle_len = 4;
        assert!(matches!(gen_unicyclic(&s), Err(Error::BadShape(_))));
    }

    #[test]
    fn cactus_edge_cases() {
        let mut s = GenSpec::new(12, 3);
        assert_eq!(classify(&gen_cactus(&s).unwrap()), GraphClass::Tree);
        s.cycle_count = 6;
        assert!(gen_cactus(&s).is_err());
        s.cycle_count = 5;
        let g = gen_cactus(&s).unwrap();
        assert_eq!(g.m(), 11 + 5);
    }

    #[test]
    fn same_spec_same_instance() {
        let mut s = GenSpec::new(200, 42);
        s.cycle_count = 20;
        assert_eq!(gen_cactus(&s).unwrap(), gen_cactus(&s).unwrap());
        assert_eq!(gen_arcs(&s).unwrap(), gen_arcs(&s).unwrap());
        let t = GenSpec::new(200, 43);
        assert_ne!(gen_tree(&s).unwrap(), gen_tree(&t).unwrap());
    }

    #[test]
    fn canonical_order_keeps_shapes() {
        let mut s = GenSpec::new(300, 11);
        s.cycle_count = 30;
        let shuffled = gen_cactus(&s).unwrap();
        s.order = Order::Canonical;
        let canon = gen_cactus(&s).unwrap();
        assert_eq!((canon.n(), canon.m()), (shuffled.n(), shuffled.m()));
        let mut a: Vec<usize> = (0..300).map(|u| shuffled.degree(u)).collect();
        let mut b: Vec<usize> = (0..300).map(|u| canon.degree(u)).collect();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
        assert_eq!(classify(&canon), GraphClass::Cactus);
        // preorder: every vertex but 0 has a smaller-labelled neighbor
        assert!((1..300).all(|u| canon.neighbors(u).iter().any(|&v| v < u)));

        let arcs = gen_arcs_raw(&s).unwrap().1;
        assert!(arcs.windows(2).all(|w| w[0].s <= w[1].s));
    }

    #[test]
    fn arcs_are_proper() {
        let inst = gen_arcs(&GenSpec::new(1, 9)).unwrap();
        assert_eq!(inst.arcs.len(), 1);
        for seed in 0..200 {
            let inst = gen_arcs(&GenSpec::new(50, seed)).unwrap();
            assert!(inst.pruned.iter().all(|p| p.contains.is_some()));
        }
    }
}
