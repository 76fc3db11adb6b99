//! Minimum k-hop dominating sets on unicyclic graphs.
//!
//! Every pendant tree is solved on its own, with a late root taken back out.
//! Distances to the set are then relaxed around the ring in bucket order, and
//! the roots still left uncovered become arcs on the ring whose minimum
//! piercing finishes the set.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{classify, cycle_mask, order_cycle, DominatingSet, Graph, GraphClass};
use crate::piercing::{
    anchored_with_candidates, normalize_arcs, pierce_arcs, reduced_in_range, Arc, ArcInstance,
    CircularDomain,
};
use crate::tree::{solve_tree, TreeWorkspace, INF};

/// Ring-level state after the per-tree solves and the relaxation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingState {
    /// Cycle vertices in ring order.
    pub cycle: Vec<usize>,
    /// Distance from each ring vertex to the tree part of the set; `None`
    /// marks the roots whose trees still need help from the ring.
    pub delta: Vec<Option<usize>>,
    /// Residual height of each pendant tree, `-1` once it is dominated.
    pub tree_height: Vec<isize>,
    /// Vertices chosen inside the pendant trees.
    pub tree_dom: Vec<usize>,
}

/// Arcs for the roots left uncovered: root `i` with residual height `h`
/// reaches `k - h` ring steps either way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingArcBuildout {
    pub positions: usize,
    /// `(ring position, radius)` for every uncovered root.
    pub radius: Vec<(usize, usize)>,
    /// Arcs that stop short of the whole ring, in ring order.
    pub arcs: Vec<Arc>,
    /// Ring positions whose arc wraps the whole ring.
    pub full: Vec<usize>,
}

/// Result of the anchored solve: a minimum set with its nearest member to
/// the anchor as close as possible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anchored {
    pub dom: DominatingSet,
    pub delta: usize,
    /// A member at distance `delta` from the anchor.
    pub nearest: usize,
}

/// Result of the reduced solve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reduced {
    /// One vertex fewer than the optimum leaves only vertices within
    /// `depth` of the anchor uncovered; `depth` is as small as possible.
    Partial {
        dom: DominatingSet,
        /// Farthest uncovered vertex from the anchor.
        farthest: usize,
        depth: usize,
    },
    /// No such set exists; the anchored result stands.
    UseAnchored,
}

struct Ring {
    state: RingState,
    pos: Vec<usize>,
}

fn check(g: &Graph, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidK(k));
    }
    if classify(g) != GraphClass::Unicyclic {
        return Err(Error::NotUnicyclic);
    }
    Ok(())
}

fn ring(g: &Graph, k: usize) -> Ring {
    let on_cycle = cycle_mask(g);
    let cycle = order_cycle(g, &on_cycle);
    let len = cycle.len();
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &r) in cycle.iter().enumerate() {
        pos[r] = i;
    }

    let mut ws = TreeWorkspace::new(g.n());
    let mut tree_dom = Vec::new();
    let mut delta = vec![INF; len];
    let mut height = vec![-1isize; len];
    let blocked = |v: usize| on_cycle[v];
    for (i, &r) in cycle.iter().enumerate() {
        let out = ws.solve(g, r, k, &blocked, &mut tree_dom);
        if out.late {
            tree_dom.pop();
        }
        delta[i] = out.delta;
        height[i] = out.height;
    }

    // bucket j holds ring positions whose distance became j; stale entries
    // are skipped when popped
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (i, &d) in delta.iter().enumerate() {
        if d < k {
            buckets[d].push(i);
        }
    }
    for j in 0..k {
        let mut b = std::mem::take(&mut buckets[j]);
        for &i in &b {
            if delta[i] != j {
                continue;
            }
            for nb in [(i + len - 1) % len, (i + 1) % len] {
                if delta[nb] > j + 1 && height[nb] + (j as isize) < k as isize {
                    delta[nb] = j + 1;
                    if j + 1 < k {
                        buckets[j + 1].push(nb);
                    }
                }
            }
        }
        b.clear();
        buckets[j] = b;
    }

    Ring {
        state: RingState {
            cycle,
            delta: delta.iter().map(|&d| (d != INF).then_some(d)).collect(),
            tree_height: height,
            tree_dom,
        },
        pos,
    }
}

/// Ring state of a unicyclic graph after the tree solves and relaxation.
pub fn ring_state(g: &Graph, k: usize) -> Result<RingState> {
    check(g, k)?;
    Ok(ring(g, k).state)
}

/// The arc family for the uncovered roots of `state`.
pub fn arc_buildout(state: &RingState, k: usize) -> RingArcBuildout {
    let len = state.cycle.len();
    let mut out = RingArcBuildout {
        positions: len,
        radius: Vec::new(),
        arcs: Vec::new(),
        full: Vec::new(),
    };
    for i in 0..len {
        if state.delta[i].is_some() {
            continue;
        }
        let m = k - state.tree_height[i] as usize;
        out.radius.push((i, m));
        if 2 * m + 1 >= len {
            out.full.push(i);
        } else {
            out.arcs
                .push(Arc::new((i + len - m) % len, (i + m) % len, i));
        }
    }
    out
}

impl RingArcBuildout {
    fn domain(&self) -> CircularDomain {
        CircularDomain {
            positions: self.positions,
        }
    }

    fn instance(&self) -> Option<ArcInstance> {
        (!self.arcs.is_empty())
            .then(|| normalize_arcs(self.domain(), &self.arcs).expect("ring arcs are in range"))
    }
}

fn lift(cycle: &[usize], points: &[usize], out: &mut Vec<usize>) {
    out.extend(points.iter().map(|&p| cycle[p]));
}

/// A minimum k-hop dominating set of a unicyclic graph in linear time.
pub fn solve_unicyclic(g: &Graph, k: usize) -> Result<DominatingSet> {
    check(g, k)?;
    let Ring { state, .. } = ring(g, k);
    let build = arc_buildout(&state, k);
    let mut members = state.tree_dom.clone();
    match build.instance() {
        Some(inst) => lift(&state.cycle, &pierce_arcs(&inst).points, &mut members),
        None if !build.full.is_empty() => members.push(state.cycle[0]),
        None => {}
    }
    Ok(DominatingSet::new(members, k))
}

/// Reference solver: delete each cycle edge in turn, solve the spanning
/// tree, keep the smallest answer. Quadratic; `n <= 10^4`.
pub fn solve_unicyclic_quadratic(g: &Graph, k: usize) -> Result<DominatingSet> {
    const LIMIT: usize = 10_000;
    if g.n() > LIMIT {
        return Err(Error::TooLarge {
            size: g.n(),
            limit: LIMIT,
        });
    }
    check(g, k)?;
    let cycle = order_cycle(g, &cycle_mask(g));
    let edges = g.edges();
    let mut best: Option<DominatingSet> = None;
    for (i, &a) in cycle.iter().enumerate() {
        let b = cycle[(i + 1) % cycle.len()];
        let cut = (a.min(b), a.max(b));
        let kept: Vec<_> = edges.iter().copied().filter(|&e| e != cut).collect();
        let d = solve_tree(&Graph::from_edges(g.n(), &kept), 0, k)?.dom;
        if best.as_ref().is_none_or(|b| d.len() < b.len()) {
            best = Some(d);
        }
    }
    Ok(best.expect("a cycle has edges"))
}

fn check_rho(g: &Graph, k: usize, rho: usize) -> Result<Ring> {
    check(g, k)?;
    let r = ring(g, k);
    if rho >= g.n() || r.pos[rho] == usize::MAX {
        return Err(Error::RhoNotOnCycle(rho));
    }
    Ok(r)
}

/// Nearest member of `members` to `rho` (lowest id on ties) and its distance.
fn nearest(g: &Graph, rho: usize, members: &[usize]) -> (usize, usize) {
    let dist = g.bfs_distances(&[rho]);
    members
        .iter()
        .map(|&v| (dist[v], v))
        .min()
        .map(|(d, v)| (v, d))
        .expect("a dominating set is nonempty")
}

fn anchored_from(g: &Graph, k: usize, rho: usize, r: &Ring) -> Anchored {
    let state = &r.state;
    let build = arc_buildout(state, k);
    let at = r.pos[rho];
    let mut members = state.tree_dom.clone();
    match build.instance() {
        Some(inst) => {
            let all: Vec<usize> = (0..build.positions).collect();
            let p = anchored_with_candidates(&inst, at, &all);
            lift(&state.cycle, &p.points, &mut members);
        }
        None if !build.full.is_empty() => members.push(rho),
        None => {}
    }
    let (v, d) = nearest(g, rho, &members);
    Anchored {
        dom: DominatingSet::new(members, k),
        delta: d,
        nearest: v,
    }
}

/// A minimum k-hop dominating set whose distance to the cycle vertex `rho`
/// is smallest among all minimum sets.
pub fn solve_unicyclic_anchored(g: &Graph, k: usize, rho: usize) -> Result<Anchored> {
    let r = check_rho(g, k, rho)?;
    Ok(anchored_from(g, k, rho, &r))
}

fn reduced_from(g: &Graph, k: usize, rho: usize, r: &Ring, anchored: &Anchored) -> Reduced {
    let state = &r.state;
    let build = arc_buildout(state, k);
    let len = build.positions;
    let at = r.pos[rho];
    let ring_dist = |j: usize| {
        let d = (j + len - at) % len;
        d.min(len - d)
    };
    let radius_of = |j: usize| {
        build
            .radius
            .iter()
            .find(|&&(p, _)| p == j)
            .map(|&(_, m)| m)
            .unwrap()
    };
    let full: Vec<(usize, usize)> = build
        .full
        .iter()
        .map(|&j| (ring_dist(j), radius_of(j)))
        .collect();
    // a whole-ring arc is settled from outside iff its root is within m - i of rho
    let extra = |i: usize| full.iter().any(|&(t, m)| t + i > m);

    let optimum = anchored.dom.len();
    let found = match build.instance() {
        Some(inst) => {
            let m_p = pierce_arcs(&inst).len();
            (m_p > 0)
                .then(|| reduced_in_range(&inst, at, 1..=k, m_p - 1, &extra))
                .flatten()
                .map(|(_, p)| {
                    let mut members = state.tree_dom.clone();
                    lift(&state.cycle, &p.points, &mut members);
                    members
                })
        }
        None if !full.is_empty() && (1..=k).rev().any(|i| !extra(i)) => {
            Some(state.tree_dom.clone())
        }
        None => None,
    };
    let members = match found {
        Some(m) => m,
        // with rho itself free, any minimum set through rho drops to m - 1
        None if anchored.delta == 0 => anchored
            .dom
            .members
            .iter()
            .copied()
            .filter(|&v| v != rho)
            .collect(),
        None => return Reduced::UseAnchored,
    };
    let dom = DominatingSet::new(members, k);
    debug_assert_eq!(dom.len() + 1, optimum);
    let members = &dom.members;

    let from_set = if members.is_empty() {
        vec![usize::MAX; g.n()]
    } else {
        g.bfs_distances(members)
    };
    let from_rho = g.bfs_distances(&[rho]);
    let (depth, farthest) = (0..g.n())
        .filter(|&v| from_set[v] > k)
        .map(|v| (from_rho[v], std::cmp::Reverse(v)))
        .max()
        .map(|(d, v)| (d, v.0))
        .expect("one vertex short of optimal leaves something uncovered");
    Reduced::Partial {
        dom,
        farthest,
        depth,
    }
}

/// Among sets one smaller than the optimum that dominate everything farther
/// than `k` from `rho`, one whose uncovered vertices stay closest to `rho`.
pub fn solve_unicyclic_reduced(g: &Graph, k: usize, rho: usize) -> Result<Reduced> {
    let r = check_rho(g, k, rho)?;
    let anchored = anchored_from(g, k, rho, &r);
    Ok(reduced_from(g, k, rho, &r, &anchored))
}

/// Both variants from a single ring computation.
pub(crate) fn anchored_and_reduced(g: &Graph, k: usize, rho: usize) -> Result<(Anchored, Reduced)> {
    let r = check_rho(g, k, rho)?;
    let anchored = anchored_from(g, k, rho, &r);
    let reduced = reduced_from(g, k, rho, &r, &anchored);
    Ok((anchored, reduced))
}

/// Vertices of `g` not within `k` of `members`.
pub fn uncovered(g: &Graph, members: &[usize], k: usize) -> Vec<usize> {
    if members.is_empty() {
        return (0..g.n()).collect();
    }
    let dist = g.bfs_distances(members);
    (0..g.n()).filter(|&v| dist[v] > k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::brute_force_khds;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn cycles_match_closed_form() {
        for n in 3..=40 {
            for k in 1..=4 {
                let d = solve_unicyclic(&cycle(n), k).unwrap();
                assert_eq!(d.len(), n.div_ceil(2 * k + 1), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn triangle_with_long_tail() {
        let k = 2;
        let mut edges = vec![(0, 1), (1, 2), (2, 0)];
        for i in 0..3 * k {
            edges.push((if i == 0 { 0 } else { 2 + i }, 3 + i));
        }
        let g = Graph::from_edges(3 + 3 * k, &edges);
        let d = solve_unicyclic(&g, k).unwrap();
        assert_eq!(d.len(), brute_force_khds(&g, k).unwrap().len());
        assert_eq!(d.len(), 2);
    }

    #[test]
    fn quadratic_small_cases() {
        assert_eq!(solve_unicyclic_quadratic(&cycle(3), 1).unwrap().len(), 1);
        assert_eq!(solve_unicyclic_quadratic(&cycle(7), 1).unwrap().len(), 3);
    }

    #[test]
    fn rejects_non_unicyclic() {
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(solve_unicyclic(&p, 1), Err(Error::NotUnicyclic));
        assert_eq!(solve_unicyclic(&cycle(4), 0), Err(Error::InvalidK(0)));
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]);
        assert_eq!(
            solve_unicyclic_anchored(&g, 1, 3),
            Err(Error::RhoNotOnCycle(3))
        );
    }

    #[test]
    fn anchored_on_even_cycle() {
        let k = 2;
        let g = cycle(4 * k + 2);
        let a = solve_unicyclic_anchored(&g, k, 0).unwrap();
        assert_eq!(a.dom.len(), 2);
        assert!(a.delta <= k);
        assert_eq!(a.delta, 0);
    }

    #[test]
    fn reduced_inside_one_ball() {
        let g = cycle(5);
        match solve_unicyclic_reduced(&g, 2, 0).unwrap() {
            Reduced::Partial { dom, depth, .. } => {
                assert!(dom.is_empty());
                assert_eq!(depth, 2);
            }
            Reduced::UseAnchored => panic!("the empty set leaves only the ball around rho"),
        }
    }
}
