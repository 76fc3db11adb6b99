//! Minimum k-hop dominating sets on cactus graphs.
//!
//! A DFS lists the cycles innermost first. Each cycle, with everything that
//! hangs below it, is a unicyclic piece `C+` attached to the rest of the
//! graph only at its top vertex `rho`. The piece is solved once with the
//! anchored and reduced variants and replaced by a short path at `rho` that
//! tells the rest of the graph what the piece still needs or offers:
//!
//! * if one vertex fewer than the piece's optimum leaves only vertices
//!   within `f` of `rho` uncovered, the piece becomes a path of length `f`;
//! * otherwise the piece keeps its member `u` nearest `rho`, the path runs
//!   from `rho` to `u`, and a pendant path of length `k` at `u` forces `u`
//!   back into the answer.
//!
//! Path vertices are fresh ids past the original range. A pick on the
//! stretch below `rho` is reported as `rho`, a pick on `u`'s stand-in or
//! its forcing tail as `u`.
//! The last cycle is left in place and the residue goes to the unicyclic
//! solver.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DominatingSet, Graph};
use crate::tree::solve_tree;
use crate::unicyclic::{anchored_and_reduced, solve_unicyclic, Reduced};

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Color {
    White,
    Gray,
    Black,
}

/// A cycle found by a back edge from `bottom` up to `rho`; `child` is the
/// cycle vertex right below `rho` on the tree path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRecord {
    pub rho: usize,
    pub child: usize,
    pub bottom: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DfsState {
    pub color: Vec<Color>,
    /// `usize::MAX` for the root.
    pub parent: Vec<usize>,
    pub back_edge: Vec<bool>,
    /// Vertices with a back edge into them, by finishing time.
    pub finish_list: Vec<usize>,
    /// Cycles grouped by top vertex in `finish_list` order, each group in
    /// discovery order.
    pub cycles: Vec<CycleRecord>,
}

/// Iterative DFS from `r` collecting back-edge targets by finishing time.
/// Fails with `NotCactus` as soon as a tree edge lies on two cycles.
pub fn dfs_based(g: &Graph, r: usize) -> Result<DfsState> {
    let n = g.n();
    if r >= n {
        return Err(Error::InvalidVertex(r));
    }
    let mut color = vec![Color::White; n];
    let mut parent = vec![NONE; n];
    let mut back_edge = vec![false; n];
    let mut depth = vec![0usize; n];
    let mut found = Vec::new();
    let mut finish_list = Vec::new();

    // the gray vertices root first: (vertex, next neighbor index, whether
    // the edge to its parent already lies on a cycle)
    let mut path: Vec<(usize, usize, bool)> = vec![(r, 0, false)];
    color[r] = Color::Gray;
    while let Some(&mut (u, ref mut next, _)) = path.last_mut() {
        if let Some(&v) = g.neighbors(u).get(*next) {
            *next += 1;
            match color[v] {
                Color::White => {
                    color[v] = Color::Gray;
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    path.push((v, 0, false));
                }
                Color::Gray if v != parent[u] => {
                    back_edge[v] = true;
                    for entry in &mut path[depth[v] + 1..] {
                        if entry.2 {
                            return Err(Error::NotCactus);
                        }
                        entry.2 = true;
                    }
                    found.push(CycleRecord {
                        rho: v,
                        child: path[depth[v] + 1].0,
                        bottom: u,
                    });
                }
                _ => {}
            }
            continue;
        }
        color[u] = Color::Black;
        if back_edge[u] {
            finish_list.push(u);
        }
        path.pop();
    }

    // group by top vertex in finishing order, keeping discovery order inside
    // a group; depth is no longer needed and holds the rank
    let mut start = vec![0usize; finish_list.len() + 1];
    for (i, &v) in finish_list.iter().enumerate() {
        depth[v] = i;
    }
    for c in &found {
        start[depth[c.rho] + 1] += 1;
    }
    for i in 1..start.len() {
        start[i] += start[i - 1];
    }
    let mut cycles = found.clone();
    for c in found {
        let slot = &mut start[depth[c.rho]];
        cycles[*slot] = c;
        *slot += 1;
    }
    Ok(DfsState {
        color,
        parent,
        back_edge,
        finish_list,
        cycles,
    })
}

/// How a processed piece is summarized for the rest of the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CycleOutcome {
    /// One vertex under the piece's optimum was kept; vertices up to
    /// `depth` from `rho` still need a dominator reaching in through `rho`.
    Uncovered { depth: usize },
    /// The full optimum was kept minus `keep`, the member nearest `rho` at
    /// distance `delta`, which the rewrite forces back in.
    Covered { delta: usize, keep: usize },
}

/// Solves one piece `C+` given as its own graph with top vertex `rho`.
/// Returns the members to keep and the summary for the rewrite, both in
/// the ids of `c_plus`.
pub fn solve_special_unicycle(
    c_plus: &Graph,
    rho: usize,
    k: usize,
) -> Result<(Vec<usize>, CycleOutcome)> {
    let (anchored, reduced) = anchored_and_reduced(c_plus, k, rho).map_err(|e| match e {
        Error::RhoNotOnCycle(_) | Error::NotUnicyclic => Error::NoBackEdge(rho),
        e => e,
    })?;
    Ok(match reduced {
        Reduced::Partial { dom, depth, .. } => (dom.members, CycleOutcome::Uncovered { depth }),
        Reduced::UseAnchored => {
            let keep = anchored.nearest;
            let rest = anchored
                .dom
                .members
                .into_iter()
                .filter(|&v| v != keep)
                .collect();
            (
                rest,
                CycleOutcome::Covered {
                    delta: anchored.delta,
                    keep,
                },
            )
        }
    })
}

/// Record of one rewrite, in working-graph ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewritePlan {
    pub rho: usize,
    /// Vertices of the piece other than `rho` taken out of the graph.
    pub removed: Vec<usize>,
    /// Fresh path from `rho` (excluded) down to its end; in the covered
    /// case the last entry stands for the kept member `u`.
    pub spine: Vec<usize>,
    /// Forcing tail below `u`; empty in the uncovered case.
    pub tail: Vec<usize>,
    pub outcome: CycleOutcome,
    /// Members kept from the piece.
    pub partial: Vec<usize>,
}

/// Original adjacency plus an arena of added edges, kept as per-vertex
/// linked lists so fresh vertices cost no allocation of their own.
struct Adjacency<'a> {
    g: &'a Graph,
    head: Vec<usize>,
    next: Vec<usize>,
    to: Vec<usize>,
}

impl Adjacency<'_> {
    fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let base: &[usize] = if u < self.g.n() {
            self.g.neighbors(u)
        } else {
            &[]
        };
        let mut e = self.head[u];
        base.iter().copied().chain(std::iter::from_fn(move || {
            (e != NONE).then(|| {
                let v = self.to[e];
                e = self.next[e];
                v
            })
        }))
    }

    fn add_half(&mut self, a: usize, b: usize) {
        self.next.push(self.head[a]);
        self.to.push(b);
        self.head[a] = self.to.len() - 1;
    }
}

/// The graph being rewritten: adjacency with lazy deletion plus fresh
/// vertices, each standing for an earlier vertex.
struct Working<'a> {
    n: usize,
    adj: Adjacency<'a>,
    alive: Vec<bool>,
    stands_for: Vec<usize>,
    local: Vec<usize>,
}

impl<'a> Working<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Working {
            n,
            adj: Adjacency {
                g,
                head: vec![NONE; n],
                next: Vec::new(),
                to: Vec::new(),
            },
            alive: vec![true; n],
            stands_for: Vec::new(),
            local: vec![NONE; n],
        }
    }

    fn len(&self) -> usize {
        self.alive.len()
    }

    fn fresh(&mut self, stands_for: usize) -> usize {
        let id = self.len();
        self.adj.head.push(NONE);
        self.alive.push(true);
        self.local.push(NONE);
        self.stands_for.push(stands_for);
        id
    }

    fn link(&mut self, a: usize, b: usize) {
        self.adj.add_half(a, b);
        self.adj.add_half(b, a);
    }

    /// `C+` as a standalone graph with `rho` as vertex 0: everything
    /// reachable from `child` without passing `rho`. Returns the graph and
    /// the working id of each local vertex.
    fn extract(&mut self, rho: usize, child: usize) -> (Graph, Vec<usize>) {
        let mut ids = vec![rho, child];
        self.local[rho] = 0;
        self.local[child] = 1;
        let mut i = 1;
        while i < ids.len() {
            let u = ids[i];
            i += 1;
            for v in self.adj.neighbors(u) {
                if self.alive[v] && self.local[v] == NONE {
                    self.local[v] = ids.len();
                    ids.push(v);
                }
            }
        }
        let mut edges = Vec::new();
        for (lx, &x) in ids.iter().enumerate().skip(1) {
            for y in self.adj.neighbors(x) {
                if self.alive[y] {
                    let ly = self.local[y];
                    if ly == 0 || ly > lx {
                        edges.push((lx, ly));
                    }
                }
            }
        }
        for &v in &ids {
            self.local[v] = NONE;
        }
        (Graph::from_edges(ids.len(), &edges), ids)
    }

    /// Replaces the piece `ids` (with `rho` first) per `outcome`, given in
    /// local ids.
    fn rewrite(
        &mut self,
        k: usize,
        ids: &[usize],
        partial: Vec<usize>,
        outcome: CycleOutcome,
        log: Option<&mut Vec<RewritePlan>>,
    ) {
        let rho = ids[0];
        let (keep, outcome) = match outcome {
            CycleOutcome::Covered { keep, delta } => (
                ids[keep],
                CycleOutcome::Covered {
                    delta,
                    keep: ids[keep],
                },
            ),
            o => (NONE, o),
        };
        for &v in &ids[1..] {
            self.alive[v] = false;
        }
        let first = self.len();
        let mut spine_end = first;
        let mut last = rho;
        let mut chain = |w: &mut Self, stands_for: usize| {
            let s = w.fresh(stands_for);
            w.link(last, s);
            last = s;
        };
        match outcome {
            CycleOutcome::Uncovered { depth } => {
                for _ in 0..depth {
                    chain(self, rho);
                }
                spine_end = self.len();
            }
            CycleOutcome::Covered { delta, .. } => {
                if keep != rho {
                    for _ in 1..delta {
                        chain(self, rho);
                    }
                    chain(self, keep);
                    spine_end = self.len();
                }
                for _ in 0..k {
                    chain(self, keep);
                }
            }
        }
        if let Some(log) = log {
            log.push(RewritePlan {
                rho,
                removed: ids[1..].to_vec(),
                spine: (first..spine_end).collect(),
                tail: (spine_end..self.len()).collect(),
                outcome,
                partial,
            });
        }
    }

    /// Alive vertices as a compact graph, with the working id of each.
    fn residue(&self) -> (Graph, Vec<usize>) {
        let mut local = vec![NONE; self.len()];
        let ids: Vec<usize> = (0..self.len()).filter(|&v| self.alive[v]).collect();
        for (i, &v) in ids.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::with_capacity(ids.len());
        for &u in &ids {
            for v in self.adj.neighbors(u) {
                if self.alive[v] && u < v {
                    edges.push((local[u], local[v]));
                }
            }
        }
        (Graph::from_edges(ids.len(), &edges), ids)
    }

    /// Original vertex a working id is reported as.
    fn resolve(&self, mut v: usize) -> usize {
        while v >= self.n {
            v = self.stands_for[v - self.n];
        }
        v
    }
}

fn solve(g: &Graph, k: usize, mut log: Option<&mut Vec<RewritePlan>>) -> Result<DominatingSet> {
    if k == 0 {
        return Err(Error::InvalidK(k));
    }
    let dfs = dfs_based(g, 0)?;
    let mut w = Working::new(g);
    let mut answer = Vec::new();
    let todo = dfs.cycles.len().saturating_sub(1);
    for c in &dfs.cycles[..todo] {
        let (piece, ids) = w.extract(c.rho, c.child);
        let (partial, outcome) = solve_special_unicycle(&piece, 0, k)?;
        let partial: Vec<usize> = partial.into_iter().map(|v| ids[v]).collect();
        answer.extend_from_slice(&partial);
        w.rewrite(k, &ids, partial, outcome, log.as_deref_mut());
    }

    let (rest, ids) = w.residue();
    let tail = match rest.m() + 1 == rest.n() {
        true => solve_tree(&rest, 0, k)?.dom,
        false => solve_unicyclic(&rest, k)?,
    };
    answer.extend(tail.members.iter().map(|&v| ids[v]));
    let members = answer.into_iter().map(|v| w.resolve(v)).collect();
    Ok(DominatingSet::new(members, k))
}

/// A minimum k-hop dominating set of a cactus, with the rewrite log.
pub fn solve_cactus_traced(g: &Graph, k: usize) -> Result<(DominatingSet, Vec<RewritePlan>)> {
    let mut plans = Vec::new();
    let d = solve(g, k, Some(&mut plans))?;
    Ok((d, plans))
}

/// A minimum k-hop dominating set of a cactus in linear time.
pub fn solve_cactus(g: &Graph, k: usize) -> Result<DominatingSet> {
    solve(g, k, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::brute_force_khds;

    #[test]
    fn dfs_on_tree_finds_nothing() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]);
        let s = dfs_based(&g, 0).unwrap();
        assert!(s.finish_list.is_empty());
        assert!(s.color.iter().all(|&c| c == Color::Black));
    }

    #[test]
    fn dfs_single_cycle_lists_entry_vertex() {
        // 0 - 1, cycle 1 2 3 4
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 1)]);
        let s = dfs_based(&g, 0).unwrap();
        assert_eq!(s.finish_list, vec![1]);
        assert_eq!(s.cycles.len(), 1);
        assert_eq!(s.cycles[0].rho, 1);
    }

    #[test]
    fn dfs_inner_cycle_first() {
        // outer cycle 0 1 2 3, inner triangle 2 4 5 hanging at 2
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (5, 2)]);
        let s = dfs_based(&g, 0).unwrap();
        assert_eq!(s.finish_list, vec![2, 0]);
        assert_eq!(s.cycles.len(), 2);
    }

    #[test]
    fn triangle_piece_within_reach() {
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        let (partial, outcome) = solve_special_unicycle(&tri, 0, 1).unwrap();
        assert!(partial.is_empty());
        assert_eq!(outcome, CycleOutcome::Uncovered { depth: 1 });
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(
            solve_special_unicycle(&path, 0, 1),
            Err(Error::NoBackEdge(0))
        );
    }

    #[test]
    fn bowtie_and_chain() {
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
        assert_eq!(solve_cactus(&bowtie, 1).unwrap().members, vec![0]);
        // four triangles in a row sharing cut vertices
        let mut edges = Vec::new();
        for t in 0..4 {
            let a = 2 * t;
            edges.extend([(a, a + 1), (a + 1, a + 2), (a + 2, a)]);
        }
        let g = Graph::from_edges(9, &edges);
        for k in 1..=3 {
            let d = solve_cactus(&g, k).unwrap();
            assert_eq!(d.len(), brute_force_khds(&g, k).unwrap().len());
        }
    }

    #[test]
    fn rejects_other() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(solve_cactus(&k4, 1), Err(Error::NotCactus));
    }
}
