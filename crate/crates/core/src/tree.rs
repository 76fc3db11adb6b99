//! Minimum k-hop dominating sets on trees.
//!
//! The solver roots the tree, computes subtree heights, and then walks the
//! vertices whose subtree is at least `k` deep bottom-up. A vertex whose
//! residual subtree is exactly `k` deep joins the set; a subtree that is
//! already within reach of a chosen descendant is dropped by marking its
//! height `-1`. The root is added at the end only when nothing reaches it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{classify, DominatingSet, Graph, GraphClass};

pub(crate) const INF: usize = usize::MAX;
const NONE: usize = usize::MAX;

/// Per-vertex state of a rooted tree. Before solving, `height` holds the
/// subtree heights; after solving it holds the residual heights, with `-1`
/// marking subtrees that were dropped as dominated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTreeState {
    pub root: usize,
    /// `usize::MAX` for the root.
    pub parent: Vec<usize>,
    pub children: Vec<Vec<usize>>,
    pub height: Vec<isize>,
    /// Distance to the set as tracked by the solver; `None` is infinity.
    pub delta: Vec<Option<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeSolveResult {
    pub dom: DominatingSet,
    /// Distance from the root to the set as left by the solver, `None`
    /// when the root had to be added at the very end.
    pub root_delta: Option<usize>,
    pub root_height: isize,
    /// The root was added only because nothing else reached it.
    pub root_added_late: bool,
}

/// What the solver reports about the root of one tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct RootOutcome {
    /// `INF` when late.
    pub delta: usize,
    pub height: isize,
    pub late: bool,
}

/// Scratch arrays reused across many trees of one host graph, so solving
/// all pendant trees of a unicyclic graph stays linear overall.
pub(crate) struct TreeWorkspace {
    parent: Vec<usize>,
    height: Vec<isize>,
    delta: Vec<usize>,
    order: Vec<usize>,
    stack: Vec<usize>,
}

impl TreeWorkspace {
    pub fn new(n: usize) -> Self {
        TreeWorkspace {
            parent: vec![NONE; n],
            height: vec![0; n],
            delta: vec![INF; n],
            order: Vec::new(),
            stack: Vec::new(),
        }
    }

    /// Roots the tree at `root`, never stepping onto a vertex for which
    /// `blocked` holds, and fills `order` (preorder), `parent` and `height`.
    fn root_at(&mut self, g: &Graph, root: usize, blocked: &dyn Fn(usize) -> bool) {
        self.order.clear();
        self.stack.clear();
        self.parent[root] = NONE;
        self.stack.push(root);
        while let Some(u) = self.stack.pop() {
            self.order.push(u);
            self.height[u] = 0;
            self.delta[u] = INF;
            let p = self.parent[u];
            for &v in g.neighbors(u) {
                if v != p && !blocked(v) {
                    self.parent[v] = u;
                    self.stack.push(v);
                }
            }
        }
        for &u in self.order.iter().skip(1).rev() {
            let p = self.parent[u];
            self.height[p] = self.height[p].max(self.height[u] + 1);
        }
    }

    /// Runs the solver on the tree of `root`, appending chosen vertices to `dom`.
    pub fn solve(
        &mut self,
        g: &Graph,
        root: usize,
        k: usize,
        blocked: &dyn Fn(usize) -> bool,
        dom: &mut Vec<usize>,
    ) -> RootOutcome {
        self.root_at(g, root, blocked);
        let k_i = k as isize;
        let order = std::mem::take(&mut self.order);
        for &u in order.iter().rev() {
            // only subtrees at least k deep are ever entered; the root always is
            if self.height[u] < k_i && u != root {
                continue;
            }
            self.visit(g, u, k, blocked, dom);
        }
        self.order = order;

        let late = self.delta[root] == INF;
        if late {
            dom.push(root);
        }
        RootOutcome {
            delta: self.delta[root],
            height: self.height[root],
            late,
        }
    }

    fn visit(
        &mut self,
        g: &Graph,
        u: usize,
        k: usize,
        blocked: &dyn Fn(usize) -> bool,
        dom: &mut Vec<usize>,
    ) {
        let k_i = k as isize;
        if self.height[u] == k_i {
            dom.push(u);
            self.height[u] = -1;
            self.delta[u] = 0;
            return;
        }
        let p = self.parent[u];
        let mut d = INF;
        let mut h: isize = 0;
        for &v in g.neighbors(u) {
            if v == p || blocked(v) {
                continue;
            }
            d = d.min(self.delta[v].saturating_add(1));
            h = h.max(self.height[v] + 1);
        }
        self.delta[u] = d;
        if d != INF && h + d as isize <= k_i {
            self.height[u] = -1;
        } else if h == k_i {
            dom.push(u);
            self.height[u] = -1;
            self.delta[u] = 0;
        } else {
            self.height[u] = h;
            self.delta[u] = INF;
        }
    }

    fn snapshot(&self, g: &Graph, root: usize) -> RootedTreeState {
        let n = g.n();
        let mut children = vec![Vec::new(); n];
        for &u in &self.order[1..] {
            children[self.parent[u]].push(u);
        }
        for c in children.iter_mut() {
            c.reverse();
        }
        RootedTreeState {
            root,
            parent: self.parent.clone(),
            children,
            height: self.height.clone(),
            delta: self
                .delta
                .iter()
                .map(|&d| (d != INF).then_some(d))
                .collect(),
        }
    }
}

fn check_tree(g: &Graph, root: usize, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidK(k));
    }
    if root >= g.n() {
        return Err(Error::InvalidVertex(root));
    }
    if classify(g) != GraphClass::Tree {
        return Err(Error::NotATree);
    }
    Ok(())
}

/// Rooted form of a tree with its initial subtree heights.
pub fn rooted_state(g: &Graph, root: usize) -> Result<RootedTreeState> {
    check_tree(g, root, 1)?;
    let mut ws = TreeWorkspace::new(g.n());
    ws.root_at(g, root, &|_| false);
    Ok(ws.snapshot(g, root))
}

/// Minimum k-hop dominating set of a tree rooted at `root`. Among minimum
/// sets the result keeps its vertices as close to the root as possible.
pub fn solve_tree(g: &Graph, root: usize, k: usize) -> Result<TreeSolveResult> {
    check_tree(g, root, k)?;
    let mut ws = TreeWorkspace::new(g.n());
    Ok(run(&mut ws, g, root, k))
}

fn run(ws: &mut TreeWorkspace, g: &Graph, root: usize, k: usize) -> TreeSolveResult {
    let mut dom = Vec::new();
    let out = ws.solve(g, root, k, &|_| false, &mut dom);
    TreeSolveResult {
        dom: DominatingSet::new(dom, k),
        root_delta: (out.delta != INF).then_some(out.delta),
        root_height: out.height,
        root_added_late: out.late,
    }
}

/// Like [`solve_tree`], also returning the solver's terminal per-vertex state.
pub fn solve_tree_state(
    g: &Graph,
    root: usize,
    k: usize,
) -> Result<(TreeSolveResult, RootedTreeState)> {
    check_tree(g, root, k)?;
    let mut ws = TreeWorkspace::new(g.n());
    let result = run(&mut ws, g, root, k);
    Ok((result, ws.snapshot(g, root)))
}

/// Smallest subset of `allowed` whose k-neighborhoods cover `demand`, by
/// exhaustive search in increasing size. Test support; `n <= 20`.
pub fn partial_domination_number(
    g: &Graph,
    k: usize,
    allowed: &[usize],
    demand: &[usize],
) -> Result<usize> {
    const LIMIT: usize = 20;
    if g.n() > LIMIT {
        return Err(Error::TooLarge {
            size: g.n(),
            limit: LIMIT,
        });
    }
    if demand.is_empty() {
        return Ok(0);
    }
    let demand_mask: u32 = demand.iter().fold(0, |m, &v| m | 1 << v);
    let reach: Vec<u32> = allowed
        .iter()
        .map(|&u| {
            g.bfs_distances(&[u])
                .iter()
                .enumerate()
                .filter(|&(_, &d)| d <= k)
                .fold(0u32, |m, (v, _)| m | 1 << v)
                & demand_mask
        })
        .collect();
    let a = allowed.len();
    for size in 1..=a {
        let mut found = false;
        crate::oracles::for_each_combination(a, size, |combo| {
            let cover = combo.iter().fold(0u32, |m, &i| m | reach[i]);
            if cover == demand_mask {
                found = true;
            }
            found
        });
        if found {
            return Ok(size);
        }
    }
    // demand vertices outside every allowed neighborhood
    Ok(usize::MAX)
}
